//! Affine modifications `A[I/f]` of presented algebras.

use std::sync::Arc;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::ideal::{
    gradient_generic_independence, is_regular_sequence, is_semiregular_sequence, Ideal,
    PresentedAlgebra,
};
use crate::poly::{Polynomial, Ring};

/// Whether a Davis presentation is known to present `A[I/f]` exactly.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum PresentationStatus {
    RegularSequenceCertified,
    Unverified,
}

/// A locus `(I, f)` over a base algebra together with its generator sequence
/// `b_0 = f, b_1, ..., b_s`.
#[derive(Clone, Debug)]
pub struct ModificationLocus {
    base: PresentedAlgebra,
    ideal: Ideal,
    f: Polynomial,
    sequence: Vec<Polynomial>,
}

impl ModificationLocus {
    /// The sequence is `f` followed by the generators of `ideal` that do not
    /// already lie in `(f)` modulo the base relations.
    pub fn new(base: &PresentedAlgebra, ideal: &Ideal, f: &Polynomial) -> Result<Self> {
        let principal = base.ideal().with_generators(std::slice::from_ref(f));
        let mut seq = vec![f.clone()];
        for g in ideal.generators() {
            if !principal.contains(g)? {
                seq.push(g.clone());
            }
        }
        Self::with_sequence(base, ideal, seq)
    }

    /// Uses `sequence` verbatim; `sequence[0]` is the modulus `f`.
    pub fn with_sequence(
        base: &PresentedAlgebra,
        ideal: &Ideal,
        sequence: Vec<Polynomial>,
    ) -> Result<Self> {
        let f = sequence
            .first()
            .cloned()
            .ok_or_else(|| Error::precondition("empty generator sequence"))?;
        if base.is_zero(&f)? {
            return Err(Error::ZeroPolynomial("modification modulus"));
        }
        let full = base.ideal().sum(ideal);
        for (i, b) in sequence.iter().enumerate() {
            if !full.contains(b)? {
                return Err(Error::precondition(if i == 0 {
                    format!("the modulus {f} must belong to the locus ideal (normalize by adding f to I)")
                } else {
                    format!("sequence element {b} is not in the locus ideal")
                }));
            }
        }
        if !base
            .ideal()
            .with_generators(&sequence)
            .contains_ideal(ideal)?
        {
            return Err(Error::precondition(
                "the sequence does not generate the locus ideal",
            ));
        }
        Ok(ModificationLocus {
            base: base.clone(),
            ideal: ideal.clone(),
            f,
            sequence,
        })
    }

    pub fn base(&self) -> &PresentedAlgebra {
        &self.base
    }

    pub fn ideal(&self) -> &Ideal {
        &self.ideal
    }

    pub fn modulus(&self) -> &Polynomial {
        &self.f
    }

    pub fn sequence(&self) -> &[Polynomial] {
        &self.sequence
    }
}

/// The algebra presented by relations `f*y_i - b_i` over the base.
#[derive(Clone, Debug)]
pub struct DavisPresentation {
    algebra: PresentedAlgebra,
    base_ring: Arc<Ring>,
    new_vars: Vec<String>,
    relations: Vec<Polynomial>,
    status: PresentationStatus,
    warnings: Vec<String>,
}

impl DavisPresentation {
    pub fn algebra(&self) -> &PresentedAlgebra {
        &self.algebra
    }

    pub fn base_ring(&self) -> &Arc<Ring> {
        &self.base_ring
    }

    pub fn new_vars(&self) -> &[String] {
        &self.new_vars
    }

    /// The relations `f*y_i - b_i`, without the base relations.
    pub fn relations(&self) -> &[Polynomial] {
        &self.relations
    }

    pub fn status(&self) -> PresentationStatus {
        self.status
    }

    pub fn warnings(&self) -> &[String] {
        &self.warnings
    }
}

/// Davis presentation of `A[I/f]`; `names` chooses the new variables,
/// otherwise fresh names `y1, y2, ...` are used.
pub fn davis_presentation(
    loc: &ModificationLocus,
    names: Option<&[String]>,
) -> Result<DavisPresentation> {
    let base_ring = loc.base.ring().clone();
    let s = loc.sequence.len() - 1;
    let new_vars: Vec<String> = match names {
        Some(n) if n.len() == s => n.to_vec(),
        Some(n) => {
            return Err(Error::SizeMismatch {
                expected: s,
                got: n.len(),
            })
        }
        None => {
            let mut out: Vec<String> = Vec::new();
            let mut i = 1;
            while out.len() < s {
                let cand = format!("y{i}");
                if base_ring.index_of(&cand).is_none() {
                    out.push(cand);
                }
                i += 1;
            }
            out
        }
    };
    let ring = base_ring.extend(&new_vars)?;
    let f = loc.f.embed(&ring)?;
    let mut relations = Vec::with_capacity(s);
    for (name, b) in new_vars.iter().zip(&loc.sequence[1..]) {
        let y = Polynomial::var(&ring, name)?;
        relations.push(&(&f * &y) - &b.embed(&ring)?);
    }
    let mut gens: Vec<Polynomial> = loc
        .base
        .relations()
        .iter()
        .map(|r| r.embed(&ring))
        .collect::<Result<_>>()?;
    gens.extend(relations.iter().cloned());
    let ideal = Ideal::new(&ring, gens).with_budget(loc.base.ideal().budget());
    let mut warnings = Vec::new();
    let status = if is_regular_sequence(&loc.sequence, &loc.base)? {
        PresentationStatus::RegularSequenceCertified
    } else {
        warnings.push(
            "generator sequence is not regular; the relation ideal may not be prime and the presentation is unverified"
                .to_string(),
        );
        PresentationStatus::Unverified
    };
    Ok(DavisPresentation {
        algebra: PresentedAlgebra::new(ideal)?,
        base_ring,
        new_vars,
        relations,
        status,
        warnings,
    })
}

/// Ideals attached to a modification.
#[derive(Clone, Debug)]
pub struct ModificationIdeals {
    /// In the extended ring, including the Davis relations.
    pub exceptional: Ideal,
    pub divisor: Ideal,
    pub center: Ideal,
    /// Closure of the image of the exceptional divisor, in the base ring.
    pub geometric_center_closure: Ideal,
}

/// `reduced_modulus` optionally supplies `g` with `f = g^n`, in which case the
/// exceptional divisor is cut by `g` rather than `f`.
pub fn modification_ideals(
    loc: &ModificationLocus,
    pres: &DavisPresentation,
    reduced_modulus: Option<&Polynomial>,
) -> Result<ModificationIdeals> {
    let ring = pres.algebra.ring().clone();
    let cut = match reduced_modulus {
        Some(g) => {
            if !is_power_of(&loc.f, g)? {
                return Err(Error::precondition(format!(
                    "{} is not a power of {g}",
                    loc.f
                )));
            }
            g.clone()
        }
        None => loc.f.clone(),
    };
    let exceptional = pres.algebra.ideal().with_generators(&[cut.embed(&ring)?]);
    let divisor = loc
        .base
        .ideal()
        .with_generators(&[loc.f.squarefree_part()?]);
    let center = loc.base.ideal().sum(&loc.ideal);
    let geometric_center_closure = exceptional.eliminate_into(loc.base.ring())?;
    Ok(ModificationIdeals {
        exceptional,
        divisor,
        center,
        geometric_center_closure,
    })
}

fn is_power_of(f: &Polynomial, g: &Polynomial) -> Result<bool> {
    if g.is_constant() {
        return Ok(false);
    }
    let mut rest = f.clone();
    loop {
        if let Some(r) = rest.scalar_ratio(g) {
            return Ok(r == crate::poly::rat(1));
        }
        match rest.exact_div(g)? {
            Some(q) if !q.is_constant() => rest = q,
            _ => return Ok(false),
        }
    }
}

/// Result of the largest-ideal chain `K_m = (I^m : f^{m-1})`.
#[derive(Clone, Debug)]
pub struct LargestIdeal {
    pub ideal: Ideal,
    /// `Some(m)` when `K_m = K_{m+1} = K_{m+2}`; `None` when the cap was hit,
    /// in which case `ideal` is only a lower bound.
    pub stabilized_at: Option<usize>,
    pub chain: Vec<Ideal>,
}

pub fn largest_ideal(loc: &ModificationLocus, cap: usize) -> Result<LargestIdeal> {
    if cap == 0 {
        return Err(Error::precondition("chain cap must be positive"));
    }
    let rel = loc.base.ideal();
    let i = rel.sum(&loc.ideal);
    let term = |m: usize| -> Result<Ideal> {
        let pow = rel.sum(&i.power(m as u32)?);
        if m == 1 {
            return Ok(pow);
        }
        let k = pow.colon(&loc.f.pow(m as u32 - 1))?;
        Ok(rel.sum(&k))
    };
    let mut chain = vec![term(1)?];
    let mut equal_run = 0;
    for m in 2..=cap + 2 {
        let next = term(m)?;
        let same = next.equals(chain.last().unwrap())?;
        chain.push(next);
        if same {
            equal_run += 1;
            if equal_run == 2 {
                let at = m - 2;
                let ideal = chain[at - 1].clone();
                chain.truncate(at);
                return Ok(LargestIdeal {
                    ideal,
                    stabilized_at: Some(at),
                    chain,
                });
            }
        } else {
            equal_run = 0;
        }
        if m >= cap && equal_run == 0 {
            break;
        }
    }
    chain.truncate(cap.min(chain.len()));
    Ok(LargestIdeal {
        ideal: chain.last().unwrap().clone(),
        stabilized_at: None,
        chain,
    })
}

/// The two steps `A -> A1 = A[I1/f1] -> A1[I2/f2]` for `f = f1 * f2`.
#[derive(Clone, Debug)]
pub struct CompositionSplit {
    pub first: ModificationLocus,
    pub first_presentation: DavisPresentation,
    pub second: ModificationLocus,
    pub second_presentation: DavisPresentation,
    pub direct: DavisPresentation,
    /// Both presentations map into each other compatibly.
    pub isomorphic: bool,
}

pub fn compose_split(
    loc: &ModificationLocus,
    f1: &Polynomial,
    f2: &Polynomial,
) -> Result<CompositionSplit> {
    let base = &loc.base;
    if !base.is_zero(&(&(f1 * f2) - &loc.f))? {
        return Err(Error::precondition(format!(
            "{} is not the product of {f1} and {f2}",
            loc.f
        )));
    }
    let direct = davis_presentation(loc, None)?;
    let b: Vec<Polynomial> = loc.sequence[1..].to_vec();
    let taken: Vec<String> = direct.new_vars.clone();
    let mut ring_names: Vec<String> = base.ring().names().to_vec();
    ring_names.extend(taken.iter().cloned());
    let pick = |names: &mut Vec<String>, stem: &str| -> String {
        let probe = Ring::new(names).expect("valid names");
        let n = probe.fresh_name(stem);
        names.push(n.clone());
        n
    };

    // First step: (I + (f1), f1); b_i in (f1) stay polynomial.
    let rel1 = base.ideal().with_generators(std::slice::from_ref(f1));
    let mut seq1 = vec![f1.clone()];
    let mut first_names = Vec::new();
    // For each b_i: Ok(index into first-step variables) or Err(polynomial b_i/f1).
    let mut over_f1: Vec<std::result::Result<usize, Polynomial>> = Vec::new();
    for bi in &b {
        if rel1.contains(bi)? {
            let q = bi
                .exact_div(f1)?
                .ok_or_else(|| Error::precondition(format!("{f1} does not divide {bi}")))?;
            over_f1.push(Err(q));
        } else {
            over_f1.push(Ok(seq1.len() - 1));
            seq1.push(bi.clone());
            first_names.push(pick(&mut ring_names, "a"));
        }
    }
    let i1 = base.ideal().derive(seq1.clone());
    let first = ModificationLocus::with_sequence(base, &i1, seq1)?;
    let first_presentation = davis_presentation(&first, Some(&first_names))?;
    let a1 = first_presentation.algebra.clone();
    let r1 = a1.ring().clone();

    // Second step over A1: (f2, b_i / f1), modulus f2.
    let f2e = f2.embed(&r1)?;
    let mut seq2 = vec![f2e.clone()];
    for entry in &over_f1 {
        seq2.push(match entry {
            Ok(j) => Polynomial::var(&r1, &first_names[*j])?,
            Err(q) => q.embed(&r1)?,
        });
    }
    let second_names: Vec<String> = (0..b.len()).map(|_| pick(&mut ring_names, "w")).collect();
    let i2 = a1.ideal().derive(seq2.clone());
    let second = ModificationLocus::with_sequence(&a1, &i2, seq2)?;
    let second_presentation = davis_presentation(&second, Some(&second_names))?;

    // Compare: direct t_i <-> w_i, and first-step a_j = f2 * t_i.
    let composite = second_presentation.algebra.clone();
    let rc = composite.ring().clone();
    let rd = direct.algebra.ring().clone();
    let mut to_direct: Vec<Polynomial> = Vec::with_capacity(rc.nvars());
    for name in rc.names() {
        let image = if let Some(pos) = second_names.iter().position(|n| n == name) {
            Polynomial::var(&rd, &taken[pos])?
        } else if let Some(j) = first_names.iter().position(|n| n == name) {
            let pos = over_f1
                .iter()
                .position(|e| matches!(e, Ok(k) if *k == j))
                .expect("first-step variable comes from a generator");
            &f2.embed(&rd)? * &Polynomial::var(&rd, &taken[pos])?
        } else {
            Polynomial::var(&rd, name)?
        };
        to_direct.push(image);
    }
    let mut to_composite: Vec<Polynomial> = Vec::with_capacity(rd.nvars());
    for name in rd.names() {
        let image = if let Some(pos) = taken.iter().position(|n| n == name) {
            Polynomial::var(&rc, &second_names[pos])?
        } else {
            Polynomial::var(&rc, name)?
        };
        to_composite.push(image);
    }
    let forward = maps_into(composite.relations(), &to_direct, direct.algebra.ideal())?;
    let backward = maps_into(direct.algebra.relations(), &to_composite, composite.ideal())?;
    // Round trip on composite variables must be the identity modulo relations.
    let mut round_trip = true;
    for (i, image) in to_direct.iter().enumerate() {
        let back = substitute_all(image, &to_composite, &rc)?;
        let diff = &back - &Polynomial::var_index(&rc, i);
        if !composite.is_zero(&diff)? {
            round_trip = false;
            break;
        }
    }
    Ok(CompositionSplit {
        first,
        first_presentation,
        second,
        second_presentation,
        direct,
        isomorphic: forward && backward && round_trip,
    })
}

/// Applies the ring map sending variable `i` to `images[i]`.
pub fn substitute_all(
    p: &Polynomial,
    images: &[Polynomial],
    target: &Arc<Ring>,
) -> Result<Polynomial> {
    if images.len() != p.ring().nvars() {
        return Err(Error::SizeMismatch {
            expected: p.ring().nvars(),
            got: images.len(),
        });
    }
    let mut out = Polynomial::zero(target);
    for (m, c) in p.terms() {
        let mut term = Polynomial::constant(target, c.clone());
        for i in m.support() {
            term = &term * &images[i].pow(m.exponent(i));
        }
        out = &out + &term;
    }
    Ok(out)
}

fn maps_into(rels: &[Polynomial], images: &[Polynomial], target: &Ideal) -> Result<bool> {
    for r in rels {
        if !target.contains(&substitute_all(r, images, target.ring())?)? {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Concatenated Davis presentation for loci whose moduli have pairwise no
/// common zeros; each locus contributes its own fresh variables.
pub fn fiber_product_presentation(
    locs: &[ModificationLocus],
    names: Option<&[Vec<String>]>,
) -> Result<PresentedAlgebra> {
    let first = locs
        .first()
        .ok_or_else(|| Error::precondition("no loci given"))?;
    let base = first.base.clone();
    for l in locs {
        if !crate::poly::same_ring(l.base.ring(), base.ring())
            || !l.base.ideal().equals(base.ideal())?
        {
            return Err(Error::precondition("loci have different base algebras"));
        }
    }
    for j in 0..locs.len() {
        for l in j + 1..locs.len() {
            let both = base
                .ideal()
                .with_generators(&[locs[j].f.clone(), locs[l].f.clone()]);
            if !both.is_unit()? {
                return Err(Error::precondition(format!(
                    "moduli of loci {} and {} ({} and {}) have common zeros",
                    j + 1,
                    l + 1,
                    locs[j].f,
                    locs[l].f
                )));
            }
        }
    }
    let mut all_names: Vec<String> = base.ring().names().to_vec();
    let mut blocks: Vec<(Vec<String>, &ModificationLocus)> = Vec::new();
    for (idx, l) in locs.iter().enumerate() {
        let s = l.sequence.len() - 1;
        let fixed: Vec<String> = match names {
            Some(n) => n
                .get(idx)
                .cloned()
                .ok_or_else(|| Error::precondition("missing variable names for a locus"))?,
            None => (0..s)
                .map(|k| {
                    let probe = Ring::new(&all_names).expect("valid names");
                    let name = probe.fresh_name(&format!("y{}_{}", idx + 1, k + 1));
                    all_names.push(name.clone());
                    name
                })
                .collect(),
        };
        if fixed.len() != s {
            return Err(Error::SizeMismatch {
                expected: s,
                got: fixed.len(),
            });
        }
        if names.is_some() {
            all_names.extend(fixed.iter().cloned());
        }
        blocks.push((fixed, l));
    }
    let ring = Ring::new(&all_names)?;
    let mut gens: Vec<Polynomial> = base
        .relations()
        .iter()
        .map(|r| r.embed(&ring))
        .collect::<Result<_>>()?;
    for (vars, l) in blocks {
        let f = l.f.embed(&ring)?;
        for (v, b) in vars.iter().zip(&l.sequence[1..]) {
            gens.push(&(&f * &Polynomial::var(&ring, v)?) - &b.embed(&ring)?);
        }
    }
    PresentedAlgebra::new(Ideal::new(&ring, gens).with_budget(base.ideal().budget()))
}

/// One basic modification step and the locus left over for the rest.
#[derive(Clone, Debug)]
pub struct BasicStep {
    pub next: DavisPresentation,
    /// Locus `(K_1, g^{n-1})` over the new algebra, with
    /// `K_1 = (g^{n-1}, b_1/g, ..., b_s/g)`.
    pub transferred: ModificationLocus,
}

/// `target` is the generator list `b_1, ..., b_s` of the full locus with
/// modulus `g^n`; when absent, the products of `n` center generators are used.
pub fn basic_step(
    current: &PresentedAlgebra,
    g: &Polynomial,
    center_gens: &[Polynomial],
    n: u32,
    target: Option<&[Polynomial]>,
    names: Option<&[String]>,
) -> Result<BasicStep> {
    if n == 0 {
        return Err(Error::precondition("exponent n must be positive"));
    }
    match center_gens.first() {
        Some(b0) if b0.scalar_ratio(g).is_some() => {}
        _ => return Err(Error::precondition("center generators must begin with g")),
    }
    if !is_semiregular_sequence(center_gens, current)? {
        return Err(Error::precondition(
            "basic step: center generators are not a semi-regular sequence",
        ));
    }
    if !gradient_generic_independence(center_gens, current)? {
        return Err(Error::precondition(
            "basic step: gradients of the center generators are not generically independent",
        ));
    }
    let center = current.ideal().derive(center_gens.to_vec());
    let mut seq = vec![g.clone()];
    seq.extend(center_gens[1..].iter().cloned());
    let loc = ModificationLocus::with_sequence(current, &center, seq)?;
    let next = davis_presentation(&loc, names)?;

    let b: Vec<Polynomial> = match target {
        Some(t) => t.to_vec(),
        None => center
            .power(n)?
            .generators()
            .iter()
            .filter(|p| p.scalar_ratio(&g.pow(n)).is_none())
            .cloned()
            .collect(),
    };
    let ring = next.algebra.ring().clone();
    let ys: Vec<Polynomial> = next
        .new_vars
        .iter()
        .map(|v| Polynomial::var(&ring, v))
        .collect::<Result<_>>()?;
    let with_rel = current.ideal().with_generators(center_gens);
    let mut k1 = vec![g.pow(n - 1).embed(&ring)?];
    for bi in &b {
        // bi = c_0 g + Σ c_j b_j + (relations), so bi/g = c_0 + Σ c_j y_j.
        let cof = with_rel
            .lift(bi)?
            .ok_or_else(|| Error::precondition(format!("{bi} does not vanish on the center")))?;
        // Cofactors of the base relations vanish in the algebra.
        let nrel = current.relations().len();
        let mut q = cof[nrel].embed(&ring)?;
        for (c, y) in cof[nrel + 1..].iter().zip(&ys) {
            q = &q + &(&c.embed(&ring)? * y);
        }
        k1.push(q);
    }
    let k1_ideal = next.algebra.ideal().derive(k1.clone());
    let transferred = ModificationLocus::with_sequence(&next.algebra, &k1_ideal, k1)?;
    Ok(BasicStep { next, transferred })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ring(names: &[&str]) -> Arc<Ring> {
        Ring::new(names).unwrap()
    }

    fn p(r: &Arc<Ring>, s: &str) -> Polynomial {
        Polynomial::parse(r, s).unwrap()
    }

    fn locus(r: &Arc<Ring>, gens: &[&str], f: &str) -> ModificationLocus {
        let base = PresentedAlgebra::polynomial_ring(r);
        let i = Ideal::parse(r, gens).unwrap();
        ModificationLocus::new(&base, &i, &p(r, f)).unwrap()
    }

    fn names(xs: &[&str]) -> Vec<String> {
        xs.iter().map(|s| s.to_string()).collect()
    }

    #[test]
    fn danielewski_presentation() {
        let r = ring(&["x", "y"]);
        let loc = locus(&r, &["x", "y^2 - y"], "x");
        let pres = davis_presentation(&loc, Some(&names(&["z"]))).unwrap();
        let rz = pres.algebra().ring().clone();
        assert_eq!(pres.relations(), &[p(&rz, "x*z - y^2 + y")]);
        assert_eq!(pres.status(), PresentationStatus::RegularSequenceCertified);
        let ids = modification_ideals(&loc, &pres, None).unwrap();
        let expect = Ideal::parse(&rz, &["x", "y^2 - y"]).unwrap();
        assert!(ids.exceptional.equals(&expect).unwrap());
        let gc = Ideal::parse(&r, &["x", "y^2 - y"]).unwrap();
        assert!(ids.geometric_center_closure.equals(&gc).unwrap());
    }

    #[test]
    fn modulus_outside_ideal_is_rejected() {
        let r = ring(&["x", "y"]);
        let base = PresentedAlgebra::polynomial_ring(&r);
        let i = Ideal::parse(&r, &["y"]).unwrap();
        assert!(matches!(
            ModificationLocus::new(&base, &i, &p(&r, "x")),
            Err(Error::Precondition(_))
        ));
    }

    #[test]
    fn largest_ideal_chains() {
        let r = ring(&["x", "y"]);
        let li = largest_ideal(&locus(&r, &["x"], "x^2"), 8);
        let li = li.unwrap();
        assert_eq!(li.stabilized_at, Some(2));
        assert!(li.ideal.is_unit().unwrap());

        let r3 = ring(&["x", "y", "z"]);
        let li = largest_ideal(&locus(&r3, &["x", "y"], "x"), 8).unwrap();
        assert_eq!(li.stabilized_at, Some(1));
        assert!(li
            .ideal
            .equals(&Ideal::parse(&r3, &["x", "y"]).unwrap())
            .unwrap());

        let li = largest_ideal(&locus(&r, &["x^2", "y^2"], "x^2"), 8).unwrap();
        assert!(li
            .ideal
            .equals(&Ideal::parse(&r, &["x^2", "y^2"]).unwrap())
            .unwrap());
        assert_eq!(li.stabilized_at, Some(1));
    }

    #[test]
    fn split_round_trip() {
        let r = ring(&["x", "y"]);
        let loc = locus(&r, &["x^2", "y"], "x^2");
        let x = p(&r, "x");
        let split = compose_split(&loc, &x, &x).unwrap();
        assert!(split.isomorphic);
        assert_eq!(split.first_presentation.relations().len(), 1);
    }

    #[test]
    fn fiber_product_checks_common_zeros() {
        let r = ring(&["x", "y"]);
        let a = locus(&r, &["x", "y"], "x");
        let b = locus(&r, &["x - 1", "y"], "x - 1");
        let fp = fiber_product_presentation(&[a.clone(), b], None).unwrap();
        assert_eq!(fp.ring().nvars(), 4);
        assert!(fiber_product_presentation(&[a.clone(), a], None).is_err());
    }

    #[test]
    fn basic_steps() {
        let r = ring(&["x", "y", "z"]);
        let base = PresentedAlgebra::polynomial_ring(&r);
        let step = basic_step(
            &base,
            &p(&r, "x"),
            &[p(&r, "x"), p(&r, "y^3 - z^2")],
            2,
            None,
            Some(&names(&["v1"])),
        )
        .unwrap();
        let r1 = step.next.algebra().ring().clone();
        assert_eq!(step.next.relations(), &[p(&r1, "x*v1 - y^3 + z^2")]);
        assert_eq!(step.transferred.modulus(), &p(&r1, "x"));

        let step2 = basic_step(
            step.next.algebra(),
            &p(&r1, "x"),
            &[p(&r1, "x"), p(&r1, "v1^2 + y")],
            1,
            None,
            Some(&names(&["v2"])),
        )
        .unwrap();
        let r2 = step2.next.algebra().ring().clone();
        assert_eq!(step2.next.relations(), &[p(&r2, "x*v2 - v1^2 - y")]);

        let point = basic_step(
            &base,
            &p(&r, "x"),
            &[p(&r, "x"), p(&r, "y"), p(&r, "z")],
            1,
            None,
            Some(&names(&["u", "v"])),
        )
        .unwrap();
        assert_eq!(point.next.algebra().dimension().unwrap(), 3);
    }
}
