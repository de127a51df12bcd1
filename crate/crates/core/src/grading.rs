//! Weight filtrations on presented algebras and their associated graded algebras.

use std::fmt;
use std::sync::Arc;

use num_integer::Integer;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::ideal::{is_regular_sequence, Ideal, MonomialOrder, PresentedAlgebra};
use crate::modification::PresentationStatus;
use crate::poly::{Monomial, Polynomial, Ring, WeightFunction, WeightVector};

/// Name of the `i`-th variable (1-based) of extra root block `j` (1-based).
pub fn block_var(j: usize, i: usize) -> String {
    format!("u{j}_{i}")
}

/// The weight choice for the threefold family: two lexicographic levels,
/// `d_y = (l, 0)`, `d_z = (k, 0)`, `d_x = (-e, 1)`, `d_1 = (kl + e, -1)`,
/// `d_{i+1} = n_i d_i - d_x`, and for every extra block `d_{j,1} = d_1`,
/// `d_{j,i+1} = n_{j,i} d_{j,i} - d_x`.
///
/// Variables of the family that are missing from `ring` are skipped; other
/// variables get weight zero.
pub fn convention51_weights(
    ring: &Arc<Ring>,
    k: u32,
    l: u32,
    n: &[u32],
    blocks: &[Vec<u32>],
    e: i64,
) -> Result<WeightFunction> {
    if k.gcd(&l) != 1 {
        return Err(Error::precondition(format!("gcd({k}, {l}) must be 1")));
    }
    if k <= l || l < 2 {
        return Err(Error::precondition(format!(
            "need k > l >= 2, got k={k}, l={l}"
        )));
    }
    if e <= 0 {
        return Err(Error::precondition(
            "the first-level magnitude e must be positive",
        ));
    }
    let (k, l) = (k as i64, l as i64);
    let dy = WeightVector(vec![l, 0]);
    let dz = WeightVector(vec![k, 0]);
    let dx = WeightVector(vec![-e, 1]);
    let d1 = WeightVector(vec![k * l + e, -1]);
    let mut named: Vec<(String, WeightVector)> = vec![
        ("x".into(), dx.clone()),
        ("y".into(), dy.clone()),
        ("z".into(), dz.clone()),
    ];
    let chain = |first: &WeightVector, exps: &[u32]| -> Vec<WeightVector> {
        let mut out = vec![first.clone()];
        for &ni in exps {
            let prev = out.last().unwrap().scale(ni as i64);
            out.push(&prev - &dx);
        }
        out
    };
    for (i, d) in chain(&d1, n).into_iter().enumerate() {
        named.push((format!("v{}", i + 1), d));
    }
    for (j, exps) in blocks.iter().enumerate() {
        for (i, d) in chain(&d1, exps).into_iter().enumerate() {
            named.push((block_var(j + 1, i + 1), d));
        }
    }
    let mut weights = vec![WeightVector::zero(2); ring.nvars()];
    for (name, w) in &named {
        if let Some(idx) = ring.index_of(name) {
            weights[idx] = w.clone();
        }
    }
    let wf = WeightFunction::new(ring, weights)?;
    verify_convention(&dx, &dy, &dz, &d1, k, l)?;
    Ok(wf)
}

fn verify_convention(
    dx: &WeightVector,
    dy: &WeightVector,
    dz: &WeightVector,
    d1: &WeightVector,
    k: i64,
    l: i64,
) -> Result<()> {
    let fail = |what: &str| {
        Err(Error::invariant(format!(
            "weight constraint violated: {what}"
        )))
    };
    if dy.scale(k) != dz.scale(l) {
        return fail("k d_y = l d_z");
    }
    if (d1 + dx) != dy.scale(k) {
        return fail("d_1 + d_x = k d_y");
    }
    if dx.0[0] * d1.0[1] - dx.0[1] * d1.0[0] == 0 {
        return fail("d_1 and d_x independent");
    }
    if !dx.is_negative() || !dy.is_positive() || d1 <= dy {
        return fail("d_x < 0 < d_y < d_1");
    }
    Ok(())
}

/// The associated graded algebra of a presented algebra under a weight function.
#[derive(Clone, Debug)]
pub struct GradedPresentation {
    source: PresentedAlgebra,
    weights: WeightFunction,
    graded: PresentedAlgebra,
    /// Pairs `(g, in_w(g))` with `g` in the defining ideal; the second
    /// components generate the graded ideal.
    lifts: Vec<(Polynomial, Polynomial)>,
    status: PresentationStatus,
}

impl GradedPresentation {
    pub fn source(&self) -> &PresentedAlgebra {
        &self.source
    }

    pub fn weights(&self) -> &WeightFunction {
        &self.weights
    }

    pub fn graded(&self) -> &PresentedAlgebra {
        &self.graded
    }

    pub fn graded_ideal(&self) -> &Ideal {
        self.graded.ideal()
    }

    pub fn lifts(&self) -> &[(Polynomial, Polynomial)] {
        &self.lifts
    }

    /// Regular-sequence certification of the graded ideal's generators.
    pub fn status(&self) -> PresentationStatus {
        self.status
    }

    /// Replaces the generators of the graded ideal by `gens`, which must
    /// generate the same ideal.
    pub fn with_presentation(mut self, gens: Vec<Polynomial>) -> Result<Self> {
        let ideal = self.graded.ideal().derive(gens);
        if !ideal.equals(self.graded.ideal())? {
            return Err(Error::invariant(
                "supplied generators do not generate the graded ideal",
            ));
        }
        let ring = ideal.ring().clone();
        self.status = if is_regular_sequence(
            ideal.generators(),
            &PresentedAlgebra::polynomial_ring(&ring),
        )? {
            PresentationStatus::RegularSequenceCertified
        } else {
            PresentationStatus::Unverified
        };
        self.graded = PresentedAlgebra::new(ideal)?;
        Ok(self)
    }
}

fn homogenize(p: &Polynomial, ring_h: &Arc<Ring>) -> Result<Polynomial> {
    let d = p.total_degree().unwrap_or(0);
    let n = p.ring().nvars();
    let mut out = Polynomial::zero(ring_h);
    for (m, c) in p.terms() {
        let mut e = m.exponents().to_vec();
        e.push(d - m.degree());
        debug_assert_eq!(e.len(), n + 1);
        out = &out + &Polynomial::monomial(ring_h, Monomial::from_exponents(e), c.clone());
    }
    Ok(out)
}

fn dehomogenize(p: &Polynomial, ring: &Arc<Ring>) -> Polynomial {
    let n = ring.nvars();
    let mut out = Polynomial::zero(ring);
    for (m, c) in p.terms() {
        let e = m.exponents()[..n].to_vec();
        out = &out + &Polynomial::monomial(ring, Monomial::from_exponents(e), c.clone());
    }
    out
}

/// Ideal of all initial forms `in_w(g)`, `g` in the defining ideal, together
/// with lifts. Works for weights of any sign by passing through the
/// homogenization, where a total-degree row makes the order a well-order
/// without changing initial forms.
pub fn graded_ideal(pres: &PresentedAlgebra, w: &WeightFunction) -> Result<GradedPresentation> {
    let ring = pres.ring().clone();
    if !crate::poly::same_ring(&ring, w.ring()) {
        return Err(Error::RingMismatch {
            left: ring.names().join(","),
            right: w.ring().names().join(","),
        });
    }
    let ideal = pres.ideal();
    let h = ring.fresh_name("h");
    let ring_h = ring.extend(&[h.as_str()])?;
    let base_gb = ideal.groebner_basis(&MonomialOrder::DegRevLex)?;
    let homog = base_gb
        .iter()
        .map(|g| homogenize(g, &ring_h))
        .collect::<Result<Vec<_>>>()?;
    let wh = w.embed(&ring_h)?;
    let mut rows = vec![vec![1i64; ring_h.nvars()]];
    rows.extend(wh.level_rows());
    let order = MonomialOrder::weighted(rows, MonomialOrder::DegRevLex);
    let gb = Ideal::new(&ring_h, homog)
        .with_budget(ideal.budget())
        .groebner_basis(&order)?;
    let mut lifts = Vec::with_capacity(gb.len());
    for g in &gb {
        let top = wh.principal_component(g)?;
        lifts.push((dehomogenize(g, &ring), dehomogenize(&top, &ring)));
    }
    let initial = ideal
        .derive(lifts.iter().map(|(_, t)| t.clone()).collect())
        .minimal_generators()?;
    for g in ideal.generators() {
        if !initial.contains(&w.principal_component(g)?)? {
            return Err(Error::invariant(format!(
                "principal component of {g} is missing from the graded ideal"
            )));
        }
    }
    let graded = if initial.is_unit()? {
        PresentedAlgebra::zero_algebra(&ring)
    } else {
        PresentedAlgebra::new(initial)?
    };
    let status = if graded.relations().is_empty()
        || is_regular_sequence(
            graded.relations(),
            &PresentedAlgebra::polynomial_ring(&ring),
        )? {
        PresentationStatus::RegularSequenceCertified
    } else {
        PresentationStatus::Unverified
    };
    Ok(GradedPresentation {
        source: pres.clone(),
        weights: w.clone(),
        graded,
        lifts,
        status,
    })
}

/// A representative of minimal weight degree and its image in the graded algebra.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GrElement {
    pub representative: Polynomial,
    pub component: Polynomial,
    pub degree: WeightVector,
    pub steps: usize,
}

/// `gr(a)`: lowers the weight of a representative of `a` until its principal
/// component leaves the graded ideal.
pub fn gr_element(a: &Polynomial, gp: &GradedPresentation, max_steps: usize) -> Result<GrElement> {
    let src = &gp.source;
    if src.is_zero(a)? {
        return Err(Error::precondition("element is zero in the algebra"));
    }
    let w = &gp.weights;
    let graded = gp.graded.ideal();
    let tops: Vec<Polynomial> = gp.lifts.iter().map(|(_, t)| t.clone()).collect();
    let tops_ideal = graded.derive(tops.clone());
    let top_degrees = tops
        .iter()
        .map(|t| w.degree(t))
        .collect::<Result<Vec<_>>>()?;
    let mut q = a.clone();
    for steps in 0..=max_steps {
        let pc = w.principal_component(&q)?;
        let d = w.degree(&q)?;
        if !graded.contains(&pc)? {
            return Ok(GrElement {
                representative: q,
                component: pc,
                degree: d,
                steps,
            });
        }
        let cof = tops_ideal
            .lift(&pc)?
            .ok_or_else(|| Error::invariant("graded ideal membership without certificate"))?;
        let mut correction = Polynomial::zero(q.ring());
        for ((c, (g, _)), dt) in cof.iter().zip(&gp.lifts).zip(&top_degrees) {
            let part = w.component(c, &(&d - dt));
            if !part.is_zero() {
                correction = &correction + &(&part * g);
            }
        }
        q = &q - &correction;
        if q.is_zero() {
            return Err(Error::invariant(
                "descent reached zero for a nonzero element",
            ));
        }
    }
    Err(Error::BudgetExceeded {
        what: "weight descent steps",
        limit: max_steps,
    })
}

/// Kinds of irreducible homogeneous elements of the graded family algebra.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum CandidateKind {
    X,
    Y,
    Z,
    V(usize),
    /// `y^k + c z^l` with `c` a formal nonzero parameter.
    Binomial,
}

impl fmt::Display for CandidateKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CandidateKind::X => write!(f, "x"),
            CandidateKind::Y => write!(f, "y"),
            CandidateKind::Z => write!(f, "z"),
            CandidateKind::V(i) => write!(f, "v{i}"),
            CandidateKind::Binomial => write!(f, "y^k+c*z^l"),
        }
    }
}

#[derive(Clone, Debug)]
pub struct Candidate {
    pub kind: CandidateKind,
    /// Lives in [`Candidates::ring`], which carries the parameter `c`.
    pub poly: Polynomial,
}

#[derive(Clone, Debug)]
pub struct Candidates {
    /// The graded algebra's ring extended by the parameter.
    pub ring: Arc<Ring>,
    pub parameter: String,
    pub list: Vec<Candidate>,
}

impl Candidates {
    /// All unordered pairs of distinct candidates.
    pub fn pairs(&self) -> Vec<(Candidate, Candidate)> {
        let mut out = Vec::new();
        for i in 0..self.list.len() {
            for j in i + 1..self.list.len() {
                out.push((self.list[i].clone(), self.list[j].clone()));
            }
        }
        out
    }
}

/// `x, y, z, v_1, ..., v_m` and the parametric family `y^k + c z^l`.
pub fn homogeneous_irreducible_candidates(
    gp: &GradedPresentation,
    k: u32,
    l: u32,
) -> Result<Candidates> {
    let ring = gp.graded.ring();
    for v in ["x", "y", "z", "v1", "v2"] {
        if ring.index_of(v).is_none() {
            return Err(Error::precondition(format!(
                "not a family presentation: variable `{v}` is missing"
            )));
        }
    }
    let m = (1..)
        .take_while(|i| ring.index_of(&format!("v{i}")).is_some())
        .count();
    if ring.nvars() != 3 + m {
        return Err(Error::precondition(
            "not a family presentation: unexpected extra variables",
        ));
    }
    let parameter = ring.fresh_name("c");
    let pring = ring.extend(&[parameter.as_str()])?;
    let var = |n: &str| Polynomial::var(&pring, n);
    let mut list = vec![
        Candidate {
            kind: CandidateKind::X,
            poly: var("x")?,
        },
        Candidate {
            kind: CandidateKind::Y,
            poly: var("y")?,
        },
        Candidate {
            kind: CandidateKind::Z,
            poly: var("z")?,
        },
    ];
    for i in 1..=m {
        list.push(Candidate {
            kind: CandidateKind::V(i),
            poly: var(&format!("v{i}"))?,
        });
    }
    let binomial = &var("y")?.pow(k) + &(&var(&parameter)? * &var("z")?.pow(l));
    list.push(Candidate {
        kind: CandidateKind::Binomial,
        poly: binomial,
    });
    Ok(Candidates {
        ring: pring,
        parameter,
        list,
    })
}

/// Whether `a` and `b` satisfy a nonzero polynomial relation in the algebra.
pub fn algebraically_dependent(
    alg: &PresentedAlgebra,
    a: &Polynomial,
    b: &Polynomial,
) -> Result<bool> {
    let ring = alg.ring();
    let s = ring.fresh_name("s");
    let big = ring.extend(&[s.as_str()])?;
    let t = big.fresh_name("t");
    let big = big.extend(&[t.as_str()])?;
    let mut gens: Vec<Polynomial> = alg
        .relations()
        .iter()
        .map(|r| r.embed(&big))
        .collect::<Result<_>>()?;
    gens.push(&Polynomial::var(&big, &s)? - &a.embed(&big)?);
    gens.push(&Polynomial::var(&big, &t)? - &b.embed(&big)?);
    let drop: Vec<usize> = (0..ring.nvars()).collect();
    let elim = Ideal::new(&big, gens)
        .with_budget(alg.ideal().budget())
        .eliminate(&drop)?;
    Ok(!elim.generators().is_empty())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn family_ring() -> Arc<Ring> {
        Ring::new(&["x", "y", "z", "v1", "v2"]).unwrap()
    }

    fn p(r: &Arc<Ring>, s: &str) -> Polynomial {
        Polynomial::parse(r, s).unwrap()
    }

    #[test]
    fn weight_values() {
        let r = family_ring();
        let w = convention51_weights(&r, 3, 2, &[2], &[], 60).unwrap();
        assert_eq!(w.weight_of("y").unwrap(), &WeightVector(vec![2, 0]));
        assert_eq!(w.weight_of("z").unwrap(), &WeightVector(vec![3, 0]));
        assert_eq!(w.weight_of("x").unwrap(), &WeightVector(vec![-60, 1]));
        assert_eq!(w.weight_of("v1").unwrap(), &WeightVector(vec![66, -1]));
        assert_eq!(w.weight_of("v2").unwrap(), &WeightVector(vec![192, -3]));
        assert_eq!(
            w.degree(&p(&r, "y^3")).unwrap(),
            w.degree(&p(&r, "z^2")).unwrap()
        );
        assert_eq!(
            w.degree(&p(&r, "x*v1")).unwrap(),
            w.degree(&p(&r, "y^3")).unwrap()
        );
        assert!(convention51_weights(&r, 4, 2, &[2], &[], 60).is_err());
        assert!(convention51_weights(&r, 2, 3, &[2], &[], 60).is_err());
    }

    #[test]
    fn graded_family_ideal() {
        let r = family_ring();
        let w = convention51_weights(&r, 3, 2, &[2], &[], 60).unwrap();
        let pres = PresentedAlgebra::new(
            Ideal::parse(&r, &["x*v1 - y^3 + z^2", "x*v2 - v1^2 + y"]).unwrap(),
        )
        .unwrap();
        let gp = graded_ideal(&pres, &w).unwrap();
        let expect = Ideal::parse(&r, &["x*v1 - y^3 + z^2", "x*v2 - v1^2"]).unwrap();
        assert!(gp.graded_ideal().equals(&expect).unwrap());
        assert_eq!(gp.status(), PresentationStatus::RegularSequenceCertified);

        let g = gr_element(&p(&r, "y"), &gp, 32).unwrap();
        assert_eq!(g.component, p(&r, "y"));
        let g = gr_element(&p(&r, "y^3 - z^2"), &gp, 32).unwrap();
        assert!(expect.contains(&(&g.component - &p(&r, "x*v1"))).unwrap());
        assert_eq!(g.degree, WeightVector(vec![6, 0]));
        let g = gr_element(&p(&r, "x*v2"), &gp, 32).unwrap();
        assert!(expect.contains(&(&g.component - &p(&r, "v1^2"))).unwrap());
    }

    #[test]
    fn gr_descends_below_graded_ideal() {
        let r = family_ring();
        let w = convention51_weights(&r, 3, 2, &[2], &[], 60).unwrap();
        let pres = PresentedAlgebra::new(
            Ideal::parse(&r, &["x*v1 - y^3 + z^2", "x*v2 - v1^2 + y"]).unwrap(),
        )
        .unwrap();
        let gp = graded_ideal(&pres, &w).unwrap();
        // x*v2 - v1^2 has principal part in the graded ideal; its class is -y.
        let g = gr_element(&p(&r, "x*v2 - v1^2"), &gp, 32).unwrap();
        assert_eq!(
            g.component.scalar_ratio(&p(&r, "y")),
            Some(crate::poly::rat(-1))
        );
        assert!(g.steps >= 1);
    }

    #[test]
    fn candidate_list() {
        let r = family_ring();
        let w = convention51_weights(&r, 3, 2, &[2], &[], 60).unwrap();
        let pres =
            PresentedAlgebra::new(Ideal::parse(&r, &["x*v1 - y^3 + z^2", "x*v2 - v1^2"]).unwrap())
                .unwrap();
        let gp = graded_ideal(&pres, &w).unwrap();
        let c = homogeneous_irreducible_candidates(&gp, 3, 2).unwrap();
        assert_eq!(c.list.len(), 6);
        assert_eq!(c.pairs().len(), 15);
        assert_eq!(
            c.list[5].poly,
            Polynomial::parse(&c.ring, "y^3 + c*z^2").unwrap()
        );
    }

    #[test]
    fn dependence_test() {
        let r = family_ring();
        let pres =
            PresentedAlgebra::new(Ideal::parse(&r, &["x*v1 - y^3 + z^2", "x*v2 - v1^2"]).unwrap())
                .unwrap();
        assert!(!algebraically_dependent(&pres, &p(&r, "x"), &p(&r, "y")).unwrap());
        assert!(algebraically_dependent(&pres, &p(&r, "y"), &p(&r, "y^2 + 1")).unwrap());
    }
}
