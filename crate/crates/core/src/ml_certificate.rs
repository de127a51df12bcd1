//! Makar-Limanov nontriviality certificates for the threefold family
//!
//! ```text
//! x v_1 - (y^k - z^l) = 0
//! x v_{i+1} - v_i^{n_i} + q_i(y, z, v_1..v_i) = 0
//! (x - c_j) u_{j,1} - r_{j,0}(y, z) = 0
//! (x - c_j) u_{j,i+1} - u_{j,i}^{n_{j,i}} + r_{j,i}(y, z, u_{j,1}..u_{j,i}) = 0
//! ```

use std::fmt;
use std::sync::Arc;

use num_integer::Integer;
use serde::{Deserialize, Serialize};

use crate::derivation::{jacobian_derivation, jacobian_type, Derivation, DEFAULT_CHAIN_BOUND};
use crate::error::{Error, Result};
use crate::grading::{
    block_var, convention51_weights, graded_ideal, homogeneous_irreducible_candidates, Candidate,
    CandidateKind, Candidates, GradedPresentation,
};
use crate::ideal::{Ideal, PresentedAlgebra};
use crate::poly::{jacobian_determinant, rat, Polynomial, Ring, WeightFunction};

/// Tails and exponents for one extra root `c_j` of the modulus.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RootBlock {
    pub root: i64,
    /// `n_{j,1}, ..., n_{j,m_j - 1}`.
    pub n: Vec<u32>,
    /// `r_{j,0}, ..., r_{j,m_j - 1}`.
    pub r: Vec<String>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FamilyParams {
    pub k: u32,
    pub l: u32,
    /// `n_1, ..., n_{m-1}`.
    pub n: Vec<u32>,
    /// `q_1, ..., q_{m-1}`.
    pub q: Vec<String>,
    #[serde(default)]
    pub blocks: Vec<RootBlock>,
    /// First-level weight magnitude; chosen from the degrees when absent.
    #[serde(default)]
    pub e: Option<i64>,
}

impl FamilyParams {
    /// The smallest admissible instance `k=3, l=2, n=[2], q=[0]`.
    pub fn default_instance() -> Self {
        FamilyParams {
            k: 3,
            l: 2,
            n: vec![2],
            q: vec!["0".into()],
            blocks: Vec::new(),
            e: None,
        }
    }

    pub fn m(&self) -> usize {
        self.n.len() + 1
    }

    fn validate(&self) -> Result<()> {
        if self.k.gcd(&self.l) != 1 {
            return Err(Error::precondition(format!(
                "gcd(k, l) = gcd({}, {}) must be 1",
                self.k, self.l
            )));
        }
        if self.k <= self.l || self.l < 2 {
            return Err(Error::precondition(format!(
                "need k > l >= 2, got k={}, l={}",
                self.k, self.l
            )));
        }
        if self.n.is_empty() {
            return Err(Error::precondition(
                "need m >= 2, i.e. at least one exponent n_1",
            ));
        }
        if self.q.len() != self.n.len() {
            return Err(Error::precondition(format!(
                "{} exponents need {} tails q_i, got {}",
                self.n.len(),
                self.n.len(),
                self.q.len()
            )));
        }
        if self.n.iter().any(|&n| n < 1) {
            return Err(Error::precondition("exponents n_i must be positive"));
        }
        let mut roots = vec![0i64];
        for b in &self.blocks {
            if roots.contains(&b.root) {
                return Err(Error::precondition(format!(
                    "root {} repeats or coincides with 0",
                    b.root
                )));
            }
            roots.push(b.root);
            if b.r.len() != b.n.len() + 1 {
                return Err(Error::precondition(format!(
                    "root block {}: {} exponents need {} tails r, got {}",
                    b.root,
                    b.n.len(),
                    b.n.len() + 1,
                    b.r.len()
                )));
            }
            if b.n.iter().any(|&n| n < 1) {
                return Err(Error::precondition("exponents n_(j,i) must be positive"));
            }
        }
        if matches!(self.e, Some(e) if e <= 0) {
            return Err(Error::precondition("weight parameter e must be positive"));
        }
        Ok(())
    }

    fn names(&self) -> (Vec<String>, Vec<String>) {
        let mut root = vec!["x".to_string(), "y".into(), "z".into()];
        root.extend((1..=self.m()).map(|i| format!("v{i}")));
        let mut full = root.clone();
        for (j, b) in self.blocks.iter().enumerate() {
            full.extend((1..=b.n.len() + 1).map(|i| block_var(j + 1, i)));
        }
        (root, full)
    }
}

impl fmt::Display for FamilyParams {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let join = |v: &[u32]| {
            v.iter()
                .map(|n| n.to_string())
                .collect::<Vec<_>>()
                .join(",")
        };
        write!(
            f,
            "k={} l={} n=[{}] q=[{}]",
            self.k,
            self.l,
            join(&self.n),
            self.q.join(", ")
        )?;
        for b in &self.blocks {
            write!(
                f,
                " root {}: n=[{}] r=[{}]",
                b.root,
                join(&b.n),
                b.r.join(", ")
            )?;
        }
        if let Some(e) = self.e {
            write!(f, " e={e}")?;
        }
        Ok(())
    }
}

/// A built family: the full system, its weights and the graded root block.
#[derive(Clone, Debug)]
pub struct Family {
    pub params: FamilyParams,
    pub e: i64,
    pub xprime: PresentedAlgebra,
    pub weights: WeightFunction,
    /// Principal components of the generators of `xprime`, in order.
    pub principal_system: Vec<Polynomial>,
    /// The root block alone, in `x, y, z, v_1..v_m`.
    pub root_block: PresentedAlgebra,
    /// Associated graded algebra of the root block, presented by
    /// `x v_1 - y^k + z^l, x v_{i+1} - v_i^{n_i}`.
    pub hat: GradedPresentation,
}

fn parse_tail(
    ring: &Arc<Ring>,
    text: &str,
    allowed: &[String],
    bounded: &[(String, u32)],
    what: &str,
) -> Result<Polynomial> {
    let p = Polynomial::parse(ring, text)?;
    for v in p.variables() {
        let name = &ring.names()[v];
        if !allowed.contains(name) {
            return Err(Error::precondition(format!(
                "{what} = {p} may not involve {name}"
            )));
        }
    }
    for (name, n) in bounded {
        let d = p.degree_in(ring.var_index(name)?);
        if d >= *n {
            return Err(Error::precondition(format!(
                "{what} = {p} has degree {d} in {name}, must be below {n}"
            )));
        }
    }
    Ok(p)
}

pub fn build_family(params: &FamilyParams) -> Result<Family> {
    params.validate()?;
    let (root_names, full_names) = params.names();
    let ring = Ring::new(&full_names)?;
    let var = |n: &str| Polynomial::var(&ring, n);
    let (x, y, z) = (var("x")?, var("y")?, var("z")?);
    let (k, l, m) = (params.k, params.l, params.m());
    let q0 = &y.pow(k) - &z.pow(l);
    let mut gens = vec![&(&x * &var("v1")?) - &q0];
    let mut expected_top = vec![gens[0].clone()];
    let mut allowed = vec!["y".to_string(), "z".to_string()];
    let mut bounded = Vec::new();
    for i in 1..m {
        let vi = format!("v{i}");
        let ni = params.n[i - 1];
        allowed.push(vi.clone());
        bounded.push((vi.clone(), ni));
        let qi = parse_tail(
            &ring,
            &params.q[i - 1],
            &allowed,
            &bounded,
            &format!("q{i}"),
        )?;
        let head = &(&x * &var(&format!("v{}", i + 1))?) - &var(&vi)?.pow(ni);
        gens.push(&head + &qi);
        expected_top.push(head);
    }
    let root_len = gens.len();
    for (j, b) in params.blocks.iter().enumerate() {
        let shifted = &x - &Polynomial::from_int(&ring, b.root);
        let c = Polynomial::from_int(&ring, b.root);
        let mut allowed = vec!["y".to_string(), "z".to_string()];
        let mut bounded = Vec::new();
        let r0 = parse_tail(&ring, &b.r[0], &allowed, &bounded, &format!("r{}_0", j + 1))?;
        let u1 = var(&block_var(j + 1, 1))?;
        gens.push(&(&shifted * &u1) - &r0);
        expected_top.push((&c * &u1).scale(&rat(-1)));
        for i in 1..=b.n.len() {
            let ui = block_var(j + 1, i);
            let ni = b.n[i - 1];
            allowed.push(ui.clone());
            bounded.push((ui.clone(), ni));
            let what = format!("r{}_{}", j + 1, i);
            let ri = parse_tail(&ring, &b.r[i], &allowed, &bounded, &what)?;
            let next = var(&block_var(j + 1, i + 1))?;
            gens.push(&(&(&shifted * &next) - &var(&ui)?.pow(ni)) + &ri);
            expected_top.push((&c * &next).scale(&rat(-1)));
        }
    }
    let max_deg = gens
        .iter()
        .filter_map(|g| g.total_degree())
        .max()
        .unwrap_or(1) as i64;
    let e = params.e.unwrap_or(max_deg.max(1) * (k as i64) * (l as i64));
    let block_n: Vec<Vec<u32>> = params.blocks.iter().map(|b| b.n.clone()).collect();
    let weights = convention51_weights(&ring, k, l, &params.n, &block_n, e)?;
    let principal_system = gens
        .iter()
        .map(|g| weights.principal_component(g))
        .collect::<Result<Vec<_>>>()?;
    for (g, (top, want)) in gens.iter().zip(principal_system.iter().zip(&expected_top)) {
        if top != want {
            return Err(Error::invariant(format!(
                "principal component of {g} is {top}, expected {want}; increase e (currently {e})"
            )));
        }
    }
    let xprime = PresentedAlgebra::new(Ideal::new(&ring, gens.clone()))?;

    let root_ring = Ring::new(&root_names)?;
    let root_gens = gens[..root_len]
        .iter()
        .map(|g| g.embed(&root_ring))
        .collect::<Result<Vec<_>>>()?;
    let root_block = PresentedAlgebra::new(Ideal::new(&root_ring, root_gens))?;
    let root_weights = convention51_weights(&root_ring, k, l, &params.n, &[], e)?;
    let hat_gens = expected_top[..root_len]
        .iter()
        .map(|g| g.embed(&root_ring))
        .collect::<Result<Vec<_>>>()?;
    let hat = graded_ideal(&root_block, &root_weights)?.with_presentation(hat_gens)?;
    Ok(Family {
        params: params.clone(),
        e,
        xprime,
        weights,
        principal_system,
        root_block,
        hat,
    })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Conclusion {
    Excluded,
    Survives,
    /// A machine-checked step did not produce the expected outcome.
    Failed,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CaseVerdict {
    pub pair: (String, String),
    /// `0` for the surviving pairs, otherwise the case number 1..6.
    pub case: u8,
    pub machine_checked: bool,
    pub evidence: String,
    pub conclusion: Conclusion,
}

impl fmt::Display for CaseVerdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let label = if self.case == 0 {
            "survivor".to_string()
        } else {
            format!("case {}", self.case)
        };
        write!(
            f,
            "({}, {}) {} {:?} [{}] {}",
            self.pair.0,
            self.pair.1,
            label,
            self.conclusion,
            if self.machine_checked {
                "checked"
            } else {
                "cited"
            },
            self.evidence
        )
    }
}

fn rank(kind: &CandidateKind) -> (u8, usize) {
    match kind {
        CandidateKind::X => (0, 0),
        CandidateKind::Y => (1, 0),
        CandidateKind::Z => (2, 0),
        CandidateKind::V(i) => (3, *i),
        CandidateKind::Binomial => (4, 0),
    }
}

fn hat_var(fam: &Family, kind: &CandidateKind) -> Result<Polynomial> {
    Polynomial::var(fam.hat.graded().ring(), &kind.to_string())
}

fn verdict(
    a: &Candidate,
    b: &Candidate,
    case: u8,
    machine_checked: bool,
    evidence: String,
    conclusion: Conclusion,
) -> CaseVerdict {
    CaseVerdict {
        pair: (a.kind.to_string(), b.kind.to_string()),
        case,
        machine_checked,
        evidence,
        conclusion,
    }
}

fn checked(ok: bool) -> Conclusion {
    if ok {
        Conclusion::Excluded
    } else {
        Conclusion::Failed
    }
}

/// Case analysis for one candidate pair of the graded family algebra.
pub fn case_analysis(
    fam: &Family,
    cands: &Candidates,
    pair: (&Candidate, &Candidate),
) -> Result<CaseVerdict> {
    let (a, b) = if rank(&pair.0.kind) <= rank(&pair.1.kind) {
        pair
    } else {
        (pair.1, pair.0)
    };
    let m = fam.params.m() as u32;
    let l = fam.params.l;
    let ring = fam.hat.graded().ring().clone();
    let x = Polynomial::var(&ring, "x")?;
    use CandidateKind::*;
    match (&a.kind, &b.kind) {
        (X, Y) | (X, Z) => {
            let d = jacobian_derivation(&fam.hat, &x, &hat_var(fam, &b.kind)?)?;
            let verdict_lnd = d.lnd_check(DEFAULT_CHAIN_BOUND)?;
            let mut notes = vec![format!("lnd_check: {verdict_lnd}")];
            let mut ok = verdict_lnd.is_certified();
            let in_kernel = d.kernel_member(&x)? && d.kernel_member(&hat_var(fam, &b.kind)?)?;
            notes.push(format!("x, {} in kernel: {in_kernel}", b.kind));
            ok &= in_kernel;
            for i in 1..=m {
                let vi = Polynomial::var(&ring, &format!("v{i}"))?;
                let deg = d.degree(&vi, DEFAULT_CHAIN_BOUND).map(|r| r.degree).ok();
                ok &= matches!(deg, Some(s) if s >= 2);
                notes.push(format!(
                    "deg(v{i}) = {}",
                    deg.map_or("?".to_string(), |s| s.to_string())
                ));
            }
            Ok(verdict(
                a,
                b,
                0,
                true,
                notes.join("; "),
                if ok { Conclusion::Survives } else { Conclusion::Failed },
            ))
        }
        (Y, Z) => {
            let d = jacobian_derivation(&fam.hat, &hat_var(fam, &Y)?, &hat_var(fam, &Z)?)?;
            let dx = d.derive(&x)?;
            let scalar = dx.scalar_ratio(&x.pow(m));
            let refuted = d.lnd_check(DEFAULT_CHAIN_BOUND)?.is_refuted();
            Ok(verdict(
                a,
                b,
                1,
                true,
                format!("D(x) = {dx}; not_nilpotent: {refuted}"),
                checked(matches!(scalar, Some(ref s) if *s != rat(0)) && refuted),
            ))
        }
        (Y, V(1)) => {
            let d = jacobian_derivation(&fam.hat, &hat_var(fam, &Y)?, &hat_var(fam, &V(1))?)?;
            let dx = d.derive(&x)?;
            let target = &x.pow(m - 1) * &Polynomial::var(&ring, "z")?.pow(l - 1);
            let scalar = dx.scalar_ratio(&target);
            let refuted = d.lnd_check(DEFAULT_CHAIN_BOUND)?.is_refuted();
            Ok(verdict(
                a,
                b,
                5,
                true,
                format!("D(x) = {dx}; not_nilpotent: {refuted}"),
                checked(matches!(scalar, Some(ref s) if *s != rat(0)) && refuted),
            ))
        }
        (_, Binomial) => case_two(fam, cands, a, b),
        (V(_), V(_)) => Ok(verdict(
            a,
            b,
            3,
            false,
            "hyperbolic generic fibers y^k - z^l = c; Thm 5.1(6)".into(),
            Conclusion::Excluded,
        )),
        (X, V(_)) => Ok(verdict(
            a,
            b,
            4,
            false,
            "as in case 3: hyperbolic generic fibers; Thm 5.1(6)".into(),
            Conclusion::Excluded,
        )),
        (Y, V(_)) => Ok(verdict(
            a,
            b,
            5,
            false,
            "fibers (c1^k - z^l)^s = c2 x^j, j >= 2: no contractible components or fixed double points; Thm 5.1(6)".into(),
            Conclusion::Excluded,
        )),
        (Z, V(_)) => Ok(verdict(
            a,
            b,
            6,
            false,
            "as in case 5 with y and z exchanged; Thm 5.1(6)".into(),
            Conclusion::Excluded,
        )),
        _ => Err(Error::precondition(format!(
            "unsupported pair ({}, {})",
            a.kind, b.kind
        ))),
    }
}

/// Pairs containing `y^k + c z^l`: either `D(y)` or `D(z)` is nonzero although
/// the binomial is in the kernel, or `D` is a multiple of the `(y, z)` derivation.
fn case_two(fam: &Family, cands: &Candidates, a: &Candidate, b: &Candidate) -> Result<CaseVerdict> {
    let pring = &cands.ring;
    let hat = fam.hat.graded();
    let rels = hat
        .relations()
        .iter()
        .map(|r| r.embed(pring))
        .collect::<Result<Vec<_>>>()?;
    let alg = PresentedAlgebra::new(Ideal::new(pring, rels.clone()))?;
    let c_idx = pring.var_index(&cands.parameter)?;
    let vars: Vec<usize> = (0..pring.nvars()).filter(|&i| i != c_idx).collect();
    let d = jacobian_type(&alg, &rels, &vars, &a.poly, &b.poly)?;
    let y = Polynomial::var(pring, "y")?;
    let z = Polynomial::var(pring, "z")?;
    let binomial_killed = d.kernel_member(&b.poly)?;
    let specialize = |p: &Polynomial, c: i64| -> Result<Polynomial> {
        alg.reduce(&p.substitute(c_idx, &Polynomial::from_int(pring, c)))
    };
    let alive = |p: &Polynomial| -> Result<bool> {
        Ok(!p.is_zero() && !specialize(p, 1)?.is_zero() && !specialize(p, -1)?.is_zero())
    };
    let dy = d.derive(&y)?;
    let dz = d.derive(&z)?;
    if !dy.is_zero() || !dz.is_zero() {
        let (name, img) = if !dy.is_zero() {
            ("y", &dy)
        } else {
            ("z", &dz)
        };
        let ok = binomial_killed && alive(img)?;
        return Ok(verdict(
            a,
            b,
            2,
            true,
            format!(
                "binomial in kernel: {binomial_killed}; D({name}) = {img} != 0 contradicts Thm 5.1(5)"
            ),
            checked(ok),
        ));
    }
    // Both entries lie in Q[c][y, z]: D = det(d(a1, a2)/d(y, z)) * D_(y,z).
    let yz_idx = [pring.var_index("y")?, pring.var_index("z")?];
    let h = jacobian_determinant(&[a.poly.clone(), b.poly.clone()], &yz_idx)?;
    let dyz = jacobian_type(&alg, &rels, &vars, &y, &z)?;
    let mut proportional = true;
    for &v in &vars {
        let g = Polynomial::var_index(pring, v);
        let diff = &d.derive(&g)? - &(&h * &dyz.derive(&g)?);
        proportional &= alg.is_zero(&diff)?;
    }
    let x = Polynomial::var(pring, "x")?;
    let ok = binomial_killed && proportional && alive(&h)?;
    Ok(verdict(
        a,
        b,
        2,
        true,
        format!(
            "y, z in kernel; D = ({h}) * D_(y,z), D_(y,z)(x) = {}; reduces to case 1",
            dyz.derive(&x)?
        ),
        checked(ok),
    ))
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "status", rename_all = "snake_case")]
pub enum ReportStatus {
    Certified,
    Failed { counterexample: String },
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct MLReport {
    pub family: FamilyParams,
    pub e: i64,
    pub weights: Vec<(String, Vec<i64>)>,
    pub graded_system: Vec<String>,
    pub verdicts: Vec<CaseVerdict>,
    pub surviving: Vec<(String, String)>,
    /// The element shown to lie in the kernel of every surviving derivation.
    pub kernel_element: String,
    pub kernel_checked: bool,
    pub machine_checked: Vec<(String, String)>,
    pub caveats: Vec<String>,
    pub status: ReportStatus,
}

impl MLReport {
    pub fn is_certified(&self) -> bool {
        self.status == ReportStatus::Certified
    }
}

pub const CAVEATS: [&str; 4] = [
    "Prop 5.4: every nontrivial LND of the graded algebra has an equivalent perfect derivation (cited)",
    "Lemma 5.3: equivalence of Jacobian derivations with a common kernel (cited)",
    "Thm 5.1(6): geometric fiber arguments for cases 3-6 other than (y, v1) (cited)",
    "Prop 5.5: descent from the graded algebra back to A' (cited)",
];

pub fn ml_report(params: &FamilyParams) -> Result<MLReport> {
    let fam = build_family(params)?;
    let cands = homogeneous_irreducible_candidates(&fam.hat, params.k, params.l)?;
    let mut verdicts = Vec::new();
    for (a, b) in cands.pairs() {
        verdicts.push(case_analysis(&fam, &cands, (&a, &b))?);
    }
    let surviving: Vec<(String, String)> = verdicts
        .iter()
        .filter(|v| v.conclusion == Conclusion::Survives)
        .map(|v| v.pair.clone())
        .collect();
    let ring = fam.hat.graded().ring();
    let x = Polynomial::var(ring, "x")?;
    let mut kernel_checked = !surviving.is_empty();
    for (_, second) in &surviving {
        let d: Derivation = jacobian_derivation(&fam.hat, &x, &Polynomial::var(ring, second)?)?;
        kernel_checked &= d.kernel_member(&x)?;
    }
    let machine_checked = verdicts
        .iter()
        .filter(|v| v.machine_checked)
        .map(|v| v.pair.clone())
        .collect();
    let status = match verdicts.iter().find(|v| v.conclusion == Conclusion::Failed) {
        Some(v) => ReportStatus::Failed {
            counterexample: format!("({}, {}): {}", v.pair.0, v.pair.1, v.evidence),
        },
        None if !kernel_checked => ReportStatus::Failed {
            counterexample: "x is not in the kernel of every surviving derivation".into(),
        },
        None => ReportStatus::Certified,
    };
    let weights = fam
        .weights
        .ring()
        .names()
        .iter()
        .zip(fam.weights.weights())
        .map(|(n, w)| (n.clone(), w.0.clone()))
        .collect();
    Ok(MLReport {
        family: params.clone(),
        e: fam.e,
        weights,
        graded_system: fam
            .hat
            .graded()
            .relations()
            .iter()
            .map(|r| r.to_string())
            .collect(),
        verdicts,
        surviving,
        kernel_element: "x".into(),
        kernel_checked,
        machine_checked,
        caveats: CAVEATS.iter().map(|s| s.to_string()).collect(),
        status,
    })
}

impl fmt::Display for MLReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "family: {}", self.family)?;
        writeln!(f, "e = {}", self.e)?;
        for (n, w) in &self.weights {
            let w: Vec<String> = w.iter().map(|c| c.to_string()).collect();
            writeln!(f, "  d({n}) = ({})", w.join(","))?;
        }
        writeln!(f, "graded system:")?;
        for g in &self.graded_system {
            writeln!(f, "  {g}")?;
        }
        writeln!(f, "pairs:")?;
        for v in &self.verdicts {
            writeln!(f, "  {v}")?;
        }
        let surv: Vec<String> = self
            .surviving
            .iter()
            .map(|(a, b)| format!("({a}, {b})"))
            .collect();
        writeln!(f, "surviving: {}", surv.join(" "))?;
        writeln!(
            f,
            "{} in every surviving kernel: {}",
            self.kernel_element, self.kernel_checked
        )?;
        writeln!(f, "caveats:")?;
        for c in &self.caveats {
            writeln!(f, "  - {c}")?;
        }
        match &self.status {
            ReportStatus::Certified => {
                write!(f, "status: CERTIFIED (ML != constants, modulo caveats)")
            }
            ReportStatus::Failed { counterexample } => write!(f, "status: FAILED {counterexample}"),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(r: &Arc<Ring>, s: &str) -> Polynomial {
        Polynomial::parse(r, s).unwrap()
    }

    #[test]
    fn default_family_system() {
        let fam = build_family(&FamilyParams::default_instance()).unwrap();
        let r = fam.xprime.ring().clone();
        let want = Ideal::new(&r, vec![p(&r, "x*v1 - y^3 + z^2"), p(&r, "x*v2 - v1^2")]);
        assert!(fam.xprime.ideal().equals(&want).unwrap());
        assert_eq!(fam.e, 18);
    }

    #[test]
    fn tails_drop_out() {
        let mut params = FamilyParams::default_instance();
        params.q = vec!["y".into()];
        let fam = build_family(&params).unwrap();
        let r = fam.xprime.ring().clone();
        assert!(fam
            .xprime
            .ideal()
            .contains(&p(&r, "x*v2 - v1^2 + y"))
            .unwrap());
        let hr = fam.hat.graded().ring().clone();
        let want = Ideal::new(&hr, vec![p(&hr, "x*v1 - y^3 + z^2"), p(&hr, "x*v2 - v1^2")]);
        assert!(fam.hat.graded_ideal().equals(&want).unwrap());
    }

    #[test]
    fn bad_tail_rejected() {
        let mut params = FamilyParams::default_instance();
        params.q = vec!["v1^2".into()];
        assert!(matches!(build_family(&params), Err(Error::Precondition(_))));
        params.q = vec!["v2".into()];
        assert!(matches!(build_family(&params), Err(Error::Precondition(_))));
        let mut params = FamilyParams::default_instance();
        params.k = 4;
        assert!(matches!(build_family(&params), Err(Error::Precondition(_))));
    }

    #[test]
    fn two_root_instance() {
        let mut params = FamilyParams::default_instance();
        params.blocks = vec![RootBlock {
            root: 1,
            n: vec![2],
            r: vec!["y^2 - z".into(), "y".into()],
        }];
        let fam = build_family(&params).unwrap();
        let r = fam.xprime.ring().clone();
        assert!(fam
            .xprime
            .ideal()
            .contains(&p(&r, "(x - 1)*u1_1 - y^2 + z"))
            .unwrap());
        assert!(fam
            .xprime
            .ideal()
            .contains(&p(&r, "(x - 1)*u1_2 - u1_1^2 + y"))
            .unwrap());
        assert_eq!(fam.principal_system[2], p(&r, "-u1_1"));
        assert_eq!(fam.principal_system[3], p(&r, "-u1_2"));
    }

    #[test]
    fn default_report() {
        let rep = ml_report(&FamilyParams::default_instance()).unwrap();
        assert!(rep.is_certified(), "{rep}");
        assert_eq!(
            rep.surviving,
            vec![
                ("x".to_string(), "y".to_string()),
                ("x".to_string(), "z".to_string())
            ]
        );
        assert_eq!(rep.verdicts.len(), 15);
        assert!(!rep.caveats.is_empty());
        assert!(rep.kernel_checked);
    }
}
