//! Derivations of presented algebras.

use std::fmt;
use std::sync::Arc;

use num_bigint::BigInt;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::grading::GradedPresentation;
use crate::ideal::PresentedAlgebra;
use crate::poly::{jacobian_determinant, Polynomial, Rational, Ring};

pub const DEFAULT_CHAIN_BOUND: usize = 32;

/// A derivation given by the images of the ring variables.
#[derive(Clone, Debug)]
pub struct Derivation {
    algebra: PresentedAlgebra,
    images: Vec<Polynomial>,
}

/// Outcome of a local nilpotency test.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "status", rename_all = "snake_case")]
pub enum NilpotencyVerdict {
    NilpotentCertified {
        degrees: Vec<(String, usize)>,
    },
    /// `D(a)` is nonzero and divisible by `a`.
    NotNilpotent {
        element: String,
        image: String,
    },
    Inconclusive {
        bound: usize,
    },
}

impl NilpotencyVerdict {
    pub fn is_certified(&self) -> bool {
        matches!(self, NilpotencyVerdict::NilpotentCertified { .. })
    }

    pub fn is_refuted(&self) -> bool {
        matches!(self, NilpotencyVerdict::NotNilpotent { .. })
    }
}

impl fmt::Display for NilpotencyVerdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            NilpotencyVerdict::NilpotentCertified { degrees } => {
                write!(f, "nilpotent_certified")?;
                for (v, d) in degrees {
                    write!(f, " deg({v})={d}")?;
                }
                Ok(())
            }
            NilpotencyVerdict::NotNilpotent { element, image } => {
                write!(
                    f,
                    "not_nilpotent witness {element} | D({element}) = {image}"
                )
            }
            NilpotencyVerdict::Inconclusive { bound } => write!(f, "inconclusive bound={bound}"),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DegreeReport {
    pub element: Polynomial,
    pub degree: usize,
}

impl Derivation {
    /// Checks that every defining relation is sent into the defining ideal.
    pub fn new(algebra: &PresentedAlgebra, images: Vec<Polynomial>) -> Result<Self> {
        let ring = algebra.ring();
        if images.len() != ring.nvars() {
            return Err(Error::SizeMismatch {
                expected: ring.nvars(),
                got: images.len(),
            });
        }
        for img in &images {
            if !crate::poly::same_ring(img.ring(), ring) {
                return Err(Error::RingMismatch {
                    left: ring.names().join(","),
                    right: img.ring().names().join(","),
                });
            }
        }
        let d = Derivation {
            algebra: algebra.clone(),
            images,
        };
        for r in algebra.relations() {
            let img = d.derive_raw(r);
            if !algebra.is_zero(&img)? {
                return Err(Error::precondition(format!(
                    "not well defined: D({r}) = {img} is not in the defining ideal"
                )));
            }
        }
        Ok(d)
    }

    /// Images by variable name; unnamed variables go to zero.
    pub fn from_named(algebra: &PresentedAlgebra, images: &[(&str, &str)]) -> Result<Self> {
        let ring = algebra.ring();
        let mut imgs = vec![Polynomial::zero(ring); ring.nvars()];
        for (v, text) in images {
            imgs[ring.var_index(v)?] = Polynomial::parse(ring, text)?;
        }
        Derivation::new(algebra, imgs)
    }

    pub fn algebra(&self) -> &PresentedAlgebra {
        &self.algebra
    }

    pub fn ring(&self) -> &Arc<Ring> {
        self.algebra.ring()
    }

    pub fn images(&self) -> &[Polynomial] {
        &self.images
    }

    pub fn image_of(&self, name: &str) -> Result<&Polynomial> {
        Ok(&self.images[self.ring().var_index(name)?])
    }

    fn derive_raw(&self, a: &Polynomial) -> Polynomial {
        let mut out = Polynomial::zero(a.ring());
        for v in a.variables() {
            if !self.images[v].is_zero() {
                out = &out + &(&a.derivative(v) * &self.images[v]);
            }
        }
        out
    }

    /// Leibniz extension followed by reduction modulo the defining ideal.
    pub fn derive(&self, a: &Polynomial) -> Result<Polynomial> {
        self.check_ring(a)?;
        self.algebra.reduce(&self.derive_raw(a))
    }

    fn check_ring(&self, a: &Polynomial) -> Result<()> {
        if crate::poly::same_ring(a.ring(), self.ring()) {
            Ok(())
        } else {
            Err(Error::RingMismatch {
                left: self.ring().names().join(","),
                right: a.ring().names().join(","),
            })
        }
    }

    /// `a, D(a), D²(a), ...` up to the last nonzero term, or `None` if the
    /// chain is still alive after `bound` applications.
    pub fn chain(&self, a: &Polynomial, bound: usize) -> Result<Option<Vec<Polynomial>>> {
        self.check_ring(a)?;
        let mut cur = self.algebra.reduce(a)?;
        let mut out = Vec::new();
        for _ in 0..=bound {
            if cur.is_zero() {
                return Ok(Some(out));
            }
            let next = self.derive(&cur)?;
            out.push(cur);
            cur = next;
        }
        Ok(None)
    }

    /// `deg_D(a) = max{k : D^k(a) != 0}`.
    pub fn degree(&self, a: &Polynomial, bound: usize) -> Result<DegreeReport> {
        match self.chain(a, bound)? {
            Some(c) if c.is_empty() => Err(Error::precondition("degree of the zero element")),
            Some(c) => Ok(DegreeReport {
                element: a.clone(),
                degree: c.len() - 1,
            }),
            None => Err(Error::BudgetExceeded {
                what: "derivation chain length",
                limit: bound,
            }),
        }
    }

    pub fn kernel_member(&self, a: &Polynomial) -> Result<bool> {
        Ok(self.derive(a)?.is_zero())
    }

    /// Divisibility witness `a | D(a)`, `D(a) != 0`, which rules out nilpotency.
    fn divisibility_witness(&self, a: &Polynomial) -> Result<Option<Polynomial>> {
        let da = self.derive(a)?;
        if da.is_zero() {
            return Ok(None);
        }
        let principal = self
            .algebra
            .ideal()
            .with_generators(std::slice::from_ref(a));
        Ok(if principal.contains(&da)? {
            Some(da)
        } else {
            None
        })
    }

    pub fn lnd_check(&self, bound: usize) -> Result<NilpotencyVerdict> {
        let ring = self.ring().clone();
        for v in 0..ring.nvars() {
            let a = Polynomial::var_index(&ring, v);
            if let Some(da) = self.divisibility_witness(&a)? {
                return Ok(NilpotencyVerdict::NotNilpotent {
                    element: a.to_string(),
                    image: da.to_string(),
                });
            }
        }
        let mut degrees = Vec::with_capacity(ring.nvars());
        for v in 0..ring.nvars() {
            let a = Polynomial::var_index(&ring, v);
            match self.chain(&a, bound)? {
                Some(c) => degrees.push((ring.names()[v].clone(), c.len().saturating_sub(1))),
                None => return Ok(NilpotencyVerdict::Inconclusive { bound }),
            }
        }
        Ok(NilpotencyVerdict::NilpotentCertified { degrees })
    }

    /// `exp(tD)(a) = Σ t^k D^k(a) / k!` over the ring extended by a fresh `t`.
    pub fn exp_action(&self, t: &str, a: &Polynomial, bound: usize) -> Result<Polynomial> {
        let chain = self.chain(a, bound)?.ok_or(Error::BudgetExceeded {
            what: "derivation chain length",
            limit: bound,
        })?;
        let ring_t = self.exp_ring(t)?;
        let tv = Polynomial::var(&ring_t, t)?;
        let mut out = Polynomial::zero(&ring_t);
        let mut fact = BigInt::from(1);
        for (k, term) in chain.iter().enumerate() {
            if k > 0 {
                fact *= BigInt::from(k);
            }
            let c = Rational::new(BigInt::from(1), fact.clone());
            out = &out + &(&tv.pow(k as u32) * &term.embed(&ring_t)?).scale(&c);
        }
        Ok(out)
    }

    /// The ring the exponential lives in: the algebra's ring plus `t`.
    pub fn exp_ring(&self, t: &str) -> Result<Arc<Ring>> {
        if self.ring().index_of(t).is_some() {
            return Err(Error::precondition(format!(
                "`{t}` is already a ring variable"
            )));
        }
        self.ring().extend(&[t])
    }

    /// Defining ideal over [`Derivation::exp_ring`].
    pub fn exp_algebra(&self, t: &str) -> Result<PresentedAlgebra> {
        let ring_t = self.exp_ring(t)?;
        PresentedAlgebra::new(self.algebra.ideal().embed(&ring_t)?)
    }

    /// Same kernel on the supplied generating sets: each derivation kills the
    /// other's kernel generators.
    pub fn kernels_agree(
        &self,
        other: &Derivation,
        own_kernel: &[Polynomial],
        other_kernel: &[Polynomial],
    ) -> Result<bool> {
        for a in own_kernel {
            if !self.kernel_member(a)? || !other.kernel_member(a)? {
                return Ok(false);
            }
        }
        for a in other_kernel {
            if !self.kernel_member(a)? || !other.kernel_member(a)? {
                return Ok(false);
            }
        }
        Ok(true)
    }
}

impl fmt::Display for Derivation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let names = self.ring().names();
        write!(f, "{{")?;
        for (i, (n, img)) in names.iter().zip(&self.images).enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{n} -> {img}")?;
        }
        write!(f, "}}")
    }
}

/// `D(g) = det J(relations, a1, a2, g)` with columns `vars`; variables outside
/// `vars` are parameters and are sent to zero.
pub fn jacobian_type(
    algebra: &PresentedAlgebra,
    relations: &[Polynomial],
    vars: &[usize],
    a1: &Polynomial,
    a2: &Polynomial,
) -> Result<Derivation> {
    if relations.len() + 3 != vars.len() {
        return Err(Error::precondition(format!(
            "{} relations need {} Jacobian variables, got {}",
            relations.len(),
            relations.len() + 3,
            vars.len()
        )));
    }
    let ring = algebra.ring();
    let mut rows: Vec<Polynomial> = relations.to_vec();
    rows.push(a1.clone());
    rows.push(a2.clone());
    let mut images = vec![Polynomial::zero(ring); ring.nvars()];
    for &v in vars {
        let mut r = rows.clone();
        r.push(Polynomial::var_index(ring, v));
        images[v] = algebra.reduce(&jacobian_determinant(&r, vars)?)?;
    }
    Derivation::new(algebra, images)
}

/// Jacobian-type derivation of the graded family algebra in `x, y, z, v_1..v_m`.
pub fn jacobian_derivation(
    gp: &GradedPresentation,
    a1: &Polynomial,
    a2: &Polynomial,
) -> Result<Derivation> {
    let alg = gp.graded();
    let ring = alg.ring();
    let m = (1..)
        .take_while(|i| ring.index_of(&format!("v{i}")).is_some())
        .count();
    let shape_ok = ["x", "y", "z"].iter().all(|v| ring.index_of(v).is_some())
        && m >= 2
        && ring.nvars() == m + 3
        && alg.relations().len() == m;
    if !shape_ok {
        return Err(Error::precondition(
            "graded presentation is not of family shape (x, y, z, v1..vm with m relations)",
        ));
    }
    let vars: Vec<usize> = (0..ring.nvars()).collect();
    jacobian_type(alg, alg.relations(), &vars, a1, a2)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::grading::{convention51_weights, graded_ideal};
    use crate::ideal::Ideal;

    fn danielewski() -> (Arc<Ring>, Derivation) {
        let r = Ring::new(&["x", "y", "z"]).unwrap();
        let alg = PresentedAlgebra::new(Ideal::parse(&r, &["x*z - y^2 + y"]).unwrap()).unwrap();
        let d = Derivation::from_named(&alg, &[("y", "x"), ("z", "2*y - 1")]).unwrap();
        (r, d)
    }

    fn p(r: &Arc<Ring>, s: &str) -> Polynomial {
        Polynomial::parse(r, s).unwrap()
    }

    #[test]
    fn danielewski_derivation() {
        let (r, d) = danielewski();
        assert!(d.derive(&p(&r, "x*z - y^2 + y")).unwrap().is_zero());
        assert!(d.derive(&p(&r, "7")).unwrap().is_zero());
        let v = d.lnd_check(DEFAULT_CHAIN_BOUND).unwrap();
        assert_eq!(
            v,
            NilpotencyVerdict::NilpotentCertified {
                degrees: vec![("x".into(), 0), ("y".into(), 1), ("z".into(), 2)]
            }
        );
        assert_eq!(d.degree(&p(&r, "z"), 32).unwrap().degree, 2);
        assert_eq!(d.degree(&p(&r, "y"), 32).unwrap().degree, 1);
        assert_eq!(d.degree(&p(&r, "5"), 32).unwrap().degree, 0);
        assert!(d.kernel_member(&p(&r, "x")).unwrap());
        assert!(!d.kernel_member(&p(&r, "y")).unwrap());
        assert!(d.kernel_member(&p(&r, "1")).unwrap());
    }

    #[test]
    fn danielewski_exponential() {
        let (r, d) = danielewski();
        let e = d.exp_action("t", &p(&r, "y"), 32).unwrap();
        assert_eq!(e, Polynomial::parse(e.ring(), "y + t*x").unwrap());
        let rel = d.exp_action("t", &p(&r, "x*z - y^2 + y"), 32).unwrap();
        assert!(d.exp_algebra("t").unwrap().is_zero(&rel).unwrap());
        // the images of the generators satisfy the relation
        let ex = d.exp_action("t", &p(&r, "x"), 32).unwrap();
        let ey = d.exp_action("t", &p(&r, "y"), 32).unwrap();
        let ez = d.exp_action("t", &p(&r, "z"), 32).unwrap();
        let rel = &(&(&ex * &ez) - &ey.pow(2)) + &ey;
        assert!(d.exp_algebra("t").unwrap().is_zero(&rel).unwrap());
    }

    #[test]
    fn partial_z_and_euler() {
        let r = Ring::new(&["x", "y", "z"]).unwrap();
        let alg = PresentedAlgebra::polynomial_ring(&r);
        let dz = Derivation::from_named(&alg, &[("z", "1")]).unwrap();
        assert_eq!(dz.derive(&p(&r, "z^2")).unwrap(), p(&r, "2*z"));
        let e = dz.exp_action("t", &p(&r, "z"), 8).unwrap();
        assert_eq!(e, Polynomial::parse(e.ring(), "z + t").unwrap());

        let r = Ring::new(&["x"]).unwrap();
        let euler =
            Derivation::from_named(&PresentedAlgebra::polynomial_ring(&r), &[("x", "x")]).unwrap();
        assert!(matches!(
            euler.lnd_check(32).unwrap(),
            NilpotencyVerdict::NotNilpotent { ref element, .. } if element == "x"
        ));
        assert!(matches!(
            euler.degree(&p(&r, "x"), 32),
            Err(Error::BudgetExceeded { .. })
        ));
    }

    #[test]
    fn ill_defined_rejected() {
        let r = Ring::new(&["x", "y", "z"]).unwrap();
        let alg = PresentedAlgebra::new(Ideal::parse(&r, &["x*z - y^2 + y"]).unwrap()).unwrap();
        assert!(matches!(
            Derivation::from_named(&alg, &[("y", "1")]),
            Err(Error::Precondition(_))
        ));
    }

    fn family_graded() -> (Arc<Ring>, GradedPresentation) {
        let r = Ring::new(&["x", "y", "z", "v1", "v2"]).unwrap();
        let w = convention51_weights(&r, 3, 2, &[2], &[], 60).unwrap();
        let alg =
            PresentedAlgebra::new(Ideal::parse(&r, &["x*v1 - y^3 + z^2", "x*v2 - v1^2"]).unwrap())
                .unwrap();
        (r, graded_ideal(&alg, &w).unwrap())
    }

    #[test]
    fn jacobian_pairs() {
        let (r, gp) = family_graded();
        let x = p(&r, "x");
        let d = jacobian_derivation(&gp, &x, &p(&r, "y")).unwrap();
        assert!(d.kernel_member(&x).unwrap());
        assert!(d.kernel_member(&p(&r, "y")).unwrap());
        assert!(d.lnd_check(32).unwrap().is_certified());

        let d = jacobian_derivation(&gp, &p(&r, "y"), &p(&r, "z")).unwrap();
        let dx = d.derive(&x).unwrap();
        assert!(dx.scalar_ratio(&p(&r, "x^2")).is_some());
        assert!(d.lnd_check(32).unwrap().is_refuted());

        let d = jacobian_derivation(&gp, &p(&r, "y"), &p(&r, "v1")).unwrap();
        assert!(d.derive(&x).unwrap().scalar_ratio(&p(&r, "x*z")).is_some());
    }
}
