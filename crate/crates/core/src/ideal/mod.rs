//! Ideals, Gröbner bases and the ideal-theoretic predicates built on them.

mod groebner;
mod order;
mod sequences;

pub use groebner::Budget;
pub use order::MonomialOrder;
pub use sequences::{
    generic_semiregular_extension, gradient_generic_independence, is_regular_sequence,
    is_semiregular_sequence,
};

use std::collections::HashMap;
use std::fmt;
use std::sync::{Arc, RwLock};

use groebner::SortedPoly;

use crate::error::{Error, Result};
use crate::poly::{Polynomial, Ring};

struct Basis {
    polys: Vec<Polynomial>,
    sorted: Vec<SortedPoly>,
}

type BasisCache = Arc<RwLock<HashMap<MonomialOrder, Arc<Basis>>>>;

/// An ideal given by generators, with a per-order Gröbner basis cache.
///
/// Clones share the cache; it only ever holds bases of the same ideal.
#[derive(Clone)]
pub struct Ideal {
    ring: Arc<Ring>,
    gens: Vec<Polynomial>,
    budget: Budget,
    cache: BasisCache,
}

impl fmt::Debug for Ideal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self)
    }
}

impl fmt::Display for Ideal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.gens.iter().map(|g| g.to_string()).collect();
        write!(f, "({})", parts.join(", "))
    }
}

impl Ideal {
    /// Zero generators are dropped.
    pub fn new(ring: &Arc<Ring>, gens: Vec<Polynomial>) -> Self {
        Ideal {
            ring: ring.clone(),
            gens: gens.into_iter().filter(|g| !g.is_zero()).collect(),
            budget: Budget::default(),
            cache: Arc::default(),
        }
    }

    pub fn parse(ring: &Arc<Ring>, gens: &[&str]) -> Result<Self> {
        let polys = gens
            .iter()
            .map(|s| Polynomial::parse(ring, s))
            .collect::<Result<Vec<_>>>()?;
        Ok(Ideal::new(ring, polys))
    }

    pub fn zero(ring: &Arc<Ring>) -> Self {
        Ideal::new(ring, Vec::new())
    }

    pub fn with_budget(mut self, budget: Budget) -> Self {
        if budget != self.budget {
            self.budget = budget;
            self.cache = Arc::default();
        }
        self
    }

    /// A new ideal in the same ring sharing this one's budget.
    pub fn derive(&self, gens: Vec<Polynomial>) -> Ideal {
        Ideal::new(&self.ring, gens).with_budget(self.budget)
    }

    pub fn ring(&self) -> &Arc<Ring> {
        &self.ring
    }

    pub fn generators(&self) -> &[Polynomial] {
        &self.gens
    }

    pub fn budget(&self) -> Budget {
        self.budget
    }

    fn check(&self, p: &Polynomial) -> Result<()> {
        if crate::poly::same_ring(&self.ring, p.ring()) {
            Ok(())
        } else {
            Err(Error::RingMismatch {
                left: self.ring.names().join(","),
                right: p.ring().names().join(","),
            })
        }
    }

    fn basis(&self, order: &MonomialOrder) -> Result<Arc<Basis>> {
        if let Some(b) = self.cache.read().expect("cache lock").get(order) {
            return Ok(b.clone());
        }
        let out = groebner::buchberger(&self.ring, &self.gens, order, &self.budget, false)?;
        let polys = out.basis.iter().map(|s| s.to_poly(&self.ring)).collect();
        let b = Arc::new(Basis {
            polys,
            sorted: out.basis,
        });
        self.cache
            .write()
            .expect("cache lock")
            .entry(order.clone())
            .or_insert_with(|| b.clone());
        Ok(b)
    }

    /// Reduced Gröbner basis, sorted by decreasing leading monomial.
    pub fn groebner_basis(&self, order: &MonomialOrder) -> Result<Vec<Polynomial>> {
        Ok(self.basis(order)?.polys.clone())
    }

    pub fn normal_form(&self, p: &Polynomial, order: &MonomialOrder) -> Result<Polynomial> {
        self.check(p)?;
        let b = self.basis(order)?;
        groebner::normal_form(p, &b.sorted, order, &self.budget)
    }

    /// Normal form under graded reverse lexicographic order.
    pub fn reduce(&self, p: &Polynomial) -> Result<Polynomial> {
        self.normal_form(p, &MonomialOrder::DegRevLex)
    }

    pub fn contains(&self, p: &Polynomial) -> Result<bool> {
        Ok(self.reduce(p)?.is_zero())
    }

    /// Cofactors `c` with `p = Σ c[i] * generators()[i]`, or `None` if `p ∉ I`.
    pub fn lift(&self, p: &Polynomial) -> Result<Option<Vec<Polynomial>>> {
        self.check(p)?;
        let order = MonomialOrder::DegRevLex;
        let out = groebner::buchberger(&self.ring, &self.gens, &order, &self.budget, true)?;
        let (quot, rem) = groebner::divide(p, &out.basis, &order, &self.budget)?;
        if !rem.is_zero() {
            return Ok(None);
        }
        let cof = out.cofactors.expect("tracked");
        let mut result = vec![Polynomial::zero(&self.ring); self.gens.len()];
        for (q, row) in quot.iter().zip(&cof) {
            if q.is_zero() {
                continue;
            }
            for (acc, c) in result.iter_mut().zip(row) {
                *acc = &*acc + &(q * c);
            }
        }
        Ok(Some(result))
    }

    pub fn is_unit(&self) -> Result<bool> {
        let b = self.basis(&MonomialOrder::DegRevLex)?;
        Ok(b.polys.len() == 1 && b.polys[0].is_constant())
    }

    /// `other ⊆ self`.
    pub fn contains_ideal(&self, other: &Ideal) -> Result<bool> {
        for g in &other.gens {
            if !self.contains(g)? {
                return Ok(false);
            }
        }
        Ok(true)
    }

    pub fn equals(&self, other: &Ideal) -> Result<bool> {
        if !crate::poly::same_ring(&self.ring, &other.ring) {
            return Err(Error::RingMismatch {
                left: self.ring.names().join(","),
                right: other.ring.names().join(","),
            });
        }
        Ok(self.contains_ideal(other)? && other.contains_ideal(self)?)
    }

    pub fn sum(&self, other: &Ideal) -> Ideal {
        let mut gens = self.gens.clone();
        gens.extend(other.gens.iter().cloned());
        self.derive(gens)
    }

    pub fn with_generators(&self, extra: &[Polynomial]) -> Ideal {
        let mut gens = self.gens.clone();
        gens.extend(extra.iter().cloned());
        self.derive(gens)
    }

    pub fn product(&self, other: &Ideal) -> Ideal {
        let mut gens = Vec::new();
        for a in &self.gens {
            for b in &other.gens {
                gens.push(a * b);
            }
        }
        self.derive(gens)
    }

    pub fn power(&self, n: u32) -> Result<Ideal> {
        let mut acc = self.derive(vec![Polynomial::one(&self.ring)]);
        for _ in 0..n {
            acc = acc.product(self).minimal_generators()?;
        }
        Ok(acc)
    }

    /// Moves the ideal into a ring containing all variables of this one.
    pub fn embed(&self, target: &Arc<Ring>) -> Result<Ideal> {
        let gens = self
            .gens
            .iter()
            .map(|g| g.embed(target))
            .collect::<Result<Vec<_>>>()?;
        Ok(Ideal::new(target, gens).with_budget(self.budget))
    }

    /// `I ∩ Q[remaining variables]`, expressed in the same ring.
    pub fn eliminate(&self, drop: &[usize]) -> Result<Ideal> {
        if drop.is_empty() {
            return Ok(self.clone());
        }
        let order = MonomialOrder::elimination(self.ring.nvars(), drop);
        let gb = self.groebner_basis(&order)?;
        let kept = gb
            .into_iter()
            .filter(|g| g.variables().iter().all(|v| !drop.contains(v)))
            .collect();
        Ok(self.derive(kept))
    }

    pub fn eliminate_names(&self, drop: &[&str]) -> Result<Ideal> {
        let idx = drop
            .iter()
            .map(|n| self.ring.var_index(n))
            .collect::<Result<Vec<_>>>()?;
        self.eliminate(&idx)
    }

    /// Eliminates every variable not in `target` and moves the result there.
    pub fn eliminate_into(&self, target: &Arc<Ring>) -> Result<Ideal> {
        let drop: Vec<usize> = (0..self.ring.nvars())
            .filter(|&i| target.index_of(&self.ring.names()[i]).is_none())
            .collect();
        self.eliminate(&drop)?.embed(target)
    }

    pub fn intersect(&self, other: &Ideal) -> Result<Ideal> {
        let t = self.ring.fresh_name("t");
        let big = self.ring.extend(&[t.as_str()])?;
        let tv = Polynomial::var(&big, &t)?;
        let one_minus_t = &Polynomial::one(&big) - &tv;
        let mut gens = Vec::new();
        for g in &self.gens {
            gens.push(&tv * &g.embed(&big)?);
        }
        for g in &other.gens {
            gens.push(&one_minus_t * &g.embed(&big)?);
        }
        let tidx = big.nvars() - 1;
        let elim = Ideal::new(&big, gens)
            .with_budget(self.budget)
            .eliminate(&[tidx])?;
        elim.embed_back(&self.ring)
    }

    fn embed_back(&self, target: &Arc<Ring>) -> Result<Ideal> {
        self.embed(target)
    }

    /// `I : f = { a | a f ∈ I }`.
    pub fn colon(&self, f: &Polynomial) -> Result<Ideal> {
        self.check(f)?;
        if f.is_zero() {
            return Err(Error::ZeroPolynomial("colon_ideal"));
        }
        let principal = self.derive(vec![f.clone()]);
        let meet = self.intersect(&principal)?;
        let mut gens = Vec::with_capacity(meet.gens.len());
        for g in &meet.gens {
            let q = g
                .exact_div(f)?
                .ok_or_else(|| Error::invariant("element of I ∩ (f) not divisible by f"))?;
            gens.push(q);
        }
        Ok(self.derive(gens))
    }

    /// Krull dimension of the quotient ring; `-1` for the unit ideal.
    pub fn dimension(&self) -> Result<i64> {
        let b = self.basis(&MonomialOrder::DegRevLex)?;
        if b.polys.len() == 1 && b.polys[0].is_constant() {
            return Ok(-1);
        }
        let n = self.ring.nvars();
        if n > 24 {
            return Err(Error::precondition(
                "too many variables for subset enumeration",
            ));
        }
        // Each leading monomial as a bitmask of its support.
        let masks: Vec<u32> = b
            .sorted
            .iter()
            .map(|s| s.lm().support().fold(0u32, |acc, i| acc | (1 << i)))
            .collect();
        let mut best = 0;
        for set in 0u32..(1u32 << n) {
            let size = set.count_ones() as i64;
            if size <= best {
                continue;
            }
            // `set` is independent if no leading monomial is supported inside it.
            if masks.iter().all(|&m| m & !set != 0) {
                best = size;
            }
        }
        Ok(best)
    }

    /// Drops generators already contained in the ideal of the others.
    pub fn minimal_generators(&self) -> Result<Ideal> {
        let mut gens: Vec<Polynomial> = self.gens.clone();
        let mut i = 0;
        while i < gens.len() {
            let others: Vec<Polynomial> = gens
                .iter()
                .enumerate()
                .filter(|(j, _)| *j != i)
                .map(|(_, g)| g.clone())
                .collect();
            if self.derive(others).contains(&gens[i])? {
                gens.remove(i);
            } else {
                i += 1;
            }
        }
        Ok(self.derive(gens))
    }
}

/// A finitely presented algebra `Q[vars] / I`.
#[derive(Clone, Debug)]
pub struct PresentedAlgebra {
    ideal: Ideal,
}

impl PresentedAlgebra {
    /// Rejects the unit ideal; use [`PresentedAlgebra::zero_algebra`] for that.
    pub fn new(ideal: Ideal) -> Result<Self> {
        if ideal.is_unit()? {
            return Err(Error::precondition("defining ideal is the unit ideal"));
        }
        Ok(PresentedAlgebra { ideal })
    }

    pub fn zero_algebra(ring: &Arc<Ring>) -> Self {
        PresentedAlgebra {
            ideal: Ideal::new(ring, vec![Polynomial::one(ring)]),
        }
    }

    pub fn polynomial_ring(ring: &Arc<Ring>) -> Self {
        PresentedAlgebra {
            ideal: Ideal::zero(ring),
        }
    }

    pub fn ring(&self) -> &Arc<Ring> {
        self.ideal.ring()
    }

    pub fn ideal(&self) -> &Ideal {
        &self.ideal
    }

    pub fn relations(&self) -> &[Polynomial] {
        self.ideal.generators()
    }

    pub fn reduce(&self, p: &Polynomial) -> Result<Polynomial> {
        self.ideal.reduce(p)
    }

    pub fn is_zero(&self, p: &Polynomial) -> Result<bool> {
        self.ideal.contains(p)
    }

    pub fn dimension(&self) -> Result<i64> {
        self.ideal.dimension()
    }

    pub fn parse(&self, text: &str) -> Result<Polynomial> {
        Polynomial::parse(self.ring(), text)
    }
}

impl fmt::Display for PresentedAlgebra {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.ideal.generators().is_empty() {
            write!(f, "{}", self.ring())
        } else {
            write!(f, "{}/{}", self.ring(), self.ideal)
        }
    }
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

    #[test]
    fn groebner_examples() {
        let r = ring(&["x", "y", "z"]);
        let i = Ideal::parse(&r, &["x*z - y^2 + y"]).unwrap();
        let gb = i.groebner_basis(&MonomialOrder::Lex).unwrap();
        assert_eq!(gb, vec![p(&r, "x*z - y^2 + y")]);

        let r2 = ring(&["x", "y"]);
        let i = Ideal::parse(&r2, &["x", "y^2 - y"]).unwrap();
        assert_eq!(
            i.groebner_basis(&MonomialOrder::Lex).unwrap(),
            vec![p(&r2, "x"), p(&r2, "y^2 - y")]
        );
        // one S-polynomial: y*(xy - 1) - x*(y^2 - 1) = x - y
        let i = Ideal::parse(&r2, &["x*y - 1", "y^2 - 1"]).unwrap();
        assert_eq!(
            i.groebner_basis(&MonomialOrder::Lex).unwrap(),
            vec![p(&r2, "x - y"), p(&r2, "y^2 - 1")]
        );
    }

    #[test]
    fn normal_forms() {
        let r = ring(&["x", "y", "z"]);
        let i = Ideal::parse(&r, &["x*z - y^2 + y"]).unwrap();
        assert_eq!(
            i.normal_form(&p(&r, "x*z"), &MonomialOrder::Lex).unwrap(),
            p(&r, "y^2 - y")
        );
        assert!(i.reduce(&p(&r, "x*z - y^2 + y")).unwrap().is_zero());

        let r = ring(&["y", "x", "u"]);
        let i = Ideal::parse(&r, &["x*u - y"]).unwrap();
        assert_eq!(
            i.normal_form(&p(&r, "y"), &MonomialOrder::Lex).unwrap(),
            p(&r, "x*u")
        );
    }

    #[test]
    fn membership_examples() {
        let r = ring(&["x", "y"]);
        let i = Ideal::parse(&r, &["x", "y^2 - y"]).unwrap();
        assert!(i.contains(&p(&r, "y^2 - y")).unwrap());
        assert!(!i.contains(&p(&r, "y")).unwrap());
        // evaluation witness: generators vanish at (0, 1) but y does not
        let pt = [crate::poly::rat(0), crate::poly::rat(1)];
        assert!(i
            .generators()
            .iter()
            .all(|g| g.evaluate(&pt) == crate::poly::rat(0)));
    }

    #[test]
    fn equality_and_units() {
        let r = ring(&["x", "y"]);
        let a = Ideal::parse(&r, &["x", "y^2 - y"]).unwrap();
        let b = Ideal::parse(&r, &["x", "y^2 - y", "x*y"]).unwrap();
        assert!(a.equals(&b).unwrap());
        assert!(Ideal::parse(&r, &["x - 1", "x"])
            .unwrap()
            .is_unit()
            .unwrap());
        let c = Ideal::parse(&r, &["x^2", "y^2"]).unwrap();
        let d = Ideal::parse(&r, &["x", "y"]).unwrap();
        assert!(!c.equals(&d).unwrap());
    }

    #[test]
    fn elimination_examples() {
        let r = ring(&["x", "y", "z"]);
        let i = Ideal::parse(&r, &["x", "x*z - y^2 + y"]).unwrap();
        let e = i.eliminate_names(&["z"]).unwrap();
        assert!(e
            .equals(&Ideal::parse(&r, &["x", "y^2 - y"]).unwrap())
            .unwrap());

        let r = ring(&["x", "y", "u"]);
        let i = Ideal::parse(&r, &["x*u - y"]).unwrap();
        assert!(i.eliminate_names(&["u"]).unwrap().generators().is_empty());
        assert!(i.eliminate(&[]).unwrap().equals(&i).unwrap());
    }

    #[test]
    fn colon_examples() {
        let r = ring(&["x", "y"]);
        let x = p(&r, "x");
        let c = Ideal::parse(&r, &["x^2"]).unwrap().colon(&x).unwrap();
        assert!(c.equals(&Ideal::parse(&r, &["x"]).unwrap()).unwrap());
        let c = Ideal::parse(&r, &["x^2", "x*y"])
            .unwrap()
            .colon(&x)
            .unwrap();
        assert!(c.equals(&Ideal::parse(&r, &["x", "y"]).unwrap()).unwrap());
        let c = Ideal::parse(&r, &["x"])
            .unwrap()
            .colon(&p(&r, "y"))
            .unwrap();
        assert!(c.equals(&Ideal::parse(&r, &["x"]).unwrap()).unwrap());
        assert!(Ideal::zero(&r).colon(&Polynomial::zero(&r)).is_err());
    }

    #[test]
    fn dimension_examples() {
        let r = ring(&["x", "y", "z"]);
        assert_eq!(
            Ideal::parse(&r, &["x", "y^3 - z^2"])
                .unwrap()
                .dimension()
                .unwrap(),
            1
        );
        assert_eq!(Ideal::zero(&r).dimension().unwrap(), 3);
        assert_eq!(
            Ideal::parse(&r, &["x - 1", "x"])
                .unwrap()
                .dimension()
                .unwrap(),
            -1
        );
    }

    #[test]
    fn lift_gives_certificate() {
        let r = ring(&["x", "y"]);
        let i = Ideal::parse(&r, &["x*y - 1", "y^2 - 1"]).unwrap();
        let target = p(&r, "x - y");
        let cof = i.lift(&target).unwrap().unwrap();
        let recombined = cof
            .iter()
            .zip(i.generators())
            .fold(Polynomial::zero(&r), |acc, (c, g)| acc + c * g);
        assert_eq!(recombined, target);
        assert!(i.lift(&p(&r, "x")).unwrap().is_none());
    }

    #[test]
    fn budget_exhaustion_is_an_error() {
        let r = ring(&["x", "y", "z"]);
        let i = Ideal::parse(&r, &["x^3 - y*z", "y^3 - x*z", "z^3 - x*y"])
            .unwrap()
            .with_budget(Budget {
                max_basis: 4_000,
                max_steps: 3,
            });
        assert!(matches!(
            i.groebner_basis(&MonomialOrder::Lex),
            Err(Error::BudgetExceeded { .. })
        ));
    }
}
