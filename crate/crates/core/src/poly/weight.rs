use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Neg, Sub};
use std::sync::Arc;

use serde::{Deserialize, Serialize};

use super::{Monomial, Polynomial, Ring};
use crate::error::{Error, Result};

/// Integer weight vector compared lexicographically.
///
/// Lexicographically ordered `Z^r` is a totally ordered abelian group, which is
/// all the structure real weights with independence conditions ever use here.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct WeightVector(pub Vec<i64>);

impl WeightVector {
    pub fn zero(levels: usize) -> Self {
        WeightVector(vec![0; levels])
    }

    pub fn levels(&self) -> usize {
        self.0.len()
    }

    pub fn scale(&self, k: i64) -> Self {
        WeightVector(self.0.iter().map(|a| a * k).collect())
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(|&a| a == 0)
    }

    pub fn is_positive(&self) -> bool {
        *self > WeightVector::zero(self.levels())
    }

    pub fn is_negative(&self) -> bool {
        *self < WeightVector::zero(self.levels())
    }
}

impl PartialOrd for WeightVector {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for WeightVector {
    fn cmp(&self, other: &Self) -> Ordering {
        self.0.cmp(&other.0)
    }
}

impl Add for &WeightVector {
    type Output = WeightVector;
    fn add(self, rhs: &WeightVector) -> WeightVector {
        WeightVector(self.0.iter().zip(&rhs.0).map(|(a, b)| a + b).collect())
    }
}

impl Sub for &WeightVector {
    type Output = WeightVector;
    fn sub(self, rhs: &WeightVector) -> WeightVector {
        WeightVector(self.0.iter().zip(&rhs.0).map(|(a, b)| a - b).collect())
    }
}

impl Neg for &WeightVector {
    type Output = WeightVector;
    fn neg(self) -> WeightVector {
        self.scale(-1)
    }
}

impl fmt::Display for WeightVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(|a| a.to_string()).collect();
        write!(f, "({})", parts.join(","))
    }
}

/// Per-variable weights defining a weight degree function on a ring.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WeightFunction {
    ring: Arc<Ring>,
    weights: Vec<WeightVector>,
}

impl WeightFunction {
    pub fn new(ring: &Arc<Ring>, weights: Vec<WeightVector>) -> Result<Self> {
        if weights.len() != ring.nvars() {
            return Err(Error::SizeMismatch {
                expected: ring.nvars(),
                got: weights.len(),
            });
        }
        let levels = weights.first().map(WeightVector::levels).unwrap_or(1);
        if levels == 0 || weights.iter().any(|w| w.levels() != levels) {
            return Err(Error::precondition(
                "weight vectors must share one positive length",
            ));
        }
        Ok(WeightFunction {
            ring: ring.clone(),
            weights,
        })
    }

    /// Builds weights from `(variable, vector)` pairs; unnamed variables get weight zero.
    pub fn from_named(ring: &Arc<Ring>, named: &[(&str, Vec<i64>)]) -> Result<Self> {
        let levels = named.first().map(|(_, v)| v.len()).unwrap_or(1);
        let mut weights = vec![WeightVector::zero(levels); ring.nvars()];
        for (name, v) in named {
            weights[ring.var_index(name)?] = WeightVector(v.clone());
        }
        Self::new(ring, weights)
    }

    pub fn ring(&self) -> &Arc<Ring> {
        &self.ring
    }

    pub fn levels(&self) -> usize {
        self.weights[0].levels()
    }

    pub fn weight(&self, idx: usize) -> &WeightVector {
        &self.weights[idx]
    }

    pub fn weight_of(&self, name: &str) -> Result<&WeightVector> {
        Ok(&self.weights[self.ring.var_index(name)?])
    }

    pub fn weights(&self) -> &[WeightVector] {
        &self.weights
    }

    /// Integer matrix with one row per variable.
    pub fn matrix(&self) -> Vec<Vec<i64>> {
        self.weights.iter().map(|w| w.0.clone()).collect()
    }

    /// Rows indexed by level, columns by variable; the form used by weight orders.
    pub fn level_rows(&self) -> Vec<Vec<i64>> {
        (0..self.levels())
            .map(|l| self.weights.iter().map(|w| w.0[l]).collect())
            .collect()
    }

    /// The same weights moved to a ring containing this one's variables;
    /// variables not present here receive weight zero.
    pub fn embed(&self, target: &Arc<Ring>) -> Result<Self> {
        let mut weights = vec![WeightVector::zero(self.levels()); target.nvars()];
        for (i, name) in self.ring.names().iter().enumerate() {
            weights[target.var_index(name)?] = self.weights[i].clone();
        }
        Self::new(target, weights)
    }

    pub fn monomial_weight(&self, m: &Monomial) -> WeightVector {
        let mut acc = vec![0i64; self.levels()];
        for i in m.support() {
            let e = m.exponent(i) as i64;
            for (a, w) in acc.iter_mut().zip(&self.weights[i].0) {
                *a += e * w;
            }
        }
        WeightVector(acc)
    }

    /// Maximum monomial weight of `p`.
    pub fn degree(&self, p: &Polynomial) -> Result<WeightVector> {
        self.check(p)?;
        p.terms()
            .map(|(m, _)| self.monomial_weight(m))
            .max()
            .ok_or(Error::ZeroPolynomial("weight_degree"))
    }

    /// Sum of the terms of maximal weight.
    pub fn principal_component(&self, p: &Polynomial) -> Result<Polynomial> {
        let top = self.degree(p)?;
        Ok(p.filter_terms(|m| self.monomial_weight(m) == top))
    }

    /// Terms of `p` whose weight equals `w`.
    pub fn component(&self, p: &Polynomial, w: &WeightVector) -> Polynomial {
        p.filter_terms(|m| self.monomial_weight(m) == *w)
    }

    pub fn is_homogeneous(&self, p: &Polynomial) -> bool {
        let mut it = p.terms().map(|(m, _)| self.monomial_weight(m));
        match it.next() {
            None => true,
            Some(first) => it.all(|w| w == first),
        }
    }

    fn check(&self, p: &Polynomial) -> Result<()> {
        if super::same_ring(&self.ring, p.ring()) {
            Ok(())
        } else {
            Err(Error::RingMismatch {
                left: self.ring.names().join(","),
                right: p.ring().names().join(","),
            })
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn degree_and_principal_component() {
        let r = Ring::new(&["x", "y"]).unwrap();
        let w = WeightFunction::from_named(&r, &[("x", vec![-1, 1]), ("y", vec![2, 0])]).unwrap();
        let p = Polynomial::parse(&r, "y^2 + y").unwrap();
        assert_eq!(w.degree(&p).unwrap(), WeightVector(vec![4, 0]));
        assert_eq!(
            w.principal_component(&p).unwrap(),
            Polynomial::parse(&r, "y^2").unwrap()
        );
        assert_eq!(
            w.degree(&Polynomial::one(&r)).unwrap(),
            WeightVector::zero(2)
        );
        assert!(matches!(
            w.degree(&Polynomial::zero(&r)),
            Err(Error::ZeroPolynomial(_))
        ));
    }

    #[test]
    fn lexicographic_order() {
        assert!(WeightVector(vec![0, 5]) < WeightVector(vec![1, -100]));
        assert!(WeightVector(vec![-60, 1]).is_negative());
    }
}
