//! Sparse multivariate polynomials over the rationals.
//!
//! A [`Polynomial`] lives in a [`Ring`], an ordered list of variable names
//! shared through an `Arc`. Terms are stored in a `BTreeMap` keyed by dense
//! exponent vectors, so the representation of a polynomial is canonical and
//! structural equality is mathematical equality.

mod expr;
mod linalg;
mod squarefree;
mod weight;

pub use expr::{parse_expr_tokens, tokenize, Expr, Span, Token, TokenKind};
pub use linalg::{determinant, jacobian_determinant, jacobian_matrix};
pub use weight::{WeightFunction, WeightVector};

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::sync::Arc;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

pub type Rational = BigRational;

pub fn rat(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

pub fn rat_frac(n: i64, d: i64) -> Rational {
    Rational::new(BigInt::from(n), BigInt::from(d))
}

/// An ordered list of variable names.
#[derive(Debug, PartialEq, Eq, Hash)]
pub struct Ring {
    names: Vec<String>,
}

impl Ring {
    pub fn new<S: AsRef<str>>(names: &[S]) -> Result<Arc<Ring>> {
        let mut out: Vec<String> = Vec::with_capacity(names.len());
        for n in names {
            let n = n.as_ref();
            if !is_identifier(n) {
                return Err(Error::precondition(format!(
                    "`{n}` is not a valid variable name"
                )));
            }
            if out.iter().any(|m| m == n) {
                return Err(Error::precondition(format!("duplicate variable `{n}`")));
            }
            out.push(n.to_string());
        }
        Ok(Arc::new(Ring { names: out }))
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn nvars(&self) -> usize {
        self.names.len()
    }

    pub fn index_of(&self, name: &str) -> Option<usize> {
        self.names.iter().position(|n| n == name)
    }

    pub fn var_index(&self, name: &str) -> Result<usize> {
        self.index_of(name)
            .ok_or_else(|| Error::UnknownVariable(name.to_string()))
    }

    /// A new ring with `extra` appended after the existing variables.
    pub fn extend<S: AsRef<str>>(&self, extra: &[S]) -> Result<Arc<Ring>> {
        let mut names: Vec<String> = self.names.clone();
        names.extend(extra.iter().map(|s| s.as_ref().to_string()));
        Ring::new(&names)
    }

    /// A name starting with `base` that is not yet used in this ring.
    pub fn fresh_name(&self, base: &str) -> String {
        if self.index_of(base).is_none() {
            return base.to_string();
        }
        (1..)
            .map(|i| format!("{base}{i}"))
            .find(|n| self.index_of(n).is_none())
            .unwrap()
    }

    fn describe(&self) -> String {
        self.names.join(",")
    }
}

impl fmt::Display for Ring {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Q[{}]", self.names.join(","))
    }
}

pub(crate) fn is_identifier(s: &str) -> bool {
    let mut chars = s.chars();
    match chars.next() {
        Some(c) if c.is_ascii_alphabetic() || c == '_' => {}
        _ => return false,
    }
    chars.all(|c| c.is_ascii_alphanumeric() || c == '_')
}

/// Dense exponent vector; its length equals the number of ring variables.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Monomial(Vec<u32>);

impl Monomial {
    pub fn one(nvars: usize) -> Self {
        Monomial(vec![0; nvars])
    }

    pub fn from_exponents(exps: Vec<u32>) -> Self {
        Monomial(exps)
    }

    pub fn var(nvars: usize, idx: usize, exp: u32) -> Self {
        let mut e = vec![0; nvars];
        e[idx] = exp;
        Monomial(e)
    }

    pub fn exponents(&self) -> &[u32] {
        &self.0
    }

    pub fn exponent(&self, idx: usize) -> u32 {
        self.0[idx]
    }

    pub fn degree(&self) -> u32 {
        self.0.iter().sum()
    }

    pub fn is_one(&self) -> bool {
        self.0.iter().all(|&e| e == 0)
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        Monomial(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }

    pub fn divides(&self, other: &Monomial) -> bool {
        self.0.iter().zip(&other.0).all(|(a, b)| a <= b)
    }

    /// `self / other`, assuming `other` divides `self`.
    pub fn div(&self, other: &Monomial) -> Monomial {
        Monomial(self.0.iter().zip(&other.0).map(|(a, b)| a - b).collect())
    }

    pub fn lcm(&self, other: &Monomial) -> Monomial {
        Monomial(
            self.0
                .iter()
                .zip(&other.0)
                .map(|(a, b)| *a.max(b))
                .collect(),
        )
    }

    pub fn is_coprime(&self, other: &Monomial) -> bool {
        self.0.iter().zip(&other.0).all(|(a, b)| *a == 0 || *b == 0)
    }

    /// Variables with a nonzero exponent.
    pub fn support(&self) -> impl Iterator<Item = usize> + '_ {
        self.0
            .iter()
            .enumerate()
            .filter(|(_, e)| **e > 0)
            .map(|(i, _)| i)
    }
}

/// A polynomial with rational coefficients in a fixed [`Ring`].
#[derive(Clone)]
pub struct Polynomial {
    ring: Arc<Ring>,
    terms: BTreeMap<Monomial, Rational>,
}

impl PartialEq for Polynomial {
    fn eq(&self, other: &Self) -> bool {
        same_ring(&self.ring, &other.ring) && self.terms == other.terms
    }
}

impl Eq for Polynomial {}

impl std::hash::Hash for Polynomial {
    fn hash<H: std::hash::Hasher>(&self, state: &mut H) {
        self.terms.hash(state);
    }
}

pub(crate) fn same_ring(a: &Arc<Ring>, b: &Arc<Ring>) -> bool {
    Arc::ptr_eq(a, b) || a.names == b.names
}

fn check_ring(a: &Arc<Ring>, b: &Arc<Ring>) -> Result<()> {
    if same_ring(a, b) {
        Ok(())
    } else {
        Err(Error::RingMismatch {
            left: a.describe(),
            right: b.describe(),
        })
    }
}

impl Polynomial {
    pub fn zero(ring: &Arc<Ring>) -> Self {
        Polynomial {
            ring: ring.clone(),
            terms: BTreeMap::new(),
        }
    }

    pub fn one(ring: &Arc<Ring>) -> Self {
        Self::constant(ring, Rational::one())
    }

    pub fn constant(ring: &Arc<Ring>, c: Rational) -> Self {
        let mut p = Self::zero(ring);
        if !c.is_zero() {
            p.terms.insert(Monomial::one(ring.nvars()), c);
        }
        p
    }

    pub fn from_int(ring: &Arc<Ring>, c: i64) -> Self {
        Self::constant(ring, rat(c))
    }

    pub fn var(ring: &Arc<Ring>, name: &str) -> Result<Self> {
        Ok(Self::var_index(ring, ring.var_index(name)?))
    }

    pub fn var_index(ring: &Arc<Ring>, idx: usize) -> Self {
        Self::monomial(ring, Monomial::var(ring.nvars(), idx, 1), Rational::one())
    }

    pub fn monomial(ring: &Arc<Ring>, m: Monomial, c: Rational) -> Self {
        debug_assert_eq!(m.0.len(), ring.nvars());
        let mut p = Self::zero(ring);
        if !c.is_zero() {
            p.terms.insert(m, c);
        }
        p
    }

    /// Collects terms, merging duplicates and dropping zeros.
    pub fn from_terms<I>(ring: &Arc<Ring>, terms: I) -> Self
    where
        I: IntoIterator<Item = (Monomial, Rational)>,
    {
        let mut p = Self::zero(ring);
        for (m, c) in terms {
            p.add_term(m, c);
        }
        p
    }

    /// Parses the shared polynomial syntax, e.g. `x*v1 - y^3 + z^2`.
    pub fn parse(ring: &Arc<Ring>, text: &str) -> Result<Self> {
        Expr::parse(text)?.to_polynomial(ring)
    }

    pub(crate) fn add_term(&mut self, m: Monomial, c: Rational) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(m) {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                let s = o.get() + &c;
                if s.is_zero() {
                    o.remove();
                } else {
                    *o.get_mut() = s;
                }
            }
        }
    }

    pub fn ring(&self) -> &Arc<Ring> {
        &self.ring
    }

    pub fn terms(
        &self,
    ) -> impl DoubleEndedIterator<Item = (&Monomial, &Rational)> + ExactSizeIterator {
        self.terms.iter()
    }

    pub fn coefficient(&self, m: &Monomial) -> Rational {
        self.terms.get(m).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn nterms(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_constant(&self) -> bool {
        self.terms.keys().all(Monomial::is_one)
    }

    /// The value of a constant polynomial (zero for the zero polynomial).
    pub fn constant_value(&self) -> Option<Rational> {
        if self.is_zero() {
            Some(Rational::zero())
        } else if self.is_constant() {
            self.terms.values().next().cloned()
        } else {
            None
        }
    }

    pub fn total_degree(&self) -> Option<u32> {
        self.terms.keys().map(Monomial::degree).max()
    }

    pub fn degree_in(&self, idx: usize) -> u32 {
        self.terms.keys().map(|m| m.0[idx]).max().unwrap_or(0)
    }

    /// Indices of variables that occur.
    pub fn variables(&self) -> Vec<usize> {
        let mut used = vec![false; self.ring.nvars()];
        for m in self.terms.keys() {
            for i in m.support() {
                used[i] = true;
            }
        }
        used.iter()
            .enumerate()
            .filter(|(_, u)| **u)
            .map(|(i, _)| i)
            .collect()
    }

    pub fn checked_add(&self, other: &Self) -> Result<Self> {
        check_ring(&self.ring, &other.ring)?;
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(m.clone(), c.clone());
        }
        Ok(out)
    }

    pub fn checked_sub(&self, other: &Self) -> Result<Self> {
        check_ring(&self.ring, &other.ring)?;
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(m.clone(), -c);
        }
        Ok(out)
    }

    pub fn checked_mul(&self, other: &Self) -> Result<Self> {
        check_ring(&self.ring, &other.ring)?;
        let mut out = Self::zero(&self.ring);
        for (m1, c1) in &self.terms {
            for (m2, c2) in &other.terms {
                out.add_term(m1.mul(m2), c1 * c2);
            }
        }
        Ok(out)
    }

    pub fn scale(&self, c: &Rational) -> Self {
        if c.is_zero() {
            return Self::zero(&self.ring);
        }
        Polynomial {
            ring: self.ring.clone(),
            terms: self.terms.iter().map(|(m, a)| (m.clone(), a * c)).collect(),
        }
    }

    pub fn mul_monomial(&self, m: &Monomial, c: &Rational) -> Self {
        if c.is_zero() {
            return Self::zero(&self.ring);
        }
        Polynomial {
            ring: self.ring.clone(),
            terms: self.terms.iter().map(|(n, a)| (n.mul(m), a * c)).collect(),
        }
    }

    pub fn pow(&self, e: u32) -> Self {
        let mut result = Self::one(&self.ring);
        let mut base = self.clone();
        let mut e = e;
        while e > 0 {
            if e & 1 == 1 {
                result = &result * &base;
            }
            e >>= 1;
            if e > 0 {
                base = &base * &base;
            }
        }
        result
    }

    /// Formal partial derivative with respect to the named variable.
    pub fn partial_derivative(&self, var: &str) -> Result<Self> {
        Ok(self.derivative(self.ring.var_index(var)?))
    }

    pub fn derivative(&self, idx: usize) -> Self {
        let mut out = Self::zero(&self.ring);
        for (m, c) in &self.terms {
            let e = m.0[idx];
            if e == 0 {
                continue;
            }
            let mut n = m.clone();
            n.0[idx] -= 1;
            out.add_term(n, c * rat(e as i64));
        }
        out
    }

    /// Replaces variable `idx` by `value` (which must live in the same ring).
    pub fn substitute(&self, idx: usize, value: &Polynomial) -> Self {
        assert!(
            same_ring(&self.ring, &value.ring),
            "substitute: ring mismatch"
        );
        let mut powers: Vec<Polynomial> = vec![Self::one(&self.ring)];
        let mut out = Self::zero(&self.ring);
        for (m, c) in &self.terms {
            let e = m.0[idx] as usize;
            while powers.len() <= e {
                let next = powers.last().unwrap() * value;
                powers.push(next);
            }
            let mut rest = m.clone();
            rest.0[idx] = 0;
            let t = powers[e].mul_monomial(&rest, c);
            for (mm, cc) in t.terms {
                out.add_term(mm, cc);
            }
        }
        out
    }

    /// Evaluates at a rational point (one value per ring variable).
    pub fn evaluate(&self, point: &[Rational]) -> Rational {
        assert_eq!(point.len(), self.ring.nvars());
        let mut acc = Rational::zero();
        for (m, c) in &self.terms {
            let mut t = c.clone();
            for (i, &e) in m.0.iter().enumerate() {
                for _ in 0..e {
                    t *= &point[i];
                }
            }
            acc += t;
        }
        acc
    }

    /// Moves the polynomial into `target`, matching variables by name.
    pub fn embed(&self, target: &Arc<Ring>) -> Result<Self> {
        if same_ring(&self.ring, target) {
            return Ok(Polynomial {
                ring: target.clone(),
                terms: self.terms.clone(),
            });
        }
        let map: Vec<Option<usize>> = self.ring.names.iter().map(|n| target.index_of(n)).collect();
        let mut out = Self::zero(target);
        for (m, c) in &self.terms {
            let mut e = vec![0u32; target.nvars()];
            for (i, &x) in m.0.iter().enumerate() {
                if x == 0 {
                    continue;
                }
                match map[i] {
                    Some(j) => e[j] = x,
                    None => return Err(Error::UnknownVariable(self.ring.names[i].clone())),
                }
            }
            out.add_term(Monomial(e), c.clone());
        }
        Ok(out)
    }

    /// Keeps only the terms accepted by `keep`.
    pub fn filter_terms(&self, mut keep: impl FnMut(&Monomial) -> bool) -> Self {
        Polynomial {
            ring: self.ring.clone(),
            terms: self
                .terms
                .iter()
                .filter(|(m, _)| keep(m))
                .map(|(m, c)| (m.clone(), c.clone()))
                .collect(),
        }
    }

    /// Divides by the coefficient of the largest term in `BTreeMap` order,
    /// giving a canonical scalar normalization independent of monomial order.
    pub fn normalized(&self) -> Self {
        match self.terms.iter().next_back() {
            None => self.clone(),
            Some((_, c)) => self.scale(&c.recip()),
        }
    }

    /// If `self = c * other` for a nonzero rational `c`, returns `c`.
    pub fn scalar_ratio(&self, other: &Self) -> Option<Rational> {
        if self.terms.len() != other.terms.len() || self.is_zero() {
            return None;
        }
        let mut ratio: Option<Rational> = None;
        for ((m1, c1), (m2, c2)) in self.terms.iter().zip(other.terms.iter()) {
            if m1 != m2 {
                return None;
            }
            let r = c1 / c2;
            match &ratio {
                None => ratio = Some(r),
                Some(q) if *q == r => {}
                Some(_) => return None,
            }
        }
        ratio
    }

    /// Exact quotient `self / divisor`, if the division has no remainder.
    pub fn exact_div(&self, divisor: &Polynomial) -> Result<Option<Polynomial>> {
        check_ring(&self.ring, &divisor.ring)?;
        if divisor.is_zero() {
            return Err(Error::ZeroPolynomial("exact_div"));
        }
        // Division with respect to the BTreeMap (lexicographic) order.
        let (lm, lc) = divisor.terms.iter().next_back().unwrap();
        let mut rem = self.clone();
        let mut quot = Self::zero(&self.ring);
        while let Some((m, c)) = rem.terms.iter().next_back() {
            if !lm.divides(m) {
                return Ok(None);
            }
            let qm = m.div(lm);
            let qc = c / lc;
            rem = &rem - &divisor.mul_monomial(&qm, &qc);
            quot.add_term(qm, qc);
        }
        Ok(Some(quot))
    }

    pub fn squarefree_part(&self) -> Result<Polynomial> {
        squarefree::squarefree_part(self)
    }

    pub fn to_expr(&self) -> Expr {
        Expr::from_polynomial(self)
    }
}

impl fmt::Debug for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self)
    }
}

/// Sort key for printing: graded reverse lexicographic, largest first.
fn print_cmp(a: &Monomial, b: &Monomial) -> std::cmp::Ordering {
    a.degree()
        .cmp(&b.degree())
        .then_with(|| {
            for (x, y) in a.0.iter().zip(&b.0).rev() {
                if x != y {
                    return y.cmp(x);
                }
            }
            std::cmp::Ordering::Equal
        })
        .reverse()
}

impl fmt::Display for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut terms: Vec<(&Monomial, &Rational)> = self.terms.iter().collect();
        terms.sort_by(|a, b| print_cmp(a.0, b.0));
        for (i, (m, c)) in terms.into_iter().enumerate() {
            let neg = c.is_negative();
            if i == 0 {
                if neg {
                    write!(f, "-")?;
                }
            } else if neg {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            let a = c.abs();
            let mono = format_monomial(&self.ring, m);
            if mono.is_empty() {
                write!(f, "{}", a)?;
            } else if a.is_one() {
                write!(f, "{}", mono)?;
            } else {
                write!(f, "{}*{}", a, mono)?;
            }
        }
        Ok(())
    }
}

fn format_monomial(ring: &Ring, m: &Monomial) -> String {
    let mut parts = Vec::new();
    for (i, &e) in m.0.iter().enumerate() {
        match e {
            0 => {}
            1 => parts.push(ring.names[i].clone()),
            _ => parts.push(format!("{}^{}", ring.names[i], e)),
        }
    }
    parts.join("*")
}

macro_rules! forward_binop {
    ($tr:ident, $method:ident, $checked:ident) => {
        impl $tr<&Polynomial> for &Polynomial {
            type Output = Polynomial;
            fn $method(self, rhs: &Polynomial) -> Polynomial {
                self.$checked(rhs)
                    .expect(concat!(stringify!($method), ": ring mismatch"))
            }
        }
        impl $tr<Polynomial> for Polynomial {
            type Output = Polynomial;
            fn $method(self, rhs: Polynomial) -> Polynomial {
                (&self).$method(&rhs)
            }
        }
        impl $tr<&Polynomial> for Polynomial {
            type Output = Polynomial;
            fn $method(self, rhs: &Polynomial) -> Polynomial {
                (&self).$method(rhs)
            }
        }
        impl $tr<Polynomial> for &Polynomial {
            type Output = Polynomial;
            fn $method(self, rhs: Polynomial) -> Polynomial {
                self.$method(&rhs)
            }
        }
    };
}

forward_binop!(Add, add, checked_add);
forward_binop!(Sub, sub, checked_sub);
forward_binop!(Mul, mul, checked_mul);

impl Neg for &Polynomial {
    type Output = Polynomial;
    fn neg(self) -> Polynomial {
        self.scale(&-Rational::one())
    }
}

impl Neg for Polynomial {
    type Output = Polynomial;
    fn neg(self) -> Polynomial {
        -&self
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
    fn cancellation_and_absorption() {
        let r = ring(&["x", "y"]);
        assert_eq!(p(&r, "x+y") + p(&r, "x-y"), p(&r, "2*x"));
        assert_eq!(p(&r, "y-1") * p(&r, "y"), p(&r, "y^2 - y"));
        assert!((p(&r, "x^3 + y") * Polynomial::zero(&r)).is_zero());
    }

    #[test]
    fn ring_mismatch_is_reported() {
        let a = ring(&["x", "y"]);
        let b = ring(&["x", "z"]);
        let err = p(&a, "x").checked_add(&p(&b, "x")).unwrap_err();
        assert!(matches!(err, Error::RingMismatch { .. }));
    }

    #[test]
    fn partials() {
        let r = ring(&["x", "y", "z", "v1"]);
        assert_eq!(
            p(&r, "y^3 - z^2").partial_derivative("y").unwrap(),
            p(&r, "3*y^2")
        );
        assert_eq!(p(&r, "x*v1").partial_derivative("v1").unwrap(), p(&r, "x"));
        assert!(p(&r, "7").partial_derivative("x").unwrap().is_zero());
        assert!(matches!(
            p(&r, "x").partial_derivative("w"),
            Err(Error::UnknownVariable(_))
        ));
    }

    #[test]
    fn display_round_trips() {
        let r = ring(&["x", "y", "z", "v1"]);
        for s in ["x*v1 - y^3 + z^2", "-1/2*x^2*y + 3", "0", "y^2 - y"] {
            let q = p(&r, s);
            assert_eq!(p(&r, &q.to_string()), q);
        }
        assert_eq!(p(&r, "x*v1 - y^3 + z^2").to_string(), "-y^3 + z^2 + x*v1");
    }

    #[test]
    fn embed_and_substitute() {
        let a = ring(&["x", "y"]);
        let b = ring(&["x", "y", "z"]);
        let q = p(&a, "x*y - 1").embed(&b).unwrap();
        assert_eq!(q, p(&b, "x*y - 1"));
        assert!(p(&b, "z").embed(&a).is_err());
        let s = p(&b, "x*z - y^2").substitute(2, &p(&b, "y + 1"));
        assert_eq!(s, p(&b, "x*y + x - y^2"));
    }

    #[test]
    fn exact_division() {
        let r = ring(&["x", "y"]);
        let q = p(&r, "x^2*y - x*y^3").exact_div(&p(&r, "x*y")).unwrap();
        assert_eq!(q, Some(p(&r, "x - y^2")));
        assert_eq!(p(&r, "x + 1").exact_div(&p(&r, "x")).unwrap(), None);
    }

    #[test]
    fn scalar_ratio_detects_multiples() {
        let r = ring(&["x", "y"]);
        assert_eq!(p(&r, "-2*x^2").scalar_ratio(&p(&r, "x^2")), Some(rat(-2)));
        assert_eq!(p(&r, "x^2 + y").scalar_ratio(&p(&r, "x^2")), None);
    }
}
