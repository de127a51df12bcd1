//! Buchberger's algorithm with the sugar selection strategy and the
//! Gebauer–Möller pair criteria.
//!
//! Polynomials are converted to [`SortedPoly`], a term vector sorted by the
//! active monomial order (ascending, so the leading term is the last entry).

use std::cmp::Ordering;
use std::sync::Arc;

use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use super::order::MonomialOrder;
use crate::error::{Error, Result};
use crate::poly::{Monomial, Polynomial, Rational, Ring};

/// Resource caps for Gröbner computations.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Budget {
    /// Maximum number of polynomials held in an intermediate basis.
    pub max_basis: usize,
    /// Maximum number of single-term reduction steps.
    pub max_steps: usize,
}

impl Default for Budget {
    fn default() -> Self {
        Budget {
            max_basis: 4_000,
            max_steps: 4_000_000,
        }
    }
}

pub(crate) struct StepCounter {
    steps: usize,
    limit: usize,
}

impl StepCounter {
    pub(crate) fn new(budget: &Budget) -> Self {
        StepCounter {
            steps: 0,
            limit: budget.max_steps,
        }
    }

    fn tick(&mut self) -> Result<()> {
        self.steps += 1;
        if self.steps > self.limit {
            Err(Error::BudgetExceeded {
                what: "reduction step",
                limit: self.limit,
            })
        } else {
            Ok(())
        }
    }
}

#[derive(Clone, Debug)]
pub(crate) struct SortedPoly {
    terms: Vec<(Monomial, Rational)>,
}

impl SortedPoly {
    pub(crate) fn from_poly(p: &Polynomial, order: &MonomialOrder) -> Self {
        let mut terms: Vec<(Monomial, Rational)> =
            p.terms().map(|(m, c)| (m.clone(), c.clone())).collect();
        terms.sort_by(|a, b| order.cmp(&a.0, &b.0));
        SortedPoly { terms }
    }

    pub(crate) fn to_poly(&self, ring: &Arc<Ring>) -> Polynomial {
        Polynomial::from_terms(ring, self.terms.iter().cloned())
    }

    pub(crate) fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub(crate) fn lm(&self) -> &Monomial {
        &self.terms.last().expect("nonzero").0
    }

    fn lc(&self) -> &Rational {
        &self.terms.last().expect("nonzero").1
    }

    fn scale(&mut self, c: &Rational) {
        for t in &mut self.terms {
            t.1 *= c;
        }
    }

    /// `self - c * t * other`.
    fn sub_mul(
        &self,
        other: &SortedPoly,
        t: &Monomial,
        c: &Rational,
        order: &MonomialOrder,
    ) -> SortedPoly {
        let mut out = Vec::with_capacity(self.terms.len() + other.terms.len());
        let mut a = self.terms.iter().peekable();
        let mut b = other
            .terms
            .iter()
            .map(|(m, k)| (m.mul(t), k * c))
            .peekable();
        loop {
            match (a.peek(), b.peek()) {
                (None, None) => break,
                (Some(_), None) => out.push(a.next().unwrap().clone()),
                (None, Some(_)) => {
                    let (m, k) = b.next().unwrap();
                    out.push((m, -k));
                }
                (Some(x), Some(y)) => match order.cmp(&x.0, &y.0) {
                    Ordering::Less => out.push(a.next().unwrap().clone()),
                    Ordering::Greater => {
                        let (m, k) = b.next().unwrap();
                        out.push((m, -k));
                    }
                    Ordering::Equal => {
                        let (m, k) = b.next().unwrap();
                        let s = &a.next().unwrap().1 - k;
                        if !s.is_zero() {
                            out.push((m, s));
                        }
                    }
                },
            }
        }
        SortedPoly { terms: out }
    }
}

struct Elem {
    poly: SortedPoly,
    sugar: u32,
    cof: Vec<Polynomial>,
}

#[derive(Clone)]
struct Pair {
    i: usize,
    j: usize,
    lcm: Monomial,
    sugar: u32,
}

/// Output of [`buchberger`]: a reduced basis sorted by decreasing leading
/// monomial, with cofactors against the input generators when requested.
pub(crate) struct GbOutput {
    pub basis: Vec<SortedPoly>,
    pub cofactors: Option<Vec<Vec<Polynomial>>>,
}

fn combine(cof: &mut [Polynomial], other: &[Polynomial], t: &Monomial, c: &Rational) {
    for (a, b) in cof.iter_mut().zip(other) {
        *a = &*a - &b.mul_monomial(t, c);
    }
}

/// Fully reduces `p` by `reducers`. When `quot` is given, the multiples
/// subtracted are accumulated into `cof` using each reducer's cofactors.
fn reduce_full(
    mut p: SortedPoly,
    mut cof: Option<&mut Vec<Polynomial>>,
    reducers: &[&Elem],
    order: &MonomialOrder,
    counter: &mut StepCounter,
) -> Result<SortedPoly> {
    let mut rem: Vec<(Monomial, Rational)> = Vec::new();
    while let Some((lm, lc)) = p.terms.last() {
        match reducers.iter().find(|g| g.poly.lm().divides(lm)) {
            Some(g) => {
                counter.tick()?;
                let t = lm.div(g.poly.lm());
                let c = lc / g.poly.lc();
                if let Some(cof) = cof.as_deref_mut() {
                    combine(cof, &g.cof, &t, &c);
                }
                p = p.sub_mul(&g.poly, &t, &c, order);
            }
            None => rem.push(p.terms.pop().unwrap()),
        }
    }
    rem.reverse();
    Ok(SortedPoly { terms: rem })
}

fn make_monic(e: &mut Elem) {
    let inv = e.poly.lc().recip();
    if !inv.is_one() {
        e.poly.scale(&inv);
        for c in &mut e.cof {
            *c = c.scale(&inv);
        }
    }
}

struct State {
    elems: Vec<Elem>,
    basis: Vec<usize>,
    pairs: Vec<Pair>,
}

impl State {
    fn pair(&self, i: usize, j: usize) -> Pair {
        let a = &self.elems[i];
        let b = &self.elems[j];
        let lcm = a.poly.lm().lcm(b.poly.lm());
        let sa = a.sugar + lcm.degree() - a.poly.lm().degree();
        let sb = b.sugar + lcm.degree() - b.poly.lm().degree();
        Pair {
            i,
            j,
            lcm,
            sugar: sa.max(sb),
        }
    }

    /// Gebauer–Möller update after adding element `h`.
    fn update(&mut self, h: usize) {
        let lh = self.elems[h].poly.lm().clone();
        let mut c: Vec<Pair> = self.basis.iter().map(|&g| self.pair(g, h)).collect();
        let mut d: Vec<Pair> = Vec::new();
        while let Some(p) = c.pop() {
            let coprime = lh.is_coprime(self.elems[p.i].poly.lm());
            let dominated = c.iter().chain(d.iter()).any(|q| q.lcm.divides(&p.lcm));
            if coprime || !dominated {
                d.push(p);
            }
        }
        let e: Vec<Pair> = d
            .into_iter()
            .filter(|p| !lh.is_coprime(self.elems[p.i].poly.lm()))
            .collect();
        let elems = &self.elems;
        self.pairs.retain(|p| {
            let li = elems[p.i].poly.lm();
            let lj = elems[p.j].poly.lm();
            !(lh.divides(&p.lcm) && li.lcm(&lh) != p.lcm && lh.lcm(lj) != p.lcm)
        });
        self.pairs.extend(e);
        self.basis.retain(|&g| !lh.divides(elems[g].poly.lm()));
        self.basis.push(h);
    }

    fn reducers(&self) -> Vec<&Elem> {
        self.basis.iter().map(|&g| &self.elems[g]).collect()
    }
}

pub(crate) fn buchberger(
    ring: &Arc<Ring>,
    gens: &[Polynomial],
    order: &MonomialOrder,
    budget: &Budget,
    track: bool,
) -> Result<GbOutput> {
    if !order.is_well_order(ring.nvars()) {
        return Err(Error::precondition(
            "Gröbner bases require a well-order; homogenize or add a positive block first",
        ));
    }
    let n = gens.len();
    let unit_cof = |k: usize| -> Vec<Polynomial> {
        if !track {
            return Vec::new();
        }
        (0..n)
            .map(|j| {
                if j == k {
                    Polynomial::one(ring)
                } else {
                    Polynomial::zero(ring)
                }
            })
            .collect()
    };
    let mut counter = StepCounter::new(budget);
    let mut st = State {
        elems: Vec::new(),
        basis: Vec::new(),
        pairs: Vec::new(),
    };

    let mut unit: Option<usize> = None;
    for (k, g) in gens.iter().enumerate() {
        if g.is_zero() {
            continue;
        }
        let mut cof = unit_cof(k);
        let sp = SortedPoly::from_poly(g, order);
        let sugar = g.total_degree().unwrap_or(0);
        let red = {
            let reducers = st.reducers();
            reduce_full(
                sp,
                track.then_some(&mut cof),
                &reducers,
                order,
                &mut counter,
            )?
        };
        if red.is_zero() {
            continue;
        }
        let mut e = Elem {
            poly: red,
            sugar,
            cof,
        };
        make_monic(&mut e);
        let is_unit = e.poly.lm().is_one();
        st.elems.push(e);
        let h = st.elems.len() - 1;
        if is_unit {
            unit = Some(h);
            break;
        }
        st.update(h);
    }

    while unit.is_none() && !st.pairs.is_empty() {
        let (idx, _) = st
            .pairs
            .iter()
            .enumerate()
            .min_by(|(_, a), (_, b)| {
                a.sugar
                    .cmp(&b.sugar)
                    .then_with(|| order.cmp(&a.lcm, &b.lcm))
            })
            .unwrap();
        let p = st.pairs.swap_remove(idx);
        let (a, b) = (&st.elems[p.i], &st.elems[p.j]);
        let ta = p.lcm.div(a.poly.lm());
        let tb = p.lcm.div(b.poly.lm());
        let ca = a.poly.lc().recip();
        let cb = b.poly.lc().recip();
        let zero = SortedPoly { terms: Vec::new() };
        let neg_ca = -ca.clone();
        let s = zero
            .sub_mul(&a.poly, &ta, &neg_ca, order)
            .sub_mul(&b.poly, &tb, &cb, order);
        let mut cof = Vec::new();
        if track {
            cof = vec![Polynomial::zero(ring); n];
            combine(&mut cof, &a.cof, &ta, &neg_ca);
            combine(&mut cof, &b.cof, &tb, &cb);
        }
        let red = {
            let reducers = st.reducers();
            reduce_full(s, track.then_some(&mut cof), &reducers, order, &mut counter)?
        };
        if red.is_zero() {
            continue;
        }
        let mut e = Elem {
            poly: red,
            sugar: p.sugar,
            cof,
        };
        make_monic(&mut e);
        let is_unit = e.poly.lm().is_one();
        st.elems.push(e);
        if st.elems.len() > budget.max_basis {
            return Err(Error::BudgetExceeded {
                what: "basis size",
                limit: budget.max_basis,
            });
        }
        let h = st.elems.len() - 1;
        if is_unit {
            unit = Some(h);
            break;
        }
        st.update(h);
    }

    if let Some(u) = unit {
        let e = st.elems.swap_remove(u);
        return Ok(GbOutput {
            basis: vec![e.poly],
            cofactors: track.then(|| vec![e.cof]),
        });
    }

    // Minimalize, then interreduce tails.
    let mut keep: Vec<usize> = Vec::new();
    let mut ids = st.basis.clone();
    ids.sort_by(|&a, &b| order.cmp(st.elems[a].poly.lm(), st.elems[b].poly.lm()));
    for &g in &ids {
        let lm = st.elems[g].poly.lm();
        if !keep.iter().any(|&k| st.elems[k].poly.lm().divides(lm)) {
            keep.push(g);
        }
    }
    let mut reduced: Vec<Elem> = Vec::with_capacity(keep.len());
    for (pos, &g) in keep.iter().enumerate() {
        let others: Vec<&Elem> = keep
            .iter()
            .enumerate()
            .filter(|(q, _)| *q != pos)
            .map(|(_, &k)| &st.elems[k])
            .collect();
        let e = &st.elems[g];
        let mut cof = e.cof.clone();
        let lead = e.poly.terms.last().unwrap().clone();
        let tail = SortedPoly {
            terms: e.poly.terms[..e.poly.terms.len() - 1].to_vec(),
        };
        let mut red = reduce_full(
            tail,
            track.then_some(&mut cof),
            &others,
            order,
            &mut counter,
        )?;
        red.terms.push(lead);
        let mut out = Elem {
            poly: red,
            sugar: e.sugar,
            cof,
        };
        make_monic(&mut out);
        reduced.push(out);
    }
    reduced.reverse();
    let cofactors = track.then(|| reduced.iter().map(|e| e.cof.clone()).collect());
    Ok(GbOutput {
        basis: reduced.into_iter().map(|e| e.poly).collect(),
        cofactors,
    })
}

/// Normal form of `p` with respect to `basis` (a Gröbner basis for `order`).
pub(crate) fn normal_form(
    p: &Polynomial,
    basis: &[SortedPoly],
    order: &MonomialOrder,
    budget: &Budget,
) -> Result<Polynomial> {
    let elems: Vec<Elem> = basis
        .iter()
        .map(|b| Elem {
            poly: b.clone(),
            sugar: 0,
            cof: Vec::new(),
        })
        .collect();
    let refs: Vec<&Elem> = elems.iter().collect();
    let mut counter = StepCounter::new(budget);
    let r = reduce_full(
        SortedPoly::from_poly(p, order),
        None,
        &refs,
        order,
        &mut counter,
    )?;
    Ok(r.to_poly(p.ring()))
}

/// Division of `p` by `basis`, returning quotients per basis element and the remainder.
pub(crate) fn divide(
    p: &Polynomial,
    basis: &[SortedPoly],
    order: &MonomialOrder,
    budget: &Budget,
) -> Result<(Vec<Polynomial>, Polynomial)> {
    let ring = p.ring();
    let m = basis.len();
    let elems: Vec<Elem> = basis
        .iter()
        .enumerate()
        .map(|(k, b)| Elem {
            poly: b.clone(),
            sugar: 0,
            cof: (0..m)
                .map(|j| {
                    if j == k {
                        Polynomial::one(ring)
                    } else {
                        Polynomial::zero(ring)
                    }
                })
                .collect(),
        })
        .collect();
    let refs: Vec<&Elem> = elems.iter().collect();
    let mut counter = StepCounter::new(budget);
    let mut acc = vec![Polynomial::zero(ring); m];
    let r = reduce_full(
        SortedPoly::from_poly(p, order),
        Some(&mut acc),
        &refs,
        order,
        &mut counter,
    )?;
    // reduce_full accumulates the negated quotients.
    let quotients = acc.into_iter().map(|q| -q).collect();
    Ok((quotients, r.to_poly(ring)))
}
