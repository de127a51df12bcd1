use std::cmp::Ordering;

use serde::{Deserialize, Serialize};

use crate::poly::{Monomial, Polynomial, Rational};

/// Monomial orders understood by the Gröbner engine.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum MonomialOrder {
    Lex,
    DegRevLex,
    /// Compares weight rows in turn, then falls back to `tie`.
    WeightBlock {
        rows: Vec<Vec<i64>>,
        tie: Box<MonomialOrder>,
    },
}

impl MonomialOrder {
    pub fn weighted(rows: Vec<Vec<i64>>, tie: MonomialOrder) -> Self {
        MonomialOrder::WeightBlock {
            rows,
            tie: Box::new(tie),
        }
    }

    /// Block order eliminating `drop`: any monomial involving a dropped
    /// variable is larger than every monomial free of them.
    pub fn elimination(nvars: usize, drop: &[usize]) -> Self {
        let row = (0..nvars).map(|i| i64::from(drop.contains(&i))).collect();
        Self::weighted(vec![row], MonomialOrder::DegRevLex)
    }

    pub fn cmp(&self, a: &Monomial, b: &Monomial) -> Ordering {
        match self {
            MonomialOrder::Lex => a.exponents().cmp(b.exponents()),
            MonomialOrder::DegRevLex => a.degree().cmp(&b.degree()).then_with(|| {
                for (x, y) in a.exponents().iter().zip(b.exponents()).rev() {
                    if x != y {
                        return y.cmp(x);
                    }
                }
                Ordering::Equal
            }),
            MonomialOrder::WeightBlock { rows, tie } => {
                for row in rows {
                    let wa = dot(row, a);
                    let wb = dot(row, b);
                    if wa != wb {
                        return wa.cmp(&wb);
                    }
                }
                tie.cmp(a, b)
            }
        }
    }

    /// Largest term of `p`, or `None` for zero.
    pub fn leading_term(&self, p: &Polynomial) -> Option<(Monomial, Rational)> {
        p.terms()
            .max_by(|a, b| self.cmp(a.0, b.0))
            .map(|(m, c)| (m.clone(), c.clone()))
    }

    /// S-polynomial of `f` and `g`.
    pub fn s_polynomial(&self, f: &Polynomial, g: &Polynomial) -> Option<Polynomial> {
        let (mf, cf) = self.leading_term(f)?;
        let (mg, cg) = self.leading_term(g)?;
        let l = mf.lcm(&mg);
        let one = Rational::from_integer(1.into());
        let a = f.mul_monomial(&l.div(&mf), &(&one / &cf));
        let b = g.mul_monomial(&l.div(&mg), &(&one / &cg));
        Some(&a - &b)
    }

    /// Whether every variable is larger than 1, i.e. the order is a well-order.
    pub fn is_well_order(&self, nvars: usize) -> bool {
        (0..nvars).all(|i| self.variable_positive(i))
    }

    fn variable_positive(&self, i: usize) -> bool {
        match self {
            MonomialOrder::Lex | MonomialOrder::DegRevLex => true,
            MonomialOrder::WeightBlock { rows, tie } => {
                for row in rows {
                    let w = row.get(i).copied().unwrap_or(0);
                    if w != 0 {
                        return w > 0;
                    }
                }
                tie.variable_positive(i)
            }
        }
    }
}

fn dot(row: &[i64], m: &Monomial) -> i128 {
    m.exponents()
        .iter()
        .zip(row)
        .map(|(&e, &w)| e as i128 * w as i128)
        .sum()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn m(e: &[u32]) -> Monomial {
        Monomial::from_exponents(e.to_vec())
    }

    #[test]
    fn basic_orders() {
        assert_eq!(
            MonomialOrder::Lex.cmp(&m(&[1, 0]), &m(&[0, 5])),
            Ordering::Greater
        );
        let o = MonomialOrder::DegRevLex;
        // x*z < y^2 in degrevlex with x > y > z
        assert_eq!(o.cmp(&m(&[1, 0, 1]), &m(&[0, 2, 0])), Ordering::Less);
        assert_eq!(o.cmp(&m(&[0, 0, 3]), &m(&[1, 0, 0])), Ordering::Greater);
    }

    #[test]
    fn well_order_detection() {
        assert!(MonomialOrder::elimination(3, &[2]).is_well_order(3));
        let neg = MonomialOrder::weighted(vec![vec![-1, 2]], MonomialOrder::DegRevLex);
        assert!(!neg.is_well_order(2));
        let fixed =
            MonomialOrder::weighted(vec![vec![1, 1], vec![-1, 2]], MonomialOrder::DegRevLex);
        assert!(fixed.is_well_order(2));
    }
}
