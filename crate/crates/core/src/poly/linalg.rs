use std::collections::HashMap;

use super::Polynomial;
use crate::error::{Error, Result};

/// Matrix of partials `∂ps[i]/∂vars[j]`.
pub fn jacobian_matrix(ps: &[Polynomial], vars: &[usize]) -> Vec<Vec<Polynomial>> {
    ps.iter()
        .map(|p| vars.iter().map(|&v| p.derivative(v)).collect())
        .collect()
}

/// Determinant of the Jacobian matrix of `ps` with respect to `vars`.
pub fn jacobian_determinant(ps: &[Polynomial], vars: &[usize]) -> Result<Polynomial> {
    if ps.len() != vars.len() {
        return Err(Error::SizeMismatch {
            expected: vars.len(),
            got: ps.len(),
        });
    }
    if ps.is_empty() {
        return Err(Error::precondition("empty Jacobian"));
    }
    determinant(&jacobian_matrix(ps, vars))
}

/// Symbolic determinant by Laplace expansion, memoized over column subsets.
pub fn determinant(m: &[Vec<Polynomial>]) -> Result<Polynomial> {
    let n = m.len();
    if n == 0 {
        return Err(Error::precondition("empty matrix"));
    }
    if let Some(row) = m.iter().find(|r| r.len() != n) {
        return Err(Error::SizeMismatch {
            expected: n,
            got: row.len(),
        });
    }
    if n > 20 {
        return Err(Error::precondition(
            "matrix too large for symbolic expansion",
        ));
    }
    let ring = m[0][0].ring().clone();
    // minors[S] = det(rows 0..|S|, columns S)
    let mut minors: HashMap<u32, Polynomial> = HashMap::new();
    minors.insert(0, Polynomial::one(&ring));
    for (i, row) in m.iter().enumerate() {
        let mut next: HashMap<u32, Polynomial> = HashMap::new();
        for (&mask, minor) in &minors {
            if minor.is_zero() {
                continue;
            }
            for (j, entry) in row.iter().enumerate() {
                if mask & (1 << j) != 0 || entry.is_zero() {
                    continue;
                }
                let t = mask | (1 << j);
                let pos = (t & ((1u32 << j) - 1)).count_ones() as usize;
                let term = entry * minor;
                let acc = next.entry(t).or_insert_with(|| Polynomial::zero(&ring));
                *acc = if (i + pos).is_multiple_of(2) {
                    &*acc + &term
                } else {
                    &*acc - &term
                };
            }
        }
        minors = next;
    }
    Ok(minors
        .remove(&((1u32 << n) - 1))
        .unwrap_or_else(|| Polynomial::zero(&ring)))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::Ring;

    #[test]
    fn identity_and_swap() {
        let r = Ring::new(&["x", "y"]).unwrap();
        let x = Polynomial::var(&r, "x").unwrap();
        let y = Polynomial::var(&r, "y").unwrap();
        let one = Polynomial::one(&r);
        let zero = Polynomial::zero(&r);
        assert_eq!(
            jacobian_determinant(std::slice::from_ref(&x), &[0]).unwrap(),
            one
        );
        let swap = vec![
            vec![zero.clone(), one.clone()],
            vec![one.clone(), zero.clone()],
        ];
        assert_eq!(determinant(&swap).unwrap(), -&one);
        let m = vec![vec![x.clone(), y.clone()], vec![y.clone(), x.clone()]];
        assert_eq!(determinant(&m).unwrap(), &x * &x - &y * &y);
        assert!(jacobian_determinant(&[x, y], &[0]).is_err());
    }
}
