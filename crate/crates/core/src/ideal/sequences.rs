use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::{Ideal, PresentedAlgebra};
use crate::error::{Error, Result};
use crate::poly::{determinant, jacobian_matrix, rat, Polynomial};

const EXTENSION_RETRIES: usize = 64;

fn ambient_with(ambient: &PresentedAlgebra, bs: &[Polynomial]) -> Ideal {
    ambient.ideal().with_generators(bs)
}

/// Each `b_i` is a nonzerodivisor modulo the ambient relations and its predecessors,
/// and the final quotient is nonzero.
pub fn is_regular_sequence(bs: &[Polynomial], ambient: &PresentedAlgebra) -> Result<bool> {
    if bs.is_empty() {
        return Err(Error::precondition("empty sequence"));
    }
    for i in 0..bs.len() {
        let prefix = ambient_with(ambient, &bs[..i]);
        if bs[i].is_zero() {
            return Ok(false);
        }
        let colon = prefix.colon(&bs[i])?;
        if !prefix.contains_ideal(&colon)? {
            return Ok(false);
        }
    }
    Ok(!ambient_with(ambient, bs).is_unit()?)
}

/// The ideal generated by `bs` has height `bs.len()` in the ambient algebra.
pub fn is_semiregular_sequence(bs: &[Polynomial], ambient: &PresentedAlgebra) -> Result<bool> {
    if bs.is_empty() {
        return Err(Error::precondition("empty sequence"));
    }
    let base = ambient.dimension()?;
    let cut = ambient_with(ambient, bs).dimension()?;
    Ok(cut >= 0 && cut == base - bs.len() as i64)
}

fn subsets(n: usize, k: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut cur = Vec::with_capacity(k);
    fn go(start: usize, n: usize, k: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for i in start..n {
            if n - i < k - cur.len() {
                break;
            }
            cur.push(i);
            go(i + 1, n, k, cur, out);
            cur.pop();
        }
    }
    go(0, n, k, &mut cur, &mut out);
    out
}

/// Maximal minors test for generic independence of gradients on `V(bs)`.
///
/// Rows are the ambient relations followed by `bs`; minors have size
/// `codim(ambient) + bs.len()`. The verdict is true when adding all such minors
/// strictly lowers the dimension of the center.
pub fn gradient_generic_independence(
    bs: &[Polynomial],
    ambient: &PresentedAlgebra,
) -> Result<bool> {
    if !is_semiregular_sequence(bs, ambient)? {
        return Err(Error::precondition("sequence is not semi-regular"));
    }
    let ring = ambient.ring();
    let n = ring.nvars();
    let codim = (n as i64 - ambient.dimension()?) as usize;
    let mut rows: Vec<Polynomial> = ambient.relations().to_vec();
    rows.extend(bs.iter().cloned());
    let size = codim + bs.len();
    if size > n || size > rows.len() {
        return Ok(false);
    }
    let vars: Vec<usize> = (0..n).collect();
    let jac = jacobian_matrix(&rows, &vars);
    let mut minors = Vec::new();
    for rsel in subsets(rows.len(), size) {
        for csel in subsets(n, size) {
            let m: Vec<Vec<Polynomial>> = rsel
                .iter()
                .map(|&r| csel.iter().map(|&c| jac[r][c].clone()).collect())
                .collect();
            let d = determinant(&m)?;
            if !d.is_zero() {
                minors.push(d);
            }
        }
    }
    let center = ambient_with(ambient, bs);
    let dim_center = center.dimension()?;
    let dim_bad = center.with_generators(&minors).dimension()?;
    Ok(dim_bad < dim_center)
}

/// Extends `f` to a semi-regular sequence `f = b_0, ..., b_{len-1}` of random
/// combinations `Σ l_j g_j` of the generators of `i`, with `l_j` constant on early
/// draws and affine-linear on later ones.
pub fn generic_semiregular_extension(
    ambient: &PresentedAlgebra,
    i: &Ideal,
    f: &Polynomial,
    target_length: usize,
    seed: u64,
) -> Result<Vec<Polynomial>> {
    if f.is_zero() {
        return Err(Error::ZeroPolynomial("generic_semiregular_extension"));
    }
    if target_length == 0 {
        return Err(Error::precondition("target length must be positive"));
    }
    let full = ambient.ideal().sum(i);
    if !full.contains(f)? {
        return Err(Error::precondition("f is not in the ideal"));
    }
    let codim = ambient.dimension()? - full.dimension()?;
    if full.is_unit()? || (target_length as i64) > codim {
        return Err(Error::precondition(format!(
            "requested length {} exceeds codimension {} of the zero set",
            target_length, codim
        )));
    }
    let ring = ambient.ring();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut seq = vec![f.clone()];
    if !is_semiregular_sequence(&seq, ambient)? {
        return Err(Error::precondition(
            "f is a zero divisor or a unit in the ambient algebra",
        ));
    }
    while seq.len() < target_length {
        let mut found = None;
        for attempt in 0..EXTENSION_RETRIES {
            let linear = attempt >= EXTENSION_RETRIES / 4;
            let mut b = Polynomial::zero(ring);
            for g in i.generators() {
                let mut l = Polynomial::from_int(ring, rng.gen_range(-9..=9));
                if linear {
                    for v in 0..ring.nvars() {
                        let c = rng.gen_range(-3..=3);
                        if c != 0 {
                            l = &l + &Polynomial::var_index(ring, v).scale(&rat(c));
                        }
                    }
                }
                b = &b + &(&l * g);
            }
            if b.is_zero() {
                continue;
            }
            let mut cand = seq.clone();
            cand.push(b.clone());
            if is_semiregular_sequence(&cand, ambient)? {
                found = Some(b);
                break;
            }
        }
        match found {
            Some(b) => seq.push(b),
            None => {
                return Err(Error::BudgetExceeded {
                    what: "generic extension retries",
                    limit: EXTENSION_RETRIES,
                })
            }
        }
    }
    Ok(seq)
}
