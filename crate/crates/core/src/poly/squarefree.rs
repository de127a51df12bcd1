use num_traits::Zero;

use super::{Monomial, Polynomial};
use crate::error::{Error, Result};
use crate::ideal::Ideal;

/// `p / gcd(p, ∂p/∂x_1, ..., ∂p/∂x_n)`, normalized to leading coefficient one.
pub(super) fn squarefree_part(p: &Polynomial) -> Result<Polynomial> {
    if p.is_zero() {
        return Err(Error::ZeroPolynomial("squarefree_part"));
    }
    if p.is_constant() {
        return Ok(Polynomial::one(p.ring()));
    }
    let mut g = p.clone();
    for v in p.variables() {
        g = gcd(&g, &p.derivative(v))?;
        if g.is_constant() {
            break;
        }
    }
    let q = p
        .exact_div(&g)?
        .ok_or_else(|| Error::invariant("gcd does not divide its argument"))?;
    Ok(q.normalized())
}

/// Greatest common divisor, normalized (see [`Polynomial::normalized`]).
pub fn gcd(a: &Polynomial, b: &Polynomial) -> Result<Polynomial> {
    if a.is_zero() {
        return Ok(b.normalized());
    }
    if b.is_zero() {
        return Ok(a.normalized());
    }
    if a.is_constant() || b.is_constant() {
        return Ok(Polynomial::one(a.ring()));
    }
    let mut vars = a.variables();
    for v in b.variables() {
        if !vars.contains(&v) {
            vars.push(v);
        }
    }
    if vars.len() == 1 {
        return Ok(univariate_gcd(a, b, vars[0]));
    }
    // gcd = a*b / lcm, where (lcm) = (a) ∩ (b).
    let ia = Ideal::new(a.ring(), vec![a.clone()]);
    let ib = Ideal::new(a.ring(), vec![b.clone()]);
    let meet = ia.intersect(&ib)?;
    let lcm = meet
        .generators()
        .iter()
        .filter(|g| !g.is_zero())
        .min_by_key(|g| g.nterms())
        .cloned()
        .ok_or_else(|| Error::invariant("empty intersection of principal ideals"))?;
    let g = (a * b)
        .exact_div(&lcm)?
        .ok_or_else(|| Error::invariant("lcm does not divide the product"))?;
    Ok(g.normalized())
}

fn univariate_gcd(a: &Polynomial, b: &Polynomial, v: usize) -> Polynomial {
    let mut x = a.clone();
    let mut y = b.clone();
    while !y.is_zero() {
        let r = univariate_rem(&x, &y, v);
        x = y;
        y = r;
    }
    x.normalized()
}

fn univariate_rem(a: &Polynomial, b: &Polynomial, v: usize) -> Polynomial {
    let n = a.ring().nvars();
    let db = b.degree_in(v);
    let lb = b.coefficient(&Monomial::var(n, v, db));
    let mut r = a.clone();
    loop {
        if r.is_zero() {
            return r;
        }
        let dr = r.degree_in(v);
        if dr < db {
            return r;
        }
        let lr = r.coefficient(&Monomial::var(n, v, dr));
        debug_assert!(!lr.is_zero());
        r = &r - &b.mul_monomial(&Monomial::var(n, v, dr - db), &(lr / &lb));
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::Ring;

    fn p(r: &std::sync::Arc<Ring>, s: &str) -> Polynomial {
        Polynomial::parse(r, s).unwrap()
    }

    #[test]
    fn univariate_examples() {
        let r = Ring::new(&["x", "y"]).unwrap();
        assert_eq!(p(&r, "x^2").squarefree_part().unwrap(), p(&r, "x"));
        assert_eq!(
            p(&r, "x^2*(x-1)").squarefree_part().unwrap(),
            p(&r, "x^2 - x")
        );
        assert_eq!(
            p(&r, "y^2 - y").squarefree_part().unwrap(),
            p(&r, "y^2 - y")
        );
        assert_eq!(
            p(&r, "3*(x+1)^4").squarefree_part().unwrap(),
            p(&r, "x + 1")
        );
    }

    #[test]
    fn multivariate_examples() {
        let r = Ring::new(&["x", "y"]).unwrap();
        assert_eq!(p(&r, "x^2*y").squarefree_part().unwrap(), p(&r, "x*y"));
        let q = p(&r, "(x*y - 1)^2*(x + y)").squarefree_part().unwrap();
        assert!(q.scalar_ratio(&p(&r, "(x*y - 1)*(x + y)")).is_some());
        assert!(matches!(
            Polynomial::zero(&r).squarefree_part(),
            Err(Error::ZeroPolynomial(_))
        ));
    }
}
