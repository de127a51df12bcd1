use std::sync::Arc;

use affinemod_core::derivation::{jacobian_derivation, Derivation};
use affinemod_core::grading::{convention51_weights, gr_element, graded_ideal, GradedPresentation};
use affinemod_core::poly::rat;
use affinemod_core::{
    Error, Ideal, Monomial, MonomialOrder, Polynomial, PresentedAlgebra, Ring, WeightFunction,
    WeightVector,
};
use proptest::prelude::*;
use proptest::test_runner::{Config, RngSeed, TestRunner};

pub type Outcome = Result<(), String>;

fn config(seed: u64) -> Config {
    Config {
        cases: 200,
        rng_seed: RngSeed::Fixed(seed),
        failure_persistence: None,
        ..Config::default()
    }
}

type Terms = Vec<(i64, Vec<u32>)>;

fn terms(nvars: usize, max_terms: usize, max_exp: u32) -> impl Strategy<Value = Terms> {
    prop::collection::vec(
        (-5i64..=5, prop::collection::vec(0..=max_exp, nvars)),
        1..=max_terms,
    )
}

fn poly(ring: &Arc<Ring>, t: &Terms) -> Polynomial {
    Polynomial::from_terms(
        ring,
        t.iter()
            .map(|(c, e)| (Monomial::from_exponents(e.clone()), rat(*c))),
    )
}

fn xyz() -> Arc<Ring> {
    Ring::new(&["x", "y", "z"]).unwrap()
}

fn skip_budget<T>(r: Result<T, Error>) -> Result<T, TestCaseError> {
    match r {
        Ok(v) => Ok(v),
        Err(Error::BudgetExceeded { .. }) => Err(TestCaseError::reject("budget")),
        Err(e) => Err(TestCaseError::fail(e.to_string())),
    }
}

pub fn s_polynomials_reduce_to_zero() -> Outcome {
    let mut runner = TestRunner::new(config(11));
    let strategy = (terms(3, 3, 2), terms(3, 3, 2), any::<bool>());
    let result = runner.run(&strategy, |(a, b, lex)| {
        let r = xyz();
        let order = if lex {
            MonomialOrder::Lex
        } else {
            MonomialOrder::DegRevLex
        };
        let ideal = Ideal::new(&r, vec![poly(&r, &a), poly(&r, &b)]);
        let gb = skip_budget(ideal.groebner_basis(&order))?;
        let basis = Ideal::new(&r, gb.clone());
        for i in 0..gb.len() {
            for j in i + 1..gb.len() {
                let s = order.s_polynomial(&gb[i], &gb[j]).unwrap();
                prop_assert!(basis.normal_form(&s, &order).unwrap().is_zero());
            }
        }
        for g in ideal.generators() {
            prop_assert!(ideal.normal_form(g, &order).unwrap().is_zero());
        }
        Ok(())
    });
    result.map_err(|e| e.to_string())
}

pub fn normal_form_idempotent() -> Outcome {
    let mut runner = TestRunner::new(config(12));
    let strategy = (terms(3, 3, 2), terms(3, 3, 2), terms(3, 5, 3));
    let result = runner.run(&strategy, |(a, b, p)| {
        let r = xyz();
        let order = MonomialOrder::DegRevLex;
        let ideal = Ideal::new(&r, vec![poly(&r, &a), poly(&r, &b)]);
        let p = poly(&r, &p);
        let nf = skip_budget(ideal.normal_form(&p, &order))?;
        prop_assert_eq!(&ideal.normal_form(&nf, &order).unwrap(), &nf);
        prop_assert!(ideal.contains(&(&p - &nf)).unwrap());
        Ok(())
    });
    result.map_err(|e| e.to_string())
}

pub fn principal_component_multiplicative() -> Outcome {
    let mut runner = TestRunner::new(config(13));
    let strategy = (
        prop::collection::vec((-5i64..=5, -5i64..=5), 3),
        terms(3, 4, 3),
        terms(3, 4, 3),
    );
    let result = runner.run(&strategy, |(w, a, b)| {
        let r = xyz();
        let wf = WeightFunction::new(
            &r,
            w.iter().map(|(p, q)| WeightVector(vec![*p, *q])).collect(),
        )
        .unwrap();
        let (a, b) = (poly(&r, &a), poly(&r, &b));
        prop_assume!(!a.is_zero() && !b.is_zero());
        let ab = &a * &b;
        prop_assert_eq!(
            wf.principal_component(&ab).unwrap(),
            &wf.principal_component(&a).unwrap() * &wf.principal_component(&b).unwrap()
        );
        prop_assert_eq!(
            wf.degree(&ab).unwrap(),
            &wf.degree(&a).unwrap() + &wf.degree(&b).unwrap()
        );
        Ok(())
    });
    result.map_err(|e| e.to_string())
}

fn family_gp() -> GradedPresentation {
    let r = Ring::new(&["x", "y", "z", "v1", "v2"]).unwrap();
    let w = convention51_weights(&r, 3, 2, &[2], &[], 18).unwrap();
    let alg =
        PresentedAlgebra::new(Ideal::parse(&r, &["x*v1 - y^3 + z^2", "x*v2 - v1^2 + y"]).unwrap())
            .unwrap();
    graded_ideal(&alg, &w).unwrap()
}

pub fn gr_multiplicative() -> Outcome {
    let mut runner = TestRunner::new(config(14));
    let strategy = (terms(5, 3, 2), terms(5, 3, 2));
    let result = runner.run(&strategy, |(a, b)| {
        let gp = family_gp();
        let r = gp.source().ring().clone();
        let (a, b) = (poly(&r, &a), poly(&r, &b));
        let src = gp.source();
        prop_assume!(!src.is_zero(&a).unwrap() && !src.is_zero(&b).unwrap());
        let ga = gr_element(&a, &gp, 64).unwrap();
        let gb = gr_element(&b, &gp, 64).unwrap();
        let gab = gr_element(&(&a * &b), &gp, 64).unwrap();
        prop_assert!(gp
            .graded()
            .is_zero(&(&gab.component - &(&ga.component * &gb.component)))
            .unwrap());
        prop_assert_eq!(gab.degree, &ga.degree + &gb.degree);
        Ok(())
    });
    result.map_err(|e| e.to_string())
}

struct Lnd {
    d: Derivation,
    kernel: Vec<Polynomial>,
}

fn corpus_lnds() -> Vec<Lnd> {
    let r = xyz();
    let dan = PresentedAlgebra::new(Ideal::parse(&r, &["x*z - y^2 + y"]).unwrap()).unwrap();
    let p = |s: &str| Polynomial::parse(&r, s).unwrap();
    let mut out = vec![
        Lnd {
            d: Derivation::from_named(&dan, &[("y", "x"), ("z", "2*y - 1")]).unwrap(),
            kernel: vec![p("x")],
        },
        Lnd {
            d: Derivation::from_named(&PresentedAlgebra::polynomial_ring(&r), &[("z", "1")])
                .unwrap(),
            kernel: vec![p("x"), p("y")],
        },
    ];
    let r5 = Ring::new(&["x", "y", "z", "v1", "v2"]).unwrap();
    let w = convention51_weights(&r5, 3, 2, &[2], &[], 18).unwrap();
    let hat =
        PresentedAlgebra::new(Ideal::parse(&r5, &["x*v1 - y^3 + z^2", "x*v2 - v1^2"]).unwrap())
            .unwrap();
    let gp = graded_ideal(&hat, &w).unwrap();
    for second in ["y", "z"] {
        let x = Polynomial::var(&r5, "x").unwrap();
        let s = Polynomial::var(&r5, second).unwrap();
        out.push(Lnd {
            d: jacobian_derivation(&gp, &x, &s).unwrap(),
            kernel: vec![x, s],
        });
    }
    out
}

/// Random element: a polynomial in the known kernel generators, or an
/// arbitrary polynomial in the first three variables.
fn element(lnd: &Lnd, in_kernel: bool, t: &Terms) -> Polynomial {
    let ring = lnd.d.ring();
    let mut out = Polynomial::zero(ring);
    for (c, e) in t {
        let mut m = Polynomial::from_int(ring, *c);
        if in_kernel {
            for (g, k) in lnd.kernel.iter().zip(e) {
                m = &m * &g.pow(*k);
            }
        } else {
            for (i, k) in e.iter().enumerate() {
                m = &m * &Polynomial::var_index(ring, i).pow(*k);
            }
        }
        out = &out + &m;
    }
    out
}

pub fn leibniz_rule() -> Outcome {
    let mut runner = TestRunner::new(config(15));
    let strategy = (0usize..4, terms(3, 3, 2), terms(3, 3, 2));
    let result = runner.run(&strategy, |(which, a, b)| {
        let lnds = corpus_lnds();
        let d = &lnds[which].d;
        let (a, b) = (
            element(&lnds[which], false, &a),
            element(&lnds[which], false, &b),
        );
        let lhs = d.derive(&(&a * &b)).unwrap();
        let rhs = &(&a * &d.derive(&b).unwrap()) + &(&b * &d.derive(&a).unwrap());
        prop_assert!(d.algebra().is_zero(&(&lhs - &rhs)).unwrap());
        Ok(())
    });
    result.map_err(|e| e.to_string())
}

pub fn exp_is_homomorphism() -> Outcome {
    let mut runner = TestRunner::new(config(16));
    let strategy = (0usize..4, terms(3, 3, 2), terms(3, 3, 2));
    let result = runner.run(&strategy, |(which, a, b)| {
        let lnds = corpus_lnds();
        let d = &lnds[which].d;
        let (a, b) = (
            element(&lnds[which], false, &a),
            element(&lnds[which], false, &b),
        );
        let ea = d.exp_action("t", &a, 64).unwrap();
        let eb = d.exp_action("t", &b, 64).unwrap();
        let eab = d.exp_action("t", &(&a * &b), 64).unwrap();
        let ext = d.exp_algebra("t").unwrap();
        prop_assert!(ext.is_zero(&(&eab - &(&ea * &eb))).unwrap());
        Ok(())
    });
    result.map_err(|e| e.to_string())
}

pub fn kernel_closure() -> Outcome {
    let mut runner = TestRunner::new(config(17));
    let strategy = (
        0usize..4,
        any::<bool>(),
        any::<bool>(),
        terms(3, 2, 2),
        terms(3, 2, 2),
        any::<bool>(),
    );
    let result = runner.run(&strategy, |(which, k1, k2, a, b, swap)| {
        let lnds = corpus_lnds();
        let lnd = &lnds[which];
        let d = &lnd.d;
        let alg = d.algebra();
        let (a1, a2) = (element(lnd, k1, &a), element(lnd, k2, &b));
        let prod = &a1 * &a2;
        if !alg.is_zero(&prod).unwrap() && d.kernel_member(&prod).unwrap() {
            prop_assert!(d.kernel_member(&a1).unwrap() && d.kernel_member(&a2).unwrap());
        }
        let (p, q) = if swap { (3, 2) } else { (2, 3) };
        let s = &a1.pow(p) + &a2.pow(q);
        if !alg.is_zero(&s).unwrap() && d.kernel_member(&s).unwrap() {
            prop_assert!(d.kernel_member(&a1).unwrap() && d.kernel_member(&a2).unwrap());
        }
        Ok(())
    });
    result.map_err(|e| e.to_string())
}

pub fn degree_function_axioms() -> Outcome {
    let mut runner = TestRunner::new(config(18));
    let strategy = (0usize..4, terms(3, 3, 2), terms(3, 3, 2));
    let result = runner.run(&strategy, |(which, a, b)| {
        let lnds = corpus_lnds();
        let d = &lnds[which].d;
        let alg = d.algebra();
        let (a, b) = (
            element(&lnds[which], false, &a),
            element(&lnds[which], false, &b),
        );
        prop_assume!(!alg.is_zero(&a).unwrap() && !alg.is_zero(&b).unwrap());
        let da = d.degree(&a, 64).unwrap().degree;
        let db = d.degree(&b, 64).unwrap().degree;
        prop_assert_eq!(d.degree(&(&a * &b), 64).unwrap().degree, da + db);
        let sum = &a + &b;
        if !alg.is_zero(&sum).unwrap() {
            prop_assert!(d.degree(&sum, 64).unwrap().degree <= da.max(db));
        }
        Ok(())
    });
    result.map_err(|e| e.to_string())
}

pub type Suite = (&'static str, fn() -> Outcome);

#[allow(dead_code)]
pub const SUITES: [Suite; 8] = [
    (
        "groebner s-polynomials reduce to zero",
        s_polynomials_reduce_to_zero,
    ),
    ("normal form idempotence", normal_form_idempotent),
    (
        "principal component multiplicativity",
        principal_component_multiplicative,
    ),
    ("gr multiplicativity", gr_multiplicative),
    ("leibniz rule", leibniz_rule),
    ("exp action homomorphism", exp_is_homomorphism),
    ("kernel closure", kernel_closure),
    ("derivation degree axioms", degree_function_axioms),
];
