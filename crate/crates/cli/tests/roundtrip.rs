use affinemod_cli::ast::*;
use affinemod_cli::parse_script;
use affinemod_core::poly::Expr;
use num_bigint::BigInt;
use proptest::prelude::*;
use proptest::test_runner::{Config, RngSeed, TestRunner};

fn name() -> impl Strategy<Value = Name> {
    "[a-z][a-z0-9_]{0,3}"
        .prop_filter("keywords are statement heads", |s| {
            !affinemod_cli::parser::DECLARATIONS.contains(&s.as_str())
                && !affinemod_cli::parser::COMMANDS.contains(&s.as_str())
        })
        .prop_map(Name::new)
}

fn names(max: usize) -> impl Strategy<Value = Vec<Name>> {
    prop::collection::vec(name(), 1..=max)
}

fn expr() -> impl Strategy<Value = Expr> {
    let leaf = prop_oneof![
        (0u32..50).prop_map(|n| Expr::Int(BigInt::from(n))),
        "[a-z][0-9]?".prop_map(Expr::Var),
    ];
    leaf.prop_recursive(4, 24, 2, |inner| {
        prop_oneof![
            inner.clone().prop_map(|a| Expr::Neg(Box::new(a))),
            (inner.clone(), inner.clone()).prop_map(|(a, b)| Expr::Add(Box::new(a), Box::new(b))),
            (inner.clone(), inner.clone()).prop_map(|(a, b)| Expr::Sub(Box::new(a), Box::new(b))),
            (inner.clone(), inner.clone()).prop_map(|(a, b)| Expr::Mul(Box::new(a), Box::new(b))),
            (inner.clone(), 1u32..20)
                .prop_map(|(a, n)| Expr::Div(Box::new(a), Box::new(Expr::Int(BigInt::from(n))))),
            (inner, 0u32..5).prop_map(|(a, e)| Expr::Pow(Box::new(a), e)),
        ]
    })
}

fn exprs(min: usize) -> impl Strategy<Value = Vec<Expr>> {
    prop::collection::vec(expr(), min..4)
}

fn family() -> impl Strategy<Value = FamilyDecl> {
    let root = (-5i64..5, prop::collection::vec(1u32..4, 0..3), exprs(0))
        .prop_map(|(root, n, r)| RootDecl { root, n, r });
    (
        2u32..9,
        2u32..9,
        prop::collection::vec(1u32..4, 0..3),
        exprs(0),
        prop::option::of(-100i64..100),
        prop::collection::vec(root, 0..2),
    )
        .prop_map(|(k, l, n, q, e, roots)| FamilyDecl {
            k,
            l,
            n,
            q,
            e,
            roots,
        })
}

fn statement() -> impl Strategy<Value = StmtKind> {
    prop_oneof![
        (name(), names(4), exprs(0)).prop_map(|(name, vars, relations)| StmtKind::Ring {
            name,
            vars,
            relations
        }),
        (name(), exprs(0)).prop_map(|(name, gens)| StmtKind::Ideal { name, gens }),
        (
            name(),
            prop::collection::vec((name(), prop::collection::vec(-99i64..99, 1..3)), 1..4)
        )
            .prop_map(|(name, entries)| StmtKind::Weights { name, entries }),
        (name(), prop::collection::vec((name(), expr()), 1..4)).prop_map(|(name, im)| {
            StmtKind::Derivation {
                name,
                body: DerivationBody::Images(im),
            }
        }),
        (name(), name(), expr(), expr()).prop_map(|(name, graded, first, second)| {
            StmtKind::Derivation {
                name,
                body: DerivationBody::Jacobian {
                    graded,
                    first,
                    second,
                },
            }
        }),
        (name(), name(), expr(), prop::option::of(1u32..4)).prop_map(
            |(name, ideal, modulus, generic)| StmtKind::Modify {
                name,
                ideal,
                modulus,
                generic
            }
        ),
        (name(), family()).prop_map(|(name, params)| StmtKind::Family { name, params }),
        (name(), prop::collection::vec(name(), 0..3))
            .prop_map(|(locus, vars)| StmtKind::Davis { locus, vars }),
        name().prop_map(|locus| StmtKind::Ideals { locus }),
        name().prop_map(|locus| StmtKind::Largest { locus }),
        (name(), expr(), expr()).prop_map(|(locus, first, second)| StmtKind::Split {
            locus,
            first,
            second
        }),
        names(3).prop_map(|loci| StmtKind::Fiber { loci }),
        (
            name(),
            name(),
            expr(),
            exprs(1),
            0u32..4,
            prop::collection::vec(name(), 0..3)
        )
            .prop_map(|(name, base, modulus, centers, exponent, vars)| {
                StmtKind::BasicStep {
                    name,
                    base,
                    modulus,
                    centers,
                    exponent,
                    vars,
                }
            }),
        (name(), name(), name()).prop_map(|(name, algebra, weights)| StmtKind::Graded {
            name,
            source: GradedSource::Weighted { algebra, weights }
        }),
        (name(), name()).prop_map(|(name, f)| StmtKind::Graded {
            name,
            source: GradedSource::Family(f)
        }),
        (name(), expr()).prop_map(|(graded, element)| StmtKind::Gr { graded, element }),
        name().prop_map(|derivation| StmtKind::LndCheck { derivation }),
        (name(), expr()).prop_map(|(derivation, element)| StmtKind::Degree {
            derivation,
            element
        }),
        (name(), expr()).prop_map(|(derivation, element)| StmtKind::Exp {
            derivation,
            element
        }),
        (name(), expr(), expr()).prop_map(|(graded, first, second)| StmtKind::Jacobian {
            graded,
            first,
            second
        }),
        name().prop_map(|family| StmtKind::MlCert { family }),
        Just(StmtKind::Corpus),
    ]
}

fn script() -> impl Strategy<Value = Script> {
    prop::collection::vec(statement().prop_map(Statement::new), 0..8)
        .prop_map(|statements| Script { statements })
}

#[test]
fn print_then_reparse_is_identity() {
    let mut runner = TestRunner::new(Config {
        cases: 256,
        rng_seed: RngSeed::Fixed(0x5eed),
        failure_persistence: None,
        ..Config::default()
    });
    runner
        .run(&script(), |s| {
            let printed = s.to_string();
            let reparsed = parse_script(&printed)
                .map_err(|e| TestCaseError::fail(format!("{e}\n{printed}")))?;
            prop_assert_eq!(&reparsed, &s, "{}", printed);
            prop_assert_eq!(reparsed.to_string(), printed);
            Ok(())
        })
        .unwrap();
}

#[test]
fn corpus_scripts_round_trip() {
    for e in affinemod_cli::corpus::ENTRIES {
        let s = parse_script(e.script).unwrap();
        assert_eq!(parse_script(&s.to_string()).unwrap(), s, "{}", e.name);
    }
}
