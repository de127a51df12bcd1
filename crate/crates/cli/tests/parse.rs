use affinemod_cli::ast::{DerivationBody, StmtKind};
use affinemod_cli::{parse, parse_script};

#[test]
fn grammar_smoke() {
    let s = parse("ring A = Q[x,y]; ideal I = (x, y^2 - y); modify M = (I, x); davis M;").unwrap();
    assert_eq!(s.statements.len(), 4);
    assert!(matches!(s.statements[3].kind, StmtKind::Davis { .. }));
}

#[test]
fn family_and_certificate_round_trip() {
    let text = "family F { k=3 l=2 n=[2] q=[0] }; mlcert F;";
    let s = parse(text).unwrap();
    assert_eq!(s.statements.len(), 2);
    let StmtKind::Family { params, .. } = &s.statements[0].kind else {
        panic!("not a family");
    };
    assert_eq!((params.k, params.l, params.n.clone()), (3, 2, vec![2]));
    let printed = s.to_string();
    assert_eq!(printed, "family F { k=3 l=2 n=[2] q=[0] };\nmlcert F;\n");
    assert_eq!(parse(&printed).unwrap(), s);
}

#[test]
fn double_comma_is_a_syntax_error() {
    let e = parse_script("ring A = Q[x,y];\nideal I = (x,,y)").unwrap_err();
    assert_eq!((e.line, e.column), (2, 14));
    assert_eq!(e.expected, vec!["expression".to_string()]);
    assert!(e.to_string().contains("found `,`"), "{e}");
}

#[test]
fn missing_semicolon_lists_expected_tokens() {
    let e = parse_script("ring A = Q[x]").unwrap_err();
    assert!(e.expected.contains(&"`;`".to_string()), "{e:?}");
    let e = parse_script("ring A = Q[x]; davis").unwrap_err();
    assert_eq!(e.expected, vec!["identifier".to_string()]);
}

#[test]
fn unknown_statement_lists_keywords() {
    let e = parse_script("blowup A;").unwrap_err();
    assert_eq!(e.expected.len(), 20);
    assert!(e.expected.contains(&"`mlcert`".to_string()));
}

#[test]
fn spans_point_at_keywords() {
    let s = parse_script("# header\nring A = Q[x];\n  ideal I = (x);").unwrap();
    assert_eq!(
        (s.statements[0].span.line, s.statements[0].span.column),
        (2, 1)
    );
    assert_eq!(
        (s.statements[1].span.line, s.statements[1].span.column),
        (3, 3)
    );
}

#[test]
fn name_resolution() {
    let undeclared = parse("ring A = Q[x]; davis M;").unwrap_err();
    assert!(undeclared.message.contains("`M` is not declared"));
    assert_eq!((undeclared.line, undeclared.column), (1, 22));

    let twice = parse("ring A = Q[x]; ring A = Q[y];").unwrap_err();
    assert!(twice.message.contains("already declared"));

    let wrong_kind = parse("ring A = Q[x]; ideal I = (x); lndcheck I;").unwrap_err();
    assert!(
        wrong_kind.message.contains("expected a derivation"),
        "{wrong_kind}"
    );

    let no_ring = parse("ideal I = (x);").unwrap_err();
    assert!(no_ring.message.contains("needs a ring"));

    let later = parse("davis M; ring A = Q[x]; ideal I = (x); modify M = (I, x);").unwrap_err();
    assert!(later.message.contains("not declared"));
}

#[test]
fn jacobian_derivation_and_implicit_products() {
    let s =
        parse_script("derivation D = jacobian(G, x, y^3 + 2z^2); derivation E = { y -> 2x y };")
            .unwrap();
    let StmtKind::Derivation {
        body: DerivationBody::Jacobian { second, .. },
        ..
    } = &s.statements[0].kind
    else {
        panic!("expected a jacobian derivation");
    };
    assert_eq!(second.to_string(), "y^3 + 2*z^2");
    assert_eq!(
        s.statements[1].to_string(),
        "derivation E = { y -> 2*x*y };"
    );
}

#[test]
fn family_field_errors() {
    assert!(parse_script("family F { k=3 l=2 n=[2] };")
        .unwrap_err()
        .message
        .contains("`q`"));
    assert!(parse_script("family F { k=3 k=3 l=2 n=[2] q=[0] };")
        .unwrap_err()
        .message
        .contains("twice"));
    let s =
        parse_script("family F { q=[y] n=[2] l=2 k=3 e=60 root -1 { r=[0, 0] n=[1] } };").unwrap();
    assert_eq!(
        s.to_string(),
        "family F { k=3 l=2 n=[2] q=[y] e=60 root -1 { n=[1] r=[0, 0] } };\n"
    );
}
