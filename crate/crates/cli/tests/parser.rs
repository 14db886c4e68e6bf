use eqorder_cli::spec::{format_word, parse_spec, Param, Spec, Word};
use eqorder_cli::CliError;
use proptest::prelude::*;

fn call(name: &str, params: Vec<Param>) -> Spec {
    Spec::Call { name: name.into(), params }
}

#[test]
fn basic_forms() {
    assert_eq!(parse_spec("cyclic(8)").unwrap(), call("cyclic", vec![Param::Int(8)]));
    assert_eq!(parse_spec("paper.f20").unwrap(), call("paper.f20", vec![]));
    assert_eq!(parse_spec("sl2(gf(3^2))").unwrap(), call("sl2", vec![Param::Field(3, 2)]));
    assert_eq!(parse_spec("sl2(3^2)").unwrap(), call("sl2", vec![Param::Power(3, 2)]));
    match parse_spec("sym(3) x alt(4)").unwrap() {
        Spec::Product(a, b) => {
            assert_eq!(*a, call("sym", vec![Param::Int(3)]));
            assert_eq!(*b, call("alt", vec![Param::Int(4)]));
        }
        other => panic!("{other:?}"),
    }
}

#[test]
fn product_is_left_associative() {
    let s = parse_spec("cyclic(2) x cyclic(3) x cyclic(5)").unwrap();
    let Spec::Product(left, _) = &s else { panic!() };
    assert!(matches!(**left, Spec::Product(..)));
    let r = parse_spec("cyclic(2) x (cyclic(3) x cyclic(5))").unwrap();
    assert_ne!(s, r);
    assert_eq!(r.to_string(), "cyclic(2) x (cyclic(3) x cyclic(5))");
}

#[test]
fn permutation_literals() {
    let s = parse_spec("perm[5; (1,2,3,4,5) (2,3,5,4)]").unwrap();
    assert_eq!(s, Spec::Perm { degree: 5, gens: vec![vec![vec![1, 2, 3, 4, 5]], vec![vec![2, 3, 5, 4]]] });
    // adjacent cycles form one generator
    let s = parse_spec("perm[4; (1,2)(3,4) (1,3)]").unwrap();
    assert_eq!(s, Spec::Perm { degree: 4, gens: vec![vec![vec![1, 2], vec![3, 4]], vec![vec![1, 3]]] });
    // no whitespace inside a cycle
    assert!(matches!(parse_spec("perm[3; (1, 2)]"), Err(CliError::Syntax { line: 1, col: 12, .. })));
}

#[test]
fn words_and_subgroups() {
    let s = parse_spec("subgroup(ambient, [x^4, y*x^-1, e])").unwrap();
    let Spec::Subgroup { words, .. } = &s else { panic!() };
    let w: Vec<Word> = vec![vec![(0, 4)], vec![(1, 1), (0, -1)], vec![]];
    assert_eq!(words, &w);
    assert_eq!(format_word(&w[1]), "y*x^-1");
    assert_eq!(s.to_string(), "subgroup(ambient, [x^4, y*x^-1, e])");
    let s = parse_spec("semidirect(cyclic(7), cyclic(3), images=[[x^2]])").unwrap();
    assert!(matches!(s, Spec::Semidirect { .. }));
}

#[test]
fn syntax_errors_are_positioned() {
    match parse_spec("cyclic(8") {
        Err(CliError::Syntax { line, col, expected }) => {
            assert_eq!((line, col), (1, 9));
            assert!(expected.contains("')'"));
        }
        other => panic!("{other:?}"),
    }
    match parse_spec("sym(3) x\n  $") {
        Err(CliError::Syntax { line, col, .. }) => assert_eq!((line, col), (2, 3)),
        other => panic!("{other:?}"),
    }
    assert!(matches!(parse_spec("cyclic(8) cyclic(3)"), Err(CliError::Syntax { .. })));
    assert!(matches!(parse_spec(""), Err(CliError::Syntax { line: 1, col: 1, .. })));
}

const RESERVED: [&str; 8] = ["x", "e", "gf", "perm", "semidirect", "subgroup", "images", "g1"];

fn ident() -> impl Strategy<Value = String> {
    "[a-w][a-z0-9_]{0,5}".prop_filter("reserved", |s| !RESERVED.contains(&s.as_str()))
}

fn word() -> impl Strategy<Value = Word> {
    prop::collection::vec((0usize..6, prop_oneof![Just(1i64), -20i64..20]), 0..4)
}

fn words() -> impl Strategy<Value = Vec<Word>> {
    prop::collection::vec(word(), 1..4)
}

fn spec_strategy() -> impl Strategy<Value = Spec> {
    let leaf = prop_oneof![
        (ident(), prop::option::of(ident())).prop_map(|(a, b)| Spec::Call {
            name: match b {
                Some(b) => format!("{a}.{b}"),
                None => a,
            },
            params: vec![],
        }),
        (ident(), prop::collection::vec(0u64..1000, 1..4)).prop_map(|(name, ns)| Spec::Call {
            name,
            params: ns.into_iter().map(Param::Int).collect(),
        }),
        (ident(), 2u64..20, 1u32..6, any::<bool>()).prop_map(|(name, p, n, field)| Spec::Call {
            name,
            params: vec![if field { Param::Field(p, n) } else { Param::Power(p, n) }],
        }),
        (1u32..9).prop_flat_map(|d| {
            let gen = prop::collection::vec(prop::collection::vec(1..=d, 1..4), 0..3);
            prop::collection::vec(gen, 0..3).prop_map(move |gens| Spec::Perm { degree: d, gens })
        }),
    ];
    leaf.prop_recursive(4, 24, 3, |inner| {
        prop_oneof![
            (inner.clone(), inner.clone()).prop_map(|(a, b)| Spec::Product(Box::new(a), Box::new(b))),
            (ident(), prop::collection::vec(inner.clone(), 1..3)).prop_map(|(name, ps)| Spec::Call {
                name,
                params: ps.into_iter().map(Param::Spec).collect(),
            }),
            (inner.clone(), words()).prop_map(|(g, words)| Spec::Subgroup { group: Box::new(g), words }),
            (inner.clone(), inner, prop::collection::vec(words(), 1..3)).prop_map(|(k, h, images)| {
                Spec::Semidirect { kernel: Box::new(k), acting: Box::new(h), images }
            }),
        ]
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(400))]

    #[test]
    fn print_parse_round_trip(spec in spec_strategy()) {
        let text = spec.to_string();
        let parsed = parse_spec(&text).unwrap_or_else(|e| panic!("{text}: {e}"));
        prop_assert_eq!(&parsed, &spec);
        prop_assert_eq!(parsed.to_string(), text);
    }

    #[test]
    fn parser_never_panics(text in "[a-z0-9(),\\[\\];.^*= x-]{0,40}") {
        let _ = parse_spec(&text);
    }
}
