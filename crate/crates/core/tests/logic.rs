mod common;

use std::fs;

use common::{combinator_trial, f, proofs_dir};
use proptest::prelude::*;
use qstar_core::logic::library::DERIVATIONS;
use qstar_core::logic::{
    check_proof, check_proof_from, match_schema, schema, Combinator, Formula, Justification, Kernel, ProofErrorKind,
    ProofLine, ProofScript,
};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

/// Set `QSTAR_BLESS=1` to rewrite `fixtures/proofs/` from the library.
#[test]
fn shipped_proofs_match_library() {
    let bless = std::env::var_os("QSTAR_BLESS").is_some();
    let dir = proofs_dir();
    for d in DERIVATIONS {
        let text = (d.build)().to_string();
        let path = dir.join(format!("{}.prf", d.name));
        if bless {
            fs::create_dir_all(&dir).unwrap();
            fs::write(&path, &text).unwrap();
        } else {
            let on_disk = fs::read_to_string(&path).unwrap_or_else(|e| panic!("{}: {e}", path.display()));
            assert_eq!(on_disk, text, "{} is stale; rerun with QSTAR_BLESS=1", path.display());
        }
    }
    let files = fs::read_dir(&dir).unwrap().count();
    assert_eq!(files, DERIVATIONS.len());
}

#[test]
fn shipped_proofs_verify() {
    for (name, text) in qstar_core::fixtures::PROOFS {
        let script = ProofScript::parse(text).unwrap_or_else(|e| panic!("{name}: {e}"));
        let v = check_proof(&script).unwrap_or_else(|e| panic!("{name}: {e}"));
        assert!(!v.goals.is_empty(), "{name}");
    }
}

fn goals(name: &str) -> Vec<Formula> {
    let (_, text) = qstar_core::fixtures::PROOFS.iter().find(|(n, _)| *n == name).unwrap();
    check_proof(&ProofScript::parse(text).unwrap()).unwrap().goals
}

#[test]
fn shipped_goal_shapes() {
    assert_eq!(goals("refl"), vec![f("p -> p")]);
    assert_eq!(goals("plus_zero"), vec![f("(~q -> p -> p) -> q"), f("q -> ~q -> p -> p")]);
    assert_eq!(goals("pos_filter"), vec![f("(1 -> 1) -> p^+")]);
    assert_eq!(goals("double_neg"), vec![f("p -> ~~p"), f("~~p -> p")]);
    assert_eq!(goals("cong_neg"), vec![f("~p -> ~q"), f("~q -> ~p")]);
    assert_eq!(goals("rule_r1"), vec![f("(1 -> 1) -> q")]);
    assert_eq!(goals("rule_r3"), vec![f("(q -> r) -> p -> t")]);
    assert_eq!(
        goals("replace_deep_right"),
        vec![f("(u -> (s -> p1)^+) -> u -> (s -> r1)^+"), f("(u -> (s -> r1)^+) -> u -> (s -> p1)^+")]
    );
}

fn line(formula: &str, justification: Justification) -> ProofLine {
    ProofLine {
        formula: f(formula),
        justification,
    }
}

fn q10(p: &str) -> Justification {
    Justification::Axiom {
        schema: "Q10".into(),
        subst: [("p".to_string(), f(p))].into(),
    }
}

#[test]
fn kernel_rejections() {
    let bad_axiom = ProofScript {
        lines: vec![line("p -> p", q10("p"))],
        ..Default::default()
    };
    let e = check_proof(&bad_axiom).unwrap_err();
    assert_eq!(e.line, 1);
    assert!(matches!(e.kind, ProofErrorKind::NotInstance { .. }));

    let forward = ProofScript {
        lines: vec![line("p -> 1", Justification::R2 { from: 2 }), line("p -> 1", q10("p"))],
        ..Default::default()
    };
    assert_eq!(check_proof(&forward).unwrap_err().kind, ProofErrorKind::ForwardReference { cited: 2 });

    // (1 -> 1) -> p^+ is only detached to p^+ by a kernel without the implication check
    let pos = ProofScript {
        hypotheses: vec![f("(1 -> 1) -> p^+")],
        lines: vec![
            line("(1 -> 1) -> p^+", Justification::Hypothesis(1)),
            line("p^+", Justification::R2 { from: 1 }),
        ],
        ..Default::default()
    };
    let e = check_proof(&pos).unwrap_err();
    assert_eq!(e.to_string(), "line 2: R2 consequent must be an implication");
    assert!(Kernel::LAX_R2.check(&pos.hypotheses, &pos).is_ok());

    let r1 = ProofScript {
        hypotheses: vec![f("p"), f("p -> q")],
        lines: vec![
            line("p", Justification::Hypothesis(1)),
            line("p -> q", Justification::Hypothesis(2)),
            line(
                "(r -> r) -> q",
                Justification::R1 {
                    minor: 1,
                    major: 2,
                    side: f("1"),
                },
            ),
        ],
        ..Default::default()
    };
    assert!(matches!(check_proof(&r1).unwrap_err().kind, ProofErrorKind::R1Conclusion { .. }));
    let e = check_proof_from(&[f("p")], &r1).unwrap_err();
    assert!(matches!(e.kind, ProofErrorKind::NoSuchHypothesis { index: 2, .. }));
}

#[test]
fn schema_matching() {
    let q3l = schema("Q3.L").unwrap();
    let m = match_schema(q3l, &f("~x -> (y -> y) -> ~x")).unwrap();
    assert_eq!(m["p"], f("~x"));
    assert_eq!(m["q"], f("y"));
    assert!(match_schema(q3l, &f("~x -> (y -> z) -> ~x")).is_none());
    assert!(match_schema(schema("Q10").unwrap(), &f("(p -> q) -> 1")).is_some());
}

#[test]
fn combinators_are_total_on_random_inputs() {
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    for c in Combinator::ALL {
        for _ in 0..100 {
            combinator_trial(&mut rng, c).unwrap();
        }
    }
}

fn arb_formula() -> impl Strategy<Value = Formula> {
    let leaf = prop_oneof![
        Just(Formula::one()),
        prop::sample::select(vec!["p", "q", "r", "x1"]).prop_map(Formula::var),
    ];
    leaf.prop_recursive(5, 40, 2, |inner| {
        prop_oneof![
            inner.clone().prop_map(|a| a.neg()),
            inner.clone().prop_map(|a| a.pos()),
            inner.clone().prop_map(|a| a.negpart()),
            (inner.clone(), inner).prop_map(|(a, b)| a.imp(&b)),
        ]
    })
}

proptest! {
    #[test]
    fn print_then_parse(a in arb_formula()) {
        prop_assert_eq!(Formula::parse(&a.to_string()).unwrap(), a);
    }

    #[test]
    fn join_and_meet_expand_once(a in arb_formula(), b in arb_formula()) {
        let text = format!("({a}) \\/ ({b})");
        let once = Formula::parse(&text).unwrap();
        let by_hand = a.pos().imp(&b.pos()).pos().imp(&a.neg().negpart())
            .imp(&b.negpart().imp(&a.negpart()).negpart().imp(&a.negpart()));
        prop_assert_eq!(&once, &by_hand);
        prop_assert_eq!(Formula::parse(&once.to_string()).unwrap(), once);
        let meet = Formula::parse(&format!("({a}) /\\ ({b})")).unwrap();
        let join_neg = Formula::parse(&format!("(~({a})) \\/ (~({b}))")).unwrap();
        prop_assert_eq!(meet, join_neg.neg());
    }

    #[test]
    fn scripts_round_trip(i in 0..DERIVATIONS.len()) {
        let s = (DERIVATIONS[i].build)();
        prop_assert_eq!(ProofScript::parse(&s.to_string()).unwrap(), s);
    }
}
