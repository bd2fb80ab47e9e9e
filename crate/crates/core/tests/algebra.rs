mod common;

use std::collections::BTreeSet;
use std::fs;

use common::{all_partitions, compatible, repo_root};
use qstar_core::algebra::{
    catalog::Theory, check_property, check_property_over, check_theory, is_flat, is_linear, leq, load_algebra,
    props::QW_MEET_REVERSED, write_algebra, Outcome, Property, Suite,
};
use qstar_core::fixtures::{qmv7, qmv7_mutated};
use qstar_core::models::{pos_divergence, sample_check, RModel, RstarQmv, RstarQw, SampleValue, Sampler};
use qstar_core::transform::{
    canonical_embedding, check_filter, congruence_mu, congruence_tau, direct_product, enumerate_congruences, quotient,
    to_plain, to_qmv, to_qw, Congruence,
};
use qstar_core::{Elem, FiniteAlgebra, Kind, Q2Point, Structure};

fn classes(alg: &FiniteAlgebra, c: &Congruence) -> BTreeSet<BTreeSet<String>> {
    c.classes()
        .iter()
        .map(|cl| cl.iter().map(|&e| alg.name(e).to_string()).collect())
        .collect()
}

fn partition(spec: &str) -> BTreeSet<BTreeSet<String>> {
    spec.split('|')
        .map(|cl| cl.split(',').map(|s| s.trim().to_string()).collect())
        .collect()
}

#[test]
fn fixture_is_a_quasi_mv_star_algebra() {
    let alg = qmv7();
    let r = check_theory(&alg, &Theory::qmv()).unwrap();
    assert!(r.passed());
    assert_eq!(Theory::qmv().groups().len(), 14);
    for rep in &r.reports {
        assert_eq!(rep.visited, 7u64.pow(rep.arity as u32), "{}", rep.law);
    }
}

#[test]
fn mutation_is_caught() {
    let r = check_theory(&qmv7_mutated(), &Theory::qmv()).unwrap();
    let failed: Vec<&str> = r.failures().map(|f| f.law.as_str()).collect();
    assert!(failed.contains(&"QMV*1"), "{failed:?}");
    let cex = r.failures().next().unwrap().counterexample().unwrap();
    assert!(!cex.assignment.is_empty());
}

#[test]
fn mutation_differs_in_one_cell() {
    let (a, m) = (qmv7(), qmv7_mutated());
    let diffs: Vec<(Elem, Elem)> = a
        .elements()
        .flat_map(|x| a.elements().map(move |y| (x, y)))
        .filter(|&(x, y)| a.op(x, y) != m.op(x, y))
        .collect();
    let ae = a.element("a").unwrap();
    let de = a.element("d").unwrap();
    assert_eq!(diffs, vec![(ae, de)]);
    assert_eq!(a.name(a.op(ae, de)), "b");
    assert_eq!(m.name(m.op(ae, de)), "a");
}

#[test]
fn algebra_files_round_trip() {
    let alg = qmv7();
    assert_eq!(load_algebra(&write_algebra(&alg)).unwrap(), alg);
}

#[test]
fn term_equivalence_round_trips() {
    let alg = qmv7();
    let w = to_qw(&alg).unwrap();
    assert_eq!(w.kind(), Kind::Qw);
    assert!(check_theory(&w, &Theory::qw()).unwrap().passed());
    assert_eq!(to_qmv(&w).unwrap(), alg);
    assert_eq!(to_qw(&to_qmv(&w).unwrap()).unwrap(), w);
    // x -> y is -x + y
    for x in alg.elements() {
        for y in alg.elements() {
            assert_eq!(w.op(x, y), alg.op(alg.negate(x), y));
        }
    }
}

#[test]
fn mu_and_tau_partitions() {
    let alg = qmv7();
    let mu = congruence_mu(&alg).unwrap();
    let tau = congruence_tau(&alg).unwrap();
    assert_eq!(classes(&alg, &mu), partition("a | b,c | 0 | d,e | 1"));
    assert_eq!(classes(&alg, &tau), partition("a,b,0,e,1 | c | d"));
    assert!(mu.relation().intersect(&tau.relation()).is_diagonal());
    let mtm = mu.relation().compose(&tau.relation()).compose(&mu.relation());
    assert!(mtm.is_all());
    assert!(!mu.relation().compose(&tau.relation()).is_all());
}

#[test]
fn quotients_by_mu_and_tau() {
    let alg = qmv7();
    let qm = quotient(&alg, &congruence_mu(&alg).unwrap()).unwrap();
    assert_eq!(qm.size(), 5);
    let zero = qm.zero();
    assert!(qm.elements().all(|x| qm.op(zero, x) == x));
    assert!(check_theory(&qm, &Theory::qmv()).unwrap().passed());
    let plain = to_plain(&qm).unwrap();
    assert!(check_theory(&plain, &Theory::mv()).unwrap().passed());
    assert!(check_theory(&to_qw(&plain).unwrap(), &Theory::w()).unwrap().passed());

    let qt = quotient(&alg, &congruence_tau(&alg).unwrap()).unwrap();
    assert_eq!(qt.size(), 3);
    let wt = to_qw(&qt).unwrap();
    assert!(is_flat(&wt).unwrap());
    assert!(is_linear(&wt).unwrap());
    assert_eq!(qt.zero(), qt.one());
}

#[test]
fn canonical_embedding_is_subdirect() {
    let e = canonical_embedding(&qmv7()).unwrap();
    assert!(e.injective);
    assert!(e.homomorphism());
    assert!(e.mu_projection_surjective && e.tau_projection_surjective);
    assert_eq!(e.product.size(), 15);
}

#[test]
fn products_are_componentwise() {
    let alg = qmv7();
    let p = direct_product(&alg, &alg).unwrap();
    assert_eq!(p.size(), 49);
    assert!(check_theory(&p, &Theory::qmv()).unwrap().passed());
}

#[test]
fn congruence_enumeration_matches_brute_force() {
    let alg = qmv7();
    let parts = all_partitions(7);
    assert_eq!(parts.len(), 877);
    let expected: BTreeSet<BTreeSet<BTreeSet<String>>> = parts
        .iter()
        .filter(|l| compatible(&alg, l))
        .map(|l| classes(&alg, &Congruence::from_labels(l)))
        .collect();
    let found = enumerate_congruences(&alg).unwrap();
    let got: BTreeSet<_> = found.iter().map(|c| classes(&alg, c)).collect();
    assert_eq!(got, expected);
    assert_eq!(found.len(), 4);
    for c in &found {
        assert!(check_theory(&quotient(&alg, c).unwrap(), &Theory::qmv()).unwrap().passed());
    }
}

#[test]
fn order_on_the_fixture() {
    let w = to_qw(&qmv7()).unwrap();
    let e = |n: &str| w.element(n).unwrap();
    assert!(leq(&w, e("a"), e("1")));
    assert!(leq(&w, e("a"), e("b")));
    assert!(!leq(&w, e("1"), e("a")));
}

#[test]
fn derived_suites_hold_on_fixture_and_models() {
    let alg = qmv7();
    let w = to_qw(&alg).unwrap();
    let qmv_grid = Q2Point::grid(2);
    for suite in Suite::all() {
        let target: &FiniteAlgebra = if suite.kind == Kind::Qmv { &alg } else { &w };
        for p in &suite.items {
            let r = check_property(target, p).unwrap();
            assert!(r.passed(), "{}: {:?}", p.name(), r.outcome);
            let s = match suite.kind {
                Kind::Qmv => check_property_over(&RstarQmv, p, &qmv_grid).unwrap(),
                _ => check_property_over(&RstarQw, p, &qmv_grid).unwrap(),
            };
            assert!(s.passed(), "{} on the model: {:?}", p.name(), s.outcome);
        }
    }
}

#[test]
fn reversed_meet_law_fails_on_the_fixture() {
    let w = to_qw(&qmv7()).unwrap();
    let p = Property::parse("reversed-meet", Kind::Qw, QW_MEET_REVERSED).unwrap();
    let r = check_property(&w, &p).unwrap();
    let Outcome::Fail(c) = &r.outcome else { panic!("expected a failure") };
    assert_eq!(c.assignment[0], ('x', "a".to_string()));
}

#[test]
fn standard_models_pass_their_theories() {
    for (name, r) in [
        ("mv", sample_check_all(&RModel, &Theory::mv(), Sampler::grid(4))),
        ("qmv", sample_check_all(&RstarQmv, &Theory::qmv(), Sampler::grid(2))),
        ("qw", sample_check_all(&RstarQw, &Theory::qw(), Sampler::grid(2))),
    ] {
        assert!(r.is_empty(), "{name}: {r:?}");
    }
    let x = pos_divergence(2).unwrap();
    assert!(x.second < qstar_core::Rat::ZERO);
    assert_ne!(RstarQmv.pos(x), RstarQw.pos(x));
}

fn sample_check_all<S>(model: &S, theory: &Theory, sampler: Sampler) -> Vec<String>
where
    S: Structure + Sync,
    S::Value: SampleValue,
{
    theory
        .laws
        .iter()
        .map(|l| sample_check(model, &Property::Equation(l.clone()), sampler).unwrap())
        .filter(|r| !r.passed())
        .map(|r| r.to_string())
        .collect()
}

#[test]
fn unclamped_plus_is_caught() {
    use qstar_core::Rat;
    #[derive(Clone, Copy)]
    struct Unclamped;
    impl Structure for Unclamped {
        type Value = (Rat, Rat);
        fn kind(&self) -> Kind {
            Kind::Qmv
        }
        fn one(&self) -> (Rat, Rat) {
            (Rat::ONE, Rat::ZERO)
        }
        fn zero(&self) -> (Rat, Rat) {
            (Rat::ZERO, Rat::ZERO)
        }
        fn binary(&self, a: (Rat, Rat), b: (Rat, Rat)) -> (Rat, Rat) {
            (a.0 + b.0, Rat::ZERO)
        }
        fn neg(&self, a: (Rat, Rat)) -> (Rat, Rat) {
            (-a.0, -a.1)
        }
        fn pos(&self, a: (Rat, Rat)) -> (Rat, Rat) {
            (a.0.max(Rat::ZERO), a.1.max(Rat::ZERO))
        }
        fn negpart(&self, a: (Rat, Rat)) -> (Rat, Rat) {
            (a.0.min(Rat::ZERO), a.1.min(Rat::ZERO))
        }
        fn show(&self, v: (Rat, Rat)) -> String {
            format!("{},{}", v.0, v.1)
        }
    }
    let grid: Vec<(Rat, Rat)> = Q2Point::grid(2).into_iter().map(|p| (p.first, p.second)).collect();
    let law = Theory::qmv().laws.into_iter().find(|l| l.name == "QMV*3").unwrap();
    let r = check_property_over(&Unclamped, &Property::Equation(law), &grid).unwrap();
    assert!(!r.passed());
}

#[test]
fn filter_clauses() {
    let plain = to_plain(&quotient(&qmv7(), &congruence_mu(&qmv7()).unwrap()).unwrap()).unwrap();
    let all: Vec<Elem> = plain.elements().collect();
    assert!(check_filter(&plain, &all).unwrap().passed());
    assert!(!check_filter(&plain, &[]).unwrap().passed());
}

/// Set `QSTAR_BLESS=1` to rewrite the golden dump.
#[test]
fn catalog_dump_is_stable() {
    let mut text = String::new();
    for t in [Theory::mv(), Theory::qmv(), Theory::w(), Theory::qw()] {
        text.push_str(&format!("# {} ({} numbered axioms)\n", t.name, t.groups().len()));
        text.push_str(&t.dump());
    }
    let path = repo_root().join("crates/core/tests/golden/catalog.txt");
    if std::env::var_os("QSTAR_BLESS").is_some() {
        fs::create_dir_all(path.parent().unwrap()).unwrap();
        fs::write(&path, &text).unwrap();
    }
    assert_eq!(fs::read_to_string(&path).unwrap(), text);
    assert_eq!(Theory::mv().groups().len(), 12);
    assert_eq!(Theory::qw().groups().len(), 12);
}

#[test]
fn fixture_file_matches_embedded_copy() {
    let on_disk = fs::read_to_string(repo_root().join("fixtures/qmv7.alg")).unwrap();
    assert_eq!(on_disk, qstar_core::fixtures::QMV7);
}
