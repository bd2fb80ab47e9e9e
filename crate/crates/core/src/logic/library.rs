//! The shipped derivations. Each builds a primitive script; the files under
//! `fixtures/proofs/` are their printed form.

use super::builder::{Bi, ProofBuilder};
use super::formula::Formula;
use super::proof::ProofScript;

pub struct Derivation {
    /// File stem under `fixtures/proofs/`.
    pub name: &'static str,
    pub description: &'static str,
    pub build: fn() -> ProofScript,
}

fn v(name: &str) -> Formula {
    Formula::var(name)
}

fn f(s: &str) -> Formula {
    Formula::parse(s).expect("library formula parses")
}

fn bi_script(description: &str, build: impl FnOnce(&mut ProofBuilder) -> Vec<Bi>) -> ProofScript {
    let mut b = ProofBuilder::new();
    let out = build(&mut b);
    let mut goals = Vec::new();
    for g in out.iter().flat_map(|r| r.halves()) {
        if !goals.contains(&g) {
            goals.push(g);
        }
    }
    b.finish(goals, vec![description.to_string()])
}

fn hyp_pq(b: &mut ProofBuilder) -> Bi {
    b.hyp_bi(&v("p"), &v("q"))
}

fn replacement(context: &str) -> ProofScript {
    let ctx = f(context);
    let p1 = v("p1");
    let path = ctx.occurrences(&p1).into_iter().next().expect("context mentions p1");
    let note = format!("replacement of p1 by r1 inside {ctx}, from p1 <-> r1");
    bi_script(&note, |b| {
        let h = b.hyp_bi(&p1, &v("r1"));
        vec![b.replace(&h, &ctx, &path)]
    })
}

fn cong_neg() -> ProofScript {
    bi_script("negation congruence: p <-> q gives ~p <-> ~q", |b| {
        let h = hyp_pq(b);
        vec![b.cong_neg(&h)]
    })
}

fn cong_arrow() -> ProofScript {
    bi_script("implication congruence: p <-> q and r <-> t give (p -> r) <-> (q -> t)", |b| {
        let x = hyp_pq(b);
        let y = b.hyp_bi(&v("r"), &v("t"));
        vec![b.cong_arrow(&x, &y)]
    })
}

fn trans() -> ProofScript {
    bi_script("transitivity: p <-> q and q <-> r give p <-> r", |b| {
        let x = hyp_pq(b);
        let y = b.hyp_bi(&v("q"), &v("r"));
        vec![b.trans(&x, &y)]
    })
}

fn neg_arrow() -> ProofScript {
    bi_script("negated implication: ~(p -> q) <-> (~p -> ~q), via Q5 and Q1", |b| {
        vec![b.neg_arrow(&v("p"), &v("q"))]
    })
}

fn refl() -> ProofScript {
    bi_script("reflexivity: p -> p from both directions of Q3 with (q -> q)", |b| {
        vec![b.refl_via(&v("p"), &v("q"))]
    })
}

fn replace_atom() -> ProofScript {
    bi_script("replacement with no connectives: p1 itself", |b| vec![b.hyp_bi(&v("p1"), &v("r1"))])
}

fn replace_neg() -> ProofScript {
    replacement("~p1")
}
fn replace_pos() -> ProofScript {
    replacement("p1^+")
}
fn replace_negpart() -> ProofScript {
    replacement("p1^-")
}
fn replace_arrow_atom() -> ProofScript {
    replacement("p1 -> t1")
}
fn replace_deep_neg() -> ProofScript {
    replacement("~(s -> p1)")
}
fn replace_deep_pos() -> ProofScript {
    replacement("(s -> ~p1)^+")
}
fn replace_deep_negpart() -> ProofScript {
    replacement("(p1^+ -> s)^-")
}
fn replace_deep_left() -> ProofScript {
    replacement("(~p1 -> s) -> q")
}
fn replace_deep_right() -> ProofScript {
    replacement("u -> (s -> p1)^+")
}

fn diag_eq() -> ProofScript {
    bi_script("diagonals are equivalent: (p -> p) <-> (q -> q)", |b| vec![b.diag_eq(&v("p"), &v("q"))])
}

fn neg_diag() -> ProofScript {
    bi_script(
        "double negation of a diagonal; the first step ~(p -> p) <-> (p -> p) is a Q5 instance",
        |b| vec![b.neg_diag(&v("p"))],
    )
}

fn double_neg() -> ProofScript {
    bi_script(
        "double negation p <-> ~~p; the step (~p -> ~(q -> q)) <-> (~~(q -> q) -> ~~p) is a Q1 instance",
        |b| vec![b.double_neg_via(&v("p"), &v("q"))],
    )
}

fn contrapose_neg() -> ProofScript {
    bi_script("contraposition with negated antecedent: (~p -> q) <-> (~q -> p)", |b| {
        vec![b.contrapose_neg(&v("p"), &v("q"))]
    })
}

fn pos_neg_swap() -> ProofScript {
    bi_script(
        "parts of a negation: (~p)^+ <-> ~p^- and (~p)^- <-> ~p^+; double negation and \
         ~(1 -> 1) <-> (1 -> 1) enter as derived and Q5 steps",
        |b| vec![b.pos_of_neg(&v("p")), b.negpart_of_neg(&v("p"))],
    )
}

fn cong_pos_negpart() -> ProofScript {
    bi_script(
        "part congruence: p <-> q gives p^+ <-> q^+ and, through (~p)^+ <-> (~q)^+, p^- <-> q^-",
        |b| {
            let h = hyp_pq(b);
            vec![b.cong_pos(&h), b.cong_negpart_via_neg(&h)]
        },
    )
}

fn plus_zero() -> ProofScript {
    bi_script(
        "(~q -> (p -> p)) <-> q; the step ~(p -> p) <-> (p -> p) is a Q5 instance",
        |b| vec![b.plus_zero(&v("q"), &v("p"))],
    )
}

fn pos_filter() -> ProofScript {
    let mut b = ProofBuilder::new();
    let l = b.pos_filter(&v("p"));
    let goal = b.formula(l).clone();
    b.finish(vec![goal], vec!["(1 -> 1) -> p^+ from Q11, Q3 and Q10".into()])
}

fn rule_r1() -> ProofScript {
    let mut b = ProofBuilder::new();
    let i = b.hyp(&v("p"));
    let j = b.hyp(&f("p -> q"));
    let l = b.r1(i, j, &Formula::one());
    let goal = b.formula(l).clone();
    b.finish(vec![goal], vec!["R1 from hypotheses p and p -> q".into()])
}

fn rule_r3() -> ProofScript {
    let mut b = ProofBuilder::new();
    let i = b.hyp(&f("p -> q"));
    let j = b.hyp(&f("r -> t"));
    let l = b.r3(i, j);
    let goal = b.formula(l).clone();
    b.finish(vec![goal], vec!["R3 from hypotheses p -> q and r -> t".into()])
}

pub const DERIVATIONS: &[Derivation] = &[
    Derivation { name: "cong_neg", description: "negation congruence", build: cong_neg },
    Derivation { name: "cong_arrow", description: "implication congruence", build: cong_arrow },
    Derivation { name: "trans", description: "transitivity", build: trans },
    Derivation { name: "neg_arrow", description: "negated implication", build: neg_arrow },
    Derivation { name: "refl", description: "reflexivity", build: refl },
    Derivation { name: "replace_atom", description: "replacement, bare subformula", build: replace_atom },
    Derivation { name: "replace_neg", description: "replacement under negation", build: replace_neg },
    Derivation { name: "replace_pos", description: "replacement under positive part", build: replace_pos },
    Derivation { name: "replace_negpart", description: "replacement under negative part", build: replace_negpart },
    Derivation { name: "replace_arrow_atom", description: "replacement in an antecedent", build: replace_arrow_atom },
    Derivation { name: "replace_deep_neg", description: "replacement deep under negation", build: replace_deep_neg },
    Derivation { name: "replace_deep_pos", description: "replacement deep under positive part", build: replace_deep_pos },
    Derivation {
        name: "replace_deep_negpart",
        description: "replacement deep under negative part",
        build: replace_deep_negpart,
    },
    Derivation { name: "replace_deep_left", description: "replacement deep in an antecedent", build: replace_deep_left },
    Derivation { name: "replace_deep_right", description: "replacement deep in a consequent", build: replace_deep_right },
    Derivation { name: "diag_eq", description: "equivalent diagonals", build: diag_eq },
    Derivation { name: "neg_diag", description: "negated diagonal", build: neg_diag },
    Derivation { name: "double_neg", description: "double negation", build: double_neg },
    Derivation { name: "contrapose_neg", description: "contraposition", build: contrapose_neg },
    Derivation { name: "pos_neg_swap", description: "parts of a negation", build: pos_neg_swap },
    Derivation { name: "cong_pos_negpart", description: "part congruence", build: cong_pos_negpart },
    Derivation { name: "plus_zero", description: "zero is a right unit", build: plus_zero },
    Derivation { name: "pos_filter", description: "positive parts are theorems", build: pos_filter },
    Derivation { name: "rule_r1", description: "R1 from hypotheses", build: rule_r1 },
    Derivation { name: "rule_r3", description: "R3 from hypotheses", build: rule_r3 },
];

pub fn derivation(name: &str) -> Option<&'static Derivation> {
    DERIVATIONS.iter().find(|d| d.name == name)
}

