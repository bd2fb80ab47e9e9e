use std::collections::HashMap;

use super::formula::{Formula, Step};
use super::proof::{Justification, ProofLine, ProofScript};
use super::schema::{schema, Substitution};

/// A derived biconditional `left ↔ right`: the line numbers of its two halves.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Bi {
    pub left: Formula,
    pub right: Formula,
    /// Line of `left → right`.
    pub fwd: usize,
    /// Line of `right → left`.
    pub bwd: usize,
}

impl Bi {
    pub fn sym(&self) -> Bi {
        Bi {
            left: self.right.clone(),
            right: self.left.clone(),
            fwd: self.bwd,
            bwd: self.fwd,
        }
    }

    /// `[left → right, right → left]`.
    pub fn halves(&self) -> [Formula; 2] {
        [self.left.imp(&self.right), self.right.imp(&self.left)]
    }
}

/// Accumulates a primitive proof. Every derived rule below expands into
/// axiom, hypothesis, R1, R2 and R3 lines only. A formula derived twice keeps
/// its first line.
#[derive(Clone, Debug, Default)]
pub struct ProofBuilder {
    hyps: Vec<Formula>,
    lines: Vec<ProofLine>,
    index: HashMap<Formula, usize>,
}

fn one() -> Formula {
    Formula::one()
}

fn unit() -> Formula {
    Formula::diag(&one())
}

impl ProofBuilder {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn formula(&self, line: usize) -> &Formula {
        &self.lines[line - 1].formula
    }

    pub fn len(&self) -> usize {
        self.lines.len()
    }

    pub fn is_empty(&self) -> bool {
        self.lines.is_empty()
    }

    fn push(&mut self, formula: Formula, justification: Justification) -> usize {
        if let Some(&n) = self.index.get(&formula) {
            return n;
        }
        self.lines.push(ProofLine {
            formula: formula.clone(),
            justification,
        });
        let n = self.lines.len();
        self.index.insert(formula, n);
        n
    }

    fn hyp_index(&mut self, f: &Formula) -> usize {
        match self.hyps.iter().position(|h| h == f) {
            Some(i) => i + 1,
            None => {
                self.hyps.push(f.clone());
                self.hyps.len()
            }
        }
    }

    pub fn hyp(&mut self, f: &Formula) -> usize {
        let k = self.hyp_index(f);
        self.push(f.clone(), Justification::Hypothesis(k))
    }

    /// Both halves of `left ↔ right` as hypotheses.
    pub fn hyp_bi(&mut self, left: &Formula, right: &Formula) -> Bi {
        let fwd = self.hyp(&left.imp(right));
        let bwd = self.hyp(&right.imp(left));
        Bi {
            left: left.clone(),
            right: right.clone(),
            fwd,
            bwd,
        }
    }

    /// Instance of schema `id` with metavariables bound in sorted order.
    pub fn axiom(&mut self, id: &str, args: &[&Formula]) -> usize {
        let s = schema(id).unwrap_or_else(|| panic!("no schema {id}"));
        let f = s.apply(args);
        let subst: Substitution = s.metavars.iter().cloned().zip(args.iter().map(|a| (*a).clone())).collect();
        self.push(
            f,
            Justification::Axiom {
                schema: id.to_string(),
                subst,
            },
        )
    }

    /// Both directions of a biconditional schema.
    pub fn axiom_bi(&mut self, base: &str, args: &[&Formula]) -> Bi {
        let fwd = self.axiom(&format!("{base}.L"), args);
        let bwd = self.axiom(&format!("{base}.R"), args);
        let (l, r) = self.formula(fwd).as_arrow().expect("schema is an implication");
        Bi {
            left: l.clone(),
            right: r.clone(),
            fwd,
            bwd,
        }
    }

    pub fn r1(&mut self, minor: usize, major: usize, side: &Formula) -> usize {
        let (_, psi) = self.formula(major).as_arrow().expect("R1 major premise is an implication");
        let f = Formula::diag(side).imp(psi);
        self.push(
            f,
            Justification::R1 {
                minor,
                major,
                side: side.clone(),
            },
        )
    }

    pub fn r2(&mut self, from: usize) -> usize {
        let (_, rest) = self.formula(from).as_arrow().expect("R2 premise is an implication");
        let f = rest.clone();
        self.push(f, Justification::R2 { from })
    }

    pub fn r3(&mut self, first: usize, second: usize) -> usize {
        let (phi, psi) = self.formula(first).as_arrow().expect("R3 premise is an implication");
        let (chi, omega) = self.formula(second).as_arrow().expect("R3 premise is an implication");
        let f = psi.imp(chi).imp(&phi.imp(omega));
        self.push(f, Justification::R3 { first, second })
    }

    /// From `φ` and `φ→ψ` derive `ψ` when `ψ` is an implication (R1 then R2).
    pub fn detach(&mut self, minor: usize, major: usize) -> usize {
        let l = self.r1(minor, major, &one());
        self.r2(l)
    }

    /// `a→b`, `b→c` give `a→c`.
    pub fn imp_trans(&mut self, i: usize, j: usize) -> usize {
        let a = self.formula(i).as_arrow().expect("implication").0.clone();
        let (b, c) = self.formula(j).as_arrow().expect("implication");
        let (b, c) = (b.clone(), c.clone());
        let l3 = self.r3(i, j);
        let l4 = self.axiom("Q3.R", &[&a.imp(&c), &b]);
        self.detach(l3, l4)
    }

    pub fn refl(&mut self, p: &Formula) -> Bi {
        self.refl_via(p, &one())
    }

    /// `p → p` through `(q→q)→p`.
    pub fn refl_via(&mut self, p: &Formula, q: &Formula) -> Bi {
        let l1 = self.axiom("Q3.L", &[p, q]);
        let l2 = self.axiom("Q3.R", &[p, q]);
        let l = self.imp_trans(l1, l2);
        Bi {
            left: p.clone(),
            right: p.clone(),
            fwd: l,
            bwd: l,
        }
    }

    pub fn trans(&mut self, a: &Bi, b: &Bi) -> Bi {
        assert_eq!(a.right, b.left, "trans: middle formulas differ");
        let fwd = self.imp_trans(a.fwd, b.fwd);
        let bwd = self.imp_trans(b.bwd, a.bwd);
        Bi {
            left: a.left.clone(),
            right: b.right.clone(),
            fwd,
            bwd,
        }
    }

    pub fn cong_neg(&mut self, b: &Bi) -> Bi {
        let (p, q) = (&b.left, &b.right);
        let ax = self.axiom("Q1.L", &[p, q]);
        let bwd = self.detach(b.fwd, ax);
        let ax = self.axiom("Q1.L", &[q, p]);
        let fwd = self.detach(b.bwd, ax);
        Bi {
            left: p.neg(),
            right: q.neg(),
            fwd,
            bwd,
        }
    }

    /// `p↔q`, `r↔t` give `(p→r)↔(q→t)`.
    pub fn cong_arrow(&mut self, a: &Bi, b: &Bi) -> Bi {
        let bwd = self.r3(a.fwd, b.bwd);
        let fwd = self.r3(a.bwd, b.fwd);
        Bi {
            left: a.left.imp(&b.left),
            right: a.right.imp(&b.right),
            fwd,
            bwd,
        }
    }

    fn cong_part(&mut self, b: &Bi, plus: bool) -> Bi {
        let (bound, id) = if plus { (one(), "Q11a") } else { (one().neg(), "Q11b") };
        let part = |f: &Formula| if plus { f.pos() } else { f.negpart() };
        let s2 = self.refl(&bound);
        let s3 = self.cong_arrow(b, &s2);
        let s4 = self.cong_arrow(&s3, &s2);
        let s5 = self.axiom_bi(id, &[&b.left]);
        let s6 = self.trans(&s5, &s4);
        let s7 = self.axiom_bi(id, &[&b.right]).sym();
        let s8 = self.trans(&s6, &s7);
        let s9 = self.axiom_bi("Q3", &[&part(&b.left), &one()]);
        let s10 = self.trans(&s9, &s8);
        let s11 = self.axiom_bi("Q3", &[&part(&b.right), &one()]).sym();
        self.trans(&s10, &s11)
    }

    /// `p↔q` gives `p⁺↔q⁺`.
    pub fn cong_pos(&mut self, b: &Bi) -> Bi {
        self.cong_part(b, true)
    }

    /// `p↔q` gives `p⁻↔q⁻` directly from the ⁻ half of Q11.
    pub fn cong_negpart(&mut self, b: &Bi) -> Bi {
        self.cong_part(b, false)
    }

    /// `p₁↔r₁` and a context whose subformula at `path` is `p₁` give
    /// `context ↔ context[r₁/path]`.
    pub fn replace(&mut self, b: &Bi, context: &Formula, path: &[Step]) -> Bi {
        let Some((step, rest)) = path.split_first() else {
            assert_eq!(context, &b.left, "replace: subformula differs");
            return b.clone();
        };
        match (context, step) {
            (Formula::Neg(a), Step::Inner) => {
                let inner = self.replace(b, a, rest);
                self.cong_neg(&inner)
            }
            (Formula::Pos(a), Step::Inner) => {
                let inner = self.replace(b, a, rest);
                self.cong_pos(&inner)
            }
            (Formula::NegPart(a), Step::Inner) => {
                let inner = self.replace(b, a, rest);
                self.cong_negpart(&inner)
            }
            (Formula::Arrow(a, c), Step::Left) => {
                let inner = self.replace(b, a, rest);
                let same = self.refl(c);
                self.cong_arrow(&inner, &same)
            }
            (Formula::Arrow(a, c), Step::Right) => {
                let same = self.refl(a);
                let inner = self.replace(b, c, rest);
                self.cong_arrow(&same, &inner)
            }
            _ => panic!("replace: path leaves the formula"),
        }
    }

    /// `a ↔ b` and `s ↔ s'` with `s` at `path` in `b` give `a ↔ b[s'/path]`.
    pub fn rewrite(&mut self, a: &Bi, sub: &Bi, path: &[Step]) -> Bi {
        let r = self.replace(sub, &a.right.clone(), path);
        self.trans(a, &r)
    }

    /// `¬(p→q) ↔ (¬p→¬q)`.
    pub fn neg_arrow(&mut self, p: &Formula, q: &Formula) -> Bi {
        let l1 = self.axiom("Q5.L", &[p, q]);
        let l2 = self.axiom("Q1.L", &[q, p]);
        let fwd = self.imp_trans(l1, l2);
        let l1 = self.axiom("Q1.R", &[q, p]);
        let l2 = self.axiom("Q5.R", &[p, q]);
        let bwd = self.imp_trans(l1, l2);
        Bi {
            left: p.imp(q).neg(),
            right: p.neg().imp(&q.neg()),
            fwd,
            bwd,
        }
    }

    /// `(p→p) ↔ (q→q)`.
    pub fn diag_eq(&mut self, p: &Formula, q: &Formula) -> Bi {
        let half = |s: &mut Self, x: &Formula, y: &Formula| {
            let xx = Formula::diag(x);
            let l1 = s.refl(x).fwd;
            let l2 = s.axiom("Q3.L", &[&xx, y]);
            s.detach(l1, l2)
        };
        let bwd = half(self, p, q);
        let fwd = half(self, q, p);
        Bi {
            left: Formula::diag(p),
            right: Formula::diag(q),
            fwd,
            bwd,
        }
    }

    /// `¬¬(p→p) ↔ (p→p)`.
    pub fn neg_diag(&mut self, p: &Formula) -> Bi {
        let s1 = self.axiom_bi("Q5", &[p, p]);
        let s2 = self.cong_neg(&s1);
        self.trans(&s2, &s1)
    }

    /// `p ↔ ¬¬p`.
    pub fn double_neg(&mut self, p: &Formula) -> Bi {
        self.double_neg_via(p, &one())
    }

    pub fn double_neg_via(&mut self, p: &Formula, q: &Formula) -> Bi {
        let d = Formula::diag(q);
        let s1 = self.axiom_bi("Q3", &[p, q]);
        let s2 = self.axiom_bi("Q1", &[&d, p]);
        let s3 = self.trans(&s1, &s2);
        let s4 = self.axiom_bi("Q1", &[&p.neg(), &d.neg()]);
        let s5 = self.trans(&s3, &s4);
        let s6 = self.neg_diag(q);
        let s7 = self.rewrite(&s5, &s6, &[Step::Left]);
        let s8 = self.axiom_bi("Q3", &[&p.neg().neg(), q]).sym();
        self.trans(&s7, &s8)
    }

    /// `(¬p→q) ↔ (¬q→p)`.
    pub fn contrapose_neg(&mut self, p: &Formula, q: &Formula) -> Bi {
        let s1 = self.axiom_bi("Q1", &[&p.neg(), q]);
        let s2 = self.double_neg(p).sym();
        self.rewrite(&s1, &s2, &[Step::Right])
    }

    /// `(¬p)⁺ ↔ ¬p⁻`.
    pub fn pos_of_neg(&mut self, p: &Formula) -> Bi {
        let n1 = one().neg();
        let s1 = self.axiom_bi("Q11a", &[&p.neg()]);
        let s2 = self.axiom_bi("Q5", &[&one(), &p.neg().imp(&one())]).sym();
        let s3 = self.trans(&s1, &s2);
        let s4 = self.double_neg(&one());
        let s5 = self.rewrite(&s3, &s4, &[Step::Inner, Step::Right, Step::Right]);
        let s6 = self.neg_arrow(p, &n1).sym();
        let s7 = self.rewrite(&s5, &s6, &[Step::Inner, Step::Right]);
        let s8 = self.rewrite(&s7, &s4, &[Step::Inner, Step::Left]);
        let s9 = self.axiom_bi("Q1", &[&p.imp(&n1), &n1]).sym();
        let s10 = self.rewrite(&s8, &s9, &[Step::Inner]);
        let s11 = self.axiom_bi("Q11b", &[p]).sym();
        let s12 = self.rewrite(&s10, &s11, &[Step::Inner]);
        let s13 = self.neg_arrow(&unit(), &p.negpart());
        let s14 = self.trans(&s12, &s13);
        let s15 = self.axiom_bi("Q5", &[&one(), &one()]);
        let s16 = self.rewrite(&s14, &s15, &[Step::Left]);
        let s17 = self.axiom_bi("Q3", &[&p.neg().pos(), &one()]);
        let s18 = self.trans(&s17, &s16);
        let s19 = self.axiom_bi("Q3", &[&p.negpart().neg(), &one()]).sym();
        self.trans(&s18, &s19)
    }

    /// `(¬p)⁻ ↔ ¬p⁺`.
    pub fn negpart_of_neg(&mut self, p: &Formula) -> Bi {
        let t1 = self.pos_of_neg(&p.neg());
        let t2 = self.double_neg(p).sym();
        let r = self.replace(&t2, &t1.left, &[Step::Inner]).sym();
        let t3 = self.trans(&r, &t1);
        let t4 = self.cong_neg(&t3);
        let t5 = self.double_neg(&p.neg().negpart()).sym();
        self.trans(&t4, &t5).sym()
    }

    /// `p↔q` gives `p⁻↔q⁻` through `(¬p)⁺↔(¬q)⁺`.
    pub fn cong_negpart_via_neg(&mut self, b: &Bi) -> Bi {
        let n = self.cong_neg(b);
        let u1 = self.cong_pos(&n);
        let u2 = self.pos_of_neg(&b.left).sym();
        let u3 = self.trans(&u2, &u1);
        let u4 = self.pos_of_neg(&b.right);
        let u5 = self.trans(&u3, &u4);
        let u6 = self.cong_neg(&u5);
        let u7 = self.double_neg(&b.left.negpart());
        let u8 = self.trans(&u7, &u6);
        let u9 = self.double_neg(&b.right.negpart()).sym();
        self.trans(&u8, &u9)
    }

    /// `(¬q→(p→p)) ↔ q`.
    pub fn plus_zero(&mut self, q: &Formula, p: &Formula) -> Bi {
        let s1 = self.contrapose_neg(q, &Formula::diag(p));
        let s2 = self.axiom_bi("Q5", &[p, p]);
        let s3 = self.rewrite(&s1, &s2, &[Step::Left]);
        let s4 = self.axiom_bi("Q3", &[q, p]).sym();
        self.trans(&s3, &s4)
    }

    /// `(1→1)→p⁺`.
    pub fn pos_filter(&mut self, p: &Formula) -> usize {
        let l1 = self.axiom("Q11a.R", &[p]);
        let l2 = self.axiom("Q3.R", &[&p.pos(), &one()]);
        let l3 = self.imp_trans(l1, l2);
        let l4 = self.axiom("Q10", &[&p.imp(&one())]);
        self.r1(l4, l3, &one())
    }

    /// Copies the lines of `script` in, renumbered. Returns the new number
    /// of each old line.
    pub fn import(&mut self, script: &ProofScript) -> Vec<usize> {
        let mut map = Vec::with_capacity(script.lines.len());
        for l in &script.lines {
            let j = match &l.justification {
                Justification::Hypothesis(k) => Justification::Hypothesis(self.hyp_index(&script.hypotheses[k - 1])),
                Justification::Axiom { .. } => l.justification.clone(),
                Justification::R1 { minor, major, side } => Justification::R1 {
                    minor: map[minor - 1],
                    major: map[major - 1],
                    side: side.clone(),
                },
                Justification::R2 { from } => Justification::R2 { from: map[from - 1] },
                Justification::R3 { first, second } => Justification::R3 {
                    first: map[first - 1],
                    second: map[second - 1],
                },
            };
            map.push(self.push(l.formula.clone(), j));
        }
        map
    }

    /// Line already holding `f`.
    pub fn line_of(&self, f: &Formula) -> Option<usize> {
        self.index.get(f).copied()
    }

    pub fn finish(self, goals: Vec<Formula>, notes: Vec<String>) -> ProofScript {
        ProofScript {
            goals,
            hypotheses: self.hyps,
            lines: self.lines,
            notes,
        }
    }
}
