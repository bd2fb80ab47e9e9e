use serde::Serialize;

use super::congruence::{congruence_mu, congruence_tau, quotient, CongruenceError};
use super::{direct_product, to_qw};
use crate::algebra::{Elem, FiniteAlgebra, Kind, Structure};

/// The map `x ↦ (x/μ, x/τ)` into `W/μ × W/τ` and its verdicts.
#[derive(Clone, Debug, Serialize)]
pub struct Embedding {
    /// `(element, μ-class, τ-class)` names, in element order.
    pub images: Vec<(String, String, String)>,
    pub injective: bool,
    /// First failing operation instance, if any.
    pub homomorphism_failure: Option<String>,
    pub mu_projection_surjective: bool,
    pub tau_projection_surjective: bool,
    #[serde(skip)]
    pub product: FiniteAlgebra,
    #[serde(skip)]
    pub map: Vec<Elem>,
}

impl Embedding {
    pub fn homomorphism(&self) -> bool {
        self.homomorphism_failure.is_none()
    }

    /// Injective homomorphism with both projections onto.
    pub fn is_subdirect_embedding(&self) -> bool {
        self.injective
            && self.homomorphism()
            && self.mu_projection_surjective
            && self.tau_projection_surjective
    }
}

/// Builds the canonical map of a qw algebra (qmv input is converted first).
pub fn canonical_embedding(alg: &FiniteAlgebra) -> Result<Embedding, CongruenceError> {
    let owned;
    let w = if alg.kind() == Kind::Qmv {
        owned = to_qw(alg).expect("qmv converts to qw");
        &owned
    } else {
        alg
    };
    let mu = congruence_mu(w)?;
    let tau = congruence_tau(w)?;
    let wm = quotient(w, &mu)?;
    let wt = quotient(w, &tau)?;
    let product = direct_product(&wm, &wt).expect("quotients share the kind");
    let nt = wt.size();
    let map: Vec<Elem> = w
        .elements()
        .map(|x| Elem(mu.class_of(x) * nt + tau.class_of(x)))
        .collect();
    let h = |x: Elem| map[x.0];

    let mut seen = vec![false; product.size()];
    let mut injective = true;
    for &y in &map {
        injective &= !std::mem::replace(&mut seen[y.0], true);
    }

    let mut failure = None;
    'outer: for x in w.elements() {
        let mut unary = vec![("neg", w.negate(x), product.negate(h(x)))];
        if w.kind().is_quasi() {
            unary.push(("pos", w.pos(x), product.pos(h(x))));
            unary.push(("negpart", w.negpart(x), product.negpart(h(x))));
        }
        for (op, v, pv) in unary {
            if h(v) != pv {
                failure = Some(format!("{op}({})", w.name(x)));
                break 'outer;
            }
        }
        for y in w.elements() {
            if h(w.op(x, y)) != product.op(h(x), h(y)) {
                failure = Some(format!("{}({},{})", w.kind().binary_name(), w.name(x), w.name(y)));
                break 'outer;
            }
        }
    }
    if failure.is_none() && h(w.one_elem()) != product.one_elem() {
        failure = Some("one".into());
    }

    let hit = |k: usize, f: &dyn Fn(Elem) -> usize| {
        let mut v = vec![false; k];
        for x in w.elements() {
            v[f(x)] = true;
        }
        v.into_iter().all(|b| b)
    };
    Ok(Embedding {
        images: w
            .elements()
            .map(|x| {
                (
                    w.name(x).to_string(),
                    wm.name(Elem(mu.class_of(x))).to_string(),
                    wt.name(Elem(tau.class_of(x))).to_string(),
                )
            })
            .collect(),
        injective,
        homomorphism_failure: failure,
        mu_projection_surjective: hit(wm.size(), &|x| mu.class_of(x)),
        tau_projection_surjective: hit(nt, &|x| tau.class_of(x)),
        product,
        map,
    })
}
