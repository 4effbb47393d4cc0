//! Leibniz replacement: is `to` obtained from `from` by rewriting some
//! (possibly none, possibly all) free occurrences of `a` into `b`?

use std::collections::BTreeSet;

use crate::syntax::{fresh_name, substitute, Formula, Term};

pub fn replaces_term(from: &Term, to: &Term, a: &Term, b: &Term) -> bool {
    if from == to || (from == a && to == b) {
        return true;
    }
    match (from, to) {
        (Term::App(f, xs), Term::App(g, ys)) => {
            f == g && xs.len() == ys.len() && xs.iter().zip(ys).all(|(s, t)| replaces_term(s, t, a, b))
        }
        _ => false,
    }
}

/// Binders are renamed on both sides to one variable fresh for everything
/// involved, so occurrences of `a` under a binder that captures one of its
/// variables can never match.
pub fn replaces_formula(from: &Formula, to: &Formula, a: &Term, b: &Term) -> bool {
    match (from, to) {
        (Formula::Atom(p, xs), Formula::Atom(q, ys)) => {
            p == q && xs.len() == ys.len() && xs.iter().zip(ys).all(|(s, t)| replaces_term(s, t, a, b))
        }
        (Formula::Equal(s1, t1), Formula::Equal(s2, t2)) => {
            replaces_term(s1, s2, a, b) && replaces_term(t1, t2, a, b)
        }
        (Formula::Bottom, Formula::Bottom) => true,
        (Formula::And(p1, q1), Formula::And(p2, q2))
        | (Formula::Or(p1, q1), Formula::Or(p2, q2))
        | (Formula::Implies(p1, q1), Formula::Implies(p2, q2)) => {
            replaces_formula(p1, p2, a, b) && replaces_formula(q1, q2, a, b)
        }
        (Formula::Forall(x, p), Formula::Forall(y, q))
        | (Formula::Exists(x, p), Formula::Exists(y, q)) => {
            let mut avoid: BTreeSet<String> = p.all_vars();
            avoid.extend(q.all_vars());
            avoid.extend(a.free_vars());
            avoid.extend(b.free_vars());
            avoid.insert(x.clone());
            avoid.insert(y.clone());
            let z = Term::var(fresh_name(x, &avoid));
            replaces_formula(&substitute(p, x, &z), &substitute(q, y, &z), a, b)
        }
        _ => false,
    }
}
