//! Independent reference semantics: formulas with bound variables replaced by
//! de Bruijn indices. Alpha-equivalence is structural equality here, and
//! substitution of a term (which has no bound variables) cannot capture.

use gpnd::syntax::{Formula, Term};

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum NTerm {
    Bound(usize),
    Free(String),
    App(String, Vec<NTerm>),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum NFormula {
    Atom(String, Vec<NTerm>),
    Equal(NTerm, NTerm),
    Bottom,
    And(Box<NFormula>, Box<NFormula>),
    Or(Box<NFormula>, Box<NFormula>),
    Implies(Box<NFormula>, Box<NFormula>),
    Forall(Box<NFormula>),
    Exists(Box<NFormula>),
}

fn term(t: &Term, scope: &[String]) -> NTerm {
    match t {
        Term::Var(x) => match scope.iter().rev().position(|y| y == x) {
            Some(i) => NTerm::Bound(i),
            None => NTerm::Free(x.clone()),
        },
        Term::App(f, args) => NTerm::App(f.clone(), args.iter().map(|a| term(a, scope)).collect()),
    }
}

pub fn nameless_term(t: &Term) -> NTerm {
    term(t, &[])
}

pub fn nameless(f: &Formula) -> NFormula {
    go(f, &mut Vec::new())
}

fn go(f: &Formula, scope: &mut Vec<String>) -> NFormula {
    let bin = |a: &Formula, b: &Formula, scope: &mut Vec<String>| (Box::new(go(a, scope)), Box::new(go(b, scope)));
    match f {
        Formula::Atom(p, args) => NFormula::Atom(p.clone(), args.iter().map(|a| term(a, scope)).collect()),
        Formula::Equal(a, b) => NFormula::Equal(term(a, scope), term(b, scope)),
        Formula::Bottom => NFormula::Bottom,
        Formula::And(a, b) => {
            let (a, b) = bin(a, b, scope);
            NFormula::And(a, b)
        }
        Formula::Or(a, b) => {
            let (a, b) = bin(a, b, scope);
            NFormula::Or(a, b)
        }
        Formula::Implies(a, b) => {
            let (a, b) = bin(a, b, scope);
            NFormula::Implies(a, b)
        }
        Formula::Forall(x, body) | Formula::Exists(x, body) => {
            scope.push(x.clone());
            let body = Box::new(go(body, scope));
            scope.pop();
            if matches!(f, Formula::Forall(..)) {
                NFormula::Forall(body)
            } else {
                NFormula::Exists(body)
            }
        }
    }
}

fn subst_term(t: &NTerm, x: &str, u: &NTerm) -> NTerm {
    match t {
        NTerm::Free(y) if y == x => u.clone(),
        NTerm::App(f, args) => NTerm::App(f.clone(), args.iter().map(|a| subst_term(a, x, u)).collect()),
        _ => t.clone(),
    }
}

/// Replaces the free variable `x` by `u`, which must contain no indices.
pub fn subst(f: &NFormula, x: &str, u: &NTerm) -> NFormula {
    let s = |g: &NFormula| Box::new(subst(g, x, u));
    match f {
        NFormula::Atom(p, args) => NFormula::Atom(p.clone(), args.iter().map(|a| subst_term(a, x, u)).collect()),
        NFormula::Equal(a, b) => NFormula::Equal(subst_term(a, x, u), subst_term(b, x, u)),
        NFormula::Bottom => NFormula::Bottom,
        NFormula::And(a, b) => NFormula::And(s(a), s(b)),
        NFormula::Or(a, b) => NFormula::Or(s(a), s(b)),
        NFormula::Implies(a, b) => NFormula::Implies(s(a), s(b)),
        NFormula::Forall(b) => NFormula::Forall(s(b)),
        NFormula::Exists(b) => NFormula::Exists(s(b)),
    }
}

fn free_term(t: &NTerm, out: &mut std::collections::BTreeSet<String>) {
    match t {
        NTerm::Free(x) => {
            out.insert(x.clone());
        }
        NTerm::App(_, args) => args.iter().for_each(|a| free_term(a, out)),
        NTerm::Bound(_) => {}
    }
}

pub fn free_vars(f: &NFormula) -> std::collections::BTreeSet<String> {
    let mut out = std::collections::BTreeSet::new();
    fn walk(f: &NFormula, out: &mut std::collections::BTreeSet<String>) {
        match f {
            NFormula::Atom(_, args) => args.iter().for_each(|a| free_term(a, out)),
            NFormula::Equal(a, b) => {
                free_term(a, out);
                free_term(b, out);
            }
            NFormula::Bottom => {}
            NFormula::And(a, b) | NFormula::Or(a, b) | NFormula::Implies(a, b) => {
                walk(a, out);
                walk(b, out);
            }
            NFormula::Forall(b) | NFormula::Exists(b) => walk(b, out),
        }
    }
    walk(f, &mut out);
    out
}
