//! Random first-order formulas over a small, clash-prone vocabulary.

use gpnd::syntax::{Formula, Term};
use proptest::prelude::*;

pub const VARS: [&str; 4] = ["x", "y", "z", "w"];

pub fn var() -> impl Strategy<Value = String> {
    proptest::sample::select(VARS.to_vec()).prop_map(String::from)
}

pub fn term() -> impl Strategy<Value = Term> {
    let leaf = prop_oneof![
        4 => var().prop_map(Term::Var),
        1 => Just(Term::constant("c")),
        1 => Just(Term::zero()),
    ];
    leaf.prop_recursive(2, 6, 2, |inner| {
        prop_oneof![
            inner.clone().prop_map(|t| Term::app("F", vec![t])),
            (inner.clone(), inner.clone()).prop_map(|(a, b)| Term::app("G", vec![a, b])),
            (inner.clone(), inner).prop_map(|(a, b)| Term::app("+", vec![a, b])),
        ]
    })
}

pub fn formula() -> impl Strategy<Value = Formula> {
    let leaf = prop_oneof![
        term().prop_map(|t| Formula::atom("P", vec![t])),
        (term(), term()).prop_map(|(a, b)| Formula::atom("R", vec![a, b])),
        (term(), term()).prop_map(|(a, b)| Formula::equal(a, b)),
        Just(Formula::prop("A")),
        Just(Formula::Bottom),
    ];
    leaf.prop_recursive(4, 24, 2, |inner| {
        prop_oneof![
            (inner.clone(), inner.clone()).prop_map(|(a, b)| Formula::and(a, b)),
            (inner.clone(), inner.clone()).prop_map(|(a, b)| Formula::or(a, b)),
            (inner.clone(), inner.clone()).prop_map(|(a, b)| Formula::implies(a, b)),
            inner.clone().prop_map(Formula::not),
            (var(), inner.clone()).prop_map(|(x, b)| Formula::forall(x, b)),
            (var(), inner).prop_map(|(x, b)| Formula::exists(x, b)),
        ]
    })
}

/// Renames every binder to a fresh `v<n>`; alpha-equivalent by construction.
pub fn rename_binders(f: &Formula, counter: &mut usize) -> Formula {
    match f {
        Formula::And(a, b) => Formula::and(rename_binders(a, counter), rename_binders(b, counter)),
        Formula::Or(a, b) => Formula::or(rename_binders(a, counter), rename_binders(b, counter)),
        Formula::Implies(a, b) => Formula::implies(rename_binders(a, counter), rename_binders(b, counter)),
        Formula::Forall(x, b) | Formula::Exists(x, b) => {
            *counter += 1;
            let v = format!("v{counter}");
            let body = gpnd::syntax::substitute(b, x, &Term::var(v.clone()));
            let body = rename_binders(&body, counter);
            if matches!(f, Formula::Forall(..)) {
                Formula::forall(v, body)
            } else {
                Formula::exists(v, body)
            }
        }
        _ => f.clone(),
    }
}
