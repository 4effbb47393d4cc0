use std::collections::BTreeSet;

use crate::kernel::Context;
use crate::proof_format::{ProofNode, Rule};
use crate::syntax::Formula;

/// `f` and all its components; quantifier bodies are taken as written.
pub fn subformulas(f: &Formula) -> BTreeSet<Formula> {
    let mut out = BTreeSet::new();
    f.walk(&mut |g| {
        out.insert(g.clone());
    });
    out
}

/// Every node conclusion and every discharged hypothesis is a subformula of
/// the open hypotheses or of the final conclusion. `_|_` is always admitted.
pub fn subformula_check(proof: &ProofNode, hyps: &Context) -> bool {
    let mut allowed = subformulas(&proof.conclusion);
    for (_, f) in &hyps.entries {
        allowed.extend(subformulas(f));
    }
    allowed.insert(Formula::Bottom);
    let mut ok = true;
    proof.visit(&mut |_, node| {
        ok &= allowed.contains(&node.conclusion);
        for f in discharged(node) {
            ok &= allowed.contains(f);
        }
    });
    ok
}

fn discharged(node: &ProofNode) -> Vec<&Formula> {
    match (node.rule, &node.conclusion) {
        (Rule::ImpI, Formula::Implies(a, _)) => vec![a],
        (Rule::OrE, _) => match node.children.first().map(|c| &c.conclusion) {
            Some(Formula::Or(a, b)) => vec![a, b],
            _ => vec![],
        },
        _ => vec![],
    }
}
