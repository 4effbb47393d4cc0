use std::collections::BTreeSet;

use crate::proof_format::{Lemma, ProofNode, Rule};
use crate::syntax::{Formula, Schema, Substitution};

use super::{CurryHowardError, LambdaTerm};

/// The proof term of a propositional proof. Hyp leaves become variables
/// named by their labels; Conv steps are transparent.
pub fn extract(proof: &ProofNode) -> Result<LambdaTerm, CurryHowardError> {
    extract_with(proof, &|_| None)
}

/// As [`extract`], with each `Lemma` node replaced by the lemma's own proof
/// term abstracted over its hypotheses and applied to the node's children.
/// Inlining introduces a redex per premise.
pub fn extract_with<'a>(
    proof: &ProofNode,
    lemmas: &dyn Fn(&str) -> Option<&'a Lemma>,
) -> Result<LambdaTerm, CurryHowardError> {
    let term = go(proof, lemmas, &mut Vec::new(), 0)?;
    Ok(term.with_unique_binders(&BTreeSet::new()))
}

// Inlined lemmas may cite lemmas in turn; a cyclic citation cannot come from
// an accepted document, but the bound keeps a malformed one from looping.
const MAX_INLINE_DEPTH: usize = 64;

fn go<'a>(
    node: &ProofNode,
    lemmas: &dyn Fn(&str) -> Option<&'a Lemma>,
    path: &mut Vec<usize>,
    inline_depth: usize,
) -> Result<LambdaTerm, CurryHowardError> {
    let here = path.clone();
    let out = || CurryHowardError::OutOfFragment { path: here.clone(), rule: node.rule };
    if !in_fragment(node.rule) {
        return Err(out());
    }
    let mut kids = Vec::with_capacity(node.children.len());
    for (i, c) in node.children.iter().enumerate() {
        path.push(i);
        kids.push(go(c, lemmas, path, inline_depth)?);
        path.pop();
    }
    let label = |i: usize| node.labels.get(i).cloned().ok_or_else(out);
    let mut kids = kids.into_iter();
    let mut next = || kids.next().ok_or_else(out);
    Ok(match node.rule {
        Rule::Hyp => LambdaTerm::Var(node.reference.clone().ok_or_else(out)?),
        Rule::ImpI => match &node.conclusion {
            Formula::Implies(a, _) => LambdaTerm::lam(label(0)?, (**a).clone(), next()?),
            _ => return Err(out()),
        },
        Rule::ImpE => {
            let f = next()?;
            LambdaTerm::app(f, next()?)
        }
        Rule::AndI => {
            let l = next()?;
            LambdaTerm::pair(l, next()?)
        }
        Rule::AndE1 => LambdaTerm::fst(next()?),
        Rule::AndE2 => LambdaTerm::snd(next()?),
        Rule::OrI1 => match &node.conclusion {
            Formula::Or(_, b) => LambdaTerm::inl(next()?, (**b).clone()),
            _ => return Err(out()),
        },
        Rule::OrI2 => match &node.conclusion {
            Formula::Or(a, _) => LambdaTerm::inr(next()?, (**a).clone()),
            _ => return Err(out()),
        },
        Rule::OrE => {
            let s = next()?;
            let u = next()?;
            LambdaTerm::case(s, label(0)?, u, label(1)?, next()?)
        }
        Rule::BotE => LambdaTerm::abort(next()?, node.conclusion.clone()),
        Rule::Conv => next()?,
        Rule::Lemma => {
            let name = node.reference.clone().ok_or_else(out)?;
            let lemma = lemmas(&name).ok_or_else(|| CurryHowardError::UnknownLemma(name.clone()))?;
            if inline_depth >= MAX_INLINE_DEPTH {
                return Err(out());
            }
            let sigma = instances(node);
            let body = go(&lemma.root, lemmas, &mut Vec::new(), inline_depth + 1)?;
            let mut term = retype(&body, &sigma);
            for (h, ty) in lemma.hypotheses.iter().rev() {
                term = LambdaTerm::lam(h.clone(), sigma.apply(ty), term);
            }
            for arg in kids.by_ref() {
                term = LambdaTerm::app(term, arg);
            }
            term
        }
        _ => return Err(out()),
    })
}

fn in_fragment(rule: Rule) -> bool {
    use Rule::*;
    matches!(rule, Hyp | ImpI | ImpE | AndI | AndE1 | AndE2 | OrI1 | OrI2 | OrE | BotE | Conv | Lemma)
}

/// Instantiations of propositional lemma variables, `{A := formula}`.
fn instances(node: &ProofNode) -> Substitution {
    let mut sigma = Substitution::new();
    for inst in &node.instances {
        let params = inst.params.clone().unwrap_or_default();
        sigma.predicates.insert(inst.target.clone(), Schema::new(params, inst.value.as_formula()));
    }
    sigma
}

fn retype(t: &LambdaTerm, sigma: &Substitution) -> LambdaTerm {
    use LambdaTerm::*;
    let r = |x: &LambdaTerm| retype(x, sigma);
    match t {
        Var(_) => t.clone(),
        Lam(h, ty, b) => Lam(h.clone(), sigma.apply(ty), Box::new(r(b))),
        App(a, b) => LambdaTerm::app(r(a), r(b)),
        Pair(a, b) => LambdaTerm::pair(r(a), r(b)),
        Fst(a) => LambdaTerm::fst(r(a)),
        Snd(a) => LambdaTerm::snd(r(a)),
        Inl(a, ty) => LambdaTerm::inl(r(a), sigma.apply(ty)),
        Inr(a, ty) => LambdaTerm::inr(r(a), sigma.apply(ty)),
        Abort(a, ty) => LambdaTerm::abort(r(a), sigma.apply(ty)),
        Case(s, h1, u, h2, v) => LambdaTerm::case(r(s), h1.clone(), r(u), h2.clone(), r(v)),
    }
}
