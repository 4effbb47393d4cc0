use std::collections::BTreeSet;

use crate::kernel::Context;
use crate::proof_format::{ProofNode, Rule};
use crate::syntax::{alpha_eq, Formula};

use super::{CurryHowardError, LambdaTerm};

/// Typing environment, innermost binding last.
pub(crate) type Env = Vec<(String, Formula)>;

pub(crate) fn env_of(ctx: &Context) -> Env {
    ctx.entries.clone()
}

/// The type of `t` with the hypotheses of `ctx` typing its free labels.
pub fn typecheck_term(t: &LambdaTerm, ctx: &Context) -> Result<Formula, CurryHowardError> {
    infer(t, &mut env_of(ctx), &mut Vec::new())
}

fn ill(path: &[usize], expected: impl ToString, found: impl ToString) -> CurryHowardError {
    CurryHowardError::IllTyped {
        path: path.to_vec(),
        expected: expected.to_string(),
        found: found.to_string(),
    }
}

fn under<T>(path: &mut Vec<usize>, i: usize, f: impl FnOnce(&mut Vec<usize>) -> T) -> T {
    path.push(i);
    let r = f(path);
    path.pop();
    r
}

fn bound<T>(env: &mut Env, h: &str, ty: Formula, f: impl FnOnce(&mut Env) -> T) -> T {
    env.push((h.to_string(), ty));
    let r = f(env);
    env.pop();
    r
}

pub(crate) fn infer(
    t: &LambdaTerm,
    env: &mut Env,
    path: &mut Vec<usize>,
) -> Result<Formula, CurryHowardError> {
    use LambdaTerm::*;
    match t {
        Var(h) => env
            .iter()
            .rev()
            .find(|(l, _)| l == h)
            .map(|(_, f)| f.clone())
            .ok_or_else(|| ill(path, format!("a hypothesis labelled {h}"), "none")),
        Lam(h, a, b) => {
            let body = under(path, 0, |p| bound(env, h, a.clone(), |e| infer(b, e, p)))?;
            Ok(Formula::implies(a.clone(), body))
        }
        App(f, a) => {
            let ft = under(path, 0, |p| infer(f, env, p))?;
            let at = under(path, 1, |p| infer(a, env, p))?;
            match ft {
                Formula::Implies(dom, cod) if alpha_eq(&dom, &at) => Ok(*cod),
                Formula::Implies(dom, _) => {
                    path.push(1);
                    let e = ill(path, dom, at);
                    path.pop();
                    Err(e)
                }
                other => {
                    path.push(0);
                    let e = ill(path, "an implication", other);
                    path.pop();
                    Err(e)
                }
            }
        }
        Pair(a, b) => {
            let at = under(path, 0, |p| infer(a, env, p))?;
            let bt = under(path, 1, |p| infer(b, env, p))?;
            Ok(Formula::and(at, bt))
        }
        Fst(p) | Snd(p) => {
            let pt = under(path, 0, |q| infer(p, env, q))?;
            match pt {
                Formula::And(a, b) => Ok(if matches!(t, Fst(_)) { *a } else { *b }),
                other => Err(ill(path, "a conjunction", other)),
            }
        }
        Inl(a, right) => {
            let at = under(path, 0, |p| infer(a, env, p))?;
            Ok(Formula::or(at, right.clone()))
        }
        Inr(b, left) => {
            let bt = under(path, 0, |p| infer(b, env, p))?;
            Ok(Formula::or(left.clone(), bt))
        }
        Abort(a, ty) => match under(path, 0, |p| infer(a, env, p))? {
            Formula::Bottom => Ok(ty.clone()),
            other => Err(ill(path, Formula::Bottom, other)),
        },
        Case(s, h1, u, h2, v) => {
            let (l, r) = match under(path, 0, |p| infer(s, env, p))? {
                Formula::Or(l, r) => (*l, *r),
                other => return Err(ill(path, "a disjunction", other)),
            };
            let ut = under(path, 1, |p| bound(env, h1, l, |e| infer(u, e, p)))?;
            let vt = under(path, 2, |p| bound(env, h2, r, |e| infer(v, e, p)))?;
            if alpha_eq(&ut, &vt) {
                Ok(ut)
            } else {
                path.push(2);
                let e = ill(path, ut, vt);
                path.pop();
                Err(e)
            }
        }
    }
}

/// The proof tree a well-typed term denotes. Binders are first renamed apart
/// from each other and from the labels of `ctx`, so the tree never reuses a
/// discharge label.
pub fn to_proof(t: &LambdaTerm, ctx: &Context) -> Result<ProofNode, CurryHowardError> {
    let avoid: BTreeSet<String> = ctx.labels().into_iter().map(String::from).collect();
    let t = t.with_unique_binders(&avoid);
    typecheck_term(&t, ctx)?;
    build(&t, &mut env_of(ctx))
}

fn build(t: &LambdaTerm, env: &mut Env) -> Result<ProofNode, CurryHowardError> {
    use LambdaTerm::*;
    let node = match t {
        Var(h) => ProofNode::hyp(h.clone(), infer(t, env, &mut Vec::new())?),
        Lam(h, a, b) => {
            let body = bound(env, h, a.clone(), |e| build(b, e))?;
            let ty = Formula::implies(a.clone(), body.conclusion.clone());
            ProofNode::new(Rule::ImpI, ty, vec![body]).with_labels([h.clone()])
        }
        App(f, a) => {
            let f = build(f, env)?;
            let a = build(a, env)?;
            let Formula::Implies(_, cod) = &f.conclusion else { unreachable!("checked") };
            ProofNode::new(Rule::ImpE, (**cod).clone(), vec![f, a])
        }
        Pair(a, b) => {
            let a = build(a, env)?;
            let b = build(b, env)?;
            let ty = Formula::and(a.conclusion.clone(), b.conclusion.clone());
            ProofNode::new(Rule::AndI, ty, vec![a, b])
        }
        Fst(p) | Snd(p) => {
            let p = build(p, env)?;
            let Formula::And(a, b) = &p.conclusion else { unreachable!("checked") };
            let (rule, ty) = if matches!(t, Fst(_)) { (Rule::AndE1, a) } else { (Rule::AndE2, b) };
            ProofNode::new(rule, (**ty).clone(), vec![p])
        }
        Inl(a, right) => {
            let a = build(a, env)?;
            let ty = Formula::or(a.conclusion.clone(), right.clone());
            ProofNode::new(Rule::OrI1, ty, vec![a])
        }
        Inr(b, left) => {
            let b = build(b, env)?;
            let ty = Formula::or(left.clone(), b.conclusion.clone());
            ProofNode::new(Rule::OrI2, ty, vec![b])
        }
        Abort(a, ty) => ProofNode::new(Rule::BotE, ty.clone(), vec![build(a, env)?]),
        Case(s, h1, u, h2, v) => {
            let s = build(s, env)?;
            let Formula::Or(l, r) = &s.conclusion else { unreachable!("checked") };
            let (l, r) = ((**l).clone(), (**r).clone());
            let u = bound(env, h1, l, |e| build(u, e))?;
            let v = bound(env, h2, r, |e| build(v, e))?;
            ProofNode::new(Rule::OrE, u.conclusion.clone(), vec![s, u, v])
                .with_labels([h1.clone(), h2.clone()])
        }
    };
    Ok(node)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::kernel::{check_node, Environment, Mode};
    use crate::proof_format::parse_formula;

    fn f(s: &str) -> Formula {
        parse_formula(s).unwrap()
    }

    #[test]
    fn identity() {
        let t = LambdaTerm::lam("h", f("A"), LambdaTerm::var("h"));
        assert_eq!(typecheck_term(&t, &Context::default()).unwrap(), f("A -> A"));
    }

    #[test]
    fn mismatched_application() {
        let ctx = Context::from_hypotheses(
            &[("f".into(), f("A")), ("a".into(), f("A"))],
            Mode::Intuitionistic,
        );
        let t = LambdaTerm::app(LambdaTerm::var("f"), LambdaTerm::var("a"));
        assert_eq!(
            typecheck_term(&t, &ctx),
            Err(CurryHowardError::IllTyped {
                path: vec![0],
                expected: "an implication".into(),
                found: "A".into()
            })
        );
    }

    #[test]
    fn rebuilt_tree_checks() {
        let ctx = Context::from_hypotheses(&[("d".into(), f("A \\/ B"))], Mode::Intuitionistic);
        let t = LambdaTerm::case(
            LambdaTerm::var("d"),
            "d",
            LambdaTerm::inr(LambdaTerm::var("d"), f("B")),
            "d",
            LambdaTerm::inl(LambdaTerm::var("d"), f("A")),
        );
        assert_eq!(typecheck_term(&t, &ctx).unwrap(), f("B \\/ A"));
        let tree = to_proof(&t, &ctx).unwrap();
        assert_eq!(tree.labels, vec!["d'", "d''"]);
        assert!(check_node(&tree, &ctx, &Environment::new()).is_empty());
    }
}
