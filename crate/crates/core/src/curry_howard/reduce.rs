use std::collections::BTreeSet;

use crate::kernel::Context;
use crate::syntax::{fresh_name, Formula};

use super::typing::{env_of, infer, Env};
use super::{CurryHowardError, LambdaTerm};

/// `t[x := u]`, renaming binders of `t` that would capture a free label of `u`.
pub fn substitute_label(t: &LambdaTerm, x: &str, u: &LambdaTerm) -> LambdaTerm {
    subst(t, x, u, &u.free_labels())
}

fn subst(t: &LambdaTerm, x: &str, u: &LambdaTerm, fv: &BTreeSet<String>) -> LambdaTerm {
    use LambdaTerm::*;
    let s = |a: &LambdaTerm| subst(a, x, u, fv);
    match t {
        Var(y) if y == x => u.clone(),
        Var(_) => t.clone(),
        Lam(y, ty, b) => {
            let (y, b) = under_binder(y, b, x, u, fv);
            LambdaTerm::Lam(y, ty.clone(), Box::new(b))
        }
        App(a, b) => LambdaTerm::app(s(a), s(b)),
        Pair(a, b) => LambdaTerm::pair(s(a), s(b)),
        Fst(a) => LambdaTerm::fst(s(a)),
        Snd(a) => LambdaTerm::snd(s(a)),
        Inl(a, ty) => LambdaTerm::inl(s(a), ty.clone()),
        Inr(a, ty) => LambdaTerm::inr(s(a), ty.clone()),
        Abort(a, ty) => LambdaTerm::abort(s(a), ty.clone()),
        Case(sc, h1, p, h2, q) => {
            let (h1, p) = under_binder(h1, p, x, u, fv);
            let (h2, q) = under_binder(h2, q, x, u, fv);
            LambdaTerm::case(s(sc), h1, p, h2, q)
        }
    }
}

fn under_binder(
    y: &str,
    body: &LambdaTerm,
    x: &str,
    u: &LambdaTerm,
    fv: &BTreeSet<String>,
) -> (String, LambdaTerm) {
    if y == x {
        return (y.to_string(), body.clone());
    }
    if !fv.contains(y) {
        return (y.to_string(), subst(body, x, u, fv));
    }
    let mut avoid = fv.clone();
    avoid.extend(body.labels());
    avoid.insert(x.to_string());
    let z = fresh_name(y, &avoid);
    let body = substitute_label(body, y, &LambdaTerm::Var(z.clone()));
    (z, subst(&body, x, u, fv))
}

/// An elimination with its major premise cut out.
enum Frame<'a> {
    App(&'a LambdaTerm),
    Fst,
    Snd,
    Case(&'a str, &'a LambdaTerm, &'a str, &'a LambdaTerm),
    Abort(&'a Formula),
}

impl<'a> Frame<'a> {
    fn split(t: &'a LambdaTerm) -> Option<(Frame<'a>, &'a LambdaTerm)> {
        Some(match t {
            LambdaTerm::App(f, a) => (Frame::App(a), f),
            LambdaTerm::Fst(p) => (Frame::Fst, p),
            LambdaTerm::Snd(p) => (Frame::Snd, p),
            LambdaTerm::Case(s, h1, u, h2, v) => (Frame::Case(h1, u, h2, v), s),
            LambdaTerm::Abort(a, ty) => (Frame::Abort(ty), a),
            _ => return None,
        })
    }

    fn plug(&self, major: LambdaTerm) -> LambdaTerm {
        match self {
            Frame::App(a) => LambdaTerm::app(major, (*a).clone()),
            Frame::Fst => LambdaTerm::fst(major),
            Frame::Snd => LambdaTerm::snd(major),
            Frame::Case(h1, u, h2, v) => {
                LambdaTerm::case(major, *h1, (*u).clone(), *h2, (*v).clone())
            }
            Frame::Abort(ty) => LambdaTerm::abort(major, (*ty).clone()),
        }
    }

    fn free_labels(&self) -> BTreeSet<String> {
        let hole = LambdaTerm::Var(String::new());
        let mut fv = self.plug(hole).free_labels();
        fv.remove("");
        fv
    }

    /// Type of the plugged elimination when the major premise has type `ty`.
    fn result_type(&self, ty: &Formula, env: &mut Env) -> Option<Formula> {
        match (self, ty) {
            (Frame::App(_), Formula::Implies(_, b)) => Some((**b).clone()),
            (Frame::Fst, Formula::And(a, _)) => Some((**a).clone()),
            (Frame::Snd, Formula::And(_, b)) => Some((**b).clone()),
            (Frame::Abort(ty), _) => Some((*ty).clone()),
            (Frame::Case(h1, u, _, _), Formula::Or(l, _)) => {
                env.push((h1.to_string(), (**l).clone()));
                let r = infer(u, env, &mut Vec::new()).ok();
                env.pop();
                r
            }
            _ => None,
        }
    }
}

/// Contracts `t` itself when it is a redex.
fn contract(t: &LambdaTerm, env: &mut Env) -> Option<LambdaTerm> {
    use LambdaTerm::*;
    let (frame, major) = Frame::split(t)?;
    match (&frame, major) {
        (Frame::App(a), Lam(x, _, b)) => Some(substitute_label(b, x, a)),
        (Frame::Fst, Pair(a, _)) => Some((**a).clone()),
        (Frame::Snd, Pair(_, b)) => Some((**b).clone()),
        (Frame::Case(h1, u, _, _), Inl(a, _)) => Some(substitute_label(u, h1, a)),
        (Frame::Case(_, _, h2, v), Inr(b, _)) => Some(substitute_label(v, h2, b)),
        (_, Case(s, h1, u, h2, v)) => {
            let fv = frame.free_labels();
            let mut avoid = fv.clone();
            avoid.extend(t.labels());
            let mut branch = |h: &str, body: &LambdaTerm| {
                let (h, body) = if fv.contains(h) {
                    let z = fresh_name(h, &avoid);
                    avoid.insert(z.clone());
                    let body = substitute_label(body, h, &Var(z.clone()));
                    (z, body)
                } else {
                    (h.to_string(), body.clone())
                };
                (h, frame.plug(body))
            };
            let (h1, u) = branch(h1, u);
            let (h2, v) = branch(h2, v);
            Some(LambdaTerm::case((**s).clone(), h1, u, h2, v))
        }
        (_, Abort(a, ty)) => Some(LambdaTerm::abort((**a).clone(), frame.result_type(ty, env)?)),
        _ => None,
    }
}

/// One leftmost-outermost reduction step, or `None` on a normal form. `ctx`
/// types the free labels; it is consulted only to annotate an `abort`
/// pushed out of a case analysis.
pub fn step(t: &LambdaTerm, ctx: &Context) -> Option<LambdaTerm> {
    step_in(t, &mut env_of(ctx))
}

fn step_in(t: &LambdaTerm, env: &mut Env) -> Option<LambdaTerm> {
    use LambdaTerm::*;
    if let Some(r) = contract(t, env) {
        return Some(r);
    }
    let bound = |env: &mut Env, h: &str, ty: Formula, b: &LambdaTerm| {
        env.push((h.to_string(), ty));
        let r = step_in(b, env);
        env.pop();
        r
    };
    match t {
        Var(_) => None,
        Lam(h, ty, b) => bound(env, h, ty.clone(), b).map(|b| LambdaTerm::lam(h.clone(), ty.clone(), b)),
        App(a, b) | Pair(a, b) => {
            let rebuild = |a, b| if matches!(t, App(..)) { LambdaTerm::app(a, b) } else { LambdaTerm::pair(a, b) };
            if let Some(a2) = step_in(a, env) {
                return Some(rebuild(a2, (**b).clone()));
            }
            step_in(b, env).map(|b2| rebuild((**a).clone(), b2))
        }
        Fst(a) => step_in(a, env).map(LambdaTerm::fst),
        Snd(a) => step_in(a, env).map(LambdaTerm::snd),
        Inl(a, ty) => step_in(a, env).map(|a| LambdaTerm::inl(a, ty.clone())),
        Inr(a, ty) => step_in(a, env).map(|a| LambdaTerm::inr(a, ty.clone())),
        Abort(a, ty) => step_in(a, env).map(|a| LambdaTerm::abort(a, ty.clone())),
        Case(s, h1, u, h2, v) => {
            let case = |s: &LambdaTerm, u: &LambdaTerm, v: &LambdaTerm| {
                LambdaTerm::case(s.clone(), h1.clone(), u.clone(), h2.clone(), v.clone())
            };
            if let Some(s2) = step_in(s, env) {
                return Some(case(&s2, u, v));
            }
            let (l, r) = match infer(s, env, &mut Vec::new()) {
                Ok(Formula::Or(l, r)) => (*l, *r),
                _ => return None,
            };
            if let Some(u2) = bound(env, h1, l, u) {
                return Some(case(s, &u2, v));
            }
            bound(env, h2, r, v).map(|v2| case(s, u, &v2))
        }
    }
}

/// No subterm is a detour or a commutable elimination.
pub fn is_normal(t: &LambdaTerm) -> bool {
    use LambdaTerm::*;
    let redex = match Frame::split(t) {
        Some((frame, major)) => matches!(
            (&frame, major),
            (Frame::App(_), Lam(..))
                | (Frame::Fst | Frame::Snd, Pair(..))
                | (Frame::Case(..), Inl(..) | Inr(..))
                | (_, Case(..) | Abort(..))
        ),
        None => false,
    };
    !redex && t.children().into_iter().all(is_normal)
}

/// Reduces `t` to normal form in at most `step_limit` steps. The input must be
/// well-typed under `ctx`; the result has the same type.
pub fn normalize(
    t: &LambdaTerm,
    ctx: &Context,
    step_limit: usize,
) -> Result<LambdaTerm, CurryHowardError> {
    let mut env = env_of(ctx);
    infer(t, &mut env, &mut Vec::new())?;
    let mut t = t.clone();
    for _ in 0..step_limit {
        match step_in(&t, &mut env) {
            Some(next) => t = next,
            None => return Ok(t),
        }
    }
    if is_normal(&t) {
        Ok(t)
    } else {
        Err(CurryHowardError::StepLimitExceeded(step_limit))
    }
}
