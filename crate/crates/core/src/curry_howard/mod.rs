//! Proofs of the implication/conjunction/disjunction/falsity fragment read as
//! simply typed lambda terms. Hypothesis labels become term variables, so a
//! proof and its term share names.
//!
//! Subterm paths index children in constructor order: the body of `Lam`,
//! function then argument of `App`, scrutinee then the two branches of `Case`.

mod extract;
mod reduce;
mod subformula;
mod typing;

use std::collections::BTreeSet;
use std::fmt;

use thiserror::Error;

use crate::proof_format::Rule;
use crate::syntax::{formula_to_string, fresh_name, Formula};

pub use extract::{extract, extract_with};
pub use reduce::{is_normal, normalize, step, substitute_label};
pub use subformula::{subformula_check, subformulas};
pub use typing::{to_proof, typecheck_term};

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum LambdaTerm {
    Var(String),
    Lam(String, Formula, Box<LambdaTerm>),
    App(Box<LambdaTerm>, Box<LambdaTerm>),
    Pair(Box<LambdaTerm>, Box<LambdaTerm>),
    Fst(Box<LambdaTerm>),
    Snd(Box<LambdaTerm>),
    /// `inl[B] t : A \/ B` for `t : A`.
    Inl(Box<LambdaTerm>, Formula),
    /// `inr[A] t : A \/ B` for `t : B`.
    Inr(Box<LambdaTerm>, Formula),
    Case(Box<LambdaTerm>, String, Box<LambdaTerm>, String, Box<LambdaTerm>),
    /// `abort[A] t : A` for `t : _|_`.
    Abort(Box<LambdaTerm>, Formula),
}

impl LambdaTerm {
    pub fn var(h: impl Into<String>) -> LambdaTerm {
        LambdaTerm::Var(h.into())
    }

    pub fn lam(h: impl Into<String>, ty: Formula, body: LambdaTerm) -> LambdaTerm {
        LambdaTerm::Lam(h.into(), ty, Box::new(body))
    }

    pub fn app(f: LambdaTerm, a: LambdaTerm) -> LambdaTerm {
        LambdaTerm::App(Box::new(f), Box::new(a))
    }

    pub fn pair(l: LambdaTerm, r: LambdaTerm) -> LambdaTerm {
        LambdaTerm::Pair(Box::new(l), Box::new(r))
    }

    pub fn fst(p: LambdaTerm) -> LambdaTerm {
        LambdaTerm::Fst(Box::new(p))
    }

    pub fn snd(p: LambdaTerm) -> LambdaTerm {
        LambdaTerm::Snd(Box::new(p))
    }

    pub fn inl(t: LambdaTerm, right: Formula) -> LambdaTerm {
        LambdaTerm::Inl(Box::new(t), right)
    }

    pub fn inr(t: LambdaTerm, left: Formula) -> LambdaTerm {
        LambdaTerm::Inr(Box::new(t), left)
    }

    pub fn case(
        s: LambdaTerm,
        h1: impl Into<String>,
        u: LambdaTerm,
        h2: impl Into<String>,
        v: LambdaTerm,
    ) -> LambdaTerm {
        LambdaTerm::Case(Box::new(s), h1.into(), Box::new(u), h2.into(), Box::new(v))
    }

    pub fn abort(t: LambdaTerm, ty: Formula) -> LambdaTerm {
        LambdaTerm::Abort(Box::new(t), ty)
    }

    pub fn size(&self) -> usize {
        1 + self.children().iter().map(|c| c.size()).sum::<usize>()
    }

    pub fn children(&self) -> Vec<&LambdaTerm> {
        use LambdaTerm::*;
        match self {
            Var(_) => vec![],
            Lam(_, _, b) | Fst(b) | Snd(b) | Inl(b, _) | Inr(b, _) | Abort(b, _) => vec![b],
            App(a, b) | Pair(a, b) => vec![a, b],
            Case(s, _, u, _, v) => vec![s, u, v],
        }
    }

    pub fn at(&self, path: &[usize]) -> Option<&LambdaTerm> {
        path.iter().try_fold(self, |t, &i| t.children().get(i).copied())
    }

    pub fn free_labels(&self) -> BTreeSet<String> {
        use LambdaTerm::*;
        match self {
            Var(h) => BTreeSet::from([h.clone()]),
            Lam(h, _, b) => {
                let mut s = b.free_labels();
                s.remove(h);
                s
            }
            Case(s, h1, u, h2, v) => {
                let mut out = s.free_labels();
                let mut a = u.free_labels();
                a.remove(h1);
                let mut b = v.free_labels();
                b.remove(h2);
                out.extend(a);
                out.extend(b);
                out
            }
            _ => self.children().into_iter().flat_map(|c| c.free_labels()).collect(),
        }
    }

    /// Every label, bound or free.
    pub fn labels(&self) -> BTreeSet<String> {
        let mut out = BTreeSet::new();
        self.collect_labels(&mut out);
        out
    }

    fn collect_labels(&self, out: &mut BTreeSet<String>) {
        match self {
            LambdaTerm::Var(h) | LambdaTerm::Lam(h, _, _) => {
                out.insert(h.clone());
            }
            LambdaTerm::Case(_, h1, _, h2, _) => {
                out.insert(h1.clone());
                out.insert(h2.clone());
            }
            _ => {}
        }
        for c in self.children() {
            c.collect_labels(out);
        }
    }

    /// Renames binders so that no two binders share a label and none
    /// coincides with a label in `avoid`. Original names are kept when free.
    pub fn with_unique_binders(&self, avoid: &BTreeSet<String>) -> LambdaTerm {
        let mut used: BTreeSet<String> = avoid.clone();
        used.extend(self.free_labels());
        self.relabel(&mut used)
    }

    fn relabel(&self, used: &mut BTreeSet<String>) -> LambdaTerm {
        use LambdaTerm::*;
        let bind = |h: &str, body: &LambdaTerm, used: &mut BTreeSet<String>| {
            let fresh = if used.contains(h) { fresh_name(h, used) } else { h.to_string() };
            used.insert(fresh.clone());
            let body = if fresh == h { body.clone() } else { substitute_label(body, h, &Var(fresh.clone())) };
            (fresh, body.relabel(used))
        };
        match self {
            Var(_) => self.clone(),
            Lam(h, ty, b) => {
                let (h, b) = bind(h, b, used);
                Lam(h, ty.clone(), Box::new(b))
            }
            App(a, b) => LambdaTerm::app(a.relabel(used), b.relabel(used)),
            Pair(a, b) => LambdaTerm::pair(a.relabel(used), b.relabel(used)),
            Fst(a) => LambdaTerm::fst(a.relabel(used)),
            Snd(a) => LambdaTerm::snd(a.relabel(used)),
            Inl(a, ty) => LambdaTerm::inl(a.relabel(used), ty.clone()),
            Inr(a, ty) => LambdaTerm::inr(a.relabel(used), ty.clone()),
            Abort(a, ty) => LambdaTerm::abort(a.relabel(used), ty.clone()),
            Case(s, h1, u, h2, v) => {
                let s = s.relabel(used);
                let (h1, u) = bind(h1, u, used);
                let (h2, v) = bind(h2, v, used);
                LambdaTerm::case(s, h1, u, h2, v)
            }
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Error)]
pub enum CurryHowardError {
    #[error("{rule} node at {} lies outside the propositional fragment", show_path(.path))]
    OutOfFragment { path: Vec<usize>, rule: Rule },
    #[error("ill-typed subterm at {}: expected {expected}, found {found}", show_path(.path))]
    IllTyped { path: Vec<usize>, expected: String, found: String },
    #[error("no normal form within {0} steps")]
    StepLimitExceeded(usize),
    #[error("lemma `{0}` is not available for inlining")]
    UnknownLemma(String),
}

fn show_path(path: &[usize]) -> String {
    if path.is_empty() {
        return "root".into();
    }
    path.iter().map(usize::to_string).collect::<Vec<_>>().join(".")
}

// Binding forms and application-like forms take the whole rest of the input
// and a left-associated spine respectively; arguments are atomic.
const OPEN: u8 = 0;
const SPINE: u8 = 1;
const ATOM: u8 = 2;

fn level(t: &LambdaTerm) -> u8 {
    match t {
        LambdaTerm::Lam(..) | LambdaTerm::Case(..) => OPEN,
        LambdaTerm::Var(_) | LambdaTerm::Pair(..) => ATOM,
        _ => SPINE,
    }
}

fn write_term(f: &mut fmt::Formatter<'_>, t: &LambdaTerm, ctx: u8) -> fmt::Result {
    let uni = f.alternate();
    let ty = |a: &Formula| formula_to_string(a, uni);
    let paren = level(t) < ctx;
    if paren {
        f.write_str("(")?;
    }
    match t {
        LambdaTerm::Var(h) => f.write_str(h)?,
        LambdaTerm::Lam(h, a, b) => {
            // compound binder types are parenthesized; `.` alone does not delimit them
            let shown = match a {
                Formula::Atom(..) | Formula::Bottom => ty(a),
                _ => format!("({})", ty(a)),
            };
            write!(f, "{}{h}:{shown}. ", if uni { "λ" } else { "\\" })?;
            write_term(f, b, OPEN)?;
        }
        LambdaTerm::App(a, b) => {
            write_term(f, a, SPINE)?;
            f.write_str(" ")?;
            write_term(f, b, ATOM)?;
        }
        LambdaTerm::Pair(a, b) => {
            f.write_str("<")?;
            write_term(f, a, OPEN)?;
            f.write_str(", ")?;
            write_term(f, b, OPEN)?;
            f.write_str(">")?;
        }
        LambdaTerm::Fst(a) | LambdaTerm::Snd(a) => {
            f.write_str(if matches!(t, LambdaTerm::Fst(_)) { "fst " } else { "snd " })?;
            write_term(f, a, ATOM)?;
        }
        LambdaTerm::Inl(a, b) | LambdaTerm::Inr(a, b) | LambdaTerm::Abort(a, b) => {
            let head = match t {
                LambdaTerm::Inl(..) => "inl",
                LambdaTerm::Inr(..) => "inr",
                _ => "abort",
            };
            write!(f, "{head}[{}] ", ty(b))?;
            write_term(f, a, ATOM)?;
        }
        LambdaTerm::Case(s, h1, u, h2, v) => {
            f.write_str("case ")?;
            write_term(f, s, SPINE)?;
            write!(f, " of {h1} => ")?;
            // a nested open term in the first branch would swallow `| ...`
            write_term(f, u, SPINE)?;
            write!(f, " | {h2} => ")?;
            write_term(f, v, OPEN)?;
        }
    }
    if paren {
        f.write_str(")")?;
    }
    Ok(())
}

/// ASCII by default; `{:#}` uses logical symbols and `λ`.
impl fmt::Display for LambdaTerm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_term(f, self, OPEN)
    }
}
