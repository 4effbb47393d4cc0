//! Capture-avoiding simultaneous substitution.
//!
//! A [`Substitution`] maps free term variables to terms and predicate symbols
//! to formula schemas (parameters plus body). Bound variables are renamed to
//! the smallest primed variant when a free variable of the replacement would
//! otherwise be captured.

use std::collections::{BTreeMap, BTreeSet};

use super::{fresh_name, Formula, Term};

/// A predicate schema `P(x1..xn) := body`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Schema {
    pub params: Vec<String>,
    pub body: Formula,
}

impl Schema {
    pub fn new(params: Vec<String>, body: Formula) -> Schema {
        Schema { params, body }
    }

    fn free_vars(&self) -> BTreeSet<String> {
        let mut fv = self.body.free_vars();
        for p in &self.params {
            fv.remove(p);
        }
        fv
    }

    /// Instantiates the parameters with `args`, simultaneously.
    pub fn instantiate(&self, args: &[Term]) -> Formula {
        let mut s = Substitution::new();
        for (p, a) in self.params.iter().zip(args) {
            s.terms.insert(p.clone(), a.clone());
        }
        s.apply(&self.body)
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Substitution {
    pub terms: BTreeMap<String, Term>,
    pub predicates: BTreeMap<String, Schema>,
}

impl Substitution {
    pub fn new() -> Substitution {
        Substitution::default()
    }

    pub fn single(x: impl Into<String>, t: Term) -> Substitution {
        let mut s = Substitution::new();
        s.terms.insert(x.into(), t);
        s
    }

    pub fn with_term(mut self, x: impl Into<String>, t: Term) -> Substitution {
        self.terms.insert(x.into(), t);
        self
    }

    pub fn with_predicate(mut self, p: impl Into<String>, schema: Schema) -> Substitution {
        self.predicates.insert(p.into(), schema);
        self
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty() && self.predicates.is_empty()
    }

    pub fn apply_term(&self, t: &Term) -> Term {
        match t {
            Term::Var(x) => self.terms.get(x).cloned().unwrap_or_else(|| t.clone()),
            Term::App(f, args) => {
                Term::App(f.clone(), args.iter().map(|a| self.apply_term(a)).collect())
            }
        }
    }

    pub fn apply(&self, f: &Formula) -> Formula {
        match f {
            Formula::Atom(p, args) => {
                let args: Vec<Term> = args.iter().map(|a| self.apply_term(a)).collect();
                match self.predicates.get(p) {
                    Some(schema) if schema.params.len() == args.len() => schema.instantiate(&args),
                    _ => Formula::Atom(p.clone(), args),
                }
            }
            Formula::Equal(a, b) => Formula::Equal(self.apply_term(a), self.apply_term(b)),
            Formula::And(a, b) => Formula::and(self.apply(a), self.apply(b)),
            Formula::Or(a, b) => Formula::or(self.apply(a), self.apply(b)),
            Formula::Implies(a, b) => Formula::implies(self.apply(a), self.apply(b)),
            Formula::Bottom => Formula::Bottom,
            Formula::Forall(x, body) => {
                let (x, body) = self.under_binder(x, body);
                Formula::Forall(x, Box::new(body))
            }
            Formula::Exists(x, body) => {
                let (x, body) = self.under_binder(x, body);
                Formula::Exists(x, Box::new(body))
            }
        }
    }

    fn under_binder(&self, x: &str, body: &Formula) -> (String, Formula) {
        let mut inner = self.clone();
        inner.terms.remove(x);
        let body_fv = body.free_vars();
        inner.terms.retain(|y, _| body_fv.contains(y));
        let used_preds = body.predicates();
        inner.predicates.retain(|p, _| used_preds.contains_key(p));
        if inner.is_empty() {
            return (x.to_string(), body.clone());
        }
        let mut range_fv = BTreeSet::new();
        for t in inner.terms.values() {
            t.collect_vars(&mut range_fv);
        }
        for schema in inner.predicates.values() {
            range_fv.extend(schema.free_vars());
        }
        if range_fv.contains(x) {
            let mut avoid = range_fv;
            avoid.extend(body_fv);
            avoid.extend(inner.terms.keys().cloned());
            let renamed = fresh_name(x, &avoid);
            inner.terms.insert(x.to_string(), Term::Var(renamed.clone()));
            (renamed, inner.apply(body))
        } else {
            (x.to_string(), inner.apply(body))
        }
    }
}

/// `f[x := t]`, capture-avoiding.
pub fn substitute(f: &Formula, x: &str, t: &Term) -> Formula {
    Substitution::single(x, t.clone()).apply(f)
}
