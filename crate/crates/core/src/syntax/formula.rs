use std::collections::{BTreeMap, BTreeSet};

use super::Term;

/// First-order formula. Negation and equivalence are not constructors:
/// `~A` is `A -> _|_` and `A <-> B` is `(A -> B) /\ (B -> A)`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Formula {
    Atom(String, Vec<Term>),
    And(Box<Formula>, Box<Formula>),
    Or(Box<Formula>, Box<Formula>),
    Implies(Box<Formula>, Box<Formula>),
    Bottom,
    Forall(String, Box<Formula>),
    Exists(String, Box<Formula>),
    Equal(Term, Term),
}

impl Formula {
    pub fn prop(name: impl Into<String>) -> Formula {
        Formula::Atom(name.into(), Vec::new())
    }

    pub fn atom(name: impl Into<String>, args: Vec<Term>) -> Formula {
        Formula::Atom(name.into(), args)
    }

    pub fn and(a: Formula, b: Formula) -> Formula {
        Formula::And(Box::new(a), Box::new(b))
    }

    pub fn or(a: Formula, b: Formula) -> Formula {
        Formula::Or(Box::new(a), Box::new(b))
    }

    pub fn implies(a: Formula, b: Formula) -> Formula {
        Formula::Implies(Box::new(a), Box::new(b))
    }

    /// `~a`, encoded as `a -> _|_`. An associated constructor, not `ops::Not`.
    #[allow(clippy::should_implement_trait)]
    pub fn not(a: Formula) -> Formula {
        Formula::implies(a, Formula::Bottom)
    }

    pub fn iff(a: Formula, b: Formula) -> Formula {
        Formula::and(
            Formula::implies(a.clone(), b.clone()),
            Formula::implies(b, a),
        )
    }

    pub fn forall(x: impl Into<String>, body: Formula) -> Formula {
        Formula::Forall(x.into(), Box::new(body))
    }

    pub fn exists(x: impl Into<String>, body: Formula) -> Formula {
        Formula::Exists(x.into(), Box::new(body))
    }

    pub fn equal(a: Term, b: Term) -> Formula {
        Formula::Equal(a, b)
    }

    /// Splits `A <-> B` back into its two sides when the conjunction has that shape.
    pub fn as_iff(&self) -> Option<(&Formula, &Formula)> {
        if let Formula::And(l, r) = self {
            if let (Formula::Implies(a, b), Formula::Implies(b2, a2)) = (&**l, &**r) {
                if a == a2 && b == b2 {
                    return Some((a, b));
                }
            }
        }
        None
    }

    pub fn as_negation(&self) -> Option<&Formula> {
        match self {
            Formula::Implies(a, b) if **b == Formula::Bottom => Some(a),
            _ => None,
        }
    }

    pub fn free_vars(&self) -> BTreeSet<String> {
        let mut out = BTreeSet::new();
        self.collect_free(&mut Vec::new(), &mut out);
        out
    }

    fn collect_free(&self, bound: &mut Vec<String>, out: &mut BTreeSet<String>) {
        let add_term = |t: &Term, bound: &Vec<String>, out: &mut BTreeSet<String>| {
            for v in t.free_vars() {
                if !bound.contains(&v) {
                    out.insert(v);
                }
            }
        };
        match self {
            Formula::Atom(_, args) => args.iter().for_each(|t| add_term(t, bound, out)),
            Formula::Equal(a, b) => {
                add_term(a, bound, out);
                add_term(b, bound, out);
            }
            Formula::And(a, b) | Formula::Or(a, b) | Formula::Implies(a, b) => {
                a.collect_free(bound, out);
                b.collect_free(bound, out);
            }
            Formula::Bottom => {}
            Formula::Forall(x, body) | Formula::Exists(x, body) => {
                bound.push(x.clone());
                body.collect_free(bound, out);
                bound.pop();
            }
        }
    }

    pub fn has_free(&self, x: &str) -> bool {
        match self {
            Formula::Atom(_, args) => args.iter().any(|t| t.mentions(x)),
            Formula::Equal(a, b) => a.mentions(x) || b.mentions(x),
            Formula::And(a, b) | Formula::Or(a, b) | Formula::Implies(a, b) => {
                a.has_free(x) || b.has_free(x)
            }
            Formula::Bottom => false,
            Formula::Forall(y, body) | Formula::Exists(y, body) => y != x && body.has_free(x),
        }
    }

    /// Every variable name occurring in the formula, bound or free.
    pub fn all_vars(&self) -> BTreeSet<String> {
        let mut out = BTreeSet::new();
        self.walk(&mut |f| match f {
            Formula::Atom(_, args) => args.iter().for_each(|t| t.collect_vars(&mut out)),
            Formula::Equal(a, b) => {
                a.collect_vars(&mut out);
                b.collect_vars(&mut out);
            }
            Formula::Forall(x, _) | Formula::Exists(x, _) => {
                out.insert(x.clone());
            }
            _ => {}
        });
        out
    }

    /// Predicate symbols with the arities they are used at.
    pub fn predicates(&self) -> BTreeMap<String, usize> {
        let mut out = BTreeMap::new();
        self.walk(&mut |f| {
            if let Formula::Atom(p, args) = f {
                out.insert(p.clone(), args.len());
            }
        });
        out
    }

    /// Pre-order traversal over subformulas.
    pub fn walk<'a>(&'a self, visit: &mut impl FnMut(&'a Formula)) {
        visit(self);
        match self {
            Formula::And(a, b) | Formula::Or(a, b) | Formula::Implies(a, b) => {
                a.walk(visit);
                b.walk(visit);
            }
            Formula::Forall(_, body) | Formula::Exists(_, body) => body.walk(visit),
            _ => {}
        }
    }

    pub fn is_propositional(&self) -> bool {
        let mut ok = true;
        self.walk(&mut |f| match f {
            Formula::Forall(..) | Formula::Exists(..) | Formula::Equal(..) => ok = false,
            _ => {}
        });
        ok
    }

    pub fn size(&self) -> usize {
        let mut n = 0;
        self.walk(&mut |_| n += 1);
        n
    }
}

/// Equality up to consistent renaming of bound variables.
pub fn alpha_eq(f: &Formula, g: &Formula) -> bool {
    alpha_eq_in(f, g, &mut Vec::new(), &mut Vec::new())
}

fn alpha_eq_in<'a>(
    f: &'a Formula,
    g: &'a Formula,
    left: &mut Vec<&'a str>,
    right: &mut Vec<&'a str>,
) -> bool {
    match (f, g) {
        (Formula::Atom(p, xs), Formula::Atom(q, ys)) => {
            p == q
                && xs.len() == ys.len()
                && xs.iter().zip(ys).all(|(s, t)| term_eq_in(s, t, left, right))
        }
        (Formula::Equal(a, b), Formula::Equal(c, d)) => {
            term_eq_in(a, c, left, right) && term_eq_in(b, d, left, right)
        }
        (Formula::And(a, b), Formula::And(c, d))
        | (Formula::Or(a, b), Formula::Or(c, d))
        | (Formula::Implies(a, b), Formula::Implies(c, d)) => {
            alpha_eq_in(a, c, left, right) && alpha_eq_in(b, d, left, right)
        }
        (Formula::Bottom, Formula::Bottom) => true,
        (Formula::Forall(x, p), Formula::Forall(y, q))
        | (Formula::Exists(x, p), Formula::Exists(y, q)) => {
            left.push(x);
            right.push(y);
            let eq = alpha_eq_in(p, q, left, right);
            left.pop();
            right.pop();
            eq
        }
        _ => false,
    }
}

fn term_eq_in(s: &Term, t: &Term, left: &[&str], right: &[&str]) -> bool {
    match (s, t) {
        (Term::Var(x), Term::Var(y)) => {
            let i = left.iter().rposition(|b| b == x);
            let j = right.iter().rposition(|b| b == y);
            match (i, j) {
                (Some(i), Some(j)) => i == j,
                (None, None) => x == y,
                _ => false,
            }
        }
        (Term::App(f, xs), Term::App(g, ys)) => {
            f == g
                && xs.len() == ys.len()
                && xs.iter().zip(ys).all(|(a, b)| term_eq_in(a, b, left, right))
        }
        _ => false,
    }
}

/// Smallest primed variant of `base` (`x'`, `x''`, ...) outside `avoid`.
pub fn fresh_name(base: &str, avoid: &BTreeSet<String>) -> String {
    let mut candidate = format!("{base}'");
    while avoid.contains(&candidate) {
        candidate.push('\'');
    }
    candidate
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(x: &str) -> Formula {
        Formula::atom("P", vec![Term::var(x)])
    }

    #[test]
    fn free_vars_respect_binders() {
        let f = Formula::forall("x", Formula::atom("R", vec![Term::var("x"), Term::var("y")]));
        assert_eq!(f.free_vars(), BTreeSet::from(["y".to_string()]));
        let g = Formula::implies(p("x"), Formula::atom("Q", vec![Term::var("x"), Term::var("y")]));
        assert_eq!(g.free_vars(), BTreeSet::from(["x".to_string(), "y".to_string()]));
    }

    #[test]
    fn alpha_equivalence_basics() {
        assert!(alpha_eq(&Formula::forall("x", p("x")), &Formula::forall("z", p("z"))));
        assert!(!alpha_eq(
            &Formula::forall("x", p("x")),
            &Formula::forall("x", Formula::atom("Q", vec![Term::var("x")]))
        ));
        let e1 = Formula::exists("y", Formula::equal(Term::var("x"), Term::var("y")));
        let e2 = Formula::exists("z", Formula::equal(Term::var("x"), Term::var("z")));
        assert!(alpha_eq(&e1, &e2));
        // a free x is not the bound x
        let e3 = Formula::exists("x", Formula::equal(Term::var("x"), Term::var("x")));
        assert!(!alpha_eq(&e1, &e3));
    }

    #[test]
    fn shadowing_is_handled() {
        let f = Formula::forall("x", Formula::forall("x", p("x")));
        let g = Formula::forall("y", Formula::forall("z", p("z")));
        let h = Formula::forall("y", Formula::forall("z", p("y")));
        assert!(alpha_eq(&f, &g));
        assert!(!alpha_eq(&f, &h));
    }

    #[test]
    fn fresh_names_are_primed() {
        let avoid = BTreeSet::from(["y".to_string(), "y'".to_string()]);
        assert_eq!(fresh_name("y", &avoid), "y''");
        assert_eq!(fresh_name("x", &avoid), "x'");
    }
}
