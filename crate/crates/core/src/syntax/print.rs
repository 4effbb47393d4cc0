//! Concrete syntax output. The ASCII form re-parses to the same formula;
//! `~A` and `A <-> B` are recovered from their encodings.

use std::fmt;

use super::{Formula, Term};

#[derive(Clone, Copy)]
struct Symbols {
    not: &'static str,
    and: &'static str,
    or: &'static str,
    imp: &'static str,
    iff: &'static str,
    bot: &'static str,
    forall: &'static str,
    exists: &'static str,
}

const ASCII: Symbols = Symbols {
    not: "~",
    and: " /\\ ",
    or: " \\/ ",
    imp: " -> ",
    iff: " <-> ",
    bot: "_|_",
    forall: "forall ",
    exists: "exists ",
};

const UNICODE: Symbols = Symbols {
    not: "¬",
    and: " ∧ ",
    or: " ∨ ",
    imp: " → ",
    iff: " ↔ ",
    bot: "⊥",
    forall: "∀",
    exists: "∃",
};

const IFF: u8 = 1;
const IMP: u8 = 2;
const OR: u8 = 3;
const AND: u8 = 4;
const NOT: u8 = 5;
const ATOM: u8 = 6;

pub fn term_to_string(t: &Term) -> String {
    let mut s = String::new();
    write_term(&mut s, t, 0);
    s
}

fn infix_level(f: &str) -> Option<u8> {
    match f {
        "+" => Some(1),
        "*" => Some(2),
        _ => None,
    }
}

fn write_term(out: &mut String, t: &Term, ctx: u8) {
    match t {
        Term::Var(x) => out.push_str(x),
        Term::App(f, args) if args.len() == 2 && infix_level(f).is_some() => {
            let level = infix_level(f).unwrap();
            let paren = level < ctx;
            if paren {
                out.push('(');
            }
            write_term(out, &args[0], level);
            out.push(' ');
            out.push_str(f);
            out.push(' ');
            write_term(out, &args[1], level + 1);
            if paren {
                out.push(')');
            }
        }
        Term::App(f, args) if f == "0" && args.is_empty() => out.push('0'),
        Term::App(f, args) => {
            out.push_str(f);
            out.push('(');
            for (i, a) in args.iter().enumerate() {
                if i > 0 {
                    out.push_str(", ");
                }
                write_term(out, a, 0);
            }
            out.push(')');
        }
    }
}

pub fn formula_to_string(f: &Formula, unicode: bool) -> String {
    let mut s = String::new();
    write_formula(&mut s, f, 0, if unicode { &UNICODE } else { &ASCII });
    s
}

fn level(f: &Formula) -> u8 {
    if f.as_iff().is_some() {
        return IFF;
    }
    if f.as_negation().is_some() {
        return NOT;
    }
    match f {
        Formula::Implies(..) => IMP,
        Formula::Or(..) => OR,
        Formula::And(..) => AND,
        Formula::Forall(..) | Formula::Exists(..) => 0,
        _ => ATOM,
    }
}

fn write_formula(out: &mut String, f: &Formula, ctx: u8, sym: &Symbols) {
    let lvl = level(f);
    let paren = lvl < ctx;
    if paren {
        out.push('(');
    }
    if let Some((a, b)) = f.as_iff() {
        write_formula(out, a, IMP, sym);
        out.push_str(sym.iff);
        write_formula(out, b, IMP, sym);
    } else if let Some(a) = f.as_negation() {
        out.push_str(sym.not);
        write_formula(out, a, NOT, sym);
    } else {
        match f {
            Formula::Atom(p, args) => {
                out.push_str(p);
                if !args.is_empty() {
                    out.push('(');
                    for (i, a) in args.iter().enumerate() {
                        if i > 0 {
                            out.push_str(", ");
                        }
                        write_term(out, a, 0);
                    }
                    out.push(')');
                }
            }
            Formula::Equal(a, b) => {
                write_term(out, a, 0);
                out.push_str(" = ");
                write_term(out, b, 0);
            }
            Formula::Bottom => out.push_str(sym.bot),
            Formula::Implies(a, b) => {
                write_formula(out, a, IMP + 1, sym);
                out.push_str(sym.imp);
                write_formula(out, b, IMP, sym);
            }
            Formula::Or(a, b) => {
                write_formula(out, a, OR + 1, sym);
                out.push_str(sym.or);
                write_formula(out, b, OR, sym);
            }
            Formula::And(a, b) => {
                write_formula(out, a, AND + 1, sym);
                out.push_str(sym.and);
                write_formula(out, b, AND, sym);
            }
            Formula::Forall(x, body) | Formula::Exists(x, body) => {
                out.push_str(if matches!(f, Formula::Forall(..)) { sym.forall } else { sym.exists });
                out.push_str(x);
                out.push_str(". ");
                // binary bodies are parenthesized so the scope is visible
                let binary = matches!(level(body), IFF | IMP | OR | AND);
                write_formula(out, body, if binary { ATOM } else { 0 }, sym);
            }
        }
    }
    if paren {
        out.push(')');
    }
}

impl fmt::Display for Term {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&term_to_string(self))
    }
}

impl fmt::Display for Formula {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&formula_to_string(self, f.alternate()))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn a() -> Formula {
        Formula::prop("A")
    }
    fn b() -> Formula {
        Formula::prop("B")
    }

    #[test]
    fn negation_and_equivalence_sugar() {
        assert_eq!(Formula::not(a()).to_string(), "~A");
        assert_eq!(Formula::iff(a(), b()).to_string(), "A <-> B");
        assert_eq!(Formula::not(Formula::and(a(), b())).to_string(), "~(A /\\ B)");
        assert_eq!(format!("{:#}", Formula::not(Formula::not(a()))), "¬¬A");
    }

    #[test]
    fn implication_associates_right() {
        let f = Formula::implies(a(), Formula::implies(b(), a()));
        assert_eq!(f.to_string(), "A -> B -> A");
        let g = Formula::implies(Formula::implies(a(), b()), a());
        assert_eq!(g.to_string(), "(A -> B) -> A");
    }

    #[test]
    fn quantifier_scope_is_explicit() {
        let p = |v: &str| Formula::atom("P", vec![Term::var(v)]);
        let q = |v: &str| Formula::atom("Q", vec![Term::var(v)]);
        let f = Formula::forall("x", Formula::implies(p("x"), q("x")));
        assert_eq!(f.to_string(), "forall x. (P(x) -> Q(x))");
        let g = Formula::implies(Formula::forall("x", p("x")), q("y"));
        assert_eq!(g.to_string(), "(forall x. P(x)) -> Q(y)");
    }

    #[test]
    fn arithmetic_terms() {
        let n = Term::var("n");
        let m = Term::var("m");
        let t = Term::app("+", vec![Term::succ(n.clone()), m.clone()]);
        assert_eq!(t.to_string(), "S(n) + m");
        let u = Term::app("*", vec![Term::app("+", vec![n.clone(), m.clone()]), Term::zero()]);
        assert_eq!(u.to_string(), "(n + m) * 0");
        let v = Term::app("+", vec![n, Term::app("+", vec![m, Term::zero()])]);
        assert_eq!(v.to_string(), "n + (m + 0)");
    }
}
