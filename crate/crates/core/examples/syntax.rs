//! Parsing, printing, capture-avoiding substitution and alpha-equivalence.

use gpnd::proof_format::{parse_formula, parse_term};
use gpnd::syntax::{alpha_eq, substitute, Formula, Schema, Substitution};

fn main() {
    let f = parse_formula("forall y. R(x, y) -> exists x. R(x, y)").unwrap();
    println!("ascii:   {f}");
    println!("unicode: {f:#}");
    println!("free:    {:?}", f.free_vars());

    // y occurs bound in f; the binder is renamed so the new y stays free
    let t = parse_term("F(y)").unwrap();
    println!("f[x := F(y)] = {}", substitute(&f, "x", &t));

    let g = parse_formula("forall z. R(x, z) -> exists w. R(w, z)").unwrap();
    println!("f and {g} alpha-equivalent: {}", alpha_eq(&f, &g));

    // predicate schemas: P(u) := u = 0 \/ Q(u)
    let body = parse_formula("u = 0 \\/ Q(u)").unwrap();
    let sigma = Substitution::new().with_predicate("P", Schema::new(vec!["u".into()], body));
    let h = parse_formula("P(S(n)) /\\ forall n. P(n)").unwrap();
    println!("{h}  ~>  {}", sigma.apply(&h));

    let neg = Formula::not(Formula::iff(Formula::prop("A"), Formula::prop("B")));
    println!("derived connectives print back: {neg}");
}
