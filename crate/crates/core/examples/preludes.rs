//! Loading the arithmetic, set and classical preludes and using their lemmas
//! as derived rules, including an equational chain.

use gpnd::kernel::{check_document_in, Mode};
use gpnd::prelude::load_preludes;
use gpnd::proof_format::parse_document;

const DOC: &str = "
lemma one_plus [h : n = m] : S(0) + n = S(m) proof
  (Chain : S(0) + n = S(m)
    S(0) + n = S(0 + n) by plusS {n := 0} {m := n} ;
    S(0 + n) = S(n) by plusZ {n := n} ;
    S(n) = S(m) by h)

lemma pair_in [a : mem(x, A), b : mem(x, B)] : in_inter(x, A, B) proof
  (Lemma inter_intro : in_inter(x, A, B) (Hyp a : mem(x, A)) (Hyp b : mem(x, B)))
";

fn main() {
    let env = load_preludes().unwrap_or_else(|e| panic!("{e}"));
    let mut names: Vec<&String> = env.rules.keys().collect();
    names.sort();
    println!("{} rules available, e.g. {:?}", names.len(), &names[..6]);
    let rule = env.rule("strong_induction").unwrap();
    for (h, f) in &rule.premises {
        println!("strong_induction premise {h}: {f}");
    }
    println!("strong_induction conclusion: {}", rule.conclusion);

    let doc = parse_document(DOC).unwrap();
    let report = check_document_in(&env, &doc, Mode::Intuitionistic);
    for d in &report.diagnostics {
        println!("{d}");
    }
    println!("accepted: {}", report.accepted);
}
