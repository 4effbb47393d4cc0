//! Proof terms: extraction, typing, normalization and the subformula
//! property on a proof that goes through a detour.

use gpnd::curry_howard::{extract, normalize, subformula_check, to_proof, typecheck_term};
use gpnd::kernel::{Context, Mode};
use gpnd::proof_format::parse_document;

const DOC: &str = "
lemma detour [a : A, b : B] : B /\\ A proof
  (ImpE : B /\\ A
    (ImpI [p] : A /\\ B -> B /\\ A
      (AndI : B /\\ A (AndE2 : B (Hyp p : A /\\ B)) (AndE1 : A (Hyp p : A /\\ B))))
    (AndI : A /\\ B (Hyp a : A) (Hyp b : B)))
";

fn main() {
    let doc = parse_document(DOC).unwrap();
    let lemma = &doc.lemmas[0];
    let ctx = Context::from_hypotheses(&lemma.hypotheses, Mode::Intuitionistic);

    let term = extract(&lemma.root).unwrap();
    println!("term:   {term:#}");
    println!("type:   {:#}", typecheck_term(&term, &ctx).unwrap());
    println!("subformula property: {}", subformula_check(&lemma.root, &ctx));

    let normal = normalize(&term, &ctx, 1_000).unwrap();
    println!("normal: {normal:#}");
    let tree = to_proof(&normal, &ctx).unwrap();
    println!("subformula property after normalization: {}", subformula_check(&tree, &ctx));
}
