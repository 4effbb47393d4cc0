//! Checking a document and reading the diagnostics of a rejected one.

use gpnd::kernel::{check_document, Mode};
use gpnd::proof_format::parse_document;

const DOC: &str = "
lemma and_comm : A /\\ B -> B /\\ A proof
  (ImpI [h] : A /\\ B -> B /\\ A
    (AndI : B /\\ A
      (AndE2 : B (Hyp h : A /\\ B))
      (AndE1 : A (Hyp h : A /\\ B))))

# A witness of an existential is not arbitrary.
lemma bad [h : exists x. forall y. R(x, y)] : forall x. exists y. R(y, x) proof
  (ExE [w] {x0} : forall x. exists y. R(y, x)
    (Hyp h : exists x. forall y. R(x, y))
    (AllI {x0} : forall x. exists y. R(y, x)
      (ExI {y := x0} : exists y. R(y, x0)
        (AllE {y := x0} : R(x0, x0) (Hyp w : forall y. R(x0, y))))))

lemma lem : A \\/ ~A proof (PEM : A \\/ ~A)
";

fn main() {
    let doc = parse_document(DOC).unwrap();
    for mode in [Mode::Intuitionistic, Mode::Classical] {
        let report = check_document(&doc, mode);
        println!("{mode:?}: accepted = {}", report.accepted);
        for l in &report.lemmas {
            println!("  {:<10} accepted={} classical={}", l.name, l.accepted, l.classical);
        }
        for d in &report.diagnostics {
            println!("  {d}");
        }
    }
}
