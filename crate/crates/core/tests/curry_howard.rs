mod common;

use common::*;
use gpnd::curry_howard::{
    extract, extract_with, is_normal, normalize, step, subformula_check, to_proof, typecheck_term,
    CurryHowardError, LambdaTerm,
};
use gpnd::kernel::{check_node, Environment, Mode};
use gpnd::proof_format::{parse_document, parse_formula, ProofDocument};
use gpnd::syntax::alpha_eq;

const LIMIT: usize = 10_000;

fn term_of(doc: &ProofDocument, lemma: &gpnd::proof_format::Lemma) -> LambdaTerm {
    extract_with(&lemma.root, &|n| doc.lemma(n))
        .unwrap_or_else(|e| panic!("{}: {e}", lemma.name))
}

#[test]
fn corpus_has_propositional_proofs() {
    let names: Vec<String> = propositional_lemmas().into_iter().map(|(_, l)| l.name).collect();
    for n in ["k", "and_comm", "curry", "uncurry", "s_comb", "diagonal", "or_arrow", "nn_and", "nn_and_conv"] {
        assert!(names.iter().any(|m| m == n), "{n} missing from {names:?}");
    }
}

#[test]
fn extracted_terms_have_the_proved_type() {
    for (doc, lemma) in propositional_lemmas() {
        let t = term_of(&doc, &lemma);
        let ty = typecheck_term(&t, &hypotheses(&lemma)).unwrap();
        assert!(alpha_eq(&ty, &lemma.goal), "{}: {t} has type {ty}", lemma.name);
    }
}

#[test]
fn rebuilt_trees_check() {
    for (doc, lemma) in propositional_lemmas() {
        let ctx = hypotheses(&lemma);
        let tree = to_proof(&term_of(&doc, &lemma), &ctx).unwrap();
        assert!(alpha_eq(&tree.conclusion, &lemma.goal));
        let diags = check_node(&tree, &ctx, &Environment::new());
        assert!(diags.is_empty(), "{}: {:?}", lemma.name, diags);
    }
}

#[test]
fn normalization_preserves_types_stepwise() {
    for (doc, lemma) in propositional_lemmas() {
        let ctx = hypotheses(&lemma);
        let mut t = term_of(&doc, &lemma);
        let mut steps = 0;
        while let Some(next) = step(&t, &ctx) {
            steps += 1;
            assert!(steps <= LIMIT, "{}", lemma.name);
            let ty = typecheck_term(&next, &ctx).unwrap_or_else(|e| panic!("{}: {e}", lemma.name));
            assert_eq!(ty, lemma.goal, "{}: {next}", lemma.name);
            t = next;
        }
        assert!(is_normal(&t));
        assert_eq!(normalize(&term_of(&doc, &lemma), &ctx, LIMIT).unwrap(), t);
    }
}

#[test]
fn normal_forms_have_the_subformula_property() {
    for (doc, lemma) in propositional_lemmas() {
        let ctx = hypotheses(&lemma);
        let n = normalize(&term_of(&doc, &lemma), &ctx, LIMIT).unwrap();
        let tree = to_proof(&n, &ctx).unwrap();
        assert!(subformula_check(&tree, &ctx), "{}: {n}", lemma.name);
        assert!(check_node(&tree, &ctx, &Environment::new()).is_empty());
    }
}

#[test]
fn diagonal_normalizes() {
    let doc = read_doc(&corpus("propositional.gpnd"));
    let lemma = doc.lemma("diagonal").unwrap();
    let ctx = hypotheses(lemma);
    let t = extract(&lemma.root).unwrap();
    assert!(!is_normal(&t));
    let n = normalize(&t, &ctx, LIMIT).unwrap();
    assert!(is_normal(&n));
    assert_eq!(typecheck_term(&n, &ctx).unwrap(), lemma.goal);
}

const CUT: &str = "
lemma swap : A /\\ B -> B /\\ A proof
  (ImpI [h] : A /\\ B -> B /\\ A
    (AndI : B /\\ A (AndE2 : B (Hyp h : A /\\ B)) (AndE1 : A (Hyp h : A /\\ B))))

lemma twice [p : A /\\ B] : A /\\ B proof
  (ImpE : A /\\ B
    (Lemma swap {A := B} {B := A} : B /\\ A -> A /\\ B)
    (ImpE : B /\\ A
      (Lemma swap : A /\\ B -> B /\\ A)
      (Hyp p : A /\\ B)))
";

#[test]
fn composed_lemmas_form_a_cut() {
    let doc = parse_document(CUT).unwrap();
    assert!(gpnd::kernel::check_document(&doc, Mode::Intuitionistic).accepted);
    let lemma = doc.lemma("twice").unwrap();
    let ctx = hypotheses(lemma);
    let t = term_of(&doc, lemma);
    let before = to_proof(&t, &ctx).unwrap();
    assert!(check_node(&before, &ctx, &Environment::new()).is_empty());
    assert!(!subformula_check(&before, &ctx));

    let n = normalize(&t, &ctx, LIMIT).unwrap();
    assert_eq!(n.to_string(), "<fst p, snd p>");
    let after = to_proof(&n, &ctx).unwrap();
    assert!(check_node(&after, &ctx, &Environment::new()).is_empty());
    assert!(subformula_check(&after, &ctx));
}

#[test]
fn lemma_nodes_need_a_source() {
    let doc = parse_document(CUT).unwrap();
    let root = &doc.lemma("twice").unwrap().root;
    assert_eq!(extract(root), Err(CurryHowardError::UnknownLemma("swap".into())));
}

#[test]
fn ill_typed_terms_are_rejected() {
    let ctx = gpnd::kernel::Context::from_hypotheses(
        &[("n".into(), parse_formula("A").unwrap())],
        Mode::Intuitionistic,
    );
    let t = LambdaTerm::abort(LambdaTerm::var("n"), parse_formula("B").unwrap());
    assert!(matches!(typecheck_term(&t, &ctx), Err(CurryHowardError::IllTyped { .. })));
    assert!(normalize(&t, &ctx, 10).is_err());
}
