mod common;

use common::*;
use gpnd::kernel::{DiagnosticClass, Mode};

#[test]
fn positive_corpus_is_accepted() {
    for path in positive_files() {
        let report = check_file(&path, Mode::Intuitionistic);
        let lines: Vec<String> = report.diagnostics.iter().map(|d| d.to_string()).collect();
        assert!(report.accepted, "{}:\n{}", path.display(), lines.join("\n"));
    }
}

#[test]
fn negative_corpus_is_rejected() {
    for path in negative_files() {
        let report = check_file(&path, Mode::Intuitionistic);
        assert!(!report.accepted, "{}", path.display());
        for d in &report.diagnostics {
            println!("{}: {d}", path.file_name().unwrap().to_string_lossy());
        }
    }
}

fn classes(name: &str) -> Vec<(DiagnosticClass, Vec<usize>)> {
    check_file(&corpus(&format!("negative/{name}")), Mode::Intuitionistic)
        .diagnostics
        .into_iter()
        .map(|d| (d.class, d.path))
        .collect()
}

#[test]
fn negative_corpus_classes() {
    use DiagnosticClass::*;
    assert_eq!(classes("exists_to_forall.gpnd"), vec![(FreshnessViolation, vec![1])]);
    assert_eq!(classes("or_cross_branch.gpnd"), vec![(ScopeViolation, vec![1, 1])]);
    assert_eq!(classes("pem_intuitionistic.gpnd"), vec![(ModeViolation, vec![])]);
    assert_eq!(classes("chain_break.gpnd"), vec![(ChainBreak, vec![])]);
    assert_eq!(classes("bad_conversion.gpnd"), vec![(ConversionFailure, vec![])]);
    assert_eq!(classes("unknown_hypothesis.gpnd"), vec![(UnknownHypothesis, vec![0])]);
    assert_eq!(classes("wrong_rule.gpnd"), vec![(WrongRuleApplication, vec![])]);
    assert_eq!(classes("eigenvariable_in_conclusion.gpnd"), vec![(FreshnessViolation, vec![])]);
    assert_eq!(classes("classical_lemma.gpnd"), vec![(ModeViolation, vec![])]);
    let dup = classes("duplicate_label.gpnd");
    assert_eq!(dup[0], (DuplicateLabel, vec![]));
}
