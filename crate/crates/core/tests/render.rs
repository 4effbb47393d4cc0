mod common;

use std::collections::BTreeMap;

use common::*;
use gpnd::kernel::{CheckReport, Mode};
use gpnd::proof_format::{parse_document, Lemma, ProofDocument, ProofNode, Rule};
use gpnd::render::{
    prose_groups, render, render_prose, render_tree, rule_label, Format, RenderError, RenderOptions,
};

/// Accepted documents with their reports: the positive corpus and the preludes.
fn accepted() -> Vec<(String, ProofDocument, CheckReport)> {
    let mut out = Vec::new();
    for (files, mode) in [(positive_files(), Mode::Intuitionistic), (prelude_files(), Mode::Classical)] {
        for path in files {
            let report = check_file(&path, mode);
            assert!(report.accepted, "{}", path.display());
            out.push((path.display().to_string(), read_doc(&path), report));
        }
    }
    out
}

fn nodes(lemma: &Lemma) -> Vec<&ProofNode> {
    let mut v = Vec::new();
    lemma.root.visit(&mut |_, n| v.push(n));
    v
}

fn wide(format: Format) -> RenderOptions {
    RenderOptions { format, max_width: 100_000, ..RenderOptions::default() }
}

/// Labels printed to the right of rule lines. A rule line is a run of dashes
/// followed by one space and the tag; tags end at a gap of two or more spaces.
fn bar_tags(ascii: &str) -> Vec<String> {
    let mut tags = Vec::new();
    for line in ascii.lines() {
        let bytes = line.as_bytes();
        let mut i = 0;
        while i < bytes.len() {
            if bytes[i] != b'-' {
                i += 1;
                continue;
            }
            while i < bytes.len() && bytes[i] == b'-' {
                i += 1;
            }
            if i < bytes.len() && bytes[i] == b' ' {
                let rest = &line[i + 1..];
                let end = rest.find("  ").unwrap_or(rest.len());
                tags.push(rest[..end].to_string());
                i += 1 + end;
            }
        }
    }
    tags
}

fn counts(items: impl IntoIterator<Item = String>) -> BTreeMap<String, usize> {
    let mut m = BTreeMap::new();
    for s in items {
        *m.entry(s).or_insert(0) += 1;
    }
    m
}

fn words(s: &str) -> Vec<&str> {
    s.split(|c: char| !(c.is_alphanumeric() || c == '_' || c == '\'')).filter(|w| !w.is_empty()).collect()
}

#[test]
fn ascii_has_one_rule_line_per_inference() {
    for (file, doc, _) in accepted() {
        for lemma in &doc.lemmas {
            let out = render_tree(lemma, &wide(Format::Ascii)).unwrap();
            let all = nodes(lemma);
            let expected = counts(all.iter().filter(|n| n.rule != Rule::Hyp).map(|n| rule_label(n)));
            assert_eq!(counts(bar_tags(&out)), expected, "{file}:{}\n{out}", lemma.name);
            for n in all.iter().filter(|n| n.rule == Rule::Hyp) {
                let leaf = format!("{}: {}", n.reference.as_deref().unwrap(), n.conclusion);
                assert!(out.contains(&leaf), "{file}:{} lacks `{leaf}`", lemma.name);
            }
        }
    }
}

#[test]
fn ascii_single_hypothesis_is_one_line() {
    let doc = parse_document("lemma id [h : A] : A proof (Hyp h : A)").unwrap();
    assert_eq!(render_tree(&doc.lemmas[0], &RenderOptions::default()).unwrap(), "h: A\n");
}

#[test]
fn ascii_and_swap_tags() {
    let doc = parse_document(
        "lemma swap [h : A /\\ B] : B /\\ A proof
           (AndI : B /\\ A (AndE2 : B (Hyp h : A /\\ B)) (AndE1 : A (Hyp h : A /\\ B)))",
    )
    .unwrap();
    let out = render_tree(&doc.lemmas[0], &RenderOptions::default()).unwrap();
    assert_eq!(bar_tags(&out), ["AndE2", "AndE1", "AndI"]);
}

#[test]
fn width_limit_names_a_subtree() {
    let doc = read_doc(&corpus("ancestor.gpnd"));
    let lemma = doc.lemmas.iter().find(|l| l.name == "t1").unwrap();
    let opts = RenderOptions { max_width: 40, ..RenderOptions::default() };
    match render_tree(lemma, &opts) {
        Err(RenderError::WidthExceeded { width, max_width, widest }) => {
            assert!(width > max_width);
            assert!(lemma.root.at(&widest).is_some(), "{widest:?}");
        }
        other => panic!("{other:?}"),
    }
    let narrow = RenderOptions { max_width: 39, ..RenderOptions::default() };
    assert_eq!(render_tree(lemma, &narrow), Err(RenderError::InvalidWidth(39)));
}

#[test]
fn latex_has_one_macro_per_node() {
    for (file, doc, _) in accepted() {
        for lemma in &doc.lemmas {
            let out = render_tree(lemma, &wide(Format::Latex)).unwrap();
            let inferences = out.matches("InfC{").count();
            let axioms = out.matches("\\AxiomC{").count() - out.matches("\\AxiomC{}").count();
            assert_eq!(inferences + axioms, lemma.root.node_count(), "{file}:{}", lemma.name);
            let hyps = nodes(lemma).iter().filter(|n| n.rule == Rule::Hyp).count();
            assert_eq!(axioms, hyps, "{file}:{}", lemma.name);
        }
    }
}

#[test]
fn prose_has_one_group_per_node() {
    for (file, doc, _) in accepted() {
        for lemma in &doc.lemmas {
            let groups = prose_groups(lemma, &RenderOptions::default());
            assert_eq!(groups.len(), lemma.root.node_count(), "{file}:{}", lemma.name);
            for g in &groups {
                assert!(!g.sentences.is_empty(), "{file}:{} {:?}", lemma.name, g.path);
                let node = lemma.root.at(&g.path).unwrap();
                assert_eq!(g.rule, node.rule);
                let text = g.sentences.join(" ");
                let said = words(&text);
                for l in &g.labels {
                    assert!(said.contains(&l.as_str()), "{file}:{} {:?} omits {l}", lemma.name, g.path);
                }
            }
        }
    }
}

#[test]
fn prose_mentions_discharged_labels_twice() {
    for (file, doc, report) in accepted() {
        for lemma in &doc.lemmas {
            let out = render_prose(lemma, &RenderOptions::default(), &report).unwrap();
            let said = words(&out);
            for n in nodes(lemma) {
                if matches!(n.rule, Rule::ImpI | Rule::OrE | Rule::ExE) {
                    for l in &n.labels {
                        let times = said.iter().filter(|w| **w == l.as_str()).count();
                        assert!(times >= 2, "{file}:{} mentions {l} {times} times", lemma.name);
                    }
                }
            }
        }
    }
}

#[test]
fn prose_templates() {
    let src = "lemma id : A -> A proof (ImpI [h] : A -> A (Hyp h : A))";
    let doc = parse_document(src).unwrap();
    let report = gpnd::kernel::check_document_in(&preludes(), &doc, Mode::Intuitionistic);
    let out = render_prose(&doc.lemmas[0], &RenderOptions::default(), &report).unwrap();
    assert_eq!(out, "Assume A (h).\n  By hypothesis h, A holds.\nTherefore A -> A, discharging h.\n");
    assert_eq!(prose_groups(&doc.lemmas[0], &RenderOptions::default()).len(), 2);
}

#[test]
fn prose_requires_acceptance() {
    let doc = read_doc(&corpus("negative/exists_to_forall.gpnd"));
    let report = gpnd::kernel::check_document_in(&preludes(), &doc, Mode::Intuitionistic);
    let lemma = doc.lemmas.iter().find(|l| !report.lemma_accepted(&l.name)).unwrap();
    assert_eq!(
        render_prose(lemma, &RenderOptions::default(), &report),
        Err(RenderError::UncheckedLemma(lemma.name.clone()))
    );
}

#[test]
fn induction_reads_as_base_and_step() {
    let path = corpus("ancestor.gpnd");
    let doc = read_doc(&path);
    let report = check_file(&path, Mode::Intuitionistic);
    let lemma = doc.lemmas.iter().find(|l| l.name == "ancestors").unwrap();
    let out = render_prose(lemma, &RenderOptions::default(), &report).unwrap();
    let base = out.find("Base case:").expect("base case");
    let step = out.find("Induction step:").expect("induction step");
    let close = out.find("By induction, forall n. Q(n).").expect("conclusion");
    assert!(out.find("by induction").unwrap() < base && base < step && step < close, "{out}");
}

#[test]
fn rendering_is_total_and_deterministic() {
    for (file, doc, report) in accepted() {
        for lemma in &doc.lemmas {
            for format in [Format::Ascii, Format::Latex, Format::Prose] {
                for show_contexts in [false, true] {
                    for unicode in [false, true] {
                        let opts = RenderOptions { format, show_contexts, unicode, max_width: 100_000 };
                        let a = render(lemma, &opts, &report);
                        let b = render(lemma, &opts, &report);
                        assert!(a.is_ok(), "{file}:{} {opts:?}: {a:?}", lemma.name);
                        assert_eq!(a, b);
                    }
                }
            }
        }
    }
}
