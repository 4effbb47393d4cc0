#![allow(dead_code)]

pub mod exercises;
pub mod mutation;
pub mod nameless;
pub mod strategies;

use std::path::{Path, PathBuf};

use gpnd::kernel::{check_document_in, CheckReport, Context, Environment, Mode};
use gpnd::prelude::load_preludes;
use gpnd::proof_format::{parse_document, Lemma, ProofDocument};

pub fn crate_dir() -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR"))
}

pub fn corpus_dir() -> PathBuf {
    crate_dir().join("corpus")
}

fn gpnd_files(dir: &Path) -> Vec<PathBuf> {
    let mut files: Vec<PathBuf> = std::fs::read_dir(dir)
        .unwrap()
        .map(|e| e.unwrap().path())
        .filter(|p| p.extension().is_some_and(|e| e == "gpnd"))
        .collect();
    files.sort();
    files
}

pub fn positive_files() -> Vec<PathBuf> {
    gpnd_files(&corpus_dir())
}

pub fn negative_files() -> Vec<PathBuf> {
    gpnd_files(&corpus_dir().join("negative"))
}

pub fn prelude_files() -> Vec<PathBuf> {
    gpnd_files(&crate_dir().join("prelude"))
}

pub fn all_files() -> Vec<PathBuf> {
    let mut v = positive_files();
    v.extend(negative_files());
    v.extend(prelude_files());
    v
}

pub fn read_doc(path: &Path) -> ProofDocument {
    let src = std::fs::read_to_string(path).unwrap();
    parse_document(&src).unwrap_or_else(|e| panic!("{}: {e}", path.display()))
}

pub fn preludes() -> Environment {
    load_preludes().unwrap_or_else(|e| panic!("{e}"))
}

pub fn check_file(path: &Path, mode: Mode) -> CheckReport {
    check_document_in(&preludes(), &read_doc(path), mode)
}

pub fn corpus(name: &str) -> PathBuf {
    corpus_dir().join(name)
}

/// Lemmas of the positive corpus whose statement and proof stay within the
/// propositional fragment, `Lemma` steps included when they cite lemmas of
/// the same document.
pub fn propositional_lemmas() -> Vec<(ProofDocument, Lemma)> {
    use gpnd::proof_format::Rule::*;
    let mut out = Vec::new();
    for path in positive_files() {
        let doc = read_doc(&path);
        for lemma in &doc.lemmas {
            let mut ok = lemma.goal.is_propositional()
                && lemma.hypotheses.iter().all(|(_, f)| f.is_propositional());
            lemma.root.visit(&mut |_, n| {
                ok &= n.conclusion.is_propositional()
                    && match n.rule {
                        Hyp | ImpI | ImpE | AndI | AndE1 | AndE2 | OrI1 | OrI2 | OrE | BotE => true,
                        Lemma => n.reference.as_deref().is_some_and(|r| doc.lemma(r).is_some()),
                        _ => false,
                    };
            });
            if ok {
                out.push((doc.clone(), lemma.clone()));
            }
        }
    }
    out
}

pub fn hypotheses(lemma: &Lemma) -> Context {
    Context::from_hypotheses(&lemma.hypotheses, Mode::Intuitionistic)
}
