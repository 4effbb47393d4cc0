//! The ancestor document: definitions, an equational chain inside an
//! existential elimination, induction, and a lemma used as a rule.

use gpnd::kernel::{check_document_in, Mode};
use gpnd::prelude::load_preludes;
use gpnd::proof_format::parse_document;
use gpnd::render::{render_prose, Format, RenderOptions};

fn main() {
    let src = include_str!("../corpus/ancestor.gpnd");
    let doc = parse_document(src).unwrap();
    let env = load_preludes().unwrap_or_else(|e| panic!("{e}"));
    let report = check_document_in(&env, &doc, Mode::Intuitionistic);
    println!("accepted: {}", report.accepted);
    for (lemma, deps) in &report.statistics.dependencies {
        println!("{lemma} uses {deps:?}");
    }
    let opts = RenderOptions { format: Format::Prose, unicode: true, ..RenderOptions::default() };
    let lemma = doc.lemma("ancestors").unwrap();
    print!("{}", render_prose(lemma, &opts, &report).unwrap());
}
