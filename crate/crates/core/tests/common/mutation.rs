//! Single-point mutants of accepted proofs. Survivors must appear in
//! `WHITELIST` with the reason they remain valid proofs.

use std::path::{Path, PathBuf};

use gpnd::kernel::{check_document_in, Environment, Mode};
use gpnd::proof_format::{Instantiation, ProofDocument, ProofNode, Rule};
use gpnd::syntax::{Formula, Term};

use super::{crate_dir, positive_files, preludes, read_doc};

/// `file:lemma:path:operator` of mutants that are still correct proofs.
pub const WHITELIST: &[(&str, &str)] = &[
    ("propositional.gpnd:k:0:DischargeLabel", "the inner ImpI discharges nothing; any label will do"),
    ("arith.gpnd:zero_or_succ:1.0:DischargeLabel", "the step case never uses its induction hypothesis"),
];

#[derive(Clone, Copy, Debug)]
enum Op {
    TwinRule,
    Conclusion,
    HypLabel,
    SwapPremises,
    DischargeLabel,
    Eigenvariable,
    Instance,
    DropPremise,
}

const OPS: [Op; 8] = [
    Op::TwinRule,
    Op::Conclusion,
    Op::HypLabel,
    Op::SwapPremises,
    Op::DischargeLabel,
    Op::Eigenvariable,
    Op::Instance,
    Op::DropPremise,
];

fn twin(rule: Rule) -> Option<Rule> {
    Some(match rule {
        Rule::AndE1 => Rule::AndE2,
        Rule::AndE2 => Rule::AndE1,
        Rule::OrI1 => Rule::OrI2,
        Rule::OrI2 => Rule::OrI1,
        Rule::AndI => Rule::ImpE,
        Rule::ImpE => Rule::AndI,
        Rule::EqE => Rule::ImpE,
        Rule::ImpI => Rule::Conv,
        Rule::AllE => Rule::ExI,
        Rule::ExI => Rule::AllE,
        Rule::AllI => Rule::NatRec,
        Rule::BotE => Rule::Nne,
        _ => return None,
    })
}

/// The mutated node, or `None` when the operator does not apply.
fn mutate(node: &ProofNode, op: Op) -> Option<ProofNode> {
    let mut m = node.clone();
    match op {
        Op::TwinRule => m.rule = twin(node.rule)?,
        Op::Conclusion => {
            m.conclusion = match &node.conclusion {
                Formula::Bottom => Formula::prop("Z"),
                _ => Formula::Bottom,
            }
        }
        Op::HypLabel if node.rule == Rule::Hyp => m.reference = Some("ghost".into()),
        Op::SwapPremises if node.children.len() >= 2 && node.children[0] != node.children[1] => {
            m.children.swap(0, 1)
        }
        Op::DischargeLabel if !node.labels.is_empty() => m.labels[0] = "renamed".into(),
        Op::Eigenvariable => {
            let x0 = node.eigenvariable.as_ref()?;
            let taken = node.children.iter().flat_map(|c| c.conclusion.free_vars()).find(|v| v != x0);
            m.eigenvariable = Some(taken.unwrap_or_else(|| format!("{x0}_other")));
        }
        Op::Instance => {
            let i = node.instances.iter().position(|i| i.as_term().is_some())?;
            let target = node.instances[i].target.clone();
            m.instances[i] = Instantiation::term(target, Term::constant("k0"));
        }
        Op::DropPremise if !node.children.is_empty() => {
            m.children.pop();
        }
        _ => return None,
    }
    Some(m)
}

pub struct Mutant {
    pub id: String,
    pub doc: ProofDocument,
    pub lemma: String,
}

pub fn mutants(path: &Path, doc: &ProofDocument) -> Vec<Mutant> {
    let file = path.file_name().unwrap().to_string_lossy().to_string();
    let mut out = Vec::new();
    for (li, lemma) in doc.lemmas.iter().enumerate() {
        let mut paths = Vec::new();
        lemma.root.visit(&mut |p, _| paths.push(p.to_vec()));
        for p in paths {
            let node = lemma.root.at(&p).unwrap();
            for op in OPS {
                let Some(m) = mutate(node, op) else { continue };
                let mut doc = doc.clone();
                *doc.lemmas[li].root.at_mut(&p).unwrap() = m;
                let dotted: Vec<String> = p.iter().map(usize::to_string).collect();
                out.push(Mutant {
                    id: format!("{file}:{}:{}:{op:?}", lemma.name, dotted.join(".")),
                    doc,
                    lemma: lemma.name.clone(),
                });
            }
        }
    }
    out
}

pub fn sources() -> Vec<(PathBuf, Environment)> {
    let with_preludes = preludes();
    let mut v: Vec<_> = positive_files().into_iter().map(|p| (p, with_preludes.clone())).collect();
    // prelude files are mutated against the preludes that precede them
    let mut env = Environment::new();
    for p in prelude_files_in_load_order() {
        v.push((p.clone(), env.clone()));
        env.load(&read_doc(&p), Mode::Classical);
    }
    v
}

fn prelude_files_in_load_order() -> Vec<PathBuf> {
    gpnd::prelude::PRELUDE_FILES.iter().map(|f| crate_dir().join("prelude").join(f)).collect()
}

/// Outcome of checking every mutant of every accepted file.
pub struct Tally {
    pub killed: usize,
    pub survivors: Vec<String>,
}

impl Tally {
    /// Survivors without a whitelist entry.
    pub fn unexplained(&self) -> Vec<&String> {
        self.survivors.iter().filter(|s| !WHITELIST.iter().any(|(id, _)| id == s)).collect()
    }
}

pub fn run_mutants() -> Tally {
    let mut tally = Tally { killed: 0, survivors: Vec::new() };
    for (path, env) in sources() {
        let doc = read_doc(&path);
        let mode = if path.starts_with(crate_dir().join("prelude")) { Mode::Classical } else { Mode::Intuitionistic };
        for m in mutants(&path, &doc) {
            if check_document_in(&env, &m.doc, mode).lemma_accepted(&m.lemma) {
                tally.survivors.push(m.id);
            } else {
                tally.killed += 1;
            }
        }
    }
    tally
}
