use std::fmt::Write;

use super::{InstanceValue, Instantiation, Justification, Lemma, ProofDocument, ProofNode, Rule};
use crate::syntax::{formula_to_string, term_to_string};

/// Canonical text of a document. Re-parsing it yields an equal document.
pub fn print_document(doc: &ProofDocument) -> String {
    let mut blocks = Vec::new();
    for d in &doc.definitions {
        blocks.push(format!(
            "def {}({}) := {}",
            d.name,
            d.params.join(", "),
            formula_to_string(&d.body, false)
        ));
    }
    for a in &doc.axioms {
        blocks.push(format!("axiom {} : {}", a.name, formula_to_string(&a.statement, false)));
    }
    for l in &doc.lemmas {
        blocks.push(print_lemma(l));
    }
    let mut out = blocks.join("\n\n");
    if !out.is_empty() {
        out.push('\n');
    }
    out
}

pub fn print_lemma(lemma: &Lemma) -> String {
    let mut out = format!("lemma {}", lemma.name);
    if !lemma.hypotheses.is_empty() {
        let hyps: Vec<String> = lemma
            .hypotheses
            .iter()
            .map(|(h, f)| format!("{h} : {}", formula_to_string(f, false)))
            .collect();
        write!(out, " [{}]", hyps.join(", ")).unwrap();
    }
    writeln!(out, " : {} proof", formula_to_string(&lemma.goal, false)).unwrap();
    write_node(&mut out, &lemma.root, 1);
    out
}

pub fn print_node(node: &ProofNode) -> String {
    let mut out = String::new();
    write_node(&mut out, node, 0);
    out
}

fn instance_text(inst: &Instantiation) -> String {
    let value = match &inst.value {
        InstanceValue::Term(t) => term_to_string(t),
        InstanceValue::Formula(f) => formula_to_string(f, false),
    };
    match &inst.params {
        Some(ps) => format!("{{{}({}) := {value}}}", inst.target, ps.join(", ")),
        None => format!("{{{} := {value}}}", inst.target),
    }
}

fn write_node(out: &mut String, node: &ProofNode, indent: usize) {
    let pad = "  ".repeat(indent);
    write!(out, "{pad}({}", node.rule).unwrap();
    for l in &node.labels {
        write!(out, " [{l}]").unwrap();
    }
    if let Some(r) = &node.reference {
        write!(out, " {r}").unwrap();
    }
    if let Some(x) = &node.eigenvariable {
        write!(out, " {{{x}}}").unwrap();
    }
    for inst in &node.instances {
        write!(out, " {}", instance_text(inst)).unwrap();
    }
    write!(out, " : {}", formula_to_string(&node.conclusion, false)).unwrap();
    if node.rule == Rule::Chain {
        for (i, s) in node.steps.iter().enumerate() {
            let sep = if i + 1 < node.steps.len() { " ;" } else { "" };
            let just = match &s.justification {
                Justification::Refl => "EqI".to_string(),
                Justification::Named { name, instances } => {
                    let mut j = name.clone();
                    for (x, t) in instances {
                        write!(j, " {{{x} := {}}}", term_to_string(t)).unwrap();
                    }
                    j
                }
            };
            write!(
                out,
                "\n{pad}    {} = {} by {just}{sep}",
                term_to_string(&s.lhs),
                term_to_string(&s.rhs)
            )
            .unwrap();
        }
    }
    for c in &node.children {
        out.push('\n');
        write_node(out, c, indent + 1);
    }
    out.push(')');
}
