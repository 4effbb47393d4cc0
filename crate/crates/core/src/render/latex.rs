//! `bussproofs` source. Every node emits exactly one rule macro: `\AxiomC`
//! with content for a hypothesis, an `...InfC` for every other rule. Rules
//! without premises stand on an empty `\AxiomC{}`.

use crate::proof_format::{Justification, Lemma, ProofNode, Rule};
use crate::syntax::formula_to_string;

use super::{rule_label, scope, RenderError, RenderOptions};

const INFERENCES: [&str; 5] = ["UnaryInfC", "BinaryInfC", "TrinaryInfC", "QuaternaryInfC", "QuinaryInfC"];

pub(super) fn render(lemma: &Lemma, opts: &RenderOptions) -> Result<String, RenderError> {
    let mut out = String::from("\\begin{prooftree}\n");
    emit(lemma, &lemma.root, &mut Vec::new(), opts, &mut out)?;
    out.push_str("\\end{prooftree}\n");
    Ok(out)
}

fn emit(
    lemma: &Lemma,
    node: &ProofNode,
    path: &mut Vec<usize>,
    opts: &RenderOptions,
    out: &mut String,
) -> Result<(), RenderError> {
    let mut conclusion = String::new();
    if opts.show_contexts {
        let labels: Vec<String> = scope(lemma, path).iter().map(|l| text(l)).collect();
        conclusion.push_str(&format!("\\mathit{{{}}} \\vdash ", labels.join(", ")));
    }
    if node.rule == Rule::Hyp {
        let label = node.reference.as_deref().unwrap_or("?");
        out.push_str(&format!(
            "\\AxiomC{{${conclusion}{{{}}}^{{{}}}$}}\n",
            math(&node.conclusion),
            text(label)
        ));
        return Ok(());
    }
    conclusion.push_str(&math(&node.conclusion));
    if node.children.is_empty() {
        out.push_str("\\AxiomC{}\n");
    }
    for (i, c) in node.children.iter().enumerate() {
        path.push(i);
        emit(lemma, c, path, opts, out)?;
        path.pop();
    }
    let macro_name = INFERENCES
        .get(node.children.len().saturating_sub(1))
        .ok_or_else(|| RenderError::TooManyPremises { path: path.clone(), count: node.children.len() })?;
    let mut label = text(&rule_label(node));
    if node.rule == Rule::Chain {
        let steps: Vec<String> = node
            .steps
            .iter()
            .map(|s| {
                let why = match &s.justification {
                    Justification::Refl => "refl".to_string(),
                    Justification::Named { name, .. } => text(name),
                };
                format!("${} = {}$ ({why})", term(&s.lhs), term(&s.rhs))
            })
            .collect();
        label.push_str(": ");
        label.push_str(&steps.join("; "));
    }
    out.push_str(&format!("\\RightLabel{{\\scriptsize {label}}}\n"));
    out.push_str(&format!("\\{macro_name}{{${conclusion}$}}\n"));
    Ok(())
}

fn term(t: &crate::syntax::Term) -> String {
    escape_math(&t.to_string())
}

/// Math-mode source of a formula.
pub(crate) fn math(f: &crate::syntax::Formula) -> String {
    escape_math(&formula_to_string(f, true))
}

fn escape_math(s: &str) -> String {
    let mut out = String::new();
    for c in s.chars() {
        match c {
            '∧' => out.push_str("\\land"),
            '∨' => out.push_str("\\lor"),
            '→' => out.push_str("\\to"),
            '↔' => out.push_str("\\leftrightarrow"),
            '¬' => out.push_str("\\lnot "),
            '⊥' => out.push_str("\\bot"),
            '∀' => out.push_str("\\forall "),
            '∃' => out.push_str("\\exists "),
            '_' => out.push_str("\\_"),
            _ => out.push(c),
        }
    }
    out
}

/// Text-mode escaping.
fn text(s: &str) -> String {
    let mut out = String::new();
    for c in s.chars() {
        match c {
            '_' | '{' | '}' | '&' | '%' | '$' | '#' => {
                out.push('\\');
                out.push(c);
            }
            '\\' => out.push_str("\\textbackslash{}"),
            '~' => out.push_str("\\textasciitilde{}"),
            '^' => out.push_str("\\textasciicircum{}"),
            _ => out.push(c),
        }
    }
    out
}
