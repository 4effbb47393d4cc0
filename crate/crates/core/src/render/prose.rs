//! One fixed template per rule. A node's sentences form its group; the
//! groups of its premises are interleaved where the template places them.

use crate::proof_format::{Justification, Lemma, ProofNode, Rule};
use crate::syntax::{substitute, Formula, Term};

use super::{formula, RenderOptions};

/// The sentences contributed by one node, with the hypothesis labels cited.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ProseGroup {
    pub path: Vec<usize>,
    pub rule: Rule,
    pub sentences: Vec<String>,
    pub labels: Vec<String>,
}

enum Part {
    Text(String),
    Premise(usize),
}

/// Groups in pre-order, one per node.
pub fn prose_groups(lemma: &Lemma, opts: &RenderOptions) -> Vec<ProseGroup> {
    let mut out = Vec::new();
    lemma.root.visit(&mut |path, node| {
        let sentences = template(node, opts)
            .into_iter()
            .filter_map(|p| match p {
                Part::Text(s) => Some(s),
                Part::Premise(_) => None,
            })
            .collect();
        out.push(ProseGroup { path: path.to_vec(), rule: node.rule, sentences, labels: cited(node) });
    });
    out
}

pub(super) fn render(lemma: &Lemma, opts: &RenderOptions) -> String {
    let mut out = String::new();
    write(&lemma.root, 0, opts, &mut out);
    out
}

fn write(node: &ProofNode, depth: usize, opts: &RenderOptions, out: &mut String) {
    for part in template(node, opts) {
        match part {
            Part::Text(s) => {
                out.push_str(&"  ".repeat(depth));
                out.push_str(&s);
                out.push('\n');
            }
            Part::Premise(i) => write(&node.children[i], depth + 1, opts, out),
        }
    }
}

fn cited(node: &ProofNode) -> Vec<String> {
    let mut labels = node.labels.clone();
    match node.rule {
        Rule::Hyp => labels.extend(node.reference.clone()),
        Rule::Chain => {
            for s in &node.steps {
                if let Justification::Named { name, .. } = &s.justification {
                    if !labels.contains(name) {
                        labels.push(name.clone());
                    }
                }
            }
        }
        _ => {}
    }
    labels
}

fn template(node: &ProofNode, opts: &RenderOptions) -> Vec<Part> {
    use Part::{Premise as P, Text as T};
    let f = |g: &Formula| formula(g, opts);
    let c = f(&node.conclusion);
    let kid = |i: usize| node.children.get(i).map(|k| f(&k.conclusion)).unwrap_or_default();
    let label = |i: usize| node.labels.get(i).cloned().unwrap_or_default();
    let reference = node.reference.clone().unwrap_or_default();
    let eigen = node.eigenvariable.clone().unwrap_or_default();
    let instance = node
        .instances
        .first()
        .and_then(|i| i.as_term())
        .map(Term::to_string)
        .unwrap_or_default();
    match node.rule {
        Rule::Hyp => vec![T(format!("By hypothesis {reference}, {c} holds."))],
        Rule::ImpI => {
            let a = match &node.conclusion {
                Formula::Implies(a, _) => f(a),
                _ => String::new(),
            };
            let h = label(0);
            vec![T(format!("Assume {a} ({h}).")), P(0), T(format!("Therefore {c}, discharging {h}."))]
        }
        Rule::ImpE => vec![P(0), P(1), T(format!("From {} and {}, we conclude {c}.", kid(0), kid(1)))],
        Rule::AndI => vec![P(0), P(1), T(format!("Combining {} and {}, we have {c}.", kid(0), kid(1)))],
        Rule::AndE1 | Rule::AndE2 => vec![P(0), T(format!("From {}, in particular {c}.", kid(0)))],
        Rule::OrI1 | Rule::OrI2 => vec![P(0), T(format!("Since {} holds, so does {c}.", kid(0)))],
        Rule::OrE => {
            let (a, b) = match node.children.first().map(|k| &k.conclusion) {
                Some(Formula::Or(a, b)) => (f(a), f(b)),
                _ => Default::default(),
            };
            let (h1, h2) = (label(0), label(1));
            vec![
                P(0),
                T(format!("We proceed by cases on {}.", kid(0))),
                T(format!("Case 1: assume {a} ({h1}).")),
                P(1),
                T(format!("Case 2: assume {b} ({h2}).")),
                P(2),
                T(format!("In both cases {c} holds, discharging {h1} and {h2}.")),
            ]
        }
        Rule::BotE => vec![P(0), T(format!("From the contradiction {}, {c} follows.", kid(0)))],
        Rule::Pem => vec![T(format!("By the excluded middle, {c}."))],
        Rule::Nne => vec![P(0), T(format!("Eliminating the double negation in {}, {c}.", kid(0)))],
        Rule::AllI => vec![
            T(format!("Let {eigen} be arbitrary.")),
            P(0),
            T(format!("Since {eigen} was arbitrary, {c}.")),
        ],
        Rule::AllE => vec![P(0), T(format!("Instantiating {} at {instance}, {c}.", kid(0)))],
        Rule::ExI => vec![P(0), T(format!("Taking {instance} as a witness, {c}."))],
        Rule::ExE => {
            let witness = match node.children.first().map(|k| &k.conclusion) {
                Some(Formula::Exists(x, p)) => f(&substitute(p, x, &Term::var(eigen.clone()))),
                _ => String::new(),
            };
            let h = label(0);
            vec![
                P(0),
                T(format!("Let {eigen} be a witness with {witness} ({h}).")),
                P(1),
                T(format!("Hence {c}, discharging {h}.")),
            ]
        }
        Rule::EqI => vec![T(format!("By reflexivity, {c}."))],
        Rule::EqE => vec![
            P(0),
            P(1),
            T(format!("Replacing equals by equals with {} in {}, {c}.", kid(0), kid(1))),
        ],
        Rule::NatRec => vec![
            T(format!("We prove {c} by induction.")),
            T("Base case:".into()),
            P(0),
            T("Induction step:".into()),
            P(1),
            T(format!("By induction, {c}.")),
        ],
        Rule::Conv => vec![P(0), T(format!("By definition of {reference}, this means {c}."))],
        Rule::Chain => {
            let steps: Vec<String> = node
                .steps
                .iter()
                .map(|s| match &s.justification {
                    Justification::Refl => format!("{} = {}", s.lhs, s.rhs),
                    Justification::Named { name, .. } => format!("{} = {} by {name}", s.lhs, s.rhs),
                })
                .collect();
            vec![T(format!("We compute {}; hence {c}.", steps.join(", ")))]
        }
        Rule::Lemma => {
            let mut parts: Vec<Part> = (0..node.children.len()).map(P).collect();
            parts.push(T(format!("By {reference}, {c}.")));
            parts
        }
    }
}
