//! Presentation of proofs: two-dimensional ASCII trees, LaTeX source for the
//! `bussproofs` package, and a fixed natural-language reading.

mod ascii;
mod latex;
mod prose;

use thiserror::Error;

use crate::kernel::{available_hypotheses, CheckReport, Context};
use crate::proof_format::{Lemma, ProofNode, Rule};
use crate::syntax::{formula_to_string, Formula};

pub use prose::{prose_groups, ProseGroup};

/// Narrowest accepted layout width.
pub const MIN_WIDTH: usize = 40;

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum Format {
    #[default]
    Ascii,
    Latex,
    Prose,
}

impl std::str::FromStr for Format {
    type Err = String;

    fn from_str(s: &str) -> Result<Format, String> {
        match s {
            "ascii" => Ok(Format::Ascii),
            "latex" => Ok(Format::Latex),
            "prose" => Ok(Format::Prose),
            other => Err(format!("unknown format `{other}`; expected ascii, latex or prose")),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct RenderOptions {
    pub format: Format,
    /// Prefix each conclusion with the labels of the hypotheses in scope.
    pub show_contexts: bool,
    pub unicode: bool,
    /// Columns available to an ASCII tree; at least [`MIN_WIDTH`].
    pub max_width: usize,
}

impl Default for RenderOptions {
    fn default() -> RenderOptions {
        RenderOptions { format: Format::Ascii, show_contexts: false, unicode: false, max_width: 100 }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Error)]
pub enum RenderError {
    #[error(
        "proof is {width} columns wide, over the limit of {max_width}; \
         consider moving the subtree at {} into its own lemma",
        show_path(.widest)
    )]
    WidthExceeded { width: usize, max_width: usize, widest: Vec<usize> },
    #[error("lemma `{0}` has not been accepted by the checker")]
    UncheckedLemma(String),
    #[error("width {0} is below the minimum of {MIN_WIDTH}")]
    InvalidWidth(usize),
    #[error("node at {} has {count} premises; LaTeX output supports at most 5", show_path(.path))]
    TooManyPremises { path: Vec<usize>, count: usize },
}

fn show_path(path: &[usize]) -> String {
    if path.is_empty() {
        return "the root".into();
    }
    path.iter().map(usize::to_string).collect::<Vec<_>>().join(".")
}

/// ASCII or LaTeX rendering of a lemma's proof tree. The proof need not have
/// been checked.
pub fn render_tree(lemma: &Lemma, opts: &RenderOptions) -> Result<String, RenderError> {
    if opts.max_width < MIN_WIDTH {
        return Err(RenderError::InvalidWidth(opts.max_width));
    }
    match opts.format {
        Format::Latex => latex::render(lemma, opts),
        _ => ascii::render(lemma, opts),
    }
}

/// Prose reading of a lemma that `report` accepted.
pub fn render_prose(lemma: &Lemma, opts: &RenderOptions, report: &CheckReport) -> Result<String, RenderError> {
    if !report.lemma_accepted(&lemma.name) {
        return Err(RenderError::UncheckedLemma(lemma.name.clone()));
    }
    Ok(prose::render(lemma, opts))
}

/// Dispatches on `opts.format`.
pub fn render(lemma: &Lemma, opts: &RenderOptions, report: &CheckReport) -> Result<String, RenderError> {
    match opts.format {
        Format::Prose => render_prose(lemma, opts, report),
        _ => render_tree(lemma, opts),
    }
}

fn formula(f: &Formula, opts: &RenderOptions) -> String {
    formula_to_string(f, opts.unicode)
}

/// Rule name followed by its annotations, e.g. `ImpI [h]` or `Lemma tri`.
/// The tag printed beside a node's rule line: rule name, cited definition
/// or lemma, discharged labels, eigenvariable and instances.
pub fn rule_label(node: &ProofNode) -> String {
    let mut s = node.rule.name().to_string();
    if matches!(node.rule, Rule::Conv | Rule::Lemma) {
        if let Some(r) = &node.reference {
            s.push(' ');
            s.push_str(r);
        }
    }
    for h in &node.labels {
        s.push_str(&format!(" [{h}]"));
    }
    if let Some(x) = &node.eigenvariable {
        s.push_str(&format!(" {{{x}}}"));
    }
    for inst in &node.instances {
        if let Some(t) = inst.as_term() {
            s.push_str(&format!(" {{{} := {t}}}", inst.target));
        }
    }
    s
}

/// Labels of the hypotheses in scope at `path`, in introduction order.
fn scope(lemma: &Lemma, path: &[usize]) -> Vec<String> {
    let initial = Context::from_hypotheses(&lemma.hypotheses, Default::default());
    available_hypotheses(&lemma.root, path, &initial)
        .map(|ctx| ctx.labels().into_iter().map(String::from).collect())
        .unwrap_or_default()
}
