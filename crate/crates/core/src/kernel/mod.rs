//! The trusted checker. Every inference of a [`ProofNode`] tree is validated
//! against the rule set; lemmas that pass become derived rules usable by
//! later proofs through `Lemma` nodes and equational steps.

mod chain;
mod check;
mod equality;

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use serde::Serialize;
use thiserror::Error;

use crate::proof_format::{Lemma, ProofDocument, ProofNode, Rule};
use crate::syntax::{substitute, Definitions, Formula, Term};

pub use chain::elaborate_chain;
pub use equality::{replaces_formula, replaces_term};

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash, Serialize)]
pub enum Mode {
    #[default]
    Intuitionistic,
    Classical,
}

/// Hypotheses visible at a node, in introduction order.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Context {
    pub entries: Vec<(String, Formula)>,
    pub mode: Mode,
}

impl Context {
    pub fn new(mode: Mode) -> Context {
        Context { entries: Vec::new(), mode }
    }

    pub fn from_hypotheses(hyps: &[(String, Formula)], mode: Mode) -> Context {
        let mut ctx = Context::new(mode);
        for (h, f) in hyps {
            ctx = ctx.extended(h, f.clone());
        }
        ctx
    }

    pub fn get(&self, label: &str) -> Option<&Formula> {
        self.entries.iter().rev().find(|(l, _)| l == label).map(|(_, f)| f)
    }

    pub fn contains(&self, label: &str) -> bool {
        self.get(label).is_some()
    }

    /// The context with `label` bound to `f`, replacing any earlier binding.
    pub fn extended(&self, label: &str, f: Formula) -> Context {
        let mut entries: Vec<_> =
            self.entries.iter().filter(|(l, _)| l != label).cloned().collect();
        entries.push((label.to_string(), f));
        Context { entries, mode: self.mode }
    }

    pub fn labels(&self) -> Vec<&str> {
        self.entries.iter().map(|(l, _)| l.as_str()).collect()
    }

    pub fn mentions_free(&self, x: &str) -> Vec<&str> {
        self.entries.iter().filter(|(_, f)| f.has_free(x)).map(|(l, _)| l.as_str()).collect()
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub enum DiagnosticClass {
    WrongRuleApplication,
    ScopeViolation,
    FreshnessViolation,
    UnprovedPremise,
    UnknownHypothesis,
    DuplicateLabel,
    ConversionFailure,
    ModeViolation,
    ChainBreak,
}

impl DiagnosticClass {
    pub fn name(self) -> &'static str {
        match self {
            DiagnosticClass::WrongRuleApplication => "WrongRuleApplication",
            DiagnosticClass::ScopeViolation => "ScopeViolation",
            DiagnosticClass::FreshnessViolation => "FreshnessViolation",
            DiagnosticClass::UnprovedPremise => "UnprovedPremise",
            DiagnosticClass::UnknownHypothesis => "UnknownHypothesis",
            DiagnosticClass::DuplicateLabel => "DuplicateLabel",
            DiagnosticClass::ConversionFailure => "ConversionFailure",
            DiagnosticClass::ModeViolation => "ModeViolation",
            DiagnosticClass::ChainBreak => "ChainBreak",
        }
    }
}

impl fmt::Display for DiagnosticClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// A localized failure. `path` is the child-index path from the lemma root.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Diagnostic {
    pub class: DiagnosticClass,
    pub lemma: String,
    pub path: Vec<usize>,
    pub detail: Vec<String>,
    pub message: String,
}

impl Diagnostic {
    pub fn new(class: DiagnosticClass, path: &[usize], message: impl Into<String>) -> Diagnostic {
        Diagnostic {
            class,
            lemma: String::new(),
            path: path.to_vec(),
            detail: Vec::new(),
            message: message.into(),
        }
    }

    pub fn with_detail<S: Into<String>>(mut self, detail: impl IntoIterator<Item = S>) -> Self {
        self.detail.extend(detail.into_iter().map(Into::into));
        self
    }

    /// `lemma/1.0`; the root is `lemma/`.
    pub fn node_path(&self) -> String {
        let idx: Vec<String> = self.path.iter().map(usize::to_string).collect();
        format!("{}/{}", self.lemma, idx.join("."))
    }
}

impl fmt::Display for Diagnostic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}|{}|{}", self.class, self.node_path(), self.message)
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct Statistics {
    pub nodes: usize,
    pub max_depth: usize,
    /// Lemma name to the axioms, definitions and lemmas its proof uses.
    pub dependencies: BTreeMap<String, BTreeSet<String>>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct LemmaOutcome {
    pub name: String,
    pub accepted: bool,
    pub classical: bool,
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct CheckReport {
    pub accepted: bool,
    pub diagnostics: Vec<Diagnostic>,
    pub statistics: Statistics,
    pub lemmas: Vec<LemmaOutcome>,
}

impl CheckReport {
    pub fn lemma_accepted(&self, name: &str) -> bool {
        self.lemmas.iter().any(|l| l.name == name && l.accepted)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum RuleOrigin {
    Axiom,
    Lemma,
}

/// A statement usable as a single inference step. Axioms have no premises.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DerivedRule {
    pub name: String,
    pub origin: RuleOrigin,
    pub premises: Vec<(String, Formula)>,
    pub conclusion: Formula,
    pub classical: bool,
    /// Predicate symbols whose meaning the proof relies on; never instantiated.
    pub rigid: BTreeSet<String>,
}

impl DerivedRule {
    fn from_axiom(name: &str, statement: &Formula, defs: &Definitions) -> DerivedRule {
        let mut rigid: BTreeSet<String> = statement.predicates().into_keys().collect();
        close_over_definitions(&mut rigid, defs);
        DerivedRule {
            name: name.to_string(),
            origin: RuleOrigin::Axiom,
            premises: Vec::new(),
            conclusion: statement.clone(),
            classical: false,
            rigid,
        }
    }
}

fn close_over_definitions(rigid: &mut BTreeSet<String>, defs: &Definitions) {
    let mut todo: Vec<String> = rigid.iter().cloned().collect();
    while let Some(p) = todo.pop() {
        if let Some(d) = defs.get(&p) {
            for q in d.body.predicates().into_keys() {
                if rigid.insert(q.clone()) {
                    todo.push(q);
                }
            }
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Error)]
pub enum KernelError {
    #[error("path {0:?} does not address a node")]
    InvalidPath(Vec<usize>),
    #[error("lemma `{0}` has not been accepted")]
    UncheckedLemma(String),
}

/// Definitions and derived rules accumulated over checked documents.
#[derive(Clone, Debug, Default)]
pub struct Environment {
    pub definitions: Definitions,
    pub rules: BTreeMap<String, DerivedRule>,
    pub rejected: BTreeSet<String>,
    /// Natural-number symbols are available to NatRec.
    pub has_nat: bool,
}

impl Environment {
    pub fn new() -> Environment {
        Environment::default()
    }

    /// Checks `doc` against the current environment and registers its
    /// definitions, axioms and accepted lemmas. Names in `doc` shadow earlier ones.
    pub fn load(&mut self, doc: &ProofDocument, mode: Mode) -> CheckReport {
        for d in &doc.definitions {
            if self.definitions.contains_key(&d.name) {
                self.rules.retain(|_, r| !r.rigid.contains(&d.name));
            }
            self.definitions.insert(d.name.clone(), d.clone());
        }
        self.has_nat |= doc.signature.has_nat;
        for a in &doc.axioms {
            let rule = DerivedRule::from_axiom(&a.name, &a.statement, &self.definitions);
            self.rejected.remove(&a.name);
            self.rules.insert(a.name.clone(), rule);
        }
        let later: BTreeSet<&str> = doc.lemmas.iter().map(|l| l.name.as_str()).collect();
        let mut report = CheckReport::default();
        let mut pending = later;
        for lemma in &doc.lemmas {
            pending.remove(lemma.name.as_str());
            let outcome = check::check_lemma(self, lemma, mode, &pending);
            report.statistics.nodes += lemma.root.node_count();
            report.statistics.max_depth = report.statistics.max_depth.max(lemma.root.depth());
            report.statistics.dependencies.insert(lemma.name.clone(), outcome.dependencies.clone());
            let accepted = outcome.diagnostics.is_empty();
            report.lemmas.push(LemmaOutcome {
                name: lemma.name.clone(),
                accepted,
                classical: outcome.classical,
            });
            report.diagnostics.extend(outcome.diagnostics);
            if accepted {
                self.rejected.remove(&lemma.name);
                self.rules.insert(lemma.name.clone(), outcome.rule);
            } else {
                self.rules.remove(&lemma.name);
                self.rejected.insert(lemma.name.clone());
            }
        }
        report.accepted = report.diagnostics.is_empty();
        report
    }

    pub fn rule(&self, name: &str) -> Option<&DerivedRule> {
        self.rules.get(name)
    }
}

/// Checks a document on its own, without preludes.
pub fn check_document(doc: &ProofDocument, mode: Mode) -> CheckReport {
    Environment::new().load(doc, mode)
}

/// Checks a document against a prepared environment, leaving it untouched.
pub fn check_document_in(env: &Environment, doc: &ProofDocument, mode: Mode) -> CheckReport {
    env.clone().load(doc, mode)
}

/// Diagnostics for one subtree under `ctx`. Paths are relative to `node`.
pub fn check_node(node: &ProofNode, ctx: &Context, env: &Environment) -> Vec<Diagnostic> {
    check::check_subtree(env, node, ctx)
}

/// The derived rule registered for an accepted lemma.
pub fn derive_rule(lemma: &Lemma, env: &Environment) -> Result<DerivedRule, KernelError> {
    match env.rules.get(&lemma.name) {
        Some(rule)
            if rule.origin == RuleOrigin::Lemma
                && rule.conclusion == lemma.goal
                && rule.premises == lemma.hypotheses =>
        {
            Ok(rule.clone())
        }
        _ => Err(KernelError::UncheckedLemma(lemma.name.clone())),
    }
}

/// Context of child `i` of `node`, given the node's own context.
pub(crate) fn child_context(node: &ProofNode, i: usize, ctx: &Context) -> Context {
    match (node.rule, i) {
        (Rule::ImpI, 0) => match (&node.conclusion, node.labels.first()) {
            (Formula::Implies(a, _), Some(h)) => ctx.extended(h, (**a).clone()),
            _ => ctx.clone(),
        },
        (Rule::OrE, 1 | 2) => {
            let disj = node.children.first().map(|c| &c.conclusion);
            match (disj, node.labels.get(i - 1)) {
                (Some(Formula::Or(a, b)), Some(h)) => {
                    ctx.extended(h, if i == 1 { (**a).clone() } else { (**b).clone() })
                }
                _ => ctx.clone(),
            }
        }
        (Rule::ExE, 1) => {
            let ex = node.children.first().map(|c| &c.conclusion);
            match (ex, node.labels.first(), &node.eigenvariable) {
                (Some(Formula::Exists(x, p)), Some(h), Some(x0)) => {
                    ctx.extended(h, substitute(p, x, &Term::var(x0.clone())))
                }
                _ => ctx.clone(),
            }
        }
        _ => ctx.clone(),
    }
}

/// Hypotheses visible at the node addressed by `path`.
pub fn available_hypotheses(
    root: &ProofNode,
    path: &[usize],
    initial: &Context,
) -> Result<Context, KernelError> {
    let mut node = root;
    let mut ctx = initial.clone();
    for &i in path {
        let child = node.children.get(i).ok_or_else(|| KernelError::InvalidPath(path.to_vec()))?;
        ctx = child_context(node, i, &ctx);
        node = child;
    }
    Ok(ctx)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::proof_format::{parse_document, parse_formula};

    fn f(s: &str) -> Formula {
        parse_formula(s).unwrap()
    }

    fn node(src: &str) -> ProofNode {
        let doc = parse_document(&format!("lemma x : _|_ proof {src}")).unwrap();
        doc.lemmas[0].root.clone()
    }

    fn check(src: &str, mode: Mode) -> CheckReport {
        check_document(&parse_document(src).unwrap(), mode)
    }

    #[test]
    fn trivial_lemma() {
        assert!(check("lemma triv [h : A] : A proof (Hyp h : A)", Mode::Intuitionistic).accepted);
    }

    #[test]
    fn conjunction_swap_node() {
        let n = node("(AndI : B /\\ A (AndE2 : B (Hyp h : A /\\ B)) (AndE1 : A (Hyp h : A /\\ B)))");
        let ctx = Context::from_hypotheses(&[("h".into(), f("A /\\ B"))], Mode::Intuitionistic);
        assert!(check_node(&n, &ctx, &Environment::new()).is_empty());
    }

    #[test]
    fn classical_rules_need_classical_mode() {
        let src = "lemma lem : A \\/ ~A proof (PEM : A \\/ ~A)";
        let r = check(src, Mode::Intuitionistic);
        assert_eq!(r.diagnostics.len(), 1);
        assert_eq!(r.diagnostics[0].class, DiagnosticClass::ModeViolation);
        assert!(check(src, Mode::Classical).accepted);
        assert!(r.lemmas[0].classical);
    }

    #[test]
    fn hypotheses_along_paths() {
        let root = node(
            "(OrE [h1] [h2] : C (Hyp d : A \\/ B)
               (ImpI [k] : D -> C (Hyp c : C))
               (Hyp c : C))",
        );
        let init = Context::from_hypotheses(&[("d".into(), f("A \\/ B"))], Mode::Intuitionistic);
        assert_eq!(available_hypotheses(&root, &[], &init).unwrap(), init);
        let second = available_hypotheses(&root, &[1], &init).unwrap();
        assert_eq!(second.labels(), vec!["d", "h1"]);
        let inner = available_hypotheses(&root, &[1, 0], &init).unwrap();
        assert_eq!(inner.get("k"), Some(&f("D")));
        let third = available_hypotheses(&root, &[2], &init).unwrap();
        assert_eq!(third.labels(), vec!["d", "h2"]);
        assert_eq!(third.get("h2"), Some(&f("B")));
        assert_eq!(
            available_hypotheses(&root, &[3], &init),
            Err(KernelError::InvalidPath(vec![3]))
        );
    }

    #[test]
    fn chain_elaboration() {
        let ctx = Context::from_hypotheses(
            &[("e1".into(), f("y1 = A(m0, x0)")), ("e2".into(), f("y2 = F(y1)"))],
            Mode::Intuitionistic,
        );
        let chain = node("(Chain : y2 = F(A(m0, x0))  y2 = F(y1) by e2 ; F(y1) = F(A(m0, x0)) by e1)");
        let tree = elaborate_chain(&chain, &ctx, &Environment::new()).unwrap();
        assert_eq!(tree.conclusion, f("y2 = F(A(m0, x0))"));
        let mut rules = BTreeSet::new();
        tree.visit(&mut |_, n| {
            rules.insert(n.rule);
        });
        assert!(!rules.contains(&Rule::Chain));
        assert!(check_node(&tree, &ctx, &Environment::new()).is_empty());

        let refl = node("(Chain : t = t  t = t by EqI)");
        let tree = elaborate_chain(&refl, &ctx, &Environment::new()).unwrap();
        assert_eq!((tree.rule, tree.node_count()), (Rule::EqI, 1));

        let broken = node("(Chain : a = c  a = b by e1 ; d = c by e2)");
        let err = elaborate_chain(&broken, &ctx, &Environment::new()).unwrap_err();
        assert_eq!(err.class, DiagnosticClass::ChainBreak);
    }

    #[test]
    fn derived_rules_instantiate() {
        let src = "
lemma tri [h1 : A -> B, h2 : B -> C] : A -> C proof
  (ImpI [a] : A -> C (ImpE : C (Hyp h2 : B -> C) (ImpE : B (Hyp h1 : A -> B) (Hyp a : A))))
lemma use [p : X -> Y /\\ Z, q : Y /\\ Z -> W] : X -> W proof
  (Lemma tri {A := X} {B := Y /\\ Z} {C := W} : X -> W (Hyp p : X -> Y /\\ Z) (Hyp q : Y /\\ Z -> W))
lemma short [p : X -> Y] : X -> Y proof
  (Lemma tri {A := X} {B := Y} {C := Y} : X -> Y (Hyp p : X -> Y))";
        let doc = parse_document(src).unwrap();
        let mut env = Environment::new();
        let report = env.load(&doc, Mode::Intuitionistic);
        assert!(report.lemma_accepted("tri") && report.lemma_accepted("use"));
        assert_eq!(report.diagnostics.len(), 1);
        assert_eq!(report.diagnostics[0].class, DiagnosticClass::UnprovedPremise);
        let rule = derive_rule(&doc.lemmas[0], &env).unwrap();
        assert_eq!(rule.premises.len(), 2);
        assert_eq!(
            derive_rule(&doc.lemmas[2], &env),
            Err(KernelError::UncheckedLemma("short".into()))
        );
    }

    #[test]
    fn axioms_fix_their_predicates() {
        let src = "
axiom pa : P(a)
lemma l : P(a) proof (Lemma pa : P(a))
lemma bad : Q(a) proof (Lemma l {P(x) := Q(x)} : Q(a))";
        let r = check(src, Mode::Intuitionistic);
        assert!(r.lemma_accepted("l"));
        assert_eq!(r.diagnostics.len(), 1);
        assert!(r.diagnostics[0].message.contains("fixed meaning"));
    }

    #[test]
    fn lemmas_only_see_earlier_lemmas() {
        let src = "
lemma a : A -> A proof (Lemma b : A -> A)
lemma b : A -> A proof (ImpI [h] : A -> A (Hyp h : A))";
        let r = check(src, Mode::Intuitionistic);
        assert_eq!(r.diagnostics[0].class, DiagnosticClass::UnknownHypothesis);
        assert!(r.lemma_accepted("b"));
    }

    #[test]
    fn eigenvariable_must_not_occur_in_existential() {
        let src = "
lemma bad [h : exists x. R(x, x0)] : exists x. R(x, x) proof
  (ExE [w] {x0} : exists x. R(x, x)
    (Hyp h : exists x. R(x, x0))
    (ExI {x := x0} : exists x. R(x, x) (Hyp w : R(x0, x0))))";
        let r = check(src, Mode::Intuitionistic);
        let classes: Vec<_> = r.diagnostics.iter().map(|d| d.class).collect();
        assert!(classes.contains(&DiagnosticClass::FreshnessViolation));
    }

    #[test]
    fn induction_requires_numerals() {
        let src = "lemma i : forall n. A proof
          (NatRec : forall n. A (Hyp a : A) (Hyp b : forall n. A -> A))";
        let r = check(src, Mode::Intuitionistic);
        assert!(r.diagnostics.iter().any(|d| d.message.contains("0 and S")));
    }

    #[test]
    fn diagnostics_are_ordered_by_path() {
        let src = "lemma m [h : A] : A /\\ A proof (AndI : A /\\ A (Hyp x : A) (Hyp y : A))";
        let r = check(src, Mode::Intuitionistic);
        let paths: Vec<_> = r.diagnostics.iter().map(|d| d.path.clone()).collect();
        assert_eq!(paths, vec![vec![0], vec![1]]);
        assert_eq!(r.diagnostics[1].node_path(), "m/1");
    }
}
