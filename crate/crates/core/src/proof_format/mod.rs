//! Textual proof documents (`.gpnd`): definitions, axioms and lemmas whose
//! proofs are explicit trees, one rule per parenthesized node.

mod lexer;
mod parser;
mod printer;

use std::fmt;

use thiserror::Error;

use crate::syntax::{Definition, Formula, Signature, Term};

pub use parser::{parse_document, parse_formula, parse_term};
pub use printer::{print_document, print_lemma, print_node};

/// Source position, 1-based. Positions never take part in equality, so that
/// documents compare equal up to layout.
#[derive(Clone, Copy, Debug, Default)]
pub struct Pos {
    pub line: usize,
    pub column: usize,
}

impl PartialEq for Pos {
    fn eq(&self, _: &Pos) -> bool {
        true
    }
}

impl Eq for Pos {}

impl fmt::Display for Pos {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}:{}", self.line, self.column)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Error)]
#[error("{line}:{column}: {kind}")]
pub struct ParseError {
    pub line: usize,
    pub column: usize,
    pub kind: ParseErrorKind,
}

#[derive(Clone, Debug, PartialEq, Eq, Error)]
pub enum ParseErrorKind {
    #[error("{0}")]
    Syntax(String),
    #[error("arity conflict: `{symbol}` used with {found} argument(s), earlier with {expected}")]
    ArityConflict { symbol: String, expected: usize, found: usize },
    #[error("duplicate name `{0}`")]
    DuplicateName(String),
}

impl ParseError {
    pub(crate) fn at(pos: Pos, kind: ParseErrorKind) -> ParseError {
        ParseError { line: pos.line, column: pos.column, kind }
    }

    pub(crate) fn syntax(pos: Pos, msg: impl Into<String>) -> ParseError {
        ParseError::at(pos, ParseErrorKind::Syntax(msg.into()))
    }
}

/// Inference rule tags.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Rule {
    Hyp,
    AndI,
    AndE1,
    AndE2,
    ImpI,
    ImpE,
    OrI1,
    OrI2,
    OrE,
    BotE,
    Pem,
    Nne,
    AllI,
    AllE,
    ExI,
    ExE,
    EqI,
    EqE,
    NatRec,
    Conv,
    Chain,
    Lemma,
}

impl Rule {
    pub const ALL: [Rule; 22] = [
        Rule::Hyp,
        Rule::AndI,
        Rule::AndE1,
        Rule::AndE2,
        Rule::ImpI,
        Rule::ImpE,
        Rule::OrI1,
        Rule::OrI2,
        Rule::OrE,
        Rule::BotE,
        Rule::Pem,
        Rule::Nne,
        Rule::AllI,
        Rule::AllE,
        Rule::ExI,
        Rule::ExE,
        Rule::EqI,
        Rule::EqE,
        Rule::NatRec,
        Rule::Conv,
        Rule::Chain,
        Rule::Lemma,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Rule::Hyp => "Hyp",
            Rule::AndI => "AndI",
            Rule::AndE1 => "AndE1",
            Rule::AndE2 => "AndE2",
            Rule::ImpI => "ImpI",
            Rule::ImpE => "ImpE",
            Rule::OrI1 => "OrI1",
            Rule::OrI2 => "OrI2",
            Rule::OrE => "OrE",
            Rule::BotE => "BotE",
            Rule::Pem => "PEM",
            Rule::Nne => "NNE",
            Rule::AllI => "AllI",
            Rule::AllE => "AllE",
            Rule::ExI => "ExI",
            Rule::ExE => "ExE",
            Rule::EqI => "EqI",
            Rule::EqE => "EqE",
            Rule::NatRec => "NatRec",
            Rule::Conv => "Conv",
            Rule::Chain => "Chain",
            Rule::Lemma => "Lemma",
        }
    }

    pub fn from_name(s: &str) -> Option<Rule> {
        Rule::ALL.into_iter().find(|r| r.name() == s)
    }

    /// Required number of children; `None` for Lemma, whose premises are
    /// those of the referenced statement.
    pub fn arity(self) -> Option<usize> {
        match self {
            Rule::Hyp | Rule::Pem | Rule::EqI | Rule::Chain => Some(0),
            Rule::AndE1
            | Rule::AndE2
            | Rule::ImpI
            | Rule::OrI1
            | Rule::OrI2
            | Rule::BotE
            | Rule::Nne
            | Rule::AllI
            | Rule::AllE
            | Rule::ExI
            | Rule::Conv => Some(1),
            Rule::AndI | Rule::ImpE | Rule::NatRec | Rule::EqE | Rule::ExE => Some(2),
            Rule::OrE => Some(3),
            Rule::Lemma => None,
        }
    }

    /// Number of discharge labels `[h]` the rule carries.
    pub fn discharges(self) -> usize {
        match self {
            Rule::ImpI | Rule::ExE => 1,
            Rule::OrE => 2,
            _ => 0,
        }
    }

    pub fn is_classical(self) -> bool {
        matches!(self, Rule::Pem | Rule::Nne)
    }
}

impl fmt::Display for Rule {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// Right-hand side of an instantiation annotation. A bare term is read as a
/// formula when the target turns out to be a propositional variable.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum InstanceValue {
    Term(Term),
    Formula(Formula),
}

impl InstanceValue {
    pub fn as_formula(&self) -> Formula {
        match self {
            InstanceValue::Formula(f) => f.clone(),
            InstanceValue::Term(Term::Var(x)) => Formula::Atom(x.clone(), Vec::new()),
            InstanceValue::Term(Term::App(f, args)) => Formula::Atom(f.clone(), args.clone()),
        }
    }
}

/// `{x := t}` or `{P(x) := formula}`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Instantiation {
    pub target: String,
    pub params: Option<Vec<String>>,
    pub value: InstanceValue,
}

impl Instantiation {
    pub fn term(target: impl Into<String>, t: Term) -> Instantiation {
        Instantiation { target: target.into(), params: None, value: InstanceValue::Term(t) }
    }

    pub fn formula(target: impl Into<String>, f: Formula) -> Instantiation {
        Instantiation { target: target.into(), params: None, value: InstanceValue::Formula(f) }
    }

    pub fn schema(target: impl Into<String>, params: Vec<String>, f: Formula) -> Instantiation {
        Instantiation {
            target: target.into(),
            params: Some(params),
            value: InstanceValue::Formula(f),
        }
    }

    pub fn as_term(&self) -> Option<&Term> {
        match (&self.params, &self.value) {
            (None, InstanceValue::Term(t)) => Some(t),
            _ => None,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Justification {
    /// `by EqI`: the step is a reflexivity step.
    Refl,
    /// `by name {x := t} ...`: a hypothesis label or a lemma/axiom name,
    /// instantiated by successive universal eliminations.
    Named { name: String, instances: Vec<(String, Term)> },
}

/// One `lhs = rhs by justification` line of an equational block.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ChainStep {
    pub lhs: Term,
    pub rhs: Term,
    pub justification: Justification,
    pub pos: Pos,
}

/// One inference step. Every node states its conclusion.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ProofNode {
    pub rule: Rule,
    /// Discharge labels of ImpI / OrE / ExE.
    pub labels: Vec<String>,
    /// Hypothesis label (Hyp), definition (Conv) or lemma/axiom name (Lemma).
    pub reference: Option<String>,
    /// Eigenvariable of AllI / ExE.
    pub eigenvariable: Option<String>,
    /// `{x := t}` of AllE / ExI, instantiations of a Lemma reference.
    pub instances: Vec<Instantiation>,
    pub conclusion: Formula,
    pub children: Vec<ProofNode>,
    /// Steps of a Chain node.
    pub steps: Vec<ChainStep>,
    pub pos: Pos,
}

impl ProofNode {
    pub fn new(rule: Rule, conclusion: Formula, children: Vec<ProofNode>) -> ProofNode {
        ProofNode {
            rule,
            labels: Vec::new(),
            reference: None,
            eigenvariable: None,
            instances: Vec::new(),
            conclusion,
            children,
            steps: Vec::new(),
            pos: Pos::default(),
        }
    }

    pub fn hyp(label: impl Into<String>, conclusion: Formula) -> ProofNode {
        ProofNode::new(Rule::Hyp, conclusion, Vec::new()).with_reference(label)
    }

    pub fn with_labels<S: Into<String>>(mut self, labels: impl IntoIterator<Item = S>) -> Self {
        self.labels = labels.into_iter().map(Into::into).collect();
        self
    }

    pub fn with_reference(mut self, name: impl Into<String>) -> Self {
        self.reference = Some(name.into());
        self
    }

    pub fn with_eigenvariable(mut self, x: impl Into<String>) -> Self {
        self.eigenvariable = Some(x.into());
        self
    }

    pub fn with_instance(mut self, inst: Instantiation) -> Self {
        self.instances.push(inst);
        self
    }

    pub fn with_steps(mut self, steps: Vec<ChainStep>) -> Self {
        self.steps = steps;
        self
    }

    /// Node at the given child-index path.
    pub fn at(&self, path: &[usize]) -> Option<&ProofNode> {
        path.iter().try_fold(self, |node, &i| node.children.get(i))
    }

    pub fn at_mut(&mut self, path: &[usize]) -> Option<&mut ProofNode> {
        let mut node = self;
        for &i in path {
            node = node.children.get_mut(i)?;
        }
        Some(node)
    }

    pub fn node_count(&self) -> usize {
        1 + self.children.iter().map(ProofNode::node_count).sum::<usize>()
    }

    pub fn depth(&self) -> usize {
        1 + self.children.iter().map(ProofNode::depth).max().unwrap_or(0)
    }

    /// Pre-order visit with child-index paths.
    pub fn visit<'a>(&'a self, f: &mut impl FnMut(&[usize], &'a ProofNode)) {
        fn go<'a>(
            node: &'a ProofNode,
            path: &mut Vec<usize>,
            f: &mut impl FnMut(&[usize], &'a ProofNode),
        ) {
            f(path, node);
            for (i, c) in node.children.iter().enumerate() {
                path.push(i);
                go(c, path, f);
                path.pop();
            }
        }
        go(self, &mut Vec::new(), f)
    }

    /// Every discharge label introduced anywhere in the tree.
    pub fn introduced_labels(&self) -> Vec<String> {
        let mut out = Vec::new();
        self.visit(&mut |_, n| out.extend(n.labels.iter().cloned()));
        out
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Lemma {
    pub name: String,
    pub hypotheses: Vec<(String, Formula)>,
    pub goal: Formula,
    pub root: ProofNode,
    pub pos: Pos,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Axiom {
    pub name: String,
    pub statement: Formula,
    pub pos: Pos,
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct ProofDocument {
    pub signature: Signature,
    pub definitions: Vec<Definition>,
    pub axioms: Vec<Axiom>,
    pub lemmas: Vec<Lemma>,
}

impl ProofDocument {
    pub fn lemma(&self, name: &str) -> Option<&Lemma> {
        self.lemmas.iter().find(|l| l.name == name)
    }

    pub fn definition(&self, name: &str) -> Option<&Definition> {
        self.definitions.iter().find(|d| d.name == name)
    }
}
