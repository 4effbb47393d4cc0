//! Bounded goal-directed proof search for intuitionistic propositional logic.
//!
//! The strategy follows the classroom heuristics: close with a hypothesis when
//! possible, apply the invertible introductions (ImpI, AndI) at once, take
//! hypotheses apart (AndE, OrE, ImpE) before touching the goal again, and
//! only then try the rules that may lose provability (OrI1, OrI2, BotE).
//!
//! Facts carry their proofs, so eliminations on hypotheses build the final
//! tree directly. Conjunctions are split and modus ponens applied eagerly at
//! no depth cost; every other step costs one unit of depth.

use std::collections::{BTreeMap, BTreeSet, HashMap};

use thiserror::Error;

use crate::kernel::Context;
use crate::proof_format::{ProofNode, Rule};
use crate::syntax::Formula;

/// Largest accepted depth bound.
pub const MAX_DEPTH: usize = 32;

#[derive(Clone, Debug, PartialEq, Eq, Error)]
pub enum SearchError {
    #[error("not found at depth {0}")]
    NotFound(usize),
    #[error("depth {0} exceeds the maximum of {MAX_DEPTH}")]
    DepthOutOfRange(usize),
    #[error("{0} is not a propositional formula")]
    NotPropositional(Formula),
}

/// A search problem. `depth_budget` bounds the nesting of costly steps.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Goal {
    pub hypotheses: Context,
    pub target: Formula,
    pub depth_budget: usize,
}

impl Goal {
    pub fn new(target: Formula, hyps: &[(String, Formula)], depth: usize) -> Goal {
        Goal {
            hypotheses: Context::from_hypotheses(hyps, Default::default()),
            target,
            depth_budget: depth,
        }
    }

    /// A proof of the target from the hypotheses, accepted by the kernel in
    /// intuitionistic mode. Deterministic: equal goals give equal trees.
    pub fn prove(&self) -> Result<ProofNode, SearchError> {
        if self.depth_budget > MAX_DEPTH {
            return Err(SearchError::DepthOutOfRange(self.depth_budget));
        }
        let hyps = self.hypotheses.entries.iter().map(|(_, f)| f);
        if let Some(f) = hyps.chain([&self.target]).find(|f| !is_propositional(f)) {
            return Err(SearchError::NotPropositional(f.clone()));
        }
        let facts = Facts::new(
            self.hypotheses.entries.iter().map(|(h, f)| (f.clone(), ProofNode::hyp(h.clone(), f.clone()))),
        );
        let mut search = Search {
            reserved: self.hypotheses.labels().into_iter().map(String::from).collect(),
            ..Search::default()
        };
        search
            .solve(&facts, &self.target, self.depth_budget, &mut Vec::new())
            .map_err(|_| SearchError::NotFound(self.depth_budget))
    }
}

/// Searches for a proof of `goal` from `hyps` within `depth` costly steps.
pub fn prove(goal: &Formula, hyps: &[(String, Formula)], depth: usize) -> Result<ProofNode, SearchError> {
    Goal::new(goal.clone(), hyps, depth).prove()
}

fn is_propositional(f: &Formula) -> bool {
    match f {
        Formula::Atom(..) | Formula::Bottom => true,
        Formula::And(a, b) | Formula::Or(a, b) | Formula::Implies(a, b) => {
            is_propositional(a) && is_propositional(b)
        }
        Formula::Forall(..) | Formula::Exists(..) | Formula::Equal(..) => false,
    }
}

/// Known formulas with one proof each, closed under AndE and modus ponens.
#[derive(Clone, Debug, Default)]
struct Facts {
    proofs: BTreeMap<Formula, ProofNode>,
    /// Discharge labels in scope, for choosing fresh ones.
    labels: BTreeSet<String>,
}

impl Facts {
    fn new(initial: impl IntoIterator<Item = (Formula, ProofNode)>) -> Facts {
        let mut facts = Facts::default();
        for (f, p) in initial {
            facts.add(f, p);
        }
        facts
    }

    fn get(&self, f: &Formula) -> Option<&ProofNode> {
        self.proofs.get(f)
    }

    fn add(&mut self, f: Formula, proof: ProofNode) {
        let mut todo = vec![(f, proof)];
        while let Some((f, p)) = todo.pop() {
            if self.proofs.contains_key(&f) {
                continue;
            }
            match &f {
                Formula::And(a, b) => {
                    todo.push(((**b).clone(), ProofNode::new(Rule::AndE2, (**b).clone(), vec![p.clone()])));
                    todo.push(((**a).clone(), ProofNode::new(Rule::AndE1, (**a).clone(), vec![p.clone()])));
                }
                Formula::Implies(a, b) => {
                    if let Some(pa) = self.proofs.get(a) {
                        let node = ProofNode::new(Rule::ImpE, (**b).clone(), vec![p.clone(), pa.clone()]);
                        todo.push(((**b).clone(), node));
                    }
                }
                _ => {}
            }
            // the new fact may be the antecedent of a known implication
            for (g, pg) in &self.proofs {
                if let Formula::Implies(a, b) = g {
                    if **a == f && !self.proofs.contains_key(b) {
                        let node = ProofNode::new(Rule::ImpE, (**b).clone(), vec![pg.clone(), p.clone()]);
                        todo.push(((**b).clone(), node));
                    }
                }
            }
            self.proofs.insert(f, p);
        }
    }

    fn key(&self, goal: &Formula) -> (Vec<Formula>, Formula) {
        (self.proofs.keys().cloned().collect(), goal.clone())
    }
}

/// Failure on a branch; `looped` marks failures that depend on the path.
struct Failed {
    looped: bool,
}

#[derive(Default)]
struct Search {
    reserved: BTreeSet<String>,
    /// Largest budget at which a path-independent failure was observed.
    failures: HashMap<(Vec<Formula>, Formula), usize>,
}

type Outcome = Result<ProofNode, Failed>;

impl Search {
    fn fresh_label(&self, facts: &Facts) -> String {
        (1..)
            .map(|i| format!("h{i}"))
            .find(|h| !facts.labels.contains(h) && !self.reserved.contains(h))
            .expect("unbounded supply")
    }

    fn assume(&self, facts: &Facts, f: &Formula) -> (String, Facts) {
        let h = self.fresh_label(facts);
        let mut inner = facts.clone();
        inner.labels.insert(h.clone());
        inner.add(f.clone(), ProofNode::hyp(h.clone(), f.clone()));
        (h, inner)
    }

    fn solve(&mut self, facts: &Facts, goal: &Formula, depth: usize, path: &mut Vec<(Vec<Formula>, Formula)>) -> Outcome {
        if let Some(p) = facts.get(goal) {
            return Ok(p.clone());
        }
        if let Some(p) = facts.get(&Formula::Bottom) {
            return Ok(ProofNode::new(Rule::BotE, goal.clone(), vec![p.clone()]));
        }
        if depth == 0 {
            return Err(Failed { looped: false });
        }
        let key = facts.key(goal);
        if path.contains(&key) {
            return Err(Failed { looped: true });
        }
        if self.failures.get(&key).is_some_and(|&d| d >= depth) {
            return Err(Failed { looped: false });
        }
        path.push(key.clone());
        let outcome = self.expand(facts, goal, depth, path);
        path.pop();
        if let Err(Failed { looped: false }) = outcome {
            let d = self.failures.entry(key).or_insert(0);
            *d = (*d).max(depth);
        }
        outcome
    }

    fn expand(&mut self, facts: &Facts, goal: &Formula, depth: usize, path: &mut Vec<(Vec<Formula>, Formula)>) -> Outcome {
        // invertible introductions: no alternative is tried after them
        match goal {
            Formula::Implies(a, b) => {
                let (h, inner) = self.assume(facts, a);
                let body = self.solve(&inner, b, depth - 1, path)?;
                return Ok(ProofNode::new(Rule::ImpI, goal.clone(), vec![body]).with_labels([h]));
            }
            Formula::And(a, b) => {
                let pa = self.solve(facts, a, depth - 1, path)?;
                let pb = self.solve(facts, b, depth - 1, path)?;
                return Ok(ProofNode::new(Rule::AndI, goal.clone(), vec![pa, pb]));
            }
            _ => {}
        }
        let mut looped = false;
        let mut note = |r: Outcome| -> Option<ProofNode> {
            match r {
                Ok(p) => Some(p),
                Err(f) => {
                    looped |= f.looped;
                    None
                }
            }
        };
        let known: Vec<(Formula, ProofNode)> =
            facts.proofs.iter().map(|(f, p)| (f.clone(), p.clone())).collect();
        for (f, pf) in &known {
            if let Formula::Or(a, b) = f {
                if facts.get(a).is_some() || facts.get(b).is_some() {
                    continue;
                }
                let (h1, left) = self.assume(facts, a);
                let Some(u) = note(self.solve(&left, goal, depth - 1, path)) else { continue };
                let (h2, right) = self.assume(facts, b);
                let Some(v) = note(self.solve(&right, goal, depth - 1, path)) else { continue };
                return Ok(ProofNode::new(Rule::OrE, goal.clone(), vec![pf.clone(), u, v]).with_labels([h1, h2]));
            }
        }
        for (f, pf) in &known {
            if let Formula::Implies(a, b) = f {
                if facts.get(b).is_some() {
                    continue;
                }
                let Some(pa) = note(self.solve(facts, a, depth - 1, path)) else { continue };
                let mut more = facts.clone();
                // the antecedent's proof is reused below; its labels stay taken
                more.labels.extend(pa.introduced_labels());
                more.add((**b).clone(), ProofNode::new(Rule::ImpE, (**b).clone(), vec![pf.clone(), pa]));
                if let Some(p) = note(self.solve(&more, goal, depth - 1, path)) {
                    return Ok(p);
                }
            }
        }
        if let Formula::Or(a, b) = goal {
            if let Some(p) = note(self.solve(facts, a, depth - 1, path)) {
                return Ok(ProofNode::new(Rule::OrI1, goal.clone(), vec![p]));
            }
            if let Some(p) = note(self.solve(facts, b, depth - 1, path)) {
                return Ok(ProofNode::new(Rule::OrI2, goal.clone(), vec![p]));
            }
        }
        if *goal != Formula::Bottom {
            if let Some(p) = note(self.solve(facts, &Formula::Bottom, depth - 1, path)) {
                return Ok(ProofNode::new(Rule::BotE, goal.clone(), vec![p]));
            }
        }
        Err(Failed { looped })
    }
}
