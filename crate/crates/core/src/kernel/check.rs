use std::collections::{BTreeMap, BTreeSet};

use crate::proof_format::{InstanceValue, Lemma, ProofNode, Rule};
use crate::syntax::{alpha_eq, defeq, substitute, Definitions, Formula, Schema, Substitution, Term};

use super::chain::elaborate_chain;
use super::equality::replaces_formula;
use super::{
    child_context, close_over_definitions, Context, Diagnostic, DiagnosticClass, DerivedRule,
    Environment, Mode, RuleOrigin,
};

use DiagnosticClass::*;

pub(crate) struct LemmaCheck {
    pub diagnostics: Vec<Diagnostic>,
    pub dependencies: BTreeSet<String>,
    pub classical: bool,
    pub rule: DerivedRule,
}

struct Checker<'e> {
    env: &'e Environment,
    mode: Mode,
    /// Labels discharged somewhere in the tree; a missing one is out of scope
    /// rather than unknown.
    introduced: BTreeSet<String>,
    /// Lemmas of the current document not yet checked.
    pending: BTreeSet<String>,
    diags: Vec<Diagnostic>,
    deps: BTreeSet<String>,
    rigid: BTreeSet<String>,
    classical: bool,
}

pub(crate) fn check_lemma(
    env: &Environment,
    lemma: &Lemma,
    mode: Mode,
    pending: &BTreeSet<&str>,
) -> LemmaCheck {
    let mut c = Checker::new(env, mode, &lemma.root);
    c.pending = pending.iter().map(|s| s.to_string()).collect();
    let ctx = Context::from_hypotheses(&lemma.hypotheses, mode);
    c.check(&lemma.root, &ctx, &mut Vec::new());
    if !alpha_eq(&lemma.root.conclusion, &lemma.goal) {
        c.report(
            WrongRuleApplication,
            &[],
            format!("the proof concludes {} but the lemma states {}", lemma.root.conclusion, lemma.goal),
        );
    }
    let mut diagnostics = c.finish();
    for d in &mut diagnostics {
        d.lemma = lemma.name.clone();
    }
    let mut rigid = c.rigid;
    let statement = lemma.hypotheses.iter().map(|(_, f)| f).chain([&lemma.goal]);
    for f in statement {
        rigid.extend(f.predicates().into_keys().filter(|p| env.definitions.contains_key(p)));
    }
    close_over_definitions(&mut rigid, &env.definitions);
    LemmaCheck {
        diagnostics,
        dependencies: c.deps,
        classical: c.classical,
        rule: DerivedRule {
            name: lemma.name.clone(),
            origin: RuleOrigin::Lemma,
            premises: lemma.hypotheses.clone(),
            conclusion: lemma.goal.clone(),
            classical: c.classical,
            rigid,
        },
    }
}

pub(crate) fn check_subtree(env: &Environment, node: &ProofNode, ctx: &Context) -> Vec<Diagnostic> {
    let mut c = Checker::new(env, ctx.mode, node);
    c.check(node, ctx, &mut Vec::new());
    c.finish()
}

fn instance_target_error(name: &str, target: &str) -> String {
    format!("`{target}` is neither a free variable nor an instantiable predicate of `{name}`")
}

impl<'e> Checker<'e> {
    fn new(env: &'e Environment, mode: Mode, root: &ProofNode) -> Checker<'e> {
        Checker {
            env,
            mode,
            introduced: root.introduced_labels().into_iter().collect(),
            pending: BTreeSet::new(),
            diags: Vec::new(),
            deps: BTreeSet::new(),
            rigid: BTreeSet::new(),
            classical: false,
        }
    }

    fn finish(&mut self) -> Vec<Diagnostic> {
        let mut diags = std::mem::take(&mut self.diags);
        diags.sort_by(|a, b| a.path.cmp(&b.path));
        diags
    }

    fn report(&mut self, class: DiagnosticClass, path: &[usize], msg: String) -> &mut Diagnostic {
        self.diags.push(Diagnostic::new(class, path, msg));
        self.diags.last_mut().unwrap()
    }

    fn wrong(&mut self, path: &[usize], node: &ProofNode, why: impl Into<String>) {
        let msg = format!("{} cannot conclude {}: {}", node.rule, node.conclusion, why.into());
        self.report(WrongRuleApplication, path, msg);
    }

    fn check(&mut self, node: &ProofNode, ctx: &Context, path: &mut Vec<usize>) {
        let arity_ok = match node.rule.arity() {
            Some(n) if node.children.len() != n => {
                let msg = format!("{} needs {n} premise(s), found {}", node.rule, node.children.len());
                self.report(WrongRuleApplication, path, msg);
                false
            }
            _ => true,
        };
        if arity_ok {
            self.check_rule(node, ctx, path);
        }
        if node.rule == Rule::Chain {
            return;
        }
        for (i, child) in node.children.iter().enumerate() {
            let child_ctx = child_context(node, i, ctx);
            path.push(i);
            self.check(child, &child_ctx, path);
            path.pop();
        }
    }

    fn discharge(&mut self, node: &ProofNode, ctx: &Context, path: &[usize]) {
        for h in &node.labels {
            if ctx.contains(h) {
                let msg = format!("label `{h}` is already in scope at this {}", node.rule);
                self.report(DuplicateLabel, path, msg).detail.push(h.clone());
            }
        }
    }

    fn mode_gate(&mut self, node: &ProofNode, path: &[usize]) {
        self.classical = true;
        if self.mode == Mode::Intuitionistic {
            let msg = format!("{} is a classical rule; it needs classical mode", node.rule);
            self.report(ModeViolation, path, msg);
        }
    }

    fn check_rule(&mut self, node: &ProofNode, ctx: &Context, path: &[usize]) {
        let c = &node.conclusion;
        let prem = |i: usize| &node.children[i].conclusion;
        match node.rule {
            Rule::Hyp => self.check_hyp(node, ctx, path),
            Rule::AndI => match c {
                Formula::And(a, b) if alpha_eq(prem(0), a) && alpha_eq(prem(1), b) => {}
                Formula::And(..) => self.wrong(path, node, "premises do not match the conjuncts"),
                _ => self.wrong(path, node, "the conclusion is not a conjunction"),
            },
            Rule::AndE1 | Rule::AndE2 => match prem(0) {
                Formula::And(a, b) => {
                    let side = if node.rule == Rule::AndE1 { a } else { b };
                    if !alpha_eq(side, c) {
                        self.wrong(path, node, format!("the premise gives {side}"));
                    }
                }
                other => self.wrong(path, node, format!("the premise {other} is not a conjunction")),
            },
            Rule::ImpI => {
                self.discharge(node, ctx, path);
                match c {
                    Formula::Implies(_, b) if alpha_eq(prem(0), b) => {}
                    Formula::Implies(_, b) => self.wrong(
                        path,
                        node,
                        format!("the premise concludes {} instead of {b}", prem(0)),
                    ),
                    _ => self.wrong(path, node, "the conclusion is not an implication"),
                }
            }
            Rule::ImpE => match prem(0) {
                Formula::Implies(a, b) if alpha_eq(prem(1), a) && alpha_eq(c, b) => {}
                Formula::Implies(a, b) => self.wrong(
                    path,
                    node,
                    format!("the major premise needs {a} and yields {b}; the minor premise is {}", prem(1)),
                ),
                other => self.wrong(path, node, format!("the major premise {other} is not an implication")),
            },
            Rule::OrI1 | Rule::OrI2 => match c {
                Formula::Or(a, b) => {
                    let side = if node.rule == Rule::OrI1 { a } else { b };
                    if !alpha_eq(prem(0), side) {
                        self.wrong(path, node, format!("the premise should be {side}"));
                    }
                }
                _ => self.wrong(path, node, "the conclusion is not a disjunction"),
            },
            Rule::OrE => {
                self.discharge(node, ctx, path);
                match prem(0) {
                    Formula::Or(..) => {
                        for i in [1, 2] {
                            if !alpha_eq(prem(i), c) {
                                self.wrong(path, node, format!("case {i} concludes {}", prem(i)));
                            }
                        }
                    }
                    other => self.wrong(path, node, format!("the major premise {other} is not a disjunction")),
                }
            }
            Rule::BotE => {
                if *prem(0) != Formula::Bottom {
                    self.wrong(path, node, format!("the premise {} is not _|_", prem(0)));
                }
            }
            Rule::Pem => {
                self.mode_gate(node, path);
                let ok = matches!(c, Formula::Or(a, na) if na.as_negation().is_some_and(|n| alpha_eq(n, a)));
                if !ok {
                    self.wrong(path, node, "excluded middle has the form A \\/ ~A");
                }
            }
            Rule::Nne => {
                self.mode_gate(node, path);
                let ok = prem(0)
                    .as_negation()
                    .and_then(Formula::as_negation)
                    .is_some_and(|a| alpha_eq(a, c));
                if !ok {
                    self.wrong(path, node, format!("the premise should be ~~{c}"));
                }
            }
            Rule::AllI => self.check_all_intro(node, ctx, path),
            Rule::AllE => match prem(0) {
                Formula::Forall(x, p) => {
                    if let Some(t) = self.instance_for(node, x, path) {
                        let expected = substitute(p, x, &t);
                        if !alpha_eq(&expected, c) {
                            self.wrong(path, node, format!("instantiating gives {expected}"));
                        }
                    }
                }
                other => self.wrong(path, node, format!("the premise {other} is not universal")),
            },
            Rule::ExI => match c {
                Formula::Exists(x, p) => {
                    if let Some(t) = self.instance_for(node, x, path) {
                        let expected = substitute(p, x, &t);
                        if !alpha_eq(&expected, prem(0)) {
                            self.wrong(path, node, format!("the premise should be {expected}"));
                        }
                    }
                }
                _ => self.wrong(path, node, "the conclusion is not existential"),
            },
            Rule::ExE => self.check_exists_elim(node, ctx, path),
            Rule::EqI => match c {
                Formula::Equal(s, t) if s == t => {}
                _ => self.wrong(path, node, "reflexivity proves t = t"),
            },
            Rule::EqE => match prem(0) {
                Formula::Equal(a, b) => {
                    if !replaces_formula(prem(1), c, a, b) {
                        self.wrong(
                            path,
                            node,
                            format!("it is not {} with some occurrences of {a} replaced by {b}", prem(1)),
                        );
                    }
                }
                other => self.wrong(path, node, format!("the first premise {other} is not an equation")),
            },
            Rule::NatRec => self.check_induction(node, path),
            Rule::Conv => self.check_conversion(node, path),
            Rule::Chain => self.check_chain(node, ctx, path),
            Rule::Lemma => self.check_lemma_use(node, path),
        }
    }

    fn check_hyp(&mut self, node: &ProofNode, ctx: &Context, path: &[usize]) {
        let Some(h) = node.reference.as_deref() else {
            self.wrong(path, node, "no hypothesis label");
            return;
        };
        match ctx.get(h) {
            Some(f) if alpha_eq(f, &node.conclusion) => {}
            Some(f) => {
                let f = f.clone();
                self.wrong(path, node, format!("hypothesis `{h}` is {f}"));
            }
            None if self.introduced.contains(h) => {
                let msg = format!("hypothesis `{h}` is not available here; it is discharged elsewhere");
                self.report(ScopeViolation, path, msg).detail.push(h.to_string());
            }
            None => {
                let msg = format!("no hypothesis labelled `{h}`");
                self.report(UnknownHypothesis, path, msg).detail.push(h.to_string());
            }
        }
    }

    fn instance_for(&mut self, node: &ProofNode, bound: &str, path: &[usize]) -> Option<Term> {
        let inst = node.instances.first();
        match inst.and_then(|i| i.as_term().map(|t| (i.target.as_str(), t))) {
            Some((x, t)) if x == bound => Some(t.clone()),
            Some((x, _)) => {
                self.wrong(path, node, format!("the substitution is for {x} but the quantifier binds {bound}"));
                None
            }
            None => {
                self.wrong(path, node, format!("a substitution {{{bound} := t}} is required"));
                None
            }
        }
    }

    fn freshness(&mut self, path: &[usize], x0: &str, culprits: Vec<String>, node: &ProofNode) {
        if culprits.is_empty() {
            return;
        }
        let msg = format!(
            "eigenvariable {x0} of {} must not be free in {}",
            node.rule,
            culprits.join(", ")
        );
        let d = self.report(FreshnessViolation, path, msg);
        d.detail.push(x0.to_string());
        d.detail.extend(culprits);
    }

    fn check_all_intro(&mut self, node: &ProofNode, ctx: &Context, path: &[usize]) {
        let Some(x0) = node.eigenvariable.as_deref() else {
            self.wrong(path, node, "no eigenvariable");
            return;
        };
        let Formula::Forall(x, p) = &node.conclusion else {
            self.wrong(path, node, "the conclusion is not universal");
            return;
        };
        let expected = substitute(p, x, &Term::var(x0));
        if !alpha_eq(&expected, &node.children[0].conclusion) {
            self.wrong(path, node, format!("the premise should be {expected}"));
        }
        let mut culprits: Vec<String> =
            ctx.mentions_free(x0).into_iter().map(|h| format!("hypothesis {h}")).collect();
        if node.conclusion.has_free(x0) {
            culprits.push("the conclusion".into());
        }
        self.freshness(path, x0, culprits, node);
    }

    fn check_exists_elim(&mut self, node: &ProofNode, ctx: &Context, path: &[usize]) {
        self.discharge(node, ctx, path);
        let Some(x0) = node.eigenvariable.as_deref() else {
            self.wrong(path, node, "no eigenvariable");
            return;
        };
        let major = &node.children[0].conclusion;
        if !matches!(major, Formula::Exists(..)) {
            self.wrong(path, node, format!("the major premise {major} is not existential"));
        }
        if !alpha_eq(&node.children[1].conclusion, &node.conclusion) {
            self.wrong(path, node, format!("the minor premise concludes {}", node.children[1].conclusion));
        }
        let mut culprits: Vec<String> =
            ctx.mentions_free(x0).into_iter().map(|h| format!("hypothesis {h}")).collect();
        if node.conclusion.has_free(x0) {
            culprits.push("the conclusion".into());
        }
        if major.has_free(x0) {
            culprits.push("the existential premise".into());
        }
        self.freshness(path, x0, culprits, node);
    }

    fn check_induction(&mut self, node: &ProofNode, path: &[usize]) {
        if !self.env.has_nat {
            self.wrong(path, node, "induction needs the symbols 0 and S");
            return;
        }
        let Formula::Forall(n, p) = &node.conclusion else {
            self.wrong(path, node, "the conclusion is not universal");
            return;
        };
        let base = substitute(p, n, &Term::zero());
        let succ = substitute(p, n, &Term::succ(Term::var(n.clone())));
        let step = Formula::forall(n.clone(), Formula::implies((**p).clone(), succ));
        if !alpha_eq(&base, &node.children[0].conclusion) {
            self.wrong(path, node, format!("the base case should be {base}"));
        }
        if !alpha_eq(&step, &node.children[1].conclusion) {
            self.wrong(path, node, format!("the induction step should be {step}"));
        }
    }

    fn check_conversion(&mut self, node: &ProofNode, path: &[usize]) {
        let name = node.reference.clone().unwrap_or_default();
        let Some(def) = self.env.definitions.get(&name) else {
            let msg = format!("`{name}` is not a definition");
            self.report(ConversionFailure, path, msg).detail.push(name);
            return;
        };
        self.deps.insert(name.clone());
        self.rigid.insert(name.clone());
        let only: Definitions = BTreeMap::from([(name.clone(), def.clone())]);
        let premise = &node.children[0].conclusion;
        if !matches!(defeq(premise, &node.conclusion, &only), Ok(true)) {
            let msg = format!(
                "{premise} and {} do not agree after unfolding `{name}`",
                node.conclusion
            );
            self.report(ConversionFailure, path, msg).detail.push(name);
        }
    }

    fn check_chain(&mut self, node: &ProofNode, ctx: &Context, path: &[usize]) {
        match elaborate_chain(node, ctx, self.env) {
            Ok(tree) => {
                let start = self.diags.len();
                self.check(&tree, ctx, &mut Vec::new());
                for d in &mut self.diags[start..] {
                    d.path = path.to_vec();
                }
            }
            Err(mut d) => {
                if d.class == UnknownHypothesis && d.detail.iter().any(|l| self.introduced.contains(l)) {
                    d.class = ScopeViolation;
                }
                d.path = path.to_vec();
                self.diags.push(d);
            }
        }
    }

    fn check_lemma_use(&mut self, node: &ProofNode, path: &[usize]) {
        let name = node.reference.clone().unwrap_or_default();
        let env = self.env;
        if self.pending.contains(&name) {
            let msg = format!("`{name}` is stated later in the document");
            self.report(UnknownHypothesis, path, msg).detail.push(name);
            return;
        }
        let Some(rule) = env.rules.get(&name) else {
            let (class, msg) = if env.rejected.contains(&name) {
                (UnprovedPremise, format!("`{name}` was not accepted"))
            } else if env.definitions.contains_key(&name) {
                (UnknownHypothesis, format!("`{name}` is a definition; use Conv"))
            } else {
                (UnknownHypothesis, format!("no lemma or axiom named `{name}`"))
            };
            self.report(class, path, msg).detail.push(name);
            return;
        };
        self.deps.insert(name.clone());
        self.rigid.extend(rule.rigid.iter().cloned());
        if rule.classical {
            self.classical = true;
            if self.mode == Mode::Intuitionistic {
                let msg = format!("`{name}` relies on classical reasoning");
                self.report(ModeViolation, path, msg).detail.push(name.clone());
            }
        }
        let subst = match instantiation(rule, node) {
            Ok(s) => s,
            Err(why) => {
                self.wrong(path, node, why);
                return;
            }
        };
        let (have, need) = (node.children.len(), rule.premises.len());
        if have < need {
            let missing: Vec<String> = rule.premises[have..].iter().map(|(l, _)| l.clone()).collect();
            let msg = format!("`{name}` needs {need} premise(s), {have} given");
            self.report(UnprovedPremise, path, msg).detail.extend(missing);
        } else if have > need {
            self.wrong(path, node, format!("`{name}` takes {need} premise(s), {have} given"));
        }
        for (i, ((label, premise), child)) in rule.premises.iter().zip(&node.children).enumerate() {
            let expected = subst.apply(premise);
            if !alpha_eq(&expected, &child.conclusion) {
                self.wrong(
                    path,
                    node,
                    format!("premise {} ({label}) should be {expected}, found {}", i + 1, child.conclusion),
                );
            }
        }
        let expected = subst.apply(&rule.conclusion);
        if !alpha_eq(&expected, &node.conclusion) {
            self.wrong(path, node, format!("`{name}` instantiates to {expected}"));
        }
    }
}

/// The substitution described by a Lemma node's annotations.
fn instantiation(rule: &DerivedRule, node: &ProofNode) -> Result<Substitution, String> {
    let statement: Vec<&Formula> =
        rule.premises.iter().map(|(_, f)| f).chain([&rule.conclusion]).collect();
    let mut free: BTreeSet<String> = BTreeSet::new();
    let mut preds: BTreeMap<String, usize> = BTreeMap::new();
    for f in &statement {
        free.extend(f.free_vars());
        preds.extend(f.predicates());
    }
    let mut subst = Substitution::new();
    for inst in &node.instances {
        let target = &inst.target;
        if subst.terms.contains_key(target) || subst.predicates.contains_key(target) {
            return Err(format!("`{target}` is instantiated twice"));
        }
        let arity = preds.get(target).copied();
        let wants_predicate = inst.params.is_some() || arity == Some(0) || !free.contains(target);
        if wants_predicate {
            let params = inst.params.clone().unwrap_or_default();
            match arity {
                Some(n) if n == params.len() && !rule.rigid.contains(target) => {
                    let body = inst.value.as_formula();
                    subst.predicates.insert(target.clone(), Schema::new(params, body));
                }
                Some(n) if n == params.len() => {
                    return Err(format!("`{target}` has a fixed meaning in `{}`", rule.name))
                }
                Some(n) => return Err(format!("`{target}` takes {n} argument(s)")),
                None => return Err(instance_target_error(&rule.name, target)),
            }
        } else {
            match &inst.value {
                InstanceValue::Term(t) => {
                    subst.terms.insert(target.clone(), t.clone());
                }
                InstanceValue::Formula(f) => {
                    return Err(format!("`{target}` is a term variable; {f} is a formula"))
                }
            }
        }
    }
    Ok(subst)
}
