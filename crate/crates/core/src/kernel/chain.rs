use crate::proof_format::{ChainStep, Instantiation, Justification, ProofNode, Rule};
use crate::syntax::{substitute, Formula, Term};

use super::equality::replaces_term;
use super::{Context, Diagnostic, DiagnosticClass, Environment};

fn wrong(msg: String) -> Diagnostic {
    Diagnostic::new(DiagnosticClass::WrongRuleApplication, &[], msg)
}

fn eq(a: &Term, b: &Term) -> Formula {
    Formula::Equal(a.clone(), b.clone())
}

/// Rewrites an equational block into EqI / EqE steps over the proofs named by
/// its justifications. The result concludes `t0 = tn` and contains no Chain.
pub fn elaborate_chain(
    chain: &ProofNode,
    ctx: &Context,
    env: &Environment,
) -> Result<ProofNode, Diagnostic> {
    if chain.rule != Rule::Chain || chain.steps.is_empty() {
        return Err(wrong("an equational block needs at least one step".into()));
    }
    for (i, pair) in chain.steps.windows(2).enumerate() {
        if pair[0].rhs != pair[1].lhs {
            return Err(Diagnostic::new(
                DiagnosticClass::ChainBreak,
                &[],
                format!(
                    "step {} ends at {} but step {} starts from {}",
                    i + 1,
                    pair[0].rhs,
                    i + 2,
                    pair[1].lhs
                ),
            )
            .with_detail([pair[0].rhs.to_string(), pair[1].lhs.to_string()]));
        }
    }
    let t0 = &chain.steps[0].lhs;
    let tn = &chain.steps[chain.steps.len() - 1].rhs;
    if chain.conclusion != eq(t0, tn) {
        return Err(wrong(format!(
            "the steps prove {} but the block states {}",
            eq(t0, tn),
            chain.conclusion
        )));
    }
    let mut acc = ProofNode::new(Rule::EqI, eq(t0, t0), Vec::new());
    for (i, step) in chain.steps.iter().enumerate() {
        acc = extend(acc, t0, step, i + 1, ctx, env)?;
    }
    Ok(acc)
}

fn extend(
    acc: ProofNode,
    t0: &Term,
    step: &ChainStep,
    index: usize,
    ctx: &Context,
    env: &Environment,
) -> Result<ProofNode, Diagnostic> {
    let (l, r) = (&step.lhs, &step.rhs);
    let (name, instances) = match &step.justification {
        Justification::Refl if l == r => return Ok(acc),
        Justification::Refl => {
            return Err(wrong(format!("step {index}: {l} = {r} is not an instance of EqI")))
        }
        Justification::Named { name, instances } => (name, instances),
    };
    let (proof, u, v) = justify(name, instances, ctx, env)
        .map_err(|d| Diagnostic { message: format!("step {index}: {}", d.message), ..d })?;
    let rewrite = if replaces_term(l, r, &u, &v) {
        proof
    } else if replaces_term(l, r, &v, &u) {
        let refl = ProofNode::new(Rule::EqI, eq(&u, &u), Vec::new());
        ProofNode::new(Rule::EqE, eq(&v, &u), vec![proof, refl])
    } else {
        return Err(wrong(format!(
            "step {index}: {name} proves {} which does not rewrite {l} into {r}",
            eq(&u, &v)
        ))
        .with_detail([name.clone()]));
    };
    Ok(ProofNode::new(Rule::EqE, eq(t0, r), vec![rewrite, acc]))
}

/// Proof of the equation named by a justification, with its two sides.
fn justify(
    name: &str,
    instances: &[(String, Term)],
    ctx: &Context,
    env: &Environment,
) -> Result<(ProofNode, Term, Term), Diagnostic> {
    let mut node = if let Some(f) = ctx.get(name) {
        ProofNode::hyp(name, f.clone())
    } else if let Some(rule) = env.rules.get(name) {
        if !rule.premises.is_empty() {
            return Err(wrong(format!("`{name}` has premises and cannot justify a step"))
                .with_detail([name]));
        }
        ProofNode::new(Rule::Lemma, rule.conclusion.clone(), Vec::new()).with_reference(name)
    } else {
        return Err(Diagnostic::new(
            DiagnosticClass::UnknownHypothesis,
            &[],
            format!("`{name}` is neither an available hypothesis nor a proved statement"),
        )
        .with_detail([name]));
    };
    node = unfold(node, env);
    for (x, t) in instances {
        let body = match &node.conclusion {
            Formula::Forall(y, body) if y == x => substitute(body, x, t),
            other => {
                return Err(wrong(format!("cannot instantiate {x} in {other}")).with_detail([name]))
            }
        };
        node = ProofNode::new(Rule::AllE, body, vec![node]).with_instance(Instantiation::term(x, t.clone()));
        node = unfold(node, env);
    }
    match node.conclusion.clone() {
        Formula::Equal(u, v) => Ok((node, u, v)),
        other => Err(wrong(format!("`{name}` proves {other}, which is not an equation"))
            .with_detail([name])),
    }
}

/// Conversion steps unfolding a defined atom at the top of the conclusion.
fn unfold(mut node: ProofNode, env: &Environment) -> ProofNode {
    loop {
        let Formula::Atom(p, args) = &node.conclusion else { return node };
        let Some(def) = env.definitions.get(p) else { return node };
        if def.params.len() != args.len() {
            return node;
        }
        let body = def.unfold(args);
        let name = p.clone();
        node = ProofNode::new(Rule::Conv, body, vec![node]).with_reference(name);
    }
}
