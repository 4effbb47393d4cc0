use std::collections::{BTreeMap, BTreeSet};

use thiserror::Error;

use super::{alpha_eq, Formula, Schema, Term};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum DefinitionError {
    #[error("cyclic definition through `{0}`")]
    CyclicDefinition(String),
}

/// `name(params) := body`, a defined predicate symbol.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Definition {
    pub name: String,
    pub params: Vec<String>,
    pub body: Formula,
}

impl Definition {
    pub fn new(name: impl Into<String>, params: Vec<String>, body: Formula) -> Definition {
        Definition { name: name.into(), params, body }
    }

    /// The definiens at the given arguments.
    pub fn unfold(&self, args: &[Term]) -> Formula {
        Schema::new(self.params.clone(), self.body.clone()).instantiate(args)
    }

    /// Defined symbols mentioned in the body.
    pub fn dependencies<'a>(&self, defs: &'a Definitions) -> BTreeSet<&'a str> {
        self.body
            .predicates()
            .keys()
            .filter_map(|p| defs.get(p).map(|d| d.name.as_str()))
            .collect()
    }
}

/// Definitions indexed by name.
pub type Definitions = BTreeMap<String, Definition>;

/// Unfolds every defined predicate symbol, repeatedly, until none is left.
pub fn unfold_all(f: &Formula, defs: &Definitions) -> Result<Formula, DefinitionError> {
    unfold_in(f, defs, &mut Vec::new())
}

fn unfold_in(
    f: &Formula,
    defs: &Definitions,
    stack: &mut Vec<String>,
) -> Result<Formula, DefinitionError> {
    Ok(match f {
        Formula::Atom(p, args) => match defs.get(p) {
            Some(d) if d.params.len() == args.len() => {
                if stack.contains(p) {
                    return Err(DefinitionError::CyclicDefinition(p.clone()));
                }
                stack.push(p.clone());
                let out = unfold_in(&d.unfold(args), defs, stack)?;
                stack.pop();
                out
            }
            _ => f.clone(),
        },
        Formula::And(a, b) => Formula::and(unfold_in(a, defs, stack)?, unfold_in(b, defs, stack)?),
        Formula::Or(a, b) => Formula::or(unfold_in(a, defs, stack)?, unfold_in(b, defs, stack)?),
        Formula::Implies(a, b) => {
            Formula::implies(unfold_in(a, defs, stack)?, unfold_in(b, defs, stack)?)
        }
        Formula::Forall(x, body) => Formula::forall(x.clone(), unfold_in(body, defs, stack)?),
        Formula::Exists(x, body) => Formula::exists(x.clone(), unfold_in(body, defs, stack)?),
        Formula::Bottom | Formula::Equal(..) => f.clone(),
    })
}

/// Definitional equality: alpha-equivalence after unfolding all definitions.
pub fn defeq(f: &Formula, g: &Formula, defs: &Definitions) -> Result<bool, DefinitionError> {
    if alpha_eq(f, g) {
        return Ok(true);
    }
    Ok(alpha_eq(&unfold_all(f, defs)?, &unfold_all(g, defs)?))
}

/// First definition (in name order) that lies on a dependency cycle.
pub fn find_cycle(defs: &Definitions) -> Option<String> {
    #[derive(Clone, Copy, PartialEq)]
    enum Mark {
        Active,
        Done,
    }
    fn visit(name: &str, defs: &Definitions, marks: &mut BTreeMap<String, Mark>) -> bool {
        match marks.get(name) {
            Some(Mark::Active) => return true,
            Some(Mark::Done) => return false,
            None => {}
        }
        marks.insert(name.to_string(), Mark::Active);
        if let Some(d) = defs.get(name) {
            for dep in d.dependencies(defs) {
                if visit(dep, defs, marks) {
                    return true;
                }
            }
        }
        marks.insert(name.to_string(), Mark::Done);
        false
    }
    let mut marks = BTreeMap::new();
    defs.keys().find(|name| visit(name, defs, &mut marks)).cloned()
}
