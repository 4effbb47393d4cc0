//! Terms, formulas, signatures and definitions.

mod definition;
mod formula;
mod print;
mod signature;
mod subst;
mod term;

pub use definition::{defeq, find_cycle, unfold_all, Definition, DefinitionError, Definitions};
pub use formula::{alpha_eq, fresh_name, Formula};
pub use print::{formula_to_string, term_to_string};
pub use signature::{ArityMismatch, Signature};
pub use subst::{substitute, Schema, Substitution};
pub use term::Term;

use std::collections::BTreeSet;

/// Free variables of a term or formula.
pub trait FreeVars {
    fn free_variables(&self) -> BTreeSet<String>;
}

impl FreeVars for Term {
    fn free_variables(&self) -> BTreeSet<String> {
        self.free_vars()
    }
}

impl FreeVars for Formula {
    fn free_variables(&self) -> BTreeSet<String> {
        self.free_vars()
    }
}

pub fn free_vars(e: &impl FreeVars) -> BTreeSet<String> {
    e.free_variables()
}
