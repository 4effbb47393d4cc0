use std::collections::BTreeMap;

/// Arities of the function and predicate symbols used in one document.
/// Arities are fixed at first use.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Signature {
    pub functions: BTreeMap<String, usize>,
    pub predicates: BTreeMap<String, usize>,
    pub has_nat: bool,
}

/// A symbol used at two different arities.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ArityMismatch {
    pub symbol: String,
    pub expected: usize,
    pub found: usize,
}

impl Signature {
    pub fn new() -> Signature {
        Signature::default()
    }

    pub fn declare_function(&mut self, name: &str, arity: usize) -> Result<(), ArityMismatch> {
        declare(&mut self.functions, name, arity)?;
        self.has_nat = self.functions.get("0") == Some(&0) && self.functions.get("S") == Some(&1);
        Ok(())
    }

    pub fn declare_predicate(&mut self, name: &str, arity: usize) -> Result<(), ArityMismatch> {
        declare(&mut self.predicates, name, arity)
    }
}

fn declare(
    table: &mut BTreeMap<String, usize>,
    name: &str,
    arity: usize,
) -> Result<(), ArityMismatch> {
    match table.get(name) {
        Some(&expected) if expected != arity => Err(ArityMismatch {
            symbol: name.to_string(),
            expected,
            found: arity,
        }),
        Some(_) => Ok(()),
        None => {
            table.insert(name.to_string(), arity);
            Ok(())
        }
    }
}
