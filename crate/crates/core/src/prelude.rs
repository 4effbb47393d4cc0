//! Checked standard theories loaded before user documents: Peano arithmetic
//! with strong induction, naive set theory, and the classical principles.

use std::path::PathBuf;

use thiserror::Error;

use crate::kernel::{Diagnostic, Environment, Mode};
use crate::proof_format::{parse_document, ParseError};

/// Environment variable naming a directory that replaces the built-in files.
pub const PRELUDE_DIR_VAR: &str = "GPND_PRELUDE_DIR";

pub const PRELUDE_FILES: [&str; 3] = ["arith.gpnd", "sets.gpnd", "classical.gpnd"];

const BUILTIN: [&str; 3] = [
    include_str!("../prelude/arith.gpnd"),
    include_str!("../prelude/sets.gpnd"),
    include_str!("../prelude/classical.gpnd"),
];

#[derive(Debug, Error)]
pub enum PreludeError {
    #[error("cannot read prelude {file}: {source}")]
    Io { file: String, source: std::io::Error },
    #[error("prelude {file}: {error}")]
    Parse { file: String, error: ParseError },
    #[error("prelude {file} is rejected:\n{}", join_lines(.diagnostics))]
    Rejected { file: String, diagnostics: Vec<Diagnostic> },
}

fn join_lines(diags: &[Diagnostic]) -> String {
    diags.iter().map(|d| d.to_string()).collect::<Vec<_>>().join("\n")
}

/// `(file name, source)` of each prelude, honouring [`PRELUDE_DIR_VAR`].
pub fn prelude_sources() -> Result<Vec<(String, String)>, PreludeError> {
    match std::env::var_os(PRELUDE_DIR_VAR) {
        Some(dir) => PRELUDE_FILES
            .iter()
            .map(|f| {
                let path = PathBuf::from(&dir).join(f);
                std::fs::read_to_string(&path)
                    .map(|src| (f.to_string(), src))
                    .map_err(|source| PreludeError::Io { file: path.display().to_string(), source })
            })
            .collect(),
        None => Ok(PRELUDE_FILES
            .iter()
            .zip(BUILTIN)
            .map(|(f, src)| (f.to_string(), src.to_string()))
            .collect()),
    }
}

/// An environment holding every prelude. Preludes are checked in classical
/// mode; their classical lemmas stay marked as such.
pub fn load_preludes() -> Result<Environment, PreludeError> {
    let mut env = Environment::new();
    for (file, src) in prelude_sources()? {
        let doc = parse_document(&src).map_err(|error| PreludeError::Parse { file: file.clone(), error })?;
        let report = env.load(&doc, Mode::Classical);
        if !report.accepted {
            return Err(PreludeError::Rejected { file, diagnostics: report.diagnostics });
        }
    }
    Ok(env)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn builtin_preludes_check() {
        let env = load_preludes().unwrap_or_else(|e| panic!("{e}"));
        for name in ["strong_induction", "ext_intro", "union_elim", "pem_by_nne"] {
            assert!(env.rule(name).is_some(), "{name}");
        }
        assert!(env.rule("pem_by_nne").unwrap().classical);
        assert!(!env.rule("strong_induction").unwrap().classical);
    }
}
