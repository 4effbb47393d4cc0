//! Natural deduction proofs written as explicit trees.
//!
//! A `.gpnd` document holds definitions, axioms and lemmas, each lemma with a
//! proof tree whose nodes name their rule and conclusion. The [`kernel`]
//! checks every node against its rule and reports each failure with the path
//! of the offending node; nothing else in the crate can make a proof count as
//! checked.
//!
//! Around the kernel:
//!
//! - [`syntax`]: terms and formulas with named binders, capture-avoiding
//!   substitution, alpha-equivalence and unfolding of definitions.
//! - [`proof_format`]: the document parser and printer.
//! - [`prelude`]: arithmetic, set and classical libraries loaded by default.
//! - [`curry_howard`]: lambda terms of propositional proofs and their
//!   normalization.
//! - [`search`]: a bounded intuitionistic prover for propositional goals.
//! - [`render`]: ASCII trees, LaTeX and prose.
//! - [`cli`]: the `gpnd` command.
//!
//! ```
//! use gpnd::kernel::{check_document, Mode};
//! use gpnd::proof_format::parse_document;
//!
//! let doc = parse_document(
//!     "lemma k : A -> B -> A proof
//!        (ImpI [a] : A -> B -> A (ImpI [b] : B -> A (Hyp a : A)))",
//! )
//! .unwrap();
//! assert!(check_document(&doc, Mode::Intuitionistic).accepted);
//! ```
//!
//! The `examples/` directory has one program per module: `syntax`, `check`,
//! `preludes`, `ancestor`, `curry_howard`, `search` and `render`.

pub mod syntax;
pub mod proof_format;
pub mod kernel;
pub mod prelude;
pub mod curry_howard;
pub mod search;
pub mod render;
pub mod cli;
