//! Ground nonmonotonic reasoning over two closely related formalisms.
//!
//! The crate computes **well-founded models** of ground normal logic
//! programs and of ground defeasible theories, and everything needed to
//! move between the two views:
//!
//! * [`syntax`] — literals, rules, programs, theories, interpretations,
//!   and structural validation.
//! * [`lp`] — the well-founded semantics of normal logic programs
//!   (immediate consequences, greatest unfounded sets, the
//!   Gelfond–Lifschitz reduct with its `gamma` operator, and stable-model
//!   enumeration).
//! * [`dl`] — the well-founded semantics of defeasible theories under the
//!   two rival readings of team defeat ([`dl::LogicVariant::Ndl`] and
//!   [`dl::LogicVariant::Adl`]).
//! * [`transform`] — conflict-set closure, the defeasible-theory →
//!   logic-program translation and its converse, the explicit (signed)
//!   version of a program, and compilation away of defeaters and
//!   priorities.
//! * [`operators`] — the reduct-based `alpha`/`beta` consequence
//!   operators, their squared-iteration fixpoints, and stable sets.
//! * [`proof`] — argument trees: goal-directed proof search and a
//!   standalone tree validator with per-node diagnostics.
//! * [`text`] — plain-text formats for theories (`.dfl`) and programs
//!   (`.lp`), with parsing and deterministic rendering.
//! * [`corpus`] — seeded random generators used by the differential test
//!   suites and the CLI's exploratory scanner.
//! * [`oracle`] — deliberately naive reference implementations (subset
//!   enumeration) that the fast algorithms are tested against.
//!
//! All semantics here are *ground*: atoms are opaque propositional
//! symbols. A classically negated literal `-p` is a first-class citizen —
//! the logic-program side treats it as just another symbol, while the
//! defeasible side pairs it with `p` through conflict sets.

#![warn(missing_docs)]

pub mod corpus;
pub mod dl;
pub mod error;
pub mod lp;
pub mod operators;
pub mod oracle;
pub mod proof;
pub mod syntax;
pub mod text;
pub mod transform;

pub use dl::LogicVariant;
pub use error::EngineError;
pub use syntax::{
    validate_theory, DLRule, DefeasibleTheory, DefiniteProgram, Interpretation, LPRule, Literal,
    NormalProgram, RuleKind, Violation,
};
