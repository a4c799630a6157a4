//! Error type shared by the engine's fallible operations.

use thiserror::Error;

use crate::syntax::Literal;

/// Errors surfaced by semantic operations, translations, and proof search.
///
/// Structural problems with a theory (priority cycles, duplicate rule ids,
/// …) are *not* errors of this type: they are reported as
/// [`crate::syntax::Violation`] values by [`crate::syntax::validate_theory`],
/// so callers can list every problem at once.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum EngineError {
    /// A literal was supplied that does not occur in the theory at hand.
    #[error("literal `{0}` does not occur in the theory")]
    UnknownLiteral(Literal),

    /// An operation that is only defined for defeater-free theories was
    /// applied to a theory (or rule set) containing defeaters.
    #[error("{context} is undefined in the presence of defeater rules")]
    DefeatersPresent {
        /// The operation that rejected the input.
        context: &'static str,
    },

    /// An operation that is only defined for theories with an empty
    /// priority relation was applied to a prioritized theory.
    #[error("{context} is undefined for theories with a non-empty priority relation")]
    PrioritiesPresent {
        /// The operation that rejected the input.
        context: &'static str,
    },

    /// A program containing default negation was passed where a definite
    /// program is required.
    #[error("program is not definite: the rule for `{head}` has default-negated body literals")]
    NotDefinite {
        /// Head of the offending rule.
        head: Literal,
    },

    /// An enumeration or product grew beyond the configured cap.
    #[error("{what} exceeds the cap of {limit} (needs {actual})")]
    CapExceeded {
        /// What was being enumerated.
        what: &'static str,
        /// The configured cap.
        limit: usize,
        /// The size actually required.
        actual: usize,
    },

    /// A construction needed a fresh atom whose name is already taken.
    #[error("fresh atom `{atom}` collides with an existing atom")]
    AtomCollision {
        /// The colliding name.
        atom: String,
    },

    /// A construction needed a fresh rule id whose name is already taken,
    /// or the input's rule ids are not unique to begin with.
    #[error("rule id `{id}` collides with an existing rule id")]
    RuleIdCollision {
        /// The colliding id.
        id: String,
    },

    /// Proof search used up its node budget before reaching a verdict.
    ///
    /// This is deliberately distinct from "no proof exists": the search is
    /// complete, so a `None` result is definitive, while this error only
    /// says the search was cut short.
    #[error("proof search exhausted its node budget of {budget}")]
    BudgetExhausted {
        /// The budget that was exhausted.
        budget: u64,
    },
}
