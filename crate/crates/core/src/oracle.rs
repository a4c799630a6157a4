//! Brute-force reference implementations used to cross-check the
//! engine in tests.
//!
//! The greatest unfounded set is *defined* as the union of all
//! unfounded sets. The functions here compute it by enumerating every
//! subset of the literal universe and keeping those the definitional
//! membership check accepts — exponential, but an independent oracle
//! for the deletion-based algorithms used by the engine proper.

use std::collections::BTreeSet;

use crate::dl::LogicVariant;
use crate::error::EngineError;
use crate::syntax::{DefeasibleTheory, Interpretation, Literal, NormalProgram};

/// All subsets of `items`, in mask order. Exponential: callers keep
/// `items` small.
pub fn subsets_of(items: &BTreeSet<Literal>) -> Vec<BTreeSet<Literal>> {
    let items: Vec<&Literal> = items.iter().collect();
    assert!(items.len() <= 16, "oracle subset enumeration is exponential");
    (0u32..(1 << items.len()))
        .map(|mask| {
            items
                .iter()
                .enumerate()
                .filter(|(i, _)| mask & (1 << i) != 0)
                .map(|(_, l)| (*l).clone())
                .collect()
        })
        .collect()
}

/// The union of all unfounded sets of `program` wrt `interp`, found by
/// exhaustive enumeration.
pub fn brute_greatest_unfounded_lp(
    program: &NormalProgram,
    interp: &Interpretation,
) -> BTreeSet<Literal> {
    let mut union = BTreeSet::new();
    for candidate in subsets_of(&program.literals()) {
        if crate::lp::is_unfounded_set_lp(program, interp, &candidate) {
            union.extend(candidate);
        }
    }
    union
}

/// The union of all unfounded sets of `theory` wrt `interp` under
/// `variant`, found by exhaustive enumeration.
pub fn brute_greatest_unfounded_dl(
    theory: &DefeasibleTheory,
    interp: &Interpretation,
    variant: LogicVariant,
) -> Result<BTreeSet<Literal>, EngineError> {
    let mut union = BTreeSet::new();
    for candidate in subsets_of(theory.literals()) {
        if crate::dl::is_unfounded_set(theory, interp, &candidate, variant)? {
            union.extend(candidate);
        }
    }
    Ok(union)
}
