//! Well-founded and stable semantics for ground normal logic programs.
//!
//! Literals are opaque symbols here: a classically negative literal
//! behaves like any other atom. The central notions are the immediate
//! consequence operator, greatest unfounded sets, their alternating
//! fixpoint (the well-founded model), and the Gelfond–Lifschitz reduct
//! with its `gamma` operator, which yields both an alternative
//! characterization of the well-founded model and the stable models.

use std::collections::BTreeSet;

use crate::error::EngineError;
use crate::syntax::{DefiniteProgram, Interpretation, LPRule, Literal, NormalProgram};

/// Heads of all rules whose positive body is derived and whose negated
/// body is refuted under `interp`.
pub fn immediate_consequences_lp(
    program: &NormalProgram,
    interp: &Interpretation,
) -> BTreeSet<Literal> {
    program
        .rules
        .iter()
        .filter(|rule| {
            rule.pos_body.is_subset(&interp.well_founded)
                && rule.neg_body.is_subset(&interp.unfounded)
        })
        .map(|rule| rule.head.clone())
        .collect()
}

/// Whether `candidate` is an unfounded set with respect to `interp`:
/// every rule for a member either needs a positive body literal that is
/// refuted or again in `candidate`, or needs a negated body literal that
/// is derived.
pub fn is_unfounded_set_lp(
    program: &NormalProgram,
    interp: &Interpretation,
    candidate: &BTreeSet<Literal>,
) -> bool {
    candidate.iter().all(|p| {
        program
            .rules
            .iter()
            .filter(|rule| rule.head == *p)
            .all(|rule| rule_blocked_lp(rule, interp, candidate))
    })
}

/// A rule is blocked when some positive body literal is refuted or in the
/// candidate set, or some negated body literal is derived.
fn rule_blocked_lp(rule: &LPRule, interp: &Interpretation, candidate: &BTreeSet<Literal>) -> bool {
    rule.pos_body
        .iter()
        .any(|q| interp.unfounded.contains(q) || candidate.contains(q))
        || rule.neg_body.iter().any(|q| interp.well_founded.contains(q))
}

/// The greatest unfounded set with respect to `interp`: the union of all
/// unfounded sets.
///
/// Computed by deleting, from the full literal universe, every literal
/// with a rule that the remaining set fails to block, until stable. The
/// blocking condition is monotone in the set, so deletion reaches the
/// greatest fixpoint.
pub fn greatest_unfounded_lp(
    program: &NormalProgram,
    interp: &Interpretation,
) -> BTreeSet<Literal> {
    let mut set = program.literals();
    loop {
        let retained: BTreeSet<Literal> = set
            .iter()
            .filter(|p| {
                program
                    .rules
                    .iter()
                    .filter(|rule| rule.head == **p)
                    .all(|rule| rule_blocked_lp(rule, interp, &set))
            })
            .cloned()
            .collect();
        if retained.len() == set.len() {
            debug_assert!(is_unfounded_set_lp(program, interp, &retained));
            return retained;
        }
        set = retained;
    }
}

/// The increasing sequence of interpretations whose limit is the
/// well-founded model: starting from ⟨∅, ∅⟩, each step pairs the
/// immediate consequences with the greatest unfounded set of its
/// predecessor. The returned trace ends at the fixpoint.
pub fn wfm_lp_trace(program: &NormalProgram) -> Vec<Interpretation> {
    let mut trace = vec![Interpretation::bottom()];
    loop {
        let prev = trace.last().expect("trace is never empty");
        let next = Interpretation {
            well_founded: immediate_consequences_lp(program, prev),
            unfounded: greatest_unfounded_lp(program, prev),
        };
        debug_assert!(prev.leq(&next), "well-founded iteration must grow");
        debug_assert!(next.is_coherent(), "well-founded iteration must stay coherent");
        if next == *prev {
            return trace;
        }
        trace.push(next);
    }
}

/// The well-founded model of `program`.
pub fn wfm_lp(program: &NormalProgram) -> Interpretation {
    wfm_lp_trace(program).pop().expect("trace is never empty")
}

/// The Gelfond–Lifschitz reduct of `program` with respect to `assumed`:
/// drop every rule with a negated body literal in `assumed`, then strip
/// all remaining default negation.
pub fn gl_reduct(program: &NormalProgram, assumed: &BTreeSet<Literal>) -> DefiniteProgram {
    DefiniteProgram::new_unchecked(
        program
            .rules
            .iter()
            .filter(|rule| rule.neg_body.is_disjoint(assumed))
            .map(|rule| LPRule::new(rule.head.clone(), rule.pos_body.iter().cloned(), []))
            .collect(),
    )
}

/// The least model of a definite program: iterate the immediate
/// consequence operator from the empty set to its least fixpoint.
pub fn definite_closure(program: &DefiniteProgram) -> BTreeSet<Literal> {
    let mut derived: BTreeSet<Literal> = BTreeSet::new();
    loop {
        let mut grew = false;
        for rule in program.rules() {
            if !derived.contains(&rule.head) && rule.pos_body.is_subset(&derived) {
                derived.insert(rule.head.clone());
                grew = true;
            }
        }
        if !grew {
            return derived;
        }
    }
}

/// The `gamma` operator: the least model of the Gelfond–Lifschitz reduct
/// with respect to `assumed`. Antitone in `assumed`.
pub fn gamma(program: &NormalProgram, assumed: &BTreeSet<Literal>) -> BTreeSet<Literal> {
    definite_closure(&gl_reduct(program, assumed))
}

/// The well-founded model computed through `gamma` alone: the derived
/// side is the least fixpoint of `gamma²` (reached from ∅), and the
/// refuted side is everything outside `gamma` of that fixpoint.
pub fn wfm_via_gamma(program: &NormalProgram) -> Interpretation {
    let mut derived: BTreeSet<Literal> = BTreeSet::new();
    loop {
        let next = gamma(program, &gamma(program, &derived));
        debug_assert!(derived.is_subset(&next), "gamma² iteration must grow");
        if next == derived {
            break;
        }
        derived = next;
    }
    let upper = gamma(program, &derived);
    let unfounded: BTreeSet<Literal> = program
        .literals()
        .into_iter()
        .filter(|l| !upper.contains(l))
        .collect();
    Interpretation {
        well_founded: derived,
        unfounded,
    }
}

/// All stable models of `program`: the fixpoints of `gamma`, found by
/// enumerating every subset of the program's literal universe.
///
/// Fails with [`EngineError::CapExceeded`] when the universe has more
/// than `cap` literals (and unconditionally beyond 63, the width of the
/// enumeration mask).
pub fn stable_models_lp(
    program: &NormalProgram,
    cap: usize,
) -> Result<BTreeSet<BTreeSet<Literal>>, EngineError> {
    let universe: Vec<Literal> = program.literals().into_iter().collect();
    if universe.len() > cap.min(63) {
        return Err(EngineError::CapExceeded {
            what: "stable-model enumeration universe",
            limit: cap.min(63),
            actual: universe.len(),
        });
    }
    let mut models = BTreeSet::new();
    for mask in 0u64..(1u64 << universe.len()) {
        let candidate: BTreeSet<Literal> = universe
            .iter()
            .enumerate()
            .filter(|(i, _)| mask & (1 << i) != 0)
            .map(|(_, l)| l.clone())
            .collect();
        if gamma(program, &candidate) == candidate {
            models.insert(candidate);
        }
    }
    Ok(models)
}
