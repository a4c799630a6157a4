//! Antitone consequence operators over defeasible theories, their
//! alternating fixpoints, and the stable sets they induce.
//!
//! Two operators are provided. The **alpha** operator ([`alpha`])
//! propagates ambiguity and is defined only for theories without
//! defeaters and with an empty priority relation; on such theories it
//! coincides with the Gelfond–Lifschitz operator of the theory's
//! program translation. The **beta** operator ([`beta`]) blocks
//! ambiguity and is defined for every theory; its alternating fixpoint
//! computes the ambiguity-blocking well-founded model.
//!
//! Both operators are antitone, so their squares are monotone and the
//! sequence `X(0) = {}`, `X(n+1) = op(op(X(n)))` grows to a least
//! fixpoint ([`x_limit`]). Sets `S` with `op(S) = S` are the operator's
//! stable sets ([`stable_sets`]), the defeasible-theory counterpart of
//! stable models.

use std::collections::BTreeSet;

use crate::error::EngineError;
use crate::syntax::{DLRule, DefeasibleTheory, Interpretation, Literal, RuleKind};

/// Selects one of the two antitone operators.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum OperatorKind {
    /// The ambiguity-propagating operator; requires no defeaters and an
    /// empty priority relation.
    Alpha,
    /// The ambiguity-blocking operator; defined for every theory.
    Beta,
}

impl OperatorKind {
    /// Applies the selected operator to `assumed`.
    pub fn apply(
        self,
        theory: &DefeasibleTheory,
        assumed: &BTreeSet<Literal>,
    ) -> Result<BTreeSet<Literal>, EngineError> {
        match self {
            OperatorKind::Alpha => alpha(theory, assumed),
            OperatorKind::Beta => Ok(beta(theory, assumed)),
        }
    }
}

impl std::fmt::Display for OperatorKind {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            OperatorKind::Alpha => write!(f, "alpha"),
            OperatorKind::Beta => write!(f, "beta"),
        }
    }
}

fn check_alpha_preconditions(theory: &DefeasibleTheory) -> Result<(), EngineError> {
    if theory.has_defeaters() {
        return Err(EngineError::DefeatersPresent {
            context: "the alpha operator",
        });
    }
    if theory.has_priorities() {
        return Err(EngineError::PrioritiesPresent {
            context: "the alpha operator",
        });
    }
    Ok(())
}

/// The alpha reduct of `theory` wrt `assumed`: all strict rules,
/// together with every defeasible rule whose head retains, in each of
/// its conflict sets, some rival literal outside `assumed`.
///
/// Defined only for theories without defeaters and with an empty
/// priority relation.
pub fn alpha_reduct(
    theory: &DefeasibleTheory,
    assumed: &BTreeSet<Literal>,
) -> Result<Vec<DLRule>, EngineError> {
    check_alpha_preconditions(theory)?;
    Ok(theory
        .rules()
        .iter()
        .filter(|rule| match rule.kind {
            RuleKind::Strict => true,
            RuleKind::Defeasible => theory.conflicts_for(&rule.head).iter().all(|set| {
                set.iter()
                    .any(|rival| *rival != rule.head && !assumed.contains(rival))
            }),
            RuleKind::Defeater => unreachable!("defeaters rejected above"),
        })
        .cloned()
        .collect())
}

/// The beta reduct of `theory` wrt `assumed`: all strict rules,
/// together with every defeasible rule `r` such that each conflict set
/// of `head(r)` has some rival literal all of whose rules either have a
/// body not included in `assumed` or are inferior to `r`.
///
/// Defeaters never enter the reduct, but they do count among a rival
/// literal's rules. Defined for every theory.
pub fn beta_reduct(theory: &DefeasibleTheory, assumed: &BTreeSet<Literal>) -> Vec<DLRule> {
    theory
        .rules()
        .iter()
        .filter(|rule| match rule.kind {
            RuleKind::Strict => true,
            RuleKind::Defeater => false,
            RuleKind::Defeasible => theory.conflicts_for(&rule.head).iter().all(|set| {
                set.iter().any(|rival| {
                    *rival != rule.head
                        && theory.rules_for(rival).all(|challenger| {
                            !challenger.body.is_subset(assumed)
                                || theory.is_inferior(&challenger.id, &rule.id)
                        })
                })
            }),
        })
        .cloned()
        .collect()
}

/// The closure of a set of strict and defeasible rules: the least set
/// of literals closed under every rule, read as a plain inference rule.
///
/// Defeaters cannot be closed over (their heads are never detached);
/// passing one is an error.
pub fn rule_closure(rules: &[DLRule]) -> Result<BTreeSet<Literal>, EngineError> {
    if rules.iter().any(|r| r.kind == RuleKind::Defeater) {
        return Err(EngineError::DefeatersPresent {
            context: "rule closure",
        });
    }
    let mut derived: BTreeSet<Literal> = BTreeSet::new();
    loop {
        let step: BTreeSet<Literal> = rules
            .iter()
            .filter(|rule| rule.body.is_subset(&derived))
            .map(|rule| rule.head.clone())
            .collect();
        if step == derived {
            return Ok(derived);
        }
        derived = step;
    }
}

/// The ambiguity-propagating operator: the closure of the alpha reduct.
pub fn alpha(
    theory: &DefeasibleTheory,
    assumed: &BTreeSet<Literal>,
) -> Result<BTreeSet<Literal>, EngineError> {
    let reduct = alpha_reduct(theory, assumed)?;
    Ok(rule_closure(&reduct).expect("alpha reducts contain no defeaters"))
}

/// The ambiguity-blocking operator: the closure of the beta reduct.
pub fn beta(theory: &DefeasibleTheory, assumed: &BTreeSet<Literal>) -> BTreeSet<Literal> {
    rule_closure(&beta_reduct(theory, assumed)).expect("beta reducts contain no defeaters")
}

/// The increasing sequence of an operator's square and its limit.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct XLimit {
    /// The least fixpoint of the squared operator.
    pub limit: BTreeSet<Literal>,
    /// The sequence `X(0) ⊆ X(1) ⊆ …` up to and including the limit.
    pub trace: Vec<BTreeSet<Literal>>,
}

/// Iterates `X(0) = {}`, `X(n+1) = op(op(X(n)))` to its least fixpoint.
pub fn x_limit(theory: &DefeasibleTheory, op: OperatorKind) -> Result<XLimit, EngineError> {
    let mut trace = vec![BTreeSet::new()];
    loop {
        let last = trace.last().expect("trace starts nonempty");
        let next = op.apply(theory, &op.apply(theory, last)?)?;
        if next == *last {
            return Ok(XLimit {
                limit: next,
                trace,
            });
        }
        debug_assert!(last.is_subset(&next), "squared operator must be inflationary from the empty set");
        trace.push(next);
    }
}

/// The well-founded model computed through an antitone operator: true
/// literals are the limit of the squared iteration, false literals are
/// those outside one more application of the operator.
///
/// With [`OperatorKind::Beta`] this equals the ambiguity-blocking
/// well-founded model on every theory; with [`OperatorKind::Alpha`] it
/// characterizes the well-founded model of the theory's program
/// translation.
pub fn wfm_via_operator(
    theory: &DefeasibleTheory,
    op: OperatorKind,
) -> Result<Interpretation, EngineError> {
    let x = x_limit(theory, op)?;
    let outside = op.apply(theory, &x.limit)?;
    let unfounded: BTreeSet<Literal> = theory
        .literals()
        .iter()
        .filter(|l| !outside.contains(*l))
        .cloned()
        .collect();
    Ok(Interpretation::new(x.limit, unfounded))
}

/// [`wfm_via_operator`] specialized to the total beta operator.
pub fn wfm_beta(theory: &DefeasibleTheory) -> Interpretation {
    wfm_via_operator(theory, OperatorKind::Beta).expect("beta is defined for every theory")
}

/// All stable sets of the operator: subsets `S` of the theory's
/// literals with `op(S) = S`, found by exhaustive enumeration.
///
/// Fails with [`EngineError::CapExceeded`] when the literal universe
/// has more than `cap` members (the enumeration is exponential), and
/// propagates the alpha operator's precondition errors.
pub fn stable_sets(
    theory: &DefeasibleTheory,
    op: OperatorKind,
    cap: usize,
) -> Result<BTreeSet<BTreeSet<Literal>>, EngineError> {
    if let OperatorKind::Alpha = op {
        check_alpha_preconditions(theory)?;
    }
    let literals: Vec<Literal> = theory.literals().iter().cloned().collect();
    let n = literals.len();
    if n > cap.min(63) {
        return Err(EngineError::CapExceeded {
            what: "literal universe for stable-set enumeration",
            limit: cap.min(63),
            actual: n,
        });
    }
    let mut found = BTreeSet::new();
    for mask in 0u64..(1u64 << n) {
        let candidate: BTreeSet<Literal> = literals
            .iter()
            .enumerate()
            .filter(|(i, _)| mask & (1 << i) != 0)
            .map(|(_, l)| l.clone())
            .collect();
        if op.apply(theory, &candidate)? == candidate {
            found.insert(candidate);
        }
    }
    Ok(found)
}

/// Whether `p` belongs to every stable set of the operator (vacuously
/// true when there are none).
pub fn entails_stable(
    theory: &DefeasibleTheory,
    op: OperatorKind,
    p: &Literal,
    cap: usize,
) -> Result<bool, EngineError> {
    if !theory.contains_literal(p) {
        return Err(EngineError::UnknownLiteral(p.clone()));
    }
    Ok(stable_sets(theory, op, cap)?.iter().all(|s| s.contains(p)))
}

/// Whether `p` belongs to no stable set of the operator (vacuously true
/// when there are none).
pub fn refutes_stable(
    theory: &DefeasibleTheory,
    op: OperatorKind,
    p: &Literal,
    cap: usize,
) -> Result<bool, EngineError> {
    if !theory.contains_literal(p) {
        return Err(EngineError::UnknownLiteral(p.clone()));
    }
    Ok(stable_sets(theory, op, cap)?
        .iter()
        .all(|s| !s.contains(p)))
}
