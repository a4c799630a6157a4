//! Well-founded semantics for defeasible theories.
//!
//! Two rival readings of *team defeat* are supported, differing only in
//! when a competing rule counts as beating a defeasible rule whose head
//! it opposes:
//!
//! * [`LogicVariant::Ndl`] — a competitor beats the rule unless the
//!   priority relation makes the competitor strictly inferior;
//! * [`LogicVariant::Adl`] — a competitor beats the rule only when it is
//!   strict or strictly superior.
//!
//! NDL refutes more (it is "ambiguity blocking"), ADL keeps contested
//! chains ambiguous (it is "ambiguity propagating"). The *provability*
//! side — when a rule is an undefeated witness for its head — is shared
//! by both variants.
//!
//! Defeaters never impose conditions of their own and never prove
//! anything; they participate only as competitors that can block or
//! defeat other rules.

use std::collections::BTreeSet;
use std::fmt;

use crate::error::EngineError;
use crate::syntax::{DLRule, DefeasibleTheory, Interpretation, Literal, RuleKind};

/// The two readings of team defeat.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum LogicVariant {
    /// Ambiguity-blocking defeat: any not-inferior competitor defeats.
    Ndl,
    /// Ambiguity-propagating defeat: only strict or strictly superior
    /// competitors defeat.
    Adl,
}

impl fmt::Display for LogicVariant {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            LogicVariant::Ndl => write!(f, "NDL"),
            LogicVariant::Adl => write!(f, "ADL"),
        }
    }
}

/// Whether the competitor `challenger` counts as beating `rule` under
/// `variant` when both are applicable. `rule` is defeasible with head
/// opposed (through some conflict set) to the challenger's head.
pub(crate) fn beats(
    theory: &DefeasibleTheory,
    challenger: &DLRule,
    rule: &DLRule,
    variant: LogicVariant,
) -> bool {
    match variant {
        LogicVariant::Ndl => !theory.is_inferior(&challenger.id, &rule.id),
        LogicVariant::Adl => {
            challenger.kind == RuleKind::Strict || theory.is_inferior(&rule.id, &challenger.id)
        }
    }
}

/// Whether `rule` (defeasible) is defeated outright relative to the
/// derived side `derived`: some conflict set for its head has, for every
/// rival literal, a competitor rule whose body is already derived and
/// which beats `rule` under `variant`.
pub(crate) fn defeated_wrt(
    theory: &DefeasibleTheory,
    rule: &DLRule,
    derived: &BTreeSet<Literal>,
    variant: LogicVariant,
) -> bool {
    theory.conflicts_for(&rule.head).iter().any(|set| {
        set.iter().filter(|rival| **rival != rule.head).all(|rival| {
            theory
                .rules_for(rival)
                .any(|challenger| {
                    challenger.body.is_subset(derived) && beats(theory, challenger, rule, variant)
                })
        })
    })
}

/// Whether `rule` (defeasible) survives every conflict set for its head
/// relative to the refuted side `refuted`: each conflict set has a rival
/// literal all of whose rules are either strictly inferior to `rule` or
/// have a refuted body literal. This is the (variant-independent)
/// provability side of defeat.
pub(crate) fn witness_unblocked(
    theory: &DefeasibleTheory,
    rule: &DLRule,
    refuted: &BTreeSet<Literal>,
) -> bool {
    theory.conflicts_for(&rule.head).iter().all(|set| {
        set.iter().filter(|rival| **rival != rule.head).any(|rival| {
            theory.rules_for(rival).all(|challenger| {
                theory.is_inferior(&challenger.id, &rule.id)
                    || !challenger.body.is_disjoint(refuted)
            })
        })
    })
}

/// Whether `candidate` is an unfounded set with respect to `interp`
/// under `variant`.
///
/// Every member must have all of its strict rules blocked (some body
/// literal refuted or again in the candidate) and all of its defeasible
/// rules either blocked the same way or defeated per [`defeated_wrt`].
/// Defeaters impose no conditions.
///
/// Fails with [`EngineError::UnknownLiteral`] when `candidate` strays
/// outside the theory's literal universe.
pub fn is_unfounded_set(
    theory: &DefeasibleTheory,
    interp: &Interpretation,
    candidate: &BTreeSet<Literal>,
    variant: LogicVariant,
) -> Result<bool, EngineError> {
    if let Some(stray) = candidate.iter().find(|l| !theory.contains_literal(l)) {
        return Err(EngineError::UnknownLiteral(stray.clone()));
    }
    Ok(candidate
        .iter()
        .all(|p| member_unfounded(theory, interp, candidate, p, variant)))
}

fn member_unfounded(
    theory: &DefeasibleTheory,
    interp: &Interpretation,
    candidate: &BTreeSet<Literal>,
    p: &Literal,
    variant: LogicVariant,
) -> bool {
    let blocked = |rule: &DLRule| {
        rule.body
            .iter()
            .any(|q| interp.unfounded.contains(q) || candidate.contains(q))
    };
    theory.strict_rules_for(p).all(&blocked)
        && theory
            .defeasible_rules_for(p)
            .all(|rule| blocked(rule) || defeated_wrt(theory, rule, &interp.well_founded, variant))
}

/// The greatest unfounded set with respect to `interp` under `variant`:
/// the union of all unfounded sets.
///
/// Computed by deleting unsupported members from the full literal
/// universe until stable. Defeat status ([`defeated_wrt`]) depends only
/// on `interp`, so it is computed once per rule up front.
pub fn greatest_unfounded_dl(
    theory: &DefeasibleTheory,
    interp: &Interpretation,
    variant: LogicVariant,
) -> BTreeSet<Literal> {
    let defeated: Vec<bool> = theory
        .rules()
        .iter()
        .map(|rule| {
            rule.kind == RuleKind::Defeasible
                && defeated_wrt(theory, rule, &interp.well_founded, variant)
        })
        .collect();

    let mut set: BTreeSet<Literal> = theory.literals().clone();
    loop {
        let retained: BTreeSet<Literal> = set
            .iter()
            .filter(|p| {
                theory.rule_indices_for(p).iter().all(|&i| {
                    let rule = &theory.rules()[i];
                    match rule.kind {
                        RuleKind::Defeater => true,
                        RuleKind::Strict | RuleKind::Defeasible => {
                            rule.body
                                .iter()
                                .any(|q| interp.unfounded.contains(q) || set.contains(q))
                                || (rule.kind == RuleKind::Defeasible && defeated[i])
                        }
                    }
                })
            })
            .cloned()
            .collect();
        if retained.len() == set.len() {
            debug_assert!(matches!(
                is_unfounded_set(theory, interp, &retained, variant),
                Ok(true)
            ));
            return retained;
        }
        set = retained;
    }
}

/// Heads of all rules that are undefeated witnesses under `interp`:
/// strict rules with derived bodies, and defeasible rules with derived
/// bodies that survive every conflict set per [`witness_unblocked`].
///
/// The witness condition is the same in both variants; the parameter
/// only keeps the signature uniform with [`greatest_unfounded_dl`].
pub fn immediate_consequences_dl(
    theory: &DefeasibleTheory,
    interp: &Interpretation,
    _variant: LogicVariant,
) -> BTreeSet<Literal> {
    let mut derived = BTreeSet::new();
    for rule in theory.rules() {
        if !rule.body.is_subset(&interp.well_founded) {
            continue;
        }
        let witness = match rule.kind {
            RuleKind::Strict => true,
            RuleKind::Defeasible => witness_unblocked(theory, rule, &interp.unfounded),
            RuleKind::Defeater => false,
        };
        if witness {
            derived.insert(rule.head.clone());
        }
    }
    derived
}

/// The increasing sequence of interpretations whose limit is the
/// well-founded model under `variant`, starting from ⟨∅, ∅⟩. The trace
/// ends at the fixpoint.
pub fn wfm_dl_trace(theory: &DefeasibleTheory, variant: LogicVariant) -> Vec<Interpretation> {
    let mut trace = vec![Interpretation::bottom()];
    loop {
        let prev = trace.last().expect("trace is never empty");
        let next = Interpretation {
            well_founded: immediate_consequences_dl(theory, prev, variant),
            unfounded: greatest_unfounded_dl(theory, prev, variant),
        };
        debug_assert!(prev.leq(&next), "well-founded iteration must grow");
        debug_assert!(next.is_coherent(), "well-founded iteration must stay coherent");
        if next == *prev {
            return trace;
        }
        trace.push(next);
    }
}

/// The well-founded model of `theory` under `variant`.
pub fn wfm_dl(theory: &DefeasibleTheory, variant: LogicVariant) -> Interpretation {
    wfm_dl_trace(theory, variant)
        .pop()
        .expect("trace is never empty")
}

/// Whether `p` is derived in the well-founded model under `variant`.
///
/// Fails with [`EngineError::UnknownLiteral`] if `p` is not in the
/// theory's literal universe.
pub fn entails(
    theory: &DefeasibleTheory,
    variant: LogicVariant,
    p: &Literal,
) -> Result<bool, EngineError> {
    if !theory.contains_literal(p) {
        return Err(EngineError::UnknownLiteral(p.clone()));
    }
    Ok(wfm_dl(theory, variant).well_founded.contains(p))
}

/// Whether `p` is refuted (unfounded) in the well-founded model under
/// `variant`.
///
/// Fails with [`EngineError::UnknownLiteral`] if `p` is not in the
/// theory's literal universe.
pub fn refutes(
    theory: &DefeasibleTheory,
    variant: LogicVariant,
    p: &Literal,
) -> Result<bool, EngineError> {
    if !theory.contains_literal(p) {
        return Err(EngineError::UnknownLiteral(p.clone()));
    }
    Ok(wfm_dl(theory, variant).unfounded.contains(p))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::corpus::fixtures;

    fn lit(s: &str) -> Literal {
        s.parse().unwrap()
    }

    fn lits(items: &[&str]) -> BTreeSet<Literal> {
        items.iter().map(|s| lit(s)).collect()
    }

    #[test]
    fn ambiguous_presumptions_ndl_blocks_and_adl_propagates() {
        let theory = fixtures::ambiguity();
        assert_eq!(
            wfm_dl(&theory, LogicVariant::Ndl),
            Interpretation::new(lits(&["q"]), lits(&["p", "-p", "-q"]))
        );
        assert_eq!(wfm_dl(&theory, LogicVariant::Adl), Interpretation::bottom());
    }

    #[test]
    fn ambiguity_fixture_immediate_consequences_from_refutations() {
        let theory = fixtures::ambiguity();
        let interp = Interpretation::new([], lits(&["p", "-p", "-q"]));
        assert_eq!(
            immediate_consequences_dl(&theory, &interp, LogicVariant::Ndl),
            lits(&["q"])
        );
    }

    #[test]
    fn strict_fact_fixture_separates_the_variants() {
        let theory = fixtures::strict_fact();
        assert_eq!(
            wfm_dl(&theory, LogicVariant::Ndl),
            Interpretation::new(lits(&["p"]), lits(&["-p", "q", "-q"]))
        );
        assert_eq!(
            wfm_dl(&theory, LogicVariant::Adl),
            Interpretation::new(lits(&["p"]), lits(&["-p", "-q"]))
        );
    }

    #[test]
    fn nixon_diamond_keeps_only_the_strict_core() {
        let theory = fixtures::nixon();
        let core = lits(&["nixon", "republican", "quaker"]);
        let ndl = wfm_dl(&theory, LogicVariant::Ndl);
        assert_eq!(ndl.well_founded, core);
        let everything_else: BTreeSet<Literal> = theory
            .literals()
            .iter()
            .filter(|l| !core.contains(l))
            .cloned()
            .collect();
        assert_eq!(ndl.unfounded, everything_else);

        let adl = wfm_dl(&theory, LogicVariant::Adl);
        assert_eq!(adl.well_founded, core);
        assert_eq!(
            adl.unfounded,
            lits(&["-nixon", "-republican", "-quaker", "-extremist"])
        );
    }

    #[test]
    fn bachelor_fixture_is_refuted_in_ndl_and_ambiguous_in_adl() {
        let theory = fixtures::bachelor();
        assert!(refutes(&theory, LogicVariant::Ndl, &lit("married")).unwrap());
        assert!(!entails(&theory, LogicVariant::Ndl, &lit("married")).unwrap());
        assert!(!refutes(&theory, LogicVariant::Adl, &lit("married")).unwrap());
        assert!(!entails(&theory, LogicVariant::Adl, &lit("married")).unwrap());
        assert_eq!(
            wfm_dl(&theory, LogicVariant::Adl),
            Interpretation::new([], lits(&["-married"]))
        );
    }

    #[test]
    fn contradictory_facts_stay_derived_in_both_variants() {
        let theory = fixtures::contradiction();
        for variant in [LogicVariant::Ndl, LogicVariant::Adl] {
            let model = wfm_dl(&theory, variant);
            assert_eq!(model.well_founded, lits(&["p", "-p"]));
            assert_eq!(
                model.unfounded,
                lits(&["q", "-q", "r", "-r", "s", "-s", "t", "-t"])
            );
        }
    }

    #[test]
    fn defeater_blocks_in_ndl_but_only_muddies_in_adl() {
        // f is presumed; a defeater argues for -f. In NDL the defeater
        // defeats the presumption (f refuted); in ADL the defeater is
        // neither strict nor superior, so f stays ambiguous. The
        // defeater itself never proves -f.
        let theory = DefeasibleTheory::new(
            vec![
                DLRule::new("t", RuleKind::Defeasible, [], lit("f")),
                DLRule::new("r", RuleKind::Defeater, [], lit("-f")),
            ],
            [],
            [],
        );
        let ndl = wfm_dl(&theory, LogicVariant::Ndl);
        assert_eq!(ndl, Interpretation::new([], lits(&["f", "-f"])));
        let adl = wfm_dl(&theory, LogicVariant::Adl);
        assert_eq!(adl, Interpretation::new([], lits(&["-f"])));
    }

    #[test]
    fn priorities_resolve_rival_presumptions() {
        // p and -p presumed, but the -p presumption is inferior.
        let theory = DefeasibleTheory::new(
            vec![
                DLRule::new("r", RuleKind::Defeasible, [], lit("p")),
                DLRule::new("s", RuleKind::Defeasible, [], lit("-p")),
            ],
            [],
            [("s".to_string(), "r".to_string())],
        );
        for variant in [LogicVariant::Ndl, LogicVariant::Adl] {
            assert_eq!(
                wfm_dl(&theory, variant),
                Interpretation::new(lits(&["p"]), lits(&["-p"])),
                "variant {variant}"
            );
        }
    }

    #[test]
    fn unfounded_set_check_rejects_stray_literals() {
        let theory = fixtures::ambiguity();
        let err = is_unfounded_set(
            &theory,
            &Interpretation::bottom(),
            &lits(&["zz"]),
            LogicVariant::Ndl,
        )
        .unwrap_err();
        assert_eq!(err, EngineError::UnknownLiteral(lit("zz")));
    }

    #[test]
    fn unknown_literal_queries_error() {
        let theory = fixtures::ambiguity();
        assert!(entails(&theory, LogicVariant::Ndl, &lit("zz")).is_err());
        assert!(refutes(&theory, LogicVariant::Adl, &lit("zz")).is_err());
    }
}
