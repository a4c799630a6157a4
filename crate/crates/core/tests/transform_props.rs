//! Property tests for the translations: soundness and completeness of
//! the theory-to-program translation, the explicit-version laws, the
//! program-to-theory translation, the round trip between them, conflict
//! closure laws, and the defeater/priority elimination's equivalence.

use std::collections::BTreeSet;

use proptest::prelude::*;
use wellfound::corpus::{random_program, random_theory, ProgramConfig, TheoryConfig};
use wellfound::dl::wfm_dl;
use wellfound::lp::wfm_lp;
use wellfound::transform::{
    close_conflicts, dl_to_lp, eliminate_defeaters_priorities, explicit_version, lp_to_dl,
};
use wellfound::{DefeasibleTheory, Interpretation, Literal, LogicVariant, NormalProgram};

/// The program's well-founded model, extended to `universe`: literals
/// the program never mentions have no rules, so they are unfounded.
fn lp_wfm_on(universe: &BTreeSet<Literal>, program: &NormalProgram) -> Interpretation {
    let mut wfm = wfm_lp(program);
    let known = program.literals();
    for l in universe {
        if !known.contains(l) {
            wfm.unfounded.insert(l.clone());
        }
    }
    wfm
}

/// `interp` restricted to `universe` on both sides.
fn restrict(interp: &Interpretation, universe: &BTreeSet<Literal>) -> Interpretation {
    Interpretation::new(
        interp.well_founded.intersection(universe).cloned(),
        interp.unfounded.intersection(universe).cloned(),
    )
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(96))]

    /// Soundness of the translation, for theories without defeaters or
    /// priorities but with arbitrary (finite) conflict sets: whatever
    /// ambiguity propagation decides, the translated program's
    /// well-founded semantics decides the same way.
    #[test]
    fn translation_is_sound(seed in any::<u64>()) {
        let theory = random_theory(&TheoryConfig::plain_with_conflicts(5), seed);
        let program = dl_to_lp(&theory).expect("no defeaters or priorities");
        let theirs = wfm_dl(&theory, LogicVariant::Adl);
        let ours = lp_wfm_on(theory.literals(), &program);
        prop_assert!(theirs.well_founded.is_subset(&ours.well_founded));
        prop_assert!(theirs.unfounded.is_subset(&ours.unfounded));
    }

    /// Completeness: with only minimal conflict sets the translation is
    /// exact — the two well-founded models coincide over the theory's
    /// literals.
    #[test]
    fn translation_is_complete_for_minimal_conflicts(seed in any::<u64>()) {
        let theory = random_theory(&TheoryConfig::plain(5), seed);
        let program = dl_to_lp(&theory).expect("no defeaters or priorities");
        prop_assert_eq!(
            wfm_dl(&theory, LogicVariant::Adl),
            lp_wfm_on(theory.literals(), &program)
        );
    }

    /// The explicit version decides each original atom exactly as the
    /// source program does, and decides each introduced complement
    /// oppositely to its atom.
    #[test]
    fn explicit_version_mirrors_the_program(seed in any::<u64>()) {
        let program = random_program(&ProgramConfig::positive(5), seed);
        let explicit = explicit_version(&program).expect("positive atoms");
        let original = wfm_lp(&program);
        let rewritten = wfm_lp(&explicit);
        for p in program.literals() {
            prop_assert_eq!(
                original.well_founded.contains(&p),
                rewritten.well_founded.contains(&p),
                "T side of {}", &p
            );
            prop_assert_eq!(
                original.unfounded.contains(&p),
                rewritten.unfounded.contains(&p),
                "F side of {}", &p
            );
            let c = p.complement();
            prop_assert_eq!(
                rewritten.well_founded.contains(&c),
                rewritten.unfounded.contains(&p),
                "derived {} vs refuted {}", &c, &p
            );
            prop_assert_eq!(
                rewritten.unfounded.contains(&c),
                rewritten.well_founded.contains(&p),
                "refuted {} vs derived {}", &c, &p
            );
        }
    }

    /// Reading a program as a defeasible theory preserves its
    /// well-founded decisions over the program's atoms, and decides the
    /// introduced complements oppositely — under ambiguity propagation.
    #[test]
    fn program_reading_mirrors_the_program(seed in any::<u64>()) {
        let program = random_program(&ProgramConfig::positive(5), seed);
        let theory = lp_to_dl(&program).expect("positive atoms");
        let original = wfm_lp(&program);
        let model = wfm_dl(&theory, LogicVariant::Adl);
        for p in program.literals() {
            prop_assert_eq!(
                original.well_founded.contains(&p),
                model.well_founded.contains(&p),
                "T side of {}", &p
            );
            prop_assert_eq!(
                original.unfounded.contains(&p),
                model.unfounded.contains(&p),
                "F side of {}", &p
            );
            let c = p.complement();
            prop_assert_eq!(
                model.well_founded.contains(&p),
                model.unfounded.contains(&c),
                "derived {} vs refuted {}", &p, &c
            );
            prop_assert_eq!(
                model.unfounded.contains(&p),
                model.well_founded.contains(&c),
                "refuted {} vs derived {}", &p, &c
            );
        }
    }

    /// Translating a program into a theory and back yields its explicit
    /// version, rule for rule.
    #[test]
    fn round_trip_lands_on_the_explicit_version(seed in any::<u64>()) {
        let program = random_program(&ProgramConfig::positive(5), seed);
        let theory = lp_to_dl(&program).expect("positive atoms");
        let back = dl_to_lp(&theory).expect("translation image is plain");
        let explicit = explicit_version(&program).expect("positive atoms");
        prop_assert_eq!(back.rule_set(), explicit.rule_set());
    }

    /// Closing the conflict sets under strict rules is a closure
    /// operator: extensive, idempotent, and monotone.
    #[test]
    fn conflict_closure_laws(seed in any::<u64>(), extra_mask in any::<u64>()) {
        let theory = random_theory(&TheoryConfig::full(5), seed);
        let closed = close_conflicts(&theory);
        prop_assert!(theory.conflicts().is_subset(closed.conflicts()));
        let twice = close_conflicts(&closed);
        prop_assert_eq!(twice.conflicts(), closed.conflicts());

        // Monotone: adding a conflict set never removes closure output.
        let extra: BTreeSet<Literal> = theory
            .literals()
            .iter()
            .enumerate()
            .filter(|(i, _)| extra_mask >> (i % 64) & 1 == 1)
            .take(3)
            .map(|(_, l)| l.clone())
            .collect();
        if extra.len() >= 2 {
            let bigger = DefeasibleTheory::new(
                theory.rules().to_vec(),
                theory.conflicts().iter().cloned().chain([extra]),
                theory.priority().iter().cloned(),
            );
            let bigger_closed = close_conflicts(&bigger);
            prop_assert!(closed.conflicts().is_subset(bigger_closed.conflicts()));
        }
    }

    /// Compiling away defeaters and priorities preserves both variants'
    /// decisions over the source theory's literals, and the compiled
    /// theory is structurally plain: no defeaters, no priorities, only
    /// minimal conflict sets.
    #[test]
    fn elimination_preserves_both_variants(seed in any::<u64>()) {
        let theory = random_theory(&TheoryConfig::full(4), seed);
        let compiled = eliminate_defeaters_priorities(&theory).expect("fresh names free");
        prop_assert!(!compiled.has_defeaters());
        prop_assert!(!compiled.has_priorities());
        for set in compiled.conflicts() {
            prop_assert_eq!(set.len(), 2);
            let mut it = set.iter();
            let first = it.next().unwrap();
            prop_assert_eq!(&first.complement(), it.next().unwrap());
        }
        prop_assert!(theory.literals().is_subset(compiled.literals()));
        for variant in [LogicVariant::Ndl, LogicVariant::Adl] {
            prop_assert_eq!(
                restrict(&wfm_dl(&compiled, variant), theory.literals()),
                wfm_dl(&theory, variant),
                "{}", variant
            );
        }
    }
}
