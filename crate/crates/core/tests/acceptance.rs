//! The acceptance gate: one test per shipping criterion, each printing
//! a `criterion N: PASS`/`criterion N: FAIL` line (visible with
//! `cargo test --test acceptance -- --nocapture`). All comparisons are
//! exact set equalities; the random sweeps are seeded and deterministic.

use std::collections::BTreeSet;
use std::panic::{catch_unwind, resume_unwind, UnwindSafe};

use wellfound::corpus::{
    chain_program, fixtures, random_program, random_theory, ProgramConfig, TheoryConfig,
};
use wellfound::dl::{wfm_dl, LogicVariant};
use wellfound::lp::{stable_models_lp, wfm_lp, wfm_via_gamma};
use wellfound::oracle::{brute_greatest_unfounded_dl, brute_greatest_unfounded_lp};
use wellfound::operators::{
    alpha, entails_stable, refutes_stable, stable_sets, wfm_beta, x_limit, OperatorKind,
};
use wellfound::proof::{prove, validate_tree, Prover, Sign};
use wellfound::transform::{dl_to_lp, eliminate_defeaters_priorities, explicit_version, lp_to_dl};
use wellfound::{DLRule, DefeasibleTheory, Interpretation, Literal, NormalProgram, RuleKind};

fn report(n: usize, body: impl FnOnce() + UnwindSafe) {
    let result = catch_unwind(body);
    match &result {
        Ok(()) => println!("criterion {n}: PASS"),
        Err(_) => println!("criterion {n}: FAIL"),
    }
    if let Err(payload) = result {
        resume_unwind(payload);
    }
}

fn lit(s: &str) -> Literal {
    s.parse().expect("test literal")
}

fn lits(items: &[&str]) -> BTreeSet<Literal> {
    items.iter().map(|s| lit(s)).collect()
}

fn interp(t: &[&str], f: &[&str]) -> Interpretation {
    Interpretation::new(lits(t), lits(f))
}

/// Deterministic pseudo-random stream for mask-driven test data.
fn splitmix64(state: &mut u64) -> u64 {
    *state = state.wrapping_add(0x9e37_79b9_7f4a_7c15);
    let mut z = *state;
    z = (z ^ (z >> 30)).wrapping_mul(0xbf58_476d_1ce4_e5b9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94d0_49bb_1331_11eb);
    z ^ (z >> 31)
}

fn mask_subset(universe: &BTreeSet<Literal>, mask: u64) -> BTreeSet<Literal> {
    universe
        .iter()
        .enumerate()
        .filter(|(i, _)| mask >> (i % 64) & 1 == 1)
        .map(|(_, l)| l.clone())
        .collect()
}

fn mask_interpretation(universe: &BTreeSet<Literal>, t_mask: u64, f_mask: u64) -> Interpretation {
    Interpretation::new(
        mask_subset(universe, t_mask & !f_mask),
        mask_subset(universe, f_mask & !t_mask),
    )
}

fn all_subsets(universe: &BTreeSet<Literal>) -> Vec<BTreeSet<Literal>> {
    let items: Vec<&Literal> = universe.iter().collect();
    assert!(items.len() <= 12, "exhaustive subset sweep kept small");
    (0u32..(1 << items.len()))
        .map(|mask| {
            items
                .iter()
                .enumerate()
                .filter(|(i, _)| mask >> i & 1 == 1)
                .map(|(_, l)| (*l).clone())
                .collect()
        })
        .collect()
}

/// The program's well-founded model extended to `universe`: literals
/// the program never mentions have no rules and are unfounded.
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

fn restrict(interp: &Interpretation, universe: &BTreeSet<Literal>) -> Interpretation {
    Interpretation::new(
        interp.well_founded.intersection(universe).cloned(),
        interp.unfounded.intersection(universe).cloned(),
    )
}

/// Ambiguity separation: blocking concludes `q`, propagation concludes
/// nothing, and the program translation concludes nothing either.
#[test]
fn criterion_1() {
    report(1, || {
        let theory = fixtures::ambiguity();
        assert_eq!(
            wfm_dl(&theory, LogicVariant::Ndl),
            interp(&["q"], &["p", "-p", "-q"])
        );
        assert_eq!(wfm_dl(&theory, LogicVariant::Adl), Interpretation::bottom());
        let program = dl_to_lp(&theory).expect("plain theory");
        assert_eq!(wfm_lp(&program), Interpretation::bottom());
    });
}

/// Strict facts win: the translation derives both `p` and `q`,
/// propagation leaves `q` ambiguous, and the ambiguity-propagating
/// operator's iteration limit is `{p, q}`.
#[test]
fn criterion_2() {
    report(2, || {
        let theory = fixtures::strict_fact();
        let program = dl_to_lp(&theory).expect("plain theory");
        assert_eq!(wfm_lp(&program), interp(&["p", "q"], &["-p", "-q"]));
        let adl = wfm_dl(&theory, LogicVariant::Adl);
        assert_eq!(adl, interp(&["p"], &["-p", "-q"]));
        assert!(!adl.well_founded.contains(&lit("q")));
        assert!(!adl.unfounded.contains(&lit("q")));
        let run = x_limit(&theory, OperatorKind::Alpha).expect("plain theory");
        assert_eq!(run.limit, lits(&["p", "q"]));
    });
}

/// The diamond with a floating conclusion: two stable models, one
/// blocking stable set, and `extremist` floats under propagation-style
/// stable reasoning but not under blocking.
#[test]
fn criterion_3() {
    report(3, || {
        let theory = fixtures::nixon();
        let program = dl_to_lp(&theory).expect("plain theory");
        let expected: BTreeSet<BTreeSet<Literal>> = [
            lits(&["nixon", "republican", "quaker", "dove", "-hawk", "extremist"]),
            lits(&["nixon", "republican", "quaker", "hawk", "-dove", "extremist"]),
        ]
        .into_iter()
        .collect();
        assert_eq!(stable_models_lp(&program, 20).expect("small"), expected);
        let beta_sets = stable_sets(&theory, OperatorKind::Beta, 20).expect("small");
        let core: BTreeSet<BTreeSet<Literal>> =
            [lits(&["nixon", "republican", "quaker"])].into_iter().collect();
        assert_eq!(beta_sets, core);
        let extremist = lit("extremist");
        assert!(entails_stable(&theory, OperatorKind::Alpha, &extremist, 20).expect("small"));
        assert!(!entails_stable(&theory, OperatorKind::Beta, &extremist, 20).expect("small"));
    });
}

/// Joint support: reasoning by cases succeeds under the
/// ambiguity-propagating stable sets and is refuted under blocking.
#[test]
fn criterion_4() {
    report(4, || {
        let theory = fixtures::joint();
        let alpha_sets = stable_sets(&theory, OperatorKind::Alpha, 20).expect("small");
        let expected: BTreeSet<BTreeSet<Literal>> =
            [lits(&["p", "q"]), lits(&["-p", "q"])].into_iter().collect();
        assert_eq!(alpha_sets, expected);
        let beta_sets = stable_sets(&theory, OperatorKind::Beta, 20).expect("small");
        let empty_only: BTreeSet<BTreeSet<Literal>> = [BTreeSet::new()].into_iter().collect();
        assert_eq!(beta_sets, empty_only);
        let q = lit("q");
        assert!(entails_stable(&theory, OperatorKind::Alpha, &q, 20).expect("small"));
        assert!(refutes_stable(&theory, OperatorKind::Beta, &q, 20).expect("small"));
    });
}

/// The even negative loop: an empty well-founded model, the expected
/// theory reading, a round trip landing on the explicit version, and
/// full ambiguity under propagation.
#[test]
fn criterion_5() {
    report(5, || {
        let program = fixtures::loop_program();
        assert_eq!(wfm_lp(&program), Interpretation::bottom());

        let theory = lp_to_dl(&program).expect("positive atoms");
        let expected = DefeasibleTheory::new(
            vec![
                DLRule::new("r1", RuleKind::Strict, [lit("-q")], lit("p")),
                DLRule::new("r2", RuleKind::Strict, [lit("-p")], lit("q")),
                DLRule::new("r3", RuleKind::Defeasible, [], lit("-p")),
                DLRule::new("r4", RuleKind::Defeasible, [], lit("-q")),
            ],
            [],
            [],
        );
        assert_eq!(theory, expected);

        let back = dl_to_lp(&theory).expect("translation image is plain");
        let explicit = explicit_version(&program).expect("positive atoms");
        assert_eq!(back.rule_set(), explicit.rule_set());

        let adl = wfm_dl(&theory, LogicVariant::Adl);
        assert_eq!(adl, Interpretation::bottom());
        for name in ["p", "-p", "q", "-q"] {
            let l = lit(name);
            assert!(!adl.well_founded.contains(&l) && !adl.unfounded.contains(&l));
        }
    });
}

/// Paraconsistency: contradictory strict facts do not detach an
/// unrelated conclusion — `q` stays refuted in both variants and in the
/// program reading.
#[test]
fn criterion_6() {
    report(6, || {
        let theory = fixtures::contradiction();
        let expected = interp(
            &["p", "-p"],
            &["q", "-q", "r", "-r", "s", "-s", "t", "-t"],
        );
        for variant in [LogicVariant::Ndl, LogicVariant::Adl] {
            let model = wfm_dl(&theory, variant);
            assert_eq!(model, expected, "{variant}");
            assert!(model.unfounded.contains(&lit("q")), "{variant}");
        }
        assert_eq!(
            wfm_lp(&fixtures::contradiction_program()),
            interp(&["p", "-p"], &["q", "r", "s", "t"])
        );
    });
}

/// The seeded property sweep: 1002 random theories (and as many random
/// programs) of at most 8 literals, split across plain, extra-conflict,
/// and full shapes, with every proposition checked on the sub-corpus
/// satisfying its preconditions — zero violations allowed.
#[test]
fn criterion_7() {
    report(7, || {
        let presets = [
            TheoryConfig::plain(4),
            TheoryConfig::plain_with_conflicts(4),
            TheoryConfig::full(4),
        ];
        let mut theories = 0usize;
        for round in 0..334u64 {
            for (which, preset) in presets.iter().enumerate() {
                let theory = random_theory(preset, round * 31 + which as u64);
                theories += 1;
                assert!(theory.literals().len() <= 8);
                let plain = !theory.has_defeaters() && !theory.has_priorities();
                let minimal_only = which == 0;

                let ndl = wfm_dl(&theory, LogicVariant::Ndl);
                let adl = wfm_dl(&theory, LogicVariant::Adl);

                // Translation soundness; exactness on minimal conflicts.
                if plain {
                    let program = dl_to_lp(&theory).expect("plain theory");
                    let extended = lp_wfm_on(theory.literals(), &program);
                    assert!(adl.well_founded.is_subset(&extended.well_founded));
                    assert!(adl.unfounded.is_subset(&extended.unfounded));
                    if minimal_only {
                        assert_eq!(adl, extended);
                    }

                    // Assumption operator = GL operator, all subsets.
                    for assumed in all_subsets(theory.literals()) {
                        assert_eq!(
                            alpha(&theory, &assumed).expect("plain theory"),
                            wellfound::lp::gamma(&program, &assumed)
                        );
                    }

                    // Propagation-side stable structure.
                    let alpha_sets: Vec<BTreeSet<Literal>> =
                        stable_sets(&theory, OperatorKind::Alpha, 20)
                            .expect("small")
                            .into_iter()
                            .collect();
                    for set in &alpha_sets {
                        assert!(adl.well_founded.is_subset(set));
                        assert!(adl.unfounded.is_disjoint(set));
                    }
                    for a in &alpha_sets {
                        for b in &alpha_sets {
                            assert!(!(a.is_subset(b) && a != b), "antichain");
                        }
                    }
                }

                // Blocking fixpoint model is the blocking semantics.
                assert_eq!(wfm_beta(&theory), ndl);

                // Blocking-side stable structure.
                let beta_sets: Vec<BTreeSet<Literal>> =
                    stable_sets(&theory, OperatorKind::Beta, 20)
                        .expect("small")
                        .into_iter()
                        .collect();
                for set in &beta_sets {
                    assert!(ndl.well_founded.is_subset(set));
                    assert!(ndl.unfounded.is_disjoint(set));
                }
                for a in &beta_sets {
                    for b in &beta_sets {
                        assert!(!(a.is_subset(b) && a != b), "antichain");
                    }
                }

                // Propagation is conservative over blocking.
                assert!(adl.well_founded.is_subset(&ndl.well_founded));
                assert!(adl.unfounded.is_subset(&ndl.unfounded));

                // Compiling away defeaters and priorities preserves both
                // variants over the source literals.
                let compiled =
                    eliminate_defeaters_priorities(&theory).expect("fresh names free");
                assert_eq!(restrict(&wfm_dl(&compiled, LogicVariant::Ndl), theory.literals()), ndl);
                assert_eq!(restrict(&wfm_dl(&compiled, LogicVariant::Adl), theory.literals()), adl);
            }

            // Program-side propositions on a fresh random program.
            let program = random_program(&ProgramConfig::positive(4), round);
            assert!(program.literals().len() <= 8);
            let original = wfm_lp(&program);
            let explicit = explicit_version(&program).expect("positive atoms");
            let rewritten = wfm_lp(&explicit);
            let theory = lp_to_dl(&program).expect("positive atoms");
            let model = wfm_dl(&theory, LogicVariant::Adl);
            for p in program.literals() {
                // Explicit version mirrors the program on its atoms...
                assert_eq!(
                    original.well_founded.contains(&p),
                    rewritten.well_founded.contains(&p)
                );
                assert_eq!(
                    original.unfounded.contains(&p),
                    rewritten.unfounded.contains(&p)
                );
                // ...and decides each introduced complement oppositely.
                let c = p.complement();
                assert_eq!(
                    rewritten.well_founded.contains(&c),
                    rewritten.unfounded.contains(&p)
                );
                assert_eq!(
                    rewritten.unfounded.contains(&c),
                    rewritten.well_founded.contains(&p)
                );
                // The theory reading does both at once.
                assert_eq!(
                    model.well_founded.contains(&p),
                    model.unfounded.contains(&c)
                );
                assert_eq!(
                    model.unfounded.contains(&p),
                    model.well_founded.contains(&c)
                );
                assert_eq!(
                    original.well_founded.contains(&p),
                    model.well_founded.contains(&p)
                );
                assert_eq!(
                    original.unfounded.contains(&p),
                    model.unfounded.contains(&p)
                );
            }

            // Stable models map exactly onto the α-stable sets.
            let atoms = program.literals();
            let mapped: BTreeSet<BTreeSet<Literal>> = stable_models_lp(&program, 20)
                .expect("small")
                .into_iter()
                .map(|stable| {
                    let mut closed = stable.clone();
                    for p in &atoms {
                        if !stable.contains(p) {
                            closed.insert(p.complement());
                        }
                    }
                    closed
                })
                .collect();
            assert_eq!(
                mapped,
                stable_sets(&theory, OperatorKind::Alpha, 20).expect("small")
            );
        }
        assert!(theories >= 1000, "swept {theories} theories");
    });
}

/// Oracle equivalence: the deletion-based greatest-unfounded-set
/// computations agree with brute-force union-over-all-subsets oracles,
/// and the two well-founded constructions agree, over seeded random
/// instances of at most 10 literals.
#[test]
fn criterion_8() {
    report(8, || {
        let mut state = 0xace5_u64;
        for seed in 0..200u64 {
            let program = random_program(&ProgramConfig::signed(5), seed);
            assert!(program.literals().len() <= 10);
            assert_eq!(wfm_lp(&program), wfm_via_gamma(&program));
            let universe = program.literals();
            for _ in 0..2 {
                let t_mask = splitmix64(&mut state);
                let f_mask = splitmix64(&mut state);
                let at = mask_interpretation(&universe, t_mask, f_mask);
                assert_eq!(
                    wellfound::lp::greatest_unfounded_lp(&program, &at),
                    brute_greatest_unfounded_lp(&program, &at)
                );
            }

            let theory = random_theory(&TheoryConfig::full(5), seed);
            assert!(theory.literals().len() <= 10);
            for _ in 0..2 {
                let t_mask = splitmix64(&mut state);
                let f_mask = splitmix64(&mut state);
                let at = mask_interpretation(theory.literals(), t_mask, f_mask);
                for variant in [LogicVariant::Ndl, LogicVariant::Adl] {
                    assert_eq!(
                        wellfound::dl::greatest_unfounded_dl(&theory, &at, variant),
                        brute_greatest_unfounded_dl(&theory, &at, variant)
                            .expect("in-universe candidates"),
                        "{variant}"
                    );
                }
            }
        }
    });
}

/// The proof system round-trips against the fixpoint semantics on the
/// whole corpus — searched trees validate, search answers match the
/// model in both directions — and failure-by-looping handles the
/// self-supporting rule.
#[test]
fn criterion_9() {
    report(9, || {
        let mut corpus: Vec<DefeasibleTheory> = vec![
            fixtures::ambiguity(),
            fixtures::strict_fact(),
            fixtures::nixon(),
            fixtures::joint(),
            fixtures::bachelor(),
            fixtures::bachelor_open(),
            fixtures::contradiction(),
        ];
        corpus.push(lp_to_dl(&fixtures::loop_program()).expect("positive atoms"));
        corpus.push(lp_to_dl(&chain_program(3)).expect("positive atoms"));
        for round in 0..40u64 {
            corpus.push(random_theory(&TheoryConfig::full(4), 7000 + round));
        }

        for theory in &corpus {
            for variant in [LogicVariant::Ndl, LogicVariant::Adl] {
                let model = wfm_dl(theory, variant);
                let mut prover = Prover::new(theory, variant);
                for literal in theory.literals() {
                    let plus = prover.prove(Sign::Plus, literal).expect("budget");
                    let minus = prover.prove(Sign::Minus, literal).expect("budget");
                    assert_eq!(
                        plus.is_some(),
                        model.well_founded.contains(literal),
                        "+{literal} under {variant}"
                    );
                    assert_eq!(
                        minus.is_some(),
                        model.unfounded.contains(literal),
                        "-{literal} under {variant}"
                    );
                    assert!(!(plus.is_some() && minus.is_some()), "coherence");
                    for tree in [plus, minus].into_iter().flatten() {
                        assert!(
                            validate_tree(theory, variant, &tree)
                                .expect("labels in universe")
                                .valid,
                            "searched tree must validate"
                        );
                    }
                }
            }
        }

        // Failure-by-looping: the self-supporting rule refutes its head
        // and never proves it.
        let looping = DefeasibleTheory::new(
            vec![DLRule::new("r1", RuleKind::Strict, [lit("p")], lit("p"))],
            [],
            [],
        );
        for variant in [LogicVariant::Ndl, LogicVariant::Adl] {
            assert!(prove(&looping, variant, Sign::Plus, &lit("p"))
                .expect("budget")
                .is_none());
            let refutation = prove(&looping, variant, Sign::Minus, &lit("p"))
                .expect("budget")
                .expect("refutable by looping");
            assert!(validate_tree(&looping, variant, &refutation)
                .expect("labels in universe")
                .valid);
            assert_eq!(refutation.node_count(), 2, "loop closes at depth one");
        }

        // Keep the LP fixtures honest on the same pass.
        assert_eq!(
            wfm_lp(&chain_program(3)),
            Interpretation::new(lits(&["p"]), lits(&["q0", "q1", "q2", "q3"]))
        );
    });
}
