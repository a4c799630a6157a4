//! Canonical example theories and programs, plus seeded random
//! generators for property testing.
//!
//! The fixtures here mirror the data files under `fixtures/` at the
//! repository root; tests compare parsed files against these
//! constructions so the two never drift apart.

use std::collections::BTreeSet;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::syntax::{DLRule, DefeasibleTheory, LPRule, Literal, NormalProgram, RuleKind};

/// The program `p :- not q0.  q0 :- q1.  …  q(n-1) :- qn.` — a default
/// whose exception rests on an unfounded chain of length `n`.
pub fn chain_program(n: usize) -> NormalProgram {
    let mut rules = vec![LPRule::new(Literal::pos("p"), [], [Literal::pos("q0")])];
    for i in 0..n {
        rules.push(LPRule::new(
            Literal::pos(format!("q{i}")),
            [Literal::pos(format!("q{}", i + 1))],
            [],
        ));
    }
    NormalProgram::new(rules)
}

/// Hand-built example theories and programs with known models.
pub mod fixtures {
    use super::*;

    fn lit(s: &str) -> Literal {
        s.parse().expect("fixture literal")
    }

    fn rule(id: &str, kind: RuleKind, body: &[&str], head: &str) -> DLRule {
        DLRule::new(id, kind, body.iter().map(|s| lit(s)), lit(head))
    }

    /// Rival presumptions for `p` and `-p`, a rule from `p` against `q`,
    /// and a presumption for `q`. Separates ambiguity blocking from
    /// ambiguity propagation: blocking concludes `q`, propagation
    /// concludes nothing.
    pub fn ambiguity() -> DefeasibleTheory {
        DefeasibleTheory::new(
            vec![
                rule("r1", RuleKind::Defeasible, &[], "p"),
                rule("r2", RuleKind::Defeasible, &[], "-p"),
                rule("r3", RuleKind::Defeasible, &["p"], "-q"),
                rule("r4", RuleKind::Defeasible, &[], "q"),
            ],
            [],
            [],
        )
    }

    /// A strict fact for `p` overrides the presumption for `-p`; a
    /// presumed `q` strictly re-derives `p`. The conflict set `{q, -p}`
    /// makes the presumptions for `q` and `-p` rivals.
    pub fn strict_fact() -> DefeasibleTheory {
        DefeasibleTheory::new(
            vec![
                rule("r1", RuleKind::Strict, &[], "p"),
                rule("r2", RuleKind::Defeasible, &[], "-p"),
                rule("r3", RuleKind::Defeasible, &[], "q"),
                rule("r4", RuleKind::Strict, &["q"], "p"),
            ],
            [BTreeSet::from([lit("q"), lit("-p")])],
            [],
        )
    }

    /// The Nixon diamond with an extremist coda: the quaker and
    /// republican routes support rival conclusions (`dove` vs `hawk`,
    /// related by an extra conflict set), and each rival route would
    /// suffice for `extremist`.
    pub fn nixon() -> DefeasibleTheory {
        DefeasibleTheory::new(
            vec![
                rule("r1", RuleKind::Strict, &[], "nixon"),
                rule("r2", RuleKind::Strict, &["nixon"], "republican"),
                rule("r3", RuleKind::Strict, &["nixon"], "quaker"),
                rule("r4", RuleKind::Defeasible, &["quaker"], "dove"),
                rule("r5", RuleKind::Defeasible, &["republican"], "hawk"),
                rule("r6", RuleKind::Strict, &["hawk"], "-dove"),
                rule("r7", RuleKind::Strict, &["dove"], "-hawk"),
                rule("r8", RuleKind::Defeasible, &["hawk"], "extremist"),
                rule("r9", RuleKind::Defeasible, &["dove"], "extremist"),
            ],
            [BTreeSet::from([lit("dove"), lit("hawk")])],
            [],
        )
    }

    /// Rival presumptions for `p` and `-p`, each of which would support
    /// `q`. Reasoning by cases would conclude `q`; neither variant does.
    pub fn joint() -> DefeasibleTheory {
        DefeasibleTheory::new(
            vec![
                rule("r1", RuleKind::Defeasible, &[], "p"),
                rule("r2", RuleKind::Defeasible, &[], "-p"),
                rule("r3", RuleKind::Defeasible, &["p"], "q"),
                rule("r4", RuleKind::Defeasible, &["-p"], "q"),
            ],
            [],
            [],
        )
    }

    /// Presumed `married` and presumed `bachelor` clash through the
    /// strict rule `married -> -bachelor`, recorded by the explicit
    /// conflict set `{married, bachelor}`.
    pub fn bachelor() -> DefeasibleTheory {
        DefeasibleTheory::new(
            bachelor_rules(),
            [BTreeSet::from([lit("married"), lit("bachelor")])],
            [],
        )
    }

    /// [`bachelor`] before closing the conflict sets under strict rules:
    /// only the minimal sets are present, so the clash between `married`
    /// and `bachelor` is implicit.
    pub fn bachelor_open() -> DefeasibleTheory {
        DefeasibleTheory::new(bachelor_rules(), [], [])
    }

    fn bachelor_rules() -> Vec<DLRule> {
        vec![
            rule("r1", RuleKind::Defeasible, &[], "married"),
            rule("r2", RuleKind::Strict, &["married"], "-bachelor"),
            rule("r3", RuleKind::Defeasible, &[], "bachelor"),
        ]
    }

    /// Strict facts for both `p` and `-p`, plus a strict rule for `q`
    /// with an unsupported body. Both facts stay derived and `q` stays
    /// out: the semantics is paraconsistent rather than explosive.
    pub fn contradiction() -> DefeasibleTheory {
        DefeasibleTheory::new(
            vec![
                rule("r1", RuleKind::Strict, &[], "p"),
                rule("r2", RuleKind::Strict, &[], "-p"),
                rule("r3", RuleKind::Strict, &["r", "s", "t"], "q"),
            ],
            [],
            [],
        )
    }

    /// `p :- not q.  q :- not p.` — the even negative loop with two
    /// stable models and an empty well-founded model.
    pub fn loop_program() -> NormalProgram {
        NormalProgram::new([
            LPRule::new(lit("p"), [], [lit("q")]),
            LPRule::new(lit("q"), [], [lit("p")]),
        ])
    }

    /// The program counterpart of [`contradiction`]: facts `p` and `-p`
    /// (two opaque literals to the program semantics) and an
    /// unsupported rule for `q`.
    pub fn contradiction_program() -> NormalProgram {
        NormalProgram::new([
            LPRule::fact(lit("p")),
            LPRule::fact(lit("-p")),
            LPRule::new(lit("q"), [lit("r"), lit("s"), lit("t")], []),
        ])
    }
}

/// Atom pool shared by the random generators.
const ATOM_POOL: [&str; 5] = ["a", "b", "c", "d", "e"];

/// Shape of a randomly generated defeasible theory.
#[derive(Debug, Clone, Copy)]
pub struct TheoryConfig {
    /// Number of distinct atoms drawn from the pool (1..=5). The
    /// literal universe is at most twice this.
    pub max_atoms: usize,
    /// Upper bound on the number of rules (at least one is generated).
    pub max_rules: usize,
    /// Upper bound on body size.
    pub max_body: usize,
    /// Whether defeaters may be generated.
    pub allow_defeaters: bool,
    /// Whether priority pairs may be generated.
    pub allow_priorities: bool,
    /// Number of attempts at extra (non-minimal) conflict sets.
    pub extra_conflicts: usize,
}

impl TheoryConfig {
    /// Defeater-free, priority-free theories with minimal conflict sets
    /// only — the inputs accepted by the program translation and the
    /// alpha operator.
    pub fn plain(max_atoms: usize) -> Self {
        TheoryConfig {
            max_atoms,
            max_rules: 6,
            max_body: 2,
            allow_defeaters: false,
            allow_priorities: false,
            extra_conflicts: 0,
        }
    }

    /// Like [`TheoryConfig::plain`] but with extra conflict sets.
    pub fn plain_with_conflicts(max_atoms: usize) -> Self {
        TheoryConfig {
            extra_conflicts: 2,
            ..Self::plain(max_atoms)
        }
    }

    /// The full language: defeaters, priorities, and extra conflicts.
    pub fn full(max_atoms: usize) -> Self {
        TheoryConfig {
            max_atoms,
            max_rules: 6,
            max_body: 2,
            allow_defeaters: true,
            allow_priorities: true,
            extra_conflicts: 2,
        }
    }
}

/// Shape of a randomly generated normal logic program.
#[derive(Debug, Clone, Copy)]
pub struct ProgramConfig {
    /// Number of distinct atoms drawn from the pool (1..=5).
    pub max_atoms: usize,
    /// Upper bound on the number of rules (at least one is generated).
    pub max_rules: usize,
    /// Upper bound on the size of each body part.
    pub max_body: usize,
    /// Whether negative literals may occur. Sign-free programs keep
    /// their atom set through the program/theory translations.
    pub signed: bool,
}

impl ProgramConfig {
    /// Sign-free programs, the inputs whose theory reading needs no
    /// renaming.
    pub fn positive(max_atoms: usize) -> Self {
        ProgramConfig {
            max_atoms,
            max_rules: 6,
            max_body: 2,
            signed: false,
        }
    }

    /// Programs over signed literals.
    pub fn signed(max_atoms: usize) -> Self {
        ProgramConfig {
            signed: true,
            ..Self::positive(max_atoms)
        }
    }
}

fn pool_literals(max_atoms: usize, signed: bool) -> Vec<Literal> {
    let atoms = &ATOM_POOL[..max_atoms.clamp(1, ATOM_POOL.len())];
    let mut literals: Vec<Literal> = atoms.iter().map(|a| Literal::pos(*a)).collect();
    if signed {
        literals.extend(atoms.iter().map(|a| Literal::neg(*a)));
    }
    literals
}

/// Picks `count` distinct elements by a partial shuffle.
fn sample_exact<T: Clone>(rng: &mut ChaCha8Rng, items: &[T], count: usize) -> BTreeSet<T>
where
    T: Ord,
{
    let count = count.min(items.len());
    let mut indices: Vec<usize> = (0..items.len()).collect();
    for i in 0..count {
        let j = rng.random_range(i..indices.len());
        indices.swap(i, j);
    }
    indices[..count].iter().map(|&i| items[i].clone()).collect()
}

fn sample_up_to<T: Clone + Ord>(rng: &mut ChaCha8Rng, items: &[T], max: usize) -> BTreeSet<T> {
    let count = rng.random_range(0..=max.min(items.len()));
    sample_exact(rng, items, count)
}

/// Generates a random defeasible theory. The same `seed` and `config`
/// always produce the same theory, and the result always validates
/// cleanly: rule ids are unique, priority pairs relate distinct
/// non-strict rules, and the priority relation is acyclic by
/// construction (pairs only ever point from earlier rules to later
/// ones).
pub fn random_theory(config: &TheoryConfig, seed: u64) -> DefeasibleTheory {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let literals = pool_literals(config.max_atoms, true);

    let rule_count = rng.random_range(1..=config.max_rules.max(1));
    let mut rules = Vec::with_capacity(rule_count);
    for i in 0..rule_count {
        let roll = rng.random_range(0..100u32);
        let kind = if roll < 40 {
            RuleKind::Strict
        } else if roll < 85 || !config.allow_defeaters {
            RuleKind::Defeasible
        } else {
            RuleKind::Defeater
        };
        let body = sample_up_to(&mut rng, &literals, config.max_body);
        let head = literals[rng.random_range(0..literals.len())].clone();
        rules.push(DLRule::new(format!("r{}", i + 1), kind, body, head));
    }

    let mut conflicts: Vec<BTreeSet<Literal>> = Vec::new();
    for _ in 0..config.extra_conflicts {
        let size = rng.random_range(2..=3usize);
        let set = sample_exact(&mut rng, &literals, size);
        if set.len() >= 2 {
            conflicts.push(set);
        }
    }

    let mut priority: Vec<(String, String)> = Vec::new();
    if config.allow_priorities {
        let non_strict: Vec<usize> = (0..rules.len())
            .filter(|&i| rules[i].kind != RuleKind::Strict)
            .collect();
        for (a, &i) in non_strict.iter().enumerate() {
            for &j in &non_strict[a + 1..] {
                if rng.random_bool(0.25) {
                    priority.push((rules[i].id.clone(), rules[j].id.clone()));
                }
            }
        }
    }

    DefeasibleTheory::new(rules, conflicts, priority)
}

/// Generates a random normal logic program, deterministically in `seed`
/// and `config`. Positive and negative body parts are disjoint samples
/// of the literal pool.
pub fn random_program(config: &ProgramConfig, seed: u64) -> NormalProgram {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let literals = pool_literals(config.max_atoms, config.signed);

    let rule_count = rng.random_range(1..=config.max_rules.max(1));
    let mut rules = Vec::with_capacity(rule_count);
    for _ in 0..rule_count {
        let head = literals[rng.random_range(0..literals.len())].clone();
        let pos_body = sample_up_to(&mut rng, &literals, config.max_body);
        let remaining: Vec<Literal> = literals
            .iter()
            .filter(|l| !pos_body.contains(l))
            .cloned()
            .collect();
        let neg_body = sample_up_to(&mut rng, &remaining, config.max_body);
        rules.push(LPRule::new(head, pos_body, neg_body));
    }
    NormalProgram::new(rules)
}
