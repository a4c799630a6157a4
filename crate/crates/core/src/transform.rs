//! Translations between defeasible theories and normal logic programs,
//! plus theory-to-theory normalizations.
//!
//! * [`close_conflicts`] — closes the conflict sets under strict rules.
//! * [`dl_to_lp`] — compiles a defeater-free, priority-free theory into a
//!   normal logic program whose default negation ranges over rival
//!   literals drawn from the conflict sets.
//! * [`explicit_version`] — rewrites a program's default negation through
//!   explicit complement literals plus closed-world rules.
//! * [`lp_to_dl`] — reads a program as strict rules over complement
//!   literals together with closed-world presumptions.
//! * [`eliminate_defeaters_priorities`] — compiles any theory into an
//!   equivalent one with no defeaters and an empty priority relation, at
//!   the price of fresh "support" and "firing" atoms.

use std::collections::{BTreeMap, BTreeSet};

use crate::error::EngineError;
use crate::syntax::{DLRule, DefeasibleTheory, LPRule, Literal, NormalProgram, RuleKind};

/// Default cap on the size of a rival-literal product.
pub const DEFAULT_PRODUCT_CAP: usize = 4096;

/// Closes the conflict sets under strict rules: whenever `A -> p` is
/// strict and `p ∈ c` for a conflict set `c`, the set `A ∪ (c − {p})` is
/// a conflict set too. Iterated to a fixpoint.
///
/// Facts (`A = ∅`) can legitimately shrink a minimal set `{p, -p}` to
/// the singleton `{-p}`, which downstream semantics read as "`-p` is
/// always defeated" — exactly right opposite a strict fact for `p`.
pub fn close_conflicts(theory: &DefeasibleTheory) -> DefeasibleTheory {
    let mut conflicts: BTreeSet<BTreeSet<Literal>> = theory.conflicts().clone();
    loop {
        let mut fresh: Vec<BTreeSet<Literal>> = Vec::new();
        for set in &conflicts {
            for rule in theory.rules() {
                if rule.kind != RuleKind::Strict || !set.contains(&rule.head) {
                    continue;
                }
                let mut derived: BTreeSet<Literal> = rule.body.clone();
                derived.extend(set.iter().filter(|l| **l != rule.head).cloned());
                if !conflicts.contains(&derived) {
                    fresh.push(derived);
                }
            }
        }
        if fresh.is_empty() {
            break;
        }
        conflicts.extend(fresh);
    }
    DefeasibleTheory::new(
        theory.rules().to_vec(),
        conflicts,
        theory.priority().iter().cloned(),
    )
}

/// The rival-literal product for `p`: all sets formed by picking one
/// literal other than `p` from each conflict set containing `p`.
///
/// Duplicates collapse (the result is a set of sets). If some conflict
/// set for `p` offers no rival — the singleton `{p}` — the product is
/// empty. Uses the default cap of [`DEFAULT_PRODUCT_CAP`].
pub fn prod_conflicts(
    theory: &DefeasibleTheory,
    p: &Literal,
) -> Result<BTreeSet<BTreeSet<Literal>>, EngineError> {
    prod_conflicts_capped(theory, p, DEFAULT_PRODUCT_CAP)
}

/// [`prod_conflicts`] with an explicit cap on the number of product
/// members; exceeding it yields [`EngineError::CapExceeded`].
pub fn prod_conflicts_capped(
    theory: &DefeasibleTheory,
    p: &Literal,
    cap: usize,
) -> Result<BTreeSet<BTreeSet<Literal>>, EngineError> {
    if !theory.contains_literal(p) {
        return Err(EngineError::UnknownLiteral(p.clone()));
    }
    let mut product: BTreeSet<BTreeSet<Literal>> = BTreeSet::from([BTreeSet::new()]);
    for set in theory.conflicts_for(p) {
        let rivals: Vec<&Literal> = set.iter().filter(|l| **l != *p).collect();
        let mut grown: BTreeSet<BTreeSet<Literal>> = BTreeSet::new();
        for partial in &product {
            for rival in &rivals {
                let mut choice = partial.clone();
                choice.insert((*rival).clone());
                grown.insert(choice);
                if grown.len() > cap {
                    return Err(EngineError::CapExceeded {
                        what: "rival-literal product",
                        limit: cap,
                        actual: grown.len(),
                    });
                }
            }
        }
        product = grown;
    }
    Ok(product)
}

/// A compiled program together with the map from source rule ids to the
/// indices of the program rules they produced.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Translation {
    /// The compiled program.
    pub program: NormalProgram,
    /// For each source rule id, the indices into `program.rules` of its
    /// translations.
    pub trans: BTreeMap<String, Vec<usize>>,
}

/// Compiles a defeater-free, priority-free theory into a normal logic
/// program: strict rules carry over verbatim (body to positive body),
/// and each defeasible rule becomes one program rule per member of its
/// head's rival-literal product, with that member as the negated body.
pub fn dl_to_lp(theory: &DefeasibleTheory) -> Result<NormalProgram, EngineError> {
    dl_to_lp_with_trans(theory).map(|t| t.program)
}

/// [`dl_to_lp`] with rule provenance: which program rules each theory
/// rule produced.
pub fn dl_to_lp_with_trans(theory: &DefeasibleTheory) -> Result<Translation, EngineError> {
    if theory.has_defeaters() {
        return Err(EngineError::DefeatersPresent {
            context: "translation to a logic program",
        });
    }
    if theory.has_priorities() {
        return Err(EngineError::PrioritiesPresent {
            context: "translation to a logic program",
        });
    }
    let mut rules: Vec<LPRule> = Vec::new();
    let mut trans: BTreeMap<String, Vec<usize>> = BTreeMap::new();
    for rule in theory.rules() {
        let produced = trans.entry(rule.id.clone()).or_default();
        match rule.kind {
            RuleKind::Strict => {
                produced.push(rules.len());
                rules.push(LPRule::new(
                    rule.head.clone(),
                    rule.body.iter().cloned(),
                    [],
                ));
            }
            RuleKind::Defeasible => {
                for rivals in prod_conflicts(theory, &rule.head)? {
                    produced.push(rules.len());
                    rules.push(LPRule::new(
                        rule.head.clone(),
                        rule.body.iter().cloned(),
                        rivals,
                    ));
                }
            }
            RuleKind::Defeater => unreachable!("defeaters rejected above"),
        }
    }
    Ok(Translation {
        program: NormalProgram::new(rules),
        trans,
    })
}

/// Re-expresses negative literals as fresh positive atoms (`-a` becomes
/// `a__neg`) so that atom-based constructions apply. Programs that are
/// already sign-free are returned unchanged.
fn positive_view(program: &NormalProgram) -> Result<NormalProgram, EngineError> {
    if program.is_positive() {
        return Ok(program.clone());
    }
    let atoms = program.atoms();
    for literal in program.literals() {
        if literal.is_positive() {
            continue;
        }
        let fresh = format!("{}__neg", literal.atom());
        if atoms.contains(&fresh) {
            return Err(EngineError::AtomCollision { atom: fresh });
        }
    }
    let encode = |l: &Literal| {
        if l.is_positive() {
            l.clone()
        } else {
            Literal::pos(format!("{}__neg", l.atom()))
        }
    };
    Ok(NormalProgram::new(program.rules.iter().map(|rule| {
        LPRule::new(
            encode(&rule.head),
            rule.pos_body.iter().map(&encode),
            rule.neg_body.iter().map(&encode),
        )
    })))
}

/// The explicit version of a program: every default-negated body literal
/// `not b` is replaced by the complement literal `-b` in the positive
/// body, and a closed-world rule `-p :- not p` is added for every atom.
///
/// Inputs containing negative literals are first renamed through the
/// reversible sign encoding `-a ↦ a__neg` (failing with
/// [`EngineError::AtomCollision`] if the encoded name is taken).
pub fn explicit_version(program: &NormalProgram) -> Result<NormalProgram, EngineError> {
    let program = positive_view(program)?;
    let mut rules: Vec<LPRule> = program
        .rules
        .iter()
        .map(|rule| {
            let mut pos: BTreeSet<Literal> = rule.pos_body.clone();
            pos.extend(rule.neg_body.iter().map(|b| Literal::neg(b.atom())));
            LPRule::new(rule.head.clone(), pos, [])
        })
        .collect();
    for atom in program.atoms() {
        rules.push(LPRule::new(
            Literal::neg(&atom),
            [],
            [Literal::pos(&atom)],
        ));
    }
    Ok(NormalProgram::new(rules))
}

/// Reads a program as a defeasible theory: each rule becomes a strict
/// rule whose default-negated body literals turn into complement
/// literals, and every atom gets a closed-world presumption of its
/// complement. Conflicts are the minimal ones; the priority relation is
/// empty.
///
/// Inputs containing negative literals are first renamed through the
/// sign encoding `-a ↦ a__neg`, as in [`explicit_version`].
pub fn lp_to_dl(program: &NormalProgram) -> Result<DefeasibleTheory, EngineError> {
    let program = positive_view(program)?;
    let mut rules: Vec<DLRule> = Vec::new();
    for (i, rule) in program.rules.iter().enumerate() {
        let mut body: BTreeSet<Literal> = rule.pos_body.clone();
        body.extend(rule.neg_body.iter().map(|b| Literal::neg(b.atom())));
        rules.push(DLRule::new(
            format!("r{}", i + 1),
            RuleKind::Strict,
            body,
            rule.head.clone(),
        ));
    }
    let offset = rules.len();
    for (j, atom) in program.atoms().iter().enumerate() {
        rules.push(DLRule::new(
            format!("r{}", offset + j + 1),
            RuleKind::Defeasible,
            [],
            Literal::neg(atom),
        ));
    }
    Ok(DefeasibleTheory::new(rules, [], []))
}

/// Compiles away defeaters and priorities with the default product cap.
/// See [`eliminate_defeaters_priorities_capped`].
pub fn eliminate_defeaters_priorities(
    theory: &DefeasibleTheory,
) -> Result<DefeasibleTheory, EngineError> {
    eliminate_defeaters_priorities_capped(theory, DEFAULT_PRODUCT_CAP)
}

/// Compiles a theory into one with no defeaters and an empty priority
/// relation that draws the same conclusions over the shared literals, in
/// either variant.
///
/// Every rule `r: A ⤳ p` is split through two fresh atoms: a support
/// atom (`su__r`, derived strictly from `A`) and a firing atom
/// (`fi__r`, derived from the support defeasibly unless `r` was strict).
/// Strict and defeasible rules additionally detach `p` strictly from
/// their firing atom; defeaters never detach. Defeat is reified: for
/// each conflict set of a defeasible rule's head and each way of picking
/// one not-inferior rival rule per rival literal, a rule concludes the
/// firing atom's complement from the rivals' support atoms — strictly
/// when every picked rival is strict or strictly superior, defeasibly
/// otherwise. The compiled theory keeps only minimal conflict sets.
///
/// Fails with [`EngineError::AtomCollision`] /
/// [`EngineError::RuleIdCollision`] when a fresh name is taken, and with
/// [`EngineError::CapExceeded`] when some rival-rule product outgrows
/// `cap`.
pub fn eliminate_defeaters_priorities_capped(
    theory: &DefeasibleTheory,
    cap: usize,
) -> Result<DefeasibleTheory, EngineError> {
    // Fresh-name discipline: support/firing atoms derive from rule ids,
    // so ids must be unique and the derived names unused.
    let mut seen_ids = BTreeSet::new();
    for rule in theory.rules() {
        if !seen_ids.insert(rule.id.as_str()) {
            return Err(EngineError::RuleIdCollision {
                id: rule.id.clone(),
            });
        }
        for prefix in ["su__", "fi__"] {
            let fresh = format!("{prefix}{}", rule.id);
            if theory.atoms().contains(&fresh) {
                return Err(EngineError::AtomCollision { atom: fresh });
            }
        }
    }

    let support = |rule: &DLRule| Literal::pos(format!("su__{}", rule.id));
    let firing = |rule: &DLRule| Literal::pos(format!("fi__{}", rule.id));

    let mut rules: Vec<DLRule> = Vec::new();
    let mut fresh_ids = BTreeSet::new();
    let original_ids: BTreeSet<&str> = theory.rules().iter().map(|r| r.id.as_str()).collect();
    let mut push = |rule: DLRule, fresh_ids: &mut BTreeSet<String>| -> Result<(), EngineError> {
        if original_ids.contains(rule.id.as_str()) || !fresh_ids.insert(rule.id.clone()) {
            return Err(EngineError::RuleIdCollision { id: rule.id });
        }
        rules.push(rule);
        Ok(())
    };

    for rule in theory.rules() {
        push(
            DLRule::new(
                format!("{}__sup", rule.id),
                RuleKind::Strict,
                rule.body.iter().cloned(),
                support(rule),
            ),
            &mut fresh_ids,
        )?;
        let firing_kind = match rule.kind {
            RuleKind::Strict => RuleKind::Strict,
            RuleKind::Defeasible | RuleKind::Defeater => RuleKind::Defeasible,
        };
        push(
            DLRule::new(
                format!("{}__fire", rule.id),
                firing_kind,
                [support(rule)],
                firing(rule),
            ),
            &mut fresh_ids,
        )?;
        if rule.kind != RuleKind::Defeater {
            push(
                DLRule::new(
                    format!("{}__det", rule.id),
                    RuleKind::Strict,
                    [firing(rule)],
                    rule.head.clone(),
                ),
                &mut fresh_ids,
            )?;
        }
    }

    // Reified defeat: block the firing atom of each defeasible rule.
    for rule in theory.rules() {
        if rule.kind != RuleKind::Defeasible {
            continue;
        }
        let mut counter = 0usize;
        for set in theory.conflicts_for(&rule.head) {
            let rivals: Vec<&Literal> = set.iter().filter(|l| **l != rule.head).collect();
            let mut candidates: Vec<Vec<&DLRule>> = Vec::with_capacity(rivals.len());
            let mut viable = true;
            for rival in &rivals {
                let options: Vec<&DLRule> = theory
                    .rules_for(rival)
                    .filter(|challenger| !theory.is_inferior(&challenger.id, &rule.id))
                    .collect();
                if options.is_empty() {
                    viable = false;
                    break;
                }
                candidates.push(options);
            }
            if !viable {
                continue;
            }
            let product_size = candidates.iter().map(Vec::len).product::<usize>();
            if product_size > cap {
                return Err(EngineError::CapExceeded {
                    what: "rival-rule product in defeater elimination",
                    limit: cap,
                    actual: product_size,
                });
            }
            let mut choice = vec![0usize; candidates.len()];
            loop {
                let picked: Vec<&DLRule> = choice
                    .iter()
                    .zip(&candidates)
                    .map(|(&i, options)| options[i])
                    .collect();
                let kind = if picked.iter().all(|challenger| {
                    challenger.kind == RuleKind::Strict
                        || theory.is_inferior(&rule.id, &challenger.id)
                }) {
                    RuleKind::Strict
                } else {
                    RuleKind::Defeasible
                };
                counter += 1;
                push(
                    DLRule::new(
                        format!("{}__blk{}", rule.id, counter),
                        kind,
                        picked.iter().map(|challenger| support(challenger)),
                        firing(rule).complement(),
                    ),
                    &mut fresh_ids,
                )?;
                // Advance the mixed-radix choice vector.
                let mut digit = 0;
                loop {
                    if digit == choice.len() {
                        break;
                    }
                    choice[digit] += 1;
                    if choice[digit] < candidates[digit].len() {
                        break;
                    }
                    choice[digit] = 0;
                    digit += 1;
                }
                if digit == choice.len() {
                    break;
                }
            }
        }
    }

    // Carry the minimal conflict pair of every input atom so the
    // compiled theory's universe covers the input's: an atom may occur
    // only as a defeater head (never detached, hence absent from the
    // compiled rules) or only inside a conflict set, yet its literals
    // must still be assigned — they are unfounded for want of rules.
    let carried: Vec<BTreeSet<Literal>> = theory
        .atoms()
        .iter()
        .map(|atom| BTreeSet::from([Literal::pos(atom.clone()), Literal::neg(atom.clone())]))
        .collect();
    Ok(DefeasibleTheory::new(rules, carried, []))
}
