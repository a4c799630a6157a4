//! Core syntax: literals, rules, programs, theories, and interpretations.
//!
//! A [`Literal`] is a signed propositional atom. Normal logic programs
//! treat literals as opaque symbols (`-p` is "just another atom"), while
//! defeasible theories pair every literal with its complement through
//! conflict sets. Both formalisms share the types in this module.

use std::collections::{BTreeSet, HashMap, HashSet};
use std::fmt;
use std::str::FromStr;

use crate::error::EngineError;

/// Words that cannot be used as atoms or rule ids in the text formats.
pub const RESERVED_WORDS: [&str; 4] = ["conflict", "not", "prefer", "true"];

/// Returns true if `name` is a well-formed atom / rule-id token:
/// `[A-Za-z_][A-Za-z0-9_]*` and not a reserved word.
pub fn is_valid_name(name: &str) -> bool {
    let mut chars = name.chars();
    let head_ok = chars
        .next()
        .is_some_and(|c| c.is_ascii_alphabetic() || c == '_');
    head_ok
        && chars.all(|c| c.is_ascii_alphanumeric() || c == '_')
        && !RESERVED_WORDS.contains(&name)
}

/// A signed propositional atom, such as `p` or `-p`.
///
/// Ordering is by atom name first and sign second (negative before
/// positive), so sorted containers keep each literal next to its
/// complement.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Literal {
    atom: String,
    positive: bool,
}

impl Literal {
    /// Creates the positive literal for `atom`.
    ///
    /// # Panics
    ///
    /// Panics if `atom` is not a well-formed atom name (see
    /// [`is_valid_name`]); malformed names would not survive a
    /// render/parse round trip.
    pub fn pos(atom: impl Into<String>) -> Self {
        let atom = atom.into();
        assert!(is_valid_name(&atom), "invalid atom name: `{atom}`");
        Literal {
            atom,
            positive: true,
        }
    }

    /// Creates the negative literal for `atom`.
    ///
    /// # Panics
    ///
    /// Panics if `atom` is not a well-formed atom name.
    pub fn neg(atom: impl Into<String>) -> Self {
        let atom = atom.into();
        assert!(is_valid_name(&atom), "invalid atom name: `{atom}`");
        Literal {
            atom,
            positive: false,
        }
    }

    /// The atom name, without the sign.
    pub fn atom(&self) -> &str {
        &self.atom
    }

    /// Whether this is the positive literal of its atom.
    pub fn is_positive(&self) -> bool {
        self.positive
    }

    /// The complementary literal: `p` ↦ `-p` and `-p` ↦ `p`.
    pub fn complement(&self) -> Literal {
        Literal {
            atom: self.atom.clone(),
            positive: !self.positive,
        }
    }
}

impl fmt::Display for Literal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.positive {
            write!(f, "{}", self.atom)
        } else {
            write!(f, "-{}", self.atom)
        }
    }
}

impl FromStr for Literal {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let (positive, atom) = match s.strip_prefix('-') {
            Some(rest) => (false, rest),
            None => (true, s),
        };
        if !is_valid_name(atom) {
            return Err(format!("`{s}` is not a literal"));
        }
        Ok(Literal {
            atom: atom.to_string(),
            positive,
        })
    }
}

/// The three rule kinds of a defeasible theory.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum RuleKind {
    /// `body -> head`: applies whenever its body holds.
    Strict,
    /// `body => head`: applies unless defeated by rules for rivals of its
    /// head.
    Defeasible,
    /// `body ~> head`: can only block opposing conclusions, never support
    /// its own head.
    Defeater,
}

impl RuleKind {
    /// The arrow token used by the text format.
    pub fn arrow(self) -> &'static str {
        match self {
            RuleKind::Strict => "->",
            RuleKind::Defeasible => "=>",
            RuleKind::Defeater => "~>",
        }
    }
}

/// A rule of a defeasible theory.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct DLRule {
    /// Identifier used by the priority relation and by diagnostics.
    pub id: String,
    /// Strict, defeasible, or defeater.
    pub kind: RuleKind,
    /// Conjunctive body; empty means the rule is a fact or presumption.
    pub body: BTreeSet<Literal>,
    /// The literal the rule argues for (or, for a defeater, merely
    /// blocks opposition against).
    pub head: Literal,
}

impl DLRule {
    /// Convenience constructor.
    pub fn new(
        id: impl Into<String>,
        kind: RuleKind,
        body: impl IntoIterator<Item = Literal>,
        head: Literal,
    ) -> Self {
        DLRule {
            id: id.into(),
            kind,
            body: body.into_iter().collect(),
            head,
        }
    }

    /// The rule's content with the id stripped: kind, body, and head.
    ///
    /// Used for order- and id-insensitive comparisons of rule sets.
    pub fn signature(&self) -> (RuleKind, BTreeSet<Literal>, Literal) {
        (self.kind, self.body.clone(), self.head.clone())
    }
}

impl fmt::Display for DLRule {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}: ", self.id)?;
        if self.body.is_empty() {
            write!(f, "true")?;
        } else {
            let mut rendered: Vec<String> = self.body.iter().map(Literal::to_string).collect();
            rendered.sort();
            write!(f, "{}", rendered.join(", "))?;
        }
        write!(f, " {} {}", self.kind.arrow(), self.head)
    }
}

/// A ground defeasible theory: rules, conflict sets, and a priority
/// relation between non-strict rules.
///
/// Invariants maintained by construction:
///
/// * the literal universe (`literals`) is the complement closure of every
///   literal occurring in a rule or a conflict set;
/// * the minimal conflict set `{p, -p}` is present for every atom of the
///   universe.
///
/// The priority pair `(inferior, superior)` states that the rule named
/// `inferior` is beaten by the rule named `superior` whenever both
/// compete. (Structural problems such as priority cycles are *reported*,
/// not prevented — see [`validate_theory`].)
#[derive(Debug, Clone)]
pub struct DefeasibleTheory {
    rules: Vec<DLRule>,
    conflicts: BTreeSet<BTreeSet<Literal>>,
    priority: BTreeSet<(String, String)>,
    literals: BTreeSet<Literal>,
    atoms: BTreeSet<String>,
    rule_index_by_head: HashMap<Literal, Vec<usize>>,
    conflicts_by_member: HashMap<Literal, Vec<BTreeSet<Literal>>>,
    id_index: HashMap<String, usize>,
    inferior_pairs: HashSet<(usize, usize)>,
}

impl PartialEq for DefeasibleTheory {
    fn eq(&self, other: &Self) -> bool {
        self.rules == other.rules
            && self.conflicts == other.conflicts
            && self.priority == other.priority
    }
}

impl Eq for DefeasibleTheory {}

impl DefeasibleTheory {
    /// Builds a theory from rules, extra conflict sets, and priority
    /// pairs `(inferior, superior)`.
    ///
    /// The minimal conflict sets `{p, -p}` are inserted automatically for
    /// every atom occurring in the rules or the given conflicts, so they
    /// never need to be spelled out.
    pub fn new(
        rules: Vec<DLRule>,
        conflicts: impl IntoIterator<Item = BTreeSet<Literal>>,
        priority: impl IntoIterator<Item = (String, String)>,
    ) -> Self {
        let mut conflicts: BTreeSet<BTreeSet<Literal>> = conflicts.into_iter().collect();
        let priority: BTreeSet<(String, String)> = priority.into_iter().collect();

        let mut literals = BTreeSet::new();
        let mut note = |l: &Literal| {
            literals.insert(l.clone());
            literals.insert(l.complement());
        };
        for rule in &rules {
            note(&rule.head);
            for b in &rule.body {
                note(b);
            }
        }
        for set in &conflicts {
            for l in set {
                note(l);
            }
        }

        let atoms: BTreeSet<String> = literals.iter().map(|l| l.atom().to_string()).collect();
        for atom in &atoms {
            conflicts.insert(BTreeSet::from([Literal::pos(atom), Literal::neg(atom)]));
        }

        let mut rule_index_by_head: HashMap<Literal, Vec<usize>> = HashMap::new();
        let mut id_index = HashMap::new();
        for (i, rule) in rules.iter().enumerate() {
            rule_index_by_head
                .entry(rule.head.clone())
                .or_default()
                .push(i);
            id_index.entry(rule.id.clone()).or_insert(i);
        }

        let mut conflicts_by_member: HashMap<Literal, Vec<BTreeSet<Literal>>> = HashMap::new();
        for set in &conflicts {
            for l in set {
                conflicts_by_member
                    .entry(l.clone())
                    .or_default()
                    .push(set.clone());
            }
        }

        let inferior_pairs = priority
            .iter()
            .filter_map(|(inf, sup)| Some((*id_index.get(inf)?, *id_index.get(sup)?)))
            .collect();

        DefeasibleTheory {
            rules,
            conflicts,
            priority,
            literals,
            atoms,
            rule_index_by_head,
            conflicts_by_member,
            id_index,
            inferior_pairs,
        }
    }

    /// All rules, in their original order.
    pub fn rules(&self) -> &[DLRule] {
        &self.rules
    }

    /// The rule with the given id, if any.
    pub fn rule(&self, id: &str) -> Option<&DLRule> {
        self.id_index.get(id).map(|&i| &self.rules[i])
    }

    /// All conflict sets, minimal ones included.
    pub fn conflicts(&self) -> &BTreeSet<BTreeSet<Literal>> {
        &self.conflicts
    }

    /// The priority relation as `(inferior, superior)` id pairs.
    pub fn priority(&self) -> &BTreeSet<(String, String)> {
        &self.priority
    }

    /// The literal universe: every literal occurring in a rule or
    /// conflict set, closed under complement.
    pub fn literals(&self) -> &BTreeSet<Literal> {
        &self.literals
    }

    /// The atoms underlying [`DefeasibleTheory::literals`].
    pub fn atoms(&self) -> &BTreeSet<String> {
        &self.atoms
    }

    /// Whether `l` belongs to the literal universe.
    pub fn contains_literal(&self, l: &Literal) -> bool {
        self.literals.contains(l)
    }

    /// Indices (into [`DefeasibleTheory::rules`]) of all rules with head `p`,
    /// defeaters included.
    pub fn rule_indices_for(&self, p: &Literal) -> &[usize] {
        self.rule_index_by_head
            .get(p)
            .map(Vec::as_slice)
            .unwrap_or(&[])
    }

    /// All rules with head `p`, defeaters included.
    pub fn rules_for<'a>(&'a self, p: &Literal) -> impl Iterator<Item = &'a DLRule> {
        self.rule_indices_for(p).iter().map(|&i| &self.rules[i])
    }

    /// Strict rules with head `p`.
    pub fn strict_rules_for<'a>(&'a self, p: &Literal) -> impl Iterator<Item = &'a DLRule> {
        self.rules_for(p).filter(|r| r.kind == RuleKind::Strict)
    }

    /// Defeasible rules with head `p` (defeaters excluded).
    pub fn defeasible_rules_for<'a>(&'a self, p: &Literal) -> impl Iterator<Item = &'a DLRule> {
        self.rules_for(p).filter(|r| r.kind == RuleKind::Defeasible)
    }

    /// The conflict sets containing `p`.
    pub fn conflicts_for(&self, p: &Literal) -> &[BTreeSet<Literal>] {
        self.conflicts_by_member
            .get(p)
            .map(Vec::as_slice)
            .unwrap_or(&[])
    }

    /// Whether the priority relation makes the rule named `inferior_id`
    /// lose to the rule named `superior_id`.
    pub fn is_inferior(&self, inferior_id: &str, superior_id: &str) -> bool {
        match (self.id_index.get(inferior_id), self.id_index.get(superior_id)) {
            (Some(&a), Some(&b)) => self.inferior_pairs.contains(&(a, b)),
            _ => false,
        }
    }

    /// Whether any rule is a defeater.
    pub fn has_defeaters(&self) -> bool {
        self.rules.iter().any(|r| r.kind == RuleKind::Defeater)
    }

    /// Whether the priority relation is non-empty.
    pub fn has_priorities(&self) -> bool {
        !self.priority.is_empty()
    }

    /// The rules' contents with ids stripped, for order- and
    /// id-insensitive comparisons.
    pub fn rule_signatures(&self) -> BTreeSet<(RuleKind, BTreeSet<Literal>, Literal)> {
        self.rules.iter().map(DLRule::signature).collect()
    }
}

/// A structural problem found by [`validate_theory`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Violation {
    /// Two rules share one id, making priority references ambiguous.
    DuplicateRuleId {
        /// The shared id.
        id: String,
    },
    /// A priority pair names a rule id that does not exist.
    UnknownRuleInPriority {
        /// The offending pair.
        pair: (String, String),
        /// The id that has no rule.
        missing: String,
    },
    /// A priority pair involves a strict rule; priorities only order
    /// non-strict rules.
    PriorityOnStrictRule {
        /// The offending pair.
        pair: (String, String),
        /// The strict rule's id.
        rule: String,
    },
    /// The priority relation contains a cycle.
    PriorityCycle {
        /// Ids along the cycle, in order; the first id closes it.
        cycle: Vec<String>,
    },
    /// An atom of the universe lacks its minimal conflict set.
    ///
    /// Cannot arise for theories built through [`DefeasibleTheory::new`];
    /// kept as a defensive check.
    MissingMinimalConflict {
        /// The atom whose `{p, -p}` set is missing.
        atom: String,
    },
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Violation::DuplicateRuleId { id } => {
                write!(f, "duplicate rule id `{id}`")
            }
            Violation::UnknownRuleInPriority { pair, missing } => write!(
                f,
                "priority pair ({}, {}) names unknown rule `{missing}`",
                pair.0, pair.1
            ),
            Violation::PriorityOnStrictRule { pair, rule } => write!(
                f,
                "priority pair ({}, {}) involves strict rule `{rule}`; only non-strict rules may be ordered",
                pair.0, pair.1
            ),
            Violation::PriorityCycle { cycle } => {
                write!(f, "priority cycle: {}", cycle.join(" < "))
            }
            Violation::MissingMinimalConflict { atom } => {
                write!(f, "missing minimal conflict set for atom `{atom}`")
            }
        }
    }
}

/// Checks a theory's structural invariants and reports every violation.
///
/// Reported problems: duplicate rule ids, priority pairs naming unknown
/// or strict rules, cycles in the priority relation, and (defensively)
/// missing minimal conflict sets. An empty result means the theory is
/// well-formed; the semantic operations in this crate assume as much.
pub fn validate_theory(theory: &DefeasibleTheory) -> Vec<Violation> {
    let mut violations = Vec::new();

    let mut seen = HashSet::new();
    let mut reported = HashSet::new();
    for rule in theory.rules() {
        if !seen.insert(rule.id.as_str()) && reported.insert(rule.id.as_str()) {
            violations.push(Violation::DuplicateRuleId {
                id: rule.id.clone(),
            });
        }
    }

    for pair in theory.priority() {
        for id in [&pair.0, &pair.1] {
            match theory.rule(id) {
                None => violations.push(Violation::UnknownRuleInPriority {
                    pair: pair.clone(),
                    missing: id.clone(),
                }),
                Some(rule) if rule.kind == RuleKind::Strict => {
                    violations.push(Violation::PriorityOnStrictRule {
                        pair: pair.clone(),
                        rule: id.clone(),
                    });
                }
                Some(_) => {}
            }
        }
    }

    violations.extend(
        priority_cycles(theory.priority())
            .into_iter()
            .map(|cycle| Violation::PriorityCycle { cycle }),
    );

    for atom in theory.atoms() {
        let minimal = BTreeSet::from([Literal::pos(atom), Literal::neg(atom)]);
        if !theory.conflicts().contains(&minimal) {
            violations.push(Violation::MissingMinimalConflict { atom: atom.clone() });
        }
    }

    violations
}

/// Finds the elementary cycles reachable in the priority digraph
/// (edges run from inferior to superior), deduplicated up to rotation.
fn priority_cycles(priority: &BTreeSet<(String, String)>) -> Vec<Vec<String>> {
    let mut adjacency: HashMap<&str, Vec<&str>> = HashMap::new();
    let mut nodes: BTreeSet<&str> = BTreeSet::new();
    for (inf, sup) in priority {
        adjacency.entry(inf.as_str()).or_default().push(sup.as_str());
        nodes.insert(inf.as_str());
        nodes.insert(sup.as_str());
    }

    let mut cycles: BTreeSet<Vec<String>> = BTreeSet::new();
    let mut done: HashSet<&str> = HashSet::new();
    for &start in &nodes {
        if done.contains(start) {
            continue;
        }
        // Depth-first search with an explicit path; a back edge into the
        // current path closes a cycle.
        let mut path: Vec<&str> = Vec::new();
        let mut on_path: HashSet<&str> = HashSet::new();
        let mut stack: Vec<(&str, usize)> = vec![(start, 0)];
        while let Some(&(node, next)) = stack.last() {
            if next == 0 {
                path.push(node);
                on_path.insert(node);
            }
            let successors = adjacency.get(node).map(Vec::as_slice).unwrap_or(&[]);
            if let Some(&succ) = successors.get(next) {
                stack.last_mut().expect("frame exists").1 += 1;
                if on_path.contains(succ) {
                    let from = path.iter().position(|&n| n == succ).expect("on path");
                    let mut cycle: Vec<String> =
                        path[from..].iter().map(|s| s.to_string()).collect();
                    // Canonical rotation so each cycle is reported once.
                    let min = cycle
                        .iter()
                        .enumerate()
                        .min_by_key(|(_, s)| s.as_str())
                        .map(|(i, _)| i)
                        .unwrap_or(0);
                    cycle.rotate_left(min);
                    cycles.insert(cycle);
                } else if !done.contains(succ) {
                    stack.push((succ, 0));
                }
            } else {
                stack.pop();
                path.pop();
                on_path.remove(node);
                done.insert(node);
            }
        }
    }
    cycles.into_iter().collect()
}

/// A rule of a normal logic program: `head :- pos_body, not neg_body`.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct LPRule {
    /// The derived literal.
    pub head: Literal,
    /// Literals that must already be derived.
    pub pos_body: BTreeSet<Literal>,
    /// Literals that must be underivable (default negation).
    pub neg_body: BTreeSet<Literal>,
}

impl LPRule {
    /// Convenience constructor.
    pub fn new(
        head: Literal,
        pos_body: impl IntoIterator<Item = Literal>,
        neg_body: impl IntoIterator<Item = Literal>,
    ) -> Self {
        LPRule {
            head,
            pos_body: pos_body.into_iter().collect(),
            neg_body: neg_body.into_iter().collect(),
        }
    }

    /// A fact: empty body.
    pub fn fact(head: Literal) -> Self {
        LPRule::new(head, [], [])
    }
}

impl fmt::Display for LPRule {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.head)?;
        if self.pos_body.is_empty() && self.neg_body.is_empty() {
            return Ok(());
        }
        let mut parts: Vec<String> = Vec::new();
        let mut pos: Vec<String> = self.pos_body.iter().map(Literal::to_string).collect();
        pos.sort();
        parts.extend(pos);
        let mut neg: Vec<String> = self
            .neg_body
            .iter()
            .map(|l| format!("not {l}"))
            .collect();
        neg.sort();
        parts.extend(neg);
        write!(f, " :- {}", parts.join(", "))
    }
}

/// A ground normal logic program.
///
/// Literals are opaque: `-p` and `p` are unrelated symbols as far as
/// this type and the well-founded/stable semantics are concerned.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct NormalProgram {
    /// The program's rules, in their original order.
    pub rules: Vec<LPRule>,
}

impl NormalProgram {
    /// Builds a program from rules.
    pub fn new(rules: impl IntoIterator<Item = LPRule>) -> Self {
        NormalProgram {
            rules: rules.into_iter().collect(),
        }
    }

    /// Every literal occurring in the program (heads and both body
    /// parts). This is the universe the well-founded and stable
    /// semantics range over.
    pub fn literals(&self) -> BTreeSet<Literal> {
        let mut out = BTreeSet::new();
        for rule in &self.rules {
            out.insert(rule.head.clone());
            out.extend(rule.pos_body.iter().cloned());
            out.extend(rule.neg_body.iter().cloned());
        }
        out
    }

    /// The atom names occurring in the program.
    pub fn atoms(&self) -> BTreeSet<String> {
        self.literals()
            .into_iter()
            .map(|l| l.atom().to_string())
            .collect()
    }

    /// Whether every occurring literal is positive.
    pub fn is_positive(&self) -> bool {
        self.literals().iter().all(Literal::is_positive)
    }

    /// The rules as a set, for order-insensitive comparisons.
    pub fn rule_set(&self) -> BTreeSet<LPRule> {
        self.rules.iter().cloned().collect()
    }
}

/// A definite program: a normal program with no default negation.
///
/// The invariant is enforced at construction, which is what makes
/// [`crate::lp::definite_closure`] total on this type.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct DefiniteProgram {
    rules: Vec<LPRule>,
}

impl DefiniteProgram {
    /// Builds a definite program, rejecting rules with default negation.
    pub fn new(rules: impl IntoIterator<Item = LPRule>) -> Result<Self, EngineError> {
        let rules: Vec<LPRule> = rules.into_iter().collect();
        if let Some(rule) = rules.iter().find(|r| !r.neg_body.is_empty()) {
            return Err(EngineError::NotDefinite {
                head: rule.head.clone(),
            });
        }
        Ok(DefiniteProgram { rules })
    }

    /// Internal constructor for callers that guarantee definiteness
    /// (e.g. the Gelfond–Lifschitz reduct, which strips negation).
    pub(crate) fn new_unchecked(rules: Vec<LPRule>) -> Self {
        debug_assert!(rules.iter().all(|r| r.neg_body.is_empty()));
        DefiniteProgram { rules }
    }

    /// The rules, in order.
    pub fn rules(&self) -> &[LPRule] {
        &self.rules
    }
}

/// A three-valued interpretation: derived literals and unfounded
/// (refuted) literals. Anything in neither set is ambiguous.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct Interpretation {
    /// The well-founded (derived) side.
    pub well_founded: BTreeSet<Literal>,
    /// The unfounded (refuted) side.
    pub unfounded: BTreeSet<Literal>,
}

impl Interpretation {
    /// The empty interpretation ⟨∅, ∅⟩, where every literal is ambiguous.
    pub fn bottom() -> Self {
        Interpretation::default()
    }

    /// Builds an interpretation from its two sides.
    pub fn new(
        well_founded: impl IntoIterator<Item = Literal>,
        unfounded: impl IntoIterator<Item = Literal>,
    ) -> Self {
        Interpretation {
            well_founded: well_founded.into_iter().collect(),
            unfounded: unfounded.into_iter().collect(),
        }
    }

    /// True if no literal is both derived and refuted.
    pub fn is_coherent(&self) -> bool {
        self.well_founded.is_disjoint(&self.unfounded)
    }

    /// The knowledge ordering: both sides grow component-wise.
    pub fn leq(&self, other: &Interpretation) -> bool {
        self.well_founded.is_subset(&other.well_founded)
            && self.unfounded.is_subset(&other.unfounded)
    }
}
