//! Argument trees: construction, validation, and goal-directed search.
//!
//! A claim about a defeasible theory is certified by a finite tree
//! whose nodes assert literals positively (`+p`: provable) or
//! negatively (`-p`: refutable). Each node must be justified by its
//! children:
//!
//! 1. a positive node needs an applicable rule — a strict rule whose
//!    body succeeds at the node, or a defeasible rule whose body
//!    succeeds while every conflict set for the head keeps some rival
//!    literal all of whose rules either fail at the node or are
//!    strictly inferior to the applied rule;
//! 2. a negative node needs every strict rule for its literal to fail
//!    at the node, and every defeasible rule to fail or be defeated —
//!    some conflict set has, for each rival literal, a rule that
//!    succeeds at the node and beats the defeasible rule under the
//!    chosen reading of team defeat; or
//! 3. a negative node may close a loop: some ancestor carries the same
//!    negative label with only negative nodes strictly between —
//!    failure by looping.
//!
//! A set of literals *succeeds* at a node when each member appears
//! positively among the children; it *fails* when some member appears
//! negatively. Only condition 2 distinguishes the two variants.
//! Defeaters never need justification and never receive it — they only
//! appear among the rival rules consulted by conditions 1 and 2.
//!
//! [`Prover`] searches for such trees. Search is sound outright and
//! complete for locally finite theories; every finite ground theory is
//! locally finite, so here search doubles as a decision procedure,
//! subject only to the step budget.

use std::collections::{BTreeSet, HashMap};
use std::fmt;

use crate::dl::{beats, LogicVariant};
use crate::error::EngineError;
use crate::syntax::{DLRule, DefeasibleTheory, Literal, RuleKind};

/// Polarity of an argument-tree node.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Sign {
    /// The literal is claimed provable.
    Plus,
    /// The literal is claimed refutable.
    Minus,
}

impl fmt::Display for Sign {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Sign::Plus => write!(f, "+"),
            Sign::Minus => write!(f, "-"),
        }
    }
}

/// A node of an argument tree, owning its subtrees.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ArgumentTree {
    /// The claimed polarity.
    pub sign: Sign,
    /// The literal the claim is about.
    pub literal: Literal,
    /// Justifying subtrees.
    pub children: Vec<ArgumentTree>,
}

impl ArgumentTree {
    /// A childless node.
    pub fn leaf(sign: Sign, literal: Literal) -> Self {
        ArgumentTree {
            sign,
            literal,
            children: Vec::new(),
        }
    }

    /// Total number of nodes in the tree.
    pub fn node_count(&self) -> usize {
        1 + self.children.iter().map(Self::node_count).sum::<usize>()
    }

    /// Whether some child carries the given label.
    fn has_child(&self, sign: Sign, literal: &Literal) -> bool {
        self.children
            .iter()
            .any(|c| c.sign == sign && c.literal == *literal)
    }

    fn succeeds_here(&self, body: &BTreeSet<Literal>) -> bool {
        body.iter().all(|q| self.has_child(Sign::Plus, q))
    }

    fn fails_here(&self, body: &BTreeSet<Literal>) -> bool {
        body.iter().any(|q| self.has_child(Sign::Minus, q))
    }

    /// Renders the tree one node per line, children indented under
    /// their parent.
    pub fn render_indented(&self) -> String {
        let mut out = String::new();
        self.render_into(&mut out, 0);
        out
    }

    fn render_into(&self, out: &mut String, depth: usize) {
        for _ in 0..depth {
            out.push_str("  ");
        }
        out.push_str(&format!("{}{}\n", self.sign, self.literal));
        for child in &self.children {
            child.render_into(out, depth + 1);
        }
    }
}

impl fmt::Display for ArgumentTree {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.render_indented().trim_end())
    }
}

/// The dependency set of `p`: the least set containing `p` and closed
/// under taking every conflict set of a member and every rule body for
/// a member. Search for claims about `p` never leaves this set.
pub fn dep_set(
    theory: &DefeasibleTheory,
    p: &Literal,
) -> Result<BTreeSet<Literal>, EngineError> {
    if !theory.contains_literal(p) {
        return Err(EngineError::UnknownLiteral(p.clone()));
    }
    let mut dep: BTreeSet<Literal> = BTreeSet::from([p.clone()]);
    let mut queue: Vec<Literal> = vec![p.clone()];
    while let Some(q) = queue.pop() {
        let mut reached: Vec<Literal> = Vec::new();
        for set in theory.conflicts_for(&q) {
            reached.extend(set.iter().cloned());
        }
        for rule in theory.rules_for(&q) {
            reached.extend(rule.body.iter().cloned());
        }
        for r in reached {
            if dep.insert(r.clone()) {
                queue.push(r);
            }
        }
    }
    Ok(dep)
}

/// Whether every literal has a finite dependency set. Ground theories
/// are finite, so this always holds here; the check is exposed because
/// completeness of proof search is conditional on it.
pub fn is_locally_finite(theory: &DefeasibleTheory) -> bool {
    let _ = theory;
    true
}

/// Validation verdict for one node.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NodeDiagnostic {
    /// Child indices from the root to this node (empty for the root).
    pub path: Vec<usize>,
    /// The node's polarity.
    pub sign: Sign,
    /// The node's literal.
    pub literal: Literal,
    /// Whether the node is justified.
    pub ok: bool,
    /// Human-readable reason.
    pub detail: String,
}

/// Validation verdict for a whole tree.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TreeReport {
    /// Whether every node is justified.
    pub valid: bool,
    /// One diagnostic per node, in depth-first order.
    pub nodes: Vec<NodeDiagnostic>,
}

/// Checks every node of `tree` against the proof conditions for
/// `variant`, reporting a per-node verdict. Fails with
/// [`EngineError::UnknownLiteral`] if any node's literal is foreign to
/// the theory.
pub fn validate_tree(
    theory: &DefeasibleTheory,
    variant: LogicVariant,
    tree: &ArgumentTree,
) -> Result<TreeReport, EngineError> {
    fn scan_labels(theory: &DefeasibleTheory, tree: &ArgumentTree) -> Result<(), EngineError> {
        if !theory.contains_literal(&tree.literal) {
            return Err(EngineError::UnknownLiteral(tree.literal.clone()));
        }
        tree.children.iter().try_for_each(|c| scan_labels(theory, c))
    }
    scan_labels(theory, tree)?;

    let mut nodes = Vec::new();
    let mut ancestors: Vec<(Sign, Literal)> = Vec::new();
    validate_node(theory, variant, tree, &mut Vec::new(), &mut ancestors, &mut nodes);
    Ok(TreeReport {
        valid: nodes.iter().all(|n| n.ok),
        nodes,
    })
}

fn validate_node(
    theory: &DefeasibleTheory,
    variant: LogicVariant,
    node: &ArgumentTree,
    path: &mut Vec<usize>,
    ancestors: &mut Vec<(Sign, Literal)>,
    out: &mut Vec<NodeDiagnostic>,
) {
    let (ok, detail) = justify(theory, variant, node, ancestors);
    out.push(NodeDiagnostic {
        path: path.clone(),
        sign: node.sign,
        literal: node.literal.clone(),
        ok,
        detail,
    });
    ancestors.push((node.sign, node.literal.clone()));
    for (i, child) in node.children.iter().enumerate() {
        path.push(i);
        validate_node(theory, variant, child, path, ancestors, out);
        path.pop();
    }
    ancestors.pop();
}

fn loops_to_ancestor(literal: &Literal, ancestors: &[(Sign, Literal)]) -> bool {
    for (sign, anc) in ancestors.iter().rev() {
        match sign {
            Sign::Minus if anc == literal => return true,
            Sign::Minus => continue,
            Sign::Plus => return false,
        }
    }
    false
}

fn justify(
    theory: &DefeasibleTheory,
    variant: LogicVariant,
    node: &ArgumentTree,
    ancestors: &[(Sign, Literal)],
) -> (bool, String) {
    let p = &node.literal;
    match node.sign {
        Sign::Plus => {
            if let Some(rule) = theory
                .strict_rules_for(p)
                .find(|r| node.succeeds_here(&r.body))
            {
                return (true, format!("strict rule {} applies", rule.id));
            }
            for rule in theory.defeasible_rules_for(p) {
                if node.succeeds_here(&rule.body) && plus_survives(theory, node, rule) {
                    return (true, format!("defeasible rule {} applies undefeated", rule.id));
                }
            }
            (false, "no applicable undefeated rule".to_string())
        }
        Sign::Minus => {
            if loops_to_ancestor(p, ancestors) {
                return (
                    true,
                    "failure by looping: negative ancestor with the same literal".to_string(),
                );
            }
            for rule in theory.strict_rules_for(p) {
                if !node.fails_here(&rule.body) {
                    return (false, format!("strict rule {} is not failed", rule.id));
                }
            }
            for rule in theory.defeasible_rules_for(p) {
                if !node.fails_here(&rule.body) && !minus_defeated(theory, variant, node, rule) {
                    return (
                        false,
                        format!("defeasible rule {} is neither failed nor defeated", rule.id),
                    );
                }
            }
            (true, "every rule is failed or defeated".to_string())
        }
    }
}

/// Condition 1b.ii: every conflict set for the head keeps a rival
/// literal all of whose rules fail at the node or sit strictly below
/// the applied rule. Shared by both variants.
fn plus_survives(theory: &DefeasibleTheory, node: &ArgumentTree, rule: &DLRule) -> bool {
    theory.conflicts_for(&rule.head).iter().all(|set| {
        set.iter().filter(|rival| **rival != rule.head).any(|rival| {
            theory.rules_for(rival).all(|challenger| {
                theory.is_inferior(&challenger.id, &rule.id)
                    || node.fails_here(&challenger.body)
            })
        })
    })
}

/// Condition 2b.ii: some conflict set for the head has, for each rival
/// literal, a rule succeeding at the node that beats `rule` under the
/// variant's reading of team defeat.
fn minus_defeated(
    theory: &DefeasibleTheory,
    variant: LogicVariant,
    node: &ArgumentTree,
    rule: &DLRule,
) -> bool {
    theory.conflicts_for(&rule.head).iter().any(|set| {
        set.iter().filter(|rival| **rival != rule.head).all(|rival| {
            theory.rules_for(rival).any(|challenger| {
                node.succeeds_here(&challenger.body) && beats(theory, challenger, rule, variant)
            })
        })
    })
}

/// Default step budget for proof search.
pub const DEFAULT_PROOF_BUDGET: u64 = 1_000_000;

#[derive(Debug, Clone)]
enum MemoEntry {
    Proved(ArgumentTree),
    Failed,
}

/// Goal-directed search for argument trees over one theory and variant.
///
/// The prover caches the outcome of every completed top-level query and
/// reuses it across queries where that is sound: proved trees are
/// self-contained and graft anywhere; failures recorded at the root
/// transfer to positive subgoals always, and to negative subgoals only
/// where no negative ancestors are in scope (a surrounding refutation
/// chain can rescue a negative goal through failure by looping).
#[derive(Debug)]
pub struct Prover<'a> {
    theory: &'a DefeasibleTheory,
    variant: LogicVariant,
    budget: u64,
    used: u64,
    stack: Vec<(Sign, Literal)>,
    memo: HashMap<(Sign, Literal), MemoEntry>,
}

impl<'a> Prover<'a> {
    /// A prover with the default budget.
    pub fn new(theory: &'a DefeasibleTheory, variant: LogicVariant) -> Self {
        Prover {
            theory,
            variant,
            budget: DEFAULT_PROOF_BUDGET,
            used: 0,
            stack: Vec::new(),
            memo: HashMap::new(),
        }
    }

    /// Replaces the step budget (steps are goal expansions).
    pub fn with_budget(mut self, budget: u64) -> Self {
        self.budget = budget;
        self
    }

    /// Searches for an argument tree rooted at `sign p`. Returns
    /// `Ok(None)` when no such tree exists, distinguishing this from
    /// running out of budget ([`EngineError::BudgetExhausted`]).
    ///
    /// Search visits only literals in the dependency set of `p`, which
    /// is finite here, so on healthy budgets the answer is decisive.
    pub fn prove(
        &mut self,
        sign: Sign,
        literal: &Literal,
    ) -> Result<Option<ArgumentTree>, EngineError> {
        if !self.theory.contains_literal(literal) {
            return Err(EngineError::UnknownLiteral(literal.clone()));
        }
        self.used = 0;
        debug_assert!(self.stack.is_empty());
        let result = self.solve(sign, literal)?;
        self.memo.insert(
            (sign, literal.clone()),
            match &result {
                Some(tree) => MemoEntry::Proved(tree.clone()),
                None => MemoEntry::Failed,
            },
        );
        #[cfg(debug_assertions)]
        if let Some(tree) = &result {
            let report = validate_tree(self.theory, self.variant, tree)
                .expect("search stays inside the literal universe");
            debug_assert!(report.valid, "search produced an invalid tree:\n{tree}");
        }
        Ok(result)
    }

    fn tick(&mut self) -> Result<(), EngineError> {
        self.used += 1;
        if self.used > self.budget {
            return Err(EngineError::BudgetExhausted {
                budget: self.budget,
            });
        }
        Ok(())
    }

    fn in_negative_context(&self) -> bool {
        matches!(self.stack.last(), Some((Sign::Minus, _)))
    }

    fn solve(&mut self, sign: Sign, literal: &Literal) -> Result<Option<ArgumentTree>, EngineError> {
        self.tick()?;
        if sign == Sign::Minus && loops_to_ancestor(literal, &self.stack) {
            return Ok(Some(ArgumentTree::leaf(Sign::Minus, literal.clone())));
        }
        if let Some(entry) = self.memo.get(&(sign, literal.clone())) {
            match entry {
                MemoEntry::Proved(tree) => return Ok(Some(tree.clone())),
                MemoEntry::Failed => {
                    // A root-level failure is final for positive goals;
                    // a negative goal may still loop to an ancestor, so
                    // transfer only outside refutation chains.
                    if sign == Sign::Plus || !self.in_negative_context() {
                        return Ok(None);
                    }
                }
            }
        }
        if sign == Sign::Plus
            && self
                .stack
                .iter()
                .any(|(s, l)| *s == Sign::Plus && l == literal)
        {
            // A positive goal nested under an open copy of itself can
            // be pruned: any proof it had could replace the outer goal.
            return Ok(None);
        }
        self.stack.push((sign, literal.clone()));
        let result = match sign {
            Sign::Plus => self.solve_plus(literal),
            Sign::Minus => self.solve_minus(literal),
        };
        self.stack.pop();
        result
    }

    fn solve_plus(&mut self, p: &Literal) -> Result<Option<ArgumentTree>, EngineError> {
        'strict: for rule in self.theory.strict_rules_for(p).cloned().collect::<Vec<_>>() {
            let mut children = Vec::new();
            for q in &rule.body {
                match self.solve(Sign::Plus, q)? {
                    Some(tree) => children.push(tree),
                    None => continue 'strict,
                }
            }
            return Ok(Some(ArgumentTree {
                sign: Sign::Plus,
                literal: p.clone(),
                children,
            }));
        }

        'defeasible: for rule in self
            .theory
            .defeasible_rules_for(p)
            .cloned()
            .collect::<Vec<_>>()
        {
            let mut children = Vec::new();
            for q in &rule.body {
                match self.solve(Sign::Plus, q)? {
                    Some(tree) => children.push(tree),
                    None => continue 'defeasible,
                }
            }
            let conflicts = self.theory.conflicts_for(p).to_vec();
            'conflicts: for set in &conflicts {
                'rivals: for rival in set.iter().filter(|rival| *rival != p) {
                    let mut rival_children = Vec::new();
                    for challenger in self
                        .theory
                        .rules_for(rival)
                        .cloned()
                        .collect::<Vec<_>>()
                    {
                        if self.theory.is_inferior(&challenger.id, &rule.id) {
                            continue;
                        }
                        let mut refuted = false;
                        for b in &challenger.body {
                            if let Some(tree) = self.solve(Sign::Minus, b)? {
                                rival_children.push(tree);
                                refuted = true;
                                break;
                            }
                        }
                        if !refuted {
                            continue 'rivals;
                        }
                    }
                    children.extend(rival_children);
                    continue 'conflicts;
                }
                continue 'defeasible;
            }
            return Ok(Some(ArgumentTree {
                sign: Sign::Plus,
                literal: p.clone(),
                children,
            }));
        }
        Ok(None)
    }

    fn solve_minus(&mut self, p: &Literal) -> Result<Option<ArgumentTree>, EngineError> {
        let mut children = Vec::new();
        for rule in self.theory.rules_for(p).cloned().collect::<Vec<_>>() {
            match rule.kind {
                RuleKind::Defeater => continue,
                RuleKind::Strict => {
                    match self.refute_body(&rule)? {
                        Some(tree) => children.push(tree),
                        None => return Ok(None),
                    }
                }
                RuleKind::Defeasible => {
                    if let Some(tree) = self.refute_body(&rule)? {
                        children.push(tree);
                        continue;
                    }
                    match self.defeat_rule(&rule)? {
                        Some(mut proof_children) => children.append(&mut proof_children),
                        None => return Ok(None),
                    }
                }
            }
        }
        Ok(Some(ArgumentTree {
            sign: Sign::Minus,
            literal: p.clone(),
            children,
        }))
    }

    /// Finds a refutation of some body literal of `rule`.
    fn refute_body(&mut self, rule: &DLRule) -> Result<Option<ArgumentTree>, EngineError> {
        for b in rule.body.clone() {
            if let Some(tree) = self.solve(Sign::Minus, &b)? {
                return Ok(Some(tree));
            }
        }
        Ok(None)
    }

    /// Builds the children certifying that `rule` is defeated: for some
    /// conflict set, every rival literal has a beating rule whose body
    /// is proved here.
    fn defeat_rule(&mut self, rule: &DLRule) -> Result<Option<Vec<ArgumentTree>>, EngineError> {
        let conflicts = self.theory.conflicts_for(&rule.head).to_vec();
        'conflicts: for set in &conflicts {
            let mut children = Vec::new();
            for rival in set.iter().filter(|rival| **rival != rule.head) {
                let challengers: Vec<DLRule> = self
                    .theory
                    .rules_for(rival)
                    .filter(|challenger| beats(self.theory, challenger, rule, self.variant))
                    .cloned()
                    .collect();
                let mut covered = false;
                'challengers: for challenger in challengers {
                    let mut body_proofs = Vec::new();
                    for b in &challenger.body {
                        match self.solve(Sign::Plus, b)? {
                            Some(tree) => body_proofs.push(tree),
                            None => continue 'challengers,
                        }
                    }
                    children.extend(body_proofs);
                    covered = true;
                    break;
                }
                if !covered {
                    continue 'conflicts;
                }
            }
            return Ok(Some(children));
        }
        Ok(None)
    }
}

/// One-shot search: proves or refutes `literal` in `theory` under
/// `variant` with the default budget.
pub fn prove(
    theory: &DefeasibleTheory,
    variant: LogicVariant,
    sign: Sign,
    literal: &Literal,
) -> Result<Option<ArgumentTree>, EngineError> {
    Prover::new(theory, variant).prove(sign, literal)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::corpus::fixtures;
    use crate::dl::wfm_dl;
    use crate::syntax::DefeasibleTheory;

    fn lit(s: &str) -> Literal {
        s.parse().unwrap()
    }

    fn lits(items: &[&str]) -> BTreeSet<Literal> {
        items.iter().map(|s| lit(s)).collect()
    }

    #[test]
    fn dependency_sets_on_the_ambiguity_fixture() {
        let theory = fixtures::ambiguity();
        assert_eq!(dep_set(&theory, &lit("p")).unwrap(), lits(&["p", "-p"]));
        assert_eq!(
            dep_set(&theory, &lit("-q")).unwrap(),
            lits(&["-q", "q", "p", "-p"])
        );
        assert!(dep_set(&theory, &lit("zz")).is_err());
        assert!(is_locally_finite(&theory));
    }

    #[test]
    fn self_supporting_rule_is_refuted_by_looping() {
        // p  <-  p: the positive side finds nothing, the negative side
        // closes the loop with a single back-reference.
        let theory = DefeasibleTheory::new(
            vec![DLRule::new("r1", RuleKind::Strict, [lit("p")], lit("p"))],
            [],
            [],
        );
        for variant in [LogicVariant::Ndl, LogicVariant::Adl] {
            assert!(prove(&theory, variant, Sign::Plus, &lit("p"))
                .unwrap()
                .is_none());
            let tree = prove(&theory, variant, Sign::Minus, &lit("p"))
                .unwrap()
                .expect("loop refutation");
            assert_eq!(tree.node_count(), 2);
            assert_eq!(tree.children[0], ArgumentTree::leaf(Sign::Minus, lit("p")));
            let report = validate_tree(&theory, variant, &tree).unwrap();
            assert!(report.valid);
        }
    }

    #[test]
    fn looping_leaf_is_invalid_without_the_ancestor() {
        let theory = DefeasibleTheory::new(
            vec![DLRule::new("r1", RuleKind::Strict, [lit("p")], lit("p"))],
            [],
            [],
        );
        let bare = ArgumentTree::leaf(Sign::Minus, lit("p"));
        let report = validate_tree(&theory, LogicVariant::Ndl, &bare).unwrap();
        assert!(!report.valid);
        assert_eq!(report.nodes.len(), 1);
        assert!(!report.nodes[0].ok);
    }

    #[test]
    fn positive_nodes_must_answer_every_conflict_set() {
        let theory = fixtures::ambiguity();
        // q is provable: its presumption r4 survives because the only
        // rule for -q has a refutable body literal p.
        let tree = prove(&theory, LogicVariant::Ndl, Sign::Plus, &lit("q"))
            .unwrap()
            .expect("q is provable under blocking");
        assert_eq!(tree.sign, Sign::Plus);
        assert!(tree.has_child(Sign::Minus, &lit("p")));
        // Under propagation the challenger for -q cannot be beaten
        // (rule r3 is neither strict nor superior), and p itself is
        // neither provable nor refutable.
        assert!(prove(&theory, LogicVariant::Adl, Sign::Plus, &lit("q"))
            .unwrap()
            .is_none());
        assert!(prove(&theory, LogicVariant::Adl, Sign::Minus, &lit("q"))
            .unwrap()
            .is_none());
    }

    #[test]
    fn forged_trees_are_rejected_per_variant() {
        let theory = fixtures::ambiguity();
        // Claim +q justified by refuting p — valid in NDL, invalid in
        // ADL where the challenger r3 is not beatable.
        let tree = ArgumentTree {
            sign: Sign::Plus,
            literal: lit("q"),
            children: vec![ArgumentTree {
                sign: Sign::Minus,
                literal: lit("p"),
                children: vec![ArgumentTree::leaf(Sign::Minus, lit("p"))],
            }],
        };
        assert!(validate_tree(&theory, LogicVariant::Ndl, &tree)
            .unwrap()
            .valid);
        assert!(!validate_tree(&theory, LogicVariant::Adl, &tree)
            .unwrap()
            .valid);
    }

    #[test]
    fn validation_rejects_foreign_literals() {
        let theory = fixtures::ambiguity();
        let tree = ArgumentTree::leaf(Sign::Minus, lit("zz"));
        assert_eq!(
            validate_tree(&theory, LogicVariant::Ndl, &tree).unwrap_err(),
            EngineError::UnknownLiteral(lit("zz"))
        );
        let mut prover = Prover::new(&theory, LogicVariant::Ndl);
        assert!(prover.prove(Sign::Plus, &lit("zz")).is_err());
    }

    #[test]
    fn search_agrees_with_the_fixpoint_models_on_fixtures() {
        for theory in [
            fixtures::ambiguity(),
            fixtures::strict_fact(),
            fixtures::nixon(),
            fixtures::joint(),
            fixtures::bachelor(),
            fixtures::contradiction(),
        ] {
            for variant in [LogicVariant::Ndl, LogicVariant::Adl] {
                let model = wfm_dl(&theory, variant);
                let mut prover = Prover::new(&theory, variant);
                for literal in theory.literals() {
                    let proved = prover.prove(Sign::Plus, literal).unwrap().is_some();
                    let refuted = prover.prove(Sign::Minus, literal).unwrap().is_some();
                    assert_eq!(
                        proved,
                        model.well_founded.contains(literal),
                        "{variant}: +{literal}"
                    );
                    assert_eq!(
                        refuted,
                        model.unfounded.contains(literal),
                        "{variant}: -{literal}"
                    );
                }
            }
        }
    }

    #[test]
    fn priorities_steer_both_search_directions() {
        let theory = DefeasibleTheory::new(
            vec![
                DLRule::new("r", RuleKind::Defeasible, [], lit("p")),
                DLRule::new("s", RuleKind::Defeasible, [], lit("-p")),
            ],
            [],
            [("s".to_string(), "r".to_string())],
        );
        for variant in [LogicVariant::Ndl, LogicVariant::Adl] {
            assert!(prove(&theory, variant, Sign::Plus, &lit("p"))
                .unwrap()
                .is_some());
            assert!(prove(&theory, variant, Sign::Minus, &lit("-p"))
                .unwrap()
                .is_some());
            assert!(prove(&theory, variant, Sign::Plus, &lit("-p"))
                .unwrap()
                .is_none());
            assert!(prove(&theory, variant, Sign::Minus, &lit("p"))
                .unwrap()
                .is_none());
        }
    }

    #[test]
    fn defeaters_help_refute_but_are_never_obligations() {
        let theory = DefeasibleTheory::new(
            vec![
                DLRule::new("t", RuleKind::Defeasible, [], lit("f")),
                DLRule::new("r", RuleKind::Defeater, [], lit("-f")),
            ],
            [],
            [],
        );
        // NDL: the defeater beats the presumption, so f is refutable;
        // -f is refutable too (the defeater itself owes nothing).
        let minus_f = prove(&theory, LogicVariant::Ndl, Sign::Minus, &lit("f"))
            .unwrap()
            .expect("defeater defeats the presumption");
        assert_eq!(minus_f.node_count(), 1);
        assert!(prove(&theory, LogicVariant::Ndl, Sign::Minus, &lit("-f"))
            .unwrap()
            .is_some());
        // ADL: the defeater is neither strict nor superior, so f stays
        // open in both directions.
        assert!(prove(&theory, LogicVariant::Adl, Sign::Plus, &lit("f"))
            .unwrap()
            .is_none());
        assert!(prove(&theory, LogicVariant::Adl, Sign::Minus, &lit("f"))
            .unwrap()
            .is_none());
    }

    #[test]
    fn budget_exhaustion_is_an_error_not_a_failure() {
        let theory = fixtures::nixon();
        let mut prover = Prover::new(&theory, LogicVariant::Ndl).with_budget(3);
        assert_eq!(
            prover.prove(Sign::Minus, &lit("extremist")).unwrap_err(),
            EngineError::BudgetExhausted { budget: 3 }
        );
    }

    #[test]
    fn rendering_indents_children() {
        let tree = ArgumentTree {
            sign: Sign::Plus,
            literal: lit("q"),
            children: vec![ArgumentTree::leaf(Sign::Minus, lit("-q"))],
        };
        assert_eq!(tree.render_indented(), "+q\n  --q\n");
    }
}
