//! Command-line driver for the `wellfound` engine.
//!
//! Reads defeasible theories (`.dfl`) and normal logic programs (`.lp`),
//! computes well-founded models under several semantics, translates
//! between the formalisms, enumerates stable sets/models, searches for
//! argument-tree proofs, and exposes a seeded random scanner for an
//! open semantic question.
//!
//! Exit codes: 0 success, 1 usage or parse error, 2 validation error,
//! 3 enumeration cap exceeded, 4 proof budget exhausted.

use std::collections::BTreeSet;
use std::fmt;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};
use wellfound::corpus::{random_theory, TheoryConfig};
use wellfound::dl::wfm_dl;
use wellfound::lp::{stable_models_lp, wfm_lp};
use wellfound::operators::{stable_sets, wfm_via_operator, x_limit, OperatorKind};
use wellfound::proof::{ArgumentTree, Prover, Sign, DEFAULT_PROOF_BUDGET};
use wellfound::text::{parse_program, parse_theory, render_program, render_theory, ParseError};
use wellfound::transform::{
    close_conflicts, dl_to_lp, eliminate_defeaters_priorities, explicit_version, lp_to_dl,
};
use wellfound::{
    validate_theory, DefeasibleTheory, EngineError, Interpretation, Literal, LogicVariant,
    NormalProgram, Violation,
};

#[derive(Parser)]
#[command(
    name = "wellfound",
    version,
    about = "Well-founded reasoning over logic programs and defeasible theories",
    long_about = "Computes well-founded models of ground normal logic programs (.lp) and \
                  ground defeasible theories (.dfl), translates between the two, enumerates \
                  stable sets, and searches for argument-tree proofs."
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Compute the well-founded model of a theory or program
    Wfm(WfmArgs),
    /// Rewrite the input into the other formalism or a normal form
    Translate(TranslateArgs),
    /// Enumerate stable sets of a theory or stable models of a program
    Stable(StableArgs),
    /// Search for an argument tree proving or refuting a literal
    Prove(ProveArgs),
    /// Iterate an operator from the empty set and print every stage
    Fixpoint(FixpointArgs),
    /// Parse the input and report structural problems
    Check(CheckArgs),
    /// Scan random theories for a literal refuted in every
    /// case-reasoning stable set yet alive in some blocking stable set
    ScanOpenQuestion(ScanArgs),
}

#[derive(Args)]
struct WfmArgs {
    /// Input file: a .dfl theory or a .lp program
    file: PathBuf,
    /// Semantics to apply (default: ndl for theories, wfs for programs)
    #[arg(long, value_enum)]
    logic: Option<Logic>,
    /// Emit JSON instead of plain text
    #[arg(long)]
    json: bool,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Logic {
    /// Blocking reading of team defeat (theories)
    Ndl,
    /// Ambiguity-propagating reading (theories)
    Adl,
    /// Well-founded semantics of a normal program
    Wfs,
    /// Fixpoint of the case-reasoning operator (plain theories)
    Alpha,
    /// Fixpoint of the blocking operator (theories)
    Beta,
}

impl Logic {
    fn name(self) -> &'static str {
        match self {
            Logic::Ndl => "ndl",
            Logic::Adl => "adl",
            Logic::Wfs => "wfs",
            Logic::Alpha => "alpha",
            Logic::Beta => "beta",
        }
    }
}

#[derive(Args)]
struct TranslateArgs {
    /// Input file: a .dfl theory or a .lp program
    file: PathBuf,
    /// Which rewriting to apply
    #[arg(long, value_enum)]
    direction: Direction,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Direction {
    /// Theory to program: defeasible rules become rules negated on
    /// rival conflict-set choices (needs a plain theory)
    Dl2lp,
    /// Program to theory: rules read strictly plus a presumption of
    /// each negative literal (needs positively signed atoms)
    Lp2dl,
    /// Program to program: add classical-negation rules making the
    /// closed-world assumption explicit
    Explicit,
    /// Theory to theory: compile defeaters and priorities away
    Compile,
    /// Theory to theory: close the conflict sets under complements
    CloseConflicts,
}

impl Direction {
    fn name(self) -> &'static str {
        match self {
            Direction::Dl2lp => "dl2lp",
            Direction::Lp2dl => "lp2dl",
            Direction::Explicit => "explicit",
            Direction::Compile => "compile",
            Direction::CloseConflicts => "close-conflicts",
        }
    }
}

#[derive(Args)]
struct StableArgs {
    /// Input file: a .dfl theory or a .lp program
    file: PathBuf,
    /// Stable notion to enumerate (default: beta for theories, gl for
    /// programs)
    #[arg(long, value_enum)]
    operator: Option<StableOp>,
    /// Largest literal universe to enumerate over (the search is
    /// exponential in it); bigger inputs abort with an error
    #[arg(long, default_value_t = 20)]
    cap: usize,
    /// Emit JSON instead of plain text
    #[arg(long)]
    json: bool,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum StableOp {
    /// Fixpoints of the case-reasoning operator (plain theories)
    Alpha,
    /// Fixpoints of the blocking operator (theories)
    Beta,
    /// Stable models by reduct (programs)
    Gl,
}

impl StableOp {
    fn name(self) -> &'static str {
        match self {
            StableOp::Alpha => "alpha",
            StableOp::Beta => "beta",
            StableOp::Gl => "gl",
        }
    }
}

#[derive(Args)]
struct ProveArgs {
    /// Input file: a .dfl theory
    file: PathBuf,
    /// Goal with optional polarity: `p` or `+p` derives, `-p` refutes;
    /// reach a negative literal with `+-p` (derive) or `--p` (refute)
    #[arg(long, allow_hyphen_values = true)]
    goal: String,
    /// Which reading of team defeat to prove against
    #[arg(long, value_enum, default_value = "ndl")]
    logic: ProofLogic,
    /// Node-expansion budget for the search
    #[arg(long, default_value_t = DEFAULT_PROOF_BUDGET)]
    budget: u64,
    /// Emit JSON instead of plain text
    #[arg(long)]
    json: bool,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum ProofLogic {
    /// Blocking reading
    Ndl,
    /// Ambiguity-propagating reading
    Adl,
}

#[derive(Args)]
struct FixpointArgs {
    /// Input file: a .dfl theory
    file: PathBuf,
    /// Operator to iterate from the empty set
    #[arg(long, value_enum, default_value = "beta")]
    operator: FixOp,
    /// Emit JSON instead of plain text
    #[arg(long)]
    json: bool,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum FixOp {
    /// Case-reasoning operator (plain theories)
    Alpha,
    /// Blocking operator (theories)
    Beta,
}

#[derive(Args)]
struct CheckArgs {
    /// Input file: a .dfl theory or a .lp program
    file: PathBuf,
}

#[derive(Args)]
struct ScanArgs {
    /// How many random theories to examine
    #[arg(long, default_value_t = 1000)]
    count: u64,
    /// Base seed for the deterministic generator
    #[arg(long, default_value_t = 0)]
    seed: u64,
    /// Atom pool size per theory (the literal universe is twice this)
    #[arg(long, default_value_t = 4)]
    max_atoms: usize,
    /// Largest literal universe to enumerate per theory; bigger ones
    /// are skipped and counted
    #[arg(long, default_value_t = 64)]
    cap: usize,
}

/// Anything that stops a command, mapped onto the documented exit codes.
enum Failure {
    Usage(String),
    Io(PathBuf, std::io::Error),
    Parse(PathBuf, ParseError),
    Invalid(Vec<Violation>),
    Engine(EngineError),
}

impl Failure {
    fn code(&self) -> u8 {
        match self {
            Failure::Usage(_) | Failure::Io(..) | Failure::Parse(..) => 1,
            Failure::Invalid(_) => 2,
            Failure::Engine(e) => match e {
                EngineError::CapExceeded { .. } => 3,
                EngineError::BudgetExhausted { .. } => 4,
                _ => 2,
            },
        }
    }
}

impl fmt::Display for Failure {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Failure::Usage(msg) => write!(f, "usage error: {msg}"),
            Failure::Io(path, err) => write!(f, "cannot read `{}`: {err}", path.display()),
            Failure::Parse(path, err) => write!(f, "{}: {err}", path.display()),
            Failure::Invalid(violations) => {
                writeln!(f, "invalid theory:")?;
                for v in violations {
                    writeln!(f, "  {v}")?;
                }
                Ok(())
            }
            Failure::Engine(err) => write!(f, "{err}"),
        }
    }
}

impl From<EngineError> for Failure {
    fn from(err: EngineError) -> Self {
        Failure::Engine(err)
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(err) => {
            // --help and --version print to stdout and succeed; real
            // argument errors are usage errors.
            let failed = err.use_stderr();
            let _ = err.print();
            return if failed {
                ExitCode::from(1)
            } else {
                ExitCode::SUCCESS
            };
        }
    };
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(failure) => {
            eprintln!("{failure}");
            ExitCode::from(failure.code())
        }
    }
}

fn run(cli: Cli) -> Result<(), Failure> {
    match cli.command {
        Command::Wfm(args) => cmd_wfm(args),
        Command::Translate(args) => cmd_translate(args),
        Command::Stable(args) => cmd_stable(args),
        Command::Prove(args) => cmd_prove(args),
        Command::Fixpoint(args) => cmd_fixpoint(args),
        Command::Check(args) => cmd_check(args),
        Command::ScanOpenQuestion(args) => cmd_scan(args),
    }
}

/// A parsed input file.
enum Input {
    Theory(DefeasibleTheory),
    Program(NormalProgram),
}

fn load_unchecked(path: &Path) -> Result<Input, Failure> {
    let text =
        std::fs::read_to_string(path).map_err(|e| Failure::Io(path.to_path_buf(), e))?;
    match path.extension().and_then(|e| e.to_str()) {
        Some("dfl") => parse_theory(&text)
            .map(Input::Theory)
            .map_err(|e| Failure::Parse(path.to_path_buf(), e)),
        Some("lp") => parse_program(&text)
            .map(Input::Program)
            .map_err(|e| Failure::Parse(path.to_path_buf(), e)),
        _ => Err(Failure::Usage(format!(
            "cannot tell the format of `{}`: expected a .dfl theory or a .lp program",
            path.display()
        ))),
    }
}

/// Loads and, for theories, validates the input.
fn load(path: &Path) -> Result<Input, Failure> {
    let input = load_unchecked(path)?;
    if let Input::Theory(theory) = &input {
        let violations = validate_theory(theory);
        if !violations.is_empty() {
            return Err(Failure::Invalid(violations));
        }
    }
    Ok(input)
}

/// Literal names sorted lexicographically so output is byte-stable.
fn sorted_names(set: &BTreeSet<Literal>) -> Vec<String> {
    let mut names: Vec<String> = set.iter().map(ToString::to_string).collect();
    names.sort();
    names
}

fn bracketed(set: &BTreeSet<Literal>) -> String {
    format!("[{}]", sorted_names(set).join(", "))
}

fn braced(set: &BTreeSet<Literal>) -> String {
    format!("{{{}}}", sorted_names(set).join(", "))
}

fn ambiguous_of(universe: &BTreeSet<Literal>, model: &Interpretation) -> BTreeSet<Literal> {
    universe
        .iter()
        .filter(|l| !model.well_founded.contains(l) && !model.unfounded.contains(l))
        .cloned()
        .collect()
}

fn print_model(universe: &BTreeSet<Literal>, model: &Interpretation, as_json: bool) {
    let ambiguous = ambiguous_of(universe, model);
    if as_json {
        println!(
            "{}",
            json!({
                "well_founded": sorted_names(&model.well_founded),
                "unfounded": sorted_names(&model.unfounded),
                "ambiguous": sorted_names(&ambiguous),
            })
        );
    } else {
        println!("well_founded = {}", bracketed(&model.well_founded));
        println!("unfounded = {}", bracketed(&model.unfounded));
        println!("ambiguous = {}", bracketed(&ambiguous));
    }
}

fn cmd_wfm(args: WfmArgs) -> Result<(), Failure> {
    match load(&args.file)? {
        Input::Theory(theory) => {
            let model = match args.logic.unwrap_or(Logic::Ndl) {
                Logic::Ndl => wfm_dl(&theory, LogicVariant::Ndl),
                Logic::Adl => wfm_dl(&theory, LogicVariant::Adl),
                Logic::Alpha => wfm_via_operator(&theory, OperatorKind::Alpha)?,
                Logic::Beta => wfm_via_operator(&theory, OperatorKind::Beta)?,
                Logic::Wfs => {
                    return Err(Failure::Usage(
                        "logic `wfs` reads a program file (.lp); translate the theory first"
                            .into(),
                    ))
                }
            };
            print_model(theory.literals(), &model, args.json);
        }
        Input::Program(program) => {
            match args.logic.unwrap_or(Logic::Wfs) {
                Logic::Wfs => {}
                other => {
                    return Err(Failure::Usage(format!(
                        "logic `{}` reads a theory file (.dfl)",
                        other.name()
                    )))
                }
            }
            print_model(&program.literals(), &wfm_lp(&program), args.json);
        }
    }
    Ok(())
}

fn cmd_translate(args: TranslateArgs) -> Result<(), Failure> {
    let rendered = match (args.direction, load(&args.file)?) {
        (Direction::Dl2lp, Input::Theory(theory)) => render_program(&dl_to_lp(&theory)?),
        (Direction::Compile, Input::Theory(theory)) => {
            render_theory(&eliminate_defeaters_priorities(&theory)?)
        }
        (Direction::CloseConflicts, Input::Theory(theory)) => {
            render_theory(&close_conflicts(&theory))
        }
        (Direction::Lp2dl, Input::Program(program)) => render_theory(&lp_to_dl(&program)?),
        (Direction::Explicit, Input::Program(program)) => {
            render_program(&explicit_version(&program)?)
        }
        (direction, Input::Theory(_)) => {
            return Err(Failure::Usage(format!(
                "direction `{}` reads a program file (.lp)",
                direction.name()
            )))
        }
        (direction, Input::Program(_)) => {
            return Err(Failure::Usage(format!(
                "direction `{}` reads a theory file (.dfl)",
                direction.name()
            )))
        }
    };
    print!("{rendered}");
    Ok(())
}

fn cmd_stable(args: StableArgs) -> Result<(), Failure> {
    let sets: BTreeSet<BTreeSet<Literal>> = match load(&args.file)? {
        Input::Theory(theory) => {
            let op = match args.operator.unwrap_or(StableOp::Beta) {
                StableOp::Alpha => OperatorKind::Alpha,
                StableOp::Beta => OperatorKind::Beta,
                StableOp::Gl => {
                    return Err(Failure::Usage(
                        "operator `gl` reads a program file (.lp)".into(),
                    ))
                }
            };
            stable_sets(&theory, op, args.cap)?
        }
        Input::Program(program) => match args.operator.unwrap_or(StableOp::Gl) {
            StableOp::Gl => stable_models_lp(&program, args.cap)?,
            other => {
                return Err(Failure::Usage(format!(
                    "operator `{}` reads a theory file (.dfl)",
                    other.name()
                )))
            }
        },
    };
    let mut rendered: Vec<(String, Vec<String>)> = sets
        .iter()
        .map(|set| (braced(set), sorted_names(set)))
        .collect();
    rendered.sort();
    if args.json {
        let names: Vec<&Vec<String>> = rendered.iter().map(|(_, names)| names).collect();
        println!("{}", json!({ "stable_sets": names }));
    } else {
        let n = rendered.len();
        println!("{n} stable set{}", if n == 1 { "" } else { "s" });
        for (line, _) in &rendered {
            println!("{line}");
        }
    }
    Ok(())
}

/// Splits an optional `+`/`-` polarity prefix off the goal; whatever
/// remains must be a literal (which may itself be negative).
fn parse_goal(goal: &str) -> Result<(Sign, Literal), Failure> {
    let (sign, rest) = if let Some(rest) = goal.strip_prefix('+') {
        (Sign::Plus, rest)
    } else if let Some(rest) = goal.strip_prefix('-') {
        (Sign::Minus, rest)
    } else {
        (Sign::Plus, goal)
    };
    rest.parse::<Literal>()
        .map(|literal| (sign, literal))
        .map_err(|msg| Failure::Usage(format!("bad goal `{goal}`: {msg}")))
}

fn tree_json(tree: &ArgumentTree) -> Value {
    json!({
        "sign": tree.sign.to_string(),
        "literal": tree.literal.to_string(),
        "children": tree.children.iter().map(tree_json).collect::<Vec<Value>>(),
    })
}

fn cmd_prove(args: ProveArgs) -> Result<(), Failure> {
    let Input::Theory(theory) = load(&args.file)? else {
        return Err(Failure::Usage("prove reads a theory file (.dfl)".into()));
    };
    let (sign, literal) = parse_goal(&args.goal)?;
    let variant = match args.logic {
        ProofLogic::Ndl => LogicVariant::Ndl,
        ProofLogic::Adl => LogicVariant::Adl,
    };
    let mut prover = Prover::new(&theory, variant).with_budget(args.budget);
    let outcome = prover.prove(sign, &literal)?;
    if args.json {
        println!(
            "{}",
            json!({
                "goal": format!("{sign}{literal}"),
                "proved": outcome.is_some(),
                "tree": outcome.as_ref().map(tree_json),
            })
        );
    } else {
        match &outcome {
            Some(tree) => {
                println!("proved {sign}{literal}");
                print!("{}", tree.render_indented());
            }
            None => println!("no argument tree for {sign}{literal}"),
        }
    }
    Ok(())
}

fn cmd_fixpoint(args: FixpointArgs) -> Result<(), Failure> {
    let Input::Theory(theory) = load(&args.file)? else {
        return Err(Failure::Usage("fixpoint reads a theory file (.dfl)".into()));
    };
    let op = match args.operator {
        FixOp::Alpha => OperatorKind::Alpha,
        FixOp::Beta => OperatorKind::Beta,
    };
    let run = x_limit(&theory, op)?;
    let model = wfm_via_operator(&theory, op)?;
    let ambiguous = ambiguous_of(theory.literals(), &model);
    if args.json {
        println!(
            "{}",
            json!({
                "trace": run.trace.iter().map(sorted_names).collect::<Vec<Vec<String>>>(),
                "limit": sorted_names(&run.limit),
                "well_founded": sorted_names(&model.well_founded),
                "unfounded": sorted_names(&model.unfounded),
                "ambiguous": sorted_names(&ambiguous),
            })
        );
    } else {
        for (stage, set) in run.trace.iter().enumerate() {
            println!("X^{stage} = {}", bracketed(set));
        }
        println!("limit = {}", bracketed(&run.limit));
        println!("well_founded = {}", bracketed(&model.well_founded));
        println!("unfounded = {}", bracketed(&model.unfounded));
        println!("ambiguous = {}", bracketed(&ambiguous));
    }
    Ok(())
}

fn cmd_check(args: CheckArgs) -> Result<(), Failure> {
    match load_unchecked(&args.file)? {
        Input::Theory(theory) => {
            let violations = validate_theory(&theory);
            if !violations.is_empty() {
                return Err(Failure::Invalid(violations));
            }
            println!(
                "ok: theory with {} rules over {} literals",
                theory.rules().len(),
                theory.literals().len()
            );
        }
        Input::Program(program) => {
            println!(
                "ok: program with {} rules over {} literals",
                program.rules.len(),
                program.literals().len()
            );
        }
    }
    Ok(())
}

fn cmd_scan(args: ScanArgs) -> Result<(), Failure> {
    let config = TheoryConfig::plain_with_conflicts(args.max_atoms);
    let mut vacuous = 0u64;
    let mut capped = 0u64;
    let mut found = 0u64;
    for offset in 0..args.count {
        let seed = args.seed.wrapping_add(offset);
        let theory = random_theory(&config, seed);
        let case_sets = match stable_sets(&theory, OperatorKind::Alpha, args.cap) {
            Ok(sets) => sets,
            Err(EngineError::CapExceeded { .. }) => {
                capped += 1;
                continue;
            }
            Err(err) => return Err(err.into()),
        };
        if case_sets.is_empty() {
            // Refutation-in-all-sets is vacuous here; not a candidate.
            vacuous += 1;
            continue;
        }
        let blocking_sets = match stable_sets(&theory, OperatorKind::Beta, args.cap) {
            Ok(sets) => sets,
            Err(EngineError::CapExceeded { .. }) => {
                capped += 1;
                continue;
            }
            Err(err) => return Err(err.into()),
        };
        for literal in theory.literals() {
            let refuted_by_cases = case_sets.iter().all(|m| !m.contains(literal));
            let alive_under_blocking = blocking_sets.iter().any(|n| n.contains(literal));
            if refuted_by_cases && alive_under_blocking {
                found += 1;
                println!("candidate literal {literal} at seed {seed}:");
                print!("{}", render_theory(&theory));
                println!();
            }
        }
    }
    println!(
        "scanned {} theories: {found} candidate literal(s), {vacuous} with no case-reasoning \
         stable set, {capped} past the cap",
        args.count
    );
    Ok(())
}
