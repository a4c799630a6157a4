//! Plain-text formats for defeasible theories and normal logic programs.
//!
//! Two line-oriented formats share one lexer. Both use `%` for
//! end-of-line comments and terminate every statement with `.`.
//!
//! **Theory format** (conventionally `.dfl`):
//!
//! ```text
//! r1: true -> nixon.            % strict fact ("true" stands for the empty body)
//! r4: quaker => dove.           % defeasible rule
//! r5: republican ~> -dove.      % defeater
//! conflict {dove, hawk}.        % declares {dove, hawk} contradictory
//! prefer r4 > r5.               % r4 beats r5 when they compete
//! ```
//!
//! Rule ids are optional; a rule without one is named `r<n>` by its
//! 1-based position in the file. The minimal conflict sets `{p, -p}`
//! are implicit and never need to be written.
//!
//! **Program format** (conventionally `.lp`):
//!
//! ```text
//! p :- q, not r.                % derive p if q is derived and r never is
//! q.                            % fact
//! ```
//!
//! Program literals may also carry the `-` sign (`-p :- not p.`); the
//! program semantics treats `-p` as just another symbol.
//!
//! [`render_theory`] and [`render_program`] invert the parsers:
//! `parse(render(x)) == x` for every value the library can produce.

use std::collections::BTreeSet;
use std::fmt;

use crate::syntax::{
    is_valid_name, DLRule, DefeasibleTheory, LPRule, Literal, NormalProgram, RuleKind,
};

/// A syntax error in one of the text formats, with a 1-based source
/// position.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
#[error("line {line}, column {col}: {message}")]
pub struct ParseError {
    /// 1-based line of the offending token or character.
    pub line: usize,
    /// 1-based column of the offending token or character.
    pub col: usize,
    /// What went wrong, phrased in terms of the input.
    pub message: String,
}

impl ParseError {
    fn new(line: usize, col: usize, message: impl Into<String>) -> Self {
        ParseError {
            line,
            col,
            message: message.into(),
        }
    }
}

/// Which of the two text formats to lex. The formats disagree on `:`
/// (id separator vs. start of `:-`) and on whether `->` is an arrow.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum Format {
    Theory,
    Program,
}

#[derive(Debug, Clone, PartialEq, Eq)]
enum Tok {
    Ident(String),
    Minus,
    Comma,
    Period,
    LBrace,
    RBrace,
    Colon,
    Gt,
    Arrow(RuleKind),
    ImpliedBy,
}

impl fmt::Display for Tok {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Tok::Ident(name) => write!(f, "`{name}`"),
            Tok::Minus => write!(f, "`-`"),
            Tok::Comma => write!(f, "`,`"),
            Tok::Period => write!(f, "`.`"),
            Tok::LBrace => write!(f, "`{{`"),
            Tok::RBrace => write!(f, "`}}`"),
            Tok::Colon => write!(f, "`:`"),
            Tok::Gt => write!(f, "`>`"),
            Tok::Arrow(kind) => write!(f, "`{}`", kind.arrow()),
            Tok::ImpliedBy => write!(f, "`:-`"),
        }
    }
}

#[derive(Debug, Clone)]
struct Token {
    tok: Tok,
    line: usize,
    col: usize,
}

struct Lexer<'a> {
    chars: std::iter::Peekable<std::str::Chars<'a>>,
    line: usize,
    col: usize,
}

impl<'a> Lexer<'a> {
    fn new(input: &'a str) -> Self {
        Lexer {
            chars: input.chars().peekable(),
            line: 1,
            col: 1,
        }
    }

    fn peek(&mut self) -> Option<char> {
        self.chars.peek().copied()
    }

    fn bump(&mut self) -> Option<char> {
        let c = self.chars.next()?;
        if c == '\n' {
            self.line += 1;
            self.col = 1;
        } else {
            self.col += 1;
        }
        Some(c)
    }
}

/// Lexes `input`, returning the tokens plus the end-of-input position
/// (used to report errors about truncated statements).
fn tokenize(input: &str, format: Format) -> Result<(Vec<Token>, (usize, usize)), ParseError> {
    let mut lx = Lexer::new(input);
    let mut tokens = Vec::new();
    while let Some(c) = lx.peek() {
        let (line, col) = (lx.line, lx.col);
        let push = |tokens: &mut Vec<Token>, tok: Tok| tokens.push(Token { tok, line, col });
        match c {
            c if c.is_whitespace() => {
                lx.bump();
            }
            '%' => {
                while let Some(c) = lx.bump() {
                    if c == '\n' {
                        break;
                    }
                }
            }
            ',' => {
                lx.bump();
                push(&mut tokens, Tok::Comma);
            }
            '.' => {
                lx.bump();
                push(&mut tokens, Tok::Period);
            }
            '{' => {
                lx.bump();
                push(&mut tokens, Tok::LBrace);
            }
            '}' => {
                lx.bump();
                push(&mut tokens, Tok::RBrace);
            }
            '>' => {
                lx.bump();
                push(&mut tokens, Tok::Gt);
            }
            '-' => {
                lx.bump();
                if format == Format::Theory && lx.peek() == Some('>') {
                    lx.bump();
                    push(&mut tokens, Tok::Arrow(RuleKind::Strict));
                } else {
                    push(&mut tokens, Tok::Minus);
                }
            }
            '=' => {
                lx.bump();
                if format == Format::Theory && lx.peek() == Some('>') {
                    lx.bump();
                    push(&mut tokens, Tok::Arrow(RuleKind::Defeasible));
                } else {
                    return Err(ParseError::new(line, col, "expected `>` after `=`"));
                }
            }
            '~' => {
                lx.bump();
                if format == Format::Theory && lx.peek() == Some('>') {
                    lx.bump();
                    push(&mut tokens, Tok::Arrow(RuleKind::Defeater));
                } else {
                    return Err(ParseError::new(line, col, "expected `>` after `~`"));
                }
            }
            ':' => {
                lx.bump();
                match format {
                    Format::Theory => push(&mut tokens, Tok::Colon),
                    Format::Program => {
                        if lx.peek() == Some('-') {
                            lx.bump();
                            push(&mut tokens, Tok::ImpliedBy);
                        } else {
                            return Err(ParseError::new(line, col, "expected `-` after `:`"));
                        }
                    }
                }
            }
            c if c.is_ascii_alphabetic() || c == '_' => {
                let mut name = String::new();
                while let Some(c) = lx.peek() {
                    if c.is_ascii_alphanumeric() || c == '_' {
                        name.push(c);
                        lx.bump();
                    } else {
                        break;
                    }
                }
                push(&mut tokens, Tok::Ident(name));
            }
            other => {
                return Err(ParseError::new(
                    line,
                    col,
                    format!("unexpected character `{other}`"),
                ));
            }
        }
    }
    Ok((tokens, (lx.line, lx.col)))
}

struct Parser {
    tokens: Vec<Token>,
    pos: usize,
    eof: (usize, usize),
}

impl Parser {
    fn new(tokens: Vec<Token>, eof: (usize, usize)) -> Self {
        Parser {
            tokens,
            pos: 0,
            eof,
        }
    }

    fn peek(&self) -> Option<&Tok> {
        self.tokens.get(self.pos).map(|t| &t.tok)
    }

    fn peek2(&self) -> Option<&Tok> {
        self.tokens.get(self.pos + 1).map(|t| &t.tok)
    }

    fn bump(&mut self) -> Option<Token> {
        let token = self.tokens.get(self.pos).cloned();
        if token.is_some() {
            self.pos += 1;
        }
        token
    }

    /// Position of the next token, or of end-of-input.
    fn here(&self) -> (usize, usize) {
        self.tokens
            .get(self.pos)
            .map(|t| (t.line, t.col))
            .unwrap_or(self.eof)
    }

    fn err_here(&self, message: impl Into<String>) -> ParseError {
        let (line, col) = self.here();
        ParseError::new(line, col, message)
    }

    fn expect(&mut self, want: Tok, context: &str) -> Result<Token, ParseError> {
        match self.peek() {
            Some(tok) if *tok == want => Ok(self.bump().expect("peeked token exists")),
            Some(tok) => Err(self.err_here(format!("expected {want} {context}, found {tok}"))),
            None => Err(self.err_here(format!(
                "expected {want} {context}, found end of input"
            ))),
        }
    }

    fn peek_is_ident(&self, name: &str) -> bool {
        matches!(self.peek(), Some(Tok::Ident(id)) if id == name)
    }

    /// Parses `-? ident` into a literal, rejecting reserved words.
    fn literal(&mut self) -> Result<Literal, ParseError> {
        let negative = if self.peek() == Some(&Tok::Minus) {
            self.bump();
            true
        } else {
            false
        };
        match self.peek().cloned() {
            Some(Tok::Ident(name)) => {
                if !is_valid_name(&name) {
                    return Err(
                        self.err_here(format!("`{name}` is a reserved word, not an atom"))
                    );
                }
                self.bump();
                Ok(if negative {
                    Literal::neg(name)
                } else {
                    Literal::pos(name)
                })
            }
            Some(tok) => Err(self.err_here(format!("expected a literal, found {tok}"))),
            None => Err(self.err_here("expected a literal, found end of input")),
        }
    }

    /// Parses an identifier usable as a rule id.
    fn rule_name(&mut self, context: &str) -> Result<String, ParseError> {
        match self.peek().cloned() {
            Some(Tok::Ident(name)) => {
                if !is_valid_name(&name) {
                    return Err(self.err_here(format!(
                        "`{name}` is a reserved word, not a rule id"
                    )));
                }
                self.bump();
                Ok(name)
            }
            Some(tok) => Err(self.err_here(format!("expected a rule id {context}, found {tok}"))),
            None => Err(self.err_here(format!(
                "expected a rule id {context}, found end of input"
            ))),
        }
    }
}

/// Parses the theory format.
///
/// Every statement is a rule (`[id:] body (->|=>|~>) head.` with `true`
/// or nothing for an empty body), a conflict declaration
/// (`conflict {a, b}.`), or a priority declaration
/// (`prefer better > worse.`). Rules without an explicit id are named
/// `r<n>` by their 1-based position among the file's rules.
///
/// The result always carries the minimal conflict sets `{p, -p}`; the
/// parser itself imposes no other well-formedness (duplicate ids,
/// priorities naming missing or strict rules, and priority cycles are
/// reported by [`crate::syntax::validate_theory`], not here).
pub fn parse_theory(input: &str) -> Result<DefeasibleTheory, ParseError> {
    let (tokens, eof) = tokenize(input, Format::Theory)?;
    let mut p = Parser::new(tokens, eof);
    let mut rules: Vec<DLRule> = Vec::new();
    let mut conflicts: Vec<BTreeSet<Literal>> = Vec::new();
    let mut priority: Vec<(String, String)> = Vec::new();

    while p.peek().is_some() {
        if p.peek_is_ident("conflict") {
            p.bump();
            p.expect(Tok::LBrace, "after `conflict`")?;
            let mut set = BTreeSet::new();
            set.insert(p.literal()?);
            while p.peek() == Some(&Tok::Comma) {
                p.bump();
                set.insert(p.literal()?);
            }
            p.expect(Tok::RBrace, "to close the conflict set")?;
            p.expect(Tok::Period, "after the conflict declaration")?;
            conflicts.push(set);
        } else if p.peek_is_ident("prefer") {
            p.bump();
            let superior = p.rule_name("after `prefer`")?;
            p.expect(Tok::Gt, "between the rule ids")?;
            let inferior = p.rule_name("after `>`")?;
            p.expect(Tok::Period, "after the priority declaration")?;
            priority.push((inferior, superior));
        } else {
            let rule = parse_rule(&mut p, rules.len() + 1)?;
            rules.push(rule);
        }
    }
    Ok(DefeasibleTheory::new(rules, conflicts, priority))
}

fn parse_rule(p: &mut Parser, position: usize) -> Result<DLRule, ParseError> {
    // An `ident :` prefix is an explicit rule id; `:` cannot occur
    // anywhere else in a rule.
    let id = if matches!(p.peek(), Some(Tok::Ident(_))) && p.peek2() == Some(&Tok::Colon) {
        let id = p.rule_name("before `:`")?;
        p.bump(); // the colon
        id
    } else {
        format!("r{position}")
    };

    let mut body: Vec<Literal> = Vec::new();
    if p.peek_is_ident("true") {
        p.bump();
    } else if !matches!(p.peek(), Some(Tok::Arrow(_))) {
        body.push(p.literal()?);
        while p.peek() == Some(&Tok::Comma) {
            p.bump();
            body.push(p.literal()?);
        }
    }

    let kind = match p.peek() {
        Some(&Tok::Arrow(kind)) => {
            p.bump();
            kind
        }
        Some(tok) => {
            return Err(p.err_here(format!(
                "expected `->`, `=>`, or `~>` after the rule body, found {tok}"
            )));
        }
        None => {
            return Err(p.err_here(
                "expected `->`, `=>`, or `~>` after the rule body, found end of input",
            ));
        }
    };

    let head = p.literal()?;
    p.expect(Tok::Period, "after the rule head")?;
    Ok(DLRule::new(id, kind, body, head))
}

/// Parses the program format: statements `head.` and
/// `head :- a, not b, ... .` where each body item is a literal
/// optionally prefixed with `not`.
pub fn parse_program(input: &str) -> Result<NormalProgram, ParseError> {
    let (tokens, eof) = tokenize(input, Format::Program)?;
    let mut p = Parser::new(tokens, eof);
    let mut rules: Vec<LPRule> = Vec::new();

    while p.peek().is_some() {
        let head = p.literal()?;
        if p.peek() == Some(&Tok::Period) {
            p.bump();
            rules.push(LPRule::fact(head));
            continue;
        }
        p.expect(Tok::ImpliedBy, "or `.` after the rule head")?;
        let mut pos_body: Vec<Literal> = Vec::new();
        let mut neg_body: Vec<Literal> = Vec::new();
        loop {
            if p.peek_is_ident("not") {
                p.bump();
                neg_body.push(p.literal()?);
            } else {
                pos_body.push(p.literal()?);
            }
            if p.peek() == Some(&Tok::Comma) {
                p.bump();
            } else {
                break;
            }
        }
        p.expect(Tok::Period, "after the rule body")?;
        rules.push(LPRule::new(head, pos_body, neg_body));
    }
    Ok(NormalProgram::new(rules))
}

/// True for the implicit conflict sets `{p, -p}`.
fn is_minimal_pair(set: &BTreeSet<Literal>) -> bool {
    if set.len() != 2 {
        return false;
    }
    let mut it = set.iter();
    let first = it.next().expect("two-element set");
    let second = it.next().expect("two-element set");
    first.complement() == *second
}

/// Renders a theory in the format [`parse_theory`] reads:
/// rules first (in order, with their ids), then conflict declarations,
/// then priority declarations.
///
/// Minimal conflict sets `{p, -p}` are left implicit except when one is
/// the only mention of its atom — dropping it would shrink the
/// theory's literal universe.
pub fn render_theory(theory: &DefeasibleTheory) -> String {
    let mut out = String::new();
    for rule in theory.rules() {
        out.push_str(&format!("{rule}.\n"));
    }

    // Atoms already kept alive by rules or by conflict sets we will
    // print anyway.
    let mut covered: BTreeSet<&str> = BTreeSet::new();
    for rule in theory.rules() {
        covered.insert(rule.head.atom());
        for lit in &rule.body {
            covered.insert(lit.atom());
        }
    }
    for set in theory.conflicts() {
        if !is_minimal_pair(set) {
            for lit in set {
                covered.insert(lit.atom());
            }
        }
    }

    for set in theory.conflicts() {
        let needed = if is_minimal_pair(set) {
            let atom = set.iter().next().expect("non-empty set").atom();
            !covered.contains(atom)
        } else {
            true
        };
        if needed {
            for lit in set {
                covered.insert(lit.atom());
            }
            let rendered: Vec<String> = set.iter().map(Literal::to_string).collect();
            out.push_str(&format!("conflict {{{}}}.\n", rendered.join(", ")));
        }
    }

    for (inferior, superior) in theory.priority() {
        out.push_str(&format!("prefer {superior} > {inferior}.\n"));
    }
    out
}

/// Renders a program in the format [`parse_program`] reads.
pub fn render_program(program: &NormalProgram) -> String {
    let mut out = String::new();
    for rule in &program.rules {
        out.push_str(&format!("{rule}.\n"));
    }
    out
}
