//! Text formats for reversible (`.real`) and quantum (`.qc`) circuits.
//!
//! Both share the same skeleton:
//!
//! ```text
//! # comment
//! .numvars 3
//! .variables a b c
//! .library ncv-v1        (only in .qc files)
//! .begin
//! <one gate per line>
//! .end
//! ```
//!
//! Directives and gate mnemonics are case-insensitive, tokens are separated
//! by whitespace, and both LF and CRLF line endings are accepted. Writers
//! always emit LF. Every parse error carries the 1-based line and column it
//! was detected at.

mod qc;
mod real;

use std::collections::HashMap;
use std::fmt;

use thiserror::Error;

use crate::ir::{IrError, LineId};

pub use qc::{parse_qc, write_qc};
pub use real::{parse_real, write_real};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Position {
    pub line: usize,
    pub column: usize,
}

impl fmt::Display for Position {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "line {}, column {}", self.line, self.column)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum FormatError {
    #[error("{pos}: {message}")]
    Syntax { pos: Position, message: String },
    #[error("{pos}: unknown variable {name:?}")]
    UnknownVariable { pos: Position, name: String },
    #[error("{pos}: variable {name:?} declared twice")]
    DuplicateVariable { pos: Position, name: String },
    #[error("{pos}: expected {expected} operands, found {found}")]
    ArityMismatch { pos: Position, expected: usize, found: usize },
    #[error("{pos}: missing {section}")]
    MissingSection { pos: Position, section: &'static str },
    #[error("{pos}: unknown library {name:?} (expected ncv or ncv-v1)")]
    UnknownLibrary { pos: Position, name: String },
    #[error("{pos}: unsupported feature {feature}")]
    UnsupportedFeature { pos: Position, feature: String },
    #[error("{pos}: {source}")]
    InvalidGate { pos: Position, source: IrError },
}

impl FormatError {
    pub fn position(&self) -> Position {
        match self {
            FormatError::Syntax { pos, .. }
            | FormatError::UnknownVariable { pos, .. }
            | FormatError::DuplicateVariable { pos, .. }
            | FormatError::ArityMismatch { pos, .. }
            | FormatError::MissingSection { pos, .. }
            | FormatError::UnknownLibrary { pos, .. }
            | FormatError::UnsupportedFeature { pos, .. }
            | FormatError::InvalidGate { pos, .. } => *pos,
        }
    }
}

#[derive(Debug, Clone, Copy)]
struct Token<'a> {
    text: &'a str,
    pos: Position,
}

/// Splits a line into tokens, dropping everything from a token that starts
/// with `#`.
fn tokenize(line_no: usize, line: &str) -> Vec<Token<'_>> {
    let mut spans = Vec::new();
    let mut start: Option<usize> = None;
    for (i, c) in line.char_indices() {
        match (c.is_whitespace(), start) {
            (true, Some(s)) => {
                spans.push((s, i));
                start = None;
            }
            (false, None) => start = Some(i),
            _ => {}
        }
    }
    if let Some(s) = start {
        spans.push((s, line.len()));
    }
    spans
        .into_iter()
        .map(|(s, e)| Token {
            text: &line[s..e],
            pos: Position { line: line_no, column: line[..s].chars().count() + 1 },
        })
        .take_while(|t| !t.text.starts_with('#'))
        .collect()
}

fn syntax(pos: Position, message: impl Into<String>) -> FormatError {
    FormatError::Syntax { pos, message: message.into() }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum Stage {
    Header,
    Body,
    Done,
}

/// State shared by both parsers: header directives, variable table and the
/// `.begin` / `.end` bracket.
struct Skeleton<'a> {
    numvars: Option<usize>,
    variables: Option<Vec<String>>,
    index: HashMap<&'a str, usize>,
    stage: Stage,
    last_line: usize,
}

/// What the caller should do with a tokenised line.
enum LineKind<'t, 'a> {
    Handled,
    /// A directive the generic skeleton does not know.
    Directive(&'t [Token<'a>]),
    Gate(&'t [Token<'a>]),
}

impl<'a> Skeleton<'a> {
    fn new() -> Self {
        Skeleton { numvars: None, variables: None, index: HashMap::new(), stage: Stage::Header, last_line: 0 }
    }

    fn process<'t>(&mut self, tokens: &'t [Token<'a>]) -> Result<LineKind<'t, 'a>, FormatError> {
        let Some(first) = tokens.first() else {
            return Ok(LineKind::Handled);
        };
        self.last_line = first.pos.line;
        if self.stage == Stage::Done {
            return Err(syntax(first.pos, "content after .end"));
        }
        if !first.text.starts_with('.') {
            if self.stage != Stage::Body {
                return Err(syntax(first.pos, "gate outside .begin/.end"));
            }
            return Ok(LineKind::Gate(tokens));
        }
        let args = &tokens[1..];
        match first.text.to_ascii_lowercase().as_str() {
            ".version" => self.header_only(first)?,
            ".numvars" => {
                self.header_only(first)?;
                if self.numvars.is_some() {
                    return Err(syntax(first.pos, "duplicate .numvars"));
                }
                let [n] = args else {
                    return Err(FormatError::ArityMismatch { pos: first.pos, expected: 1, found: args.len() });
                };
                match n.text.parse::<usize>() {
                    Ok(v) if v > 0 => self.numvars = Some(v),
                    _ => return Err(syntax(n.pos, format!("invalid line count {:?}", n.text))),
                }
            }
            ".variables" => {
                self.header_only(first)?;
                if self.variables.is_some() {
                    return Err(syntax(first.pos, "duplicate .variables"));
                }
                let n = self.numvars.ok_or(FormatError::MissingSection { pos: first.pos, section: ".numvars" })?;
                if args.len() != n {
                    return Err(FormatError::ArityMismatch { pos: first.pos, expected: n, found: args.len() });
                }
                for (i, t) in args.iter().enumerate() {
                    if self.index.insert(t.text, i).is_some() {
                        return Err(FormatError::DuplicateVariable { pos: t.pos, name: t.text.to_string() });
                    }
                }
                self.variables = Some(args.iter().map(|t| t.text.to_string()).collect());
            }
            ".inputs" | ".outputs" => {
                self.header_only(first)?;
                let n = self.numvars.ok_or(FormatError::MissingSection { pos: first.pos, section: ".numvars" })?;
                if args.len() != n {
                    return Err(FormatError::ArityMismatch { pos: first.pos, expected: n, found: args.len() });
                }
            }
            ".constants" | ".garbage" | ".define" | ".enddefine" => {
                return Err(FormatError::UnsupportedFeature { pos: first.pos, feature: first.text.to_string() });
            }
            ".begin" => {
                self.header_only(first)?;
                self.require_header(first.pos)?;
                self.stage = Stage::Body;
            }
            ".end" => {
                if self.stage != Stage::Body {
                    return Err(FormatError::MissingSection { pos: first.pos, section: ".begin" });
                }
                if !args.is_empty() {
                    return Err(syntax(args[0].pos, "unexpected token after .end"));
                }
                self.stage = Stage::Done;
            }
            _ => return Ok(LineKind::Directive(tokens)),
        }
        Ok(LineKind::Handled)
    }

    fn header_only(&self, tok: &Token<'_>) -> Result<(), FormatError> {
        if self.stage == Stage::Header {
            Ok(())
        } else {
            Err(syntax(tok.pos, format!("{} is only allowed before .begin", tok.text)))
        }
    }

    fn require_header(&self, pos: Position) -> Result<(), FormatError> {
        if self.numvars.is_none() {
            return Err(FormatError::MissingSection { pos, section: ".numvars" });
        }
        if self.variables.is_none() {
            return Err(FormatError::MissingSection { pos, section: ".variables" });
        }
        Ok(())
    }

    fn finish(self) -> Result<Vec<String>, FormatError> {
        let pos = Position { line: self.last_line + 1, column: 1 };
        match self.stage {
            Stage::Header => {
                self.require_header(pos)?;
                Err(FormatError::MissingSection { pos, section: ".begin" })
            }
            Stage::Body => Err(FormatError::MissingSection { pos, section: ".end" }),
            Stage::Done => Ok(self.variables.expect("checked at .begin")),
        }
    }

    fn line(&self, tok: &Token<'_>) -> Result<LineId, FormatError> {
        self.index
            .get(tok.text)
            .map(|&i| LineId(i))
            .ok_or_else(|| FormatError::UnknownVariable { pos: tok.pos, name: tok.text.to_string() })
    }
}

fn write_header(out: &mut String, names: &[String]) {
    out.push_str(&format!(".numvars {}\n", names.len()));
    out.push_str(".variables");
    for n in names {
        out.push(' ');
        out.push_str(n);
    }
    out.push('\n');
}
