//! Text syntax for polynomials and ideal expressions.
//!
//! ```text
//! expr    ::= sum ('&' sum)*                     '∩' is accepted for '&'
//! sum     ::= quot ('+' quot)*
//! quot    ::= prod (':' pfactor)*
//! prod    ::= power (('*' | '.') power)*
//! power   ::= atom ('^' int)?
//! atom    ::= '(' poly (',' poly)* ')'          ideal literal
//!           | '(' expr ')' | '[' expr ']'        grouping
//!           | 'sat' '(' expr ',' var ')'
//! poly    ::= ('+' | '-')? term (('+' | '-') term)*
//! term    ::= pfactor (('*' | '.') pfactor)*
//! pfactor ::= pbase ('^' int)?
//! pbase   ::= int ('/' int)? | var | '(' poly ')'
//! ```
//!
//! Exponents lie in `1..=64`. Juxtaposition is not multiplication: `x1 x2`
//! is a syntax error. Offsets in errors are byte offsets into the source.

mod ast;
mod eval;
mod lexer;
mod parse;

use std::fmt;

pub use ast::IdealExpr;
pub use eval::{evaluate, evaluate_with, Engine, IdealValue};
pub use parse::{collect_variables, parse, parse_polynomial};

/// Largest exponent accepted by the parser.
pub const MAX_EXPONENT: u32 = 64;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ParseErrorKind {
    Syntax,
    UnknownVariable,
    BadExponent,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ParseError {
    pub kind: ParseErrorKind,
    pub offset: usize,
    pub expected: Vec<String>,
    pub message: String,
}

impl ParseError {
    pub(crate) fn new(
        kind: ParseErrorKind,
        offset: usize,
        expected: Vec<String>,
        message: String,
    ) -> Self {
        ParseError {
            kind,
            offset,
            expected,
            message,
        }
    }
}

impl fmt::Display for ParseError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "at offset {}: {}", self.offset, self.message)?;
        if !self.expected.is_empty() {
            write!(f, " (expected {})", self.expected.join(", "))?;
        }
        Ok(())
    }
}

impl std::error::Error for ParseError {}
