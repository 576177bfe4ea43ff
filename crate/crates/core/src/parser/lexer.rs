use num_bigint::BigInt;

use super::{ParseError, ParseErrorKind};

#[derive(Clone, Debug, PartialEq, Eq)]
pub(crate) enum Tok {
    Ident(String),
    Int(BigInt),
    LParen,
    RParen,
    LBracket,
    RBracket,
    Comma,
    Plus,
    Minus,
    Star,
    Dot,
    Slash,
    Caret,
    Amp,
    Colon,
    End,
}

impl Tok {
    pub(crate) fn describe(&self) -> String {
        match self {
            Tok::Ident(s) => format!("identifier `{s}`"),
            Tok::Int(n) => format!("integer `{n}`"),
            Tok::End => "end of input".into(),
            other => format!("`{}`", other.symbol()),
        }
    }

    fn symbol(&self) -> &'static str {
        match self {
            Tok::LParen => "(",
            Tok::RParen => ")",
            Tok::LBracket => "[",
            Tok::RBracket => "]",
            Tok::Comma => ",",
            Tok::Plus => "+",
            Tok::Minus => "-",
            Tok::Star => "*",
            Tok::Dot => ".",
            Tok::Slash => "/",
            Tok::Caret => "^",
            Tok::Amp => "&",
            Tok::Colon => ":",
            Tok::Ident(_) | Tok::Int(_) | Tok::End => "",
        }
    }
}

/// A token with the byte offset where it starts.
#[derive(Clone, Debug)]
pub(crate) struct Spanned {
    pub tok: Tok,
    pub offset: usize,
}

pub(crate) fn tokenize(src: &str) -> Result<Vec<Spanned>, ParseError> {
    let mut out = Vec::new();
    let mut chars = src.char_indices().peekable();
    while let Some(&(offset, c)) = chars.peek() {
        if c.is_whitespace() {
            chars.next();
            continue;
        }
        let tok = if c.is_ascii_alphabetic() || c == '_' {
            let mut s = String::new();
            while let Some(&(_, d)) = chars.peek() {
                if d.is_ascii_alphanumeric() || d == '_' {
                    s.push(d);
                    chars.next();
                } else {
                    break;
                }
            }
            Tok::Ident(s)
        } else if c.is_ascii_digit() {
            let mut s = String::new();
            while let Some(&(_, d)) = chars.peek() {
                if d.is_ascii_digit() {
                    s.push(d);
                    chars.next();
                } else {
                    break;
                }
            }
            Tok::Int(s.parse().expect("ascii digits"))
        } else {
            chars.next();
            match c {
                '(' => Tok::LParen,
                ')' => Tok::RParen,
                '[' => Tok::LBracket,
                ']' => Tok::RBracket,
                ',' => Tok::Comma,
                '+' => Tok::Plus,
                '-' => Tok::Minus,
                '*' | '·' => Tok::Star,
                '.' => Tok::Dot,
                '/' => Tok::Slash,
                '^' => Tok::Caret,
                '&' | '∩' => Tok::Amp,
                ':' => Tok::Colon,
                _ => {
                    return Err(ParseError::new(
                        ParseErrorKind::Syntax,
                        offset,
                        Vec::new(),
                        format!("unexpected character {c:?}"),
                    ))
                }
            }
        };
        out.push(Spanned { tok, offset });
    }
    out.push(Spanned {
        tok: Tok::End,
        offset: src.len(),
    });
    Ok(out)
}
