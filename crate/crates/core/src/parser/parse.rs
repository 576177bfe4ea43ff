use std::collections::HashMap;

use num_rational::BigRational;
use num_traits::{ToPrimitive, Zero};

use super::ast::IdealExpr;
use super::lexer::{tokenize, Spanned, Tok};
use super::{ParseError, ParseErrorKind, MAX_EXPONENT};
use crate::poly::{Polynomial, VarSet};

type PResult<T> = Result<T, ParseError>;

/// Parses an ideal expression over `ring`.
pub fn parse(src: &str, ring: &VarSet) -> PResult<IdealExpr> {
    let mut p = Parser::new(src, ring)?;
    let e = p.expr()?;
    p.finish(&["`&`", "`+`", "`:`", "`*`", "`^`"])?;
    Ok(e)
}

/// Parses a single polynomial over `ring`.
pub fn parse_polynomial(src: &str, ring: &VarSet) -> PResult<Polynomial> {
    let mut p = Parser::new(src, ring)?;
    let f = p.poly()?;
    p.finish(&["`+`", "`-`", "`*`", "`^`"])?;
    Ok(f)
}

/// Identifiers of an expression in order of first appearance, skipping the
/// `sat` keyword.
pub fn collect_variables(src: &str) -> PResult<Vec<String>> {
    let toks = tokenize(src)?;
    let mut out: Vec<String> = Vec::new();
    for (i, t) in toks.iter().enumerate() {
        if let Tok::Ident(name) = &t.tok {
            let keyword = name == "sat" && matches!(toks.get(i + 1).map(|t| &t.tok), Some(Tok::LParen));
            if !keyword && !out.contains(name) {
                out.push(name.clone());
            }
        }
    }
    Ok(out)
}

struct Parser<'r> {
    toks: Vec<Spanned>,
    pos: usize,
    ring: &'r VarSet,
    poly_memo: HashMap<usize, PResult<(Polynomial, usize)>>,
    paren_memo: HashMap<usize, PResult<(IdealExpr, usize)>>,
}

fn syntax(offset: usize, expected: &[&str], message: String) -> ParseError {
    ParseError::new(
        ParseErrorKind::Syntax,
        offset,
        expected.iter().map(|s| s.to_string()).collect(),
        message,
    )
}

impl<'r> Parser<'r> {
    fn new(src: &str, ring: &'r VarSet) -> PResult<Self> {
        Ok(Parser {
            toks: tokenize(src)?,
            pos: 0,
            ring,
            poly_memo: HashMap::new(),
            paren_memo: HashMap::new(),
        })
    }

    fn peek(&self) -> &Tok {
        &self.toks[self.pos].tok
    }

    fn peek_at(&self, k: usize) -> &Tok {
        &self.toks[(self.pos + k).min(self.toks.len() - 1)].tok
    }

    fn offset(&self) -> usize {
        self.toks[self.pos].offset
    }

    fn bump(&mut self) -> Tok {
        let t = self.toks[self.pos].tok.clone();
        if self.pos + 1 < self.toks.len() {
            self.pos += 1;
        }
        t
    }

    fn unexpected(&self, expected: &[&str]) -> ParseError {
        syntax(
            self.offset(),
            expected,
            format!("unexpected {}", self.peek().describe()),
        )
    }

    fn expect(&mut self, tok: Tok, name: &str) -> PResult<()> {
        if *self.peek() == tok {
            self.bump();
            Ok(())
        } else {
            Err(self.unexpected(&[name]))
        }
    }

    fn finish(&self, more: &[&str]) -> PResult<()> {
        if *self.peek() == Tok::End {
            Ok(())
        } else {
            let mut expected = more.to_vec();
            expected.push("end of input");
            Err(self.unexpected(&expected))
        }
    }

    fn expr(&mut self) -> PResult<IdealExpr> {
        let mut items = vec![self.sum()?];
        while *self.peek() == Tok::Amp {
            self.bump();
            items.push(self.sum()?);
        }
        Ok(collapse(items, IdealExpr::Intersection))
    }

    fn sum(&mut self) -> PResult<IdealExpr> {
        let mut items = vec![self.quot()?];
        while *self.peek() == Tok::Plus {
            self.bump();
            items.push(self.quot()?);
        }
        Ok(collapse(items, IdealExpr::Sum))
    }

    fn quot(&mut self) -> PResult<IdealExpr> {
        let mut e = self.prod()?;
        while *self.peek() == Tok::Colon {
            self.bump();
            let f = self.pfactor()?;
            e = IdealExpr::Quotient(Box::new(e), f);
        }
        Ok(e)
    }

    fn prod(&mut self) -> PResult<IdealExpr> {
        let mut items = vec![self.power()?];
        while matches!(self.peek(), Tok::Star | Tok::Dot) {
            self.bump();
            items.push(self.power()?);
        }
        Ok(collapse(items, IdealExpr::Product))
    }

    fn power(&mut self) -> PResult<IdealExpr> {
        let a = self.atom()?;
        if *self.peek() == Tok::Caret {
            self.bump();
            let n = self.exponent()?;
            return Ok(IdealExpr::Power(Box::new(a), n));
        }
        Ok(a)
    }

    fn atom(&mut self) -> PResult<IdealExpr> {
        match self.peek().clone() {
            Tok::LBracket => {
                self.bump();
                let e = self.expr()?;
                self.expect(Tok::RBracket, "`]`")?;
                Ok(e)
            }
            Tok::Ident(name) if name == "sat" && *self.peek_at(1) == Tok::LParen => {
                self.bump();
                self.bump();
                let e = self.expr()?;
                self.expect(Tok::Comma, "`,`")?;
                let off = self.offset();
                let var = match self.bump() {
                    Tok::Ident(v) => v,
                    _ => {
                        self.pos -= 1;
                        return Err(self.unexpected(&["variable"]));
                    }
                };
                if !self.ring.contains(&var) {
                    return Err(unknown_variable(off, &var));
                }
                self.expect(Tok::RParen, "`)`")?;
                Ok(IdealExpr::SaturateVar(Box::new(e), var))
            }
            Tok::LParen => self.paren(),
            _ => Err(self.unexpected(&["`(`", "`[`", "`sat(`"])),
        }
    }

    /// `(` starts either an ideal literal or a grouped expression; the
    /// literal reading is tried first.
    fn paren(&mut self) -> PResult<IdealExpr> {
        let start = self.pos;
        if let Some(r) = self.paren_memo.get(&start) {
            return r.clone().map(|(e, end)| {
                self.pos = end;
                e
            });
        }
        self.bump();
        let literal = self.literal_body();
        let result = match literal {
            Ok(e) => Ok((e, self.pos)),
            Err(lit_err) => {
                self.pos = start + 1;
                let grouped = self.expr().and_then(|e| {
                    self.expect(Tok::RParen, "`)`")?;
                    Ok(e)
                });
                match grouped {
                    Ok(e) => Ok((e, self.pos)),
                    Err(g_err) if g_err.offset > lit_err.offset => Err(g_err),
                    Err(_) => Err(lit_err),
                }
            }
        };
        self.paren_memo.insert(start, result.clone());
        result.map(|(e, end)| {
            self.pos = end;
            e
        })
    }

    fn literal_body(&mut self) -> PResult<IdealExpr> {
        let mut gens = vec![self.poly()?];
        loop {
            match self.peek() {
                Tok::Comma => {
                    self.bump();
                    gens.push(self.poly()?);
                }
                Tok::RParen => {
                    self.bump();
                    return Ok(IdealExpr::Literal(gens));
                }
                _ => return Err(self.unexpected(&["`,`", "`)`", "`+`", "`-`", "`*`", "`^`"])),
            }
        }
    }

    fn poly(&mut self) -> PResult<Polynomial> {
        let start = self.pos;
        if let Some(r) = self.poly_memo.get(&start) {
            return r.clone().map(|(f, end)| {
                self.pos = end;
                f
            });
        }
        let result = self.poly_uncached().map(|f| (f, self.pos));
        self.poly_memo.insert(start, result.clone());
        result.map(|(f, end)| {
            self.pos = end;
            f
        })
    }

    fn poly_uncached(&mut self) -> PResult<Polynomial> {
        let negate = match self.peek() {
            Tok::Minus => {
                self.bump();
                true
            }
            Tok::Plus => {
                self.bump();
                false
            }
            _ => false,
        };
        let first = self.term()?;
        let mut acc = if negate { -first } else { first };
        loop {
            match self.peek() {
                Tok::Plus => {
                    self.bump();
                    acc = &acc + &self.term()?;
                }
                Tok::Minus => {
                    self.bump();
                    acc = &acc - &self.term()?;
                }
                _ => return Ok(acc),
            }
        }
    }

    fn term(&mut self) -> PResult<Polynomial> {
        let mut acc = self.pfactor()?;
        while matches!(self.peek(), Tok::Star | Tok::Dot) {
            self.bump();
            acc = &acc * &self.pfactor()?;
        }
        Ok(acc)
    }

    fn pfactor(&mut self) -> PResult<Polynomial> {
        let base = self.pbase()?;
        if *self.peek() == Tok::Caret {
            self.bump();
            let n = self.exponent()?;
            return Ok(base.pow(n));
        }
        Ok(base)
    }

    fn pbase(&mut self) -> PResult<Polynomial> {
        let off = self.offset();
        match self.peek().clone() {
            Tok::Int(n) => {
                self.bump();
                let mut value = BigRational::from_integer(n);
                if *self.peek() == Tok::Slash {
                    self.bump();
                    let d_off = self.offset();
                    let Tok::Int(d) = self.peek().clone() else {
                        return Err(self.unexpected(&["integer"]));
                    };
                    self.bump();
                    if d.is_zero() {
                        return Err(syntax(d_off, &[], "division by zero".into()));
                    }
                    value /= BigRational::from_integer(d);
                }
                Ok(Polynomial::constant(self.ring, value))
            }
            Tok::Ident(name) => {
                self.bump();
                Polynomial::var(self.ring, &name).map_err(|_| unknown_variable(off, &name))
            }
            Tok::LParen => {
                self.bump();
                let f = self.poly()?;
                self.expect(Tok::RParen, "`)`")?;
                Ok(f)
            }
            _ => Err(syntax(
                off,
                &["polynomial"],
                format!("unexpected {}", self.peek().describe()),
            )),
        }
    }

    fn exponent(&mut self) -> PResult<u32> {
        let off = self.offset();
        match self.peek().clone() {
            Tok::Int(n) => {
                self.bump();
                match n.to_u32() {
                    Some(e) if (1..=MAX_EXPONENT).contains(&e) => Ok(e),
                    _ => Err(bad_exponent(off, &n.to_string())),
                }
            }
            Tok::Minus => Err(bad_exponent(off, "negative")),
            _ => Err(self.unexpected(&["integer"])),
        }
    }
}

fn collapse(mut items: Vec<IdealExpr>, make: fn(Vec<IdealExpr>) -> IdealExpr) -> IdealExpr {
    if items.len() == 1 {
        items.pop().expect("one item")
    } else {
        make(items)
    }
}

fn unknown_variable(offset: usize, name: &str) -> ParseError {
    ParseError::new(
        ParseErrorKind::UnknownVariable,
        offset,
        Vec::new(),
        format!("unknown variable `{name}`"),
    )
}

fn bad_exponent(offset: usize, shown: &str) -> ParseError {
    ParseError::new(
        ParseErrorKind::BadExponent,
        offset,
        vec![format!("integer in 1..={MAX_EXPONENT}")],
        format!("exponent {shown} out of range"),
    )
}
