use std::fmt;

use crate::poly::{is_identifier, Polynomial};

/// Parsed ideal expression. Every polynomial lives in the ring it was
/// parsed against.
#[derive(Clone, Debug, PartialEq)]
pub enum IdealExpr {
    Literal(Vec<Polynomial>),
    Product(Vec<IdealExpr>),
    Power(Box<IdealExpr>, u32),
    Intersection(Vec<IdealExpr>),
    Sum(Vec<IdealExpr>),
    Quotient(Box<IdealExpr>, Polynomial),
    SaturateVar(Box<IdealExpr>, String),
}

impl IdealExpr {
    fn precedence(&self) -> u8 {
        match self {
            IdealExpr::Intersection(_) => 1,
            IdealExpr::Sum(_) => 2,
            IdealExpr::Quotient(..) => 3,
            IdealExpr::Product(_) => 4,
            IdealExpr::Power(..) => 5,
            IdealExpr::Literal(_) | IdealExpr::SaturateVar(..) => 6,
        }
    }

    /// All polynomials appearing in literals and quotients.
    pub fn polynomials(&self) -> Vec<&Polynomial> {
        let mut out = Vec::new();
        self.visit(&mut |e| match e {
            IdealExpr::Literal(ps) => out.extend(ps.iter()),
            IdealExpr::Quotient(_, f) => out.push(f),
            _ => {}
        });
        out
    }

    fn visit<'a>(&'a self, f: &mut impl FnMut(&'a IdealExpr)) {
        f(self);
        match self {
            IdealExpr::Literal(_) => {}
            IdealExpr::Product(xs) | IdealExpr::Intersection(xs) | IdealExpr::Sum(xs) => {
                for x in xs {
                    x.visit(f);
                }
            }
            IdealExpr::Power(x, _) | IdealExpr::Quotient(x, _) | IdealExpr::SaturateVar(x, _) => {
                x.visit(f)
            }
        }
    }

    fn child(&self, f: &mut fmt::Formatter<'_>, child: &IdealExpr) -> fmt::Result {
        if child.precedence() <= self.precedence() {
            write!(f, "[{child}]")
        } else {
            write!(f, "{child}")
        }
    }

    fn nary(&self, f: &mut fmt::Formatter<'_>, xs: &[IdealExpr], sep: &str) -> fmt::Result {
        for (i, x) in xs.iter().enumerate() {
            if i > 0 {
                f.write_str(sep)?;
            }
            self.child(f, x)?;
        }
        Ok(())
    }
}

/// Prints in the input syntax; grouping uses brackets so that the output
/// reparses to the same tree.
impl fmt::Display for IdealExpr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            IdealExpr::Literal(ps) => {
                f.write_str("(")?;
                for (i, p) in ps.iter().enumerate() {
                    if i > 0 {
                        f.write_str(", ")?;
                    }
                    write!(f, "{p}")?;
                }
                f.write_str(")")
            }
            IdealExpr::Product(xs) => self.nary(f, xs, " * "),
            IdealExpr::Intersection(xs) => self.nary(f, xs, " & "),
            IdealExpr::Sum(xs) => self.nary(f, xs, " + "),
            IdealExpr::Power(x, n) => {
                self.child(f, x)?;
                write!(f, "^{n}")
            }
            IdealExpr::Quotient(x, p) => {
                self.child(f, x)?;
                let s = p.to_string();
                let bare = is_identifier(&s) || s.bytes().all(|b| b.is_ascii_digit());
                if bare {
                    write!(f, " : {s}")
                } else {
                    write!(f, " : ({s})")
                }
            }
            IdealExpr::SaturateVar(x, v) => write!(f, "sat({x}, {v})"),
        }
    }
}
