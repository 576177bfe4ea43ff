use std::fmt;

use num_traits::One;

use super::ast::IdealExpr;
use crate::error::{Error, Result};
use crate::groebner::PolyIdeal;
use crate::monomial_ideal::MonomialIdeal;
use crate::poly::{Monomial, MonomialOrder, Polynomial, VarSet};

/// Which ideal engine evaluates an expression.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Engine {
    /// Monomial engine when every polynomial is a monic monomial, otherwise
    /// Groebner.
    Auto,
    Monomial,
    Groebner,
}

#[derive(Clone, Debug)]
pub enum IdealValue {
    Monomial(MonomialIdeal),
    Poly(PolyIdeal),
}

impl IdealValue {
    pub fn ring(&self) -> &VarSet {
        match self {
            IdealValue::Monomial(m) => m.ring(),
            IdealValue::Poly(p) => p.ring(),
        }
    }

    pub fn to_poly_ideal(&self) -> PolyIdeal {
        match self {
            IdealValue::Monomial(m) => PolyIdeal::from_monomial_ideal(m),
            IdealValue::Poly(p) => p.clone(),
        }
    }

    pub fn equals(&self, other: &IdealValue) -> Result<bool> {
        match (self, other) {
            (IdealValue::Monomial(a), IdealValue::Monomial(b)) => a.equals(b),
            _ => self.to_poly_ideal().equals(&other.to_poly_ideal()),
        }
    }

    /// Canonical generators: minimal monomials, or the reduced grevlex basis.
    pub fn canonical_generators(&self) -> Vec<Polynomial> {
        match self {
            IdealValue::Monomial(m) => m.to_polynomials(),
            IdealValue::Poly(p) => p.groebner_basis(MonomialOrder::GrevLex).to_vec(),
        }
    }
}

impl fmt::Display for IdealValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            IdealValue::Monomial(m) => write!(f, "{m}"),
            IdealValue::Poly(p) => write!(f, "{p}"),
        }
    }
}

pub fn evaluate(ast: &IdealExpr, ring: &VarSet) -> Result<IdealValue> {
    evaluate_with(ast, ring, Engine::Auto)
}

pub fn evaluate_with(ast: &IdealExpr, ring: &VarSet, engine: Engine) -> Result<IdealValue> {
    for f in ast.polynomials() {
        f.ensure_ring(ring)?;
    }
    let monomial = ast.polynomials().into_iter().all(|f| monic_monomial(f).is_some());
    match engine {
        Engine::Monomial if !monomial => Err(Error::InvalidArgument(
            "expression has non-monomial polynomials".into(),
        )),
        Engine::Monomial => eval_mono(ast, ring).map(IdealValue::Monomial),
        Engine::Auto if monomial => eval_mono(ast, ring).map(IdealValue::Monomial),
        Engine::Auto | Engine::Groebner => eval_poly(ast, ring).map(IdealValue::Poly),
    }
}

fn monic_monomial(f: &Polynomial) -> Option<&Monomial> {
    match f.terms() {
        [(m, c)] if c.is_one() => Some(m),
        _ => None,
    }
}

fn fold<T>(xs: &[IdealExpr], mut each: impl FnMut(&IdealExpr) -> Result<T>, op: impl Fn(&T, &T) -> Result<T>) -> Result<T> {
    let mut acc = each(&xs[0])?;
    for x in &xs[1..] {
        acc = op(&acc, &each(x)?)?;
    }
    Ok(acc)
}

fn eval_mono(ast: &IdealExpr, ring: &VarSet) -> Result<MonomialIdeal> {
    let rec = |e: &IdealExpr| eval_mono(e, ring);
    match ast {
        IdealExpr::Literal(ps) => MonomialIdeal::minimal_generators(
            ring,
            ps.iter()
                .map(|p| monic_monomial(p).expect("checked monomial").clone()),
        ),
        IdealExpr::Product(xs) => fold(xs, rec, MonomialIdeal::product),
        IdealExpr::Intersection(xs) => fold(xs, rec, MonomialIdeal::intersect),
        IdealExpr::Sum(xs) => fold(xs, rec, MonomialIdeal::sum),
        IdealExpr::Power(x, n) => rec(x)?.power(*n),
        IdealExpr::Quotient(x, f) => {
            rec(x)?.quotient_by_monomial(monic_monomial(f).expect("checked monomial"))
        }
        IdealExpr::SaturateVar(x, v) => rec(x)?.saturate_variable(v),
    }
}

fn eval_poly(ast: &IdealExpr, ring: &VarSet) -> Result<PolyIdeal> {
    let rec = |e: &IdealExpr| eval_poly(e, ring);
    match ast {
        IdealExpr::Literal(ps) => PolyIdeal::new(ring, ps.clone()),
        IdealExpr::Product(xs) => fold(xs, rec, PolyIdeal::product),
        IdealExpr::Intersection(xs) => fold(xs, rec, PolyIdeal::intersect),
        IdealExpr::Sum(xs) => fold(xs, rec, PolyIdeal::sum),
        IdealExpr::Power(x, n) => rec(x)?.power(*n),
        IdealExpr::Quotient(x, f) => rec(x)?.quotient_by_poly(f),
        IdealExpr::SaturateVar(x, v) => {
            let var = Polynomial::var(ring, v)?;
            rec(x)?.saturate_by_poly(&var)
        }
    }
}
