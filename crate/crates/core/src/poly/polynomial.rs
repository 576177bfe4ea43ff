use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::poly::{Monomial, MonomialOrder, VarSet};

/// Sparse multivariate polynomial with exact rational coefficients.
///
/// Terms are kept sorted in descending order under `order`, with no zero
/// coefficients, so the leading term is `terms[0]`. Arithmetic operators
/// panic when the operands live in different rings; the ideal engines check
/// rings up front and report [`Error::RingMismatch`] instead.
#[derive(Clone)]
pub struct Polynomial {
    ring: VarSet,
    order: MonomialOrder,
    terms: Vec<(Monomial, BigRational)>,
}

pub fn rat(n: i64) -> BigRational {
    BigRational::from_integer(BigInt::from(n))
}

impl Polynomial {
    pub fn zero(ring: &VarSet) -> Self {
        Polynomial {
            ring: ring.clone(),
            order: MonomialOrder::default(),
            terms: Vec::new(),
        }
    }

    pub fn one(ring: &VarSet) -> Self {
        Self::constant(ring, BigRational::one())
    }

    pub fn constant(ring: &VarSet, c: BigRational) -> Self {
        Self::term(ring, Monomial::one(ring.len()), c)
    }

    pub fn term(ring: &VarSet, m: Monomial, c: BigRational) -> Self {
        assert_eq!(m.len(), ring.len(), "monomial arity does not match ring");
        let mut p = Self::zero(ring);
        if !c.is_zero() {
            p.terms.push((m, c));
        }
        p
    }

    pub fn monomial(ring: &VarSet, m: Monomial) -> Self {
        Self::term(ring, m, BigRational::one())
    }

    pub fn var(ring: &VarSet, name: &str) -> Result<Self> {
        let i = ring.require(name)?;
        Ok(Self::monomial(ring, Monomial::var(ring.len(), i)))
    }

    /// Builds a polynomial from arbitrary terms, merging duplicates.
    pub fn from_terms<I>(ring: &VarSet, terms: I) -> Self
    where
        I: IntoIterator<Item = (Monomial, BigRational)>,
    {
        let mut raw: Vec<(Monomial, BigRational)> = terms.into_iter().collect();
        let order = MonomialOrder::default();
        raw.sort_by(|a, b| order.cmp(&b.0, &a.0));
        let mut out: Vec<(Monomial, BigRational)> = Vec::with_capacity(raw.len());
        for (m, c) in raw {
            assert_eq!(m.len(), ring.len(), "monomial arity does not match ring");
            match out.last_mut() {
                Some((lm, lc)) if *lm == m => *lc += c,
                _ => out.push((m, c)),
            }
        }
        out.retain(|(_, c)| !c.is_zero());
        Polynomial {
            ring: ring.clone(),
            order,
            terms: out,
        }
    }

    pub fn ring(&self) -> &VarSet {
        &self.ring
    }

    pub fn order(&self) -> MonomialOrder {
        self.order
    }

    pub fn terms(&self) -> &[(Monomial, BigRational)] {
        &self.terms
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_constant(&self) -> bool {
        self.terms.iter().all(|(m, _)| m.is_one())
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1 && self.terms[0].0.is_one() && self.terms[0].1.is_one()
    }

    /// The monomial, if `self` is a single term with coefficient 1.
    pub fn as_monomial(&self) -> Option<&Monomial> {
        match self.terms.as_slice() {
            [(m, c)] if c.is_one() => Some(m),
            _ => None,
        }
    }

    pub fn total_degree(&self) -> Option<u64> {
        self.terms.iter().map(|(m, _)| m.degree()).max()
    }

    /// Re-sorts the terms under `order`.
    pub fn with_order(mut self, order: MonomialOrder) -> Self {
        if self.order != order {
            self.terms.sort_by(|a, b| order.cmp(&b.0, &a.0));
            self.order = order;
        }
        self
    }

    /// Maximal term under `ord`.
    pub fn leading_term(&self, ord: MonomialOrder) -> Result<(Monomial, BigRational)> {
        let t = if ord == self.order {
            self.terms.first()
        } else {
            self.terms.iter().max_by(|a, b| ord.cmp(&a.0, &b.0))
        };
        t.cloned().ok_or(Error::ZeroPolynomial)
    }

    /// Leading monomial under the stored order. Panics on zero.
    pub fn lm(&self) -> &Monomial {
        &self.terms[0].0
    }

    /// Leading coefficient under the stored order. Panics on zero.
    pub fn lc(&self) -> &BigRational {
        &self.terms[0].1
    }

    pub fn scale(&self, c: &BigRational) -> Self {
        if c.is_zero() {
            return Self::zero(&self.ring).with_order(self.order);
        }
        Polynomial {
            ring: self.ring.clone(),
            order: self.order,
            terms: self.terms.iter().map(|(m, a)| (m.clone(), a * c)).collect(),
        }
    }

    /// Divides through by the leading coefficient; zero stays zero.
    pub fn monic(&self) -> Self {
        match self.terms.first() {
            Some((_, c)) if !c.is_one() => self.scale(&c.recip()),
            _ => self.clone(),
        }
    }

    pub fn mul_term(&self, m: &Monomial, c: &BigRational) -> Self {
        if c.is_zero() {
            return Self::zero(&self.ring).with_order(self.order);
        }
        Polynomial {
            ring: self.ring.clone(),
            order: self.order,
            terms: self
                .terms
                .iter()
                .map(|(tm, tc)| (tm.mul(m), tc * c))
                .collect(),
        }
    }

    pub fn pow(&self, n: u32) -> Self {
        let mut acc = Self::one(&self.ring).with_order(self.order);
        for _ in 0..n {
            acc = &acc * self;
        }
        acc
    }

    /// `self -= c * m * g` in place, merging sorted term lists.
    pub(crate) fn sub_mul_term(&mut self, c: &BigRational, m: &Monomial, g: &Polynomial) {
        debug_assert_eq!(self.order, g.order);
        let order = self.order;
        let old = std::mem::take(&mut self.terms);
        let mut out = Vec::with_capacity(old.len() + g.terms.len());
        let mut a = old.into_iter().peekable();
        let mut b = g.terms.iter().map(|(gm, gc)| (gm.mul(m), gc * c)).peekable();
        loop {
            match (a.peek(), b.peek()) {
                (Some(x), Some(y)) => match order.cmp(&x.0, &y.0) {
                    Ordering::Greater => out.push(a.next().unwrap()),
                    Ordering::Less => {
                        let (ym, yc) = b.next().unwrap();
                        out.push((ym, -yc));
                    }
                    Ordering::Equal => {
                        let (xm, xc) = a.next().unwrap();
                        let (_, yc) = b.next().unwrap();
                        let s = xc - yc;
                        if !s.is_zero() {
                            out.push((xm, s));
                        }
                    }
                },
                (Some(_), None) => out.push(a.next().unwrap()),
                (None, Some(_)) => {
                    let (ym, yc) = b.next().unwrap();
                    out.push((ym, -yc));
                }
                (None, None) => break,
            }
        }
        self.terms = out;
    }

    pub(crate) fn push_smallest_term(&mut self, m: Monomial, c: BigRational) {
        debug_assert!(self
            .terms
            .last()
            .is_none_or(|(l, _)| self.order.cmp(l, &m) == Ordering::Greater));
        self.terms.push((m, c));
    }

    pub(crate) fn pop_leading(&mut self) -> Option<(Monomial, BigRational)> {
        if self.terms.is_empty() {
            None
        } else {
            Some(self.terms.remove(0))
        }
    }

    pub fn evaluate(&self, point: &[BigRational]) -> Result<BigRational> {
        if point.len() != self.ring.len() {
            return Err(Error::ArityMismatch(point.len(), self.ring.len()));
        }
        let mut acc = BigRational::zero();
        for (m, c) in &self.terms {
            let mut t = c.clone();
            for (x, &e) in point.iter().zip(m.exponents()) {
                if e > 0 {
                    t *= num_traits::pow(x.clone(), e as usize);
                }
            }
            acc += t;
        }
        Ok(acc)
    }

    pub fn derivative(&self, var: usize) -> Self {
        let terms = self.terms.iter().filter_map(|(m, c)| {
            let e = m.exponents()[var];
            (e > 0).then(|| (m.with_exponent(var, e - 1), c * rat(e as i64)))
        });
        Self::from_terms(&self.ring, terms).with_order(self.order)
    }

    /// Replaces the variable at `var` by the constant `value` (same ring).
    pub fn substitute(&self, var: usize, value: &BigRational) -> Self {
        let terms = self.terms.iter().map(|(m, c)| {
            let e = m.exponents()[var];
            let factor = num_traits::pow(value.clone(), e as usize);
            (m.with_exponent(var, 0), c * factor)
        });
        Self::from_terms(&self.ring, terms).with_order(self.order)
    }

    pub fn involves(&self, var: usize) -> bool {
        self.terms.iter().any(|(m, _)| m.exponents()[var] > 0)
    }

    /// Moves the polynomial into `target`, matching variables by name.
    /// Fails if a variable occurring in `self` is missing from `target`.
    pub fn to_ring(&self, target: &VarSet) -> Result<Self> {
        if *target == self.ring {
            return Ok(self.clone());
        }
        let mut map = Vec::with_capacity(self.ring.len());
        for (i, name) in self.ring.names().iter().enumerate() {
            let idx = target.index_of(name);
            if idx.is_none() && self.involves(i) {
                return Err(Error::UnknownVariable(name.clone()));
            }
            map.push(idx);
        }
        let terms = self.terms.iter().map(|(m, c)| {
            let mut e = vec![0; target.len()];
            for (i, &x) in m.exponents().iter().enumerate() {
                if let Some(j) = map[i] {
                    e[j] = x;
                }
            }
            (Monomial::new(e), c.clone())
        });
        Ok(Self::from_terms(target, terms).with_order(self.order))
    }

    pub(crate) fn ensure_ring(&self, ring: &VarSet) -> Result<()> {
        self.ring.ensure_same(ring)
    }

    /// True iff every coefficient is an integer.
    pub fn has_integer_coefficients(&self) -> bool {
        self.terms.iter().all(|(_, c)| c.is_integer())
    }

    fn merge(&self, other: &Self, negate: bool) -> Self {
        assert!(
            self.ring == other.ring,
            "polynomial ring mismatch: [{}] vs [{}]",
            self.ring,
            other.ring
        );
        let mut out = self.clone();
        let other = other.clone().with_order(self.order);
        let one = Monomial::one(self.ring.len());
        let c = if negate { BigRational::one() } else { -BigRational::one() };
        out.sub_mul_term(&c, &one, &other);
        out
    }
}

impl PartialEq for Polynomial {
    fn eq(&self, other: &Self) -> bool {
        if self.ring != other.ring || self.terms.len() != other.terms.len() {
            return false;
        }
        if self.order == other.order {
            self.terms == other.terms
        } else {
            let other = other.clone().with_order(self.order);
            self.terms == other.terms
        }
    }
}

impl Eq for Polynomial {}

impl<'a> Add<&'a Polynomial> for &'a Polynomial {
    type Output = Polynomial;
    fn add(self, rhs: &Polynomial) -> Polynomial {
        self.merge(rhs, false)
    }
}

impl<'a> Sub<&'a Polynomial> for &'a Polynomial {
    type Output = Polynomial;
    fn sub(self, rhs: &Polynomial) -> Polynomial {
        self.merge(rhs, true)
    }
}

impl<'a> Mul<&'a Polynomial> for &'a Polynomial {
    type Output = Polynomial;
    fn mul(self, rhs: &Polynomial) -> Polynomial {
        assert!(
            self.ring == rhs.ring,
            "polynomial ring mismatch: [{}] vs [{}]",
            self.ring,
            rhs.ring
        );
        let terms = self
            .terms
            .iter()
            .flat_map(|(a, x)| rhs.terms.iter().map(move |(b, y)| (a.mul(b), x * y)));
        Polynomial::from_terms(&self.ring, terms).with_order(self.order)
    }
}

impl Neg for &Polynomial {
    type Output = Polynomial;
    fn neg(self) -> Polynomial {
        self.scale(&-BigRational::one())
    }
}

macro_rules! forward_owned {
    ($tr:ident, $f:ident) => {
        impl $tr<Polynomial> for Polynomial {
            type Output = Polynomial;
            fn $f(self, rhs: Polynomial) -> Polynomial {
                (&self).$f(&rhs)
            }
        }
    };
}
forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

impl Neg for Polynomial {
    type Output = Polynomial;
    fn neg(self) -> Polynomial {
        -&self
    }
}

fn fmt_coeff(c: &BigRational) -> String {
    if c.is_integer() {
        c.numer().to_string()
    } else {
        format!("{}/{}", c.numer(), c.denom())
    }
}

impl fmt::Display for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        for (i, (m, c)) in self.terms.iter().enumerate() {
            let neg = c.is_negative();
            let abs = c.abs();
            match (i, neg) {
                (0, true) => f.write_str("-")?,
                (0, false) => {}
                (_, true) => f.write_str(" - ")?,
                (_, false) => f.write_str(" + ")?,
            }
            if m.is_one() {
                f.write_str(&fmt_coeff(&abs))?;
            } else if abs.is_one() {
                f.write_str(&m.render(&self.ring))?;
            } else {
                write!(f, "{}*{}", fmt_coeff(&abs), m.render(&self.ring))?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Polynomial[{}]({})", self.ring, self)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ring() -> VarSet {
        VarSet::new(["x1", "x2", "x3"]).unwrap()
    }

    #[test]
    fn leading_terms() {
        let r = VarSet::new(["x1", "x2", "u", "v"]).unwrap();
        let x1 = Polynomial::var(&r, "x1").unwrap();
        let x2 = Polynomial::var(&r, "x2").unwrap();
        let u = Polynomial::var(&r, "u").unwrap();
        let v = Polynomial::var(&r, "v").unwrap();
        let f = &(&x2 * &v) - &(&x1 * &u);
        let (m, c) = f.leading_term(MonomialOrder::Lex).unwrap();
        assert_eq!(m, Monomial::new(vec![1, 0, 1, 0]));
        assert_eq!(c, rat(-1));

        let k = Polynomial::constant(&r, rat(7));
        assert_eq!(
            k.leading_term(MonomialOrder::GrevLex).unwrap(),
            (Monomial::one(4), rat(7))
        );
        assert_eq!(
            Polynomial::zero(&r).leading_term(MonomialOrder::Lex),
            Err(Error::ZeroPolynomial)
        );

        let r = ring();
        let x1 = Polynomial::var(&r, "x1").unwrap();
        let x2 = Polynomial::var(&r, "x2").unwrap();
        let g = &(&(&x1 * &x1) * &x2) + &x2.pow(3);
        assert_eq!(
            g.leading_term(MonomialOrder::GrevLex).unwrap(),
            (Monomial::new(vec![2, 1, 0]), rat(1))
        );
    }

    #[test]
    fn arithmetic_cancels_exactly() {
        let r = ring();
        let x = Polynomial::var(&r, "x1").unwrap();
        let y = Polynomial::var(&r, "x2").unwrap();
        let sq = (&x + &y).pow(2);
        let expanded = &(&(&x * &x) + &(&x * &y).scale(&rat(2))) + &(&y * &y);
        assert_eq!(sq, expanded);
        assert!((&sq - &expanded).is_zero());
        assert_eq!(format!("{}", &x - &y.scale(&BigRational::new(3.into(), 2.into()))), "x1 - 3/2*x2");
    }

    #[test]
    fn derivative_evaluate_substitute() {
        let r = ring();
        let x = Polynomial::var(&r, "x1").unwrap();
        let z = Polynomial::var(&r, "x3").unwrap();
        let f = &x.pow(3) * &z; // x1^3 x3
        assert_eq!(f.derivative(0), &x.pow(2).scale(&rat(3)) * &z);
        assert_eq!(f.evaluate(&[rat(2), rat(5), rat(-1)]).unwrap(), rat(-8));
        assert_eq!(f.substitute(2, &rat(2)), x.pow(3).scale(&rat(2)));
    }

    #[test]
    fn ring_transfer() {
        let r = ring();
        let big = r.extended(&["u"]).unwrap();
        let f = &Polynomial::var(&r, "x1").unwrap() + &Polynomial::one(&r);
        let g = f.to_ring(&big).unwrap();
        assert_eq!(g.ring(), &big);
        assert_eq!(g.to_ring(&r).unwrap(), f);
        let u = Polynomial::var(&big, "u").unwrap();
        assert_eq!(u.to_ring(&r), Err(Error::UnknownVariable("u".into())));
    }
}
