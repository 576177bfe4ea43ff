use std::fmt::Write as _;

use crate::error::{Error, Result};
use crate::poly::VarSet;

/// Exponent vector `x_0^{e_0} ... x_{n-1}^{e_{n-1}}` over some [`VarSet`].
///
/// The inherent arithmetic methods assume equal lengths; the free functions
/// [`mono_divides`] and [`mono_lcm`] check it.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Monomial(Vec<u32>);

impl Monomial {
    pub fn new(exponents: Vec<u32>) -> Self {
        Monomial(exponents)
    }

    pub fn one(nvars: usize) -> Self {
        Monomial(vec![0; nvars])
    }

    pub fn var(nvars: usize, index: usize) -> Self {
        let mut e = vec![0; nvars];
        e[index] = 1;
        Monomial(e)
    }

    pub fn exponents(&self) -> &[u32] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn degree(&self) -> u64 {
        self.0.iter().map(|&e| e as u64).sum()
    }

    pub fn is_one(&self) -> bool {
        self.0.iter().all(|&e| e == 0)
    }

    pub fn divides(&self, other: &Monomial) -> bool {
        debug_assert_eq!(self.len(), other.len());
        self.0.iter().zip(&other.0).all(|(a, b)| a <= b)
    }

    pub fn lcm(&self, other: &Monomial) -> Monomial {
        debug_assert_eq!(self.len(), other.len());
        Monomial(self.0.iter().zip(&other.0).map(|(a, b)| *a.max(b)).collect())
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        debug_assert_eq!(self.len(), other.len());
        Monomial(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }

    pub fn pow(&self, n: u32) -> Monomial {
        Monomial(self.0.iter().map(|a| a * n).collect())
    }

    /// `self / other`, or `None` when `other` does not divide `self`.
    pub fn div(&self, other: &Monomial) -> Option<Monomial> {
        debug_assert_eq!(self.len(), other.len());
        self.0
            .iter()
            .zip(&other.0)
            .map(|(a, b)| a.checked_sub(*b))
            .collect::<Option<Vec<_>>>()
            .map(Monomial)
    }

    pub fn is_coprime(&self, other: &Monomial) -> bool {
        self.0.iter().zip(&other.0).all(|(a, b)| *a == 0 || *b == 0)
    }

    pub fn with_exponent(&self, index: usize, e: u32) -> Monomial {
        let mut out = self.clone();
        out.0[index] = e;
        out
    }

    /// Renders with `*` between factors (`x1^2*x3`), `1` for the unit.
    pub fn render(&self, ring: &VarSet) -> String {
        self.render_with(ring, "*")
    }

    /// Renders with `.` between factors, the notation used in proof tables.
    pub fn render_dotted(&self, ring: &VarSet) -> String {
        self.render_with(ring, ".")
    }

    fn render_with(&self, ring: &VarSet, sep: &str) -> String {
        let mut out = String::new();
        for (i, &e) in self.0.iter().enumerate() {
            if e == 0 {
                continue;
            }
            if !out.is_empty() {
                out.push_str(sep);
            }
            out.push_str(ring.name(i));
            if e > 1 {
                let _ = write!(out, "^{e}");
            }
        }
        if out.is_empty() {
            out.push('1');
        }
        out
    }
}

fn check_arity(a: &Monomial, b: &Monomial) -> Result<()> {
    if a.len() == b.len() {
        Ok(())
    } else {
        Err(Error::ArityMismatch(a.len(), b.len()))
    }
}

/// True iff every exponent of `a` is at most the matching exponent of `b`.
pub fn mono_divides(a: &Monomial, b: &Monomial) -> Result<bool> {
    check_arity(a, b)?;
    Ok(a.divides(b))
}

/// Componentwise maximum.
pub fn mono_lcm(a: &Monomial, b: &Monomial) -> Result<Monomial> {
    check_arity(a, b)?;
    Ok(a.lcm(b))
}
