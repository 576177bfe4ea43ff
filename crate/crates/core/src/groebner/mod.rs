//! Groebner bases over the rationals and the ideal operations built on them.
//!
//! Every operation reduces to a reduced Groebner basis computation:
//! intersections and saturations go through an auxiliary variable that is
//! then eliminated with a block order.

mod buchberger;
mod stats;

use std::collections::HashMap;
use std::fmt;
use std::sync::{Arc, Mutex};

use num_rational::BigRational;
use num_traits::Zero;

use crate::error::{Error, Result};
use crate::linalg;
use crate::monomial_ideal::MonomialIdeal;
use crate::poly::{divide, divide_sorted, MonomialOrder, Polynomial, VarSet};

pub use stats::{engine_stats, EngineStats};

/// A point with rational coordinates, one per ring variable.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PointQ(pub Vec<BigRational>);

impl PointQ {
    pub fn origin(ring: &VarSet) -> Self {
        PointQ(vec![BigRational::zero(); ring.len()])
    }

    pub fn from_ints(coords: &[i64]) -> Self {
        PointQ(coords.iter().map(|&c| crate::poly::rat(c)).collect())
    }
}

/// An ideal of a polynomial ring, given by generators.
///
/// Reduced Groebner bases are computed lazily and cached per monomial order.
pub struct PolyIdeal {
    ring: VarSet,
    gens: Vec<Polynomial>,
    cache: Mutex<HashMap<MonomialOrder, Arc<[Polynomial]>>>,
}

impl Clone for PolyIdeal {
    fn clone(&self) -> Self {
        PolyIdeal {
            ring: self.ring.clone(),
            gens: self.gens.clone(),
            cache: Mutex::new(self.cache.lock().expect("cache lock").clone()),
        }
    }
}

impl fmt::Debug for PolyIdeal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "PolyIdeal[{}]{}", self.ring, self)
    }
}

impl fmt::Display for PolyIdeal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("(")?;
        for (i, g) in self.gens.iter().enumerate() {
            if i > 0 {
                f.write_str(", ")?;
            }
            write!(f, "{g}")?;
        }
        f.write_str(")")
    }
}

impl PolyIdeal {
    /// Zero generators are dropped.
    pub fn new(ring: &VarSet, gens: Vec<Polynomial>) -> Result<Self> {
        for g in &gens {
            g.ensure_ring(ring)?;
        }
        Ok(PolyIdeal {
            ring: ring.clone(),
            gens: gens.into_iter().filter(|g| !g.is_zero()).collect(),
            cache: Mutex::new(HashMap::new()),
        })
    }

    pub fn zero(ring: &VarSet) -> Self {
        PolyIdeal {
            ring: ring.clone(),
            gens: Vec::new(),
            cache: Mutex::new(HashMap::new()),
        }
    }

    pub fn unit(ring: &VarSet) -> Self {
        Self::principal(&Polynomial::one(ring))
    }

    pub fn principal(f: &Polynomial) -> Self {
        Self::new(f.ring(), vec![f.clone()]).expect("same ring")
    }

    pub fn from_monomial_ideal(m: &MonomialIdeal) -> Self {
        Self::new(m.ring(), m.to_polynomials()).expect("same ring")
    }

    /// Ideal generated by the named variables.
    pub fn from_vars(ring: &VarSet, names: &[&str]) -> Result<Self> {
        let gens = names
            .iter()
            .map(|n| Polynomial::var(ring, n))
            .collect::<Result<Vec<_>>>()?;
        Self::new(ring, gens)
    }

    pub fn ring(&self) -> &VarSet {
        &self.ring
    }

    pub fn gens(&self) -> &[Polynomial] {
        &self.gens
    }

    /// Reduced Groebner basis under `ord`: monic, sorted by leading monomial
    /// (descending), independent of generator order.
    pub fn groebner_basis(&self, ord: MonomialOrder) -> Arc<[Polynomial]> {
        if let Some(gb) = self.cache.lock().expect("cache lock").get(&ord) {
            return gb.clone();
        }
        let gb: Arc<[Polynomial]> = buchberger::reduced_basis(&self.ring, &self.gens, ord, false)
            .into_iter()
            .map(|e| e.poly)
            .collect();
        self.cache
            .lock()
            .expect("cache lock")
            .entry(ord)
            .or_insert(gb)
            .clone()
    }

    pub fn is_zero(&self) -> bool {
        self.gens.is_empty()
    }

    pub fn is_unit(&self) -> bool {
        let gb = self.groebner_basis(MonomialOrder::GrevLex);
        gb.len() == 1 && gb[0].is_one()
    }

    fn check(&self, f: &Polynomial) -> Result<()> {
        f.ensure_ring(&self.ring)
    }

    fn check_ideal(&self, other: &PolyIdeal) -> Result<()> {
        self.ring.ensure_same(&other.ring)
    }

    /// Membership: the normal form modulo the grevlex basis vanishes.
    pub fn contains(&self, f: &Polynomial) -> Result<bool> {
        self.contains_with(f, MonomialOrder::GrevLex)
    }

    pub fn contains_with(&self, f: &Polynomial, ord: MonomialOrder) -> Result<bool> {
        self.check(f)?;
        let gb = self.groebner_basis(ord);
        Ok(divide_sorted(f.clone().with_order(ord), &gb, false)
            .remainder
            .is_zero())
    }

    /// Cofactors `c` with `f = sum(c[i] * gens()[i])`, or `None` when `f` is
    /// not in the ideal.
    pub fn member_cofactors(&self, f: &Polynomial) -> Result<Option<Vec<Polynomial>>> {
        self.check(f)?;
        let ord = MonomialOrder::GrevLex;
        let basis = buchberger::reduced_basis(&self.ring, &self.gens, ord, true);
        let (r, _) = buchberger::reduce(
            buchberger::Element {
                poly: f.clone().with_order(ord),
                cofactors: Some(
                    self.gens
                        .iter()
                        .map(|_| Polynomial::zero(&self.ring).with_order(ord))
                        .collect(),
                ),
            },
            &basis,
        );
        if !r.poly.is_zero() {
            return Ok(None);
        }
        // reduce() tracks f - r = -sum(...) relative to the starting cofactors
        Ok(Some(
            r.cofactors
                .expect("tracked")
                .into_iter()
                .map(|c| -c)
                .collect(),
        ))
    }

    pub fn is_subset_of(&self, other: &PolyIdeal) -> Result<bool> {
        self.check_ideal(other)?;
        for g in &self.gens {
            if !other.contains(g)? {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// Equality by comparing reduced grevlex bases.
    pub fn equals(&self, other: &PolyIdeal) -> Result<bool> {
        self.equals_with(other, MonomialOrder::GrevLex)
    }

    pub fn equals_with(&self, other: &PolyIdeal, ord: MonomialOrder) -> Result<bool> {
        self.check_ideal(other)?;
        Ok(*self.groebner_basis(ord) == *other.groebner_basis(ord))
    }

    pub fn sum(&self, other: &PolyIdeal) -> Result<Self> {
        self.check_ideal(other)?;
        Self::new(
            &self.ring,
            self.gens.iter().chain(&other.gens).cloned().collect(),
        )
    }

    pub fn product(&self, other: &PolyIdeal) -> Result<Self> {
        self.check_ideal(other)?;
        let gens = self
            .gens
            .iter()
            .flat_map(|a| other.gens.iter().map(move |b| a * b))
            .collect();
        Self::new(&self.ring, gens)
    }

    pub fn power(&self, n: u32) -> Result<Self> {
        if n == 0 {
            return Err(Error::InvalidArgument("ideal power must be positive".into()));
        }
        let mut acc = self.clone();
        for _ in 1..n {
            acc = acc.product(self)?;
        }
        Ok(acc)
    }

    /// Adds `extra` polynomials (already in `self`'s ring).
    pub fn with_generators(&self, extra: &[Polynomial]) -> Result<Self> {
        let mut gens = self.gens.clone();
        gens.extend(extra.iter().cloned());
        Self::new(&self.ring, gens)
    }

    /// Moves the ideal into another ring, matching variables by name.
    pub fn to_ring(&self, target: &VarSet) -> Result<Self> {
        let gens = self
            .gens
            .iter()
            .map(|g| g.to_ring(target))
            .collect::<Result<Vec<_>>>()?;
        Self::new(target, gens)
    }

    /// `I ∩ J = (t I + (1 - t) J) ∩ k[ring]`.
    pub fn intersect(&self, other: &PolyIdeal) -> Result<Self> {
        self.check_ideal(other)?;
        let t_name = self.ring.fresh_name("t");
        let ext = self.ring.reordered_front(std::slice::from_ref(&t_name))?;
        let t = Polynomial::var(&ext, &t_name)?;
        let one_minus_t = &Polynomial::one(&ext) - &t;
        let mut gens = Vec::with_capacity(self.gens.len() + other.gens.len());
        for g in &self.gens {
            gens.push(&t * &g.to_ring(&ext)?);
        }
        for g in &other.gens {
            gens.push(&one_minus_t * &g.to_ring(&ext)?);
        }
        let kept = eliminate_front(&ext, &gens, 1);
        let back = kept
            .iter()
            .map(|g| g.to_ring(&self.ring))
            .collect::<Result<Vec<_>>>()?;
        Self::new(&self.ring, back)
    }

    /// `(I : f) = { g : g f ∈ I }`, as `(I ∩ (f)) / f`.
    pub fn quotient_by_poly(&self, f: &Polynomial) -> Result<Self> {
        self.check(f)?;
        if f.is_zero() {
            return Err(Error::ZeroPolynomial);
        }
        let meet = self.intersect(&PolyIdeal::principal(f))?;
        let mut gens = Vec::with_capacity(meet.gens.len());
        for g in &meet.gens {
            let d = divide(g, std::slice::from_ref(f), MonomialOrder::GrevLex)?;
            if !d.remainder.is_zero() {
                return Err(Error::InvalidArgument(format!(
                    "inexact division of {g} by {f}"
                )));
            }
            gens.push(d.quotients.into_iter().next().expect("one divisor"));
        }
        Self::new(&self.ring, gens)
    }

    /// `(I : f^∞) = (I + (w f - 1)) ∩ k[ring]`.
    pub fn saturate_by_poly(&self, f: &Polynomial) -> Result<Self> {
        self.check(f)?;
        if f.is_zero() {
            return Err(Error::ZeroPolynomial);
        }
        let w_name = self.ring.fresh_name("w");
        let ext = self.ring.reordered_front(std::slice::from_ref(&w_name))?;
        let mut gens = self
            .gens
            .iter()
            .map(|g| g.to_ring(&ext))
            .collect::<Result<Vec<_>>>()?;
        gens.push(rabinowitsch(&ext, &w_name, f)?);
        let kept = eliminate_front(&ext, &gens, 1);
        let back = kept
            .iter()
            .map(|g| g.to_ring(&self.ring))
            .collect::<Result<Vec<_>>>()?;
        Self::new(&self.ring, back)
    }

    /// `I ∩ k[ring \ vars]`, kept in the same ring.
    pub fn eliminate(&self, vars: &[&str]) -> Result<Self> {
        for v in vars {
            self.ring.require(v)?;
        }
        let mut uniq: Vec<String> = Vec::with_capacity(vars.len());
        for v in vars {
            if !uniq.iter().any(|u| u == v) {
                uniq.push(v.to_string());
            }
        }
        if vars.is_empty() {
            return Ok(self.clone());
        }
        let ext = self.ring.reordered_front(&uniq)?;
        if uniq.len() >= self.ring.len() {
            return Err(Error::InvalidArgument(
                "cannot eliminate every variable".into(),
            ));
        }
        let gens = self
            .gens
            .iter()
            .map(|g| g.to_ring(&ext))
            .collect::<Result<Vec<_>>>()?;
        let kept = eliminate_front(&ext, &gens, uniq.len());
        let back = kept
            .iter()
            .map(|g| g.to_ring(&self.ring))
            .collect::<Result<Vec<_>>>()?;
        Self::new(&self.ring, back)
    }

    /// `f ∈ rad(I)` iff `1 ∈ I + (w f - 1)`.
    pub fn radical_member(&self, f: &Polynomial) -> Result<bool> {
        self.check(f)?;
        let w_name = self.ring.fresh_name("w");
        let ext = self.ring.reordered_front(std::slice::from_ref(&w_name))?;
        let mut gens = self
            .gens
            .iter()
            .map(|g| g.to_ring(&ext))
            .collect::<Result<Vec<_>>>()?;
        gens.push(rabinowitsch(&ext, &w_name, f)?);
        Ok(PolyIdeal::new(&ext, gens)?.is_unit())
    }

    /// Substitutes constants for the assigned variables; the result lives in
    /// the ring without them.
    pub fn specialize(&self, assignments: &[(&str, BigRational)]) -> Result<Self> {
        if assignments.is_empty() {
            return Ok(self.clone());
        }
        let mut idx = Vec::with_capacity(assignments.len());
        for (name, value) in assignments {
            idx.push((self.ring.require(name)?, value));
        }
        let dropped: Vec<String> = assignments.iter().map(|(n, _)| n.to_string()).collect();
        let target = self.ring.without(&dropped)?;
        let gens = self
            .gens
            .iter()
            .map(|g| {
                let mut h = g.clone();
                for (i, v) in &idx {
                    h = h.substitute(*i, v);
                }
                h.to_ring(&target)
            })
            .collect::<Result<Vec<_>>>()?;
        Self::new(&target, gens)
    }

    /// Dimension of the Zariski tangent space at `p`: number of variables
    /// minus the rank of the Jacobian of the generators at `p`.
    pub fn zariski_tangent_dim(&self, p: &PointQ) -> Result<usize> {
        if p.0.len() != self.ring.len() {
            return Err(Error::ArityMismatch(p.0.len(), self.ring.len()));
        }
        let mut rows = Vec::with_capacity(self.gens.len());
        for g in &self.gens {
            if !g.evaluate(&p.0)?.is_zero() {
                return Err(Error::NotOnVariety(g.to_string()));
            }
            let row = (0..self.ring.len())
                .map(|j| g.derivative(j).evaluate(&p.0))
                .collect::<Result<Vec<_>>>()?;
            rows.push(row);
        }
        Ok(self.ring.len() - linalg::rank(rows))
    }
}

fn rabinowitsch(ext: &VarSet, w: &str, f: &Polynomial) -> Result<Polynomial> {
    let w = Polynomial::var(ext, w)?;
    Ok(&(&w * &f.to_ring(ext)?) - &Polynomial::one(ext))
}

/// Reduced basis under the block order eliminating the first `k` variables,
/// keeping the elements free of them.
fn eliminate_front(ext: &VarSet, gens: &[Polynomial], k: usize) -> Vec<Polynomial> {
    buchberger::reduced_basis(ext, gens, MonomialOrder::Block(k), false)
        .into_iter()
        .map(|e| e.poly)
        .filter(|p| (0..k).all(|i| !p.involves(i)))
        .map(|p| p.with_order(MonomialOrder::GrevLex))
        .collect()
}
