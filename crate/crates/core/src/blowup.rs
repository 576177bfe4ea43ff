//! Affine charts of blow-ups, Jacobian smoothness checks, and chart-level
//! ideal comparisons.
//!
//! A chart is an ideal in an enlarged ring; "modulo the chart" always means
//! adding the chart ideal before a membership or equality test.

use num_rational::BigRational;
use num_traits::Zero;

use crate::error::{Error, Result};
use crate::groebner::{PointQ, PolyIdeal};
use crate::linalg;
use crate::poly::{Polynomial, VarSet};

/// One affine chart of the blow-up of `(g_1, ..., g_k)` on `V(base)`.
#[derive(Clone, Debug)]
pub struct BlowupChart {
    ambient: VarSet,
    base_ideal: PolyIdeal,
    blown_gens: Vec<Polynomial>,
    chart_index: usize,
    chart_vars: Vec<String>,
    chart_ideal: PolyIdeal,
    nonzerodivisor_assumed: bool,
}

impl BlowupChart {
    pub fn ambient(&self) -> &VarSet {
        &self.ambient
    }

    /// The base ideal, moved into the ambient ring.
    pub fn base_ideal(&self) -> &PolyIdeal {
        &self.base_ideal
    }

    pub fn blown_gens(&self) -> &[Polynomial] {
        &self.blown_gens
    }

    /// 0-based index of the generator that is a unit on this chart.
    pub fn chart_index(&self) -> usize {
        self.chart_index
    }

    pub fn chart_vars(&self) -> &[String] {
        &self.chart_vars
    }

    pub fn ideal(&self) -> &PolyIdeal {
        &self.chart_ideal
    }

    /// The chart generator `g_i`, in the ambient ring.
    pub fn unit_generator(&self) -> &Polynomial {
        &self.blown_gens[self.chart_index]
    }

    /// Always true: `g_i` is taken to be a non-zero-divisor on the base
    /// without proof.
    pub fn nonzerodivisor_assumed(&self) -> bool {
        self.nonzerodivisor_assumed
    }

    /// Lifts a base point with `g_i(p) != 0` to the chart by
    /// `w_j = g_j(p) / g_i(p)`. Returns `None` when `g_i(p) = 0`.
    pub fn lift_point(&self, base_point: &[BigRational]) -> Result<Option<PointQ>> {
        let base_len = self.ambient.len() - self.chart_vars.len();
        if base_point.len() != base_len {
            return Err(Error::ArityMismatch(base_point.len(), base_len));
        }
        let mut full: Vec<BigRational> = base_point.to_vec();
        full.resize(self.ambient.len(), BigRational::zero());
        let gi = self.unit_generator().evaluate(&full)?;
        if gi.is_zero() {
            return Ok(None);
        }
        let mut w = 0;
        for (j, g) in self.blown_gens.iter().enumerate() {
            if j == self.chart_index {
                continue;
            }
            full[base_len + w] = g.evaluate(&full)? / &gi;
            w += 1;
        }
        Ok(Some(PointQ(full)))
    }

    /// True iff `J + chart = (candidate) + chart`, with `J` and `candidate`
    /// mapped into the ambient ring by variable name.
    pub fn is_principal(&self, j: &PolyIdeal, candidate: &Polynomial) -> Result<bool> {
        let j = j.to_ring(&self.ambient)?;
        let c = candidate.to_ring(&self.ambient)?;
        let around_c = self.chart_ideal.with_generators(std::slice::from_ref(&c))?;
        for g in j.gens() {
            if !around_c.contains(g)? {
                return Ok(false);
            }
        }
        self.chart_ideal.sum(&j)?.contains(&c)
    }

    /// True iff `J + chart = K + chart`.
    pub fn ideals_equal(&self, j: &PolyIdeal, k: &PolyIdeal) -> Result<bool> {
        let j = self.chart_ideal.sum(&j.to_ring(&self.ambient)?)?;
        let k = self.chart_ideal.sum(&k.to_ring(&self.ambient)?)?;
        j.equals(&k)
    }
}

/// Chart `i` (0-based) of the blow-up of `(gens)` over `V(base)`:
/// `(base + (g_j - w_j g_i : j != i)) : g_i^∞`, with `w_j` named by
/// `new_vars` in order and appended to the base ring.
pub fn chart_ideal(
    base: &PolyIdeal,
    gens: &[Polynomial],
    i: usize,
    new_vars: &[&str],
) -> Result<BlowupChart> {
    if gens.iter().all(Polynomial::is_zero) {
        return Err(Error::InvalidArgument("all blown-up generators are zero".into()));
    }
    if i >= gens.len() {
        return Err(Error::InvalidArgument(format!(
            "chart index {i} out of range for {} generators",
            gens.len()
        )));
    }
    if gens[i].is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    if new_vars.len() + 1 != gens.len() {
        return Err(Error::ArityMismatch(new_vars.len(), gens.len() - 1));
    }
    for g in gens {
        g.ensure_ring(base.ring())?;
    }
    let ambient = base.ring().extended(new_vars)?;
    let base_ideal = base.to_ring(&ambient)?;
    let blown_gens = gens
        .iter()
        .map(|g| g.to_ring(&ambient))
        .collect::<Result<Vec<_>>>()?;
    let gi = &blown_gens[i];
    let mut graph = Vec::with_capacity(new_vars.len());
    let mut w = new_vars.iter();
    for (j, gj) in blown_gens.iter().enumerate() {
        if j == i {
            continue;
        }
        let wj = Polynomial::var(&ambient, w.next().expect("arity checked"))?;
        graph.push(gj - &(&wj * gi));
    }
    let chart_ideal = base_ideal.with_generators(&graph)?.saturate_by_poly(gi)?;
    Ok(BlowupChart {
        ambient,
        base_ideal,
        blown_gens,
        chart_index: i,
        chart_vars: new_vars.iter().map(|s| s.to_string()).collect(),
        chart_ideal,
        nonzerodivisor_assumed: true,
    })
}

/// Matrix of first partial derivatives: one row per function, one column
/// per ring variable.
pub fn jacobian(fns: &[Polynomial]) -> Vec<Vec<Polynomial>> {
    fns.iter()
        .map(|f| (0..f.ring().len()).map(|j| f.derivative(j)).collect())
        .collect()
}

/// `I` plus every `codim x codim` minor of the Jacobian of its generators.
pub fn singular_locus_ideal(ideal: &PolyIdeal, codim: usize) -> Result<PolyIdeal> {
    let jac = jacobian(ideal.gens());
    let rows = jac.len();
    let cols = ideal.ring().len();
    if codim == 0 || codim > rows || codim > cols {
        return Err(Error::InvalidArgument(format!(
            "codimension {codim} does not fit a {rows}x{cols} Jacobian"
        )));
    }
    let mut minors = Vec::new();
    for rs in subsets(rows, codim) {
        for cs in subsets(cols, codim) {
            let m: Vec<Vec<&Polynomial>> = rs
                .iter()
                .map(|&r| cs.iter().map(|&c| &jac[r][c]).collect())
                .collect();
            minors.push(poly_det(ideal.ring(), &m));
        }
    }
    ideal.with_generators(&minors)
}

fn subsets(n: usize, k: usize) -> Vec<Vec<usize>> {
    fn go(start: usize, n: usize, k: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for i in start..n {
            cur.push(i);
            go(i + 1, n, k, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(0, n, k, &mut Vec::with_capacity(k), &mut out);
    out
}

/// Determinant by cofactor expansion along the first row.
fn poly_det(ring: &VarSet, m: &[Vec<&Polynomial>]) -> Polynomial {
    match m.len() {
        0 => Polynomial::one(ring),
        1 => m[0][0].clone(),
        n => {
            let mut acc = Polynomial::zero(ring);
            for c in 0..n {
                if m[0][c].is_zero() {
                    continue;
                }
                let minor: Vec<Vec<&Polynomial>> = m[1..]
                    .iter()
                    .map(|row| {
                        row.iter()
                            .enumerate()
                            .filter(|(k, _)| *k != c)
                            .map(|(_, p)| *p)
                            .collect()
                    })
                    .collect();
                let t = m[0][c] * &poly_det(ring, &minor);
                acc = if c % 2 == 0 { &acc + &t } else { &acc - &t };
            }
            acc
        }
    }
}

/// Outcome of a Jacobian smoothness check.
#[derive(Clone, Debug, PartialEq)]
pub enum SmoothnessVerdict {
    /// The singular-locus ideal is the unit ideal.
    Smooth,
    /// The singular locus has the same radical as the supplied ideal.
    SingularLocusCertified(Vec<Polynomial>),
    Inconclusive,
}

/// Classifies `V(I)` of codimension `codim`. With `expected_locus`, a
/// non-unit singular ideal is compared up to radical against it.
pub fn classify_smoothness(
    ideal: &PolyIdeal,
    codim: usize,
    expected_locus: Option<&[Polynomial]>,
) -> Result<SmoothnessVerdict> {
    let sing = singular_locus_ideal(ideal, codim)?;
    if sing.is_unit() {
        return Ok(SmoothnessVerdict::Smooth);
    }
    let Some(expected) = expected_locus else {
        return Ok(SmoothnessVerdict::Inconclusive);
    };
    let e = PolyIdeal::new(ideal.ring(), expected.to_vec())?;
    for f in expected {
        if !sing.radical_member(f)? {
            return Ok(SmoothnessVerdict::Inconclusive);
        }
    }
    for g in sing.gens() {
        if !e.radical_member(g)? {
            return Ok(SmoothnessVerdict::Inconclusive);
        }
    }
    Ok(SmoothnessVerdict::SingularLocusCertified(expected.to_vec()))
}

/// Determinant of the Jacobian of a square system at `p`.
pub fn jacobian_det_at(fns: &[Polynomial], p: &PointQ) -> Result<BigRational> {
    let Some(first) = fns.first() else {
        return Err(Error::InvalidArgument("empty system".into()));
    };
    let ring = first.ring();
    if fns.len() != ring.len() {
        return Err(Error::InvalidArgument(format!(
            "{} functions in {} variables",
            fns.len(),
            ring.len()
        )));
    }
    for f in fns {
        f.ensure_ring(ring)?;
    }
    let m = jacobian(fns)
        .iter()
        .map(|row| row.iter().map(|d| d.evaluate(&p.0)).collect::<Result<Vec<_>>>())
        .collect::<Result<Vec<_>>>()?;
    Ok(linalg::determinant(m))
}
