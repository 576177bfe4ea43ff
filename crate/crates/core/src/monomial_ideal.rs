//! Monomial ideals: minimal generators, membership by divisibility, and the
//! ideal operations needed to compare products of monomial ideals with
//! intersections of prime powers.

use std::fmt;

use crate::error::{Error, Result};
use crate::poly::{Monomial, Polynomial, VarSet};

/// A monomial ideal, stored by its unique minimal generating set.
///
/// No generator divides another. The empty set is the zero ideal and `{1}`
/// is the unit ideal. Generators are sorted by exponent vector.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MonomialIdeal {
    ring: VarSet,
    gens: Vec<Monomial>,
}

impl MonomialIdeal {
    /// Divisibility-reduces `gens` to the minimal generating set.
    pub fn minimal_generators<I>(ring: &VarSet, gens: I) -> Result<Self>
    where
        I: IntoIterator<Item = Monomial>,
    {
        let mut all: Vec<Monomial> = gens.into_iter().collect();
        if let Some(bad) = all.iter().find(|m| m.len() != ring.len()) {
            return Err(Error::ArityMismatch(bad.len(), ring.len()));
        }
        Ok(Self::from_raw(ring, &mut all))
    }

    fn from_raw(ring: &VarSet, all: &mut Vec<Monomial>) -> Self {
        all.sort_by(|a, b| a.degree().cmp(&b.degree()).then_with(|| a.cmp(b)));
        all.dedup();
        let mut kept: Vec<Monomial> = Vec::new();
        for m in all.drain(..) {
            // a divisor always has degree <= m, so it is already kept
            if !kept.iter().any(|k| k.divides(&m)) {
                kept.push(m);
            }
        }
        kept.sort();
        MonomialIdeal {
            ring: ring.clone(),
            gens: kept,
        }
    }

    pub fn zero(ring: &VarSet) -> Self {
        MonomialIdeal {
            ring: ring.clone(),
            gens: Vec::new(),
        }
    }

    pub fn unit(ring: &VarSet) -> Self {
        MonomialIdeal {
            ring: ring.clone(),
            gens: vec![Monomial::one(ring.len())],
        }
    }

    /// The ideal generated by the named variables.
    pub fn from_vars(ring: &VarSet, names: &[&str]) -> Result<Self> {
        let gens = names
            .iter()
            .map(|n| ring.require(n).map(|i| Monomial::var(ring.len(), i)))
            .collect::<Result<Vec<_>>>()?;
        Self::minimal_generators(ring, gens)
    }

    /// Parses generators written as exponent vectors over `ring`.
    pub fn from_exponents(ring: &VarSet, gens: &[&[u32]]) -> Result<Self> {
        Self::minimal_generators(ring, gens.iter().map(|e| Monomial::new(e.to_vec())))
    }

    pub fn ring(&self) -> &VarSet {
        &self.ring
    }

    pub fn gens(&self) -> &[Monomial] {
        &self.gens
    }

    pub fn is_zero(&self) -> bool {
        self.gens.is_empty()
    }

    pub fn is_unit(&self) -> bool {
        self.gens.iter().any(Monomial::is_one)
    }

    fn check_ring(&self, other: &MonomialIdeal) -> Result<()> {
        self.ring.ensure_same(&other.ring)
    }

    /// True iff some generator divides `m`.
    pub fn contains_monomial(&self, m: &Monomial) -> Result<bool> {
        if m.len() != self.ring.len() {
            return Err(Error::ArityMismatch(m.len(), self.ring.len()));
        }
        Ok(self.gens.iter().any(|g| g.divides(m)))
    }

    /// The first generator dividing `m`, if any.
    pub fn witness_for(&self, m: &Monomial) -> Option<&Monomial> {
        self.gens.iter().find(|g| g.divides(m))
    }

    pub fn sum(&self, other: &MonomialIdeal) -> Result<Self> {
        self.check_ring(other)?;
        let mut all: Vec<Monomial> = self.gens.iter().chain(&other.gens).cloned().collect();
        Ok(Self::from_raw(&self.ring, &mut all))
    }

    pub fn product(&self, other: &MonomialIdeal) -> Result<Self> {
        self.check_ring(other)?;
        let mut all: Vec<Monomial> = self
            .gens
            .iter()
            .flat_map(|a| other.gens.iter().map(move |b| a.mul(b)))
            .collect();
        Ok(Self::from_raw(&self.ring, &mut all))
    }

    /// `self^n` by repeated multiplication, minimalizing after each step.
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

    /// Generated by pairwise lcms of generators.
    pub fn intersect(&self, other: &MonomialIdeal) -> Result<Self> {
        self.check_ring(other)?;
        let mut all: Vec<Monomial> = self
            .gens
            .iter()
            .flat_map(|a| other.gens.iter().map(move |b| a.lcm(b)))
            .collect();
        Ok(Self::from_raw(&self.ring, &mut all))
    }

    /// `(self : m)`, generated by `lcm(g, m) / m`.
    pub fn quotient_by_monomial(&self, m: &Monomial) -> Result<Self> {
        if m.len() != self.ring.len() {
            return Err(Error::ArityMismatch(m.len(), self.ring.len()));
        }
        let mut all: Vec<Monomial> = self
            .gens
            .iter()
            .map(|g| g.lcm(m).div(m).expect("m divides lcm"))
            .collect();
        Ok(Self::from_raw(&self.ring, &mut all))
    }

    /// `(self : x^inf)`: zero the exponent of `var` in every generator.
    pub fn saturate_variable(&self, var: &str) -> Result<Self> {
        let i = self.ring.require(var)?;
        let mut all: Vec<Monomial> = self.gens.iter().map(|g| g.with_exponent(i, 0)).collect();
        Ok(Self::from_raw(&self.ring, &mut all))
    }

    pub fn equals(&self, other: &MonomialIdeal) -> Result<bool> {
        self.check_ring(other)?;
        Ok(self.gens == other.gens)
    }

    pub fn is_subset_of(&self, other: &MonomialIdeal) -> Result<bool> {
        self.check_ring(other)?;
        Ok(self.gens.iter().all(|g| other.gens.iter().any(|h| h.divides(g))))
    }

    pub fn to_polynomials(&self) -> Vec<Polynomial> {
        self.gens
            .iter()
            .map(|m| Polynomial::monomial(&self.ring, m.clone()))
            .collect()
    }
}

impl fmt::Display for MonomialIdeal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("(")?;
        for (i, g) in self.gens.iter().enumerate() {
            if i > 0 {
                f.write_str(", ")?;
            }
            f.write_str(&g.render(&self.ring))?;
        }
        f.write_str(")")
    }
}

/// One product in the expansion of `I_1^{e_1} ... I_k^{e_k}`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ExpansionRow {
    pub monomial: Monomial,
    /// Per factor, the chosen generator indices (a non-decreasing multiset of
    /// size equal to the factor's exponent).
    pub choices: Vec<Vec<usize>>,
    /// The factorization in dotted notation, e.g. `(x1.x2).x1.(x1.x2.x3).(x1.x2)^2`.
    pub witness: String,
}

/// Enumerates every product of one generator choice per factor, expanding
/// `I^e` as the size-`e` multisets of generators of `I`.
///
/// The first factor varies slowest.
pub fn expansion_report(factors: &[(MonomialIdeal, u32)]) -> Result<Vec<ExpansionRow>> {
    let Some((first, _)) = factors.first() else {
        return Err(Error::InvalidArgument("expansion needs at least one factor".into()));
    };
    let ring = first.ring().clone();
    let mut per_factor: Vec<Vec<Vec<usize>>> = Vec::with_capacity(factors.len());
    for (ideal, e) in factors {
        ideal.ring().ensure_same(&ring)?;
        if *e == 0 {
            return Err(Error::InvalidArgument("factor exponent must be positive".into()));
        }
        per_factor.push(multisets(ideal.gens().len(), *e as usize));
    }

    let mut rows = Vec::new();
    let mut idx = vec![0usize; factors.len()];
    if per_factor.iter().any(Vec::is_empty) {
        return Ok(rows);
    }
    loop {
        let mut mono = Monomial::one(ring.len());
        let mut pieces = Vec::with_capacity(factors.len());
        let mut choices = Vec::with_capacity(factors.len());
        for (k, (ideal, _)) in factors.iter().enumerate() {
            let choice = &per_factor[k][idx[k]];
            let gens: Vec<&Monomial> = choice.iter().map(|&j| &ideal.gens()[j]).collect();
            for g in &gens {
                mono = mono.mul(g);
            }
            pieces.push(render_choice(&ring, &gens));
            choices.push(choice.clone());
        }
        rows.push(ExpansionRow {
            monomial: mono,
            choices,
            witness: pieces.join("."),
        });

        // odometer, last factor fastest
        let mut k = factors.len();
        loop {
            if k == 0 {
                return Ok(rows);
            }
            k -= 1;
            idx[k] += 1;
            if idx[k] < per_factor[k].len() {
                break;
            }
            idx[k] = 0;
        }
    }
}

fn multisets(n: usize, size: usize) -> Vec<Vec<usize>> {
    fn go(start: usize, n: usize, left: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if left == 0 {
            out.push(cur.clone());
            return;
        }
        for i in start..n {
            cur.push(i);
            go(i, n, left - 1, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(0, n, size, &mut Vec::new(), &mut out);
    out
}

fn render_choice(ring: &VarSet, gens: &[&Monomial]) -> String {
    let single_var = |m: &Monomial| m.exponents().iter().filter(|&&e| e > 0).count() == 1;
    let bare = |m: &Monomial| {
        if single_var(m) || m.is_one() {
            m.render_dotted(ring)
        } else {
            format!("({})", m.render_dotted(ring))
        }
    };
    let first = gens[0];
    if gens.len() == 1 {
        bare(first)
    } else if gens.iter().all(|g| *g == first) {
        let linear = single_var(first) && first.degree() == 1;
        if linear {
            format!("{}^{}", first.render_dotted(ring), gens.len())
        } else if single_var(first) {
            format!("({})^{}", first.render_dotted(ring), gens.len())
        } else {
            format!("{}^{}", bare(first), gens.len())
        }
    } else {
        let prod = gens
            .iter()
            .fold(Monomial::one(ring.len()), |acc, g| acc.mul(g));
        format!("({})", prod.render_dotted(ring))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn r3() -> VarSet {
        VarSet::new(["x1", "x2", "x3"]).unwrap()
    }

    fn m(e: &[u32]) -> Monomial {
        Monomial::new(e.to_vec())
    }

    fn ideal(gens: &[&[u32]]) -> MonomialIdeal {
        MonomialIdeal::from_exponents(&r3(), gens).unwrap()
    }

    fn vars(names: &[&str]) -> MonomialIdeal {
        MonomialIdeal::from_vars(&r3(), names).unwrap()
    }

    fn lemma_lhs_factors() -> Vec<(MonomialIdeal, u32)> {
        vec![
            (ideal(&[&[1, 1, 0], &[0, 1, 1], &[1, 0, 1]]), 1),
            (ideal(&[&[1, 0, 0], &[0, 1, 1]]), 1),
            (ideal(&[&[0, 1, 0], &[1, 0, 1]]), 2),
            (ideal(&[&[0, 0, 1], &[1, 1, 0]]), 2),
        ]
    }

    fn lemma_rhs() -> MonomialIdeal {
        vars(&["x2", "x3"])
            .power(5)
            .unwrap()
            .intersect(&vars(&["x1", "x3"]).power(4).unwrap())
            .unwrap()
            .intersect(&vars(&["x1", "x2"]).power(4).unwrap())
            .unwrap()
            .intersect(&vars(&["x1", "x2", "x3"]).power(7).unwrap())
            .unwrap()
    }

    fn lemma_lhs() -> MonomialIdeal {
        lemma_lhs_factors()
            .into_iter()
            .map(|(i, e)| i.power(e).unwrap())
            .reduce(|a, b| a.product(&b).unwrap())
            .unwrap()
    }

    fn condition_at(a: u32, b: u32, c: u32) -> bool {
        a + b + c >= 7 && a + b >= 4 && a + c >= 4 && b + c >= 5
    }

    /// Minimal elements of a down-closed-complement set, by brute force.
    fn brute_minimal(pred: impl Fn(u32, u32, u32) -> bool, bound: u32) -> Vec<Monomial> {
        let mut members = Vec::new();
        for a in 0..=bound {
            for b in 0..=bound {
                for c in 0..=bound {
                    if pred(a, b, c) {
                        members.push([a, b, c]);
                    }
                }
            }
        }
        let mut out: Vec<Monomial> = members
            .iter()
            .filter(|x| {
                !members
                    .iter()
                    .any(|y| y != *x && y.iter().zip(x.iter()).all(|(p, q)| p <= q))
            })
            .map(|x| m(x))
            .collect();
        out.sort();
        out
    }

    #[test]
    fn minimalization_prunes_multiples() {
        let i = MonomialIdeal::minimal_generators(&r3(), [m(&[1, 0, 0]), m(&[1, 1, 0]), m(&[2, 0, 0])])
            .unwrap();
        assert_eq!(i.gens(), &[m(&[1, 0, 0])]);
        assert!(MonomialIdeal::minimal_generators(&r3(), [m(&[1, 0])]).is_err());
    }

    #[test]
    fn lemma_rhs_has_the_eight_named_generators() {
        let named = vec![
            m(&[0, 4, 4]), // m0
            m(&[1, 3, 3]), // m1
            m(&[2, 3, 2]), // m2
            m(&[2, 2, 3]), // m2'
            m(&[3, 4, 1]), // m3
            m(&[3, 1, 4]), // m3'
            m(&[4, 5, 0]), // m4
            m(&[4, 0, 5]), // m4'
        ];
        let mut sorted = named.clone();
        sorted.sort();
        let oracle = brute_minimal(condition_at, 12);
        assert_eq!(oracle, sorted);
        assert_eq!(lemma_rhs().gens(), sorted.as_slice());
    }

    #[test]
    fn condition_oracle_matches_membership() {
        let rhs = lemma_rhs();
        for a in 0..=9 {
            for b in 0..=9 {
                for c in 0..=9 {
                    assert_eq!(
                        rhs.contains_monomial(&m(&[a, b, c])).unwrap(),
                        condition_at(a, b, c),
                        "x1^{a} x2^{b} x3^{c}"
                    );
                }
            }
        }
    }

    #[test]
    fn membership_examples() {
        let h = lemma_lhs();
        assert!(h.contains_monomial(&m(&[6, 3, 2])).unwrap());
        assert!(!lemma_rhs().contains_monomial(&m(&[7, 0, 0])).unwrap());
        assert!(vars(&["x1", "x2", "x3"])
            .power(7)
            .unwrap()
            .contains_monomial(&m(&[0, 4, 4]))
            .unwrap());
        assert!(h.contains_monomial(&m(&[1])).is_err());
    }

    #[test]
    fn lemma_equality() {
        assert!(lemma_lhs().equals(&lemma_rhs()).unwrap());
    }

    #[test]
    fn combine_examples() {
        let sq = ideal(&[&[0, 1, 0], &[1, 0, 1]]).power(2).unwrap();
        assert_eq!(sq, ideal(&[&[0, 2, 0], &[1, 1, 1], &[2, 0, 2]]));
        let p = vars(&["x1"]).product(&vars(&["x2", "x3"])).unwrap();
        assert_eq!(p, ideal(&[&[1, 1, 0], &[1, 0, 1]]));
        assert!(p.equals(&ideal(&[&[1, 1, 0], &[1, 0, 1]])).unwrap());
        assert!(!vars(&["x2", "x3"])
            .power(5)
            .unwrap()
            .equals(&vars(&["x2", "x3"]).power(4).unwrap())
            .unwrap());
        assert!(vars(&["x1"]).power(0).is_err());
        let other = VarSet::new(["a", "b", "c"]).unwrap();
        assert!(vars(&["x1"]).sum(&MonomialIdeal::unit(&other)).is_err());
    }

    #[test]
    fn intersection_examples() {
        let i = vars(&["x2", "x3"]).intersect(&vars(&["x1", "x3"])).unwrap();
        assert_eq!(i, ideal(&[&[0, 0, 1], &[1, 1, 0]]));
        let j = lemma_rhs();
        assert_eq!(j.intersect(&j).unwrap(), j);
    }

    #[test]
    fn lemma_h1bis() {
        let lhs = vars(&["x2", "x3"])
            .power(5)
            .unwrap()
            .intersect(&vars(&["x1", "x3"]).power(4).unwrap())
            .unwrap();
        let rhs = ideal(&[&[1, 1, 0], &[0, 0, 1]])
            .power(4)
            .unwrap()
            .product(&vars(&["x2", "x3"]))
            .unwrap();
        assert!(lhs.equals(&rhs).unwrap());

        // the ten product monomials x1^a x2^(a+1) x3^b, x1^a x2^a x3^(b+1), a + b = 4
        let ten: Vec<Monomial> = (0..=4)
            .flat_map(|a| [m(&[a, a + 1, 4 - a]), m(&[a, a, 5 - a])])
            .collect();
        assert_eq!(ten.len(), 10);
        assert!(ten.iter().all(|t| lhs.contains_monomial(t).unwrap()));
        // brute force: only six of them are minimal
        let oracle = brute_minimal(|a, b, c| b + c >= 5 && a + c >= 4, 12);
        assert_eq!(oracle.len(), 6);
        assert_eq!(lhs.gens(), oracle.as_slice());
        assert!(oracle.iter().all(|g| ten.contains(g)));
    }

    #[test]
    fn saturation_examples() {
        let h = lemma_lhs();
        assert_eq!(h.saturate_variable("x1").unwrap(), vars(&["x2", "x3"]).power(5).unwrap());
        assert_eq!(h.saturate_variable("x2").unwrap(), vars(&["x1", "x3"]).power(4).unwrap());
        assert_eq!(h.saturate_variable("x3").unwrap(), vars(&["x1", "x2"]).power(4).unwrap());
        let i = ideal(&[&[1, 1, 0], &[0, 0, 1]]);
        assert_eq!(i.saturate_variable("x1").unwrap(), vars(&["x2", "x3"]));
        assert_eq!(
            h.saturate_variable("y"),
            Err(Error::UnknownVariable("y".into()))
        );
    }

    #[test]
    fn zero_and_unit_propagate() {
        let z = MonomialIdeal::zero(&r3());
        let u = MonomialIdeal::unit(&r3());
        let i = vars(&["x1", "x2"]);
        assert_eq!(z.sum(&i).unwrap(), i);
        assert!(z.product(&i).unwrap().is_zero());
        assert!(z.intersect(&i).unwrap().is_zero());
        assert_eq!(u.product(&i).unwrap(), i);
        assert_eq!(u.intersect(&i).unwrap(), i);
        assert!(u.sum(&i).unwrap().is_unit());
        assert!(!z.contains_monomial(&m(&[0, 0, 0])).unwrap());
        assert!(vars(&["x1"]).saturate_variable("x1").unwrap().is_unit());
    }

    #[test]
    fn expansion_of_lemma_lhs() {
        let rows = expansion_report(&lemma_lhs_factors()).unwrap();
        assert_eq!(rows.len(), 54);
        let rhs = lemma_rhs();
        assert!(rows.iter().all(|r| rhs.contains_monomial(&r.monomial).unwrap()));
        let target = rows.iter().find(|r| r.monomial == m(&[5, 4, 1])).unwrap();
        assert_eq!(target.witness, "(x1.x2).x1.(x1.x2.x3).(x1.x2)^2");
        // every witness string multiplies back to its monomial
        assert!(rows.iter().any(|r| r.witness == "(x2.x3).x1.x2^2.x3^2"));
        assert!(rows.iter().any(|r| r.witness == "(x1.x3).x1.(x1.x3)^2.x3^2"));
    }

    #[test]
    fn expansion_single_factor() {
        let rows = expansion_report(&[(vars(&["x1"]), 1)]).unwrap();
        assert_eq!(rows.len(), 1);
        assert_eq!(rows[0].monomial, m(&[1, 0, 0]));
        assert_eq!(rows[0].witness, "x1");
        assert!(expansion_report(&[]).is_err());
    }

    mod props {
        use super::*;
        use proptest::prelude::*;

        fn arb_ideal() -> impl Strategy<Value = MonomialIdeal> {
            prop::collection::vec(prop::collection::vec(0u32..4, 3), 0..4).prop_map(|gs| {
                MonomialIdeal::minimal_generators(&r3(), gs.into_iter().map(Monomial::new)).unwrap()
            })
        }

        fn arb_mono() -> impl Strategy<Value = Monomial> {
            prop::collection::vec(0u32..5, 3).prop_map(Monomial::new)
        }

        proptest! {
            #[test]
            fn product_inside_intersection(i in arb_ideal(), j in arb_ideal()) {
                let p = i.product(&j).unwrap();
                let x = i.intersect(&j).unwrap();
                for g in p.gens() {
                    prop_assert!(x.contains_monomial(g).unwrap());
                }
            }

            #[test]
            fn membership_is_multiplicative(i in arb_ideal(), j in arb_ideal(), a in arb_mono(), b in arb_mono()) {
                if i.contains_monomial(&a).unwrap() && j.contains_monomial(&b).unwrap() {
                    prop_assert!(i.product(&j).unwrap().contains_monomial(&a.mul(&b)).unwrap());
                }
            }

            #[test]
            fn saturation_idempotent_and_commuting(i in arb_ideal()) {
                let s1 = i.saturate_variable("x1").unwrap();
                prop_assert_eq!(s1.saturate_variable("x1").unwrap(), s1.clone());
                let s12 = s1.saturate_variable("x2").unwrap();
                let s21 = i.saturate_variable("x2").unwrap().saturate_variable("x1").unwrap();
                prop_assert_eq!(s12, s21);
            }

            #[test]
            fn operations_order_independent(i in arb_ideal(), j in arb_ideal(), k in arb_ideal()) {
                prop_assert_eq!(i.intersect(&j).unwrap(), j.intersect(&i).unwrap());
                prop_assert_eq!(i.product(&j).unwrap(), j.product(&i).unwrap());
                prop_assert_eq!(i.sum(&j).unwrap(), j.sum(&i).unwrap());
                prop_assert_eq!(
                    i.intersect(&j).unwrap().intersect(&k).unwrap(),
                    i.intersect(&j.intersect(&k).unwrap()).unwrap()
                );
                prop_assert_eq!(
                    i.product(&j).unwrap().product(&k).unwrap(),
                    i.product(&j.product(&k).unwrap()).unwrap()
                );
            }

            #[test]
            fn generators_stay_minimal(i in arb_ideal(), j in arb_ideal()) {
                for x in [i.product(&j).unwrap(), i.intersect(&j).unwrap(), i.sum(&j).unwrap()] {
                    for (p, a) in x.gens().iter().enumerate() {
                        for (q, b) in x.gens().iter().enumerate() {
                            prop_assert!(p == q || !a.divides(b));
                        }
                    }
                }
            }
        }
    }
}
