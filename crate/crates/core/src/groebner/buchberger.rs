use std::cmp::Ordering;
use std::collections::HashSet;

use num_rational::BigRational;
use num_traits::One;

use crate::groebner::stats;
use crate::poly::{divide_sorted, Monomial, MonomialOrder, Polynomial, VarSet};

/// A basis element, optionally carrying its expression in the input
/// generators: `poly = sum(cofactors[i] * input[i])`.
#[derive(Clone, Debug)]
pub(crate) struct Element {
    pub poly: Polynomial,
    pub cofactors: Option<Vec<Polynomial>>,
}

impl Element {
    fn scale(&self, c: &BigRational) -> Element {
        Element {
            poly: self.poly.scale(c),
            cofactors: self
                .cofactors
                .as_ref()
                .map(|cs| cs.iter().map(|p| p.scale(c)).collect()),
        }
    }

    fn monic(self) -> Element {
        let lc = self.poly.lc().clone();
        if lc.is_one() {
            self
        } else {
            self.scale(&lc.recip())
        }
    }
}

struct Pair {
    i: usize,
    j: usize,
    lcm: Monomial,
}

/// Reduced Groebner basis of `gens` under `ord`.
///
/// Output is monic and sorted by leading monomial, descending. With `track`
/// set, each element also carries cofactors over `gens`.
pub(crate) fn reduced_basis(
    ring: &VarSet,
    gens: &[Polynomial],
    ord: MonomialOrder,
    track: bool,
) -> Vec<Element> {
    let n = gens.len();
    let mut basis: Vec<Element> = gens
        .iter()
        .enumerate()
        .filter(|(_, g)| !g.is_zero())
        .map(|(i, g)| Element {
            poly: g.clone().with_order(ord),
            cofactors: track.then(|| unit_vector(ring, ord, n, i)),
        })
        .map(Element::monic)
        .collect();
    basis.sort_by(|a, b| canonical_cmp(ord, &a.poly, &b.poly));

    let mut pairs: Vec<Pair> = Vec::new();
    let mut pending: HashSet<(usize, usize)> = HashSet::new();
    for j in 0..basis.len() {
        for i in 0..j {
            push_pair(&basis, &mut pairs, &mut pending, i, j);
        }
    }

    let mut s_pairs = 0u64;
    let mut reductions = 0u64;
    while !pairs.is_empty() {
        let k = (0..pairs.len())
            .min_by(|&a, &b| {
                ord.cmp(&pairs[a].lcm, &pairs[b].lcm)
                    .then_with(|| (pairs[a].j, pairs[a].i).cmp(&(pairs[b].j, pairs[b].i)))
            })
            .expect("nonempty");
        let Pair { i, j, lcm } = pairs.swap_remove(k);
        pending.remove(&(i, j));

        if basis[i].poly.lm().is_coprime(basis[j].poly.lm()) {
            continue;
        }
        if chain_criterion(&basis, &pending, i, j, &lcm) {
            continue;
        }

        s_pairs += 1;
        let s = s_polynomial(&basis[i], &basis[j], &lcm);
        let (r, steps) = reduce(s, &basis);
        reductions += steps as u64;
        if r.poly.is_zero() {
            continue;
        }
        basis.push(r.monic());
        let new = basis.len() - 1;
        for i in 0..new {
            push_pair(&basis, &mut pairs, &mut pending, i, new);
        }
    }
    // minimalize: drop elements whose leading monomial is divisible by another's
    let mut keep: Vec<Element> = Vec::new();
    for (idx, e) in basis.iter().enumerate() {
        let lm = e.poly.lm();
        let redundant = basis.iter().enumerate().any(|(other, f)| {
            other != idx && f.poly.lm().divides(lm) && (f.poly.lm() != lm || other < idx)
        });
        if !redundant {
            keep.push(e.clone());
        }
    }

    // interreduce tails
    let mut out: Vec<Element> = Vec::with_capacity(keep.len());
    for idx in 0..keep.len() {
        let others: Vec<Element> = keep
            .iter()
            .enumerate()
            .filter(|(o, _)| *o != idx)
            .map(|(_, e)| e.clone())
            .collect();
        let (r, steps) = reduce(keep[idx].clone(), &others);
        reductions += steps as u64;
        out.push(r.monic());
    }
    stats::record(s_pairs, reductions);
    out.sort_by(|a, b| ord.cmp(b.poly.lm(), a.poly.lm()));
    out
}

fn unit_vector(ring: &VarSet, ord: MonomialOrder, n: usize, i: usize) -> Vec<Polynomial> {
    (0..n)
        .map(|k| {
            if k == i {
                Polynomial::one(ring).with_order(ord)
            } else {
                Polynomial::zero(ring).with_order(ord)
            }
        })
        .collect()
}

/// Orders inputs by leading monomial, then by the remaining terms.
fn canonical_cmp(ord: MonomialOrder, a: &Polynomial, b: &Polynomial) -> Ordering {
    for (x, y) in a.terms().iter().zip(b.terms()) {
        let c = ord.cmp(&x.0, &y.0).then_with(|| x.1.cmp(&y.1));
        if c != Ordering::Equal {
            return c;
        }
    }
    a.len().cmp(&b.len())
}

fn push_pair(
    basis: &[Element],
    pairs: &mut Vec<Pair>,
    pending: &mut HashSet<(usize, usize)>,
    i: usize,
    j: usize,
) {
    let lcm = basis[i].poly.lm().lcm(basis[j].poly.lm());
    pairs.push(Pair { i, j, lcm });
    pending.insert((i, j));
}

fn key(a: usize, b: usize) -> (usize, usize) {
    if a < b {
        (a, b)
    } else {
        (b, a)
    }
}

/// Skip `(i, j)` when some other `k` has `LM(k) | lcm` and neither `(i, k)`
/// nor `(j, k)` is still pending.
fn chain_criterion(
    basis: &[Element],
    pending: &HashSet<(usize, usize)>,
    i: usize,
    j: usize,
    lcm: &Monomial,
) -> bool {
    (0..basis.len()).any(|k| {
        k != i
            && k != j
            && basis[k].poly.lm().divides(lcm)
            && !pending.contains(&key(i, k))
            && !pending.contains(&key(j, k))
    })
}

fn s_polynomial(a: &Element, b: &Element, lcm: &Monomial) -> Element {
    let ma = lcm.div(a.poly.lm()).expect("lcm");
    let mb = lcm.div(b.poly.lm()).expect("lcm");
    let ca = a.poly.lc().recip();
    let cb = b.poly.lc().recip();
    let mut poly = a.poly.mul_term(&ma, &ca);
    poly.sub_mul_term(&cb, &mb, &b.poly);
    let cofactors = match (&a.cofactors, &b.cofactors) {
        (Some(x), Some(y)) => Some(
            x.iter()
                .zip(y)
                .map(|(p, q)| {
                    let mut t = p.mul_term(&ma, &ca);
                    t = &t - &q.mul_term(&mb, &cb);
                    t
                })
                .collect(),
        ),
        _ => None,
    };
    Element { poly, cofactors }
}

/// Full reduction of `e` by `by`. Returns the remainder and the step count.
pub(crate) fn reduce(e: Element, by: &[Element]) -> (Element, usize) {
    let gs: Vec<Polynomial> = by.iter().map(|b| b.poly.clone()).collect();
    let track = e.cofactors.is_some();
    let d = divide_sorted(e.poly, &gs, track);
    let cofactors = e.cofactors.map(|mut cs| {
        for (q, b) in d.quotients.iter().zip(by) {
            if q.is_zero() {
                continue;
            }
            let bc = b.cofactors.as_ref().expect("tracked basis");
            for (c, x) in cs.iter_mut().zip(bc) {
                *c = &*c - &(q * x);
            }
        }
        cs
    });
    (
        Element {
            poly: d.remainder,
            cofactors,
        },
        d.steps,
    )
}
