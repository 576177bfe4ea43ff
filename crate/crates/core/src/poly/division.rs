use crate::error::{Error, Result};
use crate::poly::{MonomialOrder, Polynomial};

/// Outcome of multivariate division: `f = sum(quotients[i] * divisors[i]) + remainder`.
#[derive(Clone, Debug)]
pub struct Division {
    pub quotients: Vec<Polynomial>,
    pub remainder: Polynomial,
    /// Number of elementary reduction steps performed.
    pub steps: usize,
}

/// Divides `f` by `divisors` under `ord`.
///
/// Every term of the remainder is irreducible by every leading monomial of
/// the divisors. When several divisors apply, the earliest in the sequence
/// is used.
pub fn divide(f: &Polynomial, divisors: &[Polynomial], ord: MonomialOrder) -> Result<Division> {
    for g in divisors {
        g.ensure_ring(f.ring())?;
        if g.is_zero() {
            return Err(Error::ZeroPolynomial);
        }
    }
    let gs: Vec<Polynomial> = divisors.iter().map(|g| g.clone().with_order(ord)).collect();
    Ok(divide_sorted(f.clone().with_order(ord), &gs, true))
}

/// Like [`divide`] but keeps only the remainder.
pub fn normal_form(f: &Polynomial, divisors: &[Polynomial], ord: MonomialOrder) -> Result<Polynomial> {
    for g in divisors {
        g.ensure_ring(f.ring())?;
        if g.is_zero() {
            return Err(Error::ZeroPolynomial);
        }
    }
    let gs: Vec<Polynomial> = divisors.iter().map(|g| g.clone().with_order(ord)).collect();
    Ok(divide_sorted(f.clone().with_order(ord), &gs, false).remainder)
}

/// Division kernel. `p` and every divisor must already be sorted under the
/// same order and the divisors must be nonzero.
pub(crate) fn divide_sorted(mut p: Polynomial, gs: &[Polynomial], track: bool) -> Division {
    let ring = p.ring().clone();
    let ord = p.order();
    let mut quotients: Vec<Polynomial> = if track {
        gs.iter().map(|_| Polynomial::zero(&ring).with_order(ord)).collect()
    } else {
        Vec::new()
    };
    let mut remainder = Polynomial::zero(&ring).with_order(ord);
    let mut steps = 0;
    while !p.is_zero() {
        let (m, c) = (p.lm().clone(), p.lc().clone());
        match gs.iter().position(|g| g.lm().divides(&m)) {
            Some(i) => {
                let g = &gs[i];
                let qm = m.div(g.lm()).expect("divisibility checked");
                let qc = c / g.lc();
                p.sub_mul_term(&qc, &qm, g);
                if track {
                    let t = Polynomial::term(&ring, qm, qc).with_order(ord);
                    quotients[i] = &quotients[i] + &t;
                }
                steps += 1;
            }
            None => {
                let (m, c) = p.pop_leading().expect("nonzero");
                remainder.push_smallest_term(m, c);
            }
        }
    }
    Division {
        quotients,
        remainder,
        steps,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::{rat, VarSet};

    #[test]
    fn self_reduction_is_zero() {
        let r = VarSet::new(["x", "y"]).unwrap();
        let x = Polynomial::var(&r, "x").unwrap();
        let y = Polynomial::var(&r, "y").unwrap();
        let f = &(&x * &y) - &y.scale(&rat(3));
        assert!(normal_form(&f, std::slice::from_ref(&f), MonomialOrder::Lex).unwrap().is_zero());
    }

    #[test]
    fn substitution_by_division() {
        // x2 x3 - u x1 x2 reduces to zero modulo x3 - u x1 under lex with x3 first
        let r = VarSet::new(["x3", "x1", "x2", "u"]).unwrap();
        let v = |n| Polynomial::var(&r, n).unwrap();
        let f = &(&v("x2") * &v("x3")) - &(&(&v("u") * &v("x1")) * &v("x2"));
        let g = &v("x3") - &(&v("u") * &v("x1"));
        let d = divide(&f, std::slice::from_ref(&g), MonomialOrder::Lex).unwrap();
        assert!(d.remainder.is_zero());
        assert_eq!(&d.quotients[0] * &g, f);
    }

    #[test]
    fn irreducible_term_stays() {
        let r = VarSet::new(["x1", "x2", "x3"]).unwrap();
        let x1 = Polynomial::var(&r, "x1").unwrap();
        let x2 = Polynomial::var(&r, "x2").unwrap();
        let nf = normal_form(&x1, &[&x1 * &x1, &x1 * &x2], MonomialOrder::GrevLex).unwrap();
        assert_eq!(nf, x1);
    }

    #[test]
    fn earliest_divisor_wins() {
        let r = VarSet::new(["x", "y"]).unwrap();
        let x = Polynomial::var(&r, "x").unwrap();
        let y = Polynomial::var(&r, "y").unwrap();
        let g1 = &x - &y;
        let g2 = &x + &y;
        let d = divide(&x, &[g1.clone(), g2.clone()], MonomialOrder::Lex).unwrap();
        assert_eq!(d.quotients[0], Polynomial::one(&r));
        assert!(d.quotients[1].is_zero());
        assert_eq!(d.remainder, y);
    }

    #[test]
    fn zero_divisor_rejected() {
        let r = VarSet::new(["x"]).unwrap();
        let x = Polynomial::var(&r, "x").unwrap();
        assert!(divide(&x, &[Polynomial::zero(&r)], MonomialOrder::Lex).is_err());
    }
}
