use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use serde::Serialize;

use crate::error::Error;
use crate::poly::Monomial;

/// A monomial order. Variable 0 is the largest variable.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum MonomialOrder {
    Lex,
    #[default]
    GrevLex,
    /// Lex on the first `k` variables, ties broken by grevlex on the rest.
    /// An elimination order for the first `k` variables.
    Block(usize),
}

impl MonomialOrder {
    pub fn cmp(&self, a: &Monomial, b: &Monomial) -> Ordering {
        let (a, b) = (a.exponents(), b.exponents());
        debug_assert_eq!(a.len(), b.len());
        match *self {
            MonomialOrder::Lex => a.cmp(b),
            MonomialOrder::GrevLex => grevlex(a, b),
            MonomialOrder::Block(k) => {
                let k = k.min(a.len());
                a[..k].cmp(&b[..k]).then_with(|| grevlex(&a[k..], &b[k..]))
            }
        }
    }
}

fn grevlex(a: &[u32], b: &[u32]) -> Ordering {
    let da: u64 = a.iter().map(|&e| e as u64).sum();
    let db: u64 = b.iter().map(|&e| e as u64).sum();
    da.cmp(&db).then_with(|| {
        a.iter()
            .zip(b)
            .rev()
            .find(|(x, y)| x != y)
            .map_or(Ordering::Equal, |(x, y)| y.cmp(x))
    })
}

impl fmt::Display for MonomialOrder {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            MonomialOrder::Lex => f.write_str("lex"),
            MonomialOrder::GrevLex => f.write_str("grevlex"),
            MonomialOrder::Block(k) => write!(f, "block({k})"),
        }
    }
}

impl FromStr for MonomialOrder {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "lex" => Ok(MonomialOrder::Lex),
            "grevlex" => Ok(MonomialOrder::GrevLex),
            _ => Err(Error::InvalidArgument(format!(
                "unknown monomial order `{s}` (expected lex or grevlex)"
            ))),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn m(e: &[u32]) -> Monomial {
        Monomial::new(e.to_vec())
    }

    #[test]
    fn grevlex_tie_break() {
        // x1^2 x2 > x2^3 and x1 x3 < x2^2
        assert_eq!(
            MonomialOrder::GrevLex.cmp(&m(&[2, 1, 0]), &m(&[0, 3, 0])),
            Ordering::Greater
        );
        assert_eq!(
            MonomialOrder::GrevLex.cmp(&m(&[1, 0, 1]), &m(&[0, 2, 0])),
            Ordering::Less
        );
        assert_eq!(
            MonomialOrder::Lex.cmp(&m(&[1, 0, 1]), &m(&[0, 2, 0])),
            Ordering::Greater
        );
    }

    #[test]
    fn block_eliminates_front() {
        let ord = MonomialOrder::Block(1);
        // anything with the first variable beats everything without it
        assert_eq!(ord.cmp(&m(&[1, 0, 0]), &m(&[0, 9, 9])), Ordering::Greater);
        assert_eq!(ord.cmp(&m(&[0, 2, 0]), &m(&[0, 1, 1])), Ordering::Greater);
    }

    fn arb_mono() -> impl Strategy<Value = Monomial> {
        prop::collection::vec(0u32..5, 4).prop_map(Monomial::new)
    }

    fn arb_order() -> impl Strategy<Value = MonomialOrder> {
        prop_oneof![
            Just(MonomialOrder::Lex),
            Just(MonomialOrder::GrevLex),
            (0usize..=4).prop_map(MonomialOrder::Block),
        ]
    }

    proptest! {
        #[test]
        fn orders_are_multiplicative(ord in arb_order(), a in arb_mono(), b in arb_mono(), c in arb_mono()) {
            prop_assert_eq!(ord.cmp(&a, &b), ord.cmp(&a.mul(&c), &b.mul(&c)));
        }

        #[test]
        fn one_is_minimum(ord in arb_order(), a in arb_mono()) {
            prop_assert_ne!(ord.cmp(&a, &Monomial::one(4)), Ordering::Less);
        }

        #[test]
        fn orders_are_total(ord in arb_order(), a in arb_mono(), b in arb_mono()) {
            prop_assert_eq!(ord.cmp(&a, &b) == Ordering::Equal, a == b);
            prop_assert_eq!(ord.cmp(&a, &b), ord.cmp(&b, &a).reverse());
        }
    }
}
