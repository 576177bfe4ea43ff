//! Exact multivariate polynomial arithmetic over the rationals.
//!
//! A [`VarSet`] fixes the variable names and their order; [`Monomial`]s are
//! exponent vectors over it and [`Polynomial`]s are sparse maps from
//! monomials to nonzero [`BigRational`](num_rational::BigRational)
//! coefficients. Nothing in this module rounds.

mod division;
mod monomial;
mod order;
mod polynomial;
mod ring;

pub use division::{divide, normal_form, Division};
pub(crate) use division::divide_sorted;
pub use monomial::{mono_divides, mono_lcm, Monomial};
pub use order::MonomialOrder;
pub use polynomial::{rat, Polynomial};
pub use ring::VarSet;
pub(crate) use ring::is_identifier;

#[cfg(test)]
mod proptests {
    use super::*;
    use proptest::prelude::*;

    fn ring() -> VarSet {
        VarSet::new(["x", "y", "z"]).unwrap()
    }

    fn arb_poly() -> impl Strategy<Value = Polynomial> {
        prop::collection::vec((prop::collection::vec(0u32..3, 3), -4i64..5), 0..5).prop_map(
            |terms| {
                Polynomial::from_terms(
                    &ring(),
                    terms.into_iter().map(|(e, c)| (Monomial::new(e), rat(c))),
                )
            },
        )
    }

    fn arb_order() -> impl Strategy<Value = MonomialOrder> {
        prop_oneof![
            Just(MonomialOrder::Lex),
            Just(MonomialOrder::GrevLex),
            (0usize..=3).prop_map(MonomialOrder::Block),
        ]
    }

    proptest! {
        #[test]
        fn distributive(f in arb_poly(), g in arb_poly(), h in arb_poly()) {
            prop_assert_eq!(&(&f + &g) * &h, &(&f * &h) + &(&g * &h));
        }

        #[test]
        fn divides_iff_lcm_is_b(a in prop::collection::vec(0u32..4, 3), b in prop::collection::vec(0u32..4, 3)) {
            let (a, b) = (Monomial::new(a), Monomial::new(b));
            prop_assert_eq!(mono_divides(&a, &b).unwrap(), mono_lcm(&a, &b).unwrap() == b);
        }

        #[test]
        fn division_recomposes(f in arb_poly(), gs in prop::collection::vec(arb_poly(), 1..4), ord in arb_order()) {
            let gs: Vec<Polynomial> = gs.into_iter().filter(|g| !g.is_zero()).collect();
            prop_assume!(!gs.is_empty());
            let d = divide(&f, &gs, ord).unwrap();
            let mut acc = d.remainder.clone();
            for (q, g) in d.quotients.iter().zip(&gs) {
                acc = &acc + &(q * g);
            }
            prop_assert_eq!(acc, f);
            for (m, _) in d.remainder.terms() {
                for g in &gs {
                    let (lm, _) = g.leading_term(ord).unwrap();
                    prop_assert!(!lm.divides(m));
                }
            }
        }

        #[test]
        fn leading_term_multiplicative(f in arb_poly(), g in arb_poly(), ord in arb_order()) {
            prop_assume!(!f.is_zero() && !g.is_zero());
            let (fm, fc) = f.leading_term(ord).unwrap();
            let (gm, gc) = g.leading_term(ord).unwrap();
            let (pm, pc) = (&f * &g).leading_term(ord).unwrap();
            prop_assert_eq!(pm, fm.mul(&gm));
            prop_assert_eq!(pc, fc * gc);
        }
    }
}
