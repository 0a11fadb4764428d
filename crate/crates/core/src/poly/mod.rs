//! Exact multivariate polynomials over the rationals.

mod monomial;
mod order;
mod parse;
mod polynomial;
mod ring;

pub use monomial::Monomial;
pub use order::MonomialOrder;
pub use parse::parse_polynomial;
pub use polynomial::{Point, Polynomial};
pub use ring::Ring;

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::Rational;
    use proptest::prelude::*;

    fn ring() -> Ring {
        Ring::from_list("x,y,z").unwrap()
    }

    fn arb_poly() -> impl Strategy<Value = Polynomial> {
        proptest::collection::vec(((0u16..3, 0u16..3, 0u16..3), -9i64..9, 1i64..4), 0..6).prop_map(
            |terms| {
                Polynomial::from_terms(
                    &ring(),
                    terms.into_iter().map(|((a, b, c), n, d)| {
                        (Monomial::from_exponents(&[a, b, c]), Rational::new(n, d))
                    }),
                )
            },
        )
    }

    fn arb_point() -> impl Strategy<Value = Point> {
        proptest::collection::vec((-5i64..5, 1i64..4), 3)
            .prop_map(|v| Point(v.into_iter().map(|(n, d)| Rational::new(n, d)).collect()))
    }

    proptest! {
        #[test]
        fn ring_axioms(f in arb_poly(), g in arb_poly(), h in arb_poly()) {
            prop_assert_eq!(&(&f * &g) * &h, &f * &(&g * &h));
            prop_assert_eq!(&f * &g, &g * &f);
            prop_assert_eq!(&f * &(&g + &h), &(&f * &g) + &(&f * &h));
            prop_assert_eq!(&(&f + &g) + &h, &f + &(&g + &h));
            prop_assert!((&f - &f).is_zero());
        }

        #[test]
        fn derivatives_commute(f in arb_poly(), i in 0usize..3, j in 0usize..3) {
            let a = f.partial_derivative(i).unwrap().partial_derivative(j).unwrap();
            let b = f.partial_derivative(j).unwrap().partial_derivative(i).unwrap();
            prop_assert_eq!(a, b);
        }

        #[test]
        fn leibniz_rule(f in arb_poly(), g in arb_poly(), i in 0usize..3) {
            let lhs = (&f * &g).partial_derivative(i).unwrap();
            let rhs = &(&f.partial_derivative(i).unwrap() * &g) + &(&f * &g.partial_derivative(i).unwrap());
            prop_assert_eq!(lhs, rhs);
        }

        #[test]
        fn evaluation_is_a_homomorphism(f in arb_poly(), g in arb_poly(), p in arb_point()) {
            let fp = f.evaluate(&p).unwrap();
            let gp = g.evaluate(&p).unwrap();
            prop_assert_eq!((&f * &g).evaluate(&p).unwrap(), &fp * &gp);
            prop_assert_eq!((&f + &g).evaluate(&p).unwrap(), &fp + &gp);
        }

        #[test]
        fn exact_division_recovers_factor(f in arb_poly(), g in arb_poly()) {
            prop_assume!(!g.is_zero());
            prop_assert_eq!((&f * &g).exact_divide(&g).unwrap(), Some(f));
        }
    }
}
