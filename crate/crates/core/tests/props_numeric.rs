//! Interval arithmetic against exact rational evaluation at sample points.

use eqpent_core::numeric::{render_decimal, sqrt_enclosure};
use eqpent_core::{Rational, RationalInterval, Scalar};
use num_bigint::BigInt;
use num_traits::{Signed, Zero};
use proptest::prelude::*;

fn rational() -> impl Strategy<Value = Rational> {
    (-2000i64..2000, 1i64..300).prop_map(|(n, d)| Rational::new(BigInt::from(n), BigInt::from(d)))
}

fn unit() -> impl Strategy<Value = Rational> {
    (0i64..=64).prop_map(|k| Rational::new(BigInt::from(k), BigInt::from(64)))
}

/// An interval together with a point inside it, placed at fraction `u`.
fn interval_with_point() -> impl Strategy<Value = (RationalInterval, Rational)> {
    (rational(), rational(), unit()).prop_map(|(a, b, u)| {
        let iv = RationalInterval::spanning(a, b);
        let x = iv.lo() + u * iv.width();
        (iv, x)
    })
}

fn nonnegative_with_point() -> impl Strategy<Value = (RationalInterval, Rational)> {
    interval_with_point()
        .prop_map(|(iv, x)| {
            let (lo, hi) = iv.into_bounds();
            (RationalInterval::spanning(lo.abs(), hi.abs()), x.abs())
        })
        .prop_filter("point must stay inside after folding", |(iv, x)| {
            iv.contains(x)
        })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(10_000))]

    #[test]
    fn operations_contain_exact_images(
        (a, x) in interval_with_point(),
        (b, y) in interval_with_point(),
        n in 0u32..6,
        (c, z) in nonnegative_with_point(),
    ) {
        prop_assert!((a.clone() + b.clone()).contains(&(&x + &y)));
        prop_assert!((a.clone() - b.clone()).contains(&(&x - &y)));
        prop_assert!((a.clone() * b.clone()).contains(&(&x * &y)));
        prop_assert!((-a.clone()).contains(&-x.clone()));
        prop_assert!(a.powi(n).contains(&x.powi(n)));
        if !b.contains_zero() {
            prop_assert!(a.try_div(&b).unwrap().contains(&(&x / &y)));
            prop_assert!(b.recip().unwrap().contains(&y.recip()));
        } else {
            prop_assert!(b.recip().is_err());
        }
        let width = Rational::new(BigInt::from(1), BigInt::from(1_000_000));
        let r = sqrt_enclosure(&c, &width).unwrap();
        // sqrt(z) in [lo, hi] iff lo^2 <= z <= hi^2 for lo, hi >= 0
        prop_assert!(!r.lo().is_negative());
        prop_assert!(r.lo() * r.lo() <= z && z <= r.hi() * r.hi());
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(2_000))]

    #[test]
    fn shrinking_inputs_never_widens_outputs(
        (a, x) in interval_with_point(),
        (b, y) in interval_with_point(),
        n in 0u32..6,
    ) {
        let (a2, b2) = (RationalInterval::spanning(a.lo().clone(), x), RationalInterval::spanning(y, b.hi().clone()));
        prop_assert!((a.clone() + b.clone()).contains_interval(&(a2.clone() + b2.clone())));
        prop_assert!((a.clone() - b.clone()).contains_interval(&(a2.clone() - b2.clone())));
        prop_assert!((a.clone() * b.clone()).contains_interval(&(a2.clone() * b2.clone())));
        prop_assert!(a.powi(n).contains_interval(&a2.powi(n)));
        if !b.contains_zero() {
            prop_assert!(a.try_div(&b).unwrap().contains_interval(&a2.try_div(&b2).unwrap()));
        }
    }

    #[test]
    fn sqrt_of_square_recontains(x in rational(), k in 1i32..40) {
        let x = x.abs();
        let sq = RationalInterval::point(&x * &x);
        let width = eqpent_core::numeric::pow10(-k);
        let r = sqrt_enclosure(&sq, &width).unwrap();
        prop_assert!(r.contains(&x));
        prop_assert!(r.width() <= width);
    }

    #[test]
    fn decimal_digits_are_guaranteed((a, x) in interval_with_point(), k in 1i32..12) {
        let shrunk = RationalInterval::spanning(
            &x - eqpent_core::numeric::pow10(-k) * a.width(),
            x.clone(),
        );
        if let Some(d) = render_decimal(&shrunk, 20) {
            // every point of the interval rounds to the printed text
            let printed = eqpent_core::numeric::parse_rational(&d.text).unwrap();
            let half_ulp = eqpent_core::numeric::pow10(-(d.digits as i32)) / Rational::from_integer(BigInt::from(2));
            prop_assert!((shrunk.lo() - &printed).abs() <= half_ulp);
            prop_assert!((shrunk.hi() - &printed).abs() <= half_ulp);
            prop_assert!(shrunk.width() < half_ulp || shrunk.width().is_zero());
        }
    }
}
