//! Identities of the symmetric pentagon model at random admissible points,
//! checked by enclosing both sides independently.

use eqpent_core::model::mechanics::{mass_internals, residuals_generic};
use eqpent_core::model::{geometry_from_y5, Branch, PentagonGeometry};
use eqpent_core::numeric::{pow10, sqrt_enclosure};
use eqpent_core::{Rational, RationalInterval, Scalar};
use num_bigint::BigInt;
use proptest::prelude::*;

fn q(n: i64, d: i64) -> Rational {
    Rational::new(BigInt::from(n), BigInt::from(d))
}

fn pt(x: Rational) -> RationalInterval {
    RationalInterval::point(x)
}

/// A pentagon on either branch at a rational `y5` inside the branch domain.
fn admissible() -> impl Strategy<Value = PentagonGeometry> {
    prop_oneof![
        (1i64..1936).prop_map(|k| (q(k, 1000), Branch::Plus)),
        (1867i64..1936).prop_map(|k| (q(k, 1000), Branch::Minus)),
    ]
    .prop_filter_map("outside the branch domain", |(y5, branch)| {
        geometry_from_y5(&pt(y5), branch).ok()
    })
}

fn mass() -> impl Strategy<Value = Rational> {
    (1i64..1000).prop_map(|k| q(k, 1000))
}

fn sqrt(x: RationalInterval) -> RationalInterval {
    sqrt_enclosure(&x.clamp_nonnegative().unwrap(), &pow10(-40)).unwrap()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(100))]

    /// `e8 - e9 = -(m1-m2) sqrt(3+4x3-4x3^2) (-1 + r + 2 x3 r) / (2 r^3)`
    /// with `r = sqrt(1+2x3)`, for arbitrary masses.
    #[test]
    fn e8_minus_e9(g in admissible(), m in prop::array::uniform5(mass()), lambda in mass()) {
        let masses = m.clone().map(pt);
        let e = residuals_generic(&g.positions(), &masses, &pt(lambda), &pow10(-40)).unwrap();
        let lhs = e[7].clone() - e[8].clone();
        let x3 = g.x3.clone();
        let one = pt(q(1, 1));
        let two = pt(q(2, 1));
        let r = sqrt(one.clone() + two.clone() * x3.clone());
        let y = sqrt(pt(q(3, 1)) + pt(q(4, 1)) * x3.clone() - pt(q(4, 1)) * x3.powi(2));
        let num = -(pt(&m[0] - &m[1])) * y * (-one + r.clone() + two.clone() * x3 * r.clone());
        let rhs = num.try_div(&(two * r.powi(3))).unwrap();
        prop_assert!(lhs.intersect(&rhs).is_some(), "{:?} vs {:?}", lhs, rhs);
    }

    /// `e3 + e4 = (m3-m4)(1 + 8 lambda x3^3)/(4 x3^2)` once `m1 = m2` and the
    /// masses sum to one. `lambda` there is the acceleration-convention
    /// multiplier, the negative of the one in the residuals.
    #[test]
    fn e3_plus_e4(g in admissible(), m1 in 1i64..200, m3 in 1i64..200, m4 in 1i64..200, lambda in mass()) {
        let (m1, m3, m4) = (q(m1, 1000), q(m3, 1000), q(m4, 1000));
        let m5 = q(1, 1) - q(2, 1) * &m1 - &m3 - &m4;
        let masses = [m1.clone(), m1, m3.clone(), m4.clone(), m5].map(pt);
        let e = residuals_generic(&g.positions(), &masses, &pt(lambda.clone()), &pow10(-40)).unwrap();
        let lhs = e[2].clone() + e[3].clone();
        let x3 = g.x3.clone();
        let acc = pt(-lambda);
        let num = pt(&m3 - &m4) * (pt(q(1, 1)) + pt(q(8, 1)) * acc * x3.powi(3));
        let rhs = num.try_div(&(pt(q(4, 1)) * x3.powi(2))).unwrap();
        prop_assert!(lhs.intersect(&rhs).is_some(), "{:?} vs {:?}", lhs, rhs);
    }

    /// With the multiplier `L1/L2` substituted, `g4` vanishes identically.
    #[test]
    fn g4_vanishes_at_lambda2(g in admissible()) {
        let v = g.vars();
        prop_assume!(!eqpent_core::model::formulas::l2(&v).contains_zero());
        let internals = mass_internals(&v).unwrap();
        prop_assert!(internals.g4.contains_zero(), "{:?}", internals.g4);
        prop_assert!(internals.g3.contains_zero(), "{:?}", internals.g3);
    }
}
