//! Resultants against the product-over-roots formula.
//!
//! `f(s, t) = c * prod_i (s - a_i - b_i t)` has the roots `r_i(t) = a_i + b_i t`
//! in `s`, so `Res_s(f, g) = c^deg_s(g) * prod_i g(r_i(t), t)`. Both sides are
//! evaluated with interval arithmetic at sample values of `t`.

use eqpent_core::bpoly::{resultant, resultant_via, ResultantRoute};
use eqpent_core::{BiPoly, Rational, RationalInterval, Scalar, Var};
use num_bigint::BigInt;
use num_traits::{One, Zero};
use proptest::prelude::*;

const ST: [Var; 2] = [Var::S, Var::T];

fn linear_roots() -> impl Strategy<Value = Vec<(i64, i64)>> {
    prop::collection::vec((-5i64..5, -3i64..3), 1..=3)
}

/// A bivariate polynomial of degree at most 3 in each variable, with a
/// nonzero `s` part.
fn bivariate() -> impl Strategy<Value = BiPoly> {
    prop::collection::vec(((0u32..=3, 0u32..=3), -9i64..9), 1..10)
        .prop_map(|terms| {
            BiPoly::from_terms(terms.into_iter().map(|(e, c)| (e, BigInt::from(c))), ST)
        })
        .prop_filter("needs positive degree in s", |g| {
            g.degree_in(0).unwrap_or(0) > 0
        })
}

fn from_linear_roots(roots: &[(i64, i64)], c: i64) -> BiPoly {
    roots
        .iter()
        .fold(BiPoly::constant(BigInt::from(c), ST), |acc, &(a, b)| {
            let factor = BiPoly::from_terms(
                [
                    ((1, 0), BigInt::one()),
                    ((0, 0), BigInt::from(-a)),
                    ((0, 1), BigInt::from(-b)),
                ],
                ST,
            );
            &acc * &factor
        })
}

fn point(n: i64) -> RationalInterval {
    RationalInterval::point(Rational::from_integer(BigInt::from(n)))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(100))]

    #[test]
    fn resultant_matches_product_over_roots(
        roots in linear_roots(),
        c in prop_oneof![-4i64..-1, 1i64..4],
        g in bivariate(),
    ) {
        let f = from_linear_roots(&roots, c);
        let r = resultant(&f, &g, Var::S).unwrap().value();
        let m = g.degree_in(0).unwrap();
        for t in -3i64..=3 {
            let t_iv = point(t);
            let mut product = point(c).powi(m);
            for &(a, b) in &roots {
                let s_iv = point(a) + point(b) * t_iv.clone();
                product = product * g.eval(&s_iv, &t_iv);
            }
            let lhs: RationalInterval = r.eval(&t_iv);
            prop_assert!(lhs.intersect(&product).is_some(), "t = {}: {:?} vs {:?}", t, lhs, product);
        }
    }

    #[test]
    fn swapping_arguments_changes_sign_by_degree_parity(f in bivariate(), g in bivariate()) {
        let (Ok(fg), Ok(gf)) = (resultant(&f, &g, Var::S), resultant(&g, &f, Var::S)) else {
            return Ok(());
        };
        let parity = f.degree_in(0).unwrap() * g.degree_in(0).unwrap() % 2;
        let expected = if parity == 0 { gf.value() } else { -gf.value() };
        prop_assert_eq!(fg.value(), expected);
        let direct = resultant_via(&f, &g, Var::S, ResultantRoute::Direct).unwrap();
        let interp = resultant_via(&f, &g, Var::S, ResultantRoute::Interpolation).unwrap();
        prop_assert_eq!(direct, interp);
    }

    #[test]
    fn content_times_primitive_is_original(f in bivariate(), k in 1i64..20) {
        let scaled = f.scale(&BigInt::from(k));
        let (content, primitive) = scaled.content_and_primitive();
        prop_assert_eq!(primitive.scale(&content), scaled.clone());
        prop_assert!(!content.is_zero());
        // the zero set is unchanged: evaluations differ by the content only
        let (s, t) = (Rational::new(BigInt::from(3), BigInt::from(7)), Rational::new(BigInt::from(-2), BigInt::from(5)));
        let a = scaled.eval_rational(&s, &t);
        let b = primitive.eval_rational(&s, &t);
        prop_assert_eq!(a, b * Rational::from_integer(content));
    }
}
