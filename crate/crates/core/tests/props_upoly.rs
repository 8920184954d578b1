//! Root counting, isolation and the reciprocal substitution against
//! polynomials built from known roots or known reductions.

use std::cmp::Ordering;
use std::collections::BTreeSet;

use eqpent_core::upoly::{
    poly_square_root, reciprocal_expand, reciprocal_reduce, sturm_count, Bound, OpenRange,
    RootIsolator,
};
use eqpent_core::{Rational, UniPoly, Var};
use num_bigint::BigInt;
use num_traits::{One, Signed};
use proptest::prelude::*;

fn q(n: i64, d: i64) -> Rational {
    Rational::new(BigInt::from(n), BigInt::from(d))
}

/// Distinct rational roots with small denominators.
fn roots(max: usize) -> impl Strategy<Value = Vec<Rational>> {
    prop::collection::vec((-40i64..40, 1i64..6), 1..=max).prop_map(|v| {
        let set: BTreeSet<Rational> = v.into_iter().map(|(n, d)| q(n, d)).collect();
        set.into_iter().collect()
    })
}

/// `c * prod (den x - num)` over the given roots.
fn from_roots(roots: &[Rational], c: i64) -> UniPoly {
    roots
        .iter()
        .fold(UniPoly::constant(BigInt::from(c), Var::T), |acc, r| {
            &acc * &UniPoly::linear_root(r, Var::T)
        })
}

fn bound() -> impl Strategy<Value = Bound> {
    prop_oneof![
        1 => Just(Bound::NegInf),
        1 => Just(Bound::PosInf),
        6 => (-50i64..50, 1i64..6).prop_map(|(n, d)| Bound::Finite(q(n, d))),
    ]
}

fn rank(b: &Bound) -> (i8, Option<&Rational>) {
    match b {
        Bound::NegInf => (-1, None),
        Bound::Finite(x) => (0, Some(x)),
        Bound::PosInf => (1, None),
    }
}

fn below(a: &Bound, x: &Rational) -> bool {
    match a {
        Bound::NegInf => true,
        Bound::PosInf => false,
        Bound::Finite(v) => v < x,
    }
}

/// True when `x` is at or beyond the upper end.
fn at_or_above(hi: &Bound, x: &Rational) -> bool {
    match hi {
        Bound::NegInf => true,
        Bound::PosInf => false,
        Bound::Finite(v) => x >= v,
    }
}

fn small_poly(var: Var, max_deg: usize) -> impl Strategy<Value = UniPoly> {
    prop::collection::vec(-30i64..30, 1..=max_deg + 1)
        .prop_map(move |c| UniPoly::from_i64s(&c, var))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(1_000))]

    #[test]
    fn sturm_count_matches_constructed_roots(
        rs in roots(8),
        c in prop_oneof![-7i64..-1, 1i64..7],
        a in bound(),
        b in bound(),
    ) {
        let p = from_roots(&rs, c);
        let (lo, hi) = if rank(&a) <= rank(&b) { (a, b) } else { (b, a) };
        let expected = rs.iter().filter(|r| below(&lo, r) && !at_or_above(&hi, r)).count();
        let range = OpenRange { lo, hi };
        prop_assert_eq!(sturm_count(&p, &range).unwrap(), expected);
        // repeated factors do not change the count of distinct roots
        let squared = &p * &UniPoly::linear_root(&rs[0], Var::T);
        prop_assert_eq!(sturm_count(&squared, &range).unwrap(), expected);
    }

    #[test]
    fn isolating_intervals_carry_a_sign_change(rs in roots(8), c in prop_oneof![-7i64..-1, 1i64..7], k in 2u64..40) {
        // x^2 - k adds irrational roots when k is not a square
        let p = &from_roots(&rs, c) * &UniPoly::new(vec![-BigInt::from(k), BigInt::from(0), BigInt::from(1)], Var::T);
        let Ok(iso) = RootIsolator::new("p", &p) else {
            // only possible when sqrt(k) is one of the rational roots
            let r = num_integer::Roots::sqrt(&k);
            prop_assert_eq!(r * r, k);
            return Ok(());
        };
        let found = iso.isolate(&OpenRange::all());
        prop_assert_eq!(found.len(), iso.count(&OpenRange::all()));
        for w in found.windows(2) {
            prop_assert!(w[0].interval.hi() <= w[1].interval.lo());
        }
        let width = q(1, 1_000_000);
        for root in &found {
            let (lo, hi) = (root.interval.lo(), root.interval.hi());
            prop_assert_eq!(p.sign_at(lo).reverse(), p.sign_at(hi));
            prop_assert!(p.sign_at(lo) != Ordering::Equal);
            let fine = iso.refine(root, &width);
            prop_assert!(fine.interval.width() <= width);
            prop_assert!(root.interval.contains_interval(&fine.interval));
            if fine.interval.is_point() {
                prop_assert_eq!(p.sign_at(fine.interval.lo()), Ordering::Equal);
            } else {
                prop_assert_eq!(p.sign_at(fine.interval.lo()).reverse(), p.sign_at(fine.interval.hi()));
            }
        }
    }

    #[test]
    fn reciprocal_reduce_inverts_expand(r in small_poly(Var::U, 10)) {
        prop_assume!(!r.is_zero());
        let p = reciprocal_expand(&r, Var::T);
        prop_assert!(p.is_reciprocal());
        prop_assert_eq!(p.degree(), Some(2 * r.degree().unwrap()));
        prop_assert_eq!(reciprocal_reduce(&p).unwrap(), r);
    }

    #[test]
    fn reciprocal_expand_inverts_reduce(half in prop::collection::vec(-30i64..30, 1..=11)) {
        // palindromic coefficients a_0..a_m..a_0
        let mut c = half.clone();
        c.extend(half.iter().rev().skip(1));
        prop_assume!(c[0] != 0);
        let p = UniPoly::from_i64s(&c, Var::T);
        let r = reciprocal_reduce(&p).unwrap();
        prop_assert_eq!(reciprocal_expand(&r, Var::T), p);
    }

    #[test]
    fn square_root_of_square(f in small_poly(Var::T, 8)) {
        prop_assume!(!f.is_zero());
        let r = poly_square_root(&(&f * &f)).unwrap();
        prop_assert!(r == f || r == -f.clone());
        prop_assert!(r.leading_coeff().is_positive());
    }

    #[test]
    fn gcd_recovers_common_factor(a in small_poly(Var::T, 4), b in small_poly(Var::T, 4), c in small_poly(Var::T, 4)) {
        prop_assume!(!a.is_zero() && !b.is_zero() && !c.is_zero());
        let g = (&a * &c).gcd(&(&b * &c));
        prop_assert!(g.exact_divide(&c.primitive_part()).is_ok());
        prop_assert!((&a * &c).exact_divide(&g).is_ok());
        prop_assert!((&b * &c).exact_divide(&g).is_ok());
        prop_assert_eq!(g.content(), BigInt::one());
    }
}
