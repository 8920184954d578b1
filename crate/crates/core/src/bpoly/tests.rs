use std::collections::BTreeMap;

use super::*;

const ST: [Var; 2] = [Var::S, Var::T];

fn bp(terms: &[((u32, u32), i64)]) -> BiPoly {
    BiPoly::from_terms(terms.iter().map(|&(e, c)| (e, BigInt::from(c))), ST)
}

#[test]
fn linear_resultant() {
    let f = bp(&[((1, 0), 1), ((0, 1), -1)]);
    let g = bp(&[((1, 0), 1), ((0, 1), 1)]);
    for route in [ResultantRoute::Direct, ResultantRoute::Interpolation] {
        let r = resultant_via(&f, &g, Var::S, route).unwrap();
        assert_eq!(r.value(), UniPoly::from_i64s(&[0, 2], Var::T));
        assert_eq!(r.content, BigInt::from(2));
    }
}

#[test]
fn sign_convention_matches_product_formula() {
    // Res_x(x-2, x-5) = g(2) = -3
    let f = bp(&[((1, 0), 1), ((0, 0), -2)]);
    let g = bp(&[((1, 0), 1), ((0, 0), -5)]);
    let r = resultant(&f, &g, Var::S).unwrap();
    assert_eq!(r.value(), UniPoly::from_i64s(&[-3], Var::T));
    let m = sylvester_matrix(
        &[BigInt::from(-2), BigInt::from(1)],
        &[BigInt::from(-5), BigInt::from(1)],
    );
    assert_eq!(bareiss_determinant(m), BigInt::from(-3));
}

#[test]
fn degenerate_inputs() {
    let f = bp(&[((1, 0), 1)]);
    let c = bp(&[((0, 3), 1)]);
    assert!(matches!(
        resultant(&f, &c, Var::S),
        Err(BpolyError::DegenerateInput(_))
    ));
    assert!(matches!(
        resultant(&f, &BiPoly::zero(ST), Var::S),
        Err(BpolyError::DegenerateInput(_))
    ));
    assert!(matches!(
        resultant(&f, &f, Var::U),
        Err(BpolyError::UnknownVariable(Var::U))
    ));
}

#[test]
fn bareiss_pivots() {
    let m: Vec<Vec<BigInt>> = [[0, 2, 1], [1, 1, 1], [2, 0, 3]]
        .iter()
        .map(|r| r.iter().map(|&v| BigInt::from(v)).collect())
        .collect();
    // 0*(3-0) - 2*(3-2) + 1*(0-2) = -4
    assert_eq!(bareiss_determinant(m), BigInt::from(-4));
}

#[test]
fn routes_agree_on_mixed_degrees() {
    let f = bp(&[
        ((3, 0), 2),
        ((2, 1), -1),
        ((1, 2), 3),
        ((0, 0), 5),
        ((1, 0), -7),
    ]);
    let g = bp(&[((2, 2), 1), ((1, 0), 4), ((0, 3), -2), ((0, 1), 1)]);
    for v in [Var::S, Var::T] {
        let a = resultant_via(&f, &g, v, ResultantRoute::Direct).unwrap();
        let b = resultant_via(&f, &g, v, ResultantRoute::Interpolation).unwrap();
        assert_eq!(a, b);
    }
}

#[test]
fn evaluation_at_origin_is_constant_term() {
    let f = bp(&[((3, 1), 2), ((0, 0), -11), ((1, 0), 4)]);
    let z = crate::Rational::zero();
    assert_eq!(
        f.eval(&z, &z),
        crate::Rational::from_integer(BigInt::from(-11))
    );
}

#[test]
fn text_round_trip() {
    let f = bp(&[((3, 1), 2), ((0, 0), -11), ((1, 0), 4)]);
    assert_eq!(f.to_text(), "0 0 -11\n1 0 4\n3 1 2\n");
    assert_eq!(BiPoly::from_text(&f.to_text(), ST).unwrap(), f);
    assert!(BiPoly::from_text("1 2\n", ST).is_err());
}

#[test]
fn compose_y5() {
    // y5 = (1 - t^2)/(4t)
    let y5 = RatFun2::new(
        bp(&[((0, 0), 1), ((0, 2), -1)]),
        BigInt::from(4),
        [1, 0, 0, 0],
    )
    .unwrap();
    let mut b = BTreeMap::new();
    b.insert(Sym::Y5, y5.clone());
    let r = ratfun_compose(&SymPoly::var(Sym::Y5), &b).unwrap();
    assert_eq!(r, y5);
    assert_eq!(r.denominator(), bp(&[((0, 1), 4)]));
    let missing = ratfun_compose(&SymPoly::var(Sym::X3), &b);
    assert_eq!(missing, Err(BpolyError::UnboundSymbol(Sym::X3)));
}

#[test]
fn reduce_cancels_atoms() {
    // (2s-1) * s * t / (6 * s * t^2 * (2s-1))  ->  1 / (6 t)
    let num = &bp(&[((1, 0), 2), ((0, 0), -1)]) * &bp(&[((1, 1), 2)]);
    let r = RatFun2::new(num, BigInt::from(12), [2, 1, 1, 0])
        .unwrap()
        .reduce();
    assert_eq!(r.num(), &bp(&[((0, 0), 1)]));
    assert_eq!(r.den_const(), &BigInt::from(6));
    assert_eq!(r.den_atoms(), [1, 0, 0, 0]);
}

#[test]
fn ratfun_eval_rejects_zero_denominator() {
    let r = RatFun2::new(bp(&[((0, 0), 1)]), BigInt::one(), [1, 0, 0, 0]).unwrap();
    let z = crate::Rational::zero();
    assert_eq!(r.eval(&z, &z), Err(BpolyError::DenominatorZero));
}
