use num_bigint::BigInt;
use num_traits::Zero;

use super::{UniPoly, UpolyError, Var};

/// `V_k(u)` with `t^k + t^-k = V_k(t + 1/t)`, for `k = 0..=m`.
fn chebyshev_like(m: usize) -> Vec<UniPoly> {
    let u = UniPoly::from_i64s(&[0, 1], Var::U);
    let mut v = vec![UniPoly::from_i64s(&[2], Var::U), u.clone()];
    for k in 2..=m {
        let next = &(&u * &v[k - 1]) - &v[k - 2];
        v.push(next);
    }
    v.truncate(m + 1);
    v
}

/// For reciprocal `p` of degree `2m`, the degree-`m` polynomial `R` with
/// `p(t) = t^m R(t + 1/t)`.
pub fn reciprocal_reduce(p: &UniPoly) -> Result<UniPoly, UpolyError> {
    let d = p.degree().ok_or(UpolyError::ZeroPolynomial)?;
    if d % 2 == 1 {
        return Err(UpolyError::OddDegree);
    }
    if !p.is_reciprocal() {
        return Err(UpolyError::NotReciprocal);
    }
    let m = d / 2;
    let v = chebyshev_like(m);
    let mut r = UniPoly::constant(p.coeff(m), Var::U);
    for (k, vk) in v.iter().enumerate().skip(1) {
        let a = p.coeff(m + k);
        if !a.is_zero() {
            r = &r + &vk.scale(&a);
        }
    }
    Ok(r)
}

/// `t^m R(t + 1/t)` for `R` of degree `m`.
pub fn reciprocal_expand(r: &UniPoly, var: Var) -> UniPoly {
    let m = r.deg();
    let base = UniPoly::from_i64s(&[1, 0, 1], var);
    let mut out = UniPoly::zero(var);
    let mut pow = UniPoly::one(var);
    for k in 0..=m {
        let c = r.coeff(k);
        if !c.is_zero() {
            // t^(m-k) (t^2+1)^k
            let shifted = UniPoly::new(
                std::iter::repeat_n(BigInt::zero(), m - k)
                    .chain(pow.coeffs().iter().cloned())
                    .collect(),
                var,
            );
            out = &out + &shifted.scale(&c);
        }
        pow = &pow * &base;
    }
    out
}

/// `Res_t(p, t^2 - u t + 1)` as a polynomial in `u`, via the norm of
/// `p mod (t^2 - u t + 1) = A(u) + B(u) t`: the result is `A^2 + A B u + B^2`.
pub fn reciprocal_quadratic_resultant(p: &UniPoly) -> UniPoly {
    let u = UniPoly::from_i64s(&[0, 1], Var::U);
    let mut a_k = UniPoly::one(Var::U);
    let mut b_k = UniPoly::zero(Var::U);
    let mut a = UniPoly::zero(Var::U);
    let mut b = UniPoly::zero(Var::U);
    for c in p.coeffs() {
        if !c.is_zero() {
            a = &a + &a_k.scale(c);
            b = &b + &b_k.scale(c);
        }
        // t * (A + B t) = -B + (A + u B) t
        let next_a = -&b_k;
        let next_b = &a_k + &(&u * &b_k);
        a_k = next_a;
        b_k = next_b;
    }
    &(&(&a * &a) + &(&(&a * &b) * &u)) + &(&b * &b)
}
