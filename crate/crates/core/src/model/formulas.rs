//! The reduced central-configuration system written once, generic over the
//! scalar type.

use crate::numeric::NumericError;
use crate::scalar::Scalar;

/// Values of `x3, y5, E1, E2, E3`.
#[derive(Debug, Clone, PartialEq)]
pub struct ModelVars<T> {
    pub x3: T,
    pub y5: T,
    pub e1: T,
    pub e2: T,
    pub e3: T,
}

impl<T: Scalar> ModelVars<T> {
    pub fn as_array(&self) -> [T; 5] {
        [
            self.x3.clone(),
            self.y5.clone(),
            self.e1.clone(),
            self.e2.clone(),
            self.e3.clone(),
        ]
    }
}

#[inline]
fn k<T: Scalar>(n: i64) -> T {
    T::from_i64(n)
}

/// `h1` in the grouped form.
pub fn h1<T: Scalar>(v: &ModelVars<T>) -> T {
    let ModelVars { x3, y5, e1, e2, e3 } = v.clone();
    let x2 = x3.powi(2);
    let x4 = x3.powi(4);
    let x3c = x3.powi(3);
    let e1sq = e1.powi(2);
    let e1m1sq = (e1.clone() - k(1)).powi(2);
    let w = k::<T>(1) + k::<T>(2) * x3.clone();
    let a = k::<T>(4) * e1sq.clone() * (e3.clone() - k(16)) * x4.clone()
        - k::<T>(8)
            * e1.clone()
            * (e1.clone() * e3.clone() - k::<T>(4) * e1.clone() - k(4))
            * x3c.clone()
        - e3.clone() * e1m1sq.clone() * x2.clone()
        + e1sq.clone() * (e3.clone() - k(8));
    let b = k::<T>(16) * e1sq.clone() * (e3.clone() - k(4)) * x4
        + k::<T>(4)
            * e1.clone()
            * (k::<T>(3) * e1.clone() * e3.clone() - k::<T>(8) * e1.clone() - e3.clone() - k(8))
            * x3c
        + k::<T>(2) * e3.clone() * e1m1sq * x2.clone()
        - k::<T>(2) * e1sq.clone() * (e3.clone() - k(8)) * x3.clone()
        - e1sq * (e3.clone() - k(8));
    let c = k::<T>(2) * x3 * e1.clone() + e1 - k(1);
    -k::<T>(4) * w.powi(2) * a * y5.powi(2) - k::<T>(2) * e2.clone() * w * b * y5
        + e2.powi(2) * e3 * x2 * c.powi(2)
}

/// `h1` in the fully expanded thirteen-addend form; each addend is a
/// monomial in `E1, E2, E3` with a polynomial coefficient in `x3, y5`.
pub fn h1_expanded<T: Scalar>(v: &ModelVars<T>) -> T {
    let ModelVars { x3, y5, e1, e2, e3 } = v.clone();
    let p = |c: &[i64]| {
        // polynomial in x3, coefficients low degree first
        let mut acc = T::zero();
        for &ci in c.iter().rev() {
            acc = acc * x3.clone() + k(ci);
        }
        acc
    };
    let x2 = x3.powi(2);
    let x3c = x3.powi(3);
    let y2 = y5.powi(2);
    let q = p(&[1, 4, 4]); // 4x^2+4x+1
    let w = p(&[1, 2]);
    let e1sq = e1.powi(2);
    let e2sq = e2.powi(2);
    let terms = [
        -k::<T>(128) * x3c.clone() * y2.clone() * q.clone() * e1.clone(),
        k::<T>(4) * x2.clone() * y2.clone() * q.clone() * e3.clone(),
        k::<T>(32) * y2.clone() * p(&[1, 4, 4, -4, -8, 16, 32]) * e1sq.clone(),
        k::<T>(64) * x3c * y5.clone() * w.clone() * e1.clone() * e2.clone(),
        -k::<T>(8) * x2.clone() * y2.clone() * q.clone() * e1.clone() * e3.clone(),
        -k::<T>(4) * x2.clone() * y5.clone() * w.clone() * e3.clone() * e2.clone(),
        k::<T>(16) * y5.clone() * p(&[-1, -4, -4, 4, 16, 16]) * e1sq.clone() * e2.clone(),
        -k::<T>(4) * y2 * p(&[1, 4, 3, -12, -32, -16, 16]) * e1sq.clone() * e3.clone(),
        k::<T>(8) * x2.clone() * y5.clone() * p(&[1, 3, 2]) * e1.clone() * e2.clone() * e3.clone(),
        e2sq.clone() * e3.clone() * x2.clone(),
        -k::<T>(2) * y5 * p(&[-1, -4, -2, 16, 40, 32]) * e1sq.clone() * e2 * e3.clone(),
        -k::<T>(2) * x2.clone() * w * e1 * e2sq.clone() * e3.clone(),
        x2 * q * e1sq * e2sq * e3,
    ];
    terms.into_iter().fold(T::zero(), |a, b| a + b)
}

/// `h2 = (1-4x3)^2 (1+4y5^2) + 4y5^2 (4y5^2-15)`.
pub fn h2<T: Scalar>(x3: &T, y5: &T) -> T {
    let y2 = y5.powi(2);
    (k::<T>(1) - k::<T>(4) * x3.clone()).powi(2) * (k::<T>(1) + k::<T>(4) * y2.clone())
        + k::<T>(4) * y2.clone() * (k::<T>(4) * y2 - k(15))
}

fn edge<T: Scalar>(v: &ModelVars<T>) -> T {
    // 2 x3 E1 + E1 - 1
    k::<T>(2) * v.x3.clone() * v.e1.clone() + v.e1.clone() - k(1)
}

pub fn l1<T: Scalar>(v: &ModelVars<T>) -> T {
    let ModelVars { x3, y5, e1, e2, e3 } = v.clone();
    let x2 = x3.powi(2);
    let inner = k::<T>(2) * e1.clone() * e3.clone() * x3.powi(3)
        - e1.clone() * e3.clone() * x2.clone()
        + x2.clone() * e3.clone()
        - k::<T>(4) * e1;
    -k::<T>(2) * (k::<T>(1) + k::<T>(2) * x3) * inner * y5 - e2 * e3 * x2 * edge(v)
}

pub fn l2<T: Scalar>(v: &ModelVars<T>) -> T {
    let ModelVars { x3, y5, e1, e2, e3 } = v.clone();
    let x2 = x3.powi(2);
    let x3c = x3.powi(3);
    let inner = k::<T>(12) * e1.clone() * e3.clone() * x3c.clone()
        - k::<T>(2) * e1.clone() * e3.clone() * x2.clone()
        - k::<T>(64) * x3c * e1.clone()
        + k::<T>(2) * x2.clone() * e3.clone()
        - e1 * e3.clone();
    (k::<T>(1) + k::<T>(2) * x3) * inner * y5 + e2 * e3 * x2 * edge(v)
}

/// Denominator `m` shared by the mass formulas.
pub fn mass_denominator<T: Scalar>(v: &ModelVars<T>, lambda: &T) -> T {
    let ModelVars { x3, y5, e1, e2, e3 } = v.clone();
    let lam = lambda.clone();
    let first = e2.clone() * e3.clone() * lam.clone()
        + k::<T>(2) * lam.clone() * y5.clone() * e3.clone()
        + e2.clone() * e3.clone()
        - k::<T>(2) * e3.clone() * y5.clone()
        + k::<T>(32) * y5.clone();
    k::<T>(2) * e1.clone() * first * x3.powi(3)
        + e3.clone()
            * (k::<T>(1) + lam.clone())
            * (e2 - k::<T>(2) * y5.clone())
            * (e1.clone() - k(1))
            * x3.powi(2)
        - e1 * y5 * (lam * e3 + k(8))
}

pub fn m1_numerator<T: Scalar>(v: &ModelVars<T>, lambda: &T) -> T {
    let ModelVars { x3, y5, e1, e2, e3 } = v.clone();
    k::<T>(2) * e1 * e3 * (k::<T>(1) + lambda.clone()).powi(2) * x3.powi(3) * (e2 - k::<T>(2) * y5)
}

pub fn m3_numerator<T: Scalar>(v: &ModelVars<T>, lambda: &T) -> T {
    let ModelVars { x3, y5, e1, e3, .. } = v.clone();
    k::<T>(4)
        * e1
        * (k::<T>(1) + lambda.clone())
        * (k::<T>(8) + e3 * lambda.clone())
        * x3.powi(3)
        * y5
}

/// The factored mass `m5 = F / (L2^2 m)`, with `m` the mass denominator at
/// `lambda = L1/L2`; equals `1 - 2(m1 + m3)`.
pub fn m5_factored<T: Scalar>(v: &ModelVars<T>) -> Result<T, NumericError> {
    let ModelVars { x3, y5, e1, e2, e3 } = v.clone();
    let lambda = l1(v).try_div(&l2(v))?;
    let pre = k::<T>(2)
        * e1.clone()
        * y5.clone()
        * x3.powi(3)
        * e2.clone()
        * e3.clone()
        * (k::<T>(2) * x3.clone() - k(1))
        * (k::<T>(4) * x3.powi(2) + k::<T>(2) * x3.clone() + k(1))
        * (e3.clone() - k(8));
    let bracket = k::<T>(8) * e1.powi(2) * (e3.clone() - k(16)) * x3.powi(4)
        + k::<T>(8) * e1.clone() * (e3.clone() - k(8)) * (e1.clone() + k(1)) * x3.powi(3)
        + k::<T>(2) * e3.clone() * (e1.clone() - k(1)).powi(2) * x3.powi(2)
        - k::<T>(2) * e1.powi(2) * (e3.clone() - k(16)) * x3.clone()
        - e1.clone() * (e1.clone() * e3.clone() - k::<T>(16) * e1.clone() + e3.clone());
    let tail = -(k::<T>(1) + k::<T>(2) * x3.clone()) * bracket * y5
        + e2 * e3 * x3.powi(2) * edge(v).powi(2);
    let l2 = l2(v);
    (pre * tail).try_div(&(l2.clone() * l2 * mass_denominator(v, &lambda)))
}

pub fn g1<T: Scalar>(v: &ModelVars<T>, lambda: &T) -> T {
    let ModelVars { x3, y5, e1, e2, e3 } = v.clone();
    let lam = lambda.clone();
    let one_l = k::<T>(1) + lam.clone();
    let le8 = lam.clone() * e3.clone() + k(8);
    let e3sq = e3.powi(2);
    let cubic_y = k::<T>(16) * e1.clone() * e3sq.clone() * lam.clone()
        - k::<T>(4) * lam.powi(2) * e3sq.clone()
        + k::<T>(8) * e1.clone() * e3sq.clone()
        - k::<T>(192) * lam.clone() * e1.clone() * e3.clone()
        - k::<T>(4) * lam.clone() * e3sq
        - k::<T>(64) * e1.clone() * e3.clone()
        + k::<T>(512) * e1.clone() * lam.clone()
        - k::<T>(32) * lam.clone() * e3.clone()
        - k::<T>(32) * e3.clone();
    let cubic = cubic_y * y5.clone()
        - k::<T>(2)
            * e1.clone()
            * e2.clone()
            * e3.clone()
            * one_l.clone()
            * (k::<T>(3) * lam.clone() * e3.clone() + k::<T>(2) * e3.clone()
                - k::<T>(16) * lam
                - k(8));
    let quad =
        k::<T>(2) * e3.clone() * one_l.clone() * le8.clone() * (e1.clone() - k(1)) * y5.clone()
            - e2 * e3.clone() * one_l.clone() * le8.clone() * (e1.clone() - k(1));
    k::<T>(8) * e1.clone() * e3 * one_l * le8.clone() * y5.clone() * x3.powi(4)
        + cubic * x3.powi(3)
        + quad * x3.powi(2)
        + e1 * le8.powi(2) * y5
}

pub fn g3<T: Scalar>(v: &ModelVars<T>, lambda: &T) -> T {
    (k::<T>(8) + v.e3.clone() * lambda.clone()) * v.y5.clone() * (l2(v) * lambda.clone() - l1(v))
}

pub fn g4<T: Scalar>(v: &ModelVars<T>, lambda: &T) -> T {
    (k::<T>(1) + lambda.clone())
        * (k::<T>(2) * v.y5.clone() - v.e2.clone())
        * (l2(v) * lambda.clone() - l1(v))
}

/// `hbar1 = 2 x3^3 y5 E1 E3 (E3-8)^2 (2x3-1)(1+2x3+4x3^2) h1`.
pub fn h1_bar<T: Scalar>(v: &ModelVars<T>) -> T {
    let ModelVars { x3, y5, e1, e3, .. } = v.clone();
    k::<T>(2)
        * x3.powi(3)
        * y5
        * e1
        * e3.clone()
        * (e3 - k(8)).powi(2)
        * (k::<T>(2) * x3.clone() - k(1))
        * (k::<T>(1) + k::<T>(2) * x3.clone() + k::<T>(4) * x3.powi(2))
        * h1(v)
}

/// The five independent equations `f1..f5` in the reduced multiplier
/// convention (`lambda = L1/L2` solves them).
pub fn f_system<T: Scalar>(
    v: &ModelVars<T>,
    lambda: &T,
    m1: &T,
    m3: &T,
) -> Result<[T; 5], NumericError> {
    let ModelVars { x3, y5, e1, e2, e3 } = v.clone();
    let lam = lambda.clone();
    let half = T::one().try_div(&k(2))?;
    let inv_e3 = T::one().try_div(&e3)?;
    let inv_e1 = T::one().try_div(&e1)?;
    let inv_x3c = T::one().try_div(&x3.powi(3))?;
    let w_e1 = T::one().try_div(&((k::<T>(1) + k::<T>(2) * x3.clone()) * e1.clone()))?;
    let one_l = k::<T>(1) + lam.clone();
    let gap = e2.clone() - k::<T>(2) * y5.clone();
    let m1 = m1.clone();
    let m3 = m3.clone();
    let f1 = -lam.clone() * half.clone() - k::<T>(4) * inv_e3.clone()
        + m1.clone() * (k::<T>(8) * inv_e3.clone() - k(1))
        + m3.clone()
            * (x3.clone() - half.clone() - half.clone() * inv_e1.clone()
                + k::<T>(8) * inv_e3.clone());
    let f2 = -one_l.clone() * x3.clone()
        + m3.clone() * (k::<T>(8) - inv_x3c) * x3.clone() * half.clone() * half.clone()
        + m1.clone() * (half.clone() + x3 - half.clone() * inv_e1);
    let f5_m1 = -k::<T>(2) * lam.clone() * y5.clone() - k::<T>(16) * y5.clone() * inv_e3.clone();
    let f3 = y5.clone() * (lam.clone() + k::<T>(8) * inv_e3.clone())
        + m1.clone() * f5_m1.clone()
        + m3.clone()
            * (half.clone() * e2.clone() * (k::<T>(1) + w_e1.clone()) + lam * gap.clone()
                - k::<T>(16) * y5.clone() * inv_e3);
    let f4 = -half.clone() * one_l.clone() * gap.clone()
        + one_l.clone() * m3.clone() * gap.clone()
        + m1.clone() * (half * e2 * (k::<T>(1) - w_e1) - k::<T>(2) * one_l.clone() * y5);
    let f5 = one_l * m3 * gap + m1 * f5_m1;
    Ok([f1, f2, f3, f4, f5])
}
