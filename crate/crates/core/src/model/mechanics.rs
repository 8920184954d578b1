//! Masses and multiplier of a candidate configuration, and the ten
//! central-configuration equations.

use num_traits::{One, Zero};

use super::formulas::{self, ModelVars};
use super::geometry::PentagonGeometry;
use super::ModelError;
use crate::numeric::NumericError;
use crate::scalar::{RealSqrt, Scalar};
use crate::{Rational, RationalInterval};

/// Masses normalised to total 1, with `m2 = m1` and `m4 = m3`.
///
/// `lambda` is the multiplier of `sum_j m_j (q_j - q_i) / r^3 = -lambda (q_i - c)`
/// (positive for every central configuration); `reduced_lambda = L1/L2` is
/// the same quantity in the acceleration convention, `-lambda`.
#[derive(Debug, Clone, PartialEq)]
pub struct MassSolution {
    pub lambda: RationalInterval,
    pub reduced_lambda: RationalInterval,
    pub m1: RationalInterval,
    pub m3: RationalInterval,
    pub m5: RationalInterval,
}

impl MassSolution {
    /// All five masses `m1..m5`.
    pub fn masses(&self) -> [RationalInterval; 5] {
        [
            self.m1.clone(),
            self.m1.clone(),
            self.m3.clone(),
            self.m3.clone(),
            self.m5.clone(),
        ]
    }

    /// Every mass enclosure has positive lower bound.
    pub fn is_admissible(&self) -> bool {
        self.m1.is_positive() && self.m3.is_positive() && self.m5.is_positive()
    }

    /// Some mass enclosure lies strictly below zero.
    pub fn has_negative_mass(&self) -> bool {
        self.m1.is_negative() || self.m3.is_negative() || self.m5.is_negative()
    }
}

/// Intermediate quantities of the mass solve, exposed for identity checks.
#[derive(Debug, Clone, PartialEq)]
pub struct MassInternals<T> {
    pub l1: T,
    pub l2: T,
    pub mass_denominator: T,
    pub g1: T,
    pub g3: T,
    pub g4: T,
}

pub fn mass_internals<T: Scalar>(v: &ModelVars<T>) -> Result<MassInternals<T>, NumericError> {
    let l1 = formulas::l1(v);
    let l2 = formulas::l2(v);
    let lam = l1.try_div(&l2)?;
    Ok(MassInternals {
        mass_denominator: formulas::mass_denominator(v, &lam),
        g1: formulas::g1(v, &lam),
        g3: formulas::g3(v, &lam),
        g4: formulas::g4(v, &lam),
        l1,
        l2,
    })
}

/// `(reduced_lambda, m1, m3, m5)` over any scalar.
pub fn masses_generic<T: Scalar>(v: &ModelVars<T>) -> Result<(T, T, T, T), NumericError> {
    let lam = formulas::l1(v).try_div(&formulas::l2(v))?;
    let den = formulas::mass_denominator(v, &lam);
    let m1 = formulas::m1_numerator(v, &lam).try_div(&den)?;
    let m3 = formulas::m3_numerator(v, &lam).try_div(&den)?;
    let two = T::from_i64(2);
    let m5 = T::one() - two.clone() * m1.clone() - two * m3.clone();
    Ok((lam, m1, m3, m5))
}

/// The second multiplier root `L1/L2`; the first, `-8/E3`, forces `m3 = 0`.
pub fn solve_masses(geom: &PentagonGeometry) -> Result<MassSolution, ModelError> {
    let v = geom.vars();
    let (reduced, m1, m3, m5) = masses_generic(&v).map_err(|e| match e {
        NumericError::DivisionByIntervalContainingZero | NumericError::DivisionByZero => {
            ModelError::SingularDenominator
        }
        other => ModelError::Numeric(other),
    })?;
    Ok(MassSolution {
        lambda: -reduced.clone(),
        reduced_lambda: reduced,
        m1,
        m3,
        m5,
    })
}

/// `e_i = lambda (q_i - c) - sum_j m_j (q_i - q_j) / r_ij^3`, returned as
/// the x-components `e1..e5` followed by the y-components `e6..e10`.
pub fn residuals_generic<T: RealSqrt>(
    positions: &[(T, T); 5],
    masses: &[T; 5],
    lambda: &T,
    sqrt_width: &Rational,
) -> Result<[T; 10], NumericError> {
    let total = masses.iter().cloned().fold(T::zero(), |a, b| a + b);
    let mut cx = T::zero();
    let mut cy = T::zero();
    for (m, (x, y)) in masses.iter().zip(positions) {
        cx = cx + m.clone() * x.clone();
        cy = cy + m.clone() * y.clone();
    }
    let cx = cx.try_div(&total)?;
    let cy = cy.try_div(&total)?;
    let mut out: [T; 10] = std::array::from_fn(|_| T::zero());
    for i in 0..5 {
        let (xi, yi) = &positions[i];
        let mut ax = T::zero();
        let mut ay = T::zero();
        for j in (0..5).filter(|&j| j != i) {
            let (xj, yj) = &positions[j];
            let dx = xi.clone() - xj.clone();
            let dy = yi.clone() - yj.clone();
            let r2 = dx.powi(2) + dy.powi(2);
            let r3 = r2.clone() * r2.sqrt_within(sqrt_width)?;
            let w = masses[j].try_div(&r3)?;
            ax = ax + w.clone() * dx;
            ay = ay + w * dy;
        }
        out[i] = lambda.clone() * (xi.clone() - cx.clone()) - ax;
        out[i + 5] = lambda.clone() * (yi.clone() - cy.clone()) - ay;
    }
    Ok(out)
}

pub fn cc_residuals(
    geom: &PentagonGeometry,
    masses: &MassSolution,
) -> Result<[RationalInterval; 10], ModelError> {
    let width = residual_sqrt_width(geom);
    Ok(residuals_generic(
        &geom.positions(),
        &masses.masses(),
        &masses.lambda,
        &width,
    )?)
}

/// Residuals for arbitrary masses `m1..m5` and multiplier.
pub fn cc_residuals_with(
    geom: &PentagonGeometry,
    masses: &[RationalInterval; 5],
    lambda: &RationalInterval,
) -> Result<[RationalInterval; 10], ModelError> {
    Ok(residuals_generic(
        &geom.positions(),
        masses,
        lambda,
        &residual_sqrt_width(geom),
    )?)
}

fn residual_sqrt_width(geom: &PentagonGeometry) -> Rational {
    let w = geom.x3.width().max(geom.y5.width());
    let floor = Rational::new(One::one(), num_bigint::BigInt::one() << 64u32);
    if w.is_zero() {
        floor
    } else {
        w.max(floor)
    }
}

/// Enclosure of `h1`, bounding the thirteen addends separately.
pub fn h1_eval(geom: &PentagonGeometry) -> RationalInterval {
    formulas::h1_expanded(&geom.vars())
}

pub fn h2_eval<T: Scalar>(x3: &T, y5: &T) -> T {
    formulas::h2(x3, y5)
}
