//! Scalar abstraction shared by the model formulas.

use std::fmt::Debug;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, ToPrimitive, Zero};

use crate::numeric::NumericError;
use crate::Rational;

/// A commutative ring element that can absorb rational constants and attempt
/// division.
pub trait Scalar:
    Clone
    + Debug
    + Zero
    + One
    + Add<Output = Self>
    + Sub<Output = Self>
    + Mul<Output = Self>
    + Neg<Output = Self>
{
    fn from_rational(q: &Rational) -> Self;

    fn from_i64(n: i64) -> Self {
        Self::from_rational(&Rational::from_integer(n.into()))
    }

    fn try_div(&self, rhs: &Self) -> Result<Self, NumericError>;

    fn powi(&self, n: u32) -> Self {
        let mut acc = Self::one();
        let mut base = self.clone();
        let mut e = n;
        while e > 0 {
            if e & 1 == 1 {
                acc = acc * base.clone();
            }
            e >>= 1;
            if e > 0 {
                base = base.clone() * base;
            }
        }
        acc
    }
}

/// Scalars with a square root. `width` bounds the extra width an enclosure
/// may add; exact or floating types ignore it.
pub trait RealSqrt: Scalar {
    fn sqrt_within(&self, width: &Rational) -> Result<Self, NumericError>;
}

impl Scalar for Rational {
    fn from_rational(q: &Rational) -> Self {
        q.clone()
    }

    fn try_div(&self, rhs: &Self) -> Result<Self, NumericError> {
        if rhs.is_zero() {
            return Err(NumericError::DivisionByZero);
        }
        Ok(self / rhs)
    }
}

macro_rules! float_scalar {
    ($t:ty) => {
        impl Scalar for $t {
            fn from_rational(q: &Rational) -> Self {
                q.to_f64().unwrap_or(f64::NAN) as $t
            }

            fn from_i64(n: i64) -> Self {
                n as $t
            }

            fn try_div(&self, rhs: &Self) -> Result<Self, NumericError> {
                if *rhs == 0.0 {
                    return Err(NumericError::DivisionByZero);
                }
                Ok(self / rhs)
            }

            fn powi(&self, n: u32) -> Self {
                <$t>::powi(*self, n as i32)
            }
        }

        impl RealSqrt for $t {
            fn sqrt_within(&self, _width: &Rational) -> Result<Self, NumericError> {
                if *self < 0.0 {
                    return Err(NumericError::NegativeRadicand);
                }
                Ok(self.sqrt())
            }
        }
    };
}

float_scalar!(f32);
float_scalar!(f64);
