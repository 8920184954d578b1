use std::cmp::Ordering;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use super::rational::{ceil_sqrt, is_perfect_square};
use super::NumericError;
use crate::scalar::{RealSqrt, Scalar};
use crate::Rational;

/// Closed interval `[lo, hi]`. Every operation returns an enclosure of the
/// exact image of its inputs.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Interval<T> {
    lo: T,
    hi: T,
}

fn min2<T: PartialOrd + Clone>(a: &T, b: &T) -> T {
    if b < a {
        b.clone()
    } else {
        a.clone()
    }
}

fn max2<T: PartialOrd + Clone>(a: &T, b: &T) -> T {
    if b > a {
        b.clone()
    } else {
        a.clone()
    }
}

impl<T: Scalar + PartialOrd> Interval<T> {
    pub fn new(lo: T, hi: T) -> Result<Self, NumericError> {
        if lo > hi {
            return Err(NumericError::InvalidInterval);
        }
        Ok(Interval { lo, hi })
    }

    /// Builds `[min(a,b), max(a,b)]`.
    pub fn spanning(a: T, b: T) -> Self {
        if a <= b {
            Interval { lo: a, hi: b }
        } else {
            Interval { lo: b, hi: a }
        }
    }

    pub fn point(x: T) -> Self {
        Interval {
            lo: x.clone(),
            hi: x,
        }
    }

    pub fn lo(&self) -> &T {
        &self.lo
    }

    pub fn hi(&self) -> &T {
        &self.hi
    }

    pub fn into_bounds(self) -> (T, T) {
        (self.lo, self.hi)
    }

    pub fn width(&self) -> T {
        self.hi.clone() - self.lo.clone()
    }

    pub fn midpoint(&self) -> T {
        let half = T::from_rational(&Rational::new(BigInt::one(), BigInt::from(2)));
        (self.lo.clone() + self.hi.clone()) * half
    }

    pub fn is_point(&self) -> bool {
        self.lo == self.hi
    }

    pub fn contains(&self, x: &T) -> bool {
        &self.lo <= x && x <= &self.hi
    }

    pub fn contains_interval(&self, other: &Self) -> bool {
        self.lo <= other.lo && other.hi <= self.hi
    }

    pub fn contains_zero(&self) -> bool {
        self.contains(&T::zero())
    }

    /// Certainly positive: `lo > 0`.
    pub fn is_positive(&self) -> bool {
        self.lo > T::zero()
    }

    /// Certainly negative: `hi < 0`.
    pub fn is_negative(&self) -> bool {
        self.hi < T::zero()
    }

    /// Sign shared by every point, if any; zero only for the point `[0,0]`.
    pub fn sign(&self) -> Option<Ordering> {
        if self.is_positive() {
            Some(Ordering::Greater)
        } else if self.is_negative() {
            Some(Ordering::Less)
        } else if self.lo.is_zero() && self.hi.is_zero() {
            Some(Ordering::Equal)
        } else {
            None
        }
    }

    pub fn hull(&self, other: &Self) -> Self {
        Interval {
            lo: min2(&self.lo, &other.lo),
            hi: max2(&self.hi, &other.hi),
        }
    }

    pub fn intersect(&self, other: &Self) -> Option<Self> {
        let lo = max2(&self.lo, &other.lo);
        let hi = min2(&self.hi, &other.hi);
        (lo <= hi).then_some(Interval { lo, hi })
    }

    pub fn abs_max(&self) -> T {
        max2(&-self.lo.clone(), &self.hi)
    }

    pub fn recip(&self) -> Result<Self, NumericError> {
        if self.contains_zero() {
            return Err(NumericError::DivisionByIntervalContainingZero);
        }
        let a = T::one().try_div(&self.hi)?;
        let b = T::one().try_div(&self.lo)?;
        Ok(Interval { lo: a, hi: b })
    }

    /// Clamps the lower endpoint to zero, for radicands known to be
    /// nonnegative at the exact point.
    pub fn clamp_nonnegative(&self) -> Result<Self, NumericError> {
        if self.hi < T::zero() {
            return Err(NumericError::NegativeRadicand);
        }
        Ok(Interval {
            lo: max2(&self.lo, &T::zero()),
            hi: self.hi.clone(),
        })
    }
}

impl<T: Scalar + PartialOrd> Add for Interval<T> {
    type Output = Self;
    fn add(self, rhs: Self) -> Self {
        Interval {
            lo: self.lo + rhs.lo,
            hi: self.hi + rhs.hi,
        }
    }
}

impl<T: Scalar + PartialOrd> Sub for Interval<T> {
    type Output = Self;
    fn sub(self, rhs: Self) -> Self {
        Interval {
            lo: self.lo - rhs.hi,
            hi: self.hi - rhs.lo,
        }
    }
}

impl<T: Scalar + PartialOrd> Neg for Interval<T> {
    type Output = Self;
    fn neg(self) -> Self {
        Interval {
            lo: -self.hi,
            hi: -self.lo,
        }
    }
}

impl<T: Scalar + PartialOrd> Mul for Interval<T> {
    type Output = Self;
    fn mul(self, rhs: Self) -> Self {
        if self.is_point() && rhs.is_point() {
            return Interval::point(self.lo * rhs.lo);
        }
        let zero = T::zero();
        if self.lo >= zero && rhs.lo >= zero {
            return Interval {
                lo: self.lo * rhs.lo,
                hi: self.hi * rhs.hi,
            };
        }
        let p = [
            self.lo.clone() * rhs.lo.clone(),
            self.lo.clone() * rhs.hi.clone(),
            self.hi.clone() * rhs.lo.clone(),
            self.hi * rhs.hi,
        ];
        let mut lo = p[0].clone();
        let mut hi = p[0].clone();
        for v in &p[1..] {
            if *v < lo {
                lo = v.clone();
            }
            if *v > hi {
                hi = v.clone();
            }
        }
        Interval { lo, hi }
    }
}

impl<T: Scalar + PartialOrd> Zero for Interval<T> {
    fn zero() -> Self {
        Interval::point(T::zero())
    }
    fn is_zero(&self) -> bool {
        self.lo.is_zero() && self.hi.is_zero()
    }
}

impl<T: Scalar + PartialOrd> One for Interval<T> {
    fn one() -> Self {
        Interval::point(T::one())
    }
}

impl<T: Scalar + PartialOrd> Scalar for Interval<T> {
    fn from_rational(q: &Rational) -> Self {
        Interval::point(T::from_rational(q))
    }

    fn try_div(&self, rhs: &Self) -> Result<Self, NumericError> {
        if rhs.is_point() && self.is_point() {
            if rhs.lo.is_zero() {
                return Err(NumericError::DivisionByIntervalContainingZero);
            }
            return Ok(Interval::point(self.lo.try_div(&rhs.lo)?));
        }
        Ok(self.clone() * rhs.recip()?)
    }

    /// Tight integer power: even powers of a zero-straddling interval start at 0.
    fn powi(&self, n: u32) -> Self {
        if n == 0 {
            return Interval::one();
        }
        let a = self.lo.powi(n);
        let b = self.hi.powi(n);
        if n % 2 == 1 || self.lo >= T::zero() {
            return Interval { lo: a, hi: b };
        }
        if self.hi <= T::zero() {
            return Interval { lo: b, hi: a };
        }
        Interval {
            lo: T::zero(),
            hi: max2(&a, &b),
        }
    }
}

/// Rational square root bounds on a dyadic grid: `lo <= sqrt(x) <= hi`,
/// `hi - lo <= 2/n`, exact when `x` is the square of a rational.
fn sqrt_bounds(x: &Rational, n: &BigInt) -> (Rational, Rational) {
    if x.is_zero() {
        return (Rational::zero(), Rational::zero());
    }
    if let (Some(a), Some(b)) = (is_perfect_square(x.numer()), is_perfect_square(x.denom())) {
        let r = Rational::new(a, b);
        return (r.clone(), r);
    }
    let scaled = x * Rational::from_integer(n * n);
    let lo = num_integer::Roots::sqrt(&scaled.floor().to_integer());
    let hi = ceil_sqrt(&scaled.ceil().to_integer());
    (Rational::new(lo, n.clone()), Rational::new(hi, n.clone()))
}

/// Power-of-two grid with `2/n <= width/2`.
fn grid_for_width(width: &Rational) -> BigInt {
    let target = Rational::from_integer(BigInt::from(4)) / width;
    let mut n = BigInt::one();
    while Rational::from_integer(n.clone()) < target {
        n <<= 1;
    }
    n
}

/// Outward-rounded square root of a nonnegative rational interval. The result
/// is at most `width` wider than the exact image.
pub fn sqrt_enclosure(
    a: &Interval<Rational>,
    width: &Rational,
) -> Result<Interval<Rational>, NumericError> {
    if !width.is_positive() {
        return Err(NumericError::NonPositiveWidth);
    }
    if a.lo().is_negative() {
        return Err(NumericError::NegativeRadicand);
    }
    let n = grid_for_width(width);
    let (lo, _) = sqrt_bounds(a.lo(), &n);
    let (_, hi) = sqrt_bounds(a.hi(), &n);
    Ok(Interval { lo, hi })
}

impl RealSqrt for Interval<Rational> {
    fn sqrt_within(&self, width: &Rational) -> Result<Self, NumericError> {
        sqrt_enclosure(self, width)
    }
}
