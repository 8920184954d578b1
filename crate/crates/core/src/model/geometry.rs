//! Symmetric equilateral pentagon parameterised by the height `y5` of the
//! apex body: bodies 1, 2 at `(±1/2, 0)`, bodies 3, 4 at `(±x3, y3)`, body 5
//! at `(0, y5)`.

use std::cmp::Ordering;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use super::formulas::ModelVars;
use super::ModelError;
use crate::numeric::{sqrt_enclosure, Interval};
use crate::scalar::Scalar;
use crate::{Rational, RationalInterval};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Branch {
    Plus,
    Minus,
}

impl Branch {
    pub fn sign(self) -> i64 {
        match self {
            Branch::Plus => 1,
            Branch::Minus => -1,
        }
    }

    pub fn symbol(self) -> char {
        match self {
            Branch::Plus => '+',
            Branch::Minus => '-',
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Shape {
    Convex,
    Concave,
    /// The enclosure contains a configuration that is not a pentagon.
    Degenerate,
}

/// Position of a `y5` enclosure relative to the open branch domain.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum DomainStatus {
    Inside,
    Outside,
    Straddles,
}

#[derive(Debug, Clone, PartialEq)]
pub struct PentagonGeometry {
    pub y5: RationalInterval,
    pub branch: Branch,
    pub x3: RationalInterval,
    pub y3: RationalInterval,
    pub e1: RationalInterval,
    pub e2: RationalInterval,
    pub e3: RationalInterval,
    pub shape: Shape,
}

impl PentagonGeometry {
    pub fn vars(&self) -> ModelVars<RationalInterval> {
        ModelVars {
            x3: self.x3.clone(),
            y5: self.y5.clone(),
            e1: self.e1.clone(),
            e2: self.e2.clone(),
            e3: self.e3.clone(),
        }
    }

    /// Positions of bodies 1..5.
    pub fn positions(&self) -> [(RationalInterval, RationalInterval); 5] {
        let half = RationalInterval::point(q(1, 2));
        let zero = RationalInterval::point(Rational::zero());
        [
            (half.clone(), zero.clone()),
            (-half, zero.clone()),
            (self.x3.clone(), self.y3.clone()),
            (-self.x3.clone(), self.y3.clone()),
            (zero, self.y5.clone()),
        ]
    }
}

fn q(n: i64, d: i64) -> Rational {
    Rational::new(BigInt::from(n), BigInt::from(d))
}

/// Sign of `y - sqrt(c)` for `c >= 0`.
fn cmp_sqrt(y: &Rational, c: &Rational) -> Ordering {
    if y.is_negative() {
        return Ordering::Less;
    }
    (y * y).cmp(c)
}

/// Sign of `y - (1 + sqrt(3)/2)`.
fn cmp_minus_floor(y: &Rational) -> Ordering {
    cmp_sqrt(&(y - Rational::one()), &q(3, 4))
}

/// Open `y5` domain of a branch: `(0, sqrt15/2)` for plus,
/// `(1 + sqrt3/2, sqrt15/2)` for minus.
pub fn branch_domain_status(y5: &RationalInterval, branch: Branch) -> DomainStatus {
    let top = q(15, 4);
    let above_floor = |y: &Rational| match branch {
        Branch::Plus => y.is_positive(),
        Branch::Minus => cmp_minus_floor(y) == Ordering::Greater,
    };
    let below_top = |y: &Rational| cmp_sqrt(y, &top) == Ordering::Less;
    let lo_in = above_floor(y5.lo()) && below_top(y5.lo());
    let hi_in = above_floor(y5.hi()) && below_top(y5.hi());
    if lo_in && hi_in {
        return DomainStatus::Inside;
    }
    let entirely_below = !above_floor(y5.hi());
    let entirely_above = !below_top(y5.lo());
    if entirely_below || entirely_above {
        DomainStatus::Outside
    } else {
        DomainStatus::Straddles
    }
}

/// `(y Phi(y))^2 = z (15 - 4z) / (1 + 4z)` with `z = y^2`; increasing in `z`
/// below `3/4` and decreasing above.
fn g_squared(y: &Rational) -> Rational {
    let z = y * y;
    let four = Rational::from_integer(4.into());
    &z * (Rational::from_integer(15.into()) - &four * &z) / (Rational::one() + four * z)
}

/// `Phi(y)^2 = (15 - 4z) / (1 + 4z)`, decreasing in `y > 0`.
fn phi_squared(y: &Rational) -> Rational {
    let z = y * y;
    let four = Rational::from_integer(4.into());
    (Rational::from_integer(15.into()) - &four * &z) / (Rational::one() + four * z)
}

fn sqrt_point(x: &Rational, width: &Rational) -> Result<RationalInterval, ModelError> {
    let x = if x.is_negative() {
        Rational::zero()
    } else {
        x.clone()
    };
    Ok(sqrt_enclosure(&Interval::point(x), width)?)
}

fn sqrt_iv(x: &RationalInterval, width: &Rational) -> Result<RationalInterval, ModelError> {
    Ok(sqrt_enclosure(&x.clamp_nonnegative()?, width)?)
}

/// Enclosure of `y Phi(y)` using its single maximum `3/2` at `y = sqrt3/2`.
fn g_enclosure(y5: &RationalInterval, width: &Rational) -> Result<RationalInterval, ModelError> {
    let peak = q(3, 4);
    let at_lo = sqrt_point(&g_squared(y5.lo()), width)?;
    let at_hi = sqrt_point(&g_squared(y5.hi()), width)?;
    let zlo = y5.lo() * y5.lo();
    let zhi = y5.hi() * y5.hi();
    let iv = if zhi <= peak {
        Interval::spanning(at_lo.lo().clone(), at_hi.hi().clone())
    } else if zlo >= peak {
        Interval::spanning(at_hi.lo().clone(), at_lo.hi().clone())
    } else {
        let lo = at_lo.lo().min(at_hi.lo()).clone();
        Interval::spanning(lo, q(3, 2))
    };
    Ok(iv)
}

fn phi_enclosure(y5: &RationalInterval, width: &Rational) -> Result<RationalInterval, ModelError> {
    let a = sqrt_point(&phi_squared(y5.hi()), width)?;
    let b = sqrt_point(&phi_squared(y5.lo()), width)?;
    Ok(Interval::spanning(a.lo().clone(), b.hi().clone()))
}

/// Default extra width allowed per square root for an input enclosure.
pub fn default_sqrt_width(y5: &RationalInterval) -> Rational {
    let cap = Rational::new(BigInt::one(), BigInt::one() << 20u32);
    let w = y5.width();
    if w.is_zero() {
        Rational::new(BigInt::one(), BigInt::one() << 64u32)
    } else {
        (w / Rational::from_integer(1024.into())).min(cap)
    }
}

fn shape_of(y5: &RationalInterval, branch: Branch) -> Shape {
    match branch {
        Branch::Minus => Shape::Concave,
        Branch::Plus => {
            let c = q(3, 4);
            if cmp_sqrt(y5.hi(), &c) == Ordering::Less {
                Shape::Concave
            } else if cmp_sqrt(y5.lo(), &c) == Ordering::Greater {
                Shape::Convex
            } else {
                Shape::Degenerate
            }
        }
    }
}

/// Geometry enclosure without the branch-domain check; radicands are clipped
/// at zero. Requires `y5 > 0`.
pub fn enclose_geometry(
    y5: &RationalInterval,
    branch: Branch,
    sqrt_width: &Rational,
) -> Result<PentagonGeometry, ModelError> {
    if !y5.lo().is_positive() {
        return Err(ModelError::OutOfBranchDomain);
    }
    let g = g_enclosure(y5, sqrt_width)?;
    let quarter = RationalInterval::point(q(1, 4));
    let half = RationalInterval::point(q(1, 2));
    let sign = RationalInterval::point(Rational::from_integer(branch.sign().into()));
    let x3 = quarter.clone() + sign.clone() * half.clone() * g;
    let phi = phi_enclosure(y5, sqrt_width)?;
    let y3_direct = half.clone() * y5.clone() + sign * quarter * phi;

    let one = RationalInterval::point(Rational::one());
    let two = RationalInterval::point(Rational::from_integer(2.into()));
    let four = RationalInterval::point(Rational::from_integer(4.into()));
    let e1 = sqrt_iv(&(one.clone() + two.clone() * x3.clone()), sqrt_width)?;
    let skew = (two * x3.clone() - one.clone()).powi(2);
    let e2 = sqrt_iv(&(four.clone() - skew), sqrt_width)?;
    let w = one + four * y5.clone().powi(2);
    let e3 = w.clone() * sqrt_iv(&w, sqrt_width)?;
    // |q3 - q1| = 1 gives |y3| = E2/2 as a second enclosure.
    let y3 = if y3_direct.is_positive() {
        let y3_chord = half * e2.clone();
        y3_direct.intersect(&y3_chord).unwrap_or(y3_direct)
    } else {
        y3_direct
    };
    Ok(PentagonGeometry {
        y5: y5.clone(),
        branch,
        x3,
        y3,
        e1,
        e2,
        e3,
        shape: shape_of(y5, branch),
    })
}

/// Geometry of a pentagon whose `y5` lies in the open branch domain.
pub fn geometry_from_y5(
    y5: &RationalInterval,
    branch: Branch,
) -> Result<PentagonGeometry, ModelError> {
    geometry_from_y5_within(y5, branch, &default_sqrt_width(y5))
}

pub fn geometry_from_y5_within(
    y5: &RationalInterval,
    branch: Branch,
    sqrt_width: &Rational,
) -> Result<PentagonGeometry, ModelError> {
    if branch_domain_status(y5, branch) != DomainStatus::Inside {
        return Err(ModelError::OutOfBranchDomain);
    }
    let geom = enclose_geometry(y5, branch, sqrt_width)?;
    let certainly_flat = !geom.x3.hi().is_positive() || (geom.y3.is_point() && geom.y3 == geom.y5);
    if certainly_flat {
        return Err(ModelError::DegeneratePentagon);
    }
    Ok(geom)
}

/// `y5 = (1 - t^2) / (4t)`, decreasing on `t > 0`.
pub fn y5_of_t(t: &RationalInterval) -> Result<RationalInterval, ModelError> {
    if !t.lo().is_positive() {
        return Err(ModelError::OutOfBranchDomain);
    }
    let f = |t: &Rational| (Rational::one() - t * t) / (Rational::from_integer(4.into()) * t);
    Ok(Interval::spanning(f(t.hi()), f(t.lo())))
}

/// Floating-point geometry for plotting; `None` outside the branch domain.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PointGeometry {
    pub y5: f64,
    pub x3: f64,
    pub y3: f64,
}

impl PointGeometry {
    pub fn vertices(&self) -> [(f64, f64); 5] {
        [
            (0.5, 0.0),
            (self.x3, self.y3),
            (0.0, self.y5),
            (-self.x3, self.y3),
            (-0.5, 0.0),
        ]
    }
}

pub fn point_geometry(y5: f64, branch: Branch) -> Option<PointGeometry> {
    let z = y5 * y5;
    let phi2 = (15.0 - 4.0 * z) / (1.0 + 4.0 * z);
    if y5 <= 0.0 || phi2 < 0.0 {
        return None;
    }
    let phi = phi2.sqrt();
    let s = branch.sign() as f64;
    Some(PointGeometry {
        y5,
        x3: 0.25 + s * y5 / 2.0 * phi,
        y3: y5 / 2.0 + s * phi / 4.0,
    })
}
