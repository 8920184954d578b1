use std::cmp::Ordering;

use num_bigint::BigInt;
use num_traits::{One, Signed};

use super::sturm::{Bound, OpenRange, SturmSequence};
use super::{UniPoly, UpolyError};
use crate::numeric::rational::{floor_on_grid, pow10};
use crate::{Rational, RationalInterval};

/// A real root pinned down by a closed rational interval that contains no
/// other root. Endpoints are never roots unless the interval is a point.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IsolatedRoot {
    pub poly_id: String,
    pub interval: RationalInterval,
    pub index: usize,
}

/// Squarefree polynomial plus its Sturm chain; performs isolation and
/// refinement of its real roots.
#[derive(Debug, Clone)]
pub struct RootIsolator {
    id: String,
    sturm: SturmSequence,
}

fn half() -> Rational {
    Rational::new(BigInt::one(), BigInt::from(2))
}

impl RootIsolator {
    pub fn new(id: impl Into<String>, p: &UniPoly) -> Result<Self, UpolyError> {
        if p.is_zero() {
            return Err(UpolyError::ZeroPolynomial);
        }
        let sturm = SturmSequence::from_squarefree(p.primitive_part());
        if !sturm.has_constant_tail() {
            return Err(UpolyError::NotSquarefree);
        }
        Ok(RootIsolator {
            id: id.into(),
            sturm,
        })
    }

    pub fn id(&self) -> &str {
        &self.id
    }

    pub fn poly(&self) -> &UniPoly {
        self.sturm.base()
    }

    pub fn count(&self, range: &OpenRange) -> usize {
        self.sturm.count(range)
    }

    /// Strict bound on the absolute value of every root.
    fn cauchy_bound(&self) -> Rational {
        let p = self.poly();
        let lc = p.leading_coeff().abs();
        let m = p.coeffs().iter().map(|c| c.abs()).max().unwrap_or_default();
        Rational::new(m, lc) + Rational::one()
    }

    fn finite(&self, b: &Bound, neg: bool) -> Rational {
        match b {
            Bound::Finite(q) => q.clone(),
            _ => {
                let c = self.cauchy_bound();
                if neg {
                    -c
                } else {
                    c
                }
            }
        }
    }

    /// A point strictly inside `(a, b)` that is not a root, near the middle.
    fn split_point(&self, a: &Rational, b: &Rational) -> Rational {
        let w = b - a;
        let mut m = (a + b) * half();
        let mut step = w.clone() * Rational::new(BigInt::one(), BigInt::from(8));
        while self.poly().sign_at(&m) == Ordering::Equal {
            m = &m + &step;
            step = step * half();
        }
        m
    }

    /// Disjoint isolating intervals for every root in `range`, sorted.
    pub fn isolate(&self, range: &OpenRange) -> Vec<IsolatedRoot> {
        let p = self.poly();
        let mut a = self.finite(&range.lo, true);
        let mut b = self.finite(&range.hi, false);
        if a >= b {
            return Vec::new();
        }
        // Rational roots sitting on the range endpoints are outside the open range.
        if p.sign_at(&a) == Ordering::Equal || p.sign_at(&b) == Ordering::Equal {
            let inner = self.count(range);
            if inner == 0 {
                return Vec::new();
            }
            let w = &b - &a;
            let mut eps = w * Rational::new(BigInt::one(), BigInt::from(4));
            loop {
                let a2 = &a + &eps;
                let b2 = &b - &eps;
                if p.sign_at(&a2) != Ordering::Equal
                    && p.sign_at(&b2) != Ordering::Equal
                    && self.count(&OpenRange::between(a2.clone(), b2.clone())) == inner
                {
                    a = a2;
                    b = b2;
                    break;
                }
                eps = eps * half();
            }
        }
        let va = self.sturm.variations_at(&a);
        let vb = self.sturm.variations_at(&b);
        let mut stack = vec![(a, va, b, vb)];
        let mut found = Vec::new();
        while let Some((a, va, b, vb)) = stack.pop() {
            let n = va.saturating_sub(vb);
            match n {
                0 => {}
                1 => found.push((a, b)),
                _ => {
                    let m = self.split_point(&a, &b);
                    let vm = self.sturm.variations_at(&m);
                    stack.push((m.clone(), vm, b, vb));
                    stack.push((a, va, m, vm));
                }
            }
        }
        found.sort_by(|x, y| x.0.cmp(&y.0));
        found
            .into_iter()
            .enumerate()
            .map(|(index, (lo, hi))| IsolatedRoot {
                poly_id: self.id.clone(),
                interval: RationalInterval::new(lo, hi).expect("ordered"),
                index,
            })
            .collect()
    }

    /// Bisection with exact sign evaluation until the width is at most `width`.
    pub fn refine(&self, root: &IsolatedRoot, width: &Rational) -> IsolatedRoot {
        let p = self.poly();
        let (mut a, mut b) = root.interval.clone().into_bounds();
        if a == b {
            return root.clone();
        }
        let sa = p.sign_at(&a);
        while &b - &a > *width {
            let m = (&a + &b) * half();
            match p.sign_at(&m) {
                Ordering::Equal => {
                    a = m.clone();
                    b = m;
                    break;
                }
                s if s == sa => a = m,
                _ => b = m,
            }
        }
        IsolatedRoot {
            interval: RationalInterval::new(a, b).expect("ordered"),
            ..root.clone()
        }
    }

    /// The decimal cell `[n/10^k, (n+1)/10^k]` holding the root, clipped to the
    /// isolating interval when the full cell would capture a second root.
    pub fn refine_decimal(&self, root: &IsolatedRoot, k: u32) -> IsolatedRoot {
        let p = self.poly();
        let (a, b) = root.interval.clone().into_bounds();
        if a == b {
            return root.clone();
        }
        let scale = pow10(-(k as i32));
        let grid = |n: &BigInt| Rational::from_integer(n.clone()) * &scale;
        let sa = p.sign_at(&a);
        // Grid points strictly inside (a, b).
        let first: BigInt = floor_on_grid(&a, k) + 1;
        let last = {
            let f = floor_on_grid(&b, k);
            if grid(&f) == b {
                f - 1
            } else {
                f
            }
        };
        let (mut left, mut right): (Option<BigInt>, Option<BigInt>) = (None, None);
        if first <= last {
            // Invariant: points <= lo_n have sign sa, points >= hi_n have sign -sa.
            let (mut lo_n, mut hi_n) = (first.clone() - 1, last.clone() + 1);
            while &hi_n - &lo_n > BigInt::one() {
                let mid: BigInt = (&lo_n + &hi_n) >> 1;
                match p.sign_at(&grid(&mid)) {
                    Ordering::Equal => {
                        let g = grid(&mid);
                        let iv = RationalInterval::point(g);
                        return IsolatedRoot {
                            interval: iv,
                            ..root.clone()
                        };
                    }
                    s if s == sa => lo_n = mid,
                    _ => hi_n = mid,
                }
            }
            if lo_n >= first {
                left = Some(lo_n);
            }
            if hi_n <= last {
                right = Some(hi_n);
            }
        }
        let lo = match (&left, &right) {
            (Some(n), _) => grid(n),
            (None, Some(n)) => self.widen(&grid(&(n - 1)), &grid(n), &a, true),
            (None, None) => {
                let n = floor_on_grid(&a, k);
                self.widen(&grid(&n), &grid(&(n + 1)), &a, true)
            }
        };
        let hi = match (&left, &right) {
            (_, Some(n)) => grid(n),
            (Some(n), None) => self.widen(&grid(n), &grid(&(n + 1)), &b, false),
            (None, None) => {
                let n = floor_on_grid(&a, k);
                self.widen(&grid(&n), &grid(&(n + 1)), &b, false)
            }
        };
        IsolatedRoot {
            interval: RationalInterval::new(lo, hi).expect("ordered"),
            ..root.clone()
        }
    }

    /// Chooses the grid endpoint of cell `[c0, c1]` on one side when the cell
    /// still isolates a single root and the endpoint is not a root; otherwise
    /// keeps the isolating endpoint `fallback`.
    fn widen(&self, c0: &Rational, c1: &Rational, fallback: &Rational, lower: bool) -> Rational {
        let candidate = if lower { c0 } else { c1 };
        let p = self.poly();
        if p.sign_at(c0) != Ordering::Equal
            && p.sign_at(c1) != Ordering::Equal
            && self.count(&OpenRange::between(c0.clone(), c1.clone())) == 1
        {
            candidate.clone()
        } else {
            fallback.clone()
        }
    }
}

/// Isolates the real roots of a squarefree `p` in `range`.
pub fn isolate_roots(p: &UniPoly, range: &OpenRange) -> Result<Vec<IsolatedRoot>, UpolyError> {
    Ok(RootIsolator::new("p", p)?.isolate(range))
}

/// Refines `root` of `p` to width at most `width`.
pub fn refine_root(
    p: &UniPoly,
    root: &IsolatedRoot,
    width: &Rational,
) -> Result<IsolatedRoot, UpolyError> {
    if !width.is_positive() {
        return Err(UpolyError::NonPositiveWidth);
    }
    Ok(RootIsolator::new(root.poly_id.clone(), p)?.refine(root, width))
}
