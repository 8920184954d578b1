use std::cmp::Ordering;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use super::{UniPoly, UpolyError};
use crate::Rational;

/// Endpoint of an open range.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Bound {
    NegInf,
    Finite(Rational),
    PosInf,
}

/// Open interval `(lo, hi)` with rational or infinite endpoints.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OpenRange {
    pub lo: Bound,
    pub hi: Bound,
}

impl OpenRange {
    pub fn all() -> Self {
        OpenRange {
            lo: Bound::NegInf,
            hi: Bound::PosInf,
        }
    }

    pub fn between(lo: Rational, hi: Rational) -> Self {
        OpenRange {
            lo: Bound::Finite(lo),
            hi: Bound::Finite(hi),
        }
    }

    pub fn above(lo: Rational) -> Self {
        OpenRange {
            lo: Bound::Finite(lo),
            hi: Bound::PosInf,
        }
    }

    fn is_empty(&self) -> bool {
        match (&self.lo, &self.hi) {
            (Bound::Finite(a), Bound::Finite(b)) => a >= b,
            (Bound::PosInf, _) | (_, Bound::NegInf) => true,
            _ => false,
        }
    }
}

/// Sturm chain of the squarefree part. Members after the derivative come
/// from the subresultant remainder sequence divided by the absolute value of
/// its scaling factor, so each is a positive multiple of the classical
/// negated remainder and the sign variations are unchanged.
#[derive(Debug, Clone)]
pub struct SturmSequence {
    chain: Vec<UniPoly>,
}

/// `|lc(g)|^(deg f - deg g + 1) * rem(f, g)`.
fn abs_pseudo_rem(f: &UniPoly, g: &UniPoly) -> UniPoly {
    let lg = g.leading_coeff().abs();
    let g = if g.leading_coeff().is_negative() {
        -g
    } else {
        g.clone()
    };
    let dg = g.deg();
    let mut r = f.coeffs().to_vec();
    for top in (dg..r.len()).rev() {
        let lr = std::mem::take(&mut r[top]);
        for c in r[..top].iter_mut() {
            *c *= &lg;
        }
        if !lr.is_zero() {
            for (i, gc) in g.coeffs()[..dg].iter().enumerate() {
                r[top - dg + i] -= &lr * gc;
            }
        }
    }
    UniPoly::new(r, f.var())
}

/// Negated subresultant remainder sequence `a, b, -prem(a, b)/|beta|, ...`
/// down to the last nonzero member, which is `gcd(a, b)` up to a constant.
/// Requires `deg a >= deg b` and `b != 0`.
pub(crate) fn remainder_chain(a: UniPoly, b: UniPoly) -> Vec<UniPoly> {
    let mut chain = vec![a, b];
    // |psi| of the subresultant recurrence; beta_1 = 1.
    let mut psi = BigInt::one();
    let mut prev_delta = 0usize;
    loop {
        let n = chain.len();
        let (a, b) = (&chain[n - 2], &chain[n - 1]);
        if b.is_constant() {
            break;
        }
        let delta = a.deg() - b.deg();
        let r = abs_pseudo_rem(a, b);
        if r.is_zero() {
            break;
        }
        let beta = if n == 2 {
            BigInt::one()
        } else {
            let lc = a.leading_coeff().abs();
            // psi' = lc^d / psi^(d-1); d = 0 only after an equal-degree first step.
            psi = if prev_delta == 0 {
                psi
            } else if prev_delta == 1 {
                lc.clone()
            } else {
                num_traits::pow(lc.clone(), prev_delta) / num_traits::pow(psi, prev_delta - 1)
            };
            lc * num_traits::pow(psi.clone(), delta)
        };
        prev_delta = delta;
        let r = r
            .div_scalar_exact(&beta)
            .expect("subresultant factor divides");
        chain.push(-r);
    }
    chain
}

impl SturmSequence {
    pub fn new(p: &UniPoly) -> Result<Self, UpolyError> {
        if p.is_zero() {
            return Err(UpolyError::ZeroPolynomial);
        }
        Ok(Self::from_squarefree(p.squarefree_part()))
    }

    /// Caller guarantees `p` is squarefree.
    pub(crate) fn from_squarefree(p: UniPoly) -> Self {
        if p.is_constant() {
            return SturmSequence { chain: vec![p] };
        }
        let d = p.derivative();
        let c = d.content();
        let d = d.div_scalar_exact(&c).expect("content divides");
        SturmSequence {
            chain: remainder_chain(p, d),
        }
    }

    /// The last member is `gcd(p, p')` up to a constant.
    pub(crate) fn has_constant_tail(&self) -> bool {
        self.chain.last().is_some_and(|c| c.is_constant())
    }

    /// The squarefree polynomial whose roots are counted.
    pub fn base(&self) -> &UniPoly {
        &self.chain[0]
    }

    pub fn len(&self) -> usize {
        self.chain.len()
    }

    pub fn is_empty(&self) -> bool {
        self.chain.is_empty()
    }

    fn variations(signs: impl Iterator<Item = Ordering>) -> usize {
        let mut last = Ordering::Equal;
        let mut v = 0;
        for s in signs {
            if s == Ordering::Equal {
                continue;
            }
            if last != Ordering::Equal && s != last {
                v += 1;
            }
            last = s;
        }
        v
    }

    /// Sign variations of the chain at a rational point.
    pub fn variations_at(&self, q: &Rational) -> usize {
        let max_deg = self.chain[0].deg();
        let d = q.denom();
        let n = q.numer();
        let mut dpow = Vec::with_capacity(max_deg + 1);
        dpow.push(BigInt::one());
        for k in 1..=max_deg {
            let next = &dpow[k - 1] * d;
            dpow.push(next);
        }
        Self::variations(self.chain.iter().map(|p| {
            let mut acc = BigInt::zero();
            for (i, c) in p.coeffs.iter().rev().enumerate() {
                acc = if i == 0 {
                    c.clone()
                } else {
                    acc * n + c * &dpow[i]
                };
            }
            if acc.is_positive() {
                Ordering::Greater
            } else if acc.is_negative() {
                Ordering::Less
            } else {
                Ordering::Equal
            }
        }))
    }

    pub fn variations_at_bound(&self, b: &Bound) -> usize {
        match b {
            Bound::NegInf => Self::variations(self.chain.iter().map(|p| p.sign_at_infinity(false))),
            Bound::PosInf => Self::variations(self.chain.iter().map(|p| p.sign_at_infinity(true))),
            Bound::Finite(q) => self.variations_at(q),
        }
    }

    /// Distinct real roots in the open range. Endpoints that are roots are
    /// divided out exactly before counting.
    pub fn count(&self, range: &OpenRange) -> usize {
        if range.is_empty() {
            return 0;
        }
        let base = &self.chain[0];
        let mut deflate = UniPoly::one(base.var());
        for b in [&range.lo, &range.hi] {
            if let Bound::Finite(q) = b {
                if base.sign_at(q) == Ordering::Equal {
                    deflate = &deflate * &UniPoly::linear_root(q, base.var());
                }
            }
        }
        if !deflate.is_constant() {
            let reduced = base
                .exact_divide(&deflate)
                .expect("rational root factor divides");
            return SturmSequence::from_squarefree(reduced.primitive_part()).count(range);
        }
        let a = self.variations_at_bound(&range.lo);
        let b = self.variations_at_bound(&range.hi);
        a.saturating_sub(b)
    }
}

/// Number of distinct real roots of `p` in `range`.
pub fn sturm_count(p: &UniPoly, range: &OpenRange) -> Result<usize, UpolyError> {
    Ok(SturmSequence::new(p)?.count(range))
}
