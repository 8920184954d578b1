//! Dense univariate polynomials with integer coefficients.

mod arith;
pub mod modp;
mod reciprocal;
mod roots;
mod sqrt;
mod sturm;

pub use reciprocal::{reciprocal_expand, reciprocal_quadratic_resultant, reciprocal_reduce};
pub use roots::{isolate_roots, refine_root, IsolatedRoot, RootIsolator};
pub use sqrt::poly_square_root;
pub use sturm::{sturm_count, Bound, OpenRange, SturmSequence};

use std::cmp::Ordering;
use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use thiserror::Error;

use crate::scalar::Scalar;
use crate::Rational;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum UpolyError {
    #[error("zero polynomial")]
    ZeroPolynomial,
    #[error("division leaves a nonzero remainder")]
    InexactDivision,
    #[error("polynomial is not squarefree")]
    NotSquarefree,
    #[error("polynomial is not a perfect square")]
    NotPerfectSquare,
    #[error("polynomial is not reciprocal")]
    NotReciprocal,
    #[error("polynomial has odd degree")]
    OddDegree,
    #[error("refinement width must be positive")]
    NonPositiveWidth,
    #[error("malformed polynomial text at line {line}: {text:?}")]
    Parse { line: usize, text: String },
}

/// Variable tag carried for printing and sanity checks.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Var {
    S,
    T,
    U,
    X,
}

impl fmt::Display for Var {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let c = match self {
            Var::S => "s",
            Var::T => "t",
            Var::U => "u",
            Var::X => "x",
        };
        f.write_str(c)
    }
}

/// Coefficients low degree first; the leading coefficient is nonzero unless
/// the polynomial is zero (empty vector).
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct UniPoly {
    coeffs: Vec<BigInt>,
    var: Var,
}

impl UniPoly {
    pub fn new(mut coeffs: Vec<BigInt>, var: Var) -> Self {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        UniPoly { coeffs, var }
    }

    pub fn from_i64s(coeffs: &[i64], var: Var) -> Self {
        Self::new(coeffs.iter().map(|&c| BigInt::from(c)).collect(), var)
    }

    pub fn zero(var: Var) -> Self {
        UniPoly {
            coeffs: Vec::new(),
            var,
        }
    }

    pub fn constant(c: BigInt, var: Var) -> Self {
        Self::new(vec![c], var)
    }

    pub fn one(var: Var) -> Self {
        Self::constant(BigInt::one(), var)
    }

    /// `c * var^k`.
    pub fn monomial(c: BigInt, k: usize, var: Var) -> Self {
        let mut v = vec![BigInt::zero(); k + 1];
        v[k] = c;
        Self::new(v, var)
    }

    /// The linear polynomial `d*var - n` vanishing at `n/d`.
    pub fn linear_root(q: &Rational, var: Var) -> Self {
        Self::new(vec![-q.numer().clone(), q.denom().clone()], var)
    }

    pub fn var(&self) -> Var {
        self.var
    }

    pub fn with_var(mut self, var: Var) -> Self {
        self.var = var;
        self
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn into_coeffs(self) -> Vec<BigInt> {
        self.coeffs
    }

    pub fn coeff(&self, k: usize) -> BigInt {
        self.coeffs.get(k).cloned().unwrap_or_default()
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub(crate) fn deg(&self) -> usize {
        self.degree().unwrap_or(0)
    }

    pub fn leading_coeff(&self) -> BigInt {
        self.coeffs.last().cloned().unwrap_or_default()
    }

    pub fn is_constant(&self) -> bool {
        self.coeffs.len() <= 1
    }

    /// Nonnegative gcd of the coefficients.
    pub fn content(&self) -> BigInt {
        let mut g = BigInt::zero();
        for c in &self.coeffs {
            g = g.gcd(c);
            if g.is_one() {
                break;
            }
        }
        g
    }

    /// `(c, q)` with `self = c*q`, `q` primitive with positive leading coefficient.
    pub fn content_and_primitive(&self) -> (BigInt, UniPoly) {
        if self.is_zero() {
            return (BigInt::zero(), self.clone());
        }
        let mut c = self.content();
        if self.leading_coeff().is_negative() {
            c = -c;
        }
        let q = UniPoly {
            coeffs: self.coeffs.iter().map(|a| a / &c).collect(),
            var: self.var,
        };
        (c, q)
    }

    pub fn primitive_part(&self) -> UniPoly {
        self.content_and_primitive().1
    }

    pub fn scale(&self, c: &BigInt) -> UniPoly {
        if c.is_zero() {
            return UniPoly::zero(self.var);
        }
        UniPoly {
            coeffs: self.coeffs.iter().map(|a| a * c).collect(),
            var: self.var,
        }
    }

    /// Divides every coefficient by `c`, which must divide them all.
    pub fn div_scalar_exact(&self, c: &BigInt) -> Result<UniPoly, UpolyError> {
        let mut out = Vec::with_capacity(self.coeffs.len());
        for a in &self.coeffs {
            let (q, r) = a.div_rem(c);
            if !r.is_zero() {
                return Err(UpolyError::InexactDivision);
            }
            out.push(q);
        }
        Ok(UniPoly::new(out, self.var))
    }

    pub fn derivative(&self) -> UniPoly {
        let coeffs = self
            .coeffs
            .iter()
            .enumerate()
            .skip(1)
            .map(|(k, c)| c * BigInt::from(k))
            .collect();
        UniPoly::new(coeffs, self.var)
    }

    /// `var^deg * p(1/var)`.
    pub fn reverse(&self) -> UniPoly {
        let mut c = self.coeffs.clone();
        c.reverse();
        UniPoly::new(c, self.var)
    }

    /// Palindromic coefficient list.
    pub fn is_reciprocal(&self) -> bool {
        !self.is_zero() && self.coeffs.iter().eq(self.coeffs.iter().rev())
    }

    pub fn pow(&self, n: u32) -> UniPoly {
        let mut acc = UniPoly::one(self.var);
        for _ in 0..n {
            acc = &acc * self;
        }
        acc
    }

    /// Horner evaluation in any scalar.
    pub fn eval<T: Scalar>(&self, x: &T) -> T {
        let mut acc = T::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * x.clone() + T::from_rational(&Rational::from_integer(c.clone()));
        }
        acc
    }

    pub fn eval_int(&self, x: &BigInt) -> BigInt {
        let mut acc = BigInt::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * x + c;
        }
        acc
    }

    /// `d^deg * p(n/d)` for `q = n/d`, computed in integers.
    pub fn eval_homogeneous(&self, q: &Rational) -> BigInt {
        let (n, d) = (q.numer(), q.denom());
        let mut acc = BigInt::zero();
        let mut dp = BigInt::one();
        for (i, c) in self.coeffs.iter().rev().enumerate() {
            if i == 0 {
                acc = c.clone();
            } else {
                dp *= d;
                acc = acc * n + c * &dp;
            }
        }
        acc
    }

    pub fn eval_rational(&self, q: &Rational) -> Rational {
        if self.is_zero() {
            return Rational::zero();
        }
        let h = self.eval_homogeneous(q);
        Rational::new(h, num_traits::pow(q.denom().clone(), self.deg()))
    }

    /// Exact sign of `p(q)`.
    pub fn sign_at(&self, q: &Rational) -> Ordering {
        self.eval_homogeneous(q).sign_ordering()
    }

    /// Sign of `p` just to the right of `+inf` (`true`) or left of `-inf`.
    pub fn sign_at_infinity(&self, positive: bool) -> Ordering {
        let lc = self.leading_coeff().sign_ordering();
        if positive || self.deg() % 2 == 0 {
            lc
        } else {
            lc.reverse()
        }
    }

    /// Pseudo-remainder of `self` by `g` scaled by a positive factor, so its
    /// sign agrees with the true remainder.
    pub fn signed_pseudo_rem(&self, g: &UniPoly) -> UniPoly {
        assert!(!g.is_zero(), "pseudo-remainder by zero");
        let g = if g.leading_coeff().is_negative() {
            -g
        } else {
            g.clone()
        };
        let dg = g.deg();
        let lg = g.leading_coeff();
        let mut r = self.coeffs.clone();
        while r.len() > dg && !r.is_empty() {
            let lr = r.last().unwrap().clone();
            let shift = r.len() - 1 - dg;
            for c in r.iter_mut() {
                *c *= &lg;
            }
            for (i, gc) in g.coeffs.iter().enumerate() {
                r[i + shift] -= &lr * gc;
            }
            while r.last().is_some_and(|c| c.is_zero()) {
                r.pop();
            }
        }
        UniPoly::new(r, self.var)
    }

    /// Exact quotient over the integers; fails when `g` does not divide `self`
    /// with an integral quotient.
    pub fn exact_divide(&self, g: &UniPoly) -> Result<UniPoly, UpolyError> {
        if g.is_zero() {
            return Err(UpolyError::ZeroPolynomial);
        }
        if self.is_zero() {
            return Ok(UniPoly::zero(self.var));
        }
        if self.deg() < g.deg() {
            return Err(UpolyError::InexactDivision);
        }
        let dg = g.deg();
        let lg = g.leading_coeff();
        let mut r = self.coeffs.clone();
        let mut q = vec![BigInt::zero(); self.deg() - dg + 1];
        for k in (0..q.len()).rev() {
            let top = &r[k + dg];
            if top.is_zero() {
                continue;
            }
            let (c, rem) = top.div_rem(&lg);
            if !rem.is_zero() {
                return Err(UpolyError::InexactDivision);
            }
            for (i, gc) in g.coeffs.iter().enumerate() {
                r[k + i] -= &c * gc;
            }
            q[k] = c;
        }
        if r.iter().any(|c| !c.is_zero()) {
            return Err(UpolyError::InexactDivision);
        }
        Ok(UniPoly::new(q, self.var))
    }

    /// Primitive gcd with positive leading coefficient (subresultant
    /// remainder sequence).
    pub fn gcd(&self, other: &UniPoly) -> UniPoly {
        if self.is_zero() {
            return other.primitive_part();
        }
        if other.is_zero() {
            return self.primitive_part();
        }
        let (a, b) = if self.deg() >= other.deg() {
            (self.primitive_part(), other.primitive_part())
        } else {
            (other.primitive_part(), self.primitive_part())
        };
        let last = sturm::remainder_chain(a, b)
            .pop()
            .expect("chain is nonempty");
        if last.is_constant() {
            return UniPoly::one(self.var);
        }
        last.primitive_part()
    }

    pub fn is_squarefree(&self) -> bool {
        self.gcd(&self.derivative()).is_constant()
    }

    /// Primitive squarefree part.
    pub fn squarefree_part(&self) -> UniPoly {
        let g = self.gcd(&self.derivative());
        let p = self.primitive_part();
        if g.is_constant() {
            return p;
        }
        p.exact_divide(&g).expect("gcd divides").primitive_part()
    }

    /// Yun decomposition of the primitive part: `(factor, multiplicity)` for
    /// each nonconstant factor.
    pub fn squarefree_decomposition(&self) -> Vec<(UniPoly, u32)> {
        let f = self.primitive_part();
        let mut out = Vec::new();
        if f.is_constant() {
            return out;
        }
        let df = f.derivative();
        let a0 = f.gcd(&df);
        let mut b = f.exact_divide(&a0).expect("gcd divides f");
        let mut c = df.exact_divide(&a0).expect("gcd divides f'");
        let mut d = &c - &b.derivative();
        let mut i = 1;
        while !b.is_constant() {
            let a = b.gcd(&d);
            if !a.is_constant() {
                out.push((a.clone(), i));
            }
            b = b.exact_divide(&a).expect("gcd divides b");
            c = d.exact_divide(&a).expect("gcd divides d");
            d = &c - &b.derivative();
            i += 1;
        }
        out
    }

    /// One integer coefficient per line, low degree first.
    pub fn to_text(&self) -> String {
        let mut s = String::new();
        for c in &self.coeffs {
            s.push_str(&c.to_string());
            s.push('\n');
        }
        s
    }

    pub fn from_text(text: &str, var: Var) -> Result<UniPoly, UpolyError> {
        let mut coeffs = Vec::new();
        for (i, line) in text.lines().enumerate() {
            let l = line.trim();
            if l.is_empty() {
                continue;
            }
            let c: BigInt = l.parse().map_err(|_| UpolyError::Parse {
                line: i + 1,
                text: l.to_string(),
            })?;
            coeffs.push(c);
        }
        Ok(UniPoly::new(coeffs, var))
    }

    /// Largest coefficient bit length.
    pub fn max_bits(&self) -> u64 {
        self.coeffs.iter().map(|c| c.bits()).max().unwrap_or(0)
    }
}

trait SignOrdering {
    fn sign_ordering(&self) -> Ordering;
}

impl SignOrdering for BigInt {
    fn sign_ordering(&self) -> Ordering {
        if self.is_positive() {
            Ordering::Greater
        } else if self.is_negative() {
            Ordering::Less
        } else {
            Ordering::Equal
        }
    }
}

impl fmt::Display for UniPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let sign = if c.is_negative() {
                "-"
            } else if first {
                ""
            } else {
                "+"
            };
            let a = c.abs();
            let body = match k {
                0 => a.to_string(),
                _ if a.is_one() => String::new(),
                _ => format!("{a}*"),
            };
            let mono = match k {
                0 => String::new(),
                1 => self.var.to_string(),
                _ => format!("{}^{}", self.var, k),
            };
            if first {
                write!(f, "{sign}{body}{mono}")?;
            } else {
                write!(f, " {sign} {body}{mono}")?;
            }
            first = false;
        }
        Ok(())
    }
}
