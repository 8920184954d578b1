//! Bivariate integer polynomials, resultants and rational functions in the
//! parameter plane.

mod ratfun;
mod resultant;
mod sympoly;

pub use ratfun::{ratfun_compose, Atom, RatFun2};
pub use resultant::{
    bareiss_determinant, resultant, resultant_via, sylvester_matrix, BareissRing, Resultant,
    ResultantRoute,
};
pub use sympoly::{Sym, SymPoly};

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use thiserror::Error;

use crate::scalar::Scalar;
use crate::upoly::{UniPoly, Var};
use crate::Rational;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum BpolyError {
    #[error("degenerate resultant input: {0}")]
    DegenerateInput(&'static str),
    #[error("variable {0} does not occur in this polynomial ring")]
    UnknownVariable(Var),
    #[error("division leaves a nonzero remainder")]
    InexactDivision,
    #[error("symbol {0:?} has no binding")]
    UnboundSymbol(Sym),
    #[error("denominator vanishes or its enclosure contains zero")]
    DenominatorZero,
    #[error("division by a non-atomic rational function")]
    NotAtomic,
    #[error("malformed bivariate text at line {line}: {text:?}")]
    Parse { line: usize, text: String },
}

/// Sparse bivariate polynomial: exponent pair `(deg_x, deg_y)` to a nonzero
/// integer coefficient, where `vars = [x, y]`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct BiPoly {
    terms: BTreeMap<(u32, u32), BigInt>,
    vars: [Var; 2],
}

impl BiPoly {
    pub fn zero(vars: [Var; 2]) -> Self {
        BiPoly {
            terms: BTreeMap::new(),
            vars,
        }
    }

    pub fn constant(c: BigInt, vars: [Var; 2]) -> Self {
        Self::from_terms([((0, 0), c)], vars)
    }

    pub fn one(vars: [Var; 2]) -> Self {
        Self::constant(BigInt::one(), vars)
    }

    /// The generator `vars[which]`.
    pub fn generator(which: usize, vars: [Var; 2]) -> Self {
        let e = if which == 0 { (1, 0) } else { (0, 1) };
        Self::from_terms([(e, BigInt::one())], vars)
    }

    pub fn from_terms(
        terms: impl IntoIterator<Item = ((u32, u32), BigInt)>,
        vars: [Var; 2],
    ) -> Self {
        let mut p = BiPoly::zero(vars);
        for (e, c) in terms {
            p.add_term(e, c);
        }
        p
    }

    /// Embeds a univariate polynomial in the variable `vars[which]`.
    pub fn from_univariate(p: &UniPoly, which: usize, vars: [Var; 2]) -> Self {
        Self::from_terms(
            p.coeffs().iter().enumerate().map(|(k, c)| {
                let e = if which == 0 {
                    (k as u32, 0)
                } else {
                    (0, k as u32)
                };
                (e, c.clone())
            }),
            vars,
        )
    }

    fn add_term(&mut self, e: (u32, u32), c: BigInt) {
        if c.is_zero() {
            return;
        }
        let entry = self.terms.entry(e).or_default();
        *entry += c;
        if entry.is_zero() {
            self.terms.remove(&e);
        }
    }

    pub fn vars(&self) -> [Var; 2] {
        self.vars
    }

    pub fn index_of(&self, v: Var) -> Result<usize, BpolyError> {
        self.vars
            .iter()
            .position(|&w| w == v)
            .ok_or(BpolyError::UnknownVariable(v))
    }

    pub fn terms(&self) -> impl Iterator<Item = (&(u32, u32), &BigInt)> {
        self.terms.iter()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn coeff(&self, e: (u32, u32)) -> BigInt {
        self.terms.get(&e).cloned().unwrap_or_default()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn degree_in(&self, which: usize) -> Option<u32> {
        self.terms
            .keys()
            .map(|&(a, b)| if which == 0 { a } else { b })
            .max()
    }

    pub fn degree_in_var(&self, v: Var) -> Result<Option<u32>, BpolyError> {
        Ok(self.degree_in(self.index_of(v)?))
    }

    pub fn total_degree(&self) -> Option<u32> {
        self.terms.keys().map(|&(a, b)| a + b).max()
    }

    pub fn content(&self) -> BigInt {
        let mut g = BigInt::zero();
        for c in self.terms.values() {
            g = g.gcd(c);
            if g.is_one() {
                break;
            }
        }
        g
    }

    /// `(c, q)` with `self = c*q`, `q` primitive and its lexicographically
    /// largest term positive.
    pub fn content_and_primitive(&self) -> (BigInt, BiPoly) {
        if self.is_zero() {
            return (BigInt::zero(), self.clone());
        }
        let mut c = self.content();
        if self
            .terms
            .values()
            .next_back()
            .is_some_and(|v| v.is_negative())
        {
            c = -c;
        }
        let terms = self.terms.iter().map(|(e, v)| (*e, v / &c)).collect();
        (
            c,
            BiPoly {
                terms,
                vars: self.vars,
            },
        )
    }

    pub fn primitive_part(&self) -> BiPoly {
        self.content_and_primitive().1
    }

    pub fn scale(&self, c: &BigInt) -> BiPoly {
        if c.is_zero() {
            return BiPoly::zero(self.vars);
        }
        BiPoly {
            terms: self.terms.iter().map(|(e, v)| (*e, v * c)).collect(),
            vars: self.vars,
        }
    }

    pub fn div_scalar_exact(&self, c: &BigInt) -> Result<BiPoly, BpolyError> {
        let mut terms = BTreeMap::new();
        for (e, v) in &self.terms {
            let (q, r) = v.div_rem(c);
            if !r.is_zero() {
                return Err(BpolyError::InexactDivision);
            }
            terms.insert(*e, q);
        }
        Ok(BiPoly {
            terms,
            vars: self.vars,
        })
    }

    /// Multiplies by `vars[0]^a vars[1]^b`.
    pub fn shift(&self, a: u32, b: u32) -> BiPoly {
        BiPoly {
            terms: self
                .terms
                .iter()
                .map(|(&(x, y), v)| ((x + a, y + b), v.clone()))
                .collect(),
            vars: self.vars,
        }
    }

    /// Divides by `vars[0]^a vars[1]^b` if every term allows it.
    pub fn unshift(&self, a: u32, b: u32) -> Option<BiPoly> {
        if self.terms.keys().any(|&(x, y)| x < a || y < b) {
            return None;
        }
        Some(BiPoly {
            terms: self
                .terms
                .iter()
                .map(|(&(x, y), v)| ((x - a, y - b), v.clone()))
                .collect(),
            vars: self.vars,
        })
    }

    pub fn pow(&self, n: u32) -> BiPoly {
        let mut acc = BiPoly::one(self.vars);
        for _ in 0..n {
            acc = &acc * self;
        }
        acc
    }

    /// Coefficients with respect to `vars[which]`, each a polynomial in the
    /// other variable; index `k` holds the coefficient of `vars[which]^k`.
    pub fn coeffs_in(&self, which: usize) -> Vec<UniPoly> {
        let other = self.vars[1 - which];
        let deg = match self.degree_in(which) {
            Some(d) => d as usize,
            None => return Vec::new(),
        };
        let mut raw: Vec<Vec<BigInt>> = vec![Vec::new(); deg + 1];
        for (&(a, b), v) in &self.terms {
            let (k, j) = if which == 0 { (a, b) } else { (b, a) };
            let slot = &mut raw[k as usize];
            if slot.len() <= j as usize {
                slot.resize(j as usize + 1, BigInt::zero());
            }
            slot[j as usize] = v.clone();
        }
        raw.into_iter().map(|c| UniPoly::new(c, other)).collect()
    }

    /// Inverse of [`BiPoly::coeffs_in`].
    pub fn from_coeffs_in(which: usize, coeffs: &[UniPoly], vars: [Var; 2]) -> BiPoly {
        let mut p = BiPoly::zero(vars);
        for (k, c) in coeffs.iter().enumerate() {
            for (j, v) in c.coeffs().iter().enumerate() {
                let e = if which == 0 {
                    (k as u32, j as u32)
                } else {
                    (j as u32, k as u32)
                };
                p.add_term(e, v.clone());
            }
        }
        p
    }

    /// Exact value or enclosure at `(x, y)`.
    pub fn eval<T: Scalar>(&self, x: &T, y: &T) -> T {
        let coeffs = self.coeffs_in(1);
        let mut acc = T::zero();
        for c in coeffs.iter().rev() {
            acc = acc * y.clone() + c.eval(x);
        }
        acc
    }

    /// Substitutes an integer for `vars[which]`.
    pub fn specialize(&self, which: usize, value: &BigInt) -> UniPoly {
        let coeffs = self.coeffs_in(1 - which);
        UniPoly::new(
            coeffs.iter().map(|c| c.eval_int(value)).collect(),
            self.vars[1 - which],
        )
    }

    /// Exact quotient by a polynomial in `vars[which]` alone.
    pub fn exact_div_univariate(&self, which: usize, d: &UniPoly) -> Result<BiPoly, BpolyError> {
        let coeffs = self.coeffs_in(1 - which);
        let q: Result<Vec<UniPoly>, _> = coeffs
            .iter()
            .map(|c| {
                let c = c.clone().with_var(d.var());
                if c.is_zero() {
                    Ok(c)
                } else {
                    c.exact_divide(d).map_err(|_| BpolyError::InexactDivision)
                }
            })
            .collect();
        let q: Vec<UniPoly> = q?
            .into_iter()
            .map(|c| c.with_var(self.vars[which]))
            .collect();
        Ok(BiPoly::from_coeffs_in(1 - which, &q, self.vars))
    }

    /// `deg_x deg_y coefficient` triples, one per line, in exponent order.
    pub fn to_text(&self) -> String {
        let mut s = String::new();
        for (&(a, b), v) in &self.terms {
            s.push_str(&format!("{a} {b} {v}\n"));
        }
        s
    }

    pub fn from_text(text: &str, vars: [Var; 2]) -> Result<BiPoly, BpolyError> {
        let mut p = BiPoly::zero(vars);
        for (i, line) in text.lines().enumerate() {
            let l = line.trim();
            if l.is_empty() {
                continue;
            }
            let bad = || BpolyError::Parse {
                line: i + 1,
                text: l.to_string(),
            };
            let mut it = l.split_whitespace();
            let a: u32 = it.next().ok_or_else(bad)?.parse().map_err(|_| bad())?;
            let b: u32 = it.next().ok_or_else(bad)?.parse().map_err(|_| bad())?;
            let c: BigInt = it.next().ok_or_else(bad)?.parse().map_err(|_| bad())?;
            if it.next().is_some() {
                return Err(bad());
            }
            p.add_term((a, b), c);
        }
        Ok(p)
    }

    /// Evaluation at rationals, exact.
    pub fn eval_rational(&self, x: &Rational, y: &Rational) -> Rational {
        self.eval(x, y)
    }
}

impl std::ops::Add for &BiPoly {
    type Output = BiPoly;
    fn add(self, rhs: &BiPoly) -> BiPoly {
        let mut out = self.clone();
        for (e, v) in &rhs.terms {
            out.add_term(*e, v.clone());
        }
        out
    }
}

impl std::ops::Sub for &BiPoly {
    type Output = BiPoly;
    fn sub(self, rhs: &BiPoly) -> BiPoly {
        let mut out = self.clone();
        for (e, v) in &rhs.terms {
            out.add_term(*e, -v);
        }
        out
    }
}

impl std::ops::Neg for &BiPoly {
    type Output = BiPoly;
    fn neg(self) -> BiPoly {
        BiPoly {
            terms: self.terms.iter().map(|(e, v)| (*e, -v)).collect(),
            vars: self.vars,
        }
    }
}

impl std::ops::Mul for &BiPoly {
    type Output = BiPoly;
    fn mul(self, rhs: &BiPoly) -> BiPoly {
        let mut out = BiPoly::zero(self.vars);
        for (&(a1, b1), v1) in &self.terms {
            for (&(a2, b2), v2) in &rhs.terms {
                out.add_term((a1 + a2, b1 + b2), v1 * v2);
            }
        }
        out
    }
}

impl fmt::Display for BiPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let [x, y] = self.vars;
        let parts: Vec<String> = self
            .terms
            .iter()
            .rev()
            .map(|(&(a, b), v)| {
                let mut s = v.to_string();
                if a > 0 {
                    s.push_str(&format!("*{x}^{a}"));
                }
                if b > 0 {
                    s.push_str(&format!("*{y}^{b}"));
                }
                s
            })
            .collect();
        f.write_str(&parts.join(" + "))
    }
}

#[cfg(test)]
mod tests;
