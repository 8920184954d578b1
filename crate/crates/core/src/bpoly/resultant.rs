use num_bigint::BigInt;
use num_traits::{One, Zero};
use rayon::prelude::*;

use super::{BiPoly, BpolyError};
use crate::upoly::{UniPoly, Var};

/// Integral domain with exact division, enough for fraction-free elimination.
pub trait BareissRing: Clone + PartialEq + Send + Sync {
    fn zero_like(&self) -> Self;
    fn one_like(&self) -> Self;
    fn is_zero_elem(&self) -> bool;
    fn mul_sub(a: &Self, b: &Self, c: &Self, d: &Self) -> Self;
    fn div_exact(&self, d: &Self) -> Self;
    fn negate(&self) -> Self;
}

impl BareissRing for BigInt {
    fn zero_like(&self) -> Self {
        BigInt::zero()
    }
    fn one_like(&self) -> Self {
        BigInt::one()
    }
    fn is_zero_elem(&self) -> bool {
        self.is_zero()
    }
    fn mul_sub(a: &Self, b: &Self, c: &Self, d: &Self) -> Self {
        a * b - c * d
    }
    fn div_exact(&self, d: &Self) -> Self {
        debug_assert!((self % d).is_zero(), "Bareiss division is exact");
        self / d
    }
    fn negate(&self) -> Self {
        -self
    }
}

impl BareissRing for UniPoly {
    fn zero_like(&self) -> Self {
        UniPoly::zero(self.var())
    }
    fn one_like(&self) -> Self {
        UniPoly::one(self.var())
    }
    fn is_zero_elem(&self) -> bool {
        self.is_zero()
    }
    fn mul_sub(a: &Self, b: &Self, c: &Self, d: &Self) -> Self {
        &(a * b) - &(c * d)
    }
    fn div_exact(&self, d: &Self) -> Self {
        self.exact_divide(d).expect("Bareiss division is exact")
    }
    fn negate(&self) -> Self {
        -self
    }
}

/// Sylvester matrix of `f` and `g` given by coefficient lists (low degree
/// first). The formal degrees are the list lengths minus one, so leading
/// zeros are kept; this makes the determinant commute with specialisation.
pub fn sylvester_matrix<R: BareissRing>(f: &[R], g: &[R]) -> Vec<Vec<R>> {
    let m = f.len() - 1;
    let n = g.len() - 1;
    let size = m + n;
    let zero = f[0].zero_like();
    let mut rows = Vec::with_capacity(size);
    for i in 0..n {
        let mut row = vec![zero.clone(); size];
        for (k, c) in f.iter().rev().enumerate() {
            row[i + k] = c.clone();
        }
        rows.push(row);
    }
    for i in 0..m {
        let mut row = vec![zero.clone(); size];
        for (k, c) in g.iter().rev().enumerate() {
            row[i + k] = c.clone();
        }
        rows.push(row);
    }
    rows
}

/// Fraction-free determinant with row pivoting.
pub fn bareiss_determinant<R: BareissRing>(mut a: Vec<Vec<R>>) -> R {
    let n = a.len();
    assert!(
        n > 0 && a.iter().all(|r| r.len() == n),
        "square matrix required"
    );
    let mut negate = false;
    let mut prev = a[0][0].one_like();
    for k in 0..n - 1 {
        if a[k][k].is_zero_elem() {
            match (k + 1..n).find(|&i| !a[i][k].is_zero_elem()) {
                Some(i) => {
                    a.swap(k, i);
                    negate = !negate;
                }
                None => return a[0][0].zero_like(),
            }
        }
        let (top, bottom) = a.split_at_mut(k + 1);
        let pivot_row = &top[k];
        for row in bottom.iter_mut() {
            for j in k + 1..n {
                row[j] =
                    R::mul_sub(&row[j], &pivot_row[k], &row[k], &pivot_row[j]).div_exact(&prev);
            }
        }
        prev = a[k][k].clone();
    }
    let d = a[n - 1][n - 1].clone();
    if negate {
        d.negate()
    } else {
        d
    }
}

/// A resultant split as `content * primitive`, the primitive part having a
/// positive leading coefficient.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Resultant {
    pub content: BigInt,
    pub primitive: UniPoly,
}

impl Resultant {
    pub fn value(&self) -> UniPoly {
        self.primitive.scale(&self.content)
    }

    fn from_poly(p: UniPoly) -> Self {
        let (content, primitive) = p.content_and_primitive();
        Resultant { content, primitive }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ResultantRoute {
    /// Bareiss elimination directly over the polynomial ring.
    Direct,
    /// Integer determinants at enough nodes, then exact interpolation.
    Interpolation,
}

/// `Res_v(f, g)` with the standard Sylvester sign convention, computed by
/// evaluation and interpolation.
pub fn resultant(f: &BiPoly, g: &BiPoly, eliminate: Var) -> Result<Resultant, BpolyError> {
    resultant_via(f, g, eliminate, ResultantRoute::Interpolation)
}

pub fn resultant_via(
    f: &BiPoly,
    g: &BiPoly,
    eliminate: Var,
    route: ResultantRoute,
) -> Result<Resultant, BpolyError> {
    if f.is_zero() || g.is_zero() {
        return Err(BpolyError::DegenerateInput("zero polynomial"));
    }
    let which = f.index_of(eliminate)?;
    if g.index_of(eliminate)? != which {
        return Err(BpolyError::DegenerateInput("variable orders differ"));
    }
    let fc = f.coeffs_in(which);
    let gc = g.coeffs_in(which);
    if fc.len() < 2 || gc.len() < 2 {
        return Err(BpolyError::DegenerateInput(
            "degree 0 in the eliminated variable",
        ));
    }
    let other = f.vars()[1 - which];
    let p = match route {
        ResultantRoute::Direct => bareiss_determinant(sylvester_matrix(&fc, &gc)),
        ResultantRoute::Interpolation => interpolated(&fc, &gc, other),
    };
    Ok(Resultant::from_poly(p.with_var(other)))
}

fn interpolated(fc: &[UniPoly], gc: &[UniPoly], var: Var) -> UniPoly {
    let m = fc.len() - 1;
    let n = gc.len() - 1;
    let df = fc.iter().filter_map(|c| c.degree()).max().unwrap_or(0);
    let dg = gc.iter().filter_map(|c| c.degree()).max().unwrap_or(0);
    let bound = n * df + m * dg;
    let start = -((bound / 2) as i64);
    let nodes: Vec<BigInt> = (0..=bound as i64)
        .map(|k| BigInt::from(start + k))
        .collect();
    let values: Vec<BigInt> = nodes
        .par_iter()
        .map(|x| {
            let fe: Vec<BigInt> = fc.iter().map(|c| c.eval_int(x)).collect();
            let ge: Vec<BigInt> = gc.iter().map(|c| c.eval_int(x)).collect();
            bareiss_determinant(sylvester_matrix(&fe, &ge))
        })
        .collect();
    newton_interpolate(&nodes, values, var)
}

/// Exact interpolation of an integer polynomial through integer nodes. The
/// divided differences of an integer polynomial at integer nodes are integers.
pub fn newton_interpolate(nodes: &[BigInt], mut c: Vec<BigInt>, var: Var) -> UniPoly {
    let n = nodes.len();
    for j in 1..n {
        for i in (j..n).rev() {
            let num = &c[i] - &c[i - 1];
            let den = &nodes[i] - &nodes[i - j];
            debug_assert!((&num % &den).is_zero(), "divided difference is integral");
            c[i] = num / den;
        }
    }
    let mut out = vec![c[n - 1].clone()];
    for i in (0..n - 1).rev() {
        let mut next = vec![BigInt::zero(); out.len() + 1];
        for (k, o) in out.iter().enumerate() {
            next[k + 1] += o;
            next[k] -= o * &nodes[i];
        }
        next[0] += &c[i];
        out = next;
    }
    UniPoly::new(out, var)
}
