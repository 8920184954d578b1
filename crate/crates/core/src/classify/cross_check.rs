//! Independent check through `Q(s) = Res_t(H1, H2) = q2^6 q4^2 q120 q132`.
//!
//! The squarefree split and the separation of `q120` from `q132` are done
//! modulo word-size primes and lifted by Chinese remaindering; every lifted
//! factor is accepted only after an exact integer division.

use std::cmp::Ordering;

use num_bigint::BigInt;
use num_traits::{One, ToPrimitive};
use rayon::prelude::*;

use super::pipeline::Solution;
use super::ClassifyError;
use crate::bpoly::resultant;
use crate::model::polynomials::h2_parts;
use crate::model::ModelPolynomials;
use crate::numeric::sqrt_enclosure;
use crate::scalar::Scalar;
use crate::upoly::{modp, OpenRange, RootIsolator, UniPoly, Var};
use crate::{Rational, RationalInterval};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct QFactor {
    pub name: String,
    pub degree: usize,
    pub multiplicity: u32,
    pub real_roots: usize,
    pub in_s: usize,
}

#[derive(Debug, Clone, PartialEq)]
pub struct QReport {
    pub degree: usize,
    pub content: BigInt,
    pub factors: Vec<QFactor>,
    /// Per certified solution: label, `s` enclosure, and the factor with a
    /// root inside it.
    pub solution_roots: Vec<(usize, RationalInterval, String)>,
}

impl QReport {
    pub fn factor(&self, name: &str) -> Option<&QFactor> {
        self.factors.iter().find(|f| f.name == name)
    }

    pub fn total_in_s(&self) -> usize {
        self.factors.iter().map(|f| f.in_s).sum()
    }
}

/// CRT-lifts `lc(target) * g_p` from monic modular factors `g_p` of degree
/// `degree`; once the symmetric lift is stable across one more prime, its
/// primitive part is tried as an exact divisor of `target`.
fn lift_factor(
    target: &UniPoly,
    degree: usize,
    mut modular: impl FnMut(u64) -> Option<Vec<u64>>,
) -> Option<UniPoly> {
    let lc = target.leading_coeff();
    let mut acc: Vec<BigInt> = Vec::new();
    let mut modulus = BigInt::one();
    let mut previous: Option<UniPoly> = None;
    for &p in modp::PRIMES.iter() {
        let lcp = modp::reduce_int(&lc, p);
        if lcp == 0 {
            continue;
        }
        let Some(g) = modular(p) else { continue };
        if g.len() != degree + 1 {
            continue;
        }
        let scaled: Vec<u64> = g.iter().map(|&c| modp::mul(c, lcp, p)).collect();
        acc = modp::crt_combine(&acc, &modulus, &scaled, p);
        modulus *= BigInt::from(p);
        let cand = modp::lift_symmetric(&acc, &modulus, target.var()).primitive_part();
        let stable = previous.as_ref() == Some(&cand);
        if stable && cand.degree() == Some(degree) && target.exact_divide(&cand).is_ok() {
            return Some(cand);
        }
        previous = Some(cand);
    }
    None
}

/// `K(s, u)` with `H2 = t^4 K(s, t + 1/t)`, as coefficients in `u`.
fn k_coeffs() -> [UniPoly; 5] {
    let (d, a, b) = h2_parts();
    let d4 = d.pow(4);
    let c = |k: i64| UniPoly::constant(BigInt::from(k), Var::S);
    [
        &(&(&d4 * &c(2)) + &(&a * &c(8))) + &b,
        UniPoly::zero(Var::S),
        -&(&(&d4 * &c(4)) + &(&a * &c(4))),
        UniPoly::zero(Var::S),
        d4,
    ]
}

/// `Res_u(R60(u), K(s, u))` modulo `p`, by evaluation at `481` nodes.
fn r60_resultant_mod(r60: &UniPoly, p: u64) -> Option<Vec<u64>> {
    let rp = modp::reduce(r60, p);
    if rp.len() != r60.coeffs().len() {
        return None;
    }
    let kc: Vec<Vec<u64>> = k_coeffs().iter().map(|c| modp::reduce(c, p)).collect();
    let bound = 60 * 8;
    let mut xs = Vec::with_capacity(bound + 1);
    let mut ys = Vec::with_capacity(bound + 1);
    let mut x = 1u64;
    while xs.len() <= bound {
        let k: Vec<u64> = kc.iter().map(|c| modp::eval(c, x, p)).collect();
        if k[4] != 0 {
            xs.push(x);
            ys.push(modp::resultant(&rp, &k, p));
        }
        x += 1;
    }
    Some(modp::interpolate(&xs, &ys, p))
}

fn sqrt3(width: &Rational) -> Result<RationalInterval, ClassifyError> {
    sqrt_enclosure(
        &RationalInterval::point(Rational::from_integer(3.into())),
        width,
    )
    .map_err(|e| ClassifyError::Model(e.into()))
}

/// A rational range with the same roots of `iso` as
/// `S = (sqrt3/3, (6+sqrt3)/11)`: an outer and an inner rational
/// approximation of `S` are tightened until their root counts agree, and the
/// inner one is returned.
pub fn s_range(iso: &RootIsolator) -> Result<OpenRange, ClassifyError> {
    let three = Rational::from_integer(3.into());
    let (six, eleven) = (
        Rational::from_integer(6.into()),
        Rational::from_integer(11.into()),
    );
    for k in 1..=16u32 {
        let w = Rational::new(BigInt::one(), BigInt::one() << (32 * k));
        let r3 = sqrt3(&w)?;
        let outer = OpenRange::between(r3.lo() / &three, (&six + r3.hi()) / &eleven);
        let inner = OpenRange::between(r3.hi() / &three, (&six + r3.lo()) / &eleven);
        if iso.count(&outer) == iso.count(&inner) {
            return Ok(inner);
        }
    }
    Err(ClassifyError::CrossCheckMismatch(format!(
        "root of {} too close to the boundary of S",
        iso.id()
    )))
}

pub fn count_in_s(iso: &RootIsolator) -> Result<usize, ClassifyError> {
    Ok(iso.count(&s_range(iso)?))
}

/// The root in `S` of `(5E1-8) s^2 + (4-4E1) s + E1 = 0`.
fn s_enclosure(e1: &RationalInterval) -> Result<RationalInterval, ClassifyError> {
    let n = |k: i64| RationalInterval::from_i64(k);
    let a = n(5) * e1.clone() - n(8);
    let b = n(4) - n(4) * e1.clone();
    let disc = b.clone() * b.clone() - n(4) * a.clone() * e1.clone();
    let width = e1
        .width()
        .max(Rational::new(BigInt::one(), BigInt::one() << 80u32));
    let root = sqrt_enclosure(
        &disc
            .clamp_nonnegative()
            .map_err(|e| ClassifyError::Model(e.into()))?,
        &width,
    )
    .map_err(|e| ClassifyError::Model(e.into()))?;
    let two_a = n(2) * a;
    let in_s = |x: &RationalInterval| {
        let m = x.midpoint().to_f64().unwrap_or(f64::NAN);
        m > 3f64.sqrt() / 3.0 && m < (6.0 + 3f64.sqrt()) / 11.0
    };
    for sign in [1, -1] {
        let s = (-b.clone() + n(sign) * root.clone())
            .try_div(&two_a)
            .map_err(|e| ClassifyError::Model(e.into()))?;
        if in_s(&s) {
            return Ok(s);
        }
    }
    Err(ClassifyError::CrossCheckMismatch(
        "no parameter s in S for a certified solution".into(),
    ))
}

/// `Q = content * q2^6 q4^2 q120 q132`, each factor primitive.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct QFactors {
    pub degree: usize,
    pub content: BigInt,
    pub q2: UniPoly,
    pub q4: UniPoly,
    pub q120: UniPoly,
    pub q132: UniPoly,
}

impl QFactors {
    /// `(name, factor, multiplicity)` in degree order.
    pub fn named(&self) -> [(&'static str, &UniPoly, u32); 4] {
        [
            ("q2", &self.q2, 6),
            ("q4", &self.q4, 2),
            ("q120", &self.q120, 1),
            ("q132", &self.q132, 1),
        ]
    }
}

pub fn q_factors(model: &ModelPolynomials) -> Result<QFactors, ClassifyError> {
    let q = resultant(&model.h1, &model.h2, Var::T)?;
    let qp = q.primitive.clone();
    let degree = qp.degree().unwrap_or(0);
    let mismatch = |m: &str| ClassifyError::CrossCheckMismatch(m.to_string());

    let part = |mult: u32, deg: usize| {
        lift_factor(&qp, deg, |p| {
            modp::squarefree_decomposition(&modp::reduce(&qp, p), p)
                .into_iter()
                .find(|(_, m)| *m == mult)
                .map(|(f, _)| f)
        })
    };
    let q2 = part(6, 2)
        .ok_or_else(|| mismatch("no squarefree factor of multiplicity 6 and degree 2"))?;
    let q4 = part(2, 4)
        .ok_or_else(|| mismatch("no squarefree factor of multiplicity 2 and degree 4"))?;
    let simple = part(1, 252)
        .ok_or_else(|| mismatch("no squarefree factor of multiplicity 1 and degree 252"))?;
    let rebuilt = &(&q2.pow(6) * &q4.pow(2)) * &simple;
    if rebuilt.primitive_part() != qp {
        return Err(mismatch("q2^6 q4^2 q252 does not reproduce Q"));
    }
    let r60 = &model.printed_r60;
    let q120 = lift_factor(&simple, 120, |p| {
        let g = r60_resultant_mod(r60, p)?;
        Some(modp::gcd(&modp::reduce(&simple, p), &g, p))
    })
    .ok_or_else(|| mismatch("gcd with Res_u(R60, K) does not give a degree-120 factor"))?;
    let q132 = simple
        .exact_divide(&q120)
        .map_err(|_| mismatch("q120 does not divide"))?
        .primitive_part();
    Ok(QFactors {
        degree,
        content: q.content,
        q2,
        q4,
        q120,
        q132,
    })
}

pub fn cross_check_q(
    model: &ModelPolynomials,
    solutions: &[Solution],
) -> Result<QReport, ClassifyError> {
    let qf = q_factors(model)?;
    let named = qf.named();
    let isolators = named
        .par_iter()
        .map(|(name, f, _)| RootIsolator::new(*name, f))
        .collect::<Result<Vec<_>, _>>()?;
    let mut factors = Vec::new();
    for ((name, f, mult), iso) in named.iter().zip(&isolators) {
        factors.push(QFactor {
            name: name.to_string(),
            degree: f.degree().unwrap_or(0),
            multiplicity: *mult,
            real_roots: iso.count(&OpenRange::all()),
            in_s: count_in_s(iso)?,
        });
    }

    let mut solution_roots = Vec::new();
    for sol in solutions {
        let s = s_enclosure(&sol.geometry.e1)?;
        let range = OpenRange::between(s.lo().clone(), s.hi().clone());
        let owner = isolators
            .iter()
            .find(|iso| iso.count(&range) >= 1 || iso.poly().sign_at(s.lo()) == Ordering::Equal)
            .ok_or_else(|| {
                ClassifyError::CrossCheckMismatch(
                    "a certified solution has no root of Q in its s-enclosure".into(),
                )
            })?;
        solution_roots.push((sol.label, s, owner.id().to_string()));
    }
    Ok(QReport {
        degree: qf.degree,
        content: qf.content,
        factors,
        solution_roots,
    })
}
