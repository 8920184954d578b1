//! `H1, H2` in the rational parameterisation `(s, t)`, derived symbolically
//! from `h1, h2` and cross-checked against the embedded printed forms.

use std::collections::BTreeMap;
use std::sync::OnceLock;

use num_bigint::BigInt;
use sha2::{Digest, Sha256};

use super::formulas::{self, ModelVars};
use super::ModelError;
use crate::bpoly::{ratfun_compose, RatFun2, Sym, SymPoly};
use crate::upoly::{UniPoly, Var};
use crate::BiPoly;

const ST: [Var; 2] = [Var::S, Var::T];

/// Embedded coefficient files with their SHA-256 digests. Each `R_j` file
/// lists the coefficients, constant term first, of `R_j` divided by its
/// prefactor; `r60.txt` lists `R60(u)`.
pub const EMBEDDED_DATA: [(&str, &str, &str); 8] = [
    (
        "h1_r0.txt",
        include_str!("../../data/h1_r0.txt"),
        "e412d9b66e836676ab4b662db4779ac04bbef09dea7b2f730cd364138d84ddb2",
    ),
    (
        "h1_r1.txt",
        include_str!("../../data/h1_r1.txt"),
        "41456f6796730107b81f74aef9077760ca7cbb4693ecc59e778be41fa9f84682",
    ),
    (
        "h1_r2.txt",
        include_str!("../../data/h1_r2.txt"),
        "4832b9e9b10444eedf892c3c21f54e772baebc3b7694be50cbc8f4e9fc8daf60",
    ),
    (
        "h1_r3.txt",
        include_str!("../../data/h1_r3.txt"),
        "8ce282f283fd48b30b2db4f4785faa8cfd464d72a6a3df63ab4a33c30ff00a82",
    ),
    (
        "h1_r4.txt",
        include_str!("../../data/h1_r4.txt"),
        "8fc7dfa6381e30df04ef8d52873db8e3cd9d572dc1bb639ed6943a34e449f312",
    ),
    (
        "h1_r5.txt",
        include_str!("../../data/h1_r5.txt"),
        "bc9af4ac03916e929aea87f04251d86481a0594aec1bb6816a99e8c785f76ccd",
    ),
    (
        "h1_r6.txt",
        include_str!("../../data/h1_r6.txt"),
        "ab8938a0e60fba218fb12a24738bc6527391fb940f2308ac802b2914722d6389",
    ),
    (
        "r60.txt",
        include_str!("../../data/r60.txt"),
        "8dbdb0a933ad78fa7c12408b9fbd6dbf91da70c79aa569dc3da76c43a1e7f55e",
    ),
];

pub fn sha256_hex(bytes: &[u8]) -> String {
    Sha256::digest(bytes)
        .iter()
        .map(|b| format!("{b:02x}"))
        .collect()
}

pub fn verify_embedded_data() -> Result<(), ModelError> {
    for (name, text, digest) in EMBEDDED_DATA {
        if sha256_hex(text.as_bytes()) != digest {
            return Err(ModelError::DigestMismatch(name));
        }
    }
    Ok(())
}

/// One digest over all embedded files, used to key caches and certificates.
pub fn embedded_data_digest() -> String {
    let mut h = Sha256::new();
    for (name, text, _) in EMBEDDED_DATA {
        h.update(name.as_bytes());
        h.update([0u8]);
        h.update(text.as_bytes());
        h.update([0u8]);
    }
    h.finalize().iter().map(|b| format!("{b:02x}")).collect()
}

#[derive(Debug, Clone, PartialEq)]
pub struct ModelPolynomials {
    /// Primitive numerator of `h1` after substitution, atom factors removed.
    pub h1: BiPoly,
    /// Primitive numerator of `h2` after substitution, atom factors removed.
    pub h2: BiPoly,
    pub printed_h1: BiPoly,
    pub printed_r60: UniPoly,
    pub p4: UniPoly,
    pub q4: UniPoly,
    /// `h1 = h1_scale * H1` with `h1_scale` a rational monomial in the atoms.
    pub h1_scale: RatFun2,
    /// `h2 = h2_scale * H2`.
    pub h2_scale: RatFun2,
}

fn s_poly(coeffs: &[i64]) -> BiPoly {
    BiPoly::from_univariate(&UniPoly::from_i64s(coeffs, Var::S), 0, ST)
}

fn t_poly(coeffs: &[i64]) -> BiPoly {
    BiPoly::from_univariate(&UniPoly::from_i64s(coeffs, Var::T), 1, ST)
}

fn ratfun(num: BiPoly, den: i64, atoms: [u32; 4]) -> RatFun2 {
    RatFun2::new(num, BigInt::from(den), atoms).expect("nonzero constant")
}

/// Rational parameterisation of `x3, y5, E1, E2, E3`; atoms are
/// `[t, s, 2s-1, 5s^2-4s+1]`.
pub fn parameterisation() -> BTreeMap<Sym, RatFun2> {
    let mut m = BTreeMap::new();
    m.insert(
        Sym::X3,
        ratfun(
            &s_poly(&[-1, 0, 3]) * &s_poly(&[1, -8, 13]),
            2,
            [0, 0, 0, 2],
        ),
    );
    m.insert(Sym::Y5, ratfun(t_poly(&[1, 0, -1]), 4, [1, 0, 0, 0]));
    m.insert(Sym::E1, ratfun(s_poly(&[0, -4, 8]), 1, [0, 0, 0, 1]));
    let e2 = &(&s_poly(&[0, 8]) * &s_poly(&[-1, 1])) * &(&s_poly(&[-1, 3]) * &s_poly(&[-1, 2]));
    m.insert(Sym::E2, ratfun(-&e2, 1, [0, 0, 0, 2]));
    m.insert(Sym::E3, ratfun(t_poly(&[1, 0, 1]).pow(3), 8, [3, 0, 0, 0]));
    m
}

fn sym_vars() -> ModelVars<SymPoly> {
    ModelVars {
        x3: SymPoly::var(Sym::X3),
        y5: SymPoly::var(Sym::Y5),
        e1: SymPoly::var(Sym::E1),
        e2: SymPoly::var(Sym::E2),
        e3: SymPoly::var(Sym::E3),
    }
}

/// `h = scale * core` with `core` primitive and free of atom factors.
fn split(r: &RatFun2) -> (BiPoly, RatFun2) {
    let (c, exps, core) = r.numerator_core();
    let mut num = BiPoly::constant(c, ST);
    for (a, e) in crate::bpoly::Atom::ALL.iter().zip(exps) {
        num = &num * &a.poly().pow(e);
    }
    let scale = RatFun2::new(num, r.den_const().clone(), r.den_atoms())
        .expect("positive denominator")
        .reduce();
    (core, scale)
}

fn load_s(text: &str) -> Result<BiPoly, ModelError> {
    Ok(BiPoly::from_univariate(
        &UniPoly::from_text(text, Var::S)?,
        0,
        ST,
    ))
}

/// `R0 (t^10+1) - R1 (t^9+4t^7-t) + R2 (t^8+t^2) + R3 (t^7+t^3) + R4 t^4 + R5 t^5 + R6 t^6`.
pub fn printed_h1_assembly() -> Result<BiPoly, ModelError> {
    let prefactors = [
        &s_poly(&[0, 0, 1]) * &s_poly(&[-1, 2]).pow(2),
        &(&s_poly(&[0, 2]) * &s_poly(&[-1, 1])) * &(&s_poly(&[-1, 3]) * &s_poly(&[-1, 2])),
        s_poly(&[1]),
        &s_poly(&[0, 4]) * &s_poly(&[-1, 2]),
        s_poly(&[1]),
        &s_poly(&[0, 0, 0, -1024]) * &s_poly(&[-1, 2]).pow(3),
        s_poly(&[1]),
    ];
    let t_parts = [
        t_poly(&[1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 1]),
        -&t_poly(&[0, -1, 0, 0, 0, 0, 0, 4, 0, 1]),
        t_poly(&[0, 0, 1, 0, 0, 0, 0, 0, 1]),
        t_poly(&[0, 0, 0, 1, 0, 0, 0, 1]),
        t_poly(&[0, 0, 0, 0, 1]),
        t_poly(&[0, 0, 0, 0, 0, 1]),
        t_poly(&[0, 0, 0, 0, 0, 0, 1]),
    ];
    let mut acc = BiPoly::zero(ST);
    for (j, (pre, tp)) in prefactors.iter().zip(&t_parts).enumerate() {
        let r = pre * &load_s(EMBEDDED_DATA[j].1)?;
        acc = &acc + &(&r * tp);
    }
    Ok(acc)
}

/// The `s`-polynomials `(D, A, B)` of the printed `H2`.
pub fn h2_parts() -> (UniPoly, UniPoly, UniPoly) {
    let d = UniPoly::from_i64s(&[1, -4, 5], Var::S);
    let a = &UniPoly::from_i64s(&[7, -56, 150, -152, 47], Var::S)
        * &UniPoly::from_i64s(&[1, -8, 58, -168, 153], Var::S);
    let b = UniPoly::from_i64s(
        &[
            198, -3168, 21432, -79776, 183428, -286240, 326904, -258784, 101222,
        ],
        Var::S,
    );
    (d, a, b)
}

/// `D^4 (t^8+1) - 4A (t^6+t^2) + B t^4` with `D = 5s^2-4s+1`.
pub fn printed_h2() -> BiPoly {
    let (d, a, b) = h2_parts();
    let lift = |p: &UniPoly| BiPoly::from_univariate(p, 0, ST);
    let (d, a, b) = (lift(&d), lift(&a), lift(&b));
    let t8 = t_poly(&[1, 0, 0, 0, 0, 0, 0, 0, 1]);
    let t62 = t_poly(&[0, 0, 1, 0, 0, 0, 1]);
    let t4 = t_poly(&[0, 0, 0, 0, 1]);
    &(&(&d.pow(4) * &t8) - &(&a.scale(&BigInt::from(4)) * &t62)) + &(&b * &t4)
}

/// Equal primitive parts up to one overall sign.
fn same_up_to_sign(a: &BiPoly, b: &BiPoly) -> bool {
    let pa = a.primitive_part();
    let pb = b.primitive_part();
    pa == pb || pa == -&pb
}

pub fn build_model_polynomials() -> Result<ModelPolynomials, ModelError> {
    verify_embedded_data()?;
    let binding = parameterisation();
    let v = sym_vars();

    let h1_composed = ratfun_compose(&formulas::h1(&v), &binding)?;
    let (mut h1, mut h1_scale) = split(&h1_composed);
    let printed_h1 = printed_h1_assembly()?;
    if !same_up_to_sign(&h1, &printed_h1) {
        return Err(ModelError::ReferenceMismatch("H1"));
    }
    if h1 != printed_h1.primitive_part() {
        h1 = -&h1;
        h1_scale = h1_scale.neg();
    }

    let h2_composed = ratfun_compose(&formulas::h2(&v.x3, &v.y5), &binding)?;
    let (mut h2, mut h2_scale) = split(&h2_composed);
    let printed = printed_h2();
    if !same_up_to_sign(&h2, &printed) {
        return Err(ModelError::ReferenceMismatch("H2"));
    }
    if h2 != printed.primitive_part() {
        h2 = -&h2;
        h2_scale = h2_scale.neg();
    }

    let printed_r60 = UniPoly::from_text(EMBEDDED_DATA[7].1, Var::U)?;
    Ok(ModelPolynomials {
        h1,
        h2,
        printed_h1,
        printed_r60,
        p4: UniPoly::from_i64s(&[1, 4, -14, 4, 1], Var::T),
        q4: UniPoly::from_i64s(&[1, -4, -14, -4, 1], Var::T),
        h1_scale,
        h2_scale,
    })
}

/// Process-wide cached [`build_model_polynomials`].
pub fn model_polynomials() -> Result<&'static ModelPolynomials, ModelError> {
    static CACHE: OnceLock<Result<ModelPolynomials, ModelError>> = OnceLock::new();
    CACHE
        .get_or_init(build_model_polynomials)
        .as_ref()
        .map_err(Clone::clone)
}
