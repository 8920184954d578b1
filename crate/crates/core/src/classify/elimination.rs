//! Elimination of `s` from `H1 = H2 = 0` and peeling of the known factors of
//! the resulting `P(t)`.

use num_bigint::BigInt;

use super::ClassifyError;
use crate::bpoly::{resultant, Resultant};
use crate::model::ModelPolynomials;
use crate::upoly::{reciprocal_expand, reciprocal_reduce, UniPoly, Var};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Factor {
    P4,
    Q4,
    P120,
    P132,
}

impl Factor {
    pub const ALL: [Factor; 4] = [Factor::P4, Factor::Q4, Factor::P120, Factor::P132];

    pub fn name(self) -> &'static str {
        match self {
            Factor::P4 => "p4",
            Factor::Q4 => "q4",
            Factor::P120 => "p120",
            Factor::P132 => "p132",
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ExtractionRoute {
    ReciprocalGcd,
    EmbeddedR60,
}

/// Audit trail of the factor peeling.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PeelRecord {
    pub p_degree: usize,
    pub p_content: BigInt,
    /// `(factor text name, degree, multiplicity)` in peeling order.
    pub peeled: Vec<(String, usize, u32)>,
    pub cofactor_degree: usize,
    /// Degree of `gcd(C, reverse(C))`.
    pub reciprocal_gcd_degree: usize,
    pub route: ExtractionRoute,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FactorSet {
    pub p4: UniPoly,
    pub q4: UniPoly,
    pub p120: UniPoly,
    pub p132: UniPoly,
}

impl FactorSet {
    pub fn get(&self, f: Factor) -> &UniPoly {
        match f {
            Factor::P4 => &self.p4,
            Factor::Q4 => &self.q4,
            Factor::P120 => &self.p120,
            Factor::P132 => &self.p132,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Elimination {
    /// Primitive part of `Res_s(H1, H2)`, positive leading coefficient.
    pub p: UniPoly,
    pub factors: FactorSet,
    pub peel: PeelRecord,
}

/// `Res_s(H1, H2)`; the slow step.
pub fn resultant_p(model: &ModelPolynomials) -> Result<Resultant, ClassifyError> {
    Ok(resultant(&model.h1, &model.h2, Var::S)?)
}

pub fn eliminate(model: &ModelPolynomials) -> Result<Elimination, ClassifyError> {
    peel(model, resultant_p(model)?)
}

/// Peels `(1+t^2)^6 p4 q4` off a precomputed resultant and splits the
/// cofactor into `p120 p132`.
pub fn peel(model: &ModelPolynomials, res: Resultant) -> Result<Elimination, ClassifyError> {
    let p = res.primitive;
    let p_degree = p.degree().unwrap_or(0);
    let mut rest = p.clone();
    let mut peeled = Vec::new();
    let circle = UniPoly::from_i64s(&[1, 0, 1], Var::T);
    for _ in 0..6 {
        rest = rest
            .exact_divide(&circle)
            .map_err(|_| ClassifyError::PeelFailure("1+t^2"))?;
    }
    peeled.push(("1+t^2".to_string(), 2, 6));
    rest = rest
        .exact_divide(&model.p4)
        .map_err(|_| ClassifyError::PeelFailure("p4"))?;
    peeled.push(("p4".to_string(), 4, 1));
    rest = rest
        .exact_divide(&model.q4)
        .map_err(|_| ClassifyError::PeelFailure("q4"))?;
    peeled.push(("q4".to_string(), 4, 1));
    let cofactor = rest.primitive_part();
    let cofactor_degree = cofactor.degree().unwrap_or(0);
    let (p120, p132, gcd_degree, route) = extract_p120(&cofactor, &model.printed_r60)?;
    Ok(Elimination {
        p,
        factors: FactorSet {
            p4: model.p4.clone(),
            q4: model.q4.clone(),
            p120,
            p132,
        },
        peel: PeelRecord {
            p_degree,
            p_content: res.content,
            peeled,
            cofactor_degree,
            reciprocal_gcd_degree: gcd_degree,
            route,
        },
    })
}

fn same_up_to_sign(a: &UniPoly, b: &UniPoly) -> bool {
    let (pa, pb) = (a.primitive_part(), b.primitive_part());
    pa == pb || pa == -&pb
}

/// Splits `C = p120 p132`: through `gcd(C, reverse(C))` when that has degree
/// 120, otherwise through `t^60 R60(t + 1/t)`. Either way the reduction of
/// `p120` must reproduce `R60`.
pub fn extract_p120(
    c: &UniPoly,
    r60: &UniPoly,
) -> Result<(UniPoly, UniPoly, usize, ExtractionRoute), ClassifyError> {
    let g = c.gcd(&c.reverse());
    let gcd_degree = g.degree().unwrap_or(0);
    let attempt = |cand: UniPoly, route| -> Option<(UniPoly, UniPoly, ExtractionRoute)> {
        let cand = cand.primitive_part();
        let cof = c.exact_divide(&cand).ok()?;
        let reduced = reciprocal_reduce(&cand).ok()?;
        same_up_to_sign(&reduced, r60).then(|| (cand, cof.primitive_part(), route))
    };
    let found = if gcd_degree == 120 {
        attempt(g, ExtractionRoute::ReciprocalGcd)
    } else {
        None
    };
    let found =
        found.or_else(|| attempt(reciprocal_expand(r60, Var::T), ExtractionRoute::EmbeddedR60));
    let (p120, p132, route) = found.ok_or(ClassifyError::ExtractionAmbiguous(gcd_degree))?;
    Ok((p120, p132, gcd_degree, route))
}
