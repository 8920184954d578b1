//! End-to-end classification.

use num_bigint::BigInt;
use num_traits::One;
use rayon::prelude::*;

use super::adjudicate::{adjudicate, Adjudication, Precision, Verdict};
use super::candidates::{
    enumerate_candidates, factor_counts, root_table, FactorCounts, Isolators, RootEntry,
};
use super::cross_check::{cross_check_q, QReport};
use super::elimination::{eliminate, Elimination, Factor};
use super::ClassifyError;
use crate::model::formulas::f_system;
use crate::model::{
    cc_residuals, geometry_from_y5_within, model_polynomials, solve_masses, y5_of_t, Branch,
    MassSolution, ModelPolynomials, PentagonGeometry,
};
use crate::numeric::{pow10, sqrt_enclosure};
use crate::upoly::{OpenRange, RootIsolator, UniPoly};
use crate::{Rational, RationalInterval};

/// A certified central configuration, refined to the solution precision.
#[derive(Debug, Clone, PartialEq)]
pub struct Solution {
    pub label: usize,
    pub factor: Factor,
    pub branch: Branch,
    /// Decimal digits of the `t` cell.
    pub digits: u32,
    pub t: RationalInterval,
    pub geometry: PentagonGeometry,
    pub masses: MassSolution,
    pub residuals: [RationalInterval; 10],
    pub f_values: [RationalInterval; 5],
}

impl Solution {
    pub fn residuals_vanish(&self) -> bool {
        self.residuals.iter().all(|e| e.contains_zero())
            && self.f_values.iter().all(|e| e.contains_zero())
    }
}

/// The distinguished root `u*` of `R60` in `[205/100, 210/100]` and the
/// smaller root `t*` of `t^2 - u* t + 1`.
#[derive(Debug, Clone, PartialEq)]
pub struct SpecialRoot {
    pub u_star: RationalInterval,
    pub t_star: RationalInterval,
    pub r60_real_roots: usize,
}

#[derive(Debug, Clone, PartialEq)]
pub struct Classification {
    pub precision: Precision,
    pub elimination: Elimination,
    pub counts: Vec<FactorCounts>,
    pub roots: Vec<RootEntry>,
    pub adjudications: Vec<Adjudication>,
    pub solutions: Vec<Solution>,
    pub special: SpecialRoot,
    pub cross_check: Option<QReport>,
}

impl Classification {
    pub fn screened(&self) -> impl Iterator<Item = &Adjudication> {
        self.adjudications.iter().filter(|a| a.passes_screen())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub struct ClassifyOptions {
    pub precision: Precision,
    pub cross_check: bool,
}

/// Runs the full pipeline, eliminating from scratch.
pub fn classify(options: &ClassifyOptions) -> Result<Classification, ClassifyError> {
    let model = model_polynomials()?;
    let elimination = eliminate(model)?;
    classify_with(model, elimination, options)
}

/// Runs everything after the elimination.
pub fn classify_with(
    model: &ModelPolynomials,
    elimination: Elimination,
    options: &ClassifyOptions,
) -> Result<Classification, ClassifyError> {
    let iso = Isolators::new(&elimination.factors)?;
    let counts = factor_counts(&iso);
    let roots = root_table(&iso)?;
    let candidates = enumerate_candidates(&roots);
    let adjudications: Vec<Adjudication> = candidates
        .par_iter()
        .map(|c| adjudicate(c, &iso, &options.precision))
        .collect();
    let mut solutions = Vec::new();
    for a in adjudications
        .iter()
        .filter(|a| matches!(a.verdict, Verdict::Certified { .. }))
    {
        solutions.push(refine_solution(a, &iso, &options.precision)?);
    }
    let special = special_root(&model.printed_r60)?;
    let cross_check = if options.cross_check {
        Some(cross_check_q(model, &solutions)?)
    } else {
        None
    };
    Ok(Classification {
        precision: options.precision,
        elimination,
        counts,
        roots,
        adjudications,
        solutions,
        special,
        cross_check,
    })
}

/// Geometry, masses and residual enclosures at a refined `t` interval.
#[derive(Debug, Clone, PartialEq)]
pub struct SolutionValues {
    pub geometry: PentagonGeometry,
    pub masses: MassSolution,
    pub residuals: [RationalInterval; 10],
    pub f_values: [RationalInterval; 5],
}

/// Evaluates a solution cell of `digits` decimal digits, with square roots
/// enclosed to `10^-(digits+6)`.
pub fn solution_values(
    t: &RationalInterval,
    branch: Branch,
    digits: u32,
) -> Result<SolutionValues, ClassifyError> {
    let y5 = y5_of_t(t)?;
    let sqrt_width = pow10(-(digits as i32 + 6));
    let geometry = geometry_from_y5_within(&y5, branch, &sqrt_width)?;
    let masses = solve_masses(&geometry)?;
    let residuals = cc_residuals(&geometry, &masses)?;
    let f_values = f_system(
        &geometry.vars(),
        &masses.reduced_lambda,
        &masses.m1,
        &masses.m3,
    )
    .map_err(crate::model::ModelError::from)?;
    Ok(SolutionValues {
        geometry,
        masses,
        residuals,
        f_values,
    })
}

fn refine_solution(
    a: &Adjudication,
    iso: &Isolators,
    precision: &Precision,
) -> Result<Solution, ClassifyError> {
    let c = &a.candidate;
    let digits = precision.solution_digits.max(a.digits);
    let mut root = c.root.clone();
    root.interval = a.cell.clone();
    let t = iso.get(c.factor).refine_decimal(&root, digits).interval;
    let SolutionValues {
        geometry,
        masses,
        residuals,
        f_values,
    } = solution_values(&t, c.branch, digits)?;
    Ok(Solution {
        label: c.label,
        factor: c.factor,
        branch: c.branch,
        digits,
        t,
        geometry,
        masses,
        residuals,
        f_values,
    })
}

/// `u*` refined to width `10^-30`, far below any decimal cell of the
/// `t` roots, then `t* = (u* - sqrt(u*^2 - 4)) / 2`.
pub fn special_root(r60: &UniPoly) -> Result<SpecialRoot, ClassifyError> {
    let iso = RootIsolator::new("R60", r60)?;
    let r60_real_roots = iso.count(&OpenRange::all());
    let bracket = OpenRange::between(
        Rational::new(205.into(), 100.into()),
        Rational::new(210.into(), 100.into()),
    );
    let found = iso.isolate(&bracket);
    if found.len() != 1 {
        return Err(ClassifyError::CrossCheckMismatch(format!(
            "R60 has {} roots in [2.05, 2.10]",
            found.len()
        )));
    }
    let u_star = iso.refine(&found[0], &pow10(-30)).interval;
    let t_star = t_star_enclosure(&u_star)?;
    Ok(SpecialRoot {
        u_star,
        t_star,
        r60_real_roots,
    })
}

/// The smaller root of `t^2 - u t + 1` over `u` in the enclosure (`u > 2`),
/// with square roots enclosed to `10^-40`.
pub fn t_star_enclosure(u: &RationalInterval) -> Result<RationalInterval, ClassifyError> {
    let w = pow10(-40);
    let four = Rational::from_integer(BigInt::from(4));
    let half = Rational::new(BigInt::one(), BigInt::from(2));
    let t_of = |u: &Rational| -> Result<RationalInterval, ClassifyError> {
        let disc = sqrt_enclosure(&RationalInterval::point(u * u - &four), &w)
            .map_err(crate::model::ModelError::from)?;
        Ok(RationalInterval::spanning(
            (u - disc.hi()) * &half,
            (u - disc.lo()) * &half,
        ))
    };
    // Decreasing in u.
    let lo = t_of(u.hi())?;
    let hi = t_of(u.lo())?;
    Ok(RationalInterval::spanning(lo.lo().clone(), hi.hi().clone()))
}
