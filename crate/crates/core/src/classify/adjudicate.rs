//! Screening and certification of a single `(root, branch)` candidate on a
//! geometric schedule of decimal cells.

use std::cmp::Ordering;

use num_bigint::BigInt;
use num_traits::{One, Signed};

use super::candidates::{Candidate, Isolators};
use crate::model::mechanics::{h1_eval, solve_masses, MassSolution};
use crate::model::{
    branch_domain_status, enclose_geometry, geometry::default_sqrt_width, y5_of_t, Branch,
    DomainStatus, ModelError, PentagonGeometry, Shape,
};
use crate::{Rational, RationalInterval};

/// Decimal refinement schedule: cells of width `10^-k` for
/// `k = start_digits..=max_digits`; certified solutions are finally refined
/// to `solution_digits`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Precision {
    pub start_digits: u32,
    pub max_digits: u32,
    pub solution_digits: u32,
}

impl Default for Precision {
    fn default() -> Self {
        Precision {
            start_digits: 4,
            max_digits: 30,
            solution_digits: 16,
        }
    }
}

impl Precision {
    /// Schedule ending at cells of width `10^-max_digits`.
    pub fn up_to(max_digits: u32) -> Self {
        let d = Precision::default();
        Precision {
            start_digits: d.start_digits.min(max_digits),
            max_digits,
            solution_digits: d.solution_digits.max(max_digits),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum GeometryReason {
    NegativeX3,
    OutOfBranchDomain,
}

impl GeometryReason {
    pub fn name(self) -> &'static str {
        match self {
            GeometryReason::NegativeX3 => "negative-x3",
            GeometryReason::OutOfBranchDomain => "out-of-branch-domain",
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum MassIndex {
    M1,
    M3,
    M5,
}

impl MassIndex {
    pub fn name(self) -> &'static str {
        match self {
            MassIndex::M1 => "m1",
            MassIndex::M3 => "m3",
            MassIndex::M5 => "m5",
        }
    }

    pub fn of(self, m: &MassSolution) -> &RationalInterval {
        match self {
            MassIndex::M1 => &m.m1,
            MassIndex::M3 => &m.m3,
            MassIndex::M5 => &m.m5,
        }
    }
}

/// Exact-sign evaluation of `h1` at a rational `t` on one branch.
#[derive(Debug, Clone, PartialEq)]
pub struct SignWitness {
    pub t: Rational,
    pub h1: RationalInterval,
    /// Extra width allowed per square root when evaluating.
    pub sqrt_width: Rational,
}

impl SignWitness {
    pub fn sign(&self) -> Ordering {
        self.h1.sign().expect("witness enclosure excludes zero")
    }
}

#[derive(Debug, Clone, PartialEq)]
pub enum Verdict {
    DiscardedH1 {
        h1: RationalInterval,
    },
    DiscardedGeometry {
        reason: GeometryReason,
        x3: RationalInterval,
    },
    DiscardedMass {
        which: MassIndex,
        mass: RationalInterval,
    },
    Certified {
        left: SignWitness,
        right: SignWitness,
        masses: MassSolution,
    },
    Indeterminate,
}

impl Verdict {
    pub fn name(&self) -> &'static str {
        match self {
            Verdict::DiscardedH1 { .. } => "discarded-h1",
            Verdict::DiscardedGeometry { .. } => "discarded-geometry",
            Verdict::DiscardedMass { .. } => "discarded-mass",
            Verdict::Certified { .. } => "certified",
            Verdict::Indeterminate => "indeterminate",
        }
    }
}

/// Terminal state of a candidate together with the cell it was decided on.
#[derive(Debug, Clone, PartialEq)]
pub struct Adjudication {
    pub candidate: Candidate,
    /// Decimal digits of the deciding cell (the last tried one when
    /// indeterminate).
    pub digits: u32,
    pub cell: RationalInterval,
    pub verdict: Verdict,
}

impl Adjudication {
    /// Survived the `h1` enclosure screen.
    pub fn passes_screen(&self) -> bool {
        !matches!(self.verdict, Verdict::DiscardedH1 { .. })
    }
}

/// The geometry enclosure used for screening a `t` cell; shared with
/// certificate verification so both sides compute identical enclosures.
pub fn cell_geometry(
    cell: &RationalInterval,
    branch: Branch,
) -> Result<PentagonGeometry, ModelError> {
    let y5 = y5_of_t(cell)?;
    enclose_geometry(&y5, branch, &default_sqrt_width(&y5))
}

/// Square-root widths tried when evaluating `h1` at a point: `2^-64`,
/// `2^-128`, ... `2^-1024`.
pub fn witness_widths() -> impl Iterator<Item = Rational> {
    (1..=16u32).map(|k| Rational::new(BigInt::one(), BigInt::one() << (64 * k)))
}

/// `h1` at a single geometry point with the given square-root width.
pub fn h1_at_point(
    t: &Rational,
    branch: Branch,
    sqrt_width: &Rational,
) -> Result<RationalInterval, ModelError> {
    let y5 = y5_of_t(&RationalInterval::point(t.clone()))?;
    Ok(h1_eval(&enclose_geometry(&y5, branch, sqrt_width)?))
}

/// Sign of `h1` at rational `t`, tightening square roots until decided.
pub fn sign_witness(t: &Rational, branch: Branch) -> Option<SignWitness> {
    for w in witness_widths() {
        let h1 = h1_at_point(t, branch, &w).ok()?;
        if h1.sign().is_some() {
            return Some(SignWitness {
                t: t.clone(),
                h1,
                sqrt_width: w,
            });
        }
    }
    None
}

enum Step {
    Decided(Verdict),
    Refine,
}

fn first_negative(m: &MassSolution) -> Option<MassIndex> {
    [MassIndex::M1, MassIndex::M3, MassIndex::M5]
        .into_iter()
        .find(|i| i.of(m).is_negative())
}

fn decide(cell: &RationalInterval, branch: Branch) -> Step {
    let Ok(geom) = cell_geometry(cell, branch) else {
        return Step::Refine;
    };
    let h1 = h1_eval(&geom);
    if !h1.contains_zero() {
        return Step::Decided(Verdict::DiscardedH1 { h1 });
    }
    if !geom.x3.hi().is_positive() {
        return Step::Decided(Verdict::DiscardedGeometry {
            reason: GeometryReason::NegativeX3,
            x3: geom.x3,
        });
    }
    if cell.is_point() {
        return Step::Refine;
    }
    let (Some(left), Some(right)) = (
        sign_witness(cell.lo(), branch),
        sign_witness(cell.hi(), branch),
    ) else {
        return Step::Refine;
    };
    if left.sign() == right.sign() {
        return Step::Refine;
    }
    let Ok(masses) = solve_masses(&geom) else {
        return Step::Refine;
    };
    if let Some(which) = first_negative(&masses) {
        let mass = which.of(&masses).clone();
        return Step::Decided(Verdict::DiscardedMass { which, mass });
    }
    if !masses.is_admissible() {
        return Step::Refine;
    }
    match branch_domain_status(&geom.y5, branch) {
        DomainStatus::Outside => Step::Decided(Verdict::DiscardedGeometry {
            reason: GeometryReason::OutOfBranchDomain,
            x3: geom.x3,
        }),
        DomainStatus::Inside if geom.shape != Shape::Degenerate => {
            Step::Decided(Verdict::Certified {
                left,
                right,
                masses,
            })
        }
        _ => Step::Refine,
    }
}

/// Runs the schedule: `h1` screen, `x3 > 0`, sign change of `h1` at the cell
/// ends, mass signs, branch domain.
pub fn adjudicate(c: &Candidate, iso: &Isolators, precision: &Precision) -> Adjudication {
    let isolator = iso.get(c.factor);
    let mut root = c.root.clone();
    let mut last = (precision.start_digits, root.interval.clone());
    for k in precision.start_digits..=precision.max_digits {
        root = isolator.refine_decimal(&root, k);
        last = (k, root.interval.clone());
        if let Step::Decided(verdict) = decide(&root.interval, c.branch) {
            return Adjudication {
                candidate: c.clone(),
                digits: k,
                cell: root.interval,
                verdict,
            };
        }
    }
    Adjudication {
        candidate: c.clone(),
        digits: last.0,
        cell: last.1,
        verdict: Verdict::Indeterminate,
    }
}
