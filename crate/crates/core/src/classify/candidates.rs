//! The 18 roots of the peeled factors in the search window and the 36
//! `(root, branch)` candidates built on them.

use num_bigint::BigInt;
use rayon::prelude::*;

use super::elimination::{Factor, FactorSet};
use super::ClassifyError;
use crate::model::Branch;
use crate::upoly::{IsolatedRoot, OpenRange, RootIsolator};
use crate::Rational;

/// The search window `(3/25, 1)`. Every factor is reciprocal, so the roots
/// in `(1, 100)` are the inverses of those below 1 and give the same `y5` up
/// to sign; the window keeps the negative-`y5` mirror images out.
pub fn search_window() -> OpenRange {
    OpenRange::between(
        Rational::new(BigInt::from(3), BigInt::from(25)),
        Rational::from_integer(BigInt::from(1)),
    )
}

/// The wider window `(3/25, 100)`.
pub fn wide_window() -> OpenRange {
    OpenRange::between(
        Rational::new(BigInt::from(3), BigInt::from(25)),
        Rational::from_integer(BigInt::from(100)),
    )
}

/// One isolator per peeled factor.
#[derive(Debug, Clone)]
pub struct Isolators {
    isolators: Vec<(Factor, RootIsolator)>,
}

impl Isolators {
    pub fn new(factors: &FactorSet) -> Result<Self, ClassifyError> {
        let isolators = Factor::ALL
            .par_iter()
            .map(|&f| Ok((f, RootIsolator::new(f.name(), factors.get(f))?)))
            .collect::<Result<Vec<_>, ClassifyError>>()?;
        Ok(Isolators { isolators })
    }

    pub fn get(&self, f: Factor) -> &RootIsolator {
        &self
            .isolators
            .iter()
            .find(|(g, _)| *g == f)
            .expect("all factors present")
            .1
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RootEntry {
    /// `1..=18`: `p4` root first, then `q4`, then `p120` and `p132` roots in
    /// increasing order.
    pub label: usize,
    pub factor: Factor,
    pub root: IsolatedRoot,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FactorCounts {
    pub factor: Factor,
    pub degree: usize,
    pub real_roots: usize,
    pub in_window: usize,
    pub in_wide_window: usize,
}

pub fn factor_counts(iso: &Isolators) -> Vec<FactorCounts> {
    Factor::ALL
        .iter()
        .map(|&f| {
            let r = iso.get(f);
            FactorCounts {
                factor: f,
                degree: r.poly().degree().unwrap_or(0),
                real_roots: r.count(&OpenRange::all()),
                in_window: r.count(&search_window()),
                in_wide_window: r.count(&wide_window()),
            }
        })
        .collect()
}

/// Isolating intervals of the 18 roots in the search window.
pub fn root_table(iso: &Isolators) -> Result<Vec<RootEntry>, ClassifyError> {
    let mut out = Vec::new();
    for f in Factor::ALL {
        for root in iso.get(f).isolate(&search_window()) {
            out.push(RootEntry {
                label: out.len() + 1,
                factor: f,
                root,
            });
        }
    }
    if out.len() != 18 {
        return Err(ClassifyError::WrongRootCount(out.len()));
    }
    Ok(out)
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Candidate {
    pub label: usize,
    pub factor: Factor,
    pub branch: Branch,
    pub root: IsolatedRoot,
}

/// Each root on both branches, ordered by label with `+` first.
pub fn enumerate_candidates(roots: &[RootEntry]) -> Vec<Candidate> {
    roots
        .iter()
        .flat_map(|r| {
            [Branch::Plus, Branch::Minus].map(|branch| Candidate {
                label: r.label,
                factor: r.factor,
                branch,
                root: r.root.clone(),
            })
        })
        .collect()
}
