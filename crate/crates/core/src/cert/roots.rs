//! Root tables for the polynomials of the pipeline.

use std::path::Path;

use super::cache::eliminate_cached;
use super::CertError;
use crate::classify::{q_factors, s_range, search_window, wide_window, Factor};
use crate::model::model_polynomials;
use crate::numeric::{format_rational, parse_rational, render_decimal};
use crate::upoly::{reciprocal_expand, OpenRange, RootIsolator, UniPoly, Var};
use crate::Rational;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum RootTarget {
    /// `P(t) = Res_s(H1, H2)`, through its peeled factors.
    P,
    P120,
    P132,
    R60,
    /// `Q(s) = Res_t(H1, H2)`, through its squarefree factors.
    Q,
}

impl RootTarget {
    pub fn parse(s: &str) -> Result<Self, CertError> {
        match s {
            "P" => Ok(RootTarget::P),
            "p120" => Ok(RootTarget::P120),
            "p132" => Ok(RootTarget::P132),
            "R60" => Ok(RootTarget::R60),
            "Q" => Ok(RootTarget::Q),
            _ => Err(CertError::UnknownTarget(s.to_string())),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum RootRange {
    All,
    Between(Rational, Rational),
    /// `(sqrt3/3, (6+sqrt3)/11)`.
    S,
}

impl RootRange {
    /// `all`, `window` for `(3/25, 1)`, `tprime` for `(3/25, 100)`, `S`, or
    /// `lo,hi` with rational endpoints.
    pub fn parse(s: &str) -> Result<Self, CertError> {
        let finite = |r: OpenRange| match (r.lo, r.hi) {
            (crate::upoly::Bound::Finite(a), crate::upoly::Bound::Finite(b)) => {
                RootRange::Between(a, b)
            }
            _ => RootRange::All,
        };
        match s {
            "all" => Ok(RootRange::All),
            "window" => Ok(finite(search_window())),
            "tprime" | "T'" => Ok(finite(wide_window())),
            "S" => Ok(RootRange::S),
            _ => {
                let bad = || CertError::UnknownRange(s.to_string());
                let (a, b) = s.split_once(',').ok_or_else(bad)?;
                let (a, b) = (
                    parse_rational(a).map_err(|_| bad())?,
                    parse_rational(b).map_err(|_| bad())?,
                );
                if a >= b {
                    return Err(bad());
                }
                Ok(RootRange::Between(a, b))
            }
        }
    }

    fn resolve(&self, iso: &RootIsolator) -> Result<OpenRange, CertError> {
        Ok(match self {
            RootRange::All => OpenRange::all(),
            RootRange::Between(a, b) => OpenRange::between(a.clone(), b.clone()),
            RootRange::S => s_range(iso)?,
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RootRow {
    pub index: usize,
    pub factor: String,
    pub lo: Rational,
    pub hi: Rational,
    pub decimal: String,
    pub digits: u32,
}

#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct RootsTable {
    pub rows: Vec<RootRow>,
}

impl RootsTable {
    pub const HEADER: &'static str = "index,factor,decimal,digits,lo,hi";

    pub fn to_csv(&self) -> String {
        let mut out = String::from(Self::HEADER);
        out.push('\n');
        for r in &self.rows {
            out.push_str(&format!(
                "{},{},{},{},{},{}\n",
                r.index,
                r.factor,
                r.decimal,
                r.digits,
                format_rational(&r.lo),
                format_rational(&r.hi)
            ));
        }
        out
    }
}

/// Isolating intervals refined to width `10^-RENDER_CELL`, rendered to at
/// most `RENDER_DIGITS` guaranteed digits.
const RENDER_CELL: u32 = 13;
const RENDER_DIGITS: u32 = 12;

fn polynomials(
    target: RootTarget,
    cache_dir: Option<&Path>,
) -> Result<Vec<(String, UniPoly)>, CertError> {
    let model = model_polynomials()?;
    Ok(match target {
        RootTarget::R60 => vec![("R60".to_string(), model.printed_r60.clone())],
        RootTarget::Q => {
            let q = q_factors(model)?;
            q.named()
                .iter()
                .map(|(n, f, _)| (n.to_string(), (*f).clone()))
                .collect()
        }
        RootTarget::P | RootTarget::P120 | RootTarget::P132 => {
            let factors: Vec<Factor> = match target {
                RootTarget::P120 => vec![Factor::P120],
                RootTarget::P132 => vec![Factor::P132],
                _ => Factor::ALL.to_vec(),
            };
            // p120 needs no elimination.
            if factors == [Factor::P120] {
                return Ok(vec![(
                    "p120".into(),
                    reciprocal_expand(&model.printed_r60, Var::T),
                )]);
            }
            let e = eliminate_cached(model, cache_dir)?;
            factors
                .iter()
                .map(|&f| (f.name().to_string(), e.factors.get(f).clone()))
                .collect()
        }
    })
}

/// Real roots of `target` in `range`, sorted increasingly. `P` lists the
/// roots of its factors (`(1+t^2)^6` has none).
pub fn roots_table(
    target: RootTarget,
    range: &RootRange,
    cache_dir: Option<&Path>,
) -> Result<RootsTable, CertError> {
    let mut rows = Vec::new();
    for (name, poly) in polynomials(target, cache_dir)? {
        let iso = RootIsolator::new(name.clone(), &poly)?;
        let r = range.resolve(&iso)?;
        for root in iso.isolate(&r) {
            let fine = iso.refine_decimal(&root, RENDER_CELL).interval;
            let d = render_decimal(&fine, RENDER_DIGITS);
            rows.push(RootRow {
                index: 0,
                factor: name.clone(),
                lo: fine.lo().clone(),
                hi: fine.hi().clone(),
                decimal: d.as_ref().map(|d| d.text.clone()).unwrap_or_default(),
                digits: d.map(|d| d.digits).unwrap_or(0),
            });
        }
    }
    rows.sort_by(|a, b| a.lo.cmp(&b.lo));
    for (i, r) in rows.iter_mut().enumerate() {
        r.index = i + 1;
    }
    Ok(RootsTable { rows })
}
