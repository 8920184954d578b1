//! The certificate document and its TOML form.
//!
//! Exact rationals are written as `"num/den"` strings. Enclosures computed
//! from square roots are rounded outward to the dyadic grid `2^-RECORD_BITS`
//! before they are stored; cell endpoints and witness points are stored
//! exactly. Every decimal rendering is derived from the stored interval and
//! carries the number of fractional digits that interval guarantees.

use std::path::Path;

use num_bigint::BigInt;
use num_traits::One;
use serde::{Deserialize, Serialize};

use super::{io_error, CertError};
use crate::classify::{
    search_window, Adjudication, Classification, ExtractionRoute, Factor, MassIndex, QReport,
    Solution, Verdict,
};
use crate::model::mechanics::MassSolution;
use crate::model::polynomials::{embedded_data_digest, EMBEDDED_DATA};
use crate::model::{Branch, Shape};
use crate::numeric::{format_rational, parse_rational, render_decimal};
use crate::upoly::Bound;
use crate::{Rational, RationalInterval};

pub const SCHEMA_VERSION: u32 = 1;

/// Binary digits kept by outward rounding of derived enclosures.
pub const RECORD_BITS: u32 = 256;

const DECIMAL_DIGITS: u32 = 30;

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct IntervalRecord {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub decimal: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub digits: Option<u32>,
    pub lo: String,
    pub hi: String,
}

impl IntervalRecord {
    /// Stores the endpoints as they are.
    pub fn exact(iv: &RationalInterval) -> Self {
        let d = render_decimal(iv, DECIMAL_DIGITS);
        IntervalRecord {
            decimal: d.as_ref().map(|d| d.text.clone()),
            digits: d.map(|d| d.digits),
            lo: format_rational(iv.lo()),
            hi: format_rational(iv.hi()),
        }
    }

    /// Stores the smallest `2^-RECORD_BITS` grid interval containing `iv`.
    pub fn outward(iv: &RationalInterval) -> Self {
        Self::exact(&round_outward(iv, RECORD_BITS))
    }

    pub fn parse(&self) -> Result<RationalInterval, CertError> {
        let lo = parse_rational(&self.lo)?;
        let hi = parse_rational(&self.hi)?;
        Ok(RationalInterval::new(lo, hi)?)
    }
}

pub(crate) fn round_outward(iv: &RationalInterval, bits: u32) -> RationalInterval {
    let scale = Rational::from_integer(BigInt::one() << bits);
    let lo = (iv.lo() * &scale).floor() / &scale;
    let hi = (iv.hi() * &scale).ceil() / &scale;
    RationalInterval::spanning(lo, hi)
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PrecisionRecord {
    pub start_digits: u32,
    pub max_digits: u32,
    pub solution_digits: u32,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct FileDigest {
    pub name: String,
    pub sha256: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct DataRecord {
    pub digest: String,
    pub files: Vec<FileDigest>,
}

impl DataRecord {
    pub fn current() -> Self {
        DataRecord {
            digest: embedded_data_digest(),
            files: EMBEDDED_DATA
                .iter()
                .map(|(name, _, sha)| FileDigest {
                    name: name.to_string(),
                    sha256: sha.to_string(),
                })
                .collect(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PeeledFactor {
    pub name: String,
    pub degree: usize,
    pub power: u32,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PeelDoc {
    pub p_degree: usize,
    pub p_content: String,
    pub cofactor_degree: usize,
    pub reciprocal_gcd_degree: usize,
    pub route: String,
    pub peeled: Vec<PeeledFactor>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CountRecord {
    pub factor: String,
    pub degree: usize,
    pub real_roots: usize,
    pub in_window: usize,
    pub in_wide_window: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct RootRecord {
    pub label: usize,
    pub factor: String,
    pub interval: IntervalRecord,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct WitnessRecord {
    pub t: String,
    pub sqrt_width: String,
    pub h1: IntervalRecord,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct MassRecord {
    pub lambda: IntervalRecord,
    pub m1: IntervalRecord,
    pub m3: IntervalRecord,
    pub m5: IntervalRecord,
}

impl MassRecord {
    fn new(m: &MassSolution) -> Self {
        MassRecord {
            lambda: IntervalRecord::outward(&m.lambda),
            m1: IntervalRecord::outward(&m.m1),
            m3: IntervalRecord::outward(&m.m3),
            m5: IntervalRecord::outward(&m.m5),
        }
    }

    /// `(name, record)` for `lambda, m1, m3, m5`.
    pub fn entries(&self) -> [(&'static str, &IntervalRecord); 4] {
        [
            ("lambda", &self.lambda),
            ("m1", &self.m1),
            ("m3", &self.m3),
            ("m5", &self.m5),
        ]
    }
}

/// One `(root, branch)` candidate and the data its verdict rests on.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CandidateRecord {
    pub label: usize,
    pub factor: String,
    pub branch: String,
    pub verdict: String,
    pub digits: u32,
    pub cell: IntervalRecord,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub h1: Option<IntervalRecord>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub reason: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub x3: Option<IntervalRecord>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub negative_mass: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub mass_bound: Option<IntervalRecord>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub witnesses: Vec<WitnessRecord>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub masses: Option<MassRecord>,
}

impl CandidateRecord {
    pub fn name(&self) -> String {
        format!("t{}{}", self.label, self.branch)
    }

    fn new(a: &Adjudication) -> Self {
        let c = &a.candidate;
        let mut r = CandidateRecord {
            label: c.label,
            factor: c.factor.name().to_string(),
            branch: c.branch.symbol().to_string(),
            verdict: a.verdict.name().to_string(),
            digits: a.digits,
            cell: IntervalRecord::exact(&a.cell),
            h1: None,
            reason: None,
            x3: None,
            negative_mass: None,
            mass_bound: None,
            witnesses: Vec::new(),
            masses: None,
        };
        match &a.verdict {
            Verdict::DiscardedH1 { h1 } => r.h1 = Some(IntervalRecord::outward(h1)),
            Verdict::DiscardedGeometry { reason, x3 } => {
                r.reason = Some(reason.name().to_string());
                r.x3 = Some(IntervalRecord::outward(x3));
            }
            Verdict::DiscardedMass { which, mass } => {
                r.negative_mass = Some(which.name().to_string());
                r.mass_bound = Some(IntervalRecord::outward(mass));
            }
            Verdict::Certified {
                left,
                right,
                masses,
            } => {
                r.witnesses = [left, right]
                    .iter()
                    .map(|w| WitnessRecord {
                        t: format_rational(&w.t),
                        sqrt_width: format_rational(&w.sqrt_width),
                        h1: IntervalRecord::outward(&w.h1),
                    })
                    .collect();
                r.masses = Some(MassRecord::new(masses));
            }
            Verdict::Indeterminate => {}
        }
        r
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SolutionRecord {
    pub label: usize,
    pub factor: String,
    pub branch: String,
    pub shape: String,
    pub digits: u32,
    pub t: IntervalRecord,
    pub y5: IntervalRecord,
    pub x3: IntervalRecord,
    pub y3: IntervalRecord,
    pub masses: MassRecord,
    /// `e1..e10`.
    pub residuals: Vec<IntervalRecord>,
    /// `f1..f5`.
    pub f_values: Vec<IntervalRecord>,
}

impl SolutionRecord {
    pub fn name(&self) -> String {
        format!("t{}{}", self.label, self.branch)
    }

    fn new(s: &Solution) -> Self {
        let g = &s.geometry;
        SolutionRecord {
            label: s.label,
            factor: s.factor.name().to_string(),
            branch: s.branch.symbol().to_string(),
            shape: shape_name(g.shape).to_string(),
            digits: s.digits,
            t: IntervalRecord::exact(&s.t),
            y5: IntervalRecord::exact(&g.y5),
            x3: IntervalRecord::outward(&g.x3),
            y3: IntervalRecord::outward(&g.y3),
            masses: MassRecord::new(&s.masses),
            residuals: s.residuals.iter().map(IntervalRecord::outward).collect(),
            f_values: s.f_values.iter().map(IntervalRecord::outward).collect(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SpecialRecord {
    pub r60_real_roots: usize,
    pub u_star: IntervalRecord,
    pub t_star: IntervalRecord,
    /// Label of the root whose isolating interval contains `t*`.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub t_star_root: Option<usize>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct QFactorRecord {
    pub name: String,
    pub degree: usize,
    pub multiplicity: u32,
    pub real_roots: usize,
    pub in_s: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct QSolutionRecord {
    pub label: usize,
    pub factor: String,
    pub s: IntervalRecord,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct QRecord {
    pub degree: usize,
    pub content: String,
    pub factors: Vec<QFactorRecord>,
    pub solutions: Vec<QSolutionRecord>,
}

impl QRecord {
    fn new(q: &QReport) -> Self {
        QRecord {
            degree: q.degree,
            content: q.content.to_string(),
            factors: q
                .factors
                .iter()
                .map(|f| QFactorRecord {
                    name: f.name.clone(),
                    degree: f.degree,
                    multiplicity: f.multiplicity,
                    real_roots: f.real_roots,
                    in_s: f.in_s,
                })
                .collect(),
            solutions: q
                .solution_roots
                .iter()
                .map(|(label, s, factor)| QSolutionRecord {
                    label: *label,
                    factor: factor.clone(),
                    s: IntervalRecord::outward(s),
                })
                .collect(),
        }
    }
}

/// Wall-clock data; only present when explicitly requested, so that default
/// certificates are reproducible byte for byte.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct RuntimeRecord {
    pub seconds: f64,
    pub threads: usize,
}

impl RuntimeRecord {
    pub fn new(elapsed: std::time::Duration) -> Self {
        RuntimeRecord {
            seconds: elapsed.as_secs_f64(),
            threads: rayon::current_num_threads(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct CertificateDocument {
    pub schema_version: u32,
    pub precision: PrecisionRecord,
    pub data: DataRecord,
    pub window: IntervalRecord,
    pub peel: PeelDoc,
    pub counts: Vec<CountRecord>,
    pub roots: Vec<RootRecord>,
    pub candidates: Vec<CandidateRecord>,
    pub solutions: Vec<SolutionRecord>,
    pub special: SpecialRecord,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub cross_check: Option<QRecord>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub runtime: Option<RuntimeRecord>,
}

pub(crate) fn shape_name(s: Shape) -> &'static str {
    match s {
        Shape::Convex => "convex",
        Shape::Concave => "concave",
        Shape::Degenerate => "degenerate",
    }
}

pub(crate) fn parse_branch(s: &str) -> Option<Branch> {
    match s {
        "+" => Some(Branch::Plus),
        "-" => Some(Branch::Minus),
        _ => None,
    }
}

pub(crate) fn parse_factor(s: &str) -> Option<Factor> {
    Factor::ALL.into_iter().find(|f| f.name() == s)
}

pub(crate) fn parse_mass_index(s: &str) -> Option<MassIndex> {
    [MassIndex::M1, MassIndex::M3, MassIndex::M5]
        .into_iter()
        .find(|m| m.name() == s)
}

fn route_name(r: ExtractionRoute) -> &'static str {
    match r {
        ExtractionRoute::ReciprocalGcd => "reciprocal-gcd",
        ExtractionRoute::EmbeddedR60 => "embedded-r60",
    }
}

fn finite(b: &Bound) -> Rational {
    match b {
        Bound::Finite(q) => q.clone(),
        _ => unreachable!("search window is bounded"),
    }
}

impl CertificateDocument {
    pub fn from_classification(c: &Classification, runtime: Option<RuntimeRecord>) -> Self {
        let peel = &c.elimination.peel;
        let window = search_window();
        let t_star_root = c
            .roots
            .iter()
            .find(|r| r.root.interval.contains_interval(&c.special.t_star))
            .map(|r| r.label);
        CertificateDocument {
            schema_version: SCHEMA_VERSION,
            precision: PrecisionRecord {
                start_digits: c.precision.start_digits,
                max_digits: c.precision.max_digits,
                solution_digits: c.precision.solution_digits,
            },
            data: DataRecord::current(),
            window: IntervalRecord::exact(&RationalInterval::spanning(
                finite(&window.lo),
                finite(&window.hi),
            )),
            peel: PeelDoc {
                p_degree: peel.p_degree,
                p_content: peel.p_content.to_string(),
                cofactor_degree: peel.cofactor_degree,
                reciprocal_gcd_degree: peel.reciprocal_gcd_degree,
                route: route_name(peel.route).to_string(),
                peeled: peel
                    .peeled
                    .iter()
                    .map(|(name, degree, power)| PeeledFactor {
                        name: name.clone(),
                        degree: *degree,
                        power: *power,
                    })
                    .collect(),
            },
            counts: c
                .counts
                .iter()
                .map(|f| CountRecord {
                    factor: f.factor.name().to_string(),
                    degree: f.degree,
                    real_roots: f.real_roots,
                    in_window: f.in_window,
                    in_wide_window: f.in_wide_window,
                })
                .collect(),
            roots: c
                .roots
                .iter()
                .map(|r| RootRecord {
                    label: r.label,
                    factor: r.factor.name().to_string(),
                    interval: IntervalRecord::exact(&r.root.interval),
                })
                .collect(),
            candidates: c.adjudications.iter().map(CandidateRecord::new).collect(),
            solutions: c.solutions.iter().map(SolutionRecord::new).collect(),
            special: SpecialRecord {
                r60_real_roots: c.special.r60_real_roots,
                u_star: IntervalRecord::exact(&c.special.u_star),
                t_star: IntervalRecord::exact(&c.special.t_star),
                t_star_root,
            },
            cross_check: c.cross_check.as_ref().map(QRecord::new),
            runtime,
        }
    }

    pub fn to_toml(&self) -> Result<String, CertError> {
        toml::to_string(self).map_err(|e| CertError::Parse(e.to_string()))
    }

    pub fn from_toml(text: &str) -> Result<Self, CertError> {
        toml::from_str(text).map_err(|e| CertError::Parse(e.to_string()))
    }

    pub fn read(path: &Path) -> Result<Self, CertError> {
        let text = std::fs::read_to_string(path).map_err(|e| io_error(path, e))?;
        Self::from_toml(&text)
    }

    pub fn write(&self, path: &Path) -> Result<(), CertError> {
        std::fs::write(path, self.to_toml()?).map_err(|e| io_error(path, e))
    }

    pub fn solution_by_shape(&self, shape: Shape) -> Option<&SolutionRecord> {
        self.solutions.iter().find(|s| s.shape == shape_name(shape))
    }

    pub fn candidate(&self, label: usize, branch: Branch) -> Option<&CandidateRecord> {
        let b = branch.symbol().to_string();
        self.candidates
            .iter()
            .find(|c| c.label == label && c.branch == b)
    }
}
