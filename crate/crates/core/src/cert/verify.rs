//! Re-verification of a certificate from the embedded data alone.
//!
//! Every recorded enclosure is recomputed with the same routines the
//! pipeline uses and must lie inside the stored (outward rounded) interval;
//! every decision is re-derived from the recomputed values. The elimination
//! is not re-run, so `p132` root intervals and the `Q` report are taken as
//! data; the discards and certifications that rest on them are still checked
//! directly through `h1`.

use std::cmp::Ordering;
use std::collections::BTreeSet;

use num_traits::Signed;

use super::document::{
    parse_branch, parse_factor, parse_mass_index, CandidateRecord, CertificateDocument, DataRecord,
    IntervalRecord, MassRecord, SolutionRecord, SCHEMA_VERSION,
};
use crate::classify::adjudicate::h1_at_point;
use crate::classify::{
    cell_geometry, sign_witness, solution_values, t_star_enclosure, Factor, GeometryReason,
};
use crate::model::mechanics::MassSolution;
use crate::model::polynomials::verify_embedded_data;
use crate::model::{
    branch_domain_status, h1_eval, model_polynomials, solve_masses, Branch, DomainStatus, Shape,
};
use crate::numeric::parse_rational;
use crate::upoly::{reciprocal_expand, OpenRange, RootIsolator, UniPoly, Var};
use crate::{Rational, RationalInterval};

#[derive(Debug, Clone, PartialEq, Eq, serde::Serialize)]
pub struct Failure {
    pub record: String,
    pub message: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct VerifyReport {
    pub checked: usize,
    pub failures: Vec<Failure>,
}

impl VerifyReport {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }

    fn record(&mut self, name: impl Into<String>, outcome: Result<(), String>) {
        self.checked += 1;
        if let Err(message) = outcome {
            self.failures.push(Failure {
                record: name.into(),
                message,
            });
        }
    }
}

type Check = Result<(), String>;

fn parse_iv(r: &IntervalRecord, what: &str) -> Result<RationalInterval, String> {
    r.parse().map_err(|e| format!("{what}: {e}"))
}

fn parse_q(s: &str, what: &str) -> Result<Rational, String> {
    parse_rational(s).map_err(|e| format!("{what}: {e}"))
}

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Check {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

/// The stored enclosure must contain the recomputed one.
fn encloses(recorded: &IntervalRecord, computed: &RationalInterval, what: &str) -> Check {
    let r = parse_iv(recorded, what)?;
    ensure(r.contains_interval(computed), || {
        format!("{what}: recorded enclosure does not contain the recomputed one")
    })
}

fn check_masses(recorded: &MassRecord, computed: &MassSolution, what: &str) -> Check {
    let values = [&computed.lambda, &computed.m1, &computed.m3, &computed.m5];
    for ((name, rec), value) in recorded.entries().into_iter().zip(values) {
        encloses(rec, value, &format!("{what} {name}"))?;
    }
    Ok(())
}

fn check_data(d: &DataRecord) -> Check {
    verify_embedded_data().map_err(|e| e.to_string())?;
    let current = DataRecord::current();
    ensure(*d == current, || {
        "embedded data digests differ from this build".to_string()
    })
}

fn check_structure(doc: &CertificateDocument) -> Check {
    let labels: Vec<usize> = doc.roots.iter().map(|r| r.label).collect();
    ensure(labels == (1..=doc.roots.len()).collect::<Vec<_>>(), || {
        "root labels are not 1..n".into()
    })?;
    let mut seen = BTreeSet::new();
    for c in &doc.candidates {
        ensure(labels.contains(&c.label), || {
            format!("candidate {} has no root record", c.name())
        })?;
        ensure(parse_branch(&c.branch).is_some(), || {
            format!("candidate {} has a bad branch", c.name())
        })?;
        ensure(seen.insert((c.label, c.branch.clone())), || {
            format!("candidate {} listed twice", c.name())
        })?;
    }
    ensure(seen.len() == 2 * labels.len(), || {
        format!(
            "{} candidates for {} roots; every root needs both branches",
            seen.len(),
            labels.len()
        )
    })?;
    let certified: BTreeSet<_> = doc
        .candidates
        .iter()
        .filter(|c| c.verdict == "certified")
        .map(|c| (c.label, c.branch.clone()))
        .collect();
    let solved: BTreeSet<_> = doc
        .solutions
        .iter()
        .map(|s| (s.label, s.branch.clone()))
        .collect();
    ensure(certified == solved, || {
        "certified candidates and reported solutions differ".into()
    })
}

/// Refinement snaps cells to a decimal grid, so a cell need only meet the
/// isolating interval; where the factor is known without elimination it must
/// also change sign across the cell.
fn check_candidate(
    doc: &CertificateDocument,
    c: &CandidateRecord,
    polys: &[(Factor, UniPoly)],
) -> Check {
    let branch = parse_branch(&c.branch).ok_or("bad branch")?;
    let cell = parse_iv(&c.cell, "cell")?;
    let root = doc
        .roots
        .iter()
        .find(|r| r.label == c.label)
        .ok_or("no root record")?;
    ensure(root.factor == c.factor, || {
        "factor differs from the root record".into()
    })?;
    ensure(
        parse_iv(&root.interval, "root interval")?
            .intersect(&cell)
            .is_some(),
        || "cell misses the isolating interval".into(),
    )?;
    if let Some(p) = factor_poly(&c.factor, polys) {
        sign_change(p, &cell, "factor")?;
    }
    let geom = cell_geometry(&cell, branch).map_err(|e| format!("geometry: {e}"))?;
    match c.verdict.as_str() {
        "discarded-h1" => {
            let rec = c.h1.as_ref().ok_or("missing h1 bound")?;
            let bound = parse_iv(rec, "h1")?;
            ensure(!bound.contains_zero(), || {
                "recorded h1 bound contains 0".into()
            })?;
            encloses(rec, &h1_eval(&geom), "h1")
        }
        "discarded-geometry" => {
            let reason = c.reason.as_deref().ok_or("missing reason")?;
            if reason == GeometryReason::NegativeX3.name() {
                let rec = c.x3.as_ref().ok_or("missing x3 bound")?;
                ensure(!parse_iv(rec, "x3")?.hi().is_positive(), || {
                    "recorded x3 is not negative".into()
                })?;
                encloses(rec, &geom.x3, "x3")
            } else if reason == GeometryReason::OutOfBranchDomain.name() {
                ensure(
                    branch_domain_status(&geom.y5, branch) == DomainStatus::Outside,
                    || "y5 is not outside the branch domain".into(),
                )
            } else {
                Err(format!("unknown geometry reason {reason:?}"))
            }
        }
        "discarded-mass" => {
            let which = c
                .negative_mass
                .as_deref()
                .and_then(parse_mass_index)
                .ok_or("missing mass index")?;
            let rec = c.mass_bound.as_ref().ok_or("missing mass bound")?;
            ensure(parse_iv(rec, "mass")?.is_negative(), || {
                "recorded mass bound is not negative".into()
            })?;
            let masses = solve_masses(&geom).map_err(|e| format!("masses: {e}"))?;
            encloses(
                rec,
                which.of(&masses),
                &format!("mass recomputation {}", which.name()),
            )
        }
        "certified" => check_certified(c, &cell, branch, &geom),
        "indeterminate" => Ok(()),
        other => Err(format!("unknown verdict {other:?}")),
    }
}

fn check_certified(
    c: &CandidateRecord,
    cell: &RationalInterval,
    branch: Branch,
    geom: &crate::model::PentagonGeometry,
) -> Check {
    let [a, b] = c.witnesses.as_slice() else {
        return Err("a certified record needs two witnesses".into());
    };
    let mut signs = Vec::new();
    for w in [a, b] {
        let t = parse_q(&w.t, "witness t")?;
        ensure(cell.contains(&t), || {
            "witness point outside the cell".into()
        })?;
        let width = parse_q(&w.sqrt_width, "witness width")?;
        ensure(width.is_positive(), || {
            "witness width must be positive".into()
        })?;
        let h1 = h1_at_point(&t, branch, &width).map_err(|e| format!("witness: {e}"))?;
        encloses(&w.h1, &h1, "witness h1")?;
        let sign = parse_iv(&w.h1, "witness h1")?
            .sign()
            .ok_or("witness h1 bound contains 0")?;
        signs.push((t, sign));
    }
    ensure(signs[0].0 < signs[1].0, || {
        "witness points out of order".into()
    })?;
    ensure(signs[0].1 != signs[1].1, || {
        "witness signs do not differ".into()
    })?;
    let rec = c.masses.as_ref().ok_or("missing masses")?;
    let masses = solve_masses(geom).map_err(|e| format!("masses: {e}"))?;
    check_masses(rec, &masses, "mass recomputation")?;
    for (name, m) in rec.entries().into_iter().skip(1) {
        ensure(parse_iv(m, name)?.is_positive(), || {
            format!("{name} is not positive")
        })?;
    }
    ensure(
        branch_domain_status(&geom.y5, branch) == DomainStatus::Inside,
        || "y5 not inside the branch domain".into(),
    )?;
    ensure(geom.shape != Shape::Degenerate, || {
        "cell contains a degenerate pentagon".into()
    })
}

fn check_solution(doc: &CertificateDocument, s: &SolutionRecord) -> Check {
    let branch = parse_branch(&s.branch).ok_or("bad branch")?;
    let cand = doc
        .candidates
        .iter()
        .find(|c| c.label == s.label && c.branch == s.branch)
        .ok_or("no candidate")?;
    let t = parse_iv(&s.t, "t")?;
    ensure(parse_iv(&cand.cell, "cell")?.contains_interval(&t), || {
        "t is not inside the certified cell".into()
    })?;
    let (Some(lo), Some(hi)) = (sign_witness(t.lo(), branch), sign_witness(t.hi(), branch)) else {
        return Err("h1 sign undecided at an end of t".into());
    };
    ensure(lo.sign() != hi.sign(), || {
        "h1 does not change sign across t".into()
    })?;
    let v = solution_values(&t, branch, s.digits).map_err(|e| format!("recomputation: {e}"))?;
    let g = &v.geometry;
    encloses(&s.y5, &g.y5, "geometry recomputation y5")?;
    encloses(&s.x3, &g.x3, "geometry recomputation x3")?;
    encloses(&s.y3, &g.y3, "geometry recomputation y3")?;
    ensure(s.shape == super::document::shape_name(g.shape), || {
        "shape differs".into()
    })?;
    check_masses(&s.masses, &v.masses, "mass recomputation")?;
    ensure(s.residuals.len() == 10 && s.f_values.len() == 5, || {
        "expected 10 residuals and 5 f-values".into()
    })?;
    for (i, (rec, e)) in s.residuals.iter().zip(&v.residuals).enumerate() {
        encloses(rec, e, &format!("e{}", i + 1))?;
        ensure(parse_iv(rec, "e")?.contains_zero(), || {
            format!("e{} excludes 0", i + 1)
        })?;
    }
    for (i, (rec, f)) in s.f_values.iter().zip(&v.f_values).enumerate() {
        encloses(rec, f, &format!("f{}", i + 1))?;
        ensure(parse_iv(rec, "f")?.contains_zero(), || {
            format!("f{} excludes 0", i + 1)
        })?;
    }
    Ok(())
}

fn check_special(doc: &CertificateDocument, r60: &UniPoly) -> Check {
    let sp = &doc.special;
    let iso = RootIsolator::new("R60", r60).map_err(|e| e.to_string())?;
    ensure(iso.count(&OpenRange::all()) == sp.r60_real_roots, || {
        "R60 real-root count differs".into()
    })?;
    let u = parse_iv(&sp.u_star, "u*")?;
    let bracket = RationalInterval::spanning(
        Rational::new(205.into(), 100.into()),
        Rational::new(210.into(), 100.into()),
    );
    ensure(bracket.contains_interval(&u), || {
        "u* outside [205/100, 210/100]".into()
    })?;
    let sl = r60.sign_at(u.lo());
    let sh = r60.sign_at(u.hi());
    ensure(
        sl != Ordering::Equal && sh != Ordering::Equal && sl != sh,
        || "R60 does not change sign across u*".into(),
    )?;
    let t = t_star_enclosure(&u).map_err(|e| e.to_string())?;
    encloses(&sp.t_star, &t, "t*")?;
    if let Some(label) = sp.t_star_root {
        let root = doc
            .roots
            .iter()
            .find(|r| r.label == label)
            .ok_or("t* root label unknown")?;
        ensure(
            parse_iv(&root.interval, "root")?.contains_interval(&t),
            || "t* outside its root interval".into(),
        )?;
    }
    Ok(())
}

fn factor_poly<'a>(name: &str, polys: &'a [(Factor, UniPoly)]) -> Option<&'a UniPoly> {
    let f = parse_factor(name)?;
    polys.iter().find(|(g, _)| *g == f).map(|(_, p)| p)
}

fn sign_change(p: &UniPoly, iv: &RationalInterval, what: &str) -> Check {
    let (a, b) = (p.sign_at(iv.lo()), p.sign_at(iv.hi()));
    ensure(
        a != Ordering::Equal && b != Ordering::Equal && a != b,
        || format!("{what}: no sign change across the interval"),
    )
}

pub fn verify(doc: &CertificateDocument) -> VerifyReport {
    let mut report = VerifyReport::default();
    report.record(
        "schema",
        ensure(doc.schema_version == SCHEMA_VERSION, || {
            "unsupported schema version".into()
        }),
    );
    report.record("data", check_data(&doc.data));
    report.record("structure", check_structure(doc));
    let model = match model_polynomials() {
        Ok(m) => m,
        Err(e) => {
            report.record("model", Err(e.to_string()));
            return report;
        }
    };
    let r60 = &model.printed_r60;
    // Factors known without elimination; p132 is only a quotient of P.
    let polys = [
        (Factor::P4, model.p4.clone()),
        (Factor::Q4, model.q4.clone()),
        (Factor::P120, reciprocal_expand(r60, Var::T)),
    ];
    for r in &doc.roots {
        if let Some(p) = factor_poly(&r.factor, &polys) {
            let outcome =
                parse_iv(&r.interval, "interval").and_then(|iv| sign_change(p, &iv, "factor"));
            report.record(format!("root t{}", r.label), outcome);
        }
    }
    for c in &doc.candidates {
        report.record(
            format!("candidate {}", c.name()),
            check_candidate(doc, c, &polys),
        );
    }
    for s in &doc.solutions {
        report.record(format!("solution {}", s.name()), check_solution(doc, s));
    }
    report.record("special", check_special(doc, r60));
    report
}
