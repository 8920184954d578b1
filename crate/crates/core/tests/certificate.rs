//! Certificate serialisation, re-verification, tamper detection, figure and
//! root tables, and the resultant cache.

mod common;

use std::sync::OnceLock;

use common::{classification, dec, near, q};
use eqpent_core::cert::{
    eliminate_cached, figure, resultant_cache_path, roots_table, verify, CertError,
    CertificateDocument, FigureKind, IntervalRecord, RootRange, RootTarget,
};
use eqpent_core::model::{model_polynomials, Branch};
use eqpent_core::numeric::{parse_rational, pow10, render_decimal};
use eqpent_core::RationalInterval;

fn document() -> &'static CertificateDocument {
    static CELL: OnceLock<CertificateDocument> = OnceLock::new();
    CELL.get_or_init(|| CertificateDocument::from_classification(classification(), None))
}

fn text() -> &'static str {
    static CELL: OnceLock<String> = OnceLock::new();
    CELL.get_or_init(|| document().to_toml().unwrap())
}

fn interval(r: &IntervalRecord) -> RationalInterval {
    r.parse().unwrap()
}

#[test]
fn round_trip_is_byte_identical() {
    let parsed = CertificateDocument::from_toml(text()).unwrap();
    assert_eq!(&parsed, document());
    assert_eq!(parsed.to_toml().unwrap(), text());
}

#[test]
fn fresh_certificate_verifies() {
    let report = verify(document());
    assert!(report.passed(), "{:?}", report.failures);
    // schema, data, structure, 9 window roots of p4, q4, p120, 36 candidates,
    // 2 solutions, special root
    assert_eq!(report.checked, 51);
}

#[test]
fn document_contents() {
    let doc = document();
    assert_eq!(doc.roots.len(), 18);
    assert_eq!(doc.candidates.len(), 36);
    assert_eq!(doc.solutions.len(), 2);
    assert!(doc.runtime.is_none());
    assert!(doc.cross_check.is_none());
    let certified: Vec<String> = doc
        .candidates
        .iter()
        .filter(|c| c.verdict == "certified")
        .map(|c| c.name())
        .collect();
    assert_eq!(certified, vec!["t2+", "t7+"]);
    let concave = doc
        .solution_by_shape(eqpent_core::model::Shape::Concave)
        .unwrap();
    assert!(concave
        .y5
        .decimal
        .as_deref()
        .unwrap()
        .starts_with("0.15766049"));
}

#[test]
fn decimal_renderings_are_guaranteed_by_their_intervals() {
    let doc = document();
    let mut records: Vec<&IntervalRecord> = Vec::new();
    for c in &doc.candidates {
        records.push(&c.cell);
        records.extend(c.h1.iter());
        records.extend(c.x3.iter());
        records.extend(c.mass_bound.iter());
        records.extend(c.witnesses.iter().map(|w| &w.h1));
    }
    for s in &doc.solutions {
        records.extend([&s.t, &s.y5, &s.x3, &s.y3]);
        records.extend(s.masses.entries().map(|(_, r)| r));
    }
    records.extend(doc.roots.iter().map(|r| &r.interval));
    assert!(records.len() > 100);
    for r in records {
        let iv = interval(r);
        let (Some(text), Some(digits)) = (&r.decimal, r.digits) else {
            assert!(render_decimal(&iv, 30).is_none());
            continue;
        };
        let printed = parse_rational(text).unwrap();
        let half_ulp = pow10(-(digits as i32)) * q(1, 2);
        assert!(iv.width() < half_ulp, "{text}");
        assert!(
            iv.lo() >= &(&printed - &half_ulp) && iv.hi() < &(&printed + &half_ulp),
            "{text}"
        );
    }
}

#[test]
fn flipped_h1_bound_is_detected() {
    let mut doc = document().clone();
    let rec = doc
        .candidates
        .iter_mut()
        .find(|c| c.label == 5 && c.branch == "+")
        .unwrap();
    assert_eq!(rec.verdict, "discarded-h1");
    let h1 = rec.h1.as_mut().unwrap();
    let (lo, hi) = (h1.lo.clone(), h1.hi.clone());
    h1.lo = negate(&hi);
    h1.hi = negate(&lo);
    h1.decimal = None;
    h1.digits = None;
    let report = verify(&doc);
    assert!(!report.passed());
    let names: Vec<&str> = report.failures.iter().map(|f| f.record.as_str()).collect();
    assert_eq!(names, vec!["candidate t5+"]);
}

fn negate(s: &str) -> String {
    eqpent_core::numeric::format_rational(&-parse_rational(s).unwrap())
}

#[test]
fn perturbed_masses_are_detected() {
    let mut doc = document().clone();
    let s = &mut doc.solutions[1];
    let shift = |x: &str| {
        eqpent_core::numeric::format_rational(&(parse_rational(x).unwrap() + dec("0.001")))
    };
    s.masses.m1.lo = shift(&s.masses.m1.lo);
    s.masses.m1.hi = shift(&s.masses.m1.hi);
    let report = verify(&doc);
    assert_eq!(report.failures.len(), 1, "{:?}", report.failures);
    let f = &report.failures[0];
    assert!(f.record.starts_with("solution t"), "{}", f.record);
    assert!(f.message.contains("mass recomputation"), "{}", f.message);
}

#[test]
fn edited_text_fails_to_verify() {
    // swapping the verdict of a certified candidate breaks the structure
    let edited = text().replacen("verdict = \"certified\"", "verdict = \"discarded-h1\"", 1);
    let doc = CertificateDocument::from_toml(&edited).unwrap();
    assert!(!verify(&doc).passed());
    assert!(matches!(
        CertificateDocument::from_toml("schema_version = 1"),
        Err(CertError::Parse(_))
    ));
}

#[test]
fn regular_figure() {
    let table = figure(FigureKind::Regular, Some(document())).unwrap();
    let rows: Vec<(usize, &str, &str)> = table
        .rows
        .iter()
        .map(|r| (r.vertex, r.x.as_str(), r.y.as_str()))
        .collect();
    assert_eq!(
        rows,
        vec![
            (1, "0.500000000000", "0.000000000000"),
            (2, "-0.500000000000", "0.000000000000"),
            (3, "0.809016994375", "0.951056516295"),
            (4, "-0.809016994375", "0.951056516295"),
            (5, "0.000000000000", "1.538841768588"),
        ]
    );
    assert!(table
        .to_csv()
        .starts_with("config,branch,shape,vertex,x,y,x_digits,y_digits\nregular,+,convex,1,"));
}

#[test]
fn concave_figure() {
    let table = figure(FigureKind::Concave, Some(document())).unwrap();
    let xy = |i: usize| {
        let r = &table.rows[i];
        (
            RationalInterval::point(dec(&r.x)),
            RationalInterval::point(dec(&r.y)),
        )
    };
    let (x3, y3) = xy(2);
    assert!(near(&x3, "0.5402092", "5e-8") && near(&y3, "0.9991913", "5e-8"));
    let (x4, _) = xy(3);
    assert!(near(&x4, "-0.5402092", "5e-8"));
    let (x5, y5) = xy(4);
    assert!(near(&x5, "0", "0") && near(&y5, "0.1576605", "5e-8"));
    assert!(table
        .rows
        .iter()
        .all(|r| r.shape == "concave" && r.branch == '+'));
}

#[test]
fn figures_need_a_certificate() {
    assert_eq!(
        figure(FigureKind::Regular, None),
        Err(CertError::MissingCertificate("regular"))
    );
    let mut doc = document().clone();
    doc.solutions.retain(|s| s.shape != "concave");
    assert_eq!(
        figure(FigureKind::Concave, Some(&doc)),
        Err(CertError::MissingCertificate("concave"))
    );
}

#[test]
fn gallery_flags_the_flat_pentagons() {
    let table = figure(FigureKind::Gallery, None).unwrap();
    assert_eq!(table.rows.len(), 7 * 5);
    let shape_of = |name: &str| {
        table
            .rows
            .iter()
            .find(|r| r.config == name)
            .map(|r| r.shape.clone())
            .unwrap()
    };
    assert_eq!(shape_of("plus-flat-sqrt3/2"), "degenerate");
    assert_eq!(shape_of("plus-limit-sqrt15/2"), "degenerate");
    assert_eq!(shape_of("minus-limit-1+sqrt3/2"), "degenerate");
    assert_eq!(shape_of("plus-concave"), "concave");
    assert_eq!(shape_of("plus-convex"), "convex");
    assert_eq!(shape_of("minus-concave"), "concave");
    // at y5 = sqrt3/2 on the plus branch x3 = 1: vertices 1, 3, 5 are collinear
    let flat: Vec<_> = table
        .rows
        .iter()
        .filter(|r| r.config == "plus-flat-sqrt3/2")
        .collect();
    assert_eq!(flat[2].x, "1.000000000000");
}

#[test]
fn r60_root_table() {
    let table = roots_table(RootTarget::R60, &RootRange::All, None).unwrap();
    assert_eq!(table.rows.len(), 14);
    let inside: Vec<_> = table
        .rows
        .iter()
        .filter(|r| r.lo >= q(205, 100) && r.hi <= q(210, 100))
        .collect();
    assert_eq!(inside.len(), 1);
    assert!(inside[0].decimal.starts_with("2.0970716051"));
    assert!(table
        .to_csv()
        .starts_with("index,factor,decimal,digits,lo,hi\n1,R60,"));
}

#[test]
fn p_root_tables() {
    let dir = common::cache_dir();
    let window = RootRange::parse("window").unwrap();
    let p = roots_table(RootTarget::P, &window, Some(&dir)).unwrap();
    assert_eq!(p.rows.len(), 18);
    let wide = roots_table(
        RootTarget::P,
        &RootRange::parse("tprime").unwrap(),
        Some(&dir),
    )
    .unwrap();
    assert_eq!(wide.rows.len(), 36);
    let p120 = roots_table(RootTarget::P120, &window, None).unwrap();
    assert_eq!(p120.rows.len(), 7);
    let t7 = p120
        .rows
        .iter()
        .find(|r| r.decimal.starts_with("0.7332148"))
        .unwrap();
    assert_eq!(t7.factor, "p120");
    assert!(matches!(
        RootTarget::parse("p7"),
        Err(CertError::UnknownTarget(_))
    ));
    assert!(matches!(
        RootRange::parse("2,1"),
        Err(CertError::UnknownRange(_))
    ));
}

#[test]
fn q_roots_in_s() {
    let table = roots_table(RootTarget::Q, &RootRange::S, None).unwrap();
    assert_eq!(table.rows.len(), 11);
}

#[test]
fn cache_is_reused_and_repaired() {
    let dir = std::path::PathBuf::from(env!("CARGO_TARGET_TMPDIR")).join("cache-roundtrip");
    let _ = std::fs::remove_dir_all(&dir);
    let model = model_polynomials().unwrap();
    let shared = common::cache_dir();
    let first = eliminate_cached(model, Some(&shared)).unwrap();
    std::fs::create_dir_all(&dir).unwrap();
    let path = resultant_cache_path(&dir);
    std::fs::copy(resultant_cache_path(&shared), &path).unwrap();
    let written = std::fs::read_to_string(&path).unwrap();
    let second = eliminate_cached(model, Some(&dir)).unwrap();
    assert_eq!(first.p, second.p);
    assert_eq!(first.factors.p120, second.factors.p120);
    assert_eq!(std::fs::read_to_string(&path).unwrap(), written);
    // a corrupted cache is recomputed and rewritten
    std::fs::write(&path, written.replacen('1', "2", 1)).unwrap();
    let third = eliminate_cached(model, Some(&dir)).unwrap();
    assert_eq!(first.p, third.p);
    assert_eq!(std::fs::read_to_string(&path).unwrap(), written);
    let _ = std::fs::remove_dir_all(&dir);
}

#[test]
fn candidate_lookup() {
    let doc = document();
    let c = doc.candidate(7, Branch::Plus).unwrap();
    assert_eq!(c.verdict, "certified");
    assert_eq!(c.witnesses.len(), 2);
    assert!(doc.candidate(19, Branch::Plus).is_none());
}
