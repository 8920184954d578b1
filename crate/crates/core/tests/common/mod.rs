//! Helpers shared by the integration tests: one classification per test
//! binary, and a resultant cache under the cargo target directory so only the
//! first binary pays for the elimination.

#![allow(dead_code)]

use std::path::PathBuf;
use std::sync::OnceLock;

use eqpent_core::cert::classify_cached;
use eqpent_core::classify::{Classification, ClassifyOptions, Precision};
use eqpent_core::numeric::parse_rational;
use eqpent_core::{Rational, RationalInterval};
use num_bigint::BigInt;
use num_traits::ToPrimitive;

pub fn cache_dir() -> PathBuf {
    PathBuf::from(env!("CARGO_TARGET_TMPDIR")).join("eqpent-cache")
}

pub fn classification() -> &'static Classification {
    static CELL: OnceLock<Classification> = OnceLock::new();
    CELL.get_or_init(|| {
        let options = ClassifyOptions {
            precision: Precision::default(),
            cross_check: false,
        };
        classify_cached(&options, Some(&cache_dir())).expect("classification runs")
    })
}

pub fn q(n: i64, d: i64) -> Rational {
    Rational::new(BigInt::from(n), BigInt::from(d))
}

pub fn dec(s: &str) -> Rational {
    parse_rational(s).unwrap()
}

pub fn f64_of(x: &Rational) -> f64 {
    x.to_f64().unwrap()
}

pub fn mid(x: &RationalInterval) -> f64 {
    f64_of(&x.midpoint())
}

/// The enclosure lies within `tol` of `value` at both ends.
pub fn near(x: &RationalInterval, value: &str, tol: &str) -> bool {
    let v = dec(value);
    let t = dec(tol);
    x.lo() >= &(&v - &t) && x.hi() <= &(&v + &t)
}

/// The paper's ordered table, `(label, value)`.
pub const PAPER_ROOTS: [(usize, &str); 18] = [
    (10, "0.1278827"),
    (3, "0.1296657"),
    (11, "0.1318307"),
    (12, "0.1535285"),
    (2, "0.1583844"),
    (13, "0.1690804"),
    (4, "0.1818971"),
    (5, "0.1871837"),
    (14, "0.4693713"),
    (1, "0.5095254"),
    (15, "0.5490528"),
    (16, "0.5930556"),
    (6, "0.7095411"),
    (7, "0.7332148"),
    (8, "0.9432977"),
    (17, "0.9681690"),
    (9, "0.9958185"),
    (18, "0.9962499"),
];

/// Couples `(label, branch, x3, y5)` that survive the `h1` screen.
pub const PAPER_COUPLES: [(usize, char, &str, &str); 6] = [
    (2, '+', "0.8090170", "1.5388418"),
    (7, '+', "0.5402091", "0.1576605"),
    (9, '+', "0.2540572", "0.0020951"),
    (4, '-', "-0.4091526", "1.3289291"),
    (14, '-', "-0.3542470", "0.4152845"),
    (18, '-', "0.2463622", "0.0018786"),
];
