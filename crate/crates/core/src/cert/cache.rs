//! On-disk cache of `P = Res_s(H1, H2)`, keyed by the digest of the embedded
//! data. A cache file is trusted only if its own checksum matches and the
//! peeling divisions succeed on it; otherwise it is recomputed and rewritten.

use std::path::{Path, PathBuf};

use num_bigint::BigInt;

use super::{io_error, CertError};
use crate::bpoly::Resultant;
use crate::classify::{
    classify_with, eliminate, peel, resultant_p, Classification, ClassifyOptions, Elimination,
};
use crate::model::polynomials::{embedded_data_digest, sha256_hex};
use crate::model::{model_polynomials, ModelPolynomials};
use crate::upoly::{UniPoly, Var};

pub fn resultant_cache_path(dir: &Path) -> PathBuf {
    dir.join(format!("resultant-p-{}.txt", &embedded_data_digest()[..16]))
}

/// `content`, then the primitive part one coefficient per line, then the
/// SHA-256 of everything above.
fn format_cache(r: &Resultant) -> String {
    let body = format!("{}\n{}", r.content, r.primitive.to_text());
    format!("{body}sha256 {}\n", sha256_hex(body.as_bytes()))
}

fn parse_cache(text: &str) -> Option<Resultant> {
    let (body, tail) = text.rsplit_once("sha256 ")?;
    if tail.trim() != sha256_hex(body.as_bytes()) {
        return None;
    }
    let (content, rest) = body.split_once('\n')?;
    let content: BigInt = content.trim().parse().ok()?;
    let primitive = UniPoly::from_text(rest, Var::T).ok()?;
    Some(Resultant { content, primitive })
}

pub fn eliminate_cached(
    model: &ModelPolynomials,
    cache_dir: Option<&Path>,
) -> Result<Elimination, CertError> {
    let Some(dir) = cache_dir else {
        return Ok(eliminate(model)?);
    };
    let path = resultant_cache_path(dir);
    if let Some(res) = std::fs::read_to_string(&path)
        .ok()
        .as_deref()
        .and_then(parse_cache)
    {
        if let Ok(e) = peel(model, res) {
            return Ok(e);
        }
    }
    let res = resultant_p(model)?;
    std::fs::create_dir_all(dir).map_err(|e| io_error(dir, e))?;
    std::fs::write(&path, format_cache(&res)).map_err(|e| io_error(&path, e))?;
    Ok(peel(model, res)?)
}

pub fn classify_cached(
    options: &ClassifyOptions,
    cache_dir: Option<&Path>,
) -> Result<Classification, CertError> {
    let model = model_polynomials()?;
    let elimination = eliminate_cached(model, cache_dir)?;
    Ok(classify_with(model, elimination, options)?)
}
