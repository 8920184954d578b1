//! Vertex tables for plotting: the two certified configurations read from a
//! certificate, and a gallery of representative pentagons on both branches.

use num_traits::ToPrimitive;

use super::document::{parse_branch, shape_name, CertificateDocument, SolutionRecord};
use super::CertError;
use crate::model::{branch_domain_status, enclose_geometry, Branch, DomainStatus, Shape};
use crate::numeric::{pow10, render_decimal, sqrt_enclosure};
use crate::{Rational, RationalInterval};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum FigureKind {
    Regular,
    Concave,
    Gallery,
}

impl FigureKind {
    pub fn parse(s: &str) -> Option<Self> {
        match s {
            "regular" => Some(FigureKind::Regular),
            "concave" => Some(FigureKind::Concave),
            "gallery" => Some(FigureKind::Gallery),
            _ => None,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FigureRow {
    pub config: String,
    pub branch: char,
    pub shape: String,
    /// Body number `1..=5`.
    pub vertex: usize,
    pub x: String,
    pub y: String,
    pub x_digits: u32,
    pub y_digits: u32,
}

#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct FigureTable {
    pub rows: Vec<FigureRow>,
}

impl FigureTable {
    pub const HEADER: &'static str = "config,branch,shape,vertex,x,y,x_digits,y_digits";

    pub fn to_csv(&self) -> String {
        let mut out = String::from(Self::HEADER);
        out.push('\n');
        for r in &self.rows {
            out.push_str(&format!(
                "{},{},{},{},{},{},{},{}\n",
                r.config, r.branch, r.shape, r.vertex, r.x, r.y, r.x_digits, r.y_digits
            ));
        }
        out
    }
}

/// A gallery entry: `y5` enclosure, branch and a name for the region.
#[derive(Debug, Clone, PartialEq)]
pub struct GallerySample {
    pub name: &'static str,
    pub branch: Branch,
    pub y5: RationalInterval,
}

const DIGITS: u32 = 12;

fn sqrt_of(n: i64, d: i64) -> RationalInterval {
    let x = RationalInterval::point(Rational::new(n.into(), d.into()));
    sqrt_enclosure(&x, &pow10(-30)).expect("nonnegative radicand")
}

fn point(n: i64, d: i64) -> RationalInterval {
    RationalInterval::point(Rational::new(n.into(), d.into()))
}

/// One interior representative per region, plus the boundary values where
/// the pentagon flattens: `sqrt3/2` and `sqrt15/2` on the plus branch,
/// `1 + sqrt3/2` and `sqrt15/2` on the minus branch.
pub fn gallery_samples() -> Vec<GallerySample> {
    let one = point(1, 1);
    vec![
        GallerySample {
            name: "plus-concave",
            branch: Branch::Plus,
            y5: point(1, 2),
        },
        GallerySample {
            name: "plus-flat-sqrt3/2",
            branch: Branch::Plus,
            y5: sqrt_of(3, 4),
        },
        GallerySample {
            name: "plus-convex",
            branch: Branch::Plus,
            y5: point(3, 2),
        },
        GallerySample {
            name: "plus-limit-sqrt15/2",
            branch: Branch::Plus,
            y5: sqrt_of(15, 4),
        },
        GallerySample {
            name: "minus-limit-1+sqrt3/2",
            branch: Branch::Minus,
            y5: one + sqrt_of(3, 4),
        },
        GallerySample {
            name: "minus-concave",
            branch: Branch::Minus,
            y5: point(19, 10),
        },
        GallerySample {
            name: "minus-limit-sqrt15/2",
            branch: Branch::Minus,
            y5: sqrt_of(15, 4),
        },
    ]
}

fn render(iv: &RationalInterval) -> (String, u32) {
    match render_decimal(iv, DIGITS) {
        Some(d) => (d.text, d.digits),
        None => (
            format!("{:.3}", iv.midpoint().to_f64().unwrap_or(f64::NAN)),
            0,
        ),
    }
}

fn push_vertices(
    table: &mut FigureTable,
    config: &str,
    branch: Branch,
    shape: &str,
    vertices: [(RationalInterval, RationalInterval); 5],
) {
    for (i, (x, y)) in vertices.iter().enumerate() {
        let (xs, xd) = render(x);
        let (ys, yd) = render(y);
        table.rows.push(FigureRow {
            config: config.to_string(),
            branch: branch.symbol(),
            shape: shape.to_string(),
            vertex: i + 1,
            x: xs,
            y: ys,
            x_digits: xd,
            y_digits: yd,
        });
    }
}

fn solution_vertices(
    s: &SolutionRecord,
) -> Result<[(RationalInterval, RationalInterval); 5], CertError> {
    let x3 = s.x3.parse()?;
    let y3 = s.y3.parse()?;
    let y5 = s.y5.parse()?;
    let half = point(1, 2);
    let zero = point(0, 1);
    Ok([
        (half.clone(), zero.clone()),
        (-half, zero.clone()),
        (x3.clone(), y3.clone()),
        (-x3, y3),
        (zero, y5),
    ])
}

pub fn figure(
    kind: FigureKind,
    doc: Option<&CertificateDocument>,
) -> Result<FigureTable, CertError> {
    let mut table = FigureTable::default();
    match kind {
        FigureKind::Regular | FigureKind::Concave => {
            let (shape, config) = match kind {
                FigureKind::Regular => (Shape::Convex, "regular"),
                _ => (Shape::Concave, "concave"),
            };
            let doc = doc.ok_or(CertError::MissingCertificate(config))?;
            let s = doc
                .solution_by_shape(shape)
                .ok_or(CertError::MissingCertificate(config))?;
            let branch = parse_branch(&s.branch)
                .ok_or_else(|| CertError::Parse(format!("branch {:?}", s.branch)))?;
            push_vertices(
                &mut table,
                config,
                branch,
                shape_name(shape),
                solution_vertices(s)?,
            );
        }
        FigureKind::Gallery => {
            for sample in gallery_samples() {
                let g = enclose_geometry(&sample.y5, sample.branch, &pow10(-30))?;
                let flat = g.shape == Shape::Degenerate
                    || branch_domain_status(&sample.y5, sample.branch) != DomainStatus::Inside;
                let shape = if flat {
                    "degenerate"
                } else {
                    shape_name(g.shape)
                };
                push_vertices(&mut table, sample.name, sample.branch, shape, g.positions());
            }
        }
    }
    Ok(table)
}
