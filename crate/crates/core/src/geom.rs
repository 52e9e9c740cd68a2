//! Exact embedding of trajectories in `H` and text exports.
//!
//! Meshes (N = 4) and drawings (N = 3) map `H` to Euclidean space with a
//! fixed orthonormal basis so outputs are diffable. Vertices are
//! deduplicated on exact coordinates before any float conversion.

use std::collections::BTreeMap;
use std::fmt::Write as _;

use crate::codec::TileStep;
use crate::error::{Error, Result};
use crate::hplane::{project, HPoint};
use crate::monomial::Monomial;
use crate::tile::{FlatTile, SlantTile};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EmbeddedTile {
    pub flat: FlatTile,
    pub verts: Vec<HPoint>,
    /// Base of the lift whose vertices were projected.
    pub anchor: Monomial,
}

impl EmbeddedTile {
    pub fn from_lift(lift: &SlantTile) -> Self {
        Self {
            flat: lift.flat(),
            verts: lift.vertices().iter().map(project).collect(),
            anchor: lift.base().clone(),
        }
    }

    pub fn dim(&self) -> usize {
        self.flat.dim()
    }

    /// Number of projected vertices shared with `other`.
    pub fn shared_vertices(&self, other: &EmbeddedTile) -> usize {
        self.verts
            .iter()
            .filter(|v| other.verts.contains(v))
            .count()
    }
}

pub fn embed(steps: &[TileStep]) -> Vec<EmbeddedTile> {
    steps
        .iter()
        .map(|s| EmbeddedTile::from_lift(&s.lift))
        .collect()
}

fn check_dim(tiles: &[EmbeddedTile], n: usize) -> Result<()> {
    match tiles.iter().find(|t| t.dim() != n) {
        Some(t) => Err(Error::WrongDimension {
            expected: n,
            found: t.dim(),
        }),
        None => Ok(()),
    }
}

/// Distinct vertices in first-seen order and per-tile vertex indices.
fn index_vertices(tiles: &[EmbeddedTile]) -> (Vec<&HPoint>, Vec<Vec<usize>>) {
    let mut seen: BTreeMap<&HPoint, usize> = BTreeMap::new();
    let mut order = Vec::new();
    let faces = tiles
        .iter()
        .map(|t| {
            t.verts
                .iter()
                .map(|v| {
                    *seen.entry(v).or_insert_with(|| {
                        order.push(v);
                        order.len() - 1
                    })
                })
                .collect()
        })
        .collect();
    (order, faces)
}

fn coords_in_basis(p: &HPoint, basis: &[Vec<f64>]) -> Vec<f64> {
    let x = p.to_f64();
    basis
        .iter()
        .map(|row| row.iter().zip(&x).map(|(a, b)| a * b).sum())
        .collect()
}

fn normalized(row: &[f64]) -> Vec<f64> {
    let len = row.iter().map(|a| a * a).sum::<f64>().sqrt();
    row.iter().map(|a| a / len).collect()
}

fn fixed(v: f64, places: usize) -> String {
    let s = format!("{v:.places$}");
    if s.strip_prefix('-')
        .is_some_and(|rest| rest.chars().all(|c| c == '0' || c == '.'))
    {
        s[1..].to_string()
    } else {
        s
    }
}

/// Wavefront-style text: `v x y z` per distinct vertex and four
/// triangles per tetrahedron, 1-based.
pub fn to_mesh(tiles: &[EmbeddedTile]) -> Result<String> {
    check_dim(tiles, 4)?;
    let basis = [
        normalized(&[1.0, -1.0, 0.0, 0.0]),
        normalized(&[1.0, 1.0, -2.0, 0.0]),
        normalized(&[1.0, 1.0, 1.0, -3.0]),
    ];
    let (verts, cells) = index_vertices(tiles);
    let mut out = String::new();
    for v in verts {
        let c = coords_in_basis(v, &basis);
        writeln!(
            out,
            "v {} {} {}",
            fixed(c[0], 9),
            fixed(c[1], 9),
            fixed(c[2], 9)
        )
        .expect("string write");
    }
    for cell in cells {
        let [a, b, c, d] = [cell[0] + 1, cell[1] + 1, cell[2] + 1, cell[3] + 1];
        for (i, j, k) in [(a, b, c), (a, b, d), (a, c, d), (b, c, d)] {
            writeln!(out, "f {i} {j} {k}").expect("string write");
        }
    }
    Ok(out)
}

/// Standalone SVG: one polygon per triangle, labelled with its 1-based
/// position in the trajectory.
pub fn to_svg(tiles: &[EmbeddedTile]) -> Result<String> {
    check_dim(tiles, 3)?;
    const SCALE: f64 = 40.0;
    const MARGIN: f64 = 20.0;
    let basis = [normalized(&[1.0, -1.0, 0.0]), normalized(&[1.0, 1.0, -2.0])];
    let polys: Vec<Vec<(f64, f64)>> = tiles
        .iter()
        .map(|t| {
            t.verts
                .iter()
                .map(|v| {
                    let c = coords_in_basis(v, &basis);
                    (c[0] * SCALE, -c[1] * SCALE)
                })
                .collect()
        })
        .collect();
    let all = polys.iter().flatten();
    let (mut x0, mut y0, mut x1, mut y1) = (0.0f64, 0.0f64, 0.0f64, 0.0f64);
    for (i, &(x, y)) in all.enumerate() {
        if i == 0 {
            (x0, y0, x1, y1) = (x, y, x, y);
        }
        x0 = x0.min(x);
        y0 = y0.min(y);
        x1 = x1.max(x);
        y1 = y1.max(y);
    }
    let (w, h) = (x1 - x0 + 2.0 * MARGIN, y1 - y0 + 2.0 * MARGIN);
    let mut out = String::new();
    writeln!(
        out,
        r#"<svg xmlns="http://www.w3.org/2000/svg" viewBox="{} {} {} {}" width="{}" height="{}">"#,
        fixed(x0 - MARGIN, 3),
        fixed(y0 - MARGIN, 3),
        fixed(w, 3),
        fixed(h, 3),
        fixed(w, 3),
        fixed(h, 3)
    )
    .expect("string write");
    for (i, poly) in polys.iter().enumerate() {
        let pts: Vec<String> = poly
            .iter()
            .map(|(x, y)| format!("{},{}", fixed(*x, 3), fixed(*y, 3)))
            .collect();
        let cx = poly.iter().map(|p| p.0).sum::<f64>() / poly.len() as f64;
        let cy = poly.iter().map(|p| p.1).sum::<f64>() / poly.len() as f64;
        writeln!(
            out,
            r##"<polygon points="{}" fill="#dde6f0" stroke="#203040" stroke-width="1"/>"##,
            pts.join(" ")
        )
        .expect("string write");
        writeln!(
            out,
            r#"<text x="{}" y="{}" font-size="10" text-anchor="middle">{}</text>"#,
            fixed(cx, 3),
            fixed(cy + 3.0, 3),
            i + 1
        )
        .expect("string write");
    }
    out.push_str("</svg>\n");
    Ok(out)
}

/// Outcome of comparing tile `i` with tile `i + period`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PeriodMatch {
    /// 1-based index of the earlier tile.
    pub tile: usize,
    /// `anchor(i + period) / anchor(i)` when the later tile is that exact
    /// lattice translate of the earlier one.
    pub translation: Option<Monomial>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PeriodReport {
    pub period: usize,
    pub matches: Vec<PeriodMatch>,
}

impl PeriodReport {
    /// All applicable pairs are translates by one common lattice vector.
    pub fn holds(&self) -> bool {
        let mut ts = self.matches.iter().map(|m| m.translation.as_ref());
        match ts.next() {
            None => true,
            Some(None) => false,
            Some(Some(first)) => ts.all(|t| t == Some(first)),
        }
    }

    pub fn translation(&self) -> Option<&Monomial> {
        if self.holds() {
            self.matches.first().and_then(|m| m.translation.as_ref())
        } else {
            None
        }
    }
}

/// Compare the lifts of `steps[i]` and `steps[i + period]` for every `i`.
pub fn period_check(steps: &[TileStep], period: usize) -> PeriodReport {
    let matches = (0..steps.len().saturating_sub(period))
        .map(|i| {
            let (a, b) = (&steps[i].lift, &steps[i + period].lift);
            let translation =
                (a.dirs() == b.dirs()).then(|| b.base().div(a.base()).expect("same dimension"));
            PeriodMatch {
                tile: i + 1,
                translation,
            }
        })
        .collect();
    PeriodReport { period, matches }
}
