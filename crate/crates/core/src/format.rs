//! Line-oriented text formats.
//!
//! Cone file:
//!
//! ```text
//! dim 4
//! # comment
//! cone: 1, y2z/x ; range: 1..10
//! cone: y2z/x, y2w2 ; range: 7..16
//! ```
//!
//! The range is optional when the file holds a single drawing. Sequence
//! files hold one tile literal per line. In both formats `#` starts a
//! comment and blank lines are ignored.

use std::fmt;

use crate::codec::LetterString;
use crate::cone::Cone;
use crate::error::{Error, Result};
use crate::patch::Drawing;
use crate::tile::SlantTile;

fn content_lines(text: &str) -> impl Iterator<Item = (usize, &str)> {
    text.lines().enumerate().filter_map(|(i, line)| {
        let body = line.split('#').next().unwrap_or("").trim();
        (!body.is_empty()).then_some((i + 1, body))
    })
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ConeEntry {
    pub cone: Cone,
    pub range: Option<(usize, usize)>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ConeFile {
    pub dim: usize,
    pub entries: Vec<ConeEntry>,
}

fn parse_range(s: &str) -> Option<(usize, usize)> {
    let (a, b) = s.split_once("..")?;
    Some((a.trim().parse().ok()?, b.trim().parse().ok()?))
}

impl ConeFile {
    pub fn parse(text: &str) -> Result<Self> {
        let mut lines = content_lines(text);
        let (_, header) = lines
            .next()
            .ok_or_else(|| Error::Parse("missing 'dim N' header".into()))?;
        let dim: usize = header
            .strip_prefix("dim")
            .and_then(|d| d.trim().parse().ok())
            .ok_or_else(|| Error::Parse(format!("bad header {header:?}, expected 'dim N'")))?;
        if dim < 2 {
            return Err(Error::InvalidDimension(dim));
        }
        let mut entries = Vec::new();
        for (no, line) in lines {
            let err = |msg: &str| Error::Parse(format!("line {no}: {msg}"));
            let mut parts = line.split(';');
            let peaks = parts
                .next()
                .and_then(|p| p.trim().strip_prefix("cone:"))
                .ok_or_else(|| err("expected 'cone: PEAK, ...'"))?;
            let cone = Cone::parse(peaks, dim).map_err(|e| err(&e.to_string()))?;
            let range = match parts.next() {
                None => None,
                Some(r) => {
                    let r = r
                        .trim()
                        .strip_prefix("range:")
                        .ok_or_else(|| err("expected 'range: n..m'"))?;
                    Some(parse_range(r).ok_or_else(|| err("expected 'range: n..m'"))?)
                }
            };
            if parts.next().is_some() {
                return Err(err("unexpected trailing field"));
            }
            entries.push(ConeEntry { cone, range });
        }
        Ok(Self { dim, entries })
    }

    /// Drawings in file order. A lone entry without a range covers
    /// `1..=default_len`.
    pub fn drawings(&self, default_len: Option<usize>) -> Result<Vec<Drawing>> {
        self.entries
            .iter()
            .enumerate()
            .map(|(k, e)| match (e.range, default_len) {
                (Some((a, b)), _) => Ok(Drawing::new(e.cone.clone(), a, b)),
                (None, Some(len)) if self.entries.len() == 1 => {
                    Ok(Drawing::new(e.cone.clone(), 1, len))
                }
                _ => Err(Error::BadRange {
                    drawing: k + 1,
                    reason: "missing range".into(),
                }),
            })
            .collect()
    }
}

impl fmt::Display for ConeFile {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "dim {}", self.dim)?;
        for e in &self.entries {
            match e.range {
                Some((a, b)) => writeln!(f, "cone: {} ; range: {a}..{b}", e.cone)?,
                None => writeln!(f, "cone: {}", e.cone)?,
            }
        }
        Ok(())
    }
}

/// Tile literals, one per line. All tiles must share a dimension.
pub fn parse_sequence(text: &str) -> Result<Vec<SlantTile>> {
    let mut out: Vec<SlantTile> = Vec::new();
    for (no, line) in content_lines(text) {
        let tile = SlantTile::parse(line).map_err(|e| Error::Parse(format!("line {no}: {e}")))?;
        if let Some(first) = out.first() {
            if first.dim() != tile.dim() {
                return Err(Error::DimensionMismatch {
                    expected: first.dim(),
                    found: tile.dim(),
                });
            }
        }
        out.push(tile);
    }
    Ok(out)
}

pub fn print_sequence<'a>(tiles: impl IntoIterator<Item = &'a SlantTile>) -> String {
    tiles.into_iter().map(|t| format!("{t}\n")).collect()
}

pub fn parse_code(text: &str) -> Result<LetterString> {
    let body: String = content_lines(text)
        .map(|(_, l)| l)
        .collect::<Vec<_>>()
        .join("\n");
    let code: LetterString = body.parse()?;
    if code.is_empty() {
        return Err(Error::EmptyCode);
    }
    Ok(code)
}

pub fn print_code(code: &LetterString) -> String {
    format!("{}\n", code.grouped())
}

#[cfg(test)]
mod tests {
    use super::*;

    const HELIX: &str = "dim 4\n# helix\ncone: 1, y2z/x ; range: 1..10\n\ncone: y2z/x, y2w2 ; range: 7..16  # second\n";

    #[test]
    fn cone_file_round_trip() {
        let f = ConeFile::parse(HELIX).unwrap();
        assert_eq!(f.dim, 4);
        assert_eq!(f.entries.len(), 2);
        assert_eq!(f.entries[1].range, Some((7, 16)));
        let printed = f.to_string();
        assert_eq!(ConeFile::parse(&printed).unwrap(), f);
        assert_eq!(ConeFile::parse(&printed).unwrap().to_string(), printed);
        let d = f.drawings(None).unwrap();
        assert_eq!((d[1].first, d[1].last), (7, 16));
    }

    #[test]
    fn cone_file_without_range() {
        let f = ConeFile::parse("dim 3\ncone: 1, x2/z\n").unwrap();
        assert_eq!(f.entries[0].range, None);
        assert_eq!(f.drawings(Some(5)).unwrap()[0].last, 5);
        assert!(f.drawings(None).is_err());
    }

    #[test]
    fn cone_file_errors() {
        assert!(ConeFile::parse("").is_err());
        assert!(ConeFile::parse("dimension 4").is_err());
        assert!(ConeFile::parse("dim 4\npeaks: 1").is_err());
        assert!(ConeFile::parse("dim 4\ncone: 1 ; range: 3").is_err());
        assert!(ConeFile::parse("dim 4\ncone: q").is_err());
        assert_eq!(ConeFile::parse("dim 4\n").unwrap().entries.len(), 0);
    }

    #[test]
    fn sequence_round_trip() {
        let tiles = parse_sequence("x[yx]\n# c\n1[xy]\n\n1[xz]\n").unwrap();
        assert_eq!(tiles.len(), 3);
        assert_eq!(parse_sequence(&print_sequence(&tiles)).unwrap(), tiles);
        assert!(parse_sequence("x[yx]\n1[xyz]\n").is_err());
    }

    #[test]
    fn code_round_trip() {
        let code = parse_code("# c\nU-U-D\nD-U\n").unwrap();
        assert_eq!(code.to_string(), "UUDDU");
        assert_eq!(parse_code(&print_code(&code)).unwrap(), code);
        assert_eq!(parse_code("# nothing\n"), Err(Error::EmptyCode));
    }
}
