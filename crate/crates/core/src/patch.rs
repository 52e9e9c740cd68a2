//! Encoding one trajectory with several drawings on overlapping ranges.
//!
//! Drawing 1 is traced from the start tile. Drawing k starts from the first
//! tile of its range, which the earlier drawings already placed, and must
//! reproduce every already-known tile of its range. Each drawing's letters
//! are only defined up to inversion; the polarity is fixed on overlap tiles
//! that the drawing certifies, meaning its lift there has both known
//! neighbours on its slot cycle. Letters past the previous range end come
//! from the new drawing.

use std::fmt;

use crate::codec::{encode_letters, Letter, LetterString, TileStep, Tracer};
use crate::cone::Cone;
use crate::error::{Error, Result};
use crate::tile::{FlatTile, Gradient, Slot};

/// A cone responsible for tiles `first..=last` (1-based).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Drawing {
    pub cone: Cone,
    pub first: usize,
    pub last: usize,
}

impl Drawing {
    pub fn new(cone: Cone, first: usize, last: usize) -> Self {
        Self { cone, first, last }
    }

    pub fn len(&self) -> usize {
        self.last + 1 - self.first
    }

    pub fn is_empty(&self) -> bool {
        self.last < self.first
    }
}

impl fmt::Display for Drawing {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "cone: {} ; range: {}..{}",
            self.cone, self.first, self.last
        )
    }
}

/// The part of the trajectory traced by one drawing, with its letters
/// already in the polarity used by the patched code.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LocalCode {
    pub first: usize,
    pub steps: Vec<TileStep>,
    pub letters: LetterString,
    /// 1-based tiles used to fix the polarity (empty for drawing 1).
    pub certified: Vec<usize>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PatchedCode {
    pub code: LetterString,
    pub flats: Vec<FlatTile>,
    pub locals: Vec<LocalCode>,
}

fn check_ranges(drawings: &[Drawing]) -> Result<()> {
    let bad = |drawing: usize, reason: &str| {
        Err(Error::BadRange {
            drawing,
            reason: reason.to_string(),
        })
    };
    for (k, d) in drawings.iter().enumerate() {
        if d.first == 0 || d.is_empty() {
            return bad(k + 1, "range must be non-empty and 1-based");
        }
        if k == 0 {
            if d.first != 1 {
                return bad(1, "first drawing must start at tile 1");
            }
            continue;
        }
        let prev = &drawings[k - 1];
        if d.first < prev.first || d.first > prev.last {
            return bad(k + 1, "range must start inside the previous range");
        }
        if d.last <= prev.last {
            return bad(k + 1, "range must extend past the previous range");
        }
        if d.cone.dim() != drawings[0].cone.dim() {
            return Err(Error::DimensionMismatch {
                expected: drawings[0].cone.dim(),
                found: d.cone.dim(),
            });
        }
    }
    Ok(())
}

fn trace_range(
    cone: &Cone,
    start: &FlatTile,
    exit: Slot,
    first: usize,
    len: usize,
) -> Result<Vec<TileStep>> {
    Tracer::new(cone, start, exit)
        .take(len)
        .collect::<Result<Vec<_>>>()
        .map_err(|e| match e {
            Error::TrajectoryBreak { tile } => Error::TrajectoryBreak {
                tile: first + tile - 1,
            },
            other => other,
        })
}

/// Patch the local codes of `drawings` into one code starting at `start`.
pub fn encode_with_drawings(
    drawings: &[Drawing],
    start: &FlatTile,
    exit0: Slot,
    init: Letter,
) -> Result<PatchedCode> {
    if drawings.is_empty() {
        return Err(Error::EmptyDrawings);
    }
    check_ranges(drawings)?;

    let head = &drawings[0];
    let steps = trace_range(&head.cone, start, exit0, 1, head.len())?;
    let gradients: Vec<Gradient> = steps.iter().map(TileStep::gradient).collect();
    let mut flats: Vec<FlatTile> = steps.iter().map(|s| s.flat.clone()).collect();
    let mut letters = encode_letters(&gradients, init).0;
    let mut locals = vec![LocalCode {
        first: 1,
        steps,
        letters: LetterString(letters.clone()),
        certified: Vec::new(),
    }];

    for (k, d) in drawings.iter().enumerate().skip(1) {
        let prev_last = drawings[k - 1].last;
        let i0 = d.first - 1;
        let lift = d.cone.surface_lift(&flats[i0])?;
        let exit = if let Some(next) = flats.get(i0 + 1) {
            [Slot::U, Slot::D]
                .into_iter()
                .find(|&s| &lift.neighbor_tile(s).flat() == next)
        } else if i0 > 0 {
            [Slot::U, Slot::D]
                .into_iter()
                .find(|&s| lift.neighbor_tile(s.toggle()).flat() == flats[i0 - 1])
        } else {
            Some(exit0)
        }
        .ok_or(Error::OverlapMismatch { tile: d.first + 1 })?;

        let steps = trace_range(&d.cone, &flats[i0], exit, d.first, d.len())?;
        for (j, step) in steps.iter().enumerate() {
            match flats.get(i0 + j) {
                Some(known) if known != &step.flat => {
                    return Err(Error::OverlapMismatch { tile: i0 + j + 1 })
                }
                Some(_) => {}
                None => flats.push(step.flat.clone()),
            }
        }

        let certified: Vec<usize> = steps
            .iter()
            .enumerate()
            .take_while(|(j, _)| i0 + j < prev_last)
            .filter(|(j, step)| {
                let gi = i0 + j;
                let facing = [step.lift.up_tile().flat(), step.lift.down_tile().flat()];
                let known = [gi.checked_sub(1), Some(gi + 1)];
                known
                    .iter()
                    .flatten()
                    .filter_map(|&x| flats.get(x))
                    .all(|f| facing.contains(f))
            })
            .map(|(j, _)| j)
            .collect();

        let gradients: Vec<Gradient> = steps.iter().map(TileStep::gradient).collect();
        let local = encode_letters(&gradients, Letter::U);
        let aligned = [local.clone(), local.inverted()]
            .into_iter()
            .find(|pol| {
                !certified.is_empty() && certified.iter().all(|&j| pol.0[j] == letters[i0 + j])
            })
            .ok_or(Error::PatchConflict {
                tile: d.first,
                drawing: k + 1,
            })?;

        letters.extend_from_slice(&aligned.0[prev_last - i0..]);
        locals.push(LocalCode {
            first: d.first,
            steps,
            letters: aligned,
            certified: certified.iter().map(|j| i0 + j + 1).collect(),
        });
    }

    Ok(PatchedCode {
        code: LetterString(letters),
        flats,
        locals,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cone(s: &str) -> Cone {
        Cone::parse(s, 4).unwrap()
    }

    fn helix() -> Vec<Drawing> {
        vec![
            Drawing::new(cone("1, y2z/x"), 1, 10),
            Drawing::new(cone("y2z/x, y2w2"), 7, 16),
        ]
    }

    fn start() -> FlatTile {
        FlatTile::parse("y[zxy]").unwrap()
    }

    #[test]
    fn helix_code() {
        let out = encode_with_drawings(&helix(), &start(), Slot::U, Letter::U).unwrap();
        assert_eq!(out.code.to_string(), "UUDDDDUUDDDDUUDD");
        assert_eq!(out.flats.len(), 16);
        assert_eq!(out.locals.len(), 2);
    }

    #[test]
    fn single_drawing_is_a_plain_trace() {
        let d = vec![Drawing::new(cone("1, y2z/x"), 1, 10)];
        let out = encode_with_drawings(&d, &start(), Slot::U, Letter::D).unwrap();
        let tr = crate::codec::trace(&d[0].cone, &start(), Slot::U, 10).unwrap();
        let g: Vec<_> = tr.iter().map(TileStep::gradient).collect();
        assert_eq!(out.code, encode_letters(&g, Letter::D));
    }

    #[test]
    fn range_errors() {
        assert_eq!(
            encode_with_drawings(&[], &start(), Slot::U, Letter::U),
            Err(Error::EmptyDrawings)
        );
        let mut d = helix();
        d[1].first = 11;
        assert!(matches!(
            encode_with_drawings(&d, &start(), Slot::U, Letter::U),
            Err(Error::BadRange { drawing: 2, .. })
        ));
        let mut d = helix();
        d[0].first = 2;
        assert!(matches!(
            encode_with_drawings(&d, &start(), Slot::U, Letter::U),
            Err(Error::BadRange { drawing: 1, .. })
        ));
        let mut d = helix();
        d[1].last = 9;
        assert!(matches!(
            encode_with_drawings(&d, &start(), Slot::U, Letter::U),
            Err(Error::BadRange { drawing: 2, .. })
        ));
    }

    #[test]
    fn mismatched_second_drawing_is_reported() {
        let d = vec![
            Drawing::new(cone("1, y2z/x"), 1, 10),
            Drawing::new(cone("1"), 7, 16),
        ];
        let res = encode_with_drawings(&d, &start(), Slot::U, Letter::U);
        assert!(matches!(
            res,
            Err(Error::OverlapMismatch { .. })
                | Err(Error::PatchConflict { .. })
                | Err(Error::TrajectoryBreak { .. })
        ));
    }
}
