//! Cones generated by peak sets, the lattice height function and the
//! boundary surface they carve out.
//!
//! `Cone*A` is every lattice point `p * x^l` with `p` in `A` and all
//! `l_i >= 0`. The height of `z` is
//!
//! ```text
//! l_w(z) = max over p in w of ( min_i exponent_i(z / p) )
//! ```
//!
//! The max is taken over the generating peaks only. For any cone point
//! `q = p * x^l` the inner min of `z / q` is at most that of `z / p`, so
//! non-generators never win the max.
//!
//! The boundary surface is the set of slant tiles whose vertices all have
//! height zero; over each flat tile it holds one lift (`surface_lift`).

use std::fmt;

use crate::error::{Error, Result};
use crate::monomial::Monomial;
use crate::tile::{FlatTile, Gradient, SlantTile};

/// A finite, normalised peak set: no duplicates and no peak inside the
/// cone of another.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Cone {
    peaks: Vec<Monomial>,
}

impl Cone {
    pub fn new(peaks: Vec<Monomial>) -> Result<Self> {
        let first = peaks
            .first()
            .ok_or_else(|| Error::Parse("cone needs at least one peak".into()))?;
        let n = first.dim();
        if let Some(bad) = peaks.iter().find(|p| p.dim() != n) {
            return Err(Error::DimensionMismatch {
                expected: n,
                found: bad.dim(),
            });
        }
        let mut kept: Vec<Monomial> = Vec::with_capacity(peaks.len());
        for (i, p) in peaks.iter().enumerate() {
            if kept.contains(p) {
                continue;
            }
            let dominated = peaks
                .iter()
                .enumerate()
                .any(|(j, q)| j != i && q != p && p.divisible_by(q));
            if !dominated {
                kept.push(p.clone());
            }
        }
        Ok(Self { peaks: kept })
    }

    pub fn parse(s: &str, n: usize) -> Result<Self> {
        let peaks = s
            .split(',')
            .map(|p| Monomial::parse(p, n))
            .collect::<Result<Vec<_>>>()?;
        Self::new(peaks)
    }

    pub fn peaks(&self) -> &[Monomial] {
        &self.peaks
    }

    pub fn dim(&self) -> usize {
        self.peaks[0].dim()
    }

    /// Cone membership, equivalent to `height(z) >= 0`.
    pub fn contains(&self, z: &Monomial) -> bool {
        self.peaks.iter().any(|p| z.divisible_by(p))
    }

    /// `l_w(z)`.
    pub fn height(&self, z: &Monomial) -> Result<i64> {
        if z.dim() != self.dim() {
            return Err(Error::DimensionMismatch {
                expected: self.dim(),
                found: z.dim(),
            });
        }
        Ok(self.height_unchecked(z))
    }

    fn height_unchecked(&self, z: &Monomial) -> i64 {
        self.peaks
            .iter()
            .map(|p| {
                z.exponents()
                    .iter()
                    .zip(p.exponents())
                    .map(|(a, b)| a - b)
                    .min()
                    .expect("n >= 2")
            })
            .max()
            .expect("non-empty")
    }

    /// Membership of `s` in the boundary surface.
    pub fn on_surface(&self, s: &SlantTile) -> Result<bool> {
        if s.dim() != self.dim() {
            return Err(Error::DimensionMismatch {
                expected: self.dim(),
                found: s.dim(),
            });
        }
        Ok(s.vertices().iter().all(|v| self.height_unchecked(v) == 0))
    }

    /// The unique boundary-surface tile over `t`.
    ///
    /// Each lift class whose vertex heights are all equal to some `c` is
    /// moved onto the surface by `e^-c`. Exactly one class must qualify.
    pub fn surface_lift(&self, t: &FlatTile) -> Result<SlantTile> {
        if t.dim() != self.dim() {
            return Err(Error::DimensionMismatch {
                expected: self.dim(),
                found: t.dim(),
            });
        }
        let mut found = Vec::new();
        for lift in t.lifts() {
            let mut heights = lift
                .vertices()
                .into_iter()
                .map(|v| self.height_unchecked(&v));
            let c = heights.next().expect("n >= 2");
            if heights.all(|h| h == c) {
                found.push(lift.translate_e(-c));
            }
        }
        match found.len() {
            1 => Ok(found.pop().expect("one element")),
            0 => Err(Error::NoSurfaceTile {
                flat: t.to_string(),
            }),
            count => Err(Error::AmbiguousSurface {
                flat: t.to_string(),
                count,
            }),
        }
    }

    /// The vector field `X_w(t) = D Gamma_w(t)`.
    pub fn field(&self, t: &FlatTile) -> Result<Gradient> {
        Ok(self.surface_lift(t)?.gradient())
    }

    /// Peaks multiplied by `e^k`.
    pub fn translate_e(&self, k: i64) -> Self {
        Self {
            peaks: self.peaks.iter().map(|p| p.times_e(k)).collect(),
        }
    }
}

impl fmt::Display for Cone {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, p) in self.peaks.iter().enumerate() {
            if i > 0 {
                f.write_str(", ")?;
            }
            write!(f, "{p}")?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn t(s: &str) -> SlantTile {
        SlantTile::parse(s).unwrap()
    }

    fn m3(v: [i64; 3]) -> Monomial {
        Monomial::new(v.to_vec()).unwrap()
    }

    #[test]
    fn height_examples() {
        let w = Cone::parse("1, x2/z", 3).unwrap();
        assert_eq!(w.height(&m3([2, 1, 0])).unwrap(), 0);
        assert_eq!(w.height(&m3([3, 2, 0])).unwrap(), 1);
        let z = m3([4, -2, 7]);
        assert_eq!(w.height(&z.times_e(1)).unwrap(), w.height(&z).unwrap() + 1);
        assert!(w.height(&Monomial::identity(4)).is_err());
    }

    #[test]
    fn normalisation_drops_dominated_peaks() {
        let w = Cone::parse("1, x, 1, y2/z", 3).unwrap();
        assert_eq!(w.peaks().len(), 2);
        assert_eq!(w.to_string(), "1, y^2z^-1");
    }

    #[test]
    fn surface_membership() {
        let w1 = Cone::parse("1", 3).unwrap();
        assert!(w1.on_surface(&t("1[xy]")).unwrap());
        let w = Cone::parse("1, x2/z", 3).unwrap();
        assert!(!w.on_surface(&t("x2y[yx]")).unwrap());
        let s = t("x2y[yx]");
        assert_eq!(
            w.translate_e(3).on_surface(&s.translate_e(3)).unwrap(),
            w.on_surface(&s).unwrap()
        );
    }

    #[test]
    fn surface_lift_examples() {
        let w1 = Cone::parse("1", 3).unwrap();
        assert_eq!(w1.surface_lift(&t("1[xy]").flat()).unwrap(), t("1[xy]"));
        assert_eq!(w1.field(&t("1[xy]").flat()).unwrap(), Gradient(2));

        let w = Cone::parse("1, x2/z", 3).unwrap();
        let flat = t("x2y[yx]").flat();
        assert_eq!(w.surface_lift(&flat).unwrap(), t("x2yz^-1[zy]"));
        assert_eq!(w.field(&flat).unwrap(), Gradient(0));

        let ins = Cone::parse("z/y, 1/(x2w), 1/(x2z)", 4).unwrap();
        let flat = t("zw[xyz]").flat();
        assert_eq!(ins.surface_lift(&flat).unwrap(), t("1[zwx]"));
        assert_eq!(ins.field(&flat).unwrap(), Gradient(1));
    }
}
