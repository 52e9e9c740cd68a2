//! Slant N-hedron tiles `a[x_r1 ... x_r(N-1)]`, the shift operator and
//! flat tiles (shift orbits).
//!
//! A slant tile is the simplex with vertices `a, a*x_r1, a*x_r1*x_r2, ...`.
//! The one axis not listed is the *missing* axis; it names the tile's
//! gradient `e / x_missing`.
//!
//! Shifting multiplies the base by the first direction and rotates the
//! directions, appending the missing axis. Every shift raises the base's
//! exponent sum by exactly one, and `N` shifts translate by `e`. A flat
//! tile is a whole shift orbit; its canonical representative is the orbit
//! element whose base has exponent sum `0`.

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::monomial::{axis_name, letter_axis, uses_letters, Monomial};

/// Gradient of a slant tile, `e / x_axis`, identified with the missing axis.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Gradient(pub usize);

impl Gradient {
    pub fn axis(self) -> usize {
        self.0
    }

    /// Human-readable form in dimension `n`, e.g. `e/x`.
    pub fn display(self, n: usize) -> String {
        format!("e/{}", axis_name(n, self.0))
    }
}

/// Which neighbour of a local trajectory: the `s_U` side or the `s_D` side.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Slot {
    U,
    D,
}

impl Slot {
    pub fn toggle(self) -> Self {
        match self {
            Slot::U => Slot::D,
            Slot::D => Slot::U,
        }
    }
}

impl fmt::Display for Slot {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Slot::U => "U",
            Slot::D => "D",
        })
    }
}

impl FromStr for Slot {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.trim() {
            "U" | "u" => Ok(Slot::U),
            "D" | "d" => Ok(Slot::D),
            other => Err(Error::Parse(format!("expected U or D, got {other:?}"))),
        }
    }
}

/// `a[x_r1 ... x_r(N-1)]`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SlantTile {
    base: Monomial,
    dirs: Vec<usize>,
}

impl SlantTile {
    pub fn new(base: Monomial, dirs: Vec<usize>) -> Result<Self> {
        let n = base.dim();
        if dirs.len() + 1 != n {
            return Err(Error::InvalidTile(format!(
                "expected {} directions in dimension {n}, got {}",
                n - 1,
                dirs.len()
            )));
        }
        let mut seen = vec![false; n];
        for &d in &dirs {
            if d >= n || seen[d] {
                return Err(Error::InvalidTile(format!(
                    "directions {dirs:?} repeat or leave 0..{n}"
                )));
            }
            seen[d] = true;
        }
        Ok(Self { base, dirs })
    }

    fn raw(base: Monomial, dirs: Vec<usize>) -> Self {
        Self { base, dirs }
    }

    pub fn dim(&self) -> usize {
        self.base.dim()
    }

    pub fn base(&self) -> &Monomial {
        &self.base
    }

    pub fn dirs(&self) -> &[usize] {
        &self.dirs
    }

    pub fn missing_axis(&self) -> usize {
        let n = self.dim();
        // Axes are 0..n, so the missing one is the gap in the sum.
        n * (n - 1) / 2 - self.dirs.iter().sum::<usize>()
    }

    /// `D s = e / x_missing`.
    pub fn gradient(&self) -> Gradient {
        Gradient(self.missing_axis())
    }

    pub fn vertices(&self) -> Vec<Monomial> {
        let mut out = Vec::with_capacity(self.dim());
        let mut v = self.base.clone();
        out.push(v.clone());
        for &d in &self.dirs {
            v = v.times_axis(d, 1);
            out.push(v.clone());
        }
        out
    }

    /// The shift operator `a[x_r1 .. x_r(N-1)] -> a*x_r1[x_r2 .. x_rN]`.
    pub fn shift(&self) -> Self {
        let m = self.missing_axis();
        let mut dirs = Vec::with_capacity(self.dirs.len());
        dirs.extend_from_slice(&self.dirs[1..]);
        dirs.push(m);
        Self::raw(self.base.times_axis(self.dirs[0], 1), dirs)
    }

    /// Inverse of [`shift`](Self::shift).
    pub fn unshift(&self) -> Self {
        let m = self.missing_axis();
        let mut dirs = Vec::with_capacity(self.dirs.len());
        dirs.push(m);
        dirs.extend_from_slice(&self.dirs[..self.dirs.len() - 1]);
        Self::raw(self.base.times_axis(m, -1), dirs)
    }

    /// `shift^k` for any integer `k`, in O(N) regardless of `|k|`.
    pub fn shift_by(&self, k: i64) -> Self {
        let n = self.dim() as i64;
        let (q, r) = (k.div_euclid(n), k.rem_euclid(n));
        let mut s = self.translate_e(q);
        for _ in 0..r {
            s = s.shift();
        }
        s
    }

    /// Translation by `e^k`.
    pub fn translate_e(&self, k: i64) -> Self {
        Self::raw(self.base.times_e(k), self.dirs.clone())
    }

    /// `s_U = a[x_r1 .. x_r(N-2) x_rN]`: the last direction is replaced by
    /// the missing axis. This is an involution.
    pub fn up_tile(&self) -> Self {
        let mut dirs = self.dirs.clone();
        let last = dirs.len() - 1;
        dirs[last] = self.missing_axis();
        Self::raw(self.base.clone(), dirs)
    }

    /// `s_D = a*x_r1[x_r2 .. x_r(N-1) x_r1]`. Keeps the gradient.
    pub fn down_tile(&self) -> Self {
        let mut dirs = Vec::with_capacity(self.dirs.len());
        dirs.extend_from_slice(&self.dirs[1..]);
        dirs.push(self.dirs[0]);
        Self::raw(self.base.times_axis(self.dirs[0], 1), dirs)
    }

    pub fn neighbor_tile(&self, slot: Slot) -> Self {
        match slot {
            Slot::U => self.up_tile(),
            Slot::D => self.down_tile(),
        }
    }

    pub fn flat(&self) -> FlatTile {
        FlatTile(self.shift_by(-self.base.degree()))
    }

    /// Parse a literal whose dimension is implied by its direction list,
    /// e.g. `zw[xyz]`, `xw2z2[xzw]` or `x1x3^-1[x1x2x3x4]`.
    pub fn parse(s: &str) -> Result<Self> {
        let compact: String = s.chars().filter(|c| !c.is_whitespace()).collect();
        let (mono, rest) = compact
            .split_once('[')
            .ok_or_else(|| Error::Parse(format!("missing '[' in tile {s:?}")))?;
        let inner = rest
            .strip_suffix(']')
            .ok_or_else(|| Error::Parse(format!("missing ']' in tile {s:?}")))?;
        let dirs = parse_dirs(inner)?;
        let n = dirs.len() + 1;
        let base = Monomial::parse(mono, n)?;
        Self::new(base, dirs)
    }

    /// Parse and check the dimension.
    pub fn parse_in(s: &str, n: usize) -> Result<Self> {
        let t = Self::parse(s)?;
        if t.dim() != n {
            return Err(Error::DimensionMismatch {
                expected: n,
                found: t.dim(),
            });
        }
        Ok(t)
    }
}

fn parse_dirs(inner: &str) -> Result<Vec<usize>> {
    if inner.contains(|c: char| c.is_ascii_digit()) {
        let tokens: Vec<&str> = inner.split('x').skip(1).collect();
        if !inner.starts_with('x') || tokens.is_empty() {
            return Err(Error::Parse(format!("bad direction list {inner:?}")));
        }
        let n = tokens.len() + 1;
        return tokens
            .iter()
            .map(|t| match t.parse::<usize>() {
                Ok(k) if (1..=n).contains(&k) => Ok(k - 1),
                _ => Err(Error::Parse(format!("bad axis x{t} for dimension {n}"))),
            })
            .collect();
    }
    let n = inner.chars().count() + 1;
    if !uses_letters(n) {
        return Err(Error::Parse(format!(
            "direction list {inner:?} implies dimension {n}; use x1..x{n} names"
        )));
    }
    inner
        .chars()
        .map(|c| {
            letter_axis(n, c)
                .ok_or_else(|| Error::Parse(format!("unknown axis {c:?} in [{inner}]")))
        })
        .collect()
}

impl fmt::Display for SlantTile {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let n = self.dim();
        write!(f, "{}[", self.base)?;
        for &d in &self.dirs {
            f.write_str(&axis_name(n, d))?;
        }
        f.write_str("]")
    }
}

impl FromStr for SlantTile {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Self::parse(s)
    }
}

/// A shift orbit of slant tiles, held by its canonical representative
/// (base exponent sum zero).
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct FlatTile(SlantTile);

/// One lift of a flat tile together with the flats of its `s_U` and `s_D`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Neighbor {
    pub lift: SlantTile,
    pub u_flat: FlatTile,
    pub d_flat: FlatTile,
}

impl Neighbor {
    pub fn flat_on(&self, slot: Slot) -> &FlatTile {
        match slot {
            Slot::U => &self.u_flat,
            Slot::D => &self.d_flat,
        }
    }

    /// The slot through which this lift reaches `flat`, if any.
    pub fn slot_of(&self, flat: &FlatTile) -> Option<Slot> {
        if &self.u_flat == flat {
            Some(Slot::U)
        } else if &self.d_flat == flat {
            Some(Slot::D)
        } else {
            None
        }
    }
}

impl FlatTile {
    pub fn rep(&self) -> &SlantTile {
        &self.0
    }

    pub fn dim(&self) -> usize {
        self.0.dim()
    }

    /// The `N` lift classes `shift^0(rep) .. shift^(N-1)(rep)`; their
    /// gradients run through every axis once.
    pub fn lifts(&self) -> Vec<SlantTile> {
        let mut out = Vec::with_capacity(self.dim());
        let mut s = self.0.clone();
        for _ in 0..self.dim() {
            let next = s.shift();
            out.push(s);
            s = next;
        }
        out
    }

    pub fn lift_with_gradient(&self, g: Gradient) -> SlantTile {
        self.lifts()
            .into_iter()
            .find(|s| s.gradient() == g)
            .expect("every gradient occurs among the lifts")
    }

    /// Local trajectories of all lifts, in lift order. Consecutive entries
    /// chain: `d_flat` of lift k is `u_flat` of lift k+1 (cyclically).
    pub fn neighbors(&self) -> Vec<Neighbor> {
        self.lifts()
            .into_iter()
            .map(|lift| Neighbor {
                u_flat: lift.up_tile().flat(),
                d_flat: lift.down_tile().flat(),
                lift,
            })
            .collect()
    }

    /// The lift whose local trajectory is `{prev, next}` (in either order).
    pub fn lift_from_pair(&self, prev: &FlatTile, next: &FlatTile) -> Result<SlantTile> {
        if prev == next {
            return Err(Error::NoLift);
        }
        self.neighbors()
            .into_iter()
            .find(|nb| {
                (&nb.u_flat == prev && &nb.d_flat == next)
                    || (&nb.u_flat == next && &nb.d_flat == prev)
            })
            .map(|nb| nb.lift)
            .ok_or(Error::NoLift)
    }

    /// Whether `other` is one of the `N` flats reachable through a slot.
    pub fn is_adjacent(&self, other: &FlatTile) -> bool {
        self.neighbors()
            .iter()
            .any(|nb| nb.slot_of(other).is_some())
    }

    pub fn parse(s: &str) -> Result<Self> {
        Ok(SlantTile::parse(s)?.flat())
    }
}

impl fmt::Display for FlatTile {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.0.fmt(f)
    }
}

impl From<&SlantTile> for FlatTile {
    fn from(s: &SlantTile) -> Self {
        s.flat()
    }
}
