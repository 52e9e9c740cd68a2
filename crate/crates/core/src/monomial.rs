//! Lattice points of Z^N written multiplicatively, `x^l y^m z^n w^k`.
//!
//! Axis names are `x y z` for N = 3, `x y z w` for N = 4 and `x1 .. xN`
//! otherwise. The parser accepts the compact fraction style used in
//! drawings (`z2/(x3yw)`, `x/y3`, `1/(x2w)`) as well as explicit `^`
//! exponents (`x^-1y^2z`). Printing always uses the `^` form.

use std::fmt;

use crate::error::{Error, Result};

const LETTERS3: [char; 3] = ['x', 'y', 'z'];
const LETTERS4: [char; 4] = ['x', 'y', 'z', 'w'];

/// Whether axes of dimension `n` are named by single letters.
pub(crate) fn uses_letters(n: usize) -> bool {
    n == 3 || n == 4
}

/// Printable name of axis `i` in dimension `n`.
pub fn axis_name(n: usize, i: usize) -> String {
    match n {
        3 => LETTERS3[i].to_string(),
        4 => LETTERS4[i].to_string(),
        _ => format!("x{}", i + 1),
    }
}

pub(crate) fn letter_axis(n: usize, c: char) -> Option<usize> {
    match n {
        3 => LETTERS3.iter().position(|&l| l == c),
        4 => LETTERS4.iter().position(|&l| l == c),
        _ => None,
    }
}

/// A point of the integer lattice in multiplicative notation.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Monomial {
    exps: Vec<i64>,
}

impl Monomial {
    pub fn new(exps: Vec<i64>) -> Result<Self> {
        if exps.len() < 2 {
            return Err(Error::InvalidDimension(exps.len()));
        }
        Ok(Self { exps })
    }

    pub(crate) fn from_vec(exps: Vec<i64>) -> Self {
        debug_assert!(exps.len() >= 2);
        Self { exps }
    }

    /// The monomial `1`.
    pub fn identity(n: usize) -> Self {
        Self::from_vec(vec![0; n])
    }

    /// The product of all variables, `e = x1 x2 ... xN`.
    pub fn e(n: usize) -> Self {
        Self::from_vec(vec![1; n])
    }

    /// The single variable `x_axis`.
    pub fn axis(n: usize, axis: usize) -> Self {
        let mut exps = vec![0; n];
        exps[axis] = 1;
        Self::from_vec(exps)
    }

    pub fn dim(&self) -> usize {
        self.exps.len()
    }

    pub fn exponents(&self) -> &[i64] {
        &self.exps
    }

    /// Sum of exponents.
    pub fn degree(&self) -> i64 {
        self.exps.iter().sum()
    }

    pub fn min_exponent(&self) -> i64 {
        *self.exps.iter().min().expect("non-empty")
    }

    fn check(&self, other: &Self) -> Result<()> {
        if self.dim() != other.dim() {
            return Err(Error::DimensionMismatch {
                expected: self.dim(),
                found: other.dim(),
            });
        }
        Ok(())
    }

    pub fn mul(&self, other: &Self) -> Result<Self> {
        self.check(other)?;
        Ok(Self::from_vec(
            self.exps
                .iter()
                .zip(&other.exps)
                .map(|(a, b)| a + b)
                .collect(),
        ))
    }

    pub fn div(&self, other: &Self) -> Result<Self> {
        self.check(other)?;
        Ok(Self::from_vec(
            self.exps
                .iter()
                .zip(&other.exps)
                .map(|(a, b)| a - b)
                .collect(),
        ))
    }

    /// Multiply by `x_axis^k`.
    pub fn times_axis(&self, axis: usize, k: i64) -> Self {
        let mut exps = self.exps.clone();
        exps[axis] += k;
        Self::from_vec(exps)
    }

    /// Multiply by `e^k`.
    pub fn times_e(&self, k: i64) -> Self {
        Self::from_vec(self.exps.iter().map(|a| a + k).collect())
    }

    /// `true` when `self = other * (monomial with non-negative exponents)`.
    pub fn divisible_by(&self, other: &Self) -> bool {
        self.dim() == other.dim() && self.exps.iter().zip(&other.exps).all(|(a, b)| a >= b)
    }

    /// Parse in a known dimension.
    pub fn parse(s: &str, n: usize) -> Result<Self> {
        if n < 2 {
            return Err(Error::InvalidDimension(n));
        }
        let compact: String = s.chars().filter(|c| !c.is_whitespace()).collect();
        if compact.is_empty() {
            return Err(Error::Parse("empty monomial".into()));
        }
        let (num, den) = match compact.split_once('/') {
            Some((num, den)) => {
                let den = match den.strip_prefix('(') {
                    Some(inner) => inner
                        .strip_suffix(')')
                        .ok_or_else(|| Error::Parse(format!("unbalanced parenthesis in {s:?}")))?,
                    None => den,
                };
                (num, Some(den))
            }
            None => (compact.as_str(), None),
        };
        let mut exps = parse_product(num, n)?;
        if let Some(den) = den {
            for (e, d) in exps.iter_mut().zip(parse_product(den, n)?) {
                *e -= d;
            }
        }
        Ok(Self::from_vec(exps))
    }
}

fn parse_product(s: &str, n: usize) -> Result<Vec<i64>> {
    let mut exps = vec![0i64; n];
    if s == "1" {
        return Ok(exps);
    }
    if s.is_empty() {
        return Err(Error::Parse("empty factor".into()));
    }
    let chars: Vec<char> = s.chars().collect();
    let mut i = 0;
    while i < chars.len() {
        let axis = if uses_letters(n) {
            let axis = letter_axis(n, chars[i])
                .ok_or_else(|| Error::Parse(format!("unknown axis {:?} in {s:?}", chars[i])))?;
            i += 1;
            axis
        } else {
            if chars[i] != 'x' {
                return Err(Error::Parse(format!("expected axis x<k> in {s:?}")));
            }
            i += 1;
            let start = i;
            while i < chars.len() && chars[i].is_ascii_digit() {
                i += 1;
            }
            let idx: usize = chars[start..i]
                .iter()
                .collect::<String>()
                .parse()
                .map_err(|_| Error::Parse(format!("missing axis index in {s:?}")))?;
            if idx == 0 || idx > n {
                return Err(Error::Parse(format!(
                    "axis x{idx} out of range for dimension {n}"
                )));
            }
            idx - 1
        };
        let caret = i < chars.len() && chars[i] == '^';
        if caret {
            i += 1;
        }
        // Without '^', indexed axes would swallow the exponent digits.
        let may_have_exp = caret || uses_letters(n);
        let start = i;
        if may_have_exp && i < chars.len() && chars[i] == '-' {
            i += 1;
        }
        while may_have_exp && i < chars.len() && chars[i].is_ascii_digit() {
            i += 1;
        }
        let text: String = chars[start..i].iter().collect();
        let k = if text.is_empty() {
            if caret {
                return Err(Error::Parse(format!("missing exponent after '^' in {s:?}")));
            }
            1
        } else {
            text.parse::<i64>()
                .map_err(|_| Error::Parse(format!("bad exponent {text:?} in {s:?}")))?
        };
        exps[axis] += k;
    }
    Ok(exps)
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let n = self.dim();
        if self.exps.iter().all(|&e| e == 0) {
            return f.write_str("1");
        }
        for (i, &e) in self.exps.iter().enumerate() {
            match e {
                0 => {}
                1 => write!(f, "{}", axis_name(n, i))?,
                _ => write!(f, "{}^{}", axis_name(n, i), e)?,
            }
        }
        Ok(())
    }
}
