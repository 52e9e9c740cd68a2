//! Exact projection of lattice points onto `H = { sum of coordinates = 0 }`.

use num_rational::Ratio;

use crate::monomial::Monomial;

/// A point of `H`, stored as integers scaled by `N`: coordinate `i` is
/// `scaled[i] / N`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct HPoint {
    scaled: Vec<i64>,
}

impl HPoint {
    pub fn dim(&self) -> usize {
        self.scaled.len()
    }

    pub fn scaled(&self) -> &[i64] {
        &self.scaled
    }

    pub fn coords(&self) -> Vec<Ratio<i64>> {
        let n = self.dim() as i64;
        self.scaled.iter().map(|&c| Ratio::new(c, n)).collect()
    }

    pub fn sub(&self, other: &HPoint) -> HPoint {
        HPoint {
            scaled: self
                .scaled
                .iter()
                .zip(&other.scaled)
                .map(|(a, b)| a - b)
                .collect(),
        }
    }

    pub fn add(&self, other: &HPoint) -> HPoint {
        HPoint {
            scaled: self
                .scaled
                .iter()
                .zip(&other.scaled)
                .map(|(a, b)| a + b)
                .collect(),
        }
    }

    pub fn squared_norm(&self) -> Ratio<i64> {
        let n = self.dim() as i64;
        Ratio::new(self.scaled.iter().map(|c| c * c).sum(), n * n)
    }

    pub fn squared_distance(&self, other: &HPoint) -> Ratio<i64> {
        self.sub(other).squared_norm()
    }

    /// Coordinates as floats. Only for output.
    pub fn to_f64(&self) -> Vec<f64> {
        let n = self.dim() as f64;
        self.scaled.iter().map(|&c| c as f64 / n).collect()
    }
}

/// `m - (deg m / N) e`.
pub fn project(m: &Monomial) -> HPoint {
    let n = m.dim() as i64;
    let deg = m.degree();
    HPoint {
        scaled: m.exponents().iter().map(|&a| n * a - deg).collect(),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn projection_examples() {
        let zero = project(&Monomial::identity(4));
        assert!(zero.coords().iter().all(|c| *c == Ratio::from_integer(0)));
        let x = project(&Monomial::axis(4, 0));
        assert_eq!(
            x.coords(),
            vec![
                Ratio::new(3, 4),
                Ratio::new(-1, 4),
                Ratio::new(-1, 4),
                Ratio::new(-1, 4)
            ]
        );
        assert_eq!(x.scaled().iter().sum::<i64>(), 0);
    }

    #[test]
    fn e_translation_is_invisible() {
        let m = Monomial::new(vec![2, -1, 5]).unwrap();
        assert_eq!(project(&m), project(&m.times_e(-7)));
    }

    #[test]
    fn unit_step_lengths() {
        // k distinct unit steps project to squared length k - k^2/N.
        let o = project(&Monomial::identity(4));
        let xy = project(&Monomial::new(vec![1, 1, 0, 0]).unwrap());
        assert_eq!(xy.squared_distance(&o), Ratio::from_integer(1));
        let x = project(&Monomial::axis(4, 0));
        assert_eq!(x.squared_distance(&o), Ratio::new(3, 4));
    }
}
