use super::{PolyError, Polynomial, Rational};
use num_traits::{One, Zero};

/// Square rational matrix acting by `x_i -> sum_j m[i][j] * x_j`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LinearMap {
    rows: Vec<Vec<Rational>>,
}

impl LinearMap {
    pub fn new(rows: Vec<Vec<Rational>>) -> Result<Self, PolyError> {
        let n = rows.len();
        if n == 0 || rows.iter().any(|r| r.len() != n) {
            return Err(PolyError::MatrixShape(n));
        }
        Ok(LinearMap { rows })
    }

    pub fn identity(n: usize) -> Self {
        let rows =
            (0..n).map(|i| (0..n).map(|j| if i == j { Rational::one() } else { Rational::zero() }).collect()).collect();
        LinearMap { rows }
    }

    pub fn dim(&self) -> usize {
        self.rows.len()
    }

    pub fn rows(&self) -> &[Vec<Rational>] {
        &self.rows
    }

    pub fn determinant(&self) -> Rational {
        let n = self.dim();
        let mut a = self.rows.clone();
        let mut det = Rational::one();
        for col in 0..n {
            let Some(piv) = (col..n).find(|&r| !a[r][col].is_zero()) else {
                return Rational::zero();
            };
            if piv != col {
                a.swap(piv, col);
                det = -det;
            }
            let p = a[col][col].clone();
            det *= &p;
            for r in col + 1..n {
                if a[r][col].is_zero() {
                    continue;
                }
                let factor = &a[r][col] / &p;
                for c in col..n {
                    let delta = &factor * &a[col][c];
                    a[r][c] -= delta;
                }
            }
        }
        det
    }

    /// `f o L`.
    pub fn apply(&self, f: &Polynomial) -> Result<Polynomial, PolyError> {
        let n = f.nvars();
        if self.dim() != n {
            return Err(PolyError::MatrixShape(n));
        }
        if self.determinant().is_zero() {
            return Err(PolyError::SingularMatrix);
        }
        let images: Vec<Polynomial> = self
            .rows
            .iter()
            .map(|row| {
                let mut img = Polynomial::zero(n);
                for (j, c) in row.iter().enumerate() {
                    img += &Polynomial::var(n, j).scale(c);
                }
                img
            })
            .collect();
        f.compose(&images)
    }
}
