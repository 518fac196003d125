//! Matrices with polynomial entries and their determinants.

use super::poly::{Poly, Ring};
use crate::error::{Error, Result};

/// Largest size handled by cofactor expansion in [`Matrix::determinant`].
pub const COFACTOR_LIMIT: usize = 4;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Matrix {
    ring: Ring,
    rows: Vec<Vec<Poly>>,
}

impl Matrix {
    /// Rows must have equal length and live in `ring`.
    pub fn new(ring: &Ring, rows: Vec<Vec<Poly>>) -> Result<Matrix> {
        let width = rows.first().map_or(0, Vec::len);
        for row in &rows {
            if row.len() != width {
                return Err(Error::NotSquare {
                    rows: rows.len(),
                    cols: row.len(),
                });
            }
            if row.iter().any(|p| p.ring() != ring) {
                return Err(Error::RingMismatch);
            }
        }
        Ok(Matrix {
            ring: ring.clone(),
            rows,
        })
    }

    pub fn from_fn(ring: &Ring, n: usize, mut f: impl FnMut(usize, usize) -> Poly) -> Matrix {
        let rows = (0..n).map(|i| (0..n).map(|j| f(i, j)).collect()).collect();
        Matrix {
            ring: ring.clone(),
            rows,
        }
    }

    pub fn nrows(&self) -> usize {
        self.rows.len()
    }

    pub fn ncols(&self) -> usize {
        self.rows.first().map_or(0, Vec::len)
    }

    pub fn get(&self, i: usize, j: usize) -> &Poly {
        &self.rows[i][j]
    }

    fn require_square(&self) -> Result<usize> {
        if self.nrows() != self.ncols() {
            return Err(Error::NotSquare {
                rows: self.nrows(),
                cols: self.ncols(),
            });
        }
        Ok(self.nrows())
    }

    /// Submatrix without the listed rows and columns.
    pub fn without(&self, rows: &[usize], cols: &[usize]) -> Matrix {
        let kept = self
            .rows
            .iter()
            .enumerate()
            .filter(|(i, _)| !rows.contains(i))
            .map(|(_, row)| {
                row.iter()
                    .enumerate()
                    .filter(|(j, _)| !cols.contains(j))
                    .map(|(_, p)| p.clone())
                    .collect()
            })
            .collect();
        Matrix {
            ring: self.ring.clone(),
            rows: kept,
        }
    }

    /// Signed cofactor `(-1)^(i+j)` times the minor without row `i` and column `j`.
    pub fn cofactor(&self, i: usize, j: usize) -> Result<Poly> {
        let minor = self.without(&[i], &[j]).determinant()?;
        Ok(if (i + j).is_multiple_of(2) { minor } else { -minor })
    }

    /// Cofactor expansion up to size 4, fraction-free elimination beyond.
    pub fn determinant(&self) -> Result<Poly> {
        let n = self.require_square()?;
        if n <= COFACTOR_LIMIT {
            Ok(self.laplace(n))
        } else {
            self.bareiss()
        }
    }

    /// Determinant by first-row cofactor expansion.
    pub fn determinant_by_cofactors(&self) -> Result<Poly> {
        let n = self.require_square()?;
        Ok(self.laplace(n))
    }

    fn laplace(&self, n: usize) -> Poly {
        match n {
            0 => self.ring.one(),
            1 => self.rows[0][0].clone(),
            2 => &self.rows[0][0] * &self.rows[1][1] - &self.rows[0][1] * &self.rows[1][0],
            _ => {
                let mut acc = self.ring.zero();
                for j in 0..n {
                    if self.rows[0][j].is_zero() {
                        continue;
                    }
                    let term = &self.rows[0][j] * self.without(&[0], &[j]).laplace(n - 1);
                    acc = if j % 2 == 0 { acc + term } else { acc - term };
                }
                acc
            }
        }
    }

    /// Bareiss elimination: every intermediate entry is a minor, so each
    /// division by the previous pivot is exact.
    pub fn bareiss(&self) -> Result<Poly> {
        let n = self.require_square()?;
        if n == 0 {
            return Ok(self.ring.one());
        }
        let mut m = self.rows.clone();
        let mut negate = false;
        let mut prev = self.ring.one();
        for k in 0..n - 1 {
            if m[k][k].is_zero() {
                match (k + 1..n).find(|&i| !m[i][k].is_zero()) {
                    Some(i) => {
                        m.swap(k, i);
                        negate = !negate;
                    }
                    None => return Ok(self.ring.zero()),
                }
            }
            for i in k + 1..n {
                for j in k + 1..n {
                    let num = &m[i][j] * &m[k][k] - &m[i][k] * &m[k][j];
                    m[i][j] = num.div_exact(&prev)?;
                }
            }
            prev = m[k][k].clone();
        }
        let det = m[n - 1][n - 1].clone();
        Ok(if negate { -det } else { det })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::polyring::parse::parse_poly;
    use crate::polyring::scalar::Field;

    fn ring() -> Ring {
        Ring::new(&["a", "b", "r", "x", "y", "z", "w"], Field::Rational).unwrap()
    }

    fn p(s: &str) -> Poly {
        parse_poly(s, &ring()).unwrap()
    }

    #[test]
    fn diagonal_hessian_of_fermat() {
        let r = ring();
        let diag = ["6*x", "6*y", "6*z", "6*w"];
        let m = Matrix::from_fn(&r, 4, |i, j| if i == j { p(diag[i]) } else { r.zero() });
        assert_eq!(m.determinant().unwrap(), p("1296*x*y*z*w"));
        assert_eq!(m.bareiss().unwrap(), p("1296*x*y*z*w"));
    }

    #[test]
    fn symmetric_two_by_two() {
        let m = Matrix::new(&ring(), vec![vec![p("a"), p("r")], vec![p("r"), p("b")]]).unwrap();
        assert_eq!(m.determinant().unwrap(), p("a*b - r^2"));
    }

    #[test]
    fn repeated_rows_vanish() {
        let row = vec![p("x"), p("y + 1"), p("z"), p("w"), p("a*b"), p("r")];
        let other = vec![p("1"), p("2"), p("x^2"), p("0"), p("b"), p("3")];
        let rows = vec![row.clone(), other.clone(), row, other.clone(), other.clone(), other];
        let m = Matrix::new(&ring(), rows).unwrap();
        assert!(m.determinant().unwrap().is_zero());
    }

    #[test]
    fn non_square_rejected() {
        let m = Matrix::new(&ring(), vec![vec![p("x"), p("y")]]).unwrap();
        assert_eq!(m.determinant(), Err(Error::NotSquare { rows: 1, cols: 2 }));
    }

    #[test]
    fn bareiss_with_pivoting_matches_expansion() {
        let m = Matrix::new(
            &ring(),
            vec![
                vec![p("0"), p("x"), p("1"), p("y")],
                vec![p("a"), p("0"), p("b"), p("1")],
                vec![p("r"), p("z"), p("0"), p("w")],
                vec![p("1"), p("a*x"), p("b - z"), p("0")],
            ],
        )
        .unwrap();
        assert_eq!(m.bareiss().unwrap(), m.determinant_by_cofactors().unwrap());
    }
}
