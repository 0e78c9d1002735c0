use num_complex::Complex64;

use super::Polynomial;
use crate::error::{Error, Result};

/// Dense matrix of polynomials, row-major.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PolyMatrix {
    rows: usize,
    cols: usize,
    rank: usize,
    entries: Vec<Polynomial>,
}

impl PolyMatrix {
    pub fn from_rows(rank: usize, rows: Vec<Vec<Polynomial>>) -> Result<Self> {
        let nrows = rows.len();
        let ncols = rows.first().map_or(0, Vec::len);
        let mut entries = Vec::with_capacity(nrows * ncols);
        for row in rows {
            if row.len() != ncols {
                return Err(Error::DimensionMismatch {
                    expected: ncols,
                    got: row.len(),
                });
            }
            for p in row {
                if p.rank() != rank {
                    return Err(Error::RankMismatch {
                        left: rank,
                        right: p.rank(),
                    });
                }
                entries.push(p);
            }
        }
        Ok(PolyMatrix {
            rows: nrows,
            cols: ncols,
            rank,
            entries,
        })
    }

    pub fn from_fn(
        rank: usize,
        rows: usize,
        cols: usize,
        mut f: impl FnMut(usize, usize) -> Polynomial,
    ) -> Self {
        let mut entries = Vec::with_capacity(rows * cols);
        for i in 0..rows {
            for j in 0..cols {
                entries.push(f(i, j));
            }
        }
        PolyMatrix {
            rows,
            cols,
            rank,
            entries,
        }
    }

    pub fn identity(rank: usize, size: usize) -> Self {
        PolyMatrix::from_fn(rank, size, size, |i, j| {
            if i == j {
                Polynomial::one(rank)
            } else {
                Polynomial::zero(rank)
            }
        })
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn get(&self, i: usize, j: usize) -> &Polynomial {
        &self.entries[i * self.cols + j]
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(Polynomial::is_zero)
    }

    pub fn mul(&self, other: &PolyMatrix) -> Result<PolyMatrix> {
        if self.cols != other.rows {
            return Err(Error::DimensionMismatch {
                expected: self.cols,
                got: other.rows,
            });
        }
        Ok(PolyMatrix::from_fn(
            self.rank,
            self.rows,
            other.cols,
            |i, j| {
                let mut acc = Polynomial::zero(self.rank);
                for k in 0..self.cols {
                    let (a, b) = (self.get(i, k), other.get(k, j));
                    if !a.is_zero() && !b.is_zero() {
                        acc = &acc + &(a * b);
                    }
                }
                acc
            },
        ))
    }

    /// Entry-wise substitution of every variable.
    pub fn substitute_all(&self, images: &[Polynomial]) -> Result<PolyMatrix> {
        let entries = self
            .entries
            .iter()
            .map(|p| p.substitute_all(images))
            .collect::<Result<Vec<_>>>()?;
        Ok(PolyMatrix {
            rows: self.rows,
            cols: self.cols,
            rank: images.first().map_or(self.rank, Polynomial::rank),
            entries,
        })
    }

    pub fn evaluate(&self, point: &[Complex64]) -> Result<Vec<Vec<Complex64>>> {
        (0..self.rows)
            .map(|i| {
                (0..self.cols)
                    .map(|j| self.get(i, j).evaluate(point))
                    .collect()
            })
            .collect()
    }

    fn require_square(&self) -> Result<()> {
        if self.rows == self.cols {
            Ok(())
        } else {
            Err(Error::NotSquare {
                rows: self.rows,
                cols: self.cols,
            })
        }
    }

    /// Exact determinant: cofactor expansion up to 4x4, fraction-free
    /// elimination above.
    pub fn det(&self) -> Result<Polynomial> {
        if self.rows <= 4 {
            self.det_cofactor()
        } else {
            self.det_bareiss()
        }
    }

    /// Laplace expansion along the first row, skipping zero entries.
    pub fn det_cofactor(&self) -> Result<Polynomial> {
        self.require_square()?;
        let cols: Vec<usize> = (0..self.cols).collect();
        Ok(self.cofactor(0, &cols))
    }

    fn cofactor(&self, row: usize, cols: &[usize]) -> Polynomial {
        match cols.len() {
            0 => Polynomial::one(self.rank),
            1 => self.get(row, cols[0]).clone(),
            2 => {
                let ad = self.get(row, cols[0]) * self.get(row + 1, cols[1]);
                let bc = self.get(row, cols[1]) * self.get(row + 1, cols[0]);
                &ad - &bc
            }
            _ => {
                let mut acc = Polynomial::zero(self.rank);
                for (k, &c) in cols.iter().enumerate() {
                    let e = self.get(row, c);
                    if e.is_zero() {
                        continue;
                    }
                    let rest: Vec<usize> = cols.iter().copied().filter(|&x| x != c).collect();
                    let minor = self.cofactor(row + 1, &rest);
                    if minor.is_zero() {
                        continue;
                    }
                    let t = e * &minor;
                    acc = if k % 2 == 0 { &acc + &t } else { &acc - &t };
                }
                acc
            }
        }
    }

    /// Bareiss fraction-free elimination with row pivoting on nonzero entries.
    /// Every division is exact.
    pub fn det_bareiss(&self) -> Result<Polynomial> {
        self.require_square()?;
        let n = self.rows;
        if n == 0 {
            return Ok(Polynomial::one(self.rank));
        }
        let mut m: Vec<Vec<Polynomial>> = (0..n)
            .map(|i| (0..n).map(|j| self.get(i, j).clone()).collect())
            .collect();
        let mut negate = false;
        let one = Polynomial::one(self.rank);
        let mut prev = one.clone();
        for k in 0..n - 1 {
            if m[k][k].is_zero() {
                // prefer the sparsest available pivot
                let pick = (k + 1..n)
                    .filter(|&i| !m[i][k].is_zero())
                    .min_by_key(|&i| m[i][k].len());
                match pick {
                    Some(i) => {
                        m.swap(k, i);
                        negate = !negate;
                    }
                    None => return Ok(Polynomial::zero(self.rank)),
                }
            }
            for i in k + 1..n {
                for j in k + 1..n {
                    let num = &(&m[i][j] * &m[k][k]) - &(&m[i][k] * &m[k][j]);
                    m[i][j] = if prev == one {
                        num
                    } else {
                        num.div_exact(&prev)
                            .expect("Bareiss step must divide exactly")
                    };
                }
                m[i][k] = Polynomial::zero(self.rank);
            }
            prev = m[k][k].clone();
        }
        let d = m[n - 1][n - 1].clone();
        Ok(if negate { -d } else { d })
    }
}
