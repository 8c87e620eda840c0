//! Dense exact-rational matrices: rank, determinant, kernel, minors and the
//! Hadamard product.
//!
//! Elimination is fraction-free. Each row is first scaled by the lcm of its
//! denominators, which changes neither rank nor kernel and multiplies the
//! determinant by a known factor; Bareiss elimination then keeps every
//! intermediate value an integer minor of the scaled matrix.

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::Rational;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QMatrix {
    rows: usize,
    cols: usize,
    data: Vec<Rational>,
}

/// Row blocks `(m_3, …, m_n)` and the f-part / g-part column split.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BlockShape {
    pub row_blocks: Vec<usize>,
    pub f_cols: usize,
    pub g_cols: usize,
}

impl BlockShape {
    pub fn rows(&self) -> usize {
        self.row_blocks.iter().sum()
    }

    pub fn cols(&self) -> usize {
        self.f_cols + self.g_cols
    }

    /// Half-open row ranges of the blocks, top to bottom.
    pub fn block_ranges(&self) -> Vec<std::ops::Range<usize>> {
        let mut start = 0;
        self.row_blocks
            .iter()
            .map(|&h| {
                let r = start..start + h;
                start += h;
                r
            })
            .collect()
    }
}

impl QMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        QMatrix { rows, cols, data: vec![Rational::zero(); rows * cols] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m.set(i, i, Rational::one());
        }
        m
    }

    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> Rational) -> Self {
        let mut data = Vec::with_capacity(rows * cols);
        for r in 0..rows {
            for c in 0..cols {
                data.push(f(r, c));
            }
        }
        QMatrix { rows, cols, data }
    }

    /// Panics if the rows are ragged.
    pub fn from_rows(rows: Vec<Vec<Rational>>) -> Self {
        let cols = rows.first().map_or(0, |r| r.len());
        assert!(rows.iter().all(|r| r.len() == cols), "ragged rows");
        let n = rows.len();
        QMatrix { rows: n, cols, data: rows.into_iter().flatten().collect() }
    }

    pub fn from_i64_rows(rows: &[&[i64]]) -> Self {
        Self::from_rows(
            rows.iter()
                .map(|r| r.iter().map(|&v| Rational::from_integer(v.into())).collect())
                .collect(),
        )
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn get(&self, r: usize, c: usize) -> &Rational {
        &self.data[r * self.cols + c]
    }

    pub fn set(&mut self, r: usize, c: usize, v: Rational) {
        self.data[r * self.cols + c] = v;
    }

    pub fn row(&self, r: usize) -> &[Rational] {
        &self.data[r * self.cols..(r + 1) * self.cols]
    }

    pub fn mul_vec(&self, v: &[Rational]) -> Vec<Rational> {
        assert_eq!(v.len(), self.cols);
        (0..self.rows)
            .map(|r| self.row(r).iter().zip(v).map(|(a, b)| a * b).sum())
            .collect()
    }

    /// Entrywise product.
    pub fn hadamard(&self, other: &QMatrix) -> Result<QMatrix> {
        if self.rows != other.rows || self.cols != other.cols {
            return Err(Error::ShapeMismatch(self.rows, self.cols, other.rows, other.cols));
        }
        let data = self.data.iter().zip(&other.data).map(|(a, b)| a * b).collect();
        Ok(QMatrix { rows: self.rows, cols: self.cols, data })
    }

    pub fn submatrix(&self, row_ids: &[usize], col_ids: &[usize]) -> Result<QMatrix> {
        for &r in row_ids {
            if r >= self.rows {
                return Err(Error::IndexOutOfRange { index: r, bound: self.rows });
            }
        }
        for &c in col_ids {
            if c >= self.cols {
                return Err(Error::IndexOutOfRange { index: c, bound: self.cols });
            }
        }
        Ok(QMatrix::from_fn(row_ids.len(), col_ids.len(), |i, j| {
            self.get(row_ids[i], col_ids[j]).clone()
        }))
    }

    /// Determinant of the square submatrix on the given rows and columns.
    pub fn minor(&self, row_ids: &[usize], col_ids: &[usize]) -> Result<Rational> {
        if row_ids.len() != col_ids.len() {
            return Err(Error::NotSquareSelection { rows: row_ids.len(), cols: col_ids.len() });
        }
        self.submatrix(row_ids, col_ids)?.determinant()
    }

    pub fn rank(&self) -> usize {
        self.echelon().pivots.len()
    }

    pub fn determinant(&self) -> Result<Rational> {
        if !self.is_square() {
            return Err(Error::NotSquare { rows: self.rows, cols: self.cols });
        }
        if self.rows == 0 {
            return Ok(Rational::one());
        }
        let ech = self.echelon();
        if ech.pivots.len() < self.rows {
            return Ok(Rational::zero());
        }
        let last = ech.rows[self.rows - 1][self.cols - 1].clone();
        let det = Rational::new(last * ech.sign, ech.scale);
        Ok(det)
    }

    /// Basis of the right null space, ordered by free column, each vector
    /// scaled so its first nonzero coordinate is 1.
    pub fn kernel_basis(&self) -> Vec<Vec<Rational>> {
        let ech = self.echelon();
        let pivot_cols: Vec<usize> = ech.pivots.clone();
        let free: Vec<usize> = (0..self.cols).filter(|c| !pivot_cols.contains(c)).collect();
        free.iter()
            .map(|&fc| {
                let mut x = vec![Rational::zero(); self.cols];
                x[fc] = Rational::one();
                for (i, &pc) in pivot_cols.iter().enumerate().rev() {
                    let row = &ech.rows[i];
                    let mut acc = Rational::zero();
                    for j in pc + 1..self.cols {
                        if !row[j].is_zero() && !x[j].is_zero() {
                            acc += Rational::from_integer(row[j].clone()) * &x[j];
                        }
                    }
                    x[pc] = -acc / Rational::from_integer(row[pc].clone());
                }
                let lead = x.iter().find(|v| !v.is_zero()).cloned().expect("e_fc component is 1");
                x.iter().map(|v| v / &lead).collect()
            })
            .collect()
    }

    /// Fraction-free row echelon form of the row-scaled integer matrix.
    fn echelon(&self) -> Echelon {
        let mut scale = BigInt::one();
        let mut a: Vec<Vec<BigInt>> = (0..self.rows)
            .map(|r| {
                let row = self.row(r);
                let l = row.iter().fold(BigInt::one(), |acc, v| acc.lcm(v.denom()));
                scale *= &l;
                row.iter().map(|v| (v * Rational::from_integer(l.clone())).to_integer()).collect()
            })
            .collect();
        let (rows, cols) = (self.rows, self.cols);
        let mut pivots = Vec::new();
        let mut sign = BigInt::one();
        let mut prev = BigInt::one();
        let mut r = 0;
        for c in 0..cols {
            if r == rows {
                break;
            }
            // Largest magnitude wins; ties keep the first row.
            let mut best: Option<usize> = None;
            for i in r..rows {
                if !a[i][c].is_zero() && best.is_none_or(|b| a[i][c].abs() > a[b][c].abs()) {
                    best = Some(i);
                }
            }
            let Some(p) = best else { continue };
            if p != r {
                a.swap(p, r);
                sign = -sign;
            }
            let (top, bottom) = a.split_at_mut(r + 1);
            let pivot_row = &top[r];
            let pv = &pivot_row[c];
            for row in bottom.iter_mut() {
                let factor = std::mem::take(&mut row[c]);
                for j in c + 1..cols {
                    let v = pv * &row[j] - &factor * &pivot_row[j];
                    row[j] = if prev.is_one() { v } else { v / &prev };
                }
            }
            prev = pv.clone();
            pivots.push(c);
            r += 1;
        }
        Echelon { rows: a, pivots, sign, scale }
    }
}

struct Echelon {
    rows: Vec<Vec<BigInt>>,
    pivots: Vec<usize>,
    sign: BigInt,
    scale: BigInt,
}

impl fmt::Display for QMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let cells: Vec<String> = self.data.iter().map(|v| v.to_string()).collect();
        let width = cells.iter().map(|s| s.len()).max().unwrap_or(1);
        for r in 0..self.rows {
            let line: Vec<String> = (0..self.cols)
                .map(|c| format!("{:>width$}", cells[r * self.cols + c]))
                .collect();
            writeln!(f, "[{}]", line.join(" "))?;
        }
        Ok(())
    }
}
