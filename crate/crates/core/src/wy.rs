//! Wakefield–Yuzvinsky matrices.
//!
//! For `Q = x^{m1} y^{m2} ∏_{i≥3} (x − s_i y)^{m_i}` and a degree `e`, a
//! derivation `θ = x^{m1} f ∂x − y^{m2} g ∂y` lies in `D(A, m)_e` exactly when
//! the coefficient vector `(f_0, …, f_{e−m1}, g_0, …, g_{e−m2})` is in the
//! kernel of `M_WY(A, m; e)`. Block `L_i` has one row per derivative order
//! `k < m_i` of `θ(x − s_i y)` at `(s_i, 1)`:
//!
//! * f-part column `j`: `(e−j)!/(e−j−k)! · s_i^{e−j−k}`
//! * g-part column `j`: `s_i · (e−m2−j)!/(e−m2−j−k)! · s_i^{e−m2−j−k}`
//!
//! with entries zero whenever the exponent would be negative. In the square
//! case `e = |m|/2 − 1` the matrix factors entrywise as `P ∘ W`, where `P`
//! holds pure powers of the slopes and `W` is slope-independent.

use std::collections::HashMap;
use std::fmt::Write as _;

use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::matrix::{BlockShape, QMatrix};
use crate::model::Multiarrangement;
use crate::tuples::falling_factorial;
use crate::Rational;

#[derive(Clone, Debug)]
pub struct WYInstance {
    pub arrangement: Multiarrangement,
    pub slopes: Vec<Rational>,
    pub e: usize,
    pub matrix: QMatrix,
    pub shape: BlockShape,
}

/// `s^r` for any integer `r`; `s` must be nonzero when `r < 0`.
pub(crate) fn rational_pow(s: &Rational, r: i64) -> Rational {
    let mag = r.unsigned_abs() as u32;
    let p = Rational::new(s.numer().pow(mag), s.denom().pow(mag));
    if r >= 0 {
        p
    } else {
        p.recip()
    }
}

fn part_widths(m1: usize, m2: usize, e: usize) -> (usize, usize) {
    let f = if e >= m1 { e - m1 + 1 } else { 0 };
    let g = if e >= m2 { e - m2 + 1 } else { 0 };
    (f, g)
}

/// Builds `M_WY` from raw data; lines need not be distinct here, which lets
/// symbolic evaluation substitute arbitrary values for a slope.
pub(crate) fn wy_matrix_raw(
    m1: usize,
    m2: usize,
    blocks: &[(Rational, usize)],
    e: usize,
) -> (QMatrix, BlockShape) {
    let (f_cols, g_cols) = part_widths(m1, m2, e);
    let shape = BlockShape { row_blocks: blocks.iter().map(|b| b.1).collect(), f_cols, g_cols };
    let mut m = QMatrix::zeros(shape.rows(), shape.cols());
    let mut row = 0;
    for (s, mi) in blocks {
        let powers: Vec<Rational> = (0..=e as i64 + 1).map(|r| rational_pow(s, r)).collect();
        for k in 0..*mi {
            for j in 0..f_cols {
                let top = e - j;
                if k <= top {
                    let v = Rational::from_integer(falling_factorial(top, k)) * &powers[top - k];
                    m.set(row, j, v);
                }
            }
            for j in 0..g_cols {
                let top = e - m2 - j;
                if k <= top {
                    let v = Rational::from_integer(falling_factorial(top, k)) * &powers[top - k + 1];
                    m.set(row, f_cols + j, v);
                }
            }
            row += 1;
        }
    }
    (m, shape)
}

fn blocks_of(a: &Multiarrangement) -> Result<Vec<(Rational, usize)>> {
    let slopes = a.slopes()?;
    Ok(slopes.into_iter().zip(a.mults()[2..].iter().copied()).collect())
}

/// `M_WY(A, m; e)` for an arrangement whose first two lines are `ker(x)`,
/// `ker(y)`.
pub fn build_wy(a: &Multiarrangement, e: usize) -> Result<WYInstance> {
    let blocks = blocks_of(a)?;
    let (matrix, shape) = wy_matrix_raw(a.mults()[0], a.mults()[1], &blocks, e);
    Ok(WYInstance {
        arrangement: a.clone(),
        slopes: blocks.into_iter().map(|b| b.0).collect(),
        e,
        matrix,
        shape,
    })
}

/// `e = |m|/2 − 1`, after checking that the square construction applies.
fn square_degree(a: &Multiarrangement) -> Result<usize> {
    if !a.is_xy_normalized() {
        return Err(Error::NotNormalized);
    }
    let size = a.size();
    if size % 2 == 1 {
        return Err(Error::OddSize(size));
    }
    if !a.is_balanced() {
        return Err(Error::Unbalanced);
    }
    Ok(size / 2 - 1)
}

pub fn build_square_wy(a: &Multiarrangement) -> Result<WYInstance> {
    let e = square_degree(a)?;
    let inst = build_wy(a, e)?;
    assert_eq!(inst.matrix.rows(), inst.matrix.cols());
    Ok(inst)
}

/// The power component `P(A, m)`; entries `s^r` with negative `r` are kept.
pub fn build_p(a: &Multiarrangement) -> Result<QMatrix> {
    let e = square_degree(a)? as i64;
    let (m1, m2) = (a.mults()[0] as i64, a.mults()[1] as i64);
    let blocks = blocks_of(a)?;
    let f_cols = (e - m1 + 1) as usize;
    let g_cols = (e - m2 + 1) as usize;
    let rows: Vec<Vec<Rational>> = blocks
        .iter()
        .flat_map(|(s, mi)| {
            (0..*mi as i64).map(move |k| {
                let f = (0..f_cols as i64).map(|j| rational_pow(s, e - j - k));
                let g = (0..g_cols as i64).map(|j| s * rational_pow(s, e - m2 - j - k));
                f.chain(g).collect()
            })
        })
        .collect();
    Ok(QMatrix::from_rows(rows))
}

/// The Wronski component `W(A, m)`, independent of the slopes.
pub fn build_w(a: &Multiarrangement) -> Result<QMatrix> {
    let e = square_degree(a)?;
    let (m1, m2) = (a.mults()[0], a.mults()[1]);
    let f_top: Vec<usize> = (m1..=e).rev().collect();
    let g_top: Vec<usize> = (0..=e - m2).rev().collect();
    let rows: Vec<Vec<Rational>> = a.mults()[2..]
        .iter()
        .flat_map(|&mi| {
            let cols: Vec<usize> = f_top.iter().chain(&g_top).copied().collect();
            (0..mi).map(move |k| {
                cols.iter().map(|&top| Rational::from_integer(falling_factorial(top, k))).collect()
            })
        })
        .collect();
    Ok(QMatrix::from_rows(rows))
}

/// Whether `M_WY = P ∘ W` entrywise.
pub fn check_factorization(a: &Multiarrangement) -> Result<bool> {
    let m = build_square_wy(a)?.matrix;
    let pw = build_p(a)?.hadamard(&build_w(a)?)?;
    Ok(m == pw)
}

fn require_square(inst: &WYInstance) -> Result<()> {
    if !inst.matrix.is_square() {
        return Err(Error::NotSquare { rows: inst.matrix.rows(), cols: inst.matrix.cols() });
    }
    Ok(())
}

/// Calls `visit` with every column partition `(B_3, …, B_n)`, `|B_i| = widths[i]`,
/// each block ascending.
pub fn for_each_column_partition(
    widths: &[usize],
    ncols: usize,
    mut visit: impl FnMut(&[Vec<usize>]),
) {
    fn rec(
        widths: &[usize],
        remaining: &[usize],
        acc: &mut Vec<Vec<usize>>,
        visit: &mut dyn FnMut(&[Vec<usize>]),
    ) {
        let Some((&w, rest)) = widths.split_first() else {
            visit(acc);
            return;
        };
        let mut choice = Vec::with_capacity(w);
        choose(remaining, w, 0, &mut choice, &mut |chosen: &[usize]| {
            let left: Vec<usize> = remaining.iter().copied().filter(|c| !chosen.contains(c)).collect();
            acc.push(chosen.to_vec());
            rec(rest, &left, acc, visit);
            acc.pop();
        });
    }
    fn choose(
        pool: &[usize],
        k: usize,
        start: usize,
        cur: &mut Vec<usize>,
        f: &mut dyn FnMut(&[usize]),
    ) {
        if cur.len() == k {
            f(cur);
            return;
        }
        let need = k - cur.len();
        for i in start..pool.len() {
            if pool.len() - i < need {
                break;
            }
            cur.push(pool[i]);
            choose(pool, k, i + 1, cur, f);
            cur.pop();
        }
    }
    if widths.iter().sum::<usize>() != ncols {
        return;
    }
    let all: Vec<usize> = (0..ncols).collect();
    rec(widths, &all, &mut Vec::new(), &mut visit);
}

/// Sign of the permutation listing the blocks one after another.
pub fn partition_sign(blocks: &[Vec<usize>]) -> i32 {
    let seq: Vec<usize> = blocks.iter().flatten().copied().collect();
    let mut inversions = 0usize;
    for i in 0..seq.len() {
        for j in i + 1..seq.len() {
            if seq[i] > seq[j] {
                inversions += 1;
            }
        }
    }
    if inversions.is_multiple_of(2) {
        1
    } else {
        -1
    }
}

/// `det M_WY` as `Σ_β sign(β) ∏_i d(L_i, B_i)` over all column partitions.
pub fn laplace_expansion_det(inst: &WYInstance) -> Result<Rational> {
    require_square(inst)?;
    let ranges = inst.shape.block_ranges();
    let row_sets: Vec<Vec<usize>> = ranges.iter().map(|r| r.clone().collect()).collect();
    let mut cache: HashMap<(usize, Vec<usize>), Rational> = HashMap::new();
    let mut total = Rational::zero();
    for_each_column_partition(&inst.shape.row_blocks, inst.matrix.cols(), |blocks| {
        let mut term = Rational::one();
        for (i, b) in blocks.iter().enumerate() {
            let d = cache
                .entry((i, b.clone()))
                .or_insert_with(|| inst.matrix.minor(&row_sets[i], b).expect("valid selection"));
            if d.is_zero() {
                term = Rational::zero();
                break;
            }
            term *= &*d;
        }
        if !term.is_zero() {
            if partition_sign(blocks) < 0 {
                total -= term;
            } else {
                total += term;
            }
        }
    });
    Ok(total)
}

/// Product of the minors on consecutive column blocks of widths `m_3, …, m_n`.
pub fn diagonal_minor_product(inst: &WYInstance) -> Result<Rational> {
    require_square(inst)?;
    let mut start = 0;
    let mut prod = Rational::one();
    for range in inst.shape.block_ranges() {
        let rows: Vec<usize> = range.clone().collect();
        let cols: Vec<usize> = (start..start + rows.len()).collect();
        start += rows.len();
        prod *= inst.matrix.minor(&rows, &cols)?;
    }
    Ok(prod)
}

/// Text rendering with block labels and the f|g split marked.
pub fn render_blocks(m: &QMatrix, shape: &BlockShape, labels: &[String]) -> String {
    let cells: Vec<Vec<String>> =
        (0..m.rows()).map(|r| m.row(r).iter().map(|v| v.to_string()).collect()).collect();
    let width = cells.iter().flatten().map(|s| s.chars().count()).max().unwrap_or(1);
    let label_width = labels.iter().map(|s| s.chars().count()).max().unwrap_or(0);
    let mut out = String::new();
    for (b, range) in shape.block_ranges().into_iter().enumerate() {
        for (k, r) in range.enumerate() {
            let label = if k == 0 { labels.get(b).map(String::as_str).unwrap_or("") } else { "" };
            let _ = write!(out, "{label:<label_width$} [");
            for (c, cell) in cells[r].iter().enumerate() {
                if c == shape.f_cols && c > 0 {
                    out.push_str(" |");
                }
                let _ = write!(out, " {cell:>width$}");
            }
            out.push_str(" ]\n");
        }
    }
    out
}

impl WYInstance {
    pub fn block_labels(&self) -> Vec<String> {
        self.slopes
            .iter()
            .zip(&self.arrangement.mults()[2..])
            .enumerate()
            .map(|(i, (s, m))| format!("L{} s={s} m={m}", i + 3))
            .collect()
    }

    pub fn render(&self) -> String {
        render_blocks(&self.matrix, &self.shape, &self.block_labels())
    }
}
