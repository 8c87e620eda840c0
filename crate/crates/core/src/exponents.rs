//! Exponents of a 2-multiarrangement.
//!
//! [`exponents`] tries the closed formulas first and falls back to a linear
//! scan over Wakefield–Yuzvinsky matrices. [`exponents_bruteforce`] solves the
//! divisibility conditions directly on `θ = p ∂x + q ∂y` and shares no code
//! with the WY path beyond exact linear algebra.

use std::fmt;

use num_bigint::BigInt;
use num_traits::{Signed, Zero};
use serde::Serialize;

use crate::error::{Error, Result};
use crate::matrix::QMatrix;
use crate::model::{DerivationCoeffs, ExponentPair, Multiarrangement};
use crate::wy::build_wy;
use crate::Rational;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub enum Method {
    UnbalancedFormula,
    SmallFormula,
    WYKernelSearch,
    BruteForce,
}

impl Method {
    pub fn as_str(&self) -> &'static str {
        match self {
            Method::UnbalancedFormula => "unbalanced",
            Method::SmallFormula => "small",
            Method::WYKernelSearch => "wy",
            Method::BruteForce => "brute",
        }
    }
}

impl fmt::Display for Method {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ExponentResult {
    pub pair: ExponentPair,
    /// A nonzero derivation of degree `d1`, in coordinates where the first two
    /// lines are `ker(x)` and `ker(y)`. Only the WY search produces one.
    pub witness: Option<DerivationCoeffs>,
    pub method: Method,
}

impl ExponentResult {
    pub fn delta(&self) -> usize {
        self.pair.delta()
    }
}

/// `(m(H), |m| − m(H))` when some line carries at least half the total.
pub fn exponents_unbalanced(a: &Multiarrangement) -> Result<ExponentPair> {
    let size = a.size();
    let top = *a.mults().iter().max().ok_or(Error::EmptyArrangement)?;
    if 2 * top < size {
        return Err(Error::NotUnbalanced);
    }
    Ok(ExponentPair::new(top, size - top))
}

/// `(|m| − n + 1, n − 1)` when `|m| ≤ 2n − 2`.
pub fn exponents_small(a: &Multiarrangement) -> Result<ExponentPair> {
    let (size, n) = (a.size(), a.len());
    let bound = (2 * n).saturating_sub(2);
    if n == 0 || size > bound {
        return Err(Error::NotSmall { size, bound });
    }
    Ok(ExponentPair::new(size + 1 - n, n - 1))
}

fn split_kernel_vector(v: Vec<Rational>, f_cols: usize, e: usize) -> DerivationCoeffs {
    let mut f = v;
    let g = f.split_off(f_cols);
    DerivationCoeffs { degree: e, f, g }
}

/// The smallest `e` at which `D(A, m)_e ≠ 0`, with a witness, for an
/// arrangement already in `x, y, …` form.
fn wy_scan(a: &Multiarrangement) -> Result<(usize, DerivationCoeffs)> {
    for e in 0..=a.size() {
        let inst = build_wy(a, e)?;
        let (rows, cols) = (inst.matrix.rows(), inst.matrix.cols());
        if cols == 0 {
            continue;
        }
        if cols <= rows && inst.matrix.rank() == cols {
            continue;
        }
        let v = inst.matrix.kernel_basis().into_iter().next().expect("nontrivial kernel");
        return Ok((e, split_kernel_vector(v, inst.shape.f_cols, e)));
    }
    unreachable!("a nonzero derivation exists in degree at most |m|/2")
}

pub fn exponents_wy(a: &Multiarrangement) -> Result<ExponentResult> {
    if a.is_empty() {
        return Err(Error::EmptyArrangement);
    }
    if a.len() == 1 {
        return Ok(ExponentResult {
            pair: ExponentPair::new(0, a.size()),
            witness: None,
            method: Method::WYKernelSearch,
        });
    }
    let (norm, _) = a.normalize_to_xy()?;
    let (d1, witness) = wy_scan(&norm)?;
    Ok(ExponentResult {
        pair: ExponentPair::new(d1, a.size() - d1),
        witness: Some(witness),
        method: Method::WYKernelSearch,
    })
}

fn binomial(n: usize, k: usize) -> BigInt {
    if k > n {
        return BigInt::zero();
    }
    let mut c = BigInt::from(1);
    for i in 0..k {
        c = c * (n - i) / (i + 1);
    }
    c
}

fn int_pow(b: &BigInt, e: usize) -> BigInt {
    num_traits::pow(b.clone(), e)
}

/// The linear conditions on `(p_0, …, p_e, q_0, …, q_e)` expressing
/// `α^μ | a·p + b·q` for every line, where `p = Σ p_i x^{e−i} y^i`.
pub fn divisibility_system(a: &Multiarrangement, e: usize) -> QMatrix {
    let mut rows = Vec::new();
    for (line, &mu) in a.lines().iter().zip(a.mults()) {
        let (la, lb) = (line.a(), line.b());
        let neg_a = -la;
        let along_x = la.abs() >= lb.abs();
        for k in 0..mu {
            // coefficient of t^k in x^{e-i} y^i at (b, -a) + t·d
            let coef = |i: usize| -> BigInt {
                if along_x {
                    if k > e - i {
                        return BigInt::zero();
                    }
                    binomial(e - i, k) * int_pow(lb, e - i - k) * int_pow(&neg_a, i)
                } else {
                    if k > i {
                        return BigInt::zero();
                    }
                    int_pow(lb, e - i) * binomial(i, k) * int_pow(&neg_a, i - k)
                }
            };
            let cs: Vec<BigInt> = (0..=e).map(coef).collect();
            let row: Vec<Rational> = cs
                .iter()
                .map(|c| Rational::from_integer(c * la))
                .chain(cs.iter().map(|c| Rational::from_integer(c * lb)))
                .collect();
            rows.push(row);
        }
    }
    if rows.is_empty() {
        return QMatrix::zeros(0, 2 * (e + 1));
    }
    QMatrix::from_rows(rows)
}

/// A basis of `D(A, m)_e` as pairs of coefficient vectors `(p, q)` of
/// `θ(x)`, `θ(y)`, indexed by the power of `y`.
pub fn derivation_space(a: &Multiarrangement, e: usize) -> Vec<(Vec<Rational>, Vec<Rational>)> {
    divisibility_system(a, e)
        .kernel_basis()
        .into_iter()
        .map(|mut v| {
            let q = v.split_off(e + 1);
            (v, q)
        })
        .collect()
}

pub fn exponents_bruteforce(a: &Multiarrangement) -> Result<ExponentResult> {
    if a.is_empty() {
        return Err(Error::EmptyArrangement);
    }
    for e in 0..=a.size() {
        let m = divisibility_system(a, e);
        if m.rank() < m.cols() {
            return Ok(ExponentResult {
                pair: ExponentPair::new(e, a.size() - e),
                witness: None,
                method: Method::BruteForce,
            });
        }
    }
    unreachable!("a nonzero derivation exists in degree at most |m|")
}

/// Exponents by the fastest applicable method.
pub fn exponents(a: &Multiarrangement) -> Result<ExponentResult> {
    if let Ok(pair) = exponents_unbalanced(a) {
        return Ok(ExponentResult { pair, witness: None, method: Method::UnbalancedFormula });
    }
    if let Ok(pair) = exponents_small(a) {
        return Ok(ExponentResult { pair, witness: None, method: Method::SmallFormula });
    }
    exponents_wy(a)
}

pub fn delta(a: &Multiarrangement) -> Result<usize> {
    Ok(exponents(a)?.delta())
}
