//! Tuples of nonnegative integers, Wronski matrices and Wronskians.
//!
//! Tuples are written largest entry first, `a = (a_n, …, a_0)`. The Wronski
//! matrix `W(k; a)` holds the derivatives of `t^{a_c}` at `t = 1`, so its
//! entries are falling factorials.

use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::matrix::QMatrix;
use crate::Rational;

#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct NNTuple(Vec<usize>);

impl NNTuple {
    pub fn new(entries: Vec<usize>) -> Self {
        NNTuple(entries)
    }

    pub fn empty() -> Self {
        NNTuple(Vec::new())
    }

    pub fn entries(&self) -> &[usize] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// Strictly descending, largest entry first.
    pub fn is_descending(&self) -> bool {
        self.0.windows(2).all(|w| w[0] > w[1])
    }

    pub fn is_continuous(&self) -> bool {
        self.0.windows(2).all(|w| w[0] == w[1] + 1)
    }

    /// `a ⊕ b`. The result need not be descending.
    pub fn concat(&self, other: &NNTuple) -> NNTuple {
        NNTuple(self.0.iter().chain(&other.0).copied().collect())
    }

    pub fn even_odd_parts(&self) -> (NNTuple, NNTuple) {
        let (even, odd): (Vec<usize>, Vec<usize>) = self.0.iter().partition(|&&v| v % 2 == 0);
        (NNTuple(even), NNTuple(odd))
    }

    pub fn shifted_down(&self, by: usize) -> NNTuple {
        NNTuple(self.0.iter().map(|v| v - by).collect())
    }

    /// Compressed notation, e.g. `(9:7)⊕(4)` for `(9,8,7,4)`.
    pub fn notation(&self) -> String {
        if self.0.is_empty() {
            return "()".into();
        }
        let mut runs: Vec<(usize, usize)> = Vec::new();
        for &v in &self.0 {
            match runs.last_mut() {
                Some((_, lo)) if *lo == v + 1 => *lo = v,
                _ => runs.push((v, v)),
            }
        }
        runs.iter()
            .map(|&(hi, lo)| if hi == lo { format!("({hi})") } else { format!("({hi}:{lo})") })
            .collect::<Vec<_>>()
            .join("⊕")
    }
}

impl From<Vec<usize>> for NNTuple {
    fn from(v: Vec<usize>) -> Self {
        NNTuple(v)
    }
}

impl fmt::Display for NNTuple {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(|v| v.to_string()).collect();
        write!(f, "({})", parts.join(","))
    }
}

/// The continuous tuple `(n2, n2 − 1, …, n1)`.
pub fn range_tuple(n2: i64, n1: i64) -> Result<NNTuple> {
    if n2 < n1 || n1 < 0 {
        return Err(Error::BadRange { n2, n1 });
    }
    Ok(NNTuple((n1 as usize..=n2 as usize).rev().collect()))
}

/// `a (a − 1) ⋯ (a − r + 1)`, which is zero when `r > a`.
pub fn falling_factorial(a: usize, r: usize) -> BigInt {
    if r > a {
        return BigInt::zero();
    }
    (a - r + 1..=a).fold(BigInt::one(), |acc, v| acc * v)
}

/// `W(k; a)`: entry `(r, c)` is the `r`-th derivative of `t^{a_c}` at `t = 1`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WronskiMatrix {
    rows: usize,
    tuple: NNTuple,
    entries: Vec<BigInt>,
}

impl WronskiMatrix {
    pub fn new(k: usize, a: &NNTuple) -> Self {
        let cols = a.len();
        let mut entries = Vec::with_capacity(k * cols);
        for r in 0..k {
            for &ac in a.entries() {
                entries.push(falling_factorial(ac, r));
            }
        }
        WronskiMatrix { rows: k, tuple: a.clone(), entries }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.tuple.len()
    }

    pub fn tuple(&self) -> &NNTuple {
        &self.tuple
    }

    pub fn entry(&self, r: usize, c: usize) -> &BigInt {
        &self.entries[r * self.cols() + c]
    }

    pub fn to_qmatrix(&self) -> QMatrix {
        QMatrix::from_fn(self.rows, self.cols(), |r, c| {
            Rational::from_integer(self.entry(r, c).clone())
        })
    }
}

pub fn wronski_matrix(k: usize, a: &NNTuple) -> WronskiMatrix {
    WronskiMatrix::new(k, a)
}

/// Closed form of `w(a) = det W(♯a; a)` for a descending tuple:
/// `(−1)^⌊(n+1)/2⌋ · ∏_{i<j} (a_j − a_i)`, indices counted from the
/// smallest entry so every factor is positive.
pub fn wronskian_closed(a: &NNTuple) -> Result<BigInt> {
    if !a.is_descending() {
        return Err(Error::NotDescending(a.to_string()));
    }
    let e = a.entries();
    let mut prod = BigInt::one();
    for i in 0..e.len() {
        for j in i + 1..e.len() {
            prod *= e[i] - e[j];
        }
    }
    if (e.len() / 2) % 2 == 1 {
        prod = -prod;
    }
    Ok(prod)
}

/// `det W(♯a; a)` by fraction-free elimination. Any tuple is accepted; a
/// repeated entry gives 0.
pub fn wronskian_direct(a: &NNTuple) -> BigInt {
    let det = wronski_matrix(a.len(), a)
        .to_qmatrix()
        .determinant()
        .expect("W(♯a; a) is square");
    debug_assert!(det.is_integer());
    det.to_integer()
}
