//! Lines, multiarrangements, coordinate changes and exponent pairs.

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::Rational;

/// A projective line `ker(a·x + b·y)`, stored as a normalized coprime pair.
///
/// Normal form: `gcd(|a|, |b|) = 1` and either `a > 0`, or `a = 0` and `b = 1`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct LineForm {
    a: BigInt,
    b: BigInt,
}

impl LineForm {
    pub fn new(a: BigInt, b: BigInt) -> Result<Self> {
        if a.is_zero() && b.is_zero() {
            return Err(Error::ZeroForm);
        }
        let g = a.gcd(&b);
        let (mut a, mut b) = (a / &g, b / &g);
        if a.is_negative() || (a.is_zero() && b.is_negative()) {
            a = -a;
            b = -b;
        }
        Ok(LineForm { a, b })
    }

    pub fn from_i64(a: i64, b: i64) -> Result<Self> {
        Self::new(BigInt::from(a), BigInt::from(b))
    }

    /// Normalizes a form with rational coefficients by clearing denominators.
    pub fn from_rational(a: &Rational, b: &Rational) -> Result<Self> {
        let l = a.denom().lcm(b.denom());
        let a = (a * Rational::from_integer(l.clone())).to_integer();
        let b = (b * Rational::from_integer(l)).to_integer();
        Self::new(a, b)
    }

    /// The line `ker(x)`.
    pub fn x() -> Self {
        LineForm { a: BigInt::one(), b: BigInt::zero() }
    }

    /// The line `ker(y)`.
    pub fn y() -> Self {
        LineForm { a: BigInt::zero(), b: BigInt::one() }
    }

    /// The line `ker(x - s·y)`.
    pub fn from_slope(s: &Rational) -> Self {
        Self::from_rational(&Rational::one(), &-s).expect("x - s·y is never the zero form")
    }

    pub fn a(&self) -> &BigInt {
        &self.a
    }

    pub fn b(&self) -> &BigInt {
        &self.b
    }

    /// The `s` with `α ∝ x − s·y`, or `None` for `ker(y)`.
    pub fn slope(&self) -> Option<Rational> {
        if self.a.is_zero() {
            None
        } else {
            Some(Rational::new(-self.b.clone(), self.a.clone()))
        }
    }

    /// Rewrites `α(x, y)` in the coordinates `(X, Y)^T = T (x, y)^T`.
    fn transformed(&self, inv: &[[Rational; 2]; 2]) -> LineForm {
        let a = Rational::from_integer(self.a.clone());
        let b = Rational::from_integer(self.b.clone());
        let na = &a * &inv[0][0] + &b * &inv[1][0];
        let nb = &a * &inv[0][1] + &b * &inv[1][1];
        LineForm::from_rational(&na, &nb).expect("invertible transforms keep forms nonzero")
    }
}

impl fmt::Display for LineForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fn term(c: &BigInt, var: char) -> String {
            if c.is_one() {
                var.to_string()
            } else if *c == -BigInt::one() {
                format!("-{var}")
            } else {
                format!("{c}{var}")
            }
        }
        match (self.a.is_zero(), self.b.is_zero()) {
            (true, _) => write!(f, "{}", term(&self.b, 'y')),
            (false, true) => write!(f, "{}", term(&self.a, 'x')),
            (false, false) => {
                let bt = term(&self.b.abs(), 'y');
                let sign = if self.b.is_negative() { '-' } else { '+' };
                write!(f, "{}{}{}", term(&self.a, 'x'), sign, bt)
            }
        }
    }
}

/// An invertible 2×2 change of coordinates `(X, Y)^T = T (x, y)^T`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Transform2 {
    m: [[Rational; 2]; 2],
}

impl Transform2 {
    pub fn new(m: [[Rational; 2]; 2]) -> Result<Self> {
        let t = Transform2 { m };
        if t.det().is_zero() {
            return Err(Error::SingularTransform);
        }
        Ok(t)
    }

    pub fn from_i64(m: [[i64; 2]; 2]) -> Result<Self> {
        let r = |v: i64| Rational::from_integer(BigInt::from(v));
        Self::new([[r(m[0][0]), r(m[0][1])], [r(m[1][0]), r(m[1][1])]])
    }

    pub fn identity() -> Self {
        Self::from_i64([[1, 0], [0, 1]]).unwrap()
    }

    pub fn entries(&self) -> &[[Rational; 2]; 2] {
        &self.m
    }

    pub fn det(&self) -> Rational {
        &self.m[0][0] * &self.m[1][1] - &self.m[0][1] * &self.m[1][0]
    }

    pub fn inverse(&self) -> Transform2 {
        let d = self.det();
        let m = &self.m;
        Transform2 {
            m: [
                [&m[1][1] / &d, -&m[0][1] / &d],
                [-&m[1][0] / &d, &m[0][0] / &d],
            ],
        }
    }
}

/// A multiarrangement `(A, m)`: distinct lines with positive multiplicities.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Multiarrangement {
    lines: Vec<LineForm>,
    mults: Vec<usize>,
}

impl Multiarrangement {
    pub fn new(lines: Vec<LineForm>, mults: Vec<usize>) -> Result<Self> {
        if lines.len() != mults.len() {
            return Err(Error::LengthMismatch { lines: lines.len(), mults: mults.len() });
        }
        if lines.is_empty() {
            return Err(Error::EmptyArrangement);
        }
        if let Some(i) = mults.iter().position(|&m| m == 0) {
            return Err(Error::NonPositiveMult { index: i, value: 0 });
        }
        for j in 1..lines.len() {
            if let Some(i) = lines[..j].iter().position(|l| *l == lines[j]) {
                return Err(Error::DuplicateLine { first: i, second: j });
            }
        }
        Ok(Multiarrangement { lines, mults })
    }

    /// Builds `x^{m1} y^{m2} ∏ (x − s_i y)^{m_i}`.
    pub fn from_slopes(m1: usize, m2: usize, rest: &[(Rational, usize)]) -> Result<Self> {
        let mut lines = vec![LineForm::x(), LineForm::y()];
        let mut mults = vec![m1, m2];
        for (s, m) in rest {
            lines.push(LineForm::from_slope(s));
            mults.push(*m);
        }
        Self::new(lines, mults)
    }

    /// Same as [`Multiarrangement::from_slopes`] with integer slopes.
    pub fn from_int_slopes(m1: usize, m2: usize, rest: &[(i64, usize)]) -> Result<Self> {
        let rest: Vec<_> = rest
            .iter()
            .map(|&(s, m)| (Rational::from_integer(BigInt::from(s)), m))
            .collect();
        Self::from_slopes(m1, m2, &rest)
    }

    pub fn lines(&self) -> &[LineForm] {
        &self.lines
    }

    pub fn mults(&self) -> &[usize] {
        &self.mults
    }

    /// Number of lines `|A|`.
    pub fn len(&self) -> usize {
        self.lines.len()
    }

    pub fn is_empty(&self) -> bool {
        self.lines.is_empty()
    }

    /// `|m|`, the total multiplicity.
    pub fn size(&self) -> usize {
        self.mults.iter().sum()
    }

    pub fn mult_of(&self, line: &LineForm) -> Option<usize> {
        self.lines.iter().position(|l| l == line).map(|i| self.mults[i])
    }

    /// Same lines, new multiplicities.
    pub fn with_mults(&self, mults: Vec<usize>) -> Result<Self> {
        Self::new(self.lines.clone(), mults)
    }

    /// `m(H) < |m|/2` for every line.
    pub fn is_balanced(&self) -> bool {
        let size = self.size();
        self.mults.iter().all(|&m| 2 * m < size)
    }

    /// `m ± δ_H`.
    pub fn add_delta_h(&self, line: &LineForm, sign: i8) -> Result<Self> {
        let i = self
            .lines
            .iter()
            .position(|l| l == line)
            .ok_or(Error::LineNotInArrangement)?;
        let mut mults = self.mults.clone();
        if sign >= 0 {
            mults[i] += 1;
        } else if mults[i] < 2 {
            return Err(Error::MultiplicityUnderflow);
        } else {
            mults[i] -= 1;
        }
        Ok(Multiarrangement { lines: self.lines.clone(), mults })
    }

    /// The image of the arrangement under the coordinate change `T`.
    pub fn apply_transform(&self, t: &Transform2) -> Multiarrangement {
        let inv = t.inverse();
        let lines = self.lines.iter().map(|l| l.transformed(&inv.m)).collect();
        Multiarrangement { lines, mults: self.mults.clone() }
    }

    /// Whether the first two lines are `ker(x)` and `ker(y)`.
    pub fn is_xy_normalized(&self) -> bool {
        self.lines.len() >= 2 && self.lines[0] == LineForm::x() && self.lines[1] == LineForm::y()
    }

    /// Moves the first two lines onto `ker(x)` and `ker(y)`.
    ///
    /// The transform `T` has the first two forms as its rows, so every other
    /// line becomes `x − s·y` with `s` rational.
    pub fn normalize_to_xy(&self) -> Result<(Multiarrangement, Transform2)> {
        if self.lines.len() < 2 {
            return Err(Error::TooFewLines(self.lines.len()));
        }
        if self.is_xy_normalized() {
            return Ok((self.clone(), Transform2::identity()));
        }
        let r = |v: &BigInt| Rational::from_integer(v.clone());
        let (l1, l2) = (&self.lines[0], &self.lines[1]);
        let t = Transform2::new([[r(&l1.a), r(&l1.b)], [r(&l2.a), r(&l2.b)]])
            .expect("distinct projective lines give an invertible transform");
        Ok((self.apply_transform(&t), t))
    }

    /// Slopes `s_3, …, s_n` of the lines after the first two, for an
    /// arrangement in x/y normal form.
    pub fn slopes(&self) -> Result<Vec<Rational>> {
        if !self.is_xy_normalized() {
            return Err(Error::NotNormalized);
        }
        Ok(self.lines[2..]
            .iter()
            .map(|l| l.slope().expect("only ker(y) lacks a slope"))
            .collect())
    }

    pub fn from_json(text: &str) -> Result<Self> {
        let file: ArrangementFile = serde_json::from_str(text)?;
        file.into_arrangement()
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(&ArrangementFile::from(self)).expect("plain data serializes")
    }
}

impl fmt::Display for Multiarrangement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, (l, m)) in self.lines.iter().zip(&self.mults).enumerate() {
            if i > 0 {
                write!(f, " ")?;
            }
            let base = l.to_string();
            let base = if base.len() > 1 && !(base == "x" || base == "y") {
                format!("({base})")
            } else {
                base
            };
            if *m == 1 {
                write!(f, "{base}")?;
            } else {
                write!(f, "{base}^{m}")?;
            }
        }
        Ok(())
    }
}

/// Builds a multiarrangement from raw integer pairs, normalizing each form.
pub fn normalize_arrangement(raw_lines: &[(i64, i64)], mults: &[i64]) -> Result<Multiarrangement> {
    if raw_lines.len() != mults.len() {
        return Err(Error::LengthMismatch { lines: raw_lines.len(), mults: mults.len() });
    }
    let lines = raw_lines
        .iter()
        .map(|&(a, b)| LineForm::from_i64(a, b))
        .collect::<Result<Vec<_>>>()?;
    let mults = mults
        .iter()
        .enumerate()
        .map(|(i, &m)| {
            if m < 1 {
                Err(Error::NonPositiveMult { index: i, value: m })
            } else {
                Ok(m as usize)
            }
        })
        .collect::<Result<Vec<_>>>()?;
    Multiarrangement::new(lines, mults)
}

/// On-disk arrangement format: `{"lines": [[a,b],...], "mults": [m,...]}`.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct ArrangementFile {
    pub lines: Vec<[i64; 2]>,
    #[serde(default)]
    pub mults: Vec<i64>,
}

impl ArrangementFile {
    pub fn into_arrangement(self) -> Result<Multiarrangement> {
        let raw: Vec<(i64, i64)> = self.lines.iter().map(|p| (p[0], p[1])).collect();
        normalize_arrangement(&raw, &self.mults)
    }

    /// Parsed lines only; multiplicities may be absent (sweep skeletons).
    pub fn line_forms(&self) -> Result<Vec<LineForm>> {
        let lines = self
            .lines
            .iter()
            .map(|p| LineForm::from_i64(p[0], p[1]))
            .collect::<Result<Vec<_>>>()?;
        for j in 1..lines.len() {
            if let Some(i) = lines[..j].iter().position(|l| *l == lines[j]) {
                return Err(Error::DuplicateLine { first: i, second: j });
            }
        }
        Ok(lines)
    }
}

impl From<&Multiarrangement> for ArrangementFile {
    fn from(a: &Multiarrangement) -> Self {
        use num_traits::ToPrimitive;
        ArrangementFile {
            lines: a
                .lines
                .iter()
                .map(|l| [l.a.to_i64().unwrap_or(i64::MAX), l.b.to_i64().unwrap_or(i64::MAX)])
                .collect(),
            mults: a.mults.iter().map(|&m| m as i64).collect(),
        }
    }
}

/// The exponents `(d1, d2)` with `d1 ≤ d2`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct ExponentPair {
    pub d1: usize,
    pub d2: usize,
}

impl ExponentPair {
    pub fn new(a: usize, b: usize) -> Self {
        ExponentPair { d1: a.min(b), d2: a.max(b) }
    }

    /// `Δ = d2 − d1`.
    pub fn delta(&self) -> usize {
        self.d2 - self.d1
    }
}

impl fmt::Display for ExponentPair {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {})", self.d1, self.d2)
    }
}

/// Coefficients of `θ = x^{m1}·f·∂x − y^{m2}·g·∂y` of degree `e`, where
/// `f = Σ f_j x^{e−m1−j} y^j` and `g = Σ g_j x^{e−m2−j} y^j`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DerivationCoeffs {
    pub degree: usize,
    pub f: Vec<Rational>,
    pub g: Vec<Rational>,
}

impl DerivationCoeffs {
    pub fn is_zero(&self) -> bool {
        self.f.iter().chain(&self.g).all(|c| c.is_zero())
    }

    /// Coefficients of `θ(x)` and `θ(y)` as homogeneous polynomials of
    /// degree `e`, indexed by the power of `y`.
    pub fn components(&self, m1: usize, m2: usize) -> (Vec<Rational>, Vec<Rational>) {
        let e = self.degree;
        let mut p = vec![Rational::zero(); e + 1];
        let mut q = vec![Rational::zero(); e + 1];
        for (j, c) in self.f.iter().enumerate() {
            debug_assert!(e >= m1);
            p[j] = c.clone();
        }
        for (j, c) in self.g.iter().enumerate() {
            q[m2 + j] = -c.clone();
        }
        (p, q)
    }
}
