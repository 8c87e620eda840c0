//! Hypothesis checks for the vanishing and classification results on `Δ`.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};
use serde::Serialize;

use crate::error::{Error, Result};
use crate::model::Multiarrangement;
use crate::symbolic::{det_wy_polynomial, Factorization, IntPolynomial, SymbolicTemplate, TemplateSlope};
use crate::Rational;

/// A partition `I1 ⊔ I2 = {3, …, n}` (1-based line indices) along which both
/// `m1 + Σ_{I1} m_i` and `m2 + Σ_{I2} m_i` equal `|m|/2`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct MainTheoremCertificate {
    pub i1: Vec<usize>,
    pub i2: Vec<usize>,
    pub half: usize,
}

fn integer_slopes(a: &Multiarrangement) -> Option<Vec<BigInt>> {
    a.slopes().ok()?.into_iter().map(|s| s.is_integer().then(|| s.to_integer())).collect()
}

/// The hypotheses other than the partition itself.
fn slope_hypotheses(a: &Multiarrangement) -> Option<Vec<BigInt>> {
    if a.len() < 4 {
        return None;
    }
    let slopes = integer_slopes(a)?;
    let minus_one = -BigInt::one();
    if slopes.iter().any(|s| s.is_zero() || *s == minus_one) {
        return None;
    }
    for i in 0..slopes.len() {
        for j in i + 1..slopes.len() {
            if !slopes[i].gcd(&slopes[j]).is_one() {
                return None;
            }
        }
    }
    let (size, m) = (a.size(), a.mults());
    if size % 2 == 1 || 2 * (m[0] + m[1]) <= size {
        return None;
    }
    Some(slopes)
}

fn partition_ok(a: &Multiarrangement, slopes: &[BigInt], i1: &[usize], i2: &[usize]) -> bool {
    let m = a.mults();
    let half = a.size() / 2;
    let s1: usize = i1.iter().map(|&i| m[i - 1]).sum();
    let s2: usize = i2.iter().map(|&i| m[i - 1]).sum();
    !i1.is_empty()
        && !i2.is_empty()
        && m[0] + s1 == half
        && m[1] + s2 == half
        && i2.iter().all(|&i| !slopes[i - 3].is_one())
}

/// Searches all partitions, smallest bitmask (bit 0 for line 3) first.
pub fn main_theorem_applies(a: &Multiarrangement) -> Option<MainTheoremCertificate> {
    let slopes = slope_hypotheses(a)?;
    let k = a.len() - 2;
    for mask in 1u64..(1u64 << k) - 1 {
        let (i1, i2): (Vec<usize>, Vec<usize>) = (3..=a.len()).partition(|&i| mask >> (i - 3) & 1 == 1);
        if partition_ok(a, &slopes, &i1, &i2) {
            return Some(MainTheoremCertificate { i1, i2, half: a.size() / 2 });
        }
    }
    None
}

/// Checks every hypothesis against a given partition.
pub fn verify_certificate(a: &Multiarrangement, cert: &MainTheoremCertificate) -> bool {
    let Some(slopes) = slope_hypotheses(a) else {
        return false;
    };
    let mut all: Vec<usize> = cert.i1.iter().chain(&cert.i2).copied().collect();
    all.sort_unstable();
    all == (3..=a.len()).collect::<Vec<_>>()
        && cert.half * 2 == a.size()
        && partition_ok(a, &slopes, &cert.i1, &cert.i2)
}

/// `x^{m1} y^{m2} (x−y)^{m3} (x+y)^{m4}`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct B2Spec {
    pub m1: usize,
    pub m2: usize,
    pub m3: usize,
    pub m4: usize,
}

impl B2Spec {
    pub fn new(m1: usize, m2: usize, m3: usize, m4: usize) -> Self {
        B2Spec { m1, m2, m3, m4 }
    }

    pub fn size(&self) -> usize {
        self.m1 + self.m2 + self.m3 + self.m4
    }

    pub fn is_balanced(&self) -> bool {
        let top = self.m1.max(self.m2).max(self.m3).max(self.m4);
        2 * top < self.size()
    }

    /// `|m2 − m1|`.
    pub fn n1(&self) -> usize {
        self.m1.abs_diff(self.m2)
    }

    /// `|m4 − m3|`.
    pub fn n2(&self) -> usize {
        self.m3.abs_diff(self.m4)
    }

    pub fn arrangement(&self) -> Result<Multiarrangement> {
        Multiarrangement::from_int_slopes(self.m1, self.m2, &[(1, self.m3), (-1, self.m4)])
    }
}

/// Equal nonzero gaps force `Δ = 0`.
pub fn b2_equal_gap_delta_zero(spec: &B2Spec) -> bool {
    spec.n1() == spec.n2() && spec.n1() >= 1
}

/// Predicted `Δ` when `m3 = m4`.
pub fn b2_zero_gap_classification(spec: &B2Spec) -> Result<usize> {
    if spec.m3 != spec.m4 {
        return Err(Error::NotApplicable(format!("m3 = {} differs from m4 = {}", spec.m3, spec.m4)));
    }
    if !spec.is_balanced() {
        return Err(Error::NotApplicable("multiplicity is not balanced".into()));
    }
    let size = spec.size();
    if size % 2 == 1 {
        return Ok(1);
    }
    let e = size / 2 - 1;
    let odd = |v: usize| v % 2 == 1;
    Ok(if odd(spec.m1) && odd(spec.m2) && odd(e) { 2 } else { 0 })
}

/// Slopes `z` of `x^{m1} y^{m2} (x − s3 y)^{m3} (x − z y)^{m4}` where the
/// square WY determinant vanishes.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ZeroLocus {
    pub polynomial: IntPolynomial,
    /// All rational roots with multiplicity, ascending.
    pub roots: Vec<(Rational, usize)>,
    /// Roots other than `0` and `s3`, i.e. those giving an actual
    /// arrangement; exactly there `Δ ≥ 2`.
    pub valid_slopes: Vec<Rational>,
    /// Degrees (with exponent) of the square-free factors without rational
    /// roots.
    pub irrational_parts: Vec<(usize, usize)>,
}

pub fn finite_zero_locus(m: [usize; 4], s3: &Rational) -> Result<ZeroLocus> {
    let size: usize = m.iter().sum();
    if size % 2 == 1 {
        return Err(Error::OddSize(size));
    }
    if m.iter().all(|&v| v == 1) {
        return Err(Error::NotApplicable("multiplicity is identically 1".into()));
    }
    let template = SymbolicTemplate::new(
        m[0],
        m[1],
        vec![(TemplateSlope::Fixed(s3.clone()), m[2]), (TemplateSlope::Symbolic, m[3])],
    )?;
    let polynomial = det_wy_polynomial(&template)?;
    if polynomial.is_zero() {
        return Err(Error::IdenticallyZero);
    }
    let fact = Factorization::of(&polynomial)?;
    let roots = crate::symbolic::rational_roots(&polynomial)?;
    let valid_slopes =
        roots.iter().map(|r| r.0.clone()).filter(|r| !r.is_zero() && r != s3).collect();
    let irrational_parts =
        fact.rest.iter().map(|(p, k)| (p.degree().unwrap_or(0), *k)).collect();
    Ok(ZeroLocus { polynomial, roots, valid_slopes, irrational_parts })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exponents::exponents_wy;

    fn arr(m1: usize, m2: usize, rest: &[(i64, usize)]) -> Multiarrangement {
        Multiarrangement::from_int_slopes(m1, m2, rest).unwrap()
    }

    fn q(v: i64) -> Rational {
        Rational::from_integer(v.into())
    }

    #[test]
    fn main_example_certificate() {
        let a = arr(4, 8, &[(1, 3), (3, 2), (-5, 1), (2, 2)]);
        let cert = main_theorem_applies(&a).unwrap();
        assert_eq!(cert, MainTheoremCertificate { i1: vec![3, 4, 5], i2: vec![6], half: 10 });
        assert!(verify_certificate(&a, &cert));
        let bumped = a.with_mults(vec![5, 9, 3, 2, 1, 2]).unwrap();
        let again = main_theorem_applies(&bumped).unwrap();
        assert_eq!((again.i1, again.i2), (cert.i1, cert.i2));
    }

    #[test]
    fn main_rejections() {
        assert!(main_theorem_applies(&arr(2, 2, &[(1, 1), (-1, 3)])).is_none());
        // shared factor 2 between slopes 2 and 4
        assert!(main_theorem_applies(&arr(4, 8, &[(1, 3), (4, 2), (-5, 1), (2, 2)])).is_none());
        // three lines only
        assert!(main_theorem_applies(&arr(2, 2, &[(1, 2)])).is_none());
    }

    #[test]
    fn alternative_certificates() {
        let a = arr(4, 8, &[(1, 3), (3, 2), (-5, 1), (2, 2)]);
        let cert = |i1: Vec<usize>, i2: Vec<usize>| MainTheoremCertificate { i1, i2, half: 10 };
        assert!(verify_certificate(&a, &cert(vec![3, 5, 6], vec![4])));
        assert!(!verify_certificate(&a, &cert(vec![3, 4], vec![5, 6])));
        assert!(!verify_certificate(&a, &cert(vec![3, 4, 5], vec![])));
        // slope 1 may not sit in I2
        let b = arr(4, 4, &[(1, 2), (3, 2), (-5, 2)]);
        assert!(!verify_certificate(&b, &MainTheoremCertificate { i1: vec![4], i2: vec![3, 5], half: 8 }));
    }

    #[test]
    fn b2_equal_gap() {
        assert!(b2_equal_gap_delta_zero(&B2Spec::new(5, 9, 3, 7)));
        assert!(!b2_equal_gap_delta_zero(&B2Spec::new(3, 3, 3, 3)));
        let s = B2Spec::new(2, 4, 7, 5);
        assert!(b2_equal_gap_delta_zero(&s));
        assert_eq!(exponents_wy(&s.arrangement().unwrap()).unwrap().delta(), 0);
    }

    #[test]
    fn b2_zero_gap() {
        assert_eq!(b2_zero_gap_classification(&B2Spec::new(3, 3, 3, 3)).unwrap(), 2);
        assert_eq!(b2_zero_gap_classification(&B2Spec::new(3, 3, 2, 2)).unwrap(), 0);
        assert_eq!(b2_zero_gap_classification(&B2Spec::new(2, 4, 3, 3)).unwrap(), 0);
        assert_eq!(b2_zero_gap_classification(&B2Spec::new(2, 3, 3, 3)).unwrap(), 1);
        assert!(matches!(
            b2_zero_gap_classification(&B2Spec::new(2, 3, 3, 4)),
            Err(Error::NotApplicable(_))
        ));
        assert!(matches!(
            b2_zero_gap_classification(&B2Spec::new(9, 1, 2, 2)),
            Err(Error::NotApplicable(_))
        ));
    }

    #[test]
    fn zero_locus_2213() {
        let z = finite_zero_locus([2, 2, 1, 3], &q(1)).unwrap();
        assert_eq!(z.polynomial, IntPolynomial::from_i64(&[0, 0, -2, 0, 2]));
        assert_eq!(z.roots, vec![(q(-1), 1), (q(0), 2), (q(1), 1)]);
        assert_eq!(z.valid_slopes, vec![q(-1)]);
        assert!(z.irrational_parts.is_empty());
    }

    #[test]
    fn zero_locus_rejections() {
        assert!(matches!(finite_zero_locus([1, 1, 1, 1], &q(1)), Err(Error::NotApplicable(_))));
        assert_eq!(finite_zero_locus([2, 2, 1, 2], &q(1)), Err(Error::OddSize(7)));
    }

    #[test]
    fn zero_locus_3322() {
        let z = finite_zero_locus([3, 3, 2, 2], &q(1)).unwrap();
        for s in &z.valid_slopes {
            let a = Multiarrangement::from_slopes(3, 3, &[(q(1), 2), (s.clone(), 2)]).unwrap();
            assert!(exponents_wy(&a).unwrap().delta() >= 2);
        }
    }
}
