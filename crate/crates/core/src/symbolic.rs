//! `det M_WY` as a polynomial in one free slope.
//!
//! The determinant is evaluated at enough integer nodes to pin down a
//! polynomial of the a priori degree bound and recovered by exact Newton
//! interpolation. Rational roots are found by Sturm isolation followed by a
//! simplest-rational test, which needs no integer factorization.

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::model::Multiarrangement;
use crate::wy::wy_matrix_raw;
use crate::Rational;

/// Integer polynomial in `z`, coefficients in ascending degree.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct IntPolynomial {
    coeffs: Vec<BigInt>,
}

impl IntPolynomial {
    pub fn new(mut coeffs: Vec<BigInt>) -> Self {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        IntPolynomial { coeffs }
    }

    pub fn from_i64(coeffs: &[i64]) -> Self {
        Self::new(coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    pub fn zero() -> Self {
        IntPolynomial { coeffs: Vec::new() }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn coefficients(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn leading(&self) -> Option<&BigInt> {
        self.coeffs.last()
    }

    pub fn eval(&self, z: &Rational) -> Rational {
        self.coeffs
            .iter()
            .rev()
            .fold(Rational::zero(), |acc, c| acc * z + Rational::from_integer(c.clone()))
    }

    pub fn eval_int(&self, z: &BigInt) -> BigInt {
        self.coeffs.iter().rev().fold(BigInt::zero(), |acc, c| acc * z + c)
    }

    /// Nonnegative gcd of the coefficients.
    pub fn content(&self) -> BigInt {
        self.coeffs.iter().fold(BigInt::zero(), |g, c| g.gcd(c))
    }

    pub fn derivative(&self) -> Self {
        Self::new(self.coeffs.iter().enumerate().skip(1).map(|(i, c)| c * i).collect())
    }

    fn to_rational(&self) -> Vec<Rational> {
        self.coeffs.iter().map(|c| Rational::from_integer(c.clone())).collect()
    }

    /// Square-free factored form over ℚ, e.g. `2 z^2 (z-1)(z+1)`.
    pub fn factored(&self) -> Result<String> {
        Factorization::of(self).map(|f| f.to_string())
    }
}

fn write_poly(f: &mut impl fmt::Write, coeffs: &[BigInt], compact: bool) -> fmt::Result {
    if coeffs.iter().all(|c| c.is_zero()) {
        return f.write_str("0");
    }
    let mut first = true;
    for (d, c) in coeffs.iter().enumerate().rev() {
        if c.is_zero() {
            continue;
        }
        let neg = c.is_negative();
        let mag = c.abs();
        match (first, neg, compact) {
            (true, true, _) => f.write_str("-")?,
            (true, false, _) => {}
            (false, true, true) => f.write_str("-")?,
            (false, false, true) => f.write_str("+")?,
            (false, true, false) => f.write_str(" - ")?,
            (false, false, false) => f.write_str(" + ")?,
        }
        first = false;
        let unit = mag.is_one();
        match d {
            0 => write!(f, "{mag}")?,
            _ => {
                if !unit {
                    write!(f, "{mag}")?;
                    if !compact {
                        f.write_str("*")?;
                    }
                }
                f.write_str("z")?;
                if d > 1 {
                    write!(f, "^{d}")?;
                }
            }
        }
    }
    Ok(())
}

impl fmt::Display for IntPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_poly(f, &self.coeffs, false)
    }
}

// Dense rational polynomials, ascending coefficients, no trailing zeros.

fn trim(mut v: Vec<Rational>) -> Vec<Rational> {
    while v.last().is_some_and(|c| c.is_zero()) {
        v.pop();
    }
    v
}

fn rp_eval(p: &[Rational], z: &Rational) -> Rational {
    p.iter().rev().fold(Rational::zero(), |acc, c| acc * z + c)
}

fn rp_deriv(p: &[Rational]) -> Vec<Rational> {
    trim(p.iter().enumerate().skip(1).map(|(i, c)| c * Rational::from_integer(i.into())).collect())
}

fn rp_divrem(a: &[Rational], b: &[Rational]) -> (Vec<Rational>, Vec<Rational>) {
    assert!(!b.is_empty(), "division by zero polynomial");
    let mut r = a.to_vec();
    let db = b.len() - 1;
    if r.len() < b.len() {
        return (Vec::new(), trim(r));
    }
    let mut q = vec![Rational::zero(); r.len() - db];
    let lb = &b[db];
    for i in (0..q.len()).rev() {
        let c = &r[i + db] / lb;
        if !c.is_zero() {
            for (j, bj) in b.iter().enumerate() {
                r[i + j] -= &c * bj;
            }
        }
        q[i] = c;
    }
    r.truncate(db);
    (trim(q), trim(r))
}

fn rp_monic(p: Vec<Rational>) -> Vec<Rational> {
    match p.last().cloned() {
        Some(l) => p.into_iter().map(|c| c / &l).collect(),
        None => p,
    }
}

fn rp_gcd(a: &[Rational], b: &[Rational]) -> Vec<Rational> {
    let (mut a, mut b) = (trim(a.to_vec()), trim(b.to_vec()));
    while !b.is_empty() {
        let (_, r) = rp_divrem(&a, &b);
        a = b;
        b = r;
    }
    rp_monic(a)
}

/// Scales to an integer polynomial with coprime coefficients and positive
/// leading coefficient.
fn primitive_int(p: &[Rational]) -> IntPolynomial {
    let l = p.iter().fold(BigInt::one(), |l, c| l.lcm(c.denom()));
    let ints: Vec<BigInt> = p.iter().map(|c| (c * Rational::from_integer(l.clone())).to_integer()).collect();
    let mut poly = IntPolynomial::new(ints);
    let mut g = poly.content();
    if poly.leading().is_some_and(|c| c.is_negative()) {
        g = -g;
    }
    if !g.is_zero() {
        poly = IntPolynomial::new(poly.coeffs.iter().map(|c| c / &g).collect());
    }
    poly
}

fn sturm_chain(p: &[Rational]) -> Vec<Vec<Rational>> {
    let mut chain = vec![p.to_vec(), rp_deriv(p)];
    loop {
        let n = chain.len();
        if chain[n - 1].is_empty() {
            chain.pop();
            break;
        }
        let (_, r) = rp_divrem(&chain[n - 2], &chain[n - 1]);
        if r.is_empty() {
            break;
        }
        chain.push(r.into_iter().map(|c| -c).collect());
    }
    chain
}

fn sign_variations(chain: &[Vec<Rational>], x: &Rational) -> usize {
    let signs: Vec<bool> = chain
        .iter()
        .map(|p| rp_eval(p, x))
        .filter(|v| !v.is_zero())
        .map(|v| v.is_positive())
        .collect();
    signs.windows(2).filter(|w| w[0] != w[1]).count()
}

/// The rational with the smallest denominator in `[lo, hi]`, `lo ≤ hi`.
fn simplest_between(lo: &Rational, hi: &Rational) -> Rational {
    if lo.is_negative() && hi.is_positive() || lo.is_zero() || hi.is_zero() {
        return Rational::zero();
    }
    if hi.is_negative() {
        return -simplest_between(&-hi, &-lo);
    }
    let fl = lo.floor();
    if fl == *lo {
        return lo.clone();
    }
    if fl + Rational::one() <= *hi {
        return lo.floor() + Rational::one();
    }
    // lo and hi share the integer part; recurse on the reciprocal of the
    // fractional parts, which swaps their order
    let n = lo.floor();
    let (a, b) = (lo - &n, hi - &n);
    n + simplest_between(&b.recip(), &a.recip()).recip()
}

/// Distinct rational roots of a square-free polynomial with nonzero constant
/// term.
fn distinct_rational_roots(sqfree: &[Rational]) -> Vec<Rational> {
    let mut roots: Vec<Rational> = Vec::new();
    let mut p = sqfree.to_vec();
    'restart: loop {
        if p.len() <= 1 {
            return roots;
        }
        let int = primitive_int(&p);
        let lc = int.leading().expect("nonzero").abs();
        let resolution = Rational::new(BigInt::one(), &lc * &lc);
        let lead = Rational::from_integer(lc.clone());
        let cauchy = int.coeffs.iter().map(|c| Rational::from_integer(c.abs()) / &lead).max().unwrap();
        let bound = cauchy.ceil() + Rational::from_integer(2.into());
        let chain = sturm_chain(&p);
        let mut stack = vec![(-bound.clone(), bound)];
        while let Some((a, b)) = stack.pop() {
            let count = sign_variations(&chain, &a) - sign_variations(&chain, &b);
            if count == 0 {
                continue;
            }
            if count == 1 && &b - &a < resolution {
                let c = simplest_between(&a, &b);
                if c.denom().abs() <= lc && rp_eval(&p, &c).is_zero() {
                    roots.push(c);
                }
                continue;
            }
            let mid = (&a + &b) / Rational::from_integer(2.into());
            if rp_eval(&p, &mid).is_zero() {
                // deflate by everything found so far and isolate again
                roots.push(mid);
                p = sqfree.to_vec();
                for r in &roots {
                    p = rp_divrem(&p, &[-r.clone(), Rational::one()]).0;
                }
                continue 'restart;
            }
            stack.push((a, mid.clone()));
            stack.push((mid, b));
        }
        return roots;
    }
}

/// Rational roots with multiplicities, ascending.
pub fn rational_roots(p: &IntPolynomial) -> Result<Vec<(Rational, usize)>> {
    if p.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    let zero_mult = p.coeffs.iter().take_while(|c| c.is_zero()).count();
    let rest = trim(p.to_rational()[zero_mult..].to_vec());
    let g = rp_gcd(&rest, &rp_deriv(&rest));
    let sqfree = rp_divrem(&rest, &g).0;
    let mut found = distinct_rational_roots(&sqfree);
    found.sort();
    let mut out = Vec::new();
    if zero_mult > 0 {
        out.push((Rational::zero(), zero_mult));
    }
    for r in found {
        let factor = [-r.clone(), Rational::one()];
        let mut q = rest.clone();
        let mut mult = 0;
        loop {
            let (quo, rem) = rp_divrem(&q, &factor);
            if !rem.is_empty() {
                break;
            }
            q = quo;
            mult += 1;
        }
        out.push((r, mult));
    }
    out.sort_by(|a, b| a.0.cmp(&b.0));
    Ok(out)
}

/// `p = content · z^k · ∏ (q_i z − p_i)^{e_i} · ∏ r_j^j` with the `r_j`
/// square-free, primitive and free of rational roots.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Factorization {
    pub content: BigInt,
    pub zero_multiplicity: usize,
    pub linear: Vec<(Rational, usize)>,
    pub rest: Vec<(IntPolynomial, usize)>,
}

impl Factorization {
    pub fn of(p: &IntPolynomial) -> Result<Self> {
        let roots = rational_roots(p)?;
        let mut content = p.content();
        if p.leading().is_some_and(|c| c.is_negative()) {
            content = -content;
        }
        let mut zero_multiplicity = 0;
        let mut linear = Vec::new();
        let mut q = p.to_rational();
        for (r, m) in roots {
            let factor = [-r.clone(), Rational::one()];
            for _ in 0..m {
                q = rp_divrem(&q, &factor).0;
            }
            if r.is_zero() {
                zero_multiplicity = m;
            } else {
                linear.push((r, m));
            }
        }
        linear.sort_by(|a, b| b.0.cmp(&a.0));
        let rest = yun(&q)
            .into_iter()
            .enumerate()
            .filter(|(_, f)| f.len() > 1)
            .map(|(i, f)| (primitive_int(&f), i + 1))
            .collect();
        Ok(Factorization { content, zero_multiplicity, linear, rest })
    }
}

/// Yun's square-free decomposition: `p ~ ∏ a_i^i`, returned as `[a_1, a_2, …]`.
fn yun(p: &[Rational]) -> Vec<Vec<Rational>> {
    if p.len() <= 1 {
        return Vec::new();
    }
    let d = rp_deriv(p);
    let a0 = rp_gcd(p, &d);
    let mut b = rp_divrem(p, &a0).0;
    let mut c = rp_divrem(&d, &a0).0;
    let mut dd = trim(sub(&c, &rp_deriv(&b)));
    let mut out = Vec::new();
    loop {
        let a = rp_gcd(&b, &dd);
        out.push(a.clone());
        b = rp_divrem(&b, &a).0;
        if b.len() <= 1 {
            break;
        }
        c = rp_divrem(&dd, &a).0;
        dd = trim(sub(&c, &rp_deriv(&b)));
    }
    out
}

fn sub(a: &[Rational], b: &[Rational]) -> Vec<Rational> {
    let n = a.len().max(b.len());
    (0..n)
        .map(|i| {
            let x = a.get(i).cloned().unwrap_or_else(Rational::zero);
            let y = b.get(i).cloned().unwrap_or_else(Rational::zero);
            x - y
        })
        .collect()
}

fn linear_factor(r: &Rational) -> IntPolynomial {
    IntPolynomial::new(vec![-r.numer().clone(), r.denom().clone()])
}

impl fmt::Display for Factorization {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut head = Vec::new();
        let unit_content = self.content.abs().is_one();
        let has_factors = self.zero_multiplicity > 0 || !self.linear.is_empty() || !self.rest.is_empty();
        if !unit_content || !has_factors {
            head.push(self.content.to_string());
        }
        if self.zero_multiplicity > 0 {
            let mut s = String::from("z");
            if self.zero_multiplicity > 1 {
                s.push_str(&format!("^{}", self.zero_multiplicity));
            }
            head.push(s);
        }
        let mut parens = String::new();
        let factors = self
            .linear
            .iter()
            .map(|(r, m)| (linear_factor(r), *m))
            .chain(self.rest.iter().cloned());
        for (poly, m) in factors {
            parens.push('(');
            write_poly(&mut parens, &poly.coeffs, true)?;
            parens.push(')');
            if m > 1 {
                parens.push_str(&format!("^{m}"));
            }
        }
        if !parens.is_empty() {
            head.push(parens);
        }
        let text = head.join(" ");
        if unit_content && has_factors && self.content.is_negative() {
            write!(f, "-{text}")
        } else {
            f.write_str(&text)
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum TemplateSlope {
    Fixed(Rational),
    Symbolic,
}

/// `x^{m1} y^{m2} ∏ (x − s_i y)^{m_i}` with exactly one `s_i` left free.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SymbolicTemplate {
    m1: usize,
    m2: usize,
    blocks: Vec<(TemplateSlope, usize)>,
}

impl SymbolicTemplate {
    pub fn new(m1: usize, m2: usize, blocks: Vec<(TemplateSlope, usize)>) -> Result<Self> {
        let symbolic = blocks.iter().filter(|b| b.0 == TemplateSlope::Symbolic).count();
        if symbolic != 1 {
            return Err(Error::DegenerateTemplate(format!(
                "expected exactly one symbolic slope, found {symbolic}"
            )));
        }
        let fixed: Vec<&Rational> = blocks
            .iter()
            .filter_map(|b| match &b.0 {
                TemplateSlope::Fixed(s) => Some(s),
                TemplateSlope::Symbolic => None,
            })
            .collect();
        for (i, s) in fixed.iter().enumerate() {
            if s.is_zero() {
                return Err(Error::DegenerateTemplate("fixed slope 0 coincides with ker(x)".into()));
            }
            if fixed[..i].contains(s) {
                return Err(Error::DegenerateTemplate(format!("slope {s} appears twice")));
            }
        }
        if m1 == 0 || m2 == 0 || blocks.iter().any(|b| b.1 == 0) {
            return Err(Error::DegenerateTemplate("multiplicities must be positive".into()));
        }
        let t = SymbolicTemplate { m1, m2, blocks };
        let size = t.size();
        if size % 2 == 1 {
            return Err(Error::OddSize(size));
        }
        let top = t.mults().max().unwrap_or(0);
        if 2 * top >= size {
            return Err(Error::Unbalanced);
        }
        Ok(t)
    }

    /// Frees the slope of line `index` (1-based, at least 3) of an arrangement
    /// in `x, y, …` form.
    pub fn from_arrangement(a: &Multiarrangement, index: usize) -> Result<Self> {
        let slopes = a.slopes()?;
        if index < 3 || index > a.len() {
            return Err(Error::IndexOutOfRange { index, bound: a.len() });
        }
        let blocks = slopes
            .into_iter()
            .zip(&a.mults()[2..])
            .enumerate()
            .map(|(i, (s, &m))| {
                let slope = if i + 3 == index { TemplateSlope::Symbolic } else { TemplateSlope::Fixed(s) };
                (slope, m)
            })
            .collect();
        Self::new(a.mults()[0], a.mults()[1], blocks)
    }

    fn mults(&self) -> impl Iterator<Item = usize> + '_ {
        [self.m1, self.m2].into_iter().chain(self.blocks.iter().map(|b| b.1))
    }

    pub fn size(&self) -> usize {
        self.mults().sum()
    }

    pub fn degree(&self) -> usize {
        self.size() / 2 - 1
    }

    fn symbolic_mult(&self) -> usize {
        self.blocks.iter().find(|b| b.0 == TemplateSlope::Symbolic).map(|b| b.1).unwrap()
    }

    /// Each row of the free block is a polynomial in `z` of degree at most
    /// `e − k`; the determinant is multilinear in the rows.
    pub fn degree_bound(&self) -> usize {
        let e = self.degree();
        (0..self.symbolic_mult()).map(|k| e.saturating_sub(k)).sum()
    }

    /// Blocks with the free slope set to `z`.
    pub fn instantiate(&self, z: &Rational) -> Vec<(Rational, usize)> {
        self.blocks
            .iter()
            .map(|(s, m)| match s {
                TemplateSlope::Fixed(v) => (v.clone(), *m),
                TemplateSlope::Symbolic => (z.clone(), *m),
            })
            .collect()
    }

    pub fn determinant_at(&self, z: &Rational) -> Rational {
        let (m, _) = wy_matrix_raw(self.m1, self.m2, &self.instantiate(z), self.degree());
        m.determinant().expect("square by construction")
    }

    fn nodes(&self, count: usize) -> Vec<Rational> {
        let fixed: Vec<Rational> = self
            .blocks
            .iter()
            .filter_map(|b| match &b.0 {
                TemplateSlope::Fixed(s) => Some(s.clone()),
                TemplateSlope::Symbolic => None,
            })
            .collect();
        (1i64..)
            .map(|v| Rational::from_integer(v.into()))
            .filter(|v| !fixed.contains(v))
            .take(count)
            .collect()
    }
}

/// Newton interpolation through `(x_i, y_i)`, in monomial form.
fn interpolate(xs: &[Rational], ys: &[Rational]) -> Vec<Rational> {
    let n = xs.len();
    let mut c = ys.to_vec();
    for j in 1..n {
        for i in (j..n).rev() {
            c[i] = (&c[i] - &c[i - 1]) / (&xs[i] - &xs[i - j]);
        }
    }
    let mut poly: Vec<Rational> = Vec::new();
    for i in (0..n).rev() {
        // poly = poly·(z − x_i) + c_i
        let mut next = vec![Rational::zero(); poly.len() + 1];
        for (d, a) in poly.iter().enumerate() {
            next[d + 1] += a;
            next[d] -= a * &xs[i];
        }
        next[0] += &c[i];
        poly = next;
    }
    trim(poly)
}

/// `det M_WY` as a rational polynomial in the free slope, before clearing
/// denominators.
pub fn det_wy_rational(t: &SymbolicTemplate) -> Vec<Rational> {
    let xs = t.nodes(t.degree_bound() + 1);
    let ys: Vec<Rational> = xs.par_iter().map(|z| t.determinant_at(z)).collect();
    interpolate(&xs, &ys)
}

/// `det M_WY` with integer coefficients and the positive integer `c` such
/// that the determinant equals the polynomial divided by `c`. With integer
/// fixed slopes `c = 1`.
pub fn det_wy_polynomial_scaled(t: &SymbolicTemplate) -> (IntPolynomial, BigInt) {
    let p = det_wy_rational(t);
    let c = p.iter().fold(BigInt::one(), |l, x| l.lcm(x.denom()));
    let ints = p.iter().map(|x| (x * Rational::from_integer(c.clone())).to_integer()).collect();
    (IntPolynomial::new(ints), c)
}

/// `det M_WY` in the free slope. Fails with `NonIntegral` if the fixed slopes
/// are integers and interpolation produced a non-integer coefficient.
pub fn det_wy_polynomial(t: &SymbolicTemplate) -> Result<IntPolynomial> {
    let integral_slopes = t.blocks.iter().all(|b| match &b.0 {
        TemplateSlope::Fixed(s) => s.is_integer(),
        TemplateSlope::Symbolic => true,
    });
    let (p, c) = det_wy_polynomial_scaled(t);
    if integral_slopes && !c.is_one() {
        return Err(Error::NonIntegral);
    }
    Ok(p)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(v: i64) -> Rational {
        Rational::from_integer(v.into())
    }

    fn fixed(v: i64, m: usize) -> (TemplateSlope, usize) {
        (TemplateSlope::Fixed(q(v)), m)
    }

    #[test]
    fn example_2213() {
        let t = SymbolicTemplate::new(2, 2, vec![fixed(1, 1), (TemplateSlope::Symbolic, 3)]).unwrap();
        let p = det_wy_polynomial(&t).unwrap();
        assert_eq!(p, IntPolynomial::from_i64(&[0, 0, -2, 0, 2]));
        assert_eq!(p.to_string(), "2*z^4 - 2*z^2");
        assert_eq!(p.factored().unwrap(), "2 z^2 (z-1)(z+1)");
        assert_eq!(rational_roots(&p).unwrap(), vec![(q(-1), 1), (q(0), 2), (q(1), 1)]);
        assert!(p.degree().unwrap() <= t.degree_bound());
    }

    #[test]
    fn simple_four_lines_vanish() {
        let t = SymbolicTemplate::new(1, 1, vec![fixed(1, 1), (TemplateSlope::Symbolic, 1)]).unwrap();
        let p = det_wy_polynomial(&t).unwrap();
        assert!(p.is_zero());
        for z in 2..6 {
            assert!(t.determinant_at(&q(z)).is_zero());
        }
        assert_eq!(rational_roots(&p), Err(Error::ZeroPolynomial));
    }

    #[test]
    fn pointwise_consistency() {
        let t = SymbolicTemplate::new(3, 3, vec![fixed(1, 2), (TemplateSlope::Symbolic, 4)]).unwrap();
        let p = det_wy_polynomial(&t).unwrap();
        let a = Multiarrangement::from_int_slopes(3, 3, &[(1, 2), (2, 4)]).unwrap();
        let direct = crate::wy::build_square_wy(&a).unwrap().matrix.determinant().unwrap();
        assert_eq!(p.eval(&q(2)), direct);
    }

    #[test]
    fn rational_fixed_slope_scaling() {
        let half = Rational::new(1.into(), 2.into());
        let t = SymbolicTemplate::new(
            2,
            2,
            vec![(TemplateSlope::Fixed(half), 1), (TemplateSlope::Symbolic, 3)],
        )
        .unwrap();
        let (p, c) = det_wy_polynomial_scaled(&t);
        for z in [3, -4, 7] {
            assert_eq!(p.eval(&q(z)) / Rational::from_integer(c.clone()), t.determinant_at(&q(z)));
        }
    }

    #[test]
    fn template_errors() {
        let two = vec![(TemplateSlope::Symbolic, 1), (TemplateSlope::Symbolic, 3)];
        assert!(matches!(SymbolicTemplate::new(2, 2, two), Err(Error::DegenerateTemplate(_))));
        let dup = vec![fixed(1, 1), fixed(1, 1), (TemplateSlope::Symbolic, 2)];
        assert!(matches!(SymbolicTemplate::new(2, 2, dup), Err(Error::DegenerateTemplate(_))));
        let odd = vec![fixed(1, 1), (TemplateSlope::Symbolic, 2)];
        assert_eq!(SymbolicTemplate::new(2, 2, odd), Err(Error::OddSize(7)));
        let unb = vec![fixed(1, 1), (TemplateSlope::Symbolic, 1)];
        assert_eq!(SymbolicTemplate::new(6, 2, unb), Err(Error::Unbalanced));
    }

    #[test]
    fn roots_examples() {
        assert!(rational_roots(&IntPolynomial::from_i64(&[1, 0, 1])).unwrap().is_empty());
        assert_eq!(
            rational_roots(&IntPolynomial::from_i64(&[-4, 6])).unwrap(),
            vec![(Rational::new(2.into(), 3.into()), 1)]
        );
        // (2z - 1)^2 (z + 3) (z^2 - 2)
        let p = IntPolynomial::from_i64(&[-6, 22, -13, -19, 8, 4]);
        assert_eq!(
            rational_roots(&p).unwrap(),
            vec![(q(-3), 1), (Rational::new(1.into(), 2.into()), 2)]
        );
        assert_eq!(p.factored().unwrap(), "(2z-1)^2(z+3)(z^2-2)");
    }

    #[test]
    fn roots_with_multiplicity() {
        // (2z - 1)^2 (z + 3) = 4z^3 + 8z^2 - 11z + 3
        let p = IntPolynomial::from_i64(&[3, -11, 8, 4]);
        assert_eq!(
            rational_roots(&p).unwrap(),
            vec![(q(-3), 1), (Rational::new(1.into(), 2.into()), 2)]
        );
        assert_eq!(p.factored().unwrap(), "(2z-1)^2(z+3)");
        // -(z^2 + 1)^2 z
        let p = IntPolynomial::from_i64(&[0, -1, 0, -2, 0, -1]);
        assert_eq!(p.factored().unwrap(), "-z (z^2+1)^2");
        assert_eq!(IntPolynomial::from_i64(&[-7]).factored().unwrap(), "-7");
    }

    #[test]
    fn root_on_bisection_midpoint_not_repeated() {
        // (z + 2)(2z + 3)(3z - 1); -2 is hit exactly by bisection
        let p = IntPolynomial::from_i64(&[-6, 11, 19, 6]);
        let r = |a: i64, b: i64| Rational::new(a.into(), b.into());
        assert_eq!(rational_roots(&p).unwrap(), vec![(q(-2), 1), (r(-3, 2), 1), (r(1, 3), 1)]);
    }

    #[test]
    fn simplest_rational() {
        let r = |a: i64, b: i64| Rational::new(a.into(), b.into());
        assert_eq!(simplest_between(&r(1, 3), &r(1, 2)), r(1, 2));
        assert_eq!(simplest_between(&r(3, 10), &r(4, 10)), r(1, 3));
        assert_eq!(simplest_between(&r(-7, 3), &r(-9, 4)), r(-7, 3));
        assert_eq!(simplest_between(&r(-1, 2), &r(3, 2)), r(0, 1));
        assert_eq!(simplest_between(&r(5, 2), &r(7, 2)), r(3, 1));
    }

    #[test]
    fn display_forms() {
        assert_eq!(IntPolynomial::from_i64(&[1, -1, 0, 3]).to_string(), "3*z^3 - z + 1");
        assert_eq!(IntPolynomial::zero().to_string(), "0");
        assert_eq!(IntPolynomial::from_i64(&[0, -2]).to_string(), "-2*z");
    }
}
