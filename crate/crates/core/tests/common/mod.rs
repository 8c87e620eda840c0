//! Corpus generation and oracles shared by the integration tests.
#![allow(dead_code)]

use arrexp::model::DerivationCoeffs;
use arrexp::{LineForm, Multiarrangement, Rational};
use num_bigint::BigInt;
use num_traits::{One, Zero};

pub const CORPUS_SLOPES: [i64; 5] = [1, -1, 2, 3, -5];
pub const CORPUS_MAX_LINES: usize = 5;
pub const CORPUS_MAX_SIZE: usize = 12;

pub fn q(v: i64) -> Rational {
    Rational::from_integer(v.into())
}

/// All vectors of `parts` positive integers with sum at most `max_sum`, in
/// lexicographic order.
pub fn compositions(parts: usize, max_sum: usize) -> Vec<Vec<usize>> {
    fn rec(parts: usize, budget: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == parts {
            out.push(cur.clone());
            return;
        }
        let still = parts - cur.len() - 1;
        for v in 1..=budget.saturating_sub(still) {
            cur.push(v);
            rec(parts, budget - v, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    if parts <= max_sum {
        rec(parts, max_sum, &mut Vec::new(), &mut out);
    }
    out
}

pub fn subsets<T: Clone>(items: &[T], k: usize) -> Vec<Vec<T>> {
    if k == 0 {
        return vec![vec![]];
    }
    if items.len() < k {
        return vec![];
    }
    let mut with: Vec<Vec<T>> = subsets(&items[1..], k - 1)
        .into_iter()
        .map(|mut s| {
            s.insert(0, items[0].clone());
            s
        })
        .collect();
    with.extend(subsets(&items[1..], k));
    with
}

/// Line sets `x, y, x − s y, …` with slopes drawn from `slopes`.
pub fn slope_sets(slopes: &[i64], max_lines: usize) -> Vec<Vec<i64>> {
    (0..=max_lines - 2).flat_map(|k| subsets(slopes, k)).collect()
}

pub fn build(mults: &[usize], slopes: &[i64]) -> Multiarrangement {
    let rest: Vec<(i64, usize)> = slopes.iter().copied().zip(mults[2..].iter().copied()).collect();
    Multiarrangement::from_int_slopes(mults[0], mults[1], &rest).unwrap()
}

/// Every arrangement on at most `max_lines` lines `x, y, x − s y` with
/// `s ∈ slopes` and `|m| ≤ max_size`.
pub fn corpus_with(slopes: &[i64], max_lines: usize, max_size: usize) -> Vec<Multiarrangement> {
    let mut out = Vec::new();
    for set in slope_sets(slopes, max_lines) {
        for m in compositions(set.len() + 2, max_size) {
            out.push(build(&m, &set));
        }
    }
    out
}

pub fn corpus() -> Vec<Multiarrangement> {
    corpus_with(&CORPUS_SLOPES, CORPUS_MAX_LINES, CORPUS_MAX_SIZE)
}

pub fn is_square_case(a: &Multiarrangement) -> bool {
    a.size().is_multiple_of(2) && a.is_balanced() && a.len() >= 2
}

/// Homogeneous binary form `Σ c_i x^{d−i} y^i`, coefficients by power of `y`.
#[derive(Clone, Debug, PartialEq)]
pub struct Form(pub Vec<Rational>);

impl Form {
    pub fn is_zero(&self) -> bool {
        self.0.iter().all(|c| c.is_zero())
    }

    /// Divides by `a x + b y`, returning the quotient if the division is exact.
    pub fn div_linear(&self, a: &BigInt, b: &BigInt) -> Option<Form> {
        let d = self.0.len().checked_sub(1)?;
        if d == 0 {
            return self.is_zero().then(|| self.clone());
        }
        let (a, b) = (Rational::from_integer(a.clone()), Rational::from_integer(b.clone()));
        let mut rem = self.0.clone();
        let mut quo = vec![Rational::zero(); d];
        // (a x + b y) · Σ t_i x^{d−1−i} y^i contributes a·t_i to y^i and b·t_i to y^{i+1}
        if !a.is_zero() {
            for i in 0..d {
                let t = &rem[i] / &a;
                rem[i] = Rational::zero();
                rem[i + 1] -= &t * &b;
                quo[i] = t;
            }
        } else {
            for i in (0..d).rev() {
                let t = &rem[i + 1] / &b;
                rem[i + 1] = Rational::zero();
                quo[i] = t;
            }
        }
        rem.iter().all(|c| c.is_zero()).then_some(Form(quo))
    }
}

/// Checks `θ(α_H) ∈ α_H^{m(H)} S` for every line directly on polynomials.
pub fn witness_is_valid(a: &Multiarrangement, w: &DerivationCoeffs) -> bool {
    let m = a.mults();
    let (p, qv) = w.components(m[0], m[1]);
    for (line, &mu) in a.lines().iter().zip(m) {
        let (la, lb) = (Rational::from_integer(line.a().clone()), Rational::from_integer(line.b().clone()));
        let h: Vec<Rational> = p.iter().zip(&qv).map(|(pi, qi)| &la * pi + &lb * qi).collect();
        let mut f = Form(h);
        for _ in 0..mu {
            match f.div_linear(line.a(), line.b()) {
                Some(next) => f = next,
                None => return false,
            }
        }
    }
    !w.is_zero()
}

pub fn lines_xy_plus(slopes: &[i64]) -> Vec<LineForm> {
    let mut v = vec![LineForm::x(), LineForm::y()];
    v.extend(slopes.iter().map(|&s| LineForm::from_slope(&q(s))));
    v
}

pub fn factorial(n: usize) -> BigInt {
    (1..=n).fold(BigInt::one(), |acc, k| acc * k)
}
