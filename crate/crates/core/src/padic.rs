//! p-adic valuations of integers and Wronskians.

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, Zero};
use serde::Serialize;

use crate::error::{Error, Result};
use crate::tuples::{range_tuple, wronskian_closed, NNTuple};

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub enum Valuation {
    Finite(u64),
    Infinite,
}

impl fmt::Display for Valuation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Valuation::Finite(v) => write!(f, "{v}"),
            Valuation::Infinite => f.write_str("inf"),
        }
    }
}

pub fn is_prime(p: u64) -> bool {
    if p < 2 {
        return false;
    }
    let mut d = 2u64;
    while d.saturating_mul(d) <= p {
        if p.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

fn check_prime(p: u64) -> Result<()> {
    if is_prime(p) {
        Ok(())
    } else {
        Err(Error::NotPrime(p))
    }
}

/// `v_p(n)` for nonzero `n`.
pub fn vp(n: &BigInt, p: u64) -> Result<u64> {
    check_prime(p)?;
    if n.is_zero() {
        return Err(Error::ZeroInput);
    }
    let p = BigInt::from(p);
    let mut n = n.abs();
    let mut v = 0;
    loop {
        let (q, r) = n.div_rem(&p);
        if !r.is_zero() {
            return Ok(v);
        }
        n = q;
        v += 1;
    }
}

/// Like [`vp`], but `v_p(0) = ∞`.
pub fn valuation(n: &BigInt, p: u64) -> Result<Valuation> {
    if n.is_zero() {
        check_prime(p)?;
        return Ok(Valuation::Infinite);
    }
    vp(n, p).map(Valuation::Finite)
}

/// `v_p(w(a))` for a strictly descending tuple.
pub fn vp_wronskian(a: &NNTuple, p: u64) -> Result<u64> {
    vp(&wronskian_closed(a)?, p)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ValuationCheck {
    pub p: u64,
    pub tuple_valuation: u64,
    pub reference_valuation: u64,
    pub holds: bool,
}

/// Compares `v_p(w(a))` with `v_p(w((n:0)))`, where `n + 1` is the length of
/// `a`; the continuous tuple has the smallest valuation among all tuples of
/// that length.
pub fn check_min_valuation(a: &NNTuple, p: u64) -> Result<ValuationCheck> {
    check_prime(p)?;
    let tuple_valuation = vp_wronskian(a, p)?;
    let reference = range_tuple(a.len() as i64 - 1, 0)?;
    let reference_valuation = vp_wronskian(&reference, p)?;
    Ok(ValuationCheck {
        p,
        tuple_valuation,
        reference_valuation,
        holds: tuple_valuation >= reference_valuation,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn basic_valuations() {
        assert_eq!(vp(&BigInt::from(240), 2).unwrap(), 4);
        assert_eq!(vp(&BigInt::from(-240), 3).unwrap(), 1);
        assert_eq!(vp(&BigInt::from(7), 5).unwrap(), 0);
        assert_eq!(vp(&BigInt::from(0), 2).unwrap_err(), Error::ZeroInput);
        assert_eq!(vp(&BigInt::from(8), 4).unwrap_err(), Error::NotPrime(4));
        assert_eq!(vp(&BigInt::from(8), 1).unwrap_err(), Error::NotPrime(1));
        assert_eq!(valuation(&BigInt::from(0), 3).unwrap(), Valuation::Infinite);
        assert_eq!(valuation(&BigInt::from(0), 6).unwrap_err(), Error::NotPrime(6));
    }

    #[test]
    fn example_tuple() {
        let c = check_min_valuation(&NNTuple::new(vec![5, 4, 2, 0]), 2).unwrap();
        assert_eq!((c.tuple_valuation, c.reference_valuation, c.holds), (4, 2, true));
    }

    #[test]
    fn rejects_bad_tuple() {
        let err = check_min_valuation(&NNTuple::new(vec![1, 3]), 2).unwrap_err();
        assert!(matches!(err, Error::NotDescending(_)));
    }

    #[test]
    fn primes() {
        let small: Vec<u64> = (0..30).filter(|&n| is_prime(n)).collect();
        assert_eq!(small, vec![2, 3, 5, 7, 11, 13, 17, 19, 23, 29]);
    }
}
