//! Arbitrary-precision scalars and dense univariate polynomials.

mod poly;

pub use poly::{binomial_polynomial, IntPolynomial, Polynomial, RatPolynomial};

use std::fmt::Debug;
use std::ops::Neg;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{Num, One, Zero};

use crate::error::{Error, Result};

/// Exact rational scalar, always stored in lowest terms with a positive denominator.
pub type ExactRational = BigRational;

/// Coefficient rings the polynomial and algebra code is generic over.
pub trait Coefficient: Clone + Debug + PartialEq + Num + Neg<Output = Self> + Send + Sync {
    fn from_integer(n: BigInt) -> Self;

    fn from_i64(n: i64) -> Self {
        Self::from_integer(BigInt::from(n))
    }
}

impl Coefficient for BigInt {
    fn from_integer(n: BigInt) -> Self {
        n
    }
}

impl Coefficient for BigRational {
    fn from_integer(n: BigInt) -> Self {
        BigRational::from_integer(n)
    }
}

pub fn rat(num: i64, den: i64) -> ExactRational {
    BigRational::new(BigInt::from(num), BigInt::from(den))
}

pub fn int(n: i64) -> ExactRational {
    BigRational::from_integer(BigInt::from(n))
}

/// Parses `"p"`, `"-p"` or `"p/q"`; the result is reduced.
pub fn parse_rational(s: &str) -> Result<ExactRational> {
    let s = s.trim();
    let bad = || Error::Parse(format!("not a rational number: `{s}`"));
    match s.split_once('/') {
        None => s.parse::<BigInt>().map(BigRational::from_integer).map_err(|_| bad()),
        Some((n, d)) => {
            let n: BigInt = n.trim().parse().map_err(|_| bad())?;
            let d: BigInt = d.trim().parse().map_err(|_| bad())?;
            if d.is_zero() {
                return Err(Error::Parse(format!("zero denominator in `{s}`")));
            }
            Ok(BigRational::new(n, d))
        }
    }
}

pub fn is_integer(q: &ExactRational) -> bool {
    q.denom().is_one()
}
