use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use super::Coefficient;
use crate::error::{Error, Result};

/// Dense univariate polynomial, coefficients in ascending degree.
///
/// The highest stored coefficient is never zero; the zero polynomial has no
/// coefficients at all.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Polynomial<T> {
    coeffs: Vec<T>,
}

pub type IntPolynomial = Polynomial<BigInt>;
pub type RatPolynomial = Polynomial<BigRational>;

impl<T: Coefficient> Polynomial<T> {
    pub fn new(mut coeffs: Vec<T>) -> Self {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        Polynomial { coeffs }
    }

    pub fn from_i64s(coeffs: &[i64]) -> Self {
        Self::new(coeffs.iter().map(|&c| T::from_i64(c)).collect())
    }

    pub fn zero() -> Self {
        Polynomial { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Self::constant(T::one())
    }

    pub fn constant(c: T) -> Self {
        Self::new(vec![c])
    }

    /// The indeterminate `X`.
    pub fn x() -> Self {
        Self::monomial(T::one(), 1)
    }

    pub fn monomial(c: T, degree: usize) -> Self {
        let mut coeffs = vec![T::zero(); degree + 1];
        coeffs[degree] = c;
        Self::new(coeffs)
    }

    pub fn coeffs(&self) -> &[T] {
        &self.coeffs
    }

    /// Coefficient of `X^k`, zero beyond the degree.
    pub fn coeff(&self, k: usize) -> T {
        self.coeffs.get(k).cloned().unwrap_or_else(T::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn leading(&self) -> Option<&T> {
        self.coeffs.last()
    }

    pub fn is_monic(&self) -> bool {
        self.leading().is_some_and(|c| c.is_one())
    }

    pub fn is_constant(&self) -> bool {
        self.coeffs.len() <= 1
    }

    /// Horner evaluation at a scalar.
    pub fn eval(&self, x: &T) -> T {
        self.coeffs
            .iter()
            .rev()
            .fold(T::zero(), |acc, c| acc * x.clone() + c.clone())
    }

    /// `self(inner(X))`.
    pub fn compose(&self, inner: &Self) -> Self {
        self.coeffs.iter().rev().fold(Self::zero(), |acc, c| {
            &(&acc * inner) + &Self::constant(c.clone())
        })
    }

    pub fn derivative(&self) -> Self {
        Self::new(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(k, c)| c.clone() * T::from_i64(k as i64))
                .collect(),
        )
    }

    pub fn scale(&self, s: &T) -> Self {
        Self::new(self.coeffs.iter().map(|c| c.clone() * s.clone()).collect())
    }

    pub fn pow(&self, mut e: u32) -> Self {
        let mut base = self.clone();
        let mut acc = Self::one();
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            e >>= 1;
            if e > 0 {
                base = &base * &base;
            }
        }
        acc
    }
}

impl IntPolynomial {
    pub fn to_rational(&self) -> RatPolynomial {
        Polynomial::new(
            self.coeffs
                .iter()
                .map(|c| BigRational::from_integer(c.clone()))
                .collect(),
        )
    }

    /// Product of a list of polynomials, multiplied pairwise so operands stay balanced.
    pub fn product(mut factors: Vec<IntPolynomial>) -> IntPolynomial {
        if factors.is_empty() {
            return Self::one();
        }
        while factors.len() > 1 {
            let mut next = Vec::with_capacity(factors.len().div_ceil(2));
            let mut it = factors.chunks(2);
            for pair in &mut it {
                next.push(match pair {
                    [a, b] => a * b,
                    [a] => a.clone(),
                    _ => unreachable!(),
                });
            }
            factors = next;
        }
        factors.pop().unwrap()
    }
}

impl RatPolynomial {
    pub fn has_integer_coeffs(&self) -> bool {
        self.coeffs.iter().all(|c| c.is_integer())
    }

    pub fn to_integer(&self) -> Option<IntPolynomial> {
        self.has_integer_coeffs()
            .then(|| Polynomial::new(self.coeffs.iter().map(|c| c.to_integer()).collect()))
    }

    /// Divides by the leading coefficient. Zero stays zero.
    pub fn monic(&self) -> RatPolynomial {
        match self.leading() {
            None => self.clone(),
            Some(lc) => {
                let inv = lc.recip();
                self.scale(&inv)
            }
        }
    }

    /// Division with remainder by a monic divisor of positive degree:
    /// `self = divisor * q + r` with `deg r < deg divisor`.
    pub fn div_rem_monic(&self, divisor: &RatPolynomial) -> Result<(RatPolynomial, RatPolynomial)> {
        match divisor.degree() {
            None | Some(0) => return Err(Error::ConstantDivisor),
            _ if !divisor.is_monic() => return Err(Error::NonMonicDivisor),
            _ => {}
        }
        Ok(self.div_rem_field(divisor))
    }

    /// Long division over Q by any nonzero divisor.
    fn div_rem_field(&self, divisor: &RatPolynomial) -> (RatPolynomial, RatPolynomial) {
        let dd = divisor.degree().expect("nonzero divisor");
        let lc_inv = divisor.coeffs[dd].recip();
        let mut rem = self.coeffs.clone();
        if rem.len() <= dd {
            return (Self::zero(), self.clone());
        }
        let mut quot = vec![BigRational::zero(); rem.len() - dd];
        for k in (0..quot.len()).rev() {
            let c = &rem[k + dd] * &lc_inv;
            if c.is_zero() {
                continue;
            }
            for (i, dc) in divisor.coeffs.iter().enumerate() {
                rem[k + i] -= &c * dc;
            }
            quot[k] = c;
        }
        rem.truncate(dd);
        (Polynomial::new(quot), Polynomial::new(rem))
    }

    /// Remainder of division by a monic divisor.
    pub fn rem_monic(&self, divisor: &RatPolynomial) -> Result<RatPolynomial> {
        self.div_rem_monic(divisor).map(|(_, r)| r)
    }

    /// Monic greatest common divisor.
    pub fn gcd(&self, other: &RatPolynomial) -> Result<RatPolynomial> {
        if self.is_zero() && other.is_zero() {
            return Err(Error::ZeroPolynomial("gcd"));
        }
        let mut a = self.monic();
        let mut b = other.monic();
        while !b.is_zero() {
            let (_, r) = a.div_rem_field(&b);
            a = b;
            b = r.monic();
        }
        Ok(a)
    }

    /// `f / gcd(f, f')`, made monic: same roots, each simple.
    pub fn squarefree_part(&self) -> Result<RatPolynomial> {
        if self.is_zero() {
            return Err(Error::ZeroPolynomial("squarefree part"));
        }
        let g = self.gcd(&self.derivative())?;
        let (q, _) = self.div_rem_field(&g);
        Ok(q.monic())
    }

    /// Writes `self = g / d` with `g` integral and `d` the least positive
    /// common denominator of the coefficients.
    pub fn normalize(&self) -> (IntPolynomial, BigInt) {
        let d = self
            .coeffs
            .iter()
            .fold(BigInt::one(), |acc, c| acc.lcm(c.denom()));
        let g = self
            .coeffs
            .iter()
            .map(|c| (c * BigRational::from_integer(d.clone())).to_integer())
            .collect();
        (Polynomial::new(g), d)
    }
}

/// `C(X, k) = X(X-1)...(X-k+1) / k!`, the integer-valued binomial polynomial.
pub fn binomial_polynomial(k: u32) -> RatPolynomial {
    let mut acc = RatPolynomial::one();
    for i in 0..k {
        let factor = RatPolynomial::new(vec![
            BigRational::from_integer(BigInt::from(-(i as i64))),
            BigRational::one(),
        ]);
        acc = &acc * &factor;
        acc = acc.scale(&BigRational::new(BigInt::one(), BigInt::from(i + 1)));
    }
    acc
}

impl<T: Coefficient> Add for &Polynomial<T> {
    type Output = Polynomial<T>;

    fn add(self, rhs: Self) -> Polynomial<T> {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        Polynomial::new((0..n).map(|k| self.coeff(k) + rhs.coeff(k)).collect())
    }
}

impl<T: Coefficient> Sub for &Polynomial<T> {
    type Output = Polynomial<T>;

    fn sub(self, rhs: Self) -> Polynomial<T> {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        Polynomial::new((0..n).map(|k| self.coeff(k) - rhs.coeff(k)).collect())
    }
}

impl<T: Coefficient> Mul for &Polynomial<T> {
    type Output = Polynomial<T>;

    fn mul(self, rhs: Self) -> Polynomial<T> {
        if self.is_zero() || rhs.is_zero() {
            return Polynomial::zero();
        }
        let mut out = vec![T::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                out[i + j] = out[i + j].clone() + a.clone() * b.clone();
            }
        }
        Polynomial::new(out)
    }
}

impl<T: Coefficient> Neg for &Polynomial<T> {
    type Output = Polynomial<T>;

    fn neg(self) -> Polynomial<T> {
        Polynomial::new(self.coeffs.iter().map(|c| -c.clone()).collect())
    }
}

macro_rules! forward_owned {
    ($tr:ident, $m:ident) => {
        impl<T: Coefficient> $tr for Polynomial<T> {
            type Output = Polynomial<T>;

            fn $m(self, rhs: Self) -> Polynomial<T> {
                (&self).$m(&rhs)
            }
        }
    };
}

forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

/// Renders as e.g. `X^4 + 1/2*X^2 - 3`.
impl<T: Coefficient + fmt::Display + Signed> fmt::Display for Polynomial<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let neg = c.is_negative();
            let abs = c.abs();
            if first {
                if neg {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {} ", if neg { '-' } else { '+' })?;
            }
            first = false;
            let unit = abs.is_one();
            match k {
                0 => write!(f, "{abs}")?,
                _ if unit => {}
                _ => write!(f, "{abs}*")?,
            }
            match k {
                0 => {}
                1 => write!(f, "X")?,
                _ => write!(f, "X^{k}")?,
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::{int, rat};

    fn q(c: &[(i64, i64)]) -> RatPolynomial {
        Polynomial::new(c.iter().map(|&(n, d)| rat(n, d)).collect())
    }

    fn z(c: &[i64]) -> RatPolynomial {
        RatPolynomial::from_i64s(c)
    }

    #[test]
    fn canonical_form_drops_leading_zeros() {
        let p = z(&[1, 2, 0, 0]);
        assert_eq!(p.degree(), Some(1));
        assert!(z(&[0, 0]).is_zero());
        assert_eq!(z(&[]).degree(), None);
    }

    #[test]
    fn divmod_single_step() {
        let (quot, rem) = z(&[1, -1, 1]).div_rem_monic(&z(&[0, 1])).unwrap();
        assert_eq!(quot, z(&[-1, 1]));
        assert_eq!(rem, z(&[1]));
    }

    #[test]
    fn divmod_quartic_by_sixth_cyclotomic() {
        let (_, rem) = z(&[0, 0, 1, 0, 1]).div_rem_monic(&z(&[1, -1, 1])).unwrap();
        assert_eq!(rem, z(&[-1]));
    }

    #[test]
    fn divmod_zero_dividend() {
        let (quot, rem) = z(&[]).div_rem_monic(&z(&[0, 0, 1])).unwrap();
        assert!(quot.is_zero() && rem.is_zero());
    }

    #[test]
    fn divmod_rejects_bad_divisors() {
        assert_eq!(z(&[1, 1]).div_rem_monic(&z(&[1, 2])), Err(Error::NonMonicDivisor));
        assert_eq!(z(&[1, 1]).div_rem_monic(&z(&[1])), Err(Error::ConstantDivisor));
        assert_eq!(z(&[1, 1]).div_rem_monic(&z(&[])), Err(Error::ConstantDivisor));
    }

    #[test]
    fn gcd_examples() {
        assert_eq!(z(&[-1, 0, 1]).gcd(&z(&[-1, 1])).unwrap(), z(&[-1, 1]));
        assert_eq!(z(&[0, 0, 1]).gcd(&z(&[0, 0, 0, 1])).unwrap(), z(&[0, 0, 1]));
        assert_eq!(z(&[1, -1, 1]).gcd(&z(&[0, -1, 1])).unwrap(), z(&[1]));
        assert_eq!(z(&[]).gcd(&z(&[])), Err(Error::ZeroPolynomial("gcd")));
        // one side zero: gcd is the monic other side
        assert_eq!(z(&[]).gcd(&z(&[2, 4])).unwrap(), q(&[(1, 2), (1, 1)]));
    }

    #[test]
    fn squarefree_examples() {
        assert_eq!(z(&[0, 0, 1]).squarefree_part().unwrap(), z(&[0, 1]));
        // (X-1)^2 (X+2) = X^3 - 3X + 2
        assert_eq!(z(&[2, -3, 0, 1]).squarefree_part().unwrap(), z(&[-2, 1, 1]));
        assert_eq!(z(&[1, -1, 1]).squarefree_part().unwrap(), z(&[1, -1, 1]));
        assert!(z(&[]).squarefree_part().is_err());
        assert_eq!(z(&[5]).squarefree_part().unwrap(), z(&[1]));
    }

    #[test]
    fn normalize_examples() {
        let f = q(&[(0, 1), (0, 1), (1, 2), (0, 1), (1, 2)]);
        let (g, d) = f.normalize();
        assert_eq!(g, IntPolynomial::from_i64s(&[0, 0, 1, 0, 1]));
        assert_eq!(d, BigInt::from(2));

        let (g, d) = z(&[-1, 1]).normalize();
        assert_eq!((g, d), (IntPolynomial::from_i64s(&[-1, 1]), BigInt::from(1)));

        let (g, d) = q(&[(1, 4), (1, 6)]).normalize();
        assert_eq!((g, d), (IntPolynomial::from_i64s(&[3, 2]), BigInt::from(12)));

        let (g, d) = z(&[]).normalize();
        assert!(g.is_zero());
        assert_eq!(d, BigInt::from(1));
    }

    #[test]
    fn compose_and_eval() {
        // (X^2)(X + 1) = X^2 + 2X + 1
        let sq = z(&[0, 0, 1]);
        assert_eq!(sq.compose(&z(&[1, 1])), z(&[1, 2, 1]));
        assert_eq!(z(&[1, -1, 1]).eval(&int(3)), int(7));
        assert_eq!(z(&[1, 2, 3]).pow(3), &(&z(&[1, 2, 3]) * &z(&[1, 2, 3])) * &z(&[1, 2, 3]));
    }

    #[test]
    fn binomials_take_integer_values() {
        for k in 0..7 {
            let b = binomial_polynomial(k);
            assert_eq!(b.degree(), Some(k as usize));
            for x in -10..10 {
                assert!(b.eval(&int(x)).is_integer(), "C(X,{k}) at {x}");
            }
        }
        assert_eq!(binomial_polynomial(2), q(&[(0, 1), (-1, 2), (1, 2)]));
    }

    #[test]
    fn display() {
        assert_eq!(z(&[0, 0, 1]).to_string(), "X^2");
        assert_eq!(q(&[(0, 1), (0, 1), (1, 2), (0, 1), (1, 2)]).to_string(), "1/2*X^4 + 1/2*X^2");
        assert_eq!(z(&[1, -1, 1]).to_string(), "X^2 - X + 1");
        assert_eq!(z(&[-3]).to_string(), "-3");
        assert_eq!(z(&[]).to_string(), "0");
    }

    #[test]
    fn product_tree_matches_fold() {
        let fs: Vec<IntPolynomial> = (0..7).map(|c| IntPolynomial::from_i64s(&[c, 1])).collect();
        let folded = fs.iter().fold(IntPolynomial::one(), |a, b| &a * b);
        assert_eq!(IntPolynomial::product(fs), folded);
    }
}
