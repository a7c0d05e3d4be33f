//! Dense exact rational square matrices and their spectra.
//!
//! Spectra are never computed numerically. A finite set of algebraic numbers
//! is represented by the monic squarefree rational polynomial that has exactly
//! those roots, so two spectra are equal iff their polynomials are equal.

use std::fmt;
use std::ops::{Add, Mul, Sub};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::exact::{ExactRational, Polynomial, RatPolynomial};

#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct RatMatrix {
    n: usize,
    entries: Vec<ExactRational>,
}

impl RatMatrix {
    /// Row-major entries.
    pub fn new(n: usize, entries: Vec<ExactRational>) -> Result<Self> {
        if n == 0 {
            return Err(Error::EmptyMatrix);
        }
        if entries.len() != n * n {
            return Err(Error::DimensionMismatch { expected: n * n, found: entries.len() });
        }
        Ok(RatMatrix { n, entries })
    }

    pub fn from_rows(rows: Vec<Vec<ExactRational>>) -> Result<Self> {
        let n = rows.len();
        if n == 0 {
            return Err(Error::EmptyMatrix);
        }
        let mut entries = Vec::with_capacity(n * n);
        for row in rows {
            if row.len() != n {
                return Err(Error::DimensionMismatch { expected: n, found: row.len() });
            }
            entries.extend(row);
        }
        Ok(RatMatrix { n, entries })
    }

    pub fn from_i64_rows(rows: &[&[i64]]) -> Result<Self> {
        Self::from_rows(
            rows.iter()
                .map(|r| r.iter().map(|&x| BigRational::from_integer(x.into())).collect())
                .collect(),
        )
    }

    pub fn zero(n: usize) -> Self {
        assert!(n > 0);
        RatMatrix { n, entries: vec![BigRational::zero(); n * n] }
    }

    pub fn scalar(n: usize, c: ExactRational) -> Self {
        let mut m = Self::zero(n);
        for i in 0..n {
            m.entries[i * n + i] = c.clone();
        }
        m
    }

    pub fn identity(n: usize) -> Self {
        Self::scalar(n, BigRational::one())
    }

    pub fn diagonal(diag: &[ExactRational]) -> Result<Self> {
        let n = diag.len();
        if n == 0 {
            return Err(Error::EmptyMatrix);
        }
        let mut m = Self::zero(n);
        for (i, d) in diag.iter().enumerate() {
            m.entries[i * n + i] = d.clone();
        }
        Ok(m)
    }

    /// Companion matrix of a monic polynomial: ones on the subdiagonal and
    /// the negated low coefficients in the last column.
    pub fn companion(p: &RatPolynomial) -> Result<Self> {
        let n = match p.degree() {
            None | Some(0) => return Err(Error::ConstantDivisor),
            Some(n) => n,
        };
        if !p.is_monic() {
            return Err(Error::NonMonicDivisor);
        }
        let mut m = Self::zero(n);
        for i in 0..n {
            if i + 1 < n {
                m.entries[(i + 1) * n + i] = BigRational::one();
            }
            m.entries[i * n + n - 1] = -p.coeff(i);
        }
        Ok(m)
    }

    pub fn dim(&self) -> usize {
        self.n
    }

    pub fn get(&self, i: usize, j: usize) -> &ExactRational {
        &self.entries[i * self.n + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: ExactRational) {
        self.entries[i * self.n + j] = v;
    }

    pub fn entries(&self) -> &[ExactRational] {
        &self.entries
    }

    pub fn rows(&self) -> Vec<Vec<ExactRational>> {
        self.entries.chunks(self.n).map(|r| r.to_vec()).collect()
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(Zero::is_zero)
    }

    pub fn has_integer_entries(&self) -> bool {
        self.entries.iter().all(|x| x.is_integer())
    }

    pub fn is_upper_triangular(&self) -> bool {
        (0..self.n).all(|i| (0..i).all(|j| self.get(i, j).is_zero()))
    }

    pub fn diagonal_entries(&self) -> Vec<ExactRational> {
        (0..self.n).map(|i| self.get(i, i).clone()).collect()
    }

    pub fn trace(&self) -> ExactRational {
        (0..self.n).fold(BigRational::zero(), |acc, i| acc + self.get(i, i))
    }

    pub fn scale(&self, c: &ExactRational) -> Self {
        RatMatrix { n: self.n, entries: self.entries.iter().map(|x| x * c).collect() }
    }

    fn check_same_dim(&self, other: &Self) -> Result<()> {
        if self.n != other.n {
            return Err(Error::DimensionMismatch { expected: self.n, found: other.n });
        }
        Ok(())
    }

    pub fn try_mul(&self, other: &Self) -> Result<Self> {
        self.check_same_dim(other)?;
        let n = self.n;
        let mut out = vec![BigRational::zero(); n * n];
        for i in 0..n {
            for k in 0..n {
                let a = &self.entries[i * n + k];
                if a.is_zero() {
                    continue;
                }
                for j in 0..n {
                    let b = &other.entries[k * n + j];
                    if !b.is_zero() {
                        out[i * n + j] += a * b;
                    }
                }
            }
        }
        Ok(RatMatrix { n, entries: out })
    }

    pub fn try_add(&self, other: &Self) -> Result<Self> {
        self.check_same_dim(other)?;
        Ok(RatMatrix {
            n: self.n,
            entries: self.entries.iter().zip(&other.entries).map(|(a, b)| a + b).collect(),
        })
    }

    pub fn try_sub(&self, other: &Self) -> Result<Self> {
        self.check_same_dim(other)?;
        Ok(RatMatrix {
            n: self.n,
            entries: self.entries.iter().zip(&other.entries).map(|(a, b)| a - b).collect(),
        })
    }

    fn add_scalar(&mut self, c: &ExactRational) {
        for i in 0..self.n {
            self.entries[i * self.n + i] += c;
        }
    }

    /// Gauss–Jordan inverse; `None` when singular.
    pub fn inverse(&self) -> Option<Self> {
        let n = self.n;
        let mut a = self.entries.clone();
        let mut inv = Self::identity(n).entries;
        for col in 0..n {
            let pivot = (col..n).find(|&r| !a[r * n + col].is_zero())?;
            if pivot != col {
                for j in 0..n {
                    a.swap(pivot * n + j, col * n + j);
                    inv.swap(pivot * n + j, col * n + j);
                }
            }
            let p = a[col * n + col].recip();
            for j in 0..n {
                a[col * n + j] *= &p;
                inv[col * n + j] *= &p;
            }
            for r in 0..n {
                if r == col || a[r * n + col].is_zero() {
                    continue;
                }
                let factor = a[r * n + col].clone();
                for j in 0..n {
                    let (x, y) = (&a[col * n + j] * &factor, &inv[col * n + j] * &factor);
                    a[r * n + j] -= x;
                    inv[r * n + j] -= y;
                }
            }
        }
        Some(RatMatrix { n, entries: inv })
    }

    /// Matrix-vector product.
    pub fn apply(&self, v: &[ExactRational]) -> Vec<ExactRational> {
        self.entries
            .chunks(self.n)
            .map(|row| row.iter().zip(v).fold(BigRational::zero(), |acc, (a, b)| acc + a * b))
            .collect()
    }

    /// `f(M)` by Horner's scheme; constants act as scalar matrices.
    pub fn eval_poly(&self, f: &RatPolynomial) -> Self {
        let mut acc = Self::zero(self.n);
        for c in f.coeffs().iter().rev() {
            acc = &acc * self;
            acc.add_scalar(c);
        }
        acc
    }

    /// Monic generator of the null ideal, found as the first linear dependence
    /// among `I, M, M^2, ...` by incremental exact elimination.
    pub fn minimal_polynomial(&self) -> RatPolynomial {
        let n = self.n;
        // Each reduced row keeps its pivot column and the combination of
        // powers of M it represents.
        let mut basis: Vec<(usize, Vec<ExactRational>, Vec<ExactRational>)> = Vec::new();
        let mut power = Self::identity(n);
        for k in 0..=n {
            let mut v = power.entries.clone();
            let mut combo = vec![BigRational::zero(); k + 1];
            combo[k] = BigRational::one();
            for (pivot, row, row_combo) in &basis {
                if v[*pivot].is_zero() {
                    continue;
                }
                let factor = &v[*pivot] / &row[*pivot];
                for (x, r) in v.iter_mut().zip(row) {
                    if !r.is_zero() {
                        *x -= &factor * r;
                    }
                }
                for (c, rc) in combo.iter_mut().zip(row_combo) {
                    if !rc.is_zero() {
                        *c -= &factor * rc;
                    }
                }
            }
            match v.iter().position(|x| !x.is_zero()) {
                None => return Polynomial::new(combo),
                Some(pivot) => basis.push((pivot, v, combo)),
            }
            power = &power * self;
        }
        unreachable!("Cayley-Hamilton bounds the minimal polynomial degree by n")
    }

    /// Faddeev–LeVerrier recurrence over Q.
    pub fn characteristic_polynomial(&self) -> RatPolynomial {
        let n = self.n;
        let mut coeffs = vec![BigRational::zero(); n + 1];
        coeffs[n] = BigRational::one();
        let mut aux = Self::zero(n);
        for k in 1..=n {
            // aux_k = M aux_{k-1} + c_{n-k+1} I,  c_{n-k} = -tr(M aux_k) / k
            aux = self * &aux;
            aux.add_scalar(&coeffs[n - k + 1]);
            let t = (self * &aux).trace();
            coeffs[n - k] = -t / BigRational::from_integer(BigInt::from(k));
        }
        Polynomial::new(coeffs)
    }

    /// Integral over Z iff the minimal polynomial has integer coefficients.
    pub fn is_integral(&self) -> bool {
        self.minimal_polynomial().has_integer_coeffs()
    }

    pub fn spectrum(&self) -> SpectrumPoly {
        SpectrumPoly::from_polynomial(&self.minimal_polynomial()).expect("minimal polynomial is nonzero")
    }
}

impl Mul for &RatMatrix {
    type Output = RatMatrix;

    fn mul(self, rhs: &RatMatrix) -> RatMatrix {
        self.try_mul(rhs).expect("matrix dimensions agree")
    }
}

impl Add for &RatMatrix {
    type Output = RatMatrix;

    fn add(self, rhs: &RatMatrix) -> RatMatrix {
        self.try_add(rhs).expect("matrix dimensions agree")
    }
}

impl Sub for &RatMatrix {
    type Output = RatMatrix;

    fn sub(self, rhs: &RatMatrix) -> RatMatrix {
        self.try_sub(rhs).expect("matrix dimensions agree")
    }
}

impl fmt::Display for RatMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for (i, row) in self.entries.chunks(self.n).enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "[")?;
            for (j, x) in row.iter().enumerate() {
                if j > 0 {
                    write!(f, ", ")?;
                }
                write!(f, "{x}")?;
            }
            write!(f, "]")?;
        }
        write!(f, "]")
    }
}

/// A finite set of algebraic numbers, held as the monic squarefree
/// polynomial whose roots are exactly its elements.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct SpectrumPoly(RatPolynomial);

impl SpectrumPoly {
    /// Root set of `p`, i.e. its monic squarefree part.
    pub fn from_polynomial(p: &RatPolynomial) -> Result<Self> {
        p.squarefree_part().map(SpectrumPoly)
    }

    pub fn poly(&self) -> &RatPolynomial {
        &self.0
    }

    pub fn into_poly(self) -> RatPolynomial {
        self.0
    }

    /// Every root is an algebraic integer.
    pub fn is_integral(&self) -> bool {
        self.0.has_integer_coeffs()
    }

    /// `{ f(a) : a in self }`, computed as the squarefree characteristic
    /// polynomial of `f` evaluated at the companion matrix.
    pub fn image(&self, f: &RatPolynomial) -> Result<SpectrumPoly> {
        let c = RatMatrix::companion(&self.0)?;
        SpectrumPoly::from_polynomial(&c.eval_poly(f).characteristic_polynomial())
    }
}

impl fmt::Display for SpectrumPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.0.fmt(f)
    }
}
