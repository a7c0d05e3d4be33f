//! Seeded random inputs for property drivers. Everything is reproducible
//! from a `u64` seed.

use std::sync::Arc;

use num_bigint::BigInt;
use num_rational::BigRational;
use rand::Rng;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::exact::{ExactRational, IntPolynomial, RatPolynomial};
use crate::matrix::RatMatrix;
use crate::order::{quaternion_to_hurwitz, AlgebraElement, Order};

pub type SampleRng = ChaCha8Rng;

pub fn rng(seed: u64) -> SampleRng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Numerator in `[-bound, bound]`, denominator in `[1, max_den]`.
pub fn rational<R: Rng>(rng: &mut R, bound: i64, max_den: i64) -> ExactRational {
    let num = rng.gen_range(-bound..=bound);
    let den = rng.gen_range(1..=max_den.max(1));
    BigRational::new(num.into(), den.into())
}

pub fn integer<R: Rng>(rng: &mut R, bound: i64) -> ExactRational {
    BigRational::from_integer(rng.gen_range(-bound..=bound).into())
}

pub fn rat_matrix<R: Rng>(rng: &mut R, n: usize, bound: i64, max_den: i64) -> RatMatrix {
    RatMatrix::new(n, (0..n * n).map(|_| rational(rng, bound, max_den)).collect()).expect("n ≥ 1")
}

pub fn int_matrix<R: Rng>(rng: &mut R, n: usize, bound: i64) -> RatMatrix {
    rat_matrix(rng, n, bound, 1)
}

pub fn upper_triangular<R: Rng>(rng: &mut R, n: usize, bound: i64) -> RatMatrix {
    let mut m = RatMatrix::zero(n);
    for i in 0..n {
        for j in i..n {
            m.set(i, j, integer(rng, bound));
        }
    }
    m
}

/// A random integer matrix of determinant ±1 together with its inverse,
/// built from elementary row operations.
pub fn unimodular<R: Rng>(rng: &mut R, n: usize, steps: usize, bound: i64) -> (RatMatrix, RatMatrix) {
    let mut u = RatMatrix::identity(n);
    let mut inv = RatMatrix::identity(n);
    if n < 2 {
        if rng.gen_bool(0.5) {
            let neg = RatMatrix::scalar(1, BigRational::from_integer((-1).into()));
            return (neg.clone(), neg);
        }
        return (u, inv);
    }
    for _ in 0..steps {
        let i = rng.gen_range(0..n);
        let mut j = rng.gen_range(0..n - 1);
        if j >= i {
            j += 1;
        }
        let c = rng.gen_range(-bound..=bound);
        // E = I + c e_ij, E^-1 = I - c e_ij
        let mut e = RatMatrix::identity(n);
        e.set(i, j, BigRational::from_integer(c.into()));
        let mut e_inv = RatMatrix::identity(n);
        e_inv.set(i, j, BigRational::from_integer((-c).into()));
        u = &e * &u;
        inv = &inv * &e_inv;
    }
    (u, inv)
}

pub fn rat_poly<R: Rng>(rng: &mut R, max_degree: usize, bound: i64, max_den: i64) -> RatPolynomial {
    let deg = rng.gen_range(0..=max_degree);
    RatPolynomial::new((0..=deg).map(|_| rational(rng, bound, max_den)).collect())
}

pub fn monic_int_poly<R: Rng>(rng: &mut R, degree: usize, bound: i64) -> IntPolynomial {
    let mut c: Vec<BigInt> = (0..degree).map(|_| BigInt::from(rng.gen_range(-bound..=bound))).collect();
    c.push(1.into());
    IntPolynomial::new(c)
}

pub fn int_poly<R: Rng>(rng: &mut R, max_degree: usize, bound: i64) -> IntPolynomial {
    let deg = rng.gen_range(0..=max_degree);
    IntPolynomial::new((0..=deg).map(|_| BigInt::from(rng.gen_range(-bound..=bound))).collect())
}

/// Element of the order with integer coordinates in `[-bound, bound]`.
pub fn element<R: Rng>(rng: &mut R, order: &Arc<Order>, bound: i64) -> AlgebraElement {
    let coords = (0..order.rank()).map(|_| integer(rng, bound)).collect();
    AlgebraElement::new(order, coords).expect("rank coordinates")
}

pub fn elements<R: Rng>(rng: &mut R, order: &Arc<Order>, bound: i64, count: usize) -> Vec<AlgebraElement> {
    (0..count).map(|_| element(rng, order, bound)).collect()
}

/// Integral non-scalar element of `hurwitz ⊗ Q` whose quaternion
/// coordinates have denominators 1 or 2 and numerators in `[-bound, bound]`,
/// by rejection sampling.
pub fn integral_quaternion<R: Rng>(rng: &mut R, hurwitz: &Arc<Order>, bound: i64) -> AlgebraElement {
    loop {
        let q: [ExactRational; 4] = std::array::from_fn(|_| rational(rng, bound, 2));
        let norm: ExactRational = q.iter().map(|x| x * x).sum();
        let trace = &q[0] + &q[0];
        if !norm.is_integer() || !trace.is_integer() || q[1..].iter().all(|x| x == &BigRational::from_integer(0.into())) {
            continue;
        }
        return AlgebraElement::new(hurwitz, quaternion_to_hurwitz(&q)).expect("rank 4");
    }
}
