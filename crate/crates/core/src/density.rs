//! Polynomially dense subsets: companion-matrix families, triangular
//! spectra, eigenvalue matching in the Hurwitz order, and refutation of
//! density by explicit witnesses.

use std::sync::Arc;

use num_bigint::BigInt;
use num_integer::{Integer, Roots};
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::Serialize;

use crate::error::{Error, Result};
use crate::exact::{ExactRational, IntPolynomial, RatPolynomial};
use crate::matrix::{RatMatrix, SpectrumPoly};
use crate::membership::{member_int, value_is_integral};
use crate::order::{hurwitz_to_quaternion, quaternion_to_hurwitz, AlgebraElement, Order};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct ThreeSquares {
    pub n: u64,
    pub decomposition: Option<(u64, u64, u64)>,
}

/// Brute-force search for `a1^2 + a2^2 + a3^2 = n` with `a1 ≤ a2 ≤ a3`;
/// the first triple in lexicographic order is returned.
pub fn three_squares(n: u64) -> ThreeSquares {
    let mut decomposition = None;
    'outer: for a1 in 0u64.. {
        if 3 * a1 * a1 > n {
            break;
        }
        for a2 in a1.. {
            let used = a1 * a1 + a2 * a2;
            if used + a2 * a2 > n {
                break;
            }
            let rest = n - used;
            let a3 = rest.sqrt();
            if a3 * a3 == rest {
                decomposition = Some((a1, a2, a3));
                break 'outer;
            }
        }
    }
    ThreeSquares { n, decomposition }
}

/// `n = 4^k (8m + 7)` for some `k, m ≥ 0`.
pub fn is_three_square_exception(mut n: u64) -> bool {
    if n == 0 {
        return false;
    }
    while n.is_multiple_of(4) {
        n /= 4;
    }
    n % 8 == 7
}

/// Non-negative integer value of an exact rational known to be a natural number.
fn to_natural(q: &ExactRational, what: &str) -> Result<u64> {
    if !q.is_integer() || q.is_negative() {
        return Err(Error::NotIntegral(format!("{what} = {q}")));
    }
    q.to_integer()
        .to_u64()
        .ok_or_else(|| Error::InvalidParameter(format!("{what} = {q} too large")))
}

/// Given an integral non-scalar quaternion `q0 + q1 i + q2 j + q3 k` with
/// rational coordinates, returns a Hurwitz quaternion with the same minimal
/// polynomial `X^2 - 2 q0 X + N`, `N` the reduced norm.
///
/// The vector part is rebuilt from a three-squares decomposition of
/// `N - q0^2` (integral `q0`) or of `4N - (2 q0)^2` (half-integral `q0`,
/// where all three squares are odd). The larger parts go to `i` first.
pub fn hurwitz_match_quaternion(q: &[ExactRational; 4]) -> Result<[ExactRational; 4]> {
    let norm: ExactRational = q.iter().map(|x| x * x).sum();
    let two = BigRational::from_integer(BigInt::from(2));
    let trace = &q[0] * &two;
    if !trace.is_integer() || !norm.is_integer() {
        return Err(Error::NotIntegral(format!("trace {trace}, norm {norm}")));
    }
    if q[1..].iter().all(Zero::is_zero) {
        return Err(Error::ScalarElement);
    }
    let t = trace.to_integer();
    let halves = t.is_odd();
    let target = if halves {
        &norm * BigRational::from_integer(BigInt::from(4)) - BigRational::from_integer(&t * &t)
    } else {
        &norm - &q[0] * &q[0]
    };
    let target = to_natural(&target, "vector norm")?;
    let (a1, a2, a3) = three_squares(target)
        .decomposition
        .ok_or_else(|| Error::Precondition(format!("{target} is not a sum of three squares")))?;
    if halves && [a1, a2, a3].iter().any(|a| a % 2 == 0) {
        return Err(Error::Precondition(format!("decomposition of {target} has an even part")));
    }
    let scale = if halves { two.recip() } else { BigRational::one() };
    let part = |a: u64| BigRational::from_integer(BigInt::from(a)) * &scale;
    Ok([q[0].clone(), part(a3), part(a2), part(a1)])
}

/// [`hurwitz_match_quaternion`] on an element of `hurwitz ⊗ Q`.
pub fn hurwitz_match(q: &AlgebraElement) -> Result<AlgebraElement> {
    if q.order().name() != "hurwitz" {
        return Err(Error::OrderMismatch);
    }
    if !q.is_integral() {
        return Err(Error::NotIntegral(q.to_string()));
    }
    let matched = hurwitz_match_quaternion(&hurwitz_to_quaternion(q.coords()))?;
    AlgebraElement::new(q.order(), quaternion_to_hurwitz(&matched))
}

/// Monic integer polynomials of degree `n` with lower coefficients in
/// `[-height, height]`, constant term varying slowest.
pub fn monic_family(n: usize, height: u64) -> impl Iterator<Item = IntPolynomial> {
    let h = height as i64;
    let base = 2 * height + 1;
    let count = base.pow(n as u32);
    (0..count).map(move |mut idx| {
        let mut coeffs = vec![BigInt::zero(); n + 1];
        for c in coeffs[..n].iter_mut().rev() {
            *c = BigInt::from((idx % base) as i64 - h);
            idx /= base;
        }
        coeffs[n] = BigInt::one();
        IntPolynomial::new(coeffs)
    })
}

/// Companion matrices of [`monic_family`]. With `irreducible_only`, keeps
/// only polynomials certified irreducible by [`certified_irreducible`];
/// uncertified irreducibles are dropped too.
pub fn companion_family(
    n: usize,
    height: u64,
    irreducible_only: bool,
) -> impl Iterator<Item = (IntPolynomial, RatMatrix)> {
    monic_family(n, height)
        .filter(move |p| !irreducible_only || certified_irreducible(p))
        .map(|p| {
            let c = RatMatrix::companion(&p.to_rational()).expect("monic of positive degree");
            (p, c)
        })
}

pub const IRREDUCIBILITY_PRIMES: [u64; 4] = [2, 3, 5, 7];

/// Sufficient test: a monic integer polynomial irreducible modulo some
/// prime in [`IRREDUCIBILITY_PRIMES`] is irreducible over Q.
pub fn certified_irreducible(p: &IntPolynomial) -> bool {
    match p.degree() {
        None | Some(0) => false,
        Some(1) => true,
        _ => IRREDUCIBILITY_PRIMES.iter().any(|&q| irreducible_mod(p, q)),
    }
}

/// Dense polynomial over F_p, ascending coefficients, trimmed.
fn reduce_mod(p: &IntPolynomial, m: u64) -> Vec<u64> {
    let mb = BigInt::from(m);
    let mut v: Vec<u64> = p
        .coeffs()
        .iter()
        .map(|c| c.mod_floor(&mb).to_u64().expect("reduced below modulus"))
        .collect();
    while v.last() == Some(&0) {
        v.pop();
    }
    v
}

fn rem_mod(a: &[u64], b: &[u64], p: u64) -> Vec<u64> {
    let mut r = a.to_vec();
    let db = b.len() - 1;
    let inv = mod_inverse(b[db], p);
    while r.len() > db && !r.is_empty() {
        let shift = r.len() - 1 - db;
        let c = r[r.len() - 1] * inv % p;
        for (i, &bc) in b.iter().enumerate() {
            r[shift + i] = (r[shift + i] + p - c * bc % p) % p;
        }
        while r.last() == Some(&0) {
            r.pop();
        }
    }
    r
}

fn mod_inverse(a: u64, p: u64) -> u64 {
    // p prime and small: Fermat
    let mut result = 1;
    let mut base = a % p;
    let mut e = p - 2;
    while e > 0 {
        if e & 1 == 1 {
            result = result * base % p;
        }
        base = base * base % p;
        e >>= 1;
    }
    result
}

/// Irreducibility over F_p of a polynomial whose degree survives reduction,
/// by trial division with every monic polynomial of degree up to half.
pub fn irreducible_mod(poly: &IntPolynomial, p: u64) -> bool {
    let f = reduce_mod(poly, p);
    let deg = match poly.degree() {
        Some(d) if f.len() == d + 1 => d,
        _ => return false,
    };
    for k in 1..=deg / 2 {
        let count = p.pow(k as u32);
        for mut idx in 0..count {
            let mut g = vec![0u64; k + 1];
            for c in g[..k].iter_mut() {
                *c = idx % p;
                idx /= p;
            }
            g[k] = 1;
            if rem_mod(&f, &g, p).is_empty() {
                return false;
            }
        }
    }
    true
}

/// Root set of an upper triangular matrix: its distinct diagonal entries.
pub fn triangular_spectrum(m: &RatMatrix) -> Result<SpectrumPoly> {
    if !m.is_upper_triangular() {
        return Err(Error::NotTriangular);
    }
    let mut diag = m.diagonal_entries();
    diag.sort();
    diag.dedup();
    let p = diag.iter().fold(RatPolynomial::one(), |acc, d| {
        &acc * &RatPolynomial::new(vec![-d.clone(), BigRational::one()])
    });
    let s = SpectrumPoly::from_polynomial(&p)?;
    debug_assert_eq!(s, m.spectrum());
    Ok(s)
}

/// Looks for an integral candidate `b` with `f(b)` not integral while `f`
/// maps the whole order into itself. Such a `b` shows `Int(A) ⊄ Int(A′)`,
/// so `A` is not polynomially dense in `A′`. Returns `None` when
/// `f ∉ Int(A)` or no candidate separates.
pub fn density_refute(
    f: &RatPolynomial,
    order: &Arc<Order>,
    candidates: &[AlgebraElement],
) -> Result<Option<AlgebraElement>> {
    if candidates.iter().any(|b| b.order() != order) {
        return Err(Error::OrderMismatch);
    }
    if let Some(b) = candidates.iter().find(|b| !b.is_integral()) {
        return Err(Error::NotIntegral(b.to_string()));
    }
    if !member_int(f, order)?.is_yes() {
        return Ok(None);
    }
    Ok(candidates.iter().find(|b| !value_is_integral(f, b)).cloned())
}

/// For pairs of matrices with equal spectra, integrality of `f(M)` and of
/// `f(N)` must agree.
pub fn spectrum_transfer_check(f: &RatPolynomial, pairs: &[(RatMatrix, RatMatrix)]) -> Result<bool> {
    for (i, (m, n)) in pairs.iter().enumerate() {
        if m.spectrum() != n.spectrum() {
            return Err(Error::SpectrumMismatch(i));
        }
    }
    Ok(pairs
        .iter()
        .all(|(m, n)| m.eval_poly(f).is_integral() == n.eval_poly(f).is_integral()))
}

/// The integral candidates that separate the two standard non-dense
/// examples: `θ = (1 + s)/2` in `Z[√-3] ⊗ Q` and `(1 + i + j + k)/2` in the
/// Lipschitz quaternions tensored with Q. Other orders get none.
pub fn builtin_candidates(order: &Arc<Order>) -> Vec<AlgebraElement> {
    let half = crate::exact::rat(1, 2);
    match order.name() {
        "quadratic(-3)" => vec![AlgebraElement::new(order, vec![half.clone(), half]).expect("rank 2")],
        "lipschitz" => vec![AlgebraElement::new(order, vec![half; 4]).expect("rank 4")],
        _ => Vec::new(),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::{int, rat};

    fn quartic() -> RatPolynomial {
        RatPolynomial::new(vec![int(0), int(0), rat(1, 2), int(0), rat(1, 2)])
    }

    fn shared(name: &str) -> Arc<Order> {
        Arc::new(Order::builtin(name).unwrap())
    }

    #[test]
    fn three_squares_examples() {
        assert_eq!(three_squares(3).decomposition, Some((1, 1, 1)));
        assert_eq!(three_squares(7).decomposition, None);
        assert_eq!(three_squares(11).decomposition, Some((1, 1, 3)));
        assert_eq!(three_squares(0).decomposition, Some((0, 0, 0)));
        assert_eq!(three_squares(1).decomposition, Some((0, 0, 1)));
    }

    #[test]
    fn exception_predicate() {
        let ex: Vec<u64> = (0..40).filter(|&n| is_three_square_exception(n)).collect();
        assert_eq!(ex, vec![7, 15, 23, 28, 31, 39]);
    }

    #[test]
    fn hurwitz_match_examples() {
        let h = shared("hurwitz");
        let from_q = |q: [ExactRational; 4]| AlgebraElement::new(&h, quaternion_to_hurwitz(&q)).unwrap();

        let q = from_q([int(0), rat(3, 5), rat(4, 5), int(0)]);
        assert_eq!(hurwitz_match(&q).unwrap(), from_q([int(0), int(1), int(0), int(0)]));

        let alpha = from_q(std::array::from_fn(|_| rat(1, 2)));
        assert_eq!(hurwitz_match(&alpha).unwrap(), alpha);
    }

    #[test]
    fn hurwitz_match_errors() {
        let h = shared("hurwitz");
        let from_q = |q: [ExactRational; 4]| AlgebraElement::new(&h, quaternion_to_hurwitz(&q)).unwrap();
        assert!(matches!(hurwitz_match(&from_q([rat(1, 3), int(1), int(0), int(0)])), Err(Error::NotIntegral(_))));
        assert_eq!(hurwitz_match(&from_q([int(2), int(0), int(0), int(0)])), Err(Error::ScalarElement));
        let l = shared("lipschitz");
        assert_eq!(hurwitz_match(&AlgebraElement::basis(&l, 1)), Err(Error::OrderMismatch));
    }

    #[test]
    fn companion_family_counts() {
        let fam: Vec<_> = companion_family(1, 1, false).map(|(p, _)| p).collect();
        assert_eq!(fam, vec![
            IntPolynomial::from_i64s(&[-1, 1]),
            IntPolynomial::from_i64s(&[0, 1]),
            IntPolynomial::from_i64s(&[1, 1]),
        ]);
        assert_eq!(companion_family(2, 1, false).count(), 9);
        let irr: Vec<_> = companion_family(2, 1, true).map(|(p, _)| p).collect();
        assert!(irr.contains(&IntPolynomial::from_i64s(&[1, 1, 1])));
        assert!(!irr.contains(&IntPolynomial::from_i64s(&[0, 1, 1])));
        assert!(!irr.contains(&IntPolynomial::from_i64s(&[-1, 0, 1])));
    }

    #[test]
    fn irreducibility_mod_p() {
        assert!(irreducible_mod(&IntPolynomial::from_i64s(&[1, 1, 1]), 2));
        assert!(!irreducible_mod(&IntPolynomial::from_i64s(&[1, 0, 1]), 2)); // (X+1)^2
        assert!(irreducible_mod(&IntPolynomial::from_i64s(&[1, 0, 1]), 3));
        // X^4 + 1 is reducible mod every prime
        let x4 = IntPolynomial::from_i64s(&[1, 0, 0, 0, 1]);
        assert!(IRREDUCIBILITY_PRIMES.iter().all(|&p| !irreducible_mod(&x4, p)));
        assert!(!certified_irreducible(&x4));
        // degree drops mod 2 for 2X^2 + ... ; not certified there
        assert!(!irreducible_mod(&IntPolynomial::from_i64s(&[1, 1, 2]), 2));
    }

    #[test]
    fn triangular_spectrum_examples() {
        let m = RatMatrix::from_i64_rows(&[&[1, 4, 2], &[0, 1, 7], &[0, 0, 2]]).unwrap();
        assert_eq!(triangular_spectrum(&m).unwrap().poly(), &RatPolynomial::from_i64s(&[2, -3, 1]));
        assert_eq!(triangular_spectrum(&RatMatrix::zero(3)).unwrap().poly(), &RatPolynomial::x());
        let n = RatMatrix::from_i64_rows(&[&[0, 5], &[0, 0]]).unwrap();
        assert_eq!(triangular_spectrum(&n).unwrap().poly(), &RatPolynomial::x());
        let bad = RatMatrix::from_i64_rows(&[&[0, 5], &[1, 0]]).unwrap();
        assert_eq!(triangular_spectrum(&bad), Err(Error::NotTriangular));
    }

    #[test]
    fn refute_examples() {
        let q = shared("quadratic(-3)");
        let theta = builtin_candidates(&q);
        assert_eq!(density_refute(&quartic(), &q, &theta).unwrap(), Some(theta[0].clone()));

        let l = shared("lipschitz");
        let alpha = builtin_candidates(&l);
        assert_eq!(density_refute(&quartic(), &l, &alpha).unwrap(), Some(alpha[0].clone()));

        assert_eq!(density_refute(&RatPolynomial::x(), &l, &alpha).unwrap(), None);
        let not_integral = vec![AlgebraElement::scalar(&l, &rat(1, 2))];
        assert!(matches!(density_refute(&quartic(), &l, &not_integral), Err(Error::NotIntegral(_))));
    }

    #[test]
    fn transfer_examples() {
        let f = RatPolynomial::new(vec![int(0), rat(-1, 2), rat(1, 2)]);
        let c = RatMatrix::companion(&RatPolynomial::from_i64s(&[0, -1, 1])).unwrap();
        let d = RatMatrix::diagonal(&[int(0), int(1)]).unwrap();
        assert!(spectrum_transfer_check(&f, &[(c.clone(), d.clone()), (c.clone(), c.clone())]).unwrap());
        assert!(c.eval_poly(&f).is_integral() && d.eval_poly(&f).is_integral());
        let e = RatMatrix::diagonal(&[int(0), int(2)]).unwrap();
        assert_eq!(spectrum_transfer_check(&f, &[(c, e)]), Err(Error::SpectrumMismatch(0)));
    }
}
