use std::sync::Arc;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use proptest::prelude::*;
use rand::Rng;

use intval_core::density::{hurwitz_match, is_three_square_exception, three_squares};
use intval_core::exact::{binomial_polynomial, int, rat};
use intval_core::membership::{
    member_int, pullback_member, scaling_lemma_check, value_is_integral,
};
use intval_core::{sample, AlgebraElement, IntPolynomial, Order, RatMatrix, RatPolynomial, SpectrumPoly, Verdict};

fn order(name: &str) -> Arc<Order> {
    Arc::new(Order::builtin(name).unwrap())
}

fn quartic() -> RatPolynomial {
    RatPolynomial::new(vec![int(0), int(0), rat(1, 2), int(0), rat(1, 2)])
}

fn coeff() -> impl Strategy<Value = BigRational> {
    (-30i64..=30, 1i64..=6).prop_map(|(n, d)| rat(n, d))
}

fn poly(max_len: usize) -> impl Strategy<Value = RatPolynomial> {
    prop::collection::vec(coeff(), 0..=max_len).prop_map(RatPolynomial::new)
}

fn monic(max_deg: usize) -> impl Strategy<Value = RatPolynomial> {
    prop::collection::vec(coeff(), 1..=max_deg).prop_map(|mut c| {
        c.push(BigRational::one());
        RatPolynomial::new(c)
    })
}

fn matrix() -> impl Strategy<Value = RatMatrix> {
    (1usize..=4, any::<u64>()).prop_map(|(n, seed)| sample::rat_matrix(&mut sample::rng(seed), n, 5, 4))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn division_reconstructs(f in poly(7), g in monic(4)) {
        let (q, r) = f.div_rem_monic(&g).unwrap();
        prop_assert_eq!(&(&q * &g) + &r, f);
        prop_assert!(r.degree().is_none_or(|d| d < g.degree().unwrap()));
    }

    #[test]
    fn gcd_divides(a in poly(5), b in poly(5), c in monic(2)) {
        let (a, b) = (&a * &c, &b * &c);
        prop_assume!(!a.is_zero() || !b.is_zero());
        let g = a.gcd(&b).unwrap();
        prop_assert!(g.is_monic());
        prop_assert!(a.rem_monic(&g).unwrap().is_zero());
        prop_assert!(b.rem_monic(&g).unwrap().is_zero());
        if !a.is_zero() && !b.is_zero() {
            prop_assert!(g.degree().unwrap() >= c.degree().unwrap());
        }
    }

    #[test]
    fn squarefree_part_of_powers(f in monic(3), e in 1u32..=3) {
        let s = f.pow(e).squarefree_part().unwrap();
        prop_assert_eq!(s.clone(), f.squarefree_part().unwrap());
        prop_assert!(s.gcd(&s.derivative()).unwrap().degree() == Some(0));
    }

    #[test]
    fn normalize_is_minimal(f in poly(6)) {
        let (g, d) = f.normalize();
        prop_assert!(d.is_positive());
        prop_assert_eq!(g.to_rational().scale(&BigRational::new(BigInt::one(), d.clone())), f.clone());
        // A smaller denominator would be a proper divisor d/p with every
        // coefficient of g divisible by p, contradicting lcm minimality.
        if !f.is_zero() {
            let content = g.coeffs().iter().fold(BigInt::zero(), |acc, c| num_integer::Integer::gcd(&acc, c));
            prop_assert!(num_integer::Integer::gcd(&content, &d).is_one());
        }
    }

    #[test]
    fn minimal_polynomial_annihilates_and_divides_charpoly(m in matrix()) {
        let mu = m.minimal_polynomial();
        prop_assert!(mu.is_monic());
        prop_assert!(m.eval_poly(&mu).is_zero());
        let chi = m.characteristic_polynomial();
        prop_assert_eq!(chi.degree(), Some(m.dim()));
        prop_assert!(chi.rem_monic(&mu).unwrap().is_zero());
        prop_assert!(m.eval_poly(&chi).is_zero());
    }

    #[test]
    fn spectral_functoriality(m in matrix(), f in poly(4)) {
        let lhs = m.spectrum().image(&f).unwrap();
        let rhs = SpectrumPoly::from_polynomial(&m.eval_poly(&f).minimal_polynomial()).unwrap();
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn integrality_matches_charpoly(m in matrix()) {
        prop_assert_eq!(m.is_integral(), m.characteristic_polynomial().has_integer_coeffs());
    }

    #[test]
    fn integral_closed_under_ring_ops(seed in any::<u64>()) {
        // Commuting integral matrices: polynomials in one integral matrix.
        let mut rng = sample::rng(seed);
        let n = rng.gen_range(1..=4);
        let (p, inv) = loop {
            let p = sample::rat_matrix(&mut rng, n, 3, 3);
            if let Some(inv) = p.inverse() { break (p, inv); }
        };
        let base = &(&p * &sample::int_matrix(&mut rng, n, 4)) * &inv;
        let g = sample::int_poly(&mut rng, 3, 4).to_rational();
        let h = sample::int_poly(&mut rng, 3, 4).to_rational();
        let (a, b) = (base.eval_poly(&g), base.eval_poly(&h));
        prop_assert!(a.is_integral() && b.is_integral());
        prop_assert!((&a + &b).is_integral());
        prop_assert!((&a * &b).is_integral());
    }

    #[test]
    fn companion_spectrum(p in monic(4), e in 1u32..=2) {
        let q = p.pow(e);
        let c = RatMatrix::companion(&q).unwrap();
        prop_assert_eq!(c.characteristic_polynomial(), q.clone());
        let expected = q.squarefree_part().unwrap();
        prop_assert_eq!(c.spectrum().into_poly(), expected);
    }

    #[test]
    fn regular_representation_is_homomorphism(seed in any::<u64>(), which in 0usize..6) {
        let name = ["quadratic(-3)", "quadratic_half(5)", "lipschitz", "hurwitz", "matrix(2)", "triangular(3)"][which];
        let o = order(name);
        let mut rng = sample::rng(seed);
        let x = sample::element(&mut rng, &o, 6);
        let y = sample::element(&mut rng, &o, 6);
        let xy = x.mul(&y).unwrap();
        prop_assert_eq!(xy.left_regular_matrix(), &x.left_regular_matrix() * &y.left_regular_matrix());
        prop_assert_eq!(xy.regular_representation(), &x.regular_representation() * &y.regular_representation());
        let deg = x.minimal_polynomial().degree().unwrap();
        prop_assert!(deg <= o.spectral_degree());
        prop_assert!(x.is_integral());
    }

    #[test]
    fn rationals_in_order_are_integers(num in -40i64..=40, den in 1i64..=6, which in 0usize..4) {
        let name = ["integers", "quadratic(-3)", "hurwitz", "matrix(2)"][which];
        let o = order(name);
        let c = rat(num, den);
        let a = AlgebraElement::scalar(&o, &c);
        prop_assert_eq!(a.is_in_order(), c.is_integer());
        prop_assert_eq!(a.is_integral(), c.is_integer());
    }

    #[test]
    fn natural_and_regular_minpolys_agree(seed in any::<u64>(), k in 2usize..=3) {
        let o = order(&format!("matrix({k})"));
        let x = sample::element(&mut sample::rng(seed), &o, 5);
        prop_assert_eq!(x.regular_representation().minimal_polynomial(), x.left_regular_matrix().minimal_polynomial());
    }

    #[test]
    fn member_int_is_sound(seed in any::<u64>(), which in 0usize..4, k in 1u32..=3) {
        let name = ["quadratic(-3)", "quadratic_half(-3)", "lipschitz", "matrix(2)"][which];
        let o = order(name);
        let mut rng = sample::rng(seed);
        let f = if rng.gen_bool(0.5) { quartic() } else { binomial_polynomial(k) };
        let v = member_int(&f, &o).unwrap();
        match v.verdict {
            Verdict::Yes => {
                for a in sample::elements(&mut rng, &o, 20, 200) {
                    prop_assert!(a.eval(&f).is_in_order(), "{} at {}", f, a);
                }
            }
            Verdict::No => {
                let w = v.counterexample().unwrap();
                prop_assert!(w.is_in_order() && !w.eval(&f).is_in_order());
            }
            Verdict::UnknownBounded => prop_assert!(false, "member_int is exact"),
        }
    }

    #[test]
    fn intval_equivalence_per_element(seed in any::<u64>(), f in poly(4)) {
        // pullback at a ⇒ f(a) ∈ A ⇒ f(a) integral, and f(a) depends only
        // on f mod μ_a.
        let o = order("quadratic(-3)");
        let a = sample::element(&mut sample::rng(seed), &o, 10);
        let mu = a.minimal_polynomial().to_integer().unwrap();
        if pullback_member(&f, &mu).unwrap() {
            prop_assert!(a.eval(&f).is_in_order());
        }
        if a.eval(&f).is_in_order() {
            prop_assert!(value_is_integral(&f, &a));
        }
        let r = f.rem_monic(&mu.to_rational()).unwrap();
        prop_assert_eq!(a.eval(&r), a.eval(&f));
    }

    #[test]
    fn scaling_lemma_random_h(seed in any::<u64>()) {
        let o = order("quadratic(-3)");
        let mut rng = sample::rng(seed);
        let h = sample::int_poly(&mut rng, 3, 5);
        let elements = sample::elements(&mut rng, &o, 10, 20);
        prop_assert!(scaling_lemma_check(&quartic(), &h, &o, &elements).unwrap());
    }

    #[test]
    fn matrix2_int_inside_pullbacks(seed in any::<u64>(), choice in 0usize..4) {
        let o = order("matrix(2)");
        let mut rng = sample::rng(seed);
        let f = match choice {
            0 => quartic(),
            1 => binomial_polynomial(rng.gen_range(1..=3)),
            _ => sample::rat_poly(&mut rng, 4, 6, 2),
        };
        if member_int(&f, &o).unwrap().is_yes() {
            for m in sample::elements(&mut rng, &o, 10, 30) {
                let mu = m.minimal_polynomial().to_integer().unwrap();
                prop_assert!(pullback_member(&f, &mu).unwrap(), "{} at {}", f, m);
            }
        }
    }

    #[test]
    fn hurwitz_match_preserves_minpoly(seed in any::<u64>()) {
        let h = order("hurwitz");
        let q = sample::integral_quaternion(&mut sample::rng(seed), &h, 25);
        let m = hurwitz_match(&q).unwrap();
        prop_assert!(m.is_in_order());
        prop_assert_eq!(m.minimal_polynomial(), q.minimal_polynomial());
    }
}

#[test]
fn three_squares_up_to_10000() {
    for n in 0..=10_000u64 {
        match three_squares(n).decomposition {
            Some((a, b, c)) => {
                assert!(a <= b && b <= c);
                assert_eq!(a * a + b * b + c * c, n);
            }
            None => assert!(is_three_square_exception(n), "{n}"),
        }
    }
}

#[test]
fn integer_polynomials_lie_in_every_int() {
    for name in ["quadratic(-3)", "hurwitz", "matrix(2)", "triangular(2)"] {
        let o = order(name);
        let f = IntPolynomial::from_i64s(&[3, -1, 4, 1]).to_rational();
        let v = member_int(&f, &o).unwrap();
        assert!(v.is_yes());
        assert_eq!(v.checked_count, 0);
    }
}
