//! End-to-end example reproductions. Each records named assertions; the run
//! exits non-zero unless all of them hold.

use std::sync::Arc;

use serde_json::{json, Value};

use intval_core::density::{builtin_candidates, density_refute, hurwitz_match, hurwitz_match_quaternion, triangular_spectrum};
use intval_core::exact::{binomial_polynomial, int, rat};
use intval_core::json::{element_to_json, rationals_to_json, verdict_to_json};
use intval_core::membership::{certificate_phi, certificate_report, member_int, value_is_integral};
use intval_core::{sample, AlgebraElement, Order, RatMatrix, RatPolynomial, ResidueBox, Strategy, Verdict};

use crate::commands::{check_json, poly_value};
use crate::{CliError, Common, Example, Outcome};

#[derive(Default)]
struct Assertions {
    items: Vec<Value>,
    failed: bool,
}

impl Assertions {
    fn check(&mut self, name: &str, holds: bool, detail: Value) {
        self.failed |= !holds;
        self.items.push(json!({ "assertion": name, "holds": holds, "detail": detail }));
    }

    fn finish(self, example: &str, inputs: Value) -> Outcome {
        Outcome {
            inputs,
            value: json!({ "example": example, "assertions": self.items, "all_hold": !self.failed }),
            negative: self.failed,
        }
    }
}

fn quartic() -> RatPolynomial {
    RatPolynomial::new(vec![int(0), int(0), rat(1, 2), int(0), rat(1, 2)])
}

fn order(name: &str) -> Result<Arc<Order>, CliError> {
    Ok(Arc::new(Order::builtin(name)?))
}

pub fn run(name: Example, c: &Common) -> Result<Outcome, CliError> {
    match name {
        Example::Zsqrt3 => zsqrt3(),
        Example::Lipschitz => lipschitz(),
        Example::Hurwitz => hurwitz(c),
        Example::Triangular => triangular(c),
        Example::Companion => companion(c),
    }
}

fn zsqrt3() -> Result<Outcome, CliError> {
    let f = quartic();
    let mut out = Assertions::default();
    let a = order("quadratic(-3)")?;
    let v = member_int(&f, &a)?;
    out.check("member_int on Z[√-3] is yes", v.verdict == Verdict::Yes, verdict_to_json(&v));
    out.check("4 residues checked mod 2", v.checked_count == 4, json!(v.checked_count));

    let b = order("quadratic_half(-3)")?;
    let v = member_int(&f, &b)?;
    let theta = AlgebraElement::from_i64s(&b, &[0, 1])?;
    out.check("member_int on Z[θ] is no", v.verdict == Verdict::No, verdict_to_json(&v));
    out.check("witness is θ", v.counterexample() == Some(&theta), json!(theta.to_string()));
    let value = theta.eval(&f);
    out.check("f(θ) = -1/2", value.coords() == [rat(-1, 2), int(0)], element_to_json(&value));

    let phi = certificate_phi(&f, &a)?;
    let residues: Vec<_> = ResidueBox::new(&a, 6)?.iter().collect();
    let check = certificate_report(&phi, &f, &a, &residues, Strategy::default())?;
    out.check("certificate has degree 36", phi.degree() == Some(36), json!(phi.degree()));
    out.check("certificate verifies on residues mod 6", check.passed, check_json(&check));
    Ok(out.finish("zsqrt3", json!({ "poly": poly_value(&f) })))
}

fn lipschitz() -> Result<Outcome, CliError> {
    let f = quartic();
    let mut out = Assertions::default();
    let l = order("lipschitz")?;
    let v = member_int(&f, &l)?;
    out.check("member_int on Lipschitz is yes", v.verdict == Verdict::Yes, verdict_to_json(&v));
    out.check("16 residues checked mod 2", v.checked_count == 16, json!(v.checked_count));
    let alpha = AlgebraElement::new(&l, vec![rat(1, 2); 4])?;
    let mu = alpha.minimal_polynomial();
    out.check("μ_α = X^2 - X + 1", mu == RatPolynomial::from_i64s(&[1, -1, 1]), poly_value(&mu));
    out.check("f(α) is not integral", !value_is_integral(&f, &alpha), element_to_json(&alpha.eval(&f)));
    let witness = density_refute(&f, &l, &builtin_candidates(&l))?;
    out.check(
        "α refutes density of Lipschitz in Hurwitz",
        witness.as_ref() == Some(&alpha),
        json!(witness.as_ref().map(element_to_json)),
    );
    Ok(out.finish("lipschitz", json!({ "poly": poly_value(&f) })))
}

fn hurwitz(c: &Common) -> Result<Outcome, CliError> {
    let mut out = Assertions::default();
    let half = [rat(1, 2), rat(1, 2), rat(1, 2), rat(1, 2)];
    let m = hurwitz_match_quaternion(&half)?;
    out.check("(1+i+j+k)/2 matches itself", m == half, rationals_to_json(&m));
    let q = [int(0), rat(3, 5), rat(4, 5), int(0)];
    let m = hurwitz_match_quaternion(&q)?;
    out.check("(3/5)i + (4/5)j matches i", m == [int(0), int(1), int(0), int(0)], rationals_to_json(&m));

    let h = order("hurwitz")?;
    let mut rng = sample::rng(c.seed);
    let mut failures = Vec::new();
    for _ in 0..c.count {
        let q = sample::integral_quaternion(&mut rng, &h, 25);
        let ok = hurwitz_match(&q).is_ok_and(|m| m.is_in_order() && m.minimal_polynomial() == q.minimal_polynomial());
        if !ok {
            failures.push(element_to_json(&q));
        }
    }
    out.check(
        "random integral quaternions match into the Hurwitz order",
        failures.is_empty(),
        json!({ "count": c.count, "failures": failures }),
    );
    Ok(out.finish("hurwitz", json!({ "seed": c.seed, "count": c.count })))
}

fn triangular(c: &Common) -> Result<Outcome, CliError> {
    let mut out = Assertions::default();
    let diag = RatMatrix::from_i64_rows(&[&[1, 4, -2], &[0, 1, 7], &[0, 0, 2]])?;
    let s = triangular_spectrum(&diag)?;
    out.check("diag (1,1,2) gives (X-1)(X-2)", s.poly() == &RatPolynomial::from_i64s(&[2, -3, 1]), poly_value(s.poly()));

    let mut rng = sample::rng(c.seed);
    let binomials: Vec<RatPolynomial> = (0..=6).map(binomial_polynomial).collect();
    let (mut bad_values, mut bad_spectra) = (0, 0);
    for i in 0..c.count {
        let m = sample::upper_triangular(&mut rng, i % 4 + 1, 10);
        bad_values += binomials.iter().filter(|f| !m.eval_poly(f).is_integral()).count();
        bad_spectra += (triangular_spectrum(&m).ok() != Some(m.spectrum())) as usize;
    }
    out.check("C(X, k), k ≤ 6, integral on triangular matrices", bad_values == 0, json!({ "failures": bad_values }));
    out.check("diagonal spectrum agrees", bad_spectra == 0, json!({ "failures": bad_spectra }));
    let t2 = order("triangular(2)")?;
    let f = binomial_polynomial(2);
    let v = member_int(&f, &t2)?;
    let separates = v.counterexample().is_some_and(|w| value_is_integral(&f, w));
    out.check(
        "C(X, 2) is integral-valued but not integer-valued on triangular(2)",
        v.verdict == Verdict::No && separates,
        verdict_to_json(&v),
    );
    Ok(out.finish("triangular", json!({ "seed": c.seed, "count": c.count })))
}

fn companion(c: &Common) -> Result<Outcome, CliError> {
    let mut out = Assertions::default();
    let comp = RatMatrix::companion(&RatPolynomial::from_i64s(&[0, -1, 1]))?;
    let diag = RatMatrix::diagonal(&[int(0), int(1)])?;
    let f = binomial_polynomial(2);
    out.check(
        "companion(X^2 - X) and diag(0, 1) agree on X(X-1)/2",
        comp.eval_poly(&f).is_integral() && diag.eval_poly(&f).is_integral(),
        json!(true),
    );
    let mut rng = sample::rng(c.seed);
    let mut failures = 0;
    for i in 0..c.count {
        let deg = i % 3 + 1;
        let p = sample::monic_int_poly(&mut rng, deg, 5);
        let cm = RatMatrix::companion(&p.to_rational())?;
        let (u, inv) = sample::unimodular(&mut rng, deg, 6, 2);
        let n = &(&u * &cm) * &inv;
        let f = sample::rat_poly(&mut rng, 4, 6, 4);
        if n.characteristic_polynomial() != p.to_rational()
            || cm.eval_poly(&f).is_integral() != n.eval_poly(&f).is_integral()
        {
            failures += 1;
        }
    }
    out.check(
        "integrality at companion(p) equals integrality at integer conjugates",
        failures == 0,
        json!({ "count": c.count, "failures": failures }),
    );
    Ok(out.finish("companion", json!({ "seed": c.seed, "count": c.count })))
}
