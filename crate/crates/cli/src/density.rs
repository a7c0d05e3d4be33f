//! `density` reports: `{check, instances, failures}` plus check-specific fields.

use serde_json::{json, Value};

use intval_core::density::{
    builtin_candidates, companion_family, density_refute, is_three_square_exception, spectrum_transfer_check,
    three_squares, triangular_spectrum,
};
use intval_core::exact::{binomial_polynomial, int, rat};
use intval_core::json::{element_to_json, int_poly_to_json, matrix_to_json, poly_to_json};
use intval_core::membership::member_int;
use intval_core::{sample, RatMatrix, RatPolynomial};

use crate::input;
use crate::{CliError, Common, DensityCheck, Outcome};

pub struct Family {
    pub degree: usize,
    pub height: u64,
    pub irreducible: bool,
}

fn report(check: &str, instances: usize, failures: Vec<Value>, inputs: Value, extra: Value) -> Outcome {
    let negative = !failures.is_empty();
    let mut value = json!({ "check": check, "instances": instances, "failures": failures });
    if let (Some(v), Some(e)) = (value.as_object_mut(), extra.as_object()) {
        v.extend(e.clone());
    }
    Outcome { inputs, value, negative }
}

fn seeded(c: &Common) -> Value {
    json!({ "seed": c.seed, "count": c.count, "bound": c.bound })
}

pub fn run(check: DensityCheck, c: &Common, family: &Family, limit: u64) -> Result<Outcome, CliError> {
    match check {
        DensityCheck::Triangular => Ok(triangular(c)),
        DensityCheck::Companion => companion(c, family),
        DensityCheck::Refute => refute(c),
        DensityCheck::Transfer => transfer(c),
        DensityCheck::ThreeSquares => Ok(squares(limit)),
    }
}

/// Binomial polynomials `C(X, k)`, `k ≤ 6`, at random integer upper
/// triangular matrices, plus the diagonal spectrum shortcut.
fn triangular(c: &Common) -> Outcome {
    let mut rng = sample::rng(c.seed);
    let binomials: Vec<RatPolynomial> = (0..=6).map(binomial_polynomial).collect();
    let mut failures = Vec::new();
    for i in 0..c.count {
        let m = sample::upper_triangular(&mut rng, i % 4 + 1, c.bound);
        for (k, f) in binomials.iter().enumerate() {
            if !m.eval_poly(f).is_integral() {
                failures.push(json!({ "matrix": matrix_to_json(&m), "k": k }));
            }
        }
        if triangular_spectrum(&m).ok() != Some(m.spectrum()) {
            failures.push(json!({ "matrix": matrix_to_json(&m), "spectrum": "mismatch" }));
        }
    }
    report("triangular", c.count, failures, seeded(c), json!({}))
}

/// For each `p` in the companion family, compares integrality of a random
/// `f` at `companion(p)` and at an integer conjugate of it.
fn companion(c: &Common, family: &Family) -> Result<Outcome, CliError> {
    if family.degree == 0 {
        return Err(CliError::usage("--degree must be at least 1"));
    }
    let mut rng = sample::rng(c.seed);
    let mut failures = Vec::new();
    let mut instances = 0;
    let mut integral = 0;
    for (p, comp) in companion_family(family.degree, family.height, family.irreducible) {
        instances += 1;
        let f = sample::rat_poly(&mut rng, 4, 6, 4);
        let (u, inv) = sample::unimodular(&mut rng, family.degree, 6, 2);
        let n = &(&u * &comp) * &inv;
        let (a, b) = (comp.eval_poly(&f).is_integral(), n.eval_poly(&f).is_integral());
        integral += a as usize;
        if a != b {
            failures.push(json!({ "p": int_poly_to_json(&p), "f": poly_to_json(&f), "n": matrix_to_json(&n) }));
        }
    }
    let mut inputs = seeded(c);
    inputs["degree"] = json!(family.degree);
    inputs["height"] = json!(family.height);
    inputs["irreducible"] = json!(family.irreducible);
    Ok(report("companion", instances, failures, inputs, json!({ "integral_instances": integral })))
}

fn refute(c: &Common) -> Result<Outcome, CliError> {
    let order = input::order(c.order.as_deref().unwrap_or("quadratic(-3)"))?;
    let f = match &c.poly {
        Some(arg) => input::poly(arg)?,
        None => RatPolynomial::new(vec![int(0), int(0), rat(1, 2), int(0), rat(1, 2)]),
    };
    let candidates = builtin_candidates(&order);
    let witness = density_refute(&f, &order, &candidates)?;
    let extra = json!({
        "member_int": member_int(&f, &order)?.verdict,
        "witness": witness.as_ref().map(element_to_json),
        "value_at_witness": witness.as_ref().map(|w| element_to_json(&w.eval(&f))),
        "dense_refuted": witness.is_some(),
    });
    let inputs = json!({ "order": order.name(), "poly": poly_to_json(&f) });
    Ok(report("refute", candidates.len(), Vec::new(), inputs, extra))
}

/// Pairs with equal spectrum: a companion matrix and an integer conjugate,
/// and each matrix with itself.
fn transfer(c: &Common) -> Result<Outcome, CliError> {
    let mut rng = sample::rng(c.seed);
    let mut failures = Vec::new();
    for i in 0..c.count {
        let deg = i % 3 + 1;
        let p = sample::monic_int_poly(&mut rng, deg, 5);
        let comp = RatMatrix::companion(&p.to_rational())?;
        let (u, inv) = sample::unimodular(&mut rng, deg, 6, 2);
        let n = &(&u * &comp) * &inv;
        let f = sample::rat_poly(&mut rng, 4, 6, 4);
        let pairs = [(comp.clone(), n.clone()), (n.clone(), n)];
        if !spectrum_transfer_check(&f, &pairs)? {
            failures.push(json!({ "p": int_poly_to_json(&p), "f": poly_to_json(&f) }));
        }
    }
    Ok(report("transfer", c.count, failures, seeded(c), json!({})))
}

fn squares(limit: u64) -> Outcome {
    let mut failures = Vec::new();
    let mut exceptions = 0u64;
    for n in 0..=limit {
        match three_squares(n).decomposition {
            Some((a, b, c)) if a * a + b * b + c * c == n && !is_three_square_exception(n) => {}
            None if is_three_square_exception(n) => exceptions += 1,
            d => failures.push(json!({ "n": n, "decomposition": d.map(|(a, b, c)| [a, b, c]) })),
        }
    }
    report(
        "three-squares",
        limit as usize + 1,
        failures,
        json!({ "limit": limit }),
        json!({ "exceptions": exceptions }),
    )
}
