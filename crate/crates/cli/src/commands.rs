use std::sync::Arc;

use serde_json::{json, Value};

use intval_core::density::{hurwitz_match_quaternion, three_squares};
use intval_core::exact::ExactRational;
use intval_core::json::{element_to_json, int_poly_to_json, matrix_to_json, poly_to_json, rationals_from_json, rationals_to_json, verdict_to_json};
use intval_core::membership::{
    certificate_phi, certificate_report, chain_check, member_int, member_intval_on, member_intval_sampled,
    pullback_member, ChainReport, CertificateCheck,
};
use intval_core::order::{quaternion_to_hurwitz, ResidueBox};
use intval_core::{sample, AlgebraElement, Order, RatMatrix, RatPolynomial, Strategy, Verdict};

use crate::input::{self, required};
use crate::{density, examples, CliError, Command, Common, Outcome};

pub fn name(cmd: &Command) -> &'static str {
    match cmd {
        Command::Minpoly(_) => "minpoly",
        Command::Charpoly(_) => "charpoly",
        Command::IntegralCheck(_) => "integral-check",
        Command::Spectrum(_) => "spectrum",
        Command::MemberInt(_) => "member-int",
        Command::MemberIntval { .. } => "member-intval",
        Command::Pullback { .. } => "pullback",
        Command::Certificate { .. } => "certificate",
        Command::Chain(_) => "chain",
        Command::ThreeSquares { .. } => "three-squares",
        Command::HurwitzMatch { .. } => "hurwitz-match",
        Command::Density { .. } => "density",
        Command::Examples { .. } => "examples",
    }
}

pub fn run(cmd: &Command) -> Result<Outcome, CliError> {
    match cmd {
        Command::Minpoly(c) => matrix_poly(c, "minimal_polynomial", RatMatrix::minimal_polynomial),
        Command::Charpoly(c) => matrix_poly(c, "characteristic_polynomial", RatMatrix::characteristic_polynomial),
        Command::Spectrum(c) => matrix_poly(c, "spectrum", |m| m.spectrum().into_poly()),
        Command::IntegralCheck(c) => {
            let m = input::matrix(required(&c.matrix, "matrix")?)?;
            let mu = m.minimal_polynomial();
            Ok(Outcome {
                inputs: json!({ "matrix": matrix_to_json(&m) }),
                value: json!({
                    "integral": m.is_integral(),
                    "minimal_polynomial": poly_value(&mu),
                }),
                negative: false,
            })
        }
        Command::MemberInt(c) => {
            let (order, f) = order_and_poly(c)?;
            let v = member_int(&f, &order)?;
            let mut value = verdict_to_json(&v);
            if let Some(w) = v.counterexample() {
                value["value_at_witness"] = element_to_json(&w.eval(&f));
            }
            Ok(Outcome { inputs: order_poly_inputs(&order, &f), value, negative: v.verdict == Verdict::No })
        }
        Command::MemberIntval { common: c, elements } => {
            let (order, f) = order_and_poly(c)?;
            let mut inputs = order_poly_inputs(&order, &f);
            let v = match elements {
                Some(arg) => {
                    let elements = input::elements(&order, arg)?;
                    inputs["elements"] = elements.iter().map(element_to_json).collect();
                    member_intval_on(&f, &elements)?
                }
                None => {
                    add_sampling(&mut inputs, c);
                    member_intval_sampled(&f, &sampled(c, &order))?
                }
            };
            Ok(Outcome { inputs, value: verdict_to_json(&v), negative: v.verdict == Verdict::No })
        }
        Command::Pullback { common: c, mu } => {
            let f = input::poly(required(&c.poly, "poly")?)?;
            let mu = input::int_poly(mu)?;
            let remainder = f.rem_monic(&mu.to_rational())?;
            let member = pullback_member(&f, &mu)?;
            Ok(Outcome {
                inputs: json!({ "poly": poly_to_json(&f), "mu": int_poly_to_json(&mu) }),
                value: json!({ "member": member, "remainder": poly_value(&remainder) }),
                negative: !member,
            })
        }
        Command::Certificate { common: c, phi } => certificate(c, phi.as_deref()),
        Command::Chain(c) => {
            let (order, f) = order_and_poly(c)?;
            let mut inputs = order_poly_inputs(&order, &f);
            add_sampling(&mut inputs, c);
            let report = chain_check(&f, &order, &sampled(c, &order))?;
            Ok(Outcome { inputs, value: chain_json(&report), negative: !report.holds() })
        }
        Command::ThreeSquares { n } => {
            let t = three_squares(*n);
            Ok(Outcome {
                inputs: json!({ "n": n }),
                value: json!({ "n": t.n, "decomposition": t.decomposition.map(|(a, b, c)| [a, b, c]) }),
                negative: false,
            })
        }
        Command::HurwitzMatch { quaternion } => hurwitz(quaternion),
        Command::Density { check, common, degree, height, irreducible, limit } => density::run(
            *check,
            common,
            &density::Family { degree: *degree, height: *height, irreducible: *irreducible },
            *limit,
        ),
        Command::Examples { name, common } => examples::run(*name, common),
    }
}

pub fn poly_value(p: &RatPolynomial) -> Value {
    json!({ "display": p.to_string(), "coefficients": poly_to_json(p) })
}

fn matrix_poly(c: &Common, key: &str, f: impl Fn(&RatMatrix) -> RatPolynomial) -> Result<Outcome, CliError> {
    let m = input::matrix(required(&c.matrix, "matrix")?)?;
    let p = f(&m);
    let mut value = json!({});
    value[key] = Value::String(p.to_string());
    value["coefficients"] = poly_to_json(&p);
    Ok(Outcome { inputs: json!({ "matrix": matrix_to_json(&m) }), value, negative: false })
}

fn order_and_poly(c: &Common) -> Result<(Arc<Order>, RatPolynomial), CliError> {
    let order = input::order(required(&c.order, "order")?)?;
    let f = input::poly(required(&c.poly, "poly")?)?;
    Ok((order, f))
}

fn order_poly_inputs(order: &Order, f: &RatPolynomial) -> Value {
    json!({ "order": order.name(), "poly": poly_to_json(f) })
}

fn add_sampling(inputs: &mut Value, c: &Common) {
    inputs["seed"] = json!(c.seed);
    inputs["count"] = json!(c.count);
    inputs["bound"] = json!(c.bound);
}

pub fn sampled(c: &Common, order: &Arc<Order>) -> Vec<AlgebraElement> {
    sample::elements(&mut sample::rng(c.seed), order, c.bound, c.count)
}

fn chain_json(r: &ChainReport) -> Value {
    let count = |pick: fn(&intval_core::membership::ChainRow) -> bool| r.rows.iter().filter(|row| pick(row)).count();
    json!({
        "pullback_all": r.pullback,
        "member_int": r.member_int,
        "intval": r.intval,
        "rows": r.rows.len(),
        "pullback_rows": count(|row| row.pullback),
        "in_order_rows": count(|row| row.in_order),
        "integral_rows": count(|row| row.integral),
        "violations": r.violations,
        "holds": r.holds(),
    })
}

pub fn check_json(c: &CertificateCheck) -> Value {
    json!({
        "passed": c.passed,
        "checked": c.checked,
        "skipped": c.skipped,
        "failure": c.failure.as_ref().map(element_to_json),
    })
}

fn certificate(c: &Common, phi: Option<&str>) -> Result<Outcome, CliError> {
    let (order, f) = order_and_poly(c)?;
    let mut inputs = order_poly_inputs(&order, &f);
    add_sampling(&mut inputs, c);
    let (phi, built) = match phi {
        Some(arg) => (input::int_poly(arg)?, false),
        None => (certificate_phi(&f, &order)?, true),
    };
    let mut elements = Vec::new();
    if let Some(m) = c.modulus {
        inputs["mod"] = json!(m);
        elements.extend(ResidueBox::new(&order, m)?.iter());
    }
    elements.extend(sampled(c, &order));
    let check = certificate_report(&phi, &f, &order, &elements, Strategy::default())?;
    Ok(Outcome {
        inputs,
        value: json!({
            "built": built,
            "certificate": int_poly_to_json(&phi),
            "degree": phi.degree(),
            "verification": check_json(&check),
        }),
        negative: !check.passed,
    })
}

fn hurwitz(arg: &str) -> Result<Outcome, CliError> {
    let coords = rationals_from_json(&input::load_json(arg)?)?;
    let q: [ExactRational; 4] = coords
        .try_into()
        .map_err(|v: Vec<_>| CliError::usage(format!("a quaternion has 4 coordinates, got {}", v.len())))?;
    let h = Arc::new(Order::builtin("hurwitz")?);
    let original = AlgebraElement::new(&h, quaternion_to_hurwitz(&q))?;
    let matched = hurwitz_match_quaternion(&q)?;
    let in_hurwitz = AlgebraElement::new(&h, quaternion_to_hurwitz(&matched))?;
    Ok(Outcome {
        inputs: json!({ "quaternion": rationals_to_json(&q) }),
        value: json!({
            "quaternion": rationals_to_json(&matched),
            "hurwitz_coordinates": element_to_json(&in_hurwitz),
            "minimal_polynomial": poly_value(&in_hurwitz.minimal_polynomial()),
            "same_minimal_polynomial": in_hurwitz.minimal_polynomial() == original.minimal_polynomial(),
        }),
        negative: false,
    })
}
