//! Argument decoding: every structured flag takes either a path to a JSON
//! file or the JSON text itself.

use std::path::Path;
use std::sync::Arc;

use serde_json::Value;

use intval_core::json::{element_from_json, int_poly_from_json, matrix_from_json, order_from_json_str, poly_from_json};
use intval_core::{AlgebraElement, IntPolynomial, Order, RatMatrix, RatPolynomial};

use crate::CliError;

pub fn load_json(arg: &str) -> Result<Value, CliError> {
    let text = if Path::new(arg).is_file() {
        std::fs::read_to_string(arg).map_err(|e| CliError::usage(format!("cannot read {arg}: {e}")))?
    } else {
        arg.to_string()
    };
    serde_json::from_str(&text).map_err(|e| CliError::usage(format!("malformed JSON in {arg:?}: {e}")))
}

pub fn poly(arg: &str) -> Result<RatPolynomial, CliError> {
    Ok(poly_from_json(&load_json(arg)?)?)
}

pub fn int_poly(arg: &str) -> Result<IntPolynomial, CliError> {
    Ok(int_poly_from_json(&load_json(arg)?)?)
}

pub fn matrix(arg: &str) -> Result<RatMatrix, CliError> {
    Ok(matrix_from_json(&load_json(arg)?)?)
}

/// Built-in name such as `hurwitz` or `matrix(3)`, else an order file.
pub fn order(arg: &str) -> Result<Arc<Order>, CliError> {
    if let Ok(o) = Order::builtin(arg) {
        return Ok(Arc::new(o));
    }
    if Path::new(arg).is_file() {
        let text = std::fs::read_to_string(arg).map_err(|e| CliError::usage(format!("cannot read {arg}: {e}")))?;
        return Ok(Arc::new(order_from_json_str(&text)?));
    }
    Err(CliError::usage(format!("unknown order {arg:?}: not a built-in name or an order file")))
}

/// A single coordinate vector, or an array of them.
pub fn elements(order: &Arc<Order>, arg: &str) -> Result<Vec<AlgebraElement>, CliError> {
    let v = load_json(arg)?;
    let nested = v.as_array().is_some_and(|xs| xs.first().is_some_and(Value::is_array));
    if nested {
        Ok(v.as_array()
            .unwrap()
            .iter()
            .map(|e| element_from_json(order, e))
            .collect::<Result<_, _>>()?)
    } else {
        Ok(vec![element_from_json(order, &v)?])
    }
}

pub fn required<'a>(value: &'a Option<String>, flag: &str) -> Result<&'a str, CliError> {
    value.as_deref().ok_or_else(|| CliError::usage(format!("missing required flag --{flag}")))
}
