//! JSON encodings. Rationals are strings `"p"` or `"p/q"`; JSON integers
//! are accepted on input. Polynomials are coefficient arrays in ascending
//! degree, matrices are row-major arrays of arrays, elements are coordinate
//! arrays over the order's basis.

use std::sync::Arc;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::ToPrimitive;
use serde::{Deserialize, Serialize};
use serde_json::{json, Value};

use crate::error::{Error, Result};
use crate::exact::{parse_rational, ExactRational, IntPolynomial, RatPolynomial};
use crate::matrix::RatMatrix;
use crate::membership::{MembershipVerdict, Witness};
use crate::order::{AlgebraElement, NaturalRep, Order};

pub fn rational_from_json(v: &Value) -> Result<ExactRational> {
    match v {
        Value::String(s) => parse_rational(s),
        Value::Number(n) => n
            .as_i64()
            .map(|i| BigRational::from_integer(i.into()))
            .or_else(|| n.as_u64().map(|u| BigRational::from_integer(u.into())))
            .ok_or_else(|| Error::Parse(format!("{n} is not an integer; write fractions as strings"))),
        other => Err(Error::Parse(format!("expected a rational, found {other}"))),
    }
}

pub fn rational_to_json(q: &ExactRational) -> Value {
    Value::String(q.to_string())
}

fn array<'a>(v: &'a Value, what: &str) -> Result<&'a Vec<Value>> {
    v.as_array().ok_or_else(|| Error::Parse(format!("{what} must be a JSON array")))
}

pub fn rationals_from_json(v: &Value) -> Result<Vec<ExactRational>> {
    array(v, "coefficient list")?.iter().map(rational_from_json).collect()
}

pub fn rationals_to_json(xs: &[ExactRational]) -> Value {
    Value::Array(xs.iter().map(rational_to_json).collect())
}

pub fn poly_from_json(v: &Value) -> Result<RatPolynomial> {
    rationals_from_json(v).map(RatPolynomial::new)
}

pub fn poly_to_json(p: &RatPolynomial) -> Value {
    rationals_to_json(p.coeffs())
}

pub fn int_poly_from_json(v: &Value) -> Result<IntPolynomial> {
    let p = poly_from_json(v)?;
    p.to_integer()
        .ok_or_else(|| Error::Parse("expected integer coefficients".into()))
}

pub fn int_poly_to_json(p: &IntPolynomial) -> Value {
    Value::Array(p.coeffs().iter().map(|c| Value::String(c.to_string())).collect())
}

pub fn matrix_from_json(v: &Value) -> Result<RatMatrix> {
    let rows = array(v, "matrix")?
        .iter()
        .map(rationals_from_json)
        .collect::<Result<Vec<_>>>()?;
    RatMatrix::from_rows(rows)
}

pub fn matrix_to_json(m: &RatMatrix) -> Value {
    Value::Array(m.rows().iter().map(|r| rationals_to_json(r)).collect())
}

pub fn element_from_json(order: &Arc<Order>, v: &Value) -> Result<AlgebraElement> {
    AlgebraElement::new(order, rationals_from_json(v)?)
}

pub fn element_to_json(a: &AlgebraElement) -> Value {
    rationals_to_json(a.coords())
}

/// `{verdict, witness?, certificate?, checked_count}`.
pub fn verdict_to_json(v: &MembershipVerdict) -> Value {
    let mut out = json!({
        "verdict": v.verdict,
        "checked_count": v.checked_count,
    });
    match &v.witness {
        Some(Witness::Counterexample(a)) => out["witness"] = element_to_json(a),
        Some(Witness::Certificate(p)) => out["certificate"] = int_poly_to_json(p),
        None => {}
    }
    out
}

/// On-disk order description.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct OrderFile {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub name: Option<String>,
    pub rank: usize,
    pub labels: Vec<String>,
    pub unity: Vec<i64>,
    /// `structure_constants[i][j][k]`: coefficient of `e_k` in `e_i e_j`.
    pub structure_constants: Vec<Vec<Vec<i64>>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub spectral_degree: Option<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub natural_rep: Option<NaturalRepFile>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct NaturalRepFile {
    pub dim: usize,
    /// One matrix per basis element, entries as rational strings or integers.
    pub images: Vec<Value>,
}

impl OrderFile {
    pub fn into_order(self) -> Result<Order> {
        if self.rank != self.labels.len() {
            return Err(Error::Shape(format!("rank {} but {} labels", self.rank, self.labels.len())));
        }
        let big = |v: &[i64]| v.iter().map(|&x| BigInt::from(x)).collect::<Vec<_>>();
        let constants = self
            .structure_constants
            .iter()
            .map(|slice| slice.iter().map(|row| big(row)).collect())
            .collect();
        let mut order = Order::new(
            self.name.unwrap_or_else(|| "custom".into()),
            self.labels,
            constants,
            big(&self.unity),
        )?;
        if let Some(n) = self.spectral_degree {
            order = order.with_spectral_degree(n)?;
        }
        if let Some(rep) = self.natural_rep {
            let images = rep.images.iter().map(matrix_from_json).collect::<Result<Vec<_>>>()?;
            order = order.with_natural_rep(NaturalRep::new(rep.dim, images)?)?;
        }
        Ok(order)
    }

    pub fn from_order(order: &Order) -> Result<Self> {
        let small = |x: &BigInt| {
            x.to_i64()
                .ok_or_else(|| Error::InvalidParameter(format!("structure constant {x} exceeds i64")))
        };
        let structure_constants = order
            .structure_constants()
            .iter()
            .map(|slice| {
                slice
                    .iter()
                    .map(|row| row.iter().map(small).collect::<Result<Vec<_>>>())
                    .collect::<Result<Vec<_>>>()
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(OrderFile {
            name: Some(order.name().to_string()),
            rank: order.rank(),
            labels: order.labels().to_vec(),
            unity: order.unity_coords().iter().map(small).collect::<Result<_>>()?,
            structure_constants,
            spectral_degree: Some(order.spectral_degree()),
            natural_rep: order.natural_rep().map(|rep| NaturalRepFile {
                dim: rep.dim(),
                images: rep.images().iter().map(matrix_to_json).collect(),
            }),
        })
    }
}

pub fn order_from_json_str(s: &str) -> Result<Order> {
    let file: OrderFile = serde_json::from_str(s).map_err(|e| Error::Parse(e.to_string()))?;
    file.into_order()
}
