//! JSON conventions for scalars.
//!
//! A field element is written as a string when it is rational (`"3/4"`,
//! `"-2"`) and as `{"conductor": N, "coeffs": [...]}` otherwise. Input
//! additionally accepts the `zeta:n:k` shorthand.

use serde_json::Value;

use crate::cyclo::{CycloError, CycloNum};
use crate::scalar::rational_to_string;

pub fn value_to_json(x: &CycloNum) -> Value {
    match x.as_rational() {
        Some(r) => Value::String(rational_to_string(&r)),
        None => serde_json::to_value(x).expect("cyclotomic numbers serialize"),
    }
}

pub fn value_from_json(v: &Value) -> Result<CycloNum, CycloError> {
    match v {
        Value::String(s) => s.parse(),
        Value::Number(n) => n
            .as_i64()
            .map(CycloNum::from_int)
            .ok_or_else(|| CycloError::Malformed(format!("{n} is not an integer; write rationals as \"p/q\""))),
        Value::Object(_) => serde_json::from_value(v.clone()).map_err(|e| CycloError::Malformed(e.to_string())),
        other => Err(CycloError::Malformed(other.to_string())),
    }
}

pub fn values_from_json(v: &Value) -> Result<Vec<CycloNum>, CycloError> {
    match v {
        Value::Array(items) => items.iter().map(value_from_json).collect(),
        other => Err(CycloError::Malformed(format!("expected an array, got {other}"))),
    }
}

pub fn values_to_json(xs: &[CycloNum]) -> Value {
    Value::Array(xs.iter().map(value_to_json).collect())
}
