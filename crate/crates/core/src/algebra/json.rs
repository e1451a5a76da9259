//! Model and element files.
//!
//! ```json
//! {"kind": "rotation", "n": 3, "q": "zeta:3:1"}
//! {"kind": "clifford", "n": 4, "q": "zeta:4:1", "m": 2}
//! {"kind": "tensor", "left": {...}, "right": {...}}
//! ```
//!
//! Elements are arrays of `{"monomial": [...], "coeff": value}`. Rotation
//! monomials are `[a, b]`, Clifford monomials list the `m` exponents, and
//! tensor monomials are `[left, right]`.

use std::sync::Arc;

use serde::{Deserialize, Serialize};
use serde_json::{json, Value};

use super::{AlgebraElement, AlgebraError, AlgebraSpec, ModelKind, Monomial};
use crate::io::{value_from_json, value_to_json};

#[derive(Clone, Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ModelDesc {
    pub kind: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub n: Option<u64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub q: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub m: Option<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub left: Option<Box<ModelDesc>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub right: Option<Box<ModelDesc>>,
}

impl ModelDesc {
    /// Builds the model; `q` defaults to `zeta:n:1`.
    pub fn build(&self) -> Result<Arc<AlgebraSpec>, AlgebraError> {
        let malformed = |s: &str| AlgebraError::Malformed(s.to_string());
        let root = |n: Option<u64>| -> Result<(u64, crate::cyclo::CycloNum), AlgebraError> {
            let n = n.ok_or_else(|| malformed("missing \"n\""))?;
            if n == 0 {
                return Err(malformed("n must be positive"));
            }
            let q = match &self.q {
                Some(s) => s.parse().map_err(|e| AlgebraError::Malformed(format!("{e}")))?,
                None => crate::cyclo::root_of_unity(n, 1),
            };
            Ok((n, q))
        };
        match self.kind.as_str() {
            "rotation" => {
                let (n, q) = root(self.n)?;
                AlgebraSpec::rotation(n, q)
            }
            "clifford" => {
                let (n, q) = root(self.n)?;
                let m = self.m.ok_or_else(|| malformed("clifford needs \"m\""))?;
                AlgebraSpec::clifford(m, n, q)
            }
            "tensor" => {
                let left = self.left.as_ref().ok_or_else(|| malformed("tensor needs \"left\""))?.build()?;
                let right = self.right.as_ref().ok_or_else(|| malformed("tensor needs \"right\""))?.build()?;
                let t = AlgebraSpec::graded_tensor(&left, &right)?;
                if self.n.is_some_and(|n| n != t.n()) {
                    return Err(AlgebraError::TensorMismatch);
                }
                Ok(t)
            }
            other => Err(AlgebraError::Malformed(format!("unknown kind {other:?}"))),
        }
    }

    pub fn describe(spec: &AlgebraSpec) -> ModelDesc {
        let k = (0..spec.n() as i64)
            .find(|&k| crate::cyclo::root_of_unity(spec.n(), k) == *spec.q())
            .expect("q is an n-th root of unity");
        let q = Some(format!("zeta:{}:{k}", spec.n()));
        let base = |kind: &str| ModelDesc {
            kind: kind.to_string(),
            n: Some(spec.n()),
            q: None,
            m: None,
            left: None,
            right: None,
        };
        match spec.kind() {
            ModelKind::Rotation => ModelDesc { q, ..base("rotation") },
            ModelKind::Clifford { m } => ModelDesc {
                q,
                m: Some(*m),
                ..base("clifford")
            },
            ModelKind::Tensor(l, r) => ModelDesc {
                left: Some(Box::new(Self::describe(l))),
                right: Some(Box::new(Self::describe(r))),
                ..base("tensor")
            },
        }
    }
}

pub fn monomial_to_json(m: &Monomial) -> Value {
    match m {
        Monomial::Rot(a, b) => json!([a, b]),
        Monomial::Cliff(e) => json!(e),
        Monomial::Pair(x, y) => json!([monomial_to_json(x), monomial_to_json(y)]),
    }
}

pub fn monomial_from_json(spec: &AlgebraSpec, v: &Value) -> Result<Monomial, AlgebraError> {
    let bad = || AlgebraError::Malformed(format!("monomial {v} does not fit the model"));
    let arr = v.as_array().ok_or_else(bad)?;
    match spec.kind() {
        ModelKind::Rotation => match arr.as_slice() {
            [a, b] => Ok(Monomial::Rot(
                a.as_i64().ok_or_else(bad)?,
                b.as_i64().ok_or_else(bad)?,
            )),
            _ => Err(bad()),
        },
        ModelKind::Clifford { m } => {
            if arr.len() != *m {
                return Err(bad());
            }
            let n = spec.n() as i64;
            arr.iter()
                .map(|x| x.as_i64().map(|e| e.rem_euclid(n) as u32).ok_or_else(bad))
                .collect::<Result<Vec<_>, _>>()
                .map(Monomial::Cliff)
        }
        ModelKind::Tensor(l, r) => match arr.as_slice() {
            [x, y] => Ok(Monomial::Pair(
                Box::new(monomial_from_json(l, x)?),
                Box::new(monomial_from_json(r, y)?),
            )),
            _ => Err(bad()),
        },
    }
}

pub fn element_to_json(x: &AlgebraElement) -> Value {
    Value::Array(
        x.terms()
            .iter()
            .map(|(m, c)| json!({"monomial": monomial_to_json(m), "coeff": value_to_json(c)}))
            .collect(),
    )
}

pub fn element_from_json(spec: &Arc<AlgebraSpec>, v: &Value) -> Result<AlgebraElement, AlgebraError> {
    let items = v
        .as_array()
        .ok_or_else(|| AlgebraError::Malformed("an element is an array of terms".into()))?;
    let mut terms = Vec::with_capacity(items.len());
    for item in items {
        let m = item
            .get("monomial")
            .ok_or_else(|| AlgebraError::Malformed(format!("term {item} lacks \"monomial\"")))?;
        let c = match item.get("coeff") {
            Some(c) => value_from_json(c).map_err(|e| AlgebraError::Malformed(e.to_string()))?,
            None => crate::cyclo::CycloNum::from_int(1),
        };
        terms.push((monomial_from_json(spec, m)?, c));
    }
    Ok(AlgebraElement::from_terms(spec, terms))
}
