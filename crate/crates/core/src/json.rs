//! `[re, im]` pair encoding used by every JSON surface.

use serde_json::{json, Value};

use crate::error::{Error, Result};
use crate::{c, CMatrix, CVector, C64};

pub fn complex_to_json(z: C64) -> Value {
    json!([z.re, z.im])
}

pub fn complex_from_json(value: &Value, path: &str) -> Result<C64> {
    let pair = value
        .as_array()
        .filter(|a| a.len() == 2)
        .ok_or_else(|| Error::spec(path, "expected a [re, im] pair"))?;
    let re = pair[0]
        .as_f64()
        .ok_or_else(|| Error::spec(format!("{path}[0]"), "expected a number"))?;
    let im = pair[1]
        .as_f64()
        .ok_or_else(|| Error::spec(format!("{path}[1]"), "expected a number"))?;
    if !(re.is_finite() && im.is_finite()) {
        return Err(Error::spec(path, "must be finite"));
    }
    Ok(c(re, im))
}

pub fn vector_to_json<'a>(entries: impl IntoIterator<Item = &'a C64>) -> Value {
    Value::Array(entries.into_iter().map(|&z| complex_to_json(z)).collect())
}

pub fn vector_from_json(value: &Value, path: &str) -> Result<CVector> {
    let items = value
        .as_array()
        .ok_or_else(|| Error::spec(path, "expected an array of [re, im] pairs"))?;
    let entries = items
        .iter()
        .enumerate()
        .map(|(i, v)| complex_from_json(v, &format!("{path}[{i}]")))
        .collect::<Result<Vec<_>>>()?;
    Ok(CVector::from_vec(entries))
}

/// Row-major nested array of `[re, im]` pairs.
pub fn matrix_to_json(m: &CMatrix) -> Value {
    Value::Array(m.row_iter().map(|row| vector_to_json(row.iter())).collect())
}

pub fn matrix_from_json(value: &Value, path: &str) -> Result<CMatrix> {
    let rows = value
        .as_array()
        .ok_or_else(|| Error::spec(path, "expected an array of rows"))?;
    let parsed = rows
        .iter()
        .enumerate()
        .map(|(i, r)| vector_from_json(r, &format!("{path}[{i}]")))
        .collect::<Result<Vec<_>>>()?;
    let n = parsed.len();
    if n == 0 {
        return Err(Error::spec(path, "matrix must be non-empty"));
    }
    if let Some(i) = parsed.iter().position(|r| r.len() != n) {
        return Err(Error::spec(
            format!("{path}[{i}]"),
            format!("expected {n} entries (square matrix)"),
        ));
    }
    Ok(CMatrix::from_fn(n, n, |i, j| parsed[i][j]))
}
