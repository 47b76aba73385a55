use serde_json::{json, Value};

use crate::matrix::Matrix;
use crate::monodromy::MonodromyData;
use crate::scalar::{fmt_rational, Rational, Scalar};
use crate::torsor::TorsorElement;

pub fn scalar_json(s: &Scalar) -> Value {
    Value::String(s.to_string())
}

pub fn rationals_json(v: &[Rational]) -> Value {
    v.iter().map(|r| Value::String(fmt_rational(r))).collect()
}

pub fn matrix_json(m: &Matrix) -> Value {
    (0..m.rows()).map(|i| m.row(i).iter().map(scalar_json).collect::<Value>()).collect()
}

pub fn monodromy_json(m: &MonodromyData) -> Value {
    let blocks: Vec<Value> =
        m.blocks().iter().map(|b| json!({"exponent": fmt_rational(&b.exponent), "jordan": b.jordan})).collect();
    json!({
        "blocks": blocks,
        "dim": m.dim(),
        "semisimple": m.is_semisimple(),
        "exponents": rationals_json(&m.exponents()),
    })
}

pub fn torsor_json(t: &TorsorElement) -> Value {
    json!({"label": t.label(), "target": scalar_json(t.target()), "rep": t.rep().to_string()})
}
