//! JSON data files: matrices as row lists of scalar strings, symplectic
//! spaces, Lagrangian chains, monodromy data, clean-intersection data and
//! cocycle loops. Violations are reported with a JSON pointer.

use std::collections::BTreeMap;
use std::sync::Arc;

use serde_json::Value;

use crate::dcritical::{three_chart_loop, ChartLoop, Transition};
use crate::error::{Error, Result};
use crate::matrix::Matrix;
use crate::monodromy::{in_section, Block, MonodromyData};
use crate::parse::{parse_poly, parse_rational_literal};
use crate::symplectic::{first_antisymmetry_violation, LagrangianSubspace, SymplecticSpace};
use crate::torsor::Root;
use crate::scalar::Scalar;

pub fn schema(pointer: impl Into<String>, message: impl Into<String>) -> Error {
    Error::Schema { pointer: pointer.into(), message: message.into() }
}

fn child(ptr: &str, key: impl std::fmt::Display) -> String {
    format!("{ptr}/{key}")
}

/// Read and parse a JSON data file.
pub fn read_data_file(path: &str) -> Result<Value> {
    let text = std::fs::read_to_string(path).map_err(|e| schema("", format!("cannot read {path}: {e}")))?;
    parse_data(&text)
}

pub fn parse_data(text: &str) -> Result<Value> {
    serde_json::from_str(text).map_err(|e| schema("", format!("invalid JSON: {e}")))
}

pub fn field<'a>(v: &'a Value, key: &str, ptr: &str) -> Result<&'a Value> {
    v.as_object()
        .ok_or_else(|| schema(ptr, "expected an object"))?
        .get(key)
        .ok_or_else(|| schema(child(ptr, key), "missing field"))
}

pub fn optional<'a>(v: &'a Value, key: &str) -> Option<&'a Value> {
    v.as_object().and_then(|o| o.get(key)).filter(|x| !x.is_null())
}

pub fn array<'a>(v: &'a Value, ptr: &str) -> Result<&'a Vec<Value>> {
    v.as_array().ok_or_else(|| schema(ptr, "expected an array"))
}

pub fn string<'a>(v: &'a Value, ptr: &str) -> Result<&'a str> {
    v.as_str().ok_or_else(|| schema(ptr, "expected a string"))
}

pub fn unsigned(v: &Value, ptr: &str) -> Result<usize> {
    v.as_u64().map(|x| x as usize).ok_or_else(|| schema(ptr, "expected a non-negative integer"))
}

pub fn strings(v: &Value, ptr: &str) -> Result<Vec<String>> {
    array(v, ptr)?.iter().enumerate().map(|(i, x)| string(x, &child(ptr, i)).map(String::from)).collect()
}

/// A scalar given as a string (`"3/2"`, `"1-2i"`) or a JSON integer.
pub fn scalar(v: &Value, ptr: &str) -> Result<Scalar> {
    match v {
        Value::String(s) => s.parse::<Scalar>().map_err(|e| schema(ptr, e.to_string())),
        Value::Number(n) => n
            .as_i64()
            .map(Scalar::from_int)
            .ok_or_else(|| schema(ptr, "numbers must be integers; write other scalars as strings")),
        _ => Err(schema(ptr, "expected a scalar string")),
    }
}

pub fn matrix(v: &Value, ptr: &str) -> Result<Matrix> {
    let rows = array(v, ptr)?;
    let mut out = Vec::with_capacity(rows.len());
    for (i, row) in rows.iter().enumerate() {
        let rp = child(ptr, i);
        let row: Vec<Scalar> =
            array(row, &rp)?.iter().enumerate().map(|(j, x)| scalar(x, &child(&rp, j))).collect::<Result<_>>()?;
        if let Some(first) = out.first().map(Vec::len) {
            if row.len() != first {
                return Err(schema(rp, format!("row has {} entries, expected {first}", row.len())));
            }
        }
        out.push(row);
    }
    if out.is_empty() {
        return Ok(Matrix::zeros(0, 0));
    }
    Matrix::from_rows(out)
}

/// `{"form": [[..]]}` or `{"standard": n}`.
pub fn space(v: &Value, ptr: &str) -> Result<SymplecticSpace> {
    if let Some(n) = optional(v, "standard") {
        let n = unsigned(n, &child(ptr, "standard"))?;
        if n == 0 {
            return Err(schema(child(ptr, "standard"), "dimension must be positive"));
        }
        return Ok(SymplecticSpace::standard(n));
    }
    let fp = child(ptr, "form");
    let form = matrix(field(v, "form", ptr)?, &fp)?;
    if form.is_square() {
        if let Some((i, j)) = first_antisymmetry_violation(&form) {
            return Err(schema(
                format!("{fp}/{i}/{j}"),
                format!("form is not antisymmetric: entry ({i},{j}) is {} but ({j},{i}) is {}", form[(i, j)], form[(j, i)]),
            ));
        }
    }
    SymplecticSpace::new(form).map_err(|e| schema(fp, e.to_string()))
}

pub fn lagrangian(v: &Value, ptr: &str, space: &Arc<SymplecticSpace>) -> Result<LagrangianSubspace> {
    let basis = matrix(v, ptr)?;
    LagrangianSubspace::new(space.clone(), basis).map_err(|e| match e {
        Error::NotLagrangian(m) => Error::NotLagrangian(format!("{ptr}: {m}")),
        other => other,
    })
}

/// `{"chain": [basis, basis, ...]}` or a bare array of bases.
pub fn chain(v: &Value, space: &Arc<SymplecticSpace>) -> Result<Vec<LagrangianSubspace>> {
    let (items, ptr) = match v {
        Value::Array(a) => (a, String::new()),
        _ => (array(field(v, "chain", "")?, "/chain")?, "/chain".to_string()),
    };
    items.iter().enumerate().map(|(i, b)| lagrangian(b, &child(&ptr, i), space)).collect()
}

/// Monodromy given either as an automorphism or in spectral form.
pub enum MonodromyInput {
    Matrix(Matrix),
    Data(MonodromyData),
}

/// `{"matrix": [[..]]}` or `{"blocks": [{"exponent": "-1/2", "jordan": [1]}]}`.
pub fn monodromy(v: &Value) -> Result<MonodromyInput> {
    if let Some(m) = optional(v, "matrix") {
        return Ok(MonodromyInput::Matrix(matrix(m, "/matrix")?));
    }
    let blocks = array(field(v, "blocks", "")?, "/blocks")?;
    let mut out = Vec::new();
    for (k, b) in blocks.iter().enumerate() {
        let bp = format!("/blocks/{k}");
        let ep = child(&bp, "exponent");
        let exponent = parse_rational_literal(string(field(b, "exponent", &bp)?, &ep)?).map_err(|e| schema(&ep, e.to_string()))?;
        if !in_section(&exponent) {
            return Err(schema(ep, "exponent lies outside -1 < r <= 0"));
        }
        let jp = child(&bp, "jordan");
        let jordan: Vec<usize> =
            array(field(b, "jordan", &bp)?, &jp)?.iter().enumerate().map(|(i, s)| unsigned(s, &child(&jp, i))).collect::<Result<_>>()?;
        if let Some(i) = jordan.iter().position(|&s| s == 0) {
            return Err(schema(child(&jp, i), "Jordan sizes must be positive"));
        }
        out.push(Block { exponent, jordan });
    }
    Ok(MonodromyInput::Data(MonodromyData::new(out)?))
}

pub struct CleanInput {
    pub tl: LagrangianSubspace,
    pub tm: LagrangianSubspace,
    pub intersection: Matrix,
}

/// `{"space": .., "tl": basis, "tm": basis, "intersection": basis}`.
pub fn clean(v: &Value) -> Result<CleanInput> {
    let s = Arc::new(space(field(v, "space", "")?, "/space")?);
    let tl = lagrangian(field(v, "tl", "")?, "/tl", &s)?;
    let tm = lagrangian(field(v, "tm", "")?, "/tm", &s)?;
    let mut intersection = matrix(field(v, "intersection", "")?, "/intersection")?;
    if intersection.rows() == 0 {
        intersection = Matrix::zeros(0, s.dim());
    }
    Ok(CleanInput { tl, tm, intersection })
}

/// Either explicit `{"fibers": {name: target}, "transitions": [{"from", "to",
/// "factor"}]}` or a generator `{"h", "l", "m", "n", "psi"}` for the
/// three-chart loop. An optional `"flip"` negates one transition.
pub fn chart_loop(v: &Value) -> Result<ChartLoop> {
    let lp = if optional(v, "h").is_some() {
        let l = strings(field(v, "l", "")?, "/l")?;
        let m = strings(field(v, "m", "")?, "/m")?;
        let n = strings(field(v, "n", "")?, "/n")?;
        let all: Vec<String> = l.iter().chain(&m).chain(&n).cloned().collect();
        let h = parse_poly(string(field(v, "h", "")?, "/h")?, Some(&all)).map_err(|e| schema("/h", e.to_string()))?;
        let psi = match optional(v, "psi") {
            Some(p) => matrix(p, "/psi")?,
            None => Matrix::identity(m.len() + n.len()),
        };
        three_chart_loop(&h, &l, &m, &n, &psi)?
    } else {
        let fibers_v = field(v, "fibers", "")?.as_object().ok_or_else(|| schema("/fibers", "expected an object"))?;
        let mut fibers = BTreeMap::new();
        for (name, t) in fibers_v {
            fibers.insert(name.clone(), scalar(t, &format!("/fibers/{name}"))?);
        }
        let mut transitions = Vec::new();
        for (k, t) in array(field(v, "transitions", "")?, "/transitions")?.iter().enumerate() {
            let tp = format!("/transitions/{k}");
            transitions.push(Transition {
                from: string(field(t, "from", &tp)?, &child(&tp, "from"))?.to_string(),
                to: string(field(t, "to", &tp)?, &child(&tp, "to"))?.to_string(),
                factor: Root::scalar(scalar(field(t, "factor", &tp)?, &child(&tp, "factor"))?),
            });
        }
        ChartLoop { fibers, transitions }
    };
    match optional(v, "flip") {
        Some(f) => lp.with_flip(unsigned(f, "/flip")?),
        None => Ok(lp),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn valid_space_file() {
        let v = parse_data(r#"{"form": [["0", "1"], ["-1", "0"]]}"#).unwrap();
        assert_eq!(space(&v, "").unwrap().dim(), 2);
        let v = parse_data(r#"{"standard": 2}"#).unwrap();
        assert_eq!(space(&v, "").unwrap().dim(), 4);
    }

    #[test]
    fn antisymmetry_violation_names_entry() {
        let v = parse_data(r#"{"form": [["0", "1"], ["1", "0"]]}"#).unwrap();
        match space(&v, "").unwrap_err() {
            Error::Schema { pointer, .. } => assert_eq!(pointer, "/form/0/1"),
            e => panic!("unexpected {e:?}"),
        }
    }

    #[test]
    fn exponent_outside_section() {
        let v = parse_data(r#"{"blocks": [{"exponent": "1/2", "jordan": [1]}]}"#).unwrap();
        match monodromy(&v) {
            Err(Error::Schema { pointer, .. }) => assert_eq!(pointer, "/blocks/0/exponent"),
            _ => panic!("expected a schema error"),
        }
    }

    #[test]
    fn bad_scalar_pointer() {
        let v = parse_data(r#"{"matrix": [["1", "x/"]]}"#).unwrap();
        match monodromy(&v) {
            Err(Error::Schema { pointer, .. }) => assert_eq!(pointer, "/matrix/0/1"),
            _ => panic!("expected a schema error"),
        }
    }
}
