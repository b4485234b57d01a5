//! JSON encodings of multipartitions, compositions, decomposition tables and
//! assembled matrices.

use grpn_core::combin::{Composition, Multipartition};
use grpn_core::decomp::{AssembledMatrix, DecompTable, Entry, TableSet};
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{Signed, Zero};
use serde_json::{json, Map, Value};

use crate::CliError;

fn bad(msg: impl Into<String>) -> CliError {
    CliError::InputData(msg.into())
}

/// `[[parts of λ^(1)], …, [parts of λ^(r)]]`.
pub fn mp_to_json(l: &Multipartition) -> Value {
    Value::Array(l.comps().iter().map(|c| json!(c.parts())).collect())
}

/// Inverse of [`mp_to_json`].
pub fn mp_from_json(v: &Value) -> Result<Multipartition, CliError> {
    let comps = v
        .as_array()
        .ok_or_else(|| bad(format!("expected a multipartition (array of arrays), got {}", v)))?;
    let mut parts = Vec::with_capacity(comps.len());
    for c in comps {
        let row = c
            .as_array()
            .ok_or_else(|| bad(format!("expected a partition (array of integers), got {}", c)))?;
        let mut p = Vec::with_capacity(row.len());
        for x in row {
            let k = x
                .as_u64()
                .and_then(|k| u32::try_from(k).ok())
                .ok_or_else(|| bad(format!("expected a positive part, got {}", x)))?;
            p.push(k);
        }
        parts.push(p);
    }
    Multipartition::from_parts(parts).map_err(|e| bad(e.to_string()))
}

/// `[b_1, …, b_p]`.
pub fn comp_to_json(b: &Composition) -> Value {
    json!(b.parts())
}

/// A rational as a JSON integer when integral, else as the string `"a/b"`.
pub fn rational_to_json(v: &BigRational) -> Value {
    if v.is_integer() {
        let i = v.to_integer();
        match i64::try_from(&i) {
            Ok(k) => json!(k),
            Err(_) => json!(i.to_string()),
        }
    } else {
        json!(format!("{}/{}", v.numer(), v.denom()))
    }
}

/// Parse a JSON integer or a string `"a"` / `"a/b"`.
pub fn rational_from_json(v: &Value) -> Result<BigRational, CliError> {
    if let Some(k) = v.as_i64() {
        return Ok(BigRational::from_integer(BigInt::from(k)));
    }
    if let Some(k) = v.as_u64() {
        return Ok(BigRational::from_integer(BigInt::from(k)));
    }
    let s = v
        .as_str()
        .ok_or_else(|| bad(format!("expected an integer or a rational string, got {}", v)))?;
    let parse = |t: &str| t.trim().parse::<BigInt>().map_err(|_| bad(format!("malformed number {:?}", s)));
    match s.split_once('/') {
        None => Ok(BigRational::from_integer(parse(s)?)),
        Some((a, b)) => {
            let den = parse(b)?;
            if den.is_zero() {
                return Err(bad(format!("zero denominator in {:?}", s)));
            }
            Ok(BigRational::new(parse(a)?, den))
        }
    }
}

fn field<'a>(obj: &'a Map<String, Value>, key: &str) -> Result<&'a Value, CliError> {
    obj.get(key).ok_or_else(|| bad(format!("missing field {:?}", key)))
}

fn usize_field(obj: &Map<String, Value>, key: &str) -> Result<usize, CliError> {
    field(obj, key)?
        .as_u64()
        .map(|k| k as usize)
        .ok_or_else(|| bad(format!("field {:?} must be a nonnegative integer", key)))
}

/// The table in the exchange format
/// `{"s", "m", "params": {"eps_power"}, "rows", "cols", "entries", "semisimple"}`.
pub fn table_to_json(t: &DecompTable) -> Value {
    json!({
        "s": t.s(),
        "m": t.m(),
        "params": {"eps_power": t.eps_power()},
        "rows": t.rows().iter().map(mp_to_json).collect::<Vec<_>>(),
        "cols": t.cols().iter().map(mp_to_json).collect::<Vec<_>>(),
        "entries": t.entries().iter().map(|&(r, c, v)| json!([r, c, v])).collect::<Vec<_>>(),
        "semisimple": t.is_semisimple(),
    })
}

/// Inverse of [`table_to_json`].
pub fn table_from_json(v: &Value) -> Result<DecompTable, CliError> {
    let obj = v.as_object().ok_or_else(|| bad("a decomposition table must be a JSON object"))?;
    let s = usize_field(obj, "s")?;
    let m = usize_field(obj, "m")?;
    let eps_power = match obj.get("params").and_then(|p| p.get("eps_power")) {
        None => 0,
        Some(e) => e.as_i64().ok_or_else(|| bad("params.eps_power must be an integer"))?,
    };
    let labels = |key: &str| -> Result<Vec<Multipartition>, CliError> {
        field(obj, key)?
            .as_array()
            .ok_or_else(|| bad(format!("field {:?} must be an array", key)))?
            .iter()
            .map(mp_from_json)
            .collect()
    };
    let rows = labels("rows")?;
    let cols = labels("cols")?;
    let mut entries = Vec::new();
    for e in field(obj, "entries")?
        .as_array()
        .ok_or_else(|| bad("field \"entries\" must be an array"))?
    {
        let t = e
            .as_array()
            .filter(|t| t.len() == 3)
            .ok_or_else(|| bad(format!("entry {} must be [row, col, value]", e)))?;
        let get = |k: usize| t[k].as_u64().ok_or_else(|| bad(format!("entry {} must hold nonnegative integers", e)));
        entries.push((get(0)? as usize, get(1)? as usize, get(2)?));
    }
    let semisimple = obj.get("semisimple").and_then(Value::as_bool).unwrap_or(false);
    Ok(DecompTable::new(s, m, eps_power, rows, cols, &entries, semisimple)?)
}

/// `{"p", "d", "tables": [...]}`.
pub fn table_set_to_json(set: &TableSet) -> Value {
    json!({
        "p": set.p(),
        "d": set.d(),
        "tables": set.tables().iter().map(table_to_json).collect::<Vec<_>>(),
    })
}

/// Parse either `{"p", "d", "tables": [...]}` or a bare array of tables (in
/// which case `p` and `d` come from the command line).
pub fn table_set_from_json(v: &Value, p: usize, d: usize) -> Result<TableSet, CliError> {
    let (tp, td, list) = match v {
        Value::Array(list) => (p, d, list),
        Value::Object(obj) => {
            let list = field(obj, "tables")?
                .as_array()
                .ok_or_else(|| bad("field \"tables\" must be an array"))?;
            let tp = obj.get("p").and_then(Value::as_u64).map_or(p, |k| k as usize);
            let td = obj.get("d").and_then(Value::as_u64).map_or(d, |k| k as usize);
            (tp, td, list)
        }
        _ => return Err(bad("tables must be an array or an object with a \"tables\" field")),
    };
    if (tp, td) != (p, d) {
        return Err(bad(format!("tables are for (p, d) = ({}, {}), not ({}, {})", tp, td, p, d)));
    }
    let tables = list.iter().map(table_from_json).collect::<Result<Vec<_>, _>>()?;
    Ok(TableSet::new(p, d, tables)?)
}

/// A list of multipartitions, either bare or under a `"labels"` field.
pub fn labels_from_json(v: &Value) -> Result<Vec<Multipartition>, CliError> {
    let list = match v {
        Value::Array(a) => a,
        Value::Object(o) => field(o, "labels")?
            .as_array()
            .ok_or_else(|| bad("field \"labels\" must be an array"))?,
        _ => return Err(bad("Kleshchev labels must be an array of multipartitions")),
    };
    list.iter().map(mp_from_json).collect()
}

/// The assembled matrix: labels `[λ, i]`, sparse nonzero known entries
/// `[row, col, value]`, and the unknowns with their linear constraints.
pub fn matrix_to_json(m: &AssembledMatrix) -> Value {
    let label = |(l, i): &(Multipartition, usize)| json!([mp_to_json(l), i]);
    let mut entries = Vec::new();
    for (ri, row) in m.entries.iter().enumerate() {
        for (ci, e) in row.iter().enumerate() {
            if let Entry::Known(v) = e {
                if *v != 0 {
                    entries.push(json!([ri, ci, v]));
                }
            }
        }
    }
    json!({
        "p": m.p,
        "d": m.d,
        "n": m.n,
        "rows": m.rows.iter().map(label).collect::<Vec<_>>(),
        "cols": m.cols.iter().map(label).collect::<Vec<_>>(),
        "entries": entries,
        "unknowns": m.unknowns.iter().enumerate().map(|(k, (r, c))| json!({"id": k, "row": r, "col": c})).collect::<Vec<_>>(),
        "constraints": m.constraints.iter().map(|c| json!({
            "terms": c.terms.iter().map(|(a, k)| json!([a, k])).collect::<Vec<_>>(),
            "rhs": c.rhs.to_string(),
            "origin": c.origin,
        })).collect::<Vec<_>>(),
        "characteristic": m.characteristic,
        "unitriangular": m.is_unitriangular(),
    })
}

/// Reduce every entry value of a matrix document modulo `k`, dropping
/// entries that become zero.  Values may be JSON integers or rational
/// strings; a non-integral value is an input-data error.
pub fn reduce_matrix_mod(doc: &Value, k: u64) -> Result<Value, CliError> {
    if k < 2 {
        return Err(CliError::Validation(format!("characteristic must be at least 2, got {}", k)));
    }
    let mut out = doc.clone();
    let obj = out
        .as_object_mut()
        .ok_or_else(|| bad("a matrix document must be a JSON object"))?;
    let entries = obj
        .get("entries")
        .and_then(Value::as_array)
        .ok_or_else(|| bad("a matrix document needs an \"entries\" array"))?;
    let modulus = BigInt::from(k);
    let mut reduced = Vec::with_capacity(entries.len());
    for e in entries {
        let t = e
            .as_array()
            .filter(|t| t.len() == 3)
            .ok_or_else(|| bad(format!("entry {} must be [row, col, value]", e)))?;
        let v = rational_from_json(&t[2])?;
        if !v.is_integer() {
            return Err(bad(format!("entry {} is not an integer", e)));
        }
        let mut r = v.to_integer() % &modulus;
        if r.is_negative() {
            r += &modulus;
        }
        if !r.is_zero() {
            reduced.push(json!([t[0], t[1], rational_to_json(&BigRational::from_integer(r))]));
        }
    }
    obj.insert("entries".into(), Value::Array(reduced));
    obj.insert("characteristic".into(), json!(k));
    Ok(out)
}
