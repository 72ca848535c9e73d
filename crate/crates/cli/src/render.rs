//! Canonical text and JSON rendering of evaluated values. Text output
//! re-parses to an equal value; JSON follows the schema
//! `{"type", "dim", "terms": [{"blades": [...], "coeff": x}]}` for algebra
//! elements, with analogous shapes for operators and extensors.

use extensor_core::algebra::{BladeMask, GradeSet};
use extensor_core::display::{fmt_blade, fmt_coeff, render, round_sig12};
use extensor_core::extensor::{Extensor, Value};
use extensor_core::exterior::{Kind, Multiform, Multivector, Variance};
use extensor_core::operator::LinearMap;

use crate::eval::Val;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Format {
    Text,
    Json,
}

pub fn show(v: &Val, format: Format) -> String {
    match format {
        Format::Text => text(v),
        Format::Json => json(v).to_string(),
    }
}

pub fn text(v: &Val) -> String {
    match v {
        Val::Scalar(s) => fmt_coeff(*s),
        Val::Vector(x) => render(x),
        Val::Form(phi) => render(phi),
        Val::MapV(m) => matrix_text(m, false),
        Val::MapF(m) => matrix_text(m, true),
        Val::ExtOpV(op) => format!("ext({})", matrix_text(op.base(), false)),
        Val::ExtOpF(op) => format!("ext({})", matrix_text(op.base(), true)),
        Val::GenOpV(op) => format!("gen({})", matrix_text(op.base(), false)),
        Val::GenOpF(op) => format!("gen({})", matrix_text(op.base(), true)),
        Val::Ext(t) => extensor_text(t),
    }
}

/// A vector operator prints as its matrix literal; a form operator prints
/// as `adj` of the transposed literal, which evaluates back to it.
fn matrix_text<K: Variance>(m: &LinearMap<K>, form: bool) -> String {
    let n = m.ctx().dim();
    let entry = |i: usize, j: usize| {
        if form {
            m.entry(j, i)
        } else {
            m.entry(i, j)
        }
    };
    let rows: Vec<String> = (0..n)
        .map(|i| {
            let cells: Vec<String> = (0..n).map(|j| fmt_coeff(entry(i, j))).collect();
            format!("[{}]", cells.join(","))
        })
        .collect();
    let lit = format!("[{}]", rows.join(","));
    if form {
        format!("adj({lit})")
    } else {
        lit
    }
}

fn grades_text(gs: GradeSet, side: &str) -> String {
    let grades: Vec<String> = gs.grades().map(|k| k.to_string()).collect();
    format!("{side}{{{}}}", grades.join(","))
}

fn key_text(mask: BladeMask, form: bool) -> String {
    if mask == BladeMask::SCALAR {
        String::from("1")
    } else {
        fmt_blade(if form { "w" } else { "e" }, mask)
    }
}

fn value_is_zero(v: &Value) -> bool {
    match v {
        Value::Vector(x) => x.is_zero(),
        Value::Form(phi) => phi.is_zero(),
    }
}

fn value_text(v: &Value) -> String {
    match v {
        Value::Vector(x) => render(x),
        Value::Form(phi) => render(phi),
    }
}

fn extensor_text(t: &Extensor) -> String {
    let sig = t.sig();
    let mut parts: Vec<String> = sig
        .vector_slots
        .iter()
        .map(|&gs| grades_text(gs, "v"))
        .collect();
    parts.extend(sig.form_slots.iter().map(|&gs| grades_text(gs, "f")));
    let out_side = if sig.output_kind == Kind::Form {
        "f"
    } else {
        "v"
    };
    let mut s = format!(
        "extensor({} -> {}",
        parts.join(", "),
        grades_text(sig.output_grades, out_side)
    );
    let nv = sig.vector_slots.len();
    for (key, value) in t.table() {
        if value_is_zero(value) {
            continue;
        }
        let keys: Vec<String> = key
            .iter()
            .enumerate()
            .map(|(i, &mask)| key_text(mask, i >= nv))
            .collect();
        s.push_str(&format!("; [{}] = {}", keys.join(", "), value_text(value)));
    }
    s.push(')');
    s
}

// --- JSON ---

fn blades_json(mask: BladeMask, symbol: &str) -> serde_json::Value {
    let names: Vec<serde_json::Value> = mask
        .indices()
        .map(|i| serde_json::Value::String(format!("{symbol}{}", i + 1)))
        .collect();
    serde_json::Value::Array(names)
}

fn terms_json_vec(x: &Multivector) -> serde_json::Value {
    terms_json(x.terms(), "e")
}

fn terms_json_form(phi: &Multiform) -> serde_json::Value {
    terms_json(phi.terms(), "w")
}

fn terms_json(terms: impl Iterator<Item = (BladeMask, f64)>, symbol: &str) -> serde_json::Value {
    let mut list: Vec<(BladeMask, f64)> = terms.collect();
    list.sort_by_key(|&(mask, _)| (mask.grade(), mask.0));
    let arr: Vec<serde_json::Value> = list
        .into_iter()
        .map(|(mask, c)| {
            serde_json::json!({
                "blades": blades_json(mask, symbol),
                "coeff": round_sig12(c),
            })
        })
        .collect();
    serde_json::Value::Array(arr)
}

fn matrix_json<K: Variance>(m: &LinearMap<K>) -> serde_json::Value {
    let n = m.ctx().dim();
    let rows: Vec<serde_json::Value> = (0..n)
        .map(|i| {
            let cells: Vec<serde_json::Value> = (0..n)
                .map(|j| serde_json::json!(round_sig12(m.entry(i, j))))
                .collect();
            serde_json::Value::Array(cells)
        })
        .collect();
    serde_json::Value::Array(rows)
}

fn value_json(v: &Value, dim: usize) -> serde_json::Value {
    match v {
        Value::Vector(x) => serde_json::json!({
            "type": "multivector", "dim": dim, "terms": terms_json_vec(x)
        }),
        Value::Form(phi) => serde_json::json!({
            "type": "multiform", "dim": dim, "terms": terms_json_form(phi)
        }),
    }
}

fn grades_json(gs: GradeSet) -> serde_json::Value {
    serde_json::Value::Array(gs.grades().map(|k| serde_json::json!(k)).collect())
}

pub fn json(v: &Val) -> serde_json::Value {
    match v {
        Val::Scalar(s) => serde_json::json!({
            "type": "scalar",
            "terms": [{"blades": [], "coeff": round_sig12(*s)}],
        }),
        Val::Vector(x) => serde_json::json!({
            "type": "multivector", "dim": x.ctx().dim(), "terms": terms_json_vec(x)
        }),
        Val::Form(phi) => serde_json::json!({
            "type": "multiform", "dim": phi.ctx().dim(), "terms": terms_json_form(phi)
        }),
        Val::MapV(m) => serde_json::json!({
            "type": "operator", "variance": "vector", "dim": m.ctx().dim(),
            "entries": matrix_json(m)
        }),
        Val::MapF(m) => serde_json::json!({
            "type": "operator", "variance": "form", "dim": m.ctx().dim(),
            "entries": matrix_json(m)
        }),
        Val::ExtOpV(op) => serde_json::json!({
            "type": "extended-operator", "variance": "vector",
            "dim": op.base().ctx().dim(), "entries": matrix_json(op.base())
        }),
        Val::ExtOpF(op) => serde_json::json!({
            "type": "extended-operator", "variance": "form",
            "dim": op.base().ctx().dim(), "entries": matrix_json(op.base())
        }),
        Val::GenOpV(op) => serde_json::json!({
            "type": "generalized-operator", "variance": "vector",
            "dim": op.base().ctx().dim(), "entries": matrix_json(op.base())
        }),
        Val::GenOpF(op) => serde_json::json!({
            "type": "generalized-operator", "variance": "form",
            "dim": op.base().ctx().dim(), "entries": matrix_json(op.base())
        }),
        Val::Ext(t) => {
            let sig = t.sig();
            let dim = sig.ctx.dim();
            let nv = sig.vector_slots.len();
            let mut slots: Vec<serde_json::Value> = sig
                .vector_slots
                .iter()
                .map(|&gs| serde_json::json!({"side": "v", "grades": grades_json(gs)}))
                .collect();
            slots.extend(
                sig.form_slots
                    .iter()
                    .map(|&gs| serde_json::json!({"side": "f", "grades": grades_json(gs)})),
            );
            let out_side = if sig.output_kind == Kind::Form {
                "f"
            } else {
                "v"
            };
            let table: Vec<serde_json::Value> = t
                .table()
                .filter(|(_, v)| !value_is_zero(v))
                .map(|(key, value)| {
                    let keys: Vec<serde_json::Value> = key
                        .iter()
                        .enumerate()
                        .map(|(i, &mask)| serde_json::Value::String(key_text(mask, i >= nv)))
                        .collect();
                    serde_json::json!({
                        "key": serde_json::Value::Array(keys),
                        "value": value_json(value, dim),
                    })
                })
                .collect();
            serde_json::json!({
                "type": "extensor",
                "dim": dim,
                "slots": serde_json::Value::Array(slots),
                "output": {"side": out_side, "grades": grades_json(sig.output_grades)},
                "table": serde_json::Value::Array(table),
            })
        }
    }
}
