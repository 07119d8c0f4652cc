//! Browser bindings for the `www/` demo page. Each export returns pretty JSON
//! or plain text, and an error message string on failure.

use invint_core::cayley::sl_invariant_dim;
use invint_core::harmonic::{builtin, fourier, IrrepTable};
use invint_core::json::{
    dual_to_json, function_for, function_from_json, to_pretty, weingarten_to_json, AnyIrrepTable,
    ScalarJson,
};
use invint_core::tensor::GroupKind;
use invint_core::weingarten::weingarten_coefficients;
use serde_json::json;
use wasm_bindgen::prelude::wasm_bindgen;

/// Largest degree accepted from the page, to keep the tab responsive.
pub const MAX_DEMO_DEGREE: usize = 4;

pub fn weingarten_json(kind: &str, dim: usize, degree: usize) -> Result<String, String> {
    if degree > MAX_DEMO_DEGREE {
        return Err(format!(
            "degree is limited to {MAX_DEMO_DEGREE} in the browser demo"
        ));
    }
    let kind: GroupKind = kind
        .parse()
        .map_err(|e: invint_core::Error| e.to_string())?;
    let table = weingarten_coefficients(degree, dim, kind).map_err(|e| e.to_string())?;
    Ok(to_pretty(&weingarten_to_json(&table)))
}

pub fn sl_dim_text(n: usize, m: u32) -> Result<String, String> {
    if n == 0 {
        return Err("n must be positive".into());
    }
    Ok(sl_invariant_dim(n, m).to_string())
}

fn fourier_generic<S: ScalarJson>(table: &IrrepTable<S>, function: &str) -> Result<String, String> {
    let values = function_from_json(function).map_err(|e| e.to_string())?;
    let a = function_for(&values, table).map_err(|e| e.to_string())?;
    let hat = fourier(&a, table).map_err(|e| e.to_string())?;
    let names = table.group().names();
    Ok(to_pretty(
        &json!({"elements": names, "degrees": table.degrees(), "fourier": dual_to_json(&hat)}),
    ))
}

/// `function` is `{"values": [...]}` in the element order of the named group.
pub fn fourier_json(group: &str, function: &str) -> Result<String, String> {
    match builtin(group).map_err(|e| e.to_string())? {
        AnyIrrepTable::Exact(t) => fourier_generic(&t, function),
        AnyIrrepTable::Complex(t) => fourier_generic(&t, function),
    }
}

/// Element names of a shipped group, as a JSON array.
pub fn group_elements_json(group: &str) -> Result<String, String> {
    let names = match builtin(group).map_err(|e| e.to_string())? {
        AnyIrrepTable::Exact(t) => t.group().names().to_vec(),
        AnyIrrepTable::Complex(t) => t.group().names().to_vec(),
    };
    serde_json::to_string(&names).map_err(|e| e.to_string())
}

#[wasm_bindgen]
pub fn weingarten(kind: &str, dim: usize, degree: usize) -> Result<String, String> {
    weingarten_json(kind, dim, degree)
}

#[wasm_bindgen]
pub fn sl_dim(n: usize, m: u32) -> Result<String, String> {
    sl_dim_text(n, m)
}

#[wasm_bindgen]
pub fn group_fourier(group: &str, function: &str) -> Result<String, String> {
    fourier_json(group, function)
}

#[wasm_bindgen]
pub fn group_elements(group: &str) -> Result<String, String> {
    group_elements_json(group)
}
