//! Browser bindings. Each export returns a JSON string; errors surface as
//! thrown JS strings.

pub mod api;

use wasm_bindgen::prelude::*;

fn js(r: api::ApiResult) -> Result<String, JsValue> {
    r.map_err(|e| JsValue::from_str(&e))
}

#[wasm_bindgen]
pub fn enumerate(n: usize) -> Result<String, JsValue> {
    js(api::enumerate(n))
}

#[wasm_bindgen(js_name = coefficientMatrix)]
pub fn coefficient_matrix(source: &str, n: usize, index: usize) -> Result<String, JsValue> {
    js(api::coefficient_matrix(source, n, index))
}

#[wasm_bindgen]
pub fn invariants(source: &str, n: usize) -> Result<String, JsValue> {
    js(api::invariants(source, n))
}

#[wasm_bindgen]
pub fn completeness(n: usize, probes: usize, seed: u64) -> Result<String, JsValue> {
    js(api::completeness(n, probes, seed))
}
