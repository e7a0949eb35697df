//! Browser bindings: catalog listing, codimension tables and polynomial
//! classification. Each export returns report text; the page renders it.

use gpi_core::catalog::{self, build_spec};
use gpi_core::codim::{classify, codim_sequence, Budget, Refusal};
use gpi_core::envelope::Envelope;
use gpi_core::poly::{parse, LabelMap};
use gpi_core::report::{self, Format};
use wasm_bindgen::prelude::*;

/// Degree cap for the page; larger tables belong on the command line.
pub const MAX_DEGREE: usize = 5;

fn format(name: &str) -> Result<Format, String> {
    name.parse::<Format>().map_err(|e| e.to_string())
}

fn spec_of(text: &str) -> &str {
    let t = text.trim();
    t.strip_prefix("catalog:").unwrap_or(t)
}

pub fn catalog_text(out: &str) -> Result<String, String> {
    Ok(report::catalog(&catalog::list(), format(out)?))
}

pub fn codim_text(spec: &str, n: usize, out: &str) -> Result<String, String> {
    let a = build_spec(spec_of(spec)).map_err(|e| e.to_string())?.body;
    let labels = LabelMap::standard(&a.group);
    let env = Envelope::new(a.clone());
    let reports = codim_sequence(&env, n, &Budget::new(MAX_DEGREE)).map_err(|e| match e {
        Refusal::Degree { .. } => format!("n = {n} is above the page limit of {MAX_DEGREE}; use the gpi command line"),
        other => other.to_string(),
    })?;
    Ok(report::codim(&a, &reports, &labels, format(out)?))
}

pub fn classify_text(spec: &str, poly: &str, out: &str) -> Result<String, String> {
    let a = build_spec(spec_of(spec)).map_err(|e| e.to_string())?.body;
    let labels = LabelMap::standard(&a.group);
    let f = parse(poly, &labels).map_err(|e| e.to_string())?;
    let degree = f.terms().map(|(w, _)| w.len()).max().unwrap_or(0);
    if degree > MAX_DEGREE + 1 {
        return Err(format!("degree {degree} is above the page limit of {}", MAX_DEGREE + 1));
    }
    let env = Envelope::new(a.clone());
    let v = classify(&env, &f);
    Ok(report::classify(poly, &a, &v, &labels, format(out)?))
}

fn js(r: Result<String, String>) -> Result<String, JsValue> {
    r.map_err(|e| JsValue::from_str(&e))
}

#[wasm_bindgen(js_name = catalog)]
pub fn catalog_js(out: &str) -> Result<String, JsValue> {
    js(catalog_text(out))
}

#[wasm_bindgen(js_name = codim)]
pub fn codim_js(spec: &str, n: usize, out: &str) -> Result<String, JsValue> {
    js(codim_text(spec, n, out))
}

#[wasm_bindgen(js_name = classify)]
pub fn classify_js(spec: &str, poly: &str, out: &str) -> Result<String, JsValue> {
    js(classify_text(spec, poly, out))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn codim_matches_known_totals() {
        let s = codim_text("catalog:A2(3)@Z3", 3, "json").unwrap();
        let v: serde_json::Value = serde_json::from_str(&s).unwrap();
        assert_eq!(v["totals"]["c"], serde_json::json!([3, 9, 27]));
    }

    #[test]
    fn page_limits_are_refusals() {
        assert!(codim_text("A2(3)@Z3", 6, "text").unwrap_err().contains("page limit"));
        assert!(codim_text("A99@Z2", 2, "text").is_err());
        assert!(codim_text("A2(3)@Z3", 2, "xml").is_err());
    }

    #[test]
    fn classify_and_catalog() {
        let s = classify_text("A2(2)@Z2", "[x1:1, x2:g]", "text").unwrap();
        assert!(s.contains("identity"), "{s}");
        assert!(catalog_text("text").unwrap().contains("A6(g,1,g)@Z2"));
    }
}
