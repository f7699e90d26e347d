//! JSON output documents. Keys are sorted and big integers are decimal
//! strings.

use serde_json::{json, Value};
use svo_core::{FamilySpec, FormulaResult, FullyRegularParams};

use crate::SCHEMA_VERSION;

pub fn count_document(spec: &FamilySpec, result: &FormulaResult, elapsed_ms: Option<u64>) -> Value {
    let mut doc = json!({
        "schema_version": SCHEMA_VERSION,
        "family": spec.to_string(),
        "method": result.method.tag(),
        "sigma": result.sigma.to_string(),
        "sigma_prime_num": result.sigma_prime.numer().to_string(),
        "sigma_prime_den": result.sigma_prime.denom().to_string(),
    });
    if let Some(ms) = elapsed_ms {
        doc["elapsed_ms"] = json!(ms);
    }
    doc
}

pub fn params_document(spec: &FamilySpec, params: &FullyRegularParams) -> Value {
    json!({
        "schema_version": SCHEMA_VERSION,
        "family": spec.to_string(),
        "alpha": params.alpha(),
        "a": params.values().iter().map(|v| v.to_string()).collect::<Vec<_>>(),
    })
}

pub fn oracle_document(mode: &str, payload: Value) -> Value {
    let mut doc = json!({ "schema_version": SCHEMA_VERSION, "mode": mode });
    if let (Some(target), Value::Object(fields)) = (doc.as_object_mut(), payload) {
        target.extend(fields);
    }
    doc
}

/// Pretty JSON with a trailing newline.
pub fn render(doc: &Value) -> String {
    let mut s = serde_json::to_string_pretty(doc).expect("documents serialize");
    s.push('\n');
    s
}

#[cfg(test)]
mod tests {
    use super::*;
    use svo_core::{evaluate, Method};

    #[test]
    fn count_document_is_stable() {
        let spec = FamilySpec::complete_tripartite(2, 2, 2);
        let r = evaluate(&spec, Method::TripartiteFull, 20).unwrap();
        let text = render(&count_document(&spec, &r, None));
        assert_eq!(
            text,
            "{\n  \"family\": \"parts=1:2,1:2,1:2\",\n  \"method\": \"theorem4_form1\",\n  \"schema_version\": 1,\n  \"sigma\": \"34560\",\n  \"sigma_prime_den\": \"7\",\n  \"sigma_prime_num\": \"6\"\n}\n"
        );
    }
}
