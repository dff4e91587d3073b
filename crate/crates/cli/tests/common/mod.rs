//! Helpers shared by the CLI integration tests: spawning the binary with a
//! clean environment, and a small JSON Schema validator covering exactly the
//! keywords `schema/report.schema.json` uses (`type`, `required`,
//! `properties`, `additionalProperties`, `items`, `minItems`, `maxItems`,
//! `minimum`, `$ref`/`definitions`). Independent of the serializer under
//! test: it works on parsed `serde_json::Value`s only.

// Each integration-test binary compiles its own copy and uses a subset.
#![allow(dead_code)]

use std::process::{Command, Output};

use serde_json::Value;

pub fn bin() -> Command {
    let mut cmd = Command::new(env!("CARGO_BIN_EXE_bridgepants"));
    // Tests control the cap explicitly; don't inherit it from the caller.
    cmd.env_remove("BRIDGEPANTS_MAX_BOUND");
    cmd
}

pub fn run(args: &[&str]) -> Output {
    bin().args(args).output().expect("binary spawns")
}

pub fn exit_code(out: &Output) -> i32 {
    out.status.code().expect("terminated by exit, not signal")
}

pub fn stdout_str(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).expect("stdout is UTF-8")
}

pub fn stderr_str(out: &Output) -> String {
    String::from_utf8(out.stderr.clone()).expect("stderr is UTF-8")
}

pub fn stdout_json(out: &Output) -> Value {
    serde_json::from_str(&stdout_str(out)).expect("stdout parses as JSON")
}

/// The checked-in report schema.
pub fn report_schema() -> Value {
    serde_json::from_str(include_str!("../../schema/report.schema.json"))
        .expect("checked-in schema parses")
}

/// Validates `instance` against the subschema `schema`, resolving `$ref`
/// against `root`. Returns the first violation as `Err`.
pub fn validate(root: &Value, schema: &Value, instance: &Value, path: &str) -> Result<(), String> {
    let rules = schema
        .as_object()
        .ok_or_else(|| format!("{path}: schema node is not an object"))?;

    if let Some(reference) = rules.get("$ref") {
        let reference = reference.as_str().ok_or_else(|| format!("{path}: non-string $ref"))?;
        let target = resolve_ref(root, reference)
            .ok_or_else(|| format!("{path}: unresolvable $ref {reference:?}"))?;
        return validate(root, target, instance, path);
    }

    if let Some(ty) = rules.get("type") {
        let allowed: Vec<&str> = match ty {
            Value::String(s) => vec![s.as_str()],
            Value::Array(list) => list.iter().filter_map(Value::as_str).collect(),
            _ => return Err(format!("{path}: malformed type keyword")),
        };
        if !allowed.iter().any(|t| type_matches(t, instance)) {
            return Err(format!("{path}: {instance} does not have type {allowed:?}"));
        }
    }

    if let Value::Object(fields) = instance {
        if let Some(Value::Array(required)) = rules.get("required") {
            for name in required.iter().filter_map(Value::as_str) {
                if !fields.contains_key(name) {
                    return Err(format!("{path}: missing required field {name:?}"));
                }
            }
        }
        let properties = rules.get("properties").and_then(Value::as_object);
        let closed = rules.get("additionalProperties") == Some(&Value::Bool(false));
        for (key, value) in fields {
            match properties.and_then(|p| p.get(key)) {
                Some(subschema) => validate(root, subschema, value, &format!("{path}/{key}"))?,
                None if closed => return Err(format!("{path}: unexpected field {key:?}")),
                None => {}
            }
        }
    }

    if let Value::Array(items) = instance {
        if let Some(min) = rules.get("minItems").and_then(Value::as_u64) {
            if (items.len() as u64) < min {
                return Err(format!("{path}: fewer than {min} items"));
            }
        }
        if let Some(max) = rules.get("maxItems").and_then(Value::as_u64) {
            if (items.len() as u64) > max {
                return Err(format!("{path}: more than {max} items"));
            }
        }
        if let Some(subschema) = rules.get("items") {
            for (i, item) in items.iter().enumerate() {
                validate(root, subschema, item, &format!("{path}/{i}"))?;
            }
        }
    }

    if let Some(minimum) = rules.get("minimum").and_then(Value::as_f64) {
        if let Some(x) = instance.as_f64() {
            if x < minimum {
                return Err(format!("{path}: {x} is below the minimum {minimum}"));
            }
        }
    }

    Ok(())
}

/// Validates a full report (or batch report line) against the checked-in
/// schema, panicking with the violation on failure.
pub fn assert_valid_report(instance: &Value) {
    let schema = report_schema();
    if let Err(violation) = validate(&schema, &schema, instance, "report") {
        panic!("schema violation: {violation}\nreport: {instance:#}");
    }
}

fn type_matches(ty: &str, v: &Value) -> bool {
    match ty {
        "object" => v.is_object(),
        "array" => v.is_array(),
        "string" => v.is_string(),
        "boolean" => v.is_boolean(),
        "null" => v.is_null(),
        "number" => v.is_number(),
        "integer" => v.is_i64() || v.is_u64(),
        _ => false,
    }
}

fn resolve_ref<'a>(root: &'a Value, reference: &str) -> Option<&'a Value> {
    let mut node = root;
    for segment in reference.strip_prefix("#/")?.split('/') {
        node = node.get(segment)?;
    }
    Some(node)
}
