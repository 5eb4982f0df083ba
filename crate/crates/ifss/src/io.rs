//! JSON interchange for soft sets and relations: schema validation with
//! path-qualified errors, and canonical serialization whose decimals stay
//! human-diffable.

use std::sync::Arc;

use serde_json::{json, Map, Value};

use crate::algebra::IFValue;
use crate::error::Error;
use crate::relation::{IFSoftRelation, ParamPair};
use crate::softset::{IFSet, IFSoftSet, Universe};

/// Rounds to 12 significant digits. Canonical output prints the result of
/// exact decimal arithmetic (`0.88`, not `0.8799999999999999`) while still
/// distinguishing anything farther apart than the comparison tolerance.
pub fn round_sig(x: f64) -> f64 {
    if x == 0.0 || !x.is_finite() {
        return if x.is_finite() { 0.0 } else { x };
    }
    let exponent = x.abs().log10().floor() as i32;
    let scale = 10f64.powi(11 - exponent);
    (x * scale).round() / scale
}

/// Shortest decimal form of a rounded scalar, for CLI output.
pub fn format_scalar(x: f64) -> String {
    format!("{}", round_sig(x))
}

fn schema(path: impl Into<String>, message: impl Into<String>) -> Error {
    Error::Schema {
        path: path.into(),
        message: message.into(),
    }
}

fn as_object<'a>(value: &'a Value, path: &str) -> Result<&'a Map<String, Value>, Error> {
    value
        .as_object()
        .ok_or_else(|| schema(path, "expected an object"))
}

fn as_array<'a>(value: &'a Value, path: &str) -> Result<&'a Vec<Value>, Error> {
    value
        .as_array()
        .ok_or_else(|| schema(path, "expected an array"))
}

fn get_field<'a>(
    obj: &'a Map<String, Value>,
    key: &str,
    path: &str,
) -> Result<&'a Value, Error> {
    obj.get(key)
        .ok_or_else(|| schema(path, format!("missing key {key:?}")))
}

fn reject_unknown_keys(
    obj: &Map<String, Value>,
    allowed: &[&str],
    path: &str,
) -> Result<(), Error> {
    for key in obj.keys() {
        if !allowed.contains(&key.as_str()) {
            return Err(schema(
                format!("{path}.{key}"),
                format!("unknown key (expected one of {allowed:?})"),
            ));
        }
    }
    Ok(())
}

fn string_array(value: &Value, path: &str) -> Result<Vec<String>, Error> {
    let array = as_array(value, path)?;
    array
        .iter()
        .enumerate()
        .map(|(i, v)| {
            v.as_str()
                .map(str::to_string)
                .ok_or_else(|| schema(format!("{path}[{i}]"), "expected a string"))
        })
        .collect()
}

fn check_distinct(ids: &[String], path: &str) -> Result<(), Error> {
    let mut seen = std::collections::BTreeSet::new();
    for id in ids {
        if !seen.insert(id.as_str()) {
            return Err(schema(path, format!("duplicate identifier {id:?}")));
        }
    }
    Ok(())
}

fn parse_if_value(value: &Value, path: &str) -> Result<IFValue, Error> {
    let array = as_array(value, path)?;
    if array.len() != 2 {
        return Err(schema(
            path,
            format!("expected [mu, nu], got {} entries", array.len()),
        ));
    }
    let number = |v: &Value, which: &str| {
        v.as_f64()
            .ok_or_else(|| schema(path, format!("{which} is not a number")))
    };
    let mu = number(&array[0], "mu")?;
    let nu = number(&array[1], "nu")?;
    IFValue::new(mu, nu).map_err(|e| e.at(path))
}

/// Parses an element -> [mu, nu] map that must be total over the universe.
fn parse_value_map(
    value: &Value,
    universe: &Arc<Universe>,
    path: &str,
) -> Result<IFSet, Error> {
    let obj = as_object(value, path)?;
    for key in obj.keys() {
        if universe.index_of(key).is_none() {
            return Err(schema(
                format!("{path}.{key}"),
                "element not in the universe",
            ));
        }
    }
    let mut values = Vec::with_capacity(universe.len());
    for element in universe.elements() {
        let entry = obj
            .get(element)
            .ok_or_else(|| schema(format!("{path}.{element}"), "missing element entry"))?;
        values.push(parse_if_value(entry, &format!("{path}.{element}"))?);
    }
    IFSet::new(Arc::clone(universe), values)
}

/// Parses and validates a soft-set document.
pub fn parse_soft_set(text: &str) -> Result<IFSoftSet, Error> {
    let value: Value = serde_json::from_str(text)?;
    soft_set_from_value(&value)
}

pub fn soft_set_from_value(value: &Value) -> Result<IFSoftSet, Error> {
    let obj = as_object(value, "$")?;
    reject_unknown_keys(obj, &["universe", "parameters", "values"], "$")?;

    let universe_ids = string_array(get_field(obj, "universe", "$")?, "universe")?;
    let universe = Universe::new(universe_ids).map_err(|e| e.at("universe"))?;

    let parameters = string_array(get_field(obj, "parameters", "$")?, "parameters")?;
    check_distinct(&parameters, "parameters")?;

    let values = as_object(get_field(obj, "values", "$")?, "values")?;
    for key in values.keys() {
        if !parameters.contains(key) {
            return Err(schema(
                format!("values.{key}"),
                "parameter not declared in \"parameters\"",
            ));
        }
    }

    let mut entries = Vec::with_capacity(parameters.len());
    for param in &parameters {
        let entry = values
            .get(param)
            .ok_or_else(|| schema(format!("values.{param}"), "missing parameter entry"))?;
        let set = parse_value_map(entry, &universe, &format!("values.{param}"))?;
        entries.push((param.clone(), set));
    }
    IFSoftSet::new(universe, entries)
}

/// Canonical document form of a soft set: arrays in stored order, object
/// keys sorted, scalars rounded to 12 significant digits.
pub fn soft_set_to_value(soft_set: &IFSoftSet) -> Value {
    let mut values = Map::new();
    for (param, set) in soft_set.iter() {
        values.insert(param.to_string(), value_map_to_value(set));
    }
    json!({
        "universe": soft_set.universe().elements(),
        "parameters": soft_set.parameters(),
        "values": Value::Object(values),
    })
}

fn value_map_to_value(set: &IFSet) -> Value {
    let mut per_element = Map::new();
    for (element, v) in set.iter() {
        per_element.insert(
            element.to_string(),
            json!([round_sig(v.mu()), round_sig(v.nu())]),
        );
    }
    Value::Object(per_element)
}

pub fn serialize_soft_set(soft_set: &IFSoftSet) -> String {
    let mut out =
        serde_json::to_string_pretty(&soft_set_to_value(soft_set)).expect("document is valid JSON");
    out.push('\n');
    out
}

/// Parses and validates a relation document.
pub fn parse_relation(text: &str) -> Result<IFSoftRelation, Error> {
    let value: Value = serde_json::from_str(text)?;
    relation_from_value(&value)
}

pub fn relation_from_value(value: &Value) -> Result<IFSoftRelation, Error> {
    let obj = as_object(value, "$")?;
    reject_unknown_keys(
        obj,
        &["universe", "left_params", "right_params", "pairs"],
        "$",
    )?;

    let universe_ids = string_array(get_field(obj, "universe", "$")?, "universe")?;
    let universe = Universe::new(universe_ids).map_err(|e| e.at("universe"))?;

    let left_params = string_array(get_field(obj, "left_params", "$")?, "left_params")?;
    check_distinct(&left_params, "left_params")?;
    let right_params = string_array(get_field(obj, "right_params", "$")?, "right_params")?;
    check_distinct(&right_params, "right_params")?;

    let pairs = as_array(get_field(obj, "pairs", "$")?, "pairs")?;
    let mut entries = Vec::with_capacity(pairs.len());
    for (i, pair_value) in pairs.iter().enumerate() {
        let path = format!("pairs[{i}]");
        let pair_obj = as_object(pair_value, &path)?;
        reject_unknown_keys(pair_obj, &["first", "second", "values"], &path)?;
        let first = get_field(pair_obj, "first", &path)?
            .as_str()
            .ok_or_else(|| schema(format!("{path}.first"), "expected a string"))?;
        let second = get_field(pair_obj, "second", &path)?
            .as_str()
            .ok_or_else(|| schema(format!("{path}.second"), "expected a string"))?;
        let set = parse_value_map(
            get_field(pair_obj, "values", &path)?,
            &universe,
            &format!("{path}.values"),
        )?;
        entries.push((ParamPair::new(first, second), set));
    }
    IFSoftRelation::new(universe, left_params, right_params, entries)
}

/// Canonical document form of a relation, pairs in canonical domain order.
pub fn relation_to_value(relation: &IFSoftRelation) -> Value {
    let pairs: Vec<Value> = relation
        .iter()
        .map(|(pair, set)| {
            json!({
                "first": pair.first,
                "second": pair.second,
                "values": value_map_to_value(set),
            })
        })
        .collect();
    json!({
        "universe": relation.universe().elements(),
        "left_params": relation.left_params(),
        "right_params": relation.right_params(),
        "pairs": pairs,
    })
}

pub fn serialize_relation(relation: &IFSoftRelation) -> String {
    let mut out = serde_json::to_string_pretty(&relation_to_value(relation))
        .expect("document is valid JSON");
    out.push('\n');
    out
}
