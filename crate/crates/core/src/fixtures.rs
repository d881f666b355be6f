//! Named choices used throughout the tests and reachable from the CLI as
//! `fixture:NAME`.
//!
//! `sr01` to `sr15` are the fifteen sequentially rationalizable classes;
//! the other names are aliases for members of that list (or, for `c2rat`,
//! the unique rationalizable class).

use std::sync::OnceLock;

use serde_json::{Map, Value};

use crate::error::{Error, Result};
use crate::model::{parse_choice, ChoiceFunction, GroundSet};

const SOURCE: &str = include_str!("../fixtures/choices.json");

fn table() -> &'static Map<String, Value> {
    static TABLE: OnceLock<Map<String, Value>> = OnceLock::new();
    TABLE.get_or_init(|| serde_json::from_str(SOURCE).expect("bundled fixtures are valid JSON"))
}

/// Every fixture name, in file order.
pub fn names() -> Vec<&'static str> {
    table().keys().map(String::as_str).collect()
}

/// Looks up a fixture by name.
pub fn fixture(name: &str) -> Result<(GroundSet, ChoiceFunction)> {
    let doc = table()
        .get(name)
        .ok_or_else(|| Error::UnknownFixture(name.to_string()))?;
    parse_choice(&doc.to_string())
}

/// The fifteen sequentially rationalizable classes, in list order.
pub fn sr_fixtures() -> Vec<(GroundSet, ChoiceFunction)> {
    (1..=15)
        .map(|i| fixture(&format!("sr{i:02}")).expect("bundled fixture"))
        .collect()
}
