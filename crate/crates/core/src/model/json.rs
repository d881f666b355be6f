//! The JSON document form of a choice:
//! `{"n":4,"items":["a","b","d","e"],"c":{"ab":"a",...,"abde":"a"}}`.

use std::fmt;

use serde::de::{Deserializer, MapAccess, Visitor};
use serde::Deserialize;
use serde_json::{Map, Value};

use super::choice::ChoiceFunction;
use super::ground::{all_menus, GroundSet, Menu, MAX_ITEMS};
use crate::error::{Error, Result};

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct ChoiceDoc {
    n: usize,
    #[serde(default)]
    items: Option<Vec<String>>,
    c: Entries,
}

/// Menu entries in document order; duplicate keys survive so they can be
/// reported.
struct Entries(Vec<(String, String)>);

impl<'de> Deserialize<'de> for Entries {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        struct EntriesVisitor;

        impl<'de> Visitor<'de> for EntriesVisitor {
            type Value = Entries;

            fn expecting(&self, f: &mut fmt::Formatter) -> fmt::Result {
                f.write_str("an object mapping menus to items")
            }

            fn visit_map<A: MapAccess<'de>>(
                self,
                mut map: A,
            ) -> std::result::Result<Entries, A::Error> {
                let mut out = Vec::new();
                while let Some((k, v)) = map.next_entry::<String, String>()? {
                    out.push((k, v));
                }
                Ok(Entries(out))
            }
        }

        deserializer.deserialize_map(EntriesVisitor)
    }
}

/// Parses the JSON document form into its ground set and choice.
pub fn parse_choice(text: &str) -> Result<(GroundSet, ChoiceFunction)> {
    let doc: ChoiceDoc = serde_json::from_str(text).map_err(|e| Error::Malformed(e.to_string()))?;
    if !(2..=MAX_ITEMS).contains(&doc.n) {
        return Err(Error::UnsupportedSize(doc.n));
    }
    let ground = match doc.items {
        Some(items) => {
            if items.len() != doc.n {
                return Err(Error::InvalidGroundSet(format!(
                    "n = {} but {} items listed",
                    doc.n,
                    items.len()
                )));
            }
            let mut labels = Vec::with_capacity(items.len());
            for item in &items {
                let mut chars = item.chars();
                match (chars.next(), chars.next()) {
                    (Some(ch), None) => labels.push(ch),
                    _ => {
                        return Err(Error::InvalidGroundSet(format!(
                            "item label {item:?} is not a single character"
                        )))
                    }
                }
            }
            GroundSet::new(labels)?
        }
        None => GroundSet::standard(doc.n)?,
    };

    let mut picks: [Option<usize>; 1 << MAX_ITEMS] = [None; 1 << MAX_ITEMS];
    for (key, value) in &doc.c.0 {
        let menu = ground.parse_menu(key)?;
        let item = ground.parse_item(value)?;
        if !menu.contains(item) {
            return Err(Error::NonMemberChoice {
                menu: key.clone(),
                item: value.clone(),
            });
        }
        let slot = &mut picks[menu.bits() as usize];
        if slot.is_some() {
            return Err(Error::DuplicateMenu(ground.menu_label(menu)));
        }
        *slot = Some(item);
    }
    for &menu in all_menus(ground.n()) {
        if picks[menu.bits() as usize].is_none() {
            return Err(Error::MissingMenu(ground.menu_label(menu)));
        }
    }
    // singleton entries were validated above and are dropped here
    let choice = ChoiceFunction::from_fn(ground.n(), |m: Menu| {
        picks[m.bits() as usize].expect("checked above")
    })?;
    Ok((ground, choice))
}

pub(crate) fn choice_value(ground: &GroundSet, c: &ChoiceFunction) -> Value {
    let mut entries = Map::new();
    for &menu in all_menus(c.n()) {
        entries.insert(
            ground.menu_label(menu),
            Value::String(ground.item_label(c.pick(menu))),
        );
    }
    let mut doc = Map::new();
    doc.insert("n".into(), Value::from(c.n()));
    doc.insert(
        "items".into(),
        Value::Array(
            ground
                .labels()
                .iter()
                .map(|l| Value::String(l.to_string()))
                .collect(),
        ),
    );
    doc.insert("c".into(), Value::Object(entries));
    Value::Object(doc)
}

/// Serializes a choice to the single-line JSON document form, menus in
/// canonical order.
pub fn serialize_choice(ground: &GroundSet, c: &ChoiceFunction) -> String {
    assert_eq!(ground.n(), c.n(), "ground set and choice disagree on n");
    choice_value(ground, c).to_string()
}
