use serde_json::{json, Map, Value};

use super::{Counterexample, ModelVerdict, SqbTriple, Witness};
use crate::model::GroundSet;

fn triple_json(g: &GroundSet, t: &SqbTriple) -> Value {
    json!({
        "order": t.order.describe(g),
        "status_quo": g.item_label(t.status_quo),
        "q": g.menu_label(t.q),
    })
}

fn witness_json(g: &GroundSet, w: &Witness) -> Value {
    match w {
        Witness::Order(o) => json!({ "order": o.describe(g) }),
        Witness::Schedule(s) => {
            let blocks: Vec<Value> = s
                .blocks()
                .iter()
                .map(|b| {
                    b.edges()
                        .map(|(x, y)| json!([g.item_label(x), g.item_label(y)]))
                        .collect()
                })
                .collect();
            json!({ "blocks": blocks })
        }
        Witness::StatusQuo(sq) => json!({
            "esqb": sq.esqb.as_ref().map(|t| triple_json(g, t)),
            "wsqb": sq.wsqb.as_ref().map(|t| triple_json(g, t)),
        }),
        Witness::Partitions(p) => {
            let mut parts = Map::new();
            for &(menu, b, d) in &p.parts {
                parts.insert(
                    g.menu_label(menu),
                    json!([g.menu_label(b), g.menu_label(d)]),
                );
            }
            json!({ "partitions": parts })
        }
        Witness::Attention(chosen) => {
            let mut items = Map::new();
            for &(menu, x) in chosen {
                items.insert(g.menu_label(menu), Value::String(g.item_label(x)));
            }
            json!({ "attention": items })
        }
    }
}

fn counterexample_json(g: &GroundSet, c: &Counterexample) -> Value {
    let item = |x: usize| g.item_label(x);
    let menu = |m| g.menu_label(m);
    match *c {
        Counterexample::AlwaysChosen { menu: m, item: x } => {
            json!({ "kind": "always_chosen", "menu": menu(m), "item": item(x) })
        }
        Counterexample::Wwarp {
            x,
            y,
            smaller,
            larger,
        } => json!({
            "kind": "wwarp",
            "x": item(x),
            "y": item(y),
            "smaller": menu(smaller),
            "larger": menu(larger),
        }),
        Counterexample::Gamma { first, second } => {
            json!({ "kind": "gamma", "first": menu(first), "second": menu(second) })
        }
        Counterexample::Exclusion {
            menu: m,
            added,
            other,
        } => json!({
            "kind": "exclusion",
            "menu": menu(m),
            "added": item(added),
            "other": menu(other),
        }),
        Counterexample::Divergence { x1, x2, y1, y2 } => json!({
            "kind": "divergence",
            "x1": item(x1),
            "x2": item(x2),
            "y1": item(y1),
            "y2": item(y2),
        }),
        Counterexample::Separability { menu: m } => {
            json!({ "kind": "separability", "menu": menu(m) })
        }
        Counterexample::Attention { menu: m } => json!({ "kind": "attention", "menu": menu(m) }),
    }
}

/// `{"model", "holds", "witness", "counterexample"}`, plus `parts` for
/// conjunctions.
pub fn verdict_json(g: &GroundSet, v: &ModelVerdict) -> Value {
    let mut out = Map::new();
    out.insert("model".into(), Value::String(v.model.name().into()));
    out.insert("holds".into(), Value::Bool(v.holds));
    out.insert(
        "witness".into(),
        v.witness
            .as_ref()
            .map_or(Value::Null, |w| witness_json(g, w)),
    );
    out.insert(
        "counterexample".into(),
        v.counterexample
            .as_ref()
            .map_or(Value::Null, |c| counterexample_json(g, c)),
    );
    if !v.parts.is_empty() {
        out.insert(
            "parts".into(),
            v.parts.iter().map(|p| verdict_json(g, p)).collect(),
        );
    }
    Value::Object(out)
}

/// A JSON array of verdicts, in the given order.
pub fn verdicts_json(g: &GroundSet, verdicts: &[ModelVerdict]) -> Value {
    verdicts.iter().map(|v| verdict_json(g, v)).collect()
}
