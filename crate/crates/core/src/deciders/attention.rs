use std::str::FromStr;

use super::{Counterexample, Model, ModelVerdict, Witness};
use crate::error::{Error, Result};
use crate::model::{all_menus, ChoiceFunction, Menu};
use crate::relations::all_linear_orders;

/// A minimal switch `(B \ x, B)`: removing `removed` from `base_menu`
/// changes the pick, and the new pick is not the removed item.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Switch {
    pub base_menu: Menu,
    pub removed: usize,
    /// `c(B \ x)`.
    pub before: usize,
    /// `c(B)`.
    pub after: usize,
}

impl Switch {
    /// `(p, q, r) = (before, after, removed)`.
    pub fn triple(&self) -> (usize, usize, usize) {
        (self.before, self.after, self.removed)
    }
}

/// All switches, ordered by base menu and then by removed item.
pub fn list_switches(c: &ChoiceFunction) -> Vec<Switch> {
    all_menus(c.n())
        .iter()
        .filter(|m| m.len() >= 3)
        .flat_map(|&base_menu| {
            let after = c.pick(base_menu);
            base_menu.items().filter_map(move |removed| {
                let before = c.pick(base_menu.without(removed));
                (before != after && after != removed).then_some(Switch {
                    base_menu,
                    removed,
                    before,
                    after,
                })
            })
        })
        .collect()
}

/// Formulations of WARP with limited attention.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ClaMode {
    /// The defining condition, over every menu containing the candidate.
    Direct,
    /// Per menu, a candidate whose removal never causes a switch into the menu.
    PerMenu,
    /// A linear order under which no item switches in over a lower one.
    Order,
    /// All three; they must agree.
    All,
}

impl FromStr for ClaMode {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.trim() {
            "direct" => Ok(ClaMode::Direct),
            "per-menu" | "per_menu" => Ok(ClaMode::PerMenu),
            "order" => Ok(ClaMode::Order),
            "all" => Ok(ClaMode::All),
            other => Err(Error::Malformed(format!("unknown cla mode `{other}`"))),
        }
    }
}

fn per_menu_verdict(c: &ChoiceFunction, mut ok: impl FnMut(Menu, usize) -> bool) -> ModelVerdict {
    let mut chosen = Vec::new();
    for &menu in all_menus(c.n()) {
        match menu.items().find(|&x| ok(menu, x)) {
            Some(x) => chosen.push((menu, x)),
            None => {
                return ModelVerdict::from_violation(
                    Model::Cla,
                    Some(Counterexample::Attention { menu }),
                )
            }
        }
    }
    ModelVerdict::from_witness(Model::Cla, Some(Witness::Attention(chosen)))
}

fn cla_direct(c: &ChoiceFunction) -> ModelVerdict {
    let menus = all_menus(c.n());
    per_menu_verdict(c, |a, x| {
        menus.iter().filter(|b| b.contains(x)).all(|&b| {
            let pick = c.pick(b);
            !(a.contains(pick) && pick != c.pick(b.without(x))) || pick == x
        })
    })
}

fn cla_per_menu(c: &ChoiceFunction) -> ModelVerdict {
    let switches = list_switches(c);
    per_menu_verdict(c, |a, x| {
        !switches
            .iter()
            .any(|s| s.removed == x && a.contains(s.after))
    })
}

fn cla_order(c: &ChoiceFunction) -> ModelVerdict {
    let switches = list_switches(c);
    let order = all_linear_orders(c.n())
        .iter()
        .find(|o| !switches.iter().any(|s| o.prefers(s.after, s.removed)));
    ModelVerdict::from_witness(Model::Cla, order.cloned().map(Witness::Order))
}

/// Choice with limited attention.
///
/// # Errors
/// [`Error::ModeDisagreement`] when `mode` is [`ClaMode::All`] and the
/// formulations disagree, which can only mean a bug.
pub fn check_cla(c: &ChoiceFunction, mode: ClaMode) -> Result<ModelVerdict> {
    match mode {
        ClaMode::Direct => Ok(cla_direct(c)),
        ClaMode::PerMenu => Ok(cla_per_menu(c)),
        ClaMode::Order => Ok(cla_order(c)),
        ClaMode::All => {
            let direct = cla_direct(c);
            let per_menu = cla_per_menu(c);
            let order = cla_order(c);
            if direct.holds != order.holds || per_menu.holds != order.holds {
                return Err(Error::ModeDisagreement {
                    model: "cla".into(),
                    detail: format!(
                        "direct={} per-menu={} order={} on {c:?}",
                        direct.holds, per_menu.holds, order.holds
                    ),
                });
            }
            Ok(ModelVerdict {
                counterexample: direct.counterexample,
                ..order
            })
        }
    }
}
