//! Decision procedures, one per model.
//!
//! Every decider returns a [`ModelVerdict`]. Models defined by an existence
//! claim (an order, a list of rationales, a status-quo triple, ...) carry the
//! first witness found in a fixed scan order; models defined by an axiom
//! carry the first violation in scan order. [`replay`] re-checks witnesses
//! against the choice independently of the search that produced them.

mod attention;
mod game_tree;
mod json;
mod rational;
pub mod replay;
mod sequential;
mod status_quo;
mod warp;

use std::fmt;
use std::str::FromStr;

pub use attention::{check_cla, list_switches, ClaMode, Switch};
pub use game_tree::{
    check_dc, check_rgt, check_ws, dc_violated_by, divergence_cycle, ws_partition_holds,
};
pub use json::{verdict_json, verdicts_json};
pub use rational::{check_ac, check_lr, check_rationalizable, lr_orders};
pub use sequential::{
    accepted_schedules, check_cls, check_sr, schedule_reproduces, tournament_edges,
};
pub use status_quo::{
    check_esqb, check_sqb, check_wsqb, sqb_predict, SqbTriple, SqbVariant, SqbWitness,
};
pub use warp::{check_ec, check_gamma, check_rsm, check_wwarp, RsmMode};

use crate::error::{Error, Result};
use crate::model::{ChoiceFunction, Menu};
use crate::relations::{LinearOrder, RationaleSchedule};

/// The fixed model vocabulary.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Model {
    Rationalizable,
    Ac,
    Wwarp,
    Gamma,
    Ec,
    Rsm,
    Sr,
    Cls,
    Lr,
    Ws,
    Dc,
    Rgt,
    Esqb,
    Wsqb,
    Sqb,
    Cla,
}

impl Model {
    /// Census column order.
    pub const ALL: [Model; 16] = [
        Model::Rationalizable,
        Model::Ac,
        Model::Wwarp,
        Model::Gamma,
        Model::Ec,
        Model::Rsm,
        Model::Sr,
        Model::Cls,
        Model::Lr,
        Model::Ws,
        Model::Dc,
        Model::Rgt,
        Model::Esqb,
        Model::Wsqb,
        Model::Sqb,
        Model::Cla,
    ];

    /// The eight headline models, in the order of the published count table.
    pub const HEADLINE: [Model; 8] = [
        Model::Sqb,
        Model::Lr,
        Model::Rgt,
        Model::Rsm,
        Model::Sr,
        Model::Cls,
        Model::Wwarp,
        Model::Cla,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Model::Rationalizable => "rationalizable",
            Model::Ac => "ac",
            Model::Wwarp => "wwarp",
            Model::Gamma => "gamma",
            Model::Ec => "ec",
            Model::Rsm => "rsm",
            Model::Sr => "sr",
            Model::Cls => "cls",
            Model::Lr => "lr",
            Model::Ws => "ws",
            Model::Dc => "dc",
            Model::Rgt => "rgt",
            Model::Esqb => "esqb",
            Model::Wsqb => "wsqb",
            Model::Sqb => "sqb",
            Model::Cla => "cla",
        }
    }

    pub fn title(self) -> String {
        match self {
            Model::Rationalizable => "Rationalizable".into(),
            Model::Gamma => "gamma".into(),
            other => other.name().to_uppercase(),
        }
    }
}

impl fmt::Display for Model {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Model {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let lower = s.trim().to_ascii_lowercase();
        let lower = match lower.as_str() {
            "γ" | "property-gamma" => "gamma",
            "warpla" | "warp(la)" => "cla",
            other => other,
        }
        .to_string();
        Model::ALL
            .into_iter()
            .find(|m| m.name() == lower)
            .ok_or_else(|| Error::Malformed(format!("unknown model `{s}`")))
    }
}

/// Parses a comma-separated model list; `all` selects every model.
pub fn parse_models(text: &str) -> Result<Vec<Model>> {
    let mut out = Vec::new();
    for part in text.split(',').map(str::trim).filter(|p| !p.is_empty()) {
        if part.eq_ignore_ascii_case("all") {
            out.extend(Model::ALL);
        } else if part.eq_ignore_ascii_case("headline") {
            out.extend(Model::HEADLINE);
        } else {
            out.push(part.parse()?);
        }
    }
    out.sort();
    out.dedup();
    if out.is_empty() {
        return Err(Error::Malformed("empty model list".into()));
    }
    Ok(out)
}

/// Proof that a model holds.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Witness {
    /// A rationalizing order, a list for list rationality, or an attention
    /// order for limited attention.
    Order(LinearOrder),
    /// Rationales applied in sequence.
    Schedule(RationaleSchedule),
    StatusQuo(SqbWitness),
    Partitions(WsPartitionWitness),
    /// For every menu, an item satisfying the limited-attention condition.
    Attention(Vec<(Menu, usize)>),
}

/// For every menu of size at least two, a split `{B, D}` satisfying the
/// weak separability equation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WsPartitionWitness {
    pub parts: Vec<(Menu, Menu, Menu)>,
}

/// A concrete violation of an axiom.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Counterexample {
    /// `item` beats every other member of `menu` pairwise yet is not chosen.
    AlwaysChosen { menu: Menu, item: usize },
    /// `c(xy) = c(larger) = x`, `x, y in smaller ⊆ larger`, `c(smaller) = y`.
    Wwarp {
        x: usize,
        y: usize,
        smaller: Menu,
        larger: Menu,
    },
    /// `c(first) = c(second)` but the union picks something else.
    Gamma { first: Menu, second: Menu },
    /// Adding `added` to `menu` moves the pick to a third item, yet `other`
    /// contains `added` and picks `c(menu)`.
    Exclusion {
        menu: Menu,
        added: usize,
        other: Menu,
    },
    Divergence {
        x1: usize,
        x2: usize,
        y1: usize,
        y2: usize,
    },
    /// No split of `menu` satisfies weak separability.
    Separability { menu: Menu },
    /// No item of `menu` satisfies the limited-attention condition.
    Attention { menu: Menu },
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ModelVerdict {
    pub model: Model,
    pub holds: bool,
    pub witness: Option<Witness>,
    pub counterexample: Option<Counterexample>,
    /// Component verdicts for conjunctions (RGT = WS and DC; RSM in axiom
    /// mode = WWARP and gamma).
    pub parts: Vec<ModelVerdict>,
}

impl ModelVerdict {
    pub(crate) fn from_witness(model: Model, witness: Option<Witness>) -> Self {
        Self {
            model,
            holds: witness.is_some(),
            witness,
            counterexample: None,
            parts: Vec::new(),
        }
    }

    pub(crate) fn from_violation(model: Model, violation: Option<Counterexample>) -> Self {
        Self {
            model,
            holds: violation.is_none(),
            witness: None,
            counterexample: violation,
            parts: Vec::new(),
        }
    }
}

/// Mode selection for the deciders that have several equivalent routes.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Modes {
    pub rsm: RsmMode,
    pub cla: ClaMode,
}

impl Default for Modes {
    fn default() -> Self {
        Self {
            rsm: RsmMode::Schedule,
            cla: ClaMode::Order,
        }
    }
}

impl Modes {
    /// Parses `rsm=axiom,cla=per-menu`; a bare `all` sets both to `all`.
    pub fn parse(text: &str) -> Result<Self> {
        let mut modes = Modes::default();
        for part in text.split(',').map(str::trim).filter(|p| !p.is_empty()) {
            match part.split_once('=') {
                Some((model, mode)) => match model.trim() {
                    "rsm" => modes.rsm = mode.parse()?,
                    "cla" => modes.cla = mode.parse()?,
                    other => return Err(Error::Malformed(format!("model `{other}` has no modes"))),
                },
                None if part == "all" => {
                    modes.rsm = RsmMode::All;
                    modes.cla = ClaMode::All;
                }
                None => return Err(Error::Malformed(format!("bad mode `{part}`"))),
            }
        }
        Ok(modes)
    }
}

/// Runs the decider for `model`.
pub fn check(c: &ChoiceFunction, model: Model, modes: &Modes) -> Result<ModelVerdict> {
    Ok(match model {
        Model::Rationalizable => check_rationalizable(c),
        Model::Ac => check_ac(c),
        Model::Wwarp => check_wwarp(c),
        Model::Gamma => check_gamma(c),
        Model::Ec => check_ec(c),
        Model::Rsm => check_rsm(c, modes.rsm)?,
        Model::Sr => check_sr(c),
        Model::Cls => check_cls(c),
        Model::Lr => check_lr(c),
        Model::Ws => check_ws(c),
        Model::Dc => check_dc(c),
        Model::Rgt => check_rgt(c),
        Model::Esqb => check_esqb(c),
        Model::Wsqb => check_wsqb(c),
        Model::Sqb => check_sqb(c),
        Model::Cla => check_cla(c, modes.cla)?,
    })
}

/// Runs every decider in `models`, in the given order.
pub fn classify(c: &ChoiceFunction, models: &[Model], modes: &Modes) -> Result<Vec<ModelVerdict>> {
    models.iter().map(|&m| check(c, m, modes)).collect()
}
