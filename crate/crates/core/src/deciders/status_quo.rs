use super::{Model, ModelVerdict, Witness};
use crate::error::{Error, Result};
use crate::model::{all_menus, ChoiceFunction, Menu};
use crate::relations::{all_linear_orders, LinearOrder};

/// A status-quo triple: an order, the status quo `z`, and the items `Q`
/// ranked above `z` that can displace it.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SqbTriple {
    pub order: LinearOrder,
    pub status_quo: usize,
    pub q: Menu,
}

impl SqbTriple {
    /// # Errors
    /// [`Error::Malformed`] when `q` reaches outside the strict upper
    /// contour of `status_quo`.
    pub fn new(order: LinearOrder, status_quo: usize, q: Menu) -> Result<Self> {
        if status_quo >= order.n() || !q.is_subset(order.upper_contour(status_quo)) {
            return Err(Error::Malformed(
                "Q must lie strictly above the status quo".into(),
            ));
        }
        Ok(Self {
            order,
            status_quo,
            q,
        })
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SqbVariant {
    /// A displaced status quo yields the best displacing item.
    Extreme,
    /// A displaced status quo yields the best item other than the status quo.
    Weak,
}

/// The first triple found for each variant.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct SqbWitness {
    pub esqb: Option<SqbTriple>,
    pub wsqb: Option<SqbTriple>,
}

/// What the status-quo procedure picks from `menu`.
pub fn sqb_predict(triple: &SqbTriple, variant: SqbVariant, menu: Menu) -> usize {
    let z = triple.status_quo;
    if !menu.contains(z) {
        return triple.order.max_of(menu);
    }
    let threats = triple.q.intersection(menu);
    if threats.is_empty() {
        return z;
    }
    match variant {
        SqbVariant::Extreme => triple.order.max_of(threats),
        SqbVariant::Weak => triple.order.max_of(menu.without(z)),
    }
}

fn find_triple(c: &ChoiceFunction, variant: SqbVariant) -> Option<SqbTriple> {
    let n = c.n();
    let menus = all_menus(n);
    for order in all_linear_orders(n) {
        for z in 0..n {
            let upper = order.upper_contour(z);
            let candidates = std::iter::once(Menu::EMPTY).chain(upper.nonempty_subsets());
            for q in candidates {
                let triple = SqbTriple {
                    order: order.clone(),
                    status_quo: z,
                    q,
                };
                if menus
                    .iter()
                    .all(|&m| sqb_predict(&triple, variant, m) == c.pick(m))
                {
                    return Some(triple);
                }
            }
        }
    }
    None
}

/// Extreme status quo bias.
pub fn check_esqb(c: &ChoiceFunction) -> ModelVerdict {
    let witness = find_triple(c, SqbVariant::Extreme).map(|t| {
        Witness::StatusQuo(SqbWitness {
            esqb: Some(t),
            wsqb: None,
        })
    });
    ModelVerdict::from_witness(Model::Esqb, witness)
}

/// Weak status quo bias.
pub fn check_wsqb(c: &ChoiceFunction) -> ModelVerdict {
    let witness = find_triple(c, SqbVariant::Weak).map(|t| {
        Witness::StatusQuo(SqbWitness {
            esqb: None,
            wsqb: Some(t),
        })
    });
    ModelVerdict::from_witness(Model::Wsqb, witness)
}

/// Status quo bias: either variant. The witness reports both searches.
pub fn check_sqb(c: &ChoiceFunction) -> ModelVerdict {
    let found = SqbWitness {
        esqb: find_triple(c, SqbVariant::Extreme),
        wsqb: find_triple(c, SqbVariant::Weak),
    };
    let witness =
        (found.esqb.is_some() || found.wsqb.is_some()).then_some(Witness::StatusQuo(found));
    ModelVerdict::from_witness(Model::Sqb, witness)
}
