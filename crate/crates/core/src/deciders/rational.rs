use super::{Counterexample, Model, ModelVerdict, Witness};
use crate::model::{all_menus, ChoiceFunction, Menu};
use crate::relations::{all_linear_orders, LinearOrder};

/// Rationalizable: one linear order whose maximum is chosen from every menu.
pub fn check_rationalizable(c: &ChoiceFunction) -> ModelVerdict {
    let menus = all_menus(c.n());
    let order = all_linear_orders(c.n())
        .iter()
        .find(|o| menus.iter().all(|&m| c.pick(m) == o.max_of(m)));
    ModelVerdict::from_witness(Model::Rationalizable, order.cloned().map(Witness::Order))
}

/// Always Chosen: an item beating every other member pairwise is chosen.
pub fn check_ac(c: &ChoiceFunction) -> ModelVerdict {
    let violation = all_menus(c.n()).iter().find_map(|&menu| {
        menu.items()
            .find(|&x| menu.without(x).items().all(|y| c.binary(x, y) == x))
            .filter(|&x| c.pick(menu) != x)
            .map(|item| Counterexample::AlwaysChosen { menu, item })
    });
    ModelVerdict::from_violation(Model::Ac, violation)
}

/// Whether `list` list-rationalizes `c`: for every menu of size at least
/// three, `c(A) = c({c(A \ x), x})` where `x` is the list-minimal member.
fn lists_rationally(c: &ChoiceFunction, list: &LinearOrder) -> bool {
    all_menus(c.n())
        .iter()
        .filter(|m| m.len() >= 3)
        .all(|&menu| {
            let last = list.min_of(menu);
            let rest = c.pick(menu.without(last));
            c.pick(menu) == c.pick(Menu::pair(rest, last))
        })
}

/// Every order that list-rationalizes `c`, in enumeration order.
pub fn lr_orders(c: &ChoiceFunction) -> Vec<LinearOrder> {
    all_linear_orders(c.n())
        .iter()
        .filter(|o| lists_rationally(c, o))
        .cloned()
        .collect()
}

/// List rationality, decided over all linear orders.
pub fn check_lr(c: &ChoiceFunction) -> ModelVerdict {
    let order = all_linear_orders(c.n())
        .iter()
        .find(|o| lists_rationally(c, o));
    ModelVerdict::from_witness(Model::Lr, order.cloned().map(Witness::Order))
}
