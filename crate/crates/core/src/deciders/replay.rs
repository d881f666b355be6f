//! Witness replay.
//!
//! Each routine rebuilds the choice a witness implies, menu by menu, and
//! compares it with the original. Nothing here calls back into the search
//! code that produced the witness.

use super::status_quo::{sqb_predict, SqbVariant};
use super::{ModelVerdict, Witness, WsPartitionWitness};
use crate::model::{all_menus, ChoiceFunction, Menu};
use crate::relations::{LinearOrder, RationaleSchedule};

/// `c(A) = max(A)` for every menu.
pub fn replay_max(c: &ChoiceFunction, order: &LinearOrder) -> bool {
    all_menus(c.n()).iter().all(|&m| {
        let best = m
            .items()
            .min_by_key(|&x| order.rank(x))
            .expect("menus are nonempty");
        best == c.pick(m)
    })
}

/// Builds the list-rational choice bottom-up from the binary choices and
/// compares it with `c` on every larger menu.
pub fn replay_list(c: &ChoiceFunction, list: &LinearOrder) -> bool {
    let mut predicted = [usize::MAX; 16];
    for x in 0..c.n() {
        predicted[1 << x] = x;
    }
    let mut menus = all_menus(c.n()).to_vec();
    menus.sort_by_key(|m| m.len());
    for m in menus {
        let value = if m.len() == 2 {
            c.pick(m)
        } else {
            let last = m
                .items()
                .max_by_key(|&x| list.rank(x))
                .expect("menus are nonempty");
            let rest = predicted[m.without(last).bits() as usize];
            c.pick(Menu::pair(rest, last))
        };
        if value != c.pick(m) {
            return false;
        }
        predicted[m.bits() as usize] = value;
    }
    true
}

/// Applies the rationales in turn, keeping the undominated items, and
/// requires a single survivor equal to `c(A)`.
pub fn replay_schedule(c: &ChoiceFunction, schedule: &RationaleSchedule) -> bool {
    all_menus(c.n()).iter().all(|&m| {
        let mut alive: Vec<usize> = m.items().collect();
        for r in schedule.blocks() {
            let keep: Vec<usize> = alive
                .iter()
                .copied()
                .filter(|&y| !alive.iter().any(|&x| r.contains(x, y)))
                .collect();
            alive = keep;
        }
        alive == [c.pick(m)]
    })
}

pub fn replay_ws(c: &ChoiceFunction, witness: &WsPartitionWitness) -> bool {
    let menus = all_menus(c.n());
    menus.len() == witness.parts.len()
        && witness.parts.iter().all(|&(a, b, d)| {
            menus.contains(&a)
                && !b.is_empty()
                && !d.is_empty()
                && b.is_disjoint(d)
                && b.union(d) == a
                && b.nonempty_subsets().all(|s| {
                    d.nonempty_subsets().all(|t| {
                        let pair = Menu::pair(c.pick(s), c.pick(t));
                        c.pick(s.union(t)) == c.pick(pair)
                    })
                })
        })
}

/// Checks that each listed item satisfies the limited-attention condition
/// for its menu.
pub fn replay_attention(c: &ChoiceFunction, chosen: &[(Menu, usize)]) -> bool {
    let menus = all_menus(c.n());
    chosen.len() == menus.len()
        && chosen.iter().all(|&(a, x)| {
            a.contains(x)
                && menus.iter().filter(|b| b.contains(x)).all(|&b| {
                    let pick = c.pick(b);
                    !a.contains(pick) || pick == c.pick(b.without(x)) || pick == x
                })
        })
}

/// An attention order: no switch brings in an item ranked above the one
/// removed.
pub fn replay_attention_order(c: &ChoiceFunction, order: &LinearOrder) -> bool {
    all_menus(c.n()).iter().filter(|b| b.len() >= 3).all(|&b| {
        let after = c.pick(b);
        b.items().all(|y| {
            let before = c.pick(b.without(y));
            before == after || after == y || order.rank(after) > order.rank(y)
        })
    })
}

/// Replays whatever witness the verdict carries. Verdicts without a
/// witness replay trivially.
pub fn replay(c: &ChoiceFunction, verdict: &ModelVerdict) -> bool {
    use super::Model;
    let Some(witness) = &verdict.witness else {
        return true;
    };
    match (verdict.model, witness) {
        (Model::Rationalizable, Witness::Order(o)) => replay_max(c, o),
        (Model::Lr, Witness::Order(o)) => replay_list(c, o),
        (Model::Cla, Witness::Order(o)) => replay_attention_order(c, o),
        (Model::Cla, Witness::Attention(chosen)) => replay_attention(c, chosen),
        (Model::Rsm, Witness::Schedule(s)) => s.len() <= 2 && replay_schedule(c, s),
        (Model::Sr, Witness::Schedule(s)) => replay_schedule(c, s),
        (Model::Cls, Witness::Schedule(s)) => {
            s.blocks().iter().all(|b| b.is_acyclic()) && replay_schedule(c, s)
        }
        (Model::Ws | Model::Rgt, Witness::Partitions(p)) => replay_ws(c, p),
        (Model::Esqb | Model::Wsqb | Model::Sqb, Witness::StatusQuo(w)) => {
            let ok = |t: &super::SqbTriple, v| {
                t.q.is_subset(t.order.upper_contour(t.status_quo))
                    && all_menus(c.n())
                        .iter()
                        .all(|&m| sqb_predict(t, v, m) == c.pick(m))
            };
            let e = w.esqb.as_ref().is_none_or(|t| ok(t, SqbVariant::Extreme));
            let wk = w.wsqb.as_ref().is_none_or(|t| ok(t, SqbVariant::Weak));
            (w.esqb.is_some() || w.wsqb.is_some()) && e && wk
        }
        _ => false,
    }
}
