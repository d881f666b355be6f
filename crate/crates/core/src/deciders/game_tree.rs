use super::{Counterexample, Model, ModelVerdict, Witness, WsPartitionWitness};
use crate::model::{all_menus, ChoiceFunction, Menu};

/// The weak separability equation on one split of a menu:
/// `c(S ∪ T) = c({c(S), c(T)})` for all nonempty `S ⊆ b`, `T ⊆ d`.
pub fn ws_partition_holds(c: &ChoiceFunction, b: Menu, d: Menu) -> bool {
    b.nonempty_subsets().all(|s| {
        let cs = c.pick(s);
        d.nonempty_subsets()
            .all(|t| c.pick(s.union(t)) == c.binary(cs, c.pick(t)))
    })
}

/// The first valid split of `menu`: `B` holds the lowest item and runs
/// through its candidates by ascending mask.
fn first_split(c: &ChoiceFunction, menu: Menu) -> Option<(Menu, Menu)> {
    let low = menu.first()?;
    menu.nonempty_subsets()
        .filter(|b| b.contains(low) && *b != menu)
        .map(|b| (b, menu.difference(b)))
        .find(|&(b, d)| ws_partition_holds(c, b, d))
}

/// Weak separability; the witness lists one split per menu.
pub fn check_ws(c: &ChoiceFunction) -> ModelVerdict {
    let mut parts = Vec::new();
    for &menu in all_menus(c.n()) {
        match first_split(c, menu) {
            Some((b, d)) => parts.push((menu, b, d)),
            None => {
                return ModelVerdict::from_violation(
                    Model::Ws,
                    Some(Counterexample::Separability { menu }),
                )
            }
        }
    }
    ModelVerdict::from_witness(
        Model::Ws,
        Some(Witness::Partitions(WsPartitionWitness { parts })),
    )
}

/// `x ∘ {y, z}`: the three items form a binary cycle and `x` is chosen from
/// the triple. Either direction of the cycle qualifies.
pub fn divergence_cycle(c: &ChoiceFunction, x: usize, y: usize, z: usize) -> bool {
    if x == y || y == z || x == z {
        return false;
    }
    let triple = Menu::from_items([x, y, z]);
    if c.pick(triple) != x {
        return false;
    }
    let (xy, yz, xz) = (c.binary(x, y), c.binary(y, z), c.binary(x, z));
    (xy == x && yz == y && xz == z) || (xy == y && yz == z && xz == x)
}

/// Whether the tuple breaks divergence consistency. Tuples that would refer
/// to a malformed menu never count.
pub fn dc_violated_by(c: &ChoiceFunction, x1: usize, x2: usize, y1: usize, y2: usize) -> bool {
    x2 != y2
        && divergence_cycle(c, x1, y1, y2)
        && divergence_cycle(c, y1, x1, x2)
        && ((c.binary(x1, y1) == x1) != (c.binary(x2, y2) == y2))
}

/// Divergence consistency, scanning `(x1, x2, y1, y2)` lexicographically.
pub fn check_dc(c: &ChoiceFunction) -> ModelVerdict {
    let n = c.n();
    let mut violation = None;
    'scan: for x1 in 0..n {
        for x2 in 0..n {
            for y1 in 0..n {
                for y2 in 0..n {
                    if dc_violated_by(c, x1, x2, y1, y2) {
                        violation = Some(Counterexample::Divergence { x1, x2, y1, y2 });
                        break 'scan;
                    }
                }
            }
        }
    }
    ModelVerdict::from_violation(Model::Dc, violation)
}

/// Rationalizable by game trees: weak separability and divergence consistency.
pub fn check_rgt(c: &ChoiceFunction) -> ModelVerdict {
    let ws = check_ws(c);
    let dc = check_dc(c);
    let holds = ws.holds && dc.holds;
    ModelVerdict {
        model: Model::Rgt,
        holds,
        witness: if holds { ws.witness.clone() } else { None },
        counterexample: ws.counterexample.or(dc.counterexample),
        parts: vec![ws, dc],
    }
}
