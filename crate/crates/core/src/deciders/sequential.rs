use super::{Model, ModelVerdict, Witness};
use crate::model::{all_menus, base_tournament, ChoiceFunction};
use crate::relations::{
    ordered_partition_assignments, sequential_apply, RationaleSchedule, Relation,
};

/// Edges of the binary tournament, winner first, in the canonical edge order.
pub fn tournament_edges(c: &ChoiceFunction) -> Vec<(usize, usize)> {
    base_tournament(c).edges().collect()
}

/// Whether applying the schedule to every menu leaves exactly the chosen item.
pub fn schedule_reproduces(c: &ChoiceFunction, schedule: &RationaleSchedule) -> bool {
    reproduces(c, schedule.blocks())
}

fn reproduces(c: &ChoiceFunction, blocks: &[Relation]) -> bool {
    all_menus(c.n())
        .iter()
        .all(|&menu| sequential_apply(menu, blocks).only() == Some(c.pick(menu)))
}

/// Visits every ordered partition of the tournament (with at most
/// `max_blocks` blocks) that reproduces `c`, stopping when `visit` returns
/// `false`.
fn scan(
    c: &ChoiceFunction,
    max_blocks: usize,
    acyclic: bool,
    mut visit: impl FnMut(&[Relation]) -> bool,
) {
    let n = c.n();
    let edges = tournament_edges(c);
    let mut blocks = [Relation::empty(n); 6];
    for assignment in ordered_partition_assignments(edges.len()).iter() {
        let k = assignment
            .iter()
            .map(|&b| b as usize + 1)
            .max()
            .unwrap_or(0);
        if k > max_blocks {
            // assignments are sorted by block count
            break;
        }
        blocks[..k].fill(Relation::empty(n));
        for (&(x, y), &b) in edges.iter().zip(assignment) {
            blocks[b as usize].insert(x, y);
        }
        let live = &blocks[..k];
        if acyclic && !live.iter().all(Relation::is_acyclic) {
            continue;
        }
        if reproduces(c, live) && !visit(live) {
            return;
        }
    }
}

pub(crate) fn find_schedule(
    c: &ChoiceFunction,
    max_blocks: usize,
    acyclic: bool,
) -> Option<RationaleSchedule> {
    let mut found = None;
    scan(c, max_blocks, acyclic, |blocks| {
        found = Some(blocks.to_vec());
        false
    });
    found.map(|b| RationaleSchedule::new(b).expect("partition blocks are disjoint"))
}

/// Every reproducing ordered partition of the tournament, in stream order.
pub fn accepted_schedules(c: &ChoiceFunction, acyclic: bool) -> Vec<RationaleSchedule> {
    let mut out = Vec::new();
    scan(c, usize::MAX, acyclic, |blocks| {
        out.push(RationaleSchedule::new(blocks.to_vec()).expect("partition blocks are disjoint"));
        true
    });
    out
}

/// Sequential rationalizability; the witness has the fewest blocks possible.
pub fn check_sr(c: &ChoiceFunction) -> ModelVerdict {
    let witness = find_schedule(c, usize::MAX, false).map(Witness::Schedule);
    ModelVerdict::from_witness(Model::Sr, witness)
}

/// Sequential rationalizability by acyclic rationales.
pub fn check_cls(c: &ChoiceFunction) -> ModelVerdict {
    let witness = find_schedule(c, usize::MAX, true).map(Witness::Schedule);
    ModelVerdict::from_witness(Model::Cls, witness)
}
