//! Binary relations over at most four items, linear orders, and rationale
//! schedules (ordered lists of relations applied one after another).

mod order;
mod relation;
mod schedule;

pub use order::{all_linear_orders, LinearOrder};
pub use relation::{Relation, RelationProperties};
pub use schedule::{
    ordered_partition_assignments, ordered_partitions, sequential_apply, sequential_trace,
    RationaleSchedule,
};
