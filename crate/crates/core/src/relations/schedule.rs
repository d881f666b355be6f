use std::sync::OnceLock;

use super::relation::Relation;
use crate::error::{Error, Result};
use crate::model::{GroundSet, Menu};

/// Applies rationales one after another: `M_0 = A`, `M_i = max(M_{i-1}, R_i)`.
#[inline]
pub fn sequential_apply(menu: Menu, rationales: &[Relation]) -> Menu {
    rationales.iter().fold(menu, |m, r| r.max_set(m))
}

/// The sets `M_0, M_1, ..., M_k` visited by [`sequential_apply`].
pub fn sequential_trace(menu: Menu, rationales: &[Relation]) -> Vec<Menu> {
    let mut trace = Vec::with_capacity(rationales.len() + 1);
    trace.push(menu);
    let mut current = menu;
    for r in rationales {
        current = r.max_set(current);
        trace.push(current);
    }
    trace
}

/// An ordered partition of a set of edges into elimination stages.
///
/// Blocks are nonempty and pairwise disjoint, so every edge has exactly one
/// stage.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct RationaleSchedule {
    blocks: Vec<Relation>,
}

impl RationaleSchedule {
    pub fn new(blocks: Vec<Relation>) -> Result<Self> {
        for (i, b) in blocks.iter().enumerate() {
            if b.is_empty() {
                return Err(Error::InvalidSchedule(format!("block {i} is empty")));
            }
            if let Some(j) = blocks[..i].iter().position(|prev| !prev.is_disjoint(b)) {
                return Err(Error::InvalidSchedule(format!(
                    "blocks {j} and {i} share an edge"
                )));
            }
            if b.n() != blocks[0].n() {
                return Err(Error::InvalidSchedule(
                    "blocks over different ground sets".into(),
                ));
            }
        }
        Ok(Self { blocks })
    }

    /// Splits `edges` into blocks according to `assignment[i]`, the block
    /// of edge `i`. The assignment must be onto `0..k`.
    pub fn from_assignment(n: usize, edges: &[(usize, usize)], assignment: &[u8]) -> Result<Self> {
        if edges.len() != assignment.len() {
            return Err(Error::InvalidSchedule("assignment length mismatch".into()));
        }
        let k = assignment
            .iter()
            .map(|&b| b as usize + 1)
            .max()
            .unwrap_or(0);
        let mut blocks = vec![Relation::empty(n); k];
        for (&(x, y), &b) in edges.iter().zip(assignment) {
            blocks[b as usize].insert(x, y);
        }
        Self::new(blocks)
    }

    pub fn blocks(&self) -> &[Relation] {
        &self.blocks
    }

    pub fn len(&self) -> usize {
        self.blocks.len()
    }

    pub fn is_empty(&self) -> bool {
        self.blocks.is_empty()
    }

    /// Block index of the edge `x -> y`.
    pub fn stage(&self, x: usize, y: usize) -> Option<usize> {
        self.blocks.iter().position(|b| b.contains(x, y))
    }

    pub fn union(&self) -> Option<Relation> {
        let first = *self.blocks.first()?;
        Some(self.blocks[1..].iter().fold(first, |acc, b| acc.union(b)))
    }

    pub fn apply(&self, menu: Menu) -> Menu {
        sequential_apply(menu, &self.blocks)
    }

    pub fn trace(&self, menu: Menu) -> Vec<Menu> {
        sequential_trace(menu, &self.blocks)
    }

    pub fn describe(&self, ground: &GroundSet) -> String {
        self.blocks
            .iter()
            .enumerate()
            .map(|(i, b)| format!("R{}: {}", i + 1, b.describe(ground)))
            .collect::<Vec<_>>()
            .join("; ")
    }
}

/// Block assignments of every ordered partition of `m` labeled elements,
/// ascending by block count and then lexicographically.
///
/// Assignments for up to six elements (a four-item tournament) are cached.
pub fn ordered_partition_assignments(m: usize) -> std::borrow::Cow<'static, [Vec<u8>]> {
    const CACHED: usize = 6;
    static TABLE: OnceLock<Vec<Vec<Vec<u8>>>> = OnceLock::new();
    if m <= CACHED {
        let table = TABLE.get_or_init(|| (0..=CACHED).map(build_assignments).collect());
        std::borrow::Cow::Borrowed(&table[m])
    } else {
        std::borrow::Cow::Owned(build_assignments(m))
    }
}

fn build_assignments(m: usize) -> Vec<Vec<u8>> {
    let mut out = Vec::new();
    if m == 0 {
        return out;
    }
    for k in 1..=m {
        let mut digits = vec![0u8; m];
        loop {
            let mut used = 0u32;
            for &d in &digits {
                used |= 1 << d;
            }
            if used.count_ones() as usize == k {
                out.push(digits.clone());
            }
            let mut wrapped = true;
            for pos in (0..m).rev() {
                digits[pos] += 1;
                if (digits[pos] as usize) < k {
                    wrapped = false;
                    break;
                }
                digits[pos] = 0;
            }
            if wrapped {
                break;
            }
        }
    }
    out
}

/// Every ordered partition of `edges` into nonempty blocks, in the order of
/// [`ordered_partition_assignments`].
pub fn ordered_partitions(
    n: usize,
    edges: &[(usize, usize)],
) -> impl Iterator<Item = RationaleSchedule> + '_ {
    let assignments = ordered_partition_assignments(edges.len());
    (0..assignments.len()).map(move |i| {
        RationaleSchedule::from_assignment(n, edges, &assignments[i])
            .expect("assignments are onto their block range")
    })
}
