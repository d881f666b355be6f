use std::sync::OnceLock;

use super::relation::Relation;
use crate::error::{Error, Result};
use crate::model::{all_permutations, GroundSet, Menu, MAX_ITEMS};

/// A strict linear order given by its ranking, best item first.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct LinearOrder {
    ranking: Vec<usize>,
}

impl LinearOrder {
    pub fn new(ranking: Vec<usize>) -> Result<Self> {
        let n = ranking.len();
        let mut seen = vec![false; n];
        for &i in &ranking {
            if i >= n || seen[i] {
                return Err(Error::Malformed(format!("{ranking:?} is not a ranking")));
            }
            seen[i] = true;
        }
        Ok(Self { ranking })
    }

    /// Parses `"abde"` (best first).
    pub fn from_labels(ground: &GroundSet, text: &str) -> Result<Self> {
        let ranking = text
            .chars()
            .map(|ch| {
                ground
                    .index_of(ch)
                    .ok_or_else(|| Error::UnknownLabel(ch.to_string()))
            })
            .collect::<Result<Vec<_>>>()?;
        if ranking.len() != ground.n() {
            return Err(Error::Malformed(format!(
                "`{text}` does not rank every item"
            )));
        }
        Self::new(ranking)
    }

    pub fn n(&self) -> usize {
        self.ranking.len()
    }

    pub fn ranking(&self) -> &[usize] {
        &self.ranking
    }

    /// Position of `item`, 0 being the top.
    pub fn rank(&self, item: usize) -> usize {
        self.ranking
            .iter()
            .position(|&i| i == item)
            .expect("item in range")
    }

    /// Whether `x` is ranked above `y`.
    pub fn prefers(&self, x: usize, y: usize) -> bool {
        self.rank(x) < self.rank(y)
    }

    /// Best item of a nonempty menu.
    pub fn max_of(&self, menu: Menu) -> usize {
        *self
            .ranking
            .iter()
            .find(|&&i| menu.contains(i))
            .expect("nonempty menu")
    }

    /// Worst item of a nonempty menu.
    pub fn min_of(&self, menu: Menu) -> usize {
        *self
            .ranking
            .iter()
            .rev()
            .find(|&&i| menu.contains(i))
            .expect("nonempty menu")
    }

    /// Items ranked strictly above `item`.
    pub fn upper_contour(&self, item: usize) -> Menu {
        Menu::from_items(self.ranking[..self.rank(item)].iter().copied())
    }

    /// The complete transitive relation `x -> y` iff `x` is ranked above `y`.
    pub fn to_relation(&self) -> Relation {
        let n = self.n();
        let mut r = Relation::empty(n);
        for i in 0..n {
            for j in i + 1..n {
                r.insert(self.ranking[i], self.ranking[j]);
            }
        }
        r
    }

    pub fn describe(&self, ground: &GroundSet) -> String {
        self.ranking.iter().map(|&i| ground.label(i)).collect()
    }
}

/// All `n!` linear orders, rankings in lexicographic order.
pub fn all_linear_orders(n: usize) -> &'static [LinearOrder] {
    static TABLE: OnceLock<Vec<Vec<LinearOrder>>> = OnceLock::new();
    assert!(n <= MAX_ITEMS, "ground set size {n} out of range");
    &TABLE.get_or_init(|| {
        (0..=MAX_ITEMS)
            .map(|k| {
                all_permutations(k)
                    .iter()
                    .map(|p| LinearOrder {
                        ranking: p.as_slice().to_vec(),
                    })
                    .collect()
            })
            .collect()
    })[n]
}
