use std::sync::OnceLock;

use super::choice::ChoiceFunction;
use super::ground::{GroundSet, Menu, MAX_ITEMS};
use crate::error::{Error, Result};

/// A relabeling of items: item `i` becomes `sigma[i]`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Permutation {
    sigma: Vec<usize>,
}

impl Permutation {
    pub fn new(sigma: Vec<usize>) -> Result<Self> {
        let n = sigma.len();
        let mut seen = vec![false; n];
        for &s in &sigma {
            if s >= n || seen[s] {
                return Err(Error::InvalidPermutation(format!(
                    "{sigma:?} is not a bijection"
                )));
            }
            seen[s] = true;
        }
        Ok(Self { sigma })
    }

    pub fn identity(n: usize) -> Self {
        Self {
            sigma: (0..n).collect(),
        }
    }

    /// Builds a permutation from label pairs `(from, to)`; unmentioned items
    /// stay fixed.
    pub fn from_labels(ground: &GroundSet, pairs: &[(char, char)]) -> Result<Self> {
        let mut sigma: Vec<usize> = (0..ground.n()).collect();
        for &(from, to) in pairs {
            let f = ground
                .index_of(from)
                .ok_or_else(|| Error::UnknownLabel(from.into()))?;
            let t = ground
                .index_of(to)
                .ok_or_else(|| Error::UnknownLabel(to.into()))?;
            sigma[f] = t;
        }
        Self::new(sigma)
    }

    pub fn n(&self) -> usize {
        self.sigma.len()
    }

    pub fn as_slice(&self) -> &[usize] {
        &self.sigma
    }

    #[inline]
    pub fn apply(&self, item: usize) -> usize {
        self.sigma[item]
    }

    pub fn apply_menu(&self, menu: Menu) -> Menu {
        Menu::from_items(menu.items().map(|i| self.sigma[i]))
    }

    pub fn inverse(&self) -> Self {
        let mut inv = vec![0; self.n()];
        for (i, &s) in self.sigma.iter().enumerate() {
            inv[s] = i;
        }
        Self { sigma: inv }
    }

    /// `self` after `first`.
    pub fn compose(&self, first: &Permutation) -> Self {
        Self {
            sigma: first.sigma.iter().map(|&i| self.sigma[i]).collect(),
        }
    }

    pub fn is_identity(&self) -> bool {
        self.sigma.iter().enumerate().all(|(i, &s)| i == s)
    }

    /// Renders as `a->a b->d d->e e->b`.
    pub fn describe(&self, ground: &GroundSet) -> String {
        self.sigma
            .iter()
            .enumerate()
            .map(|(i, &s)| format!("{}->{}", ground.label(i), ground.label(s)))
            .collect::<Vec<_>>()
            .join(" ")
    }
}

/// All `n!` permutations in lexicographic order of their one-line notation.
pub fn all_permutations(n: usize) -> &'static [Permutation] {
    static TABLE: OnceLock<Vec<Vec<Permutation>>> = OnceLock::new();
    assert!(n <= MAX_ITEMS, "ground set size {n} out of range");
    &TABLE.get_or_init(|| (0..=MAX_ITEMS).map(build_permutations).collect())[n]
}

fn build_permutations(n: usize) -> Vec<Permutation> {
    fn rec(prefix: &mut Vec<usize>, used: &mut [bool], out: &mut Vec<Permutation>) {
        if prefix.len() == used.len() {
            out.push(Permutation {
                sigma: prefix.clone(),
            });
            return;
        }
        for i in 0..used.len() {
            if !used[i] {
                used[i] = true;
                prefix.push(i);
                rec(prefix, used, out);
                prefix.pop();
                used[i] = false;
            }
        }
    }
    let mut out = Vec::new();
    rec(&mut Vec::new(), &mut vec![false; n], &mut out);
    out
}

/// The relabeled choice `c'` with `c'(σ(A)) = σ(c(A))` for every menu `A`.
pub fn apply_permutation(c: &ChoiceFunction, s: &Permutation) -> ChoiceFunction {
    assert_eq!(c.n(), s.n(), "permutation size does not match the choice");
    let inv = s.inverse();
    ChoiceFunction::from_fn(c.n(), |target| s.apply(c.pick(inv.apply_menu(target))))
        .expect("relabeling preserves membership")
}
