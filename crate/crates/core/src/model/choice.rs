use std::fmt;

use super::ground::{all_menus, GroundSet, Menu, MAX_ITEMS};
use crate::error::{Error, Result};

/// A choice function on `n` items: every menu of size at least two is
/// mapped to one of its members.
///
/// Singletons are not part of the domain but [`pick`](Self::pick) answers
/// them anyway, returning the only item. Several axioms read `c` on
/// singletons and this keeps their code literal.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ChoiceFunction {
    n: u8,
    picks: [u8; 1 << MAX_ITEMS],
}

impl ChoiceFunction {
    /// Builds a choice from a pick for every menu of size at least two.
    pub fn from_fn(n: usize, mut pick: impl FnMut(Menu) -> usize) -> Result<Self> {
        if !(2..=MAX_ITEMS).contains(&n) {
            return Err(Error::UnsupportedSize(n));
        }
        let mut picks = [0u8; 1 << MAX_ITEMS];
        for i in 0..n {
            picks[1 << i] = i as u8;
        }
        for &menu in all_menus(n) {
            let item = pick(menu);
            if item >= n || !menu.contains(item) {
                return Err(Error::NonMemberChoice {
                    menu: format!("{menu:?}"),
                    item: item.to_string(),
                });
            }
            picks[menu.bits() as usize] = item as u8;
        }
        Ok(Self { n: n as u8, picks })
    }

    /// Builds a choice from picks listed in [`all_menus`] order.
    pub fn from_picks(n: usize, picks: &[usize]) -> Result<Self> {
        if !(2..=MAX_ITEMS).contains(&n) {
            return Err(Error::UnsupportedSize(n));
        }
        let menus = all_menus(n);
        if picks.len() != menus.len() {
            return Err(Error::Malformed(format!(
                "expected {} picks, got {}",
                menus.len(),
                picks.len()
            )));
        }
        let mut k = 0;
        Self::from_fn(n, |_| {
            k += 1;
            picks[k - 1]
        })
    }

    pub fn n(&self) -> usize {
        self.n as usize
    }

    /// The chosen item of a nonempty menu.
    #[inline]
    pub fn pick(&self, menu: Menu) -> usize {
        debug_assert!(!menu.is_empty() && menu.is_subset(Menu::full(self.n())));
        self.picks[menu.bits() as usize] as usize
    }

    /// Picks in [`all_menus`] order.
    pub fn picks(&self) -> Vec<usize> {
        all_menus(self.n()).iter().map(|&m| self.pick(m)).collect()
    }

    /// The winner of the binary menu `{x, y}`.
    #[inline]
    pub fn binary(&self, x: usize, y: usize) -> usize {
        self.pick(Menu::pair(x, y))
    }

    /// One-line form: labels of the picks in menu order joined by `.`.
    pub fn compact(&self, ground: &GroundSet) -> String {
        self.picks()
            .iter()
            .map(|&i| ground.label(i).to_string())
            .collect::<Vec<_>>()
            .join(".")
    }

    pub fn parse_compact(ground: &GroundSet, text: &str) -> Result<Self> {
        let n = ground.n();
        let parts: Vec<&str> = text.trim().split('.').collect();
        let menus = all_menus(n);
        if parts.len() != menus.len() {
            return Err(Error::Malformed(format!(
                "compact form needs {} picks, got {}",
                menus.len(),
                parts.len()
            )));
        }
        let mut picks = Vec::with_capacity(parts.len());
        for (part, &menu) in parts.iter().zip(menus) {
            let item = ground.parse_item(part)?;
            if !menu.contains(item) {
                return Err(Error::NonMemberChoice {
                    menu: ground.menu_label(menu),
                    item: part.to_string(),
                });
            }
            picks.push(item);
        }
        Self::from_picks(n, &picks)
    }
}

impl fmt::Debug for ChoiceFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match GroundSet::standard(self.n()) {
            Ok(g) => write!(f, "Choice({})", self.compact(&g)),
            Err(_) => write!(f, "Choice({:?})", self.picks()),
        }
    }
}
