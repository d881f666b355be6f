use std::fmt;
use std::sync::OnceLock;

use crate::error::{Error, Result};

/// Largest ground set the crate works with.
pub const MAX_ITEMS: usize = 4;

const DEFAULT_LABELS: [char; MAX_ITEMS] = ['a', 'b', 'd', 'e'];

/// A finite set of items, each named by a single character.
///
/// The position of a label is the item's index; menus and relations refer to
/// items by index only.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct GroundSet {
    labels: Vec<char>,
}

impl GroundSet {
    pub fn new(labels: Vec<char>) -> Result<Self> {
        if labels.len() < 2 || labels.len() > MAX_ITEMS {
            return Err(Error::InvalidGroundSet(format!(
                "expected 2 to {MAX_ITEMS} items, got {}",
                labels.len()
            )));
        }
        for (i, l) in labels.iter().enumerate() {
            if labels[..i].contains(l) {
                return Err(Error::InvalidGroundSet(format!("label `{l}` repeated")));
            }
            if l.is_whitespace() || *l == '.' {
                return Err(Error::InvalidGroundSet(format!(
                    "label {l:?} is not allowed"
                )));
            }
        }
        Ok(Self { labels })
    }

    /// The default ground set `a, b, d, e` (truncated for smaller `n`).
    pub fn standard(n: usize) -> Result<Self> {
        if !(2..=MAX_ITEMS).contains(&n) {
            return Err(Error::UnsupportedSize(n));
        }
        Ok(Self {
            labels: DEFAULT_LABELS[..n].to_vec(),
        })
    }

    pub fn n(&self) -> usize {
        self.labels.len()
    }

    pub fn labels(&self) -> &[char] {
        &self.labels
    }

    pub fn label(&self, item: usize) -> char {
        self.labels[item]
    }

    pub fn index_of(&self, label: char) -> Option<usize> {
        self.labels.iter().position(|&l| l == label)
    }

    pub fn full(&self) -> Menu {
        Menu::full(self.n())
    }

    /// Parses a single item label.
    pub fn parse_item(&self, text: &str) -> Result<usize> {
        let mut chars = text.chars();
        match (chars.next(), chars.next()) {
            (Some(ch), None) => self
                .index_of(ch)
                .ok_or_else(|| Error::UnknownLabel(text.to_string())),
            _ => Err(Error::UnknownLabel(text.to_string())),
        }
    }

    /// Parses a menu written as concatenated labels, e.g. `"abd"`.
    ///
    /// Labels may appear in any order but not twice.
    pub fn parse_menu(&self, text: &str) -> Result<Menu> {
        let mut menu = Menu::EMPTY;
        for ch in text.chars() {
            let item = self
                .index_of(ch)
                .ok_or_else(|| Error::UnknownLabel(ch.to_string()))?;
            if menu.contains(item) {
                return Err(Error::Malformed(format!("menu `{text}` repeats `{ch}`")));
            }
            menu = menu.with(item);
        }
        if menu.is_empty() {
            return Err(Error::Malformed("empty menu key".into()));
        }
        Ok(menu)
    }

    /// Labels of the menu's items concatenated in label order.
    pub fn menu_label(&self, menu: Menu) -> String {
        menu.items().map(|i| self.labels[i]).collect()
    }

    pub fn item_label(&self, item: usize) -> String {
        self.labels[item].to_string()
    }
}

/// A subset of the ground set, bit `i` standing for item `i`.
///
/// Menus in the domain of a choice function are nonempty; the empty value
/// only shows up as the result of set operations such as
/// [`Relation::max_set`](crate::relations::Relation::max_set).
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct Menu(u8);

impl Menu {
    pub const EMPTY: Menu = Menu(0);

    pub fn from_bits(bits: u8) -> Self {
        Menu(bits)
    }

    pub fn full(n: usize) -> Self {
        Menu(((1u16 << n) - 1) as u8)
    }

    pub fn singleton(item: usize) -> Self {
        Menu(1 << item)
    }

    pub fn pair(x: usize, y: usize) -> Self {
        Menu((1 << x) | (1 << y))
    }

    pub fn from_items<I: IntoIterator<Item = usize>>(items: I) -> Self {
        items.into_iter().fold(Menu::EMPTY, |m, i| m.with(i))
    }

    pub fn bits(self) -> u8 {
        self.0
    }

    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn contains(self, item: usize) -> bool {
        self.0 & (1 << item) != 0
    }

    pub fn with(self, item: usize) -> Self {
        Menu(self.0 | (1 << item))
    }

    pub fn without(self, item: usize) -> Self {
        Menu(self.0 & !(1 << item))
    }

    pub fn union(self, other: Menu) -> Self {
        Menu(self.0 | other.0)
    }

    pub fn intersection(self, other: Menu) -> Self {
        Menu(self.0 & other.0)
    }

    pub fn difference(self, other: Menu) -> Self {
        Menu(self.0 & !other.0)
    }

    pub fn is_subset(self, other: Menu) -> bool {
        self.0 & !other.0 == 0
    }

    pub fn is_disjoint(self, other: Menu) -> bool {
        self.0 & other.0 == 0
    }

    /// Lowest-indexed item, if any.
    pub fn first(self) -> Option<usize> {
        (self.0 != 0).then(|| self.0.trailing_zeros() as usize)
    }

    /// The single item of a singleton menu.
    pub fn only(self) -> Option<usize> {
        (self.len() == 1).then(|| self.0.trailing_zeros() as usize)
    }

    /// Items in ascending index order.
    pub fn items(self) -> impl Iterator<Item = usize> + Clone {
        let bits = self.0;
        (0..8).filter(move |i| bits & (1 << i) != 0)
    }

    /// Nonempty subsets, ascending by bit pattern.
    pub fn nonempty_subsets(self) -> impl Iterator<Item = Menu> {
        let bits = self.0;
        (1..=bits).filter(move |s| s & !bits == 0).map(Menu)
    }
}

impl fmt::Debug for Menu {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (k, i) in self.items().enumerate() {
            if k > 0 {
                write!(f, ",")?;
            }
            write!(f, "{i}")?;
        }
        write!(f, "}}")
    }
}

/// All menus of size at least two, ascending by size and then
/// lexicographically by their item sequence (`ab, ad, ae, bd, be, de, abd,
/// ...` on the standard four items).
pub fn all_menus(n: usize) -> &'static [Menu] {
    static TABLE: OnceLock<Vec<Vec<Menu>>> = OnceLock::new();
    assert!(
        (1..=MAX_ITEMS).contains(&n),
        "ground set size {n} out of range"
    );
    &TABLE.get_or_init(|| (0..=MAX_ITEMS).map(build_menus).collect())[n]
}

fn build_menus(n: usize) -> Vec<Menu> {
    if n == 0 {
        return Vec::new();
    }
    let mut menus: Vec<Menu> = (1..(1u16 << n))
        .map(|b| Menu(b as u8))
        .filter(|m| m.len() >= 2)
        .collect();
    menus.sort_by_key(|m| (m.len(), m.items().collect::<Vec<_>>()));
    menus
}
