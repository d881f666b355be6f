use std::fmt;

use crate::model::{GroundSet, Menu, MAX_ITEMS};

/// A set of directed pairs `x -> y` (`x` eliminates `y`) with no self-loops.
///
/// Stored as successor and predecessor bit rows. Asymmetry is not enforced;
/// see [`Relation::properties`].
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Relation {
    n: u8,
    succ: [u8; MAX_ITEMS],
    pred: [u8; MAX_ITEMS],
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct RelationProperties {
    pub asymmetric: bool,
    pub complete: bool,
    pub acyclic: bool,
    pub transitive: bool,
    pub linear_order: bool,
}

impl Relation {
    pub fn empty(n: usize) -> Self {
        assert!(n <= MAX_ITEMS, "ground set size {n} out of range");
        Self {
            n: n as u8,
            succ: [0; MAX_ITEMS],
            pred: [0; MAX_ITEMS],
        }
    }

    /// # Panics
    /// On self-loops or items outside `0..n`.
    pub fn from_edges(n: usize, edges: impl IntoIterator<Item = (usize, usize)>) -> Self {
        let mut r = Self::empty(n);
        for (x, y) in edges {
            r.insert(x, y);
        }
        r
    }

    /// Parses `"e>a, a>b"` style edge lists against a ground set's labels.
    pub fn from_labels(ground: &GroundSet, text: &str) -> Option<Self> {
        let mut r = Self::empty(ground.n());
        for part in text.split(',').map(str::trim).filter(|p| !p.is_empty()) {
            let (w, l) = part.split_once('>')?;
            let x = ground.index_of(w.trim().chars().next()?)?;
            let y = ground.index_of(l.trim().chars().next()?)?;
            if x == y {
                return None;
            }
            r.insert(x, y);
        }
        Some(r)
    }

    pub fn n(&self) -> usize {
        self.n as usize
    }

    pub fn insert(&mut self, x: usize, y: usize) {
        assert!(x != y, "self-loop {x} -> {x}");
        assert!(x < self.n() && y < self.n(), "edge ({x}, {y}) out of range");
        self.succ[x] |= 1 << y;
        self.pred[y] |= 1 << x;
    }

    #[inline]
    pub fn contains(&self, x: usize, y: usize) -> bool {
        self.succ[x] & (1 << y) != 0
    }

    /// Items that `x` eliminates.
    #[inline]
    pub fn successors(&self, x: usize) -> Menu {
        Menu::from_bits(self.succ[x])
    }

    /// Items that eliminate `x`.
    #[inline]
    pub fn predecessors(&self, x: usize) -> Menu {
        Menu::from_bits(self.pred[x])
    }

    pub fn out_degree(&self, x: usize) -> usize {
        self.succ[x].count_ones() as usize
    }

    pub fn len(&self) -> usize {
        self.succ[..self.n()]
            .iter()
            .map(|s| s.count_ones() as usize)
            .sum()
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    /// Edges ordered by source, then target.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        (0..self.n()).flat_map(move |x| self.successors(x).items().map(move |y| (x, y)))
    }

    pub fn union(&self, other: &Relation) -> Relation {
        let mut r = *self;
        for (x, y) in other.edges() {
            r.insert(x, y);
        }
        r
    }

    pub fn is_disjoint(&self, other: &Relation) -> bool {
        (0..self.n()).all(|x| self.succ[x] & other.succ[x] == 0)
    }

    /// Undominated members of `menu`: `{x in A : no y in A with y -> x}`.
    /// Empty when domination inside `menu` is cyclic.
    #[inline]
    pub fn max_set(&self, menu: Menu) -> Menu {
        let mut out = Menu::EMPTY;
        for x in menu.items() {
            if self.predecessors(x).is_disjoint(menu) {
                out = out.with(x);
            }
        }
        out
    }

    /// Transitive closure by repeated squaring.
    pub fn transitive_closure(&self) -> Relation {
        let n = self.n();
        let mut succ = self.succ;
        loop {
            let mut next = succ;
            for x in 0..n {
                for y in Menu::from_bits(succ[x]).items() {
                    next[x] |= succ[y];
                }
            }
            if next == succ {
                break;
            }
            succ = next;
        }
        // the closure may contain loops (that is how cycles show up), so the
        // rows are assembled directly rather than through `insert`
        let mut pred = [0u8; MAX_ITEMS];
        for (x, &row) in succ.iter().enumerate().take(n) {
            for y in Menu::from_bits(row).items() {
                pred[y] |= 1 << x;
            }
        }
        Relation {
            n: self.n,
            succ,
            pred,
        }
    }

    pub fn is_asymmetric(&self) -> bool {
        self.edges().all(|(x, y)| !self.contains(y, x))
    }

    pub fn is_complete(&self) -> bool {
        let n = self.n();
        (0..n).all(|x| (x + 1..n).all(|y| self.contains(x, y) || self.contains(y, x)))
    }

    pub fn is_acyclic(&self) -> bool {
        let closure = self.transitive_closure();
        (0..self.n()).all(|x| !closure.contains(x, x))
    }

    pub fn is_transitive(&self) -> bool {
        self.edges()
            .all(|(x, y)| self.successors(y).items().all(|z| self.contains(x, z)))
    }

    pub fn properties(&self) -> RelationProperties {
        let asymmetric = self.is_asymmetric();
        let complete = self.is_complete();
        let transitive = self.is_transitive();
        RelationProperties {
            asymmetric,
            complete,
            acyclic: self.is_acyclic(),
            transitive,
            linear_order: asymmetric && complete && transitive,
        }
    }

    pub fn describe(&self, ground: &GroundSet) -> String {
        self.edges()
            .map(|(x, y)| format!("{}>{}", ground.label(x), ground.label(y)))
            .collect::<Vec<_>>()
            .join(", ")
    }
}

impl fmt::Debug for Relation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.edges()).finish()
    }
}
