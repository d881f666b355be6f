//! Canonical forms under relabeling.
//!
//! The greedy form is the normalization used throughout the census: relabel
//! `c(X)` as the first item, the pick from what remains as the second, and
//! so on down to the last pair. Choices on at least two items have free
//! orbits under relabeling, so the witnessing permutation is unique. The
//! minimum form is a brute-force cross-check that shares no code with it.

use super::choice::ChoiceFunction;
use super::ground::Menu;
use super::perm::{all_permutations, apply_permutation, Permutation};

/// Returns the normalized representative of `c`'s isomorphism class and the
/// relabeling that maps `c` onto it.
pub fn canonicalize_greedy(c: &ChoiceFunction) -> (ChoiceFunction, Permutation) {
    let n = c.n();
    let mut sigma = vec![0; n];
    let mut remaining = Menu::full(n);
    let mut next = 0;
    while remaining.len() >= 2 {
        let x = c.pick(remaining);
        sigma[x] = next;
        next += 1;
        remaining = remaining.without(x);
    }
    let last = remaining.only().expect("one item left");
    sigma[last] = next;
    let perm = Permutation::new(sigma).expect("greedy labeling is a bijection");
    (apply_permutation(c, &perm), perm)
}

/// The relabeling of `c` whose picks, read in menu order, are
/// lexicographically smallest.
pub fn canonicalize_min(c: &ChoiceFunction) -> ChoiceFunction {
    all_permutations(c.n())
        .iter()
        .map(|s| apply_permutation(c, s))
        .min_by(|a, b| a.picks().cmp(&b.picks()))
        .expect("at least one permutation")
}

/// Returns the first permutation (in lexicographic order) carrying `c` onto
/// `other`, or `None` when the two are not isomorphic.
pub fn is_isomorphic(c: &ChoiceFunction, other: &ChoiceFunction) -> Option<Permutation> {
    if c.n() != other.n() {
        return None;
    }
    all_permutations(c.n())
        .iter()
        .find(|s| apply_permutation(c, s) == *other)
        .cloned()
}
