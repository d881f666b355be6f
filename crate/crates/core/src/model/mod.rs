//! Ground sets, menus, choice functions and everything that is invariant
//! under relabeling items.

mod canon;
mod choice;
mod enumerate;
mod ground;
mod json;
mod perm;
mod tournament;

pub use canon::{canonicalize_greedy, canonicalize_min, is_isomorphic};
pub use choice::ChoiceFunction;
pub use enumerate::{all_choices, enumerate_normalized, normalized_count};
pub use ground::{all_menus, GroundSet, Menu, MAX_ITEMS};
pub use json::{parse_choice, serialize_choice};
pub use perm::{all_permutations, apply_permutation, Permutation};
pub use tournament::{base_tournament, classify_tournament, TournamentClass};
