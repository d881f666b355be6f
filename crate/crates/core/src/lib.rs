//! Exhaustive classification of choice functions on ground sets of at most
//! four items.
//!
//! The crate enumerates one representative of every isomorphism class of
//! choice functions, decides for each one a fixed vocabulary of
//! bounded-rationality models (sequential rationalizability, the rational
//! shortlist method, list rationality, status quo bias, game-tree
//! rationalizability, limited attention, ...) and produces machine-checkable
//! witnesses or counterexamples for every verdict.
//!
//! The layout follows the pipeline:
//!
//! * [`model`]: items, menus, choice functions, relabelings, canonical forms
//!   and the normalized enumeration.
//! * [`relations`]: binary relations, linear orders and rationale schedules.
//! * [`deciders`]: one decision procedure per model plus witness replay.
//! * [`census`]: the full classification run, count tables and audits.
//! * [`cli`]: the command-line front end.

pub mod census;
pub mod cli;
pub mod deciders;
pub mod error;
pub mod fixtures;
pub mod model;
pub mod relations;

pub use error::{Error, Result};
pub use model::{ChoiceFunction, GroundSet, Menu, Permutation, TournamentClass};
pub use relations::{LinearOrder, RationaleSchedule, Relation};
