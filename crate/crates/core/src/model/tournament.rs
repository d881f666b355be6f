use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use super::choice::ChoiceFunction;
use crate::error::{Error, Result};
use crate::relations::Relation;

/// The isomorphism class of a choice's binary pattern, split by whether the
/// tournament has a source (an item winning every pair) and a sink (an item
/// losing every pair).
///
/// On four items the tournament without source and sink is the 4-cycle
/// class; on three items it is the 3-cycle.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum TournamentClass {
    FourCycle,
    SourceAndSink,
    SourceNoSink,
    SinkNoSource,
}

impl TournamentClass {
    /// Report order.
    pub const ALL: [TournamentClass; 4] = [
        TournamentClass::FourCycle,
        TournamentClass::SourceAndSink,
        TournamentClass::SourceNoSink,
        TournamentClass::SinkNoSource,
    ];

    pub fn name(self) -> &'static str {
        match self {
            TournamentClass::FourCycle => "four_cycle",
            TournamentClass::SourceAndSink => "source_and_sink",
            TournamentClass::SourceNoSink => "source_no_sink",
            TournamentClass::SinkNoSource => "sink_no_source",
        }
    }

    pub fn position(self) -> usize {
        Self::ALL.iter().position(|&c| c == self).expect("listed")
    }
}

impl fmt::Display for TournamentClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for TournamentClass {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Self::ALL
            .into_iter()
            .find(|c| c.name() == s)
            .ok_or_else(|| Error::Malformed(format!("unknown tournament class `{s}`")))
    }
}

/// The binary-choice tournament: `x -> y` iff `c({x, y}) = x`.
pub fn base_tournament(c: &ChoiceFunction) -> Relation {
    let n = c.n();
    let mut t = Relation::empty(n);
    for x in 0..n {
        for y in x + 1..n {
            let w = c.binary(x, y);
            t.insert(w, if w == x { y } else { x });
        }
    }
    t
}

pub fn classify_tournament(c: &ChoiceFunction) -> TournamentClass {
    let t = base_tournament(c);
    let n = c.n();
    let source = (0..n).any(|x| t.out_degree(x) == n - 1);
    let sink = (0..n).any(|x| t.out_degree(x) == 0);
    match (source, sink) {
        (true, true) => TournamentClass::SourceAndSink,
        (true, false) => TournamentClass::SourceNoSink,
        (false, true) => TournamentClass::SinkNoSource,
        (false, false) => TournamentClass::FourCycle,
    }
}
