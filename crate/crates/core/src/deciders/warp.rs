use std::str::FromStr;

use super::sequential::find_schedule;
use super::{Counterexample, Model, ModelVerdict, Witness};
use crate::error::{Error, Result};
use crate::model::{all_menus, ChoiceFunction};

/// Weak WARP: `c(xy) = c(B) = x` with `x, y in A ⊆ B` rules out `c(A) = y`.
pub fn check_wwarp(c: &ChoiceFunction) -> ModelVerdict {
    let menus = all_menus(c.n());
    let violation = menus.iter().find_map(|&larger| {
        let x = c.pick(larger);
        menus
            .iter()
            .filter(|&&a| a.is_subset(larger) && a.contains(x))
            .find_map(|&smaller| {
                let y = c.pick(smaller);
                (y != x && c.binary(x, y) == x).then_some(Counterexample::Wwarp {
                    x,
                    y,
                    smaller,
                    larger,
                })
            })
    });
    ModelVerdict::from_violation(Model::Wwarp, violation)
}

/// Property gamma: `c(A) = c(B) = x` forces `c(A ∪ B) = x`.
pub fn check_gamma(c: &ChoiceFunction) -> ModelVerdict {
    let menus = all_menus(c.n());
    let violation = menus.iter().enumerate().find_map(|(i, &first)| {
        menus[i + 1..].iter().find_map(|&second| {
            let x = c.pick(first);
            (c.pick(second) == x && c.pick(first.union(second)) != x)
                .then_some(Counterexample::Gamma { first, second })
        })
    });
    ModelVerdict::from_violation(Model::Gamma, violation)
}

/// Exclusion consistency: if adding `x` to `A` moves the pick to a third
/// item, no menu containing `x` may pick `c(A)`.
pub fn check_ec(c: &ChoiceFunction) -> ModelVerdict {
    let n = c.n();
    let menus = all_menus(n);
    // singleton menus never trigger the premise: c({y, x}) is y or x
    let violation = menus.iter().find_map(|&menu| {
        let old = c.pick(menu);
        (0..n).filter(|&x| !menu.contains(x)).find_map(|added| {
            let new = c.pick(menu.with(added));
            if new == old || new == added {
                return None;
            }
            menus
                .iter()
                .find(|&&other| other.contains(added) && c.pick(other) == old)
                .map(|&other| Counterexample::Exclusion { menu, added, other })
        })
    });
    ModelVerdict::from_violation(Model::Ec, violation)
}

/// Routes for deciding the rational shortlist method.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum RsmMode {
    /// Weak WARP and property gamma.
    Axiom,
    /// Exclusion consistency.
    Ec,
    /// Ordered partitions of the tournament into at most two rationales.
    Schedule,
    /// All three; they must agree.
    All,
}

impl FromStr for RsmMode {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.trim() {
            "axiom" => Ok(RsmMode::Axiom),
            "ec" => Ok(RsmMode::Ec),
            "schedule" => Ok(RsmMode::Schedule),
            "all" => Ok(RsmMode::All),
            other => Err(Error::Malformed(format!("unknown rsm mode `{other}`"))),
        }
    }
}

fn rsm_by_axioms(c: &ChoiceFunction) -> ModelVerdict {
    let wwarp = check_wwarp(c);
    let gamma = check_gamma(c);
    ModelVerdict {
        model: Model::Rsm,
        holds: wwarp.holds && gamma.holds,
        witness: None,
        counterexample: wwarp.counterexample.or(gamma.counterexample),
        parts: vec![wwarp, gamma],
    }
}

fn rsm_by_ec(c: &ChoiceFunction) -> ModelVerdict {
    let ec = check_ec(c);
    ModelVerdict {
        model: Model::Rsm,
        holds: ec.holds,
        witness: None,
        counterexample: ec.counterexample,
        parts: vec![ec],
    }
}

fn rsm_by_schedule(c: &ChoiceFunction) -> ModelVerdict {
    let witness = find_schedule(c, 2, false).map(Witness::Schedule);
    ModelVerdict::from_witness(Model::Rsm, witness)
}

/// Rational shortlist method.
///
/// # Errors
/// [`Error::ModeDisagreement`] when `mode` is [`RsmMode::All`] and the three
/// routes disagree, which can only mean a bug.
pub fn check_rsm(c: &ChoiceFunction, mode: RsmMode) -> Result<ModelVerdict> {
    match mode {
        RsmMode::Axiom => Ok(rsm_by_axioms(c)),
        RsmMode::Ec => Ok(rsm_by_ec(c)),
        RsmMode::Schedule => Ok(rsm_by_schedule(c)),
        RsmMode::All => {
            let axiom = rsm_by_axioms(c);
            let ec = rsm_by_ec(c);
            let mut schedule = rsm_by_schedule(c);
            if axiom.holds != schedule.holds || ec.holds != schedule.holds {
                return Err(Error::ModeDisagreement {
                    model: "rsm".into(),
                    detail: format!(
                        "axiom={} ec={} schedule={} on {c:?}",
                        axiom.holds, ec.holds, schedule.holds
                    ),
                });
            }
            schedule.counterexample = axiom.counterexample;
            schedule.parts = axiom.parts.into_iter().chain(ec.parts).collect();
            Ok(schedule)
        }
    }
}
