//! The full classification run over every normalized choice.

use std::collections::BTreeMap;
use std::fmt::Write as _;

use rayon::prelude::*;
use serde_json::{json, Map, Value};

use crate::deciders::{check, Model, ModelVerdict, Modes};
use crate::error::{Error, Result};
use crate::model::{
    classify_tournament, enumerate_normalized, ChoiceFunction, GroundSet, Menu, TournamentClass,
};

/// Verdicts for one normalized choice.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CensusRecord {
    /// Position in the normalized enumeration.
    pub index: usize,
    pub choice: ChoiceFunction,
    pub compact: String,
    pub class: TournamentClass,
    pub verdicts: BTreeMap<Model, ModelVerdict>,
}

impl CensusRecord {
    pub fn holds(&self, model: Model) -> Option<bool> {
        self.verdicts.get(&model).map(|v| v.holds)
    }

    /// Overwrites one verdict's boolean. Meant for fault-injection tests of
    /// the audit.
    pub fn set_holds(&mut self, model: Model, holds: bool) {
        if let Some(v) = self.verdicts.get_mut(&model) {
            v.holds = holds;
        }
    }
}

/// Holder counts per model, overall and per tournament class.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CountTable {
    pub total: usize,
    pub counts: BTreeMap<Model, usize>,
    /// Ordered as [`TournamentClass::ALL`].
    pub by_class: BTreeMap<Model, [usize; 4]>,
}

impl CountTable {
    pub fn from_records(records: &[CensusRecord], models: &[Model]) -> Self {
        let mut counts = BTreeMap::new();
        let mut by_class = BTreeMap::new();
        for &m in models {
            let breakdown = class_breakdown(records, m);
            counts.insert(m, breakdown.iter().sum());
            by_class.insert(m, breakdown);
        }
        Self {
            total: records.len(),
            counts,
            by_class,
        }
    }

    pub fn count(&self, model: Model) -> Option<usize> {
        self.counts.get(&model).copied()
    }

    /// Counts keyed by model name, headline models first in table order.
    pub fn to_json(&self) -> Value {
        let mut counts = Map::new();
        for m in display_order(self.counts.keys().copied()) {
            counts.insert(m.name().into(), json!(self.counts[&m]));
        }
        json!({ "total": self.total, "counts": counts })
    }

    pub fn breakdowns_json(&self) -> Value {
        let mut out = Map::new();
        for m in display_order(self.by_class.keys().copied()) {
            let mut row = Map::new();
            for (class, count) in TournamentClass::ALL.iter().zip(self.by_class[&m]) {
                row.insert(class.name().into(), json!(count));
            }
            out.insert(m.name().into(), Value::Object(row));
        }
        Value::Object(out)
    }

    /// A plain-text table: one column per model, headline models first.
    pub fn to_table(&self) -> String {
        let models = display_order(self.counts.keys().copied());
        let mut header = String::from("model   ");
        let mut row = String::from("count   ");
        for m in &models {
            let title = m.title();
            let width = title.len().max(5);
            let _ = write!(header, " {title:>width$}");
            let _ = write!(row, " {:>width$}", self.counts[m]);
        }
        format!(
            "{header}\n{row}\nout of {} normalized choices\n",
            self.total
        )
    }
}

/// Headline models in table order, then the rest in column order.
pub fn display_order(models: impl Iterator<Item = Model>) -> Vec<Model> {
    let present: Vec<Model> = models.collect();
    let mut out: Vec<Model> = Model::HEADLINE
        .into_iter()
        .filter(|m| present.contains(m))
        .collect();
    out.extend(
        Model::ALL
            .into_iter()
            .filter(|m| present.contains(m) && !Model::HEADLINE.contains(m)),
    );
    out
}

/// Result of [`run_census`].
#[derive(Debug, Clone)]
pub struct Census {
    pub n: usize,
    pub models: Vec<Model>,
    pub records: Vec<CensusRecord>,
    pub counts: CountTable,
}

fn record(
    index: usize,
    c: ChoiceFunction,
    g: &GroundSet,
    models: &[Model],
    modes: &Modes,
) -> Result<CensusRecord> {
    let mut verdicts = BTreeMap::new();
    for &m in models {
        verdicts.insert(m, check(&c, m, modes)?);
    }
    Ok(CensusRecord {
        index,
        compact: c.compact(g),
        class: classify_tournament(&c),
        choice: c,
        verdicts,
    })
}

/// Decides every model in `models` for every normalized choice on `g`.
///
/// `jobs` sets the worker count; `0` uses rayon's default. Records come back
/// in enumeration order whatever the worker count.
///
/// # Errors
/// [`Error::ModeDisagreement`] if a cross-checking mode finds its routes
/// disagree.
pub fn run_census(g: &GroundSet, models: &[Model], modes: &Modes, jobs: usize) -> Result<Census> {
    let n = g.n();
    let choices: Vec<ChoiceFunction> = enumerate_normalized(n).collect();
    let work = || -> Result<Vec<CensusRecord>> {
        choices
            .par_iter()
            .enumerate()
            .map(|(i, &c)| record(i, c, g, models, modes))
            .collect()
    };
    let records = if jobs == 1 {
        choices
            .iter()
            .enumerate()
            .map(|(i, &c)| record(i, c, g, models, modes))
            .collect::<Result<Vec<_>>>()?
    } else {
        let pool = rayon::ThreadPoolBuilder::new()
            .num_threads(jobs)
            .build()
            .map_err(|e| Error::Malformed(format!("thread pool: {e}")))?;
        pool.install(work)?
    };
    let counts = CountTable::from_records(&records, models);
    Ok(Census {
        n,
        models: models.to_vec(),
        records,
        counts,
    })
}

/// Holders of `model` per tournament class, ordered as [`TournamentClass::ALL`].
pub fn class_breakdown(records: &[CensusRecord], model: Model) -> [usize; 4] {
    let mut out = [0; 4];
    for r in records.iter().filter(|r| r.holds(model) == Some(true)) {
        out[r.class.position()] += 1;
    }
    out
}

/// Implications every correct build satisfies, antecedent first.
pub const IMPLICATIONS: [(Model, Model); 15] = [
    (Model::Rationalizable, Model::Sqb),
    (Model::Rationalizable, Model::Lr),
    (Model::Rationalizable, Model::Rgt),
    (Model::Rationalizable, Model::Rsm),
    (Model::Rationalizable, Model::Sr),
    (Model::Rationalizable, Model::Cls),
    (Model::Rationalizable, Model::Wwarp),
    (Model::Rationalizable, Model::Cla),
    (Model::Lr, Model::Rgt),
    (Model::Rgt, Model::Sr),
    (Model::Rsm, Model::Sr),
    (Model::Cls, Model::Sr),
    (Model::Sqb, Model::Sr),
    (Model::Sr, Model::Ac),
    (Model::Rsm, Model::Wwarp),
];

/// One record breaking one implication.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ImplicationViolation {
    pub index: usize,
    pub antecedent: Model,
    pub consequent: Model,
}

/// Outcome of [`verify_implications`].
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct AuditReport {
    pub records: usize,
    pub violations: Vec<ImplicationViolation>,
    /// Records where a model and its defining combination disagree, e.g.
    /// RSM against WWARP and gamma.
    pub equivalence_failures: Vec<(usize, String)>,
    /// Informational remarks, never failures.
    pub notes: Vec<String>,
}

impl AuditReport {
    pub fn is_clean(&self) -> bool {
        self.violations.is_empty() && self.equivalence_failures.is_empty()
    }

    pub fn to_json(&self) -> Value {
        json!({
            "records": self.records,
            "clean": self.is_clean(),
            "violations": self.violations.iter().map(|v| json!({
                "index": v.index,
                "antecedent": v.antecedent.name(),
                "consequent": v.consequent.name(),
            })).collect::<Vec<_>>(),
            "equivalence_failures": self.equivalence_failures.iter().map(|(i, what)| json!({
                "index": i,
                "check": what,
            })).collect::<Vec<_>>(),
            "notes": self.notes,
        })
    }
}

/// Checks the implication lattice and the defining equivalences on every
/// record. Pairs whose models were not computed are skipped.
pub fn verify_implications(records: &[CensusRecord]) -> AuditReport {
    let mut report = AuditReport {
        records: records.len(),
        ..Default::default()
    };
    for r in records {
        for (antecedent, consequent) in IMPLICATIONS {
            if r.holds(antecedent) == Some(true) && r.holds(consequent) == Some(false) {
                report.violations.push(ImplicationViolation {
                    index: r.index,
                    antecedent,
                    consequent,
                });
            }
        }
        let h = |m| r.holds(m);
        let both = |a, b| Some(h(a)? && h(b)?);
        let either = |a, b| Some(h(a)? || h(b)?);
        let checks = [
            (
                "rsm = wwarp and gamma",
                h(Model::Rsm),
                both(Model::Wwarp, Model::Gamma),
            ),
            ("rsm = ec", h(Model::Rsm), h(Model::Ec)),
            ("rgt = ws and dc", h(Model::Rgt), both(Model::Ws, Model::Dc)),
            (
                "sqb = esqb or wsqb",
                h(Model::Sqb),
                either(Model::Esqb, Model::Wsqb),
            ),
        ];
        for (name, left, right) in checks {
            if let (Some(l), Some(r2)) = (left, right) {
                if l != r2 {
                    report
                        .equivalence_failures
                        .push((r.index, name.to_string()));
                }
            }
        }
    }
    let count = |m| records.iter().filter(|r| r.holds(m) == Some(true)).count();
    if records
        .iter()
        .all(|r| r.holds(Model::Sr).is_some() && r.holds(Model::Cls).is_some())
        && !records.is_empty()
    {
        let (sr, cls) = (count(Model::Sr), count(Model::Cls));
        if sr == cls {
            report.notes.push(format!(
                "expected equality: SR and CLS both hold for {sr} choices, a small-ground-set coincidence"
            ));
        } else {
            report
                .notes
                .push(format!("SR holds for {sr} choices and CLS for {cls}"));
        }
    }
    report
}

/// WWARP failures grouped by how many of the binary menus `{0, y}` pick item 0.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct WwarpCase {
    /// How many `y` have `c({0, y}) = 0`.
    pub wins: usize,
    pub choices: usize,
    pub failures: usize,
}

/// Cases I, II, III and IV: item 0 wins exactly one, two, three or none of
/// its binary menus.
pub fn wwarp_failure_census(records: &[CensusRecord]) -> [WwarpCase; 4] {
    let mut cases = [1, 2, 3, 0].map(|wins| WwarpCase {
        wins,
        choices: 0,
        failures: 0,
    });
    for r in records {
        let c = &r.choice;
        let wins = (1..c.n())
            .filter(|&y| c.pick(Menu::pair(0, y)) == 0)
            .count();
        if let Some(case) = cases.iter_mut().find(|k| k.wins == wins) {
            case.choices += 1;
            if r.holds(Model::Wwarp) == Some(false) {
                case.failures += 1;
            }
        }
    }
    cases
}

pub fn wwarp_cases_json(cases: &[WwarpCase; 4]) -> Value {
    let mut out = Map::new();
    for (name, case) in ["I", "II", "III", "IV"].iter().zip(cases) {
        out.insert(
            (*name).into(),
            json!({ "wins": case.wins, "choices": case.choices, "failures": case.failures }),
        );
    }
    let failures: usize = cases.iter().map(|k| k.failures).sum();
    let choices: usize = cases.iter().map(|k| k.choices).sum();
    out.insert("total_failures".into(), json!(failures));
    out.insert("holders".into(), json!(choices - failures));
    Value::Object(out)
}

/// The fixed CSV column set.
pub const CSV_HEADER: &str =
    "index,compact,class,rationalizable,ac,wwarp,gamma,ec,rsm,sr,cls,lr,ws,dc,rgt,esqb,wsqb,sqb,cla";

/// One row per record with 0/1 verdicts. Models that were not computed are
/// left empty.
pub fn to_csv(records: &[CensusRecord]) -> String {
    let mut out = String::with_capacity(64 * (records.len() + 1));
    out.push_str(CSV_HEADER);
    out.push('\n');
    for r in records {
        let _ = write!(out, "{},{},{}", r.index, r.compact, r.class.name());
        for m in Model::ALL {
            let cell = match r.holds(m) {
                Some(true) => "1",
                Some(false) => "0",
                None => "",
            };
            out.push(',');
            out.push_str(cell);
        }
        out.push('\n');
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn small(n: usize, jobs: usize) -> Census {
        let g = GroundSet::standard(n).unwrap();
        run_census(&g, &Model::ALL, &Modes::default(), jobs).unwrap()
    }

    #[test]
    fn three_item_census_is_consistent() {
        let census = small(3, 1);
        assert_eq!(census.records.len(), 4);
        assert!(verify_implications(&census.records).is_clean());
        for (m, breakdown) in &census.counts.by_class {
            assert_eq!(breakdown.iter().sum::<usize>(), census.counts.counts[m]);
        }
    }

    #[test]
    fn csv_has_fixed_header_and_one_row_per_record() {
        let census = small(3, 2);
        let csv = to_csv(&census.records);
        let lines: Vec<&str> = csv.lines().collect();
        assert_eq!(lines[0], CSV_HEADER);
        assert_eq!(lines.len(), 5);
        assert!(lines[1..].iter().all(|l| l.split(',').count() == 19));
    }

    #[test]
    fn worker_count_does_not_change_output() {
        assert_eq!(to_csv(&small(3, 1).records), to_csv(&small(3, 3).records));
    }

    #[test]
    fn flipped_verdict_is_reported() {
        let mut census = small(3, 1);
        let r = census
            .records
            .iter_mut()
            .find(|r| r.holds(Model::Rationalizable) == Some(true))
            .unwrap();
        r.set_holds(Model::Lr, false);
        let report = verify_implications(&census.records);
        assert_eq!(report.violations.len(), 1);
        assert_eq!(report.violations[0].consequent, Model::Lr);
        assert_eq!(report.violations[0].antecedent, Model::Rationalizable);
    }
}
