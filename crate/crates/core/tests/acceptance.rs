//! Acceptance suite. Runs without the libtest harness so that every
//! criterion prints exactly one PASS/FAIL line; the process fails if any
//! criterion does.

mod common;

use std::collections::{BTreeMap, BTreeSet, HashSet};
use std::time::{Duration, Instant};

use choice_census::census::{
    class_breakdown, run_census, to_csv, verify_implications, wwarp_failure_census, Census,
    IMPLICATIONS,
};
use choice_census::deciders::{
    check, check_cla, check_rsm, check_sr, lr_orders, replay::replay, sqb_predict, ClaMode, Model,
    Modes, RsmMode, SqbTriple, SqbVariant,
};
use choice_census::fixtures::fixture;
use choice_census::model::{
    all_choices, all_menus, all_permutations, apply_permutation, canonicalize_greedy,
    canonicalize_min, enumerate_normalized,
};
use choice_census::{ChoiceFunction, GroundSet, LinearOrder};
use common::*;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde_json::Value;

type Outcome = Result<String, String>;
type Criterion<'a> = (&'static str, Box<dyn Fn() -> Outcome + 'a>);

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn golden(name: &str) -> Value {
    let path = format!("{}/tests/golden/{name}", env!("CARGO_MANIFEST_DIR"));
    let text = std::fs::read_to_string(&path).unwrap_or_else(|e| panic!("{path}: {e}"));
    serde_json::from_str(&text).unwrap_or_else(|e| panic!("{path}: {e}"))
}

fn full_census(jobs: usize) -> (Census, Duration) {
    let start = Instant::now();
    let census =
        run_census(&standard4(), &Model::ALL, &Modes::default(), jobs).expect("census runs");
    (census, start.elapsed())
}

const HEADLINE_COUNTS: [(Model, usize); 8] = [
    (Model::Sqb, 6),
    (Model::Lr, 10),
    (Model::Rgt, 11),
    (Model::Rsm, 11),
    (Model::Sr, 15),
    (Model::Cls, 15),
    (Model::Wwarp, 304),
    (Model::Cla, 324),
];

fn count_table(census: &Census, elapsed: Duration) -> Outcome {
    ensure(census.records.len() == 864, || {
        format!("{} records", census.records.len())
    })?;
    let table = golden("theorem1_table.json");
    for (model, expected) in HEADLINE_COUNTS {
        let got = census.counts.count(model).unwrap_or(usize::MAX);
        ensure(got == expected, || format!("{model}: {got} != {expected}"))?;
        let frozen = table["counts"][model.name()].as_u64().map(|v| v as usize);
        ensure(frozen == Some(got), || {
            format!("{model}: golden file says {frozen:?}")
        })?;
    }
    ensure(elapsed < Duration::from_secs(120), || {
        format!("took {elapsed:?}")
    })?;
    let row: Vec<String> = HEADLINE_COUNTS
        .iter()
        .map(|(m, n)| format!("{}={n}", m.title()))
        .collect();
    Ok(format!(
        "{} in {:.1}s single-threaded",
        row.join(" "),
        elapsed.as_secs_f64()
    ))
}

fn normalized_transversal() -> Outcome {
    let normalized: Vec<ChoiceFunction> = enumerate_normalized(4).collect();
    ensure(normalized.len() == 864, || {
        format!("enumeration yields {}", normalized.len())
    })?;

    let labeled = all_labeled(4);
    ensure(labeled.len() == 20736, || {
        format!("{} labeled choices", labeled.len())
    })?;
    let mut classes: BTreeMap<Vec<u8>, Picks> = BTreeMap::new();
    for p in &labeled {
        classes.entry(min_form(p, 4)).or_insert(*p);
    }
    ensure(classes.len() == 864, || {
        format!("oracle finds {} classes", classes.len())
    })?;

    let library_forms: HashSet<ChoiceFunction> =
        all_choices(4).map(|c| canonicalize_min(&c)).collect();
    ensure(library_forms.len() == 864, || {
        format!("library min forms: {}", library_forms.len())
    })?;

    let enumerated: BTreeSet<Vec<usize>> = normalized.iter().map(|c| c.picks()).collect();
    ensure(enumerated.len() == 864, || {
        "enumeration repeats a choice".into()
    })?;
    let via_oracle: BTreeSet<Vec<usize>> = classes
        .values()
        .map(|p| canonicalize_greedy(&from_picks(4, p)).0.picks())
        .collect();
    ensure(via_oracle == enumerated, || {
        "greedy-normalized oracle transversal differs".into()
    })?;

    let oracle_classes: HashSet<Vec<u8>> = normalized
        .iter()
        .map(|c| min_form(&to_picks(c), 4))
        .collect();
    ensure(oracle_classes.len() == 864, || {
        "two normalized choices are isomorphic".into()
    })?;
    Ok("864 normalized = 864 oracle classes of 20736, transversals agree".into())
}

fn attention_formulations(census: &Census) -> Outcome {
    let mut holders: Vec<BTreeSet<usize>> = Vec::new();
    for mode in [ClaMode::Direct, ClaMode::PerMenu, ClaMode::Order] {
        let set: BTreeSet<usize> = census
            .records
            .iter()
            .filter(|r| {
                check_cla(&r.choice, mode)
                    .expect("single mode never errors")
                    .holds
            })
            .map(|r| r.index)
            .collect();
        ensure(
            set.len() == 324 && census.records.len() - set.len() == 540,
            || format!("{mode:?}: {} holders", set.len()),
        )?;
        holders.push(set);
    }
    ensure(holders.iter().all(|h| *h == holders[0]), || {
        "holder sets differ across modes".into()
    })?;
    let oracle: BTreeSet<usize> = census
        .records
        .iter()
        .filter(|r| warp_la(&to_picks(&r.choice), 4))
        .map(|r| r.index)
        .collect();
    ensure(oracle == holders[0], || {
        format!("literal oracle finds {} holders", oracle.len())
    })?;
    for r in &census.records {
        check_cla(&r.choice, ClaMode::All).map_err(|e| e.to_string())?;
    }
    Ok("324 holders / 540 non-holders under direct, per-menu and order; identical sets".into())
}

fn class_breakdowns(census: &Census) -> Outcome {
    for r in &census.records {
        let oracle = class_of(&to_picks(&r.choice), 4);
        ensure(r.class.position() == oracle, || {
            format!("record {} class mismatch", r.index)
        })?;
    }
    let expected = [
        (Model::Rgt, [8, 1, 1, 1]),
        (Model::Lr, [7, 1, 1, 1]),
        (Model::Sr, [12, 1, 1, 1]),
        (Model::Sqb, [3, 1, 1, 1]),
    ];
    let frozen = golden("class_breakdowns.json");
    for (model, want) in expected {
        let got = class_breakdown(&census.records, model);
        ensure(got == want, || format!("{model}: {got:?} != {want:?}"))?;
    }
    for model in Model::HEADLINE {
        let got = class_breakdown(&census.records, model);
        let row = &frozen[model.name()];
        let stored = [
            "four_cycle",
            "source_and_sink",
            "source_no_sink",
            "sink_no_source",
        ]
        .map(|k| row[k].as_u64().unwrap_or(u64::MAX) as usize);
        ensure(got == stored, || {
            format!("{model}: {got:?} differs from golden {stored:?}")
        })?;
    }
    Ok("RGT (8,1,1,1) LR (7,1,1,1) SR (12,1,1,1) SQB (3,1,1,1)".into())
}

fn wwarp_cases(census: &Census) -> Outcome {
    let cases = wwarp_failure_census(&census.records);
    let failures: Vec<usize> = cases.iter().map(|k| k.failures).collect();
    ensure(failures == [180, 276, 104, 0], || {
        format!("failures by case {failures:?}")
    })?;
    let total: usize = failures.iter().sum();
    let holders = census.records.len() - total;
    ensure(total == 560 && holders == 304, || {
        format!("total {total}, holders {holders}")
    })?;

    let frozen = golden("wwarp_cases.json");
    for (name, case) in ["I", "II", "III", "IV"].iter().zip(&cases) {
        ensure(
            frozen[name]["failures"].as_u64() == Some(case.failures as u64),
            || format!("case {name} differs from golden"),
        )?;
    }
    let mut oracle = [0usize; 4];
    for r in &census.records {
        let p = to_picks(&r.choice);
        let wins = (1..4u8).filter(|&y| p[pair(0, y) as usize] == 0).count();
        if !wwarp(&p, 4) {
            oracle[[3, 0, 1, 2][wins]] += 1;
        }
    }
    ensure(oracle.to_vec() == failures, || {
        format!("literal oracle {oracle:?}")
    })?;
    Ok("failures 180 / 276 / 104, total 560, holders 304".into())
}

fn sr_not_rsm(census: &Census) -> Outcome {
    // The listed choices fix the binary pattern rather than the picks from
    // the nested menus, so records are matched up to relabeling.
    let found: BTreeSet<Vec<u8>> = census
        .records
        .iter()
        .filter(|r| r.holds(Model::Sr) == Some(true) && r.holds(Model::Rsm) == Some(false))
        .map(|r| min_form(&to_picks(&r.choice), 4))
        .collect();
    let expected: BTreeSet<Vec<u8>> = ["sr02", "sr04", "sr05", "sr09"]
        .iter()
        .map(|name| min_form(&to_picks(&fixture(name).unwrap().1), 4))
        .collect();
    ensure(found.len() == 4, || {
        format!("{} SR-not-RSM records", found.len())
    })?;
    ensure(found == expected, || {
        "SR-not-RSM records are not sr02, sr04, sr05, sr09".into()
    })?;
    for name in ["sr02", "sr04", "sr05", "sr09"] {
        let c = fixture(name).unwrap().1;
        ensure(
            list_reproduces(
                &to_picks(&c),
                4,
                &parse_list(SR_LISTS[name[2..].parse::<usize>().unwrap() - 1]),
            ),
            || format!("{name}: listed rationales do not replay"),
        )?;
    }
    Ok("exactly sr02, sr04, sr05, sr09 are SR but not RSM".into())
}

/// The fifteen explicit lists of rationales, one per sequentially
/// rationalizable class. `|` separates rationales; `trans xyzw` is the full
/// linear order.
const SR_LISTS: [&str; 15] = [
    "a>b, b>d, d>e, a>d, b>e | e>a",
    "b>e | e>a | trans abde",
    "a>d, b>d, b>e | d>e, e>a, a>b",
    "d>e | e>a | trans abde",
    "b>d | d>e | e>a | a>b, b>e, a>d",
    "e>a | trans abde",
    "e>a, a>d | trans abde",
    "a>b, d>e | trans bead",
    "b>d | a>b, a>d, d>e | b>e, d>e, e>a",
    "e>a, a>b | trans abde",
    "e>a, a>b, b>d | a>d, d>e, b>e",
    "a>b, a>d | trans bdea",
    "trans abde",
    "d>e | trans aebd",
    "b>d | trans dabe",
];

fn parse_list(text: &str) -> Vec<Rel> {
    text.split('|')
        .map(str::trim)
        .map(|r| match r.strip_prefix("trans ") {
            Some(order) => chain(order),
            None => rel_labels(r),
        })
        .collect()
}

fn sqb_triple(g: &GroundSet, order: &str, z: &str, q: &str) -> SqbTriple {
    SqbTriple::new(
        LinearOrder::from_labels(g, order).unwrap(),
        g.parse_item(z).unwrap(),
        g.parse_menu(q).unwrap(),
    )
    .unwrap()
}

fn witness_replay(census: &Census) -> Outcome {
    let mut replayed = 0;
    for r in &census.records {
        for v in r
            .verdicts
            .values()
            .filter(|v| v.holds && v.witness.is_some())
        {
            ensure(replay(&r.choice, v), || {
                format!("record {} {} witness fails", r.index, v.model)
            })?;
            replayed += 1;
        }
    }

    let sr_classes: BTreeSet<Vec<u8>> = census
        .records
        .iter()
        .filter(|r| r.holds(Model::Sr) == Some(true))
        .map(|r| min_form(&to_picks(&r.choice), 4))
        .collect();
    let listed: BTreeSet<Vec<u8>> = (1..=15)
        .map(|i| min_form(&to_picks(&fixture(&format!("sr{i:02}")).unwrap().1), 4))
        .collect();
    ensure(listed.len() == 15 && listed == sr_classes, || {
        "the fifteen listed choices are not the SR classes".into()
    })?;

    let g = standard4();
    for (i, text) in SR_LISTS.iter().enumerate() {
        let c = fixture(&format!("sr{:02}", i + 1)).unwrap().1;
        ensure(list_reproduces(&to_picks(&c), 4, &parse_list(text)), || {
            format!("list ({}) does not reproduce its choice", i + 1)
        })?;
    }

    let triples = [
        ("sr01", SqbVariant::Weak, "abde", "e", "bd"),
        ("sr06", SqbVariant::Extreme, "abde", "e", "bd"),
        ("sr06", SqbVariant::Weak, "bdea", "a", "e"),
        ("sr12", SqbVariant::Extreme, "bdea", "a", "e"),
        ("sr14", SqbVariant::Extreme, "aebd", "d", "ab"),
        ("sr14", SqbVariant::Weak, "abde", "e", "ad"),
        ("sr15", SqbVariant::Extreme, "dabe", "b", "a"),
    ];
    for (name, variant, order, z, q) in triples {
        let c = fixture(name).unwrap().1;
        let t = sqb_triple(&g, order, z, q);
        let ok = all_menus(4)
            .iter()
            .all(|&m| sqb_predict(&t, variant, m) == c.pick(m));
        ensure(ok, || {
            format!("{name}: {variant:?} triple ({order}, {z}, {q}) fails")
        })?;
    }

    let partial_orders: [(&str, &[(char, char)]); 9] = [
        ("sr01", &[('b', 'a'), ('d', 'a'), ('e', 'a')]),
        ("sr04", &[('d', 'a'), ('e', 'a'), ('a', 'b')]),
        ("sr06", &[('a', 'b'), ('e', 'b'), ('a', 'd'), ('e', 'd')]),
        ("sr07", &[('a', 'b'), ('e', 'b'), ('d', 'e'), ('a', 'e')]),
        ("sr02", &[('e', 'a'), ('b', 'a'), ('a', 'd'), ('e', 'd')]),
        ("sr10", &[('a', 'e'), ('b', 'e'), ('a', 'd'), ('e', 'd')]),
        ("sr12", &[('b', 'e'), ('a', 'e'), ('d', 'e')]),
        ("sr14", &[('e', 'b'), ('d', 'b')]),
        ("sr15", &[('d', 'a'), ('b', 'a')]),
    ];
    for (name, constraints) in partial_orders {
        let c = fixture(name).unwrap().1;
        let mut got: Vec<String> = lr_orders(&c).iter().map(|o| o.describe(&g)).collect();
        got.sort();
        let want = linear_extensions(constraints);
        ensure(got == want, || {
            format!("{name}: lists {got:?} != extensions {want:?}")
        })?;
    }
    ensure(lr_orders(&fixture("c2rat").unwrap().1).len() == 24, || {
        "the rationalizable choice should accept every list".into()
    })?;
    Ok(format!(
        "{replayed} census witnesses, 15 explicit lists, 7 status-quo triples, 9 list conditions"
    ))
}

fn reduction_validation() -> Outcome {
    let relations = asymmetric_relations(3);
    ensure(relations.len() == 27, || {
        format!("{} relations on 3 items", relations.len())
    })?;
    let labeled = all_labeled(3);
    let mut sr_count = 0;
    for p in &labeled {
        let mut oracle = false;
        'search: for a in &relations {
            if list_reproduces(p, 3, &[*a]) {
                oracle = true;
                break;
            }
            for b in &relations {
                if list_reproduces(p, 3, &[*a, *b]) {
                    oracle = true;
                    break 'search;
                }
                for c in &relations {
                    if list_reproduces(p, 3, &[*a, *b, *c]) {
                        oracle = true;
                        break 'search;
                    }
                }
            }
        }
        let decided = check_sr(&from_picks(3, p)).holds;
        ensure(decided == oracle, || format!("n=3 SR mismatch on {p:?}"))?;
        sr_count += usize::from(oracle);
    }

    let relations = asymmetric_relations(4);
    ensure(relations.len() == 729, || {
        format!("{} relations on 4 items", relations.len())
    })?;
    let ms = menus(4);
    let tables: Vec<[u8; 16]> = relations
        .iter()
        .map(|r| {
            let mut t = [0u8; 16];
            for m in 1u8..16 {
                t[m as usize] = max_set(r, m);
            }
            t
        })
        .collect();
    let mut rsm_count = 0;
    for c in enumerate_normalized(4) {
        let p = to_picks(&c);
        let oracle = tables.iter().any(|first| {
            ms.iter()
                .all(|&m| first[m as usize] & (1 << p[m as usize]) != 0)
                && tables.iter().any(|second| {
                    ms.iter()
                        .all(|&m| second[first[m as usize] as usize] == 1 << p[m as usize])
                })
        });
        let decided = check_rsm(&c, RsmMode::Schedule)
            .map_err(|e| e.to_string())?
            .holds;
        ensure(decided == oracle, || format!("RSM mismatch on {c:?}"))?;
        rsm_count += usize::from(oracle);
    }
    ensure(rsm_count == 11, || {
        format!("pair oracle finds {rsm_count} RSM choices")
    })?;
    Ok(format!(
        "n=3 SR agrees on all {} choices ({sr_count} SR); RSM agrees with 729^2 pairs on 864 ({rsm_count} RSM)",
        labeled.len()
    ))
}

fn property_suites(census: &Census) -> Outcome {
    let report = verify_implications(&census.records);
    ensure(report.is_clean(), || {
        format!("audit: {:?}", report.violations)
    })?;
    for r in &census.records {
        for (a, b) in IMPLICATIONS {
            ensure(
                !(r.holds(a) == Some(true) && r.holds(b) == Some(false)),
                || format!("record {}: {a} without {b}", r.index),
            )?;
        }
    }

    let modes = Modes::default();
    let verdicts = |c: &ChoiceFunction| -> Result<Vec<bool>, String> {
        Model::ALL
            .iter()
            .map(|&m| {
                check(c, m, &modes)
                    .map(|v| v.holds)
                    .map_err(|e| e.to_string())
            })
            .collect()
    };
    let mut n3_pairs = 0;
    for c in all_choices(3) {
        let base = verdicts(&c)?;
        for s in all_permutations(3) {
            ensure(verdicts(&apply_permutation(&c, s))? == base, || {
                format!("n=3 invariance fails on {c:?}")
            })?;
            n3_pairs += 1;
        }
    }
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed);
    let perms = all_permutations(4);
    for _ in 0..100 {
        let r = &census.records[rng.gen_range(0..census.records.len())];
        let s = &perms[rng.gen_range(0..perms.len())];
        let moved = verdicts(&apply_permutation(&r.choice, s))?;
        let base: Vec<bool> = Model::ALL.iter().map(|&m| r.holds(m).unwrap()).collect();
        ensure(moved == base, || {
            format!("n=4 invariance fails on record {}", r.index)
        })?;
    }

    let reference = to_csv(&census.records);
    for jobs in [1, 4] {
        let again =
            run_census(&standard4(), &Model::ALL, &modes, jobs).map_err(|e| e.to_string())?;
        ensure(to_csv(&again.records) == reference, || {
            format!("CSV differs with --jobs {jobs}")
        })?;
    }
    Ok(format!(
        "lattice clean on 864, invariance on {n3_pairs} n=3 pairs and 100 sampled n=4 pairs, CSV byte-identical"
    ))
}

fn main() {
    let (census, elapsed) = full_census(1);
    let criteria: Vec<Criterion> = vec![
        ("count table", Box::new(|| count_table(&census, elapsed))),
        ("normalized enumeration", Box::new(normalized_transversal)),
        (
            "limited attention formulations",
            Box::new(|| attention_formulations(&census)),
        ),
        ("class breakdowns", Box::new(|| class_breakdowns(&census))),
        ("weak WARP cases", Box::new(|| wwarp_cases(&census))),
        ("SR but not RSM", Box::new(|| sr_not_rsm(&census))),
        ("witness replay", Box::new(|| witness_replay(&census))),
        ("reduction validation", Box::new(reduction_validation)),
        ("property suites", Box::new(|| property_suites(&census))),
    ];
    let mut failed = 0;
    for (i, (name, run)) in criteria.iter().enumerate() {
        let outcome = std::panic::catch_unwind(std::panic::AssertUnwindSafe(run))
            .unwrap_or_else(|_| Err("panicked".into()));
        match outcome {
            Ok(detail) => println!("PASS criterion {}: {name}: {detail}", i + 1),
            Err(why) => {
                failed += 1;
                println!("FAIL criterion {}: {name}: {why}", i + 1);
            }
        }
    }
    println!(
        "acceptance: {} passed, {failed} failed",
        criteria.len() - failed
    );
    if failed > 0 {
        std::process::exit(1);
    }
}
