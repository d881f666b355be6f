//! Command-line front end.
//!
//! [`run`] never panics on bad input; it maps every failure to an exit code:
//! 0 success, 1 input error, 2 internal consistency failure, 3 a negative
//! isomorphism answer.

use std::fmt::Write as _;
use std::io::{Read, Write};
use std::path::PathBuf;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::{json, Map, Value};

use crate::census::{
    display_order, run_census, to_csv, verify_implications, wwarp_cases_json, wwarp_failure_census,
};
use crate::deciders::{
    check, classify, list_switches, parse_models, replay::replay, verdict_json, ClaMode, Model,
    ModelVerdict, Modes, RsmMode, Witness,
};
use crate::error::Error;
use crate::fixtures::fixture;
use crate::model::{
    base_tournament, canonicalize_greedy, canonicalize_min, classify_tournament, is_isomorphic,
    parse_choice, serialize_choice, ChoiceFunction, GroundSet,
};

pub const EXIT_OK: i32 = 0;
pub const EXIT_INPUT: i32 = 1;
pub const EXIT_CONSISTENCY: i32 = 2;
pub const EXIT_NOT_ISOMORPHIC: i32 = 3;

#[derive(Debug, Parser)]
#[command(
    name = "choice-census",
    version,
    about = "Classify choice functions on up to four items"
)]
pub struct Cli {
    /// Ground set size for `census` (2, 3 or 4).
    #[arg(long, global = true, default_value_t = 4)]
    pub n: usize,
    /// Comma-separated model names, `headline`, or `all`.
    #[arg(long, global = true, default_value = "all")]
    pub models: String,
    #[arg(long, global = true, value_enum)]
    pub format: Option<Format>,
    /// Write output here instead of stdout.
    #[arg(long, global = true)]
    pub output: Option<PathBuf>,
    /// Worker threads for `census`; 0 picks one per core.
    #[arg(long, global = true, default_value_t = 0)]
    pub jobs: usize,
    /// Run the full consistency audit. Exits 2 on any failure.
    #[arg(long, global = true)]
    pub check: bool,
    /// Decider modes, e.g. `rsm=axiom,cla=per-menu`, or `all`.
    #[arg(long, global = true, default_value = "")]
    pub mode: String,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Table,
    Json,
    Csv,
    Dot,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum CanonMethod {
    Greedy,
    Min,
}

/// Choice inputs are a file path, `-` for stdin, or `fixture:NAME`.
#[derive(Debug, Subcommand)]
pub enum Command {
    /// Classify every normalized choice and print the count table.
    Census,
    /// Decide the selected models for one choice.
    Classify {
        input: String,
        /// Include witnesses.
        #[arg(long)]
        witness: bool,
    },
    /// Print the witness or counterexample for one model.
    Witness {
        input: String,
        #[arg(long, default_value = "sr")]
        model: String,
        /// For schedule witnesses, show the surviving items after each stage.
        #[arg(long)]
        trace: bool,
    },
    /// List the switches of a choice.
    Switches { input: String },
    /// Print a canonical relabeling.
    Canon {
        input: String,
        #[arg(long, value_enum, default_value_t = CanonMethod::Greedy)]
        method: CanonMethod,
    },
    /// Test two choices for isomorphism.
    Iso { first: String, second: String },
    /// Write the binary tournament as a DOT digraph.
    ExportDot { input: String },
}

/// A failure with its exit code.
struct Failure {
    code: i32,
    message: String,
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let code = match e {
            Error::ModeDisagreement { .. } => EXIT_CONSISTENCY,
            _ => EXIT_INPUT,
        };
        Failure {
            code,
            message: e.to_string(),
        }
    }
}

fn input_failure(message: impl Into<String>) -> Failure {
    Failure {
        code: EXIT_INPUT,
        message: message.into(),
    }
}

/// Output of a command: the text and the exit code to report.
struct Output {
    text: String,
    code: i32,
}

impl Output {
    fn ok(text: String) -> Self {
        Self {
            text,
            code: EXIT_OK,
        }
    }
}

/// Parses `args` (program name first) and runs the command.
pub fn run<I, T>(args: I, stdin: &mut dyn Read, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            use clap::error::ErrorKind;
            let rendered = e.render().to_string();
            return match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => {
                    let _ = out.write_all(rendered.as_bytes());
                    EXIT_OK
                }
                _ => {
                    let _ = err.write_all(rendered.as_bytes());
                    EXIT_INPUT
                }
            };
        }
    };
    let result = execute(&cli, stdin);
    match result {
        Ok(output) => {
            let written = match &cli.output {
                Some(path) => std::fs::write(path, &output.text).map_err(|e| e.to_string()),
                None => out
                    .write_all(output.text.as_bytes())
                    .map_err(|e| e.to_string()),
            };
            match written {
                Ok(()) => output.code,
                Err(e) => {
                    let _ = writeln!(err, "error: cannot write output: {e}");
                    EXIT_INPUT
                }
            }
        }
        Err(f) => {
            let _ = writeln!(err, "error: {}", f.message);
            f.code
        }
    }
}

fn execute(cli: &Cli, stdin: &mut dyn Read) -> Result<Output, Failure> {
    let models = parse_models(&cli.models)?;
    let mut modes = Modes::parse(&cli.mode)?;
    if cli.check {
        modes = Modes {
            rsm: RsmMode::All,
            cla: ClaMode::All,
        };
    }
    let mut read = |spec: &str| load_choice(spec, stdin);
    match &cli.command {
        Command::Census => cmd_census(cli, &models, &modes),
        Command::Classify { input, witness } => {
            let (g, c) = read(input)?;
            cmd_classify(cli, &g, &c, &models, &modes, *witness)
        }
        Command::Witness {
            input,
            model,
            trace,
        } => {
            let (g, c) = read(input)?;
            let model: Model = model.parse()?;
            cmd_witness(cli, &g, &c, model, &modes, *trace)
        }
        Command::Switches { input } => {
            let (g, c) = read(input)?;
            cmd_switches(cli, &g, &c)
        }
        Command::Canon { input, method } => {
            let (g, c) = read(input)?;
            cmd_canon(cli, &g, &c, *method)
        }
        Command::Iso { first, second } => {
            let (g, a) = read(first)?;
            let (h, b) = read(second)?;
            cmd_iso(cli, &g, &a, &h, &b)
        }
        Command::ExportDot { input } => {
            let (g, c) = read(input)?;
            cmd_export_dot(cli, &g, &c)
        }
    }
}

fn load_choice(spec: &str, stdin: &mut dyn Read) -> Result<(GroundSet, ChoiceFunction), Failure> {
    if let Some(name) = spec.strip_prefix("fixture:") {
        return Ok(fixture(name)?);
    }
    let text = if spec == "-" {
        let mut buf = String::new();
        stdin
            .read_to_string(&mut buf)
            .map_err(|e| input_failure(format!("cannot read stdin: {e}")))?;
        buf
    } else {
        std::fs::read_to_string(spec)
            .map_err(|e| input_failure(format!("cannot read {spec}: {e}")))?
    };
    Ok(parse_choice(&text)?)
}

fn format_or(cli: &Cli, default: Format, allowed: &[Format]) -> Result<Format, Failure> {
    let format = cli.format.unwrap_or(default);
    if allowed.contains(&format) {
        Ok(format)
    } else {
        Err(input_failure(format!(
            "format {format:?} is not available for this command"
        )))
    }
}

fn pretty(value: &Value) -> String {
    let mut text = serde_json::to_string_pretty(value).expect("JSON values always serialize");
    text.push('\n');
    text
}

fn cmd_census(cli: &Cli, models: &[Model], modes: &Modes) -> Result<Output, Failure> {
    let format = format_or(
        cli,
        Format::Table,
        &[Format::Table, Format::Json, Format::Csv],
    )?;
    let g = GroundSet::standard(cli.n)?;
    let census = run_census(&g, models, modes, cli.jobs)?;

    let mut problems = Vec::new();
    let audit = cli.check.then(|| verify_implications(&census.records));
    if let Some(report) = &audit {
        for v in &report.violations {
            problems.push(format!(
                "record {}: {} holds but {} fails",
                v.index, v.antecedent, v.consequent
            ));
        }
        for (index, what) in &report.equivalence_failures {
            problems.push(format!("record {index}: {what} fails"));
        }
        for r in &census.records {
            for v in r
                .verdicts
                .values()
                .filter(|v| v.holds && !replay(&r.choice, v))
            {
                problems.push(format!(
                    "record {}: {} witness does not replay",
                    r.index, v.model
                ));
            }
        }
    }

    let mut text = match format {
        Format::Csv => to_csv(&census.records),
        Format::Json => {
            let mut doc = Map::new();
            doc.insert("n".into(), json!(census.n));
            doc.insert("total".into(), json!(census.counts.total));
            doc.insert("counts".into(), census.counts.to_json()["counts"].clone());
            doc.insert("class_breakdowns".into(), census.counts.breakdowns_json());
            if census.n == 4 && models.contains(&Model::Wwarp) {
                doc.insert(
                    "wwarp_cases".into(),
                    wwarp_cases_json(&wwarp_failure_census(&census.records)),
                );
            }
            if let Some(report) = &audit {
                let mut value = report.to_json();
                value["problems"] = json!(problems);
                doc.insert("audit".into(), value);
            }
            pretty(&Value::Object(doc))
        }
        _ => census.counts.to_table(),
    };
    if let (Some(report), Format::Table) = (&audit, format) {
        let _ = writeln!(
            text,
            "audit: {} records, {} problems",
            report.records,
            problems.len()
        );
        for note in &report.notes {
            let _ = writeln!(text, "note: {note}");
        }
        for p in &problems {
            let _ = writeln!(text, "problem: {p}");
        }
    }
    let code = if problems.is_empty() {
        EXIT_OK
    } else {
        EXIT_CONSISTENCY
    };
    Ok(Output { text, code })
}

fn witness_text(g: &GroundSet, w: &Witness) -> String {
    match w {
        Witness::Order(o) => format!("order {}", o.describe(g)),
        Witness::Schedule(s) => s.describe(g),
        Witness::StatusQuo(sq) => {
            let triple = |t: &crate::deciders::SqbTriple| {
                format!(
                    "order {} z={} Q={{{}}}",
                    t.order.describe(g),
                    g.label(t.status_quo),
                    g.menu_label(t.q)
                )
            };
            let mut parts = Vec::new();
            if let Some(t) = &sq.esqb {
                parts.push(format!("esqb {}", triple(t)));
            }
            if let Some(t) = &sq.wsqb {
                parts.push(format!("wsqb {}", triple(t)));
            }
            parts.join("; ")
        }
        Witness::Partitions(p) => p
            .parts
            .iter()
            .map(|&(m, b, d)| {
                format!(
                    "{}={}|{}",
                    g.menu_label(m),
                    g.menu_label(b),
                    g.menu_label(d)
                )
            })
            .collect::<Vec<_>>()
            .join(" "),
        Witness::Attention(chosen) => chosen
            .iter()
            .map(|&(m, x)| format!("{}:{}", g.menu_label(m), g.label(x)))
            .collect::<Vec<_>>()
            .join(" "),
    }
}

fn verdict_line(g: &GroundSet, v: &ModelVerdict, with_witness: bool) -> String {
    let mut line = format!("{:<15}{}", v.model.name(), v.holds);
    if with_witness {
        if let Some(w) = &v.witness {
            let _ = write!(line, "  {}", witness_text(g, w));
        }
        if v.counterexample.is_some() {
            let _ = write!(
                line,
                "  counterexample {}",
                verdict_json(g, v)["counterexample"]
            );
        }
    }
    line.push('\n');
    line
}

fn cmd_classify(
    cli: &Cli,
    g: &GroundSet,
    c: &ChoiceFunction,
    models: &[Model],
    modes: &Modes,
    with_witness: bool,
) -> Result<Output, Failure> {
    let format = format_or(cli, Format::Table, &[Format::Table, Format::Json])?;
    let verdicts = classify(c, &display_order(models.iter().copied()), modes)?;
    let class = classify_tournament(c);
    let text = match format {
        Format::Json => {
            let list: Vec<Value> = verdicts
                .iter()
                .map(|v| {
                    let mut value = verdict_json(g, v);
                    if !with_witness {
                        strip_witnesses(&mut value);
                    }
                    value
                })
                .collect();
            pretty(&json!({
                "choice": c.compact(g),
                "class": class.name(),
                "verdicts": list,
            }))
        }
        _ => {
            let mut text = format!("choice {}\nclass {}\n", c.compact(g), class);
            for v in &verdicts {
                text.push_str(&verdict_line(g, v, with_witness));
            }
            text
        }
    };
    Ok(Output::ok(text))
}

fn strip_witnesses(value: &mut Value) {
    if let Some(obj) = value.as_object_mut() {
        obj.remove("witness");
        if let Some(Value::Array(parts)) = obj.get_mut("parts") {
            parts.iter_mut().for_each(strip_witnesses);
        }
    }
}

fn cmd_witness(
    cli: &Cli,
    g: &GroundSet,
    c: &ChoiceFunction,
    model: Model,
    modes: &Modes,
    trace: bool,
) -> Result<Output, Failure> {
    let format = format_or(cli, Format::Json, &[Format::Table, Format::Json])?;
    let v = check(c, model, modes)?;
    let schedule = match (&v.witness, trace) {
        (Some(Witness::Schedule(s)), true) => Some(s),
        _ => None,
    };
    let text = match format {
        Format::Json => {
            let mut value = verdict_json(g, &v);
            if let Some(s) = schedule {
                let mut steps = Map::new();
                for &menu in crate::model::all_menus(c.n()) {
                    let sets: Vec<Value> = s
                        .trace(menu)
                        .into_iter()
                        .map(|m| json!(g.menu_label(m)))
                        .collect();
                    steps.insert(g.menu_label(menu), Value::Array(sets));
                }
                value["trace"] = Value::Object(steps);
            }
            pretty(&value)
        }
        _ => {
            let mut text = verdict_line(g, &v, true);
            if let Some(s) = schedule {
                for &menu in crate::model::all_menus(c.n()) {
                    let sets: Vec<String> =
                        s.trace(menu).into_iter().map(|m| g.menu_label(m)).collect();
                    let _ = writeln!(text, "  {}", sets.join(" -> "));
                }
            }
            text
        }
    };
    Ok(Output::ok(text))
}

fn cmd_switches(cli: &Cli, g: &GroundSet, c: &ChoiceFunction) -> Result<Output, Failure> {
    let format = format_or(cli, Format::Table, &[Format::Table, Format::Json])?;
    let switches = list_switches(c);
    let text = match format {
        Format::Json => pretty(&Value::Array(
            switches
                .iter()
                .map(|s| {
                    json!({
                        "base": g.menu_label(s.base_menu),
                        "removed": g.item_label(s.removed),
                        "before": g.item_label(s.before),
                        "after": g.item_label(s.after),
                    })
                })
                .collect(),
        )),
        _ => {
            let mut text = String::new();
            for s in &switches {
                let _ = writeln!(
                    text,
                    "({}, {}): {} -> {}  [p q r] = [{} {} {}]",
                    g.menu_label(s.base_menu.without(s.removed)),
                    g.menu_label(s.base_menu),
                    g.label(s.before),
                    g.label(s.after),
                    g.label(s.before),
                    g.label(s.after),
                    g.label(s.removed),
                );
            }
            let _ = writeln!(text, "{} switches", switches.len());
            text
        }
    };
    Ok(Output::ok(text))
}

fn cmd_canon(
    cli: &Cli,
    g: &GroundSet,
    c: &ChoiceFunction,
    method: CanonMethod,
) -> Result<Output, Failure> {
    let format = format_or(cli, Format::Json, &[Format::Table, Format::Json])?;
    let canonical = match method {
        CanonMethod::Greedy => canonicalize_greedy(c).0,
        CanonMethod::Min => canonicalize_min(c),
    };
    let relabel = is_isomorphic(c, &canonical).expect("a canonical form is a relabeling");
    let text = match format {
        Format::Json => format!("{}\n", serialize_choice(g, &canonical)),
        _ => format!(
            "{}\npermutation {}\n",
            canonical.compact(g),
            relabel.describe(g)
        ),
    };
    Ok(Output::ok(text))
}

fn cmd_iso(
    cli: &Cli,
    g: &GroundSet,
    a: &ChoiceFunction,
    h: &GroundSet,
    b: &ChoiceFunction,
) -> Result<Output, Failure> {
    let format = format_or(cli, Format::Table, &[Format::Table, Format::Json])?;
    if g.n() != h.n() {
        return Err(input_failure(
            "choices are over ground sets of different sizes",
        ));
    }
    let found = is_isomorphic(a, b);
    let text = match (format, &found) {
        (Format::Json, Some(p)) => {
            pretty(&json!({ "isomorphic": true, "permutation": p.describe(g) }))
        }
        (Format::Json, None) => pretty(&json!({ "isomorphic": false, "permutation": null })),
        (_, Some(p)) => format!("isomorphic\npermutation {}\n", p.describe(g)),
        (_, None) => "not isomorphic\n".to_string(),
    };
    let code = if found.is_some() {
        EXIT_OK
    } else {
        EXIT_NOT_ISOMORPHIC
    };
    Ok(Output { text, code })
}

fn cmd_export_dot(cli: &Cli, g: &GroundSet, c: &ChoiceFunction) -> Result<Output, Failure> {
    format_or(cli, Format::Dot, &[Format::Dot])?;
    let mut text = format!(
        "// class: {}\ndigraph tournament {{\n",
        classify_tournament(c)
    );
    for x in 0..g.n() {
        let _ = writeln!(text, "  {};", g.label(x));
    }
    for (x, y) in base_tournament(c).edges() {
        let _ = writeln!(text, "  {} -> {};", g.label(x), g.label(y));
    }
    text.push_str("}\n");
    Ok(Output::ok(text))
}
