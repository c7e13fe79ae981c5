//! Command-line front end: sequence emission, generalized Pascal triangles,
//! family counting and enumeration, and identity verification.
//!
//! Exit codes: 0 success (all checks pass), 1 verification mismatch,
//! 2 usage error, 3 enumeration budget or listing cap exceeded.

use std::fmt::Write as _;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use schreier_core::enumerate::{
    enumerate_compositions, enumerate_family, EnumerationBudget, FamilySpec, MultSeq,
};
use schreier_core::sequences::{self, SequenceSpec};
use schreier_core::verify::{
    verify_all_with, verify_with, ClosedFormId, Grid, TheoremId, VerificationReport,
    VerifyOptions,
};
use schreier_core::{closed_form, pascal, BigCount, Error};

#[derive(Parser)]
#[command(
    name = "schreier",
    version,
    about = "Exact counting and enumeration of Schreier-type set and multiset families"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,

    /// Output format. b-file applies to seq only.
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    format: Format,

    /// Search-node budget for enumeration, as an exact decimal.
    #[arg(long, global = true, default_value = "100000000")]
    budget: BigCount,

    /// Write output to FILE instead of standard output.
    #[arg(long, global = true, value_name = "FILE")]
    out: Option<PathBuf>,
}

#[derive(Subcommand)]
enum Command {
    /// Emit terms of a sequence over an inclusive index range.
    Seq {
        /// Which sequence: fib, sfib (--s), kseq (--u), or tau (--s).
        #[arg(long, value_enum)]
        kind: SeqKind,
        /// Step parameter for sfib and tau.
        #[arg(long)]
        s: Option<u64>,
        /// Delay parameter for kseq.
        #[arg(long)]
        u: Option<u64>,
        /// First index, inclusive.
        #[arg(long, allow_hyphen_values = true)]
        from: i64,
        /// Last index, inclusive.
        #[arg(long, allow_hyphen_values = true)]
        to: i64,
    },
    /// Print rows 0..=ROWS of the s-Pascal triangle.
    Triangle {
        /// Box capacity; 1 gives the ordinary Pascal triangle.
        #[arg(long)]
        s: u64,
        /// Last row to print.
        #[arg(long)]
        rows: u64,
    },
    /// Count a family by closed form, enumeration, or both.
    Count {
        #[command(flatten)]
        family: FamilyArgs,
        /// closed evaluates the formula; enum walks the family; both
        /// cross-checks and exits 1 on disagreement.
        #[arg(long, value_enum, default_value_t = Method::Closed)]
        method: Method,
    },
    /// Enumerate a family; --list prints each member in canonical form.
    Enum {
        #[command(flatten)]
        family: FamilyArgs,
        /// Print the members, one per line, before the count.
        #[arg(long)]
        list: bool,
    },
    /// Check the counting identities over a parameter grid.
    Verify {
        /// Theorem id (T1, T2, T3, T4_S, T4_A, T_AB, COR1, DIAG_SUM,
        /// TAU_REC, MULT_INVARIANCE, D_FIB, HOCKEY, STARS_BARS).
        #[arg(long)]
        theorem: Option<String>,
        /// Run every theorem on its default grid.
        #[arg(long)]
        all: bool,
        /// Range for the s sweep, as a..b or a single value.
        #[arg(long)]
        s: Option<String>,
        /// Range for the u sweep.
        #[arg(long)]
        u: Option<String>,
        /// Range for the p sweep.
        #[arg(long)]
        p: Option<String>,
        /// Range for the r sweep.
        #[arg(long)]
        r: Option<String>,
        /// Range for n.
        #[arg(long)]
        n: Option<String>,
        /// Perturb one closed form by +1 so the harness must fail; used by
        /// the test suite to prove mismatches are detected.
        #[arg(long, hide = true, value_name = "COUNTER")]
        inject_off_by_one: Option<String>,
    },
}

#[derive(Copy, Clone, ValueEnum)]
enum Format {
    Text,
    Csv,
    Json,
    Bfile,
}

#[derive(Copy, Clone, ValueEnum)]
enum SeqKind {
    /// Classic Fibonacci, F(0) = 0.
    Fib,
    /// s-step Fibonacci.
    Sfib,
    /// K(n) = K(n-1) + K(n-u) with K(1..=u) = 1.
    #[value(alias = "ksen")]
    Kseq,
    /// tau(n) = K((s-1)(n-1) + 1).
    Tau,
}

#[derive(Copy, Clone, PartialEq, ValueEnum)]
enum Method {
    Closed,
    Enum,
    Both,
}

#[derive(Copy, Clone, PartialEq, ValueEnum)]
enum FamilyArg {
    #[value(name = "A", alias = "a")]
    A,
    #[value(name = "B", alias = "b")]
    B,
    #[value(name = "C", alias = "c")]
    C,
    #[value(name = "D", alias = "d")]
    D,
    #[value(name = "S", alias = "s")]
    S,
    #[value(name = "Ap", alias = "ap")]
    Ap,
    #[value(name = "Bp", alias = "bp")]
    Bp,
    #[value(name = "K", alias = "k")]
    K,
}

impl FamilyArg {
    fn name(self) -> &'static str {
        match self {
            FamilyArg::A => "A",
            FamilyArg::B => "B",
            FamilyArg::C => "C",
            FamilyArg::D => "D",
            FamilyArg::S => "S",
            FamilyArg::Ap => "Ap",
            FamilyArg::Bp => "Bp",
            FamilyArg::K => "K",
        }
    }
}

#[derive(Args)]
struct FamilyArgs {
    /// Family: A, B, C, D, S, Ap, Bp, or K (compositions).
    #[arg(long, value_enum)]
    family: FamilyArg,
    /// Capacity parameter for families A and C.
    #[arg(long)]
    s: Option<u64>,
    /// Gap parameter for family B.
    #[arg(long)]
    u: Option<u64>,
    /// Power for families S, Ap, Bp, and K.
    #[arg(long)]
    p: Option<u64>,
    /// Largest value (for K: the composed total).
    #[arg(long)]
    n: u64,
    /// Multiplicity caps for family B: minimal, uniform, or a comma list.
    #[arg(long)]
    caps: Option<String>,
}

/// What a count/enum invocation resolves to.
enum Target {
    Family(FamilySpec),
    Compositions { n: u64, p: u64 },
}

enum CliError {
    /// Exit 2 with a diagnostic.
    Usage(String),
    /// Exit 3 with a diagnostic.
    Budget(String),
    /// Exit 1; the disagreeing output has already been emitted.
    Mismatch(String),
}

impl CliError {
    fn code(&self) -> u8 {
        match self {
            CliError::Mismatch(_) => 1,
            CliError::Usage(_) => 2,
            CliError::Budget(_) => 3,
        }
    }

    fn message(&self) -> &str {
        match self {
            CliError::Usage(m) | CliError::Budget(m) | CliError::Mismatch(m) => m,
        }
    }
}

fn usage(message: impl Into<String>) -> CliError {
    CliError::Usage(message.into())
}

/// Library errors surface as usage problems except resource exhaustion,
/// which gets its own exit code.
fn from_core(err: Error) -> CliError {
    match err {
        Error::BudgetExceeded { .. } | Error::ListingCapExceeded { .. } => {
            CliError::Budget(err.to_string())
        }
        other => CliError::Usage(other.to_string()),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(err) => {
            if !err.message().is_empty() {
                eprintln!("error: {}", err.message());
            }
            ExitCode::from(err.code())
        }
    }
}

fn run(cli: &Cli) -> Result<(), CliError> {
    match &cli.command {
        Command::Seq {
            kind,
            s,
            u,
            from,
            to,
        } => run_seq(cli, *kind, *s, *u, *from, *to),
        Command::Triangle { s, rows } => run_triangle(cli, *s, *rows),
        Command::Count { family, method } => run_count(cli, family, *method),
        Command::Enum { family, list } => run_enum(cli, family, *list),
        Command::Verify {
            theorem,
            all,
            s,
            u,
            p,
            r,
            n,
            inject_off_by_one,
        } => run_verify(
            cli,
            theorem.as_deref(),
            *all,
            [
                ("s", s.as_deref()),
                ("u", u.as_deref()),
                ("p", p.as_deref()),
                ("r", r.as_deref()),
            ],
            n.as_deref(),
            inject_off_by_one.as_deref(),
        ),
    }
}

fn emit(cli: &Cli, output: &str) -> Result<(), CliError> {
    match &cli.out {
        None => {
            print!("{output}");
            Ok(())
        }
        Some(path) => std::fs::write(path, output)
            .map_err(|e| usage(format!("cannot write {}: {e}", path.display()))),
    }
}

fn require(value: Option<u64>, family: &str, flag: &str) -> Result<u64, CliError> {
    value.ok_or_else(|| usage(format!("family {family} requires --{flag}")))
}

fn forbid(value: Option<u64>, family: &str, flag: &str) -> Result<(), CliError> {
    if value.is_some() {
        return Err(usage(format!("family {family} does not take --{flag}")));
    }
    Ok(())
}

fn parse_caps(text: &str) -> Result<MultSeq, CliError> {
    match text {
        "minimal" => Ok(MultSeq::Minimal),
        "uniform" => Ok(MultSeq::Uniform),
        list => list
            .split(',')
            .map(|item| {
                item.trim()
                    .parse::<u64>()
                    .map_err(|_| usage(format!("--caps entry '{item}' is not a count")))
            })
            .collect::<Result<Vec<u64>, CliError>>()
            .map(MultSeq::Explicit),
    }
}

fn resolve_target(args: &FamilyArgs) -> Result<Target, CliError> {
    let name = args.family.name();
    if args.n == 0 {
        return Err(usage("--n must be at least 1"));
    }
    if args.caps.is_some() && args.family != FamilyArg::B {
        return Err(usage("--caps applies only to family B"));
    }
    let target = match args.family {
        FamilyArg::A => {
            forbid(args.u, name, "u")?;
            forbid(args.p, name, "p")?;
            Target::Family(FamilySpec::A {
                s: require(args.s, name, "s")?,
                n: args.n,
            })
        }
        FamilyArg::B => {
            forbid(args.s, name, "s")?;
            forbid(args.p, name, "p")?;
            let caps = parse_caps(args.caps.as_deref().unwrap_or("minimal"))?;
            Target::Family(FamilySpec::B {
                u: require(args.u, name, "u")?,
                caps,
                n: args.n,
            })
        }
        FamilyArg::C => {
            forbid(args.u, name, "u")?;
            forbid(args.p, name, "p")?;
            Target::Family(FamilySpec::C {
                s: require(args.s, name, "s")?,
                n: args.n,
            })
        }
        FamilyArg::D => {
            forbid(args.s, name, "s")?;
            forbid(args.u, name, "u")?;
            forbid(args.p, name, "p")?;
            Target::Family(FamilySpec::D { n: args.n })
        }
        FamilyArg::S | FamilyArg::Ap | FamilyArg::Bp => {
            forbid(args.s, name, "s")?;
            forbid(args.u, name, "u")?;
            let p = require(args.p, name, "p")?;
            Target::Family(match args.family {
                FamilyArg::S => FamilySpec::S { p, n: args.n },
                FamilyArg::Ap => FamilySpec::Ap { p, n: args.n },
                _ => FamilySpec::Bp { p, n: args.n },
            })
        }
        FamilyArg::K => {
            forbid(args.s, name, "s")?;
            forbid(args.u, name, "u")?;
            Target::Compositions {
                n: args.n,
                p: require(args.p, name, "p")?,
            }
        }
    };
    if let Target::Family(spec) = &target {
        spec.validate().map_err(from_core)?;
    }
    Ok(target)
}

/// The closed-form count for a target, or None for family D, which is
/// defined only by enumeration.
fn closed_count(target: &Target) -> Option<BigCount> {
    match target {
        Target::Family(FamilySpec::A { s, n }) => Some(closed_form::count_a(*s, *n)),
        Target::Family(FamilySpec::B { u, n, .. }) => Some(closed_form::count_b(*u, *n)),
        Target::Family(FamilySpec::C { s, n }) => Some(closed_form::count_c(*s, *n)),
        Target::Family(FamilySpec::D { .. }) => None,
        Target::Family(FamilySpec::S { p, n }) => Some(closed_form::count_s(*p, *n)),
        Target::Family(FamilySpec::Ap { p, n }) => Some(closed_form::count_ap(*p, *n)),
        Target::Family(FamilySpec::Bp { p, n }) => Some(closed_form::count_bp(*p, *n)),
        Target::Compositions { n, p } => Some(closed_form::count_k(*n, *p)),
    }
}

fn enumerated_count(target: &Target, budget: &EnumerationBudget) -> Result<BigCount, CliError> {
    match target {
        Target::Family(spec) => Ok(enumerate_family(spec, budget, false)
            .map_err(from_core)?
            .count),
        Target::Compositions { n, p } => Ok(enumerate_compositions(*n, *p, false)
            .map_err(from_core)?
            .count),
    }
}

fn run_seq(
    cli: &Cli,
    kind: SeqKind,
    s: Option<u64>,
    u: Option<u64>,
    from: i64,
    to: i64,
) -> Result<(), CliError> {
    let need = |value: Option<u64>, kind: &str, flag: &str| {
        value.ok_or_else(|| usage(format!("{kind} requires --{flag}")))
    };
    let stray = |value: Option<u64>, kind: &str, flag: &str| {
        if value.is_some() {
            return Err(usage(format!("{kind} does not take --{flag}")));
        }
        Ok(())
    };
    let spec = match kind {
        SeqKind::Fib => {
            stray(s, "fib", "s")?;
            stray(u, "fib", "u")?;
            SequenceSpec::ClassicFib
        }
        SeqKind::Sfib => {
            stray(u, "sfib", "u")?;
            SequenceSpec::SStepFib {
                s: need(s, "sfib", "s")?,
            }
        }
        SeqKind::Kseq => {
            stray(s, "kseq", "s")?;
            SequenceSpec::KSeq {
                u: need(u, "kseq", "u")?,
            }
        }
        SeqKind::Tau => {
            stray(u, "tau", "u")?;
            SequenceSpec::Tau {
                s: need(s, "tau", "s")?,
            }
        }
    };
    let terms = sequences::sequence_range(&spec, from, to).map_err(from_core)?;
    let output = match cli.format {
        Format::Text => {
            let values: Vec<String> = terms.iter().map(|(_, v)| v.to_string()).collect();
            values.join(" ") + "\n"
        }
        Format::Bfile => {
            let mut out = String::new();
            for (index, value) in &terms {
                writeln!(out, "{index} {value}").expect("string write");
            }
            out
        }
        Format::Csv => {
            let mut out = String::from("index,value\n");
            for (index, value) in &terms {
                writeln!(out, "{index},{value}").expect("string write");
            }
            out
        }
        Format::Json => {
            let records: Vec<Value> = terms
                .iter()
                .map(|(index, value)| json!({ "index": index, "value": value.to_string() }))
                .collect();
            to_pretty(&Value::Array(records))
        }
    };
    emit(cli, &output)
}

fn run_triangle(cli: &Cli, s: u64, rows: u64) -> Result<(), CliError> {
    if s < 1 {
        return Err(usage("--s must be at least 1"));
    }
    let triangle = pascal::s_pascal_rows(s, rows);
    let output = match cli.format {
        Format::Text => triangle.to_string(),
        Format::Csv => {
            let mut out = String::from("n,k,value\n");
            for (n, row) in triangle.rows().iter().enumerate() {
                for (k, value) in row.iter().enumerate() {
                    writeln!(out, "{n},{k},{value}").expect("string write");
                }
            }
            out
        }
        Format::Json => {
            let records: Vec<Value> = triangle
                .rows()
                .iter()
                .enumerate()
                .flat_map(|(n, row)| {
                    row.iter().enumerate().map(move |(k, value)| {
                        json!({ "n": n, "k": k, "value": value.to_string() })
                    })
                })
                .collect();
            to_pretty(&Value::Array(records))
        }
        Format::Bfile => return Err(usage("b-file output applies to seq only")),
    };
    emit(cli, &output)
}

fn run_count(cli: &Cli, args: &FamilyArgs, method: Method) -> Result<(), CliError> {
    let target = resolve_target(args)?;
    let budget = EnumerationBudget::new(cli.budget.clone());
    let no_closed = || {
        usage(format!(
            "family {} has no closed form; use --method enum",
            args.family.name()
        ))
    };
    let entries: Vec<(&str, BigCount)> = match method {
        Method::Closed => vec![("closed", closed_count(&target).ok_or_else(no_closed)?)],
        Method::Enum => vec![("enum", enumerated_count(&target, &budget)?)],
        Method::Both => {
            let closed = closed_count(&target).ok_or_else(no_closed)?;
            let enumerated = enumerated_count(&target, &budget)?;
            vec![("closed", closed), ("enum", enumerated)]
        }
    };
    let output = match cli.format {
        Format::Text => match entries.as_slice() {
            [(_, value)] => format!("{value}\n"),
            pairs => {
                let mut out = String::new();
                for (label, value) in pairs {
                    writeln!(out, "{label} {value}").expect("string write");
                }
                out
            }
        },
        Format::Csv => {
            let mut out = String::from("method,value\n");
            for (label, value) in &entries {
                writeln!(out, "{label},{value}").expect("string write");
            }
            out
        }
        Format::Json => {
            let records: Vec<Value> = entries
                .iter()
                .map(|(label, value)| count_record(args, label, value))
                .collect();
            to_pretty(&Value::Array(records))
        }
        Format::Bfile => return Err(usage("b-file output applies to seq only")),
    };
    emit(cli, &output)?;
    if let [(_, closed), (_, enumerated)] = entries.as_slice() {
        if closed != enumerated {
            return Err(CliError::Mismatch(
                "closed form and enumeration disagree".into(),
            ));
        }
    }
    Ok(())
}

fn count_record(args: &FamilyArgs, method: &str, value: &BigCount) -> Value {
    let mut record = serde_json::Map::new();
    record.insert("family".into(), json!(args.family.name()));
    if let Some(s) = args.s {
        record.insert("s".into(), json!(s));
    }
    if let Some(u) = args.u {
        record.insert("u".into(), json!(u));
    }
    if let Some(p) = args.p {
        record.insert("p".into(), json!(p));
    }
    record.insert("n".into(), json!(args.n));
    if let Some(caps) = &args.caps {
        record.insert("caps".into(), json!(caps));
    }
    record.insert("method".into(), json!(method));
    record.insert("value".into(), json!(value.to_string()));
    Value::Object(record)
}

fn run_enum(cli: &Cli, args: &FamilyArgs, list: bool) -> Result<(), CliError> {
    let target = resolve_target(args)?;
    let budget = EnumerationBudget::new(cli.budget.clone());
    let (count, members): (BigCount, Option<Vec<String>>) = match &target {
        Target::Family(spec) => {
            let result = enumerate_family(spec, &budget, list).map_err(from_core)?;
            (
                result.count,
                result
                    .members
                    .map(|members| members.iter().map(|m| m.to_string()).collect()),
            )
        }
        Target::Compositions { n, p } => {
            let result = enumerate_compositions(*n, *p, list).map_err(from_core)?;
            (
                result.count,
                result
                    .compositions
                    .map(|parts| parts.iter().map(|c| c.to_string()).collect()),
            )
        }
    };
    let output = match cli.format {
        Format::Text => {
            let mut out = String::new();
            for member in members.iter().flatten() {
                writeln!(out, "{member}").expect("string write");
            }
            writeln!(out, "count {count}").expect("string write");
            out
        }
        Format::Csv => match &members {
            Some(members) => {
                let mut out = String::from("member\n");
                for member in members {
                    writeln!(out, "\"{member}\"").expect("string write");
                }
                out
            }
            None => format!("count\n{count}\n"),
        },
        Format::Json => {
            let mut record = serde_json::Map::new();
            record.insert("count".into(), json!(count.to_string()));
            if let Some(members) = &members {
                record.insert("members".into(), json!(members));
            }
            to_pretty(&Value::Object(record))
        }
        Format::Bfile => return Err(usage("b-file output applies to seq only")),
    };
    emit(cli, &output)
}

fn parse_range(text: &str, flag: &str) -> Result<Vec<u64>, CliError> {
    let parse_one = |part: &str| {
        part.trim()
            .parse::<u64>()
            .map_err(|_| usage(format!("--{flag}: '{part}' is not a natural number")))
    };
    match text.split_once("..") {
        None => Ok(vec![parse_one(text)?]),
        Some((low, high)) => {
            let low = parse_one(low)?;
            let high = parse_one(high)?;
            if low > high {
                return Err(usage(format!("--{flag}: range {low}..{high} is empty")));
            }
            Ok((low..=high).collect())
        }
    }
}

fn run_verify(
    cli: &Cli,
    theorem: Option<&str>,
    all: bool,
    param_flags: [(&str, Option<&str>); 4],
    n: Option<&str>,
    inject: Option<&str>,
) -> Result<(), CliError> {
    let budget = EnumerationBudget::new(cli.budget.clone());
    let options = VerifyOptions {
        off_by_one: inject
            .map(|name| name.parse::<ClosedFormId>().map_err(from_core))
            .transpose()?,
    };
    let given: Vec<(&str, &str)> = param_flags
        .iter()
        .filter_map(|(name, value)| value.map(|v| (*name, v)))
        .collect();

    let reports: Vec<VerificationReport> = if all {
        if theorem.is_some() {
            return Err(usage("pass either --all or --theorem, not both"));
        }
        if !given.is_empty() || n.is_some() {
            return Err(usage("grid overrides apply to a single --theorem run"));
        }
        verify_all_with(&budget, &options)
    } else {
        let id: TheoremId = theorem
            .ok_or_else(|| usage("pass --theorem ID or --all"))?
            .parse()
            .map_err(from_core)?;
        if given.len() > 1 {
            return Err(usage("give at most one sweep-parameter range"));
        }
        let param = match (given.first(), id.param_name()) {
            (None, _) => None,
            (Some((name, value)), Some(expected)) if *name == expected => {
                Some(parse_range(value, name)?)
            }
            (Some((name, _)), Some(expected)) => {
                return Err(usage(format!("{id} sweeps --{expected}, not --{name}")));
            }
            (Some((name, _)), None) => {
                return Err(usage(format!("{id} takes no --{name} sweep")));
            }
        };
        let n = n.map(|value| parse_range(value, "n")).transpose()?;
        let grid = Grid::new(param, n);
        vec![verify_with(id, &grid, &budget, &options).map_err(from_core)?]
    };

    let output = match cli.format {
        Format::Text => reports.iter().map(|r| r.to_string()).collect::<String>(),
        Format::Csv => {
            let mut out = String::from("theorem,status,points,failures,skipped,wall_ms\n");
            for report in &reports {
                writeln!(
                    out,
                    "{},{},{},{},{},{}",
                    report.theorem,
                    report.status(),
                    report.points_checked,
                    report.failures.len(),
                    report.skipped.len(),
                    report.wall_time.as_millis()
                )
                .expect("string write");
            }
            out
        }
        Format::Json => {
            to_pretty(&serde_json::to_value(&reports).expect("reports serialize"))
        }
        Format::Bfile => return Err(usage("b-file output applies to seq only")),
    };
    emit(cli, &output)?;
    if reports.iter().any(|report| !report.passed()) {
        return Err(CliError::Mismatch(String::new()));
    }
    Ok(())
}

fn to_pretty(value: &Value) -> String {
    serde_json::to_string_pretty(value).expect("serializable") + "\n"
}
