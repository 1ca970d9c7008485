//! Command-line front end for `kmac`.
//!
//! Payloads go to standard output (or `--output`), progress and diagnostics
//! to standard error. Exit codes: 0 pass, 1 mathematical failure, 2 usage or
//! parse error, 3 budget exhausted.

use std::collections::BTreeMap;
use std::fmt::Write as _;
use std::io::Write;
use std::path::PathBuf;
use std::time::{Duration, SystemTime, UNIX_EPOCH};

use clap::{Parser, Subcommand, ValueEnum};
use num_bigint::BigUint;
use num_traits::Zero;

use crate::binrep::{
    decompose, extended_decompose, kruskal_katona, kruskal_macaulay, max_translates,
};
use crate::families::{enumerate_prefix, shadow, Family, Kind};
use crate::report::{
    FamilyDump, Payload, RepDump, ReportDocument, ShadowDump, Summary, TranslatesDump,
};
use crate::verify::{self, Budget, BvVariant, CheckReport, SweepOptions, VerifyError};

pub const EXIT_PASS: i32 = 0;
pub const EXIT_FAILURE: i32 = 1;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_BUDGET: i32 = 3;

const DEFAULT_N_MAX: u64 = 2000;
const DEFAULT_M: u32 = 12;

#[derive(Debug, Parser)]
#[command(
    name = "kmac",
    version,
    about = "Kruskal-Macaulay functions, lex shadows and exhaustive checks"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,

    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    format: Format,

    /// Write the payload here instead of standard output.
    #[arg(long, global = true)]
    output: Option<PathBuf>,

    /// Worker threads for sweeps.
    #[arg(long, global = true, default_value_t = 1, value_parser = clap::value_parser!(u32).range(1..))]
    jobs: u32,

    /// Abort sweeps with exit code 3 after this many seconds.
    #[arg(long, global = true)]
    budget_seconds: Option<f64>,

    /// Record generation time (unix seconds) in JSON output.
    #[arg(long, global = true)]
    timestamp: bool,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Csv,
    Text,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum KindArg {
    Multiset,
    Set,
}

impl From<KindArg> for Kind {
    fn from(k: KindArg) -> Self {
        match k {
            KindArg::Multiset => Kind::Multiset,
            KindArg::Set => Kind::Set,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Suite {
    Theorem1,
    Macaulay,
    Kk,
    Identity,
    Lemmas,
    Bv,
    Ew,
    Decomposition,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum VariantArg {
    First,
    Second,
}

fn parse_big(s: &str) -> Result<BigUint, String> {
    if s.is_empty() || !s.bytes().all(|b| b.is_ascii_digit()) {
        return Err(format!("`{s}` is not a nonnegative decimal integer"));
    }
    s.parse().map_err(|e| format!("{e}"))
}

fn order(s: &str) -> Result<usize, String> {
    match s.parse::<usize>() {
        Ok(k) if k >= 1 => Ok(k),
        _ => Err(format!("`{s}` is not a positive integer")),
    }
}

#[derive(Debug, Subcommand)]
enum Command {
    /// k-binomial representation of n with ∂^k(n), ∂_k(n) and parity.
    Rep {
        #[arg(value_parser = parse_big)]
        n: BigUint,
        #[arg(long, value_parser = order)]
        k: usize,
        /// Also print the extended representation when it exists.
        #[arg(long)]
        extended: bool,
    },
    /// Shadow of the family in a family file, against the lex lower bound.
    Shadow { input: PathBuf },
    /// Dump FM_k(n) or FS_k(n) in family-file format.
    Enumerate {
        #[arg(long, value_enum)]
        kind: KindArg,
        #[arg(long, value_parser = order)]
        k: usize,
        #[arg(long, value_parser = parse_big)]
        n: BigUint,
    },
    /// Run a verification suite.
    Verify {
        #[arg(value_enum)]
        suite: Suite,
        #[arg(long, value_parser = order)]
        k: Option<usize>,
        /// k + 1, for the subset suites.
        #[arg(long, value_parser = order)]
        k1: Option<usize>,
        #[arg(long, value_parser = parse_big)]
        n: Option<BigUint>,
        #[arg(long, value_parser = parse_big)]
        a: Option<BigUint>,
        #[arg(long, value_parser = parse_big)]
        n_max: Option<BigUint>,
        #[arg(long)]
        m: Option<u32>,
        #[arg(long, value_enum)]
        kind: Option<KindArg>,
        #[arg(long, value_enum)]
        variant: Option<VariantArg>,
        #[arg(long, default_value_t = 10_000)]
        samples: usize,
        #[arg(long, default_value_t = 1000)]
        max_part: u64,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
    /// Catalog the equality pairs (n, a) of the Kruskal-Macaulay inequality.
    SweepEquality {
        #[arg(long, value_parser = order)]
        k: usize,
        #[arg(long, value_parser = parse_big)]
        n_max: BigUint,
    },
    /// n - ∂^k(n), the maximum number of translates of a (k+1)-point simplex.
    Translates {
        #[arg(value_parser = parse_big)]
        n: BigUint,
        #[arg(long, value_parser = order)]
        k: usize,
    },
}

#[derive(Debug)]
enum CliError {
    Usage(String),
    Budget(String),
}

impl From<VerifyError> for CliError {
    fn from(e: VerifyError) -> Self {
        match e {
            VerifyError::Budget(msg) => CliError::Budget(msg),
            other => CliError::Usage(other.to_string()),
        }
    }
}

fn params<const N: usize>(pairs: [(&str, String); N]) -> BTreeMap<String, String> {
    pairs.into_iter().map(|(k, v)| (k.to_string(), v)).collect()
}

fn optional(params: &mut BTreeMap<String, String>, key: &str, value: Option<impl ToString>) {
    if let Some(v) = value {
        params.insert(key.to_string(), v.to_string());
    }
}

fn require<T: Clone>(value: &Option<T>, flag: &str, suite: &str) -> Result<T, CliError> {
    value
        .clone()
        .ok_or_else(|| CliError::Usage(format!("suite `{suite}` needs --{flag}")))
}

fn summarize(doc: &mut ReportDocument) {
    let (total, passed) = match &doc.results {
        Payload::Checks(reports) => (
            reports.len() as u64,
            reports.iter().filter(|r| r.holds).count() as u64,
        ),
        _ => (1, 1),
    };
    doc.summary = Summary {
        total,
        passed,
        failed: total - passed,
        exit_code: if passed == total {
            EXIT_PASS
        } else {
            EXIT_FAILURE
        },
    };
    // The Eckhoff-Wegner suite is observational: violations are data.
    if doc.command == "verify ew" {
        doc.summary.exit_code = EXIT_PASS;
    }
}

/// Runs the CLI on `args` (including the program name) and returns the
/// process exit code.
pub fn run<W: Write, E: Write>(args: &[String], out: &mut W, err: &mut E) -> i32 {
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            use clap::error::ErrorKind;
            let text = e.render().to_string();
            return match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => {
                    let _ = write!(out, "{text}");
                    EXIT_PASS
                }
                _ => {
                    let _ = write!(err, "{text}");
                    EXIT_USAGE
                }
            };
        }
    };

    let mut doc = match execute(&cli, err) {
        Ok(doc) => doc,
        Err(CliError::Usage(msg)) => {
            let _ = writeln!(err, "error: {msg}");
            return EXIT_USAGE;
        }
        Err(CliError::Budget(msg)) => {
            let _ = writeln!(err, "budget exhausted: {msg}");
            return EXIT_BUDGET;
        }
    };
    if cli.timestamp {
        doc.timestamp = SystemTime::now()
            .duration_since(UNIX_EPOCH)
            .ok()
            .map(|d| d.as_secs());
    }

    let rendered = match render(&doc, cli.format) {
        Ok(text) => text,
        Err(msg) => {
            let _ = writeln!(err, "error: {msg}");
            return EXIT_USAGE;
        }
    };
    let written = match &cli.output {
        Some(path) => std::fs::write(path, rendered.as_bytes())
            .map_err(|e| format!("cannot write {}: {e}", path.display())),
        None => out
            .write_all(rendered.as_bytes())
            .map_err(|e| e.to_string()),
    };
    if let Err(msg) = written {
        let _ = writeln!(err, "error: {msg}");
        return EXIT_USAGE;
    }
    doc.summary.exit_code
}

fn sweep_options(cli: &Cli) -> Result<SweepOptions, CliError> {
    let mut budget = Budget::default();
    if let Some(secs) = cli.budget_seconds {
        let limit = Duration::try_from_secs_f64(secs)
            .map_err(|_| CliError::Usage(format!("bad --budget-seconds {secs}")))?;
        budget = budget.with_time_limit(limit);
    }
    Ok(SweepOptions {
        jobs: cli.jobs as usize,
        budget,
    })
}

fn execute<E: Write>(cli: &Cli, err: &mut E) -> Result<ReportDocument, CliError> {
    let opts = sweep_options(cli)?;
    let mut doc = match &cli.command {
        Command::Rep { n, k, extended } => cmd_rep(n, *k, *extended)?,
        Command::Shadow { input } => cmd_shadow(input, &opts)?,
        Command::Enumerate { kind, k, n } => {
            let family = enumerate_prefix((*kind).into(), *k, n, opts.budget.enumeration_cap)
                .map_err(VerifyError::from)?;
            ReportDocument::new(
                "enumerate",
                params([
                    ("kind", Kind::from(*kind).to_string()),
                    ("k", k.to_string()),
                    ("n", n.to_string()),
                ]),
                Payload::Family(FamilyDump {
                    kind: family.kind(),
                    k: family.k(),
                    members: family.iter().cloned().collect(),
                }),
            )
        }
        Command::Verify { suite, .. } => {
            let _ = writeln!(err, "verify {}: running", suite_name(*suite));
            cmd_verify(&cli.command, &opts)?
        }
        Command::SweepEquality { k, n_max } => {
            let _ = writeln!(
                err,
                "sweep-equality: k={k} n_max={n_max} jobs={}",
                opts.jobs
            );
            match verify::sweep_theorem1(*k, n_max, &opts) {
                Ok(catalog) => {
                    let _ = writeln!(
                        err,
                        "sweep-equality: {} equality pairs",
                        catalog.pairs.len()
                    );
                    ReportDocument::new(
                        "sweep-equality",
                        params([("k", k.to_string()), ("n_max", n_max.to_string())]),
                        Payload::Catalog(catalog),
                    )
                }
                Err(VerifyError::Failed(report)) => ReportDocument::new(
                    "sweep-equality",
                    params([("k", k.to_string()), ("n_max", n_max.to_string())]),
                    Payload::Checks(vec![*report]),
                ),
                Err(e) => return Err(e.into()),
            }
        }
        Command::Translates { n, k } => {
            let rep = decompose(n, *k);
            ReportDocument::new(
                "translates",
                params([("n", n.to_string()), ("k", k.to_string())]),
                Payload::Translates(TranslatesDump {
                    n: n.clone(),
                    k: *k,
                    coefficients: rep.coeffs().iter().map(|c| c.to_string()).collect(),
                    kruskal_macaulay: rep.kruskal_macaulay(),
                    max_translates: max_translates(n, *k),
                }),
            )
        }
    };
    summarize(&mut doc);
    Ok(doc)
}

fn cmd_rep(n: &BigUint, k: usize, extended: bool) -> Result<ReportDocument, CliError> {
    let rep = decompose(n, k);
    let ext = if extended && !n.is_zero() {
        extended_decompose(n, k).map_err(|e| CliError::Usage(e.to_string()))?
    } else {
        None
    };
    let mut p = params([("n", n.to_string()), ("k", k.to_string())]);
    if extended {
        p.insert("extended".into(), "true".into());
    }
    Ok(ReportDocument::new(
        "rep",
        p,
        Payload::Representation(RepDump {
            n: n.clone(),
            k,
            coefficients: rep.coeffs().iter().map(|c| c.to_string()).collect(),
            terms: rep.to_string(),
            kruskal_macaulay: rep.kruskal_macaulay(),
            kruskal_katona: rep.kruskal_katona(),
            parity: rep.parity(),
            extended_absent: extended && ext.is_none(),
            extended: ext.map(|e| e.coeffs().iter().map(|c| c.to_string()).collect()),
        }),
    ))
}

fn cmd_shadow(input: &PathBuf, opts: &SweepOptions) -> Result<ReportDocument, CliError> {
    let text = std::fs::read_to_string(input)
        .map_err(|e| CliError::Usage(format!("cannot read {}: {e}", input.display())))?;
    let family =
        Family::parse(&text).map_err(|e| CliError::Usage(format!("{}: {e}", input.display())))?;
    let sh = shadow(&family).map_err(VerifyError::from)?;
    let size = BigUint::from(family.len());
    let bound = match family.kind() {
        Kind::Multiset => kruskal_macaulay(&size, family.k()),
        Kind::Set => kruskal_katona(&size, family.k()),
    };
    let _ = opts;
    Ok(ReportDocument::new(
        "shadow",
        params([("input", input.display().to_string())]),
        Payload::Shadow(ShadowDump {
            kind: family.kind(),
            k: family.k(),
            size: family.len(),
            shadow_size: sh.len(),
            equality: BigUint::from(sh.len()) == bound,
            bound,
            shadow: sh.iter().cloned().collect(),
        }),
    ))
}

fn suite_name(s: Suite) -> &'static str {
    match s {
        Suite::Theorem1 => "theorem1",
        Suite::Macaulay => "macaulay",
        Suite::Kk => "kk",
        Suite::Identity => "identity",
        Suite::Lemmas => "lemmas",
        Suite::Bv => "bv",
        Suite::Ew => "ew",
        Suite::Decomposition => "decomposition",
    }
}

/// Turns a sweep abort into a failing report; other errors pass through.
fn failed_as_report(r: Result<CheckReport, VerifyError>) -> Result<CheckReport, CliError> {
    match r {
        Ok(report) => Ok(report),
        Err(VerifyError::Failed(report)) => Ok(*report),
        Err(e) => Err(e.into()),
    }
}

fn cmd_verify(command: &Command, opts: &SweepOptions) -> Result<ReportDocument, CliError> {
    let Command::Verify {
        suite,
        k,
        k1,
        n,
        a,
        n_max,
        m,
        kind,
        variant,
        samples,
        max_part,
        seed,
    } = command
    else {
        unreachable!("cmd_verify called with a non-verify command")
    };
    let name = suite_name(*suite);
    let n_max_or_default = n_max
        .clone()
        .unwrap_or_else(|| BigUint::from(DEFAULT_N_MAX));
    let kinds: Vec<Kind> = match kind {
        Some(k) => vec![(*k).into()],
        None => vec![Kind::Multiset, Kind::Set],
    };
    let mut p = BTreeMap::new();
    optional(&mut p, "k", *k);
    optional(&mut p, "k1", *k1);
    optional(&mut p, "n", n.as_ref());
    optional(&mut p, "a", a.as_ref());
    optional(&mut p, "kind", kind.map(|k| Kind::from(k).to_string()));

    let results = match suite {
        Suite::Theorem1 => {
            let k = require(k, "k", name)?;
            if let (Some(n), Some(a)) = (n, a) {
                vec![verify::check_theorem1(k, n, a)?]
            } else {
                p.insert("n_max".into(), n_max_or_default.to_string());
                vec![failed_as_report(theorem1_summary(
                    k,
                    &n_max_or_default,
                    opts,
                ))?]
            }
        }
        Suite::Macaulay | Suite::Kk => {
            let kind = if *suite == Suite::Macaulay {
                Kind::Multiset
            } else {
                Kind::Set
            };
            let k1 = k1.or(k.map(|k| k + 1)).unwrap_or(2);
            let m = m.unwrap_or(DEFAULT_M);
            p.insert("k1".into(), k1.to_string());
            p.insert("m".into(), m.to_string());
            vec![verify::check_shadow_theorem(kind, k1, m, opts)?]
        }
        Suite::Identity => {
            let k = require(k, "k", name)?;
            match n {
                Some(n) => kinds
                    .iter()
                    .map(|&kind| verify::check_shadow_identity(kind, k, n, opts))
                    .collect::<Result<_, _>>()?,
                None => {
                    p.insert("n_max".into(), n_max_or_default.to_string());
                    kinds
                        .iter()
                        .map(|&kind| {
                            verify::sweep_shadow_identity(kind, k, &n_max_or_default, opts)
                        })
                        .collect::<Result<_, _>>()?
                }
            }
        }
        Suite::Lemmas => {
            let k = require(k, "k", name)?;
            p.insert("n_max".into(), n_max_or_default.to_string());
            vec![
                verify::check_lemma_short(k, &n_max_or_default, opts)?,
                verify::check_lemma_extended(k, &n_max_or_default, opts)?,
                verify::sweep_lemma_comparisons(k, &n_max_or_default, opts)?,
            ]
        }
        Suite::Bv => {
            let k = require(k, "k", name)?;
            let variants = match variant {
                Some(VariantArg::First) => vec![BvVariant::First],
                Some(VariantArg::Second) => vec![BvVariant::Second],
                None => vec![BvVariant::First, BvVariant::Second],
            };
            p.insert("samples".into(), samples.to_string());
            p.insert("max_part".into(), max_part.to_string());
            p.insert("seed".into(), seed.to_string());
            variants
                .into_iter()
                .map(|v| verify::sweep_bjorner_vrecica(k, v, *samples, *max_part, *seed, opts))
                .collect::<Result<_, _>>()?
        }
        Suite::Ew => {
            let k = require(k, "k", name)?;
            if let (Some(n), Some(a)) = (n, a) {
                vec![verify::check_eckhoff_wegner(k, n, a)?]
            } else {
                p.insert("n_max".into(), n_max_or_default.to_string());
                let catalog = verify::sweep_eckhoff_wegner(k, &n_max_or_default, opts)?;
                return Ok(ReportDocument::new(
                    "verify ew",
                    p,
                    Payload::Violations(catalog),
                ));
            }
        }
        Suite::Decomposition => {
            let k1 = k1.or(k.map(|k| k + 1)).unwrap_or(2);
            let m = m.unwrap_or(8);
            p.insert("k1".into(), k1.to_string());
            p.insert("m".into(), m.to_string());
            vec![verify::sweep_decomposition_identity(k1, m, opts)?]
        }
    };
    Ok(ReportDocument::new(
        &format!("verify {name}"),
        p,
        Payload::Checks(results),
    ))
}

/// Sweep report for the theorem: counts from the catalog, headline
/// instance `a = 0` at `n = n_max`.
fn theorem1_summary(
    k: usize,
    n_max: &BigUint,
    opts: &SweepOptions,
) -> Result<CheckReport, VerifyError> {
    let catalog = verify::sweep_theorem1(k, n_max, opts)?;
    let headline = if n_max.is_zero() {
        CheckReport::eq("theorem1", BTreeMap::new(), 0u32, 0u32)
    } else {
        verify::check_theorem1(k, n_max, &BigUint::zero())?
    };
    let mut report = CheckReport::eq(
        "theorem1",
        params([("k", k.to_string()), ("n_max", n_max.to_string())]),
        headline.lhs,
        headline.rhs,
    );
    report.stats = Some(verify::SweepStats {
        checked: catalog.stats.checked,
        equal: catalog.stats.equal,
        strict: catalog.stats.strict,
        failed: 0,
    });
    report.relation = verify::Relation::Ge;
    Ok(report)
}

fn render(doc: &ReportDocument, format: Format) -> Result<String, String> {
    match format {
        Format::Json => Ok(doc.to_json() + "\n"),
        Format::Text => Ok(render_text(doc)),
        Format::Csv => match &doc.results {
            Payload::Catalog(c) => Ok(c.to_csv()),
            Payload::Violations(v) => Ok(v.to_csv()),
            Payload::Checks(reports) => Ok(checks_csv(reports)),
            _ => Err(format!(
                "`{}` has no CSV form; use --format json or text",
                doc.command
            )),
        },
    }
}

fn checks_csv(reports: &[CheckReport]) -> String {
    let mut w = csv::Writer::from_writer(Vec::new());
    w.write_record([
        "check_id", "params", "lhs", "rhs", "relation", "holds", "equality", "checked", "failed",
    ])
    .expect("in-memory write");
    for r in reports {
        let params: Vec<String> = r.params.iter().map(|(k, v)| format!("{k}={v}")).collect();
        let stats = r.stats.unwrap_or_default();
        w.write_record([
            r.check_id.clone(),
            params.join(" "),
            r.lhs.to_string(),
            r.rhs.to_string(),
            format!("{:?}", r.relation).to_lowercase(),
            r.holds.to_string(),
            r.equality.to_string(),
            stats.checked.to_string(),
            stats.failed.to_string(),
        ])
        .expect("in-memory write");
    }
    String::from_utf8(w.into_inner().expect("flush")).expect("utf-8")
}

fn render_text(doc: &ReportDocument) -> String {
    let mut s = String::new();
    match &doc.results {
        Payload::Representation(r) => {
            let _ = writeln!(s, "n: {}", r.n);
            let _ = writeln!(s, "k: {}", r.k);
            let _ = writeln!(s, "representation: {}", r.terms);
            let _ = writeln!(s, "coefficients: [{}]", r.coefficients.join(", "));
            let _ = writeln!(s, "kruskal_macaulay: {}", r.kruskal_macaulay);
            let _ = writeln!(s, "kruskal_katona: {}", r.kruskal_katona);
            let _ = writeln!(s, "parity: {}", r.parity);
            if let Some(ext) = &r.extended {
                let _ = writeln!(s, "extended: [{}]", ext.join(", "));
            } else if r.extended_absent {
                let _ = writeln!(s, "extended: none");
            }
        }
        Payload::Translates(t) => {
            let _ = writeln!(s, "n: {}", t.n);
            let _ = writeln!(s, "k: {}", t.k);
            let _ = writeln!(s, "coefficients: [{}]", t.coefficients.join(", "));
            let _ = writeln!(s, "kruskal_macaulay: {}", t.kruskal_macaulay);
            let _ = writeln!(s, "max_translates: {}", t.max_translates);
        }
        Payload::Shadow(sh) => {
            let _ = writeln!(s, "kind: {}", sh.kind);
            let _ = writeln!(s, "k: {}", sh.k);
            let _ = writeln!(s, "size: {}", sh.size);
            let _ = writeln!(s, "shadow_size: {}", sh.shadow_size);
            let _ = writeln!(s, "bound: {}", sh.bound);
            let _ = writeln!(
                s,
                "meets_bound: {}",
                if sh.equality { "equality" } else { "strict" }
            );
            let _ = writeln!(s, "shadow:");
            for seq in &sh.shadow {
                let _ = writeln!(s, "  {seq}");
            }
        }
        Payload::Family(f) => {
            let family = Family::new(f.kind, f.k, f.members.iter().cloned())
                .expect("enumerated family is valid");
            s.push_str(&family.to_text());
        }
        Payload::Catalog(c) => {
            let _ = writeln!(
                s,
                "k={} n_max={} checked={} strict={} equal={}",
                c.k, c.n_max, c.stats.checked, c.stats.strict, c.stats.equal
            );
            for p in &c.pairs {
                let _ = writeln!(s, "{} {}", p.n, p.a);
            }
        }
        Payload::Violations(v) => {
            let _ = writeln!(
                s,
                "k={} n_max={} checked={} violations={}",
                v.k,
                v.n_max,
                v.checked,
                v.violations.len()
            );
            for x in &v.violations {
                let _ = writeln!(s, "n={} a={} lhs={} rhs={}", x.n, x.a, x.lhs, x.rhs);
            }
        }
        Payload::Checks(reports) => {
            for r in reports {
                render_check(&mut s, r);
            }
            let _ = writeln!(
                s,
                "summary: {} passed, {} failed",
                doc.summary.passed, doc.summary.failed
            );
        }
    }
    s
}

fn render_check(s: &mut String, r: &CheckReport) {
    let params: Vec<String> = r.params.iter().map(|(k, v)| format!("{k}={v}")).collect();
    let op = match r.relation {
        verify::Relation::Ge => ">=",
        verify::Relation::Eq => "==",
        verify::Relation::Chain => "~",
    };
    let _ = write!(
        s,
        "{} {} [{}] lhs {} {op} rhs {}",
        if r.holds { "PASS" } else { "FAIL" },
        r.check_id,
        params.join(" "),
        r.lhs,
        r.rhs
    );
    if let Some(st) = r.stats {
        let _ = write!(
            s,
            " (checked {}, equal {}, strict {}, failed {})",
            st.checked, st.equal, st.strict, st.failed
        );
    }
    s.push('\n');
    if let Some(w) = &r.witness {
        let wp: Vec<String> = w.params.iter().map(|(k, v)| format!("{k}={v}")).collect();
        let _ = writeln!(s, "  witness: {}", wp.join(" "));
        if let Some(note) = &w.note {
            let _ = writeln!(s, "  note: {note}");
        }
        if let Some(members) = &w.members {
            let m: Vec<String> = members.iter().map(|x| x.to_string()).collect();
            let _ = writeln!(s, "  members: {}", m.join(" "));
        }
    }
}
