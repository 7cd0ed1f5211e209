//! `mckay`: character tables, correspondence verification and the
//! order-648 showcase from the command line.
//!
//! Exit status: 0 when every verdict holds, 1 on a falsified claim, 2 on
//! bad input or an unmet hypothesis.

use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::time::Instant;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use mckay_core::chartab::{character_table, render_table_text, table_record, CharTableError};
use mckay_core::group::{load_group, parse_group_description, GroupError, PermGroup, DEFAULT_CAP};
use mckay_core::mckay::{check_hypotheses, mckay_count, verify_main, McKayError, VerifyOptions};
use mckay_core::showcase::{builtin_text, corpus, run_remark, InstanceKind, ShowcaseError};

#[derive(Parser)]
#[command(
    name = "mckay",
    version,
    about = "Character tables and McKay correspondences for permutation groups"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
    /// Print progress and timings to stderr
    #[arg(short, long, global = true, action = clap::ArgAction::Count)]
    verbose: u8,
}

#[derive(Subcommand)]
enum Command {
    /// Print the character table of a group
    Table {
        #[command(flatten)]
        common: Common,
        /// Group file (with or without `.toml`) or the name of a shipped group
        #[arg(long)]
        group: String,
    },
    /// Compare the restriction map with the descent on every p'-degree character
    Verify {
        #[command(flatten)]
        common: Common,
        #[arg(long, required_unless_present = "all", conflicts_with = "all")]
        group: Option<String>,
        #[arg(short, long, required_unless_present = "all")]
        prime: Option<u64>,
        /// Run the whole shipped corpus
        #[arg(long)]
        all: bool,
        /// Worker threads for per-character checks; 1 runs serially
        #[arg(long)]
        threads: Option<usize>,
    },
    /// Verify the order-648 example that lies outside the hypotheses
    Remark648 {
        #[command(flatten)]
        common: Common,
    },
}

#[derive(Args)]
struct Common {
    #[arg(long, value_enum, default_value_t = Format::Text)]
    format: Format,
    /// Write the report here instead of stdout
    #[arg(long)]
    out: Option<PathBuf>,
    /// Refuse to enumerate groups larger than this
    #[arg(long, default_value_t = DEFAULT_CAP, value_parser = clap::value_parser!(usize))]
    cap: usize,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Structured,
}

/// A failure with its exit status.
struct Failure {
    code: u8,
    message: String,
}

impl Failure {
    fn input(message: impl Into<String>) -> Self {
        Failure {
            code: 2,
            message: message.into(),
        }
    }
}

impl From<GroupError> for Failure {
    fn from(e: GroupError) -> Self {
        Failure::input(e.to_string())
    }
}

impl From<CharTableError> for Failure {
    fn from(e: CharTableError) -> Self {
        Failure {
            code: 1,
            message: e.to_string(),
        }
    }
}

impl From<McKayError> for Failure {
    fn from(e: McKayError) -> Self {
        let code = match e {
            McKayError::Falsification { .. } | McKayError::CharTable(_) => 1,
            _ => 2,
        };
        Failure {
            code,
            message: e.to_string(),
        }
    }
}

impl From<ShowcaseError> for Failure {
    fn from(e: ShowcaseError) -> Self {
        let code = match &e {
            ShowcaseError::Group(_) => 2,
            ShowcaseError::McKay(m) if !m.is_falsification() => 2,
            _ => 1,
        };
        Failure {
            code,
            message: e.to_string(),
        }
    }
}

/// Resolves `--group`: an existing path, the path plus `.toml`, or the stem
/// of a shipped group such as `s4` or `corpus/s4`.
fn read_group(spec: &str, cap: usize) -> Result<PermGroup, Failure> {
    let path = Path::new(spec);
    let with_ext = path.with_extension("toml");
    let text = if path.is_file() {
        std::fs::read_to_string(path).map_err(|e| Failure::input(format!("{spec}: {e}")))?
    } else if with_ext.is_file() {
        std::fs::read_to_string(&with_ext).map_err(|e| Failure::input(format!("{spec}: {e}")))?
    } else {
        let stem = path.file_stem().and_then(|s| s.to_str()).unwrap_or("");
        let bare = path
            .parent()
            .is_none_or(|p| p.as_os_str().is_empty() || p == Path::new("corpus"));
        match builtin_text(stem) {
            Some(t) if bare => t.to_string(),
            _ => return Err(Failure::input(format!("{spec}: no such group file"))),
        }
    };
    let desc = parse_group_description(&text)?;
    Ok(load_group(&desc, cap)?)
}

fn emit(common: &Common, text: String, value: Value) -> Result<(), Failure> {
    let body = match common.format {
        Format::Text => text,
        Format::Structured => {
            let mut s = serde_json::to_string_pretty(&value).expect("json");
            s.push('\n');
            s
        }
    };
    match &common.out {
        Some(p) => {
            std::fs::write(p, body).map_err(|e| Failure::input(format!("{}: {e}", p.display())))
        }
        None => {
            print!("{body}");
            Ok(())
        }
    }
}

fn cmd_table(common: &Common, group: &str) -> Result<u8, Failure> {
    let g = read_group(group, common.cap)?;
    let table = character_table(&g.whole())?;
    emit(
        common,
        render_table_text(&table, g.name()),
        table_record(&table, g.name()),
    )?;
    Ok(0)
}

fn check_prime(p: u64) -> Result<(), Failure> {
    if mckay_core::arith::is_prime(p) {
        Ok(())
    } else {
        Err(Failure::input(format!("{p} is not prime")))
    }
}

fn cmd_verify_one(
    common: &Common,
    group: &str,
    p: u64,
    opts: VerifyOptions,
) -> Result<u8, Failure> {
    check_prime(p)?;
    let g = read_group(group, common.cap)?;
    let inst = check_hypotheses(&g.whole(), p)?;
    let report = verify_main(&inst, opts)?;
    emit(common, report.render_text(), report.to_json())?;
    Ok(if report.verdict { 0 } else { 1 })
}

fn cmd_verify_all(common: &Common, opts: VerifyOptions, verbose: bool) -> Result<u8, Failure> {
    let mut lines = String::new();
    let mut records = Vec::new();
    let mut code = 0u8;
    for entry in corpus() {
        let start = Instant::now();
        let g = entry.load(common.cap)?;
        let inst = check_hypotheses(&g.whole(), entry.p)?;
        let count = mckay_count(&inst)?;
        let kind = serde_json::to_value(entry.kind).expect("json");
        let (line, record) = match entry.kind {
            InstanceKind::Positive => match verify_main(&inst, opts) {
                Ok(r) => {
                    if !r.verdict {
                        code = code.max(1);
                    }
                    (
                        format!("verdict {} ({} pairs)", r.verdict, r.pairs.len()),
                        json!({ "key": entry.key, "p": entry.p, "kind": kind, "report": r.to_json() }),
                    )
                }
                Err(e) => {
                    let f = Failure::from(e);
                    code = code.max(f.code);
                    (
                        format!("error: {}", f.message),
                        json!({ "key": entry.key, "p": entry.p, "kind": kind, "error": f.message }),
                    )
                }
            },
            InstanceKind::NegativeControl | InstanceKind::Showcase => {
                if !count.equal {
                    code = code.max(1);
                }
                let reason = if inst.self_normalizing {
                    ""
                } else {
                    "N_G(P) > P; "
                };
                (
                    format!(
                        "{reason}counts {} = {}: {}",
                        count.group, count.normalizer, count.equal
                    ),
                    json!({
                        "key": entry.key,
                        "p": entry.p,
                        "kind": kind,
                        "instance": mckay_core::mckay::InstanceRecord::from_instance(&inst),
                        "count": count,
                    }),
                )
            }
        };
        if verbose {
            eprintln!("{} p={}: {:.2?}", entry.key, entry.p, start.elapsed());
        }
        lines.push_str(&format!(
            "{:<10} p={:<2} {:<16} {}\n",
            entry.key,
            entry.p,
            kind.as_str().unwrap_or(""),
            line
        ));
        records.push(record);
    }
    lines.push_str(&format!(
        "overall: {}\n",
        if code == 0 { "pass" } else { "fail" }
    ));
    emit(
        common,
        lines,
        json!({ "instances": records, "pass": code == 0 }),
    )?;
    Ok(code)
}

fn cmd_remark(common: &Common) -> Result<u8, Failure> {
    let report = run_remark(common.cap)?;
    emit(common, report.render_text(), report.to_json())?;
    Ok(0)
}

fn run(cli: Cli) -> Result<u8, Failure> {
    let verbose = cli.verbose > 0;
    let start = Instant::now();
    let code = match &cli.command {
        Command::Table { common, group } => cmd_table(common, group),
        Command::Verify {
            common,
            group,
            prime,
            all,
            threads,
        } => {
            if common.cap == 0 {
                return Err(Failure::input("--cap must be at least 1"));
            }
            if let Some(n) = threads.filter(|&n| n > 1) {
                rayon::ThreadPoolBuilder::new()
                    .num_threads(n)
                    .build_global()
                    .map_err(|e| Failure::input(e.to_string()))?;
            }
            let opts = VerifyOptions {
                parallel: *threads != Some(1),
            };
            if *all {
                cmd_verify_all(common, opts, verbose)
            } else {
                let group = group.as_deref().expect("clap enforces --group");
                let p = prime.expect("clap enforces --prime");
                cmd_verify_one(common, group, p, opts)
            }
        }
        Command::Remark648 { common } => cmd_remark(common),
    }?;
    if verbose {
        eprintln!("done in {:.2?}", start.elapsed());
    }
    Ok(code)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => ExitCode::from(code),
        Err(f) => {
            eprintln!("error: {}", f.message);
            ExitCode::from(f.code)
        }
    }
}
