//! Library side of the `disrank` command: argument parsing, command
//! execution and rendering. `main.rs` only wires these to the process.

mod report;

use std::fmt::Write as _;
use std::path::{Path, PathBuf};
use std::time::Instant;

use clap::{Parser, Subcommand, ValueEnum};
use disrank::aaf::{parse_apx, parse_tgf};
use disrank::qautomaton::equivalent;
use disrank::ranking::{all_dis_prefixes, compare, rank_prefixes};
use disrank::reduction::compare_by_automata;
use disrank::walks::{count_recurrence, enumerate_walks_capped, DEFAULT_WALK_CAP};
use disrank::{ArgFramework, CompareOutcome, DisPrefix, Error, QAutomaton, Relation, Word};

pub use report::{BackendVerdict, DisEntry, LengthWalks, Query, Report};

/// Process exit codes.
pub mod exit {
    pub const OK: u8 = 0;
    pub const STRONGER: u8 = 0;
    pub const EQUIVALENT: u8 = 10;
    pub const WEAKER: u8 = 11;
    pub const NOT_EQUIVALENT: u8 = 11;
    pub const INPUT: u8 = 2;
    pub const IO: u8 = 3;
    pub const MISMATCH: u8 = 4;
    pub const CAP: u8 = 5;
}

#[derive(Debug, Parser)]
#[command(
    name = "disrank",
    version,
    about = "Discussion-based ranking of arguments"
)]
pub struct Cli {
    /// Output format.
    #[arg(long, value_enum, default_value_t = OutputFormat::Text, global = true)]
    pub format: OutputFormat,
    /// Input format for argumentation frameworks; inferred from the file
    /// extension (.apx, .tgf) when omitted.
    #[arg(long, value_enum, global = true)]
    pub input_format: Option<InputFormat>,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum OutputFormat {
    Text,
    Json,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum InputFormat {
    Apx,
    Tgf,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Backend {
    Matrix,
    Automata,
    Both,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum WalkMode {
    Count,
    Enumerate,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Rank all arguments of the union of the given frameworks.
    Rank {
        #[arg(required = true)]
        files: Vec<PathBuf>,
        /// Include each argument's decisive discussion prefix.
        #[arg(long)]
        dis: bool,
    },
    /// Compare two arguments of the union of the given frameworks.
    Compare {
        /// Input files followed by the two arguments.
        #[arg(required = true, num_args = 3.., value_name = "FILES... A B")]
        operands: Vec<String>,
        #[arg(long, value_enum, default_value_t = Backend::Matrix)]
        via: Backend,
        /// Include both arguments' decisive discussion prefixes.
        #[arg(long)]
        dis: bool,
    },
    /// Count or list the walks ending in an argument.
    Walks {
        file: PathBuf,
        argument: String,
        #[arg(long)]
        max_len: usize,
        #[arg(long, value_enum, default_value_t = WalkMode::Count)]
        mode: WalkMode,
        /// Maximum number of walks listed per length in enumerate mode.
        #[arg(long, default_value_t = DEFAULT_WALK_CAP)]
        cap: usize,
    },
    /// Decide equivalence of two weighted automata given as JSON files.
    AutomatonEquiv { first: PathBuf, second: PathBuf },
}

/// A command failure together with its exit code.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Failure {
    pub code: u8,
    pub message: String,
}

impl Failure {
    fn new(code: u8, message: impl Into<String>) -> Self {
        Failure {
            code,
            message: message.into(),
        }
    }
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let code = match e {
            Error::WalkCapExceeded { .. } => exit::CAP,
            _ => exit::INPUT,
        };
        Failure::new(code, e.to_string())
    }
}

fn read(path: &Path) -> Result<String, Failure> {
    std::fs::read_to_string(path)
        .map_err(|e| Failure::new(exit::IO, format!("{}: {e}", path.display())))
}

fn load_framework(path: &Path, format: Option<InputFormat>) -> Result<ArgFramework, Failure> {
    let format = match format {
        Some(f) => f,
        None => match path
            .extension()
            .and_then(|e| e.to_str())
            .map(str::to_ascii_lowercase)
            .as_deref()
        {
            Some("apx") => InputFormat::Apx,
            Some("tgf") => InputFormat::Tgf,
            _ => {
                return Err(Failure::new(
                    exit::INPUT,
                    format!(
                        "{}: cannot infer input format, use --input-format",
                        path.display()
                    ),
                ))
            }
        },
    };
    let text = read(path)?;
    let parsed = match format {
        InputFormat::Apx => parse_apx(&text),
        InputFormat::Tgf => parse_tgf(&text),
    };
    parsed.map_err(|e| Failure::new(exit::INPUT, format!("{}: {e}", path.display())))
}

fn load_union(paths: &[PathBuf], format: Option<InputFormat>) -> Result<ArgFramework, Failure> {
    let mut out = ArgFramework::new();
    for p in paths {
        out = out.union(&load_framework(p, format)?);
    }
    Ok(out)
}

fn dis_entries<'a>(prefixes: impl IntoIterator<Item = &'a DisPrefix>) -> Vec<DisEntry> {
    prefixes
        .into_iter()
        .map(|p| DisEntry {
            argument: p.argument.clone(),
            values: p.values.iter().map(ToString::to_string).collect(),
        })
        .collect()
}

fn display_paths(paths: &[PathBuf]) -> Vec<String> {
    paths.iter().map(|p| p.display().to_string()).collect()
}

fn relation_code(r: Relation) -> u8 {
    match r {
        Relation::StrictlyStronger => exit::STRONGER,
        Relation::Equivalent => exit::EQUIVALENT,
        Relation::StrictlyWeaker => exit::WEAKER,
    }
}

fn backend_verdict(backend: &str, c: &CompareOutcome) -> BackendVerdict {
    BackendVerdict {
        backend: backend.into(),
        verdict: c.relation.as_str().into(),
        deciding_index: c.deciding_index,
    }
}

/// Runs a parsed command. Returns the report and the exit code it implies.
pub fn run(cli: &Cli) -> Result<(Report, u8), Failure> {
    let start = Instant::now();
    let (mut report, code) = match &cli.command {
        Command::Rank { files, dis } => {
            let f = load_union(files, cli.input_format)?;
            let prefixes = all_dis_prefixes(&f);
            let mut report = Report::new(
                Query {
                    command: "rank".into(),
                    files: display_paths(files),
                    arguments: Vec::new(),
                    via: None,
                    mode: None,
                    max_len: None,
                },
                "ranked",
            );
            if *dis {
                report.dis = Some(dis_entries(&prefixes));
            }
            report.ranking = Some(rank_prefixes(prefixes).classes);
            (report, exit::OK)
        }
        Command::Compare { operands, via, dis } => {
            let (files, ab) = operands.split_at(operands.len() - 2);
            let files: Vec<PathBuf> = files.iter().map(PathBuf::from).collect();
            let (a, b) = (ab[0].as_str(), ab[1].as_str());
            let f = load_union(&files, cli.input_format)?;
            let mut backends = Vec::new();
            let outcome = match via {
                Backend::Matrix => compare(&f, a, b)?,
                Backend::Automata => compare_by_automata(&f, a, b)?,
                Backend::Both => {
                    let m = compare(&f, a, b)?;
                    let q = compare_by_automata(&f, a, b)?;
                    backends.push(backend_verdict("matrix", &m));
                    backends.push(backend_verdict("automata", &q));
                    if m != q {
                        return Err(Failure::new(
                            exit::MISMATCH,
                            format!("back-ends disagree: matrix {m:?}, automata {q:?}"),
                        ));
                    }
                    m
                }
            };
            let mut report = Report::new(
                Query {
                    command: "compare".into(),
                    files: display_paths(&files),
                    arguments: vec![a.into(), b.into()],
                    via: Some(format!("{via:?}").to_lowercase()),
                    mode: None,
                    max_len: None,
                },
                outcome.relation.as_str(),
            );
            report.deciding_index = outcome.deciding_index;
            report.backends = backends;
            if *dis {
                let prefixes = all_dis_prefixes(&f);
                let pick = |x: &str| {
                    prefixes
                        .iter()
                        .find(|p| p.argument == x)
                        .expect("argument present")
                };
                report.dis = Some(dis_entries([pick(a), pick(b)]));
            }
            (report, relation_code(outcome.relation))
        }
        Command::Walks {
            file,
            argument,
            max_len,
            mode,
            cap,
        } => {
            let f = load_framework(file, cli.input_format)?;
            f.index_of(argument)?;
            if *max_len == 0 {
                return Err(Failure::new(exit::INPUT, "--max-len must be at least 1"));
            }
            let mut report = Report::new(
                Query {
                    command: "walks".into(),
                    files: display_paths(std::slice::from_ref(file)),
                    arguments: vec![argument.clone()],
                    via: None,
                    mode: Some(format!("{mode:?}").to_lowercase()),
                    max_len: Some(*max_len),
                },
                "counted",
            );
            let table = count_recurrence(&f, *max_len)?;
            let v = f.index_of(argument)?;
            report.counts = Some(table.row(v).iter().map(ToString::to_string).collect());
            if *mode == WalkMode::Enumerate {
                let mut lists = Vec::with_capacity(*max_len);
                for length in 1..=*max_len {
                    let walks = enumerate_walks_capped(&f, argument, length, *cap)?;
                    lists.push(LengthWalks {
                        length,
                        walks: walks.into_iter().map(|w| w.vertices).collect(),
                    });
                }
                report.walks = Some(lists);
                report.verdict = "enumerated".into();
            }
            (report, exit::OK)
        }
        Command::AutomatonEquiv { first, second } => {
            let load = |p: &PathBuf| -> Result<QAutomaton, Failure> {
                QAutomaton::from_json(&read(p)?)
                    .map_err(|e| Failure::new(exit::INPUT, format!("{}: {e}", p.display())))
            };
            let (a1, a2) = (load(first)?, load(second)?);
            let res = equivalent(&a1, &a2)?;
            let (verdict, code) = if res.is_equivalent() {
                ("equivalent", exit::OK)
            } else {
                ("not-equivalent", exit::NOT_EQUIVALENT)
            };
            let mut report = Report::new(
                Query {
                    command: "automaton-equiv".into(),
                    files: display_paths(&[first.clone(), second.clone()]),
                    arguments: Vec::new(),
                    via: None,
                    mode: None,
                    max_len: None,
                },
                verdict,
            );
            report.witness = res.witness.map(|w| w.0);
            report.values = res.values.map(|(x, y)| [x.to_string(), y.to_string()]);
            (report, code)
        }
    };
    report.elapsed_ms = start.elapsed().as_secs_f64() * 1000.0;
    Ok((report, code))
}

fn render_walk(w: &[String]) -> String {
    format!("({})", w.join(","))
}

/// Human-readable rendering of a report.
pub fn render_text(r: &Report) -> String {
    let mut out = String::new();
    match r.query.command.as_str() {
        "rank" => {
            let classes = r.ranking.as_deref().unwrap_or_default();
            let line: Vec<String> = classes
                .iter()
                .map(|c| {
                    if c.len() == 1 {
                        c[0].clone()
                    } else {
                        format!("{{{}}}", c.join(","))
                    }
                })
                .collect();
            writeln!(out, "{}", line.join(" > ")).unwrap();
        }
        "compare" => {
            let (a, b) = (&r.query.arguments[0], &r.query.arguments[1]);
            write!(out, "{a} {} {b}", r.verdict).unwrap();
            if let Some(i) = r.deciding_index {
                write!(out, " (decided at length {i})").unwrap();
            }
            out.push('\n');
            for be in &r.backends {
                write!(out, "  {}: {}", be.backend, be.verdict).unwrap();
                if let Some(i) = be.deciding_index {
                    write!(out, " at length {i}").unwrap();
                }
                out.push('\n');
            }
        }
        "walks" => {
            let counts = r.counts.as_deref().unwrap_or_default();
            match &r.walks {
                None => {
                    for (i, c) in counts.iter().enumerate() {
                        writeln!(out, "length {}: {c}", i + 1).unwrap();
                    }
                }
                Some(lists) => {
                    for l in lists {
                        writeln!(out, "length {}: {} walks", l.length, l.walks.len()).unwrap();
                        for w in &l.walks {
                            writeln!(out, "  {}", render_walk(w)).unwrap();
                        }
                    }
                }
            }
        }
        _ => {
            out.push_str(&r.verdict);
            if let (Some(w), Some([x, y])) = (&r.witness, &r.values) {
                let w: Word = w.iter().cloned().collect();
                write!(out, ": witness {w}, values {x} and {y}").unwrap();
            }
            out.push('\n');
        }
    }
    if let Some(dis) = &r.dis {
        for d in dis {
            writeln!(out, "{}: ({})", d.argument, d.values.join(", ")).unwrap();
        }
    }
    out
}

pub fn render(r: &Report, format: OutputFormat) -> String {
    match format {
        OutputFormat::Text => render_text(r),
        OutputFormat::Json => r.to_json() + "\n",
    }
}
