//! Command-line front end. [`run`] is what the `ecix` binary calls; it takes
//! its input and output streams explicitly so it can be driven from tests.
//!
//! Exit codes: 0 on success (including pass and conjecture-holds), 1 on
//! usage or input errors, 2 when a verification fails or a conjecture is
//! refuted.

use std::io::{BufRead, Write};
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand};
use serde::{Deserialize, Serialize};

use crate::enumeration::{ClassFilter, Dominating, Enumerator, BUDGET_ENV};
use crate::error::{Error, Result};
use crate::extremal::{search_extremal, verify, Direction, Statement};
use crate::families::FamilySpec;
use crate::graph6::{decode_graph6, encode_graph6};
use crate::report::{emit_report, exit_code, Format, Report};

pub const EXIT_OK: i32 = 0;
pub const EXIT_USAGE: i32 = 1;
pub const EXIT_REFUTED: i32 = 2;

#[derive(Debug, Parser)]
#[command(name = "ecix", version, about = "Eccentric connectivity index: families, enumeration and extremal verification")]
struct Cli {
    /// Output format: table, csv or json-lines.
    #[arg(long, global = true)]
    format: Option<String>,
    /// Optional key=value config file (keys: budget, jobs, output-format).
    #[arg(long, global = true)]
    config: Option<PathBuf>,
    /// Largest order the enumerator may generate.
    #[arg(long, global = true)]
    budget: Option<usize>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Per-vertex index report for graph6 input (--g6 or one graph per stdin line).
    Compute {
        #[arg(long)]
        g6: Option<String>,
    },
    /// Build a named family member and print it with its index.
    Family {
        #[arg(long)]
        name: String,
        #[arg(long)]
        n: usize,
        #[arg(long)]
        p: Option<usize>,
        #[arg(long)]
        x: Option<usize>,
        #[arg(long)]
        d: Option<usize>,
        #[arg(long)]
        k: Option<usize>,
        #[arg(long)]
        i: Option<usize>,
    },
    /// List connected graphs of one order up to isomorphism as graph6.
    Enumerate {
        #[command(flatten)]
        class: ClassArgs,
        #[arg(long)]
        count_only: bool,
    },
    /// Minimum or maximum index over a class, with all optimal graphs.
    Extremal {
        #[command(flatten)]
        class: ClassArgs,
        #[arg(long)]
        direction: String,
    },
    /// Exhaustively check an extremal statement over a range of orders.
    Verify {
        /// One of min-order, pendant-extreme, dom-one, dom-many, dom-none,
        /// min-pending, zd10-min, table1-max, conjecture-max.
        #[arg(long)]
        statement: String,
        #[arg(long)]
        n_min: usize,
        #[arg(long)]
        n_max: usize,
        #[arg(long)]
        jobs: Option<usize>,
    },
}

#[derive(Debug, Args)]
struct ClassArgs {
    #[arg(long)]
    n: usize,
    #[arg(long)]
    pending: Option<usize>,
    #[arg(long)]
    edges: Option<usize>,
    /// any, 0, 1 or 2+.
    #[arg(long, default_value = "any")]
    dominating: String,
}

impl ClassArgs {
    fn filter(&self) -> Result<ClassFilter> {
        let filter = ClassFilter {
            order: self.n,
            pending: self.pending,
            edges: self.edges,
            dominating: self.dominating.parse::<Dominating>()?,
        };
        filter.validate()?;
        Ok(filter)
    }
}

/// Settings read from `--config`.
#[derive(Debug, Default, Clone, PartialEq, Eq, Deserialize, Serialize)]
#[serde(deny_unknown_fields)]
pub struct Config {
    pub budget: Option<usize>,
    pub jobs: Option<usize>,
    #[serde(rename = "output-format")]
    pub output_format: Option<String>,
}

impl Config {
    pub fn parse(text: &str) -> Result<Self> {
        toml::from_str(text).map_err(|e| Error::Config(e.message().to_string()))
    }
}

struct Settings {
    format: Format,
    enumerator: Enumerator,
    pool: rayon::ThreadPool,
}

fn settings(cli: &Cli) -> Result<Settings> {
    let config = match &cli.config {
        Some(path) => {
            let text = std::fs::read_to_string(path)
                .map_err(|e| Error::Config(format!("cannot read {}: {e}", path.display())))?;
            Config::parse(&text)?
        }
        None => Config::default(),
    };
    let format = cli
        .format
        .as_deref()
        .or(config.output_format.as_deref())
        .map(str::parse)
        .transpose()?
        .unwrap_or_default();
    let enumerator = match cli.budget {
        Some(b) => Enumerator::with_budget(b)?,
        None if std::env::var_os(BUDGET_ENV).is_some() => Enumerator::from_env()?,
        None => match config.budget {
            Some(b) => Enumerator::with_budget(b)?,
            None => Enumerator::default(),
        },
    };
    let jobs = match &cli.command {
        Command::Verify { jobs: Some(j), .. } => Some(*j),
        _ => config.jobs,
    };
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(jobs.unwrap_or(0))
        .build()
        .map_err(|e| Error::Config(format!("thread pool: {e}")))?;
    Ok(Settings { format, enumerator, pool })
}

/// Parses `args` (including the program name) and executes the command.
pub fn run<I, T>(args: I, stdin: &mut dyn BufRead, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let _ = write!(err, "{e}");
            return if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
        }
    };
    let outcome = settings(&cli).and_then(|s| execute(&cli.command, &s, stdin, out));
    match outcome {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            EXIT_USAGE
        }
    }
}

fn execute(command: &Command, s: &Settings, stdin: &mut dyn BufRead, out: &mut dyn Write) -> Result<i32> {
    match command {
        Command::Compute { g6 } => {
            let inputs: Vec<String> = match g6 {
                Some(g) => vec![g.clone()],
                None => stdin
                    .lines()
                    .map(|l| l.map_err(Error::from))
                    .filter(|l| l.as_ref().map_or(true, |l| !l.trim().is_empty()))
                    .collect::<Result<_>>()?,
            };
            let many = inputs.len() > 1;
            for text in inputs {
                let g = decode_graph6(text.trim())?;
                let report = g.eci_report()?;
                if many && s.format == Format::Table {
                    writeln!(out, "graph {}", text.trim())?;
                }
                write!(out, "{}", emit_report(Report::Eci(&report), s.format))?;
            }
            Ok(EXIT_OK)
        }
        Command::Family { name, n, p, x, d, k, i } => {
            let spec = FamilySpec::from_parts(name, *n, *p, *x, *d, *k, *i)?;
            let g = spec.construct()?;
            let g6 = encode_graph6(&g);
            let eci = g.eci()?;
            let closed = spec.closed_eci()?;
            let closed_text = closed.map(|c| c.to_string()).unwrap_or_default();
            let text = match s.format {
                Format::Table => {
                    format!(
                        "family       {spec}\ngraph6       {g6}\norder        {}\nedges        {}\neci          {eci}\nclosed form  {}\n",
                        g.order(),
                        g.edge_count(),
                        if closed.is_some() { closed_text.as_str() } else { "-" }
                    )
                }
                Format::Csv => format!(
                    "family,order,edges,graph6,eci,closed_form\n{},{},{},{g6},{eci},{closed_text}\n",
                    spec.name(),
                    g.order(),
                    g.edge_count()
                ),
                Format::JsonLines => {
                    let value = serde_json::json!({
                        "spec": spec,
                        "label": spec.to_string(),
                        "graph6": g6,
                        "order": g.order(),
                        "edges": g.edge_count(),
                        "eci": eci,
                        "closed_form": closed,
                    });
                    format!("{value}\n")
                }
            };
            out.write_all(text.as_bytes())?;
            Ok(EXIT_OK)
        }
        Command::Enumerate { class, count_only } => {
            let filter = class.filter()?;
            let stream = s.pool.install(|| s.enumerator.enumerate_connected(&filter))?;
            if *count_only {
                writeln!(out, "{}", stream.len())?;
            } else {
                for g in stream {
                    writeln!(out, "{}", encode_graph6(&g))?;
                }
            }
            Ok(EXIT_OK)
        }
        Command::Extremal { class, direction } => {
            let filter = class.filter()?;
            let direction: Direction = direction.parse()?;
            let result = s.pool.install(|| search_extremal(&s.enumerator, &filter, direction))?;
            write!(out, "{}", emit_report(Report::Extremal(&result), s.format))?;
            Ok(EXIT_OK)
        }
        Command::Verify {
            statement, n_min, n_max, ..
        } => {
            let statement: Statement = statement.parse()?;
            let outcome = s.pool.install(|| verify(&s.enumerator, statement, *n_min, *n_max))?;
            write!(out, "{}", emit_report(Report::Verification(&outcome), s.format))?;
            Ok(exit_code(&outcome))
        }
    }
}
