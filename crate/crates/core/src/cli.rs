//! Command-line front end for the `charvar` binary.
//!
//! Exit codes: `0` when everything computed or verified, `1` when a
//! verdict failed or a budget was exceeded, `2` on usage or input errors.

use std::fs;
use std::io::Write;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use num_traits::Zero;
use serde_json::{json, Value};

use crate::error::{Error, Result};
use crate::exact::{GaussianRational, Matrix, PolyMatrix, Polynomial, ScalarMatrix};
use crate::qinv::{pfaffian, q4_tau, q_torus};
use crate::rng::DEFAULT_SEED;
use crate::sl2trace::{reduce_trace, reduce_trace_copy};
use crate::spin4::{c1, c2, phi};
pub use crate::verify::RunConfig;
use crate::verify::{run_named, Report};
use crate::words::FreeWord;
use crate::zerosum::{davenport, minimal_zero_sum_multisets, synthesize_generators, Budget, GeneratorSpec};

pub const EXIT_OK: i32 = 0;
pub const EXIT_FAILED: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, ValueEnum)]
pub enum OutputFormat {
    #[default]
    Text,
    Json,
}

#[derive(Debug, Parser)]
#[command(name = "charvar", version, about = "Exact computations on SL(2), SO(4) and PSL(2) character varieties")]
pub struct Cli {
    #[command(flatten)]
    pub global: GlobalArgs,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Args)]
pub struct GlobalArgs {
    /// Emit JSON instead of text.
    #[arg(long, global = true)]
    pub json: bool,
    /// Write the report to this file instead of standard output.
    #[arg(long, global = true, value_name = "FILE")]
    pub out: Option<PathBuf>,
    /// Seed for every randomized check.
    #[arg(long, global = true, default_value_t = DEFAULT_SEED)]
    pub seed: u64,
    /// Group-order budget for zero-sum enumeration (overrides CHARVAR_BUDGET).
    #[arg(long, global = true)]
    pub budget: Option<u64>,
    /// Random samples per randomized check.
    #[arg(long, global = true, default_value_t = 100)]
    pub samples: usize,
    /// Record wall-clock time in reports.
    #[arg(long, global = true)]
    pub timing: bool,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Trace polynomial of a word in Fricke coordinates.
    Reduce {
        /// Word such as "g1^2 g2 g1^-1".
        word: String,
        /// Use the coordinates of SL(2) copy 1 or 2.
        #[arg(long)]
        copy: Option<usize>,
    },
    /// Image of a pair of SL(2) matrices in SO(4).
    Phi {
        /// `C1`, `C2`, `I`, or rows such as "1,1;0,1".
        a: String,
        b: String,
    },
    /// Q4 of two words as a polynomial in the copy coordinates.
    Q4 { w1: String, w2: String },
    /// Pfaffian of a skew-symmetric matrix read from a file, one row per
    /// line with comma-separated polynomial entries.
    Pfaffian {
        #[arg(long)]
        file: PathBuf,
    },
    /// Q_2n on the torus element D(k).
    Torus {
        #[arg(short = 'n', default_value_t = 2)]
        n: usize,
        #[arg(short = 'k', default_value_t = 1, allow_hyphen_values = true)]
        k: i32,
    },
    /// All minimal zero-sum multisets over (Z/m)^N.
    Zerosum {
        #[arg(short = 'm')]
        m: u32,
        #[arg(short = 'N')]
        n: usize,
    },
    /// Davenport constant of (Z/m)^N.
    Davenport {
        #[arg(short = 'm')]
        m: u32,
        #[arg(short = 'N')]
        n: usize,
    },
    /// Invariant products of weighted generators from a JSON spec.
    Synth {
        #[arg(long)]
        spec: PathBuf,
    },
    /// Run a verification suite.
    Verify {
        #[arg(long, default_value = "all")]
        suite: String,
        /// Degree bound of the SO(4) completeness certificate.
        #[arg(long, default_value_t = 8)]
        degree: i64,
    },
    /// Run every verification suite.
    All {
        #[arg(long, default_value_t = 8)]
        degree: i64,
    },
}

impl Cli {
    pub fn run_config(&self) -> RunConfig {
        let degree = match self.command {
            Command::Verify { degree, .. } | Command::All { degree } => degree,
            _ => 8,
        };
        RunConfig {
            seed: self.global.seed,
            degree,
            budget: self.global.budget.unwrap_or_else(|| Budget::from_env().0),
            samples: self.global.samples,
            timing: self.global.timing,
            ..RunConfig::default()
        }
    }

    pub fn format(&self) -> OutputFormat {
        if self.global.json {
            OutputFormat::Json
        } else {
            OutputFormat::Text
        }
    }
}

/// What a command produced: rendered output and whether it succeeded.
#[derive(Clone, Debug, PartialEq)]
pub struct Outcome {
    pub output: String,
    pub success: bool,
}

fn simple(format: OutputFormat, command: &str, text: String, extra: Value) -> Outcome {
    let output = match format {
        OutputFormat::Text => text + "\n",
        OutputFormat::Json => {
            let mut v = json!({ "command": command, "result": text });
            if let (Some(obj), Value::Object(more)) = (v.as_object_mut(), extra) {
                obj.extend(more);
            }
            serde_json::to_string_pretty(&v).expect("json") + "\n"
        }
    };
    Outcome { output, success: true }
}

fn report(format: OutputFormat, r: &Report) -> Outcome {
    let output = match format {
        OutputFormat::Text => r.to_text(),
        OutputFormat::Json => r.to_json() + "\n",
    };
    Outcome { output, success: r.ok() }
}

/// Parses `C1`, `C2`, `I` or `"a,b;c,d"` rows of ℚ(i) constants.
pub fn parse_scalar_matrix(text: &str) -> Result<ScalarMatrix> {
    match text.trim() {
        "C1" | "c1" => return Ok(c1()),
        "C2" | "c2" => return Ok(c2()),
        "I" => return Ok(Matrix::identity(2)),
        _ => {}
    }
    let m = parse_rows(text.split(';'))?;
    m.try_map(|p: &Polynomial| {
        p.constant_value().ok_or_else(|| Error::Input(format!("matrix entry `{p}` is not a constant")))
    })
}

fn parse_rows<'a>(rows: impl Iterator<Item = &'a str>) -> Result<PolyMatrix> {
    let parsed: Vec<Vec<Polynomial>> = rows
        .map(str::trim)
        .filter(|r| !r.is_empty() && !r.starts_with('#'))
        .map(|r| r.split(',').map(|e| Polynomial::parse(e.trim())).collect::<Result<_>>())
        .collect::<Result<_>>()?;
    Matrix::from_rows(parsed)
}

/// Reads a polynomial matrix, one row per line, entries separated by commas.
pub fn parse_matrix_file(text: &str) -> Result<PolyMatrix> {
    parse_rows(text.lines())
}

fn render_matrix(m: &ScalarMatrix) -> Vec<Vec<String>> {
    (0..m.rows()).map(|i| m.row(i).iter().map(GaussianRational::to_string).collect()).collect()
}

fn read(path: &PathBuf) -> Result<String> {
    fs::read_to_string(path).map_err(|e| Error::Input(format!("cannot read {}: {e}", path.display())))
}

/// Executes a parsed command.
pub fn execute(cli: &Cli) -> Result<Outcome> {
    let format = cli.format();
    let cfg = cli.run_config();
    Ok(match &cli.command {
        Command::Reduce { word, copy } => {
            let w = FreeWord::parse(word, 2)?;
            let p = match copy {
                Some(j @ (1 | 2)) => reduce_trace_copy(&w, *j)?,
                Some(j) => return Err(Error::Input(format!("copy must be 1 or 2, got {j}"))),
                None => reduce_trace(&w)?,
            };
            simple(format, "reduce", p.to_string(), json!({ "word": w.to_string() }))
        }
        Command::Phi { a, b } => {
            let x = phi(&parse_scalar_matrix(a)?, &parse_scalar_matrix(b)?)?;
            let rows = render_matrix(&x);
            let text = rows.iter().map(|r| r.join("  ")).collect::<Vec<_>>().join("\n");
            simple(format, "phi", text, json!({ "matrix": rows }))
        }
        Command::Q4 { w1, w2 } => {
            let p = q4_tau(&FreeWord::parse(w1, 2)?, &FreeWord::parse(w2, 2)?)?;
            simple(format, "q4", p.to_string(), json!({}))
        }
        Command::Pfaffian { file } => {
            let m = parse_matrix_file(&read(file)?)?;
            simple(format, "pfaffian", pfaffian(&m)?.to_string(), json!({ "dim": m.rows() }))
        }
        Command::Torus { n, k } => {
            let q = q_torus(*n, *k)?;
            simple(format, "torus", q.to_string(), json!({ "n": n, "k": k, "nonzero": !q.is_zero() }))
        }
        Command::Zerosum { m, n } => {
            let all = minimal_zero_sum_multisets(*m, *n, Budget(cfg.budget))?;
            let lines: Vec<String> = all.iter().map(|u| u.to_string()).collect();
            let text = format!("{}\ncount: {}", lines.join("\n"), lines.len());
            simple(format, "zerosum", text, json!({ "multisets": lines, "count": all.len() }))
        }
        Command::Davenport { m, n } => {
            let d = davenport(*m, *n, Budget(cfg.budget))?;
            simple(format, "davenport", d.to_string(), json!({ "m": m, "N": n }))
        }
        Command::Synth { spec } => {
            let spec: GeneratorSpec =
                serde_json::from_str(&read(spec)?).map_err(|e| Error::Input(format!("bad spec: {e}")))?;
            let gens = spec.generators()?;
            let products = synthesize_generators(&gens, spec.m, spec.n, Budget(cfg.budget))?;
            let lines: Vec<String> = products.iter().map(|p| p.render(&gens)).collect();
            simple(format, "synth", lines.join("\n"), json!({ "products": lines }))
        }
        Command::Verify { suite, .. } => report(format, &run_named(suite, &cfg)?),
        Command::All { .. } => report(format, &run_named("all", &cfg)?),
    })
}

fn exit_code_for(e: &Error) -> i32 {
    match e {
        Error::BudgetExceeded { .. } | Error::TooLarge(..) => EXIT_FAILED,
        _ => EXIT_USAGE,
    }
}

/// Parses `argv`, runs the command and writes its output; returns the exit code.
pub fn dispatch<I, T>(argv: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(c) => c,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
        }
    };
    match execute(&cli) {
        Ok(outcome) => {
            let written = match &cli.global.out {
                Some(path) => fs::write(path, &outcome.output).map_err(|e| e.to_string()),
                None => std::io::stdout().write_all(outcome.output.as_bytes()).map_err(|e| e.to_string()),
            };
            if let Err(e) = written {
                eprintln!("error: cannot write output: {e}");
                return EXIT_USAGE;
            }
            if outcome.success {
                EXIT_OK
            } else {
                EXIT_FAILED
            }
        }
        Err(e) => {
            eprintln!("error: {e}");
            exit_code_for(&e)
        }
    }
}
