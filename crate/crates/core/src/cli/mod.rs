//! The `specrank` command line.
//!
//! Exit status is 0 on success, 1 when the mathematics does not produce a
//! value (a gap, a failed consistency check, a failed verification) and 2
//! when the input is malformed.

use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand, ValueEnum};
use serde::Serialize;

use crate::fell::{fell_compactification, is_fell_convergent, limits_and_accumulation, SequenceClass};
use crate::ordinal::Ordinal;
use crate::spectra::{analyze, classify, parse_expr, truncate, Atom, AtomSource, SpectraError, SpectrumExpr};
use crate::topology::{FiniteSpace, SpaceFile, Weight};

pub mod report;
pub mod verify;

pub use report::RankReport;

pub const EXIT_OK: i32 = 0;
pub const EXIT_DOMAIN: i32 = 1;
pub const EXIT_MALFORMED: i32 = 2;

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum, Serialize)]
pub enum Format {
    Text,
    Json,
    Dot,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Suite {
    Paper,
}

#[derive(Clone, Debug, PartialEq, Eq, Subcommand)]
pub enum Command {
    /// Pedersen and Fell ranks of an expression or a space file.
    Rank { input: String },
    /// The Fell compactification of a finite space.
    Compactify { input: String },
    /// Subhomogeneity and type-I verdicts at a bound.
    Classify {
        input: String,
        #[arg(long)]
        beta: String,
    },
    /// Cuts families at index N and writes the finite space.
    Truncate { input: String, n: u64 },
    /// Runs a bundled verification suite.
    Verify {
        #[arg(long, value_enum, default_value_t = Suite::Paper)]
        suite: Suite,
    },
    /// Limit and accumulation sets of sequences in a finite space.
    Limits {
        input: String,
        /// Comma-separated points visited infinitely often; all classes if absent.
        #[arg(long)]
        visits: Option<String>,
    },
}

#[derive(Clone, Debug, Parser)]
#[command(name = "specrank", version, about = "Ordinal ranks of weighted spectra")]
pub struct RunConfig {
    #[command(subcommand)]
    pub command: Command,
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    pub format: Format,
    #[arg(long, global = true, default_value_t = 6)]
    pub fuel: u64,
    #[arg(long, global = true, default_value_t = 0)]
    pub seed: u64,
    /// Accept ordinal literals that are not in Cantor normal form.
    #[arg(long, global = true)]
    pub normalize: bool,
    #[arg(short = 'o', long = "output", global = true)]
    pub output: Option<PathBuf>,
}

#[derive(Debug)]
enum Failure {
    Malformed(String),
    Domain(String),
}

impl From<SpectraError> for Failure {
    fn from(e: SpectraError) -> Self {
        if e.is_input_error() {
            Failure::Malformed(e.to_string())
        } else {
            Failure::Domain(e.to_string())
        }
    }
}

/// Reads an expression, a file holding one, or a space file.
pub fn load_expr(input: &str, normalize: bool) -> Result<SpectrumExpr, SpectraError> {
    let path = Path::new(input);
    if !input.trim_start().starts_with('(') && path.is_file() {
        let text = std::fs::read_to_string(path).map_err(|e| SpectraError::Malformed(format!("{input}: {e}")))?;
        if text.trim_start().starts_with('{') {
            let loaded = SpaceFile::parse(&text)?;
            let weight = loaded.weight.unwrap_or_else(|| Weight::constant(&loaded.space, 1));
            return Ok(SpectrumExpr::atom(Atom::new(
                loaded.space,
                weight,
                AtomSource::File(input.to_string()),
            )?));
        }
        return parse_expr(text.trim(), normalize);
    }
    parse_expr(input, normalize)
}

/// The finite space behind an input: the atom itself or a truncation.
fn load_space(input: &str, cfg: &RunConfig) -> Result<(FiniteSpace, Weight), SpectraError> {
    match load_expr(input, cfg.normalize)? {
        SpectrumExpr::Atom(a) => Ok((a.space.clone(), a.weight.clone())),
        e => {
            let t = truncate(&e, cfg.fuel)?;
            Ok((t.space, t.weight))
        }
    }
}

fn fell_failure(e: crate::fell::FellError) -> Failure {
    match e {
        crate::fell::FellError::CharacterizationMismatch(m) => Failure::Domain(m),
        other => Failure::Malformed(other.to_string()),
    }
}

/// Runs one command, writing the report to `out` (or the `-o` file).
pub fn run(cfg: &RunConfig, out: &mut dyn Write, err: &mut dyn Write) -> i32 {
    let mut buf = Vec::new();
    let result = execute(cfg, &mut buf);
    let sink = match &cfg.output {
        Some(path) => std::fs::write(path, &buf).map_err(|e| format!("{}: {e}", path.display())),
        None => out.write_all(&buf).map_err(|e| e.to_string()),
    };
    if let Err(e) = sink {
        let _ = writeln!(err, "error: {e}");
        return EXIT_MALFORMED;
    }
    match result {
        Ok(code) => code,
        Err(Failure::Malformed(m)) => {
            let _ = writeln!(err, "error: {m}");
            EXIT_MALFORMED
        }
        Err(Failure::Domain(m)) => {
            let _ = writeln!(err, "error: {m}");
            EXIT_DOMAIN
        }
    }
}

/// Parses `args` (program name first) and runs.
pub fn main_with_args(args: impl IntoIterator<Item = String>) -> i32 {
    match RunConfig::try_parse_from(args) {
        Ok(cfg) => run(&cfg, &mut std::io::stdout(), &mut std::io::stderr()),
        Err(e) => {
            let code = if e.use_stderr() { EXIT_MALFORMED } else { EXIT_OK };
            let _ = e.print();
            code
        }
    }
}

fn json_line<T: Serialize>(v: &T) -> String {
    serde_json::to_string_pretty(v).expect("serializable") + "\n"
}

fn execute(cfg: &RunConfig, out: &mut Vec<u8>) -> Result<i32, Failure> {
    let mut emit = |s: String| out.extend_from_slice(s.as_bytes());
    match &cfg.command {
        Command::Rank { input } => {
            let e = load_expr(input, cfg.normalize)?;
            let a = analyze(&e)?;
            let report = RankReport::build(&a, cfg.seed, cfg.fuel);
            emit(match cfg.format {
                Format::Text => report.text(),
                Format::Json => report.json(),
                Format::Dot => report.dot(),
            });
            Ok(if a.gap().is_some() { EXIT_DOMAIN } else { EXIT_OK })
        }
        Command::Classify { input, beta } => {
            let e = load_expr(input, cfg.normalize)?;
            let beta = Ordinal::parse_with(beta, cfg.normalize).map_err(|e| Failure::Malformed(e.to_string()))?;
            let c = classify(&e, &beta)?;
            let ideal = c.fell_ideal()?.map(|(names, _)| names);
            #[derive(Serialize)]
            struct Out {
                expression: String,
                seed: u64,
                beta: String,
                pedersen: Option<String>,
                fell: Option<String>,
                subhomogeneous: Option<bool>,
                type_one: Option<bool>,
                fell_ideal: Option<Vec<String>>,
                gap: Option<String>,
            }
            let o = Out {
                expression: e.to_string(),
                seed: cfg.seed,
                beta: beta.to_string(),
                pedersen: c.analysis.pedersen_rank().ok().map(|r| r.to_string()),
                fell: c.analysis.fell_rank().ok().map(|r| r.to_string()),
                subhomogeneous: c.is_subhomogeneous().ok(),
                type_one: c.is_type_one().ok(),
                fell_ideal: ideal,
                gap: c.analysis.gap().map(|g| g.to_string()),
            };
            emit(match cfg.format {
                Format::Json => json_line(&o),
                _ => {
                    let show = |v: Option<bool>| v.map(|b| b.to_string()).unwrap_or_else(|| "gap".into());
                    let mut s = format!(
                        "expression      {}\npedersen        {}\nfell            {}\n{}-subhomogeneous  {}\ntype I_{}         {}\n",
                        o.expression,
                        o.pedersen.as_deref().unwrap_or("gap"),
                        o.fell.as_deref().unwrap_or("gap"),
                        o.beta,
                        show(o.subhomogeneous),
                        o.beta,
                        show(o.type_one),
                    );
                    if let Some(ideal) = &o.fell_ideal {
                        s.push_str(&format!("fell ideal      {{{}}}\n", ideal.join(", ")));
                    }
                    if let Some(g) = &o.gap {
                        s.push_str(&format!("gap             {g}\n"));
                    }
                    s
                }
            });
            Ok(if o.gap.is_some() { EXIT_DOMAIN } else { EXIT_OK })
        }
        Command::Truncate { input, n } => {
            let e = load_expr(input, cfg.normalize)?;
            let t = truncate(&e, *n)?;
            let file = SpaceFile::from_space(&t.space, Some(&t.weight));
            emit(json_line(&file));
            Ok(EXIT_OK)
        }
        Command::Compactify { input } => {
            let (space, _) = load_space(input, cfg)?;
            let phi = fell_compactification(&space).map_err(fell_failure)?;
            let named = phi.named(&space);
            emit(match cfg.format {
                Format::Json => json_line(&named),
                _ => named.iter().map(|m| format!("{{{}}}\n", m.join(", "))).collect(),
            });
            Ok(EXIT_OK)
        }
        Command::Limits { input, visits } => {
            let (space, _) = load_space(input, cfg)?;
            let classes = match visits {
                Some(list) => {
                    let names: Vec<&str> = list.split(',').map(str::trim).collect();
                    let set = space
                        .set_of(&names)
                        .map_err(|e| Failure::Malformed(e.to_string()))?;
                    vec![SequenceClass::new(&space, set).map_err(fell_failure)?]
                }
                None => SequenceClass::all(&space).map_err(fell_failure)?,
            };
            #[derive(Serialize)]
            struct Row {
                visits: Vec<String>,
                limits: Vec<String>,
                accumulation: Vec<String>,
                convergent: bool,
            }
            let rows: Vec<Row> = classes
                .iter()
                .map(|q| {
                    let (l, a) = limits_and_accumulation(q);
                    Row {
                        visits: space.names_of(q.visits()),
                        limits: space.names_of(&l),
                        accumulation: space.names_of(&a),
                        convergent: is_fell_convergent(q).is_some(),
                    }
                })
                .collect();
            emit(match cfg.format {
                Format::Json => json_line(&rows),
                _ => rows
                    .iter()
                    .map(|r| {
                        format!(
                            "visits {{{}}}  limits {{{}}}  accumulation {{{}}}{}\n",
                            r.visits.join(", "),
                            r.limits.join(", "),
                            r.accumulation.join(", "),
                            if r.convergent { "  convergent" } else { "" }
                        )
                    })
                    .collect(),
            });
            Ok(EXIT_OK)
        }
        Command::Verify { suite: Suite::Paper } => {
            let outcomes = verify::run_suite(cfg.seed);
            let passed = outcomes.iter().all(|o| o.passed);
            emit(match cfg.format {
                Format::Json => json_line(&outcomes),
                _ => outcomes.iter().map(|o| o.line() + "\n").collect(),
            });
            Ok(if passed { EXIT_OK } else { EXIT_DOMAIN })
        }
    }
}
