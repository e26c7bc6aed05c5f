//! `ratdyck`: count, enumerate and transform rational Dyck paths, and run
//! the identity verification suite.
//!
//! Exit status is 0 when everything went as expected, 1 when a
//! verification did not, and 2 on bad input.

use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use ratdyck_paths::{count_paths, enumerate_paths, Slope};
use ratdyck_verify::convert::{convert, read_input, render, Target};
use ratdyck_verify::golden::golden_suite;
use ratdyck_verify::orbit::{format_cycle, orbit_table};
use ratdyck_verify::{
    identity, run_suite, verify_in, Ctx, MapName, SuiteOptions, VerificationReport, VerifyError,
};
use serde_json::json;

#[derive(Parser)]
#[command(name = "ratdyck", version, about = "Rational Dyck path dynamics")]
struct Cli {
    #[command(subcommand)]
    command: Command,
    /// Output format.
    #[arg(long, value_enum, default_value_t = Format::Text, global = true)]
    format: Format,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Args, Clone, Copy)]
struct SlopeArgs {
    #[arg(long)]
    a: usize,
    #[arg(long)]
    b: usize,
    #[arg(long)]
    n: usize,
}

impl SlopeArgs {
    fn slope(self) -> Result<Slope, VerifyError> {
        Ok(Slope::new(self.a, self.b, self.n)?)
    }
}

#[derive(Args)]
struct InputArgs {
    /// Path literal: `1,3,5`, a digit string, or a U/R word.
    #[arg(long, allow_hyphen_values = true)]
    path: Option<String>,
    /// Chain of non-crossing partitions, coarsest layer first: `1.2/3;1/2/3`.
    #[arg(long)]
    ncp: Option<String>,
    /// 321-avoiding permutation, for classical paths.
    #[arg(long)]
    perm: Option<String>,
}

#[derive(Subcommand)]
enum Command {
    /// Number of paths of a slope.
    Count(SlopeArgs),
    /// Every path of a slope in lexicographic order.
    Enum(SlopeArgs),
    /// Applies a map, or a power of it, to one object.
    Apply {
        #[command(flatten)]
        slope: SlopeArgs,
        #[command(flatten)]
        input: InputArgs,
        /// Map name, e.g. promotion, evacuation, rowmotion, mat, kre.
        #[arg(long)]
        map: String,
        #[arg(long, default_value_t = 1, allow_hyphen_values = true)]
        power: i64,
    },
    /// Cycle decomposition of a bijective map.
    Orbit {
        #[command(flatten)]
        slope: SlopeArgs,
        #[arg(long)]
        map: String,
    },
    /// Runs identities: one identity on one slope, or the suite.
    Verify {
        /// Identity name; the whole registry when omitted.
        identity: Option<String>,
        #[arg(long)]
        a: Option<usize>,
        #[arg(long)]
        b: Option<usize>,
        #[arg(long)]
        n: Option<usize>,
        /// Cap on the size of every suite domain.
        #[arg(long)]
        max_n: Option<usize>,
        /// Lists the registered identities instead of running them.
        #[arg(long)]
        list: bool,
    },
    /// Checks the embedded reference tables.
    Golden,
    /// Converts an object to another encoding.
    Convert {
        #[command(flatten)]
        slope: SlopeArgs,
        #[command(flatten)]
        input: InputArgs,
        /// One of path, word, tableau, matching, dual-matching, ncp, perm,
        /// dt, k-sequence, kappa, young-rows, tiling.
        #[arg(long)]
        to: String,
    },
}

fn print_reports(reports: &[VerificationReport], format: Format) -> ExitCode {
    match format {
        Format::Text => {
            for r in reports {
                println!("{}", r.summary());
                for c in &r.counterexamples {
                    println!("           counterexample {c}");
                }
            }
            let bad = reports.iter().filter(|r| !r.as_expected()).count();
            println!("{} checks, {} not as expected", reports.len(), bad);
        }
        Format::Json => {
            println!(
                "{}",
                serde_json::to_string_pretty(reports).expect("serializable")
            );
        }
    }
    if reports.iter().all(VerificationReport::as_expected) {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(1)
    }
}

fn run(cli: Cli) -> Result<ExitCode, VerifyError> {
    let format = cli.format;
    match cli.command {
        Command::Count(s) => {
            let count = count_paths(s.slope()?);
            match format {
                Format::Text => println!("{count}"),
                Format::Json => println!(
                    "{}",
                    json!({"a": s.a, "b": s.b, "n": s.n, "count": count.to_string()})
                ),
            }
        }
        Command::Enum(s) => {
            let paths = enumerate_paths(s.slope()?);
            match format {
                Format::Text => paths.iter().for_each(|p| println!("{p}")),
                Format::Json => {
                    println!("{}", serde_json::to_string(&paths).expect("serializable"))
                }
            }
        }
        Command::Apply {
            slope,
            input,
            map,
            power,
        } => {
            let ctx = Ctx::new(slope.slope()?);
            let map: MapName = map.parse()?;
            let (p, kind) = read_input(
                ctx.slope(),
                input.path.as_deref(),
                input.ncp.as_deref(),
                input.perm.as_deref(),
            )?;
            let q = ctx.apply_power(map, power, &p)?;
            match format {
                Format::Text => println!("{}", render(&q, kind)?),
                Format::Json => println!(
                    "{}",
                    json!({"map": map.name(), "power": power, "input": render(&p, kind)?, "output": render(&q, kind)?, "path": q})
                ),
            }
        }
        Command::Orbit { slope, map } => {
            let ctx = Ctx::new(slope.slope()?);
            let map: MapName = map.parse()?;
            let table = orbit_table(&ctx, map)?;
            match format {
                Format::Text => {
                    for c in &table {
                        println!("{}", format_cycle(c, |p| p.to_string()));
                    }
                }
                Format::Json => {
                    println!("{}", serde_json::to_string(&table).expect("serializable"))
                }
            }
        }
        Command::Verify {
            identity: name,
            a,
            b,
            n,
            max_n,
            list,
        } => {
            if list {
                for id in ratdyck_verify::identities() {
                    println!("{:<28} {}", id.name, id.statement);
                }
                return Ok(ExitCode::SUCCESS);
            }
            let reports = match (name, a, b, n) {
                (Some(name), Some(a), Some(b), Some(n)) => {
                    let id = identity(&name)?;
                    vec![verify_in(id, &Ctx::new(Slope::new(a, b, n)?))?]
                }
                (name, None, None, None) => run_suite(&SuiteOptions {
                    names: name.into_iter().collect(),
                    max_n,
                })?,
                _ => {
                    return Err(VerifyError::BadInput(
                        "give all of --a, --b, --n or none of them".to_string(),
                    ))
                }
            };
            return Ok(print_reports(&reports, format));
        }
        Command::Golden => return Ok(print_reports(&golden_suite(), format)),
        Command::Convert { slope, input, to } => {
            let target: Target = to.parse()?;
            let (p, _) = read_input(
                slope.slope()?,
                input.path.as_deref(),
                input.ncp.as_deref(),
                input.perm.as_deref(),
            )?;
            let value = convert(&p, target)?;
            match format {
                Format::Text => println!("{value}"),
                Format::Json => println!(
                    "{}",
                    json!({"path": p, "to": target.name(), "value": value})
                ),
            }
        }
    }
    Ok(ExitCode::SUCCESS)
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() {
                ExitCode::from(2)
            } else {
                ExitCode::SUCCESS
            };
        }
    };
    match run(cli) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}
