use std::io::{Read, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use rgroup::render::{render, Format};
use rgroup::run::{run, run_text, Options};
use rgroup::schema::{Mode, ProblemSpec};

/// Relative Weyl groups, R-groups and irreducibility of principal series.
#[derive(Parser)]
#[command(name = "rgroup", version)]
struct Cli {
    #[command(subcommand)]
    verb: Verb,
    #[command(flatten)]
    common: Common,
}

#[derive(Args)]
struct Common {
    /// Problem spec (JSON); standard input when omitted.
    #[arg(long, global = true)]
    input: Option<PathBuf>,
    /// Report destination; standard output when omitted.
    #[arg(long, global = true)]
    output: Option<PathBuf>,
    #[arg(long, global = true, value_enum, default_value = "json")]
    format: Format,
    /// Maximum number of Weyl group elements to enumerate.
    #[arg(long, global = true)]
    cap: Option<usize>,
    /// Worker threads for sweeps.
    #[arg(long, global = true)]
    jobs: Option<usize>,
}

#[derive(Subcommand)]
enum Verb {
    /// Relative roots and the decomposition W_M = W_M0 x| W_M1.
    Decompose,
    /// Unramified principal series verdict (Muller definitions).
    DecidePs,
    /// Generalized principal series verdict from a sigma oracle.
    DecideGps,
    /// Certify every Levi subset of every rank up to RANK.
    Verify {
        /// Family letter; read from the input when omitted.
        family: Option<String>,
        /// Maximal rank.
        rank: Option<usize>,
    },
    /// Principal series verdicts over a grid of characters.
    Atlas,
    /// Product formula for block-diagonal data.
    ProductCount,
    /// Pairwise-flag irreducibility prediction.
    Predict,
}

fn read_input(path: &Option<PathBuf>) -> std::io::Result<String> {
    match path {
        Some(p) => std::fs::read_to_string(p),
        None => {
            let mut s = String::new();
            std::io::stdin().read_to_string(&mut s)?;
            Ok(s)
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let c = &cli.common;
    let opts = Options {
        cap: c.cap,
        jobs: c.jobs,
    };
    let mode = match &cli.verb {
        Verb::Decompose => Mode::Decompose,
        Verb::DecidePs => Mode::DecidePs,
        Verb::DecideGps => Mode::DecideGps,
        Verb::Verify { .. } => Mode::Verify,
        Verb::Atlas => Mode::Atlas,
        Verb::ProductCount => Mode::ProductCount,
        Verb::Predict => Mode::Predict,
    };
    if !c.format.supports(mode) {
        eprintln!("rgroup: csv output is only available for atlas and verify");
        return ExitCode::from(2);
    }
    let env = match &cli.verb {
        Verb::Verify {
            family: Some(family),
            rank: Some(rank),
        } => {
            let spec = ProblemSpec {
                family: family.clone(),
                rank: *rank,
                levi: Vec::new(),
                character: None,
                sigma: None,
                mode: None,
                blocks: None,
                factor_counts: None,
                grid: None,
            };
            run(mode, &spec, &opts)
        }
        Verb::Verify {
            family: Some(_),
            rank: None,
        } => {
            eprintln!("rgroup: verify needs both FAMILY and RANK");
            return ExitCode::from(2);
        }
        _ => match read_input(&c.input) {
            Ok(text) => run_text(mode, &text, &opts),
            Err(e) => {
                eprintln!("rgroup: cannot read input: {e}");
                return ExitCode::from(2);
            }
        },
    };
    let body = match render(&env, mode, c.format) {
        Ok(b) => b,
        Err(e) => {
            eprintln!("rgroup: {e}");
            return ExitCode::from(4);
        }
    };
    if c.format == Format::Csv {
        for d in &env.diagnostics {
            eprintln!("rgroup: [{}] {}", d.code, d.message);
        }
    }
    let written = match &c.output {
        Some(p) => std::fs::write(p, body.as_bytes()),
        None => std::io::stdout().write_all(body.as_bytes()),
    };
    if let Err(e) = written {
        eprintln!("rgroup: cannot write output: {e}");
        return ExitCode::from(4);
    }
    ExitCode::from(env.exit_code() as u8)
}
