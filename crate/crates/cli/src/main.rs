use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use serde_json::Value;

mod commands;
mod render;

/// Exact decomposition of Euler and Dickson polynomials and the alternating
/// power-sum equation.
///
/// Polynomials are given either as ascending coefficient lists (`0,1,0,-2,1`)
/// or in human form (`x^4 - 2*x^3 + x`). Rationals are written `p/q`.
#[derive(Parser, Debug)]
#[command(name = "eulerdecomp", version, about, long_about = None)]
pub struct Cli {
    /// Emit JSON instead of text.
    #[arg(long, global = true)]
    json: bool,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Euler polynomial E_k (or the Euler number with --number).
    Euler {
        k: usize,
        #[arg(long)]
        number: bool,
    },
    /// Reduced polynomial Ẽ_m with E_2m(x) = Ẽ_m((x - 1/2)^2).
    Etilde { m: usize },
    /// Dickson polynomial D_m(x, a).
    Dickson {
        m: usize,
        #[arg(long, default_value = "1", allow_hyphen_values = true)]
        a: String,
    },
    /// Alternating power sum -1^k + 2^k - ... + (-1)^n n^k.
    Sum { k: u32, n: String },
    /// Functional decompositions of a polynomial.
    Decompose(DecomposeArgs),
    /// Power and Dickson forms of a polynomial.
    Detect {
        #[arg(allow_hyphen_values = true)]
        poly: String,
    },
    /// Extrema of D_k(x, a) and their types.
    DicksonExtrema {
        k: usize,
        #[arg(long, default_value = "1", allow_hyphen_values = true)]
        a: String,
    },
    /// Match g against the exceptional shapes of the equation.
    Classify {
        #[arg(long)]
        k: u32,
        #[arg(allow_hyphen_values = true)]
        g: String,
        /// List every matching form rather than the first.
        #[arg(long)]
        all: bool,
    },
    /// Generate verified solutions from one of the explicit families.
    Family(FamilyArgs),
    /// Bounded brute-force search for solutions.
    Search(SearchArgs),
    /// Batch checks of the structural results over index ranges.
    VerifyTheorems(TheoremArgs),
}

#[derive(Args, Debug)]
pub struct DecomposeArgs {
    #[arg(allow_hyphen_values = true)]
    poly: String,
    /// Only the normalized decomposition with this inner degree.
    #[arg(long, conflicts_with_all = ["all", "complete"])]
    k: Option<usize>,
    /// Every normalized decomposition (the default).
    #[arg(long)]
    all: bool,
    /// Complete decompositions into indecomposable factors.
    #[arg(long, conflicts_with = "all")]
    complete: bool,
}

#[derive(Args, Debug)]
pub struct FamilyArgs {
    /// Case tag: i, ii, iii, iv or v.
    #[arg(long = "case")]
    case: String,
    #[arg(long)]
    k: u32,
    /// even-n or odd-n.
    #[arg(long, default_value = "even-n")]
    branch: String,
    /// Parameter polynomial r (cases i, ii, iii, v).
    #[arg(long, allow_hyphen_values = true)]
    r: Option<String>,
    /// Odd exponent t >= 3 (case iv).
    #[arg(long, default_value_t = 3)]
    t: usize,
    #[arg(long, default_value_t = 10)]
    count: usize,
}

#[derive(Args, Debug)]
pub struct SearchArgs {
    #[arg(long)]
    k: u32,
    #[arg(allow_hyphen_values = true)]
    g: String,
    #[arg(long, default_value_t = 100)]
    x_max: u64,
    #[arg(long, default_value_t = -1000, allow_hyphen_values = true)]
    y_min: i64,
    #[arg(long, default_value_t = 1000, allow_hyphen_values = true)]
    y_max: i64,
}

#[derive(Args, Debug)]
pub struct TheoremArgs {
    #[arg(long, default_value_t = 30)]
    euler_max: usize,
    #[arg(long, default_value_t = 20)]
    rak_max: usize,
    #[arg(long, default_value_t = 12)]
    dickson_max: usize,
    #[arg(long, default_value_t = 40)]
    factor_max: usize,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    /// Random samples per index for the sampled checks.
    #[arg(long, default_value_t = 3)]
    samples: usize,
}

/// What a subcommand produced. `ok == false` means partial output followed by
/// a failure (exit code 1).
pub struct Report {
    pub text: String,
    pub json: Value,
    pub ok: bool,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match commands::run(&cli.command) {
        Ok(report) => {
            if cli.json {
                println!("{}", serde_json::to_string_pretty(&report.json).expect("serializable"));
            } else {
                print!("{}", report.text);
            }
            if report.ok {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            }
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(1)
        }
    }
}
