mod commands;
mod play;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

/// Solve, certify and explore the power-of-2 game.
#[derive(Parser, Debug)]
#[command(name = "powg", version, about)]
pub struct Cli {
    /// Worker threads for parallel sweeps (0 = all cores).
    #[arg(long, global = true, env = "POWG_JOBS", default_value_t = 0)]
    pub jobs: usize,

    /// Seed for every randomized step.
    #[arg(long, global = true, default_value_t = 2024)]
    pub seed: u64,

    #[arg(long, global = true, value_enum, default_value_t = Format::Json)]
    pub format: Format,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Csv,
    Text,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
pub enum Role {
    /// You name challenges; the engine answers with powers of two.
    Challenger,
    /// You answer; the engine challenges.
    Powerator,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Best known interval for c(u).
    Solve {
        /// Starting value; accepts `fact(n)`, `pow(a,b)` and `*`.
        #[arg(long)]
        u: String,
        /// Rounds searched by the bounded solver.
        #[arg(long, default_value_t = 2)]
        rounds: u32,
        /// Largest challenge swept at depth two and beyond
        /// [default: min(2u^2, 20000)].
        #[arg(long)]
        challenge_bound: Option<u64>,
        #[arg(long, default_value_t = 1 << 32)]
        node_budget: u64,
    },
    /// Interval for every u in a range, as CSV.
    Table {
        #[arg(long)]
        from: u64,
        #[arg(long)]
        to: u64,
        /// Output file; stdout when omitted.
        #[arg(long)]
        out: Option<PathBuf>,
        #[arg(long, default_value_t = 2)]
        rounds: u32,
        #[arg(long)]
        challenge_bound: Option<u64>,
    },
    /// Check a lower-bound certificate for u_i = 2^l_i v^r_i.
    Certify {
        #[arg(long)]
        v: u64,
        /// Comma-separated 2-adic exponents; `fact(m)` allowed.
        #[arg(long)]
        l: String,
        /// Comma-separated exponents of v; `fact(m)` allowed.
        #[arg(long)]
        r: String,
        /// Target round count; the largest certifiable one when omitted.
        #[arg(long)]
        k: Option<usize>,
    },
    /// The D_k, N_k, B_k, B'_k table.
    Dnb {
        #[arg(long, default_value_t = 3)]
        v: u64,
        #[arg(long, default_value_t = 5)]
        kmax: usize,
    },
    /// Closed-form upper bounds and the lower-bound formula.
    Bounds {
        /// Concrete value; alternatively give --v, --l and --r.
        #[arg(long, conflicts_with_all = ["v", "l", "r"])]
        u: Option<String>,
        #[arg(long, requires_all = ["l", "r"])]
        v: Option<u64>,
        #[arg(long)]
        l: Option<String>,
        #[arg(long)]
        r: Option<String>,
    },
    /// Check the powers-of-two axioms on an initial segment.
    Axioms {
        #[arg(long, default_value_t = 1_000_000)]
        limit: u64,
        /// Range for the divisor-window sentence.
        #[arg(long, default_value_t = 10_000)]
        eq26_limit: u64,
        /// Range for the oddless equivalence.
        #[arg(long, default_value_t = 100_000)]
        oddless_limit: u64,
    },
    /// Run reproduction suites; exit code 1 if any check fails.
    VerifyPaper {
        /// c1, c2, c2304, bprime, example613, strategies, powerator,
        /// oracles, psi, axioms or all.
        #[arg(long, default_value = "all")]
        suite: String,
        /// Skip the k = 4 factorial example.
        #[arg(long)]
        quick: bool,
    },
    /// Play interactively against the engine.
    Play {
        #[arg(long, value_enum)]
        role: Role,
        #[arg(long)]
        u: String,
        #[arg(long, default_value_t = 20)]
        max_rounds: usize,
        /// Write the final transcript as JSON here.
        #[arg(long)]
        transcript: Option<PathBuf>,
    },
}

/// Exit status: 0 success, 1 failed verification, 2 usage or I/O error.
pub enum Status {
    Ok,
    Failed,
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    if cli.jobs > 0 {
        let _ = rayon::ThreadPoolBuilder::new()
            .num_threads(cli.jobs)
            .build_global();
    }
    match commands::run(&cli) {
        Ok(Status::Ok) => ExitCode::SUCCESS,
        Ok(Status::Failed) => ExitCode::from(1),
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}
