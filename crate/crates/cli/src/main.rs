//! Command-line front end. Every command prints a single JSON report to
//! stdout; all counts are serialized as decimal strings so arbitrary
//! precision survives any JSON parser. Exit codes: 0 success, 2 invalid
//! input, 3 infeasible (a search-space cap was exceeded).

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use num_bigint::BigInt;
use serde_json::{json, Value};
use sha2::{Digest, Sha256};

use hypercolor::exact::{
    binomial, exactly_p_count, max_proper_bounds, max_proper_count, max_proper_general,
    winning_threshold,
};
use hypercolor::hypergraph::Hypergraph;
use hypercolor::oracle::{brute_max, brute_max_complete, OracleConfig, OracleReport};
use hypercolor::solver::{local_search, SolveConfig};
use hypercolor::{Error, ParamSet};

#[derive(Parser)]
#[command(
    name = "hypercolor",
    version,
    about = "Extremal counts of properly (r,p)-colored hyperedges in k-uniform hypergraphs"
)]
struct Cli {
    /// Upper bound on worker threads (results are independent of this)
    #[arg(long, global = true)]
    threads: Option<usize>,

    /// Pretty-print the JSON report
    #[arg(long, global = true)]
    pretty: bool,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Closed-form maximum properly colored edge count of the complete
    /// hypergraph (exact when r divides n, balanced value plus padded
    /// bounds otherwise)
    Exact {
        #[arg(long)]
        n: u64,
        #[arg(long)]
        k: u64,
        #[arg(long)]
        r: u64,
        #[arg(long)]
        p: u64,
    },
    /// Brute-force maximum with a witness, by full coloring enumeration or
    /// composition-reduced search, compared against the closed form
    Oracle {
        #[arg(long)]
        n: u64,
        #[arg(long)]
        k: u64,
        #[arg(long)]
        r: u64,
        #[arg(long)]
        p: u64,
        #[arg(long, value_enum, default_value_t = Mode::Composition)]
        mode: Mode,
    },
    /// Exchange-move local search on a hypergraph instance file
    Solve {
        /// Instance in the interchange format {"n":..,"k":..,"edges":[..]}
        #[arg(long)]
        input: PathBuf,
        #[arg(long)]
        r: usize,
        #[arg(long)]
        p: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, default_value_t = 8)]
        restarts: usize,
    },
    /// Smallest edge count that guarantees a win in the adversary game,
    /// with the resulting profit
    Threshold {
        #[arg(long)]
        n: u64,
        #[arg(long)]
        k: u64,
        #[arg(long)]
        r: u64,
        #[arg(long)]
        p: u64,
    },
    /// Generate a seeded random instance file in the interchange format
    Gen {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        k: usize,
        #[arg(long)]
        m: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Output path for the instance file
        #[arg(long, default_value = "hypergraph.json")]
        output: PathBuf,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum Mode {
    /// Enumerate all r^n colorings
    Full,
    /// Search class-size compositions (complete hypergraphs only)
    Composition,
}

struct CliError {
    code: u8,
    message: String,
}

impl From<Error> for CliError {
    fn from(err: Error) -> Self {
        let code = match err {
            Error::CapExceeded { .. } => 3,
            _ => 2,
        };
        CliError {
            code,
            message: err.to_string(),
        }
    }
}

impl From<std::io::Error> for CliError {
    fn from(err: std::io::Error) -> Self {
        CliError {
            code: 2,
            message: err.to_string(),
        }
    }
}

fn report(command: &str, inputs: Value, outputs: Value, provenance: &str) -> Value {
    json!({
        "command": command,
        "inputs": inputs,
        "outputs": outputs,
        "provenance": provenance,
        "tool_version": env!("CARGO_PKG_VERSION"),
    })
}

fn cmd_exact(n: u64, k: u64, r: u64, p: u64) -> Result<Value, CliError> {
    let params = ParamSet::new(n, k, r, p)?;
    let inputs = json!({"n": n, "k": k, "r": r, "p": p});
    let outputs = if params.divisible() {
        let max = max_proper_count(&params)?;
        let terms: Result<Vec<String>, Error> = (1..p)
            .map(|i| {
                Ok(exactly_p_count(&ParamSet::new(n, k, r, i)?)?
                    .value
                    .to_string())
            })
            .collect();
        json!({"M": max.value.to_string(), "m": terms?})
    } else {
        let max = max_proper_general(&params)?;
        let bounds = max_proper_bounds(&params)?;
        json!({
            "M": max.value.to_string(),
            "lower": bounds.lower.to_string(),
            "upper": bounds.upper.to_string(),
        })
    };
    Ok(report("exact", inputs, outputs, "formula"))
}

fn cmd_oracle(n: u64, k: u64, r: u64, p: u64, mode: Mode) -> Result<Value, CliError> {
    let params = ParamSet::new(n, k, r, p)?;
    let config = OracleConfig::default();
    let (oracle, witness, mode_name): (OracleReport, Value, &str) = match mode {
        Mode::Full => {
            let h = Hypergraph::complete(n as usize, k as usize)?;
            let oracle = brute_max(&h, r as usize, p as usize, &config)?;
            let assignment = json!(oracle.witness.assignment());
            (oracle, assignment, "full")
        }
        Mode::Composition => {
            let oracle =
                brute_max_complete(n as usize, k as usize, r as usize, p as usize, &config)?;
            let sizes = json!(oracle.witness.class_sizes());
            (oracle, sizes, "composition")
        }
    };
    let formula = if params.divisible() {
        max_proper_count(&params)?
    } else {
        max_proper_general(&params)?
    };
    let inputs = json!({"n": n, "k": k, "r": r, "p": p, "mode": mode_name});
    let outputs = json!({
        "best_value": oracle.best_value.to_string(),
        "witness": witness,
        "search_space_size": oracle.search_space_size.to_string(),
        "formula_agrees": oracle.best_value == formula.value,
    });
    Ok(report("oracle", inputs, outputs, "oracle"))
}

fn cmd_solve(
    input: &PathBuf,
    r: usize,
    p: usize,
    seed: u64,
    restarts: usize,
) -> Result<Value, CliError> {
    let text = std::fs::read_to_string(input)?;
    let h = Hypergraph::from_json(&text)?;
    let result = local_search(&h, r, p, &SolveConfig::new(seed, restarts))?;
    let inputs = json!({
        "input": input.display().to_string(),
        "r": r,
        "p": p,
        "seed": seed.to_string(),
        "restarts": restarts,
    });
    let outputs = json!({
        "best_value": result.best_value.to_string(),
        "best_coloring": result.best_coloring.assignment(),
        "converged": result.converged,
        "moves_taken": result.moves_taken,
        "restarts_used": result.restarts_used,
    });
    Ok(report("solve", inputs, outputs, "solver"))
}

fn cmd_threshold(n: u64, k: u64, r: u64, p: u64) -> Result<Value, CliError> {
    let params = ParamSet::new(n, k, r, p)?;
    let threshold = winning_threshold(&params)?;
    // profit of playing the threshold: all possible edges minus the bid;
    // signed because degenerate parameter sets can push it below zero
    let profit = BigInt::from(binomial(n, k)) - BigInt::from(threshold.clone());
    let inputs = json!({"n": n, "k": k, "r": r, "p": p});
    let outputs = json!({
        "threshold": threshold.to_string(),
        "profit": profit.to_string(),
    });
    Ok(report("threshold", inputs, outputs, "formula"))
}

fn cmd_gen(n: usize, k: usize, m: usize, seed: u64, output: &PathBuf) -> Result<Value, CliError> {
    let h = Hypergraph::random(n, k, m, seed)?;
    let text = format!("{}\n", h.to_json());
    std::fs::write(output, &text)?;
    let digest: String = Sha256::digest(text.as_bytes())
        .iter()
        .map(|b| format!("{b:02x}"))
        .collect();
    let inputs = json!({"n": n, "k": k, "m": m, "seed": seed.to_string()});
    let outputs = json!({
        "path": output.display().to_string(),
        "edge_count": h.edge_count(),
        "digest": format!("sha256:{digest}"),
    });
    Ok(report("gen", inputs, outputs, "generator"))
}

fn run(cli: &Cli) -> Result<Value, CliError> {
    match &cli.command {
        Command::Exact { n, k, r, p } => cmd_exact(*n, *k, *r, *p),
        Command::Oracle { n, k, r, p, mode } => cmd_oracle(*n, *k, *r, *p, *mode),
        Command::Solve {
            input,
            r,
            p,
            seed,
            restarts,
        } => cmd_solve(input, *r, *p, *seed, *restarts),
        Command::Threshold { n, k, r, p } => cmd_threshold(*n, *k, *r, *p),
        Command::Gen {
            n,
            k,
            m,
            seed,
            output,
        } => cmd_gen(*n, *k, *m, *seed, output),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    #[cfg(feature = "parallel")]
    if let Some(threads) = cli.threads {
        // best effort: the pool can only be configured once per process
        let _ = rayon::ThreadPoolBuilder::new()
            .num_threads(threads)
            .build_global();
    }
    match run(&cli) {
        Ok(report) => {
            let rendered = if cli.pretty {
                serde_json::to_string_pretty(&report)
            } else {
                serde_json::to_string(&report)
            }
            .expect("report serialization cannot fail");
            println!("{rendered}");
            ExitCode::SUCCESS
        }
        Err(err) => {
            eprintln!("error: {}", err.message);
            ExitCode::from(err.code)
        }
    }
}
