use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use serde_json::Value;

use verma_core::cli::{
    render_table, run, run_json, AlgebraJson, Command, JobSpec, Params, WeightJson,
};

/// Exact computations with Verma modules over generalized
/// Heisenberg-Virasoro algebras.
#[derive(Parser)]
#[command(name = "verma", version)]
struct Cli {
    #[command(subcommand)]
    command: Cmd,
}

#[derive(Subcommand)]
enum Cmd {
    /// Gram matrix of the contravariant form at one grade
    Gram(JobArgs),
    /// Determinant of the Gram matrix
    Det(JobArgs),
    /// Trial-divide the determinant by the forms f(k)
    Factor(JobArgs),
    /// Decide irreducibility of the Verma module
    Irreducible(JobArgs),
    /// Kernel of the Gram matrix for a numeric weight
    Radical(JobArgs),
    /// Check antisymmetry and the Jacobi identity on a window
    VerifyJacobi(JobArgs),
    /// Check that the embedding of the rank-one algebra preserves brackets
    VerifyIso(JobArgs),
    /// Randomized closure probes of the submodule N (dense orders)
    #[command(name = "probe-N", alias = "probe-n")]
    ProbeN(JobArgs),
    /// Pull a weight back to the rank-one algebra
    Transport(JobArgs),
    /// Run a job described by a JSON file
    Run {
        job: String,
        #[command(flatten)]
        out: Output,
    },
}

#[derive(Args)]
struct Output {
    /// Emit JSON (default)
    #[arg(long, conflicts_with = "table")]
    json: bool,
    /// Emit an aligned text table
    #[arg(long)]
    table: bool,
}

#[derive(Args)]
struct JobArgs {
    /// Rational value of λ, or "generic"
    #[arg(long, allow_hyphen_values = true)]
    lambda: String,
    /// Group description as JSON or a path to a JSON file; defaults to Z
    #[arg(long)]
    group: Option<String>,
    /// "symbolic", a JSON map of slot values, or a path to one
    #[arg(long)]
    weight: Option<String>,
    #[arg(long)]
    grade: Option<u32>,
    /// Length of the reported criterion trace
    #[arg(long)]
    bound: Option<u64>,
    #[arg(long)]
    seed: Option<u64>,
    #[arg(long)]
    samples: Option<usize>,
    #[arg(long)]
    window: Option<i64>,
    /// Determinant mode: brute or triangular
    #[arg(long)]
    mode: Option<String>,
    /// Count values on inactive C_LI centrals in dense decisions
    #[arg(long)]
    strict: bool,
    #[command(flatten)]
    out: Output,
}

fn inline_or_file(text: &str) -> Result<String, String> {
    let t = text.trim_start();
    if t.starts_with('{') || t.starts_with('"') {
        return Ok(text.to_owned());
    }
    std::fs::read_to_string(text).map_err(|e| format!("cannot read `{text}`: {e}"))
}

fn job_from(command: Command, a: &JobArgs) -> Result<JobSpec, String> {
    let group = match &a.group {
        None => None,
        Some(g) => {
            Some(serde_json::from_str(&inline_or_file(g)?).map_err(|e| format!("--group: {e}"))?)
        }
    };
    let weight = match a.weight.as_deref() {
        None => None,
        Some("symbolic") => Some(WeightJson::Keyword("symbolic".into())),
        Some(w) => {
            Some(serde_json::from_str(&inline_or_file(w)?).map_err(|e| format!("--weight: {e}"))?)
        }
    };
    Ok(JobSpec {
        command,
        algebra: AlgebraJson {
            lambda: a.lambda.clone(),
            group,
        },
        weight,
        params: Params {
            grade: a.grade,
            bound: a.bound,
            seed: a.seed,
            samples: a.samples,
            window: a.window,
            mode: a.mode.clone(),
            strict: a.strict,
        },
    })
}

fn emit(doc: &Value, code: i32, table: bool) -> ExitCode {
    if table {
        print!("{}", render_table(doc));
    } else {
        println!(
            "{}",
            serde_json::to_string_pretty(doc).expect("serializable")
        );
    }
    ExitCode::from(code as u8)
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { 1 } else { 0 });
        }
    };
    let (command, args) = match &cli.command {
        Cmd::Run { job, out } => {
            let (doc, code) = match inline_or_file(job) {
                Ok(text) => run_json(&text),
                Err(e) => (serde_json::json!({"error": e, "field": "job"}), 1),
            };
            return emit(&doc, code, out.table);
        }
        Cmd::Gram(a) => (Command::Gram, a),
        Cmd::Det(a) => (Command::Det, a),
        Cmd::Factor(a) => (Command::Factor, a),
        Cmd::Irreducible(a) => (Command::Irreducible, a),
        Cmd::Radical(a) => (Command::Radical, a),
        Cmd::VerifyJacobi(a) => (Command::VerifyJacobi, a),
        Cmd::VerifyIso(a) => (Command::VerifyIso, a),
        Cmd::ProbeN(a) => (Command::ProbeN, a),
        Cmd::Transport(a) => (Command::Transport, a),
    };
    let (doc, code) = match job_from(command, args) {
        Ok(job) => run(&job),
        Err(e) => (
            serde_json::json!({"command": command.name(), "error": e, "field": "arguments"}),
            1,
        ),
    };
    emit(&doc, code, args.out.table)
}
