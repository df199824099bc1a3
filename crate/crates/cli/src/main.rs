//! `heinzlab`: list suites, run verification campaigns, evaluate means and
//! norms on matrix files, and shrink stored counterexamples.

mod eval;
mod output;

use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use heinzlab::harness::{run_campaign, shrink, violates, CampaignConfig, CampaignReport};
use heinzlab::suites::{InequalityCase, NormSpec, SuiteRegistry, SuiteStatus};
use heinzlab::Error;

const EXIT_OK: u8 = 0;
const EXIT_VIOLATION: u8 = 1;
const EXIT_USAGE: u8 = 2;
const EXIT_NUMERICAL: u8 = 3;

#[derive(Parser)]
#[command(name = "heinzlab", version, about = "Randomized verification of Heinz/Young-type matrix inequalities")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Print every suite with its status.
    List,
    /// Run a campaign, or replay one stored case with --case.
    Verify(VerifyArgs),
    /// Evaluate a single quantity.
    Eval(eval::EvalArgs),
    /// Shrink a stored violating case.
    Shrink(ShrinkArgs),
}

#[derive(clap::Args)]
struct VerifyArgs {
    /// Suite ids, comma separated or repeated; `all` selects every public suite.
    #[arg(long, value_delimiter = ',', default_value = "all")]
    suite: Vec<String>,
    #[arg(long, default_value_t = 1000)]
    trials: u64,
    #[arg(long, default_value_t = 1)]
    dim_min: usize,
    #[arg(long, default_value_t = 6)]
    dim_max: usize,
    #[arg(long, env = "HEINZLAB_SEED", default_value_t = 0)]
    seed: u64,
    #[arg(long, default_value_t = 1e-9)]
    tol: f64,
    /// Norm family, e.g. `kyfan:all,schatten:1,schatten:inf`.
    #[arg(long, value_delimiter = ',')]
    norms: Option<Vec<NormSpec>>,
    /// Report file. Counterexamples are written next to it.
    #[arg(long)]
    out: Option<PathBuf>,
    /// Evaluate trials on one thread.
    #[arg(long)]
    serial: bool,
    /// Replay a stored case instead of sampling.
    #[arg(long, conflicts_with_all = ["trials", "dim_min", "dim_max", "norms"])]
    case: Option<PathBuf>,
}

#[derive(clap::Args)]
struct ShrinkArgs {
    #[arg(long)]
    case: PathBuf,
    #[arg(long)]
    out: PathBuf,
    #[arg(long, default_value_t = 1e-9)]
    tol: f64,
}

/// Failure of a command together with the exit code it maps to.
pub(crate) struct Failure {
    code: u8,
    message: String,
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let code = if e.is_numerical() { EXIT_NUMERICAL } else { EXIT_USAGE };
        Failure { code, message: e.to_string() }
    }
}

pub(crate) fn usage(message: impl Into<String>) -> Failure {
    Failure { code: EXIT_USAGE, message: message.into() }
}

fn read(path: &Path) -> Result<String, Failure> {
    std::fs::read_to_string(path).map_err(|e| usage(format!("{}: {e}", path.display())))
}

fn write(path: &Path, body: &str) -> Result<(), Failure> {
    std::fs::write(path, body).map_err(|e| usage(format!("{}: {e}", path.display())))
}

fn cmd_list(registry: &SuiteRegistry) -> u8 {
    print!("{}", output::suite_table(registry));
    EXIT_OK
}

fn cmd_verify(registry: &SuiteRegistry, args: VerifyArgs) -> Result<u8, Failure> {
    if let Some(path) = &args.case {
        return replay(registry, path, args.tol);
    }
    let cfg = CampaignConfig {
        suites: args.suite,
        trials: args.trials,
        dim_min: args.dim_min,
        dim_max: args.dim_max,
        seed: args.seed,
        tol_rel: args.tol,
        norm_family: args.norms.unwrap_or_else(NormSpec::standard),
        parallel: !args.serial,
        ..Default::default()
    };
    let report = run_campaign(registry, &cfg)?;
    let dir = args.out.as_deref().and_then(Path::parent).map(Path::to_path_buf).unwrap_or_default();
    if let Some(out) = &args.out {
        write(out, &report.to_json()?)?;
    }
    let written = write_counterexamples(&report, &dir)?;
    print!("{}", output::report_table(&report, &written));
    Ok(if report.numerical_failures() > 0 {
        EXIT_NUMERICAL
    } else if report.failed() {
        EXIT_VIOLATION
    } else {
        EXIT_OK
    })
}

/// One file per suite that produced a counterexample; returns `(suite id, path)`.
fn write_counterexamples(report: &CampaignReport, dir: &Path) -> Result<Vec<(String, PathBuf)>, Failure> {
    let mut out = Vec::new();
    for rec in &report.suites {
        if let Some(cex) = &rec.counterexample {
            let path = dir.join(format!("{}.counterexample.json", rec.id));
            write(&path, &cex.case.to_json()?)?;
            out.push((rec.id.clone(), path));
        }
    }
    Ok(out)
}

fn replay(registry: &SuiteRegistry, path: &Path, tol: f64) -> Result<u8, Failure> {
    let case = InequalityCase::from_json(&read(path)?)?;
    let suite = registry.get(&case.suite_id)?;
    let result = suite.evaluate(&case)?.rejudge(tol);
    print!("{}", output::result_table(&case, &result));
    let asserted = suite.status() == SuiteStatus::Asserted;
    Ok(if !result.passed() && asserted { EXIT_VIOLATION } else { EXIT_OK })
}

fn cmd_shrink(registry: &SuiteRegistry, args: ShrinkArgs) -> Result<u8, Failure> {
    let case = InequalityCase::from_json(&read(&args.case)?)?;
    let suite = registry.get(&case.suite_id)?;
    if !violates(suite, &case, args.tol) {
        return Err(usage(format!("case for `{}` does not violate its inequality", case.suite_id)));
    }
    let small = shrink(suite, &case, args.tol)?;
    write(&args.out, &small.to_json()?)?;
    println!("{}: dim {} -> {}, written to {}", small.suite_id, case.dim, small.dim, args.out.display());
    Ok(EXIT_OK)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let registry = SuiteRegistry::standard();
    let outcome = match cli.command {
        Command::List => Ok(cmd_list(&registry)),
        Command::Verify(args) => cmd_verify(&registry, args),
        Command::Eval(args) => eval::cmd_eval(args),
        Command::Shrink(args) => cmd_shrink(&registry, args),
    };
    match outcome {
        Ok(code) => ExitCode::from(code),
        Err(f) => {
            eprintln!("error: {}", f.message);
            ExitCode::from(f.code)
        }
    }
}
