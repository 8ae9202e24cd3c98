use std::fs;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use dicube::export::{export, model_homology, Format, Model};
use dicube::homology::homology_json;
use dicube::verify::{non_self_linked_target, run_suite, VerificationReport, REGISTRY};
use dicube::{Caps, Error, Execution};

/// Finite models of directed path spaces: build, export, compute homology
/// and run the verification suite.
#[derive(Parser)]
#[command(name = "dicube", version)]
struct Cli {
    /// Run every enumeration on the current thread.
    #[arg(long, global = true)]
    sequential: bool,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Build a model and write it as JSON.
    Gen {
        model: String,
        #[arg(long)]
        n: usize,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Integral homology of a model.
    Homology {
        #[arg(long)]
        model: String,
        #[arg(long)]
        n: usize,
    },
    /// Run named checks; `all` selects the whole registry.
    Verify {
        #[arg(long, value_delimiter = ',', num_args = 0..)]
        suite: Vec<String>,
        #[arg(long, default_value_t = 3)]
        n_max: usize,
        /// For `non-self-linked`: check `yA` or the truncated `z` at n-max.
        #[arg(long)]
        target: Option<String>,
        /// Bound on worker threads.
        #[arg(long)]
        jobs: Option<usize>,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Export a model as JSON or DOT.
    Export {
        #[arg(long)]
        model: String,
        #[arg(long)]
        n: usize,
        #[arg(long, default_value = "json")]
        format: String,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// List the registered checks.
    List,
}

enum Failure {
    Verification,
    Lib(Error),
    Io(std::io::Error),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Lib(e)
    }
}

impl From<std::io::Error> for Failure {
    fn from(e: std::io::Error) -> Self {
        Failure::Io(e)
    }
}

fn emit(text: &str, out: Option<&PathBuf>) -> std::io::Result<()> {
    match out {
        Some(path) => fs::write(path, text),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

fn verify(
    suite: Vec<String>,
    n_max: usize,
    target: Option<String>,
    out: Option<&PathBuf>,
    caps: &Caps,
    exec: Execution,
) -> Result<(), Failure> {
    let ids: Vec<String> = if suite.iter().any(|s| s == "all") {
        REGISTRY.iter().map(|c| c.id.to_string()).collect()
    } else {
        suite
    };
    let reports: Vec<VerificationReport> = match target {
        Some(t) => {
            if ids != ["non-self-linked"] {
                return Err(Error::Argument("--target only applies to --suite non-self-linked".into()).into());
            }
            vec![non_self_linked_target(&t, n_max, caps, exec)?]
        }
        None => run_suite(&ids, n_max, caps, exec)?,
    };
    let text = serde_json::to_string_pretty(&reports).expect("reports serialize") + "\n";
    emit(&text, out)?;
    for r in &reports {
        eprintln!("{:<22} n={} {:?} ({:.2}s)", r.id, r.n, r.status, r.seconds);
    }
    if reports.iter().all(VerificationReport::passed) {
        Ok(())
    } else {
        Err(Failure::Verification)
    }
}

fn run(cli: Cli) -> Result<(), Failure> {
    let caps = Caps::from_env()?;
    let exec = if cli.sequential {
        Execution::Sequential
    } else {
        Execution::Parallel
    };
    match cli.command {
        Command::Gen { model, n, out } => {
            let model: Model = model.parse()?;
            emit(&export(model, n, Format::Json, &caps, exec)?, out.as_ref())?;
        }
        Command::Homology { model, n } => {
            let groups = model_homology(model.parse()?, n, &caps, exec)?;
            for (k, g) in groups.iter().enumerate() {
                eprintln!("H_{k} = {g}");
            }
            println!("{}", serde_json::to_string(&homology_json(&groups)).expect("serializes"));
        }
        Command::Verify {
            suite,
            n_max,
            target,
            jobs,
            out,
        } => match jobs {
            #[cfg(feature = "parallel")]
            Some(j) => {
                let pool = rayon::ThreadPoolBuilder::new()
                    .num_threads(j.max(1))
                    .build()
                    .map_err(|e| Failure::Lib(Error::Argument(e.to_string())))?;
                pool.install(|| verify(suite, n_max, target, out.as_ref(), &caps, exec))?;
            }
            _ => verify(suite, n_max, target, out.as_ref(), &caps, exec)?,
        },
        Command::Export {
            model,
            n,
            format,
            out,
        } => {
            let text = export(model.parse()?, n, format.parse()?, &caps, exec)?;
            emit(&text, out.as_ref())?;
        }
        Command::List => {
            for c in REGISTRY {
                println!("{:<22} n in {}..={}  {}", c.id, c.min_n, c.max_n, c.summary);
            }
        }
    }
    Ok(())
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Verification) => ExitCode::from(1),
        Err(Failure::Lib(e)) => {
            eprintln!("dicube: {e}");
            ExitCode::from(match e {
                Error::Argument(_) | Error::Parse(_) => 2,
                Error::Resource { .. } => 3,
                _ => 1,
            })
        }
        Err(Failure::Io(e)) => {
            eprintln!("dicube: {e}");
            ExitCode::from(1)
        }
    }
}
