use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};

use qlat::exact::text::{format_matrix, parse_vector};
use qlat::report::{self, Context};
use qlat::Error;

#[derive(Parser)]
#[command(name = "qlat", version, about = "Exact checks on quaternion tensor groups and their lattices")]
struct Cli {
    /// Worker threads (0 = all cores)
    #[arg(long, global = true, env = "QLAT_THREADS", default_value_t = 0)]
    threads: usize,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Run registered checks (`all` or nothing selects every check)
    Verify {
        checks: Vec<String>,
        #[arg(long)]
        json: Option<PathBuf>,
    },
    /// Group order via Schreier-Sims (unit24, wf4, pure512, fact1)
    Order {
        #[arg(long)]
        group: String,
        #[arg(long)]
        emit_bsgs: Option<PathBuf>,
    },
    /// Minimal norm and kissing number (f4, bw16)
    Kissing {
        #[arg(long)]
        lattice: String,
    },
    /// Write a named matrix in the text format
    Export {
        #[arg(long)]
        generator: String,
        #[arg(long)]
        out: PathBuf,
    },
    /// Lattice membership of a vector read from a file
    Member {
        #[arg(long)]
        lattice: String,
        #[arg(long)]
        vector: PathBuf,
    },
}

enum Failure {
    Usage(String),
    Failed(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::UnknownName(_) => Failure::Usage(e.to_string()),
            _ => Failure::Failed(e.to_string()),
        }
    }
}

fn io_failure(path: &std::path::Path, e: std::io::Error) -> Failure {
    Failure::Failed(format!("{}: {e}", path.display()))
}

fn run(cli: Cli) -> Result<bool, Failure> {
    match cli.command {
        Command::Verify { checks, json } => {
            let selection = if checks.is_empty() { vec!["all".to_string()] } else { checks };
            let report = report::run_checks(&selection, cli.threads)?;
            print!("{}", report.render_text());
            if let Some(path) = json {
                report.emit_json(&path).map_err(|e| io_failure(&path, e))?;
            }
            Ok(report.overall)
        }
        Command::Order { group, emit_bsgs } => {
            let ctx = Context::default();
            let bsgs = ctx.bsgs(&group)?;
            let order = bsgs.order();
            println!("group: {group}");
            println!("order: {order}");
            println!("factorization: {}", qlat::perm::factorize(&order));
            println!("degree: {}", bsgs.degree());
            println!("orbit sizes: {:?}", bsgs.orbit_sizes());
            if let Some(path) = emit_bsgs {
                std::fs::write(&path, bsgs.to_text()).map_err(|e| io_failure(&path, e))?;
            }
            Ok(true)
        }
        Command::Kissing { lattice } => {
            let l = report::lattice_by_name(&lattice)?;
            let shell = l.shortest_vectors();
            println!("lattice: {lattice}");
            println!("minimal norm: {}", shell.norm);
            println!("kissing number: {}", shell.count());
            Ok(true)
        }
        Command::Export { generator, out } => {
            let m = report::generator_matrix(&generator)?;
            std::fs::write(&out, format_matrix(&m)).map_err(|e| io_failure(&out, e))?;
            Ok(true)
        }
        Command::Member { lattice, vector } => {
            let l = report::lattice_by_name(&lattice)?;
            let text = std::fs::read_to_string(&vector).map_err(|e| io_failure(&vector, e))?;
            let v = parse_vector(&text)?;
            if v.len() != l.dim() {
                return Err(Failure::Failed(format!(
                    "vector has length {}, lattice has dimension {}",
                    v.len(),
                    l.dim()
                )));
            }
            println!("{}", l.member(&v));
            Ok(true)
        }
    }
}

fn main() -> ExitCode {
    env_logger::Builder::from_env(env_logger::Env::default().default_filter_or("info")).init();
    let cli = Cli::parse();
    if cli.threads > 0 {
        let _ = rayon::ThreadPoolBuilder::new().num_threads(cli.threads).build_global();
    }
    match run(cli) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
        Err(Failure::Failed(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(1)
        }
    }
}
