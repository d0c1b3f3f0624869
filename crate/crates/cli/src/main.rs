use std::io::Write;
use std::process::ExitCode;

use clap::{Parser, Subcommand};

use rotcirc_cli::commands::{self, OracleMode, ORACLE_DEFAULT_LIMIT};
use rotcirc_cli::{render, CliError, Format};

/// Rotational circulant graphs: classification and verification.
#[derive(Debug, Parser)]
#[command(name = "rotcirc", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// List every rotational first-kind Frobenius circulant on n vertices.
    Classify {
        n: u64,
        /// Restrict to one degree.
        #[arg(short, long)]
        degree: Option<u64>,
        #[arg(short, long, value_enum, default_value_t = Format::Table)]
        format: Format,
        /// Run brute-force cross-checks even above n = 2000.
        #[arg(long)]
        oracle: bool,
        /// Worker threads; 0 uses every core.
        #[arg(short, long, default_value_t = 1)]
        jobs: usize,
    },
    /// Check a connection set, e.g. `verify 19 1,7,8,11,12,18`.
    Verify {
        n: u64,
        set: String,
        #[arg(long)]
        json: bool,
    },
    /// Check the fixed-set dichotomy on Γ_(p^e, r).
    Gamma {
        p: u64,
        e: u32,
        r: u32,
        #[arg(long)]
        json: bool,
    },
    /// Check the HARTS mesh of size k against its Eisenstein-Jacobi form.
    Harts {
        k: u64,
        #[arg(long)]
        json: bool,
    },
}

fn run(cli: Cli) -> Result<String, CliError> {
    match cli.command {
        Command::Classify {
            n,
            degree,
            format,
            oracle,
            jobs,
        } => {
            if !oracle && n > ORACLE_DEFAULT_LIMIT {
                eprintln!(
                    "warning: n = {n} > {ORACLE_DEFAULT_LIMIT}; brute-force oracle checks skipped (use --oracle)"
                );
            }
            let mode = OracleMode { forced: oracle };
            let pool = rayon::ThreadPoolBuilder::new()
                .num_threads(jobs)
                .build()
                .map_err(|e| CliError::Input(format!("--jobs {jobs}: {e}")))?;
            let c = pool.install(|| commands::classify(n, degree, mode))?;
            match format {
                Format::Table => Ok(render::classification_table(&c)),
                Format::Json => render::json(&c),
                Format::Csv => render::classification_csv(&c),
            }
        }
        Command::Verify { n, set, json } => {
            let r = commands::verify(n, &set)?;
            if json {
                render::json(&r)
            } else {
                Ok(render::verify_text(&r))
            }
        }
        Command::Gamma { p, e, r, json } => {
            let g = commands::gamma(p, e, r)?;
            if json {
                render::json(&g)
            } else {
                Ok(render::gamma_text(&g))
            }
        }
        Command::Harts { k, json } => {
            let h = commands::harts(k)?;
            if json {
                render::json(&h)
            } else {
                Ok(render::harts_text(&h))
            }
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(out) => {
            let mut stdout = std::io::stdout().lock();
            if stdout
                .write_all(out.as_bytes())
                .and_then(|_| stdout.flush())
                .is_err()
            {
                return ExitCode::from(3);
            }
            ExitCode::SUCCESS
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code() as u8)
        }
    }
}
