//! Command-line front end: argument parsing, report rendering and the
//! result cache. [`run`] is the whole program; `main` only forwards the
//! process arguments and exit code.

pub mod cache;
mod commands;
pub mod json;

use std::io::Write;
use std::path::PathBuf;

use clap::{Parser, Subcommand, ValueEnum};

pub use cache::{cache_key, Cache, CacheEntry};

/// Default degree cap; larger caps are allowed with a warning.
pub const DEGREE_CAP: usize = 6;

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error("{0}")]
    Input(String),
    #[error("undecided: {0}")]
    Undecided(String),
    #[error("i/o error: {0}")]
    Io(String),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Undecided(_) => 2,
            CliError::Input(_) | CliError::Io(_) => 1,
        }
    }
}

impl From<latimer_core::Error> for CliError {
    fn from(e: latimer_core::Error) -> Self {
        match e {
            latimer_core::Error::BudgetExceeded(_) => CliError::Undecided(e.to_string()),
            _ => CliError::Input(e.to_string()),
        }
    }
}

impl From<std::io::Error> for CliError {
    fn from(e: std::io::Error) -> Self {
        CliError::Io(e.to_string())
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum OutputFormat {
    Tsv,
    Json,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Config {
    pub bound_override: Option<u64>,
    pub search_budget: u32,
    pub cache_dir: Option<PathBuf>,
    pub output_format: OutputFormat,
    pub degree_cap: usize,
}

impl Default for Config {
    fn default() -> Self {
        Config {
            bound_override: None,
            search_budget: 4,
            cache_dir: None,
            output_format: OutputFormat::Tsv,
            degree_cap: DEGREE_CAP,
        }
    }
}

#[derive(Debug, Parser)]
#[command(name = "latimer", version, about = "Conjugacy classes of integer matrices and ideal classes of Z[x]/(chi)")]
pub struct Cli {
    /// Determinant bound for ideal enumeration (default depends on the order).
    #[arg(long, global = true)]
    pub bound: Option<u64>,
    /// Search radius for equivalence tests in degree 3 and above.
    #[arg(long, global = true, default_value_t = 4)]
    pub budget: u32,
    /// Directory for cached results; caching is off when unset.
    #[arg(long, global = true, env = "LATIMER_CACHE_DIR")]
    pub cache_dir: Option<PathBuf>,
    #[arg(long, global = true, value_enum, default_value_t = OutputFormat::Tsv)]
    pub format: OutputFormat,
    /// Largest accepted polynomial degree.
    #[arg(long, global = true, default_value_t = DEGREE_CAP)]
    pub degree_cap: usize,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Conjugacy classes of matrices with characteristic polynomial chi.
    Classify {
        /// Coefficients, highest degree first, e.g. "1,0,-10".
        #[arg(long, allow_hyphen_values = true)]
        poly: String,
        /// Cross-check with the brute-force oracle: "ENTRY_BOUND,CONJ_BOUND".
        #[arg(long)]
        oracle: Option<String>,
    },
    /// Decide whether two matrices are conjugate over GL_n(Z).
    Conjugate {
        /// JSON {"n":..,"rows":..} or "a,b;c,d".
        #[arg(long, allow_hyphen_values = true)]
        mat_a: String,
        #[arg(long, allow_hyphen_values = true)]
        mat_b: String,
    },
    /// The ideal class monoid of Z[x]/(chi).
    Icm {
        #[arg(long, allow_hyphen_values = true)]
        poly: String,
    },
    /// Minimal positive solution of a^2 - d b^2 = 4.
    Pell {
        #[arg(long)]
        d: String,
    },
    /// Class numbers along the squarefree values of 4n^2 + 1.
    Mw {
        #[arg(long)]
        count: usize,
    },
    /// Closed-form bounds for genus g.
    Bounds {
        #[arg(long)]
        genus: u64,
    },
    /// Check the genus 3 example matrix.
    VerifyExample,
    /// Genus of a double cover of a closed surface.
    Cover {
        #[arg(long)]
        genus: usize,
        /// Values of the homomorphism to Z/2 on the generators, e.g. "0,1,1,0".
        #[arg(long)]
        hom: String,
        /// A word in the generators whose lift parity is reported.
        #[arg(long)]
        word: Option<String>,
    },
    /// Ideal class and stretch factor of a train track transition matrix.
    Ttclass {
        #[arg(long)]
        file: PathBuf,
    },
}

impl Cli {
    pub fn config(&self) -> Config {
        Config {
            bound_override: self.bound,
            search_budget: self.budget,
            cache_dir: self.cache_dir.clone(),
            output_format: self.format,
            degree_cap: self.degree_cap,
        }
    }
}

/// Runs one command; returns the process exit code (0 ok, 1 invalid input,
/// 2 undecided).
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            use clap::error::ErrorKind;
            let text = e.render().to_string();
            return match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => {
                    let _ = write!(out, "{text}");
                    0
                }
                _ => {
                    let _ = write!(err, "{text}");
                    1
                }
            };
        }
    };
    let config = cli.config();
    if config.search_budget == 0 {
        let _ = writeln!(err, "error: --budget must be positive");
        return 1;
    }
    if config.degree_cap > DEGREE_CAP {
        let _ = writeln!(
            err,
            "warning: degree cap {} exceeds {DEGREE_CAP}; irreducibility tests and enumeration may be slow",
            config.degree_cap
        );
    }
    match commands::execute(&cli.command, &config, err) {
        Ok(report) => {
            let _ = out.write_all(report.text.as_bytes());
            report.exit
        }
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            e.exit_code()
        }
    }
}
