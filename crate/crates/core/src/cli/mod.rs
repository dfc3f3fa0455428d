//! Command-line surface. [`run`] parses arguments, executes one subcommand
//! and returns the process exit code: 0 on success, 1 when a verification
//! fails, 2 on invalid input.

mod commands;
mod tables;

use std::ffi::OsString;
use std::io::Write;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::Value;

use crate::error::{invalid, Error, Result};
use crate::poly::{OrderFamily, TermOrder};

pub const EXIT_OK: i32 = 0;
pub const EXIT_MISMATCH: i32 = 1;
pub const EXIT_INVALID: i32 = 2;

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
    /// Macaulay2 input.
    Cas,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Family {
    Degrevlex,
    Lex,
}

impl From<Family> for OrderFamily {
    fn from(f: Family) -> Self {
        match f {
            Family::Degrevlex => OrderFamily::DegRevLex,
            Family::Lex => OrderFamily::Lex,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum BettiMethod {
    Ghp,
    Murai,
    Mvt,
    All,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum CountWhat {
    Generators,
    Bases,
    StandardMonomials,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum AlgebraChoice {
    Initial,
    Original,
}

#[derive(Debug, Parser)]
#[command(
    name = "gbsf",
    version,
    about = "Gröbner bases, Hilbert series, WLP and Betti numbers of I_{n,k} = (x1^2, ..., xn^2, (x1 + ... + xn)^k)"
)]
pub struct Cli {
    /// Output format.
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    pub format: Format,

    /// Worker threads for parallel sections.
    #[arg(long, global = true, env = "GBSF_THREADS")]
    pub threads: Option<usize>,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Args, Clone)]
pub struct NkArgs {
    #[arg(long)]
    pub n: usize,
    #[arg(long)]
    pub k: usize,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Closed-form reduced Gröbner basis.
    Gb {
        #[command(flatten)]
        nk: NkArgs,
        #[arg(long, value_enum, default_value_t = Family::Degrevlex)]
        order: Family,
        /// Variable ranking as a comma-separated permutation, largest first.
        #[arg(long, value_delimiter = ',')]
        sigma: Option<Vec<usize>>,
        /// Recompute with Buchberger's algorithm and compare.
        #[arg(long)]
        verify: bool,
    },
    /// Hilbert series coefficients of R/I_{n,k}.
    Hilbert {
        #[command(flatten)]
        nk: NkArgs,
    },
    /// Weak Lefschetz property: classification and exact rank check.
    Wlp {
        #[command(flatten)]
        nk: NkArgs,
        #[arg(long, default_value_t = 3)]
        trials: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, value_enum, default_value_t = AlgebraChoice::Initial)]
        algebra: AlgebraChoice,
        /// Attach and print a syzygy-derived kernel element when WLP fails.
        #[arg(long)]
        witness: bool,
    },
    /// Graded Betti numbers of in(I_{n,k}).
    Betti {
        #[command(flatten)]
        nk: NkArgs,
        #[arg(long, value_enum, default_value_t = BettiMethod::Murai)]
        method: BettiMethod,
    },
    /// Generator, basis and standard-monomial counts.
    Count {
        #[command(flatten)]
        nk: NkArgs,
        #[arg(long, value_enum)]
        what: CountWhat,
        /// Degree for standard-monomial counts.
        #[arg(long)]
        degree: Option<usize>,
    },
    /// Regenerate the reference tables with pass/fail checks.
    #[command(name = "tables", alias = "paper-tables")]
    Tables,
    /// Lattice path of a squarefree monomial or a step word.
    Path {
        /// Path length (number of variables).
        #[arg(long)]
        n: usize,
        /// Comma-separated variable set of the monomial.
        #[arg(long, value_delimiter = ',', conflicts_with = "steps")]
        set: Option<Vec<usize>>,
        /// Step word such as NENNE.
        #[arg(long)]
        steps: Option<String>,
        /// Report the first touch of y = x + k.
        #[arg(long)]
        k: Option<usize>,
    },
}

/// Validated parameters shared by the subcommands.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RunConfig {
    pub n: usize,
    pub k: usize,
    pub family: OrderFamily,
    pub sigma: Vec<usize>,
    pub trials: usize,
    pub seed: u64,
    pub format: Format,
    pub threads: Option<usize>,
}

impl RunConfig {
    pub fn new(n: usize, k: usize, format: Format) -> Result<Self> {
        let c = RunConfig {
            n,
            k,
            family: OrderFamily::DegRevLex,
            sigma: (1..=n).collect(),
            trials: 3,
            seed: 0,
            format,
            threads: None,
        };
        c.validate()?;
        Ok(c)
    }

    pub fn validate(&self) -> Result<()> {
        if self.n < 2 {
            return Err(invalid(format!("n must be at least 2, got {}", self.n)));
        }
        if self.k < 1 {
            return Err(invalid("k must be at least 1"));
        }
        if self.trials < 1 {
            return Err(invalid("trials must be at least 1"));
        }
        self.order().map(|_| ())
    }

    pub fn order(&self) -> Result<TermOrder> {
        if self.sigma.len() != self.n {
            return Err(Error::InvalidPermutation(format!(
                "σ has {} entries, expected {}",
                self.sigma.len(),
                self.n
            )));
        }
        TermOrder::from_sigma(self.family, &self.sigma)
    }
}

/// Result of one subcommand. `json` and `text` carry the same data.
#[derive(Debug)]
pub struct Outcome {
    pub text: String,
    pub json: Value,
    pub cas: Option<String>,
    /// A verification inside the command failed.
    pub mismatch: bool,
}

impl Outcome {
    fn render(&self, format: Format) -> String {
        match format {
            Format::Text => self.text.clone(),
            Format::Json => {
                let mut s =
                    serde_json::to_string_pretty(&self.json).expect("JSON values serialize");
                s.push('\n');
                s
            }
            Format::Cas => self.cas.clone().unwrap_or_else(|| self.text.clone()),
        }
    }
}

pub fn exit_code(e: &Error) -> i32 {
    match e {
        Error::Mismatch(_) | Error::Internal(_) => EXIT_MISMATCH,
        _ => EXIT_INVALID,
    }
}

fn configure_threads(threads: Option<usize>) {
    if let Some(t) = threads.filter(|&t| t > 0) {
        // a second configuration attempt in the same process is harmless
        let _ = rayon::ThreadPoolBuilder::new()
            .num_threads(t)
            .build_global();
    }
}

/// Executes an already parsed command.
pub fn execute(cli: &Cli) -> Result<Outcome> {
    configure_threads(cli.threads);
    let cfg = |nk: &NkArgs| -> Result<RunConfig> {
        let mut c = RunConfig::new(nk.n, nk.k, cli.format)?;
        c.threads = cli.threads;
        Ok(c)
    };
    match &cli.command {
        Command::Gb {
            nk,
            order,
            sigma,
            verify,
        } => {
            let mut c = cfg(nk)?;
            c.family = (*order).into();
            if let Some(s) = sigma {
                c.sigma = s.clone();
            }
            c.validate()?;
            commands::gb(&c, *verify)
        }
        Command::Hilbert { nk } => commands::hilbert(&cfg(nk)?),
        Command::Wlp {
            nk,
            trials,
            seed,
            algebra,
            witness,
        } => {
            let mut c = cfg(nk)?;
            c.trials = *trials;
            c.seed = *seed;
            c.validate()?;
            commands::wlp(&c, *algebra, *witness)
        }
        Command::Betti { nk, method } => commands::betti(&cfg(nk)?, *method),
        Command::Count { nk, what, degree } => commands::count(&cfg(nk)?, *what, *degree),
        Command::Tables => tables::tables(),
        Command::Path { n, set, steps, k } => {
            commands::path(*n, set.as_deref(), steps.as_deref(), *k)
        }
    }
}

/// Parses `args` (including the program name), runs the command and writes
/// to `out`/`err`. Returns the exit code.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() {
                EXIT_INVALID
            } else {
                EXIT_OK
            };
            let rendered = e.render().to_string();
            let _ = if code == EXIT_OK {
                out.write_all(rendered.as_bytes())
            } else {
                err.write_all(rendered.as_bytes())
            };
            return code;
        }
    };
    match execute(&cli) {
        Ok(outcome) => {
            let _ = out.write_all(outcome.render(cli.format).as_bytes());
            if outcome.mismatch {
                EXIT_MISMATCH
            } else {
                EXIT_OK
            }
        }
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            exit_code(&e)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn run_str(args: &[&str]) -> (i32, String, String) {
        let mut out = Vec::new();
        let mut err = Vec::new();
        let code = run(
            std::iter::once("gbsf").chain(args.iter().copied()),
            &mut out,
            &mut err,
        );
        (
            code,
            String::from_utf8(out).unwrap(),
            String::from_utf8(err).unwrap(),
        )
    }

    #[test]
    fn hilbert_text() {
        let (code, out, _) = run_str(&["hilbert", "--n", "5", "--k", "2"]);
        assert_eq!(code, 0);
        assert_eq!(out.trim(), "1 5 9 5");
    }

    #[test]
    fn invalid_input_exits_two() {
        assert_eq!(run_str(&["hilbert", "--n", "1", "--k", "2"]).0, 2);
        assert_eq!(
            run_str(&["gb", "--n", "3", "--k", "2", "--sigma", "1,1,2"]).0,
            2
        );
        assert_eq!(run_str(&["bogus"]).0, 2);
        assert_eq!(run_str(&["wlp", "--n", "4", "--k", "1"]).0, 2);
    }

    #[test]
    fn help_exits_zero() {
        let (code, out, _) = run_str(&["--help"]);
        assert_eq!(code, 0);
        assert!(out.contains("hilbert"));
    }

    #[test]
    fn config_validation() {
        assert!(RunConfig::new(2, 1, Format::Text).is_ok());
        assert!(RunConfig::new(1, 1, Format::Text).is_err());
        let mut c = RunConfig::new(3, 2, Format::Json).unwrap();
        c.sigma = vec![3, 1, 2];
        assert!(c.validate().is_ok());
        c.sigma = vec![3, 1];
        assert!(c.validate().is_err());
    }
}
