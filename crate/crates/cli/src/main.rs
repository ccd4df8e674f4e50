mod commands;
mod format;

use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use spreadsplit::{FieldSpec, ReesKind, TermOrder};

use commands::{CliError, Outcome};

#[derive(Parser, Debug)]
#[command(name = "spreadsplit", version, about = "Gröbner bases, splittings, spreadings and associated-prime certificates")]
pub struct Cli {
    #[command(flatten)]
    pub global: Global,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Args, Debug, Clone)]
pub struct Global {
    /// Coefficient field: `q` or `fp:<p>`. Overrides the input file.
    #[arg(long, global = true)]
    pub field: Option<FieldSpec>,
    /// Term order: `lex` or `grevlex`. Overrides the input file.
    #[arg(long, global = true)]
    pub order: Option<TermOrder>,
    /// Maximum S-pairs per Gröbner basis run.
    #[arg(long, global = true)]
    pub budget_pairs: Option<u64>,
    /// Wall-clock limit for the whole command.
    #[arg(long, global = true)]
    pub budget_seconds: Option<u64>,
    /// Write the JSON report here (`-` for stdout).
    #[arg(long, global = true, value_name = "OUT")]
    pub json: Option<PathBuf>,
    /// Seed for randomized witness search.
    #[arg(long, global = true, default_value_t = 0)]
    pub seed: u64,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Reduced Gröbner basis of an ideal file.
    Gb { file: PathBuf },
    /// Normal form of a polynomial modulo an ideal.
    Nf { poly: String, file: PathBuf },
    /// Ideal membership; exits 1 when the polynomial is not a member.
    Member { poly: String, file: PathBuf },
    /// Radical membership; exits 1 when no power is a member.
    RadicalMember { poly: String, file: PathBuf },
    /// Kernel of the ring map in a map file.
    Kernel {
        #[arg(long)]
        map: PathBuf,
    },
    /// Presentation ideal of a Rees algebra.
    Rees {
        #[arg(long, value_parser = parse_kind)]
        kind: ReesKind,
        file: PathBuf,
    },
    /// Image of an ideal under a splitting such as `z:3` or `x:[2,1],y:2`.
    Split {
        #[arg(long)]
        spec: String,
        file: PathBuf,
    },
    /// Spreading by variable duplication (`--params z:2`) or of a monomial
    /// ideal with the fine grading (`--params c:3,a:2`).
    Spread {
        #[arg(long, value_enum)]
        kind: SpreadKind,
        #[arg(long)]
        params: String,
        file: PathBuf,
    },
    /// Named families.
    #[command(subcommand)]
    Family(Family),
    /// Verifiers for the named families.
    #[command(subcommand)]
    Verify(Verify),
    /// Associated primes.
    #[command(subcommand)]
    Ass(Ass),
    /// Certify that a prime is associated, by a given or searched witness.
    Certify {
        #[arg(long)]
        ideal: PathBuf,
        #[arg(long)]
        prime: PathBuf,
        #[arg(long)]
        witness: Option<String>,
    },
}

#[derive(ValueEnum, Debug, Clone, Copy)]
pub enum SpreadKind {
    Dup,
    Monomial,
}

#[derive(Subcommand, Debug)]
pub enum Family {
    /// Kernel of x, y, z -> t^3, t^4, t^5.
    Toric345,
    /// The toric ideal with m - 3 duplicated copies of z.
    Im {
        #[arg(long)]
        m: usize,
    },
    /// Splitting of I_m with block sizes v.
    Thm51 {
        #[arg(long)]
        m: usize,
        #[arg(long, value_delimiter = ',')]
        v: Vec<usize>,
    },
    /// Extended Rees prime of (a^2b^2c, b^4, ab^3, a^3b, a^4).
    Prop33,
    /// Extended Rees prime of the spreading with n copies of c.
    Thm53 {
        #[arg(long)]
        n: usize,
    },
}

#[derive(Subcommand, Debug)]
pub enum Verify {
    Thm51 {
        #[arg(long)]
        m: usize,
        #[arg(long, value_delimiter = ',')]
        v: Vec<usize>,
        #[arg(long, default_value_t = 2)]
        e: u32,
        /// Also rule out every other set of m variables.
        #[arg(long)]
        exhaustive: bool,
    },
    Prop33 {
        #[arg(long)]
        deep: bool,
    },
    Thm53 {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        deep: bool,
    },
}

#[derive(Subcommand, Debug)]
pub enum Ass {
    /// Associated primes and primary decomposition of a monomial ideal.
    Monomial { file: PathBuf },
}

fn parse_kind(s: &str) -> Result<ReesKind, String> {
    s.parse().map_err(|e: spreadsplit::Error| e.to_string())
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match commands::run(&cli) {
        Ok(outcome) => finish(&cli.global, &outcome),
        Err(CliError::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
        Err(CliError::Failed(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(1)
        }
    }
}

fn finish(global: &Global, outcome: &Outcome) -> ExitCode {
    let json = outcome.to_json();
    let to_stdout = global.json.as_deref().is_some_and(|p| p.as_os_str() == "-");
    // A closed pipe (`| head`) is not an error worth reporting.
    let mut out = std::io::stdout().lock();
    if to_stdout {
        let _ = writeln!(out, "{}", serde_json::to_string_pretty(&json).expect("serializable"));
    } else {
        let _ = write!(out, "{}", outcome.text);
        if let Some(path) = &global.json {
            let body = serde_json::to_string_pretty(&json).expect("serializable") + "\n";
            if let Err(e) = std::fs::write(path, body) {
                eprintln!("error: cannot write {}: {e}", path.display());
                return ExitCode::from(2);
            }
        }
    }
    ExitCode::from(outcome.exit_code())
}
