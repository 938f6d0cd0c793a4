mod commands;
mod render;
mod verify;

use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use framed_bps::Error;

#[derive(Parser)]
#[command(
    name = "framed-bps",
    version,
    about = "Exact invariants of framed knots and links"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Ascii,
    Json,
    Csv,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum LinkArg {
    Unknot,
    Whitehead,
    Borromean,
    Twist,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum KnotArg {
    Unknot,
    Twist,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Source {
    Curve,
    Closed,
    Both,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum CurveArg {
    Full,
    Plus,
    Minus,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Suite {
    Tables,
    Integrality,
    Recursion,
    Symmetry,
}

#[derive(clap::Args, Clone, Debug)]
pub struct LinkOpts {
    #[arg(long, value_enum)]
    pub link: LinkArg,
    /// Twist parameter, required with `--link twist`.
    #[arg(long, allow_hyphen_values = true)]
    pub p: Option<i64>,
    /// Comma-separated colors, one per component.
    #[arg(long)]
    pub colors: String,
    /// Comma-separated framings, one per component.
    #[arg(long, allow_hyphen_values = true)]
    pub framing: String,
    #[arg(long, value_enum, default_value = "ascii")]
    pub format: Format,
}

#[derive(Subcommand)]
enum Command {
    /// Framed colored HOMFLYPT invariant.
    Homfly(LinkOpts),
    /// Ooguri-Vafa table `N_{r,i,j}`.
    OvTable(LinkOpts),
    /// BPS invariants of a framed unknot or twist knot.
    Bps {
        #[arg(long, value_enum)]
        knot: KnotArg,
        #[arg(long, allow_hyphen_values = true)]
        p: Option<i64>,
        #[arg(long, allow_hyphen_values = true, default_value_t = 0)]
        framing: i64,
        #[arg(long, default_value_t = 4)]
        r_max: u32,
        #[arg(long, value_enum, default_value = "both")]
        source: Source,
        #[arg(long, value_enum, default_value = "ascii")]
        format: Format,
    },
    /// Series branch `y^2(x)` of a curve and the coefficients of `x d/dx log y`.
    Series {
        #[arg(long, value_enum)]
        knot: KnotArg,
        #[arg(long, allow_hyphen_values = true)]
        p: Option<i64>,
        #[arg(long, allow_hyphen_values = true, default_value_t = 0)]
        framing: i64,
        #[arg(long, value_enum, default_value = "full")]
        curve: CurveArg,
        #[arg(long, default_value_t = 6)]
        order: u32,
        #[arg(long, value_enum, default_value = "ascii")]
        format: Format,
    },
    /// Runs a verification suite.
    Verify {
        #[arg(value_enum)]
        suite: Suite,
        #[arg(long, default_value_t = 30)]
        r_max: u32,
        /// Inclusive range `lo:hi`.
        #[arg(long, allow_hyphen_values = true, default_value = "-10:10")]
        t_range: String,
        #[arg(long, default_value_t = 5)]
        tau_max: i64,
        #[arg(long, default_value_t = 12)]
        n_max: u32,
    },
}

/// Failure reported by a subcommand, with its exit status.
#[derive(Debug)]
pub enum Failure {
    Usage(String),
    Compute(String),
    Mismatch(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::InvalidSpec(_)
            | Error::ZeroColorVector
            | Error::UnsupportedKnotKind(_)
            | Error::UnsupportedP(_) => Failure::Usage(e.to_string()),
            other => Failure::Compute(other.to_string()),
        }
    }
}

fn run(cli: Cli) -> Result<String, Failure> {
    match cli.command {
        Command::Homfly(o) => commands::homfly(&o),
        Command::OvTable(o) => commands::ov_table(&o),
        Command::Bps {
            knot,
            p,
            framing,
            r_max,
            source,
            format,
        } => commands::bps(knot, p, framing, r_max, source, format),
        Command::Series {
            knot,
            p,
            framing,
            curve,
            order,
            format,
        } => commands::series(knot, p, framing, curve, order, format),
        Command::Verify {
            suite,
            r_max,
            t_range,
            tau_max,
            n_max,
        } => verify::run(suite, r_max, &t_range, tau_max, n_max),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(out) => {
            print!("{}", out);
            ExitCode::SUCCESS
        }
        Err(Failure::Usage(m)) => {
            eprintln!("error: {}", m);
            ExitCode::from(2)
        }
        Err(Failure::Compute(m)) => {
            eprintln!("error: {}", m);
            ExitCode::from(1)
        }
        Err(Failure::Mismatch(out)) => {
            print!("{}", out);
            eprintln!("error: mismatch detected");
            ExitCode::from(1)
        }
    }
}
