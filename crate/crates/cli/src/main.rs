mod commands;
mod error;

use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use cohiggs::exactalg::{parse_rat, Rat};

use crate::error::CliError;

#[derive(Parser, Debug)]
#[command(
    name = "cohiggs",
    version,
    about = "Exact co-Higgs bundle computations on P1 x P1"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

fn rational(s: &str) -> Result<Rat, String> {
    parse_rat(s).ok_or_else(|| format!("not a rational number: {s}"))
}

fn axis(s: &str) -> Result<cohiggs::Axis, String> {
    s.parse::<u8>()
        .ok()
        .and_then(cohiggs::Axis::from_index)
        .ok_or_else(|| format!("axis must be 1 or 2, got {s}"))
}

#[derive(Args, Debug, Clone, Copy)]
struct ChernArgs {
    #[arg(long, allow_hyphen_values = true)]
    alpha: i64,
    #[arg(long, allow_hyphen_values = true)]
    beta: i64,
    #[arg(long, allow_hyphen_values = true)]
    gamma: i64,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Dimensions of H^i(O(a,b)).
    Cohomology {
        #[arg(long, allow_hyphen_values = true)]
        a: i64,
        #[arg(long, allow_hyphen_values = true)]
        b: i64,
    },
    /// Existence questions for moduli spaces.
    #[command(subcommand)]
    Moduli(ModuliCmd),
    /// Twist Chern data to a reduced class.
    Reduce(ChernArgs),
    #[command(subcommand)]
    Higgs(HiggsCmd),
    /// Non-split extensions of O(-1,1) by O(0,-1).
    #[command(subcommand)]
    Ext(ExtCmd),
    /// Hitchin map of an integrable field.
    Hitchin {
        #[arg(long)]
        field: String,
    },
    #[command(subcommand)]
    Spectral(SpectralCmd),
}

#[derive(Subcommand, Debug)]
enum ModuliCmd {
    /// Semistable co-Higgs bundles with the given Chern data.
    Nonempty {
        #[command(flatten)]
        chern: Option<ChernArgs>,
        /// JSON array of [alpha, beta, gamma] triples or objects; one output line each.
        #[arg(long, conflicts_with_all = ["alpha", "beta", "gamma"])]
        batch: Option<String>,
    },
    /// Stable bundles with Chern data and numerical invariants (d, r).
    BundleNonempty {
        #[command(flatten)]
        chern: ChernArgs,
        #[arg(long, allow_hyphen_values = true)]
        d: i64,
        #[arg(long, allow_hyphen_values = true)]
        r: i64,
    },
    /// Region with c1 = -F where only the zero Higgs field exists.
    NoHiggsRegion {
        #[arg(long, allow_hyphen_values = true)]
        d: i64,
        #[arg(long, allow_hyphen_values = true)]
        r: i64,
        #[arg(long, allow_hyphen_values = true)]
        c2: i64,
    },
}

#[derive(Subcommand, Debug)]
enum HiggsCmd {
    /// Validity, integrability and stability.
    Check {
        #[arg(long)]
        field: String,
    },
    /// Normal form on O+O(-1,0), O(1,0)+O(-1,0) or the split extension.
    NormalForm {
        #[arg(long)]
        field: String,
    },
    /// Associated graded object of a strictly semistable field.
    Graded {
        #[arg(long)]
        field: String,
    },
    /// The field (0 -rho; 1 0) for a quartic rho.
    SectionQ {
        #[arg(long)]
        rho: String,
        #[arg(long, value_parser = axis, default_value = "1")]
        axis: cohiggs::Axis,
    },
    /// Pullback of (A B; C -A) from a P1 factor; coefficients ascending, comma separated.
    Pullback {
        #[arg(long, allow_hyphen_values = true, default_value = "")]
        a: String,
        #[arg(long, allow_hyphen_values = true, default_value = "")]
        b: String,
        #[arg(long, allow_hyphen_values = true)]
        c: String,
        #[arg(long, value_parser = axis, default_value = "1")]
        axis: cohiggs::Axis,
    },
}

#[derive(Args, Debug, Clone)]
struct ExtArgs {
    #[arg(long, value_parser = rational, allow_hyphen_values = true)]
    u: Rat,
    #[arg(long, value_parser = rational, allow_hyphen_values = true)]
    v: Rat,
}

#[derive(Subcommand, Debug)]
enum ExtCmd {
    /// Section-space dimensions of End0(E) twisted by O(2,0) and O(0,2).
    Dims(ExtArgs),
    /// Assemble a field from closed-form parameters and check it glues.
    Build {
        #[command(flatten)]
        ext: ExtArgs,
        #[arg(long)]
        phi1: Option<String>,
        #[arg(long)]
        phi2: Option<String>,
    },
    /// Stratum and normalized representative of a moduli point.
    Classify {
        #[arg(long)]
        point: String,
    },
    /// Whether two extension classes are proportional.
    WeakIso {
        #[arg(long, value_parser = rational, allow_hyphen_values = true)]
        u1: Rat,
        #[arg(long, value_parser = rational, allow_hyphen_values = true)]
        v1: Rat,
        #[arg(long, value_parser = rational, allow_hyphen_values = true)]
        u2: Rat,
        #[arg(long, value_parser = rational, allow_hyphen_values = true)]
        v2: Rat,
    },
}

#[derive(Subcommand, Debug)]
enum SpectralCmd {
    /// Residuals of the three spectral equations at z1,z2,eta1,eta2.
    Residual {
        #[arg(long)]
        rho: String,
        #[arg(long, allow_hyphen_values = true)]
        point: String,
    },
    /// Fibre decomposability class.
    Classify {
        #[arg(long)]
        rho: String,
    },
    /// Points of the spectral surface over z1,z2.
    Fibre {
        #[arg(long, required_unless_present = "field")]
        rho: Option<String>,
        #[arg(long, conflicts_with = "rho")]
        field: Option<String>,
        #[arg(long, allow_hyphen_values = true)]
        at: String,
    },
}

fn main() -> ExitCode {
    env_logger::Builder::from_env(env_logger::Env::new().filter("COHIGGS_LOG")).init();
    let cli = Cli::parse();
    log::debug!("{:?}", cli.command);
    match commands::run(cli.command) {
        Ok(lines) => {
            for l in lines {
                println!("{l}");
            }
            ExitCode::SUCCESS
        }
        Err(e) => {
            log::info!("{e:?}");
            println!("{}", e.to_json());
            ExitCode::from(e.exit_code() as u8)
        }
    }
}

pub(crate) fn parse_list(s: &str) -> Result<Vec<Rat>, CliError> {
    s.split(',')
        .map(str::trim)
        .filter(|t| !t.is_empty())
        .map(|t| rational(t).map_err(CliError::Malformed))
        .collect()
}
