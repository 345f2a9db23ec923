use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use lmhs_core::io::{render_text, Report, ReportStatus};
use lmhs_core::{Error, ErrorKind};

mod reports;

#[derive(Parser)]
#[command(name = "lmhs", version, about = "Exact invariants of limiting mixed Hodge structures")]
struct Cli {
    #[arg(long, value_enum, default_value_t = Format::Text, global = true)]
    format: Format,
    /// Seed for randomized cone spot-checks.
    #[arg(long, default_value_t = 0x5eed, global = true)]
    seed: u64,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Args)]
struct Input {
    /// Problem file (JSON).
    #[arg(long)]
    input: PathBuf,
}

#[derive(Subcommand)]
enum Command {
    /// Monodromy weight filtration W(N) of the selected cone point.
    WeightFiltration(Input),
    /// Deligne bigrading of a mixed Hodge structure or of (W(N), F).
    Deligne(Input),
    /// The canonical R-split structure and the correction δ.
    Rsplit(Input),
    /// Checks that a nilpotent orbit is a polarized limiting MHS.
    LmhsCheck(Input),
    /// The reduced limit period map and its differential.
    LimitPeriod(Input),
    /// N-string decomposition of the limiting structure.
    Nstrings(Input),
    /// Stratum cohomology of a normal crossing degeneration.
    #[command(subcommand)]
    Strata(StrataCommand),
    /// First-order smoothing strata of a deformation space.
    #[command(subcommand)]
    Deform(DeformCommand),
    /// Built-in worked degenerations.
    #[command(subcommand)]
    Example(ExampleCommand),
}

#[derive(Clone, Copy, ValueEnum)]
enum Admission {
    Standard,
    AsWritten,
}

#[derive(Subcommand)]
enum StrataCommand {
    /// Checks the complex conditions on restriction and Gysin maps.
    Validate(Input),
    /// E₁ page of the weight spectral sequence at index i, with the multiplicity audit.
    E1 {
        #[command(flatten)]
        input: Input,
        #[arg(long, allow_hyphen_values = true)]
        i: i64,
    },
    /// Graded pieces of H^m(X_∞) and their N-strings.
    Nstrings {
        #[command(flatten)]
        input: Input,
        #[arg(long)]
        m: i64,
        #[arg(long, value_enum, default_value_t = Admission::Standard)]
        admission: Admission,
    },
    /// Double-curve surface with the given self-intersections.
    Surface {
        #[arg(long, allow_hyphen_values = true)]
        c1sq: i64,
        #[arg(long, allow_hyphen_values = true)]
        c2sq: i64,
    },
}

#[derive(Subcommand)]
enum DeformCommand {
    /// Smoothability and all strata T^B.
    Strata(Input),
    /// The smoothing cone.
    Cone(Input),
    /// Position of the line P(ker δ) in the plane.
    ClassifyP2(Input),
}

#[derive(Clone, Copy, ValueEnum)]
enum Genus2 {
    I,
    Ii,
}

#[derive(Subcommand)]
enum ExampleCommand {
    /// Nodal genus-3 curve.
    Genus3 {
        /// a11,a12,a22,b1,b2,c as Gaussian rationals, e.g. `0,1/2,0,1/3,1/5,i`.
        #[arg(long)]
        params: Option<String>,
    },
    /// Nodal genus-2 curve.
    Genus2 {
        #[arg(long, value_enum)]
        case: Genus2,
    },
    /// Stratum route for the genus-3 curve.
    Genus3Strata,
}

fn exit_code(kind: ErrorKind) -> u8 {
    match kind {
        ErrorKind::Domain => 1,
        ErrorKind::Parse => 2,
        ErrorKind::Precondition => 3,
        ErrorKind::Internal => 4,
    }
}

fn run(cli: &Cli) -> Result<Report, Error> {
    use reports as r;
    let seed = cli.seed;
    match &cli.command {
        Command::WeightFiltration(i) => r::weight(&r::load(&i.input)?),
        Command::Deligne(i) => r::deligne(&r::load(&i.input)?),
        Command::Rsplit(i) => r::rsplit(&r::load(&i.input)?),
        Command::LmhsCheck(i) => r::lmhs_check(&r::load(&i.input)?, seed),
        Command::LimitPeriod(i) => r::limit_period(&r::load(&i.input)?, seed),
        Command::Nstrings(i) => r::nstrings(&r::load(&i.input)?),
        Command::Strata(StrataCommand::Validate(i)) => r::strata_validate(&r::load(&i.input)?),
        Command::Strata(StrataCommand::E1 { input, i }) => r::strata_e1(&r::load(&input.input)?, *i),
        Command::Strata(StrataCommand::Nstrings { input, m, admission }) => {
            let bound = match admission {
                Admission::Standard => lmhs_core::strata::AdmissionBound::Standard,
                Admission::AsWritten => lmhs_core::strata::AdmissionBound::AsWritten,
            };
            r::strata_nstrings(&r::load(&input.input)?, *m, bound)
        }
        Command::Strata(StrataCommand::Surface { c1sq, c2sq }) => Ok(r::surface(*c1sq, *c2sq)),
        Command::Deform(DeformCommand::Strata(i)) => r::deform_strata(&r::load(&i.input)?),
        Command::Deform(DeformCommand::Cone(i)) => r::deform_cone(&r::load(&i.input)?),
        Command::Deform(DeformCommand::ClassifyP2(i)) => r::classify_p2(&r::load(&i.input)?),
        Command::Example(ExampleCommand::Genus3 { params }) => r::genus3(params.as_deref()),
        Command::Example(ExampleCommand::Genus2 { case }) => r::genus2(matches!(case, Genus2::Ii)),
        Command::Example(ExampleCommand::Genus3Strata) => r::genus3_strata(),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(report) => {
            let text = match cli.format {
                Format::Json => serde_json::to_string_pretty(&report).expect("report serializes") + "\n",
                Format::Text => render_text(&report),
            };
            // A closed pipe is not an error of the computation.
            let _ = std::io::stdout().write_all(text.as_bytes());
            ExitCode::from(if report.status == ReportStatus::Fail { 1 } else { 0 })
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(exit_code(e.kind()))
        }
    }
}
