use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

use arrjump::building::{BuildingKind, Model};
use arrjump::jump::{analyze, AnalyzeOptions};
use arrjump::oracle::Oracle;
use arrjump::rational::format_rat;
use arrjump::report::{
    render_report_table, render_ring_info_table, report_to_json, ring_info, OracleReportJson,
    WitnessJson,
};
use arrjump::ring::build_presentation;
use arrjump::Error;

/// Jumping numbers and the (0,1] spectrum part of a central hyperplane
/// arrangement with multiplicities, by exact combinatorial computation.
#[derive(Parser)]
#[command(name = "arrjump", version, about)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Compute jumping numbers and inner jumping multiplicities.
    Analyze(AnalyzeArgs),
    /// Run only the affine ideal-membership oracle.
    Oracle(CommonArgs),
    /// Describe the cohomology-ring presentation for the building set.
    RingInfo(RingInfoArgs),
}

#[derive(Args)]
struct CommonArgs {
    /// Path to the arrangement JSON document.
    #[arg(long)]
    input: PathBuf,
    /// Output format.
    #[arg(long, value_enum, default_value_t = Format::Table)]
    format: Format,
    /// Include per-candidate details (criterion polynomials, oracle
    /// witnesses).
    #[arg(long)]
    diagnostics: bool,
}

#[derive(Args)]
struct AnalyzeArgs {
    #[command(flatten)]
    common: CommonArgs,
    /// Building set to compute with.
    #[arg(long, value_enum, default_value_t = BuildingSetArg::Full)]
    building_set: BuildingSetArg,
    /// Cross-validate every candidate against the affine oracle.
    #[arg(long)]
    oracle: bool,
}

#[derive(Args)]
struct RingInfoArgs {
    #[command(flatten)]
    common: CommonArgs,
    #[arg(long, value_enum, default_value_t = BuildingSetArg::Full)]
    building_set: BuildingSetArg,
}

#[derive(Clone, Copy, ValueEnum)]
enum BuildingSetArg {
    Full,
    Minimal,
}

impl From<BuildingSetArg> for BuildingKind {
    fn from(v: BuildingSetArg) -> Self {
        match v {
            BuildingSetArg::Full => BuildingKind::Full,
            BuildingSetArg::Minimal => BuildingKind::Minimal,
        }
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Table,
    Json,
}

fn read_input(args: &CommonArgs) -> Result<arrjump::ArrangementInput, Error> {
    let text = std::fs::read_to_string(&args.input)?;
    arrjump::parse_arrangement(&text)
}

fn cmd_analyze(args: &AnalyzeArgs) -> Result<ExitCode, Error> {
    let input = read_input(&args.common)?;
    let report = analyze(
        &input,
        AnalyzeOptions {
            kind: args.building_set.into(),
            with_oracle: args.oracle,
            diagnostics: args.common.diagnostics,
        },
    )?;
    match args.common.format {
        Format::Table => print!("{}", render_report_table(&report)),
        Format::Json => println!(
            "{}",
            serde_json::to_string_pretty(&report_to_json(&report))?
        ),
    }
    if report.oracle_all_agree == Some(false) {
        eprintln!("error: oracle disagrees with the jump criterion");
        return Ok(ExitCode::from(2));
    }
    Ok(ExitCode::SUCCESS)
}

fn cmd_oracle(args: &CommonArgs) -> Result<ExitCode, Error> {
    let input = read_input(args)?;
    let mut oracle = Oracle::new(&input);
    let jumps = oracle.jumping_set();
    let witnesses = args.diagnostics.then(|| {
        jumps
            .iter()
            .filter_map(|c| {
                oracle.witness(c).map(|terms| WitnessJson {
                    c: format_rat(c),
                    terms: terms
                        .into_iter()
                        .map(|(e, coeff)| (e, format_rat(&coeff)))
                        .collect(),
                })
            })
            .collect::<Vec<_>>()
    });
    match args.format {
        Format::Table => {
            let list: Vec<String> = jumps.iter().map(format_rat).collect();
            println!(
                "oracle jumping numbers in (0,1): {}",
                if list.is_empty() {
                    "(none)".to_string()
                } else {
                    list.join(", ")
                }
            );
            println!("degree bound: {}", oracle.bound);
            if let Some(ws) = &witnesses {
                for w in ws {
                    println!("witness for {}: {} terms", w.c, w.terms.len());
                }
            }
        }
        Format::Json => {
            let doc = OracleReportJson {
                degree_bound: oracle.bound,
                jumping_numbers: jumps.iter().map(format_rat).collect(),
                witnesses,
            };
            println!("{}", serde_json::to_string_pretty(&doc)?);
        }
    }
    Ok(ExitCode::SUCCESS)
}

fn cmd_ring_info(args: &RingInfoArgs) -> Result<ExitCode, Error> {
    let input = read_input(&args.common)?;
    let model = Model::build(&input, args.building_set.into());
    let presentation = build_presentation(&model);
    let info = ring_info(&model, &presentation)?;
    match args.common.format {
        Format::Table => print!("{}", render_ring_info_table(&info)),
        Format::Json => println!("{}", serde_json::to_string_pretty(&info)?),
    }
    Ok(ExitCode::SUCCESS)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match &cli.command {
        Command::Analyze(args) => cmd_analyze(args),
        Command::Oracle(args) => cmd_oracle(args),
        Command::RingInfo(args) => cmd_ring_info(args),
    };
    match result {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::FAILURE
        }
    }
}
