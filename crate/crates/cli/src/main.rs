use std::io::Read;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use rigidkin::Point3;
use rigidkin_cli::output::{arcs_to_csv, to_json, to_table};
use rigidkin_cli::run::EXIT_INVALID;
use rigidkin_cli::{parse_configuration, run_subcommand, Command, Flags, Format};

#[derive(Parser)]
#[command(
    name = "rigidkin",
    version,
    about = "Decompose and verify rigid-body displacements"
)]
struct Cli {
    #[command(subcommand)]
    command: Sub,
}

#[derive(Subcommand)]
enum Sub {
    /// Three-step decomposition, equivalent rotation and Chasles form
    Decompose(Options),
    /// Screw axis, angle and slide
    Screw(Options),
    /// Rotation center or translation of a planar motion
    Planar(Options),
    /// Recover every extra point from its distances to the reference triple
    FourthPoint(Options),
    /// Sample the spherical construction as polylines
    Trace(Options),
    /// Run every check and report the residuals
    Verify(Options),
}

#[derive(Clone, Copy, ValueEnum)]
enum FormatArg {
    Json,
    Table,
    Csv,
}

#[derive(clap::Args)]
struct Options {
    /// Input document, or `-` for standard input
    #[arg(long, default_value = "-")]
    input: String,
    #[arg(long, value_enum, default_value_t = FormatArg::Table)]
    format: FormatArg,
    /// Report angles in degrees
    #[arg(long)]
    degrees: bool,
    /// Translating point as x,y,z
    #[arg(long, value_parser = parse_point, allow_hyphen_values = true)]
    translating_point: Option<Point3>,
    /// Minimum number of samples per arc (trace)
    #[arg(long, default_value_t = 64)]
    resolution: usize,
}

fn parse_point(s: &str) -> Result<Point3, String> {
    let parts = s
        .split(',')
        .map(|c| c.trim().parse::<f64>().map_err(|e| format!("{c:?}: {e}")))
        .collect::<Result<Vec<_>, _>>()?;
    match parts[..] {
        [x, y, z] if parts.iter().all(|c| c.is_finite()) => Ok(Point3::new(x, y, z)),
        [x, y] if x.is_finite() && y.is_finite() => Ok(Point3::new(x, y, 0.0)),
        _ => Err("expected x,y,z".into()),
    }
}

fn read_input(path: &str) -> std::io::Result<String> {
    if path == "-" {
        let mut text = String::new();
        std::io::stdin().read_to_string(&mut text)?;
        Ok(text)
    } else {
        std::fs::read_to_string(path)
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_INVALID } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    let (command, options) = match cli.command {
        Sub::Decompose(o) => (Command::Decompose, o),
        Sub::Screw(o) => (Command::Screw, o),
        Sub::Planar(o) => (Command::Planar, o),
        Sub::FourthPoint(o) => (Command::FourthPoint, o),
        Sub::Trace(o) => (Command::Trace, o),
        Sub::Verify(o) => (Command::Verify, o),
    };
    let flags = Flags {
        format: match options.format {
            FormatArg::Json => Format::Json,
            FormatArg::Table => Format::Table,
            FormatArg::Csv => Format::Csv,
        },
        degrees: options.degrees,
        translating_point: options.translating_point,
        resolution: options.resolution,
    };

    let text = match read_input(&options.input) {
        Ok(text) => text,
        Err(e) => {
            eprintln!("rigidkin: cannot read {}: {e}", options.input);
            return ExitCode::from(EXIT_INVALID);
        }
    };
    let config = match parse_configuration(&text) {
        Ok(config) => config,
        Err(e) => {
            eprintln!("rigidkin: {e}");
            return ExitCode::from(EXIT_INVALID);
        }
    };

    let (report, code) = run_subcommand(command, &config, &flags);
    let rendered = match flags.format {
        Format::Json => to_json(&report),
        Format::Table => to_table(&report),
        Format::Csv if report.error.is_none() => match arcs_to_csv(&report) {
            Ok(csv) => csv,
            Err(e) => {
                eprintln!("rigidkin: {e}");
                return ExitCode::from(EXIT_INVALID);
            }
        },
        Format::Csv => String::new(),
    };
    print!("{rendered}");
    if let Some(e) = &report.error {
        eprintln!("rigidkin: {e}");
    }
    ExitCode::from(code)
}
