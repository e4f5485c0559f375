use std::io::{self, BufRead};
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};

use cevian::cli::{
    cmd_classify, cmd_figure, cmd_report, cmd_verify, error_exit_code, read_expected, read_triangle, Format,
    ReportDocument, Suite,
};
use cevian::figure::{FigureKind, FigureSpec};
use cevian::median::ExpectedConstants;
use cevian::{CevianTriple, Result, Scalar, Triangle};

/// Exact cevian calculus: families, Ceva's condition and median triangles.
#[derive(Parser)]
#[command(name = "cevian", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct Common {
    /// Output format.
    #[arg(long, value_enum, default_value = "json", global = true)]
    format: Format,
}

#[derive(Args)]
struct TriangleArg {
    /// Triangle as "Ax,Ay;Bx,By;Cx,Cy", or "@path" to read it from a file.
    #[arg(long, default_value = "0,3;0,0;4,0")]
    triangle: String,
}

#[derive(Args)]
struct ExpectedArg {
    /// JSON fixture overriding the expected constants.
    #[arg(long)]
    expected: Option<PathBuf>,
}

#[derive(Subcommand)]
enum Command {
    /// Classify cevian triples "rho,sigma,tau" (read from stdin, one per line, when omitted).
    Classify {
        #[arg(long, allow_hyphen_values = true)]
        triple: Vec<String>,
        #[command(flatten)]
        common: Common,
    },
    /// Run one verification suite.
    Verify {
        #[command(flatten)]
        triangle: TriangleArg,
        #[arg(long, default_value = "1/2", allow_hyphen_values = true)]
        xi: String,
        #[arg(long, value_enum, default_value = "classical")]
        suite: Suite,
        #[command(flatten)]
        expected: ExpectedArg,
        #[command(flatten)]
        common: Common,
    },
    /// Render an SVG figure.
    Figure {
        #[arg(long, value_enum)]
        kind: FigureKind,
        #[command(flatten)]
        triangle: TriangleArg,
        #[arg(long, default_value = "1/2", allow_hyphen_values = true)]
        xi: String,
        #[arg(long)]
        out: PathBuf,
        #[arg(long, default_value_t = 800.0, allow_hyphen_values = true)]
        width: f64,
        #[arg(long, default_value_t = 600.0, allow_hyphen_values = true)]
        height: f64,
        #[command(flatten)]
        common: Common,
    },
    /// Classify the ξ = 1/2 triples and run every suite.
    Report {
        #[command(flatten)]
        triangle: TriangleArg,
        #[command(flatten)]
        expected: ExpectedArg,
        #[command(flatten)]
        common: Common,
    },
}

fn expected(path: Option<&Path>) -> Result<ExpectedConstants> {
    path.map_or_else(|| Ok(ExpectedConstants::default()), read_expected)
}

fn triples(args: &[String]) -> Result<Vec<CevianTriple>> {
    if !args.is_empty() {
        return args.iter().map(|s| s.parse()).collect();
    }
    let mut out = vec![];
    for line in io::stdin().lock().lines() {
        let line = line?;
        let line = line.trim();
        if !line.is_empty() && !line.starts_with('#') {
            out.push(line.parse()?);
        }
    }
    Ok(out)
}

fn run(cli: Cli) -> Result<(ReportDocument, Format)> {
    match cli.command {
        Command::Classify { triple, common } => Ok((cmd_classify(&triples(&triple)?), common.format)),
        Command::Verify { triangle, xi, suite, expected: e, common } => {
            let t = read_triangle(&triangle.triangle)?;
            let xi: Scalar = xi.parse()?;
            let doc = cmd_verify(&t, &xi, suite, &expected(e.expected.as_deref())?)?;
            Ok((doc, common.format))
        }
        Command::Figure { kind, triangle, xi, out, width, height, common } => {
            let t: Triangle = read_triangle(&triangle.triangle)?;
            let spec = FigureSpec { width, height, ..FigureSpec::new(kind, t, xi.parse()?) };
            Ok((cmd_figure(&spec, &out)?, common.format))
        }
        Command::Report { triangle, expected: e, common } => {
            let t = read_triangle(&triangle.triangle)?;
            Ok((cmd_report(&t, &expected(e.expected.as_deref())?)?, common.format))
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = run(cli).and_then(|(doc, format)| Ok((doc.render(format)?, doc.exit_code())));
    match result {
        Ok((text, code)) => {
            println!("{}", text.trim_end());
            ExitCode::from(code as u8)
        }
        Err(e) => {
            eprintln!("error: {}", e);
            ExitCode::from(error_exit_code(&e) as u8)
        }
    }
}
