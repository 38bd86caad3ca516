use arrcalc::report::table::{render_analysis, render_case_study, render_cone, render_lattice};
use arrcalc::report::{
    analyze, cone_report, lattice_report, run_case_study, Analysis, AnalysisOptions, CaseStudy, ConeInput, InputSpec,
    LatticeInput,
};
use arrcalc::Error;
use clap::{Args, Parser, Subcommand};
use std::io::{Read, Write};
use std::path::PathBuf;
use std::process::ExitCode;

const EXIT_INPUT: u8 = 2;
const EXIT_INTERNAL: u8 = 3;

#[derive(Parser)]
#[command(name = "arrcalc", version, about = "Exact calculus for weighted hyperplane arrangements and Hermitian lattices")]
struct Cli {
    #[command(flatten)]
    global: Global,
    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct Global {
    /// Input JSON document; standard input when omitted.
    #[arg(long, global = true)]
    input: Option<PathBuf>,
    /// Write the report here instead of standard output.
    #[arg(long, global = true)]
    output: Option<PathBuf>,
    /// Longest flag to enumerate in the stratification.
    #[arg(long, global = true)]
    max_flag_len: Option<usize>,
    /// Emit JSON (the default).
    #[arg(long, global = true, conflicts_with = "table")]
    json: bool,
    /// Emit a plain-text table.
    #[arg(long, global = true)]
    table: bool,
}

#[derive(Subcommand)]
enum Command {
    /// Signature, bounded roots and orthogonal complements of a lattice.
    Lattice,
    /// Intersection lattice, blow-up schedule and strata.
    Arrangement,
    /// Exponents, cone angles, discrepancies and the lc verdicts.
    Singularities,
    /// Flatness criterion and scalar residue sums.
    Flatness,
    /// Spherical joins, tangent cones and the cone metric check.
    Cone,
    /// Lattice facts for one of the presets, with an optional arrangement excerpt as input.
    CaseStudy {
        /// quartic, res or cubic3
        name: String,
    },
    /// Every analysis the input requests, or all that apply.
    Analyze,
}

enum Failure {
    Input(String),
    Internal(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Failure {
        if e.is_input_error() {
            Failure::Input(e.to_string())
        } else {
            Failure::Internal(e.to_string())
        }
    }
}

fn read_input(path: &Option<PathBuf>) -> Result<String, Failure> {
    let mut text = String::new();
    match path {
        Some(p) => {
            text = std::fs::read_to_string(p).map_err(|e| Failure::Input(format!("cannot read {}: {e}", p.display())))?;
        }
        None => {
            std::io::stdin()
                .read_to_string(&mut text)
                .map_err(|e| Failure::Input(format!("cannot read standard input: {e}")))?;
        }
    }
    Ok(text)
}

fn analysis_options(g: &Global, only: Option<Analysis>) -> AnalysisOptions {
    AnalysisOptions {
        max_flag_len: g.max_flag_len,
        only: only.map(|a| vec![a]),
    }
}

/// Returns the rendered report and whether every internal check held.
fn run(cli: &Cli) -> Result<(String, bool), Failure> {
    let g = &cli.global;
    let table = g.table;
    let arrangement = |only: Option<Analysis>| -> Result<(String, bool), Failure> {
        let model = InputSpec::from_json(&read_input(&g.input)?)?.build()?;
        let r = analyze(&model, &analysis_options(g, only))?;
        Ok((if table { render_analysis(&r) } else { r.to_json() }, true))
    };
    match &cli.command {
        Command::Lattice => {
            let r = lattice_report(&LatticeInput::from_json(&read_input(&g.input)?)?)?;
            Ok((if table { render_lattice(&r) } else { r.to_json() }, true))
        }
        Command::Arrangement => arrangement(Some(Analysis::Arrangement)),
        Command::Singularities => arrangement(Some(Analysis::Singularities)),
        Command::Flatness => arrangement(Some(Analysis::Flatness)),
        Command::Analyze => arrangement(None),
        Command::Cone => {
            let r = cone_report(&ConeInput::from_json(&read_input(&g.input)?)?)?;
            let ok = r.metric.iter().all(|m| m.within_tolerance);
            Ok((if table { render_cone(&r) } else { r.to_json() }, ok))
        }
        Command::CaseStudy { name } => {
            let study: CaseStudy = name.parse()?;
            let model = match &g.input {
                Some(_) => Some(InputSpec::from_json(&read_input(&g.input)?)?.build()?),
                None => None,
            };
            let options = analysis_options(g, None);
            let r = run_case_study(study, model.as_ref().map(|m| (m, &options)))?;
            let ok = r.passed();
            Ok((if table { render_case_study(&r) } else { r.to_json() }, ok))
        }
    }
}

fn emit(text: &str, output: &Option<PathBuf>) -> Result<(), Failure> {
    let mut text = text.to_string();
    if !text.ends_with('\n') {
        text.push('\n');
    }
    match output {
        Some(p) => std::fs::write(p, text).map_err(|e| Failure::Input(format!("cannot write {}: {e}", p.display()))),
        None => std::io::stdout()
            .write_all(text.as_bytes())
            .map_err(|e| Failure::Internal(format!("cannot write standard output: {e}"))),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let outcome = std::panic::catch_unwind(|| run(&cli)).unwrap_or_else(|p| {
        let msg = p
            .downcast_ref::<String>()
            .cloned()
            .or_else(|| p.downcast_ref::<&str>().map(|s| s.to_string()))
            .unwrap_or_else(|| "unknown panic".into());
        Err(Failure::Internal(msg))
    });
    let result = outcome.and_then(|(text, ok)| {
        emit(&text, &cli.global.output)?;
        if ok {
            Ok(())
        } else {
            Err(Failure::Internal("a verification check failed; see the report".into()))
        }
    });
    match result {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Input(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(EXIT_INPUT)
        }
        Err(Failure::Internal(msg)) => {
            eprintln!("internal error: {msg}");
            ExitCode::from(EXIT_INTERNAL)
        }
    }
}
