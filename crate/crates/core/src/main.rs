use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};

use arrlab::arrangement::{AnyArrangement, LineArrangement, ParsedArrangement};
use arrlab::complex::CellComplex;
use arrlab::falk::{self, Options, SolveOptions, WeightSystem};
use arrlab::render::{render_svg, RenderOptions};
use arrlab::{builtins, report, Field, Result};

/// Exact analysis of real line and plane arrangements.
///
/// ARR is an arrangement file or a builtin `@name` (icosidodecahedral,
/// icosidodecahedral-decone, boolean2, boolean3, generic3, pencil3,
/// parallel2, braid, grid3, bowtie). Plane arrangements are deconed at their
/// first edge plane (else their first plane) wherever lines are needed.
#[derive(Parser)]
#[command(name = "arrlab", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Full report: Poincaré polynomials, split, simpliciality, factoredness, Γ, weight test.
    Analyze { arr: String },
    /// Intersection poset by rank and the Poincaré polynomial.
    Poset {
        arr: String,
        /// Print the Möbius value of every flat.
        #[arg(long)]
        mobius: bool,
    },
    /// Counts, censuses, link table and corner ids of the bounded complex.
    Gamma { arr: String },
    /// Two-part factorization search.
    Factor { arr: String },
    /// Falk's weight test.
    #[command(subcommand)]
    Falk(FalkCommand),
    /// Draw the arrangement as SVG.
    Render {
        arr: String,
        #[arg(short, long)]
        output: PathBuf,
        /// Bold Γ edges and shade bounded faces.
        #[arg(long)]
        gamma: bool,
        /// Annotate corners with the weights in this file.
        #[arg(long)]
        weights: Option<PathBuf>,
    },
}

#[derive(Args)]
struct SystemFlags {
    /// Require each face sum to equal d(f) - 2.
    #[arg(long)]
    equality_asphericity: bool,
}

#[derive(Subcommand)]
enum FalkCommand {
    /// Dump the constraint system, one `<coeff>*x<corner> ... <rel> <rhs>` row per line.
    Constraints {
        arr: String,
        #[command(flatten)]
        flags: SystemFlags,
    },
    /// Search for a weight system by exact simplex.
    Solve {
        arr: String,
        #[command(flatten)]
        flags: SystemFlags,
        /// Minimize the total weight.
        #[arg(long)]
        minimize_total: bool,
        /// Write the weights file here instead of stdout.
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Check a weights file (`corner <vertex> <face> = <rational>` lines).
    Verify { arr: String, weights: PathBuf },
}

fn lines_of<F: Field>(a: &ParsedArrangement<F>) -> Result<LineArrangement<F>> {
    match a {
        ParsedArrangement::Lines(l) => Ok(l.clone()),
        ParsedArrangement::Planes(p) => p.decone(p.default_decone_index()),
    }
}

/// Runs `$body` with `$a` bound to the parsed arrangement over its own field.
macro_rules! with_field {
    ($any:expr, $a:ident => $body:expr) => {
        match $any {
            AnyArrangement::Rational($a) => $body,
            AnyArrangement::Golden($a) => $body,
        }
    };
}

fn poset<F: Field>(a: &ParsedArrangement<F>, mobius: bool) -> String {
    match a {
        ParsedArrangement::Lines(l) => report::poset_report(l, mobius),
        ParsedArrangement::Planes(p) => report::poset_report(p, mobius),
    }
}

fn falk_cmd<F: Field>(a: &ParsedArrangement<F>, cmd: &FalkCommand) -> Result<ExitCode> {
    let complex = CellComplex::build(&lines_of(a)?);
    match cmd {
        FalkCommand::Constraints { flags, .. } => {
            let options = Options { equality_asphericity: flags.equality_asphericity, ..Options::default() };
            print!("{}", falk::build_constraints(&complex, &options)?);
            Ok(ExitCode::SUCCESS)
        }
        FalkCommand::Solve { flags, minimize_total, output, .. } => {
            let options = SolveOptions {
                constraints: Options { equality_asphericity: flags.equality_asphericity, ..Options::default() },
                minimize_total: *minimize_total,
            };
            let solution = falk::solve(&complex, &options)?;
            for w in solution.system.warnings() {
                eprintln!("warning: {w}");
            }
            let checked = if solution.check() { "certificate checked" } else { "CERTIFICATE CHECK FAILED" };
            match solution.weights() {
                Some(weights) => {
                    eprintln!("FEASIBLE ({} rows, total weight {}, {checked})", solution.system.rows().len(), weights.total());
                    let text = weights.to_text(&complex);
                    match output {
                        Some(path) => std::fs::write(path, text)?,
                        None => print!("{text}"),
                    }
                    Ok(ExitCode::SUCCESS)
                }
                None => {
                    println!("INFEASIBLE ({checked}); Farkas multipliers on nonzero rows:");
                    let rows = solution.system.rows();
                    for (row, lambda) in rows.iter().zip(solution.certificate().unwrap_or(&[])) {
                        if !lambda.is_zero() {
                            println!("  {lambda} x [{row}]  # {}", row.provenance[0]);
                        }
                    }
                    Ok(ExitCode::from(1))
                }
            }
        }
        FalkCommand::Verify { weights, .. } => {
            let w = WeightSystem::parse(&std::fs::read_to_string(weights)?, &complex)?;
            let report = falk::verify(&complex, &w)?;
            print!("{report}");
            Ok(if report.passed() { ExitCode::SUCCESS } else { ExitCode::from(1) })
        }
    }
}

fn render<F: Field>(a: &ParsedArrangement<F>, gamma: bool, weights: Option<&PathBuf>) -> Result<String> {
    let l = lines_of(a)?;
    let weights = match weights {
        Some(path) => Some(WeightSystem::parse(&std::fs::read_to_string(path)?, &CellComplex::build(&l))?),
        None => None,
    };
    Ok(render_svg(&l, &RenderOptions { gamma, weights }))
}

fn run(cli: Cli) -> Result<ExitCode> {
    match cli.command {
        Command::Analyze { arr } => {
            let r = report::analyze(&builtins::load(&arr)?)?;
            print!("{r}");
        }
        Command::Poset { arr, mobius } => {
            print!("{}", with_field!(&builtins::load(&arr)?, a => poset(a, mobius)));
        }
        Command::Gamma { arr } => {
            let text = with_field!(&builtins::load(&arr)?, a => report::gamma_report(&CellComplex::build(&lines_of(a)?)));
            print!("{text}");
        }
        Command::Factor { arr } => {
            print!("{}", with_field!(&builtins::load(&arr)?, a => report::factor_report(&lines_of(a)?)));
        }
        Command::Falk(cmd) => {
            let arr = match &cmd {
                FalkCommand::Constraints { arr, .. } | FalkCommand::Solve { arr, .. } | FalkCommand::Verify { arr, .. } => arr,
            };
            return with_field!(&builtins::load(arr)?, a => falk_cmd(a, &cmd));
        }
        Command::Render { arr, output, gamma, weights } => {
            let svg = with_field!(&builtins::load(&arr)?, a => render(a, gamma, weights.as_ref())?);
            std::fs::write(output, svg)?;
        }
    }
    Ok(ExitCode::SUCCESS)
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}
