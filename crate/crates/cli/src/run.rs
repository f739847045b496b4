use std::ffi::OsString;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::json;
use symchrom::{
    verify_bases_theorem, verify_identities, verify_ppositive, verify_skew_theorem, Basis, Caps,
    Graph, IdentityBounds, Rational, SymFunc, VerificationReport,
};

use crate::eval::{build_graph, chromatic, evaluate, EvalError};
use crate::parse::{parse, parse_graph, ParseError};

/// Process exit codes.
pub mod exit {
    pub const OK: i32 = 0;
    pub const VERIFICATION_FAILED: i32 = 1;
    pub const USAGE: i32 = 2;
    pub const SYNTAX: i32 = 3;
    pub const DOMAIN: i32 = 4;
    pub const RESOURCE: i32 = 5;
    pub const INTERNAL: i32 = 6;
}

/// Environment variable naming the number of worker threads for sweeps.
pub const WORKERS_ENV: &str = "SYMCHROM_WORKERS";

#[derive(Debug, Parser)]
#[command(name = "symchrom", version, about = "Exact symmetric functions and chromatic symmetric functions of graphs")]
pub struct Cli {
    #[arg(long, value_enum, default_value_t = Format::Text, global = true)]
    pub format: Format,
    /// Largest edge count for the edge-subset expansion of X_G.
    #[arg(long, default_value_t = 24, global = true)]
    pub edge_cap: usize,
    /// Largest vertex count for the stable-partition expansion of X_G.
    #[arg(long, default_value_t = 12, global = true)]
    pub vertex_cap: usize,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum BasisArg {
    E,
    H,
    M,
    P,
    S,
}

impl From<BasisArg> for Basis {
    fn from(b: BasisArg) -> Basis {
        match b {
            BasisArg::E => Basis::E,
            BasisArg::H => Basis::H,
            BasisArg::M => Basis::M,
            BasisArg::P => Basis::P,
            BasisArg::S => Basis::S,
        }
    }
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Evaluate an expression and print it in the chosen basis.
    Expand {
        #[arg(long, value_enum, default_value_t = BasisArg::P)]
        basis: BasisArg,
        expr: String,
    },
    /// Hall scalar product of two expressions.
    Scalar { lhs: String, rhs: String },
    /// Apply the involution omega.
    Omega {
        #[arg(long, value_enum, default_value_t = BasisArg::P)]
        basis: BasisArg,
        expr: String,
    },
    /// Chromatic symmetric function of a graph (`K3+K2`, `G(4; 1-2, 2-3)`, or JSON).
    Chromatic {
        #[arg(long, value_enum, default_value_t = BasisArg::P)]
        basis: BasisArg,
        graph: String,
    },
    /// Run an exhaustive verification sweep.
    Verify {
        #[command(subcommand)]
        which: Verify,
    },
}

#[derive(Debug, Subcommand)]
pub enum Verify {
    /// s_D is p-positive exactly for horizontal strips.
    Ppositive {
        #[arg(long, default_value_t = 8)]
        max_size: usize,
    },
    /// Multiples of s_D are chromatic exactly for vertical strips.
    Skew {
        #[arg(long, default_value_t = 8)]
        max_size: usize,
    },
    /// Only multiples of e_lambda are chromatic among the classical bases.
    Bases {
        #[arg(long, default_value_t = 5)]
        max_n: usize,
        #[arg(long, default_value_t = 5)]
        graph_cap: usize,
    },
    /// Expansions of X_G, product rule, omega-positivity, specialization, basis integrity.
    Identities {
        /// Largest skew diagram for the omega check.
        #[arg(long, default_value_t = 8)]
        max_size: usize,
        /// Largest degree for basis round trips and the h_r cross-check.
        #[arg(long, default_value_t = 10)]
        max_n: usize,
        /// Largest order for the exhaustive graph checks.
        #[arg(long, default_value_t = 5)]
        graph_cap: usize,
    },
}

/// What a command printed and how it exits.
#[derive(Debug, Default, PartialEq, Eq)]
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

impl Outcome {
    fn ok(stdout: String) -> Self {
        Outcome {
            code: exit::OK,
            stdout,
            stderr: String::new(),
        }
    }

    fn fail(code: i32, message: String) -> Self {
        Outcome {
            code,
            stdout: String::new(),
            stderr: message,
        }
    }
}

enum Failure {
    Parse(ParseError),
    Eval(EvalError),
    Lib(symchrom::Error),
    Json(String),
}

impl From<ParseError> for Failure {
    fn from(e: ParseError) -> Self {
        Failure::Parse(e)
    }
}

impl From<EvalError> for Failure {
    fn from(e: EvalError) -> Self {
        Failure::Eval(e)
    }
}

impl From<symchrom::Error> for Failure {
    fn from(e: symchrom::Error) -> Self {
        Failure::Lib(e)
    }
}

fn library_code(e: &symchrom::Error) -> i32 {
    match e {
        e if e.is_resource() => exit::RESOURCE,
        symchrom::Error::Internal(_) => exit::INTERNAL,
        _ => exit::DOMAIN,
    }
}

impl Failure {
    fn into_outcome(self) -> Outcome {
        match self {
            Failure::Parse(e) => Outcome::fail(exit::SYNTAX, format!("syntax error at {e}")),
            Failure::Eval(e) => Outcome::fail(library_code(&e.source), format!("error at {e}")),
            Failure::Lib(e) => Outcome::fail(library_code(&e), format!("error: {e}")),
            Failure::Json(e) => Outcome::fail(exit::DOMAIN, format!("error: {e}")),
        }
    }
}

fn render(f: &SymFunc, basis: Basis, format: Format) -> String {
    match format {
        Format::Text => f.display_in(basis),
        Format::Json => serde_json::to_string(&f.to_json(basis)).expect("serializable"),
    }
}

fn render_rational(q: &Rational) -> String {
    if q.is_integer() {
        q.numer().to_string()
    } else {
        format!("{}/{}", q.numer(), q.denom())
    }
}

fn report_outcome(report: VerificationReport, format: Format) -> Outcome {
    let code = if report.passed() {
        exit::OK
    } else {
        exit::VERIFICATION_FAILED
    };
    let stdout = match format {
        Format::Text => report.to_string(),
        Format::Json => serde_json::to_string(&report).expect("serializable"),
    };
    Outcome {
        code,
        stdout,
        stderr: String::new(),
    }
}

fn read_graph(text: &str) -> Result<Graph, Failure> {
    if text.trim_start().starts_with('{') {
        serde_json::from_str(text).map_err(|e| Failure::Json(format!("invalid graph JSON: {e}")))
    } else {
        Ok(build_graph(&parse_graph(text)?)?)
    }
}

fn execute(cli: &Cli) -> Result<Outcome, Failure> {
    let caps = Caps {
        max_edges: cli.edge_cap,
        max_vertices: cli.vertex_cap,
    };
    let eval_text = |text: &str| -> Result<SymFunc, Failure> { Ok(evaluate(&parse(text)?, &caps)?) };
    Ok(match &cli.command {
        Command::Expand { basis, expr } => Outcome::ok(render(&eval_text(expr)?, (*basis).into(), cli.format)),
        Command::Omega { basis, expr } => {
            Outcome::ok(render(&eval_text(expr)?.omega(), (*basis).into(), cli.format))
        }
        Command::Scalar { lhs, rhs } => {
            let value = eval_text(lhs)?.scalar_product(&eval_text(rhs)?);
            Outcome::ok(match cli.format {
                Format::Text => render_rational(&value),
                Format::Json => json!({ "value": format!("{}/{}", value.numer(), value.denom()) }).to_string(),
            })
        }
        Command::Chromatic { basis, graph } => {
            let g = read_graph(graph)?;
            Outcome::ok(render(&chromatic(&g, &caps)?, (*basis).into(), cli.format))
        }
        Command::Verify { which } => {
            let report = match which {
                Verify::Ppositive { max_size } => verify_ppositive(*max_size),
                Verify::Skew { max_size } => verify_skew_theorem(*max_size, &caps),
                Verify::Bases { max_n, graph_cap } => verify_bases_theorem(*max_n, *graph_cap)?,
                Verify::Identities {
                    max_size,
                    max_n,
                    graph_cap,
                } => {
                    let bounds = IdentityBounds {
                        omega_shape_size: *max_size,
                        round_trip_degree: *max_n,
                        complete_homogeneous_degree: *max_n,
                        expansions_exhaustive_n: *graph_cap,
                        specialization_n: *graph_cap,
                        omega_positivity_n: (*graph_cap + 1).min(symchrom::classify::GRAPH_SEARCH_CAP),
                        ..IdentityBounds::default()
                    };
                    verify_identities(&bounds)
                }
            };
            report_outcome(report, cli.format)
        }
    })
}

/// Parses arguments (including the program name) and runs one command.
pub fn run<I, T>(args: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let rendered = e.render().to_string();
            return if e.use_stderr() {
                Outcome::fail(exit::USAGE, rendered)
            } else {
                Outcome::ok(rendered)
            };
        }
    };
    match execute(&cli) {
        Ok(outcome) => outcome,
        Err(failure) => failure.into_outcome(),
    }
}
