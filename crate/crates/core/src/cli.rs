//! Command-line front end. Exit codes: 0 when the property holds (or the
//! graph is distance mean-regular), 2 when it does not, 1 on error.

use std::ffi::OsString;
use std::io::Write;
use std::path::Path;

use clap::{Args, Parser, Subcommand, ValueEnum};

use crate::analysis::{
    hadamard_characterization, is_distance_mean_regular, is_distance_regular,
    omega_characterization, super_regularity, triple_characterization, Witness,
};
use crate::error::{Error, Result};
use crate::graph::catalog::{catalog, ENTRIES};
use crate::graph::{circulant, compute_distances, parse_edge_list, parse_graph6, Graph};
use crate::linalg::real_eigenvalues;
use crate::partition::Tolerances;
use crate::report::{build_report, render_text, InputDescriptor};

pub const EXIT_YES: i32 = 0;
pub const EXIT_ERROR: i32 = 1;
pub const EXIT_NO: i32 = 2;

#[derive(Debug, Parser)]
#[command(name = "dmr", version, about = "Distance mean-regular graph analysis")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Run the full analysis and print a report.
    Analyze {
        #[command(flatten)]
        input: InputArgs,
        /// Emit the JSON report instead of text.
        #[arg(long)]
        json: bool,
        #[command(flatten)]
        tols: TolArgs,
    },
    /// Decide a single property.
    Check {
        #[command(flatten)]
        input: InputArgs,
        #[arg(value_enum)]
        property: Property,
        #[command(flatten)]
        tols: TolArgs,
    },
    /// List the built-in graphs.
    Catalog,
}

#[derive(Debug, Args)]
#[group(required = true, multiple = false)]
pub struct InputArgs {
    /// Edge-list file ("u v" per line, optional "n=N" header, '#' comments).
    #[arg(long, value_name = "FILE")]
    pub edges: Option<String>,
    /// graph6 string, or a file whose first line is one.
    #[arg(long, value_name = "STR|FILE")]
    pub graph6: Option<String>,
    /// Catalog name, e.g. petersen or cycle(6).
    #[arg(long, value_name = "NAME")]
    pub catalog: Option<String>,
    /// Circulant graph as n:s1,s2,...
    #[arg(long, value_name = "N:S1,S2,..")]
    pub circulant: Option<String>,
}

#[derive(Debug, Args)]
pub struct TolArgs {
    /// Eigensolver convergence tolerance.
    #[arg(long, default_value_t = crate::linalg::DEFAULT_TOL)]
    pub tol: f64,
    /// Eigenvalue clustering tolerance.
    #[arg(long = "cluster-tol", default_value_t = crate::linalg::DEFAULT_CLUSTER_TOL)]
    pub cluster_tol: f64,
}

impl From<&TolArgs> for Tolerances {
    fn from(t: &TolArgs) -> Self {
        Tolerances {
            tol: t.tol,
            cluster_tol: t.cluster_tol,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Property {
    Drg,
    Dmr,
    SuperRegular,
    Omega,
    Triples,
    Hadamard,
}

/// Parses `n:s1,s2,...`.
pub fn parse_circulant_spec(spec: &str) -> Result<Graph> {
    let bad = || Error::Circulant(format!("expected n:s1,s2,... got '{spec}'"));
    let (n, conns) = spec.split_once(':').ok_or_else(bad)?;
    let n: usize = n.trim().parse().map_err(|_| bad())?;
    let conns = conns
        .split(',')
        .map(|s| s.trim().parse::<usize>().map_err(|_| bad()))
        .collect::<Result<Vec<_>>>()?;
    Ok(circulant(n, &conns)?.with_label(format!("circulant({spec})")))
}

fn read_file(path: &str) -> Result<String> {
    std::fs::read_to_string(path).map_err(|e| Error::Parse {
        line: 0,
        msg: format!("{path}: {e}"),
    })
}

/// Loads the graph named by exactly one input flag.
pub fn load_graph(input: &InputArgs) -> Result<(Graph, InputDescriptor)> {
    let (kind, source, g) = if let Some(path) = &input.edges {
        ("edges", path.clone(), parse_edge_list(&read_file(path)?)?)
    } else if let Some(s) = &input.graph6 {
        let text = if Path::new(s).is_file() {
            read_file(s)?
                .lines()
                .map(str::trim)
                .find(|l| !l.is_empty())
                .unwrap_or("")
                .to_string()
        } else {
            s.clone()
        };
        ("graph6", s.clone(), parse_graph6(&text)?)
    } else if let Some(name) = &input.catalog {
        ("catalog", name.clone(), catalog(name)?)
    } else if let Some(spec) = &input.circulant {
        ("circulant", spec.clone(), parse_circulant_spec(spec)?)
    } else {
        return Err(Error::Empty);
    };
    let d = InputDescriptor::new(kind, &source, &g);
    Ok((g, d))
}

fn witness_text(w: &Option<Witness>) -> String {
    w.as_ref()
        .map(|w| format!("; witness {}", serde_json::to_string(w).unwrap_or_default()))
        .unwrap_or_default()
}

/// Returns `(holds, explanation)`.
pub fn check_property(g: &Graph, property: Property, tols: Tolerances) -> Result<(bool, String)> {
    let dd = compute_distances(g)?;
    Ok(match property {
        Property::Drg => {
            let v = is_distance_regular(&dd);
            if v.drg {
                (true, "intersection numbers depend only on distances".into())
            } else {
                let a = dd.adjacency().to_rational();
                let spec = real_eigenvalues(&a, None, tols.tol, tols.cluster_tol)?;
                let reason = if spec.distinct() != dd.diameter() + 1 {
                    format!("D={} but {} distinct eigenvalues", dd.diameter(), spec.distinct())
                } else {
                    "intersection numbers differ between pairs at equal distance".into()
                };
                (false, format!("{reason}{}", witness_text(&v.witness)))
            }
        }
        Property::Dmr => {
            let v = is_distance_mean_regular(&dd)?;
            (v.dmr, format!("{}{}", v.reason, witness_text(&v.witness)))
        }
        Property::SuperRegular => {
            let v = super_regularity(&dd);
            (v.super_regular, format!("shell sizes{}", witness_text(&v.witness)))
        }
        Property::Omega => {
            let v = omega_characterization(&dd, None)?;
            (v.well_defined, format!("edge counts between shells{}", witness_text(&v.witness)))
        }
        Property::Triples => {
            let v = triple_characterization(&dd, None)?;
            (v.well_defined, format!("triple counts{}", witness_text(&v.witness)))
        }
        Property::Hadamard => {
            let v = hadamard_characterization(&dd)?;
            (v.holds, format!("row and column sums of A_iA_j o A_h{}", witness_text(&v.witness)))
        }
    })
}

fn catalog_listing() -> String {
    let mut s = String::new();
    for e in ENTRIES {
        let n = e.n.map_or_else(|| "-".to_string(), |n| n.to_string());
        s.push_str(&format!("{:<24} n={:<4} {}\n", e.name, n, e.note));
    }
    s
}

fn execute(cli: Cli, out: &mut dyn Write) -> Result<i32> {
    let io = |e: std::io::Error| Error::Consistency(format!("output: {e}"));
    match cli.command {
        Command::Catalog => {
            write!(out, "{}", catalog_listing()).map_err(io)?;
            Ok(EXIT_YES)
        }
        Command::Analyze { input, json, tols } => {
            let (g, desc) = load_graph(&input)?;
            let report = build_report(&g, desc, (&tols).into())?;
            if json {
                writeln!(out, "{}", report.to_json()?).map_err(io)?;
            } else {
                write!(out, "{}", render_text(&report)).map_err(io)?;
            }
            Ok(if report.is_dmr() { EXIT_YES } else { EXIT_NO })
        }
        Command::Check {
            input,
            property,
            tols,
        } => {
            let (g, _) = load_graph(&input)?;
            let (holds, why) = check_property(&g, property, (&tols).into())?;
            let name = property
                .to_possible_value()
                .map(|v| v.get_name().to_string())
                .unwrap_or_default();
            writeln!(out, "{name}: {} ({why})", if holds { "yes" } else { "no" }).map_err(io)?;
            Ok(if holds { EXIT_YES } else { EXIT_NO })
        }
    }
}

/// Parses `args` (including the program name) and runs the command.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_ERROR } else { EXIT_YES };
            let _ = if e.use_stderr() {
                write!(err, "{e}")
            } else {
                write!(out, "{e}")
            };
            return code;
        }
    };
    match execute(cli, out) {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            EXIT_ERROR
        }
    }
}
