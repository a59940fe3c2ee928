//! `farey`: build Farey and Hecke graphs, print their spectra, and run the
//! structural verification suites.

mod output;
mod suites;

use std::fmt::Display;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use farey_core::farey::{build_graph, vertex_count, DEFAULT_GRAPH_CAP};
use farey_core::hecke::{build_hecke_graph, hecke_spectrum, HeckeFamily};
use farey_core::spectra::{
    closed_form_spectrum, compare_spectra, lambda1, numeric_spectrum, ramanujan_bound_holds,
    NumericSpectrum, Spectrum, Surd, DEFAULT_EIGEN_TOL,
};
use farey_core::RegularGraph;
use serde::Serialize;

use output::{Format, Output};

#[derive(Parser)]
#[command(name = "farey", version, about = "Farey and Hecke map graphs: spectra and structural checks")]
struct Cli {
    #[command(subcommand)]
    command: Command,

    /// Write the report to a file instead of stdout
    #[arg(long, global = true)]
    out: Option<PathBuf>,
}

#[derive(Subcommand)]
enum Command {
    /// Export a graph as an adjacency list (or JSON/CSV edge data)
    Build {
        family: Family,
        n: u64,
        #[arg(long, value_enum, default_value_t = GraphFormat::Adjacency)]
        format: GraphFormat,
    },
    /// Print the adjacency spectrum of a graph
    Spectrum {
        family: Family,
        n: u64,
        #[arg(long, value_enum, default_value_t = Mode::Exact)]
        mode: Mode,
        #[arg(long, value_enum, default_value_t = Format::Json)]
        format: Format,
        /// Tolerance for comparing exact and numeric eigenvalues
        #[arg(long, default_value_t = 1e-8)]
        tol: f64,
    },
    /// Run a verification suite over all parameters up to --max-n
    Verify {
        #[arg(value_enum)]
        suite: Suite,
        #[arg(long, default_value_t = 12)]
        max_n: u64,
        #[arg(long, value_enum, default_value_t = Format::Json)]
        format: Format,
        #[arg(long, default_value_t = 1e-8)]
        tol: f64,
    },
    /// Tabulate the second eigenvalue against the Ramanujan bound 2√(n−1)
    Ramanujan {
        #[arg(long, default_value_t = 40)]
        max_n: u64,
        #[arg(long, value_enum, default_value_t = Family::Farey)]
        family: Family,
        #[arg(long, value_enum, default_value_t = Format::Json)]
        format: Format,
    },
    /// Measure graph diameters, for one level or every admissible level up to --max-n
    Diameter {
        n: Option<u64>,
        #[arg(long, default_value_t = 20)]
        max_n: u64,
        #[arg(long, value_enum, default_value_t = Family::Farey)]
        family: Family,
        #[arg(long, value_enum, default_value_t = Format::Json)]
        format: Format,
    },
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Family {
    Farey,
    Hecke4,
    Hecke6,
}

impl Family {
    fn hecke(self) -> Option<HeckeFamily> {
        match self {
            Family::Farey => None,
            Family::Hecke4 => Some(HeckeFamily::Four),
            Family::Hecke6 => Some(HeckeFamily::Six),
        }
    }

    fn admits(self, n: u64) -> bool {
        self.hecke().map_or(n >= 2, |h| h.admits(n))
    }
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Mode {
    Exact,
    Numeric,
    Both,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum GraphFormat {
    Adjacency,
    Json,
    Csv,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Suite {
    Coverings,
    Products,
    Blocks,
    Spectra,
    Hecke,
    All,
}

/// A user-facing failure: bad parameters, I/O, or a library precondition.
#[derive(Debug)]
pub struct UsageError(String);

impl<E: Display> From<E> for UsageError {
    fn from(e: E) -> Self {
        UsageError(e.to_string())
    }
}

type CmdResult = Result<bool, UsageError>;

fn main() -> ExitCode {
    let cli = Cli::parse();
    let out = Output::new(cli.out);
    match run(cli.command, &out) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(UsageError(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}

fn run(command: Command, out: &Output) -> CmdResult {
    match command {
        Command::Build { family, n, format } => cmd_build(family, n, format, out),
        Command::Spectrum { family, n, mode, format, tol } => cmd_spectrum(family, n, mode, format, tol, out),
        Command::Verify { suite, max_n, format, tol } => cmd_verify(suite, max_n, format, tol, out),
        Command::Ramanujan { max_n, family, format } => cmd_ramanujan(max_n, family, format, out),
        Command::Diameter { n, max_n, family, format } => cmd_diameter(n, max_n, family, format, out),
    }
}

fn check_tol(tol: f64) -> Result<(), UsageError> {
    if !(tol > 0.0 && tol.is_finite()) {
        return Err(UsageError(format!("--tol must be a positive number, got {tol}")));
    }
    Ok(())
}

fn check_max_n(max_n: u64) -> Result<(), UsageError> {
    if max_n < 2 {
        return Err(UsageError(format!("--max-n must be at least 2, got {max_n}")));
    }
    if max_n > DEFAULT_GRAPH_CAP {
        return Err(UsageError(format!("--max-n {max_n} exceeds the graph cap {DEFAULT_GRAPH_CAP}")));
    }
    Ok(())
}

#[derive(Serialize)]
struct GraphReport<'a> {
    family: &'a str,
    n: u64,
    vertices: usize,
    degree: usize,
    adjacency: Vec<AdjacencyRow>,
}

#[derive(Serialize)]
struct AdjacencyRow {
    vertex: String,
    neighbours: Vec<String>,
}

#[derive(Serialize)]
struct EdgeRow {
    u: String,
    v: String,
}

fn family_name(family: Family) -> &'static str {
    match family {
        Family::Farey => "farey",
        Family::Hecke4 => "hecke4",
        Family::Hecke6 => "hecke6",
    }
}

fn write_graph<L: Display>(g: &RegularGraph<L>, family: Family, n: u64, format: GraphFormat, out: &Output) -> CmdResult {
    match format {
        GraphFormat::Adjacency => out.write_text(&g.to_adjacency_list())?,
        GraphFormat::Json => {
            let adjacency = (0..g.vertex_count())
                .map(|i| AdjacencyRow {
                    vertex: g.label(i).to_string(),
                    neighbours: g.neighbours(i).iter().map(|&j| g.label(j).to_string()).collect(),
                })
                .collect();
            let report = GraphReport {
                family: family_name(family),
                n,
                vertices: g.vertex_count(),
                degree: g.degree(),
                adjacency,
            };
            out.write_json(&report)?;
        }
        GraphFormat::Csv => {
            let rows: Vec<EdgeRow> =
                g.edges().map(|(i, j)| EdgeRow { u: g.label(i).to_string(), v: g.label(j).to_string() }).collect();
            out.write_csv(&rows)?;
        }
    }
    Ok(true)
}

fn cmd_build(family: Family, n: u64, format: GraphFormat, out: &Output) -> CmdResult {
    match family.hecke() {
        None => write_graph(&build_graph(n)?, family, n, format, out),
        Some(h) => write_graph(&build_hecke_graph(h, n)?, family, n, format, out),
    }
}

fn exact_spectrum(family: Family, n: u64) -> Result<Spectrum, UsageError> {
    Ok(match family.hecke() {
        None => closed_form_spectrum(n)?,
        Some(h) => hecke_spectrum(h, n)?,
    })
}

fn numeric_family_spectrum(family: Family, n: u64) -> Result<NumericSpectrum, UsageError> {
    Ok(match family.hecke() {
        None => numeric_spectrum(&build_graph(n)?, DEFAULT_EIGEN_TOL)?,
        Some(h) => numeric_spectrum(&build_hecke_graph(h, n)?, DEFAULT_EIGEN_TOL)?,
    })
}

#[derive(Serialize)]
struct BothReport {
    exact: Vec<farey_core::spectra::SpectrumRecord>,
    numeric: Vec<farey_core::spectra::SpectrumRecord>,
    verdict: String,
}

#[derive(Serialize)]
struct SourcedRecord<'a> {
    source: &'a str,
    z: Option<i64>,
    s: Option<u64>,
    value: &'a str,
    multiplicity: u64,
}

fn cmd_spectrum(family: Family, n: u64, mode: Mode, format: Format, tol: f64, out: &Output) -> CmdResult {
    check_tol(tol)?;
    if n > DEFAULT_GRAPH_CAP && mode != Mode::Exact {
        return Err(UsageError(format!("level {n} exceeds the graph cap {DEFAULT_GRAPH_CAP}")));
    }
    match mode {
        Mode::Exact => {
            out.write_records(&exact_spectrum(family, n)?.records(), format)?;
            Ok(true)
        }
        Mode::Numeric => {
            out.write_records(&numeric_family_spectrum(family, n)?.records(), format)?;
            Ok(true)
        }
        Mode::Both => {
            let exact = exact_spectrum(family, n)?;
            let numeric = numeric_family_spectrum(family, n)?;
            let verdict = compare_spectra(&exact, &numeric, tol);
            let report = BothReport { exact: exact.records(), numeric: numeric.records(), verdict: verdict.to_string() };
            match format {
                Format::Json => out.write_json(&report)?,
                Format::Csv => {
                    let rows: Vec<SourcedRecord> = [("exact", &report.exact), ("numeric", &report.numeric)]
                        .into_iter()
                        .flat_map(|(source, recs)| {
                            recs.iter().map(move |r| SourcedRecord {
                                source,
                                z: r.z,
                                s: r.s,
                                value: &r.value,
                                multiplicity: r.multiplicity,
                            })
                        })
                        .collect();
                    out.write_csv(&rows)?;
                    eprintln!("{verdict}");
                }
            }
            Ok(verdict.is_pass())
        }
    }
}

fn cmd_verify(suite: Suite, max_n: u64, format: Format, tol: f64, out: &Output) -> CmdResult {
    check_tol(tol)?;
    check_max_n(max_n)?;
    let report = suites::run(suite, max_n, tol);
    let ok = report.summary.failed == 0;
    match format {
        Format::Json => out.write_json(&report)?,
        Format::Csv => out.write_csv(&report.checks)?,
    }
    Ok(ok)
}

#[derive(Serialize)]
struct RamanujanRow {
    n: u64,
    lambda1: String,
    lambda1_value: String,
    threshold: String,
    ramanujan: bool,
}

fn cmd_ramanujan(max_n: u64, family: Family, format: Format, out: &Output) -> CmdResult {
    check_max_n(max_n)?;
    let mut rows = Vec::new();
    for n in (2..=max_n).filter(|&n| family.admits(n)) {
        let lambda = match family.hecke() {
            None if n > 4 => lambda1(n)?,
            None => closed_form_spectrum(n)?.second_largest_modulus(n).expect("nontrivial eigenvalue"),
            Some(h) => hecke_spectrum(h, n)?.second_largest_modulus(n).expect("nontrivial eigenvalue"),
        };
        rows.push(RamanujanRow {
            n,
            lambda1: lambda.to_string(),
            lambda1_value: farey_core::spectra::format_decimal(lambda.value()),
            threshold: Surd::new(2, n - 1).to_string(),
            ramanujan: ramanujan_bound_holds(lambda, n),
        });
    }
    match format {
        Format::Json => out.write_json(&rows)?,
        Format::Csv => out.write_csv(&rows)?,
    }
    Ok(true)
}

#[derive(Serialize)]
struct DiameterRow {
    n: u64,
    vertices: u64,
    degree: u64,
    diameter: usize,
}

fn cmd_diameter(n: Option<u64>, max_n: u64, family: Family, format: Format, out: &Output) -> CmdResult {
    let levels: Vec<u64> = match n {
        Some(n) => vec![n],
        None => {
            check_max_n(max_n)?;
            (2..=max_n).filter(|&n| family.admits(n)).collect()
        }
    };
    let mut rows = Vec::new();
    for n in levels {
        let (vertices, diameter) = match family.hecke() {
            None => (vertex_count(n)?, build_graph(n)?.diameter()?),
            Some(h) => (2 * vertex_count(n)?, build_hecke_graph(h, n)?.diameter()?),
        };
        rows.push(DiameterRow { n, vertices, degree: n, diameter });
    }
    match format {
        Format::Json => out.write_json(&rows)?,
        Format::Csv => out.write_csv(&rows)?,
    }
    Ok(true)
}
