//! Argument definitions and command dispatch for the `qsym` binary.

use std::fmt;
use std::io::{self, Write};
use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand, ValueEnum};
use qsym_core::algebra::{default_order, transition_matrix};
use qsym_core::bijections::{trace, BijectionMap};
use qsym_core::expansions::{format_polynomial, specialize, verify_commutation};
use qsym_core::insertion::{dual_row_insert, rsct_insert};
use qsym_core::tableaux::for_each_filling;
use qsym_core::{
    Basis, Composition, Expander, Family, Filling, QsymError, TableauKind, TransitionMatrix, VerificationReport,
};

use crate::formats::{
    format_rows, parse_rows, write_element_csv, write_matrix_csv, CacheFile, ElementJson, FillingJson,
    InsertionJson, MatrixJson, ReportJson, TraceJson, VerificationJson,
};

#[derive(Debug, Parser)]
#[command(name = "qsym", version, about = "Exact computations with quasisymmetric Schur functions")]
pub struct Cli {
    /// Output format.
    #[arg(long, global = true, value_enum, default_value_t = Format::Pretty)]
    pub format: Format,

    /// JSON file used to load and store enumeration counts.
    #[arg(long, global = true, value_name = "PATH")]
    pub cache: Option<PathBuf>,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Pretty,
    Json,
    Csv,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Expand QS_α, RS_α or s_λ in a basis.
    Expand {
        #[arg(long, value_parser = parse_family)]
        family: Family,
        /// Comma-separated parts, e.g. `1,3`.
        #[arg(long, value_parser = parse_composition)]
        index: Composition,
        #[arg(long, value_parser = parse_basis, default_value = "F")]
        basis: Basis,
        /// Also print the specialization to x1..xk.
        #[arg(long, value_name = "K")]
        variables: Option<usize>,
    },
    /// Transition matrix between two bases in degree n.
    Matrix {
        #[arg(long, value_parser = parse_basis)]
        from: Basis,
        #[arg(long, value_parser = parse_basis)]
        to: Basis,
        #[arg(short = 'n', long = "degree")]
        n: usize,
        /// Column order: descending revlex, or descending revlex of complements.
        #[arg(long, value_enum, default_value_t = Order::Revlex)]
        col_order: Order,
    },
    /// List or count fillings of a shape.
    Tableaux {
        #[arg(long, value_parser = parse_composition)]
        shape: Composition,
        #[arg(long, value_parser = parse_kind, default_value = "rsct")]
        kind: TableauKind,
        /// Largest entry; defaults to the number of cells.
        #[arg(long)]
        max_entry: Option<u32>,
        /// Only standard fillings.
        #[arg(long)]
        standard: bool,
        /// Print the number of fillings only.
        #[arg(long)]
        count: bool,
    },
    /// Trace an insertion: RSCT F ⤙ x, or T ← x for a reverse row-strict T.
    Insert {
        /// Rows separated by `;`, entries by `,`, e.g. `2,1;2;4,3,2`.
        #[arg(long, allow_hyphen_values = true)]
        rows: String,
        #[arg(long)]
        value: u32,
        #[arg(long, value_parser = parse_kind, default_value = "rsct")]
        kind: TableauKind,
    },
    /// Trace one of the bijections ρ, ρ_c, τ, φ or an inverse.
    Bijection {
        #[arg(long, value_enum)]
        map: MapArg,
        #[arg(long)]
        rows: String,
        /// Kind of the input; defaults to the map's domain.
        #[arg(long, value_parser = parse_kind)]
        kind: Option<TableauKind>,
    },
    /// Check identities exhaustively up to degree n.
    Verify {
        #[arg(value_enum)]
        check: Check,
        #[arg(short = 'n', default_value_t = 5)]
        n: usize,
    },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Order {
    Revlex,
    Complement,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum MapArg {
    Rho,
    RhoInv,
    RhoCol,
    RhoColInv,
    Transpose,
    Phi,
    PhiInv,
}

impl MapArg {
    fn map(self) -> BijectionMap {
        match self {
            MapArg::Rho => BijectionMap::RhoRow,
            MapArg::RhoInv => BijectionMap::RhoRowInv,
            MapArg::RhoCol => BijectionMap::RhoCol,
            MapArg::RhoColInv => BijectionMap::RhoColInv,
            MapArg::Transpose => BijectionMap::Transpose,
            MapArg::Phi => BijectionMap::Phi,
            MapArg::PhiInv => BijectionMap::PhiInv,
        }
    }

    fn domain(self) -> TableauKind {
        match self {
            MapArg::Rho | MapArg::Transpose => TableauKind::ReverseRowStrict,
            MapArg::RhoInv | MapArg::PhiInv => TableauKind::Rsct,
            MapArg::RhoCol => TableauKind::ReverseColumnStrict,
            MapArg::RhoColInv | MapArg::Phi => TableauKind::Csct,
        }
    }

    fn name(self) -> &'static str {
        match self {
            MapArg::Rho => "rho",
            MapArg::RhoInv => "rho-inv",
            MapArg::RhoCol => "rho-col",
            MapArg::RhoColInv => "rho-col-inv",
            MapArg::Transpose => "transpose",
            MapArg::Phi => "phi",
            MapArg::PhiInv => "phi-inv",
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Check {
    Omega,
    Schur,
    Triangularity,
    Commutation,
    Consistency,
    All,
}

fn parse_composition(s: &str) -> Result<Composition, String> {
    s.parse::<Composition>().map_err(|e| e.to_string())
}

fn parse_basis(s: &str) -> Result<Basis, String> {
    s.parse()
}

fn parse_family(s: &str) -> Result<Family, String> {
    s.parse()
}

fn parse_kind(s: &str) -> Result<TableauKind, String> {
    s.parse()
}

#[derive(Debug)]
pub enum CliError {
    Input(String),
    Core(QsymError),
    Io(io::Error),
    Json(serde_json::Error),
    Csv(csv::Error),
}

impl fmt::Display for CliError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CliError::Input(s) => f.write_str(s),
            CliError::Core(e) => write!(f, "{}", e),
            CliError::Io(e) => write!(f, "i/o error: {}", e),
            CliError::Json(e) => write!(f, "json error: {}", e),
            CliError::Csv(e) => write!(f, "csv error: {}", e),
        }
    }
}

impl std::error::Error for CliError {}

impl From<QsymError> for CliError {
    fn from(e: QsymError) -> Self {
        CliError::Core(e)
    }
}

impl From<io::Error> for CliError {
    fn from(e: io::Error) -> Self {
        CliError::Io(e)
    }
}

impl From<serde_json::Error> for CliError {
    fn from(e: serde_json::Error) -> Self {
        CliError::Json(e)
    }
}

impl From<csv::Error> for CliError {
    fn from(e: csv::Error) -> Self {
        CliError::Csv(e)
    }
}

/// Process exit codes.
pub mod exit {
    pub const OK: u8 = 0;
    pub const VERIFY_FAILED: u8 = 1;
    pub const ERROR: u8 = 2;
}

/// Runs a parsed command, writing results to `out`. Returns the exit code.
pub fn run(cli: &Cli, out: &mut dyn Write) -> Result<u8, CliError> {
    let mut expander = Expander::new();
    if let Some(path) = &cli.cache {
        load_cache(&mut expander, path)?;
    }
    let code = dispatch(cli, &mut expander, out)?;
    if let Some(path) = &cli.cache {
        store_cache(&expander, path)?;
    }
    Ok(code)
}

fn load_cache(x: &mut Expander, path: &Path) -> Result<(), CliError> {
    if !path.exists() {
        return Ok(());
    }
    let text = std::fs::read_to_string(path)?;
    let file: CacheFile = serde_json::from_str(&text)?;
    x.import(file.to_entries().map_err(CliError::Input)?);
    Ok(())
}

fn store_cache(x: &Expander, path: &Path) -> Result<(), CliError> {
    let file = CacheFile::from_entries(x.cache_entries());
    std::fs::write(path, serde_json::to_string(&file)?)?;
    Ok(())
}

fn dispatch(cli: &Cli, x: &mut Expander, out: &mut dyn Write) -> Result<u8, CliError> {
    let format = cli.format;
    match &cli.command {
        Command::Expand { family, index, basis, variables } => {
            let report = x.expand(*family, index, *basis)?;
            let poly = match variables {
                Some(k) => {
                    let m = x.expand(*family, index, Basis::M)?.element;
                    Some(specialize(&m, *k)?)
                }
                None => None,
            };
            match format {
                Format::Pretty => {
                    writeln!(out, "{}", report)?;
                    if let (Some(p), Some(k)) = (&poly, variables) {
                        writeln!(out, "{}({}; x1..x{}) = {}", family, index, k, format_polynomial(p))?;
                    }
                }
                Format::Json => {
                    let mut value = serde_json::to_value(ReportJson::from(&report))?;
                    if let Some(p) = &poly {
                        value["polynomial"] = serde_json::Value::String(format_polynomial(p));
                    }
                    writeln!(out, "{}", serde_json::to_string_pretty(&value)?)?;
                }
                Format::Csv => write_element_csv(&report.element, &mut *out)?,
            }
            Ok(exit::OK)
        }
        Command::Matrix { from, to, n, col_order } => {
            let rows = default_order(*n);
            let cols: Vec<Composition> = match col_order {
                Order::Revlex => rows.clone(),
                Order::Complement => rows.iter().map(Composition::complement).collect(),
            };
            let m = transition_matrix(x, *from, *to, *n, Some(&rows), Some(&cols))?;
            match format {
                Format::Pretty => write!(out, "{}", pretty_matrix(&m))?,
                Format::Json => writeln!(out, "{}", serde_json::to_string_pretty(&MatrixJson::from(&m))?)?,
                Format::Csv => write_matrix_csv(&m, &mut *out)?,
            }
            Ok(exit::OK)
        }
        Command::Tableaux { shape, kind, max_entry, standard, count } => {
            let max = max_entry.unwrap_or(shape.degree() as u32);
            let mut found: Vec<Vec<Vec<u32>>> = Vec::new();
            let mut total = 0u64;
            for_each_filling(shape, *kind, max, *standard, |rows| {
                total += 1;
                if !count {
                    found.push(rows.to_vec());
                }
            });
            let fillings: Vec<Filling> =
                found.into_iter().map(|r| Filling::checked(*kind, r)).collect::<Result<_, _>>()?;
            match (format, count) {
                (Format::Pretty, true) | (Format::Csv, true) => writeln!(out, "{}", total)?,
                (Format::Json, true) => writeln!(out, "{}", serde_json::json!({ "count": total }))?,
                (Format::Pretty, false) => {
                    for f in &fillings {
                        writeln!(out, "{}\n", f)?;
                    }
                    writeln!(out, "{} fillings", total)?;
                }
                (Format::Json, false) => {
                    let list: Vec<FillingJson> = fillings.iter().map(FillingJson::from).collect();
                    writeln!(out, "{}", serde_json::to_string_pretty(&list)?)?;
                }
                (Format::Csv, false) => {
                    let mut w = csv::Writer::from_writer(&mut *out);
                    w.write_record(["shape", "rows"])?;
                    for f in &fillings {
                        w.write_record([f.shape().to_string(), format_rows(f.rows())])?;
                    }
                    w.flush()?;
                }
            }
            Ok(exit::OK)
        }
        Command::Insert { rows, value, kind } => {
            let input = Filling::checked(*kind, parse_rows(rows).map_err(CliError::Input)?)?;
            let r = match kind {
                TableauKind::Rsct => rsct_insert(&input, *value)?,
                TableauKind::ReverseRowStrict => dual_row_insert(&input, *value)?,
                other => return Err(CliError::Input(format!("cannot insert into a {} tableau", other))),
            };
            match format {
                Format::Pretty => {
                    writeln!(out, "{}\n", input)?;
                    for s in &r.steps {
                        writeln!(
                            out,
                            "insert {} at {}, replacing {}",
                            s.inserting,
                            s.cell,
                            if s.replaced == 0 { "nothing".to_string() } else { s.replaced.to_string() }
                        )?;
                    }
                    writeln!(out, "\n{}", r.result)?;
                }
                Format::Json => {
                    writeln!(out, "{}", serde_json::to_string_pretty(&InsertionJson::new(&input, *value, &r))?)?
                }
                Format::Csv => {
                    let mut w = csv::Writer::from_writer(&mut *out);
                    w.write_record(["inserting", "row", "col", "replaced"])?;
                    for s in &r.steps {
                        w.write_record([s.inserting, s.cell.row as u32 + 1, s.cell.col as u32 + 1, s.replaced].map(|v| v.to_string()))?;
                    }
                    w.flush()?;
                }
            }
            Ok(exit::OK)
        }
        Command::Bijection { map, rows, kind } => {
            let input = Filling::checked(kind.unwrap_or(map.domain()), parse_rows(rows).map_err(CliError::Input)?)?;
            let t = trace(map.map(), &input)?;
            match format {
                Format::Pretty => {
                    writeln!(out, "{}\n", input)?;
                    for s in &t.steps {
                        writeln!(out, "{}", s)?;
                    }
                    writeln!(out, "\n{}", t.output)?;
                }
                Format::Json => writeln!(out, "{}", serde_json::to_string_pretty(&TraceJson::new(map.name(), &t))?)?,
                Format::Csv => {
                    let mut w = csv::Writer::from_writer(&mut *out);
                    w.write_record(["entry", "row", "col"])?;
                    for s in &t.steps {
                        w.write_record([s.entry, s.cell.row as u32 + 1, s.cell.col as u32 + 1].map(|v| v.to_string()))?;
                    }
                    w.flush()?;
                }
            }
            Ok(exit::OK)
        }
        Command::Verify { check, n } => {
            if *n == 0 {
                return Err(CliError::Input("verification needs n >= 1".into()));
            }
            let reports = run_checks(x, *check, *n);
            match format {
                Format::Pretty => {
                    for r in &reports {
                        writeln!(out, "{} {}", if r.passed() { "PASS" } else { "FAIL" }, r)?;
                        for f in r.failures() {
                            writeln!(out, "    failed: {}", f)?;
                        }
                    }
                }
                Format::Json => {
                    let list: Vec<VerificationJson> = reports.iter().map(VerificationJson::from).collect();
                    writeln!(out, "{}", serde_json::to_string_pretty(&list)?)?;
                }
                Format::Csv => {
                    let mut w = csv::Writer::from_writer(&mut *out);
                    w.write_record(["check", "case", "passed"])?;
                    for r in &reports {
                        for (label, ok) in &r.cases {
                            w.write_record([r.name.as_str(), label.as_str(), if *ok { "true" } else { "false" }])?;
                        }
                    }
                    w.flush()?;
                }
            }
            Ok(if reports.iter().all(VerificationReport::passed) { exit::OK } else { exit::VERIFY_FAILED })
        }
    }
}

/// Each check runs for every degree from 1 to `n`.
fn run_checks(x: &mut Expander, check: Check, n: usize) -> Vec<VerificationReport> {
    let wanted = |c: Check| check == c || check == Check::All;
    let mut reports = Vec::new();
    let mut each = |name: &str, f: &mut dyn FnMut(usize) -> VerificationReport| {
        let mut r = VerificationReport::new(name);
        for d in 1..=n {
            r.merge(f(d));
        }
        reports.push(r);
    };
    if wanted(Check::Schur) {
        each("schur", &mut |d| x.verify_schur_decompositions(d));
    }
    if wanted(Check::Omega) {
        each("omega", &mut |d| x.verify_omega_theorem(d));
    }
    if wanted(Check::Triangularity) {
        each("triangularity", &mut |d| x.verify_triangularity(d));
    }
    if wanted(Check::Consistency) {
        each("consistency", &mut |d| x.verify_consistency(d));
    }
    if wanted(Check::Commutation) {
        reports.push(verify_commutation(n));
    }
    reports
}

fn pretty_matrix(m: &TransitionMatrix) -> String {
    let label = |a: &Composition| a.parts().iter().map(|p| p.to_string()).collect::<Vec<_>>().join(if m.degree > 9 { "," } else { "" });
    let rows: Vec<String> = m.row_order.iter().map(label).collect();
    let cols: Vec<String> = m.col_order.iter().map(label).collect();
    let corner = format!("{}\\{}", m.from_basis, m.to_basis);
    let lw = rows.iter().map(String::len).chain([corner.len()]).max().unwrap_or(0);
    let cells: Vec<Vec<String>> = m.entries.iter().map(|r| r.iter().map(|c| c.to_string()).collect()).collect();
    let widths: Vec<usize> = (0..cols.len())
        .map(|j| cells.iter().map(|r| r[j].len()).chain([cols[j].len()]).max().unwrap_or(1))
        .collect();
    let mut s = format!("{:<lw$} |", corner);
    for (c, w) in cols.iter().zip(&widths) {
        s.push_str(&format!(" {:>w$}", c));
    }
    s.push('\n');
    for (r, row) in rows.iter().zip(&cells) {
        s.push_str(&format!("{:<lw$} |", r));
        for (c, w) in row.iter().zip(&widths) {
            s.push_str(&format!(" {:>w$}", c));
        }
        s.push('\n');
    }
    s
}

/// Reads an element from its JSON form.
pub fn read_element(json: &str) -> Result<qsym_core::QSymElement, CliError> {
    let e: ElementJson = serde_json::from_str(json)?;
    e.to_element().map_err(CliError::Input)
}
