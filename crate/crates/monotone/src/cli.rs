//! Command-line front end: text parsing, JSON reports, exit codes.
//!
//! Matrix files are plain text: one row per line, entries separated by
//! whitespace, each entry an integer (`-3`) or a fraction (`5/2`). Blank
//! lines and lines starting with `#` are ignored. Vector files use the
//! same format with a single row or a single column.
//!
//! Subcommands: `analyze`, `solve [--nonneg]`, `sandwich`, `decompose`,
//! `rays`, each taking file paths and an optional `--json`. Exit codes:
//! 0 for an affirmative or successful result, 1 for a certified negative
//! (infeasible system, failed sandwich step), 2 for usage or input
//! errors. Verdicts of `analyze` are data, not errors: it exits 0 either
//! way.
//!
//! Reports carry `schema_version`, the subcommand, and a SHA-256 digest
//! of the canonicalized inputs. Every rational is serialized as a `"p/q"`
//! string, so reports round-trip exactly.

use std::ffi::OsString;
use std::fs;
use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand};
use num_traits::Zero;
use serde::{Deserialize, Serialize};
use sha2::{Digest, Sha256};

use crate::cones::{range_orthant_rays, RayList};
use crate::error::Error;
use crate::farkas::{solve_nonneg, FarkasCertificate};
use crate::linalg::{
    left_nullspace_basis, parse_rational, qap_decompose, Matrix, QapDecomposition, Vector,
};
use crate::monotonicity::{analyze, MonotonicityReport};
use crate::preimage::{sandwich_preimages, SandwichOutcome};

pub const SCHEMA_VERSION: &str = "1";

/// Parses the matrix text format.
pub fn parse_matrix(text: &str) -> Result<Matrix, Error> {
    let mut rows: Vec<Vector> = Vec::new();
    for line in text.lines() {
        let line = line.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let entries = line
            .split_whitespace()
            .map(parse_rational)
            .collect::<Result<Vec<_>, _>>()?;
        rows.push(Vector::new(entries)?);
    }
    Matrix::from_rows(rows)
}

/// Parses a vector: a matrix with a single row or a single column.
pub fn parse_vector(text: &str) -> Result<Vector, Error> {
    let m = parse_matrix(text)?;
    if m.rows() == 1 {
        Ok(m.row(0))
    } else if m.cols() == 1 {
        Ok(m.col(0))
    } else {
        Err(Error::Precondition(format!(
            "expected a vector (one row or one column), found a {}x{} matrix",
            m.rows(),
            m.cols()
        )))
    }
}

/// Canonical text for a matrix: entries space-separated, one row per
/// line, trailing newline. Parsing it back reproduces the matrix.
pub fn canonical_matrix_text(m: &Matrix) -> String {
    let mut out = String::new();
    for i in 0..m.rows() {
        let row: Vec<String> = (0..m.cols()).map(|j| m[(i, j)].to_string()).collect();
        out.push_str(&row.join(" "));
        out.push('\n');
    }
    out
}

/// Canonical text for a vector: a single row.
pub fn canonical_vector_text(v: &Vector) -> String {
    let row: Vec<String> = v.iter().map(|e| e.to_string()).collect();
    let mut out = row.join(" ");
    out.push('\n');
    out
}

fn digest(parts: &[String]) -> String {
    let mut hasher = Sha256::new();
    for (i, part) in parts.iter().enumerate() {
        if i > 0 {
            hasher.update([0u8]);
        }
        hasher.update(part.as_bytes());
    }
    let bytes = hasher.finalize();
    let mut hex = String::with_capacity(bytes.len() * 2);
    for b in bytes {
        use std::fmt::Write;
        write!(hex, "{b:02x}").expect("writing to a string");
    }
    hex
}

/// Outcome of the plain (unsigned) solve: a canonical solution of
/// `A x = b`, or a dependency row `u` with `u^T A = 0` and `u^T b != 0`
/// witnessing that `b` is outside the range.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(tag = "outcome", rename_all = "snake_case")]
pub enum SolveOutcome {
    Solution { x: Vector },
    NoSolution { witness: Vector },
}

/// Versioned machine-readable result of one command invocation.
///
/// Exactly one of the optional sections is populated, matching the
/// subcommand. Serialization round-trips exactly.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Report {
    pub schema_version: String,
    pub command: String,
    pub input_digest: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub analysis: Option<MonotonicityReport>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub certificate: Option<FarkasCertificate>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub solve: Option<SolveOutcome>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub sandwich: Option<SandwichOutcome>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub decomposition: Option<QapDecomposition>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub rays: Option<RayList>,
}

impl Report {
    fn new(command: &str, input_digest: String) -> Self {
        Report {
            schema_version: SCHEMA_VERSION.to_string(),
            command: command.to_string(),
            input_digest,
            analysis: None,
            certificate: None,
            solve: None,
            sandwich: None,
            decomposition: None,
            rays: None,
        }
    }

    /// 0 affirmative, 1 certified negative.
    pub fn exit_code(&self) -> i32 {
        if let Some(c) = &self.certificate {
            return if c.is_primal() { 0 } else { 1 };
        }
        if let Some(s) = &self.solve {
            return match s {
                SolveOutcome::Solution { .. } => 0,
                SolveOutcome::NoSolution { .. } => 1,
            };
        }
        if let Some(s) = &self.sandwich {
            return match s {
                SandwichOutcome::Solution(_) => 0,
                SandwichOutcome::Failure { .. } => 1,
            };
        }
        0
    }
}

pub fn cmd_analyze(a: &Matrix) -> Report {
    let mut report = Report::new("analyze", digest(&[canonical_matrix_text(a)]));
    report.analysis = Some(analyze(a));
    report
}

pub fn cmd_solve(a: &Matrix, b: &Vector, nonneg: bool) -> Result<Report, Error> {
    if b.dim() != a.rows() {
        return Err(Error::Dim {
            context: "right-hand side",
            expected: a.rows(),
            found: b.dim(),
        });
    }
    let inputs = [canonical_matrix_text(a), canonical_vector_text(b)];
    if nonneg {
        let mut report = Report::new("solve --nonneg", digest(&inputs));
        report.certificate = Some(solve_nonneg(a, b)?);
        Ok(report)
    } else {
        let mut report = Report::new("solve", digest(&inputs));
        let dec = qap_decompose(a);
        report.solve = Some(match dec.solve(b) {
            Some(x) => SolveOutcome::Solution { x },
            None => {
                let witness = left_nullspace_basis(a)
                    .into_iter()
                    .find(|u| !u.dot(b).is_zero())
                    .expect("unsolvable system violates a dependency row");
                SolveOutcome::NoSolution { witness }
            }
        });
        Ok(report)
    }
}

pub fn cmd_sandwich(a: &Matrix, y0: &Vector, y: &Vector, y1: &Vector) -> Result<Report, Error> {
    let inputs = [
        canonical_matrix_text(a),
        canonical_vector_text(y0),
        canonical_vector_text(y),
        canonical_vector_text(y1),
    ];
    let mut report = Report::new("sandwich", digest(&inputs));
    report.sandwich = Some(sandwich_preimages(a, y0, y, y1)?);
    Ok(report)
}

pub fn cmd_decompose(a: &Matrix) -> Report {
    let mut report = Report::new("decompose", digest(&[canonical_matrix_text(a)]));
    report.decomposition = Some(qap_decompose(a));
    report
}

pub fn cmd_rays(a: &Matrix) -> Report {
    let mut report = Report::new("rays", digest(&[canonical_matrix_text(a)]));
    report.rays = Some(range_orthant_rays(a));
    report
}

fn indented(m: &Matrix) -> String {
    let mut out = String::new();
    for i in 0..m.rows() {
        out.push_str("  ");
        out.push_str(&m.row(i).to_string());
        out.push('\n');
    }
    out
}

/// Plain-text rendering of a report.
pub fn render_human(report: &Report) -> String {
    let mut out = String::new();
    if let Some(a) = &report.analysis {
        out.push_str(&format!(
            "rank: {}\nfull rank: {}\nmonotone: {}\nweakly monotone: {}\nmethod: {}\n",
            a.rank, a.full_rank, a.monotone, a.weakly_monotone, a.method
        ));
        if let Some(b) = &a.left_inverse {
            out.push_str("nonnegative left inverse:\n");
            out.push_str(&indented(b));
        }
        if let Some(b) = &a.right_inverse {
            out.push_str("nonnegative right inverse:\n");
            out.push_str(&indented(b));
        }
        if let Some(x) = &a.counterexample_monotone {
            out.push_str(&format!("monotonicity counterexample: {x}\n"));
        }
        if let Some(ce) = &a.counterexample_weak {
            out.push_str(&format!("weak counterexample b: {}\n", ce.b));
            if let FarkasCertificate::Dual { y } = &ce.dual {
                out.push_str(&format!("  infeasibility witness y: {y}\n"));
            }
        }
    }
    if let Some(c) = &report.certificate {
        match c {
            FarkasCertificate::Primal { x } => {
                out.push_str(&format!("feasible: yes\nx: {x}\n"));
            }
            FarkasCertificate::Dual { y } => {
                out.push_str(&format!(
                    "feasible: no\ninfeasibility witness y: {y}  (y'A >= 0, y'b < 0)\n"
                ));
            }
        }
    }
    if let Some(s) = &report.solve {
        match s {
            SolveOutcome::Solution { x } => {
                out.push_str(&format!("solvable: yes\nx: {x}\n"));
            }
            SolveOutcome::NoSolution { witness } => {
                out.push_str(&format!(
                    "solvable: no\ndependency row u: {witness}  (u'A = 0, u'b != 0)\n"
                ));
            }
        }
    }
    if let Some(s) = &report.sandwich {
        match s {
            SandwichOutcome::Solution(t) => {
                out.push_str(&format!("x0: {}\nx:  {}\nx1: {}\n", t.x0, t.x, t.x1));
            }
            SandwichOutcome::Failure { step, dual } => {
                out.push_str(&format!("failed at step: {step}\n"));
                if let FarkasCertificate::Dual { y } = dual {
                    out.push_str(&format!("infeasibility witness y: {y}\n"));
                }
            }
        }
    }
    if let Some(d) = &report.decomposition {
        out.push_str(&format!("rank: {}\nq:\n", d.rank));
        out.push_str(&indented(&d.q));
        out.push_str("p:\n");
        out.push_str(&indented(&d.p));
        match &d.s {
            Some(s) => {
                out.push_str("s:\n");
                out.push_str(&indented(s));
            }
            None => out.push_str("s: (empty)\n"),
        }
    }
    if let Some(r) = &report.rays {
        out.push_str(&format!("ambient dimension: {}\n", r.ambient_dim));
        if r.rays.is_empty() {
            out.push_str("no rays (the cone is the origin)\n");
        } else {
            for ray in &r.rays {
                out.push_str(&format!("ray: {ray}\n"));
            }
        }
    }
    out
}

#[derive(Parser)]
#[command(
    name = "monotone",
    version,
    about = "Monotonicity analysis, solvability certificates, and ordered preimages for rational matrices"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Decide monotone and weakly monotone, with certificates
    Analyze {
        matrix: PathBuf,
        #[arg(long)]
        json: bool,
    },
    /// Solve A x = b; with --nonneg, decide x >= 0 with a certificate
    Solve {
        matrix: PathBuf,
        rhs: PathBuf,
        #[arg(long)]
        nonneg: bool,
        #[arg(long)]
        json: bool,
    },
    /// Ordered preimages x0 <= x <= x1 for y0 <= y <= y1
    Sandwich {
        matrix: PathBuf,
        y0: PathBuf,
        y: PathBuf,
        y1: PathBuf,
        #[arg(long)]
        json: bool,
    },
    /// Q A P = [I S; 0 0] decomposition
    Decompose {
        matrix: PathBuf,
        #[arg(long)]
        json: bool,
    },
    /// Extreme rays of range(A) intersected with the nonnegative orthant
    Rays {
        matrix: PathBuf,
        #[arg(long)]
        json: bool,
    },
}

fn read(path: &Path) -> Result<String, Error> {
    fs::read_to_string(path).map_err(|source| Error::File {
        path: path.display().to_string(),
        source,
    })
}

fn read_matrix(path: &Path) -> Result<Matrix, Error> {
    parse_matrix(&read(path)?)
}

fn read_vector(path: &Path) -> Result<Vector, Error> {
    parse_vector(&read(path)?)
}

fn dispatch(command: Command) -> Result<(Report, bool), Error> {
    Ok(match command {
        Command::Analyze { matrix, json } => (cmd_analyze(&read_matrix(&matrix)?), json),
        Command::Solve {
            matrix,
            rhs,
            nonneg,
            json,
        } => (
            cmd_solve(&read_matrix(&matrix)?, &read_vector(&rhs)?, nonneg)?,
            json,
        ),
        Command::Sandwich {
            matrix,
            y0,
            y,
            y1,
            json,
        } => (
            cmd_sandwich(
                &read_matrix(&matrix)?,
                &read_vector(&y0)?,
                &read_vector(&y)?,
                &read_vector(&y1)?,
            )?,
            json,
        ),
        Command::Decompose { matrix, json } => (cmd_decompose(&read_matrix(&matrix)?), json),
        Command::Rays { matrix, json } => (cmd_rays(&read_matrix(&matrix)?), json),
    })
}

/// Runs the CLI on the given arguments, printing to stdout/stderr, and
/// returns the process exit code.
pub fn run<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return e.exit_code();
        }
    };
    match dispatch(cli.command) {
        Ok((report, json)) => {
            if json {
                println!(
                    "{}",
                    serde_json::to_string_pretty(&report).expect("report serialization")
                );
            } else {
                print!("{}", render_human(&report));
            }
            report.exit_code()
        }
        Err(e) => {
            eprintln!("error: {e}");
            2
        }
    }
}
