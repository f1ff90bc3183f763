//! The `primfix` command line.
//!
//! Every verb builds its complete output in memory; files and standard
//! output are written only once the computation has succeeded. Exit codes:
//! 0 success, 1 usage or input error, 2 budget exhausted, 3 a verification
//! check reported `FAIL` or `DISCREPANCY`.

use std::ffi::OsString;
use std::fmt::Write as _;
use std::fs;
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand};

use crate::digraph::Digraph;
use crate::families::{FamilyDescriptor, JSet};
use crate::fixity::{self, Limits};
use crate::geometry::{self, SrgRow};
use crate::permgroup::{parse_group, wreath_product_action, write_group, DEFAULT_CAP};
use crate::rational::render;
use crate::report::Status;
use crate::{Error, Result};

pub const EXIT_OK: i32 = 0;
pub const EXIT_USAGE: i32 = 1;
pub const EXIT_BUDGET: i32 = 2;
pub const EXIT_CHECK_FAILED: i32 = 3;

#[derive(Parser, Debug)]
#[command(name = "primfix", version, about = "Fixity of vertex-primitive digraphs")]
struct Cli {
    /// Largest group materialized element by element.
    #[arg(long, global = true, default_value_t = DEFAULT_CAP)]
    element_cap: usize,
    /// Wall-clock limit for each automorphism or isomorphism search.
    #[arg(long, global = true)]
    search_budget_ms: Option<u64>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Build a family member and write it in digraph text format.
    Construct(ConstructArgs),
    /// Automorphism group of a digraph file (order and generators).
    Aut { file: PathBuf },
    /// Exact fixity of a digraph file by brute force.
    Fixity {
        file: PathBuf,
        /// Also print a witness automorphism in cycle notation.
        #[arg(long)]
        witness: bool,
    },
    /// Write one digraph file per orbital of a group.
    Orbitals {
        #[arg(long)]
        group: PathBuf,
        #[arg(short, long)]
        out_dir: PathBuf,
    },
    /// Product action of `inner wr top`, written as a group file.
    Wreath {
        #[arg(long)]
        inner: PathBuf,
        #[arg(long)]
        top: PathBuf,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Index-set queries.
    Jset {
        #[command(subcommand)]
        command: JsetCommand,
    },
    /// Compare computed values with the closed forms and the table.
    Verify {
        #[command(subcommand)]
        command: VerifyCommand,
    },
    /// Primitivity, relative fixity and family of a digraph file.
    Classify { file: PathBuf },
    /// Printed parameters of a table row as CSV.
    Catalog {
        #[arg(long, value_parser = parse_row)]
        row: Option<SrgRow>,
        #[arg(long)]
        m: Option<usize>,
    },
    /// Valency against ln n as the arity ranges over `a..b` (inclusive).
    GrowthReport {
        #[arg(long)]
        family: String,
        #[arg(long, value_parser = parse_range)]
        range: (usize, usize),
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
}

#[derive(Args, Debug)]
struct ConstructArgs {
    #[command(subcommand)]
    family: ConstructFamily,
    #[arg(short, long, global = true)]
    output: Option<PathBuf>,
}

#[derive(Subcommand, Debug)]
enum ConstructFamily {
    /// `J(m, k, i)`.
    Johnson {
        #[arg(long)]
        m: usize,
        #[arg(long)]
        k: usize,
        #[arg(long)]
        i: usize,
    },
    /// `QJ(2m, m, i)`.
    Squashed {
        #[arg(long)]
        m: usize,
        #[arg(long)]
        i: usize,
    },
    /// `H(r, m)`.
    Hamming {
        #[arg(long)]
        r: usize,
        #[arg(long)]
        m: usize,
    },
    /// A table-row graph.
    Srg {
        #[arg(long, value_parser = parse_row)]
        row: SrgRow,
        #[arg(long)]
        m: usize,
    },
    /// Any family member, e.g. `johnson:r=2,m=6,k=2,j=11`.
    Spec { spec: String },
}

#[derive(Subcommand, Debug)]
enum JsetCommand {
    /// Homogeneity, Hamming core and stabilizer order.
    Check { file: PathBuf },
}

#[derive(Subcommand, Debug)]
enum VerifyCommand {
    /// A table row: constructed `v, d, λ, μ` and relative fixity.
    Table1 {
        #[arg(long, value_parser = parse_row)]
        row: SrgRow,
        #[arg(long)]
        m: Option<usize>,
    },
    /// Brute-force relative fixity of family members against the closed forms.
    Family {
        #[arg(required = true)]
        specs: Vec<String>,
        #[arg(long)]
        csv: Option<PathBuf>,
    },
}

fn parse_row(s: &str) -> std::result::Result<SrgRow, String> {
    s.parse().map_err(|e: Error| e.to_string())
}

fn parse_range(s: &str) -> std::result::Result<(usize, usize), String> {
    let (a, b) = s
        .split_once("..=")
        .or_else(|| s.split_once(".."))
        .ok_or_else(|| format!("expected a..b, got {s:?}"))?;
    let num = |t: &str| t.trim().parse::<usize>().map_err(|_| format!("bad bound {t:?}"));
    let (a, b) = (num(a)?, num(b)?);
    if a == 0 || a > b {
        return Err(format!("need 1 ≤ a ≤ b, got {s:?}"));
    }
    Ok((a, b))
}

/// What a verb produced: text for standard output, files to write, and an
/// exit code.
#[derive(Default)]
struct Output {
    stdout: String,
    files: Vec<(PathBuf, String)>,
    code: i32,
}

impl Output {
    fn emit(self, target: Option<PathBuf>, text: String) -> Self {
        let mut out = self;
        match target {
            Some(path) => out.files.push((path, text)),
            None => out.stdout.push_str(&text),
        }
        out
    }
}

fn read(path: &Path) -> Result<String> {
    Ok(fs::read_to_string(path)?)
}

fn read_digraph(path: &Path) -> Result<Digraph> {
    Digraph::from_text(&read(path)?)
}

/// Writes through a sibling temporary file and a rename.
fn write_atomic(path: &Path, text: &str) -> Result<()> {
    let mut tmp = path.as_os_str().to_owned();
    tmp.push(".tmp");
    fs::write(&tmp, text)?;
    fs::rename(&tmp, path)?;
    Ok(())
}

fn exit_code_for(e: &Error) -> i32 {
    if e.is_budget() {
        EXIT_BUDGET
    } else {
        EXIT_USAGE
    }
}

/// Parses `argv` (program name first), runs the verb and returns the exit
/// code. Diagnostics go to standard error.
pub fn run<I, T>(argv: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
        }
    };
    let limits = Limits {
        element_cap: cli.element_cap,
        search_ms: cli.search_budget_ms,
    };
    let result = execute(cli.command, &limits).and_then(|out| {
        for (path, text) in &out.files {
            write_atomic(path, text)?;
        }
        Ok(out)
    });
    match result {
        Ok(out) => {
            print!("{}", out.stdout);
            out.code
        }
        Err(e) => {
            eprintln!("primfix: {e}");
            exit_code_for(&e)
        }
    }
}

fn execute(command: Command, limits: &Limits) -> Result<Output> {
    match command {
        Command::Construct(args) => {
            let graph = match args.family {
                ConstructFamily::Johnson { m, k, i } => crate::families::johnson(m, k, i)?,
                ConstructFamily::Squashed { m, i } => crate::families::squashed_johnson(2 * m, m, i)?,
                ConstructFamily::Hamming { r, m } => crate::families::hamming(r, m)?,
                ConstructFamily::Srg { row, m } => geometry::construct_row(row, m)?.graph,
                ConstructFamily::Spec { spec } => spec.parse::<FamilyDescriptor>()?.construct()?,
            };
            Ok(Output::default().emit(args.output, graph.to_text()))
        }
        Command::Aut { file } => {
            let graph = read_digraph(&file)?;
            let aut = limits.search().automorphisms(&graph)?;
            let mut text = format!("# order {}\n", aut.order);
            text.push_str(&write_group(&aut.group));
            Ok(Output::default().emit(None, text))
        }
        Command::Fixity { file, witness } => {
            let graph = read_digraph(&file)?;
            let report = fixity::fixity_brute(&graph, limits)?;
            let mut text = format!("{report}\n");
            if let (true, Some(w)) = (witness, &report.witness) {
                let cycles: Vec<String> = w
                    .cycles()
                    .iter()
                    .map(|c| {
                        let pts: Vec<String> = c.iter().map(usize::to_string).collect();
                        format!("({})", pts.join(" "))
                    })
                    .collect();
                let _ = writeln!(text, "witness {}", cycles.join(""));
            }
            Ok(Output::default().emit(None, text))
        }
        Command::Orbitals { group, out_dir } => {
            let group = parse_group(&read(&group)?)?;
            let orbitals = group.orbitals()?;
            let mut out = Output::default();
            let width = orbitals.len().to_string().len();
            for (i, orb) in orbitals.iter().enumerate() {
                let path = out_dir.join(format!("orbital-{i:0width$}.dg"));
                let kind = if orb.is_diagonal() {
                    " diagonal"
                } else if orb.is_self_paired() {
                    " self-paired"
                } else {
                    ""
                };
                let _ = writeln!(out.stdout, "{} arcs={}{kind}", path.display(), orb.len());
                out.files.push((path, Digraph::from_orbital(orb).to_text()));
            }
            Ok(out)
        }
        Command::Wreath { inner, top, output } => {
            let inner = parse_group(&read(&inner)?)?;
            let top = parse_group(&read(&top)?)?;
            let action = wreath_product_action(&inner, &top)?;
            Ok(Output::default().emit(output, write_group(action.group())))
        }
        Command::Jset {
            command: JsetCommand::Check { file },
        } => {
            let jset = JSet::from_text(&read(&file)?)?;
            let homogeneous = jset.is_homogeneous()?;
            let core = if homogeneous { jset.hamming_core()? } else { None };
            let stab = jset.stabilizer()?.order(limits.element_cap)?;
            let yes = |b: bool| if b { "yes" } else { "no" };
            let mut text = format!(
                "r={} k={} size={} stabilizer_order={stab} homogeneous={} hamming={}",
                jset.arity(),
                jset.max_index(),
                jset.len(),
                yes(homogeneous),
                yes(core.is_some())
            );
            if let Some((a, b)) = core {
                let _ = write!(text, " core=({a},{b})");
            }
            text.push('\n');
            Ok(Output::default().emit(None, text))
        }
        Command::Verify {
            command: VerifyCommand::Table1 { row, m },
        } => {
            let records = fixity::verify_table1(row, m.unwrap_or(row.min_m()), limits)?;
            let mut out = Output::default();
            for rec in &records {
                let _ = writeln!(out.stdout, "{rec}");
            }
            out.code = if records.iter().any(|r| r.status.is_failure()) {
                EXIT_CHECK_FAILED
            } else if records.iter().any(|r| r.status == Status::Skipped) {
                EXIT_BUDGET
            } else {
                EXIT_OK
            };
            Ok(out)
        }
        Command::Verify {
            command: VerifyCommand::Family { specs, csv },
        } => {
            let families = specs
                .iter()
                .map(|s| s.parse::<FamilyDescriptor>())
                .collect::<Result<Vec<_>>>()?;
            let records = fixity::verify_batch(&families, limits);
            let mut out = Output::default();
            for rec in &records {
                let opt = |x: &Option<crate::rational::Rational>| x.as_ref().map_or("-".into(), render);
                let _ = write!(
                    out.stdout,
                    "{} {} brute={} formula={}",
                    rec.status,
                    rec.family,
                    opt(&rec.brute),
                    opt(&rec.formula)
                );
                if !rec.note.is_empty() {
                    let _ = write!(out.stdout, " ({})", rec.note);
                }
                out.stdout.push('\n');
            }
            if let Some(path) = csv {
                out.files.push((path, fixity::verification_csv(&records)?));
            }
            out.code = if records.iter().any(|r| r.status.is_failure()) {
                EXIT_CHECK_FAILED
            } else if records.iter().any(|r| r.status == Status::Skipped) {
                EXIT_BUDGET
            } else {
                EXIT_OK
            };
            Ok(out)
        }
        Command::Classify { file } => {
            let graph = read_digraph(&file)?;
            let result = fixity::classify(&graph, limits)?;
            Ok(Output::default().emit(None, format!("{result}\n")))
        }
        Command::Catalog { row, m } => {
            let rows: Vec<SrgRow> = row.map_or_else(|| SrgRow::ALL.to_vec(), |r| vec![r]);
            let entries = rows
                .iter()
                .map(|&r| geometry::srg_catalog(r, m.unwrap_or(r.min_m())))
                .collect::<Result<Vec<_>>>()?;
            Ok(Output::default().emit(None, geometry::catalog_csv(&entries)?))
        }
        Command::GrowthReport {
            family,
            range: (a, b),
            output,
        } => {
            let base: FamilyDescriptor = family.parse()?;
            let specs = (a..=b)
                .map(|r| {
                    let jset = JSet::unit_vectors_over(r, base.max_index())?;
                    FamilyDescriptor::new(base.family, r, base.m, jset)
                })
                .collect::<Result<Vec<_>>>()?;
            let rows = fixity::growth_report(&specs)?;
            Ok(Output::default().emit(output, fixity::growth_csv(&rows)?))
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn ranges() {
        assert_eq!(parse_range("1..4"), Ok((1, 4)));
        assert_eq!(parse_range("2..=3"), Ok((2, 3)));
        assert!(parse_range("4..1").is_err());
        assert!(parse_range("0..2").is_err());
        assert!(parse_range("3").is_err());
    }

    #[test]
    fn usage_errors() {
        assert_eq!(run(["primfix", "frobnicate"]), EXIT_USAGE);
        assert_eq!(run(["primfix", "construct", "johnson", "--m", "6"]), EXIT_USAGE);
        assert_eq!(run(["primfix", "catalog", "--row", "ix"]), EXIT_USAGE);
        assert_eq!(run(["primfix", "--help"]), EXIT_OK);
    }

    #[test]
    fn budget_exit_code() {
        assert_eq!(exit_code_for(&Error::SearchBudgetExceeded), EXIT_BUDGET);
        assert_eq!(exit_code_for(&Error::RigidGraph), EXIT_USAGE);
    }
}
