//! Command-line surface over the charpleth library.
//!
//! Exit codes: 0 success, 2 parse error, 3 validation failure,
//! 4 domain error, 5 verification-suite mismatch.

use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::sync::Arc;

use clap::{Parser, Subcommand};

use charpleth::analysis::{decompose, frobenius_schur_value};
use charpleth::chartab::{
    fusion_from_json, norm, table_from_json, table_to_json, CharacterTable, ClassFunction,
};
use charpleth::error::Error;
use charpleth::plethysm::{ext_power, schur_functor, sym_power, Partition};
use charpleth::suites::{run_suite, CheckStatus, SuiteName, SuiteResult};
use charpleth::tablegen::{cyclic_table, extraspecial_table, ExtraspecialVariant};

#[derive(Parser)]
#[command(
    name = "charpleth",
    about = "Exact character arithmetic: plethysms, indicators, and dimension bound suites",
    version
)]
struct Cli {
    /// Worker threads for the data-parallel loops (default: all cores)
    #[arg(long, global = true)]
    jobs: Option<usize>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Check every table invariant of a JSON character table
    Validate { table: PathBuf },
    /// Multiplicities of a character against the irreducibles
    Decompose { table: PathBuf, char_index: usize },
    /// Symmetric power of the chosen character
    Sym { table: PathBuf, char_index: usize, k: u64 },
    /// Exterior power of the chosen character
    Ext { table: PathBuf, char_index: usize, k: u64 },
    /// Schur functor for a partition such as 2,1
    Schur { table: PathBuf, char_index: usize, partition: String },
    /// Frobenius-Schur indicator of the chosen character
    Fs { table: PathBuf, char_index: usize },
    /// Restrict a character of the overgroup along a fusion file
    Restrict {
        fusion: PathBuf,
        subgroup_table: PathBuf,
        overgroup_table: PathBuf,
        char_index: usize,
    },
    /// Induce a character of the subgroup along a fusion file
    Induce {
        fusion: PathBuf,
        subgroup_table: PathBuf,
        overgroup_table: PathBuf,
        char_index: usize,
    },
    /// Emit the character table of the cyclic group Z_n as JSON
    GenCyclic { n: u64 },
    /// Emit the character table of an extraspecial group p^(1+2n) as JSON
    GenExtraspecial {
        p: u64,
        n: usize,
        /// odd_exponent_p, even_plus, or even_minus
        variant: String,
    },
    /// Run a named verification suite over the bundled fixtures
    VerifyPaper {
        /// lowdim-sl25, weil-sp43, extraspecial, generic, windows,
        /// spin-dims, traceless, 2j2, or all
        #[arg(long)]
        suite: String,
        /// Optional extra table (the imported double cover of J2)
        #[arg(long)]
        table: Option<PathBuf>,
        /// Machine-readable JSON output
        #[arg(long)]
        json: bool,
    },
}

fn exit_code_for(err: &Error) -> u8 {
    match err {
        Error::Parse(_) => 2,
        Error::Validation(_) => 3,
        Error::Domain(_) => 4,
    }
}

fn read_file(path: &Path) -> Result<String, Error> {
    std::fs::read_to_string(path)
        .map_err(|e| Error::parse(format!("cannot read {}: {}", path.display(), e)))
}

/// Loads and fully validates a table; everything downstream may assume
/// orthogonality.
fn load_table(path: &Path) -> Result<Arc<CharacterTable>, Error> {
    let table = table_from_json(&read_file(path)?)?;
    table.validate().into_result(&table.name)?;
    Ok(table)
}

fn pick_character(table: &Arc<CharacterTable>, index: usize) -> Result<ClassFunction, Error> {
    if index >= table.irreducible_count() {
        return Err(Error::domain(format!(
            "character index {} out of range (table has {})",
            index,
            table.irreducible_count()
        )));
    }
    Ok(ClassFunction::irreducible(table, index))
}

fn print_class_function(table: &Arc<CharacterTable>, f: &ClassFunction) -> Result<(), Error> {
    println!("degree {}", f.degree());
    println!("norm {}", norm(f)?);
    let values: Vec<String> = f.values().iter().map(|v| v.to_string()).collect();
    println!("values [{}]", values.join(", "));
    match decompose(f) {
        Ok(d) => {
            let ms: Vec<String> = d.multiplicities.iter().map(|m| m.to_string()).collect();
            println!("decomposition [{}]", ms.join(", "));
            let named: Vec<String> = d
                .support()
                .iter()
                .map(|&i| {
                    format!(
                        "{}*chi_{}(deg {})",
                        d.multiplicities[i],
                        i,
                        table.irreducible_values(i)[0]
                    )
                })
                .collect();
            println!(
                "constituents {}",
                if named.is_empty() { "0".to_string() } else { named.join(" + ") }
            );
        }
        Err(_) => println!("decomposition not integral (not a virtual character)"),
    }
    Ok(())
}

fn print_suites(results: &[SuiteResult], json: bool) -> Result<bool, Error> {
    if json {
        println!(
            "{}",
            serde_json::to_string_pretty(results)
                .map_err(|e| Error::domain(format!("serialize results: {}", e)))?
        );
    } else {
        for suite in results {
            println!("suite {}", suite.suite);
            for check in &suite.checks {
                let tag = match check.status {
                    CheckStatus::Pass => "PASS",
                    CheckStatus::Fail => "FAIL",
                    CheckStatus::Skip => "SKIP",
                };
                if check.detail.is_empty() {
                    println!("  [{}] {}", tag, check.label);
                } else {
                    println!("  [{}] {} -- {}", tag, check.label, check.detail);
                }
            }
        }
    }
    Ok(results.iter().all(|s| s.passed()))
}

/// Sentinel threaded through the error type so `main` can map a failing
/// suite to its dedicated exit code.
const SUITE_MISMATCH: &str = "__suite_mismatch__";

fn run(cli: Cli) -> Result<(), Error> {
    if let Some(jobs) = cli.jobs {
        // only the first initialization can win; later calls are no-ops
        let _ = charpleth::configure_threads(jobs.max(1));
    }
    match cli.command {
        Command::Validate { table } => {
            let parsed = table_from_json(&read_file(&table)?)?;
            let report = parsed.validate();
            if report.is_pass() {
                println!(
                    "table {} valid: order {}, {} classes",
                    parsed.name,
                    parsed.group_order,
                    parsed.class_count()
                );
                Ok(())
            } else {
                for v in &report.violations {
                    println!("violation: {}", v);
                }
                Err(Error::validation(format!(
                    "table {}: {} violated relation(s)",
                    parsed.name,
                    report.violations.len()
                )))
            }
        }
        Command::Decompose { table, char_index } => {
            let t = load_table(&table)?;
            let f = pick_character(&t, char_index)?;
            print_class_function(&t, &f)
        }
        Command::Sym { table, char_index, k } => {
            let t = load_table(&table)?;
            let f = pick_character(&t, char_index)?;
            print_class_function(&t, &sym_power(&f, k)?)
        }
        Command::Ext { table, char_index, k } => {
            let t = load_table(&table)?;
            let f = pick_character(&t, char_index)?;
            print_class_function(&t, &ext_power(&f, k)?)
        }
        Command::Schur { table, char_index, partition } => {
            let t = load_table(&table)?;
            let f = pick_character(&t, char_index)?;
            let lambda = Partition::parse(&partition)?;
            print_class_function(&t, &schur_functor(&f, &lambda)?)
        }
        Command::Fs { table, char_index } => {
            let t = load_table(&table)?;
            let f = pick_character(&t, char_index)?;
            println!("{}", frobenius_schur_value(&f)?);
            Ok(())
        }
        Command::Restrict { fusion, subgroup_table, overgroup_table, char_index } => {
            let sub = load_table(&subgroup_table)?;
            let over = load_table(&overgroup_table)?;
            let fus = fusion_from_json(&read_file(&fusion)?, sub.clone(), over.clone())?;
            let f = pick_character(&over, char_index)?;
            print_class_function(&sub, &charpleth::chartab::restrict(&fus, &f)?)
        }
        Command::Induce { fusion, subgroup_table, overgroup_table, char_index } => {
            let sub = load_table(&subgroup_table)?;
            let over = load_table(&overgroup_table)?;
            let fus = fusion_from_json(&read_file(&fusion)?, sub.clone(), over.clone())?;
            let f = pick_character(&sub, char_index)?;
            print_class_function(&over, &charpleth::chartab::induce(&fus, &f)?)
        }
        Command::GenCyclic { n } => {
            let t = cyclic_table(n)?;
            println!("{}", table_to_json(&t));
            Ok(())
        }
        Command::GenExtraspecial { p, n, variant } => {
            let v = ExtraspecialVariant::parse(&variant)?;
            let t = extraspecial_table(p, n, v)?;
            println!("{}", table_to_json(&t));
            Ok(())
        }
        Command::VerifyPaper { suite, table, json } => {
            let name = SuiteName::parse(&suite)?;
            let extra = match table {
                Some(path) => Some(load_table(&path)?),
                None => None,
            };
            let results = run_suite(name, extra.as_ref())?;
            if print_suites(&results, json)? {
                Ok(())
            } else {
                Err(Error::Domain(SUITE_MISMATCH.into()))
            }
        }
    }
}

fn main() -> ExitCode {
    // die quietly when the consumer closes the pipe (e.g. | head)
    #[cfg(unix)]
    unsafe {
        libc::signal(libc::SIGPIPE, libc::SIG_DFL);
    }
    let cli = Cli::parse();
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(Error::Domain(msg)) if msg == SUITE_MISMATCH => {
            eprintln!("error: verification suite reported failures");
            ExitCode::from(5)
        }
        Err(err) => {
            eprintln!("error: {}", err);
            ExitCode::from(exit_code_for(&err))
        }
    }
}
