//! Command-line driver. `main` forwards to [`run_cli`] so the whole front end
//! can be exercised in-process.

use std::ffi::OsString;
use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand};

use crate::analysis::{compute_stats, decode, CodeStats};
use crate::engine::{clbc_run_with, ClbcOptions, ClbcResult};
use crate::error::Error;
use crate::format::{parse_matrix, OutputDocument};
use crate::matrix::GF2Matrix;
use crate::oracle::{enumerate_cosets, min_distance, verify, OracleConfig};
use crate::word::{BinaryWord, OrderSpec};

pub const EXIT_OK: i32 = 0;
pub const EXIT_USAGE: i32 = 1;
pub const EXIT_CAP: i32 = 2;
pub const EXIT_DISCREPANCY: i32 = 3;

#[derive(Debug, Parser)]
#[command(name = "clbc", version, about = "Coset leaders of binary linear codes")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Enumerate all coset leaders and print the coset table with statistics.
    Leaders {
        #[arg(short = 'H', long = "matrix")]
        matrix: PathBuf,
        /// Also write the machine-readable document to this path.
        #[arg(long)]
        json: Option<PathBuf>,
        /// Skip Matphi; leaders only.
        #[arg(long)]
        no_matphi: bool,
    },
    /// Print code statistics.
    Stats {
        #[arg(short = 'H', long = "matrix")]
        matrix: PathBuf,
        /// Compute the minimum distance by enumeration and report d, t and ball cosets.
        #[arg(long)]
        with_d: bool,
    },
    /// Print every nearest codeword of a received word.
    Decode {
        #[arg(short = 'H', long = "matrix")]
        matrix: PathBuf,
        #[arg(short = 'y')]
        word: String,
    },
    /// Print the Matphi table.
    Matphi {
        #[arg(short = 'H', long = "matrix")]
        matrix: PathBuf,
        #[arg(long)]
        json: Option<PathBuf>,
    },
    /// Brute-force coset table.
    Oracle {
        #[arg(short = 'H', long = "matrix")]
        matrix: PathBuf,
    },
    /// Compare the enumeration with the brute-force table.
    Verify {
        #[arg(short = 'H', long = "matrix")]
        matrix: PathBuf,
    },
}

enum Failure {
    Usage(String),
    Lib(Error),
    Discrepancies(usize),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Lib(e)
    }
}

impl From<std::io::Error> for Failure {
    fn from(e: std::io::Error) -> Self {
        Failure::Usage(e.to_string())
    }
}

type CliResult = Result<(), Failure>;

/// Runs the CLI on `args` (including the program name) and returns the exit code.
pub fn run_cli<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            use clap::error::ErrorKind;
            return match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => {
                    let _ = write!(out, "{}", e);
                    EXIT_OK
                }
                _ => {
                    let _ = write!(err, "{}", e);
                    EXIT_USAGE
                }
            };
        }
    };
    let cfg = OracleConfig::from_env();
    let res = match cli.command {
        Command::Leaders {
            matrix,
            json,
            no_matphi,
        } => cmd_leaders(&matrix, json.as_deref(), !no_matphi, out),
        Command::Stats { matrix, with_d } => cmd_stats(&matrix, with_d, &cfg, out),
        Command::Decode { matrix, word } => cmd_decode(&matrix, &word, out),
        Command::Matphi { matrix, json } => cmd_matphi(&matrix, json.as_deref(), out),
        Command::Oracle { matrix } => cmd_oracle(&matrix, &cfg, out),
        Command::Verify { matrix } => cmd_verify(&matrix, &cfg, out),
    };
    match res {
        Ok(()) => EXIT_OK,
        Err(Failure::Usage(msg)) => {
            let _ = writeln!(err, "error: {}", msg);
            EXIT_USAGE
        }
        Err(Failure::Lib(e @ Error::CapExceeded { .. })) => {
            let _ = writeln!(
                err,
                "error: {} (raise {} to allow it)",
                e,
                crate::oracle::CAP_ENV
            );
            EXIT_CAP
        }
        Err(Failure::Lib(e)) => {
            let _ = writeln!(err, "error: {}", e);
            EXIT_USAGE
        }
        Err(Failure::Discrepancies(n)) => {
            let _ = writeln!(err, "verification failed: {} discrepancies", n);
            EXIT_DISCREPANCY
        }
    }
}

fn load(path: &Path) -> Result<GF2Matrix, Failure> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| Failure::Usage(format!("{}: {}", path.display(), e)))?;
    parse_matrix(&text).map_err(|e| Failure::Usage(format!("{}: {}", path.display(), e)))
}

fn run(h: &GF2Matrix, compute_matphi: bool) -> Result<ClbcResult, Failure> {
    Ok(clbc_run_with(
        h,
        &OrderSpec::new(h.ncols()),
        ClbcOptions { compute_matphi },
    )?)
}

fn list(xs: &[usize]) -> String {
    let items: Vec<String> = xs.iter().map(ToString::to_string).collect();
    format!("[{}]", items.join(", "))
}

fn write_stats(out: &mut dyn Write, st: &CodeStats, iterations: u64) -> std::io::Result<()> {
    writeln!(out, "WDCL: {}", list(&st.wdcl))?;
    writeln!(out, "#(CL): {}", list(&st.leader_counts))?;
    writeln!(out, "total leaders: {}", st.total_leaders)?;
    writeln!(out, "covering radius: {}", st.covering_radius)?;
    writeln!(out, "Newton radius: {}", st.newton_radius)?;
    writeln!(out, "unique-leader cosets: {}", st.unique_leader_cosets)?;
    match (st.d, st.t, st.ball_cosets) {
        (Some(d), Some(t), Some(b)) => {
            writeln!(out, "minimum distance: {}", d)?;
            writeln!(out, "error capability t: {}", t)?;
            writeln!(out, "cosets meeting B(C,t): {}", b)?;
        }
        _ => writeln!(out, "minimum distance: not computed (use --with-d)")?,
    }
    writeln!(out, "iterations: {}", iterations)
}

fn write_header(out: &mut dyn Write, st: &CodeStats) -> std::io::Result<()> {
    writeln!(
        out,
        "code: n={} r={} k={} cosets={} leaders={}",
        st.n, st.r, st.k, st.num_cosets, st.total_leaders
    )
}

fn cmd_leaders(path: &Path, json: Option<&Path>, matphi: bool, out: &mut dyn Write) -> CliResult {
    let h = load(path)?;
    let result = run(&h, matphi)?;
    let st = compute_stats(&result, None);
    write_header(out, &st)?;
    writeln!(out, "order: {}", result.order.id())?;
    let width = (result.num_cosets()).to_string().len();
    for (j, leaders) in result.leaders.iter().enumerate() {
        let words: Vec<String> = leaders.iter().map(ToString::to_string).collect();
        writeln!(
            out,
            "{:>width$}  {}  {}",
            j + 1,
            result.transversal.syndrome(j),
            words.join(" "),
        )?;
    }
    write_stats(out, &st, result.iteration_count)?;
    if let Some(p) = json {
        std::fs::write(p, OutputDocument::new(&result, &st, matphi).to_json())?;
    }
    Ok(())
}

fn cmd_stats(path: &Path, with_d: bool, cfg: &OracleConfig, out: &mut dyn Write) -> CliResult {
    let h = load(path)?;
    let d = if with_d { min_distance(&h, cfg)? } else { None };
    let result = run(&h, false)?;
    let st = compute_stats(&result, d);
    write_header(out, &st)?;
    if with_d && d.is_none() {
        writeln!(out, "code is {{0}}: minimum distance undefined")?;
    }
    write_stats(out, &st, result.iteration_count)?;
    Ok(())
}

fn cmd_decode(path: &Path, word: &str, out: &mut dyn Write) -> CliResult {
    let h = load(path)?;
    let y: BinaryWord = word
        .parse()
        .map_err(|e: Error| Failure::Usage(format!("-y: {}", e)))?;
    if y.len() != h.ncols() {
        return Err(Failure::Usage(format!(
            "-y: word has length {}, matrix has {} columns",
            y.len(),
            h.ncols()
        )));
    }
    let result = run(&h, true)?;
    let answers = decode(&y, &result)?;
    let distance = answers[0].error.weight();
    writeln!(out, "received: {}", y)?;
    writeln!(out, "syndrome: {}", h.syndrome(&y))?;
    writeln!(out, "distance: {}", distance)?;
    writeln!(out, "nearest codewords: {}", answers.len())?;
    for a in &answers {
        writeln!(out, "error {}  codeword {}", a.error, a.codeword)?;
    }
    Ok(())
}

fn cmd_matphi(path: &Path, json: Option<&Path>, out: &mut dyn Write) -> CliResult {
    let h = load(path)?;
    let result = run(&h, true)?;
    let phi = result.matphi.as_ref().expect("requested Matphi");
    let width = result.num_cosets().to_string().len();
    for j in 0..phi.num_rows() {
        let row: Vec<String> = phi
            .row(j)
            .map(|v| format!("{:>width$}", v.map_or(0, |x| x + 1)))
            .collect();
        writeln!(
            out,
            "{:>width$} {}: {}",
            j + 1,
            result.transversal.word(j),
            row.join(" ")
        )?;
    }
    if let Some(p) = json {
        let st = compute_stats(&result, None);
        std::fs::write(p, OutputDocument::new(&result, &st, true).to_json())?;
    }
    Ok(())
}

fn cmd_oracle(path: &Path, cfg: &OracleConfig, out: &mut dyn Write) -> CliResult {
    let h = load(path)?;
    let table = enumerate_cosets(&h, cfg)?;
    writeln!(
        out,
        "cosets: {}  leaders: {}",
        table.num_cosets(),
        table.total_leaders()
    )?;
    for (s, c) in &table.cosets {
        let words: Vec<String> = c.leaders.iter().map(ToString::to_string).collect();
        writeln!(
            out,
            "{}  weight {}  size {}  {}",
            s,
            c.min_weight,
            c.coset_size,
            words.join(" ")
        )?;
    }
    Ok(())
}

fn cmd_verify(path: &Path, cfg: &OracleConfig, out: &mut dyn Write) -> CliResult {
    let h = load(path)?;
    let truth = enumerate_cosets(&h, cfg)?;
    let result = run(&h, true)?;
    let report = verify(&result, &truth);
    for d in &report.discrepancies {
        writeln!(out, "{}", d)?;
    }
    if report.is_clean() {
        writeln!(
            out,
            "ok: {} cosets, {} leaders agree with brute force",
            report.cosets_checked,
            truth.total_leaders()
        )?;
        Ok(())
    } else {
        Err(Failure::Discrepancies(report.discrepancies.len()))
    }
}
