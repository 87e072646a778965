//! `mcgdim` — dimension queries, reference-table regeneration and batch
//! finite-subgroup verification for mapping class groups of punctured
//! surfaces.
//!
//! Exit codes: 0 success, 1 verification failure, 2 usage error, 3 I/O error.

mod render;

use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use mcgdim_core::catalog::{broughton_genus2, families_genus1, subgroups_genus0};
use mcgdim_core::mcg::{gd_mcg, vcd_mcg, vcd_spherical_braid};
use mcgdim_core::table::{broughton_table, sphere_table, sphere_table_paper_order, TableError};
use mcgdim_core::verify::{
    sort_records, verify_branch_genus0, verify_genus_ge3, verify_inequality_range,
};
use mcgdim_core::{MappingClassGroup, RecordStatus, VerificationRecord};

#[derive(Parser)]
#[command(
    name = "mcgdim",
    version,
    about = "Exact dimension computations and finite-subgroup verification for Mod_g^n"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Markdown,
    Csv,
    Json,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum TableName {
    #[value(name = "A", alias = "a")]
    A,
    #[value(name = "B", alias = "b")]
    B,
}

#[derive(Subcommand)]
enum Command {
    /// Print vcd(Mod_g^n); --gd for the proper geometric dimension, --braid
    /// for the spherical braid group (genus 0 only)
    Vcd {
        genus: u64,
        punctures: u64,
        /// Print the proper geometric dimension instead
        #[arg(long)]
        gd: bool,
        /// Print vcd of the spherical braid group on `punctures` strands
        #[arg(long)]
        braid: bool,
        /// With --gd: report Harer's value for closed surfaces too
        #[arg(long)]
        allow_closed: bool,
    },
    /// Regenerate a reference table: A = finite subgroups of Mod_0^n
    /// (5 <= n <= 13), B = the genus-2 classification with bound columns
    Table {
        which: TableName,
        /// Puncture count (required for A; for B evaluates the bounds at n)
        #[arg(long)]
        n: Option<u64>,
        #[arg(long, value_enum, default_value = "markdown")]
        format: Format,
        /// Reproduce the published row layout instead of the canonical sort
        #[arg(long)]
        paper_order: bool,
    },
    /// Verify vcd(WF) + lambda(F) <= vcd(Mod_g^n) over a puncture range
    /// "a..b" (inclusive); for genus >= 3 checks the closed-surface identity
    Verify {
        genus: u64,
        /// Inclusive range of puncture counts, e.g. 7..13
        range: String,
        /// Allow out-of-theorem-range inputs and failing records (exit 0)
        #[arg(long)]
        report_mode: bool,
        /// Also run the three genus-0 asymptotic branch inequalities
        #[arg(long)]
        branches: bool,
        /// Upper end of the branch scan (default one million)
        #[arg(long, default_value_t = 1_000_000)]
        branch_max: u64,
        /// Verification threads (0 = all cores)
        #[arg(long, default_value_t = 0)]
        jobs: usize,
        /// Write the record stream as JSON-lines to this file
        #[arg(long)]
        out: Option<PathBuf>,
        /// Write the sorted record stream as CSV to this file
        #[arg(long)]
        csv: Option<PathBuf>,
    },
    /// Dump a finite-subgroup catalog as JSON (genus 0 and 1 need --n)
    Catalog {
        genus: u64,
        #[arg(long)]
        n: Option<u64>,
    },
}

enum Failure {
    Usage(String),
    Io(String),
}

impl From<anyhow::Error> for Failure {
    fn from(e: anyhow::Error) -> Self {
        Failure::Io(e.to_string())
    }
}

fn usage(msg: impl Into<String>) -> Failure {
    Failure::Usage(msg.into())
}

fn parse_range(text: &str) -> Result<(u64, u64), Failure> {
    let (lo, hi) = text
        .split_once("..")
        .ok_or_else(|| usage(format!("range must look like a..b, got {text:?}")))?;
    let lo: u64 = lo
        .trim()
        .parse()
        .map_err(|_| usage(format!("bad range start {lo:?}")))?;
    let hi: u64 = hi
        .trim()
        .parse()
        .map_err(|_| usage(format!("bad range end {hi:?}")))?;
    if lo > hi {
        return Err(usage(format!("empty range {text:?}")));
    }
    Ok((lo, hi))
}

fn in_theorem_range(genus: u64, n: u64) -> bool {
    match genus {
        0 => n == 5 || n >= 7,
        1 => n >= 2,
        _ => n >= 1,
    }
}

fn cmd_vcd(
    genus: u64,
    punctures: u64,
    gd: bool,
    braid: bool,
    allow_closed: bool,
) -> Result<(), Failure> {
    if braid {
        if genus != 0 {
            return Err(usage("--braid applies to genus 0 only"));
        }
        if punctures == 0 {
            return Err(usage("the braid group needs at least one strand"));
        }
        println!("{}", vcd_spherical_braid(punctures));
        return Ok(());
    }
    let group = MappingClassGroup::new(genus, punctures);
    if gd {
        if allow_closed {
            println!("{}", mcgdim_core::mcg::gd_mcg_allowing_closed(group));
        } else {
            match gd_mcg(group) {
                Ok(v) => println!("{v}"),
                Err(e) => return Err(usage(format!("{e}; pass --allow-closed for the vcd value"))),
            }
        }
    } else {
        println!("{}", vcd_mcg(group));
    }
    Ok(())
}

fn cmd_table(
    which: TableName,
    n: Option<u64>,
    format: Format,
    paper_order: bool,
) -> Result<(), Failure> {
    match which {
        TableName::A => {
            let n = n.ok_or_else(|| usage("table A needs --n (5 <= n <= 13)"))?;
            let rows = if paper_order {
                sphere_table_paper_order(n)
            } else {
                sphere_table(n)
            }
            .map_err(|e @ TableError::OutOfTableRange { .. }| usage(e.to_string()))?;
            let text = match format {
                Format::Markdown => render::sphere_markdown(&rows),
                Format::Csv => render::sphere_csv(&rows)?,
                Format::Json => render::sphere_json(&rows)?,
            };
            print!("{text}");
        }
        TableName::B => {
            let rows = broughton_table();
            let text = match format {
                Format::Markdown => render::broughton_markdown(&rows, n),
                Format::Csv => render::broughton_csv(&rows, n)?,
                Format::Json => render::broughton_json(&rows, n)?,
            };
            print!("{text}");
        }
    }
    Ok(())
}

fn write_file(path: &PathBuf, contents: &str) -> Result<(), Failure> {
    std::fs::File::create(path)
        .and_then(|mut f| f.write_all(contents.as_bytes()))
        .map_err(|e| Failure::Io(format!("{}: {e}", path.display())))
}

#[allow(clippy::too_many_arguments)]
fn cmd_verify(
    genus: u64,
    range: &str,
    report_mode: bool,
    branches: bool,
    branch_max: u64,
    jobs: usize,
    out: Option<PathBuf>,
    csv: Option<PathBuf>,
) -> Result<bool, Failure> {
    let (lo, hi) = parse_range(range)?;
    let mut all_ok = true;

    if genus >= 3 {
        let report = verify_genus_ge3(genus, hi);
        println!(
            "genus 3..={} punctures 1..={}: closed-surface identity {}",
            genus,
            hi,
            if report.holds { "holds" } else { "FAILS" }
        );
        println!("  assumed: {}", report.assumed);
        if !report.holds {
            println!("  witnesses: {:?}", report.witness_failures);
            all_ok = false;
        }
        return Ok(all_ok);
    }

    if !report_mode {
        if let Some(bad) = (lo..=hi).find(|&n| !in_theorem_range(genus, n)) {
            return Err(usage(format!(
                "n = {bad} is outside the theorem range for genus {genus}; use --report-mode"
            )));
        }
    }

    let records = verify_inequality_range(genus, lo, hi, jobs).map_err(|e| usage(e.to_string()))?;

    for n in lo..=hi {
        let at_n: Vec<&VerificationRecord> = records
            .iter()
            .filter(|r| r.ambient.punctures == n)
            .collect();
        let fails: Vec<&&VerificationRecord> = at_n
            .iter()
            .filter(|r| r.status == RecordStatus::Fail)
            .collect();
        let unrealizable: Vec<&&VerificationRecord> = at_n
            .iter()
            .filter(|r| r.status == RecordStatus::Unrealizable)
            .collect();
        println!(
            "g={genus} n={n}: {} records, {} fail, {} unrealizable",
            at_n.len(),
            fails.len(),
            unrealizable.len()
        );
        for f in &fails {
            println!(
                "  FAIL {} (order {}): n_F={} vcd(WF)={} lambda={} sum={} > budget={}",
                f.group,
                f.order,
                f.n_f.unwrap(),
                f.vcd_wf.unwrap(),
                f.lambda,
                f.sum.unwrap(),
                f.budget
            );
        }
        if !unrealizable.is_empty() {
            let labels: Vec<String> = unrealizable
                .iter()
                .map(|r| format!("{} (order {})", r.group, r.order))
                .collect();
            println!("  note: unrealizable at n={n}: {}", labels.join(", "));
        }
        if !fails.is_empty() {
            all_ok = false;
        }
    }

    if branches {
        if genus != 0 {
            return Err(usage("--branches applies to genus 0 only"));
        }
        for report in verify_branch_genus0(branch_max) {
            println!(
                "branch {}: n >= {} over [{}, {}]: {} (sharp below: {}, monotone: {})",
                report.branch,
                report.threshold,
                report.checked_lo,
                report.checked_hi,
                if report.holds { "holds" } else { "FAILS" },
                report.just_below_fails,
                report.monotone
            );
            if !report.holds {
                println!("  witnesses: {:?}", report.witness_failures);
                all_ok = false;
            }
        }
    }

    if let Some(path) = out {
        write_file(&path, &render::record_lines_json(&records)?)?;
    }
    if let Some(path) = csv {
        let mut sorted = records.clone();
        sort_records(&mut sorted);
        write_file(&path, &render::records_csv(&sorted)?)?;
    }

    Ok(all_ok || report_mode)
}

fn cmd_catalog(genus: u64, n: Option<u64>) -> Result<(), Failure> {
    let entries = match genus {
        0 => {
            let n = n.ok_or_else(|| usage("catalog 0 needs --n (n >= 3)"))?;
            if n < 3 {
                return Err(usage("the sphere catalog needs n >= 3"));
            }
            subgroups_genus0(n)
        }
        1 => {
            let n = n.ok_or_else(|| usage("catalog 1 needs --n (n >= 1)"))?;
            if n < 1 {
                return Err(usage("the torus catalog needs n >= 1"));
            }
            families_genus1(n)
        }
        2 => broughton_genus2(),
        g => return Err(usage(format!("no catalog for genus {g}"))),
    };
    let text = serde_json::to_string_pretty(&entries).map_err(|e| Failure::Io(e.to_string()))?;
    println!("{text}");
    Ok(())
}

fn run(cli: Cli) -> Result<bool, Failure> {
    match cli.command {
        Command::Vcd {
            genus,
            punctures,
            gd,
            braid,
            allow_closed,
        } => {
            cmd_vcd(genus, punctures, gd, braid, allow_closed)?;
            Ok(true)
        }
        Command::Table {
            which,
            n,
            format,
            paper_order,
        } => {
            cmd_table(which, n, format, paper_order)?;
            Ok(true)
        }
        Command::Verify {
            genus,
            range,
            report_mode,
            branches,
            branch_max,
            jobs,
            out,
            csv,
        } => cmd_verify(
            genus,
            &range,
            report_mode,
            branches,
            branch_max,
            jobs,
            out,
            csv,
        ),
        Command::Catalog { genus, n } => {
            cmd_catalog(genus, n)?;
            Ok(true)
        }
    }
}

fn main() -> ExitCode {
    // Die quietly on closed pipes (`mcgdim verify ... | head`).
    #[cfg(unix)]
    unsafe {
        libc::signal(libc::SIGPIPE, libc::SIG_DFL);
    }
    let cli = Cli::parse();
    match run(cli) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
        Err(Failure::Io(msg)) => {
            eprintln!("i/o error: {msg}");
            ExitCode::from(3)
        }
    }
}
