//! hmskit: one binary that reruns every numbered verification.
//!
//! Each subcommand drives one area of the core crate, prints either a text
//! summary or a JSON report, and exits 0 only when every non-probe check
//! passed. Reports are byte-identical across runs with the same flags:
//! timings go to stderr, figure and CSV payloads go to files, and the
//! serialized checks carry nothing environment-dependent. `verify-all` runs
//! the whole acceptance suite in dependency order and currently exits
//! nonzero: the honest dimension counts in two of the stated claims differ
//! from the recorded expectations, and the reports say so rather than
//! papering over it.

mod report;
mod suites;

use std::path::PathBuf;
use std::process::ExitCode;

use anyhow::Context;
use clap::{Parser, Subcommand};
use serde_json::json;

use report::Report;

#[derive(Parser)]
#[command(
    name = "hmskit",
    version,
    about = "Exact-arithmetic and verified-numeric check suites for the mirror-family toolkit"
)]
struct Cli {
    #[command(subcommand)]
    command: Cmd,
}

#[derive(Subcommand)]
enum Cmd {
    /// Hochschild dimension tables, truncated-window and cyclic-invariant
    /// computations, and the bar-resolution cross-check.
    Hh {
        /// Family index.
        #[arg(long, value_parser = clap::value_parser!(u8).range(1..=4))]
        n: u8,
        /// Run the truncated-window computation with its differential tests.
        #[arg(long)]
        truncated: bool,
        /// Run the cyclic-invariant computation in degree two.
        #[arg(long)]
        cyclic: bool,
        /// Cross-check the closed formula against the bar resolution (n = 1 only).
        #[arg(long)]
        oracle: bool,
        /// Emit the JSON report instead of text.
        #[arg(long)]
        json: bool,
    },
    /// Critical points and values of both superpotentials, the verified
    /// Newton search, and the level-set trichotomy.
    Critical {
        /// Family index.
        #[arg(long, value_parser = clap::value_parser!(u8).range(1..=6))]
        n: u8,
        #[arg(long)]
        json: bool,
    },
    /// Zonotope embedding lemmas and thimble disjointness, by exact LP.
    Zonotope {
        /// Family index.
        #[arg(long, value_parser = clap::value_parser!(u8).range(1..=4))]
        n: u8,
        /// Also verify the packing of all lifted zonotopes.
        #[arg(long)]
        check_lifts: bool,
        /// Also test every thimble base point against the angle rule.
        #[arg(long)]
        thimbles: bool,
        #[arg(long)]
        json: bool,
    },
    /// Integrate the Hamiltonian circle flow, verify conservation and the
    /// phase term, and write the trajectory CSV.
    Flow {
        /// Number of coordinates the flow rotates (2..=k..=n+1).
        #[arg(long, value_parser = clap::value_parser!(u8).range(2..=7))]
        k: u8,
        /// Family index.
        #[arg(long, value_parser = clap::value_parser!(u8).range(1..=6))]
        n: u8,
        /// Integration time.
        #[arg(long, default_value_t = std::f64::consts::TAU)]
        t: f64,
        /// Integrator step.
        #[arg(long, default_value_t = 1e-4)]
        dt: f64,
        /// Trajectory CSV path.
        #[arg(long, default_value = "trajectory.csv")]
        out: PathBuf,
        #[arg(long)]
        json: bool,
    },
    /// Rasterize a fiber coamoeba to P6 and SVG and count its components.
    Coamoeba {
        /// Fiber dimension of the slice (1 or 2).
        #[arg(long, value_parser = clap::value_parser!(u8).range(1..=2))]
        n: u8,
        /// Square raster resolution in pixels.
        #[arg(long, default_value_t = 512)]
        resolution: u32,
        /// Output path; the extension is replaced by .ppm and .svg.
        #[arg(long, default_value = "coamoeba.ppm")]
        out: PathBuf,
        #[arg(long)]
        json: bool,
    },
    /// Run the full acceptance suite in dependency order.
    VerifyAll {
        #[arg(long)]
        json: bool,
    },
}

fn main() -> ExitCode {
    configure_threads();
    let cli = Cli::parse();
    match run(cli.command) {
        Ok(code) => ExitCode::from(code),
        Err(err) => {
            eprintln!("error: {err:#}");
            ExitCode::from(1)
        }
    }
}

/// HMSKIT_THREADS caps the global worker pool before any parallel section
/// spins up; unset means the library default.
fn configure_threads() {
    if let Ok(raw) = std::env::var("HMSKIT_THREADS") {
        match raw.parse::<usize>() {
            Ok(threads) if threads >= 1 => {
                let _ = rayon::ThreadPoolBuilder::new().num_threads(threads).build_global();
            }
            _ => eprintln!("warning: HMSKIT_THREADS={raw} is not a positive integer; ignored"),
        }
    }
}

fn usage_error(message: &str) -> ! {
    eprintln!("error: {message}");
    std::process::exit(2);
}

/// Prints the report (text or JSON) plus any extra lines, sends the timing
/// summary to stderr, and converts the outcome into the exit code.
fn finish(report: Report, lines: Vec<String>, json: bool) -> u8 {
    if json {
        print!("{}", report.to_json());
    } else {
        for line in &lines {
            println!("{line}");
        }
        if !lines.is_empty() {
            println!();
        }
        print!("{}", report.render_text());
    }
    eprintln!("{} checks in {:.2} s", report.checks.len(), report.total_runtime());
    u8::try_from(report.exit_code()).expect("exit codes are 0 or 1")
}

fn run(cmd: Cmd) -> anyhow::Result<u8> {
    match cmd {
        Cmd::Hh { n, truncated, cyclic, oracle, json } => {
            if oracle && n != 1 {
                usage_error("--oracle cross-checks the bar resolution and is only available at n = 1");
            }
            let mut report = Report::new(
                "hh",
                json!({"n": n, "truncated": truncated, "cyclic": cyclic, "oracle": oracle}),
            );
            let mut lines = suites::closed_formula_table_lines(n);
            report.extend(suites::tail_table_checks(n));
            if truncated {
                let (extra, checks) = suites::truncated_section(n);
                lines.extend(extra);
                report.extend(checks);
                report.extend(suites::schouten_checks(n));
            }
            if cyclic {
                let (extra, checks) = suites::cyclic_section(n);
                lines.extend(extra);
                report.extend(checks);
            }
            if oracle {
                report.extend(suites::bar_oracle_checks());
            }
            Ok(finish(report, lines, json))
        }
        Cmd::Critical { n, json } => {
            let mut report = Report::new("critical", json!({"n": n}));
            let (lines, checks) = suites::critical_section(n);
            report.extend(checks);
            Ok(finish(report, lines, json))
        }
        Cmd::Zonotope { n, check_lifts, thimbles, json } => {
            let mut report = Report::new(
                "zonotope",
                json!({"n": n, "check_lifts": check_lifts, "thimbles": thimbles}),
            );
            let mut lines = Vec::new();
            report.extend(suites::embedding_checks(n));
            if check_lifts {
                report.extend(suites::lift_packing_checks(n));
            }
            if thimbles {
                let (summary, checks) = suites::thimble_section(n);
                lines.push(summary);
                report.extend(checks);
            }
            Ok(finish(report, lines, json))
        }
        Cmd::Flow { k, n, t, dt, out, json } => {
            if k > n + 1 {
                usage_error("the flow needs k <= n + 1 rotating coordinates");
            }
            let mut report = Report::new(
                "flow",
                json!({
                    "k": k,
                    "n": n,
                    "t": t,
                    "dt": dt,
                    "out": out.display().to_string(),
                }),
            );
            let run = suites::flow_run(k, n, t, dt)?;
            let rows = run.csv.lines().count().saturating_sub(1);
            std::fs::write(&out, &run.csv)
                .with_context(|| format!("writing trajectory CSV to {}", out.display()))?;
            report.extend(run.checks);
            let lines = vec![format!("trajectory CSV: {} ({rows} rows)", out.display())];
            Ok(finish(report, lines, json))
        }
        Cmd::Coamoeba { n, resolution, out, json } => {
            let mut report = Report::new(
                "coamoeba",
                json!({
                    "n": n,
                    "resolution": resolution,
                    "out": out.display().to_string(),
                }),
            );
            let (raster, checks) = suites::raster_section(n, resolution, &out)?;
            report.extend(checks);
            let lines = vec![
                format!("raster {}x{} px", raster.resolution, raster.resolution),
                format!(
                    "  dark {} px in {} components, light {} px in {} components",
                    raster.dark_pixels,
                    raster.dark_components,
                    raster.light_pixels,
                    raster.light_components
                ),
                format!("  area fraction {:.4}", raster.area_fraction),
                format!("  wrote {}", raster.ppm_path.display()),
                format!("  wrote {}", raster.svg_path.display()),
            ];
            Ok(finish(report, lines, json))
        }
        Cmd::VerifyAll { json } => {
            let mut report = Report::new("verify-all", json!({}));
            let scratch = std::env::temp_dir().join("hmskit-verify");
            report.extend(suites::verify_all_checks(&scratch)?);
            Ok(finish(report, Vec::new(), json))
        }
    }
}
