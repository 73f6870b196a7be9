use std::io::Write;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use balloon::gen::{self, Distribution};
use balloon::json::{self, Document, Instance};
use balloon::{bench, svg, treefile, CliError, Result};
use balloon_core::geometry::DEFAULT_TOL;
use balloon_core::{check_drawing, check_layout, draw_tree, layout, Report};
use clap::{Parser, Subcommand, ValueEnum};

#[derive(Parser)]
#[command(name = "balloon", version, about = "Balloon layouts and tree drawings with perfect angular resolution")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Json,
    Svg,
}

#[derive(Clone, Copy, ValueEnum)]
enum Kind {
    Radii,
    Tree,
}

#[derive(Subcommand)]
enum Command {
    /// Lay out the balloons of an instance file.
    Layout {
        #[arg(long = "in")]
        input: PathBuf,
        /// Output file; standard output when omitted.
        #[arg(long)]
        out: Option<PathBuf>,
        #[arg(long, value_enum, default_value = "json")]
        format: Format,
    },
    /// Draw a tree given as an edge list or nested parentheses.
    Tree {
        #[arg(long = "in")]
        input: PathBuf,
        #[arg(long)]
        out: Option<PathBuf>,
        #[arg(long, value_enum, default_value = "json")]
        format: Format,
        /// Print size, covering radius, exponent, edge length and resolution slack.
        #[arg(long)]
        stats: bool,
    },
    /// Re-check a layout or drawing JSON file.
    Verify {
        #[arg(long = "in")]
        input: PathBuf,
    },
    /// Generate a seeded instance.
    Gen {
        #[arg(long, value_enum)]
        kind: Kind,
        #[arg(long)]
        n: usize,
        #[arg(long, default_value = "uniform")]
        dist: Distribution,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Free spokes written into a radii instance.
        #[arg(long, default_value_t = 0, value_parser = clap::value_parser!(u8).range(0..=2))]
        free: u8,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Time the zero-free layout on equal radii at N/4, N/2 and N.
    Bench {
        #[arg(long = "max-n")]
        max_n: usize,
        #[arg(long, default_value_t = 5)]
        runs: usize,
    },
}

fn read(path: &Path) -> Result<Vec<u8>> {
    std::fs::read(path).map_err(|source| CliError::Io { path: path.to_owned(), source })
}

fn write(out: Option<&Path>, bytes: &[u8]) -> Result<()> {
    match out {
        Some(path) => std::fs::write(path, bytes).map_err(|source| CliError::Io { path: path.to_owned(), source }),
        None => std::io::stdout()
            .write_all(bytes)
            .map_err(|source| CliError::Io { path: "<stdout>".into(), source }),
    }
}

fn report_failures(report: &Report) -> bool {
    for v in report.violations.iter().take(20) {
        eprintln!("violation ({:?}): {} [{:.3e}]", v.kind, v.detail, v.magnitude);
    }
    if report.violations.len() > 20 {
        eprintln!("... {} more", report.violations.len() - 20);
    }
    report.pass()
}

fn run(cli: Cli) -> Result<bool> {
    match cli.command {
        Command::Layout { input, out, format } => {
            let inst = json::parse_instance(&read(&input)?)?;
            let variant = inst.variant()?;
            let l = layout(&inst.radii, variant)?;
            let bytes = match format {
                Format::Json => json::emit_layout(&l),
                Format::Svg => svg::emit_layout_svg(&l),
            };
            write(out.as_deref(), &bytes)?;
            Ok(report_failures(&check_layout(&l, variant, DEFAULT_TOL)))
        }
        Command::Tree { input, out, format, stats } => {
            let text = String::from_utf8(read(&input)?).map_err(|_| CliError::Schema("tree file is not UTF-8".into()))?;
            let t = treefile::parse_tree(&text)?;
            let d = draw_tree(&t)?;
            let bytes = match format {
                Format::Json => json::emit_drawing(&d),
                Format::Svg => svg::emit_drawing_svg(&d),
            };
            write(out.as_deref(), &bytes)?;
            let report = check_drawing(&d, DEFAULT_TOL);
            if stats {
                let n = t.len();
                let exponent = (n > 1).then(|| d.stats.covering_radius.ln() / (n as f64).ln());
                let line = serde_json::json!({
                    "n": n,
                    "covering_radius": d.stats.covering_radius,
                    "exponent": exponent,
                    "min_edge_length": d.stats.min_edge_length,
                    "min_resolution_slack": d.stats.min_resolution_slack,
                    "max_path_ratio": d.stats.max_path_ratio,
                });
                if out.is_some() {
                    println!("{line}");
                } else {
                    eprintln!("{line}");
                }
            }
            Ok(report_failures(&report))
        }
        Command::Verify { input } => {
            let report = match json::parse_document(&read(&input)?)? {
                Document::Layout(l) => check_layout(&l, l.variant, DEFAULT_TOL),
                Document::Drawing(d) => check_drawing(&d, DEFAULT_TOL),
            };
            let ok = report_failures(&report);
            println!(
                "{}: covering radius {}, ratio to bound {}",
                if ok { "pass" } else { "FAIL" },
                report.measured.covering_radius,
                report.measured.ratio_to_bound
            );
            Ok(ok)
        }
        Command::Gen { kind, n, dist, seed, free, out } => {
            if n == 0 {
                return Err(CliError::Schema("--n must be positive".into()));
            }
            let bytes = match kind {
                Kind::Radii => json::emit_instance(&Instance {
                    radii: gen::radii(n, dist, seed),
                    free_spokes: free.into(),
                    seed: Some(seed),
                    metadata: Some(serde_json::json!({ "dist": dist.to_string() })),
                }),
                Kind::Tree => treefile::emit_edges(&gen::tree(n, dist, seed)).into_bytes(),
            };
            write(out.as_deref(), &bytes)?;
            Ok(true)
        }
        Command::Bench { max_n, runs } => {
            if max_n < 4 {
                return Err(CliError::Schema("--max-n must be at least 4".into()));
            }
            let timings = bench::doubling(max_n, runs);
            for t in &timings {
                println!("n = {:>10}  best {:>10.3} ms", t.n, t.best.as_secs_f64() * 1e3);
            }
            for (w, r) in timings.windows(2).zip(bench::ratios(&timings)) {
                println!("t({}) / t({}) = {r:.3}", w[1].n, w[0].n);
            }
            Ok(true)
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}
