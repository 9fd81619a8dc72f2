use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand};

use polycycle::bench::{to_csv, ExperimentGrid};
use polycycle::generators::{generate_convex_instance, generate_instance, GenConfig};
use polycycle::io::{format_result, parse_instance, parse_result, render_svg, serialize_instance, ResultFile, SvgOptions};
use polycycle::pipeline::{embed_cycle, Instance};
use polycycle::verify::{brute_force_exists, validate_cycle, DEFAULT_ORACLE_CAP};

/// Output directory used when `--out` is not given.
const OUT_DIR_VAR: &str = "POLYCYCLE_OUT_DIR";

#[derive(Parser)]
#[command(name = "polycycle", version, about = "Hamiltonian cycles on points inside simple polygons")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Embed a cycle; exit 0 on success, 1 on failure, 2 on bad input.
    Embed {
        input: PathBuf,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Run the success-rate grid and write CSV.
    Bench {
        #[arg(long, value_delimiter = ',', default_values_t = [5, 10, 15, 20, 25])]
        grid_m: Vec<usize>,
        #[arg(long, value_delimiter = ',', default_values_t = [20])]
        grid_n: Vec<usize>,
        /// Polygons per (m, n) cell.
        #[arg(long, default_value_t = 25)]
        cells: usize,
        #[arg(long, default_value_t = 1)]
        seed: u64,
        /// Write `NA` instead of wall-clock times so output is reproducible.
        #[arg(long)]
        no_timing: bool,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Draw an instance and its embedding as SVG.
    Render {
        input: PathBuf,
        #[arg(long)]
        labels: bool,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Exhaustively decide whether any valid cycle exists.
    Oracle {
        input: PathBuf,
        #[arg(long, default_value_t = DEFAULT_ORACLE_CAP)]
        oracle_cap: usize,
    },
    /// Check a cycle (result file) against an instance.
    Validate { input: PathBuf, cycle: PathBuf },
    /// Write a random instance.
    Gen {
        #[arg(long)]
        m: usize,
        #[arg(long)]
        n: usize,
        #[arg(long, default_value_t = 1)]
        seed: u64,
        #[arg(long)]
        convex: bool,
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

const INPUT_ERROR: u8 = 2;

fn load(path: &Path) -> Result<Instance, String> {
    let text = fs::read_to_string(path).map_err(|e| format!("{}: {e}", path.display()))?;
    parse_instance(&text).map_err(|e| format!("{}: {e}", path.display()))
}

/// `--out`, else `$POLYCYCLE_OUT_DIR/<default_name>`, else stdout.
fn emit(out: Option<&Path>, default_name: &str, text: &str) -> Result<(), String> {
    let target = out
        .map(Path::to_path_buf)
        .or_else(|| std::env::var_os(OUT_DIR_VAR).map(|d| PathBuf::from(d).join(default_name)));
    match target {
        Some(p) => fs::write(&p, text).map_err(|e| format!("{}: {e}", p.display())),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

fn stem(path: &Path) -> String {
    path.file_stem().map(|s| s.to_string_lossy().into_owned()).unwrap_or_else(|| "out".into())
}

fn run(command: Command) -> Result<u8, String> {
    match command {
        Command::Embed { input, out } => {
            let inst = load(&input)?;
            let result = embed_cycle(&inst).map_err(|e| e.to_string())?;
            emit(out.as_deref(), &format!("{}.result", stem(&input)), &format_result(&result.outcome))?;
            Ok(if result.is_success() { 0 } else { 1 })
        }
        Command::Bench { grid_m, grid_n, cells, seed, no_timing, out } => {
            let grid = ExperimentGrid { side_counts: grid_m, point_counts: grid_n, cells, seed };
            emit(out.as_deref(), "bench.csv", &to_csv(&grid.run(), !no_timing))?;
            Ok(0)
        }
        Command::Render { input, labels, out } => {
            let inst = load(&input)?;
            let result = embed_cycle(&inst).ok();
            let opts = SvgOptions { labels, ..SvgOptions::default() };
            emit(out.as_deref(), &format!("{}.svg", stem(&input)), &render_svg(&inst, result.as_ref(), &opts))?;
            Ok(0)
        }
        Command::Oracle { input, oracle_cap } => {
            let inst = load(&input)?;
            match brute_force_exists(&inst, oracle_cap).map_err(|e| e.to_string())? {
                Some(cycle) => {
                    let ids: Vec<String> = cycle.iter().map(|p| (p + 1).to_string()).collect();
                    println!("EXISTS {}", ids.join(" "));
                    Ok(0)
                }
                None => {
                    println!("NONE");
                    Ok(1)
                }
            }
        }
        Command::Validate { input, cycle } => {
            let inst = load(&input)?;
            let text = fs::read_to_string(&cycle).map_err(|e| format!("{}: {e}", cycle.display()))?;
            let order = match parse_result(&text).map_err(|e| format!("{}: {e}", cycle.display()))? {
                ResultFile::Cycle(order) => order,
                ResultFile::Fail(reason) => return Err(format!("result file records a failure: {reason}")),
            };
            let report = validate_cycle(&inst, &order);
            if report.is_valid() {
                println!("VALID");
                Ok(0)
            } else {
                println!("INVALID");
                for v in &report.violations {
                    println!("  {v:?}");
                }
                Ok(1)
            }
        }
        Command::Gen { m, n, seed, convex, out } => {
            let cfg = GenConfig::new(m, n, seed);
            let inst = if convex { generate_convex_instance(&cfg) } else { generate_instance(&cfg) }
                .map_err(|e| e.to_string())?;
            emit(out.as_deref(), &format!("gen-m{m}-n{n}-s{seed}.txt"), &serialize_instance(&inst))?;
            Ok(0)
        }
    }
}

fn main() -> ExitCode {
    env_logger::init();
    let cli = Cli::parse();
    match run(cli.command) {
        Ok(code) => ExitCode::from(code),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(INPUT_ERROR)
        }
    }
}
