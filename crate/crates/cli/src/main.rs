//! `qwalk` — batch experiment runner for quantum walk recurrence and mixing
//! studies. Every subcommand runs one deterministic simulation and emits one
//! CSV; diagnostics go to stderr only.

mod config;
mod experiments;

use std::io::Write as _;
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand};
use qwalk::{CoinParams, InitialSpin, Topology};

use config::{pick, FileConfig};
use experiments::WalkSettings;

const DEFAULT_THETA_DEG: f64 = 45.0;
const DEFAULT_DELTA_DEG: f64 = 45.0;
const DEFAULT_ETA_DEG: f64 = 90.0;
const DEFAULT_STEPS: usize = 100;
const DEFAULT_HORIZON_CYCLES: usize = 200;

#[derive(Parser)]
#[command(
    name = "qwalk",
    version,
    about = "Quantum walks on the line and the n-cycle: recurrence, mixing, and variance as CSV"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Origin-return series p0(t) and Pólya partial products on the line
    Line(LineArgs),
    /// Origin-return series p0(t) on the n-cycle
    Cycle(CycleArgs),
    /// Time-averaged distribution on the n-cycle and its distance to uniform
    Mixing(MixingArgs),
    /// Compare a walk measured at time T with an unmeasured twin at T+1
    Witness(WitnessArgs),
    /// Classical symmetric random walk baseline
    Classical(ClassicalArgs),
    /// Variance growth of a line walk
    Variance(VarianceArgs),
}

#[derive(Args, Debug)]
struct CoinArgs {
    /// Coin rotation angle θ in degrees
    #[arg(long)]
    theta: Option<f64>,
    /// Coin phase ξ in degrees
    #[arg(long)]
    xi: Option<f64>,
    /// Coin phase ζ in degrees
    #[arg(long)]
    zeta: Option<f64>,
    /// Initial spin mixing angle δ in degrees
    #[arg(long)]
    delta: Option<f64>,
    /// Initial spin phase η in degrees
    #[arg(long)]
    eta: Option<f64>,
    /// Threshold below which a probability deficit counts as an exact revival
    #[arg(long)]
    eps_rec: Option<f64>,
    /// Sweep: comma-separated θ values in degrees, one output file per value
    #[arg(long, value_delimiter = ',')]
    theta_list: Option<Vec<f64>>,
}

#[derive(Args, Debug)]
struct IoArgs {
    /// Write the CSV to this path instead of stdout
    #[arg(long)]
    out: Option<PathBuf>,
    /// Flat key=value file supplying defaults for any flag
    #[arg(long)]
    config: Option<PathBuf>,
}

#[derive(Args, Debug)]
struct LineArgs {
    #[command(flatten)]
    coin: CoinArgs,
    #[command(flatten)]
    io: IoArgs,
    /// Number of walk steps T
    #[arg(long)]
    steps: Option<usize>,
}

#[derive(Args, Debug)]
struct CycleArgs {
    #[command(flatten)]
    coin: CoinArgs,
    #[command(flatten)]
    io: IoArgs,
    /// Number of positions on the cycle
    #[arg(long)]
    n: Option<usize>,
    /// Number of walk steps T
    #[arg(long)]
    steps: Option<usize>,
}

#[derive(Args, Debug)]
struct MixingArgs {
    #[command(flatten)]
    coin: CoinArgs,
    #[command(flatten)]
    io: IoArgs,
    /// Number of positions on the cycle
    #[arg(long)]
    n: Option<usize>,
    /// Averaging horizon in steps (overrides --horizon-cycles)
    #[arg(long)]
    steps: Option<usize>,
    /// Averaging horizon as a multiple of n
    #[arg(long)]
    horizon_cycles: Option<usize>,
}

#[derive(Args, Debug)]
struct WitnessArgs {
    #[command(flatten)]
    coin: CoinArgs,
    #[command(flatten)]
    io: IoArgs,
    /// Cycle length; omit to run on the line
    #[arg(long)]
    n: Option<usize>,
    /// Measurement time T
    #[arg(long)]
    steps: Option<usize>,
}

#[derive(Args, Debug)]
struct ClassicalArgs {
    #[command(flatten)]
    io: IoArgs,
    /// Number of walk steps T
    #[arg(long)]
    steps: Option<usize>,
}

#[derive(Args, Debug)]
struct VarianceArgs {
    #[command(flatten)]
    coin: CoinArgs,
    #[command(flatten)]
    io: IoArgs,
    /// Number of walk steps T
    #[arg(long)]
    steps: Option<usize>,
}

fn main() -> std::process::ExitCode {
    match run(Cli::parse()) {
        Ok(()) => std::process::ExitCode::SUCCESS,
        Err(message) => {
            eprintln!("qwalk: {message}");
            std::process::ExitCode::FAILURE
        }
    }
}

fn run(cli: Cli) -> Result<(), String> {
    match cli.command {
        Command::Line(args) => {
            let cfg = load_config(&args.io)?;
            let steps = pick(args.steps, cfg.usize("steps")?, DEFAULT_STEPS);
            dispatch(&args.coin, &args.io, &cfg, move |settings| {
                experiments::line_csv(&settings, steps).map_err(|e| e.to_string())
            })
        }
        Command::Cycle(args) => {
            let cfg = load_config(&args.io)?;
            let steps = pick(args.steps, cfg.usize("steps")?, DEFAULT_STEPS);
            let n = require_n(args.n, &cfg)?;
            dispatch(&args.coin, &args.io, &cfg, move |settings| {
                experiments::cycle_csv(&settings, n, steps).map_err(|e| e.to_string())
            })
        }
        Command::Mixing(args) => {
            let cfg = load_config(&args.io)?;
            let n = require_n(args.n, &cfg)?;
            let horizon = match pick(args.steps, cfg.usize("steps")?, 0) {
                0 => {
                    let cycles = pick(
                        args.horizon_cycles,
                        cfg.usize("horizon-cycles")?,
                        DEFAULT_HORIZON_CYCLES,
                    );
                    cycles
                        .checked_mul(n)
                        .ok_or("horizon overflows: use --steps directly")?
                }
                steps => steps,
            };
            dispatch(&args.coin, &args.io, &cfg, move |settings| {
                experiments::mixing_csv(&settings, n, horizon).map_err(|e| e.to_string())
            })
        }
        Command::Witness(args) => {
            let cfg = load_config(&args.io)?;
            let steps = pick(args.steps, cfg.usize("steps")?, DEFAULT_STEPS);
            let topo = match args.n.or(cfg.usize("n")?) {
                Some(n) => Topology::cycle(n).map_err(|e| e.to_string())?,
                // the un-measured twin runs one step past T
                None => Topology::line(steps + 1),
            };
            dispatch(&args.coin, &args.io, &cfg, move |settings| {
                experiments::witness_csv(&settings, topo, steps).map_err(|e| e.to_string())
            })
        }
        Command::Classical(args) => {
            let cfg = load_config(&args.io)?;
            let steps = pick(args.steps, cfg.usize("steps")?, DEFAULT_STEPS);
            let out = args.io.out.clone().or_else(|| cfg.path("out"));
            emit(out.as_deref(), &experiments::classical_csv(steps))
        }
        Command::Variance(args) => {
            let cfg = load_config(&args.io)?;
            let steps = pick(args.steps, cfg.usize("steps")?, DEFAULT_STEPS);
            dispatch(&args.coin, &args.io, &cfg, move |settings| {
                experiments::variance_csv(&settings, steps).map_err(|e| e.to_string())
            })
        }
    }
}

fn load_config(io: &IoArgs) -> Result<FileConfig, String> {
    match &io.config {
        Some(path) => FileConfig::load(path),
        None => Ok(FileConfig::default()),
    }
}

fn require_n(flag: Option<usize>, cfg: &FileConfig) -> Result<usize, String> {
    flag.or(cfg.usize("n")?)
        .ok_or_else(|| "missing cycle length: pass --n".to_string())
}

/// Resolves coin/spin settings for one θ (degrees) and the shared flags.
fn settings_for(coin: &CoinArgs, cfg: &FileConfig, theta_deg: f64) -> Result<WalkSettings, String> {
    let xi = pick(coin.xi, cfg.f64("xi")?, 0.0);
    let zeta = pick(coin.zeta, cfg.f64("zeta")?, 0.0);
    let delta = pick(coin.delta, cfg.f64("delta")?, DEFAULT_DELTA_DEG);
    let eta = pick(coin.eta, cfg.f64("eta")?, DEFAULT_ETA_DEG);
    let eps_rec = pick(
        coin.eps_rec,
        cfg.f64("eps-rec")?,
        qwalk::recurrence::DEFAULT_EPS_REC,
    );
    if !(eps_rec > 0.0 && eps_rec < 1.0) {
        return Err(format!(
            "--eps-rec must lie strictly between 0 and 1, got {eps_rec}"
        ));
    }
    Ok(WalkSettings {
        coin: CoinParams::from_degrees(xi, theta_deg, zeta),
        spin: InitialSpin::from_degrees(delta, eta),
        eps_rec,
    })
}

/// Runs the job once, or once per θ in sweep mode. Sweep runs are independent
/// walks, so they evolve concurrently, each writing its own file derived
/// from --out.
fn dispatch<F>(coin: &CoinArgs, io: &IoArgs, cfg: &FileConfig, job: F) -> Result<(), String>
where
    F: Fn(WalkSettings) -> Result<String, String> + Sync,
{
    let out = io.out.clone().or_else(|| cfg.path("out"));
    let theta_list = match &coin.theta_list {
        Some(list) => Some(list.clone()),
        None => cfg.f64_list("theta-list")?,
    };

    match theta_list {
        Some(thetas) => {
            if coin.theta.is_some() {
                return Err("--theta conflicts with --theta-list; pass one of them".into());
            }
            if thetas.is_empty() {
                return Err("--theta-list is empty".into());
            }
            let base = out.ok_or("sweep mode needs --out to derive one file per θ")?;
            std::thread::scope(|scope| {
                let handles: Vec<_> = thetas
                    .iter()
                    .map(|&theta| {
                        let job = &job;
                        let path = sweep_path(&base, theta);
                        scope.spawn(move || -> Result<(), String> {
                            let settings = settings_for(coin, cfg, theta)?;
                            let csv = job(settings)?;
                            write_file(&path, &csv)
                        })
                    })
                    .collect();
                let errors: Vec<String> = handles
                    .into_iter()
                    .filter_map(|h| h.join().expect("sweep worker panicked").err())
                    .collect();
                if errors.is_empty() {
                    Ok(())
                } else {
                    Err(errors.join("; "))
                }
            })
        }
        None => {
            let theta = pick(coin.theta, cfg.f64("theta")?, DEFAULT_THETA_DEG);
            let settings = settings_for(coin, cfg, theta)?;
            let csv = job(settings)?;
            emit(out.as_deref(), &csv)
        }
    }
}

/// `results.csv` + θ=15 → `results_theta15.csv`.
fn sweep_path(base: &Path, theta: f64) -> PathBuf {
    let stem = base.file_stem().and_then(|s| s.to_str()).unwrap_or("sweep");
    let name = match base.extension().and_then(|e| e.to_str()) {
        Some(ext) => format!("{stem}_theta{theta}.{ext}"),
        None => format!("{stem}_theta{theta}"),
    };
    base.with_file_name(name)
}

fn write_file(path: &Path, contents: &str) -> Result<(), String> {
    std::fs::write(path, contents).map_err(|e| format!("cannot write {}: {e}", path.display()))
}

fn emit(out: Option<&Path>, csv: &str) -> Result<(), String> {
    match out {
        Some(path) => write_file(path, csv),
        None => {
            let mut stdout = std::io::stdout().lock();
            stdout
                .write_all(csv.as_bytes())
                .map_err(|e| format!("cannot write to stdout: {e}"))
        }
    }
}
