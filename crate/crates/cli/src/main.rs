//! Command-line workbench for codes from subset inclusion matrices:
//! matrix construction and rank checks, design verification and
//! constructions, distance bounds, the reduced-matrix search, quasi-cyclic
//! lifting, and decoder simulation.

mod io;
mod manifest;

use std::collections::HashMap;
use std::path::{Path, PathBuf};

use anyhow::{bail, Context};
use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;

use wilson_codes::designs::{
    construct_hadamard_stretch, construct_pasch, construct_subsets, doubling,
    is_binary_design, lambda_count, BinaryDesign,
};
use wilson_codes::distance::DistanceOracle;
use wilson_codes::qc::{enumerate_cycles, lift, purge_cycles_with, violations, PurgeOptions};
use wilson_codes::search::{enumerate_reduced_matrices, enumerate_reduced_matrices_seq, SearchConfig};
use wilson_codes::sim::{
    point_seed, run_point, run_point_seq, ChannelKind, DecoderSpec, GdbfConfig, MinSumConfig,
    SimRecord, SparseParity,
};
use wilson_codes::subsets::subsets_of;
use wilson_codes::wilson::{build_wilson, code_dimension, wilson_rank, WilsonParams};

use manifest::RunManifest;

#[derive(Parser)]
#[command(
    name = "wilson-codes",
    version,
    about = "Codes from subset inclusion matrices: designs, distance bounds, QC lifting, decoding",
    arg_required_else_help = true
)]
struct Cli {
    /// Optional key=value config file; flags override config values.
    #[arg(long, global = true, value_name = "FILE")]
    config: Option<PathBuf>,
    /// Manifest output path (default: alongside the first output file).
    #[arg(long, global = true, value_name = "FILE")]
    manifest: Option<PathBuf>,
    /// Increase log verbosity (-v info, -vv debug).
    #[arg(short, long, global = true, action = clap::ArgAction::Count)]
    verbose: u8,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Serialize)]
enum Command {
    /// Inclusion matrices and their rank formula.
    Wilson {
        #[command(subcommand)]
        cmd: WilsonCmd,
    },
    /// Verify and construct binary designs.
    Designs {
        #[command(subcommand)]
        cmd: DesignsCmd,
    },
    /// Distance bounds, exact values and witnesses.
    Distance(DistanceArgs),
    /// Search reduced incidence matrices of 3-designs.
    Search(SearchArgs),
    /// Quasi-cyclic lifting: expand, analyze cycles, purge.
    Lift {
        #[command(subcommand)]
        cmd: LiftCmd,
    },
    /// Monte-Carlo decoder simulation.
    Simulate(SimulateArgs),
}

#[derive(Subcommand, Serialize)]
enum WilsonCmd {
    /// Write W(t,n,k) in text form.
    Build {
        #[arg(long)]
        t: u32,
        #[arg(long)]
        n: u32,
        #[arg(long)]
        k: u32,
        #[arg(long, value_name = "FILE")]
        out: Option<PathBuf>,
    },
    /// Print the formula rank, the elimination rank and the code dimension.
    Rank {
        #[arg(long)]
        t: u32,
        #[arg(long)]
        n: u32,
        #[arg(long)]
        k: u32,
    },
}

#[derive(Subcommand, Serialize)]
enum DesignsCmd {
    /// Check the even-covering condition at strength t.
    Verify {
        #[arg(long)]
        t: u32,
        /// Design JSON file.
        file: PathBuf,
    },
    /// Build a design and write it as JSON.
    Construct {
        #[command(subcommand)]
        cmd: ConstructCmd,
    },
}

#[derive(Subcommand, Serialize)]
enum ConstructCmd {
    /// All k-subsets of a (k+1)-set (k-t odd).
    Subsets {
        #[arg(long)]
        t: u32,
        #[arg(long)]
        k: u32,
        #[arg(long, value_name = "FILE")]
        out: Option<PathBuf>,
    },
    /// Double an existing design (adds two points, doubles blocks).
    Doubling {
        /// Design JSON file.
        file: PathBuf,
        #[arg(long, value_name = "FILE")]
        out: Option<PathBuf>,
    },
    /// Generalized Pasch configuration (2^(t+1) blocks).
    Pasch {
        #[arg(long)]
        t: u32,
        #[arg(long)]
        k: u32,
        #[arg(long, value_name = "FILE")]
        out: Option<PathBuf>,
    },
    /// Stretched Hadamard design: 7 blocks of size 4l on 7l points.
    Hadamard {
        #[arg(long)]
        l: u32,
        #[arg(long, value_name = "FILE")]
        out: Option<PathBuf>,
    },
}

#[derive(Args, Serialize)]
struct DistanceArgs {
    #[command(subcommand)]
    cmd: Option<DistanceCmd>,
    #[arg(long)]
    t: Option<u32>,
    #[arg(long)]
    n: Option<u32>,
    #[arg(long)]
    k: Option<u32>,
    /// Also emit a witness design (JSON) for the upper bound.
    #[arg(long)]
    witness: bool,
    #[arg(long, value_name = "FILE")]
    out: Option<PathBuf>,
}

#[derive(Subcommand, Serialize)]
enum DistanceCmd {
    /// Render one row of the summary table for k = t+1 ..= kmax.
    Table {
        #[arg(long)]
        t: u32,
        #[arg(long)]
        kmax: u32,
    },
}

#[derive(Args, Serialize)]
struct SearchArgs {
    #[arg(long)]
    nblocks: u32,
    #[arg(long)]
    minweight: Option<u32>,
    #[arg(long)]
    zmax: Option<u64>,
    #[arg(long)]
    kmax: Option<u64>,
    /// Worker threads (1 = sequential).
    #[arg(long)]
    jobs: Option<usize>,
}

#[derive(Subcommand, Serialize)]
enum LiftCmd {
    /// Expand an exponent matrix into the lifted parity-check matrix.
    Build {
        /// Exponent matrix JSON file.
        #[arg(long, value_name = "FILE")]
        exp: PathBuf,
        /// Text matrix output.
        #[arg(long, value_name = "FILE")]
        out: Option<PathBuf>,
        /// alist output.
        #[arg(long, value_name = "FILE")]
        alist: Option<PathBuf>,
    },
    /// Report base cycles and surviving (violated) cycles.
    Cycles {
        #[arg(long, value_name = "FILE")]
        exp: PathBuf,
    },
    /// Find cycle-free shifts for W(t,n,k) and write the exponent matrix.
    Purge {
        #[arg(long)]
        t: u32,
        #[arg(long)]
        n: u32,
        #[arg(long)]
        k: u32,
        #[arg(long)]
        qc: u32,
        /// Also forbid 6-cycles (4-cycles are always forbidden).
        #[arg(long)]
        forbid6: bool,
        #[arg(long)]
        seed: Option<u64>,
        #[arg(long)]
        restarts: Option<u32>,
        #[arg(long, value_name = "FILE")]
        out: Option<PathBuf>,
    },
}

#[derive(Clone, Copy, ValueEnum, Serialize)]
enum DecoderArg {
    Gdbf,
    Minsum,
}

#[derive(Clone, Copy, ValueEnum, Serialize)]
enum ChannelArg {
    Bsc,
    Awgn,
}

#[derive(Args, Serialize)]
struct SimulateArgs {
    /// Parity-check matrix in alist form.
    #[arg(long, value_name = "FILE", conflicts_with = "exp")]
    alist: Option<PathBuf>,
    /// Exponent matrix JSON; the lift is simulated with qc layers.
    #[arg(long, value_name = "FILE")]
    exp: Option<PathBuf>,
    #[arg(long, value_enum)]
    decoder: DecoderArg,
    #[arg(long, value_enum)]
    channel: ChannelArg,
    /// Channel points: crossover probabilities (bsc) or Eb/N0 dB (awgn).
    #[arg(long, value_delimiter = ',', required = true)]
    points: Vec<f64>,
    #[arg(long)]
    frames: Option<u64>,
    #[arg(long)]
    seed: Option<u64>,
    /// Worker threads (1 = sequential).
    #[arg(long)]
    jobs: Option<usize>,
    #[arg(long)]
    max_iter: Option<u32>,
    /// Min-sum normalization scale.
    #[arg(long)]
    alpha: Option<f64>,
    /// Code rate for Eb/N0 (default: computed from the GF(2) rank).
    #[arg(long)]
    rate: Option<f64>,
    /// CSV output file (rows also go to stdout).
    #[arg(long, value_name = "FILE")]
    out: Option<PathBuf>,
}

fn main() -> std::process::ExitCode {
    let cli = Cli::parse();
    env_logger::Builder::new()
        .filter_level(match cli.verbose {
            0 => log::LevelFilter::Warn,
            1 => log::LevelFilter::Info,
            _ => log::LevelFilter::Debug,
        })
        .format_timestamp(None)
        .init();
    match run(cli) {
        Ok(()) => std::process::ExitCode::SUCCESS,
        Err(err) => {
            eprintln!("error: {err:#}");
            std::process::ExitCode::FAILURE
        }
    }
}

fn run(cli: Cli) -> anyhow::Result<()> {
    let config = match &cli.config {
        Some(path) => io::read_config(path)?,
        None => HashMap::new(),
    };
    let params = serde_json::to_value(&cli.command)?;
    let name = match &cli.command {
        Command::Wilson { .. } => "wilson",
        Command::Designs { .. } => "designs",
        Command::Distance(_) => "distance",
        Command::Search(_) => "search",
        Command::Lift { .. } => "lift",
        Command::Simulate(_) => "simulate",
    };
    let mut manifest = RunManifest::start(name, params, None);
    let result = dispatch(&cli.command, &config, &mut manifest);
    manifest.finish(cli.manifest.as_deref())?;
    result
}

fn dispatch(
    command: &Command,
    config: &HashMap<String, String>,
    manifest: &mut RunManifest,
) -> anyhow::Result<()> {
    match command {
        Command::Wilson { cmd } => run_wilson(cmd, manifest),
        Command::Designs { cmd } => run_designs(cmd, manifest),
        Command::Distance(args) => run_distance(args, manifest),
        Command::Search(args) => run_search(args, config, manifest),
        Command::Lift { cmd } => run_lift(cmd, config, manifest),
        Command::Simulate(args) => run_simulate(args, config, manifest),
    }
}

fn emit(
    manifest: &mut RunManifest,
    out: Option<&Path>,
    content: &str,
    what: &str,
) -> anyhow::Result<()> {
    match out {
        Some(path) => {
            io::write_atomic(path, content.as_bytes())?;
            manifest.record_output(path, content.as_bytes());
            log::info!("{what} written to {}", path.display());
        }
        None => print!("{content}"),
    }
    Ok(())
}

fn run_wilson(cmd: &WilsonCmd, manifest: &mut RunManifest) -> anyhow::Result<()> {
    match *cmd {
        WilsonCmd::Build { t, n, k, ref out } => {
            let p = WilsonParams::new(t, n, k)?;
            let w = build_wilson(&p)?;
            emit(manifest, out.as_deref(), &w.to_text(), "matrix")?;
        }
        WilsonCmd::Rank { t, n, k } => {
            let p = WilsonParams::new(t, n, k)?;
            let w = build_wilson(&p)?;
            let formula = wilson_rank(&p);
            let elim = w.rank() as u64;
            println!(
                "W(t={t}, n={n}, k={k}): formula rank {formula}, elimination rank {elim}, dimension {}",
                code_dimension(&p)
            );
            if formula != elim {
                bail!("rank formula {formula} disagrees with elimination {elim}");
            }
        }
    }
    Ok(())
}

fn load_design(path: &Path) -> anyhow::Result<BinaryDesign> {
    let text =
        std::fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))?;
    Ok(serde_json::from_str(&text)
        .with_context(|| format!("parsing design JSON {}", path.display()))?)
}

fn run_designs(cmd: &DesignsCmd, manifest: &mut RunManifest) -> anyhow::Result<()> {
    match cmd {
        DesignsCmd::Verify { t, file } => {
            let design = load_design(file)?;
            let ok = is_binary_design(&design, *t);
            println!(
                "{}: {} blocks on {} points, binary {t}-design: {ok}",
                file.display(),
                design.len(),
                design.n()
            );
            if !ok {
                // Name one odd subset to make the failure actionable.
                let points: Vec<u32> = (1..=design.n()).collect();
                if let Some(bad) = subsets_of(&points, *t as usize)
                    .into_iter()
                    .find(|s| lambda_count(s, &design) % 2 == 1)
                {
                    println!("first odd subset: {bad:?} (covered {} times)", lambda_count(&bad, &design));
                }
            }
        }
        DesignsCmd::Construct { cmd } => {
            let (design, out) = match cmd {
                ConstructCmd::Subsets { t, k, out } => (construct_subsets(*t, *k)?, out),
                ConstructCmd::Doubling { file, out } => (doubling(&load_design(file)?), out),
                ConstructCmd::Pasch { t, k, out } => (construct_pasch(*t, *k)?, out),
                ConstructCmd::Hadamard { l, out } => (construct_hadamard_stretch(*l)?, out),
            };
            let json = serde_json::to_string_pretty(&design)? + "\n";
            emit(manifest, out.as_deref(), &json, "design")?;
        }
    }
    Ok(())
}

fn run_distance(args: &DistanceArgs, manifest: &mut RunManifest) -> anyhow::Result<()> {
    let oracle = DistanceOracle::new();
    match &args.cmd {
        Some(DistanceCmd::Table { t, kmax }) => {
            let row = oracle.table1_row(*t, *kmax)?;
            print!("k:      ");
            for f in &row {
                print!("{:>9}", f.k);
            }
            println!();
            print!("d(t={t}):");
            for f in &row {
                print!("{:>9}", f.to_string());
            }
            println!();
        }
        None => {
            let (Some(t), Some(n), Some(k)) = (args.t, args.n, args.k) else {
                bail!("distance needs --t, --n and --k (or the 'table' subcommand)");
            };
            let fact = oracle.fact(t, n, k)?;
            match fact.exact() {
                Some(v) => println!(
                    "d({t},{n},{k}) = {v}   [lower: {}; upper: {}]",
                    fact.lo_provenance.join("+"),
                    fact.hi_provenance.join("+")
                ),
                None => println!(
                    "d({t},{n},{k}) in {fact}   [lower: {}; upper: {}]",
                    fact.lo_provenance.join("+"),
                    fact.hi_provenance.join("+")
                ),
            }
            if args.witness {
                match oracle.witness(t, n, k)? {
                    Some(w) => {
                        let json = serde_json::to_string_pretty(&w)? + "\n";
                        emit(manifest, args.out.as_deref(), &json, "witness design")?;
                    }
                    None => println!("no constructive witness applies at n = {n}"),
                }
            }
        }
    }
    Ok(())
}

fn run_search(
    args: &SearchArgs,
    config: &HashMap<String, String>,
    manifest: &mut RunManifest,
) -> anyhow::Result<()> {
    let mut cfg = SearchConfig::new(args.nblocks)?;
    cfg.min_weight = io::resolve(args.minweight, config, "minweight", cfg.min_weight)?;
    cfg.z_max = io::resolve(args.zmax, config, "zmax", cfg.z_max)?;
    cfg.k_max = io::resolve(args.kmax, config, "kmax", cfg.k_max)?;
    let jobs = io::resolve(args.jobs, config, "jobs", 1usize)?;
    let hits = run_with_jobs(jobs, || {
        if jobs <= 1 {
            enumerate_reduced_matrices_seq(&cfg)
        } else {
            enumerate_reduced_matrices(&cfg)
        }
    })?;
    for hit in &hits {
        println!(
            "reduced matrix ({} rows), k = {}, multiplicities z = {:?}",
            hit.matrix.rows(),
            hit.k,
            hit.z
        );
        print!("{}", hit.matrix.to_text());
    }
    println!(
        "search nblocks={} minweight={} zmax={} kmax={}: {} solution(s)",
        cfg.n_blocks,
        cfg.min_weight,
        cfg.z_max,
        cfg.k_max,
        hits.len()
    );
    let _ = manifest;
    Ok(())
}

#[cfg(feature = "parallel")]
fn run_with_jobs<T>(jobs: usize, f: impl FnOnce() -> T + Send) -> T
where
    T: Send,
{
    if jobs <= 1 {
        f()
    } else {
        rayon::ThreadPoolBuilder::new()
            .num_threads(jobs)
            .build()
            .expect("thread pool")
            .install(f)
    }
}

#[cfg(not(feature = "parallel"))]
fn run_with_jobs<T>(jobs: usize, f: impl FnOnce() -> T) -> T {
    if jobs > 1 {
        log::warn!("built without the 'parallel' feature; running sequentially");
    }
    f()
}

fn load_exponent(path: &Path) -> anyhow::Result<wilson_codes::ExponentMatrix> {
    let text =
        std::fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))?;
    Ok(serde_json::from_str(&text)
        .with_context(|| format!("parsing exponent JSON {}", path.display()))?)
}

fn run_lift(
    cmd: &LiftCmd,
    config: &HashMap<String, String>,
    manifest: &mut RunManifest,
) -> anyhow::Result<()> {
    match cmd {
        LiftCmd::Build { exp, out, alist } => {
            let e = load_exponent(exp)?;
            let h = lift(&e);
            log::info!(
                "lifted {}x{} (qc={}) to {}x{}",
                e.rows(),
                e.cols(),
                e.qc(),
                h.rows(),
                h.cols()
            );
            if out.is_none() && alist.is_none() {
                print!("{}", h.to_text());
            }
            if let Some(path) = out {
                emit(manifest, Some(path), &h.to_text(), "lifted matrix")?;
            }
            if let Some(path) = alist {
                let sparse = SparseParity::from_bitmatrix(&h);
                emit(
                    manifest,
                    Some(path),
                    &wilson_codes::alist::write_alist(&sparse),
                    "alist",
                )?;
            }
        }
        LiftCmd::Cycles { exp } => {
            let e = load_exponent(exp)?;
            let cycles = enumerate_cycles(&e.base_pattern(), 6)?;
            let viol = violations(&e, &cycles);
            println!(
                "base cycles: {} of length 4, {} of length 6",
                cycles.four.len(),
                cycles.six.len()
            );
            println!(
                "violated: {} four-cycles and {} six-cycles survive lifting (x qc={} in the lifted graph: {} and {})",
                viol.four.len(),
                viol.six.len(),
                e.qc(),
                viol.four.len() * e.qc() as usize,
                viol.six.len() * e.qc() as usize
            );
        }
        LiftCmd::Purge {
            t,
            n,
            k,
            qc,
            forbid6,
            seed,
            restarts,
            out,
        } => {
            let seed = io::resolve(*seed, config, "seed", 0u64)?;
            let base = build_wilson(&WilsonParams::new(*t, *n, *k)?)?;
            let opts = PurgeOptions {
                forbid6: *forbid6,
                seed,
                max_restarts: io::resolve(*restarts, config, "restarts", 200u32)?,
            };
            manifest.seed = Some(seed);
            let e = purge_cycles_with(&base, *qc, &opts)?;
            let cycles = enumerate_cycles(&base, if *forbid6 { 6 } else { 4 })?;
            let viol = violations(&e, &cycles);
            log::info!(
                "purged: {} violated 4-cycles, {} violated 6-cycles remain",
                viol.four.len(),
                viol.six.len()
            );
            let json = serde_json::to_string_pretty(&e)? + "\n";
            emit(manifest, out.as_deref(), &json, "exponent matrix")?;
        }
    }
    Ok(())
}

fn run_simulate(
    args: &SimulateArgs,
    config: &HashMap<String, String>,
    manifest: &mut RunManifest,
) -> anyhow::Result<()> {
    let h = match (&args.alist, &args.exp) {
        (Some(path), None) => {
            let text = std::fs::read_to_string(path)
                .with_context(|| format!("reading {}", path.display()))?;
            wilson_codes::alist::read_alist(&text)?
        }
        (None, Some(path)) => {
            let e = load_exponent(path)?;
            SparseParity::from_bitmatrix(&lift(&e)).with_qc_layers(e.qc())?
        }
        _ => bail!("exactly one of --alist or --exp is required"),
    };
    let frames = io::resolve(args.frames, config, "frames", 100u64)?;
    let seed = io::resolve(args.seed, config, "seed", 0u64)?;
    let jobs = io::resolve(args.jobs, config, "jobs", 1usize)?;
    let max_iter = io::resolve(args.max_iter, config, "max_iter", 30u32)?;
    let alpha = io::resolve(args.alpha, config, "alpha", 0.75f64)?;
    manifest.seed = Some(seed);

    let decoder = match args.decoder {
        DecoderArg::Gdbf => DecoderSpec::Gdbf(GdbfConfig {
            max_iter,
            ..GdbfConfig::default()
        }),
        DecoderArg::Minsum => DecoderSpec::MinSum(MinSumConfig { max_iter, alpha }),
    };
    let channel = match args.channel {
        ChannelArg::Bsc => ChannelKind::Bsc,
        ChannelArg::Awgn => {
            let rate = match args.rate {
                Some(r) => r,
                None => {
                    let rank = h.to_bitmatrix().rank();
                    let rate = (h.cols() - rank) as f64 / h.cols() as f64;
                    log::info!("computed rate {rate:.4} from rank {rank}");
                    rate
                }
            };
            ChannelKind::Awgn { rate }
        }
    };

    let mut csv = String::from(SimRecord::csv_header());
    csv.push('\n');
    for (i, &param) in args.points.iter().enumerate() {
        let ps = point_seed(seed, i as u64);
        let record = run_with_jobs(jobs, || {
            if jobs <= 1 {
                run_point_seq(&h, &decoder, &channel, param, frames, ps, None)
            } else {
                run_point(&h, &decoder, &channel, param, frames, ps, None)
            }
        })?;
        let row = record.csv_row(h.cols());
        println!("{row}");
        csv.push_str(&row);
        csv.push('\n');
    }
    if let Some(path) = &args.out {
        io::write_atomic(path, csv.as_bytes())?;
        manifest.record_output(path, csv.as_bytes());
    }
    Ok(())
}
