//! Command-line interface: color, validate, gen, bench.

use clap::{Args, Parser, Subcommand, ValueEnum};
use sparsecol::scheduler::{color_graph, Mode, PalettePolicy, RunConfig};
use sparsecol::{generate, io, oracle, Error};
use std::path::PathBuf;
use std::time::Instant;

#[derive(Parser)]
#[command(name = "sparsecol", about = "Edge-color sparse graphs with Δ colors", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Color a graph file and emit the coloring plus run statistics.
    Color(ColorArgs),
    /// Check a coloring file against its graph.
    Validate {
        graph: PathBuf,
        coloring: PathBuf,
    },
    /// Print a generated graph in the edge-list format.
    Gen {
        #[command(subcommand)]
        kind: GenKind,
    },
    /// Time the coloring pipeline over generated inputs and fit the growth
    /// exponent.
    Bench(BenchArgs),
}

#[derive(Args)]
struct ColorArgs {
    /// Input graph file.
    input: PathBuf,
    #[arg(long, value_enum, default_value_t = CliMode::Det)]
    mode: CliMode,
    /// Seed for randomized mode.
    #[arg(long, default_value_t = 1)]
    seed: u64,
    #[arg(long, value_enum, default_value_t = Colors::Auto)]
    colors: Colors,
    /// Write the coloring here instead of stdout.
    #[arg(long)]
    out: Option<PathBuf>,
    /// Write the stats report here instead of stderr.
    #[arg(long)]
    stats: Option<PathBuf>,
}

#[derive(Clone, Copy, ValueEnum)]
enum CliMode {
    Rand,
    Det,
}

#[derive(Clone, Copy, ValueEnum)]
enum Colors {
    /// Exactly Δ colors; fails unless Δ ≥ 2·mad.
    Delta,
    /// Δ + 1 colors unconditionally.
    Delta1,
    /// Δ if the precondition holds, Δ + 1 otherwise.
    Auto,
}

#[derive(Subcommand)]
enum GenKind {
    Star { leaves: usize },
    Cycle { n: usize },
    Strong { d: usize },
    Kforest {
        k: usize,
        n: usize,
        #[arg(long, default_value_t = 1)]
        seed: u64,
    },
    Kdegenerate {
        k: usize,
        n: usize,
        #[arg(long, default_value_t = 1)]
        seed: u64,
    },
}

#[derive(Args)]
struct BenchArgs {
    #[arg(long, value_enum, default_value_t = Family::Kdegenerate)]
    family: Family,
    /// Degeneracy / forest parameter for the k-families.
    #[arg(long, default_value_t = 2)]
    k: usize,
    /// Comma-separated target edge counts.
    #[arg(long, value_delimiter = ',', required = true)]
    sizes: Vec<usize>,
    #[arg(long, value_enum, default_value_t = CliMode::Det)]
    mode: CliMode,
    #[arg(long, default_value_t = 1)]
    repeats: usize,
    #[arg(long, default_value_t = 1)]
    seed: u64,
}

#[derive(Clone, Copy, ValueEnum)]
enum Family {
    Star,
    Cycle,
    Kforest,
    Kdegenerate,
}

fn main() {
    let cli = Cli::parse();
    let code = match run(cli) {
        Ok(code) => code,
        Err(err) => {
            eprintln!("error: {err}");
            err.exit_code()
        }
    };
    std::process::exit(code);
}

fn run(cli: Cli) -> sparsecol::Result<i32> {
    match cli.command {
        Command::Color(args) => cmd_color(args).map(|()| 0),
        Command::Validate { graph, coloring } => cmd_validate(graph, coloring),
        Command::Gen { kind } => cmd_gen(kind).map(|()| 0),
        Command::Bench(args) => cmd_bench(args).map(|()| 0),
    }
}

fn read(path: &PathBuf) -> sparsecol::Result<String> {
    Ok(std::fs::read_to_string(path)?)
}

fn emit(path: Option<PathBuf>, content: &str, to_stderr_default: bool) -> sparsecol::Result<()> {
    match path {
        Some(p) => std::fs::write(p, content)?,
        None if to_stderr_default => eprint!("{content}"),
        None => print!("{content}"),
    }
    Ok(())
}

fn cmd_color(args: ColorArgs) -> sparsecol::Result<()> {
    let g = io::parse_graph(&read(&args.input)?)?;
    let cfg = RunConfig {
        mode: match args.mode {
            CliMode::Rand => Mode::Randomized { seed: args.seed },
            CliMode::Det => Mode::Deterministic,
        },
        policy: match args.colors {
            Colors::Delta => PalettePolicy::ExactDelta,
            Colors::Delta1 => PalettePolicy::DeltaPlusOne,
            Colors::Auto => PalettePolicy::Auto,
        },
        instrument: true,
    };
    let (colors, report) = color_graph(&g, &cfg)?;
    // Never emit an improper coloring with exit 0.
    let check = oracle::validate_coloring(&g, &colors, report.palette_total);
    if !check.ok {
        return Err(Error::ImproperOutput {
            edge: match check.violations.first() {
                Some(oracle::Violation::Conflict { edges, .. }) => edges[0],
                Some(oracle::Violation::Uncolored { edge }) => *edge,
                Some(oracle::Violation::OutOfPalette { edge, .. }) => *edge,
                None => 0,
            },
        });
    }
    emit(
        args.out,
        &io::write_coloring(&g, &colors, report.palette_total),
        false,
    )?;
    emit(args.stats, &io::render_stats(&report), true)?;
    Ok(())
}

fn cmd_validate(graph: PathBuf, coloring: PathBuf) -> sparsecol::Result<i32> {
    let g = io::parse_graph(&read(&graph)?)?;
    let text = read(&coloring)?;
    let colors = io::parse_coloring(&text, &g)?;
    let d = text
        .lines()
        .find(|l| !l.trim().is_empty() && !l.trim().starts_with('#'))
        .and_then(|l| l.split_whitespace().nth(1))
        .and_then(|f| f.parse().ok())
        .unwrap_or(0);
    let outcome = oracle::validate_coloring(&g, &colors, d);
    if outcome.ok {
        println!("ok: {} edges, {} colors allowed", colors.len(), d);
        Ok(0)
    } else {
        for v in &outcome.violations {
            println!("violation: {v:?}");
        }
        Ok(1)
    }
}

fn cmd_gen(kind: GenKind) -> sparsecol::Result<()> {
    let g = match kind {
        GenKind::Star { leaves } => generate::star(leaves),
        GenKind::Cycle { n } => generate::cycle(n),
        GenKind::Strong { d } => generate::strong(d)?,
        GenKind::Kforest { k, n, seed } => generate::kforest(k, n, seed),
        GenKind::Kdegenerate { k, n, seed } => generate::kdegenerate(k, n, seed),
    };
    print!("{}", io::write_graph(&g));
    Ok(())
}

fn cmd_bench(args: BenchArgs) -> sparsecol::Result<()> {
    println!(
        "family={} k={} mode={} repeats={}",
        match args.family {
            Family::Star => "star",
            Family::Cycle => "cycle",
            Family::Kforest => "kforest",
            Family::Kdegenerate => "kdegenerate",
        },
        args.k,
        match args.mode {
            CliMode::Rand => "rand",
            CliMode::Det => "det",
        },
        args.repeats
    );
    println!("{:>10} {:>12} {:>16} {:>8}", "m", "mean_ms", "path_length", "depth");
    let mut points = Vec::new();
    for (i, &target) in args.sizes.iter().enumerate() {
        let g = match args.family {
            Family::Star => generate::star(target),
            Family::Cycle => generate::cycle(target.max(3)),
            Family::Kforest => generate::kforest(args.k, target / args.k.max(1), args.seed + i as u64),
            Family::Kdegenerate => generate::kdegenerate(
                args.k,
                generate::kdegenerate_size_for_edges(args.k, target),
                args.seed + i as u64,
            ),
        };
        let cfg = RunConfig {
            mode: match args.mode {
                CliMode::Rand => Mode::Randomized {
                    seed: args.seed + i as u64,
                },
                CliMode::Det => Mode::Deterministic,
            },
            policy: PalettePolicy::Auto,
            instrument: false,
        };
        let mut total_ms = 0.0;
        let mut path_length = 0;
        let mut depth = 0;
        for _ in 0..args.repeats.max(1) {
            let clock = Instant::now();
            let (_, report) = color_graph(&g, &cfg)?;
            total_ms += clock.elapsed().as_secs_f64() * 1e3;
            path_length = report.total_path_length;
            depth = report.recursion_depth;
        }
        let mean = total_ms / args.repeats.max(1) as f64;
        println!(
            "{:>10} {:>12.2} {:>16} {:>8}",
            g.edge_count(),
            mean,
            path_length,
            depth
        );
        points.push((g.edge_count() as f64, mean));
    }
    if points.len() >= 2 {
        println!("alpha={:.3}", fit_exponent(&points));
    }
    Ok(())
}

/// Least-squares slope of log t against log m: the alpha in t ≈ C·m^alpha.
fn fit_exponent(points: &[(f64, f64)]) -> f64 {
    let logs: Vec<(f64, f64)> = points
        .iter()
        .map(|&(m, t)| (m.ln(), t.max(1e-6).ln()))
        .collect();
    let n = logs.len() as f64;
    let sx: f64 = logs.iter().map(|p| p.0).sum();
    let sy: f64 = logs.iter().map(|p| p.1).sum();
    let sxx: f64 = logs.iter().map(|p| p.0 * p.0).sum();
    let sxy: f64 = logs.iter().map(|p| p.0 * p.1).sum();
    (n * sxy - sx * sy) / (n * sxx - sx * sx)
}
