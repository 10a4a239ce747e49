mod output;

use std::fs::File;
use std::io::{self, BufWriter, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use polya_necklace::counting::{alternation_distribution, count_for_alternation};
use polya_necklace::montecarlo::{self, MCConfig, PRNG_ID};
use polya_necklace::oracle::enumerate_all;
use polya_necklace::stats::{
    fit_gaussian, sweep_fixed_at, sweep_fixed_ratio, theoretical_pdf, DiscretePdf, GaussianFit,
    Provenance, SweepRow,
};
use polya_necklace::{AlternationCount, Error, NecklaceSpec};

use crate::output::{Cell, Envelope, Format};

/// Exact alternation statistics of two-colored circular chains.
#[derive(Parser)]
#[command(name = "necklace", version)]
struct Cli {
    /// Suppress the parameter echo (provenance header) in table output.
    #[arg(long, global = true)]
    quiet: bool,

    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Clone, Copy)]
struct Content {
    /// White (AT) bead count.
    #[arg(long = "at")]
    n_at: u64,
    /// Black (GC) bead count.
    #[arg(long = "gc")]
    n_gc: u64,
}

impl Content {
    fn spec(self) -> Result<NecklaceSpec, Error> {
        NecklaceSpec::new(self.n_at, self.n_gc)
    }
}

#[derive(Args)]
struct Sink {
    #[arg(long, value_enum, default_value = "csv")]
    format: Format,
    /// Write to a file instead of stdout.
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum CountFormat {
    Text,
    Csv,
    Json,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum SweepMode {
    FixedAt,
    FixedRatio,
}

#[derive(Subcommand)]
enum Command {
    /// Exact number of bracelets with the given content and alternations.
    Count {
        #[arg(long)]
        alpha: u64,
        #[command(flatten)]
        content: Content,
        #[arg(long, value_enum, default_value = "text")]
        format: CountFormat,
    },
    /// Theoretical alternation pdf with exact counts.
    Pdf {
        #[command(flatten)]
        content: Content,
        #[command(flatten)]
        sink: Sink,
    },
    /// Monte Carlo pdf per set and its distance to theory.
    Mc {
        #[command(flatten)]
        content: Content,
        /// Chains per set.
        #[arg(long)]
        runs: u64,
        #[arg(long)]
        seed: u64,
        #[arg(long, default_value_t = MCConfig::DEFAULT_SETS)]
        sets: u64,
        #[command(flatten)]
        sink: Sink,
    },
    /// Mean and spread of the Monte Carlo distance over several run counts.
    Converge {
        #[command(flatten)]
        content: Content,
        /// Comma-separated run counts.
        #[arg(long, value_delimiter = ',', required = true)]
        runs: Vec<u64>,
        #[arg(long)]
        seed: u64,
        #[arg(long, default_value_t = MCConfig::DEFAULT_SETS)]
        sets: u64,
        #[command(flatten)]
        sink: Sink,
    },
    /// Gaussian fit of the theoretical pdf, or of an `alpha,probability` CSV file.
    Fit {
        #[arg(long = "at", required_unless_present = "input", requires = "n_gc")]
        n_at: Option<u64>,
        #[arg(long = "gc", required_unless_present = "input", requires = "n_at")]
        n_gc: Option<u64>,
        #[arg(long, conflicts_with_all = ["n_at", "n_gc"])]
        input: Option<PathBuf>,
        #[command(flatten)]
        sink: Sink,
    },
    /// Gaussian characteristics across a family of contents.
    Sweep {
        #[arg(long, value_enum)]
        mode: SweepMode,
        /// fixed-at: the white bead count.
        #[arg(long = "at", required_if_eq("mode", "fixed-at"))]
        n_at: Option<u64>,
        /// fixed-at: comma-separated black bead counts.
        #[arg(long = "gc", value_delimiter = ',', required_if_eq("mode", "fixed-at"))]
        gc_values: Vec<u64>,
        /// fixed-ratio: GC:AT, e.g. 2:1.
        #[arg(long, required_if_eq("mode", "fixed-ratio"))]
        ratio: Option<String>,
        /// fixed-ratio: comma-separated total lengths.
        #[arg(long = "n", value_delimiter = ',', required_if_eq("mode", "fixed-ratio"))]
        n_values: Vec<u64>,
        #[command(flatten)]
        sink: Sink,
    },
    /// Exhaustive enumeration of all bracelets of length N (N <= 18).
    Oracle {
        #[arg(long)]
        n: u64,
        #[command(flatten)]
        sink: Sink,
    },
}

enum Failure {
    Usage(String),
    Internal(String),
    Io(io::Error),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::Integrality(_) => Failure::Internal(e.to_string()),
            other => Failure::Usage(other.to_string()),
        }
    }
}

impl From<io::Error> for Failure {
    fn from(e: io::Error) -> Self {
        Failure::Io(e)
    }
}

type CmdResult = Result<(), Failure>;

fn emit(env: &Envelope, sink: &Sink, quiet: bool) -> CmdResult {
    match &sink.out {
        Some(path) => {
            let mut w = BufWriter::new(File::create(path)?);
            env.render(sink.format, quiet, &mut w)?;
            w.flush()?;
        }
        None => {
            let stdout = io::stdout();
            let mut lock = stdout.lock();
            env.render(sink.format, quiet, &mut lock)?;
        }
    }
    Ok(())
}

fn content_params(env: Envelope, spec: NecklaceSpec) -> Envelope {
    env.param("n_at", spec.n_at).param("n_gc", spec.n_gc)
}

fn cmd_count(alpha: u64, content: Content, format: CountFormat, quiet: bool) -> CmdResult {
    let alpha = AlternationCount::new(alpha)?;
    let spec = content.spec()?;
    let count = count_for_alternation(alpha, spec)?.to_string();
    let out_format = match format {
        CountFormat::Text => {
            println!("{count}");
            return Ok(());
        }
        CountFormat::Csv => Format::Csv,
        CountFormat::Json => Format::Json,
    };
    let mut env = content_params(Envelope::new("count", &["alpha", "n_at", "n_gc", "count"]), spec)
        .param("alpha", alpha.get());
    env.push(vec![Cell::Int(alpha.get()), Cell::Int(spec.n_at), Cell::Int(spec.n_gc), Cell::Count(count)]);
    emit(&env, &Sink { format: out_format, out: None }, quiet)
}

fn cmd_pdf(content: Content, sink: &Sink, quiet: bool) -> CmdResult {
    let spec = content.spec()?;
    let dist = alternation_distribution(spec)?;
    let pdf = theoretical_pdf(spec)?;
    let total: polya_necklace::BigCount = dist.values().sum();
    let mut env = content_params(Envelope::new("pdf", &["alpha", "count", "probability"]), spec);
    for (alpha, count) in dist {
        env.push(vec![
            Cell::Int(alpha.get()),
            Cell::Count(count.to_string()),
            Cell::Real(pdf.get(alpha.get())),
        ]);
    }
    env.summary.push(("total", Cell::Count(total.to_string())));
    emit(&env, sink, quiet)
}

fn cmd_mc(content: Content, runs: u64, seed: u64, sets: u64, sink: &Sink, quiet: bool) -> CmdResult {
    let spec = content.spec()?;
    let config = MCConfig::new(spec, runs, seed, sets)?;
    let theory = theoretical_pdf(spec)?;
    let results = montecarlo::run_sets(&config)?;
    let mut env = content_params(
        Envelope::new("mc", &["set", "sub_seed", "alpha", "empirical", "theoretical", "distance"]),
        spec,
    )
    .param("runs", runs)
    .param("sets", sets)
    .param("seed", seed)
    .param("prng", PRNG_ID)
    .param("sub_seed_rule", "splitmix64(seed + (set + 1) * 0x9E3779B97F4A7C15)");
    for r in &results {
        for (&alpha, &p) in r.pdf.entries() {
            env.push(vec![
                Cell::Int(r.index),
                Cell::Int(r.sub_seed),
                Cell::Int(alpha),
                Cell::Real(p),
                Cell::Real(theory.get(alpha)),
                Cell::Real(r.distance),
            ]);
        }
    }
    let mean = results.iter().map(|r| r.distance).sum::<f64>() / results.len() as f64;
    env.summary.push(("mean_distance", Cell::Real(mean)));
    emit(&env, sink, quiet)
}

fn cmd_converge(content: Content, runs: &[u64], seed: u64, sets: u64, sink: &Sink, quiet: bool) -> CmdResult {
    let spec = content.spec()?;
    let rows = montecarlo::convergence_study(spec, runs, sets, seed)?;
    let mut env = content_params(
        Envelope::new("converge", &["runs", "mean_distance", "std_distance", "sub_seeds"]),
        spec,
    )
    .param("sets", sets)
    .param("seed", seed)
    .param("prng", PRNG_ID)
    .param("sub_seed_rule", "splitmix64(seed + (row * sets + set + 1) * 0x9E3779B97F4A7C15)");
    for row in rows {
        let seeds: Vec<String> = row.sets.iter().map(|s| s.sub_seed.to_string()).collect();
        env.push(vec![
            Cell::Int(row.runs),
            Cell::Real(row.mean_distance),
            Cell::Real(row.std_distance),
            Cell::Text(seeds.join(" ")),
        ]);
    }
    emit(&env, sink, quiet)
}

fn read_pdf_csv(path: &PathBuf) -> Result<DiscretePdf, Failure> {
    let mut rdr = csv::ReaderBuilder::new()
        .comment(Some(b'#'))
        .trim(csv::Trim::All)
        .from_path(path)
        .map_err(|e| Failure::Usage(format!("{}: {e}", path.display())))?;
    let mut entries = std::collections::BTreeMap::new();
    for rec in rdr.records() {
        let rec = rec.map_err(|e| Failure::Usage(e.to_string()))?;
        let bad = || Failure::Usage(format!("expected `alpha,probability` rows, got {rec:?}"));
        let alpha: u64 = rec.get(0).and_then(|s| s.parse().ok()).ok_or_else(bad)?;
        let p: f64 = rec.get(1).and_then(|s| s.parse().ok()).ok_or_else(bad)?;
        entries.insert(alpha, p);
    }
    Ok(DiscretePdf::from_entries(entries, Provenance::Empirical))
}

fn fit_cells(fit: &GaussianFit) -> Vec<Cell> {
    vec![Cell::Real(fit.alpha0), Cell::Real(fit.sigma), Cell::Real(fit.amplitude), Cell::Real(fit.rmse)]
}

fn cmd_fit(n_at: Option<u64>, n_gc: Option<u64>, input: Option<PathBuf>, sink: &Sink, quiet: bool) -> CmdResult {
    let columns = ["alpha0", "sigma", "amplitude", "rmse"];
    let (pdf, env) = match (input, n_at, n_gc) {
        (Some(path), _, _) => {
            let pdf = read_pdf_csv(&path)?;
            let env = Envelope::new("fit", &columns).param("input", path.display().to_string());
            (pdf, env)
        }
        (None, Some(a), Some(g)) => {
            let spec = NecklaceSpec::new(a, g)?;
            (theoretical_pdf(spec)?, content_params(Envelope::new("fit", &columns), spec))
        }
        _ => return Err(Failure::Usage("either --input or both --at and --gc are required".into())),
    };
    let fit = fit_gaussian(&pdf)?;
    let mut env = env.param("method", "unweighted levenberg-marquardt, moment initialization");
    env.push(fit_cells(&fit));
    emit(&env, sink, quiet)
}

const SWEEP_COLUMNS: [&str; 9] =
    ["n_at", "n_gc", "n", "exact_split", "alpha0", "sigma", "max_pg", "rmse", "error"];

fn sweep_cells(row: &SweepRow) -> Vec<Cell> {
    let mut cells = vec![
        Cell::Int(row.spec.n_at),
        Cell::Int(row.spec.n_gc),
        Cell::Int(row.spec.len()),
        Cell::Bool(row.exact_split),
    ];
    match &row.fit {
        Ok(fit) => {
            cells.extend(fit_cells(fit));
            cells.push(Cell::Empty);
        }
        Err(e) => {
            cells.extend([Cell::Empty, Cell::Empty, Cell::Empty, Cell::Empty]);
            cells.push(Cell::Text(e.to_string()));
        }
    }
    cells
}

fn parse_ratio(s: &str) -> Result<(u64, u64), Failure> {
    let bad = || Failure::Usage(format!("ratio must look like GC:AT with positive parts, got {s:?}"));
    let (gc, at) = s.split_once(':').ok_or_else(bad)?;
    let gc: u64 = gc.trim().parse().map_err(|_| bad())?;
    let at: u64 = at.trim().parse().map_err(|_| bad())?;
    if gc == 0 || at == 0 {
        return Err(bad());
    }
    Ok((gc, at))
}

fn cmd_sweep(
    mode: SweepMode,
    n_at: Option<u64>,
    gc_values: &[u64],
    ratio: Option<&str>,
    n_values: &[u64],
    sink: &Sink,
    quiet: bool,
) -> CmdResult {
    let env = match mode {
        SweepMode::FixedAt => {
            let n_at = n_at.ok_or_else(|| Failure::Usage("--at is required".into()))?;
            let rows = sweep_fixed_at(n_at, gc_values)?;
            let list: Vec<String> = gc_values.iter().map(u64::to_string).collect();
            let mut env = Envelope::new("sweep", &SWEEP_COLUMNS)
                .param("mode", "fixed-at")
                .param("n_at", n_at)
                .param("gc_values", list.join(","));
            rows.iter().for_each(|r| env.push(sweep_cells(r)));
            env
        }
        SweepMode::FixedRatio => {
            let text = ratio.ok_or_else(|| Failure::Usage("--ratio is required".into()))?;
            let (gc, at) = parse_ratio(text)?;
            let sweep = sweep_fixed_ratio((gc, at), n_values)?;
            let list: Vec<String> = n_values.iter().map(u64::to_string).collect();
            let mut env = Envelope::new("sweep", &SWEEP_COLUMNS)
                .param("mode", "fixed-ratio")
                .param("ratio_gc_to_at", format!("{gc}:{at}"))
                .param("n_values", list.join(","))
                .param(
                    "rounding",
                    "n_at = round(N * at / (gc + at)), halves up; n_gc = N - n_at; exact_split marks exact rows",
                );
            sweep.rows.iter().for_each(|r| env.push(sweep_cells(r)));
            env.summary.push((
                "slope_alpha0_vs_n",
                sweep.slope.map(Cell::Real).unwrap_or(Cell::Empty),
            ));
            env
        }
    };
    emit(&env, sink, quiet)
}

fn cmd_oracle(n: u64, sink: &Sink, quiet: bool) -> CmdResult {
    let buckets = enumerate_all(n)?;
    let mut env = Envelope::new("oracle", &["n_at", "alpha", "count"]).param("n", n);
    for ((n_at, alpha), count) in buckets {
        env.push(vec![Cell::Int(n_at), Cell::Int(alpha.get()), Cell::Count(count.to_string())]);
    }
    emit(&env, sink, quiet)
}

fn run(cli: Cli) -> CmdResult {
    let quiet = cli.quiet;
    match cli.command {
        Command::Count { alpha, content, format } => cmd_count(alpha, content, format, quiet),
        Command::Pdf { content, sink } => cmd_pdf(content, &sink, quiet),
        Command::Mc { content, runs, seed, sets, sink } => cmd_mc(content, runs, seed, sets, &sink, quiet),
        Command::Converge { content, runs, seed, sets, sink } => {
            cmd_converge(content, &runs, seed, sets, &sink, quiet)
        }
        Command::Fit { n_at, n_gc, input, sink } => cmd_fit(n_at, n_gc, input, &sink, quiet),
        Command::Sweep { mode, n_at, gc_values, ratio, n_values, sink } => {
            cmd_sweep(mode, n_at, &gc_values, ratio.as_deref(), &n_values, &sink, quiet)
        }
        Command::Oracle { n, sink } => cmd_oracle(n, &sink, quiet),
    }
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
        Err(Failure::Internal(msg)) => {
            eprintln!("internal error: {msg}");
            ExitCode::from(3)
        }
        Err(Failure::Io(e)) => {
            eprintln!("i/o error: {e}");
            ExitCode::from(1)
        }
    }
}
