use std::fs;
use std::io::{self, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use anyhow::Context;
use clap::{Args, Parser, Subcommand, ValueEnum};

use toric_cli::exit_code;
use toric_cli::render::{render, Format, RenderOptions};
use toric_core::census::{
    default_cache_path, identify, parse_appendix, run_census, verify_appendix, CensusOptions, InvariantTable, RowStatus,
    BUNDLED_APPENDIX, BUNDLED_PD,
};
use toric_core::diagram::{simplify, trace};
use toric_core::enumerate::{count_parallel, enumerate_parallel, EnumOptions};
use toric_core::generators::{solve_hv, GenParams, GeneratorRegistry};
use toric_core::invariants::DEFAULT_BUDGET;
use toric_core::{Boundary, Error, Mosaic, Tile};

#[derive(Parser)]
#[command(name = "toric", version, about = "Toric knot mosaics: construction, enumeration, tracing and identification")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Join rows of base-11 digits into a mosaic code.
    Encode {
        /// One argument per row, e.g. `127 89a 439`.
        #[arg(required = true)]
        rows: Vec<String>,
    },
    /// Print a code as a grid of digits.
    Decode { code: String },
    /// Check suitable connectedness; exits 1 when the mosaic is not.
    Validate {
        code: String,
        /// Require blank outer edges instead of torus identification.
        #[arg(long)]
        classical: bool,
    },
    /// Draw a mosaic as ASCII or SVG.
    Render {
        code: String,
        #[arg(long, value_enum, default_value = "ascii")]
        format: RenderFormat,
        #[arg(long, default_value_t = 40, value_parser = clap::value_parser!(u32).range(1..))]
        cell_size: u32,
        #[arg(long)]
        grid: bool,
        /// Also draw closure arcs and hidden crossings (SVG).
        #[arg(long)]
        hidden: bool,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Print the PD code of the traced diagram.
    Trace {
        code: String,
        /// Apply Reidemeister I and II reductions first.
        #[arg(long)]
        simplify: bool,
    },
    /// Name the knot a mosaic represents.
    Identify {
        code: String,
        #[arg(long, default_value_t = DEFAULT_BUDGET)]
        budget: usize,
    },
    /// Optimal (h, v) for the one-braid construction.
    SolveHv {
        #[arg(long)]
        p: i64,
        #[arg(long)]
        q: i64,
    },
    /// Build a mosaic with a registered generator.
    Gen(GenArgs),
    /// List suitably connected toric mosaics, one code per line.
    Enumerate {
        #[command(flatten)]
        search: SearchArgs,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Count suitably connected toric mosaics.
    Count {
        #[command(flatten)]
        search: SearchArgs,
    },
    /// Trace and identify every mosaic of one size; CSV of the knot rows.
    Census {
        #[arg(long)]
        n: usize,
        /// One row per identified knot: its least code.
        #[arg(long, conflicts_with = "all")]
        witnesses: bool,
        /// Include link rows.
        #[arg(long)]
        all: bool,
        #[arg(long)]
        out: Option<PathBuf>,
        #[arg(long)]
        jobs: Option<usize>,
        #[arg(long, default_value_t = DEFAULT_BUDGET)]
        budget: usize,
    },
    /// Check every row of an appendix listing (bundled by default).
    VerifyAppendix {
        #[arg(long)]
        file: Option<PathBuf>,
        #[arg(long)]
        jobs: Option<usize>,
        #[arg(long, default_value_t = DEFAULT_BUDGET)]
        budget: usize,
    },
    /// Invariant table maintenance.
    Table {
        #[command(subcommand)]
        action: TableAction,
    },
}

#[derive(Copy, Clone, ValueEnum)]
enum RenderFormat {
    Ascii,
    Svg,
}

#[derive(Args)]
struct GenArgs {
    /// Generator name, e.g. one-braid, full-braid or naive.
    generator: String,
    #[arg(long)]
    p: Option<i64>,
    #[arg(long)]
    q: Option<i64>,
    #[arg(long)]
    n: Option<usize>,
    /// Braid rows for one-braid instead of the solver's choice (with --v).
    #[arg(long, requires = "v")]
    h: Option<i64>,
    #[arg(long, requires = "h")]
    v: Option<i64>,
}

#[derive(Args)]
struct SearchArgs {
    #[arg(long)]
    n: usize,
    /// One representative per translation class.
    #[arg(long)]
    symmetry: bool,
    /// Fixed leading tiles of the first row.
    #[arg(long)]
    prefix: Option<String>,
    #[arg(long)]
    jobs: Option<usize>,
}

#[derive(Subcommand)]
enum TableAction {
    /// Compute the invariant table and write the cache.
    Build {
        /// PD source, `name<TAB>PD[...]` per line (bundled by default).
        #[arg(long)]
        pd: Option<PathBuf>,
        #[arg(long)]
        cache: Option<PathBuf>,
    },
}

/// Failure with its exit status.
struct Failure {
    code: u8,
    err: anyhow::Error,
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure { code: exit_code(&e), err: e.into() }
    }
}

impl From<anyhow::Error> for Failure {
    fn from(err: anyhow::Error) -> Self {
        let code = err.downcast_ref::<Error>().map_or(1, exit_code);
        Failure { code, err }
    }
}

impl From<io::Error> for Failure {
    fn from(e: io::Error) -> Self {
        Failure { code: 1, err: e.into() }
    }
}

type Outcome = Result<ExitCode, Failure>;

fn usage(msg: String) -> Failure {
    Failure { code: 2, err: anyhow::anyhow!(msg) }
}

fn decode(code: &str) -> Result<Mosaic, Failure> {
    Mosaic::decode(code).map_err(|e| Failure { code: 2, err: anyhow::anyhow!("invalid mosaic code {code:?}: {e}") })
}

fn emit(text: &str, out: Option<&PathBuf>) -> Result<(), Failure> {
    match out {
        Some(path) => fs::write(path, text).with_context(|| format!("writing {}", path.display()))?,
        None => io::stdout().lock().write_all(text.as_bytes())?,
    }
    Ok(())
}

/// Runs `f` on a pool of `jobs` workers, or on the global pool.
fn with_jobs<T: Send>(jobs: Option<usize>, f: impl FnOnce() -> T + Send) -> Result<T, Failure> {
    match jobs {
        None => Ok(f()),
        Some(0) => Err(usage("--jobs must be positive".into())),
        Some(k) => {
            let pool = rayon::ThreadPoolBuilder::new().num_threads(k).build().context("starting workers")?;
            Ok(pool.install(f))
        }
    }
}

fn table() -> Result<InvariantTable, Failure> {
    Ok(InvariantTable::bundled_cached()?)
}

fn search_options(a: &SearchArgs) -> Result<EnumOptions, Failure> {
    let prefix = match &a.prefix {
        None => Vec::new(),
        Some(p) => p
            .chars()
            .map(Tile::from_digit)
            .collect::<Result<Vec<_>, _>>()
            .map_err(|e| usage(format!("invalid prefix {p:?}: {e}")))?,
    };
    Ok(EnumOptions { n: a.n, symmetry_reduce: a.symmetry, prefix })
}

fn run(cli: Cli) -> Outcome {
    match cli.command {
        Command::Encode { rows } => {
            let kinds = rows
                .iter()
                .map(|r| r.chars().map(|c| Tile::from_digit(c).map(Tile::kind)).collect::<Result<Vec<u8>, _>>())
                .collect::<Result<Vec<_>, _>>()
                .and_then(|k| Mosaic::from_rows(&k))
                .map_err(|e| usage(format!("invalid rows: {e}")))?;
            let m = kinds;
            println!("{}", m.encode());
        }
        Command::Decode { code } => {
            let m = decode(&code)?;
            for row in m.rows() {
                let digits: Vec<String> = row.iter().map(|t| t.digit().to_string()).collect();
                println!("{}", digits.join(" "));
            }
        }
        Command::Validate { code, classical } => {
            let m = decode(&code)?;
            let boundary = if classical { Boundary::Classical } else { Boundary::Toric };
            let ok = m.is_suitably_connected(boundary);
            println!("{}", if ok { "suitably connected" } else { "not suitably connected" });
            if !ok {
                return Ok(ExitCode::from(1));
            }
        }
        Command::Render { code, format, cell_size, grid, hidden, out } => {
            let m = decode(&code)?;
            let opts = RenderOptions {
                format: match format {
                    RenderFormat::Ascii => Format::Ascii,
                    RenderFormat::Svg => Format::Svg,
                },
                cell_size,
                show_grid: grid,
                highlight_hidden: hidden,
            };
            emit(&render(&m, &opts), out.as_ref())?;
        }
        Command::Trace { code, simplify: reduce } => {
            let m = decode(&code)?;
            let mut d = trace(&m)?;
            if reduce {
                d = simplify(&d);
            }
            println!("{}", d.pd_code());
            eprintln!("components: {}, crossings: {}", d.component_count(), d.crossing_count());
        }
        Command::Identify { code, budget } => {
            let m = decode(&code)?;
            let d = trace(&m)?;
            if d.component_count() != 1 {
                println!("link");
                eprintln!("{} components", d.component_count());
                return Ok(ExitCode::SUCCESS);
            }
            let out = identify(&d, &table()?, budget)?;
            println!("{}", out.identification);
            for (name, why) in &out.excluded {
                eprintln!("excluded {name} by {why}");
            }
        }
        Command::SolveHv { p, q } => match solve_hv(p, q)? {
            Some(plan) => println!("h={} v={} n={}", plan.h, plan.v, plan.n()),
            None => {
                println!("infeasible");
                return Ok(ExitCode::from(1));
            }
        },
        Command::Gen(a) => {
            let params = GenParams { p: a.p, q: a.q, n: a.n, h: a.h, v: a.v };
            let c = GeneratorRegistry::builtin().generate(&a.generator, &params)?;
            println!("{}", c.mosaic.encode());
            eprintln!("({}, {}) {}", c.p, c.q, c.detail);
        }
        Command::Enumerate { search, out } => {
            let opts = search_options(&search)?;
            let mosaics = with_jobs(search.jobs, || enumerate_parallel(&opts))??;
            let mut text = String::with_capacity(mosaics.len() * (opts.n * opts.n + 1));
            for m in &mosaics {
                text.push_str(&m.encode());
                text.push('\n');
            }
            emit(&text, out.as_ref())?;
        }
        Command::Count { search } => {
            let opts = search_options(&search)?;
            println!("{}", with_jobs(search.jobs, || count_parallel(&opts))??);
        }
        Command::Census { n, witnesses, all, out, jobs, budget } => {
            let t = table()?;
            let opts = CensusOptions { budget, ..Default::default() };
            let report = with_jobs(jobs, || run_census(n, &t, &opts))??;
            let csv = if witnesses {
                report.witness_csv()
            } else if all {
                report.to_csv()
            } else {
                report.knot_csv()
            };
            emit(&csv, out.as_ref())?;
            eprintln!(
                "n={n}: {} mosaics, {} links, knots: {}",
                report.rows.len(),
                report.links,
                report.knots.iter().cloned().collect::<Vec<_>>().join(" ")
            );
            for line in report.discrepancies(&report.knots) {
                eprintln!("{line}");
            }
        }
        Command::VerifyAppendix { file, jobs, budget } => {
            let text = match &file {
                Some(path) => fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))?,
                None => BUNDLED_APPENDIX.to_string(),
            };
            let rows = parse_appendix(&text)?;
            let t = table()?;
            let verdicts = with_jobs(jobs, || verify_appendix(&rows, &t, budget))??;
            let mut text = String::new();
            for v in &verdicts {
                text.push_str(&v.to_string());
                text.push('\n');
            }
            emit(&text, None)?;
            let tally = |s: RowStatus| verdicts.iter().filter(|v| v.status == s).count();
            eprintln!(
                "{} PASS, {} AMBIGUOUS, {} FAIL, {} SKIP",
                tally(RowStatus::Pass),
                tally(RowStatus::Ambiguous),
                tally(RowStatus::Fail),
                tally(RowStatus::Skip)
            );
        }
        Command::Table { action: TableAction::Build { pd, cache } } => {
            let text = match &pd {
                Some(path) => fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))?,
                None => BUNDLED_PD.to_string(),
            };
            let cache = cache.unwrap_or_else(default_cache_path);
            let (t, reused) = InvariantTable::load_or_build(&text, &cache)?;
            println!("{} records -> {}", t.len(), cache.display());
            if reused {
                eprintln!("cache was current");
            }
        }
    }
    Ok(ExitCode::SUCCESS)
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { 2 } else { 0 });
        }
    };
    match run(cli) {
        Ok(code) => code,
        Err(f) => {
            eprintln!("error: {:#}", f.err);
            ExitCode::from(f.code)
        }
    }
}
