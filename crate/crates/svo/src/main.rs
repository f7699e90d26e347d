use std::fs;
use std::path::PathBuf;
use std::process::ExitCode;
use std::time::Instant;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};
use svo_core::oracle::{self, RegularityCertificate, ShellingMode};
use svo_core::{derive_params, evaluate, FamilySpec, Method, DEFAULT_ORACLE_CAP};

use svo::cache::{CacheEntry, ResultCache};
use svo::classify::classify_fully_regular_line_graphs;
use svo::document::{count_document, oracle_document, params_document, render};
use svo::{input, verify, VerificationReport};

#[derive(Parser)]
#[command(name = "svo", version, about = "Exact counts of successive vertex orderings and hypergraph shellings")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Print the parameter sequence a_0..a_alpha of a family.
    Params {
        #[arg(long)]
        family: FamilySpec,
    },
    /// Count shellings of a family with one method.
    Count {
        #[arg(long)]
        family: FamilySpec,
        /// Method tag; defaults to the summation formula.
        #[arg(long, default_value = "theorem2")]
        method: Method,
        /// Result cache file.
        #[arg(long, env = "SVO_CACHE")]
        cache: Option<PathBuf>,
        /// Largest line graph the oracle method will enumerate.
        #[arg(long, default_value_t = DEFAULT_ORACLE_CAP)]
        cap: usize,
        /// Add elapsed_ms to the output.
        #[arg(long)]
        timing: bool,
    },
    /// Run a verification campaign.
    Verify(VerifyArgs),
    /// Run an oracle on a graph or hypergraph file.
    Oracle {
        file: PathBuf,
        #[arg(long, value_enum, default_value_t = OracleMode::Successive)]
        mode: OracleMode,
        #[arg(long, default_value_t = DEFAULT_ORACLE_CAP)]
        cap: usize,
    },
}

#[derive(clap::Args)]
struct VerifyArgs {
    #[arg(value_enum)]
    campaign: Campaign,
    /// Family for the `family` campaign.
    #[arg(long)]
    family: Option<FamilySpec>,
    #[arg(long)]
    n_max: Option<u32>,
    #[arg(long)]
    m_max: Option<u32>,
    /// Side length of the parameter box.
    #[arg(long = "box")]
    box_size: Option<u32>,
    #[arg(long, default_value_t = 7)]
    max_vertices: usize,
    /// Random samples for the binomial identity.
    #[arg(long, default_value_t = 500)]
    samples: usize,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    #[arg(long, default_value_t = DEFAULT_ORACLE_CAP)]
    cap: usize,
    /// Write the report here instead of standard output.
    #[arg(long)]
    out: Option<PathBuf>,
    /// Worker threads; defaults to one per core.
    #[arg(long)]
    threads: Option<usize>,
    #[arg(long)]
    timing: bool,
}

#[derive(Clone, Copy, ValueEnum)]
enum Campaign {
    Family,
    ConjectureC,
    ConjectureD,
    Bipartite,
    Complete,
    Tripartite,
    Classify,
    Identities,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum OracleMode {
    Successive,
    Shelling,
    Weak,
    Regular,
    Independent,
    EdgeRegularity,
}

impl OracleMode {
    fn name(self) -> &'static str {
        match self {
            OracleMode::Successive => "successive",
            OracleMode::Shelling => "shelling",
            OracleMode::Weak => "weak",
            OracleMode::Regular => "regular",
            OracleMode::Independent => "independent",
            OracleMode::EdgeRegularity => "edge-regularity",
        }
    }
}

#[derive(Debug, thiserror::Error)]
enum CliError {
    #[error(transparent)]
    Core(#[from] svo_core::Error),
    #[error("{path}: {source}")]
    Io { path: PathBuf, source: std::io::Error },
    #[error("{0}")]
    Usage(String),
}

impl CliError {
    fn exit_code(&self) -> u8 {
        match self {
            CliError::Core(svo_core::Error::CapExceeded { .. }) => 3,
            _ => 2,
        }
    }
}

fn io_err(path: &std::path::Path) -> impl FnOnce(std::io::Error) -> CliError + '_ {
    move |source| CliError::Io { path: path.to_path_buf(), source }
}

fn main() -> ExitCode {
    env_logger::Builder::from_env(env_logger::Env::default().default_filter_or("warn")).init();
    let cli = Cli::parse();
    match run(cli.command) {
        Ok(code) => ExitCode::from(code),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code())
        }
    }
}

fn run(command: Command) -> Result<u8, CliError> {
    match command {
        Command::Params { family } => {
            print!("{}", render(&params_document(&family, &derive_params(&family))));
            Ok(0)
        }
        Command::Count { family, method, cache, cap, timing } => {
            let start = Instant::now();
            let mut cache = cache.map(|p| ResultCache::open(&p).map_err(io_err(&p))).transpose()?;
            let cached = cache.as_ref().and_then(|c| c.get(&family, method)).and_then(|e| e.to_result(method));
            let result = match cached {
                Some(r) => {
                    log::info!("cache hit for {family}#{method}");
                    r
                }
                None => {
                    let r = evaluate(&family, method, cap)?;
                    if let Some(c) = cache.as_mut() {
                        let path = c.path().to_path_buf();
                        c.insert(CacheEntry::new(&family, &r)).map_err(io_err(&path))?;
                    }
                    r
                }
            };
            let elapsed = timing.then(|| start.elapsed().as_millis() as u64);
            print!("{}", render(&count_document(&family, &result, elapsed)));
            Ok(0)
        }
        Command::Verify(args) => run_verify(args),
        Command::Oracle { file, mode, cap } => {
            let text = fs::read_to_string(&file).map_err(io_err(&file))?;
            let payload = oracle_payload(&text, mode, cap)?;
            print!("{}", render(&oracle_document(mode.name(), payload)));
            Ok(0)
        }
    }
}

fn run_verify(args: VerifyArgs) -> Result<u8, CliError> {
    if let Some(threads) = args.threads {
        rayon::ThreadPoolBuilder::new()
            .num_threads(threads)
            .build_global()
            .map_err(|e| CliError::Usage(format!("--threads: {e}")))?;
    }
    let report: VerificationReport = match args.campaign {
        Campaign::Family => {
            let family = args.family.ok_or_else(|| CliError::Usage("the family campaign needs --family".into()))?;
            verify::crosscheck_family(&family, args.cap)
        }
        Campaign::ConjectureC => verify::sweep_conjecture_c(args.n_max.unwrap_or(100)),
        Campaign::ConjectureD => verify::sweep_conjecture_d(args.m_max.unwrap_or(50), args.n_max.unwrap_or(50)),
        Campaign::Bipartite => verify::sweep_bipartite(args.box_size.unwrap_or(30)),
        Campaign::Complete => verify::sweep_complete(args.n_max.unwrap_or(60)),
        Campaign::Tripartite => verify::sweep_tripartite(args.box_size.unwrap_or(20)),
        Campaign::Classify => classify_fully_regular_line_graphs(args.max_vertices)?,
        Campaign::Identities => {
            verify::sweep_identities(args.samples, args.seed, i64::from(args.box_size.unwrap_or(15)))
        }
    };
    let text = render(&report.to_json(args.timing));
    match &args.out {
        Some(path) => fs::write(path, text).map_err(io_err(path))?,
        None => print!("{text}"),
    }
    if !report.passed() {
        eprintln!("{}: {} mismatch(es)", report.campaign, report.mismatches.len());
    }
    Ok(if report.passed() { 0 } else { 1 })
}

fn strings(values: &[svo_core::ExactInteger]) -> Vec<String> {
    values.iter().map(|v| v.to_string()).collect()
}

fn oracle_payload(text: &str, mode: OracleMode, cap: usize) -> Result<Value, CliError> {
    if matches!(mode, OracleMode::Shelling | OracleMode::Weak) {
        let h = input::parse_hypergraph(text)?;
        let shelling_mode = if mode == OracleMode::Weak { ShellingMode::Weak } else { ShellingMode::Shelling };
        let count = oracle::count_hypergraph_shellings(&h, shelling_mode, cap)?;
        return Ok(json!({ "count": count.to_string() }));
    }
    let g = input::parse_graph(text)?;
    Ok(match mode {
        OracleMode::Successive => json!({ "count": oracle::count_successive_orderings(&g, cap)?.to_string() }),
        OracleMode::Independent => json!({ "counts": strings(&oracle::independent_set_counts(&g)?) }),
        OracleMode::Regular => match oracle::check_fully_regular(&g)? {
            RegularityCertificate::Regular(params) => json!({
                "fully_regular": true,
                "alpha": params.alpha(),
                "a": strings(params.values()),
            }),
            RegularityCertificate::Irregular(w) => json!({
                "fully_regular": false,
                "witness": {
                    "first": w.first,
                    "first_outside": w.first_outside,
                    "second": w.second,
                    "second_outside": w.second_outside,
                },
            }),
        },
        OracleMode::EdgeRegularity => match oracle::extract_edge_regularity(&g)? {
            Some(er) => json!({ "edge_regular": true, "d": er.d, "lambda": er.lambda, "nu": er.nu }),
            None => json!({ "edge_regular": false }),
        },
        OracleMode::Shelling | OracleMode::Weak => unreachable!(),
    })
}
