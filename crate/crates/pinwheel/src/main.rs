use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};

use pinwheel::expansion::{expand_graph_formula, expand_graph_formula_simplified, OmegaMonomial};
use pinwheel::omega_kappa::{kappa_top, omega_top, KappaMonomial};
use pinwheel::psi::PsiOracle;
use pinwheel::render::{render_expansion, render_value, OutputFormat};
use pinwheel::vectors::multisets;
use pinwheel::{selftest, Error, Rational};

/// Environment variable giving the default cache directory when
/// `--cache-dir` is not passed.
const CACHE_DIR_ENV: &str = "PINWHEEL_CACHE_DIR";
const CACHE_FILE_NAME: &str = "psi_cache.jsonl";

#[derive(Parser)]
#[command(
    name = "pinwheel",
    version,
    about = "Exact top intersections of psi, omega and kappa classes on moduli of stable curves",
    after_help = "Values are exact rationals. The optional cache directory \
                  (--cache-dir or PINWHEEL_CACHE_DIR) persists computed psi \
                  correlators between runs; it is an optimization only."
)]
struct Cli {
    /// Directory holding the persistent psi-value cache
    #[arg(long, global = true, value_name = "DIR")]
    cache_dir: Option<PathBuf>,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Top intersection of psi classes: <tau_{k_1} ... tau_{k_n}>_g
    Psi(PsiArgs),
    /// Top intersection of omega classes (stable psi classes)
    Omega(OmegaArgs),
    /// Top intersection of kappa classes on the unmarked genus-g space
    Kappa(KappaArgs),
    /// Expand an omega monomial into signed psi-decorated pinwheel strata
    Expand(ExpandArgs),
    /// All top intersections for a fixed genus and mark count, one row per
    /// exponent multiset
    Table(TableArgs),
    /// Run the built-in verification suite and report each check
    Selftest,
    /// Inspect or clear the persistent value cache
    Cache {
        #[command(subcommand)]
        action: CacheAction,
    },
}

#[derive(Args)]
struct PsiArgs {
    /// Genus of the curves
    #[arg(long)]
    genus: u32,
    /// Comma-separated psi exponents k_1,...,k_n
    #[arg(long, value_parser = parse_u64_list, value_name = "K1,K2,...")]
    exponents: U64List,
    #[arg(long, default_value = "plain", value_parser = parse_format)]
    format: OutputFormat,
}

#[derive(Args)]
struct OmegaArgs {
    /// Genus of the curves (at least 1)
    #[arg(long)]
    genus: u32,
    /// Comma-separated omega exponents k_1,...,k_n
    #[arg(long, value_parser = parse_u64_list, value_name = "K1,K2,...")]
    exponents: U64List,
    #[arg(long, default_value = "plain", value_parser = parse_format)]
    format: OutputFormat,
}

#[derive(Args)]
struct KappaArgs {
    /// Genus of the curves (at least 2)
    #[arg(long)]
    genus: u32,
    /// Comma-separated kappa indices l_1,...,l_n
    #[arg(long, value_parser = parse_u64_list, value_name = "L1,L2,...")]
    indices: U64List,
    #[arg(long, default_value = "plain", value_parser = parse_format)]
    format: OutputFormat,
}

#[derive(Args)]
struct ExpandArgs {
    /// Genus of the curves (at least 1); the term structure itself is
    /// genus-independent
    #[arg(long)]
    genus: u32,
    /// Comma-separated omega exponents k_1,...,k_n
    #[arg(long, value_parser = parse_u64_list, value_name = "K1,K2,...")]
    exponents: U64List,
    /// Drop series terms that vanish on their rational tail for dimension
    /// reasons (tail exponent above |P_j| - 2)
    #[arg(long)]
    simplify: bool,
    #[arg(long, default_value = "plain", value_parser = parse_format)]
    format: OutputFormat,
}

#[derive(Args)]
struct TableArgs {
    /// Genus of the curves
    #[arg(long)]
    genus: u32,
    /// Number of marked points (psi, omega) or kappa indices (kappa)
    #[arg(long)]
    marks: usize,
    /// Which classes to tabulate
    #[arg(long, default_value = "psi", value_parser = ["psi", "omega", "kappa"])]
    kind: String,
    #[arg(long, default_value = "plain", value_parser = parse_format)]
    format: OutputFormat,
}

#[derive(Subcommand)]
enum CacheAction {
    /// Show the cache location and record count
    Inspect,
    /// Delete the cache file
    Clear,
}

/// Comma-separated list of non-negative integers, as a single argument.
#[derive(Debug, Clone)]
struct U64List(Vec<u64>);

fn parse_u64_list(text: &str) -> Result<U64List, String> {
    let entries: Result<Vec<u64>, String> = text
        .split(',')
        .map(|piece| {
            piece
                .trim()
                .parse::<u64>()
                .map_err(|_| format!("{piece:?} is not a non-negative integer"))
        })
        .collect();
    let entries = entries?;
    if entries.is_empty() {
        return Err("expected at least one entry".into());
    }
    Ok(U64List(entries))
}

fn parse_format(text: &str) -> Result<OutputFormat, String> {
    text.parse().map_err(|err: Error| err.to_string())
}

fn resolve_cache_file(flag: &Option<PathBuf>) -> Option<PathBuf> {
    let dir = flag
        .clone()
        .or_else(|| std::env::var_os(CACHE_DIR_ENV).map(PathBuf::from))?;
    Some(dir.join(CACHE_FILE_NAME))
}

/// Build an oracle, warmed from the cache file when one is configured.
fn oracle_with_cache(cache_file: &Option<PathBuf>) -> Result<PsiOracle, Error> {
    let oracle = PsiOracle::new();
    if let Some(path) = cache_file {
        oracle.cache().load_file(path)?;
    }
    Ok(oracle)
}

fn persist_cache(oracle: &PsiOracle, cache_file: &Option<PathBuf>) -> Result<(), Error> {
    if let Some(path) = cache_file {
        oracle.cache().save_file(path)?;
    }
    Ok(())
}

fn run(cli: Cli) -> Result<ExitCode, Error> {
    let cache_file = resolve_cache_file(&cli.cache_dir);
    match cli.command {
        Command::Psi(args) => {
            let oracle = oracle_with_cache(&cache_file)?;
            let value = oracle.psi_top(args.genus, &args.exponents.0)?;
            println!("{}", render_value(&value, args.format));
            persist_cache(&oracle, &cache_file)?;
        }
        Command::Omega(args) => {
            let oracle = oracle_with_cache(&cache_file)?;
            let monomial = OmegaMonomial::new(args.genus, args.exponents.0)?;
            let value = omega_top(&oracle, &monomial)?;
            println!("{}", render_value(&value, args.format));
            persist_cache(&oracle, &cache_file)?;
        }
        Command::Kappa(args) => {
            let oracle = oracle_with_cache(&cache_file)?;
            let monomial = KappaMonomial::new(args.genus, args.indices.0)?;
            let value = kappa_top(&oracle, &monomial)?;
            println!("{}", render_value(&value, args.format));
            persist_cache(&oracle, &cache_file)?;
        }
        Command::Expand(args) => {
            let monomial = OmegaMonomial::new(args.genus, args.exponents.0)?;
            let terms = if args.simplify {
                expand_graph_formula_simplified(&monomial)
            } else {
                expand_graph_formula(&monomial)
            };
            println!("{}", render_expansion(&terms, args.format));
        }
        Command::Table(args) => {
            let oracle = oracle_with_cache(&cache_file)?;
            print_table(&oracle, &args)?;
            persist_cache(&oracle, &cache_file)?;
        }
        Command::Selftest => {
            let oracle = oracle_with_cache(&cache_file)?;
            let reports = selftest::run_all(&oracle);
            let mut failures = 0;
            for report in &reports {
                println!("{}", report.summary_line());
                if !(report.passed && report.within_budget()) {
                    failures += 1;
                }
            }
            persist_cache(&oracle, &cache_file)?;
            if failures > 0 {
                eprintln!("{failures} of {} checks failed", reports.len());
                return Ok(ExitCode::from(2));
            }
            println!("all {} checks passed", reports.len());
        }
        Command::Cache { action } => match action {
            CacheAction::Inspect => match &cache_file {
                None => println!("no cache configured (pass --cache-dir or set {CACHE_DIR_ENV})"),
                Some(path) => {
                    if path.exists() {
                        let cache = pinwheel::PsiCache::new();
                        let records = cache.load_file(path)?;
                        println!("{}: {records} records", path.display());
                    } else {
                        println!("{}: missing (will be created on first use)", path.display());
                    }
                }
            },
            CacheAction::Clear => match &cache_file {
                None => println!("no cache configured (pass --cache-dir or set {CACHE_DIR_ENV})"),
                Some(path) => {
                    if path.exists() {
                        std::fs::remove_file(path)?;
                        println!("removed {}", path.display());
                    } else {
                        println!("{}: already clear", path.display());
                    }
                }
            },
        },
    }
    Ok(ExitCode::SUCCESS)
}

fn print_table(oracle: &PsiOracle, args: &TableArgs) -> Result<(), Error> {
    let genus = args.genus as i64;
    let total = match args.kind.as_str() {
        "kappa" => 3 * genus - 3,
        _ => 3 * genus - 3 + args.marks as i64,
    };
    if args.marks == 0 {
        return Err(Error::invalid("need at least one mark or index"));
    }
    if total < 0 || (args.kind != "kappa" && 2 * genus - 2 + args.marks as i64 <= 0) {
        return Err(Error::invalid(format!(
            "no table for genus {} with {} marks",
            args.genus, args.marks
        )));
    }
    for exponents in multisets(total as u64, args.marks) {
        let value: Rational = match args.kind.as_str() {
            "psi" => oracle.psi_top(args.genus, &exponents)?,
            "omega" => omega_top(oracle, &OmegaMonomial::new(args.genus, exponents.clone())?)?,
            "kappa" => kappa_top(oracle, &KappaMonomial::new(args.genus, exponents.clone())?)?,
            _ => unreachable!("clap restricts the kind"),
        };
        let joined = exponents
            .iter()
            .map(|k| k.to_string())
            .collect::<Vec<_>>()
            .join(",");
        match args.format {
            OutputFormat::Plain => {
                println!("{joined}\t{}", render_value(&value, OutputFormat::Plain));
            }
            OutputFormat::Json => {
                println!(
                    "{{\"exponents\":[{joined}],{}}}",
                    render_value(&value, OutputFormat::Json)
                        .trim_start_matches('{')
                        .trim_end_matches('}')
                );
            }
            OutputFormat::Latex => {
                println!(
                    "{joined} & {} \\\\",
                    render_value(&value, OutputFormat::Latex)
                );
            }
        }
    }
    Ok(())
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(err) => {
            // clap exits 2 on usage errors by default; this tool reserves 2
            // for integrity failures and uses 1 for usage problems
            let code = if err.use_stderr() { 1 } else { 0 };
            let _ = err.print();
            return ExitCode::from(code);
        }
    };
    match run(cli) {
        Ok(code) => code,
        Err(err) => {
            eprintln!("error: {err}");
            ExitCode::from(err.exit_code() as u8)
        }
    }
}
