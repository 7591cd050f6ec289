use std::fs;
use std::io::{self, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::json;

use meander_core::decompose::{decompose, reconstruct};
use meander_core::enumerate::{
    count_tables_shard, enumerate_shard, series_from_table, Census, CountTable,
};
use meander_core::series::{phi_s, solve_phi_is};
use meander_core::structure::common_intervals;
use meander_core::verify::{parse_valid, Suite, Verifier, VerifyConfig};
use meander_core::{
    render, Class, ClassFilter, Convention, Error, MeanderCode, OpExpr, Order, RenderFormat, Shard,
};

#[derive(Parser)]
#[command(name = "meander", version, about = "Singular meanders: census, decomposition, composition and series checks")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Count or list meanders by order.
    Enumerate(EnumerateArgs),
    /// Print the class of a meander and its number of submeanders.
    Classify { code: String },
    /// Print the canonical decomposition and check that it rebuilds the input.
    Decompose {
        code: String,
        #[arg(long, value_enum, default_value_t = TextOrJson::Text)]
        format: TextOrJson,
    },
    /// Evaluate an insertion expression such as `ins(T|1, T1, CC|1,2)`.
    Compose { expr: String },
    /// Run verification suites and report.
    Verify(VerifyArgs),
    /// Draw a meander.
    Render {
        code: String,
        #[arg(long, default_value = "ascii")]
        format: RenderFormat,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Print the coefficients of a generating function.
    Series {
        #[arg(value_enum)]
        which: Which,
        #[arg(long, default_value_t = 8)]
        max_order: usize,
        #[arg(long, value_enum, default_value_t = TableFormat::Text)]
        format: TableFormat,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum TextOrJson {
    Text,
    Json,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum TableFormat {
    Csv,
    Json,
    Text,
}

#[derive(Clone, Copy, ValueEnum)]
enum Which {
    /// Snakes, from the closed form.
    PhiS,
    /// Iterated snakes, from the fixed point.
    PhiIs,
    /// Irreducible meanders, from the census.
    PhiIr,
    /// All meanders, from the census.
    Psi,
}

#[derive(Args)]
struct EnumerateArgs {
    /// Every order with n + k up to this.
    #[arg(long, conflicts_with = "order")]
    max_order: Option<usize>,
    /// A single order, as `n,k`.
    #[arg(long, value_parser = parse_order)]
    order: Option<Order>,
    #[arg(long, default_value = "all")]
    class: ClassFilter,
    /// Print count tables (the default).
    #[arg(long, conflicts_with = "list")]
    counts: bool,
    /// Print the codes themselves, one per line.
    #[arg(long)]
    list: bool,
    #[arg(long, value_enum, default_value_t = TableFormat::Csv)]
    format: TableFormat,
    /// Only part `i` of `N`, as `i/N`.
    #[arg(long, default_value = "0/1")]
    shard: Shard,
    #[arg(short, long)]
    output: Option<PathBuf>,
}

#[derive(Args)]
struct VerifyArgs {
    /// Suites to run; all of them when omitted.
    #[arg(long, value_delimiter = ',')]
    suite: Vec<Suite>,
    /// Overrides each suite's default total order.
    #[arg(long)]
    max_order: Option<usize>,
    #[arg(long, default_value = "split-units")]
    convention: Convention,
    #[arg(long, default_value_t = 2024)]
    seed: u64,
    #[arg(long, default_value_t = 1000)]
    samples: usize,
    /// Write the JSON report here.
    #[arg(short, long)]
    output: Option<PathBuf>,
    /// Print the JSON report instead of the summary.
    #[arg(long)]
    json: bool,
}

fn parse_order(s: &str) -> Result<Order, String> {
    let (n, k) = s.split_once(',').ok_or("expected n,k")?;
    let n = n.trim().parse().map_err(|e| format!("{e}"))?;
    let k = k.trim().parse().map_err(|e| format!("{e}"))?;
    Ok(Order::new(n, k))
}

#[derive(Debug)]
enum CliError {
    Meander(Error),
    Io(io::Error),
}

impl From<Error> for CliError {
    fn from(e: Error) -> Self {
        CliError::Meander(e)
    }
}

impl From<io::Error> for CliError {
    fn from(e: io::Error) -> Self {
        CliError::Io(e)
    }
}

impl std::fmt::Display for CliError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            CliError::Meander(e) => write!(f, "{e}"),
            CliError::Io(e) => write!(f, "i/o: {e}"),
        }
    }
}

fn emit(output: Option<&PathBuf>, text: &str) -> Result<(), CliError> {
    match output {
        Some(path) => fs::write(path, text)?,
        None => io::stdout().lock().write_all(text.as_bytes())?,
    }
    Ok(())
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.command) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::FAILURE,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}

fn run(command: Command) -> Result<bool, CliError> {
    match command {
        Command::Enumerate(args) => enumerate(args).map(|_| true),
        Command::Classify { code } => {
            let code = parse_valid(&code)?;
            let submeanders = common_intervals(&code).len();
            println!("{}", Class::of(&code));
            println!("submeanders: {submeanders}");
            Ok(true)
        }
        Command::Decompose { code, format } => {
            let code = parse_valid(&code)?;
            let tree = decompose(&code)?;
            let back = reconstruct(&tree)?;
            let ok = back == code && tree.check_soundness().is_ok();
            match format {
                TextOrJson::Text => {
                    print!("{}", tree.to_text());
                    println!("round trip: {}", if ok { "ok" } else { "FAILED" });
                }
                TextOrJson::Json => {
                    let j = json!({"code": code.to_string(), "tree": tree.to_json(), "round_trip": ok});
                    println!("{}", serde_json::to_string_pretty(&j).map_err(Error::from)?);
                }
            }
            Ok(ok)
        }
        Command::Compose { expr } => {
            let code = OpExpr::parse(&expr)?.eval()?;
            println!("{code}");
            println!("order {}", code.order());
            Ok(true)
        }
        Command::Verify(args) => verify(args),
        Command::Render { code, format, output } => {
            let code = parse_valid(&code)?;
            emit(output.as_ref(), &render(&code, format)?)?;
            Ok(true)
        }
        Command::Series { which, max_order, format } => {
            let series = match which {
                Which::PhiS => phi_s(max_order),
                Which::PhiIs => solve_phi_is(max_order)?,
                Which::PhiIr => series_from_table(&count_tables_shard(max_order, Shard::WHOLE).irreducible),
                Which::Psi => series_from_table(&count_tables_shard(max_order, Shard::WHOLE).all),
            };
            let text = match format {
                TableFormat::Csv => series.to_csv(),
                TableFormat::Json => format!("{}\n", series.to_json()),
                TableFormat::Text => format!("{series}\n"),
            };
            emit(None, &text)?;
            Ok(true)
        }
    }
}

fn enumerate(args: EnumerateArgs) -> Result<(), CliError> {
    let (max_total, only) = match (args.order, args.max_order) {
        (Some(o), _) => (o.total(), Some(o)),
        (None, Some(t)) => (t, None),
        (None, None) => (2, None),
    };
    if max_total > meander_core::enumerate::MAX_TOTAL_ORDER {
        return Err(Error::Syntax {
            at: 0,
            msg: format!("total order {max_total} exceeds {}", meander_core::enumerate::MAX_TOTAL_ORDER),
        }
        .into());
    }
    let text = if args.list {
        // The empty meander is listed only when nothing else is asked for.
        let lo = only.map_or(usize::from(max_total > 0), |o| o.total());
        let codes: Vec<MeanderCode> = (lo..=max_total)
            .flat_map(|n| enumerate_shard(n, args.class, args.shard))
            .filter(|c| only.is_none_or(|o| c.order() == o))
            .collect();
        match args.format {
            TableFormat::Json => format!("{}\n", serde_json::to_string(&codes).map_err(Error::from)?),
            _ => codes.iter().map(|c| format!("{c}\n")).collect(),
        }
    } else {
        let census = count_tables_shard(max_total, args.shard);
        let mut tables = selected_tables(&census, args.class);
        if let Some(o) = only {
            for t in &mut tables {
                t.counts.retain(|&key, _| key == (o.n, o.k));
            }
        }
        match args.format {
            TableFormat::Csv => {
                let mut out = String::from("n,k,class,count\n");
                tables.iter().for_each(|t| out.push_str(&t.csv_rows()));
                out
            }
            TableFormat::Json => format!("{}\n", serde_json::to_string_pretty(&tables).map_err(Error::from)?),
            TableFormat::Text => {
                let mut out = String::new();
                for t in &tables {
                    out.push_str(&format!("{}\n", t.class));
                    for (&(n, k), &c) in &t.counts {
                        out.push_str(&format!("  ({n},{k}) {c}\n"));
                    }
                }
                out
            }
        }
    };
    emit(args.output.as_ref(), &text)
}

fn selected_tables(census: &Census, class: ClassFilter) -> Vec<CountTable> {
    match class {
        ClassFilter::All => census.tables().into_iter().cloned().collect(),
        ClassFilter::Snake => vec![census.snake.clone()],
        ClassFilter::IteratedSnake => vec![census.iterated_snake.clone()],
        ClassFilter::Irreducible => vec![census.irreducible.clone()],
        ClassFilter::Composite => {
            let mut t = census.all.clone();
            t.class = "composite".to_string();
            for (&(n, k), c) in t.counts.iter_mut() {
                let rest = census.iterated_snake.get(n, k) + census.irreducible.get(n, k);
                *c = if n + k == 0 { 0 } else { *c - rest };
            }
            vec![t]
        }
    }
}

fn verify(args: VerifyArgs) -> Result<bool, CliError> {
    let suites = if args.suite.is_empty() { Suite::ALL.to_vec() } else { args.suite };
    let mut verifier = Verifier::new(VerifyConfig {
        max_order: args.max_order,
        convention: args.convention,
        seed: args.seed,
        samples: args.samples,
    });
    let report = verifier.run_all(&suites);
    let text = serde_json::to_string_pretty(&report.to_json()).map_err(Error::from)?;
    if let Some(path) = &args.output {
        fs::write(path, format!("{text}\n"))?;
    }
    if args.json {
        println!("{text}");
    } else {
        println!("seed {} convention {}", report.seed, report.convention);
        for s in &report.suites {
            let status = format!("{:?}", s.status).to_uppercase();
            println!(
                "{status:4} {:20} max-order {:2} checked {} failures {}",
                s.suite, s.max_order, s.checked, s.failure_count
            );
            for f in &s.failures {
                println!("     {f}");
            }
        }
    }
    Ok(report.passed)
}
