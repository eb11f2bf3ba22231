mod report;

use std::io::{self, Read};
use std::process::ExitCode;
use std::time::{Duration, Instant};

use clap::{Parser, Subcommand, ValueEnum};
use nakayama::bijections::{
    bounded_product_to_dyck, dyck_to_bounded_product, dyck_to_linear, dyck_to_m1, dyck_to_sincere,
    linear_to_dyck, m1_to_dyck, sincere_to_dyck,
};
use nakayama::enumeration::{
    bounce_distribution, cyclic_finite_gldim_counts, cyclic_gldim_distribution, enumerate_connected_linear,
    enumerate_cyclic, enumerate_cyclic_finite_gldim, enumerate_cyclic_raw, enumerate_dyck_paths,
    enumerate_linear_products, enumerate_m1, enumerate_ordered_trees, gldim_distribution, height_distribution,
};
use nakayama::{Distribution, DyckPath, Error, KupischSeries, Suite, SuiteReport};
use serde::Serialize;

use report::{AnalysisReport, PathReport};

#[derive(Parser)]
#[command(name = "nakayama", version, about = "Nakayama algebras, Dyck paths and their bijections")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Human,
    Json,
    Csv,
}

#[derive(Subcommand)]
enum Command {
    /// Report the invariants of a Kupisch series or a Dyck path.
    ///
    /// Series: `[3,4,4,3,2,1]`, `cyclic:[3,3,3,4]`, `linear:[2,1]`.
    /// Paths: a U/D word such as `UUDUDD`. `-` reads the input from stdin.
    Analyze {
        input: String,
        /// Read a bracketed list as the area sequence of a path.
        #[arg(long)]
        path: bool,
        #[arg(long, value_enum, default_value = "human")]
        format: Format,
    },
    /// Run exhaustive property suites.
    Verify {
        /// Suite to run (repeatable); all suites when omitted.
        #[arg(long = "suite", value_parser = parse_suite)]
        suites: Vec<Suite>,
        /// Size bound; each suite has its own default.
        #[arg(long)]
        n: Option<usize>,
        /// Run suites one after another instead of in parallel.
        #[arg(long)]
        sequential: bool,
        /// List the suites and their default bounds.
        #[arg(long)]
        list: bool,
        #[arg(long, value_enum, default_value = "human")]
        format: Format,
    },
    /// List every object of a family.
    Enumerate {
        #[arg(value_enum)]
        family: Family,
        /// Number of simples, semilength or vertex count, by family.
        #[arg(long)]
        n: usize,
        /// Largest Kupisch entry for `cyclic` (default `2n - 1`).
        #[arg(long)]
        max_entry: Option<usize>,
        /// Keep every rotation of cyclic series instead of one per class.
        #[arg(long)]
        raw: bool,
        /// Print only the number of objects.
        #[arg(long)]
        count: bool,
        #[arg(long, value_enum, default_value = "human")]
        format: Format,
    },
    /// Tabulate a statistic over a family.
    Distribution {
        #[arg(value_enum)]
        statistic: Statistic,
        /// Number of simples.
        #[arg(long)]
        n: usize,
        #[arg(long, value_enum, default_value = "human")]
        format: Format,
    },
    /// Apply one of the algebra and Dyck path bijections.
    Bijection {
        #[arg(value_enum)]
        map: Map,
        /// Algebra to path.
        #[arg(long, conflicts_with = "from_dyck", required_unless_present = "from_dyck")]
        to_dyck: bool,
        /// Path to algebra.
        #[arg(long)]
        from_dyck: bool,
        /// Global dimension bound for `bounded`.
        #[arg(long, required_if_eq("map", "bounded"))]
        g: Option<usize>,
        input: String,
        #[arg(long, value_enum, default_value = "human")]
        format: Format,
    },
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Family {
    /// Connected linear algebras with n simples.
    Linear,
    /// Linear products with n simples.
    Products,
    /// Cyclic series, one per rotation class unless --raw.
    Cyclic,
    /// Cyclic algebras of finite global dimension.
    CyclicFinite,
    /// Magnitude-one algebras.
    M1,
    /// Dyck paths of semilength n.
    Paths,
    /// Ordered trees with n vertices.
    Trees,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Statistic {
    /// Global dimension of connected linear algebras with n simples.
    Gldim,
    /// Height of Dyck paths of semilength n - 1.
    Height,
    /// Bounce count of Dyck paths of semilength n - 1.
    Bounce,
    /// Global dimension of cyclic algebras of finite global dimension.
    CyclicGldim,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Map {
    Linear,
    M1,
    Sincere,
    /// Linear products of gldim <= g and paths of height <= g + 1.
    Bounded,
}

fn parse_suite(s: &str) -> Result<Suite, String> {
    s.parse::<Suite>().map_err(|e| {
        let names: Vec<&str> = Suite::ALL.iter().map(|s| s.name()).collect();
        format!("{e}; expected one of {}", names.join(", "))
    })
}

enum Failure {
    /// Unparseable or malformed input.
    Input(String),
    /// Valid input outside the domain of the requested operation.
    Domain(String),
    /// A property suite found a counterexample.
    Property,
}

impl Failure {
    fn exit_code(&self) -> u8 {
        match self {
            Failure::Property => 1,
            Failure::Input(_) => 2,
            Failure::Domain(_) => 3,
        }
    }
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::Parse(_)
            | Error::InvalidSeries(_)
            | Error::InvalidPath(_)
            | Error::InvalidAreaSequence(_)
            | Error::InvalidTree(_) => Failure::Input(e.to_string()),
            _ => Failure::Domain(e.to_string()),
        }
    }
}

type CmdResult = Result<(), Failure>;

fn read_input(input: &str) -> Result<String, Failure> {
    if input != "-" {
        return Ok(input.to_string());
    }
    let mut s = String::new();
    io::stdin()
        .read_to_string(&mut s)
        .map_err(|e| Failure::Input(format!("cannot read stdin: {e}")))?;
    Ok(s.trim().to_string())
}

fn looks_like_word(s: &str) -> bool {
    s.chars().all(|c| matches!(c, 'U' | 'D' | 'u' | 'd'))
}

fn print_json<T: Serialize>(value: &T) {
    println!("{}", serde_json::to_string_pretty(value).expect("serializable"));
}

fn analyze(input: &str, as_path: bool, format: Format) -> CmdResult {
    let text = read_input(input)?;
    if as_path || looks_like_word(&text) {
        let d: DyckPath = text.parse()?;
        let report = PathReport::new(&d);
        match format {
            Format::Json => print_json(&report),
            _ => print!("{}", report.human()),
        }
    } else {
        let a: KupischSeries = text.parse()?;
        let report = AnalysisReport::new(&a)?;
        match format {
            Format::Json => print_json(&report),
            _ => print!("{}", report.human()),
        }
    }
    Ok(())
}

fn run_suites(suites: &[Suite], n: Option<usize>, sequential: bool) -> Vec<(SuiteReport, Duration)> {
    let run = |suite: Suite| {
        let start = Instant::now();
        let report = suite.run(n.unwrap_or(suite.default_n()));
        (report, start.elapsed())
    };
    if sequential {
        return suites.iter().map(|&s| run(s)).collect();
    }
    std::thread::scope(|scope| {
        let handles: Vec<_> = suites.iter().map(|&s| scope.spawn(move || run(s))).collect();
        handles
            .into_iter()
            .map(|h| h.join().expect("suite thread panicked"))
            .collect()
    })
}

#[derive(Serialize)]
struct TimedReport {
    #[serde(flatten)]
    report: SuiteReport,
    passed: bool,
    seconds: f64,
}

fn verify(suites: Vec<Suite>, n: Option<usize>, sequential: bool, list: bool, format: Format) -> CmdResult {
    if list {
        for s in Suite::ALL {
            println!("{:<18} n={:<3} {}", s.name(), s.default_n(), s.description());
        }
        return Ok(());
    }
    if n == Some(0) {
        return Err(Failure::Input("--n must be at least 1".into()));
    }
    let suites = if suites.is_empty() { Suite::ALL.to_vec() } else { suites };
    let results = run_suites(&suites, n, sequential);
    let all_passed = results.iter().all(|(r, _)| r.passed());
    match format {
        Format::Json => {
            let timed: Vec<TimedReport> = results
                .into_iter()
                .map(|(report, t)| TimedReport {
                    passed: report.passed(),
                    seconds: t.as_secs_f64(),
                    report,
                })
                .collect();
            print_json(&timed);
        }
        Format::Csv => {
            println!("suite,n,checked,passed,seconds");
            for (r, t) in &results {
                println!("{},{},{},{},{:.3}", r.suite, r.n, r.checked, r.passed(), t.as_secs_f64());
            }
        }
        Format::Human => {
            for (r, t) in &results {
                let status = if r.passed() { "PASS" } else { "FAIL" };
                println!(
                    "{status} {:<18} n={:<3} checked={:<9} {:>8.3}s",
                    r.suite.name(),
                    r.n,
                    r.checked,
                    t.as_secs_f64()
                );
                if let Some(c) = &r.counterexample {
                    println!("     counterexample: {c}");
                }
            }
        }
    }
    if all_passed {
        Ok(())
    } else {
        Err(Failure::Property)
    }
}

fn emit_items<I: Iterator<Item = String>>(items: I, count: bool, format: Format) {
    if count {
        let total = items.count();
        match format {
            Format::Json => println!("{{\"count\":{total}}}"),
            _ => println!("{total}"),
        }
        return;
    }
    match format {
        Format::Json => {
            let all: Vec<String> = items.collect();
            println!("{}", serde_json::to_string(&all).expect("strings"));
        }
        _ => {
            for item in items {
                println!("{item}");
            }
        }
    }
}

fn enumerate(family: Family, n: usize, max_entry: Option<usize>, raw: bool, count: bool, format: Format) -> CmdResult {
    let text = |a: KupischSeries| a.to_string();
    match family {
        Family::Linear => emit_items(enumerate_connected_linear(n).map(text), count, format),
        Family::Products => emit_items(enumerate_linear_products(n).map(text), count, format),
        Family::Cyclic => {
            let max_entry = max_entry.unwrap_or((2 * n).saturating_sub(1));
            if raw {
                emit_items(enumerate_cyclic_raw(n, max_entry).map(text), count, format)
            } else {
                emit_items(enumerate_cyclic(n, max_entry).map(text), count, format)
            }
        }
        Family::CyclicFinite if raw => {
            if count {
                let counts = cyclic_finite_gldim_counts(n);
                match format {
                    Format::Json => print_json(&counts),
                    _ => println!("{} rotation classes, {} series", counts.classes, counts.raw),
                }
            } else {
                let finite = |a: &KupischSeries| a.global_dimension().is_finite();
                emit_items(
                    enumerate_cyclic_raw(n, (2 * n).saturating_sub(1)).filter(finite).map(text),
                    false,
                    format,
                )
            }
        }
        Family::CyclicFinite => emit_items(enumerate_cyclic_finite_gldim(n).map(text), count, format),
        Family::M1 => emit_items(enumerate_m1(n).map(text), count, format),
        Family::Paths => emit_items(enumerate_dyck_paths(n).map(|d| d.to_string()), count, format),
        Family::Trees => emit_items(enumerate_ordered_trees(n).map(|t| t.to_string()), count, format),
    }
    Ok(())
}

#[derive(Serialize)]
struct DistributionJson<'a> {
    statistic: &'a str,
    n: usize,
    counts: &'a std::collections::BTreeMap<usize, u64>,
    total: u64,
}

fn distribution(statistic: Statistic, n: usize, format: Format) -> CmdResult {
    if n == 0 {
        return Err(Failure::Input("--n must be at least 1".into()));
    }
    let d: Distribution = match statistic {
        Statistic::Gldim => gldim_distribution(n),
        Statistic::Height => height_distribution(n),
        Statistic::Bounce => bounce_distribution(n),
        Statistic::CyclicGldim => cyclic_gldim_distribution(n),
    };
    match format {
        Format::Json => println!(
            "{}",
            serde_json::to_string(&DistributionJson {
                statistic: &d.statistic,
                n: d.n,
                counts: &d.counts,
                total: d.total,
            })
            .expect("serializable")
        ),
        Format::Csv => {
            println!("value,count");
            for (v, c) in &d.counts {
                println!("{v},{c}");
            }
        }
        Format::Human => {
            println!("{:<12} count", d.statistic);
            for (v, c) in &d.counts {
                println!("{v:<12} {c}");
            }
            println!("{:<12} {}", "total", d.total);
        }
    }
    Ok(())
}

#[derive(Serialize)]
struct PathJson {
    path: DyckPath,
    area: Vec<usize>,
    height: usize,
    bounce_count: usize,
}

fn bijection(map: Map, from_dyck: bool, g: Option<usize>, input: &str, format: Format) -> CmdResult {
    let text = read_input(input)?;
    if from_dyck {
        let d: DyckPath = text.parse()?;
        let a = match map {
            Map::Linear => dyck_to_linear(&d),
            Map::M1 => dyck_to_m1(&d)?,
            Map::Sincere => dyck_to_sincere(&d)?,
            Map::Bounded => dyck_to_bounded_product(&d, g.expect("required by clap"))?,
        };
        match format {
            Format::Json => println!("{}", serde_json::to_string(&a).expect("serializable")),
            _ => println!("{a}"),
        }
    } else {
        let a: KupischSeries = text.parse()?;
        let d = match map {
            Map::Linear => linear_to_dyck(&a)?,
            Map::M1 => m1_to_dyck(&a)?,
            Map::Sincere => sincere_to_dyck(&a)?,
            Map::Bounded => bounded_product_to_dyck(&a, g.expect("required by clap"))?,
        };
        match format {
            Format::Json => println!(
                "{}",
                serde_json::to_string(&PathJson {
                    area: d.area_sequence(),
                    height: d.height(),
                    bounce_count: d.bounce_count(),
                    path: d,
                })
                .expect("serializable")
            ),
            _ => println!("{d}"),
        }
    }
    Ok(())
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match cli.command {
        Command::Analyze { input, path, format } => analyze(&input, path, format),
        Command::Verify {
            suites,
            n,
            sequential,
            list,
            format,
        } => verify(suites, n, sequential, list, format),
        Command::Enumerate {
            family,
            n,
            max_entry,
            raw,
            count,
            format,
        } => enumerate(family, n, max_entry, raw, count, format),
        Command::Distribution { statistic, n, format } => distribution(statistic, n, format),
        Command::Bijection {
            map,
            to_dyck: _,
            from_dyck,
            g,
            input,
            format,
        } => bijection(map, from_dyck, g, &input, format),
    };
    match result {
        Ok(()) => ExitCode::SUCCESS,
        Err(failure) => {
            match &failure {
                Failure::Input(m) => eprintln!("error: {m}"),
                Failure::Domain(m) => eprintln!("error: {m}"),
                Failure::Property => eprintln!("error: a property suite failed"),
            }
            ExitCode::from(failure.exit_code())
        }
    }
}
