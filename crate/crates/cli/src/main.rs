use std::collections::BTreeMap;
use std::fmt::Write as _;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use deutsch_core::closed::{
    count_mountains, count_square_first, count_tilings, enumerate_tilings, fibonacci,
    half_companion_pell, pell, Tile,
};
use deutsch_core::path::{enumerate_nondecreasing_filter, parse_path, statistics, validate};
use deutsch_core::series::{format_coeffs, CoeffRecord, GfForm};
use deutsch_core::tree::{path_to_tree, tree_to_path, MarkedTree};
use deutsch_core::verify::{
    count_paths, count_table, run_verification, CountMethod, VerifyConfig, DEFAULT_BRUTE_CAP,
};

#[derive(Parser, Debug)]
#[command(
    name = "deutsch",
    version,
    about = "Count, list and cross-check Deutsch paths with non-decreasing valleys"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Number of non-decreasing paths of a given length
    Count {
        #[arg(long)]
        length: usize,
        #[arg(long, value_enum, default_value_t = Method::Closed)]
        method: Method,
    },
    /// Counts for every length up to --max, by each method
    Table {
        #[arg(long)]
        max: usize,
        #[arg(long)]
        json: bool,
        #[arg(long, default_value_t = DEFAULT_BRUTE_CAP)]
        brute_cap: usize,
    },
    /// All non-decreasing paths of a given length, in canonical order
    List {
        #[arg(long)]
        length: usize,
        #[arg(long)]
        json: bool,
    },
    /// Marked tree of a non-decreasing path
    Tree {
        #[arg(long, allow_hyphen_values = true)]
        path: String,
        #[arg(long)]
        json: bool,
    },
    /// Path encoded by a marked tree given as JSON
    Path {
        #[arg(long)]
        tree: String,
    },
    /// Coefficients of a named generating function
    Gf {
        #[arg(long)]
        form: String,
        #[arg(long)]
        terms: usize,
        #[arg(long)]
        json: bool,
    },
    /// Number of mountains with K steps
    Mountains {
        #[arg(long)]
        steps: u32,
    },
    /// Square/domino tilings of a strip
    Tilings {
        #[arg(long)]
        length: usize,
        /// Only tilings whose first tile is a square
        #[arg(long)]
        first_square: bool,
        /// Print the tilings instead of their number
        #[arg(long)]
        list: bool,
    },
    /// Integer sequences, comma-separated or as "n value" lines
    Sequence {
        #[arg(long, value_enum)]
        name: SequenceName,
        #[arg(long)]
        terms: usize,
        #[arg(long)]
        bfile: bool,
    },
    /// Per-path parameters of all non-decreasing paths of one length
    Stats {
        #[arg(long)]
        length: usize,
        #[arg(long)]
        json: bool,
    },
    /// Run every cross-check; exit status 1 if any fails
    Verify {
        #[arg(long)]
        max: usize,
        #[arg(long, default_value_t = DEFAULT_BRUTE_CAP)]
        brute_cap: usize,
    },
}

#[derive(ValueEnum, Clone, Copy, Debug)]
enum Method {
    Closed,
    Series,
    Brute,
    Direct,
}

impl From<Method> for CountMethod {
    fn from(m: Method) -> Self {
        match m {
            Method::Closed => CountMethod::Closed,
            Method::Series => CountMethod::Series,
            Method::Brute => CountMethod::Brute,
            Method::Direct => CountMethod::Direct,
        }
    }
}

#[derive(ValueEnum, Clone, Copy, Debug)]
enum SequenceName {
    Fibonacci,
    Pell,
    HalfCompanionPell,
    Nondecreasing,
    Mountains,
}

enum Failure {
    Usage(String),
    Verification,
}

fn usage(e: impl std::fmt::Display) -> Failure {
    Failure::Usage(e.to_string())
}

/// `value:count` pairs separated by spaces.
fn histogram<K: std::fmt::Display>(h: &BTreeMap<K, u64>) -> String {
    h.iter()
        .map(|(k, v)| format!("{k}:{v}"))
        .collect::<Vec<_>>()
        .join(" ")
}

fn run(command: Command, out: &mut String) -> Result<(), Failure> {
    match command {
        Command::Count { length, method } => {
            writeln!(out, "{}", count_paths(length, method.into())).unwrap();
        }
        Command::Table {
            max,
            json,
            brute_cap,
        } => {
            let rows = count_table(max, brute_cap);
            if json {
                for row in rows {
                    writeln!(out, "{}", serde_json::to_string(&row).unwrap()).unwrap();
                }
            } else {
                writeln!(out, "n\tclosed\tseries\tbrute\tagree").unwrap();
                for row in rows {
                    let brute = row.brute.as_deref().unwrap_or("-");
                    writeln!(
                        out,
                        "{}\t{}\t{}\t{}\t{}",
                        row.n, row.closed, row.series, brute, row.agree
                    )
                    .unwrap();
                }
            }
        }
        Command::List { length, json } => {
            for path in enumerate_nondecreasing_filter(length) {
                if json {
                    writeln!(out, "{}", path.as_path().to_json()).unwrap();
                } else {
                    writeln!(out, "{path}").unwrap();
                }
            }
        }
        Command::Tree { path, json } => {
            let path = parse_path(&path).map_err(usage)?;
            let path = validate(&path).map_err(usage)?;
            let tree = path_to_tree(&path).map_err(usage)?;
            if json {
                writeln!(out, "{}", tree.to_json()).unwrap();
            } else {
                out.push_str(&tree.outline());
            }
        }
        Command::Path { tree } => {
            let tree = MarkedTree::from_json(&tree).map_err(usage)?;
            let path = tree_to_path(&tree).map_err(usage)?;
            writeln!(out, "{path}").unwrap();
        }
        Command::Gf { form, terms, json } => {
            let form: GfForm = form.parse().map_err(usage)?;
            let coeffs = form.expand(terms).into_coeffs();
            if json {
                writeln!(out, "{}", CoeffRecord::new(form.name(), &coeffs).to_json()).unwrap();
            } else {
                writeln!(out, "{}", format_coeffs(&coeffs)).unwrap();
            }
        }
        Command::Mountains { steps } => {
            writeln!(out, "{}", count_mountains(steps)).unwrap();
        }
        Command::Tilings {
            length,
            first_square,
            list,
        } => {
            if list {
                for t in enumerate_tilings(length)
                    .into_iter()
                    .filter(|t| !first_square || length == 0 || t.first() == Some(Tile::Square))
                {
                    writeln!(out, "{t}").unwrap();
                }
            } else if first_square {
                writeln!(out, "{}", count_square_first(length)).unwrap();
            } else {
                writeln!(out, "{}", count_tilings(length)).unwrap();
            }
        }
        Command::Sequence { name, terms, bfile } => {
            let values: Vec<String> = (0..terms)
                .map(|n| match name {
                    SequenceName::Fibonacci => fibonacci(n as i64),
                    SequenceName::Pell => pell(n as u32),
                    SequenceName::HalfCompanionPell => half_companion_pell(n as u32),
                    SequenceName::Nondecreasing => count_paths(n, CountMethod::Closed),
                    SequenceName::Mountains => count_mountains(n as u32),
                })
                .map(|v| v.to_string())
                .collect();
            if bfile {
                for (n, v) in values.iter().enumerate() {
                    writeln!(out, "{n} {v}").unwrap();
                }
            } else {
                writeln!(out, "{}", values.join(", ")).unwrap();
            }
        }
        Command::Stats { length, json } => {
            let summary = statistics(length);
            if json {
                writeln!(out, "{}", serde_json::to_string(&summary).unwrap()).unwrap();
            } else {
                writeln!(out, "paths\t{}", summary.records.len()).unwrap();
                writeln!(out, "down-steps\t{}", histogram(&summary.downsteps)).unwrap();
                writeln!(out, "height\t{}", histogram(&summary.heights)).unwrap();
                writeln!(out, "valleys\t{}", histogram(&summary.valleys)).unwrap();
            }
        }
        Command::Verify { max, brute_cap } => {
            let mut config = VerifyConfig::new(max);
            config.brute_cap = brute_cap;
            let outcomes = run_verification(&config);
            let mut ok = true;
            for o in &outcomes {
                let status = if o.passed { "PASS" } else { "FAIL" };
                writeln!(out, "{status} {}: {}", o.name, o.detail).unwrap();
                ok &= o.passed;
            }
            if !ok {
                return Err(Failure::Verification);
            }
        }
    }
    Ok(())
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let mut out = String::new();
    let result = run(cli.command, &mut out);
    print!("{out}");
    match result {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Verification) => ExitCode::from(1),
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}
