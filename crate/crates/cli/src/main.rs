use std::io::Read;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use spbranch::bijection::{forward_traced, inverse_traced, BranchPair};
use spbranch::branching::{
    report, unbounded_letter_bound, visit_highest_weight, visit_lr, BranchingQuery, Method,
};
use spbranch::crystal::Rank;
use spbranch::format::{from_json, parse_partition, parse_text, to_json, to_text, TableauJson};
use spbranch::graph::{crystal_graph, Algebra};
use spbranch::partition::Partition;
use spbranch::tableau::{SpWeight, Tableau};
use spbranch::verify::{run_all, VerifyConfig};

#[derive(Parser)]
#[command(
    name = "spbranch",
    version,
    about = "Branching from gl(2n) to sp(2n) with crystals and LR tableaux"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Multiplicity of V_sp(μ) in the restriction of V_gl(λ).
    Multiplicity {
        #[arg(long, value_parser = partition_arg)]
        lambda: Partition,
        #[arg(long, value_parser = partition_arg)]
        mu: Partition,
        #[arg(long, value_parser = rank_arg)]
        n: Rank,
        #[arg(long, value_enum, default_value_t = MethodArg::All)]
        method: MethodArg,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// List the tableaux counted by a multiplicity.
    List {
        #[arg(long, value_enum)]
        kind: Kind,
        #[arg(long, value_parser = partition_arg)]
        lambda: Partition,
        #[arg(long, value_parser = partition_arg)]
        mu: Partition,
        #[arg(long, value_parser = rank_arg, default_value = "inf")]
        n: Rank,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Apply the bijection or its inverse to a tableau read from stdin or a file.
    Map {
        #[arg(long, value_enum)]
        direction: Direction,
        #[arg(long, value_parser = partition_arg)]
        lambda: Option<Partition>,
        #[arg(long, value_parser = partition_arg)]
        mu: Option<Partition>,
        #[arg(long)]
        trace: bool,
        #[arg(long)]
        file: Option<PathBuf>,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Crystal graph of all tableaux of shape λ over A_n.
    Graph {
        #[arg(long, value_parser = partition_arg)]
        lambda: Partition,
        #[arg(long)]
        n: u32,
        #[arg(long, value_enum)]
        algebra: AlgebraArg,
        #[arg(long, value_enum, default_value_t = GraphFormat::Dot)]
        format: GraphFormat,
    },
    /// Run every cross-check over all shapes within the bounds.
    Verify {
        #[arg(long, default_value_t = 8)]
        max_cells: usize,
        #[arg(long, default_value_t = 5)]
        max_rows: usize,
        #[arg(long, value_delimiter = ',', default_value = "2,3")]
        n: Vec<u32>,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum MethodArg {
    Crystal,
    Sundaram,
    Stable,
    Character,
    All,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Clone, Copy, ValueEnum)]
enum GraphFormat {
    Dot,
    Json,
}

#[derive(Clone, Copy, ValueEnum)]
enum Kind {
    Hwt,
    Lr,
}

#[derive(Clone, Copy, ValueEnum)]
enum Direction {
    Forward,
    Inverse,
}

#[derive(Clone, Copy, ValueEnum)]
enum AlgebraArg {
    Gl,
    Sp,
}

fn partition_arg(s: &str) -> Result<Partition, String> {
    parse_partition(s).map_err(|e| e.to_string())
}

fn rank_arg(s: &str) -> Result<Rank, String> {
    if s == "inf" {
        return Ok(Rank::Unbounded);
    }
    match s.parse::<u32>() {
        Ok(n) if n > 0 => Ok(Rank::Finite(n)),
        _ => Err(format!("expected a positive integer or 'inf', got '{s}'")),
    }
}

/// Failure with its exit code.
struct Failure(u8, String);

impl<E: std::fmt::Display> From<E> for Failure {
    fn from(e: E) -> Self {
        Failure(1, e.to_string())
    }
}

type Outcome = Result<(), Failure>;

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { 1 } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    let result = match cli.command {
        Command::Multiplicity {
            lambda,
            mu,
            n,
            method,
            format,
        } => multiplicity(lambda, mu, n, method, format),
        Command::List {
            kind,
            lambda,
            mu,
            n,
            format,
        } => list(kind, lambda, mu, n, format),
        Command::Map {
            direction,
            lambda,
            mu,
            trace,
            file,
            format,
        } => map(direction, lambda, mu, trace, file, format),
        Command::Graph {
            lambda,
            n,
            algebra,
            format,
        } => graph(lambda, n, algebra, format),
        Command::Verify {
            max_cells,
            max_rows,
            n,
            seed,
        } => verify(max_cells, max_rows, n, seed),
    };
    match result {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure(code, msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(code)
        }
    }
}

fn multiplicity(
    lambda: Partition,
    mu: Partition,
    n: Rank,
    method: MethodArg,
    format: Format,
) -> Outcome {
    let q = BranchingQuery::new(lambda, mu, n)?;
    let methods: Vec<Method> = match method {
        MethodArg::Crystal => vec![Method::Crystal],
        MethodArg::Sundaram => vec![Method::Sundaram],
        MethodArg::Stable => vec![Method::Stable],
        MethodArg::Character => vec![Method::Character],
        MethodArg::All => Method::ALL.to_vec(),
    };
    if n == Rank::Unbounded && matches!(method, MethodArg::Sundaram | MethodArg::Character) {
        return Err(Failure(1, "this method needs a finite --n".into()));
    }
    let r = report(&q, &methods)?;
    match format {
        Format::Json => println!("{}", r.to_json()),
        Format::Text => {
            println!("lambda: {}", r.lambda);
            println!("mu: {}", r.mu);
            println!("n: {}", r.n);
            for (name, v) in [
                ("crystal", r.crystal),
                ("sundaram", r.sundaram),
                ("stable", r.stable),
                ("character", r.character),
            ] {
                if let Some(v) = v {
                    println!("{name}: {v}");
                }
            }
        }
    }
    if !r.consistent() {
        return Err(Failure(2, format!("methods disagree: {}", r.to_json())));
    }
    Ok(())
}

fn list(kind: Kind, lambda: Partition, mu: Partition, n: Rank, format: Format) -> Outcome {
    let q = BranchingQuery::new(lambda, mu, n)?;
    let mut found = Vec::new();
    match kind {
        Kind::Hwt => {
            let letters = match n {
                Rank::Finite(n) => n,
                Rank::Unbounded => unbounded_letter_bound(&q.lambda),
            };
            visit_highest_weight(&q.lambda, &q.mu, letters, |t| found.push(t));
        }
        Kind::Lr => visit_lr(&q, |t| found.push(t))?,
    }
    match format {
        Format::Text => {
            for t in &found {
                println!("{}", to_text(t));
            }
            println!("count: {}", found.len());
        }
        Format::Json => {
            let items: Vec<TableauJson> = found.iter().map(TableauJson::from).collect();
            println!("{}", json!({ "count": found.len(), "tableaux": items }));
        }
    }
    Ok(())
}

fn read_input(file: Option<PathBuf>) -> Result<Tableau, Failure> {
    let mut input = String::new();
    match file {
        Some(path) => {
            input = std::fs::read_to_string(&path)
                .map_err(|e| Failure(1, format!("{}: {e}", path.display())))?
        }
        None => {
            std::io::stdin().read_to_string(&mut input)?;
        }
    }
    let body = input.trim_start_matches(|c: char| c.is_whitespace());
    if body.is_empty() {
        return Err(Failure(1, "no input tableau".into()));
    }
    Ok(if body.starts_with('{') {
        from_json(body)?
    } else {
        parse_text(body)?
    })
}

fn map(
    direction: Direction,
    lambda: Option<Partition>,
    mu: Option<Partition>,
    trace: bool,
    file: Option<PathBuf>,
    format: Format,
) -> Outcome {
    let t = read_input(file)?;
    if let Some(lambda) = &lambda {
        if t.shape().outer() != lambda {
            return Err(Failure(
                1,
                format!(
                    "input outer shape {} differs from --lambda {lambda}",
                    t.shape().outer()
                ),
            ));
        }
    }
    let pair = match direction {
        Direction::Forward => {
            if let Some(mu) = &mu {
                if t.shape().inner() != mu {
                    return Err(Failure(
                        1,
                        format!(
                            "input inner shape {} differs from --mu {mu}",
                            t.shape().inner()
                        ),
                    ));
                }
            }
            forward_traced(&t)?
        }
        Direction::Inverse => {
            if let Some(mu) = &mu {
                if t.sp_weight() != SpWeight::from_partition(mu) {
                    return Err(Failure(1, format!("input weight differs from --mu {mu}")));
                }
            }
            inverse_traced(&t)?
        }
    };
    let result = match direction {
        Direction::Forward => &pair.hw,
        Direction::Inverse => &pair.lr,
    };
    match format {
        Format::Text => {
            if trace {
                for (line, stage) in pair.trace_lines().iter().zip(stages(&pair)?) {
                    println!("{line}");
                    println!("{}", to_text(&stage));
                }
            }
            print!("{}", to_text(result));
            if !to_text(result).ends_with('\n') {
                println!();
            }
        }
        Format::Json => {
            let out: Value = serde_json::from_str(&to_json(result))?;
            if trace {
                let steps: Vec<Value> = pair
                    .trace_lines()
                    .into_iter()
                    .zip(stages(&pair)?)
                    .map(|(line, stage)| json!({ "step": line, "tableau": TableauJson::from(&stage) }))
                    .collect();
                println!("{}", json!({ "result": out, "trace": steps }));
            } else {
                println!("{out}");
            }
        }
    }
    Ok(())
}

fn stages(pair: &BranchPair) -> Result<Vec<Tableau>, Failure> {
    Ok(pair.stages()?)
}

fn graph(lambda: Partition, n: u32, algebra: AlgebraArg, format: GraphFormat) -> Outcome {
    let algebra = match algebra {
        AlgebraArg::Gl => Algebra::Gl,
        AlgebraArg::Sp => Algebra::Sp,
    };
    let g = crystal_graph(&lambda, n, algebra)?;
    match format {
        GraphFormat::Dot => print!("{}", g.to_dot()),
        GraphFormat::Json => println!("{}", g.to_json()),
    }
    Ok(())
}

fn verify(max_cells: usize, max_rows: usize, ranks: Vec<u32>, seed: u64) -> Outcome {
    if ranks.is_empty() || ranks.contains(&0) {
        return Err(Failure(1, "--n needs positive ranks".into()));
    }
    let cfg = VerifyConfig {
        max_cells,
        max_rows,
        ranks,
        seed,
    };
    let reports = run_all(&cfg);
    for r in &reports {
        println!("{r}");
    }
    let failed: Vec<_> = reports.iter().filter(|r| !r.passed()).collect();
    if failed.is_empty() {
        return Ok(());
    }
    for r in &failed {
        println!("\ncounterexample for {}:", r.name);
        print!("{}", r.counterexample.as_deref().unwrap_or(""));
    }
    Err(Failure(2, format!("{} check(s) failed", failed.len())))
}
