//! `boolnet` command-line tool.
//!
//! Exit status: 0 on success, 1 on usage or input errors, 2 when a resource
//! limit (arity, census size, state-space size) is exceeded.

use std::fmt::Write as _;
use std::path::PathBuf;
use std::process::ExitCode;

use anyhow::{bail, Context};
use boolnet_core::{
    build_graph, classify, decompose, enumerate_cycles, enumerate_class, influences,
    parse_function_literal, parse_network, shortest_signed_path, state_graph, BooleanFunction,
    BooleanNetwork, FunctionClass, Sign,
};
use clap::{Parser, Subcommand, ValueEnum};

#[derive(Parser, Debug)]
#[command(name = "boolnet", version, about = "Boolean function decomposition and interaction graphs")]
struct Cli {
    /// Write output to this file instead of standard output.
    #[arg(long, global = true)]
    output: Option<PathBuf>,

    /// Suppress progress notes on standard error.
    #[arg(long, global = true)]
    quiet: bool,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Print the fragments of a function for a set of fixed variables.
    Decompose {
        /// Function literal: d:<decimal>@<arity>, b:<bits> or e:<arity>:<expr>.
        function: String,
        /// Comma-separated variable indices to fix, e.g. 2,3.
        #[arg(long, value_delimiter = ',', required = true)]
        fix: Vec<usize>,
    },
    /// Print the influence sign of each variable.
    Influence {
        function: String,
        /// Only report this variable.
        #[arg(long)]
        var: Option<usize>,
    },
    /// Build the interaction graph of a network file.
    Graph {
        /// Network file, or "-" for standard input.
        #[arg(long)]
        network: PathBuf,
        #[arg(long, value_enum, default_value_t = GraphFormat::Dot)]
        format: GraphFormat,
    },
    /// Classify a single function.
    Classify {
        function: String,
        #[arg(long, value_enum, default_value_t = TextOrJson::Text)]
        format: TextOrJson,
    },
    /// Enumerate every function of a class at small arity.
    Census {
        #[arg(long)]
        arity: usize,
        /// only_positive, only_negative, complete_positive, complete_negative or ncf.
        #[arg(long)]
        class: String,
        #[arg(long, value_enum, default_value_t = CensusFormat::List)]
        format: CensusFormat,
        /// In CSV output, put each function's complement on the same row.
        #[arg(long)]
        paired: bool,
    },
    /// Synchronous state-transition analysis.
    Dynamics {
        #[arg(long)]
        network: PathBuf,
        #[arg(long, value_enum, default_value_t = Report::Attractors)]
        report: Report,
    },
    /// Enumerate signed feedback loops.
    Cycles {
        #[arg(long)]
        network: PathBuf,
        /// Longest cycle to report; defaults to the network size.
        #[arg(long)]
        max_len: Option<usize>,
        #[arg(long, value_enum, default_value_t = ListOrCount::List)]
        format: ListOrCount,
    },
    /// Shortest walk with a given overall sign.
    Path {
        #[arg(long)]
        network: PathBuf,
        #[arg(long)]
        from: usize,
        #[arg(long)]
        to: usize,
        #[arg(long, value_enum)]
        sign: PathSign,
    },
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum GraphFormat {
    Dot,
    Matrix,
    Json,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum TextOrJson {
    Text,
    Json,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum CensusFormat {
    List,
    Csv,
    Count,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum Report {
    FixedPoints,
    Attractors,
    Full,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum ListOrCount {
    List,
    Count,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum PathSign {
    Pos,
    Neg,
}

fn load_network(path: &PathBuf) -> anyhow::Result<BooleanNetwork> {
    let text = if path.as_os_str() == "-" {
        std::io::read_to_string(std::io::stdin()).context("reading network from stdin")?
    } else {
        std::fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))?
    };
    Ok(parse_network(&text)?)
}

fn function(literal: &str) -> anyhow::Result<BooleanFunction> {
    Ok(parse_function_literal(literal)?)
}

fn run(cli: &Cli) -> anyhow::Result<String> {
    let note = |msg: &str| {
        if !cli.quiet {
            eprintln!("{msg}");
        }
    };
    let mut out = String::new();
    match &cli.command {
        Command::Decompose { function: lit, fix } => {
            let table = decompose(&function(lit)?, fix)?;
            for line in table.lines() {
                writeln!(out, "{line}")?;
            }
        }
        Command::Influence { function: lit, var } => {
            let f = function(lit)?;
            match var {
                Some(v) => {
                    let sign = boolnet_core::influence(&f, *v)?;
                    writeln!(out, "x{v} {sign}")?;
                }
                None => {
                    for (i, sign) in influences(&f).iter().enumerate() {
                        writeln!(out, "x{} {sign}", i + 1)?;
                    }
                }
            }
        }
        Command::Graph { network, format } => {
            let graph = build_graph(&load_network(network)?);
            match format {
                GraphFormat::Dot => out.push_str(&graph.to_dot()),
                GraphFormat::Matrix => write!(out, "{}", graph.matrices())?,
                GraphFormat::Json => writeln!(out, "{}", graph.to_json())?,
            }
        }
        Command::Classify { function: lit, format } => {
            let report = classify(&function(lit)?);
            match format {
                TextOrJson::Json => writeln!(out, "{}", serde_json::to_string_pretty(&report)?)?,
                TextOrJson::Text => {
                    writeln!(out, "function {} ({}@{})", report.bitstring, report.decimal, report.arity)?;
                    for (i, sign) in report.influences.iter().enumerate() {
                        writeln!(out, "x{} {sign}", i + 1)?;
                    }
                    let essential: Vec<String> =
                        report.essential.iter().map(|v| format!("x{v}")).collect();
                    writeln!(out, "essential {}", essential.join(" "))?;
                    for class in FunctionClass::ALL {
                        writeln!(out, "{class} {}", report.is_member(class))?;
                    }
                    if let Some(w) = &report.ncf_witness {
                        let bits = |v: &[bool]| {
                            v.iter().map(|&b| if b { '1' } else { '0' }).collect::<String>()
                        };
                        let order: Vec<String> = w.order.iter().map(|v| format!("x{v}")).collect();
                        writeln!(
                            out,
                            "ncf order {} inputs {} outputs {}",
                            order.join(","),
                            bits(&w.canalizing_inputs),
                            bits(&w.canalized_outputs)
                        )?;
                    }
                }
            }
        }
        Command::Census { arity, class, format, paired } => {
            let class: FunctionClass = class
                .parse()
                .map_err(|_| anyhow::anyhow!("unknown class {class:?}"))?;
            note(&format!("census: scanning arity {arity} for {class}"));
            let members = enumerate_class(*arity, class)?;
            match format {
                CensusFormat::Count => writeln!(out, "{}", members.len())?,
                CensusFormat::List => {
                    for v in &members {
                        writeln!(out, "{v}")?;
                    }
                }
                CensusFormat::Csv => {
                    let top = (1u64 << (1 << arity)) - 1;
                    let bits = |v: u64| format!("{:0width$b}", v, width = 1 << arity);
                    if *paired {
                        writeln!(out, "decimal,bitstring,complement_decimal,complement_bitstring")?;
                        for &v in &members {
                            writeln!(out, "{v},{},{},{}", bits(v), top - v, bits(top - v))?;
                        }
                    } else {
                        writeln!(out, "decimal,bitstring")?;
                        for &v in &members {
                            writeln!(out, "{v},{}", bits(v))?;
                        }
                    }
                }
            }
        }
        Command::Dynamics { network, report } => {
            let net = load_network(network)?;
            note(&format!("dynamics: {} states", 1u64 << net.size()));
            let sts = state_graph(&net)?;
            match report {
                Report::FixedPoints => {
                    for s in sts.fixed_points() {
                        writeln!(out, "{s}")?;
                    }
                }
                Report::Attractors => {
                    for (id, cycle) in sts.attractors().iter().enumerate() {
                        let states: Vec<String> = cycle.iter().map(ToString::to_string).collect();
                        writeln!(out, "attractor {id} length {}: {}", cycle.len(), states.join(" "))?;
                    }
                }
                Report::Full => writeln!(out, "{}", sts.to_json())?,
            }
        }
        Command::Cycles { network, max_len, format } => {
            let graph = build_graph(&load_network(network)?);
            let max_len = max_len.unwrap_or(graph.size());
            if max_len == 0 {
                bail!("--max-len must be at least 1");
            }
            let cycles = enumerate_cycles(&graph, max_len);
            match format {
                ListOrCount::Count => writeln!(out, "{}", cycles.len())?,
                ListOrCount::List => {
                    for c in &cycles {
                        writeln!(out, "{c}")?;
                    }
                }
            }
        }
        Command::Path { network, from, to, sign } => {
            let graph = build_graph(&load_network(network)?);
            let sign = match sign {
                PathSign::Pos => Sign::Positive,
                PathSign::Neg => Sign::Negative,
            };
            match shortest_signed_path(&graph, *from, *to, sign)? {
                Some(path) => writeln!(out, "length {}: {path}", path.len())?,
                None => writeln!(out, "none")?,
            }
        }
    }
    Ok(out)
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(err) => {
            let code = if err.use_stderr() { 1 } else { 0 };
            let _ = err.print();
            return ExitCode::from(code);
        }
    };
    match run(&cli) {
        Ok(text) => {
            if let Some(path) = &cli.output {
                if let Err(err) = std::fs::write(path, text) {
                    eprintln!("error: writing {}: {err}", path.display());
                    return ExitCode::from(1);
                }
            } else {
                print!("{text}");
            }
            ExitCode::SUCCESS
        }
        Err(err) => {
            eprintln!("error: {err:#}");
            let limit = err
                .downcast_ref::<boolnet_core::Error>()
                .is_some_and(boolnet_core::Error::is_resource_limit);
            ExitCode::from(if limit { 2 } else { 1 })
        }
    }
}
