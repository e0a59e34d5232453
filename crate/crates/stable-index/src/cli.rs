//! The command-line driver behind the `stable-index` binary.
//!
//! Subcommands: `theta`, `set`, `gaps`, `witness`, `enumerate`, `verify`,
//! `construct`. Every subcommand honors `--format text|json|csv`. Exit
//! codes: 0 success, 2 input error, 3 unachievable target, 4 enumeration
//! ceiling exceeded, 1 internal failure (which includes a failed
//! verification).

use std::process::ExitCode;

use clap::{ArgGroup, Parser, Subcommand, ValueEnum};
use serde_json::json;

use crate::digraph::Digraph;
use crate::enumerate::{
    default_workers, enumerate_parallel_with_ceiling, enumerate_random, EnumSummary,
    DEFAULT_CEILING,
};
use crate::error::{Error, Result};
use crate::families::FamilySpec;
use crate::theorem::{gaps, theta_set, verify_theorem_with, witness, GapReport, VerifyReport};
use crate::theta::{s_max, stable_index_bounded_explained, Theta};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, ValueEnum)]
enum Format {
    /// Human-readable lines
    #[default]
    Text,
    /// One JSON document
    Json,
    /// Comma-separated table
    Csv,
}

#[derive(Debug, Parser)]
#[command(
    name = "stable-index",
    version,
    about = "Stable index of digraphs: computation, witnesses, achievable sets, enumeration"
)]
struct Cli {
    /// Output format
    #[arg(long, global = true, value_enum, default_value_t)]
    format: Format,

    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Compute the stable index of a digraph
    #[command(group(ArgGroup::new("input").required(true).args(["path", "family"])))]
    Theta {
        /// Edge-list file path, or `-` for stdin
        #[arg(value_name = "PATH")]
        path: Option<String>,

        /// Build the input from a family spec (e.g. `g:2,2,3`) instead
        #[arg(long, value_name = "SPEC")]
        family: Option<String>,

        /// Also report where the first duplicate walk pair appears
        #[arg(long)]
        explain: bool,
    },

    /// Print the achievable index set at one or more orders
    #[command(group(ArgGroup::new("orders").required(true).args(["n_pos", "n"])))]
    Set {
        /// Order, e.g. `7`
        #[arg(value_name = "N")]
        n_pos: Option<String>,

        /// Order or inclusive range, e.g. `7..14`
        #[arg(long, value_name = "N[..M]")]
        n: Option<String>,
    },

    /// Print the values below the order bound that no digraph attains
    #[command(group(ArgGroup::new("orders").required(true).args(["n_pos", "n"])))]
    Gaps {
        /// Order, e.g. `7`
        #[arg(value_name = "N")]
        n_pos: Option<String>,

        /// Order or inclusive range, e.g. `7..14`
        #[arg(long, value_name = "N[..M]")]
        n: Option<String>,
    },

    /// Synthesize an order-N digraph with stable index M
    Witness {
        /// Digraph order
        n: usize,

        /// Target index: a positive integer or `inf`
        #[arg(value_name = "M")]
        target: String,
    },

    /// Histogram the stable index over all (or sampled) order-N digraphs
    Enumerate {
        /// Digraph order
        n: usize,

        /// Worker threads for the exhaustive sweep (default: all cores)
        #[arg(long)]
        workers: Option<usize>,

        /// Sample this many seeded random digraphs instead of sweeping
        #[arg(long, value_name = "COUNT")]
        sample: Option<u64>,

        /// Seed for --sample (default 0)
        #[arg(long, requires = "sample")]
        seed: Option<u64>,

        /// Exhaustive order ceiling (default 5)
        #[arg(long)]
        ceiling: Option<usize>,
    },

    /// Check the achievable-set description at one or more orders
    #[command(group(ArgGroup::new("orders").required(true).args(["n_pos", "n"])))]
    Verify {
        /// Order, e.g. `7`
        #[arg(value_name = "N")]
        n_pos: Option<String>,

        /// Order or inclusive range, e.g. `7..14`
        #[arg(long, value_name = "N[..M]")]
        n: Option<String>,

        /// Force the exhaustive cross-check (automatic for N <= 4)
        #[arg(long)]
        exhaustive: bool,
    },

    /// Emit a family member as an edge list
    Construct {
        /// Family spec, e.g. `g:2,3,3` or `G:4,3,3,1,8`
        #[arg(value_name = "SPEC")]
        spec: String,
    },
}

/// Parses clap arguments from the process environment and runs the chosen
/// subcommand, translating errors into the documented exit codes.
pub fn run() -> ExitCode {
    let cli = Cli::parse();
    match dispatch(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(exit_code(&e))
        }
    }
}

fn exit_code(e: &Error) -> u8 {
    match e {
        Error::NotAchievable { .. } => 3,
        Error::CeilingExceeded { .. } => 4,
        Error::SearchExhausted { .. } | Error::VerificationFailed { .. } => 1,
        _ => 2,
    }
}

fn dispatch(cli: Cli) -> Result<()> {
    let format = cli.format;
    match cli.command {
        Command::Theta {
            path,
            family,
            explain,
        } => cmd_theta(path.as_deref(), family.as_deref(), explain, format),
        Command::Set { n_pos, n } => {
            let (orders, plural) = parse_orders(pick_order_arg(n_pos, n))?;
            cmd_set(&orders, plural, format)
        }
        Command::Gaps { n_pos, n } => {
            let (orders, plural) = parse_orders(pick_order_arg(n_pos, n))?;
            cmd_gaps(&orders, plural, format)
        }
        Command::Witness { n, target } => cmd_witness(n, &target, format),
        Command::Enumerate {
            n,
            workers,
            sample,
            seed,
            ceiling,
        } => cmd_enumerate(n, workers, sample, seed, ceiling, format),
        Command::Verify {
            n_pos,
            n,
            exhaustive,
        } => {
            let (orders, plural) = parse_orders(pick_order_arg(n_pos, n))?;
            cmd_verify(&orders, plural, exhaustive, format)
        }
        Command::Construct { spec } => cmd_construct(&spec, format),
    }
}

fn pick_order_arg(n_pos: Option<String>, n: Option<String>) -> String {
    n_pos.or(n).expect("clap requires one order argument")
}

/// Parses `7` or an inclusive range `7..14`. The second return value says
/// whether the input was written as a range (which pins the plural output
/// shape even for single-element ranges).
fn parse_orders(text: String) -> Result<(Vec<usize>, bool)> {
    let bad = |msg: &str| Error::InvalidSpec {
        spec: text.clone(),
        msg: msg.to_string(),
    };
    if let Some((a, b)) = text.split_once("..") {
        let lo: usize = a.trim().parse().map_err(|_| bad("invalid range start"))?;
        let hi: usize = b.trim().parse().map_err(|_| bad("invalid range end"))?;
        if lo == 0 {
            return Err(bad("orders start at 1"));
        }
        if lo > hi {
            return Err(bad("range start exceeds range end"));
        }
        Ok(((lo..=hi).collect(), true))
    } else {
        let n: usize = text.trim().parse().map_err(|_| bad("invalid order"))?;
        if n == 0 {
            return Err(bad("orders start at 1"));
        }
        Ok((vec![n], false))
    }
}

fn read_digraph(path: &str) -> Result<Digraph> {
    let text = if path == "-" {
        std::io::read_to_string(std::io::stdin())
            .map_err(|e| Error::Io(format!("cannot read stdin: {e}")))?
    } else {
        std::fs::read_to_string(path).map_err(|e| Error::Io(format!("cannot read {path}: {e}")))?
    };
    Digraph::parse_edge_list(&text)
}

fn print_json(value: &serde_json::Value) {
    println!(
        "{}",
        serde_json::to_string_pretty(value).expect("JSON serialization cannot fail")
    );
}

fn csv_writer() -> csv::Writer<std::io::Stdout> {
    csv::Writer::from_writer(std::io::stdout())
}

fn finish_csv(mut w: csv::Writer<std::io::Stdout>) -> Result<()> {
    w.flush().map_err(|e| Error::Io(format!("cannot write csv: {e}")))
}

fn to_json<T: serde::Serialize>(value: &T) -> serde_json::Value {
    serde_json::to_value(value).expect("JSON serialization cannot fail")
}

fn cmd_theta(
    path: Option<&str>,
    family: Option<&str>,
    explain: bool,
    format: Format,
) -> Result<()> {
    let digraph = match (path, family) {
        (Some(p), None) => read_digraph(p)?,
        (None, Some(spec)) => spec.parse::<FamilySpec>()?.build()?,
        _ => unreachable!("clap enforces exactly one input source"),
    };
    let n = digraph.order();
    let (theta, pair) = stable_index_bounded_explained(&digraph);
    match format {
        Format::Text => {
            println!("{theta}");
            if explain {
                println!(
                    "algorithm: saturated powering up to the order bound ({} powers at order {n})",
                    if n == 0 { 0 } else { s_max(n) + 1 }
                );
                match pair {
                    Some(w) => println!(
                        "first duplicate pair: two walks {} -> {} of length {}",
                        w.from, w.to, w.walk_length
                    ),
                    None => println!("no duplicate walk pair at any length"),
                }
            }
        }
        Format::Json => print_json(&json!({
            "order": n,
            "theta": to_json(&theta),
            "algorithm": "bounded",
            "first_duplicate": pair.map(|w| to_json(&w)),
        })),
        Format::Csv => {
            let mut w = csv_writer();
            let record = match pair {
                Some(p) => [
                    theta.to_string(),
                    p.from.to_string(),
                    p.to.to_string(),
                    p.walk_length.to_string(),
                ],
                None => [theta.to_string(), String::new(), String::new(), String::new()],
            };
            w.write_record(["theta", "from", "to", "walk_length"]).ok();
            w.write_record(&record).ok();
            finish_csv(w)?;
        }
    }
    Ok(())
}

fn cmd_set(orders: &[usize], plural: bool, format: Format) -> Result<()> {
    let sets: Vec<_> = orders.iter().map(|&n| theta_set(n)).collect();
    match format {
        Format::Text => {
            for set in &sets {
                if plural {
                    println!("n={}: {}", set.order(), set.compressed());
                } else {
                    println!("{}", set.compressed());
                }
            }
        }
        Format::Json => {
            if plural {
                print_json(&to_json(&sets));
            } else {
                print_json(&to_json(&sets[0]));
            }
        }
        Format::Csv => {
            let mut w = csv_writer();
            w.write_record(["n", "theta"]).ok();
            for set in &sets {
                for member in set.members() {
                    w.write_record([set.order().to_string(), member.to_string()])
                        .ok();
                }
            }
            finish_csv(w)?;
        }
    }
    Ok(())
}

fn cmd_gaps(orders: &[usize], plural: bool, format: Format) -> Result<()> {
    let reports: Vec<GapReport> = orders
        .iter()
        .map(|&n| gaps(n))
        .collect::<Result<_>>()?;
    match format {
        Format::Text => {
            for report in &reports {
                let list = report
                    .gaps
                    .iter()
                    .map(u64::to_string)
                    .collect::<Vec<_>>()
                    .join(",");
                if plural {
                    let shown = if list.is_empty() { "(none)" } else { &list };
                    println!("n={}: {}", report.n, shown);
                } else if !list.is_empty() {
                    println!("{list}");
                }
            }
        }
        Format::Json => {
            if plural {
                print_json(&to_json(&reports));
            } else {
                print_json(&to_json(&reports[0]));
            }
        }
        Format::Csv => {
            let mut w = csv_writer();
            w.write_record(["n", "gap"]).ok();
            for report in &reports {
                for gap in &report.gaps {
                    w.write_record([report.n.to_string(), gap.to_string()]).ok();
                }
            }
            finish_csv(w)?;
        }
    }
    Ok(())
}

fn cmd_witness(n: usize, target: &str, format: Format) -> Result<()> {
    let target: Theta = target.parse()?;
    let (digraph, family) = witness(n, target)?;
    match format {
        Format::Text => {
            print!("{}", digraph.to_edge_list());
            eprintln!("{family}");
        }
        Format::Json => print_json(&json!({
            "n": n,
            "target": to_json(&target),
            "family": to_json(&family),
            "family_order": family.order(),
            "arcs": digraph.arcs().collect::<Vec<_>>(),
            "edge_list": digraph.to_edge_list(),
        })),
        Format::Csv => {
            let mut w = csv_writer();
            w.write_record(["u", "v"]).ok();
            for (u, v) in digraph.arcs() {
                w.write_record([u.to_string(), v.to_string()]).ok();
            }
            finish_csv(w)?;
            eprintln!("{family}");
        }
    }
    Ok(())
}

fn render_summary_text(summary: &EnumSummary) {
    let max = summary
        .max_finite()
        .map_or("none".to_string(), |m| m.to_string());
    println!(
        "n={} total={} max-finite={}",
        summary.n, summary.total, max
    );
    for (theta, count) in &summary.histogram {
        println!("{theta} {count}");
    }
}

fn cmd_enumerate(
    n: usize,
    workers: Option<usize>,
    sample: Option<u64>,
    seed: Option<u64>,
    ceiling: Option<usize>,
    format: Format,
) -> Result<()> {
    let summary = match sample {
        Some(count) => enumerate_random(n, count, seed.unwrap_or(0))?,
        None => enumerate_parallel_with_ceiling(
            n,
            workers.unwrap_or_else(default_workers),
            ceiling.unwrap_or(DEFAULT_CEILING),
        )?,
    };
    match format {
        Format::Text => render_summary_text(&summary),
        Format::Json => print_json(&to_json(&summary)),
        Format::Csv => {
            let mut w = csv_writer();
            w.write_record(["theta", "count"]).ok();
            for (theta, count) in &summary.histogram {
                w.write_record([theta.to_string(), count.to_string()]).ok();
            }
            finish_csv(w)?;
        }
    }
    Ok(())
}

fn render_verify_text(report: &VerifyReport) {
    let status = if report.all_ok() { "ok" } else { "FAILED" };
    println!(
        "n={}: {} (index set {})",
        report.n,
        status,
        report.index_set.compressed()
    );
    for w in &report.witnesses {
        let mark = if w.verified { "ok" } else { "FAILED" };
        println!(
            "  {} via {} (member order {}, {} us) {}",
            w.target, w.family, w.family_order, w.micros, mark
        );
    }
    if let Some(empirical) = &report.empirical {
        let mark = if empirical.ok() { "agrees" } else { "DISAGREES" };
        println!(
            "  exhaustive sweep over {} digraphs {}",
            empirical.summary.total, mark
        );
    }
}

fn cmd_verify(orders: &[usize], plural: bool, exhaustive: bool, format: Format) -> Result<()> {
    let mut reports = Vec::new();
    for &n in orders {
        reports.push(verify_theorem_with(n, exhaustive || n <= 4)?);
    }
    match format {
        Format::Text => {
            for report in &reports {
                render_verify_text(report);
            }
        }
        Format::Json => {
            if plural {
                print_json(&to_json(&reports));
            } else {
                print_json(&to_json(&reports[0]));
            }
        }
        Format::Csv => {
            let mut w = csv_writer();
            w.write_record(["n", "target", "family", "family_order", "verified", "micros"])
                .ok();
            for report in &reports {
                for rec in &report.witnesses {
                    w.write_record([
                        report.n.to_string(),
                        rec.target.to_string(),
                        rec.family.to_string(),
                        rec.family_order.to_string(),
                        rec.verified.to_string(),
                        rec.micros.to_string(),
                    ])
                    .ok();
                }
            }
            finish_csv(w)?;
        }
    }
    if let Some(failed) = reports.iter().find(|r| !r.all_ok()) {
        return Err(Error::VerificationFailed { n: failed.n });
    }
    Ok(())
}

fn cmd_construct(spec: &str, format: Format) -> Result<()> {
    let family: FamilySpec = spec.parse()?;
    let digraph = family.build()?;
    match format {
        Format::Text => {
            print!("{}", digraph.to_edge_list());
        }
        Format::Json => print_json(&json!({
            "family": to_json(&family),
            "order": digraph.order(),
            "arcs": digraph.arcs().collect::<Vec<_>>(),
            "edge_list": digraph.to_edge_list(),
        })),
        Format::Csv => {
            let mut w = csv_writer();
            w.write_record(["u", "v"]).ok();
            for (u, v) in digraph.arcs() {
                w.write_record([u.to_string(), v.to_string()]).ok();
            }
            finish_csv(w)?;
        }
    }
    Ok(())
}
