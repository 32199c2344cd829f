//! `zeno`: a deterministic command-line surface over the exact division
//! tree, sequence space, nilpotent arithmetic, and paradox simulators.
//!
//! Exit codes: 0 on success, 1 on a domain error (reported as structured
//! JSON on stderr), 2 on a usage error. Identical invocations produce
//! byte-identical output.

mod fmt;
mod parse;

use std::cmp::Ordering;
use std::process::exit;

use clap::{Parser, Subcommand};
use serde_json::{json, Value};

use fmt::Format;
use parse::CliError;
use zeno_core::checks;
use zeno_core::divider::{self, DivisionTree};
use zeno_core::nilpotent::{Dual, GalileanBoost};
use zeno_core::paradoxes::{self, AchillesReport, DichotomyReport};
use zeno_core::philebian::{self, PoincareReport};
use zeno_core::rational::Rational;
use zeno_core::BitWord;

#[derive(Parser)]
#[command(
    name = "zeno",
    version,
    about = "Exact division trees, binary sequences, nilpotent numbers, and motion-paradox accounting"
)]
struct Cli {
    /// Output format
    #[arg(long, global = true, value_enum, default_value_t = Format::Plain)]
    format: Format,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Division tree of the unit rod
    Tree {
        #[command(subcommand)]
        command: TreeCommand,
    },
    /// Eventually periodic binary sequences
    Seq {
        #[command(subcommand)]
        command: SeqCommand,
    },
    /// Nilpotent numbers a + b·h with h² = 0
    Dual {
        #[command(subcommand)]
        command: DualCommand,
    },
    /// Motion paradox simulators
    Paradox {
        #[command(subcommand)]
        command: ParadoxCommand,
    },
    /// Run the full invariant suite
    Check,
}

#[derive(Subcommand)]
enum TreeCommand {
    /// Enumerate the leaves at a given depth
    Expand {
        #[arg(long)]
        depth: u32,
    },
    /// Partition and part counts at a given depth
    Counts {
        #[arg(long)]
        depth: u32,
    },
    /// Interval and division point named by a node label
    Interval {
        /// Binary word; empty for the whole rod
        #[arg(long, default_value = "")]
        word: String,
    },
}

#[derive(Subcommand)]
enum SeqCommand {
    /// Lexicographic comparison of two sequences
    Compare {
        #[arg(long)]
        x: String,
        #[arg(long)]
        y: String,
    },
    /// The rational value a sequence denotes
    Value {
        #[arg(long)]
        seq: String,
    },
    /// Both representations of the dyadic rational k/2^n
    Pair {
        #[arg(long)]
        k: String,
        #[arg(long)]
        n: u32,
    },
    /// Canonical representative of a sequence's value
    Canon {
        #[arg(long)]
        seq: String,
    },
    /// Class A (no all-ones tail) or B (all-ones tail)
    Classify {
        #[arg(long)]
        seq: String,
    },
    /// A class-A sequence strictly between two class-A sequences
    Witness {
        #[arg(long)]
        x: String,
        #[arg(long)]
        y: String,
    },
    /// Check that no candidate lies strictly between the faces of k/2^n
    Gap {
        #[arg(long)]
        k: String,
        #[arg(long)]
        n: u32,
        /// May be given repeatedly
        #[arg(long = "candidate")]
        candidates: Vec<String>,
    },
    /// Intransitive indistinguishability along an increasing chain
    Poincare {
        #[arg(long, allow_hyphen_values = true)]
        epsilon: String,
        /// Comma-separated rationals, strictly increasing
        #[arg(long, allow_hyphen_values = true)]
        values: String,
    },
}

#[derive(Subcommand)]
enum DualCommand {
    /// Componentwise sum
    Add {
        #[arg(long, allow_hyphen_values = true)]
        x: String,
        #[arg(long, allow_hyphen_values = true)]
        y: String,
    },
    /// Product with h² dropped
    Mul {
        #[arg(long, allow_hyphen_values = true)]
        x: String,
        #[arg(long, allow_hyphen_values = true)]
        y: String,
    },
    /// Exact quotient; fails on a zero real part
    Div {
        #[arg(long, allow_hyphen_values = true)]
        x: String,
        #[arg(long, allow_hyphen_values = true)]
        y: String,
    },
    /// Evaluate a polynomial at a dual point
    Eval {
        /// Coefficients, constant term first
        #[arg(long, allow_hyphen_values = true)]
        poly: String,
        #[arg(long, allow_hyphen_values = true)]
        x: String,
    },
    /// Shift a worldline's velocity
    Boost {
        #[arg(long, allow_hyphen_values = true)]
        x: String,
        #[arg(long, allow_hyphen_values = true)]
        w: String,
    },
    /// Position of a worldline at a given time
    Worldline {
        #[arg(long, allow_hyphen_values = true)]
        x: String,
        #[arg(long, allow_hyphen_values = true)]
        t: String,
    },
}

#[derive(Subcommand)]
enum ParadoxCommand {
    /// Halving runs toward the goal
    Dichotomy {
        #[arg(long)]
        n: u32,
    },
    /// The pursuit with a head start
    Achilles {
        #[arg(long)]
        ratio: String,
        #[arg(long = "head-start")]
        head_start: String,
        #[arg(long)]
        steps: u32,
    },
    /// Rows of bodies passing each other
    Stadium {
        #[arg(long)]
        bodies: u32,
        #[arg(long)]
        ticks: u32,
    },
    /// Parts, widths, and their constant product
    Arrow {
        #[arg(long)]
        n: u32,
    },
}

fn main() {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(err) => {
            let code = if err.use_stderr() { 2 } else { 0 };
            let _ = err.print();
            exit(code);
        }
    };
    match run(cli) {
        Ok((output, code)) => {
            print!("{output}");
            exit(code);
        }
        Err(CliError::Usage(message)) => {
            eprintln!("error: {message}");
            exit(2);
        }
        Err(CliError::Domain { kind, message }) => {
            eprintln!(
                "{}",
                json!({ "error": { "kind": kind, "message": message } })
            );
            exit(1);
        }
    }
}

fn run(cli: Cli) -> Result<(String, i32), CliError> {
    let format = cli.format;
    let output = match cli.command {
        Command::Tree { command } => match command {
            TreeCommand::Expand { depth } => tree_expand(format, depth),
            TreeCommand::Counts { depth } => tree_counts(format, depth),
            TreeCommand::Interval { word } => tree_interval(format, &parse::word(&word)?),
        },
        Command::Seq { command } => match command {
            SeqCommand::Compare { x, y } => {
                let ordering = match parse::seq(&x)?.cmp(&parse::seq(&y)?) {
                    Ordering::Less => "Less",
                    Ordering::Equal => "Equal",
                    Ordering::Greater => "Greater",
                };
                fmt::scalar(format, "ordering", ordering)
            }
            SeqCommand::Value { seq } => {
                fmt::scalar(format, "value", &parse::seq(&seq)?.value().to_string())
            }
            SeqCommand::Pair { k, n } => {
                let pair =
                    philebian::dyadic_pair(&parse::numerator(&k)?, n).map_err(parse::seq_domain)?;
                fmt::object(
                    format,
                    &[
                        ("lower", json!(pair.lower().to_string())),
                        ("upper", json!(pair.upper().to_string())),
                        ("value", json!(pair.value().to_string())),
                    ],
                )
            }
            SeqCommand::Canon { seq } => fmt::scalar(
                format,
                "canonical",
                &parse::seq(&seq)?.canonical().to_string(),
            ),
            SeqCommand::Classify { seq } => {
                fmt::scalar(format, "class", &parse::seq(&seq)?.classify().to_string())
            }
            SeqCommand::Witness { x, y } => {
                let witness = philebian::density_witness(&parse::seq(&x)?, &parse::seq(&y)?)
                    .map_err(parse::seq_domain)?;
                fmt::scalar(format, "witness", &witness.to_string())
            }
            SeqCommand::Gap { k, n, candidates } => {
                let pair =
                    philebian::dyadic_pair(&parse::numerator(&k)?, n).map_err(parse::seq_domain)?;
                let candidates: Vec<_> = candidates
                    .iter()
                    .map(|c| parse::seq(c))
                    .collect::<Result<_, _>>()?;
                let gap = philebian::gap_check(&pair, &candidates);
                fmt::object(
                    format,
                    &[
                        ("gap", json!(gap)),
                        ("lower", json!(pair.lower().to_string())),
                        ("upper", json!(pair.upper().to_string())),
                    ],
                )
            }
            SeqCommand::Poincare { epsilon, values } => {
                let report =
                    philebian::poincare_chain(&parse::rat(&epsilon)?, &parse::rat_list(&values)?)
                        .map_err(parse::seq_domain)?;
                poincare(format, &report)
            }
        },
        Command::Dual { command } => match command {
            DualCommand::Add { x, y } => dual_out(format, &(&parse::dual(&x)? + &parse::dual(&y)?)),
            DualCommand::Mul { x, y } => dual_out(format, &(&parse::dual(&x)? * &parse::dual(&y)?)),
            DualCommand::Div { x, y } => {
                let quotient = parse::dual(&x)?
                    .try_div(&parse::dual(&y)?)
                    .map_err(parse::dual_domain)?;
                dual_out(format, &quotient)
            }
            DualCommand::Eval { poly, x } => {
                dual_out(format, &parse::poly(&poly)?.eval_dual(&parse::dual(&x)?))
            }
            DualCommand::Boost { x, w } => {
                let boost = GalileanBoost::new(parse::rat(&w)?);
                dual_out(format, &parse::dual(&x)?.boosted(&boost))
            }
            DualCommand::Worldline { x, t } => {
                let position = parse::dual(&x)?.position_at(&parse::rat(&t)?);
                fmt::scalar(format, "position", &position.to_string())
            }
        },
        Command::Paradox { command } => match command {
            ParadoxCommand::Dichotomy { n } => {
                let report = paradoxes::dichotomy(n).map_err(parse::paradox_domain)?;
                dichotomy(format, &report)
            }
            ParadoxCommand::Achilles {
                ratio,
                head_start,
                steps,
            } => {
                let report =
                    paradoxes::achilles(&parse::rat(&ratio)?, &parse::rat(&head_start)?, steps)
                        .map_err(parse::paradox_domain)?;
                achilles(format, &report)
            }
            ParadoxCommand::Stadium { bodies, ticks } => {
                let report = paradoxes::stadium(bodies, ticks).map_err(parse::paradox_domain)?;
                fmt::object(
                    format,
                    &[
                        ("bodies", json!(report.row_length)),
                        ("ticks", json!(report.ticks)),
                        ("offset_a", json!(report.offset_a)),
                        ("offset_b", json!(report.offset_b)),
                        ("offset_c", json!(report.offset_c)),
                        ("passings_b_vs_a", json!(report.passings_b_vs_a)),
                        ("passings_b_vs_c", json!(report.passings_b_vs_c)),
                        ("ratio", json!(report.ratio().to_string())),
                    ],
                )
            }
            ParadoxCommand::Arrow { n } => {
                let report = paradoxes::arrow(n);
                fmt::object(
                    format,
                    &[
                        ("depth", json!(report.depth)),
                        ("width", json!(report.width.to_string())),
                        ("count", json!(report.count.to_string())),
                        ("product", json!(report.product.to_string())),
                    ],
                )
            }
        },
        Command::Check => return Ok(check(format)),
    };
    Ok((output, 0))
}

fn tree_expand(format: Format, depth: u32) -> String {
    let tree = DivisionTree::expand(depth);
    let rows: Vec<Vec<String>> = tree
        .leaf_intervals()
        .map(|(word, interval)| {
            vec![
                label(format, &word),
                interval.lower().to_string(),
                interval.upper().to_string(),
            ]
        })
        .collect();
    fmt::rows(format, &["label", "lower", "upper"], &rows)
}

fn tree_counts(format: Format, depth: u32) -> String {
    let counts = divider::counts(depth);
    fmt::object(
        format,
        &[
            ("depth", json!(depth)),
            ("partitions", json!(counts.partitions.to_string())),
            ("parts", json!(counts.parts.to_string())),
        ],
    )
}

fn tree_interval(format: Format, word: &BitWord) -> String {
    let interval = divider::leaf_interval(word);
    fmt::object(
        format,
        &[
            ("label", json!(label(format, word))),
            ("lower", json!(interval.lower().to_string())),
            ("upper", json!(interval.upper().to_string())),
            ("midpoint", json!(divider::division_point(word).to_string())),
        ],
    )
}

/// The root's empty label is spelled out in the human format only.
fn label(format: Format, word: &BitWord) -> String {
    let text = word.to_string();
    if text.is_empty() && format == Format::Plain {
        "ε".to_owned()
    } else {
        text
    }
}

fn dual_out(format: Format, value: &Dual) -> String {
    match format {
        Format::Plain => format!("{value}\n"),
        _ => fmt::object(
            format,
            &[
                ("a", json!(value.real().to_string())),
                ("b", json!(value.infinitesimal().to_string())),
            ],
        ),
    }
}

fn dichotomy(format: Format, report: &DichotomyReport) -> String {
    if format == Format::Csv {
        let mut cumulative = Rational::new(0.into(), 1.into());
        let rows: Vec<Vec<String>> = report
            .steps
            .iter()
            .enumerate()
            .map(|(i, step)| {
                cumulative = &cumulative + step;
                let remaining = Rational::new(1.into(), 1.into()) - &cumulative;
                vec![
                    (i + 1).to_string(),
                    step.to_string(),
                    cumulative.to_string(),
                    remaining.to_string(),
                ]
            })
            .collect();
        return fmt::rows(
            format,
            &["step", "length", "cumulative", "remaining"],
            &rows,
        );
    }
    let steps: Vec<Value> = report.steps.iter().map(|s| json!(s.to_string())).collect();
    fmt::object(
        format,
        &[
            ("depth", json!(report.depth)),
            ("steps", Value::Array(steps)),
            ("cumulative", json!(report.cumulative.to_string())),
            ("remaining", json!(report.remaining.to_string())),
            ("partitions", json!(report.partitions.to_string())),
            ("parts", json!(report.parts.to_string())),
        ],
    )
}

fn achilles(format: Format, report: &AchillesReport) -> String {
    if format == Format::Csv {
        let rows: Vec<Vec<String>> = report
            .points
            .iter()
            .enumerate()
            .map(|(i, point)| {
                let gap = &report.limit - point;
                vec![i.to_string(), point.to_string(), gap.to_string()]
            })
            .collect();
        return fmt::rows(format, &["stage", "point", "gap_to_limit"], &rows);
    }
    let points: Vec<Value> = report.points.iter().map(|p| json!(p.to_string())).collect();
    fmt::object(
        format,
        &[
            ("ratio", json!(report.ratio.to_string())),
            ("head_start", json!(report.head_start.to_string())),
            ("points", Value::Array(points)),
            ("limit", json!(report.limit.to_string())),
        ],
    )
}

fn poincare(format: Format, report: &PoincareReport) -> String {
    let value = |i: usize| report.values()[i].to_string();
    match format {
        Format::Plain => {
            let join_pairs = |pairs: &[(usize, usize)], sep: &str| {
                if pairs.is_empty() {
                    "(none)".to_owned()
                } else {
                    pairs
                        .iter()
                        .map(|&(i, j)| format!("{}{sep}{}", value(i), value(j)))
                        .collect::<Vec<_>>()
                        .join(", ")
                }
            };
            let witnesses = if report.witnesses().is_empty() {
                "(none)".to_owned()
            } else {
                report
                    .witnesses()
                    .iter()
                    .map(|&(i, j, k)| format!("({}, {}, {})", value(i), value(j), value(k)))
                    .collect::<Vec<_>>()
                    .join(", ")
            };
            format!(
                "epsilon: {}\nvalues: {}\nindistinguishable: {}\ndistinguishable: {}\nwitnesses: {}\nintransitive: {}\n",
                report.epsilon(),
                report
                    .values()
                    .iter()
                    .map(ToString::to_string)
                    .collect::<Vec<_>>()
                    .join(", "),
                join_pairs(report.indistinguishable(), " ~ "),
                join_pairs(report.distinguishable(), " < "),
                witnesses,
                report.intransitive(),
            )
        }
        Format::Json => {
            let pairs = |pairs: &[(usize, usize)]| {
                Value::Array(pairs.iter().map(|&(i, j)| json!([i, j])).collect())
            };
            let object = json!({
                "epsilon": report.epsilon().to_string(),
                "values": report.values().iter().map(ToString::to_string).collect::<Vec<_>>(),
                "indistinguishable": pairs(report.indistinguishable()),
                "distinguishable": pairs(report.distinguishable()),
                "witnesses": Value::Array(
                    report.witnesses().iter().map(|&(i, j, k)| json!([i, j, k])).collect()
                ),
                "intransitive": report.intransitive(),
            });
            format!("{object}\n")
        }
        Format::Csv => {
            let mut rows: Vec<Vec<String>> = Vec::new();
            for &(i, j) in report.indistinguishable() {
                rows.push(vec![
                    "indistinguishable".into(),
                    value(i),
                    value(j),
                    String::new(),
                ]);
            }
            for &(i, j) in report.distinguishable() {
                rows.push(vec![
                    "distinguishable".into(),
                    value(i),
                    value(j),
                    String::new(),
                ]);
            }
            for &(i, j, k) in report.witnesses() {
                rows.push(vec!["witness".into(), value(i), value(j), value(k)]);
            }
            fmt::rows(format, &["relation", "a", "b", "c"], &rows)
        }
    }
}

fn check(format: Format) -> (String, i32) {
    let reports = checks::run_all();
    let passed = reports.iter().filter(|r| r.passed).count();
    let code = if passed == reports.len() { 0 } else { 1 };
    let output = match format {
        Format::Plain => {
            let mut out = String::new();
            for report in &reports {
                let verdict = if report.passed { "ok" } else { "FAIL" };
                out.push_str(&format!("{verdict} {}: {}\n", report.name, report.detail));
            }
            out.push_str(&format!("{passed}/{} checks passed\n", reports.len()));
            out
        }
        Format::Json => {
            let array: Vec<Value> = reports
                .iter()
                .map(|r| json!({ "name": r.name, "passed": r.passed, "detail": r.detail }))
                .collect();
            format!("{}\n", Value::Array(array))
        }
        Format::Csv => {
            let rows: Vec<Vec<String>> = reports
                .iter()
                .map(|r| vec![r.name.to_owned(), r.passed.to_string(), r.detail.clone()])
                .collect();
            fmt::rows(format, &["name", "passed", "detail"], &rows)
        }
    };
    (output, code)
}
