//! Batch command-line front end: compute functor values, enumerate hom
//! posets, run law suites, and print deterministic text or JSON reports.
//!
//! Exit status contract: 0 — computation succeeded / all checks passed,
//! 1 — at least one law suite reported failures, 2 — usage or input error.

use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use serde::Serialize;
use serde_json::json;

use crate::algebra::{act_contra_i, act_cov_t, pair_it, sigma_act_i, sigma_act_t, sigma_pair};
use crate::core::{enumerate_hom, hom_poset, Error, MonMap, Tag};
use crate::duality::Functor;
use crate::laws::{registry, LawReport};

/// Default bound for `table` when neither the flag nor the environment
/// variable is set.
const DEFAULT_TABLE_BOUND: usize = 5;

#[derive(Parser)]
#[command(
    name = "ordcat",
    version,
    about = "Finite total orders: dualities, monoidal structure, and an exhaustive law checker"
)]
pub struct Cli {
    /// Output format.
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    pub format: Format,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
}

#[derive(Subcommand)]
pub enum Command {
    /// Apply a named functor to a map literal, e.g. `apply B "1->2:[1]"`.
    ///
    /// Functors: lad, rad, dualT, dualI, B, B-inv, bracket, t, i, iT, tI, op.
    Apply { functor: String, map: String },
    /// Compose two map literals, first argument applied first.
    Compose { first: String, second: String },
    /// Enumerate the hom-set `src -> dst` under a tag (ord, ord-t, ord-i,
    /// ord-it), optionally with the pointwise order relation.
    Hom {
        src: usize,
        dst: usize,
        tag: String,
        /// Also print the order relation as a 0/1 matrix.
        #[arg(long)]
        order: bool,
    },
    /// Apply a module action: cov-t, contra-i, sigma-t or sigma-i.
    Act {
        action: String,
        lhs: String,
        rhs: String,
    },
    /// Apply a pairing: it (ordinal sum) or sigma (interval join).
    Pair {
        pairing: String,
        lhs: String,
        rhs: String,
    },
    /// Run one law suite by name, or `all`. Exit status 1 if anything fails.
    Check {
        suite: String,
        /// Size bound; defaults to each suite's own bound, or to
        /// ORD_CHECK_BOUND when set.
        #[arg(long)]
        bound: Option<usize>,
    },
    /// Print the hom-count matrix for all four tags.
    Table {
        #[arg(long)]
        bound: Option<usize>,
    },
}

/// A finished command: exit status plus rendered output.
#[derive(Debug)]
pub struct Outcome {
    pub status: u8,
    pub output: String,
}

impl Outcome {
    fn ok(output: String) -> Outcome {
        Outcome { status: 0, output }
    }
}

/// Entry point used by the binary.
pub fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli.command, cli.format) {
        Ok(outcome) => {
            print!("{}", outcome.output);
            ExitCode::from(outcome.status)
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}

/// Reads the bound override from the environment.
fn env_bound() -> Option<usize> {
    std::env::var("ORD_CHECK_BOUND").ok()?.parse().ok()
}

/// Executes a parsed command. Input errors come back as `Err` and map to
/// exit status 2.
pub fn run(command: &Command, format: Format) -> Result<Outcome, Error> {
    match command {
        Command::Apply { functor, map } => {
            let functor = Functor::builtin(functor)?;
            let map: MonMap = map.parse()?;
            map.require_member(functor.src())?;
            single_map(functor.mor(&map)?, format)
        }
        Command::Compose { first, second } => {
            let first: MonMap = first.parse()?;
            let second: MonMap = second.parse()?;
            single_map(first.then(&second)?, format)
        }
        Command::Hom {
            src,
            dst,
            tag,
            order,
        } => {
            let tag: Tag = tag.parse()?;
            hom(*src, *dst, tag, *order, format)
        }
        Command::Act { action, lhs, rhs } => {
            let lhs: MonMap = lhs.parse()?;
            let rhs: MonMap = rhs.parse()?;
            let result = match action.as_str() {
                "cov-t" => act_cov_t(&lhs, &rhs)?,
                "contra-i" => act_contra_i(&lhs, &rhs)?,
                "sigma-t" => sigma_act_t(&lhs, &rhs)?,
                "sigma-i" => sigma_act_i(&lhs, &rhs)?,
                other => return Err(Error::UnknownFunctor(format!("action {other}"))),
            };
            single_map(result, format)
        }
        Command::Pair { pairing, lhs, rhs } => {
            let lhs: MonMap = lhs.parse()?;
            let rhs: MonMap = rhs.parse()?;
            let result = match pairing.as_str() {
                "it" => pair_it(&lhs, &rhs)?,
                "sigma" => sigma_pair(&lhs, &rhs)?,
                other => return Err(Error::UnknownFunctor(format!("pairing {other}"))),
            };
            single_map(result, format)
        }
        Command::Check { suite, bound } => check(suite, bound.or_else(env_bound), format),
        Command::Table { bound } => {
            let bound = bound.or_else(env_bound).unwrap_or(DEFAULT_TABLE_BOUND);
            table(bound, format)
        }
    }
}

fn single_map(map: MonMap, format: Format) -> Result<Outcome, Error> {
    let output = match format {
        Format::Text => format!("{map}\n"),
        Format::Json => format!("{}\n", json!({ "result": map.to_string() })),
    };
    Ok(Outcome::ok(output))
}

fn hom(src: usize, dst: usize, tag: Tag, order: bool, format: Format) -> Result<Outcome, Error> {
    if order {
        let poset = hom_poset(src, dst, tag)?;
        let k = poset.len();
        match format {
            Format::Text => {
                let mut out = String::new();
                for f in poset.elements() {
                    out.push_str(&format!("{f}\n"));
                }
                out.push_str("order (leq matrix):\n");
                for i in 0..k {
                    let row: Vec<&str> = (0..k)
                        .map(|j| if poset.leq(i, j) { "1" } else { "0" })
                        .collect();
                    out.push_str(&row.join(" "));
                    out.push('\n');
                }
                Ok(Outcome::ok(out))
            }
            Format::Json => {
                let elements: Vec<String> =
                    poset.elements().iter().map(|f| f.to_string()).collect();
                let leq: Vec<Vec<bool>> = (0..k)
                    .map(|i| (0..k).map(|j| poset.leq(i, j)).collect())
                    .collect();
                let value = json!({
                    "src": src,
                    "dst": dst,
                    "tag": tag.name(),
                    "count": k,
                    "elements": elements,
                    "leq": leq,
                });
                Ok(Outcome::ok(format!("{value}\n")))
            }
        }
    } else {
        let maps = enumerate_hom(src, dst, tag)?;
        match format {
            Format::Text => {
                let mut out = String::new();
                for f in &maps {
                    out.push_str(&format!("{f}\n"));
                }
                Ok(Outcome::ok(out))
            }
            Format::Json => {
                let elements: Vec<String> = maps.iter().map(|f| f.to_string()).collect();
                let value = json!({
                    "src": src,
                    "dst": dst,
                    "tag": tag.name(),
                    "count": maps.len(),
                    "elements": elements,
                });
                Ok(Outcome::ok(format!("{value}\n")))
            }
        }
    }
}

fn check(target: &str, bound: Option<usize>, format: Format) -> Result<Outcome, Error> {
    let reports: Vec<LawReport> = if target == "all" {
        registry()
            .iter()
            .map(|suite| suite.run(bound.unwrap_or(suite.default_bound)))
            .collect()
    } else {
        let suite = crate::laws::find_suite(target)?;
        vec![suite.run(bound.unwrap_or(suite.default_bound))]
    };
    let all_passed = reports.iter().all(LawReport::passed);
    let output = match format {
        Format::Text => {
            let mut out = String::new();
            for report in &reports {
                if report.passed() {
                    out.push_str(&format!(
                        "{}: pass (instances={}, bound={})\n",
                        report.suite, report.instances, report.bound
                    ));
                } else {
                    out.push_str(&format!(
                        "{}: FAIL ({} counterexample(s) shown, instances={}, bound={})\n",
                        report.suite,
                        report.failures.len(),
                        report.instances,
                        report.bound
                    ));
                    for failure in &report.failures {
                        out.push_str(&format!(
                            "  inputs: {}\n    expected: {}\n    actual:   {}\n",
                            failure.inputs.join(", "),
                            failure.expected,
                            failure.actual
                        ));
                    }
                }
            }
            out
        }
        Format::Json => {
            format!(
                "{}\n",
                serde_json::to_string_pretty(&reports).expect("reports serialize")
            )
        }
    };
    Ok(Outcome {
        status: u8::from(!all_passed),
        output,
    })
}

#[derive(Serialize)]
struct TagTable {
    tag: &'static str,
    rows: Vec<Vec<u64>>,
}

fn count_table(tag: Tag, bound: usize) -> TagTable {
    let lo = usize::from(tag.pointed());
    let rows = (lo..=bound)
        .map(|m| {
            (lo..=bound)
                .map(|n| enumerate_hom(m, n, tag).expect("sizes are tag-valid").len() as u64)
                .collect()
        })
        .collect();
    TagTable {
        tag: tag.name(),
        rows,
    }
}

fn table(bound: usize, format: Format) -> Result<Outcome, Error> {
    let tables: Vec<TagTable> = Tag::ALL
        .iter()
        .map(|&tag| count_table(tag, bound))
        .collect();
    match format {
        Format::Text => {
            let mut out = String::new();
            for t in &tables {
                let lo = usize::from(t.tag != "ord");
                out.push_str(&format!("hom counts, tag={}, bound={bound}\n", t.tag));
                let header: Vec<String> = (lo..=bound).map(|n| format!("{n:>6}")).collect();
                out.push_str(&format!("  m\\n {}\n", header.join("")));
                for (i, row) in t.rows.iter().enumerate() {
                    let cells: Vec<String> = row.iter().map(|c| format!("{c:>6}")).collect();
                    out.push_str(&format!("{:>5} {}\n", i + lo, cells.join("")));
                }
                out.push('\n');
            }
            Ok(Outcome::ok(out))
        }
        Format::Json => {
            let value = json!({ "bound": bound, "tables": tables });
            Ok(Outcome::ok(format!(
                "{}\n",
                serde_json::to_string_pretty(&value).expect("tables serialize")
            )))
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn apply(functor: &str, map: &str) -> Result<Outcome, Error> {
        run(
            &Command::Apply {
                functor: functor.to_string(),
                map: map.to_string(),
            },
            Format::Text,
        )
    }

    #[test]
    fn apply_command() {
        assert_eq!(apply("B", "1->2:[1]").unwrap().output, "3->2:[0 1 1]\n");
        assert_eq!(apply("dualT", "2->2:[1 1]").unwrap().output, "2->2:[1 1]\n");
        assert_eq!(
            apply("op", "3->2:[0 0 1]").unwrap().output,
            "3->2:[0 1 1]\n"
        );
        let err = apply("dualT", "2->2:[0 0]").unwrap_err();
        assert!(err.to_string().contains("not a member of ord-t"));
        assert!(matches!(
            apply("nope", "1->1:[0]"),
            Err(Error::UnknownFunctor(_))
        ));
        assert!(matches!(
            apply("B", "2->2:[1 0]"),
            Err(Error::NotMonotone { .. })
        ));
    }

    #[test]
    fn compose_command() {
        let outcome = run(
            &Command::Compose {
                first: "2->3:[0 2]".to_string(),
                second: "3->2:[0 0 1]".to_string(),
            },
            Format::Text,
        )
        .unwrap();
        assert_eq!(outcome.output, "2->2:[0 1]\n");
    }

    #[test]
    fn hom_command() {
        let outcome = run(
            &Command::Hom {
                src: 3,
                dst: 2,
                tag: "ord-t".to_string(),
                order: false,
            },
            Format::Text,
        )
        .unwrap();
        assert_eq!(outcome.output, "3->2:[0 0 1]\n3->2:[0 1 1]\n3->2:[1 1 1]\n");

        let outcome = run(
            &Command::Hom {
                src: 2,
                dst: 2,
                tag: "ord".to_string(),
                order: true,
            },
            Format::Json,
        )
        .unwrap();
        let value: serde_json::Value = serde_json::from_str(&outcome.output).unwrap();
        assert_eq!(value["count"], 3);
        assert_eq!(value["leq"][0][2], true);
        assert_eq!(value["leq"][2][0], false);
    }

    #[test]
    fn act_and_pair_commands() {
        let outcome = run(
            &Command::Act {
                action: "cov-t".to_string(),
                lhs: "2->2:[0 1]".to_string(),
                rhs: "1->1:[0]".to_string(),
            },
            Format::Text,
        )
        .unwrap();
        assert_eq!(outcome.output, "3->3:[0 1 2]\n");

        let outcome = run(
            &Command::Pair {
                pairing: "it".to_string(),
                lhs: "1->1:[0]".to_string(),
                rhs: "2->2:[1 1]".to_string(),
            },
            Format::Text,
        )
        .unwrap();
        assert_eq!(outcome.output, "3->3:[0 2 2]\n");

        assert!(run(
            &Command::Act {
                action: "sideways".to_string(),
                lhs: "1->1:[0]".to_string(),
                rhs: "1->1:[0]".to_string(),
            },
            Format::Text,
        )
        .is_err());
    }

    #[test]
    fn check_command() {
        let outcome = run(
            &Command::Check {
                suite: "thm-2.23".to_string(),
                bound: Some(3),
            },
            Format::Text,
        )
        .unwrap();
        assert_eq!(outcome.status, 0);
        assert!(outcome.output.starts_with("thm-2.23: pass"));

        assert!(matches!(
            run(
                &Command::Check {
                    suite: "thm-9.99".to_string(),
                    bound: None,
                },
                Format::Text,
            ),
            Err(Error::UnknownSuite(_))
        ));
    }

    #[test]
    fn check_json_is_stable_keyed() {
        let outcome = run(
            &Command::Check {
                suite: "lemma-2.18".to_string(),
                bound: Some(3),
            },
            Format::Json,
        )
        .unwrap();
        let value: serde_json::Value = serde_json::from_str(&outcome.output).unwrap();
        let report = &value[0];
        assert_eq!(report["suite"], "lemma-2.18");
        assert_eq!(report["bound"], 3);
        assert!(report["instances"].as_u64().unwrap() > 0);
        assert_eq!(report["failures"].as_array().unwrap().len(), 0);
        assert!(report.get("millis").is_some());
    }

    #[test]
    fn failing_reports_map_to_status_one() {
        // assembled by hand: the status mapping is data-driven
        let failing = LawReport {
            suite: "example".to_string(),
            bound: 3,
            instances: 1,
            failures: vec![crate::laws::Failure {
                inputs: vec!["1->1:[0]".to_string()],
                expected: "x".to_string(),
                actual: "y".to_string(),
            }],
            millis: 0,
        };
        assert!(!failing.passed());
    }

    #[test]
    fn table_command_contains_the_binomial_column() {
        let outcome = run(&Command::Table { bound: Some(3) }, Format::Json).unwrap();
        let value: serde_json::Value = serde_json::from_str(&outcome.output).unwrap();
        assert_eq!(value["tables"][0]["tag"], "ord");
        let rows = value["tables"][0]["rows"].as_array().unwrap();
        // counts into the 3-element order, one per source size 0..3
        let into_three: Vec<u64> = rows.iter().map(|r| r[3].as_u64().unwrap()).collect();
        assert_eq!(into_three, vec![1, 3, 6, 10]);
    }
}
