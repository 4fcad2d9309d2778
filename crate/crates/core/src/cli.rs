//! The `ytl` command line.
//!
//! Exit codes: 0 success, 1 usage or parse error, 2 domain precondition
//! violated, 3 internal cross-check failure.

use std::fmt::Write as _;

use clap::{Parser, Subcommand, ValueEnum};
use serde::Serialize;
use serde_json::{json, Value};

use crate::branching::{
    classify_r, restriction_multiplicities, ytl_dimension_formula, ytl_dimension_sum,
};
use crate::error::Error;
use crate::lr::{lr_coefficient, schur_product, SchurExpansion};
use crate::partitions::{catalan, parse_multipartition, parse_partition, skew_shape};
use crate::tableaux::{count_standard_d_tableaux, enumerate_ssyt, is_lr_tableau, Weight};

pub const EXIT_OK: i32 = 0;
pub const EXIT_USAGE: i32 = 1;
pub const EXIT_DOMAIN: i32 = 2;
pub const EXIT_INCONSISTENT: i32 = 3;

#[derive(Parser, Debug)]
#[command(
    name = "ytl",
    version,
    about = "Littlewood-Richardson coefficients, G(d,1,n) branching and YTL representations"
)]
struct Cli {
    /// Output format
    #[arg(long, value_enum, default_value_t = Format::Json, global = true)]
    format: Format,

    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Tsv,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Method {
    Formula,
    Sum,
    Both,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Littlewood-Richardson coefficient c^nu_{lambda,mu}
    Lrcoeff {
        #[arg(long)]
        lambda: String,
        #[arg(long)]
        mu: String,
        #[arg(long)]
        nu: String,
    },
    /// Schur expansion of s_lambda * s_mu
    SchurProduct {
        #[arg(long)]
        lambda: String,
        #[arg(long)]
        mu: String,
    },
    /// Restriction of E^lambda from G(d,1,n) to S_n; components separated by '|'
    Restrict { multipartition: String },
    /// Labels of the irreducible YTL_{d,n} representations
    Classify {
        #[arg(long)]
        d: usize,
        #[arg(long)]
        n: usize,
        /// Print the members, not only the counts
        #[arg(long)]
        list: bool,
    },
    /// Dimension of YTL_{d,n}
    Dim {
        #[arg(long)]
        d: usize,
        #[arg(long)]
        n: usize,
        #[arg(long, value_enum, default_value_t = Method::Both)]
        method: Method,
    },
    /// Semistandard skew tableaux of a given weight
    Tableaux {
        #[arg(long)]
        outer: String,
        #[arg(long, default_value = "")]
        inner: String,
        /// Comma-separated nonnegative entry counts
        #[arg(long)]
        weight: String,
        /// Only print Littlewood-Richardson tableaux
        #[arg(long)]
        lr_only: bool,
    },
    /// Number of standard (d-)tableaux of a shape
    CountStd { shape: String },
    /// The n-th Catalan number
    Catalan {
        #[arg(long)]
        n: usize,
    },
}

/// Result of one invocation: what to print and how to exit.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

impl Outcome {
    fn failure(code: i32, message: impl std::fmt::Display) -> Self {
        Outcome {
            code,
            stdout: String::new(),
            stderr: format!("error: {message}\n"),
        }
    }
}

#[derive(Debug, Serialize)]
pub struct OutputRecord {
    pub op: String,
    pub inputs: Value,
    pub value: Value,
    #[serde(skip)]
    tsv: Vec<(String, String)>,
    #[serde(skip)]
    code: i32,
}

impl OutputRecord {
    fn new(op: &str, inputs: Value, value: Value, tsv: Vec<(String, String)>) -> Self {
        OutputRecord {
            op: op.to_string(),
            inputs,
            value,
            tsv,
            code: EXIT_OK,
        }
    }

    pub fn render(&self, format: Format) -> String {
        match format {
            Format::Json => {
                let mut s = serde_json::to_string(self).expect("records serialize");
                s.push('\n');
                s
            }
            Format::Tsv => self.tsv.iter().fold(String::new(), |mut s, (k, v)| {
                let _ = writeln!(s, "{k}\t{v}");
                s
            }),
        }
    }
}

fn error_code(e: &Error) -> i32 {
    match e {
        Error::Parse(_) => EXIT_USAGE,
        _ => EXIT_DOMAIN,
    }
}

fn expansion_json(e: &SchurExpansion) -> Value {
    e.iter()
        .map(|(p, c)| json!({ "partition": p.to_string(), "coefficient": c }))
        .collect()
}

fn expansion_tsv(e: &SchurExpansion) -> Vec<(String, String)> {
    e.iter()
        .map(|(p, c)| (p.to_string(), c.to_string()))
        .collect()
}

fn scalar(op: &str, inputs: Value, v: u64) -> OutputRecord {
    OutputRecord::new(op, inputs, json!(v), vec![("value".into(), v.to_string())])
}

fn parse_weight(text: &str) -> Result<Weight, Error> {
    if text.trim().is_empty() {
        return Ok(Weight::new(Vec::new()));
    }
    text.split(',')
        .map(|t| {
            t.trim()
                .parse::<usize>()
                .map_err(|_| Error::Parse(format!("`{t}` is not a nonnegative integer")))
        })
        .collect::<Result<Vec<_>, _>>()
        .map(Weight::new)
}

fn execute(command: Command) -> Result<OutputRecord, Error> {
    match command {
        Command::Lrcoeff { lambda, mu, nu } => {
            let (l, m, n) = (
                parse_partition(&lambda)?,
                parse_partition(&mu)?,
                parse_partition(&nu)?,
            );
            let inputs =
                json!({ "lambda": l.to_string(), "mu": m.to_string(), "nu": n.to_string() });
            Ok(scalar("lrcoeff", inputs, lr_coefficient(&l, &m, &n)))
        }
        Command::SchurProduct { lambda, mu } => {
            let (l, m) = (parse_partition(&lambda)?, parse_partition(&mu)?);
            let e = schur_product(&l, &m)?;
            let inputs = json!({ "lambda": l.to_string(), "mu": m.to_string() });
            let value = json!({ "degree": e.degree(), "terms": expansion_json(&e) });
            Ok(OutputRecord::new(
                "schur-product",
                inputs,
                value,
                expansion_tsv(&e),
            ))
        }
        Command::Restrict { multipartition } => {
            let mp = parse_multipartition(&multipartition)?;
            let table = restriction_multiplicities(&mp)?;
            let inputs = json!({ "multipartition": mp.to_string(), "d": mp.d(), "n": mp.size() });
            let value = json!({ "terms": expansion_json(table.terms()) });
            Ok(OutputRecord::new(
                "restrict",
                inputs,
                value,
                expansion_tsv(table.terms()),
            ))
        }
        Command::Classify { d, n, list } => {
            let c = classify_r(d, n)?;
            let inputs = json!({ "d": d, "n": n, "list": list });
            let mut value = json!({ "r1": c.r1.len(), "r2": c.r2.len(), "total": c.total() });
            let mut tsv = vec![
                ("r1".to_string(), c.r1.len().to_string()),
                ("r2".to_string(), c.r2.len().to_string()),
                ("total".to_string(), c.total().to_string()),
            ];
            if list {
                let text = |v: &[_]| v.iter().map(ToString::to_string).collect::<Vec<String>>();
                value["r1_members"] = json!(text(&c.r1));
                value["r2_members"] = json!(text(&c.r2));
                tsv.extend(
                    c.r1.iter()
                        .map(|m| ("r1_member".to_string(), m.to_string())),
                );
                tsv.extend(
                    c.r2.iter()
                        .map(|m| ("r2_member".to_string(), m.to_string())),
                );
            }
            Ok(OutputRecord::new("classify", inputs, value, tsv))
        }
        Command::Dim { d, n, method } => {
            let inputs = json!({ "d": d, "n": n, "method": format!("{method:?}").to_lowercase() });
            let mut value = json!({});
            let mut tsv = Vec::new();
            let formula = matches!(method, Method::Formula | Method::Both)
                .then(|| ytl_dimension_formula(d, n))
                .transpose()?;
            let sum = matches!(method, Method::Sum | Method::Both)
                .then(|| ytl_dimension_sum(d, n))
                .transpose()?;
            if let Some(f) = formula {
                value["formula"] = json!(f);
                tsv.push(("formula".to_string(), f.to_string()));
            }
            if let Some(s) = sum {
                value["sum"] = json!(s);
                tsv.push(("sum".to_string(), s.to_string()));
            }
            let mut record = OutputRecord::new("dim", inputs, value, Vec::new());
            if let (Some(f), Some(s)) = (formula, sum) {
                record.value["match"] = json!(f == s);
                tsv.push(("match".to_string(), (f == s).to_string()));
                if f != s {
                    record.code = EXIT_INCONSISTENT;
                }
            }
            record.tsv = tsv;
            Ok(record)
        }
        Command::Tableaux {
            outer,
            inner,
            weight,
            lr_only,
        } => {
            let (o, i, w) = (
                parse_partition(&outer)?,
                parse_partition(&inner)?,
                parse_weight(&weight)?,
            );
            let shape = skew_shape(o.clone(), i.clone())?;
            let all = enumerate_ssyt(&shape, &w)?;
            let flagged = all
                .iter()
                .map(|t| is_lr_tableau(t).map(|lr| (t, lr)))
                .collect::<Result<Vec<_>, _>>()?;
            let lr_count = flagged.iter().filter(|(_, lr)| *lr).count();
            let shown: Vec<_> = flagged
                .into_iter()
                .filter(|(_, lr)| *lr || !lr_only)
                .collect();
            let inputs = json!({
                "outer": o.to_string(),
                "inner": i.to_string(),
                "weight": w.counts(),
                "lr_only": lr_only,
            });
            let value = json!({
                "count": all.len(),
                "lr_count": lr_count,
                "tableaux": shown.iter().map(|(t, lr)| json!({ "rows": t.rows(), "lr": lr })).collect::<Vec<_>>(),
            });
            let mut tsv = vec![
                ("count".to_string(), all.len().to_string()),
                ("lr_count".to_string(), lr_count.to_string()),
            ];
            tsv.extend(shown.iter().map(|(t, lr)| {
                (
                    (if *lr { "lr" } else { "non_lr" }).to_string(),
                    t.to_string(),
                )
            }));
            Ok(OutputRecord::new("tableaux", inputs, value, tsv))
        }
        Command::CountStd { shape } => {
            let mp = parse_multipartition(&shape)?;
            let inputs = json!({ "shape": mp.to_string() });
            Ok(scalar("count-std", inputs, count_standard_d_tableaux(&mp)?))
        }
        Command::Catalan { n } => Ok(scalar("catalan", json!({ "n": n }), catalan(n)?)),
    }
}

/// Runs one invocation. `args` includes the program name.
pub fn run<I, T>(args: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let rendered = e.render().to_string();
            return if e.use_stderr() {
                Outcome {
                    code: EXIT_USAGE,
                    stdout: String::new(),
                    stderr: rendered,
                }
            } else {
                // --help and --version
                Outcome {
                    code: EXIT_OK,
                    stdout: rendered,
                    stderr: String::new(),
                }
            };
        }
    };
    match execute(cli.command) {
        Ok(record) => {
            let stderr = if record.code == EXIT_INCONSISTENT {
                "error: formula and sum disagree\n".to_string()
            } else {
                String::new()
            };
            Outcome {
                code: record.code,
                stdout: record.render(cli.format),
                stderr,
            }
        }
        Err(e) => Outcome::failure(error_code(&e), e),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn run_args(args: &[&str]) -> Outcome {
        run(std::iter::once("ytl").chain(args.iter().copied()))
    }

    fn value(out: &Outcome) -> Value {
        let v: Value = serde_json::from_str(&out.stdout).unwrap();
        v["value"].clone()
    }

    #[test]
    fn lrcoeff_command() {
        let out = run_args(&[
            "lrcoeff", "--lambda", "2,1", "--mu", "3,2,1", "--nu", "4,3,2",
        ]);
        assert_eq!(out.code, 0);
        assert_eq!(value(&out), json!(2));
        let out = run_args(&["lrcoeff", "--lambda", "2,1", "--mu", "", "--nu", "2,1"]);
        assert_eq!(value(&out), json!(1));
        let out = run_args(&["lrcoeff", "--lambda", "3", "--mu", "1", "--nu", "3,2"]);
        assert_eq!((out.code, value(&out)), (0, json!(0)));
        let out = run_args(&["lrcoeff", "--lambda", "2", "--mu", "3", "--nu", "1"]);
        assert_eq!((out.code, value(&out)), (0, json!(0)));
        assert_eq!(
            run_args(&["lrcoeff", "--lambda", "1,2", "--mu", "1", "--nu", "2"]).code,
            1
        );
    }

    #[test]
    fn restrict_command() {
        let out = run_args(&["restrict", "1|1|1"]);
        assert_eq!(
            value(&out)["terms"],
            json!([
                {"partition": "3", "coefficient": 1},
                {"partition": "2,1", "coefficient": 2},
                {"partition": "1,1,1", "coefficient": 1},
            ])
        );
        let out = run_args(&["--format", "tsv", "restrict", "1|1"]);
        assert_eq!(out.stdout, "2\t1\n1,1\t1\n");
        let out = run_args(&["restrict", "3"]);
        assert_eq!(
            value(&out)["terms"],
            json!([{"partition": "3", "coefficient": 1}])
        );
        assert_eq!(run_args(&["restrict", "1|x"]).code, 1);
    }

    #[test]
    fn classify_command() {
        let out = run_args(&["classify", "--d", "2", "--n", "3"]);
        assert_eq!(value(&out), json!({"r1": 4, "r2": 2, "total": 6}));
        let out = run_args(&["classify", "--d", "1", "--n", "4", "--list"]);
        assert_eq!(value(&out)["total"], json!(3));
        assert_eq!(
            value(&out)["r1_members"],
            json!(["2,2", "2,1,1", "1,1,1,1"])
        );
        assert_eq!(run_args(&["classify", "--d", "1", "--n", "2"]).code, 2);
        assert_eq!(run_args(&["classify", "--d", "1", "--n", "x"]).code, 1);
        assert_eq!(run_args(&["classify", "--d", "1"]).code, 1);
    }

    #[test]
    fn dim_command() {
        let out = run_args(&["dim", "--d", "2", "--n", "3", "--method", "both"]);
        assert_eq!(out.code, 0);
        assert_eq!(
            value(&out),
            json!({"formula": 28, "sum": 28, "match": true})
        );
        let out = run_args(&["dim", "--d", "1", "--n", "5", "--method", "formula"]);
        assert_eq!(value(&out), json!({"formula": 42}));
        let out = run_args(&["dim", "--d", "3", "--n", "4", "--method", "formula"]);
        assert_eq!(value(&out), json!({"formula": 246}));
        assert_eq!(run_args(&["dim", "--d", "3", "--n", "2"]).code, 2);
    }

    #[test]
    fn tableaux_command() {
        let out = run_args(&[
            "tableaux", "--outer", "4,3,2", "--inner", "2,1", "--weight", "3,2,1",
        ]);
        let v = value(&out);
        assert_eq!(
            (v["count"].clone(), v["lr_count"].clone()),
            (json!(6), json!(2))
        );
        assert_eq!(v["tableaux"].as_array().unwrap().len(), 6);
        let out = run_args(&[
            "tableaux",
            "--outer",
            "4,3,2",
            "--inner",
            "2,1",
            "--weight",
            "3,2,1",
            "--lr-only",
        ]);
        let shown = value(&out)["tableaux"].clone();
        assert_eq!(
            shown,
            json!([{"rows": [[1, 1], [1, 2], [2, 3]], "lr": true}, {"rows": [[1, 1], [2, 2], [1, 3]], "lr": true}])
        );
        let out = run_args(&["tableaux", "--outer", "1", "--inner", "", "--weight", "1"]);
        assert_eq!(value(&out)["count"], json!(1));
        assert_eq!(
            run_args(&["tableaux", "--outer", "2", "--inner", "", "--weight", "3"]).code,
            2
        );
        assert_eq!(
            run_args(&["tableaux", "--outer", "2", "--inner", "3", "--weight", "0"]).code,
            2
        );
        assert_eq!(
            run_args(&["tableaux", "--outer", "2", "--weight", "a"]).code,
            1
        );
    }

    #[test]
    fn small_commands() {
        assert_eq!(value(&run_args(&["catalan", "--n", "4"])), json!(14));
        assert_eq!(value(&run_args(&["count-std", "2,1|1"])), json!(8));
        assert_eq!(value(&run_args(&["count-std", "2,2"])), json!(2));
        let out = run_args(&["schur-product", "--lambda", "1", "--mu", "1"]);
        assert_eq!(value(&out)["degree"], json!(2));
        assert_eq!(run_args(&["catalan", "--n", "40"]).code, 2);
    }

    #[test]
    fn help_and_usage() {
        let out = run_args(&["--help"]);
        assert_eq!(out.code, 0);
        assert!(out.stdout.contains("lrcoeff"));
        assert_eq!(run_args(&["classify", "--help"]).code, 0);
        assert_eq!(run_args(&["nonsense"]).code, 1);
        assert_eq!(run_args(&[]).code, 1);
    }

    #[test]
    fn json_record_shape() {
        let out = run_args(&["catalan", "--n", "3"]);
        assert_eq!(
            out.stdout,
            "{\"op\":\"catalan\",\"inputs\":{\"n\":3},\"value\":5}\n"
        );
    }
}
