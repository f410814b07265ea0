//! The `coxsort` command line: statistics, codes, bijections, verification
//! and distribution tables, each emitting one deterministic document.
//!
//! Exit codes: 0 success or verified, 1 falsified, 2 usage or input error.

use std::io::Read;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::{json, Map, Value};

use crate::error::{Error, Result};
use crate::harness::{
    joint_distribution_parallel, run_check, Bijection, Check, Family, Group, SetStatistic,
    Statistic,
};
use crate::perm_a::{self, CodeA, Permutation};
use crate::perm_b::{self, CodeB, SignedPermutation};
use crate::perm_d::{self, CodeD, DElement};
use crate::qpoly::BivariatePolynomial;
use crate::set::ValueSet;

#[derive(Parser, Debug)]
#[command(
    name = "coxsort",
    version,
    about = "Sorting indices and permutation codes on S_n, B_n and D_n"
)]
struct Cli {
    /// Group family: A (symmetric), B (signed), D (even-signed).
    #[arg(long, global = true)]
    family: Option<String>,

    /// Degree; inferred from the input where there is one.
    #[arg(long, global = true)]
    n: Option<usize>,

    #[arg(long, global = true, value_enum, default_value_t = Format::Json)]
    format: Format,

    /// Worker threads for enumeration (default: sequential).
    #[arg(long, global = true, default_value_t = 1)]
    parallel: usize,

    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Csv,
    Text,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Direction {
    Encode,
    Decode,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum CodeKind {
    Lehmer,
    Acode,
    Bcode,
    Ecode,
    Fcode,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Every statistic of one element.
    Stats {
        /// One-line notation, e.g. "5 -4 -3 1 -2"; read from stdin if absent.
        #[arg(num_args = 0..)]
        input: Vec<String>,
    },
    /// Encode an element or decode a code.
    Code {
        #[arg(value_enum)]
        direction: Direction,
        #[arg(value_enum)]
        kind: CodeKind,
        #[arg(num_args = 0..)]
        input: Vec<String>,
    },
    /// Apply phi, psi or rho (or an inverse).
    Map {
        bijection: String,
        #[arg(long)]
        inverse: bool,
        #[arg(num_args = 0..)]
        input: Vec<String>,
    },
    /// Run one named check exhaustively at degree --n.
    Verify { check: String },
    /// Joint distribution of two statistics over the group of degree --n.
    Table { stat1: String, stat2: String },
}

/// What a run printed and how it ended.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

/// Runs the command line `args` (including the program name), reading
/// element input from `stdin` when none is given positionally.
pub fn run<I, T>(args: I, stdin: &mut dyn Read) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    // A token such as "-4" or "-1 2 3" is element input, never a flag; a
    // leading space keeps the parser from treating it as one.
    let args = args.into_iter().map(|a| {
        let a: std::ffi::OsString = a.into();
        match a.to_str() {
            Some(s) if s.starts_with('-') && s[1..].starts_with(|c: char| c.is_ascii_digit()) => {
                format!(" {s}").into()
            }
            _ => a,
        }
    });
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let text = e.render().to_string();
            return if e.use_stderr() {
                Outcome {
                    code: 2,
                    stdout: String::new(),
                    stderr: text,
                }
            } else {
                Outcome {
                    code: 0,
                    stdout: text,
                    stderr: String::new(),
                }
            };
        }
    };
    match execute(&cli, stdin) {
        Ok((doc, rendered)) => {
            let code = if doc.status == "falsified" { 1 } else { 0 };
            Outcome {
                code,
                stdout: rendered,
                stderr: String::new(),
            }
        }
        Err(e) => Outcome {
            code: 2,
            stdout: String::new(),
            stderr: format!("error: {e}\n"),
        },
    }
}

struct Document {
    command: &'static str,
    family: Family,
    n: usize,
    inputs: Map<String, Value>,
    outputs: Map<String, Value>,
    status: &'static str,
    /// Rows for `--format csv`, header first.
    csv: Vec<Vec<String>>,
}

impl Document {
    fn new(command: &'static str, family: Family, n: usize) -> Self {
        Document {
            command,
            family,
            n,
            inputs: Map::new(),
            outputs: Map::new(),
            status: "ok",
            csv: Vec::new(),
        }
    }

    fn input(&mut self, key: &str, value: impl Into<Value>) {
        self.inputs.insert(key.to_string(), value.into());
    }

    fn output(&mut self, key: &str, value: impl Into<Value>) {
        self.outputs.insert(key.to_string(), value.into());
    }

    fn to_json(&self) -> Value {
        json!({
            "command": self.command,
            "family": self.family.to_string(),
            "n": self.n,
            "inputs": self.inputs,
            "outputs": self.outputs,
            "status": self.status,
        })
    }

    fn render(&self, format: Format) -> String {
        match format {
            Format::Json => {
                let mut s = serde_json::to_string_pretty(&self.to_json()).expect("serializable");
                s.push('\n');
                s
            }
            Format::Csv => {
                let rows = if self.csv.is_empty() {
                    std::iter::once(vec!["key".to_string(), "value".to_string()])
                        .chain(self.outputs.iter().map(|(k, v)| vec![k.clone(), plain(v)]))
                        .collect()
                } else {
                    self.csv.clone()
                };
                rows.iter()
                    .map(|r| r.iter().map(|c| csv_field(c)).collect::<Vec<_>>().join(",") + "\n")
                    .collect()
            }
            Format::Text => {
                let mut s = format!(
                    "{} {}_{}: {}\n",
                    self.command, self.family, self.n, self.status
                );
                for (k, v) in &self.outputs {
                    s += &format!("  {k}: {}\n", plain(v));
                }
                s
            }
        }
    }
}

/// A compact human rendering of a JSON value.
fn plain(v: &Value) -> String {
    match v {
        Value::String(s) => s.clone(),
        Value::Array(items) => {
            let parts: Vec<String> = items.iter().map(plain).collect();
            format!("[{}]", parts.join(" "))
        }
        other => other.to_string(),
    }
}

fn csv_field(s: &str) -> String {
    if s.contains([',', '"', '\n']) {
        format!("\"{}\"", s.replace('"', "\"\""))
    } else {
        s.to_string()
    }
}

fn execute(cli: &Cli, stdin: &mut dyn Read) -> Result<(Document, String)> {
    let family = cli
        .family
        .as_deref()
        .map(str::parse::<Family>)
        .transpose()?;
    let doc = match &cli.command {
        Command::Stats { input } => {
            let s = read_element(input, stdin, family.unwrap_or(Family::A), cli.n)?;
            cmd_stats(family.unwrap_or(Family::A), &s)
        }
        Command::Code {
            direction,
            kind,
            input,
        } => cmd_code(
            family.unwrap_or(Family::A),
            *direction,
            *kind,
            input,
            stdin,
            cli.n,
        )?,
        Command::Map {
            bijection,
            inverse,
            input,
        } => {
            let bijection: Bijection = bijection.parse()?;
            let fam = expect_family(family, bijection.family())?;
            let s = read_element(input, stdin, fam, cli.n)?;
            cmd_map(bijection, *inverse, &s)
        }
        Command::Verify { check } => {
            let check: Check = check.parse()?;
            expect_family(family, check.family())?;
            let n = cli.n.ok_or(Error::MissingOption("n"))?;
            cmd_verify(check, n, cli.parallel)?
        }
        Command::Table { stat1, stat2 } => {
            let fam = family.unwrap_or(Family::A);
            let n = cli.n.ok_or(Error::MissingOption("n"))?;
            cmd_table(
                Group::new(fam, n)?,
                stat1.parse()?,
                stat2.parse()?,
                cli.parallel,
            )?
        }
    };
    let rendered = doc.render(cli.format);
    Ok((doc, rendered))
}

fn expect_family(given: Option<Family>, required: Family) -> Result<Family> {
    match given {
        Some(f) if f != required => Err(Error::Unknown {
            kind: "family for this command",
            name: f.to_string(),
        }),
        _ => Ok(required),
    }
}

/// Splits on whitespace, commas and parentheses; every token must be a
/// nonzero integer.
pub fn parse_integers(text: &str) -> Result<Vec<i32>> {
    text.split(|c: char| c.is_whitespace() || matches!(c, ',' | '(' | ')' | '[' | ']'))
        .filter(|t| !t.is_empty())
        .map(|t| match t.parse::<i32>() {
            Ok(v) if v != 0 => Ok(v),
            _ => Err(Error::Parse {
                token: t.to_string(),
            }),
        })
        .collect()
}

fn read_input(input: &[String], stdin: &mut dyn Read) -> Result<Vec<i32>> {
    let text = if input.is_empty() {
        let mut buf = String::new();
        stdin.read_to_string(&mut buf).map_err(|e| Error::Parse {
            token: format!("<stdin: {e}>"),
        })?;
        buf
    } else {
        input.join(" ")
    };
    let values = parse_integers(&text)?;
    if values.is_empty() {
        return Err(Error::EmptyPermutation);
    }
    Ok(values)
}

fn check_degree(expected: Option<usize>, actual: usize) -> Result<()> {
    match expected {
        Some(n) if n != actual => Err(Error::DegreeMismatch {
            left: n,
            right: actual,
        }),
        _ => Ok(()),
    }
}

fn read_element(
    input: &[String],
    stdin: &mut dyn Read,
    family: Family,
    n: Option<usize>,
) -> Result<SignedPermutation> {
    let values = read_input(input, stdin)?;
    check_degree(n, values.len())?;
    to_element(values, family)
}

fn to_element(values: Vec<i32>, family: Family) -> Result<SignedPermutation> {
    let s = SignedPermutation::new(values)?;
    match family {
        Family::A => {
            if let Some(v) = s.images().iter().find(|v| **v < 0) {
                return Err(Error::Parse {
                    token: v.to_string(),
                });
            }
        }
        Family::B => {}
        Family::D => {
            DElement::new(s.clone())?;
        }
    }
    Group::new(family, s.n())?.check_member(&s)?;
    Ok(s)
}

fn words<T: ToString>(items: &[T]) -> String {
    items.iter().map(T::to_string).collect::<Vec<_>>().join(" ")
}

fn set_value(s: ValueSet) -> Value {
    json!(s.to_vec())
}

fn cmd_stats(family: Family, s: &SignedPermutation) -> Document {
    let mut doc = Document::new("stats", family, s.n());
    doc.input("permutation", words(s.images()));
    for stat in Statistic::for_family(family) {
        doc.output(stat.name(), stat.eval(s));
    }
    for stat in SetStatistic::for_family(family) {
        doc.output(stat.name(), set_value(stat.eval(s)));
    }
    match family {
        Family::A => {
            let p = s.unsigned();
            doc.output("cycles", p.cycles().to_string());
            doc.output("sort_factorization", p.sort_factorization().to_string());
        }
        Family::B | Family::D => {
            doc.output("cycles", s.signed_cycles().to_string());
            doc.output(
                "sort_factorization",
                s.selection_sort_factorization().to_string(),
            );
            if family == Family::D {
                let d = DElement::new_unchecked(s.clone());
                doc.output("cosort_factorization", d.cosort_factorization().to_string());
            }
        }
    }
    doc.csv = std::iter::once(vec!["statistic".to_string(), "value".to_string()])
        .chain(doc.outputs.iter().map(|(k, v)| vec![k.clone(), plain(v)]))
        .collect();
    doc
}

fn code_value(entries: Vec<i64>) -> Value {
    let text = format!(
        "({})",
        entries
            .iter()
            .map(i64::to_string)
            .collect::<Vec<_>>()
            .join(",")
    );
    json!({ "entries": entries, "text": text })
}

fn cmd_code(
    family: Family,
    direction: Direction,
    kind: CodeKind,
    input: &[String],
    stdin: &mut dyn Read,
    n: Option<usize>,
) -> Result<Document> {
    let name = match kind {
        CodeKind::Lehmer => "lehmer",
        CodeKind::Acode => "acode",
        CodeKind::Bcode => "bcode",
        CodeKind::Ecode => "ecode",
        CodeKind::Fcode => "fcode",
    };
    if matches!(kind, CodeKind::Ecode | CodeKind::Fcode) && family != Family::D {
        return Err(Error::Unknown {
            kind: "code for this family",
            name: format!("{name} on {family}"),
        });
    }
    let values = read_input(input, stdin)?;
    check_degree(n, values.len())?;
    let mut doc = Document::new("code", family, values.len());
    doc.input(
        "direction",
        if direction == Direction::Encode {
            "encode"
        } else {
            "decode"
        },
    );
    doc.input("code", name);
    doc.input("payload", words(&values));

    let widen = |v: &[i32]| v.iter().map(|&x| x as i64).collect::<Vec<_>>();
    match direction {
        Direction::Encode => {
            let s = to_element(values, family)?;
            let entries: Vec<i64> = match family {
                Family::A => {
                    let p = s.unsigned();
                    let c = match kind {
                        CodeKind::Lehmer => perm_a::lehmer_encode(&p),
                        CodeKind::Acode => perm_a::acode_encode(&p),
                        _ => perm_a::bcode_encode(&p),
                    };
                    c.entries().iter().map(|&x| x as i64).collect()
                }
                Family::B | Family::D => match kind {
                    CodeKind::Lehmer => widen(perm_b::lehmer_b_encode(&s).entries()),
                    CodeKind::Acode => widen(perm_b::acode_b_encode(&s).entries()),
                    CodeKind::Bcode => widen(perm_b::bcode_b_encode(&s).entries()),
                    CodeKind::Ecode => {
                        widen(perm_d::ecode_encode(&DElement::new_unchecked(s)).entries())
                    }
                    CodeKind::Fcode => {
                        widen(perm_d::fcode_encode(&DElement::new_unchecked(s)).entries())
                    }
                },
            };
            doc.output("code", code_value(entries));
        }
        Direction::Decode => {
            let image: SignedPermutation = match family {
                Family::A => {
                    let entries = values
                        .iter()
                        .map(|&v| {
                            usize::try_from(v).map_err(|_| Error::Parse {
                                token: v.to_string(),
                            })
                        })
                        .collect::<Result<Vec<_>>>()?;
                    let c = CodeA::new(entries)?;
                    let p: Permutation = match kind {
                        CodeKind::Lehmer => perm_a::lehmer_decode(&c),
                        CodeKind::Acode => perm_a::acode_decode(&c),
                        _ => perm_a::bcode_decode(&c),
                    };
                    (&p).into()
                }
                Family::B | Family::D => match kind {
                    CodeKind::Ecode => perm_d::ecode_decode(&CodeD::new(values)?).into_signed(),
                    CodeKind::Fcode => perm_d::fcode_decode(&CodeD::new(values)?).into_signed(),
                    _ => {
                        let c = CodeB::new(values)?;
                        let s = match kind {
                            CodeKind::Lehmer => perm_b::lehmer_b_decode(&c),
                            CodeKind::Acode => perm_b::acode_b_decode(&c),
                            _ => perm_b::bcode_b_decode(&c),
                        };
                        if family == Family::D {
                            DElement::new(s.clone())?;
                        }
                        s
                    }
                },
            };
            doc.output("permutation", words(image.images()));
        }
    }
    Ok(doc)
}

fn cmd_map(bijection: Bijection, inverse: bool, s: &SignedPermutation) -> Document {
    let family = bijection.family();
    let image = bijection.apply_unchecked(s, inverse);
    let mut doc = Document::new("map", family, s.n());
    doc.input("bijection", bijection.name());
    doc.input("inverse", inverse);
    doc.input("permutation", words(s.images()));
    doc.output("image", words(image.images()));
    // The forward map sends `from` statistics of its argument to `to`
    // statistics of its image; an inverse run reads the same claim backwards.
    let (from, to) = bijection.transported_pair();
    let (pre, post) = if inverse { (&image, s) } else { (s, &image) };
    let side = |stats: [Statistic; 2], x: &SignedPermutation| {
        let mut m = Map::new();
        for stat in stats {
            m.insert(stat.name().to_string(), json!(stat.eval(x)));
        }
        Value::Object(m)
    };
    let (key_pre, key_post) = if inverse {
        ("image", "source")
    } else {
        ("source", "image")
    };
    doc.output(&format!("{key_pre}_statistics"), side(from, pre));
    doc.output(&format!("{key_post}_statistics"), side(to, post));
    doc
}

fn cmd_verify(check: Check, n: usize, workers: usize) -> Result<Document> {
    let report = run_check(check, n, workers)?;
    let mut doc = Document::new("verify", report.family, n);
    doc.input("check", check.name());
    doc.input("parallel", workers);
    let Value::Object(fields) = serde_json::to_value(&report).expect("serializable") else {
        unreachable!("reports serialize as objects")
    };
    for (k, v) in fields {
        if !matches!(k.as_str(), "check" | "family" | "n") {
            doc.outputs.insert(k, v);
        }
    }
    if let Some(p) = &report.polynomial {
        doc.output("polynomial_text", p.to_string());
    }
    doc.status = if report.passed {
        "verified"
    } else {
        "falsified"
    };
    Ok(doc)
}

fn cmd_table(group: Group, s1: Statistic, s2: Statistic, workers: usize) -> Result<Document> {
    let p: BivariatePolynomial = joint_distribution_parallel(group, s1, s2, workers)?;
    let mut doc = Document::new("table", group.family, group.n);
    doc.input("q", s1.name());
    doc.input("t", s2.name());
    doc.output(
        "polynomial",
        serde_json::to_value(&p).expect("serializable"),
    );
    doc.output("text", p.to_string());
    doc.csv = std::iter::once(vec!["q".into(), "t".into(), "count".into()])
        .chain(p.terms().map(|term| {
            vec![
                term.q.to_string(),
                term.t.to_string(),
                term.count.to_string(),
            ]
        }))
        .collect();
    Ok(doc)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn run_str(args: &[&str]) -> Outcome {
        let mut argv = vec!["coxsort"];
        argv.extend_from_slice(args);
        run(argv, &mut std::io::empty())
    }

    #[test]
    fn parses_separators() {
        assert_eq!(
            parse_integers("5 -4,-3 ,1\t-2").unwrap(),
            vec![5, -4, -3, 1, -2]
        );
        assert_eq!(parse_integers("(1,1,-3)").unwrap(), vec![1, 1, -3]);
        assert_eq!(
            parse_integers("1 x 2"),
            Err(Error::Parse {
                token: "x".to_string()
            })
        );
        assert!(parse_integers("1 0").is_err());
    }

    #[test]
    fn negative_tokens_are_input() {
        let out = run_str(&["stats", "--family", "B", "-1", "-2", "--format", "csv"]);
        assert_eq!(out.code, 0, "{}", out.stderr);
        assert!(out.stdout.contains("N,2\n"), "{}", out.stdout);
        let quoted = run_str(&["stats", "-1 2", "--family", "B"]);
        assert_eq!(quoted.code, 0, "{}", quoted.stderr);
    }

    #[test]
    fn table_csv_d2() {
        let out = run_str(&[
            "table", "inv_D", "nmin_D", "--family", "D", "--n", "2", "--format", "csv",
        ]);
        assert_eq!(out.code, 0, "{}", out.stderr);
        assert_eq!(out.stdout, "q,t,count\n0,0,1\n1,1,2\n2,1,1\n");
    }

    #[test]
    fn usage_errors_exit_2() {
        assert_eq!(run_str(&["frobnicate"]).code, 2);
        let bad = run_str(&["stats", "--family", "B", "1", "q", "2"]);
        assert_eq!(bad.code, 2);
        assert!(bad.stderr.contains("'q'"), "{}", bad.stderr);
        assert_eq!(run_str(&["map", "rho", "--family", "B", "1 2"]).code, 2);
        assert_eq!(run_str(&["stats", "--family", "D", "-1 2 3"]).code, 2);
        let missing = run_str(&["verify", "type-a-gf"]);
        assert_eq!(missing.code, 2);
        assert!(missing.stderr.contains("--n"));
    }
}
