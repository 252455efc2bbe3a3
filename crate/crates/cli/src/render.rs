//! Text, JSON and CSV renderings. Every renderer is deterministic: terms are
//! emitted in canonical partition order and no timing data is included.

use std::fmt::Write as _;
use std::str::FromStr;

use clap::ValueEnum;
use num_bigint::BigInt;
use serde::{Serialize, Serializer};

use foulkes_core::{Inner, Partition, SchurExpansion};

use crate::report::DecompositionReport;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, ValueEnum)]
pub enum Format {
    #[default]
    Text,
    Json,
    Csv,
}

/// Exact integer serialized as a JSON number of any size.
struct Int<'a>(&'a BigInt);

impl Serialize for Int<'_> {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        serde_json::Number::from_str(&self.0.to_string())
            .map_err(serde::ser::Error::custom)?
            .serialize(s)
    }
}

struct Parts<'a>(&'a Partition);

impl Serialize for Parts<'_> {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        self.0.parts().serialize(s)
    }
}

#[derive(Serialize)]
struct Term<'a> {
    lambda: Parts<'a>,
    mult: Int<'a>,
}

fn terms(f: &SchurExpansion) -> Vec<Term<'_>> {
    f.iter()
        .map(|(lambda, mult)| Term {
            lambda: Parts(lambda),
            mult: Int(mult),
        })
        .collect()
}

#[derive(Serialize)]
struct ExpansionDoc<'a> {
    nu: Parts<'a>,
    inner: &'static str,
    terms: Vec<Term<'a>>,
    method: &'a str,
}

#[derive(Serialize)]
struct DiffEntry<'a> {
    lambda: Parts<'a>,
    formula: Int<'a>,
    oracle: Int<'a>,
}

#[derive(Serialize)]
struct CompareDoc<'a> {
    nu: Parts<'a>,
    inner: &'static str,
    terms: Vec<Term<'a>>,
    method: &'a str,
    oracle_terms: Vec<Term<'a>>,
    agree: bool,
    diff: Vec<DiffEntry<'a>>,
}

fn heading(nu: &Partition, inner: Inner, method: &str) -> String {
    let g = match inner {
        Inner::S2 => "s_(2)",
        Inner::E2 => "s_(1,1)",
    };
    format!("s_{nu} o {g}  [{method}]")
}

fn text_terms(out: &mut String, f: &SchurExpansion) {
    if f.is_zero() {
        out.push_str("  0\n");
    }
    for (lambda, mult) in f.iter() {
        let _ = writeln!(out, "  {mult:>4}  {lambda}");
    }
}

fn csv_terms(out: &mut String, f: &SchurExpansion) {
    out.push_str("lambda;mult;table1_class\n");
    for (lambda, mult) in f.iter() {
        let _ = writeln!(out, "{};{mult};", lambda.to_text());
    }
}

/// Renders a single expansion of `s_ν ∘ g` produced by `method`.
pub fn expansion(
    nu: &Partition,
    inner: Inner,
    method: &str,
    f: &SchurExpansion,
    format: Format,
) -> String {
    let mut out = String::new();
    match format {
        Format::Text => {
            out.push_str(&heading(nu, inner, method));
            out.push('\n');
            text_terms(&mut out, f);
        }
        Format::Json => {
            let doc = ExpansionDoc {
                nu: Parts(nu),
                inner: inner.name(),
                terms: terms(f),
                method,
            };
            out = serde_json::to_string(&doc).expect("serializable");
            out.push('\n');
        }
        Format::Csv => csv_terms(&mut out, f),
    }
    out
}

pub fn comparison(report: &DecompositionReport, format: Format) -> String {
    let oracle = report.oracle_result.clone().unwrap_or_default();
    let method = report.method.name();
    let mut out = String::new();
    match format {
        Format::Text => {
            out.push_str(&heading(&report.nu, report.inner, method));
            out.push('\n');
            text_terms(&mut out, &report.formula_result);
            if report.agrees() {
                let _ = writeln!(out, "oracle: agrees ({} terms)", oracle.len());
            } else {
                let _ = writeln!(out, "oracle: {} disagreement(s)", report.diff.len());
                let _ = writeln!(out, "  {:<16}{:>8}{:>8}", "lambda", "formula", "oracle");
                for (lambda, (a, b)) in &report.diff {
                    let _ = writeln!(out, "  {:<16}{a:>8}{b:>8}", lambda.to_string());
                }
            }
        }
        Format::Json => {
            let doc = CompareDoc {
                nu: Parts(&report.nu),
                inner: report.inner.name(),
                terms: terms(&report.formula_result),
                method,
                oracle_terms: terms(&oracle),
                agree: report.agrees(),
                diff: report
                    .diff
                    .iter()
                    .map(|(lambda, (a, b))| DiffEntry {
                        lambda: Parts(lambda),
                        formula: Int(a),
                        oracle: Int(b),
                    })
                    .collect(),
            };
            out = serde_json::to_string(&doc).expect("serializable");
            out.push('\n');
        }
        Format::Csv => csv_terms(&mut out, &report.formula_result),
    }
    out
}

/// One row of the closed-form multiplicity table.
#[derive(Debug, Clone)]
pub struct TableRow {
    pub lambda: Partition,
    pub mult: BigInt,
    pub class: &'static str,
    /// `Some(theorem multiplicity)` when verification ran.
    pub theorem: Option<BigInt>,
}

impl TableRow {
    pub fn verified(&self) -> Option<bool> {
        self.theorem.as_ref().map(|t| *t == self.mult)
    }
}

#[derive(Serialize)]
struct TableEntry<'a> {
    lambda: Parts<'a>,
    mult: Int<'a>,
    class: &'static str,
    #[serde(skip_serializing_if = "Option::is_none")]
    verified: Option<bool>,
}

#[derive(Serialize)]
struct TableDoc<'a> {
    nu: Parts<'a>,
    inner: &'static str,
    terms: Vec<TableEntry<'a>>,
    method: &'static str,
}

pub fn table(nu: &Partition, rows: &[TableRow], format: Format) -> String {
    let mut out = String::new();
    let verify = rows.iter().any(|r| r.theorem.is_some());
    match format {
        Format::Text => {
            out.push_str(&heading(nu, Inner::S2, "table1"));
            out.push('\n');
            let _ = write!(out, "  {:<20}{:>6}  {:<20}", "lambda", "mult", "class");
            if verify {
                out.push_str("verified");
            }
            out.push('\n');
            for row in rows {
                let _ = write!(
                    out,
                    "  {:<20}{:>6}  {:<20}",
                    row.lambda.to_string(),
                    row.mult,
                    row.class
                );
                match (row.verified(), &row.theorem) {
                    (Some(true), _) => out.push_str("yes"),
                    (Some(false), Some(t)) => {
                        let _ = write!(out, "NO (theorem {t})");
                    }
                    _ => {}
                }
                out.push('\n');
            }
        }
        Format::Json => {
            let doc = TableDoc {
                nu: Parts(nu),
                inner: Inner::S2.name(),
                terms: rows
                    .iter()
                    .map(|r| TableEntry {
                        lambda: Parts(&r.lambda),
                        mult: Int(&r.mult),
                        class: r.class,
                        verified: r.verified(),
                    })
                    .collect(),
                method: "table1",
            };
            out = serde_json::to_string(&doc).expect("serializable");
            out.push('\n');
        }
        Format::Csv => {
            out.push_str("lambda;mult;table1_class");
            out.push_str(if verify { ";verified\n" } else { "\n" });
            for row in rows {
                let _ = write!(out, "{};{};{}", row.lambda.to_text(), row.mult, row.class);
                if let Some(v) = row.verified() {
                    let _ = write!(out, ";{v}");
                }
                out.push('\n');
            }
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str) -> Partition {
        s.parse().unwrap()
    }

    fn sample() -> SchurExpansion {
        [(p("5,1"), BigInt::from(1)), (p("3,2,1"), BigInt::from(2))]
            .into_iter()
            .collect()
    }

    #[test]
    fn json_schema() {
        let out = expansion(&p("2,1"), Inner::S2, "two-row", &sample(), Format::Json);
        assert_eq!(
            out,
            "{\"nu\":[2,1],\"inner\":\"s2\",\"terms\":[{\"lambda\":[5,1],\"mult\":1},\
             {\"lambda\":[3,2,1],\"mult\":2}],\"method\":\"two-row\"}\n"
        );
    }

    #[test]
    fn csv_layout() {
        let out = expansion(&p("2,1"), Inner::S2, "two-row", &sample(), Format::Csv);
        assert_eq!(out, "lambda;mult;table1_class\n5,1;1;\n3,2,1;2;\n");
    }

    #[test]
    fn text_layout() {
        let out = expansion(&p("2"), Inner::E2, "base", &sample(), Format::Text);
        assert_eq!(out, "s_(2) o s_(1,1)  [base]\n     1  (5,1)\n     2  (3,2,1)\n");
    }

    #[test]
    fn huge_multiplicities_stay_exact() {
        let big: BigInt = "123456789012345678901234567890".parse().unwrap();
        let f: SchurExpansion = [(p("2"), big)].into_iter().collect();
        let out = expansion(&p("1"), Inner::S2, "oracle", &f, Format::Json);
        assert!(out.contains("\"mult\":123456789012345678901234567890"));
    }
}
