//! Rendering of index reports, extremal results and verification outcomes
//! as aligned text tables, CSV (LF line endings) or JSON lines.
//!
//! CSV columns:
//!
//! * index report: `vertex,degree,eccentricity,product`, closed by a
//!   `total,,,<sum>` row;
//! * extremal result: `order,pending,edges,dominating,direction,value,class_size,graph6`,
//!   one row per optimal graph;
//! * verification outcome: `statement,n_min,n_max,verdict,cell,graph6,expected,observed,reason`,
//!   one row per counterexample, or a single row with empty counterexample
//!   fields when there are none.

use std::fmt::Write as _;
use std::str::FromStr;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::extremal::{ExtremalResult, VerificationOutcome};
use crate::graph::EciReport;
use crate::graph6::encode_graph6;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Format {
    #[default]
    Table,
    Csv,
    JsonLines,
}

impl FromStr for Format {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "table" => Ok(Format::Table),
            "csv" => Ok(Format::Csv),
            "json-lines" | "jsonl" => Ok(Format::JsonLines),
            _ => Err(Error::OutOfRange(format!("output format `{s}`; expected table, csv or json-lines"))),
        }
    }
}

#[derive(Debug, Clone, Copy)]
pub enum Report<'a> {
    Eci(&'a EciReport),
    Extremal(&'a ExtremalResult),
    Verification(&'a VerificationOutcome),
}

pub fn emit_report(report: Report<'_>, format: Format) -> String {
    match format {
        Format::Table => table(report),
        Format::Csv => csv_text(report),
        Format::JsonLines => json_lines(report),
    }
}

/// Process exit code for a verification outcome: 0 on pass or
/// conjecture-holds, 2 on fail or conjecture-refuted.
pub fn exit_code(outcome: &VerificationOutcome) -> i32 {
    if outcome.verdict.is_success() {
        0
    } else {
        2
    }
}

fn opt<T: ToString>(v: Option<T>) -> String {
    v.map(|x| x.to_string()).unwrap_or_default()
}

fn csv_text(report: Report<'_>) -> String {
    let mut w = csv::WriterBuilder::new()
        .terminator(csv::Terminator::Any(b'\n'))
        .from_writer(Vec::new());
    let mut row = |fields: &[String]| w.write_record(fields).expect("writing to memory");
    let s = |x: &str| x.to_string();
    match report {
        Report::Eci(r) => {
            row(&[s("vertex"), s("degree"), s("eccentricity"), s("product")]);
            for v in &r.rows {
                row(&[v.vertex.to_string(), v.degree.to_string(), v.eccentricity.to_string(), v.product.to_string()]);
            }
            row(&[s("total"), s(""), s(""), r.total.to_string()]);
        }
        Report::Extremal(r) => {
            row(&[
                s("order"),
                s("pending"),
                s("edges"),
                s("dominating"),
                s("direction"),
                s("value"),
                s("class_size"),
                s("graph6"),
            ]);
            for g in &r.optima {
                row(&[
                    r.filter.order.to_string(),
                    opt(r.filter.pending),
                    opt(r.filter.edges),
                    r.filter.dominating.to_string(),
                    r.direction.to_string(),
                    r.value.to_string(),
                    r.class_size.to_string(),
                    encode_graph6(g),
                ]);
            }
        }
        Report::Verification(o) => {
            row(&[
                s("statement"),
                s("n_min"),
                s("n_max"),
                s("verdict"),
                s("cell"),
                s("graph6"),
                s("expected"),
                s("observed"),
                s("reason"),
            ]);
            let head = [o.statement.to_string(), o.n_min.to_string(), o.n_max.to_string(), o.verdict.to_string()];
            if o.counterexamples.is_empty() {
                let mut fields = head.to_vec();
                fields.extend(std::iter::repeat(String::new()).take(5));
                row(&fields);
            }
            for c in &o.counterexamples {
                let mut fields = head.to_vec();
                fields.extend([c.cell.clone(), c.graph6.clone(), c.expected.to_string(), c.observed.to_string(), c.reason.clone()]);
                row(&fields);
            }
        }
    }
    String::from_utf8(w.into_inner().expect("flush to memory")).expect("utf-8 fields")
}

fn json_line<T: Serialize>(out: &mut String, value: &T) {
    out.push_str(&serde_json::to_string(value).expect("plain data serializes"));
    out.push('\n');
}

fn json_lines(report: Report<'_>) -> String {
    let mut out = String::new();
    match report {
        Report::Eci(r) => {
            for row in &r.rows {
                json_line(&mut out, row);
            }
            json_line(&mut out, &serde_json::json!({ "total": r.total }));
        }
        Report::Extremal(r) => json_line(&mut out, r),
        Report::Verification(o) => json_line(&mut out, o),
    }
    out
}

/// Left-aligned columns separated by two spaces.
fn aligned(rows: &[Vec<String>]) -> String {
    let columns = rows.iter().map(Vec::len).max().unwrap_or(0);
    let widths: Vec<usize> = (0..columns)
        .map(|c| rows.iter().filter_map(|r| r.get(c)).map(|x| x.chars().count()).max().unwrap_or(0))
        .collect();
    let mut out = String::new();
    for r in rows {
        let mut line = String::new();
        for (c, cell) in r.iter().enumerate() {
            if c + 1 == r.len() {
                line.push_str(cell);
            } else {
                let _ = write!(line, "{cell:<width$}  ", width = widths[c]);
            }
        }
        out.push_str(line.trim_end());
        out.push('\n');
    }
    out
}

fn table(report: Report<'_>) -> String {
    let s = |x: &str| x.to_string();
    match report {
        Report::Eci(r) => {
            let mut rows = vec![vec![s("vertex"), s("degree"), s("eccentricity"), s("product")]];
            rows.extend(
                r.rows
                    .iter()
                    .map(|v| vec![v.vertex.to_string(), v.degree.to_string(), v.eccentricity.to_string(), v.product.to_string()]),
            );
            rows.push(vec![s("total"), s(""), s(""), r.total.to_string()]);
            aligned(&rows)
        }
        Report::Extremal(r) => {
            let mut out = aligned(&[
                vec![s("class"), r.filter.to_string()],
                vec![s("direction"), r.direction.to_string()],
                vec![s("value"), r.value.to_string()],
                vec![s("class size"), r.class_size.to_string()],
                vec![s("optima"), r.optima.len().to_string()],
            ]);
            for g in &r.optima {
                let _ = writeln!(out, "  {}", encode_graph6(g));
            }
            out
        }
        Report::Verification(o) => {
            let mut out = aligned(&[
                vec![s("statement"), o.statement.to_string()],
                vec![s("orders"), format!("{}..={}", o.n_min, o.n_max)],
                vec![s("verdict"), o.verdict.to_string()],
                vec![s("graphs"), o.graphs_examined.to_string()],
                vec![s("elapsed"), format!("{} ms", o.elapsed_ms)],
            ]);
            out.push('\n');
            let mut rows = vec![vec![s("cell"), s("class"), s("optimum"), s("optimal graphs")]];
            rows.extend(
                o.cells
                    .iter()
                    .map(|c| vec![c.cell.clone(), c.class_size.to_string(), opt(c.value), c.optima.join(" ")]),
            );
            out.push_str(&aligned(&rows));
            if !o.counterexamples.is_empty() {
                out.push_str("\ncounterexamples\n");
                let mut rows = vec![vec![s("cell"), s("graph6"), s("expected"), s("observed"), s("reason")]];
                rows.extend(o.counterexamples.iter().map(|c| {
                    vec![c.cell.clone(), c.graph6.clone(), c.expected.to_string(), c.observed.to_string(), c.reason.clone()]
                }));
                out.push_str(&aligned(&rows));
            }
            out
        }
    }
}
