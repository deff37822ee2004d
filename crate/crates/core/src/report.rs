//! Tabular output: markdown, CSV and JSON renderings of computed tables.

use std::fmt;
use std::str::FromStr;

use serde_json::{json, Value};

use crate::chainring::{CyclicRingAlgebra, RingCode};
use crate::codes::Code;
use crate::dihedral::DihedralRow;
use crate::equiv::EquivalenceReport;
use crate::idem::IdempotentSystem;
use crate::{Error, Field, Result, Ring};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Format {
    Json,
    Csv,
    Markdown,
}

impl FromStr for Format {
    type Err = Error;

    fn from_str(s: &str) -> Result<Format> {
        match s.to_ascii_lowercase().as_str() {
            "json" => Ok(Format::Json),
            "csv" => Ok(Format::Csv),
            "md" | "markdown" => Ok(Format::Markdown),
            _ => Err(Error::Parse(format!("unknown format {s:?}"))),
        }
    }
}

impl fmt::Display for Format {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Format::Json => "json",
            Format::Csv => "csv",
            Format::Markdown => "md",
        })
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct Column {
    pub name: String,
    /// Shown in markdown and CSV; JSON always carries every column.
    pub text: bool,
}

/// A titled table with free-form notes (annotated findings, summary lines).
#[derive(Clone, Debug, PartialEq)]
pub struct Table {
    pub title: String,
    pub columns: Vec<Column>,
    pub rows: Vec<Vec<Value>>,
    pub notes: Vec<String>,
}

impl Table {
    pub fn new(title: impl Into<String>, columns: &[&str]) -> Table {
        Table {
            title: title.into(),
            columns: columns
                .iter()
                .map(|c| Column {
                    name: c.to_string(),
                    text: true,
                })
                .collect(),
            rows: Vec::new(),
            notes: Vec::new(),
        }
    }

    /// Adds a column that only appears in JSON output.
    pub fn json_column(mut self, name: &str) -> Table {
        self.columns.push(Column {
            name: name.into(),
            text: false,
        });
        self
    }

    pub fn push(&mut self, row: Vec<Value>) {
        debug_assert_eq!(row.len(), self.columns.len());
        self.rows.push(row);
    }

    pub fn render(&self, format: Format) -> String {
        match format {
            Format::Json => {
                let mut s = serde_json::to_string_pretty(&self.to_json()).expect("tables serialize");
                s.push('\n');
                s
            }
            Format::Csv => self.to_csv(),
            Format::Markdown => self.to_markdown(),
        }
    }

    pub fn to_json(&self) -> Value {
        let rows: Vec<Value> = self
            .rows
            .iter()
            .map(|r| {
                let obj: serde_json::Map<String, Value> = self
                    .columns
                    .iter()
                    .zip(r)
                    .map(|(c, v)| (c.name.clone(), v.clone()))
                    .collect();
                Value::Object(obj)
            })
            .collect();
        json!({ "title": self.title, "rows": rows, "notes": self.notes })
    }

    fn text_columns(&self) -> Vec<usize> {
        (0..self.columns.len()).filter(|&i| self.columns[i].text).collect()
    }

    pub fn to_csv(&self) -> String {
        let cols = self.text_columns();
        let mut w = csv::Writer::from_writer(Vec::new());
        w.write_record(cols.iter().map(|&i| &self.columns[i].name))
            .expect("in-memory write");
        for r in &self.rows {
            w.write_record(cols.iter().map(|&i| cell(&r[i])))
                .expect("in-memory write");
        }
        String::from_utf8(w.into_inner().expect("in-memory flush")).expect("utf-8 cells")
    }

    pub fn to_markdown(&self) -> String {
        let cols = self.text_columns();
        let mut out = format!("## {}\n\n", self.title);
        let header: Vec<&str> = cols.iter().map(|&i| self.columns[i].name.as_str()).collect();
        out += &format!("| {} |\n", header.join(" | "));
        out += &format!("|{}\n", "---|".repeat(cols.len()));
        for r in &self.rows {
            let cells: Vec<String> = cols.iter().map(|&i| cell(&r[i]).replace('|', "\\|")).collect();
            out += &format!("| {} |\n", cells.join(" | "));
        }
        if !self.notes.is_empty() {
            out.push('\n');
            for n in &self.notes {
                out += &format!("- {n}\n");
            }
        }
        out
    }
}

fn cell(v: &Value) -> String {
    match v {
        Value::String(s) => s.clone(),
        Value::Null => String::new(),
        Value::Array(a) => a.iter().map(cell).collect::<Vec<_>>().join(" "),
        other => other.to_string(),
    }
}

/// Concatenates several tables in one format.
pub fn render_all(tables: &[Table], format: Format) -> String {
    match format {
        Format::Json => {
            let v: Vec<Value> = tables.iter().map(Table::to_json).collect();
            let mut s = serde_json::to_string_pretty(&v).expect("tables serialize");
            s.push('\n');
            s
        }
        Format::Csv => tables.iter().map(Table::to_csv).collect::<Vec<_>>().join("\n"),
        Format::Markdown => tables
            .iter()
            .map(Table::to_markdown)
            .collect::<Vec<_>>()
            .join("\n"),
    }
}

pub fn idempotent_table<R: Ring>(title: &str, system: &IdempotentSystem<R>) -> Table {
    let mut t = Table::new(title, &["label", "idempotent", "support"]).json_column("coefficients");
    for m in &system.members {
        t.push(vec![
            json!(m.label.to_string()),
            json!(m.element.render()),
            json!(m.element.weight()),
            json!(m.element.coeff_codes()),
        ]);
    }
    t.notes.push(format!(
        "{} idempotents in {} over {}",
        system.len(),
        system.group.name(),
        system.ring.label()
    ));
    t
}

/// One row per member: the ideal it generates, with exhaustive weights.
pub fn code_table(title: &str, system: &IdempotentSystem<Field>, budget: u128) -> Result<Table> {
    let mut t = Table::new(title, &["label", "idempotent", "dimension", "min_weight"])
        .json_column("weight_distribution");
    for m in &system.members {
        let c = Code::from_idempotent(&m.element)?;
        let dist = c.weight_distribution_with_budget(budget)?;
        let d = dist.iter().skip(1).position(|&x| x > 0).map_or(0, |i| i + 1);
        t.push(vec![
            json!(m.label.to_string()),
            json!(m.element.render()),
            json!(c.dimension()),
            json!(d),
            json!(dist.iter().map(|x| x.to_string()).collect::<Vec<_>>()),
        ]);
    }
    let total: usize = t.rows.iter().map(|r| r[2].as_u64().unwrap_or(0) as usize).sum();
    t.notes.push(format!("dimensions sum to {total}"));
    Ok(t)
}

pub fn equivalence_table(title: &str, report: &EquivalenceReport) -> Table {
    let mut t = Table::new(
        title,
        &["class", "members", "dimension", "min_weight", "subgroups"],
    )
    .json_column("weight_distribution");
    for (i, c) in report.classes.iter().enumerate() {
        let labels: Vec<String> = c
            .members
            .iter()
            .map(|&m| report.system.members[m].label.to_string())
            .collect();
        t.push(vec![
            json!(i + 1),
            json!(labels.join("; ")),
            json!(c.dimension),
            json!(c.min_weight),
            json!(c.subgroups.join("; ")),
            json!(c.weight_distribution.iter().map(|x| x.to_string()).collect::<Vec<_>>()),
        ]);
    }
    t.notes.push(format!(
        "{} equivalence classes among {} primitive idempotents",
        report.classes.len(),
        report.system.len()
    ));
    t.notes.extend(report.findings.iter().cloned());
    t
}

pub fn dihedral_table(title: &str, rows: &[DihedralRow]) -> Table {
    let mut t = Table::new(
        title,
        &[
            "label",
            "dimension",
            "min_weight",
            "printed_dimension",
            "printed_weight",
            "finding",
        ],
    );
    for r in rows {
        t.push(vec![
            json!(r.label),
            json!(r.dimension),
            json!(r.min_weight),
            json!(r.expected_dimension),
            json!(r.expected_weight),
            json!(r.finding.clone().unwrap_or_default()),
        ]);
    }
    let findings = rows.iter().filter(|r| r.finding.is_some()).count();
    t.notes.push(format!("{} rows, {findings} annotated findings", rows.len()));
    t
}

pub fn chainring_table(title: &str, alg: &CyclicRingAlgebra, codes: &[RingCode]) -> Table {
    let mut t = Table::new(
        title,
        &["exponents", "codewords", "dual", "dual_codewords", "self_dual"],
    );
    for c in codes {
        let d = alg.dual_code(c);
        t.push(vec![
            json!(c.render()),
            json!(alg.codeword_count(c).to_string()),
            json!(d.render()),
            json!(alg.codeword_count(&d).to_string()),
            json!(d == *c),
        ]);
    }
    t.notes.push(format!("{} codes", codes.len()));
    let inv: Vec<String> = alg
        .involution
        .iter()
        .enumerate()
        .map(|(r, s)| format!("e{r}* = e{s}"))
        .collect();
    t.notes.push(format!("involution: {}", inv.join(", ")));
    t
}
