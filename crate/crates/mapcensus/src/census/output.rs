//! CSV, JSON and text rendering of census tables.
//!
//! Several tables are written as one: CSV gains a leading `family` column
//! and JSON becomes an array.

use std::fmt::Write as _;
use std::str::FromStr;

use super::{CensusTable, Entries};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Format {
    Csv,
    Json,
    Text,
}

impl FromStr for Format {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        match s {
            "csv" => Ok(Format::Csv),
            "json" => Ok(Format::Json),
            "text" => Ok(Format::Text),
            other => Err(format!("unknown format '{other}'")),
        }
    }
}

fn rows(t: &CensusTable) -> Vec<Vec<String>> {
    match &t.entries {
        Entries::Edges(e) => e
            .iter()
            .map(|x| vec![x.n.to_string(), x.count.to_string()])
            .collect(),
        Entries::VerticesFaces(e) => e
            .iter()
            .map(|x| vec![x.i.to_string(), x.j.to_string(), x.count.to_string()])
            .collect(),
    }
}

fn header(t: &CensusTable) -> Vec<&'static str> {
    match t.entries {
        Entries::Edges(_) => vec!["n", "count"],
        Entries::VerticesFaces(_) => vec!["i", "j", "count"],
    }
}

fn csv(tables: &[CensusTable], with_family: bool) -> String {
    let mut w = csv::WriterBuilder::new().from_writer(Vec::new());
    let Some(first) = tables.first() else {
        return String::new();
    };
    let mut head = header(first);
    if with_family {
        head.insert(0, "family");
    }
    w.write_record(&head).expect("in-memory write");
    for t in tables {
        for mut r in rows(t) {
            if with_family {
                r.insert(0, t.family.name().to_string());
            }
            w.write_record(&r).expect("in-memory write");
        }
    }
    String::from_utf8(w.into_inner().expect("in-memory flush")).expect("ascii output")
}

fn json(tables: &[CensusTable], with_family: bool) -> String {
    let mut s = if with_family {
        serde_json::to_string_pretty(tables)
    } else {
        serde_json::to_string_pretty(&tables[0])
    }
    .expect("census tables serialize");
    s.push('\n');
    s
}

fn text(tables: &[CensusTable]) -> String {
    let mut out = String::new();
    for (k, t) in tables.iter().enumerate() {
        if k > 0 {
            out.push('\n');
        }
        let by = match t.entries {
            Entries::Edges(_) => "edges",
            Entries::VerticesFaces(_) => "vertices and faces",
        };
        writeln!(out, "{} by {} up to {}", t.family.name(), by, t.max).unwrap();
        let head = header(t);
        let body = rows(t);
        let widths: Vec<usize> = (0..head.len())
            .map(|c| {
                body.iter()
                    .map(|r| r[c].len())
                    .chain([head[c].len()])
                    .max()
                    .unwrap_or(0)
            })
            .collect();
        let line = |cells: Vec<&str>| {
            cells
                .iter()
                .zip(&widths)
                .map(|(c, w)| format!("{c:>w$}"))
                .collect::<Vec<_>>()
                .join("  ")
        };
        writeln!(out, "{}", line(head.clone())).unwrap();
        for r in &body {
            writeln!(out, "{}", line(r.iter().map(String::as_str).collect())).unwrap();
        }
    }
    out
}

/// Renders `tables`; `with_family` selects the multi-family layout.
pub fn write_tables(tables: &[CensusTable], format: Format, with_family: bool) -> String {
    assert!(!tables.is_empty(), "no tables to write");
    match format {
        Format::Csv => csv(tables, with_family),
        Format::Json => json(tables, with_family),
        Format::Text => text(tables),
    }
}
