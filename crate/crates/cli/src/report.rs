//! Reports: titled tables rendered as aligned text or as one JSON document.

use std::fmt::Write as _;

use serde::Serialize;

/// One table. Key/value sections use the columns `key` and `value`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Section {
    pub name: String,
    pub columns: Vec<String>,
    pub rows: Vec<Vec<String>>,
}

impl Section {
    pub fn table(name: &str, columns: &[&str]) -> Section {
        Section { name: name.into(), columns: columns.iter().map(|c| c.to_string()).collect(), rows: Vec::new() }
    }

    pub fn kv(name: &str) -> Section {
        Section::table(name, &["key", "value"])
    }

    pub fn row<S: ToString>(&mut self, cells: impl IntoIterator<Item = S>) -> &mut Self {
        let row: Vec<String> = cells.into_iter().map(|c| c.to_string()).collect();
        debug_assert_eq!(row.len(), self.columns.len(), "row width in section {}", self.name);
        self.rows.push(row);
        self
    }

    pub fn pair(&mut self, key: &str, value: impl ToString) -> &mut Self {
        self.row([key.to_string(), value.to_string()])
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Report {
    /// Version of the document layout.
    pub format: u32,
    pub command: String,
    pub instance: String,
    /// False when a defect or axiom violation was found.
    pub ok: bool,
    pub verdict: String,
    pub sections: Vec<Section>,
}

pub const FORMAT_VERSION: u32 = 1;

impl Report {
    pub fn new(command: &str, instance: &str) -> Report {
        Report {
            format: FORMAT_VERSION,
            command: command.into(),
            instance: instance.into(),
            ok: true,
            verdict: String::new(),
            sections: Vec::new(),
        }
    }

    pub fn push(&mut self, section: Section) {
        self.sections.push(section);
    }

    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("reports serialize");
        s.push('\n');
        s
    }

    pub fn to_text(&self) -> String {
        let mut out = String::new();
        let _ = writeln!(out, "partgal {} [{}]", self.command, self.instance);
        let _ = writeln!(out, "verdict: {}", self.verdict);
        let _ = writeln!(out, "status: {}", if self.ok { "ok" } else { "FAIL" });
        for sec in &self.sections {
            let _ = writeln!(out, "\n== {} ==", sec.name);
            if sec.rows.is_empty() {
                let _ = writeln!(out, "(none)");
                continue;
            }
            let width = |s: &str| s.chars().count();
            let mut widths: Vec<usize> = sec.columns.iter().map(|c| width(c)).collect();
            for row in &sec.rows {
                for (w, cell) in widths.iter_mut().zip(row) {
                    *w = (*w).max(width(cell));
                }
            }
            let line = |cells: &[String]| {
                let parts: Vec<String> =
                    cells.iter().zip(&widths).map(|(c, &w)| format!("{c}{}", " ".repeat(w - width(c)))).collect();
                parts.join("  ").trim_end().to_string()
            };
            let is_kv = sec.columns == ["key", "value"];
            if !is_kv {
                let _ = writeln!(out, "{}", line(&sec.columns));
                let _ = writeln!(out, "{}", line(&widths.iter().map(|&w| "-".repeat(w)).collect::<Vec<_>>()));
            }
            for row in &sec.rows {
                let _ = writeln!(out, "{}", line(row));
            }
        }
        out
    }
}
