use serde_json::{json, Map, Value};

pub const SCHEMA: &str = "singlab/1";

/// A fixed-width table; `json` carries the same rows in structured form.
#[derive(Debug, Default)]
pub struct Table {
    pub headers: Vec<&'static str>,
    pub rows: Vec<Vec<String>>,
    pub json: Vec<Value>,
}

#[derive(Debug)]
pub struct Report {
    pub command: &'static str,
    pub inputs: Map<String, Value>,
    pub results: Vec<(&'static str, Value)>,
    pub table: Option<(&'static str, Table)>,
    pub complete: Option<bool>,
    pub notes: Vec<String>,
}

impl Report {
    pub fn new(command: &'static str) -> Self {
        Report {
            command,
            inputs: Map::new(),
            results: Vec::new(),
            table: None,
            complete: None,
            notes: Vec::new(),
        }
    }

    pub fn input(mut self, key: &str, value: impl Into<Value>) -> Self {
        self.inputs.insert(key.to_string(), value.into());
        self
    }

    pub fn result(mut self, key: &'static str, value: impl Into<Value>) -> Self {
        self.results.push((key, value.into()));
        self
    }

    pub fn table(mut self, key: &'static str, table: Table) -> Self {
        self.table = Some((key, table));
        self
    }

    pub fn complete(mut self, complete: bool) -> Self {
        self.complete = Some(complete);
        self
    }

    pub fn note(mut self, note: impl Into<String>) -> Self {
        self.notes.push(note.into());
        self
    }

    pub fn to_json(&self) -> Value {
        let mut results = Map::new();
        for (k, v) in &self.results {
            results.insert((*k).to_string(), v.clone());
        }
        if let Some((k, t)) = &self.table {
            results.insert((*k).to_string(), Value::Array(t.json.clone()));
        }
        let mut out = json!({
            "schema": SCHEMA,
            "command": self.command,
            "inputs": Value::Object(self.inputs.clone()),
            "results": Value::Object(results),
            "notes": self.notes,
        });
        if let Some(c) = self.complete {
            out["complete"] = Value::Bool(c);
        }
        out
    }

    pub fn to_text(&self) -> String {
        let mut lines = vec![format!("command: {}", self.command)];
        for (k, v) in &self.inputs {
            lines.push(format!("{k}: {}", plain(v)));
        }
        let width = self.results.iter().map(|(k, _)| k.len()).max().unwrap_or(0);
        for (k, v) in &self.results {
            lines.push(format!("{k:<width$}  {}", plain(v)));
        }
        if let Some((_, t)) = &self.table {
            lines.push(String::new());
            lines.extend(render_table(t));
        }
        if let Some(c) = self.complete {
            lines.push(format!("complete: {c}"));
        }
        for n in &self.notes {
            lines.push(format!("note: {n}"));
        }
        let mut text = lines.join("\n");
        text.push('\n');
        text
    }
}

fn plain(v: &Value) -> String {
    match v {
        Value::String(s) => s.clone(),
        Value::Array(items) if items.is_empty() => "-".into(),
        Value::Array(items) => items.iter().map(plain).collect::<Vec<_>>().join(", "),
        Value::Null => "-".into(),
        other => other.to_string(),
    }
}

fn render_table(t: &Table) -> Vec<String> {
    let cols = t.headers.len();
    let mut widths: Vec<usize> = t.headers.iter().map(|h| h.len()).collect();
    for row in &t.rows {
        for (w, cell) in widths.iter_mut().zip(row) {
            *w = (*w).max(cell.chars().count());
        }
    }
    let fmt_row = |cells: Vec<&str>| {
        let parts: Vec<String> = cells
            .iter()
            .enumerate()
            .map(|(i, c)| {
                if i + 1 == cols {
                    c.to_string()
                } else {
                    format!("{c:>w$}", w = widths[i])
                }
            })
            .collect();
        parts.join("  ").trim_end().to_string()
    };
    let mut out = vec![fmt_row(t.headers.clone())];
    out.push(fmt_row(
        widths
            .iter()
            .map(|&w| "-".repeat(w))
            .collect::<Vec<_>>()
            .iter()
            .map(String::as_str)
            .collect(),
    ));
    for row in &t.rows {
        out.push(fmt_row(row.iter().map(String::as_str).collect()));
    }
    out
}
