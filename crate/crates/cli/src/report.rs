use serde_json::{json, Value};

#[derive(Debug, Clone)]
pub struct Check {
    pub name: String,
    pub pass: bool,
    pub detail: String,
}

/// Output of one command. A failed check never exits with status 0.
#[derive(Debug, Default)]
pub struct RunReport {
    pub command: String,
    pub results: serde_json::Map<String, Value>,
    /// (label, value) rows for the table format.
    pub rows: Vec<(String, String)>,
    /// Free-form lines printed after the rows in the table format.
    pub body: Vec<String>,
    pub checks: Vec<Check>,
    pub notes: Vec<String>,
}

impl RunReport {
    pub fn new(command: impl Into<String>) -> Self {
        RunReport { command: command.into(), ..Default::default() }
    }

    pub fn row(&mut self, label: &str, value: impl ToString) {
        self.rows.push((label.to_string(), value.to_string()));
    }

    pub fn result(&mut self, key: &str, value: Value) {
        self.results.insert(key.to_string(), value);
    }

    pub fn check(&mut self, name: impl Into<String>, pass: bool, detail: impl Into<String>) {
        self.checks.push(Check { name: name.into(), pass, detail: detail.into() });
    }

    pub fn note(&mut self, note: impl Into<String>) {
        self.notes.push(note.into());
    }

    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.pass)
    }

    pub fn to_json(&self) -> Value {
        json!({
            "command": self.command,
            "results": self.results,
            "checks": self.checks.iter().map(|c| json!({"name": c.name, "pass": c.pass, "detail": c.detail})).collect::<Vec<_>>(),
            "notes": self.notes,
            "passed": self.passed(),
        })
    }

    pub fn to_table(&self) -> String {
        let width = self.rows.iter().map(|(l, _)| l.chars().count()).max().unwrap_or(0);
        let mut out = String::new();
        for (label, value) in &self.rows {
            let pad = width - label.chars().count();
            out.push_str(&format!("{label}{}  {value}\n", " ".repeat(pad)));
        }
        for line in &self.body {
            out.push_str(line);
            out.push('\n');
        }
        for c in &self.checks {
            let verdict = if c.pass { "PASS" } else { "FAIL" };
            if c.detail.is_empty() {
                out.push_str(&format!("{verdict} {}\n", c.name));
            } else {
                out.push_str(&format!("{verdict} {}: {}\n", c.name, c.detail));
            }
        }
        for n in &self.notes {
            out.push_str(&format!("note: {n}\n"));
        }
        out
    }
}
