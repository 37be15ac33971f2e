//! Machine-readable verification reports: a flat list of named records,
//! each an asserted quantity with its bound and the anchor text of the
//! constant it checks. Serialization is deterministic; reports carry the
//! configuration hash so identical runs diff clean.

use std::io::Write;

pub const SCHEMA_VERSION: u32 = 1;

#[derive(Debug, Clone, serde::Serialize)]
pub struct Record {
    pub name: String,
    pub value: f64,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub error_estimate: Option<f64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub bound: Option<f64>,
    pub pass: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub anchor: Option<String>,
}

impl Record {
    pub fn new(name: impl Into<String>, value: f64) -> Self {
        Record {
            name: name.into(),
            value,
            error_estimate: None,
            bound: None,
            pass: true,
            anchor: None,
        }
    }

    pub fn with_error(mut self, err: f64) -> Self {
        self.error_estimate = Some(err);
        self
    }

    /// Sets the bound and derives `pass` from `value <= bound`.
    pub fn with_upper_bound(mut self, bound: f64) -> Self {
        self.bound = Some(bound);
        self.pass = self.value <= bound;
        self
    }

    pub fn with_pass(mut self, pass: bool) -> Self {
        self.pass = pass;
        self
    }

    pub fn with_anchor(mut self, anchor: impl Into<String>) -> Self {
        self.anchor = Some(anchor.into());
        self
    }

    pub fn with_constant(mut self, c: crate::constants::Constant) -> Self {
        self.bound = Some(c.value);
        self.pass = self.value <= c.value;
        self.anchor = Some(format!("{}: {}", c.name, c.anchor));
        self
    }
}

#[derive(Debug, Clone, serde::Serialize)]
pub struct Report {
    pub schema: u32,
    pub command: String,
    pub config_hash: String,
    pub records: Vec<Record>,
    pub pass: bool,
}

impl Report {
    pub fn new(command: impl Into<String>, config_hash: impl Into<String>) -> Self {
        Report {
            schema: SCHEMA_VERSION,
            command: command.into(),
            config_hash: config_hash.into(),
            records: Vec::new(),
            pass: true,
        }
    }

    pub fn push(&mut self, record: Record) {
        self.pass &= record.pass;
        self.records.push(record);
    }

    pub fn extend(&mut self, records: Vec<Record>) {
        for r in records {
            self.push(r);
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serialization")
    }

    pub fn to_csv(&self) -> String {
        let mut out = String::from("name,value,error_estimate,bound,pass,anchor\n");
        for r in &self.records {
            let quote = |s: &str| format!("\"{}\"", s.replace('"', "\"\""));
            out.push_str(&format!(
                "{},{:e},{},{},{},{}\n",
                quote(&r.name),
                r.value,
                r.error_estimate.map_or(String::new(), |e| format!("{e:e}")),
                r.bound.map_or(String::new(), |b| format!("{b:e}")),
                r.pass,
                r.anchor.as_deref().map_or(String::new(), &quote),
            ));
        }
        out
    }

    pub fn to_text(&self) -> String {
        let mut out = format!(
            "# {} (schema {}, config {})\n",
            self.command, self.schema, self.config_hash
        );
        for r in &self.records {
            let status = if r.pass { "pass" } else { "FAIL" };
            out.push_str(&format!("[{status}] {} = {:.10e}", r.name, r.value));
            if let Some(e) = r.error_estimate {
                out.push_str(&format!(" (+/- {e:.2e})"));
            }
            if let Some(b) = r.bound {
                out.push_str(&format!(" vs {b}"));
            }
            if let Some(a) = &r.anchor {
                out.push_str(&format!("  [{a}]"));
            }
            out.push('\n');
        }
        out.push_str(if self.pass { "PASS\n" } else { "FAIL\n" });
        out
    }

    pub fn write(&self, format: OutputFormat, mut w: impl Write) -> std::io::Result<()> {
        let body = match format {
            OutputFormat::Json => self.to_json(),
            OutputFormat::Csv => self.to_csv(),
            OutputFormat::Text => self.to_text(),
        };
        w.write_all(body.as_bytes())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, serde::Serialize, clap::ValueEnum)]
#[serde(rename_all = "lowercase")]
pub enum OutputFormat {
    Json,
    Csv,
    Text,
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn pass_reflects_bounds() {
        let mut rep = Report::new("test", "deadbeef");
        rep.push(Record::new("a", 1.0).with_upper_bound(2.0));
        assert!(rep.pass);
        rep.push(Record::new("b", 3.0).with_upper_bound(2.0));
        assert!(!rep.pass);
    }

    #[test]
    fn json_roundtrip_is_deterministic() {
        let mut rep = Report::new("test", "cafe");
        rep.push(Record::new("x", std::f64::consts::PI).with_error(1e-9));
        assert_eq!(rep.to_json(), rep.to_json());
        assert!(rep.to_json().contains("\"schema\": 1"));
    }

    #[test]
    fn csv_quotes_fields() {
        let mut rep = Report::new("test", "00");
        rep.push(
            Record::new("weird,name", 1.0).with_anchor("bound \"quoted\", with comma"),
        );
        let csv = rep.to_csv();
        assert!(csv.contains("\"weird,name\""));
        assert!(csv.contains("\"\"quoted\"\""));
    }
}
