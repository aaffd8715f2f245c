//! Command reports.
//!
//! Text form:
//!
//! ```text
//! command: saf vanishing --minpoly -1,-1,-1,1
//! [inputs]
//! minpoly = x^3 - x^2 - x - 1
//! [verdicts]
//! reciprocity = VANISHES
//! [values]
//! matrix =
//!   0,2
//!   -2,0
//! ```
//!
//! Multi-line values start on the line after `key =` and are indented by two
//! spaces. The JSON form serializes [`Report`] directly.

use serde::{Deserialize, Serialize};

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Entry {
    pub key: String,
    pub value: String,
}

#[derive(Clone, Debug, Default, PartialEq, Serialize, Deserialize)]
pub struct Report {
    pub command: String,
    pub inputs: Vec<Entry>,
    pub verdicts: Vec<Entry>,
    pub values: Vec<Entry>,
    pub notes: Vec<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub timing_ms: Option<f64>,
}

fn push(list: &mut Vec<Entry>, key: &str, value: impl ToString) {
    list.push(Entry {
        key: key.to_string(),
        value: value.to_string(),
    });
}

impl Report {
    pub fn new(command: impl Into<String>) -> Self {
        Report {
            command: command.into(),
            ..Report::default()
        }
    }

    pub fn input(&mut self, key: &str, value: impl ToString) -> &mut Self {
        push(&mut self.inputs, key, value);
        self
    }

    pub fn verdict(&mut self, key: &str, value: impl ToString) -> &mut Self {
        push(&mut self.verdicts, key, value);
        self
    }

    pub fn value(&mut self, key: &str, value: impl ToString) -> &mut Self {
        push(&mut self.values, key, value);
        self
    }

    pub fn note(&mut self, note: impl Into<String>) -> &mut Self {
        self.notes.push(note.into());
        self
    }

    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("report serializes");
        s.push('\n');
        s
    }

    #[cfg(test)]
    pub fn from_json(text: &str) -> serde_json::Result<Self> {
        serde_json::from_str(text)
    }

    pub fn to_text(&self) -> String {
        let mut out = format!("command: {}\n", self.command);
        for (title, list) in [
            ("inputs", &self.inputs),
            ("verdicts", &self.verdicts),
            ("values", &self.values),
        ] {
            if list.is_empty() {
                continue;
            }
            out.push_str(&format!("[{title}]\n"));
            for e in list {
                if e.value.contains('\n') {
                    out.push_str(&format!("{} =\n", e.key));
                    for line in e.value.lines() {
                        out.push_str(&format!("  {line}\n"));
                    }
                } else {
                    out.push_str(&format!("{} = {}\n", e.key, e.value));
                }
            }
        }
        if !self.notes.is_empty() {
            out.push_str("[notes]\n");
            for n in &self.notes {
                out.push_str(&format!("- {n}\n"));
            }
        }
        if let Some(ms) = self.timing_ms {
            out.push_str(&format!("[timing]\nelapsed_ms = {ms:.3}\n"));
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sample() -> Report {
        let mut r = Report::new("saf saf --iet a.json");
        r.input("iet", "a.json")
            .verdict("saf", "NONZERO")
            .value("matrix", "0,2\n-2,0")
            .note("one note");
        r
    }

    #[test]
    fn json_round_trip() {
        let r = sample();
        let back = Report::from_json(&r.to_json()).unwrap();
        assert_eq!(back, r);
        assert_eq!(back.to_json(), r.to_json());
        assert!(!r.to_json().contains("timing_ms"));
    }

    #[test]
    fn text_layout() {
        let text = sample().to_text();
        assert_eq!(
            text,
            "command: saf saf --iet a.json\n[inputs]\niet = a.json\n[verdicts]\nsaf = NONZERO\n\
             [values]\nmatrix =\n  0,2\n  -2,0\n[notes]\n- one note\n"
        );
    }
}
