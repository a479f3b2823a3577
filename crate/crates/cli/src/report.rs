//! Command output as an ordered list of typed entries, rendered either as
//! `key: value` lines or as JSON.

use noecover_core::{ClosureSystem, SubsetMask};
use serde::{Deserialize, Serialize};

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Value {
    Bool(bool),
    Int(u64),
    Text(String),
    /// Labels of a set, rendered `{a,c}`.
    Set(Vec<String>),
    /// An ordered sequence, rendered `(y,z)`.
    Seq(Vec<String>),
    /// A list of sets, rendered `[{a,c}, {b,c}]`.
    Sets(Vec<Vec<String>>),
}

impl Value {
    fn render(&self) -> String {
        let set = |labels: &[String]| format!("{{{}}}", labels.join(","));
        match self {
            Value::Bool(b) => b.to_string(),
            Value::Int(n) => n.to_string(),
            Value::Text(t) => t.clone(),
            Value::Set(labels) => set(labels),
            Value::Seq(labels) => format!("({})", labels.join(",")),
            Value::Sets(sets) => {
                let inner: Vec<_> = sets.iter().map(|s| set(s)).collect();
                format!("[{}]", inner.join(", "))
            }
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Ok,
    Violated,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Entry {
    pub key: String,
    pub value: Value,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Report {
    pub command: String,
    pub status: Status,
    pub entries: Vec<Entry>,
}

impl Report {
    pub fn new(command: &str) -> Self {
        Report {
            command: command.to_string(),
            status: Status::Ok,
            entries: Vec::new(),
        }
    }

    pub fn push(&mut self, key: impl Into<String>, value: Value) -> &mut Self {
        self.entries.push(Entry { key: key.into(), value });
        self
    }

    pub fn bool(&mut self, key: &str, b: bool) -> &mut Self {
        self.push(key, Value::Bool(b))
    }

    pub fn int(&mut self, key: &str, n: usize) -> &mut Self {
        self.push(key, Value::Int(n as u64))
    }

    pub fn text(&mut self, key: &str, t: impl Into<String>) -> &mut Self {
        self.push(key, Value::Text(t.into()))
    }

    pub fn set(&mut self, key: &str, sys: &ClosureSystem, s: SubsetMask) -> &mut Self {
        self.push(key, Value::Set(sys.labels_of(s)))
    }

    pub fn seq(&mut self, key: &str, sys: &ClosureSystem, ids: &[usize]) -> &mut Self {
        let labels = ids.iter().map(|&i| sys.label(i).to_string()).collect();
        self.push(key, Value::Seq(labels))
    }

    pub fn sets(&mut self, key: &str, sys: &ClosureSystem, sets: &[SubsetMask]) -> &mut Self {
        self.push(key, Value::Sets(sets.iter().map(|&s| sys.labels_of(s)).collect()))
    }

    pub fn violate(&mut self) -> &mut Self {
        self.status = Status::Violated;
        self
    }

    pub fn violated(&self) -> bool {
        self.status == Status::Violated
    }

    pub fn to_text(&self) -> String {
        let mut out = format!("command: {}\n", self.command);
        for e in &self.entries {
            out.push_str(&e.key);
            out.push_str(": ");
            out.push_str(&e.value.render());
            out.push('\n');
        }
        let status = match self.status {
            Status::Ok => "ok",
            Status::Violated => "violated",
        };
        out.push_str(&format!("status: {status}\n"));
        out
    }

    pub fn to_json(&self) -> String {
        let mut out = serde_json::to_string_pretty(self).expect("reports serialize");
        out.push('\n');
        out
    }
}
