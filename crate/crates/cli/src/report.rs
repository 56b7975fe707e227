use std::collections::BTreeMap;
use std::fmt::Write as _;

use replicated_core::algebra::Bounded;
use replicated_core::verify::{Check, Instance, Value};
use replicated_core::{Certificate, Verdict};
use serde::Serialize;

pub const SCHEMA: u32 = 1;

/// One evaluated claim.
#[derive(Clone, Debug, Serialize)]
pub struct ResultEntry {
    pub claim: String,
    pub values: BTreeMap<String, Value>,
    pub checks: Vec<Check>,
    pub verdict: Verdict,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub witnesses: Vec<String>,
}

impl From<Certificate> for ResultEntry {
    fn from(c: Certificate) -> Self {
        ResultEntry { claim: c.claim, values: c.values, checks: c.checks, verdict: c.verdict, witnesses: c.witnesses }
    }
}

/// A summand of the generator, with its dimension vector ordered by copy
/// and then by declared vertex order.
#[derive(Clone, Debug, Serialize)]
pub struct InventoryEntry {
    pub label: String,
    pub dims: Vec<usize>,
    pub pd: Bounded,
    /// Dimension vectors of the radical layers, top first.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub loewy: Option<Vec<Vec<usize>>>,
}

#[derive(Clone, Debug, Serialize)]
pub struct Report {
    pub schema: u32,
    pub command: String,
    pub instance: Instance,
    pub results: Vec<ResultEntry>,
    pub inventory: Vec<InventoryEntry>,
    pub seed: u64,
    pub elapsed_ms: Option<u64>,
}

impl Report {
    pub fn passed(&self) -> bool {
        self.results.iter().all(|r| r.verdict.is_pass())
    }

    /// Pretty JSON with keys in sorted order.
    pub fn to_json(&self) -> String {
        let value = serde_json::to_value(self).expect("report serializes");
        serde_json::to_string_pretty(&value).expect("value serializes") + "\n"
    }

    pub fn to_text(&self, vertex_labels: &[String]) -> String {
        let mut out = String::new();
        let i = &self.instance;
        let arrows: Vec<String> = i.arrows.iter().map(|a| format!("{}: {} -> {}", a.name, a.from, a.to)).collect();
        let _ = writeln!(out, "quiver    vertices {}", i.vertices.join(" "));
        if !arrows.is_empty() {
            let _ = writeln!(out, "          arrows {}", arrows.join(", "));
        }
        let _ = writeln!(out, "m         {}", i.m);
        let _ = writeln!(out, "seed      {}", self.seed);
        if let Some(ms) = self.elapsed_ms {
            let _ = writeln!(out, "elapsed   {ms} ms");
        }
        for r in &self.results {
            let _ = writeln!(out, "\n{}: {}", r.claim, verdict_word(r.verdict));
            let width = r.values.keys().map(String::len).max().unwrap_or(0);
            for (k, v) in &r.values {
                let _ = writeln!(out, "  {k:<width$}  {}", show_value(v));
            }
            for c in &r.checks {
                let _ = writeln!(out, "  [{}] {}", if c.holds { "ok" } else { "FAIL" }, c.name);
            }
            for w in &r.witnesses {
                let _ = writeln!(out, "  | {w}");
            }
        }
        if !self.inventory.is_empty() {
            let _ = writeln!(out, "\ninventory ({})", vertex_labels.join(" "));
            let lw = self.inventory.iter().map(|e| e.label.len()).max().unwrap_or(0).max(5);
            let dims: Vec<String> = self.inventory.iter().map(|e| show_vector(&e.dims)).collect();
            let dw = dims.iter().map(String::len).max().unwrap_or(0).max(4);
            let _ = writeln!(out, "  {:<lw$}  {:<dw$}  pd", "label", "dims");
            for (e, d) in self.inventory.iter().zip(&dims) {
                let _ = writeln!(out, "  {:<lw$}  {:<dw$}  {}", e.label, d, e.pd);
                if let Some(layers) = &e.loewy {
                    for layer in layers {
                        let _ = writeln!(out, "  {:<lw$}    {}", "", loewy_layer(layer, vertex_labels));
                    }
                }
            }
        }
        out
    }
}

fn verdict_word(v: Verdict) -> &'static str {
    if v.is_pass() {
        "PASS"
    } else {
        "FAIL"
    }
}

fn show_vector(v: &[usize]) -> String {
    let parts: Vec<String> = v.iter().map(usize::to_string).collect();
    format!("({})", parts.join(","))
}

fn show_value(v: &Value) -> String {
    match v {
        Value::Count(n) => n.to_string(),
        Value::Dim(b) => b.to_string(),
        Value::Flag(b) => b.to_string(),
        Value::Text(s) => s.clone(),
        Value::Vector(v) => show_vector(v),
        Value::Vectors(vs) => vs.iter().map(|v| show_vector(v)).collect::<Vec<_>>().join(" "),
        Value::Labels(ls) if ls.is_empty() => "-".to_string(),
        Value::Labels(ls) => ls.join(", "),
    }
}

/// A radical layer written as a multiset of vertices, e.g. `2 2 1'`.
fn loewy_layer(layer: &[usize], labels: &[String]) -> String {
    let mut parts = Vec::new();
    for (v, &n) in layer.iter().enumerate() {
        for _ in 0..n {
            parts.push(labels[v].as_str());
        }
    }
    parts.join(" ")
}
