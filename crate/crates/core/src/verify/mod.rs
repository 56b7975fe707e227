//! Pass/fail certificates over exact computed values.

mod claims;
mod golden;
mod witness;

use std::collections::BTreeMap;

use serde::Serialize;

use crate::algebra::Bounded;
use crate::replicated::Quiver;

pub use claims::{
    certify_dominant_dimension, certify_ext_stable_hom, certify_gl_dim_bounds, certify_representation_dimension,
    ExtSuiteOptions,
};
pub use golden::{certify_kronecker_golden, KRONECKER_GOLDEN_DIMS};
pub use witness::{add_resolution_witness, certify_add_resolutions, resolution_targets, AddResolutionWitness};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Verdict {
    Pass,
    Fail,
}

impl Verdict {
    pub fn from_bool(ok: bool) -> Self {
        if ok {
            Verdict::Pass
        } else {
            Verdict::Fail
        }
    }

    pub fn is_pass(self) -> bool {
        self == Verdict::Pass
    }
}

/// A recorded value.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(untagged)]
pub enum Value {
    Count(usize),
    Dim(Bounded),
    Flag(bool),
    Text(String),
    Vector(Vec<usize>),
    Vectors(Vec<Vec<usize>>),
    Labels(Vec<String>),
}

impl From<usize> for Value {
    fn from(v: usize) -> Self {
        Value::Count(v)
    }
}

impl From<Bounded> for Value {
    fn from(v: Bounded) -> Self {
        Value::Dim(v)
    }
}

impl From<bool> for Value {
    fn from(v: bool) -> Self {
        Value::Flag(v)
    }
}

impl From<String> for Value {
    fn from(v: String) -> Self {
        Value::Text(v)
    }
}

impl From<Vec<usize>> for Value {
    fn from(v: Vec<usize>) -> Self {
        Value::Vector(v)
    }
}

impl From<Vec<Vec<usize>>> for Value {
    fn from(v: Vec<Vec<usize>>) -> Self {
        Value::Vectors(v)
    }
}

impl From<Vec<String>> for Value {
    fn from(v: Vec<String>) -> Self {
        Value::Labels(v)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ArrowRecord {
    pub name: String,
    pub from: String,
    pub to: String,
}

/// The quiver and `m` a certificate is about.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Instance {
    pub vertices: Vec<String>,
    pub arrows: Vec<ArrowRecord>,
    pub m: usize,
}

impl Instance {
    pub fn new(q: &Quiver, m: usize) -> Self {
        let v = q.vertices();
        Instance {
            vertices: v.to_vec(),
            arrows: q
                .arrows()
                .iter()
                .map(|a| ArrowRecord { name: a.name.clone(), from: v[a.from].clone(), to: v[a.to].clone() })
                .collect(),
            m,
        }
    }
}

/// A named check over recorded values.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Check {
    pub name: String,
    pub holds: bool,
}

/// A claim evaluated on one instance. The verdict is `Pass` exactly when
/// every check holds.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Certificate {
    pub claim: String,
    pub instance: Instance,
    pub values: BTreeMap<String, Value>,
    pub checks: Vec<Check>,
    pub verdict: Verdict,
    /// Human-readable exact sequences, dimension tables and similar.
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub witnesses: Vec<String>,
}

impl Certificate {
    pub fn new(claim: &str, instance: Instance) -> Self {
        Certificate {
            claim: claim.to_string(),
            instance,
            values: BTreeMap::new(),
            checks: Vec::new(),
            verdict: Verdict::Pass,
            witnesses: Vec::new(),
        }
    }

    pub fn value(&mut self, name: &str, v: impl Into<Value>) -> &mut Self {
        self.values.insert(name.to_string(), v.into());
        self
    }

    pub fn check(&mut self, name: &str, holds: bool) -> &mut Self {
        self.checks.push(Check { name: name.to_string(), holds });
        self.verdict = Verdict::from_bool(self.checks.iter().all(|c| c.holds));
        self
    }

    pub fn witness(&mut self, w: impl Into<String>) -> &mut Self {
        self.witnesses.push(w.into());
        self
    }

    pub fn passed(&self) -> bool {
        self.verdict.is_pass()
    }
}

/// Default resolution cap `4m + 4`.
pub fn default_cap(m: usize) -> usize {
    4 * m + 4
}
