//! Command dispatch and reports for the `replicated` binary.

mod quiver_file;
pub mod report;

use std::path::PathBuf;
use std::time::Instant;

use replicated_core::algebra::projective_dimension;
use replicated_core::replicated::{auslander_generator, minimal_cogenerator, Generator};
use replicated_core::verify::*;
use replicated_core::{ModuleRep, Quiver};
use thiserror::Error;

pub use quiver_file::{parse_quiver, serialize_quiver};
pub use report::{InventoryEntry, Report, ResultEntry};

#[derive(Debug, Error)]
pub enum CliError {
    #[error("parse error at line {line}, column {column}: {message}")]
    Parse { line: usize, column: usize, message: String },
    #[error(transparent)]
    Quiver(#[from] replicated_core::Error),
    #[error("{path}: {source}")]
    Io { path: PathBuf, source: std::io::Error },
    #[error("{0}")]
    Usage(String),
    #[error("unknown target `{0}`")]
    UnknownTarget(String),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum GeneratorChoice {
    /// `M`, including the cosyzygy-layer summands.
    Auslander,
    /// `M_0 = A ⊕ D(A)_m ⊕ P`.
    Minimal,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Command {
    Repdim,
    Domdim,
    Bounds,
    /// `None` runs every inventory target.
    Lemma24 { target: Option<String>, generator: GeneratorChoice },
    Extcheck { sample: Option<usize> },
    Example34,
    Inventory,
}

impl Command {
    pub fn name(&self) -> &'static str {
        match self {
            Command::Repdim => "repdim",
            Command::Domdim => "domdim",
            Command::Bounds => "bounds",
            Command::Lemma24 { .. } => "lemma24",
            Command::Extcheck { .. } => "extcheck",
            Command::Example34 => "example34",
            Command::Inventory => "inventory",
        }
    }
}

#[derive(Clone, Debug)]
pub struct Options {
    pub quiver: Option<Quiver>,
    pub m: usize,
    /// Resolution cap; `None` means `4m + 4`.
    pub cap: Option<usize>,
    pub seed: u64,
    pub timing: bool,
}

impl Options {
    pub fn new(quiver: Quiver, m: usize) -> Self {
        Options { quiver: Some(quiver), m, cap: None, seed: 0, timing: false }
    }

    fn cap(&self) -> usize {
        self.cap.unwrap_or_else(|| default_cap(self.m))
    }

    fn quiver(&self, cmd: &Command) -> Result<&Quiver, CliError> {
        self.quiver.as_ref().ok_or_else(|| CliError::Usage(format!("`{}` needs --quiver PATH", cmd.name())))
    }
}

pub fn read_quiver(path: &std::path::Path) -> Result<Quiver, CliError> {
    let text = std::fs::read_to_string(path).map_err(|source| CliError::Io { path: path.to_path_buf(), source })?;
    parse_quiver(&text)
}

/// Runs one command. Returns the report and the vertex labels of `A^(m)`
/// used to print Loewy layers.
pub fn run(cmd: &Command, opts: &Options) -> Result<(Report, Vec<String>), CliError> {
    let start = Instant::now();
    let cap = opts.cap();
    let seed = opts.seed;
    let m = opts.m;
    let mut inventory = Vec::new();
    let mut labels = Vec::new();
    let (instance, results) = match cmd {
        Command::Example34 => {
            let q = Quiver::kronecker();
            let cert = certify_kronecker_golden(cap, seed)?;
            let gen = auslander_generator(&q, 1, cap, seed)?;
            inventory = inventory_of(&gen, cap, false);
            labels = gen.algebra.vertex_labels();
            (Instance::new(&q, 1), vec![cert])
        }
        Command::Repdim => {
            let q = opts.quiver(cmd)?;
            let gen = auslander_generator(q, m, cap, seed)?;
            inventory = inventory_of(&gen, cap, false);
            labels = gen.algebra.vertex_labels();
            (Instance::new(q, m), vec![certify_representation_dimension(&gen, cap)?])
        }
        Command::Inventory => {
            let q = opts.quiver(cmd)?;
            let gen = auslander_generator(q, m, cap, seed)?;
            inventory = inventory_of(&gen, cap, true);
            labels = gen.algebra.vertex_labels();
            (Instance::new(q, m), vec![])
        }
        Command::Domdim => {
            let q = opts.quiver(cmd)?;
            (Instance::new(q, m), vec![certify_dominant_dimension(q, m, cap)?])
        }
        Command::Bounds => {
            let q = opts.quiver(cmd)?;
            (Instance::new(q, m), vec![certify_gl_dim_bounds(q, m, cap)?])
        }
        Command::Extcheck { sample } => {
            let q = opts.quiver(cmd)?;
            let cert = certify_ext_stable_hom(q, m, ExtSuiteOptions { sample: *sample, seed, cap })?;
            (Instance::new(q, m), vec![cert])
        }
        Command::Lemma24 { target, generator } => {
            let q = opts.quiver(cmd)?;
            let gen = match generator {
                GeneratorChoice::Auslander => auslander_generator(q, m, cap, seed)?,
                GeneratorChoice::Minimal => minimal_cogenerator(q, m, cap, seed)?,
            };
            let mut targets = resolution_targets(&gen, seed)?;
            if let Some(t) = target {
                let found = targets
                    .iter()
                    .cloned()
                    .chain(gen.summands.iter().map(|s| (s.label.clone(), s.module.clone())))
                    .find(|(l, _)| l == t);
                targets = vec![found.ok_or_else(|| CliError::UnknownTarget(t.clone()))?];
            }
            let (cert, _) = certify_add_resolutions(&gen, &targets, seed)?;
            inventory = inventory_of(&gen, cap, false);
            labels = gen.algebra.vertex_labels();
            (Instance::new(q, m), vec![cert])
        }
    };
    let elapsed_ms = opts.timing.then(|| start.elapsed().as_millis() as u64);
    let report = Report {
        schema: report::SCHEMA,
        command: cmd.name().to_string(),
        instance,
        results: results.into_iter().map(ResultEntry::from).collect(),
        inventory,
        seed,
        elapsed_ms,
    };
    Ok((report, labels))
}

fn inventory_of(gen: &Generator, cap: usize, loewy: bool) -> Vec<InventoryEntry> {
    gen.summands
        .iter()
        .map(|s| entry(&s.label, &s.module, cap, loewy))
        .collect()
}

fn entry(label: &str, x: &ModuleRep, cap: usize, loewy: bool) -> InventoryEntry {
    InventoryEntry {
        label: label.to_string(),
        dims: x.dims().to_vec(),
        pd: projective_dimension(x, cap),
        loewy: loewy.then(|| x.loewy_layers()),
    }
}
