//! Experiment manifest: one JSON record per invocation, appended to a file.
//! Given the same inputs, flags, and seed, every field except `wall_ms` is
//! byte-identical across runs.

use std::collections::BTreeMap;
use std::path::{Path, PathBuf};
use std::time::Instant;

use serde::{Deserialize, Serialize};

use orthodim::error::Error;
use orthodim::reductions::fnv1a;

#[derive(Serialize, Deserialize, Debug, Clone, PartialEq)]
pub struct ManifestRecord {
    pub command: String,
    pub argv: Vec<String>,
    pub inputs: BTreeMap<String, String>,
    pub version: String,
    pub results: BTreeMap<String, serde_json::Value>,
    pub error: Option<String>,
    pub wall_ms: u128,
    #[serde(skip)]
    started: Option<Instant>,
}

impl ManifestRecord {
    pub fn start(_cli: &super::Cli) -> ManifestRecord {
        let argv: Vec<String> = std::env::args().skip(1).collect();
        ManifestRecord {
            command: argv.first().cloned().unwrap_or_default(),
            argv,
            inputs: BTreeMap::new(),
            version: env!("CARGO_PKG_VERSION").to_string(),
            results: BTreeMap::new(),
            error: None,
            wall_ms: 0,
            started: Some(Instant::now()),
        }
    }

    /// Registers an input file by content digest.
    pub fn input(&mut self, path: &PathBuf) -> Result<(), Error> {
        let bytes = std::fs::read(path)
            .map_err(|e| Error::parse(0, format!("{}: {e}", path.display())))?;
        self.inputs.insert(
            path.display().to_string(),
            format!("fnv1a:{:016x}", fnv1a(&bytes)),
        );
        Ok(())
    }

    pub fn result(&mut self, key: &str, value: impl Serialize) {
        self.results.insert(
            key.to_string(),
            serde_json::to_value(value).expect("serializable result"),
        );
    }

    pub fn results_json(&self) -> String {
        serde_json::to_string(&self.results).expect("serializable results map")
    }

    pub fn finish(&mut self, error: Option<&Error>) {
        self.error = error.map(|e| e.to_string());
        if let Some(started) = self.started.take() {
            self.wall_ms = started.elapsed().as_millis();
        }
    }

    pub fn append_to(&self, path: &Path) -> std::io::Result<()> {
        use std::io::Write as _;
        let mut file = std::fs::OpenOptions::new()
            .create(true)
            .append(true)
            .open(path)?;
        writeln!(file, "{}", serde_json::to_string(self).expect("serializable record"))
    }
}
