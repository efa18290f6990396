//! Run manifests: one JSON record per invocation with the resolved
//! parameters, seed, timestamps and digests of every file written.

use std::path::{Path, PathBuf};

use serde::Serialize;
use sha2::{Digest, Sha256};

#[derive(Serialize)]
pub struct OutputRecord {
    pub path: String,
    pub sha256: String,
    pub bytes: u64,
}

#[derive(Serialize)]
pub struct RunManifest {
    pub subcommand: String,
    pub parameters: serde_json::Value,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub seed: Option<u64>,
    pub version: &'static str,
    pub started: String,
    pub finished: String,
    pub outputs: Vec<OutputRecord>,
}

impl RunManifest {
    pub fn start(subcommand: &str, parameters: serde_json::Value, seed: Option<u64>) -> Self {
        Self {
            subcommand: subcommand.to_string(),
            parameters,
            seed,
            version: env!("CARGO_PKG_VERSION"),
            started: chrono::Utc::now().to_rfc3339(),
            finished: String::new(),
            outputs: Vec::new(),
        }
    }

    pub fn record_output(&mut self, path: &Path, bytes: &[u8]) {
        self.outputs.push(OutputRecord {
            path: path.display().to_string(),
            sha256: hex::encode(Sha256::digest(bytes)),
            bytes: bytes.len() as u64,
        });
    }

    /// Writes the manifest next to the outputs. Console-only runs log it on
    /// the debug channel instead of creating stray files.
    pub fn finish(mut self, explicit: Option<&Path>) -> anyhow::Result<()> {
        self.finished = chrono::Utc::now().to_rfc3339();
        let json = serde_json::to_string_pretty(&self)?;
        let path: Option<PathBuf> = explicit.map(Path::to_path_buf).or_else(|| {
            self.outputs
                .first()
                .map(|o| PathBuf::from(format!("{}.manifest.json", o.path)))
        });
        match path {
            Some(p) => {
                crate::io::write_atomic(&p, json.as_bytes())?;
                log::info!("manifest written to {}", p.display());
            }
            None => log::debug!("manifest: {json}"),
        }
        Ok(())
    }
}
