//! Run manifests: enough to regenerate every output file bit-exactly.

use std::path::{Path, PathBuf};

use serde::{Deserialize, Serialize};
use sha2::{Digest, Sha256};

use crate::error::{Error, Result};

pub const MANIFEST_SCHEMA: &str = "boxproj-manifest/1";
pub const REPORT_SCHEMA: &str = "boxproj-report/1";

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct OutputEntry {
    pub path: String,
    pub format: String,
    pub sha256: String,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct RunManifest {
    pub schema: String,
    pub report_schema: String,
    pub command: String,
    /// Command-line arguments after the program name.
    pub args: Vec<String>,
    pub parameters: serde_json::Value,
    pub master_seed: Option<u64>,
    pub generator: String,
    pub version: String,
    pub outputs: Vec<OutputEntry>,
}

impl RunManifest {
    pub fn new(command: &str, args: Vec<String>, parameters: serde_json::Value, master_seed: Option<u64>) -> Self {
        Self {
            schema: MANIFEST_SCHEMA.into(),
            report_schema: REPORT_SCHEMA.into(),
            command: command.into(),
            args,
            parameters,
            master_seed,
            generator: boxproj_core::GENERATOR_ID.into(),
            version: env!("CARGO_PKG_VERSION").into(),
            outputs: Vec::new(),
        }
    }

    pub fn record(&mut self, path: &Path, format: &str, bytes: &[u8]) {
        self.outputs.push(OutputEntry {
            path: path.display().to_string(),
            format: format.into(),
            sha256: sha256_hex(bytes),
        });
    }

    /// `<primary output>.manifest.json`.
    pub fn path_for(output: &Path) -> PathBuf {
        let mut name = output.as_os_str().to_owned();
        name.push(".manifest.json");
        PathBuf::from(name)
    }

    pub fn write(&self, path: &Path) -> Result<()> {
        let mut text = serde_json::to_string_pretty(self).expect("manifest serializes");
        text.push('\n');
        std::fs::write(path, text).map_err(|e| Error::io(path, e))
    }

    pub fn read(path: &Path) -> Result<Self> {
        let text = std::fs::read_to_string(path).map_err(|e| Error::io(path, e))?;
        serde_json::from_str(&text).map_err(|e| Error::Input {
            path: path.into(),
            message: e.to_string(),
        })
    }
}

pub fn sha256_hex(bytes: &[u8]) -> String {
    Sha256::digest(bytes).iter().map(|b| format!("{b:02x}")).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn known_digest() {
        assert_eq!(
            sha256_hex(b"abc"),
            "ba7816bf8f01cfea414140de5dae2223b00361a396177a9cb410ff61f20015ad"
        );
    }

    #[test]
    fn manifest_path() {
        assert_eq!(
            RunManifest::path_for(Path::new("out/a.csv")),
            PathBuf::from("out/a.csv.manifest.json")
        );
    }

    #[test]
    fn round_trip() {
        let dir = tempfile::tempdir().unwrap();
        let mut m = RunManifest::new("sweep", vec!["sweep".into()], serde_json::json!({"trials": 3}), Some(9));
        m.record(Path::new("x.csv"), "csv", b"abc");
        let path = dir.path().join("m.json");
        m.write(&path).unwrap();
        assert_eq!(RunManifest::read(&path).unwrap(), m);
    }
}
