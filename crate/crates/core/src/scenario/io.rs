//! Reading documents and writing outputs.

use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};

use serde::de::DeserializeOwned;
use serde::Serialize;

use super::document::{ConfigDocument, ScenarioDocument, CONFIG_SCHEMA, SCENARIO_SCHEMA};
use crate::calibration::CalibrationSample;
use crate::design::AnchorConfig;
use crate::error::Error;
use crate::rft::{MediaDocument, MediaProfile, MEDIA_SCHEMA};

#[derive(Debug, thiserror::Error)]
pub enum ScenarioError {
    /// Input could not be read, parsed, or violates its schema.
    #[error("{path}: {message}")]
    Parse { path: PathBuf, message: String },
    #[error("{0}")]
    Model(#[from] Error),
    #[error("cannot write {path}: {message}")]
    Write { path: PathBuf, message: String },
}

impl ScenarioError {
    /// 1 for model, contract and write failures, 2 for unreadable input.
    pub fn exit_code(&self) -> i32 {
        match self {
            ScenarioError::Parse { .. } => 2,
            ScenarioError::Model(_) | ScenarioError::Write { .. } => 1,
        }
    }

    fn parse(path: &Path, message: impl ToString) -> Self {
        ScenarioError::Parse {
            path: path.to_path_buf(),
            message: message.to_string(),
        }
    }
}

fn read_json<T: DeserializeOwned>(path: &Path) -> Result<T, ScenarioError> {
    let text = fs::read_to_string(path).map_err(|e| ScenarioError::parse(path, e))?;
    serde_json::from_str(&text).map_err(|e| ScenarioError::parse(path, e))
}

fn check_schema(path: &Path, found: u32, expected: u32) -> Result<(), ScenarioError> {
    if found == expected {
        Ok(())
    } else {
        Err(ScenarioError::parse(
            path,
            format!("field `schema`: unsupported version {found}, expected {expected}"),
        ))
    }
}

pub fn load_scenario_document(path: &Path) -> Result<ScenarioDocument, ScenarioError> {
    let doc: ScenarioDocument = read_json(path)?;
    check_schema(path, doc.schema, SCENARIO_SCHEMA)?;
    Ok(doc)
}

pub fn load_media(path: &Path) -> Result<MediaProfile, ScenarioError> {
    let doc: MediaDocument = read_json(path)?;
    check_schema(path, doc.schema, MEDIA_SCHEMA)?;
    MediaProfile::from_document(doc).map_err(|e| ScenarioError::parse(path, e))
}

pub fn media_json(media: &MediaProfile) -> String {
    to_json(&media.to_document())
}

pub fn load_config(path: &Path) -> Result<AnchorConfig, ScenarioError> {
    let doc: ConfigDocument = read_json(path)?;
    check_schema(path, doc.schema, CONFIG_SCHEMA)?;
    Ok(doc.to_config())
}

pub fn config_json(cfg: &AnchorConfig) -> String {
    to_json(&ConfigDocument::from_config(cfg))
}

fn to_json<T: Serialize>(value: &T) -> String {
    let mut s = serde_json::to_string_pretty(value).expect("documents serialize");
    s.push('\n');
    s
}

/// Reads `depth_m,force_N,regime` rows. Errors carry the line number.
pub fn load_samples(path: &Path) -> Result<Vec<CalibrationSample>, ScenarioError> {
    let mut reader = csv::ReaderBuilder::new()
        .trim(csv::Trim::All)
        .from_path(path)
        .map_err(|e| ScenarioError::parse(path, e))?;
    let headers = reader
        .headers()
        .map_err(|e| ScenarioError::parse(path, e))?;
    let expected = ["depth_m", "force_N", "regime"];
    if headers.iter().ne(expected.iter().copied()) {
        return Err(ScenarioError::parse(
            path,
            format!(
                "line 1: header must be {}, found {}",
                expected.join(","),
                headers.iter().collect::<Vec<_>>().join(",")
            ),
        ));
    }
    reader
        .deserialize()
        .map(|row| row.map_err(|e| ScenarioError::parse(path, e)))
        .collect()
}

pub fn samples_csv(samples: &[CalibrationSample]) -> String {
    let mut w = csv::Writer::from_writer(Vec::new());
    for s in samples {
        w.serialize(s).expect("in-memory write");
    }
    String::from_utf8(w.into_inner().expect("in-memory flush")).expect("utf-8")
}

/// Writes through a temporary file in the same directory, then renames, so
/// readers never see a partial file.
pub fn write_atomic(path: &Path, bytes: &[u8]) -> Result<(), ScenarioError> {
    let fail = |e: &dyn std::fmt::Display| ScenarioError::Write {
        path: path.to_path_buf(),
        message: e.to_string(),
    };
    let dir = match path.parent() {
        Some(p) if !p.as_os_str().is_empty() => p,
        _ => Path::new("."),
    };
    let mut tmp = tempfile::NamedTempFile::new_in(dir).map_err(|e| fail(&e))?;
    tmp.write_all(bytes).map_err(|e| fail(&e))?;
    #[cfg(unix)]
    {
        use std::os::unix::fs::PermissionsExt;
        tmp.as_file()
            .set_permissions(fs::Permissions::from_mode(0o644))
            .map_err(|e| fail(&e))?;
    }
    tmp.as_file().sync_all().map_err(|e| fail(&e))?;
    tmp.persist(path).map_err(|e| fail(&e.error))?;
    Ok(())
}
