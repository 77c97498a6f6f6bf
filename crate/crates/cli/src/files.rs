//! Instance files and atomic output.
//!
//! JSON: `{"generator": {...}, "airplanes": [{"id": 1, "v": "4.0", "c": "2"}]}`.
//! CSV: `#` comment lines carrying the generator, then `id,v,c`.
//! Values are exact decimal strings (or `p/q` when the decimal does not
//! terminate), so a file reads back into the identical instance.

use std::collections::BTreeMap;
use std::fs;
use std::io::Write;
use std::path::Path;

use arp_core::{Airplane, Instance, Scalar};
use serde::{Deserialize, Serialize};
use tempfile::NamedTempFile;

use crate::error::{CliError, Result};

/// Where an instance came from: kind, n, seed, PRNG and so on.
pub type Provenance = BTreeMap<String, String>;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct AirplaneRecord {
    pub id: u32,
    pub v: String,
    pub c: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct InstanceFile {
    #[serde(default, skip_serializing_if = "BTreeMap::is_empty")]
    pub generator: Provenance,
    pub airplanes: Vec<AirplaneRecord>,
}

// v keeps one decimal, as in the printed tables: 4.0, not 4
fn render(x: &Scalar, min_frac: u32) -> String {
    x.to_exact_string(min_frac)
}

impl InstanceFile {
    pub fn from_instance(inst: &Instance, generator: Provenance) -> Self {
        let airplanes = inst
            .iter()
            .map(|a| AirplaneRecord {
                id: a.id().0,
                v: render(a.v(), 1),
                c: render(a.c(), 0),
            })
            .collect();
        InstanceFile {
            generator,
            airplanes,
        }
    }

    pub fn to_instance(&self) -> arp_core::Result<Instance> {
        let airplanes = self
            .airplanes
            .iter()
            .map(|r| Airplane::parse(r.id, &r.v, &r.c))
            .collect::<arp_core::Result<Vec<_>>>()?;
        Instance::new(airplanes)
    }

    pub fn to_json(&self) -> String {
        let mut out = serde_json::to_string_pretty(self).expect("plain data serializes");
        out.push('\n');
        out
    }

    pub fn to_csv(&self) -> String {
        let mut out = String::new();
        for (key, value) in &self.generator {
            out.push_str(&format!("# {key}: {value}\n"));
        }
        let mut w = csv::Writer::from_writer(Vec::new());
        for r in &self.airplanes {
            w.serialize(r).expect("in-memory csv");
        }
        out.push_str(&String::from_utf8(w.into_inner().expect("in-memory csv")).expect("utf-8"));
        out
    }

    pub fn from_json(text: &str) -> std::result::Result<Self, String> {
        serde_json::from_str(text).map_err(|e| e.to_string())
    }

    pub fn from_csv(text: &str) -> std::result::Result<Self, String> {
        let mut generator = Provenance::new();
        for line in text.lines().take_while(|l| l.starts_with('#')) {
            if let Some((k, v)) = line[1..].split_once(':') {
                generator.insert(k.trim().to_string(), v.trim().to_string());
            }
        }
        let mut reader = csv::ReaderBuilder::new()
            .comment(Some(b'#'))
            .trim(csv::Trim::All)
            .from_reader(text.as_bytes());
        let airplanes = reader
            .deserialize()
            .collect::<std::result::Result<Vec<AirplaneRecord>, _>>()
            .map_err(|e| e.to_string())?;
        Ok(InstanceFile {
            generator,
            airplanes,
        })
    }
}

/// Reads an instance, JSON or CSV, sniffed from the first non-blank byte.
pub fn read_instance(path: &Path) -> Result<(Instance, InstanceFile)> {
    let text = fs::read_to_string(path).map_err(|e| CliError::parse(path, e))?;
    let file = if text.trim_start().starts_with('{') {
        InstanceFile::from_json(&text)
    } else {
        InstanceFile::from_csv(&text)
    }
    .map_err(|e| CliError::parse(path, e))?;
    let inst = file.to_instance().map_err(|e| CliError::parse(path, e))?;
    Ok((inst, file))
}

/// Writes `contents` to `path` through a temporary file in the same
/// directory, so readers never see a half-written file. `None` is stdout.
pub fn write_output(path: Option<&Path>, contents: &str) -> Result<()> {
    let Some(path) = path else {
        print!("{contents}");
        return Ok(());
    };
    let dir = match path.parent() {
        Some(p) if !p.as_os_str().is_empty() => p,
        _ => Path::new("."),
    };
    let mut tmp = NamedTempFile::new_in(dir).map_err(|e| CliError::io(dir, e))?;
    tmp.write_all(contents.as_bytes())
        .map_err(|e| CliError::io(path, e))?;
    tmp.persist(path).map_err(|e| CliError::io(path, e.error))?;
    Ok(())
}
