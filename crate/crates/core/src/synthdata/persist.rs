//! Persistence for generated series: one CSV per series (`period,value`)
//! plus a JSON batch manifest recording the config and per-series seeds for
//! exact replay.

use std::path::{Path, PathBuf};

use serde::{Deserialize, Serialize};

use super::gbm::{GbmParams, PricePathConfig};
use super::SynthError;

/// Replay manifest for a generated batch.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct BatchManifest {
    pub config: PricePathConfig,
    pub root_seed: u64,
    pub series: Vec<SeriesEntry>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SeriesEntry {
    pub asset_id: String,
    pub seed: u64,
    pub params: GbmParams,
    pub file: String,
}

/// Write a series as `period,value` rows.
pub fn write_series_csv(path: &Path, values: &[f64]) -> Result<(), SynthError> {
    let mut writer = csv::Writer::from_path(path)?;
    writer.write_record(["period", "value"])?;
    for (t, v) in values.iter().enumerate() {
        writer.write_record([t.to_string(), v.to_string()])?;
    }
    writer.flush()?;
    Ok(())
}

/// Read back a `period,value` series.
pub fn load_series_csv(path: &Path) -> Result<Vec<f64>, SynthError> {
    let mut reader = csv::Reader::from_path(path)?;
    let mut out = Vec::new();
    for record in reader.records() {
        let record = record?;
        let v: f64 = record
            .get(1)
            .ok_or_else(|| SynthError::InvalidConfig("missing value column".into()))?
            .parse()
            .map_err(|e| SynthError::InvalidConfig(format!("bad value: {e}")))?;
        out.push(v);
    }
    Ok(out)
}

/// Write every series of a batch plus its manifest into `dir`. Returns the
/// manifest path.
pub fn write_batch(
    dir: &Path,
    manifest: &BatchManifest,
    series: &[(String, Vec<f64>)],
) -> Result<PathBuf, SynthError> {
    std::fs::create_dir_all(dir)?;
    for (file, values) in series {
        write_series_csv(&dir.join(file), values)?;
    }
    let path = dir.join("batch_manifest.json");
    let mut json = serde_json::to_string_pretty(manifest)?;
    json.push('\n');
    std::fs::write(&path, json)?;
    Ok(path)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn series_round_trip() {
        let dir = tempfile::tempdir().unwrap();
        let path = dir.path().join("s.csv");
        let values = vec![1.5, 2.25, 3.0];
        write_series_csv(&path, &values).unwrap();
        assert_eq!(load_series_csv(&path).unwrap(), values);
    }

    #[test]
    fn manifest_round_trips_through_json() {
        let manifest = BatchManifest {
            config: PricePathConfig::default(),
            root_seed: 7,
            series: vec![SeriesEntry {
                asset_id: "Asset Q001".into(),
                seed: 42,
                params: GbmParams {
                    mu: 0.05,
                    sigma: 0.2,
                    s0: 100.0,
                },
                file: "q001.csv".into(),
            }],
        };
        let json = serde_json::to_string(&manifest).unwrap();
        let back: BatchManifest = serde_json::from_str(&json).unwrap();
        assert_eq!(manifest, back);
    }
}
