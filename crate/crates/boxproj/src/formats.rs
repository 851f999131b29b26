//! On-disk formats: point-set and sweep CSVs, model-spec and report JSON.

use std::io::{Read, Write};

use boxproj_core::models::{BoxSpec, GaussianMixtureSpec, ModelSpec, PointSet, RatioRange};
use boxproj_core::montecarlo::SweepTable;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Decimal with 17 significant digits, enough to round-trip any `f64`.
pub fn fmt_f64(x: f64) -> String {
    format!("{x:.16e}")
}

fn write_err(e: std::io::Error) -> Error {
    Error::io("<output>", e)
}

/// Header `x1..xD[,y1..yL]`, one row per point.
pub fn write_points_csv<W: Write>(points: &PointSet, mut out: W) -> Result<()> {
    let mut header: Vec<String> = (1..=points.dim()).map(|i| format!("x{i}")).collect();
    header.extend((1..=points.label_dim()).map(|i| format!("y{i}")));
    writeln!(out, "{}", header.join(",")).map_err(write_err)?;
    let mut line = String::new();
    for j in 0..points.len() {
        line.clear();
        for (i, x) in points.row(j).iter().enumerate() {
            if i > 0 {
                line.push(',');
            }
            line.push_str(&fmt_f64(*x));
        }
        if let Some(labels) = points.label_row(j) {
            for y in labels {
                line.push(',');
                line.push(if *y == 1 { '1' } else { '0' });
            }
        }
        line.push('\n');
        out.write_all(line.as_bytes()).map_err(write_err)?;
    }
    Ok(())
}

/// Reads a point-set CSV. `origin` names the source in error messages.
pub fn read_points_csv<R: Read>(input: R, origin: &str) -> Result<PointSet> {
    let bad = |message: String| Error::Input {
        path: origin.into(),
        message,
    };
    let mut reader = csv::ReaderBuilder::new().has_headers(true).from_reader(input);
    let header = reader.headers().map_err(|e| bad(e.to_string()))?.clone();
    if header.is_empty() || header.iter().all(str::is_empty) {
        return Err(bad("empty input".into()));
    }
    let mut dim = 0;
    let mut label_dim = 0;
    for (col, name) in header.iter().enumerate() {
        let name = name.trim();
        let expected_x = format!("x{}", col + 1);
        let expected_y = format!("y{}", col + 1 - dim);
        if label_dim == 0 && name == expected_x {
            dim += 1;
        } else if dim > 0 && name == expected_y {
            label_dim += 1;
        } else {
            return Err(bad(format!("unexpected column `{name}` at position {}", col + 1)));
        }
    }
    let mut coords = Vec::new();
    let mut labels = Vec::new();
    for (line, record) in reader.records().enumerate() {
        let record = record.map_err(|e| bad(e.to_string()))?;
        if record.len() != dim + label_dim {
            return Err(bad(format!(
                "row {} has {} fields, expected {}",
                line + 1,
                record.len(),
                dim + label_dim
            )));
        }
        for field in record.iter().take(dim) {
            let x: f64 = field
                .trim()
                .parse()
                .map_err(|_| bad(format!("row {}: `{field}` is not a number", line + 1)))?;
            coords.push(x);
        }
        for field in record.iter().skip(dim) {
            labels.push(match field.trim() {
                "0" => 0u8,
                "1" => 1u8,
                other => return Err(bad(format!("row {}: label `{other}` is not 0 or 1", line + 1))),
            });
        }
    }
    if coords.is_empty() {
        return Err(bad("no data rows".into()));
    }
    let labels = (label_dim > 0).then_some((label_dim, labels));
    Ok(PointSet::from_rows(dim, coords, labels)?)
}

/// Single column `t`.
pub fn write_projection_csv<W: Write>(values: &[f64], mut out: W) -> Result<()> {
    writeln!(out, "t").map_err(write_err)?;
    for v in values {
        writeln!(out, "{}", fmt_f64(*v)).map_err(write_err)?;
    }
    Ok(())
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum ModelKind {
    Mixture,
    Box,
}

/// `{"model":"mixture"|"box","dim":int,"a":float?,"r":float?,"e":[float]?}`
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ModelSpecJson {
    pub model: ModelKind,
    pub dim: usize,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub a: Option<f64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub r: Option<f64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub e: Option<Vec<f64>>,
}

impl ModelSpecJson {
    /// A mixture direction `e` is rescaled to unit length; the default is the
    /// first axis.
    pub fn to_model(&self, range: RatioRange) -> Result<ModelSpec> {
        match self.model {
            ModelKind::Box => {
                if self.a.is_some() || self.e.is_some() {
                    return Err(Error::usage("box model takes `r`, not `a` or `e`"));
                }
                Ok(BoxSpec::with_range(self.dim, self.r.unwrap_or(1.0), range)?.into())
            }
            ModelKind::Mixture => {
                if self.r.is_some() {
                    return Err(Error::usage("mixture model takes `a` and `e`, not `r`"));
                }
                let a = self.a.ok_or_else(|| Error::usage("mixture model needs `a`"))?;
                let spec = match &self.e {
                    None => GaussianMixtureSpec::new(self.dim, a)?,
                    Some(e) => {
                        if e.len() != self.dim {
                            return Err(Error::usage(format!(
                                "direction has {} components but dim is {}",
                                e.len(),
                                self.dim
                            )));
                        }
                        GaussianMixtureSpec::with_normalized_direction(a, e.clone())?
                    }
                };
                Ok(spec.into())
            }
        }
    }

    pub fn from_model(model: &ModelSpec) -> Self {
        match model {
            ModelSpec::Box(b) => Self {
                model: ModelKind::Box,
                dim: b.dim(),
                a: None,
                r: Some(b.ratio()),
                e: None,
            },
            ModelSpec::Mixture(m) => Self {
                model: ModelKind::Mixture,
                dim: m.dim(),
                a: Some(m.separation()),
                r: None,
                e: Some(m.direction().to_vec()),
            },
        }
    }
}

pub fn parse_model_spec(text: &str, origin: &str) -> Result<ModelSpecJson> {
    serde_json::from_str(text).map_err(|e| Error::Input {
        path: origin.into(),
        message: e.to_string(),
    })
}

pub const SWEEP_COLUMNS: &str = "r,D,trials,p_hat,ci_low,ci_high,master_seed";

/// One row of the sweep table, as written to CSV and JSON.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SweepRecord {
    pub r: f64,
    #[serde(rename = "D")]
    pub d: usize,
    pub trials: u64,
    pub p_hat: f64,
    pub ci_low: f64,
    pub ci_high: f64,
    pub master_seed: u64,
}

pub fn sweep_records(table: &SweepTable) -> Vec<SweepRecord> {
    table
        .rows()
        .map(|row| SweepRecord {
            r: row.r,
            d: row.d,
            trials: row.estimate.trials,
            p_hat: row.estimate.p_hat,
            ci_low: row.estimate.ci_low,
            ci_high: row.estimate.ci_high,
            master_seed: table.master_seed,
        })
        .collect()
}

/// Rows in `(r, D)` order, `r` major.
pub fn write_sweep_csv<W: Write>(table: &SweepTable, mut out: W) -> Result<()> {
    writeln!(out, "{SWEEP_COLUMNS}").map_err(write_err)?;
    for rec in sweep_records(table) {
        writeln!(
            out,
            "{},{},{},{},{},{},{}",
            fmt_f64(rec.r),
            rec.d,
            rec.trials,
            fmt_f64(rec.p_hat),
            fmt_f64(rec.ci_low),
            fmt_f64(rec.ci_high),
            rec.master_seed
        )
        .map_err(write_err)?;
    }
    Ok(())
}

pub fn write_sweep_json<W: Write>(table: &SweepTable, mut out: W) -> Result<()> {
    serde_json::to_writer_pretty(&mut out, &sweep_records(table)).map_err(|e| write_err(e.into()))?;
    writeln!(out).map_err(write_err)
}

/// Parses a sweep CSV. Fields go through `str::parse`, which rounds
/// correctly, so values read back bit-identical.
pub fn read_sweep_csv<R: Read>(input: R, origin: &str) -> Result<Vec<SweepRecord>> {
    let bad = |message: String| Error::Input {
        path: origin.into(),
        message,
    };
    let mut reader = csv::Reader::from_reader(input);
    let header = reader.headers().map_err(|e| bad(e.to_string()))?;
    if header.iter().collect::<Vec<_>>().join(",") != SWEEP_COLUMNS {
        return Err(bad(format!("expected header `{SWEEP_COLUMNS}`")));
    }
    fn field<T: std::str::FromStr>(record: &csv::StringRecord, i: usize) -> std::result::Result<T, String> {
        let text = record.get(i).ok_or_else(|| format!("missing column {}", i + 1))?;
        text.trim().parse().map_err(|_| format!("cannot parse `{text}`"))
    }
    reader
        .records()
        .map(|record| {
            let record = record.map_err(|e| bad(e.to_string()))?;
            (|| {
                Ok(SweepRecord {
                    r: field(&record, 0)?,
                    d: field(&record, 1)?,
                    trials: field(&record, 2)?,
                    p_hat: field(&record, 3)?,
                    ci_low: field(&record, 4)?,
                    ci_high: field(&record, 5)?,
                    master_seed: field(&record, 6)?,
                })
            })()
            .map_err(bad)
        })
        .collect()
}
