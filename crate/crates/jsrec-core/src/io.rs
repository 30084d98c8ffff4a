//! Plain-text matrix CSV (row-major, `.` radix) and the flat `key=value`
//! metadata block describing a generated instance.

use std::fmt::Write as _;
use std::fs;
use std::path::Path;

use nalgebra::DMatrix;

use crate::instance::{Ensemble, InstanceParams, NoisyInstance};
use crate::{CoreError, Result};

/// Serializes a matrix as one CSV line per row. Floats are printed with the
/// shortest representation that round-trips exactly.
pub fn matrix_to_csv(mat: &DMatrix<f64>) -> String {
    let mut out = String::new();
    for i in 0..mat.nrows() {
        for j in 0..mat.ncols() {
            if j > 0 {
                out.push(',');
            }
            let _ = write!(out, "{}", mat[(i, j)]);
        }
        out.push('\n');
    }
    out
}

/// Parses a matrix from CSV text; all rows must have the same width.
pub fn matrix_from_csv(text: &str) -> Result<DMatrix<f64>> {
    let mut rows: Vec<Vec<f64>> = Vec::new();
    for (lineno, line) in text.lines().enumerate() {
        let line = line.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let row: Vec<f64> = line
            .split(',')
            .map(|cell| {
                cell.trim().parse::<f64>().map_err(|e| CoreError::CsvParse {
                    line: lineno + 1,
                    msg: format!("`{}`: {e}", cell.trim()),
                })
            })
            .collect::<Result<_>>()?;
        if let Some(first) = rows.first() {
            if row.len() != first.len() {
                return Err(CoreError::CsvParse {
                    line: lineno + 1,
                    msg: format!("expected {} columns, got {}", first.len(), row.len()),
                });
            }
        }
        rows.push(row);
    }
    if rows.is_empty() {
        return Err(CoreError::CsvParse {
            line: 0,
            msg: "no data rows".into(),
        });
    }
    let nrows = rows.len();
    let ncols = rows[0].len();
    Ok(DMatrix::from_fn(nrows, ncols, |i, j| rows[i][j]))
}

pub fn write_matrix_csv(path: &Path, mat: &DMatrix<f64>) -> Result<()> {
    fs::write(path, matrix_to_csv(mat))?;
    Ok(())
}

pub fn read_matrix_csv(path: &Path) -> Result<DMatrix<f64>> {
    matrix_from_csv(&fs::read_to_string(path)?)
}

/// Instance metadata as a flat `key=value` block. Together with the seed this
/// reconstructs a generated instance bit for bit.
pub fn params_to_key_values(p: &InstanceParams) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "m={}", p.m);
    let _ = writeln!(out, "n={}", p.n);
    let _ = writeln!(out, "k={}", p.k);
    let _ = writeln!(out, "r={}", p.r);
    match p.snr_db {
        Some(db) => {
            let _ = writeln!(out, "snr_db={db}");
        }
        None => {
            let _ = writeln!(out, "snr_db=none");
        }
    }
    let _ = writeln!(out, "ensemble={}", p.ensemble);
    let _ = writeln!(out, "seed={}", p.seed);
    out
}

/// Parses the `key=value` block produced by [`params_to_key_values`].
pub fn params_from_key_values(text: &str) -> Result<InstanceParams> {
    let mut m = None;
    let mut n = None;
    let mut k = None;
    let mut r = None;
    let mut snr_db: Option<Option<f64>> = None;
    let mut ensemble = None;
    let mut seed = None;
    for line in text.lines() {
        let line = line.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let (key, value) = line
            .split_once('=')
            .ok_or_else(|| CoreError::MetaParse(format!("missing `=` in `{line}`")))?;
        let value = value.trim();
        let parse_usize = |v: &str| {
            v.parse::<usize>()
                .map_err(|e| CoreError::MetaParse(format!("{key}: {e}")))
        };
        match key.trim() {
            "m" => m = Some(parse_usize(value)?),
            "n" => n = Some(parse_usize(value)?),
            "k" => k = Some(parse_usize(value)?),
            "r" => r = Some(parse_usize(value)?),
            "snr_db" => {
                snr_db = Some(if value == "none" {
                    None
                } else {
                    Some(
                        value
                            .parse::<f64>()
                            .map_err(|e| CoreError::MetaParse(format!("snr_db: {e}")))?,
                    )
                })
            }
            "ensemble" => ensemble = Some(value.parse::<Ensemble>()?),
            "seed" => {
                seed = Some(
                    value
                        .parse::<u64>()
                        .map_err(|e| CoreError::MetaParse(format!("seed: {e}")))?,
                )
            }
            other => return Err(CoreError::MetaParse(format!("unknown key `{other}`"))),
        }
    }
    let missing = |what: &str| CoreError::MetaParse(format!("missing key `{what}`"));
    Ok(InstanceParams {
        m: m.ok_or_else(|| missing("m"))?,
        n: n.ok_or_else(|| missing("n"))?,
        k: k.ok_or_else(|| missing("k"))?,
        r: r.ok_or_else(|| missing("r"))?,
        snr_db: snr_db.ok_or_else(|| missing("snr_db"))?,
        ensemble: ensemble.ok_or_else(|| missing("ensemble"))?,
        seed: seed.ok_or_else(|| missing("seed"))?,
    })
}

impl NoisyInstance {
    pub fn params(&self) -> InstanceParams {
        InstanceParams {
            m: self.m(),
            n: self.n(),
            k: self.k(),
            r: self.r(),
            snr_db: if self.noise_std == 0.0 {
                None
            } else {
                Some(10.0 * (self.signal.frobenius_sq()
                    / (self.r() as f64 * self.n() as f64 * self.noise_std * self.noise_std))
                    .log10())
            },
            ensemble: self.sensing.ensemble,
            seed: self.seed,
        }
    }

    /// Writes `A.csv`, `X.csv`, `Y.csv`, and `meta.txt` into `dir`.
    pub fn save_to_dir(&self, dir: &Path) -> Result<()> {
        fs::create_dir_all(dir)?;
        write_matrix_csv(&dir.join("A.csv"), &self.sensing.entries)?;
        write_matrix_csv(&dir.join("X.csv"), &self.signal.entries)?;
        write_matrix_csv(&dir.join("Y.csv"), &self.measurements)?;
        fs::write(dir.join("meta.txt"), params_to_key_values(&self.params()))?;
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::instance::generate_instance;

    #[test]
    fn matrix_csv_round_trips_exactly() {
        let mat = DMatrix::from_row_slice(
            2,
            3,
            &[1.5, -2.25, 1.0 / 3.0, 1e-300, 0.1 + 0.2, -0.0],
        );
        let back = matrix_from_csv(&matrix_to_csv(&mat)).unwrap();
        assert_eq!(mat, back);
    }

    #[test]
    fn ragged_rows_rejected() {
        assert!(matrix_from_csv("1,2\n3\n").is_err());
        assert!(matrix_from_csv("").is_err());
    }

    #[test]
    fn metadata_round_trips() {
        let p = InstanceParams {
            m: 40,
            n: 100,
            k: 5,
            r: 9,
            snr_db: Some(40.0),
            ensemble: Ensemble::UnitMean,
            seed: 123456789,
        };
        let text = params_to_key_values(&p);
        assert_eq!(params_from_key_values(&text).unwrap(), p);

        let noiseless = InstanceParams { snr_db: None, ..p };
        let text = params_to_key_values(&noiseless);
        assert_eq!(params_from_key_values(&text).unwrap(), noiseless);
    }

    #[test]
    fn saved_instance_regenerates_from_meta() {
        let p = InstanceParams {
            m: 10,
            n: 24,
            k: 4,
            r: 3,
            snr_db: Some(20.0),
            ensemble: Ensemble::ZeroMean,
            seed: 77,
        };
        let inst = generate_instance(&p).unwrap();
        let meta = params_to_key_values(&inst.params());
        let parsed = params_from_key_values(&meta).unwrap();
        // snr_db recomputation must agree with the request
        assert!((parsed.snr_db.unwrap() - 20.0).abs() < 1e-9);
        let again = generate_instance(&InstanceParams {
            snr_db: Some(20.0),
            ..parsed
        })
        .unwrap();
        assert_eq!(again.measurements, inst.measurements);
    }
}
