//! Seeded generation of random MMV instances and the SNR bookkeeping that
//! calibrates the additive noise level.

use std::fmt;
use std::str::FromStr;

use nalgebra::DMatrix;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rand_distr::StandardNormal;

use crate::support::SupportSet;
use crate::{CoreError, Result};

/// How the sensing matrix entries were drawn. Generated ensembles are i.i.d.
/// Gaussian scaled by `1/√m`; the unit-mean variant has notoriously poor
/// restricted isometry behaviour and is used to stress greedy solvers.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Ensemble {
    ZeroMean,
    UnitMean,
    UserSupplied,
}

impl fmt::Display for Ensemble {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            Ensemble::ZeroMean => "zeromean",
            Ensemble::UnitMean => "unitmean",
            Ensemble::UserSupplied => "user",
        };
        f.write_str(s)
    }
}

impl FromStr for Ensemble {
    type Err = CoreError;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "zeromean" | "zero_mean" => Ok(Ensemble::ZeroMean),
            "unitmean" | "unit_mean" => Ok(Ensemble::UnitMean),
            "user" => Ok(Ensemble::UserSupplied),
            other => Err(CoreError::MetaParse(format!("unknown ensemble `{other}`"))),
        }
    }
}

/// An `m×n` sensing matrix, `m < n`, with a record of its ensemble.
#[derive(Debug, Clone, PartialEq)]
pub struct SensingMatrix {
    pub entries: DMatrix<f64>,
    pub ensemble: Ensemble,
}

impl SensingMatrix {
    /// Wraps a user-supplied matrix, enforcing `m < n` and finiteness.
    pub fn from_entries(entries: DMatrix<f64>) -> Result<Self> {
        if entries.nrows() >= entries.ncols() {
            return Err(CoreError::InvalidDimensions(format!(
                "sensing matrix needs m < n, got {}x{}",
                entries.nrows(),
                entries.ncols()
            )));
        }
        if !entries.iter().all(|v| v.is_finite()) {
            return Err(CoreError::NonFiniteEntries);
        }
        Ok(Self {
            entries,
            ensemble: Ensemble::UserSupplied,
        })
    }

    pub fn m(&self) -> usize {
        self.entries.nrows()
    }

    pub fn n(&self) -> usize {
        self.entries.ncols()
    }

    fn generate(m: usize, n: usize, ensemble: Ensemble, rng: &mut ChaCha8Rng) -> Self {
        let mean = match ensemble {
            Ensemble::UnitMean => 1.0,
            _ => 0.0,
        };
        let scale = 1.0 / (m as f64).sqrt();
        let mut entries = DMatrix::zeros(m, n);
        // Column-major fill order is part of the reproducibility contract.
        for j in 0..n {
            for i in 0..m {
                let g: f64 = rng.sample(StandardNormal);
                entries[(i, j)] = (g + mean) * scale;
            }
        }
        Self { entries, ensemble }
    }
}

/// An `n×r` signal whose nonzero rows are exactly those in `support`.
#[derive(Debug, Clone, PartialEq)]
pub struct JointSparseSignal {
    pub entries: DMatrix<f64>,
    pub support: SupportSet,
}

impl JointSparseSignal {
    pub fn n(&self) -> usize {
        self.entries.nrows()
    }

    pub fn r(&self) -> usize {
        self.entries.ncols()
    }

    /// `‖X‖₀`, the number of nonzero rows.
    pub fn row_sparsity(&self) -> usize {
        self.support.len()
    }

    pub fn frobenius_sq(&self) -> f64 {
        self.entries.iter().map(|v| v * v).sum()
    }
}

/// A generated problem: sensing matrix, signal, measurements `Y = A·X + N`,
/// and the seed that reproduces all of it.
#[derive(Debug, Clone, PartialEq)]
pub struct NoisyInstance {
    pub sensing: SensingMatrix,
    pub signal: JointSparseSignal,
    pub noise_std: f64,
    pub measurements: DMatrix<f64>,
    pub seed: u64,
}

impl NoisyInstance {
    pub fn support(&self) -> &SupportSet {
        &self.signal.support
    }

    pub fn m(&self) -> usize {
        self.sensing.m()
    }

    pub fn n(&self) -> usize {
        self.sensing.n()
    }

    pub fn k(&self) -> usize {
        self.signal.row_sparsity()
    }

    pub fn r(&self) -> usize {
        self.signal.r()
    }
}

/// Dimensions, noise level, ensemble, and seed of a generated instance.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct InstanceParams {
    pub m: usize,
    pub n: usize,
    pub k: usize,
    pub r: usize,
    /// `None` means noiseless (`Y = A·X` exactly).
    pub snr_db: Option<f64>,
    pub ensemble: Ensemble,
    pub seed: u64,
}

impl InstanceParams {
    fn validate(&self) -> Result<()> {
        if !(0 < self.k && self.k < self.m && self.m < self.n) {
            return Err(CoreError::InvalidDimensions(format!(
                "need 0 < k < m < n, got k={}, m={}, n={}",
                self.k, self.m, self.n
            )));
        }
        if self.r == 0 {
            return Err(CoreError::InvalidDimensions("need r >= 1".into()));
        }
        if self.ensemble == Ensemble::UserSupplied {
            return Err(CoreError::InvalidDimensions(
                "cannot generate a user-supplied ensemble".into(),
            ));
        }
        Ok(())
    }
}

/// Generates a seeded instance.
///
/// The draw order is fixed: sensing matrix entries (column-major), then a
/// uniform size-`k` support, then the nonzero rows of `X` (row by row,
/// ascending support index), then the noise. The noise standard deviation is
/// calibrated from the realized signal energy so that
/// `‖X‖_F² / (r·n·σ_w²)` equals the requested SNR exactly.
pub fn generate_instance(params: &InstanceParams) -> Result<NoisyInstance> {
    params.validate()?;
    let &InstanceParams {
        m,
        n,
        k,
        r,
        snr_db,
        ensemble,
        seed,
    } = params;

    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let sensing = SensingMatrix::generate(m, n, ensemble, &mut rng);

    let support: SupportSet = rand::seq::index::sample(&mut rng, n, k)
        .into_iter()
        .collect();

    let mut x = DMatrix::zeros(n, r);
    for row in support.iter() {
        for col in 0..r {
            x[(row, col)] = rng.sample(StandardNormal);
        }
    }
    let signal = JointSparseSignal {
        entries: x,
        support,
    };

    let noise_std = match snr_db {
        None => 0.0,
        Some(db) => {
            let fro_sq = signal.frobenius_sq();
            if fro_sq == 0.0 {
                return Err(CoreError::DegenerateSignal);
            }
            let snr = 10f64.powf(db / 10.0);
            (fro_sq / (r as f64 * n as f64 * snr)).sqrt()
        }
    };

    let mut measurements = &sensing.entries * &signal.entries;
    if noise_std > 0.0 {
        for j in 0..r {
            for i in 0..m {
                let g: f64 = rng.sample(StandardNormal);
                measurements[(i, j)] += noise_std * g;
            }
        }
    }

    Ok(NoisyInstance {
        sensing,
        signal,
        noise_std,
        measurements,
        seed,
    })
}

/// `SNR(X) = ‖X‖_F² / (r·n·σ_w²)` for an `n×r` signal.
pub fn snr_of(signal: &DMatrix<f64>, noise_std: f64) -> Result<f64> {
    if noise_std == 0.0 {
        return Err(CoreError::InfiniteSnr);
    }
    let (n, r) = signal.shape();
    let fro_sq: f64 = signal.iter().map(|v| v * v).sum();
    Ok(fro_sq / (r as f64 * n as f64 * noise_std * noise_std))
}
