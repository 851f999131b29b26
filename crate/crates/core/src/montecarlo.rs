//! Monte Carlo estimates of separation probability, distributional
//! diagnostics, and exhaustive cluster search on small point sets.
//!
//! Trial `t` of an estimate seeded with `SeedSpec(m, s)` draws from substream
//! `SeedSpec(m, s + t)`, so any split of the trial range across workers gives
//! the same integer hit count.

use alloc::vec;
use alloc::vec::Vec;
use core::ops::Range;

use crate::cluster::{analytic_min_error, separable_axis, BinaryPartition, ScatterReport};
use crate::error::{Error, Result};
use crate::models::{whiten, BoxSpec, PointSet, RatioRange};
use crate::projection::random_unit_vector;
use crate::rng::SeedSpec;
use crate::special::phi;

/// Two-sided 95% normal quantile.
pub const Z_95: f64 = 1.959_963_984_540_054;

/// Sweep cells are spaced this many substreams apart, which also caps the
/// trial count per cell.
pub const CELL_STREAM_STRIDE: u64 = 1 << 40;

pub const DEFAULT_TRIALS: u64 = 100_000;

pub const DEFAULT_MASTER_SEED: u64 = 20_190_101;

/// Point cap for [`brute_force_cluster_search`].
pub const MAX_BRUTE_FORCE_POINTS: usize = 16;

/// Wilson score interval for `successes` out of `trials`.
pub fn wilson_interval(successes: u64, trials: u64, z: f64) -> (f64, f64) {
    let n = trials as f64;
    let p = successes as f64 / n;
    let z2 = z * z;
    let denom = 1.0 + z2 / n;
    let center = (p + z2 / (2.0 * n)) / denom;
    let half = z / denom * libm::sqrt(p * (1.0 - p) / n + z2 / (4.0 * n * n));
    let low = (center - half).clamp(0.0, 1.0).min(p);
    let high = (center + half).clamp(0.0, 1.0).max(p);
    (low, high)
}

#[derive(Debug, Clone, Copy, PartialEq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct EstimateWithCI {
    pub p_hat: f64,
    pub successes: u64,
    pub trials: u64,
    pub ci_low: f64,
    pub ci_high: f64,
}

impl EstimateWithCI {
    pub fn from_counts(successes: u64, trials: u64) -> Result<Self> {
        if trials == 0 {
            return Err(Error::InvalidParameter {
                name: "trials",
                reason: "must be at least 1",
            });
        }
        if successes > trials {
            return Err(Error::InvalidParameter {
                name: "successes",
                reason: "cannot exceed trials",
            });
        }
        let (ci_low, ci_high) = wilson_interval(successes, trials, Z_95);
        Ok(Self {
            p_hat: successes as f64 / trials as f64,
            successes,
            trials,
            ci_low,
            ci_high,
        })
    }

    /// Binomial standard error `sqrt(p (1 - p) / n)` at the point estimate.
    pub fn standard_error(&self) -> f64 {
        libm::sqrt(self.p_hat * (1.0 - self.p_hat) / self.trials as f64)
    }
}

fn check_trials(trials: u64) -> Result<()> {
    if trials == 0 {
        return Err(Error::InvalidParameter {
            name: "trials",
            reason: "must be at least 1",
        });
    }
    if trials > CELL_STREAM_STRIDE {
        return Err(Error::Capacity {
            what: "trials per estimate",
            limit: CELL_STREAM_STRIDE,
            requested: trials,
        });
    }
    Ok(())
}

/// Number of trials in `range` whose Gaussian direction splits `spec` along
/// some latent axis. Trial `t` uses substream `seed.stream_index + t`.
pub fn count_separations(spec: &BoxSpec, seed: SeedSpec, range: Range<u64>) -> Result<u64> {
    if seed.offset(range.end).is_none() {
        return Err(Error::Capacity {
            what: "substream index",
            limit: u64::MAX - seed.stream_index,
            requested: range.end,
        });
    }
    let scales = spec.scales();
    let mut v = vec![0.0; spec.dim()];
    let mut hits = 0;
    for t in range {
        let mut rng = SeedSpec::new(seed.master_seed, seed.stream_index + t).generator();
        rng.fill_standard_normal(&mut v);
        if separable_axis(&v, scales).is_some() {
            hits += 1;
        }
    }
    Ok(hits)
}

/// Fraction of raw Gaussian directions `v` for which some axis `k` satisfies
/// `sum_{i != k} (a_i v_i)^2 < (a_k v_k)^2`. The condition is invariant under
/// rescaling `v`, so directions are not normalized.
pub fn estimate_separation_probability(spec: &BoxSpec, trials: u64, seed: SeedSpec) -> Result<EstimateWithCI> {
    check_trials(trials)?;
    let hits = count_separations(spec, seed, 0..trials)?;
    EstimateWithCI::from_counts(hits, trials)
}

/// First substream of sweep cell `cell` (row-major over `(r, D)`).
pub fn cell_seed(master_seed: u64, cell: usize) -> Result<SeedSpec> {
    (cell as u64)
        .checked_mul(CELL_STREAM_STRIDE)
        .map(|stream| SeedSpec::new(master_seed, stream))
        .ok_or(Error::Capacity {
            what: "sweep cells",
            limit: u64::MAX / CELL_STREAM_STRIDE,
            requested: cell as u64,
        })
}

/// The default ratio grid 1.00, 1.05, .., 2.00.
pub fn default_r_grid() -> Vec<f64> {
    (0..=20).map(|i| (100 + 5 * i) as f64 / 100.0).collect()
}

pub fn default_d_grid() -> Vec<usize> {
    vec![3, 10, 30, 100, 300]
}

#[derive(Debug, Clone, PartialEq)]
pub struct SweepPlan {
    pub r_values: Vec<f64>,
    pub d_values: Vec<usize>,
    pub trials: u64,
    pub master_seed: u64,
    pub ratio_range: RatioRange,
}

/// One validated sweep cell.
#[derive(Debug, Clone, PartialEq)]
pub struct SweepCell {
    pub index: usize,
    pub spec: BoxSpec,
    pub seed: SeedSpec,
}

impl Default for SweepPlan {
    fn default() -> Self {
        Self {
            r_values: default_r_grid(),
            d_values: default_d_grid(),
            trials: DEFAULT_TRIALS,
            master_seed: DEFAULT_MASTER_SEED,
            ratio_range: RatioRange::Restricted,
        }
    }
}

impl SweepPlan {
    pub fn new(r_values: Vec<f64>, d_values: Vec<usize>, trials: u64, master_seed: u64) -> Self {
        Self {
            r_values,
            d_values,
            trials,
            master_seed,
            ratio_range: RatioRange::Restricted,
        }
    }

    /// Cells in row-major `(r, D)` order.
    pub fn cells(&self) -> Result<Vec<SweepCell>> {
        if self.r_values.is_empty() || self.d_values.is_empty() {
            return Err(Error::InvalidParameter {
                name: "grid",
                reason: "ratio and dimension grids must be non-empty",
            });
        }
        check_trials(self.trials)?;
        let mut cells = Vec::with_capacity(self.r_values.len() * self.d_values.len());
        for &r in &self.r_values {
            for &d in &self.d_values {
                let index = cells.len();
                cells.push(SweepCell {
                    index,
                    spec: BoxSpec::with_range(d, r, self.ratio_range)?,
                    seed: cell_seed(self.master_seed, index)?,
                });
            }
        }
        Ok(cells)
    }

    /// Assembles a table from per-cell hit counts in cell order.
    pub fn table(&self, hits: &[u64]) -> Result<SweepTable> {
        let cells = self.r_values.len() * self.d_values.len();
        if hits.len() != cells {
            return Err(Error::Shape {
                expected: cells,
                found: hits.len(),
            });
        }
        let estimates = hits
            .iter()
            .map(|&h| EstimateWithCI::from_counts(h, self.trials))
            .collect::<Result<Vec<_>>>()?;
        Ok(SweepTable {
            r_values: self.r_values.clone(),
            d_values: self.d_values.clone(),
            estimates,
            master_seed: self.master_seed,
            trials_per_cell: self.trials,
        })
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct SweepTable {
    pub r_values: Vec<f64>,
    pub d_values: Vec<usize>,
    /// Row-major over `(r, D)`.
    pub estimates: Vec<EstimateWithCI>,
    pub master_seed: u64,
    pub trials_per_cell: u64,
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SweepRow {
    pub r: f64,
    pub d: usize,
    pub estimate: EstimateWithCI,
}

impl SweepTable {
    pub fn get(&self, r_index: usize, d_index: usize) -> &EstimateWithCI {
        &self.estimates[r_index * self.d_values.len() + d_index]
    }

    /// Estimate for the exact grid values `(r, d)`.
    pub fn lookup(&self, r: f64, d: usize) -> Option<&EstimateWithCI> {
        let ri = self.r_values.iter().position(|&x| x == r)?;
        let di = self.d_values.iter().position(|&x| x == d)?;
        Some(self.get(ri, di))
    }

    pub fn rows(&self) -> impl Iterator<Item = SweepRow> + '_ {
        let nd = self.d_values.len();
        self.estimates.iter().enumerate().map(move |(i, e)| SweepRow {
            r: self.r_values[i / nd],
            d: self.d_values[i % nd],
            estimate: *e,
        })
    }
}

/// Sequential sweep; cell `i` uses substreams starting at [`cell_seed`].
pub fn sweep(plan: &SweepPlan) -> Result<SweepTable> {
    let hits = plan
        .cells()?
        .iter()
        .map(|cell| count_separations(&cell.spec, cell.seed, 0..plan.trials))
        .collect::<Result<Vec<_>>>()?;
    plan.table(&hits)
}

/// Two-sided Kolmogorov-Smirnov distance between the empirical CDF of
/// `values` and `cdf`. Sorts `values` in place.
pub fn ks_statistic(values: &mut [f64], cdf: impl Fn(f64) -> f64) -> Result<f64> {
    if values.is_empty() {
        return Err(Error::InvalidParameter {
            name: "values",
            reason: "need at least one sample",
        });
    }
    if let Some(&bad) = values.iter().find(|x| !x.is_finite()) {
        return Err(Error::Domain(bad));
    }
    values.sort_unstable_by(f64::total_cmp);
    let n = values.len() as f64;
    let mut d: f64 = 0.0;
    for (i, &x) in values.iter().enumerate() {
        let f = cdf(x);
        d = d.max((i + 1) as f64 / n - f).max(f - i as f64 / n);
    }
    Ok(d)
}

/// Asymptotic KS critical value `sqrt(-ln(alpha / 2) / 2) / sqrt(n)`.
pub fn ks_critical_value(alpha: f64, samples: usize) -> f64 {
    libm::sqrt(-libm::log(alpha / 2.0) / 2.0) / libm::sqrt(samples as f64)
}

/// KS distance between `sqrt(dim) (v . e_1)` over `samples` uniform unit
/// vectors and the standard normal. Sample `s` uses substream
/// `seed.stream_index + s`.
pub fn lemma1_diagnostic(dim: usize, samples: usize, seed: SeedSpec) -> Result<f64> {
    if samples < 100 {
        return Err(Error::InvalidParameter {
            name: "samples",
            reason: "need at least 100 samples",
        });
    }
    let root = libm::sqrt(dim as f64);
    let mut values = (0..samples as u64)
        .map(|s| {
            let seed = seed.offset(s).ok_or(Error::Capacity {
                what: "substream index",
                limit: u64::MAX,
                requested: s,
            })?;
            Ok(root * random_unit_vector(dim, seed)?.coords()[0])
        })
        .collect::<Result<Vec<_>>>()?;
    ks_statistic(&mut values, phi)
}

#[derive(Debug, Clone, Copy, PartialEq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct ErrorDistributionSummary {
    pub trials: usize,
    pub median: f64,
    pub fraction_below_0_1: f64,
    pub fraction_above_0_4: f64,
}

/// Distribution of the mixture's minimum thresholding error
/// `E = Phi(-a |v . e_1| / 2)` over uniform random directions.
pub fn error_distribution_diagnostic(
    dim: usize,
    a: f64,
    trials: usize,
    seed: SeedSpec,
) -> Result<ErrorDistributionSummary> {
    if trials < 100 {
        return Err(Error::InvalidParameter {
            name: "trials",
            reason: "need at least 100 trials",
        });
    }
    if !(a.is_finite() && a >= 0.0) {
        return Err(Error::InvalidParameter {
            name: "a",
            reason: "must be a non-negative finite number",
        });
    }
    let mut errors = (0..trials as u64)
        .map(|t| {
            let seed = seed.offset(t).ok_or(Error::Capacity {
                what: "substream index",
                limit: u64::MAX,
                requested: t,
            })?;
            Ok(analytic_min_error(a, random_unit_vector(dim, seed)?.coords()[0]))
        })
        .collect::<Result<Vec<_>>>()?;
    errors.sort_unstable_by(f64::total_cmp);
    let n = errors.len();
    let median = if n % 2 == 1 {
        errors[n / 2]
    } else {
        0.5 * (errors[n / 2 - 1] + errors[n / 2])
    };
    let frac = |count: usize| count as f64 / n as f64;
    Ok(ErrorDistributionSummary {
        trials,
        median,
        fraction_below_0_1: frac(errors.iter().filter(|&&e| e < 0.1).count()),
        fraction_above_0_4: frac(errors.iter().filter(|&&e| e > 0.4).count()),
    })
}

#[derive(Debug, Clone, PartialEq)]
pub struct ClusterWitness {
    pub partition: BinaryPartition,
    pub report: ScatterReport,
}

/// Exhaustive search over all `2^(n-1) - 1` bipartitions of at most 16
/// points for one whose between-class scatter exceeds its within-class
/// scatter. Returns the one with the largest margin (first in mask order on
/// ties), with point 0 always in class 0.
///
/// Uses `between = n0 n1 / n^2 |mu_0 - mu_1|^2` and `within = total - between`.
pub fn brute_force_cluster_search(points: &PointSet) -> Result<Option<ClusterWitness>> {
    let n = points.len();
    if n > MAX_BRUTE_FORCE_POINTS {
        return Err(Error::Capacity {
            what: "points for exhaustive cluster search",
            limit: MAX_BRUTE_FORCE_POINTS as u64,
            requested: n as u64,
        });
    }
    let dim = points.dim();
    let n_f = n as f64;
    let mut sum = vec![0.0; dim];
    for row in points.rows() {
        sum.iter_mut().zip(row).for_each(|(s, x)| *s += x);
    }
    let mean: Vec<f64> = sum.iter().map(|s| s / n_f).collect();
    let total = points
        .rows()
        .map(|row| row.iter().zip(&mean).map(|(x, m)| (x - m) * (x - m)).sum::<f64>())
        .sum::<f64>()
        / n_f;

    let mut best: Option<(f64, u64, ScatterReport)> = None;
    let mut sum1 = vec![0.0; dim];
    for mask in 1..(1u64 << (n - 1)) {
        // Points 1..n carry the mask bits; point 0 stays in class 0.
        sum1.iter_mut().for_each(|s| *s = 0.0);
        let mut n1 = 0usize;
        for j in 1..n {
            if (mask >> (j - 1)) & 1 == 1 {
                n1 += 1;
                sum1.iter_mut().zip(points.row(j)).for_each(|(s, x)| *s += x);
            }
        }
        let n0 = n - n1;
        let gap: f64 = (0..dim)
            .map(|i| {
                let d = sum1[i] / n1 as f64 - (sum[i] - sum1[i]) / n0 as f64;
                d * d
            })
            .sum();
        let between = n0 as f64 * n1 as f64 / (n_f * n_f) * gap;
        let report = ScatterReport::with_total(total - between, between, total);
        if report.is_cluster {
            let margin = report.between - report.within;
            if best.is_none_or(|(m, _, _)| margin > m) {
                best = Some((margin, mask, report));
            }
        }
    }
    Ok(best.map(|(_, mask, report)| ClusterWitness {
        partition: BinaryPartition::from_mask(n, mask << 1),
        report,
    }))
}

#[derive(Debug, Clone, Copy, PartialEq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct WhiteningComparison {
    pub original: EstimateWithCI,
    pub whitened: EstimateWithCI,
}

/// Separation probability of the box and of its whitened version, using the
/// same Gaussian directions for both.
pub fn whitening_comparison(spec: &BoxSpec, trials: u64, seed: SeedSpec) -> Result<WhiteningComparison> {
    Ok(WhiteningComparison {
        original: estimate_separation_probability(spec, trials, seed)?,
        whitened: estimate_separation_probability(&whiten(spec), trials, seed)?,
    })
}
