//! Within/between-class scatter, the scatter clustering criterion, and
//! minimum thresholding error of projected values.

use alloc::vec;
use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::models::PointSet;
pub use crate::special::normal_cdf;
use crate::special::phi;

/// Relative margin (of the total scatter) by which between-class scatter must
/// exceed within-class scatter to count as a cluster. Absorbs rounding in
/// squared scales such as `sqrt(2)^2`.
pub const CLUSTER_MARGIN: f64 = 1e-12;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BinaryPartition {
    assignment: Vec<bool>,
    counts: (usize, usize),
}

impl BinaryPartition {
    /// `true` marks class 1.
    pub fn new(assignment: Vec<bool>) -> Self {
        let ones = assignment.iter().filter(|&&c| c).count();
        Self {
            counts: (assignment.len() - ones, ones),
            assignment,
        }
    }

    /// Partition of `n` points where bit `j` of `mask` puts point `j` in class 1.
    pub fn from_mask(n: usize, mask: u64) -> Self {
        Self::new((0..n).map(|j| (mask >> j) & 1 == 1).collect())
    }

    pub fn assignment(&self) -> &[bool] {
        &self.assignment
    }

    /// `(n0, n1)`.
    pub fn counts(&self) -> (usize, usize) {
        self.counts
    }

    pub fn len(&self) -> usize {
        self.assignment.len()
    }

    pub fn is_empty(&self) -> bool {
        self.assignment.is_empty()
    }

    pub fn members(&self, class: bool) -> Vec<usize> {
        self.assignment
            .iter()
            .enumerate()
            .filter(|&(_, &c)| c == class)
            .map(|(j, _)| j)
            .collect()
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct ScatterReport {
    pub within: f64,
    pub between: f64,
    pub total: f64,
    pub is_cluster: bool,
}

impl ScatterReport {
    /// Report with `total = within + between`.
    pub fn from_parts(within: f64, between: f64) -> Self {
        Self::with_total(within, between, within + between)
    }

    pub fn with_total(within: f64, between: f64, total: f64) -> Self {
        Self {
            within,
            between,
            total,
            is_cluster: exceeds(between, within, total),
        }
    }
}

#[inline]
fn exceeds(between: f64, within: f64, total: f64) -> bool {
    between > within + CLUSTER_MARGIN * total.abs()
}

#[derive(Debug, Clone, Copy, PartialEq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct ThresholdReport {
    pub threshold: f64,
    pub error: f64,
    pub analytic: Option<f64>,
}

/// Population scatter of `points` under `part`.
///
/// Class variances divide by the class size; weights are class fractions.
/// `total` is computed directly as the mean squared distance to the global
/// mean rather than as `within + between`.
pub fn empirical_scatter(points: &PointSet, part: &BinaryPartition) -> Result<ScatterReport> {
    let n = points.len();
    if part.len() != n {
        return Err(Error::Shape {
            expected: n,
            found: part.len(),
        });
    }
    let (n0, n1) = part.counts();
    if n0 == 0 || n1 == 0 {
        return Err(Error::DegeneratePartition);
    }
    let dim = points.dim();
    let mut mean = vec![0.0; dim];
    let mut class_mean = [vec![0.0; dim], vec![0.0; dim]];
    for (row, &c) in points.rows().zip(part.assignment()) {
        for i in 0..dim {
            mean[i] += row[i];
            class_mean[c as usize][i] += row[i];
        }
    }
    mean.iter_mut().for_each(|m| *m /= n as f64);
    class_mean[0].iter_mut().for_each(|m| *m /= n0 as f64);
    class_mean[1].iter_mut().for_each(|m| *m /= n1 as f64);

    let mut total = 0.0;
    let mut within = 0.0;
    for (row, &c) in points.rows().zip(part.assignment()) {
        let cm = &class_mean[c as usize];
        for i in 0..dim {
            let d = row[i] - mean[i];
            total += d * d;
            let w = row[i] - cm[i];
            within += w * w;
        }
    }
    let n_f = n as f64;
    let between = [n0, n1]
        .iter()
        .zip(&class_mean)
        .map(|(&nc, cm)| nc as f64 / n_f * squared_distance(cm, &mean))
        .sum();
    Ok(ScatterReport::with_total(within / n_f, between, total / n_f))
}

fn squared_distance(a: &[f64], b: &[f64]) -> f64 {
    a.iter().zip(b).map(|(x, y)| (x - y) * (x - y)).sum()
}

/// `Phi(-a |dot| / 2)`: the smallest error of a threshold classifier on a
/// projection of the two-Gaussian mixture, where `dot = e . v` for a unit `v`.
/// The sign of `a` is ignored.
pub fn analytic_min_error(a: f64, dot: f64) -> f64 {
    phi(-0.5 * a.abs() * dot.abs())
}

/// Smallest misclassification rate of a single threshold on `values`.
///
/// Candidates are the midpoints between consecutive distinct sorted values,
/// each tried with both polarities, plus the threshold at the maximum (every
/// point on one side), which makes the result at most `min(n0, n1) / n`.
/// Points strictly above the threshold fall on the right. Among equal error
/// counts the smallest threshold wins.
pub fn empirical_min_error(values: &[f64], labels: &[bool]) -> Result<ThresholdReport> {
    let n = values.len();
    if labels.len() != n {
        return Err(Error::Shape {
            expected: n,
            found: labels.len(),
        });
    }
    if n < 2 {
        return Err(Error::InvalidParameter {
            name: "values",
            reason: "need at least two values",
        });
    }
    if let Some(&bad) = values.iter().find(|x| !x.is_finite()) {
        return Err(Error::Domain(bad));
    }
    let n1 = labels.iter().filter(|&&y| y).count();
    let n0 = n - n1;
    if n0 == 0 || n1 == 0 {
        return Err(Error::DegenerateLabels);
    }

    let mut order: Vec<usize> = (0..n).collect();
    order.sort_unstable_by(|&i, &j| values[i].total_cmp(&values[j]));

    // Misclassified count when class 0 sits left and class 1 right; the other
    // polarity misclassifies the complement.
    let mut best_errors = n0.min(n1);
    let mut best_threshold = values[order[n - 1]];
    let mut found_split = false;
    let (mut left0, mut left1) = (0usize, 0usize);
    for w in 0..n - 1 {
        if labels[order[w]] {
            left1 += 1;
        } else {
            left0 += 1;
        }
        let lo = values[order[w]];
        let hi = values[order[w + 1]];
        if lo == hi {
            continue;
        }
        let wrong = left1 + (n0 - left0);
        let errors = wrong.min(n - wrong);
        if errors < best_errors || (errors == best_errors && !found_split) {
            let mut t = lo + (hi - lo) / 2.0;
            if t >= hi {
                t = lo;
            }
            best_errors = errors;
            best_threshold = t;
            found_split = true;
        }
    }
    Ok(ThresholdReport {
        threshold: best_threshold,
        error: best_errors as f64 / n as f64,
        analytic: None,
    })
}

fn check_split_shapes(v: &[f64], scales: &[f64]) -> Result<()> {
    if v.len() != scales.len() {
        return Err(Error::Shape {
            expected: scales.len(),
            found: v.len(),
        });
    }
    if v.is_empty() {
        return Err(Error::InvalidParameter {
            name: "dim",
            reason: "must be at least 1",
        });
    }
    Ok(())
}

/// Whether projecting onto `v` splits the box along latent axis `k`:
/// `sum_{i != k} (a_i v_i)^2 < (a_k v_k)^2`, strictly. Invariant under
/// rescaling `v` by any non-zero constant.
pub fn axis_split_condition(v: &[f64], scales: &[f64], k: usize) -> Result<bool> {
    check_split_shapes(v, scales)?;
    if k >= v.len() {
        return Err(Error::AxisOutOfRange { axis: k, dim: v.len() });
    }
    Ok(split_holds(v, scales, k))
}

#[inline]
fn split_holds(v: &[f64], scales: &[f64], k: usize) -> bool {
    let term = |i: usize| {
        let x = scales[i] * v[i];
        x * x
    };
    let rest: f64 = (0..v.len()).filter(|&i| i != k).map(term).sum();
    rest < term(k)
}

/// The axis satisfying [`axis_split_condition`], if any. At most one can: the
/// satisfying term exceeds the sum of all others, so it is the strict maximum.
pub fn find_separable_axis(v: &[f64], scales: &[f64]) -> Result<Option<usize>> {
    check_split_shapes(v, scales)?;
    Ok(separable_axis(v, scales))
}

#[inline]
pub(crate) fn separable_axis(v: &[f64], scales: &[f64]) -> Option<usize> {
    let mut best = 0;
    let mut best_term = f64::NEG_INFINITY;
    for (i, (&x, &a)) in v.iter().zip(scales).enumerate() {
        let t = (a * x) * (a * x);
        if t > best_term {
            best = i;
            best_term = t;
        }
    }
    split_holds(v, scales, best).then_some(best)
}
