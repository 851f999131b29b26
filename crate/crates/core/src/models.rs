//! Generative models: the two-Gaussian mixture and the (geometric) box,
//! whose `r = 1` case is the Bernoulli hypercube.

use alloc::vec;
use alloc::vec::Vec;

use crate::cluster::ScatterReport;
use crate::error::{Error, Result};
use crate::rng::SeedSpec;

/// Largest dimension for which [`enumerate_box_vertices`] materialises the
/// full vertex set (2^24 rows).
pub const MAX_ENUMERATION_DIM: usize = 24;

const UNIT_TOLERANCE: f64 = 1e-12;

/// Which box ratios are accepted.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum RatioRange {
    /// `1 <= r <= 2`, the range for which the box has no cluster.
    #[default]
    Restricted,
    /// Any positive ratio.
    Unrestricted,
}

impl RatioRange {
    fn check(self, ratio: f64) -> Result<()> {
        if !(ratio.is_finite() && ratio > 0.0) {
            return Err(Error::InvalidParameter {
                name: "ratio",
                reason: "must be a positive finite number",
            });
        }
        if self == RatioRange::Restricted && !(1.0..=2.0).contains(&ratio) {
            return Err(Error::RatioOutOfRange { ratio });
        }
        Ok(())
    }
}

fn check_dim(dim: usize) -> Result<()> {
    if dim == 0 {
        return Err(Error::InvalidParameter {
            name: "dim",
            reason: "must be at least 1",
        });
    }
    Ok(())
}

/// Edge lengths `a_1..a_D` of the geometric box: `a_1 = 1` and
/// `a_k = ratio^((k - 2) / 2)` for `k >= 2`.
pub fn box_scales(dim: usize, ratio: f64, range: RatioRange) -> Result<Vec<f64>> {
    check_dim(dim)?;
    range.check(ratio)?;
    Ok((0..dim)
        .map(|i| {
            if i == 0 {
                1.0
            } else {
                libm::pow(ratio, (i - 1) as f64 / 2.0)
            }
        })
        .collect())
}

// Squared edge lengths as running products, so that r = 2 gives exact powers
// of two and the boundary identity sum_{i<D} a_i^2 = a_D^2 holds exactly.
fn squared_scales(dim: usize, ratio: f64) -> Vec<f64> {
    let mut out = Vec::with_capacity(dim);
    for i in 0..dim {
        let value = if i <= 1 { 1.0 } else { out[i - 1] * ratio };
        out.push(value);
    }
    out
}

#[derive(Debug, Clone, PartialEq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct GaussianMixtureSpec {
    dim: usize,
    separation: f64,
    direction: Vec<f64>,
}

impl GaussianMixtureSpec {
    /// Mixture with the mean offset along the first axis.
    pub fn new(dim: usize, separation: f64) -> Result<Self> {
        check_dim(dim)?;
        let mut direction = vec![0.0; dim];
        direction[0] = 1.0;
        Self::with_direction(separation, direction)
    }

    /// `direction` must already have unit norm (within 1e-12).
    pub fn with_direction(separation: f64, direction: Vec<f64>) -> Result<Self> {
        check_dim(direction.len())?;
        if !(separation.is_finite() && separation >= 0.0) {
            return Err(Error::InvalidParameter {
                name: "separation",
                reason: "must be a non-negative finite number",
            });
        }
        let norm = libm::sqrt(direction.iter().map(|x| x * x).sum());
        if norm.is_nan() || (norm - 1.0).abs() > UNIT_TOLERANCE {
            return Err(Error::InvalidParameter {
                name: "direction",
                reason: "must be a unit vector",
            });
        }
        Ok(Self {
            dim: direction.len(),
            separation,
            direction,
        })
    }

    /// Like [`with_direction`](Self::with_direction) but rescales `direction`
    /// to unit length first.
    pub fn with_normalized_direction(separation: f64, mut direction: Vec<f64>) -> Result<Self> {
        let norm = libm::sqrt(direction.iter().map(|x| x * x).sum());
        if !(norm.is_finite() && norm > 0.0) {
            return Err(Error::InvalidParameter {
                name: "direction",
                reason: "must be a non-zero finite vector",
            });
        }
        direction.iter_mut().for_each(|x| *x /= norm);
        Self::with_direction(separation, direction)
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn separation(&self) -> f64 {
        self.separation
    }

    pub fn direction(&self) -> &[f64] {
        &self.direction
    }
}

#[derive(Debug, Clone, PartialEq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize))]
pub struct BoxSpec {
    dim: usize,
    ratio: f64,
    scales: Vec<f64>,
    #[cfg_attr(feature = "serde", serde(skip))]
    squared: Vec<f64>,
}

impl BoxSpec {
    /// Box with `1 <= ratio <= 2`.
    pub fn new(dim: usize, ratio: f64) -> Result<Self> {
        Self::with_range(dim, ratio, RatioRange::Restricted)
    }

    pub fn with_range(dim: usize, ratio: f64, range: RatioRange) -> Result<Self> {
        let scales = box_scales(dim, ratio, range)?;
        Ok(Self {
            dim,
            ratio,
            squared: squared_scales(dim, ratio),
            scales,
        })
    }

    /// The unit hypercube (`ratio = 1`).
    pub fn hypercube(dim: usize) -> Result<Self> {
        Self::new(dim, 1.0)
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn ratio(&self) -> f64 {
        self.ratio
    }

    pub fn scales(&self) -> &[f64] {
        &self.scales
    }

    pub fn squared_scales(&self) -> &[f64] {
        &self.squared
    }
}

#[derive(Debug, Clone, PartialEq)]
pub enum ModelSpec {
    Mixture(GaussianMixtureSpec),
    Box(BoxSpec),
}

impl ModelSpec {
    pub fn dim(&self) -> usize {
        match self {
            ModelSpec::Mixture(m) => m.dim(),
            ModelSpec::Box(b) => b.dim(),
        }
    }

    /// Number of latent Bernoulli labels per point.
    pub fn label_dim(&self) -> usize {
        match self {
            ModelSpec::Mixture(_) => 1,
            ModelSpec::Box(b) => b.dim(),
        }
    }
}

impl From<BoxSpec> for ModelSpec {
    fn from(spec: BoxSpec) -> Self {
        ModelSpec::Box(spec)
    }
}

impl From<GaussianMixtureSpec> for ModelSpec {
    fn from(spec: GaussianMixtureSpec) -> Self {
        ModelSpec::Mixture(spec)
    }
}

/// `n` points in `R^dim`, stored row-major, with optional latent labels.
///
/// Box models carry one label per axis; the mixture carries a single label
/// column (its component indicator).
#[derive(Debug, Clone, PartialEq)]
pub struct PointSet {
    dim: usize,
    coords: Vec<f64>,
    label_dim: usize,
    labels: Option<Vec<u8>>,
    model: Option<ModelSpec>,
}

impl PointSet {
    /// Builds a point set from row-major coordinates and optional row-major
    /// labels with `label_dim` columns.
    pub fn from_rows(dim: usize, coords: Vec<f64>, labels: Option<(usize, Vec<u8>)>) -> Result<Self> {
        check_dim(dim)?;
        if coords.is_empty() {
            return Err(Error::InvalidParameter {
                name: "points",
                reason: "a point set needs at least one point",
            });
        }
        if !coords.len().is_multiple_of(dim) {
            return Err(Error::Shape {
                expected: dim,
                found: coords.len() % dim,
            });
        }
        let n = coords.len() / dim;
        let (label_dim, labels) = match labels {
            None => (0, None),
            Some((label_dim, labels)) => {
                check_dim(label_dim)?;
                if labels.len() != n * label_dim {
                    return Err(Error::Shape {
                        expected: n * label_dim,
                        found: labels.len(),
                    });
                }
                if labels.iter().any(|&y| y > 1) {
                    return Err(Error::InvalidParameter {
                        name: "labels",
                        reason: "latent labels must be 0 or 1",
                    });
                }
                (label_dim, Some(labels))
            }
        };
        Ok(Self {
            dim,
            coords,
            label_dim,
            labels,
            model: None,
        })
    }

    pub fn with_model(mut self, model: ModelSpec) -> Self {
        self.model = Some(model);
        self
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn len(&self) -> usize {
        self.coords.len() / self.dim
    }

    pub fn is_empty(&self) -> bool {
        self.coords.is_empty()
    }

    pub fn coords(&self) -> &[f64] {
        &self.coords
    }

    pub fn row(&self, j: usize) -> &[f64] {
        &self.coords[j * self.dim..(j + 1) * self.dim]
    }

    pub fn rows(&self) -> impl ExactSizeIterator<Item = &[f64]> + '_ {
        self.coords.chunks_exact(self.dim)
    }

    /// Number of label columns (0 when unlabelled).
    pub fn label_dim(&self) -> usize {
        self.label_dim
    }

    pub fn has_labels(&self) -> bool {
        self.labels.is_some()
    }

    pub fn labels(&self) -> Option<&[u8]> {
        self.labels.as_deref()
    }

    pub fn label_row(&self, j: usize) -> Option<&[u8]> {
        self.labels
            .as_ref()
            .map(|l| &l[j * self.label_dim..(j + 1) * self.label_dim])
    }

    /// Column `axis` of the latent labels as booleans.
    pub fn label_column(&self, axis: usize) -> Result<Vec<bool>> {
        let labels = self.labels.as_ref().ok_or(Error::InvalidParameter {
            name: "labels",
            reason: "point set has no latent labels",
        })?;
        if axis >= self.label_dim {
            return Err(Error::AxisOutOfRange {
                axis,
                dim: self.label_dim,
            });
        }
        Ok(labels.chunks_exact(self.label_dim).map(|row| row[axis] == 1).collect())
    }

    pub fn model(&self) -> Option<&ModelSpec> {
        self.model.as_ref()
    }
}

/// Every vertex `(a_1 Y_1, .., a_D Y_D)`, `Y` in `{0,1}^D`, in binary-counter
/// order with axis 1 as the least significant bit.
pub fn enumerate_box_vertices(spec: &BoxSpec) -> Result<PointSet> {
    let dim = spec.dim();
    if dim > MAX_ENUMERATION_DIM {
        return Err(Error::Capacity {
            what: "box vertex enumeration dimension",
            limit: MAX_ENUMERATION_DIM as u64,
            requested: dim as u64,
        });
    }
    let count = 1usize << dim;
    let mut coords = Vec::with_capacity(count * dim);
    let mut labels = Vec::with_capacity(count * dim);
    for code in 0..count {
        for (i, &scale) in spec.scales().iter().enumerate() {
            let y = ((code >> i) & 1) as u8;
            labels.push(y);
            coords.push(if y == 1 { scale } else { 0.0 });
        }
    }
    Ok(PointSet::from_rows(dim, coords, Some((dim, labels)))?.with_model(spec.clone().into()))
}

fn check_count(n: usize) -> Result<()> {
    if n == 0 {
        return Err(Error::InvalidParameter {
            name: "n",
            reason: "must be at least 1",
        });
    }
    Ok(())
}

/// `n` independent draws with `Y_i ~ Bernoulli(1/2)` per axis.
///
/// Labels are taken one bit at a time from successive `u64` words of the
/// seed's stream, most significant bit first.
pub fn sample_box(spec: &BoxSpec, n: usize, seed: SeedSpec) -> Result<PointSet> {
    check_count(n)?;
    let dim = spec.dim();
    let mut rng = seed.generator();
    let mut coords = Vec::with_capacity(n * dim);
    let mut labels = Vec::with_capacity(n * dim);
    let mut word = 0u64;
    let mut bits_left = 0u32;
    for _ in 0..n {
        for &scale in spec.scales() {
            if bits_left == 0 {
                word = rng.next_u64();
                bits_left = 64;
            }
            let y = (word >> 63) as u8;
            word <<= 1;
            bits_left -= 1;
            labels.push(y);
            coords.push(if y == 1 { scale } else { 0.0 });
        }
    }
    Ok(PointSet::from_rows(dim, coords, Some((dim, labels)))?.with_model(spec.clone().into()))
}

/// `n` draws of `X = N_D + a e Y` with `Y ~ Bernoulli(1/2)`.
///
/// Per point the stream yields one `u64` for the label (its top bit) followed
/// by `D` normal variates.
pub fn sample_gaussian_mixture(spec: &GaussianMixtureSpec, n: usize, seed: SeedSpec) -> Result<PointSet> {
    check_count(n)?;
    let dim = spec.dim();
    let mut rng = seed.generator();
    let mut coords = vec![0.0; n * dim];
    let mut labels = Vec::with_capacity(n);
    for row in coords.chunks_exact_mut(dim) {
        let y = (rng.next_u64() >> 63) as u8;
        labels.push(y);
        rng.fill_standard_normal(row);
        if y == 1 {
            for (x, e) in row.iter_mut().zip(spec.direction()) {
                *x += spec.separation() * e;
            }
        }
    }
    Ok(PointSet::from_rows(dim, coords, Some((1, labels)))?.with_model(spec.clone().into()))
}

/// Population scatter of the split on one latent label.
///
/// For the mixture the only label is axis 0 and the split gives within `D`
/// and between `a^2 / 4`. For the box, splitting on axis `k` gives within
/// `sum_{i != k} a_i^2 / 4` and between `a_k^2 / 4`.
pub fn distributional_scatter(spec: &ModelSpec, axis: usize) -> Result<ScatterReport> {
    match spec {
        ModelSpec::Mixture(m) => {
            if axis != 0 {
                return Err(Error::AxisOutOfRange { axis, dim: 1 });
            }
            let a = m.separation();
            Ok(ScatterReport::from_parts(m.dim() as f64, a * a / 4.0))
        }
        ModelSpec::Box(b) => {
            if axis >= b.dim() {
                return Err(Error::AxisOutOfRange { axis, dim: b.dim() });
            }
            let sq = b.squared_scales();
            let others: f64 = sq.iter().enumerate().filter(|&(i, _)| i != axis).map(|(_, s)| s).sum();
            Ok(ScatterReport::from_parts(others / 4.0, sq[axis] / 4.0))
        }
    }
}

/// Rescales every axis of the box to the same variance, which yields the
/// hypercube of the same dimension.
pub fn whiten(spec: &BoxSpec) -> BoxSpec {
    BoxSpec::hypercube(spec.dim()).expect("dimension already validated")
}

#[cfg(test)]
mod tests {
    use super::*;

    fn squares(v: &[f64]) -> Vec<f64> {
        v.iter().map(|x| x * x).collect()
    }

    #[test]
    fn scales_for_ratio_two() {
        let s = box_scales(4, 2.0, RatioRange::Restricted).unwrap();
        let sq = squares(&s);
        for (got, want) in sq.iter().zip([1.0, 1.0, 2.0, 4.0]) {
            assert!((got - want).abs() <= 1e-12 * want);
        }
        assert_eq!(BoxSpec::new(4, 2.0).unwrap().squared_scales(), &[1.0, 1.0, 2.0, 4.0]);
    }

    #[test]
    fn scales_for_three_dims() {
        for r in [1.0, 1.3, 1.7, 2.0] {
            let s = box_scales(3, r, RatioRange::Restricted).unwrap();
            assert_eq!(s[0], 1.0);
            assert_eq!(s[1], 1.0);
            assert!((s[2] - libm::sqrt(r)).abs() < 1e-15);
        }
        assert_eq!(box_scales(5, 1.0, RatioRange::Restricted).unwrap(), vec![1.0; 5]);
    }

    #[test]
    fn squared_scales_agree_with_scales() {
        for r in [1.0, 1.05, 1.5, 1.99, 2.0] {
            let b = BoxSpec::new(40, r).unwrap();
            for (a, sq) in b.scales().iter().zip(b.squared_scales()) {
                assert!((a * a - sq).abs() <= 1e-12 * sq);
            }
        }
    }

    #[test]
    fn scale_errors() {
        assert!(matches!(
            box_scales(0, 1.5, RatioRange::Restricted),
            Err(Error::InvalidParameter { .. })
        ));
        assert!(matches!(
            box_scales(3, 0.0, RatioRange::Unrestricted),
            Err(Error::InvalidParameter { .. })
        ));
        assert!(matches!(
            box_scales(3, -1.0, RatioRange::Unrestricted),
            Err(Error::InvalidParameter { .. })
        ));
        assert_eq!(
            box_scales(3, 2.5, RatioRange::Restricted),
            Err(Error::RatioOutOfRange { ratio: 2.5 })
        );
        assert_eq!(
            box_scales(3, 0.5, RatioRange::Restricted),
            Err(Error::RatioOutOfRange { ratio: 0.5 })
        );
        assert!(box_scales(3, 2.5, RatioRange::Unrestricted).is_ok());
    }

    #[test]
    fn three_dim_vertices_in_order() {
        let r = 1.5;
        let set = enumerate_box_vertices(&BoxSpec::new(3, r).unwrap()).unwrap();
        assert_eq!(set.len(), 8);
        let s = libm::sqrt(r);
        // Binary-counter order over (Y_1, Y_2, Y_3).
        let expected = [
            [0.0, 0.0, 0.0],
            [1.0, 0.0, 0.0],
            [0.0, 1.0, 0.0],
            [1.0, 1.0, 0.0],
            [0.0, 0.0, s],
            [1.0, 0.0, s],
            [0.0, 1.0, s],
            [1.0, 1.0, s],
        ];
        for (row, want) in set.rows().zip(expected) {
            assert_eq!(row, want);
        }
        for j in 0..8 {
            let labels = set.label_row(j).unwrap();
            for (i, &bit) in labels.iter().enumerate() {
                assert_eq!(set.row(j)[i], set_scale(&set, i) * bit as f64);
            }
        }
    }

    fn set_scale(set: &PointSet, i: usize) -> f64 {
        match set.model().unwrap() {
            ModelSpec::Box(b) => b.scales()[i],
            _ => unreachable!(),
        }
    }

    #[test]
    fn one_dim_vertices() {
        let set = enumerate_box_vertices(&BoxSpec::new(1, 1.7).unwrap()).unwrap();
        assert_eq!(set.coords(), &[0.0, 1.0]);
    }

    #[test]
    fn twenty_dim_cube_has_a_million_vertices() {
        let set = enumerate_box_vertices(&BoxSpec::hypercube(20).unwrap()).unwrap();
        assert_eq!(set.len(), 1_048_576);
    }

    #[test]
    fn enumeration_cap() {
        let spec = BoxSpec::hypercube(25).unwrap();
        assert!(matches!(
            enumerate_box_vertices(&spec),
            Err(Error::Capacity {
                limit: 24,
                requested: 25,
                ..
            })
        ));
    }

    #[test]
    fn sampled_labels_are_fair() {
        let spec = BoxSpec::new(6, 1.5).unwrap();
        let n = 100_000;
        let set = sample_box(&spec, n, SeedSpec::new(11, 0)).unwrap();
        for axis in 0..6 {
            let ones = set.label_column(axis).unwrap().iter().filter(|&&y| y).count();
            let mean = ones as f64 / n as f64;
            // 3 sigma of Binomial(n, 1/2) / n is 0.0047.
            assert!((0.495..=0.505).contains(&mean), "axis {axis}: {mean}");
        }
        for j in 0..n {
            for i in 0..6 {
                assert_eq!(set.row(j)[i], spec.scales()[i] * set.label_row(j).unwrap()[i] as f64);
            }
        }
    }

    #[test]
    fn sampling_is_deterministic() {
        let spec = BoxSpec::new(5, 1.2).unwrap();
        let a = sample_box(&spec, 50, SeedSpec::new(3, 9)).unwrap();
        let b = sample_box(&spec, 50, SeedSpec::new(3, 9)).unwrap();
        assert_eq!(a, b);
        assert_ne!(a, sample_box(&spec, 50, SeedSpec::new(3, 10)).unwrap());

        let m = GaussianMixtureSpec::new(4, 2.0).unwrap();
        let a = sample_gaussian_mixture(&m, 50, SeedSpec::new(3, 9)).unwrap();
        let b = sample_gaussian_mixture(&m, 50, SeedSpec::new(3, 9)).unwrap();
        assert_eq!(a, b);
    }

    #[test]
    fn one_dim_box_sample_values() {
        let set = sample_box(&BoxSpec::new(1, 2.0).unwrap(), 4, SeedSpec::new(5, 0)).unwrap();
        assert!(set.coords().iter().all(|&x| x == 0.0 || x == 1.0));
    }

    fn class_means(set: &PointSet) -> [Vec<f64>; 2] {
        let dim = set.dim();
        let mut sums = [vec![0.0; dim], vec![0.0; dim]];
        let mut counts = [0usize; 2];
        for (j, row) in set.rows().enumerate() {
            let c = set.label_row(j).unwrap()[0] as usize;
            counts[c] += 1;
            for (s, x) in sums[c].iter_mut().zip(row) {
                *s += x;
            }
        }
        for c in 0..2 {
            sums[c].iter_mut().for_each(|s| *s /= counts[c] as f64);
        }
        sums
    }

    #[test]
    fn mixture_without_separation_has_matching_class_means() {
        let dim = 8;
        let n = 20_000;
        let set =
            sample_gaussian_mixture(&GaussianMixtureSpec::new(dim, 0.0).unwrap(), n, SeedSpec::new(21, 0)).unwrap();
        let [m0, m1] = class_means(&set);
        let gap = libm::sqrt(m0.iter().zip(&m1).map(|(a, b)| (a - b) * (a - b)).sum());
        assert!(gap < 4.0 * libm::sqrt(dim as f64 / n as f64), "gap {gap}");
    }

    #[test]
    fn mixture_offset_along_direction() {
        let n = 100_000;
        let set =
            sample_gaussian_mixture(&GaussianMixtureSpec::new(5, 10.0).unwrap(), n, SeedSpec::new(22, 0)).unwrap();
        let [_, m1] = class_means(&set);
        assert!((m1[0] - 10.0).abs() < 4.0 / libm::sqrt(n as f64 / 2.0), "{}", m1[0]);
        assert_eq!(set.label_dim(), 1);
    }

    #[test]
    fn mixture_direction_validation() {
        assert!(GaussianMixtureSpec::with_direction(1.0, vec![1.0, 1.0]).is_err());
        assert!(GaussianMixtureSpec::with_direction(-1.0, vec![1.0]).is_err());
        let m = GaussianMixtureSpec::with_normalized_direction(1.0, vec![3.0, 4.0]).unwrap();
        assert!((m.direction()[0] - 0.6).abs() < 1e-15);
        assert!(GaussianMixtureSpec::with_normalized_direction(1.0, vec![0.0, 0.0]).is_err());
    }

    #[test]
    fn mixture_scatter() {
        let r = distributional_scatter(&GaussianMixtureSpec::new(7, 3.0).unwrap().into(), 0).unwrap();
        assert_eq!(r.within, 7.0);
        assert_eq!(r.between, 2.25);
        assert!(!r.is_cluster);
        let r = distributional_scatter(&GaussianMixtureSpec::new(4, 6.0).unwrap().into(), 0).unwrap();
        assert!(r.is_cluster);
        assert!(distributional_scatter(&GaussianMixtureSpec::new(4, 6.0).unwrap().into(), 1).is_err());
    }

    #[test]
    fn box_scatter_worked_example() {
        for r in [1.0, 1.5, 2.0] {
            let rep = distributional_scatter(&BoxSpec::new(3, r).unwrap().into(), 2).unwrap();
            assert_eq!(rep.within, 0.5);
            assert!((rep.between - r / 4.0).abs() < 1e-15);
        }
        assert!(matches!(
            distributional_scatter(&BoxSpec::new(3, 1.5).unwrap().into(), 3),
            Err(Error::AxisOutOfRange { axis: 3, dim: 3 })
        ));
    }

    #[test]
    fn ratio_two_boundary_is_not_a_cluster() {
        for dim in 2..=16 {
            let rep = distributional_scatter(&BoxSpec::new(dim, 2.0).unwrap().into(), dim - 1).unwrap();
            let expected = libm::pow(2.0, dim as f64 - 2.0) / 4.0;
            assert_eq!(rep.between, expected);
            assert_eq!(rep.within, expected);
            assert!(!rep.is_cluster);
        }
    }

    #[test]
    fn no_axis_split_is_a_cluster_in_range() {
        for step in 0..=10 {
            let r = 1.0 + step as f64 / 10.0;
            for dim in 2..=12 {
                let spec: ModelSpec = BoxSpec::new(dim, r).unwrap().into();
                for k in 0..dim {
                    let rep = distributional_scatter(&spec, k).unwrap();
                    assert!(!rep.is_cluster);
                    // With two axes a_1 = a_2 = 1 whatever r is.
                    if dim == 2 || (step == 10 && k == dim - 1) {
                        assert_eq!(rep.between, rep.within);
                    } else {
                        assert!(rep.between < rep.within, "r {r} dim {dim} k {k}");
                    }
                }
            }
        }
    }

    #[test]
    fn wide_ratio_gives_a_cluster() {
        let spec = BoxSpec::with_range(4, 2.5, RatioRange::Unrestricted).unwrap();
        assert!(distributional_scatter(&spec.into(), 3).unwrap().is_cluster);
    }

    #[test]
    fn whitening_is_the_hypercube() {
        let w = whiten(&BoxSpec::new(10, 1.5).unwrap());
        assert_eq!(w, BoxSpec::hypercube(10).unwrap());
        let cube = BoxSpec::hypercube(6).unwrap();
        assert_eq!(whiten(&cube), cube);
        let once = whiten(&BoxSpec::new(6, 1.9).unwrap());
        assert_eq!(whiten(&once), once);
    }

    #[test]
    fn point_set_validation() {
        assert!(PointSet::from_rows(2, vec![], None).is_err());
        assert!(PointSet::from_rows(2, vec![1.0, 2.0, 3.0], None).is_err());
        assert!(PointSet::from_rows(2, vec![1.0, 2.0], Some((2, vec![0, 2]))).is_err());
        assert!(PointSet::from_rows(2, vec![1.0, 2.0], Some((2, vec![0]))).is_err());
        let set = PointSet::from_rows(2, vec![1.0, 2.0], Some((1, vec![1]))).unwrap();
        assert_eq!(set.label_column(0).unwrap(), vec![true]);
        assert!(set.label_column(1).is_err());
    }
}
