//! Models, projections and Monte Carlo estimates for studying when random
//! one-dimensional projections of high-dimensional data look clustered.
//!
//! Three generative models are provided: a mixture of two spherical
//! Gaussians, the Bernoulli hypercube, and the geometric box whose squared
//! edge lengths grow as `r^(k-2)`. A binary partition counts as a cluster
//! when its between-class scatter exceeds its within-class scatter.
//!
//! The crate is `no_std` and only needs `alloc`.

#![no_std]

extern crate alloc;

pub mod cluster;
pub mod error;
pub mod models;
pub mod montecarlo;
pub mod projection;
pub mod rng;
pub mod special;

pub use cluster::{
    analytic_min_error, axis_split_condition, empirical_min_error, empirical_scatter, find_separable_axis, normal_cdf,
    BinaryPartition, ScatterReport, ThresholdReport,
};
pub use error::{Error, Result};
pub use models::{
    box_scales, distributional_scatter, enumerate_box_vertices, sample_box, sample_gaussian_mixture, whiten, BoxSpec,
    GaussianMixtureSpec, ModelSpec, PointSet, RatioRange,
};
pub use montecarlo::{
    brute_force_cluster_search, error_distribution_diagnostic, estimate_separation_probability, lemma1_diagnostic,
    sweep, whitening_comparison, EstimateWithCI, SweepPlan, SweepTable,
};
pub use projection::{project, random_gaussian_vector, random_unit_vector, ProjectionVector};
pub use rng::{SeedSpec, GENERATOR_ID};
