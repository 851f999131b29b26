//! Random directions and one-dimensional projections.

use alloc::vec;
use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::models::PointSet;
use crate::rng::SeedSpec;

/// Norms below this are treated as degenerate and the vector is redrawn.
pub const MIN_NORM: f64 = 1e-300;

#[derive(Debug, Clone, PartialEq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct ProjectionVector {
    coords: Vec<f64>,
    normalized: bool,
}

impl ProjectionVector {
    /// An arbitrary (unnormalized) direction.
    pub fn from_coords(coords: Vec<f64>) -> Result<Self> {
        if coords.is_empty() {
            return Err(Error::InvalidParameter {
                name: "dim",
                reason: "must be at least 1",
            });
        }
        if let Some(&bad) = coords.iter().find(|x| !x.is_finite()) {
            return Err(Error::Domain(bad));
        }
        Ok(Self {
            coords,
            normalized: false,
        })
    }

    /// The `axis`-th standard basis vector (0-based).
    pub fn basis(dim: usize, axis: usize) -> Result<Self> {
        if axis >= dim {
            return Err(Error::AxisOutOfRange { axis, dim });
        }
        let mut coords = vec![0.0; dim];
        coords[axis] = 1.0;
        Ok(Self {
            coords,
            normalized: true,
        })
    }

    pub fn dim(&self) -> usize {
        self.coords.len()
    }

    pub fn coords(&self) -> &[f64] {
        &self.coords
    }

    pub fn is_normalized(&self) -> bool {
        self.normalized
    }

    pub fn norm(&self) -> f64 {
        libm::sqrt(self.coords.iter().map(|x| x * x).sum())
    }

    /// Rescaled to unit length; `None` for a (numerically) zero vector.
    pub fn normalized(&self) -> Option<Self> {
        if self.normalized {
            return Some(self.clone());
        }
        let norm = self.norm();
        if !norm.is_finite() || norm < MIN_NORM {
            return None;
        }
        Some(Self {
            coords: self.coords.iter().map(|x| x / norm).collect(),
            normalized: true,
        })
    }

    pub fn dot(&self, other: &[f64]) -> Result<f64> {
        if other.len() != self.dim() {
            return Err(Error::Shape {
                expected: self.dim(),
                found: other.len(),
            });
        }
        Ok(dot(&self.coords, other))
    }

    pub fn into_coords(self) -> Vec<f64> {
        self.coords
    }
}

impl AsRef<[f64]> for ProjectionVector {
    fn as_ref(&self) -> &[f64] {
        &self.coords
    }
}

#[inline]
pub(crate) fn dot(a: &[f64], b: &[f64]) -> f64 {
    a.iter().zip(b).map(|(x, y)| x * y).sum()
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

/// `dim` independent standard normal coordinates drawn from `seed`'s stream.
pub fn random_gaussian_vector(dim: usize, seed: SeedSpec) -> Result<ProjectionVector> {
    check_dim(dim)?;
    let mut coords = vec![0.0; dim];
    seed.generator().fill_standard_normal(&mut coords);
    Ok(ProjectionVector {
        coords,
        normalized: false,
    })
}

/// Uniform direction on the unit sphere: a Gaussian vector divided by its
/// norm. A vector with norm below [`MIN_NORM`] is replaced by the next draw
/// from the same stream.
pub fn random_unit_vector(dim: usize, seed: SeedSpec) -> Result<ProjectionVector> {
    check_dim(dim)?;
    let mut rng = seed.generator();
    let mut coords = vec![0.0; dim];
    loop {
        rng.fill_standard_normal(&mut coords);
        let norm = libm::sqrt(coords.iter().map(|x| x * x).sum());
        if norm >= MIN_NORM {
            coords.iter_mut().for_each(|x| *x /= norm);
            return Ok(ProjectionVector {
                coords,
                normalized: true,
            });
        }
    }
}

/// `points[j] . v` for every point.
pub fn project(points: &PointSet, v: &ProjectionVector) -> Result<Vec<f64>> {
    if points.dim() != v.dim() {
        return Err(Error::Shape {
            expected: points.dim(),
            found: v.dim(),
        });
    }
    Ok(points.rows().map(|row| dot(row, v.coords())).collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::models::{enumerate_box_vertices, BoxSpec};

    #[test]
    fn gaussian_coordinates_have_unit_moments() {
        let draws = 100_000u64;
        let dim = 4;
        let mut sum = [0.0; 4];
        let mut sq = [0.0; 4];
        for t in 0..draws {
            let v = random_gaussian_vector(dim, SeedSpec::new(5, t)).unwrap();
            assert!(!v.is_normalized());
            for i in 0..dim {
                sum[i] += v.coords()[i];
                sq[i] += v.coords()[i] * v.coords()[i];
            }
        }
        let n = draws as f64;
        for i in 0..dim {
            let mean = sum[i] / n;
            let var = sq[i] / n - mean * mean;
            assert!(mean.abs() < 4.0 / libm::sqrt(n), "mean {mean}");
            // sd of the sample variance is sqrt(2 / n) = 0.0045.
            assert!((var - 1.0).abs() < 0.02, "var {var}");
        }
    }

    #[test]
    fn gaussian_vector_is_deterministic() {
        let a = random_gaussian_vector(16, SeedSpec::new(1, 2)).unwrap();
        assert_eq!(a, random_gaussian_vector(16, SeedSpec::new(1, 2)).unwrap());
        assert_ne!(a, random_gaussian_vector(16, SeedSpec::new(1, 3)).unwrap());
    }

    #[test]
    fn unit_vectors_have_unit_norm() {
        for dim in [1, 2, 3, 10, 1000] {
            for t in 0..50 {
                let v = random_unit_vector(dim, SeedSpec::new(9, t)).unwrap();
                assert!(v.is_normalized());
                assert!((v.norm() - 1.0).abs() <= 1e-12);
            }
        }
    }

    #[test]
    fn one_dim_unit_vector_is_a_sign() {
        let mut seen = [false; 2];
        for t in 0..64 {
            let v = random_unit_vector(1, SeedSpec::new(4, t)).unwrap();
            let x = v.coords()[0];
            assert!(x == 1.0 || x == -1.0);
            seen[(x > 0.0) as usize] = true;
        }
        assert_eq!(seen, [true, true]);
    }

    #[test]
    fn unit_vector_is_the_normalized_gaussian_vector() {
        let seed = SeedSpec::new(77, 5);
        let g = random_gaussian_vector(12, seed).unwrap();
        let u = random_unit_vector(12, seed).unwrap();
        assert_eq!(g.normalized().unwrap(), u);
    }

    #[test]
    fn projection_onto_basis_is_a_column() {
        let set = enumerate_box_vertices(&BoxSpec::new(4, 1.4).unwrap()).unwrap();
        for k in 0..4 {
            let col: Vec<f64> = set.rows().map(|r| r[k]).collect();
            assert_eq!(project(&set, &ProjectionVector::basis(4, k).unwrap()).unwrap(), col);
        }
        let zero = ProjectionVector::from_coords(vec![0.0; 4]).unwrap();
        assert!(project(&set, &zero).unwrap().iter().all(|&x| x == 0.0));
    }

    #[test]
    fn third_axis_projection_of_three_dim_box() {
        let r = 1.6;
        let set = enumerate_box_vertices(&BoxSpec::new(3, r).unwrap()).unwrap();
        let t = project(&set, &ProjectionVector::from_coords(vec![0.0, 0.0, 1.0]).unwrap()).unwrap();
        assert_eq!(t.iter().filter(|&&x| x == 0.0).count(), 4);
        assert_eq!(t.iter().filter(|&&x| x == libm::sqrt(r)).count(), 4);
    }

    #[test]
    fn shape_errors() {
        let set = enumerate_box_vertices(&BoxSpec::new(3, 1.0).unwrap()).unwrap();
        let v = ProjectionVector::basis(2, 0).unwrap();
        assert_eq!(project(&set, &v), Err(Error::Shape { expected: 3, found: 2 }));
        assert!(ProjectionVector::basis(2, 2).is_err());
        assert!(ProjectionVector::from_coords(vec![]).is_err());
        assert!(ProjectionVector::from_coords(vec![f64::NAN]).is_err());
        assert!(random_unit_vector(0, SeedSpec::new(0, 0)).is_err());
    }
}
