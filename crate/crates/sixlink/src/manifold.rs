//! Closed connected orientable 3-manifolds given by integer surgery
//! presentations.
//!
//! A presentation is a symmetric linking matrix `A`: off-diagonal entries
//! are pairwise linking numbers of the surgery link components, diagonal
//! entries are framings. Then `H_1 = coker A` in the meridian basis and
//! `H_2 = ker A`, and the intersection pairing `H_1 x H_2 -> Z` is the
//! meridian-coordinate dot product.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, Zero};
use serde::Deserialize;
use std::path::Path;

use crate::intlinalg::{
    cokernel_shape, kernel_basis, smith_normal_form, AbelianGroupShape, IntMatrix,
    SmithDecomposition,
};

#[derive(Debug, thiserror::Error)]
pub enum ManifoldError {
    #[error("linking matrix must be square, got {rows} rows and {cols} columns")]
    NotSquare { rows: usize, cols: usize },
    #[error("linking matrix must be symmetric: entry ({i},{j}) = {a} but ({j},{i}) = {b}")]
    NotSymmetric { i: usize, j: usize, a: BigInt, b: BigInt },
    #[error("expected a vector of length {expected}, got {got}")]
    DimensionMismatch { expected: usize, got: usize },
    #[error("vector {0:?} is not a cycle: the linking matrix does not annihilate it")]
    NotACycle(Vec<BigInt>),
    #[error("failed to parse manifold spec: {0}")]
    Parse(#[from] serde_json::Error),
    #[error("failed to read manifold spec {path}: {source}")]
    Io {
        path: String,
        source: std::io::Error,
    },
}

/// A 3-manifold presented by surgery on a framed link in the 3-sphere.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SurgeryPresentation {
    name: String,
    matrix: IntMatrix,
}

#[derive(Deserialize)]
struct ManifoldSpecFile {
    name: String,
    linking_matrix: Vec<Vec<i64>>,
}

impl SurgeryPresentation {
    /// Validates squareness and symmetry. The empty matrix is legal and
    /// presents the 3-sphere.
    pub fn new(name: impl Into<String>, matrix: IntMatrix) -> Result<Self, ManifoldError> {
        if !matrix.is_square() {
            return Err(ManifoldError::NotSquare {
                rows: matrix.rows(),
                cols: matrix.cols(),
            });
        }
        for i in 0..matrix.rows() {
            for j in 0..i {
                if matrix.get(i, j) != matrix.get(j, i) {
                    return Err(ManifoldError::NotSymmetric {
                        i,
                        j,
                        a: matrix.get(i, j).clone(),
                        b: matrix.get(j, i).clone(),
                    });
                }
            }
        }
        Ok(SurgeryPresentation {
            name: name.into(),
            matrix,
        })
    }

    /// Loads the JSON spec format
    /// `{"name": string, "linking_matrix": [[int,...],...]}`.
    pub fn from_json_str(text: &str) -> Result<Self, ManifoldError> {
        let spec: ManifoldSpecFile = serde_json::from_str(text)?;
        let matrix = IntMatrix::from_rows_i64(&spec.linking_matrix);
        SurgeryPresentation::new(spec.name, matrix)
    }

    pub fn from_path(path: impl AsRef<Path>) -> Result<Self, ManifoldError> {
        let path = path.as_ref();
        let text = std::fs::read_to_string(path).map_err(|source| ManifoldError::Io {
            path: path.display().to_string(),
            source,
        })?;
        Self::from_json_str(&text)
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn matrix(&self) -> &IntMatrix {
        &self.matrix
    }

    /// Number of surgery link components.
    pub fn size(&self) -> usize {
        self.matrix.rows()
    }
}

/// An element of `H_1`, stored as a coefficient vector in the meridian
/// basis, understood modulo the column span of the linking matrix.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct H1Class {
    coords: Vec<BigInt>,
}

impl H1Class {
    pub fn new(coords: Vec<BigInt>) -> Self {
        H1Class { coords }
    }

    pub fn from_i64(coords: &[i64]) -> Self {
        H1Class::new(coords.iter().map(|&x| BigInt::from(x)).collect())
    }

    pub fn zero(n: usize) -> Self {
        H1Class::new(vec![BigInt::zero(); n])
    }

    pub fn coords(&self) -> &[BigInt] {
        &self.coords
    }

    pub fn len(&self) -> usize {
        self.coords.len()
    }

    pub fn is_empty(&self) -> bool {
        self.coords.is_empty()
    }
}

/// An element of `H_2`, stored as an explicit kernel vector of the linking
/// matrix so that intersection pairings stay computable.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct H2Class {
    coords: Vec<BigInt>,
}

impl H2Class {
    /// Checks `A * v = 0` exactly.
    pub fn new(p: &SurgeryPresentation, coords: Vec<BigInt>) -> Result<Self, ManifoldError> {
        if coords.len() != p.size() {
            return Err(ManifoldError::DimensionMismatch {
                expected: p.size(),
                got: coords.len(),
            });
        }
        let image = p.matrix.mul_vec(&coords).expect("length checked above");
        if !image.iter().all(Zero::is_zero) {
            return Err(ManifoldError::NotACycle(coords));
        }
        Ok(H2Class { coords })
    }

    pub fn coords(&self) -> &[BigInt] {
        &self.coords
    }
}

/// Homology of a surgery presentation: `H_1` with its Smith coordinates
/// and an explicit kernel basis for `H_2`.
#[derive(Debug, Clone)]
pub struct HomologyData {
    pub h1: AbelianGroupShape,
    pub h1_snf: SmithDecomposition,
    pub h2_basis: Vec<Vec<BigInt>>,
}

/// Computes `H_1 = coker A` and `H_2 = ker A`.
pub fn homology(p: &SurgeryPresentation) -> HomologyData {
    let h1 = cokernel_shape(p.matrix());
    let h1_snf = smith_normal_form(p.matrix());
    let h2_basis = kernel_basis(p.matrix());
    // Poincare duality self-check: rank H_2 = free rank of H_1. For a
    // symmetric matrix this is rank(A) = rank(A^T), so a failure here
    // means the normal-form code is broken.
    debug_assert_eq!(h2_basis.len(), h1.free_rank);
    HomologyData { h1, h1_snf, h2_basis }
}

impl HomologyData {
    pub fn size(&self) -> usize {
        self.h1_snf.u.rows()
    }

    /// H_2 basis vectors as classes. The presentation is only needed for
    /// the cycle check, which holds by construction here.
    pub fn h2_classes(&self) -> Vec<H2Class> {
        self.h2_basis
            .iter()
            .map(|v| H2Class { coords: v.clone() })
            .collect()
    }

    /// Canonical representative of an `H_1` class in the Smith coordinates
    /// `Z/d1 + ... + Z/dn` (free factors where `di = 0`). Two classes are
    /// equal iff their canonical forms are.
    pub fn canonical_h1(&self, x: &H1Class) -> Result<Vec<BigInt>, ManifoldError> {
        let n = self.size();
        if x.len() != n {
            return Err(ManifoldError::DimensionMismatch {
                expected: n,
                got: x.len(),
            });
        }
        let y = self.h1_snf.u.mul_vec(x.coords()).expect("length checked");
        Ok(y
            .into_iter()
            .enumerate()
            .map(|(i, yi)| {
                let d = &self.h1_snf.invariant_factors[i];
                if d.is_zero() {
                    yi
                } else {
                    yi.mod_floor(d)
                }
            })
            .collect())
    }

    /// Whether two meridian-coordinate vectors present the same `H_1` class.
    pub fn h1_eq(&self, x: &H1Class, y: &H1Class) -> Result<bool, ManifoldError> {
        Ok(self.canonical_h1(x)? == self.canonical_h1(y)?)
    }

    /// Divisibility of the projection of `x` to the free part of `H_1`:
    /// the gcd of the free canonical coordinates, zero when they all vanish.
    pub fn divisibility(&self, x: &H1Class) -> Result<BigInt, ManifoldError> {
        let canonical = self.canonical_h1(x)?;
        let mut g = BigInt::zero();
        for (i, c) in canonical.iter().enumerate() {
            if self.h1_snf.invariant_factors[i].is_zero() {
                g = g.gcd(c);
            }
        }
        Ok(g.abs())
    }

    /// Meridian representative of a canonical coordinate vector, the
    /// inverse of `canonical_h1` up to coset.
    pub fn meridian_from_canonical(&self, y: &[BigInt]) -> Result<H1Class, ManifoldError> {
        let n = self.size();
        if y.len() != n {
            return Err(ManifoldError::DimensionMismatch {
                expected: n,
                got: y.len(),
            });
        }
        let u_inv = self
            .h1_snf
            .u
            .inverse_unimodular()
            .expect("U is unimodular by construction");
        Ok(H1Class::new(u_inv.mul_vec(y).expect("length checked")))
    }
}

/// The intersection pairing `H_1 x H_2 -> Z` as the meridian-coordinate
/// dot product. Well-defined on classes: shifting `x` by a column of the
/// linking matrix does not change the value since `A` is symmetric and
/// `A * v = 0`.
pub fn pairing(x: &H1Class, v: &H2Class) -> Result<BigInt, ManifoldError> {
    if x.len() != v.coords.len() {
        return Err(ManifoldError::DimensionMismatch {
            expected: v.coords.len(),
            got: x.len(),
        });
    }
    Ok(x.coords()
        .iter()
        .zip(v.coords.iter())
        .map(|(a, b)| a * b)
        .sum())
}
