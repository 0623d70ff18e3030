//! Kernels, cokernels, lattice membership and quotient shapes, all derived
//! from the Smith decomposition.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};
use std::fmt;

use super::normal_form::{hermite_normal_form_rows, smith_normal_form, SmithDecomposition};
use super::{IntMatrix, LinalgError};

/// Isomorphism type of a finitely generated abelian group:
/// `Z^free_rank + Z/t1 + ... + Z/tk` with `ti >= 2` and `ti | t(i+1)`.
#[derive(Debug, Clone, PartialEq, Eq, serde::Serialize, serde::Deserialize)]
pub struct AbelianGroupShape {
    pub free_rank: usize,
    pub torsion: Vec<BigInt>,
}

impl AbelianGroupShape {
    pub fn trivial() -> Self {
        AbelianGroupShape {
            free_rank: 0,
            torsion: Vec::new(),
        }
    }

    pub fn free(rank: usize) -> Self {
        AbelianGroupShape {
            free_rank: rank,
            torsion: Vec::new(),
        }
    }

    pub fn is_trivial(&self) -> bool {
        self.free_rank == 0 && self.torsion.is_empty()
    }

    pub fn is_finite(&self) -> bool {
        self.free_rank == 0
    }

    /// Group order, `None` when infinite.
    pub fn order(&self) -> Option<BigInt> {
        if self.free_rank > 0 {
            return None;
        }
        Some(self.torsion.iter().product())
    }
}

impl fmt::Display for AbelianGroupShape {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_trivial() {
            return write!(f, "0");
        }
        let mut parts = Vec::new();
        match self.free_rank {
            0 => {}
            1 => parts.push("Z".to_string()),
            r => parts.push(format!("Z^{r}")),
        }
        for t in &self.torsion {
            parts.push(format!("Z/{t}"));
        }
        write!(f, "{}", parts.join(" + "))
    }
}

/// Basis of the integer kernel `{v : A*v = 0}`, one vector per row of the
/// returned list, in canonical Hermite-reduced form.
pub fn kernel_basis(a: &IntMatrix) -> Vec<Vec<BigInt>> {
    let snf = smith_normal_form(a);
    let rank = snf.rank();
    // columns of V beyond the rank span the kernel
    let raw = IntMatrix::from_rows((rank..a.cols()).map(|j| snf.v.col(j)).collect());
    let h = hermite_normal_form_rows(&raw);
    (0..h.rows()).map(|i| h.row(i)).collect()
}

/// Shape of the cokernel `Z^rows / colspan(A)`.
pub fn cokernel_shape(a: &IntMatrix) -> AbelianGroupShape {
    let snf = smith_normal_form(a);
    let rank = snf.rank();
    AbelianGroupShape {
        free_rank: a.rows() - rank,
        torsion: snf
            .invariant_factors
            .iter()
            .filter(|f| !f.is_zero() && !f.is_one())
            .cloned()
            .collect(),
    }
}

/// Solves `G*c = v` over the integers. Returns `None` when `v` is not in
/// the column lattice of `G`; the decision is exact.
pub fn solve_in_lattice(g: &IntMatrix, v: &[BigInt]) -> Result<Option<Vec<BigInt>>, LinalgError> {
    if v.len() != g.rows() {
        return Err(LinalgError::DimensionMismatch {
            expected: g.rows(),
            got: v.len(),
        });
    }
    let snf = smith_normal_form(g);
    Ok(solve_with_decomposition(&snf, g.cols(), v))
}

/// Core of `solve_in_lattice`, reusable when the decomposition of `G` is
/// already at hand. `U*G*V = D` turns `G*c = v` into `D*y = U*v` with
/// `c = V*y`; kernel coordinates of `y` are fixed to zero, which makes the
/// returned solution deterministic.
pub(crate) fn solve_with_decomposition(
    snf: &SmithDecomposition,
    g_cols: usize,
    v: &[BigInt],
) -> Option<Vec<BigInt>> {
    let w = snf
        .u
        .mul_vec(v)
        .expect("decomposition dimensions match by construction");
    let steps = snf.invariant_factors.len();
    let mut y = vec![BigInt::zero(); g_cols];
    for (i, wi) in w.iter().enumerate() {
        if i < steps && !snf.invariant_factors[i].is_zero() {
            let d = &snf.invariant_factors[i];
            if !wi.mod_floor(d).is_zero() {
                return None;
            }
            y[i] = wi / d;
        } else if !wi.is_zero() {
            return None;
        }
    }
    Some(
        snf.v
            .mul_vec(&y)
            .expect("decomposition dimensions match by construction"),
    )
}

/// Shape of the quotient of the lattice spanned by the columns of
/// `ambient_basis` by the sub-lattice spanned by the columns of
/// `sub_generators`.
///
/// Each sub-generator is rewritten in ambient coordinates (an error if one
/// falls outside the ambient lattice) and the quotient is read off the
/// Smith form of the coordinate matrix.
pub fn quotient_shape(
    ambient_basis: &IntMatrix,
    sub_generators: &IntMatrix,
) -> Result<AbelianGroupShape, LinalgError> {
    if sub_generators.cols() > 0 && sub_generators.rows() != ambient_basis.rows() {
        return Err(LinalgError::DimensionMismatch {
            expected: ambient_basis.rows(),
            got: sub_generators.rows(),
        });
    }
    let ambient_rank = ambient_basis.cols();
    let snf = smith_normal_form(ambient_basis);
    let mut coords = IntMatrix::zeros(ambient_rank, sub_generators.cols());
    for j in 0..sub_generators.cols() {
        let col = sub_generators.col(j);
        let c = solve_with_decomposition(&snf, ambient_basis.cols(), &col)
            .ok_or(LinalgError::GeneratorOutsideAmbient { index: j })?;
        for (i, x) in c.into_iter().enumerate() {
            coords.set(i, j, x);
        }
    }
    Ok(cokernel_shape(&coords))
}
