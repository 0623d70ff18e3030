//! Smith and Hermite normal forms over the integers.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, Zero};

use super::IntMatrix;

/// Smith decomposition `U * A * V = D` of an integer matrix `A`.
///
/// `U` and `V` are unimodular, `D` is diagonal with non-negative entries
/// forming a divisibility chain `d1 | d2 | ... | dr` followed by zeros.
/// `invariant_factors` is the full diagonal of `D`, of length
/// `min(rows, cols)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SmithDecomposition {
    pub u: IntMatrix,
    pub d: IntMatrix,
    pub v: IntMatrix,
    pub invariant_factors: Vec<BigInt>,
}

impl SmithDecomposition {
    /// Number of nonzero invariant factors.
    pub fn rank(&self) -> usize {
        self.invariant_factors
            .iter()
            .filter(|f| !f.is_zero())
            .count()
    }
}

/// Finds the smallest nonzero entry (by absolute value) of `m` in the
/// submatrix starting at `(from, from)`, ties broken by row-major position.
/// The fixed rule makes the whole decomposition deterministic.
fn find_pivot(m: &IntMatrix, from: usize) -> Option<(usize, usize)> {
    let mut best: Option<(usize, usize)> = None;
    for i in from..m.rows() {
        for j in from..m.cols() {
            let x = m.get(i, j);
            if x.is_zero() {
                continue;
            }
            match best {
                Some((bi, bj)) if m.get(bi, bj).abs() <= x.abs() => {}
                _ => best = Some((i, j)),
            }
        }
    }
    best
}

/// Computes the Smith normal form of `A`.
///
/// Works for any shape including empty matrices. Output is deterministic
/// for a fixed input.
pub fn smith_normal_form(a: &IntMatrix) -> SmithDecomposition {
    let rows = a.rows();
    let cols = a.cols();
    let mut d = a.clone();
    let mut u = IntMatrix::identity(rows);
    let mut v = IntMatrix::identity(cols);

    let steps = rows.min(cols);
    let mut t = 0;
    while t < steps {
        let Some((pi, pj)) = find_pivot(&d, t) else {
            break; // remaining submatrix is zero
        };
        d.swap_rows(t, pi);
        u.swap_rows(t, pi);
        d.swap_cols(t, pj);
        v.swap_cols(t, pj);

        // Reduce until the pivot row and column are clear. Each remainder
        // step strictly shrinks |pivot|, so this terminates.
        'reduce: loop {
            for i in t + 1..rows {
                if !d.get(i, t).is_zero() {
                    let q = -d.get(i, t).div_floor(d.get(t, t));
                    d.add_row_multiple(i, t, &q);
                    u.add_row_multiple(i, t, &q);
                    if !d.get(i, t).is_zero() {
                        // nonzero remainder is smaller than the pivot
                        d.swap_rows(t, i);
                        u.swap_rows(t, i);
                        continue 'reduce;
                    }
                }
            }
            for j in t + 1..cols {
                if !d.get(t, j).is_zero() {
                    let q = -d.get(t, j).div_floor(d.get(t, t));
                    d.add_col_multiple(j, t, &q);
                    v.add_col_multiple(j, t, &q);
                    if !d.get(t, j).is_zero() {
                        d.swap_cols(t, j);
                        v.swap_cols(t, j);
                        continue 'reduce;
                    }
                }
            }
            // Pivot must divide everything further down-right; if not,
            // fold the offending row in and keep reducing.
            for i in t + 1..rows {
                for j in t + 1..cols {
                    if !d.get(i, j).mod_floor(d.get(t, t)).is_zero() {
                        d.add_row_multiple(t, i, &BigInt::from(1));
                        u.add_row_multiple(t, i, &BigInt::from(1));
                        continue 'reduce;
                    }
                }
            }
            break;
        }

        if d.get(t, t).is_negative() {
            d.negate_row(t);
            u.negate_row(t);
        }
        t += 1;
    }

    let invariant_factors = (0..steps).map(|i| d.get(i, i).clone()).collect();
    SmithDecomposition {
        u,
        d,
        v,
        invariant_factors,
    }
}

/// Row-style Hermite normal form: the canonical basis of the row lattice
/// of `m`, returned as the rows of the output matrix.
///
/// Pivots are positive, entries above each pivot are reduced into
/// `[0, pivot)`, zero rows are dropped. Two generating sets span the same
/// row lattice exactly when their Hermite forms are equal.
pub fn hermite_normal_form_rows(m: &IntMatrix) -> IntMatrix {
    let mut h = m.clone();
    let rows = h.rows();
    let cols = h.cols();
    let mut r = 0;
    for c in 0..cols {
        if r == rows {
            break;
        }
        // gcd elimination within column c, rows r..
        loop {
            let pivot = (r..rows)
                .filter(|&i| !h.get(i, c).is_zero())
                .min_by(|&i, &j| {
                    h.get(i, c)
                        .abs()
                        .cmp(&h.get(j, c).abs())
                        .then(i.cmp(&j))
                });
            let Some(p) = pivot else { break };
            h.swap_rows(r, p);
            let mut clean = true;
            for i in r + 1..rows {
                if !h.get(i, c).is_zero() {
                    let q = -h.get(i, c).div_floor(h.get(r, c));
                    h.add_row_multiple(i, r, &q);
                    if !h.get(i, c).is_zero() {
                        clean = false;
                    }
                }
            }
            if clean {
                break;
            }
        }
        if h.get(r, c).is_zero() {
            continue;
        }
        if h.get(r, c).is_negative() {
            h.negate_row(r);
        }
        // reduce the entries above the pivot into [0, pivot)
        for i in 0..r {
            let q = -h.get(i, c).div_floor(h.get(r, c));
            if !q.is_zero() {
                h.add_row_multiple(i, r, &q);
            }
        }
        r += 1;
    }
    IntMatrix::from_rows((0..r).map(|i| h.row(i)).collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_traits::One;

    fn b(x: i64) -> BigInt {
        BigInt::from(x)
    }

    fn check_decomposition(a: &IntMatrix) {
        let s = smith_normal_form(a);
        assert_eq!(s.u.mul(a).mul(&s.v), s.d, "U*A*V != D for {a}");
        assert!(s.u.is_unimodular(), "U not unimodular for {a}");
        assert!(s.v.is_unimodular(), "V not unimodular for {a}");
        for w in s.invariant_factors.windows(2) {
            assert!(!w[0].is_negative());
            if w[0].is_zero() {
                assert!(w[1].is_zero(), "zeros must trail in {a}");
            } else {
                assert!(w[1].mod_floor(&w[0]).is_zero(), "chain broken for {a}");
            }
        }
        // off-diagonal of D is zero
        for i in 0..s.d.rows() {
            for j in 0..s.d.cols() {
                if i != j {
                    assert!(s.d.get(i, j).is_zero());
                }
            }
        }
    }

    #[test]
    fn snf_zero_matrix() {
        let a = IntMatrix::from_rows_i64(&[vec![0, 0], vec![0, 0]]);
        let s = smith_normal_form(&a);
        assert_eq!(s.invariant_factors, vec![b(0), b(0)]);
        check_decomposition(&a);
    }

    #[test]
    fn snf_one_by_one_zero() {
        let a = IntMatrix::from_rows_i64(&[vec![0]]);
        let s = smith_normal_form(&a);
        assert_eq!(s.d, a);
        assert_eq!(s.invariant_factors, vec![b(0)]);
    }

    #[test]
    fn snf_diag_2_3() {
        // d1 = gcd of entries = 1, d1*d2 = |det| = 6
        let a = IntMatrix::from_rows_i64(&[vec![2, 0], vec![0, 3]]);
        let s = smith_normal_form(&a);
        assert_eq!(s.invariant_factors, vec![b(1), b(6)]);
        check_decomposition(&a);
    }

    #[test]
    fn snf_empty_shapes() {
        for (r, c) in [(0, 0), (0, 3), (3, 0)] {
            let a = IntMatrix::zeros(r, c);
            let s = smith_normal_form(&a);
            assert!(s.invariant_factors.is_empty());
            assert_eq!(s.u, IntMatrix::identity(r));
            assert_eq!(s.v, IntMatrix::identity(c));
            check_decomposition(&a);
        }
    }

    #[test]
    fn snf_rectangular_and_negative() {
        let a = IntMatrix::from_rows_i64(&[vec![-4, 6, 2], vec![2, -2, 4]]);
        check_decomposition(&a);
        let s = smith_normal_form(&a);
        assert!(s.invariant_factors.iter().all(|f| !f.is_negative()));
    }

    #[test]
    fn snf_deterministic() {
        let a = IntMatrix::from_rows_i64(&[vec![3, 1, 2], vec![0, 5, 4], vec![7, 2, 2]]);
        let s1 = smith_normal_form(&a);
        let s2 = smith_normal_form(&a);
        assert_eq!(s1, s2);
    }

    #[test]
    fn snf_rank() {
        let a = IntMatrix::from_rows_i64(&[vec![1, 0], vec![0, 0]]);
        assert_eq!(smith_normal_form(&a).rank(), 1);
        assert_eq!(smith_normal_form(&IntMatrix::identity(3)).rank(), 3);
    }

    #[test]
    fn hnf_canonicalizes_generating_sets() {
        // two generating sets of the same row lattice
        let g1 = IntMatrix::from_rows_i64(&[vec![2, 0], vec![0, 3]]);
        let g2 = IntMatrix::from_rows_i64(&[vec![2, 3], vec![2, 0], vec![4, 3]]);
        assert_eq!(hermite_normal_form_rows(&g1), hermite_normal_form_rows(&g2));
    }

    #[test]
    fn hnf_positive_pivots_and_reduction() {
        let g = IntMatrix::from_rows_i64(&[vec![-1, 4], vec![0, 7]]);
        let h = hermite_normal_form_rows(&g);
        assert_eq!(h.rows(), 2);
        assert!(h.get(0, 0).is_one());
        // entry above the second pivot is reduced into [0, 7)
        assert!(*h.get(0, 1) >= b(0) && *h.get(0, 1) < b(7));
    }

    #[test]
    fn hnf_drops_zero_rows() {
        let g = IntMatrix::from_rows_i64(&[vec![0, 0], vec![1, 2], vec![2, 4]]);
        let h = hermite_normal_form_rows(&g);
        assert_eq!(h, IntMatrix::from_rows_i64(&[vec![1, 2]]));
    }
}
