//! The groups of knotted 3-spheres and 2-component sphere links in the
//! 6-sphere.
//!
//! A knot `S^3 -> S^6` is classified by one integer, the Haefliger
//! invariant `r`. A 2-component link `S^3 u S^3 -> S^6` is classified by
//! the tuple `(lambda1, lambda2, r1, r2)` of linking coefficients and
//! component Haefliger invariants; the realized image is
//! `Z~4 = {(a, b) in Z^2 : a = b mod 2} x Z^2`. In the PL category the
//! Haefliger invariants die and only `(lambda1, lambda2)` survives, still
//! subject to the parity constraint.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, Zero};
use std::fmt;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum LinkGroupError {
    /// The tuple fails `lambda1 = lambda2 mod 2`, so no embedding
    /// realizes it.
    #[error("parity violation: lambda1 = {lambda1} and lambda2 = {lambda2} differ mod 2")]
    ParityViolation { lambda1: BigInt, lambda2: BigInt },
    /// `lambda(A,B) + lambda(B,A)` must be even for linked data coming
    /// from actual embeddings.
    #[error("odd linking sum {0}: not realizable link data")]
    OddLinkingSum(BigInt),
}

/// Isotopy class of a knotted 3-sphere in the 6-sphere.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct KnotClass {
    pub r: BigInt,
}

impl KnotClass {
    pub fn new(r: impl Into<BigInt>) -> Self {
        KnotClass { r: r.into() }
    }

    pub fn is_trivial(&self) -> bool {
        self.r.is_zero()
    }
}

/// Isotopy class of a 2-component sphere link, as a tuple in `Z~4`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct LinkClass {
    lambda1: BigInt,
    lambda2: BigInt,
    r1: BigInt,
    r2: BigInt,
}

impl LinkClass {
    /// Rejects tuples outside `Z~4`.
    pub fn new(
        lambda1: impl Into<BigInt>,
        lambda2: impl Into<BigInt>,
        r1: impl Into<BigInt>,
        r2: impl Into<BigInt>,
    ) -> Result<Self, LinkGroupError> {
        let (lambda1, lambda2) = (lambda1.into(), lambda2.into());
        if (&lambda1 - &lambda2).mod_floor(&BigInt::from(2)) != BigInt::zero() {
            return Err(LinkGroupError::ParityViolation { lambda1, lambda2 });
        }
        Ok(LinkClass {
            lambda1,
            lambda2,
            r1: r1.into(),
            r2: r2.into(),
        })
    }

    pub fn trivial() -> Self {
        LinkClass::new(0, 0, 0, 0).expect("zero tuple is in the group")
    }

    pub fn lambda1(&self) -> &BigInt {
        &self.lambda1
    }

    pub fn lambda2(&self) -> &BigInt {
        &self.lambda2
    }

    pub fn r1(&self) -> &BigInt {
        &self.r1
    }

    pub fn r2(&self) -> &BigInt {
        &self.r2
    }

    /// Componentwise connected-sum addition.
    pub fn add(&self, other: &LinkClass) -> LinkClass {
        LinkClass {
            lambda1: &self.lambda1 + &other.lambda1,
            lambda2: &self.lambda2 + &other.lambda2,
            r1: &self.r1 + &other.r1,
            r2: &self.r2 + &other.r2,
        }
    }

    pub fn neg(&self) -> LinkClass {
        LinkClass {
            lambda1: -&self.lambda1,
            lambda2: -&self.lambda2,
            r1: -&self.r1,
            r2: -&self.r2,
        }
    }

    pub fn sub(&self, other: &LinkClass) -> LinkClass {
        self.add(&other.neg())
    }

    pub fn is_trivial(&self) -> bool {
        self.lambda1.is_zero() && self.lambda2.is_zero() && self.r1.is_zero() && self.r2.is_zero()
    }

    /// Unlinked means the components lie in disjoint balls; the components
    /// may still be individually knotted.
    pub fn is_unlinked(&self) -> bool {
        self.lambda1.is_zero() && self.lambda2.is_zero()
    }

    pub fn to_vec(&self) -> Vec<BigInt> {
        vec![
            self.lambda1.clone(),
            self.lambda2.clone(),
            self.r1.clone(),
            self.r2.clone(),
        ]
    }

    pub fn from_vec(v: &[BigInt]) -> Result<Self, LinkGroupError> {
        assert_eq!(v.len(), 4, "a link class is a 4-tuple");
        LinkClass::new(v[0].clone(), v[1].clone(), v[2].clone(), v[3].clone())
    }
}

impl fmt::Display for LinkClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "({}, {}, {}, {})",
            self.lambda1, self.lambda2, self.r1, self.r2
        )
    }
}

/// PL isotopy class of a 2-component sphere link: only the linking
/// coefficients survive.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PlLinkClass {
    lambda1: BigInt,
    lambda2: BigInt,
}

impl PlLinkClass {
    pub fn new(
        lambda1: impl Into<BigInt>,
        lambda2: impl Into<BigInt>,
    ) -> Result<Self, LinkGroupError> {
        let (lambda1, lambda2) = (lambda1.into(), lambda2.into());
        if (&lambda1 - &lambda2).mod_floor(&BigInt::from(2)) != BigInt::zero() {
            return Err(LinkGroupError::ParityViolation { lambda1, lambda2 });
        }
        Ok(PlLinkClass { lambda1, lambda2 })
    }

    pub fn lambda1(&self) -> &BigInt {
        &self.lambda1
    }

    pub fn lambda2(&self) -> &BigInt {
        &self.lambda2
    }

    pub fn add(&self, other: &PlLinkClass) -> PlLinkClass {
        PlLinkClass {
            lambda1: &self.lambda1 + &other.lambda1,
            lambda2: &self.lambda2 + &other.lambda2,
        }
    }

    pub fn is_trivial(&self) -> bool {
        self.lambda1.is_zero() && self.lambda2.is_zero()
    }

    pub fn to_vec(&self) -> Vec<BigInt> {
        vec![self.lambda1.clone(), self.lambda2.clone()]
    }
}

impl fmt::Display for PlLinkClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {})", self.lambda1, self.lambda2)
    }
}

/// Haefliger invariant of a connected sum of two knots linked with
/// coefficients `lam_ab = lambda(A,B)` and `lam_ba = lambda(B,A)`:
/// `r(A#B) = r(A) + r(B) + (lambda(A,B) + lambda(B,A)) / 2`.
///
/// The half-sum is an integer for realizable data; an odd sum is rejected.
pub fn knot_sum(
    r_a: &KnotClass,
    r_b: &KnotClass,
    lam_ab: &BigInt,
    lam_ba: &BigInt,
) -> Result<KnotClass, LinkGroupError> {
    let s = lam_ab + lam_ba;
    if s.is_odd() {
        return Err(LinkGroupError::OddLinkingSum(s));
    }
    Ok(KnotClass {
        r: &r_a.r + &r_b.r + s / BigInt::from(2),
    })
}

/// Linking coefficient of a left connected sum against a fixed third
/// component: `lambda(A#B, C) = lambda(A, C) + lambda(A, B)`.
///
/// Only the left slot is additive. Summing in the right slot is not:
/// for Borromean rings `A, B, C` one has `lambda(A, B) = lambda(A, C) = 0`
/// yet `lambda(A, B#C) = 2`, so no such formula exists and this function
/// deliberately does not attempt one.
pub fn lambda_of_sum(lam_ac: &BigInt, lam_ab: &BigInt) -> BigInt {
    lam_ac + lam_ab
}

/// Forgets the smooth knotting data of a link class.
pub fn pl_forget(link: &LinkClass) -> PlLinkClass {
    PlLinkClass {
        lambda1: link.lambda1.clone(),
        lambda2: link.lambda2.clone(),
    }
}

/// Whether a knot `g` stabilizes an embedding over a single manifold whose
/// Whitney invariant has divisibility `d`: true iff `r(g)` is a multiple
/// of `d`. With `d = 0` only the trivial knot stabilizes.
pub fn knot_stabilizer_check(d: &BigInt, rg: &KnotClass) -> bool {
    assert!(!d.is_negative(), "divisibility is non-negative");
    if d.is_zero() {
        rg.r.is_zero()
    } else {
        rg.r.mod_floor(d).is_zero()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn b(x: i64) -> BigInt {
        BigInt::from(x)
    }

    fn lc(a: i64, b: i64, c: i64, d: i64) -> LinkClass {
        LinkClass::new(a, b, c, d).unwrap()
    }

    #[test]
    fn constructor_enforces_parity() {
        assert!(LinkClass::new(0, 0, 0, 0).unwrap().is_trivial());
        assert!(matches!(
            LinkClass::new(1, 0, 0, 0),
            Err(LinkGroupError::ParityViolation { .. })
        ));
        assert!(LinkClass::new(0, 2, 1, 0).is_ok());
        assert!(LinkClass::new(-3, 5, 0, 0).is_ok());
        assert!(PlLinkClass::new(1, 2).is_err());
        assert!(PlLinkClass::new(1, 3).is_ok());
    }

    #[test]
    fn group_operations() {
        let x = lc(0, 2, 1, 0);
        let y = lc(2, 2, 0, 0);
        assert_eq!(x.add(&y), lc(2, 4, 1, 0));
        assert!(x.add(&x.neg()).is_trivial());
        assert_eq!(x.sub(&y), lc(-2, 0, 1, 0));
    }

    #[test]
    fn unlinked_vs_trivial() {
        let g = lc(0, 0, 1, 0);
        assert!(g.is_unlinked());
        assert!(!g.is_trivial());
        assert!(LinkClass::trivial().is_unlinked());
    }

    #[test]
    fn knot_sum_formula() {
        let zero = KnotClass::new(0);
        assert_eq!(knot_sum(&zero, &zero, &b(0), &b(0)).unwrap(), zero);
        assert_eq!(
            knot_sum(&KnotClass::new(1), &KnotClass::new(2), &b(0), &b(0)).unwrap(),
            KnotClass::new(3)
        );
        assert_eq!(knot_sum(&zero, &zero, &b(1), &b(1)).unwrap(), KnotClass::new(1));
        assert!(matches!(
            knot_sum(&zero, &zero, &b(1), &b(2)),
            Err(LinkGroupError::OddLinkingSum(_))
        ));
    }

    #[test]
    fn lambda_left_additivity() {
        assert_eq!(lambda_of_sum(&b(0), &b(0)), b(0));
        assert_eq!(lambda_of_sum(&b(2), &b(3)), b(5));
    }

    #[test]
    fn pl_forgetting() {
        assert_eq!(pl_forget(&lc(0, 2, 1, 0)), PlLinkClass::new(0, 2).unwrap());
        // PL-unlinked despite smooth knotting of both components
        let g = pl_forget(&lc(0, 0, 5, 7));
        assert!(g.is_trivial());
        assert_eq!(pl_forget(&lc(2, 4, 0, 0)), PlLinkClass::new(2, 4).unwrap());
    }

    #[test]
    fn knot_stabilizer_multiples() {
        assert!(!knot_stabilizer_check(&b(0), &KnotClass::new(1)));
        assert!(knot_stabilizer_check(&b(0), &KnotClass::new(0)));
        assert!(knot_stabilizer_check(&b(3), &KnotClass::new(6)));
        assert!(knot_stabilizer_check(&b(3), &KnotClass::new(-6)));
        assert!(!knot_stabilizer_check(&b(3), &KnotClass::new(4)));
    }
}
