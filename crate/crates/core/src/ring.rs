//! Minimal algebraic interfaces shared by the scalar, polynomial and
//! rational-function types, so the matrix kernels can be written once.

use std::fmt::Debug;

/// Commutative ring with identity.
pub trait Ring: Clone + PartialEq + Debug + Send + Sync {
    fn zero() -> Self;
    fn one() -> Self;
    fn is_zero(&self) -> bool;
    fn add_ref(&self, rhs: &Self) -> Self;
    fn sub_ref(&self, rhs: &Self) -> Self;
    fn mul_ref(&self, rhs: &Self) -> Self;
    fn neg_ref(&self) -> Self;
    fn from_int(n: i64) -> Self;

    fn is_one(&self) -> bool {
        *self == Self::one()
    }

    fn pow_u(&self, mut e: u64) -> Self {
        let mut base = self.clone();
        let mut acc = Self::one();
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul_ref(&base);
            }
            e >>= 1;
            if e > 0 {
                base = base.mul_ref(&base);
            }
        }
        acc
    }
}

/// Rings in which exact division (when the quotient exists) is computable.
pub trait ExactDiv: Ring {
    /// Returns `q` with `q * divisor == self`, or `None` if no such `q` exists
    /// (or `divisor` is zero).
    fn div_exact(&self, divisor: &Self) -> Option<Self>;
}

/// Fields: every nonzero element is invertible.
pub trait Field: ExactDiv {
    fn inv(&self) -> Option<Self>;
}
