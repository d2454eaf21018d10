//! Exact scalar, polynomial and series arithmetic.
//!
//! Everything here is immutable after construction and free of floating
//! point. [`Ring`] is the small common interface that lets [`UniPoly`] and
//! [`TruncSeries`] work over rationals, cyclotomic elements and bivariate
//! polynomials alike.

mod bipoly;
mod cyclotomic;
mod rat;
mod series;
mod unipoly;

pub use bipoly::BiPoly;
pub use cyclotomic::{cyclotomic_poly, CycField, CycRat};
pub use rat::Rat;
pub use series::{series_divide, TruncSeries};
pub use unipoly::UniPoly;

use num_bigint::BigInt;
use std::fmt::Debug;

/// Commutative ring with unit, plus scaling by rationals.
///
/// Methods take references so callers never clone big-number operands just
/// to combine them.
pub trait Ring: Clone + PartialEq + Debug + Send + Sync {
    fn zero() -> Self;
    fn one() -> Self;
    fn is_zero(&self) -> bool;
    fn add_ref(&self, other: &Self) -> Self;
    fn sub_ref(&self, other: &Self) -> Self;
    fn mul_ref(&self, other: &Self) -> Self;
    fn neg_ref(&self) -> Self;
    fn scale(&self, r: &Rat) -> Self;
    /// Multiplicative inverse when it is available without a gcd computation.
    fn try_inverse(&self) -> Option<Self>;

    fn add_assign_ref(&mut self, other: &Self) {
        *self = self.add_ref(other);
    }

    fn pow(&self, mut exp: u64) -> Self {
        let mut base = self.clone();
        let mut acc = Self::one();
        while exp > 0 {
            if exp & 1 == 1 {
                acc = acc.mul_ref(&base);
            }
            exp >>= 1;
            if exp > 0 {
                base = base.mul_ref(&base);
            }
        }
        acc
    }
}

impl Ring for Rat {
    fn zero() -> Self {
        Rat::zero()
    }
    fn one() -> Self {
        Rat::one()
    }
    fn is_zero(&self) -> bool {
        Rat::is_zero(self)
    }
    fn add_ref(&self, other: &Self) -> Self {
        self + other
    }
    fn sub_ref(&self, other: &Self) -> Self {
        self - other
    }
    fn mul_ref(&self, other: &Self) -> Self {
        self * other
    }
    fn neg_ref(&self) -> Self {
        -self
    }
    fn scale(&self, r: &Rat) -> Self {
        self * r
    }
    fn try_inverse(&self) -> Option<Self> {
        self.recip()
    }
    fn add_assign_ref(&mut self, other: &Self) {
        *self += other;
    }
}

/// Binomial coefficient C(n, k); zero when k > n.
pub fn binomial(n: u64, k: u64) -> BigInt {
    if k > n {
        return BigInt::from(0);
    }
    let k = k.min(n - k);
    let mut acc = BigInt::from(1);
    for i in 0..k {
        acc *= n - i;
        acc /= i + 1;
    }
    acc
}

/// Row `n` of Pascal's triangle.
pub fn binomial_row(n: u64) -> Vec<BigInt> {
    let mut row = Vec::with_capacity(n as usize + 1);
    let mut c = BigInt::from(1);
    row.push(c.clone());
    for k in 0..n {
        c = c * (n - k) / (k + 1);
        row.push(c.clone());
    }
    row
}

pub fn factorial(n: u64) -> BigInt {
    (1..=n).fold(BigInt::from(1), |acc, i| acc * i)
}
