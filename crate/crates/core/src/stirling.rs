//! Stirling numbers and the generalized falling factorial.
//!
//! First-kind numbers are signed: `(y)_n = Σ_l S_1(n,l) y^l`.

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::arith::{BiPoly, Rat, Ring, UniPoly};
use crate::error::{Error, Result};

pub const DEFAULT_N_MAX: usize = 64;

/// Both Stirling triangles up to a fixed row, built eagerly.
#[derive(Clone, Debug)]
pub struct StirlingTable {
    s1: Vec<Vec<BigInt>>,
    s2: Vec<Vec<BigInt>>,
}

impl StirlingTable {
    pub fn new(n_max: usize) -> Self {
        let mut s1: Vec<Vec<BigInt>> = vec![vec![BigInt::one()]];
        let mut s2: Vec<Vec<BigInt>> = vec![vec![BigInt::one()]];
        for n in 0..n_max {
            let (p1, p2) = (&s1[n], &s2[n]);
            let mut r1 = vec![BigInt::zero(); n + 2];
            let mut r2 = vec![BigInt::zero(); n + 2];
            for k in 1..=n + 1 {
                let prev1 = p1.get(k).cloned().unwrap_or_default();
                let prev2 = p2.get(k).cloned().unwrap_or_default();
                // S_1(n+1,k) = S_1(n,k-1) - n S_1(n,k)
                r1[k] = &p1[k - 1] - prev1 * n;
                // S_2(n+1,k) = k S_2(n,k) + S_2(n,k-1)
                r2[k] = prev2 * k + &p2[k - 1];
            }
            s1.push(r1);
            s2.push(r2);
        }
        StirlingTable { s1, s2 }
    }

    pub fn n_max(&self) -> usize {
        self.s1.len() - 1
    }

    fn check(&self, n: usize) -> Result<()> {
        if n > self.n_max() {
            return Err(Error::OutOfRange { index: n, max: self.n_max() });
        }
        Ok(())
    }

    /// Signed S_1(n, l); zero when `l > n`.
    pub fn stirling1(&self, n: usize, l: usize) -> Result<BigInt> {
        self.check(n)?;
        Ok(self.s1[n].get(l).cloned().unwrap_or_default())
    }

    /// S_2(n, m); zero when `m > n`.
    pub fn stirling2(&self, n: usize, m: usize) -> Result<BigInt> {
        self.check(n)?;
        Ok(self.s2[n].get(m).cloned().unwrap_or_default())
    }

    pub fn row1(&self, n: usize) -> Result<&[BigInt]> {
        self.check(n)?;
        Ok(&self.s1[n])
    }

    pub fn row2(&self, n: usize) -> Result<&[BigInt]> {
        self.check(n)?;
        Ok(&self.s2[n])
    }
}

/// `(x|λ)_n = x (x - λ) ⋯ (x - (n-1)λ)`; `(x|λ)_0 = 1`.
pub fn falling_factorial(n: usize) -> BiPoly {
    (0..n).fold(BiPoly::one(), |acc, k| {
        let factor = &BiPoly::x() - &BiPoly::monomial(Rat::from(k), 0, 1);
        &acc * &factor
    })
}

/// `(c|λ)_n` as a polynomial in λ for a rational `c`.
pub fn falling_factorial_at(c: &Rat, n: usize) -> UniPoly<Rat> {
    (0..n).fold(UniPoly::one(), |acc, k| {
        let factor = UniPoly::new(vec![c.clone(), Rat::from(-(k as i64))]);
        acc.mul_ref(&factor)
    })
}
