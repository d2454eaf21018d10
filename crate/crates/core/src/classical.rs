//! Ordinary Bernoulli numbers B_n and polynomials B_n(x).
//!
//! Built from their own recurrence, never from the degenerate layer, so
//! comparisons at λ = 0 pit two independent computations against each other.

use crate::arith::{binomial_row, BiPoly, CycRat, Rat, Ring};
use crate::dirichlet::DirichletCharacter;
use crate::error::{Error, Result};

#[derive(Clone, Debug)]
pub struct BernoulliTable {
    numbers: Vec<Rat>,
    polys: Vec<BiPoly>,
}

impl BernoulliTable {
    pub fn new(n_max: usize) -> Self {
        // Σ_{k=0}^{n} C(n+1,k) B_k = 0 for n ≥ 1.
        let mut numbers = vec![Rat::one()];
        for n in 1..=n_max {
            let row = binomial_row(n as u64 + 1);
            let s: Rat = numbers.iter().zip(&row).map(|(b, c)| b.mul_int(c)).sum();
            numbers.push(-s.div_int(&row[n]));
        }
        let polys = (0..=n_max)
            .map(|n| {
                let row = binomial_row(n as u64);
                BiPoly::from_terms((0..=n).map(|l| (((n - l) as u32, 0), numbers[l].mul_int(&row[l]))))
            })
            .collect();
        BernoulliTable { numbers, polys }
    }

    pub fn n_max(&self) -> usize {
        self.numbers.len() - 1
    }

    fn check(&self, n: usize) -> Result<()> {
        if n > self.n_max() {
            return Err(Error::OutOfRange { index: n, max: self.n_max() });
        }
        Ok(())
    }

    pub fn number(&self, n: usize) -> Result<&Rat> {
        self.check(n)?;
        Ok(&self.numbers[n])
    }

    /// B_n(x) as a polynomial in `x` alone.
    pub fn poly(&self, n: usize) -> Result<&BiPoly> {
        self.check(n)?;
        Ok(&self.polys[n])
    }

    /// B_{n,χ} = d^{n-1} Σ_a χ(a) B_n(a/d).
    pub fn gen_bernoulli_chi(&self, n: usize, chi: &DirichletCharacter) -> Result<CycRat> {
        let poly = self.poly(n)?;
        let d = chi.modulus();
        let mut acc = CycRat::zero();
        for (a, value) in chi.values().iter().enumerate() {
            if value.is_zero() {
                continue;
            }
            let b = poly.eval_x(&Rat::new(a as u64, d)).coeff(0);
            acc = acc.add_ref(&value.scale(&b));
        }
        Ok(acc.scale(&Rat::from(d).pow(n as i32 - 1)))
    }
}
