use super::{binomial_row, Rat, Ring};
use crate::error::{Error, Result};

/// Exponential generating function `Σ a_n t^n/n!` truncated after `t^order`.
///
/// Products are binomial convolutions, so the stored `a_n` are exactly the
/// sequence the series generates.
#[derive(Clone, Debug, PartialEq)]
pub struct TruncSeries<C: Ring> {
    coeffs: Vec<C>,
}

impl<C: Ring> TruncSeries<C> {
    /// Pads with zeros or truncates to length `order + 1`.
    pub fn new(mut coeffs: Vec<C>, order: usize) -> Self {
        coeffs.resize(order + 1, C::zero());
        TruncSeries { coeffs }
    }

    pub fn from_fn(order: usize, f: impl FnMut(usize) -> C) -> Self {
        TruncSeries { coeffs: (0..=order).map(f).collect() }
    }

    pub fn one(order: usize) -> Self {
        Self::new(vec![C::one()], order)
    }

    /// The series `t`, i.e. EGF coefficients `[0, 1, 0, ...]`.
    pub fn t(order: usize) -> Self {
        Self::new(vec![C::zero(), C::one()], order)
    }

    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeffs(&self) -> &[C] {
        &self.coeffs
    }

    pub fn into_coeffs(self) -> Vec<C> {
        self.coeffs
    }

    pub fn coeff(&self, n: usize) -> &C {
        &self.coeffs[n]
    }

    fn check_order(&self, other: &Self) -> Result<()> {
        if self.order() != other.order() {
            return Err(Error::OrderMismatch(self.order(), other.order()));
        }
        Ok(())
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.check_order(other)?;
        Ok(TruncSeries { coeffs: self.coeffs.iter().zip(&other.coeffs).map(|(a, b)| a.add_ref(b)).collect() })
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.check_order(other)?;
        Ok(TruncSeries { coeffs: self.coeffs.iter().zip(&other.coeffs).map(|(a, b)| a.sub_ref(b)).collect() })
    }

    /// Binomial convolution `c_n = Σ_k C(n,k) a_k b_{n-k}`.
    pub fn mul(&self, other: &Self) -> Result<Self> {
        self.check_order(other)?;
        let coeffs = (0..=self.order())
            .map(|n| {
                let row = binomial_row(n as u64);
                let mut acc = C::zero();
                for (k, binom) in row.iter().enumerate() {
                    let (a, b) = (&self.coeffs[k], &other.coeffs[n - k]);
                    if a.is_zero() || b.is_zero() {
                        continue;
                    }
                    acc.add_assign_ref(&a.mul_ref(b).scale(&Rat::from_int(binom.clone())));
                }
                acc
            })
            .collect();
        Ok(TruncSeries { coeffs })
    }

    pub fn scale(&self, r: &Rat) -> Self {
        TruncSeries { coeffs: self.coeffs.iter().map(|c| c.scale(r)).collect() }
    }

    /// Solves `q · den = num` term by term. The constant term of `den` must
    /// be invertible.
    pub fn divide(&self, den: &Self) -> Result<Self> {
        self.check_order(den)?;
        let inv = den.coeffs[0].try_inverse().ok_or(Error::SeriesDivision)?;
        let mut q: Vec<C> = Vec::with_capacity(self.coeffs.len());
        for n in 0..=self.order() {
            let row = binomial_row(n as u64);
            let mut acc = self.coeffs[n].clone();
            for (k, qk) in q.iter().enumerate() {
                let dk = &den.coeffs[n - k];
                if qk.is_zero() || dk.is_zero() {
                    continue;
                }
                let term = qk.mul_ref(dk).scale(&Rat::from_int(row[k].clone()));
                acc = acc.sub_ref(&term);
            }
            q.push(acc.mul_ref(&inv));
        }
        Ok(TruncSeries { coeffs: q })
    }

    /// Divides a series with zero constant term by `t`, dropping one order:
    /// `b_n = a_{n+1} / (n+1)`.
    pub fn div_t(&self) -> Result<Self> {
        if !self.coeffs[0].is_zero() || self.order() == 0 {
            return Err(Error::SeriesDivision);
        }
        let coeffs = self.coeffs[1..].iter().enumerate().map(|(n, a)| a.scale(&Rat::new(1, n as u64 + 1))).collect();
        Ok(TruncSeries { coeffs })
    }

    /// Multiplies by `t` at the same order: `b_n = n a_{n-1}`.
    pub fn mul_t(&self) -> Self {
        let coeffs = (0..=self.order())
            .map(|n| if n == 0 { C::zero() } else { self.coeffs[n - 1].scale(&Rat::from(n)) })
            .collect();
        TruncSeries { coeffs }
    }
}

/// Free-function form of [`TruncSeries::divide`].
pub fn series_divide<C: Ring>(num: &TruncSeries<C>, den: &TruncSeries<C>) -> Result<TruncSeries<C>> {
    num.divide(den)
}
