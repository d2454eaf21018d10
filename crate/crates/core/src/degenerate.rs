//! Degenerate Bernoulli polynomials β_n(x|λ) and numbers β_n(λ) = β_n(0|λ).
//!
//! The table is built by the triangular solve
//!
//! ```text
//! β_n(x|λ) = (x|λ)_n − Σ_{l=1}^{n} (1|λ)_{l+1}/(l+1) · C(n,l) · β_{n−l}(x|λ)
//! ```
//!
//! whose pivot `(1|λ)_1 = 1` never vanishes. Two further routes, the umbral
//! sum over β_l(λ)·(x|λ)_{n−l} and direct division of generating functions,
//! exist to cross-check it. The `*_check` functions compare exact
//! polynomials and return an [`IdentityReport`] instead of failing.

use crate::arith::{binomial_row, factorial, BiPoly, Rat, Ring, TruncSeries, UniPoly};
use crate::classical::BernoulliTable;
use crate::error::{Error, Result};
use crate::report::{params, IdentityReport};
use crate::stirling::{falling_factorial, falling_factorial_at, StirlingTable};

/// `(1|λ)_{l+1}/(l+1)` for l = 0..=n_max, the EGF coefficients of
/// `((1+λt)^{1/λ} − 1)/t`.
fn pivot_coeffs(c: &Rat, n_max: usize) -> Vec<UniPoly<Rat>> {
    (0..=n_max).map(|l| falling_factorial_at(c, l + 1).scale(&Rat::new(1, l as u64 + 1))).collect()
}

#[derive(Clone, Debug)]
pub struct DegenBernoulliTable {
    polys: Vec<BiPoly>,
    numbers: Vec<UniPoly<Rat>>,
}

impl DegenBernoulliTable {
    pub fn new(n_max: usize) -> Self {
        let pivots: Vec<BiPoly> = pivot_coeffs(&Rat::one(), n_max).iter().map(BiPoly::from_lambda_poly).collect();
        let mut polys: Vec<BiPoly> = Vec::with_capacity(n_max + 1);
        for n in 0..=n_max {
            let row = binomial_row(n as u64);
            let mut beta = falling_factorial(n);
            for l in 1..=n {
                let term = (&pivots[l] * &polys[n - l]).scale(&Rat::from_int(row[l].clone()));
                beta = &beta - &term;
            }
            polys.push(beta);
        }
        Self::from_polys(polys)
    }

    /// Wraps precomputed polynomials; β_n(λ) is taken as their `x = 0` part.
    pub fn from_polys(polys: Vec<BiPoly>) -> Self {
        assert!(!polys.is_empty(), "table needs at least β_0");
        let numbers = polys.iter().map(|p| p.eval_x(&Rat::zero())).collect();
        DegenBernoulliTable { polys, numbers }
    }

    /// Copy of the table with one coefficient of β_n shifted by `delta`.
    pub fn perturbed(&self, n: usize, deg_x: u32, deg_lambda: u32, delta: &Rat) -> Result<Self> {
        self.check(n)?;
        let mut polys = self.polys.clone();
        polys[n] = polys[n].perturbed(deg_x, deg_lambda, delta);
        Ok(Self::from_polys(polys))
    }

    pub fn n_max(&self) -> usize {
        self.polys.len() - 1
    }

    fn check(&self, n: usize) -> Result<()> {
        if n > self.n_max() {
            return Err(Error::OutOfRange { index: n, max: self.n_max() });
        }
        Ok(())
    }

    /// β_n(x|λ).
    pub fn beta(&self, n: usize) -> Result<&BiPoly> {
        self.check(n)?;
        Ok(&self.polys[n])
    }

    /// β_n(λ) = β_n(0|λ).
    pub fn beta_number(&self, n: usize) -> Result<&UniPoly<Rat>> {
        self.check(n)?;
        Ok(&self.numbers[n])
    }

    pub fn polys(&self) -> &[BiPoly] {
        &self.polys
    }

    pub fn numbers(&self) -> &[UniPoly<Rat>] {
        &self.numbers
    }
}

/// β_n(x|λ) by the triangular solve.
pub fn beta_poly_recurrence(n: usize) -> BiPoly {
    DegenBernoulliTable::new(n).polys.pop().expect("non-empty")
}

/// `Σ_l C(n,l) β_l(λ) (x|λ)_{n−l}`, using the table's β_l(λ).
pub fn beta_poly_umbral(table: &DegenBernoulliTable, n: usize) -> Result<BiPoly> {
    table.check(n)?;
    let row = binomial_row(n as u64);
    let mut acc = BiPoly::zero();
    for l in 0..=n {
        let b = BiPoly::from_lambda_poly(&table.numbers[l]);
        acc.add_assign_ref(&(&b * &falling_factorial(n - l)).scale(&Rat::from_int(row[l].clone())));
    }
    Ok(acc)
}

/// β_0(x|λ), …, β_{n_max}(x|λ) as the coefficients of
/// `t(1+λt)^{x/λ} / ((1+λt)^{1/λ} − 1)`, computed by series division after
/// cancelling one factor of `t` from both sides.
pub fn series_oracle(n_max: usize) -> Vec<BiPoly> {
    let num = TruncSeries::from_fn(n_max, falling_factorial);
    let den = TruncSeries::from_fn(n_max + 1, |l| {
        if l == 0 {
            BiPoly::zero()
        } else {
            BiPoly::from_lambda_poly(&falling_factorial_at(&Rat::one(), l))
        }
    })
    .div_t()
    .expect("zero constant term");
    num.divide(&den).expect("constant term (1|λ)_1 = 1").into_coeffs()
}

/// β_0(c|λ), …, β_{n_max}(c|λ) for a fixed rational `c`, by the same
/// triangular solve specialized to `x = c`. Much cheaper than the full table
/// when only values along a line are needed.
pub fn beta_at_x(n_max: usize, c: &Rat) -> Vec<UniPoly<Rat>> {
    let pivots = pivot_coeffs(&Rat::one(), n_max);
    let mut out: Vec<UniPoly<Rat>> = Vec::with_capacity(n_max + 1);
    for n in 0..=n_max {
        let row = binomial_row(n as u64);
        let mut beta = falling_factorial_at(c, n);
        for l in 1..=n {
            let term = pivots[l].mul_ref(&out[n - l]).scale(&Rat::from_int(row[l].clone()));
            beta = beta.sub_ref(&term);
        }
        out.push(beta);
    }
    out
}

fn n_param(n: usize) -> crate::report::Params {
    params([("n", n.into())])
}

/// Table entry against the umbral sum.
pub fn umbral_route_check(table: &DegenBernoulliTable, n: usize) -> Result<IdentityReport> {
    let residual = table.beta(n)? - &beta_poly_umbral(table, n)?;
    Ok(IdentityReport::check("thm1.umbral", n_param(n), &residual))
}

/// Table entry against an independently computed series-oracle entry.
pub fn series_route_check(table: &DegenBernoulliTable, oracle: &[BiPoly], n: usize) -> Result<IdentityReport> {
    let want = oracle.get(n).ok_or(Error::OutOfRange { index: n, max: oracle.len().saturating_sub(1) })?;
    let residual = table.beta(n)? - want;
    Ok(IdentityReport::check("eq7.series", n_param(n), &residual))
}

/// β_n(x|0) = B_n(x).
pub fn degeneration_check(table: &DegenBernoulliTable, classical: &BernoulliTable, n: usize) -> Result<IdentityReport> {
    let residual = &table.beta(n)?.eval_lambda(&Rat::zero()) - classical.poly(n)?;
    Ok(IdentityReport::check("eq8.degeneration", n_param(n), &residual))
}

/// β_n(1) = δ_{n,0}: at λ = 1 the generating function is identically 1.
pub fn lambda_one_check(table: &DegenBernoulliTable, n: usize) -> Result<IdentityReport> {
    let residual = table.beta_number(n)?.eval(&Rat::one()) - Rat::from(u32::from(n == 0));
    Ok(IdentityReport::check("beta.lambda_one", n_param(n), &residual))
}

/// deg_λ β_n(λ) ≤ n and deg_x β_n(x|λ) = n.
pub fn degree_check(table: &DegenBernoulliTable, n: usize) -> Result<IdentityReport> {
    let number_ok = table.beta_number(n)?.degree().map_or(true, |d| d <= n);
    let poly_ok = table.beta(n)?.degree_x() == Some(n as u32);
    Ok(if number_ok && poly_ok {
        IdentityReport::check("beta.degree", n_param(n), &BiPoly::zero())
    } else {
        IdentityReport::failure(
            "beta.degree",
            n_param(n),
            format!(
                "deg_l beta_n(l) = {:?}, deg_x beta_n(x|l) = {:?}",
                table.beta_number(n)?.degree(),
                table.beta(n)?.degree_x()
            ),
        )
    })
}

/// β_n(1|λ) − β_n(λ) = δ_{1,n} for every n ≤ n_max.
pub fn reflection_check(table: &DegenBernoulliTable, n_max: usize) -> Result<Vec<IdentityReport>> {
    (0..=n_max)
        .map(|n| {
            let diff = table.beta(n)?.eval_x(&Rat::one()).sub_ref(table.beta_number(n)?);
            let residual = diff.sub_ref(&UniPoly::constant(Rat::from(u32::from(n == 1))));
            Ok(IdentityReport::check("eq11.reflection", n_param(n), &residual))
        })
        .collect()
}

/// `d^{n−1} Σ_{a<d} β_n((a+x)/d | λ/d)`.
pub fn multiplication_rhs(beta: &BiPoly, n: usize, d: u64) -> BiPoly {
    let mut acc = BiPoly::zero();
    for a in 0..d {
        acc.add_assign_ref(&beta.substitute(&Rat::from(a), d));
    }
    acc.scale(&Rat::from(d).pow(n as i32 - 1))
}

pub fn multiplication_check(table: &DegenBernoulliTable, n: usize, d: u64) -> Result<IdentityReport> {
    if d == 0 {
        return Err(Error::Config("multiplier d must be positive".into()));
    }
    let beta = table.beta(n)?;
    let residual = beta - &multiplication_rhs(beta, n, d);
    Ok(IdentityReport::check("thm2.multiplication", params([("n", n.into()), ("d", d.into())]), &residual))
}

/// `Σ_{l=0}^{n−1} (l|λ)_m` by literal summation.
pub fn power_sum(m: usize, n: u64) -> UniPoly<Rat> {
    let ff = falling_factorial(m);
    (0..n).fold(UniPoly::zero(), |acc, l| acc.add_ref(&ff.eval_x(&Rat::from(l))))
}

/// Literal power sum against `(β_{m+1}(n|λ) − β_{m+1}(λ))/(m+1)`.
pub fn power_sum_check(table: &DegenBernoulliTable, m: usize, n: u64) -> Result<IdentityReport> {
    let beta = table.beta(m + 1)?;
    let closed = beta.eval_x(&Rat::from(n)).sub_ref(table.beta_number(m + 1)?).scale(&Rat::new(1, m as u64 + 1));
    let residual = power_sum(m, n).sub_ref(&closed);
    Ok(IdentityReport::check("thm3.power_sum", params([("m", m.into()), ("n", n.into())]), &residual))
}

/// λ = 0 limit of the power sum against `(B_{m+1}(n) − B_{m+1})/(m+1)`.
pub fn classical_power_sum_check(classical: &BernoulliTable, m: usize, n: u64) -> Result<IdentityReport> {
    let direct = power_sum(m, n).eval(&Rat::zero());
    let b = classical.poly(m + 1)?;
    let closed = (b.eval(&Rat::from(n), &Rat::zero()) - classical.number(m + 1)?.clone()) / Rat::from(m as u64 + 1);
    Ok(IdentityReport::check("thm3.classical_limit", params([("m", m.into()), ("n", n.into())]), &(direct - closed)))
}

/// `Σ_m B_m(x) λ^{n−m} S_1(n,m) = Σ_l l!/(l+1) C(n,l) (−λ)^l β_{n−l}(x|λ)`.
pub fn stirling1_transform_check(
    table: &DegenBernoulliTable,
    stirling: &StirlingTable,
    classical: &BernoulliTable,
    n: usize,
) -> Result<IdentityReport> {
    let mut lhs = BiPoly::zero();
    for (m, s) in stirling.row1(n)?.iter().enumerate() {
        let lam = BiPoly::monomial(Rat::from_int(s.clone()), 0, (n - m) as u32);
        lhs.add_assign_ref(&(classical.poly(m)? * &lam));
    }
    let row = binomial_row(n as u64);
    let mut rhs = BiPoly::zero();
    for l in 0..=n {
        let sign = if l % 2 == 0 { 1 } else { -1 };
        let c = Rat::from_int(factorial(l as u64) * &row[l] * sign) / Rat::from(l as u64 + 1);
        rhs.add_assign_ref(&(table.beta(n - l)? * &BiPoly::monomial(c, 0, l as u32)));
    }
    Ok(IdentityReport::check("thm4.stirling1", n_param(n), &(&lhs - &rhs)))
}

/// `(B_{n+1}(x+λ) − B_{n+1}(x))/(n+1) = Σ_m S_2(n,m) λ^{n−m+1} β_m(x|λ)`.
pub fn stirling2_transform_check(
    table: &DegenBernoulliTable,
    stirling: &StirlingTable,
    classical: &BernoulliTable,
    n: usize,
) -> Result<IdentityReport> {
    let b = classical.poly(n + 1)?;
    let shifted = b.compose(&(&BiPoly::x() + &BiPoly::lambda()), &BiPoly::lambda());
    let lhs = (&shifted - b).scale(&Rat::new(1, n as u64 + 1));
    let mut rhs = BiPoly::zero();
    for (m, s) in stirling.row2(n)?.iter().enumerate() {
        let lam = BiPoly::monomial(Rat::from_int(s.clone()), 0, (n - m + 1) as u32);
        rhs.add_assign_ref(&(table.beta(m)? * &lam));
    }
    Ok(IdentityReport::check("thm5.stirling2", n_param(n), &(&lhs - &rhs)))
}

/// ζ(1−n, x|λ) = −β_n(x|λ)/n for n ≥ 1.
pub fn zeta_special_value(table: &DegenBernoulliTable, n: usize) -> Result<BiPoly> {
    if n == 0 {
        return Err(Error::ZetaPole);
    }
    Ok(table.beta(n)?.scale(&Rat::new(-1, n as u64)))
}

/// λ = 0 specialization of ζ(1−n, x|λ) against the classical Hurwitz value
/// ζ(1−n, x) = −B_n(x)/n.
pub fn zeta_check(table: &DegenBernoulliTable, classical: &BernoulliTable, n: usize) -> Result<IdentityReport> {
    let z = zeta_special_value(table, n)?;
    let hurwitz = classical.poly(n)?.scale(&Rat::new(-1, n as u64));
    let residual = &z.eval_lambda(&Rat::zero()) - &hurwitz;
    Ok(IdentityReport::check("thm6.zeta", n_param(n), &residual))
}
