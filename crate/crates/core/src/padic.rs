//! The distribution μ_{k,β} on X = lim (Z/dp^N Z), checked at finite level.
//!
//! ```text
//! μ_{k,β}(a + dp^N Z_p) = (dp^N)^{k−1} β_k(a/(dp^N) | λ/(dp^N))
//! ```
//!
//! λ is kept symbolic by default so a zero residual certifies an identity
//! for every λ at once. The p-adic convergence condition on λt has no
//! finite-level content and is not enforced.

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, Zero};

use crate::arith::{CycRat, Rat, Ring, UniPoly};
use crate::degenerate::DegenBernoulliTable;
use crate::dirichlet::{beta_chi_closed, DirichletCharacter};
use crate::error::{Error, Result};
use crate::report::{params, IdentityReport, Param, Params};

pub const DEFAULT_PRIME_BOUND: u64 = 1_000_000;

/// Trial division; only primes below `bound` are accepted.
pub fn check_prime(p: u64, bound: u64) -> Result<()> {
    let prime = p >= 2 && (2..).take_while(|q| q * q <= p).all(|q| p % q != 0);
    if prime && p < bound {
        Ok(())
    } else {
        Err(Error::NotPrime(p, bound))
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum LambdaMode {
    Symbolic,
    Fixed(Rat),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MeasureSpec {
    pub k: usize,
    pub d: u64,
    pub p: u64,
    pub lambda: LambdaMode,
}

impl MeasureSpec {
    pub fn new(k: usize, d: u64, p: u64, lambda: LambdaMode) -> Result<Self> {
        if d == 0 {
            return Err(Error::Config("d must be positive".into()));
        }
        check_prime(p, DEFAULT_PRIME_BOUND)?;
        Ok(MeasureSpec { k, d, p, lambda })
    }

    pub fn symbolic(k: usize, d: u64, p: u64) -> Result<Self> {
        Self::new(k, d, p, LambdaMode::Symbolic)
    }

    fn params(&self) -> Params {
        let mut out = params([("k", self.k.into()), ("d", self.d.into()), ("p", self.p.into())]);
        if let LambdaMode::Fixed(l) = &self.lambda {
            out.insert("lambda".into(), Param::Rat(l.clone()));
        }
        out
    }
}

/// The coset `a + d p^N Z_p`, with `0 ≤ a < d p^N`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CosetSpec {
    pub a: u64,
    pub d: u64,
    pub p: u64,
    pub level: u32,
}

impl CosetSpec {
    pub fn new(a: u64, d: u64, p: u64, level: u32) -> Result<Self> {
        let m = level_modulus(d, p, level)?;
        if a >= m {
            return Err(Error::CosetMismatch(format!("representative {a} not below d*p^N = {m}")));
        }
        Ok(CosetSpec { a, d, p, level })
    }

    pub fn modulus(&self) -> u64 {
        level_modulus(self.d, self.p, self.level).expect("validated at construction")
    }

    /// The p sub-cosets `a + i d p^N + d p^{N+1} Z_p`.
    pub fn children(&self) -> Result<Vec<CosetSpec>> {
        let m = self.modulus();
        (0..self.p).map(|i| CosetSpec::new(self.a + i * m, self.d, self.p, self.level + 1)).collect()
    }
}

pub fn level_modulus(d: u64, p: u64, level: u32) -> Result<u64> {
    p.checked_pow(level)
        .and_then(|q| q.checked_mul(d))
        .ok_or_else(|| Error::Config(format!("d*p^N overflows for d = {d}, p = {p}, N = {level}")))
}

#[derive(Clone, Debug, PartialEq)]
pub enum MeasureValue {
    Symbolic(UniPoly<Rat>),
    Fixed(Rat),
}

impl fmt::Display for MeasureValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            MeasureValue::Symbolic(p) => write!(f, "{p}"),
            MeasureValue::Fixed(r) => write!(f, "{r}"),
        }
    }
}

fn mu_symbolic(table: &DegenBernoulliTable, k: usize, a: u64, modulus: u64) -> Result<UniPoly<Rat>> {
    let m = Rat::from(modulus);
    let inv = Rat::new(1, modulus);
    Ok(table.beta(k)?.eval_x(&Rat::new(a, modulus)).rescale_var(&inv).scale(&m.pow(k as i32 - 1)))
}

fn check_compatible(spec: &MeasureSpec, coset: &CosetSpec) -> Result<()> {
    if spec.d != coset.d || spec.p != coset.p {
        return Err(Error::CosetMismatch(format!(
            "measure has (d, p) = ({}, {}), coset has ({}, {})",
            spec.d, spec.p, coset.d, coset.p
        )));
    }
    Ok(())
}

/// μ_{k,β}(a + d p^N Z_p).
pub fn mu_value(table: &DegenBernoulliTable, spec: &MeasureSpec, coset: &CosetSpec) -> Result<MeasureValue> {
    check_compatible(spec, coset)?;
    let sym = mu_symbolic(table, spec.k, coset.a, coset.modulus())?;
    Ok(match &spec.lambda {
        LambdaMode::Symbolic => MeasureValue::Symbolic(sym),
        LambdaMode::Fixed(l) => MeasureValue::Fixed(sym.eval(l)),
    })
}

/// Σ_i μ(a + i d p^N + d p^{N+1} Z_p) against μ(a + d p^N Z_p).
///
/// With a fixed λ the report also carries `v_p` of a nonzero residual.
pub fn distribution_check(
    table: &DegenBernoulliTable,
    spec: &MeasureSpec,
    coset: &CosetSpec,
) -> Result<IdentityReport> {
    check_compatible(spec, coset)?;
    let coarse = mu_symbolic(table, spec.k, coset.a, coset.modulus())?;
    let mut fine = UniPoly::zero();
    for child in coset.children()? {
        fine = fine.add_ref(&mu_symbolic(table, spec.k, child.a, child.modulus())?);
    }
    let residual = fine.sub_ref(&coarse);
    let mut p = spec.params();
    p.insert("N".into(), Param::from(coset.level));
    p.insert("a".into(), Param::from(coset.a));
    Ok(match &spec.lambda {
        LambdaMode::Symbolic => IdentityReport::check("thm8.distribution", p, &residual),
        LambdaMode::Fixed(l) => {
            let r = residual.eval(l);
            if let Valuation::Finite(v) = padic_valuation(&r, spec.p) {
                p.insert("v_p".into(), Param::Int(v));
            }
            IdentityReport::check("thm8.distribution", p, &r)
        }
    })
}

/// Level-N Riemann sum `Σ_{x < d p^N} χ(x) μ_{k,β}(x + d p^N Z_p)`.
pub fn integrate_character(
    table: &DegenBernoulliTable,
    spec: &MeasureSpec,
    chi: &DirichletCharacter,
    level: u32,
) -> Result<UniPoly<CycRat>> {
    if chi.modulus() != spec.d {
        return Err(Error::CosetMismatch(format!("character modulus {} != d = {}", chi.modulus(), spec.d)));
    }
    let modulus = level_modulus(spec.d, spec.p, level)?;
    let mut acc = UniPoly::<CycRat>::zero();
    for x in 0..modulus {
        let w = chi.value((x % spec.d) as i64);
        if w.is_zero() {
            continue;
        }
        let mu = mu_symbolic(table, spec.k, x, modulus)?;
        acc = acc.add_ref(&mu.map(|c| w.scale(c)));
    }
    Ok(acc)
}

/// The level-N character sum against β_{k,χ}(λ).
pub fn character_sum_check(
    table: &DegenBernoulliTable,
    spec: &MeasureSpec,
    chi: &DirichletCharacter,
    chi_index: usize,
    level: u32,
) -> Result<IdentityReport> {
    let sum = integrate_character(table, spec, chi, level)?;
    let closed = beta_chi_closed(table, spec.k, chi)?.value;
    let mut p = spec.params();
    p.insert("chi".into(), Param::from(chi_index));
    p.insert("N".into(), Param::from(level));
    Ok(IdentityReport::check("eq30.character_sum", p, &sum.sub_ref(&closed)))
}

/// p-adic valuation; `Infinite` for zero.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub enum Valuation {
    Finite(i64),
    Infinite,
}

impl fmt::Display for Valuation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Valuation::Finite(v) => write!(f, "{v}"),
            Valuation::Infinite => f.write_str("inf"),
        }
    }
}

fn int_valuation(n: &BigInt, p: &BigInt) -> i64 {
    let mut n = n.abs();
    let mut v = 0;
    loop {
        let (q, r) = n.div_rem(p);
        if !r.is_zero() {
            return v;
        }
        n = q;
        v += 1;
    }
}

/// v_p(q) = v_p(numerator) − v_p(denominator).
pub fn padic_valuation(q: &Rat, p: u64) -> Valuation {
    if q.is_zero() {
        return Valuation::Infinite;
    }
    let p = BigInt::from(p);
    Valuation::Finite(int_valuation(q.numer(), &p) - int_valuation(q.denom(), &p))
}
