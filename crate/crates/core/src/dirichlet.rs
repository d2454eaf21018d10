//! Dirichlet characters with exact values in Q(ζ_m), and the
//! character-twisted degenerate Bernoulli numbers β_{n,χ}(λ).
//!
//! All characters of one modulus d take values in the same field Q(ζ_m),
//! m being the exponent of (Z/dZ)*. Characters are only required to be
//! period-d and completely multiplicative; primitivity is never assumed.

use std::collections::{BTreeMap, VecDeque};
use std::sync::Arc;

use num_integer::Integer;
use serde::{Deserialize, Serialize};

use crate::arith::{BiPoly, CycField, CycRat, Rat, Ring, TruncSeries, UniPoly};
use crate::classical::BernoulliTable;
use crate::degenerate::DegenBernoulliTable;
use crate::error::{Error, Result};
use crate::report::{params, IdentityReport, Params};
use crate::stirling::falling_factorial_at;

pub const DEFAULT_MODULUS_BOUND: u64 = 64;

#[derive(Clone, Debug, PartialEq)]
pub struct DirichletCharacter {
    modulus: u64,
    field: Arc<CycField>,
    values: Vec<CycRat>,
}

impl DirichletCharacter {
    /// Builds and validates a character from its value table.
    pub fn new(modulus: u64, order: u64, residues: Vec<UniPoly<Rat>>) -> Result<Self> {
        if modulus == 0 || order == 0 {
            return Err(Error::InvalidCharacter("modulus and order must be positive".into()));
        }
        let field = CycField::new(order);
        let values = residues.into_iter().map(|r| CycRat::from_residue(&field, r)).collect();
        let chi = DirichletCharacter { modulus, field, values };
        chi.validate()?;
        Ok(chi)
    }

    pub fn modulus(&self) -> u64 {
        self.modulus
    }

    /// Order m of the ambient root of unity ζ_m.
    pub fn order(&self) -> u64 {
        self.field.order()
    }

    pub fn values(&self) -> &[CycRat] {
        &self.values
    }

    /// χ(a) for any integer `a` (reduced mod d).
    pub fn value(&self, a: i64) -> &CycRat {
        &self.values[a.rem_euclid(self.modulus as i64) as usize]
    }

    pub fn is_trivial(&self) -> bool {
        self.values.iter().all(|v| v.is_zero() || *v == CycRat::one())
    }

    /// Checks every defining property, multiplicativity over all pairs.
    pub fn validate(&self) -> Result<()> {
        let d = self.modulus;
        let bad = |msg: String| Err(Error::InvalidCharacter(msg));
        if self.values.len() as u64 != d {
            return bad(format!("expected {d} values, got {}", self.values.len()));
        }
        for (a, v) in self.values.iter().enumerate() {
            let unit = (a as u64).gcd(&d) == 1;
            if unit == v.is_zero() {
                return bad(format!("chi({a}) = {v} but gcd({a}, {d}) = {}", (a as u64).gcd(&d)));
            }
            if unit && v.pow(self.order()) != CycRat::one() {
                return bad(format!("chi({a})^{} != 1", self.order()));
            }
        }
        let one_index = (1 % d) as usize;
        if self.values[one_index] != CycRat::one() {
            return bad(format!("chi(1) = {}", self.values[one_index]));
        }
        for a in 0..d {
            for b in a..d {
                let lhs = &self.values[((a * b) % d) as usize];
                let rhs = self.values[a as usize].mul_ref(&self.values[b as usize]);
                if *lhs != rhs {
                    return bad(format!("chi({a}*{b}) != chi({a}) chi({b})"));
                }
            }
        }
        Ok(())
    }
}

fn mul_order(a: u64, d: u64) -> u64 {
    let mut x = a % d;
    let mut k = 1;
    while x != 1 % d {
        x = x * a % d;
        k += 1;
    }
    k
}

/// All φ(d) characters modulo `d`, trivial first, with the default bound.
pub fn enumerate_characters(d: u64) -> Result<Vec<DirichletCharacter>> {
    enumerate_characters_bounded(d, DEFAULT_MODULUS_BOUND)
}

/// Enumerates the homomorphisms (Z/dZ)* → μ_m by brute force: pick a
/// generating set greedily, try every assignment of exponents to the
/// generators, and keep the assignments that propagate consistently over
/// the whole group.
pub fn enumerate_characters_bounded(d: u64, bound: u64) -> Result<Vec<DirichletCharacter>> {
    if d == 0 {
        return Err(Error::InvalidCharacter("modulus must be positive".into()));
    }
    if d > bound {
        return Err(Error::ModulusTooLarge { modulus: d, bound });
    }
    let units: Vec<u64> = (0..d).filter(|a| a.gcd(&d) == 1).collect();
    let orders: BTreeMap<u64, u64> = units.iter().map(|&u| (u, mul_order(u, d))).collect();
    let m = orders.values().fold(1, |acc, o| acc.lcm(o));
    let identity = 1 % d;

    let mut by_order = units.clone();
    by_order.sort_by_key(|u| (std::cmp::Reverse(orders[u]), *u));
    let mut gens: Vec<u64> = Vec::new();
    let mut span = vec![identity];
    for u in by_order {
        if span.contains(&u) {
            continue;
        }
        gens.push(u);
        span = closure(&gens, d, identity);
    }

    let mut found: Vec<Vec<u64>> = Vec::new();
    let total = (m as usize).pow(gens.len() as u32);
    for code in 0..total {
        let mut c = code;
        let assignment: Vec<u64> = gens
            .iter()
            .map(|_| {
                let e = (c % m as usize) as u64;
                c /= m as usize;
                e
            })
            .collect();
        if let Some(exps) = propagate(&gens, &assignment, d, m, identity) {
            found.push(units.iter().map(|u| exps[u]).collect());
        }
    }
    found.sort();
    debug_assert_eq!(found.len(), units.len());

    let field = CycField::new(m);
    Ok(found
        .into_iter()
        .map(|exps| {
            let mut values = vec![CycRat::zero(); d as usize];
            for (u, e) in units.iter().zip(exps) {
                values[*u as usize] = CycRat::zeta_pow(&field, e);
            }
            DirichletCharacter { modulus: d, field: field.clone(), values }
        })
        .collect())
}

fn closure(gens: &[u64], d: u64, identity: u64) -> Vec<u64> {
    let mut seen = vec![identity];
    let mut queue = VecDeque::from([identity]);
    while let Some(x) = queue.pop_front() {
        for g in gens {
            let y = x * g % d;
            if !seen.contains(&y) {
                seen.push(y);
                queue.push_back(y);
            }
        }
    }
    seen
}

/// Extends generator exponents to the whole group, or `None` if the
/// assignment is not a homomorphism.
fn propagate(gens: &[u64], assignment: &[u64], d: u64, m: u64, identity: u64) -> Option<BTreeMap<u64, u64>> {
    let mut exps = BTreeMap::from([(identity, 0u64)]);
    let mut queue = VecDeque::from([identity]);
    while let Some(x) = queue.pop_front() {
        let ex = exps[&x];
        for (g, eg) in gens.iter().zip(assignment) {
            let y = x * g % d;
            let ey = (ex + eg) % m;
            match exps.get(&y) {
                Some(&prev) if prev != ey => return None,
                Some(_) => {}
                None => {
                    exps.insert(y, ey);
                    queue.push_back(y);
                }
            }
        }
    }
    Some(exps)
}

/// On-disk character table: residues are coefficient lists (ascending) of
/// each value modulo Φ_order.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct CharacterFile {
    pub modulus: u64,
    pub order: u64,
    pub values: Vec<Vec<Rat>>,
}

impl From<&DirichletCharacter> for CharacterFile {
    fn from(chi: &DirichletCharacter) -> Self {
        CharacterFile {
            modulus: chi.modulus,
            order: chi.order(),
            values: chi.values.iter().map(|v| v.residue().coeffs().to_vec()).collect(),
        }
    }
}

impl TryFrom<CharacterFile> for DirichletCharacter {
    type Error = Error;
    fn try_from(f: CharacterFile) -> Result<Self> {
        DirichletCharacter::new(f.modulus, f.order, f.values.into_iter().map(UniPoly::new).collect())
    }
}

/// Parses one character object or an array of them; every character is
/// validated.
pub fn characters_from_json(s: &str) -> Result<Vec<DirichletCharacter>> {
    #[derive(Deserialize)]
    #[serde(untagged)]
    enum OneOrMany {
        One(CharacterFile),
        Many(Vec<CharacterFile>),
    }
    let parsed: OneOrMany = serde_json::from_str(s).map_err(|e| Error::Parse(e.to_string()))?;
    let files = match parsed {
        OneOrMany::One(f) => vec![f],
        OneOrMany::Many(v) => v,
    };
    files.into_iter().map(DirichletCharacter::try_from).collect()
}

pub fn characters_to_json(chars: &[DirichletCharacter]) -> String {
    let files: Vec<CharacterFile> = chars.iter().map(CharacterFile::from).collect();
    serde_json::to_string_pretty(&files).expect("character files serialize")
}

/// β_{n,χ}(λ) as a polynomial in λ over Q(ζ_m).
#[derive(Clone, Debug, PartialEq)]
pub struct CharBeta {
    pub n: usize,
    pub value: UniPoly<CycRat>,
}

impl CharBeta {
    pub fn at_lambda_zero(&self) -> CycRat {
        self.value.coeff(0)
    }
}

fn lift(p: &UniPoly<Rat>, by: &CycRat) -> UniPoly<CycRat> {
    p.map(|c| by.scale(c))
}

/// β_n(a/d | λ/d) for a in 0..d, scaled and weighted:
/// `d^{n−1} Σ_a χ(a) β_n(a/d | λ/d)`.
pub fn beta_chi_closed(table: &DegenBernoulliTable, n: usize, chi: &DirichletCharacter) -> Result<CharBeta> {
    let beta = table.beta(n)?;
    let d = chi.modulus;
    let inv_d = Rat::new(1, d);
    let mut acc = UniPoly::<CycRat>::zero();
    for (a, w) in chi.values.iter().enumerate() {
        if w.is_zero() {
            continue;
        }
        let at = beta.eval_x(&Rat::new(a as u64, d)).rescale_var(&inv_d);
        acc = acc.add_ref(&lift(&at, w));
    }
    Ok(CharBeta { n, value: acc.scale(&Rat::from(d).pow(n as i32 - 1)) })
}

/// Coefficients 0..=n_max of
/// `t/((1+λt)^{d/λ} − 1) · Σ_a χ(a)(1+λt)^{a/λ}` by series division.
/// Uses no β table at all.
pub fn beta_chi_series(n_max: usize, chi: &DirichletCharacter) -> Result<Vec<CharBeta>> {
    let d = Rat::from(chi.modulus);
    let num = TruncSeries::from_fn(n_max, |m| {
        chi.values
            .iter()
            .enumerate()
            .filter(|(_, w)| !w.is_zero())
            .fold(UniPoly::zero(), |acc, (a, w)| acc.add_ref(&lift(&falling_factorial_at(&Rat::from(a), m), w)))
    });
    let den = TruncSeries::from_fn(n_max + 1, |l| {
        if l == 0 {
            UniPoly::zero()
        } else {
            lift(&falling_factorial_at(&d, l), &CycRat::one())
        }
    })
    .div_t()?;
    Ok(num.divide(&den)?.into_coeffs().into_iter().enumerate().map(|(n, value)| CharBeta { n, value }).collect())
}

fn chi_params(chi: &DirichletCharacter, index: usize, n: usize) -> Params {
    params([("d", chi.modulus.into()), ("chi", index.into()), ("n", n.into())])
}

pub fn validity_check(chi: &DirichletCharacter, index: usize) -> IdentityReport {
    let p = params([("d", chi.modulus.into()), ("chi", index.into())]);
    match chi.validate() {
        Ok(()) => IdentityReport::check("chars.valid", p, &BiPoly::zero()),
        Err(e) => IdentityReport::failure("chars.valid", p, e.to_string()),
    }
}

/// Closed form against the series route for one (χ, n).
pub fn route_check(
    table: &DegenBernoulliTable,
    series: &[CharBeta],
    chi: &DirichletCharacter,
    index: usize,
    n: usize,
) -> Result<IdentityReport> {
    let closed = beta_chi_closed(table, n, chi)?;
    let want = series.get(n).ok_or(Error::OutOfRange { index: n, max: series.len().saturating_sub(1) })?;
    let residual = closed.value.sub_ref(&want.value);
    Ok(IdentityReport::check("thm7.routes", chi_params(chi, index, n), &residual))
}

/// β_{n,χ}(0) = B_{n,χ}.
pub fn degeneration_check(
    table: &DegenBernoulliTable,
    classical: &BernoulliTable,
    chi: &DirichletCharacter,
    index: usize,
    n: usize,
) -> Result<IdentityReport> {
    let closed = beta_chi_closed(table, n, chi)?.at_lambda_zero();
    let residual = closed.sub_ref(&classical.gen_bernoulli_chi(n, chi)?);
    Ok(IdentityReport::check("eq6.degeneration", chi_params(chi, index, n), &residual))
}
