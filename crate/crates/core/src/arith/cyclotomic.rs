use std::fmt;
use std::sync::Arc;

use super::{Rat, Ring, UniPoly};

/// The m-th cyclotomic polynomial Φ_m, by exact division of `y^m - 1` by
/// Φ_d for every proper divisor d of m.
pub fn cyclotomic_poly(m: u64) -> UniPoly<Rat> {
    assert!(m >= 1, "cyclotomic order must be positive");
    let mut divisors: Vec<u64> = (1..m).filter(|d| m % d == 0).collect();
    divisors.sort_unstable();
    let mut num = UniPoly::monomial(Rat::one(), m as usize).sub_ref(&UniPoly::one());
    for d in divisors {
        let (q, r) = num.div_rem(&cyclotomic_poly(d)).expect("cyclotomic polynomials are monic");
        debug_assert!(r.is_zero());
        num = q;
    }
    num
}

/// Q(ζ_m) presented as Q[y]/(Φ_m).
#[derive(Debug, PartialEq)]
pub struct CycField {
    m: u64,
    phi: UniPoly<Rat>,
}

impl CycField {
    pub fn new(m: u64) -> Arc<Self> {
        Arc::new(CycField { m, phi: cyclotomic_poly(m) })
    }

    pub fn order(&self) -> u64 {
        self.m
    }

    pub fn modulus(&self) -> &UniPoly<Rat> {
        &self.phi
    }

    /// Extension degree φ(m).
    pub fn degree(&self) -> usize {
        self.phi.degree().unwrap_or(0)
    }
}

/// Element of a cyclotomic field, stored as its reduced residue.
///
/// An element whose residue is constant is a plain rational and combines
/// with elements of any field; arithmetic between two non-rational elements
/// of different orders is a logic error and panics.
#[derive(Clone, Debug)]
pub struct CycRat {
    field: Option<Arc<CycField>>,
    residue: UniPoly<Rat>,
}

impl CycRat {
    pub fn from_rat(r: Rat) -> Self {
        CycRat { field: None, residue: UniPoly::constant(r) }
    }

    /// Reduces `residue` modulo Φ_m.
    pub fn from_residue(field: &Arc<CycField>, residue: UniPoly<Rat>) -> Self {
        let residue = if residue.degree().unwrap_or(0) >= field.degree() {
            residue.div_rem(&field.phi).expect("monic modulus").1
        } else {
            residue
        };
        CycRat { field: Some(field.clone()), residue }
    }

    /// ζ_m^e, with e taken mod m.
    pub fn zeta_pow(field: &Arc<CycField>, e: u64) -> Self {
        Self::from_residue(field, UniPoly::monomial(Rat::one(), (e % field.m) as usize))
    }

    pub fn order(&self) -> u64 {
        self.field.as_ref().map_or(1, |f| f.m)
    }

    pub fn field(&self) -> Option<&Arc<CycField>> {
        self.field.as_ref()
    }

    pub fn residue(&self) -> &UniPoly<Rat> {
        &self.residue
    }

    pub fn is_rational(&self) -> bool {
        self.residue.degree().unwrap_or(0) == 0
    }

    pub fn as_rat(&self) -> Option<Rat> {
        self.is_rational().then(|| self.residue.coeff(0))
    }

    fn joint_field(&self, other: &Self) -> Option<Arc<CycField>> {
        match (&self.field, &other.field) {
            (None, f) | (f, None) => f.clone(),
            (Some(a), Some(b)) if a.m == b.m => Some(a.clone()),
            (Some(a), Some(b)) => {
                if other.is_rational() {
                    Some(a.clone())
                } else if self.is_rational() {
                    Some(b.clone())
                } else {
                    panic!("mixing elements of Q(ζ_{}) and Q(ζ_{})", a.m, b.m)
                }
            }
        }
    }

    fn with(field: Option<Arc<CycField>>, residue: UniPoly<Rat>) -> Self {
        match field {
            Some(f) => Self::from_residue(&f, residue),
            None => CycRat { field: None, residue },
        }
    }
}

impl PartialEq for CycRat {
    fn eq(&self, other: &Self) -> bool {
        self.residue == other.residue && (self.is_rational() || self.order() == other.order())
    }
}

impl From<Rat> for CycRat {
    fn from(r: Rat) -> Self {
        CycRat::from_rat(r)
    }
}

impl fmt::Display for CycRat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.residue.render("z"))
    }
}

impl Ring for CycRat {
    fn zero() -> Self {
        CycRat::from_rat(Rat::zero())
    }
    fn one() -> Self {
        CycRat::from_rat(Rat::one())
    }
    fn is_zero(&self) -> bool {
        self.residue.is_zero()
    }
    fn add_ref(&self, other: &Self) -> Self {
        let field = self.joint_field(other);
        CycRat { field, residue: self.residue.add_ref(&other.residue) }
    }
    fn sub_ref(&self, other: &Self) -> Self {
        let field = self.joint_field(other);
        CycRat { field, residue: self.residue.sub_ref(&other.residue) }
    }
    fn mul_ref(&self, other: &Self) -> Self {
        let field = self.joint_field(other);
        Self::with(field, self.residue.mul_ref(&other.residue))
    }
    fn neg_ref(&self) -> Self {
        CycRat { field: self.field.clone(), residue: self.residue.neg_ref() }
    }
    fn scale(&self, r: &Rat) -> Self {
        CycRat { field: self.field.clone(), residue: self.residue.scale(r) }
    }
    /// Only rational elements are inverted; no field-inverse computation.
    fn try_inverse(&self) -> Option<Self> {
        self.as_rat().and_then(|r| r.recip()).map(CycRat::from_rat)
    }
}
