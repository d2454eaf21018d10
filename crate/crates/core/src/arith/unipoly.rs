use std::fmt;

use super::{Rat, Ring};

/// Dense univariate polynomial, coefficients in ascending degree.
///
/// The coefficient list never ends in a zero; the zero polynomial is empty.
#[derive(Clone, Debug, PartialEq)]
pub struct UniPoly<C: Ring> {
    coeffs: Vec<C>,
}

impl<C: Ring> UniPoly<C> {
    pub fn new(mut coeffs: Vec<C>) -> Self {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        UniPoly { coeffs }
    }

    pub fn zero() -> Self {
        UniPoly { coeffs: Vec::new() }
    }

    pub fn constant(c: C) -> Self {
        Self::new(vec![c])
    }

    /// `c * var^deg`
    pub fn monomial(c: C, deg: usize) -> Self {
        let mut v = vec![C::zero(); deg + 1];
        v[deg] = c;
        Self::new(v)
    }

    pub fn var() -> Self {
        Self::monomial(C::one(), 1)
    }

    pub fn coeffs(&self) -> &[C] {
        &self.coeffs
    }

    pub fn into_coeffs(self) -> Vec<C> {
        self.coeffs
    }

    pub fn coeff(&self, i: usize) -> C {
        self.coeffs.get(i).cloned().unwrap_or_else(C::zero)
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn leading(&self) -> Option<&C> {
        self.coeffs.last()
    }

    pub fn eval(&self, at: &C) -> C {
        self.coeffs.iter().rev().fold(C::zero(), |acc, c| acc.mul_ref(at).add_ref(c))
    }

    pub fn map<D: Ring>(&self, f: impl Fn(&C) -> D) -> UniPoly<D> {
        UniPoly::new(self.coeffs.iter().map(f).collect())
    }

    /// p(r·v): the i-th coefficient is multiplied by r^i.
    pub fn rescale_var(&self, r: &Rat) -> Self {
        let mut pow = Rat::one();
        let mut out = Vec::with_capacity(self.coeffs.len());
        for c in &self.coeffs {
            out.push(c.scale(&pow));
            pow = &pow * r;
        }
        Self::new(out)
    }

    /// Division with remainder by a divisor whose leading coefficient has an
    /// inverse. Returns `None` when it does not (or the divisor is zero).
    pub fn div_rem(&self, divisor: &Self) -> Option<(Self, Self)> {
        let dd = divisor.degree()?;
        let lead_inv = divisor.leading()?.try_inverse()?;
        let mut rem = self.coeffs.clone();
        if rem.len() <= dd {
            return Some((Self::zero(), self.clone()));
        }
        let mut quot = vec![C::zero(); rem.len() - dd];
        for i in (0..quot.len()).rev() {
            let q = rem[i + dd].mul_ref(&lead_inv);
            if q.is_zero() {
                continue;
            }
            for (j, dc) in divisor.coeffs.iter().enumerate() {
                rem[i + j] = rem[i + j].sub_ref(&q.mul_ref(dc));
            }
            quot[i] = q;
        }
        rem.truncate(dd);
        Some((Self::new(quot), Self::new(rem)))
    }

    /// Renders with `var` as the indeterminate, ascending degree.
    pub fn render(&self, var: &str) -> String
    where
        C: fmt::Display,
    {
        let terms: Vec<(String, usize)> =
            self.coeffs.iter().enumerate().filter(|(_, c)| !c.is_zero()).map(|(i, c)| (c.to_string(), i)).collect();
        render_terms(terms.iter().map(|(c, i)| (c.as_str(), *i)), var)
    }
}

/// Joins `(coefficient text, exponent)` pairs into `a + b*v + c*v^2` form.
/// Compound coefficients (containing an inner `+`/`-`) are parenthesized.
pub(crate) fn render_terms<'a>(terms: impl Iterator<Item = (&'a str, usize)>, var: &str) -> String {
    let mut out = String::new();
    for (c, e) in terms {
        let compound = c[1..].contains([' ', '+']) || c[1..].contains(" - ");
        let (neg, body) = if compound {
            (false, format!("({c})"))
        } else if let Some(rest) = c.strip_prefix('-') {
            (true, rest.to_string())
        } else {
            (false, c.to_string())
        };
        let mono = match e {
            0 => String::new(),
            1 => var.to_string(),
            _ => format!("{var}^{e}"),
        };
        let term = match (body.as_str(), mono.is_empty()) {
            (_, true) => body,
            ("1", false) => mono,
            (_, false) => format!("{body}*{mono}"),
        };
        if out.is_empty() {
            if neg {
                out.push('-');
            }
        } else {
            out.push_str(if neg { " - " } else { " + " });
        }
        out.push_str(&term);
    }
    if out.is_empty() {
        out.push('0');
    }
    out
}

impl<C: Ring> Ring for UniPoly<C> {
    fn zero() -> Self {
        UniPoly::zero()
    }

    fn one() -> Self {
        UniPoly::constant(C::one())
    }

    fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    fn add_ref(&self, other: &Self) -> Self {
        let n = self.coeffs.len().max(other.coeffs.len());
        let out = (0..n)
            .map(|i| match (self.coeffs.get(i), other.coeffs.get(i)) {
                (Some(a), Some(b)) => a.add_ref(b),
                (Some(a), None) => a.clone(),
                (None, Some(b)) => b.clone(),
                (None, None) => unreachable!(),
            })
            .collect();
        UniPoly::new(out)
    }

    fn sub_ref(&self, other: &Self) -> Self {
        self.add_ref(&other.neg_ref())
    }

    fn mul_ref(&self, other: &Self) -> Self {
        if self.is_zero() || other.is_zero() {
            return UniPoly::zero();
        }
        let mut out = vec![C::zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                out[i + j].add_assign_ref(&a.mul_ref(b));
            }
        }
        UniPoly::new(out)
    }

    fn neg_ref(&self) -> Self {
        UniPoly { coeffs: self.coeffs.iter().map(Ring::neg_ref).collect() }
    }

    fn scale(&self, r: &Rat) -> Self {
        UniPoly::new(self.coeffs.iter().map(|c| c.scale(r)).collect())
    }

    fn try_inverse(&self) -> Option<Self> {
        match self.coeffs.as_slice() {
            [c] => c.try_inverse().map(UniPoly::constant),
            _ => None,
        }
    }
}

impl UniPoly<Rat> {
    /// Parses the `render` format back; only `var` may appear.
    pub fn parse(s: &str, var: &str) -> crate::Result<Self> {
        let bp = super::BiPoly::parse_with_vars(s, var, "\u{0}")?;
        Ok(bp.x_part())
    }
}

impl fmt::Display for UniPoly<Rat> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render("l"))
    }
}

impl fmt::Display for UniPoly<super::CycRat> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render("l"))
    }
}
