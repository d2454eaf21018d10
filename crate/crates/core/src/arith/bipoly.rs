use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::str::FromStr;

use num_bigint::BigInt;

use super::{binomial_row, Rat, Ring, UniPoly};
use crate::error::{Error, Result};

/// Sparse polynomial in `x` and `λ` over the rationals.
///
/// Keys are `(deg_x, deg_λ)`; zero coefficients are never stored, so
/// structural equality is polynomial equality. Iteration order (ascending
/// lexicographic on the key) is the canonical serialization order.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct BiPoly {
    terms: BTreeMap<(u32, u32), Rat>,
}

impl BiPoly {
    pub fn zero() -> Self {
        BiPoly::default()
    }

    pub fn one() -> Self {
        Self::constant(Rat::one())
    }

    pub fn constant(c: Rat) -> Self {
        Self::monomial(c, 0, 0)
    }

    pub fn x() -> Self {
        Self::monomial(Rat::one(), 1, 0)
    }

    pub fn lambda() -> Self {
        Self::monomial(Rat::one(), 0, 1)
    }

    pub fn monomial(c: Rat, deg_x: u32, deg_lambda: u32) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert((deg_x, deg_lambda), c);
        }
        BiPoly { terms }
    }

    pub fn from_terms(iter: impl IntoIterator<Item = ((u32, u32), Rat)>) -> Self {
        let mut p = BiPoly::zero();
        for (k, c) in iter {
            p.add_term(k, &c);
        }
        p
    }

    /// Embeds a polynomial in `x`.
    pub fn from_x_poly(p: &UniPoly<Rat>) -> Self {
        Self::from_terms(p.coeffs().iter().enumerate().map(|(i, c)| ((i as u32, 0), c.clone())))
    }

    /// Embeds a polynomial in `λ`.
    pub fn from_lambda_poly(p: &UniPoly<Rat>) -> Self {
        Self::from_terms(p.coeffs().iter().enumerate().map(|(j, c)| ((0, j as u32), c.clone())))
    }

    fn add_term(&mut self, key: (u32, u32), c: &Rat) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(key) {
            std::collections::btree_map::Entry::Vacant(e) => {
                e.insert(c.clone());
            }
            std::collections::btree_map::Entry::Occupied(mut e) => {
                *e.get_mut() += c;
                if e.get().is_zero() {
                    e.remove();
                }
            }
        }
    }

    pub fn coeff(&self, deg_x: u32, deg_lambda: u32) -> Rat {
        self.terms.get(&(deg_x, deg_lambda)).cloned().unwrap_or_else(Rat::zero)
    }

    /// Terms in canonical order.
    pub fn terms(&self) -> impl Iterator<Item = (&(u32, u32), &Rat)> {
        self.terms.iter()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn degree_x(&self) -> Option<u32> {
        self.terms.keys().map(|k| k.0).max()
    }

    pub fn degree_lambda(&self) -> Option<u32> {
        self.terms.keys().map(|k| k.1).max()
    }

    /// The constant coefficient when the polynomial is constant.
    pub fn as_constant(&self) -> Option<Rat> {
        match self.terms.len() {
            0 => Some(Rat::zero()),
            1 => self.terms.get(&(0, 0)).cloned(),
            _ => None,
        }
    }

    pub fn scale(&self, r: &Rat) -> Self {
        if r.is_zero() {
            return BiPoly::zero();
        }
        BiPoly { terms: self.terms.iter().map(|(k, c)| (*k, c * r)).collect() }
    }

    /// Returns a copy with `delta` added to the coefficient of `x^i λ^j`.
    pub fn perturbed(&self, deg_x: u32, deg_lambda: u32, delta: &Rat) -> Self {
        let mut p = self.clone();
        p.add_term((deg_x, deg_lambda), delta);
        p
    }

    /// Exact simultaneous substitution `x ← (x + a)/d`, `λ ← λ/d`.
    pub fn substitute(&self, a: &Rat, d: u64) -> Self {
        assert!(d >= 1, "substitution divisor must be positive");
        let max_x = self.degree_x().unwrap_or(0) as usize;
        let max_total = self.terms.keys().map(|k| k.0 + k.1).max().unwrap_or(0) as usize;
        let mut a_pows = vec![Rat::one()];
        for _ in 0..max_x {
            let next = a_pows.last().unwrap() * a;
            a_pows.push(next);
        }
        let d_inv = Rat::new(1, d);
        let mut d_pows = vec![Rat::one()];
        for _ in 0..max_total {
            let next = d_pows.last().unwrap() * &d_inv;
            d_pows.push(next);
        }
        let mut out = BiPoly::zero();
        for (&(i, j), c) in &self.terms {
            let base = c * &d_pows[(i + j) as usize];
            let row = binomial_row(i as u64);
            for (k, binom) in row.iter().enumerate() {
                let coeff = base.mul_int(binom) * &a_pows[i as usize - k];
                out.add_term((k as u32, j), &coeff);
            }
        }
        out
    }

    /// General composition `x ← x_to`, `λ ← lambda_to`.
    pub fn compose(&self, x_to: &BiPoly, lambda_to: &BiPoly) -> Self {
        let max_x = self.degree_x().unwrap_or(0) as usize;
        let max_l = self.degree_lambda().unwrap_or(0) as usize;
        let xp = powers(x_to, max_x);
        let lp = powers(lambda_to, max_l);
        let mut out = BiPoly::zero();
        for (&(i, j), c) in &self.terms {
            let t = (&xp[i as usize] * &lp[j as usize]).scale(c);
            out = &out + &t;
        }
        out
    }

    /// Specializes `x` to a rational, leaving a polynomial in `λ`.
    pub fn eval_x(&self, at: &Rat) -> UniPoly<Rat> {
        let max_l = self.degree_lambda().map_or(0, |d| d as usize + 1);
        let mut out = vec![Rat::zero(); max_l];
        let mut pows: Vec<Rat> = vec![Rat::one()];
        for (&(i, j), c) in &self.terms {
            while pows.len() <= i as usize {
                let next = pows.last().unwrap() * at;
                pows.push(next);
            }
            out[j as usize] += &(c * &pows[i as usize]);
        }
        UniPoly::new(out)
    }

    /// Specializes `λ` to a rational, leaving a polynomial in `x` only.
    pub fn eval_lambda(&self, at: &Rat) -> BiPoly {
        let mut out = BiPoly::zero();
        for (&(i, j), c) in &self.terms {
            out.add_term((i, 0), &(c * &at.pow(j as i32)));
        }
        out
    }

    pub fn eval(&self, x: &Rat, lambda: &Rat) -> Rat {
        self.eval_x(x).eval(lambda)
    }

    /// Coefficients of the `λ^0` part as a polynomial in `x`.
    pub fn x_part(&self) -> UniPoly<Rat> {
        let max = self.degree_x().map_or(0, |d| d as usize + 1);
        let mut out = vec![Rat::zero(); max];
        for (&(i, j), c) in &self.terms {
            if j == 0 {
                out[i as usize] = c.clone();
            }
        }
        UniPoly::new(out)
    }

    /// Canonical rendering with the given variable names.
    pub fn render_with(&self, xv: &str, lv: &str) -> String {
        if self.terms.is_empty() {
            return "0".to_string();
        }
        let mut out = String::new();
        for (&(i, j), c) in &self.terms {
            let mut mono = Vec::new();
            for (v, e) in [(xv, i), (lv, j)] {
                match e {
                    0 => {}
                    1 => mono.push(v.to_string()),
                    _ => mono.push(format!("{v}^{e}")),
                }
            }
            let mag = c.abs();
            let term = if mono.is_empty() {
                mag.to_string()
            } else if mag.is_one() {
                mono.join("*")
            } else {
                format!("{mag}*{}", mono.join("*"))
            };
            if out.is_empty() {
                if c.is_negative() {
                    out.push('-');
                }
            } else {
                out.push_str(if c.is_negative() { " - " } else { " + " });
            }
            out.push_str(&term);
        }
        out
    }

    /// Parses a sum of terms such as `1/6 - 1/6*l^2 + 3*x*l`.
    pub fn parse_with_vars(s: &str, xv: &str, lv: &str) -> Result<Self> {
        Parser { src: s, pos: 0, xv, lv }.parse()
    }
}

fn powers(p: &BiPoly, max: usize) -> Vec<BiPoly> {
    let mut out = vec![BiPoly::one()];
    for _ in 0..max {
        let next = out.last().unwrap() * p;
        out.push(next);
    }
    out
}

struct Parser<'a> {
    src: &'a str,
    pos: usize,
    xv: &'a str,
    lv: &'a str,
}

impl Parser<'_> {
    fn err(&self, what: &str) -> Error {
        Error::Parse(format!("{what} at byte {} in {:?}", self.pos, self.src))
    }

    fn skip_ws(&mut self) {
        while self.rest().starts_with(char::is_whitespace) {
            self.pos += 1;
        }
    }

    fn rest(&self) -> &str {
        &self.src[self.pos..]
    }

    fn eat(&mut self, c: char) -> bool {
        self.skip_ws();
        if self.rest().starts_with(c) {
            self.pos += c.len_utf8();
            true
        } else {
            false
        }
    }

    fn digits(&mut self) -> Option<BigInt> {
        self.skip_ws();
        let len = self.rest().bytes().take_while(u8::is_ascii_digit).count();
        if len == 0 {
            return None;
        }
        let n = self.rest()[..len].parse().ok();
        self.pos += len;
        n
    }

    fn exponent(&mut self) -> Result<u32> {
        if !self.eat('^') {
            return Ok(1);
        }
        let e = self.digits().ok_or_else(|| self.err("expected exponent"))?;
        u32::try_from(e).map_err(|_| self.err("exponent too large"))
    }

    fn factor(&mut self, coeff: &mut Rat, key: &mut (u32, u32)) -> Result<()> {
        self.skip_ws();
        if let Some(n) = self.digits() {
            let mut r = Rat::from_int(n);
            if self.eat('/') {
                let d = self.digits().ok_or_else(|| self.err("expected denominator"))?;
                if d == BigInt::from(0) {
                    return Err(self.err("zero denominator"));
                }
                r = r.div_int(&d);
            }
            *coeff = &*coeff * &r;
            return Ok(());
        }
        for (name, slot) in [(self.xv, 0), (self.lv, 1)] {
            if self.rest().starts_with(name) {
                let tail = &self.rest()[name.len()..];
                if tail.starts_with(|c: char| c.is_alphanumeric() || c == '_') {
                    continue;
                }
                self.pos += name.len();
                let e = self.exponent()?;
                if slot == 0 {
                    key.0 += e;
                } else {
                    key.1 += e;
                }
                return Ok(());
            }
        }
        Err(self.err("expected number or variable"))
    }

    fn term(&mut self) -> Result<((u32, u32), Rat)> {
        let mut coeff = Rat::one();
        let mut key = (0, 0);
        self.factor(&mut coeff, &mut key)?;
        while self.eat('*') {
            self.factor(&mut coeff, &mut key)?;
        }
        Ok((key, coeff))
    }

    fn parse(mut self) -> Result<BiPoly> {
        let mut out = BiPoly::zero();
        let mut negate = if self.eat('-') {
            true
        } else {
            self.eat('+');
            false
        };
        loop {
            let (key, c) = self.term()?;
            out.add_term(key, &if negate { -c } else { c });
            if self.eat('+') {
                negate = false;
            } else if self.eat('-') {
                negate = true;
            } else {
                break;
            }
        }
        self.skip_ws();
        if self.pos != self.src.len() {
            return Err(self.err("trailing input"));
        }
        Ok(out)
    }
}

impl fmt::Display for BiPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render_with("x", "l"))
    }
}

impl FromStr for BiPoly {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        BiPoly::parse_with_vars(s, "x", "l")
    }
}

impl Add<&BiPoly> for &BiPoly {
    type Output = BiPoly;
    fn add(self, o: &BiPoly) -> BiPoly {
        let (mut big, small) = if self.len() >= o.len() { (self.clone(), o) } else { (o.clone(), self) };
        for (k, c) in &small.terms {
            big.add_term(*k, c);
        }
        big
    }
}

impl Sub<&BiPoly> for &BiPoly {
    type Output = BiPoly;
    fn sub(self, o: &BiPoly) -> BiPoly {
        let mut out = self.clone();
        for (k, c) in &o.terms {
            out.add_term(*k, &-c);
        }
        out
    }
}

impl Mul<&BiPoly> for &BiPoly {
    type Output = BiPoly;
    fn mul(self, o: &BiPoly) -> BiPoly {
        let mut out = BiPoly::zero();
        for (&(i1, j1), c1) in &self.terms {
            for (&(i2, j2), c2) in &o.terms {
                out.add_term((i1 + i2, j1 + j2), &(c1 * c2));
            }
        }
        out
    }
}

impl Neg for &BiPoly {
    type Output = BiPoly;
    fn neg(self) -> BiPoly {
        BiPoly { terms: self.terms.iter().map(|(k, c)| (*k, -c)).collect() }
    }
}

impl Ring for BiPoly {
    fn zero() -> Self {
        BiPoly::zero()
    }
    fn one() -> Self {
        BiPoly::one()
    }
    fn is_zero(&self) -> bool {
        self.terms.is_empty()
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
        BiPoly::scale(self, r)
    }
    fn try_inverse(&self) -> Option<Self> {
        self.as_constant().and_then(|c| c.recip()).map(BiPoly::constant)
    }
    fn add_assign_ref(&mut self, other: &Self) {
        for (k, c) in &other.terms {
            self.add_term(*k, c);
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn bp(s: &str) -> BiPoly {
        s.parse().unwrap()
    }

    #[test]
    fn substitute_examples() {
        assert_eq!(BiPoly::x().substitute(&Rat::zero(), 2), bp("1/2*x"));
        // x^2 - λx with x ← (x+1)/2, λ ← λ/2
        let got = bp("x^2 - x*l").substitute(&Rat::one(), 2);
        let want = bp("1/4*x^2 + 1/2*x + 1/4 - 1/4*x*l - 1/4*l");
        assert_eq!(got, want);
        assert_eq!(BiPoly::one().substitute(&Rat::new(7, 3), 5), BiPoly::one());
    }

    #[test]
    fn render_canonical_order() {
        let p = bp("-1/6*l^2 + 1/6");
        assert_eq!(p.to_string(), "1/6 - 1/6*l^2");
        assert_eq!(bp("x - 1/2").to_string(), "-1/2 + x");
        assert_eq!(bp("2*x^3*l + x*l^2 - x").to_string(), "-x + x*l^2 + 2*x^3*l");
        assert_eq!(BiPoly::zero().to_string(), "0");
        assert_eq!(bp("0"), BiPoly::zero());
    }

    #[test]
    fn parse_rejects_garbage() {
        assert!("x +".parse::<BiPoly>().is_err());
        assert!("y".parse::<BiPoly>().is_err());
        assert!("1/0*x".parse::<BiPoly>().is_err());
        assert!("xl".parse::<BiPoly>().is_err());
        assert!("x^".parse::<BiPoly>().is_err());
    }

    #[test]
    fn parse_collects_repeated_monomials() {
        assert_eq!(bp("x*x + 2*x^2 - l*x*l"), bp("3*x^2 - x*l^2"));
    }

    #[test]
    fn eval_and_specialize() {
        let p = bp("x^2 - x*l + 1/2*l");
        assert_eq!(p.eval(&Rat::from(3), &Rat::from(1)), Rat::new(13, 2));
        assert_eq!(p.eval_lambda(&Rat::zero()), bp("x^2"));
        assert_eq!(p.eval_x(&Rat::from(2)).to_string(), "4 - 3/2*l");
    }

    #[test]
    fn compose_shift() {
        // x ← x + λ
        let p = bp("x^2");
        let shifted = p.compose(&(&BiPoly::x() + &BiPoly::lambda()), &BiPoly::lambda());
        assert_eq!(shifted, bp("x^2 + 2*x*l + l^2"));
    }
}
