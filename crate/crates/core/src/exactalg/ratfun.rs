//! Fractions of Laurent polynomials.
//!
//! The denominator is kept as a product of normalized factors ("atoms").
//! Nothing is ever cancelled against the numerator: sums take the
//! factor-wise lcm, and two fractions are equal iff the cross-multiplied
//! difference vanishes.

use std::collections::HashMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Signed, Zero};

use super::poly::{LaurentPoly, Monomial};
use super::var::Variable;
use super::{Point, Rational};
use crate::error::{Error, Result};

#[derive(Clone, Debug, Default)]
pub struct RatFun {
    num: LaurentPoly,
    den: Vec<(LaurentPoly, u32)>,
}

/// Splits `p` into `unit * atom`, where the unit is a rational multiple of a
/// spectral monomial. Returns `(1/unit, atom)`.
fn normalize_atom(p: &LaurentPoly) -> Result<(LaurentPoly, LaurentPoly)> {
    if p.is_zero() {
        return Err(Error::ZeroDenominator);
    }
    let mut content = Vec::new();
    for v in p.variables() {
        if v.is_spectral() {
            let (lo, _) = p.degree_range(v).unwrap();
            if lo != 0 {
                content.push((v, lo));
            }
        }
    }
    let content = Monomial::from_pairs(content);
    let shifted = p.mul_monomial(&content.inv(), &Rational::one());
    let lc = shifted.leading().unwrap().1.clone();
    let atom = shifted.scale(&lc.recip());
    let unit_inv = LaurentPoly::try_monomial(lc.recip(), content.inv())?;
    Ok((unit_inv, atom))
}

impl RatFun {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::from_poly(LaurentPoly::one())
    }

    pub fn from_poly(p: LaurentPoly) -> Self {
        RatFun { num: p, den: Vec::new() }
    }

    pub fn constant(c: Rational) -> Self {
        Self::from_poly(LaurentPoly::constant(c))
    }

    pub fn int(c: i64) -> Self {
        Self::from_poly(LaurentPoly::int(c))
    }

    pub fn var(v: Variable) -> Self {
        Self::from_poly(LaurentPoly::var(v))
    }

    /// `num / den`.
    pub fn new(num: LaurentPoly, den: &LaurentPoly) -> Result<Self> {
        RatFun::from_poly(num).div_poly(den)
    }

    pub fn numer(&self) -> &LaurentPoly {
        &self.num
    }

    /// Normalized denominator factors with multiplicities.
    pub fn den_factors(&self) -> &[(LaurentPoly, u32)] {
        &self.den
    }

    /// The expanded denominator.
    pub fn denom(&self) -> LaurentPoly {
        self.den
            .iter()
            .fold(LaurentPoly::one(), |acc, (a, m)| &acc * &a.pow(*m))
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    /// Cross-multiplication identity test.
    pub fn equals(&self, other: &RatFun) -> bool {
        (self - other).is_zero()
    }

    /// Some(p) when the denominator is trivial.
    pub fn to_laurent(&self) -> Option<LaurentPoly> {
        self.den.is_empty().then(|| self.num.clone())
    }

    fn canon(mut self) -> Self {
        if self.num.is_zero() {
            self.den.clear();
        }
        self
    }

    /// Divides by a polynomial, recording it as a denominator factor.
    pub fn div_poly(&self, p: &LaurentPoly) -> Result<RatFun> {
        let (unit_inv, atom) = normalize_atom(p)?;
        let mut out = RatFun {
            num: &self.num * &unit_inv,
            den: self.den.clone(),
        };
        if !atom.is_one() {
            push_factor(&mut out.den, atom, 1);
        }
        Ok(out.canon())
    }

    pub fn inv(&self) -> Result<RatFun> {
        if self.num.is_zero() {
            return Err(Error::ZeroDenominator);
        }
        RatFun::from_poly(self.denom()).div_poly(&self.num)
    }

    pub fn checked_div(&self, other: &RatFun) -> Result<RatFun> {
        Ok(self * &other.inv()?)
    }

    pub fn scale(&self, c: &Rational) -> RatFun {
        RatFun {
            num: self.num.scale(c),
            den: self.den.clone(),
        }
        .canon()
    }

    pub fn powi(&self, e: i32) -> Result<RatFun> {
        let base = if e < 0 { self.inv()? } else { self.clone() };
        let mut e = e.unsigned_abs();
        let mut result = RatFun::one();
        let mut b = base;
        while e > 0 {
            if e & 1 == 1 {
                result = &result * &b;
            }
            e >>= 1;
            if e > 0 {
                b = &b * &b;
            }
        }
        Ok(result)
    }

    /// Quotient rule on the factored denominator:
    /// `(n/D)' = n'/D - n * sum_i m_i a_i' / (a_i D)`.
    pub fn derivative(&self, v: Variable) -> Result<RatFun> {
        let mut out = RatFun {
            num: self.num.derivative(v)?,
            den: self.den.clone(),
        }
        .canon();
        for (atom, mult) in &self.den {
            let da = atom.derivative(v)?;
            if da.is_zero() {
                continue;
            }
            let mut den = self.den.clone();
            push_factor(&mut den, atom.clone(), 1);
            let term = RatFun {
                num: (&self.num * &da).scale(&Rational::from_integer((*mult).into())),
                den,
            };
            out = &out - &term;
        }
        Ok(out)
    }

    /// Composition `f(assignment)`. A half-integer power of a substituted
    /// variable needs the assignment to be an exact square monomial.
    pub fn substitute(&self, assignment: &HashMap<Variable, RatFun>) -> Result<RatFun> {
        let mut cache: HashMap<(Variable, i32), RatFun> = HashMap::new();
        let mut out = substitute_poly(&self.num, assignment, &mut cache)?;
        for (atom, mult) in &self.den {
            let a = substitute_poly(atom, assignment, &mut cache)?;
            out = &out * &a.inv()?.powi(*mult as i32)?;
        }
        Ok(out)
    }

    /// Multiplies by `clearing` (given in factored form) and returns the
    /// resulting Laurent polynomial, if every denominator factor is covered.
    pub fn clear_with(&self, clearing: &[(LaurentPoly, u32)]) -> Option<LaurentPoly> {
        for (atom, m) in &self.den {
            let covered = clearing
                .iter()
                .find(|(a, _)| a == atom)
                .map(|(_, cm)| *cm >= *m)
                .unwrap_or(false);
            if !covered {
                return None;
            }
        }
        let mut out = self.num.clone();
        for (atom, cm) in clearing {
            let own = self
                .den
                .iter()
                .find(|(a, _)| a == atom)
                .map(|(_, m)| *m)
                .unwrap_or(0);
            out = &out * &atom.pow(cm - own);
        }
        Some(out)
    }

    pub fn eval(&self, point: &Point) -> Result<Rational> {
        let d = self.denom().eval(point)?;
        if d.is_zero() {
            return Err(Error::ZeroDenominator);
        }
        Ok(self.num.eval(point)? / d)
    }
}

/// Least common multiple of factored denominators (max multiplicity per factor).
pub fn lcm_factors<'a>(
    lists: impl IntoIterator<Item = &'a [(LaurentPoly, u32)]>,
) -> Vec<(LaurentPoly, u32)> {
    let mut out: Vec<(LaurentPoly, u32)> = Vec::new();
    for list in lists {
        for (atom, m) in list {
            match out.iter_mut().find(|(a, _)| a == atom) {
                Some(slot) => slot.1 = slot.1.max(*m),
                None => out.push((atom.clone(), *m)),
            }
        }
    }
    out
}

fn push_factor(den: &mut Vec<(LaurentPoly, u32)>, atom: LaurentPoly, mult: u32) {
    match den.iter_mut().find(|(a, _)| *a == atom) {
        Some(slot) => slot.1 += mult,
        None => den.push((atom, mult)),
    }
}

fn sqrt_rational(c: &Rational) -> Option<Rational> {
    if c.is_negative() {
        return None;
    }
    let n = c.numer().sqrt();
    let d = c.denom().sqrt();
    (&n * &n == *c.numer() && &d * &d == *c.denom()).then(|| Rational::new(n, d))
}

/// Exact square root of a single-term fraction with even doubled exponents.
fn sqrt_monomial(g: &RatFun) -> Result<RatFun> {
    let fail = || Error::NonSquare(g.to_string());
    if !g.den.is_empty() {
        return Err(fail());
    }
    let (m, c) = g.num.as_monomial().ok_or_else(fail)?;
    let root = sqrt_rational(c).ok_or_else(fail)?;
    let mut pairs = Vec::new();
    for &(v, e) in m.pairs() {
        if e % 2 != 0 {
            return Err(fail());
        }
        pairs.push((v, e / 2));
    }
    Ok(RatFun::from_poly(LaurentPoly::try_monomial(
        root,
        Monomial::from_pairs(pairs),
    )?))
}

fn power_of(
    v: Variable,
    doubled: i32,
    g: &RatFun,
    cache: &mut HashMap<(Variable, i32), RatFun>,
) -> Result<RatFun> {
    if let Some(hit) = cache.get(&(v, doubled)) {
        return Ok(hit.clone());
    }
    let value = if doubled % 2 == 0 {
        g.powi(doubled / 2)?
    } else {
        sqrt_monomial(g)?.powi(doubled)?
    };
    cache.insert((v, doubled), value.clone());
    Ok(value)
}

fn substitute_poly(
    p: &LaurentPoly,
    assignment: &HashMap<Variable, RatFun>,
    cache: &mut HashMap<(Variable, i32), RatFun>,
) -> Result<RatFun> {
    let mut total = RatFun::zero();
    for (m, c) in p.terms() {
        let mut kept = Vec::new();
        let mut factor = RatFun::one();
        for &(v, e) in m.pairs() {
            match assignment.get(&v) {
                Some(g) => factor = &factor * &power_of(v, e, g, cache)?,
                None => kept.push((v, e)),
            }
        }
        let base = LaurentPoly::try_monomial(c.clone(), Monomial::from_pairs(kept))?;
        total = &total + &(&RatFun::from_poly(base) * &factor);
    }
    Ok(total)
}

impl PartialEq for RatFun {
    fn eq(&self, other: &Self) -> bool {
        self.equals(other)
    }
}

impl Add for &RatFun {
    type Output = RatFun;
    fn add(self, rhs: &RatFun) -> RatFun {
        if self.is_zero() {
            return rhs.clone();
        }
        if rhs.is_zero() {
            return self.clone();
        }
        let lcm = lcm_factors([self.den.as_slice(), rhs.den.as_slice()]);
        let a = self.clear_with(&lcm).expect("lcm covers both denominators");
        let b = rhs.clear_with(&lcm).expect("lcm covers both denominators");
        RatFun { num: &a + &b, den: lcm }.canon()
    }
}

impl Sub for &RatFun {
    type Output = RatFun;
    fn sub(self, rhs: &RatFun) -> RatFun {
        self + &(-rhs)
    }
}

impl Neg for &RatFun {
    type Output = RatFun;
    fn neg(self) -> RatFun {
        RatFun {
            num: -&self.num,
            den: self.den.clone(),
        }
    }
}

impl Mul for &RatFun {
    type Output = RatFun;
    fn mul(self, rhs: &RatFun) -> RatFun {
        if self.is_zero() || rhs.is_zero() {
            return RatFun::zero();
        }
        let mut den = self.den.clone();
        for (a, m) in &rhs.den {
            push_factor(&mut den, a.clone(), *m);
        }
        RatFun {
            num: &self.num * &rhs.num,
            den,
        }
    }
}

macro_rules! forward_owned {
    ($tr:ident, $f:ident) => {
        impl $tr for RatFun {
            type Output = RatFun;
            fn $f(self, rhs: RatFun) -> RatFun {
                (&self).$f(&rhs)
            }
        }
    };
}
forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

impl Neg for RatFun {
    type Output = RatFun;
    fn neg(self) -> RatFun {
        -&self
    }
}

impl From<LaurentPoly> for RatFun {
    fn from(p: LaurentPoly) -> Self {
        RatFun::from_poly(p)
    }
}

impl fmt::Display for RatFun {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den.is_empty() {
            return write!(f, "{}", self.num);
        }
        write!(f, "({})/(", self.num)?;
        for (i, (a, m)) in self.den.iter().enumerate() {
            if i > 0 {
                write!(f, "*")?;
            }
            write!(f, "({})", a)?;
            if *m > 1 {
                write!(f, "^{}", m)?;
            }
        }
        write!(f, ")")
    }
}
