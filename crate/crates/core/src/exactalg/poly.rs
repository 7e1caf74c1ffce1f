//! Sparse multivariate Laurent polynomials over the rationals.
//!
//! Exponents are stored doubled so that `x^(1/2)` is an ordinary monomial.
//! Spectral variables may carry any doubled exponent; parameters only even,
//! non-negative ones.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Signed, Zero};

use super::var::{VarKind, Variable};
use super::{rat, Rational};
use crate::error::{Error, Result};

/// Product of variable powers, sorted by variable, doubled exponents, no zeros.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Monomial(Vec<(Variable, i32)>);

impl Monomial {
    pub fn one() -> Self {
        Monomial(Vec::new())
    }

    /// `v^(doubled/2)`.
    pub fn var(v: Variable, doubled: i32) -> Self {
        if doubled == 0 {
            Monomial::one()
        } else {
            Monomial(vec![(v, doubled)])
        }
    }

    pub fn from_pairs(mut pairs: Vec<(Variable, i32)>) -> Self {
        pairs.sort_by_key(|p| p.0);
        let mut out: Vec<(Variable, i32)> = Vec::with_capacity(pairs.len());
        for (v, e) in pairs {
            match out.last_mut() {
                Some(last) if last.0 == v => last.1 += e,
                _ => out.push((v, e)),
            }
        }
        out.retain(|p| p.1 != 0);
        Monomial(out)
    }

    pub fn is_one(&self) -> bool {
        self.0.is_empty()
    }

    pub fn pairs(&self) -> &[(Variable, i32)] {
        &self.0
    }

    /// Doubled exponent of `v`.
    pub fn exponent(&self, v: Variable) -> i32 {
        self.0
            .iter()
            .find(|p| p.0 == v)
            .map(|p| p.1)
            .unwrap_or(0)
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        let (a, b) = (&self.0, &other.0);
        let mut out = Vec::with_capacity(a.len() + b.len());
        let (mut i, mut j) = (0, 0);
        while i < a.len() && j < b.len() {
            match a[i].0.cmp(&b[j].0) {
                std::cmp::Ordering::Less => {
                    out.push(a[i]);
                    i += 1;
                }
                std::cmp::Ordering::Greater => {
                    out.push(b[j]);
                    j += 1;
                }
                std::cmp::Ordering::Equal => {
                    let e = a[i].1 + b[j].1;
                    if e != 0 {
                        out.push((a[i].0, e));
                    }
                    i += 1;
                    j += 1;
                }
            }
        }
        out.extend_from_slice(&a[i..]);
        out.extend_from_slice(&b[j..]);
        Monomial(out)
    }

    pub fn inv(&self) -> Monomial {
        Monomial(self.0.iter().map(|&(v, e)| (v, -e)).collect())
    }

    /// Drops `v` from the monomial, returning its doubled exponent.
    pub fn split_off(&self, v: Variable) -> (i32, Monomial) {
        let e = self.exponent(v);
        (e, Monomial(self.0.iter().copied().filter(|p| p.0 != v).collect()))
    }

    fn validate(&self) -> Result<()> {
        for &(v, e) in &self.0 {
            if v.kind() == VarKind::Parameter && (e < 0 || e % 2 != 0) {
                return Err(Error::ParameterExponent {
                    name: v.name(),
                    exponent: fmt_exponent(e),
                });
            }
        }
        Ok(())
    }
}

fn fmt_exponent(doubled: i32) -> String {
    if doubled % 2 == 0 {
        format!("{}", doubled / 2)
    } else {
        format!("({}/2)", doubled)
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return write!(f, "1");
        }
        for (i, &(v, e)) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, "*")?;
            }
            if e == 2 {
                write!(f, "{}", v)?;
            } else {
                write!(f, "{}^{}", v, fmt_exponent(e))?;
            }
        }
        Ok(())
    }
}

/// Finite sum of rational multiples of monomials. Zero coefficients are never stored.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct LaurentPoly {
    terms: BTreeMap<Monomial, Rational>,
}

impl LaurentPoly {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::constant(Rational::one())
    }

    pub fn constant(c: Rational) -> Self {
        let mut p = Self::zero();
        p.add_term(Monomial::one(), c);
        p
    }

    pub fn int(c: i64) -> Self {
        Self::constant(rat(c, 1))
    }

    pub fn var(v: Variable) -> Self {
        Self::term(rat(1, 1), Monomial::var(v, 2))
    }

    /// `v^e` for integer `e`. Panics on negative powers of a parameter.
    pub fn var_pow(v: Variable, e: i32) -> Self {
        Self::try_monomial(rat(1, 1), Monomial::var(v, 2 * e)).expect("invalid parameter exponent")
    }

    /// `v^(doubled/2)`.
    pub fn var_half_pow(v: Variable, doubled: i32) -> Result<Self> {
        Self::try_monomial(rat(1, 1), Monomial::var(v, doubled))
    }

    pub fn try_monomial(c: Rational, m: Monomial) -> Result<Self> {
        m.validate()?;
        Ok(Self::term(c, m))
    }

    fn term(c: Rational, m: Monomial) -> Self {
        let mut p = Self::zero();
        p.add_term(m, c);
        p
    }

    pub fn from_terms(terms: impl IntoIterator<Item = (Monomial, Rational)>) -> Result<Self> {
        let mut p = Self::zero();
        for (m, c) in terms {
            m.validate()?;
            p.add_term(m, c);
        }
        Ok(p)
    }

    pub(crate) fn add_term(&mut self, m: Monomial, c: Rational) {
        if c.is_zero() {
            return;
        }
        use std::collections::btree_map::Entry;
        match self.terms.entry(m) {
            Entry::Vacant(slot) => {
                slot.insert(c);
            }
            Entry::Occupied(mut slot) => {
                *slot.get_mut() += c;
                if slot.get().is_zero() {
                    slot.remove();
                }
            }
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1
            && self
                .terms
                .iter()
                .next()
                .map(|(m, c)| m.is_one() && c.is_one())
                .unwrap_or(false)
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &Rational)> {
        self.terms.iter()
    }

    /// The constant value, if the polynomial has no variable terms.
    pub fn as_constant(&self) -> Option<Rational> {
        match self.terms.len() {
            0 => Some(Rational::zero()),
            1 => {
                let (m, c) = self.terms.iter().next().unwrap();
                m.is_one().then(|| c.clone())
            }
            _ => None,
        }
    }

    /// The single term, if there is exactly one.
    pub fn as_monomial(&self) -> Option<(&Monomial, &Rational)> {
        if self.terms.len() == 1 {
            self.terms.iter().next()
        } else {
            None
        }
    }

    pub fn leading(&self) -> Option<(&Monomial, &Rational)> {
        self.terms.iter().next_back()
    }

    pub fn variables(&self) -> Vec<Variable> {
        let mut vs: Vec<Variable> = self
            .terms
            .keys()
            .flat_map(|m| m.pairs().iter().map(|p| p.0))
            .collect();
        vs.sort();
        vs.dedup();
        vs
    }

    /// Smallest and largest doubled exponent of `v` over all terms.
    pub fn degree_range(&self, v: Variable) -> Option<(i32, i32)> {
        let mut it = self.terms.keys().map(|m| m.exponent(v));
        let first = it.next()?;
        Some(it.fold((first, first), |(lo, hi), e| (lo.min(e), hi.max(e))))
    }

    pub fn scale(&self, c: &Rational) -> LaurentPoly {
        if c.is_zero() {
            return LaurentPoly::zero();
        }
        LaurentPoly {
            terms: self.terms.iter().map(|(m, x)| (m.clone(), x * c)).collect(),
        }
    }

    pub fn mul_monomial(&self, m: &Monomial, c: &Rational) -> LaurentPoly {
        let mut out = LaurentPoly::zero();
        for (mm, x) in &self.terms {
            out.add_term(mm.mul(m), x * c);
        }
        out
    }

    pub fn pow(&self, e: u32) -> LaurentPoly {
        let mut result = LaurentPoly::one();
        let mut base = self.clone();
        let mut e = e;
        while e > 0 {
            if e & 1 == 1 {
                result = &result * &base;
            }
            e >>= 1;
            if e > 0 {
                base = &base * &base;
            }
        }
        result
    }

    /// Coefficients of the integer powers of `v`.
    pub fn coefficients_in(&self, v: Variable) -> Result<BTreeMap<i64, LaurentPoly>> {
        let mut out = BTreeMap::<i64, LaurentPoly>::new();
        for (m, c) in &self.terms {
            let (e, rest) = m.split_off(v);
            if e % 2 != 0 {
                return Err(Error::NotLaurent(format!("half-integer power of {v}")));
            }
            out.entry(i64::from(e / 2))
                .or_insert_with(LaurentPoly::zero)
                .add_term(rest, c.clone());
        }
        out.retain(|_, p| !p.is_zero());
        Ok(out)
    }

    /// Formal derivative with respect to a spectral variable.
    pub fn derivative(&self, v: Variable) -> Result<LaurentPoly> {
        if !v.is_spectral() {
            return Err(Error::ParameterDerivative(v.name()));
        }
        let mut out = LaurentPoly::zero();
        for (m, c) in &self.terms {
            let (e, rest) = m.split_off(v);
            if e == 0 {
                continue;
            }
            let coeff = c * rat(e as i64, 2);
            out.add_term(rest.mul(&Monomial::var(v, e - 2)), coeff);
        }
        Ok(out)
    }

    /// Exact evaluation; see [`super::Point`].
    pub fn eval(&self, point: &super::Point) -> Result<Rational> {
        let mut total = Rational::zero();
        for (m, c) in &self.terms {
            let mut value = c.clone();
            for &(v, e) in m.pairs() {
                value *= point.power(v, e)?;
            }
            total += value;
        }
        Ok(total)
    }
}

impl Add for &LaurentPoly {
    type Output = LaurentPoly;
    fn add(self, rhs: &LaurentPoly) -> LaurentPoly {
        let (mut big, small) = if self.terms.len() >= rhs.terms.len() {
            (self.clone(), rhs)
        } else {
            (rhs.clone(), self)
        };
        for (m, c) in &small.terms {
            big.add_term(m.clone(), c.clone());
        }
        big
    }
}

impl Sub for &LaurentPoly {
    type Output = LaurentPoly;
    fn sub(self, rhs: &LaurentPoly) -> LaurentPoly {
        let mut out = self.clone();
        for (m, c) in &rhs.terms {
            out.add_term(m.clone(), -c.clone());
        }
        out
    }
}

impl Neg for &LaurentPoly {
    type Output = LaurentPoly;
    fn neg(self) -> LaurentPoly {
        LaurentPoly {
            terms: self.terms.iter().map(|(m, c)| (m.clone(), -c.clone())).collect(),
        }
    }
}

impl Mul for &LaurentPoly {
    type Output = LaurentPoly;
    fn mul(self, rhs: &LaurentPoly) -> LaurentPoly {
        let mut out = LaurentPoly::zero();
        for (ma, ca) in &self.terms {
            for (mb, cb) in &rhs.terms {
                out.add_term(ma.mul(mb), ca * cb);
            }
        }
        out
    }
}

macro_rules! forward_owned {
    ($tr:ident, $f:ident) => {
        impl $tr for LaurentPoly {
            type Output = LaurentPoly;
            fn $f(self, rhs: LaurentPoly) -> LaurentPoly {
                (&self).$f(&rhs)
            }
        }
    };
}
forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

impl Neg for LaurentPoly {
    type Output = LaurentPoly;
    fn neg(self) -> LaurentPoly {
        -&self
    }
}

impl fmt::Display for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (i, (m, c)) in self.terms.iter().enumerate() {
            let neg = c.is_negative();
            let abs = c.abs();
            if i == 0 {
                if neg {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {} ", if neg { "-" } else { "+" })?;
            }
            if m.is_one() {
                write!(f, "{}", abs)?;
            } else if abs.is_one() {
                write!(f, "{}", m)?;
            } else {
                write!(f, "{}*{}", abs, m)?;
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn x() -> Variable {
        Variable::spectral("x")
    }
    fn y() -> Variable {
        Variable::spectral("y")
    }

    #[test]
    fn difference_of_squares() {
        let a = &LaurentPoly::var(x()) - &LaurentPoly::var(y());
        let b = &LaurentPoly::var(x()) + &LaurentPoly::var(y());
        let expected = &LaurentPoly::var_pow(x(), 2) - &LaurentPoly::var_pow(y(), 2);
        assert_eq!(&a * &b, expected);
    }

    #[test]
    fn half_exponents_close() {
        let h = LaurentPoly::var_half_pow(x(), 1).unwrap();
        assert_eq!(&h * &h, LaurentPoly::var(x()));
    }

    #[test]
    fn identity_multiplication() {
        let k = Variable::parameter("kappa");
        let ks = Variable::parameter("kappa*");
        let p = &LaurentPoly::var(k) + &(&LaurentPoly::var(ks) * &LaurentPoly::var(x()));
        assert_eq!(&LaurentPoly::one() * &p, p);
    }

    #[test]
    fn power_rule() {
        let d = LaurentPoly::var_pow(x(), -1).derivative(x()).unwrap();
        assert_eq!(d, -LaurentPoly::var_pow(x(), -2));

        let d = LaurentPoly::var_half_pow(x(), 1).unwrap().derivative(x()).unwrap();
        let expected = LaurentPoly::var_half_pow(x(), -1).unwrap().scale(&rat(1, 2));
        assert_eq!(d, expected);

        let p = &LaurentPoly::var_pow(x(), 2) * &LaurentPoly::var(y());
        let expected = (&LaurentPoly::var(x()) * &LaurentPoly::var(y())).scale(&rat(2, 1));
        assert_eq!(p.derivative(x()).unwrap(), expected);
    }

    #[test]
    fn parameter_derivative_rejected() {
        let k = Variable::parameter("kappa");
        assert!(matches!(
            LaurentPoly::var(k).derivative(k),
            Err(Error::ParameterDerivative(_))
        ));
    }

    #[test]
    fn parameter_exponents_validated() {
        let k = Variable::parameter("kappa");
        assert!(LaurentPoly::var_half_pow(k, -2).is_err());
        assert!(LaurentPoly::var_half_pow(k, 1).is_err());
        assert!(LaurentPoly::var_half_pow(k, 4).is_ok());
    }

    #[test]
    fn display_is_readable() {
        let p = &LaurentPoly::var_half_pow(x(), 1).unwrap().scale(&rat(-1, 2)) + &LaurentPoly::int(3);
        let s = p.to_string();
        assert!(s.contains("x^(1/2)"), "{s}");
    }
}
