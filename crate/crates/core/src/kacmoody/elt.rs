use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::exactalg::{LaurentPoly, Rational};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub enum Kind {
    H,
    E,
    F,
}

/// `e_n`, `f_n`, `h_n` or the central element `c`.
///
/// Ordered with `c` first, then by mode, then `H < E < F`; this is the PBW
/// order used by the enveloping algebra.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub enum BasisSymbol {
    C,
    Mode(Kind, i64),
}

impl BasisSymbol {
    pub fn e(n: i64) -> Self {
        BasisSymbol::Mode(Kind::E, n)
    }
    pub fn f(n: i64) -> Self {
        BasisSymbol::Mode(Kind::F, n)
    }
    pub fn h(n: i64) -> Self {
        BasisSymbol::Mode(Kind::H, n)
    }

    pub fn mode(&self) -> Option<i64> {
        match self {
            BasisSymbol::C => None,
            BasisSymbol::Mode(_, n) => Some(*n),
        }
    }

    /// All of `c, h_n, e_n, f_n` with `|n| <= window`.
    pub fn window(window: i64) -> Vec<BasisSymbol> {
        let mut out = vec![BasisSymbol::C];
        for n in -window..=window {
            for k in [Kind::H, Kind::E, Kind::F] {
                out.push(BasisSymbol::Mode(k, n));
            }
        }
        out
    }
}

impl Ord for BasisSymbol {
    fn cmp(&self, other: &Self) -> Ordering {
        match (self, other) {
            (BasisSymbol::C, BasisSymbol::C) => Ordering::Equal,
            (BasisSymbol::C, _) => Ordering::Less,
            (_, BasisSymbol::C) => Ordering::Greater,
            (BasisSymbol::Mode(k1, n1), BasisSymbol::Mode(k2, n2)) => (n1, k1).cmp(&(n2, k2)),
        }
    }
}

impl PartialOrd for BasisSymbol {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for BasisSymbol {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            BasisSymbol::C => f.write_str("c"),
            BasisSymbol::Mode(k, n) => {
                let s = match k {
                    Kind::H => "h",
                    Kind::E => "e",
                    Kind::F => "f",
                };
                write!(f, "{s}_{n}")
            }
        }
    }
}

/// Element of affine sl2 with parameter-polynomial coefficients.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct LieElt {
    terms: BTreeMap<BasisSymbol, LaurentPoly>,
}

impl LieElt {
    pub fn zero() -> Self {
        LieElt::default()
    }

    pub fn basis(s: BasisSymbol) -> Self {
        LieElt::term(s, LaurentPoly::one())
    }

    pub fn e(n: i64) -> Self {
        Self::basis(BasisSymbol::e(n))
    }
    pub fn f(n: i64) -> Self {
        Self::basis(BasisSymbol::f(n))
    }
    pub fn h(n: i64) -> Self {
        Self::basis(BasisSymbol::h(n))
    }
    pub fn c() -> Self {
        Self::basis(BasisSymbol::C)
    }

    /// `coeff * s`; panics if `coeff` mentions a spectral variable.
    pub fn term(s: BasisSymbol, coeff: LaurentPoly) -> Self {
        let mut out = LieElt::zero();
        out.add_term(s, coeff);
        out
    }

    /// Like [`LieElt::term`] but reports spectral coefficients as an error.
    pub fn try_term(s: BasisSymbol, coeff: LaurentPoly) -> Result<Self> {
        if let Some(v) = coeff.variables().into_iter().find(|v| v.is_spectral()) {
            return Err(Error::VariableKind(format!(
                "spectral variable {v} in a Lie coefficient"
            )));
        }
        Ok(Self::term(s, coeff))
    }

    pub fn add_term(&mut self, s: BasisSymbol, coeff: LaurentPoly) {
        debug_assert!(coeff.variables().iter().all(|v| !v.is_spectral()));
        if coeff.is_zero() {
            return;
        }
        let slot = self.terms.entry(s).or_insert_with(LaurentPoly::zero);
        *slot = &*slot + &coeff;
        if slot.is_zero() {
            self.terms.remove(&s);
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&BasisSymbol, &LaurentPoly)> {
        self.terms.iter()
    }

    pub fn coeff(&self, s: &BasisSymbol) -> LaurentPoly {
        self.terms.get(s).cloned().unwrap_or_else(LaurentPoly::zero)
    }

    pub fn scale(&self, c: &LaurentPoly) -> LieElt {
        let mut out = LieElt::zero();
        if c.is_zero() {
            return out;
        }
        for (s, k) in &self.terms {
            out.add_term(*s, k * c);
        }
        out
    }

    pub fn scale_rat(&self, c: &Rational) -> LieElt {
        self.scale(&LaurentPoly::constant(c.clone()))
    }

    pub fn scale_int(&self, c: i64) -> LieElt {
        self.scale(&LaurentPoly::int(c))
    }

    /// Linear extension of a map on basis symbols.
    pub fn map_linear(&self, f: impl Fn(&BasisSymbol) -> LieElt) -> LieElt {
        let mut out = LieElt::zero();
        for (s, k) in &self.terms {
            out += &f(s).scale(k);
        }
        out
    }

    /// Largest `|mode|` present.
    pub fn max_mode(&self) -> i64 {
        self.terms
            .keys()
            .filter_map(BasisSymbol::mode)
            .map(i64::abs)
            .max()
            .unwrap_or(0)
    }
}

/// Bracket of two basis symbols.
pub fn bracket_basis(a: &BasisSymbol, b: &BasisSymbol) -> LieElt {
    use BasisSymbol::{Mode, C};
    use Kind::{E, F, H};
    let (Mode(ka, n), Mode(kb, m)) = (a, b) else {
        return LieElt::zero();
    };
    let (n, m) = (*n, *m);
    let central = |k: i64| {
        if n + m == 0 && k != 0 {
            LieElt::term(C, LaurentPoly::int(k))
        } else {
            LieElt::zero()
        }
    };
    match (ka, kb) {
        (E, E) | (F, F) => LieElt::zero(),
        (H, E) => LieElt::e(n + m).scale_int(2),
        (E, H) => LieElt::e(n + m).scale_int(-2),
        (H, F) => LieElt::f(n + m).scale_int(-2),
        (F, H) => LieElt::f(n + m).scale_int(2),
        (H, H) => central(2 * n),
        (E, F) => &LieElt::h(n + m) + &central(n),
        (F, E) => &(-&LieElt::h(n + m)) + &central(m).scale_int(-1),
    }
}

/// Bilinear bracket.
pub fn bracket(a: &LieElt, b: &LieElt) -> LieElt {
    let mut out = LieElt::zero();
    for (sa, ca) in a.terms() {
        for (sb, cb) in b.terms() {
            let br = bracket_basis(sa, sb);
            if !br.is_zero() {
                out += &br.scale(&(ca * cb));
            }
        }
    }
    out
}

impl std::ops::AddAssign<&LieElt> for LieElt {
    fn add_assign(&mut self, rhs: &LieElt) {
        for (s, k) in &rhs.terms {
            self.add_term(*s, k.clone());
        }
    }
}

impl std::ops::SubAssign<&LieElt> for LieElt {
    fn sub_assign(&mut self, rhs: &LieElt) {
        for (s, k) in &rhs.terms {
            self.add_term(*s, -k);
        }
    }
}

impl std::ops::Add for &LieElt {
    type Output = LieElt;
    fn add(self, rhs: &LieElt) -> LieElt {
        let mut out = self.clone();
        out += rhs;
        out
    }
}

impl std::ops::Sub for &LieElt {
    type Output = LieElt;
    fn sub(self, rhs: &LieElt) -> LieElt {
        let mut out = self.clone();
        out -= rhs;
        out
    }
}

impl std::ops::Neg for &LieElt {
    type Output = LieElt;
    fn neg(self) -> LieElt {
        self.scale_int(-1)
    }
}

impl std::ops::Add for LieElt {
    type Output = LieElt;
    fn add(mut self, rhs: LieElt) -> LieElt {
        self += &rhs;
        self
    }
}

impl std::ops::Sub for LieElt {
    type Output = LieElt;
    fn sub(mut self, rhs: LieElt) -> LieElt {
        self -= &rhs;
        self
    }
}

impl std::ops::Neg for LieElt {
    type Output = LieElt;
    fn neg(self) -> LieElt {
        self.scale_int(-1)
    }
}

pub(crate) fn coeff_prefix(k: &LaurentPoly) -> String {
    if k.is_one() {
        return String::new();
    }
    if let Some(c) = k.as_constant() {
        if c == -<Rational as num_traits::One>::one() {
            return "-".into();
        }
        return format!("{c}*");
    }
    // Parenthesized: parameter names such as `nu*` end in `*`.
    format!("({k})*")
}

impl fmt::Display for LieElt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        for (i, (s, k)) in self.terms.iter().enumerate() {
            let p = coeff_prefix(k);
            if i == 0 {
                write!(f, "{p}{s}")?;
            } else if let Some(rest) = p.strip_prefix('-') {
                write!(f, " - {rest}{s}")?;
            } else {
                write!(f, " + {p}{s}")?;
            }
        }
        Ok(())
    }
}
