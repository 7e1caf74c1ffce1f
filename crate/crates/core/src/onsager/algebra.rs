use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::exactalg::LaurentPoly;
use crate::kacmoody::{coeff_prefix, LieElt};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum OnsFamily {
    Onsager,
    Augmented,
    Invariant,
}

impl OnsFamily {
    pub const ALL: [OnsFamily; 3] = [OnsFamily::Onsager, OnsFamily::Augmented, OnsFamily::Invariant];

    pub fn name(&self) -> &'static str {
        match self {
            OnsFamily::Onsager => "onsager",
            OnsFamily::Augmented => "augmented",
            OnsFamily::Invariant => "invariant",
        }
    }

    pub fn kinds(&self) -> &'static [OnsKind] {
        match self {
            OnsFamily::Onsager => &[OnsKind::A, OnsKind::G],
            OnsFamily::Augmented => &[OnsKind::K, OnsKind::Zp, OnsKind::Zm],
            OnsFamily::Invariant => &[OnsKind::H, OnsKind::E, OnsKind::F],
        }
    }

    /// Canonical basis symbols with `|mode| <= window`.
    pub fn basis(&self, window: i64) -> Vec<OnsSymbol> {
        let mut out = Vec::new();
        for &kind in self.kinds() {
            let (lo, hi) = match kind {
                OnsKind::A => (-window, window),
                OnsKind::G | OnsKind::Zp => (1, window),
                _ => (0, window),
            };
            out.extend((lo..=hi).map(|n| OnsSymbol { kind, mode: n }));
        }
        out
    }
}

impl fmt::Display for OnsFamily {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for OnsFamily {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        OnsFamily::ALL
            .iter()
            .copied()
            .find(|f| f.name() == s)
            .ok_or_else(|| Error::Unknown {
                kind: "algebra",
                name: s.to_string(),
            })
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub enum OnsKind {
    A,
    G,
    K,
    Zp,
    Zm,
    H,
    E,
    F,
}

impl OnsKind {
    pub fn family(&self) -> OnsFamily {
        match self {
            OnsKind::A | OnsKind::G => OnsFamily::Onsager,
            OnsKind::K | OnsKind::Zp | OnsKind::Zm => OnsFamily::Augmented,
            _ => OnsFamily::Invariant,
        }
    }

    fn label(&self) -> &'static str {
        match self {
            OnsKind::A => "A",
            OnsKind::G => "G",
            OnsKind::K => "K",
            OnsKind::Zp => "Z+",
            OnsKind::Zm => "Z-",
            OnsKind::H => "H",
            OnsKind::E => "E",
            OnsKind::F => "F",
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct OnsSymbol {
    pub kind: OnsKind,
    pub mode: i64,
}

impl OnsSymbol {
    pub fn new(kind: OnsKind, mode: i64) -> Self {
        OnsSymbol { kind, mode }
    }

    pub fn family(&self) -> OnsFamily {
        self.kind.family()
    }
}

impl fmt::Display for OnsSymbol {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}_{}", self.kind.label(), self.mode)
    }
}

/// Element of one of the Onsager-type algebras; symbols are always canonical.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct OnsElt {
    terms: BTreeMap<OnsSymbol, LaurentPoly>,
}

impl OnsElt {
    pub fn zero() -> Self {
        OnsElt::default()
    }

    /// The element named by any (possibly non-canonical) symbol.
    pub fn sym(kind: OnsKind, mode: i64) -> Self {
        canonicalize(kind, mode)
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&OnsSymbol, &LaurentPoly)> {
        self.terms.iter()
    }

    pub fn coeff(&self, s: &OnsSymbol) -> LaurentPoly {
        self.terms.get(s).cloned().unwrap_or_else(LaurentPoly::zero)
    }

    pub fn family(&self) -> Option<OnsFamily> {
        self.terms.keys().next().map(OnsSymbol::family)
    }

    /// Adds `coeff` times the element named by `(kind, mode)`.
    pub fn add_sym(&mut self, kind: OnsKind, mode: i64, coeff: &LaurentPoly) {
        for (s, k) in &canonicalize(kind, mode).terms {
            self.add_canonical(*s, k * coeff);
        }
    }

    fn add_canonical(&mut self, s: OnsSymbol, coeff: LaurentPoly) {
        if coeff.is_zero() {
            return;
        }
        let slot = self.terms.entry(s).or_insert_with(LaurentPoly::zero);
        *slot = &*slot + &coeff;
        if slot.is_zero() {
            self.terms.remove(&s);
        }
    }

    pub fn scale(&self, c: &LaurentPoly) -> OnsElt {
        let mut out = OnsElt::zero();
        for (s, k) in &self.terms {
            out.add_canonical(*s, k * c);
        }
        out
    }

    pub fn scale_int(&self, c: i64) -> OnsElt {
        self.scale(&LaurentPoly::int(c))
    }

    /// Linear extension of a map on canonical symbols.
    pub fn map_lie(&self, f: impl Fn(&OnsSymbol) -> LieElt) -> LieElt {
        let mut out = LieElt::zero();
        for (s, k) in &self.terms {
            out += &f(s).scale(k);
        }
        out
    }
}

impl std::ops::Add for &OnsElt {
    type Output = OnsElt;
    fn add(self, rhs: &OnsElt) -> OnsElt {
        let mut out = self.clone();
        for (s, k) in &rhs.terms {
            out.add_canonical(*s, k.clone());
        }
        out
    }
}

impl std::ops::Sub for &OnsElt {
    type Output = OnsElt;
    fn sub(self, rhs: &OnsElt) -> OnsElt {
        self + &rhs.scale_int(-1)
    }
}

impl std::ops::Neg for &OnsElt {
    type Output = OnsElt;
    fn neg(self) -> OnsElt {
        self.scale_int(-1)
    }
}

impl fmt::Display for OnsElt {
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

/// Reduces a symbol by the linear relations `G_{-n} = -G_n`, `K_{-n} = K_n`,
/// `Z+_n = Z+_{1-n}`, `Z-_n = Z-_{-n-1}` and `X_{-n} = X_n` for `X = H, E, F`.
pub fn canonicalize(kind: OnsKind, mode: i64) -> OnsElt {
    let (m, sign) = match kind {
        OnsKind::A => (mode, 1),
        OnsKind::G => match mode.signum() {
            0 => return OnsElt::zero(),
            s => (mode.abs(), s),
        },
        OnsKind::Zp => (if mode >= 1 { mode } else { 1 - mode }, 1),
        OnsKind::Zm => (if mode >= 0 { mode } else { -mode - 1 }, 1),
        OnsKind::K | OnsKind::H | OnsKind::E | OnsKind::F => (mode.abs(), 1),
    };
    let mut out = OnsElt::zero();
    out.add_canonical(OnsSymbol::new(kind, m), LaurentPoly::int(sign));
    out
}

/// The defining relations, applied to raw symbols and canonicalized.
pub fn bracket_symbols(a: &OnsSymbol, b: &OnsSymbol) -> Result<OnsElt> {
    use OnsKind::*;
    if a.family() != b.family() {
        return Err(Error::MixedFamilies);
    }
    let (n, m) = (a.mode, b.mode);
    let mut out = OnsElt::zero();
    let mut put = |kind: OnsKind, mode: i64, c: i64| out.add_sym(kind, mode, &LaurentPoly::int(c));
    match (a.kind, b.kind) {
        (A, A) => put(G, n - m, 4),
        (G, A) => {
            put(A, n + m, 2);
            put(A, m - n, -2);
        }
        (A, G) => {
            put(A, m + n, -2);
            put(A, n - m, 2);
        }
        (Zp, Zm) => {
            put(K, n + m, 4);
            put(K, -n + m + 1, 4);
        }
        (Zm, Zp) => {
            put(K, m + n, -4);
            put(K, -m + n + 1, -4);
        }
        (K, Zp) | (K, Zm) => {
            let s = if b.kind == Zp { 2 } else { -2 };
            put(b.kind, n + m, s);
            put(b.kind, -n + m, s);
        }
        (Zp, K) | (Zm, K) => {
            let s = if a.kind == Zp { -2 } else { 2 };
            put(a.kind, m + n, s);
            put(a.kind, -m + n, s);
        }
        (H, E) | (H, F) => {
            let s = if b.kind == E { 2 } else { -2 };
            put(b.kind, n + m, s);
            put(b.kind, -n + m, s);
        }
        (E, H) | (F, H) => {
            let s = if a.kind == E { -2 } else { 2 };
            put(a.kind, m + n, s);
            put(a.kind, -m + n, s);
        }
        (E, F) => {
            put(H, n + m, 1);
            put(H, -n + m, 1);
        }
        (F, E) => {
            put(H, m + n, -1);
            put(H, -m + n, -1);
        }
        _ => {}
    }
    Ok(out)
}

/// Bilinear extension of a bracket on symbols.
pub fn bracket_with(
    a: &OnsElt,
    b: &OnsElt,
    on_symbols: &dyn Fn(&OnsSymbol, &OnsSymbol) -> Result<OnsElt>,
) -> Result<OnsElt> {
    let mut out = OnsElt::zero();
    for (sa, ca) in a.terms() {
        for (sb, cb) in b.terms() {
            out = &out + &on_symbols(sa, sb)?.scale(&(ca * cb));
        }
    }
    Ok(out)
}

/// Bracket of the abstract algebra.
pub fn abstract_bracket(a: &OnsElt, b: &OnsElt) -> Result<OnsElt> {
    bracket_with(a, b, &bracket_symbols)
}

/// Image in affine sl2 of a canonical symbol:
/// `A_n -> 2(e_n + f_{-n})`, `G_n -> h_n - h_{-n}`;
/// `K_n -> h_n + h_{-n} + c delta_n`, `Z+_n -> 2(e_n + e_{1-n})`, `Z-_n -> 2(f_n + f_{-n-1})`;
/// `E_n -> e_n + e_{-n}`, `F_n -> f_n + f_{-n}`, `H_n -> h_n + h_{-n}`.
pub fn morphism_image(s: &OnsSymbol) -> LieElt {
    let n = s.mode;
    let delta_c = |k: i64| {
        if n == 0 {
            LieElt::c().scale_int(k)
        } else {
            LieElt::zero()
        }
    };
    match s.kind {
        OnsKind::A => (LieElt::e(n) + LieElt::f(-n)).scale_int(2),
        OnsKind::G => LieElt::h(n) - LieElt::h(-n),
        OnsKind::K => LieElt::h(n) + LieElt::h(-n) + delta_c(1),
        OnsKind::Zp => (LieElt::e(n) + LieElt::e(1 - n)).scale_int(2),
        OnsKind::Zm => (LieElt::f(n) + LieElt::f(-n - 1)).scale_int(2),
        OnsKind::E => LieElt::e(n) + LieElt::e(-n),
        OnsKind::F => LieElt::f(n) + LieElt::f(-n),
        OnsKind::H => LieElt::h(n) + LieElt::h(-n),
    }
}

/// The generators of the kappa_plus subalgebra:
/// `Ebar_n -> 2(e_n + e_{-n})`, `Fbar_n -> 2(f_n + f_{-n})`, `Hbar_n -> h_n + h_{-n}`.
pub fn bar_image(s: &OnsSymbol) -> LieElt {
    let n = s.mode;
    match s.kind {
        OnsKind::E => (LieElt::e(n) + LieElt::e(-n)).scale_int(2),
        OnsKind::F => (LieElt::f(n) + LieElt::f(-n)).scale_int(2),
        OnsKind::H => LieElt::h(n) + LieElt::h(-n),
        _ => LieElt::zero(),
    }
}

/// The generators of the kappa_minus subalgebra:
/// `Etil_n -> 2(e_{n+1} + e_{1-n})`, `Ftil_n -> 2(f_{n-1} + f_{-n-1})`,
/// `Htil_n -> h_n + h_{-n} + 2c delta_n`.
pub fn tilde_image(s: &OnsSymbol) -> LieElt {
    let n = s.mode;
    match s.kind {
        OnsKind::E => (LieElt::e(n + 1) + LieElt::e(1 - n)).scale_int(2),
        OnsKind::F => (LieElt::f(n - 1) + LieElt::f(-n - 1)).scale_int(2),
        OnsKind::H => {
            let mut h = LieElt::h(n) + LieElt::h(-n);
            if n == 0 {
                h += &LieElt::c().scale_int(2);
            }
            h
        }
        _ => LieElt::zero(),
    }
}

/// Homomorphism of the invariant algebra onto the kappa_plus (or, with
/// `tilde`, kappa_minus) subalgebra: `E -> Ebar/2`, `F -> Fbar/2`, `H -> Hbar`.
pub fn kappa_hom(s: &OnsSymbol, tilde: bool) -> LieElt {
    let g = if tilde { tilde_image(s) } else { bar_image(s) };
    match s.kind {
        OnsKind::E | OnsKind::F => g.scale_rat(&crate::exactalg::rat(1, 2)),
        _ => g,
    }
}
