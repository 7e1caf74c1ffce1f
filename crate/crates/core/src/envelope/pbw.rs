use std::collections::BTreeMap;
use std::fmt;

use crate::exactalg::LaurentPoly;
use crate::kacmoody::{bracket_basis, coeff_prefix, BasisSymbol, LieElt};

/// Ordered product of basis letters, nondecreasing in the PBW order
/// (`c` first, then by mode, `h < e < f` within a mode).
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct PbwMonomial(Vec<BasisSymbol>);

impl PbwMonomial {
    pub fn one() -> Self {
        PbwMonomial(Vec::new())
    }

    pub fn letters(&self) -> &[BasisSymbol] {
        &self.0
    }

    pub fn degree(&self) -> usize {
        self.0.len()
    }
}

impl fmt::Display for PbwMonomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return f.write_str("1");
        }
        let parts: Vec<String> = self.0.iter().map(ToString::to_string).collect();
        f.write_str(&parts.join("*"))
    }
}

/// Element of the universal enveloping algebra of affine sl2 in PBW form.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct UeaElt {
    terms: BTreeMap<PbwMonomial, LaurentPoly>,
}

impl UeaElt {
    pub fn zero() -> Self {
        UeaElt::default()
    }

    pub fn one() -> Self {
        Self::scalar(LaurentPoly::one())
    }

    pub fn scalar(c: LaurentPoly) -> Self {
        let mut out = UeaElt::zero();
        out.add_term(PbwMonomial::one(), c);
        out
    }

    pub fn from_lie(a: &LieElt) -> Self {
        let mut out = UeaElt::zero();
        for (s, k) in a.terms() {
            out.add_term(PbwMonomial(vec![*s]), k.clone());
        }
        out
    }

    /// Ordered product of letters, normal ordered.
    pub fn word(letters: &[BasisSymbol]) -> Self {
        let mut out = UeaElt::zero();
        normal_order(letters.to_vec(), LaurentPoly::one(), &mut out);
        out
    }

    fn add_term(&mut self, m: PbwMonomial, c: LaurentPoly) {
        if c.is_zero() {
            return;
        }
        let slot = self.terms.entry(m.clone()).or_insert_with(LaurentPoly::zero);
        *slot = &*slot + &c;
        if slot.is_zero() {
            self.terms.remove(&m);
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

    pub fn terms(&self) -> impl Iterator<Item = (&PbwMonomial, &LaurentPoly)> {
        self.terms.iter()
    }

    pub fn coeff(&self, m: &PbwMonomial) -> LaurentPoly {
        self.terms.get(m).cloned().unwrap_or_else(LaurentPoly::zero)
    }

    pub fn scale(&self, c: &LaurentPoly) -> UeaElt {
        let mut out = UeaElt::zero();
        for (m, k) in &self.terms {
            out.add_term(m.clone(), k * c);
        }
        out
    }

    pub fn scale_int(&self, c: i64) -> UeaElt {
        self.scale(&LaurentPoly::int(c))
    }
}

impl std::ops::Add for &UeaElt {
    type Output = UeaElt;
    fn add(self, rhs: &UeaElt) -> UeaElt {
        let mut out = self.clone();
        for (m, k) in &rhs.terms {
            out.add_term(m.clone(), k.clone());
        }
        out
    }
}

impl std::ops::Sub for &UeaElt {
    type Output = UeaElt;
    fn sub(self, rhs: &UeaElt) -> UeaElt {
        self + &rhs.scale_int(-1)
    }
}

impl std::ops::Mul for &UeaElt {
    type Output = UeaElt;
    fn mul(self, rhs: &UeaElt) -> UeaElt {
        uea_mul(self, rhs)
    }
}

impl fmt::Display for UeaElt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        for (i, (m, k)) in self.terms.iter().enumerate() {
            let p = if m.0.is_empty() {
                match coeff_prefix(k).as_str() {
                    "" => "1".to_string(),
                    "-" => "-1".to_string(),
                    _ => k.to_string(),
                }
            } else {
                format!("{}{m}", coeff_prefix(k))
            };
            if i == 0 {
                f.write_str(&p)?;
            } else if let Some(rest) = p.strip_prefix('-') {
                write!(f, " - {rest}")?;
            } else {
                write!(f, " + {p}")?;
            }
        }
        Ok(())
    }
}

/// Rewrites `coeff * letters` into PBW form, adding it to `out`. Each step
/// replaces the first descent `y z` (with `y > z`) by `z y + [y, z]`.
fn normal_order(letters: Vec<BasisSymbol>, coeff: LaurentPoly, out: &mut UeaElt) {
    let mut work = vec![(letters, coeff)];
    while let Some((w, c)) = work.pop() {
        let Some(i) = (0..w.len().saturating_sub(1)).find(|&i| w[i] > w[i + 1]) else {
            out.add_term(PbwMonomial(w), c);
            continue;
        };
        // Letters that commute with everything can be sorted directly.
        if w[i + 1] == BasisSymbol::C {
            let mut rest: Vec<BasisSymbol> = w.iter().copied().filter(|s| *s != BasisSymbol::C).collect();
            let cs = w.len() - rest.len();
            let mut sorted = vec![BasisSymbol::C; cs];
            sorted.append(&mut rest);
            work.push((sorted, c));
            continue;
        }
        let mut swapped = w.clone();
        swapped.swap(i, i + 1);
        for (s, k) in bracket_basis(&w[i], &w[i + 1]).terms() {
            let mut nw = Vec::with_capacity(w.len() - 1);
            nw.extend_from_slice(&w[..i]);
            nw.push(*s);
            nw.extend_from_slice(&w[i + 2..]);
            work.push((nw, &c * k));
        }
        work.push((swapped, c));
    }
}

/// Product in the enveloping algebra.
pub fn uea_mul(a: &UeaElt, b: &UeaElt) -> UeaElt {
    let mut out = UeaElt::zero();
    for (ma, ka) in &a.terms {
        for (mb, kb) in &b.terms {
            let mut w = ma.0.clone();
            w.extend_from_slice(&mb.0);
            if ma.0.last().zip(mb.0.first()).map_or(true, |(x, y)| x <= y) {
                out.add_term(PbwMonomial(w), ka * kb);
            } else {
                normal_order(w, ka * kb, &mut out);
            }
        }
    }
    out
}

/// `ab - ba`, normal ordered.
pub fn uea_commutator(a: &UeaElt, b: &UeaElt) -> UeaElt {
    &uea_mul(a, b) - &uea_mul(b, a)
}
