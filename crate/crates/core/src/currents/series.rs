use std::collections::BTreeMap;
use std::fmt;

use crate::error::{Error, Result};
use crate::exactalg::{LaurentPoly, Monomial, RatFun, Variable};
use crate::kacmoody::{bracket, LieElt};
use crate::tensormat::TensorMat;

/// Range of degrees (per variable) on which stored coefficients equal the
/// true series coefficients; `None` means unbounded in that direction.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Default)]
pub struct ExactRange {
    pub lo: Option<i64>,
    pub hi: Option<i64>,
}

impl ExactRange {
    pub fn unbounded() -> Self {
        ExactRange { lo: None, hi: None }
    }

    pub fn contains(&self, d: i64) -> bool {
        self.lo.map_or(true, |l| d >= l) && self.hi.map_or(true, |h| d <= h)
    }

    pub fn intersect(&self, o: &ExactRange) -> ExactRange {
        let pick = |a: Option<i64>, b: Option<i64>, f: fn(i64, i64) -> i64| match (a, b) {
            (Some(a), Some(b)) => Some(f(a, b)),
            (a, None) => a,
            (None, b) => b,
        };
        ExactRange {
            lo: pick(self.lo, o.lo, i64::max),
            hi: pick(self.hi, o.hi, i64::min),
        }
    }

    /// Exact range after multiplying by a Laurent polynomial whose degrees
    /// in this variable span `[min, max]`.
    pub fn shift(&self, min: i64, max: i64) -> ExactRange {
        ExactRange {
            lo: self.lo.map(|l| l + max),
            hi: self.hi.map(|h| h + min),
        }
    }
}

/// Natural support and truncation window of a series in one variable.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SupportMeta {
    pub natural_lo: Option<i64>,
    pub natural_hi: Option<i64>,
    pub trunc_lo: i64,
    pub trunc_hi: i64,
}

impl SupportMeta {
    pub fn new(natural_lo: Option<i64>, natural_hi: Option<i64>, trunc_lo: i64, trunc_hi: i64) -> Self {
        SupportMeta {
            natural_lo,
            natural_hi,
            trunc_lo,
            trunc_hi,
        }
    }

    /// Where the truncated series is exact: everything outside the natural
    /// support is exactly zero.
    pub fn exact(&self) -> ExactRange {
        let lo = match self.natural_lo {
            Some(n) if self.trunc_lo <= n => None,
            _ => Some(self.trunc_lo),
        };
        let hi = match self.natural_hi {
            Some(n) if self.trunc_hi >= n => None,
            _ => Some(self.trunc_hi),
        };
        ExactRange { lo, hi }
    }
}

pub type Degree = Vec<i64>;
type Entry = BTreeMap<Degree, LieElt>;

/// A `2^legs x 2^legs` matrix of truncated Laurent series in `vars` with
/// coefficients in affine sl2.
#[derive(Clone, Debug)]
pub struct CurrentMat {
    legs: usize,
    vars: Vec<Variable>,
    entries: BTreeMap<(usize, usize), Entry>,
    meta: Vec<SupportMeta>,
    exact: Vec<ExactRange>,
}

/// Scalar matrix with Laurent polynomial entries.
#[derive(Clone, Debug)]
pub struct PolyMat {
    pub legs: usize,
    pub entries: Vec<LaurentPoly>,
}

impl PolyMat {
    pub fn dim(&self) -> usize {
        1 << self.legs
    }

    pub fn get(&self, i: usize, j: usize) -> &LaurentPoly {
        &self.entries[i * self.dim() + j]
    }

    /// Entries of a rational matrix that are Laurent polynomials.
    pub fn from_tensor(m: &TensorMat) -> Result<PolyMat> {
        let entries = m
            .entries()
            .iter()
            .map(|e| e.to_laurent().ok_or_else(|| Error::NotLaurent(e.to_string())))
            .collect::<Result<_>>()?;
        Ok(PolyMat {
            legs: m.legs(),
            entries,
        })
    }

    /// `clearing * m`, entrywise.
    pub fn cleared(m: &TensorMat, clearing: &[(LaurentPoly, u32)]) -> Result<PolyMat> {
        let entries = m
            .entries()
            .iter()
            .map(|e| {
                e.clear_with(clearing)
                    .ok_or_else(|| Error::NotLaurent(e.to_string()))
            })
            .collect::<Result<_>>()?;
        Ok(PolyMat {
            legs: m.legs(),
            entries,
        })
    }

    /// Degree span in `v` over all entries.
    fn span(&self, v: Variable) -> Option<(i64, i64)> {
        self.entries
            .iter()
            .filter_map(|p| p.degree_range(v))
            .fold(None, |acc, (lo, hi)| {
                let (lo, hi) = (i64::from(lo) / 2, i64::from(hi) / 2);
                Some(match acc {
                    None => (lo, hi),
                    Some((a, b)) => (a.min(lo), b.max(hi)),
                })
            })
    }
}

/// Splits a monomial into integer degrees in `vars` and the remaining factor.
fn split(m: &Monomial, vars: &[Variable]) -> Result<(Degree, Monomial)> {
    let mut rest = m.clone();
    let mut deg = Vec::with_capacity(vars.len());
    for v in vars {
        let (e, r) = rest.split_off(*v);
        if e % 2 != 0 {
            return Err(Error::NotLaurent(format!("half-integer power of {v}")));
        }
        deg.push(i64::from(e / 2));
        rest = r;
    }
    if let Some((v, _)) = rest.pairs().iter().find(|(v, _)| v.is_spectral()) {
        return Err(Error::VariableKind(format!("unexpected spectral variable {v}")));
    }
    Ok((deg, rest))
}

impl CurrentMat {
    /// Empty series; `meta` gives one entry per variable.
    pub fn new(legs: usize, vars: Vec<Variable>, meta: Vec<SupportMeta>) -> Self {
        assert_eq!(vars.len(), meta.len());
        let exact = meta.iter().map(SupportMeta::exact).collect();
        CurrentMat {
            legs,
            vars,
            entries: BTreeMap::new(),
            meta,
            exact,
        }
    }

    /// A derived series with explicit exact ranges.
    fn derived(legs: usize, vars: Vec<Variable>, exact: Vec<ExactRange>) -> Self {
        let meta = vars.iter().map(|_| SupportMeta::new(None, None, 0, 0)).collect();
        let mut m = CurrentMat {
            legs,
            vars,
            entries: BTreeMap::new(),
            meta,
            exact,
        };
        m.refresh_meta();
        m
    }

    fn refresh_meta(&mut self) {
        for (i, meta) in self.meta.iter_mut().enumerate() {
            let degs = self.entries.values().flat_map(|e| e.keys().map(move |d| d[i]));
            let (lo, hi) = degs.fold((i64::MAX, i64::MIN), |(a, b), d| (a.min(d), b.max(d)));
            if lo <= hi {
                meta.trunc_lo = lo;
                meta.trunc_hi = hi;
            }
        }
    }

    pub fn legs(&self) -> usize {
        self.legs
    }

    pub fn dim(&self) -> usize {
        1 << self.legs
    }

    pub fn vars(&self) -> &[Variable] {
        &self.vars
    }

    pub fn meta(&self) -> &[SupportMeta] {
        &self.meta
    }

    pub fn exact(&self) -> &[ExactRange] {
        &self.exact
    }

    pub fn is_zero(&self) -> bool {
        self.entries.is_empty()
    }

    /// Adds `elt` to the coefficient at zero-based `pos` and `deg`.
    pub fn add_at(&mut self, pos: (usize, usize), deg: Degree, elt: &LieElt) {
        if elt.is_zero() {
            return;
        }
        let entry = self.entries.entry(pos).or_default();
        let slot = entry.entry(deg.clone()).or_default();
        *slot += elt;
        if slot.is_zero() {
            entry.remove(&deg);
            if entry.is_empty() {
                self.entries.remove(&pos);
            }
        }
    }

    pub fn get(&self, pos: (usize, usize), deg: &[i64]) -> LieElt {
        self.entries
            .get(&pos)
            .and_then(|e| e.get(deg))
            .cloned()
            .unwrap_or_default()
    }

    /// Every stored `(position, degree, coefficient)`.
    pub fn iter(&self) -> impl Iterator<Item = ((usize, usize), &Degree, &LieElt)> {
        self.entries
            .iter()
            .flat_map(|(p, e)| e.iter().map(move |(d, l)| (*p, d, l)))
    }

    /// Coefficient matrix at one degree inside the truncation window.
    pub fn extract_mode(&self, deg: &[i64]) -> Result<Vec<Vec<LieElt>>> {
        let inside = deg.len() == self.vars.len()
            && deg
                .iter()
                .zip(&self.meta)
                .all(|(d, m)| *d >= m.trunc_lo && *d <= m.trunc_hi);
        if !inside {
            return Err(Error::OutOfWindow(deg.to_vec()));
        }
        let d = self.dim();
        Ok((0..d)
            .map(|i| (0..d).map(|j| self.get((i, j), deg)).collect())
            .collect())
    }

    /// The same series read in another variable.
    pub fn in_var(&self, v: Variable) -> CurrentMat {
        assert_eq!(self.vars.len(), 1);
        let mut out = self.clone();
        out.vars = vec![v];
        out
    }

    fn same_shape(&self, o: &CurrentMat) -> Result<()> {
        if self.legs != o.legs || self.vars != o.vars {
            return Err(Error::Shape("series over different legs or variables".into()));
        }
        Ok(())
    }

    pub fn add(&self, o: &CurrentMat) -> Result<CurrentMat> {
        self.same_shape(o)?;
        let exact = self.exact.iter().zip(&o.exact).map(|(a, b)| a.intersect(b)).collect();
        let mut out = CurrentMat::derived(self.legs, self.vars.clone(), exact);
        for (p, d, l) in self.iter().chain(o.iter()) {
            out.add_at(p, d.clone(), l);
        }
        out.refresh_meta();
        Ok(out)
    }

    pub fn neg(&self) -> CurrentMat {
        self.map(|l| -l)
    }

    pub fn sub(&self, o: &CurrentMat) -> Result<CurrentMat> {
        self.add(&o.neg())
    }

    /// Applies a linear map to every coefficient.
    pub fn map(&self, f: impl Fn(&LieElt) -> LieElt) -> CurrentMat {
        let mut out = self.clone();
        out.entries.clear();
        for (p, d, l) in self.iter() {
            out.add_at(p, d.clone(), &f(l));
        }
        out
    }

    /// Keeps only degrees with `lo <= deg <= hi` in the (single) variable.
    pub fn truncate(&self, lo: i64, hi: i64, natural_lo: Option<i64>) -> CurrentMat {
        assert_eq!(self.vars.len(), 1);
        let meta = SupportMeta::new(natural_lo, None, lo, hi);
        let mut out = CurrentMat::new(self.legs, self.vars.clone(), vec![meta]);
        out.exact = vec![self.exact[0].intersect(&meta.exact())];
        for (p, d, l) in self.iter() {
            if d[0] >= lo && d[0] <= hi {
                out.add_at(p, d.clone(), l);
            }
        }
        out
    }

    /// Reverses the sign of every degree (the substitution `x -> 1/x`).
    pub fn invert_variable(&self) -> CurrentMat {
        let mut out = self.clone();
        out.entries.clear();
        for (p, d, l) in self.iter() {
            out.add_at(p, d.iter().map(|x| -x).collect(), l);
        }
        out.meta = self
            .meta
            .iter()
            .map(|m| SupportMeta::new(m.natural_hi.map(|h| -h), m.natural_lo.map(|l| -l), -m.trunc_hi, -m.trunc_lo))
            .collect();
        out.exact = self
            .exact
            .iter()
            .map(|e| ExactRange {
                lo: e.hi.map(|h| -h),
                hi: e.lo.map(|l| -l),
            })
            .collect();
        out
    }

    /// Matrix transpose (single-leg series).
    pub fn transpose(&self) -> CurrentMat {
        let mut out = self.clone();
        out.entries.clear();
        for ((i, j), d, l) in self.iter() {
            out.add_at((j, i), d.clone(), l);
        }
        out
    }

    /// `P * self` (`left`) or `self * P` with a scalar Laurent matrix whose
    /// spectral variables are among `self.vars`.
    pub fn mul_scalar(&self, p: &PolyMat, left: bool) -> Result<CurrentMat> {
        if p.legs != self.legs {
            return Err(Error::Shape("scalar and series leg counts differ".into()));
        }
        let exact = self
            .vars
            .iter()
            .zip(&self.exact)
            .map(|(v, e)| match p.span(*v) {
                Some((lo, hi)) => e.shift(lo, hi),
                None => *e,
            })
            .collect();
        let mut out = CurrentMat::derived(self.legs, self.vars.clone(), exact);
        let d = self.dim();
        let mut split_cache: BTreeMap<usize, Vec<(Degree, LaurentPoly)>> = BTreeMap::new();
        for (pos, entry) in &self.entries {
            let (i, j) = *pos;
            for k in 0..d {
                let (idx, target) = if left {
                    (k * d + i, (k, j))
                } else {
                    (j * d + k, (i, k))
                };
                let poly = &p.entries[idx];
                if poly.is_zero() {
                    continue;
                }
                if !split_cache.contains_key(&idx) {
                    let mut terms = Vec::new();
                    for (m, c) in poly.terms() {
                        let (deg, rest) = split(m, &self.vars)?;
                        terms.push((deg, LaurentPoly::try_monomial(c.clone(), rest)?));
                    }
                    split_cache.insert(idx, terms);
                }
                for (sdeg, coeff) in &split_cache[&idx] {
                    for (deg, l) in entry {
                        let nd: Degree = deg.iter().zip(sdeg).map(|(a, b)| a + b).collect();
                        out.add_at(target, nd, &l.scale(coeff));
                    }
                }
            }
        }
        out.refresh_meta();
        Ok(out)
    }

    /// `k S k^{-1}` for a single-leg series; the products `k_ia (k^{-1})_bj`
    /// must be Laurent polynomials even when `k` itself is not.
    pub fn conjugate(&self, k: &TensorMat, k_inv: &TensorMat) -> Result<CurrentMat> {
        if self.legs != 1 || k.legs() != 1 {
            return Err(Error::Shape("conjugation of a single-leg series".into()));
        }
        let mut weights = Vec::with_capacity(16);
        for i in 0..2 {
            for j in 0..2 {
                for a in 0..2 {
                    for b in 0..2 {
                        let w = k.get(i, a) * k_inv.get(b, j);
                        let w = w.to_laurent().ok_or_else(|| Error::NotLaurent(w.to_string()))?;
                        weights.push(((i, j, a, b), w));
                    }
                }
            }
        }
        let span = PolyMat {
            legs: 2,
            entries: weights.iter().map(|(_, w)| w.clone()).collect(),
        };
        let exact = self
            .vars
            .iter()
            .zip(&self.exact)
            .map(|(v, e)| match span.span(*v) {
                Some((lo, hi)) => e.shift(lo, hi),
                None => *e,
            })
            .collect();
        let mut out = CurrentMat::derived(1, self.vars.clone(), exact);
        for ((i, j, a, b), w) in &weights {
            if w.is_zero() {
                continue;
            }
            let Some(entry) = self.entries.get(&(*a, *b)) else {
                continue;
            };
            for (m, c) in w.terms() {
                let (sdeg, rest) = split(m, &self.vars)?;
                let coeff = LaurentPoly::try_monomial(c.clone(), rest)?;
                for (deg, l) in entry {
                    let nd: Degree = deg.iter().zip(&sdeg).map(|(x, y)| x + y).collect();
                    out.add_at((*i, *j), nd, &l.scale(&coeff));
                }
            }
        }
        out.refresh_meta();
        Ok(out)
    }

    /// Puts a single-leg series on `leg` (1 or 2) of a two-leg space with
    /// variables `vars`; missing variables get degree 0 and are exact everywhere.
    pub fn lift(&self, leg: usize, vars: &[Variable]) -> Result<CurrentMat> {
        if self.legs != 1 || !(1..=2).contains(&leg) {
            return Err(Error::LegOutOfRange(format!("lift to leg {leg}")));
        }
        let index: Vec<Option<usize>> = vars
            .iter()
            .map(|v| self.vars.iter().position(|w| w == v))
            .collect();
        if self.vars.iter().any(|v| !vars.contains(v)) {
            return Err(Error::VariableKind("lift target misses a variable".into()));
        }
        let exact = index
            .iter()
            .map(|i| i.map_or(ExactRange::unbounded(), |i| self.exact[i]))
            .collect();
        let mut out = CurrentMat::derived(2, vars.to_vec(), exact);
        for ((i, j), d, l) in self.iter() {
            let deg: Degree = index.iter().map(|ix| ix.map_or(0, |k| d[k])).collect();
            for s in 0..2 {
                let pos = if leg == 1 {
                    (2 * i + s, 2 * j + s)
                } else {
                    (2 * s + i, 2 * s + j)
                };
                out.add_at(pos, deg.clone(), l);
            }
        }
        out.refresh_meta();
        Ok(out)
    }

    /// A scalar matrix times a fixed Lie element, e.g. a central term.
    pub fn from_scalar(p: &PolyMat, elt: &LieElt, vars: &[Variable]) -> Result<CurrentMat> {
        let exact = vars.iter().map(|_| ExactRange::unbounded()).collect();
        let mut unit = CurrentMat::derived(p.legs, vars.to_vec(), exact);
        let zero: Degree = vec![0; vars.len()];
        for i in 0..unit.dim() {
            unit.add_at((i, i), zero.clone(), elt);
        }
        unit.mul_scalar(p, true)
    }

    /// The same two-leg series with legs swapped.
    pub fn swap_legs(&self) -> Result<CurrentMat> {
        if self.legs != 2 {
            return Err(Error::Shape("leg swap needs two legs".into()));
        }
        let perm = |i: usize| ((i & 1) << 1) | (i >> 1);
        let mut out = self.clone();
        out.entries.clear();
        for ((i, j), d, l) in self.iter() {
            out.add_at((perm(i), perm(j)), d.clone(), l);
        }
        Ok(out)
    }

    /// The same series with its variables listed in the order `vars`.
    pub fn reorder(&self, vars: &[Variable]) -> Result<CurrentMat> {
        let perm: Vec<usize> = vars
            .iter()
            .map(|v| self.vars.iter().position(|w| w == v))
            .collect::<Option<_>>()
            .filter(|p: &Vec<usize>| p.len() == self.vars.len())
            .ok_or_else(|| Error::VariableKind("reorder needs the same variables".into()))?;
        let mut out = self.clone();
        out.vars = vars.to_vec();
        out.meta = perm.iter().map(|&i| self.meta[i]).collect();
        out.exact = perm.iter().map(|&i| self.exact[i]).collect();
        out.entries.clear();
        for (p, d, l) in self.iter() {
            out.add_at(p, perm.iter().map(|&i| d[i]).collect(), l);
        }
        Ok(out)
    }
}

/// Entrywise tensor-positioned bracket `[A_1(x), B_2(y)]` of two single-leg
/// series in distinct variables.
pub fn series_bracket(a: &CurrentMat, b: &CurrentMat) -> Result<CurrentMat> {
    if a.legs != 1 || b.legs != 1 || a.vars.len() != 1 || b.vars.len() != 1 {
        return Err(Error::Shape("series_bracket takes univariate 2x2 series".into()));
    }
    if a.vars[0] == b.vars[0] {
        return Err(Error::VariableCollision(a.vars[0].name()));
    }
    let vars = vec![a.vars[0], b.vars[0]];
    let exact = vec![a.exact[0], b.exact[0]];
    let mut out = CurrentMat::derived(2, vars, exact);
    for ((i, j), da, la) in a.iter() {
        for ((k, l), db, lb) in b.iter() {
            let br = bracket(la, lb);
            out.add_at((2 * i + k, 2 * j + l), vec![da[0], db[0]], &br);
        }
    }
    out.refresh_meta();
    Ok(out)
}

/// `[A_1(x) + ..., r]`-style products: `sign * (scalar * series)` or
/// `sign * (series * scalar)`.
#[derive(Clone, Debug)]
pub struct Product {
    pub scalar: TensorMat,
    pub series: CurrentMat,
    pub scalar_left: bool,
    pub sign: i64,
}

impl Product {
    pub fn plain(series: CurrentMat) -> Product {
        let legs = series.legs();
        Product {
            scalar: TensorMat::identity(legs),
            series,
            scalar_left: true,
            sign: 1,
        }
    }

    /// `sign * [series, scalar]` as two products.
    pub fn commutator(series: &CurrentMat, scalar: &TensorMat, sign: i64) -> [Product; 2] {
        [
            Product {
                scalar: scalar.clone(),
                series: series.clone(),
                scalar_left: false,
                sign,
            },
            Product {
                scalar: scalar.clone(),
                series: series.clone(),
                scalar_left: true,
                sign: -sign,
            },
        ]
    }

    /// `sign * scalar * elt` with a constant Lie element.
    pub fn central(scalar: &TensorMat, elt: &LieElt, vars: &[Variable], sign: i64) -> Result<Product> {
        let exact = vars.iter().map(|_| ExactRange::unbounded()).collect();
        let mut unit = CurrentMat::derived(scalar.legs(), vars.to_vec(), exact);
        for i in 0..unit.dim() {
            unit.add_at((i, i), vec![0; vars.len()], elt);
        }
        Ok(Product {
            scalar: scalar.clone(),
            series: unit,
            scalar_left: true,
            sign,
        })
    }
}

/// Box of degrees compared by a check.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Region {
    pub vars: Vec<Variable>,
    pub bounds: Vec<(i64, i64)>,
}

impl Region {
    pub fn contains(&self, d: &[i64]) -> bool {
        d.iter().zip(&self.bounds).all(|(x, (lo, hi))| x >= lo && x <= hi)
    }

    pub fn size(&self) -> usize {
        self.bounds.iter().map(|(lo, hi)| (hi - lo + 1) as usize).product()
    }
}

impl fmt::Display for Region {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self
            .vars
            .iter()
            .zip(&self.bounds)
            .map(|(v, (lo, hi))| format!("{lo} <= deg_{v} <= {hi}"))
            .collect();
        f.write_str(&parts.join(", "))
    }
}

/// Outcome of [`clear_and_compare`] before it is turned into a report.
#[derive(Clone, Debug)]
pub struct Comparison {
    pub clearing: LaurentPoly,
    pub region: Region,
    pub residual: CurrentMat,
}

/// Multiplies both sides by the least common denominator of every scalar
/// entry, then compares coefficients on the region where both sides are exact.
pub fn clear_and_compare(lhs: &[Product], rhs: &[Product]) -> Result<Comparison> {
    let all: Vec<&Product> = lhs.iter().chain(rhs).collect();
    let first = all.first().ok_or_else(|| Error::EmptyRegion("no terms".into()))?;
    let vars = first.series.vars().to_vec();
    let clearing = crate::exactalg::lcm_factors(
        all.iter()
            .flat_map(|p| p.scalar.entries().iter().map(RatFun::den_factors)),
    );
    let mut total: Option<CurrentMat> = None;
    let mut stored_box = vec![(i64::MAX, i64::MIN); vars.len()];
    for (p, side) in lhs.iter().map(|p| (p, 1)).chain(rhs.iter().map(|p| (p, -1))) {
        let poly = PolyMat::cleared(&p.scalar, &clearing)?;
        let mut term = p.series.mul_scalar(&poly, p.scalar_left)?;
        if !term.is_zero() {
            for (b, m) in stored_box.iter_mut().zip(term.meta()) {
                *b = (b.0.min(m.trunc_lo), b.1.max(m.trunc_hi));
            }
        }
        if p.sign * side < 0 {
            term = term.neg();
        }
        total = Some(match total {
            None => term,
            Some(t) => t.add(&term)?,
        });
    }
    let residual = total.expect("at least one term");
    let mut bounds = Vec::new();
    for (i, e) in residual.exact().iter().enumerate() {
        let (slo, shi) = stored_box[i];
        let lo = e.lo.map_or(slo, |l| l.max(slo));
        let hi = e.hi.map_or(shi, |h| h.min(shi));
        if lo > hi {
            return Err(Error::EmptyRegion(format!(
                "no exact coefficients in {}",
                vars[i]
            )));
        }
        bounds.push((lo, hi));
    }
    let clearing_poly = clearing
        .iter()
        .fold(LaurentPoly::one(), |acc, (a, m)| &acc * &a.pow(*m));
    Ok(Comparison {
        clearing: clearing_poly,
        region: Region { vars, bounds },
        residual,
    })
}
