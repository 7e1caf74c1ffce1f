use std::fmt;
use std::str::FromStr;

use serde::Serialize;

use super::pbw::{uea_commutator, uea_mul, UeaElt};
use crate::currents::{build_b, BFamily, CurrentMat};
use crate::error::{Error, Result};
use crate::exactalg::{LaurentPoly, Variable};
use crate::kacmoody::{bracket, LieElt};
use crate::onsager::{bar_image, OnsElt, OnsFamily, OnsKind, OnsSymbol};
use crate::report::{CheckReport, Collector};
use crate::tensormat::{symbolic_boundary, BoundaryFamily};
use crate::vars;

/// The B(x) matrix realizing each algebra.
pub fn b_family(f: OnsFamily) -> BFamily {
    match f {
        OnsFamily::Onsager => BFamily::Onsager,
        OnsFamily::Augmented => BFamily::Augmented,
        OnsFamily::Invariant => BFamily::Invariant,
    }
}

/// The matrix M(x) defining the linear charges.
pub fn m_family(f: OnsFamily) -> BoundaryFamily {
    match f {
        OnsFamily::Onsager => BoundaryFamily::MOns,
        OnsFamily::Augmented => BoundaryFamily::MAug,
        OnsFamily::Invariant => BoundaryFamily::MInv,
    }
}

/// Which definition of the linear charges to use.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum LinearVariant {
    /// The closed formulas for I_k.
    Formula,
    /// The x^k coefficient of tr(M(x) B(x)).
    Coefficient,
}

impl LinearVariant {
    pub fn name(&self) -> &'static str {
        match self {
            LinearVariant::Formula => "formula",
            LinearVariant::Coefficient => "coefficient",
        }
    }
}

impl fmt::Display for LinearVariant {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum ChargeKind {
    Linear,
    Quadratic,
}

impl FromStr for ChargeKind {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "linear" => Ok(ChargeKind::Linear),
            "quadratic" => Ok(ChargeKind::Quadratic),
            _ => Err(Error::Unknown {
                kind: "charge kind",
                name: s.to_string(),
            }),
        }
    }
}

fn p(name: &str) -> LaurentPoly {
    LaurentPoly::var(Variable::parameter(name))
}

/// Linear charge `I_k` from the closed formulas, with symbolic parameters:
/// `kappa(A_k + A_-k) + kappa*(A_{k+1} + A_{1-k}) + mu(G_{k+1} - G_{k-1})`,
/// `tau K_k + nu(Z+_k + Z+_{k+1}) + nu*(Z-_{k-1} + Z-_k)` with `Z+_0 = Z-_{-1} = 0`,
/// and the x^k coefficient of `mu0 H(x) + mu1 E(x) + mu2 F(x)`.
pub fn build_linear_charge(family: OnsFamily, k: i64) -> Result<LieElt> {
    if k < 0 {
        return Err(Error::InexactCoefficient { k, max: i64::MAX });
    }
    use OnsKind::*;
    let mut e = OnsElt::zero();
    match family {
        OnsFamily::Onsager => {
            let (kappa, ks, mu) = (p("kappa"), p("kappa*"), p("mu"));
            e.add_sym(A, k, &kappa);
            e.add_sym(A, -k, &kappa);
            e.add_sym(A, k + 1, &ks);
            e.add_sym(A, 1 - k, &ks);
            e.add_sym(G, k + 1, &mu);
            e.add_sym(G, k - 1, &-&mu);
        }
        OnsFamily::Augmented => {
            let (tau, nu, nus) = (p("tau"), p("nu"), p("nu*"));
            e.add_sym(K, k, &tau);
            for m in [k, k + 1] {
                if m != 0 {
                    e.add_sym(Zp, m, &nu);
                }
            }
            for m in [k - 1, k] {
                if m != -1 {
                    e.add_sym(Zm, m, &nus);
                }
            }
        }
        OnsFamily::Invariant => {
            let scale = if k == 0 { crate::exactalg::rat(1, 2) } else { crate::exactalg::rat(1, 1) };
            let mut out = LieElt::zero();
            for (kind, name) in [(H, "mu0"), (E, "mu1"), (F, "mu2")] {
                let img = bar_image(&OnsSymbol::new(kind, k)).scale_rat(&scale);
                out += &img.scale(&p(name));
            }
            return Ok(out);
        }
    }
    Ok(e.map_lie(crate::onsager::morphism_image))
}

/// The x^k coefficient of `tr(M(x) B(x))`; needs B up to degree `k + 1`.
pub fn build_linear_charge_raw(family: OnsFamily, k: i64, window: i64) -> Result<LieElt> {
    let b = build_b(b_family(family), window)?;
    raw_from(&b, family, k, window)
}

fn raw_from(b: &CurrentMat, family: OnsFamily, k: i64, window: i64) -> Result<LieElt> {
    if k < 0 || k + 1 > window {
        return Err(Error::InexactCoefficient { k, max: window - 1 });
    }
    let m = symbolic_boundary(m_family(family))?;
    let x = vars::x();
    let mut out = LieElt::zero();
    for i in 0..2 {
        for j in 0..2 {
            let entry = m
                .matrix()
                .get(i, j)
                .to_laurent()
                .ok_or_else(|| Error::NotLaurent(m.matrix().get(i, j).to_string()))?;
            for (d, c) in entry.coefficients_in(x)? {
                out += &b.get((j, i), &[k - d]).scale(&c);
            }
        }
    }
    Ok(out)
}

/// Linear charges `I_0 .. I_max_k` in the given variant.
pub fn linear_charges(family: OnsFamily, variant: LinearVariant, max_k: i64, window: i64) -> Result<Vec<LieElt>> {
    match variant {
        LinearVariant::Formula => (0..=max_k).map(|k| build_linear_charge(family, k)).collect(),
        LinearVariant::Coefficient => {
            let b = build_b(b_family(family), window)?;
            (0..=max_k).map(|k| raw_from(&b, family, k, window)).collect()
        }
    }
}

/// Largest k for which `t_k` is exact at this window.
pub fn quadratic_max_k(family: BFamily, window: i64) -> i64 {
    window + family.natural_lo()
}

/// The x^k coefficient of `tr(B(x)^2)` in the enveloping algebra.
pub fn build_quadratic_charge(family: BFamily, k: i64, window: i64) -> Result<UeaElt> {
    let b = build_b(family, window)?;
    quadratic_from(&b, family, k, window)
}

fn quadratic_from(b: &CurrentMat, family: BFamily, k: i64, window: i64) -> Result<UeaElt> {
    let max = quadratic_max_k(family, window);
    if k > max {
        return Err(Error::InexactCoefficient { k, max });
    }
    let lo = family.natural_lo();
    let mut out = UeaElt::zero();
    for i in 0..2 {
        for j in 0..2 {
            for p in lo..=k - lo {
                let (u, v) = (b.get((i, j), &[p]), b.get((j, i), &[k - p]));
                if u.is_zero() || v.is_zero() {
                    continue;
                }
                out = &out + &uea_mul(&UeaElt::from_lie(&u), &UeaElt::from_lie(&v));
            }
        }
    }
    Ok(out)
}

/// `t_0 .. t_max_k`.
pub fn quadratic_charges(family: BFamily, max_k: i64, window: i64) -> Result<Vec<UeaElt>> {
    let b = build_b(family, window)?;
    (0..=max_k).map(|k| quadratic_from(&b, family, k, window)).collect()
}

/// `[I_j, I_k] = 0` for all `j < k`, with parameters symbolic.
pub fn check_linear_commutativity_with(name: &str, charges: &[LieElt]) -> CheckReport {
    let mut c = Collector::new(name);
    c.region(format!("I_j, I_k for 0 <= j < k <= {}", charges.len().saturating_sub(1)));
    for (j, a) in charges.iter().enumerate() {
        for (k, b) in charges.iter().enumerate().skip(j + 1) {
            let r = bracket(a, b);
            c.compare(|| format!("[I_{j}, I_{k}]"), (!r.is_zero()).then(|| r.to_string()));
        }
    }
    c.finish()
}

/// `[t_j, t_k] = 0` for all `j < k` in the enveloping algebra.
pub fn check_quadratic_commutativity_with(name: &str, charges: &[UeaElt]) -> CheckReport {
    let mut c = Collector::new(name);
    c.region(format!("t_j, t_k for 0 <= j < k <= {}", charges.len().saturating_sub(1)));
    for (j, a) in charges.iter().enumerate() {
        for (k, b) in charges.iter().enumerate().skip(j + 1) {
            let r = uea_commutator(a, b);
            c.compare(
                || format!("[t_{j}, t_{k}]"),
                (!r.is_zero()).then(|| format!("{} PBW terms", r.len())),
            );
        }
    }
    c.finish()
}

/// Commutativity of the linear (coefficient variant) or quadratic charges.
pub fn check_charge_commutativity(family: OnsFamily, kind: ChargeKind, max_k: i64, window: i64) -> Result<CheckReport> {
    match kind {
        ChargeKind::Linear => check_linear_commutativity(family, LinearVariant::Coefficient, max_k, window),
        ChargeKind::Quadratic => {
            let t = quadratic_charges(b_family(family), max_k, window)?;
            Ok(check_quadratic_commutativity_with(
                &format!("quadratic charges ({family})"),
                &t,
            ))
        }
    }
}

pub fn check_linear_commutativity(
    family: OnsFamily,
    variant: LinearVariant,
    max_k: i64,
    window: i64,
) -> Result<CheckReport> {
    let charges = linear_charges(family, variant, max_k, window)?;
    Ok(check_linear_commutativity_with(
        &format!("linear charges ({family}, {variant})"),
        &charges,
    ))
}

/// `[t_j, b_k]` with `b_k` the coefficient-variant linear charge. Not
/// expected to vanish; reported without a verdict.
pub fn t_b_commutator(family: OnsFamily, j: i64, k: i64, window: i64) -> Result<UeaElt> {
    let t = build_quadratic_charge(b_family(family), j, window)?;
    let b = build_linear_charge_raw(family, k, window)?;
    Ok(uea_commutator(&t, &UeaElt::from_lie(&b)))
}
