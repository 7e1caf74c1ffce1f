use std::fmt;
use std::str::FromStr;

use serde::Serialize;

use super::series::{
    clear_and_compare, series_bracket, Comparison, CurrentMat, PolyMat, Product, SupportMeta,
};
use crate::error::{Error, Result};
use crate::exactalg::{rat, RatFun};
use crate::kacmoody::LieElt;
use crate::report::{CheckReport, Collector};
use crate::tensormat::{build_boundary, build_r, build_rbar, BoundaryFamily, BoundaryMat, Params, TensorMat};
use crate::vars;

/// Smallest window for which the FRT and exchange checks have a useful
/// safe region.
pub const MIN_WINDOW: i64 = 4;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Sign {
    Plus,
    Minus,
}

/// `T^+(x)` with modes `0..=window` or `T^-(x)` with modes `-window..=0`.
pub fn build_t(sign: Sign, window: i64) -> CurrentMat {
    let x = vars::x();
    let half = rat(1, 2);
    let meta = match sign {
        Sign::Plus => SupportMeta::new(Some(0), None, 0, window),
        Sign::Minus => SupportMeta::new(None, Some(0), -window, 0),
    };
    let mut t = CurrentMat::new(1, vec![x], vec![meta]);
    let s = match sign {
        Sign::Plus => 1,
        Sign::Minus => -1,
    };
    let h0 = LieElt::h(0).scale_rat(&half).scale_int(s);
    t.add_at((0, 0), vec![0], &h0);
    t.add_at((1, 1), vec![0], &-&h0);
    match sign {
        Sign::Plus => t.add_at((0, 1), vec![0], &LieElt::f(0).scale_int(2)),
        Sign::Minus => t.add_at((1, 0), vec![0], &LieElt::e(0).scale_int(-2)),
    }
    for n in 1..=window {
        let m = s * n;
        t.add_at((0, 0), vec![m], &LieElt::h(m).scale_int(s));
        t.add_at((0, 1), vec![m], &LieElt::f(m).scale_int(2 * s));
        t.add_at((1, 0), vec![m], &LieElt::e(m).scale_int(2 * s));
        t.add_at((1, 1), vec![m], &LieElt::h(m).scale_int(-s));
    }
    t
}

/// The four realizations of the reflection algebra considered here.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum BFamily {
    Onsager,
    Augmented,
    Invariant,
    KappaMinus,
}

impl BFamily {
    pub const ALL: [BFamily; 4] = [
        BFamily::Onsager,
        BFamily::Augmented,
        BFamily::Invariant,
        BFamily::KappaMinus,
    ];

    pub fn name(&self) -> &'static str {
        match self {
            BFamily::Onsager => "onsager",
            BFamily::Augmented => "augmented",
            BFamily::Invariant => "invariant",
            BFamily::KappaMinus => "kappa_minus",
        }
    }

    /// The twist or k-matrix defining the family.
    pub fn boundary(&self) -> BoundaryMat {
        let (fam, params) = match self {
            BFamily::Onsager => {
                let mut p = Params::new();
                p.insert("k".into(), RatFun::one());
                p.insert("k*".into(), RatFun::one());
                (BoundaryFamily::UDiag, p)
            }
            BFamily::Augmented => (BoundaryFamily::UOffdiag, BoundaryFamily::UOffdiag.symbolic_params()),
            BFamily::Invariant => (BoundaryFamily::KappaPlus, Params::new()),
            BFamily::KappaMinus => (BoundaryFamily::KappaMinus, Params::new()),
        };
        build_boundary(fam, &params).expect("fixed boundary matrices are valid")
    }

    /// Lowest power of `x` in `B(x)`.
    pub fn natural_lo(&self) -> i64 {
        match self {
            BFamily::KappaMinus => -1,
            _ => 0,
        }
    }
}

impl fmt::Display for BFamily {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for BFamily {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        BFamily::ALL
            .iter()
            .copied()
            .find(|f| f.name() == s)
            .ok_or_else(|| Error::Unknown {
                kind: "family",
                name: s.to_string(),
            })
    }
}

/// `B(x) = T^+(x) + k T^-(1/x)^t k^{-1} - c x k'(x) k(x)^{-1}` with powers
/// of `x` in `[family lower support, window]`.
pub fn build_b(family: BFamily, window: i64) -> Result<CurrentMat> {
    build_b_with(&family.boundary(), family.natural_lo(), window)
}

/// [`build_b`] for an arbitrary k-matrix whose conjugation shifts degrees by
/// at most two.
pub fn build_b_with(k: &BoundaryMat, natural_lo: i64, window: i64) -> Result<CurrentMat> {
    if window < 1 {
        return Err(Error::WindowTooSmall {
            window,
            reason: "B(x) needs at least one mode".into(),
        });
    }
    let x = vars::x();
    let inner = window + 2;
    let tp = build_t(Sign::Plus, inner);
    let tm = build_t(Sign::Minus, inner).invert_variable().transpose();
    let k_inv = k.inverse()?;
    let conj = tm.conjugate(k.matrix(), &k_inv)?;
    let dk = k.matrix().derivative(x)?.scale(&RatFun::var(x)).mul(&k_inv)?;
    let central = CurrentMat::from_scalar(&PolyMat::from_tensor(&dk)?, &-LieElt::c(), &[x])?;
    let b = tp.add(&conj)?.add(&central)?;
    Ok(b.truncate(natural_lo, window, Some(natural_lo)))
}

fn two_leg(m: &CurrentMat, leg: usize) -> Result<CurrentMat> {
    m.lift(leg, &[vars::x(), vars::y()])
}

fn report_comparison(c: &mut Collector, cmp: &Comparison, label: &str) {
    let d = cmp.residual.dim();
    let mut failing = 0;
    for (pos, deg, l) in cmp.residual.iter() {
        if cmp.region.contains(deg) {
            failing += 1;
            c.compare(
                || format!("{label} entry ({},{}) at degree {:?}", pos.0 + 1, pos.1 + 1, deg),
                Some(l),
            );
        }
    }
    c.add_compared((d * d * cmp.region.size()).saturating_sub(failing));
}

fn require_window(window: i64) -> Result<()> {
    if window < MIN_WINDOW {
        return Err(Error::WindowTooSmall {
            window,
            reason: format!("safe region too small (need window >= {MIN_WINDOW})"),
        });
    }
    Ok(())
}

/// `x/y r'(x/y)` on two legs.
fn r_derivative_term() -> Result<TensorMat> {
    let u = vars::u();
    let r = build_r(u);
    let f = r.derivative(u)?.scale(&RatFun::var(u));
    f.subs(&[(u, RatFun::var(vars::x()).checked_div(&RatFun::var(vars::y()))?)])
}

/// The defining relations of the FRT algebra on `T^+` and `T^-`:
/// `[T, c] = 0`, `[T1(x), T2(y)] = [T1(x) + T2(y), r12(x/y)]` for equal signs
/// and the mixed relation with the central term `-2c r'12(x/y) x/y`.
pub fn check_frt_relations(window: i64) -> Result<CheckReport> {
    check_frt_relations_with(window, true)
}

/// [`check_frt_relations`] with the central term optionally dropped.
pub fn check_frt_relations_with(window: i64, central: bool) -> Result<CheckReport> {
    require_window(window)?;
    let name = if central {
        "FRT relations".to_string()
    } else {
        "FRT relations (central term omitted)".to_string()
    };
    let mut c = Collector::new(name);
    let (x, y) = (vars::x(), vars::y());
    let r = build_r(vars::u()).subs(&[(vars::u(), RatFun::var(x).checked_div(&RatFun::var(y))?)])?;
    let tp = build_t(Sign::Plus, window);
    let tm = build_t(Sign::Minus, window);

    for (label, t) in [("T+", &tp), ("T-", &tm)] {
        for (pos, deg, l) in t.iter() {
            let br = crate::kacmoody::bracket(l, &LieElt::c());
            c.compare(
                || format!("[{label}, c] entry ({},{}) at {:?}", pos.0 + 1, pos.1 + 1, deg),
                (!br.is_zero()).then_some(br),
            );
        }
    }

    let mut regions = Vec::new();
    let pairs = [("++", &tp, &tp, false), ("--", &tm, &tm, false), ("+-", &tp, &tm, true)];
    for (label, a, b, mixed) in pairs {
        let (ax, by) = (a.in_var(x), b.in_var(y));
        let lhs = [Product::plain(series_bracket(&ax, &by)?)];
        let sum = two_leg(&ax, 1)?.add(&two_leg(&by, 2)?)?;
        let mut rhs: Vec<Product> = Product::commutator(&sum, &r, 1).into();
        if mixed && central {
            let f = r_derivative_term()?;
            rhs.push(Product::central(&f, &LieElt::c().scale_int(-2), &[x, y], 1)?);
        }
        let cmp = clear_and_compare(&lhs, &rhs)?;
        regions.push(format!("{label}: {}", cmp.region));
        report_comparison(&mut c, &cmp, label);
    }
    c.region(regions.join("; "));
    Ok(c.finish())
}

/// `[B1(x), B2(y)] = [rb21(y,x), B1(x)] + [B2(y), rb12(x,y)]` for the family's
/// `B` and `rbar`, cleared by the common denominator.
pub fn check_exchange(family: BFamily, window: i64) -> Result<CheckReport> {
    let b = build_b(family, window)?;
    let rbar = build_rbar(&family.boundary(), vars::x(), vars::y())?;
    check_exchange_with(&format!("exchange relation ({family})"), &b, &rbar, window)
}

/// The exchange relation for given `B(x)` and `rbar(x, y)`.
pub fn check_exchange_with(name: &str, b: &CurrentMat, rbar: &TensorMat, window: i64) -> Result<CheckReport> {
    require_window(window)?;
    let (x, y) = (vars::x(), vars::y());
    let mut c = Collector::new(name);
    let bx = b.in_var(x);
    let by = b.in_var(y);
    let lhs = [Product::plain(series_bracket(&bx, &by)?)];
    let rb21 = rbar
        .subs(&[(x, RatFun::var(y)), (y, RatFun::var(x))])?
        .leg_embed(&[2, 1], 2)?;
    let b1 = two_leg(&bx, 1)?;
    let b2 = two_leg(&by, 2)?;
    let mut rhs: Vec<Product> = Product::commutator(&b1, &rb21, -1).into();
    rhs.extend(Product::commutator(&b2, rbar, 1));
    let cmp = clear_and_compare(&lhs, &rhs)?;
    c.region(format!("{} (cleared by {})", cmp.region, cmp.clearing));
    report_comparison(&mut c, &cmp, "");
    Ok(c.finish())
}

/// Coefficient matrix of `m` at the given degree.
pub fn extract_mode(m: &CurrentMat, deg: &[i64]) -> Result<Vec<Vec<LieElt>>> {
    m.extract_mode(deg)
}
