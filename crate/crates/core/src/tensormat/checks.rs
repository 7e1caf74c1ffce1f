use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use super::{build_r, BoundaryMat, RMat, TensorMat};
use crate::error::{Error, Result};
use crate::exactalg::{Point, RatFun, Variable};
use crate::report::{CheckReport, Collector};
use crate::vars;

fn record(c: &mut Collector, label: &str, m: &TensorMat) {
    let d = m.dim();
    for i in 0..d {
        for j in 0..d {
            let e = m.get(i, j);
            c.compare(
                || format!("{label}({},{})", i + 1, j + 1),
                (!e.is_zero()).then(|| e.to_string()),
            );
        }
    }
}

fn single_variable(r: &TensorMat) -> Result<Variable> {
    let vs = r.spectral_variables();
    match vs.len() {
        0 => Ok(vars::u()),
        1 => Ok(vs[0]),
        _ => Err(Error::Shape(format!(
            "expected one spectral variable, found {:?}",
            vs
        ))),
    }
}

fn ratio(a: Variable, b: Variable) -> Result<RatFun> {
    RatFun::var(a).checked_div(&RatFun::var(b))
}

/// `r_13(x1/x3), r_23(x2/x3), r_12(x1/x2)` on three legs.
fn three_leg_r(r: &TensorMat) -> Result<[TensorMat; 3]> {
    let u = single_variable(r)?;
    let (x1, x2, x3) = (vars::x1(), vars::x2(), vars::x3());
    Ok([
        r.subs(&[(u, ratio(x1, x3)?)])?.leg_embed(&[1, 3], 3)?,
        r.subs(&[(u, ratio(x2, x3)?)])?.leg_embed(&[2, 3], 3)?,
        r.subs(&[(u, ratio(x1, x2)?)])?.leg_embed(&[1, 2], 3)?,
    ])
}

/// `[r13, r23] - [r13 + r23, r12]`, identically zero for a classical r-matrix.
pub fn check_cybe(r: &TensorMat) -> Result<CheckReport> {
    let mut c = Collector::new("CYBE");
    c.region("8x8 residual, symbolic in x1, x2, x3");
    let [r13, r23, r12] = three_leg_r(r)?;
    let residual = r13
        .commutator(&r23)?
        .sub(&r13.add(&r23)?.commutator(&r12)?)?;
    record(&mut c, "", &residual);
    Ok(c.finish())
}

/// The x d/dx derivative of the CYBE with `f(u) = u r'(u)`.
pub fn check_cybe_derivative(r: &TensorMat) -> Result<CheckReport> {
    let mut c = Collector::new("CYBE derivative identity");
    c.region("8x8 residual, symbolic in x1, x2, x3");
    let u = single_variable(r)?;
    let f = r.derivative(u)?.scale(&RatFun::var(u));
    let [r13, r23, r12] = three_leg_r(r)?;
    let [f13, f23, _] = three_leg_r(&f)?;
    let lhs = f13.add(&f23)?.commutator(&r12)?;
    let rhs = f13.commutator(&r23)?.add(&r13.commutator(&f23)?)?;
    record(&mut c, "", &lhs.sub(&rhs)?);
    Ok(c.finish())
}

/// Cross-check of the CYBE by exact evaluation at random rational points.
pub fn check_cybe_sampled(r: &TensorMat, seed: u64, samples: usize) -> Result<CheckReport> {
    let mut c = Collector::new("CYBE (random rational points)");
    c.region(format!("{samples} points, seed {seed}"));
    let mats = three_leg_r(r)?;
    let vars: Vec<Variable> = [vars::x1(), vars::x2(), vars::x3()]
        .into_iter()
        .chain(r.variables().into_iter().filter(|v| !v.is_spectral()))
        .collect();
    sample(&mut c, &mats, &vars, seed, samples, |m| {
        m[0].commutator(&m[1]).sub(&m[0].add(&m[1]).commutator(&m[2]))
    });
    Ok(c.finish())
}

fn sample(
    c: &mut Collector,
    mats: &[TensorMat],
    vars: &[Variable],
    seed: u64,
    samples: usize,
    combine: impl Fn(&[RMat]) -> RMat,
) {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut done = 0;
    let mut attempts = 0;
    while done < samples && attempts < samples * 10 {
        attempts += 1;
        let p = Point::random(&mut rng, vars);
        let Ok(values) = mats.iter().map(|m| m.eval(&p)).collect::<Result<Vec<_>>>() else {
            continue;
        };
        done += 1;
        let res = combine(&values);
        c.expect(res.is_zero(), || format!("sample {done}"), || "non-zero residual".into());
    }
}

/// `r12(u) = -r21(1/u)` and `r12(u) = -r12(1/u)^{t1 t2}`.
pub fn check_r_symmetries(r: &TensorMat) -> Result<CheckReport> {
    let mut c = Collector::new("r-matrix symmetries");
    c.region("4x4 residuals, symbolic in u");
    let u = single_variable(r)?;
    let r_inv = r.subs(&[(u, RatFun::var(u).inv()?)])?;
    let skew = r.add(&r_inv.leg_embed(&[2, 1], 2)?)?;
    record(&mut c, "skew", &skew);
    let tt = r.add(&r_inv.partial_transpose(1)?.partial_transpose(2)?)?;
    record(&mut c, "t1t2", &tt);
    Ok(c.finish())
}

/// `U(x)^t = eps U(1/x)` and `[U1(x) U2(y), r12(x/y)] = 0`.
pub fn check_u_conditions(b: &BoundaryMat, epsilon: i64) -> Result<CheckReport> {
    let mut c = Collector::new(format!("U conditions ({}, eps={:+})", b.family(), epsilon));
    c.region("2x2 and 4x4 residuals, symbolic in x, y");
    let (x, y) = (vars::x(), vars::y());
    let ux = b.at(x)?;
    let u_inv_x = ux.subs(&[(x, RatFun::var(x).inv()?)])?;
    let first = ux.transpose().sub(&u_inv_x.scale(&RatFun::int(epsilon)))?;
    record(&mut c, "transpose", &first);
    let r = build_r(vars::u()).subs(&[(vars::u(), ratio(x, y)?)])?;
    let uu = ux.leg_embed(&[1], 2)?.mul(&b.at(y)?.leg_embed(&[2], 2)?)?;
    record(&mut c, "commute", &uu.commutator(&r)?);
    Ok(c.finish())
}

/// `r12(x/y) k1 k2 - k1 k2 r12(x/y) = k1 r12^{t2}(xy) k2 - k2 r12^{t2}(xy) k1`.
pub fn check_reflection(b: &BoundaryMat) -> Result<CheckReport> {
    let mut c = Collector::new(format!("reflection equation ({})", b.family()));
    c.region("4x4 residual, symbolic in x, y and all parameters");
    let (x, y, u) = (vars::x(), vars::y(), vars::u());
    let r = build_r(u);
    let r_ratio = r.subs(&[(u, ratio(x, y)?)])?;
    let r_prod = r
        .partial_transpose(2)?
        .subs(&[(u, &RatFun::var(x) * &RatFun::var(y))])?;
    let k1 = b.at(x)?.leg_embed(&[1], 2)?;
    let k2 = b.at(y)?.leg_embed(&[2], 2)?;
    let k12 = k1.mul(&k2)?;
    let lhs = r_ratio.commutator(&k12)?;
    let rhs = k1.mul(&r_prod)?.mul(&k2)?.sub(&k2.mul(&r_prod)?.mul(&k1)?)?;
    record(&mut c, "", &lhs.sub(&rhs)?);
    Ok(c.finish())
}

/// The bivariate matrix at `(a, b)` on legs `legs` of three.
fn rbar_at(rbar: &TensorMat, a: Variable, b: Variable, legs: [usize; 2]) -> Result<TensorMat> {
    rbar.subs(&[(vars::x(), RatFun::var(a)), (vars::y(), RatFun::var(b))])?
        .leg_embed(&legs, 3)
}

fn nscybe_terms(rbar: &TensorMat) -> Result<[TensorMat; 4]> {
    let (x1, x2, x3) = (vars::x1(), vars::x2(), vars::x3());
    Ok([
        rbar_at(rbar, x1, x3, [1, 3])?,
        rbar_at(rbar, x2, x3, [2, 3])?,
        rbar_at(rbar, x2, x1, [2, 1])?,
        rbar_at(rbar, x1, x2, [1, 2])?,
    ])
}

/// `[rb13(x1,x3), rb23(x2,x3)] = [rb21(x2,x1), rb13(x1,x3)] + [rb23(x2,x3), rb12(x1,x2)]`
/// for `rbar` given in the variables `x`, `y`.
pub fn check_nscybe(rbar: &TensorMat) -> Result<CheckReport> {
    let mut c = Collector::new("non-standard CYBE");
    c.region("8x8 residual, symbolic in x1, x2, x3 and all parameters");
    let [r13, r23, r21, r12] = nscybe_terms(rbar)?;
    let lhs = r13.commutator(&r23)?;
    let rhs = r21.commutator(&r13)?.add(&r23.commutator(&r12)?)?;
    record(&mut c, "", &lhs.sub(&rhs)?);
    Ok(c.finish())
}

/// Random-point cross-check of [`check_nscybe`].
pub fn check_nscybe_sampled(rbar: &TensorMat, seed: u64, samples: usize) -> Result<CheckReport> {
    let mut c = Collector::new("non-standard CYBE (random rational points)");
    c.region(format!("{samples} points, seed {seed}"));
    let mats = nscybe_terms(rbar)?;
    let vars: Vec<Variable> = [vars::x1(), vars::x2(), vars::x3()]
        .into_iter()
        .chain(rbar.variables().into_iter().filter(|v| !v.is_spectral()))
        .collect();
    sample(&mut c, &mats, &vars, seed, samples, |m| {
        m[0].commutator(&m[1])
            .sub(&m[2].commutator(&m[0]).add(&m[1].commutator(&m[3])))
    });
    Ok(c.finish())
}

/// `[tr_1(rbar12(x,y) M1(x)), M2(y)] = 0`.
pub fn check_m_condition(m: &BoundaryMat, rbar: &TensorMat) -> Result<CheckReport> {
    let mut c = Collector::new(format!("M condition ({})", m.family()));
    c.region("2x2 residual, symbolic in x, y and all parameters");
    let m1 = m.at(vars::x())?.leg_embed(&[1], 2)?;
    let traced = rbar.mul(&m1)?.partial_trace(1)?;
    let residual = traced.commutator(&m.at(vars::y())?)?;
    record(&mut c, "", &residual);
    Ok(c.finish())
}

/// `rbar12(x,y) + rbar21(y,x)`; zero exactly when `rbar` is skew-symmetric.
pub fn rbar_skew_residual(rbar: &TensorMat) -> Result<TensorMat> {
    let (x, y) = (vars::x(), vars::y());
    let swapped = rbar
        .subs(&[(x, RatFun::var(y)), (y, RatFun::var(x))])?
        .leg_embed(&[2, 1], 2)?;
    rbar.add(&swapped)
}
