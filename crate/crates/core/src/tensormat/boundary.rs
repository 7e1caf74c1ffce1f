use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use serde::Serialize;

use super::TensorMat;
use crate::error::{Error, Result};
use crate::exactalg::{rat, LaurentPoly, RatFun, Variable};
use crate::vars;

/// The named 2x2 matrices: the two automorphism twists, the reflection
/// family and its two special points, and the three charge matrices.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum BoundaryFamily {
    UDiag,
    UOffdiag,
    KGeneral,
    KappaPlus,
    KappaMinus,
    MOns,
    MAug,
    MInv,
    /// Hand-built input, e.g. a perturbed matrix.
    Custom,
}

impl BoundaryFamily {
    pub const ALL: [BoundaryFamily; 8] = [
        BoundaryFamily::UDiag,
        BoundaryFamily::UOffdiag,
        BoundaryFamily::KGeneral,
        BoundaryFamily::KappaPlus,
        BoundaryFamily::KappaMinus,
        BoundaryFamily::MOns,
        BoundaryFamily::MAug,
        BoundaryFamily::MInv,
    ];

    pub fn name(&self) -> &'static str {
        match self {
            BoundaryFamily::UDiag => "U_diag",
            BoundaryFamily::UOffdiag => "U_offdiag",
            BoundaryFamily::KGeneral => "k_general",
            BoundaryFamily::KappaPlus => "kappa_plus",
            BoundaryFamily::KappaMinus => "kappa_minus",
            BoundaryFamily::MOns => "M_ons",
            BoundaryFamily::MAug => "M_aug",
            BoundaryFamily::MInv => "M_inv",
            BoundaryFamily::Custom => "custom",
        }
    }

    /// Parameter names the family needs.
    pub fn parameters(&self) -> &'static [&'static str] {
        match self {
            BoundaryFamily::UDiag => &["k", "k*"],
            BoundaryFamily::UOffdiag => &["sign"],
            BoundaryFamily::KGeneral => &["alpha", "beta", "gamma", "delta"],
            BoundaryFamily::MOns => &["mu", "kappa", "kappa*"],
            BoundaryFamily::MAug => &["tau", "nu", "nu*"],
            BoundaryFamily::MInv => &["mu0", "mu1", "mu2"],
            _ => &[],
        }
    }

    /// Every parameter left symbolic; `sign` of `U_offdiag` defaults to -1.
    pub fn symbolic_params(&self) -> Params {
        self.parameters()
            .iter()
            .map(|&p| {
                let value = if p == "sign" {
                    RatFun::int(-1)
                } else {
                    RatFun::var(Variable::parameter(p))
                };
                (p.to_string(), value)
            })
            .collect()
    }
}

impl fmt::Display for BoundaryFamily {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for BoundaryFamily {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        BoundaryFamily::ALL
            .iter()
            .copied()
            .find(|f| f.name().eq_ignore_ascii_case(s))
            .ok_or_else(|| Error::Unknown {
                kind: "boundary family",
                name: s.to_string(),
            })
    }
}

pub type Params = BTreeMap<String, RatFun>;

/// An invertible 2x2 matrix depending on the spectral variable `x`.
#[derive(Clone, Debug)]
pub struct BoundaryMat {
    family: BoundaryFamily,
    mat: TensorMat,
}

impl BoundaryMat {
    /// Wraps a hand-built 2x2 matrix in `x`.
    pub fn custom(mat: TensorMat) -> Result<BoundaryMat> {
        Self::checked(BoundaryFamily::Custom, mat)
    }

    fn checked(family: BoundaryFamily, mat: TensorMat) -> Result<BoundaryMat> {
        if mat.legs() != 1 {
            return Err(Error::Shape("boundary matrices are 2x2".into()));
        }
        if mat.det_2x2().is_zero() {
            return Err(Error::ZeroDenominator);
        }
        Ok(BoundaryMat { family, mat })
    }

    pub fn family(&self) -> BoundaryFamily {
        self.family
    }

    pub fn matrix(&self) -> &TensorMat {
        &self.mat
    }

    /// The matrix with `x` replaced by the spectral variable `v`.
    pub fn at(&self, v: Variable) -> Result<TensorMat> {
        if v == vars::x() {
            return Ok(self.mat.clone());
        }
        self.mat.subs(&[(vars::x(), RatFun::var(v))])
    }

    pub fn inverse(&self) -> Result<TensorMat> {
        self.mat.inverse_2x2()
    }

    pub fn with_entry(&self, row: usize, col: usize, value: RatFun) -> Result<BoundaryMat> {
        Self::checked(BoundaryFamily::Custom, self.mat.with_entry(row, col, value))
    }
}

fn poly(p: LaurentPoly) -> RatFun {
    RatFun::from_poly(p)
}

fn param(params: &Params, name: &str) -> Result<RatFun> {
    params
        .get(name)
        .cloned()
        .ok_or_else(|| Error::MissingParameter(name.to_string()))
}

/// The 4x4 r-matrix in the spectral variable `u`:
/// `1/(u-1) * [[-(u+1)/2,0,0,0],[0,(u+1)/2,-2,0],[0,-2u,(u+1)/2,0],[0,0,0,-(u+1)/2]]`.
pub fn build_r(u: Variable) -> TensorMat {
    let pu = LaurentPoly::var(u);
    let one = LaurentPoly::one();
    let den = &pu - &one;
    let f = |n: LaurentPoly| RatFun::new(n, &den).expect("u - 1 is non-zero");
    let half = (&pu + &one).scale(&rat(1, 2));
    let mut r = TensorMat::zeros(2);
    r.set(0, 0, f(-&half));
    r.set(1, 1, f(half.clone()));
    r.set(1, 2, f(LaurentPoly::int(-2)));
    r.set(2, 1, f(pu.scale(&rat(-2, 1))));
    r.set(2, 2, f(half.clone()));
    r.set(3, 3, f(-&half));
    r
}

/// Builds the named boundary matrix in the spectral variable `x`.
pub fn build_boundary(family: BoundaryFamily, params: &Params) -> Result<BoundaryMat> {
    let x = vars::x();
    let px = LaurentPoly::var(x);
    let inv_x = LaurentPoly::var_pow(x, -1);
    let one = LaurentPoly::one();
    let entries: Vec<RatFun> = match family {
        BoundaryFamily::UDiag => {
            let k = param(params, "k")?;
            let ks = param(params, "k*")?;
            vec![k, RatFun::zero(), RatFun::zero(), -ks]
        }
        BoundaryFamily::UOffdiag => {
            let sign = param(params, "sign")?;
            let ok = sign.equals(&RatFun::int(1)) || sign.equals(&RatFun::int(-1));
            if !ok {
                return Err(Error::Unknown {
                    kind: "U_offdiag sign",
                    name: sign.to_string(),
                });
            }
            vec![
                RatFun::zero(),
                poly(LaurentPoly::var_half_pow(x, -1)?),
                &sign * &poly(LaurentPoly::var_half_pow(x, 1)?),
                RatFun::zero(),
            ]
        }
        BoundaryFamily::KGeneral => {
            let alpha = param(params, "alpha")?;
            let beta = param(params, "beta")?;
            let gamma = param(params, "gamma")?;
            let delta = param(params, "delta")?;
            let x_minus = poly(&px - &inv_x);
            vec![
                &alpha * &x_minus,
                &beta + &(&gamma * &poly(inv_x.clone())),
                -(&beta + &(&gamma * &poly(px.clone()))),
                &delta * &x_minus,
            ]
        }
        BoundaryFamily::KappaPlus => vec![
            RatFun::zero(),
            RatFun::one(),
            RatFun::int(-1),
            RatFun::zero(),
        ],
        BoundaryFamily::KappaMinus => vec![
            RatFun::zero(),
            poly(inv_x.clone()),
            poly(-&px),
            RatFun::zero(),
        ],
        BoundaryFamily::MOns => {
            let mu = param(params, "mu")?;
            let kappa = param(params, "kappa")?;
            let ks = param(params, "kappa*")?;
            vec![
                &mu * &poly(inv_x.clone()),
                &kappa + &(&ks * &poly(inv_x.clone())),
                &kappa + &(&ks * &poly(px.clone())),
                &mu * &poly(px.clone()),
            ]
        }
        BoundaryFamily::MAug => {
            let tau = param(params, "tau")?;
            let nu = param(params, "nu")?;
            let nus = param(params, "nu*")?;
            vec![
                tau,
                &nu * &poly(&one + &inv_x),
                &nus * &poly(&px + &one),
                RatFun::zero(),
            ]
        }
        BoundaryFamily::MInv => {
            let mu0 = param(params, "mu0")?;
            let mu1 = param(params, "mu1")?;
            let mu2 = param(params, "mu2")?;
            vec![mu0, mu1, mu2, RatFun::zero()]
        }
        BoundaryFamily::Custom => {
            return Err(Error::Unknown {
                kind: "boundary family",
                name: "custom".into(),
            })
        }
    };
    BoundaryMat::checked(family, TensorMat::from_entries(1, entries)?)
}

/// `k` with every parameter symbolic.
pub fn symbolic_boundary(family: BoundaryFamily) -> Result<BoundaryMat> {
    build_boundary(family, &family.symbolic_params())
}

/// `r(x/y) + k_1(x) r^{t_1}(1/(xy)) k_1(x)^{-1}` in the spectral variables `x`, `y`.
pub fn build_rbar(b: &BoundaryMat, x: Variable, y: Variable) -> Result<TensorMat> {
    if x == y {
        return Err(Error::VariableCollision(x.name()));
    }
    let u = vars::u();
    let r = build_r(u);
    let px = RatFun::var(x);
    let py = RatFun::var(y);
    let r_xy = r.subs(&[(u, px.checked_div(&py)?)])?;
    let r_inv = r
        .partial_transpose(1)?
        .subs(&[(u, (&px * &py).inv()?)])?;
    let k = b.at(x)?;
    let k_inv = k.inverse_2x2()?;
    let k1 = k.leg_embed(&[1], 2)?;
    let k1_inv = k_inv.leg_embed(&[1], 2)?;
    r_xy.add(&k1.mul(&r_inv)?.mul(&k1_inv)?)
}
