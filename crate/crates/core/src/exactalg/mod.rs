//! Exact scalar tower: rationals, Laurent polynomials with half-integer
//! spectral exponents, and rational functions.

mod poly;
mod ratfun;
mod var;

use std::collections::HashMap;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use rand::Rng;

pub use poly::{LaurentPoly, Monomial};
pub use ratfun::{lcm_factors, RatFun};
pub use var::{VarKind, Variable};

use crate::error::{Error, Result};

pub type Rational = BigRational;

pub fn rat(n: i64, d: i64) -> Rational {
    Rational::new(BigInt::from(n), BigInt::from(d))
}

/// Evaluation point. Spectral variables are given by a square root `s` of
/// their value (so `x^(1/2) = s`), parameters by their value.
#[derive(Clone, Debug, Default)]
pub struct Point {
    values: HashMap<Variable, Rational>,
}

impl Point {
    pub fn new() -> Self {
        Self::default()
    }

    /// For spectral `v`, `value` is the square root of the point coordinate.
    pub fn set(&mut self, v: Variable, value: Rational) {
        self.values.insert(v, value);
    }

    /// Random non-zero coordinates for every listed variable.
    pub fn random<R: Rng>(rng: &mut R, vars: &[Variable]) -> Self {
        let mut p = Point::new();
        for &v in vars {
            let mut n: i64 = 0;
            while n == 0 {
                n = rng.gen_range(-40..=40);
            }
            let d: i64 = rng.gen_range(1..=37);
            p.set(v, rat(n, d));
        }
        p
    }

    pub(crate) fn power(&self, v: Variable, doubled: i32) -> Result<Rational> {
        let base = self
            .values
            .get(&v)
            .ok_or_else(|| Error::MissingParameter(v.name()))?;
        let e = if v.is_spectral() { doubled } else { doubled / 2 };
        if e < 0 && base.is_zero() {
            return Err(Error::ZeroDenominator);
        }
        let mut acc = Rational::one();
        for _ in 0..e.unsigned_abs() {
            acc *= base;
        }
        Ok(if e < 0 { acc.recip() } else { acc })
    }
}
