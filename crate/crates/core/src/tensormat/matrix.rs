use std::collections::HashMap;
use std::fmt;

use num_traits::Zero;

use crate::error::{Error, Result};
use crate::exactalg::{Point, RatFun, Rational, Variable};

/// Dense `2^legs x 2^legs` matrix over rational functions.
///
/// Basis index bits are ordered with leg 1 most significant, so for two
/// legs row `2*i1 + i2` corresponds to `e_{i1} (x) e_{i2}`.
#[derive(Clone, Debug)]
pub struct TensorMat {
    legs: usize,
    entries: Vec<RatFun>,
}

impl TensorMat {
    pub fn zeros(legs: usize) -> Self {
        let dim = 1usize << legs;
        TensorMat {
            legs,
            entries: vec![RatFun::zero(); dim * dim],
        }
    }

    pub fn identity(legs: usize) -> Self {
        let mut m = Self::zeros(legs);
        for i in 0..m.dim() {
            m.set(i, i, RatFun::one());
        }
        m
    }

    /// Row-major entries.
    pub fn from_entries(legs: usize, entries: Vec<RatFun>) -> Result<Self> {
        let dim = 1usize << legs;
        if legs == 0 || entries.len() != dim * dim {
            return Err(Error::Shape(format!(
                "{} entries for a {}-leg matrix",
                entries.len(),
                legs
            )));
        }
        Ok(TensorMat { legs, entries })
    }

    pub fn legs(&self) -> usize {
        self.legs
    }

    pub fn dim(&self) -> usize {
        1 << self.legs
    }

    /// Zero-based access.
    pub fn get(&self, row: usize, col: usize) -> &RatFun {
        &self.entries[row * self.dim() + col]
    }

    pub fn set(&mut self, row: usize, col: usize, value: RatFun) {
        let d = self.dim();
        self.entries[row * d + col] = value;
    }

    pub fn with_entry(&self, row: usize, col: usize, value: RatFun) -> TensorMat {
        let mut m = self.clone();
        m.set(row, col, value);
        m
    }

    pub fn entries(&self) -> &[RatFun] {
        &self.entries
    }

    /// Spectral and parameter variables appearing anywhere in the matrix.
    pub fn variables(&self) -> Vec<Variable> {
        let mut vs = Vec::new();
        for e in &self.entries {
            vs.extend(e.numer().variables());
            for (a, _) in e.den_factors() {
                vs.extend(a.variables());
            }
        }
        vs.sort();
        vs.dedup();
        vs
    }

    pub fn spectral_variables(&self) -> Vec<Variable> {
        self.variables().into_iter().filter(|v| v.is_spectral()).collect()
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(RatFun::is_zero)
    }

    fn check_same(&self, other: &TensorMat) -> Result<()> {
        if self.legs != other.legs {
            return Err(Error::Shape(format!(
                "{}-leg and {}-leg matrices",
                self.legs, other.legs
            )));
        }
        Ok(())
    }

    pub fn add(&self, other: &TensorMat) -> Result<TensorMat> {
        self.check_same(other)?;
        Ok(TensorMat {
            legs: self.legs,
            entries: self
                .entries
                .iter()
                .zip(&other.entries)
                .map(|(a, b)| a + b)
                .collect(),
        })
    }

    pub fn sub(&self, other: &TensorMat) -> Result<TensorMat> {
        self.check_same(other)?;
        Ok(TensorMat {
            legs: self.legs,
            entries: self
                .entries
                .iter()
                .zip(&other.entries)
                .map(|(a, b)| a - b)
                .collect(),
        })
    }

    pub fn neg(&self) -> TensorMat {
        self.map(|e| -e)
    }

    pub fn scale(&self, c: &RatFun) -> TensorMat {
        self.map(|e| e * c)
    }

    pub fn map(&self, f: impl Fn(&RatFun) -> RatFun) -> TensorMat {
        TensorMat {
            legs: self.legs,
            entries: self.entries.iter().map(f).collect(),
        }
    }

    pub fn try_map(&self, f: impl Fn(&RatFun) -> Result<RatFun>) -> Result<TensorMat> {
        Ok(TensorMat {
            legs: self.legs,
            entries: self.entries.iter().map(f).collect::<Result<_>>()?,
        })
    }

    pub fn mul(&self, other: &TensorMat) -> Result<TensorMat> {
        self.check_same(other)?;
        let d = self.dim();
        let mut out = TensorMat::zeros(self.legs);
        for i in 0..d {
            for k in 0..d {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..d {
                    let b = other.get(k, j);
                    if b.is_zero() {
                        continue;
                    }
                    let idx = i * d + j;
                    out.entries[idx] = &out.entries[idx] + &(a * b);
                }
            }
        }
        Ok(out)
    }

    /// `[self, other] = self*other - other*self`.
    pub fn commutator(&self, other: &TensorMat) -> Result<TensorMat> {
        self.mul(other)?.sub(&other.mul(self)?)
    }

    pub fn substitute(&self, assignment: &HashMap<Variable, RatFun>) -> Result<TensorMat> {
        self.try_map(|e| e.substitute(assignment))
    }

    /// Convenience for simultaneous substitution from a list.
    pub fn subs(&self, pairs: &[(Variable, RatFun)]) -> Result<TensorMat> {
        self.substitute(&pairs.iter().cloned().collect())
    }

    pub fn derivative(&self, v: Variable) -> Result<TensorMat> {
        self.try_map(|e| e.derivative(v))
    }

    /// Places this matrix on `legs` (1-based, one per own leg) of a
    /// `total`-leg space, acting as the identity elsewhere.
    pub fn leg_embed(&self, legs: &[usize], total: usize) -> Result<TensorMat> {
        if legs.len() != self.legs {
            return Err(Error::LegOutOfRange(format!(
                "{} leg indices for a {}-leg matrix",
                legs.len(),
                self.legs
            )));
        }
        for (i, &l) in legs.iter().enumerate() {
            if l == 0 || l > total || legs[..i].contains(&l) {
                return Err(Error::LegOutOfRange(format!("{:?} within {}", legs, total)));
            }
        }
        let dim = 1usize << total;
        let bit = |idx: usize, leg: usize| (idx >> (total - leg)) & 1;
        let sub = |idx: usize| {
            legs.iter()
                .enumerate()
                .fold(0, |acc, (t, &l)| acc | (bit(idx, l) << (self.legs - 1 - t)))
        };
        let others: Vec<usize> = (1..=total).filter(|l| !legs.contains(l)).collect();
        let mut out = TensorMat::zeros(total);
        for i in 0..dim {
            for j in 0..dim {
                if others.iter().any(|&l| bit(i, l) != bit(j, l)) {
                    continue;
                }
                let v = self.get(sub(i), sub(j));
                if !v.is_zero() {
                    out.entries[i * dim + j] = v.clone();
                }
            }
        }
        Ok(out)
    }

    /// Transpose acting only on the index pair of `leg` (1-based).
    pub fn partial_transpose(&self, leg: usize) -> Result<TensorMat> {
        if leg == 0 || leg > self.legs {
            return Err(Error::LegOutOfRange(format!("leg {} of {}", leg, self.legs)));
        }
        let d = self.dim();
        let mask = 1usize << (self.legs - leg);
        let mut out = TensorMat::zeros(self.legs);
        for i in 0..d {
            for j in 0..d {
                let (bi, bj) = (i & mask, j & mask);
                let ni = (i & !mask) | bj;
                let nj = (j & !mask) | bi;
                out.entries[ni * d + nj] = self.get(i, j).clone();
            }
        }
        Ok(out)
    }

    /// Full transpose.
    pub fn transpose(&self) -> TensorMat {
        let d = self.dim();
        let mut out = TensorMat::zeros(self.legs);
        for i in 0..d {
            for j in 0..d {
                out.entries[j * d + i] = self.get(i, j).clone();
            }
        }
        out
    }

    /// Trace over `leg` (1-based); the result has one leg fewer.
    pub fn partial_trace(&self, leg: usize) -> Result<TensorMat> {
        if leg == 0 || leg > self.legs || self.legs < 2 {
            return Err(Error::LegOutOfRange(format!("leg {} of {}", leg, self.legs)));
        }
        let total = self.legs;
        let drop_bit = |idx: usize| {
            let low = total - leg;
            let hi = idx >> (low + 1);
            let lo = idx & ((1 << low) - 1);
            (hi << low) | lo
        };
        let d = self.dim();
        let mask = 1usize << (total - leg);
        let mut out = TensorMat::zeros(total - 1);
        let od = out.dim();
        for i in 0..d {
            for j in 0..d {
                if (i & mask) != (j & mask) {
                    continue;
                }
                let e = self.get(i, j);
                if e.is_zero() {
                    continue;
                }
                let idx = drop_bit(i) * od + drop_bit(j);
                out.entries[idx] = &out.entries[idx] + e;
            }
        }
        Ok(out)
    }

    pub fn trace(&self) -> RatFun {
        (0..self.dim()).fold(RatFun::zero(), |acc, i| &acc + self.get(i, i))
    }

    /// Inverse of a single-leg (2x2) matrix via the adjugate.
    pub fn inverse_2x2(&self) -> Result<TensorMat> {
        if self.legs != 1 {
            return Err(Error::Shape("adjugate inverse needs a 2x2 matrix".into()));
        }
        let det = self.det_2x2();
        let inv_det = det.inv()?;
        let (a, b, c, d) = (self.get(0, 0), self.get(0, 1), self.get(1, 0), self.get(1, 1));
        TensorMat::from_entries(
            1,
            vec![d * &inv_det, -(b * &inv_det), -(c * &inv_det), a * &inv_det],
        )
    }

    pub fn det_2x2(&self) -> RatFun {
        &(self.get(0, 0) * self.get(1, 1)) - &(self.get(0, 1) * self.get(1, 0))
    }

    /// Exact numerical value at a point.
    pub fn eval(&self, point: &Point) -> Result<RMat> {
        Ok(RMat {
            dim: self.dim(),
            entries: self
                .entries
                .iter()
                .map(|e| e.eval(point))
                .collect::<Result<_>>()?,
        })
    }
}

impl fmt::Display for TensorMat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let d = self.dim();
        for i in 0..d {
            let row: Vec<String> = (0..d).map(|j| self.get(i, j).to_string()).collect();
            writeln!(f, "[{}]", row.join(", "))?;
        }
        Ok(())
    }
}

/// Dense rational matrix used by the random-point cross-check.
#[derive(Clone, Debug, PartialEq)]
pub struct RMat {
    dim: usize,
    entries: Vec<Rational>,
}

impl RMat {
    pub fn get(&self, i: usize, j: usize) -> &Rational {
        &self.entries[i * self.dim + j]
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(Zero::is_zero)
    }

    pub fn add(&self, o: &RMat) -> RMat {
        RMat {
            dim: self.dim,
            entries: self.entries.iter().zip(&o.entries).map(|(a, b)| a + b).collect(),
        }
    }

    pub fn sub(&self, o: &RMat) -> RMat {
        RMat {
            dim: self.dim,
            entries: self.entries.iter().zip(&o.entries).map(|(a, b)| a - b).collect(),
        }
    }

    pub fn mul(&self, o: &RMat) -> RMat {
        let d = self.dim;
        let mut entries = vec![Rational::zero(); d * d];
        for i in 0..d {
            for k in 0..d {
                let a = &self.entries[i * d + k];
                if a.is_zero() {
                    continue;
                }
                for j in 0..d {
                    entries[i * d + j] += a * &o.entries[k * d + j];
                }
            }
        }
        RMat { dim: d, entries }
    }

    pub fn commutator(&self, o: &RMat) -> RMat {
        self.mul(o).sub(&o.mul(self))
    }
}
