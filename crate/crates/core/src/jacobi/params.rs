use crate::error::{Error, Result};
use crate::randkit::{sample_beta, RngStream};
use crate::scalar::Real;

/// The ensemble parameters `(n, n1, n2, beta)`.
///
/// `n1` and `n2` may be non-integer; sampling only needs every Beta shape
/// positive, i.e. `n1 > n - 1` and `n2 > n - 1`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct JacobiParams {
    pub n: usize,
    pub n1: f64,
    pub n2: f64,
    pub beta: f64,
}

impl JacobiParams {
    pub fn new(n: usize, n1: f64, n2: f64, beta: f64) -> Result<Self> {
        let p = Self { n, n1, n2, beta };
        p.validate()?;
        Ok(p)
    }

    pub fn validate(&self) -> Result<()> {
        if self.n == 0 {
            return Err(Error::param("n must be at least 1"));
        }
        if !(self.beta > 0.0 && self.beta.is_finite()) {
            return Err(Error::param(format!(
                "beta must be positive and finite, got {}",
                self.beta
            )));
        }
        let floor = self.n as f64 - 1.0;
        if !(self.n1 > floor && self.n1.is_finite()) {
            return Err(Error::param(format!(
                "n1 must exceed n - 1 = {floor}, got {}",
                self.n1
            )));
        }
        if !(self.n2 > floor && self.n2.is_finite()) {
            return Err(Error::param(format!(
                "n2 must exceed n - 1 = {floor}, got {}",
                self.n2
            )));
        }
        Ok(())
    }

    /// Hard-edge exponent `a = n1 - n`.
    pub fn a(&self) -> f64 {
        self.n1 - self.n as f64
    }

    /// Parameters with `n1` and `n2` exchanged; maps `lambda` to `1 - lambda`.
    pub fn swapped(&self) -> Self {
        Self {
            n1: self.n2,
            n2: self.n1,
            ..*self
        }
    }

    /// Beta shapes of `C_k^2`, `k = 1..=n`.
    pub fn c_shapes(&self, k: usize) -> (f64, f64) {
        let h = self.beta / 2.0;
        let shift = k as f64 - self.n as f64;
        (h * (self.n1 + shift), h * (self.n2 + shift))
    }

    /// Beta shapes of `Ct_k^2`, `k = 1..n`.
    pub fn ct_shapes(&self, k: usize) -> (f64, f64) {
        let h = self.beta / 2.0;
        let k = k as f64;
        (
            h * k,
            h * (self.n1 + self.n2 - 2.0 * self.n as f64 + k + 1.0),
        )
    }
}

/// Cosines and sines of the angles parametrizing the bidiagonal model.
///
/// `c`, `s` have length `n`; `ct`, `st` have length `n - 1`. The convention
/// `St_n = 1` is exposed through [`JacobiAngles::st_ext`].
#[derive(Debug, Clone, PartialEq)]
pub struct JacobiAngles<T> {
    c: Vec<T>,
    s: Vec<T>,
    ct: Vec<T>,
    st: Vec<T>,
}

impl<T: Real> JacobiAngles<T> {
    /// Builds the angle set from cosines in `[0, 1]`; sines are `sqrt(1 - c^2)`.
    pub fn from_cosines(c: Vec<T>, ct: Vec<T>) -> Result<Self> {
        if c.is_empty() || ct.len() + 1 != c.len() {
            return Err(Error::contract(
                "need n >= 1 cosines C and n - 1 cosines Ct",
            ));
        }
        let in_range = |v: &T| *v >= T::zero() && *v <= T::one();
        if !c.iter().all(in_range) || !ct.iter().all(in_range) {
            return Err(Error::param("angle cosines must lie in [0, 1]"));
        }
        let sine = |v: &T| (T::one() - *v * *v).sqrt();
        let s = c.iter().map(sine).collect();
        let st = ct.iter().map(sine).collect();
        Ok(Self { c, s, ct, st })
    }

    pub fn n(&self) -> usize {
        self.c.len()
    }

    pub fn c(&self) -> &[T] {
        &self.c
    }

    pub fn s(&self) -> &[T] {
        &self.s
    }

    pub fn ct(&self) -> &[T] {
        &self.ct
    }

    pub fn st(&self) -> &[T] {
        &self.st
    }

    /// `St_k` for zero-based `k` in `0..n`, with `St_n = 1`.
    pub fn st_ext(&self, k: usize) -> T {
        if k + 1 == self.n() {
            T::one()
        } else {
            self.st[k]
        }
    }
}

/// Draws independent `C_k = sqrt(Beta(b/2 (n1-n+k), b/2 (n2-n+k)))` and
/// `Ct_k = sqrt(Beta(b/2 k, b/2 (n1+n2-2n+k+1)))`.
///
/// `C_k` are drawn first (k ascending), then `Ct_k`.
pub fn sample_angles<T: Real>(p: &JacobiParams, stream: &mut RngStream) -> Result<JacobiAngles<T>> {
    p.validate()?;
    let n = p.n;
    let mut c = Vec::with_capacity(n);
    let mut s = Vec::with_capacity(n);
    for k in 1..=n {
        let (a, b) = p.c_shapes(k);
        let y = sample_beta(a, b, stream)?;
        c.push(T::lit(y.sqrt()));
        s.push(T::lit((1.0 - y).sqrt()));
    }
    let mut ct = Vec::with_capacity(n.saturating_sub(1));
    let mut st = Vec::with_capacity(n.saturating_sub(1));
    for k in 1..n {
        let (a, b) = p.ct_shapes(k);
        let y = sample_beta(a, b, stream)?;
        ct.push(T::lit(y.sqrt()));
        st.push(T::lit((1.0 - y).sqrt()));
    }
    Ok(JacobiAngles { c, s, ct, st })
}
