//! Truncated formal power series `Σ_{k < order} c_k t^k`.
//!
//! Coefficient `k` of every result is exact for `k < order`; nothing past
//! the truncation is ever read or produced.

use num_rational::BigRational;

use crate::error::{Error, Result};
use crate::laurent::rat;
use crate::ring::Ring;

#[derive(Clone, PartialEq, Debug)]
pub struct TruncSeries<C: Ring> {
    coeffs: Vec<C>,
}

impl<C: Ring> TruncSeries<C> {
    /// Pads with zeros or truncates `coeffs` to exactly `order` entries.
    pub fn new(mut coeffs: Vec<C>, order: usize) -> Self {
        coeffs.resize(order, C::zero());
        TruncSeries { coeffs }
    }

    pub fn zero(order: usize) -> Self {
        Self::new(Vec::new(), order)
    }

    pub fn one(order: usize) -> Self {
        Self::constant(C::one(), order)
    }

    pub fn constant(c: C, order: usize) -> Self {
        Self::new(vec![c], order)
    }

    /// The series variable `t` itself.
    pub fn variable(order: usize) -> Self {
        Self::new(vec![C::zero(), C::one()], order)
    }

    pub fn order(&self) -> usize {
        self.coeffs.len()
    }

    pub fn coeffs(&self) -> &[C] {
        &self.coeffs
    }

    /// Coefficient of `t^k`; zero past the truncation.
    pub fn coeff(&self, k: usize) -> C {
        self.coeffs.get(k).cloned().unwrap_or_else(C::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Ring::is_zero)
    }

    pub fn truncate(&self, order: usize) -> Self {
        Self::new(self.coeffs.clone(), order)
    }

    fn check_order(&self, rhs: &Self) -> usize {
        self.order().min(rhs.order())
    }

    pub fn add(&self, rhs: &Self) -> Self {
        let n = self.check_order(rhs);
        TruncSeries {
            coeffs: (0..n).map(|k| self.coeffs[k].add(&rhs.coeffs[k])).collect(),
        }
    }

    pub fn sub(&self, rhs: &Self) -> Self {
        let n = self.check_order(rhs);
        TruncSeries {
            coeffs: (0..n).map(|k| self.coeffs[k].sub(&rhs.coeffs[k])).collect(),
        }
    }

    pub fn neg(&self) -> Self {
        TruncSeries {
            coeffs: self.coeffs.iter().map(Ring::neg).collect(),
        }
    }

    pub fn scale(&self, c: &BigRational) -> Self {
        TruncSeries {
            coeffs: self.coeffs.iter().map(|x| x.scale(c)).collect(),
        }
    }

    /// Multiplies every coefficient by a ring element.
    pub fn scale_by(&self, c: &C) -> Self {
        TruncSeries {
            coeffs: self.coeffs.iter().map(|x| x.mul(c)).collect(),
        }
    }

    pub fn mul(&self, rhs: &Self) -> Self {
        let n = self.check_order(rhs);
        let mut out = vec![C::zero(); n];
        for (i, a) in self.coeffs.iter().enumerate().take(n) {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate().take(n - i) {
                if !b.is_zero() {
                    out[i + j] = out[i + j].add(&a.mul(b));
                }
            }
        }
        TruncSeries { coeffs: out }
    }

    /// Multiplicative inverse; the constant term must be a unit.
    pub fn inverse(&self) -> Result<Self> {
        let n = self.order();
        if n == 0 {
            return Ok(self.clone());
        }
        let inv0 = self.coeffs[0]
            .try_inverse()
            .ok_or(Error::NonInvertibleLeadingTerm)?;
        let mut out: Vec<C> = Vec::with_capacity(n);
        out.push(inv0.clone());
        for k in 1..n {
            let mut acc = C::zero();
            for j in 1..=k {
                if !self.coeffs[j].is_zero() {
                    acc = acc.add(&self.coeffs[j].mul(&out[k - j]));
                }
            }
            out.push(acc.mul(&inv0).neg());
        }
        Ok(TruncSeries { coeffs: out })
    }

    /// Integer power; negative exponents need an invertible constant term.
    pub fn pow_int(&self, e: i64) -> Result<Self> {
        let base = if e < 0 { self.inverse()? } else { self.clone() };
        let mut n = e.unsigned_abs();
        let mut acc = Self::one(self.order());
        let mut b = base;
        while n > 0 {
            if n & 1 == 1 {
                acc = acc.mul(&b);
            }
            n >>= 1;
            if n > 0 {
                b = b.mul(&b);
            }
        }
        Ok(acc)
    }

    pub fn derivative(&self) -> Self {
        let n = self.order();
        let coeffs = (1..n)
            .map(|k| self.coeffs[k].scale(&rat(k as i64)))
            .collect();
        Self::new(coeffs, n)
    }

    /// Antiderivative with zero constant term.
    pub fn integral(&self) -> Self {
        let n = self.order();
        let mut coeffs = vec![C::zero()];
        for k in 1..n {
            let c = BigRational::new(1.into(), (k as i64).into());
            coeffs.push(self.coeffs[k - 1].scale(&c));
        }
        Self::new(coeffs, n)
    }

    /// `t * d/dt`.
    pub fn euler_derivative(&self) -> Self {
        TruncSeries {
            coeffs: self
                .coeffs
                .iter()
                .enumerate()
                .map(|(k, c)| c.scale(&rat(k as i64)))
                .collect(),
        }
    }

    /// `log(1 + self)`; the constant term must vanish.
    pub fn log1p(&self) -> Result<Self> {
        if self.order() == 0 {
            return Ok(self.clone());
        }
        if !self.coeffs[0].is_zero() {
            return Err(Error::NonInvertibleLeadingTerm);
        }
        let one_plus = self.add(&Self::one(self.order()));
        Ok(self.derivative().mul(&one_plus.inverse()?).integral())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    type S = TruncSeries<BigRational>;

    fn r(n: i64, d: i64) -> BigRational {
        BigRational::new(n.into(), d.into())
    }

    #[test]
    fn log1p_of_variable() {
        let x = S::variable(4);
        let l = x.log1p().unwrap();
        assert_eq!(l.coeffs(), &[r(0, 1), r(1, 1), r(-1, 2), r(1, 3)]);
    }

    #[test]
    fn geometric_series_from_negative_power() {
        let one_minus = S::new(vec![r(1, 1), r(-1, 1)], 3);
        let g = one_minus.pow_int(-1).unwrap();
        assert_eq!(g.coeffs(), &[r(1, 1), r(1, 1), r(1, 1)]);
    }

    #[test]
    fn product_truncates() {
        let a = S::new(vec![r(1, 1), r(1, 1)], 3);
        let b = S::new(vec![r(1, 1), r(-1, 1)], 3);
        assert_eq!(a.mul(&b).coeffs(), &[r(1, 1), r(0, 1), r(-1, 1)]);
    }

    #[test]
    fn log1p_rejects_constant_term() {
        let s = S::one(3);
        assert_eq!(s.log1p(), Err(Error::NonInvertibleLeadingTerm));
    }

    #[test]
    fn inverse_needs_unit() {
        let s = S::variable(3);
        assert_eq!(s.inverse(), Err(Error::NonInvertibleLeadingTerm));
    }
}
