//! Exact bivariate Laurent polynomials in `q^(1/2)` and `a^(1/2)`.
//!
//! Exponents are stored doubled: the monomial `q^(j/2) a^(i/2)` has key
//! `HalfExp { dq: j, da: i }`. Coefficients are arbitrary-precision
//! rationals and zero coefficients are never stored, so two equal
//! polynomials always have identical term maps.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub, SubAssign};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::Error;

/// Doubled exponent pair of a monomial `q^(dq/2) a^(da/2)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct HalfExp {
    pub dq: i64,
    pub da: i64,
}

impl HalfExp {
    pub const ZERO: HalfExp = HalfExp { dq: 0, da: 0 };

    pub fn new(dq: i64, da: i64) -> Self {
        HalfExp { dq, da }
    }
}

impl Add for HalfExp {
    type Output = HalfExp;
    fn add(self, rhs: HalfExp) -> HalfExp {
        HalfExp::new(self.dq + rhs.dq, self.da + rhs.da)
    }
}

/// A Laurent polynomial in `q^(1/2)`, `a^(1/2)` over the rationals.
#[derive(Clone, Default, PartialEq, Eq, Hash)]
pub struct LaurentPoly {
    terms: BTreeMap<HalfExp, BigRational>,
}

pub(crate) fn rat(n: i64) -> BigRational {
    BigRational::from_integer(BigInt::from(n))
}

impl LaurentPoly {
    pub fn zero() -> Self {
        LaurentPoly {
            terms: BTreeMap::new(),
        }
    }

    pub fn one() -> Self {
        Self::monomial(0, 0, BigRational::one())
    }

    pub fn constant(c: BigRational) -> Self {
        Self::monomial(0, 0, c)
    }

    pub fn from_int(n: i64) -> Self {
        Self::constant(rat(n))
    }

    /// `c * q^(dq/2) * a^(da/2)`.
    pub fn monomial(dq: i64, da: i64, c: BigRational) -> Self {
        let mut terms = BTreeMap::new();
        if !Zero::is_zero(&c) {
            terms.insert(HalfExp::new(dq, da), c);
        }
        LaurentPoly { terms }
    }

    /// `q^(dq/2)`.
    pub fn q_pow(dq: i64) -> Self {
        Self::monomial(dq, 0, BigRational::one())
    }

    /// `a^(da/2)`.
    pub fn a_pow(da: i64) -> Self {
        Self::monomial(0, da, BigRational::one())
    }

    /// Builds a polynomial from `(dq, da, coefficient)` triples, summing repeats.
    pub fn from_terms<I>(iter: I) -> Self
    where
        I: IntoIterator<Item = (i64, i64, BigRational)>,
    {
        let mut p = LaurentPoly::zero();
        for (dq, da, c) in iter {
            p.add_term(HalfExp::new(dq, da), c);
        }
        p
    }

    /// Same as [`from_terms`](Self::from_terms) with integer coefficients.
    pub fn from_int_terms(terms: &[(i64, i64, i64)]) -> Self {
        Self::from_terms(terms.iter().map(|&(dq, da, c)| (dq, da, rat(c))))
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1 && self.terms.get(&HalfExp::ZERO).map_or(false, |c| c.is_one())
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&HalfExp, &BigRational)> {
        self.terms.iter()
    }

    pub fn coeff(&self, dq: i64, da: i64) -> BigRational {
        self.terms
            .get(&HalfExp::new(dq, da))
            .cloned()
            .unwrap_or_else(BigRational::zero)
    }

    /// True when no term carries a power of `q`.
    pub fn is_a_only(&self) -> bool {
        self.terms.keys().all(|e| e.dq == 0)
    }

    pub fn is_q_only(&self) -> bool {
        self.terms.keys().all(|e| e.da == 0)
    }

    /// The single term, when the polynomial is a monomial.
    pub fn as_monomial(&self) -> Option<(HalfExp, &BigRational)> {
        if self.terms.len() == 1 {
            self.terms.iter().next().map(|(e, c)| (*e, c))
        } else {
            None
        }
    }

    /// Smallest and largest doubled q-exponent.
    pub fn q_range(&self) -> Option<(i64, i64)> {
        let lo = self.terms.keys().map(|e| e.dq).min()?;
        let hi = self.terms.keys().map(|e| e.dq).max()?;
        Some((lo, hi))
    }

    pub fn a_range(&self) -> Option<(i64, i64)> {
        let lo = self.terms.keys().map(|e| e.da).min()?;
        let hi = self.terms.keys().map(|e| e.da).max()?;
        Some((lo, hi))
    }

    pub fn has_integer_coefficients(&self) -> bool {
        self.terms.values().all(|c| c.is_integer())
    }

    fn add_term(&mut self, e: HalfExp, c: BigRational) {
        if Zero::is_zero(&c) {
            return;
        }
        use std::collections::btree_map::Entry;
        match self.terms.entry(e) {
            Entry::Vacant(v) => {
                v.insert(c);
            }
            Entry::Occupied(mut o) => {
                *o.get_mut() += c;
                if Zero::is_zero(o.get()) {
                    o.remove();
                }
            }
        }
    }

    fn add_scaled_shifted(&mut self, other: &LaurentPoly, c: &BigRational, shift: HalfExp) {
        for (e, v) in &other.terms {
            self.add_term(*e + shift, v * c);
        }
    }

    pub fn scale(&self, c: &BigRational) -> LaurentPoly {
        if Zero::is_zero(c) {
            return LaurentPoly::zero();
        }
        LaurentPoly {
            terms: self.terms.iter().map(|(e, v)| (*e, v * c)).collect(),
        }
    }

    pub fn scale_int(&self, n: i64) -> LaurentPoly {
        self.scale(&rat(n))
    }

    /// Multiplies by the monomial `q^(dq/2) a^(da/2)`.
    pub fn shift(&self, dq: i64, da: i64) -> LaurentPoly {
        let s = HalfExp::new(dq, da);
        LaurentPoly {
            terms: self
                .terms
                .iter()
                .map(|(e, v)| (*e + s, v.clone()))
                .collect(),
        }
    }

    pub fn pow(&self, n: u32) -> LaurentPoly {
        let mut acc = LaurentPoly::one();
        let mut base = self.clone();
        let mut n = n;
        while n > 0 {
            if n & 1 == 1 {
                acc = &acc * &base;
            }
            n >>= 1;
            if n > 0 {
                base = &base * &base;
            }
        }
        acc
    }

    /// The Adams operation: `q -> q^d`, `a -> a^d`.
    pub fn adams(&self, d: u32) -> LaurentPoly {
        assert!(d >= 1, "adams operation needs d >= 1");
        let d = d as i64;
        LaurentPoly {
            terms: self
                .terms
                .iter()
                .map(|(e, v)| (HalfExp::new(e.dq * d, e.da * d), v.clone()))
                .collect(),
        }
    }

    /// Sets `q^(1/2) := 1`, leaving a polynomial in `a^(1/2)` only.
    pub fn specialize_q1(&self) -> LaurentPoly {
        let mut out = LaurentPoly::zero();
        for (e, v) in &self.terms {
            out.add_term(HalfExp::new(0, e.da), v.clone());
        }
        out
    }

    /// Substitutes `a := q^n`, i.e. `a^(1/2) -> q^(n/2)`.
    pub fn substitute_a_q_power(&self, n: i64) -> LaurentPoly {
        let mut out = LaurentPoly::zero();
        for (e, v) in &self.terms {
            out.add_term(HalfExp::new(e.dq + n * e.da, 0), v.clone());
        }
        out
    }

    /// Exact quotient `self / den`.
    ///
    /// The polynomials are treated as univariate in `q^(1/2)` with
    /// coefficients in the Laurent ring of `a^(1/2)`; every leading
    /// coefficient division must itself be exact, and the final remainder
    /// must vanish, otherwise [`Error::InexactDivision`] is returned.
    pub fn exact_div(&self, den: &LaurentPoly) -> Result<LaurentPoly, Error> {
        if den.is_zero() {
            return Err(Error::DivisionByZero);
        }
        if self.is_zero() {
            return Ok(LaurentPoly::zero());
        }
        if let Some((e, c)) = den.as_monomial() {
            let inv = c.recip();
            let mut out = self.scale(&inv);
            out = out.shift(-e.dq, -e.da);
            return Ok(out);
        }
        let num_slices = q_slices(self);
        let den_slices = q_slices(den);
        let quotient = univariate_exact_div(&num_slices, &den_slices).ok_or_else(|| {
            Error::InexactDivision(format!("({}) / ({})", short(self), short(den)))
        })?;
        let mut out = LaurentPoly::zero();
        for (dq, apoly) in quotient {
            for (da, c) in apoly.0 {
                out.terms.insert(HalfExp::new(dq, da), c);
            }
        }
        Ok(out)
    }

    /// Multiplicative inverse of a monomial; `None` for anything else.
    pub fn try_inverse(&self) -> Option<LaurentPoly> {
        let (e, c) = self.as_monomial()?;
        Some(LaurentPoly::monomial(-e.dq, -e.da, c.recip()))
    }
}

fn short(p: &LaurentPoly) -> String {
    let s = p.to_string();
    if s.len() > 120 {
        format!("{}...", &s[..117])
    } else {
        s
    }
}

/// Univariate Laurent polynomial over the rationals, used for the
/// a-coefficients during bivariate division.
#[derive(Clone, Debug, PartialEq)]
struct APoly(BTreeMap<i64, BigRational>);

fn q_slices(p: &LaurentPoly) -> BTreeMap<i64, APoly> {
    let mut out: BTreeMap<i64, APoly> = BTreeMap::new();
    for (e, c) in &p.terms {
        out.entry(e.dq)
            .or_insert_with(|| APoly(BTreeMap::new()))
            .0
            .insert(e.da, c.clone());
    }
    out
}

/// Coefficient ring for univariate exact long division.
trait DivCoeff: Clone {
    fn zero_value() -> Self;
    fn is_nil(&self) -> bool;
    fn try_div(&self, rhs: &Self) -> Option<Self>;
    /// `self -= a * b`.
    fn sub_mul(&mut self, a: &Self, b: &Self);
}

impl DivCoeff for BigRational {
    fn zero_value() -> Self {
        BigRational::zero()
    }
    fn is_nil(&self) -> bool {
        Zero::is_zero(self)
    }
    fn try_div(&self, rhs: &Self) -> Option<Self> {
        if Zero::is_zero(rhs) {
            None
        } else {
            Some(self / rhs)
        }
    }
    fn sub_mul(&mut self, a: &Self, b: &Self) {
        *self -= a * b;
    }
}

impl DivCoeff for APoly {
    fn zero_value() -> Self {
        APoly(BTreeMap::new())
    }
    fn is_nil(&self) -> bool {
        self.0.is_empty()
    }
    fn try_div(&self, rhs: &Self) -> Option<Self> {
        univariate_exact_div(&self.0, &rhs.0).map(APoly)
    }
    fn sub_mul(&mut self, a: &Self, b: &Self) {
        for (ea, ca) in &a.0 {
            for (eb, cb) in &b.0 {
                let e = ea + eb;
                let v = self.0.entry(e).or_insert_with(BigRational::zero);
                *v -= ca * cb;
                if Zero::is_zero(v) {
                    self.0.remove(&e);
                }
            }
        }
    }
}

/// Exact division of univariate Laurent polynomials, top-down.
///
/// The quotient's exponents lie in `[n_lo - d_lo, n_hi - d_hi]`; any
/// remainder that would need an exponent outside that window means the
/// division is not exact.
fn univariate_exact_div<C: DivCoeff>(
    num: &BTreeMap<i64, C>,
    den: &BTreeMap<i64, C>,
) -> Option<BTreeMap<i64, C>> {
    let (&d_lo, _) = den.iter().next()?;
    let (&d_hi, d_lead) = den.iter().next_back()?;
    let mut rem: BTreeMap<i64, C> = num.clone();
    rem.retain(|_, c| !c.is_nil());
    let mut quot = BTreeMap::new();
    let Some((&n_lo, _)) = rem.iter().next() else {
        return Some(quot);
    };
    let q_lo = n_lo - d_lo;
    while let Some((&top, top_c)) = rem.iter().next_back() {
        let qe = top - d_hi;
        if qe < q_lo {
            return None;
        }
        let t = top_c.try_div(d_lead)?;
        for (de, dc) in den {
            let e = qe + de;
            match rem.get_mut(&e) {
                Some(slot) => {
                    slot.sub_mul(&t, dc);
                    if slot.is_nil() {
                        rem.remove(&e);
                    }
                }
                None => {
                    let mut z = C::zero_value();
                    z.sub_mul(&t, dc);
                    if !z.is_nil() {
                        rem.insert(e, z);
                    }
                }
            }
        }
        // the leading term must be gone
        if rem.contains_key(&top) {
            return None;
        }
        quot.insert(qe, t);
    }
    Some(quot)
}

impl Add<&LaurentPoly> for &LaurentPoly {
    type Output = LaurentPoly;
    fn add(self, rhs: &LaurentPoly) -> LaurentPoly {
        let mut out = self.clone();
        out += rhs;
        out
    }
}

impl Add for LaurentPoly {
    type Output = LaurentPoly;
    fn add(mut self, rhs: LaurentPoly) -> LaurentPoly {
        self += &rhs;
        self
    }
}

impl AddAssign<&LaurentPoly> for LaurentPoly {
    fn add_assign(&mut self, rhs: &LaurentPoly) {
        for (e, c) in &rhs.terms {
            self.add_term(*e, c.clone());
        }
    }
}

impl SubAssign<&LaurentPoly> for LaurentPoly {
    fn sub_assign(&mut self, rhs: &LaurentPoly) {
        for (e, c) in &rhs.terms {
            self.add_term(*e, -c);
        }
    }
}

impl Sub<&LaurentPoly> for &LaurentPoly {
    type Output = LaurentPoly;
    fn sub(self, rhs: &LaurentPoly) -> LaurentPoly {
        let mut out = self.clone();
        out -= rhs;
        out
    }
}

impl Sub for LaurentPoly {
    type Output = LaurentPoly;
    fn sub(mut self, rhs: LaurentPoly) -> LaurentPoly {
        self -= &rhs;
        self
    }
}

impl Mul<&LaurentPoly> for &LaurentPoly {
    type Output = LaurentPoly;
    fn mul(self, rhs: &LaurentPoly) -> LaurentPoly {
        let (small, big) = if self.len() <= rhs.len() {
            (self, rhs)
        } else {
            (rhs, self)
        };
        let mut out = LaurentPoly::zero();
        for (e, c) in &small.terms {
            out.add_scaled_shifted(big, c, *e);
        }
        out
    }
}

impl Mul for LaurentPoly {
    type Output = LaurentPoly;
    fn mul(self, rhs: LaurentPoly) -> LaurentPoly {
        &self * &rhs
    }
}

impl Neg for &LaurentPoly {
    type Output = LaurentPoly;
    fn neg(self) -> LaurentPoly {
        LaurentPoly {
            terms: self.terms.iter().map(|(e, v)| (*e, -v)).collect(),
        }
    }
}

impl Neg for LaurentPoly {
    type Output = LaurentPoly;
    fn neg(self) -> LaurentPoly {
        -&self
    }
}

fn fmt_half(var: &str, d: i64) -> Option<String> {
    match d {
        0 => None,
        2 => Some(var.to_string()),
        _ if d % 2 == 0 => Some(format!("{}^{}", var, d / 2)),
        _ => Some(format!("{}^({}/2)", var, d)),
    }
}

impl fmt::Display for LaurentPoly {
    /// Terms are listed by descending a-exponent, then descending q-exponent.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let mut keys: Vec<_> = self.terms.keys().collect();
        keys.sort_by(|x, y| (y.da, y.dq).cmp(&(x.da, x.dq)));
        for (idx, e) in keys.into_iter().enumerate() {
            let c = &self.terms[e];
            let neg = c.is_negative();
            let abs = c.abs();
            if idx == 0 {
                if neg {
                    write!(f, "-")?;
                }
            } else if neg {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            let vars: Vec<String> = [fmt_half("q", e.dq), fmt_half("a", e.da)]
                .into_iter()
                .flatten()
                .collect();
            if vars.is_empty() {
                write!(f, "{}", abs)?;
            } else {
                if !abs.is_one() {
                    write!(f, "{}*", abs)?;
                }
                write!(f, "{}", vars.join("*"))?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "LaurentPoly({})", self)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(dq: i64) -> LaurentPoly {
        LaurentPoly::q_pow(dq)
    }

    #[test]
    fn additive_inverse_cancels() {
        let p = q(1);
        assert!((&p + &(-&p)).is_zero());
    }

    #[test]
    fn difference_of_squares() {
        let lhs = &(&q(1) - &q(-1)) * &(&q(1) + &q(-1));
        assert_eq!(lhs, &q(2) - &q(-2));
    }

    #[test]
    fn scale_by_three() {
        let p = &LaurentPoly::a_pow(2) - &LaurentPoly::one();
        assert_eq!(
            p.scale_int(3),
            LaurentPoly::from_int_terms(&[(0, 2, 3), (0, 0, -3)])
        );
    }

    #[test]
    fn brace_two_over_brace_one() {
        let num = &q(2) - &q(-2);
        let den = &q(1) - &q(-1);
        assert_eq!(num.exact_div(&den).unwrap(), &q(1) + &q(-1));
    }

    #[test]
    fn inexact_division_detected() {
        // q^(1/2) + 1 divided by q^(1/2) - q^(-1/2): as polynomials in
        // t = q^(1/2), (t^2 + t) / (t^2 - 1) = t / (t - 1), not a polynomial.
        let num = &q(1) + &LaurentPoly::one();
        let den = &q(1) - &q(-1);
        assert!(matches!(
            num.exact_div(&den),
            Err(Error::InexactDivision(_))
        ));
    }

    #[test]
    fn division_with_a_dependent_leading_coefficient() {
        let p = LaurentPoly::from_int_terms(&[(3, 1, 2), (0, -1, 1), (-2, 4, -5)]);
        let d = LaurentPoly::from_int_terms(&[(2, 1, 1), (2, -1, -1), (-1, 0, 3)]);
        let prod = &p * &d;
        assert_eq!(prod.exact_div(&d).unwrap(), p);
    }

    #[test]
    fn adams_examples() {
        let f = LaurentPoly::from_int_terms(&[(3, 1, 2), (0, -1, 1)]);
        assert_eq!(f.adams(1), f);
        let g = &q(1) - &LaurentPoly::a_pow(1);
        assert_eq!(g.adams(2), &q(2) - &LaurentPoly::a_pow(2));
        let h = LaurentPoly::from_int_terms(&[(2, -1, 2)]);
        assert_eq!(h.adams(3), LaurentPoly::from_int_terms(&[(6, -3, 2)]));
    }

    #[test]
    fn specialize_examples() {
        let f = LaurentPoly::from_int_terms(&[(1, 2, 1), (-1, 2, -1)]);
        assert!(f.specialize_q1().is_zero());
        let g = LaurentPoly::from_int_terms(&[(2, 2, 1), (0, 2, 1)]);
        assert_eq!(g.specialize_q1(), LaurentPoly::from_int_terms(&[(0, 2, 2)]));
    }

    #[test]
    fn display_is_readable() {
        let f = LaurentPoly::from_int_terms(&[(1, 0, 1), (-1, 0, -1), (0, 3, 2)]);
        assert_eq!(f.to_string(), "2*a^(3/2) + q^(1/2) - q^(-1/2)");
    }
}
