//! Exact fractions whose denominators are products of cyclotomic
//! polynomials in `q`.
//!
//! Every denominator met in the invariant pipelines comes from brace
//! factorials `{n}! = Π {k}` with `{k} = q^(-k/2) (q^k - 1)`, and
//! `q^k - 1 = Π_{e | k} Φ_e(q)`. Keeping the denominator as a multiset of
//! cyclotomic indices gives exact least common denominators and a
//! closed form for the Adams operation.

use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::sync::{Mutex, OnceLock};

use num_rational::BigRational;

use crate::error::Result;
use crate::laurent::LaurentPoly;
use crate::ring::Ring;

/// `Φ_n(q)` as a Laurent polynomial (doubled exponents, so `q^j` has `dq = 2j`).
pub fn cyclotomic(n: u32) -> LaurentPoly {
    assert!(n >= 1, "cyclotomic index must be positive");
    static CACHE: OnceLock<Mutex<HashMap<u32, LaurentPoly>>> = OnceLock::new();
    let cache = CACHE.get_or_init(|| Mutex::new(HashMap::new()));
    if let Some(p) = cache.lock().unwrap().get(&n) {
        return p.clone();
    }
    let mut p = &LaurentPoly::q_pow(2 * n as i64) - &LaurentPoly::one();
    for d in 1..n {
        if n % d == 0 {
            p = p
                .exact_div(&cyclotomic(d))
                .expect("q^n - 1 is divisible by its cyclotomic factors");
        }
    }
    cache.lock().unwrap().insert(n, p.clone());
    p
}

fn prime_factors(mut n: u32) -> Vec<u32> {
    let mut out = Vec::new();
    let mut p = 2;
    while p * p <= n {
        while n % p == 0 {
            out.push(p);
            n /= p;
        }
        p += 1;
    }
    if n > 1 {
        out.push(n);
    }
    out
}

/// `num / Π_e Φ_e(q)^{m_e}`.
#[derive(Clone)]
pub struct QFrac {
    num: LaurentPoly,
    den: BTreeMap<u32, u32>,
}

impl QFrac {
    pub fn from_poly(p: LaurentPoly) -> Self {
        QFrac {
            num: p,
            den: BTreeMap::new(),
        }
    }

    pub fn new(num: LaurentPoly, den: BTreeMap<u32, u32>) -> Self {
        let den = den.into_iter().filter(|&(_, m)| m > 0).collect();
        QFrac { num, den }
    }

    pub fn numerator(&self) -> &LaurentPoly {
        &self.num
    }

    /// Cyclotomic index to multiplicity.
    pub fn denominator_factors(&self) -> &BTreeMap<u32, u32> {
        &self.den
    }

    pub fn denominator_poly(&self) -> LaurentPoly {
        self.den.iter().fold(LaurentPoly::one(), |acc, (&e, &m)| {
            &acc * &cyclotomic(e).pow(m)
        })
    }

    pub fn is_laurent(&self) -> bool {
        self.den.is_empty()
    }

    /// Divides by the brace `{k} = q^(k/2) - q^(-k/2)`, `k >= 1`.
    pub fn div_brace(&self, k: u32) -> QFrac {
        assert!(k >= 1);
        let mut den = self.den.clone();
        for e in 1..=k {
            if k % e == 0 {
                *den.entry(e).or_insert(0) += 1;
            }
        }
        QFrac {
            num: self.num.shift(k as i64, 0),
            den,
        }
    }

    /// Divides by `{n}! = {n}{n-1}...{1}`.
    pub fn div_brace_factorial(&self, n: u32) -> QFrac {
        (1..=n).fold(self.clone(), |acc, k| acc.div_brace(k))
    }

    pub fn mul_poly(&self, p: &LaurentPoly) -> QFrac {
        QFrac {
            num: &self.num * p,
            den: self.den.clone(),
        }
    }

    fn lift_to(&self, target: &BTreeMap<u32, u32>) -> LaurentPoly {
        let mut num = self.num.clone();
        for (&e, &m) in target {
            let have = self.den.get(&e).copied().unwrap_or(0);
            if m > have {
                num = &num * &cyclotomic(e).pow(m - have);
            }
        }
        num
    }

    fn lcm_den(&self, rhs: &QFrac) -> BTreeMap<u32, u32> {
        let mut out = self.den.clone();
        for (&e, &m) in &rhs.den {
            let slot = out.entry(e).or_insert(0);
            *slot = (*slot).max(m);
        }
        out
    }

    /// The Adams operation `q -> q^d, a -> a^d` on numerator and denominator.
    ///
    /// Uses `Φ_n(x^p) = Φ_{np}(x)` when `p | n` and `Φ_{np}(x) Φ_n(x)`
    /// otherwise, one prime factor of `d` at a time.
    pub fn adams(&self, d: u32) -> QFrac {
        let mut den = self.den.clone();
        for p in prime_factors(d) {
            let mut next = BTreeMap::new();
            for (&n, &m) in &den {
                *next.entry(n * p).or_insert(0) += m;
                if n % p != 0 {
                    *next.entry(n).or_insert(0) += m;
                }
            }
            den = next;
        }
        QFrac {
            num: self.num.adams(d),
            den,
        }
    }

    /// Cancels cyclotomic factors that divide the numerator.
    pub fn reduce(&self) -> QFrac {
        let mut num = self.num.clone();
        let mut den = BTreeMap::new();
        if num.is_zero() {
            return QFrac { num, den };
        }
        for (&e, &m) in &self.den {
            let phi = cyclotomic(e);
            let mut left = m;
            while left > 0 {
                match num.exact_div(&phi) {
                    Ok(q) => {
                        num = q;
                        left -= 1;
                    }
                    Err(_) => break,
                }
            }
            if left > 0 {
                den.insert(e, left);
            }
        }
        QFrac { num, den }
    }

    /// Clears the denominator, failing with `InexactDivision` if the value
    /// is not a Laurent polynomial.
    pub fn to_laurent(&self) -> Result<LaurentPoly> {
        let mut num = self.num.clone();
        for (&e, &m) in self.den.iter().rev() {
            let phi = cyclotomic(e);
            for _ in 0..m {
                num = num.exact_div(&phi)?;
            }
        }
        Ok(num)
    }
}

impl From<LaurentPoly> for QFrac {
    fn from(p: LaurentPoly) -> Self {
        QFrac::from_poly(p)
    }
}

impl PartialEq for QFrac {
    fn eq(&self, other: &QFrac) -> bool {
        let den = self.lcm_den(other);
        self.lift_to(&den) == other.lift_to(&den)
    }
}

impl Ring for QFrac {
    fn zero() -> Self {
        QFrac::from_poly(LaurentPoly::zero())
    }
    fn one() -> Self {
        QFrac::from_poly(LaurentPoly::one())
    }
    fn is_zero(&self) -> bool {
        self.num.is_zero()
    }
    fn add(&self, rhs: &Self) -> Self {
        if rhs.num.is_zero() {
            return self.clone();
        }
        if self.num.is_zero() {
            return rhs.clone();
        }
        let den = self.lcm_den(rhs);
        let num = &self.lift_to(&den) + &rhs.lift_to(&den);
        QFrac { num, den }
    }
    fn sub(&self, rhs: &Self) -> Self {
        self.add(&rhs.neg())
    }
    fn mul(&self, rhs: &Self) -> Self {
        let mut den = self.den.clone();
        for (&e, &m) in &rhs.den {
            *den.entry(e).or_insert(0) += m;
        }
        QFrac {
            num: &self.num * &rhs.num,
            den,
        }
    }
    fn neg(&self) -> Self {
        QFrac {
            num: -&self.num,
            den: self.den.clone(),
        }
    }
    fn scale(&self, c: &BigRational) -> Self {
        QFrac {
            num: self.num.scale(c),
            den: self.den.clone(),
        }
    }
    fn try_inverse(&self) -> Option<Self> {
        let inv = self.num.try_inverse()?;
        Some(QFrac::from_poly(&inv * &self.denominator_poly()))
    }
}

impl fmt::Display for QFrac {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den.is_empty() {
            return write!(f, "{}", self.num);
        }
        let factors: Vec<String> = self
            .den
            .iter()
            .map(|(&e, &m)| {
                if m == 1 {
                    format!("Phi{}(q)", e)
                } else {
                    format!("Phi{}(q)^{}", e, m)
                }
            })
            .collect();
        write!(f, "({}) / ({})", self.num, factors.join("*"))
    }
}

impl fmt::Debug for QFrac {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "QFrac({})", self)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn brace(k: i64) -> LaurentPoly {
        &LaurentPoly::q_pow(k) - &LaurentPoly::q_pow(-k)
    }

    #[test]
    fn small_cyclotomics() {
        // Φ_1 = q - 1, Φ_2 = q + 1, Φ_6 = q^2 - q + 1
        assert_eq!(
            cyclotomic(1),
            LaurentPoly::from_int_terms(&[(2, 0, 1), (0, 0, -1)])
        );
        assert_eq!(
            cyclotomic(2),
            LaurentPoly::from_int_terms(&[(2, 0, 1), (0, 0, 1)])
        );
        assert_eq!(
            cyclotomic(6),
            LaurentPoly::from_int_terms(&[(4, 0, 1), (2, 0, -1), (0, 0, 1)])
        );
    }

    #[test]
    fn brace_division_roundtrip() {
        let x = QFrac::from_poly(brace(3)).div_brace(3);
        assert_eq!(x.to_laurent().unwrap(), LaurentPoly::one());
    }

    #[test]
    fn adams_matches_direct_substitution() {
        // 1/{2} under q -> q^3 is 1/{6}
        let x = QFrac::from_poly(LaurentPoly::one()).div_brace(2);
        let y = QFrac::from_poly(LaurentPoly::one()).div_brace(6);
        assert_eq!(x.adams(3), y);
        let z = QFrac::from_poly(LaurentPoly::a_pow(1))
            .div_brace(4)
            .div_brace(1);
        let w = QFrac::from_poly(LaurentPoly::a_pow(2))
            .div_brace(8)
            .div_brace(2);
        assert_eq!(z.adams(2), w);
    }

    #[test]
    fn addition_uses_common_denominator() {
        // 1/{1} - 1/{1} = 0, and {2}/{1} - [2] = 0
        let a = QFrac::from_poly(LaurentPoly::one()).div_brace(1);
        assert!(a.sub(&a).reduce().is_zero());
        let b = QFrac::from_poly(brace(2)).div_brace(1);
        let c = QFrac::from_poly(&LaurentPoly::q_pow(1) + &LaurentPoly::q_pow(-1));
        assert!(b.sub(&c).to_laurent().unwrap().is_zero());
    }

    #[test]
    fn non_laurent_value_reports_inexact() {
        let a = QFrac::from_poly(LaurentPoly::a_pow(1)).div_brace(1);
        assert!(a.to_laurent().is_err());
    }
}
