//! Closed-form BPS invariants of framed unknots and twist knots.
//!
//! All sums are carried out over exact big integers; the final `1/r^2`
//! is applied last and integrality is checked rather than assumed.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::links::sign_pow;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Sign {
    Plus,
    Minus,
}

impl Sign {
    pub fn as_i64(self) -> i64 {
        match self {
            Sign::Plus => 1,
            Sign::Minus => -1,
        }
    }
}

/// Möbius function by trial factorization.
pub fn mobius(n: u64) -> i64 {
    assert!(n >= 1, "mobius is defined for n >= 1");
    let mut n = n;
    let mut sign = 1;
    let mut p = 2;
    while p * p <= n {
        if n % p == 0 {
            n /= p;
            if n % p == 0 {
                return 0;
            }
            sign = -sign;
        }
        p += 1;
    }
    if n > 1 {
        sign = -sign;
    }
    sign
}

pub fn divisors(n: u64) -> Vec<u64> {
    (1..=n).filter(|d| n % d == 0).collect()
}

fn binom_nonneg(n: u64, k: u64) -> BigInt {
    if k > n {
        return BigInt::zero();
    }
    let k = k.min(n - k);
    let mut acc = BigInt::one();
    for i in 0..k {
        acc = acc * BigInt::from(n - i) / BigInt::from(i + 1);
    }
    acc
}

/// Binomial coefficient for any integer top entry, with
/// `C(n, k) = (-1)^k C(-n+k-1, k)` for `n < 0`.
pub fn gbinom(n: i64, k: u64) -> BigInt {
    if n >= 0 {
        binom_nonneg(n as u64, k)
    } else {
        let top = (-n) as u64 + k - 1;
        let b = binom_nonneg(top, k);
        if k % 2 == 0 {
            b
        } else {
            -b
        }
    }
}

/// `c_{r,m}(τ)`, the coefficient data of the framed unknot curve.
pub fn c_unknot(r: u64, m: i64, tau: i64) -> BigInt {
    let ri = r as i64;
    if (ri + m).rem_euclid(2) != 0 || m.abs() > ri {
        return BigInt::zero();
    }
    let half = (ri + m) / 2;
    let sign = sign_pow(ri * tau + ri + half);
    let v = binom_nonneg(r, half as u64) * gbinom(ri * tau + half - 1, r - 1);
    v * sign
}

fn exact_over_square(sum: BigInt, r: u64, m: i64) -> Result<BigInt> {
    let den = BigInt::from(r * r);
    let (q, rem) = sum.div_rem(&den);
    if rem.is_zero() {
        Ok(q)
    } else {
        Err(Error::NonIntegerBps {
            r: r as u32,
            m,
            value: BigRational::new(sum, den).to_string(),
        })
    }
}

/// `b_{r,m}(U^τ) = (1/r^2) Σ_{d | gcd(r,m)} μ(d) c_{r/d, m/d}(τ)`.
pub fn b_unknot(r: u64, m: i64, tau: i64) -> Result<BigInt> {
    assert!(r >= 1);
    let g = (r as i64).gcd(&m) as u64;
    let mut sum = BigInt::zero();
    for d in divisors(g) {
        let mu = mobius(d);
        if mu != 0 {
            sum += c_unknot(r / d, m / d as i64, tau) * mu;
        }
    }
    exact_over_square(sum, r, m)
}

/// `(1/r^2) Σ_{d|r} μ(r/d) (-1)^(d s) C(d t - 1, d - 1)` as an exact
/// rational, with the sign parameter `s` separate from `t`.
fn mobius_binomial_sum(r: u64, sign_mul: i64, t: i64) -> BigRational {
    let mut sum = BigInt::zero();
    for d in divisors(r) {
        let mu = mobius(r / d);
        if mu != 0 {
            let di = d as i64;
            sum += gbinom(di * t - 1, d - 1) * (mu * sign_pow(di * sign_mul));
        }
    }
    BigRational::new(sum, BigInt::from(r * r))
}

fn to_integer(v: BigRational, r: u64, m: i64) -> Result<BigInt> {
    if v.is_integer() {
        Ok(v.to_integer())
    } else {
        Err(Error::NonIntegerBps {
            r: r as u32,
            m,
            value: v.to_string(),
        })
    }
}

/// Extremal invariants `b_r^±(U^τ)`.
pub fn b_extremal_unknot(r: u64, sign: Sign, tau: i64) -> Result<BigInt> {
    assert!(r >= 1);
    let v = match sign {
        Sign::Plus => mobius_binomial_sum(r, tau, tau + 1),
        Sign::Minus => mobius_binomial_sum(r, tau + 1, tau),
    };
    to_integer(v, r, sign.as_i64() * r as i64)
}

/// Extremal invariants `b_r^±(K_p^τ)` of framed twist knots.
pub fn b_extremal_twist(r: u64, sign: Sign, p: i64, tau: i64) -> Result<BigInt> {
    assert!(r >= 1);
    let v = if p <= -1 {
        match sign {
            Sign::Minus => -mobius_binomial_sum(r, tau, 3 - tau),
            Sign::Plus => mobius_binomial_sum(r, tau, 2 * p.abs() + 1 + tau),
        }
    } else if p >= 2 {
        match sign {
            Sign::Minus => mobius_binomial_sum(r, tau + 1, tau + 2),
            Sign::Plus => mobius_binomial_sum(r, tau + 1, tau + 2 + 2 * p),
        }
    } else {
        return Err(Error::UnsupportedP(p));
    };
    to_integer(v, r, 0)
}

/// `(1/r^2) Σ_{d|r} μ(r/d) (-1)^(d(t+1)) C(dt-1, d-1)` and whether it is
/// an integer.
pub fn integrality_statistic(r: u64, t: i64) -> (BigRational, bool) {
    assert!(r >= 1);
    let v = mobius_binomial_sum(r, t + 1, t);
    let ok = v.is_integer();
    (v, ok)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn big(n: i64) -> BigInt {
        BigInt::from(n)
    }

    #[test]
    fn mobius_examples() {
        assert_eq!(mobius(1), 1);
        assert_eq!(mobius(12), 0);
        assert_eq!(mobius(30), -1);
        assert_eq!(mobius(7), -1);
        assert_eq!(mobius(6), 1);
    }

    #[test]
    fn gbinom_examples() {
        assert_eq!(gbinom(-1, 2), big(1));
        assert_eq!(gbinom(-2, 1), big(-2));
        assert_eq!(gbinom(5, 2), big(10));
        assert_eq!(gbinom(2, 5), big(0));
        assert_eq!(gbinom(-1, 0), big(1));
    }

    #[test]
    fn gbinom_matches_falling_factorial() {
        // C(n, k) = n (n-1) ... (n-k+1) / k! for every integer n
        for n in -8i64..9 {
            for k in 0u64..7 {
                let mut num = BigInt::one();
                for i in 0..k as i64 {
                    num *= big(n - i);
                }
                let fact: BigInt = (1..=k).map(BigInt::from).product();
                assert_eq!(gbinom(n, k), num / fact, "n={} k={}", n, k);
            }
        }
    }

    #[test]
    fn c_unknot_examples() {
        assert_eq!(c_unknot(1, 1, 0), big(1));
        for tau in -3..4 {
            assert_eq!(c_unknot(2, 0, tau), big(-4 * tau));
        }
        assert_eq!(c_unknot(3, 2, 0), big(0));
        assert_eq!(c_unknot(2, 4, 1), big(0));
    }

    #[test]
    fn b_unknot_examples() {
        assert_eq!(b_unknot(1, 1, 0).unwrap(), big(1));
        assert_eq!(b_unknot(2, 0, 1).unwrap(), big(-1));
    }

    #[test]
    fn b_extremal_unknot_examples() {
        assert_eq!(b_extremal_unknot(1, Sign::Plus, 0).unwrap(), big(1));
        assert_eq!(b_extremal_unknot(2, Sign::Plus, 0).unwrap(), big(0));
        assert_eq!(b_extremal_unknot(1, Sign::Minus, 0).unwrap(), big(-1));
    }

    #[test]
    fn b_extremal_twist_examples() {
        assert_eq!(b_extremal_twist(1, Sign::Minus, -1, 0).unwrap(), big(-1));
        assert_eq!(b_extremal_twist(1, Sign::Plus, -1, 0).unwrap(), big(1));
        assert_eq!(b_extremal_twist(1, Sign::Minus, 2, 0).unwrap(), big(-1));
        assert_eq!(
            b_extremal_twist(3, Sign::Plus, 0, 0),
            Err(Error::UnsupportedP(0))
        );
        assert_eq!(
            b_extremal_twist(3, Sign::Plus, 1, 0),
            Err(Error::UnsupportedP(1))
        );
    }

    #[test]
    fn statistic_examples() {
        for t in -5..6 {
            let (v, ok) = integrality_statistic(1, t);
            assert!(ok);
            assert_eq!(v, BigRational::from_integer(big(sign_pow(t + 1))));
        }
        let (v, ok) = integrality_statistic(2, 3);
        assert!(ok);
        assert_eq!(v, BigRational::from_integer(big(1)));
    }
}
