//! Dual and extremal A-polynomial curves of framed unknots and twist
//! knots, and the series branch `y(x)` with `y(0)^2 = 1`.
//!
//! Two independent solvers extract `x ∂ₓ log y`: Lagrange inversion on the
//! functional equation `Y = X φ(Y)` with `Y = 1 - y^2`, and Newton lifting
//! of `w = y^2` directly on the curve.

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Zero;
use serde::{Deserialize, Serialize};

use crate::closed::{divisors, mobius};
use crate::error::{Error, Result};
use crate::laurent::{rat, LaurentPoly};
use crate::links::sign_pow;
use crate::series::TruncSeries;

type Series = TruncSeries<LaurentPoly>;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum KnotKind {
    Unknot,
    Twist(i64),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum CurveKind {
    Full,
    ExtremalPlus,
    ExtremalMinus,
}

/// `Σ c_{k,j}(a) x^k y^j`, keyed by `(k, j)`; `j` may be negative.
#[derive(Clone, Debug, Default, PartialEq)]
pub struct CurvePoly {
    terms: BTreeMap<(u32, i64), LaurentPoly>,
}

impl CurvePoly {
    pub fn zero() -> Self {
        CurvePoly::default()
    }

    pub fn from_terms(terms: impl IntoIterator<Item = ((u32, i64), LaurentPoly)>) -> Self {
        let mut out = CurvePoly::zero();
        for (key, c) in terms {
            out.add_term(key, &c);
        }
        out
    }

    /// Integer-coefficient terms `(x-degree, y-exponent, coefficient)`.
    pub fn from_int_terms(terms: &[(u32, i64, i64)]) -> Self {
        CurvePoly::from_terms(
            terms
                .iter()
                .map(|&(k, j, c)| ((k, j), LaurentPoly::from_int(c))),
        )
    }

    pub fn add_term(&mut self, key: (u32, i64), c: &LaurentPoly) {
        let slot = self.terms.entry(key).or_insert_with(LaurentPoly::zero);
        *slot = &*slot + c;
        if slot.is_zero() {
            self.terms.remove(&key);
        }
    }

    pub fn terms(&self) -> &BTreeMap<(u32, i64), LaurentPoly> {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, k: u32, j: i64) -> LaurentPoly {
        self.terms
            .get(&(k, j))
            .cloned()
            .unwrap_or_else(LaurentPoly::zero)
    }

    pub fn x_degree(&self) -> u32 {
        self.terms.keys().map(|&(k, _)| k).max().unwrap_or(0)
    }

    pub fn min_y(&self) -> Option<i64> {
        self.terms.keys().map(|&(_, j)| j).min()
    }

    pub fn shift_y(&self, s: i64) -> CurvePoly {
        CurvePoly {
            terms: self
                .terms
                .iter()
                .map(|(&(k, j), c)| ((k, j + s), c.clone()))
                .collect(),
        }
    }

    pub fn scale(&self, c: &LaurentPoly) -> CurvePoly {
        CurvePoly::from_terms(self.terms.iter().map(|(&key, v)| (key, v * c)))
    }

    /// Multiplies by the smallest `y`-power that makes every exponent
    /// non-negative.
    pub fn clear_negative_y(&self) -> CurvePoly {
        match self.min_y() {
            Some(m) if m < 0 => self.shift_y(-m),
            _ => self.clone(),
        }
    }

    /// Shifts the lowest `y`-exponent to zero and makes the first
    /// coefficient's leading rational equal to one.
    fn unit_normalized(&self) -> CurvePoly {
        let Some(m) = self.min_y() else {
            return self.clone();
        };
        let shifted = self.shift_y(-m);
        let lead = shifted
            .terms
            .values()
            .next()
            .and_then(|c| c.terms().next().map(|(_, v)| v.clone()))
            .expect("nonzero curve");
        shifted.scale(&LaurentPoly::constant(
            BigRational::from_integer(1.into()) / lead,
        ))
    }
}

impl fmt::Display for CurvePoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let parts: Vec<String> = self
            .terms
            .iter()
            .map(|(&(k, j), c)| {
                let mut mono = String::new();
                if k == 1 {
                    mono.push('x');
                } else if k > 1 {
                    mono.push_str(&format!("x^{}", k));
                }
                if j != 0 {
                    if !mono.is_empty() {
                        mono.push('*');
                    }
                    if j == 1 {
                        mono.push('y');
                    } else {
                        mono.push_str(&format!("y^{}", j));
                    }
                }
                if mono.is_empty() {
                    format!("({})", c)
                } else {
                    format!("({})*{}", c, mono)
                }
            })
            .collect();
        write!(f, "{}", parts.join(" + "))
    }
}

/// Whether two curves differ by a nonzero rational times a `y`-monomial.
pub fn equivalent_up_to_unit(a: &CurvePoly, b: &CurvePoly) -> bool {
    a.unit_normalized() == b.unit_normalized()
}

#[derive(Clone, Debug, PartialEq)]
pub struct DualAPoly {
    pub source: CurvePoly,
    pub kind: CurveKind,
    pub knot: KnotKind,
    pub framing: i64,
}

fn twist_supported(p: i64) -> Result<()> {
    if p <= -1 || p >= 2 {
        Ok(())
    } else {
        Err(Error::UnsupportedP(p))
    }
}

fn half_a(da: i64) -> LaurentPoly {
    LaurentPoly::a_pow(da)
}

/// The dual or extremal A-polynomial of a framed unknot or twist knot.
pub fn make_curve(knot: KnotKind, kind: CurveKind, tau: i64) -> Result<DualAPoly> {
    let s = sign_pow(tau);
    let source = match (knot, kind) {
        (KnotKind::Unknot, CurveKind::Full) => {
            // (-1)^τ (y^2 - 1) - x (a^(1/2) y^2 - a^(-1/2)) y^(2τ)
            CurvePoly::from_terms([
                ((0, 2), LaurentPoly::from_int(s)),
                ((0, 0), LaurentPoly::from_int(-s)),
                ((1, 2 * tau + 2), -half_a(1)),
                ((1, 2 * tau), half_a(-1)),
            ])
        }
        (KnotKind::Unknot, CurveKind::ExtremalPlus) => {
            CurvePoly::from_int_terms(&[(0, 2, s), (0, 0, -s), (1, 2 * tau + 2, -1)])
        }
        (KnotKind::Unknot, CurveKind::ExtremalMinus) => {
            CurvePoly::from_int_terms(&[(0, 2, s), (0, 0, -s), (1, 2 * tau, 1)])
        }
        (KnotKind::Twist(p), CurveKind::Full) => {
            twist_supported(p)?;
            return Err(Error::UnsupportedKnotKind(format!(
                "twist({}) has only extremal curves",
                p
            )));
        }
        (KnotKind::Twist(p), CurveKind::ExtremalMinus) => {
            twist_supported(p)?;
            if p <= -1 {
                CurvePoly::from_int_terms(&[(1, 2 * tau, s), (0, 4, -1), (0, 6, 1)])
            } else {
                CurvePoly::from_int_terms(&[(0, 0, 1), (0, 2, -1), (1, 4 + 2 * tau, -s)])
            }
        }
        (KnotKind::Twist(p), CurveKind::ExtremalPlus) => {
            twist_supported(p)?;
            if p <= -1 {
                CurvePoly::from_int_terms(&[
                    (0, 0, 1),
                    (0, 2, -1),
                    (1, 4 * p.abs() + 2 + 2 * tau, s),
                ])
            } else {
                CurvePoly::from_int_terms(&[(0, 0, 1), (0, 2, -1), (1, 4 * p + 4 + 2 * tau, -s)])
            }
        }
    };
    Ok(DualAPoly {
        source,
        kind,
        knot,
        framing: tau,
    })
}

/// `x -> (-1)^τ y^(2τ) x`, then clears negative `y`-powers.
pub fn frame_transform(curve: &DualAPoly, tau: i64) -> DualAPoly {
    let mut out = CurvePoly::zero();
    for (&(k, j), c) in curve.source.terms() {
        let ki = k as i64;
        out.add_term((k, j + 2 * tau * ki), &c.scale_int(sign_pow(tau * ki)));
    }
    DualAPoly {
        source: out.clear_negative_y(),
        kind: curve.kind,
        knot: curve.knot,
        framing: curve.framing + tau,
    }
}

/// `φ(Y) = Σ_e c_e(a) (1 - Y)^e`, exact.
#[derive(Clone, Debug, PartialEq)]
pub struct PhiForm {
    pub terms: BTreeMap<i64, LaurentPoly>,
}

impl PhiForm {
    pub fn series(&self, order: usize) -> Result<Series> {
        let one_minus = Series::new(vec![LaurentPoly::one(), LaurentPoly::from_int(-1)], order);
        let mut out = Series::zero(order);
        for (&e, c) in &self.terms {
            out = out.add(&one_minus.pow_int(e)?.scale_by(c));
        }
        Ok(out)
    }

    pub fn at_zero(&self) -> LaurentPoly {
        self.terms
            .values()
            .fold(LaurentPoly::zero(), |acc, c| &acc + c)
    }
}

/// `Y = X φ(Y)` with `Y = 1 - y^2` and `X = x_rescale · x`.
#[derive(Clone, Debug, PartialEq)]
pub struct CurveNormalForm {
    pub phi: PhiForm,
    pub phi_series: Series,
    /// `σ a^(e/2)` with `σ = ±1`.
    pub x_rescale: LaurentPoly,
    pub framing: i64,
    pub source: CurvePoly,
}

impl CurveNormalForm {
    /// `-Y + X φ(Y)` rewritten in `x, y`, i.e. `(y^2 - 1) + ρ x Σ c_e y^(2e)`.
    pub fn reconstruct(&self) -> CurvePoly {
        let mut out = CurvePoly::from_int_terms(&[(0, 2, 1), (0, 0, -1)]);
        for (&e, c) in &self.phi.terms {
            out.add_term((1, 2 * e), &(&self.x_rescale * c));
        }
        out.clear_negative_y()
    }
}

/// Rewrites a curve `c y^(2s) (y^2 - 1) + x M(y^2, a)` as `Y = X φ(Y)`.
pub fn normalize(curve: &DualAPoly, order: usize) -> Result<CurveNormalForm> {
    let src = &curve.source;
    if src.x_degree() != 1 {
        return Err(Error::NotNormalizable("curve must be linear in x".into()));
    }
    if src.terms().keys().any(|&(_, j)| j.rem_euclid(2) != 0) {
        return Err(Error::NotNormalizable("odd power of y".into()));
    }
    let base: Vec<(i64, LaurentPoly)> = src
        .terms()
        .iter()
        .filter(|(&(k, _), _)| k == 0)
        .map(|(&(_, j), c)| (j, c.clone()))
        .collect();
    let shape_err = || Error::NotNormalizable("x-free part is not a unit times (y^2 - 1)".into());
    if base.len() != 2 || base[1].0 != base[0].0 + 2 {
        return Err(shape_err());
    }
    let c = base[1].1.clone();
    if c != -&base[0].1 || c.as_monomial().is_none() {
        return Err(shape_err());
    }
    let s = base[0].0 / 2;
    let c_inv = c.try_inverse().ok_or_else(shape_err)?;
    let mut raw: BTreeMap<i64, LaurentPoly> = BTreeMap::new();
    for (&(k, j), m) in src.terms() {
        if k == 1 {
            raw.insert(j / 2 - s, m * &c_inv);
        }
    }
    let raw = PhiForm { terms: raw };
    let at_zero = raw.at_zero();
    if at_zero.is_zero() || !at_zero.is_a_only() {
        return Err(Error::NotNormalizable(
            "φ(0) vanishes or depends on q".into(),
        ));
    }
    let (low, low_c) = at_zero
        .terms()
        .min_by_key(|(e, _)| e.da)
        .map(|(e, v)| (*e, v.clone()))
        .expect("nonzero");
    let one = rat(1);
    if low_c != one && low_c != -one.clone() {
        return Err(Error::NotNormalizable(format!(
            "lowest a-coefficient of φ(0) is {}, not ±1",
            low_c
        )));
    }
    let rescale = LaurentPoly::monomial(0, low.da, low_c);
    let r_inv = rescale.try_inverse().expect("monomial");
    let phi = PhiForm {
        terms: raw.terms.iter().map(|(&e, v)| (e, v * &r_inv)).collect(),
    };
    let phi_series = phi.series(order)?;
    Ok(CurveNormalForm {
        phi,
        phi_series,
        x_rescale: rescale,
        framing: curve.framing,
        source: src.clone(),
    })
}

/// `γ_{r,m}` with `x ∂ₓ log y = Σ γ_{r,m} x^r a^(m/2)`, `m` doubled.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GammaSeries {
    pub order: u32,
    pub coeffs: BTreeMap<(u32, i64), BigRational>,
}

impl GammaSeries {
    fn from_levels(levels: &[LaurentPoly]) -> GammaSeries {
        let mut coeffs = BTreeMap::new();
        for (r, p) in levels.iter().enumerate().skip(1) {
            for (e, v) in p.terms() {
                assert_eq!(e.dq, 0, "γ coefficients are free of q");
                coeffs.insert((r as u32, e.da), v.clone());
            }
        }
        GammaSeries {
            order: levels.len().saturating_sub(1) as u32,
            coeffs,
        }
    }

    pub fn get(&self, r: u32, m: i64) -> BigRational {
        self.coeffs
            .get(&(r, m))
            .cloned()
            .unwrap_or_else(<BigRational as Zero>::zero)
    }
}

/// `γ` up to `x^max_r` by Lagrange inversion:
/// `[X^n] log(1 - Y) = (1/n) [λ^(n-1)] (-φ(λ)^n / (1 - λ))`.
pub fn lagrange_log_y(nf: &CurveNormalForm, max_r: u32) -> GammaSeries {
    let n_max = max_r as usize;
    let phi = nf.phi_series.truncate(n_max.max(1));
    let mut power = Series::one(n_max.max(1));
    let mut levels = vec![LaurentPoly::zero()];
    let half = BigRational::new(1.into(), 2.into());
    for n in 1..=n_max {
        power = power.mul(&phi);
        let partial = (0..n).fold(LaurentPoly::zero(), |acc, k| &acc + &power.coeff(k));
        // γ_n = n [x^n] ½ log(1 - Y) = -½ ρ^n Σ_{k<n} [λ^k] φ^n
        let g = (&nf.x_rescale.pow(n as u32) * &partial).scale(&-half.clone());
        levels.push(g);
    }
    GammaSeries::from_levels(&levels)
}

/// The curve as a polynomial in `x` and `w = y^2`.
fn w_terms(curve: &CurvePoly) -> Result<Vec<(u32, i64, LaurentPoly)>> {
    curve
        .terms()
        .iter()
        .map(|(&(k, j), c)| {
            if j.rem_euclid(2) != 0 {
                Err(Error::SingularBranch("odd power of y".into()))
            } else {
                Ok((k, j / 2, c.clone()))
            }
        })
        .collect()
}

fn shift_x(s: &Series, k: u32) -> Series {
    let k = k as usize;
    let n = s.order();
    let mut coeffs = vec![LaurentPoly::zero(); k.min(n)];
    coeffs.extend(s.coeffs().iter().take(n.saturating_sub(k)).cloned());
    Series::new(coeffs, n)
}

/// `G(x, w)` and `∂G/∂w` evaluated on a series `w(x)` with `w(0) = 1`.
fn eval_with_derivative(terms: &[(u32, i64, LaurentPoly)], w: &Series) -> Result<(Series, Series)> {
    let n = w.order();
    let mut g = Series::zero(n);
    let mut dg = Series::zero(n);
    for (k, j, c) in terms {
        let wj = w.pow_int(*j)?;
        g = g.add(&shift_x(&wj.scale_by(c), *k));
        if *j != 0 {
            let wj1 = w.pow_int(j - 1)?;
            dg = dg.add(&shift_x(&wj1.scale_by(&c.scale_int(*j)), *k));
        }
    }
    Ok((g, dg))
}

/// `y(x)^2` on the branch `y(0)^2 = 1`, by Newton lifting to `order` terms.
pub fn solve_w(curve: &DualAPoly, order: usize) -> Result<Series> {
    let terms = w_terms(&curve.source)?;
    let one = Series::one(1);
    let (g0, dg0) = eval_with_derivative(&terms, &one)?;
    if !g0.coeff(0).is_zero() {
        return Err(Error::SingularBranch(
            "y^2 = 1 does not lie on the curve at x = 0".into(),
        ));
    }
    if dg0.coeff(0).try_inverse().is_none() {
        return Err(Error::SingularBranch(
            "∂A/∂(y^2) is not a unit at (0, 1)".into(),
        ));
    }
    let mut w = one;
    let mut prec = 1;
    while prec < order {
        prec = (2 * prec).min(order);
        w = w.truncate(prec);
        let (g, dg) = eval_with_derivative(&terms, &w)?;
        w = w.sub(&g.mul(&dg.inverse()?));
    }
    Ok(w.truncate(order))
}

/// The curve evaluated on `w = y^2`; zero to the series order on the branch.
pub fn residual(curve: &DualAPoly, w: &Series) -> Result<Series> {
    Ok(eval_with_derivative(&w_terms(&curve.source)?, w)?.0)
}

/// `γ` up to `x^max_r` from `x ∂ₓ log y = ½ x w'/w`.
pub fn newton_series_solve(curve: &DualAPoly, max_r: u32) -> Result<GammaSeries> {
    let order = max_r as usize + 1;
    let w = solve_w(curve, order)?;
    let res = residual(curve, &w)?;
    if !res.is_zero() {
        return Err(Error::Inconsistent(
            "Newton branch leaves a residual".into(),
        ));
    }
    let g = w
        .euler_derivative()
        .mul(&w.inverse()?)
        .scale(&BigRational::new(1.into(), 2.into()));
    Ok(GammaSeries::from_levels(g.coeffs()))
}

/// `b_{r,m} = (2/r^2) Σ_{d | gcd(r,m)} μ(d) γ_{r/d, m/d}` for every `r`
/// up to the series order; each value must be an integer.
pub fn bps_from_gamma(gamma: &GammaSeries) -> Result<BTreeMap<(u32, i64), BigInt>> {
    let mut sums: BTreeMap<(u32, i64), BigRational> = BTreeMap::new();
    for r in 1..=gamma.order {
        for d in divisors(r as u64) {
            let mu = mobius(d);
            if mu == 0 {
                continue;
            }
            let level = r / d as u32;
            for (&(_, m), v) in gamma.coeffs.range((level, i64::MIN)..=(level, i64::MAX)) {
                let slot = sums
                    .entry((r, m * d as i64))
                    .or_insert_with(<BigRational as Zero>::zero);
                *slot += v * BigRational::from_integer(mu.into());
            }
        }
    }
    let mut out = BTreeMap::new();
    for ((r, m), s) in sums {
        let b = s * BigRational::new(2.into(), BigInt::from(r) * BigInt::from(r));
        if !b.is_integer() {
            return Err(Error::NonIntegerBps {
                r,
                m,
                value: b.to_string(),
            });
        }
        let b = b.to_integer();
        if !b.is_zero() {
            out.insert((r, m), b);
        }
    }
    Ok(out)
}

/// `b_{r,m}` of a curve through Lagrange inversion.
pub fn bps_via_lagrange(curve: &DualAPoly, max_r: u32) -> Result<BTreeMap<(u32, i64), BigInt>> {
    let nf = normalize(curve, max_r.max(1) as usize)?;
    bps_from_gamma(&lagrange_log_y(&nf, max_r))
}

/// `b_{r,m}` of a curve through Newton lifting.
pub fn bps_via_newton(curve: &DualAPoly, max_r: u32) -> Result<BTreeMap<(u32, i64), BigInt>> {
    bps_from_gamma(&newton_series_solve(curve, max_r)?)
}
