//! Colored HOMFLYPT invariants with symmetric colors for the unknot, the
//! Whitehead link and the Borromean rings, and the framing factor.
//!
//! Values are [`QFrac`]s: the unknot already has `{r}!` in its
//! denominator, so none of these are Laurent polynomials in general.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::laurent::LaurentPoly;
use crate::qsym::{qsym_falling, SymbolKind};
use crate::ratio::QFrac;
use crate::ring::Ring;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum LinkKind {
    Unknot,
    /// Twist knot `K_p`; only extremal curve data exists for these.
    Twist(i64),
    Whitehead,
    Borromean,
}

impl LinkKind {
    pub fn components(&self) -> usize {
        match self {
            LinkKind::Unknot | LinkKind::Twist(_) => 1,
            LinkKind::Whitehead => 2,
            LinkKind::Borromean => 3,
        }
    }

    /// Whether an explicit colored HOMFLYPT formula is available.
    pub fn has_full_homfly(&self) -> bool {
        !matches!(self, LinkKind::Twist(_))
    }

    pub fn name(&self) -> String {
        match self {
            LinkKind::Unknot => "unknot".into(),
            LinkKind::Twist(p) => format!("twist({})", p),
            LinkKind::Whitehead => "whitehead".into(),
            LinkKind::Borromean => "borromean".into(),
        }
    }
}

/// A link together with per-component framings and colors.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FramedLinkSpec {
    pub link: LinkKind,
    pub framings: Vec<i64>,
    pub colors: Vec<u32>,
}

impl FramedLinkSpec {
    pub fn new(link: LinkKind, framings: Vec<i64>, colors: Vec<u32>) -> Result<Self> {
        let n = link.components();
        if framings.len() != n || colors.len() != n {
            return Err(Error::InvalidSpec(format!(
                "{} has {} component(s); got {} framing(s) and {} color(s)",
                link.name(),
                n,
                framings.len(),
                colors.len()
            )));
        }
        Ok(FramedLinkSpec {
            link,
            framings,
            colors,
        })
    }
}

/// `(-1)^k` by parity.
pub(crate) fn sign_pow(k: i64) -> i64 {
    if k.rem_euclid(2) == 0 {
        1
    } else {
        -1
    }
}

/// Framing factor `(-1)^(Σ r τ) q^(Σ r(r-1)τ/2)`.
///
/// The sign uses `r τ` rather than `r |τ|`; the two have the same parity.
pub fn framing_factor(colors: &[u32], framings: &[i64]) -> LaurentPoly {
    assert_eq!(
        colors.len(),
        framings.len(),
        "colors and framings differ in length"
    );
    let mut sign_exp = 0i64;
    let mut dq = 0i64;
    for (&r, &t) in colors.iter().zip(framings) {
        let r = r as i64;
        sign_exp += r * t;
        dq += r * (r - 1) * t;
    }
    LaurentPoly::q_pow(dq).scale_int(sign_pow(sign_exp))
}

pub fn apply_framing(h: &QFrac, colors: &[u32], framings: &[i64]) -> QFrac {
    h.mul_poly(&framing_factor(colors, framings))
}

fn brace_a_desc(n: i64, i: u32) -> LaurentPoly {
    qsym_falling(SymbolKind::BraceA, n, i, true)
}

/// `{r+i-1;a}_{r-i} / {r-i}!`, the per-component factor of the link sums.
fn component_factor(r: u32, i: u32) -> QFrac {
    QFrac::from_poly(brace_a_desc(r as i64 + i as i64 - 1, r - i)).div_brace_factorial(r - i)
}

/// `H_r(U) = {r-1;a}_r / {r}!`.
pub fn homfly_unknot(r: u32) -> QFrac {
    component_factor(r, 0)
}

/// Colored HOMFLYPT invariant of the Whitehead link, summed term by term.
pub fn homfly_whitehead(r1: u32, r2: u32) -> QFrac {
    let mut total = QFrac::zero();
    for i in 0..=r1.min(r2) {
        let ii = i as i64;
        // a^(i/2) q^(i(i-1)/4); the 1/{i}! and {i}! factors cancel
        let monomial = LaurentPoly::monomial(ii * (ii - 1) / 2, ii, crate::laurent::rat(1));
        let tail = &(&monomial * &brace_a_desc(2 * ii - 1, 2 * i)) * &brace_a_desc(ii - 2, i);
        let term = component_factor(r1, i)
            .mul(&component_factor(r2, i))
            .mul_poly(&tail.scale_int(sign_pow(ii)));
        total = total.add(&term);
    }
    total.reduce()
}

/// Colored HOMFLYPT invariant of the Borromean rings.
pub fn homfly_borromean(r1: u32, r2: u32, r3: u32) -> QFrac {
    let mut total = QFrac::zero();
    for i in 0..=r1.min(r2).min(r3) {
        let ii = i as i64;
        let tail = &(&brace_a_desc(2 * ii - 1, 2 * i) * &brace_a_desc(ii - 2, i))
            * &qsym_falling(SymbolKind::Brace, ii, i, true);
        let term = component_factor(r1, i)
            .mul(&component_factor(r2, i))
            .mul(&component_factor(r3, i))
            .mul_poly(&tail.scale_int(sign_pow(ii)));
        total = total.add(&term);
    }
    total.reduce()
}

/// Unframed invariant for a link with an explicit formula.
pub fn homfly(link: LinkKind, colors: &[u32]) -> Result<QFrac> {
    if colors.len() != link.components() {
        return Err(Error::InvalidSpec(format!(
            "{} needs {} color(s)",
            link.name(),
            link.components()
        )));
    }
    match link {
        LinkKind::Unknot => Ok(homfly_unknot(colors[0])),
        LinkKind::Whitehead => Ok(homfly_whitehead(colors[0], colors[1])),
        LinkKind::Borromean => Ok(homfly_borromean(colors[0], colors[1], colors[2])),
        LinkKind::Twist(p) => Err(Error::UnsupportedKnotKind(format!(
            "twist({}) has no explicit colored HOMFLYPT formula",
            p
        ))),
    }
}

/// Framed invariant `𝓗` of a [`FramedLinkSpec`].
pub fn framed_homfly(spec: &FramedLinkSpec) -> Result<QFrac> {
    let h = homfly(spec.link, &spec.colors)?;
    Ok(apply_framing(&h, &spec.colors, &spec.framings))
}

/// Checks the first-order q-difference equation of the framed unknot,
/// `(-1)^τ (q^(n+1) - 1) 𝓗_{n+1} = (a^(1/2) q^(n+1/2) - a^(-1/2) q^(1/2)) q^(nτ) 𝓗_n`,
/// for every `n < n_max`.
pub fn check_unknot_recursion(tau: i64, n_max: u32) -> Result<()> {
    let framed = |n: u32| apply_framing(&homfly_unknot(n), &[n], &[tau]);
    let mut h_n = framed(0);
    for n in 0..n_max {
        let h_next = framed(n + 1);
        let nn = n as i64;
        let step = &LaurentPoly::q_pow(2 * nn + 2) - &LaurentPoly::one();
        let lhs = h_next.mul_poly(&step.scale_int(sign_pow(tau)));
        let coeff =
            LaurentPoly::from_int_terms(&[(2 * nn + 1, 1, 1), (1, -1, -1)]).shift(2 * nn * tau, 0);
        let rhs = h_n.mul_poly(&coeff);
        if !lhs.sub(&rhs).is_zero() {
            return Err(Error::RecursionViolated(n));
        }
        h_n = h_next;
    }
    Ok(())
}
