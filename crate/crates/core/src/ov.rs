//! Connected invariants, p-polynomials, Ooguri-Vafa tables, BPS lists and
//! genus-0 disk counts of framed links.

use std::collections::{BTreeMap, HashMap};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::closed::{divisors, mobius};
use crate::error::{Error, Result};
use crate::laurent::LaurentPoly;
use crate::links::{framed_homfly, FramedLinkSpec, LinkKind};
use crate::qsym::brace;
use crate::ratio::QFrac;
use crate::ring::Ring;

/// A multiset of nonzero color vectors, stored as `(part, multiplicity)`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct VectorPartition {
    pub parts: Vec<(Vec<u32>, u32)>,
}

impl VectorPartition {
    pub fn total(&self) -> Vec<u32> {
        let dim = self.parts.first().map_or(0, |(v, _)| v.len());
        let mut out = vec![0; dim];
        for (v, k) in &self.parts {
            for (o, x) in out.iter_mut().zip(v) {
                *o += x * k;
            }
        }
        out
    }

    pub fn length(&self) -> u32 {
        self.parts.iter().map(|(_, k)| k).sum()
    }

    /// `Π k!` over multiplicities.
    pub fn aut_size(&self) -> BigInt {
        self.parts
            .iter()
            .map(|&(_, k)| (1..=k).map(BigInt::from).product::<BigInt>())
            .product()
    }
}

/// Nonzero vectors bounded componentwise by `r`, in a fixed order.
fn bounded_vectors(r: &[u32]) -> Vec<Vec<u32>> {
    let mut out = vec![Vec::new()];
    for &ri in r {
        out = out
            .into_iter()
            .flat_map(|v| {
                (0..=ri).map(move |x| {
                    let mut w = v.clone();
                    w.push(x);
                    w
                })
            })
            .collect();
    }
    out.retain(|v| v.iter().any(|&x| x > 0));
    out
}

fn fits(part: &[u32], rest: &[u32], times: u32) -> bool {
    part.iter().zip(rest).all(|(p, r)| p * times <= *r)
}

/// All multisets of nonzero vectors summing to `r`, each exactly once.
pub fn enumerate_vector_partitions(r: &[u32]) -> Vec<VectorPartition> {
    fn go(
        cands: &[Vec<u32>],
        start: usize,
        rest: &mut Vec<u32>,
        acc: &mut Vec<(Vec<u32>, u32)>,
        out: &mut Vec<VectorPartition>,
    ) {
        if rest.iter().all(|&x| x == 0) {
            out.push(VectorPartition { parts: acc.clone() });
            return;
        }
        for idx in start..cands.len() {
            let v = &cands[idx];
            let mut k = 1;
            while fits(v, rest, k) {
                for (r, x) in rest.iter_mut().zip(v) {
                    *r -= x * k;
                }
                acc.push((v.clone(), k));
                go(cands, idx + 1, rest, acc, out);
                acc.pop();
                for (r, x) in rest.iter_mut().zip(v) {
                    *r += x * k;
                }
                k += 1;
            }
        }
    }
    if r.iter().all(|&x| x == 0) {
        return Vec::new();
    }
    let cands = bounded_vectors(r);
    let mut out = Vec::new();
    go(&cands, 0, &mut r.to_vec(), &mut Vec::new(), &mut out);
    out
}

/// Memoized framed invariants `𝓗` and connected invariants `F` for one
/// framed link.
pub struct OvEngine {
    link: LinkKind,
    framings: Vec<i64>,
    h: HashMap<Vec<u32>, QFrac>,
    f: HashMap<Vec<u32>, QFrac>,
}

impl OvEngine {
    pub fn new(link: LinkKind, framings: &[i64]) -> Result<Self> {
        if !link.has_full_homfly() {
            return Err(Error::UnsupportedKnotKind(format!(
                "{} has no explicit colored HOMFLYPT formula",
                link.name()
            )));
        }
        if framings.len() != link.components() {
            return Err(Error::InvalidSpec(format!(
                "{} needs {} framing(s)",
                link.name(),
                link.components()
            )));
        }
        Ok(OvEngine {
            link,
            framings: framings.to_vec(),
            h: HashMap::new(),
            f: HashMap::new(),
        })
    }

    pub fn link(&self) -> LinkKind {
        self.link
    }

    pub fn framings(&self) -> &[i64] {
        &self.framings
    }

    fn check_colors(&self, r: &[u32]) -> Result<()> {
        if r.len() != self.framings.len() {
            return Err(Error::InvalidSpec(format!(
                "{} needs {} color(s)",
                self.link.name(),
                self.framings.len()
            )));
        }
        if r.iter().all(|&x| x == 0) {
            return Err(Error::ZeroColorVector);
        }
        Ok(())
    }

    /// Framed invariant `𝓗_r`; `𝓗_0 = 1`.
    pub fn framed_h(&mut self, r: &[u32]) -> Result<QFrac> {
        if let Some(v) = self.h.get(r) {
            return Ok(v.clone());
        }
        let spec = FramedLinkSpec::new(self.link, self.framings.clone(), r.to_vec())?;
        let v = framed_homfly(&spec)?;
        self.h.insert(r.to_vec(), v.clone());
        Ok(v)
    }

    /// `F_r = Σ_𝔘 (-1)^(l-1) (l-1)!/|Aut 𝔘| Π 𝓗_v`.
    pub fn connected_f(&mut self, r: &[u32]) -> Result<QFrac> {
        self.check_colors(r)?;
        if let Some(v) = self.f.get(r) {
            return Ok(v.clone());
        }
        let mut total = QFrac::zero();
        for part in enumerate_vector_partitions(r) {
            let l = part.length();
            let fact: BigInt = (1..l).map(BigInt::from).product();
            let mut c = BigRational::new(fact, part.aut_size());
            if l % 2 == 0 {
                c = -c;
            }
            let mut prod = QFrac::one();
            for (v, k) in &part.parts {
                let h = self.framed_h(v)?;
                for _ in 0..*k {
                    prod = prod.mul(&h);
                }
            }
            total = total.add(&prod.scale(&c));
        }
        let total = total.reduce();
        self.f.insert(r.to_vec(), total.clone());
        Ok(total)
    }

    /// `F_r` read off from `log(1 + Σ 𝓗_n x^n)` through the recursion
    /// `|n| F_n = |n| 𝓗_n - Σ_{0 < m < n} |m| F_m 𝓗_(n-m)`.
    pub fn connected_f_via_log(&mut self, r: &[u32]) -> Result<QFrac> {
        self.check_colors(r)?;
        let mut lattice = bounded_vectors(r);
        lattice.sort_by_key(|v| v.iter().sum::<u32>());
        let mut f: HashMap<Vec<u32>, QFrac> = HashMap::new();
        for n in &lattice {
            let size = n.iter().sum::<u32>() as i64;
            let mut acc = self
                .framed_h(n)?
                .scale(&BigRational::from_integer(size.into()));
            for m in &lattice {
                if m == n || !m.iter().zip(n).all(|(a, b)| a <= b) {
                    continue;
                }
                let rest: Vec<u32> = n.iter().zip(m).map(|(a, b)| a - b).collect();
                let m_size = m.iter().sum::<u32>() as i64;
                let term = f[m].mul(&self.framed_h(&rest)?);
                acc = acc.sub(&term.scale(&BigRational::from_integer(m_size.into())));
            }
            let v = acc.scale(&BigRational::new(One::one(), size.into()));
            f.insert(n.clone(), v);
        }
        Ok(f.remove(r).expect("target is in the lattice").reduce())
    }

    /// `Σ_{d | r} μ(d)/d Ψ_d(F_{r/d})`, with `d | r` meaning `d` divides
    /// every component.
    pub fn mobius_sum(&mut self, r: &[u32]) -> Result<QFrac> {
        self.check_colors(r)?;
        let g = r.iter().fold(0u32, |g, &x| g.gcd(&x));
        let mut total = QFrac::zero();
        for d in divisors(g as u64) {
            let mu = mobius(d);
            if mu == 0 {
                continue;
            }
            let d = d as u32;
            let sub: Vec<u32> = r.iter().map(|x| x / d).collect();
            let term = self.connected_f(&sub)?.adams(d);
            total = total.add(&term.scale(&BigRational::new(mu.into(), d.into())));
        }
        Ok(total.reduce())
    }

    /// `p_r = {1}^(2-k) Σ_{d|r} μ(d)/d Ψ_d(F_{r/d})`, `k` the number of
    /// nonzero colors. Fails with `InexactDivision` if the result is not
    /// a Laurent polynomial.
    pub fn p_poly(&mut self, r: &[u32]) -> Result<LaurentPoly> {
        let k = r.iter().filter(|&&x| x > 0).count() as i64;
        let mut s = self.mobius_sum(r)?;
        for _ in 0..(2 - k).max(0) {
            s = s.mul_poly(&brace(1));
        }
        for _ in 0..(k - 2).max(0) {
            s = s.div_brace(1);
        }
        s.reduce().to_laurent()
    }

    pub fn ov_table(&mut self, r: &[u32]) -> Result<OVTable> {
        let p = self.p_poly(r)?;
        OVTable::from_p_poly(self.link, &self.framings, r, p)
    }
}

/// `Σ_{d|r} μ(d)/d Ψ_d(F_{r/d})` for the framed unknot.
pub fn f_knot(tau: i64, r: u32) -> Result<QFrac> {
    OvEngine::new(LinkKind::Unknot, &[tau])?.mobius_sum(&[r])
}

pub fn connected_f(link: LinkKind, framings: &[i64], r: &[u32]) -> Result<QFrac> {
    OvEngine::new(link, framings)?.connected_f(r)
}

pub fn connected_f_via_log(link: LinkKind, framings: &[i64], r: &[u32]) -> Result<QFrac> {
    OvEngine::new(link, framings)?.connected_f_via_log(r)
}

pub fn p_poly(link: LinkKind, r: &[u32], framings: &[i64]) -> Result<LaurentPoly> {
    OvEngine::new(link, framings)?.p_poly(r)
}

pub fn ov_table(link: LinkKind, r: &[u32], framings: &[i64]) -> Result<OVTable> {
    OvEngine::new(link, framings)?.ov_table(r)
}

/// Integer Ooguri-Vafa invariants `N_{r,i,j}` stored at doubled exponents
/// `(2i, 2j)`; zero entries are not stored.
#[derive(Clone, Debug, PartialEq)]
pub struct OVTable {
    pub link: LinkKind,
    pub colors: Vec<u32>,
    pub framings: Vec<i64>,
    pub k: usize,
    pub entries: BTreeMap<(i64, i64), BigInt>,
    pub p_poly: LaurentPoly,
}

impl OVTable {
    pub fn from_p_poly(
        link: LinkKind,
        framings: &[i64],
        colors: &[u32],
        p: LaurentPoly,
    ) -> Result<OVTable> {
        let mut entries = BTreeMap::new();
        for (e, c) in p.terms() {
            if !c.is_integer() {
                return Err(Error::NonIntegerInvariant {
                    i2: e.da,
                    j2: e.dq,
                    value: c.to_string(),
                });
            }
            entries.insert((e.da, e.dq), c.to_integer());
        }
        Ok(OVTable {
            link,
            colors: colors.to_vec(),
            framings: framings.to_vec(),
            k: colors.iter().filter(|&&x| x > 0).count(),
            entries,
            p_poly: p,
        })
    }

    /// `(ε₁, ε₂) = (Σr mod 2, (Σr + k) mod 2)`.
    pub fn epsilon(&self) -> (i64, i64) {
        let s: i64 = self.colors.iter().map(|&x| x as i64).sum();
        (s.rem_euclid(2), (s + self.k as i64).rem_euclid(2))
    }

    pub fn entry(&self, i2: i64, j2: i64) -> BigInt {
        self.entries
            .get(&(i2, j2))
            .cloned()
            .unwrap_or_else(BigInt::zero)
    }

    pub fn to_record(&self) -> OVTableRecord {
        let (e1, e2) = self.epsilon();
        OVTableRecord {
            link: self.link.name(),
            framings: self.framings.clone(),
            colors: self.colors.clone(),
            epsilon: [e1, e2],
            entries: self
                .entries
                .iter()
                .map(|(&(i2, j2), n)| OVEntry {
                    i2,
                    j2,
                    n: n.clone(),
                })
                .collect(),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct OVEntry {
    pub i2: i64,
    pub j2: i64,
    #[serde(rename = "N", with = "bigint_as_number")]
    pub n: BigInt,
}

/// Machine-readable form of an [`OVTable`].
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct OVTableRecord {
    pub link: String,
    pub framings: Vec<i64>,
    pub colors: Vec<u32>,
    pub epsilon: [i64; 2],
    pub entries: Vec<OVEntry>,
}

mod bigint_as_number {
    use num_bigint::BigInt;
    use num_traits::ToPrimitive;
    use serde::{de::Error, Deserialize, Deserializer, Serializer};

    pub fn serialize<S: Serializer>(v: &BigInt, s: S) -> Result<S::Ok, S::Error> {
        match v.to_i64() {
            Some(x) => s.serialize_i64(x),
            None => s.serialize_str(&v.to_string()),
        }
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<BigInt, D::Error> {
        #[derive(Deserialize)]
        #[serde(untagged)]
        enum Num {
            Int(i64),
            Str(String),
        }
        match Num::deserialize(d)? {
            Num::Int(x) => Ok(BigInt::from(x)),
            Num::Str(s) => s.parse().map_err(D::Error::custom),
        }
    }
}

/// Row sums `b_{r,i} = Σ_j N_{r,i,j}` keyed by doubled a-exponent.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BpsList {
    pub colors: Vec<u32>,
    pub framings: Vec<i64>,
    pub values: BTreeMap<i64, BigInt>,
}

/// Row sums of a table, checked against the coefficients of `p(q = 1)`.
pub fn bps_list(table: &OVTable) -> Result<BpsList> {
    let mut values: BTreeMap<i64, BigInt> = BTreeMap::new();
    for (&(i2, _), n) in &table.entries {
        *values.entry(i2).or_insert_with(BigInt::zero) += n;
    }
    values.retain(|_, v| !v.is_zero());
    let at_one = table.p_poly.specialize_q1();
    let from_p: BTreeMap<i64, BigInt> = at_one
        .terms()
        .map(|(e, c)| (e.da, c.to_integer()))
        .collect();
    if from_p != values {
        return Err(Error::Inconsistent(
            "row sums differ from p at q = 1".into(),
        ));
    }
    Ok(BpsList {
        colors: table.colors.clone(),
        framings: table.framings.clone(),
        values,
    })
}

/// Whether every nonzero entry sits at doubled exponents of parity `(ε₁, ε₂)`.
pub fn strong_integrality_check(table: &OVTable) -> bool {
    let (e1, e2) = table.epsilon();
    table
        .entries
        .keys()
        .all(|&(i2, j2)| i2.rem_euclid(2) == e1 && j2.rem_euclid(2) == e2)
}

fn divisor_transform(
    data: &BTreeMap<(u32, i64), BigRational>,
    r: u32,
    weight: impl Fn(u64) -> BigRational,
) -> BTreeMap<i64, BigRational> {
    let mut out: BTreeMap<i64, BigRational> = BTreeMap::new();
    for d in divisors(r as u64) {
        let w = weight(d);
        if Zero::is_zero(&w) {
            continue;
        }
        let level = r / d as u32;
        for (&(_, m), v) in data.range((level, i64::MIN)..=(level, i64::MAX)) {
            let slot = out
                .entry(m * d as i64)
                .or_insert_with(<BigRational as Zero>::zero);
            *slot += v * &w;
        }
    }
    out.retain(|_, v| !Zero::is_zero(v));
    out
}

/// Genus-0 disk counts `K_{r,0,i} = Σ_{d | r, d | i} b_{r/d, i/d} / d^2`,
/// with `b` keyed by `(level, doubled a-exponent)` for every level dividing `r`.
pub fn disk_counts(b: &BTreeMap<(u32, i64), BigRational>, r: u32) -> BTreeMap<i64, BigRational> {
    divisor_transform(b, r, |d| BigRational::new(One::one(), BigInt::from(d * d)))
}

/// Inverse of [`disk_counts`]: `b_{r,i} = Σ_{d | r, d | i} μ(d)/d^2 K_{r/d, i/d}`.
pub fn bps_from_disk_counts(
    k: &BTreeMap<(u32, i64), BigRational>,
    r: u32,
) -> BTreeMap<i64, BigRational> {
    divisor_transform(k, r, |d| {
        BigRational::new(mobius(d).into(), BigInt::from(d * d))
    })
}
