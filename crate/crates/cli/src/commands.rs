use std::collections::BTreeMap;

use framed_bps::closed::{b_extremal_twist, b_unknot, Sign};
use framed_bps::curve::{
    bps_via_lagrange, bps_via_newton, lagrange_log_y, make_curve, normalize, solve_w, CurveKind,
    KnotKind,
};
use framed_bps::links::framed_homfly;
use framed_bps::ov::ov_table as compute_ov_table;
use framed_bps::{FramedLinkSpec, LaurentPoly, LinkKind, QFrac};
use num_bigint::BigInt;
use num_traits::Zero;
use serde::Serialize;

use crate::render::{columns, csv, half, ov_ascii};
use crate::{CurveArg, Failure, Format, KnotArg, LinkArg, LinkOpts, Source};

fn parse_list<T: std::str::FromStr>(flag: &str, s: &str) -> Result<Vec<T>, Failure> {
    s.split(',')
        .map(|x| {
            x.trim()
                .parse()
                .map_err(|_| Failure::Usage(format!("--{}: cannot parse {:?}", flag, x)))
        })
        .collect()
}

fn link_kind(link: LinkArg, p: Option<i64>) -> Result<LinkKind, Failure> {
    Ok(match link {
        LinkArg::Unknot => LinkKind::Unknot,
        LinkArg::Whitehead => LinkKind::Whitehead,
        LinkArg::Borromean => LinkKind::Borromean,
        LinkArg::Twist => {
            LinkKind::Twist(p.ok_or_else(|| Failure::Usage("--link twist needs --p".into()))?)
        }
    })
}

fn knot_kind(knot: KnotArg, p: Option<i64>) -> Result<KnotKind, Failure> {
    Ok(match knot {
        KnotArg::Unknot => KnotKind::Unknot,
        KnotArg::Twist => {
            KnotKind::Twist(p.ok_or_else(|| Failure::Usage("--knot twist needs --p".into()))?)
        }
    })
}

fn spec(o: &LinkOpts) -> Result<FramedLinkSpec, Failure> {
    let link = link_kind(o.link, o.p)?;
    let colors = parse_list("colors", &o.colors)?;
    let framings = parse_list("framing", &o.framing)?;
    Ok(FramedLinkSpec::new(link, framings, colors)?)
}

fn join<T: ToString>(v: &[T]) -> String {
    v.iter().map(T::to_string).collect::<Vec<_>>().join(",")
}

/// Splits the cyclotomic denominator into braces `{k}` where possible.
/// Returns the adjusted numerator, the braces and any leftover `Φ_e^m`.
fn brace_form(h: &QFrac) -> (LaurentPoly, Vec<u32>, BTreeMap<u32, u32>) {
    let mut den = h.denominator_factors().clone();
    let mut braces = Vec::new();
    let mut leftover = BTreeMap::new();
    while let Some((&e, _)) = den.iter().next_back() {
        let divs: Vec<u32> = (1..=e).filter(|d| e % d == 0).collect();
        if divs.iter().all(|d| den.get(d).copied().unwrap_or(0) > 0) {
            for d in divs {
                let m = den.get_mut(&d).unwrap();
                *m -= 1;
                if *m == 0 {
                    den.remove(&d);
                }
            }
            braces.push(e);
        } else {
            leftover.insert(e, den.remove(&e).unwrap());
        }
    }
    let shift: i64 = braces.iter().map(|&k| k as i64).sum();
    (h.numerator().shift(-shift, 0), braces, leftover)
}

#[derive(Serialize)]
struct Term {
    q2: i64,
    a2: i64,
    c: String,
}

#[derive(Serialize)]
struct Cyclo {
    e: u32,
    m: u32,
}

#[derive(Serialize)]
struct HomflyRecord {
    link: String,
    colors: Vec<u32>,
    framings: Vec<i64>,
    numerator: Vec<Term>,
    braces: Vec<u32>,
    cyclotomic: Vec<Cyclo>,
}

fn sorted_terms(p: &LaurentPoly) -> Vec<Term> {
    let mut terms: Vec<Term> = p
        .terms()
        .map(|(e, c)| Term {
            q2: e.dq,
            a2: e.da,
            c: c.to_string(),
        })
        .collect();
    terms.sort_by(|x, y| (y.a2, y.q2).cmp(&(x.a2, x.q2)));
    terms
}

fn json<T: Serialize>(v: &T) -> String {
    serde_json::to_string_pretty(v).expect("serializable") + "\n"
}

pub fn homfly(o: &LinkOpts) -> Result<String, Failure> {
    let s = spec(o)?;
    let h = framed_homfly(&s)?.reduce();
    let (num, braces, leftover) = brace_form(&h);
    let mut den_parts: Vec<String> = braces.iter().map(|k| format!("{{{}}}", k)).collect();
    for (e, m) in &leftover {
        den_parts.push(if *m == 1 {
            format!("Phi_{}(q)", e)
        } else {
            format!("Phi_{}(q)^{}", e, m)
        });
    }
    Ok(match o.format {
        Format::Ascii => {
            let mut out = format!(
                "{} colors=({}) framings=({})\n",
                s.link.name(),
                join(&s.colors),
                join(&s.framings)
            );
            if den_parts.is_empty() {
                out += &format!("H = {}\n", num);
            } else {
                out += &format!("H = ({}) / {}\n", num, den_parts.join(" "));
            }
            out
        }
        Format::Json => json(&HomflyRecord {
            link: s.link.name(),
            colors: s.colors.clone(),
            framings: s.framings.clone(),
            numerator: sorted_terms(&num),
            braces,
            cyclotomic: leftover.into_iter().map(|(e, m)| Cyclo { e, m }).collect(),
        }),
        Format::Csv => {
            let rows: Vec<Vec<String>> = sorted_terms(&num)
                .into_iter()
                .map(|t| vec![t.q2.to_string(), t.a2.to_string(), t.c])
                .collect();
            format!("# denominator: {}\n", den_parts.join(" ")) + &csv(&["q2", "a2", "c"], &rows)
        }
    })
}

pub fn ov_table(o: &LinkOpts) -> Result<String, Failure> {
    let s = spec(o)?;
    if s.colors.iter().all(|&c| c == 0) {
        return Err(Failure::Usage("color vector is zero".into()));
    }
    let t = compute_ov_table(s.link, &s.colors, &s.framings)?;
    Ok(match o.format {
        Format::Ascii => {
            let (e1, e2) = t.epsilon();
            format!(
                "N_(({})),i,j for {} framings=({}) epsilon=({},{})\n",
                join(&s.colors),
                s.link.name(),
                join(&s.framings),
                e1,
                e2
            ) + &ov_ascii(&t.entries)
        }
        Format::Json => json(&t.to_record()),
        Format::Csv => {
            let rows: Vec<Vec<String>> = t
                .entries
                .iter()
                .map(|(&(i2, j2), n)| vec![i2.to_string(), j2.to_string(), n.to_string()])
                .collect();
            csv(&["i2", "j2", "N"], &rows)
        }
    })
}

#[derive(Serialize)]
struct BpsRow {
    r: u32,
    /// Doubled a-exponent for the unknot, `"+"`/`"-"` for extremal rows.
    key: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    curve: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    closed: Option<String>,
    #[serde(rename = "match", skip_serializing_if = "Option::is_none")]
    agree: Option<bool>,
}

#[derive(Serialize)]
struct BpsRecord {
    knot: String,
    framing: i64,
    rows: Vec<BpsRow>,
}

fn curve_bps(
    knot: KnotKind,
    kind: CurveKind,
    tau: i64,
    r_max: u32,
) -> Result<BTreeMap<(u32, i64), BigInt>, Failure> {
    let c = make_curve(knot, kind, tau)?;
    let lag = bps_via_lagrange(&c, r_max)?;
    let newt = bps_via_newton(&c, r_max)?;
    if lag != newt {
        return Err(Failure::Compute(
            "lagrange and newton solvers disagree".into(),
        ));
    }
    Ok(lag)
}

pub fn bps(
    knot: KnotArg,
    p: Option<i64>,
    tau: i64,
    r_max: u32,
    source: Source,
    format: Format,
) -> Result<String, Failure> {
    let kind = knot_kind(knot, p)?;
    let want_curve = source != Source::Closed;
    let want_closed = source != Source::Curve;
    let mut rows = Vec::new();
    let get = |m: &BTreeMap<(u32, i64), BigInt>, k: (u32, i64)| {
        m.get(&k).cloned().unwrap_or_else(BigInt::zero)
    };
    match kind {
        KnotKind::Unknot => {
            let curve = if want_curve && r_max > 0 {
                Some(curve_bps(kind, CurveKind::Full, tau, r_max)?)
            } else {
                None
            };
            for r in 1..=r_max {
                for m in (-(r as i64)..=r as i64).rev().step_by(2) {
                    let c = curve.as_ref().map(|b| get(b, (r, m)));
                    let d = if want_closed {
                        Some(b_unknot(r as u64, m, tau)?)
                    } else {
                        None
                    };
                    rows.push((r, m.to_string(), c, d));
                }
            }
        }
        KnotKind::Twist(pp) => {
            for (ck, sign, label) in [
                (CurveKind::ExtremalPlus, Sign::Plus, "+"),
                (CurveKind::ExtremalMinus, Sign::Minus, "-"),
            ] {
                let curve = if want_curve && r_max > 0 {
                    Some(curve_bps(kind, ck, tau, r_max)?)
                } else {
                    None
                };
                for r in 1..=r_max {
                    let c = curve.as_ref().map(|b| get(b, (r, 0)));
                    let d = if want_closed {
                        Some(b_extremal_twist(r as u64, sign, pp, tau)?)
                    } else {
                        None
                    };
                    rows.push((r, label.to_string(), c, d));
                }
            }
            rows.sort_by_key(|row| row.0);
        }
    }
    let rows: Vec<BpsRow> = rows
        .into_iter()
        .map(|(r, key, c, d)| BpsRow {
            r,
            key,
            agree: match (&c, &d) {
                (Some(x), Some(y)) => Some(x == y),
                _ => None,
            },
            curve: c.map(|v| v.to_string()),
            closed: d.map(|v| v.to_string()),
        })
        .collect();
    let mismatch = rows.iter().any(|r| r.agree == Some(false));

    let key_header = if matches!(kind, KnotKind::Unknot) {
        "a-exp"
    } else {
        "sign"
    };
    let mut header = vec!["r", key_header];
    if want_curve {
        header.push("curve");
    }
    if want_closed {
        header.push("closed");
    }
    if source == Source::Both {
        header.push("match");
    }
    let cells: Vec<Vec<String>> = rows
        .iter()
        .map(|row| {
            let key = match (format, kind) {
                (Format::Ascii, KnotKind::Unknot) => half(row.key.parse().unwrap()),
                _ => row.key.clone(),
            };
            let mut v = vec![row.r.to_string(), key];
            v.extend(row.curve.clone());
            v.extend(row.closed.clone());
            v.extend(row.agree.map(|b| b.to_string()));
            v
        })
        .collect();
    let knot_name = match kind {
        KnotKind::Unknot => "unknot".to_string(),
        KnotKind::Twist(p) => format!("twist({})", p),
    };
    let out = match format {
        Format::Ascii => {
            format!("b for {} framing={}\n", knot_name, tau) + &columns(&header, &cells)
        }
        Format::Json => json(&BpsRecord {
            knot: knot_name,
            framing: tau,
            rows,
        }),
        Format::Csv => {
            if matches!(kind, KnotKind::Unknot) {
                header[1] = "m2";
            }
            csv(&header, &cells)
        }
    };
    if mismatch {
        Err(Failure::Mismatch(out))
    } else {
        Ok(out)
    }
}

#[derive(Serialize)]
struct SeriesRecord {
    knot: String,
    framing: i64,
    curve: String,
    order: u32,
    y2: Vec<Vec<Term>>,
    gamma: Vec<GammaTerm>,
}

#[derive(Serialize)]
struct GammaTerm {
    r: u32,
    a2: i64,
    value: String,
}

pub fn series(
    knot: KnotArg,
    p: Option<i64>,
    tau: i64,
    curve: CurveArg,
    order: u32,
    format: Format,
) -> Result<String, Failure> {
    let kind = knot_kind(knot, p)?;
    let ck = match curve {
        CurveArg::Full => CurveKind::Full,
        CurveArg::Plus => CurveKind::ExtremalPlus,
        CurveArg::Minus => CurveKind::ExtremalMinus,
    };
    let c = make_curve(kind, ck, tau)?;
    let w = solve_w(&c, order as usize + 1)?;
    let nf = normalize(&c, order.max(1) as usize)?;
    let gamma = lagrange_log_y(&nf, order);
    let knot_name = match kind {
        KnotKind::Unknot => "unknot".to_string(),
        KnotKind::Twist(p) => format!("twist({})", p),
    };
    let curve_name = format!("{:?}", curve).to_lowercase();
    let y2: Vec<LaurentPoly> = (0..=order as usize).map(|n| w.coeff(n)).collect();
    Ok(match format {
        Format::Ascii => {
            let mut out = format!(
                "{} framing={} curve={}: {}\n",
                knot_name, tau, curve_name, c.source
            );
            for (n, coeff) in y2.iter().enumerate() {
                out += &format!("y^2 [x^{}] = {}\n", n, coeff);
            }
            for r in 1..=order {
                let level = LaurentPoly::from_terms(
                    gamma
                        .coeffs
                        .range((r, i64::MIN)..=(r, i64::MAX))
                        .map(|(&(_, m), v)| (0, m, v.clone())),
                );
                out += &format!("gamma [x^{}] = {}\n", r, level);
            }
            out
        }
        Format::Json => json(&SeriesRecord {
            knot: knot_name,
            framing: tau,
            curve: curve_name,
            order,
            y2: y2.iter().map(sorted_terms).collect(),
            gamma: gamma
                .coeffs
                .iter()
                .map(|(&(r, a2), v)| GammaTerm {
                    r,
                    a2,
                    value: v.to_string(),
                })
                .collect(),
        }),
        Format::Csv => {
            let mut rows = Vec::new();
            for (n, coeff) in y2.iter().enumerate() {
                for t in sorted_terms(coeff) {
                    rows.push(vec![
                        "y2".into(),
                        n.to_string(),
                        t.q2.to_string(),
                        t.a2.to_string(),
                        t.c,
                    ]);
                }
            }
            for (&(r, a2), v) in &gamma.coeffs {
                rows.push(vec![
                    "gamma".into(),
                    r.to_string(),
                    "0".into(),
                    a2.to_string(),
                    v.to_string(),
                ]);
            }
            csv(&["series", "n", "q2", "a2", "c"], &rows)
        }
    })
}
