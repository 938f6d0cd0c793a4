//! Verification suites; each case prints one `[PASS]`/`[FAIL]` line.

use framed_bps::closed::integrality_statistic;
use framed_bps::golden;
use framed_bps::links::check_unknot_recursion;
use framed_bps::ov::{ov_table, strong_integrality_check};
use framed_bps::LinkKind;

use crate::{Failure, Suite};

struct Report {
    text: String,
    failures: usize,
}

impl Report {
    fn new() -> Self {
        Report {
            text: String::new(),
            failures: 0,
        }
    }

    fn case(&mut self, name: &str, outcome: Result<String, String>) {
        match outcome {
            Ok(detail) => self.text += &format!("[PASS] {}: {}\n", name, detail),
            Err(detail) => {
                self.failures += 1;
                self.text += &format!("[FAIL] {}: {}\n", name, detail);
            }
        }
    }

    fn finish(mut self, total: usize) -> Result<String, Failure> {
        self.text += &format!("{} of {} cases passed\n", total - self.failures, total);
        if self.failures == 0 {
            Ok(self.text)
        } else {
            Err(Failure::Mismatch(self.text))
        }
    }
}

fn parse_range(s: &str) -> Result<(i64, i64), Failure> {
    let bad = || Failure::Usage(format!("--t-range: expected lo:hi, got {:?}", s));
    let (lo, hi) = s.split_once(':').ok_or_else(bad)?;
    let lo: i64 = lo.trim().parse().map_err(|_| bad())?;
    let hi: i64 = hi.trim().parse().map_err(|_| bad())?;
    if lo > hi {
        return Err(bad());
    }
    Ok((lo, hi))
}

fn tables() -> Result<String, Failure> {
    let mut rep = Report::new();
    let all = golden::all();
    for g in &all {
        let outcome = match ov_table(g.link, &g.colors, &g.framings) {
            Err(e) => Err(e.to_string()),
            Ok(t) if t.entries != g.entries => {
                Err("entries differ from the reference table".into())
            }
            Ok(t) if !strong_integrality_check(&t) => Err("parity check fails".into()),
            Ok(t) => Ok(format!("{} nonzero entries match", t.entries.len())),
        };
        rep.case(g.name, outcome);
    }
    rep.finish(all.len())
}

fn integrality(r_max: u32, t_range: &str) -> Result<String, Failure> {
    let (lo, hi) = parse_range(t_range)?;
    let mut rep = Report::new();
    for r in 1..=r_max as u64 {
        let bad: Vec<String> = (lo..=hi)
            .filter_map(|t| {
                let (v, ok) = integrality_statistic(r, t);
                (!ok).then(|| format!("t={} gives {}", t, v))
            })
            .collect();
        let outcome = if bad.is_empty() {
            Ok(format!("integral for t in {}..={}", lo, hi))
        } else {
            Err(bad.join(", "))
        };
        rep.case(&format!("r={}", r), outcome);
    }
    rep.finish(r_max as usize)
}

fn recursion(tau_max: i64, n_max: u32) -> Result<String, Failure> {
    let mut rep = Report::new();
    let taus: Vec<i64> = (-tau_max..=tau_max).collect();
    for &tau in &taus {
        let outcome = check_unknot_recursion(tau, n_max)
            .map(|_| format!("holds through n = {}", n_max))
            .map_err(|e| e.to_string());
        rep.case(&format!("tau={}", tau), outcome);
    }
    rep.finish(taus.len())
}

fn symmetry() -> Result<String, Failure> {
    let mut rep = Report::new();
    let mut total = 0;
    let all = golden::all();
    for colors in [[2u32, 2], [2, 3]] {
        let find = |f: [i64; 2]| {
            all.iter()
                .find(|g| g.link == LinkKind::Whitehead && g.colors == colors && g.framings == f)
        };
        let name = format!("whitehead {:?} framings (0,1) vs (1,0)", colors);
        let outcome = match (
            ov_table(LinkKind::Whitehead, &colors, &[0, 1]),
            ov_table(LinkKind::Whitehead, &[colors[1], colors[0]], &[1, 0]),
        ) {
            (Ok(a), Ok(b)) if a.entries != b.entries => Err("swapped tables differ".into()),
            (Ok(a), Ok(_)) => match find([0, 1]) {
                Some(g) if g.entries != a.entries => Err("differs from the reference table".into()),
                _ => Ok(format!("{} entries coincide", a.entries.len())),
            },
            (Err(e), _) | (_, Err(e)) => Err(e.to_string()),
        };
        rep.case(&name, outcome);
        total += 1;
    }
    if let (Some(a), Some(b)) = (
        all.iter().find(|g| g.name == "whitehead_2-2_0-1"),
        all.iter().find(|g| g.name == "whitehead_2-2_1-0"),
    ) {
        let outcome = match ov_table(LinkKind::Whitehead, &[2, 2], &[1, 0]) {
            Ok(t) if t.entries == a.entries && t.entries == b.entries => {
                Ok("computed (1,0) table equals both reference tables".into())
            }
            Ok(_) => Err("reference tables for (0,1) and (1,0) not both reproduced".into()),
            Err(e) => Err(e.to_string()),
        };
        rep.case("whitehead (2,2) reference pair", outcome);
        total += 1;
    }
    for (r1, r2) in [(1u32, 2u32), (2, 3)] {
        for t1 in -1..=1i64 {
            for t2 in -1..=1i64 {
                let outcome = match (
                    ov_table(LinkKind::Whitehead, &[r1, r2], &[t1, t2]),
                    ov_table(LinkKind::Whitehead, &[r2, r1], &[t2, t1]),
                ) {
                    (Ok(a), Ok(b)) if a.entries == b.entries => Ok("swap invariant".into()),
                    (Ok(_), Ok(_)) => Err("swap changes the table".into()),
                    (Err(e), _) | (_, Err(e)) => Err(e.to_string()),
                };
                rep.case(
                    &format!("whitehead ({},{}) framings ({},{})", r1, r2, t1, t2),
                    outcome,
                );
                total += 1;
            }
        }
    }
    rep.finish(total)
}

pub fn run(
    suite: Suite,
    r_max: u32,
    t_range: &str,
    tau_max: i64,
    n_max: u32,
) -> Result<String, Failure> {
    match suite {
        Suite::Tables => tables(),
        Suite::Integrality => integrality(r_max, t_range),
        Suite::Recursion => recursion(tau_max, n_max),
        Suite::Symmetry => symmetry(),
    }
}
