//! Reference Ooguri-Vafa tables bundled with the crate.

use std::collections::BTreeMap;

use num_bigint::BigInt;

use crate::links::LinkKind;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GoldenTable {
    pub name: &'static str,
    pub link: LinkKind,
    pub colors: Vec<u32>,
    pub framings: Vec<i64>,
    /// Nonzero `N` at doubled exponents `(2i, 2j)`.
    pub entries: BTreeMap<(i64, i64), BigInt>,
}

const SOURCES: [(&str, &str); 14] = [
    (
        "whitehead_2-2_0-0",
        include_str!("../golden/whitehead_2-2_0-0.csv"),
    ),
    (
        "whitehead_2-2_0-1",
        include_str!("../golden/whitehead_2-2_0-1.csv"),
    ),
    (
        "whitehead_2-2_1-0",
        include_str!("../golden/whitehead_2-2_1-0.csv"),
    ),
    (
        "whitehead_2-2_1-1",
        include_str!("../golden/whitehead_2-2_1-1.csv"),
    ),
    (
        "whitehead_2-3_0-0",
        include_str!("../golden/whitehead_2-3_0-0.csv"),
    ),
    (
        "whitehead_2-3_0-1",
        include_str!("../golden/whitehead_2-3_0-1.csv"),
    ),
    (
        "whitehead_2-3_1-0",
        include_str!("../golden/whitehead_2-3_1-0.csv"),
    ),
    (
        "whitehead_2-3_1-1",
        include_str!("../golden/whitehead_2-3_1-1.csv"),
    ),
    (
        "borromean_1-1-2_0-0-0",
        include_str!("../golden/borromean_1-1-2_0-0-0.csv"),
    ),
    (
        "borromean_1-1-2_1-1-1",
        include_str!("../golden/borromean_1-1-2_1-1-1.csv"),
    ),
    (
        "borromean_1-2-2_0-0-0",
        include_str!("../golden/borromean_1-2-2_0-0-0.csv"),
    ),
    (
        "borromean_1-2-2_1-1-1",
        include_str!("../golden/borromean_1-2-2_1-1-1.csv"),
    ),
    (
        "borromean_2-2-2_0-0-0",
        include_str!("../golden/borromean_2-2-2_0-0-0.csv"),
    ),
    (
        "borromean_2-2-2_1-1-1",
        include_str!("../golden/borromean_2-2-2_1-1-1.csv"),
    ),
];

fn list<T: std::str::FromStr>(s: &str) -> Vec<T>
where
    T::Err: std::fmt::Debug,
{
    s.split(',')
        .map(|x| x.trim().parse().expect("golden header"))
        .collect()
}

/// Parses the CSV layout: `#` header lines with `key=value` fields, then
/// `i2,j2,N` rows.
pub fn parse(name: &'static str, text: &str) -> GoldenTable {
    let mut link = None;
    let mut colors = Vec::new();
    let mut framings = Vec::new();
    let mut entries = BTreeMap::new();
    for line in text.lines().map(str::trim).filter(|l| !l.is_empty()) {
        if let Some(meta) = line.strip_prefix('#') {
            for field in meta.split_whitespace() {
                match field.split_once('=') {
                    Some(("link", v)) => {
                        link = Some(match v {
                            "whitehead" => LinkKind::Whitehead,
                            "borromean" => LinkKind::Borromean,
                            "unknot" => LinkKind::Unknot,
                            other => panic!("unknown link {}", other),
                        })
                    }
                    Some(("colors", v)) => colors = list(v),
                    Some(("framings", v)) => framings = list(v),
                    _ => {}
                }
            }
            continue;
        }
        if line.starts_with("i2") {
            continue;
        }
        let cells: Vec<&str> = line.split(',').collect();
        assert_eq!(cells.len(), 3, "bad golden row {:?}", line);
        let i2: i64 = cells[0].parse().expect("i2");
        let j2: i64 = cells[1].parse().expect("j2");
        let n: BigInt = cells[2].parse().expect("N");
        entries.insert((i2, j2), n);
    }
    GoldenTable {
        name,
        link: link.expect("golden file names its link"),
        colors,
        framings,
        entries,
    }
}

pub fn all() -> Vec<GoldenTable> {
    SOURCES.iter().map(|(n, t)| parse(n, t)).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn fourteen_tables_load() {
        let t = all();
        assert_eq!(t.len(), 14);
        for g in &t {
            assert_eq!(g.colors.len(), g.link.components());
            assert_eq!(g.framings.len(), g.link.components());
            assert!(!g.entries.is_empty());
        }
    }

    #[test]
    fn spot_entries() {
        let t = all();
        assert_eq!(t[0].entries[&(8, 6)], BigInt::from(1));
        assert_eq!(t[0].entries[&(6, 6)], BigInt::from(-2));
        assert_eq!(t[8].entries[&(4, 1)], BigInt::from(-1));
    }

    #[test]
    fn framing_swapped_whitehead_tables_coincide() {
        let t = all();
        assert_eq!(t[1].entries, t[2].entries);
    }
}
