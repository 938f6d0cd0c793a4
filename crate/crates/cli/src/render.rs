//! Text renderers shared by the subcommands.

use std::collections::BTreeMap;
use std::fmt::Write;

use num_bigint::BigInt;

/// A doubled exponent as a plain or half-integer fraction.
pub fn half(n: i64) -> String {
    if n % 2 == 0 {
        (n / 2).to_string()
    } else {
        format!("{}/2", n)
    }
}

/// Rows `i` descending, columns `j` descending, on the lattice of the
/// entries; missing cells print as 0.
pub fn ov_ascii(entries: &BTreeMap<(i64, i64), BigInt>) -> String {
    if entries.is_empty() {
        return "(no nonzero entries)\n".to_string();
    }
    let i_min = entries.keys().map(|k| k.0).min().unwrap();
    let i_max = entries.keys().map(|k| k.0).max().unwrap();
    let j_min = entries.keys().map(|k| k.1).min().unwrap();
    let j_max = entries.keys().map(|k| k.1).max().unwrap();
    let rows: Vec<i64> = (0..=(i_max - i_min) / 2).map(|k| i_max - 2 * k).collect();
    let cols: Vec<i64> = (0..=(j_max - j_min) / 2).map(|k| j_max - 2 * k).collect();

    let zero = BigInt::from(0);
    let cell = |i: i64, j: i64| entries.get(&(i, j)).unwrap_or(&zero).to_string();
    let corner = "i \\ j";
    let label_w = rows
        .iter()
        .map(|&i| half(i).len())
        .max()
        .unwrap()
        .max(corner.len());
    let mut col_w = 0;
    for &j in &cols {
        col_w = col_w.max(half(j).len());
        for &i in &rows {
            col_w = col_w.max(cell(i, j).len());
        }
    }

    let mut out = String::new();
    write!(out, "{:>w$} |", corner, w = label_w).unwrap();
    for &j in &cols {
        write!(out, " {:>w$}", half(j), w = col_w).unwrap();
    }
    out.push('\n');
    out.push_str(&"-".repeat(label_w + 1));
    out.push('+');
    out.push_str(&"-".repeat(cols.len() * (col_w + 1)));
    out.push('\n');
    for &i in &rows {
        write!(out, "{:>w$} |", half(i), w = label_w).unwrap();
        for &j in &cols {
            write!(out, " {:>w$}", cell(i, j), w = col_w).unwrap();
        }
        out.push('\n');
    }
    out
}

/// Space-aligned columns with a header row.
pub fn columns(header: &[&str], rows: &[Vec<String>]) -> String {
    let mut widths: Vec<usize> = header.iter().map(|h| h.len()).collect();
    for row in rows {
        for (w, c) in widths.iter_mut().zip(row) {
            *w = (*w).max(c.len());
        }
    }
    let line = |cells: Vec<&str>| {
        let parts: Vec<String> = cells
            .iter()
            .zip(&widths)
            .map(|(c, w)| format!("{:>w$}", c, w = w))
            .collect();
        parts.join("  ") + "\n"
    };
    let mut out = line(header.to_vec());
    for row in rows {
        out.push_str(&line(row.iter().map(String::as_str).collect()));
    }
    out
}

pub fn csv(header: &[&str], rows: &[Vec<String>]) -> String {
    let mut out = header.join(",") + "\n";
    for row in rows {
        out.push_str(&row.join(","));
        out.push('\n');
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn half_exponents() {
        assert_eq!(half(4), "2");
        assert_eq!(half(5), "5/2");
        assert_eq!(half(-3), "-3/2");
        assert_eq!(half(0), "0");
    }

    #[test]
    fn ascii_fills_missing_cells() {
        let mut e = BTreeMap::new();
        e.insert((2, 2), BigInt::from(-1));
        e.insert((0, -2), BigInt::from(3));
        let s = ov_ascii(&e);
        let lines: Vec<&str> = s.lines().collect();
        assert_eq!(lines[0], "i \\ j |  1  0 -1");
        assert_eq!(lines[2], "    1 | -1  0  0");
        assert_eq!(lines[3], "    0 |  0  0  3");
    }
}
