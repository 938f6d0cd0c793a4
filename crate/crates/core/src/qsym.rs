//! Quantum integers, braces and their products.
//!
//! * `[n]   = (q^(n/2) - q^(-n/2)) / (q^(1/2) - q^(-1/2))`
//! * `{n}   = q^(n/2) - q^(-n/2)`
//! * `{n;a} = a^(1/2) q^(n/2) - a^(-1/2) q^(-n/2)`

use crate::error::Result;
use crate::laurent::LaurentPoly;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum SymbolKind {
    Bracket,
    Brace,
    BraceA,
}

/// `{n}`.
pub fn brace(n: i64) -> LaurentPoly {
    &LaurentPoly::q_pow(n) - &LaurentPoly::q_pow(-n)
}

/// `{n;a}`.
pub fn brace_a(n: i64) -> LaurentPoly {
    LaurentPoly::from_int_terms(&[(n, 1, 1), (-n, -1, -1)])
}

/// `[n]`, computed by exact division.
pub fn bracket(n: i64) -> LaurentPoly {
    brace(n)
        .exact_div(&brace(1))
        .expect("{n} is divisible by {1}")
}

pub fn qsym(kind: SymbolKind, n: i64) -> LaurentPoly {
    match kind {
        SymbolKind::Bracket => bracket(n),
        SymbolKind::Brace => brace(n),
        SymbolKind::BraceA => brace_a(n),
    }
}

/// Product of `i` consecutive symbols starting at `n`.
///
/// Descending gives `s(n) s(n-1) ... s(n-i+1)`; ascending gives
/// `s(n) s(n+1) ... s(n+i-1)`, which is how `{-n;a}_i` is formed
/// (pass the negated start). Empty products are `1`.
pub fn qsym_falling(kind: SymbolKind, n: i64, i: u32, descending: bool) -> LaurentPoly {
    let step = if descending { -1 } else { 1 };
    (0..i as i64).fold(LaurentPoly::one(), |acc, k| {
        &acc * &qsym(kind, n + step * k)
    })
}

/// `[n]!` or `{n}!`.
pub fn qfactorial(n: u32, kind: SymbolKind) -> LaurentPoly {
    qsym_falling(kind, n as i64, n, true)
}

/// Quantum binomial `[n]! / ([i]! [n-i]!)`.
pub fn qbinomial(n: u32, i: u32) -> Result<LaurentPoly> {
    assert!(i <= n, "qbinomial needs i <= n");
    let num = qfactorial(n, SymbolKind::Bracket);
    let den = &qfactorial(i, SymbolKind::Bracket) * &qfactorial(n - i, SymbolKind::Bracket);
    num.exact_div(&den)
}
