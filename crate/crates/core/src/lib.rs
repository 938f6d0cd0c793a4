//! Exact computation of colored HOMFLYPT invariants, Ooguri-Vafa
//! invariants and BPS disk counts of framed knots and links.
//!
//! Everything is exact: Laurent polynomials in `q^(1/2)` and `a^(1/2)` with
//! rational coefficients, fractions over cyclotomic denominators, and
//! truncated power series over either.

pub mod closed;
pub mod curve;
pub mod error;
pub mod golden;
pub mod laurent;
pub mod links;
pub mod ov;
pub mod qsym;
pub mod ratio;
pub mod ring;
pub mod series;

pub use error::{Error, Result};
pub use laurent::{HalfExp, LaurentPoly};
pub use links::{FramedLinkSpec, LinkKind};
pub use ratio::QFrac;
pub use ring::Ring;
pub use series::TruncSeries;
