//! Exact certification of circulant nut graphs.
//!
//! A circulant graph `Circ(n, S)` is a nut graph when its adjacency matrix
//! has a one-dimensional kernel spanned by a vector without zero entries.
//! Its eigenvalues are values of an integer polynomial at `n`-th roots of
//! unity, so the question reduces to divisibility by cyclotomic
//! polynomials, decided here in exact integer arithmetic. An independent
//! linear-algebra oracle cross-checks every verdict at small orders.

pub mod circulant;
pub mod cyclotomic;
pub mod error;
pub mod numtheory;
pub mod oracle;
pub mod polynomial;
pub mod search;
pub mod theory;

pub use circulant::{
    q_remainder_table, is_nut, is_universal, pstar, pstar_remainder_table, q_poly, rep_poly,
    zero_multiplicity, GeneratorSet, NutReason, NutVerdict, UniversalityReport, Q_REMAINDER_MODULI,
};
pub use cyclotomic::{cyclotomic, phi_divides};
pub use error::{Error, Result};
pub use oracle::{adjacency, enumerate_balanced, kernel, oracle_is_nut, KernelResult};
pub use num_bigint::BigInt;
pub use polynomial::IntPoly;
pub use search::{find_pt, find_qt_rt, scan_range, PairMode, ScanRecord, UniversalCandidate};
