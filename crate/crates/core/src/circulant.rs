//! Generator sets, the eigenvalue polynomials of `Circ(n, S)`, fixed-order
//! nut verdicts, and universality certificates.
//!
//! The eigenvalues of `Circ(n, S)` are `λ_j = P(ω^j)` with `ω = e^{2πi/n}`
//! and `P(y) = Σ_{s ∈ S} (y^s + y^{-s})`, except that a half-order generator
//! `s = n/2` contributes a single `y^{n/2}`. Clearing denominators gives an
//! integer polynomial whose roots among the `n`-th roots of unity are exactly
//! the zero eigenvalues. `ω^j` is a primitive `b`-th root of unity for
//! `b = n / gcd(j, n)`, and every divisor `b` of `n` arises this way (take
//! `j = n / b`). So `λ_j = 0` for some `j` of order `b` if and only if
//! `Φ_b` divides the polynomial, and the per-order check only has to scan
//! the divisors of `n` instead of every `j`.
//!
//! Multiplying by `y^k` never changes divisibility by `Φ_b` for `b ≥ 2`,
//! which is why the order-free `P*` and the order-aware representative
//! agree whenever no half-order generator is present.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::cyclotomic::{cyclotomic_remainder, phi_divides};
use crate::error::{at_least, Error, Result};
use crate::numtheory::{divisors, euler_phi, totient_bounded};
use crate::polynomial::IntPoly;

/// Moduli `b` for which [`q_remainder_table`] is tabulated.
pub const Q_REMAINDER_MODULI: [u64; 10] = [3, 5, 6, 7, 10, 14, 15, 21, 30, 42];

/// Strictly increasing, nonempty set of positive step sizes.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "Vec<u64>", into = "Vec<u64>")]
pub struct GeneratorSet(Vec<u64>);

impl GeneratorSet {
    /// Builds a set from elements in any order; rejects zero and duplicates.
    pub fn new(mut elements: Vec<u64>) -> Result<Self> {
        if elements.is_empty() {
            return Err(Error::EmptySet);
        }
        if elements.contains(&0) {
            return Err(Error::InvalidSet("elements must be positive".into()));
        }
        elements.sort_unstable();
        if let Some(w) = elements.windows(2).find(|w| w[0] == w[1]) {
            return Err(Error::InvalidSet(format!("duplicate element {}", w[0])));
        }
        Ok(GeneratorSet(elements))
    }

    /// `{1, …, hi} \ removed`.
    pub fn range_without(hi: u64, removed: &[u64]) -> Result<Self> {
        Self::new((1..=hi).filter(|s| !removed.contains(s)).collect())
    }

    /// `S_t = {1, …, 2t+1} \ {t}`.
    pub fn almost_consecutive(t: u64) -> Result<Self> {
        at_least("t", t, 1)?;
        Self::range_without(2 * t + 1, &[t])
    }

    /// `{x, x+1, …, x+len-1}`.
    pub fn consecutive(x: u64, len: u64) -> Result<Self> {
        at_least("x", x, 1)?;
        Self::new((x..x + len).collect())
    }

    pub fn elements(&self) -> &[u64] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn largest(&self) -> u64 {
        *self.0.last().expect("generator sets are nonempty")
    }

    pub fn contains(&self, s: u64) -> bool {
        self.0.binary_search(&s).is_ok()
    }

    pub fn odd_count(&self) -> usize {
        self.0.iter().filter(|&&s| s % 2 == 1).count()
    }

    pub fn even_count(&self) -> usize {
        self.0.len() - self.odd_count()
    }

    pub fn is_balanced(&self) -> bool {
        self.odd_count() == self.even_count()
    }
}

impl TryFrom<Vec<u64>> for GeneratorSet {
    type Error = Error;

    fn try_from(v: Vec<u64>) -> Result<Self> {
        Self::new(v)
    }
}

impl From<GeneratorSet> for Vec<u64> {
    fn from(s: GeneratorSet) -> Vec<u64> {
        s.0
    }
}

impl fmt::Display for GeneratorSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(u64::to_string).collect();
        f.write_str(&parts.join(","))
    }
}

/// Parses `1,2,4,5`; duplicates are rejected.
impl FromStr for GeneratorSet {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let elements = s
            .split(',')
            .map(|part| {
                part.trim()
                    .parse::<u64>()
                    .map_err(|_| Error::InvalidSet(format!("not a positive integer: {part:?}")))
            })
            .collect::<Result<Vec<_>>>()?;
        Self::new(elements)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(tag = "kind", content = "b")]
pub enum NutReason {
    Nut,
    OddOrder,
    HalfOrderGenerator,
    UnbalancedParity,
    /// `Φ_b` divides the order-`n` representative polynomial, `b ≥ 3`, `b | n`.
    CyclotomicWitness(u64),
    GeneratorTooLarge,
}

impl NutReason {
    pub fn name(&self) -> &'static str {
        match self {
            NutReason::Nut => "Nut",
            NutReason::OddOrder => "OddOrder",
            NutReason::HalfOrderGenerator => "HalfOrderGenerator",
            NutReason::UnbalancedParity => "UnbalancedParity",
            NutReason::CyclotomicWitness(_) => "CyclotomicWitness",
            NutReason::GeneratorTooLarge => "GeneratorTooLarge",
        }
    }

    pub fn witness(&self) -> Option<u64> {
        match self {
            NutReason::CyclotomicWitness(b) => Some(*b),
            _ => None,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct NutVerdict {
    pub reason: NutReason,
}

impl NutVerdict {
    pub fn is_nut(&self) -> bool {
        self.reason == NutReason::Nut
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct UniversalityReport {
    pub set: GeneratorSet,
    pub universal: bool,
    pub balanced: bool,
    /// `deg P* = 2·max(S)`.
    pub degree_bound: u64,
    /// Smallest order universality covers, `2·max(S) + 2`.
    pub min_order: u64,
    pub scanned_b: Vec<u64>,
    pub failing_b: Vec<u64>,
}

/// `P*(y) = y^{max S}·P(y) = Σ_{s ∈ S} (y^{max S + s} + y^{max S - s})`.
pub fn pstar(set: &GeneratorSet) -> IntPoly {
    let m = set.largest() as usize;
    IntPoly::from_terms(
        set.elements()
            .iter()
            .flat_map(|&s| [(1, m + s as usize), (1, m - s as usize)]),
    )
}

/// Signed exponents of `Q_{S_t} = (y - 1)·P*_{S_t}`, highest first.
pub fn q_terms(t: u64) -> [(i64, u64); 8] {
    [
        (1, 4 * t + 3),
        (-1, 3 * t + 2),
        (1, 3 * t + 1),
        (-1, 2 * t + 2),
        (1, 2 * t + 1),
        (-1, t + 2),
        (1, t + 1),
        (-1, 0),
    ]
}

/// The eight-term lacunary polynomial `(y - 1)·P*_{S_t}`.
pub fn q_poly(t: u64) -> Result<IntPoly> {
    at_least("t", t, 2)?;
    let q = IntPoly::from_terms(q_terms(t).map(|(c, k)| (c, k as usize)));
    debug_assert_eq!(
        q,
        &IntPoly::from_i64s(&[-1, 1]) * &pstar(&GeneratorSet::almost_consecutive(t)?)
    );
    Ok(q)
}

fn check_fits(set: &GeneratorSet, n: u64) -> Result<()> {
    at_least("n", n, 1)?;
    if 2 * set.largest() > n {
        return Err(Error::GeneratorTooLarge { max: set.largest(), order: n });
    }
    Ok(())
}

/// Order-`n` representative: evaluating it at `ω^j` gives `λ_j` exactly.
///
/// `Σ_{s < n/2} (y^s + y^{n-s}) + [n/2 ∈ S]·y^{n/2}`, every exponent below `n`.
pub fn rep_poly(set: &GeneratorSet, n: u64) -> Result<IntPoly> {
    check_fits(set, n)?;
    let n = n as usize;
    Ok(IntPoly::from_terms(set.elements().iter().flat_map(|&s| {
        let s = s as usize;
        let pair = if 2 * s == n { None } else { Some((1, n - s)) };
        std::iter::once((1, s)).chain(pair)
    })))
}

/// Divisors `b` of `n` for which `Φ_b` can divide the order-`n`
/// representative, with their totients.
///
/// At an `n`-th root of unity the representative equals `y^{-m}·R(y)` for a
/// nonzero `R` of degree at most `2m` (`m = max S`), so `Φ_b` can only divide
/// it when `φ(b) ≤ 2m`. This keeps large orders cheap.
fn candidate_divisors(set: &GeneratorSet, n: u64) -> Result<Vec<(u64, u64)>> {
    let bound = 2 * set.largest();
    divisors(n)?
        .into_iter()
        .map(|b| euler_phi(b).map(|phi| (b, phi)))
        .filter(|r| r.as_ref().map_or(true, |&(_, phi)| phi <= bound))
        .collect()
}

/// Decides whether `Circ(n, S)` is a nut graph, with a re-checkable reason.
pub fn is_nut(set: &GeneratorSet, n: u64) -> Result<NutVerdict> {
    at_least("n", n, 2)?;
    let reason = if 2 * set.largest() > n {
        NutReason::GeneratorTooLarge
    } else if n % 2 == 1 {
        NutReason::OddOrder
    } else if set.contains(n / 2) {
        NutReason::HalfOrderGenerator
    } else if !set.is_balanced() {
        NutReason::UnbalancedParity
    } else {
        let rep = rep_poly(set, n)?;
        let mut witness = None;
        for (b, _) in candidate_divisors(set, n)?.into_iter().filter(|&(b, _)| b >= 3) {
            if phi_divides(b, &rep)? {
                witness = Some(b);
                break;
            }
        }
        witness.map_or(NutReason::Nut, NutReason::CyclotomicWitness)
    };
    Ok(NutVerdict { reason })
}

/// Multiplicity of the eigenvalue 0 of the adjacency matrix of `Circ(n, S)`:
/// each divisor `b` with `Φ_b | rep` contributes the `φ(b)` indices `j` of
/// order `b`.
pub fn zero_multiplicity(set: &GeneratorSet, n: u64) -> Result<u64> {
    let rep = rep_poly(set, n)?;
    let mut total = 0;
    for (b, phi) in candidate_divisors(set, n)? {
        if phi_divides(b, &rep)? {
            total += phi;
        }
    }
    Ok(total)
}

/// Certifies (or refutes) that `Circ(n, S)` is nut for every even
/// `n ≥ 2·max(S) + 2`.
///
/// A zero of `P*` at a primitive `b`-th root of unity needs `Φ_b | P*`, so
/// `φ(b) ≤ deg P*`, and the scan over `totient_bounded(deg P*)` is complete.
/// Any failing `b ≥ 3` divides infinitely many admissible even orders, so a
/// failure is never spurious. Zeros of `P*` that are not roots of unity never
/// show up in a circulant spectrum.
pub fn is_universal(set: &GeneratorSet) -> Result<UniversalityReport> {
    let p = pstar(set);
    let degree_bound = 2 * set.largest();
    let scanned = totient_bounded(degree_bound);
    let failing: Vec<u64> = scanned
        .par_iter()
        .map(|&b| phi_divides(b, &p).map(|hit| hit.then_some(b)))
        .collect::<Result<Vec<_>>>()?
        .into_iter()
        .flatten()
        .collect();
    let balanced = set.is_balanced();
    Ok(UniversalityReport {
        set: set.clone(),
        universal: balanced && failing.is_empty(),
        balanced,
        degree_bound,
        min_order: degree_bound + 2,
        scanned_b: scanned.to_vec(),
        failing_b: failing,
    })
}

/// Smallest `b` refuting universality, or `None` if `S` is universal.
///
/// Returns `Some(2)` for unbalanced sets. Cheaper than [`is_universal`] for
/// rejecting candidates since it stops at the first hit.
pub fn universality_obstruction(set: &GeneratorSet) -> Result<Option<u64>> {
    if !set.is_balanced() {
        return Ok(Some(2));
    }
    let p = pstar(set);
    for &b in totient_bounded(2 * set.largest()).iter() {
        if phi_divides(b, &p)? {
            return Ok(Some(b));
        }
    }
    Ok(None)
}

/// `(b, P* mod Φ_b)` for every `b` in the universality scan, ascending.
pub fn pstar_remainder_table(set: &GeneratorSet) -> Result<Vec<(u64, IntPoly)>> {
    let p = pstar(set);
    totient_bounded(2 * set.largest())
        .par_iter()
        .map(|&b| cyclotomic_remainder(b, &p).map(|r| (b, r)))
        .collect()
}

/// `Q_{S_t}` folded modulo `y^b - 1`, built from the exponents of
/// `q_terms(t)`. Works for any `t ≥ 0`.
pub fn q_folded(t: u64, b: u64) -> IntPoly {
    IntPoly::from_terms(q_terms(t).map(|(c, k)| (c, (k % b) as usize)))
}

/// `Q_{S_t}^{mod b} mod Φ_b` for each residue `t ≡ r (mod b)`.
///
/// Each row is computed from two representatives, `t = r` and `t = r + b`,
/// which must agree.
pub fn q_remainder_table(b: u64) -> Result<Vec<(u64, IntPoly)>> {
    at_least("b", b, 3)?;
    (0..b)
        .into_par_iter()
        .map(|r| {
            let first = cyclotomic_remainder(b, &q_folded(r, b))?;
            let second = cyclotomic_remainder(b, &q_folded(r + b, b))?;
            assert_eq!(first, second, "remainder depends on the representative of t mod {b}");
            Ok((r, first))
        })
        .collect()
}

/// Exact `P*(1) = 2|S|`, handy as a sanity check.
pub fn pstar_at_one(set: &GeneratorSet) -> BigInt {
    pstar(set).eval_int(1)
}
