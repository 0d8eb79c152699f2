//! Closed-form criteria for circulant nut graphs, as executable predicates.
//!
//! Each predicate here is checked elsewhere against both the cyclotomic
//! route and the kernel oracle.

use crate::circulant::GeneratorSet;
use crate::error::{Error, Result};
use crate::numtheory::{gcd, is_prime};
use crate::oracle::{enumerate_balanced, oracle_is_nut};

/// Largest `t` that [`tight_order_has_no_nut`] accepts without an override.
pub const TIGHT_ORDER_DEFAULT_MAX_T: u64 = 6;

fn require(cond: bool, msg: impl FnOnce() -> String) -> Result<()> {
    if cond {
        Ok(())
    } else {
        Err(Error::Precondition(msg()))
    }
}

/// Necessary conditions on order `n` and degree `d` of any vertex-transitive
/// nut graph.
///
/// Not sufficient: no 8-regular circulant nut graph of order 12 exists even
/// though `(12, 8)` passes (see [`tight_order_has_no_nut`]).
pub fn nut_order_degree_feasible(n: u64, d: u64) -> bool {
    (d.is_multiple_of(4) && n.is_multiple_of(2) && n >= d + 4) || (d % 4 == 2 && n.is_multiple_of(4) && n >= d + 6)
}

/// `Circ(n, {x, …, x+2t-1})` is nut iff `gcd(n/2, t) = gcd(n/2, 2x+2t-1) = 1`.
pub fn consecutive_block_is_nut(n: u64, x: u64, t: u64) -> Result<bool> {
    require(x >= 1 && t >= 1, || format!("x and t must be positive, got x = {x}, t = {t}"))?;
    require(n.is_multiple_of(2), || format!("n must be even, got {n}"))?;
    require(n >= 2 * x + 4 * t, || {
        format!("need n >= 2x + 4t, got n = {n}, x = {x}, t = {t}")
    })?;
    let half = n / 2;
    Ok(gcd(half, t) == 1 && gcd(half, 2 * x + 2 * t - 1) == 1)
}

/// `Circ(n, {1, …, d/2})` is nut iff `gcd(n, d/2+1) = 1` and `gcd(n/2, d/4) = 1`.
pub fn initial_segment_is_nut(n: u64, d: u64) -> Result<bool> {
    require(d >= 4 && d.is_multiple_of(4), || format!("d must be a positive multiple of 4, got {d}"))?;
    require(n.is_multiple_of(2) && n >= d + 4, || format!("need even n >= d + 4, got n = {n}, d = {d}"))?;
    Ok(gcd(n, d / 2 + 1) == 1 && gcd(n / 2, d / 4) == 1)
}

/// True when `Circ(n, S_t)` is known not to be nut: `t ≡ 1 (mod 10)` with
/// `5 | n`, or `t ≡ 15 (mod 18)` with `9 | n`.
pub fn almost_consecutive_known_failure(t: u64, n: u64) -> Result<bool> {
    require(t % 2 == 1, || format!("t must be odd, got {t}"))?;
    require(n.is_multiple_of(2) && n >= 4 * t + 4, || {
        format!("need even n >= 4t + 4, got n = {n}, t = {t}")
    })?;
    Ok((t % 10 == 1 && n.is_multiple_of(5)) || (t % 18 == 15 && n.is_multiple_of(9)))
}

/// Odd `t ≥ 3` outside the two exceptional residue classes, for which
/// `S_t` is universal.
pub fn almost_consecutive_universal_class(t: u64) -> bool {
    t % 2 == 1 && t >= 3 && t % 10 != 1 && t % 18 != 15
}

/// Exponents of the eight terms of `Q_{S_t}`.
pub fn q_exponents(t: u64) -> [u64; 8] {
    [4 * t + 3, 3 * t + 2, 3 * t + 1, 2 * t + 2, 2 * t + 1, t + 2, t + 1, 0]
}

/// Smallest exponent of `Q_{S_t}` whose residue mod `p` occurs exactly once
/// among all eight exponents. `None` would mean no residue class isolates a
/// single term.
pub fn unique_residue_exponent(t: u64, p: u64) -> Result<Option<u64>> {
    require(t >= 3 && t % 2 == 1 && t % 10 != 1, || {
        format!("t must be odd, at least 3 and not 1 mod 10, got {t}")
    })?;
    require(p >= 5 && is_prime(p), || format!("p must be a prime >= 5, got {p}"))?;
    let exps = q_exponents(t);
    Ok(exps
        .iter()
        .copied()
        .filter(|&e| exps.iter().filter(|&&f| f % p == e % p).count() == 1)
        .min())
}

/// No `4t`-regular circulant nut graph of order `4t + 4` exists (even `t`),
/// decided by running the kernel oracle over every balanced generator set.
pub fn tight_order_has_no_nut(t: u64, allow_large: bool) -> Result<bool> {
    require(t >= 2 && t.is_multiple_of(2), || format!("t must be even and at least 2, got {t}"))?;
    require(allow_large || t <= TIGHT_ORDER_DEFAULT_MAX_T, || {
        format!("t = {t} exceeds the default guard {TIGHT_ORDER_DEFAULT_MAX_T}; pass the override")
    })?;
    let n = 4 * t + 4;
    for set in enumerate_balanced(n, t)? {
        if oracle_is_nut(n, &set)? {
            return Ok(false);
        }
    }
    Ok(true)
}

/// A consecutive generator set giving a `4t`-regular circulant nut graph of
/// even order `n ≥ 4t + 4` whenever `gcd(n/2, t) = 1`.
///
/// Uses `x = n/4 - t` when `4 | n` and `x = (n-2)/4 - t` otherwise; returns
/// `None` when the gcd condition fails or `x` would not be positive.
pub fn consecutive_nut_set(n: u64, t: u64) -> Option<GeneratorSet> {
    if t == 0 || n % 2 == 1 || n < 4 * t + 4 || gcd(n / 2, t) != 1 {
        return None;
    }
    let quarter = if n.is_multiple_of(4) { n / 4 } else { (n - 2) / 4 };
    let x = quarter.checked_sub(t).filter(|&x| x >= 1)?;
    GeneratorSet::consecutive(x, 2 * t).ok()
}
