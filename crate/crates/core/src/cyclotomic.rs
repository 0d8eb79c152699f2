//! Cyclotomic polynomials and the divisibility test behind every verdict.
//!
//! `Φ_n` is computed as `(y^n - 1) / ∏_{d | n, d < n} Φ_d`, recursing over
//! divisors through a process-wide memo table. Readers and writers may race
//! on the same key; both compute the identical polynomial and the first
//! insert wins, so a half-built entry is never visible.

use std::collections::HashMap;
use std::sync::{Arc, OnceLock, RwLock};

use crate::error::{at_least, Result};
use crate::numtheory::divisors;
use crate::polynomial::{remainder_i64, IntPoly};

#[derive(Debug)]
struct Entry {
    poly: IntPoly,
    small: Option<Vec<i64>>,
}

fn cache() -> &'static RwLock<HashMap<u64, Arc<Entry>>> {
    static CACHE: OnceLock<RwLock<HashMap<u64, Arc<Entry>>>> = OnceLock::new();
    CACHE.get_or_init(Default::default)
}

fn entry(b: u64) -> Result<Arc<Entry>> {
    at_least("b", b, 1)?;
    if let Some(hit) = cache().read().unwrap().get(&b) {
        return Ok(Arc::clone(hit));
    }
    let poly = compute(b)?;
    let small = poly.to_i64s();
    let fresh = Arc::new(Entry { poly, small });
    let mut map = cache().write().unwrap();
    Ok(Arc::clone(map.entry(b).or_insert(fresh)))
}

fn compute(n: u64) -> Result<IntPoly> {
    let proper: Vec<u64> = divisors(n)?.into_iter().filter(|&d| d < n).collect();
    let parts = proper
        .iter()
        .map(|&d| entry(d))
        .collect::<Result<Vec<_>>>()?;
    if let Some(small) = compute_i64(n as usize, &parts) {
        return Ok(IntPoly::from_i64s(&small));
    }
    let denom = parts
        .iter()
        .fold(IntPoly::one(), |acc, e| &acc * &e.poly);
    let (quot, rem) = IntPoly::x_pow_minus_one(n as usize).divrem(&denom)?;
    debug_assert!(rem.is_zero());
    Ok(quot)
}

fn mul_i64(a: &[i64], b: &[i64]) -> Option<Vec<i64>> {
    let mut out = vec![0i64; a.len() + b.len() - 1];
    for (i, &x) in a.iter().enumerate() {
        if x == 0 {
            continue;
        }
        for (j, &y) in b.iter().enumerate() {
            if y != 0 {
                out[i + j] = out[i + j].checked_add(x.checked_mul(y)?)?;
            }
        }
    }
    Some(out)
}

/// Machine-word version of the recursion; `None` on any overflow.
fn compute_i64(n: usize, parts: &[Arc<Entry>]) -> Option<Vec<i64>> {
    let mut denom = vec![1i64];
    for part in parts {
        denom = mul_i64(&denom, part.small.as_deref()?)?;
    }
    // Long division of y^n - 1 by the monic denominator; the quotient is
    // exact, so only the quotient coefficients are tracked.
    let m = denom.len() - 1;
    let qdeg = n - m;
    let mut work = vec![0i64; n + 1];
    work[n] = 1;
    work[0] = -1;
    let mut quot = vec![0i64; qdeg + 1];
    for k in (0..=qdeg).rev() {
        let c = work[k + m];
        if c == 0 {
            continue;
        }
        quot[k] = c;
        for (j, &dj) in denom.iter().enumerate() {
            if dj != 0 {
                work[k + j] = work[k + j].checked_sub(c.checked_mul(dj)?)?;
            }
        }
    }
    debug_assert!(work.iter().all(|&c| c == 0));
    Some(quot)
}

/// The `b`-th cyclotomic polynomial.
pub fn cyclotomic(b: u64) -> Result<IntPoly> {
    entry(b).map(|e| e.poly.clone())
}

/// Remainder of `p` modulo `Φ_b`.
///
/// Folds `p` modulo `y^b - 1` first; since `Φ_b | y^b - 1` the remainder is
/// unchanged, and the dividend shrinks below degree `b`.
pub fn cyclotomic_remainder(b: u64, p: &IntPoly) -> Result<IntPoly> {
    let e = entry(b)?;
    let folded = p.reduce_cyclic(b as usize)?;
    if let (Some(divisor), Some(dividend)) = (e.small.as_deref(), folded.to_i64s()) {
        if let Some(rem) = remainder_i64(&dividend, divisor) {
            return Ok(IntPoly::from_i64s(&rem));
        }
    }
    folded.rem(&e.poly)
}

/// Whether `Φ_b` divides `p` exactly.
pub fn phi_divides(b: u64, p: &IntPoly) -> Result<bool> {
    cyclotomic_remainder(b, p).map(|r| r.is_zero())
}
