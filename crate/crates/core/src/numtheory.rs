//! Elementary number theory: gcd, divisors, trial-division factorization,
//! Euler's totient, the Möbius function, and the totient bounds that make
//! the cyclotomic scan finite.

use std::collections::HashMap;
use std::sync::{Arc, OnceLock, RwLock};

use crate::error::{at_least, Result};

/// Euler–Mascheroni constant.
const EULER_GAMMA: f64 = 0.577_215_664_901_532_9;

/// Relative tolerance when comparing `b` against the fixed-point map.
const ANALYTIC_BOUND_TOLERANCE: f64 = 1e-12;

pub fn gcd(mut a: u64, mut b: u64) -> u64 {
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a
}

pub fn lcm(a: u64, b: u64) -> u64 {
    if a == 0 || b == 0 {
        0
    } else {
        a / gcd(a, b) * b
    }
}

/// Prime factorization as ascending `(prime, exponent)` pairs.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Factorization {
    pairs: Vec<(u64, u32)>,
}

impl Factorization {
    pub fn pairs(&self) -> &[(u64, u32)] {
        &self.pairs
    }

    pub fn primes(&self) -> impl Iterator<Item = u64> + '_ {
        self.pairs.iter().map(|&(p, _)| p)
    }

    pub fn value(&self) -> u64 {
        self.pairs.iter().map(|&(p, e)| p.pow(e)).product()
    }

    pub fn is_square_free(&self) -> bool {
        self.pairs.iter().all(|&(_, e)| e == 1)
    }
}

/// Trial division. The inputs this crate sees stay below ~10⁷.
pub fn factorize(n: u64) -> Result<Factorization> {
    at_least("n", n, 1)?;
    let mut pairs = Vec::new();
    let mut rest = n;
    let mut p = 2u64;
    while p * p <= rest {
        if rest.is_multiple_of(p) {
            let mut e = 0;
            while rest.is_multiple_of(p) {
                rest /= p;
                e += 1;
            }
            pairs.push((p, e));
        }
        p += if p == 2 { 1 } else { 2 };
    }
    if rest > 1 {
        pairs.push((rest, 1));
    }
    Ok(Factorization { pairs })
}

pub fn is_prime(n: u64) -> bool {
    n >= 2 && factorize(n).map(|f| f.pairs == [(n, 1)]).unwrap_or(false)
}

/// All positive divisors of `n` in ascending order.
pub fn divisors(n: u64) -> Result<Vec<u64>> {
    at_least("n", n, 1)?;
    let mut small = Vec::new();
    let mut large = Vec::new();
    let mut d = 1u64;
    while d * d <= n {
        if n.is_multiple_of(d) {
            small.push(d);
            if d != n / d {
                large.push(n / d);
            }
        }
        d += 1;
    }
    small.extend(large.into_iter().rev());
    Ok(small)
}

pub fn euler_phi(n: u64) -> Result<u64> {
    let f = factorize(n)?;
    Ok(f.pairs
        .iter()
        .map(|&(p, e)| (p - 1) * p.pow(e - 1))
        .product())
}

pub fn mobius(n: u64) -> Result<i8> {
    let f = factorize(n)?;
    if !f.is_square_free() {
        return Ok(0);
    }
    Ok(if f.pairs.len() % 2 == 0 { 1 } else { -1 })
}

/// Right-hand side of the totient lower bound
/// `b / (e^γ log log b + 2.51 / log log b) < φ(b)`, scaled by `d`.
fn analytic_totient_map(d: u64, b: u64) -> f64 {
    let ll = (b as f64).ln().ln();
    d as f64 * (EULER_GAMMA.exp() * ll + 2.51 / ll)
}

/// Largest `b ≥ 3` that the Rosser–Schoenfeld totient bound cannot rule out
/// for `φ(b) ≤ d`.
///
/// Scans every `b` in `3..=2d²` against the floating inequality; values that
/// land within a relative `1e-12` band of the boundary count as satisfied, so
/// rounding can only push the bound up. This is a diagnostic: the
/// exhaustive list in [`totient_bounded`] never depends on it.
pub fn analytic_totient_bound(d: u64) -> Result<u64> {
    at_least("D", d, 2)?;
    let limit = 2 * d * d;
    let mut best = 3;
    for b in 3..=limit {
        let f = analytic_totient_map(d, b);
        if (b as f64) < f * (1.0 + ANALYTIC_BOUND_TOLERANCE) {
            best = b;
        }
    }
    Ok(best)
}

fn small_primes(limit: u64) -> Vec<u64> {
    let limit = limit as usize;
    let mut composite = vec![false; limit + 1];
    let mut primes = Vec::new();
    for i in 2..=limit {
        if !composite[i] {
            primes.push(i as u64);
            let mut j = i * i;
            while j <= limit {
                composite[j] = true;
                j += i;
            }
        }
    }
    primes
}

/// Euler's totient of every integer in `lo..hi`, by a segmented sieve.
pub fn totients_in(lo: u64, hi: u64) -> Vec<u64> {
    if hi <= lo {
        return Vec::new();
    }
    let root = (hi as f64).sqrt() as u64 + 1;
    let primes = small_primes(root);
    let len = (hi - lo) as usize;
    let mut phi: Vec<u64> = (lo..hi).collect();
    let mut rest: Vec<u64> = (lo..hi).collect();
    for &p in &primes {
        let first = lo.div_ceil(p) * p;
        let mut m = first.max(p);
        while m < hi {
            let i = (m - lo) as usize;
            phi[i] -= phi[i] / p;
            while rest[i].is_multiple_of(p) {
                rest[i] /= p;
            }
            m += p;
        }
    }
    for i in 0..len {
        if rest[i] > 1 {
            phi[i] -= phi[i] / rest[i];
        }
    }
    phi
}

const SIEVE_BLOCK: u64 = 1 << 20;

fn totient_cache() -> &'static RwLock<HashMap<u64, Arc<Vec<u64>>>> {
    static CACHE: OnceLock<RwLock<HashMap<u64, Arc<Vec<u64>>>>> = OnceLock::new();
    CACHE.get_or_init(Default::default)
}

/// Every `b ≥ 3` with `φ(b) ≤ d`, ascending.
///
/// The scan runs over `3 ≤ b ≤ 2d²`, which is exhaustive because
/// `φ(b) ≥ √(b/2)`; that inequality is asserted for every scanned `b`.
/// Results are memoized per `d`.
pub fn totient_bounded(d: u64) -> Arc<Vec<u64>> {
    if let Some(hit) = totient_cache().read().unwrap().get(&d) {
        return Arc::clone(hit);
    }
    let limit = 2 * d * d;
    let mut out = Vec::new();
    let mut lo = 3u64;
    while lo <= limit {
        let hi = (lo + SIEVE_BLOCK).min(limit + 1);
        for (b, phi) in (lo..hi).zip(totients_in(lo, hi)) {
            assert!(
                2 * phi * phi >= b,
                "totient lower bound violated at b = {b}"
            );
            if phi <= d {
                out.push(b);
            }
        }
        lo = hi;
    }
    let out = Arc::new(out);
    totient_cache()
        .write()
        .unwrap()
        .entry(d)
        .or_insert_with(|| Arc::clone(&out));
    out
}
