//! Ground truth from linear algebra: the exact adjacency matrix of
//! `Circ(n, S)`, its rational kernel by fraction-free elimination, and
//! exhaustive enumeration of balanced generator sets.
//!
//! Nothing here touches cyclotomic polynomials, so agreement between this
//! module and [`crate::circulant`] is a genuine cross-check.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::circulant::GeneratorSet;
use crate::error::{Error, Result};

/// Default largest order the oracle accepts.
pub const DEFAULT_ORACLE_CAP: u64 = 512;

/// Environment variable overriding [`DEFAULT_ORACLE_CAP`].
pub const ORACLE_CAP_ENV: &str = "CIRCNUT_ORACLE_CAP";

pub type IntMatrix = Vec<Vec<i64>>;

pub fn oracle_cap() -> u64 {
    std::env::var(ORACLE_CAP_ENV)
        .ok()
        .and_then(|v| v.trim().parse().ok())
        .unwrap_or(DEFAULT_ORACLE_CAP)
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct KernelResult {
    pub nullity: usize,
    pub rank: usize,
    /// Integer vectors with content 1 and a positive last nonzero entry.
    pub basis: Vec<Vec<BigInt>>,
    /// Nullity is 1 and the kernel vector has no zero entry.
    pub full_support: bool,
}

/// 0/1 adjacency matrix of `Circ(n, S)`.
pub fn adjacency(n: u64, set: &GeneratorSet) -> Result<IntMatrix> {
    if n == 0 || 2 * set.largest() > n {
        return Err(Error::GeneratorTooLarge { max: set.largest(), order: n });
    }
    let n = n as usize;
    let mut m = vec![vec![0i64; n]; n];
    for i in 0..n {
        for &s in set.elements() {
            let s = s as usize;
            m[i][(i + s) % n] = 1;
            m[i][(i + n - s) % n] = 1;
        }
    }
    Ok(m)
}

/// Kernel of a square integer matrix.
///
/// Bareiss fraction-free elimination with row exchanges produces an echelon
/// form whose entries stay integral (every division is exact). Each free
/// column then yields one basis vector by rational back-substitution.
pub fn kernel(m: &[Vec<i64>]) -> KernelResult {
    let rows = m.len();
    let cols = m.first().map_or(0, Vec::len);
    let mut a: Vec<Vec<BigInt>> = m
        .iter()
        .map(|row| row.iter().map(|&x| BigInt::from(x)).collect())
        .collect();

    let mut pivots: Vec<usize> = Vec::new();
    let mut prev = BigInt::one();
    let mut r = 0;
    for c in 0..cols {
        if r == rows {
            break;
        }
        let Some(p) = (r..rows).find(|&i| !a[i][c].is_zero()) else {
            continue;
        };
        a.swap(r, p);
        let (head, tail) = a.split_at_mut(r + 1);
        let pivot_row = &head[r];
        let pivot = pivot_row[c].clone();
        for row in tail.iter_mut() {
            let lead = std::mem::take(&mut row[c]);
            for j in c + 1..cols {
                let num = &pivot * &row[j] - &lead * &pivot_row[j];
                let (q, rem) = num.div_rem(&prev);
                debug_assert!(rem.is_zero(), "Bareiss division must be exact");
                row[j] = q;
            }
        }
        prev = pivot;
        pivots.push(c);
        r += 1;
    }

    let rank = pivots.len();
    let free: Vec<usize> = (0..cols).filter(|c| !pivots.contains(c)).collect();
    let basis: Vec<Vec<BigInt>> = free
        .iter()
        .map(|&f| {
            let mut x = vec![BigRational::zero(); cols];
            x[f] = BigRational::one();
            for (i, &pc) in pivots.iter().enumerate().rev() {
                let mut acc = BigRational::zero();
                for j in pc + 1..cols {
                    if !a[i][j].is_zero() && !x[j].is_zero() {
                        acc += BigRational::from_integer(a[i][j].clone()) * &x[j];
                    }
                }
                x[pc] = -acc / BigRational::from_integer(a[i][pc].clone());
            }
            normalize(&x)
        })
        .collect();

    for v in &basis {
        assert!(annihilates(m, v), "kernel vector failed re-multiplication");
    }
    let full_support = basis.len() == 1 && basis[0].iter().all(|x| !x.is_zero());
    KernelResult {
        nullity: basis.len(),
        rank,
        basis,
        full_support,
    }
}

/// Clears denominators, divides out the content, and makes the last nonzero
/// entry positive.
fn normalize(x: &[BigRational]) -> Vec<BigInt> {
    let denom = x
        .iter()
        .fold(BigInt::one(), |acc, q| acc.lcm(q.denom()));
    let mut v: Vec<BigInt> = x
        .iter()
        .map(|q| q.numer() * (&denom / q.denom()))
        .collect();
    let content = v.iter().fold(BigInt::zero(), |acc, e| acc.gcd(e));
    if !content.is_zero() {
        for e in &mut v {
            *e /= &content;
        }
    }
    if v.iter().rev().find(|e| !e.is_zero()).is_some_and(Signed::is_negative) {
        for e in &mut v {
            *e = -&*e;
        }
    }
    v
}

pub fn annihilates(m: &[Vec<i64>], v: &[BigInt]) -> bool {
    m.iter().all(|row| {
        row.iter()
            .zip(v)
            .filter(|(&a, _)| a != 0)
            .fold(BigInt::zero(), |acc, (&a, x)| acc + x * a)
            .is_zero()
    })
}

fn check_cap(n: u64) -> Result<()> {
    let cap = oracle_cap();
    if n > cap {
        return Err(Error::OracleCapExceeded { order: n, cap });
    }
    Ok(())
}

/// Kernel of the adjacency matrix of `Circ(n, S)`, subject to the order cap.
pub fn circulant_kernel(n: u64, set: &GeneratorSet) -> Result<KernelResult> {
    check_cap(n)?;
    Ok(kernel(&adjacency(n, set)?))
}

/// Nut by definition: nullity 1 and a kernel vector without zero entries.
pub fn oracle_is_nut(n: u64, set: &GeneratorSet) -> Result<bool> {
    Ok(circulant_kernel(n, set)?.full_support)
}

/// All `2t`-subsets of `{1, …, n/2 - 1}` with `t` odd and `t` even
/// members, in lexicographic order.
pub fn enumerate_balanced(n: u64, t: u64) -> Result<Vec<GeneratorSet>> {
    if n < 4 * t + 4 {
        return Err(Error::Precondition(format!(
            "enumeration needs n >= 4t + 4, got n = {n}, t = {t}"
        )));
    }
    let pool: Vec<u64> = (1..n / 2).collect();
    let k = 2 * t as usize;
    let mut out = Vec::new();
    let mut pick: Vec<usize> = (0..k).collect();
    loop {
        let subset: Vec<u64> = pick.iter().map(|&i| pool[i]).collect();
        if subset.iter().filter(|&&s| s % 2 == 1).count() == t as usize {
            out.push(GeneratorSet::new(subset)?);
        }
        // Advance to the next combination in lexicographic order.
        let Some(i) = (0..k).rev().find(|&i| pick[i] < pool.len() - k + i) else {
            break;
        };
        pick[i] += 1;
        for j in i + 1..k {
            pick[j] = pick[j - 1] + 1;
        }
    }
    Ok(out)
}
