//! Search for universal generator sets close to `{1, …, 2t+1}` (odd `t`)
//! and `{1, …, 2t+2}` (even `t`).

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::circulant::{is_universal, universality_obstruction, GeneratorSet, UniversalityReport};
use crate::error::{Error, Result};
use crate::theory::almost_consecutive_universal_class;

/// Default upper end of a scan range without the long-running override.
pub const DEFAULT_SCAN_MAX_T: u64 = 200;

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct UniversalCandidate {
    pub t: u64,
    /// One odd element for odd `t`; an opposite-parity pair for even `t`.
    pub removed: Vec<u64>,
    pub set: GeneratorSet,
    pub report: UniversalityReport,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum PairMode {
    First,
    All,
}

fn certify(t: u64, removed: Vec<u64>, set: GeneratorSet) -> Result<UniversalCandidate> {
    assert!(set.is_balanced(), "candidate sets are balanced by construction");
    let report = is_universal(&set)?;
    Ok(UniversalCandidate { t, removed, set, report })
}

/// Smallest odd `p` such that `{1, …, 2t+1} \ {p}` is universal.
pub fn find_pt(t: u64) -> Result<Option<UniversalCandidate>> {
    if t < 3 || t.is_multiple_of(2) {
        return Err(Error::Precondition(format!("t must be odd and at least 3, got {t}")));
    }
    let hit = (0..=t)
        .into_par_iter()
        .map(|i| 2 * i + 1)
        .map(|p| -> Result<Option<u64>> {
            let set = GeneratorSet::range_without(2 * t + 1, &[p])?;
            Ok(universality_obstruction(&set)?.is_none().then_some(p))
        })
        .find_first(|r| !matches!(r, Ok(None)));
    match hit {
        None => Ok(None),
        Some(Err(e)) => Err(e),
        Some(Ok(p)) => {
            let p = p.expect("filtered on Some");
            let set = GeneratorSet::range_without(2 * t + 1, &[p])?;
            certify(t, vec![p], set).map(Some)
        }
    }
}

/// Opposite-parity pairs `q < r` in `{1, …, 2t+2}`, lexicographic.
pub fn candidate_pairs(t: u64) -> Vec<(u64, u64)> {
    let hi = 2 * t + 2;
    (1..=hi)
        .flat_map(|q| (q + 1..=hi).map(move |r| (q, r)))
        .filter(|(q, r)| (q + r) % 2 == 1)
        .collect()
}

/// Pairs `(q, r)` whose removal from `{1, …, 2t+2}` leaves a universal set.
pub fn find_qt_rt(t: u64, mode: PairMode) -> Result<Vec<UniversalCandidate>> {
    if t < 4 || t % 2 == 1 {
        return Err(Error::Precondition(format!("t must be even and at least 4, got {t}")));
    }
    let pairs = candidate_pairs(t);
    let test = |&(q, r): &(u64, u64)| -> Result<bool> {
        let set = GeneratorSet::range_without(2 * t + 2, &[q, r])?;
        Ok(universality_obstruction(&set)?.is_none())
    };
    let accepted: Vec<(u64, u64)> = match mode {
        PairMode::First => {
            match pairs.par_iter().map(|pair| test(pair).map(|ok| ok.then_some(*pair))).find_first(
                |r| !matches!(r, Ok(None)),
            ) {
                None => Vec::new(),
                Some(r) => r?.into_iter().collect(),
            }
        }
        PairMode::All => pairs
            .par_iter()
            .map(|pair| test(pair).map(|ok| ok.then_some(*pair)))
            .collect::<Result<Vec<_>>>()?
            .into_iter()
            .flatten()
            .collect(),
    };
    accepted
        .into_iter()
        .map(|(q, r)| certify(t, vec![q, r], GeneratorSet::range_without(2 * t + 2, &[q, r])?))
        .collect()
}

/// How the generator set of a scan row was obtained.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum RowKind {
    /// `S_t` itself, certified directly.
    AlmostConsecutive,
    /// `{1, …, 2t+1} \ {p_t}` from [`find_pt`].
    OddReplacement,
    /// `{1, …, 2t+2} \ {q_t, r_t}` from [`find_qt_rt`].
    EvenPair,
    /// Nothing universal was found.
    NotFound,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ScanRecord {
    pub t: u64,
    pub closed_form_applicable: bool,
    pub kind: RowKind,
    pub removed: Vec<u64>,
    pub set_max: u64,
    pub universal: bool,
    pub degree_bound: u64,
    pub min_order: u64,
    pub scanned_b_count: usize,
}

/// One row of the scan: `S_t` when it is certified, otherwise the smallest
/// replacement.
pub fn scan_one(t: u64) -> Result<ScanRecord> {
    if t < 3 {
        return Err(Error::Precondition(format!("scan starts at t = 3, got {t}")));
    }
    let applicable = almost_consecutive_universal_class(t);
    let mut found: Option<(RowKind, UniversalCandidate)> = None;
    if applicable {
        let cand = certify(t, vec![t], GeneratorSet::almost_consecutive(t)?)?;
        if cand.report.universal {
            found = Some((RowKind::AlmostConsecutive, cand));
        }
    }
    if found.is_none() {
        found = if t % 2 == 1 {
            find_pt(t)?.map(|c| (RowKind::OddReplacement, c))
        } else {
            find_qt_rt(t, PairMode::First)?
                .into_iter()
                .next()
                .map(|c| (RowKind::EvenPair, c))
        };
    }
    Ok(match found {
        Some((kind, c)) => ScanRecord {
            t,
            closed_form_applicable: applicable,
            kind,
            removed: c.removed,
            set_max: c.set.largest(),
            universal: c.report.universal,
            degree_bound: c.report.degree_bound,
            min_order: c.report.min_order,
            scanned_b_count: c.report.scanned_b.len(),
        },
        None => ScanRecord {
            t,
            closed_form_applicable: applicable,
            kind: RowKind::NotFound,
            removed: Vec::new(),
            set_max: 0,
            universal: false,
            degree_bound: 0,
            min_order: 0,
            scanned_b_count: 0,
        },
    })
}

/// Scans `t_lo..=t_hi` on `jobs` workers, handing each record to `sink` in
/// ascending `t` as soon as its batch completes.
pub fn scan_range_with(
    t_lo: u64,
    t_hi: u64,
    jobs: usize,
    mut sink: impl FnMut(&ScanRecord) -> Result<()>,
) -> Result<()> {
    if t_lo < 3 || t_lo > t_hi {
        return Err(Error::Precondition(format!(
            "need 3 <= t_lo <= t_hi, got {t_lo}..={t_hi}"
        )));
    }
    if jobs == 0 {
        return Err(Error::Precondition("jobs must be positive".into()));
    }
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(jobs)
        .build()
        .map_err(|e| Error::Precondition(e.to_string()))?;
    let ts: Vec<u64> = (t_lo..=t_hi).collect();
    for batch in ts.chunks(jobs.max(4)) {
        let records: Vec<ScanRecord> =
            pool.install(|| batch.par_iter().map(|&t| scan_one(t)).collect::<Result<_>>())?;
        for rec in &records {
            sink(rec)?;
        }
    }
    Ok(())
}

pub fn scan_range(t_lo: u64, t_hi: u64, jobs: usize) -> Result<Vec<ScanRecord>> {
    let mut out = Vec::new();
    scan_range_with(t_lo, t_hi, jobs, |r| {
        out.push(r.clone());
        Ok(())
    })?;
    Ok(out)
}
