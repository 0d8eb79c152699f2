//! Acceptance suite: thirteen end-to-end checks, one PASS/FAIL line each.
//!
//! Runs with `cargo test -p circnut-cli --test acceptance`. Exits non-zero
//! when any check fails; every check runs regardless.

use std::collections::BTreeMap;
use std::process::Command;
use std::time::{Duration, Instant};

use rayon::prelude::*;

use circnut::circulant::{is_nut, is_universal, pstar, q_poly, zero_multiplicity};
use circnut::cyclotomic::cyclotomic;
use circnut::numtheory::{analytic_totient_bound, divisors, euler_phi};
use circnut::oracle::{circulant_kernel, enumerate_balanced, oracle_is_nut};
use circnut::search::find_pt;
use circnut::theory::{
    almost_consecutive_universal_class, consecutive_block_is_nut, consecutive_nut_set,
    initial_segment_is_nut, tight_order_has_no_nut,
};
use circnut::{BigInt, GeneratorSet, IntPoly, NutReason, Q_REMAINDER_MODULI};

type Outcome = Result<String, String>;

const DATA: &str = concat!(env!("CARGO_MANIFEST_DIR"), "/tests/data");

fn data(name: &str) -> String {
    std::fs::read_to_string(format!("{DATA}/{name}")).expect("fixture present")
}

/// Rendering-insensitive form: no whitespace, no LaTeX braces.
fn normalize(s: &str) -> String {
    s.chars().filter(|c| !c.is_whitespace() && *c != '{' && *c != '}').collect()
}

fn set(v: &[u64]) -> GeneratorSet {
    GeneratorSet::new(v.to_vec()).unwrap()
}

fn circnut(args: &[&str]) -> Result<String, String> {
    let out = Command::new(env!("CARGO_BIN_EXE_circnut"))
        .args(args)
        .output()
        .map_err(|e| e.to_string())?;
    if !out.status.success() {
        return Err(format!("circnut {args:?} exited with {}", out.status));
    }
    String::from_utf8(out.stdout).map_err(|e| e.to_string())
}

/// `key: value` lines into a map.
fn parse_text_table(s: &str) -> BTreeMap<u64, String> {
    s.lines()
        .map(|l| {
            let (k, v) = l.split_once(": ").expect("row has a key");
            (k.parse().expect("numeric key"), v.to_string())
        })
        .collect()
}

/// LaTeX `k & $v$ \\` rows into a map.
fn parse_latex_rows(s: &str) -> BTreeMap<u64, String> {
    s.lines()
        .filter_map(|l| {
            let (k, rest) = l.split_once(" & $")?;
            let v = rest.strip_suffix("$ \\\\")?;
            Some((k.trim().parse().ok()?, v.to_string()))
        })
        .collect()
}

fn compare_rows(
    what: &str,
    expected: &BTreeMap<u64, String>,
    got: &BTreeMap<u64, String>,
) -> Result<(), String> {
    let ek: Vec<_> = expected.keys().collect();
    let gk: Vec<_> = got.keys().collect();
    if ek != gk {
        return Err(format!("{what}: keys {gk:?}, expected {ek:?}"));
    }
    for (k, e) in expected {
        if normalize(e) != normalize(&got[k]) {
            return Err(format!("{what} row {k}: got {:?}, expected {e:?}", got[k]));
        }
    }
    Ok(())
}

fn pstar_table() -> Outcome {
    let expected: BTreeMap<u64, String> = data("pstar_1_2_4_5_6_7.tsv")
        .lines()
        .map(|l| {
            let (b, p) = l.split_once('\t').unwrap();
            (b.parse().unwrap(), p.to_string())
        })
        .collect();
    let text = parse_text_table(&circnut(&["pstar-table", "--set", "1,2,4,5,6,7"])?);
    compare_rows("text", &expected, &text)?;
    let latex = parse_latex_rows(&circnut(&[
        "pstar-table", "--set", "1,2,4,5,6,7", "--format", "latex",
    ])?);
    compare_rows("latex", &expected, &latex)?;
    for (b, want) in [(3, "-3y"), (8, "2y^3 - y^2 + 1")] {
        if text[&b] != want {
            return Err(format!("b = {b}: {:?} is not byte-exact {want:?}", text[&b]));
        }
    }
    Ok(format!("{} rows, b = 3..42", expected.len()))
}

fn q_remainder_tables() -> Outcome {
    let mut expected: BTreeMap<u64, BTreeMap<u64, String>> = BTreeMap::new();
    for l in data("q_remainders.tsv").lines() {
        let f: Vec<&str> = l.split('\t').collect();
        expected
            .entry(f[0].parse().unwrap())
            .or_default()
            .insert(f[1].parse().unwrap(), f[2].to_string());
    }
    let moduli: Vec<u64> = expected.keys().copied().collect();
    if moduli != Q_REMAINDER_MODULI {
        return Err(format!("fixture moduli {moduli:?}"));
    }
    let mut rows = 0;
    for (b, want) in &expected {
        let bs = b.to_string();
        let text = parse_text_table(&circnut(&["q-remainder-table", "--b", &bs, "--format", "text"])?);
        compare_rows(&format!("b = {b} text"), want, &text)?;
        let latex = parse_latex_rows(&circnut(&["q-remainder-table", "--b", &bs, "--format", "latex"])?);
        compare_rows(&format!("b = {b} latex"), want, &latex)?;
        rows += want.len();
    }
    let b3 = circnut(&["q-remainder-table", "--b", "3", "--format", "text"])?;
    if b3 != "0: 6y + 3\n1: y - 1\n2: -y - 2\n" {
        return Err(format!("b = 3 block: {b3:?}"));
    }
    Ok(format!("{rows} rows over {} moduli", expected.len()))
}

fn analytic_bounds() -> Outcome {
    for (d, want) in [(14, 60), (6, 25), (16, 68)] {
        let got = analytic_totient_bound(d).map_err(|e| e.to_string())?;
        if got != want {
            return Err(format!("D = {d}: {got}, expected {want}"));
        }
    }
    Ok("D = 14, 6, 16 give 60, 25, 68".into())
}

fn universal_with_oracle(s: &GeneratorSet, from: u64) -> Result<(), String> {
    let r = is_universal(s).map_err(|e| e.to_string())?;
    if !r.universal {
        return Err(format!("{{{s}}} not universal, failing b {:?}", r.failing_b));
    }
    let bad: Vec<u64> = (from..=64)
        .step_by(2)
        .collect::<Vec<_>>()
        .into_par_iter()
        .filter(|&n| !oracle_is_nut(n, s).unwrap())
        .collect();
    if !bad.is_empty() {
        return Err(format!("oracle rejects {{{s}}} at n = {bad:?}"));
    }
    Ok(())
}

fn small_universal_sets() -> Outcome {
    universal_with_oracle(&GeneratorSet::almost_consecutive(3).unwrap(), 16)?;
    universal_with_oracle(&set(&[3, 4, 5, 8]), 18)?;
    Ok("S_3 nut for even 16..64, {3,4,5,8} for even 18..64".into())
}

fn almost_consecutive_classes() -> Outcome {
    let odd: Vec<u64> = (3..=199).step_by(2).collect();
    let problems: Vec<String> = odd
        .par_iter()
        .filter_map(|&t| {
            let r = is_universal(&GeneratorSet::almost_consecutive(t).unwrap()).unwrap();
            let mut issues = Vec::new();
            if almost_consecutive_universal_class(t) && !r.universal {
                issues.push(format!("t = {t} not universal ({:?})", r.failing_b));
            }
            if t % 10 == 1 && !r.failing_b.contains(&10) {
                issues.push(format!("t = {t} lacks failing b 10"));
            }
            if t % 18 == 15 && !r.failing_b.contains(&9) {
                issues.push(format!("t = {t} lacks failing b 9"));
            }
            (!issues.is_empty()).then(|| issues.join("; "))
        })
        .collect();
    if problems.is_empty() {
        Ok(format!("{} odd t in 3..199", odd.len()))
    } else {
        Err(problems.join("; "))
    }
}

/// Every 4-subset of `{1, …, n/2}` with two odd and two even members.
fn balanced_quads(n: u64) -> Vec<GeneratorSet> {
    let h = n / 2;
    let mut out = Vec::new();
    for a in 1..=h {
        for b in a + 1..=h {
            for c in b + 1..=h {
                for d in c + 1..=h {
                    let s = set(&[a, b, c, d]);
                    if s.is_balanced() {
                        out.push(s);
                    }
                }
            }
        }
    }
    out
}

fn alternating_up_to_sign(v: &[BigInt]) -> bool {
    let one = BigInt::from(1);
    let first = &v[0];
    (*first == one || *first == -one.clone())
        && v.iter().enumerate().all(|(i, x)| if i % 2 == 0 { x == first } else { *x == -first })
}

fn route_equivalence() -> Outcome {
    let cases: Vec<(u64, GeneratorSet)> = (8..=40)
        .step_by(2)
        .flat_map(|n| balanced_quads(n).into_iter().map(move |s| (n, s)))
        .collect();
    let mismatches: Vec<String> = cases
        .par_iter()
        .filter_map(|(n, s)| {
            let k = circulant_kernel(*n, s).unwrap();
            let v = is_nut(s, *n).unwrap();
            let m = zero_multiplicity(s, *n).unwrap();
            let mut bad = Vec::new();
            if k.full_support != v.is_nut() {
                bad.push("verdict");
            }
            if k.nullity as u64 != m {
                bad.push("multiplicity");
            }
            if k.full_support && !alternating_up_to_sign(&k.basis[0]) {
                bad.push("kernel vector");
            }
            (!bad.is_empty()).then(|| format!("n = {n}, S = {{{s}}}: {}", bad.join(",")))
        })
        .collect();
    if mismatches.is_empty() {
        let nuts = cases.iter().filter(|(n, s)| is_nut(s, *n).unwrap().is_nut()).count();
        Ok(format!("{} instances, {nuts} nut, zero mismatches", cases.len()))
    } else {
        Err(format!("{} mismatches: {}", mismatches.len(), mismatches.join("; ")))
    }
}

fn consecutive_triple_agreement() -> Outcome {
    let mut cases = Vec::new();
    for x in 1..=5u64 {
        for t in 1..=4u64 {
            for n in (2 * x + 4 * t..=60).step_by(2) {
                cases.push((n, x, t));
            }
        }
    }
    let bad: Vec<String> = cases
        .par_iter()
        .filter_map(|&(n, x, t)| {
            let s = GeneratorSet::consecutive(x, 2 * t).unwrap();
            let p = consecutive_block_is_nut(n, x, t).unwrap();
            let c = is_nut(&s, n).unwrap().is_nut();
            let o = oracle_is_nut(n, &s).unwrap();
            (p != c || c != o).then(|| format!("(n, x, t) = ({n}, {x}, {t}): {p}/{c}/{o}"))
        })
        .collect();
    if bad.is_empty() {
        Ok(format!("{} cases, zero mismatches", cases.len()))
    } else {
        Err(bad.join("; "))
    }
}

fn order_sixteen_exhaustion() -> Outcome {
    let sets = enumerate_balanced(16, 2).map_err(|e| e.to_string())?;
    if sets.len() != 18 {
        return Err(format!("{} sets, expected 18", sets.len()));
    }
    let mut seen = Vec::new();
    for s in &sets {
        let m = zero_multiplicity(s, 16).unwrap();
        let k = circulant_kernel(16, s).unwrap();
        if ![3, 5, 9].contains(&m) || k.nullity as u64 != m {
            return Err(format!("{{{s}}}: multiplicity {m}, nullity {}", k.nullity));
        }
        if is_nut(s, 16).unwrap().is_nut() || k.full_support {
            return Err(format!("{{{s}}} is nut at order 16"));
        }
        seen.push(m);
    }
    seen.sort_unstable();
    seen.dedup();
    Ok(format!("18 sets, multiplicities {seen:?}, none nut"))
}

fn tight_orders() -> Outcome {
    for t in [2, 4] {
        if !tight_order_has_no_nut(t, false).map_err(|e| e.to_string())? {
            return Err(format!("a nut graph exists at t = {t}, order {}", 4 * t + 4));
        }
    }
    let r = is_nut(&set(&[1, 2, 3, 4]), 14).unwrap().reason;
    if r != NutReason::Nut {
        return Err(format!("Circ(14, {{1,2,3,4}}): {r:?}"));
    }
    Ok("no nut at orders 12 and 20; Circ(14, {1,2,3,4}) nut".into())
}

/// `t -> removed` (empty for `S_t` rows) from the generator fixture.
fn generator_table() -> BTreeMap<u64, Vec<u64>> {
    data("generator_table.tsv")
        .lines()
        .map(|l| {
            let (t, r) = l.split_once('\t').unwrap();
            let removed = if r == "S" {
                Vec::new()
            } else {
                r.split(',').map(|x| x.parse().unwrap()).collect()
            };
            (t.parse().unwrap(), removed)
        })
        .collect()
}

fn odd_rows() -> Outcome {
    let table = generator_table();
    let sample = [3u64, 5, 7, 9, 11, 13, 15, 17, 19, 21, 31, 33, 41, 51, 63, 69, 81, 87, 105, 111];
    let mut problems = Vec::new();
    for t in sample {
        let listed = &table[&t];
        let want = if listed.is_empty() { t } else { listed[0] };
        let got = find_pt(t).map_err(|e| e.to_string())?.map(|c| c.removed[0]);
        if got != Some(want) {
            let kind = if listed.is_empty() { "S_t row" } else { "replacement row" };
            problems.push(format!("t = {t} ({kind}): smallest p = {got:?}, expected {want}"));
        }
    }
    if problems.is_empty() {
        Ok(format!("{} sampled t", sample.len()))
    } else {
        Err(problems.join("; "))
    }
}

fn even_rows() -> Outcome {
    let table = generator_table();
    let sample: Vec<u64> = (4..=30).step_by(2).collect();
    for &t in &sample {
        let removed = &table[&t];
        let (q, r) = (removed[0], removed[1]);
        if q >= r || (q + r) % 2 == 0 {
            return Err(format!("t = {t}: listed pair ({q}, {r}) malformed"));
        }
        let s = GeneratorSet::range_without(2 * t + 2, removed).unwrap();
        let rep = is_universal(&s).unwrap();
        if !rep.universal {
            return Err(format!("t = {t}: pair ({q}, {r}) fails at b {:?}", rep.failing_b));
        }
    }
    Ok(format!("{} listed pairs certified", sample.len()))
}

fn regular_spot_checks() -> Outcome {
    for n in (8..=60).step_by(2) {
        let s = if initial_segment_is_nut(n, 4).unwrap() {
            set(&[1, 2])
        } else {
            consecutive_nut_set(n, 1).ok_or(format!("no construction at n = {n}"))?
        };
        let x = s.elements()[0];
        if !consecutive_block_is_nut(n, x, 1).unwrap() || !oracle_is_nut(n, &s).unwrap() {
            return Err(format!("4-regular: {{{s}}} not nut at n = {n}"));
        }
    }
    if !oracle_is_nut(14, &set(&[1, 2, 3, 4])).unwrap() {
        return Err("8-regular: order 14".into());
    }
    let h: Vec<u64> = (1..=7).collect();
    for a in 0..7 {
        for b in a + 1..7 {
            for c in b + 1..7 {
                for d in c + 1..7 {
                    let s = set(&[h[a], h[b], h[c], h[d]]);
                    if oracle_is_nut(16, &s).unwrap() {
                        return Err(format!("8-regular: {{{s}}} nut at order 16"));
                    }
                }
            }
        }
    }
    let t = set(&[3, 4, 5, 8]);
    for n in (18..=60).step_by(2) {
        if !oracle_is_nut(n, &t).unwrap() {
            return Err(format!("8-regular: {{3,4,5,8}} not nut at n = {n}"));
        }
    }
    Ok("4-regular at even 8..60; 8-regular at 14, none at 16, {3,4,5,8} at 18..60".into())
}

fn structural_identities() -> Outcome {
    let x_minus_one = IntPoly::from_i64s(&[-1, 1]);
    for t in 2..=200 {
        let lhs = &x_minus_one * &pstar(&GeneratorSet::almost_consecutive(t).unwrap());
        if lhs != q_poly(t).unwrap() {
            return Err(format!("eight-term identity fails at t = {t}"));
        }
    }
    for n in 1..=200u64 {
        let prod = divisors(n)
            .unwrap()
            .into_iter()
            .fold(IntPoly::one(), |acc, d| &acc * &cyclotomic(d).unwrap());
        if prod != IntPoly::x_pow_minus_one(n as usize) {
            return Err(format!("divisor product fails at n = {n}"));
        }
    }
    for b in 1..=2000u64 {
        if cyclotomic(b).unwrap().degree() != Some(euler_phi(b).unwrap() as usize) {
            return Err(format!("degree of cyclotomic {b} is not its totient"));
        }
    }
    Ok("t <= 200, n <= 200, b <= 2000".into())
}

struct Criterion {
    id: u32,
    name: &'static str,
    budget: Duration,
    run: fn() -> Outcome,
}

fn main() {
    let secs = Duration::from_secs;
    let criteria = [
        Criterion { id: 1, name: "P* remainder table for {1,2,4,5,6,7}", budget: secs(1), run: pstar_table },
        Criterion { id: 2, name: "eight-term remainder tables", budget: secs(5), run: q_remainder_tables },
        Criterion { id: 3, name: "analytic totient bounds", budget: secs(1), run: analytic_bounds },
        Criterion { id: 4, name: "small universal sets with oracle", budget: secs(60), run: small_universal_sets },
        Criterion { id: 5, name: "almost-consecutive sets, odd t <= 199", budget: secs(300), run: almost_consecutive_classes },
        Criterion { id: 6, name: "oracle and cyclotomic routes agree", budget: secs(600), run: route_equivalence },
        Criterion { id: 7, name: "consecutive block criterion triple agreement", budget: secs(300), run: consecutive_triple_agreement },
        Criterion { id: 8, name: "order-16 exhaustion", budget: secs(10), run: order_sixteen_exhaustion },
        Criterion { id: 9, name: "tight orders 12 and 20", budget: secs(120), run: tight_orders },
        Criterion { id: 10, name: "generator table, odd rows", budget: secs(600), run: odd_rows },
        Criterion { id: 11, name: "generator table, even rows", budget: secs(600), run: even_rows },
        Criterion { id: 12, name: "4- and 8-regular spot checks", budget: secs(300), run: regular_spot_checks },
        Criterion { id: 13, name: "structural identities", budget: secs(60), run: structural_identities },
    ];
    let filter: Vec<u32> = std::env::args().skip(1).filter_map(|a| a.parse().ok()).collect();
    let mut failed = 0;
    for c in criteria.iter().filter(|c| filter.is_empty() || filter.contains(&c.id)) {
        let start = Instant::now();
        let outcome = (c.run)();
        let elapsed = start.elapsed();
        let outcome = match outcome {
            Ok(msg) if elapsed > c.budget => {
                Err(format!("{msg}; took {elapsed:.2?}, budget {:?}", c.budget))
            }
            other => other,
        };
        match outcome {
            Ok(msg) => println!("criterion {:>2} PASS [{elapsed:>9.2?}] {}: {msg}", c.id, c.name),
            Err(msg) => {
                failed += 1;
                println!("criterion {:>2} FAIL [{elapsed:>9.2?}] {}: {msg}", c.id, c.name);
            }
        }
    }
    println!("acceptance: {failed} failed");
    if failed > 0 {
        std::process::exit(1);
    }
}
