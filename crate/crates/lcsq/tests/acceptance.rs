//! Acceptance suite: one test per criterion, each printing a single
//! PASS/FAIL line (visible with --nocapture; the test verdict itself
//! carries the same information).
//!
//! The expensive Hilbert-series computations are shared across criteria
//! through a lazily initialized table, so the full suite performs each
//! (n, m) computation exactly once.

use std::collections::BTreeMap;

use once_cell::sync::Lazy;

use lcsq::checks::{lemma21_suite, mjk_suite, theorem12_suite};
use lcsq::decompose::{decompose, verify_bound, JhSeries};
use lcsq::driver::{Driver, ScalarMode};
use lcsq::generators::ideal_generators;
use lcsq::partition::Partition;
use lcsq::scalar::{ExactField, PrimeField, Rationals};
use lcsq::series::TruncatedSeries;
use lcsq::sympoly::{schur, schur_by_tableaux};
use lcsq::tables::published_table;
use lcsq::tensor::{enumerate_labels, hilbert_f, lambda_bound};
use lcsq::words::{degrees_of_total, ComponentBasis, MultiDegree};

const SEED: u64 = 42;

/// All (n, m) cases with published decompositions, with the truncation
/// window used for each: n = 2 runs to bound + 2 so the stability
/// criterion can reuse the same series.
const CASES: [(usize, u32); 9] =
    [(2, 3), (2, 4), (2, 5), (2, 6), (2, 7), (3, 3), (3, 4), (4, 3), (4, 4)];

fn window(n: usize, m: u32) -> u32 {
    let b = lambda_bound(m, n);
    if n == 2 { b + 2 } else { b }
}

struct Computed {
    series: BTreeMap<(usize, u32), TruncatedSeries>,
    prime_failures: Vec<String>,
}

static COMPUTED: Lazy<Computed> = Lazy::new(|| {
    let mut series = BTreeMap::new();
    let mut prime_failures = Vec::new();
    for n in [2usize, 3, 4] {
        let maxdeg = CASES
            .iter()
            .filter(|&&(cn, _)| cn == n)
            .map(|&(_, m)| window(n, m))
            .max()
            .unwrap();
        let mut driver = Driver::new(n, maxdeg, ScalarMode::seeded(SEED));
        for &(cn, m) in CASES.iter().filter(|&&(cn, _)| cn == n) {
            match driver.hilbert_n(m as usize, window(cn, m)) {
                Ok(h) => {
                    series.insert((cn, m), h);
                }
                Err(e) => prime_failures.push(format!("n={cn} m={m}: {e}")),
            }
        }
    }
    Computed { series, prime_failures }
});

fn computed_jh(n: usize, m: u32) -> JhSeries {
    let h = COMPUTED.series.get(&(n, m)).expect("series computed without prime disagreement");
    decompose(&h.truncate(lambda_bound(m, n)), m, n).expect("decomposition succeeds")
}

fn render(jh: &JhSeries) -> String {
    jh.entries
        .iter()
        .map(|(l, &c)| {
            let body = l.display(jh.n);
            if c == 1 { body } else { format!("{c}{body}") }
        })
        .collect::<Vec<_>>()
        .join(" + ")
}

fn report(criterion: u32, ok: bool, detail: &str) {
    let verdict = if ok { "PASS" } else { "FAIL" };
    println!("[criterion {criterion}] {verdict}: {detail}");
    assert!(ok, "[criterion {criterion}] FAIL: {detail}");
}

#[test]
fn criterion_01_published_tables_n2() {
    let mut bad = Vec::new();
    for m in 3..=7u32 {
        let got = computed_jh(2, m);
        let want = published_table(2, m).unwrap();
        if got.entries != want.entries {
            bad.push(format!("m={m}: computed {} vs published {}", render(&got), render(&want)));
        }
    }
    report(1, bad.is_empty(), &format!("n=2 decompositions m=3..7 match published tables {}", bad.join("; ")));
}

#[test]
fn criterion_02_published_tables_n3() {
    let mut bad = Vec::new();
    for m in [3u32, 4] {
        let got = computed_jh(3, m);
        let want = published_table(3, m).unwrap();
        if got.entries != want.entries {
            bad.push(format!("m={m}: computed {} vs published {}", render(&got), render(&want)));
        }
    }
    // Known discrepancy at m = 4: the published table lists (2,2,2) where
    // the computed decomposition has (2,1,1). The computed series is
    // certified independently: the degree-4 slice of N_4 over 3 generators
    // equals the degree-4 Lie component, of dimension (3^4 - 3^2)/4 = 18 =
    // dim s_(3,1) + dim s_(2,1,1), while the published table accounts for
    // only 15; the multigraded Witt count at (2,1,1) gives 12/4 = 3 =
    // dim M_4 there with M_5 vanishing; and the published n=4 table does
    // contain the matching (2,1,1,0) term. The printed (2,2,2) appears to
    // be a misprint for (2,1,1). The check is intentionally kept verbatim.
    report(2, bad.is_empty(), &format!("n=3 decompositions m=3,4 match published tables {}", bad.join("; ")));
}

#[test]
fn criterion_03_published_tables_n4() {
    let mut bad = Vec::new();
    for m in [3u32, 4] {
        let got = computed_jh(4, m);
        let want = published_table(4, m).unwrap();
        if got.entries != want.entries {
            bad.push(format!("m={m}: computed {} vs published {}", render(&got), render(&want)));
        }
    }
    // The m = 3 row doubles as the independently reported N_3 table.
    //
    // Known discrepancy at m = 4, of the same shape as the n = 3 one: the
    // published table lists (2,2,2,0) where the computed decomposition has
    // (2,2,1,0). The engine's dimension at multidegree (2,2,1,0) is 11,
    // reproduced independently by a rational-arithmetic rank of the literal
    // generator streams (dim M_4 = 17, dim M_5 = 6), while the published
    // constituents only account for 10 there. The check is kept verbatim.
    report(3, bad.is_empty(), &format!("n=4 decompositions m=3,4 match published tables {}", bad.join("; ")));
}

#[test]
fn criterion_04_degree_bound() {
    let mut bad = Vec::new();
    for &(n, m) in &CASES {
        let jh = computed_jh(n, m);
        if !verify_bound(&jh) {
            bad.push(format!("bound violated at n={n} m={m}"));
        }
    }
    for (m, top) in [(3u32, vec![2, 2]), (5, vec![4, 4]), (7, vec![6, 6])] {
        let jh = computed_jh(2, m);
        let bound = lambda_bound(m, 2);
        if jh.max_norm() != bound {
            bad.push(format!("n=2 m={m}: max |lambda| = {} != bound {bound}", jh.max_norm()));
        }
        if !jh.entries.contains_key(&Partition::new(top.clone())) {
            bad.push(format!("n=2 m={m}: extremal term {top:?} missing"));
        }
    }
    report(4, bad.is_empty(), &format!("|lambda| bound holds everywhere and is attained at n=2, m=3,5,7 {}", bad.join("; ")));
}

#[test]
fn criterion_05_lemma21_suite() {
    let r = lemma21_suite(Rationals, SEED, 100);
    report(
        5,
        r.passed(),
        &format!("Lemma 2.1 membership for {} seeded instances over the rationals (failures: {:?})", r.total, r.failures),
    );
}

#[test]
fn criterion_06_theorem12_suite() {
    let ScalarMode::TwoPrimes(p1, p2) = ScalarMode::seeded(SEED) else { unreachable!() };
    let mut bad = Vec::new();
    let mut total = 0;
    for p in [p1, p2] {
        let r = theorem12_suite(PrimeField::new(p), &[2, 3], &[2, 3, 4], 7);
        total = r.total;
        bad.extend(r.failures.into_iter().map(|f| format!("p={p}: {f}")));
    }
    report(
        6,
        bad.is_empty(),
        &format!("Theorem 1.2 for all {} components, n in {{2,3}}, i in {{2,3,4}}, total degree <= 7, under both primes (failures: {bad:?})", total),
    );
}

#[test]
fn criterion_07_theorem26_suite() {
    let r = mjk_suite(Rationals, &[(2, 3), (3, 2), (3, 3)], 6);
    report(
        7,
        r.passed(),
        &format!("Theorem 2.6 product containment over {} (j,k,degree) grids at n=2 (failures: {:?})", r.total, r.failures),
    );
}

/// Dense Gaussian elimination over an exact field; the independent rank
/// oracle for criterion 8.
fn dense_rank<F: ExactField>(field: &F, mut rows: Vec<Vec<F::Elem>>) -> usize {
    let width = rows.first().map_or(0, |r| r.len());
    let mut rank = 0;
    for col in 0..width {
        let Some(pos) = (rank..rows.len()).find(|&r| !field.is_zero(&rows[r][col])) else {
            continue;
        };
        rows.swap(rank, pos);
        let inv = field.inv(&rows[rank][col].clone());
        for c in col..width {
            rows[rank][c] = field.mul(&rows[rank][c], &inv);
        }
        for r in 0..rows.len() {
            if r != rank && !field.is_zero(&rows[r][col]) {
                let f = rows[r][col].clone();
                for c in col..width {
                    let t = field.sub(&rows[r][c], &field.mul(&f, &rows[rank][c]));
                    rows[r][c] = t;
                }
            }
        }
        rank += 1;
        if rank == rows.len() {
            break;
        }
    }
    rank
}

/// Dimension of the span of the literal M_i generator stream at one
/// multidegree, computed densely over the rationals.
fn dense_ideal_rank(n: usize, i: usize, d: &MultiDegree) -> u64 {
    let f = Rationals;
    let comp = ComponentBasis::build(d.clone());
    let rows: Vec<Vec<_>> = ideal_generators(&f, n, i, d, false)
        .iter()
        .map(|g| {
            let sv = g.to_sparse(&f, &comp);
            let mut dense = vec![f.zero(); comp.size() as usize];
            for (idx, v) in sv.iter() {
                dense[idx as usize] = v.clone();
            }
            dense
        })
        .collect();
    dense_rank(&f, rows) as u64
}

/// Closed k-forms at one multidegree, by brute force: the kernel of the de
/// Rham differential on monomial k-forms, with deg(dx_i) = deg(x_i).
fn closed_forms_dim(n: usize, k: usize, d: &MultiDegree) -> u64 {
    let subsets = |k: usize| -> Vec<Vec<usize>> {
        let mut out = Vec::new();
        let mut cur = Vec::new();
        fn go(start: usize, n: usize, k: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
            if cur.len() == k {
                out.push(cur.clone());
                return;
            }
            for i in start..n {
                cur.push(i);
                go(i + 1, n, k, cur, out);
                cur.pop();
            }
        }
        go(0, n, k, &mut cur, &mut out);
        out
    };
    let fits = |s: &[usize]| s.iter().all(|&i| d.0[i] >= 1);
    let domain: Vec<Vec<usize>> = subsets(k).into_iter().filter(|s| fits(s)).collect();
    let codomain: Vec<Vec<usize>> = subsets(k + 1).into_iter().filter(|s| fits(s)).collect();
    let f = Rationals;
    let mut rows = Vec::new();
    for s in &domain {
        // d(x^a dx_S) with a = d - e_S: sum over i not in S of
        // a_i x^(a - e_i) dx_i wedge dx_S
        let mut row = vec![f.zero(); codomain.len()];
        for i in 0..n {
            if s.contains(&i) {
                continue;
            }
            let a_i = d.0[i] - s.iter().filter(|&&j| j == i).count() as u32;
            if a_i == 0 {
                continue;
            }
            let mut t: Vec<usize> = s.iter().copied().chain([i]).collect();
            t.sort_unstable();
            let pos = codomain.iter().position(|c| *c == t).expect("image subset fits d");
            let sign = s.iter().filter(|&&j| j < i).count();
            let c = if sign % 2 == 0 { a_i as i64 } else { -(a_i as i64) };
            row[pos] = f.add(&row[pos], &f.from_i64(c));
        }
        rows.push(row);
    }
    (domain.len() - dense_rank(&f, rows)) as u64
}

#[test]
fn criterion_08_oracle_equivalences() {
    let mut bad = Vec::new();

    // Schur polynomials against direct semistandard-tableaux enumeration.
    for n in 1..=4usize {
        for lambda in enumerate_labels(n, 6) {
            if schur(&lambda, n) != schur_by_tableaux(&lambda, n) {
                bad.push(format!("schur mismatch at n={n} lambda={:?}", lambda.parts()));
            }
        }
    }

    // Column-shape Hilbert series against the de Rham kernel oracle.
    for n in 2..=3usize {
        for k in 0..n {
            let h = hilbert_f(&Partition::new(vec![1; k]), n, 6).unwrap();
            for t in 0..=6u32 {
                for d in degrees_of_total(n, t) {
                    let want = closed_forms_dim(n, k, &d);
                    if h.get(&d) != want as i64 {
                        bad.push(format!(
                            "closed {k}-forms at n={n} d={:?}: series {} vs kernel {want}",
                            d.0,
                            h.get(&d)
                        ));
                    }
                }
            }
        }
    }

    // Engine dim_N against a from-scratch dense rational rank oracle.
    let mut exact = Driver::new(2, 6, ScalarMode::Exact);
    for m in [2usize, 3, 4] {
        for t in 0..=6u32 {
            for d in degrees_of_total(2, t) {
                let want = dense_ideal_rank(2, m, &d) - dense_ideal_rank(2, m + 1, &d);
                let (_, _, got) = exact.dims(m, &d).unwrap();
                if got != want {
                    bad.push(format!("dim_N at m={m} d={:?}: engine {got} vs oracle {want}", d.0));
                }
            }
        }
    }

    report(8, bad.is_empty(), &format!("schur/tableaux, de Rham kernel, and dense rational rank oracles all agree {}", bad.join("; ")));
}

#[test]
fn criterion_09_modular_soundness() {
    let mut bad: Vec<String> = COMPUTED.prime_failures.clone();

    // On the criterion-8 grid, the double-prime mode must reproduce the
    // exact-rational dimensions (the double-prime internal agreement is
    // checked inside Driver::dims).
    let mut fast = Driver::new(2, 6, ScalarMode::seeded(SEED));
    let mut exact = Driver::new(2, 6, ScalarMode::Exact);
    for m in [2usize, 3, 4] {
        for t in 0..=6u32 {
            for d in degrees_of_total(2, t) {
                match fast.dims(m, &d) {
                    Ok(a) => {
                        let b = exact.dims(m, &d).unwrap();
                        if a != b {
                            bad.push(format!("m={m} d={:?}: modular {a:?} vs exact {b:?}", d.0));
                        }
                    }
                    Err(e) => bad.push(format!("m={m} d={:?}: {e}", d.0)),
                }
            }
        }
    }
    report(9, bad.is_empty(), &format!("all ranks agree between the two default primes and with exact mode on the oracle grid {}", bad.join("; ")));
}

#[test]
fn criterion_10_stability() {
    let mut bad = Vec::new();
    for m in 3..=7u32 {
        let bound = lambda_bound(m, 2);
        let h = &COMPUTED.series[&(2, m)];
        let at_bound = decompose(&h.truncate(bound), m, 2);
        let extended = decompose(h, m, 2);
        match (at_bound, extended) {
            (Ok(a), Ok(b)) => {
                if a.entries != b.entries {
                    bad.push(format!("m={m}: D={bound} gives {} but D={} gives {}", render(&a), bound + 2, render(&b)));
                }
            }
            (a, b) => bad.push(format!("m={m}: decompose failed ({:?} / {:?})", a.err(), b.err())),
        }
    }
    report(10, bad.is_empty(), &format!("n=2 decompositions identical at D=bound and D=bound+2 with zero residue {}", bad.join("; ")));
}
