//! Executable forms of the paper-level membership statements: the Lemma 2.1
//! rewriting identity, the Theorem 1.2 reduced-prefix spanning property,
//! and the Theorem 2.6 product containment M_j M_k in M_{j+k-1}.

use std::collections::HashMap;

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::algebra::AlgElement;
use crate::echelon::EchelonAccumulator;
use crate::engine::Engine;
use crate::generators::ideal_generators;
use crate::scalar::ExactField;
use crate::words::{degrees_of_total, ComponentBasis, MultiDegree, Word};

/// Cached spans of (M_i)_d built from the literal unreduced generator
/// streams, for repeated membership tests.
pub struct SpanCache<F: ExactField> {
    field: F,
    n: usize,
    spans: HashMap<(usize, MultiDegree), EchelonAccumulator<F>>,
}

impl<F: ExactField> SpanCache<F> {
    pub fn new(field: F, n: usize) -> Self {
        SpanCache { field, n, spans: HashMap::new() }
    }

    fn span(&mut self, i: usize, d: &MultiDegree) -> &EchelonAccumulator<F> {
        let key = (i, d.clone());
        if !self.spans.contains_key(&key) {
            let comp = ComponentBasis::build(d.clone());
            let mut acc = EchelonAccumulator::new(self.field.clone(), comp.size());
            for g in ideal_generators(&self.field, self.n, i, d, false) {
                acc.insert(&g.to_sparse(&self.field, &comp))
                    .expect("dimensions agree by construction");
            }
            self.spans.insert(key.clone(), acc);
        }
        &self.spans[&key]
    }

    pub fn is_member(&mut self, i: usize, v: &AlgElement<F::Elem>) -> bool {
        if v.is_zero() {
            return true;
        }
        let d = v.degree.clone();
        let comp = ComponentBasis::build(d.clone());
        let vec = v.to_sparse(&self.field, &comp);
        self.span(i, &d)
            .is_member(&vec)
            .expect("dimensions agree by construction")
    }
}

/// Lemma 2.1: yx[a,b] = x[ya,b] + y[xa,b] - [xya,b] modulo A.L_{i+1}, for
/// b in L_{i-1}. Returns membership of the difference in the span of the
/// unreduced M_{i+1} generators.
pub fn check_lemma21<F: ExactField>(
    cache: &mut SpanCache<F>,
    x: &Word,
    y: &Word,
    a: &Word,
    b: &AlgElement<F::Elem>,
    i: usize,
) -> bool {
    assert!(i >= 2);
    let f = cache.field.clone();
    let n = cache.n;
    let word = |w: &Word| AlgElement::word(&f, n, w.clone());
    let bracket = |w: Word| word(&w).commutator(&f, b);
    let t1 = word(&y.concat(x)).multiply(&f, &bracket(a.clone()));
    let t2 = word(x).multiply(&f, &bracket(y.concat(a)));
    let t3 = word(y).multiply(&f, &bracket(x.concat(a)));
    let t4 = bracket(x.concat(&y.concat(a)));
    let v = t1.sub(&f, &t2).sub(&f, &t3).add(&f, &t4);
    cache.is_member(i + 1, &v)
}

/// Theorem 1.2: the degree-<=-1 prefixes suffice modulo M_{i+1}. Checked as
/// agreement of the engine's reduced-extension count with the difference of
/// the two full ideal dimensions, which are computed independently.
pub fn check_theorem12<F: ExactField>(engine: &mut Engine<F>, i: usize, d: &MultiDegree) -> bool {
    engine.dim_n(i, d) == engine.dim_m(i, d) - engine.dim_m(i + 1, d)
}

/// Theorem 2.6: every product of an M_j element and an M_k element lies in
/// M_{j+k-1} when j or k is odd. Checked over all degree splits of the
/// literal generator streams.
pub fn check_mjk<F: ExactField>(
    cache: &mut SpanCache<F>,
    j: usize,
    k: usize,
    d: &MultiDegree,
) -> bool {
    assert!(j % 2 == 1 || k % 2 == 1);
    let f = cache.field.clone();
    let n = cache.n;
    for e in d.sub_degrees() {
        let rest = d.checked_sub(&e).unwrap();
        if e.total() < j as u32 || rest.total() < k as u32 {
            continue;
        }
        let left = ideal_generators(&f, n, j, &e, false);
        let right = ideal_generators(&f, n, k, &rest, false);
        for u in &left {
            for v in &right {
                if !cache.is_member(j + k - 1, &u.multiply(&f, v)) {
                    return false;
                }
            }
        }
    }
    true
}

/// One randomly drawn Lemma 2.1 instance.
pub struct Lemma21Instance {
    pub n: usize,
    pub i: usize,
    pub x: Word,
    pub y: Word,
    pub a: Word,
    pub b_args: Vec<Word>,
}

impl Lemma21Instance {
    pub fn describe(&self) -> String {
        format!(
            "n={} i={} x={:?} y={:?} a={:?} b={:?}",
            self.n, self.i, self.x.0, self.y.0, self.a.0,
            self.b_args.iter().map(|w| w.0.clone()).collect::<Vec<_>>()
        )
    }
}

fn random_word<R: Rng>(rng: &mut R, n: usize, len: usize) -> Word {
    Word((0..len).map(|_| rng.gen_range(0..n as u8)).collect())
}

/// Seeded instance stream for the Lemma 2.1 suite: n in {2,3}, i in {2,3},
/// total degree <= max_total.
pub fn lemma21_instances(seed: u64, count: usize, max_total: usize) -> Vec<Lemma21Instance> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut out = Vec::with_capacity(count);
    while out.len() < count {
        let n = *[2usize, 3].choose(&mut rng).unwrap();
        let i = *[2usize, 3].choose(&mut rng).unwrap();
        // b is a left-normed bracket of i-1 nonempty words (a single word
        // for i = 2), so it needs at least i-1 letters
        let b_min = i - 1;
        let budget = max_total - 3 - b_min; // three length-1 slots for x, y, a
        let lx = 1 + rng.gen_range(0..=budget);
        let ly = 1 + rng.gen_range(0..=budget - (lx - 1));
        let la = 1 + rng.gen_range(0..=budget - (lx - 1) - (ly - 1));
        let lb = b_min + rng.gen_range(0..=budget - (lx - 1) - (ly - 1) - (la - 1));
        let b_args = if i == 2 {
            vec![random_word(&mut rng, n, lb)]
        } else {
            let split = rng.gen_range(1..lb);
            vec![random_word(&mut rng, n, split), random_word(&mut rng, n, lb - split)]
        };
        out.push(Lemma21Instance {
            n,
            i,
            x: random_word(&mut rng, n, lx),
            y: random_word(&mut rng, n, ly),
            a: random_word(&mut rng, n, la),
            b_args,
        });
    }
    out
}

/// Outcome of a property-suite run: which instances failed, out of how many.
pub struct SuiteReport {
    pub total: usize,
    pub failures: Vec<String>,
}

impl SuiteReport {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }
}

/// Criterion grid for Lemma 2.1: `count` seeded instances, all expected true.
pub fn lemma21_suite<F: ExactField>(field: F, seed: u64, count: usize) -> SuiteReport {
    let mut caches: HashMap<usize, SpanCache<F>> = HashMap::new();
    let instances = lemma21_instances(seed, count, 6);
    let mut failures = Vec::new();
    for inst in &instances {
        let cache = caches
            .entry(inst.n)
            .or_insert_with(|| SpanCache::new(field.clone(), inst.n));
        let f = field.clone();
        let b = crate::generators::left_normed_bracket(&f, inst.n, &inst.b_args);
        if !check_lemma21(cache, &inst.x, &inst.y, &inst.a, &b, inst.i) {
            failures.push(inst.describe());
        }
    }
    SuiteReport { total: instances.len(), failures }
}

/// Criterion grid for Theorem 1.2: all multidegrees of total <= max_total,
/// n in `ns`, i in `is_`.
pub fn theorem12_suite<F: ExactField>(
    field: F,
    ns: &[usize],
    is_: &[usize],
    max_total: u32,
) -> SuiteReport {
    let mut total = 0;
    let mut failures = Vec::new();
    for &n in ns {
        let mut engine = Engine::new(field.clone(), n, max_total);
        for &i in is_ {
            for t in 0..=max_total {
                for d in degrees_of_total(n, t) {
                    total += 1;
                    if !check_theorem12(&mut engine, i, &d) {
                        failures.push(format!("n={n} i={i} d={:?}", d.0));
                    }
                }
            }
        }
    }
    SuiteReport { total, failures }
}

/// Criterion grid for Theorem 2.6: (j,k) pairs at n=2, total <= max_total.
pub fn mjk_suite<F: ExactField>(field: F, pairs: &[(usize, usize)], max_total: u32) -> SuiteReport {
    let mut cache = SpanCache::new(field, 2);
    let mut total = 0;
    let mut failures = Vec::new();
    for &(j, k) in pairs {
        for t in 0..=max_total {
            for d in degrees_of_total(2, t) {
                total += 1;
                if !check_mjk(&mut cache, j, k, &d) {
                    failures.push(format!("j={j} k={k} d={:?}", d.0));
                }
            }
        }
    }
    SuiteReport { total, failures }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::{PrimeField, Rationals};

    #[test]
    fn lemma21_explicit_instance() {
        // x = y = a = x1, b = [x1, x2], i = 2
        let f = Rationals;
        let mut cache = SpanCache::new(f, 2);
        let b = AlgElement::word(&f, 2, Word(vec![0]))
            .commutator(&f, &AlgElement::word(&f, 2, Word(vec![1])));
        let l = Word(vec![0]);
        assert!(check_lemma21(&mut cache, &l, &l, &l, &b, 2));
    }

    #[test]
    fn lemma21_zero_difference_is_trivially_member() {
        let f = Rationals;
        let mut cache = SpanCache::new(f, 2);
        // x = y makes the expression symmetric enough to stay small but
        // nonzero; the true zero case is b with equal bracket arguments
        let b = AlgElement::word(&f, 2, Word(vec![0]))
            .commutator(&f, &AlgElement::word(&f, 2, Word(vec![0])));
        assert!(b.is_zero());
        assert!(check_lemma21(&mut cache, &Word(vec![1]), &Word(vec![1]), &Word(vec![0]), &b, 2));
    }

    #[test]
    fn lemma21_rational_subgrid() {
        let report = lemma21_suite(Rationals, 42, 12);
        assert!(report.passed(), "failures: {:?}", report.failures);
    }

    #[test]
    fn theorem12_small_grid_exact() {
        let report = theorem12_suite(Rationals, &[2], &[2, 3], 5);
        assert!(report.passed(), "failures: {:?}", report.failures);
    }

    #[test]
    fn theorem12_single_case() {
        let mut engine = Engine::new(PrimeField::new(2147483647), 2, 3);
        assert!(check_theorem12(&mut engine, 2, &MultiDegree(vec![2, 1])));
        assert!(check_theorem12(&mut engine, 3, &MultiDegree(vec![1, 1])));
    }

    #[test]
    fn mjk_small_grid() {
        let report = mjk_suite(PrimeField::new(2147483647), &[(3, 2)], 5);
        assert!(report.passed(), "failures: {:?}", report.failures);
    }

    #[test]
    fn instance_stream_is_deterministic_and_in_budget() {
        let a = lemma21_instances(7, 20, 6);
        let b = lemma21_instances(7, 20, 6);
        for (u, v) in a.iter().zip(b.iter()) {
            assert_eq!(u.describe(), v.describe());
            let total = u.x.len()
                + u.y.len()
                + u.a.len()
                + u.b_args.iter().map(|w| w.len()).sum::<usize>();
            assert!(total <= 6);
            assert!(u.b_args.len() == u.i - 1);
        }
    }
}
