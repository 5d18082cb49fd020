//! Spanning-set generation for the lower central series ideals, straight
//! from the definitions: left-normed brackets of words for L_i, word
//! prefixes times those brackets for M_i = A.L_i.
//!
//! These streams are the reference spanning sets used by the property
//! checks and small-instance tests. The dimension engine reaches the same
//! spans through cached echelon bases instead (see `engine`).

use crate::algebra::AlgElement;
use crate::scalar::ExactField;
use crate::words::{ComponentBasis, MultiDegree, Word};

/// All ordered splittings of `d` into `parts` multidegrees, each of total
/// degree >= 1.
fn compositions(d: &MultiDegree, parts: usize) -> Vec<Vec<MultiDegree>> {
    fn rec(
        rest: &MultiDegree,
        parts: usize,
        acc: &mut Vec<MultiDegree>,
        out: &mut Vec<Vec<MultiDegree>>,
    ) {
        if parts == 1 {
            if rest.total() >= 1 {
                let mut v = acc.clone();
                v.push(rest.clone());
                out.push(v);
            }
            return;
        }
        for first in rest.sub_degrees() {
            let t = first.total();
            if t < 1 || t > rest.total() - (parts as u32 - 1) {
                continue;
            }
            let remaining = rest.checked_sub(&first).unwrap();
            acc.push(first);
            rec(&remaining, parts - 1, acc, out);
            acc.pop();
        }
    }
    let mut out = Vec::new();
    rec(d, parts, &mut Vec::new(), &mut out);
    out
}

/// Left-normed bracket [w_1, [w_2, ... [w_{k-1}, w_k] ... ]].
pub fn left_normed_bracket<F: ExactField>(field: &F, n: usize, args: &[Word]) -> AlgElement<F::Elem> {
    assert!(!args.is_empty());
    let mut acc = AlgElement::word(field, n, args.last().unwrap().clone());
    for w in args[..args.len() - 1].iter().rev() {
        let wi = AlgElement::word(field, n, w.clone());
        acc = wi.commutator(field, &acc);
    }
    acc
}

/// Spanning set of (L_i)_d: for i = 1 the word basis itself, for i >= 2 all
/// left-normed brackets of i nonempty words with total content d. Brackets
/// with equal innermost arguments are skipped and the innermost pair is
/// emitted in only one of its two (anti-symmetric) orders.
pub fn lie_generators<F: ExactField>(
    field: &F,
    n: usize,
    i: usize,
    d: &MultiDegree,
) -> Vec<AlgElement<F::Elem>> {
    assert!(i >= 1);
    if i == 1 {
        return ComponentBasis::build(d.clone())
            .words
            .iter()
            .map(|w| AlgElement::word(field, n, w.clone()))
            .collect();
    }
    if d.total() < i as u32 {
        return Vec::new();
    }
    let mut out = Vec::new();
    for parts in compositions(d, i) {
        let word_lists: Vec<Vec<Word>> =
            parts.iter().map(|p| ComponentBasis::build(p.clone()).words.clone()).collect();
        let mut choice = vec![0usize; i];
        'outer: loop {
            let args: Vec<Word> = (0..i).map(|k| word_lists[k][choice[k]].clone()).collect();
            // innermost antisymmetry: keep one order, skip the zero diagonal
            if args[i - 2] < args[i - 1] {
                out.push(left_normed_bracket(field, n, &args));
            }
            for k in (0..i).rev() {
                choice[k] += 1;
                if choice[k] < word_lists[k].len() {
                    continue 'outer;
                }
                choice[k] = 0;
                if k == 0 {
                    break 'outer;
                }
            }
        }
    }
    out.retain(|g| !g.is_zero());
    out
}

/// Spanning set of (M_i)_d = (A.L_i)_d: word prefixes times Lie generators.
/// With `reduced` set, prefixes are restricted to degree <= 1, which spans
/// a space W with W + M_{i+1} = M_i (valid only modulo M_{i+1}).
pub fn ideal_generators<F: ExactField>(
    field: &F,
    n: usize,
    i: usize,
    d: &MultiDegree,
    reduced: bool,
) -> Vec<AlgElement<F::Elem>> {
    assert!(i >= 2);
    let mut out = Vec::new();
    for prefix_deg in d.sub_degrees() {
        if reduced && prefix_deg.total() > 1 {
            continue;
        }
        let rest = d.checked_sub(&prefix_deg).unwrap();
        if rest.total() < i as u32 {
            continue;
        }
        let gens = lie_generators(field, n, i, &rest);
        if gens.is_empty() {
            continue;
        }
        for p in &ComponentBasis::build(prefix_deg.clone()).words {
            let pe = AlgElement::word(field, n, p.clone());
            for g in &gens {
                out.push(pe.multiply(field, g));
            }
        }
    }
    out
}
