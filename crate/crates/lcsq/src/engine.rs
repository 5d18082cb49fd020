//! The dimension engine: cached echelon bases for the (L_i)_d components,
//! left-ideal closure for (M_i)_d, and dim/Hilbert-series computation for
//! the quotients N_i = M_i/M_{i+1}.
//!
//! Spans are the same as the literal generator streams in `generators`
//! (tested against them), reached much more cheaply:
//!
//! * L_2 is spanned by single-letter brackets [x_j, w] alone, by the exact
//!   identity [uv, r] = [u, vr] + [v, ru] applied recursively to the first
//!   argument. Its rank is capped by dim - (number of cyclic word classes),
//!   since A/[A,A] is the trace space.
//! * L_{i+1} = [A, L_i] is built from brackets of words against an echelon
//!   basis of L_i rather than against raw bracket streams, and its rank is
//!   capped by rank(L_i) (the series is descending).
//! * M_i = A.L_i is a left ideal, so (M_i)_d is closed up from the
//!   immediate subdegrees: x_j . (M_i)_{d - e_j} plus the L_i seeds at d.
//! * Everything is computed at one sorted representative per permutation
//!   orbit; rows at other multidegrees are index-remapped through the
//!   letter-permutation automorphism.

use std::collections::HashMap;

use crate::echelon::{EchelonAccumulator, SparseVec};
use crate::scalar::ExactField;
use crate::series::TruncatedSeries;
use crate::words::{component_dim, degrees_of_total, BasisTable, MultiDegree};

pub struct Engine<F: ExactField> {
    field: F,
    n: usize,
    pub basis: BasisTable,
    /// echelon basis rows of (L_i)_d, keyed by level and sorted representative
    l_rows: HashMap<(usize, MultiDegree), Vec<SparseVec<F::Elem>>>,
    /// left-ideal closure of (M_i)_d, keyed by ideal index and sorted rep
    m_acc: HashMap<(usize, MultiDegree), EchelonAccumulator<F>>,
}

impl<F: ExactField> Engine<F> {
    pub fn new(field: F, n: usize, maxdeg: u32) -> Self {
        Engine {
            field,
            n,
            basis: BasisTable::build(n, maxdeg),
            l_rows: HashMap::new(),
            m_acc: HashMap::new(),
        }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn field(&self) -> &F {
        &self.field
    }

    /// Echelon basis rows of (L_i)_d at an arbitrary multidegree, remapped
    /// from the sorted representative.
    fn l_rows_at(&mut self, i: usize, d: &MultiDegree) -> Vec<SparseVec<F::Elem>> {
        let rep = d.sorted_rep();
        self.ensure_l(i, &rep);
        let rows = &self.l_rows[&(i, rep.clone())];
        if rep == *d {
            return rows.clone();
        }
        let map = self.basis.permute_map(&rep, d);
        let dim = self.basis.component(d).size();
        rows.iter().map(|r| r.remap(&map, dim)).collect()
    }

    pub fn l_rank(&mut self, i: usize, d: &MultiDegree) -> usize {
        let rep = d.sorted_rep();
        self.ensure_l(i, &rep);
        self.l_rows[&(i, rep)].len()
    }

    fn ensure_l(&mut self, i: usize, rep: &MultiDegree) {
        assert!(i >= 2);
        let key = (i, rep.clone());
        if self.l_rows.contains_key(&key) {
            return;
        }
        let rows = if rep.total() < i as u32 {
            Vec::new()
        } else if i == 2 {
            self.build_l2(rep)
        } else {
            self.build_l_next(i, rep)
        };
        self.l_rows.insert(key, rows);
    }

    /// (L_2)_d from single-letter brackets [x_j, w].
    fn build_l2(&mut self, d: &MultiDegree) -> Vec<SparseVec<F::Elem>> {
        let comp = self.basis.component(d);
        let dim = comp.size();
        let cap = (dim - comp.cyclic_classes()) as usize;
        let mut acc = EchelonAccumulator::new(self.field.clone(), dim);
        let one = self.field.one();
        let neg_one = self.field.neg(&one);
        'letters: for j in 0..self.n {
            let Some(sub) = d.minus_unit(j) else { continue };
            let prepend = self.basis.prepend_map(&sub, j as u8).to_vec();
            let append = self
                .basis
                .concat_right_map(&sub, &crate::words::Word::letter(j as u8));
            for k in 0..prepend.len() {
                let v = SparseVec::from_pairs(
                    &self.field,
                    dim,
                    vec![(prepend[k], one.clone()), (append[k], neg_one.clone())],
                );
                acc.insert(&v).expect("dimensions agree by construction");
                if acc.rank() == cap {
                    break 'letters;
                }
            }
        }
        acc.rows().to_vec()
    }

    /// (L_{i+1})_d = [A, L_i]_d from word brackets against the L_i bases.
    fn build_l_next(&mut self, i: usize, d: &MultiDegree) -> Vec<SparseVec<F::Elem>> {
        let prev = i - 1;
        self.ensure_l(prev, d);
        let cap = self.l_rows[&(prev, d.clone())].len();
        let dim = self.basis.component(d).size();
        let mut acc = EchelonAccumulator::new(self.field.clone(), dim);
        if cap == 0 {
            return Vec::new();
        }
        let mut splits: Vec<MultiDegree> = d
            .sub_degrees()
            .into_iter()
            .filter(|e| e.total() >= 1 && d.total() - e.total() >= prev as u32)
            .collect();
        splits.sort_by_key(|e| e.total());
        'splits: for e in splits {
            let rest = d.checked_sub(&e).unwrap();
            let rows = self.l_rows_at(prev, &rest);
            if rows.is_empty() {
                continue;
            }
            let words = self.basis.component(&e).words.clone();
            for w in &words {
                let left = self.basis.concat_left_map(w, &rest);
                let right = self.basis.concat_right_map(&rest, w);
                for r in &rows {
                    let mut pairs = Vec::with_capacity(2 * r.nnz());
                    for (k, v) in r.iter() {
                        pairs.push((left[k as usize], v.clone()));
                        pairs.push((right[k as usize], self.field.neg(v)));
                    }
                    let cand = SparseVec::from_pairs(&self.field, dim, pairs);
                    acc.insert(&cand).expect("dimensions agree by construction");
                    if acc.rank() == cap {
                        break 'splits;
                    }
                }
            }
        }
        acc.rows().to_vec()
    }

    fn ensure_m(&mut self, i: usize, rep: &MultiDegree) {
        assert!(i >= 2);
        let key = (i, rep.clone());
        if self.m_acc.contains_key(&key) {
            return;
        }
        let dim = self.basis.component(rep).size();
        let mut acc = EchelonAccumulator::new(self.field.clone(), dim);
        let cap = dim.saturating_sub(1) as usize; // M_i is inside M_2, of codim 1
        if rep.total() >= i as u32 && cap > 0 {
            'closure: for j in 0..self.n {
                let Some(sub) = rep.minus_unit(j) else { continue };
                for r in self.m_rows_at(i, &sub) {
                    let v = r.remap(self.basis.prepend_map(&sub, j as u8), dim);
                    acc.insert(&v).expect("dimensions agree by construction");
                    if acc.rank() == cap {
                        break 'closure;
                    }
                }
            }
            if acc.rank() < cap {
                for r in self.l_rows_at(i, rep) {
                    acc.insert(&r).expect("dimensions agree by construction");
                    if acc.rank() == cap {
                        break;
                    }
                }
            }
        }
        self.m_acc.insert(key, acc);
    }

    /// Basis rows of (M_i)_d at an arbitrary multidegree.
    fn m_rows_at(&mut self, i: usize, d: &MultiDegree) -> Vec<SparseVec<F::Elem>> {
        let rep = d.sorted_rep();
        self.ensure_m(i, &rep);
        let rows = self.m_acc[&(i, rep.clone())].rows();
        if rep == *d {
            return rows.to_vec();
        }
        let map = self.basis.permute_map(&rep, d);
        let dim = self.basis.component(d).size();
        rows.iter().map(|r| r.remap(&map, dim)).collect()
    }

    pub fn dim_m(&mut self, i: usize, d: &MultiDegree) -> u64 {
        assert!(i >= 2);
        if d.total() < i as u32 {
            return 0;
        }
        let rep = d.sorted_rep();
        self.ensure_m(i, &rep);
        self.m_acc[&(i, rep)].rank() as u64
    }

    /// dim N_m at d, by extending the M_{m+1} echelon state with the
    /// reduced (degree <= 1 prefix) spanning set of M_m mod M_{m+1}.
    pub fn dim_n(&mut self, m: usize, d: &MultiDegree) -> u64 {
        assert!(m >= 2);
        if d.total() < m as u32 {
            return 0;
        }
        let rep = d.sorted_rep();
        self.ensure_m(m + 1, &rep);
        let base = &self.m_acc[&(m + 1, rep.clone())];
        let before = base.rank();
        let dim = base.dim();
        if before as u32 == dim {
            return 0;
        }
        let mut acc = base.clone();
        for r in self.l_rows_at(m, &rep) {
            acc.insert(&r).expect("dimensions agree by construction");
        }
        for j in 0..self.n {
            let Some(sub) = rep.minus_unit(j) else { continue };
            if sub.total() < m as u32 {
                continue;
            }
            for r in self.l_rows_at(m, &sub) {
                let v = r.remap(self.basis.prepend_map(&sub, j as u8), dim);
                acc.insert(&v).expect("dimensions agree by construction");
            }
        }
        (acc.rank() - before) as u64
    }

    /// Full truncated Hilbert series of N_m, computed once per permutation
    /// orbit and copied to the rearrangements.
    pub fn hilbert_n(&mut self, m: usize, maxdeg: u32) -> TruncatedSeries {
        assert!(maxdeg <= self.basis.maxdeg, "series window beyond basis table");
        let mut out = TruncatedSeries::zero(self.n, maxdeg);
        for t in 0..=maxdeg {
            let degrees = degrees_of_total(self.n, t);
            for d in degrees.iter().filter(|d| **d == d.sorted_rep()) {
                let c = i64::try_from(self.dim_n(m, d)).expect("dimension fits in i64");
                out.set(d.clone(), c);
            }
            for d in degrees {
                let rep = d.sorted_rep();
                if d != rep {
                    let c = out.get(&rep);
                    out.set(d, c);
                }
            }
        }
        out
    }

    /// Upper bound sanity value used in tests: the full component dimension.
    pub fn component_dim(&self, d: &MultiDegree) -> u64 {
        component_dim(d)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::echelon::rank;
    use crate::generators::{ideal_generators, lie_generators};
    use crate::scalar::{PrimeField, Rationals};
    use crate::words::ComponentBasis;

    fn md(v: &[u32]) -> MultiDegree {
        MultiDegree(v.to_vec())
    }

    fn prime_engine(n: usize, maxdeg: u32) -> Engine<PrimeField> {
        Engine::new(PrimeField::new(2147483647), n, maxdeg)
    }

    #[test]
    fn l_ranks_match_literal_bracket_streams() {
        let f = Rationals;
        let mut eng = Engine::new(f, 2, 5);
        for i in 2..=4usize {
            for t in 0..=5u32 {
                for d in degrees_of_total(2, t) {
                    let comp = ComponentBasis::build(d.clone());
                    let literal = rank(
                        f,
                        comp.size(),
                        lie_generators(&f, 2, i, &d).iter().map(|g| g.to_sparse(&f, &comp)),
                    )
                    .unwrap();
                    assert_eq!(eng.l_rank(i, &d), literal, "L_{i} at {:?}", d.0);
                }
            }
        }
    }

    #[test]
    fn l_ranks_match_literal_streams_three_variables() {
        let f = Rationals;
        let mut eng = Engine::new(f, 3, 4);
        for i in 2..=3usize {
            for t in 0..=4u32 {
                for d in degrees_of_total(3, t) {
                    let comp = ComponentBasis::build(d.clone());
                    let literal = rank(
                        f,
                        comp.size(),
                        lie_generators(&f, 3, i, &d).iter().map(|g| g.to_sparse(&f, &comp)),
                    )
                    .unwrap();
                    assert_eq!(eng.l_rank(i, &d), literal, "L_{i} at {:?}", d.0);
                }
            }
        }
    }

    #[test]
    fn m_ranks_match_literal_ideal_streams() {
        let f = Rationals;
        let mut eng = Engine::new(f, 2, 5);
        for i in 2..=4usize {
            for t in 0..=5u32 {
                for d in degrees_of_total(2, t) {
                    let comp = ComponentBasis::build(d.clone());
                    let literal = rank(
                        f,
                        comp.size(),
                        ideal_generators(&f, 2, i, &d, false).iter().map(|g| g.to_sparse(&f, &comp)),
                    )
                    .unwrap();
                    assert_eq!(eng.dim_m(i, &d), literal as u64, "M_{i} at {:?}", d.0);
                }
            }
        }
    }

    #[test]
    fn dim_m_small_examples() {
        let mut eng = prime_engine(2, 4);
        assert_eq!(eng.dim_m(2, &md(&[1, 1])), 1);
        assert_eq!(eng.dim_m(2, &md(&[2, 1])), 2);
        assert_eq!(eng.dim_m(3, &md(&[1, 1])), 0);
        // A/M_2 is the polynomial ring: codimension one in every component
        for t in 1..=4u32 {
            for d in degrees_of_total(2, t) {
                assert_eq!(eng.dim_m(2, &d), component_dim(&d) - 1);
            }
        }
    }

    #[test]
    fn dim_m_is_monotone_in_i() {
        let mut eng = prime_engine(2, 6);
        for t in 0..=6u32 {
            for d in degrees_of_total(2, t) {
                for i in 2..=5usize {
                    assert!(eng.dim_m(i + 1, &d) <= eng.dim_m(i, &d));
                }
            }
        }
    }

    #[test]
    fn dim_n_small_values() {
        let mut eng = prime_engine(2, 4);
        assert_eq!(eng.dim_n(2, &md(&[1, 1])), 1);
        assert_eq!(eng.dim_n(3, &md(&[1, 1])), 0);
        assert_eq!(eng.dim_n(3, &md(&[2, 1])), 1);
        // dim_N(3, (2,2)) = 3, the (2,2)-coefficient of h_{F_(2,1)} + h_{F_(2,2)}
        assert_eq!(eng.dim_n(3, &md(&[2, 2])), 3);
    }

    #[test]
    fn dim_n_equals_difference_of_ideal_dims() {
        let mut eng = prime_engine(2, 6);
        for m in 2..=4usize {
            for t in 0..=6u32 {
                for d in degrees_of_total(2, t) {
                    let diff = eng.dim_m(m, &d) - eng.dim_m(m + 1, &d);
                    assert_eq!(eng.dim_n(m, &d), diff, "N_{m} at {:?}", d.0);
                }
            }
        }
    }

    #[test]
    fn hilbert_n_is_symmetric_and_matches_pointwise() {
        let mut eng = prime_engine(2, 5);
        let h = eng.hilbert_n(3, 5);
        assert!(h.is_symmetric());
        assert_eq!(h.get(&md(&[2, 1])), 1);
        assert_eq!(h.get(&md(&[1, 2])), 1);
        assert_eq!(h.get(&md(&[3, 0])), 0);
        for t in 0..=2u32 {
            for d in degrees_of_total(2, t) {
                assert_eq!(h.get(&d), 0);
            }
        }
    }
}
