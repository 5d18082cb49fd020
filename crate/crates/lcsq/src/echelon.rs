//! Sparse vectors and incremental row-echelon accumulation.
//!
//! Rows are streamed in, reduced against the stored pivot rows, and either
//! absorbed (rank grows by one) or discarded. The accumulator maintains a
//! fully reduced echelon form: every stored row has entry 1 at its pivot
//! column and zeros at every other pivot column. That keeps rows short when
//! the corank is small, which is the common case for the big components.

use crate::error::LcsError;
use crate::scalar::ExactField;

/// Sparse vector over a fixed ambient basis; indices strictly increasing,
/// no stored zeros.
#[derive(Clone, Debug, PartialEq)]
pub struct SparseVec<E> {
    dim: u32,
    idx: Vec<u32>,
    val: Vec<E>,
}

impl<E: Clone + PartialEq> SparseVec<E> {
    /// Entries must be sorted by strictly increasing index and nonzero.
    pub fn new(dim: u32, idx: Vec<u32>, val: Vec<E>) -> Self {
        debug_assert_eq!(idx.len(), val.len());
        debug_assert!(idx.windows(2).all(|w| w[0] < w[1]));
        debug_assert!(idx.iter().all(|&i| i < dim));
        SparseVec { dim, idx, val }
    }

    pub fn zero(dim: u32) -> Self {
        SparseVec { dim, idx: Vec::new(), val: Vec::new() }
    }

    /// Collects unsorted (index, coefficient) pairs, combining duplicates
    /// and dropping zeros.
    pub fn from_pairs<F: ExactField<Elem = E>>(
        field: &F,
        dim: u32,
        mut pairs: Vec<(u32, E)>,
    ) -> Self {
        pairs.sort_unstable_by_key(|(i, _)| *i);
        let mut idx = Vec::with_capacity(pairs.len());
        let mut val: Vec<E> = Vec::with_capacity(pairs.len());
        for (i, c) in pairs {
            if let (Some(last), Some(lv)) = (idx.last(), val.last_mut()) {
                if *last == i {
                    *lv = field.add(lv, &c);
                    if field.is_zero(lv) {
                        idx.pop();
                        val.pop();
                    }
                    continue;
                }
            }
            if !field.is_zero(&c) {
                idx.push(i);
                val.push(c);
            }
        }
        SparseVec { dim, idx, val }
    }

    pub fn dim(&self) -> u32 {
        self.dim
    }

    pub fn nnz(&self) -> usize {
        self.idx.len()
    }

    pub fn is_empty(&self) -> bool {
        self.idx.is_empty()
    }

    pub fn iter(&self) -> impl Iterator<Item = (u32, &E)> {
        self.idx.iter().copied().zip(self.val.iter())
    }

    /// Re-indexes every entry through `map` (an injective index map into a
    /// component of dimension `new_dim`).
    pub fn remap(&self, map: &[u32], new_dim: u32) -> Self
    where
        E: Clone,
    {
        let mut pairs: Vec<(u32, E)> = self
            .idx
            .iter()
            .zip(self.val.iter())
            .map(|(&i, v)| (map[i as usize], v.clone()))
            .collect();
        pairs.sort_unstable_by_key(|(i, _)| *i);
        let (idx, val) = pairs.into_iter().unzip();
        SparseVec { dim: new_dim, idx, val }
    }
}

/// Incremental echelon form over a streamed set of rows.
pub struct EchelonAccumulator<F: ExactField> {
    field: F,
    dim: u32,
    /// pivot column -> slot in `rows`
    pivot_of_col: Vec<u32>,
    rows: Vec<SparseVec<F::Elem>>,
    scratch: Vec<F::Elem>,
}

const NO_PIVOT: u32 = u32::MAX;

impl<F: ExactField> Clone for EchelonAccumulator<F> {
    fn clone(&self) -> Self {
        EchelonAccumulator {
            field: self.field.clone(),
            dim: self.dim,
            pivot_of_col: self.pivot_of_col.clone(),
            rows: self.rows.clone(),
            scratch: vec![self.field.zero(); self.dim as usize],
        }
    }
}

impl<F: ExactField> EchelonAccumulator<F> {
    pub fn new(field: F, dim: u32) -> Self {
        let scratch = vec![field.zero(); dim as usize];
        EchelonAccumulator {
            field,
            dim,
            pivot_of_col: vec![NO_PIVOT; dim as usize],
            rows: Vec::new(),
            scratch,
        }
    }

    pub fn dim(&self) -> u32 {
        self.dim
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    pub fn rows(&self) -> &[SparseVec<F::Elem>] {
        &self.rows
    }

    pub fn field(&self) -> &F {
        &self.field
    }

    /// Reduces `v` against the stored rows. If a nonzero residue remains it
    /// is normalized and stored (returns true); otherwise `v` was already in
    /// the span (returns false).
    pub fn insert(&mut self, v: &SparseVec<F::Elem>) -> Result<bool, LcsError> {
        if v.dim != self.dim {
            return Err(LcsError::DimensionMismatch { expected: self.dim, got: v.dim });
        }
        if self.rows.len() == self.dim as usize {
            return Ok(false); // span is already everything
        }
        let mut scratch = std::mem::take(&mut self.scratch);
        let pivot_col = self.reduce_in_scratch(&mut scratch, v);
        let out = match pivot_col {
            None => false,
            Some(col) => {
                self.store_row(&mut scratch, col);
                true
            }
        };
        self.scratch = scratch;
        Ok(out)
    }

    /// True iff `v` lies in the accumulated span. Does not modify the span.
    pub fn is_member(&self, v: &SparseVec<F::Elem>) -> Result<bool, LcsError> {
        if v.dim != self.dim {
            return Err(LcsError::DimensionMismatch { expected: self.dim, got: v.dim });
        }
        if self.rows.len() == self.dim as usize {
            return Ok(true);
        }
        let mut scratch = vec![self.field.zero(); self.dim as usize];
        Ok(self.reduce_in_scratch(&mut scratch, v).is_none())
    }

    /// Loads `v` into `scratch` and eliminates with the stored pivots.
    /// Returns the first column with a nonzero residue entry, or None if the
    /// residue is zero. On a Some return, scratch holds the residue from
    /// that column on; on None, scratch is all zeros again.
    fn reduce_in_scratch(&self, scratch: &mut [F::Elem], v: &SparseVec<F::Elem>) -> Option<u32> {
        let field = &self.field;
        let mut first = self.dim;
        for (i, c) in v.iter() {
            scratch[i as usize] = c.clone();
            if i < first {
                first = i;
            }
        }
        let mut col = first;
        let mut residue_head: Option<u32> = None;
        while col < self.dim {
            if field.is_zero(&scratch[col as usize]) {
                col += 1;
                continue;
            }
            let slot = self.pivot_of_col[col as usize];
            if slot == NO_PIVOT {
                residue_head = Some(col);
                break;
            }
            let row = &self.rows[slot as usize];
            let c = std::mem::replace(&mut scratch[col as usize], field.zero());
            // skip the pivot entry itself (val[0] == 1 at idx[0] == col)
            field.sparse_submul(scratch, &c, &row.idx[1..], &row.val[1..]);
            col += 1;
        }
        residue_head
    }

    /// Extracts the residue starting at `col` from scratch, normalizes it,
    /// back-reduces the stored rows, and stores it. Leaves scratch zeroed.
    fn store_row(&mut self, scratch: &mut [F::Elem], col: u32) {
        let field = self.field.clone();
        let lead_inv = field.inv(&scratch[col as usize]);
        let mut idx = Vec::new();
        let mut val = Vec::new();
        for i in col..self.dim {
            let e = std::mem::replace(&mut scratch[i as usize], field.zero());
            if !field.is_zero(&e) {
                idx.push(i);
                val.push(field.mul(&lead_inv, &e));
            }
        }
        let new_row = SparseVec::new(self.dim, idx, val);
        // maintain reduced form: clear the new pivot column in older rows
        for r in 0..self.rows.len() {
            let pos = match self.rows[r].idx.binary_search(&col) {
                Ok(p) => p,
                Err(_) => continue,
            };
            let c = self.rows[r].val[pos].clone();
            let mut pairs: Vec<(u32, F::Elem)> = self.rows[r]
                .iter()
                .filter(|(i, _)| *i != col)
                .map(|(i, v)| (i, v.clone()))
                .collect();
            for (i, v) in new_row.iter() {
                if i != col {
                    pairs.push((i, field.neg(&field.mul(&c, v))));
                }
            }
            self.rows[r] = SparseVec::from_pairs(&field, self.dim, pairs);
        }
        self.pivot_of_col[col as usize] = self.rows.len() as u32;
        self.rows.push(new_row);
    }
}

/// Rank of a finite stream of rows sharing one ambient dimension.
pub fn rank<F, I>(field: F, dim: u32, rows: I) -> Result<usize, LcsError>
where
    F: ExactField,
    I: IntoIterator<Item = SparseVec<F::Elem>>,
{
    let mut acc = EchelonAccumulator::new(field, dim);
    for r in rows {
        acc.insert(&r)?;
    }
    Ok(acc.rank())
}
