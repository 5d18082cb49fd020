//! Homogeneous elements of the free algebra and exact arithmetic on them
//! (sum, product, commutator).

use std::collections::BTreeMap;

use crate::echelon::SparseVec;
use crate::scalar::ExactField;
use crate::words::{ComponentBasis, MultiDegree, Word};

/// A homogeneous element of a fixed multigraded component, as a finite
/// word -> coefficient map. All words share one multidegree.
#[derive(Clone, Debug)]
pub struct AlgElement<E> {
    pub n: usize,
    pub degree: MultiDegree,
    pub terms: BTreeMap<Word, E>,
}

impl<E: Clone + PartialEq> AlgElement<E> {
    pub fn zero(n: usize, degree: MultiDegree) -> Self {
        AlgElement { n, degree, terms: BTreeMap::new() }
    }

    /// A single word with coefficient 1.
    pub fn word<F: ExactField<Elem = E>>(field: &F, n: usize, w: Word) -> Self {
        let degree = w.multidegree(n);
        let mut terms = BTreeMap::new();
        terms.insert(w, field.one());
        AlgElement { n, degree, terms }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    fn add_term<F: ExactField<Elem = E>>(&mut self, field: &F, w: Word, c: E) {
        if field.is_zero(&c) {
            return;
        }
        match self.terms.entry(w) {
            std::collections::btree_map::Entry::Vacant(e) => {
                e.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut e) => {
                let s = field.add(e.get(), &c);
                if field.is_zero(&s) {
                    e.remove();
                } else {
                    *e.get_mut() = s;
                }
            }
        }
    }

    pub fn add<F: ExactField<Elem = E>>(&self, field: &F, other: &Self) -> Self {
        assert_eq!(self.degree, other.degree, "sum of inhomogeneous parts");
        let mut out = self.clone();
        for (w, c) in &other.terms {
            out.add_term(field, w.clone(), c.clone());
        }
        out
    }

    pub fn sub<F: ExactField<Elem = E>>(&self, field: &F, other: &Self) -> Self {
        assert_eq!(self.degree, other.degree, "difference of inhomogeneous parts");
        let mut out = self.clone();
        for (w, c) in &other.terms {
            out.add_term(field, w.clone(), field.neg(c));
        }
        out
    }

    pub fn scale<F: ExactField<Elem = E>>(&self, field: &F, c: &E) -> Self {
        let mut out = AlgElement::zero(self.n, self.degree.clone());
        for (w, v) in &self.terms {
            out.add_term(field, w.clone(), field.mul(v, c));
        }
        out
    }

    /// Bilinear extension of word concatenation.
    pub fn multiply<F: ExactField<Elem = E>>(&self, field: &F, other: &Self) -> Self {
        assert_eq!(self.n, other.n);
        let degree = self.degree.add(&other.degree);
        let mut out = AlgElement::zero(self.n, degree);
        for (u, a) in &self.terms {
            for (v, b) in &other.terms {
                out.add_term(field, u.concat(v), field.mul(a, b));
            }
        }
        out
    }

    /// ab - ba.
    pub fn commutator<F: ExactField<Elem = E>>(&self, field: &F, other: &Self) -> Self {
        self.multiply(field, other).sub(field, &other.multiply(field, self))
    }

    /// Coefficient vector over the component's word basis.
    pub fn to_sparse<F: ExactField<Elem = E>>(&self, field: &F, basis: &ComponentBasis) -> SparseVec<E> {
        assert_eq!(self.degree, basis.degree, "element does not live in this component");
        let pairs = self
            .terms
            .iter()
            .map(|(w, c)| (basis.index_of(w), c.clone()))
            .collect();
        SparseVec::from_pairs(field, basis.size(), pairs)
    }
}
