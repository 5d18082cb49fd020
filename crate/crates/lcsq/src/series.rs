//! Multigraded Hilbert series truncated at a total-degree cutoff.

use std::collections::BTreeMap;

use crate::words::{degrees_of_total, MultiDegree};

/// Coefficients per multidegree for all total degrees <= maxdeg.
/// Stored sparsely; absent means zero.
#[derive(Clone, Debug, PartialEq)]
pub struct TruncatedSeries {
    pub n: usize,
    pub maxdeg: u32,
    coeffs: BTreeMap<MultiDegree, i64>,
}

impl TruncatedSeries {
    pub fn zero(n: usize, maxdeg: u32) -> Self {
        TruncatedSeries { n, maxdeg, coeffs: BTreeMap::new() }
    }

    pub fn get(&self, d: &MultiDegree) -> i64 {
        *self.coeffs.get(d).unwrap_or(&0)
    }

    pub fn set(&mut self, d: MultiDegree, c: i64) {
        debug_assert!(d.total() <= self.maxdeg);
        if c == 0 {
            self.coeffs.remove(&d);
        } else {
            self.coeffs.insert(d, c);
        }
    }

    pub fn add_to(&mut self, d: MultiDegree, c: i64) {
        let cur = self.get(&d);
        self.set(d, cur + c);
    }

    pub fn iter(&self) -> impl Iterator<Item = (&MultiDegree, i64)> {
        self.coeffs.iter().map(|(d, &c)| (d, c))
    }

    pub fn truncate(&self, maxdeg: u32) -> TruncatedSeries {
        assert!(maxdeg <= self.maxdeg);
        let coeffs = self
            .coeffs
            .iter()
            .filter(|(d, _)| d.total() <= maxdeg)
            .map(|(d, &c)| (d.clone(), c))
            .collect();
        TruncatedSeries { n: self.n, maxdeg, coeffs }
    }

    /// self - other, on the window of self.
    pub fn sub(&self, other: &TruncatedSeries) -> TruncatedSeries {
        assert_eq!(self.n, other.n);
        let mut out = self.clone();
        for (d, c) in other.iter() {
            if d.total() <= out.maxdeg {
                out.add_to(d.clone(), -c);
            }
        }
        out
    }

    /// Coefficient of the product with prod_i (1 - t_i) at multidegree d:
    /// an alternating sum over subsets of coordinates shifted down by one.
    pub fn euler_coeff(&self, d: &MultiDegree) -> i64 {
        let n = self.n;
        let mut total = 0i64;
        'subset: for mask in 0u32..(1 << n) {
            let mut e = d.clone();
            for j in 0..n {
                if mask & (1 << j) != 0 {
                    match e.minus_unit(j) {
                        Some(x) => e = x,
                        None => continue 'subset,
                    }
                }
            }
            let sign = if mask.count_ones() % 2 == 0 { 1 } else { -1 };
            total += sign * self.get(&e);
        }
        total
    }

    /// All coefficients of one total degree (including zeros).
    pub fn slice(&self, total: u32) -> Vec<(MultiDegree, i64)> {
        degrees_of_total(self.n, total)
            .into_iter()
            .map(|d| {
                let c = self.get(&d);
                (d, c)
            })
            .collect()
    }

    /// True iff every coefficient is invariant under coordinate permutation.
    pub fn is_symmetric(&self) -> bool {
        (0..=self.maxdeg)
            .flat_map(|t| degrees_of_total(self.n, t))
            .all(|d| self.get(&d) == self.get(&d.sorted_rep()))
    }
}
