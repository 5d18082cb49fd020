//! Decomposition of a truncated Hilbert series of N_m into Jordan-Holder
//! multiplicities of the tensor-field modules F_lambda.

use std::collections::BTreeMap;

use crate::error::LcsError;
use crate::partition::Partition;
use crate::series::TruncatedSeries;
use crate::sympoly::{expand_in_schur, SymPoly};
use crate::tensor::{hilbert_f, lambda_bound, numerator};
use crate::words::MultiDegree;

/// Multiplicities of the F_lambda constituents of N_m, all >= 1.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct JhSeries {
    pub n: usize,
    pub m: u32,
    pub maxdeg: u32,
    pub entries: BTreeMap<Partition, u64>,
}

impl JhSeries {
    pub fn max_norm(&self) -> u32 {
        self.entries.keys().map(|l| l.norm()).max().unwrap_or(0)
    }
}

/// True iff every constituent satisfies the |lambda| <= lambda_bound(m, n)
/// degree bound.
pub fn verify_bound(jh: &JhSeries) -> bool {
    let bound = lambda_bound(jh.m, jh.n);
    jh.entries.keys().all(|l| l.norm() <= bound)
}

/// Sum of mult(lambda) * hilbert_F(lambda) truncated at maxdeg.
pub fn reconstruct(jh: &JhSeries, maxdeg: u32) -> TruncatedSeries {
    let mut out = TruncatedSeries::zero(jh.n, maxdeg);
    for (lambda, &mult) in &jh.entries {
        let h = hilbert_f(lambda, jh.n, maxdeg).expect("stored labels fit in n variables");
        for (d, c) in h.iter() {
            out.add_to(d.clone(), c * mult as i64);
        }
    }
    out
}

/// Greedy degree-ascending decomposition of h into F_lambda multiplicities.
///
/// Works on g = h * prod(1 - t_i): for each total degree d up to the
/// Theorem 1.1 bound, the degree-d slice of g expanded in the Schur basis
/// gives the multiplicities of all constituents with |lambda| = d; those
/// numerators are then subtracted in full (column-shape numerators reach
/// above degree d) and the next degree is processed. Errors on any
/// asymmetry, negative multiplicity, or nonzero residue within h.maxdeg.
pub fn decompose(h: &TruncatedSeries, m: u32, n: usize) -> Result<JhSeries, LcsError> {
    let bound = lambda_bound(m, n);
    if h.maxdeg < bound {
        return Err(LcsError::InvalidInput(format!(
            "series truncated at {} but the bound for m = {m}, n = {n} is {bound}",
            h.maxdeg
        )));
    }
    assert_eq!(h.n, n);

    // g = h * prod(1 - t_i), kept as a series on the same window
    let mut g = TruncatedSeries::zero(n, h.maxdeg);
    for t in 0..=h.maxdeg {
        for (d, _) in h.slice(t) {
            let c = h.euler_coeff(&d);
            g.set(d, c);
        }
    }

    let mut entries: BTreeMap<Partition, u64> = BTreeMap::new();
    for d in 0..=bound {
        // group the slice into a homogeneous symmetric polynomial
        let mut slice_poly = SymPoly::zero(n);
        for (deg, c) in g.slice(d) {
            let rep = deg.sorted_rep();
            if g.get(&rep) != c {
                return Err(LcsError::InconsistentSeries {
                    context: format!("decompose(m={m}, n={n})"),
                    detail: format!("series is not symmetric at multidegree {:?}", deg.0),
                });
            }
            if deg == rep && c != 0 {
                slice_poly.add_term(Partition::from_exponents(&deg.0), c);
            }
        }
        if slice_poly.is_zero() {
            continue;
        }
        let coeffs = expand_in_schur(&slice_poly).expect("slice is homogeneous by construction");
        for (lambda, c) in coeffs {
            if c < 0 {
                return Err(LcsError::InconsistentSeries {
                    context: format!("decompose(m={m}, n={n})"),
                    detail: format!(
                        "negative multiplicity {c} for lambda = {:?} at degree {d}",
                        lambda.parts()
                    ),
                });
            }
            if c == 0 {
                continue;
            }
            if lambda.is_empty() {
                eprintln!("warning: trivial constituent lambda = 0 appears in N_{m} (n = {n})");
            }
            let p = numerator(&lambda, n).expect("expansion labels fit in n variables");
            for (e, v) in p.to_exponents() {
                let deg = MultiDegree(e);
                if deg.total() <= g.maxdeg {
                    g.add_to(deg, -c * v);
                }
            }
            entries.insert(lambda, c as u64);
        }
    }

    // everything within the window must now cancel
    for t in 0..=g.maxdeg {
        for (deg, c) in g.slice(t) {
            if c != 0 {
                return Err(LcsError::InconsistentSeries {
                    context: format!("decompose(m={m}, n={n})"),
                    detail: format!("nonzero residue {c} at multidegree {:?}", deg.0),
                });
            }
        }
    }

    Ok(JhSeries { n, m, maxdeg: h.maxdeg, entries })
}
