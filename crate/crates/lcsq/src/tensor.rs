//! Hilbert series of the irreducible tensor-field modules F_lambda over
//! W_n, as numerators over prod_i (1 - t_i), plus the degree bound for
//! constituents of N_m.

use crate::error::LcsError;
use crate::partition::{partitions_up_to, Partition};
use crate::series::TruncatedSeries;
use crate::sympoly::{elementary, schur, SymPoly};
use crate::words::degrees_of_total;

/// Shape classification: column(k) means lambda = (1^k) with 0 <= k < n,
/// whose F_lambda is the closed k-forms; everything else (lambda_1 >= 2, or
/// the full column (1^n)) uses the generic numerator s_lambda.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ModuleKind {
    Generic,
    Column(usize),
}

pub fn module_kind(lambda: &Partition, n: usize) -> ModuleKind {
    if lambda.part(0) <= 1 && lambda.len() < n {
        ModuleKind::Column(lambda.len())
    } else {
        ModuleKind::Generic
    }
}

/// Numerator p with h_{F_lambda} = p / prod_i (1 - t_i).
///
/// Generic shapes: p = s_lambda. Column shapes (1^k), k < n: from the
/// exactness of the polynomial de Rham complex, h_{closed k-forms} =
/// h_{Omega^{k-1}} - h_{closed (k-1)-forms} with base h = 1 at k = 0, which
/// telescopes to p = sum_{j=k}^{n} (-1)^{j-k} e_j (at k = 0 this is
/// prod(1 - t_i), i.e. h = 1). The grading convention is deg(dx_i) =
/// deg(x_i), so d preserves multidegree.
pub fn numerator(lambda: &Partition, n: usize) -> Result<SymPoly, LcsError> {
    if lambda.len() > n {
        return Err(LcsError::InvalidInput(format!(
            "partition {:?} has more than n = {} parts",
            lambda.parts(),
            n
        )));
    }
    match module_kind(lambda, n) {
        ModuleKind::Generic => Ok(schur(lambda, n)),
        ModuleKind::Column(k) => {
            let mut p = SymPoly::zero(n);
            for j in k..=n {
                let sign = if (j - k) % 2 == 0 { 1 } else { -1 };
                p = p.add(&elementary(j, n).scale(sign));
            }
            Ok(p)
        }
    }
}

/// Truncated expansion of numerator(lambda, n) / prod(1 - t_i): the
/// coefficient at multidegree d is the sum of numerator coefficients over
/// all exponent vectors <= d componentwise.
pub fn hilbert_f(lambda: &Partition, n: usize, maxdeg: u32) -> Result<TruncatedSeries, LcsError> {
    let p = numerator(lambda, n)?;
    let exps = p.to_exponents();
    let mut out = TruncatedSeries::zero(n, maxdeg);
    for t in 0..=maxdeg {
        for d in degrees_of_total(n, t) {
            let mut c = 0i64;
            for (e, &v) in &exps {
                if e.iter().zip(&d.0).all(|(a, b)| a <= b) {
                    c += v;
                }
            }
            out.set(d, c);
        }
    }
    Ok(out)
}

/// Theorem-level bound on |lambda| for constituents of N_m: 2m-2 for odd m,
/// otherwise 2m-2 + 2*floor((n-2)/2) (n = 1 degenerates to 2m-2).
pub fn lambda_bound(m: u32, n: usize) -> u32 {
    assert!(m >= 2 && n >= 1);
    if m % 2 == 1 || n < 2 {
        2 * m - 2
    } else {
        2 * m - 2 + 2 * ((n as u32 - 2) / 2)
    }
}

/// Candidate constituent labels: all partitions of norm <= max_norm with at
/// most n parts, ascending norm then reverse-lex.
pub fn enumerate_labels(n: usize, max_norm: u32) -> Vec<Partition> {
    partitions_up_to(max_norm, n)
}
