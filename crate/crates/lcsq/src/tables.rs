//! Published Jordan-Holder decompositions of N_m(A_n), embedded as the
//! reference data for table verification.

use std::collections::BTreeMap;

use crate::decompose::JhSeries;
use crate::partition::Partition;
use crate::tensor::lambda_bound;

/// The (n, m) pairs with a published table: n=2 for m=3..7, n=3 and n=4
/// for m=3..4.
pub const PUBLISHED_CASES: &[(usize, u32)] = &[
    (2, 3),
    (2, 4),
    (2, 5),
    (2, 6),
    (2, 7),
    (3, 3),
    (3, 4),
    (4, 3),
    (4, 4),
];

/// The published decomposition for one case, as a JhSeries with the default
/// truncation degree. None for cases without a table.
pub fn published_table(n: usize, m: u32) -> Option<JhSeries> {
    let raw: &[(&[u32], u64)] = match (n, m) {
        (2, 3) => &[(&[2, 1], 1), (&[2, 2], 1)],
        (2, 4) => &[(&[3, 1], 1), (&[3, 2], 1), (&[3, 3], 1)],
        (2, 5) => &[(&[4, 1], 1), (&[3, 2], 1), (&[4, 2], 2), (&[4, 3], 1), (&[4, 4], 1)],
        (2, 6) => &[
            (&[5, 1], 1),
            (&[4, 2], 1),
            (&[3, 3], 1),
            (&[5, 2], 2),
            (&[4, 3], 2),
            (&[5, 3], 2),
            (&[5, 4], 1),
            (&[5, 5], 1),
        ],
        (2, 7) => &[
            (&[6, 1], 1),
            (&[5, 2], 2),
            (&[4, 3], 2),
            (&[6, 2], 3),
            (&[5, 3], 3),
            (&[4, 4], 3),
            (&[6, 3], 3),
            (&[5, 4], 2),
            (&[6, 4], 2),
            (&[6, 5], 1),
            (&[6, 6], 1),
        ],
        (3, 3) => &[(&[2, 1], 1), (&[2, 2], 1)],
        (3, 4) => &[
            (&[2, 2, 2], 1),
            (&[2, 2, 1], 1),
            (&[3, 1], 1),
            (&[3, 1, 1], 1),
            (&[3, 2], 1),
            (&[3, 3], 1),
        ],
        (4, 3) => &[(&[2, 1], 1), (&[2, 2], 1)],
        (4, 4) => &[
            (&[3, 3], 1),
            (&[3, 2], 1),
            (&[3, 1, 1, 1], 1),
            (&[3, 1, 1], 1),
            (&[3, 1], 1),
            (&[2, 2, 1, 1], 1),
            (&[2, 2, 2], 1),
            (&[2, 1, 1, 1], 1),
            (&[2, 1, 1], 1),
        ],
        _ => return None,
    };
    let entries: BTreeMap<Partition, u64> = raw
        .iter()
        .map(|&(parts, mult)| (Partition::new(parts.to_vec()), mult))
        .collect();
    Some(JhSeries { n, m, maxdeg: lambda_bound(m, n), entries })
}
