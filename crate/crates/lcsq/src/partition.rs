//! Integer partitions with the orderings used throughout: ascending norm
//! first, then reverse-lexicographic within a norm (a linear extension of
//! dominance, with the dominance-greatest partition first).

use std::cmp::Ordering;

/// Weakly decreasing parts, trailing zeros stripped.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Partition(Vec<u32>);

impl Partition {
    pub fn new(mut parts: Vec<u32>) -> Self {
        while parts.last() == Some(&0) {
            parts.pop();
        }
        assert!(parts.windows(2).all(|w| w[0] >= w[1]), "parts must be weakly decreasing");
        Partition(parts)
    }

    pub fn empty() -> Self {
        Partition(Vec::new())
    }

    /// Sorts an exponent vector into a partition.
    pub fn from_exponents(exps: &[u32]) -> Self {
        let mut v: Vec<u32> = exps.to_vec();
        v.sort_unstable_by(|a, b| b.cmp(a));
        Partition::new(v)
    }

    pub fn parts(&self) -> &[u32] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn norm(&self) -> u32 {
        self.0.iter().sum()
    }

    pub fn part(&self, i: usize) -> u32 {
        self.0.get(i).copied().unwrap_or(0)
    }

    pub fn padded(&self, n: usize) -> Vec<u32> {
        let mut v = self.0.clone();
        v.resize(n.max(v.len()), 0);
        v
    }

    /// Dominance order: self >= other (both of the same norm).
    pub fn dominates(&self, other: &Partition) -> bool {
        debug_assert_eq!(self.norm(), other.norm());
        let mut a = 0u32;
        let mut b = 0u32;
        for i in 0..self.0.len().max(other.0.len()) {
            a += self.part(i);
            b += other.part(i);
            if a < b {
                return false;
            }
        }
        true
    }

    pub fn conjugate(&self) -> Partition {
        let cols = self.part(0) as usize;
        let parts = (0..cols)
            .map(|c| self.0.iter().filter(|&&p| p as usize > c).count() as u32)
            .collect();
        Partition(parts)
    }

    pub fn display(&self, n: usize) -> String {
        let padded = self.padded(n);
        let strs: Vec<String> = padded.iter().map(|p| p.to_string()).collect();
        format!("({})", strs.join(","))
    }
}

impl PartialOrd for Partition {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Partition {
    /// Ascending norm; within a norm, lexicographically greater parts come
    /// first (so iteration meets the dominance-maximal partition first).
    fn cmp(&self, other: &Self) -> Ordering {
        self.norm().cmp(&other.norm()).then_with(|| {
            for i in 0..self.0.len().max(other.0.len()) {
                match self.part(i).cmp(&other.part(i)) {
                    Ordering::Equal => continue,
                    Ordering::Less => return Ordering::Greater,
                    Ordering::Greater => return Ordering::Less,
                }
            }
            Ordering::Equal
        })
    }
}

/// All partitions of exactly `norm` into at most `max_len` parts, in the
/// `Ord` order above.
pub fn partitions_of(norm: u32, max_len: usize) -> Vec<Partition> {
    fn rec(rest: u32, cap: u32, slots: usize, acc: &mut Vec<u32>, out: &mut Vec<Partition>) {
        if rest == 0 {
            out.push(Partition(acc.clone()));
            return;
        }
        if slots == 0 {
            return;
        }
        let hi = rest.min(cap);
        let lo = rest.div_ceil(slots as u32);
        let mut p = hi;
        while p >= lo {
            acc.push(p);
            rec(rest - p, p, slots - 1, acc, out);
            acc.pop();
            if p == 0 {
                break;
            }
            p -= 1;
        }
    }
    let mut out = Vec::new();
    rec(norm, norm, max_len, &mut Vec::new(), &mut out);
    out
}

/// All partitions of norm <= max_norm into at most max_len parts, ascending
/// norm then reverse-lex.
pub fn partitions_up_to(max_norm: u32, max_len: usize) -> Vec<Partition> {
    (0..=max_norm).flat_map(|k| partitions_of(k, max_len)).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(parts: &[u32]) -> Partition {
        Partition::new(parts.to_vec())
    }

    #[test]
    fn ordering_is_norm_then_revlex() {
        let mut v = vec![p(&[1, 1, 1]), p(&[3]), p(&[2, 1]), p(&[2]), p(&[])];
        v.sort();
        assert_eq!(v, vec![p(&[]), p(&[2]), p(&[3]), p(&[2, 1]), p(&[1, 1, 1])]);
    }

    #[test]
    fn enumeration_examples() {
        assert_eq!(
            partitions_up_to(2, 2),
            vec![p(&[]), p(&[1]), p(&[2]), p(&[1, 1])]
        );
        assert_eq!(
            partitions_up_to(3, 1),
            vec![p(&[]), p(&[1]), p(&[2]), p(&[3])]
        );
        // partitions of 0..4 into <= 3 parts: 1+1+2+3+4 = 11
        assert_eq!(partitions_up_to(4, 3).len(), 11);
    }

    #[test]
    fn dominance_and_conjugate() {
        assert!(p(&[3, 1]).dominates(&p(&[2, 2])));
        assert!(!p(&[2, 2]).dominates(&p(&[3, 1])));
        assert!(p(&[2, 2]).dominates(&p(&[2, 2])));
        assert_eq!(p(&[3, 1]).conjugate(), p(&[2, 1, 1]));
        assert_eq!(p(&[2, 2]).conjugate(), p(&[2, 2]));
        assert_eq!(p(&[]).conjugate(), p(&[]));
    }

    #[test]
    fn trailing_zeros_are_normalized() {
        assert_eq!(Partition::new(vec![2, 1, 0, 0]), p(&[2, 1]));
        assert_eq!(p(&[2, 1]).padded(4), vec![2, 1, 0, 0]);
        assert_eq!(p(&[2, 1]).display(4), "(2,1,0,0)");
    }
}
