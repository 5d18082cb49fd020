//! Words in n noncommuting generators, multidegrees, and the per-multidegree
//! monomial bases of the free algebra.

use std::collections::HashMap;
use std::sync::Arc;

/// Per-variable exponent vector of a monomial.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct MultiDegree(pub Vec<u32>);

impl MultiDegree {
    pub fn zero(n: usize) -> Self {
        MultiDegree(vec![0; n])
    }

    pub fn n(&self) -> usize {
        self.0.len()
    }

    pub fn total(&self) -> u32 {
        self.0.iter().sum()
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(|&e| e == 0)
    }

    /// Pointwise difference; None if any coordinate would go negative.
    pub fn checked_sub(&self, other: &MultiDegree) -> Option<MultiDegree> {
        let mut out = Vec::with_capacity(self.0.len());
        for (a, b) in self.0.iter().zip(other.0.iter()) {
            out.push(a.checked_sub(*b)?);
        }
        Some(MultiDegree(out))
    }

    pub fn add(&self, other: &MultiDegree) -> MultiDegree {
        MultiDegree(self.0.iter().zip(other.0.iter()).map(|(a, b)| a + b).collect())
    }

    /// d - e_j; None if d_j == 0.
    pub fn minus_unit(&self, j: usize) -> Option<MultiDegree> {
        if self.0[j] == 0 {
            return None;
        }
        let mut v = self.0.clone();
        v[j] -= 1;
        Some(MultiDegree(v))
    }

    pub fn plus_unit(&self, j: usize) -> MultiDegree {
        let mut v = self.0.clone();
        v[j] += 1;
        MultiDegree(v)
    }

    /// Orbit representative under coordinate permutation: exponents sorted
    /// descending.
    pub fn sorted_rep(&self) -> MultiDegree {
        let mut v = self.0.clone();
        v.sort_unstable_by(|a, b| b.cmp(a));
        MultiDegree(v)
    }

    /// A letter permutation pi with self[i] == target[pi[i]] for all i.
    /// Panics if the exponent multisets differ.
    pub fn permutation_to(&self, target: &MultiDegree) -> Vec<u8> {
        let n = self.n();
        let mut used = vec![false; n];
        let mut pi = vec![0u8; n];
        for i in 0..n {
            let j = (0..n)
                .find(|&j| !used[j] && target.0[j] == self.0[i])
                .expect("multidegrees are not in the same orbit");
            used[j] = true;
            pi[i] = j as u8;
        }
        pi
    }

    /// All multidegrees e with e <= self pointwise (including zero and self).
    pub fn sub_degrees(&self) -> Vec<MultiDegree> {
        let mut out = vec![Vec::new()];
        for &cap in &self.0 {
            let mut next = Vec::with_capacity(out.len() * (cap as usize + 1));
            for prefix in &out {
                for e in 0..=cap {
                    let mut p = prefix.clone();
                    p.push(e);
                    next.push(p);
                }
            }
            out = next;
        }
        out.into_iter().map(MultiDegree).collect()
    }
}

/// All multidegrees in n variables with the given total degree, in
/// lexicographic order.
pub fn degrees_of_total(n: usize, total: u32) -> Vec<MultiDegree> {
    fn rec(n: usize, total: u32, prefix: &mut Vec<u32>, out: &mut Vec<MultiDegree>) {
        if n == 1 {
            prefix.push(total);
            out.push(MultiDegree(prefix.clone()));
            prefix.pop();
            return;
        }
        for e in 0..=total {
            prefix.push(e);
            rec(n - 1, total - e, prefix, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    rec(n, total, &mut Vec::new(), &mut out);
    out
}

/// Monomial in the free algebra: a finite sequence of letters in 0..n.
/// The empty word is the unit.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Word(pub Vec<u8>);

impl Word {
    pub fn empty() -> Self {
        Word(Vec::new())
    }

    pub fn letter(j: u8) -> Self {
        Word(vec![j])
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn multidegree(&self, n: usize) -> MultiDegree {
        let mut d = vec![0u32; n];
        for &l in &self.0 {
            d[l as usize] += 1;
        }
        MultiDegree(d)
    }

    pub fn concat(&self, other: &Word) -> Word {
        let mut v = Vec::with_capacity(self.0.len() + other.0.len());
        v.extend_from_slice(&self.0);
        v.extend_from_slice(&other.0);
        Word(v)
    }

    /// Applies a letter permutation.
    pub fn permute(&self, pi: &[u8]) -> Word {
        Word(self.0.iter().map(|&l| pi[l as usize]).collect())
    }
}

/// dim of the multigraded component: total! / prod(exps!).
pub fn component_dim(d: &MultiDegree) -> u64 {
    let mut result: u128 = 1;
    let mut placed: u128 = 0;
    for &e in &d.0 {
        for k in 1..=e as u128 {
            placed += 1;
            result = result * placed / k; // binomial build-up, exact at every step
        }
    }
    u64::try_from(result).expect("component dimension overflows u64")
}

/// The word basis of one multigraded component, enumerated in lexicographic
/// order on letter sequences.
pub struct ComponentBasis {
    pub degree: MultiDegree,
    pub words: Vec<Word>,
    index: HashMap<Word, u32>,
}

impl ComponentBasis {
    pub fn build(degree: MultiDegree) -> Self {
        let mut words = Vec::with_capacity(component_dim(&degree) as usize);
        let mut remaining = degree.0.clone();
        let mut current: Vec<u8> = Vec::with_capacity(degree.total() as usize);
        fn rec(remaining: &mut [u32], current: &mut Vec<u8>, words: &mut Vec<Word>) {
            if remaining.iter().all(|&r| r == 0) {
                words.push(Word(current.clone()));
                return;
            }
            for l in 0..remaining.len() {
                if remaining[l] > 0 {
                    remaining[l] -= 1;
                    current.push(l as u8);
                    rec(remaining, current, words);
                    current.pop();
                    remaining[l] += 1;
                }
            }
        }
        rec(&mut remaining, &mut current, &mut words);
        let index = words.iter().enumerate().map(|(i, w)| (w.clone(), i as u32)).collect();
        ComponentBasis { degree, words, index }
    }

    pub fn size(&self) -> u32 {
        self.words.len() as u32
    }

    pub fn index_of(&self, w: &Word) -> u32 {
        *self.index.get(w).expect("word does not belong to this component")
    }

    /// Number of cyclic equivalence classes of words in this component.
    /// These span the trace space A/[A,A], so the commutator subspace
    /// [A,A] in this component has dimension size - cyclic_classes.
    pub fn cyclic_classes(&self) -> u32 {
        let len = self.degree.total() as usize;
        if len == 0 {
            return 1;
        }
        let mut count = 0u32;
        'next: for w in &self.words {
            // count words that are the lex-least among their rotations
            for r in 1..len {
                let rot = || w.0[r..].iter().chain(w.0[..r].iter());
                if rot().lt(w.0.iter()) {
                    continue 'next;
                }
            }
            count += 1;
        }
        count
    }
}

/// Precomputed component bases for every multidegree up to a total-degree
/// cutoff, plus index maps for one-letter prefix extension.
pub struct BasisTable {
    pub n: usize,
    pub maxdeg: u32,
    components: HashMap<MultiDegree, Arc<ComponentBasis>>,
    /// (d, j) -> map from index in comp(d) to index of x_j . w in comp(d + e_j)
    prepend: HashMap<(MultiDegree, u8), Arc<Vec<u32>>>,
}

impl BasisTable {
    pub fn build(n: usize, maxdeg: u32) -> Self {
        assert!(n >= 1);
        let mut components = HashMap::new();
        for t in 0..=maxdeg {
            for d in degrees_of_total(n, t) {
                components.insert(d.clone(), Arc::new(ComponentBasis::build(d)));
            }
        }
        let mut prepend = HashMap::new();
        for (d, comp) in &components {
            for j in 0..n as u8 {
                let up = d.plus_unit(j as usize);
                let Some(target) = components.get(&up) else { continue };
                let map: Vec<u32> = comp
                    .words
                    .iter()
                    .map(|w| target.index_of(&Word::letter(j).concat(w)))
                    .collect();
                prepend.insert((d.clone(), j), Arc::new(map));
            }
        }
        BasisTable { n, maxdeg, components, prepend }
    }

    pub fn component(&self, d: &MultiDegree) -> &ComponentBasis {
        self.components.get(d).expect("multidegree beyond table cutoff")
    }

    pub fn prepend_map(&self, d: &MultiDegree, j: u8) -> &[u32] {
        self.prepend.get(&(d.clone(), j)).expect("prepend map beyond table cutoff")
    }

    /// Index map comp(src) -> comp(dst) induced by a letter permutation
    /// taking the content of src to the content of dst.
    pub fn permute_map(&self, src: &MultiDegree, dst: &MultiDegree) -> Vec<u32> {
        let pi = src.permutation_to(dst);
        let sc = self.component(src);
        let dc = self.component(dst);
        sc.words.iter().map(|w| dc.index_of(&w.permute(&pi))).collect()
    }

    /// Index map comp(d) -> comp(w.multidegree + d), u -> w . u.
    pub fn concat_left_map(&self, w: &Word, d: &MultiDegree) -> Vec<u32> {
        let sc = self.component(d);
        let target = w.multidegree(self.n).add(d);
        let dc = self.component(&target);
        sc.words.iter().map(|u| dc.index_of(&w.concat(u))).collect()
    }

    /// Index map comp(d) -> comp(d + w.multidegree), u -> u . w.
    pub fn concat_right_map(&self, d: &MultiDegree, w: &Word) -> Vec<u32> {
        let sc = self.component(d);
        let target = d.add(&w.multidegree(self.n));
        let dc = self.component(&target);
        sc.words.iter().map(|u| dc.index_of(&u.concat(w))).collect()
    }
}
