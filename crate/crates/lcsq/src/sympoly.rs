//! Symmetric polynomials in n variables over the integers, stored in the
//! monomial-symmetric basis, with elementary and Schur polynomials and
//! expansion into the Schur basis.

use std::collections::{BTreeMap, HashMap};

use crate::error::LcsError;
use crate::partition::{partitions_of, Partition};

/// Integer symmetric polynomial: sum of c_mu * m_mu over partitions mu of
/// length <= n.
#[derive(Clone, Debug, PartialEq)]
pub struct SymPoly {
    pub n: usize,
    pub terms: BTreeMap<Partition, i64>,
}

impl SymPoly {
    pub fn zero(n: usize) -> Self {
        SymPoly { n, terms: BTreeMap::new() }
    }

    pub fn one(n: usize) -> Self {
        SymPoly::mono(n, Partition::empty(), 1)
    }

    pub fn mono(n: usize, mu: Partition, c: i64) -> Self {
        assert!(mu.len() <= n);
        let mut terms = BTreeMap::new();
        if c != 0 {
            terms.insert(mu, c);
        }
        SymPoly { n, terms }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, mu: &Partition) -> i64 {
        *self.terms.get(mu).unwrap_or(&0)
    }

    pub fn add_term(&mut self, mu: Partition, c: i64) {
        if c == 0 {
            return;
        }
        assert!(mu.len() <= self.n);
        let e = self.terms.entry(mu).or_insert(0);
        *e += c;
        if *e == 0 {
            let mu = self
                .terms
                .iter()
                .find(|(_, &v)| v == 0)
                .map(|(k, _)| k.clone())
                .unwrap();
            self.terms.remove(&mu);
        }
    }

    pub fn add(&self, other: &SymPoly) -> SymPoly {
        assert_eq!(self.n, other.n);
        let mut out = self.clone();
        for (mu, &c) in &other.terms {
            out.add_term(mu.clone(), c);
        }
        out
    }

    pub fn sub(&self, other: &SymPoly) -> SymPoly {
        assert_eq!(self.n, other.n);
        let mut out = self.clone();
        for (mu, &c) in &other.terms {
            out.add_term(mu.clone(), -c);
        }
        out
    }

    pub fn scale(&self, c: i64) -> SymPoly {
        let mut out = SymPoly::zero(self.n);
        for (mu, &v) in &self.terms {
            out.add_term(mu.clone(), v * c);
        }
        out
    }

    /// Some(degree) if homogeneous (the zero polynomial is homogeneous of
    /// every degree; returns Some(0)).
    pub fn homogeneous_degree(&self) -> Option<u32> {
        let mut it = self.terms.keys();
        let Some(first) = it.next() else { return Some(0) };
        let d = first.norm();
        if it.all(|mu| mu.norm() == d) {
            Some(d)
        } else {
            None
        }
    }

    /// Expands into a map exponent-vector -> coefficient; each m_mu becomes
    /// the orbit sum of t^mu.
    pub fn to_exponents(&self) -> HashMap<Vec<u32>, i64> {
        let mut out = HashMap::new();
        for (mu, &c) in &self.terms {
            for e in distinct_permutations(mu.padded(self.n)) {
                *out.entry(e).or_insert(0) += c;
            }
        }
        out.retain(|_, c| *c != 0);
        out
    }

    /// Rebuilds from a (symmetric) exponent map: the coefficient of m_mu is
    /// the coefficient of the sorted exponent vector mu.
    pub fn from_exponents(n: usize, exps: &HashMap<Vec<u32>, i64>) -> SymPoly {
        let mut out = SymPoly::zero(n);
        for (e, &c) in exps {
            if e.windows(2).all(|w| w[0] >= w[1]) {
                out.add_term(Partition::from_exponents(e), c);
            }
        }
        out
    }

    /// Exact product, via expansion over exponent vectors.
    pub fn mul(&self, other: &SymPoly) -> SymPoly {
        assert_eq!(self.n, other.n);
        let a = self.to_exponents();
        let b = other.to_exponents();
        let mut prod: HashMap<Vec<u32>, i64> = HashMap::new();
        for (ea, ca) in &a {
            for (eb, cb) in &b {
                let e: Vec<u32> = ea.iter().zip(eb.iter()).map(|(x, y)| x + y).collect();
                *prod.entry(e).or_insert(0) += ca * cb;
            }
        }
        prod.retain(|_, c| *c != 0);
        SymPoly::from_exponents(self.n, &prod)
    }
}

/// All distinct permutations of a multiset of exponents.
pub fn distinct_permutations(mut v: Vec<u32>) -> Vec<Vec<u32>> {
    v.sort_unstable();
    let mut out = vec![v.clone()];
    // next_permutation loop
    loop {
        let n = v.len();
        if n < 2 {
            break;
        }
        let Some(i) = (0..n - 1).rev().find(|&i| v[i] < v[i + 1]) else { break };
        let j = (i + 1..n).rev().find(|&j| v[j] > v[i]).unwrap();
        v.swap(i, j);
        v[i + 1..].reverse();
        out.push(v.clone());
    }
    out
}

/// Elementary symmetric polynomial e_k = m_{(1^k)}; zero for k > n.
pub fn elementary(k: usize, n: usize) -> SymPoly {
    if k > n {
        return SymPoly::zero(n);
    }
    SymPoly::mono(n, Partition::new(vec![1; k]), 1)
}

/// Kostka numbers by peeling horizontal strips, memoized per session.
#[derive(Default)]
pub struct KostkaCache {
    memo: HashMap<(Partition, Partition), u64>,
}

impl KostkaCache {
    pub fn new() -> Self {
        Self::default()
    }

    /// Number of semistandard tableaux of shape `lambda` and content `mu`
    /// (mu taken as a partition; Kostka numbers are content-permutation
    /// invariant).
    pub fn kostka(&mut self, lambda: &Partition, mu: &Partition) -> u64 {
        if lambda.norm() != mu.norm() {
            return 0;
        }
        if mu.is_empty() {
            return 1; // lambda is empty too
        }
        if let Some(&v) = self.memo.get(&(lambda.clone(), mu.clone())) {
            return v;
        }
        let strip = mu.part(mu.len() - 1);
        let inner_mu = Partition::new(mu.parts()[..mu.len() - 1].to_vec());
        let mut total = 0u64;
        for nu in horizontal_strip_removals(lambda, strip) {
            total += self.kostka(&nu, &inner_mu);
        }
        self.memo.insert((lambda.clone(), mu.clone()), total);
        total
    }
}

/// All nu contained in lambda with lambda/nu a horizontal strip of the
/// given size (at most one removed box per column).
fn horizontal_strip_removals(lambda: &Partition, size: u32) -> Vec<Partition> {
    fn rec(lambda: &Partition, row: usize, rest: u32, acc: &mut Vec<u32>, out: &mut Vec<Partition>) {
        if row == lambda.len() {
            if rest == 0 {
                out.push(Partition::new(acc.clone()));
            }
            return;
        }
        // nu_row between lambda_{row+1} and lambda_row, and >= nu_{row-1}'s
        // constraint is automatic; horizontal strip also needs
        // nu_row >= lambda_{row+1}
        let lo = lambda.part(row + 1);
        let hi = lambda.part(row);
        for nu_row in (lo..=hi).rev() {
            let removed = hi - nu_row;
            if removed > rest {
                continue;
            }
            acc.push(nu_row);
            rec(lambda, row + 1, rest - removed, acc, out);
            acc.pop();
        }
    }
    let mut out = Vec::new();
    rec(lambda, 0, size, &mut Vec::new(), &mut out);
    out
}

/// Schur polynomial s_lambda in n variables in the monomial basis; the
/// coefficients are the Kostka numbers K_{lambda,mu}. Zero if lambda has
/// more than n parts.
pub fn schur(lambda: &Partition, n: usize) -> SymPoly {
    if lambda.len() > n {
        return SymPoly::zero(n);
    }
    let mut cache = KostkaCache::new();
    let mut out = SymPoly::zero(n);
    for mu in partitions_of(lambda.norm(), n) {
        let k = cache.kostka(lambda, &mu);
        if k > 0 {
            out.add_term(mu, k as i64);
        }
    }
    out
}

/// Brute-force Schur oracle: sums t^content over all semistandard Young
/// tableaux of shape lambda with entries in 1..=n, filled cell by cell.
pub fn schur_by_tableaux(lambda: &Partition, n: usize) -> SymPoly {
    if lambda.len() > n {
        return SymPoly::zero(n);
    }
    let rows: Vec<usize> = lambda.parts().iter().map(|&p| p as usize).collect();
    let mut filling: Vec<Vec<u32>> = rows.iter().map(|&r| vec![0; r]).collect();
    let mut exps: HashMap<Vec<u32>, i64> = HashMap::new();

    fn fill(
        rows: &[usize],
        n: usize,
        filling: &mut Vec<Vec<u32>>,
        r: usize,
        c: usize,
        exps: &mut HashMap<Vec<u32>, i64>,
    ) {
        if r == rows.len() {
            let mut content = vec![0u32; n];
            for row in filling.iter() {
                for &v in row {
                    content[(v - 1) as usize] += 1;
                }
            }
            *exps.entry(content).or_insert(0) += 1;
            return;
        }
        let (nr, nc) = if c + 1 < rows[r] { (r, c + 1) } else { (r + 1, 0) };
        let min_left = if c > 0 { filling[r][c - 1] } else { 1 };
        let min_above = if r > 0 { filling[r - 1][c] + 1 } else { 1 };
        for v in min_left.max(min_above)..=n as u32 {
            filling[r][c] = v;
            fill(rows, n, filling, nr, nc, exps);
        }
        filling[r][c] = 0;
    }

    if rows.is_empty() {
        return SymPoly::one(n);
    }
    fill(&rows, n, &mut filling, 0, 0, &mut exps);
    SymPoly::from_exponents(n, &exps)
}

/// Expands a homogeneous symmetric polynomial in the Schur basis, by
/// repeatedly clearing the dominance-maximal remaining monomial term.
/// Coefficients may be negative for general input.
pub fn expand_in_schur(p: &SymPoly) -> Result<BTreeMap<Partition, i64>, LcsError> {
    if p.homogeneous_degree().is_none() {
        return Err(LcsError::InvalidInput(
            "expand_in_schur requires a homogeneous polynomial".into(),
        ));
    }
    let mut rest = p.clone();
    let mut out = BTreeMap::new();
    while let Some((mu, &c)) = rest.terms.iter().next().map(|(k, v)| (k.clone(), v)) {
        // iteration order puts the dominance-maximal partition first
        rest = rest.sub(&schur(&mu, p.n).scale(c));
        out.insert(mu, c);
    }
    Ok(out)
}
