//! Exact coefficient fields: arbitrary-precision rationals and prime fields
//! with a runtime modulus.
//!
//! All rank computations run over one of these. The prime-field path is the
//! fast default (two independent random primes, results accepted only when
//! they agree); the rational path is the slow exact fallback.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use rand::Rng;

/// A field with exact arithmetic, carried as a small context object so that
/// prime fields can hold their modulus at runtime.
pub trait ExactField: Clone + Send + Sync + 'static {
    type Elem: Clone + PartialEq + std::fmt::Debug + Send + Sync;

    fn zero(&self) -> Self::Elem;
    fn one(&self) -> Self::Elem;
    fn is_zero(&self, a: &Self::Elem) -> bool;
    fn add(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn sub(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn mul(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn neg(&self, a: &Self::Elem) -> Self::Elem;
    /// Multiplicative inverse. Panics on zero.
    fn inv(&self, a: &Self::Elem) -> Self::Elem;
    fn from_i64(&self, x: i64) -> Self::Elem;

    /// scratch[idx[k]] -= c * val[k] for all k. The hot loop of Gaussian
    /// elimination; prime fields override this with a faster kernel.
    fn sparse_submul(
        &self,
        scratch: &mut [Self::Elem],
        c: &Self::Elem,
        idx: &[u32],
        val: &[Self::Elem],
    ) {
        for (i, v) in idx.iter().zip(val.iter()) {
            let t = self.sub(&scratch[*i as usize], &self.mul(c, v));
            scratch[*i as usize] = t;
        }
    }
}

/// The prime field Z/p for a prime p in (2^30, 2^31).
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct PrimeField {
    p: u64,
}

impl PrimeField {
    pub fn new(p: u64) -> Self {
        assert!(p > (1 << 30) && p < (1 << 31), "modulus must lie in (2^30, 2^31)");
        assert!(is_prime_u64(p), "modulus must be prime");
        PrimeField { p }
    }

    pub fn modulus(&self) -> u64 {
        self.p
    }

    fn pow(&self, mut b: u64, mut e: u64) -> u64 {
        let mut acc = 1u64;
        while e > 0 {
            if e & 1 == 1 {
                acc = acc * b % self.p;
            }
            b = b * b % self.p;
            e >>= 1;
        }
        acc
    }
}

impl ExactField for PrimeField {
    type Elem = u64;

    fn zero(&self) -> u64 {
        0
    }
    fn one(&self) -> u64 {
        1
    }
    fn is_zero(&self, a: &u64) -> bool {
        *a == 0
    }
    fn add(&self, a: &u64, b: &u64) -> u64 {
        let s = a + b;
        if s >= self.p { s - self.p } else { s }
    }
    fn sub(&self, a: &u64, b: &u64) -> u64 {
        if a >= b { a - b } else { a + self.p - b }
    }
    fn mul(&self, a: &u64, b: &u64) -> u64 {
        a * b % self.p
    }
    fn neg(&self, a: &u64) -> u64 {
        if *a == 0 { 0 } else { self.p - a }
    }
    fn inv(&self, a: &u64) -> u64 {
        assert!(*a != 0, "inverse of zero");
        self.pow(*a, self.p - 2)
    }
    fn from_i64(&self, x: i64) -> u64 {
        let r = x.rem_euclid(self.p as i64);
        r as u64
    }

    fn sparse_submul(&self, scratch: &mut [u64], c: &u64, idx: &[u32], val: &[u64]) {
        // Shoup's multiplication by the constant c: one precomputed
        // quotient, two mults per entry, no 128-bit division in the loop.
        let p = self.p;
        let c = *c;
        if c == 0 {
            return;
        }
        let c_shoup = (((c as u128) << 64) / p as u128) as u64;
        for (i, v) in idx.iter().zip(val.iter()) {
            let x = *v;
            let q = ((c_shoup as u128 * x as u128) >> 64) as u64;
            let mut r = (c.wrapping_mul(x)).wrapping_sub(q.wrapping_mul(p));
            if r >= p {
                r -= p;
            }
            let s = scratch[*i as usize];
            scratch[*i as usize] = if s >= r { s - r } else { s + p - r };
        }
    }
}

/// The rational numbers, exact but slow.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct Rationals;

impl ExactField for Rationals {
    type Elem = BigRational;

    fn zero(&self) -> BigRational {
        BigRational::zero()
    }
    fn one(&self) -> BigRational {
        BigRational::one()
    }
    fn is_zero(&self, a: &BigRational) -> bool {
        a.is_zero()
    }
    fn add(&self, a: &BigRational, b: &BigRational) -> BigRational {
        a + b
    }
    fn sub(&self, a: &BigRational, b: &BigRational) -> BigRational {
        a - b
    }
    fn mul(&self, a: &BigRational, b: &BigRational) -> BigRational {
        a * b
    }
    fn neg(&self, a: &BigRational) -> BigRational {
        -a
    }
    fn inv(&self, a: &BigRational) -> BigRational {
        assert!(!a.is_zero(), "inverse of zero");
        a.recip()
    }
    fn from_i64(&self, x: i64) -> BigRational {
        BigRational::from_integer(BigInt::from(x))
    }
}

/// Deterministic Miller-Rabin, valid for all u64.
pub fn is_prime_u64(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    for &q in &[2u64, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37] {
        if n == q {
            return true;
        }
        if n % q == 0 {
            return false;
        }
    }
    let mut d = n - 1;
    let mut s = 0;
    while d % 2 == 0 {
        d /= 2;
        s += 1;
    }
    let mulmod = |a: u64, b: u64| ((a as u128 * b as u128) % n as u128) as u64;
    let powmod = |mut b: u64, mut e: u64| {
        let mut acc = 1u64;
        b %= n;
        while e > 0 {
            if e & 1 == 1 {
                acc = mulmod(acc, b);
            }
            b = mulmod(b, b);
            e >>= 1;
        }
        acc
    };
    'witness: for &a in &[2u64, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37] {
        let mut x = powmod(a, d);
        if x == 1 || x == n - 1 {
            continue;
        }
        for _ in 0..s - 1 {
            x = mulmod(x, x);
            if x == n - 1 {
                continue 'witness;
            }
        }
        return false;
    }
    true
}

/// Draws a random prime in (2^30, 2^31).
pub fn random_prime<R: Rng>(rng: &mut R) -> u64 {
    loop {
        let c = rng.gen_range((1u64 << 30) + 1..(1u64 << 31)) | 1;
        if is_prime_u64(c) {
            return c;
        }
    }
}

/// Two distinct random primes for the double-prime default mode.
pub fn random_prime_pair<R: Rng>(rng: &mut R) -> (u64, u64) {
    let p1 = random_prime(rng);
    loop {
        let p2 = random_prime(rng);
        if p2 != p1 {
            return (p1, p2);
        }
    }
}
