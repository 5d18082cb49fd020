//! Scalar-mode selection and cross-checking: the default mode runs every
//! computation under two independent random primes and accepts a result
//! only when both agree; exact mode runs over the rationals.

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::engine::Engine;
use crate::error::LcsError;
use crate::scalar::{random_prime_pair, PrimeField, Rationals};
use crate::series::TruncatedSeries;
use crate::words::MultiDegree;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ScalarMode {
    TwoPrimes(u64, u64),
    Exact,
}

impl ScalarMode {
    /// The default mode: two distinct random primes in (2^30, 2^31) drawn
    /// from a seeded generator.
    pub fn seeded(seed: u64) -> Self {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let (p1, p2) = random_prime_pair(&mut rng);
        ScalarMode::TwoPrimes(p1, p2)
    }
}

enum Backend {
    TwoPrimes(Box<Engine<PrimeField>>, Box<Engine<PrimeField>>),
    Exact(Box<Engine<Rationals>>),
}

/// Engine pair (or single exact engine) with persistent caches, shared
/// across all m for one n.
pub struct Driver {
    backend: Backend,
}

impl Driver {
    pub fn new(n: usize, maxdeg: u32, mode: ScalarMode) -> Self {
        let backend = match mode {
            ScalarMode::TwoPrimes(p1, p2) => {
                assert_ne!(p1, p2, "the two primes must differ");
                Backend::TwoPrimes(
                    Box::new(Engine::new(PrimeField::new(p1), n, maxdeg)),
                    Box::new(Engine::new(PrimeField::new(p2), n, maxdeg)),
                )
            }
            ScalarMode::Exact => Backend::Exact(Box::new(Engine::new(Rationals, n, maxdeg))),
        };
        Driver { backend }
    }

    /// Truncated Hilbert series of N_m, cross-checked between the two
    /// primes in the default mode.
    pub fn hilbert_n(&mut self, m: usize, maxdeg: u32) -> Result<TruncatedSeries, LcsError> {
        match &mut self.backend {
            Backend::Exact(e) => Ok(e.hilbert_n(m, maxdeg)),
            Backend::TwoPrimes(e1, e2) => {
                let (h1, h2) = rayon::join(|| e1.hilbert_n(m, maxdeg), || e2.hilbert_n(m, maxdeg));
                if let Some((d, _)) = h1.iter().find(|&(d, c)| h2.get(d) != c) {
                    return Err(LcsError::PrimeDisagreement {
                        p1: e1.field().modulus(),
                        p2: e2.field().modulus(),
                        degree: d.0.clone(),
                    });
                }
                Ok(h1)
            }
        }
    }

    /// (dim_M(m, d), dim_M(m+1, d), dim_N(m, d)), cross-checked.
    pub fn dims(&mut self, m: usize, d: &MultiDegree) -> Result<(u64, u64, u64), LcsError> {
        match &mut self.backend {
            Backend::Exact(e) => Ok((e.dim_m(m, d), e.dim_m(m + 1, d), e.dim_n(m, d))),
            Backend::TwoPrimes(e1, e2) => {
                let (a, b) = rayon::join(
                    || (e1.dim_m(m, d), e1.dim_m(m + 1, d), e1.dim_n(m, d)),
                    || (e2.dim_m(m, d), e2.dim_m(m + 1, d), e2.dim_n(m, d)),
                );
                if a != b {
                    return Err(LcsError::PrimeDisagreement {
                        p1: e1.field().modulus(),
                        p2: e2.field().modulus(),
                        degree: d.0.clone(),
                    });
                }
                Ok(a)
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn md(v: &[u32]) -> MultiDegree {
        MultiDegree(v.to_vec())
    }

    #[test]
    fn seeded_mode_is_reproducible() {
        let a = ScalarMode::seeded(1);
        let b = ScalarMode::seeded(1);
        assert_eq!(a, b);
        let ScalarMode::TwoPrimes(p1, p2) = a else { panic!() };
        assert_ne!(p1, p2);
    }

    #[test]
    fn two_prime_and_exact_agree_on_a_small_series() {
        let mut fast = Driver::new(2, 4, ScalarMode::seeded(3));
        let mut exact = Driver::new(2, 4, ScalarMode::Exact);
        let h1 = fast.hilbert_n(3, 4).unwrap();
        let h2 = exact.hilbert_n(3, 4).unwrap();
        assert_eq!(h1, h2);
    }

    #[test]
    fn dims_cross_check() {
        let mut d = Driver::new(2, 4, ScalarMode::seeded(5));
        assert_eq!(d.dims(2, &md(&[1, 1])).unwrap(), (1, 0, 1));
        assert_eq!(d.dims(3, &md(&[2, 2])).unwrap(), (4, 1, 3));
    }
}
