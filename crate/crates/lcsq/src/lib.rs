//! Exact computation of the multigraded Hilbert series of the lower
//! central series quotients N_i = M_i / M_{i+1} of a free algebra, their
//! Jordan-Holder decompositions into tensor-field modules F_lambda over
//! W_n, and verification of the published decomposition tables and the
//! degree bound on the constituents.

pub mod algebra;
pub mod checks;
pub mod decompose;
pub mod driver;
pub mod echelon;
pub mod engine;
pub mod error;
pub mod generators;
pub mod partition;
pub mod scalar;
pub mod series;
pub mod sympoly;
pub mod tables;
pub mod tensor;
pub mod words;

pub use decompose::{decompose, reconstruct, verify_bound, JhSeries};
pub use driver::{Driver, ScalarMode};
pub use error::LcsError;
pub use partition::Partition;
pub use series::TruncatedSeries;
pub use tensor::{enumerate_labels, hilbert_f, lambda_bound, numerator};
pub use words::MultiDegree;

/// The fast modular engine (one prime; pair two of them for soundness).
pub type PrimeEngine = engine::Engine<scalar::PrimeField>;
/// The exact rational engine.
pub type ExactEngine = engine::Engine<scalar::Rationals>;
