//! Exact Gelfand-Tsetlin bases for polynomial representations of `gl(n)`,
//! and their stability along the inclusions `gl(n) ⊂ gl(n + 1)`.

pub mod error;
pub mod infinite;
pub mod linalg;
pub mod lowering;
pub mod minors;
pub mod partition;
pub mod pattern;
pub mod report;
pub mod tableau;
pub mod tower;
pub mod vector;
pub mod weyl;

pub use error::{Error, Result};
pub use infinite::{enumerate_infinite_patterns, pattern_degree, InfiniteGTPattern};
pub use lowering::{gt_basis, gt_basis_vector, lowering_z};
pub use minors::{gz_centrality_check, quantum_minor_apply, spectral_check, UPolyVector};
pub use partition::HighestWeight;
pub use pattern::{enumerate_patterns, validate_pattern, weyl_dimension, GTPattern};
pub use report::{verify, VerifyReport};
pub use tableau::{pattern_to_tableau, tableau_to_pattern, Ssyt};
pub use tower::{fundamental_basis, stability_check, stable_basis_vector, TowerVector};
pub use vector::{normalize_monomial, ColumnMonomial, ModuleVector, Rational};
pub use weyl::{embed, weight_of, WeylModule};
