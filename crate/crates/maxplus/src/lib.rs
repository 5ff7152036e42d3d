//! Exact max-plus (tropical) linear algebra for performance analysis of
//! periodically switched discrete event systems.
//!
//! The semiring is (R ∪ {-inf}, max, +) over exact rationals, so every
//! result in this crate — eigenvalues, eigenvectors, periods, transients,
//! trajectories — is exact and tested with equality rather than tolerances.
//!
//! Modules:
//!
//! - [`scalar`] / [`matrix`]: the semiring, dense square matrices, vectors.
//! - [`digraph`]: precedence digraph, strong connectivity, maximum cycle
//!   mean (Karp's dynamic program).
//! - [`spectral`]: irreducibility, eigenvalue and critical circuit,
//!   eigenvector, period order and transient of matrix powers.
//! - [`switched`]: periodic switching schedules, composition into a single
//!   system matrix, product irreducibility checks, eigenvalue probes.
//! - [`simulation`]: explicit trajectories and empirical periodicity
//!   detection, cross-validated against the spectral predictions.
//! - [`oracle`]: brute-force reference algorithms for the test suites.
//! - [`sample`]: seeded random instance generation.
//!
//! All values are immutable after construction and every operation is a
//! pure function, so everything is safe to share across threads.
//!
//! ```
//! use maxplus::{spectral, Matrix};
//!
//! let a = Matrix::from_str_rows(&["2 eps 3", "6 2 eps", "eps 4 3"]);
//! let result = spectral::spectral_analysis(&a).unwrap();
//! assert_eq!(result.lambda.to_string(), "13/3");
//! ```

pub mod digraph;
pub mod error;
pub mod matrix;
pub mod oracle;
pub mod sample;
pub mod scalar;
pub mod simulation;
pub mod spectral;
pub mod switched;

pub use digraph::Digraph;
pub use error::{Error, Result};
pub use matrix::{Matrix, Vector};
pub use scalar::{Rational, Scalar};
pub use simulation::{CrossValidation, Periodicity, Trace};
pub use spectral::{Eigenvalue, SpectralResult};
pub use switched::{MatrixMap, Phase, ProbeReport, ProductCheck, Schedule, SwitchedSpectral};
