//! Exact-arithmetic engine for degenerations of K3-type Hodge structures.
//!
//! Everything here is computed over the rationals (or Gaussian rationals for
//! complexified data); there is no floating point anywhere in a mathematical
//! path. The crate provides, bottom up:
//!
//! * [`scalar`], [`matrix`], [`subspace`] - rational and Gaussian-rational
//!   linear algebra (row reduction, kernels, images, subspace lattice).
//! * [`quad`] - quadratic spaces: exact signatures, isotropic vector search,
//!   hyperbolic completion, orthogonal complements, Witt decomposition.
//! * [`lie`] - the orthogonal Lie algebra in its bivector model, hyperbolic
//!   bases, Cartan subalgebras, roots and weights for types B and D, the
//!   Mukai extension and Weil operators.
//! * [`rep`] - functorial module constructions (tensor, symmetric and
//!   exterior powers, contraction kernels, generated submodules, weight
//!   decompositions).
//! * [`clifford`] - Clifford algebras with the spin lift and spinor modules.
//! * [`degeneration`] - construction of maximally unipotent nilpotent
//!   operators on the orthogonal complement of a polarization class.
//! * [`hodge`] - monodromy weight filtrations, nilpotent orbits, limit mixed
//!   Hodge structures and the Hodge–Tate / semi-purity predicates.

pub mod clifford;
pub mod degeneration;
pub mod error;
pub mod hodge;
pub mod lie;
pub mod matrix;
pub mod quad;
pub mod rep;
pub mod scalar;
pub mod subspace;

pub use error::Error;
pub use matrix::Matrix;
pub use scalar::{CScalar, Field, Scalar};
pub use subspace::Subspace;

/// Crate-wide result type.
pub type Result<T> = std::result::Result<T, Error>;

// Everything is immutable after construction and shareable across threads;
// pin that contract at compile time.
const _: () = {
    const fn assert_send_sync<T: Send + Sync>() {}
    assert_send_sync::<matrix::Matrix<Scalar>>();
    assert_send_sync::<matrix::Matrix<CScalar>>();
    assert_send_sync::<subspace::Subspace<Scalar>>();
    assert_send_sync::<quad::QuadSpace>();
    assert_send_sync::<lie::SOElement>();
    assert_send_sync::<lie::HyperbolicBasis>();
    assert_send_sync::<rep::RepModule>();
    assert_send_sync::<clifford::CliffordAlgebra>();
    assert_send_sync::<hodge::MixedHodge>();
};
