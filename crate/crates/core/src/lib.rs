//! Exact computations in the q-Onsager algebra.
//!
//! The algebra is presented on two generators modulo the q-Dolan–Grady
//! relations. Normal forms come from a degree-bounded completion
//! ([`rewrite`]); root vectors and their commutation relations live in
//! [`onsager`] and [`pbw`]; [`classical`] is the `q → 1` oracle.

pub mod classical;
pub mod coeff;
pub mod freealg;
pub mod linalg;
pub mod onsager;
pub mod pbw;
pub mod rewrite;
pub mod roots;
pub mod scalar;
pub mod suite;

pub use coeff::Coefficient;
pub use roots::Root;
pub use scalar::Scalar;

/// Free-algebra polynomials over `Q(q, c)`.
pub type Poly = freealg::NcPoly<Scalar>;
/// Rewrite systems over `Q(q, c)`.
pub type System = rewrite::RewriteSystem<Scalar>;
/// Algebra morphisms over `Q(q, c)`.
pub type Morphism = freealg::AlgebraMorphism<Scalar>;
