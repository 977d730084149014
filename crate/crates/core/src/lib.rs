//! spino-lab: a verification workbench for extended spinorial structures.
//!
//! The library is organized around seven areas:
//!
//! - [`clifford`] — exact arithmetic in real Clifford algebras `Cl_{p,q}`:
//!   geometric product, involutions, twisted norms, volume elements and the
//!   (twisted) vector representations of the Clifford group.
//! - [`lowdim`] — abstract models of the groups `O₂(α)` together with their
//!   realizations inside `Cl₂(α)` and `Cl₃(α)`, and machine checks of the
//!   commutative diagrams relating them.
//! - [`spino`] — the group `Spinᵒ_α(V,h) = [Spin(V,h) × Pin₂(α)]/{±1}`, its
//!   subgroup lattice, six elementary representations and the embeddings into
//!   `Pin(V̂)` and `Spin(V′)`.
//! - [`pinor`] — elementary real pinor representations for signatures with
//!   `p − q ≡ 3, 7 (mod 8)`: Schur algebra, anticommutant, conjugation
//!   operators, the induced `Cl₂(α)` representation and Majorana projectors.
//! - [`semilinear`] — vector-space-level semilinear structures: the group
//!   `Γ(r)`, classification of (anti)linear endomorphisms, s-Hermitian metrics
//!   and the orientation sign map.
//! - [`cohomology`] — a GF(2) characteristic-class calculus on finitely
//!   presented truncated cohomology rings, with the Spinᵒ/Spinᶜ obstruction
//!   predicates and a catalog of example spaces.
//! - [`report`] — machine-readable verification reports shared by the test
//!   suites and the `spino-lab` command-line driver.
//!
//! Algebraic identities with `±1` structure constants are checked exactly over
//! arbitrary-precision rationals; circle-group elements and matrix identities
//! use `f64` with explicit tolerances. The multivector type is generic over
//! its coefficient scalar (see [`scalar::Coeff`]); the aliases below fix the
//! two instantiations used throughout.

pub mod clifford;
pub mod cohomology;
pub mod lowdim;
pub mod pinor;
pub mod report;
pub mod sample;
pub mod scalar;
pub mod semilinear;
pub mod spino;

/// Exact-coefficient multivector: the default for algebraic identities.
pub type RatMultivector = clifford::Multivector<num_rational::BigRational>;
/// Double-precision multivector: used for angle-parametrized group elements.
pub type F64Multivector = clifford::Multivector<f64>;

pub use clifford::Signature;
