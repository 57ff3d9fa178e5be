//! Exact geometric algebra over `Cl(p,q,r)` with generalized projection
//! operators.
//!
//! Multivectors are dense vectors of exact rationals indexed by basis-blade
//! bitmask, so every algebraic identity here is checked with exact equality.
//!
//! * [`signature`] and [`multivector`]: the algebra kernel (products,
//!   involutions, grade parts, canonical text).
//! * [`inverse`]: general inversion and the versor/blade classification.
//! * [`projection`]: the projectors `P_A(X) = ½(X − gi(A)·X·A†)` in their
//!   inverse and reverse kinds, the composition theorem
//!   `2·P_A∘P_B = P_A + P_B − P_{AB}`, the classic blade identities and the
//!   versor conjugation chain.
//! * [`embedding`]: outermorphism lifts of degenerate algebras and the
//!   contraction test for scalars.
//! * [`checks`]: seeded property-check suites, run in parallel when the
//!   `parallel` feature is enabled.

pub mod checks;
pub mod embedding;
pub mod error;
pub mod inverse;
pub mod multivector;
pub mod projection;
pub mod random;
pub mod signature;

pub use error::AlgebraError;
pub use multivector::{rational, Multivector, Rational};
pub use projection::{ProjectionKind, ProjectorSpec};
pub use signature::{BasisBlade, Signature};
