//! Exact mod-3 cohomology of products of circles and BZ/3.
//!
//! The crate is organised bottom-up:
//!
//! * [`algebra`]: graded-commutative F₃-algebras with exterior degree-1 and
//!   polynomial degree-2 generators, truncated above a degree cap.
//! * [`steenrod`]: β, P¹ and Q₁ = [P¹, β] extended as derivations, with an
//!   axiom self-check.
//! * [`spaces`]: the circle, BZ/3 and Künneth products such as BΓₙ.
//! * [`homology`]: the dual side: Kronecker pairing, cap products,
//!   transposed operations and the mod-3 shadow of the d₅ differential.
//! * [`checker`]: the criterion ρ(α₁)⋯ρ(α_{n−2})·βQ₁ζ ≠ 0 and a witness
//!   search over a presentation.
//! * [`cli`]: the `steenrod3` command-line front end and its JSON reports.

pub mod algebra;
pub mod checker;
pub mod cli;
pub mod error;
pub mod f3;
pub mod homology;
pub mod parse;
pub mod report;
pub mod spaces;
pub mod steenrod;

pub use algebra::{Element, GeneratorId, GeneratorSpec, Monomial, SpaceMeta, SpacePresentation};
pub use checker::WitnessReport;
pub use error::{Error, Result};
pub use f3::F3;
pub use homology::{F3Matrix, HomologyClass};
pub use steenrod::OperationKind;
