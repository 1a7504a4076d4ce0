//! Exact computations for representations of the generalized Kronecker
//! algebra `K_r` (two vertices, `r >= 2` parallel arrows).
//!
//! The crate builds the Grassmannian-indexed family of test modules `X_U`,
//! decides constant and equal d-socle/d-radical rank by exhaustive surveys
//! over finite fields, computes Auslander-Reiten translates and Ext data,
//! realizes non-split extensions and self-extension towers, and carries
//! modules between `Gamma_r` and `Gamma_s`, through `GL_r` twists, and into
//! radical-square-zero modules over elementary abelian group algebras.
//!
//! All arithmetic is exact, over `F_p` or `Q`. Start with the runnable
//! examples (`cargo run --example ringel_socle_ranks`) or the `kronrank`
//! binary for the batch interface.

pub mod ar;
pub mod cli;
pub mod error;
pub mod forms;
pub mod functors;
pub mod grassmann;
pub mod linalg;
pub mod quiver;
pub mod rank_props;
pub mod test_modules;

pub use error::{Error, Result};
pub use forms::{FormContext, RootClass, RootPosition};
pub use grassmann::{gaussian_binomial, grassmannian_points, Subspace};
pub use linalg::{Field, Matrix, Scalar};
pub use quiver::{
    hom_basis, hom_dim, is_indecomposable, is_isomorphic, DimVector, IndecVerdict, IsoVerdict,
    KroneckerModule, Morphism,
};
pub use rank_props::{PropertyVerdict, Scope, Status, SurveyMode};
pub use test_modules::{injective, projective, recover_subspace, ringel_e, x_u_module, TestModule};
