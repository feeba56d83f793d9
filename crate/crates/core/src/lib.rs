//! Crystal-combinatorial symplectic branching.
//!
//! The multiplicity of `V_sp(2n)(μ)` in the restriction of `V_gl(2n)(λ)` is computed three
//! ways: by counting sp-highest weight semistandard tableaux of shape `λ` and weight `μ`
//! ([`branching::count_crystal`]), by counting `n`-symplectic Littlewood-Richardson tableaux
//! of shape `λ ∖ μ` and weight `(2δ)'` ([`branching::count_sundaram`]), and by stripping
//! irreducible characters from the restricted `gl` character ([`oracle`]). The bijection
//! [`bijection::forward`] between the two tableau sets is built from the cascade operation
//! in [`cascade`].

pub mod bijection;
pub mod branching;
pub mod cascade;
pub mod crystal;
pub mod enumerate;
pub mod error;
pub mod format;
pub mod graph;
pub mod letter;
pub mod oracle;
pub mod partition;
pub mod tableau;
pub mod verify;

pub use error::{Error, Result};
pub use letter::{Letter, Word};
pub use partition::{Partition, SkewShape};
pub use tableau::{GlWeight, SpWeight, Tableau};
