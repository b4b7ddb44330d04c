//! Rectangular Weyl group elements of type A, their lift to `𝔖_{2n}`, and
//! exact dimension oracles for the Demazure modules involved.
//!
//! The modules follow the data flow: [`roots`] and [`perm`] give the root
//! poset and permutations, [`rectsets`] classifies inversion sets,
//! [`nabla`] handles ideals of `∇_n`, [`lift`] builds `(τ̃, λ̃)` and
//! [`dimension`] counts.

pub mod dimension;
pub mod error;
pub mod lift;
pub mod nabla;
pub mod parallel;
pub mod perm;
pub mod rectsets;
pub mod roots;
pub mod weights;

pub use dimension::{demazure_character, demazure_dim, dims_agree, polytope_count, DimsReport, FFLVFace, LaurentPoly};
pub use error::{Error, Result};
pub use lift::{d_map, lift, lift_general, sweep, verify_lift, ComponentLift, DMap, LiftResult, VerificationReport};
pub use nabla::{is_nabla_ideal, nabla, NablaIdeal, NablaImage, RowColStats};
pub use parallel::Exec;
pub use perm::{census, enumerate, PermClass, Permutation};
pub use rectsets::{Decomposition, RectCheck, RootSubset};
pub use roots::{PosRoot, RankedRootSystem, SignedRoot};
pub use weights::Weight;
