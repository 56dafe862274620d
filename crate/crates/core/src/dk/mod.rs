//! Dold-Kan normalization for simplicial and cosimplicial free modules, the two-sided
//! embedding of bounded complexes into mixed objects, derived exterior powers, flagged
//! exterior powers and the shuffle/face pairings.

pub mod complex;
pub mod derived;
pub mod exterior;
pub mod ezaw;
pub mod mixed;
pub mod simplicial;
pub mod surj;

use alloc::string::String;

pub use complex::{quasi_iso_check, ChainMap, Complex, HomologyGroup, Orientation, TensorLayout};
pub use derived::{
    additivity_check, binomial_i64, derived_lambda, derived_lambda_euler, derived_lambda_with, Additivity, LevelBudget,
    SplitFlag,
};
pub use exterior::{
    check_e1_associative, check_e2_associative, check_e3, check_e4, check_e5, e1_product, e2_coproduct, e5_sequence,
    exterior_power_matrix, flag_exterior, flags, is_short_exact, quotient_projection, straighten, verify_e_conditions,
    EReport, FlagExterior,
};
pub use ezaw::{aw_map, ez_map, Pairing, PairingReport};
pub use mixed::{embed_i, embed_i_default, DoubleComplex, MixedObject, Normalized};
pub use simplicial::{denormalize, denormalize_v, dn_n_comparison, CosimplicialModule, SimplicialModule};
pub use surj::{shuffles, Shuffle, Surj};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum DkError {
    #[error("shape mismatch: {0}")]
    Shape(String),
    #[error("d∘d ≠ 0 out of degree {0}")]
    NotComplex(i64),
    #[error("simplicial identity fails: {0}")]
    Identity(String),
    #[error("not a chain map in degree {0}")]
    NotChainMap(i64),
    #[error("level budget exceeded: {required} levels required, {budget} allowed")]
    Budget { required: usize, budget: usize },
    #[error("truncation too small: {0}")]
    Truncation(String),
    #[error("flags not composable: {0}")]
    Incomposable(String),
    #[error("retraction is not a left inverse in degree {0}")]
    NotSplit(i64),
    #[error("{0}")]
    Invalid(String),
}
