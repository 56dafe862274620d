//! Finite simplicial sets and categories: nerves, diagonals, the mapping cone over the
//! interior of `Δ[1]`, its compatibility with `ΔNerve`, and `π₀`.

pub mod category;
pub mod mapping_cone;
pub mod sset;

use alloc::string::String;

pub use category::{
    category_zoo, functors, nerve, nerve_of_functor, Coproduct, FiniteCategory, Functor, Morphism, NerveTable,
};
pub use mapping_cone::{
    check_cone_nerve, cone, cone_category, cone_inclusion, cone_nerve_grid, GridReport, SimplicialCategory,
    SimplicialFunctor,
};
pub use sset::{diagonal, pi0, BisimplicialSet, FiniteSimplicialSet, SimplicialMap};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum ConeError {
    #[error("shape mismatch: {0}")]
    Shape(String),
    #[error("simplicial identity fails: {0}")]
    Identity(String),
    #[error("not a category: {0}")]
    NotCategory(String),
    #[error("not a functor: {0}")]
    NotFunctor(String),
    #[error("not a simplicial map: {0}")]
    NotSimplicialMap(String),
}
