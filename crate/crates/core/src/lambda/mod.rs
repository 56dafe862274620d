//! λ-rings: the evaluator trait, universal polynomials, the big Witt ring, the axiom
//! verifier, augmented rings, Adams and γ operations, finitely presented λ-rings and the
//! γ-filtration on finite-dimensional rational algebras.

pub mod augment;
pub mod filtration;
pub mod ops;
pub mod presented;
pub mod upoly;
pub mod verify;
pub mod witt;

use alloc::string::String;

use num_bigint::BigInt;

use crate::exact::{binomial, AlgebraError, Integers, Ring};

pub use augment::{augment, Augmented, Fiber, ZeroFiber};
pub use filtration::{absolute_cohomology, adams_eigenspace, chern_class, FilteredAlgebra, GradedPiece};
pub use ops::{adams, adams_newton, gamma, gamma_fiber, gamma_series, lambda_series};
pub use presented::{GeneratorLambda, PresentedRing};
pub use upoly::{universal_p, universal_p2, universal_q, universal_q2, UniversalKind, UniversalPoly};
pub use verify::{verify_lambda, verify_lambda_with, AxiomResult, PolySource, UniversalCache, VerificationReport};
pub use witt::{WittElement, WittRing};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum LambdaError {
    #[error("λ^0 is only defined in a ring with unit")]
    NoUnit,
    #[error("index out of range: {0}")]
    Index(String),
    #[error("evaluator failed at λ^{k} of {elem}: {reason}")]
    Evaluator { k: usize, elem: String, reason: String },
    #[error("truncation degrees differ: {0} and {1}")]
    DegreeMismatch(usize, usize),
    #[error("action is not bilinear: {0}")]
    NotBilinear(String),
    #[error("no augmentation (rank) is defined")]
    MissingRank,
    #[error("π_{0} not modeled")]
    MissingSlot(i64),
    #[error("unexpected eigenvalue: the minimal polynomial of ψ^{k} is {minpoly}")]
    UnexpectedEigenvalue { k: usize, minpoly: String },
    #[error(transparent)]
    Algebra(#[from] AlgebraError),
    #[error("{0}")]
    Invalid(String),
}

/// A ring with operations `λ^k`. Rings without unit are never asked for `λ^0`.
pub trait LambdaRing: Ring {
    fn lambda(&self, k: usize, x: &Self::Elem) -> Result<Self::Elem, LambdaError>;

    /// The augmentation to the integers, when one is defined.
    fn rank(&self, _x: &Self::Elem) -> Option<BigInt> {
        None
    }

    /// `ψ^k(x)`; the default runs Newton's recursion on the λ's.
    fn psi(&self, k: usize, x: &Self::Elem) -> Result<Self::Elem, LambdaError> {
        ops::adams_newton(self, k, x)
    }
}

impl LambdaRing for Integers {
    fn lambda(&self, k: usize, x: &BigInt) -> Result<BigInt, LambdaError> {
        Ok(binomial(x, k))
    }

    fn rank(&self, x: &BigInt) -> Option<BigInt> {
        Some(x.clone())
    }
}

impl<L: LambdaRing> LambdaRing for &L {
    fn lambda(&self, k: usize, x: &Self::Elem) -> Result<Self::Elem, LambdaError> {
        (**self).lambda(k, x)
    }
    fn rank(&self, x: &Self::Elem) -> Option<BigInt> {
        (**self).rank(x)
    }
    fn psi(&self, k: usize, x: &Self::Elem) -> Result<Self::Elem, LambdaError> {
        (**self).psi(k, x)
    }
}

/// `λ^0 = 1` when there is a unit, otherwise an error.
pub(crate) fn lambda_zero<R: Ring>(ring: &R) -> Result<R::Elem, LambdaError> {
    ring.one().ok_or(LambdaError::NoUnit)
}
