//! Representation rings of diagonalizable groups and related λ-rings: group rings with the
//! line structure, Weyl-invariant subrings, the representation ring of `M_N × M_N` and its
//! class-level substitution maps, and tensor products with finitely presented λ-rings.

pub mod group;
pub mod ideal;
pub mod monoid;
pub mod tensor;
pub mod weyl;

pub use group::{line_twist_check, AbelianGroup, GroupRing};
pub use ideal::ZeroProductIdeal;
pub use monoid::{substitute_classes, MonoidRepRing};
pub use tensor::tensor_lambda_ring;
pub use weyl::{WeylAction, WEYL_CAP};
