//! `R(A) ⊗ K` for a group ring `R(A)` and a finitely presented λ-ring `K`.
//!
//! The λ-structure is the one forced by the line twist `λ^k(g ⊗ κ) = g^k ⊗ λ^k(κ)` and the
//! sum formula; since Adams operations are computed generator-wise, this is automatic.

use super::group::AbelianGroup;
use crate::exact::Scalar;
use crate::lambda::presented::PresentedRing;
use crate::lambda::LambdaError;

/// The tensor product of the group ring of `group` (coordinates `t1.., s1..`) with `k`.
pub fn tensor_lambda_ring<C: Scalar>(
    group: &AbelianGroup,
    k: &PresentedRing<C>,
) -> Result<PresentedRing<C>, LambdaError> {
    super::group::GroupRing::<C>::new(group.clone()).presentation().tensor(k)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::{LaurentPoly, QPoly};
    use crate::lambda::presented::GeneratorLambda;
    use crate::lambda::{verify_lambda, LambdaRing};
    use alloc::vec::Vec;
    use num_rational::BigRational;

    /// ℚ[x]/(x - 1)^2, so that h = x - 1 squares to zero.
    fn dual_numbers() -> PresentedRing<BigRational> {
        let mut k = PresentedRing::new();
        k.add_generator("x", GeneratorLambda::Line, None).unwrap();
        k.add_relation(&"x^2".parse().unwrap(), &"2*x - 1".parse().unwrap()).unwrap();
        k
    }

    #[test]
    fn twisted_exterior_square() {
        let r = tensor_lambda_ring(&AbelianGroup::parse("torsion=2").unwrap(), &dual_numbers()).unwrap();
        let sh = r.parse("s1*x - s1").unwrap();
        // λ^2(σ⊗h) = σ^2 ⊗ λ^2(h) = 1 ⊗ (-h).
        let expect: QPoly = "1 - x".parse().unwrap();
        assert_eq!(r.lambda(2, &sh).unwrap(), expect);
        let samples: Vec<QPoly> = ["s1*x - s1", "s1 + x", "2*x - 1"].iter().map(|s| r.parse(s).unwrap()).collect();
        let report = verify_lambda(&r, &samples, 3, 2).unwrap();
        assert!(report.passed(), "{}", report);
    }

    #[test]
    fn trivial_factors_recover_the_other_side() {
        let k = dual_numbers();
        let trivial = tensor_lambda_ring(&AbelianGroup::parse("").unwrap(), &k).unwrap();
        let x = trivial.parse("3*x - 2").unwrap();
        assert_eq!(trivial.lambda(3, &x).unwrap(), k.lambda(3, &x).unwrap());

        let integers: PresentedRing<num_bigint::BigInt> = PresentedRing::new();
        let g = AbelianGroup::parse("torsion=3").unwrap();
        let r = tensor_lambda_ring(&g, &integers).unwrap();
        let group_ring = crate::rep::GroupRing::<num_bigint::BigInt>::new(g);
        let y: LaurentPoly = "2*s1 - s1^2".parse().unwrap();
        for n in 0..=4 {
            assert_eq!(r.lambda(n, &y).unwrap(), group_ring.lambda(n, &y).unwrap());
        }
    }
}
