//! The rationalized augmentation ideal of a group ring with zero product, as a λ-ring
//! without unit: `λ^k(s) = (-1)^{k-1} ψ^k(s) / k`.

use alloc::format;
use alloc::string::String;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Zero;

use super::group::GroupRing;
use crate::exact::{Integers, QPoly, Ring};
use crate::lambda::{Fiber, LambdaError, LambdaRing};

#[derive(Clone, Debug)]
pub struct ZeroProductIdeal {
    ring: GroupRing<BigRational>,
}

impl ZeroProductIdeal {
    pub fn new(ring: GroupRing<BigRational>) -> Self {
        ZeroProductIdeal { ring }
    }

    pub fn ambient(&self) -> &GroupRing<BigRational> {
        &self.ring
    }

    /// Accepts an element of the augmentation ideal (coefficients summing to zero).
    pub fn element(&self, p: &QPoly) -> Result<QPoly, LambdaError> {
        let p = self.ring.element(p)?;
        let sum = p.terms().fold(BigRational::zero(), |acc, (_, c)| acc + c);
        if !sum.is_zero() {
            return Err(LambdaError::Invalid(format!("{} is not in the augmentation ideal", p)));
        }
        Ok(p)
    }
}

impl Ring for ZeroProductIdeal {
    type Elem = QPoly;

    fn zero(&self) -> QPoly {
        QPoly::zero()
    }
    fn one(&self) -> Option<QPoly> {
        None
    }
    fn add(&self, a: &QPoly, b: &QPoly) -> QPoly {
        a.add(b)
    }
    fn neg(&self, a: &QPoly) -> QPoly {
        a.neg()
    }
    fn mul(&self, _: &QPoly, _: &QPoly) -> QPoly {
        QPoly::zero()
    }
    fn scale(&self, a: &QPoly, n: &BigInt) -> QPoly {
        self.ring.scale(a, n)
    }
    fn div_int(&self, a: &QPoly, n: &BigInt) -> Option<QPoly> {
        a.div_int(n)
    }
    fn show(&self, a: &QPoly) -> String {
        format!("{}", a)
    }
}

impl LambdaRing for ZeroProductIdeal {
    fn lambda(&self, k: usize, x: &QPoly) -> Result<QPoly, LambdaError> {
        if k == 0 {
            return Err(LambdaError::NoUnit);
        }
        let psi = self.ring.psi(k, x)?;
        let sign = if k % 2 == 1 { 1 } else { -1 };
        Ok(psi.scale(&BigRational::new(BigInt::from(sign), BigInt::from(k))))
    }

    fn psi(&self, k: usize, x: &QPoly) -> Result<QPoly, LambdaError> {
        self.ring.psi(k, x)
    }
}

impl Fiber<Integers> for ZeroProductIdeal {
    fn act(&self, _: &Integers, r: &BigInt, s: &QPoly) -> QPoly {
        self.ring.scale(s, r)
    }
}

impl Fiber<GroupRing<BigInt>> for ZeroProductIdeal {
    fn act(&self, _: &GroupRing<BigInt>, r: &crate::exact::LaurentPoly, s: &QPoly) -> QPoly {
        self.ring.mul(&r.to_rational(), s)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lambda::{augment, verify_lambda};
    use crate::rep::AbelianGroup;
    use alloc::vec::Vec;

    #[test]
    fn integers_plus_rational_ideal_of_cyclic_group() {
        let g = AbelianGroup::parse("torsion=2").unwrap();
        let ideal = ZeroProductIdeal::new(GroupRing::new(g));
        let fiber: Vec<QPoly> = ["s1 - 1", "3/2*s1 - 3/2", "-2*s1 + 2"]
            .iter()
            .map(|s| ideal.element(&s.parse().unwrap()).unwrap())
            .collect();
        let base: Vec<BigInt> = (-2..=3).map(BigInt::from).collect();
        let a = augment(Integers, ideal, &base, &fiber).unwrap();
        let samples: Vec<_> = base.iter().zip(fiber.iter().cycle()).map(|(r, s)| (r.clone(), s.clone())).collect();
        let report = verify_lambda(&a, &samples, 4, 1).unwrap();
        assert!(report.passed(), "{}", report);
    }

    #[test]
    fn rejects_elements_outside_the_ideal() {
        let ideal = ZeroProductIdeal::new(GroupRing::new(AbelianGroup::parse("torsion=2").unwrap()));
        assert!(ideal.element(&"s1".parse().unwrap()).is_err());
    }
}
