//! Coefficient domains: arbitrary-precision integers and rationals.

use core::fmt::{Debug, Display};
use core::ops::{Add, Mul, Neg, Sub};
use core::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

/// An exact coefficient domain of characteristic zero.
pub trait Scalar:
    Clone
    + Eq
    + Ord
    + Debug
    + Display
    + Zero
    + One
    + Signed
    + Neg<Output = Self>
    + Add<Output = Self>
    + Sub<Output = Self>
    + Mul<Output = Self>
{
    /// Whether the domain is a field (every nonzero integer is invertible).
    const IS_FIELD: bool;

    fn from_bigint(n: BigInt) -> Self;

    fn from_i64(n: i64) -> Self {
        Self::from_bigint(BigInt::from(n))
    }

    /// Exact division by a nonzero integer; `None` when the quotient leaves the domain.
    fn div_int(&self, n: &BigInt) -> Option<Self>;

    /// Exact division; `None` when the quotient leaves the domain or `rhs` is zero.
    fn div_exact(&self, rhs: &Self) -> Option<Self>;

    /// The value as an integer, if it is one.
    fn to_bigint(&self) -> Option<BigInt>;

    fn parse_literal(s: &str) -> Option<Self>;
}

impl Scalar for BigInt {
    const IS_FIELD: bool = false;

    fn from_bigint(n: BigInt) -> Self {
        n
    }

    fn div_int(&self, n: &BigInt) -> Option<Self> {
        if n.is_zero() {
            return None;
        }
        let (q, r) = self.div_rem(n);
        r.is_zero().then_some(q)
    }

    fn div_exact(&self, rhs: &Self) -> Option<Self> {
        self.div_int(rhs)
    }

    fn to_bigint(&self) -> Option<BigInt> {
        Some(self.clone())
    }

    fn parse_literal(s: &str) -> Option<Self> {
        BigInt::from_str(s).ok()
    }
}

impl Scalar for BigRational {
    const IS_FIELD: bool = true;

    fn from_bigint(n: BigInt) -> Self {
        BigRational::from_integer(n)
    }

    fn div_int(&self, n: &BigInt) -> Option<Self> {
        if n.is_zero() {
            return None;
        }
        Some(self / BigRational::from_integer(n.clone()))
    }

    fn div_exact(&self, rhs: &Self) -> Option<Self> {
        if rhs.is_zero() {
            return None;
        }
        Some(self / rhs)
    }

    fn to_bigint(&self) -> Option<BigInt> {
        self.is_integer().then(|| self.to_integer())
    }

    fn parse_literal(s: &str) -> Option<Self> {
        match s.split_once('/') {
            Some((n, d)) => {
                let n = BigInt::from_str(n).ok()?;
                let d = BigInt::from_str(d).ok()?;
                (!d.is_zero()).then(|| BigRational::new(n, d))
            }
            None => BigInt::from_str(s).ok().map(BigRational::from_integer),
        }
    }
}

/// Generalized binomial coefficient `C(n, k)` for any integer `n` and `k >= 0`.
pub fn binomial(n: &BigInt, k: usize) -> BigInt {
    let mut num = BigInt::one();
    let mut den = BigInt::one();
    for i in 0..k {
        num *= n - BigInt::from(i);
        den *= BigInt::from(i + 1);
    }
    num / den
}

/// Generalized binomial coefficient `C(q, k)` for a rational `q`.
pub fn binomial_q(q: &BigRational, k: usize) -> BigRational {
    let mut acc = BigRational::one();
    for i in 0..k {
        acc = acc * (q - BigRational::from_integer(BigInt::from(i))) / BigRational::from_integer(BigInt::from(i + 1));
    }
    acc
}

/// Binomial coefficient on machine integers, used for counting.
pub fn binomial_usize(n: usize, k: usize) -> usize {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    let mut acc: usize = 1;
    for i in 0..k {
        acc = acc * (n - i) / (i + 1);
    }
    acc
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn binomials_extend_to_negative_arguments() {
        assert_eq!(binomial(&BigInt::from(5), 2), BigInt::from(10));
        assert_eq!(binomial(&BigInt::from(-1), 3), BigInt::from(-1));
        assert_eq!(binomial(&BigInt::from(-2), 2), BigInt::from(3));
        assert_eq!(binomial(&BigInt::from(2), 3), BigInt::zero());
        let half = BigRational::new(BigInt::from(1), BigInt::from(2));
        assert_eq!(binomial_q(&half, 2), BigRational::new(BigInt::from(-1), BigInt::from(8)));
    }

    #[test]
    fn exact_division_rejects_remainders() {
        assert_eq!(BigInt::from(6).div_int(&BigInt::from(3)), Some(BigInt::from(2)));
        assert_eq!(BigInt::from(7).div_int(&BigInt::from(3)), None);
        assert!(BigRational::from_i64(7).div_int(&BigInt::from(3)).is_some());
    }

    #[test]
    fn rational_literals_parse() {
        assert_eq!(BigRational::parse_literal("3/2"), Some(BigRational::new(BigInt::from(3), BigInt::from(2))));
        assert_eq!(BigInt::parse_literal("-12"), Some(BigInt::from(-12)));
    }
}
