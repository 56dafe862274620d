//! Commutative rings, possibly without unit, as explicit evaluator objects.

use alloc::string::String;
use core::fmt::Debug;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use super::poly::LaurentPoly;

/// A commutative ring presented by its operations. Rings without unit return `None` from
/// [`Ring::one`].
pub trait Ring {
    type Elem: Clone + Debug + PartialEq;

    fn zero(&self) -> Self::Elem;
    fn one(&self) -> Option<Self::Elem>;
    fn add(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn neg(&self, a: &Self::Elem) -> Self::Elem;
    fn mul(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    /// `n * a`.
    fn scale(&self, a: &Self::Elem, n: &BigInt) -> Self::Elem;
    /// The unique `b` with `n * b = a`, if it exists.
    fn div_int(&self, a: &Self::Elem, n: &BigInt) -> Option<Self::Elem>;
    fn show(&self, a: &Self::Elem) -> String;

    /// Equality of elements; rings with imprecise elements compare at common precision.
    fn equal(&self, a: &Self::Elem, b: &Self::Elem) -> bool {
        a == b
    }

    fn is_zero(&self, a: &Self::Elem) -> bool {
        self.equal(a, &self.zero())
    }

    fn sub(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem {
        self.add(a, &self.neg(b))
    }

    fn has_unit(&self) -> bool {
        self.one().is_some()
    }

    /// `n * 1`, for rings with unit.
    fn from_int(&self, n: &BigInt) -> Option<Self::Elem> {
        self.one().map(|o| self.scale(&o, n))
    }

    /// `a^n` for `n >= 1`, or `n = 0` in a ring with unit.
    fn pow(&self, a: &Self::Elem, n: u32) -> Option<Self::Elem> {
        if n == 0 {
            return self.one();
        }
        let mut acc = a.clone();
        for _ in 1..n {
            acc = self.mul(&acc, a);
        }
        Some(acc)
    }

    fn sum<'a, I>(&self, items: I) -> Self::Elem
    where
        I: IntoIterator<Item = &'a Self::Elem>,
        Self::Elem: 'a,
    {
        items.into_iter().fold(self.zero(), |acc, x| self.add(&acc, x))
    }
}

/// The integers.
#[derive(Clone, Copy, Debug, Default)]
pub struct Integers;

impl Ring for Integers {
    type Elem = BigInt;

    fn zero(&self) -> BigInt {
        BigInt::zero()
    }
    fn one(&self) -> Option<BigInt> {
        Some(BigInt::one())
    }
    fn add(&self, a: &BigInt, b: &BigInt) -> BigInt {
        a + b
    }
    fn neg(&self, a: &BigInt) -> BigInt {
        -a
    }
    fn mul(&self, a: &BigInt, b: &BigInt) -> BigInt {
        a * b
    }
    fn scale(&self, a: &BigInt, n: &BigInt) -> BigInt {
        a * n
    }
    fn div_int(&self, a: &BigInt, n: &BigInt) -> Option<BigInt> {
        super::scalar::Scalar::div_int(a, n)
    }
    fn show(&self, a: &BigInt) -> String {
        alloc::format!("{}", a)
    }
}

/// Why a polynomial could not be evaluated in a ring.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum EvalError {
    /// A variable had no assigned value.
    Unbound(String),
    /// A negative exponent appeared.
    NegativeExponent(String),
    /// A nonzero constant term needs a unit.
    NoUnit,
}

/// Evaluates an integer polynomial at ring elements.
pub fn eval_poly<R: Ring>(
    ring: &R,
    p: &LaurentPoly,
    assign: impl Fn(&str) -> Option<R::Elem>,
) -> Result<R::Elem, EvalError> {
    let vals: alloc::vec::Vec<Option<R::Elem>> = p.vars().iter().map(|v| assign(v)).collect();
    let mut powers: alloc::collections::BTreeMap<(usize, i32), R::Elem> = Default::default();
    let mut acc = ring.zero();
    for (m, c) in p.terms() {
        let mut t: Option<R::Elem> = None;
        for (i, &e) in m.0.iter().enumerate() {
            if e == 0 {
                continue;
            }
            if e < 0 {
                return Err(EvalError::NegativeExponent(p.vars()[i].clone()));
            }
            let base = vals[i].clone().ok_or_else(|| EvalError::Unbound(p.vars()[i].clone()))?;
            let pw = powers.entry((i, e)).or_insert_with(|| ring.pow(&base, e as u32).expect("positive power")).clone();
            t = Some(match t {
                None => pw,
                Some(x) => ring.mul(&x, &pw),
            });
        }
        let term = match t {
            Some(x) => ring.scale(&x, c),
            None => ring.from_int(c).ok_or(EvalError::NoUnit)?,
        };
        acc = ring.add(&acc, &term);
    }
    Ok(acc)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn evaluates_in_integers() {
        let p: LaurentPoly = "x^2*y - 3*y + 1".parse().unwrap();
        let v = eval_poly(&Integers, &p, |n| match n {
            "x" => Some(BigInt::from(2)),
            "y" => Some(BigInt::from(5)),
            _ => None,
        })
        .unwrap();
        assert_eq!(v, BigInt::from(6));
    }

    #[test]
    fn unbound_variables_are_reported() {
        let p: LaurentPoly = "x + z".parse().unwrap();
        let err = eval_poly(&Integers, &p, |n| (n == "x").then(BigInt::one)).unwrap_err();
        assert_eq!(err, EvalError::Unbound("z".into()));
    }
}

/// Polynomials over `C` as a ring (used for symbolic λ computations).
#[derive(Debug, Default)]
pub struct PolyRing<C>(core::marker::PhantomData<C>);

impl<C> Clone for PolyRing<C> {
    fn clone(&self) -> Self {
        *self
    }
}

impl<C> Copy for PolyRing<C> {}

impl<C> PolyRing<C> {
    pub const fn new() -> Self {
        PolyRing(core::marker::PhantomData)
    }
}

impl<C: super::scalar::Scalar> Ring for PolyRing<C> {
    type Elem = super::poly::Poly<C>;

    fn zero(&self) -> Self::Elem {
        super::poly::Poly::zero()
    }
    fn one(&self) -> Option<Self::Elem> {
        Some(super::poly::Poly::one())
    }
    fn add(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem {
        a.add(b)
    }
    fn neg(&self, a: &Self::Elem) -> Self::Elem {
        a.neg()
    }
    fn mul(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem {
        a.mul(b)
    }
    fn scale(&self, a: &Self::Elem, n: &BigInt) -> Self::Elem {
        a.scale(&C::from_bigint(n.clone()))
    }
    fn div_int(&self, a: &Self::Elem, n: &BigInt) -> Option<Self::Elem> {
        a.div_int(n)
    }
    fn show(&self, a: &Self::Elem) -> String {
        alloc::format!("{}", a)
    }
}

impl<R: Ring> Ring for &R {
    type Elem = R::Elem;

    fn zero(&self) -> Self::Elem {
        (**self).zero()
    }
    fn one(&self) -> Option<Self::Elem> {
        (**self).one()
    }
    fn add(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem {
        (**self).add(a, b)
    }
    fn neg(&self, a: &Self::Elem) -> Self::Elem {
        (**self).neg(a)
    }
    fn mul(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem {
        (**self).mul(a, b)
    }
    fn scale(&self, a: &Self::Elem, n: &BigInt) -> Self::Elem {
        (**self).scale(a, n)
    }
    fn div_int(&self, a: &Self::Elem, n: &BigInt) -> Option<Self::Elem> {
        (**self).div_int(a, n)
    }
    fn show(&self, a: &Self::Elem) -> String {
        (**self).show(a)
    }
    fn equal(&self, a: &Self::Elem, b: &Self::Elem) -> bool {
        (**self).equal(a, b)
    }
}
