//! Augmented rings `R ⊕ S`: a λ-ring with unit `R` acting on a λ-ring without unit `S`.
//!
//! `(r, s)(r', t) = (r r', r·t + r'·s + s t)` and
//! `λ^n(r, s) = (λ^n r, Σ_{i=0}^{n-1} λ^i(r)·λ^{n-i}(s))`.

use alloc::format;
use alloc::string::String;

use num_bigint::BigInt;

use super::{lambda_zero, LambdaError, LambdaRing};
use crate::exact::Ring;

/// A ring without unit carrying an action of `R`.
pub trait Fiber<R: Ring>: LambdaRing {
    fn act(&self, base: &R, r: &R::Elem, s: &Self::Elem) -> Self::Elem;
}

/// The zero ring, as a fiber over any base.
#[derive(Clone, Copy, Debug, Default)]
pub struct ZeroFiber;

impl Ring for ZeroFiber {
    type Elem = ();
    fn zero(&self) {}
    fn one(&self) -> Option<()> {
        None
    }
    fn add(&self, _: &(), _: &()) {}
    fn neg(&self, _: &()) {}
    fn mul(&self, _: &(), _: &()) {}
    fn scale(&self, _: &(), _: &BigInt) {}
    fn div_int(&self, _: &(), _: &BigInt) -> Option<()> {
        Some(())
    }
    fn show(&self, _: &()) -> String {
        String::from("0")
    }
}

impl LambdaRing for ZeroFiber {
    fn lambda(&self, k: usize, _: &()) -> Result<(), LambdaError> {
        if k == 0 {
            return Err(LambdaError::NoUnit);
        }
        Ok(())
    }
}

impl<R: Ring> Fiber<R> for ZeroFiber {
    fn act(&self, _: &R, _: &R::Elem, _: &()) {}
}

/// A λ-ideal of `R`, viewed as a ring without unit on which `R` acts by multiplication.
/// Membership is the caller's responsibility.
#[derive(Clone, Debug)]
pub struct Ideal<L>(pub L);

impl<L: LambdaRing> Ring for Ideal<L> {
    type Elem = L::Elem;
    fn zero(&self) -> L::Elem {
        self.0.zero()
    }
    fn one(&self) -> Option<L::Elem> {
        None
    }
    fn add(&self, a: &L::Elem, b: &L::Elem) -> L::Elem {
        self.0.add(a, b)
    }
    fn neg(&self, a: &L::Elem) -> L::Elem {
        self.0.neg(a)
    }
    fn mul(&self, a: &L::Elem, b: &L::Elem) -> L::Elem {
        self.0.mul(a, b)
    }
    fn scale(&self, a: &L::Elem, n: &BigInt) -> L::Elem {
        self.0.scale(a, n)
    }
    fn div_int(&self, a: &L::Elem, n: &BigInt) -> Option<L::Elem> {
        self.0.div_int(a, n)
    }
    fn show(&self, a: &L::Elem) -> String {
        self.0.show(a)
    }
    fn equal(&self, a: &L::Elem, b: &L::Elem) -> bool {
        self.0.equal(a, b)
    }
}

impl<L: LambdaRing> LambdaRing for Ideal<L> {
    fn lambda(&self, k: usize, x: &L::Elem) -> Result<L::Elem, LambdaError> {
        if k == 0 {
            return Err(LambdaError::NoUnit);
        }
        self.0.lambda(k, x)
    }
}

impl<L: LambdaRing> Fiber<L> for Ideal<L> {
    fn act(&self, base: &L, r: &L::Elem, s: &L::Elem) -> L::Elem {
        base.mul(r, s)
    }
}

#[derive(Clone, Debug)]
pub struct Augmented<R, S> {
    base: R,
    fiber: S,
}

impl<R: LambdaRing, S: Fiber<R>> Augmented<R, S> {
    pub fn base(&self) -> &R {
        &self.base
    }

    pub fn fiber(&self) -> &S {
        &self.fiber
    }

    /// The pair `(r, 0)`.
    pub fn from_base(&self, r: R::Elem) -> (R::Elem, S::Elem) {
        (r, self.fiber.zero())
    }

    /// The pair `(0, s)`.
    pub fn from_fiber(&self, s: S::Elem) -> (R::Elem, S::Elem) {
        (self.base.zero(), s)
    }
}

/// Builds `R ⊕ S` after spot-checking that the action is bilinear, unital and associative
/// and that it is compatible with the product of `S` on the given samples.
pub fn augment<R: LambdaRing, S: Fiber<R>>(
    base: R,
    fiber: S,
    base_samples: &[R::Elem],
    fiber_samples: &[S::Elem],
) -> Result<Augmented<R, S>, LambdaError> {
    let one = base.one().ok_or_else(|| LambdaError::Invalid("the base of an augmented ring needs a unit".into()))?;
    if fiber.has_unit() {
        return Err(LambdaError::Invalid("the fiber of an augmented ring must be a ring without unit".into()));
    }
    let act = |r: &R::Elem, s: &S::Elem| fiber.act(&base, r, s);
    let fail = |what: &str, r: &R::Elem, s: &S::Elem| {
        LambdaError::NotBilinear(format!("{} fails at r = {}, s = {}", what, base.show(r), fiber.show(s)))
    };
    for s in fiber_samples {
        if !fiber.equal(&act(&one, s), s) {
            return Err(fail("1·s = s", &one, s));
        }
        for r in base_samples {
            for r2 in base_samples {
                let lhs = act(&base.add(r, r2), s);
                let rhs = fiber.add(&act(r, s), &act(r2, s));
                if !fiber.equal(&lhs, &rhs) {
                    return Err(fail(&format!("(r + {})·s = r·s + {}·s", base.show(r2), base.show(r2)), r, s));
                }
                let lhs = act(&base.mul(r, r2), s);
                let rhs = act(r, &act(r2, s));
                if !fiber.equal(&lhs, &rhs) {
                    return Err(fail(&format!("(r·{})·s = r·({}·s)", base.show(r2), base.show(r2)), r, s));
                }
            }
            for t in fiber_samples {
                let lhs = act(r, &fiber.add(s, t));
                let rhs = fiber.add(&act(r, s), &act(r, t));
                if !fiber.equal(&lhs, &rhs) {
                    return Err(fail(&format!("r·(s + {}) = r·s + r·{}", fiber.show(t), fiber.show(t)), r, s));
                }
                let lhs = fiber.mul(&act(r, s), t);
                let rhs = act(r, &fiber.mul(s, t));
                if !fiber.equal(&lhs, &rhs) {
                    return Err(fail(&format!("(r·s)·{} = r·(s·{})", fiber.show(t), fiber.show(t)), r, s));
                }
            }
        }
    }
    Ok(Augmented { base, fiber })
}

impl<R: LambdaRing, S: Fiber<R>> Ring for Augmented<R, S> {
    type Elem = (R::Elem, S::Elem);

    fn zero(&self) -> Self::Elem {
        (self.base.zero(), self.fiber.zero())
    }
    fn one(&self) -> Option<Self::Elem> {
        Some((self.base.one()?, self.fiber.zero()))
    }
    fn add(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem {
        (self.base.add(&a.0, &b.0), self.fiber.add(&a.1, &b.1))
    }
    fn neg(&self, a: &Self::Elem) -> Self::Elem {
        (self.base.neg(&a.0), self.fiber.neg(&a.1))
    }
    fn mul(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem {
        let act = |r: &R::Elem, s: &S::Elem| self.fiber.act(&self.base, r, s);
        let s = self.fiber.add(&self.fiber.add(&act(&a.0, &b.1), &act(&b.0, &a.1)), &self.fiber.mul(&a.1, &b.1));
        (self.base.mul(&a.0, &b.0), s)
    }
    fn scale(&self, a: &Self::Elem, n: &BigInt) -> Self::Elem {
        (self.base.scale(&a.0, n), self.fiber.scale(&a.1, n))
    }
    fn div_int(&self, a: &Self::Elem, n: &BigInt) -> Option<Self::Elem> {
        Some((self.base.div_int(&a.0, n)?, self.fiber.div_int(&a.1, n)?))
    }
    fn show(&self, a: &Self::Elem) -> String {
        format!("({}, {})", self.base.show(&a.0), self.fiber.show(&a.1))
    }
    fn equal(&self, a: &Self::Elem, b: &Self::Elem) -> bool {
        self.base.equal(&a.0, &b.0) && self.fiber.equal(&a.1, &b.1)
    }
}

impl<R: LambdaRing, S: Fiber<R>> LambdaRing for Augmented<R, S> {
    fn lambda(&self, n: usize, x: &Self::Elem) -> Result<Self::Elem, LambdaError> {
        if n == 0 {
            return Ok((lambda_zero(&self.base)?, self.fiber.zero()));
        }
        let mut s = self.fiber.zero();
        for i in 0..n {
            let li = if i == 0 { lambda_zero(&self.base)? } else { self.base.lambda(i, &x.0)? };
            let term = self.fiber.act(&self.base, &li, &self.fiber.lambda(n - i, &x.1)?);
            s = self.fiber.add(&s, &term);
        }
        Ok((self.base.lambda(n, &x.0)?, s))
    }

    fn rank(&self, x: &Self::Elem) -> Option<BigInt> {
        self.base.rank(&x.0)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::Integers;
    use crate::lambda::verify_lambda;
    use alloc::vec::Vec;

    #[test]
    fn integers_plus_zero_is_integers() {
        let samples: Vec<BigInt> = (-3..=3).map(BigInt::from).collect();
        let a = augment(Integers, ZeroFiber, &samples, &[()]).unwrap();
        for x in &samples {
            for k in 0..=4 {
                assert_eq!(a.lambda(k, &(x.clone(), ())).unwrap().0, Integers.lambda(k, x).unwrap());
            }
        }
        let pairs: Vec<_> = samples.iter().map(|x| (x.clone(), ())).collect();
        assert!(verify_lambda(&a, &pairs, 4, 1).unwrap().passed());
    }

    #[test]
    fn integers_plus_ideal_of_integers() {
        // ℤ acting on itself as an ideal; the result is isomorphic to ℤ × ℤ.
        let samples: Vec<BigInt> = (-2..=2).map(BigInt::from).collect();
        let ideal: Vec<BigInt> = [-4, 2, 6].iter().map(|&v| BigInt::from(v)).collect();
        let a = augment(Integers, Ideal(Integers), &samples, &ideal).unwrap();
        let pairs: Vec<_> = samples.iter().zip(&ideal).map(|(r, s)| (r.clone(), s.clone())).collect();
        let report = verify_lambda(&a, &pairs, 3, 1).unwrap();
        assert!(report.passed(), "{}", report);
        // λ^2(r, s) = (λ^2 r, r·s + λ^2 s).
        let (r, s) = (BigInt::from(3), BigInt::from(4));
        let got = a.lambda(2, &(r.clone(), s.clone())).unwrap();
        assert_eq!(got, (Integers.lambda(2, &r).unwrap(), &r * &s + Integers.lambda(2, &s).unwrap()));
    }
}
