//! The representation ring of `M_N × M_N`: the polynomial ring on `a_i = λ^i(p_1)` and
//! `b_j = λ^j(p_2)`, `1 <= i, j <= N`, with λ computed by splitting `p_1`, `p_2` into lines.

use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;

use num_bigint::BigInt;

use super::group::{AbelianGroup, GroupRing};
use crate::exact::{binomial_usize, decompose_symmetric, elementary_symmetric, eval_poly, Block, LaurentPoly, Ring};
use crate::lambda::{LambdaError, LambdaRing};

#[derive(Clone, Debug)]
pub struct MonoidRepRing {
    n: usize,
    split: GroupRing<BigInt>,
}

impl MonoidRepRing {
    pub fn new(n: usize) -> Result<Self, LambdaError> {
        if n == 0 {
            return Err(LambdaError::Invalid("N must be at least 1".into()));
        }
        let names: Vec<String> = (1..=n).map(|i| format!("x{}", i)).chain((1..=n).map(|i| format!("y{}", i))).collect();
        let split = GroupRing::with_names(AbelianGroup::new(2 * n, Vec::new())?, names)?;
        Ok(MonoidRepRing { n, split })
    }

    pub fn size(&self) -> usize {
        self.n
    }

    /// `λ^i(p_1)`.
    pub fn first(&self, i: usize) -> LaurentPoly {
        LaurentPoly::var(&format!("a{}", i))
    }

    /// `λ^j(p_2)`.
    pub fn second(&self, j: usize) -> LaurentPoly {
        LaurentPoly::var(&format!("b{}", j))
    }

    fn generator(&self, v: &str) -> Option<(char, usize)> {
        let c = v.chars().next()?;
        let i: usize = v[1..].parse().ok()?;
        ((c == 'a' || c == 'b') && (1..=self.n).contains(&i)).then_some((c, i))
    }

    /// Checks that only `a_i`, `b_j` with `i, j <= N` and nonnegative exponents occur.
    pub fn element(&self, p: &LaurentPoly) -> Result<LaurentPoly, LambdaError> {
        for v in p.vars() {
            if self.generator(v).is_none() {
                return Err(LambdaError::Invalid(format!("{} is not one of a1..a{}, b1..b{}", v, self.n, self.n)));
            }
        }
        if !p.is_polynomial() {
            return Err(LambdaError::Invalid(format!("{} has a negative exponent", p)));
        }
        Ok(p.clone())
    }

    pub fn parse(&self, s: &str) -> Result<LaurentPoly, LambdaError> {
        self.element(&s.parse::<LaurentPoly>()?)
    }

    /// `max` over monomials of `Σ i·(exponent of a_i or b_i)`; the zero element has weight 0.
    pub fn weight(&self, x: &LaurentPoly) -> i64 {
        x.terms()
            .map(|(m, _)| {
                x.vars()
                    .iter()
                    .zip(&m.0)
                    .map(|(v, &e)| self.generator(v).map_or(0, |(_, i)| i as i64 * e as i64))
                    .sum::<i64>()
            })
            .max()
            .unwrap_or(0)
    }

    pub fn in_degree(&self, x: &LaurentPoly, d: i64) -> bool {
        self.weight(x) <= d
    }

    /// The image in the split ring: `a_i ↦ e_i(x)`, `b_j ↦ e_j(y)`.
    pub fn split(&self, x: &LaurentPoly) -> Result<LaurentPoly, LambdaError> {
        let xs: Vec<String> = (1..=self.n).map(|i| format!("x{}", i)).collect();
        let ys: Vec<String> = (1..=self.n).map(|i| format!("y{}", i)).collect();
        Ok(x.substitute(|v| {
            let (c, i) = self.generator(v)?;
            Some(elementary_symmetric(if c == 'a' { &xs } else { &ys }, i))
        })?)
    }

    /// The inverse of [`MonoidRepRing::split`] on doubly symmetric polynomials.
    pub fn unsplit(&self, x: &LaurentPoly) -> Result<LaurentPoly, LambdaError> {
        Ok(decompose_symmetric(x, &[Block::numbered("a", "x", self.n), Block::numbered("b", "y", self.n)])?)
    }

    pub fn split_ring(&self) -> &GroupRing<BigInt> {
        &self.split
    }
}

impl Ring for MonoidRepRing {
    type Elem = LaurentPoly;

    fn zero(&self) -> LaurentPoly {
        LaurentPoly::zero()
    }
    fn one(&self) -> Option<LaurentPoly> {
        Some(LaurentPoly::one())
    }
    fn add(&self, a: &LaurentPoly, b: &LaurentPoly) -> LaurentPoly {
        a.add(b)
    }
    fn neg(&self, a: &LaurentPoly) -> LaurentPoly {
        a.neg()
    }
    fn mul(&self, a: &LaurentPoly, b: &LaurentPoly) -> LaurentPoly {
        a.mul(b)
    }
    fn scale(&self, a: &LaurentPoly, n: &BigInt) -> LaurentPoly {
        a.scale(n)
    }
    fn div_int(&self, a: &LaurentPoly, n: &BigInt) -> Option<LaurentPoly> {
        a.div_int(n)
    }
    fn show(&self, a: &LaurentPoly) -> String {
        format!("{}", a)
    }
}

impl LambdaRing for MonoidRepRing {
    fn lambda(&self, k: usize, x: &LaurentPoly) -> Result<LaurentPoly, LambdaError> {
        let split = self.split(x)?;
        self.unsplit(&self.split.lambda(k, &split)?)
    }

    /// `p_1` and `p_2` have rank `N`.
    fn rank(&self, x: &LaurentPoly) -> Option<BigInt> {
        let r = eval_poly(&crate::exact::Integers, x, |v| {
            self.generator(v).map(|(_, i)| BigInt::from(binomial_usize(self.n, i)))
        });
        r.ok()
    }

    fn psi(&self, k: usize, x: &LaurentPoly) -> Result<LaurentPoly, LambdaError> {
        let split = self.split(x)?;
        self.unsplit(&self.split.psi(k, &split)?)
    }
}

/// The ring map `a_i ↦ first[i-1]`, `b_j ↦ second[j-1]` into `target`.
pub fn substitute_classes<R: Ring>(
    e: &LaurentPoly,
    first: &[R::Elem],
    second: &[R::Elem],
    target: &R,
) -> Result<R::Elem, LambdaError> {
    for v in e.vars() {
        let i: Option<usize> = v.get(1..).and_then(|s| s.parse().ok());
        let (available, which) = match v.as_bytes().first() {
            Some(b'a') => (first.len(), "first"),
            Some(b'b') => (second.len(), "second"),
            _ => return Err(LambdaError::Invalid(format!("{} is not a class variable", v))),
        };
        match i {
            Some(i) if i >= 1 && i <= available => {}
            _ => {
                return Err(LambdaError::Index(format!(
                    "{} needs more λ-values of the {} class than the {} supplied",
                    v, which, available
                )))
            }
        }
    }
    eval_poly(target, e, |v| {
        let i: usize = v[1..].parse().ok()?;
        match v.as_bytes()[0] {
            b'a' => first.get(i - 1).cloned(),
            _ => second.get(i - 1).cloned(),
        }
    })
    .map_err(|err| LambdaError::Invalid(format!("cannot evaluate {}: {:?}", e, err)))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lambda::verify_lambda;

    #[test]
    fn weights() {
        let r = MonoidRepRing::new(3).unwrap();
        assert_eq!(r.weight(&r.parse("a2*b1").unwrap()), 3);
        assert_eq!(r.weight(&r.parse("a1").unwrap()), 1);
        assert!(!r.in_degree(&r.parse("a3").unwrap(), 2));
        assert!(r.in_degree(&r.parse("a1^2 + b2").unwrap(), 2));
    }

    #[test]
    fn lambda_of_generators() {
        let r = MonoidRepRing::new(2).unwrap();
        assert_eq!(r.lambda(2, &r.first(1)).unwrap(), r.first(2));
        assert!(r.lambda(3, &r.first(1)).unwrap().is_zero());
        // λ^2(a1 b1) = P_2(a; b) for rank-two classes.
        assert_eq!(r.lambda(2, &r.parse("a1*b1").unwrap()).unwrap(), r.parse("a1^2*b2 + a2*b1^2 - 2*a2*b2").unwrap());
    }

    #[test]
    fn is_a_lambda_ring() {
        let r = MonoidRepRing::new(2).unwrap();
        let samples: Vec<LaurentPoly> = ["a1", "b1 - a2", "a1*b1"].iter().map(|s| r.parse(s).unwrap()).collect();
        let report = verify_lambda(&r, &samples, 2, 1).unwrap();
        assert!(report.passed(), "{}", report);
    }

    #[test]
    fn substitution_into_a_group_ring() {
        let target = GroupRing::<BigInt>::new(AbelianGroup::parse("free=4").unwrap());
        let x = target.parse("t1 + t2").unwrap();
        let y = target.parse("t3 + t4").unwrap();
        let first = [x.clone(), target.lambda(2, &x).unwrap()];
        let second = [y.clone(), target.lambda(2, &y).unwrap()];
        let e: LaurentPoly = "a1".parse().unwrap();
        assert_eq!(substitute_classes(&e, &first, &second, &target).unwrap(), x);
        let e: LaurentPoly = "a2".parse().unwrap();
        assert_eq!(substitute_classes(&e, &first, &second, &target).unwrap(), target.parse("t1*t2").unwrap());
        let e: LaurentPoly = "a1*b1".parse().unwrap();
        assert_eq!(substitute_classes(&e, &first, &second, &target).unwrap(), target.mul(&x, &y));
        let e: LaurentPoly = "a3".parse().unwrap();
        assert!(substitute_classes(&e, &first, &second, &target).is_err());
    }
}
