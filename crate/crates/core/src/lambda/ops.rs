//! Adams operations, γ-operations and the generating series `λ_t`, `γ_t`.

use alloc::vec::Vec;

use num_bigint::BigInt;

use super::witt::{WittElement, WittRing};
use super::{lambda_zero, LambdaError, LambdaRing};
use crate::exact::{binomial_usize, Ring};

/// `ψ^k(x)`, through the ring's preferred route.
pub fn adams<R: LambdaRing>(ring: &R, k: usize, x: &R::Elem) -> Result<R::Elem, LambdaError> {
    ring.psi(k, x)
}

/// `ψ^k(x)` by `ψ^k = Σ_{i=1}^{k-1} (-1)^{i-1} λ^i ψ^{k-i} + (-1)^{k+1} k λ^k`.
pub fn adams_newton<R: LambdaRing + ?Sized>(ring: &R, k: usize, x: &R::Elem) -> Result<R::Elem, LambdaError> {
    if k == 0 {
        return Err(LambdaError::Index("ψ^0 is not defined".into()));
    }
    let lambdas: Vec<R::Elem> = (1..=k).map(|i| ring.lambda(i, x)).collect::<Result<_, _>>()?;
    let mut psi: Vec<R::Elem> = Vec::with_capacity(k);
    for n in 1..=k {
        let mut acc = ring.scale(&lambdas[n - 1], &BigInt::from(n));
        if n % 2 == 0 {
            acc = ring.neg(&acc);
        }
        for i in 1..n {
            let t = ring.mul(&lambdas[i - 1], &psi[n - i - 1]);
            acc = if i % 2 == 1 { ring.add(&acc, &t) } else { ring.sub(&acc, &t) };
        }
        psi.push(acc);
    }
    Ok(psi.pop().expect("k >= 1"))
}

/// `γ^k(x) = λ^k(x + (k-1)·1)`; `γ^0 = 1`. Needs a unit.
pub fn gamma<R: LambdaRing>(ring: &R, k: usize, x: &R::Elem) -> Result<R::Elem, LambdaError> {
    let one = lambda_zero(ring)?;
    if k == 0 {
        return Ok(one);
    }
    let shifted = ring.add(x, &ring.scale(&one, &BigInt::from(k - 1)));
    ring.lambda(k, &shifted)
}

/// `γ^k(β) = Σ_{i=0}^{k-1} C(k-1, i) λ^{k-i}(β)` for an element of a ring without unit.
pub fn gamma_fiber<R: LambdaRing>(ring: &R, k: usize, x: &R::Elem) -> Result<R::Elem, LambdaError> {
    if k == 0 {
        return Err(LambdaError::NoUnit);
    }
    let mut acc = ring.zero();
    for i in 0..k {
        let term = ring.scale(&ring.lambda(k - i, x)?, &BigInt::from(binomial_usize(k - 1, i)));
        acc = ring.add(&acc, &term);
    }
    Ok(acc)
}

/// `λ_t(x) = 1 + λ^1(x) t + ... + λ^d(x) t^d` as an element of the Witt ring over `ring`.
pub fn lambda_series<R: LambdaRing + Clone>(
    ring: &R,
    x: &R::Elem,
    d: usize,
) -> Result<WittElement<R::Elem>, LambdaError> {
    let mut c = Vec::with_capacity(d + 1);
    c.push(lambda_zero(ring)?);
    for k in 1..=d {
        c.push(ring.lambda(k, x)?);
    }
    WittRing::new(ring.clone(), d).element(c)
}

/// `γ_t(x) = 1 + γ^1(x) t + ... + γ^d(x) t^d`.
pub fn gamma_series<R: LambdaRing + Clone>(
    ring: &R,
    x: &R::Elem,
    d: usize,
) -> Result<WittElement<R::Elem>, LambdaError> {
    let mut c = Vec::with_capacity(d + 1);
    for k in 0..=d {
        c.push(gamma(ring, k, x)?);
    }
    WittRing::new(ring.clone(), d).element(c)
}

/// `λ_{t/(1-t)}` applied to the coefficients of `λ_t(x)`, i.e. the series `γ_t(x)` must equal.
pub fn substitute_t_over_one_minus_t<R: Ring>(ring: &R, lambdas: &[R::Elem]) -> Vec<R::Elem> {
    // (t/(1-t))^j = Σ_{n>=j} C(n-1, n-j) t^n.
    let d = lambdas.len() - 1;
    let mut out = alloc::vec![ring.zero(); d + 1];
    out[0] = lambdas[0].clone();
    for (j, lj) in lambdas.iter().enumerate().skip(1) {
        for (n, slot) in out.iter_mut().enumerate().skip(j) {
            let c = BigInt::from(binomial_usize(n - 1, n - j));
            *slot = ring.add(slot, &ring.scale(lj, &c));
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::Integers;

    #[test]
    fn gamma_one_is_identity() {
        for n in -4..=4 {
            let x = BigInt::from(n);
            assert_eq!(gamma(&Integers, 1, &x).unwrap(), x);
        }
    }

    #[test]
    fn adams_two_unwinds() {
        for n in -4..=6 {
            let x = BigInt::from(n);
            let expect = &x * &x - 2 * Integers.lambda(2, &x).unwrap();
            assert_eq!(adams(&Integers, 2, &x).unwrap(), expect);
        }
    }

    #[test]
    fn adams_on_integers_is_identity() {
        for n in -3..=3 {
            for k in 1..=6 {
                assert_eq!(adams(&Integers, k, &BigInt::from(n)).unwrap(), BigInt::from(n));
            }
        }
    }

    #[test]
    fn gamma_series_is_reparametrized_lambda_series() {
        for n in -3..=3 {
            let x = BigInt::from(n);
            let lam = lambda_series(&Integers, &x, 6).unwrap();
            let gam = gamma_series(&Integers, &x, 6).unwrap();
            assert_eq!(substitute_t_over_one_minus_t(&Integers, lam.coeffs()), gam.coeffs());
        }
    }

    #[test]
    fn gamma_zero_needs_a_unit() {
        assert_eq!(gamma(&Integers, 0, &BigInt::from(5)).unwrap(), BigInt::from(1));
        assert!(gamma_fiber(&Integers, 0, &BigInt::from(5)).is_err());
    }
}
