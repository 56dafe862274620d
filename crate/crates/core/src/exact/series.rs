//! Truncated power series over a ring, including the power-sum (Newton) transforms.

use alloc::vec::Vec;

use num_bigint::BigInt;
use num_traits::One;

use super::ring::Ring;

/// `a_0 + a_1 t + ... + a_d t^d`; all arithmetic discards degrees above `d`.
#[derive(Clone, Debug, PartialEq)]
pub struct TruncSeries<E> {
    pub coeffs: Vec<E>,
}

impl<E: Clone> TruncSeries<E> {
    pub fn degree(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeff(&self, n: usize) -> Option<&E> {
        self.coeffs.get(n)
    }

    pub fn truncate(&self, d: usize) -> Self {
        TruncSeries { coeffs: self.coeffs[..=d.min(self.degree())].to_vec() }
    }
}

impl<E: Clone + PartialEq + core::fmt::Debug> TruncSeries<E> {
    pub fn from_coeffs(coeffs: Vec<E>) -> Self {
        assert!(!coeffs.is_empty(), "a series has at least a constant term");
        TruncSeries { coeffs }
    }

    /// `1 + 0 t + ...` through degree `d`.
    pub fn one<R: Ring<Elem = E>>(ring: &R, d: usize) -> Self {
        let mut coeffs = alloc::vec![ring.zero(); d + 1];
        coeffs[0] = ring.one().expect("series with constant term need a unit");
        TruncSeries { coeffs }
    }

    pub fn add<R: Ring<Elem = E>>(&self, ring: &R, other: &Self) -> Self {
        let d = self.degree().min(other.degree());
        TruncSeries { coeffs: (0..=d).map(|i| ring.add(&self.coeffs[i], &other.coeffs[i])).collect() }
    }

    pub fn mul<R: Ring<Elem = E>>(&self, ring: &R, other: &Self) -> Self {
        let d = self.degree().min(other.degree());
        let mut out = alloc::vec![ring.zero(); d + 1];
        for i in 0..=d {
            if ring.is_zero(&self.coeffs[i]) {
                continue;
            }
            for j in 0..=d - i {
                let t = ring.mul(&self.coeffs[i], &other.coeffs[j]);
                out[i + j] = ring.add(&out[i + j], &t);
            }
        }
        TruncSeries { coeffs: out }
    }

    /// Reciprocal of a series with constant term 1.
    pub fn reciprocal<R: Ring<Elem = E>>(&self, ring: &R) -> Self {
        let d = self.degree();
        let mut out: Vec<E> = Vec::with_capacity(d + 1);
        out.push(self.coeffs[0].clone());
        for n in 1..=d {
            let mut acc = ring.zero();
            for i in 1..=n {
                acc = ring.add(&acc, &ring.mul(&self.coeffs[i], &out[n - i]));
            }
            out.push(ring.neg(&acc));
        }
        TruncSeries { coeffs: out }
    }

    /// Integer power of a series with constant term 1.
    pub fn pow_int<R: Ring<Elem = E>>(&self, ring: &R, n: &BigInt) -> Self {
        use num_traits::Signed;
        let base = if n.is_negative() { self.reciprocal(ring) } else { self.clone() };
        let mut e = n.abs();
        let mut acc = TruncSeries::one(ring, self.degree());
        let mut b = base;
        let two = BigInt::from(2);
        while e > BigInt::from(0) {
            if (&e % &two).is_one() {
                acc = acc.mul(ring, &b);
            }
            e /= &two;
            if e > BigInt::from(0) {
                b = b.mul(ring, &b);
            }
        }
        acc
    }

    /// Power sums of the formal roots: for `1 + Σ e_n t^n = Π (1 + ξ t)` returns
    /// `p_1..p_d` with `p_n = Σ ξ^n`, by Newton's identities (no division needed).
    pub fn power_sums<R: Ring<Elem = E>>(&self, ring: &R) -> Vec<E> {
        let d = self.degree();
        let mut p: Vec<E> = Vec::with_capacity(d);
        for n in 1..=d {
            // n e_n = Σ_{i=1}^{n} (-1)^{i-1} e_{n-i} p_i  with e_0 = 1.
            let mut acc = ring.scale(&self.coeffs[n], &BigInt::from(n));
            for i in 1..n {
                let t = ring.mul(&self.coeffs[n - i], &p[i - 1]);
                acc = if (i - 1) % 2 == 0 { ring.sub(&acc, &t) } else { ring.add(&acc, &t) };
            }
            p.push(if (n - 1) % 2 == 0 { acc } else { ring.neg(&acc) });
        }
        p
    }

    /// Inverse of [`TruncSeries::power_sums`]; `None` when a division by `n` is not exact.
    /// `one` is the constant coefficient to use (the ring may lack a unit of its own).
    pub fn from_power_sums<R: Ring<Elem = E>>(ring: &R, one: E, p: &[E]) -> Option<Self> {
        let mut e: Vec<E> = Vec::with_capacity(p.len() + 1);
        e.push(one);
        for n in 1..=p.len() {
            let mut acc = ring.zero();
            for i in 1..=n {
                let t = if n == i { p[i - 1].clone() } else { ring.mul(&e[n - i], &p[i - 1]) };
                acc = if (i - 1) % 2 == 0 { ring.add(&acc, &t) } else { ring.sub(&acc, &t) };
            }
            e.push(ring.div_int(&acc, &BigInt::from(n))?);
        }
        Some(TruncSeries { coeffs: e })
    }
}
