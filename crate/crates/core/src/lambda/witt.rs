//! The big Witt ring `1 + t·R[[t]]`, truncated.
//!
//! Addition is the product of series and multiplication is determined by `p_n(u•v) =
//! p_n(u)·p_n(v)` on power sums (ghost components). Both `•` and `λ^k` are computed through
//! power sums, so they are independent of the universal polynomials they are checked against.

use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;

use num_bigint::BigInt;

use super::{LambdaError, LambdaRing};
use crate::exact::{Ring, TruncSeries};

/// A series `1 + a_1 t + ... + a_d t^d`; `d` is the precision to which it is known.
#[derive(Clone, Debug, PartialEq)]
pub struct WittElement<E> {
    series: TruncSeries<E>,
}

impl<E: Clone> WittElement<E> {
    pub fn precision(&self) -> usize {
        self.series.degree()
    }

    /// `a_n`; panics beyond the precision.
    pub fn coeff(&self, n: usize) -> &E {
        &self.series.coeffs[n]
    }

    pub fn coeffs(&self) -> &[E] {
        &self.series.coeffs
    }

    pub fn series(&self) -> &TruncSeries<E> {
        &self.series
    }
}

#[derive(Clone, Debug)]
pub struct WittRing<R> {
    base: R,
    degree: usize,
}

impl<R: Ring> WittRing<R> {
    /// The Witt ring over `base` truncated at `degree`; `base` must have a unit.
    pub fn new(base: R, degree: usize) -> Self {
        assert!(base.has_unit(), "the Witt ring needs a base with unit");
        WittRing { base, degree }
    }

    pub fn base(&self) -> &R {
        &self.base
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    fn base_one(&self) -> R::Elem {
        self.base.one().expect("checked at construction")
    }

    /// Builds `1 + a_1 t + ...` from `[1, a_1, ..., a_d]`; `d` may be below the ring's degree.
    pub fn element(&self, coeffs: Vec<R::Elem>) -> Result<WittElement<R::Elem>, LambdaError> {
        if coeffs.is_empty() || !self.base.equal(&coeffs[0], &self.base_one()) {
            return Err(LambdaError::Invalid("a Witt element has constant term 1".into()));
        }
        if coeffs.len() > self.degree + 1 {
            return Err(LambdaError::DegreeMismatch(coeffs.len() - 1, self.degree));
        }
        Ok(WittElement { series: TruncSeries::from_coeffs(coeffs) })
    }

    /// `1 + a t`.
    pub fn line(&self, a: R::Elem) -> WittElement<R::Elem> {
        let mut c = alloc::vec![self.base.zero(); self.degree + 1];
        c[0] = self.base_one();
        c[1] = a;
        WittElement { series: TruncSeries::from_coeffs(c) }
    }

    fn same_degree(&self, u: &WittElement<R::Elem>, v: &WittElement<R::Elem>) -> Result<(), LambdaError> {
        if u.precision() != v.precision() {
            return Err(LambdaError::DegreeMismatch(u.precision(), v.precision()));
        }
        Ok(())
    }

    /// `u ⊞ v`, requiring equal truncation degrees.
    pub fn checked_add(
        &self,
        u: &WittElement<R::Elem>,
        v: &WittElement<R::Elem>,
    ) -> Result<WittElement<R::Elem>, LambdaError> {
        self.same_degree(u, v)?;
        Ok(self.add(u, v))
    }

    /// `u • v`, requiring equal truncation degrees.
    pub fn checked_mul(
        &self,
        u: &WittElement<R::Elem>,
        v: &WittElement<R::Elem>,
    ) -> Result<WittElement<R::Elem>, LambdaError> {
        self.same_degree(u, v)?;
        Ok(self.mul(u, v))
    }

    fn from_ghosts(&self, ghosts: &[R::Elem]) -> Option<WittElement<R::Elem>> {
        TruncSeries::from_power_sums(&self.base, self.base_one(), ghosts).map(|series| WittElement { series })
    }

    /// Power sums `p_1..p_d` of the formal roots.
    pub fn ghosts(&self, u: &WittElement<R::Elem>) -> Vec<R::Elem> {
        u.series.power_sums(&self.base)
    }
}

impl<R: Ring> Ring for WittRing<R> {
    type Elem = WittElement<R::Elem>;

    fn zero(&self) -> Self::Elem {
        WittElement { series: TruncSeries::one(&self.base, self.degree) }
    }

    fn one(&self) -> Option<Self::Elem> {
        Some(self.line(self.base_one()))
    }

    fn add(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem {
        WittElement { series: a.series.mul(&self.base, &b.series) }
    }

    fn neg(&self, a: &Self::Elem) -> Self::Elem {
        WittElement { series: a.series.reciprocal(&self.base) }
    }

    fn mul(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem {
        let d = a.precision().min(b.precision());
        let (pa, pb) = (self.ghosts(a), self.ghosts(b));
        let ghosts: Vec<R::Elem> = (0..d).map(|i| self.base.mul(&pa[i], &pb[i])).collect();
        self.from_ghosts(&ghosts).expect("Witt products have integral coefficients")
    }

    fn scale(&self, a: &Self::Elem, n: &BigInt) -> Self::Elem {
        WittElement { series: a.series.pow_int(&self.base, n) }
    }

    fn div_int(&self, a: &Self::Elem, n: &BigInt) -> Option<Self::Elem> {
        let ghosts = self.ghosts(a).iter().map(|p| self.base.div_int(p, n)).collect::<Option<Vec<_>>>()?;
        let b = self.from_ghosts(&ghosts)?;
        self.equal(&self.scale(&b, n), a).then_some(b)
    }

    fn show(&self, a: &Self::Elem) -> String {
        let mut out = String::from("1");
        for (n, c) in a.series.coeffs.iter().enumerate().skip(1) {
            if self.base.is_zero(c) {
                continue;
            }
            let s = self.base.show(c);
            let s = if s.contains(' ') { format!("({})", s) } else { s };
            let t = if n == 1 { String::from("t") } else { format!("t^{}", n) };
            out.push_str(&format!(" + {}*{}", s, t));
        }
        out.push_str(&format!(" + O(t^{})", a.precision() + 1));
        out
    }

    fn equal(&self, a: &Self::Elem, b: &Self::Elem) -> bool {
        let d = a.precision().min(b.precision());
        (0..=d).all(|i| self.base.equal(&a.series.coeffs[i], &b.series.coeffs[i]))
    }
}

impl<R: Ring> LambdaRing for WittRing<R> {
    /// `p_n(λ^k u) = e_k(p_n(u), p_{2n}(u), ..., p_{kn}(u))`; the result is known to degree
    /// `floor(d / k)`.
    fn lambda(&self, k: usize, u: &Self::Elem) -> Result<Self::Elem, LambdaError> {
        match k {
            0 => return Ok(self.one().expect("unit")),
            1 => return Ok(u.clone()),
            _ => {}
        }
        let d = u.precision() / k;
        let p = self.ghosts(u);
        let fail = |reason: &str| LambdaError::Evaluator { k, elem: self.show(u), reason: reason.into() };
        let mut ghosts = Vec::with_capacity(d);
        for n in 1..=d {
            let sums: Vec<R::Elem> = (1..=k).map(|j| p[j * n - 1].clone()).collect();
            let e = TruncSeries::from_power_sums(&self.base, self.base_one(), &sums)
                .ok_or_else(|| fail("division by an integer is not exact in the base"))?;
            ghosts.push(e.coeffs[k].clone());
        }
        self.from_ghosts(&ghosts).ok_or_else(|| fail("division by an integer is not exact in the base"))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::Integers;

    fn w(coeffs: &[i64]) -> WittElement<BigInt> {
        WittRing::new(Integers, coeffs.len() - 1).element(coeffs.iter().map(|&c| BigInt::from(c)).collect()).unwrap()
    }

    #[test]
    fn sum_is_series_product() {
        let r = WittRing::new(Integers, 2);
        let (a, b) = (BigInt::from(3), BigInt::from(-5));
        let s = r.add(&r.line(a.clone()), &r.line(b.clone()));
        assert_eq!(s.coeffs(), &[BigInt::from(1), &a + &b, &a * &b]);
    }

    #[test]
    fn product_of_lines_is_a_line() {
        let r = WittRing::new(Integers, 5);
        let s = r.mul(&r.line(BigInt::from(3)), &r.line(BigInt::from(-7)));
        assert_eq!(s, r.line(BigInt::from(-21)));
    }

    #[test]
    fn negation_of_one_is_geometric() {
        let r = WittRing::new(Integers, 4);
        let minus_one = r.neg(&r.one().unwrap());
        assert_eq!(minus_one, w(&[1, -1, 1, -1, 1]));
        for k in 0..=4 {
            // λ^k(-1) = (-1)^k as an integer; here λ_t(-1) read off coefficientwise.
            assert_eq!(minus_one.coeff(k), &BigInt::from(if k % 2 == 0 { 1 } else { -1 }));
        }
    }

    #[test]
    fn mismatched_degrees_are_rejected() {
        let r = WittRing::new(Integers, 4);
        assert_eq!(r.checked_add(&w(&[1, 1, 0]), &w(&[1, 2, 0, 0])), Err(LambdaError::DegreeMismatch(2, 3)));
    }

    #[test]
    fn lambda_of_a_line_vanishes() {
        let r = WittRing::new(Integers, 6);
        let l2 = r.lambda(2, &r.line(BigInt::from(4))).unwrap();
        assert!(r.equal(&l2, &r.zero()));
        assert_eq!(l2.precision(), 3);
    }

    #[test]
    fn division_recovers_multiples() {
        let r = WittRing::new(Integers, 5);
        let x = w(&[1, 2, -1, 4, 0, 3]);
        let three = BigInt::from(3);
        assert_eq!(r.div_int(&r.scale(&x, &three), &three), Some(x));
    }
}
