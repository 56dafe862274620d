//! Finitely generated abelian groups and their group rings.

use alloc::format;
use alloc::string::{String, ToString};
use alloc::vec::Vec;

use num_bigint::BigInt;

use crate::exact::{Poly, Ring, Scalar, TruncSeries};
use crate::lambda::presented::{GeneratorLambda, PresentedRing};
use crate::lambda::{LambdaError, LambdaRing};

/// `ℤ^free ⊕ ℤ/d_1 ⊕ ... ⊕ ℤ/d_k` with `d_1 | d_2 | ...`, each `d_i >= 2`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AbelianGroup {
    free: usize,
    torsion: Vec<u32>,
}

impl AbelianGroup {
    pub fn new(free: usize, torsion: Vec<u32>) -> Result<Self, LambdaError> {
        for (i, &d) in torsion.iter().enumerate() {
            if d < 2 {
                return Err(LambdaError::Invalid(format!("invariant factor {} is below 2", d)));
            }
            if i > 0 && d % torsion[i - 1] != 0 {
                return Err(LambdaError::Invalid(format!(
                    "invariant factors must divide each other: {} does not divide {}",
                    torsion[i - 1],
                    d
                )));
            }
        }
        Ok(AbelianGroup { free, torsion })
    }

    /// Parses `free=r; torsion=d1,d2,...` (either part may be omitted).
    pub fn parse(s: &str) -> Result<Self, LambdaError> {
        let mut free = 0;
        let mut torsion = Vec::new();
        for part in s.split(';').map(str::trim).filter(|p| !p.is_empty()) {
            let (key, value) = part
                .split_once('=')
                .ok_or_else(|| LambdaError::Invalid(format!("expected key=value, found {:?}", part)))?;
            let bad = |v: &str| LambdaError::Invalid(format!("not a non-negative integer: {:?}", v));
            match key.trim() {
                "free" => free = value.trim().parse().map_err(|_| bad(value))?,
                "torsion" => {
                    for d in value.split(',').map(str::trim).filter(|d| !d.is_empty()) {
                        torsion.push(d.parse().map_err(|_| bad(d))?);
                    }
                }
                other => return Err(LambdaError::Invalid(format!("unknown group field {:?}", other))),
            }
        }
        Self::new(free, torsion)
    }

    pub fn free_rank(&self) -> usize {
        self.free
    }

    pub fn torsion(&self) -> &[u32] {
        &self.torsion
    }

    /// Number of coordinates of an exponent vector.
    pub fn coordinates(&self) -> usize {
        self.free + self.torsion.len()
    }

    /// The standard names `t1..tr, s1..sk`.
    pub fn standard_names(&self) -> Vec<String> {
        (1..=self.free).map(|i| format!("t{}", i)).chain((1..=self.torsion.len()).map(|i| format!("s{}", i))).collect()
    }

    /// Reduces torsion coordinates into `0..d`.
    pub fn normalize(&self, e: &mut [i32]) {
        for (i, &d) in self.torsion.iter().enumerate() {
            e[self.free + i] = e[self.free + i].rem_euclid(d as i32);
        }
    }
}

/// The group ring `C[A]`; every group element is a line, `λ_t(g) = 1 + g t`.
#[derive(Clone, Debug)]
pub struct GroupRing<C> {
    group: AbelianGroup,
    names: Vec<String>,
    _coeffs: core::marker::PhantomData<C>,
}

impl<C: Scalar> GroupRing<C> {
    pub fn new(group: AbelianGroup) -> Self {
        let names = group.standard_names();
        GroupRing { group, names, _coeffs: core::marker::PhantomData }
    }

    /// A group ring whose coordinates carry the given names (free ones first).
    pub fn with_names(group: AbelianGroup, names: Vec<String>) -> Result<Self, LambdaError> {
        if names.len() != group.coordinates() {
            return Err(LambdaError::Invalid("one name per coordinate is required".into()));
        }
        Ok(GroupRing { group, names, _coeffs: core::marker::PhantomData })
    }

    pub fn group(&self) -> &AbelianGroup {
        &self.group
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    fn index(&self, v: &str) -> Option<usize> {
        self.names.iter().position(|n| n == v)
    }

    /// Exponent vector of a monomial of `p` in coordinate order.
    pub fn exponents(&self, p: &Poly<C>, m: &crate::exact::Monomial) -> Vec<i32> {
        let mut e = alloc::vec![0; self.names.len()];
        for (v, &x) in p.vars().iter().zip(&m.0) {
            e[self.index(v).expect("validated element")] = x;
        }
        e
    }

    /// The monomial with the given exponent vector.
    pub fn group_element(&self, e: &[i32]) -> Poly<C> {
        let mut e = e.to_vec();
        self.group.normalize(&mut e);
        let f: Vec<(&str, i32)> = self.names.iter().map(String::as_str).zip(e).collect();
        Poly::monomial(&f, C::one())
    }

    /// Checks the variables and reduces torsion exponents.
    pub fn element(&self, p: &Poly<C>) -> Result<Poly<C>, LambdaError> {
        for v in p.vars() {
            if self.index(v).is_none() {
                return Err(LambdaError::Invalid(format!("{} is not a coordinate of the group", v)));
            }
        }
        Ok(self.normalize(p))
    }

    pub fn parse(&self, s: &str) -> Result<Poly<C>, LambdaError> {
        self.element(&s.parse::<Poly<C>>()?)
    }

    fn normalize(&self, p: &Poly<C>) -> Poly<C> {
        if self.group.torsion.is_empty() {
            return p.clone();
        }
        let idx: Vec<Option<u32>> = p
            .vars()
            .iter()
            .map(|v| {
                let i = self.index(v)?;
                (i >= self.group.free).then(|| self.group.torsion[i - self.group.free])
            })
            .collect();
        p.map_exponents(|e| e.iter().zip(&idx).map(|(&x, d)| d.map_or(x, |d| x.rem_euclid(d as i32))).collect())
    }

    /// The same ring as a finitely presented λ-ring.
    pub fn presentation(&self) -> PresentedRing<C> {
        let mut r = PresentedRing::new();
        for name in &self.names {
            r.add_generator(name, GeneratorLambda::Line, None).expect("distinct names");
        }
        for (i, &d) in self.group.torsion.iter().enumerate() {
            let s = &self.names[self.group.free + i];
            r.add_relation(&Poly::monomial(&[(s, d as i32)], C::one()), &Poly::one())
                .expect("a power of a line rewrites to 1");
        }
        r
    }

    /// `(1 + g t)^c` through degree `k`.
    fn line_power(&self, g: &Poly<C>, c: &C, k: usize) -> TruncSeries<Poly<C>> {
        let mut coeffs = alloc::vec![Poly::one()];
        let mut binom = C::one();
        let mut gp = Poly::one();
        for j in 1..=k {
            // C(c, j) = C(c, j-1) (c - j + 1) / j.
            binom = (binom * (c.clone() - C::from_i64(j as i64 - 1)))
                .div_int(&BigInt::from(j))
                .expect("binomial coefficients of integers and rationals are exact");
            gp = self.normalize(&gp.mul(g));
            coeffs.push(gp.scale(&binom));
        }
        TruncSeries::from_coeffs(coeffs)
    }
}

impl<C: Scalar> Ring for GroupRing<C> {
    type Elem = Poly<C>;

    fn zero(&self) -> Poly<C> {
        Poly::zero()
    }
    fn one(&self) -> Option<Poly<C>> {
        Some(Poly::one())
    }
    fn add(&self, a: &Poly<C>, b: &Poly<C>) -> Poly<C> {
        a.add(b)
    }
    fn neg(&self, a: &Poly<C>) -> Poly<C> {
        a.neg()
    }
    fn mul(&self, a: &Poly<C>, b: &Poly<C>) -> Poly<C> {
        self.normalize(&a.mul(b))
    }
    fn scale(&self, a: &Poly<C>, n: &BigInt) -> Poly<C> {
        a.scale(&C::from_bigint(n.clone()))
    }
    fn div_int(&self, a: &Poly<C>, n: &BigInt) -> Option<Poly<C>> {
        a.div_int(n)
    }
    fn show(&self, a: &Poly<C>) -> String {
        a.to_string()
    }
}

impl<C: Scalar> LambdaRing for GroupRing<C> {
    /// The coefficient of `t^k` in `Π_g (1 + g t)^{n_g}`.
    fn lambda(&self, k: usize, x: &Poly<C>) -> Result<Poly<C>, LambdaError> {
        let mut acc = TruncSeries::one(self, k);
        for (m, c) in x.terms() {
            let g = Poly::from_terms(x.vars().to_vec(), [(m.0.clone(), C::one())]);
            acc = acc.mul(self, &self.line_power(&g, c, k));
        }
        Ok(acc.coeffs[k].clone())
    }

    fn rank(&self, x: &Poly<C>) -> Option<BigInt> {
        x.terms().fold(C::zero(), |acc, (_, c)| acc + c.clone()).to_bigint()
    }

    /// `ψ^k(g) = g^k`.
    fn psi(&self, k: usize, x: &Poly<C>) -> Result<Poly<C>, LambdaError> {
        if k == 0 {
            return Err(LambdaError::Index("ψ^0 is not defined".into()));
        }
        Ok(self.normalize(&x.map_exponents(|e| e.iter().map(|&v| v * k as i32).collect())))
    }
}

/// Whether `λ^k(g x) = g^k λ^k(x)` for the group element `g`.
pub fn line_twist_check<C: Scalar>(
    ring: &GroupRing<C>,
    g: &Poly<C>,
    x: &Poly<C>,
    k: usize,
) -> Result<bool, LambdaError> {
    let is_group_element = g.num_terms() == 1 && g.leading().is_some_and(|(_, c)| c.is_one());
    if !is_group_element {
        return Err(LambdaError::Invalid(format!("{} is not a group element", g)));
    }
    let lhs = ring.lambda(k, &ring.mul(g, x))?;
    let gk = ring.pow(g, k as u32).expect("unit");
    let rhs = ring.mul(&gk, &ring.lambda(k, x)?);
    Ok(lhs == rhs)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::LaurentPoly;
    use crate::lambda::verify_lambda;
    use num_traits::One;

    fn ring(spec: &str) -> GroupRing<BigInt> {
        GroupRing::new(AbelianGroup::parse(spec).unwrap())
    }

    #[test]
    fn group_specs() {
        let g = AbelianGroup::parse("free=2; torsion=2,4").unwrap();
        assert_eq!(g.standard_names(), ["t1", "t2", "s1", "s2"]);
        assert!(AbelianGroup::parse("torsion=4,6").is_err());
        assert!(AbelianGroup::parse("torsion=1").is_err());
    }

    #[test]
    fn lambda_of_lines() {
        let r = ring("free=2");
        let g = r.parse("t1").unwrap();
        let gh = r.parse("t1 + t2").unwrap();
        assert!(r.lambda(2, &g).unwrap().is_zero());
        assert_eq!(r.lambda(2, &gh).unwrap(), r.parse("t1*t2").unwrap());
        for k in 0..=5 {
            let expect = r.parse(&format!("t1^{}", k)).unwrap().scale(&BigInt::from(if k % 2 == 0 { 1 } else { -1 }));
            assert_eq!(r.lambda(k, &g.neg()).unwrap(), expect, "k = {}", k);
        }
    }

    #[test]
    fn adams_on_lines_is_power() {
        let r = ring("free=1; torsion=3");
        let g = r.parse("t1*s1").unwrap();
        for k in 1..=5 {
            let newton = crate::lambda::adams_newton(&r, k, &g).unwrap();
            assert_eq!(newton, r.pow(&g, k as u32).unwrap());
        }
    }

    #[test]
    fn line_twist() {
        let r = ring("free=3");
        let g = r.parse("t1").unwrap();
        let x = r.parse("t2 + t3").unwrap();
        for k in 0..=4 {
            assert!(line_twist_check(&r, &g, &x, k).unwrap());
        }
        assert_eq!(r.lambda(2, &r.mul(&g, &x)).unwrap(), r.parse("t1^2*t2*t3").unwrap());
    }

    #[test]
    fn cyclic_group_ring_passes_the_axioms() {
        let r = ring("torsion=3");
        let samples: Vec<LaurentPoly> =
            ["s1", "1 + s1^2", "2*s1 - 1", "-s1 - s1^2"].iter().map(|s| r.parse(s).unwrap()).collect();
        let report = verify_lambda(&r, &samples, 4, 2).unwrap();
        assert!(report.passed(), "{}", report);
        assert_eq!(r.parse("s1^4").unwrap(), r.parse("s1").unwrap());
        assert_eq!(r.rank(&samples[2]), Some(BigInt::one()));
    }
}
