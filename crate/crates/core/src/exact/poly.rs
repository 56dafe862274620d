//! Sparse multivariate Laurent polynomials over an exact coefficient domain.
//!
//! Variables are kept in natural order (alphabetic prefix, then numeric suffix), and only
//! variables that occur with a nonzero exponent are stored, so two polynomials are equal
//! exactly when their canonical forms coincide.

use alloc::collections::BTreeMap;
use alloc::string::{String, ToString};
use alloc::vec;
use alloc::vec::Vec;
use core::cmp::Ordering;
use core::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;

use super::scalar::Scalar;
use super::AlgebraError;

/// Exponent vector ordered graded-lexicographically: total degree first, then lexicographic.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Monomial(pub Vec<i32>);

impl Monomial {
    pub fn degree(&self) -> i64 {
        self.0.iter().map(|&e| e as i64).sum()
    }
}

impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        self.degree().cmp(&other.degree()).then_with(|| self.0.cmp(&other.0))
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// Natural order on variable names: `x2 < x10`, `e3 < f1`.
pub fn var_cmp(a: &str, b: &str) -> Ordering {
    let split = |s: &str| {
        let cut = s.trim_end_matches(|c: char| c.is_ascii_digit()).len();
        let (head, tail) = s.split_at(cut);
        let num = tail.parse::<u64>().ok();
        (head.to_string(), num)
    };
    let (ha, na) = split(a);
    let (hb, nb) = split(b);
    ha.cmp(&hb).then(na.cmp(&nb)).then_with(|| a.cmp(b))
}

/// Multivariate Laurent polynomial with coefficients in `C`.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Poly<C> {
    vars: Vec<String>,
    terms: BTreeMap<Monomial, C>,
}

/// Integer Laurent polynomial, the common currency of the kernel.
pub type LaurentPoly = Poly<BigInt>;
/// Rational Laurent polynomial.
pub type QPoly = Poly<BigRational>;

impl<C: Scalar> Default for Poly<C> {
    fn default() -> Self {
        Self::zero()
    }
}

impl<C: Scalar> Poly<C> {
    pub fn zero() -> Self {
        Poly { vars: Vec::new(), terms: BTreeMap::new() }
    }

    pub fn one() -> Self {
        Self::constant(C::one())
    }

    pub fn constant(c: C) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(Monomial(Vec::new()), c);
        }
        Poly { vars: Vec::new(), terms }
    }

    pub fn from_int(n: i64) -> Self {
        Self::constant(C::from_i64(n))
    }

    pub fn var(name: &str) -> Self {
        Self::monomial(&[(name, 1)], C::one())
    }

    /// `c * Π name^exp`; repeated names multiply.
    pub fn monomial(factors: &[(&str, i32)], c: C) -> Self {
        let mut names: Vec<String> = factors.iter().map(|(n, _)| n.to_string()).collect();
        names.sort_by(|a, b| var_cmp(a, b));
        names.dedup();
        let mut exps = vec![0i32; names.len()];
        for (n, e) in factors {
            let i = names.iter().position(|v| v == n).unwrap();
            exps[i] += e;
        }
        Self::from_terms(names, [(exps, c)])
    }

    /// Builds a polynomial from raw terms over `vars`; zero coefficients are dropped and
    /// repeated exponent vectors accumulate. `vars` need not be sorted.
    pub fn from_terms<I>(vars: Vec<String>, terms: I) -> Self
    where
        I: IntoIterator<Item = (Vec<i32>, C)>,
    {
        let mut order: Vec<usize> = (0..vars.len()).collect();
        order.sort_by(|&a, &b| var_cmp(&vars[a], &vars[b]));
        let sorted: Vec<String> = order.iter().map(|&i| vars[i].clone()).collect();
        let mut map: BTreeMap<Monomial, C> = BTreeMap::new();
        for (e, c) in terms {
            assert_eq!(e.len(), vars.len(), "exponent vector length must match variables");
            let m = Monomial(order.iter().map(|&i| e[i]).collect());
            accumulate(&mut map, m, c);
        }
        let mut p = Poly { vars: sorted, terms: map };
        p.normalize();
        p
    }

    fn normalize(&mut self) {
        self.terms.retain(|_, c| !c.is_zero());
        let used: Vec<bool> = (0..self.vars.len()).map(|i| self.terms.keys().any(|m| m.0[i] != 0)).collect();
        if used.iter().all(|&u| u) {
            return;
        }
        let vars = self.vars.iter().zip(&used).filter(|(_, &u)| u).map(|(v, _)| v.clone()).collect();
        let terms = core::mem::take(&mut self.terms)
            .into_iter()
            .map(|(m, c)| {
                let e = m.0.iter().zip(&used).filter(|(_, &u)| u).map(|(&e, _)| e).collect();
                (Monomial(e), c)
            })
            .collect();
        self.vars = vars;
        self.terms = terms;
    }

    pub fn vars(&self) -> &[String] {
        &self.vars
    }

    /// Terms in ascending graded-lex order.
    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (&Monomial, &C)> + ExactSizeIterator {
        self.terms.iter()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_constant(&self) -> bool {
        self.vars.is_empty()
    }

    pub fn constant_term(&self) -> C {
        if self.vars.is_empty() {
            self.terms.values().next().cloned().unwrap_or_else(C::zero)
        } else {
            let z = Monomial(vec![0; self.vars.len()]);
            self.terms.get(&z).cloned().unwrap_or_else(C::zero)
        }
    }

    /// Leading term under graded-lex order.
    pub fn leading(&self) -> Option<(&Monomial, &C)> {
        self.terms.iter().next_back()
    }

    /// Largest total degree of a term; `None` for zero.
    pub fn total_degree(&self) -> Option<i64> {
        self.leading().map(|(m, _)| m.degree())
    }

    /// Exponent of `name` in `m` (a monomial of this polynomial).
    pub fn exponent_of(&self, m: &Monomial, name: &str) -> i32 {
        self.vars.iter().position(|v| v == name).map_or(0, |i| m.0[i])
    }

    /// Coefficient of the monomial `Π name^exp`.
    pub fn coefficient(&self, factors: &[(&str, i32)]) -> C {
        let mut e = vec![0i32; self.vars.len()];
        for (n, x) in factors {
            if *x == 0 {
                continue;
            }
            match self.vars.iter().position(|v| v == n) {
                Some(i) => e[i] += x,
                None => return C::zero(),
            }
        }
        self.terms.get(&Monomial(e)).cloned().unwrap_or_else(C::zero)
    }

    /// Re-expresses the terms over the variable list `vars`, which must contain all of ours
    /// and be in natural order.
    fn lift_to(&self, vars: &[String]) -> BTreeMap<Monomial, C> {
        if vars.len() == self.vars.len() {
            return self.terms.clone();
        }
        let idx: Vec<usize> =
            self.vars.iter().map(|v| vars.iter().position(|w| w == v).expect("variable missing from union")).collect();
        self.terms
            .iter()
            .map(|(m, c)| {
                let mut e = vec![0i32; vars.len()];
                for (k, &i) in idx.iter().enumerate() {
                    e[i] = m.0[k];
                }
                (Monomial(e), c.clone())
            })
            .collect()
    }

    fn union_vars(&self, other: &Self) -> Vec<String> {
        if self.vars == other.vars {
            return self.vars.clone();
        }
        let mut out = Vec::with_capacity(self.vars.len() + other.vars.len());
        let (mut i, mut j) = (0, 0);
        while i < self.vars.len() || j < other.vars.len() {
            let take_left = match (self.vars.get(i), other.vars.get(j)) {
                (Some(a), Some(b)) => match var_cmp(a, b) {
                    Ordering::Less => true,
                    Ordering::Greater => false,
                    Ordering::Equal => {
                        out.push(a.clone());
                        i += 1;
                        j += 1;
                        continue;
                    }
                },
                (Some(_), None) => true,
                _ => false,
            };
            if take_left {
                out.push(self.vars[i].clone());
                i += 1;
            } else {
                out.push(other.vars[j].clone());
                j += 1;
            }
        }
        out
    }

    pub fn add(&self, other: &Self) -> Self {
        let vars = self.union_vars(other);
        let mut terms = self.lift_to(&vars);
        for (m, c) in other.lift_to(&vars) {
            accumulate(&mut terms, m, c);
        }
        let mut p = Poly { vars, terms };
        p.normalize();
        p
    }

    pub fn neg(&self) -> Self {
        Poly { vars: self.vars.clone(), terms: self.terms.iter().map(|(m, c)| (m.clone(), -c.clone())).collect() }
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    pub fn scale(&self, c: &C) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        let mut p = Poly {
            vars: self.vars.clone(),
            terms: self.terms.iter().map(|(m, x)| (m.clone(), x.clone() * c.clone())).collect(),
        };
        p.normalize();
        p
    }

    pub fn mul(&self, other: &Self) -> Self {
        if self.is_zero() || other.is_zero() {
            return Self::zero();
        }
        let vars = self.union_vars(other);
        let a = self.lift_to(&vars);
        let b = other.lift_to(&vars);
        let mut terms: BTreeMap<Monomial, C> = BTreeMap::new();
        for (ma, ca) in &a {
            for (mb, cb) in &b {
                let e = ma.0.iter().zip(&mb.0).map(|(x, y)| x + y).collect();
                accumulate(&mut terms, Monomial(e), ca.clone() * cb.clone());
            }
        }
        let mut p = Poly { vars, terms };
        p.normalize();
        p
    }

    /// Integer power; negative exponents require a monomial with invertible coefficient.
    pub fn pow(&self, n: i64) -> Result<Self, AlgebraError> {
        if n < 0 {
            let inv = self.inverse()?;
            return Ok(inv.pow_nonneg(n.unsigned_abs()));
        }
        Ok(self.pow_nonneg(n as u64))
    }

    fn pow_nonneg(&self, mut n: u64) -> Self {
        let mut base = self.clone();
        let mut acc = Self::one();
        while n > 0 {
            if n & 1 == 1 {
                acc = acc.mul(&base);
            }
            n >>= 1;
            if n > 0 {
                base = base.mul(&base);
            }
        }
        acc
    }

    /// Inverse of a unit: a single term whose coefficient is invertible.
    pub fn inverse(&self) -> Result<Self, AlgebraError> {
        if self.terms.len() != 1 {
            return Err(AlgebraError::NotAUnit(self.to_string()));
        }
        let (m, c) = self.terms.iter().next().unwrap();
        let inv = C::one().div_exact(c).ok_or_else(|| AlgebraError::NotAUnit(self.to_string()))?;
        let e = m.0.iter().map(|x| -x).collect();
        Ok(Poly::from_terms(self.vars.clone(), [(e, inv)]))
    }

    /// Exact coefficientwise division by an integer.
    pub fn div_int(&self, n: &BigInt) -> Option<Self> {
        let mut terms = BTreeMap::new();
        for (m, c) in &self.terms {
            terms.insert(m.clone(), c.div_int(n)?);
        }
        Some(Poly { vars: self.vars.clone(), terms })
    }

    pub fn map_coeffs<D: Scalar>(&self, f: impl Fn(&C) -> D) -> Poly<D> {
        let mut p =
            Poly { vars: self.vars.clone(), terms: self.terms.iter().map(|(m, c)| (m.clone(), f(c))).collect() };
        p.normalize();
        p
    }

    /// Applies `f` to every exponent vector (given and returned over `vars()`); terms that
    /// collide accumulate.
    pub fn map_exponents(&self, f: impl Fn(&[i32]) -> Vec<i32>) -> Self {
        Poly::from_terms(self.vars.clone(), self.terms.iter().map(|(m, c)| (f(&m.0), c.clone())))
    }

    /// Renames variables; names mapped together have their exponents added.
    pub fn rename(&self, f: impl Fn(&str) -> String) -> Self {
        let names: Vec<String> = self.vars.iter().map(|v| f(v)).collect();
        let mut uniq = names.clone();
        uniq.sort_by(|a, b| var_cmp(a, b));
        uniq.dedup();
        let idx: Vec<usize> = names.iter().map(|n| uniq.iter().position(|u| u == n).unwrap()).collect();
        Poly::from_terms(
            uniq.clone(),
            self.terms.iter().map(|(m, c)| {
                let mut e = vec![0; uniq.len()];
                for (k, &i) in idx.iter().enumerate() {
                    e[i] += m.0[k];
                }
                (e, c.clone())
            }),
        )
    }

    /// Substitutes polynomials for variables; unmapped variables are kept.
    pub fn substitute(&self, f: impl Fn(&str) -> Option<Self>) -> Result<Self, AlgebraError> {
        let images: Vec<Self> = self.vars.iter().map(|v| f(v).unwrap_or_else(|| Self::var(v))).collect();
        let mut cache: BTreeMap<(usize, i32), Self> = BTreeMap::new();
        let mut acc = Self::zero();
        for (m, c) in &self.terms {
            let mut t = Self::constant(c.clone());
            for (i, &e) in m.0.iter().enumerate() {
                if e == 0 {
                    continue;
                }
                if !cache.contains_key(&(i, e)) {
                    cache.insert((i, e), images[i].pow(e as i64)?);
                }
                t = t.mul(&cache[&(i, e)]);
            }
            acc = acc.add(&t);
        }
        Ok(acc)
    }

    /// Whether every exponent is non-negative.
    pub fn is_polynomial(&self) -> bool {
        self.terms.keys().all(|m| m.0.iter().all(|&e| e >= 0))
    }
}

fn accumulate<C: Scalar>(map: &mut BTreeMap<Monomial, C>, m: Monomial, c: C) {
    if c.is_zero() {
        return;
    }
    match map.get_mut(&m) {
        Some(x) => {
            let s = x.clone() + c;
            if s.is_zero() {
                map.remove(&m);
            } else {
                *x = s;
            }
        }
        None => {
            map.insert(m, c);
        }
    }
}

impl<C: Scalar> fmt::Display for Poly<C> {
    /// Canonical text: descending graded-lex terms, `c*v^e` factors, unit coefficients and
    /// unit exponents elided.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        for (k, (m, c)) in self.terms.iter().rev().enumerate() {
            let neg = c.is_negative();
            match (k, neg) {
                (0, true) => f.write_str("-")?,
                (0, false) => {}
                (_, true) => f.write_str(" - ")?,
                (_, false) => f.write_str(" + ")?,
            }
            let abs = c.abs();
            let mut factors: Vec<String> = Vec::new();
            for (v, &e) in self.vars.iter().zip(&m.0) {
                match e {
                    0 => {}
                    1 => factors.push(v.clone()),
                    _ => factors.push(alloc::format!("{}^{}", v, e)),
                }
            }
            if factors.is_empty() {
                write!(f, "{}", abs)?;
            } else {
                if !abs.is_one() {
                    write!(f, "{}*", abs)?;
                }
                f.write_str(&factors.join("*"))?;
            }
        }
        Ok(())
    }
}

impl<C: Scalar> core::str::FromStr for Poly<C> {
    type Err = AlgebraError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        super::parse::parse_poly(s)
    }
}

impl<'a, C: Scalar> core::ops::Add for &'a Poly<C> {
    type Output = Poly<C>;
    fn add(self, rhs: Self) -> Poly<C> {
        Poly::add(self, rhs)
    }
}

impl<'a, C: Scalar> core::ops::Sub for &'a Poly<C> {
    type Output = Poly<C>;
    fn sub(self, rhs: Self) -> Poly<C> {
        Poly::sub(self, rhs)
    }
}

impl<'a, C: Scalar> core::ops::Mul for &'a Poly<C> {
    type Output = Poly<C>;
    fn mul(self, rhs: Self) -> Poly<C> {
        Poly::mul(self, rhs)
    }
}

impl<'a, C: Scalar> core::ops::Neg for &'a Poly<C> {
    type Output = Poly<C>;
    fn neg(self) -> Poly<C> {
        Poly::neg(self)
    }
}

impl LaurentPoly {
    pub fn to_rational(&self) -> QPoly {
        self.map_coeffs(|c| BigRational::from_integer(c.clone()))
    }
}

impl QPoly {
    /// The integer polynomial with the same coefficients, if all are integers.
    pub fn to_integer(&self) -> Option<LaurentPoly> {
        let mut terms = Vec::new();
        for (m, c) in &self.terms {
            terms.push((m.0.clone(), c.to_bigint()?));
        }
        Some(Poly::from_terms(self.vars.clone(), terms))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::string::ToString;

    fn p(s: &str) -> LaurentPoly {
        s.parse().unwrap()
    }

    #[test]
    fn difference_of_squares() {
        let x = LaurentPoly::var("x");
        let y = LaurentPoly::var("y");
        assert_eq!((&(&x + &y) * &(&x - &y)).to_string(), "x^2 - y^2");
    }

    #[test]
    fn laurent_unit_cancels() {
        let x = LaurentPoly::var("x");
        assert_eq!(x.pow(-1).unwrap().mul(&x), LaurentPoly::one());
    }

    #[test]
    fn binomial_cube() {
        let s = &LaurentPoly::var("x1") + &LaurentPoly::var("x2");
        assert_eq!(s.pow(3).unwrap().to_string(), "x1^3 + 3*x1^2*x2 + 3*x1*x2^2 + x2^3");
    }

    #[test]
    fn negative_power_of_non_monomial_is_rejected() {
        let err = p("x + 1").pow(-1).unwrap_err();
        assert!(err.to_string().contains("not a unit"));
        assert!(p("2*x").pow(-1).is_err());
        let q: QPoly = "2*x".parse().unwrap();
        assert_eq!(q.pow(-1).unwrap().to_string(), "1/2*x^-1");
    }

    #[test]
    fn canonical_format_matches_reference_examples() {
        assert_eq!(p("3 + y2^-1*x1^2").to_string(), "x1^2*y2^-1 + 3");
        assert_eq!(p("-2*e2*f2 + f1^2*e2 + e1^2*f2").to_string(), "e1^2*f2 + e2*f1^2 - 2*e2*f2");
        assert_eq!(p("x10 + x2").to_string(), "x2 + x10");
        assert_eq!(p("-x").to_string(), "-x");
        assert_eq!(p("x - x").to_string(), "0");
    }

    #[test]
    fn unused_variables_do_not_affect_equality() {
        assert_eq!(p("x + y - y"), p("x"));
        assert_eq!(p("x*y*y^-1"), p("x"));
    }

    #[test]
    fn substitution_composes() {
        let q = p("x^2 + y").substitute(|v| (v == "x").then(|| p("a - 1"))).unwrap();
        assert_eq!(q, p("a^2 - 2*a + 1 + y"));
    }
}
