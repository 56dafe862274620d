//! Finitely presented commutative rings with λ-structure given on generators.
//!
//! Relations are rewrite rules `monomial -> smaller polynomial` (graded-lex), assumed to form
//! a Gröbner basis. Each generator is a line (`λ_t(g) = 1 + g t`) or carries an explicit
//! finite list `λ^1(g) = g, λ^2(g), ..., λ^n(g)` with `λ^k(g) = 0` beyond. The Adams
//! operations on generators extend to ring endomorphisms and `λ^k` of an arbitrary element
//! is recovered from `ψ^1..ψ^k` by Newton's identities.

use alloc::collections::BTreeMap;
use alloc::format;
use alloc::string::{String, ToString};
use alloc::vec::Vec;
use core::cell::RefCell;
use core::cmp::Ordering;

use num_bigint::BigInt;
use num_traits::One;

use super::{LambdaError, LambdaRing};
use crate::exact::{var_cmp, AlgebraError, Monomial, Poly, Ring, Scalar, TruncSeries};

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum GeneratorLambda<C> {
    Line,
    /// `λ^1..λ^n`; the first entry must be the generator itself.
    Values(Vec<Poly<C>>),
}

#[derive(Clone, Debug)]
struct Rule<C> {
    /// Exponents of the leading monomial, by generator index.
    lhs: Vec<i32>,
    rhs: Poly<C>,
}

#[derive(Clone, Debug)]
pub struct PresentedRing<C> {
    gens: Vec<String>,
    lambdas: Vec<GeneratorLambda<C>>,
    ranks: Vec<Option<BigInt>>,
    rules: Vec<Rule<C>>,
    /// `(g, n)` for rules `g^n -> 1`: negative exponents of `g` reduce modulo `n`.
    periods: BTreeMap<usize, i32>,
    psi_cache: RefCell<BTreeMap<(usize, usize), Poly<C>>>,
}

impl<C: Scalar> Default for PresentedRing<C> {
    fn default() -> Self {
        Self::new()
    }
}

impl<C: Scalar> PresentedRing<C> {
    pub fn new() -> Self {
        PresentedRing {
            gens: Vec::new(),
            lambdas: Vec::new(),
            ranks: Vec::new(),
            rules: Vec::new(),
            periods: BTreeMap::new(),
            psi_cache: RefCell::new(BTreeMap::new()),
        }
    }

    pub fn generators(&self) -> &[String] {
        &self.gens
    }

    fn index(&self, name: &str) -> Option<usize> {
        self.gens.iter().position(|g| g == name)
    }

    fn invalid(msg: String) -> LambdaError {
        LambdaError::Invalid(msg)
    }

    /// Declares a generator. A line has rank 1 unless stated otherwise.
    pub fn add_generator(
        &mut self,
        name: &str,
        lambda: GeneratorLambda<C>,
        rank: Option<BigInt>,
    ) -> Result<(), LambdaError> {
        if self.index(name).is_some() {
            return Err(Self::invalid(format!("generator {} declared twice", name)));
        }
        if let GeneratorLambda::Values(v) = &lambda {
            if v.first() != Some(&Poly::var(name)) {
                return Err(Self::invalid(format!("λ^1({}) must be {}", name, name)));
            }
        }
        let rank = match (&lambda, rank) {
            (GeneratorLambda::Line, None) => Some(BigInt::one()),
            (_, r) => r,
        };
        self.gens.push(name.to_string());
        self.lambdas.push(lambda);
        self.ranks.push(rank);
        self.psi_cache.borrow_mut().clear();
        Ok(())
    }

    /// Adds the rewrite rule `lhs -> rhs`; `lhs` must be a monic monomial in the generators
    /// with nonnegative exponents and every term of `rhs` must be smaller.
    pub fn add_relation(&mut self, lhs: &Poly<C>, rhs: &Poly<C>) -> Result<(), LambdaError> {
        let (m, c) = match (lhs.num_terms(), lhs.leading()) {
            (1, Some((m, c))) => (m.clone(), c.clone()),
            _ => return Err(Self::invalid(format!("the left side {} of a relation must be a monomial", lhs))),
        };
        if !c.is_one() {
            return Err(Self::invalid(format!("the left side {} of a relation must be monic", lhs)));
        }
        let lhs_exps = self.exponents_of(lhs, &m)?;
        if lhs_exps.iter().any(|&e| e < 0) {
            return Err(Self::invalid(format!("the left side {} has a negative exponent", lhs)));
        }
        for v in rhs.vars() {
            if self.index(v).is_none() {
                return Err(Self::invalid(format!("unknown generator {} in relation", v)));
            }
        }
        for (rm, _) in rhs.terms() {
            let r = self.exponents_of(rhs, rm)?;
            if self.cmp_exponents(&r, &lhs_exps) != Ordering::Less {
                return Err(Self::invalid(format!(
                    "the right side of {} -> {} is not smaller than the left side in graded-lex order",
                    lhs, rhs
                )));
            }
        }
        let nonzero: Vec<usize> = (0..lhs_exps.len()).filter(|&i| lhs_exps[i] != 0).collect();
        if nonzero.len() == 1 && rhs == &Poly::one() {
            self.periods.insert(nonzero[0], lhs_exps[nonzero[0]]);
        }
        self.rules.push(Rule { lhs: lhs_exps, rhs: rhs.clone() });
        self.check_rank_on_rule(self.rules.len() - 1)?;
        self.psi_cache.borrow_mut().clear();
        Ok(())
    }

    fn check_rank_on_rule(&self, i: usize) -> Result<(), LambdaError> {
        let rule = &self.rules[i];
        let lhs = self.monomial_poly(&rule.lhs);
        if let (Some(a), Some(b)) = (self.rank_of(&lhs), self.rank_of(&rule.rhs)) {
            if a != b {
                return Err(Self::invalid(format!(
                    "the rank is not compatible with the relation {} -> {} ({} vs {})",
                    lhs, rule.rhs, a, b
                )));
            }
        }
        Ok(())
    }

    /// Exponents of monomial `m` of `p`, re-indexed by generator.
    fn exponents_of(&self, p: &Poly<C>, m: &Monomial) -> Result<Vec<i32>, LambdaError> {
        let mut out = alloc::vec![0; self.gens.len()];
        for (v, &e) in p.vars().iter().zip(&m.0) {
            let i = self.index(v).ok_or_else(|| Self::invalid(format!("unknown generator {}", v)))?;
            out[i] = e;
        }
        Ok(out)
    }

    /// Graded-lex comparison in the natural variable order.
    fn cmp_exponents(&self, a: &[i32], b: &[i32]) -> Ordering {
        let (da, db): (i64, i64) = (a.iter().map(|&e| e as i64).sum(), b.iter().map(|&e| e as i64).sum());
        if da != db {
            return da.cmp(&db);
        }
        let mut order: Vec<usize> = (0..self.gens.len()).collect();
        order.sort_by(|&i, &j| var_cmp(&self.gens[i], &self.gens[j]));
        for i in order {
            if a[i] != b[i] {
                return a[i].cmp(&b[i]);
            }
        }
        Ordering::Equal
    }

    fn monomial_poly(&self, exps: &[i32]) -> Poly<C> {
        let f: Vec<(&str, i32)> = self.gens.iter().map(|g| g.as_str()).zip(exps.iter().copied()).collect();
        Poly::monomial(&f, C::one())
    }

    /// The tensor product over the integers: generators, λ-data and relations side by side.
    pub fn tensor(&self, other: &PresentedRing<C>) -> Result<PresentedRing<C>, LambdaError> {
        let mut out = self.clone();
        out.psi_cache = RefCell::new(BTreeMap::new());
        for (i, g) in other.gens.iter().enumerate() {
            out.add_generator(g, other.lambdas[i].clone(), other.ranks[i].clone())?;
        }
        for rule in &other.rules {
            out.add_relation(&other.monomial_poly(&rule.lhs), &rule.rhs)?;
        }
        Ok(out)
    }

    /// Validates and normalizes an element given as a polynomial in the generators.
    pub fn element(&self, p: &Poly<C>) -> Result<Poly<C>, LambdaError> {
        for (m, _) in p.terms() {
            let e = self.exponents_of(p, m)?;
            for (i, &x) in e.iter().enumerate() {
                if x < 0 && !self.is_invertible(i) {
                    return Err(Self::invalid(format!("{} is not invertible", self.gens[i])));
                }
            }
        }
        Ok(self.normal_form(p))
    }

    pub fn parse(&self, s: &str) -> Result<Poly<C>, LambdaError> {
        let p: Poly<C> = s.parse().map_err(LambdaError::Algebra)?;
        self.element(&p)
    }

    /// Lines not constrained by any relation, and generators of finite order.
    fn is_invertible(&self, i: usize) -> bool {
        if self.periods.contains_key(&i) {
            return true;
        }
        matches!(self.lambdas[i], GeneratorLambda::Line) && self.rules.iter().all(|r| r.lhs[i] == 0)
    }

    /// Reduces by the rewrite rules until no leading monomial of a rule divides a term.
    pub fn normal_form(&self, p: &Poly<C>) -> Poly<C> {
        let mut p = p.clone();
        if !self.periods.is_empty() {
            p = self.reduce_periods(&p);
        }
        loop {
            let mut step = None;
            'find: for (m, c) in p.terms() {
                let e = self.exponents_of(&p, m).expect("generators only");
                for (r, rule) in self.rules.iter().enumerate() {
                    if e.iter().zip(&rule.lhs).all(|(&a, &b)| a >= b) {
                        step = Some((e, c.clone(), r));
                        break 'find;
                    }
                }
            }
            let Some((e, c, r)) = step else { return p };
            let rule = &self.rules[r];
            let quotient: Vec<i32> = e.iter().zip(&rule.lhs).map(|(&a, &b)| a - b).collect();
            let q = self.monomial_poly(&quotient).scale(&c);
            let term = self.monomial_poly(&e).scale(&c);
            p = p.sub(&term).add(&q.mul(&rule.rhs));
            if !self.periods.is_empty() {
                p = self.reduce_periods(&p);
            }
        }
    }

    fn reduce_periods(&self, p: &Poly<C>) -> Poly<C> {
        let idx: Vec<Option<i32>> =
            p.vars().iter().map(|v| self.index(v).and_then(|i| self.periods.get(&i).copied())).collect();
        p.map_exponents(|e| e.iter().zip(&idx).map(|(&x, d)| d.map_or(x, |d| x.rem_euclid(d))).collect())
    }

    /// `ε(x)`, when every generator appearing has a rank.
    pub fn rank_of(&self, p: &Poly<C>) -> Option<BigInt> {
        let mut acc = C::zero();
        for (m, c) in p.terms() {
            let mut t = c.clone();
            for (v, &e) in p.vars().iter().zip(&m.0) {
                if e == 0 {
                    continue;
                }
                let r = C::from_bigint(self.ranks[self.index(v)?].clone()?);
                if e < 0 {
                    if !r.abs().is_one() {
                        return None;
                    }
                    t = t * num_traits::pow(r, (-e) as usize);
                } else {
                    t = t * num_traits::pow(r, e as usize);
                }
            }
            acc = acc + t;
        }
        acc.to_bigint()
    }

    /// `ψ^n(g)` for the generator with index `i`.
    fn psi_generator(&self, i: usize, n: usize) -> Result<Poly<C>, LambdaError> {
        if let Some(p) = self.psi_cache.borrow().get(&(i, n)) {
            return Ok(p.clone());
        }
        let g = &self.gens[i];
        let value = match &self.lambdas[i] {
            GeneratorLambda::Line => self.normal_form(&Poly::monomial(&[(g, n as i32)], C::one())),
            GeneratorLambda::Values(v) => {
                let lam = |k: usize| v.get(k - 1).cloned().unwrap_or_else(Poly::zero);
                let mut acc = lam(n).scale(&C::from_i64(n as i64));
                if n % 2 == 0 {
                    acc = acc.neg();
                }
                for j in 1..n {
                    let t = lam(j).mul(&self.psi_generator(i, n - j)?);
                    acc = if j % 2 == 1 { acc.add(&t) } else { acc.sub(&t) };
                }
                self.normal_form(&acc)
            }
        };
        self.psi_cache.borrow_mut().insert((i, n), value.clone());
        Ok(value)
    }

    /// The Adams operation `ψ^n`, a ring endomorphism.
    pub fn adams(&self, n: usize, x: &Poly<C>) -> Result<Poly<C>, LambdaError> {
        if n == 0 {
            return Err(LambdaError::Index("ψ^0 is not defined".into()));
        }
        let mut images: BTreeMap<String, Poly<C>> = BTreeMap::new();
        for v in x.vars() {
            let i = self.index(v).ok_or_else(|| Self::invalid(format!("unknown generator {}", v)))?;
            images.insert(v.clone(), self.psi_generator(i, n)?);
        }
        // Substitute term by term, reducing as we go to keep intermediate sizes small.
        let mut acc = Poly::zero();
        for (m, c) in x.terms() {
            let mut t = Poly::constant(c.clone());
            for (v, &e) in x.vars().iter().zip(&m.0) {
                if e == 0 {
                    continue;
                }
                let img = &images[v];
                let pw = if e > 0 {
                    img.pow(e as i64)?
                } else {
                    // Only lines and torsion generators reach here; their ψ-images are units.
                    img.pow(e as i64)
                        .map_err(|_| LambdaError::Algebra(AlgebraError::NotAUnit(format!("ψ^{}({})", n, v))))?
                };
                t = self.normal_form(&t.mul(&pw));
            }
            acc = acc.add(&t);
        }
        Ok(self.normal_form(&acc))
    }
}

impl<C: Scalar> Ring for PresentedRing<C> {
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
        self.normal_form(&a.mul(b))
    }
    fn scale(&self, a: &Poly<C>, n: &BigInt) -> Poly<C> {
        a.scale(&C::from_bigint(n.clone()))
    }
    fn div_int(&self, a: &Poly<C>, n: &BigInt) -> Option<Poly<C>> {
        a.div_int(n)
    }
    fn show(&self, a: &Poly<C>) -> String {
        format!("{}", a)
    }
}

impl<C: Scalar> LambdaRing for PresentedRing<C> {
    fn lambda(&self, k: usize, x: &Poly<C>) -> Result<Poly<C>, LambdaError> {
        match k {
            0 => return Ok(Poly::one()),
            1 => return Ok(x.clone()),
            _ => {}
        }
        let ghosts: Vec<Poly<C>> = (1..=k).map(|n| self.adams(n, x)).collect::<Result<_, _>>()?;
        let series =
            TruncSeries::from_power_sums(self, Poly::one(), &ghosts).ok_or_else(|| LambdaError::Evaluator {
                k,
                elem: format!("{}", x),
                reason: "the λ-data on generators is not integral here".into(),
            })?;
        Ok(series.coeffs[k].clone())
    }

    fn rank(&self, x: &Poly<C>) -> Option<BigInt> {
        self.rank_of(x)
    }

    fn psi(&self, k: usize, x: &Poly<C>) -> Result<Poly<C>, LambdaError> {
        self.adams(k, x)
    }
}
