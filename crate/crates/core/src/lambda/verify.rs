//! The λ-ring axiom verifier.

use alloc::collections::BTreeMap;
use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;
use core::cell::RefCell;
use core::fmt;

use super::upoly::{universal_p, universal_p2};
use super::{LambdaError, LambdaRing};
use crate::exact::{eval_poly, LaurentPoly, Ring};

/// Supplies universal polynomials, e.g. from memory or from a persistent cache.
pub trait PolySource {
    /// `P_k` in `e1..ek, f1..fk`.
    fn product(&self, k: usize) -> Result<LaurentPoly, LambdaError>;
    /// `P_{k,l}` in `e1..e_{kl}`.
    fn composite(&self, k: usize, l: usize) -> Result<LaurentPoly, LambdaError>;
}

/// Computes universal polynomials on first use and keeps them for the lifetime of the value.
#[derive(Debug, Default)]
pub struct UniversalCache {
    products: RefCell<BTreeMap<usize, LaurentPoly>>,
    composites: RefCell<BTreeMap<(usize, usize), LaurentPoly>>,
}

impl UniversalCache {
    pub fn new() -> Self {
        Self::default()
    }
}

impl PolySource for UniversalCache {
    fn product(&self, k: usize) -> Result<LaurentPoly, LambdaError> {
        if let Some(p) = self.products.borrow().get(&k) {
            return Ok(p.clone());
        }
        let p = universal_p(k)?.poly;
        self.products.borrow_mut().insert(k, p.clone());
        Ok(p)
    }

    fn composite(&self, k: usize, l: usize) -> Result<LaurentPoly, LambdaError> {
        if let Some(p) = self.composites.borrow().get(&(k, l)) {
            return Ok(p.clone());
        }
        let p = universal_p2(k, l)?.poly;
        self.composites.borrow_mut().insert((k, l), p.clone());
        Ok(p)
    }
}

impl<S: PolySource> PolySource for &S {
    fn product(&self, k: usize) -> Result<LaurentPoly, LambdaError> {
        (**self).product(k)
    }
    fn composite(&self, k: usize, l: usize) -> Result<LaurentPoly, LambdaError> {
        (**self).composite(k, l)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub enum Axiom {
    /// `λ^0 = 1` and `λ^1 = id`.
    Normalization,
    /// `λ^n(x + y) = Σ λ^i(x) λ^{n-i}(y)`.
    Sum,
    /// `λ^n(1) = 0` for `n > 1`.
    Unit,
    /// `λ^k(xy) = P_k(λ(x); λ(y))`.
    Product,
    /// `λ^k(λ^l(x)) = P_{k,l}(λ(x))`.
    Composite,
}

impl Axiom {
    pub fn label(&self) -> &'static str {
        match self {
            Axiom::Normalization => "(a) λ^0 = 1, λ^1 = id",
            Axiom::Sum => "(b) λ^n(x+y) = Σ λ^i(x)·λ^(n-i)(y)",
            Axiom::Unit => "(c) λ^n(1) = 0 for n > 1",
            Axiom::Product => "(d) λ^k(xy) = P_k(λ(x); λ(y))",
            Axiom::Composite => "(e) λ^k(λ^l(x)) = P_k,l(λ(x))",
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Outcome {
    Pass,
    Fail(String),
    /// The axiom does not apply (e.g. no unit).
    Skipped,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AxiomResult {
    pub axiom: Axiom,
    /// Number of identities checked.
    pub checks: usize,
    pub outcome: Outcome,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VerificationReport {
    pub results: Vec<AxiomResult>,
}

impl VerificationReport {
    pub fn passed(&self) -> bool {
        self.results.iter().all(|r| !matches!(r.outcome, Outcome::Fail(_)))
    }

    pub fn result(&self, axiom: Axiom) -> Option<&AxiomResult> {
        self.results.iter().find(|r| r.axiom == axiom)
    }

    pub fn first_failure(&self) -> Option<&AxiomResult> {
        self.results.iter().find(|r| matches!(r.outcome, Outcome::Fail(_)))
    }
}

impl fmt::Display for VerificationReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for r in &self.results {
            match &r.outcome {
                Outcome::Pass => writeln!(f, "PASS {} [{} checks]", r.axiom.label(), r.checks)?,
                Outcome::Skipped => writeln!(f, "SKIP {}", r.axiom.label())?,
                Outcome::Fail(w) => writeln!(f, "FAIL {} [{} checks]: {}", r.axiom.label(), r.checks, w)?,
            }
        }
        Ok(())
    }
}

/// Records the first mismatch of an axiom.
struct Tally {
    axiom: Axiom,
    checks: usize,
    failure: Option<String>,
}

impl Tally {
    fn new(axiom: Axiom) -> Self {
        Tally { axiom, checks: 0, failure: None }
    }

    fn check(&mut self, ok: bool, witness: impl FnOnce() -> String) {
        self.checks += 1;
        if !ok && self.failure.is_none() {
            self.failure = Some(witness());
        }
    }

    fn finish(self) -> AxiomResult {
        let outcome = match self.failure {
            Some(w) => Outcome::Fail(w),
            None => Outcome::Pass,
        };
        AxiomResult { axiom: self.axiom, checks: self.checks, outcome }
    }
}

fn evaluator_error<R: Ring>(ring: &R, k: usize, x: &R::Elem, e: LambdaError) -> LambdaError {
    match e {
        e @ LambdaError::Evaluator { .. } => e,
        other => LambdaError::Evaluator { k, elem: ring.show(x), reason: format!("{}", other) },
    }
}

/// Checks the λ-ring axioms on `samples` using freshly computed universal polynomials.
pub fn verify_lambda<R: LambdaRing>(
    ring: &R,
    samples: &[R::Elem],
    k_max: usize,
    l_max: usize,
) -> Result<VerificationReport, LambdaError> {
    verify_lambda_with(ring, samples, k_max, l_max, &UniversalCache::new())
}

/// Checks the λ-ring axioms on `samples` for `k <= k_max` (and `k·l <= k_max·l_max` for
/// composites), drawing universal polynomials from `source`.
pub fn verify_lambda_with<R: LambdaRing, S: PolySource>(
    ring: &R,
    samples: &[R::Elem],
    k_max: usize,
    l_max: usize,
    source: &S,
) -> Result<VerificationReport, LambdaError> {
    let top = (k_max * l_max).max(k_max);
    // lam[s][k - 1] = λ^k(samples[s]).
    let mut lam: Vec<Vec<R::Elem>> = Vec::with_capacity(samples.len());
    for x in samples {
        let row = (1..=top)
            .map(|k| ring.lambda(k, x).map_err(|e| evaluator_error(ring, k, x, e)))
            .collect::<Result<Vec<_>, _>>()?;
        lam.push(row);
    }
    let show = |x: &R::Elem| ring.show(x);
    let eval = |p: &LaurentPoly, xs: &[R::Elem], ys: &[R::Elem]| -> Result<R::Elem, LambdaError> {
        eval_poly(ring, p, |v| {
            let i: usize = v[1..].parse().ok()?;
            match v.as_bytes()[0] {
                b'e' => xs.get(i - 1).cloned(),
                b'f' => ys.get(i - 1).cloned(),
                _ => None,
            }
        })
        .map_err(|e| LambdaError::Invalid(format!("cannot evaluate a universal polynomial: {:?}", e)))
    };

    let mut norm = Tally::new(Axiom::Normalization);
    for (s, x) in samples.iter().enumerate() {
        norm.check(ring.equal(&lam[s][0], x), || format!("x = {}: λ^1(x) = {}", show(x), show(&lam[s][0])));
        if let Some(one) = ring.one() {
            let l0 = ring.lambda(0, x).map_err(|e| evaluator_error(ring, 0, x, e))?;
            norm.check(ring.equal(&l0, &one), || format!("x = {}: λ^0(x) = {}", show(x), show(&l0)));
        }
    }

    let mut sum = Tally::new(Axiom::Sum);
    let mut prod = Tally::new(Axiom::Product);
    let products: Vec<LaurentPoly> = (1..=k_max).map(|k| source.product(k)).collect::<Result<_, _>>()?;
    for i in 0..samples.len() {
        for j in i..samples.len() {
            let (x, y) = (&samples[i], &samples[j]);
            let s = ring.add(x, y);
            let p = ring.mul(x, y);
            for n in 1..=k_max {
                let lhs = ring.lambda(n, &s).map_err(|e| evaluator_error(ring, n, &s, e))?;
                let mut rhs = ring.add(&lam[i][n - 1], &lam[j][n - 1]);
                for a in 1..n {
                    rhs = ring.add(&rhs, &ring.mul(&lam[i][a - 1], &lam[j][n - a - 1]));
                }
                sum.check(ring.equal(&lhs, &rhs), || {
                    format!(
                        "x = {}, y = {}, n = {}: λ^n(x+y) = {} but the sum formula gives {}",
                        show(x),
                        show(y),
                        n,
                        show(&lhs),
                        show(&rhs)
                    )
                });

                let lhs = ring.lambda(n, &p).map_err(|e| evaluator_error(ring, n, &p, e))?;
                let rhs = eval(&products[n - 1], &lam[i], &lam[j])?;
                prod.check(ring.equal(&lhs, &rhs), || {
                    format!(
                        "x = {}, y = {}, k = {}: λ^k(xy) = {} but P_k gives {}",
                        show(x),
                        show(y),
                        n,
                        show(&lhs),
                        show(&rhs)
                    )
                });
            }
        }
    }

    let unit = match ring.one() {
        None => AxiomResult { axiom: Axiom::Unit, checks: 0, outcome: Outcome::Skipped },
        Some(one) => {
            let mut t = Tally::new(Axiom::Unit);
            for n in 2..=top {
                let v = ring.lambda(n, &one).map_err(|e| evaluator_error(ring, n, &one, e))?;
                t.check(ring.is_zero(&v), || format!("λ^{}(1) = {}", n, show(&v)));
            }
            t.finish()
        }
    };

    let mut comp = Tally::new(Axiom::Composite);
    for l in 1..=top {
        for k in 1..=top / l {
            let p = source.composite(k, l)?;
            for (s, x) in samples.iter().enumerate() {
                let inner = &lam[s][l - 1];
                let lhs = ring.lambda(k, inner).map_err(|e| evaluator_error(ring, k, inner, e))?;
                let rhs = eval(&p, &lam[s], &[])?;
                comp.check(ring.equal(&lhs, &rhs), || {
                    format!(
                        "x = {}, k = {}, l = {}: λ^k(λ^l(x)) = {} but P_k,l gives {}",
                        show(x),
                        k,
                        l,
                        show(&lhs),
                        show(&rhs)
                    )
                });
            }
        }
    }

    Ok(VerificationReport { results: alloc::vec![norm.finish(), sum.finish(), unit, prod.finish(), comp.finish()] })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::{Integers, PolyRing};
    use crate::lambda::WittRing;
    use num_bigint::BigInt;

    #[test]
    fn integers_pass() {
        let samples: Vec<BigInt> = (-5..=5).map(BigInt::from).collect();
        let report = verify_lambda(&Integers, &samples, 5, 1).unwrap();
        assert!(report.passed(), "{}", report);
    }

    /// Integers with `λ^2` forced to zero away from the lines 0 and 1.
    struct Corrupted;

    impl Ring for Corrupted {
        type Elem = BigInt;
        fn zero(&self) -> BigInt {
            Integers.zero()
        }
        fn one(&self) -> Option<BigInt> {
            Integers.one()
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
            Integers.div_int(a, n)
        }
        fn show(&self, a: &BigInt) -> String {
            Integers.show(a)
        }
    }

    impl LambdaRing for Corrupted {
        fn lambda(&self, k: usize, x: &BigInt) -> Result<BigInt, LambdaError> {
            if k == 2 {
                return Ok(BigInt::from(0));
            }
            Integers.lambda(k, x)
        }
    }

    #[test]
    fn corrupted_evaluator_fails_product_axiom() {
        let samples: Vec<BigInt> = (2..=4).map(BigInt::from).collect();
        let report = verify_lambda(&Corrupted, &samples, 3, 1).unwrap();
        assert!(!report.passed());
        match &report.result(Axiom::Product).unwrap().outcome {
            Outcome::Fail(w) => assert!(w.contains("P_k"), "{}", w),
            other => panic!("expected a failure, got {:?}", other),
        }
    }

    #[test]
    fn witt_ring_over_integers_passes() {
        let w = WittRing::new(Integers, 8);
        let samples: Vec<_> =
            [[1, 2, -1, 0, 3, 0, 0, 1, -2], [1, -1, 0, 2, 0, 0, 1, 0, 0], [1, 0, 1, 1, 0, -1, 0, 0, 1]]
                .iter()
                .map(|c| w.element(c.iter().map(|&v| BigInt::from(v)).collect()).unwrap())
                .collect();
        let report = verify_lambda(&w, &samples, 3, 2).unwrap();
        assert!(report.passed(), "{}", report);
    }

    #[test]
    fn symbolic_witt_ring_passes_at_low_degree() {
        let base = PolyRing::<BigInt>::new();
        let w = WittRing::new(base, 4);
        let gen = |p: &str| {
            let mut c = alloc::vec![LaurentPoly::one()];
            c.extend((1..=4).map(|i| LaurentPoly::var(&format!("{}{}", p, i))));
            w.element(c).unwrap()
        };
        let report = verify_lambda(&w, &[gen("a"), gen("b")], 2, 2).unwrap();
        assert!(report.passed(), "{}", report);
    }
}
