//! The γ-filtration on finite-dimensional rational λ-algebras, its graded pieces (absolute
//! cohomology), Chern classes and the decomposition into Adams eigenspaces.
//!
//! A [`FilteredAlgebra`] models one homotopy slot `n`. Slot 0 is a unital algebra with an
//! augmentation; a slot `n > 0` is a module over the slot-0 algebra with zero product, whose
//! filtration is generated by `B·γ^j(x)` with `B` in `F^{m-j}` of the base.

use alloc::boxed::Box;
use alloc::collections::BTreeMap;
use alloc::format;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use super::augment::Fiber;
use super::ops::gamma;
use super::{LambdaError, LambdaRing};
use crate::exact::matrix::{span_basis, span_rank};
use crate::exact::{binomial_usize, QMatrix, QPoly};

pub type QVec = Vec<BigRational>;

fn q(n: i64) -> BigRational {
    BigRational::from_integer(BigInt::from(n))
}

fn axpy(acc: &mut QVec, c: &BigRational, v: &[BigRational]) {
    if c.is_zero() {
        return;
    }
    for (a, b) in acc.iter_mut().zip(v) {
        *a = &*a + c * b;
    }
}

fn is_zero_vec(v: &[BigRational]) -> bool {
    v.iter().all(|c| c.is_zero())
}

#[derive(Clone, Debug)]
pub struct FilteredAlgebra {
    slot: i64,
    labels: Vec<String>,
    /// `mult[i][j]` = coordinates of `b_i b_j`; empty when the product is zero.
    mult: Vec<Vec<QVec>>,
    unit: Option<QVec>,
    rank: Option<QVec>,
    /// `psi[k - 1]`: the matrix of `ψ^k`, columns indexed by the basis.
    psi: Vec<QMatrix>,
    base: Option<Box<FilteredAlgebra>>,
    /// `action[i]`: the matrix of the base basis element `i` acting on this space.
    action: Vec<QMatrix>,
    /// Bases of `F^0, F^1, ...` in reduced echelon form.
    filtration: Vec<Vec<QVec>>,
}

impl FilteredAlgebra {
    /// A unital slot-0 algebra from a finite basis of a λ-ring over the rationals.
    /// `coords` expresses ring elements in the basis; `psi_max` bounds the Adams data kept.
    pub fn from_ring<R: LambdaRing>(
        ring: &R,
        basis: &[R::Elem],
        coords: impl Fn(&R::Elem) -> Option<QVec>,
        psi_max: usize,
    ) -> Result<Self, LambdaError> {
        let dim = basis.len();
        let co = |x: &R::Elem| {
            coords(x).ok_or_else(|| LambdaError::Invalid(format!("{} is not in the span of the basis", ring.show(x))))
        };
        let mut mult = Vec::with_capacity(dim);
        for a in basis {
            mult.push(basis.iter().map(|b| co(&ring.mul(a, b))).collect::<Result<Vec<_>, _>>()?);
        }
        let unit = match ring.one() {
            Some(o) => Some(co(&o)?),
            None => None,
        };
        let rank = basis.iter().map(|b| ring.rank(b).map(BigRational::from_integer)).collect::<Option<Vec<_>>>();
        let psi = adams_matrices(ring, basis, &co, psi_max)?;
        Ok(FilteredAlgebra {
            slot: 0,
            labels: basis.iter().map(|b| ring.show(b)).collect(),
            mult,
            unit,
            rank,
            psi,
            base: None,
            action: Vec::new(),
            filtration: Vec::new(),
        })
    }

    /// A slot `n > 0`: the fiber `S` of an augmented ring, spanned by `fiber_basis`, as a module
    /// over `base` (built from `base_basis`). The fiber product must vanish.
    #[allow(clippy::too_many_arguments)]
    pub fn fiber_slot<R: LambdaRing, S: Fiber<R>>(
        slot: i64,
        base: FilteredAlgebra,
        base_ring: &R,
        base_basis: &[R::Elem],
        fiber: &S,
        fiber_basis: &[S::Elem],
        coords: impl Fn(&S::Elem) -> Option<QVec>,
        psi_max: usize,
    ) -> Result<Self, LambdaError> {
        if slot <= 0 {
            return Err(LambdaError::Invalid("fiber slots have positive degree".into()));
        }
        if base_basis.len() != base.dim() {
            return Err(LambdaError::Invalid("the base basis does not match the base algebra".into()));
        }
        let co = |x: &S::Elem| {
            coords(x).ok_or_else(|| LambdaError::Invalid(format!("{} is not in the span of the basis", fiber.show(x))))
        };
        for a in fiber_basis {
            for b in fiber_basis {
                if !fiber.is_zero(&fiber.mul(a, b)) {
                    return Err(LambdaError::Invalid(
                        "only fibers with zero internal product are supported as slots".into(),
                    ));
                }
            }
        }
        let mut action = Vec::with_capacity(base_basis.len());
        for r in base_basis {
            let cols = fiber_basis.iter().map(|s| co(&fiber.act(base_ring, r, s))).collect::<Result<Vec<_>, _>>()?;
            action.push(QMatrix::from_columns(fiber_basis.len(), &cols));
        }
        let psi = adams_matrices(fiber, fiber_basis, &co, psi_max)?;
        Ok(FilteredAlgebra {
            slot,
            labels: fiber_basis.iter().map(|b| fiber.show(b)).collect(),
            mult: Vec::new(),
            unit: None,
            rank: None,
            psi,
            base: Some(Box::new(base)),
            action,
            filtration: Vec::new(),
        })
    }

    /// A slot-0 algebra from raw structure constants.
    pub fn from_tables(
        labels: Vec<String>,
        mult: Vec<Vec<QVec>>,
        unit: QVec,
        rank: Option<QVec>,
        psi: Vec<QMatrix>,
    ) -> Self {
        FilteredAlgebra {
            slot: 0,
            labels,
            mult,
            unit: Some(unit),
            rank,
            psi,
            base: None,
            action: Vec::new(),
            filtration: Vec::new(),
        }
    }

    pub fn dim(&self) -> usize {
        self.labels.len()
    }

    pub fn slot(&self) -> i64 {
        self.slot
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn base(&self) -> Option<&FilteredAlgebra> {
        self.base.as_deref()
    }

    /// Largest `k` with a known `ψ^k`.
    pub fn adams_bound(&self) -> usize {
        self.psi.len()
    }

    pub fn psi_matrix(&self, k: usize) -> Option<&QMatrix> {
        k.checked_sub(1).and_then(|i| self.psi.get(i))
    }

    /// Largest `m` for which `F^m` is known.
    pub fn computed_through(&self) -> Option<usize> {
        self.filtration.len().checked_sub(1)
    }

    /// Basis of `F^m`.
    pub fn filtration(&self, m: usize) -> Option<&[QVec]> {
        self.filtration.get(m).map(|v| v.as_slice())
    }

    pub fn filtration_dim(&self, m: usize) -> Option<usize> {
        self.filtration.get(m).map(|v| v.len())
    }

    pub fn contains(&self, m: usize, x: &[BigRational]) -> Option<bool> {
        let f = self.filtration.get(m)?;
        let mut vs = f.clone();
        vs.push(x.to_vec());
        Some(span_rank(self.dim(), &vs) == f.len())
    }

    /// The largest computed `m` with `x ∈ F^m`.
    pub fn filtration_index(&self, x: &[BigRational]) -> Option<usize> {
        (0..self.filtration.len()).rev().find(|&m| self.contains(m, x) == Some(true))
    }

    /// The product in a slot-0 algebra (zero in a fiber slot).
    pub fn mul(&self, u: &[BigRational], v: &[BigRational]) -> QVec {
        let mut out = vec![BigRational::zero(); self.dim()];
        if self.mult.is_empty() {
            return out;
        }
        for (i, ui) in u.iter().enumerate() {
            if ui.is_zero() {
                continue;
            }
            for (j, vj) in v.iter().enumerate() {
                if vj.is_zero() {
                    continue;
                }
                axpy(&mut out, &(ui * vj), &self.mult[i][j]);
            }
        }
        out
    }

    /// `r · x` for `r` in the base and `x` in a fiber slot.
    pub fn act(&self, r: &[BigRational], x: &[BigRational]) -> QVec {
        let mut out = vec![BigRational::zero(); self.dim()];
        for (i, ri) in r.iter().enumerate() {
            if !ri.is_zero() {
                axpy(&mut out, ri, &self.action[i].apply(x));
            }
        }
        out
    }

    fn psi_apply(&self, k: usize, x: &[BigRational]) -> Result<QVec, LambdaError> {
        let m = self.psi_matrix(k).ok_or_else(|| {
            LambdaError::Index(format!("ψ^{} is not available (Adams data known up to {})", k, self.psi.len()))
        })?;
        Ok(m.apply(x))
    }

    /// `λ^0(x)..λ^n(x)` by Newton's identities; in a fiber slot `λ^0` is reported as zero.
    pub fn lambdas(&self, x: &[BigRational], n: usize) -> Result<Vec<QVec>, LambdaError> {
        let zero = vec![BigRational::zero(); self.dim()];
        let mut lam: Vec<QVec> = vec![self.unit.clone().unwrap_or_else(|| zero.clone())];
        let psis: Vec<QVec> = (1..=n).map(|k| self.psi_apply(k, x)).collect::<Result<_, _>>()?;
        for k in 1..=n {
            // k λ^k = Σ_{i=1}^{k} (-1)^{i-1} ψ^i λ^{k-i}, where ψ^k λ^0 reads ψ^k(x).
            let mut acc = zero.clone();
            for i in 1..=k {
                let sign = if i % 2 == 1 { q(1) } else { q(-1) };
                let t = if i == k { psis[i - 1].clone() } else { self.mul(&psis[i - 1], &lam[k - i]) };
                axpy(&mut acc, &sign, &t);
            }
            let inv = BigRational::new(BigInt::one(), BigInt::from(k));
            lam.push(acc.iter().map(|c| c * &inv).collect());
        }
        Ok(lam)
    }

    /// `γ^1(x)..γ^n(x)` via `γ^i = Σ_j C(i-1, i-j) λ^j`.
    pub fn gammas(&self, x: &[BigRational], n: usize) -> Result<Vec<QVec>, LambdaError> {
        let lam = self.lambdas(x, n)?;
        let mut out = Vec::with_capacity(n);
        for i in 1..=n {
            let mut acc = vec![BigRational::zero(); self.dim()];
            for (j, lj) in lam.iter().enumerate().take(i + 1).skip(1) {
                axpy(&mut acc, &q(binomial_usize(i - 1, i - j) as i64), lj);
            }
            out.push(acc);
        }
        Ok(out)
    }

    /// Computes `F^0..F^{m_max}`. Generators `γ^i` are taken for `i <= dim·m_max`; the result
    /// is certified by recomputing with `dim` further indices.
    pub fn gamma_filtration(&self, m_max: usize) -> Result<FilteredAlgebra, LambdaError> {
        let mut out = self.clone();
        if let Some(base) = &self.base {
            if base.computed_through().map_or(true, |c| c + 1 < m_max) {
                out.base = Some(Box::new(base.gamma_filtration(m_max)?));
            }
        }
        let cap = (self.dim() * m_max).max(1);
        let first = out.saturate(m_max, cap)?;
        let second = out.saturate(m_max, cap + self.dim().max(1))?;
        if first != second {
            return Err(LambdaError::Invalid(format!("the γ-filtration did not stabilize at generator index {}", cap)));
        }
        out.filtration = first;
        Ok(out)
    }

    fn saturate(&self, m_max: usize, cap: usize) -> Result<Vec<Vec<QVec>>, LambdaError> {
        let dim = self.dim();
        let whole: Vec<QVec> = QMatrix::identity(dim).to_rows();
        let mut f: Vec<Vec<QVec>> = vec![whole.clone(); m_max + 1];
        if m_max == 0 {
            return Ok(f);
        }
        match &self.base {
            None => {
                let rank = self.rank.as_ref().ok_or(LambdaError::MissingRank)?;
                let kernel = QMatrix::from_rows(1, dim, rank.clone()).kernel();
                // gens[i - 1] = γ^i of each kernel basis element.
                let mut gens: Vec<Vec<QVec>> = vec![Vec::new(); cap];
                for b in &kernel {
                    for (i, g) in self.gammas(b, cap)?.into_iter().enumerate() {
                        if !is_zero_vec(&g) {
                            gens[i].push(g);
                        }
                    }
                }
                for m in 1..=m_max {
                    let seed: Vec<QVec> = gens[m - 1..].iter().flatten().cloned().collect();
                    f[m] = span_basis(dim, &seed);
                }
                loop {
                    let mut changed = false;
                    for m in 1..=m_max {
                        let mut vs = f[m].clone();
                        for (i, gi) in gens.iter().enumerate() {
                            let src = &f[m.saturating_sub(i + 1).max(1)];
                            for g in gi {
                                for b in src {
                                    vs.push(self.mul(g, b));
                                }
                            }
                        }
                        let nb = span_basis(dim, &vs);
                        if nb != f[m] {
                            f[m] = nb;
                            changed = true;
                        }
                    }
                    if !changed {
                        break;
                    }
                }
            }
            Some(base) => {
                let base_f = |k: isize| -> Vec<QVec> {
                    if k <= 0 {
                        QMatrix::identity(base.dim()).to_rows()
                    } else {
                        base.filtration[k as usize].clone()
                    }
                };
                let mut gens: Vec<Vec<QVec>> = vec![Vec::new(); cap];
                for l in 0..dim {
                    let mut x = vec![BigRational::zero(); dim];
                    x[l] = BigRational::one();
                    for (j, g) in self.gammas(&x, cap)?.into_iter().enumerate() {
                        if !is_zero_vec(&g) {
                            gens[j].push(g);
                        }
                    }
                }
                for m in 1..=m_max {
                    let mut vs = Vec::new();
                    for (j, gj) in gens.iter().enumerate() {
                        for b in base_f(m as isize - (j as isize + 1)) {
                            for g in gj {
                                vs.push(self.act(&b, g));
                            }
                        }
                    }
                    f[m] = span_basis(dim, &vs);
                }
            }
        }
        Ok(f)
    }

    /// The aligned table `m | dim F^m | dim gr^m`.
    pub fn filtration_table(&self) -> String {
        let mut out = format!("{:>3}  {:>8}  {:>9}\n", "m", "dim F^m", "dim gr^m");
        for m in 0..self.filtration.len() {
            let d = self.filtration[m].len();
            let gr = match self.filtration.get(m + 1) {
                Some(next) => format!("{}", d - next.len()),
                None => String::from("?"),
            };
            out.push_str(&format!("{:>3}  {:>8}  {:>9}\n", m, d, gr));
        }
        out
    }
}

fn adams_matrices<R: LambdaRing>(
    ring: &R,
    basis: &[R::Elem],
    co: &impl Fn(&R::Elem) -> Result<QVec, LambdaError>,
    psi_max: usize,
) -> Result<Vec<QMatrix>, LambdaError> {
    let mut psi = Vec::with_capacity(psi_max);
    for k in 1..=psi_max {
        let cols = basis.iter().map(|b| co(&ring.psi(k, b)?)).collect::<Result<Vec<_>, _>>()?;
        psi.push(QMatrix::from_columns(basis.len(), &cols));
    }
    Ok(psi)
}

/// `F^j / F^{j+1}` of one slot.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GradedPiece {
    pub slot: i64,
    pub weight: i64,
    /// Representatives of a basis of the quotient.
    pub basis: Vec<QVec>,
}

impl GradedPiece {
    pub fn dim(&self) -> usize {
        self.basis.len()
    }
}

/// The group indexed by `(i, j)`: `gr^j` of slot `2j - i`.
pub fn absolute_cohomology(
    family: &BTreeMap<i64, FilteredAlgebra>,
    i: i64,
    j: i64,
) -> Result<GradedPiece, LambdaError> {
    let n = 2 * j - i;
    let a = family.get(&n).ok_or(LambdaError::MissingSlot(n))?;
    if j < 0 {
        return Ok(GradedPiece { slot: n, weight: j, basis: Vec::new() });
    }
    let j_us = j as usize;
    let (Some(fj), Some(fj1)) = (a.filtration(j_us), a.filtration(j_us + 1)) else {
        return Err(LambdaError::Index(format!(
            "the filtration of slot {} is computed only through F^{}",
            n,
            a.computed_through().map_or(-1, |c| c as i64)
        )));
    };
    let mut acc: Vec<QVec> = fj1.to_vec();
    let mut basis = Vec::new();
    for v in fj {
        let mut trial = acc.clone();
        trial.push(v.clone());
        if span_rank(a.dim(), &trial) > span_rank(a.dim(), &acc) {
            acc = trial;
            basis.push(v.clone());
        }
    }
    Ok(GradedPiece { slot: n, weight: j, basis })
}

/// A Chern class `c_i(j)(x) = γ^j(x - ε(x)·1)`; `i` labels the target group only.
#[derive(Clone, Debug, PartialEq)]
pub struct ChernClass<E> {
    pub i: i64,
    pub j: usize,
    pub value: E,
}

/// Computes `γ^j(x - ε(x)·1)`; for an augmented ring pass `x = (α, β)`.
pub fn chern_class<L: LambdaRing>(ring: &L, i: i64, j: usize, x: &L::Elem) -> Result<ChernClass<L::Elem>, LambdaError> {
    let r = ring.rank(x).ok_or(LambdaError::MissingRank)?;
    let one = ring.one().ok_or(LambdaError::NoUnit)?;
    let reduced = ring.sub(x, &ring.scale(&one, &r));
    Ok(ChernClass { i, j, value: gamma(ring, j, &reduced)? })
}

/// The minimal polynomial of a square matrix, monic, lowest degree first.
pub fn minimal_polynomial(m: &QMatrix) -> Vec<BigRational> {
    let n = m.rows();
    let flat = |a: &QMatrix| -> QVec { (0..n).flat_map(|i| a.row(i).to_vec()).collect() };
    let mut powers = vec![QMatrix::identity(n)];
    loop {
        let next = powers.last().expect("nonempty").mul(m);
        let cols: Vec<QVec> = powers.iter().map(flat).collect();
        let a = QMatrix::from_columns(n * n, &cols);
        if let Some(c) = a.solve(&flat(&next)) {
            let mut poly: Vec<BigRational> = c.into_iter().map(|x| -x).collect();
            poly.push(BigRational::one());
            return poly;
        }
        powers.push(next);
    }
}

fn poly_text(coeffs: &[BigRational]) -> String {
    let mut p = QPoly::zero();
    for (i, c) in coeffs.iter().enumerate() {
        p = p.add(&QPoly::monomial(&[("T", i as i32)], c.clone()));
    }
    format!("{}", p)
}

/// Splits `x = Σ x_n` with `ψ^k(x_n) = k^n x_n`, returning the nonzero `(n, x_n)`.
pub fn adams_eigenspace(a: &FilteredAlgebra, x: &[BigRational], k: usize) -> Result<Vec<(usize, QVec)>, LambdaError> {
    if k < 2 {
        return Err(LambdaError::Index("eigenspace decomposition needs k >= 2".into()));
    }
    let m = a.psi_matrix(k).ok_or_else(|| LambdaError::Index(format!("ψ^{} is not available", k)))?.clone();
    let minpoly = minimal_polynomial(&m);
    let err = || LambdaError::UnexpectedEigenvalue { k, minpoly: poly_text(&minpoly) };
    // Peel off roots k^n; each may occur once.
    let mut rest = minpoly.clone();
    let mut roots: Vec<(usize, BigRational)> = Vec::new();
    for n in 0..=a.dim() {
        let r = BigRational::from_integer(BigInt::from(k).pow(n as u32));
        let (quot, rem) = divide_linear(&rest, &r);
        if rem.is_zero() {
            rest = quot;
            let (_, rem2) = divide_linear(&rest, &r);
            if rem2.is_zero() && rest.len() > 1 {
                return Err(err());
            }
            roots.push((n, r));
        }
    }
    if rest.len() != 1 {
        return Err(err());
    }
    let dim = a.dim();
    let mut out = Vec::new();
    for (n, r) in &roots {
        let mut v = x.to_vec();
        for (_, s) in roots.iter().filter(|(n2, _)| n2 != n) {
            let shifted = m.sub(&QMatrix::identity(dim).scale(s));
            let inv = BigRational::one() / (r - s);
            v = shifted.apply(&v).iter().map(|c| c * &inv).collect();
        }
        if !is_zero_vec(&v) {
            out.push((*n, v));
        }
    }
    Ok(out)
}

/// Divides `p` (lowest degree first) by `T - r`.
fn divide_linear(p: &[BigRational], r: &BigRational) -> (Vec<BigRational>, BigRational) {
    let d = p.len() - 1;
    if d == 0 {
        return (p.to_vec(), p[0].clone());
    }
    let mut quot = vec![BigRational::zero(); d];
    let mut carry = BigRational::zero();
    for i in (0..=d).rev() {
        let c = &p[i] + &carry * r;
        if i == 0 {
            return (quot, c);
        }
        quot[i - 1] = c.clone();
        carry = c;
    }
    unreachable!()
}

impl fmt::Display for FilteredAlgebra {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "slot {} (dim {})", self.slot, self.dim())?;
        write!(f, "{}", self.filtration_table())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::{LaurentPoly, Poly};
    use crate::lambda::presented::{GeneratorLambda, PresentedRing};

    /// ℚ[x]/(x - 1)^n with x a line.
    pub(crate) fn truncated_torus(n: usize) -> (PresentedRing<BigRational>, Vec<Poly<BigRational>>) {
        let mut r = PresentedRing::new();
        r.add_generator("x", GeneratorLambda::Line, None).unwrap();
        // (x - 1)^n = 0, solved for x^n.
        let h: Poly<BigRational> = "x - 1".parse().unwrap();
        let lead = Poly::monomial(&[("x", n as i32)], BigRational::one());
        let rhs = lead.sub(&h.pow(n as i64).unwrap());
        r.add_relation(&lead, &rhs).unwrap();
        let basis = (0..n).map(|i| Poly::monomial(&[("x", i as i32)], BigRational::one())).collect();
        (r, basis)
    }

    pub(crate) fn coords_in_powers(n: usize) -> impl Fn(&Poly<BigRational>) -> Option<QVec> {
        move |p| {
            let mut v = vec![BigRational::zero(); n];
            for (m, c) in p.terms() {
                let e = p.exponent_of(m, "x");
                if e < 0 || e as usize >= n || p.vars().iter().any(|v| v != "x") {
                    return None;
                }
                v[e as usize] = c.clone();
            }
            Some(v)
        }
    }

    #[test]
    fn truncated_polynomial_filtration_dimensions() {
        let (r, basis) = truncated_torus(3);
        let a = FilteredAlgebra::from_ring(&r, &basis, coords_in_powers(3), 3 * 4 + 3).unwrap();
        let f = a.gamma_filtration(4).unwrap();
        let dims: Vec<usize> = (0..=4).map(|m| f.filtration_dim(m).unwrap()).collect();
        assert_eq!(dims, [3, 2, 1, 0, 0]);
    }

    #[test]
    fn rational_numbers_have_trivial_filtration() {
        let a = FilteredAlgebra::from_tables(
            vec!["1".into()],
            vec![vec![vec![q(1)]]],
            vec![q(1)],
            Some(vec![q(1)]),
            (0..4).map(|_| QMatrix::identity(1)).collect(),
        );
        let f = a.gamma_filtration(2).unwrap();
        assert_eq!(f.filtration_dim(1), Some(0));
        let family: BTreeMap<i64, FilteredAlgebra> = [(0, f)].into_iter().collect();
        assert_eq!(absolute_cohomology(&family, 0, 0).unwrap().dim(), 1);
        assert_eq!(absolute_cohomology(&family, 2, 1).unwrap().dim(), 0);
        assert_eq!(absolute_cohomology(&family, 1, 1), Err(LambdaError::MissingSlot(1)));
    }

    #[test]
    fn missing_rank_is_reported() {
        let a = FilteredAlgebra::from_tables(
            vec!["1".into()],
            vec![vec![vec![q(1)]]],
            vec![q(1)],
            None,
            vec![QMatrix::identity(1)],
        );
        assert_eq!(a.gamma_filtration(1).unwrap_err(), LambdaError::MissingRank);
    }

    #[test]
    fn eigen_decomposition_of_line_minus_one() {
        let (r, basis) = truncated_torus(3);
        let a = FilteredAlgebra::from_ring(&r, &basis, coords_in_powers(3), 3).unwrap();
        let h = vec![q(-1), q(1), q(0)];
        let parts = adams_eigenspace(&a, &h, 2).unwrap();
        assert!(parts.iter().all(|(n, _)| *n >= 1));
        let mut sum = vec![q(0); 3];
        for (n, v) in &parts {
            let psi = a.psi_matrix(2).unwrap().apply(v);
            let scaled: QVec = v.iter().map(|c| c * q(1 << n)).collect();
            assert_eq!(psi, scaled);
            axpy(&mut sum, &q(1), v);
        }
        assert_eq!(sum, h);
        assert_eq!(adams_eigenspace(&a, &[q(1), q(0), q(0)], 2).unwrap(), vec![(0, vec![q(1), q(0), q(0)])]);
    }

    #[test]
    fn unexpected_eigenvalue_reports_minimal_polynomial() {
        // ψ^2 on ℚ[σ]/(σ^2 - 1) sends σ to 1: eigenvalues 1 and 0.
        let mut r: PresentedRing<BigRational> = PresentedRing::new();
        r.add_generator("s", GeneratorLambda::Line, None).unwrap();
        r.add_relation(&"s^2".parse().unwrap(), &Poly::one()).unwrap();
        let basis = vec![Poly::one(), Poly::var("s")];
        let co = |p: &Poly<BigRational>| Some(vec![p.coefficient(&[]), p.coefficient(&[("s", 1)])]);
        let a = FilteredAlgebra::from_ring(&r, &basis, co, 2).unwrap();
        match adams_eigenspace(&a, &[q(0), q(1)], 2) {
            Err(LambdaError::UnexpectedEigenvalue { minpoly, .. }) => assert_eq!(minpoly, "T^2 - T"),
            other => panic!("{:?}", other),
        }
    }

    #[test]
    fn chern_class_of_a_line() {
        let mut r: PresentedRing<BigInt> = PresentedRing::new();
        r.add_generator("g", GeneratorLambda::Line, None).unwrap();
        let g: LaurentPoly = "g".parse().unwrap();
        assert_eq!(chern_class(&r, 2, 1, &g).unwrap().value, "g - 1".parse::<LaurentPoly>().unwrap());
        assert_eq!(chern_class(&r, 0, 0, &g).unwrap().value, LaurentPoly::one());
    }

    #[test]
    fn minimal_polynomial_of_a_projection() {
        let m = QMatrix::from_rows(2, 2, vec![q(1), q(1), q(0), q(0)]);
        assert_eq!(minimal_polynomial(&m), vec![q(0), q(-1), q(1)]);
    }
}
