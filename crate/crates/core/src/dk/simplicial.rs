//! Truncated simplicial and cosimplicial free modules, Dold-Kan normalization and
//! denormalization.
//!
//! Normalization uses the kernel model `N_n = ⋂_{i<n} ker d_i` with differential
//! `(-1)^n d_n`. Denormalization builds level `n` as `⊕_{σ : [n] ->> [m]} C_m`; on the
//! summand `(σ, c)` the face `d_i` factors `σ δ^i = ε η` and sends `(σ, c)` to `(η, c)` when
//! `ε = id`, to `(η, (-1)^m ∂c)` when `ε = δ^m`, and to zero otherwise.
//!
//! The cosimplicial side is the transpose: `DN^v(E)` is the dual of `DN(E*)`, so cofaces are
//! transposed faces and codegeneracies are transposed degeneracies.

use alloc::string::String;
use alloc::vec::Vec;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use super::complex::Complex;
use super::surj::{Face, Surj};
use super::DkError;
use crate::exact::{integer_kernel, solve_integer, IntMatrix};

/// Levels `0..=top` of a simplicial free module, with all faces and degeneracies between them.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SimplicialModule {
    ranks: Vec<usize>,
    /// `faces[n][i] = d_i : X_n -> X_{n-1}` for `n >= 1`.
    faces: Vec<Vec<IntMatrix>>,
    /// `degens[n][j] = s_j : X_n -> X_{n+1}` for `n < top`.
    degens: Vec<Vec<IntMatrix>>,
}

fn identity_error(name: String) -> DkError {
    DkError::Identity(name)
}

impl SimplicialModule {
    pub fn new(ranks: Vec<usize>, faces: Vec<Vec<IntMatrix>>, degens: Vec<Vec<IntMatrix>>) -> Result<Self, DkError> {
        let top =
            ranks.len().checked_sub(1).ok_or_else(|| DkError::Shape("a simplicial module needs level 0".into()))?;
        if faces.len() != top + 1 || degens.len() != top {
            return Err(DkError::Shape("faces must be listed for levels 0..=top, degeneracies for 0..top".into()));
        }
        for n in 0..=top {
            let want = if n == 0 { 0 } else { n + 1 };
            if faces[n].len() != want {
                return Err(DkError::Shape(alloc::format!("level {} needs {} faces", n, want)));
            }
            for (i, d) in faces[n].iter().enumerate() {
                if d.rows() != ranks[n - 1] || d.cols() != ranks[n] {
                    return Err(DkError::Shape(alloc::format!("d_{} on level {} has the wrong shape", i, n)));
                }
            }
            if n < top {
                if degens[n].len() != n + 1 {
                    return Err(DkError::Shape(alloc::format!("level {} needs {} degeneracies", n, n + 1)));
                }
                for (j, s) in degens[n].iter().enumerate() {
                    if s.rows() != ranks[n + 1] || s.cols() != ranks[n] {
                        return Err(DkError::Shape(alloc::format!("s_{} on level {} has the wrong shape", j, n)));
                    }
                }
            }
        }
        let x = SimplicialModule { ranks, faces, degens };
        x.check_identities()?;
        Ok(x)
    }

    /// The constant simplicial module on `Z^rank`.
    pub fn constant(rank: usize, top: usize) -> Self {
        let id = IntMatrix::identity(rank);
        SimplicialModule {
            ranks: alloc::vec![rank; top + 1],
            faces: (0..=top).map(|n| if n == 0 { Vec::new() } else { alloc::vec![id.clone(); n + 1] }).collect(),
            degens: (0..top).map(|n| alloc::vec![id.clone(); n + 1]).collect(),
        }
    }

    pub fn top(&self) -> usize {
        self.ranks.len() - 1
    }

    pub fn rank(&self, n: usize) -> usize {
        self.ranks[n]
    }

    pub fn face(&self, n: usize, i: usize) -> &IntMatrix {
        &self.faces[n][i]
    }

    pub fn degeneracy(&self, n: usize, j: usize) -> &IntMatrix {
        &self.degens[n][j]
    }

    /// Audit every simplicial identity through the top level; the error names the first
    /// failing identity.
    pub fn check_identities(&self) -> Result<(), DkError> {
        let top = self.top();
        let d = |n: usize, i: usize| &self.faces[n][i];
        let s = |n: usize, j: usize| &self.degens[n][j];
        for n in 2..=top {
            for j in 1..=n {
                for i in 0..j {
                    if d(n - 1, i).mul(d(n, j)) != d(n - 1, j - 1).mul(d(n, i)) {
                        return Err(identity_error(alloc::format!("d_{i} d_{j} = d_{} d_{i} on level {n}", j - 1)));
                    }
                }
            }
        }
        for n in 0..top {
            for j in 0..=n {
                for i in 0..=n + 1 {
                    let lhs = d(n + 1, i).mul(s(n, j));
                    let (rhs, text) = if i < j {
                        (s(n - 1, j - 1).mul(d(n, i)), alloc::format!("d_{i} s_{j} = s_{} d_{i}", j - 1))
                    } else if i == j || i == j + 1 {
                        (IntMatrix::identity(self.ranks[n]), alloc::format!("d_{i} s_{j} = id"))
                    } else {
                        (s(n - 1, j).mul(d(n, i - 1)), alloc::format!("d_{i} s_{j} = s_{j} d_{}", i - 1))
                    };
                    if lhs != rhs {
                        return Err(identity_error(alloc::format!("{text} on level {n}")));
                    }
                }
            }
        }
        for n in 0..top.saturating_sub(1) {
            for j in 0..=n {
                for i in 0..=j {
                    if s(n + 1, i).mul(s(n, j)) != s(n + 1, j + 1).mul(s(n, i)) {
                        return Err(identity_error(alloc::format!("s_{i} s_{j} = s_{} s_{i} on level {n}", j + 1)));
                    }
                }
            }
        }
        Ok(())
    }

    /// `X(σ) : X_m -> X_n` for a surjection `σ : [n] ->> [m]`, as a composite of degeneracies.
    pub fn operator(&self, sigma: Surj) -> IntMatrix {
        let n = sigma.level();
        match (0..n).find(|&j| !sigma.steps_at(j)) {
            None => IntMatrix::identity(self.ranks[n]),
            Some(j) => {
                let rest = sigma.undegenerate(j).expect("gap without a step");
                self.degens[n - 1][j].mul(&self.operator(rest))
            }
        }
    }

    /// Normalized chain complex, with the inclusions `N_n -> X_n` (columns are a basis of
    /// the integer lattice `⋂_{i<n} ker d_i`).
    pub fn normalize_with_basis(&self) -> (Complex, Vec<IntMatrix>) {
        let bases: Vec<IntMatrix> = (0..=self.top()).map(|n| self.normalized_basis(n)).collect();
        let mut diffs = Vec::new();
        for n in 1..=self.top() {
            let dn = self.faces[n][n].mul(&bases[n]);
            let dn = if n % 2 == 0 { dn } else { dn.neg() };
            diffs.push(coordinates(&bases[n - 1], &dn).expect("the last face preserves the normalized lattice"));
        }
        let ranks = bases.iter().map(|b| b.cols()).collect();
        (Complex::from_chain(ranks, diffs).expect("normalized complex"), bases)
    }

    pub fn normalize(&self) -> Complex {
        self.normalize_with_basis().0
    }

    fn normalized_basis(&self, n: usize) -> IntMatrix {
        if n == 0 {
            return IntMatrix::identity(self.ranks[0]);
        }
        let mut stacked = self.faces[n][0].clone();
        for i in 1..n {
            stacked = stacked.vstack(&self.faces[n][i]);
        }
        let kernel = integer_kernel(&stacked);
        IntMatrix::from_columns(self.ranks[n], &kernel)
    }

    /// Transpose every structure map, giving the dual cosimplicial module.
    pub fn dual(&self) -> CosimplicialModule {
        CosimplicialModule {
            ranks: self.ranks.clone(),
            cofaces: (0..self.top()).map(|n| self.faces[n + 1].iter().map(IntMatrix::transpose).collect()).collect(),
            codegens: (0..=self.top())
                .map(
                    |n| if n == 0 { Vec::new() } else { self.degens[n - 1].iter().map(IntMatrix::transpose).collect() },
                )
                .collect(),
        }
    }
}

/// Columns of `target` written in the lattice basis formed by the columns of `basis`.
pub(crate) fn coordinates(basis: &IntMatrix, target: &IntMatrix) -> Option<IntMatrix> {
    let mut cols = Vec::with_capacity(target.cols());
    for j in 0..target.cols() {
        cols.push(solve_integer(basis, &target.column(j))?);
    }
    Some(IntMatrix::from_columns(basis.cols(), &cols))
}

/// Levels `0..=top` of a cosimplicial free module.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CosimplicialModule {
    ranks: Vec<usize>,
    /// `cofaces[n][i] = δ^i : X^n -> X^{n+1}` for `n < top`.
    cofaces: Vec<Vec<IntMatrix>>,
    /// `codegens[n][j] = σ^j : X^n -> X^{n-1}` for `n >= 1`.
    codegens: Vec<Vec<IntMatrix>>,
}

impl CosimplicialModule {
    pub fn new(
        ranks: Vec<usize>,
        cofaces: Vec<Vec<IntMatrix>>,
        codegens: Vec<Vec<IntMatrix>>,
    ) -> Result<Self, DkError> {
        let x = CosimplicialModule { ranks, cofaces, codegens };
        // The identities are exactly the transposes of the simplicial ones.
        x.dual().map_err(|e| match e {
            DkError::Identity(s) => DkError::Identity(alloc::format!("transpose of {}", s)),
            other => other,
        })?;
        Ok(x)
    }

    pub fn constant(rank: usize, top: usize) -> Self {
        SimplicialModule::constant(rank, top).dual()
    }

    pub fn top(&self) -> usize {
        self.ranks.len() - 1
    }

    pub fn rank(&self, n: usize) -> usize {
        self.ranks[n]
    }

    pub fn coface(&self, n: usize, i: usize) -> &IntMatrix {
        &self.cofaces[n][i]
    }

    pub fn codegeneracy(&self, n: usize, j: usize) -> &IntMatrix {
        &self.codegens[n][j]
    }

    /// The simplicial module with every map transposed (validated).
    pub fn dual(&self) -> Result<SimplicialModule, DkError> {
        let faces = (0..=self.top())
            .map(|n| if n == 0 { Vec::new() } else { self.cofaces[n - 1].iter().map(IntMatrix::transpose).collect() })
            .collect();
        let degens = (0..self.top()).map(|n| self.codegens[n + 1].iter().map(IntMatrix::transpose).collect()).collect();
        SimplicialModule::new(self.ranks.clone(), faces, degens)
    }

    /// Normalized cochain complex `N^n = ⋂_{j<n} ker σ^j` with differential `Σ (-1)^i δ^i`,
    /// with the inclusions into `X^n`. The top level has no outgoing differential.
    pub fn normalize_with_basis(&self) -> (Complex, Vec<IntMatrix>) {
        let bases: Vec<IntMatrix> = (0..=self.top()).map(|n| self.normalized_basis(n)).collect();
        let mut diffs = Vec::new();
        for n in 0..self.top() {
            let mut d = IntMatrix::zeros(self.ranks[n + 1], self.ranks[n]);
            for (i, c) in self.cofaces[n].iter().enumerate() {
                d = if i % 2 == 0 { d.add(c) } else { d.sub(c) };
            }
            let d = d.mul(&bases[n]);
            diffs.push(coordinates(&bases[n + 1], &d).expect("the coboundary preserves the normalized lattice"));
        }
        let ranks = bases.iter().map(|b| b.cols()).collect();
        (Complex::new(0, ranks, diffs).expect("normalized cochain complex"), bases)
    }

    pub fn normalize(&self) -> Complex {
        self.normalize_with_basis().0
    }

    fn normalized_basis(&self, n: usize) -> IntMatrix {
        if n == 0 {
            return IntMatrix::identity(self.ranks[0]);
        }
        let mut stacked = self.codegens[n][0].clone();
        for j in 1..n {
            stacked = stacked.vstack(&self.codegens[n][j]);
        }
        IntMatrix::from_columns(self.ranks[n], &integer_kernel(&stacked))
    }
}

/// The summands `(σ, c)` of `DN(C)_n`: surjections by increasing step mask, then basis index.
pub(crate) fn dn_labels(chain_ranks: &[usize], n: usize) -> Vec<(Surj, usize)> {
    let mut out = Vec::new();
    for sigma in Surj::all(n) {
        let m = sigma.target();
        for c in 0..chain_ranks.get(m).copied().unwrap_or(0) {
            out.push((sigma, c));
        }
    }
    out
}

/// `DN(C)` through level `top`, for a complex concentrated in nonpositive cochain degrees
/// (chain degrees `>= 0`).
pub fn denormalize(c: &Complex, top: usize) -> Result<SimplicialModule, DkError> {
    if !c.is_zero() && c.hi() > 0 {
        return Err(DkError::Shape("denormalization needs a complex in chain degrees >= 0".into()));
    }
    let chain_ranks: Vec<usize> = (0..=top).map(|m| c.rank(-(m as i64))).collect();
    let labels: Vec<Vec<(Surj, usize)>> = (0..=top).map(|n| dn_labels(&chain_ranks, n)).collect();
    let index = |n: usize, sigma: Surj, b: usize| labels[n].iter().position(|&(s, x)| s == sigma && x == b);
    let mut faces = Vec::new();
    for n in 0..=top {
        let mut level = Vec::new();
        if n > 0 {
            for i in 0..=n {
                let mut d = IntMatrix::zeros(labels[n - 1].len(), labels[n].len());
                for (col, &(sigma, b)) in labels[n].iter().enumerate() {
                    match sigma.face(i) {
                        Face::Same(eta) => d.set(index(n - 1, eta, b).expect("face label"), col, BigInt::one()),
                        Face::Last(eta) => {
                            let m = sigma.target();
                            // ∂ : C_m -> C_{m-1} is the cochain differential d^{-m}.
                            let boundary = c.diff(-(m as i64));
                            let sign = if m % 2 == 0 { BigInt::one() } else { -BigInt::one() };
                            for row in 0..boundary.rows() {
                                let x = boundary.get(row, b);
                                if !x.is_zero() {
                                    d.add_to(index(n - 1, eta, row).expect("face label"), col, &(x * &sign));
                                }
                            }
                        }
                        Face::Zero => {}
                    }
                }
                level.push(d);
            }
        }
        faces.push(level);
    }
    let mut degens = Vec::new();
    for n in 0..top {
        let mut level = Vec::new();
        for j in 0..=n {
            let mut s = IntMatrix::zeros(labels[n + 1].len(), labels[n].len());
            for (col, &(sigma, b)) in labels[n].iter().enumerate() {
                s.set(index(n + 1, sigma.degeneracy(j), b).expect("degeneracy label"), col, BigInt::one());
            }
            level.push(s);
        }
        degens.push(level);
    }
    let ranks = labels.iter().map(Vec::len).collect();
    SimplicialModule::new(ranks, faces, degens)
}

/// `DN^v(E)` through level `top`, for a cochain complex concentrated in degrees `>= 0`.
pub fn denormalize_v(e: &Complex, top: usize) -> Result<CosimplicialModule, DkError> {
    if !e.is_zero() && e.lo() < 0 {
        return Err(DkError::Shape("cosimplicial denormalization needs a complex in degrees >= 0".into()));
    }
    Ok(denormalize(&dual_complex(e), top)?.dual())
}

/// `E*` as a chain complex: `(E*)_n = Hom(E^n, Z)` with `∂ = (d^{n-1})^T`, stored as cochain
/// degree `-n`.
pub(crate) fn dual_complex(e: &Complex) -> Complex {
    if e.is_zero() {
        return Complex::zero();
    }
    let ranks: Vec<usize> = (0..=e.hi()).rev().map(|n| e.rank(n)).collect();
    let diffs = (1..=e.hi()).rev().map(|n| e.diff(n - 1).transpose()).collect();
    Complex::new(-e.hi(), ranks, diffs).expect("dual complex")
}

/// The comparison map `DN(N X) -> X`: on the summand `(σ, b)` it is `X(σ)` applied to the
/// normalized basis vector `b`. It is an isomorphism commuting with all structure maps.
pub fn dn_n_comparison(x: &SimplicialModule) -> Result<(SimplicialModule, Vec<IntMatrix>), DkError> {
    let (n_x, bases) = x.normalize_with_basis();
    let dn = denormalize(&n_x, x.top())?;
    let chain_ranks: Vec<usize> = (0..=x.top()).map(|m| n_x.rank(-(m as i64))).collect();
    let mut maps = Vec::new();
    for n in 0..=x.top() {
        let labels = dn_labels(&chain_ranks, n);
        let mut cols = Vec::with_capacity(labels.len());
        for &(sigma, b) in &labels {
            let v = x.operator(sigma).mul(&bases[sigma.target()]).column(b);
            cols.push(v);
        }
        maps.push(IntMatrix::from_columns(x.rank(n), &cols));
    }
    Ok((dn, maps))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::binomial_usize;
    use alloc::vec;

    fn m(rows: usize, cols: usize, data: &[i64]) -> IntMatrix {
        IntMatrix::from_i64(rows, cols, data)
    }

    #[test]
    fn constant_module_normalizes_to_degree_zero() {
        let n = SimplicialModule::constant(2, 4).normalize();
        assert_eq!(n, Complex::concentrated(0, 2));
    }

    #[test]
    fn z_in_degree_one_has_rank_n() {
        let c = Complex::concentrated(-1, 1);
        let x = denormalize(&c, 5).unwrap();
        for n in 0..=5 {
            assert_eq!(x.rank(n), binomial_usize(n, 1));
        }
    }

    #[test]
    fn round_trip_on_two_term_complex() {
        let c = Complex::new(-2, vec![1, 2, 1], vec![m(2, 1, &[1, -1]), m(1, 2, &[1, 1])]).unwrap();
        let x = denormalize(&c, 4).unwrap();
        assert_eq!(x.normalize(), c);
        let (dn, phi) = dn_n_comparison(&x).unwrap();
        for n in 0..=4 {
            assert!(phi[n].is_unimodular());
            for i in 0..=n {
                if n > 0 {
                    assert_eq!(x.face(n, i).mul(&phi[n]), phi[n - 1].mul(dn.face(n, i)));
                }
            }
        }
    }

    #[test]
    fn cosimplicial_round_trip() {
        let e = Complex::new(0, vec![1, 2, 1], vec![m(2, 1, &[2, 0]), m(1, 2, &[0, 3])]).unwrap();
        let y = denormalize_v(&e, 4).unwrap();
        assert_eq!(y.normalize(), e);
        assert_eq!(y.rank(2), 1 + 2 * 2 + 1);
    }

    #[test]
    fn broken_identity_is_named() {
        let mut x = denormalize(&Complex::concentrated(-1, 1), 2).unwrap();
        x.faces[2][0] = x.faces[2][0].neg();
        let err = x.check_identities().unwrap_err();
        assert!(matches!(err, DkError::Identity(_)), "{err}");
    }
}
