//! The derived exterior power `Λ^k(K) = Tot N Λ^k(i(K))` and its additivity on split flags.
//!
//! Rather than forming `Λ^k` of every level of `i(K)` densely, the normalized double complex
//! is built directly on wedges of labels. A wedge of `k` labels is horizontally degenerate
//! exactly when some gap `j < p` is a step of none of the horizontal surjections, and spans
//! the vertical normalized part exactly when every gap `j < q` is a step of some vertical
//! surjection. So the normalized entry at `(p, q)` has as basis the `k`-sets of labels whose
//! horizontal steps cover `0..p` and vertical steps cover `0..q` (horizontal quotient model,
//! vertical kernel model), and both differentials are alternating sums of wedged structure
//! maps restricted to this basis.

use alloc::collections::BTreeMap;
use alloc::vec::Vec;

use num_bigint::BigInt;
use num_traits::Zero;

use super::complex::{ChainMap, Complex};
use super::exterior::wedge;
use super::mixed::{DoubleComplex, Embedding, Label, Sparse};
use super::simplicial::coordinates;
use super::DkError;
use crate::exact::{binomial, integer_kernel, subsets, IntMatrix};

/// Level budget for [`derived_lambda_with`].
#[derive(Clone, Copy, Debug, PartialEq, Eq, Default)]
pub struct LevelBudget {
    /// Largest simplicial or cosimplicial level that may be visited; `None` means
    /// `k * amplitude + 1`.
    pub max_level: Option<usize>,
    /// Also build the first level past the bound and require its normalization to vanish.
    pub paranoid: bool,
}

type Wedge = Vec<Label>;

fn covers(w: &[Label], p: usize, q: usize) -> (bool, bool) {
    let h = (0..p).all(|j| w.iter().any(|l| l.h.steps_at(j)));
    let v = (0..q).all(|j| w.iter().any(|l| l.v.steps_at(j)));
    (h, v)
}

fn normalized_wedges(e: &Embedding<'_>, k: usize, p: usize, q: usize) -> Vec<Wedge> {
    let labels = e.labels(p, q);
    // A label steps at no more gaps than the amplitude allows, so most levels are empty.
    let max_h = labels.iter().map(|l| l.h.target()).max().unwrap_or(0);
    let max_v = labels.iter().map(|l| l.v.target()).max().unwrap_or(0);
    if k * max_h < p || k * max_v < q || labels.len() < k {
        return Vec::new();
    }
    subsets(labels.len(), k)
        .into_iter()
        .map(|s| s.into_iter().map(|i| labels[i]).collect::<Wedge>())
        .filter(|w| covers(w, p, q) == (true, true))
        .collect()
}

fn alternating_wedge(w: &[Label], faces: usize, map: impl Fn(&Label, usize) -> Sparse) -> BTreeMap<Wedge, BigInt> {
    let mut total: BTreeMap<Wedge, BigInt> = BTreeMap::new();
    for i in 0..faces {
        let factors: Vec<Sparse> = w.iter().map(|l| map(l, i)).collect();
        for (key, c) in wedge(&factors) {
            let e = total.entry(key).or_insert_with(BigInt::zero);
            if i % 2 == 0 {
                *e += c;
            } else {
                *e -= c;
            }
        }
    }
    total.retain(|_, c| !c.is_zero());
    total
}

/// `Λ^k` of a complex of free modules, derived through the embedding `i`, with the default
/// level budget.
pub fn derived_lambda(k: usize, complex: &Complex) -> Result<Complex, DkError> {
    derived_lambda_with(k, complex, LevelBudget::default())
}

pub fn derived_lambda_with(k: usize, complex: &Complex, budget: LevelBudget) -> Result<Complex, DkError> {
    let (h_amp, v_amp) = complex.amplitudes();
    // Λ^k has degree k, so normalization vanishes past k times the amplitude.
    let (tp, tq) = (k * h_amp, k * v_amp);
    let cap = budget.max_level.unwrap_or(k * h_amp.max(v_amp) + 1);
    if tp.max(tq) > cap {
        return Err(DkError::Budget { required: tp.max(tq), budget: cap });
    }
    let e = Embedding::new(complex);
    if budget.paranoid {
        for (p, q) in [(tp + 1, 0), (0, tq + 1)] {
            if !normalized_wedges(&e, k, p, q).is_empty() {
                return Err(DkError::Truncation(alloc::format!(
                    "normalization of Λ^{} does not vanish at ({}, {})",
                    k,
                    p,
                    q
                )));
            }
        }
    }
    let basis: Vec<Vec<Vec<Wedge>>> =
        (0..=tp).map(|p| (0..=tq).map(|q| normalized_wedges(&e, k, p, q)).collect()).collect();
    let index: Vec<Vec<BTreeMap<Wedge, usize>>> = basis
        .iter()
        .map(|col| col.iter().map(|ws| ws.iter().cloned().enumerate().map(|(i, w)| (w, i)).collect()).collect())
        .collect();
    let ranks: Vec<Vec<usize>> = basis.iter().map(|c| c.iter().map(Vec::len).collect()).collect();
    let mut horizontal = Vec::new();
    let mut vertical = Vec::new();
    for p in 0..=tp {
        let mut hcol = Vec::new();
        let mut vcol = Vec::new();
        for q in 0..=tq {
            let source = &basis[p][q];
            if p > 0 {
                let mut d = IntMatrix::zeros(ranks[p - 1][q], source.len());
                for (col, w) in source.iter().enumerate() {
                    for (key, c) in alternating_wedge(w, p + 1, |l, i| e.h_face(l, i)) {
                        // Wedges outside the basis are degenerate, hence zero in the quotient.
                        if let Some(&row) = index[p - 1][q].get(&key) {
                            d.add_to(row, col, &c);
                        }
                    }
                }
                hcol.push(d);
            } else {
                hcol.push(IntMatrix::zeros(0, source.len()));
            }
            if q < tq {
                let mut d = IntMatrix::zeros(ranks[p][q + 1], source.len());
                for (col, w) in source.iter().enumerate() {
                    for (key, c) in alternating_wedge(w, q + 2, |l, i| e.v_coface(l, i)) {
                        // The coboundary preserves the vertical normalization, so terms off the
                        // basis must cancel.
                        let Some(&row) = index[p][q + 1].get(&key) else {
                            return Err(DkError::Invalid("coboundary left the normalized part".into()));
                        };
                        d.add_to(row, col, &c);
                    }
                }
                vcol.push(d);
            } else {
                vcol.push(IntMatrix::zeros(0, source.len()));
            }
        }
        horizontal.push(hcol);
        vertical.push(vcol);
    }
    DoubleComplex::new(ranks, horizontal, vertical)?.tot()
}

/// Euler characteristic of the derived `Λ^k`, from ranks alone.
pub fn derived_lambda_euler(k: usize, complex: &Complex) -> i64 {
    let (h_amp, v_amp) = complex.amplitudes();
    let e = Embedding::new(complex);
    let mut chi = 0i64;
    for p in 0..=k * h_amp {
        for q in 0..=k * v_amp {
            let n = normalized_wedges(&e, k, p, q).len() as i64;
            chi += if (q + p) % 2 == 0 { n } else { -n };
        }
    }
    chi
}

/// A subcomplex `K' ↣ K` with a degreewise retraction `r` (`r ∘ i = id`).
#[derive(Clone, Debug)]
pub struct SplitFlag {
    inclusion: ChainMap,
    retraction: Vec<IntMatrix>,
}

impl SplitFlag {
    /// `retraction[n]` is `K^n -> K'^n` for `n` in the degrees of `K`.
    pub fn new(inclusion: ChainMap, retraction: Vec<IntMatrix>) -> Result<Self, DkError> {
        let (sub, total) = (inclusion.source(), inclusion.target());
        if retraction.len() != total.ranks().len() {
            return Err(DkError::Shape("one retraction component per degree of the ambient complex".into()));
        }
        let lo = sub.lo().min(total.lo());
        let hi = sub.hi().max(total.hi());
        let flag = SplitFlag { inclusion, retraction };
        for n in lo..=hi {
            let r = flag.retraction(n);
            if r.rows() != flag.inclusion.source().rank(n) || r.cols() != flag.inclusion.target().rank(n) {
                return Err(DkError::Shape(alloc::format!("retraction in degree {} has the wrong shape", n)));
            }
            if r.mul(&flag.inclusion.component(n)) != IntMatrix::identity(flag.inclusion.source().rank(n)) {
                return Err(DkError::NotSplit(n));
            }
        }
        Ok(flag)
    }

    /// `K' ↣ K' ⊕ K''` with the standard inclusion and projection.
    pub fn direct_sum(sub: &Complex, quotient: &Complex) -> Result<Self, DkError> {
        let total = sub.direct_sum(quotient);
        let maps = sub
            .degrees()
            .map(|n| IntMatrix::identity(sub.rank(n)).vstack(&IntMatrix::zeros(quotient.rank(n), sub.rank(n))))
            .collect();
        let inclusion = ChainMap::new(sub.clone(), total.clone(), maps)?;
        let retraction = total
            .degrees()
            .map(|n| IntMatrix::identity(sub.rank(n)).hstack(&IntMatrix::zeros(sub.rank(n), quotient.rank(n))))
            .collect();
        SplitFlag::new(inclusion, retraction)
    }

    pub fn sub(&self) -> &Complex {
        self.inclusion.source()
    }

    pub fn total(&self) -> &Complex {
        self.inclusion.target()
    }

    pub fn retraction(&self, n: i64) -> IntMatrix {
        let total = self.inclusion.target();
        if total.rank(n) == 0 {
            return IntMatrix::zeros(self.inclusion.source().rank(n), 0);
        }
        self.retraction[(n - total.lo()) as usize].clone()
    }

    /// `K / K'`, realized on `ker r` with differential `(1 - i r) d`.
    pub fn quotient(&self) -> Complex {
        let total = self.total();
        if total.is_zero() {
            return Complex::zero();
        }
        let bases: Vec<IntMatrix> = total
            .degrees()
            .map(|n| IntMatrix::from_columns(total.rank(n), &kernel_or_all(&self.retraction(n), total.rank(n))))
            .collect();
        let basis = |n: i64| bases[(n - total.lo()) as usize].clone();
        let mut diffs = Vec::new();
        for n in total.lo()..total.hi() {
            let project = IntMatrix::identity(total.rank(n + 1))
                .sub(&self.inclusion.component(n + 1).mul(&self.retraction(n + 1)));
            let image = project.mul(&total.diff(n)).mul(&basis(n));
            diffs.push(coordinates(&basis(n + 1), &image).expect("projection lands in the complement"));
        }
        let ranks = bases.iter().map(IntMatrix::cols).collect();
        Complex::new(total.lo(), ranks, diffs).expect("quotient of a split flag")
    }
}

fn kernel_or_all(r: &IntMatrix, dim: usize) -> Vec<Vec<BigInt>> {
    if r.rows() == 0 {
        return (0..dim).map(|i| (0..dim).map(|j| BigInt::from(i64::from(i == j))).collect()).collect();
    }
    integer_kernel(r)
}

/// Both sides of `χ(Λ^m K) = Σ_{k=0}^m χ(Λ^k K') χ(Λ^{m-k} K/K')`, each computed from the
/// derived exterior powers.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Additivity {
    pub lhs: i64,
    pub rhs: i64,
    /// `χ(K)` so that callers can compare against `C(χ(K), m)`.
    pub euler: i64,
}

impl Additivity {
    pub fn holds(&self) -> bool {
        self.lhs == self.rhs
    }
}

pub fn additivity_check(flag: &SplitFlag, m: usize) -> Result<Additivity, DkError> {
    let quotient = flag.quotient();
    let lhs = derived_lambda(m, flag.total())?.euler_char();
    let mut rhs = 0i64;
    for k in 0..=m {
        rhs += derived_lambda(k, flag.sub())?.euler_char() * derived_lambda(m - k, &quotient)?.euler_char();
    }
    Ok(Additivity { lhs, rhs, euler: flag.total().euler_char() })
}

/// `C(x, k)` for a possibly negative integer `x`.
pub fn binomial_i64(x: i64, k: usize) -> i64 {
    let b = binomial(&BigInt::from(x), k);
    i64::try_from(b).expect("binomial fits in i64")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::dk::mixed::embed_i;
    use alloc::vec;

    fn m(rows: usize, cols: usize, data: &[i64]) -> IntMatrix {
        IntMatrix::from_i64(rows, cols, data)
    }

    #[test]
    fn degree_zero_gives_ordinary_exterior_power() {
        for r in 0..5 {
            for k in 0..4 {
                let out = derived_lambda(k, &Complex::concentrated(0, r)).unwrap();
                assert_eq!(out, Complex::concentrated(0, crate::exact::binomial_usize(r, k)));
            }
        }
    }

    #[test]
    fn lambda_one_is_identity() {
        let k = Complex::new(-1, vec![2, 2, 1], vec![m(2, 2, &[1, 0, 0, 2]), m(1, 2, &[0, 0])]).unwrap();
        assert_eq!(derived_lambda(1, &k).unwrap(), k);
    }

    #[test]
    fn shifted_line_gives_divided_and_symmetric_powers() {
        // Z in chain degree 1: Λ^2 is Z in chain degree 2 (décalage), χ = C(-1, 2) = 1.
        let out = derived_lambda(2, &Complex::concentrated(-1, 1)).unwrap();
        assert_eq!(out.homology_report(Default::default()), "H^-2 = Z^1\n");
        let out = derived_lambda(2, &Complex::concentrated(1, 1)).unwrap();
        assert_eq!(out.euler_char(), 1);
        assert_eq!(out.homology().iter().filter(|h| !h.is_zero()).count(), 1);
    }

    #[test]
    fn acyclic_input_gives_acyclic_output() {
        for lo in [-1, 0] {
            let k = Complex::two_term(lo, m(1, 1, &[1])).unwrap();
            for power in 1..=3 {
                let out = derived_lambda(power, &k).unwrap();
                assert!(out.is_acyclic(), "Λ^{power} of an acyclic complex starting at {lo}");
            }
        }
    }

    #[test]
    fn euler_characteristic_is_binomial() {
        let k = Complex::new(-1, vec![1, 3, 1], vec![m(3, 1, &[1, 0, 0]), m(1, 3, &[0, 1, 0])]).unwrap();
        for power in 0..=3 {
            let out = derived_lambda(power, &k).unwrap();
            assert_eq!(out.euler_char(), binomial_i64(k.euler_char(), power));
            assert_eq!(derived_lambda_euler(power, &k), out.euler_char());
        }
    }

    #[test]
    fn sparse_route_matches_dense_route() {
        let k = Complex::new(-1, vec![1, 2], vec![m(2, 1, &[1, -1])]).unwrap();
        let dense = embed_i(&k, 3, 1).unwrap().exterior_power(2).unwrap().tot_normalized().unwrap();
        let sparse = derived_lambda(2, &k).unwrap();
        assert_eq!(dense.ranks(), sparse.ranks());
        assert_eq!(dense.homology(), sparse.homology());
        let k = Complex::new(0, vec![2, 1], vec![m(1, 2, &[2, 0])]).unwrap();
        let dense = embed_i(&k, 1, 3).unwrap().exterior_power(2).unwrap().tot_normalized().unwrap();
        let sparse = derived_lambda(2, &k).unwrap();
        assert_eq!(dense.homology(), sparse.homology());
        assert_eq!(dense.euler_char(), sparse.euler_char());
    }

    #[test]
    fn quasi_isomorphic_inputs() {
        let base = Complex::two_term(-1, m(1, 1, &[2])).unwrap();
        let padded = base.direct_sum(&Complex::two_term(-1, m(1, 1, &[1])).unwrap());
        let a = derived_lambda(2, &base).unwrap();
        let b = derived_lambda(2, &padded).unwrap();
        assert_eq!(
            a.homology().into_iter().filter(|h| !h.is_zero()).collect::<Vec<_>>(),
            b.homology().into_iter().filter(|h| !h.is_zero()).collect::<Vec<_>>()
        );
    }

    #[test]
    fn budget_is_enforced() {
        let k = Complex::concentrated(-2, 1);
        let err = derived_lambda_with(3, &k, LevelBudget { max_level: Some(4), paranoid: false }).unwrap_err();
        assert_eq!(err, DkError::Budget { required: 6, budget: 4 });
        assert!(derived_lambda_with(2, &k, LevelBudget { max_level: None, paranoid: true }).is_ok());
    }

    #[test]
    fn vandermonde_additivity() {
        let flag = SplitFlag::direct_sum(&Complex::concentrated(0, 2), &Complex::concentrated(0, 3)).unwrap();
        let a = additivity_check(&flag, 2).unwrap();
        assert_eq!((a.lhs, a.rhs), (10, 10));
    }

    #[test]
    fn shifted_summand_additivity() {
        for r in 0..4 {
            let flag = SplitFlag::direct_sum(&Complex::concentrated(0, r), &Complex::concentrated(-1, 1)).unwrap();
            let a = additivity_check(&flag, 2).unwrap();
            assert!(a.holds());
            assert_eq!(a.lhs, binomial_i64(r as i64 - 1, 2));
        }
    }

    #[test]
    fn non_split_mono_is_rejected() {
        let sub = Complex::concentrated(0, 1);
        let total = Complex::concentrated(0, 1);
        let inclusion = ChainMap::new(sub, total, vec![m(1, 1, &[2])]).unwrap();
        assert_eq!(SplitFlag::new(inclusion, vec![m(1, 1, &[1])]).unwrap_err(), DkError::NotSplit(0));
    }
}
