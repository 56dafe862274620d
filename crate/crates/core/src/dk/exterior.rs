//! Exterior powers of matrices and of flags of free modules, with the product, coproduct and
//! exact-sequence structure maps between flag exteriors.
//!
//! A flag `V_1 ⊂ ... ⊂ V_k` is the standard coordinate flag `Z^{d_1} ⊂ ... ⊂ Z^{d_k}`, given
//! by its nondecreasing dimensions. Its exterior power `Λ^k(V_1, ..., V_k)` is the image of
//! `V_1 ⊗ ... ⊗ V_k` in `Λ^k(V_k)`: it has basis `e_{i_1} ∧ ... ∧ e_{i_k}` with
//! `i_1 < ... < i_k` and `i_j < d_j` (0-based). Quotients of coordinate flags are again
//! coordinate flags, with dimensions reduced by the dimension of the subobject.

use alloc::collections::BTreeMap;
use alloc::string::String;
use alloc::vec::Vec;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use super::DkError;
use crate::exact::{smith_normal_form, subsets, IntMatrix};

/// Expand `v_1 ∧ ... ∧ v_k` for sparse vectors over an ordered basis: keys are strictly
/// increasing index tuples.
pub(crate) fn wedge<T: Ord + Clone>(factors: &[Vec<(T, BigInt)>]) -> BTreeMap<Vec<T>, BigInt> {
    let mut acc: BTreeMap<Vec<T>, BigInt> = BTreeMap::new();
    acc.insert(Vec::new(), BigInt::one());
    for f in factors {
        let mut next: BTreeMap<Vec<T>, BigInt> = BTreeMap::new();
        for (tuple, c) in &acc {
            for (t, x) in f {
                let Err(pos) = tuple.binary_search(t) else { continue };
                let mut key = tuple.clone();
                key.insert(pos, t.clone());
                let mut coeff = c * x;
                if (tuple.len() - pos) % 2 == 1 {
                    coeff = -coeff;
                }
                *next.entry(key).or_insert_with(BigInt::zero) += coeff;
            }
        }
        next.retain(|_, c| !c.is_zero());
        acc = next;
    }
    acc
}

/// `Λ^k(A)` in the lexicographic bases of `k`-subsets: entry `(I, J)` is the minor of `A` on
/// rows `I` and columns `J`.
pub fn exterior_power_matrix(a: &IntMatrix, k: usize) -> IntMatrix {
    let rows = subsets(a.rows(), k);
    let cols = subsets(a.cols(), k);
    let row_index: BTreeMap<Vec<usize>, usize> = rows.iter().cloned().enumerate().map(|(i, s)| (s, i)).collect();
    let columns: Vec<Vec<(usize, BigInt)>> = (0..a.cols())
        .map(|j| (0..a.rows()).filter(|&i| !a.get(i, j).is_zero()).map(|i| (i, a.get(i, j).clone())).collect())
        .collect();
    let mut m = IntMatrix::zeros(rows.len(), cols.len());
    for (c, subset) in cols.iter().enumerate() {
        let factors: Vec<Vec<(usize, BigInt)>> = subset.iter().map(|&j| columns[j].clone()).collect();
        for (key, x) in wedge(&factors) {
            m.set(row_index[&key], c, x);
        }
    }
    m
}

/// Sort distinct entries, returning the sorted tuple and the permutation sign; `None` when two
/// entries coincide.
pub fn straighten(entries: &[usize]) -> Option<(Vec<usize>, i64)> {
    let mut v = entries.to_vec();
    let mut sign = 1;
    for i in 1..v.len() {
        let mut j = i;
        while j > 0 && v[j - 1] > v[j] {
            v.swap(j - 1, j);
            sign = -sign;
            j -= 1;
        }
    }
    if v.windows(2).any(|w| w[0] == w[1]) {
        return None;
    }
    Some((v, sign))
}

/// The exterior power of a coordinate flag.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FlagExterior {
    dims: Vec<usize>,
    basis: Vec<Vec<usize>>,
    index: BTreeMap<Vec<usize>, usize>,
}

fn admissible(dims: &[usize]) -> Vec<Vec<usize>> {
    fn rec(dims: &[usize], start: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        let j = cur.len();
        if j == dims.len() {
            out.push(cur.clone());
            return;
        }
        for i in start..dims[j] {
            cur.push(i);
            rec(dims, i + 1, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(dims, 0, &mut Vec::new(), &mut out);
    out
}

fn check_flag(dims: &[usize]) -> Result<(), DkError> {
    if dims.windows(2).any(|w| w[0] > w[1]) {
        return Err(DkError::Incomposable(alloc::format!("flag dimensions {:?} must be nondecreasing", dims)));
    }
    Ok(())
}

impl FlagExterior {
    pub fn new(dims: &[usize]) -> Result<Self, DkError> {
        check_flag(dims)?;
        let basis = admissible(dims);
        let index = basis.iter().cloned().enumerate().map(|(i, t)| (t, i)).collect();
        Ok(FlagExterior { dims: dims.to_vec(), basis, index })
    }

    pub fn dims(&self) -> &[usize] {
        &self.dims
    }

    pub fn degree(&self) -> usize {
        self.dims.len()
    }

    pub fn rank(&self) -> usize {
        self.basis.len()
    }

    pub fn basis(&self) -> &[Vec<usize>] {
        &self.basis
    }

    pub fn index_of(&self, tuple: &[usize]) -> Option<usize> {
        self.index.get(tuple).copied()
    }

    /// Basis element `e_{i_1} ∧ ...` written with 1-based indices.
    pub fn basis_text(&self, i: usize) -> String {
        if self.basis[i].is_empty() {
            return "1".into();
        }
        let parts: Vec<String> = self.basis[i].iter().map(|x| alloc::format!("e{}", x + 1)).collect();
        parts.join("^")
    }

    /// The quotient map `V_1 ⊗ ... ⊗ V_k -> Λ^k(V_1, ..., V_k)`, tensor basis in Kronecker
    /// order (first factor most significant).
    pub fn quotient_map(&self) -> IntMatrix {
        let total: usize = self.dims.iter().product();
        let mut m = IntMatrix::zeros(self.rank(), total);
        for col in 0..total {
            let mut rest = col;
            let mut entries = alloc::vec![0usize; self.dims.len()];
            for j in (0..self.dims.len()).rev() {
                entries[j] = rest % self.dims[j];
                rest /= self.dims[j];
            }
            if let Some((sorted, sign)) = straighten(&entries) {
                let row = self.index_of(&sorted).expect("straightened tensors are admissible");
                m.set(row, col, BigInt::from(sign));
            }
        }
        m
    }
}

pub fn flag_exterior(dims: &[usize]) -> Result<FlagExterior, DkError> {
    FlagExterior::new(dims)
}

fn top(dims: &[usize]) -> usize {
    dims.last().copied().unwrap_or(0)
}

fn concat(a: &[usize], b: &[usize]) -> Vec<usize> {
    a.iter().chain(b).copied().collect()
}

fn minus(dims: &[usize], cut: usize) -> Vec<usize> {
    dims.iter().map(|d| d - cut).collect()
}

/// (E1) `Λ(V) ⊗ Λ(W) -> Λ(V, W)`: concatenate and straighten.
pub fn e1_product(v: &[usize], w: &[usize]) -> Result<IntMatrix, DkError> {
    let (lv, lw, lvw) = (FlagExterior::new(v)?, FlagExterior::new(w)?, FlagExterior::new(&concat(v, w))?);
    let mut m = IntMatrix::zeros(lvw.rank(), lv.rank() * lw.rank());
    for (a, s) in lv.basis().iter().enumerate() {
        for (b, t) in lw.basis().iter().enumerate() {
            if let Some((sorted, sign)) = straighten(&concat(s, t)) {
                let row = lvw.index_of(&sorted).expect("products of admissible tuples are admissible");
                m.set(row, a * lw.rank() + b, BigInt::from(sign));
            }
        }
    }
    Ok(m)
}

/// (E2) `Λ(V, W) -> Λ(V) ⊗ Λ(W / V_k)`: the coproduct component whose second factor survives
/// the quotient, which forces the split after the first `k` entries.
pub fn e2_coproduct(v: &[usize], w: &[usize]) -> Result<IntMatrix, DkError> {
    let cut = top(v);
    let (lvw, lv, lq) = (FlagExterior::new(&concat(v, w))?, FlagExterior::new(v)?, FlagExterior::new(&minus(w, cut))?);
    let k = v.len();
    let mut m = IntMatrix::zeros(lv.rank() * lq.rank(), lvw.rank());
    for (col, t) in lvw.basis().iter().enumerate() {
        if t[k..].iter().any(|&x| x < cut) {
            continue;
        }
        let a = lv.index_of(&t[..k]).expect("initial segment is admissible");
        let shifted: Vec<usize> = t[k..].iter().map(|x| x - cut).collect();
        let b = lq.index_of(&shifted).expect("quotient tuple is admissible");
        m.set(a * lq.rank() + b, col, BigInt::one());
    }
    Ok(m)
}

/// `Λ(U) -> Λ(U / Z^cut)`, functorial in the quotient map.
pub fn quotient_projection(u: &[usize], cut: usize) -> Result<IntMatrix, DkError> {
    if u.first().is_some_and(|&d| d < cut) {
        return Err(DkError::Incomposable(alloc::format!("cannot divide the flag {:?} by Z^{}", u, cut)));
    }
    let (lu, lq) = (FlagExterior::new(u)?, FlagExterior::new(&minus(u, cut))?);
    let mut m = IntMatrix::zeros(lq.rank(), lu.rank());
    for (col, t) in lu.basis().iter().enumerate() {
        if t.iter().all(|&x| x >= cut) {
            let shifted: Vec<usize> = t.iter().map(|x| x - cut).collect();
            m.set(lq.index_of(&shifted).expect("quotient tuple is admissible"), col, BigInt::one());
        }
    }
    Ok(m)
}

fn identity(dims: &[usize]) -> Result<IntMatrix, DkError> {
    Ok(IntMatrix::identity(FlagExterior::new(dims)?.rank()))
}

fn check_concat(parts: &[&[usize]]) -> Result<(), DkError> {
    let all: Vec<usize> = parts.iter().flat_map(|p| p.iter().copied()).collect();
    check_flag(&all)
}

/// `E1(VW, U) ∘ (E1(V, W) ⊗ 1) = E1(V, WU) ∘ (1 ⊗ E1(W, U))`.
pub fn check_e1_associative(v: &[usize], w: &[usize], u: &[usize]) -> Result<bool, DkError> {
    check_concat(&[v, w, u])?;
    let left = e1_product(&concat(v, w), u)?.mul(&e1_product(v, w)?.kronecker(&identity(u)?));
    let right = e1_product(v, &concat(w, u))?.mul(&identity(v)?.kronecker(&e1_product(w, u)?));
    Ok(left == right)
}

/// `(1 ⊗ E2(W/V, U/V)) ∘ E2(V, WU) = (E2(V, W) ⊗ 1) ∘ E2(VW, U)`.
pub fn check_e2_associative(v: &[usize], w: &[usize], u: &[usize]) -> Result<bool, DkError> {
    check_concat(&[v, w, u])?;
    let (cv, cw) = (top(v), top(w).max(top(v)));
    let left =
        identity(v)?.kronecker(&e2_coproduct(&minus(w, cv), &minus(u, cv))?).mul(&e2_coproduct(v, &concat(w, u))?);
    let right = e2_coproduct(v, w)?.kronecker(&identity(&minus(u, cw))?).mul(&e2_coproduct(&concat(v, w), u)?);
    Ok(left == right)
}

/// (E3): `E2(V, WU) ∘ E1(VW, U) = (1 ⊗ E1(W/V, U/V)) ∘ (E2(V, W) ⊗ q)` with `q` the
/// projection `Λ(U) -> Λ(U/V_k)`.
pub fn check_e3(v: &[usize], w: &[usize], u: &[usize]) -> Result<bool, DkError> {
    check_concat(&[v, w, u])?;
    let cv = top(v);
    let top_right = e2_coproduct(v, &concat(w, u))?.mul(&e1_product(&concat(v, w), u)?);
    let left_bottom = identity(v)?
        .kronecker(&e1_product(&minus(w, cv), &minus(u, cv))?)
        .mul(&e2_coproduct(v, w)?.kronecker(&quotient_projection(u, cv)?));
    Ok(top_right == left_bottom)
}

/// (E4): `E2(VW, U) ∘ E1(V, WU) = (E1(V, W) ⊗ 1) ∘ (1 ⊗ E2(W, U))`.
pub fn check_e4(v: &[usize], w: &[usize], u: &[usize]) -> Result<bool, DkError> {
    check_concat(&[v, w, u])?;
    let cw = top(w).max(top(v));
    let top_right = e2_coproduct(&concat(v, w), u)?.mul(&e1_product(v, &concat(w, u))?);
    let left_bottom =
        e1_product(v, w)?.kronecker(&identity(&minus(u, cw))?).mul(&identity(v)?.kronecker(&e2_coproduct(w, u)?));
    Ok(top_right == left_bottom)
}

/// The two maps of (E5): `Λ(V, W_1, U) -> Λ(V, W_2, U) -> Λ(V) ⊗ Λ(W_2/W_1, U/W_1)`.
pub fn e5_sequence(v: &[usize], w1: usize, w2: usize, u: &[usize]) -> Result<(IntMatrix, IntMatrix), DkError> {
    let first_flag: Vec<usize> = v.iter().copied().chain([w1]).chain(u.iter().copied()).collect();
    let second_flag: Vec<usize> = v.iter().copied().chain([w2]).chain(u.iter().copied()).collect();
    check_flag(&first_flag)?;
    check_flag(&second_flag)?;
    let (l1, l2) = (FlagExterior::new(&first_flag)?, FlagExterior::new(&second_flag)?);
    let lv = FlagExterior::new(v)?;
    let tail: Vec<usize> = [w2].iter().chain(u).map(|d| d - w1).collect();
    let lq = FlagExterior::new(&tail)?;
    let mut inclusion = IntMatrix::zeros(l2.rank(), l1.rank());
    for (col, t) in l1.basis().iter().enumerate() {
        inclusion.set(l2.index_of(t).expect("a smaller flag has fewer admissible tuples"), col, BigInt::one());
    }
    let k = v.len();
    let mut projection = IntMatrix::zeros(lv.rank() * lq.rank(), l2.rank());
    for (col, t) in l2.basis().iter().enumerate() {
        if t[k..].iter().any(|&x| x < w1) {
            continue;
        }
        let a = lv.index_of(&t[..k]).expect("initial segment is admissible");
        let shifted: Vec<usize> = t[k..].iter().map(|x| x - w1).collect();
        projection.set(
            a * lq.rank() + lq.index_of(&shifted).expect("quotient tuple is admissible"),
            col,
            BigInt::one(),
        );
    }
    Ok((inclusion, projection))
}

/// True when `0 -> A --f--> B --g--> C -> 0` is a short exact sequence of free modules:
/// `g f = 0`, `f` is a split injection, `g` is a surjection, and the ranks add up.
pub fn is_short_exact(f: &IntMatrix, g: &IntMatrix) -> bool {
    if !g.mul(f).is_zero() {
        return false;
    }
    let sf = smith_normal_form(f).invariant_factors();
    let sg = smith_normal_form(g).invariant_factors();
    sf.len() == f.cols()
        && sf.iter().all(|x| x.is_one())
        && sg.len() == g.rows()
        && sg.iter().all(|x| x.is_one())
        && f.cols() + g.rows() == f.rows()
}

pub fn check_e5(v: &[usize], w1: usize, w2: usize, u: &[usize]) -> Result<bool, DkError> {
    let (f, g) = e5_sequence(v, w1, w2, u)?;
    Ok(is_short_exact(&f, &g))
}

/// Counts of verified instances, and descriptions of failures.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct EReport {
    pub checked: BTreeMap<&'static str, usize>,
    pub failures: Vec<String>,
}

impl EReport {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }

    fn record(&mut self, name: &'static str, ok: bool, what: impl FnOnce() -> String) {
        *self.checked.entry(name).or_insert(0) += 1;
        if !ok {
            self.failures.push(alloc::format!("{} fails for {}", name, what()));
        }
    }
}

/// All nondecreasing dimension sequences of the given length with entries `<= max_dim`.
pub fn flags(len: usize, max_dim: usize) -> Vec<Vec<usize>> {
    fn rec(len: usize, lo: usize, max: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == len {
            out.push(cur.clone());
            return;
        }
        for d in lo..=max {
            cur.push(d);
            rec(len, d, max, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(len, 0, max_dim, &mut Vec::new(), &mut out);
    out
}

/// Check associativity of (E1) and (E2), the (E3) and (E4) squares and (E5) exactness
/// (including the case with no `V`) on every flag of length `<= max_len` and top dimension
/// `<= max_dim`, over every way of splitting it into consecutive pieces.
pub fn verify_e_conditions(max_dim: usize, max_len: usize) -> Result<EReport, DkError> {
    let mut report = EReport::default();
    for len in 3..=max_len {
        for flag in flags(len, max_dim) {
            for i in 1..len {
                for j in i + 1..len {
                    let (v, w, u) = (&flag[..i], &flag[i..j], &flag[j..]);
                    let what = || alloc::format!("V={:?} W={:?} U={:?}", v, w, u);
                    report.record("E1 associativity", check_e1_associative(v, w, u)?, what);
                    report.record("E2 associativity", check_e2_associative(v, w, u)?, what);
                    report.record("E3", check_e3(v, w, u)?, what);
                    report.record("E4", check_e4(v, w, u)?, what);
                }
            }
        }
    }
    for len in 2..=max_len {
        for flag in flags(len, max_dim) {
            for k in 0..=len - 2 {
                let (v, w1, w2, u) = (&flag[..k], flag[k], flag[k + 1], &flag[k + 2..]);
                let name = if k == 0 { "E5 (no V)" } else { "E5" };
                report.record(name, check_e5(v, w1, w2, u)?, || {
                    alloc::format!("V={:?} W1={} W2={} U={:?}", v, w1, w2, u)
                });
            }
        }
    }
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::binomial_usize;

    #[test]
    fn constant_flag_is_ordinary_exterior_power() {
        for r in 0..6 {
            for k in 1..4 {
                let f = FlagExterior::new(&alloc::vec![r; k]).unwrap();
                assert_eq!(f.basis(), subsets(r, k).as_slice());
                assert_eq!(f.rank(), binomial_usize(r, k));
            }
        }
    }

    #[test]
    fn two_step_flag_ranks() {
        let f = FlagExterior::new(&[1, 3]).unwrap();
        assert_eq!(f.rank(), 2);
        assert_eq!(f.basis_text(0), "e1^e2");
        assert_eq!(f.basis_text(1), "e1^e3");
        for r1 in 0..5 {
            for r2 in r1..6 {
                let count = (0..r1).map(|i| (i + 1..r2).count()).sum::<usize>();
                assert_eq!(count, r1 * r2 - r1 * (r1 + 1) / 2);
                assert_eq!(FlagExterior::new(&[r1, r2]).unwrap().rank(), count);
            }
        }
    }

    #[test]
    fn quotient_map_is_surjective_straightening() {
        let f = FlagExterior::new(&[2, 3]).unwrap();
        let q = f.quotient_map();
        // e2 ⊗ e1 straightens to -e1^e2; e1 ⊗ e1 dies.
        assert_eq!(q.get(0, 3), &BigInt::from(-1));
        assert!(q.column(0).iter().all(Zero::is_zero));
        assert_eq!(smith_normal_form(&q).invariant_factors(), alloc::vec![BigInt::one(); f.rank()]);
    }

    #[test]
    fn e1_on_two_lines_is_straightening() {
        let m = e1_product(&[1], &[2]).unwrap();
        assert_eq!(m, FlagExterior::new(&[1, 2]).unwrap().quotient_map());
    }

    #[test]
    fn e5_with_nothing_around_is_the_flag_sequence() {
        let (f, g) = e5_sequence(&[], 2, 5, &[]).unwrap();
        assert_eq!((f.cols(), f.rows(), g.rows()), (2, 5, 3));
        assert!(is_short_exact(&f, &g));
    }

    #[test]
    fn e3_square_on_dims_one_two_three() {
        assert!(check_e3(&[1], &[2], &[3]).unwrap());
        assert!(check_e4(&[1], &[2], &[3]).unwrap());
    }

    #[test]
    fn incomposable_flag_is_rejected() {
        assert!(matches!(FlagExterior::new(&[3, 1]), Err(DkError::Incomposable(_))));
    }

    #[test]
    fn exterior_power_is_functorial() {
        let a = IntMatrix::from_i64(3, 3, &[1, 2, 0, -1, 1, 3, 2, 0, 1]);
        let b = IntMatrix::from_i64(3, 2, &[1, 0, 2, 1, -1, 4]);
        for k in 0..4 {
            assert_eq!(
                exterior_power_matrix(&a.mul(&b), k),
                exterior_power_matrix(&a, k).mul(&exterior_power_matrix(&b, k))
            );
        }
        assert_eq!(exterior_power_matrix(&a, 3).get(0, 0), &a.det());
    }
}
