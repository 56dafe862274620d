//! Bounded complexes of finitely generated free abelian groups.
//!
//! Storage is cohomological: `d^n : K^n -> K^{n+1}`. A chain complex `C` is the same data
//! read through `C_n = K^{-n}`, so `d_n : C_n -> C_{n-1}` is literally the matrix `d^{-n}`.
//! Complexes are kept trimmed: the first and last stored degrees have nonzero rank.

use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use super::DkError;
use crate::exact::{smith_normal_form, IntMatrix};

/// How degrees of a complex are read in files and reports.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Default)]
pub enum Orientation {
    /// Differential raises degree.
    #[default]
    Cochain,
    /// Differential lowers degree; chain degree `n` is cochain degree `-n`.
    Chain,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Complex {
    lo: i64,
    ranks: Vec<usize>,
    diffs: Vec<IntMatrix>,
}

impl Complex {
    /// `ranks[i]` is the rank in degree `lo + i`; `diffs[i]` maps degree `lo + i` to `lo + i + 1`.
    pub fn new(lo: i64, ranks: Vec<usize>, diffs: Vec<IntMatrix>) -> Result<Self, DkError> {
        if diffs.len() != ranks.len().saturating_sub(1) {
            return Err(DkError::Shape(alloc::format!(
                "{} degrees need {} differentials, got {}",
                ranks.len(),
                ranks.len().saturating_sub(1),
                diffs.len()
            )));
        }
        for (i, d) in diffs.iter().enumerate() {
            if d.rows() != ranks[i + 1] || d.cols() != ranks[i] {
                return Err(DkError::Shape(alloc::format!(
                    "d^{} must be {}x{}, got {}x{}",
                    lo + i as i64,
                    ranks[i + 1],
                    ranks[i],
                    d.rows(),
                    d.cols()
                )));
            }
        }
        for i in 1..diffs.len() {
            if !diffs[i].mul(&diffs[i - 1]).is_zero() {
                return Err(DkError::NotComplex(lo + i as i64 - 1));
            }
        }
        let mut c = Complex { lo, ranks, diffs };
        c.trim();
        Ok(c)
    }

    /// From chain data: `ranks[n]` is the rank of `C_n` for `n >= 0`, `diffs[n-1] : C_n -> C_{n-1}`.
    pub fn from_chain(ranks: Vec<usize>, mut diffs: Vec<IntMatrix>) -> Result<Self, DkError> {
        let mut ranks = ranks;
        ranks.reverse();
        diffs.reverse();
        let lo = -(ranks.len() as i64 - 1);
        Self::new(lo.min(0), ranks, diffs)
    }

    pub fn zero() -> Self {
        Complex { lo: 0, ranks: Vec::new(), diffs: Vec::new() }
    }

    /// `Z^rank` in a single degree.
    pub fn concentrated(degree: i64, rank: usize) -> Self {
        let mut c = Complex { lo: degree, ranks: vec![rank], diffs: Vec::new() };
        c.trim();
        c
    }

    /// The two-term complex `Z^cols --m--> Z^rows` in degrees `degree, degree + 1`.
    pub fn two_term(degree: i64, m: IntMatrix) -> Result<Self, DkError> {
        Self::new(degree, vec![m.cols(), m.rows()], vec![m])
    }

    fn trim(&mut self) {
        while self.ranks.last() == Some(&0) {
            self.ranks.pop();
            self.diffs.pop();
        }
        while self.ranks.first() == Some(&0) {
            self.ranks.remove(0);
            if !self.diffs.is_empty() {
                self.diffs.remove(0);
            }
            self.lo += 1;
        }
        if self.ranks.is_empty() {
            self.lo = 0;
        }
    }

    pub fn is_zero(&self) -> bool {
        self.ranks.is_empty()
    }

    /// Lowest degree with nonzero rank (0 for the zero complex).
    pub fn lo(&self) -> i64 {
        self.lo
    }

    /// Highest degree with nonzero rank (-1 for the zero complex).
    pub fn hi(&self) -> i64 {
        self.lo + self.ranks.len() as i64 - 1
    }

    pub fn degrees(&self) -> impl Iterator<Item = i64> {
        self.lo..=self.hi()
    }

    pub fn rank(&self, n: i64) -> usize {
        if n < self.lo || n > self.hi() {
            0
        } else {
            self.ranks[(n - self.lo) as usize]
        }
    }

    pub fn ranks(&self) -> &[usize] {
        &self.ranks
    }

    /// `d^n : K^n -> K^{n+1}`, zero outside the stored range.
    pub fn diff(&self, n: i64) -> IntMatrix {
        if n >= self.lo && n < self.hi() {
            self.diffs[(n - self.lo) as usize].clone()
        } else {
            IntMatrix::zeros(self.rank(n + 1), self.rank(n))
        }
    }

    /// Larger of the distances from degree 0 to the ends: `max(0, -lo)` and `max(0, hi)`.
    pub fn amplitudes(&self) -> (usize, usize) {
        if self.is_zero() {
            return (0, 0);
        }
        ((-self.lo).max(0) as usize, self.hi().max(0) as usize)
    }

    pub fn euler_char(&self) -> i64 {
        self.degrees().map(|n| if n % 2 == 0 { self.rank(n) as i64 } else { -(self.rank(n) as i64) }).sum()
    }

    pub fn homology(&self) -> Vec<HomologyGroup> {
        let mut out = Vec::new();
        for n in self.degrees() {
            let outgoing = smith_normal_form(&self.diff(n)).rank();
            let incoming = smith_normal_form(&self.diff(n - 1)).invariant_factors();
            let free = self.rank(n) - outgoing - incoming.len();
            let torsion = incoming.into_iter().filter(|d| !d.is_one()).collect();
            out.push(HomologyGroup { degree: n, free, torsion });
        }
        out
    }

    pub fn is_acyclic(&self) -> bool {
        self.homology().iter().all(|h| h.is_zero())
    }

    /// One line per degree: `H^n = Z^r + Z/d + ...`.
    pub fn homology_report(&self, orientation: Orientation) -> String {
        let mut s = String::new();
        let mut groups = self.homology();
        if orientation == Orientation::Chain {
            groups.reverse();
        }
        for h in groups {
            match orientation {
                Orientation::Cochain => s.push_str(&alloc::format!("H^{} = {}\n", h.degree, h)),
                Orientation::Chain => s.push_str(&alloc::format!("H_{} = {}\n", -h.degree, h)),
            }
        }
        s
    }

    /// `K[s]^n = K^{n+s}` with differential `(-1)^s d`.
    pub fn shift(&self, s: i64) -> Self {
        let sign = if s % 2 == 0 { BigInt::one() } else { -BigInt::one() };
        Complex {
            lo: if self.is_zero() { 0 } else { self.lo - s },
            ranks: self.ranks.clone(),
            diffs: self.diffs.iter().map(|d| d.scale(&sign)).collect(),
        }
    }

    pub fn direct_sum(&self, other: &Complex) -> Complex {
        if self.is_zero() {
            return other.clone();
        }
        if other.is_zero() {
            return self.clone();
        }
        let lo = self.lo.min(other.lo);
        let hi = self.hi().max(other.hi());
        let ranks = (lo..=hi).map(|n| self.rank(n) + other.rank(n)).collect();
        let diffs = (lo..hi).map(|n| self.diff(n).direct_sum(&other.diff(n))).collect();
        Complex::new(lo, ranks, diffs).expect("direct sum of complexes")
    }

    /// `(A ⊗ B)^n = ⊕_{a+b=n} A^a ⊗ B^b`, summands by increasing `a`, Kronecker bases,
    /// `d(x ⊗ y) = dx ⊗ y + (-1)^a x ⊗ dy`.
    pub fn tensor(&self, other: &Complex) -> Complex {
        if self.is_zero() || other.is_zero() {
            return Complex::zero();
        }
        let lo = self.lo + other.lo;
        let hi = self.hi() + other.hi();
        let layout = TensorLayout::new(self, other);
        let ranks: Vec<usize> = (lo..=hi).map(|n| layout.rank(n)).collect();
        let mut diffs = Vec::new();
        for n in lo..hi {
            let mut d = IntMatrix::zeros(layout.rank(n + 1), layout.rank(n));
            for a in self.degrees() {
                let b = n - a;
                if other.rank(b) == 0 || self.rank(a) == 0 {
                    continue;
                }
                let col = layout.offset(n, a);
                let left = self.diff(a).kronecker(&IntMatrix::identity(other.rank(b)));
                place(&mut d, layout.offset(n + 1, a + 1), col, &left);
                let mut right = IntMatrix::identity(self.rank(a)).kronecker(&other.diff(b));
                if a % 2 != 0 {
                    right = right.neg();
                }
                place(&mut d, layout.offset(n + 1, a), col, &right);
            }
            diffs.push(d);
        }
        Complex::new(lo, ranks, diffs).expect("tensor product of complexes")
    }
}

/// Offsets of the summands `A^a ⊗ B^{n-a}` inside `(A ⊗ B)^n`.
#[derive(Clone, Debug)]
pub struct TensorLayout {
    a: Complex,
    b: Complex,
}

impl TensorLayout {
    pub fn new(a: &Complex, b: &Complex) -> Self {
        TensorLayout { a: a.clone(), b: b.clone() }
    }

    pub fn rank(&self, n: i64) -> usize {
        self.a.degrees().map(|x| self.a.rank(x) * self.b.rank(n - x)).sum()
    }

    /// Start of the `A^a ⊗ B^{n-a}` block in degree `n`.
    pub fn offset(&self, n: i64, a: i64) -> usize {
        (self.a.lo()..a).map(|x| self.a.rank(x) * self.b.rank(n - x)).sum()
    }

    /// Position of `e_i ⊗ f_j` with `e_i ∈ A^a`, `f_j ∈ B^{n-a}`.
    pub fn index(&self, n: i64, a: i64, i: usize, j: usize) -> usize {
        self.offset(n, a) + i * self.b.rank(n - a) + j
    }
}

/// Add `block` into `m` with its top-left corner at `(row, col)`.
pub(crate) fn place(m: &mut IntMatrix, row: usize, col: usize, block: &IntMatrix) {
    for i in 0..block.rows() {
        for j in 0..block.cols() {
            let x = block.get(i, j);
            if !x.is_zero() {
                m.add_to(row + i, col + j, x);
            }
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HomologyGroup {
    pub degree: i64,
    pub free: usize,
    /// Invariant factors greater than 1.
    pub torsion: Vec<BigInt>,
}

impl HomologyGroup {
    pub fn is_zero(&self) -> bool {
        self.free == 0 && self.torsion.is_empty()
    }
}

impl fmt::Display for HomologyGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let mut parts: Vec<String> = Vec::new();
        if self.free > 0 {
            parts.push(alloc::format!("Z^{}", self.free));
        }
        for t in &self.torsion {
            parts.push(alloc::format!("Z/{}", t));
        }
        f.write_str(&parts.join(" + "))
    }
}

/// A degreewise map of complexes commuting with the differentials.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ChainMap {
    source: Complex,
    target: Complex,
    maps: Vec<IntMatrix>,
}

impl ChainMap {
    /// `maps[i]` is the component in degree `source.lo() + i`.
    pub fn new(source: Complex, target: Complex, maps: Vec<IntMatrix>) -> Result<Self, DkError> {
        if maps.len() != source.ranks().len() {
            return Err(DkError::Shape(alloc::format!(
                "chain map needs {} components, got {}",
                source.ranks().len(),
                maps.len()
            )));
        }
        let f = ChainMap { source, target, maps };
        for n in f.source.degrees() {
            let m = &f.maps[(n - f.source.lo()) as usize];
            if m.rows() != f.target.rank(n) || m.cols() != f.source.rank(n) {
                return Err(DkError::Shape(alloc::format!("chain map component in degree {} has the wrong shape", n)));
            }
        }
        let lo = f.source.lo().min(f.target.lo());
        let hi = f.source.hi().max(f.target.hi());
        for n in lo..=hi {
            if f.target.diff(n).mul(&f.component(n)) != f.component(n + 1).mul(&f.source.diff(n)) {
                return Err(DkError::NotChainMap(n));
            }
        }
        Ok(f)
    }

    pub fn identity(c: &Complex) -> Self {
        let maps = c.degrees().map(|n| IntMatrix::identity(c.rank(n))).collect();
        ChainMap { source: c.clone(), target: c.clone(), maps }
    }

    pub fn source(&self) -> &Complex {
        &self.source
    }

    pub fn target(&self) -> &Complex {
        &self.target
    }

    pub fn component(&self, n: i64) -> IntMatrix {
        if self.source.rank(n) == 0 {
            IntMatrix::zeros(self.target.rank(n), 0)
        } else {
            self.maps[(n - self.source.lo()) as usize].clone()
        }
    }

    pub fn compose(&self, first: &ChainMap) -> Result<ChainMap, DkError> {
        if first.target != self.source {
            return Err(DkError::Shape("composable chain maps must share the middle complex".into()));
        }
        let maps = first.source.degrees().map(|n| self.component(n).mul(&first.component(n))).collect();
        ChainMap::new(first.source.clone(), self.target.clone(), maps)
    }

    /// `Cone(f)^n = A^{n+1} ⊕ B^n` with `d(a, b) = (-d a, f a + d b)`.
    pub fn cone(&self) -> Complex {
        let (a, b) = (&self.source, &self.target);
        if a.is_zero() {
            return b.clone();
        }
        let lo = (a.lo() - 1).min(if b.is_zero() { a.lo() - 1 } else { b.lo() });
        let hi = (a.hi() - 1).max(b.hi());
        let ranks: Vec<usize> = (lo..=hi).map(|n| a.rank(n + 1) + b.rank(n)).collect();
        let mut diffs = Vec::new();
        for n in lo..hi {
            let mut d = IntMatrix::zeros(ranks[(n + 1 - lo) as usize], ranks[(n - lo) as usize]);
            place(&mut d, 0, 0, &a.diff(n + 1).neg());
            place(&mut d, a.rank(n + 2), 0, &self.component(n + 1));
            place(&mut d, a.rank(n + 2), a.rank(n + 1), &b.diff(n));
            diffs.push(d);
        }
        Complex::new(lo, ranks, diffs).expect("mapping cone")
    }
}

/// True when `f` induces isomorphisms on all homology groups.
///
/// Invariant factors are compared first; the decisive test is acyclicity of the mapping cone,
/// which over the integers is equivalent to `f` being a quasi-isomorphism of free complexes.
pub fn quasi_iso_check(f: &ChainMap) -> bool {
    if f.source.homology().into_iter().filter(|h| !h.is_zero()).map(|h| (h.degree, h.free, h.torsion)).ne(f
        .target
        .homology()
        .into_iter()
        .filter(|h| !h.is_zero())
        .map(|h| (h.degree, h.free, h.torsion)))
    {
        return false;
    }
    f.cone().is_acyclic()
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::string::ToString;

    fn m(rows: usize, cols: usize, data: &[i64]) -> IntMatrix {
        IntMatrix::from_i64(rows, cols, data)
    }

    #[test]
    fn multiplication_by_two() {
        let k = Complex::two_term(-1, m(1, 1, &[2])).unwrap();
        let h = k.homology();
        assert_eq!(h[0].to_string(), "0");
        assert_eq!(h[1].degree, 0);
        assert_eq!(h[1].to_string(), "Z/2");
        assert_eq!(k.euler_char(), 0);
    }

    #[test]
    fn euler_char_orientation() {
        let m23 = IntMatrix::zeros(3, 2);
        let cochain = Complex::two_term(0, m23.clone()).unwrap();
        assert_eq!(cochain.euler_char(), -1);
        let chain = Complex::from_chain(vec![3, 2], vec![m23]).unwrap();
        assert_eq!(chain.euler_char(), 1);
    }

    #[test]
    fn rejects_nonzero_square() {
        let d = m(1, 1, &[1]);
        assert_eq!(Complex::new(0, vec![1, 1, 1], vec![d.clone(), d]), Err(DkError::NotComplex(0)));
    }

    #[test]
    fn identity_is_quasi_iso_and_zero_is_not() {
        let k = Complex::two_term(0, m(2, 2, &[1, 0, 0, 3])).unwrap();
        assert!(quasi_iso_check(&ChainMap::identity(&k)));
        let zero = ChainMap::new(k.clone(), k.clone(), vec![IntMatrix::zeros(2, 2), IntMatrix::zeros(2, 2)]).unwrap();
        assert!(!quasi_iso_check(&zero));
    }

    #[test]
    fn multiplication_by_two_on_torsion_is_not_quasi_iso() {
        // Z/3 in degree 1: multiplication by 2 is an isomorphism, by 3 is zero.
        let k = Complex::two_term(0, m(1, 1, &[3])).unwrap();
        let two = |x: i64| ChainMap::new(k.clone(), k.clone(), vec![m(1, 1, &[x]), m(1, 1, &[x])]).unwrap();
        assert!(quasi_iso_check(&two(2)));
        assert!(!quasi_iso_check(&two(3)));
    }

    #[test]
    fn tensor_follows_kunneth() {
        let a = Complex::two_term(0, m(1, 1, &[2])).unwrap();
        let b = Complex::two_term(0, m(1, 1, &[3])).unwrap();
        let t = a.tensor(&b);
        assert!(t.is_acyclic());
        let c = Complex::two_term(0, m(1, 1, &[2])).unwrap();
        let h = a.tensor(&c).homology();
        let text: Vec<String> = h.iter().map(|g| g.to_string()).collect();
        assert_eq!(text, ["0", "Z/2", "Z/2"]);
    }

    #[test]
    fn cone_of_identity_is_acyclic() {
        let k = Complex::new(-1, vec![2, 3, 1], vec![m(3, 2, &[1, 0, 0, 1, 0, 0]), m(1, 3, &[0, 0, 5])]).unwrap();
        assert!(ChainMap::identity(&k).cone().is_acyclic());
        assert_eq!(k.shift(1).euler_char(), -k.euler_char());
    }
}
