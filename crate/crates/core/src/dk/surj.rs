//! Monotone surjections `[n] ->> [m]` and shuffles.

use alloc::vec;
use alloc::vec::Vec;

/// A monotone surjection out of `[n] = {0..n}`, stored as the set of gaps `j < n` where it
/// steps up (`s(j+1) = s(j) + 1`). The target is `[m]` with `m` the number of steps.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Surj {
    level: u8,
    steps: u32,
}

/// The factorization `s ∘ δ^i = ε ∘ η` of a face, classified by the coface `ε`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Face {
    /// `ε = id`.
    Same(Surj),
    /// `ε = δ^m`, the last coface of the target `[m]`.
    Last(Surj),
    /// Any other coface; the structure map vanishes on this summand.
    Zero,
}

impl Surj {
    pub fn identity(n: usize) -> Self {
        Surj { level: n as u8, steps: if n == 0 { 0 } else { (1u32 << n) - 1 } }
    }

    pub fn constant(n: usize) -> Self {
        Surj { level: n as u8, steps: 0 }
    }

    /// All surjections out of `[n]`, in increasing step-mask order.
    pub fn all(n: usize) -> Vec<Surj> {
        assert!(n < 31, "simplicial level too large");
        (0..1u32 << n).map(|steps| Surj { level: n as u8, steps }).collect()
    }

    /// All surjections `[n] ->> [m]`.
    pub fn onto(n: usize, m: usize) -> Vec<Surj> {
        Self::all(n).into_iter().filter(|s| s.target() == m).collect()
    }

    pub fn level(self) -> usize {
        self.level as usize
    }

    pub fn target(self) -> usize {
        self.steps.count_ones() as usize
    }

    pub fn is_identity(self) -> bool {
        self.target() == self.level()
    }

    /// True when the map steps up across gap `j`.
    pub fn steps_at(self, j: usize) -> bool {
        self.steps >> j & 1 == 1
    }

    pub fn values(self) -> Vec<usize> {
        let mut v = vec![0usize; self.level() + 1];
        for j in 0..self.level() {
            v[j + 1] = v[j] + usize::from(self.steps_at(j));
        }
        v
    }

    /// Inverse of [`Surj::values`]; `values` must start at 0 and climb by 0 or 1.
    pub fn from_values(values: &[usize]) -> Self {
        let mut steps = 0u32;
        for j in 0..values.len().saturating_sub(1) {
            debug_assert!(values[j + 1] == values[j] || values[j + 1] == values[j] + 1);
            if values[j + 1] > values[j] {
                steps |= 1 << j;
            }
        }
        Surj { level: (values.len() - 1) as u8, steps }
    }

    /// Factor `self ∘ δ^i` (requires `level >= 1`, `i <= level`).
    pub fn face(self, i: usize) -> Face {
        let n = self.level();
        assert!(n >= 1 && i <= n);
        let mut v = self.values();
        let x = v[i];
        let alone = (i == 0 || v[i - 1] != x) && (i == n || v[i + 1] != x);
        v.remove(i);
        if !alone {
            return Face::Same(Surj::from_values(&v));
        }
        if x == self.target() {
            Face::Last(Surj::from_values(&v))
        } else {
            Face::Zero
        }
    }

    /// `self ∘ σ^j`: repeat the value at position `j`.
    pub fn degeneracy(self, j: usize) -> Self {
        assert!(j <= self.level());
        let mut v = self.values();
        v.insert(j, v[j]);
        Surj::from_values(&v)
    }

    /// The `t` with `t ∘ σ^j = self`, if any.
    pub fn undegenerate(self, j: usize) -> Option<Self> {
        if j >= self.level() || self.steps_at(j) {
            return None;
        }
        let mut v = self.values();
        v.remove(j + 1);
        Some(Surj::from_values(&v))
    }

    /// Every `t` one level up whose face `t ∘ δ^i` is `Same(self)` or `Last(self)`; the
    /// flag is true for the `Last` case.
    pub fn face_preimages(self, i: usize) -> Vec<(Surj, bool)> {
        let n = self.level();
        assert!(i <= n + 1);
        let v = self.values();
        let mut candidates: Vec<usize> = Vec::new();
        if i >= 1 {
            candidates.push(v[i - 1]);
        }
        if i <= n && !candidates.contains(&v[i]) {
            candidates.push(v[i]);
        }
        let mut out = Vec::new();
        for c in candidates {
            let mut w = v.clone();
            w.insert(i, c);
            let t = Surj::from_values(&w);
            debug_assert_eq!(t.face(i), Face::Same(self));
            out.push((t, false));
        }
        if i == n + 1 {
            let mut w = v;
            w.push(self.target() + 1);
            out.push((Surj::from_values(&w), true));
        }
        out
    }
}

/// A `(p, q)`-shuffle: a partition of `{0..p+q}` into increasing `first` (size `p`) and
/// `second` (size `q`), with the sign of the permutation listing `first` then `second`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Shuffle {
    pub first: Vec<usize>,
    pub second: Vec<usize>,
    pub sign: i64,
}

pub fn shuffles(p: usize, q: usize) -> Vec<Shuffle> {
    let n = p + q;
    assert!(n < 31);
    let mut out = Vec::new();
    for mask in 0u32..1 << n {
        if mask.count_ones() as usize != p {
            continue;
        }
        let first: Vec<usize> = (0..n).filter(|&i| mask >> i & 1 == 1).collect();
        let second: Vec<usize> = (0..n).filter(|&i| mask >> i & 1 == 0).collect();
        let inversions: usize = first.iter().map(|&a| second.iter().filter(|&&b| b < a).count()).sum();
        out.push(Shuffle { first, second, sign: if inversions % 2 == 0 { 1 } else { -1 } });
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn counts_match_binomials() {
        for n in 0..6 {
            for m in 0..=n {
                assert_eq!(Surj::onto(n, m).len(), crate::exact::binomial_usize(n, m));
            }
        }
        assert_eq!(shuffles(2, 3).len(), 10);
    }

    #[test]
    fn identity_faces() {
        let id = Surj::identity(3);
        assert_eq!(id.face(3), Face::Last(Surj::identity(2)));
        assert_eq!(id.face(1), Face::Zero);
        let c = Surj::constant(3);
        assert_eq!(c.face(0), Face::Same(Surj::constant(2)));
    }

    #[test]
    fn face_preimages_invert_faces() {
        for n in 1..5 {
            for t in Surj::all(n) {
                for i in 0..=n {
                    match t.face(i) {
                        Face::Same(s) => assert!(s.face_preimages(i).contains(&(t, false))),
                        Face::Last(s) => assert!(s.face_preimages(i).contains(&(t, true))),
                        Face::Zero => {}
                    }
                }
            }
        }
    }

    #[test]
    fn degeneracy_round_trip() {
        for n in 0..5 {
            for s in Surj::all(n) {
                for j in 0..=n {
                    assert_eq!(s.degeneracy(j).undegenerate(j), Some(s));
                }
            }
        }
    }
}
