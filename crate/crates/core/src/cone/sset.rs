//! Truncated finite simplicial sets given by explicit face and degeneracy tables.

use alloc::collections::BTreeMap;
use alloc::vec::Vec;

use super::ConeError;

/// A simplicial set through level `top`. Simplices at level `n` are `0..count(n)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FiniteSimplicialSet {
    counts: Vec<usize>,
    /// `faces[n][i][x] = d_i x` for `n >= 1`; `faces[0]` is empty.
    faces: Vec<Vec<Vec<usize>>>,
    /// `degens[n][j][x] = s_j x` for `n < top`.
    degens: Vec<Vec<Vec<usize>>>,
}

impl FiniteSimplicialSet {
    /// Validates table shapes and audits every simplicial identity through `top`.
    pub fn new(
        counts: Vec<usize>,
        faces: Vec<Vec<Vec<usize>>>,
        degens: Vec<Vec<Vec<usize>>>,
    ) -> Result<Self, ConeError> {
        let top =
            counts.len().checked_sub(1).ok_or_else(|| ConeError::Shape("a simplicial set needs level 0".into()))?;
        if faces.len() != top + 1 || degens.len() != top {
            return Err(ConeError::Shape("face or degeneracy tables do not match the truncation".into()));
        }
        for n in 0..=top {
            let expected = if n == 0 { 0 } else { n + 1 };
            if faces[n].len() != expected {
                return Err(ConeError::Shape(alloc::format!("level {} needs {} face maps", n, expected)));
            }
            for d in &faces[n] {
                if d.len() != counts[n] || d.iter().any(|&y| y >= counts[n - 1]) {
                    return Err(ConeError::Shape(alloc::format!("a face map out of level {} is malformed", n)));
                }
            }
            if n < top {
                if degens[n].len() != n + 1 {
                    return Err(ConeError::Shape(alloc::format!("level {} needs {} degeneracies", n, n + 1)));
                }
                for s in &degens[n] {
                    if s.len() != counts[n] || s.iter().any(|&y| y >= counts[n + 1]) {
                        return Err(ConeError::Shape(alloc::format!("a degeneracy out of level {} is malformed", n)));
                    }
                }
            }
        }
        let set = FiniteSimplicialSet { counts, faces, degens };
        set.audit()?;
        Ok(set)
    }

    /// The constant simplicial set on `count` points.
    pub fn constant(count: usize, top: usize) -> Self {
        let id: Vec<usize> = (0..count).collect();
        FiniteSimplicialSet {
            counts: alloc::vec![count; top + 1],
            faces: (0..=top).map(|n| if n == 0 { Vec::new() } else { alloc::vec![id.clone(); n + 1] }).collect(),
            degens: (0..top).map(|n| alloc::vec![id.clone(); n + 1]).collect(),
        }
    }

    /// `Δ[1]`: level `n` is the monotone 0/1 strings of length `n + 1`, indexed by the
    /// number of leading zeros.
    pub fn interval(top: usize) -> Self {
        let counts = (0..=top).map(|n| n + 2).collect();
        let faces = (0..=top)
            .map(|n| {
                if n == 0 {
                    Vec::new()
                } else {
                    (0..=n).map(|i| (0..n + 2).map(|a| if i < a { a - 1 } else { a }).collect()).collect()
                }
            })
            .collect();
        let degens = (0..top)
            .map(|n| (0..=n).map(|j| (0..n + 2).map(|a| if j < a { a + 1 } else { a }).collect()).collect())
            .collect();
        FiniteSimplicialSet { counts, faces, degens }
    }

    pub fn top(&self) -> usize {
        self.counts.len() - 1
    }

    pub fn count(&self, n: usize) -> usize {
        self.counts[n]
    }

    pub fn counts(&self) -> &[usize] {
        &self.counts
    }

    /// `d_i` out of level `n`.
    pub fn face(&self, n: usize, i: usize) -> &[usize] {
        &self.faces[n][i]
    }

    /// `s_j` out of level `n`.
    pub fn degeneracy(&self, n: usize, j: usize) -> &[usize] {
        &self.degens[n][j]
    }

    pub fn disjoint_union(&self, other: &Self) -> Result<Self, ConeError> {
        if self.top() != other.top() {
            return Err(ConeError::Shape("disjoint union needs equal truncations".into()));
        }
        let join = |a: &[usize], b: &[usize], shift: usize| {
            a.iter().copied().chain(b.iter().map(|y| y + shift)).collect::<Vec<_>>()
        };
        let counts = self.counts.iter().zip(&other.counts).map(|(a, b)| a + b).collect();
        let faces = (0..=self.top())
            .map(|n| {
                (0..self.faces[n].len())
                    .map(|i| join(&self.faces[n][i], &other.faces[n][i], self.counts[n - 1]))
                    .collect()
            })
            .collect();
        let degens = (0..self.top())
            .map(|n| (0..=n).map(|j| join(&self.degens[n][j], &other.degens[n][j], self.counts[n + 1])).collect())
            .collect();
        Ok(FiniteSimplicialSet { counts, faces, degens })
    }

    /// Checks `d_i d_j = d_{j-1} d_i` (i < j), the three `d_i s_j` rules and
    /// `s_i s_j = s_{j+1} s_i` (i <= j) on every simplex.
    pub fn audit(&self) -> Result<(), ConeError> {
        let top = self.top();
        let fail = |what: &str, n: usize, i: usize, j: usize, x: usize| {
            Err(ConeError::Identity(alloc::format!(
                "{} fails at level {} for (i, j) = ({}, {}) on simplex {}",
                what,
                n,
                i,
                j,
                x
            )))
        };
        for n in 2..=top {
            for j in 1..=n {
                for i in 0..j {
                    for x in 0..self.counts[n] {
                        if self.faces[n - 1][i][self.faces[n][j][x]] != self.faces[n - 1][j - 1][self.faces[n][i][x]] {
                            return fail("d_i d_j = d_{j-1} d_i", n, i, j, x);
                        }
                    }
                }
            }
        }
        for n in 0..top {
            for j in 0..=n {
                for i in 0..=n + 1 {
                    for x in 0..self.counts[n] {
                        let lhs = self.faces[n + 1][i][self.degens[n][j][x]];
                        let rhs = if i == j || i == j + 1 {
                            x
                        } else if i < j {
                            self.degens[n - 1][j - 1][self.faces[n][i][x]]
                        } else {
                            self.degens[n - 1][j][self.faces[n][i - 1][x]]
                        };
                        if lhs != rhs {
                            return fail("d_i s_j", n, i, j, x);
                        }
                    }
                }
            }
        }
        for n in 0..top.saturating_sub(1) {
            for j in 0..=n {
                for i in 0..=j {
                    for x in 0..self.counts[n] {
                        if self.degens[n + 1][i][self.degens[n][j][x]]
                            != self.degens[n + 1][j + 1][self.degens[n][i][x]]
                        {
                            return fail("s_i s_j = s_{j+1} s_i", n, i, j, x);
                        }
                    }
                }
            }
        }
        Ok(())
    }
}

/// A levelwise map of finite simplicial sets commuting with all structure maps.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SimplicialMap {
    source: FiniteSimplicialSet,
    target: FiniteSimplicialSet,
    maps: Vec<Vec<usize>>,
}

impl SimplicialMap {
    pub fn new(
        source: FiniteSimplicialSet,
        target: FiniteSimplicialSet,
        maps: Vec<Vec<usize>>,
    ) -> Result<Self, ConeError> {
        if source.top() != target.top() || maps.len() != source.top() + 1 {
            return Err(ConeError::Shape("a simplicial map needs one table per level of a common truncation".into()));
        }
        for (n, m) in maps.iter().enumerate() {
            if m.len() != source.count(n) || m.iter().any(|&y| y >= target.count(n)) {
                return Err(ConeError::Shape(alloc::format!("the level {} table is malformed", n)));
            }
        }
        for n in 0..=source.top() {
            for x in 0..source.count(n) {
                for i in 0..source.faces[n].len() {
                    if maps[n - 1][source.face(n, i)[x]] != target.face(n, i)[maps[n][x]] {
                        return Err(ConeError::NotSimplicialMap(alloc::format!(
                            "d_{} at level {} on simplex {}",
                            i,
                            n,
                            x
                        )));
                    }
                }
                if n < source.top() {
                    for j in 0..=n {
                        if maps[n + 1][source.degeneracy(n, j)[x]] != target.degeneracy(n, j)[maps[n][x]] {
                            return Err(ConeError::NotSimplicialMap(alloc::format!(
                                "s_{} at level {} on simplex {}",
                                j,
                                n,
                                x
                            )));
                        }
                    }
                }
            }
        }
        Ok(SimplicialMap { source, target, maps })
    }

    pub fn identity(x: &FiniteSimplicialSet) -> Self {
        let maps = x.counts.iter().map(|&c| (0..c).collect()).collect();
        SimplicialMap { source: x.clone(), target: x.clone(), maps }
    }

    /// The empty simplicial set into `x`.
    pub fn from_empty(x: &FiniteSimplicialSet) -> Self {
        let empty = FiniteSimplicialSet::constant(0, x.top());
        SimplicialMap { source: empty, target: x.clone(), maps: alloc::vec![Vec::new(); x.top() + 1] }
    }

    pub fn source(&self) -> &FiniteSimplicialSet {
        &self.source
    }

    pub fn target(&self) -> &FiniteSimplicialSet {
        &self.target
    }

    pub fn level(&self, n: usize) -> &[usize] {
        &self.maps[n]
    }
}

/// A bisimplicial set `B_{m,n}` as a simplicial object in simplicial sets: `rows[n]` is
/// `m -> B_{m,n}`, and the `n`-direction structure maps act levelwise in `m`.
#[derive(Clone, Debug)]
pub struct BisimplicialSet {
    rows: Vec<FiniteSimplicialSet>,
    /// `faces[n][i][m]`: `B_{m,n} -> B_{m,n-1}`.
    faces: Vec<Vec<Vec<Vec<usize>>>>,
    /// `degens[n][j][m]`: `B_{m,n} -> B_{m,n+1}`.
    degens: Vec<Vec<Vec<Vec<usize>>>>,
}

impl BisimplicialSet {
    /// Each structure map in the second direction must be a simplicial map between rows.
    pub fn new(
        rows: Vec<FiniteSimplicialSet>,
        faces: Vec<Vec<Vec<Vec<usize>>>>,
        degens: Vec<Vec<Vec<Vec<usize>>>>,
    ) -> Result<Self, ConeError> {
        let top = rows.len().checked_sub(1).ok_or_else(|| ConeError::Shape("a bisimplicial set needs a row".into()))?;
        if faces.len() != top + 1 || degens.len() != top {
            return Err(ConeError::Shape("second-direction tables do not match the truncation".into()));
        }
        // Each column `n -> B_{m,n}` must itself be simplicial.
        for m in 0..=rows[0].top() {
            let counts = rows.iter().map(|r| r.count(m)).collect();
            let f = (0..=top).map(|n| faces[n].iter().map(|d| d[m].clone()).collect()).collect();
            let s = (0..top).map(|n| degens[n].iter().map(|d| d[m].clone()).collect()).collect();
            FiniteSimplicialSet::new(counts, f, s)?;
        }
        for n in 0..=top {
            for d in &faces[n] {
                SimplicialMap::new(rows[n].clone(), rows[n - 1].clone(), d.clone())?;
            }
            if n < top {
                for s in &degens[n] {
                    SimplicialMap::new(rows[n].clone(), rows[n + 1].clone(), s.clone())?;
                }
            }
        }
        Ok(BisimplicialSet { rows, faces, degens })
    }

    /// The bisimplicial set constant in the second direction.
    pub fn constant_rows(row: &FiniteSimplicialSet, top: usize) -> Self {
        let id: Vec<Vec<usize>> = row.counts().iter().map(|&c| (0..c).collect()).collect();
        BisimplicialSet {
            rows: alloc::vec![row.clone(); top + 1],
            faces: (0..=top).map(|n| if n == 0 { Vec::new() } else { alloc::vec![id.clone(); n + 1] }).collect(),
            degens: (0..top).map(|n| alloc::vec![id.clone(); n + 1]).collect(),
        }
    }

    pub fn top(&self) -> usize {
        self.rows.len() - 1
    }

    pub fn row(&self, n: usize) -> &FiniteSimplicialSet {
        &self.rows[n]
    }
}

/// The diagonal `n -> B_{n,n}` with `d_i = d_i^{(2)} d_i^{(1)}` and `s_j = s_j^{(2)} s_j^{(1)}`.
pub fn diagonal(b: &BisimplicialSet) -> Result<FiniteSimplicialSet, ConeError> {
    let top = b.top();
    if b.rows.iter().any(|r| r.top() < top) {
        return Err(ConeError::Shape("the diagonal needs rows truncated at least as high as the columns".into()));
    }
    let counts = (0..=top).map(|n| b.rows[n].count(n)).collect();
    let faces = (0..=top)
        .map(|n| {
            if n == 0 {
                return Vec::new();
            }
            (0..=n).map(|i| b.rows[n].face(n, i).iter().map(|&y| b.faces[n][i][n - 1][y]).collect()).collect()
        })
        .collect();
    let degens = (0..top)
        .map(|n| {
            (0..=n).map(|j| b.rows[n].degeneracy(n, j).iter().map(|&y| b.degens[n][j][n + 1][y]).collect()).collect()
        })
        .collect();
    FiniteSimplicialSet::new(counts, faces, degens)
}

/// Connected components of the 0-simplices, each 1-simplex joining `d_1 x` to `d_0 x`.
/// Components are sorted, and listed by their least vertex.
pub fn pi0(x: &FiniteSimplicialSet) -> Result<Vec<Vec<usize>>, ConeError> {
    if x.top() < 1 {
        return Err(ConeError::Shape("components need levels 0 and 1".into()));
    }
    let mut parent: Vec<usize> = (0..x.count(0)).collect();
    fn root(parent: &mut [usize], mut v: usize) -> usize {
        while parent[v] != v {
            parent[v] = parent[parent[v]];
            v = parent[v];
        }
        v
    }
    for e in 0..x.count(1) {
        let (a, b) = (root(&mut parent, x.face(1, 1)[e]), root(&mut parent, x.face(1, 0)[e]));
        if a != b {
            parent[a.max(b)] = a.min(b);
        }
    }
    let mut groups: BTreeMap<usize, Vec<usize>> = BTreeMap::new();
    for v in 0..x.count(0) {
        let r = root(&mut parent, v);
        groups.entry(r).or_default().push(v);
    }
    Ok(groups.into_values().collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::vec;

    #[test]
    fn interval_passes_the_audit() {
        let d1 = FiniteSimplicialSet::interval(4);
        d1.audit().unwrap();
        assert_eq!(d1.counts(), &[2, 3, 4, 5, 6]);
        assert_eq!(pi0(&d1).unwrap(), vec![vec![0, 1]]);
    }

    #[test]
    fn broken_identity_is_named() {
        let mut d1 = FiniteSimplicialSet::interval(2);
        d1.faces[1][0] = vec![1, 0, 1];
        let err = FiniteSimplicialSet::new(d1.counts.clone(), d1.faces.clone(), d1.degens.clone()).unwrap_err();
        assert!(matches!(err, ConeError::Identity(_)), "{err:?}");
    }

    #[test]
    fn components_of_points() {
        assert_eq!(pi0(&FiniteSimplicialSet::constant(1, 2)).unwrap(), vec![vec![0]]);
        assert_eq!(pi0(&FiniteSimplicialSet::constant(2, 2)).unwrap(), vec![vec![0], vec![1]]);
    }

    #[test]
    fn degenerate_edges_do_not_change_components() {
        let x = FiniteSimplicialSet::constant(3, 2).disjoint_union(&FiniteSimplicialSet::interval(2)).unwrap();
        let comps = pi0(&x).unwrap();
        assert_eq!(comps, vec![vec![0], vec![1], vec![2], vec![3, 4]]);
    }

    #[test]
    fn diagonal_of_constant_rows() {
        let d1 = FiniteSimplicialSet::interval(3);
        assert_eq!(diagonal(&BisimplicialSet::constant_rows(&d1, 3)).unwrap(), d1);
        let point = FiniteSimplicialSet::constant(1, 3);
        assert_eq!(diagonal(&BisimplicialSet::constant_rows(&point, 3)).unwrap(), point);
    }

    #[test]
    fn maps_must_commute() {
        let d1 = FiniteSimplicialSet::interval(2);
        let point = FiniteSimplicialSet::constant(1, 2);
        let collapse = (0..=2).map(|n| vec![0; n + 2]).collect();
        SimplicialMap::new(d1.clone(), point.clone(), collapse).unwrap();
        let bad = vec![vec![0, 1], vec![0, 1, 2], vec![0, 1, 2, 3]];
        assert!(SimplicialMap::new(d1.clone(), d1.disjoint_union(&d1).unwrap(), bad).is_ok());
        let swap = vec![vec![1, 0], vec![2, 1, 0], vec![3, 2, 1, 0]];
        assert!(matches!(SimplicialMap::new(d1.clone(), d1, swap), Err(ConeError::NotSimplicialMap(_))));
    }
}
