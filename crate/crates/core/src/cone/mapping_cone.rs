//! Simplicial categories, the mapping cone `Cone(f)_n = * ⊔ ⊔_α S'_n ⊔ S_n` over the interior
//! of `Δ[1]_n`, and the comparison of `ΔNerve(Cone(f))` with `Cone(ΔNerve(f))`.
//!
//! The copy of `S'_n` indexed by `α = 0^a 1^{n+1-a}` (`1 <= a <= n`) is called summand `a`;
//! summand `0` is `*` and summand `n + 1` is `S_n`.

use alloc::string::String;
use alloc::vec::Vec;

use super::category::{apply_to_chain, functors, FiniteCategory, Functor, NerveTable};
use super::sset::{diagonal, BisimplicialSet, FiniteSimplicialSet, SimplicialMap};
use super::ConeError;

/// Where `d_i` sends summand `a` at level `n`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
enum FaceRule {
    Point,
    /// Interior copy `a'` of `S'_{n-1}` by `d_i`.
    Interior(usize),
    /// `S_{n-1}` by `d_i` (or by `f_{n-1} ∘ d_i` from an interior copy).
    Top,
}

fn face_rule(n: usize, a: usize, i: usize) -> FaceRule {
    if a == 0 {
        return FaceRule::Point;
    }
    if a == n + 1 {
        return FaceRule::Top;
    }
    let shrunk = if i < a { a - 1 } else { a };
    match shrunk {
        0 => FaceRule::Top,
        s if s == n => FaceRule::Point,
        s => FaceRule::Interior(s),
    }
}

fn degeneracy_rule(n: usize, a: usize, j: usize) -> usize {
    if a == 0 {
        0
    } else if a == n + 1 {
        n + 2
    } else if j < a {
        a + 1
    } else {
        a
    }
}

/// Mapping cone of a map of finite simplicial sets.
pub fn cone(f: &SimplicialMap) -> Result<FiniteSimplicialSet, ConeError> {
    let (src, tgt) = (f.source(), f.target());
    let top = src.top();
    let offset = |n: usize, a: usize| if a == 0 { 0 } else { 1 + (a - 1) * src.count(n) };
    let counts: Vec<usize> = (0..=top).map(|n| 1 + n * src.count(n) + tgt.count(n)).collect();
    let locate = |n: usize, x: usize| -> (usize, usize) {
        if x == 0 {
            (0, 0)
        } else if x >= offset(n, n + 1) {
            (n + 1, x - offset(n, n + 1))
        } else {
            let a = 1 + (x - 1) / src.count(n);
            (a, x - offset(n, a))
        }
    };
    let mut faces = Vec::new();
    for n in 0..=top {
        if n == 0 {
            faces.push(Vec::new());
            continue;
        }
        let mut level = Vec::new();
        for i in 0..=n {
            let table = (0..counts[n])
                .map(|x| {
                    let (a, y) = locate(n, x);
                    match face_rule(n, a, i) {
                        FaceRule::Point => 0,
                        FaceRule::Interior(b) => offset(n - 1, b) + src.face(n, i)[y],
                        FaceRule::Top if a == n + 1 => offset(n - 1, n) + tgt.face(n, i)[y],
                        FaceRule::Top => offset(n - 1, n) + f.level(n - 1)[src.face(n, i)[y]],
                    }
                })
                .collect();
            level.push(table);
        }
        faces.push(level);
    }
    let degens = (0..top)
        .map(|n| {
            (0..=n)
                .map(|j| {
                    (0..counts[n])
                        .map(|x| {
                            let (a, y) = locate(n, x);
                            let b = degeneracy_rule(n, a, j);
                            match a {
                                0 => 0,
                                _ if a == n + 1 => offset(n + 1, b) + tgt.degeneracy(n, j)[y],
                                _ => offset(n + 1, b) + src.degeneracy(n, j)[y],
                            }
                        })
                        .collect()
                })
                .collect()
        })
        .collect();
    FiniteSimplicialSet::new(counts, faces, degens)
}

/// The inclusion `S -> Cone(f)` onto the summand indexed by `(1, ..., 1)`.
pub fn cone_inclusion(f: &SimplicialMap, cone: &FiniteSimplicialSet) -> Result<SimplicialMap, ConeError> {
    let (src, tgt) = (f.source(), f.target());
    let maps = (0..=tgt.top()).map(|n| (0..tgt.count(n)).map(|y| 1 + n * src.count(n) + y).collect()).collect();
    SimplicialMap::new(tgt.clone(), cone.clone(), maps)
}

/// A simplicial object in finite categories through level `top`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SimplicialCategory {
    levels: Vec<FiniteCategory>,
    faces: Vec<Vec<Functor>>,
    degens: Vec<Vec<Functor>>,
}

impl SimplicialCategory {
    /// Checks every structure functor and the simplicial identities on objects and morphisms.
    pub fn new(
        levels: Vec<FiniteCategory>,
        faces: Vec<Vec<Functor>>,
        degens: Vec<Vec<Functor>>,
    ) -> Result<Self, ConeError> {
        let top = levels
            .len()
            .checked_sub(1)
            .ok_or_else(|| ConeError::Shape("a simplicial category needs level 0".into()))?;
        if faces.len() != top + 1 || degens.len() != top {
            return Err(ConeError::Shape("face or degeneracy functors do not match the truncation".into()));
        }
        for n in 0..=top {
            if faces[n].len() != if n == 0 { 0 } else { n + 1 } || (n < top && degens[n].len() != n + 1) {
                return Err(ConeError::Shape(alloc::format!("wrong number of structure functors at level {}", n)));
            }
            for d in &faces[n] {
                d.check(&levels[n], &levels[n - 1])?;
            }
            if n < top {
                for s in &degens[n] {
                    s.check(&levels[n], &levels[n + 1])?;
                }
            }
        }
        let c = SimplicialCategory { levels, faces, degens };
        // Objects and morphisms each form a simplicial set.
        c.component_set(|l| l.object_count(), |f| &f.objects)?;
        c.component_set(|l| l.morphism_count(), |f| &f.morphisms)?;
        Ok(c)
    }

    fn component_set(
        &self,
        count: impl Fn(&FiniteCategory) -> usize,
        table: impl Fn(&Functor) -> &Vec<usize>,
    ) -> Result<FiniteSimplicialSet, ConeError> {
        FiniteSimplicialSet::new(
            self.levels.iter().map(count).collect(),
            self.faces.iter().map(|fs| fs.iter().map(|f| table(f).clone()).collect()).collect(),
            self.degens.iter().map(|fs| fs.iter().map(|f| table(f).clone()).collect()).collect(),
        )
    }

    /// The constant simplicial category on `c`.
    pub fn constant(c: &FiniteCategory, top: usize) -> Self {
        let id = Functor::identity(c);
        SimplicialCategory {
            levels: alloc::vec![c.clone(); top + 1],
            faces: (0..=top).map(|n| if n == 0 { Vec::new() } else { alloc::vec![id.clone(); n + 1] }).collect(),
            degens: (0..top).map(|n| alloc::vec![id.clone(); n + 1]).collect(),
        }
    }

    /// The simplicial category whose level `n` is the discrete category on `X_n`.
    pub fn discrete(x: &FiniteSimplicialSet) -> Self {
        let names = |n: usize| (0..x.count(n)).map(|i| alloc::format!("{}", i)).collect::<Vec<String>>();
        let levels = (0..=x.top()).map(|n| FiniteCategory::discrete(&names(n))).collect();
        let functor = |t: &[usize]| Functor { objects: t.to_vec(), morphisms: t.to_vec() };
        SimplicialCategory {
            levels,
            faces: (0..=x.top())
                .map(|n| (0..if n == 0 { 0 } else { n + 1 }).map(|i| functor(x.face(n, i))).collect())
                .collect(),
            degens: (0..x.top()).map(|n| (0..=n).map(|j| functor(x.degeneracy(n, j))).collect()).collect(),
        }
    }

    pub fn top(&self) -> usize {
        self.levels.len() - 1
    }

    pub fn level(&self, n: usize) -> &FiniteCategory {
        &self.levels[n]
    }

    pub fn face(&self, n: usize, i: usize) -> &Functor {
        &self.faces[n][i]
    }

    pub fn degeneracy(&self, n: usize, j: usize) -> &Functor {
        &self.degens[n][j]
    }

    /// Nerve tables of every level, each through level `top`.
    fn nerve_tables(&self) -> Vec<NerveTable> {
        self.levels.iter().map(|c| NerveTable::new(c, self.top())).collect()
    }

    /// The bisimplicial set `(m, n) -> Nerve_m(S_n)`.
    pub fn nerve(&self) -> Result<BisimplicialSet, ConeError> {
        let tables = self.nerve_tables();
        let on_nerve = |f: &Functor, s: &NerveTable, t: &NerveTable| super::category::nerve_map(f, s, t);
        let faces = (0..=self.top())
            .map(|n| self.faces[n].iter().map(|d| on_nerve(d, &tables[n], &tables[n - 1])).collect())
            .collect();
        let degens = (0..self.top())
            .map(|n| self.degens[n].iter().map(|s| on_nerve(s, &tables[n], &tables[n + 1])).collect())
            .collect();
        BisimplicialSet::new(tables.into_iter().map(|t| t.set).collect(), faces, degens)
    }

    /// `ΔNerve`: the diagonal of the nerve.
    pub fn diagonal_nerve(&self) -> Result<FiniteSimplicialSet, ConeError> {
        diagonal(&self.nerve()?)
    }
}

/// A levelwise functor of simplicial categories commuting with all structure functors.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SimplicialFunctor {
    source: SimplicialCategory,
    target: SimplicialCategory,
    maps: Vec<Functor>,
}

impl SimplicialFunctor {
    pub fn new(source: SimplicialCategory, target: SimplicialCategory, maps: Vec<Functor>) -> Result<Self, ConeError> {
        if source.top() != target.top() || maps.len() != source.top() + 1 {
            return Err(ConeError::Shape(
                "a simplicial functor needs one functor per level of a common truncation".into(),
            ));
        }
        for (n, f) in maps.iter().enumerate() {
            f.check(source.level(n), target.level(n))?;
            for i in 0..if n == 0 { 0 } else { n + 1 } {
                if maps[n - 1].after(source.face(n, i)) != target.face(n, i).after(f) {
                    return Err(ConeError::NotSimplicialMap(alloc::format!("d_{} at level {}", i, n)));
                }
            }
            if n < source.top() {
                for j in 0..=n {
                    if maps[n + 1].after(source.degeneracy(n, j)) != target.degeneracy(n, j).after(f) {
                        return Err(ConeError::NotSimplicialMap(alloc::format!("s_{} at level {}", j, n)));
                    }
                }
            }
        }
        Ok(SimplicialFunctor { source, target, maps })
    }

    /// A functor of categories viewed as a map of constant simplicial categories.
    pub fn constant(
        f: &Functor,
        source: &FiniteCategory,
        target: &FiniteCategory,
        top: usize,
    ) -> Result<Self, ConeError> {
        f.check(source, target)?;
        Ok(SimplicialFunctor {
            source: SimplicialCategory::constant(source, top),
            target: SimplicialCategory::constant(target, top),
            maps: alloc::vec![f.clone(); top + 1],
        })
    }

    pub fn source(&self) -> &SimplicialCategory {
        &self.source
    }

    pub fn target(&self) -> &SimplicialCategory {
        &self.target
    }

    pub fn level(&self, n: usize) -> &Functor {
        &self.maps[n]
    }

    /// `ΔNerve(f)`.
    pub fn diagonal_nerve(&self) -> Result<SimplicialMap, ConeError> {
        let (s, t) = (self.source.nerve_tables(), self.target.nerve_tables());
        let maps = (0..=self.source.top())
            .map(|n| s[n].chains[n].iter().map(|ch| t[n].id(&apply_to_chain(&self.maps[n], ch))).collect())
            .collect();
        SimplicialMap::new(self.source.diagonal_nerve()?, self.target.diagonal_nerve()?, maps)
    }
}

/// Level `n` of the cone: the coproduct `* ⊔ S'_n ⊔ ... ⊔ S'_n ⊔ S_n`.
fn cone_level(f: &SimplicialFunctor, n: usize) -> super::category::Coproduct {
    let point = FiniteCategory::terminal();
    let mut parts: Vec<&FiniteCategory> = alloc::vec![&point];
    parts.extend(core::iter::repeat(f.source.level(n)).take(n));
    parts.push(f.target.level(n));
    FiniteCategory::coproduct(&parts)
}

/// Mapping cone of a functor of simplicial categories, built on objects and morphisms.
pub fn cone_category(f: &SimplicialFunctor) -> Result<SimplicialCategory, ConeError> {
    let top = f.source.top();
    let levels: Vec<_> = (0..=top).map(|n| cone_level(f, n)).collect();
    // Applies `g` to summand `a` of level `n`, landing in summand `b` of level `m`.
    let assemble = |n: usize, m: usize, rule: &dyn Fn(usize) -> (usize, Option<Functor>)| {
        let (from, to) = (&levels[n], &levels[m]);
        let mut objects = alloc::vec![0; from.category.object_count()];
        let mut morphisms = alloc::vec![0; from.category.morphism_count()];
        for a in 0..=n + 1 {
            let (b, g) = rule(a);
            let size_o = from.object_offsets.get(a + 1).copied().unwrap_or(from.category.object_count())
                - from.object_offsets[a];
            let size_m = from.morphism_offsets.get(a + 1).copied().unwrap_or(from.category.morphism_count())
                - from.morphism_offsets[a];
            for x in 0..size_o {
                objects[from.object_offsets[a] + x] = to.object_offsets[b] + g.as_ref().map_or(0, |g| g.objects[x]);
            }
            for h in 0..size_m {
                morphisms[from.morphism_offsets[a] + h] =
                    to.morphism_offsets[b] + g.as_ref().map_or(0, |g| g.morphisms[h]);
            }
        }
        Functor { objects, morphisms }
    };
    let faces = (0..=top)
        .map(|n| {
            if n == 0 {
                return Vec::new();
            }
            (0..=n)
                .map(|i| {
                    assemble(n, n - 1, &|a| match face_rule(n, a, i) {
                        FaceRule::Point => (0, None),
                        FaceRule::Interior(b) => (b, Some(f.source.face(n, i).clone())),
                        FaceRule::Top if a == n + 1 => (n, Some(f.target.face(n, i).clone())),
                        FaceRule::Top => (n, Some(f.maps[n - 1].after(f.source.face(n, i)))),
                    })
                })
                .collect()
        })
        .collect();
    let degens = (0..top)
        .map(|n| {
            (0..=n)
                .map(|j| {
                    assemble(n, n + 1, &|a| {
                        let b = degeneracy_rule(n, a, j);
                        match a {
                            0 => (0, None),
                            _ if a == n + 1 => (b, Some(f.target.degeneracy(n, j).clone())),
                            _ => (b, Some(f.source.degeneracy(n, j).clone())),
                        }
                    })
                })
                .collect()
        })
        .collect();
    SimplicialCategory::new(levels.into_iter().map(|c| c.category).collect(), faces, degens)
}

/// Builds `ΔNerve(Cone(f))` and `Cone(ΔNerve(f))` and checks that the summand-wise
/// identification is a bijection at every level commuting with all faces and degeneracies.
pub fn check_cone_nerve(f: &SimplicialFunctor) -> Result<bool, ConeError> {
    let top = f.source.top();
    let cone_cat = cone_category(f)?;
    let lhs = cone_cat.diagonal_nerve()?;
    let rhs = cone(&f.diagonal_nerve()?)?;
    let lhs_tables: Vec<NerveTable> = (0..=top).map(|n| NerveTable::new(cone_cat.level(n), top)).collect();
    let src_tables = f.source.nerve_tables();
    let tgt_tables = f.target.nerve_tables();
    let mut phi: Vec<Vec<usize>> = Vec::new();
    for n in 0..=top {
        let layout = cone_level(f, n);
        let interior = src_tables[n].set.count(n);
        let mut level = Vec::with_capacity(lhs.count(n));
        for chain in &lhs_tables[n].chains[n] {
            let a = layout.summand_of_object(chain[0]);
            let local: Vec<usize> = core::iter::once(chain[0] - layout.object_offsets[a])
                .chain(chain[1..].iter().map(|m| m - layout.morphism_offsets[a]))
                .collect();
            let id = match a {
                0 => 0,
                _ if a == n + 1 => 1 + n * interior + tgt_tables[n].id(&local),
                _ => 1 + (a - 1) * interior + src_tables[n].id(&local),
            };
            level.push(id);
        }
        let mut seen = alloc::vec![false; rhs.count(n)];
        if level.len() != rhs.count(n) {
            return Ok(false);
        }
        for &y in &level {
            if core::mem::replace(&mut seen[y], true) {
                return Ok(false);
            }
        }
        phi.push(level);
    }
    Ok(SimplicialMap::new(lhs, rhs, phi).is_ok())
}

/// Outcome of [`cone_nerve_grid`].
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct GridReport {
    pub pairs: usize,
    pub functors: usize,
    pub failures: Vec<String>,
}

impl GridReport {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }
}

/// [`check_cone_nerve`] for every functor between every ordered pair of `categories`,
/// viewed as constant simplicial categories truncated at `top`.
pub fn cone_nerve_grid(categories: &[(String, FiniteCategory)], top: usize) -> Result<GridReport, ConeError> {
    let mut report = GridReport::default();
    for (sname, s) in categories {
        for (tname, t) in categories {
            report.pairs += 1;
            for (k, g) in functors(s, t).iter().enumerate() {
                report.functors += 1;
                let f = SimplicialFunctor::constant(g, s, t, top)?;
                if !check_cone_nerve(&f)? {
                    report.failures.push(alloc::format!("{} -> {} (functor {})", sname, tname, k));
                }
            }
        }
    }
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cone::category::{category_zoo, nerve, nerve_of_functor};
    use crate::cone::sset::pi0;
    use alloc::vec;

    fn point(top: usize) -> FiniteSimplicialSet {
        FiniteSimplicialSet::constant(1, top)
    }

    #[test]
    fn cone_of_identity_on_a_point() {
        let c = cone(&SimplicialMap::identity(&point(4))).unwrap();
        assert_eq!(c.counts(), &[2, 3, 4, 5, 6]);
        // It is Δ[1]; the interval labels strings by leading zeros, which swaps the endpoints.
        let relabel = (0..=4)
            .map(|n| {
                (0..n + 2)
                    .map(|a| {
                        if a == 0 {
                            n + 1
                        } else if a == n + 1 {
                            0
                        } else {
                            a
                        }
                    })
                    .collect()
            })
            .collect();
        SimplicialMap::new(c, FiniteSimplicialSet::interval(4), relabel).unwrap();
    }

    #[test]
    fn cone_from_empty_adds_a_point() {
        let s = nerve(&category_zoo()[4].1, 3);
        let c = cone(&SimplicialMap::from_empty(&s)).unwrap();
        assert_eq!(c, point(3).disjoint_union(&s).unwrap());
        assert_eq!(pi0(&c).unwrap().len(), pi0(&s).unwrap().len() + 1);
    }

    #[test]
    fn interior_face_to_the_top_goes_through_the_map() {
        // S' = two points, S = one point; at level 1 the interior copies α = (0, 1) have
        // d_0 α = (1), landing in S through f, and d_1 α = (0), landing on *.
        let two = FiniteSimplicialSet::constant(2, 2);
        let f = SimplicialMap::new(two, point(2), vec![vec![0, 0]; 3]).unwrap();
        let c = cone(&f).unwrap();
        assert_eq!(c.counts(), &[2, 4, 6]);
        assert_eq!(c.face(1, 0), &[0, 1, 1, 1]);
        assert_eq!(c.face(1, 1), &[0, 0, 0, 1]);
    }

    #[test]
    fn cone_receives_the_target() {
        let zoo = category_zoo();
        let (s, t) = (&zoo[2].1, &zoo[7].1);
        for g in functors(s, t) {
            let f = nerve_of_functor(&g, s, t, 3).unwrap();
            let c = cone(&f).unwrap();
            cone_inclusion(&f, &c).unwrap();
        }
    }

    #[test]
    fn discrete_levels_have_object_sets_as_diagonal_nerve() {
        let d1 = FiniteSimplicialSet::interval(3);
        assert_eq!(SimplicialCategory::discrete(&d1).diagonal_nerve().unwrap(), d1);
    }

    #[test]
    fn identity_on_the_arrow() {
        let arrow = &category_zoo()[2].1;
        let f = SimplicialFunctor::constant(&Functor::identity(arrow), arrow, arrow, 4).unwrap();
        assert!(check_cone_nerve(&f).unwrap());
    }

    #[test]
    fn terminal_into_the_arrow() {
        let zoo = category_zoo();
        for g in functors(&zoo[0].1, &zoo[2].1) {
            let f = SimplicialFunctor::constant(&g, &zoo[0].1, &zoo[2].1, 4).unwrap();
            assert!(check_cone_nerve(&f).unwrap());
        }
    }

    #[test]
    fn non_constant_simplicial_categories() {
        let d1 = FiniteSimplicialSet::interval(3);
        let source = SimplicialCategory::discrete(&FiniteSimplicialSet::constant(1, 3));
        let target = SimplicialCategory::discrete(&d1);
        for a in [0usize, 1] {
            // The vertex `a` of Δ[1], degenerated to every level.
            let maps = (0..=3).map(|n| {
                let v = if a == 0 { 0 } else { n + 1 };
                Functor { objects: vec![v], morphisms: vec![v] }
            });
            let f = SimplicialFunctor::new(source.clone(), target.clone(), maps.collect()).unwrap();
            assert!(check_cone_nerve(&f).unwrap());
        }
    }

    #[test]
    fn three_object_posets_at_level_three() {
        let zoo: Vec<_> = category_zoo().into_iter().filter(|(_, c)| c.object_count() == 3).collect();
        let report = cone_nerve_grid(&zoo[..3], 3).unwrap();
        assert!(report.passed(), "{:?}", report.failures);
        assert!(report.functors > 0);
    }
}
