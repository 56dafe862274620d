//! Finite categories given by explicit composition tables, functors between them, and nerves.

use alloc::collections::BTreeMap;
use alloc::string::{String, ToString};
use alloc::vec::Vec;

use super::sset::{FiniteSimplicialSet, SimplicialMap};
use super::ConeError;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Morphism {
    pub name: String,
    pub src: usize,
    pub dst: usize,
}

/// A finite category. `compose[g][f] = Some(g ∘ f)` exactly when `f.dst == g.src`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FiniteCategory {
    objects: Vec<String>,
    morphisms: Vec<Morphism>,
    identities: Vec<usize>,
    compose: Vec<Vec<Option<usize>>>,
}

impl FiniteCategory {
    /// Checks that composition is defined exactly on composable pairs, respects endpoints,
    /// is associative and has the given identities as units.
    pub fn new(
        objects: Vec<String>,
        morphisms: Vec<Morphism>,
        identities: Vec<usize>,
        compose: Vec<Vec<Option<usize>>>,
    ) -> Result<Self, ConeError> {
        let (n_obj, n_mor) = (objects.len(), morphisms.len());
        let bad = |msg: String| Err(ConeError::NotCategory(msg));
        if morphisms.iter().any(|m| m.src >= n_obj || m.dst >= n_obj) {
            return bad("a morphism has an unknown endpoint".into());
        }
        if identities.len() != n_obj || compose.len() != n_mor || compose.iter().any(|row| row.len() != n_mor) {
            return bad("identity list or composition table has the wrong size".into());
        }
        for (x, &e) in identities.iter().enumerate() {
            if e >= n_mor || morphisms[e].src != x || morphisms[e].dst != x {
                return bad(alloc::format!("the identity of {} is not an endomorphism of it", objects[x]));
            }
        }
        for g in 0..n_mor {
            for f in 0..n_mor {
                let composable = morphisms[f].dst == morphisms[g].src;
                match compose[g][f] {
                    Some(h) if !composable || h >= n_mor => {
                        return bad(alloc::format!(
                            "{} ∘ {} is defined but not composable",
                            morphisms[g].name,
                            morphisms[f].name
                        ))
                    }
                    Some(h) if morphisms[h].src != morphisms[f].src || morphisms[h].dst != morphisms[g].dst => {
                        return bad(alloc::format!(
                            "{} ∘ {} has the wrong endpoints",
                            morphisms[g].name,
                            morphisms[f].name
                        ))
                    }
                    None if composable => {
                        return bad(alloc::format!("{} ∘ {} is missing", morphisms[g].name, morphisms[f].name))
                    }
                    _ => {}
                }
            }
        }
        for (f, m) in morphisms.iter().enumerate() {
            if compose[identities[m.dst]][f] != Some(f) || compose[f][identities[m.src]] != Some(f) {
                return bad(alloc::format!("identities are not units for {}", m.name));
            }
        }
        for h in 0..n_mor {
            for g in 0..n_mor {
                let Some(hg) = compose[h][g] else { continue };
                for f in 0..n_mor {
                    let Some(gf) = compose[g][f] else { continue };
                    if compose[hg][f] != compose[h][gf] {
                        return bad(alloc::format!(
                            "composition is not associative on ({}, {}, {})",
                            morphisms[h].name,
                            morphisms[g].name,
                            morphisms[f].name
                        ));
                    }
                }
            }
        }
        Ok(FiniteCategory { objects, morphisms, identities, compose })
    }

    /// The one-object, one-morphism category.
    pub fn terminal() -> Self {
        Self::discrete(&["*"])
    }

    pub fn discrete<S: AsRef<str>>(names: &[S]) -> Self {
        let objects: Vec<String> = names.iter().map(|s| s.as_ref().to_string()).collect();
        let morphisms = objects
            .iter()
            .enumerate()
            .map(|(i, o)| Morphism { name: alloc::format!("id_{}", o), src: i, dst: i })
            .collect();
        let n = objects.len();
        let compose = (0..n).map(|g| (0..n).map(|f| (f == g).then_some(f)).collect()).collect();
        FiniteCategory { objects, morphisms, identities: (0..n).collect(), compose }
    }

    /// The poset on `0..n` generated by `le(i, j)`, which must be a partial order.
    pub fn poset(n: usize, le: impl Fn(usize, usize) -> bool) -> Result<Self, ConeError> {
        let objects: Vec<String> = (0..n).map(|i| i.to_string()).collect();
        let mut morphisms = Vec::new();
        let mut index = BTreeMap::new();
        for i in 0..n {
            for j in 0..n {
                if i == j || le(i, j) {
                    index.insert((i, j), morphisms.len());
                    let name = if i == j { alloc::format!("id_{}", i) } else { alloc::format!("{}<{}", i, j) };
                    morphisms.push(Morphism { name, src: i, dst: j });
                }
            }
        }
        let identities = (0..n).map(|i| index[&(i, i)]).collect();
        let compose = morphisms
            .iter()
            .map(|g| {
                morphisms
                    .iter()
                    .map(|f| (f.dst == g.src).then(|| index.get(&(f.src, g.dst)).copied()).flatten())
                    .collect()
            })
            .collect::<Vec<Vec<Option<usize>>>>();
        // A missing composite means `le` is not transitive; `new` reports it.
        Self::new(objects, morphisms, identities, compose)
    }

    /// The one-object category of a monoid with multiplication table `table[a][b] = a·b`,
    /// element 0 being the unit.
    pub fn monoid(names: &[&str], table: &[&[usize]]) -> Result<Self, ConeError> {
        let morphisms = names.iter().map(|n| Morphism { name: n.to_string(), src: 0, dst: 0 }).collect();
        let compose = table.iter().map(|row| row.iter().map(|&c| Some(c)).collect()).collect();
        Self::new(alloc::vec!["*".to_string()], morphisms, alloc::vec![0], compose)
    }

    pub fn object_count(&self) -> usize {
        self.objects.len()
    }

    pub fn morphism_count(&self) -> usize {
        self.morphisms.len()
    }

    pub fn objects(&self) -> &[String] {
        &self.objects
    }

    pub fn morphisms(&self) -> &[Morphism] {
        &self.morphisms
    }

    pub fn morphism(&self, f: usize) -> &Morphism {
        &self.morphisms[f]
    }

    pub fn identity(&self, x: usize) -> usize {
        self.identities[x]
    }

    /// `g ∘ f` if composable.
    pub fn compose(&self, g: usize, f: usize) -> Option<usize> {
        self.compose[g][f]
    }

    /// Coproduct of categories; summand `k` occupies objects from `object_offsets[k]` and
    /// morphisms from `morphism_offsets[k]`.
    pub fn coproduct(parts: &[&FiniteCategory]) -> Coproduct {
        let mut objects = Vec::new();
        let mut morphisms = Vec::new();
        let mut identities = Vec::new();
        let (mut object_offsets, mut morphism_offsets) = (Vec::new(), Vec::new());
        for (k, c) in parts.iter().enumerate() {
            let (oo, mo) = (objects.len(), morphisms.len());
            object_offsets.push(oo);
            morphism_offsets.push(mo);
            let tag = |s: &str| if parts.len() == 1 { s.to_string() } else { alloc::format!("{}.{}", k, s) };
            objects.extend(c.objects.iter().map(|o| tag(o)));
            morphisms.extend(c.morphisms.iter().map(|m| Morphism {
                name: tag(&m.name),
                src: m.src + oo,
                dst: m.dst + oo,
            }));
            identities.extend(c.identities.iter().map(|e| e + mo));
        }
        let total = morphisms.len();
        let mut compose = alloc::vec![alloc::vec![None; total]; total];
        for (c, &mo) in parts.iter().zip(&morphism_offsets) {
            for g in 0..c.morphism_count() {
                for f in 0..c.morphism_count() {
                    compose[g + mo][f + mo] = c.compose[g][f].map(|h| h + mo);
                }
            }
        }
        Coproduct {
            category: FiniteCategory { objects, morphisms, identities, compose },
            object_offsets,
            morphism_offsets,
        }
    }
}

/// A coproduct of categories with its summand offsets.
#[derive(Clone, Debug)]
pub struct Coproduct {
    pub category: FiniteCategory,
    pub object_offsets: Vec<usize>,
    pub morphism_offsets: Vec<usize>,
}

impl Coproduct {
    /// The summand containing an object.
    pub fn summand_of_object(&self, x: usize) -> usize {
        self.object_offsets.partition_point(|&o| o <= x) - 1
    }
}

/// A functor given by its object and morphism tables.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub struct Functor {
    pub objects: Vec<usize>,
    pub morphisms: Vec<usize>,
}

impl Functor {
    pub fn new(
        source: &FiniteCategory,
        target: &FiniteCategory,
        objects: Vec<usize>,
        morphisms: Vec<usize>,
    ) -> Result<Self, ConeError> {
        let f = Functor { objects, morphisms };
        f.check(source, target)?;
        Ok(f)
    }

    pub fn identity(c: &FiniteCategory) -> Self {
        Functor { objects: (0..c.object_count()).collect(), morphisms: (0..c.morphism_count()).collect() }
    }

    pub fn check(&self, source: &FiniteCategory, target: &FiniteCategory) -> Result<(), ConeError> {
        let bad = |msg: String| Err(ConeError::NotFunctor(msg));
        if self.objects.len() != source.object_count() || self.morphisms.len() != source.morphism_count() {
            return bad("functor tables do not match the source".into());
        }
        if self.objects.iter().any(|&y| y >= target.object_count())
            || self.morphisms.iter().any(|&y| y >= target.morphism_count())
        {
            return bad("functor tables leave the target".into());
        }
        for (f, m) in source.morphisms.iter().enumerate() {
            let img = target.morphism(self.morphisms[f]);
            if img.src != self.objects[m.src] || img.dst != self.objects[m.dst] {
                return bad(alloc::format!("{} is sent to a morphism with the wrong endpoints", m.name));
            }
        }
        for x in 0..source.object_count() {
            if self.morphisms[source.identity(x)] != target.identity(self.objects[x]) {
                return bad(alloc::format!("the identity of {} is not preserved", source.objects[x]));
            }
        }
        for g in 0..source.morphism_count() {
            for f in 0..source.morphism_count() {
                if let Some(gf) = source.compose(g, f) {
                    if target.compose(self.morphisms[g], self.morphisms[f]) != Some(self.morphisms[gf]) {
                        return bad(alloc::format!(
                            "composition {} ∘ {} is not preserved",
                            source.morphisms[g].name,
                            source.morphisms[f].name
                        ));
                    }
                }
            }
        }
        Ok(())
    }

    /// `self ∘ first`.
    pub fn after(&self, first: &Functor) -> Functor {
        Functor {
            objects: first.objects.iter().map(|&x| self.objects[x]).collect(),
            morphisms: first.morphisms.iter().map(|&f| self.morphisms[f]).collect(),
        }
    }
}

/// Every functor `source -> target`, in lexicographic order of their tables.
pub fn functors(source: &FiniteCategory, target: &FiniteCategory) -> Vec<Functor> {
    let mut out = Vec::new();
    let n_obj = source.object_count();
    let mut objects = alloc::vec![0; n_obj];
    if n_obj > 0 && target.object_count() == 0 {
        return out;
    }
    loop {
        extend_morphisms(source, target, &objects, &mut Vec::new(), &mut out);
        // Odometer over object assignments.
        let mut k = n_obj;
        loop {
            if k == 0 {
                return out;
            }
            k -= 1;
            objects[k] += 1;
            if objects[k] < target.object_count() {
                break;
            }
            objects[k] = 0;
        }
    }
}

fn extend_morphisms(
    source: &FiniteCategory,
    target: &FiniteCategory,
    objects: &[usize],
    chosen: &mut Vec<usize>,
    out: &mut Vec<Functor>,
) {
    let f = chosen.len();
    if f == source.morphism_count() {
        let cand = Functor { objects: objects.to_vec(), morphisms: chosen.clone() };
        if cand.check(source, target).is_ok() {
            out.push(cand);
        }
        return;
    }
    let m = source.morphism(f);
    let (src, dst) = (objects[m.src], objects[m.dst]);
    for g in 0..target.morphism_count() {
        let t = target.morphism(g);
        if t.src != src || t.dst != dst {
            continue;
        }
        if source.identities[m.src] == f && target.identity(src) != g {
            continue;
        }
        // Prune on composites whose factors are already assigned.
        let consistent = (0..f).all(|a| {
            [(a, f), (f, a)].iter().all(|&(x, y)| match source.compose(x, y) {
                Some(xy) if xy <= f => {
                    let img = |z: usize| if z == f { g } else { chosen[z] };
                    target.compose(img(x), img(y)) == Some(img(xy))
                }
                _ => true,
            })
        });
        if consistent {
            chosen.push(g);
            extend_morphisms(source, target, objects, chosen, out);
            chosen.pop();
        }
    }
}

/// The nerve through level `top` with the chain of each simplex. An `n`-simplex is stored as
/// `[x_0, f_1, ..., f_n]` with `f_k : x_{k-1} -> x_k`.
#[derive(Clone, Debug)]
pub struct NerveTable {
    pub set: FiniteSimplicialSet,
    pub chains: Vec<Vec<Vec<usize>>>,
    pub index: Vec<BTreeMap<Vec<usize>, usize>>,
}

impl NerveTable {
    pub fn new(c: &FiniteCategory, top: usize) -> Self {
        let mut chains: Vec<Vec<Vec<usize>>> = alloc::vec![(0..c.object_count()).map(|x| alloc::vec![x]).collect()];
        for n in 1..=top {
            let mut level = Vec::new();
            for chain in &chains[n - 1] {
                let end = last_object(c, chain);
                for (f, m) in c.morphisms.iter().enumerate() {
                    if m.src == end {
                        let mut next = chain.clone();
                        next.push(f);
                        level.push(next);
                    }
                }
            }
            chains.push(level);
        }
        let index: Vec<BTreeMap<Vec<usize>, usize>> =
            chains.iter().map(|level| level.iter().enumerate().map(|(i, ch)| (ch.clone(), i)).collect()).collect();
        let counts = chains.iter().map(Vec::len).collect();
        let faces = (0..=top)
            .map(|n| {
                if n == 0 {
                    Vec::new()
                } else {
                    (0..=n).map(|i| chains[n].iter().map(|ch| index[n - 1][&chain_face(c, ch, i)]).collect()).collect()
                }
            })
            .collect();
        let degens = (0..top)
            .map(|n| {
                (0..=n)
                    .map(|j| chains[n].iter().map(|ch| index[n + 1][&chain_degeneracy(c, ch, j)]).collect())
                    .collect()
            })
            .collect();
        let set = FiniteSimplicialSet::new(counts, faces, degens).expect("nerves are simplicial");
        NerveTable { set, chains, index }
    }

    /// The simplex of a chain.
    pub fn id(&self, chain: &[usize]) -> usize {
        self.index[chain.len() - 1][chain]
    }
}

fn last_object(c: &FiniteCategory, chain: &[usize]) -> usize {
    match chain.last() {
        Some(&f) if chain.len() > 1 => c.morphism(f).dst,
        _ => chain[0],
    }
}

pub(crate) fn chain_face(c: &FiniteCategory, chain: &[usize], i: usize) -> Vec<usize> {
    let n = chain.len() - 1;
    let f = &chain[1..];
    if i == 0 {
        let x1 = c.morphism(f[0]).dst;
        core::iter::once(x1).chain(f[1..].iter().copied()).collect()
    } else if i == n {
        chain[..n].to_vec()
    } else {
        let mut out = chain[..i].to_vec();
        out.push(c.compose(f[i], f[i - 1]).expect("composable chain"));
        out.extend_from_slice(&f[i + 1..]);
        out
    }
}

pub(crate) fn chain_degeneracy(c: &FiniteCategory, chain: &[usize], j: usize) -> Vec<usize> {
    let x_j = if j == 0 { chain[0] } else { c.morphism(chain[j]).dst };
    let mut out = chain[..=j].to_vec();
    out.push(c.identity(x_j));
    out.extend_from_slice(&chain[j + 1..]);
    out
}

/// `Nerve(C)` through level `top`.
pub fn nerve(c: &FiniteCategory, top: usize) -> FiniteSimplicialSet {
    NerveTable::new(c, top).set
}

/// `Nerve(F)` between nerve tables of its source and target.
pub fn nerve_map(f: &Functor, source: &NerveTable, target: &NerveTable) -> Vec<Vec<usize>> {
    source.chains.iter().map(|level| level.iter().map(|ch| target.id(&apply_to_chain(f, ch))).collect()).collect()
}

pub(crate) fn apply_to_chain(f: &Functor, chain: &[usize]) -> Vec<usize> {
    core::iter::once(f.objects[chain[0]]).chain(chain[1..].iter().map(|&m| f.morphisms[m])).collect()
}

/// `Nerve(F)` as a checked simplicial map.
pub fn nerve_of_functor(
    f: &Functor,
    source: &FiniteCategory,
    target: &FiniteCategory,
    top: usize,
) -> Result<SimplicialMap, ConeError> {
    f.check(source, target)?;
    let (s, t) = (NerveTable::new(source, top), NerveTable::new(target, top));
    let maps = nerve_map(f, &s, &t);
    SimplicialMap::new(s.set, t.set, maps)
}

/// Small categories used by the exhaustive cone/nerve grid: every poset on at most three
/// elements up to isomorphism, and the non-posets with at most three objects and six
/// morphisms listed below.
pub fn category_zoo() -> Vec<(String, FiniteCategory)> {
    let mut zoo: Vec<(String, FiniteCategory)> = Vec::new();
    let poset = |n: usize, rel: &[(usize, usize)]| {
        let rel = rel.to_vec();
        FiniteCategory::poset(n, move |i, j| rel.contains(&(i, j))).expect("zoo poset")
    };
    zoo.push(("point".into(), FiniteCategory::terminal()));
    zoo.push(("two points".into(), FiniteCategory::discrete(&["a", "b"])));
    zoo.push(("arrow".into(), poset(2, &[(0, 1)])));
    zoo.push(("three points".into(), FiniteCategory::discrete(&["a", "b", "c"])));
    zoo.push(("arrow + point".into(), poset(3, &[(0, 1)])));
    zoo.push(("span".into(), poset(3, &[(0, 1), (0, 2)])));
    zoo.push(("cospan".into(), poset(3, &[(0, 2), (1, 2)])));
    zoo.push(("chain".into(), poset(3, &[(0, 1), (1, 2), (0, 2)])));
    zoo.push(("Z/2".into(), FiniteCategory::monoid(&["1", "g"], &[&[0, 1], &[1, 0]]).expect("zoo group")));
    zoo.push((
        "Z/3".into(),
        FiniteCategory::monoid(&["1", "g", "g2"], &[&[0, 1, 2], &[1, 2, 0], &[2, 0, 1]]).expect("zoo group"),
    ));
    zoo.push(("idempotent".into(), FiniteCategory::monoid(&["1", "e"], &[&[0, 1], &[1, 1]]).expect("zoo monoid")));
    zoo.push(("parallel pair".into(), parallel_pair()));
    zoo.push(("isomorphism".into(), isomorphism()));
    let z2 = FiniteCategory::monoid(&["1", "g"], &[&[0, 1], &[1, 0]]).expect("zoo group");
    zoo.push(("Z/2 + point".into(), FiniteCategory::coproduct(&[&z2, &FiniteCategory::terminal()]).category));
    zoo
}

fn parallel_pair() -> FiniteCategory {
    let objects = alloc::vec!["0".to_string(), "1".to_string()];
    let m = |name: &str, src, dst| Morphism { name: name.to_string(), src, dst };
    let morphisms = alloc::vec![m("id_0", 0, 0), m("id_1", 1, 1), m("u", 0, 1), m("v", 0, 1)];
    let mut compose = alloc::vec![alloc::vec![None; 4]; 4];
    for f in 0..4 {
        compose[1][f] = (morphisms[f].dst == 1).then_some(f);
        compose[f][0] = (morphisms[f].src == 0).then_some(f);
    }
    FiniteCategory::new(objects, morphisms, alloc::vec![0, 1], compose).expect("parallel pair")
}

fn isomorphism() -> FiniteCategory {
    let objects = alloc::vec!["0".to_string(), "1".to_string()];
    let m = |name: &str, src, dst| Morphism { name: name.to_string(), src, dst };
    let morphisms = alloc::vec![m("id_0", 0, 0), m("id_1", 1, 1), m("u", 0, 1), m("u'", 1, 0)];
    let mut compose = alloc::vec![alloc::vec![None; 4]; 4];
    for g in 0..4 {
        for f in 0..4 {
            if morphisms[f].dst != morphisms[g].src {
                continue;
            }
            let (s, d) = (morphisms[f].src, morphisms[g].dst);
            compose[g][f] = Some(match (s, d) {
                (0, 0) => 0,
                (1, 1) => 1,
                (0, 1) => 2,
                _ => 3,
            });
        }
    }
    FiniteCategory::new(objects, morphisms, alloc::vec![0, 1], compose).expect("isomorphism")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn zoo_is_within_bounds() {
        for (name, c) in category_zoo() {
            assert!(c.object_count() <= 3 && c.morphism_count() <= 6, "{name}");
        }
    }

    #[test]
    fn nerve_of_terminal_is_a_point() {
        assert_eq!(nerve(&FiniteCategory::terminal(), 4), FiniteSimplicialSet::constant(1, 4));
    }

    #[test]
    fn nerve_of_arrow_is_the_interval() {
        let arrow = FiniteCategory::poset(2, |i, j| i < j).unwrap();
        let n = nerve(&arrow, 4);
        assert_eq!(n.counts(), &[2, 3, 4, 5, 6]);
    }

    #[test]
    fn nerve_commutes_with_coproducts() {
        let arrow = FiniteCategory::poset(2, |i, j| i < j).unwrap();
        let z3 = &category_zoo()[9].1;
        let sum = FiniteCategory::coproduct(&[&arrow, z3]).category;
        assert_eq!(nerve(&sum, 3), nerve(&arrow, 3).disjoint_union(&nerve(z3, 3)).unwrap());
    }

    #[test]
    fn non_transitive_relation_is_rejected() {
        let err = FiniteCategory::poset(3, |i, j| (i, j) == (0, 1) || (i, j) == (1, 2)).unwrap_err();
        assert!(matches!(err, ConeError::NotCategory(_)));
    }

    #[test]
    fn functor_counts() {
        let zoo = category_zoo();
        let get = |name: &str| &zoo.iter().find(|(n, _)| n == name).unwrap().1;
        // Order-preserving maps [2] -> [2].
        assert_eq!(functors(get("chain"), get("chain")).len(), 10);
        // Group homomorphisms Z/3 -> Z/3 and Z/2 -> Z/3.
        assert_eq!(functors(get("Z/3"), get("Z/3")).len(), 3);
        assert_eq!(functors(get("Z/2"), get("Z/3")).len(), 1);
        // An arrow goes to any of the morphisms of the parallel pair.
        assert_eq!(functors(get("arrow"), get("parallel pair")).len(), 4);
        assert_eq!(functors(get("isomorphism"), get("arrow")).len(), 2);
        for f in functors(get("span"), get("chain")) {
            nerve_of_functor(&f, get("span"), get("chain"), 3).unwrap();
        }
    }
}
