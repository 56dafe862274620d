use lambda_kernel::cone::{
    category_zoo, check_cone_nerve, cone, cone_inclusion, diagonal, functors, nerve, nerve_of_functor, pi0,
    BisimplicialSet, FiniteCategory, FiniteSimplicialSet, SimplicialFunctor,
};
use proptest::prelude::*;

fn zoo_index() -> impl Strategy<Value = usize> {
    0..category_zoo().len()
}

/// Components computed from the non-degenerate edges only.
fn components_without_degenerate_edges(x: &FiniteSimplicialSet) -> usize {
    let degenerate: Vec<usize> = x.degeneracy(0, 0).to_vec();
    let mut comp: Vec<usize> = (0..x.count(0)).collect();
    loop {
        let mut changed = false;
        for e in (0..x.count(1)).filter(|e| !degenerate.contains(e)) {
            let (a, b) = (x.face(1, 1)[e], x.face(1, 0)[e]);
            let m = comp[a].min(comp[b]);
            if comp[a] != m || comp[b] != m {
                comp[a] = m;
                comp[b] = m;
                changed = true;
            }
        }
        if !changed {
            break;
        }
    }
    let mut roots: Vec<usize> = comp.clone();
    roots.sort_unstable();
    roots.dedup();
    roots.len()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(32))]

    #[test]
    fn cone_contains_the_target(s in zoo_index(), t in zoo_index(), pick in any::<prop::sample::Index>()) {
        let zoo = category_zoo();
        let (sc, tc) = (&zoo[s].1, &zoo[t].1);
        let all = functors(sc, tc);
        prop_assume!(!all.is_empty());
        let g = &all[pick.index(all.len())];
        let f = nerve_of_functor(g, sc, tc, 3).unwrap();
        let c = cone(&f).unwrap();
        prop_assert!(cone_inclusion(&f, &c).is_ok());
    }

    #[test]
    fn degenerate_edges_do_not_change_components(s in zoo_index(), t in zoo_index()) {
        let zoo = category_zoo();
        let x = nerve(&zoo[s].1, 2).disjoint_union(&nerve(&zoo[t].1, 2)).unwrap();
        prop_assert_eq!(pi0(&x).unwrap().len(), components_without_degenerate_edges(&x));
    }

    #[test]
    fn nerve_commutes_with_coproducts(s in zoo_index(), t in zoo_index()) {
        let zoo = category_zoo();
        let sum = FiniteCategory::coproduct(&[&zoo[s].1, &zoo[t].1]).category;
        prop_assert_eq!(nerve(&sum, 3), nerve(&zoo[s].1, 3).disjoint_union(&nerve(&zoo[t].1, 3)).unwrap());
    }

    #[test]
    fn diagonal_commutes_with_disjoint_union(s in zoo_index(), t in zoo_index()) {
        let zoo = category_zoo();
        let (a, b) = (nerve(&zoo[s].1, 3), nerve(&zoo[t].1, 3));
        let lhs = diagonal(&BisimplicialSet::constant_rows(&a.disjoint_union(&b).unwrap(), 3)).unwrap();
        let rhs = diagonal(&BisimplicialSet::constant_rows(&a, 3)).unwrap()
            .disjoint_union(&diagonal(&BisimplicialSet::constant_rows(&b, 3)).unwrap()).unwrap();
        prop_assert_eq!(lhs, rhs);
    }
}

#[test]
fn cone_and_nerve_commute_on_the_whole_zoo() {
    let zoo = category_zoo();
    for (_, s) in &zoo {
        for (_, t) in &zoo {
            for g in functors(s, t) {
                let f = SimplicialFunctor::constant(&g, s, t, 3).unwrap();
                assert!(check_cone_nerve(&f).unwrap());
            }
        }
    }
}
