//! Finite groups of lattice automorphisms acting on group rings, and their invariants.

use alloc::collections::{BTreeMap, BTreeSet};
use alloc::format;
use alloc::vec::Vec;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use super::group::GroupRing;
use crate::exact::{IntMatrix, Poly, Scalar};
use crate::lambda::LambdaError;

/// Largest group the enumeration will produce.
pub const WEYL_CAP: usize = 10_000;

/// A finite group generated by automorphisms of the exponent lattice (acting on columns).
#[derive(Clone, Debug)]
pub struct WeylAction {
    generators: Vec<IntMatrix>,
    elements: Vec<IntMatrix>,
}

fn reduce(m: &IntMatrix, free: usize, torsion: &[u32]) -> IntMatrix {
    let mut m = m.clone();
    for (i, &d) in torsion.iter().enumerate() {
        let d = BigInt::from(d);
        for j in 0..m.cols() {
            let v = m.get(free + i, j).clone();
            let r = ((v % &d) + &d) % &d;
            m.set(free + i, j, r);
        }
    }
    m
}

impl WeylAction {
    /// Validates the generators against the ring's group and enumerates the group.
    pub fn new<C: Scalar>(ring: &GroupRing<C>, generators: Vec<IntMatrix>) -> Result<Self, LambdaError> {
        Self::with_cap(ring, generators, WEYL_CAP)
    }

    pub fn with_cap<C: Scalar>(
        ring: &GroupRing<C>,
        generators: Vec<IntMatrix>,
        cap: usize,
    ) -> Result<Self, LambdaError> {
        let g = ring.group();
        let (free, torsion) = (g.free_rank(), g.torsion());
        let n = g.coordinates();
        for (idx, m) in generators.iter().enumerate() {
            if m.rows() != n || m.cols() != n {
                return Err(LambdaError::Invalid(format!("generator {} is not {}x{}", idx + 1, n, n)));
            }
            for i in 0..free {
                for j in free..n {
                    if !m.get(i, j).is_zero() {
                        return Err(LambdaError::Invalid(format!(
                            "generator {} maps torsion into the free part",
                            idx + 1
                        )));
                    }
                }
            }
            for (ti, &d) in torsion.iter().enumerate() {
                for (tj, &dj) in torsion.iter().enumerate() {
                    let v = m.get(free + ti, free + tj) * BigInt::from(dj);
                    if !(v % BigInt::from(d)).is_zero() {
                        return Err(LambdaError::Invalid(format!(
                            "generator {} does not respect the torsion orders",
                            idx + 1
                        )));
                    }
                }
            }
            let free_block =
                m.select_rows(&(0..free).collect::<Vec<_>>()).select_columns(&(0..free).collect::<Vec<_>>());
            if free > 0 && !free_block.is_unimodular() {
                return Err(LambdaError::Invalid(format!("generator {} is not invertible over the integers", idx + 1)));
            }
        }
        let generators: Vec<IntMatrix> = generators.iter().map(|m| reduce(m, free, torsion)).collect();
        let id = IntMatrix::identity(n);
        let mut seen: BTreeSet<Vec<BigInt>> = BTreeSet::new();
        let key = |m: &IntMatrix| (0..n).flat_map(|i| m.row(i).to_vec()).collect::<Vec<_>>();
        seen.insert(key(&id));
        let mut elements = alloc::vec![id];
        let mut frontier = 0;
        while frontier < elements.len() {
            let cur = elements[frontier].clone();
            frontier += 1;
            for gen in &generators {
                let next = reduce(&gen.mul(&cur), free, torsion);
                if seen.insert(key(&next)) {
                    elements.push(next);
                    if elements.len() > cap {
                        return Err(LambdaError::Index(format!("the generated group exceeds {} elements", cap)));
                    }
                }
            }
        }
        Ok(WeylAction { generators, elements })
    }

    pub fn order(&self) -> usize {
        self.elements.len()
    }

    /// The image of `x` under the lattice automorphism `w`.
    pub fn act<C: Scalar>(ring: &GroupRing<C>, w: &IntMatrix, x: &Poly<C>) -> Poly<C> {
        let mut out = Poly::zero();
        for (m, c) in x.terms() {
            let e = ring.exponents(x, m);
            let image: Vec<i32> = (0..e.len())
                .map(|i| {
                    let s: BigInt = (0..e.len()).map(|j| w.get(i, j) * BigInt::from(e[j])).sum();
                    i32::try_from(s).expect("exponents stay small")
                })
                .collect();
            out = out.add(&ring.group_element(&image).scale(c));
        }
        out
    }

    pub fn is_invariant<C: Scalar>(&self, ring: &GroupRing<C>, x: &Poly<C>) -> bool {
        self.generators.iter().all(|w| &Self::act(ring, w, x) == x)
    }

    fn orbit<C: Scalar>(&self, ring: &GroupRing<C>, e: &[i32]) -> BTreeSet<Vec<i32>> {
        let g = ring.group_element(e);
        self.elements
            .iter()
            .map(|w| {
                let img = Self::act(ring, w, &g);
                let (m, _) = img.leading().expect("a group element");
                ring.exponents(&img, m)
            })
            .collect()
    }

    /// Orbit sums of group elements whose free exponents have absolute sum `<= bound`,
    /// one per orbit, ordered by their least exponent vector.
    pub fn invariants<C: Scalar>(&self, ring: &GroupRing<C>, bound: u32) -> Vec<Poly<C>> {
        let grp = ring.group();
        let mut ranges: Vec<Vec<i32>> = Vec::new();
        for _ in 0..grp.free_rank() {
            ranges.push((-(bound as i32)..=bound as i32).collect());
        }
        for &d in grp.torsion() {
            ranges.push((0..d as i32).collect());
        }
        let mut reps: BTreeMap<Vec<i32>, Poly<C>> = BTreeMap::new();
        let mut cur = alloc::vec![0i32; ranges.len()];
        fn rec<C: Scalar>(
            i: usize,
            ranges: &[Vec<i32>],
            cur: &mut Vec<i32>,
            free: usize,
            bound: u32,
            f: &mut dyn FnMut(&[i32]),
        ) {
            if i == ranges.len() {
                if cur[..free].iter().map(|x| x.unsigned_abs()).sum::<u32>() <= bound {
                    f(cur);
                }
                return;
            }
            for &v in &ranges[i] {
                cur[i] = v;
                rec::<C>(i + 1, ranges, cur, free, bound, f);
            }
        }
        let free = grp.free_rank();
        rec::<C>(0, &ranges, &mut cur, free, bound, &mut |e| {
            let orbit = self.orbit(ring, e);
            let least = orbit.iter().next().expect("nonempty").clone();
            reps.entry(least)
                .or_insert_with(|| orbit.iter().fold(Poly::zero(), |acc, v| acc.add(&ring.group_element(v))));
        });
        reps.into_values().collect()
    }

    /// The averaging projector `(1/|W|) Σ_w w·x`.
    pub fn average(&self, ring: &GroupRing<BigRational>, x: &Poly<BigRational>) -> Poly<BigRational> {
        let total = self.elements.iter().fold(Poly::zero(), |acc, w| acc.add(&Self::act(ring, w, x)));
        total.scale(&BigRational::new(BigInt::one(), BigInt::from(self.order())))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::LaurentPoly;
    use crate::lambda::LambdaRing;
    use crate::rep::AbelianGroup;

    fn gl2() -> (GroupRing<BigInt>, WeylAction) {
        let r = GroupRing::new(AbelianGroup::parse("free=2").unwrap());
        let swap = IntMatrix::from_i64(2, 2, &[0, 1, 1, 0]);
        let w = WeylAction::new(&r, alloc::vec![swap]).unwrap();
        (r, w)
    }

    #[test]
    fn symmetric_group_on_two_coordinates() {
        let (r, w) = gl2();
        assert_eq!(w.order(), 2);
        let inv = w.invariants(&r, 2);
        assert!(inv.contains(&r.parse("t1 + t2").unwrap()));
        assert!(inv.contains(&r.parse("t1*t2").unwrap()));
        assert!(!w.is_invariant(&r, &r.parse("t1 - t2").unwrap()));
        for x in &inv {
            for k in 1..=3 {
                assert!(w.is_invariant(&r, &r.lambda(k, x).unwrap()));
            }
        }
    }

    #[test]
    fn sl2_torus_orbits() {
        let r = GroupRing::<BigInt>::new(AbelianGroup::parse("free=1").unwrap());
        let w = WeylAction::new(&r, alloc::vec![IntMatrix::from_i64(1, 1, &[-1])]).unwrap();
        let inv = w.invariants(&r, 3);
        let expect: Vec<LaurentPoly> =
            ["t1^-3 + t1^3", "t1^-2 + t1^2", "t1^-1 + t1", "1"].iter().map(|s| s.parse().unwrap()).collect();
        assert_eq!(inv, expect);
    }

    #[test]
    fn cap_is_enforced() {
        let r = GroupRing::<BigInt>::new(AbelianGroup::parse("free=2").unwrap());
        // An infinite-order shear.
        let shear = IntMatrix::from_i64(2, 2, &[1, 1, 0, 1]);
        assert!(WeylAction::with_cap(&r, alloc::vec![shear], 50).is_err());
    }

    #[test]
    fn averaging_projects_onto_invariants() {
        let r = GroupRing::<BigRational>::new(AbelianGroup::parse("free=2").unwrap());
        let w = WeylAction::new(&r, alloc::vec![IntMatrix::from_i64(2, 2, &[0, 1, 1, 0])]).unwrap();
        let avg = w.average(&r, &r.parse("t1^2").unwrap());
        assert_eq!(avg, r.parse("1/2*t1^2 + 1/2*t2^2").unwrap());
    }
}
