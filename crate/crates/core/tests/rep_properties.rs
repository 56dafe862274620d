use lambda_kernel::exact::{IntMatrix, LaurentPoly, Ring};
use lambda_kernel::lambda::{verify_lambda, LambdaRing};
use lambda_kernel::rep::{substitute_classes, AbelianGroup, GroupRing, MonoidRepRing, WeylAction};
use num_bigint::BigInt;
use proptest::prelude::*;

const GROUPS: [&str; 3] = ["free=1", "torsion=3", "free=1; torsion=2"];

fn sample(ring: &GroupRing<BigInt>, terms: &[(i64, Vec<i32>)]) -> LaurentPoly {
    terms.iter().fold(ring.zero(), |acc, (c, e)| ring.add(&acc, &ring.scale(&ring.group_element(e), &BigInt::from(*c))))
}

/// Up to four terms with coefficients in [-3, 3] and small exponents.
fn terms(width: usize) -> impl Strategy<Value = Vec<(i64, Vec<i32>)>> {
    prop::collection::vec((-3i64..=3, prop::collection::vec(-1i32..=2, width)), 1..=4)
}

fn combination(basis: &[LaurentPoly], ring: &GroupRing<BigInt>, coeffs: &[i64]) -> LaurentPoly {
    basis.iter().zip(coeffs).fold(ring.zero(), |acc, (b, &c)| ring.add(&acc, &ring.scale(b, &BigInt::from(c))))
}

/// Monomials of weight at most two in the classes of the rank-two monoid ring.
const LOW_WEIGHT: [&str; 8] = ["1", "a1", "b1", "a1^2", "a2", "a1*b1", "b1^2", "b2"];

proptest! {
    #![proptest_config(ProptestConfig::with_cases(6))]

    #[test]
    fn group_rings_are_lambda_rings(g in 0usize..GROUPS.len(), a in terms(2), b in terms(2)) {
        let group = AbelianGroup::parse(GROUPS[g]).unwrap();
        let width = group.coordinates();
        let ring = GroupRing::<BigInt>::new(group);
        let cut = |t: &[(i64, Vec<i32>)]| t.iter().map(|(c, e)| (*c, e[..width].to_vec())).collect::<Vec<_>>();
        let samples = [sample(&ring, &cut(&a)), sample(&ring, &cut(&b))];
        let report = verify_lambda(&ring, &samples, 4, 2).unwrap();
        prop_assert!(report.passed(), "{}", report);
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn lambda_preserves_weyl_invariants(coeffs in prop::collection::vec(-2i64..=2, 6), k in 1usize..=3) {
        // S_3 permuting three coordinates, generated by two transpositions.
        let ring = GroupRing::<BigInt>::new(AbelianGroup::parse("free=3").unwrap());
        let swap01 = IntMatrix::from_i64(3, 3, &[0, 1, 0, 1, 0, 0, 0, 0, 1]);
        let swap12 = IntMatrix::from_i64(3, 3, &[1, 0, 0, 0, 0, 1, 0, 1, 0]);
        let w = WeylAction::new(&ring, vec![swap01, swap12]).unwrap();
        prop_assert_eq!(w.order(), 6);
        let x = combination(&w.invariants(&ring, 1), &ring, &coeffs);
        prop_assert!(w.is_invariant(&ring, &x));
        prop_assert!(w.is_invariant(&ring, &ring.lambda(k, &x).unwrap()));
    }

    #[test]
    fn monoid_classes_match_sums_of_lines(coeffs in prop::collection::vec(-2i64..=2, LOW_WEIGHT.len()), k in 1usize..=3) {
        let monoid = MonoidRepRing::new(2).unwrap();
        let e = LOW_WEIGHT.iter().zip(&coeffs).fold(LaurentPoly::zero(), |acc, (t, &c)| {
            acc.add(&monoid.parse(t).unwrap().scale(&BigInt::from(c)))
        });
        let target = GroupRing::<BigInt>::new(AbelianGroup::parse("free=4").unwrap());
        let (x, y) = (target.parse("t1 + t2").unwrap(), target.parse("t3 + t4").unwrap());
        let first: Vec<_> = (1..=2).map(|i| target.lambda(i, &x).unwrap()).collect();
        let second: Vec<_> = (1..=2).map(|i| target.lambda(i, &y).unwrap()).collect();
        let image = substitute_classes(&e, &first, &second, &target).unwrap();
        let via_monoid = substitute_classes(&monoid.lambda(k, &e).unwrap(), &first, &second, &target).unwrap();
        prop_assert_eq!(via_monoid, target.lambda(k, &image).unwrap());
    }

    #[test]
    fn substitution_is_a_ring_map(a in prop::collection::vec(-2i64..=2, LOW_WEIGHT.len()), b in prop::collection::vec(-2i64..=2, LOW_WEIGHT.len())) {
        let monoid = MonoidRepRing::new(2).unwrap();
        let build = |cs: &[i64]| LOW_WEIGHT.iter().zip(cs).fold(LaurentPoly::zero(), |acc, (t, &c)| {
            acc.add(&monoid.parse(t).unwrap().scale(&BigInt::from(c)))
        });
        let (e, f) = (build(&a), build(&b));
        let target = GroupRing::<BigInt>::new(AbelianGroup::parse("free=2; torsion=2").unwrap());
        let first = [target.parse("t1 + s1").unwrap(), target.parse("t1*s1").unwrap()];
        let second = [target.parse("2*t2 - 1").unwrap(), target.parse("t2^2 - 2*t2").unwrap()];
        let sub = |p: &LaurentPoly| substitute_classes(p, &first, &second, &target).unwrap();
        prop_assert_eq!(sub(&e.add(&f)), target.add(&sub(&e), &sub(&f)));
        prop_assert_eq!(sub(&monoid.mul(&e, &f)), target.mul(&sub(&e), &sub(&f)));
    }
}
