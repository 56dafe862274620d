use std::sync::OnceLock;

use lambda_kernel::exact::{binomial_usize, Integers, LaurentPoly, QPoly, Ring};
use lambda_kernel::lambda::{
    adams, adams_eigenspace, gamma, lambda_series, verify_lambda, FilteredAlgebra, GeneratorLambda, LambdaRing,
    PresentedRing, WittRing,
};
use lambda_kernel::rep::{AbelianGroup, GroupRing};
use num_bigint::BigInt;
use num_rational::BigRational;
use proptest::prelude::*;

/// `Z[t1^±1] ⊗ Z[Z/2]` with generators `t1`, `s1`.
fn group_ring() -> GroupRing<BigInt> {
    GroupRing::new(AbelianGroup::parse("free=1; torsion=2").unwrap())
}

fn element(terms: &[(i64, i32, i32)]) -> LaurentPoly {
    let ring = group_ring();
    let mut p = ring.zero();
    for &(c, a, b) in terms {
        p = ring.add(&p, &ring.scale(&ring.group_element(&[a, b]), &BigInt::from(c)));
    }
    p
}

fn group_element_terms() -> impl Strategy<Value = Vec<(i64, i32, i32)>> {
    prop::collection::vec((-3i64..=3, -1i32..=2, 0i32..=1), 1..=3)
}

/// `Q[x]/(x - 1)^n` with `x` a line, so that `ψ^k` has eigenvalues `1, k, ..., k^(n-1)`.
fn unipotent(n: usize) -> (PresentedRing<BigRational>, Vec<QPoly>) {
    let mut r = PresentedRing::new();
    r.add_generator("x", GeneratorLambda::Line, None).unwrap();
    // x^n = x^n - (x - 1)^n
    let mut rhs = QPoly::zero();
    for i in 0..n {
        let c = binomial_usize(n, i) as i64 * if (n - i) % 2 == 0 { -1 } else { 1 };
        rhs = rhs.add(&QPoly::monomial(&[("x", i as i32)], BigRational::from_integer(c.into())));
    }
    r.add_relation(&QPoly::monomial(&[("x", n as i32)], BigRational::from_integer(1.into())), &rhs).unwrap();
    let basis = (0..n).map(|i| QPoly::monomial(&[("x", i as i32)], BigRational::from_integer(1.into()))).collect();
    (r, basis)
}

fn coords(x: &QPoly, n: usize) -> Option<Vec<BigRational>> {
    let v: Vec<BigRational> = (0..n as i32).map(|i| x.coefficient(&[("x", i)])).collect();
    let back = v
        .iter()
        .enumerate()
        .fold(QPoly::zero(), |acc, (i, c)| acc.add(&QPoly::monomial(&[("x", i as i32)], c.clone())));
    (&back == x).then_some(v)
}

/// The filtered algebras of `Q[x]/(x - 1)^n` for `n = 2, 3, 4`, through `F^(n-1)`.
fn unipotent_algebras() -> &'static [FilteredAlgebra] {
    static ALGEBRAS: OnceLock<Vec<FilteredAlgebra>> = OnceLock::new();
    ALGEBRAS.get_or_init(|| {
        (2..=4)
            .map(|n| {
                let (r, basis) = unipotent(n);
                let a = FilteredAlgebra::from_ring(&r, &basis, |x| coords(x, n), n * n).unwrap();
                a.gamma_filtration(n - 1).unwrap()
            })
            .collect()
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(16))]

    #[test]
    fn lambda_series_is_a_ring_map(a in group_element_terms(), b in group_element_terms()) {
        let ring = group_ring();
        let (x, y) = (element(&a), element(&b));
        let d = 4;
        let w = WittRing::new(ring.clone(), d);
        let (lx, ly) = (lambda_series(&ring, &x, d).unwrap(), lambda_series(&ring, &y, d).unwrap());
        prop_assert_eq!(lambda_series(&ring, &ring.add(&x, &y), d).unwrap(), w.add(&lx, &ly));
        prop_assert_eq!(lambda_series(&ring, &ring.mul(&x, &y), d).unwrap(), w.mul(&lx, &ly));
    }

    #[test]
    fn adams_operations_compose_and_are_ring_maps(a in group_element_terms(), b in group_element_terms(), k in 1usize..=4, l in 1usize..=4) {
        let ring = group_ring();
        let (x, y) = (element(&a), element(&b));
        let psi = |n: usize, z: &LaurentPoly| adams(&ring, n, z).unwrap();
        prop_assert_eq!(psi(k, &psi(l, &x)), psi(k * l, &x));
        prop_assert_eq!(psi(k, &ring.add(&x, &y)), ring.add(&psi(k, &x), &psi(k, &y)));
        prop_assert_eq!(psi(k, &ring.mul(&x, &y)), ring.mul(&psi(k, &x), &psi(k, &y)));
    }

    #[test]
    fn gamma_is_lambda_shifted_by_units(a in group_element_terms(), n in 0usize..=4) {
        let ring = group_ring();
        let x = element(&a);
        let shift = ring.from_int(&BigInt::from(n.saturating_sub(1))).unwrap();
        prop_assert_eq!(gamma(&ring, n, &x).unwrap(), ring.lambda(n, &ring.add(&x, &shift)).unwrap());
    }

    #[test]
    fn witt_vectors_form_a_lambda_ring(seed in prop::collection::vec(-2i64..=2, 15)) {
        let w = WittRing::new(Integers, 5);
        let samples: Vec<_> = seed
            .chunks(5)
            .map(|c| w.element(std::iter::once(BigInt::from(1)).chain(c.iter().map(|&v| BigInt::from(v))).collect()).unwrap())
            .collect();
        let report = verify_lambda(&w, &samples, 3, 1).unwrap();
        prop_assert!(report.passed(), "{}", report);
    }

    #[test]
    fn eigencomponents_sit_above_the_filtration_index(n in 2usize..=4, m in 0usize..=3, mix in prop::collection::vec(-3i64..=3, 4)) {
        let a = &unipotent_algebras()[n - 2];
        let m = m.min(n - 1);
        let fm = a.filtration(m).unwrap();
        let mut x = vec![BigRational::from_integer(0.into()); n];
        for (v, c) in fm.iter().zip(&mix) {
            for (xi, vi) in x.iter_mut().zip(v) {
                *xi += vi * BigRational::from_integer((*c).into());
            }
        }
        for k in 2..=3 {
            for (weight, _) in adams_eigenspace(a, &x, k).unwrap() {
                prop_assert!(weight >= m, "weight {} component of an element of F^{}", weight, m);
            }
        }
    }
}

#[test]
fn filtrations_are_decreasing_and_multiplicative() {
    for group in ["torsion=2", "torsion=3", "torsion=2,2"] {
        let ring = GroupRing::<BigRational>::new(AbelianGroup::parse(group).unwrap());
        let names: Vec<String> = ring.names().to_vec();
        let mut basis = vec![ring.parse("1").unwrap()];
        for (i, n) in names.iter().enumerate() {
            let order = ring.group().torsion()[i];
            let mut next = Vec::new();
            for b in &basis {
                for e in 1..order as i32 {
                    next.push(ring.mul(b, &ring.parse(&format!("{}^{}", n, e)).unwrap()));
                }
            }
            basis.extend(next);
        }
        let co = |x: &QPoly| -> Option<Vec<BigRational>> {
            Some(
                basis
                    .iter()
                    .map(|b| {
                        let (mono, _) = b.leading().unwrap();
                        let f: Vec<(&str, i32)> =
                            b.vars().iter().map(String::as_str).zip(mono.0.iter().copied()).collect();
                        x.coefficient(&f)
                    })
                    .collect(),
            )
        };
        let mmax = 3;
        let a = FilteredAlgebra::from_ring(&ring, &basis, co, basis.len() * (mmax + 1))
            .unwrap()
            .gamma_filtration(mmax)
            .unwrap();
        for m in 0..mmax {
            for v in a.filtration(m + 1).unwrap() {
                assert_eq!(a.contains(m, v), Some(true), "{}: F^{} ⊄ F^{}", group, m + 1, m);
            }
        }
        for m in 0..=mmax {
            for m2 in 0..=mmax - m {
                for u in a.filtration(m).unwrap() {
                    for v in a.filtration(m2).unwrap() {
                        assert_eq!(a.contains(m + m2, &a.mul(u, v)), Some(true), "{}: F^{} F^{}", group, m, m2);
                    }
                }
            }
        }
    }
}
