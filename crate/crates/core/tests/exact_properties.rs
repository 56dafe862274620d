use lambda_kernel::exact::{decompose_symmetric, recompose, smith_normal_form, Block, IntMatrix, LaurentPoly};
use num_traits::Zero;
use proptest::prelude::*;

/// A polynomial in `x1..xn` from `(coefficient, exponents)` terms.
fn poly(n: usize, terms: &[(i64, Vec<i32>)]) -> LaurentPoly {
    let names: Vec<String> = (1..=n).map(|i| format!("x{}", i)).collect();
    let mut p = LaurentPoly::zero();
    for (c, e) in terms {
        let factors: Vec<(&str, i32)> = names.iter().map(String::as_str).zip(e.iter().copied()).collect();
        p = p.add(&LaurentPoly::monomial(&factors, (*c).into()));
    }
    p
}

fn permutations(n: usize) -> Vec<Vec<usize>> {
    if n == 0 {
        return vec![Vec::new()];
    }
    let mut out = Vec::new();
    for p in permutations(n - 1) {
        for i in 0..=p.len() {
            let mut q = p.clone();
            q.insert(i, n - 1);
            out.push(q);
        }
    }
    out
}

/// Sum over all permutations of the variables.
fn symmetrize(n: usize, terms: &[(i64, Vec<i32>)]) -> LaurentPoly {
    let mut acc = LaurentPoly::zero();
    for perm in permutations(n) {
        let moved: Vec<(i64, Vec<i32>)> =
            terms.iter().map(|(c, e)| (*c, perm.iter().map(|&i| e[i]).collect())).collect();
        acc = acc.add(&poly(n, &moved));
    }
    acc
}

fn terms(n: usize, max_exp: i32, neg: bool) -> impl Strategy<Value = Vec<(i64, Vec<i32>)>> {
    let lo = if neg { -max_exp } else { 0 };
    prop::collection::vec((-3i64..=3, prop::collection::vec(lo..=max_exp, n)), 1..=3)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn symmetric_decomposition_round_trips(
        (n, ts) in (1usize..=4).prop_flat_map(|n| (Just(n), terms(n, 2, false)))
    ) {
        // Keep total degrees at most 6.
        let ts: Vec<_> = ts.into_iter().filter(|(_, e)| e.iter().sum::<i32>() <= 6).collect();
        let p = symmetrize(n, &ts);
        let blocks = [Block::numbered("e", "x", n)];
        let q = decompose_symmetric(&p, &blocks).unwrap();
        prop_assert_eq!(recompose(&q, &blocks).unwrap(), p);
    }

    #[test]
    fn two_blocks_round_trip(a in terms(2, 2, false), b in terms(2, 2, false)) {
        let p = symmetrize(2, &a).mul(&symmetrize(2, &b).rename(|v| v.replace('x', "y")));
        let blocks = [Block::numbered("e", "x", 2), Block::numbered("f", "y", 2)];
        let q = decompose_symmetric(&p, &blocks).unwrap();
        prop_assert_eq!(recompose(&q, &blocks).unwrap(), p);
    }

    #[test]
    fn printing_then_parsing_is_the_identity(
        (n, ts) in (1usize..=4).prop_flat_map(|n| (Just(n), terms(n, 3, true)))
    ) {
        let p = poly(n, &ts);
        prop_assert_eq!(p.to_string().parse::<LaurentPoly>().unwrap(), p);
    }

    #[test]
    fn smith_form_diagonalizes(rows in 1usize..=4, cols in 1usize..=4, seed in prop::collection::vec(-6i64..=6, 16)) {
        let a = IntMatrix::from_i64(rows, cols, &seed[..rows * cols]);
        let s = smith_normal_form(&a);
        prop_assert!(s.u.is_unimodular() && s.v.is_unimodular());
        prop_assert_eq!(s.u.mul(&a).mul(&s.v), s.d.clone());
        for i in 0..rows {
            for j in 0..cols {
                prop_assert!(i == j || s.d.get(i, j).is_zero());
            }
        }
        let f = s.invariant_factors();
        for w in f.windows(2) {
            prop_assert!((&w[1] % &w[0]).is_zero());
        }
    }
}
