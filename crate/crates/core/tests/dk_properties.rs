use lambda_kernel::dk::{
    denormalize, denormalize_v, derived_lambda, dn_n_comparison, embed_i, embed_i_default, exterior_power_matrix,
    quasi_iso_check, ChainMap, Complex, Pairing,
};
use lambda_kernel::exact::{binomial_usize, IntMatrix};
use proptest::prelude::*;

/// A summand of a random complex: `Z` in one degree, or `Z --a--> Z` out of that degree.
#[derive(Clone, Debug)]
enum Piece {
    Line(i64),
    Arrow(i64, i64),
}

fn piece(lo: i64, hi: i64) -> impl Strategy<Value = Piece> {
    prop_oneof![(lo..=hi).prop_map(Piece::Line), (lo..hi, -3i64..=3).prop_map(|(d, a)| Piece::Arrow(d, a)),]
}

/// Unit lower times unit upper triangular, with its inverse.
fn unimodular(n: usize, entries: &[i64]) -> (IntMatrix, IntMatrix) {
    let mut lower = IntMatrix::identity(n);
    let mut upper = IntMatrix::identity(n);
    let mut it = entries.iter().cycle();
    for i in 0..n {
        for j in 0..i {
            lower.set(i, j, (*it.next().unwrap()).into());
            upper.set(j, i, (*it.next().unwrap()).into());
        }
    }
    let u = lower.mul(&upper);
    let inv = u.to_rational().inverse().unwrap().to_integer().unwrap();
    (u, inv)
}

/// Assembles the pieces in degrees `lo..=hi`, `lo < hi`, and scrambles each degree by a unimodular basis change.
fn assemble(lo: i64, hi: i64, pieces: &[Piece], scramble: &[i64]) -> Complex {
    let len = (hi - lo + 1) as usize;
    let mut ranks = vec![0usize; len];
    let mut arrows = Vec::new();
    for p in pieces {
        match *p {
            Piece::Line(d) => ranks[(d - lo) as usize] += 1,
            Piece::Arrow(d, a) => {
                let i = (d - lo) as usize;
                arrows.push((i, ranks[i], ranks[i + 1], a));
                ranks[i] += 1;
                ranks[i + 1] += 1;
            }
        }
    }
    let mut diffs: Vec<IntMatrix> =
        (0..len.saturating_sub(1)).map(|i| IntMatrix::zeros(ranks[i + 1], ranks[i])).collect();
    for (i, src, dst, a) in arrows {
        diffs[i].set(dst, src, a.into());
    }
    let scramble = if scramble.is_empty() { &[0][..] } else { scramble };
    let units: Vec<_> = ranks.iter().map(|&r| unimodular(r, scramble)).collect();
    let diffs = diffs.iter().enumerate().map(|(i, d)| units[i + 1].0.mul(d).mul(&units[i].1)).collect();
    Complex::new(lo, ranks, diffs).unwrap()
}

fn complex_in(lo: i64, hi: i64, max_pieces: usize) -> impl Strategy<Value = Complex> {
    (prop::collection::vec(piece(lo, hi), 0..=max_pieces), prop::collection::vec(-2i64..=2, 0..6))
        .prop_map(move |(pieces, scramble)| assemble(lo, hi, &pieces, &scramble))
}

fn acyclic_in(lo: i64, hi: i64) -> impl Strategy<Value = Complex> {
    (prop::collection::vec(lo..hi, 0..=2), prop::collection::vec(-2i64..=2, 0..6)).prop_map(move |(ds, scramble)| {
        let pieces: Vec<Piece> = ds.into_iter().map(|d| Piece::Arrow(d, 1)).collect();
        assemble(lo, hi, &pieces, &scramble)
    })
}

fn int_matrix(rows: usize, cols: usize) -> impl Strategy<Value = IntMatrix> {
    prop::collection::vec(-3i64..=3, rows * cols).prop_map(move |v| IntMatrix::from_i64(rows, cols, &v))
}

/// Inclusion of `k` into `k ⊕ a`.
fn inclusion(k: &Complex, a: &Complex) -> ChainMap {
    let total = k.direct_sum(a);
    let maps =
        k.degrees().map(|n| IntMatrix::identity(k.rank(n)).vstack(&IntMatrix::zeros(a.rank(n), k.rank(n)))).collect();
    ChainMap::new(k.clone(), total, maps).unwrap()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn normalization_inverts_denormalization(c in complex_in(-2, 0, 4)) {
        let x = denormalize(&c, 4).unwrap();
        prop_assert_eq!(x.normalize(), c);
    }

    #[test]
    fn cosimplicial_normalization_inverts_denormalization(c in complex_in(0, 2, 4)) {
        let y = denormalize_v(&c, 4).unwrap();
        prop_assert_eq!(y.normalize(), c);
    }

    #[test]
    fn comparison_is_a_natural_isomorphism(c in complex_in(-1, 0, 3)) {
        // Row 0 of Λ² i(C) is a simplicial module not presented as a denormalization.
        let x = embed_i(&c, 3, 0).unwrap().exterior_power(2).unwrap().row(0).clone();
        let (dn, maps) = dn_n_comparison(&x).unwrap();
        for n in 0..=x.top() {
            prop_assert!(maps[n].is_unimodular());
            for i in 0..=n {
                if n > 0 {
                    prop_assert_eq!(x.face(n, i).mul(&maps[n]), maps[n - 1].mul(dn.face(n, i)));
                }
                if n < x.top() {
                    prop_assert_eq!(x.degeneracy(n, i).mul(&maps[n]), maps[n + 1].mul(dn.degeneracy(n, i)));
                }
            }
        }
    }

    #[test]
    fn tot_normalize_embed_is_identity(c in complex_in(-2, 2, 5)) {
        prop_assert_eq!(embed_i_default(&c).unwrap().tot_normalized().unwrap(), c);
    }

    #[test]
    fn exterior_power_of_matrices_is_functorial(a in int_matrix(3, 4), b in int_matrix(4, 3), k in 0usize..=3) {
        prop_assert_eq!(exterior_power_matrix(&a.mul(&b), k), exterior_power_matrix(&a, k).mul(&exterior_power_matrix(&b, k)));
    }

    #[test]
    fn derived_first_power_is_the_complex(c in complex_in(-1, 1, 3)) {
        prop_assert_eq!(derived_lambda(1, &c).unwrap(), c);
    }

    #[test]
    fn derived_square_respects_quasi_isomorphisms(c in complex_in(-1, 1, 2), a in acyclic_in(-1, 1)) {
        let f = inclusion(&c, &a);
        prop_assert!(quasi_iso_check(&f));
        let lhs = derived_lambda(2, &c).unwrap();
        let rhs = derived_lambda(2, f.target()).unwrap();
        let nonzero = |k: &Complex| k.homology().into_iter().filter(|h| !h.is_zero()).collect::<Vec<_>>();
        prop_assert_eq!(nonzero(&lhs), nonzero(&rhs));
    }

    #[test]
    fn derived_euler_characteristic_is_binomial(c in complex_in(-1, 1, 3), k in 0usize..=3) {
        let chi = c.euler_char();
        let expected = if chi >= 0 {
            binomial_usize(chi as usize, k) as i64
        } else {
            // C(-m, k) = (-1)^k C(m + k - 1, k)
            let v = binomial_usize((-chi) as usize + k - 1, k) as i64;
            if k % 2 == 0 { v } else { -v }
        };
        prop_assert_eq!(derived_lambda(k, &c).unwrap().euler_char(), expected);
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(8))]

    #[test]
    fn shuffle_and_face_maps_pair_up(a in complex_in(-1, 1, 2), b in complex_in(-1, 1, 2)) {
        let (p, q) = (embed_i(&a, 3, 3).unwrap(), embed_i(&b, 3, 3).unwrap());
        let pairing = Pairing::new(&p, &q).unwrap();
        prop_assert_eq!(pairing.tensor_of_tots(), a.tensor(&b));
        let report = pairing.check().unwrap();
        prop_assert!(report.passed(), "{:?}", report);
    }
}
