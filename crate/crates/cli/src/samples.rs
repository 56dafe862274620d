//! Seeded generators for randomized checks. Every generator draws from its own ChaCha
//! stream, so adding draws to one check never shifts the samples of another.

use lambda_kernel::dk::{ChainMap, Complex, SplitFlag};
use lambda_kernel::exact::{IntMatrix, Integers};
use lambda_kernel::lambda::{WittElement, WittRing};
use num_bigint::BigInt;
use rand::Rng;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::error::CliError;
use crate::formats::ring::SpecRing;

/// Streams of the seeded generator, one per kind of sample.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
#[repr(u64)]
pub enum Stream {
    RingElements = 1,
    Witt = 2,
    Complexes = 3,
    TwoSided = 4,
    Derived = 5,
    Flags = 6,
}

pub fn rng(seed: u64, stream: Stream) -> ChaCha8Rng {
    let mut r = ChaCha8Rng::seed_from_u64(seed);
    r.set_stream(stream as u64);
    r
}

/// A random polynomial with at most three terms, small coefficients and exponents.
pub fn random_poly_text(rng: &mut impl Rng, gens: &[(String, bool)], rational: bool) -> String {
    let terms = rng.gen_range(1..=3);
    let mut parts = Vec::with_capacity(terms);
    for _ in 0..terms {
        let mut c: i64 = rng.gen_range(1..=2);
        if rng.gen_bool(0.5) {
            c = -c;
        }
        let mut factors = vec![if rational && rng.gen_bool(0.25) { format!("{}/2", c) } else { c.to_string() }];
        for (g, invertible) in gens {
            let e: i32 = if *invertible { rng.gen_range(-1..=2) } else { rng.gen_range(0..=2) };
            // Keep total degrees small so that high λ-powers stay cheap.
            if e != 0 && factors.len() < 3 {
                factors.push(format!("{}^{}", g, e));
            }
        }
        parts.push(format!("({})", factors.join("*")));
    }
    parts.join(" + ")
}

pub fn ring_samples<R: SpecRing>(ring: &R, count: usize, seed: u64) -> Result<Vec<R::Elem>, CliError> {
    let mut r = rng(seed, Stream::RingElements);
    let gens = ring.sample_generators();
    (0..count)
        .map(|_| {
            let text = if gens.is_empty() {
                r.gen_range(-4i64..=4).to_string()
            } else {
                random_poly_text(&mut r, &gens, ring.rational())
            };
            ring.parse_element(&text).map_err(CliError::from)
        })
        .collect()
}

/// Elements `1 + a_1 t + ... + a_d t^d` with entries in `-2..=2`, mostly sparse.
pub fn witt_samples(ring: &WittRing<Integers>, count: usize, seed: u64) -> Vec<WittElement<BigInt>> {
    let mut r = rng(seed, Stream::Witt);
    (0..count)
        .map(|_| {
            let mut coeffs = vec![BigInt::from(1)];
            for _ in 0..ring.degree() {
                let a: i64 = if r.gen_bool(0.5) { r.gen_range(-2..=2) } else { 0 };
                coeffs.push(a.into());
            }
            ring.element(coeffs).expect("constant term 1 within the degree")
        })
        .collect()
}

/// A unit lower times a unit upper triangular matrix, with its inverse.
pub fn unimodular(rng: &mut impl Rng, n: usize) -> (IntMatrix, IntMatrix) {
    let mut lower = IntMatrix::identity(n);
    let mut upper = IntMatrix::identity(n);
    for i in 0..n {
        for j in 0..i {
            lower.set(i, j, rng.gen_range(-2i64..=2).into());
            upper.set(j, i, rng.gen_range(-2i64..=2).into());
        }
    }
    let u = lower.mul(&upper);
    let inv = u.to_rational().inverse().and_then(|m| m.to_integer()).expect("unimodular");
    (u, inv)
}

/// Conjugates every degree of `c` by a random unimodular change of basis.
fn scramble(rng: &mut impl Rng, c: &Complex) -> (Complex, Vec<(IntMatrix, IntMatrix)>) {
    if c.is_zero() {
        return (c.clone(), Vec::new());
    }
    let units: Vec<(IntMatrix, IntMatrix)> = c.degrees().map(|n| unimodular(rng, c.rank(n))).collect();
    let diffs = (0..units.len() - 1).map(|i| units[i + 1].0.mul(&c.diff(c.lo() + i as i64)).mul(&units[i].1)).collect();
    (Complex::new(c.lo(), c.ranks().to_vec(), diffs).expect("conjugate of a complex"), units)
}

/// A random complex in degrees `lo..=hi` with every rank at most `max_rank`: a sum of
/// copies of `Z` and of `Z --a--> Z` with `|a| <= 3` (or `a = ±1` when `acyclic`), scrambled.
pub fn random_complex(rng: &mut impl Rng, lo: i64, hi: i64, max_rank: usize, acyclic: bool) -> Complex {
    let len = (hi - lo + 1) as usize;
    let mut ranks = vec![0usize; len];
    let mut arrows = Vec::new();
    for _ in 0..rng.gen_range(0..=2 * len) {
        let i = rng.gen_range(0..len);
        if acyclic || (i + 1 < len && rng.gen_bool(0.5)) {
            if i + 1 >= len || ranks[i] == max_rank || ranks[i + 1] == max_rank {
                continue;
            }
            let mut a: i64 = if acyclic { 1 } else { rng.gen_range(0..=3) };
            if rng.gen_bool(0.5) {
                a = -a;
            }
            arrows.push((i, ranks[i], ranks[i + 1], a));
            ranks[i] += 1;
            ranks[i + 1] += 1;
        } else if ranks[i] < max_rank {
            ranks[i] += 1;
        }
    }
    let mut diffs: Vec<IntMatrix> = (0..len - 1).map(|i| IntMatrix::zeros(ranks[i + 1], ranks[i])).collect();
    for (i, src, dst, a) in arrows {
        diffs[i].set(dst, src, a.into());
    }
    let c = Complex::new(lo, ranks, diffs).expect("a sum of two-term complexes");
    scramble(rng, &c).0
}

/// `K' ↣ K` with `K ≅ K' ⊕ K''` after a random change of basis of `K`.
pub fn random_split_flag(rng: &mut impl Rng, lo: i64, hi: i64, max_rank: usize) -> SplitFlag {
    let sub = random_complex(rng, lo, hi, max_rank, false);
    let quotient = random_complex(rng, lo, hi, max_rank, false);
    let sum = sub.direct_sum(&quotient);
    let (total, units) = scramble(rng, &sum);
    let sub_rank = |n: i64| sub.rank(n);
    let quot_rank = |n: i64| quotient.rank(n);
    let unit = |n: i64| &units[(n - total.lo()) as usize];
    let inclusion = sub
        .degrees()
        .map(|n| unit(n).0.mul(&IntMatrix::identity(sub_rank(n)).vstack(&IntMatrix::zeros(quot_rank(n), sub_rank(n)))))
        .collect();
    let retraction = total
        .degrees()
        .map(|n| IntMatrix::identity(sub_rank(n)).hstack(&IntMatrix::zeros(sub_rank(n), quot_rank(n))).mul(&unit(n).1))
        .collect();
    let inclusion = ChainMap::new(sub.clone(), total, inclusion).expect("a split inclusion");
    SplitFlag::new(inclusion, retraction).expect("r ∘ i = id")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn streams_are_reproducible() {
        let a: Vec<u32> = (0..4).map(|_| rng(7, Stream::Flags).gen()).collect();
        let b: Vec<u32> = (0..4).map(|_| rng(7, Stream::Flags).gen()).collect();
        assert_eq!(a, b);
        assert_ne!(rng(7, Stream::Flags).gen::<u64>(), rng(7, Stream::Witt).gen::<u64>());
    }

    #[test]
    fn random_complexes_respect_the_rank_cap() {
        let mut r = rng(3, Stream::Complexes);
        for _ in 0..50 {
            let c = random_complex(&mut r, -2, 0, 3, false);
            assert!(c.is_zero() || c.ranks().iter().all(|&n| n <= 3));
            let a = random_complex(&mut r, -1, 1, 3, true);
            assert!(a.is_acyclic());
        }
    }

    #[test]
    fn split_flags_have_the_right_quotient() {
        let mut r = rng(5, Stream::Flags);
        for _ in 0..20 {
            let f = random_split_flag(&mut r, -1, 1, 2);
            assert_eq!(f.total().euler_char(), f.sub().euler_char() + f.quotient().euler_char());
        }
    }
}
