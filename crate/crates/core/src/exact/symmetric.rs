//! Elementary symmetric polynomials and the fundamental-theorem decomposition.

use alloc::collections::BTreeMap;
use alloc::string::{String, ToString};
use alloc::vec;
use alloc::vec::Vec;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use super::poly::LaurentPoly;
use super::AlgebraError;

/// A named group of variables; the decomposition introduces `name1..name_n` for it.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Block {
    pub name: String,
    pub vars: Vec<String>,
}

impl Block {
    pub fn new(name: &str, vars: &[String]) -> Self {
        Block { name: name.to_string(), vars: vars.to_vec() }
    }

    /// Block named `name` over variables `prefix1..prefix_n`.
    pub fn numbered(name: &str, prefix: &str, n: usize) -> Self {
        Block { name: name.to_string(), vars: (1..=n).map(|i| alloc::format!("{}{}", prefix, i)).collect() }
    }
}

/// `e_k` of the named variables; `e_0 = 1`, `e_k = 0` for `k > n`.
pub fn elementary_symmetric<S: AsRef<str>>(vars: &[S], k: usize) -> LaurentPoly {
    let n = vars.len();
    let names: Vec<String> = vars.iter().map(|v| v.as_ref().to_string()).collect();
    if k > n {
        return LaurentPoly::zero();
    }
    let terms = subsets(n, k).into_iter().map(|s| {
        let mut e = vec![0i32; n];
        for i in s {
            e[i] = 1;
        }
        (e, BigInt::one())
    });
    LaurentPoly::from_terms(names, terms)
}

/// All `k`-subsets of `0..n` in lexicographic order.
pub fn subsets(n: usize, k: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut cur = Vec::with_capacity(k);
    fn rec(start: usize, n: usize, k: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for i in start..n {
            if n - i < k - cur.len() {
                break;
            }
            cur.push(i);
            rec(i + 1, n, k, cur, out);
            cur.pop();
        }
    }
    rec(0, n, k, &mut cur, &mut out);
    out
}

type Dense = BTreeMap<Vec<i32>, BigInt>;

fn dense_mul(a: &Dense, b: &Dense) -> Dense {
    let mut out = Dense::new();
    for (ma, ca) in a {
        for (mb, cb) in b {
            let m: Vec<i32> = ma.iter().zip(mb).map(|(x, y)| x + y).collect();
            let e = out.entry(m).or_insert_with(BigInt::zero);
            *e += ca * cb;
        }
    }
    out.retain(|_, c| !c.is_zero());
    out
}

fn is_dominant(e: &[i32]) -> bool {
    e.windows(2).all(|w| w[0] >= w[1])
}

/// Expresses `p`, symmetric under permutations inside each block, as a polynomial in the
/// elementary symmetric polynomials `name_i` of each block.
pub fn decompose_symmetric(p: &LaurentPoly, blocks: &[Block]) -> Result<LaurentPoly, AlgebraError> {
    let all: Vec<&String> = blocks.iter().flat_map(|b| b.vars.iter()).collect();
    for v in p.vars() {
        if !all.contains(&v) {
            return Err(AlgebraError::Invalid(alloc::format!("variable {} is in no block", v)));
        }
    }
    if !p.is_polynomial() {
        return Err(AlgebraError::Invalid("negative exponents cannot be decomposed".into()));
    }
    for b in blocks {
        for w in b.vars.windows(2) {
            let swapped = p.rename(|v| {
                if v == w[0] {
                    w[1].clone()
                } else if v == w[1] {
                    w[0].clone()
                } else {
                    v.to_string()
                }
            });
            if &swapped != p {
                return Err(AlgebraError::NotSymmetric(w[0].clone(), w[1].clone()));
            }
        }
    }
    // Per-block dominant parts of the input, keyed by concatenated block exponents.
    let offsets: Vec<usize> = blocks
        .iter()
        .scan(0, |acc, b| {
            let o = *acc;
            *acc += b.vars.len();
            Some(o)
        })
        .collect();
    let width: usize = blocks.iter().map(|b| b.vars.len()).sum();
    let dominant = |e: &[i32]| blocks.iter().zip(&offsets).all(|(b, &o)| is_dominant(&e[o..o + b.vars.len()]));
    let mut rest = Dense::new();
    for (m, c) in p.terms() {
        let mut e = vec![0i32; width];
        for (name, &x) in p.vars().iter().zip(&m.0) {
            let i = all.iter().position(|v| *v == name).unwrap();
            e[i] = x;
        }
        if dominant(&e) {
            rest.insert(e, c.clone());
        }
    }
    // Elementary symmetric polynomials of each block, restricted products cached per partition.
    let elem: Vec<Vec<Dense>> = blocks
        .iter()
        .map(|b| {
            let n = b.vars.len();
            (0..=n)
                .map(|k| {
                    subsets(n, k)
                        .into_iter()
                        .map(|s| {
                            let mut e = vec![0i32; n];
                            for i in s {
                                e[i] = 1;
                            }
                            (e, BigInt::one())
                        })
                        .collect()
                })
                .collect()
        })
        .collect();
    let mut cache: Vec<BTreeMap<Vec<i32>, Dense>> = vec![BTreeMap::new(); blocks.len()];
    let mut out_terms: Vec<(Vec<i32>, BigInt)> = Vec::new();
    let out_vars: Vec<String> =
        blocks.iter().flat_map(|b| (1..=b.vars.len()).map(move |i| alloc::format!("{}{}", b.name, i))).collect();
    while let Some((lead, c)) = rest.iter().next_back().map(|(m, c)| (m.clone(), c.clone())) {
        // Leading exponent a (sorted per block) comes from Π e_i^{a_i - a_{i+1}}.
        let mut mult = vec![0i32; width];
        let mut factors: Vec<Dense> = Vec::with_capacity(blocks.len());
        for (bi, (b, &o)) in blocks.iter().zip(&offsets).enumerate() {
            let n = b.vars.len();
            let a = &lead[o..o + n];
            let m: Vec<i32> = (0..n).map(|i| a[i] - if i + 1 < n { a[i + 1] } else { 0 }).collect();
            mult[o..o + n].copy_from_slice(&m);
            if !cache[bi].contains_key(&m) {
                let mut prod: Dense = [(vec![0i32; n], BigInt::one())].into_iter().collect();
                for (i, &k) in m.iter().enumerate() {
                    for _ in 0..k {
                        prod = dense_mul(&prod, &elem[bi][i + 1]);
                    }
                }
                prod.retain(|e, _| is_dominant(e));
                cache[bi].insert(m.clone(), prod);
            }
            factors.push(cache[bi][&m].clone());
        }
        // Subtract c times the product over blocks (blocks use disjoint variables).
        let mut combined: Dense = [(Vec::new(), BigInt::one())].into_iter().collect();
        for f in &factors {
            let mut next = Dense::new();
            for (ma, ca) in &combined {
                for (mb, cb) in f {
                    let mut e = ma.clone();
                    e.extend_from_slice(mb);
                    next.insert(e, ca * cb);
                }
            }
            combined = next;
        }
        for (e, x) in combined {
            let v = rest.entry(e.clone()).or_insert_with(BigInt::zero);
            *v -= &c * x;
            if v.is_zero() {
                rest.remove(&e);
            }
        }
        out_terms.push((mult, c));
    }
    Ok(LaurentPoly::from_terms(out_vars, out_terms))
}

/// Substitutes `name_i ↦ e_i(block)` back into a decomposition.
pub fn recompose(q: &LaurentPoly, blocks: &[Block]) -> Result<LaurentPoly, AlgebraError> {
    q.substitute(|v| {
        for b in blocks {
            if let Some(rest) = v.strip_prefix(b.name.as_str()) {
                if let Ok(i) = rest.parse::<usize>() {
                    if (1..=b.vars.len()).contains(&i) {
                        return Some(elementary_symmetric(&b.vars, i));
                    }
                }
            }
        }
        None
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::string::ToString;

    fn p(s: &str) -> LaurentPoly {
        s.parse().unwrap()
    }

    #[test]
    fn elementary_examples() {
        assert_eq!(elementary_symmetric(&["x1", "x2"], 1), p("x1 + x2"));
        assert_eq!(elementary_symmetric(&["x1", "x2", "x3"], 2), p("x1*x2 + x1*x3 + x2*x3"));
        assert!(elementary_symmetric(&["x1", "x2"], 3).is_zero());
        assert_eq!(elementary_symmetric::<&str>(&[], 0), LaurentPoly::one());
    }

    #[test]
    fn newton_identity_for_second_power_sum() {
        let b = [Block::numbered("e", "x", 2)];
        let q = decompose_symmetric(&p("x1^2 + x2^2"), &b).unwrap();
        assert_eq!(q.to_string(), "e1^2 - 2*e2");
        assert_eq!(recompose(&q, &b).unwrap(), p("x1^2 + x2^2"));
        assert_eq!(decompose_symmetric(&p("x1*x2"), &b).unwrap().to_string(), "e2");
    }

    #[test]
    fn antisymmetric_input_names_a_transposition() {
        let b = [Block::numbered("e", "x", 2)];
        let err = decompose_symmetric(&p("x1 - x2"), &b).unwrap_err();
        assert_eq!(err, AlgebraError::NotSymmetric("x1".into(), "x2".into()));
        assert!(err.to_string().contains("not symmetric"));
    }

    #[test]
    fn two_blocks_decompose_independently() {
        let b = [Block::numbered("e", "x", 2), Block::numbered("f", "y", 2)];
        let input = p("(x1 + x2)*(y1^2 + y2^2) + x1*x2");
        let q = decompose_symmetric(&input, &b).unwrap();
        assert_eq!(q, p("e1*f1^2 - 2*e1*f2 + e2"));
        assert_eq!(recompose(&q, &b).unwrap(), input);
    }
}
