//! Smith and Hermite normal forms over the integers.

use alloc::vec;
use alloc::vec::Vec;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::matrix::IntMatrix;

/// `U * A * V = D` with `U`, `V` unimodular and `D` diagonal, `d_i | d_{i+1}`, `d_i >= 0`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Smith {
    pub u: IntMatrix,
    pub d: IntMatrix,
    pub v: IntMatrix,
}

impl Smith {
    /// Nonzero diagonal entries, in order.
    pub fn invariant_factors(&self) -> Vec<BigInt> {
        (0..self.d.rows().min(self.d.cols())).map(|i| self.d.get(i, i).clone()).filter(|x| !x.is_zero()).collect()
    }

    pub fn rank(&self) -> usize {
        self.invariant_factors().len()
    }
}

pub fn smith_normal_form(a: &IntMatrix) -> Smith {
    let (m, n) = (a.rows(), a.cols());
    let mut d = a.clone();
    let mut u = IntMatrix::identity(m);
    let mut v = IntMatrix::identity(n);
    let mut t = 0;
    while t < m.min(n) {
        // Pivot: smallest nonzero absolute value in the trailing block.
        let mut best: Option<(usize, usize)> = None;
        for i in t..m {
            for j in t..n {
                let x = d.get(i, j);
                if !x.is_zero() && best.map_or(true, |(bi, bj)| x.abs() < d.get(bi, bj).abs()) {
                    best = Some((i, j));
                }
            }
        }
        let Some((pi, pj)) = best else { break };
        d.swap_rows(t, pi);
        u.swap_rows(t, pi);
        d.swap_cols(t, pj);
        v.swap_cols(t, pj);
        loop {
            let mut dirty = false;
            for i in t + 1..m {
                if d.get(i, t).is_zero() {
                    continue;
                }
                let q = -d.get(i, t).div_floor(d.get(t, t));
                d.add_row_multiple(i, t, &q);
                u.add_row_multiple(i, t, &q);
                if !d.get(i, t).is_zero() {
                    d.swap_rows(t, i);
                    u.swap_rows(t, i);
                    dirty = true;
                }
            }
            for j in t + 1..n {
                if d.get(t, j).is_zero() {
                    continue;
                }
                let q = -d.get(t, j).div_floor(d.get(t, t));
                d.add_col_multiple(j, t, &q);
                v.add_col_multiple(j, t, &q);
                if !d.get(t, j).is_zero() {
                    d.swap_cols(t, j);
                    v.swap_cols(t, j);
                    dirty = true;
                }
            }
            if dirty {
                continue;
            }
            // Divisibility: fold an offending row into the pivot row and retry.
            let p = d.get(t, t).clone();
            let offender = (t + 1..m).find(|&i| (t + 1..n).any(|j| !(d.get(i, j) % &p).is_zero()));
            match offender {
                Some(i) => {
                    d.add_row_multiple(t, i, &BigInt::one());
                    u.add_row_multiple(t, i, &BigInt::one());
                }
                None => break,
            }
        }
        if d.get(t, t).is_negative() {
            let minus = -BigInt::one();
            d.scale_row(t, &minus);
            u.scale_row(t, &minus);
        }
        t += 1;
    }
    Smith { u, d, v }
}

/// Row-style Hermite normal form of the lattice spanned by the rows of `a`: nonzero rows
/// only, positive pivots, entries above each pivot reduced into `[0, pivot)`.
pub fn hermite_rows(a: &IntMatrix) -> IntMatrix {
    let mut h = a.clone();
    let (m, n) = (h.rows(), h.cols());
    let mut r = 0;
    for c in 0..n {
        if r == m {
            break;
        }
        loop {
            let mut best: Option<usize> = None;
            for i in r..m {
                if !h.get(i, c).is_zero() && best.map_or(true, |b| h.get(i, c).abs() < h.get(b, c).abs()) {
                    best = Some(i);
                }
            }
            let Some(b) = best else { break };
            h.swap_rows(r, b);
            let mut done = true;
            for i in r + 1..m {
                if h.get(i, c).is_zero() {
                    continue;
                }
                let q = -h.get(i, c).div_floor(h.get(r, c));
                h.add_row_multiple(i, r, &q);
                if !h.get(i, c).is_zero() {
                    done = false;
                }
            }
            if done {
                break;
            }
        }
        if h.get(r, c).is_zero() {
            continue;
        }
        if h.get(r, c).is_negative() {
            h.scale_row(r, &-BigInt::one());
        }
        let p = h.get(r, c).clone();
        for i in 0..r {
            let q = -h.get(i, c).div_floor(&p);
            h.add_row_multiple(i, r, &q);
        }
        r += 1;
    }
    let idx: Vec<usize> = (0..r).collect();
    h.select_rows(&idx)
}

/// Canonical basis (Hermite rows) of the integer kernel lattice `{x : A x = 0}`.
pub fn integer_kernel(a: &IntMatrix) -> Vec<Vec<BigInt>> {
    let s = smith_normal_form(a);
    let r = s.rank();
    let cols: Vec<usize> = (r..a.cols()).collect();
    if cols.is_empty() {
        return Vec::new();
    }
    let basis = s.v.select_columns(&cols).transpose();
    let h = hermite_rows(&basis);
    (0..h.rows()).map(|i| h.row(i).to_vec()).collect()
}

/// An integer solution of `A x = b`, if one exists.
pub fn solve_integer(a: &IntMatrix, b: &[BigInt]) -> Option<Vec<BigInt>> {
    let s = smith_normal_form(a);
    let ub = s.u.apply(b);
    let mut y = vec![BigInt::zero(); a.cols()];
    for (i, c) in ub.iter().enumerate() {
        let dii = if i < a.cols() { s.d.get(i, i).clone() } else { BigInt::zero() };
        if dii.is_zero() {
            if !c.is_zero() {
                return None;
            }
        } else {
            let (q, r) = c.div_rem(&dii);
            if !r.is_zero() {
                return None;
            }
            y[i] = q;
        }
    }
    Some(s.v.apply(&y))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn check(a: &IntMatrix) -> Smith {
        let s = smith_normal_form(a);
        assert_eq!(s.u.mul(a).mul(&s.v), s.d);
        assert!(s.u.is_unimodular() && s.v.is_unimodular());
        let f = s.invariant_factors();
        for w in f.windows(2) {
            assert!((&w[1] % &w[0]).is_zero());
        }
        for i in 0..s.d.rows() {
            for j in 0..s.d.cols() {
                if i != j {
                    assert!(s.d.get(i, j).is_zero());
                }
            }
        }
        s
    }

    #[test]
    fn reference_examples() {
        assert_eq!(check(&IntMatrix::identity(2)).d, IntMatrix::identity(2));
        // Hand reduction: gcd of entries is 2, determinant -8, so diag(2, 4).
        assert_eq!(check(&IntMatrix::from_i64(2, 2, &[2, 4, 6, 8])).d, IntMatrix::from_i64(2, 2, &[2, 0, 0, 4]));
        assert!(check(&IntMatrix::zeros(2, 3)).d.is_zero());
    }

    #[test]
    fn rectangular_and_divisibility_repair() {
        check(&IntMatrix::from_i64(2, 2, &[2, 0, 0, 3]));
        check(&IntMatrix::from_i64(3, 2, &[4, 6, 6, 9, 2, 5]));
        check(&IntMatrix::from_i64(2, 4, &[0, 0, 3, 6, 0, 5, 0, 10]));
    }

    #[test]
    fn kernel_of_coordinate_projection_is_standard() {
        let a = IntMatrix::from_i64(1, 3, &[0, 0, 1]);
        let k = integer_kernel(&a);
        assert_eq!(
            k,
            vec![
                vec![BigInt::one(), BigInt::zero(), BigInt::zero()],
                vec![BigInt::zero(), BigInt::one(), BigInt::zero()]
            ]
        );
    }

    #[test]
    fn integer_solutions_respect_lattice() {
        let a = IntMatrix::from_i64(1, 1, &[2]);
        assert_eq!(solve_integer(&a, &[BigInt::from(4)]), Some(vec![BigInt::from(2)]));
        assert_eq!(solve_integer(&a, &[BigInt::from(3)]), None);
    }
}
