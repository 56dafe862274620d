//! Shuffle (Eilenberg-Zilber) and front/back-face (Alexander-Whitney) maps relating
//! `Tot N(P) ⊗ Tot N(Q)` and `Tot N(P ⊗ Q)` for mixed objects.
//!
//! Horizontally the classical formulas apply. Vertically their duals do: `EZ` uses the cup
//! product (`x` pushed up by last cofaces, `y` by first cofaces) and `AW` the shuffle of
//! codegeneracies. Both carry the Koszul sign `(-1)^{q p'}` for moving the vertical degree of
//! the left factor past the horizontal degree of the right one. Horizontal degeneracies are
//! removed with the projector `Π = (1 - s_{n-1} d_{n-1}) ... (1 - s_0 d_0)` onto
//! `⋂_{i<n} ker d_i`.

use alloc::vec::Vec;

use num_bigint::BigInt;
use num_traits::Zero;

use super::complex::{ChainMap, Complex, TensorLayout};
use super::mixed::{MixedObject, Normalized};
use super::simplicial::coordinates;
use super::surj::shuffles;
use super::DkError;
use crate::exact::{integer_kernel, solve_integer, IntMatrix};

fn koszul(q: usize, p2: usize) -> BigInt {
    BigInt::from(if (q * p2) % 2 == 0 { 1 } else { -1 })
}

/// `Π` on row `q` at level `n`.
fn projector(x: &MixedObject, q: usize, n: usize) -> IntMatrix {
    let mut pi = IntMatrix::identity(x.rank(n, q));
    for j in 0..n {
        let sd = x.h_degen(q, n - 1, j).mul(x.h_face(q, n, j));
        pi = pi.sub(&sd.mul(&pi));
    }
    pi
}

/// `s_{idx[last]} ... s_{idx[0]}` on row `q`, starting at level `from`.
fn degeneracies(x: &MixedObject, q: usize, from: usize, idx: &[usize]) -> IntMatrix {
    let mut m = IntMatrix::identity(x.rank(from, q));
    for (t, &j) in idx.iter().enumerate() {
        m = x.h_degen(q, from + t, j).mul(&m);
    }
    m
}

/// `σ^{idx[0]} ... σ^{idx[last]}` on column `p`, starting at level `from`.
fn codegeneracies(x: &MixedObject, p: usize, from: usize, idx: &[usize]) -> IntMatrix {
    let mut m = IntMatrix::identity(x.rank(p, from));
    for (t, &j) in idx.iter().rev().enumerate() {
        m = x.v_codegen(p, from - t, j).mul(&m);
    }
    m
}

/// Front face `d_{i+1} ... d_n : X_n -> X_i` on row `q`.
fn front(x: &MixedObject, q: usize, n: usize, i: usize) -> IntMatrix {
    let mut m = IntMatrix::identity(x.rank(n, q));
    for level in (i + 1..=n).rev() {
        m = x.h_face(q, level, level).mul(&m);
    }
    m
}

/// Back face `d_0^{n-i} : X_n -> X_i` on row `q`.
fn back(x: &MixedObject, q: usize, n: usize, i: usize) -> IntMatrix {
    let mut m = IntMatrix::identity(x.rank(n, q));
    for level in (i + 1..=n).rev() {
        m = x.h_face(q, level, 0).mul(&m);
    }
    m
}

fn outer(a: &[BigInt], b: &[BigInt]) -> IntMatrix {
    let mut m = IntMatrix::zeros(a.len(), b.len());
    for (i, x) in a.iter().enumerate() {
        if x.is_zero() {
            continue;
        }
        for (j, y) in b.iter().enumerate() {
            if !y.is_zero() {
                m.set(i, j, x * y);
            }
        }
    }
    m
}

fn flatten(m: &IntMatrix) -> Vec<BigInt> {
    (0..m.rows()).flat_map(|i| m.row(i).to_vec()).collect()
}

/// The three normalized complexes of a pair of mixed objects and the maps between them.
pub struct Pairing {
    p: MixedObject,
    q: MixedObject,
    np: Normalized,
    nq: Normalized,
    npq: Normalized,
    tot_p: Complex,
    tot_q: Complex,
    tot_pq: Complex,
}

/// Outcome of [`Pairing::check`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PairingReport {
    /// `AW ∘ EZ` is the identity on `Tot N(P) ⊗ Tot N(Q)`.
    pub aw_after_ez_is_identity: bool,
    /// `EZ ∘ AW - id` sends every cycle of `Tot N(P ⊗ Q)` to a boundary.
    pub ez_after_aw_is_identity_on_homology: bool,
}

impl PairingReport {
    pub fn passed(&self) -> bool {
        self.aw_after_ez_is_identity && self.ez_after_aw_is_identity_on_homology
    }
}

impl Pairing {
    /// Both objects must share a truncation large enough that all three normalizations
    /// vanish on the truncation edge.
    pub fn new(p: &MixedObject, q: &MixedObject) -> Result<Self, DkError> {
        let pq = p.tensor(q)?;
        let (np, nq, npq) = (p.normalize(), q.normalize(), pq.normalize());
        for n in [&np, &nq, &npq] {
            n.check_edges()?;
        }
        let (tot_p, tot_q, tot_pq) = (np.double.tot()?, nq.double.tot()?, npq.double.tot()?);
        Ok(Pairing { p: p.clone(), q: q.clone(), np, nq, npq, tot_p, tot_q, tot_pq })
    }

    pub fn tensor_of_tots(&self) -> Complex {
        self.tot_p.tensor(&self.tot_q)
    }

    pub fn tot_of_tensor(&self) -> &Complex {
        &self.tot_pq
    }

    /// `EZ : Tot N(P) ⊗ Tot N(Q) -> Tot N(P ⊗ Q)`, checked to be a chain map.
    pub fn ez(&self) -> Result<ChainMap, DkError> {
        let source = self.tensor_of_tots();
        let layout = TensorLayout::new(&self.tot_p, &self.tot_q);
        let (tp, tq) = self.p.tops();
        let mut maps = Vec::new();
        for n in source.degrees() {
            let mut m = IntMatrix::zeros(self.tot_pq.rank(n), source.rank(n));
            for a in self.tot_p.degrees() {
                for (p1, q1, off1) in self.np.double.blocks(a) {
                    for (p2, q2, off2) in self.nq.double.blocks(n - a) {
                        let (d1, d2) = (self.np.double.rank(p1, q1), self.nq.double.rank(p2, q2));
                        if d1 == 0 || d2 == 0 {
                            continue;
                        }
                        let (pp, qq) = (p1 + p2, q1 + q2);
                        if pp > tp || qq > tq {
                            return Err(DkError::Truncation(alloc::format!(
                                "EZ needs level ({}, {}) beyond ({}, {})",
                                pp,
                                qq,
                                tp,
                                tq
                            )));
                        }
                        let row = self.npq.double.offset(pp, qq);
                        for i in 0..d1 {
                            for j in 0..d2 {
                                let v = self.ez_vector(p1, q1, i, p2, q2, j)?;
                                let col = layout.index(n, a, off1 + i, off2 + j);
                                for (r, x) in v.iter().enumerate() {
                                    if !x.is_zero() {
                                        m.add_to(row + r, col, x);
                                    }
                                }
                            }
                        }
                    }
                }
            }
            maps.push(m);
        }
        ChainMap::new(source, self.tot_pq.clone(), maps)
    }

    /// `EZ(x_i ⊗ y_j)` in the normalized basis of `P ⊗ Q` at `(p1 + p2, q1 + q2)`.
    fn ez_vector(
        &self,
        p1: usize,
        q1: usize,
        i: usize,
        p2: usize,
        q2: usize,
        j: usize,
    ) -> Result<Vec<BigInt>, DkError> {
        let (pp, qq) = (p1 + p2, q1 + q2);
        let mut x = self.np.bases[p1][q1].column(i);
        for t in 0..q2 {
            x = self.p.v_coface(p1, q1 + t, q1 + t + 1).apply(&x);
        }
        let mut y = self.nq.bases[p2][q2].column(j);
        for t in 0..q1 {
            y = self.q.v_coface(p2, q2 + t, 0).apply(&y);
        }
        let mut z = IntMatrix::zeros(self.p.rank(pp, qq), self.q.rank(pp, qq));
        for sh in shuffles(p1, p2) {
            let sx = degeneracies(&self.p, qq, p1, &sh.second).apply(&x);
            let sy = degeneracies(&self.q, qq, p2, &sh.first).apply(&y);
            let term = outer(&sx, &sy);
            z = if sh.sign > 0 { z.add(&term) } else { z.sub(&term) };
        }
        for t in 0..pp {
            let a = self.p.h_degen(qq, pp - 1, t).mul(self.p.h_face(qq, pp, t));
            let b = self.q.h_degen(qq, pp - 1, t).mul(self.q.h_face(qq, pp, t));
            z = z.sub(&a.mul(&z).mul(&b.transpose()));
        }
        let v: Vec<BigInt> = flatten(&z).into_iter().map(|c| c * koszul(q1, p2)).collect();
        solve_integer(&self.npq.bases[pp][qq], &v).ok_or_else(|| DkError::Invalid("EZ left the normalized part".into()))
    }

    /// `AW : Tot N(P ⊗ Q) -> Tot N(P) ⊗ Tot N(Q)`, checked to be a chain map.
    pub fn aw(&self) -> Result<ChainMap, DkError> {
        let target = self.tensor_of_tots();
        let layout = TensorLayout::new(&self.tot_p, &self.tot_q);
        let mut maps = Vec::new();
        for n in self.tot_pq.degrees() {
            let mut m = IntMatrix::zeros(target.rank(n), self.tot_pq.rank(n));
            for (pp, qq, off) in self.npq.double.blocks(n) {
                let basis = &self.npq.bases[pp][qq];
                for col in 0..basis.cols() {
                    let z = IntMatrix::from_rows(self.p.rank(pp, qq), self.q.rank(pp, qq), basis.column(col));
                    for i in 0..=pp {
                        let w = front(&self.p, qq, pp, i).mul(&z).mul(&back(&self.q, qq, pp, pp - i).transpose());
                        for a in 0..=qq {
                            let b = qq - a;
                            let (d1, d2) = (self.np.double.rank(i, a), self.nq.double.rank(pp - i, b));
                            if d1 == 0 || d2 == 0 {
                                continue;
                            }
                            let mut acc = IntMatrix::zeros(self.p.rank(i, a), self.q.rank(pp - i, b));
                            for sh in shuffles(a, b) {
                                let cp = codegeneracies(&self.p, i, qq, &sh.second);
                                let cq = codegeneracies(&self.q, pp - i, qq, &sh.first);
                                let term = cp.mul(&w).mul(&cq.transpose());
                                acc = if sh.sign > 0 { acc.add(&term) } else { acc.sub(&term) };
                            }
                            let acc =
                                projector(&self.p, a, i).mul(&acc).mul(&projector(&self.q, b, pp - i).transpose());
                            let left = coordinates(&self.np.bases[i][a], &acc)
                                .ok_or_else(|| DkError::Invalid("AW left the normalized part".into()))?;
                            let both = coordinates(&self.nq.bases[pp - i][b], &left.transpose())
                                .ok_or_else(|| DkError::Invalid("AW left the normalized part".into()))?
                                .transpose();
                            let sign = koszul(a, pp - i);
                            let (da, db) = (a as i64 - i as i64, b as i64 - (pp - i) as i64);
                            let (o1, o2) = (self.np.double.offset(i, a), self.nq.double.offset(pp - i, b));
                            debug_assert_eq!(da + db, n);
                            for u in 0..d1 {
                                for v in 0..d2 {
                                    let x = both.get(u, v);
                                    if !x.is_zero() {
                                        m.add_to(layout.index(n, da, o1 + u, o2 + v), off + col, &(x * &sign));
                                    }
                                }
                            }
                        }
                    }
                }
            }
            maps.push(m);
        }
        ChainMap::new(self.tot_pq.clone(), target, maps)
    }

    pub fn check(&self) -> Result<PairingReport, DkError> {
        let (ez, aw) = (self.ez()?, self.aw()?);
        let source = self.tensor_of_tots();
        let aw_after_ez_is_identity =
            source.degrees().all(|n| aw.component(n).mul(&ez.component(n)) == IntMatrix::identity(source.rank(n)));
        let mut ez_after_aw_is_identity_on_homology = true;
        for n in self.tot_pq.degrees() {
            let rank = self.tot_pq.rank(n);
            let defect = ez.component(n).mul(&aw.component(n)).sub(&IntMatrix::identity(rank));
            let incoming = self.tot_pq.diff(n - 1);
            for z in integer_kernel(&self.tot_pq.diff(n)) {
                let w = defect.apply(&z);
                if w.iter().all(Zero::is_zero) {
                    continue;
                }
                if incoming.cols() == 0 || solve_integer(&incoming, &w).is_none() {
                    ez_after_aw_is_identity_on_homology = false;
                }
            }
        }
        Ok(PairingReport { aw_after_ez_is_identity, ez_after_aw_is_identity_on_homology })
    }
}

pub fn ez_map(p: &MixedObject, q: &MixedObject) -> Result<ChainMap, DkError> {
    Pairing::new(p, q)?.ez()
}

pub fn aw_map(p: &MixedObject, q: &MixedObject) -> Result<ChainMap, DkError> {
    Pairing::new(p, q)?.aw()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::dk::mixed::embed_i;
    use alloc::vec;

    fn m(rows: usize, cols: usize, data: &[i64]) -> IntMatrix {
        IntMatrix::from_i64(rows, cols, data)
    }

    fn check_pair(a: &Complex, b: &Complex, tops: (usize, usize)) {
        let p = embed_i(a, tops.0, tops.1).unwrap();
        let q = embed_i(b, tops.0, tops.1).unwrap();
        let pairing = Pairing::new(&p, &q).unwrap();
        assert_eq!(pairing.tensor_of_tots(), a.tensor(b));
        let report = pairing.check().unwrap();
        assert!(report.passed(), "{report:?}");
        assert_eq!(
            pairing.tot_of_tensor().homology().into_iter().filter(|h| !h.is_zero()).collect::<Vec<_>>(),
            pairing.tensor_of_tots().homology().into_iter().filter(|h| !h.is_zero()).collect::<Vec<_>>()
        );
    }

    #[test]
    fn constant_objects_pair_canonically() {
        let z = Complex::concentrated(0, 1);
        let p = embed_i(&z, 1, 1).unwrap();
        let ez = ez_map(&p, &p).unwrap();
        assert_eq!(ez.component(0), IntMatrix::identity(1));
        assert_eq!(aw_map(&p, &p).unwrap().component(0), IntMatrix::identity(1));
    }

    #[test]
    fn simplicial_direction() {
        let a = Complex::two_term(-1, m(1, 1, &[2])).unwrap();
        let b = Complex::concentrated(-1, 1);
        check_pair(&a, &b, (3, 1));
    }

    #[test]
    fn cosimplicial_direction() {
        let a = Complex::two_term(0, m(1, 1, &[3])).unwrap();
        let b = Complex::concentrated(1, 1);
        check_pair(&a, &b, (1, 3));
    }

    #[test]
    fn mixed_directions() {
        let a = Complex::concentrated(-1, 1);
        let b = Complex::concentrated(1, 1);
        check_pair(&a, &b, (2, 2));
        let c = Complex::new(-1, vec![1, 1, 1], vec![m(1, 1, &[1]), m(1, 1, &[0])]).unwrap();
        check_pair(&c, &b, (2, 3));
    }

    #[test]
    fn both_amplitudes_on_each_side() {
        let a = Complex::new(-1, vec![1, 2, 1], vec![m(2, 1, &[1, 2]), m(1, 2, &[2, -1])]).unwrap();
        let b = Complex::new(-1, vec![1, 1, 1], vec![m(1, 1, &[2]), m(1, 1, &[0])]).unwrap();
        check_pair(&a, &b, (3, 3));
    }

    #[test]
    fn projector_is_idempotent_onto_the_kernel() {
        let a = Complex::new(-2, vec![1, 1, 1], vec![m(1, 1, &[3]), m(1, 1, &[0])]).unwrap();
        let x = embed_i(&a, 3, 1).unwrap();
        for n in 0..=3 {
            let pi = projector(&x, 0, n);
            assert_eq!(pi.mul(&pi), pi);
            for i in 0..n {
                assert!(x.h_face(0, n, i).mul(&pi).is_zero());
            }
            for j in 0..n {
                assert!(pi.mul(x.h_degen(0, n - 1, j)).is_zero());
            }
        }
    }
}
