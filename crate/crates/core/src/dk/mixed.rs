//! Cosimplicial-simplicial free modules, their normalization to second-quadrant double
//! complexes, totalization, and the embedding `i` of two-sided complexes.

use alloc::collections::BTreeMap;
use alloc::vec::Vec;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use super::complex::{place, Complex};
use super::simplicial::{coordinates, CosimplicialModule, SimplicialModule};
use super::surj::{Face, Surj};
use super::DkError;
use crate::exact::{integer_kernel, IntMatrix};

/// A truncated cosimplicial-simplicial module `X^q_p`, `p <= top_p` simplicial, `q <= top_q`
/// cosimplicial, with commuting horizontal and vertical structure maps.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MixedObject {
    /// `rows[q]` is the simplicial module `p -> X^q_p`.
    rows: Vec<SimplicialModule>,
    /// `columns[p]` is the cosimplicial module `q -> X^q_p`.
    columns: Vec<CosimplicialModule>,
}

impl MixedObject {
    pub fn new(rows: Vec<SimplicialModule>, columns: Vec<CosimplicialModule>) -> Result<Self, DkError> {
        if rows.is_empty() || columns.is_empty() {
            return Err(DkError::Shape("a mixed object needs at least one row and one column".into()));
        }
        let (tp, tq) = (columns.len() - 1, rows.len() - 1);
        for (q, row) in rows.iter().enumerate() {
            if row.top() != tp {
                return Err(DkError::Shape(alloc::format!("row {} stops at level {}, expected {}", q, row.top(), tp)));
            }
            for (p, col) in columns.iter().enumerate() {
                if col.top() != tq || col.rank(q) != row.rank(p) {
                    return Err(DkError::Shape(alloc::format!("rows and columns disagree at ({}, {})", p, q)));
                }
            }
        }
        let x = MixedObject { rows, columns };
        x.check_commutation()?;
        Ok(x)
    }

    fn check_commutation(&self) -> Result<(), DkError> {
        let (tp, tq) = self.tops();
        let fail = |what: &str, p: usize, q: usize| {
            Err(DkError::Identity(alloc::format!("{} do not commute at ({}, {})", what, p, q)))
        };
        for p in 0..=tp {
            for q in 0..=tq {
                for a in 0..=q + 1 {
                    if q == tq {
                        break;
                    }
                    for i in 0..=p {
                        if p > 0
                            && self.h_face(q + 1, p, i).mul(self.v_coface(p, q, a))
                                != self.v_coface(p - 1, q, a).mul(self.h_face(q, p, i))
                        {
                            return fail("faces and cofaces", p, q);
                        }
                        if p < tp
                            && self.h_degen(q + 1, p, i).mul(self.v_coface(p, q, a))
                                != self.v_coface(p + 1, q, a).mul(self.h_degen(q, p, i))
                        {
                            return fail("degeneracies and cofaces", p, q);
                        }
                    }
                }
                for b in 0..q {
                    for i in 0..=p {
                        if p > 0
                            && self.h_face(q - 1, p, i).mul(self.v_codegen(p, q, b))
                                != self.v_codegen(p - 1, q, b).mul(self.h_face(q, p, i))
                        {
                            return fail("faces and codegeneracies", p, q);
                        }
                        if p < tp
                            && self.h_degen(q - 1, p, i).mul(self.v_codegen(p, q, b))
                                != self.v_codegen(p + 1, q, b).mul(self.h_degen(q, p, i))
                        {
                            return fail("degeneracies and codegeneracies", p, q);
                        }
                    }
                }
            }
        }
        Ok(())
    }

    /// `(top_p, top_q)`.
    pub fn tops(&self) -> (usize, usize) {
        (self.columns.len() - 1, self.rows.len() - 1)
    }

    pub fn rank(&self, p: usize, q: usize) -> usize {
        self.rows[q].rank(p)
    }

    /// `d_i : X^q_p -> X^q_{p-1}`.
    pub fn h_face(&self, q: usize, p: usize, i: usize) -> &IntMatrix {
        self.rows[q].face(p, i)
    }

    /// `s_j : X^q_p -> X^q_{p+1}`.
    pub fn h_degen(&self, q: usize, p: usize, j: usize) -> &IntMatrix {
        self.rows[q].degeneracy(p, j)
    }

    /// `δ^i : X^q_p -> X^{q+1}_p`.
    pub fn v_coface(&self, p: usize, q: usize, i: usize) -> &IntMatrix {
        self.columns[p].coface(q, i)
    }

    /// `σ^j : X^q_p -> X^{q-1}_p`.
    pub fn v_codegen(&self, p: usize, q: usize, j: usize) -> &IntMatrix {
        self.columns[p].codegeneracy(q, j)
    }

    pub fn row(&self, q: usize) -> &SimplicialModule {
        &self.rows[q]
    }

    pub fn column(&self, p: usize) -> &CosimplicialModule {
        &self.columns[p]
    }

    /// Rebuild from a rule applied to every structure map; `rank` gives the new ranks.
    fn map_levelwise(
        &self,
        rank: impl Fn(usize, usize) -> usize,
        f: impl Fn(&IntMatrix) -> IntMatrix,
    ) -> Result<Self, DkError> {
        let (tp, tq) = self.tops();
        let mut rows = Vec::new();
        for q in 0..=tq {
            let faces = (0..=tp)
                .map(|p| if p == 0 { Vec::new() } else { (0..=p).map(|i| f(self.h_face(q, p, i))).collect() })
                .collect();
            let degens = (0..tp).map(|p| (0..=p).map(|j| f(self.h_degen(q, p, j))).collect()).collect();
            rows.push(SimplicialModule::new((0..=tp).map(|p| rank(p, q)).collect(), faces, degens)?);
        }
        let mut columns = Vec::new();
        for p in 0..=tp {
            let cofaces = (0..tq).map(|q| (0..=q + 1).map(|i| f(self.v_coface(p, q, i))).collect()).collect();
            let codegens = (0..=tq).map(|q| (0..q).map(|j| f(self.v_codegen(p, q, j))).collect()).collect();
            columns.push(CosimplicialModule::new((0..=tq).map(|q| rank(p, q)).collect(), cofaces, codegens)?);
        }
        MixedObject::new(rows, columns)
    }

    /// Levelwise `Λ^k`, functorial on structure maps through exterior powers of matrices.
    pub fn exterior_power(&self, k: usize) -> Result<Self, DkError> {
        self.map_levelwise(
            |p, q| crate::exact::binomial_usize(self.rank(p, q), k),
            |m| super::exterior::exterior_power_matrix(m, k),
        )
    }

    /// Levelwise tensor product; both objects must have the same truncation.
    pub fn tensor(&self, other: &MixedObject) -> Result<Self, DkError> {
        if self.tops() != other.tops() {
            return Err(DkError::Truncation(alloc::format!(
                "tensor factors are truncated at {:?} and {:?}",
                self.tops(),
                other.tops()
            )));
        }
        let (tp, tq) = self.tops();
        let mut rows = Vec::new();
        for q in 0..=tq {
            let faces = (0..=tp)
                .map(|p| {
                    if p == 0 {
                        Vec::new()
                    } else {
                        (0..=p).map(|i| self.h_face(q, p, i).kronecker(other.h_face(q, p, i))).collect()
                    }
                })
                .collect();
            let degens = (0..tp)
                .map(|p| (0..=p).map(|j| self.h_degen(q, p, j).kronecker(other.h_degen(q, p, j))).collect())
                .collect();
            rows.push(SimplicialModule::new(
                (0..=tp).map(|p| self.rank(p, q) * other.rank(p, q)).collect(),
                faces,
                degens,
            )?);
        }
        let mut columns = Vec::new();
        for p in 0..=tp {
            let cofaces = (0..tq)
                .map(|q| (0..=q + 1).map(|i| self.v_coface(p, q, i).kronecker(other.v_coface(p, q, i))).collect())
                .collect();
            let codegens = (0..=tq)
                .map(|q| (0..q).map(|j| self.v_codegen(p, q, j).kronecker(other.v_codegen(p, q, j))).collect())
                .collect();
            columns.push(CosimplicialModule::new(
                (0..=tq).map(|q| self.rank(p, q) * other.rank(p, q)).collect(),
                cofaces,
                codegens,
            )?);
        }
        MixedObject::new(rows, columns)
    }

    /// `N = N^v ∘ N_h` in the kernel model `⋂_{i<p} ker d_i ∩ ⋂_{j<q} ker σ^j`, with
    /// `d_h = (-1)^p d_p` and `d_v = Σ (-1)^i δ^i`, plus the inclusions into `X^q_p`.
    pub fn normalize(&self) -> Normalized {
        let (tp, tq) = self.tops();
        let mut bases = Vec::new();
        for p in 0..=tp {
            let mut col = Vec::new();
            for q in 0..=tq {
                let mut blocks: Vec<&IntMatrix> = (0..p).map(|i| self.h_face(q, p, i)).collect();
                blocks.extend((0..q).map(|j| self.v_codegen(p, q, j)));
                let basis = match blocks.split_first() {
                    None => IntMatrix::identity(self.rank(p, q)),
                    Some((first, rest)) => {
                        let stacked = rest.iter().fold((*first).clone(), |acc, m| acc.vstack(m));
                        IntMatrix::from_columns(self.rank(p, q), &integer_kernel(&stacked))
                    }
                };
                col.push(basis);
            }
            bases.push(col);
        }
        let ranks: Vec<Vec<usize>> = bases.iter().map(|c| c.iter().map(IntMatrix::cols).collect()).collect();
        let mut horizontal = Vec::new();
        let mut vertical = Vec::new();
        for p in 0..=tp {
            let mut hcol = Vec::new();
            let mut vcol = Vec::new();
            for q in 0..=tq {
                if p > 0 {
                    let d = self.h_face(q, p, p).mul(&bases[p][q]);
                    let d = if p % 2 == 0 { d } else { d.neg() };
                    hcol.push(
                        coordinates(&bases[p - 1][q], &d).expect("the last face preserves the normalized lattice"),
                    );
                } else {
                    hcol.push(IntMatrix::zeros(0, ranks[p][q]));
                }
                if q < tq {
                    let mut d = IntMatrix::zeros(self.rank(p, q + 1), self.rank(p, q));
                    for i in 0..=q + 1 {
                        d = if i % 2 == 0 { d.add(self.v_coface(p, q, i)) } else { d.sub(self.v_coface(p, q, i)) };
                    }
                    let d = d.mul(&bases[p][q]);
                    vcol.push(
                        coordinates(&bases[p][q + 1], &d).expect("the coboundary preserves the normalized lattice"),
                    );
                } else {
                    vcol.push(IntMatrix::zeros(0, ranks[p][q]));
                }
            }
            horizontal.push(hcol);
            vertical.push(vcol);
        }
        Normalized { double: DoubleComplex { ranks, horizontal, vertical }, bases }
    }

    /// `Tot(N(X))`; fails when the normalization reaches the truncation edge, since the
    /// missing levels could then contribute.
    pub fn tot_normalized(&self) -> Result<Complex, DkError> {
        let n = self.normalize();
        n.check_edges()?;
        n.double.tot()
    }
}

/// The normalized double complex of a mixed object and the lattice bases realizing it.
#[derive(Clone, Debug)]
pub struct Normalized {
    pub double: DoubleComplex,
    /// `bases[p][q]`: columns span `N^q_p` inside `X^q_p`.
    pub bases: Vec<Vec<IntMatrix>>,
}

impl Normalized {
    pub fn check_edges(&self) -> Result<(), DkError> {
        let (tp, tq) = self.double.tops();
        for p in 0..=tp {
            for q in 0..=tq {
                if (p == tp || q == tq) && self.double.rank(p, q) != 0 {
                    return Err(DkError::Truncation(alloc::format!(
                        "normalization is nonzero at ({}, {}) on the truncation edge ({}, {})",
                        p,
                        q,
                        tp,
                        tq
                    )));
                }
            }
        }
        Ok(())
    }
}

/// A bounded second-quadrant double complex: `d_h : (p, q) -> (p-1, q)` and
/// `d_v : (p, q) -> (p, q+1)`, commuting. Entries outside the stored grid are zero.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DoubleComplex {
    ranks: Vec<Vec<usize>>,
    horizontal: Vec<Vec<IntMatrix>>,
    vertical: Vec<Vec<IntMatrix>>,
}

impl DoubleComplex {
    /// `ranks[p][q]`; `horizontal[p][q]` leaves `(p, q)` for `p >= 1` and `vertical[p][q]` for
    /// `q` below the top (other entries are ignored and replaced by zero maps).
    pub fn new(
        ranks: Vec<Vec<usize>>,
        horizontal: Vec<Vec<IntMatrix>>,
        vertical: Vec<Vec<IntMatrix>>,
    ) -> Result<Self, DkError> {
        let tp = ranks.len().checked_sub(1).ok_or_else(|| DkError::Shape("empty double complex".into()))?;
        let tq = ranks[0].len().checked_sub(1).ok_or_else(|| DkError::Shape("empty double complex".into()))?;
        let mut h = Vec::new();
        let mut v = Vec::new();
        for p in 0..=tp {
            if ranks[p].len() != tq + 1 {
                return Err(DkError::Shape("double complex grid is not rectangular".into()));
            }
            let mut hc = Vec::new();
            let mut vc = Vec::new();
            for q in 0..=tq {
                let hm = if p > 0 { horizontal[p][q].clone() } else { IntMatrix::zeros(0, ranks[p][q]) };
                if p > 0 && (hm.rows() != ranks[p - 1][q] || hm.cols() != ranks[p][q]) {
                    return Err(DkError::Shape(alloc::format!("d_h at ({}, {}) has the wrong shape", p, q)));
                }
                let vm = if q < tq { vertical[p][q].clone() } else { IntMatrix::zeros(0, ranks[p][q]) };
                if q < tq && (vm.rows() != ranks[p][q + 1] || vm.cols() != ranks[p][q]) {
                    return Err(DkError::Shape(alloc::format!("d_v at ({}, {}) has the wrong shape", p, q)));
                }
                hc.push(hm);
                vc.push(vm);
            }
            h.push(hc);
            v.push(vc);
        }
        let d = DoubleComplex { ranks, horizontal: h, vertical: v };
        for p in 0..=tp {
            for q in 0..=tq {
                if p >= 2 && !d.horizontal[p - 1][q].mul(&d.horizontal[p][q]).is_zero() {
                    return Err(DkError::Invalid(alloc::format!("d_h^2 != 0 at ({}, {})", p, q)));
                }
                if q + 2 <= tq && !d.vertical[p][q + 1].mul(&d.vertical[p][q]).is_zero() {
                    return Err(DkError::Invalid(alloc::format!("d_v^2 != 0 at ({}, {})", p, q)));
                }
                if p >= 1
                    && q < tq
                    && d.vertical[p - 1][q].mul(&d.horizontal[p][q]) != d.horizontal[p][q + 1].mul(&d.vertical[p][q])
                {
                    return Err(DkError::Invalid(alloc::format!("d_h and d_v do not commute at ({}, {})", p, q)));
                }
            }
        }
        Ok(d)
    }

    /// A single column `p = 0` holding a cochain complex in degrees `>= 0`.
    pub fn column(c: &Complex) -> Result<Self, DkError> {
        if !c.is_zero() && c.lo() < 0 {
            return Err(DkError::Shape("a column must live in degrees >= 0".into()));
        }
        let tq = c.hi().max(0) as usize;
        let ranks = alloc::vec![(0..=tq).map(|q| c.rank(q as i64)).collect()];
        let vertical = alloc::vec![(0..=tq).map(|q| c.diff(q as i64)).collect()];
        DoubleComplex::new(ranks, alloc::vec![Vec::new()], vertical)
    }

    pub fn tops(&self) -> (usize, usize) {
        (self.ranks.len() - 1, self.ranks[0].len() - 1)
    }

    pub fn rank(&self, p: usize, q: usize) -> usize {
        self.ranks.get(p).and_then(|c| c.get(q)).copied().unwrap_or(0)
    }

    pub fn horizontal(&self, p: usize, q: usize) -> &IntMatrix {
        &self.horizontal[p][q]
    }

    pub fn vertical(&self, p: usize, q: usize) -> &IntMatrix {
        &self.vertical[p][q]
    }

    /// Blocks `(p, q)` of total degree `n = q - p`, by increasing `p`, with their offsets.
    pub fn blocks(&self, n: i64) -> Vec<(usize, usize, usize)> {
        let (tp, tq) = self.tops();
        let mut out = Vec::new();
        let mut offset = 0;
        for p in 0..=tp {
            let q = n + p as i64;
            if q < 0 || q > tq as i64 {
                continue;
            }
            let q = q as usize;
            out.push((p, q, offset));
            offset += self.ranks[p][q];
        }
        out
    }

    /// Offset of block `(p, q)` inside `Tot^{q-p}`.
    pub fn offset(&self, p: usize, q: usize) -> usize {
        self.blocks(q as i64 - p as i64)
            .into_iter()
            .find(|&(a, _, _)| a == p)
            .map(|(_, _, o)| o)
            .expect("block inside the grid")
    }

    /// `Tot^n = ⊕_{q-p=n} D^q_p` with `d = d_h + (-1)^p d_v`.
    pub fn tot(&self) -> Result<Complex, DkError> {
        let (tp, tq) = self.tops();
        let (lo, hi) = (-(tp as i64), tq as i64);
        let rank = |n: i64| self.blocks(n).iter().map(|&(p, q, _)| self.ranks[p][q]).sum::<usize>();
        let ranks: Vec<usize> = (lo..=hi).map(rank).collect();
        let mut diffs = Vec::new();
        for n in lo..hi {
            let mut d = IntMatrix::zeros(rank(n + 1), rank(n));
            for (p, q, col) in self.blocks(n) {
                if p > 0 {
                    place(&mut d, self.offset(p - 1, q), col, &self.horizontal[p][q]);
                }
                if q < tq {
                    let v = if p % 2 == 0 { self.vertical[p][q].clone() } else { self.vertical[p][q].neg() };
                    place(&mut d, self.offset(p, q + 1), col, &v);
                }
            }
            diffs.push(d);
        }
        for i in 1..diffs.len() {
            if !diffs[i].mul(&diffs[i - 1]).is_zero() {
                return Err(DkError::Invalid(alloc::format!("Tot has d^2 != 0 in degree {}", lo + i as i64 - 1)));
            }
        }
        Complex::new(lo, ranks, diffs)
    }
}

/// A basis element of `i(K)^q_p`: horizontal surjection `σ : [p] ->> [m]`, vertical
/// surjection `θ : [q] ->> [r]`, and a basis index of `K^{r-m}`. Only `m = 0` or `r = 0` occur.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub(crate) struct Label {
    pub h: Surj,
    pub v: Surj,
    pub b: usize,
}

impl Label {
    pub fn degree(&self) -> i64 {
        self.v.target() as i64 - self.h.target() as i64
    }
}

pub(crate) type Sparse = Vec<(Label, BigInt)>;

fn sign(e: usize) -> BigInt {
    if e % 2 == 0 {
        BigInt::one()
    } else {
        -BigInt::one()
    }
}

/// Structure maps of `i(K)` on labels, read off from the denormalization rules in each
/// direction. The horizontal differential of row 0 and the vertical one of column 0 are both
/// the differential of `K`.
pub(crate) struct Embedding<'a> {
    k: &'a Complex,
}

impl<'a> Embedding<'a> {
    pub fn new(k: &'a Complex) -> Self {
        Embedding { k }
    }

    pub fn labels(&self, p: usize, q: usize) -> Vec<Label> {
        let mut out = Vec::new();
        for h in Surj::all(p) {
            for v in Surj::all(q) {
                if h.target() != 0 && v.target() != 0 {
                    continue;
                }
                let deg = v.target() as i64 - h.target() as i64;
                for b in 0..self.k.rank(deg) {
                    out.push(Label { h, v, b });
                }
            }
        }
        out
    }

    /// `d_i` on a label at horizontal level `p >= 1`.
    pub fn h_face(&self, l: &Label, i: usize) -> Sparse {
        match l.h.face(i) {
            Face::Same(h) => alloc::vec![(Label { h, ..*l }, BigInt::one())],
            Face::Last(h) => {
                let m = l.h.target();
                let d = self.k.diff(l.degree());
                (0..d.rows())
                    .filter(|&row| !d.get(row, l.b).is_zero())
                    .map(|row| (Label { h, v: l.v, b: row }, d.get(row, l.b) * sign(m)))
                    .collect()
            }
            Face::Zero => Vec::new(),
        }
    }

    pub fn h_degen(&self, l: &Label, j: usize) -> Label {
        Label { h: l.h.degeneracy(j), ..*l }
    }

    /// `δ^i` on a label at vertical level `q`.
    pub fn v_coface(&self, l: &Label, i: usize) -> Sparse {
        let mut out = Vec::new();
        for (v, last) in l.v.face_preimages(i) {
            if !last {
                out.push((Label { v, ..*l }, BigInt::one()));
            } else if l.h.target() == 0 {
                let d = self.k.diff(l.degree());
                let s = sign(v.target());
                for row in 0..d.rows() {
                    if !d.get(row, l.b).is_zero() {
                        out.push((Label { h: l.h, v, b: row }, d.get(row, l.b) * &s));
                    }
                }
            }
        }
        out
    }

    pub fn v_codegen(&self, l: &Label, j: usize) -> Option<Label> {
        l.v.undegenerate(j).map(|v| Label { v, ..*l })
    }
}

fn matrix_from(
    source: &[Label],
    target: &BTreeMap<Label, usize>,
    rows: usize,
    image: impl Fn(&Label) -> Sparse,
) -> IntMatrix {
    let mut m = IntMatrix::zeros(rows, source.len());
    for (col, l) in source.iter().enumerate() {
        for (t, c) in image(l) {
            m.add_to(target[&t], col, &c);
        }
    }
    m
}

/// `i(K)` truncated at `(top_p, top_q)`: the chain part `K^{<=0}` is denormalized
/// simplicially along row 0, the cochain part `K^{>=0}` cosimplicially, with `K^0` at
/// `(0, 0)`. Every structure map is audited on construction.
pub fn embed_i(k: &Complex, top_p: usize, top_q: usize) -> Result<MixedObject, DkError> {
    let e = Embedding::new(k);
    let labels: Vec<Vec<Vec<Label>>> = (0..=top_p).map(|p| (0..=top_q).map(|q| e.labels(p, q)).collect()).collect();
    let index: Vec<Vec<BTreeMap<Label, usize>>> = labels
        .iter()
        .map(|col| col.iter().map(|ls| ls.iter().enumerate().map(|(i, l)| (*l, i)).collect()).collect())
        .collect();
    let size = |p: usize, q: usize| labels[p][q].len();
    let mut rows = Vec::new();
    for q in 0..=top_q {
        let faces = (0..=top_p)
            .map(|p| {
                if p == 0 {
                    return Vec::new();
                }
                (0..=p)
                    .map(|i| matrix_from(&labels[p][q], &index[p - 1][q], size(p - 1, q), |l| e.h_face(l, i)))
                    .collect()
            })
            .collect();
        let degens = (0..top_p)
            .map(|p| {
                (0..=p)
                    .map(|j| {
                        matrix_from(&labels[p][q], &index[p + 1][q], size(p + 1, q), |l| {
                            alloc::vec![(e.h_degen(l, j), BigInt::one())]
                        })
                    })
                    .collect()
            })
            .collect();
        rows.push(SimplicialModule::new((0..=top_p).map(|p| size(p, q)).collect(), faces, degens)?);
    }
    let mut columns = Vec::new();
    for p in 0..=top_p {
        let cofaces = (0..top_q)
            .map(|q| {
                (0..=q + 1)
                    .map(|i| matrix_from(&labels[p][q], &index[p][q + 1], size(p, q + 1), |l| e.v_coface(l, i)))
                    .collect()
            })
            .collect();
        let codegens = (0..=top_q)
            .map(|q| {
                (0..q)
                    .map(|j| {
                        matrix_from(&labels[p][q], &index[p][q - 1], size(p, q - 1), |l| {
                            e.v_codegen(l, j).into_iter().map(|t| (t, BigInt::one())).collect()
                        })
                    })
                    .collect()
            })
            .collect();
        columns.push(CosimplicialModule::new((0..=top_q).map(|q| size(p, q)).collect(), cofaces, codegens)?);
    }
    MixedObject::new(rows, columns)
}

/// `i(K)` with one level of margin beyond the amplitudes of `K`.
pub fn embed_i_default(k: &Complex) -> Result<MixedObject, DkError> {
    let (h, v) = k.amplitudes();
    embed_i(k, h + 1, v + 1)
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::vec;

    fn m(rows: usize, cols: usize, data: &[i64]) -> IntMatrix {
        IntMatrix::from_i64(rows, cols, data)
    }

    #[test]
    fn degree_zero_gives_constant_object() {
        let k = Complex::concentrated(0, 2);
        let x = embed_i(&k, 3, 3).unwrap();
        for p in 0..=3 {
            for q in 0..=3 {
                assert_eq!(x.rank(p, q), 2);
            }
        }
        assert_eq!(x.tot_normalized().unwrap(), k);
    }

    #[test]
    fn chain_part_only_is_simplicial() {
        let k = Complex::two_term(-1, m(1, 1, &[1])).unwrap();
        let x = embed_i(&k, 3, 2).unwrap();
        for p in 0..=3 {
            assert_eq!(x.rank(p, 1), x.rank(p, 0));
        }
        assert_eq!(x.tot_normalized().unwrap(), k);
    }

    #[test]
    fn two_sided_round_trip() {
        let k = Complex::new(-1, vec![1, 2, 1], vec![m(2, 1, &[1, 1]), m(1, 2, &[1, -1])]).unwrap();
        let x = embed_i_default(&k).unwrap();
        assert_eq!(x.tot_normalized().unwrap(), k);
    }

    #[test]
    fn square_of_identities_is_acyclic() {
        let id = m(1, 1, &[1]);
        let ranks = vec![vec![1, 1], vec![1, 1]];
        let h = vec![vec![IntMatrix::zeros(0, 1), IntMatrix::zeros(0, 1)], vec![id.clone(), id.clone()]];
        let v = vec![vec![id.clone(), IntMatrix::zeros(0, 1)], vec![id.clone(), IntMatrix::zeros(0, 1)]];
        let d = DoubleComplex::new(ranks, h, v).unwrap();
        let t = d.tot().unwrap();
        assert_eq!(t.ranks(), &[1, 2, 1]);
        assert!(t.is_acyclic());
    }

    #[test]
    fn single_column_totalizes_to_itself() {
        let c = Complex::two_term(0, m(2, 1, &[1, 2])).unwrap();
        assert_eq!(DoubleComplex::column(&c).unwrap().tot().unwrap(), c);
    }

    #[test]
    fn truncation_edge_is_reported() {
        let k = Complex::concentrated(-2, 1);
        let x = embed_i(&k, 2, 1).unwrap();
        assert!(matches!(x.tot_normalized(), Err(DkError::Truncation(_))));
    }
}
