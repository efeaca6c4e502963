//! Linear algebra over a [`Field`]: small fixed-size row vectors and square
//! matrices for the hot paths, plus general row reduction on `Vec` matrices.

use std::fmt;

use crate::field::{Fe, Field};

/// Largest supported Lie algebra dimension.
pub const MAX_DIM: usize = 4;

/// A row coordinate vector of length at most [`MAX_DIM`].
#[derive(Copy, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Vect {
    dim: u8,
    c: [Fe; MAX_DIM],
}

impl fmt::Debug for Vect {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let idx: Vec<usize> = self.coords().iter().map(|x| x.index()).collect();
        write!(f, "{idx:?}")
    }
}

impl Vect {
    pub fn zero(dim: usize) -> Vect {
        assert!(dim <= MAX_DIM, "dimension {dim} exceeds {MAX_DIM}");
        Vect { dim: dim as u8, c: [Fe::ZERO; MAX_DIM] }
    }

    /// The `i`-th standard basis vector (0-based).
    pub fn basis(f: &Field, dim: usize, i: usize) -> Vect {
        let mut v = Vect::zero(dim);
        v.c[i] = f.one();
        v
    }

    pub fn from_slice(c: &[Fe]) -> Vect {
        let mut v = Vect::zero(c.len());
        v.c[..c.len()].copy_from_slice(c);
        v
    }

    pub fn dim(&self) -> usize {
        self.dim as usize
    }

    pub fn coords(&self) -> &[Fe] {
        &self.c[..self.dim as usize]
    }

    #[inline]
    pub fn get(&self, i: usize) -> Fe {
        self.c[i]
    }

    #[inline]
    pub fn set(&mut self, i: usize, x: Fe) {
        self.c[i] = x;
    }

    pub fn is_zero(&self) -> bool {
        self.coords().iter().all(|x| x.is_zero())
    }

    #[inline]
    pub fn add(&self, f: &Field, o: &Vect) -> Vect {
        let mut r = *self;
        for i in 0..self.dim() {
            r.c[i] = f.add(self.c[i], o.c[i]);
        }
        r
    }

    #[inline]
    pub fn sub(&self, f: &Field, o: &Vect) -> Vect {
        let mut r = *self;
        for i in 0..self.dim() {
            r.c[i] = f.sub(self.c[i], o.c[i]);
        }
        r
    }

    pub fn neg(&self, f: &Field) -> Vect {
        let mut r = *self;
        for i in 0..self.dim() {
            r.c[i] = f.neg(self.c[i]);
        }
        r
    }

    #[inline]
    pub fn scale(&self, f: &Field, s: Fe) -> Vect {
        let mut r = *self;
        for i in 0..self.dim() {
            r.c[i] = f.mul(s, self.c[i]);
        }
        r
    }

    /// `self + s * o`.
    #[inline]
    pub fn axpy(&self, f: &Field, s: Fe, o: &Vect) -> Vect {
        if s.is_zero() {
            return *self;
        }
        let mut r = *self;
        for i in 0..self.dim() {
            r.c[i] = f.add(self.c[i], f.mul(s, o.c[i]));
        }
        r
    }

    /// Entrywise Frobenius.
    pub fn frobenius(&self, f: &Field) -> Vect {
        let mut r = *self;
        for i in 0..self.dim() {
            r.c[i] = f.frobenius(self.c[i]);
        }
        r
    }

    /// All vectors of the given dimension, in lexicographic order.
    pub fn all(f: &Field, dim: usize) -> impl Iterator<Item = Vect> + '_ {
        let q = f.order();
        let total = q.pow(dim as u32);
        (0..total).map(move |mut code| {
            let mut v = Vect::zero(dim);
            for i in (0..dim).rev() {
                v.c[i] = Fe::from_index(code % q);
                code /= q;
            }
            v
        })
    }
}

/// A square matrix of size at most [`MAX_DIM`] acting on row vectors from the
/// right.
#[derive(Copy, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SqMat {
    n: u8,
    m: [[Fe; MAX_DIM]; MAX_DIM],
}

impl fmt::Debug for SqMat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_list().entries((0..self.n()).map(|i| self.row(i))).finish()
    }
}

impl SqMat {
    pub fn zero(n: usize) -> SqMat {
        assert!(n <= MAX_DIM, "dimension {n} exceeds {MAX_DIM}");
        SqMat { n: n as u8, m: [[Fe::ZERO; MAX_DIM]; MAX_DIM] }
    }

    pub fn identity(f: &Field, n: usize) -> SqMat {
        let mut a = SqMat::zero(n);
        for i in 0..n {
            a.m[i][i] = f.one();
        }
        a
    }

    pub fn from_rows(rows: &[Vect]) -> SqMat {
        let n = rows.len();
        let mut a = SqMat::zero(n);
        for (i, r) in rows.iter().enumerate() {
            assert_eq!(r.dim(), n, "row length must match the row count");
            a.m[i] = r.c;
        }
        a
    }

    pub fn n(&self) -> usize {
        self.n as usize
    }

    #[inline]
    pub fn get(&self, i: usize, j: usize) -> Fe {
        self.m[i][j]
    }

    #[inline]
    pub fn set(&mut self, i: usize, j: usize, x: Fe) {
        self.m[i][j] = x;
    }

    pub fn row(&self, i: usize) -> Vect {
        Vect { dim: self.n, c: self.m[i] }
    }

    pub fn set_row(&mut self, i: usize, v: &Vect) {
        self.m[i] = v.c;
    }

    pub fn rows(&self) -> Vec<Vect> {
        (0..self.n()).map(|i| self.row(i)).collect()
    }

    pub fn is_zero(&self) -> bool {
        (0..self.n()).all(|i| self.row(i).is_zero())
    }

    pub fn add(&self, f: &Field, o: &SqMat) -> SqMat {
        let mut r = *self;
        for i in 0..self.n() {
            r.set_row(i, &self.row(i).add(f, &o.row(i)));
        }
        r
    }

    /// Row vector times matrix.
    #[inline]
    pub fn vec_mul(&self, f: &Field, v: &Vect) -> Vect {
        let mut r = Vect::zero(self.n());
        for k in 0..self.n() {
            let s = v.c[k];
            if !s.is_zero() {
                r = r.axpy(f, s, &self.row(k));
            }
        }
        r
    }

    pub fn mul(&self, f: &Field, o: &SqMat) -> SqMat {
        let mut r = SqMat::zero(self.n());
        for i in 0..self.n() {
            r.set_row(i, &o.vec_mul(f, &self.row(i)));
        }
        r
    }

    pub fn pow(&self, f: &Field, e: u32) -> SqMat {
        let mut acc = SqMat::identity(f, self.n());
        for _ in 0..e {
            acc = acc.mul(f, self);
        }
        acc
    }

    pub fn transpose(&self) -> SqMat {
        let mut r = SqMat::zero(self.n());
        for i in 0..self.n() {
            for j in 0..self.n() {
                r.m[j][i] = self.m[i][j];
            }
        }
        r
    }

    /// Entrywise Frobenius.
    pub fn frobenius(&self, f: &Field) -> SqMat {
        let mut r = *self;
        for i in 0..self.n() {
            r.set_row(i, &self.row(i).frobenius(f));
        }
        r
    }

    pub fn to_rows(&self) -> Vec<Vec<Fe>> {
        (0..self.n()).map(|i| self.row(i).coords().to_vec()).collect()
    }

    pub fn det(&self, f: &Field) -> Fe {
        det(f, &self.to_rows())
    }

    pub fn inverse(&self, f: &Field) -> Option<SqMat> {
        let inv = inverse(f, &self.to_rows())?;
        let rows: Vec<Vect> = inv.iter().map(|r| Vect::from_slice(r)).collect();
        Some(SqMat::from_rows(&rows))
    }

    /// Packs the entries into an integer, one byte per entry, row-major.
    pub fn key(&self) -> u128 {
        let mut k = 0u128;
        for i in 0..self.n() {
            for j in 0..self.n() {
                k = (k << 8) | self.m[i][j].index() as u128;
            }
        }
        k
    }
}

/// Reduces `rows` in place to reduced row echelon form, dropping zero rows,
/// and returns the pivot columns.
pub fn rref(f: &Field, rows: &mut Vec<Vec<Fe>>) -> Vec<usize> {
    let ncols = rows.first().map_or(0, |r| r.len());
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..ncols {
        let Some(sel) = (r..rows.len()).find(|&i| !rows[i][c].is_zero()) else {
            continue;
        };
        rows.swap(r, sel);
        let inv = f.inv_nz(rows[r][c]);
        for x in rows[r].iter_mut() {
            *x = f.mul(*x, inv);
        }
        let pivot_row = rows[r].clone();
        for (i, row) in rows.iter_mut().enumerate() {
            if i != r && !row[c].is_zero() {
                let s = f.neg(row[c]);
                for (x, &y) in row.iter_mut().zip(&pivot_row) {
                    *x = f.add(*x, f.mul(s, y));
                }
            }
        }
        pivots.push(c);
        r += 1;
        if r == rows.len() {
            break;
        }
    }
    rows.truncate(r);
    pivots
}

pub fn rank(f: &Field, rows: &[Vec<Fe>]) -> usize {
    let mut m = rows.to_vec();
    rref(f, &mut m).len()
}

/// Basis of `{x : A x = 0}` for a matrix with `ncols` columns.
pub fn nullspace(f: &Field, a: &[Vec<Fe>], ncols: usize) -> Vec<Vec<Fe>> {
    let mut m = a.to_vec();
    let pivots = rref(f, &mut m);
    let free: Vec<usize> = (0..ncols).filter(|c| !pivots.contains(c)).collect();
    free.iter()
        .map(|&fc| {
            let mut x = vec![Fe::ZERO; ncols];
            x[fc] = f.one();
            for (row, &pc) in m.iter().zip(&pivots) {
                x[pc] = f.neg(row[fc]);
            }
            x
        })
        .collect()
}

/// Basis of `{v : v M = 0}` where `M` has `nrows` rows.
pub fn left_kernel(f: &Field, m: &[Vec<Fe>], nrows: usize) -> Vec<Vec<Fe>> {
    let ncols = m.first().map_or(0, |r| r.len());
    let t: Vec<Vec<Fe>> = (0..ncols)
        .map(|j| (0..nrows).map(|i| m[i][j]).collect())
        .collect();
    nullspace(f, &t, nrows)
}

/// One solution of `A x = b`, if any.
pub fn solve(f: &Field, a: &[Vec<Fe>], b: &[Fe], ncols: usize) -> Option<Vec<Fe>> {
    let mut aug: Vec<Vec<Fe>> = a
        .iter()
        .zip(b)
        .map(|(row, &bi)| {
            let mut r = row.clone();
            r.push(bi);
            r
        })
        .collect();
    let pivots = rref(f, &mut aug);
    if pivots.last() == Some(&ncols) {
        return None;
    }
    let mut x = vec![Fe::ZERO; ncols];
    for (row, &pc) in aug.iter().zip(&pivots) {
        x[pc] = row[ncols];
    }
    Some(x)
}

pub fn det(f: &Field, a: &[Vec<Fe>]) -> Fe {
    let n = a.len();
    let mut m = a.to_vec();
    let mut d = f.one();
    for c in 0..n {
        let Some(sel) = (c..n).find(|&i| !m[i][c].is_zero()) else {
            return Fe::ZERO;
        };
        if sel != c {
            m.swap(sel, c);
            d = f.neg(d);
        }
        d = f.mul(d, m[c][c]);
        let inv = f.inv_nz(m[c][c]);
        for i in c + 1..n {
            if !m[i][c].is_zero() {
                let s = f.neg(f.mul(m[i][c], inv));
                let pivot_row = m[c].clone();
                for (x, &y) in m[i].iter_mut().zip(&pivot_row) {
                    *x = f.add(*x, f.mul(s, y));
                }
            }
        }
    }
    d
}

pub fn inverse(f: &Field, a: &[Vec<Fe>]) -> Option<Vec<Vec<Fe>>> {
    let n = a.len();
    let mut aug: Vec<Vec<Fe>> = a
        .iter()
        .enumerate()
        .map(|(i, row)| {
            let mut r = row.clone();
            r.extend((0..n).map(|j| if i == j { f.one() } else { Fe::ZERO }));
            r
        })
        .collect();
    let pivots = rref(f, &mut aug);
    if pivots.len() < n || pivots[n - 1] != n - 1 {
        return None;
    }
    Some(aug.into_iter().map(|r| r[n..].to_vec()).collect())
}

/// A subspace of `F^dim`, stored as a reduced row echelon basis so that equal
/// subspaces compare equal.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Subspace {
    ambient: usize,
    basis: Vec<Vect>,
}

impl Subspace {
    pub fn zero(ambient: usize) -> Subspace {
        Subspace { ambient, basis: Vec::new() }
    }

    pub fn full(f: &Field, ambient: usize) -> Subspace {
        let basis = (0..ambient).map(|i| Vect::basis(f, ambient, i)).collect();
        Subspace { ambient, basis }
    }

    pub fn span(f: &Field, ambient: usize, vs: &[Vect]) -> Subspace {
        let mut rows: Vec<Vec<Fe>> = vs.iter().map(|v| v.coords().to_vec()).collect();
        rref(f, &mut rows);
        Subspace { ambient, basis: rows.iter().map(|r| Vect::from_slice(r)).collect() }
    }

    pub fn ambient(&self) -> usize {
        self.ambient
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn is_zero(&self) -> bool {
        self.basis.is_empty()
    }

    pub fn basis(&self) -> &[Vect] {
        &self.basis
    }

    pub fn contains(&self, f: &Field, v: &Vect) -> bool {
        let mut vs = self.basis.clone();
        vs.push(*v);
        Subspace::span(f, self.ambient, &vs).dim() == self.dim()
    }

    pub fn contains_subspace(&self, f: &Field, o: &Subspace) -> bool {
        o.basis.iter().all(|v| self.contains(f, v))
    }

    pub fn sum(&self, f: &Field, o: &Subspace) -> Subspace {
        let mut vs = self.basis.clone();
        vs.extend_from_slice(&o.basis);
        Subspace::span(f, self.ambient, &vs)
    }

    pub fn intersect(&self, f: &Field, o: &Subspace) -> Subspace {
        // (a, b) with a U + b W = 0 gives a U in the intersection.
        let stacked: Vec<Vec<Fe>> = self
            .basis
            .iter()
            .chain(&o.basis)
            .map(|v| v.coords().to_vec())
            .collect();
        let ker = left_kernel(f, &stacked, stacked.len());
        let vs: Vec<Vect> = ker
            .iter()
            .map(|coef| {
                let mut acc = Vect::zero(self.ambient);
                for (c, b) in coef.iter().zip(&self.basis) {
                    acc = acc.axpy(f, *c, b);
                }
                acc
            })
            .collect();
        Subspace::span(f, self.ambient, &vs)
    }

    /// Every element of the subspace, in lexicographic order of coefficients.
    pub fn elements(&self, f: &Field) -> Vec<Vect> {
        let d = self.dim();
        let mut out: Vec<Vect> = Vect::all(f, d)
            .map(|c| {
                let mut acc = Vect::zero(self.ambient);
                for (i, b) in self.basis.iter().enumerate() {
                    acc = acc.axpy(f, c.get(i), b);
                }
                acc
            })
            .collect();
        out.sort();
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn mat(f: &Field, rows: &[&[i64]]) -> Vec<Vec<Fe>> {
        rows.iter()
            .map(|r| r.iter().map(|&x| f.from_int(x)).collect())
            .collect()
    }

    #[test]
    fn inverse_and_det() {
        let f = Field::prime(5).unwrap();
        let a = mat(&f, &[&[1, 2], &[3, 4]]);
        assert_eq!(det(&f, &a), f.from_int(-2));
        let inv = inverse(&f, &a).unwrap();
        let a_sq = SqMat::from_rows(&a.iter().map(|r| Vect::from_slice(r)).collect::<Vec<_>>());
        let i_sq = SqMat::from_rows(&inv.iter().map(|r| Vect::from_slice(r)).collect::<Vec<_>>());
        assert_eq!(a_sq.mul(&f, &i_sq), SqMat::identity(&f, 2));
        assert!(inverse(&f, &mat(&f, &[&[1, 2], &[2, 4]])).is_none());
    }

    #[test]
    fn nullspace_dimension() {
        let f = Field::prime(3).unwrap();
        let a = mat(&f, &[&[1, 1, 0], &[0, 0, 1]]);
        let ns = nullspace(&f, &a, 3);
        assert_eq!(ns.len(), 1);
        assert_eq!(ns[0], vec![f.from_int(2), f.one(), Fe::ZERO]);
        let lk = left_kernel(&f, &mat(&f, &[&[1, 0], &[2, 0], &[0, 1]]), 3);
        assert_eq!(lk.len(), 1);
    }

    #[test]
    fn solve_consistent_and_inconsistent() {
        let f = Field::prime(3).unwrap();
        let a = mat(&f, &[&[1, 1], &[1, 1]]);
        assert!(solve(&f, &a, &[f.one(), f.from_int(2)], 2).is_none());
        let x = solve(&f, &a, &[f.one(), f.one()], 2).unwrap();
        assert_eq!(f.add(x[0], x[1]), f.one());
    }

    #[test]
    fn subspace_operations() {
        let f = Field::prime(2).unwrap();
        let e = |i| Vect::basis(&f, 3, i);
        let u = Subspace::span(&f, 3, &[e(0), e(1)]);
        let w = Subspace::span(&f, 3, &[e(1), e(2)]);
        assert_eq!(u.intersect(&f, &w), Subspace::span(&f, 3, &[e(1)]));
        assert_eq!(u.sum(&f, &w).dim(), 3);
        assert_eq!(u.elements(&f).len(), 4);
        assert_eq!(
            Subspace::span(&f, 3, &[e(0).add(&f, &e(1)), e(1)]),
            u
        );
    }

    #[test]
    fn det_matches_permutation_expansion_gf3() {
        let f = Field::prime(3).unwrap();
        for v in Vect::all(&f, 4) {
            let a = vec![v.coords()[..2].to_vec(), v.coords()[2..].to_vec()];
            let expect = f.sub(f.mul(a[0][0], a[1][1]), f.mul(a[0][1], a[1][0]));
            assert_eq!(det(&f, &a), expect);
            assert_eq!(inverse(&f, &a).is_some(), !expect.is_zero());
        }
    }
}
