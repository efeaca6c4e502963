//! Automorphism groups of the catalog algebras and their action on [p]-maps.
//!
//! Automorphisms act on row vectors from the right. A matrix `A` acts on a
//! [p]-map `φ` by `x φ' = ((x A) φ) A⁻¹`; with this convention
//! `conj(AB, φ) = conj(A, conj(B, φ))`.

use std::collections::{HashSet, VecDeque};

use crate::error::{Error, Result};
use crate::field::{Fe, Field};
use crate::liealg::{CatalogName, LieAlg};
use crate::linalg::{SqMat, Vect};
use crate::pmap::{evaluate_images, PMapImages};

/// An automorphism together with its inverse.
#[derive(Copy, Clone, Debug, PartialEq, Eq, Hash)]
pub struct AutMat {
    m: SqMat,
    inv: SqMat,
}

impl AutMat {
    /// Wraps `m` after checking that it is an automorphism of `l`.
    pub fn new(l: &LieAlg, m: SqMat) -> Result<AutMat> {
        if !is_automorphism(l, &m) {
            return Err(Error::Domain("matrix is not an automorphism".into()));
        }
        let inv = m.inverse(l.field()).expect("automorphisms are invertible");
        Ok(AutMat { m, inv })
    }

    fn from_invertible(f: &Field, m: SqMat) -> AutMat {
        let inv = m.inverse(f).expect("shape matrices are invertible");
        AutMat { m, inv }
    }

    pub fn identity(f: &Field, n: usize) -> AutMat {
        let m = SqMat::identity(f, n);
        AutMat { m, inv: m }
    }

    pub fn matrix(&self) -> &SqMat {
        &self.m
    }

    pub fn inverse_matrix(&self) -> &SqMat {
        &self.inv
    }

    pub fn inverse(&self) -> AutMat {
        AutMat { m: self.inv, inv: self.m }
    }

    /// The product `self · o` (apply `self` first on row vectors).
    pub fn compose(&self, f: &Field, o: &AutMat) -> AutMat {
        AutMat { m: self.m.mul(f, &o.m), inv: o.inv.mul(f, &self.inv) }
    }
}

/// Invertible and `[x_i A, x_j A] = [x_i, x_j] A` for all basis pairs.
pub fn is_automorphism(l: &LieAlg, a: &SqMat) -> bool {
    let f = l.field();
    let n = l.dim();
    if a.n() != n || a.det(f).is_zero() {
        return false;
    }
    for i in 0..n {
        for j in i + 1..n {
            let lhs = l.bracket(&a.row(i), &a.row(j));
            let rhs = a.vec_mul(f, &l.basis_bracket(i, j));
            if lhs != rhs {
                return false;
            }
        }
    }
    true
}

/// `x_i φ' = ((x_i A) φ) A⁻¹`.
pub fn conjugate_pmap(l: &LieAlg, a: &AutMat, images: &PMapImages) -> PMapImages {
    let f = l.field();
    let rows: Vec<Vect> = (0..l.dim())
        .map(|i| a.inv.vec_mul(f, &evaluate_images(l, images, &a.m.row(i))))
        .collect();
    PMapImages::new(&rows)
}

/// Like [`conjugate_pmap`] but checks that `a` is an automorphism of `l`.
pub fn conjugate_pmap_checked(l: &LieAlg, a: &SqMat, images: &PMapImages) -> Result<PMapImages> {
    let a = AutMat::new(l, *a)?;
    Ok(conjugate_pmap(l, &a, images))
}

/// The automorphism group of a catalog algebra, as a matrix shape with free
/// parameters.
#[derive(Clone, Debug)]
struct Shape {
    name: CatalogName,
    n: usize,
    free: Vec<(usize, usize)>,
}

impl Shape {
    fn of(l: &LieAlg) -> Result<Shape> {
        let name = l.catalog_name().ok_or(Error::NotCatalog)?;
        let n = name.dim();
        let free = match name {
            CatalogName::L32 => vec![(0, 0), (0, 1), (0, 2), (1, 0), (1, 1), (1, 2)],
            CatalogName::L42 => vec![
                (0, 0),
                (0, 1),
                (0, 2),
                (0, 3),
                (1, 0),
                (1, 1),
                (1, 2),
                (1, 3),
                (3, 2),
                (3, 3),
            ],
            CatalogName::L43 => vec![(0, 0), (0, 1), (0, 2), (0, 3), (1, 1), (1, 2), (1, 3)],
            _ => (0..n).flat_map(|i| (0..n).map(move |j| (i, j))).collect(),
        };
        Ok(Shape { name, n, free })
    }

    /// Fills in the dependent entries; `None` when the matrix is singular.
    fn build(&self, f: &Field, params: &[Fe]) -> Option<SqMat> {
        let mut m = SqMat::zero(self.n);
        for (&(i, j), &x) in self.free.iter().zip(params) {
            m.set(i, j, x);
        }
        match self.name {
            CatalogName::L32 | CatalogName::L42 => {
                let d = f.sub(f.mul(m.get(0, 0), m.get(1, 1)), f.mul(m.get(0, 1), m.get(1, 0)));
                if d.is_zero() || (self.n == 4 && m.get(3, 3).is_zero()) {
                    return None;
                }
                m.set(2, 2, d);
            }
            CatalogName::L43 => {
                let (a11, a22, a23) = (m.get(0, 0), m.get(1, 1), m.get(1, 2));
                let d1 = f.mul(a11, a22);
                if d1.is_zero() {
                    return None;
                }
                m.set(2, 2, d1);
                m.set(2, 3, f.mul(a11, a23));
                m.set(3, 3, f.mul(a11, d1));
            }
            _ => {
                if m.det(f).is_zero() {
                    return None;
                }
            }
        }
        Some(m)
    }

    fn identity_params(&self, f: &Field) -> Vec<Fe> {
        self.free
            .iter()
            .map(|&(i, j)| if i == j { f.one() } else { Fe::ZERO })
            .collect()
    }
}

/// `|GL_n(F_q)|`.
pub fn gl_order(q: u128, n: u32) -> u128 {
    let qn = q.pow(n);
    (0..n).map(|i| qn - q.pow(i)).product()
}

/// Order of the automorphism group of a catalog algebra.
pub fn aut_order(l: &LieAlg) -> Result<u128> {
    let name = l.catalog_name().ok_or(Error::NotCatalog)?;
    let q = l.field().order() as u128;
    Ok(match name {
        CatalogName::L32 => gl_order(q, 2) * q * q,
        CatalogName::L42 => gl_order(q, 2) * q.pow(4) * q * (q - 1),
        CatalogName::L43 => (q - 1) * (q - 1) * q.pow(5),
        _ => gl_order(q, name.dim() as u32),
    })
}

/// Streams the automorphism group of a catalog algebra, lexicographically in
/// the free parameters of its matrix shape.
pub fn enumerate_automorphisms(l: &LieAlg) -> Result<impl Iterator<Item = AutMat> + '_> {
    let shape = Shape::of(l)?;
    let f = l.field();
    let q = f.order();
    let k = shape.free.len();
    let total = (q as u128).pow(k as u32);
    Ok((0..total).filter_map(move |mut code| {
        let mut params = vec![Fe::ZERO; k];
        for slot in params.iter_mut().rev() {
            *slot = Fe::from_index((code % q as u128) as usize);
            code /= q as u128;
        }
        shape.build(f, &params).map(|m| AutMat::from_invertible(f, m))
    }))
}

/// A small generating set: single off-diagonal parameters set to each
/// element of an additive basis, and single diagonal parameters set to a
/// multiplicative generator.
pub fn aut_generators(l: &LieAlg) -> Result<Vec<AutMat>> {
    let shape = Shape::of(l)?;
    let f = l.field();
    let base = shape.identity_params(f);
    let id = SqMat::identity(f, shape.n);
    let mut out: Vec<AutMat> = Vec::new();
    let mut seen = HashSet::new();
    seen.insert(id);
    for (pos, &(i, j)) in shape.free.iter().enumerate() {
        let values: Vec<Fe> = if i == j {
            vec![f.primitive_element()]
        } else {
            f.additive_basis().to_vec()
        };
        for c in values {
            let mut params = base.clone();
            params[pos] = c;
            if let Some(m) = shape.build(f, &params) {
                if seen.insert(m) {
                    out.push(AutMat::from_invertible(f, m));
                }
            }
        }
    }
    Ok(out)
}

/// The orbit of `start` under the group generated by `gens`, by breadth-first
/// search. Returns `None` if the orbit exceeds `limit` elements.
pub fn orbit(
    l: &LieAlg,
    gens: &[AutMat],
    start: &PMapImages,
    limit: usize,
) -> Option<Vec<PMapImages>> {
    let mut seen = HashSet::new();
    let mut out = vec![*start];
    let mut queue = VecDeque::from([*start]);
    seen.insert(start.key());
    while let Some(cur) = queue.pop_front() {
        for g in gens {
            let next = conjugate_pmap(l, g, &cur);
            if seen.insert(next.key()) {
                if out.len() >= limit {
                    return None;
                }
                out.push(next);
                queue.push_back(next);
            }
        }
    }
    Some(out)
}

/// Closed-form coefficient actions, used to cross-check [`conjugate_pmap`].
pub mod closed_form {
    use super::*;

    fn d2(f: &Field, a: &SqMat) -> Fe {
        f.sub(f.mul(a.get(0, 0), a.get(1, 1)), f.mul(a.get(0, 1), a.get(1, 0)))
    }

    /// Heisenberg algebra, `p ≥ 3`, `x1 ↦ αx3`, `x2 ↦ βx3`:
    /// `α' = (a11^p α + a12^p β)/d`, `β' = (a21^p α + a22^p β)/d`.
    pub fn heisenberg_odd(f: &Field, a: &SqMat, alpha: Fe, beta: Fe) -> (Fe, Fe) {
        let di = f.inv_nz(d2(f, a));
        let fr = |i, j| f.frobenius(a.get(i, j));
        let na = f.mul(di, f.add(f.mul(fr(0, 0), alpha), f.mul(fr(0, 1), beta)));
        let nb = f.mul(di, f.add(f.mul(fr(1, 0), alpha), f.mul(fr(1, 1), beta)));
        (na, nb)
    }

    /// Heisenberg algebra, `p = 2`, `x1 ↦ αx3`, `x2 ↦ βx3`:
    /// `α' = (a11²α + a12²β + a11a12)/d`, `β' = (a21²α + a22²β + a21a22)/d`.
    pub fn heisenberg_char2(f: &Field, a: &SqMat, alpha: Fe, beta: Fe) -> (Fe, Fe) {
        let di = f.inv_nz(d2(f, a));
        let row = |i: usize| {
            let (u, v) = (a.get(i, 0), a.get(i, 1));
            let s = f.add(
                f.add(f.mul(f.mul(u, u), alpha), f.mul(f.mul(v, v), beta)),
                f.mul(u, v),
            );
            f.mul(di, s)
        };
        (row(0), row(1))
    }

    /// `L_{4,2}`, `p ≥ 3`, [p]-maps vanishing on the center with
    /// `x1 ↦ α1x3 + β1x4`, `x2 ↦ α2x3 + β2x4`. Returns the matrix acting on
    /// the row vector `(α1, α2, β1, β2)`: the Kronecker product of the inverse
    /// of the center block with the Frobenius-twisted top block, transposed.
    pub fn l42_tensor(f: &Field, a: &SqMat) -> SqMat {
        let d = a.get(2, 2);
        let (a43, a44) = (a.get(3, 2), a.get(3, 3));
        let di = f.inv_nz(d);
        let a44i = f.inv_nz(a44);
        let cinv = [[di, Fe::ZERO], [f.neg(f.mul(a43, f.mul(di, a44i))), a44i]];
        let pt = [
            [f.frobenius(a.get(0, 0)), f.frobenius(a.get(1, 0))],
            [f.frobenius(a.get(0, 1)), f.frobenius(a.get(1, 1))],
        ];
        let mut m = SqMat::zero(4);
        for r in 0..2 {
            for c in 0..2 {
                for i in 0..2 {
                    for j in 0..2 {
                        m.set(2 * r + i, 2 * c + j, f.mul(cinv[r][c], pt[i][j]));
                    }
                }
            }
        }
        m
    }

    /// `L_{4,3}`, `p = 3`, `x1 ↦ αx4`, `x2 ↦ βx4`, `x3 ↦ γx4`:
    /// `(α',β',γ') = (a11²a22)⁻¹ (α,β,γ) M + (a12/a22, 0, 0)` with
    /// `M = [[a11³,0,0],[a12³,a22³,0],[a13³,a23³,d1³]]`.
    pub fn l43_char3(f: &Field, a: &SqMat, v: [Fe; 3]) -> [Fe; 3] {
        let (a11, a12, a13) = (a.get(0, 0), a.get(0, 1), a.get(0, 2));
        let (a22, a23) = (a.get(1, 1), a.get(1, 2));
        let d1 = f.mul(a11, a22);
        let c = |x| f.pow(x, 3);
        let m = [
            [c(a11), Fe::ZERO, Fe::ZERO],
            [c(a12), c(a22), Fe::ZERO],
            [c(a13), c(a23), c(d1)],
        ];
        let s = f.inv_nz(f.mul(f.mul(a11, a11), a22));
        let mut out = [Fe::ZERO; 3];
        for (j, o) in out.iter_mut().enumerate() {
            let mut acc = Fe::ZERO;
            for (i, &vi) in v.iter().enumerate() {
                acc = f.add(acc, f.mul(vi, m[i][j]));
            }
            *o = f.mul(s, acc);
        }
        out[0] = f.add(out[0], f.mul(a12, f.inv_nz(a22)));
        out
    }
}
