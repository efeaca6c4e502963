//! Lie algebras of dimension at most 4 given by structure constants, the
//! catalog of nilpotent ones, and structural invariants.

use std::fmt;
use std::str::FromStr;
use std::sync::Arc;

use crate::error::{Error, Result};
use crate::field::{Fe, Field};
use crate::linalg::{left_kernel, SqMat, Subspace, Vect, MAX_DIM};

/// The nilpotent Lie algebras of dimension at most 4.
#[derive(Copy, Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum CatalogName {
    /// Abelian, dimension 1.
    L11,
    /// Abelian, dimension 2.
    L21,
    /// Abelian, dimension 3.
    L31,
    /// Heisenberg: `[x1,x2] = x3`.
    L32,
    /// Abelian, dimension 4.
    L41,
    /// Heisenberg plus a central line: `[x1,x2] = x3`.
    L42,
    /// Filiform: `[x1,x2] = x3`, `[x1,x3] = x4`.
    L43,
}

impl CatalogName {
    pub const ALL: [CatalogName; 7] = [
        CatalogName::L11,
        CatalogName::L21,
        CatalogName::L31,
        CatalogName::L32,
        CatalogName::L41,
        CatalogName::L42,
        CatalogName::L43,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            CatalogName::L11 => "L_{1,1}",
            CatalogName::L21 => "L_{2,1}",
            CatalogName::L31 => "L_{3,1}",
            CatalogName::L32 => "L_{3,2}",
            CatalogName::L41 => "L_{4,1}",
            CatalogName::L42 => "L_{4,2}",
            CatalogName::L43 => "L_{4,3}",
        }
    }

    /// The subscript used in class labels, e.g. `4,2`.
    pub(crate) fn subscript(self) -> &'static str {
        &self.as_str()[3..6]
    }

    pub fn dim(self) -> usize {
        match self {
            CatalogName::L11 => 1,
            CatalogName::L21 => 2,
            CatalogName::L31 | CatalogName::L32 => 3,
            CatalogName::L41 | CatalogName::L42 | CatalogName::L43 => 4,
        }
    }

    pub fn is_abelian(self) -> bool {
        matches!(
            self,
            CatalogName::L11 | CatalogName::L21 | CatalogName::L31 | CatalogName::L41
        )
    }

    /// Nilpotency class.
    pub fn class(self) -> usize {
        match self {
            CatalogName::L32 | CatalogName::L42 => 2,
            CatalogName::L43 => 3,
            _ => 1,
        }
    }

    pub fn of_dim(dim: usize) -> Result<Vec<CatalogName>> {
        if !(1..=MAX_DIM).contains(&dim) {
            return Err(Error::Unsupported(format!(
                "dimension {dim}; only 1 to {MAX_DIM} are supported"
            )));
        }
        Ok(CatalogName::ALL.into_iter().filter(|c| c.dim() == dim).collect())
    }

    /// Nonzero brackets `[x_i, x_j] = x_m` as 0-based `(i, j, m)`.
    fn relations(self) -> &'static [(usize, usize, usize)] {
        match self {
            CatalogName::L32 | CatalogName::L42 => &[(0, 1, 2)],
            CatalogName::L43 => &[(0, 1, 2), (0, 2, 3)],
            _ => &[],
        }
    }
}

impl fmt::Display for CatalogName {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for CatalogName {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let norm: String = s.chars().filter(|c| !matches!(c, '{' | '}' | '_' | ',')).collect();
        CatalogName::ALL
            .into_iter()
            .find(|c| {
                let n: String = c.as_str().chars().filter(|c| !matches!(c, '{' | '}' | '_' | ',')).collect();
                n == norm
            })
            .ok_or_else(|| Error::Parse(format!("unknown algebra name {s:?}")))
    }
}

/// Structural invariants of a Lie algebra.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Invariants {
    pub center: Subspace,
    pub derived: Subspace,
    /// Lower central series `γ_1 = L ⊇ γ_2 = L' ⊇ …`, ending with the first
    /// repeated term.
    pub lcs: Vec<Subspace>,
    /// Nilpotency class, `None` when the algebra is not nilpotent.
    pub class: Option<usize>,
}

/// A Lie algebra over a finite field, given by the brackets of basis vectors.
#[derive(Clone)]
pub struct LieAlg {
    field: Arc<Field>,
    dim: usize,
    sc: [[Vect; MAX_DIM]; MAX_DIM],
    catalog: Option<CatalogName>,
    class: Option<usize>,
}

impl fmt::Debug for LieAlg {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "LieAlg({} over {}", self.name(), self.field.spec())?;
        for (i, j, v) in self.brackets() {
            write!(f, ", [x{},x{}]={:?}", i + 1, j + 1, v)?;
        }
        write!(f, ")")
    }
}

impl PartialEq for LieAlg {
    fn eq(&self, o: &Self) -> bool {
        self.field == o.field && self.dim == o.dim && self.sc == o.sc
    }
}

impl Eq for LieAlg {}

impl LieAlg {
    /// Builds an algebra from the brackets `[x_i, x_j]` with `i < j`
    /// (0-based); omitted pairs bracket to zero. Checks the Jacobi identity.
    pub fn new(field: Arc<Field>, dim: usize, brackets: &[(usize, usize, Vect)]) -> Result<LieAlg> {
        if !(1..=MAX_DIM).contains(&dim) {
            return Err(Error::Unsupported(format!(
                "dimension {dim}; only 1 to {MAX_DIM} are supported"
            )));
        }
        let zero = Vect::zero(dim);
        let mut sc = [[zero; MAX_DIM]; MAX_DIM];
        for &(i, j, v) in brackets {
            if i >= j || j >= dim {
                return Err(Error::InvalidAlgebra(format!(
                    "bracket indices must satisfy 1 <= i < j <= {dim}, got ({}, {})",
                    i + 1,
                    j + 1
                )));
            }
            if v.dim() != dim {
                return Err(Error::InvalidAlgebra(format!(
                    "bracket value has {} coordinates, expected {dim}",
                    v.dim()
                )));
            }
            if sc[i][j] != zero {
                return Err(Error::InvalidAlgebra(format!(
                    "bracket [x{}, x{}] given twice",
                    i + 1,
                    j + 1
                )));
            }
            sc[i][j] = v;
            sc[j][i] = v.neg(&field);
        }
        let mut alg = LieAlg { field, dim, sc, catalog: None, class: None };
        alg.check_jacobi()?;
        alg.class = alg.invariants().class;
        alg.catalog = CatalogName::of_dim(dim)?
            .into_iter()
            .find(|&c| alg.sc == LieAlg::catalog(alg.field.clone(), c).sc);
        Ok(alg)
    }

    /// The catalog algebra with the given name.
    pub fn catalog(field: Arc<Field>, name: CatalogName) -> LieAlg {
        let dim = name.dim();
        let zero = Vect::zero(dim);
        let mut sc = [[zero; MAX_DIM]; MAX_DIM];
        for &(i, j, m) in name.relations() {
            let v = Vect::basis(&field, dim, m);
            sc[i][j] = v;
            sc[j][i] = v.neg(&field);
        }
        LieAlg { field, dim, sc, catalog: Some(name), class: Some(name.class()) }
    }

    /// All catalog algebras of the given dimension.
    pub fn catalog_of_dim(field: Arc<Field>, dim: usize) -> Result<Vec<LieAlg>> {
        Ok(CatalogName::of_dim(dim)?
            .into_iter()
            .map(|c| LieAlg::catalog(field.clone(), c))
            .collect())
    }

    fn check_jacobi(&self) -> Result<()> {
        let f = &*self.field;
        let n = self.dim;
        for i in 0..n {
            for j in 0..n {
                for k in 0..n {
                    let (a, b, c) = (self.basis(i), self.basis(j), self.basis(k));
                    let t = self
                        .bracket(&self.bracket(&a, &b), &c)
                        .add(f, &self.bracket(&self.bracket(&b, &c), &a))
                        .add(f, &self.bracket(&self.bracket(&c, &a), &b));
                    if !t.is_zero() {
                        return Err(Error::InvalidAlgebra(format!(
                            "Jacobi identity fails for (x{}, x{}, x{})",
                            i + 1,
                            j + 1,
                            k + 1
                        )));
                    }
                }
            }
        }
        Ok(())
    }

    pub fn field(&self) -> &Field {
        &self.field
    }

    pub fn field_arc(&self) -> &Arc<Field> {
        &self.field
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    /// The catalog name if the structure constants are exactly those of a
    /// catalog algebra.
    pub fn catalog_name(&self) -> Option<CatalogName> {
        self.catalog
    }

    pub fn name(&self) -> String {
        self.catalog.map_or_else(|| "custom".to_string(), |c| c.as_str().to_string())
    }

    /// Nilpotency class, `None` if not nilpotent.
    pub fn class(&self) -> Option<usize> {
        self.class
    }

    pub fn basis(&self, i: usize) -> Vect {
        Vect::basis(&self.field, self.dim, i)
    }

    pub fn zero(&self) -> Vect {
        Vect::zero(self.dim)
    }

    /// `[x_i, x_j]` for 0-based basis indices.
    pub fn basis_bracket(&self, i: usize, j: usize) -> Vect {
        self.sc[i][j]
    }

    /// Nonzero brackets with `i < j`, 0-based.
    pub fn brackets(&self) -> Vec<(usize, usize, Vect)> {
        let mut out = Vec::new();
        for i in 0..self.dim {
            for j in i + 1..self.dim {
                if !self.sc[i][j].is_zero() {
                    out.push((i, j, self.sc[i][j]));
                }
            }
        }
        out
    }

    pub fn is_abelian(&self) -> bool {
        self.brackets().is_empty()
    }

    #[inline]
    pub fn bracket(&self, u: &Vect, v: &Vect) -> Vect {
        let f = &*self.field;
        let mut r = Vect::zero(self.dim);
        for i in 0..self.dim {
            let ui = u.get(i);
            if ui.is_zero() {
                continue;
            }
            for j in 0..self.dim {
                let vj = v.get(j);
                if vj.is_zero() || i == j {
                    continue;
                }
                r = r.axpy(f, f.mul(ui, vj), &self.sc[i][j]);
            }
        }
        r
    }

    /// The matrix of `v ↦ [v, x]` acting on row vectors.
    pub fn ad_matrix(&self, x: &Vect) -> SqMat {
        let rows: Vec<Vect> = (0..self.dim).map(|m| self.bracket(&self.basis(m), x)).collect();
        SqMat::from_rows(&rows)
    }

    /// `{v : [v, s] = 0 for all s in S}`.
    pub fn centralizer(&self, s: &Subspace) -> Subspace {
        let f = &*self.field;
        if s.is_zero() {
            return Subspace::full(f, self.dim);
        }
        let m: Vec<Vec<Fe>> = (0..self.dim)
            .map(|i| {
                s.basis()
                    .iter()
                    .flat_map(|b| self.bracket(&self.basis(i), b).coords().to_vec())
                    .collect()
            })
            .collect();
        let ker = left_kernel(f, &m, self.dim);
        let vs: Vec<Vect> = ker.iter().map(|c| Vect::from_slice(c)).collect();
        Subspace::span(f, self.dim, &vs)
    }

    pub fn center(&self) -> Subspace {
        self.centralizer(&Subspace::full(&self.field, self.dim))
    }

    /// `[U, W]`.
    pub fn bracket_space(&self, u: &Subspace, w: &Subspace) -> Subspace {
        let mut vs = Vec::new();
        for a in u.basis() {
            for b in w.basis() {
                vs.push(self.bracket(a, b));
            }
        }
        Subspace::span(&self.field, self.dim, &vs)
    }

    pub fn derived(&self) -> Subspace {
        let full = Subspace::full(&self.field, self.dim);
        self.bracket_space(&full, &full)
    }

    pub fn invariants(&self) -> Invariants {
        let full = Subspace::full(&self.field, self.dim);
        let mut lcs = vec![full.clone()];
        loop {
            let last = lcs.last().unwrap();
            let next = self.bracket_space(last, &full);
            let done = next == *last || next.is_zero();
            lcs.push(next);
            if done {
                break;
            }
        }
        let last = lcs.last().unwrap();
        let class = last.is_zero().then(|| lcs.len() - 1);
        Invariants {
            center: self.center(),
            derived: self.derived(),
            lcs,
            class,
        }
    }

    /// The algebra written in the basis given by the rows of `b`.
    pub fn change_basis(&self, b: &SqMat) -> Result<LieAlg> {
        let f = &*self.field;
        let binv = b
            .inverse(f)
            .ok_or_else(|| Error::Domain("basis change matrix is singular".into()))?;
        let mut brackets = Vec::new();
        for i in 0..self.dim {
            for j in i + 1..self.dim {
                let v = binv.vec_mul(f, &self.bracket(&b.row(i), &b.row(j)));
                if !v.is_zero() {
                    brackets.push((i, j, v));
                }
            }
        }
        LieAlg::new(self.field.clone(), self.dim, &brackets)
    }

    /// Identifies the catalog algebra isomorphic to `self`. Returns the name
    /// and a matrix `T` such that `v ↦ vT` maps coordinates in this algebra's
    /// basis to coordinates in the catalog basis, i.e. `[u,v]T = [uT,vT]`.
    pub fn recognize(&self) -> Result<(CatalogName, SqMat)> {
        let f = &*self.field;
        let n = self.dim;
        let inv = self.invariants();
        let class = inv.class.ok_or(Error::NotNilpotent)?;
        let (name, rows): (CatalogName, Vec<Vect>) = match (n, class) {
            (_, 0) | (_, 1) => {
                let name = CatalogName::of_dim(n)?[0];
                (name, (0..n).map(|i| self.basis(i)).collect())
            }
            (3, 2) | (4, 2) => {
                let (i, j) = (0..n)
                    .flat_map(|i| (i + 1..n).map(move |j| (i, j)))
                    .find(|&(i, j)| !self.sc[i][j].is_zero())
                    .expect("class 2 has a nonzero bracket");
                let w = self.sc[i][j];
                let mut rows = vec![self.basis(i), self.basis(j), w];
                if n == 4 {
                    let wl = Subspace::span(f, n, &[w]);
                    let z = *inv
                        .center
                        .basis()
                        .iter()
                        .find(|z| !wl.contains(f, z))
                        .expect("center of L_{4,2} is two-dimensional");
                    rows.push(z);
                    (CatalogName::L42, rows)
                } else {
                    (CatalogName::L32, rows)
                }
            }
            (4, 3) => {
                let c = self.centralizer(&inv.derived);
                let u = (0..n)
                    .map(|i| self.basis(i))
                    .find(|v| !c.contains(f, v))
                    .expect("the centralizer of L' is proper");
                let v = *c
                    .basis()
                    .iter()
                    .find(|v| !inv.derived.contains(f, v))
                    .expect("the centralizer of L' is larger than L'");
                let x3 = self.bracket(&u, &v);
                let x4 = self.bracket(&u, &x3);
                (CatalogName::L43, vec![u, v, x3, x4])
            }
            _ => {
                return Err(Error::Unsupported(format!(
                    "nilpotent algebra of dimension {n} and class {class}"
                )))
            }
        };
        let b = SqMat::from_rows(&rows);
        let t = b
            .inverse(f)
            .ok_or_else(|| Error::Unsupported("recognition produced a dependent basis".into()))?;
        let target = LieAlg::catalog(self.field.clone(), name);
        for i in 0..n {
            for j in 0..n {
                let lhs = t.vec_mul(f, &self.sc[i][j]);
                let rhs = target.bracket(&t.row(i), &t.row(j));
                if lhs != rhs {
                    return Err(Error::Unsupported(format!(
                        "recognition as {name} failed to transport brackets"
                    )));
                }
            }
        }
        Ok((name, t))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    fn field(p: u32, k: u32) -> Arc<Field> {
        Arc::new(Field::gf(p, k).unwrap())
    }

    #[test]
    fn catalog_sizes() {
        let f = field(3, 1);
        let counts: Vec<usize> = (1..=4)
            .map(|d| LieAlg::catalog_of_dim(f.clone(), d).unwrap().len())
            .collect();
        assert_eq!(counts, vec![1, 1, 2, 3]);
        assert!(LieAlg::catalog_of_dim(f, 5).is_err());
    }

    #[test]
    fn brackets_and_ad() {
        let f = field(3, 1);
        let l = LieAlg::catalog(f.clone(), CatalogName::L32);
        assert_eq!(l.bracket(&l.basis(0), &l.basis(1)), l.basis(2));
        assert!(l.ad_matrix(&l.basis(2)).is_zero());
        let l43 = LieAlg::catalog(f.clone(), CatalogName::L43);
        assert_eq!(l43.bracket(&l43.basis(1), &l43.basis(0)), l43.basis(2).neg(&f));
        let ad2 = l43.ad_matrix(&l43.basis(0)).pow(&f, 2);
        assert_eq!(ad2.vec_mul(&f, &l43.basis(1)), l43.basis(3));
        assert!(ad2.vec_mul(&f, &l43.basis(0)).is_zero());
        for v in Vect::all(&f, 4) {
            assert!(l43.bracket(&v, &v).is_zero());
        }
    }

    #[test]
    fn invariants_of_catalog() {
        let f = field(5, 1);
        let l42 = LieAlg::catalog(f.clone(), CatalogName::L42);
        let inv = l42.invariants();
        assert_eq!(inv.center, Subspace::span(&f, 4, &[l42.basis(2), l42.basis(3)]));
        assert_eq!(inv.class, Some(2));
        assert_eq!(inv.lcs[1].dim(), 1);
        let l43 = LieAlg::catalog(f.clone(), CatalogName::L43);
        let inv = l43.invariants();
        assert_eq!(inv.center, Subspace::span(&f, 4, &[l43.basis(3)]));
        assert_eq!(inv.class, Some(3));
        assert_eq!((inv.lcs[1].dim(), inv.lcs[2].dim()), (2, 1));
        let l41 = LieAlg::catalog(f, CatalogName::L41);
        assert_eq!(l41.invariants().class, Some(1));
        assert!(l41.derived().is_zero());
    }

    #[test]
    fn rejects_jacobi_violation_and_detects_non_nilpotent() {
        let f = field(3, 1);
        let e = |i| Vect::basis(&f, 3, i);
        // [x1,x2]=x3, [x2,x3]=x1, [x1,x3]=x1 violates Jacobi.
        let bad = LieAlg::new(f.clone(), 3, &[(0, 1, e(2)), (1, 2, e(0)), (0, 2, e(0))]);
        assert!(matches!(bad, Err(Error::InvalidAlgebra(_))));
        // [x1,x2]=x2 is solvable, not nilpotent.
        let solv = LieAlg::new(f.clone(), 2, &[(0, 1, Vect::basis(&f, 2, 1))]).unwrap();
        assert_eq!(solv.class(), None);
        assert_eq!(solv.recognize().unwrap_err(), Error::NotNilpotent);
    }

    #[test]
    fn catalog_recognizes_itself() {
        for (p, k) in [(2, 1), (3, 1), (2, 2)] {
            let f = field(p, k);
            for name in CatalogName::ALL {
                let l = LieAlg::catalog(f.clone(), name);
                let (n, t) = l.recognize().unwrap();
                assert_eq!(n, name);
                assert_eq!(t, SqMat::identity(&f, name.dim()));
            }
        }
    }

    #[test]
    fn recognizes_permuted_heisenberg() {
        let f = field(3, 1);
        let l = LieAlg::catalog(f.clone(), CatalogName::L32);
        let b = SqMat::from_rows(&[l.basis(1), l.basis(0), l.basis(2).neg(&f)]);
        let scrambled = l.change_basis(&b).unwrap();
        assert_eq!(scrambled.catalog_name(), Some(CatalogName::L32));
        let (name, t) = scrambled.recognize().unwrap();
        assert_eq!(name, CatalogName::L32);
        assert_eq!(t.det(&f), f.one());
    }

    fn random_invertible(f: &Field, n: usize, rng: &mut ChaCha8Rng) -> SqMat {
        loop {
            let rows: Vec<Vect> = (0..n)
                .map(|_| {
                    let c: Vec<Fe> = (0..n)
                        .map(|_| Fe::from_index(rng.gen_range(0..f.order())))
                        .collect();
                    Vect::from_slice(&c)
                })
                .collect();
            let m = SqMat::from_rows(&rows);
            if !m.det(f).is_zero() {
                return m;
            }
        }
    }

    #[test]
    fn recognize_random_basis_changes() {
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        for (p, k) in [(2, 1), (3, 1), (5, 1), (2, 2), (3, 2)] {
            let f = field(p, k);
            for name in CatalogName::ALL {
                let l = LieAlg::catalog(f.clone(), name);
                for _ in 0..100 {
                    let b = random_invertible(&f, name.dim(), &mut rng);
                    let s = l.change_basis(&b).unwrap();
                    let (got, t) = s.recognize().unwrap();
                    assert_eq!(got, name);
                    assert_eq!(s.change_basis(&t.inverse(&f).unwrap()).unwrap(), l);
                }
            }
        }
    }
}
