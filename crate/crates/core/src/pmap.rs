//! [p]-maps given by the images of basis vectors: Jacobson's correction terms,
//! evaluation on arbitrary elements, and the validity and nilpotency tests.

use std::fmt;

use crate::error::{Error, Result};
use crate::field::{Fe, Field};
use crate::liealg::LieAlg;
use crate::linalg::{solve, SqMat, Subspace, Vect};

/// The images `x_i^{[p]}` of the basis vectors; row `i` of the matrix is the
/// image of `x_{i+1}`.
#[derive(Copy, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct PMapImages {
    images: SqMat,
}

impl fmt::Debug for PMapImages {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "PMap{:?}", self.images)
    }
}

impl PMapImages {
    pub fn new(rows: &[Vect]) -> PMapImages {
        PMapImages { images: SqMat::from_rows(rows) }
    }

    pub fn zero(dim: usize) -> PMapImages {
        PMapImages { images: SqMat::zero(dim) }
    }

    pub fn from_matrix(images: SqMat) -> PMapImages {
        PMapImages { images }
    }

    /// Images given as `(i, v)` pairs with 0-based `i`; other images are zero.
    pub fn from_sparse(dim: usize, entries: &[(usize, Vect)]) -> PMapImages {
        let mut m = SqMat::zero(dim);
        for (i, v) in entries {
            m.set_row(*i, v);
        }
        PMapImages { images: m }
    }

    pub fn dim(&self) -> usize {
        self.images.n()
    }

    pub fn image(&self, i: usize) -> Vect {
        self.images.row(i)
    }

    pub fn matrix(&self) -> &SqMat {
        &self.images
    }

    pub fn is_zero(&self) -> bool {
        self.images.is_zero()
    }

    /// Compact encoding, one byte per entry; also the order used for
    /// choosing orbit representatives.
    pub fn key(&self) -> u128 {
        self.images.key()
    }
}

/// Jacobson's terms `s_1(a,b), …, s_{p-1}(a,b)`, read off from
/// `ad(a⊗X + b⊗1)^{p-1}(a⊗1) = Σ i s_i(a,b) ⊗ X^{i-1}` with `ad(y)z = [y,z]`.
pub fn jacobson_si(l: &LieAlg, a: &Vect, b: &Vect) -> Vec<Vect> {
    let f = l.field();
    let p = f.characteristic() as usize;
    let zero = l.zero();
    // cur[d] is the coefficient of X^d; only degrees up to p-2 matter.
    let mut cur = vec![zero; p - 1];
    cur[0] = *a;
    for _ in 0..p - 1 {
        let mut next = vec![zero; p - 1];
        for d in 0..p - 1 {
            let mut t = l.bracket(b, &cur[d]);
            if d > 0 {
                t = t.add(f, &l.bracket(a, &cur[d - 1]));
            }
            next[d] = t;
        }
        cur = next;
        if cur.iter().all(Vect::is_zero) {
            break;
        }
    }
    cur.iter()
        .enumerate()
        .map(|(d, v)| v.scale(f, f.inv_nz(f.from_int(d as i64 + 1))))
        .collect()
}

fn sum_si(l: &LieAlg, a: &Vect, b: &Vect) -> Vect {
    let f = l.field();
    jacobson_si(l, a, b)
        .iter()
        .fold(l.zero(), |acc, s| acc.add(f, s))
}

/// `x^{[p]}` for the [p]-map with the given basis images, expanding `x`
/// along the basis as `α_1x_1 + (α_2x_2 + (…))`.
pub fn evaluate_images(l: &LieAlg, images: &PMapImages, x: &Vect) -> Vect {
    let f = l.field();
    let p = f.characteristic() as usize;
    let n = l.dim();
    if l.class().is_some_and(|c| c < p) {
        // All s_i vanish: the map is semilinear.
        let mut r = l.zero();
        for i in 0..n {
            let a = x.get(i);
            if !a.is_zero() {
                r = r.axpy(f, f.frobenius(a), &images.image(i));
            }
        }
        return r;
    }
    let mut tail = l.zero();
    let mut tail_p = l.zero();
    for i in (0..n).rev() {
        let alpha = x.get(i);
        if alpha.is_zero() {
            continue;
        }
        let head = l.basis(i).scale(f, alpha);
        let head_p = images.image(i).scale(f, f.frobenius(alpha));
        tail_p = head_p.add(f, &tail_p).add(f, &sum_si(l, &head, &tail));
        tail = tail.add(f, &head);
    }
    tail_p
}

/// An element `b` with `ad b = target`, if one exists.
pub fn ad_preimage(l: &LieAlg, target: &SqMat) -> Option<Vect> {
    let f = l.field();
    let n = l.dim();
    let ads: Vec<SqMat> = (0..n).map(|j| l.ad_matrix(&l.basis(j))).collect();
    // One equation per matrix entry, one unknown per coordinate of b.
    let mut a = Vec::with_capacity(n * n);
    let mut rhs = Vec::with_capacity(n * n);
    for r in 0..n {
        for c in 0..n {
            a.push(ads.iter().map(|m| m.get(r, c)).collect::<Vec<Fe>>());
            rhs.push(target.get(r, c));
        }
    }
    solve(f, &a, &rhs, n).map(|b| Vect::from_slice(&b))
}

/// Checks `ad(x_i^{[p]}) = (ad x_i)^p` for each basis vector; by Jacobson's
/// theorem this is exactly when the images extend to a [p]-map.
pub fn validate_pmap(l: &LieAlg, images: &PMapImages) -> Result<()> {
    let f = l.field();
    let p = f.characteristic();
    if images.dim() != l.dim() {
        return Err(Error::InvalidPMap(format!(
            "expected {} images, got {}",
            l.dim(),
            images.dim()
        )));
    }
    for i in 0..l.dim() {
        let lhs = l.ad_matrix(&images.image(i));
        let rhs = l.ad_matrix(&l.basis(i)).pow(f, p);
        if lhs != rhs {
            return Err(Error::InvalidPMap(format!(
                "axiom (ad a)^p = ad a^[p] fails for a = x{}",
                i + 1
            )));
        }
    }
    Ok(())
}

pub fn is_valid_pmap(l: &LieAlg, images: &PMapImages) -> bool {
    validate_pmap(l, images).is_ok()
}

/// Whether every `(ad x_i)^p` is inner, i.e. some [p]-map exists.
pub fn is_restrictable(l: &LieAlg) -> bool {
    let f = l.field();
    let p = f.characteristic();
    (0..l.dim()).all(|i| ad_preimage(l, &l.ad_matrix(&l.basis(i)).pow(f, p)).is_some())
}

/// A Lie algebra together with a valid [p]-map.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RestrictedAlg {
    alg: LieAlg,
    pmap: PMapImages,
}

impl RestrictedAlg {
    pub fn new(alg: LieAlg, pmap: PMapImages) -> Result<RestrictedAlg> {
        validate_pmap(&alg, &pmap)?;
        Ok(RestrictedAlg { alg, pmap })
    }

    pub(crate) fn new_unchecked(alg: LieAlg, pmap: PMapImages) -> RestrictedAlg {
        RestrictedAlg { alg, pmap }
    }

    pub fn alg(&self) -> &LieAlg {
        &self.alg
    }

    pub fn pmap(&self) -> &PMapImages {
        &self.pmap
    }

    pub fn field(&self) -> &Field {
        self.alg.field()
    }

    pub fn evaluate(&self, x: &Vect) -> Vect {
        evaluate_images(&self.alg, &self.pmap, x)
    }

    /// Whether some iterate of the [p]-map kills the whole algebra.
    ///
    /// Below class `p` the map is semilinear and nilpotent exactly when its
    /// `dim`-th iterate vanishes. When every image is central and the class
    /// is at most `p`, the [p]-map
    /// sends `L` into the center and is semilinear there, so it suffices to
    /// iterate on the center: `W_0 = Z`, `W_{m+1} = span W_m^{[p]}`. Other
    /// inputs fall back to iterating every element.
    pub fn is_p_nilpotent(&self) -> bool {
        self.is_p_nilpotent_with_center(&self.alg.center())
    }

    /// [`Self::is_p_nilpotent`] with the center of the algebra supplied.
    pub(crate) fn is_p_nilpotent_with_center(&self, center: &Subspace) -> bool {
        let l = &self.alg;
        let f = l.field();
        let n = l.dim();
        let p = f.characteristic() as usize;
        let Some(class) = l.class() else {
            return false;
        };
        if class < p {
            // Semilinear: x ↦ x^{(p)}M, so the n-th iterate is
            // x^{(p^n)} M^{(p^{n-1})} ⋯ M^{(p)} M.
            let m = *self.pmap.matrix();
            let mut acc = m;
            for _ in 1..n {
                acc = acc.frobenius(f).mul(f, &m);
            }
            return acc.is_zero();
        }
        let center = center.clone();
        let central_images = (0..n).all(|i| center.contains(f, &self.pmap.image(i)));
        if central_images && class <= p {
            let mut w = center;
            for _ in 0..=n {
                if w.is_zero() {
                    return true;
                }
                let imgs: Vec<Vect> = w.basis().iter().map(|v| self.evaluate(v)).collect();
                w = Subspace::span(f, n, &imgs);
            }
            return w.is_zero();
        }
        let total = f.order().pow(n as u32);
        Vect::all(f, n).all(|x| {
            let mut y = x;
            for _ in 0..total {
                if y.is_zero() {
                    return true;
                }
                y = self.evaluate(&y);
            }
            y.is_zero()
        })
    }

    /// Moves the [p]-map along an isomorphism `v ↦ vT` onto `target`.
    pub fn transport(&self, t: &SqMat, target: LieAlg) -> Result<RestrictedAlg> {
        let f = self.alg.field();
        let b = t
            .inverse(f)
            .ok_or_else(|| Error::Domain("transport matrix is singular".into()))?;
        let rows: Vec<Vect> = (0..self.alg.dim())
            .map(|i| t.vec_mul(f, &self.evaluate(&b.row(i))))
            .collect();
        RestrictedAlg::new(target, PMapImages::new(&rows))
    }
}
