//! Canonical isomorphism classes of [p]-nilpotent restricted Lie algebras of
//! dimension at most 4.
//!
//! Classification works in the catalog basis (after [`LieAlg::recognize`])
//! and reads off invariants of the [p]-map that are preserved by every
//! automorphism: ranks of iterated images for abelian algebras, the way the
//! [p]-map acts on the center and the derived subalgebra, Arf invariants of
//! the quadratic maps that appear in characteristic 2, and square classes.
//! Parameters are reported as the minimal element of their equivalence class.

use std::collections::{BTreeSet, HashSet};
use std::fmt;
use std::str::FromStr;

use crate::aut::{aut_generators, orbit};
use crate::error::{domain, Error, Result};
use crate::field::{Fe, Field, FieldSpec};
use crate::liealg::{CatalogName, LieAlg};
use crate::linalg::{Subspace, Vect};
use crate::pmap::{PMapImages, RestrictedAlg};

/// A family of isomorphism classes: `L_{d,j}^i` or `K_{d,j}^i`.
#[derive(Copy, Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Family {
    pub algebra: CatalogName,
    /// `true` for the families written with `K`.
    pub k: bool,
    pub index: u8,
}

impl Family {
    pub const fn l(algebra: CatalogName, index: u8) -> Family {
        Family { algebra, k: false, index }
    }

    pub const fn k(algebra: CatalogName, index: u8) -> Family {
        Family { algebra, k: true, index }
    }

    /// Number of field parameters the family carries.
    pub fn arity(&self) -> usize {
        use CatalogName::*;
        match (self.algebra, self.k, self.index) {
            (L32, true, 1) | (L42, true, 1) | (L42, true, 4) => 1,
            (L43, false, 3) => 1,
            (L43, true, 3) => 2,
            _ => 0,
        }
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let letter = if self.k { 'K' } else { 'L' };
        write!(f, "{letter}_{{{}}}^{}", self.algebra.subscript(), self.index)
    }
}

impl FromStr for Family {
    type Err = Error;

    fn from_str(s: &str) -> Result<Family> {
        let bad = || Error::Parse(format!("unknown class family {s:?}"));
        let (head, index) = s.split_once('^').ok_or_else(bad)?;
        let index: u8 = index.trim_matches(|c| c == '{' || c == '}').parse().map_err(|_| bad())?;
        let k = match head.chars().next() {
            Some('K') => true,
            Some('L') => false,
            _ => return Err(bad()),
        };
        let algebra: CatalogName = format!("L{}", &head[1..]).parse().map_err(|_| bad())?;
        Ok(Family { algebra, k, index })
    }
}

/// A class label with canonical parameters.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct IsoLabel {
    pub family: Family,
    pub params: Vec<Fe>,
}

impl IsoLabel {
    pub fn new(family: Family, params: Vec<Fe>) -> IsoLabel {
        IsoLabel { family, params }
    }

    pub fn plain(family: Family) -> IsoLabel {
        IsoLabel { family, params: Vec::new() }
    }

    /// Human-readable form such as `K_{3,2}^1(t+1)`.
    pub fn display(&self, f: &Field) -> String {
        if self.params.is_empty() {
            self.family.to_string()
        } else {
            let ps: Vec<String> = self.params.iter().map(|&x| f.fmt_elem(x)).collect();
            format!("{}({})", self.family, ps.join(","))
        }
    }
}

/// Representatives of every class on one catalog algebra over one field.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ClassList {
    pub field: FieldSpec,
    pub algebra: CatalogName,
    pub entries: Vec<(IsoLabel, PMapImages)>,
    /// Why the list is empty, when it is.
    pub note: Option<String>,
}

fn not_restrictable(algebra: CatalogName, p: u32) -> Error {
    Error::NotRestrictable { algebra: algebra.as_str().to_string(), p }
}

/// The Artin-Schreier image, or `𝕂_β`, as a set.
fn additive_subgroup(f: &Field, beta: Option<Fe>) -> Result<HashSet<Fe>> {
    Ok(match beta {
        None => f.artin_schreier_subspace()?.into_iter().collect(),
        Some(b) => f.k_beta_set(b)?.into_iter().collect(),
    })
}

/// Whether two parameter tuples of `family` give isomorphic algebras.
pub fn params_equivalent(family: Family, f: &Field, p1: &[Fe], p2: &[Fe]) -> Result<bool> {
    let arity = family.arity();
    if arity == 0 {
        return Err(domain(format!("{family} has no parameters")));
    }
    if p1.len() != arity || p2.len() != arity {
        return Err(domain(format!("{family} takes {arity} parameter(s)")));
    }
    match (family.algebra, family.k) {
        (_, true) if arity == 1 => {
            let kk = additive_subgroup(f, None)?;
            Ok(kk.contains(&f.add(p1[0], p2[0])))
        }
        (CatalogName::L43, false) => {
            if p1[0].is_zero() || p2[0].is_zero() {
                return Err(domain("beta must be nonzero"));
            }
            Ok(f.is_square(f.div(p1[0], p2[0])?))
        }
        _ => {
            let (a1, b1, a2, b2) = (p1[0], p1[1], p2[0], p2[1]);
            if b1.is_zero() || b2.is_zero() {
                return Err(domain("beta must be nonzero"));
            }
            k3_equivalent(f, &additive_subgroup(f, Some(b1))?, a1, b1, a2, b2)
        }
    }
}

fn k3_equivalent(f: &Field, k_b1: &HashSet<Fe>, a1: Fe, b1: Fe, a2: Fe, b2: Fe) -> Result<bool> {
    let ratio = f.div(b2, b1)?;
    let Some(s) = f.sqrt(ratio) else {
        return Ok(false);
    };
    // Both square roots ±s.
    for root in [s, f.neg(s)] {
        let t = f.mul(a2, root);
        if k_b1.contains(&f.add(t, a1)) || k_b1.contains(&f.sub(t, a1)) {
            return Ok(true);
        }
    }
    Ok(false)
}

/// The minimal parameter tuple equivalent to `params`.
pub fn canonical_params(family: Family, f: &Field, params: &[Fe]) -> Result<Vec<Fe>> {
    match family.arity() {
        0 => {
            if params.is_empty() {
                Ok(Vec::new())
            } else {
                Err(domain(format!("{family} has no parameters")))
            }
        }
        1 if family.k => {
            let kk = additive_subgroup(f, None)?;
            let x = params[0];
            Ok(vec![kk.iter().map(|&d| f.add(x, d)).min().unwrap()])
        }
        1 => {
            let b = params[0];
            if b.is_zero() {
                return Err(domain("beta must be nonzero"));
            }
            Ok(vec![f
                .nonzero_elements()
                .map(|s| f.mul(b, f.mul(s, s)))
                .min()
                .unwrap()])
        }
        _ => {
            let (a1, b1) = (params[0], params[1]);
            if b1.is_zero() {
                return Err(domain("beta must be nonzero"));
            }
            let k_b1 = additive_subgroup(f, Some(b1))?;
            for a2 in f.elements() {
                for b2 in f.nonzero_elements() {
                    if (a2, b2) > (a1, b1) {
                        return Ok(vec![a1, b1]);
                    }
                    if k3_equivalent(f, &k_b1, a1, b1, a2, b2)? {
                        return Ok(vec![a2, b2]);
                    }
                }
            }
            Ok(vec![a1, b1])
        }
    }
}

/// Canonical representatives of every parameter class of `family`.
fn parameter_classes(family: Family, f: &Field) -> Result<Vec<Vec<Fe>>> {
    let mut out = BTreeSet::new();
    match family.arity() {
        1 if family.k => {
            for x in f.elements() {
                out.insert(canonical_params(family, f, &[x])?);
            }
        }
        1 => {
            for b in f.nonzero_elements() {
                out.insert(canonical_params(family, f, &[b])?);
            }
        }
        2 => {
            for a in f.elements() {
                for b in f.nonzero_elements() {
                    out.insert(canonical_params(family, f, &[a, b])?);
                }
            }
        }
        _ => {
            out.insert(Vec::new());
        }
    }
    Ok(out.into_iter().collect())
}

/// The representative [p]-map of a class, in the catalog basis.
fn representative(l: &LieAlg, label: &IsoLabel) -> PMapImages {
    use CatalogName::*;
    let f = l.field();
    let n = l.dim();
    let x = |i: usize| l.basis(i);
    let s = |c: Fe, i: usize| l.basis(i).scale(f, c);
    let fam = label.family;
    let ps = &label.params;
    let sparse: Vec<(usize, Vect)> = match (fam.algebra, fam.k, fam.index) {
        (_, false, 1) => vec![],
        (L21, false, 2) | (L31, false, 2) | (L41, false, 2) => vec![(0, x(1))],
        (L31, false, 3) | (L41, false, 4) => vec![(0, x(1)), (1, x(2))],
        (L41, false, 3) => vec![(0, x(1)), (2, x(3))],
        (L41, false, 5) => vec![(0, x(1)), (1, x(2)), (2, x(3))],
        (L32, false, 2) => vec![(0, x(2))],
        (L32, true, 1) => vec![(0, x(2)), (1, s(ps[0], 2))],
        (L42, false, 2) => vec![(0, x(2))],
        (L42, false, 3) => vec![(0, x(3))],
        (L42, false, 4) => vec![(0, x(2)), (1, x(3))],
        (L42, false, 5) => vec![(2, x(3))],
        (L42, false, 6) => vec![(2, x(3)), (1, x(2))],
        (L42, false, 7) => vec![(3, x(2))],
        (L42, false, 8) => vec![(3, x(2)), (1, x(3))],
        (L42, true, 1) => vec![(0, x(2)), (1, s(ps[0], 2))],
        (L42, true, 2) => vec![(0, x(3))],
        (L42, true, 3) => vec![(0, x(2)), (1, x(3))],
        (L42, true, 4) => vec![(2, x(3)), (0, x(2)), (1, s(ps[0], 2))],
        (L42, true, 5) => vec![(3, x(2))],
        (L42, true, 6) => vec![(3, x(2)), (1, x(3))],
        (L43, false, 2) => vec![(0, x(3))],
        (L43, false, 3) => vec![(1, s(ps[0], 3))],
        (L43, false, 4) => vec![(2, x(3))],
        (L43, true, 1) => vec![],
        (L43, true, 2) => vec![(2, x(3))],
        (L43, true, 3) => vec![(0, s(ps[0], 3)), (1, s(ps[1], 3))],
        _ => unreachable!("no representative for {fam}"),
    };
    PMapImages::from_sparse(n, &sparse)
}

/// The representative [p]-map of `label` on the catalog algebra `l`. The
/// parameters need not be canonical.
pub fn representative_of(l: &LieAlg, label: &IsoLabel) -> Result<PMapImages> {
    let name = l.catalog_name().ok_or(Error::NotCatalog)?;
    let f = l.field();
    let fam = label.family;
    if fam.algebra != name || !families(name, f.characteristic())?.contains(&fam) {
        return Err(domain(format!("{fam} is not a class family of {name} over {}", f.spec())));
    }
    if label.params.len() != fam.arity() {
        return Err(domain(format!(
            "{fam} takes {} parameters, got {}",
            fam.arity(),
            label.params.len()
        )));
    }
    if fam.algebra == CatalogName::L43 && fam.index == 3 && label.params.last().is_some_and(|b| b.is_zero()) {
        return Err(domain(format!("{fam} needs β ≠ 0")));
    }
    Ok(representative(l, label))
}

/// The families of a catalog algebra in the given characteristic, in the
/// order the classes are listed.
fn families(name: CatalogName, p: u32) -> Result<Vec<Family>> {
    use CatalogName::*;
    let ls = |n: u8| (1..=n).map(|i| Family::l(name, i)).collect::<Vec<_>>();
    let ks = |n: u8| (1..=n).map(|i| Family::k(name, i)).collect::<Vec<_>>();
    Ok(match (name, p) {
        (L11, _) => ls(1),
        (L21, _) => ls(2),
        (L31, _) => ls(3),
        (L41, _) => ls(5),
        (L32, 2) => ks(1),
        (L32, _) => ls(2),
        (L42, 2) => ks(6),
        (L42, _) => ls(8),
        (L43, 2) => return Err(not_restrictable(name, p)),
        (L43, 3) => ks(3),
        (L43, _) => ls(4),
    })
}

/// One representative per isomorphism class of [p]-nilpotent [p]-maps on a
/// catalog algebra.
pub fn list_classes(l: &LieAlg) -> Result<ClassList> {
    let name = l.catalog_name().ok_or(Error::NotCatalog)?;
    let f = l.field();
    let p = f.characteristic();
    let mut list = ClassList {
        field: f.spec().clone(),
        algebra: name,
        entries: Vec::new(),
        note: None,
    };
    let fams = match families(name, p) {
        Ok(fams) => fams,
        Err(e @ Error::NotRestrictable { .. }) => {
            list.note = Some(e.to_string());
            return Ok(list);
        }
        Err(e) => return Err(e),
    };
    for fam in fams {
        for params in parameter_classes(fam, f)? {
            let label = IsoLabel::new(fam, params);
            let rep = representative(l, &label);
            list.entries.push((label, rep));
        }
    }
    Ok(list)
}

/// Partition of the dimension into Jordan block sizes of a nilpotent
/// semilinear map on an abelian algebra, largest first.
fn block_sizes(r: &RestrictedAlg) -> Vec<usize> {
    let f = r.field();
    let n = r.alg().dim();
    let mut dims = vec![n];
    let mut w = Subspace::full(f, n);
    while !w.is_zero() {
        let imgs: Vec<Vect> = w.basis().iter().map(|v| r.evaluate(v)).collect();
        w = Subspace::span(f, n, &imgs);
        dims.push(w.dim());
    }
    // Blocks of size >= j number dims[j-1] - dims[j].
    let at_least: Vec<usize> = dims.windows(2).map(|w| w[0] - w[1]).collect();
    let mut sizes = Vec::new();
    for (j, &c) in at_least.iter().enumerate() {
        let next = at_least.get(j + 1).copied().unwrap_or(0);
        for _ in 0..c - next {
            sizes.push(j + 1);
        }
    }
    sizes.sort_unstable_by(|a, b| b.cmp(a));
    sizes
}

fn abelian_index(sizes: &[usize]) -> u8 {
    match sizes {
        [1] | [1, 1] | [1, 1, 1] | [1, 1, 1, 1] => 1,
        [2] | [2, 1] | [2, 1, 1] => 2,
        [3] | [2, 2] => 3,
        [3, 1] => 4,
        [4] => 5,
        _ => unreachable!("partition {sizes:?} of a dimension at most 4"),
    }
}

/// Coordinates `(c3, c4)` of a central element of `L_{4,2}`.
fn zc(v: &Vect) -> (Fe, Fe) {
    (v.get(2), v.get(3))
}

/// Classification of a [p]-nilpotent [p]-map on a catalog algebra, written
/// in the catalog basis.
fn classify_standard(name: CatalogName, r: &RestrictedAlg) -> Result<IsoLabel> {
    use CatalogName::*;
    let f = r.field();
    let p = f.characteristic();
    let img = |i: usize| r.pmap().image(i);
    let label = match name {
        L11 | L21 | L31 | L41 => IsoLabel::plain(Family::l(name, abelian_index(&block_sizes(r)))),
        L32 => {
            let (alpha, beta) = (img(0).get(2), img(1).get(2));
            if p == 2 {
                // Arf invariant of x ↦ x^{[2]} as a quadratic form into ⟨x3⟩.
                let xi = canonical_params(Family::k(L32, 1), f, &[f.mul(alpha, beta)])?;
                IsoLabel::new(Family::k(L32, 1), xi)
            } else if r.pmap().is_zero() {
                IsoLabel::plain(Family::l(L32, 1))
            } else {
                IsoLabel::plain(Family::l(L32, 2))
            }
        }
        L42 => classify_l42(r)?,
        L43 => {
            let (a, b, c) = (img(0).get(3), img(1).get(3), img(2).get(3));
            match p {
                2 => return Err(not_restrictable(L43, 2)),
                3 => {
                    if !c.is_zero() {
                        IsoLabel::plain(Family::k(L43, 2))
                    } else if b.is_zero() {
                        IsoLabel::plain(Family::k(L43, 1))
                    } else {
                        let fam = Family::k(L43, 3);
                        IsoLabel::new(fam, canonical_params(fam, f, &[a, b])?)
                    }
                }
                _ => {
                    if !c.is_zero() {
                        IsoLabel::plain(Family::l(L43, 4))
                    } else if !b.is_zero() {
                        let fam = Family::l(L43, 3);
                        IsoLabel::new(fam, canonical_params(fam, f, &[b])?)
                    } else if !a.is_zero() {
                        IsoLabel::plain(Family::l(L43, 2))
                    } else {
                        IsoLabel::plain(Family::l(L43, 1))
                    }
                }
            }
        }
    };
    Ok(label)
}

fn classify_l42(r: &RestrictedAlg) -> Result<IsoLabel> {
    use CatalogName::L42;
    let f = r.field();
    let p = f.characteristic();
    let l = r.alg();
    let img = |i: usize| r.pmap().image(i);
    let x3 = l.basis(2);
    let derived = Subspace::span(f, 4, &[x3]);
    let (a1, b1) = zc(&img(0));
    let (a2, b2) = zc(&img(1));
    let y = img(2);
    let label = if img(2).is_zero() && img(3).is_zero() {
        // The [p]-map vanishes on the center.
        if p == 2 {
            if b1.is_zero() && b2.is_zero() {
                let fam = Family::k(L42, 1);
                IsoLabel::new(fam, canonical_params(fam, f, &[f.mul(a1, a2)])?)
            } else {
                // The unique direction whose square lies in ⟨x3⟩ is
                // (√β2, √β1); its square is α1β2 + α2β1 + √(β1β2) times x3.
                let t = f.add(
                    f.add(f.mul(a1, b2), f.mul(a2, b1)),
                    f.frobenius_root(f.mul(b1, b2)),
                );
                IsoLabel::plain(Family::k(L42, if t.is_zero() { 2 } else { 3 }))
            }
        } else {
            let span = Subspace::span(f, 4, &[img(0), img(1)]);
            let index = match span.dim() {
                0 => 1,
                1 if span == derived => 2,
                1 => 3,
                _ => 4,
            };
            IsoLabel::plain(Family::l(L42, index))
        }
    } else if !y.is_zero() {
        // The [p]-map moves the derived subalgebra: x3 ↦ y ∉ ⟨x3⟩.
        let (ya, yb) = zc(&y);
        if p == 2 {
            // Work modulo ⟨y⟩, identified with ⟨x3⟩ by projecting along y.
            let s = f.div(ya, yb)?;
            let c1 = f.sub(a1, f.mul(b1, s));
            let c2 = f.sub(a2, f.mul(b2, s));
            let fam = Family::k(L42, 4);
            IsoLabel::new(fam, canonical_params(fam, f, &[f.mul(c1, c2)])?)
        } else {
            let yl = Subspace::span(f, 4, &[y]);
            let inside = yl.contains(f, &img(0)) && yl.contains(f, &img(1));
            IsoLabel::plain(Family::l(L42, if inside { 5 } else { 6 }))
        }
    } else {
        // x3 ↦ 0 and x4 ↦ a nonzero multiple of x3.
        let inside = derived.contains(f, &img(0)) && derived.contains(f, &img(1));
        let index = match (p == 2, inside) {
            (true, true) => 5,
            (true, false) => 6,
            (false, true) => 7,
            (false, false) => 8,
        };
        IsoLabel::new(Family { algebra: L42, k: p == 2, index }, Vec::new())
    };
    if p == 2 && label.family.k && label.family.index <= 3 && f.order() <= 16 {
        check_image_invariants(r, &label)?;
    }
    Ok(label)
}

/// For [2]-maps on `L_{4,2}` that vanish on the center, compares the label
/// with properties of the image set `S = L^{[2]}`: `K^1` has
/// `span S = L'`, `K^2` has `S ∩ L' = 0`, and `K^3` has `span S = Z` and
/// meets `L'`.
fn check_image_invariants(r: &RestrictedAlg, label: &IsoLabel) -> Result<()> {
    let f = r.field();
    let l = r.alg();
    let derived = Subspace::span(f, 4, &[l.basis(2)]);
    let images: Vec<Vect> = Vect::all(f, 4).map(|x| r.evaluate(&x)).collect();
    let span = Subspace::span(f, 4, &images);
    let meets = images.iter().any(|v| !v.is_zero() && derived.contains(f, v));
    let ok = match label.family.index {
        1 => span.is_zero() || span == derived,
        2 => !meets && span == l.center(),
        _ => meets && span == l.center(),
    };
    if ok {
        Ok(())
    } else {
        Err(Error::Unsupported(format!(
            "label {} disagrees with the image invariants",
            label.family
        )))
    }
}

/// Transports `r` to the catalog basis of the algebra it is isomorphic to.
pub fn to_catalog(r: &RestrictedAlg) -> Result<(CatalogName, RestrictedAlg)> {
    if let Some(name) = r.alg().catalog_name() {
        return Ok((name, r.clone()));
    }
    let (name, t) = r.alg().recognize()?;
    let target = LieAlg::catalog(r.alg().field_arc().clone(), name);
    Ok((name, r.transport(&t, target)?))
}

/// The class label of a [p]-nilpotent restricted Lie algebra.
pub fn classify(r: &RestrictedAlg) -> Result<IsoLabel> {
    let (name, rs) = to_catalog(r)?;
    if !rs.is_p_nilpotent() {
        return Err(Error::NotPNilpotent);
    }
    classify_standard(name, &rs)
}

/// Classifies by searching the automorphism orbit for a class
/// representative. Returns `None` when the orbit exceeds `limit`.
pub fn classify_by_orbit(r: &RestrictedAlg, limit: usize) -> Result<Option<IsoLabel>> {
    let (_, rs) = to_catalog(r)?;
    if !rs.is_p_nilpotent() {
        return Err(Error::NotPNilpotent);
    }
    let l = rs.alg();
    let gens = aut_generators(l)?;
    let Some(orb) = orbit(l, &gens, rs.pmap(), limit) else {
        return Ok(None);
    };
    let keys: HashSet<u128> = orb.iter().map(PMapImages::key).collect();
    let hits: Vec<IsoLabel> = list_classes(l)?
        .entries
        .into_iter()
        .filter(|(_, rep)| keys.contains(&rep.key()))
        .map(|(label, _)| label)
        .collect();
    match hits.as_slice() {
        [one] => Ok(Some(one.clone())),
        _ => Err(Error::Unsupported(format!(
            "orbit contains {} class representatives",
            hits.len()
        ))),
    }
}

/// [`classify`], cross-checked against [`classify_by_orbit`] whenever the
/// orbit has at most `limit` elements.
pub fn classify_checked(r: &RestrictedAlg, limit: usize) -> Result<IsoLabel> {
    let label = classify(r)?;
    if let Some(by_orbit) = classify_by_orbit(r, limit)? {
        if by_orbit != label {
            return Err(Error::Unsupported(format!(
                "invariant classification gave {} but the orbit contains the representative of {}",
                label.family, by_orbit.family
            )));
        }
    }
    Ok(label)
}

/// Whether two restricted algebras are isomorphic.
pub fn are_isomorphic(r1: &RestrictedAlg, r2: &RestrictedAlg) -> Result<bool> {
    if r1.field() != r2.field() {
        return Ok(false);
    }
    let (n1, _) = r1.alg().recognize()?;
    let (n2, _) = r2.alg().recognize()?;
    if n1 != n2 {
        return Ok(false);
    }
    Ok(classify(r1)? == classify(r2)?)
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::sync::Arc;

    fn cat(p: u32, k: u32, name: CatalogName) -> LieAlg {
        LieAlg::catalog(Arc::new(Field::gf(p, k).unwrap()), name)
    }

    fn label_of(l: &LieAlg, sparse: &[(usize, Vect)]) -> IsoLabel {
        let r = RestrictedAlg::new(l.clone(), PMapImages::from_sparse(l.dim(), sparse)).unwrap();
        classify(&r).unwrap()
    }

    #[test]
    fn family_strings_round_trip() {
        for s in ["L_{3,2}^1", "K_{4,3}^3", "L_{1,1}^1", "K_{4,2}^6"] {
            assert_eq!(s.parse::<Family>().unwrap().to_string(), s);
        }
        assert!("M_{3,2}^1".parse::<Family>().is_err());
    }

    #[test]
    fn classify_examples() {
        let l = cat(3, 1, CatalogName::L32);
        let f = l.field();
        let v = Vect::from_slice(&[Fe::ZERO, Fe::ZERO, f.from_int(2)]);
        let w = Vect::from_slice(&[Fe::ZERO, Fe::ZERO, f.one()]);
        assert_eq!(label_of(&l, &[(0, v), (1, w)]), IsoLabel::plain(Family::l(CatalogName::L32, 2)));
        let l2 = cat(2, 1, CatalogName::L32);
        assert_eq!(
            label_of(&l2, &[]),
            IsoLabel::new(Family::k(CatalogName::L32, 1), vec![Fe::ZERO])
        );
        let l43 = cat(5, 1, CatalogName::L43);
        let f5 = l43.field();
        let got = label_of(&l43, &[(1, l43.basis(3).scale(f5, f5.from_int(3)))]);
        assert_eq!(got, IsoLabel::new(Family::l(CatalogName::L43, 3), vec![f5.from_int(2)]));
    }

    #[test]
    fn params_equivalent_examples() {
        let f4 = Field::gf(2, 2).unwrap();
        let t = f4.from_coeffs(&[0, 1]).unwrap();
        let t1 = f4.from_coeffs(&[1, 1]).unwrap();
        let fam = Family::k(CatalogName::L32, 1);
        assert!(params_equivalent(fam, &f4, &[t], &[t1]).unwrap());
        let f2 = Field::prime(2).unwrap();
        assert!(!params_equivalent(fam, &f2, &[Fe::ZERO], &[f2.one()]).unwrap());
        let f3 = Field::prime(3).unwrap();
        let k3 = Family::k(CatalogName::L43, 3);
        let (one, two) = (f3.one(), f3.from_int(2));
        assert!(params_equivalent(k3, &f3, &[one, two], &[two, two]).unwrap());
        assert!(!params_equivalent(k3, &f3, &[Fe::ZERO, two], &[one, two]).unwrap());
        assert!(params_equivalent(Family::l(CatalogName::L32, 1), &f3, &[], &[]).is_err());
    }

    #[test]
    fn class_counts() {
        let count = |p, k, name| list_classes(&cat(p, k, name)).unwrap().entries.len();
        assert_eq!(count(3, 1, CatalogName::L32), 2);
        assert_eq!(count(3, 1, CatalogName::L42), 8);
        assert_eq!(count(3, 1, CatalogName::L43), 5);
        assert_eq!(count(5, 1, CatalogName::L43), 5);
        assert_eq!(count(2, 1, CatalogName::L32), 2);
        assert_eq!(count(2, 2, CatalogName::L32), 2);
        assert_eq!(count(2, 1, CatalogName::L42), 8);
        assert_eq!(count(2, 2, CatalogName::L42), 8);
        let empty = list_classes(&cat(2, 1, CatalogName::L43)).unwrap();
        assert!(empty.entries.is_empty());
        assert!(empty.note.unwrap().contains("not restrictable"));
        let f3 = Field::prime(3).unwrap();
        let k3: Vec<Vec<Fe>> = list_classes(&cat(3, 1, CatalogName::L43))
            .unwrap()
            .entries
            .iter()
            .filter(|(l, _)| l.family.index == 3)
            .map(|(l, _)| l.params.clone())
            .collect();
        let n = |x| f3.from_int(x);
        assert_eq!(k3, vec![vec![n(0), n(1)], vec![n(0), n(2)], vec![n(1), n(2)]]);
    }

    #[test]
    fn representatives_classify_to_their_labels() {
        for (p, k) in [(2, 1), (3, 1), (2, 2), (5, 1), (3, 2)] {
            let f = Arc::new(Field::gf(p, k).unwrap());
            for name in CatalogName::ALL {
                let l = LieAlg::catalog(f.clone(), name);
                for (label, rep) in list_classes(&l).unwrap().entries {
                    let r = RestrictedAlg::new(l.clone(), rep).unwrap();
                    assert!(r.is_p_nilpotent());
                    assert_eq!(classify(&r).unwrap(), label, "{name} over {}", f.spec());
                }
            }
        }
    }

    #[test]
    fn not_p_nilpotent_rejected() {
        let l = cat(3, 1, CatalogName::L32);
        let r = RestrictedAlg::new(l.clone(), PMapImages::from_sparse(3, &[(2, l.basis(2))])).unwrap();
        assert_eq!(classify(&r).unwrap_err(), Error::NotPNilpotent);
    }

    #[test]
    fn isomorphism_examples() {
        let l = cat(3, 1, CatalogName::L32);
        let r1 = RestrictedAlg::new(l.clone(), PMapImages::zero(3)).unwrap();
        let r2 = RestrictedAlg::new(l.clone(), PMapImages::from_sparse(3, &[(0, l.basis(2))])).unwrap();
        assert!(!are_isomorphic(&r1, &r2).unwrap());
        let l2 = cat(2, 1, CatalogName::L42);
        let k5 = RestrictedAlg::new(l2.clone(), PMapImages::from_sparse(4, &[(3, l2.basis(2))])).unwrap();
        let k6 = RestrictedAlg::new(
            l2.clone(),
            PMapImages::from_sparse(4, &[(3, l2.basis(2)), (1, l2.basis(3))]),
        )
        .unwrap();
        assert!(!are_isomorphic(&k5, &k6).unwrap());
        assert!(are_isomorphic(&k5, &k5).unwrap());
    }

    #[test]
    fn orbit_classification_agrees_on_representatives() {
        for p in [2, 3] {
            let f = Arc::new(Field::prime(p).unwrap());
            for name in [CatalogName::L32, CatalogName::L42, CatalogName::L43, CatalogName::L31] {
                let l = LieAlg::catalog(f.clone(), name);
                for (label, rep) in list_classes(&l).unwrap().entries {
                    let r = RestrictedAlg::new(l.clone(), rep).unwrap();
                    assert_eq!(classify_checked(&r, 1 << 20).unwrap(), label);
                }
            }
        }
    }
}
