//! Brute-force oracle: enumerate every [p]-nilpotent [p]-map on a catalog
//! algebra, split them into automorphism orbits and compare with the
//! classification.

use std::collections::{BTreeMap, HashMap, HashSet};
use std::sync::Arc;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde_json::{json, Value};

use crate::aut::{aut_generators, aut_order, conjugate_pmap, enumerate_automorphisms, AutMat};
use crate::classify::{classify, list_classes, ClassList, IsoLabel};
use crate::error::{Error, Result};
use crate::field::{Fe, Field, FieldSpec};
use crate::json::{field_spec_to_json, label_to_json, pmap_to_json};
use crate::liealg::{CatalogName, LieAlg};
use crate::linalg::{nullspace, SqMat, Vect};
use crate::pmap::{ad_preimage, PMapImages, RestrictedAlg};

pub const DEFAULT_BUDGET_PMAPS: u128 = 10_000_000;
pub const DEFAULT_BUDGET_CONJ: u128 = 100_000_000;

/// Limits and knobs for [`cross_check`].
#[derive(Clone, Debug)]
pub struct VerifyConfig {
    /// Maximum number of candidate [p]-maps to enumerate.
    pub budget_pmaps: u128,
    /// Maximum number of conjugations for the generator closure.
    pub budget_conj: u128,
    /// The orbits are recomputed with the whole automorphism group when
    /// `|Aut| × #orbits` is at most this.
    pub full_group_limit: u128,
    /// Seed for the random search in conjugacy certificates.
    pub seed: u64,
}

impl Default for VerifyConfig {
    fn default() -> Self {
        VerifyConfig {
            budget_pmaps: DEFAULT_BUDGET_PMAPS,
            budget_conj: DEFAULT_BUDGET_CONJ,
            full_group_limit: 1_000_000,
            seed: 0x5eed,
        }
    }
}

/// How a report was produced.
#[derive(Copy, Clone, Debug, PartialEq, Eq)]
pub enum Method {
    /// All [p]-maps enumerated and split into orbits.
    Exhaustive,
    /// Abelian algebras too large to enumerate: every strictly triangular
    /// [p]-map is classified and explicitly conjugated to its class
    /// representative. Every nilpotent semilinear map is conjugate to one of
    /// these, so each class is hit.
    TriangularCertificate,
}

impl Method {
    pub fn as_str(self) -> &'static str {
        match self {
            Method::Exhaustive => "exhaustive",
            Method::TriangularCertificate => "triangular-certificate",
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Orbit {
    pub size: u128,
    /// Smallest member in the order of [`PMapImages::key`].
    pub representative: PMapImages,
    pub label: Option<IsoLabel>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OrbitReport {
    pub algebra: CatalogName,
    pub field: FieldSpec,
    pub method: Method,
    pub aut_order: u128,
    /// Number of [p]-maps examined.
    pub total: u128,
    /// Sorted by `(size, representative)`.
    pub orbits: Vec<Orbit>,
    pub expected_classes: usize,
    pub full_group_checked: bool,
    pub mismatches: Vec<String>,
    pub note: Option<String>,
}

fn num(x: u128) -> Value {
    u64::try_from(x).map_or_else(|_| json!(x.to_string()), |v| json!(v))
}

impl OrbitReport {
    pub fn is_ok(&self) -> bool {
        self.mismatches.is_empty()
    }

    pub fn to_json(&self, f: &Field) -> Value {
        let orbits: Vec<Value> = self
            .orbits
            .iter()
            .map(|o| {
                json!({
                    "size": num(o.size),
                    "representative": pmap_to_json(f, &o.representative),
                    "label": o.label.as_ref().map(|l| label_to_json(f, l)),
                    "display": o.label.as_ref().map(|l| l.display(f)),
                })
            })
            .collect();
        json!({
            "algebra": self.algebra.as_str(),
            "field": field_spec_to_json(&self.field),
            "method": self.method.as_str(),
            "aut_order": num(self.aut_order),
            "total_pmaps": num(self.total),
            "orbit_count": self.orbits.len(),
            "expected_classes": self.expected_classes,
            "full_group_checked": self.full_group_checked,
            "orbits": orbits,
            "mismatches": self.mismatches,
            "note": self.note,
        })
    }
}

fn budget_error(l: &LieAlg, unit: &'static str, required: u128, budget: u128) -> Error {
    Error::BudgetExceeded {
        case: format!("{} over {}", l.name(), l.field().spec()),
        unit,
        required,
        budget,
    }
}

/// Particular solutions `b_i` of `ad b_i = (ad x_i)^p`, or `None` when the
/// algebra is not restrictable.
fn coset_bases(l: &LieAlg) -> Option<Vec<Vect>> {
    let f = l.field();
    let p = f.characteristic();
    (0..l.dim())
        .map(|i| ad_preimage(l, &l.ad_matrix(&l.basis(i)).pow(f, p)))
        .collect()
}

/// Number of candidate [p]-maps: `|Z|^dim` if restrictable, else 0.
pub fn candidate_count(l: &LieAlg) -> u128 {
    if coset_bases(l).is_none() {
        return 0;
    }
    let z = (l.field().order() as u128).pow(l.center().dim() as u32);
    z.saturating_pow(l.dim() as u32)
}

/// Every [p]-nilpotent [p]-map on `l`, in a deterministic order. Each image
/// `x_i^{[p]}` ranges over the coset of the center solving
/// `ad b = (ad x_i)^p`.
pub fn enumerate_pnilpotent_pmaps(l: &LieAlg, budget: u128) -> Result<Vec<PMapImages>> {
    let Some(bases) = coset_bases(l) else {
        return Ok(Vec::new());
    };
    let f = l.field();
    let n = l.dim();
    let center = l.center();
    let zel = center.elements(f);
    let total = (zel.len() as u128).saturating_pow(n as u32);
    if total > budget {
        return Err(budget_error(l, "candidate [p]-maps", total, budget));
    }
    let zs = zel.len() as u64;
    Ok((0..total as u64)
        .into_par_iter()
        .filter_map(|mut code| {
            let mut rows = [Vect::zero(n); 4];
            for i in (0..n).rev() {
                rows[i] = bases[i].add(f, &zel[(code % zs) as usize]);
                code /= zs;
            }
            let r = RestrictedAlg::new_unchecked(l.clone(), PMapImages::new(&rows[..n]));
            r.is_p_nilpotent_with_center(&center).then(|| *r.pmap())
        })
        .collect())
}

/// Splits `pmaps` (closed under the action) into orbits of the group
/// generated by `gens`. Each orbit is returned sorted, smallest first.
/// Conjugates that fall outside `pmaps` are reported in the second component.
pub fn orbit_partition(
    l: &LieAlg,
    pmaps: &[PMapImages],
    gens: &[AutMat],
) -> (Vec<Vec<PMapImages>>, Vec<PMapImages>) {
    let mut sorted = pmaps.to_vec();
    sorted.sort_by_key(PMapImages::key);
    let index: HashMap<u128, usize> = sorted.iter().enumerate().map(|(i, m)| (m.key(), i)).collect();
    let mut assigned = vec![false; sorted.len()];
    let mut orbits = Vec::new();
    let mut escapes = Vec::new();
    for start in 0..sorted.len() {
        if assigned[start] {
            continue;
        }
        assigned[start] = true;
        let mut members = vec![start];
        let mut frontier = vec![start];
        while !frontier.is_empty() {
            let expand = |&i: &usize| -> Vec<PMapImages> {
                gens.iter().map(|g| conjugate_pmap(l, g, &sorted[i])).collect()
            };
            let next: Vec<PMapImages> = if frontier.len() > 64 {
                frontier.par_iter().flat_map_iter(expand).collect()
            } else {
                frontier.iter().flat_map(expand).collect()
            };
            frontier.clear();
            for m in next {
                match index.get(&m.key()) {
                    Some(&j) if !assigned[j] => {
                        assigned[j] = true;
                        members.push(j);
                        frontier.push(j);
                    }
                    Some(_) => {}
                    None => escapes.push(m),
                }
            }
        }
        members.sort_unstable();
        orbits.push(members.into_iter().map(|i| sorted[i]).collect());
    }
    (orbits, escapes)
}

/// Runs the oracle on one catalog algebra and compares it with
/// [`list_classes`] and [`classify`].
pub fn cross_check(l: &LieAlg, cfg: &VerifyConfig) -> Result<OrbitReport> {
    let name = l.catalog_name().ok_or(Error::NotCatalog)?;
    let list = list_classes(l)?;
    let gens = aut_generators(l)?;
    let candidates = candidate_count(l);
    let steps = candidates.saturating_mul(gens.len() as u128);
    if candidates > cfg.budget_pmaps || steps > cfg.budget_conj {
        if name.is_abelian() {
            return certificate_report(l, &list, cfg);
        }
        if candidates > cfg.budget_pmaps {
            return Err(budget_error(l, "candidate [p]-maps", candidates, cfg.budget_pmaps));
        }
        return Err(budget_error(l, "conjugations", steps, cfg.budget_conj));
    }
    let pmaps = enumerate_pnilpotent_pmaps(l, cfg.budget_pmaps)?;
    exhaustive_report(l, &list, &gens, &pmaps, cfg)
}

fn exhaustive_report(
    l: &LieAlg,
    list: &ClassList,
    gens: &[AutMat],
    pmaps: &[PMapImages],
    cfg: &VerifyConfig,
) -> Result<OrbitReport> {
    let f = l.field();
    let order = aut_order(l)?;
    let mut mismatches = Vec::new();
    let (orbit_sets, escapes) = orbit_partition(l, pmaps, gens);
    if let Some(e) = escapes.first() {
        mismatches.push(format!(
            "{} conjugates left the enumerated set, e.g. {e:?}",
            escapes.len()
        ));
    }

    let labels: Vec<Vec<Result<IsoLabel>>> = orbit_sets
        .iter()
        .map(|orb| {
            orb.par_iter()
                .map(|m| classify(&RestrictedAlg::new_unchecked(l.clone(), *m)))
                .collect()
        })
        .collect();

    let mut full_group_checked = false;
    if order.saturating_mul(orbit_sets.len() as u128) <= cfg.full_group_limit && !orbit_sets.is_empty() {
        let auts: Vec<AutMat> = enumerate_automorphisms(l)?.collect();
        for orb in &orbit_sets {
            let via_group: HashSet<u128> = auts
                .par_iter()
                .map(|a| conjugate_pmap(l, a, &orb[0]).key())
                .collect();
            let via_gens: HashSet<u128> = orb.iter().map(PMapImages::key).collect();
            if via_group != via_gens {
                mismatches.push(format!(
                    "orbit of {:?} has {} elements under the generators but {} under the full group",
                    orb[0],
                    via_gens.len(),
                    via_group.len()
                ));
            }
        }
        full_group_checked = true;
    }

    let mut orbits = Vec::new();
    for (orb, labs) in orbit_sets.iter().zip(&labels) {
        let mut distinct: BTreeMap<String, usize> = BTreeMap::new();
        let mut first = None;
        for lab in labs {
            match lab {
                Ok(lab) => {
                    *distinct.entry(lab.display(f)).or_default() += 1;
                    first.get_or_insert_with(|| lab.clone());
                }
                Err(e) => {
                    *distinct.entry(format!("error: {e}")).or_default() += 1;
                }
            }
        }
        if distinct.len() != 1 {
            mismatches.push(format!("orbit of {:?} has labels {distinct:?}", orb[0]));
        }
        let size = orb.len() as u128;
        if order % size != 0 {
            mismatches.push(format!(
                "orbit of {:?} has size {size}, which does not divide {order}",
                orb[0]
            ));
        }
        orbits.push(Orbit { size, representative: orb[0], label: first });
    }
    orbits.sort_by_key(|o| (o.size, o.representative.key()));

    let mut seen = HashSet::new();
    for o in &orbits {
        if let Some(lab) = &o.label {
            if !seen.insert(lab.clone()) {
                mismatches.push(format!("label {} labels two orbits", lab.display(f)));
            }
        }
    }
    if orbits.len() != list.entries.len() {
        mismatches.push(format!(
            "{} orbits but {} classes",
            orbits.len(),
            list.entries.len()
        ));
    }
    for (label, rep) in &list.entries {
        let hits: Vec<usize> = orbit_sets
            .iter()
            .enumerate()
            .filter(|(_, orb)| orb.iter().any(|m| m == rep))
            .map(|(i, _)| i)
            .collect();
        match hits.as_slice() {
            [i] => {
                let got = labels[*i].iter().find_map(|l| l.as_ref().ok());
                if got != Some(label) {
                    mismatches.push(format!(
                        "representative of {} lies in an orbit labelled {:?}",
                        label.display(f),
                        got.map(|g| g.display(f))
                    ));
                }
            }
            _ => mismatches.push(format!(
                "representative of {} lies in {} orbits",
                label.display(f),
                hits.len()
            )),
        }
    }

    Ok(OrbitReport {
        algebra: list.algebra,
        field: f.spec().clone(),
        method: Method::Exhaustive,
        aut_order: order,
        total: pmaps.len() as u128,
        orbits,
        expected_classes: list.entries.len(),
        full_group_checked,
        mismatches,
        note: list.note.clone(),
    })
}

/// Strictly triangular [p]-maps `x_i ↦ span(x_{i+1}, …, x_n)` of an abelian
/// algebra, indexed by `code`.
fn triangular_pmap(f: &Field, n: usize, mut code: u64) -> PMapImages {
    let q = f.order() as u64;
    let mut m = SqMat::zero(n);
    for i in (0..n).rev() {
        for j in (i + 1..n).rev() {
            m.set(i, j, Fe::from_index((code % q) as usize));
            code /= q;
        }
    }
    PMapImages::from_matrix(m)
}

/// Finds an automorphism `A` of the abelian algebra `l` with
/// `conj(A, from) = to`. Both maps are semilinear, so the condition
/// `A^{(p)} M_from = M_to A` is linear over the prime field in the entries
/// of `A`; a random element of the solution space is invertible with good
/// probability.
pub fn certify_conjugate(
    l: &LieAlg,
    from: &PMapImages,
    to: &PMapImages,
    rng: &mut ChaCha8Rng,
) -> Option<AutMat> {
    let f = l.field();
    let n = l.dim();
    let p = f.characteristic();
    let k = f.degree() as usize;
    let fp = Field::prime(p).ok()?;
    let basis = f.additive_basis();
    let unknowns = n * n * k;
    let residual = |a: &SqMat| -> SqMat {
        let lhs = a.frobenius(f).mul(f, from.matrix());
        let rhs = to.matrix().mul(f, a);
        let mut d = SqMat::zero(n);
        for i in 0..n {
            d.set_row(i, &lhs.row(i).sub(f, &rhs.row(i)));
        }
        d
    };
    // Column u of the system is the residual of the u-th elementary matrix.
    let mut columns = Vec::with_capacity(unknowns);
    for i in 0..n {
        for j in 0..n {
            for &e in basis {
                let mut a = SqMat::zero(n);
                a.set(i, j, e);
                let r = residual(&a);
                let col: Vec<Fe> = (0..n)
                    .flat_map(|r_i| (0..n).map(move |r_j| (r_i, r_j)))
                    .flat_map(|(r_i, r_j)| f.coeffs(r.get(r_i, r_j)).to_vec())
                    .map(|c| fp.from_int(c as i64))
                    .collect();
                columns.push(col);
            }
        }
    }
    let rows: Vec<Vec<Fe>> = (0..n * n * k)
        .map(|r| columns.iter().map(|c| c[r]).collect())
        .collect();
    let kernel = nullspace(&fp, &rows, unknowns);
    if kernel.is_empty() {
        return None;
    }
    for _ in 0..256 {
        let coef: Vec<Fe> = kernel
            .iter()
            .map(|_| fp.from_int(rng.gen_range(0..p as i64)))
            .collect();
        let mut a = SqMat::zero(n);
        for (c, v) in coef.iter().zip(&kernel) {
            if c.is_zero() {
                continue;
            }
            for (u, &vu) in v.iter().enumerate() {
                let x = fp.mul(*c, vu);
                if x.is_zero() {
                    continue;
                }
                let (i, j, t) = (u / (n * k), (u / k) % n, u % k);
                let scaled = f.mul(f.from_int(fp.coeffs(x)[0] as i64), basis[t]);
                a.set(i, j, f.add(a.get(i, j), scaled));
            }
        }
        if let Ok(aut) = AutMat::new(l, a) {
            if conjugate_pmap(l, &aut, from) == *to {
                return Some(aut);
            }
        }
    }
    None
}

fn certificate_report(l: &LieAlg, list: &ClassList, cfg: &VerifyConfig) -> Result<OrbitReport> {
    let f = l.field();
    let n = l.dim();
    let q = f.order() as u128;
    let total = q.pow((n * (n - 1) / 2) as u32);
    if total > cfg.budget_pmaps {
        return Err(budget_error(l, "triangular [p]-maps", total, cfg.budget_pmaps));
    }
    let reps: HashMap<IsoLabel, PMapImages> = list.entries.iter().cloned().collect();
    let results: Vec<(PMapImages, Result<IsoLabel>, bool)> = (0..total as u64)
        .into_par_iter()
        .map(|code| {
            let m = triangular_pmap(f, n, code);
            let r = RestrictedAlg::new_unchecked(l.clone(), m);
            let label = classify(&r);
            let certified = match &label {
                Ok(lab) => reps.get(lab).is_some_and(|rep| {
                    let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed ^ code);
                    certify_conjugate(l, &m, rep, &mut rng).is_some()
                }),
                Err(_) => false,
            };
            (m, label, certified)
        })
        .collect();

    let mut mismatches = Vec::new();
    let mut groups: HashMap<IsoLabel, (u128, PMapImages)> = HashMap::new();
    let mut failures = 0usize;
    for (m, label, certified) in &results {
        match label {
            Ok(lab) => {
                let e = groups.entry(lab.clone()).or_insert((0, *m));
                e.0 += 1;
                if m.key() < e.1.key() {
                    e.1 = *m;
                }
            }
            Err(err) => mismatches.push(format!("{m:?} failed to classify: {err}")),
        }
        if !certified {
            failures += 1;
            if failures <= 5 {
                mismatches.push(format!("no conjugacy certificate for {m:?}"));
            }
        }
    }
    if failures > 5 {
        mismatches.push(format!("{failures} maps without certificates in total"));
    }
    for (label, _) in &list.entries {
        if !groups.contains_key(label) {
            mismatches.push(format!("class {} not reached", label.display(f)));
        }
    }
    let mut orbits: Vec<Orbit> = groups
        .into_iter()
        .map(|(label, (size, rep))| Orbit { size, representative: rep, label: Some(label) })
        .collect();
    orbits.sort_by_key(|o| (o.size, o.representative.key()));
    if orbits.len() != list.entries.len() {
        mismatches.push(format!(
            "{} classes reached but {} expected",
            orbits.len(),
            list.entries.len()
        ));
    }
    Ok(OrbitReport {
        algebra: list.algebra,
        field: f.spec().clone(),
        method: Method::TriangularCertificate,
        aut_order: aut_order(l)?,
        total,
        orbits,
        expected_classes: list.entries.len(),
        full_group_checked: false,
        mismatches,
        note: list.note.clone(),
    })
}

/// Cross-checks every catalog algebra (or only `only`) over `f`.
pub fn verify_field(
    f: Arc<Field>,
    only: Option<CatalogName>,
    cfg: &VerifyConfig,
) -> Result<Vec<OrbitReport>> {
    CatalogName::ALL
        .into_iter()
        .filter(|c| only.is_none_or(|o| o == *c))
        .map(|c| cross_check(&LieAlg::catalog(f.clone(), c), cfg))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cat(p: u32, k: u32, name: CatalogName) -> LieAlg {
        LieAlg::catalog(Arc::new(Field::gf(p, k).unwrap()), name)
    }

    #[test]
    fn pmap_counts() {
        let n = |p, name| enumerate_pnilpotent_pmaps(&cat(p, 1, name), u128::MAX).unwrap().len();
        assert_eq!(n(2, CatalogName::L32), 4);
        assert_eq!(n(3, CatalogName::L32), 9);
        assert_eq!(n(2, CatalogName::L43), 0);
    }

    #[test]
    fn heisenberg_orbit_sizes() {
        let cfg = VerifyConfig::default();
        let r3 = cross_check(&cat(3, 1, CatalogName::L32), &cfg).unwrap();
        assert!(r3.is_ok(), "{:?}", r3.mismatches);
        assert_eq!(r3.orbits.iter().map(|o| o.size).collect::<Vec<_>>(), vec![1, 8]);
        let r2 = cross_check(&cat(2, 1, CatalogName::L32), &cfg).unwrap();
        assert!(r2.is_ok(), "{:?}", r2.mismatches);
        assert_eq!(r2.orbits.iter().map(|o| o.size).collect::<Vec<_>>(), vec![1, 3]);
        assert!(r2.full_group_checked);
    }

    #[test]
    fn zero_map_is_a_fixed_point() {
        let l = cat(3, 1, CatalogName::L42);
        let gens = aut_generators(&l).unwrap();
        let (orbits, escapes) = orbit_partition(&l, &[PMapImages::zero(4)], &gens);
        assert_eq!(orbits.len(), 1);
        assert_eq!(orbits[0].len(), 1);
        assert!(escapes.is_empty());
    }

    #[test]
    fn budget_is_enforced() {
        let cfg = VerifyConfig { budget_pmaps: 100, ..VerifyConfig::default() };
        let err = cross_check(&cat(3, 1, CatalogName::L42), &cfg).unwrap_err();
        assert!(matches!(err, Error::BudgetExceeded { required: 6561, .. }));
    }

    #[test]
    fn certificate_route_for_large_abelian() {
        let cfg = VerifyConfig { budget_pmaps: 1000, ..VerifyConfig::default() };
        let r = cross_check(&cat(3, 1, CatalogName::L31), &cfg).unwrap();
        assert_eq!(r.method, Method::TriangularCertificate);
        assert!(r.is_ok(), "{:?}", r.mismatches);
        assert_eq!(r.orbits.len(), 3);
        assert_eq!(r.total, 27);
    }
}
