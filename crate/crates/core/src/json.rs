//! JSON encodings. Field elements are arrays of `k` integers, constant term
//! first; basis indices are 1-based.

use std::sync::Arc;

use serde::{Deserialize, Serialize};
use serde_json::{json, Value};

use crate::classify::{ClassList, IsoLabel};
use crate::error::{Error, Result};
use crate::field::{Fe, Field, FieldSpec, DEFAULT_ORDER_BOUND};
use crate::liealg::LieAlg;
use crate::linalg::{SqMat, Vect};
use crate::pmap::{PMapImages, RestrictedAlg};

#[derive(Clone, Debug, Serialize, Deserialize, PartialEq, Eq)]
#[serde(deny_unknown_fields)]
pub struct FieldSpecJson {
    pub p: u32,
    pub k: u32,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub modulus: Option<Vec<u32>>,
}

#[derive(Clone, Debug, Serialize, Deserialize, PartialEq, Eq)]
#[serde(deny_unknown_fields)]
pub struct BracketJson {
    pub i: usize,
    pub j: usize,
    pub value: Vec<Vec<u32>>,
}

#[derive(Clone, Debug, Serialize, Deserialize, PartialEq, Eq)]
#[serde(deny_unknown_fields)]
pub struct AlgebraJson {
    pub field: FieldSpecJson,
    pub dim: usize,
    #[serde(default)]
    pub brackets: Vec<BracketJson>,
}

#[derive(Clone, Debug, Serialize, Deserialize, PartialEq, Eq)]
#[serde(deny_unknown_fields)]
pub struct PMapJson {
    pub images: Vec<Vec<Vec<u32>>>,
}

#[derive(Clone, Debug, Serialize, Deserialize, PartialEq, Eq)]
#[serde(deny_unknown_fields)]
pub struct RestrictedJson {
    pub algebra: AlgebraJson,
    pub pmap: PMapJson,
}

pub fn fe_to_json(f: &Field, x: Fe) -> Vec<u32> {
    f.coeffs(x).to_vec()
}

pub fn fe_from_json(f: &Field, c: &[u32]) -> Result<Fe> {
    f.from_coeffs(c)
}

pub fn vect_to_json(f: &Field, v: &Vect) -> Vec<Vec<u32>> {
    v.coords().iter().map(|&x| fe_to_json(f, x)).collect()
}

pub fn vect_from_json(f: &Field, dim: usize, v: &[Vec<u32>]) -> Result<Vect> {
    if v.len() != dim {
        return Err(Error::Domain(format!(
            "vector has {} coordinates, expected {dim}",
            v.len()
        )));
    }
    let c: Vec<Fe> = v.iter().map(|x| fe_from_json(f, x)).collect::<Result<_>>()?;
    Ok(Vect::from_slice(&c))
}

pub fn field_spec_to_json(s: &FieldSpec) -> FieldSpecJson {
    FieldSpecJson { p: s.p, k: s.k, modulus: Some(s.modulus.clone()) }
}

pub fn field_from_json(s: &FieldSpecJson, bound: usize) -> Result<Field> {
    let spec = FieldSpec::new(s.p, s.k, s.modulus.clone())?;
    Field::with_bound(spec, bound)
}

pub fn algebra_to_json(l: &LieAlg) -> AlgebraJson {
    let f = l.field();
    AlgebraJson {
        field: field_spec_to_json(f.spec()),
        dim: l.dim(),
        brackets: l
            .brackets()
            .into_iter()
            .map(|(i, j, v)| BracketJson { i: i + 1, j: j + 1, value: vect_to_json(f, &v) })
            .collect(),
    }
}

pub fn algebra_from_json(a: &AlgebraJson, bound: usize) -> Result<LieAlg> {
    let f = Arc::new(field_from_json(&a.field, bound)?);
    if !(1..=4).contains(&a.dim) {
        return Err(Error::Unsupported(format!(
            "dimension {}; only 1 to 4 are supported",
            a.dim
        )));
    }
    let mut brackets = Vec::new();
    for b in &a.brackets {
        if b.i == 0 || b.j == 0 {
            return Err(Error::InvalidAlgebra("bracket indices are 1-based".into()));
        }
        brackets.push((b.i - 1, b.j - 1, vect_from_json(&f, a.dim, &b.value)?));
    }
    LieAlg::new(f, a.dim, &brackets)
}

pub fn pmap_to_json(f: &Field, m: &PMapImages) -> PMapJson {
    PMapJson { images: (0..m.dim()).map(|i| vect_to_json(f, &m.image(i))).collect() }
}

pub fn pmap_from_json(l: &LieAlg, m: &PMapJson) -> Result<PMapImages> {
    if m.images.len() != l.dim() {
        return Err(Error::InvalidPMap(format!(
            "expected {} images, got {}",
            l.dim(),
            m.images.len()
        )));
    }
    let rows: Vec<Vect> = m
        .images
        .iter()
        .map(|v| vect_from_json(l.field(), l.dim(), v))
        .collect::<Result<_>>()?;
    Ok(PMapImages::new(&rows))
}

pub fn matrix_to_json(f: &Field, m: &SqMat) -> Vec<Vec<Vec<u32>>> {
    (0..m.n()).map(|i| vect_to_json(f, &m.row(i))).collect()
}

pub fn restricted_to_json(r: &RestrictedAlg) -> RestrictedJson {
    RestrictedJson {
        algebra: algebra_to_json(r.alg()),
        pmap: pmap_to_json(r.field(), r.pmap()),
    }
}

/// Parses a restricted algebra document. Syntax errors and schema mismatches
/// are [`Error::Parse`]; everything else is a semantic error.
pub fn parse_restricted(text: &str) -> Result<(LieAlg, PMapImages)> {
    parse_restricted_with_bound(text, DEFAULT_ORDER_BOUND)
}

pub fn parse_restricted_with_bound(text: &str, bound: usize) -> Result<(LieAlg, PMapImages)> {
    let doc: RestrictedJson =
        serde_json::from_str(text).map_err(|e| Error::Parse(e.to_string()))?;
    let l = algebra_from_json(&doc.algebra, bound)?;
    let m = pmap_from_json(&l, &doc.pmap)?;
    Ok((l, m))
}

pub fn label_to_json(f: &Field, label: &IsoLabel) -> Value {
    let params: Vec<Vec<u32>> = label.params.iter().map(|&x| fe_to_json(f, x)).collect();
    json!({ "family": label.family.to_string(), "params": params })
}

pub fn label_from_json(f: &Field, v: &Value) -> Result<IsoLabel> {
    #[derive(Deserialize)]
    #[serde(deny_unknown_fields)]
    struct Raw {
        family: String,
        params: Vec<Vec<u32>>,
    }
    let raw: Raw = serde_json::from_value(v.clone()).map_err(|e| Error::Parse(e.to_string()))?;
    let params = raw
        .params
        .iter()
        .map(|c| fe_from_json(f, c))
        .collect::<Result<_>>()?;
    Ok(IsoLabel::new(raw.family.parse()?, params))
}

pub fn class_list_to_json(l: &LieAlg, list: &ClassList) -> Value {
    let f = l.field();
    let entries: Vec<Value> = list
        .entries
        .iter()
        .map(|(label, rep)| {
            json!({
                "label": label_to_json(f, label),
                "display": label.display(f),
                "pmap": pmap_to_json(f, rep),
            })
        })
        .collect();
    let mut v = json!({
        "algebra": algebra_to_json(l),
        "name": list.algebra.as_str(),
        "classes": entries,
    });
    if let Some(note) = &list.note {
        v["note"] = json!(note);
    }
    v
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::liealg::CatalogName;

    #[test]
    fn restricted_round_trip() {
        let f = Arc::new(Field::gf(2, 2).unwrap());
        let l = LieAlg::catalog(f.clone(), CatalogName::L42);
        let t = f.from_coeffs(&[0, 1]).unwrap();
        let pm = PMapImages::from_sparse(4, &[(0, l.basis(2)), (1, l.basis(2).scale(&f, t))]);
        let r = RestrictedAlg::new(l, pm).unwrap();
        let text = serde_json::to_string(&restricted_to_json(&r)).unwrap();
        let (l2, pm2) = parse_restricted(&text).unwrap();
        assert_eq!(RestrictedAlg::new(l2, pm2).unwrap(), r);
    }

    #[test]
    fn prime_field_modulus_may_be_omitted() {
        let text = r#"{"algebra": {"field": {"p": 3, "k": 1}, "dim": 3,
            "brackets": [{"i": 1, "j": 2, "value": [[0],[0],[1]]}]},
            "pmap": {"images": [[[0],[0],[0]],[[0],[0],[0]],[[0],[0],[0]]]}}"#;
        let (l, _) = parse_restricted(text).unwrap();
        assert_eq!(l.catalog_name(), Some(CatalogName::L32));
    }

    #[test]
    fn error_kinds() {
        assert!(matches!(parse_restricted("{not json"), Err(Error::Parse(_))));
        assert!(matches!(parse_restricted(r#"{"algebra": 3}"#), Err(Error::Parse(_))));
        let bad_coeff = r#"{"algebra": {"field": {"p": 3, "k": 1}, "dim": 1},
            "pmap": {"images": [[[5]]]}}"#;
        assert!(matches!(parse_restricted(bad_coeff), Err(Error::Domain(_))));
    }

    #[test]
    fn label_json_has_sorted_keys() {
        let f = Field::prime(2).unwrap();
        let label = IsoLabel::new("K_{3,2}^1".parse().unwrap(), vec![Fe::ZERO]);
        let v = label_to_json(&f, &label);
        assert_eq!(v.to_string(), r#"{"family":"K_{3,2}^1","params":[[0]]}"#);
        assert_eq!(label_from_json(&f, &v).unwrap(), label);
    }
}
