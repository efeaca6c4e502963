//! Exact arithmetic in small finite fields GF(p^k).
//!
//! Elements are stored as indices into precomputed operation tables. The
//! index of an element is its coefficient list read as a base-p numeral with
//! the constant term as the most significant digit, so the derived ordering on
//! [`Fe`] is the lexicographic ordering of coefficient lists. Every subset the
//! classification needs (squares, the Artin-Schreier image, the sets
//! `{b d^3 + d}`) is computed by exhaustive enumeration.

use std::fmt;

use crate::error::{domain, Error, Result};

/// Default bound on the field order `p^k`.
pub const DEFAULT_ORDER_BOUND: usize = 25;

/// Hard ceiling on the field order: element indices are stored in a `u8`.
pub const MAX_ORDER: usize = 256;

/// A finite field GF(p^k) given by a prime, a degree and a monic irreducible
/// modulus (coefficients constant term first, length `k + 1`).
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct FieldSpec {
    pub p: u32,
    pub k: u32,
    pub modulus: Vec<u32>,
}

/// A field element, identified with its reduced coefficient list.
#[derive(Copy, Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Fe(u8);

impl Fe {
    pub const ZERO: Fe = Fe(0);

    pub fn index(self) -> usize {
        self.0 as usize
    }

    pub(crate) fn from_index(i: usize) -> Fe {
        debug_assert!(i < MAX_ORDER);
        Fe(i as u8)
    }

    pub fn is_zero(self) -> bool {
        self.0 == 0
    }
}

fn is_prime(n: u32) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= n {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

/// Remainder of `a` modulo the monic polynomial `m` over F_p. Coefficients
/// are constant term first.
fn poly_rem(a: &[u32], m: &[u32], p: u32) -> Vec<u32> {
    let dm = m.len() - 1;
    let mut r: Vec<u32> = a.to_vec();
    while r.len() > dm {
        let lead = r.pop().unwrap();
        if lead != 0 {
            let shift = r.len() - dm;
            for (j, &mj) in m[..dm].iter().enumerate() {
                r[shift + j] = (r[shift + j] + (p - lead) * mj) % p;
            }
        }
    }
    r
}

fn is_irreducible(m: &[u32], p: u32) -> bool {
    let k = m.len() - 1;
    // Trial division by every monic polynomial of degree 1..=k/2.
    for d in 1..=k / 2 {
        let count = (p as usize).pow(d as u32);
        for code in 0..count {
            let mut f = vec![0u32; d + 1];
            let mut c = code;
            for coeff in f.iter_mut().take(d) {
                *coeff = (c % p as usize) as u32;
                c /= p as usize;
            }
            f[d] = 1;
            if poly_rem(m, &f, p).iter().all(|&x| x == 0) {
                return false;
            }
        }
    }
    true
}

impl FieldSpec {
    /// Validates and builds a field description. When `modulus` is `None` a
    /// canonical modulus is chosen: `X` for prime fields, the shipped
    /// polynomials for GF(4), GF(9), GF(25) (t^2+t+1, t^2+1, t^2+t+1), and
    /// otherwise the first irreducible monic polynomial in lexicographic order.
    pub fn new(p: u32, k: u32, modulus: Option<Vec<u32>>) -> Result<FieldSpec> {
        if !is_prime(p) {
            return Err(Error::InvalidField(format!("{p} is not prime")));
        }
        if k == 0 {
            return Err(Error::InvalidField("extension degree must be at least 1".into()));
        }
        let order = (p as u128).checked_pow(k).unwrap_or(u128::MAX);
        if order > MAX_ORDER as u128 {
            return Err(Error::InvalidField(format!(
                "GF({p}^{k}) exceeds the supported order {MAX_ORDER}"
            )));
        }
        let modulus = match modulus {
            Some(m) => m,
            None => Self::canonical_modulus(p, k),
        };
        let spec = FieldSpec { p, k, modulus };
        spec.validate_modulus()?;
        Ok(spec)
    }

    /// The prime field GF(p).
    pub fn prime(p: u32) -> Result<FieldSpec> {
        Self::new(p, 1, None)
    }

    pub fn order(&self) -> usize {
        (self.p as usize).pow(self.k)
    }

    fn canonical_modulus(p: u32, k: u32) -> Vec<u32> {
        match (p, k) {
            (_, 1) => vec![0, 1],
            (2, 2) => vec![1, 1, 1],
            (3, 2) => vec![1, 0, 1],
            (5, 2) => vec![1, 1, 1],
            _ => {
                let k = k as usize;
                let count = (p as usize).pow(k as u32);
                for code in 0..count {
                    let mut m = vec![0u32; k + 1];
                    let mut c = code;
                    // Enumerate so that the constant term varies slowest.
                    for coeff in m[..k].iter_mut().rev() {
                        *coeff = (c % p as usize) as u32;
                        c /= p as usize;
                    }
                    m[k] = 1;
                    if is_irreducible(&m, p) {
                        return m;
                    }
                }
                unreachable!("irreducible polynomials exist in every degree")
            }
        }
    }

    fn validate_modulus(&self) -> Result<()> {
        let k = self.k as usize;
        let m = &self.modulus;
        if m.len() != k + 1 {
            return Err(Error::InvalidField(format!(
                "modulus must have {} coefficients, got {}",
                k + 1,
                m.len()
            )));
        }
        if m.iter().any(|&c| c >= self.p) {
            return Err(Error::InvalidField("modulus coefficients must lie in [0, p)".into()));
        }
        if m[k] != 1 {
            return Err(Error::InvalidField("modulus must be monic".into()));
        }
        if k == 1 {
            if m[0] != 0 {
                return Err(Error::InvalidField(
                    "prime fields use the placeholder modulus X, i.e. [0, 1]".into(),
                ));
            }
            return Ok(());
        }
        if !is_irreducible(m, self.p) {
            return Err(Error::InvalidField(format!(
                "modulus {:?} is reducible over GF({})",
                m, self.p
            )));
        }
        Ok(())
    }
}

impl fmt::Display for FieldSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.k == 1 {
            write!(f, "GF({})", self.p)
        } else {
            write!(f, "GF({}^{})", self.p, self.k)
        }
    }
}

/// Operation tables for a validated [`FieldSpec`].
#[derive(Clone, Debug)]
pub struct Field {
    spec: FieldSpec,
    q: usize,
    coeffs: Vec<Vec<u32>>,
    add: Vec<Fe>,
    mul: Vec<Fe>,
    neg: Vec<Fe>,
    inv: Vec<Fe>,
    frob: Vec<Fe>,
    frob_root: Vec<Fe>,
    sqrt: Vec<Option<Fe>>,
    one: Fe,
    primitive: Fe,
    additive_basis: Vec<Fe>,
}

impl PartialEq for Field {
    fn eq(&self, other: &Self) -> bool {
        self.spec == other.spec
    }
}

impl Eq for Field {}

impl Field {
    /// Builds the tables, refusing fields larger than [`DEFAULT_ORDER_BOUND`].
    pub fn new(spec: FieldSpec) -> Result<Field> {
        Self::with_bound(spec, DEFAULT_ORDER_BOUND)
    }

    pub fn with_bound(spec: FieldSpec, bound: usize) -> Result<Field> {
        let q = spec.order();
        if q > bound.min(MAX_ORDER) {
            return Err(Error::InvalidField(format!(
                "{spec} has {q} elements, above the configured bound {bound}"
            )));
        }
        let p = spec.p;
        let k = spec.k as usize;
        let coeffs: Vec<Vec<u32>> = (0..q)
            .map(|mut i| {
                let mut c = vec![0u32; k];
                for slot in c.iter_mut().rev() {
                    *slot = (i % p as usize) as u32;
                    i /= p as usize;
                }
                c
            })
            .collect();
        let encode = |c: &[u32]| -> Fe {
            Fe::from_index(c.iter().fold(0usize, |acc, &x| acc * p as usize + x as usize))
        };
        let mut add = vec![Fe::ZERO; q * q];
        let mut mul = vec![Fe::ZERO; q * q];
        for a in 0..q {
            for b in 0..q {
                let s: Vec<u32> = coeffs[a]
                    .iter()
                    .zip(&coeffs[b])
                    .map(|(x, y)| (x + y) % p)
                    .collect();
                add[a * q + b] = encode(&s);
                let mut prod = vec![0u32; 2 * k - 1];
                for (i, x) in coeffs[a].iter().enumerate() {
                    for (j, y) in coeffs[b].iter().enumerate() {
                        prod[i + j] = (prod[i + j] + x * y) % p;
                    }
                }
                let r = if k == 1 { prod } else { poly_rem(&prod, &spec.modulus, p) };
                mul[a * q + b] = encode(&r);
            }
        }
        let mut one_coeffs = vec![0u32; k];
        one_coeffs[0] = 1;
        let one = encode(&one_coeffs);
        let mut neg = vec![Fe::ZERO; q];
        let mut inv = vec![Fe::ZERO; q];
        for a in 0..q {
            for b in 0..q {
                if add[a * q + b] == Fe::ZERO {
                    neg[a] = Fe::from_index(b);
                }
                if mul[a * q + b] == one {
                    inv[a] = Fe::from_index(b);
                }
            }
        }
        let mut field = Field {
            spec,
            q,
            coeffs,
            add,
            mul,
            neg,
            inv,
            frob: vec![Fe::ZERO; q],
            frob_root: vec![Fe::ZERO; q],
            sqrt: vec![None; q],
            one,
            primitive: one,
            additive_basis: Vec::new(),
        };
        for a in field.elements() {
            let fa = field.pow(a, p as u64);
            field.frob[a.index()] = fa;
            field.frob_root[fa.index()] = a;
            let s = field.mul(a, a);
            if field.sqrt[s.index()].is_none() {
                field.sqrt[s.index()] = Some(a);
            }
        }
        field.primitive = field
            .elements()
            .find(|&g| !g.is_zero() && field.multiplicative_order(g) == q - 1)
            .expect("the multiplicative group of a finite field is cyclic");
        field.additive_basis = (0..k)
            .map(|j| {
                let mut c = vec![0u32; k];
                c[j] = 1;
                encode(&c)
            })
            .collect();
        Ok(field)
    }

    /// Convenience constructor for GF(p) under the default bound.
    pub fn prime(p: u32) -> Result<Field> {
        Field::new(FieldSpec::prime(p)?)
    }

    /// Convenience constructor for GF(p^k) with the canonical modulus.
    pub fn gf(p: u32, k: u32) -> Result<Field> {
        Field::new(FieldSpec::new(p, k, None)?)
    }

    pub fn spec(&self) -> &FieldSpec {
        &self.spec
    }

    pub fn characteristic(&self) -> u32 {
        self.spec.p
    }

    pub fn degree(&self) -> u32 {
        self.spec.k
    }

    pub fn order(&self) -> usize {
        self.q
    }

    pub fn zero(&self) -> Fe {
        Fe::ZERO
    }

    pub fn one(&self) -> Fe {
        self.one
    }

    /// A generator of the multiplicative group (the smallest one).
    pub fn primitive_element(&self) -> Fe {
        self.primitive
    }

    /// The F_p-basis `1, t, ..., t^(k-1)` of the field.
    pub fn additive_basis(&self) -> &[Fe] {
        &self.additive_basis
    }

    /// All elements in increasing order.
    pub fn elements(&self) -> impl Iterator<Item = Fe> + Clone {
        (0..self.q).map(Fe::from_index)
    }

    pub fn nonzero_elements(&self) -> impl Iterator<Item = Fe> + Clone {
        (1..self.q).map(Fe::from_index)
    }

    pub fn coeffs(&self, a: Fe) -> &[u32] {
        &self.coeffs[a.index()]
    }

    pub fn from_coeffs(&self, c: &[u32]) -> Result<Fe> {
        let k = self.spec.k as usize;
        if c.len() != k {
            return Err(domain(format!(
                "field element needs {k} coefficients, got {}",
                c.len()
            )));
        }
        if let Some(bad) = c.iter().find(|&&x| x >= self.spec.p) {
            return Err(domain(format!(
                "coefficient {bad} is not reduced modulo {}",
                self.spec.p
            )));
        }
        let p = self.spec.p as usize;
        Ok(Fe::from_index(c.iter().fold(0usize, |acc, &x| acc * p + x as usize)))
    }

    /// The image of the integer `n` under Z -> F.
    pub fn from_int(&self, n: i64) -> Fe {
        let p = self.spec.p as i64;
        let r = n.rem_euclid(p) as u32;
        let mut c = vec![0u32; self.spec.k as usize];
        c[0] = r;
        self.from_coeffs(&c).expect("reduced")
    }

    #[inline]
    pub fn add(&self, a: Fe, b: Fe) -> Fe {
        self.add[a.index() * self.q + b.index()]
    }

    #[inline]
    pub fn sub(&self, a: Fe, b: Fe) -> Fe {
        self.add(a, self.neg(b))
    }

    #[inline]
    pub fn mul(&self, a: Fe, b: Fe) -> Fe {
        self.mul[a.index() * self.q + b.index()]
    }

    #[inline]
    pub fn neg(&self, a: Fe) -> Fe {
        self.neg[a.index()]
    }

    /// Multiplicative inverse; fails on zero.
    pub fn inv(&self, a: Fe) -> Result<Fe> {
        if a.is_zero() {
            Err(domain("zero has no inverse"))
        } else {
            Ok(self.inv[a.index()])
        }
    }

    /// Inverse of an element the caller knows to be nonzero.
    #[inline]
    pub(crate) fn inv_nz(&self, a: Fe) -> Fe {
        debug_assert!(!a.is_zero(), "zero has no inverse");
        self.inv[a.index()]
    }

    pub fn div(&self, a: Fe, b: Fe) -> Result<Fe> {
        Ok(self.mul(a, self.inv(b)?))
    }

    pub fn pow(&self, a: Fe, mut e: u64) -> Fe {
        let mut base = a;
        let mut acc = self.one;
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul(acc, base);
            }
            base = self.mul(base, base);
            e >>= 1;
        }
        acc
    }

    fn multiplicative_order(&self, a: Fe) -> usize {
        let mut x = a;
        let mut n = 1;
        while x != self.one {
            x = self.mul(x, a);
            n += 1;
        }
        n
    }

    /// `a^p`.
    #[inline]
    pub fn frobenius(&self, a: Fe) -> Fe {
        self.frob[a.index()]
    }

    /// The unique `b` with `b^p = a`.
    #[inline]
    pub fn frobenius_root(&self, a: Fe) -> Fe {
        self.frob_root[a.index()]
    }

    pub fn is_square(&self, a: Fe) -> bool {
        self.sqrt[a.index()].is_some()
    }

    /// A square root of `a` if one exists (the smallest one).
    pub fn sqrt(&self, a: Fe) -> Option<Fe> {
        self.sqrt[a.index()]
    }

    /// Membership in the Artin-Schreier image `{d + d^2}` (characteristic 2).
    pub fn in_artin_schreier(&self, x: Fe) -> Result<bool> {
        if self.spec.p != 2 {
            return Err(domain(format!(
                "the Artin-Schreier subspace is defined in characteristic 2, not {}",
                self.spec.p
            )));
        }
        Ok(self
            .elements()
            .any(|d| self.add(d, self.mul(d, d)) == x))
    }

    /// The Artin-Schreier image as a sorted list.
    pub fn artin_schreier_subspace(&self) -> Result<Vec<Fe>> {
        let mut out = Vec::new();
        for x in self.elements() {
            if self.in_artin_schreier(x)? {
                out.push(x);
            }
        }
        Ok(out)
    }

    /// Membership in `{beta d^3 + d}` (characteristic 3, `beta` nonzero).
    pub fn in_k_beta(&self, beta: Fe, x: Fe) -> Result<bool> {
        if self.spec.p != 3 {
            return Err(domain(format!(
                "K_beta is defined in characteristic 3, not {}",
                self.spec.p
            )));
        }
        if beta.is_zero() {
            return Err(domain("K_beta needs a nonzero beta"));
        }
        Ok(self
            .elements()
            .any(|d| self.add(self.mul(beta, self.pow(d, 3)), d) == x))
    }

    pub fn k_beta_set(&self, beta: Fe) -> Result<Vec<Fe>> {
        let mut out = Vec::new();
        for x in self.elements() {
            if self.in_k_beta(beta, x)? {
                out.push(x);
            }
        }
        Ok(out)
    }

    /// Human-readable element: an integer for prime fields, otherwise a
    /// polynomial in `t`.
    pub fn fmt_elem(&self, a: Fe) -> String {
        let c = self.coeffs(a);
        if c.len() == 1 {
            return c[0].to_string();
        }
        let terms: Vec<String> = c
            .iter()
            .enumerate()
            .filter(|(_, &x)| x != 0)
            .map(|(j, &x)| match (j, x) {
                (0, x) => x.to_string(),
                (1, 1) => "t".to_string(),
                (1, x) => format!("{x}t"),
                (j, 1) => format!("t^{j}"),
                (j, x) => format!("{x}t^{j}"),
            })
            .collect();
        if terms.is_empty() {
            "0".into()
        } else {
            terms.join("+")
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn gf4() -> Field {
        Field::gf(2, 2).unwrap()
    }

    fn t(f: &Field) -> Fe {
        f.from_coeffs(&[0, 1]).unwrap()
    }

    #[test]
    fn prime_field_arithmetic() {
        let f = Field::prime(3).unwrap();
        assert_eq!(f.add(f.from_int(2), f.from_int(2)), f.from_int(1));
        let f5 = Field::prime(5).unwrap();
        assert_eq!(f5.inv(f5.from_int(2)).unwrap(), f5.from_int(3));
        assert_eq!(
            f5.inv(Fe::ZERO).unwrap_err(),
            Error::Domain("zero has no inverse".into())
        );
    }

    #[test]
    fn gf4_multiplication_reduces_by_modulus() {
        let f = gf4();
        let t = t(&f);
        let t_plus_1 = f.from_coeffs(&[1, 1]).unwrap();
        assert_eq!(f.mul(t, t), t_plus_1);
        assert_eq!(f.frobenius(t), t_plus_1);
    }

    #[test]
    fn frobenius_examples() {
        let f3 = Field::prime(3).unwrap();
        assert_eq!(f3.frobenius(f3.from_int(2)), f3.from_int(2));
        let f9 = Field::gf(3, 2).unwrap();
        let t9 = t(&f9);
        assert_eq!(f9.frobenius_root(f9.frobenius(t9)), t9);
    }

    #[test]
    fn squares() {
        let f5 = Field::prime(5).unwrap();
        let four = f5.from_int(4);
        assert!(f5.is_square(four));
        let w = f5.sqrt(four).unwrap();
        assert!(w == f5.from_int(2) || w == f5.from_int(3));
        // Brute force: nothing squares to 2 in GF(5).
        assert!(f5.elements().all(|y| f5.mul(y, y) != f5.from_int(2)));
        assert!(!f5.is_square(f5.from_int(2)));
        let f = gf4();
        assert!(f.elements().all(|a| f.is_square(a)));
        assert!(f.is_square(t(&f)));
    }

    #[test]
    fn artin_schreier_examples() {
        let f2 = Field::prime(2).unwrap();
        assert!(!f2.in_artin_schreier(f2.one()).unwrap());
        assert!(f2.in_artin_schreier(Fe::ZERO).unwrap());
        let f = gf4();
        assert_eq!(f.artin_schreier_subspace().unwrap(), vec![Fe::ZERO, f.one()]);
        let f3 = Field::prime(3).unwrap();
        assert!(f3.in_artin_schreier(Fe::ZERO).is_err());
    }

    #[test]
    fn k_beta_examples() {
        let f3 = Field::prime(3).unwrap();
        assert_eq!(f3.k_beta_set(f3.from_int(2)).unwrap(), vec![Fe::ZERO]);
        assert_eq!(f3.k_beta_set(f3.one()).unwrap().len(), 3);
        assert!(f3.in_k_beta(f3.one(), Fe::ZERO).unwrap());
        assert!(f3.in_k_beta(Fe::ZERO, Fe::ZERO).is_err());
        let f5 = Field::prime(5).unwrap();
        assert!(f5.in_k_beta(f5.one(), Fe::ZERO).is_err());
    }

    #[test]
    fn element_order_is_lexicographic_in_coefficients() {
        let f = gf4();
        let listed: Vec<Vec<u32>> = f.elements().map(|a| f.coeffs(a).to_vec()).collect();
        let mut sorted = listed.clone();
        sorted.sort();
        assert_eq!(listed, sorted);
    }

    #[test]
    fn rejects_bad_specs() {
        assert!(FieldSpec::new(4, 1, None).is_err());
        assert!(FieldSpec::new(2, 2, Some(vec![1, 0, 1])).is_err()); // (t+1)^2
        assert!(FieldSpec::new(2, 2, Some(vec![1, 1])).is_err());
        assert!(FieldSpec::new(3, 1, Some(vec![1, 1])).is_err());
        assert!(Field::new(FieldSpec::new(3, 3, None).unwrap()).is_err());
        assert!(Field::with_bound(FieldSpec::new(3, 3, None).unwrap(), 27).is_ok());
    }

    #[test]
    fn shipped_moduli_are_irreducible() {
        for (p, k) in [(2, 2), (3, 2), (5, 2), (2, 3), (2, 4), (3, 3), (7, 2)] {
            let spec = FieldSpec::new(p, k, None).unwrap();
            assert!(is_irreducible(&spec.modulus, p), "{spec}");
        }
        assert_eq!(FieldSpec::new(5, 2, None).unwrap().modulus, vec![1, 1, 1]);
    }

    #[test]
    fn field_axioms_exhaustive() {
        for (p, k) in [(2, 1), (3, 1), (5, 1), (2, 2), (3, 2), (2, 3)] {
            let f = Field::gf(p, k).unwrap();
            for a in f.elements() {
                if !a.is_zero() {
                    assert_eq!(f.mul(f.inv(a).unwrap(), a), f.one());
                }
                assert_eq!(f.add(a, f.neg(a)), Fe::ZERO);
                for b in f.elements() {
                    assert_eq!(f.add(a, b), f.add(b, a));
                    assert_eq!(f.mul(a, b), f.mul(b, a));
                    for c in f.elements() {
                        assert_eq!(
                            f.mul(a, f.add(b, c)),
                            f.add(f.mul(a, b), f.mul(a, c))
                        );
                        assert_eq!(f.mul(a, f.mul(b, c)), f.mul(f.mul(a, b), c));
                    }
                }
            }
        }
    }

    #[test]
    fn frobenius_is_a_ring_automorphism() {
        for (p, k) in [(2, 1), (3, 1), (5, 1), (2, 2), (3, 2), (2, 3), (2, 4), (5, 2)] {
            let f = Field::gf(p, k).unwrap();
            for a in f.elements() {
                assert_eq!(f.frobenius_root(f.frobenius(a)), a);
                assert_eq!(f.frobenius(f.frobenius_root(a)), a);
                for b in f.elements() {
                    assert_eq!(
                        f.frobenius(f.add(a, b)),
                        f.add(f.frobenius(a), f.frobenius(b))
                    );
                    assert_eq!(
                        f.frobenius(f.mul(a, b)),
                        f.mul(f.frobenius(a), f.frobenius(b))
                    );
                }
            }
        }
    }

    #[test]
    fn special_subsets_are_subgroups() {
        for k in 1..=4 {
            let f = Field::gf(2, k).unwrap();
            let kk = f.artin_schreier_subspace().unwrap();
            assert!(kk.contains(&Fe::ZERO));
            for &a in &kk {
                for &b in &kk {
                    assert!(kk.contains(&f.add(a, b)));
                }
            }
            let kernel = f
                .elements()
                .filter(|&d| f.add(d, f.mul(d, d)).is_zero())
                .count();
            assert_eq!(kk.len() * kernel, f.order());
        }
        for k in 1..=2 {
            let f = Field::gf(3, k).unwrap();
            for beta in f.nonzero_elements() {
                let kb = f.k_beta_set(beta).unwrap();
                assert!(kb.contains(&Fe::ZERO));
                for &a in &kb {
                    for &b in &kb {
                        assert!(kb.contains(&f.add(a, b)));
                    }
                }
            }
        }
    }

    #[test]
    fn primitive_element_generates() {
        for (p, k) in [(2, 1), (3, 1), (5, 1), (2, 2), (3, 2), (5, 2)] {
            let f = Field::gf(p, k).unwrap();
            let g = f.primitive_element();
            let mut seen = std::collections::BTreeSet::new();
            let mut x = f.one();
            for _ in 0..f.order() - 1 {
                seen.insert(x);
                x = f.mul(x, g);
            }
            assert_eq!(seen.len(), f.order() - 1);
        }
    }
}
