//! Polynomials over GF(q), residues modulo x^n - 1, q-cyclotomic cosets and
//! idempotents of cyclic codes.

use std::collections::BTreeSet;
use std::fmt;
use std::sync::Arc;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::arith;
use crate::gf::{build_extension, ExtElem, ExtField, Fe, Field, FieldDesc, Gf, GfError};
use crate::upoly;

/// Largest code length the cyclic machinery accepts.
pub const MAX_LENGTH: usize = 4096;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum PolyError {
    #[error("gcd({n}, {q}) != 1")]
    NotCoprime { n: usize, q: u64 },
    #[error("length must be between 1 and {MAX_LENGTH}, got {0}")]
    InvalidLength(usize),
    #[error("product has a coefficient outside the base field; the exponent set is not q-closed")]
    CoefficientNotInBaseField,
    #[error("{0:?} is not a union of cyclotomic cosets modulo {1}")]
    NotCosetClosed(Vec<usize>, usize),
    #[error("{a} is not a unit modulo {n}")]
    NotUnit { a: i64, n: usize },
    #[error("root of unity override does not have order {0}")]
    InvalidRoot(usize),
    #[error(transparent)]
    Field(#[from] GfError),
}

/// Dense polynomial over a [`Gf`], ascending coefficients, no trailing zeros.
#[derive(Clone, PartialEq, Eq, Hash, Debug, Default, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Poly(Vec<Fe>);

impl Poly {
    pub fn zero() -> Poly {
        Poly(Vec::new())
    }

    pub fn one() -> Poly {
        Poly(vec![Fe::ONE])
    }

    pub fn constant(c: Fe) -> Poly {
        Poly::new(vec![c])
    }

    /// `x^e`.
    pub fn monomial(c: Fe, e: usize) -> Poly {
        let mut v = vec![Fe::ZERO; e + 1];
        v[e] = c;
        Poly::new(v)
    }

    pub fn new(mut coeffs: Vec<Fe>) -> Poly {
        while coeffs.last() == Some(&Fe::ZERO) {
            coeffs.pop();
        }
        Poly(coeffs)
    }

    /// Coefficients from integers, reduced into the prime subfield.
    pub fn from_ints(f: &Gf, c: &[i64]) -> Poly {
        Poly::new(c.iter().map(|&x| f.from_int(x)).collect())
    }

    pub fn coeffs(&self) -> &[Fe] {
        &self.0
    }

    pub fn into_coeffs(self) -> Vec<Fe> {
        self.0
    }

    pub fn coeff(&self, i: usize) -> Fe {
        self.0.get(i).copied().unwrap_or(Fe::ZERO)
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_empty()
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.0.len().checked_sub(1)
    }

    pub fn add(&self, other: &Poly, f: &Gf) -> Poly {
        Poly(upoly::add(f, &self.0, &other.0))
    }

    pub fn sub(&self, other: &Poly, f: &Gf) -> Poly {
        Poly(upoly::sub(f, &self.0, &other.0))
    }

    pub fn mul(&self, other: &Poly, f: &Gf) -> Poly {
        Poly(upoly::mul(f, &self.0, &other.0))
    }

    pub fn scale(&self, c: Fe, f: &Gf) -> Poly {
        Poly(upoly::scale(f, &self.0, &c))
    }

    pub fn divrem(&self, other: &Poly, f: &Gf) -> (Poly, Poly) {
        let (q, r) = upoly::divrem(f, &self.0, &other.0);
        (Poly(q), Poly(r))
    }

    pub fn rem(&self, other: &Poly, f: &Gf) -> Poly {
        self.divrem(other, f).1
    }

    pub fn eval(&self, x: Fe, f: &Gf) -> Fe {
        self.0.iter().rev().fold(Fe::ZERO, |acc, &c| f.add(f.mul(acc, x), c))
    }

    /// `x^n - 1`.
    pub fn xn_minus_one(n: usize, f: &Gf) -> Poly {
        let mut v = vec![Fe::ZERO; n + 1];
        v[0] = f.neg(Fe::ONE);
        v[n] = Fe::ONE;
        Poly::new(v)
    }

    /// Coefficient vector padded (or truncated) to length `n`.
    pub fn to_vec(&self, n: usize) -> Vec<Fe> {
        let mut v = self.0.clone();
        v.resize(n, Fe::ZERO);
        v
    }

    pub fn display<'a>(&'a self, f: &'a Gf) -> PolyDisplay<'a> {
        PolyDisplay { poly: self, field: f, var: "x" }
    }

    pub fn display_in<'a>(&'a self, f: &'a Gf, var: &'static str) -> PolyDisplay<'a> {
        PolyDisplay { poly: self, field: f, var }
    }

    pub fn to_json(&self, n: usize, f: &Gf) -> PolyJson {
        PolyJson { n, q: f.desc(), coeffs: self.0.iter().map(|&c| f.coeffs(c)).collect() }
    }
}

/// Descending human form, e.g. `3x^2+x+9`.
pub struct PolyDisplay<'a> {
    poly: &'a Poly,
    field: &'a Gf,
    var: &'static str,
}

impl fmt::Display for PolyDisplay<'_> {
    fn fmt(&self, out: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.poly.is_zero() {
            return write!(out, "0");
        }
        let mut first = true;
        for (i, &c) in self.poly.0.iter().enumerate().rev() {
            if c == Fe::ZERO {
                continue;
            }
            if !first {
                write!(out, "+")?;
            }
            first = false;
            let mut coeff = self.field.fmt_elem(c);
            if coeff.contains('+') {
                coeff = format!("({coeff})");
            }
            match i {
                0 => write!(out, "{coeff}")?,
                _ => {
                    if c != Fe::ONE {
                        write!(out, "{coeff}")?;
                    }
                    write!(out, "{}", self.var)?;
                    if i > 1 {
                        write!(out, "^{i}")?;
                    }
                }
            }
        }
        Ok(())
    }
}

/// Serialized polynomial: each coefficient as its GF(p) coordinate vector.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PolyJson {
    pub n: usize,
    pub q: FieldDesc,
    pub coeffs: Vec<Vec<u32>>,
}

/// Orbits of Z_n under multiplication by q.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CosetPartition {
    pub n: usize,
    pub q: u64,
    pub cosets: Vec<Vec<usize>>,
}

impl CosetPartition {
    /// Index of the coset holding each residue.
    pub fn coset_index(&self) -> Vec<usize> {
        let mut idx = vec![0; self.n];
        for (c, coset) in self.cosets.iter().enumerate() {
            for &i in coset {
                idx[i] = c;
            }
        }
        idx
    }

    /// True if `t` (sorted, deduplicated) is a union of cosets.
    pub fn is_union(&self, t: &[usize]) -> bool {
        let set: BTreeSet<usize> = t.iter().copied().collect();
        if set.iter().any(|&i| i >= self.n) {
            return false;
        }
        let q = (self.q % self.n as u64) as usize;
        set.iter().all(|&i| set.contains(&(i * q % self.n)))
    }
}

pub fn cyclotomic_cosets(n: usize, q: u64) -> Result<CosetPartition, PolyError> {
    if n == 0 || n > MAX_LENGTH {
        return Err(PolyError::InvalidLength(n));
    }
    if arith::gcd(n as u64, q) != 1 {
        return Err(PolyError::NotCoprime { n, q });
    }
    let qn = (q % n as u64) as usize;
    let mut seen = vec![false; n];
    let mut cosets = Vec::new();
    for start in 0..n {
        if seen[start] {
            continue;
        }
        let mut coset = Vec::new();
        let mut i = start;
        while !seen[i] {
            seen[i] = true;
            coset.push(i);
            i = i * qn % n;
        }
        coset.sort_unstable();
        cosets.push(coset);
    }
    Ok(CosetPartition { n, q, cosets })
}

/// How the primitive n-th root of unity is chosen.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub enum RootChoice {
    /// `g^((Q-1)/n)` for the designated generator `g` of the extension.
    #[default]
    Default,
    /// The `k`-th power of the default root; `k` must be a unit mod n.
    Power(u64),
    /// An explicit extension element of order exactly n.
    Element(ExtElem),
}

/// `prod_{i in coset} (x - omega^i)` over GF(q).
pub fn minimal_polynomial(coset: &[usize], omega: &ExtElem, ext: &ExtField) -> Result<Poly, PolyError> {
    let mut acc = vec![ext.one()];
    for &i in coset {
        let root = ext.pow(omega, i as u64);
        acc = upoly::mul(ext, &acc, &[ext.neg(&root), ext.one()]);
    }
    let coeffs = acc.iter().map(|c| ext.to_base(c)).collect::<Option<Vec<Fe>>>();
    coeffs.map(Poly::new).ok_or(PolyError::CoefficientNotInBaseField)
}

/// Everything needed to work in GF(q)[x]/(x^n - 1) with a fixed root of unity.
#[derive(Clone, Debug)]
pub struct CyclicAmbient {
    n: usize,
    field: Arc<Gf>,
    ext: ExtField,
    omega: ExtElem,
    cosets: CosetPartition,
    coset_of: Vec<usize>,
    factors: Vec<Poly>,
    primitive_idempotents: Vec<Poly>,
}

impl CyclicAmbient {
    pub fn new(n: usize, field: Arc<Gf>) -> Result<CyclicAmbient, PolyError> {
        Self::with_root(n, field, RootChoice::Default)
    }

    pub fn with_root(n: usize, field: Arc<Gf>, root: RootChoice) -> Result<CyclicAmbient, PolyError> {
        let q = field.q() as u64;
        let cosets = cyclotomic_cosets(n, q)?;
        let t = if n == 1 { 1 } else { arith::mult_order(q, n as u64).expect("coprime") as u32 };
        let ext = build_extension(&field, t)?;
        let base_root = ext.nth_root_of_unity(n as u64)?;
        let omega = match root {
            RootChoice::Default => base_root,
            RootChoice::Power(k) => {
                if arith::gcd(k, n as u64) != 1 {
                    return Err(PolyError::NotUnit { a: k as i64, n });
                }
                ext.pow(&base_root, k)
            }
            RootChoice::Element(e) => {
                if e.0.len() != t as usize || ext.elem_order(&e) != Some(n as u64) {
                    return Err(PolyError::InvalidRoot(n));
                }
                e
            }
        };
        let factors = cosets
            .cosets
            .iter()
            .map(|c| minimal_polynomial(c, &omega, &ext))
            .collect::<Result<Vec<_>, _>>()?;
        let xn1 = Poly::xn_minus_one(n, &field);
        let f = field.as_ref();
        // theta_C = N * (N^-1 mod M_C) with N = (x^n - 1)/M_C
        let primitive_idempotents = factors
            .iter()
            .map(|m| {
                let (cofactor, r) = xn1.divrem(m, f);
                debug_assert!(r.is_zero());
                let (_, s, _) = upoly::xgcd(f, cofactor.coeffs(), m.coeffs());
                cofactor.mul(&Poly::new(s), f).rem(&xn1, f)
            })
            .collect();
        let coset_of = cosets.coset_index();
        Ok(CyclicAmbient { n, field, ext, omega, cosets, coset_of, factors, primitive_idempotents })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn field(&self) -> &Arc<Gf> {
        &self.field
    }

    pub fn extension(&self) -> &ExtField {
        &self.ext
    }

    pub fn omega(&self) -> &ExtElem {
        &self.omega
    }

    pub fn cosets(&self) -> &CosetPartition {
        &self.cosets
    }

    /// Index of the coset containing `i`.
    pub fn coset_of(&self, i: usize) -> usize {
        self.coset_of[i % self.n]
    }

    /// Minimal polynomials, one per coset in coset order.
    pub fn factors(&self) -> &[Poly] {
        &self.factors
    }

    /// `theta_C`: 1 at the roots indexed by coset C, 0 at all others.
    pub fn primitive_idempotents(&self) -> &[Poly] {
        &self.primitive_idempotents
    }

    pub fn xn_minus_one(&self) -> Poly {
        Poly::xn_minus_one(self.n, &self.field)
    }

    /// Checks `t` against Z_n and coset closure; returns it sorted and deduplicated.
    pub fn normalize_set(&self, t: &[usize]) -> Result<Vec<usize>, PolyError> {
        let set: BTreeSet<usize> = t.iter().copied().collect();
        let v: Vec<usize> = set.into_iter().collect();
        if !self.cosets.is_union(&v) {
            return Err(PolyError::NotCosetClosed(v, self.n));
        }
        Ok(v)
    }

    /// Indices of the cosets making up the closed set `t`.
    fn coset_ids(&self, t: &[usize]) -> BTreeSet<usize> {
        t.iter().map(|&i| self.coset_of[i]).collect()
    }

    /// The idempotent vanishing exactly at `omega^i`, `i` in `t`.
    pub fn idempotent(&self, t: &[usize]) -> Result<Poly, PolyError> {
        let t = self.normalize_set(t)?;
        let inside = self.coset_ids(&t);
        let f = self.field.as_ref();
        Ok((0..self.cosets.cosets.len())
            .filter(|c| !inside.contains(c))
            .fold(Poly::zero(), |acc, c| acc.add(&self.primitive_idempotents[c], f)))
    }

    /// `prod_{C in t} M_C`.
    pub fn generator_poly(&self, t: &[usize]) -> Result<Poly, PolyError> {
        let t = self.normalize_set(t)?;
        let f = self.field.as_ref();
        Ok(self.coset_ids(&t).into_iter().fold(Poly::one(), |acc, c| acc.mul(&self.factors[c], f)))
    }

    /// `p(omega^i)` in the extension field.
    pub fn evaluate(&self, p: &Poly, i: usize) -> ExtElem {
        let x = self.ext.pow(&self.omega, i as u64);
        let ext = &self.ext;
        p.coeffs().iter().rev().fold(ext.zero(), |acc, &c| ext.add(&ext.mul(&acc, &x), &ext.embed(c)))
    }

    /// The exponents `i` with `p(omega^i) = 0`.
    pub fn zero_set(&self, p: &Poly) -> Vec<usize> {
        let zero = self.ext.zero();
        (0..self.n).filter(|&i| self.evaluate(p, i) == zero).collect()
    }

    /// `(1/n)(1 + x + ... + x^{n-1})`.
    pub fn j_bar(&self) -> Poly {
        let f = self.field.as_ref();
        let inv_n = f.inv(f.from_int(self.n as i64)).expect("n is a unit in GF(q)");
        Poly::new(vec![inv_n; self.n])
    }

    pub fn reduce(&self, p: &Poly) -> Poly {
        p.rem(&self.xn_minus_one(), &self.field)
    }

    /// Product in GF(q)[x]/(x^n - 1), computed as a cyclic convolution.
    pub fn mul_mod(&self, a: &Poly, b: &Poly) -> Poly {
        let f = self.field.as_ref();
        let n = self.n;
        let mut out = vec![Fe::ZERO; n];
        for (i, &x) in a.coeffs().iter().enumerate() {
            if x == Fe::ZERO {
                continue;
            }
            for (j, &y) in b.coeffs().iter().enumerate() {
                let k = (i + j) % n;
                out[k] = f.add(out[k], f.mul(x, y));
            }
        }
        Poly::new(out)
    }

    pub fn add(&self, a: &Poly, b: &Poly) -> Poly {
        a.add(b, &self.field)
    }

    pub fn sub(&self, a: &Poly, b: &Poly) -> Poly {
        a.sub(b, &self.field)
    }

    /// `1 - e`.
    pub fn complement(&self, e: &Poly) -> Poly {
        Poly::one().sub(e, &self.field)
    }

    pub fn unit(&self, a: i64) -> Result<usize, PolyError> {
        let r = a.rem_euclid(self.n as i64) as usize;
        if arith::gcd(r as u64, self.n as u64) != 1 {
            return Err(PolyError::NotUnit { a, n: self.n });
        }
        Ok(r)
    }

    /// `mu_a`: sends the coefficient of `x^i` to `x^{ai mod n}`.
    pub fn multiplier_apply(&self, a: i64, p: &Poly) -> Result<Poly, PolyError> {
        let a = self.unit(a)?;
        let mut out = vec![Fe::ZERO; self.n];
        for (i, &c) in self.reduce(p).coeffs().iter().enumerate() {
            out[i * a % self.n] = c;
        }
        Ok(Poly::new(out))
    }

    /// `mu_a` on an exponent set.
    pub fn multiplier_set(&self, a: i64, t: &[usize]) -> Result<Vec<usize>, PolyError> {
        let a = self.unit(a)?;
        let mut v: Vec<usize> = t.iter().map(|&i| i * a % self.n).collect();
        v.sort_unstable();
        v.dedup();
        Ok(v)
    }

    pub fn complement_set(&self, t: &[usize]) -> Vec<usize> {
        let set: BTreeSet<usize> = t.iter().copied().collect();
        (0..self.n).filter(|i| !set.contains(i)).collect()
    }

    pub fn fmt_poly(&self, p: &Poly) -> String {
        p.display(&self.field).to_string()
    }
}

/// One `(coset, minimal polynomial)` pair per coset; the product is x^n - 1.
pub fn factor_xn1(n: usize, field: &Arc<Gf>) -> Result<Vec<(Vec<usize>, Poly)>, PolyError> {
    let amb = CyclicAmbient::new(n, field.clone())?;
    Ok(amb.cosets.cosets.iter().cloned().zip(amb.factors.iter().cloned()).collect())
}

pub fn idempotent_from_defining_set(amb: &CyclicAmbient, t: &[usize]) -> Result<Poly, PolyError> {
    amb.idempotent(t)
}

pub fn multiplier_apply(amb: &CyclicAmbient, a: i64, p: &Poly) -> Result<Poly, PolyError> {
    amb.multiplier_apply(a, p)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::gf::build_field;

    fn gf(q: u64) -> Arc<Gf> {
        Gf::from_order(q).unwrap()
    }

    #[test]
    fn cosets_match_direct_iteration() {
        let c = cyclotomic_cosets(13, 3).unwrap();
        assert_eq!(c.cosets, vec![vec![0], vec![1, 3, 9], vec![2, 5, 6], vec![4, 10, 12], vec![7, 8, 11]]);
        let c = cyclotomic_cosets(3, 13).unwrap();
        assert_eq!(c.cosets, vec![vec![0], vec![1], vec![2]]);
        let c = cyclotomic_cosets(11, 5).unwrap();
        assert_eq!(c.cosets, vec![vec![0], vec![1, 3, 4, 5, 9], vec![2, 6, 7, 8, 10]]);
        assert_eq!(cyclotomic_cosets(6, 3).unwrap_err(), PolyError::NotCoprime { n: 6, q: 3 });
    }

    #[test]
    fn cosets_partition_and_close() {
        for (n, q) in [(13, 3), (17, 4), (21, 2), (60, 7), (1, 5), (45, 4)] {
            let c = cyclotomic_cosets(n, q).unwrap();
            let mut all: Vec<usize> = c.cosets.iter().flatten().copied().collect();
            all.sort_unstable();
            assert_eq!(all, (0..n).collect::<Vec<_>>());
            for coset in &c.cosets {
                assert!(c.is_union(coset));
            }
        }
    }

    #[test]
    fn example3_idempotents_under_root_override() {
        let f = build_field(13, 1, None).unwrap();
        let amb = CyclicAmbient::with_root(3, f.clone(), RootChoice::Power(2)).unwrap();
        assert_eq!(amb.extension().to_base(amb.omega()), Some(Fe(9)));
        let e1 = amb.idempotent(&[0, 2]).unwrap();
        assert_eq!(amb.fmt_poly(&e1), "3x^2+x+9");
        let e2 = amb.multiplier_apply(2, &e1).unwrap();
        assert_eq!(amb.fmt_poly(&e2), "x^2+3x+9");
        assert_eq!(amb.factors()[1], Poly::from_ints(&f, &[-9, 1]));
    }

    #[test]
    fn trivial_idempotents() {
        let amb = CyclicAmbient::new(7, gf(2)).unwrap();
        assert_eq!(amb.idempotent(&[]).unwrap(), Poly::one());
        assert_eq!(amb.idempotent(&(0..7).collect::<Vec<_>>()).unwrap(), Poly::zero());
        assert_eq!(amb.idempotent(&[1, 2, 3, 4, 5, 6]).unwrap(), amb.j_bar());
        assert!(matches!(amb.idempotent(&[1]), Err(PolyError::NotCosetClosed(..))));
    }

    #[test]
    fn minimal_polynomials_multiply_to_xn1() {
        for (n, q) in [(13, 3), (3, 13), (1, 7), (17, 4), (11, 5), (9, 7), (16, 7), (11, 32)] {
            let f = gf(q);
            let amb = CyclicAmbient::new(n, f.clone()).unwrap();
            let prod = amb.factors().iter().fold(Poly::one(), |acc, m| acc.mul(m, &f));
            assert_eq!(prod, amb.xn_minus_one(), "n={n} q={q}");
            let degs: Vec<usize> = amb.factors().iter().map(|m| m.degree().unwrap()).collect();
            let sizes: Vec<usize> = amb.cosets().cosets.iter().map(|c| c.len()).collect();
            assert_eq!(degs, sizes);
            for (c, m) in amb.cosets().cosets.iter().zip(amb.factors()) {
                assert_eq!(&amb.zero_set(m), c);
            }
        }
    }

    #[test]
    fn non_closed_set_leaves_base_field() {
        let f = gf(3);
        let amb = CyclicAmbient::new(13, f).unwrap();
        assert_eq!(
            minimal_polynomial(&[1], amb.omega(), amb.extension()).unwrap_err(),
            PolyError::CoefficientNotInBaseField
        );
    }

    #[test]
    fn idempotent_evaluation_pattern() {
        let f = gf(3);
        let amb = CyclicAmbient::new(13, f).unwrap();
        let t = [0, 1, 3, 9];
        let e = amb.idempotent(&t).unwrap();
        assert_eq!(amb.mul_mod(&e, &e), e);
        assert_eq!(amb.zero_set(&e), t.to_vec());
        let one = amb.extension().one();
        for i in amb.complement_set(&t) {
            assert_eq!(amb.evaluate(&e, i), one);
        }
    }

    #[test]
    fn multiplier_inverse_roundtrip() {
        let f = gf(5);
        let amb = CyclicAmbient::new(11, f.clone()).unwrap();
        let p = Poly::from_ints(&f, &[1, 2, 0, 4, 3, 0, 0, 1]);
        let there = amb.multiplier_apply(3, &p).unwrap();
        assert_eq!(amb.multiplier_apply(4, &there).unwrap(), p); // 3 * 4 = 1 mod 11
        assert_eq!(amb.multiplier_apply(1, &p).unwrap(), p);
        assert!(amb.multiplier_apply(0, &p).is_err());
    }

    #[test]
    fn prime_power_field_display() {
        let f = gf(4);
        let p = Poly::new(vec![Fe(3), Fe(2), Fe(1)]);
        assert_eq!(p.display(&f).to_string(), "x^2+ax+(a+1)");
    }
}
