//! Finite fields.
//!
//! [`Gf`] is a table-driven GF(p^s) holding the alphabet of every code in this
//! crate. [`ExtField`] is an extension GF(q^t) = GF(q)[y]/M(y) built on top of a
//! [`Gf`]; it only exists to hold n-th roots of unity, so it favours generality
//! over speed.
//!
//! Element order is deterministic everywhere: a GF(p^s) element with
//! coefficient vector `(c_0, .., c_{s-1})` (ascending powers of the class of `x`)
//! has index `c_0 + c_1 p + .. + c_{s-1} p^{s-1}`, so the prime subfield is
//! `0..p`. Extension elements are ordered the same way with base-q digits.

use std::fmt;
use std::sync::Arc;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::{arith, upoly};

/// Largest prime accepted for GF(p).
pub const MAX_PRIME: u64 = 65521;
/// Largest order accepted for a proper prime-power field GF(p^s), s > 1.
pub const MAX_PRIME_POWER: u64 = 1024;
/// Extension fields must satisfy q^t <= this bound.
pub const MAX_EXTENSION_ORDER: u64 = 1 << 62;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum GfError {
    #[error("{0} is not prime")]
    NotPrime(u64),
    #[error("{0} is not a prime power")]
    NotPrimePower(u64),
    #[error("extension degree must be at least 1")]
    InvalidDegree,
    #[error("modulus must be monic of degree {expected}")]
    InvalidModulus { expected: u32 },
    #[error("modulus is reducible")]
    ReducibleModulus,
    #[error("field of order {order} exceeds the supported limit {limit}")]
    FieldTooLarge { order: u128, limit: u64 },
    #[error("{n} does not divide the multiplicative order {order}")]
    OrderNotDivisible { n: u64, order: u64 },
    #[error("element index {0} out of range")]
    ElementOutOfRange(u64),
}

/// The trait behind generic polynomial arithmetic.
pub trait Field {
    type Elem: Clone + PartialEq + Eq + fmt::Debug;

    fn zero(&self) -> Self::Elem;
    fn one(&self) -> Self::Elem;
    fn add(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn sub(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn neg(&self, a: &Self::Elem) -> Self::Elem;
    fn mul(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn inv(&self, a: &Self::Elem) -> Option<Self::Elem>;
    /// Number of elements.
    fn size(&self) -> u64;

    fn is_zero(&self, a: &Self::Elem) -> bool {
        *a == self.zero()
    }

    fn pow(&self, a: &Self::Elem, mut e: u64) -> Self::Elem {
        let mut acc = self.one();
        let mut base = a.clone();
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul(&acc, &base);
            }
            e >>= 1;
            if e > 0 {
                base = self.mul(&base, &base);
            }
        }
        acc
    }
}

/// Element of a [`Gf`], by index.
#[derive(Copy, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Debug, Default, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Fe(pub u32);

impl Fe {
    pub const ZERO: Fe = Fe(0);
    pub const ONE: Fe = Fe(1);

    pub fn index(self) -> usize {
        self.0 as usize
    }
}

/// Serializable field description: `{p, s, modulus}` with the modulus as an
/// ascending coefficient list over GF(p).
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct FieldDesc {
    pub p: u64,
    pub s: u32,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub modulus: Option<Vec<u32>>,
}

/// GF(p^s) with a verified irreducible modulus and a designated primitive element.
pub struct Gf {
    p: u32,
    s: u32,
    q: u32,
    modulus: Vec<u32>,
    generator: Fe,
    exp: Vec<u32>,
    log: Vec<u32>,
    add_tab: Option<Vec<u16>>,
    neg_tab: Vec<u32>,
}

impl fmt::Debug for Gf {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "GF({}", self.p)?;
        if self.s > 1 {
            write!(f, "^{}", self.s)?;
        }
        write!(f, ")")
    }
}

impl PartialEq for Gf {
    fn eq(&self, other: &Self) -> bool {
        self.p == other.p && self.s == other.s && self.modulus == other.modulus
    }
}

impl Eq for Gf {}

/// Builds GF(p^s). Without an explicit modulus the first monic irreducible of
/// degree `s` in ascending index order of its lower coefficients is used.
pub fn build_field(p: u64, s: u32, modulus: Option<Vec<u32>>) -> Result<Arc<Gf>, GfError> {
    Gf::new(p, s, modulus).map(Arc::new)
}

impl Gf {
    pub fn new(p: u64, s: u32, modulus: Option<Vec<u32>>) -> Result<Gf, GfError> {
        if !arith::is_prime(p) {
            return Err(GfError::NotPrime(p));
        }
        if s == 0 {
            return Err(GfError::InvalidDegree);
        }
        if p > MAX_PRIME {
            return Err(GfError::FieldTooLarge { order: p as u128, limit: MAX_PRIME });
        }
        let order = (p as u128).pow(s);
        if s > 1 && order > MAX_PRIME_POWER as u128 {
            return Err(GfError::FieldTooLarge { order, limit: MAX_PRIME_POWER });
        }
        if let Some(m) = &modulus {
            if m.len() != s as usize + 1 || *m.last().unwrap() != 1 || m.iter().any(|&c| c as u64 >= p) {
                return Err(GfError::InvalidModulus { expected: s });
            }
        }
        if s == 1 {
            return Ok(Self::prime_field(p as u32, modulus.unwrap_or(vec![0, 1])));
        }
        let prime = Arc::new(Self::prime_field(p as u32, vec![0, 1]));
        let modulus: Vec<Fe> = match modulus {
            Some(m) => m.into_iter().map(Fe).collect(),
            None => first_irreducible(&prime, s),
        };
        let ext = ExtField::with_modulus(prime, modulus)?;
        Ok(Self::tabulate(&ext))
    }

    fn prime_field(p: u32, modulus: Vec<u32>) -> Gf {
        let q = p;
        let order = (q - 1) as u64;
        let primes = arith::prime_divisors(order);
        let generator = (1..q as u64)
            .find(|&g| primes.iter().all(|&r| arith::pow_mod(g, order / r, p as u64) != 1))
            .expect("a prime field has a primitive root") as u32;
        let mut exp = Vec::with_capacity(order as usize);
        let mut log = vec![0u32; q as usize];
        let mut x = 1u64;
        for i in 0..order {
            exp.push(x as u32);
            log[x as usize] = i as u32;
            x = x * generator as u64 % p as u64;
        }
        let neg_tab = (0..q).map(|a| (p - a) % p).collect();
        Gf { p, s: 1, q, modulus, generator: Fe(generator), exp, log, add_tab: None, neg_tab }
    }

    fn tabulate(ext: &ExtField) -> Gf {
        let p = ext.base.p;
        let s = ext.degree;
        let q = p.pow(s);
        let index_of = |e: &ExtElem| ext.index_of(e) as u32;
        let generator = Fe(index_of(&ext.generator));
        let order = q - 1;
        let mut exp = Vec::with_capacity(order as usize);
        let mut log = vec![0u32; q as usize];
        let mut x = ext.one();
        for i in 0..order {
            let ix = index_of(&x);
            exp.push(ix);
            log[ix as usize] = i;
            x = ext.mul(&x, &ext.generator);
        }
        let digits = |mut a: u32| -> Vec<u32> {
            (0..s)
                .map(|_| {
                    let d = a % p;
                    a /= p;
                    d
                })
                .collect()
        };
        let undigits = |d: &[u32]| d.iter().rev().fold(0u32, |acc, &c| acc * p + c);
        let mut add_tab = vec![0u16; (q * q) as usize];
        for a in 0..q {
            let da = digits(a);
            for b in 0..q {
                let db = digits(b);
                let sum: Vec<u32> = da.iter().zip(&db).map(|(x, y)| (x + y) % p).collect();
                add_tab[(a * q + b) as usize] = undigits(&sum) as u16;
            }
        }
        let neg_tab = (0..q)
            .map(|a| undigits(&digits(a).iter().map(|&c| (p - c) % p).collect::<Vec<_>>()))
            .collect();
        Gf {
            p,
            s,
            q,
            modulus: ext.modulus.iter().map(|c| c.0).collect(),
            generator,
            exp,
            log,
            add_tab: Some(add_tab),
            neg_tab,
        }
    }

    /// GF(q) for a prime power `q`, with the default modulus.
    pub fn from_order(q: u64) -> Result<Arc<Gf>, GfError> {
        let (p, s) = arith::prime_power(q).ok_or(GfError::NotPrimePower(q))?;
        build_field(p, s, None)
    }

    pub fn from_desc(desc: &FieldDesc) -> Result<Arc<Gf>, GfError> {
        build_field(desc.p, desc.s, desc.modulus.clone())
    }

    pub fn desc(&self) -> FieldDesc {
        FieldDesc { p: self.p as u64, s: self.s, modulus: Some(self.modulus.clone()) }
    }

    pub fn p(&self) -> u32 {
        self.p
    }

    pub fn s(&self) -> u32 {
        self.s
    }

    pub fn q(&self) -> u32 {
        self.q
    }

    pub fn modulus(&self) -> &[u32] {
        &self.modulus
    }

    pub fn generator(&self) -> Fe {
        self.generator
    }

    /// All elements in index order.
    pub fn elements(&self) -> impl Iterator<Item = Fe> {
        (0..self.q).map(Fe)
    }

    pub fn elem(&self, index: u64) -> Result<Fe, GfError> {
        if index < self.q as u64 {
            Ok(Fe(index as u32))
        } else {
            Err(GfError::ElementOutOfRange(index))
        }
    }

    /// Image of an integer in the prime subfield.
    pub fn from_int(&self, v: i64) -> Fe {
        Fe(v.rem_euclid(self.p as i64) as u32)
    }

    pub fn coeffs(&self, a: Fe) -> Vec<u32> {
        let mut x = a.0;
        (0..self.s)
            .map(|_| {
                let d = x % self.p;
                x /= self.p;
                d
            })
            .collect()
    }

    pub fn from_coeffs(&self, c: &[u32]) -> Result<Fe, GfError> {
        if c.len() > self.s as usize || c.iter().any(|&d| d >= self.p) {
            return Err(GfError::ElementOutOfRange(c.iter().map(|&d| d as u64).max().unwrap_or(0)));
        }
        Ok(Fe(c.iter().rev().fold(0u32, |acc, &d| acc * self.p + d)))
    }

    #[inline]
    pub fn add(&self, a: Fe, b: Fe) -> Fe {
        match &self.add_tab {
            Some(t) => Fe(t[(a.0 * self.q + b.0) as usize] as u32),
            None => {
                let s = a.0 + b.0;
                Fe(if s >= self.p { s - self.p } else { s })
            }
        }
    }

    #[inline]
    pub fn neg(&self, a: Fe) -> Fe {
        Fe(self.neg_tab[a.index()])
    }

    #[inline]
    pub fn sub(&self, a: Fe, b: Fe) -> Fe {
        self.add(a, self.neg(b))
    }

    #[inline]
    pub fn mul(&self, a: Fe, b: Fe) -> Fe {
        if a.0 == 0 || b.0 == 0 {
            return Fe::ZERO;
        }
        if self.s == 1 {
            return Fe(((a.0 as u64 * b.0 as u64) % self.p as u64) as u32);
        }
        let l = self.log[a.index()] + self.log[b.index()];
        let ord = self.q - 1;
        Fe(self.exp[(if l >= ord { l - ord } else { l }) as usize])
    }

    pub fn inv(&self, a: Fe) -> Option<Fe> {
        if a.0 == 0 {
            return None;
        }
        let ord = self.q - 1;
        Some(Fe(self.exp[((ord - self.log[a.index()]) % ord) as usize]))
    }

    pub fn div(&self, a: Fe, b: Fe) -> Option<Fe> {
        self.inv(b).map(|bi| self.mul(a, bi))
    }

    pub fn pow(&self, a: Fe, e: u64) -> Fe {
        if a.0 == 0 {
            return if e == 0 { Fe::ONE } else { Fe::ZERO };
        }
        let ord = (self.q - 1) as u64;
        Fe(self.exp[((self.log[a.index()] as u64 * (e % ord)) % ord) as usize])
    }

    /// Multiplicative order of a nonzero element.
    pub fn order(&self, a: Fe) -> Option<u64> {
        if a.0 == 0 {
            return None;
        }
        let ord = (self.q - 1) as u64;
        Some(ord / arith::gcd(self.log[a.index()] as u64, ord))
    }

    /// Human form: integers for prime fields, a polynomial in `a` otherwise.
    pub fn fmt_elem(&self, x: Fe) -> String {
        if self.s == 1 {
            return x.0.to_string();
        }
        let c = self.coeffs(x);
        let mut terms = Vec::new();
        for (i, &d) in c.iter().enumerate().rev() {
            if d == 0 {
                continue;
            }
            let var = match i {
                0 => String::new(),
                1 => "a".to_string(),
                _ => format!("a^{i}"),
            };
            terms.push(match (d, i) {
                (_, 0) => d.to_string(),
                (1, _) => var,
                _ => format!("{d}{var}"),
            });
        }
        if terms.is_empty() {
            "0".into()
        } else {
            terms.join("+")
        }
    }
}

impl Field for Gf {
    type Elem = Fe;

    fn zero(&self) -> Fe {
        Fe::ZERO
    }
    fn one(&self) -> Fe {
        Fe::ONE
    }
    fn add(&self, a: &Fe, b: &Fe) -> Fe {
        Gf::add(self, *a, *b)
    }
    fn sub(&self, a: &Fe, b: &Fe) -> Fe {
        Gf::sub(self, *a, *b)
    }
    fn neg(&self, a: &Fe) -> Fe {
        Gf::neg(self, *a)
    }
    fn mul(&self, a: &Fe, b: &Fe) -> Fe {
        Gf::mul(self, *a, *b)
    }
    fn inv(&self, a: &Fe) -> Option<Fe> {
        Gf::inv(self, *a)
    }
    fn size(&self) -> u64 {
        self.q as u64
    }
    fn pow(&self, a: &Fe, e: u64) -> Fe {
        Gf::pow(self, *a, e)
    }
}

/// Element of an [`ExtField`]: `t` coefficients over the base field.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct ExtElem(pub Vec<Fe>);

/// GF(q^t) as GF(q)[y]/M(y) with monic irreducible M of degree `t`.
#[derive(Clone)]
pub struct ExtField {
    base: Arc<Gf>,
    degree: u32,
    modulus: Vec<Fe>,
    order: u64,
    generator: ExtElem,
}

impl fmt::Debug for ExtField {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}[y]/{:?}", self.base, self.modulus)
    }
}

fn first_irreducible(base: &Gf, t: u32) -> Vec<Fe> {
    let q = base.q() as u64;
    (0..)
        .map(|idx: u64| {
            let mut m: Vec<Fe> = Vec::with_capacity(t as usize + 1);
            let mut x = idx;
            for _ in 0..t {
                m.push(Fe((x % q) as u32));
                x /= q;
            }
            m.push(Fe::ONE);
            m
        })
        .find(|m| upoly::is_irreducible(base, m))
        .expect("irreducible polynomials exist in every degree")
}

/// GF(q^t) over `base`, with the base field embedded as constants.
pub fn build_extension(base: &Arc<Gf>, t: u32) -> Result<ExtField, GfError> {
    if t == 0 {
        return Err(GfError::InvalidDegree);
    }
    let order = (base.q() as u128).checked_pow(t).unwrap_or(u128::MAX);
    if order > MAX_EXTENSION_ORDER as u128 {
        return Err(GfError::FieldTooLarge { order, limit: MAX_EXTENSION_ORDER });
    }
    let modulus = first_irreducible(base, t);
    ExtField::with_modulus(base.clone(), modulus)
}

impl ExtField {
    pub fn with_modulus(base: Arc<Gf>, modulus: Vec<Fe>) -> Result<ExtField, GfError> {
        let t = modulus.len().saturating_sub(1) as u32;
        if t == 0 || *modulus.last().unwrap() != Fe::ONE {
            return Err(GfError::InvalidModulus { expected: t.max(1) });
        }
        let order = (base.q() as u128).checked_pow(t).unwrap_or(u128::MAX);
        if order > MAX_EXTENSION_ORDER as u128 {
            return Err(GfError::FieldTooLarge { order, limit: MAX_EXTENSION_ORDER });
        }
        if !upoly::is_irreducible(base.as_ref(), &modulus) {
            return Err(GfError::ReducibleModulus);
        }
        let order = order as u64;
        let mut ext = ExtField { base, degree: t, modulus, order, generator: ExtElem(Vec::new()) };
        let primes = arith::prime_divisors(order - 1);
        let generator = (1..order)
            .map(|i| ext.elem_at(i))
            .find(|g| primes.iter().all(|&r| ext.pow(g, (order - 1) / r) != ext.one()))
            .expect("the multiplicative group is cyclic");
        ext.generator = generator;
        Ok(ext)
    }

    pub fn base(&self) -> &Arc<Gf> {
        &self.base
    }

    pub fn degree(&self) -> u32 {
        self.degree
    }

    pub fn modulus(&self) -> &[Fe] {
        &self.modulus
    }

    pub fn order(&self) -> u64 {
        self.order
    }

    pub fn generator(&self) -> &ExtElem {
        &self.generator
    }

    /// Element with the given index in the deterministic order.
    pub fn elem_at(&self, mut idx: u64) -> ExtElem {
        let q = self.base.q() as u64;
        ExtElem(
            (0..self.degree)
                .map(|_| {
                    let d = idx % q;
                    idx /= q;
                    Fe(d as u32)
                })
                .collect(),
        )
    }

    pub fn index_of(&self, e: &ExtElem) -> u64 {
        let q = self.base.q() as u64;
        e.0.iter().rev().fold(0u64, |acc, c| acc * q + c.0 as u64)
    }

    pub fn embed(&self, a: Fe) -> ExtElem {
        let mut v = vec![Fe::ZERO; self.degree as usize];
        v[0] = a;
        ExtElem(v)
    }

    /// Image of every base element, indexed by base element index.
    pub fn embedding_table(&self) -> Vec<ExtElem> {
        self.base.elements().map(|a| self.embed(a)).collect()
    }

    /// The base element equal to `e`, if `e` lies in the embedded base field.
    pub fn to_base(&self, e: &ExtElem) -> Option<Fe> {
        if e.0[1..].iter().all(|c| *c == Fe::ZERO) {
            Some(e.0[0])
        } else {
            None
        }
    }

    fn elem_from_poly(&self, mut v: Vec<Fe>) -> ExtElem {
        v.resize(self.degree as usize, Fe::ZERO);
        ExtElem(v)
    }

    pub fn elem_order(&self, a: &ExtElem) -> Option<u64> {
        if self.is_zero(a) {
            return None;
        }
        let mut ord = self.order - 1;
        for (r, _) in arith::factor(ord) {
            while ord.is_multiple_of(r) && self.pow(a, ord / r) == self.one() {
                ord /= r;
            }
        }
        Some(ord)
    }

    /// `g^((q^t - 1)/n)` for the designated generator `g`.
    pub fn nth_root_of_unity(&self, n: u64) -> Result<ExtElem, GfError> {
        let ord = self.order - 1;
        if n == 0 || !ord.is_multiple_of(n) {
            return Err(GfError::OrderNotDivisible { n, order: ord });
        }
        Ok(self.pow(&self.generator, ord / n))
    }

    pub fn fmt_elem(&self, e: &ExtElem) -> String {
        let parts: Vec<String> = e.0.iter().map(|c| self.base.fmt_elem(*c)).collect();
        format!("[{}]", parts.join(","))
    }
}

/// Free-function form of [`ExtField::nth_root_of_unity`].
pub fn nth_root_of_unity(field: &ExtField, n: u64) -> Result<ExtElem, GfError> {
    field.nth_root_of_unity(n)
}

impl Field for ExtField {
    type Elem = ExtElem;

    fn zero(&self) -> ExtElem {
        ExtElem(vec![Fe::ZERO; self.degree as usize])
    }
    fn one(&self) -> ExtElem {
        self.embed(Fe::ONE)
    }
    fn add(&self, a: &ExtElem, b: &ExtElem) -> ExtElem {
        ExtElem(a.0.iter().zip(&b.0).map(|(x, y)| self.base.add(*x, *y)).collect())
    }
    fn sub(&self, a: &ExtElem, b: &ExtElem) -> ExtElem {
        ExtElem(a.0.iter().zip(&b.0).map(|(x, y)| self.base.sub(*x, *y)).collect())
    }
    fn neg(&self, a: &ExtElem) -> ExtElem {
        ExtElem(a.0.iter().map(|x| self.base.neg(*x)).collect())
    }
    fn mul(&self, a: &ExtElem, b: &ExtElem) -> ExtElem {
        let b0 = self.base.as_ref();
        let prod = upoly::mul(b0, &upoly::trim(b0, a.0.clone()), &upoly::trim(b0, b.0.clone()));
        self.elem_from_poly(upoly::rem(b0, &prod, &self.modulus))
    }
    fn inv(&self, a: &ExtElem) -> Option<ExtElem> {
        if self.is_zero(a) {
            None
        } else {
            Some(self.pow(a, self.order - 2))
        }
    }
    fn size(&self) -> u64 {
        self.order
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn brute_order(f: &Gf, a: Fe) -> u64 {
        let mut x = a;
        let mut k = 1;
        while x != Fe::ONE {
            x = f.mul(x, a);
            k += 1;
        }
        k
    }

    #[test]
    fn gf13_generator_is_least_primitive_root() {
        let f = build_field(13, 1, None).unwrap();
        assert_eq!(f.generator(), Fe(2));
        // oracle: 2 has order 12 by brute force, and nothing smaller does
        assert_eq!(brute_order(&f, Fe(2)), 12);
        assert_eq!(brute_order(&f, Fe(1)), 1);
    }

    #[test]
    fn gf4_default_modulus() {
        let f = build_field(2, 2, None).unwrap();
        assert_eq!(f.modulus(), &[1, 1, 1]);
        let a = Fe(2); // class of x
        assert_eq!(f.mul(a, a), f.add(a, Fe::ONE));
        let g = build_field(2, 2, Some(vec![1, 1, 1])).unwrap();
        assert_eq!(*f, *g);
    }

    #[test]
    fn construction_errors() {
        assert_eq!(build_field(4, 1, None).unwrap_err(), GfError::NotPrime(4));
        assert_eq!(build_field(2, 2, Some(vec![1, 0, 1])).unwrap_err(), GfError::ReducibleModulus);
        assert!(matches!(build_field(3, 2, Some(vec![1, 1])), Err(GfError::InvalidModulus { .. })));
        assert!(matches!(build_field(2, 11, None), Err(GfError::FieldTooLarge { .. })));
    }

    #[test]
    fn field_axioms_exhaustive_small() {
        for (p, s) in [(2, 1), (3, 1), (2, 2), (3, 2), (2, 3), (5, 1)] {
            let f = build_field(p, s, None).unwrap();
            let q = f.q();
            assert_eq!(brute_order(&f, f.generator()), (q - 1) as u64);
            for a in f.elements() {
                assert_eq!(f.add(a, f.neg(a)), Fe::ZERO);
                if a != Fe::ZERO {
                    assert_eq!(f.mul(a, f.inv(a).unwrap()), Fe::ONE);
                }
                for b in f.elements() {
                    assert_eq!(f.add(a, b), f.add(b, a));
                    assert_eq!(f.mul(a, b), f.mul(b, a));
                    // Frobenius
                    let p = f.p() as u64;
                    assert_eq!(f.pow(f.add(a, b), p), f.add(f.pow(a, p), f.pow(b, p)));
                    for c in f.elements() {
                        assert_eq!(f.mul(a, f.add(b, c)), f.add(f.mul(a, b), f.mul(a, c)));
                        assert_eq!(f.add(f.add(a, b), c), f.add(a, f.add(b, c)));
                    }
                }
            }
        }
    }

    #[test]
    fn extensions_embed_base() {
        let f3 = build_field(3, 1, None).unwrap();
        let e = build_extension(&f3, 3).unwrap();
        assert_eq!(e.order(), 27);
        let f13 = build_field(13, 1, None).unwrap();
        let e1 = build_extension(&f13, 1).unwrap();
        assert_eq!(e1.order(), 13);
        assert_eq!(e1.generator(), &e1.embed(Fe(2)));

        let f4 = build_field(2, 2, None).unwrap();
        let e16 = build_extension(&f4, 2).unwrap();
        assert_eq!(e16.order(), 16);
        assert_eq!(e16.elem_order(&e16.embed(Fe(2))), Some(3));
        for ext in [&e, &e1, &e16] {
            let base = ext.base().clone();
            let table = ext.embedding_table();
            assert_eq!(table[0], ext.zero());
            assert_eq!(table[1], ext.one());
            for a in base.elements() {
                for b in base.elements() {
                    assert_eq!(ext.mul(&table[a.index()], &table[b.index()]), table[base.mul(a, b).index()]);
                    assert_eq!(ext.add(&table[a.index()], &table[b.index()]), table[base.add(a, b).index()]);
                }
            }
        }
    }

    #[test]
    fn roots_of_unity() {
        let f13 = build_field(13, 1, None).unwrap();
        let e = build_extension(&f13, 1).unwrap();
        let w = e.nth_root_of_unity(3).unwrap();
        // oracle: elements of order 3 in GF(13) are {3, 9}; 2^4 = 3
        let order3: Vec<u32> = f13.elements().filter(|&a| a != Fe::ZERO && brute_order(&f13, a) == 3).map(|a| a.0).collect();
        assert_eq!(order3, vec![3, 9]);
        assert_eq!(e.to_base(&w), Some(Fe(3)));
        assert_eq!(e.nth_root_of_unity(1).unwrap(), e.one());
        assert_eq!(e.nth_root_of_unity(5).unwrap_err(), GfError::OrderNotDivisible { n: 5, order: 12 });
    }

    #[test]
    fn large_extension_root_has_exact_order() {
        let f3 = build_field(3, 1, None).unwrap();
        // ord_59(3) = 29, so the 59th roots live in GF(3^29)
        let e = build_extension(&f3, 29).unwrap();
        let w = e.nth_root_of_unity(59).unwrap();
        assert_eq!(e.elem_order(&w), Some(59));
    }
}
