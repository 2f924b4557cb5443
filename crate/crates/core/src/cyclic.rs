//! Cyclic codes over GF(q), keyed by their defining sets.

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::gf::Fe;
use crate::linalg::GeneratorMatrix;
use crate::polyring::{CyclicAmbient, Poly, PolyError};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum CyclicError {
    #[error("codes have lengths {0} and {1}")]
    LengthMismatch(usize, usize),
    #[error(transparent)]
    Poly(#[from] PolyError),
}

/// The ideal of GF(q)[x]/(x^n - 1) whose zeros are `omega^i`, `i` in the
/// defining set. Generator and idempotent are derived from the defining set.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct CyclicCode {
    pub n: usize,
    pub q: u32,
    pub defining_set: Vec<usize>,
    pub generator: Poly,
    pub idempotent: Poly,
    pub dimension: usize,
}

impl CyclicCode {
    pub fn is_even_like(&self) -> bool {
        self.defining_set.first() == Some(&0)
    }

    pub fn is_zero(&self) -> bool {
        self.dimension == 0
    }
}

impl CyclicAmbient {
    pub fn code(&self, t: &[usize]) -> Result<CyclicCode, PolyError> {
        let t = self.normalize_set(t)?;
        let generator = self.generator_poly(&t)?;
        let idempotent = self.idempotent(&t)?;
        Ok(CyclicCode {
            n: self.n(),
            q: self.field().q(),
            dimension: self.n() - t.len(),
            defining_set: t,
            generator,
            idempotent,
        })
    }

    fn check(&self, c: &CyclicCode) -> Result<(), CyclicError> {
        if c.n != self.n() {
            return Err(CyclicError::LengthMismatch(self.n(), c.n));
        }
        Ok(())
    }

    fn rebuild(&self, t: Vec<usize>) -> CyclicCode {
        self.code(&t).expect("closed under the cyclic code calculus")
    }

    /// Defining set `Z_n - mu_{-1}(T)`.
    pub fn dual(&self, c: &CyclicCode) -> Result<CyclicCode, CyclicError> {
        self.check(c)?;
        let neg = self.multiplier_set(-1, &c.defining_set)?;
        Ok(self.rebuild(self.complement_set(&neg)))
    }

    /// Defining set `T1 ∪ T2`.
    pub fn intersect(&self, a: &CyclicCode, b: &CyclicCode) -> Result<CyclicCode, CyclicError> {
        self.check(a)?;
        self.check(b)?;
        let mut t: Vec<usize> = a.defining_set.iter().chain(&b.defining_set).copied().collect();
        t.sort_unstable();
        t.dedup();
        Ok(self.rebuild(t))
    }

    /// Defining set `T1 ∩ T2`.
    pub fn sum(&self, a: &CyclicCode, b: &CyclicCode) -> Result<CyclicCode, CyclicError> {
        self.check(a)?;
        self.check(b)?;
        let t = a.defining_set.iter().filter(|i| b.defining_set.contains(i)).copied().collect();
        Ok(self.rebuild(t))
    }

    pub fn intersect_all<'a, I: IntoIterator<Item = &'a CyclicCode>>(&self, codes: I) -> Result<CyclicCode, CyclicError> {
        codes.into_iter().try_fold(self.rebuild(Vec::new()), |acc, c| self.intersect(&acc, c))
    }

    pub fn sum_all<'a, I: IntoIterator<Item = &'a CyclicCode>>(&self, codes: I) -> Result<CyclicCode, CyclicError> {
        let all: Vec<usize> = (0..self.n()).collect();
        codes.into_iter().try_fold(self.rebuild(all), |acc, c| self.sum(&acc, c))
    }

    /// `mu_a(C)`, whose defining set is `mu_{a^-1}(T)`.
    pub fn apply_multiplier(&self, a: i64, c: &CyclicCode) -> Result<CyclicCode, CyclicError> {
        self.check(c)?;
        let a = self.unit(a)?;
        let inv = crate::arith::inv_mod(a as u64, self.n() as u64).expect("unit") as i64;
        let t = self.multiplier_set(inv, &c.defining_set)?;
        Ok(self.rebuild(t))
    }

    /// The whole space GF(q)^n.
    pub fn whole(&self) -> CyclicCode {
        self.rebuild(Vec::new())
    }

    pub fn zero_code(&self) -> CyclicCode {
        self.rebuild((0..self.n()).collect())
    }

    /// Rows `x^i g(x)`, `i < k`.
    pub fn generator_matrix(&self, c: &CyclicCode) -> GeneratorMatrix {
        let n = self.n();
        let g = c.generator.to_vec(n);
        let rows = (0..c.dimension)
            .map(|i| {
                let mut r = vec![Fe::ZERO; n];
                for (j, &x) in g.iter().enumerate().take(n - i) {
                    r[i + j] = x;
                }
                r
            })
            .collect();
        GeneratorMatrix::from_rows(self.field().clone(), n, rows).expect("rows have length n")
    }

    /// Membership of a word of length n.
    pub fn contains(&self, c: &CyclicCode, word: &Poly) -> bool {
        let r = self.reduce(word);
        r.rem(&c.generator, self.field()).is_zero()
    }
}

pub fn code_from_defining_set(amb: &CyclicAmbient, t: &[usize]) -> Result<CyclicCode, PolyError> {
    amb.code(t)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::gf::{build_field, Gf};
    use crate::polyring::RootChoice;
    use std::sync::Arc;

    fn amb(n: usize, q: u64) -> CyclicAmbient {
        CyclicAmbient::new(n, Gf::from_order(q).unwrap()).unwrap()
    }

    #[test]
    fn example3_code() {
        let f = build_field(13, 1, None).unwrap();
        let a = CyclicAmbient::with_root(3, f, RootChoice::Power(2)).unwrap();
        let c = a.code(&[0, 2]).unwrap();
        assert_eq!(c.dimension, 1);
        assert_eq!(a.fmt_poly(&c.idempotent), "3x^2+x+9");
        assert!(c.is_even_like());
        let m = a.apply_multiplier(2, &c).unwrap();
        assert_eq!(m.defining_set, vec![0, 1]);
    }

    #[test]
    fn repetition_and_even_weight() {
        let a = amb(7, 2);
        let rep = a.code(&[1, 2, 3, 4, 5, 6]).unwrap();
        assert_eq!(rep.dimension, 1);
        assert_eq!(rep.idempotent, a.j_bar());
        assert!(!rep.is_even_like());
        let even = a.dual(&rep).unwrap();
        assert_eq!(even.defining_set, vec![0]);
        assert!(even.is_even_like());
        assert_eq!(a.dual(&a.whole()).unwrap(), a.zero_code());
        assert_eq!(a.generator_matrix(&rep).min_distance(100), crate::linalg::Distance::Exact(7));
    }

    #[test]
    fn lattice_identities() {
        let a = amb(13, 3);
        let c1 = a.code(&[1, 3, 9]).unwrap();
        let c2 = a.code(&[0, 1, 3, 9, 2, 5, 6]).unwrap();
        assert_eq!(a.intersect(&c1, &c1).unwrap(), c1);
        assert_eq!(a.sum(&c1, &c1).unwrap(), c1);
        let s = a.sum(&c1, &c2).unwrap();
        let i = a.intersect(&c1, &c2).unwrap();
        assert_eq!(c1.dimension + c2.dimension, s.dimension + i.dimension);
        assert_eq!(a.dual(&a.dual(&c2).unwrap()).unwrap(), c2);
        // idempotent calculus: E1 E2 for the union, E1 + E2 - E1 E2 for the intersection
        let p = a.mul_mod(&c1.idempotent, &c2.idempotent);
        assert_eq!(i.idempotent, p);
        assert_eq!(s.idempotent, a.sub(&a.add(&c1.idempotent, &c2.idempotent), &p));
        let other = amb(11, 5).whole();
        assert!(matches!(a.sum(&c1, &other), Err(CyclicError::LengthMismatch(13, 11))));
    }

    #[test]
    fn generator_and_idempotent_span_same_ideal() {
        let a = amb(17, 4);
        for t in [vec![0], vec![1, 4, 13, 16], vec![0, 3, 5, 6, 7, 10, 11, 12, 14]] {
            let c = a.code(&t).unwrap();
            assert!(a.contains(&c, &c.idempotent));
            // g = g * e since e acts as identity on the code
            assert_eq!(a.mul_mod(&c.generator, &c.idempotent), a.reduce(&c.generator));
            assert_eq!(a.generator_matrix(&c).k(), c.dimension);
            assert_eq!(c.generator.degree(), Some(t.len()));
        }
    }

    #[test]
    fn multiplier_composition_and_idempotent() {
        let a = amb(13, 3);
        let c = a.code(&[0, 2, 5, 6]).unwrap();
        let m2 = a.apply_multiplier(2, &c).unwrap();
        assert_eq!(m2.idempotent, a.multiplier_apply(2, &c.idempotent).unwrap());
        let m2m5 = a.apply_multiplier(5, &m2).unwrap();
        assert_eq!(m2m5, a.apply_multiplier(10, &c).unwrap());
        assert_eq!(a.apply_multiplier(1, &c).unwrap(), c);
    }

    #[test]
    fn even_like_agrees_with_brute_force() {
        let f: Arc<Gf> = Gf::from_order(3).unwrap();
        let a = CyclicAmbient::new(13, f.clone()).unwrap();
        for t in [vec![0, 1, 3, 9, 2, 5, 6, 4, 10, 12], vec![1, 3, 9, 2, 5, 6, 4, 10, 12]] {
            let c = a.code(&t).unwrap();
            let g = a.generator_matrix(&c);
            // every codeword sums to zero iff every basis row does
            let all_even = g.rows().iter().all(|r| r.iter().fold(Fe::ZERO, |s, &x| f.add(s, x)) == Fe::ZERO);
            assert_eq!(all_even, c.is_even_like());
        }
    }
}
