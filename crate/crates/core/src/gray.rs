//! Gray maps R^n -> GF(q)^{kl n} given by a nonsingular kl x kl matrix V:
//! every coordinate's CRT vector is multiplied by V on the right and the
//! blocks are concatenated in coordinate order.

use std::sync::Arc;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::gf::{Fe, FieldDesc, Gf};
use crate::linalg::{rank, GeneratorMatrix};
use crate::ring_r::{ExtendedRCode, RCode, RElement};
use crate::polyring::CyclicAmbient;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum GrayError {
    #[error("matrix is not square")]
    NotSquare,
    #[error("matrix is singular")]
    Singular,
    #[error("matrix has size {matrix}, ring needs {ring}")]
    DimensionMismatch { matrix: usize, ring: usize },
    #[error("unknown preset {0:?}")]
    UnknownPreset(String),
    #[error("preset {name} is defined over GF({q}) only")]
    PresetField { name: String, q: u32 },
    #[error("entry {0} is not an element of the field")]
    BadEntry(u32),
    #[error(transparent)]
    Field(#[from] crate::gf::GfError),
}

/// A nonsingular V with, when it exists, the scalar `lambda` such that `V V^T = lambda I`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GrayMatrix {
    field: Arc<Gf>,
    rows: Vec<Vec<Fe>>,
    lambda: Option<Fe>,
}

/// Serialized matrix: `{q, rows}` with entries as element indices.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GrayJson {
    pub q: FieldDesc,
    pub rows: Vec<Vec<u32>>,
}

/// `(nonsingular, lambda)` for a square matrix.
pub fn validate_gray_matrix(field: &Gf, rows: &[Vec<Fe>]) -> Result<(bool, Option<Fe>), GrayError> {
    let size = rows.len();
    if rows.iter().any(|r| r.len() != size) {
        return Err(GrayError::NotSquare);
    }
    let nonsingular = rank(field, rows, size) == size;
    let dot = |a: &[Fe], b: &[Fe]| a.iter().zip(b).fold(Fe::ZERO, |acc, (&x, &y)| field.add(acc, field.mul(x, y)));
    let lambda = rows.first().map(|r| dot(r, r)).filter(|&l| l != Fe::ZERO).filter(|&l| {
        (0..size).all(|i| (0..size).all(|j| dot(&rows[i], &rows[j]) == if i == j { l } else { Fe::ZERO }))
    });
    Ok((nonsingular, lambda))
}

const A: [[i64; 6]; 6] = [
    [2, -2, 1, 2, -2, 1],
    [1, 2, 2, 1, 2, 2],
    [2, 1, -2, 2, 1, -2],
    [2, -2, 1, -2, 2, -1],
    [1, 2, 2, -1, -2, -2],
    [2, 1, -2, -2, -1, 2],
];

const B: [[i64; 4]; 4] = [[2, -2, 1, 1], [-1, 1, 2, 2], [2, 2, 1, -1], [1, 1, -2, 2]];

const H4: [[i64; 4]; 4] = [[1, 1, 1, 1], [1, -1, 1, -1], [1, 1, -1, -1], [1, -1, -1, 1]];

impl GrayMatrix {
    pub fn new(field: Arc<Gf>, rows: Vec<Vec<Fe>>) -> Result<GrayMatrix, GrayError> {
        if let Some(&bad) = rows.iter().flatten().find(|x| x.0 >= field.q()) {
            return Err(GrayError::BadEntry(bad.0));
        }
        let (nonsingular, lambda) = validate_gray_matrix(&field, &rows)?;
        if !nonsingular {
            return Err(GrayError::Singular);
        }
        Ok(GrayMatrix { field, rows, lambda })
    }

    fn from_ints<const N: usize>(field: &Arc<Gf>, m: &[[i64; N]; N]) -> Result<GrayMatrix, GrayError> {
        GrayMatrix::new(field.clone(), m.iter().map(|r| r.iter().map(|&x| field.from_int(x)).collect()).collect())
    }

    pub fn identity(field: Arc<Gf>, size: usize) -> GrayMatrix {
        let rows = (0..size).map(|i| (0..size).map(|j| if i == j { Fe::ONE } else { Fe::ZERO }).collect()).collect();
        GrayMatrix { field, rows, lambda: Some(Fe::ONE) }
    }

    /// Named matrices: `A` (6x6, integer entries), `B` (4x4, integer entries),
    /// `C4` (4x4 over GF(4)), `H4` (Sylvester Hadamard), `I` (identity of `size`).
    /// `A13` and `B7` are aliases of `A` and `B` pinned to GF(13) and GF(7).
    pub fn preset(name: &str, field: &Arc<Gf>, size: usize) -> Result<GrayMatrix, GrayError> {
        let pinned = |q: u32| {
            if field.q() == q {
                Ok(())
            } else {
                Err(GrayError::PresetField { name: name.to_string(), q })
            }
        };
        match name {
            "A13" => pinned(13).and_then(|_| Self::from_ints(field, &A)),
            "A" => Self::from_ints(field, &A),
            "B7" => pinned(7).and_then(|_| Self::from_ints(field, &B)),
            "B" => Self::from_ints(field, &B),
            "H4" => Self::from_ints(field, &H4),
            "C4" => {
                pinned(4)?;
                let (a, a2) = (Fe(2), field.mul(Fe(2), Fe(2)));
                let one = Fe::ONE;
                let neg = |x| field.neg(x);
                let rows = vec![
                    vec![a, neg(a2), one, one],
                    vec![neg(one), one, a, a2],
                    vec![a2, a, neg(one), one],
                    vec![one, one, a2, neg(a)],
                ];
                GrayMatrix::new(field.clone(), rows)
            }
            "I" => Ok(Self::identity(field.clone(), size)),
            _ => Err(GrayError::UnknownPreset(name.to_string())),
        }
    }

    pub fn from_json(j: &GrayJson) -> Result<GrayMatrix, GrayError> {
        let field = Gf::from_desc(&j.q)?;
        GrayMatrix::new(field, j.rows.iter().map(|r| r.iter().map(|&x| Fe(x)).collect()).collect())
    }

    pub fn to_json(&self) -> GrayJson {
        GrayJson { q: self.field.desc(), rows: self.rows.iter().map(|r| r.iter().map(|x| x.0).collect()).collect() }
    }

    pub fn size(&self) -> usize {
        self.rows.len()
    }

    pub fn rows(&self) -> &[Vec<Fe>] {
        &self.rows
    }

    pub fn lambda(&self) -> Option<Fe> {
        self.lambda
    }

    pub fn field(&self) -> &Arc<Gf> {
        &self.field
    }

    fn check(&self, kl: usize) -> Result<(), GrayError> {
        if kl != self.size() {
            return Err(GrayError::DimensionMismatch { matrix: self.size(), ring: kl });
        }
        Ok(())
    }

    /// `a V` for a CRT vector `a`.
    pub fn apply(&self, a: &RElement) -> Vec<Fe> {
        let f = self.field.as_ref();
        let mut out = vec![Fe::ZERO; self.size()];
        for (r, &x) in a.0.iter().enumerate() {
            if x == Fe::ZERO {
                continue;
            }
            for (o, &y) in out.iter_mut().zip(&self.rows[r]) {
                *o = f.add(*o, f.mul(x, y));
            }
        }
        out
    }
}

/// `Phi(r_0, .., r_{n-1}) = (r_0 V | r_1 V | ...)`.
pub fn gray_map(word: &[RElement], v: &GrayMatrix) -> Result<Vec<Fe>, GrayError> {
    if let Some(w) = word.first() {
        v.check(w.0.len())?;
    }
    Ok(word.iter().flat_map(|r| v.apply(r)).collect())
}

/// Gray weight: Hamming weight of the image.
pub fn gray_weight(word: &[RElement], v: &GrayMatrix) -> Result<usize, GrayError> {
    Ok(gray_map(word, v)?.iter().filter(|&&x| x != Fe::ZERO).count())
}

/// Image of `⊕ eta_ij C_ij` from per-component generator matrices of length N:
/// a row `c` of component `r` maps to the word whose block `p` is `c_p V[r, :]`.
pub fn gray_image(components: &[GeneratorMatrix], v: &GrayMatrix) -> Result<GeneratorMatrix, GrayError> {
    v.check(components.len())?;
    let f = v.field.as_ref();
    let kl = v.size();
    let len = components.first().map(|g| g.n()).unwrap_or(0);
    let mut rows = Vec::new();
    for (r, g) in components.iter().enumerate() {
        let vr = &v.rows[r];
        for c in g.rows() {
            let mut out = vec![Fe::ZERO; kl * len];
            for (p, &x) in c.iter().enumerate() {
                if x == Fe::ZERO {
                    continue;
                }
                for (s, &y) in vr.iter().enumerate() {
                    out[p * kl + s] = f.mul(x, y);
                }
            }
            rows.push(out);
        }
    }
    Ok(GeneratorMatrix::from_rows(v.field.clone(), kl * len, rows).expect("rows have length kl * n"))
}

pub fn gray_generator_matrix(c: &RCode, amb: &CyclicAmbient, v: &GrayMatrix) -> Result<GeneratorMatrix, GrayError> {
    let comps: Vec<GeneratorMatrix> = c.components.iter().map(|x| amb.generator_matrix(x)).collect();
    gray_image(&comps, v)
}

/// Gray image of an extended code; the appended coordinate's block comes last.
pub fn gray_extended(c: &ExtendedRCode, v: &GrayMatrix) -> Result<GeneratorMatrix, GrayError> {
    gray_image(&c.components, v)
}

/// A coordinate permutation of length n lifted to the kl-blocks of the image.
pub fn lift_permutation(perm: &[usize], kl: usize) -> Vec<usize> {
    perm.iter().flat_map(|&p| (0..kl).map(move |s| p * kl + s)).collect()
}

/// Column permutation realizing `mu_a` on length-n words, optionally with the
/// appended coordinate fixed at the end.
pub fn multiplier_permutation(n: usize, a: usize, extended: bool) -> Vec<usize> {
    let inv = crate::arith::inv_mod(a as u64, n as u64).expect("a is a unit mod n") as usize;
    let mut perm: Vec<usize> = (0..n).map(|j| j * inv % n).collect();
    if extended {
        perm.push(n);
    }
    perm
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::gf::build_field;

    #[test]
    fn preset_lambdas() {
        let f13 = build_field(13, 1, None).unwrap();
        assert_eq!(GrayMatrix::preset("A13", &f13, 6).unwrap().lambda(), Some(Fe(5)));
        let f7 = build_field(7, 1, None).unwrap();
        assert_eq!(GrayMatrix::preset("B7", &f7, 4).unwrap().lambda(), Some(Fe(3)));
        assert_eq!(GrayMatrix::preset("A", &f7, 6).unwrap().lambda(), Some(Fe(4)));
        let f4 = build_field(2, 2, None).unwrap();
        assert_eq!(GrayMatrix::preset("C4", &f4, 4).unwrap().lambda(), Some(Fe::ONE));
        let f5 = build_field(5, 1, None).unwrap();
        assert_eq!(GrayMatrix::preset("H4", &f5, 4).unwrap().lambda(), Some(Fe(4)));
        assert_eq!(GrayMatrix::preset("I", &f5, 3).unwrap().lambda(), Some(Fe::ONE));
        assert!(matches!(GrayMatrix::preset("B7", &f5, 4), Err(GrayError::PresetField { .. })));
        assert!(matches!(GrayMatrix::preset("Z", &f5, 4), Err(GrayError::UnknownPreset(_))));
        // H4 is singular in characteristic 2
        assert_eq!(GrayMatrix::preset("H4", &f4, 4).unwrap_err(), GrayError::Singular);
    }

    #[test]
    fn validate_shapes() {
        let f = build_field(5, 1, None).unwrap();
        assert_eq!(validate_gray_matrix(&f, &[vec![Fe(1), Fe(2)]]).unwrap_err(), GrayError::NotSquare);
        let (ns, l) = validate_gray_matrix(&f, &[vec![Fe(1), Fe(2)], vec![Fe(0), Fe(1)]]).unwrap();
        assert!(ns);
        assert_eq!(l, None);
    }

    #[test]
    fn map_basics() {
        let f = build_field(13, 1, None).unwrap();
        let v = GrayMatrix::identity(f.clone(), 6);
        let zero = vec![RElement(vec![Fe::ZERO; 6]); 3];
        assert!(gray_map(&zero, &v).unwrap().iter().all(|&x| x == Fe::ZERO));
        let mut e = vec![Fe::ZERO; 6];
        e[0] = Fe::ONE;
        assert_eq!(gray_weight(&[RElement(e)], &v).unwrap(), 1);
        let bad = vec![RElement(vec![Fe::ZERO; 4])];
        assert!(matches!(gray_map(&bad, &v), Err(GrayError::DimensionMismatch { .. })));
    }

    #[test]
    fn lifted_permutation() {
        assert_eq!(lift_permutation(&[1, 0], 2), vec![2, 3, 0, 1]);
        assert_eq!(multiplier_permutation(5, 2, true), vec![0, 3, 1, 4, 2, 5]);
    }
}
