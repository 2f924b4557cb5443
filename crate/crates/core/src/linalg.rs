//! Linear codes over GF(q) given by generator matrices.

use std::sync::Arc;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::gf::{Fe, Gf};

/// Default number of codewords an exhaustive scan may visit.
pub const DEFAULT_BUDGET: u64 = 10_000_000;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum LinalgError {
    #[error("codes have lengths {0} and {1}")]
    LengthMismatch(usize, usize),
    #[error("row {row} has length {len}, expected {n}")]
    RaggedRows { row: usize, len: usize, n: usize },
    #[error("enumerating {words} codewords exceeds the budget of {budget}")]
    BudgetExceeded { words: u128, budget: u64 },
    #[error("permutation does not match length {0}")]
    BadPermutation(usize),
    #[error("entry {0} is not an element of the field")]
    BadEntry(u32),
    #[error(transparent)]
    Field(#[from] crate::gf::GfError),
}

/// Minimum distance, exact or bracketed.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Distance {
    Exact(usize),
    /// Only part of the code was scanned; `upper` is the lightest word seen.
    Interval { lower: usize, upper: usize },
    /// The zero code has no minimum distance.
    Undefined,
}

impl Distance {
    pub fn exact(self) -> Option<usize> {
        match self {
            Distance::Exact(d) => Some(d),
            _ => None,
        }
    }

    /// Minimum of two distances of codes whose union is being scanned.
    pub fn min(self, other: Distance) -> Distance {
        use Distance::*;
        match (self, other) {
            (Undefined, d) | (d, Undefined) => d,
            (Exact(a), Exact(b)) => Exact(a.min(b)),
            (Exact(a), Interval { lower, upper }) | (Interval { lower, upper }, Exact(a)) => {
                if a <= lower {
                    Exact(a)
                } else {
                    Interval { lower, upper: upper.min(a) }
                }
            }
            (Interval { lower: l1, upper: u1 }, Interval { lower: l2, upper: u2 }) => {
                Interval { lower: l1.min(l2), upper: u1.min(u2) }
            }
        }
    }
}

impl std::fmt::Display for Distance {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Distance::Exact(d) => write!(f, "{d}"),
            Distance::Interval { lower, upper } => write!(f, "{lower}..={upper}"),
            Distance::Undefined => write!(f, "-"),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "status", rename_all = "snake_case")]
pub enum Griesmer {
    Attains { bound_sum: u64 },
    Slack { bound_sum: u64, slack: u64 },
    Violates { bound_sum: u64 },
}

impl Griesmer {
    pub fn bound_sum(self) -> u64 {
        match self {
            Griesmer::Attains { bound_sum } | Griesmer::Slack { bound_sum, .. } | Griesmer::Violates { bound_sum } => {
                bound_sum
            }
        }
    }
}

/// `n` against `sum_{i<k} ceil(d / q^i)`.
pub fn griesmer_check(n: u64, k: u64, d: u64, q: u64) -> Griesmer {
    let mut bound_sum = 0u64;
    let mut qi = 1u128;
    for _ in 0..k {
        bound_sum += (d as u128).div_ceil(qi) as u64;
        qi = qi.saturating_mul(q as u128);
    }
    match n.cmp(&bound_sum) {
        std::cmp::Ordering::Equal => Griesmer::Attains { bound_sum },
        std::cmp::Ordering::Greater => Griesmer::Slack { bound_sum, slack: n - bound_sum },
        std::cmp::Ordering::Less => Griesmer::Violates { bound_sum },
    }
}

/// Row-reduces `rows` in place over `f`; returns pivot columns. Zero rows are dropped.
pub fn rref(f: &Gf, rows: &mut Vec<Vec<Fe>>, n: usize) -> Vec<usize> {
    let mut pivots = Vec::new();
    let mut r = 0;
    for col in 0..n {
        if r == rows.len() {
            break;
        }
        let Some(p) = (r..rows.len()).find(|&i| rows[i][col] != Fe::ZERO) else {
            continue;
        };
        rows.swap(r, p);
        let inv = f.inv(rows[r][col]).unwrap();
        if inv != Fe::ONE {
            for x in rows[r][col..].iter_mut() {
                *x = f.mul(*x, inv);
            }
        }
        let pivot_row = rows[r].clone();
        for (i, row) in rows.iter_mut().enumerate() {
            if i == r || row[col] == Fe::ZERO {
                continue;
            }
            let c = f.neg(row[col]);
            for (x, &y) in row[col..].iter_mut().zip(&pivot_row[col..]) {
                if y != Fe::ZERO {
                    *x = f.add(*x, f.mul(c, y));
                }
            }
        }
        pivots.push(col);
        r += 1;
    }
    rows.truncate(r);
    pivots
}

pub fn rank(f: &Gf, rows: &[Vec<Fe>], n: usize) -> usize {
    let mut m = rows.to_vec();
    rref(f, &mut m, n).len()
}

/// A linear [n, k] code, held in reduced row echelon form.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GeneratorMatrix {
    field: Arc<Gf>,
    n: usize,
    rows: Vec<Vec<Fe>>,
    pivots: Vec<usize>,
}

/// Serialized matrix: `{q, rows}` with entries as element indices.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct MatrixJson {
    pub q: crate::gf::FieldDesc,
    pub rows: Vec<Vec<u32>>,
}

impl GeneratorMatrix {
    /// Spans the given rows; dependent rows are discarded.
    pub fn from_rows(field: Arc<Gf>, n: usize, rows: Vec<Vec<Fe>>) -> Result<GeneratorMatrix, LinalgError> {
        if let Some((row, r)) = rows.iter().enumerate().find(|(_, r)| r.len() != n) {
            return Err(LinalgError::RaggedRows { row, len: r.len(), n });
        }
        let mut rows = rows;
        let pivots = rref(&field, &mut rows, n);
        Ok(GeneratorMatrix { field, n, rows, pivots })
    }

    pub fn zero(field: Arc<Gf>, n: usize) -> GeneratorMatrix {
        GeneratorMatrix { field, n, rows: Vec::new(), pivots: Vec::new() }
    }

    pub fn identity(field: Arc<Gf>, n: usize) -> GeneratorMatrix {
        let rows = (0..n)
            .map(|i| {
                let mut r = vec![Fe::ZERO; n];
                r[i] = Fe::ONE;
                r
            })
            .collect();
        GeneratorMatrix { field, n, rows, pivots: (0..n).collect() }
    }

    pub fn field(&self) -> &Arc<Gf> {
        &self.field
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn k(&self) -> usize {
        self.rows.len()
    }

    pub fn rows(&self) -> &[Vec<Fe>] {
        &self.rows
    }

    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }

    /// Row space of `{q, rows}`; `n` is taken from the first row.
    pub fn from_json(j: &MatrixJson) -> Result<GeneratorMatrix, LinalgError> {
        let field = Gf::from_desc(&j.q)?;
        if let Some(&bad) = j.rows.iter().flatten().find(|&&x| x >= field.q()) {
            return Err(LinalgError::BadEntry(bad));
        }
        let n = j.rows.first().map_or(0, |r| r.len());
        GeneratorMatrix::from_rows(field, n, j.rows.iter().map(|r| r.iter().map(|&x| Fe(x)).collect()).collect())
    }

    pub fn to_json(&self) -> MatrixJson {
        MatrixJson { q: self.field.desc(), rows: self.rows.iter().map(|r| r.iter().map(|c| c.0).collect()).collect() }
    }

    /// Basis of the dual code, built from the RREF pivots.
    pub fn dual(&self) -> GeneratorMatrix {
        let f = self.field.as_ref();
        let is_pivot = {
            let mut v = vec![false; self.n];
            for &p in &self.pivots {
                v[p] = true;
            }
            v
        };
        let rows = (0..self.n)
            .filter(|&c| !is_pivot[c])
            .map(|free| {
                let mut v = vec![Fe::ZERO; self.n];
                v[free] = Fe::ONE;
                for (r, &p) in self.pivots.iter().enumerate() {
                    v[p] = f.neg(self.rows[r][free]);
                }
                v
            })
            .collect();
        GeneratorMatrix::from_rows(self.field.clone(), self.n, rows).expect("rows have length n")
    }

    pub fn inner(&self, a: &[Fe], b: &[Fe]) -> Fe {
        let f = self.field.as_ref();
        a.iter().zip(b).fold(Fe::ZERO, |acc, (&x, &y)| f.add(acc, f.mul(x, y)))
    }

    /// `G G^T`.
    pub fn gram(&self) -> Vec<Vec<Fe>> {
        self.rows.iter().map(|a| self.rows.iter().map(|b| self.inner(a, b)).collect()).collect()
    }

    pub fn is_self_orthogonal(&self) -> bool {
        self.gram().iter().flatten().all(|&x| x == Fe::ZERO)
    }

    pub fn is_self_dual(&self) -> bool {
        2 * self.k() == self.n && self.is_self_orthogonal()
    }

    /// `k - rank(G G^T)`.
    pub fn hull_dimension(&self) -> usize {
        self.k() - rank(&self.field, &self.gram(), self.k())
    }

    /// Zero hull, decided by `rank(G G^T) = k`.
    pub fn is_lcd(&self) -> bool {
        self.hull_dimension() == 0
    }

    /// The hull `C ∩ C^⊥` computed as an explicit intersection.
    pub fn hull(&self) -> GeneratorMatrix {
        self.intersect(&self.dual()).expect("same length")
    }

    pub fn contains(&self, v: &[Fe]) -> bool {
        if v.len() != self.n {
            return false;
        }
        let f = self.field.as_ref();
        let mut w = v.to_vec();
        for (r, &p) in self.pivots.iter().enumerate() {
            if w[p] != Fe::ZERO {
                let c = f.neg(w[p]);
                for (x, &y) in w.iter_mut().zip(&self.rows[r]) {
                    *x = f.add(*x, f.mul(c, y));
                }
            }
        }
        w.iter().all(|&x| x == Fe::ZERO)
    }

    pub fn contains_code(&self, other: &GeneratorMatrix) -> bool {
        other.n == self.n && other.rows.iter().all(|r| self.contains(r))
    }

    pub fn sum(&self, other: &GeneratorMatrix) -> Result<GeneratorMatrix, LinalgError> {
        if other.n != self.n {
            return Err(LinalgError::LengthMismatch(self.n, other.n));
        }
        let rows = self.rows.iter().chain(&other.rows).cloned().collect();
        GeneratorMatrix::from_rows(self.field.clone(), self.n, rows)
    }

    /// `(C1^⊥ + C2^⊥)^⊥`.
    pub fn intersect(&self, other: &GeneratorMatrix) -> Result<GeneratorMatrix, LinalgError> {
        Ok(self.dual().sum(&other.dual())?.dual())
    }

    /// Column `j` of the result is column `perm[j]` of `self`.
    pub fn permute_columns(&self, perm: &[usize]) -> Result<GeneratorMatrix, LinalgError> {
        let mut seen = vec![false; self.n];
        if perm.len() != self.n || perm.iter().any(|&p| p >= self.n || std::mem::replace(&mut seen[p], true)) {
            return Err(LinalgError::BadPermutation(self.n));
        }
        let rows = self.rows.iter().map(|r| perm.iter().map(|&p| r[p]).collect()).collect();
        GeneratorMatrix::from_rows(self.field.clone(), self.n, rows)
    }

    /// Appends one column holding `gamma * (row sum)`.
    pub fn extend(&self, gamma: Fe) -> GeneratorMatrix {
        let f = self.field.as_ref();
        let rows = self
            .rows
            .iter()
            .map(|r| {
                let s = r.iter().fold(Fe::ZERO, |acc, &x| f.add(acc, x));
                let mut v = r.clone();
                v.push(f.mul(gamma, s));
                v
            })
            .collect();
        GeneratorMatrix::from_rows(self.field.clone(), self.n + 1, rows).expect("rows have length n + 1")
    }

    pub fn codeword_count(&self) -> u128 {
        (self.field.q() as u128).checked_pow(self.k() as u32).unwrap_or(u128::MAX)
    }

    /// Generators of the code as an F_p-space: `a^j * row_i` for each row and
    /// each basis element `a^j` of GF(q) over GF(p).
    fn prime_basis(&self) -> Vec<Vec<Fe>> {
        let f = self.field.as_ref();
        let p = f.p();
        let mut out = Vec::with_capacity(self.k() * f.s() as usize);
        for row in &self.rows {
            let mut scale = Fe::ONE;
            for _ in 0..f.s() {
                out.push(row.iter().map(|&x| f.mul(x, scale)).collect());
                scale = Fe(scale.0 * p); // the next power of the class of x
            }
        }
        out
    }

    /// Walks codewords `first..first+count` in base-p counter order over the
    /// F_p basis, calling `visit` with each weight.
    fn scan<V: FnMut(usize)>(&self, basis: &[Vec<Fe>], first: u128, count: u128, mut visit: V) {
        let f = self.field.as_ref();
        let p = f.p() as u128;
        let dims = basis.len();
        let mut digits = vec![0u32; dims];
        let mut word = vec![Fe::ZERO; self.n];
        let mut x = first;
        for (d, b) in basis.iter().enumerate() {
            let c = (x % p) as u32;
            x /= p;
            digits[d] = c;
            for _ in 0..c {
                for (w, &y) in word.iter_mut().zip(b) {
                    *w = f.add(*w, y);
                }
            }
        }
        for _ in 0..count {
            visit(word.iter().filter(|&&w| w != Fe::ZERO).count());
            // increment; a wrap from p-1 to 0 is one more addition since p*b = 0
            for (d, b) in basis.iter().enumerate() {
                for (w, &y) in word.iter_mut().zip(b) {
                    *w = f.add(*w, y);
                }
                digits[d] += 1;
                if digits[d] < f.p() {
                    break;
                }
                digits[d] = 0;
            }
        }
    }

    fn chunks(total: u128) -> Vec<(u128, u128)> {
        let parts = (rayon::current_num_threads() as u128 * 4).clamp(1, total.max(1));
        let size = total.div_ceil(parts);
        (0..parts)
            .map(|i| (i * size, size.min(total.saturating_sub(i * size))))
            .filter(|&(_, c)| c > 0)
            .collect()
    }

    /// Exact weight distribution `W_0..W_n`.
    pub fn weight_enumerator(&self, budget: u64) -> Result<Vec<u128>, LinalgError> {
        let total = self.codeword_count();
        if total > budget as u128 {
            return Err(LinalgError::BudgetExceeded { words: total, budget });
        }
        let basis = self.prime_basis();
        let n = self.n;
        let merged = Self::chunks(total)
            .into_par_iter()
            .map(|(first, count)| {
                let mut w = vec![0u128; n + 1];
                self.scan(&basis, first, count, |wt| w[wt] += 1);
                w
            })
            .reduce(|| vec![0u128; n + 1], |a, b| a.iter().zip(&b).map(|(x, y)| x + y).collect());
        Ok(merged)
    }

    /// Exact when `q^k <= budget`; otherwise the lightest of the first `budget`
    /// words in counter order and the RREF rows bounds it from above.
    pub fn min_distance(&self, budget: u64) -> Distance {
        if self.k() == 0 {
            return Distance::Undefined;
        }
        let row_bound = self.rows.iter().map(|r| r.iter().filter(|&&x| x != Fe::ZERO).count()).min().unwrap();
        let total = self.codeword_count();
        let exact = total <= budget as u128;
        let scanned = total.min(budget as u128);
        let basis = self.prime_basis();
        let n = self.n;
        let best = Self::chunks(scanned)
            .into_par_iter()
            .map(|(first, count)| {
                let mut best = n;
                self.scan(&basis, first, count, |wt| {
                    if wt > 0 && wt < best {
                        best = wt;
                    }
                });
                best
            })
            .min()
            .unwrap_or(n)
            .min(row_bound);
        if exact {
            debug_assert!(best <= n - self.k() + 1, "Singleton bound");
            Distance::Exact(best)
        } else {
            Distance::Interval { lower: 1, upper: best }
        }
    }
}

/// Row-space equality.
pub fn codes_equal(a: &GeneratorMatrix, b: &GeneratorMatrix) -> Result<bool, LinalgError> {
    if a.n != b.n {
        return Err(LinalgError::LengthMismatch(a.n, b.n));
    }
    Ok(a.rows == b.rows)
}

/// Row-space equality after permuting the columns of `b` by `perm`.
pub fn permuted_equal(a: &GeneratorMatrix, b: &GeneratorMatrix, perm: &[usize]) -> Result<bool, LinalgError> {
    if a.n != b.n {
        return Err(LinalgError::LengthMismatch(a.n, b.n));
    }
    codes_equal(a, &b.permute_columns(perm)?)
}

pub fn dual_matrix(g: &GeneratorMatrix) -> GeneratorMatrix {
    g.dual()
}

pub fn min_distance(g: &GeneratorMatrix, budget: u64) -> Distance {
    g.min_distance(budget)
}

pub fn weight_enumerator(g: &GeneratorMatrix, budget: u64) -> Result<Vec<u128>, LinalgError> {
    g.weight_enumerator(budget)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::gf::build_field;

    fn repetition(q: u64, n: usize) -> GeneratorMatrix {
        let f = Gf::from_order(q).unwrap();
        GeneratorMatrix::from_rows(f, n, vec![vec![Fe::ONE; n]]).unwrap()
    }

    #[test]
    fn griesmer_examples() {
        assert_eq!(griesmer_check(13, 3, 9, 3), Griesmer::Attains { bound_sum: 13 });
        assert_eq!(griesmer_check(11, 5, 6, 5), Griesmer::Attains { bound_sum: 11 });
        assert_eq!(griesmer_check(7, 1, 7, 2), Griesmer::Attains { bound_sum: 7 });
        assert_eq!(griesmer_check(13, 10, 3, 3), Griesmer::Slack { bound_sum: 12, slack: 1 });
        assert!(matches!(griesmer_check(5, 3, 4, 2), Griesmer::Violates { .. }));
    }

    #[test]
    fn repetition_code() {
        let g = repetition(13, 3);
        assert_eq!(g.min_distance(DEFAULT_BUDGET), Distance::Exact(3));
        let w = g.weight_enumerator(DEFAULT_BUDGET).unwrap();
        assert_eq!(w, vec![1, 0, 0, 12]);
        let d = g.dual();
        assert_eq!(d.k(), 2);
        assert!(codes_equal(&d.dual(), &g).unwrap());
    }

    #[test]
    fn dual_of_whole_space_is_zero() {
        let f = Gf::from_order(5).unwrap();
        let g = GeneratorMatrix::identity(f, 4);
        assert_eq!(g.dual().k(), 0);
        assert_eq!(g.dual().min_distance(10), Distance::Undefined);
    }

    #[test]
    fn enumeration_matches_naive_over_gf4() {
        // oracle: list every F_4-combination of the rows directly
        let f = build_field(2, 2, None).unwrap();
        let rows = vec![
            vec![Fe(1), Fe(2), Fe(0), Fe(3), Fe(1)],
            vec![Fe(0), Fe(1), Fe(1), Fe(2), Fe(3)],
            vec![Fe(2), Fe(0), Fe(3), Fe(0), Fe(1)],
        ];
        let g = GeneratorMatrix::from_rows(f.clone(), 5, rows.clone()).unwrap();
        let mut naive = vec![0u128; 6];
        for a in 0..4 {
            for b in 0..4 {
                for c in 0..4 {
                    let w = (0..5)
                        .filter(|&j| {
                            let x = f.add(f.add(f.mul(Fe(a), rows[0][j]), f.mul(Fe(b), rows[1][j])), f.mul(Fe(c), rows[2][j]));
                            x != Fe::ZERO
                        })
                        .count();
                    naive[w] += 1;
                }
            }
        }
        assert_eq!(g.weight_enumerator(1000).unwrap(), naive);
        assert!(g.weight_enumerator(10).is_err());
        let d = naive.iter().enumerate().skip(1).find(|(_, &c)| c > 0).unwrap().0;
        assert_eq!(g.min_distance(1000), Distance::Exact(d));
        assert!(matches!(g.min_distance(5), Distance::Interval { lower: 1, .. }));
    }

    #[test]
    fn lcd_and_hull_agree() {
        let f = Gf::from_order(3).unwrap();
        // [4,2] self-dual tetracode
        let g = GeneratorMatrix::from_rows(
            f.clone(),
            4,
            vec![vec![Fe(1), Fe(0), Fe(1), Fe(1)], vec![Fe(0), Fe(1), Fe(1), Fe(2)]],
        )
        .unwrap();
        assert!(g.is_self_dual());
        assert_eq!(g.hull().k(), 2);
        assert!(!g.is_lcd());
        let h = GeneratorMatrix::from_rows(f, 3, vec![vec![Fe(1), Fe(0), Fe(0)]]).unwrap();
        assert!(h.is_lcd());
        assert_eq!(h.hull().k(), 0);
    }

    #[test]
    fn permutation_and_extension() {
        let g = repetition(13, 3);
        let e = g.extend(Fe(2));
        assert_eq!(e.rows()[0], vec![Fe(1), Fe(1), Fe(1), Fe(6)]);
        assert!(permuted_equal(&g, &g, &[2, 0, 1]).unwrap());
        assert!(g.permute_columns(&[0, 0, 1]).is_err());
    }
}
