//! Splittings of Z_n given by a multiplier, and the four polyadic code
//! families they define over GF(q).

use std::collections::BTreeSet;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::arith;
use crate::cyclic::CyclicCode;
use crate::gf::FieldDesc;
use crate::polyring::{CyclicAmbient, Poly, PolyError};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum SplittingError {
    #[error("m must be at least 2, got {0}")]
    InvalidM(usize),
    #[error("invalid splitting: {0}")]
    Invalid(String),
    #[error("multiplier chain broken: mu_a(e_{i}) != e_{prev}", i = .0 + 1, prev = (.0 + .1 - 1) % .1 + 1)]
    ChainBroken(usize, usize),
    #[error(transparent)]
    Poly(#[from] PolyError),
}

/// `Z_n = S_1 ∪ ... ∪ S_m ∪ S_inf` with `mu_a(S_i) = S_{i+1}` and `mu_a(S_inf) = S_inf`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Splitting {
    pub n: usize,
    pub q: FieldDesc,
    pub m: usize,
    pub a: usize,
    #[serde(rename = "S")]
    pub s: Vec<Vec<usize>>,
    #[serde(rename = "S_inf")]
    pub s_inf: Vec<usize>,
}

impl Splitting {
    /// `S_inf - {0}`.
    pub fn s_inf_prime(&self) -> Vec<usize> {
        self.s_inf.iter().copied().filter(|&i| i != 0).collect()
    }

    /// Checks every structural invariant against the ambient coset structure.
    pub fn validate(&self, amb: &CyclicAmbient) -> Result<(), SplittingError> {
        let bad = |msg: &str| Err(SplittingError::Invalid(msg.to_string()));
        if self.n != amb.n() || self.m != self.s.len() {
            return bad("length or m does not match");
        }
        if self.m < 2 {
            return Err(SplittingError::InvalidM(self.m));
        }
        let mut seen = vec![false; self.n];
        for part in self.s.iter().chain(std::iter::once(&self.s_inf)) {
            for &i in part {
                if i >= self.n || std::mem::replace(&mut seen[i], true) {
                    return bad("parts overlap or leave Z_n");
                }
            }
            if !amb.cosets().is_union(part) {
                return bad("a part is not a union of cyclotomic cosets");
            }
        }
        if seen.iter().any(|&x| !x) {
            return bad("parts do not cover Z_n");
        }
        if !self.s_inf.contains(&0) {
            return bad("0 must lie in S_inf");
        }
        if self.s.iter().any(|p| p.is_empty()) {
            return bad("empty S_i");
        }
        for i in 0..self.m {
            let image = amb.multiplier_set(self.a as i64, &self.s[i])?;
            if image != sorted(&self.s[(i + 1) % self.m]) {
                return bad("mu_a does not cycle the S_i");
            }
        }
        if amb.multiplier_set(self.a as i64, &self.s_inf)? != sorted(&self.s_inf) {
            return bad("mu_a does not fix S_inf");
        }
        Ok(())
    }
}

fn sorted(v: &[usize]) -> Vec<usize> {
    let mut v = v.to_vec();
    v.sort_unstable();
    v
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct SplittingOptions {
    /// Allow whole non-fixed multiplier orbits of cosets to join S_inf.
    pub absorb_orbits: bool,
    /// Stop after this many splittings.
    pub limit: Option<usize>,
}

/// Splittings found for one multiplier, in deterministic order.
fn splittings_for(amb: &CyclicAmbient, m: usize, a: usize, opts: SplittingOptions) -> Vec<Splitting> {
    let cosets = &amb.cosets().cosets;
    let nc = cosets.len();
    let image: Vec<usize> = cosets.iter().map(|c| amb.coset_of(c[0] * a)).collect();
    let mut fixed = Vec::new();
    let mut orbits: Vec<Vec<usize>> = Vec::new();
    let mut seen = vec![false; nc];
    for start in 0..nc {
        if seen[start] {
            continue;
        }
        let mut orbit = Vec::new();
        let mut c = start;
        while !seen[c] {
            seen[c] = true;
            orbit.push(c);
            c = image[c];
        }
        if orbit.len() == 1 {
            fixed.push(start);
        } else {
            orbits.push(orbit);
        }
    }
    let distributable: Vec<bool> = orbits.iter().map(|o| o.len() % m == 0).collect();
    if !opts.absorb_orbits && distributable.iter().any(|d| !d) {
        return Vec::new();
    }
    // choice per orbit: None = absorbed into S_inf, Some(offset)
    let mut out = Vec::new();
    let mut choice: Vec<Option<usize>> = vec![None; orbits.len()];
    struct Search<'a> {
        amb: &'a CyclicAmbient,
        orbits: &'a [Vec<usize>],
        distributable: &'a [bool],
        fixed: &'a [usize],
        m: usize,
        a: usize,
        opts: SplittingOptions,
    }
    fn rec(idx: usize, first_done: bool, choice: &mut Vec<Option<usize>>, ctx: &Search, out: &mut Vec<Splitting>) {
        let Search { amb, orbits, distributable, fixed, m, a, opts } = *ctx;
        if opts.limit.is_some_and(|l| out.len() >= l) {
            return;
        }
        if idx == orbits.len() {
            if first_done {
                out.push(assemble(amb, orbits, fixed, choice, m, a));
            }
            return;
        }
        if distributable[idx] {
            let offsets = if first_done { 0..m } else { 0..1 };
            for o in offsets {
                choice[idx] = Some(o);
                rec(idx + 1, true, choice, ctx, out);
            }
        }
        if opts.absorb_orbits {
            choice[idx] = None;
            rec(idx + 1, first_done, choice, ctx, out);
        }
    }
    let ctx = Search { amb, orbits: &orbits, distributable: &distributable, fixed: &fixed, m, a, opts };
    rec(0, false, &mut choice, &ctx, &mut out);
    out
}

fn assemble(
    amb: &CyclicAmbient,
    orbits: &[Vec<usize>],
    fixed: &[usize],
    choice: &[Option<usize>],
    m: usize,
    a: usize,
) -> Splitting {
    let cosets = &amb.cosets().cosets;
    let mut s: Vec<BTreeSet<usize>> = vec![BTreeSet::new(); m];
    let mut s_inf: BTreeSet<usize> = fixed.iter().flat_map(|&c| cosets[c].iter().copied()).collect();
    for (orbit, ch) in orbits.iter().zip(choice) {
        match ch {
            None => s_inf.extend(orbit.iter().flat_map(|&c| cosets[c].iter().copied())),
            Some(o) => {
                for (j, &c) in orbit.iter().enumerate() {
                    s[(o + j) % m].extend(cosets[c].iter().copied());
                }
            }
        }
    }
    Splitting {
        n: amb.n(),
        q: FieldDesc { p: amb.field().p() as u64, s: amb.field().s(), modulus: None },
        m,
        a,
        s: s.into_iter().map(|p| p.into_iter().collect()).collect(),
        s_inf: s_inf.into_iter().collect(),
    }
}

/// Every splitting of Z_n into `m` classes cycled by a multiplier, scanning
/// units `a` in ascending order (or only the given one). Splittings that
/// coincide for several multipliers are reported once, with the smallest `a`.
pub fn find_splittings(
    amb: &CyclicAmbient,
    m: usize,
    a: Option<i64>,
    opts: SplittingOptions,
) -> Result<Vec<Splitting>, SplittingError> {
    if m < 2 {
        return Err(SplittingError::InvalidM(m));
    }
    let n = amb.n();
    let units: Vec<usize> = match a {
        Some(a) => vec![amb.unit(a)?],
        None => arith::units(n as u64).into_iter().map(|u| u as usize).collect(),
    };
    let per_unit: Vec<Vec<Splitting>> = units.par_iter().map(|&a| splittings_for(amb, m, a, opts)).collect();
    let mut seen = BTreeSet::new();
    let mut out = Vec::new();
    for s in per_unit.into_iter().flatten() {
        if seen.insert((s.s.clone(), s.s_inf.clone())) {
            out.push(s);
            if opts.limit.is_some_and(|l| out.len() >= l) {
                break;
            }
        }
    }
    Ok(out)
}

/// The four families for one splitting, indexed `0..m` (family index `i`
/// here is `i + 1` in the usual notation).
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PolyadicFamily {
    pub splitting: Splitting,
    /// Even-like, defining set `(S_i ∪ S_inf')^c`, idempotent `e_i`.
    pub c: Vec<CyclicCode>,
    /// Even-like, defining set `S_i ∪ S_inf`, idempotent `e_i'`.
    pub c_prime: Vec<CyclicCode>,
    /// Odd-like, defining set `S_i ∪ S_inf'`, idempotent `d_i`.
    pub d: Vec<CyclicCode>,
    /// Odd-like, defining set `(S_i ∪ S_inf)^c`, idempotent `d_i'`.
    pub d_prime: Vec<CyclicCode>,
}

impl PolyadicFamily {
    pub fn m(&self) -> usize {
        self.splitting.m
    }

    pub fn e(&self, i: usize) -> &Poly {
        &self.c[i].idempotent
    }

    pub fn e_prime(&self, i: usize) -> &Poly {
        &self.c_prime[i].idempotent
    }

    pub fn d_idem(&self, i: usize) -> &Poly {
        &self.d[i].idempotent
    }

    pub fn d_prime_idem(&self, i: usize) -> &Poly {
        &self.d_prime[i].idempotent
    }
}

fn union(a: &[usize], b: &[usize]) -> Vec<usize> {
    let s: BTreeSet<usize> = a.iter().chain(b).copied().collect();
    s.into_iter().collect()
}

pub fn build_family(amb: &CyclicAmbient, s: &Splitting) -> Result<PolyadicFamily, SplittingError> {
    s.validate(amb)?;
    let sp = s.s_inf_prime();
    let mut fam = PolyadicFamily {
        splitting: s.clone(),
        c: Vec::new(),
        c_prime: Vec::new(),
        d: Vec::new(),
        d_prime: Vec::new(),
    };
    for si in &s.s {
        let odd = union(si, &sp);
        let even_prime = union(si, &s.s_inf);
        fam.c.push(amb.code(&amb.complement_set(&odd))?);
        fam.c_prime.push(amb.code(&even_prime)?);
        fam.d.push(amb.code(&odd)?);
        fam.d_prime.push(amb.code(&amb.complement_set(&even_prime))?);
    }
    let m = s.m;
    for i in 0..m {
        let prev = (i + m - 1) % m;
        if amb.multiplier_apply(s.a as i64, fam.e(i))? != *fam.e(prev) {
            return Err(SplittingError::ChainBroken(i, m));
        }
    }
    Ok(fam)
}
