//! The ring R = GF(q)[u,v]/<f(u), g(v), uv - vu> for split separable f, g,
//! codes over R as families of cyclic codes in CRT coordinates, and the
//! polyadic codes over R built from a partition of the CRT idempotents.
//!
//! CRT index `(i, j)` (0-based) is stored at position `i * l + j`; labels are
//! 1-based, so position 0 is `"11"`.

use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::sync::Arc;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::arith;
use crate::cyclic::{CyclicCode, CyclicError};
use crate::gf::{Fe, FieldDesc, Gf, GfError};
use crate::linalg::{Distance, GeneratorMatrix};
use crate::polyadic_fq::PolyadicFamily;
use crate::polyring::{CyclicAmbient, Poly, PolyError};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum RingError {
    #[error("repeated root {0:?}")]
    DuplicateRoot(Fe),
    #[error("k and l are both 1")]
    TrivialRing,
    #[error("root index {0} is not an element of the field")]
    RootOutOfField(u32),
    #[error("{0} does not split into distinct linear factors over the field")]
    NotSplit(&'static str),
    #[error("idempotent identity failed for the constructed ring: {0}")]
    IdempotentCheck(String),
    #[error("partition mismatch: {0}")]
    PartitionMismatch(String),
    #[error("bad index label {0:?}")]
    BadLabel(String),
    #[error("length mismatch: {0} vs {1}")]
    LengthMismatch(usize, usize),
    #[error("S_inf' is not empty; closed-form sizes do not apply")]
    SInfPrimeNonEmpty,
    #[error("cannot parse {input:?}: {msg}")]
    Parse { input: String, msg: String },
    #[error(transparent)]
    Field(#[from] GfError),
    #[error(transparent)]
    Poly(#[from] PolyError),
    #[error(transparent)]
    Cyclic(#[from] CyclicError),
}

/// Bivariate polynomial `sum c[a][b] u^a v^b`, dense, `du x dv` coefficients.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Biv {
    du: usize,
    dv: usize,
    c: Vec<Fe>,
}

impl Biv {
    pub fn zero(du: usize, dv: usize) -> Biv {
        Biv { du, dv, c: vec![Fe::ZERO; du * dv] }
    }

    pub fn get(&self, a: usize, b: usize) -> Fe {
        if a < self.du && b < self.dv {
            self.c[a * self.dv + b]
        } else {
            Fe::ZERO
        }
    }

    fn set(&mut self, a: usize, b: usize, x: Fe) {
        self.c[a * self.dv + b] = x;
    }

    /// `p(u) * r(v)`.
    fn outer(p: &Poly, r: &Poly, du: usize, dv: usize, f: &Gf) -> Biv {
        let mut out = Biv::zero(du, dv);
        for (a, &x) in p.coeffs().iter().enumerate() {
            for (b, &y) in r.coeffs().iter().enumerate() {
                out.set(a, b, f.mul(x, y));
            }
        }
        out
    }

    fn add(&self, other: &Biv, f: &Gf) -> Biv {
        let du = self.du.max(other.du);
        let dv = self.dv.max(other.dv);
        let mut out = Biv::zero(du, dv);
        for a in 0..du {
            for b in 0..dv {
                out.set(a, b, f.add(self.get(a, b), other.get(a, b)));
            }
        }
        out
    }

    fn scale(&self, x: Fe, f: &Gf) -> Biv {
        Biv { du: self.du, dv: self.dv, c: self.c.iter().map(|&c| f.mul(c, x)).collect() }
    }

    fn mul(&self, other: &Biv, f: &Gf) -> Biv {
        let mut out = Biv::zero(self.du + other.du - 1, self.dv + other.dv - 1);
        for a in 0..self.du {
            for b in 0..self.dv {
                let x = self.get(a, b);
                if x == Fe::ZERO {
                    continue;
                }
                for c in 0..other.du {
                    for d in 0..other.dv {
                        let y = other.get(c, d);
                        let cur = out.get(a + c, b + d);
                        out.set(a + c, b + d, f.add(cur, f.mul(x, y)));
                    }
                }
            }
        }
        out
    }

    /// Reduces modulo `fu` in u and `gv` in v, leaving `deg fu x deg gv` coefficients.
    fn reduce(&self, fu: &Poly, gv: &Poly, f: &Gf) -> Biv {
        let k = fu.degree().unwrap();
        let l = gv.degree().unwrap();
        let mut cols = Biv::zero(k, self.dv);
        for b in 0..self.dv {
            let col = Poly::new((0..self.du).map(|a| self.get(a, b)).collect()).rem(fu, f);
            for (a, &x) in col.coeffs().iter().enumerate() {
                cols.set(a, b, x);
            }
        }
        let mut out = Biv::zero(k, l);
        for a in 0..k {
            let row = Poly::new((0..cols.dv).map(|b| cols.get(a, b)).collect()).rem(gv, f);
            for (b, &x) in row.coeffs().iter().enumerate() {
                out.set(a, b, x);
            }
        }
        out
    }

    fn eval(&self, u: Fe, v: Fe, f: &Gf) -> Fe {
        let mut acc = Fe::ZERO;
        for a in (0..self.du).rev() {
            let mut row = Fe::ZERO;
            for b in (0..self.dv).rev() {
                row = f.add(f.mul(row, v), self.get(a, b));
            }
            acc = f.add(f.mul(acc, u), row);
        }
        acc
    }

    pub fn is_zero(&self) -> bool {
        self.c.iter().all(|&x| x == Fe::ZERO)
    }

    /// Human form with terms by descending u-degree, then v-degree, e.g. `uv^2+uv+1`.
    pub fn fmt_with(&self, f: &Gf) -> String {
        let mut terms = Vec::new();
        for a in (0..self.du).rev() {
            for b in (0..self.dv).rev() {
                let x = self.get(a, b);
                if x == Fe::ZERO {
                    continue;
                }
                let mut mono = String::new();
                if a > 0 {
                    mono.push('u');
                    if a > 1 {
                        mono.push_str(&format!("^{a}"));
                    }
                }
                if b > 0 {
                    mono.push('v');
                    if b > 1 {
                        mono.push_str(&format!("^{b}"));
                    }
                }
                let mut coeff = f.fmt_elem(x);
                if coeff.contains('+') {
                    coeff = format!("({coeff})");
                }
                terms.push(match (mono.is_empty(), x == Fe::ONE) {
                    (true, _) => coeff,
                    (false, true) => mono,
                    (false, false) => format!("{coeff}{mono}"),
                });
            }
        }
        if terms.is_empty() {
            "0".into()
        } else {
            terms.join("+")
        }
    }

    fn term_count(&self) -> usize {
        self.c.iter().filter(|&&x| x != Fe::ZERO).count()
    }
}

/// R with its CRT idempotents `eta_ij = eps_i(u) gam_j(v)`.
#[derive(Debug)]
pub struct RingSpec {
    field: Arc<Gf>,
    alpha: Vec<Fe>,
    beta: Vec<Fe>,
    f: Poly,
    g: Poly,
    eps: Vec<Poly>,
    gam: Vec<Poly>,
    eta: Vec<Biv>,
}

/// Serialized ring: `{q, alpha, beta}` with roots as element indices.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RingJson {
    pub q: FieldDesc,
    pub alpha: Vec<u32>,
    pub beta: Vec<u32>,
}

fn lagrange(field: &Gf, roots: &[Fe]) -> Vec<Poly> {
    if roots.len() == 1 {
        return vec![Poly::one()];
    }
    roots
        .iter()
        .enumerate()
        .map(|(i, &ai)| {
            let mut num = Poly::one();
            let mut den = Fe::ONE;
            for (r, &ar) in roots.iter().enumerate() {
                if r != i {
                    num = num.mul(&Poly::new(vec![field.neg(ar), Fe::ONE]), field);
                    den = field.mul(den, field.sub(ai, ar));
                }
            }
            num.scale(field.inv(den).expect("distinct roots"), field)
        })
        .collect()
}

fn product_of_linears(field: &Gf, roots: &[Fe]) -> Poly {
    roots.iter().fold(Poly::one(), |acc, &r| acc.mul(&Poly::new(vec![field.neg(r), Fe::ONE]), field))
}

/// Builds R from the roots of f and g and checks that the `eta_ij` are
/// orthogonal idempotents summing to 1.
pub fn build_ring(field: Arc<Gf>, alpha: Vec<Fe>, beta: Vec<Fe>) -> Result<Arc<RingSpec>, RingError> {
    for roots in [&alpha, &beta] {
        for (i, &r) in roots.iter().enumerate() {
            if r.0 >= field.q() {
                return Err(RingError::RootOutOfField(r.0));
            }
            if roots[..i].contains(&r) {
                return Err(RingError::DuplicateRoot(r));
            }
        }
    }
    if alpha.is_empty() || beta.is_empty() {
        return Err(RingError::NotSplit("an empty root list"));
    }
    if alpha.len() == 1 && beta.len() == 1 {
        return Err(RingError::TrivialRing);
    }
    let fq = field.as_ref();
    let eps = lagrange(fq, &alpha);
    let gam = lagrange(fq, &beta);
    let (k, l) = (alpha.len(), beta.len());
    let mut eta = Vec::with_capacity(k * l);
    for e in &eps {
        for g in &gam {
            eta.push(Biv::outer(e, g, k, l, fq));
        }
    }
    let ring = RingSpec {
        f: product_of_linears(fq, &alpha),
        g: product_of_linears(fq, &beta),
        field,
        alpha,
        beta,
        eps,
        gam,
        eta,
    };
    ring.check_idempotents()?;
    Ok(Arc::new(ring))
}

/// Roots of a split separable polynomial given by integer coefficients, in
/// ascending element order.
pub fn split_roots(field: &Gf, coeffs: &[i64], name: &'static str) -> Result<Vec<Fe>, RingError> {
    let p = Poly::from_ints(field, coeffs);
    let deg = p.degree().ok_or(RingError::NotSplit(name))?;
    let roots: Vec<Fe> = field.elements().filter(|&x| p.eval(x, field) == Fe::ZERO).collect();
    if roots.len() != deg {
        return Err(RingError::NotSplit(name));
    }
    Ok(roots)
}

impl RingSpec {
    pub fn check_idempotents(&self) -> Result<(), RingError> {
        let f = self.field.as_ref();
        let kl = self.eta.len();
        let mut sum = Biv::zero(self.k(), self.l());
        for a in 0..kl {
            sum = sum.add(&self.eta[a], f);
            for b in a..kl {
                let prod = self.eta[a].mul(&self.eta[b], f).reduce(&self.f, &self.g, f);
                let want = if a == b { self.eta[a].clone() } else { Biv::zero(self.k(), self.l()) };
                if prod != want {
                    return Err(RingError::IdempotentCheck(format!("eta_{} eta_{}", self.label(a), self.label(b))));
                }
            }
        }
        let mut one = Biv::zero(self.k(), self.l());
        one.set(0, 0, Fe::ONE);
        if sum != one {
            return Err(RingError::IdempotentCheck("sum of eta_ij".into()));
        }
        Ok(())
    }

    pub fn field(&self) -> &Arc<Gf> {
        &self.field
    }

    pub fn k(&self) -> usize {
        self.alpha.len()
    }

    pub fn l(&self) -> usize {
        self.beta.len()
    }

    pub fn kl(&self) -> usize {
        self.k() * self.l()
    }

    pub fn alpha(&self) -> &[Fe] {
        &self.alpha
    }

    pub fn beta(&self) -> &[Fe] {
        &self.beta
    }

    pub fn f(&self) -> &Poly {
        &self.f
    }

    pub fn g(&self) -> &Poly {
        &self.g
    }

    pub fn eps(&self) -> &[Poly] {
        &self.eps
    }

    pub fn gam(&self) -> &[Poly] {
        &self.gam
    }

    /// `eta` at CRT position `idx`.
    pub fn eta(&self, idx: usize) -> &Biv {
        &self.eta[idx]
    }

    /// `log_q |R|`.
    pub fn log_size(&self) -> usize {
        self.kl()
    }

    pub fn label(&self, idx: usize) -> String {
        format!("{}{}", idx / self.l() + 1, idx % self.l() + 1)
    }

    /// Parses `"ij"` (or `"i,j"` when an index exceeds 9) into a CRT position.
    pub fn index_of(&self, label: &str) -> Result<usize, RingError> {
        let bad = || RingError::BadLabel(label.to_string());
        let (i, j) = match label.split_once(',') {
            Some((a, b)) => (a.trim().parse::<usize>().map_err(|_| bad())?, b.trim().parse::<usize>().map_err(|_| bad())?),
            None => {
                let ds: Vec<u32> = label.chars().map(|c| c.to_digit(10)).collect::<Option<_>>().ok_or_else(bad)?;
                if ds.len() != 2 {
                    return Err(bad());
                }
                (ds[0] as usize, ds[1] as usize)
            }
        };
        if i == 0 || j == 0 || i > self.k() || j > self.l() {
            return Err(bad());
        }
        Ok((i - 1) * self.l() + (j - 1))
    }

    pub fn to_json(&self) -> RingJson {
        RingJson {
            q: self.field.desc(),
            alpha: self.alpha.iter().map(|x| x.0).collect(),
            beta: self.beta.iter().map(|x| x.0).collect(),
        }
    }

    pub fn from_json(j: &RingJson) -> Result<Arc<RingSpec>, RingError> {
        let field = Gf::from_desc(&j.q)?;
        build_ring(field, j.alpha.iter().map(|&x| Fe(x)).collect(), j.beta.iter().map(|&x| Fe(x)).collect())
    }

    /// `sum a_ij eta_ij` as a reduced bivariate polynomial.
    pub fn to_biv(&self, x: &RElement) -> Biv {
        let f = self.field.as_ref();
        x.0.iter().zip(&self.eta).fold(Biv::zero(self.k(), self.l()), |acc, (&a, e)| acc.add(&e.scale(a, f), f))
    }

    /// Values of a bivariate polynomial at every `(alpha_i, beta_j)`.
    pub fn from_biv(&self, b: &Biv) -> RElement {
        let f = self.field.as_ref();
        RElement(
            self.alpha
                .iter()
                .flat_map(|&a| self.beta.iter().map(move |&bb| (a, bb)))
                .map(|(a, bb)| b.eval(a, bb, f))
                .collect(),
        )
    }

    pub fn one(&self) -> RElement {
        RElement(vec![Fe::ONE; self.kl()])
    }

    pub fn zero(&self) -> RElement {
        RElement(vec![Fe::ZERO; self.kl()])
    }

    /// The idempotent `eta_ij` in CRT form.
    pub fn eta_elem(&self, idx: usize) -> RElement {
        let mut v = vec![Fe::ZERO; self.kl()];
        v[idx] = Fe::ONE;
        RElement(v)
    }
}

/// Element of R by its values at the root pairs, in CRT order.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct RElement(pub Vec<Fe>);

impl RElement {
    pub fn add(&self, o: &RElement, f: &Gf) -> RElement {
        RElement(self.0.iter().zip(&o.0).map(|(&a, &b)| f.add(a, b)).collect())
    }

    pub fn mul(&self, o: &RElement, f: &Gf) -> RElement {
        RElement(self.0.iter().zip(&o.0).map(|(&a, &b)| f.mul(a, b)).collect())
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(|&x| x == Fe::ZERO)
    }
}

/// Polynomial in R[x]/(x^n - 1), held as its kl component polynomials.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RPoly {
    pub n: usize,
    pub components: Vec<Poly>,
}

impl RPoly {
    pub fn from_components(n: usize, components: Vec<Poly>) -> RPoly {
        RPoly { n, components }
    }

    pub fn add(&self, o: &RPoly, amb: &CyclicAmbient) -> RPoly {
        RPoly { n: self.n, components: self.components.iter().zip(&o.components).map(|(a, b)| amb.add(a, b)).collect() }
    }

    pub fn sub(&self, o: &RPoly, amb: &CyclicAmbient) -> RPoly {
        RPoly { n: self.n, components: self.components.iter().zip(&o.components).map(|(a, b)| amb.sub(a, b)).collect() }
    }

    pub fn mul(&self, o: &RPoly, amb: &CyclicAmbient) -> RPoly {
        RPoly {
            n: self.n,
            components: self.components.iter().zip(&o.components).map(|(a, b)| amb.mul_mod(a, b)).collect(),
        }
    }

    pub fn multiplier(&self, a: i64, amb: &CyclicAmbient) -> Result<RPoly, PolyError> {
        Ok(RPoly {
            n: self.n,
            components: self.components.iter().map(|p| amb.multiplier_apply(a, p)).collect::<Result<_, _>>()?,
        })
    }

    pub fn is_zero(&self) -> bool {
        self.components.iter().all(|p| p.is_zero())
    }

    pub fn constant(n: usize, c: &RElement) -> RPoly {
        RPoly { n, components: c.0.iter().map(|&x| Poly::constant(x)).collect() }
    }

    /// Coefficient of `x^t` as an element of R.
    pub fn coeff(&self, t: usize) -> RElement {
        RElement(self.components.iter().map(|p| p.coeff(t)).collect())
    }

    /// Descending powers of x with bivariate coefficients, e.g.
    /// `x^2(12uv^2+12uv+3)+x(uv^2+uv+1)+9`.
    pub fn display(&self, ring: &RingSpec) -> String {
        let f = ring.field().as_ref();
        let mut parts = Vec::new();
        for t in (0..self.n).rev() {
            let b = ring.to_biv(&self.coeff(t));
            if b.is_zero() {
                continue;
            }
            let body = b.fmt_with(f);
            let xs = match t {
                0 => String::new(),
                1 => "x".into(),
                _ => format!("x^{t}"),
            };
            parts.push(match (t, b.term_count() > 1 || body.contains('+'), body.as_str()) {
                (0, _, _) => body.clone(),
                (_, true, _) => format!("{xs}({body})"),
                (_, false, "1") => xs,
                (_, false, _) => format!("{body}{xs}"),
            });
        }
        if parts.is_empty() {
            "0".into()
        } else {
            parts.join("+")
        }
    }

    /// Parses human notation in x, u, v over the prime subfield, e.g.
    /// `-x^2(uv^2+uv-3)+x(uv^2+uv+1)+9`. Powers of x are read modulo x^n - 1
    /// and u, v are evaluated at the ring's roots.
    pub fn parse(ring: &RingSpec, n: usize, input: &str) -> Result<RPoly, RingError> {
        let terms = notation::parse(input).map_err(|msg| RingError::Parse { input: input.to_string(), msg })?;
        let f = ring.field().as_ref();
        let mut by_x: BTreeMap<usize, Biv> = BTreeMap::new();
        for ([ex, eu, ev], c) in terms {
            let entry = by_x.entry(ex as usize % n).or_insert_with(|| Biv::zero(1, 1));
            let mut mono = Biv::zero(eu as usize + 1, ev as usize + 1);
            mono.set(eu as usize, ev as usize, f.from_int(c));
            *entry = entry.add(&mono, f);
        }
        let mut components = vec![vec![Fe::ZERO; n]; ring.kl()];
        for (t, b) in by_x {
            for (idx, v) in ring.from_biv(&b).0.into_iter().enumerate() {
                components[idx][t] = v;
            }
        }
        Ok(RPoly { n, components: components.into_iter().map(Poly::new).collect() })
    }
}

/// Small recursive-descent parser for sums of products of integers, `x`, `u`,
/// `v`, powers and parentheses. Produces integer coefficients by exponent triple.
mod notation {
    use std::collections::BTreeMap;

    pub type Terms = BTreeMap<[u32; 3], i64>;

    struct P<'a> {
        s: &'a [char],
        i: usize,
    }

    fn mul(a: &Terms, b: &Terms) -> Terms {
        let mut out = Terms::new();
        for (ea, ca) in a {
            for (eb, cb) in b {
                let e = [ea[0] + eb[0], ea[1] + eb[1], ea[2] + eb[2]];
                *out.entry(e).or_insert(0) += ca * cb;
            }
        }
        out.retain(|_, c| *c != 0);
        out
    }

    fn one() -> Terms {
        Terms::from([([0, 0, 0], 1)])
    }

    impl P<'_> {
        fn peek(&self) -> Option<char> {
            self.s.get(self.i).copied()
        }

        fn number(&mut self) -> Option<u64> {
            let start = self.i;
            while self.peek().is_some_and(|c| c.is_ascii_digit()) {
                self.i += 1;
            }
            if start == self.i {
                None
            } else {
                self.s[start..self.i].iter().collect::<String>().parse().ok()
            }
        }

        fn expr(&mut self) -> Result<Terms, String> {
            let mut acc = Terms::new();
            let mut first = true;
            loop {
                let sign = match self.peek() {
                    Some('+') => {
                        self.i += 1;
                        1
                    }
                    Some('-') | Some('−') => {
                        self.i += 1;
                        -1
                    }
                    _ if first => 1,
                    _ => break,
                };
                first = false;
                let t = self.term()?;
                for (e, c) in t {
                    *acc.entry(e).or_insert(0) += sign * c;
                }
            }
            acc.retain(|_, c| *c != 0);
            Ok(acc)
        }

        fn term(&mut self) -> Result<Terms, String> {
            let mut acc = one();
            let mut any = false;
            while let Some(c) = self.peek() {
                let factor = match c {
                    '0'..='9' => {
                        let v = self.number().ok_or("bad number")? as i64;
                        Terms::from([([0, 0, 0], v)])
                    }
                    'x' | 'u' | 'v' => {
                        self.i += 1;
                        let mut e = 1;
                        if self.peek() == Some('^') {
                            self.i += 1;
                            e = self.number().ok_or("expected exponent")? as u32;
                        }
                        let mut exps = [0u32; 3];
                        exps[match c {
                            'x' => 0,
                            'u' => 1,
                            _ => 2,
                        }] = e;
                        Terms::from([(exps, 1)])
                    }
                    '(' => {
                        self.i += 1;
                        let inner = self.expr()?;
                        if self.peek() != Some(')') {
                            return Err(format!("expected ')' at {}", self.i));
                        }
                        self.i += 1;
                        inner
                    }
                    '*' => {
                        self.i += 1;
                        continue;
                    }
                    _ => break,
                };
                acc = mul(&acc, &factor);
                any = true;
            }
            if any {
                Ok(acc)
            } else {
                Err(format!("expected a term at {}", self.i))
            }
        }
    }

    pub fn parse(input: &str) -> Result<Terms, String> {
        let chars: Vec<char> = input.chars().filter(|c| !c.is_whitespace()).collect();
        let mut p = P { s: &chars, i: 0 };
        let t = p.expr()?;
        if p.i != chars.len() {
            return Err(format!("unexpected {:?} at {}", chars[p.i], p.i));
        }
        Ok(t)
    }
}

/// A code over R: `C = ⊕ eta_ij C_ij` with one cyclic component per CRT position.
#[derive(Clone, Debug)]
pub struct RCode {
    pub n: usize,
    pub ring: Arc<RingSpec>,
    pub components: Vec<CyclicCode>,
}

/// Serialized code over R: `{n, ring, components: {"ij": defining_set}}`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RCodeJson {
    pub n: usize,
    pub ring: RingJson,
    pub components: BTreeMap<String, Vec<usize>>,
}

impl PartialEq for RCode {
    fn eq(&self, other: &Self) -> bool {
        self.n == other.n && self.components == other.components
    }
}

impl RCode {
    pub fn new(ring: Arc<RingSpec>, components: Vec<CyclicCode>) -> Result<RCode, RingError> {
        if components.len() != ring.kl() {
            return Err(RingError::LengthMismatch(components.len(), ring.kl()));
        }
        let n = components.first().map(|c| c.n).unwrap_or(0);
        if let Some(c) = components.iter().find(|c| c.n != n) {
            return Err(RingError::LengthMismatch(n, c.n));
        }
        Ok(RCode { n, ring, components })
    }

    pub fn from_defining_sets(ring: Arc<RingSpec>, amb: &CyclicAmbient, sets: &[Vec<usize>]) -> Result<RCode, RingError> {
        let comps = sets.iter().map(|t| amb.code(t)).collect::<Result<Vec<_>, _>>()?;
        RCode::new(ring, comps)
    }

    pub fn to_json(&self) -> RCodeJson {
        RCodeJson {
            n: self.n,
            ring: self.ring.to_json(),
            components: self
                .components
                .iter()
                .enumerate()
                .map(|(i, c)| (self.ring.label(i), c.defining_set.clone()))
                .collect(),
        }
    }

    /// `log_q |C| = sum_ij dim C_ij`.
    pub fn log_size(&self) -> usize {
        self.components.iter().map(|c| c.dimension).sum()
    }

    /// `sum eta_ij e_ij`.
    pub fn idempotent(&self) -> RPoly {
        RPoly::from_components(self.n, self.components.iter().map(|c| c.idempotent.clone()).collect())
    }

    /// `sum eta_ij g_ij`.
    pub fn generator(&self) -> RPoly {
        RPoly::from_components(self.n, self.components.iter().map(|c| c.generator.clone()).collect())
    }

    fn map<F: Fn(&CyclicCode) -> Result<CyclicCode, CyclicError>>(&self, op: F) -> Result<RCode, RingError> {
        let comps = self.components.iter().map(op).collect::<Result<Vec<_>, _>>()?;
        Ok(RCode { n: self.n, ring: self.ring.clone(), components: comps })
    }

    fn zip<F: Fn(&CyclicCode, &CyclicCode) -> Result<CyclicCode, CyclicError>>(
        &self,
        o: &RCode,
        op: F,
    ) -> Result<RCode, RingError> {
        if o.n != self.n || o.components.len() != self.components.len() {
            return Err(RingError::LengthMismatch(self.n, o.n));
        }
        let comps = self.components.iter().zip(&o.components).map(|(a, b)| op(a, b)).collect::<Result<Vec<_>, _>>()?;
        Ok(RCode { n: self.n, ring: self.ring.clone(), components: comps })
    }

    /// `C^⊥ = ⊕ eta_ij C_ij^⊥`.
    pub fn dual(&self, amb: &CyclicAmbient) -> Result<RCode, RingError> {
        self.map(|c| amb.dual(c))
    }

    pub fn apply_multiplier(&self, a: i64, amb: &CyclicAmbient) -> Result<RCode, RingError> {
        self.map(|c| amb.apply_multiplier(a, c))
    }

    pub fn intersect(&self, o: &RCode, amb: &CyclicAmbient) -> Result<RCode, RingError> {
        self.zip(o, |a, b| amb.intersect(a, b))
    }

    pub fn sum(&self, o: &RCode, amb: &CyclicAmbient) -> Result<RCode, RingError> {
        self.zip(o, |a, b| amb.sum(a, b))
    }

    /// The code with the same ambient and every component equal to `c`.
    pub fn uniform(ring: Arc<RingSpec>, c: &CyclicCode) -> RCode {
        let comps = vec![c.clone(); ring.kl()];
        RCode { n: c.n, ring, components: comps }
    }

    pub fn is_zero(&self) -> bool {
        self.components.iter().all(|c| c.is_zero())
    }
}

/// Blocks `A_1..A_m` of CRT positions and the idempotents `theta_t = sum_{ij in A_t} eta_ij`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PartitionTheta {
    pub m: usize,
    pub blocks: Vec<Vec<usize>>,
}

/// Serialized partition: `{blocks: [["11","12"],["21"],...]}`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PartitionJson {
    pub blocks: Vec<Vec<String>>,
}

impl PartitionTheta {
    /// Validates the block convention: m nonempty blocks when `kl >= m`;
    /// otherwise kl singletons and `m - kl` empty blocks. When `kl < m` and
    /// only the kl singletons are given, the empty blocks are appended.
    pub fn new(kl: usize, m: usize, mut blocks: Vec<Vec<usize>>) -> Result<PartitionTheta, RingError> {
        let bad = |s: String| Err(RingError::PartitionMismatch(s));
        if kl < m && blocks.len() == kl {
            blocks.resize(m, Vec::new());
        }
        if blocks.len() != m {
            return bad(format!("{} blocks for m = {m}", blocks.len()));
        }
        let mut seen = vec![false; kl];
        for b in &blocks {
            for &i in b {
                if i >= kl || std::mem::replace(&mut seen[i], true) {
                    return bad(format!("index {i} repeated or out of range"));
                }
            }
        }
        if seen.iter().any(|&s| !s) {
            return bad("blocks do not cover every eta_ij".into());
        }
        if kl >= m && blocks.iter().any(|b| b.is_empty()) {
            return bad("empty block while kl >= m".into());
        }
        if kl < m && blocks.iter().any(|b| b.len() > 1) {
            return bad("blocks must be singletons while kl < m".into());
        }
        for b in blocks.iter_mut() {
            b.sort_unstable();
        }
        Ok(PartitionTheta { m, blocks })
    }

    pub fn from_labels(ring: &RingSpec, m: usize, labels: &[Vec<String>]) -> Result<PartitionTheta, RingError> {
        let blocks = labels
            .iter()
            .map(|b| b.iter().map(|l| ring.index_of(l)).collect::<Result<Vec<_>, _>>())
            .collect::<Result<Vec<_>, _>>()?;
        PartitionTheta::new(ring.kl(), m, blocks)
    }

    pub fn to_json(&self, ring: &RingSpec) -> PartitionJson {
        PartitionJson { blocks: self.blocks.iter().map(|b| b.iter().map(|&i| ring.label(i)).collect()).collect() }
    }

    /// Block number of every CRT position.
    pub fn block_of(&self, kl: usize) -> Vec<usize> {
        let mut v = vec![0; kl];
        for (t, b) in self.blocks.iter().enumerate() {
            for &i in b {
                v[i] = t;
            }
        }
        v
    }

    pub fn theta(&self, ring: &RingSpec, t: usize) -> RElement {
        let mut v = vec![Fe::ZERO; ring.kl()];
        for &i in &self.blocks[t] {
            v[i] = Fe::ONE;
        }
        RElement(v)
    }

    /// `(r_1, .., r_m)`.
    pub fn sizes(&self) -> Vec<usize> {
        self.blocks.iter().map(|b| b.len()).collect()
    }
}

/// Which F_q family feeds the components.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum CodeKind {
    /// Even-like, from the `C_i` (idempotents `e_i`).
    P,
    /// Even-like, from the `C_i'` (idempotents `e_i'`).
    #[serde(rename = "P'")]
    PPrime,
    /// Odd-like, from the `D_i` (idempotents `d_i`).
    T,
    /// Odd-like, from the `D_i'` (idempotents `d_i'`).
    #[serde(rename = "T'")]
    TPrime,
}

impl CodeKind {
    pub const ALL: [CodeKind; 4] = [CodeKind::P, CodeKind::T, CodeKind::PPrime, CodeKind::TPrime];

    pub fn family<'a>(&self, fam: &'a PolyadicFamily) -> &'a [CyclicCode] {
        match self {
            CodeKind::P => &fam.c,
            CodeKind::PPrime => &fam.c_prime,
            CodeKind::T => &fam.d,
            CodeKind::TPrime => &fam.d_prime,
        }
    }

    pub fn name(&self) -> &'static str {
        match self {
            CodeKind::P => "P",
            CodeKind::PPrime => "P'",
            CodeKind::T => "T",
            CodeKind::TPrime => "T'",
        }
    }

    pub fn is_odd_like(&self) -> bool {
        matches!(self, CodeKind::T | CodeKind::TPrime)
    }
}

impl std::str::FromStr for CodeKind {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "P" => Ok(CodeKind::P),
            "P'" | "Pp" | "P_prime" => Ok(CodeKind::PPrime),
            "T" => Ok(CodeKind::T),
            "T'" | "Tp" | "T_prime" => Ok(CodeKind::TPrime),
            _ => Err(format!("unknown code kind {s:?}")),
        }
    }
}

impl fmt::Display for CodeKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// The i-th (0-based) polyadic code of the given kind: the component at a
/// position in block `A_t` is family code number `(t - i) mod m`. For
/// `i = 0, kind = T` this is `F_1 = sum theta_t d_t`; higher `i` are the
/// `mu_a` rotations.
pub fn polyadic_code_r(
    ring: &Arc<RingSpec>,
    fam: &PolyadicFamily,
    part: &PartitionTheta,
    kind: CodeKind,
    i: usize,
) -> Result<RCode, RingError> {
    let m = fam.m();
    if part.m != m {
        return Err(RingError::PartitionMismatch(format!("partition has m = {}, family has m = {m}", part.m)));
    }
    if i >= m {
        return Err(RingError::PartitionMismatch(format!("index {i} out of range for m = {m}")));
    }
    let src = kind.family(fam);
    let block = part.block_of(ring.kl());
    let comps = block.iter().map(|&t| src[(t + m - i) % m].clone()).collect();
    RCode::new(ring.clone(), comps)
}

/// Components in block `b` are the sum of the codes `C_i`, `i in subsets[b]`
/// (0-based). Blocks must cover every CRT position exactly once.
pub fn generalized_idempotent_code(
    ring: &Arc<RingSpec>,
    amb: &CyclicAmbient,
    fam: &PolyadicFamily,
    blocks: &[Vec<usize>],
    subsets: &[Vec<usize>],
) -> Result<RCode, RingError> {
    if blocks.len() != subsets.len() {
        return Err(RingError::PartitionMismatch("one subset per block".into()));
    }
    let kl = ring.kl();
    let mut comps: Vec<Option<CyclicCode>> = vec![None; kl];
    for (b, sub) in blocks.iter().zip(subsets) {
        if let Some(&i) = sub.iter().find(|&&i| i >= fam.m()) {
            return Err(RingError::PartitionMismatch(format!("family index {} out of range", i + 1)));
        }
        let code = sub.iter().try_fold(amb.zero_code(), |acc, &i| amb.sum(&acc, &fam.c[i]))?;
        for &idx in b {
            if idx >= kl || comps[idx].is_some() {
                return Err(RingError::PartitionMismatch(format!("position {idx} repeated or out of range")));
            }
            comps[idx] = Some(code.clone());
        }
    }
    let comps = comps
        .into_iter()
        .collect::<Option<Vec<_>>>()
        .ok_or_else(|| RingError::PartitionMismatch("blocks do not cover every eta_ij".into()))?;
    RCode::new(ring.clone(), comps)
}

/// `[n, k(C), d(C)]` with `k` the largest and `d` the smallest component value.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RParams {
    pub n: usize,
    pub k: usize,
    pub d: Distance,
    /// `log_q |C|`.
    pub log_size: usize,
}

pub fn rcode_params(c: &RCode, amb: &CyclicAmbient, budget: u64) -> RParams {
    let mut cache: HashMap<&[usize], Distance> = HashMap::new();
    let mut d = Distance::Undefined;
    for comp in &c.components {
        let dist = *cache
            .entry(comp.defining_set.as_slice())
            .or_insert_with(|| amb.generator_matrix(comp).min_distance(budget));
        d = d.min(dist);
    }
    RParams { n: c.n, k: c.components.iter().map(|x| x.dimension).max().unwrap_or(0), d, log_size: c.log_size() }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SizeCheck {
    /// Closed-form exponent of q.
    pub expected: usize,
    pub computed: usize,
    pub pass: bool,
}

/// Compares `log_q |C|` with the closed forms valid when `S_inf' = ∅`:
/// `P: kl(n-1)/m`, `T': kl(n+m-1)/m`, `P': kl(n-1)(m-1)/m`, `T: kl(mn-n+1)/m`.
pub fn rcode_sizes_check(c: &RCode, kind: CodeKind, fam: &PolyadicFamily) -> Result<SizeCheck, RingError> {
    if !fam.splitting.s_inf_prime().is_empty() {
        return Err(RingError::SInfPrimeNonEmpty);
    }
    let (kl, n, m) = (c.ring.kl(), c.n, fam.m());
    let num = match kind {
        CodeKind::P => kl * (n - 1),
        CodeKind::TPrime => kl * (n + m - 1),
        CodeKind::PPrime => kl * (n - 1) * (m - 1),
        CodeKind::T => kl * (m * n - n + 1),
    };
    let expected = num / m;
    let computed = c.log_size();
    Ok(SizeCheck { expected, computed, pass: num % m == 0 && expected == computed })
}

/// Smallest `gamma` (in element order) with `1 + gamma^2 n = 0`.
pub fn solve_gamma(n: usize, field: &Gf) -> Option<Fe> {
    let nn = field.from_int(n as i64);
    field.elements().find(|&g| field.add(Fe::ONE, field.mul(field.mul(g, g), nn)) == Fe::ZERO)
}

/// Sign of the appended coordinate.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum ExtensionSign {
    /// `c_inf = gamma * sum c_j`.
    #[default]
    Prose,
    /// `c_inf = -gamma * sum c_j`, the corner convention `-n gamma` of the
    /// displayed generator matrix.
    Negated,
}

/// A code over R of length n + 1, kept as per-component generator matrices.
#[derive(Clone, Debug)]
pub struct ExtendedRCode {
    pub n: usize,
    pub ring: Arc<RingSpec>,
    pub components: Vec<GeneratorMatrix>,
}

impl ExtendedRCode {
    pub fn log_size(&self) -> usize {
        self.components.iter().map(|g| g.k()).sum()
    }
}

/// Appends `c_inf = ±gamma * sum_j c_j` to every codeword, componentwise.
pub fn extend_code(c: &RCode, amb: &CyclicAmbient, gamma: Fe, sign: ExtensionSign) -> ExtendedRCode {
    let f = amb.field();
    let g = match sign {
        ExtensionSign::Prose => gamma,
        ExtensionSign::Negated => f.neg(gamma),
    };
    ExtendedRCode {
        n: c.n + 1,
        ring: c.ring.clone(),
        components: c.components.iter().map(|comp| amb.generator_matrix(comp).extend(g)).collect(),
    }
}

/// Number of inequivalent odd-like polyadic codes for a given `(kl, m)`:
/// `(2/m) * #(ordered partitions of kl into m nonempty blocks)` when `kl >= m`,
/// `(2/m) (kl)! C(m, kl)` otherwise.
pub fn count_inequivalent(kl: u64, m: u64) -> u128 {
    if kl >= m {
        // m! S(kl, m) by inclusion-exclusion
        let mut total: i128 = 0;
        for j in 0..=m {
            let term = arith::binomial(m, j) as i128 * ((m - j) as i128).pow(kl as u32);
            total += if j % 2 == 0 { term } else { -term };
        }
        2 * total as u128 / m as u128
    } else {
        2 * arith::factorial(kl) * arith::binomial(m, kl) / m as u128
    }
}
