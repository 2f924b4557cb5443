//! Regression suites: the published instances, the table of Gray images and
//! the identity suites for a single instance. Every claim becomes one
//! [`CheckResult`] carrying the expected and computed values.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::cyclic::CyclicCode;
use crate::gray::{gray_generator_matrix, lift_permutation, multiplier_permutation, GrayMatrix};
use crate::linalg::{codes_equal, griesmer_check, permuted_equal, Distance, GeneratorMatrix, Griesmer};
use crate::polyring::{CyclicAmbient, Poly};
use crate::reference::{self, Instance, InstanceError, InstanceSpec, TableEntry, TableFlag, TableRow};
use crate::ring_r::{
    generalized_idempotent_code, rcode_params, rcode_sizes_check, CodeKind, RCode, RPoly, RParams,
};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Status {
    Pass,
    Fail,
    /// Not checked, e.g. the enumeration would exceed the budget.
    Skipped,
    /// A known discrepancy with the published value, reported but not failed.
    Annotation,
}

impl fmt::Display for Status {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Status::Pass => "PASS",
            Status::Fail => "FAIL",
            Status::Skipped => "SKIPPED",
            Status::Annotation => "ANNOTATION",
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CheckResult {
    pub id: String,
    pub claim: String,
    pub status: Status,
    pub expected: String,
    pub computed: String,
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct Report {
    pub target: String,
    pub checks: Vec<CheckResult>,
}

impl Report {
    pub fn new(target: &str) -> Report {
        Report { target: target.to_string(), checks: Vec::new() }
    }

    pub fn push(&mut self, id: &str, claim: &str, status: Status, expected: impl ToString, computed: impl ToString) {
        self.checks.push(CheckResult {
            id: id.to_string(),
            claim: claim.to_string(),
            status,
            expected: expected.to_string(),
            computed: computed.to_string(),
        });
    }

    pub fn check(&mut self, id: &str, claim: &str, pass: bool, expected: impl ToString, computed: impl ToString) {
        let status = if pass { Status::Pass } else { Status::Fail };
        self.push(id, claim, status, expected, computed);
    }

    pub fn equal<T: PartialEq + fmt::Display>(&mut self, id: &str, claim: &str, expected: T, computed: T) {
        self.check(id, claim, expected == computed, expected, computed);
    }

    /// Passes when `failures` is empty; otherwise reports the first witness.
    pub fn holds(&mut self, id: &str, claim: &str, failures: Vec<String>) {
        let computed = match failures.first() {
            None => "holds".to_string(),
            Some(w) => format!("fails for {w} ({} case(s))", failures.len()),
        };
        self.check(id, claim, failures.is_empty(), "holds", computed);
    }

    pub fn skip(&mut self, id: &str, claim: &str, expected: impl ToString, reason: &str) {
        self.push(id, claim, Status::Skipped, expected, reason);
    }

    pub fn extend(&mut self, other: Report) {
        self.checks.extend(other.checks);
    }

    pub fn count(&self, s: Status) -> usize {
        self.checks.iter().filter(|c| c.status == s).count()
    }

    pub fn passed(&self) -> bool {
        self.count(Status::Fail) == 0
    }

    /// One line per check: `STATUS id: claim (expected ..., computed ...)`.
    pub fn lines(&self) -> Vec<String> {
        self.checks
            .iter()
            .map(|c| format!("{} {}: {} (expected {}, computed {})", c.status, c.id, c.claim, c.expected, c.computed))
            .collect()
    }
}

fn fmt_params(n: usize, k: usize, d: Distance) -> String {
    format!("[{n},{k},{d}]")
}

fn fmt_griesmer(g: Griesmer) -> String {
    match g {
        Griesmer::Attains { bound_sum } => format!("attains ({bound_sum})"),
        Griesmer::Slack { bound_sum, slack } => format!("slack {slack} ({bound_sum})"),
        Griesmer::Violates { bound_sum } => format!("violates ({bound_sum})"),
    }
}

fn within_budget(g: &GeneratorMatrix, budget: u64) -> bool {
    g.codeword_count() <= budget as u128
}

fn build(target: &str, spec: &InstanceSpec) -> Result<Instance, Report> {
    Instance::build(spec).map_err(|e: InstanceError| {
        let mut r = Report::new(target);
        r.check("instance.build", "the instance can be constructed", false, "constructed", e);
        r
    })
}

/// Uniform lift of a GF(q) polynomial to every CRT component.
fn lift(inst: &Instance, p: &Poly) -> RPoly {
    RPoly::from_components(inst.amb.n(), vec![p.clone(); inst.ring.kl()])
}

/// `sum_t theta_t * x_{(t - i) mod m}` computed with ring constants.
fn theta_sum(inst: &Instance, idems: &[Poly], i: usize) -> RPoly {
    let m = inst.m();
    let n = inst.amb.n();
    (0..m).fold(RPoly::constant(n, &inst.ring.zero()), |acc, t| {
        let theta = RPoly::constant(n, &inst.partition.theta(&inst.ring, t));
        acc.add(&theta.mul(&lift(inst, &idems[(t + m - i) % m]), &inst.amb), &inst.amb)
    })
}

fn gray_distance_check(r: &mut Report, id: &str, claim: &str, g: &GeneratorMatrix, expected: usize, budget: u64) {
    if within_budget(g, budget) {
        let d = g.min_distance(budget);
        r.check(id, claim, d == Distance::Exact(expected), expected, d);
    } else {
        r.skip(id, claim, expected, &format!("{}^{} codewords exceed the budget {budget}", g.field().q(), g.k()));
    }
}

fn rparams_check(r: &mut Report, id: &str, claim: &str, p: &RParams, expected: [usize; 3]) {
    let want = fmt_params(expected[0], expected[1], Distance::Exact(expected[2]));
    let got = fmt_params(p.n, p.k, p.d);
    r.check(id, claim, want == got, want, got);
}

fn griesmer_of(p: &RParams, q: u64) -> Option<Griesmer> {
    p.d.exact().map(|d| griesmer_check(p.n as u64, p.k as u64, d as u64, q))
}

pub fn example1(budget: u64) -> Report {
    let mut r = Report::new("example1");
    let inst = match build("example1", &reference::example1()) {
        Ok(i) => i,
        Err(rep) => return rep,
    };
    let q = inst.field.q() as u64;
    let p = rcode_params(&inst.code(CodeKind::P, 0), &inst.amb, budget);
    rparams_check(&mut r, "example1.p1_params", "P_1 has parameters [13,3,9]", &p, [13, 3, 9]);
    let g = griesmer_of(&p, q);
    r.check(
        "example1.p1_griesmer",
        "P_1 attains the Griesmer-type bound 9+3+1 = 13",
        g == Some(Griesmer::Attains { bound_sum: 13 }),
        "attains (13)",
        g.map_or("undetermined".into(), fmt_griesmer),
    );
    let t = rcode_params(&inst.code(CodeKind::T, 0), &inst.amb, budget);
    rparams_check(&mut r, "example1.t1_params", "T_1 has parameters [13,10,3]", &t, [13, 10, 3]);
    let g = griesmer_of(&t, q);
    r.check(
        "example1.t1_griesmer",
        "T_1 misses the Griesmer-type bound by one",
        g == Some(Griesmer::Slack { bound_sum: 12, slack: 1 }),
        "slack 1 (12)",
        g.map_or("undetermined".into(), fmt_griesmer),
    );
    let e: Vec<Poly> = inst.family.c.iter().map(|c| c.idempotent.clone()).collect();
    let e1 = inst.code(CodeKind::P, 0).idempotent();
    r.check(
        "example1.e1_theta_form",
        "E_1 = (eta_11+eta_12)e_1 + (eta_21+eta_22)e_2 + eta_31 e_3 + eta_32 e_4",
        theta_sum(&inst, &e, 0) == e1,
        "equal",
        if theta_sum(&inst, &e, 0) == e1 { "equal" } else { "different" },
    );
    r
}

pub fn example2(budget: u64) -> Report {
    let mut r = Report::new("example2");
    let inst = match build("example2", &reference::example2()) {
        Ok(i) => i,
        Err(rep) => return rep,
    };
    let p = rcode_params(&inst.code(CodeKind::P, 0), &inst.amb, budget);
    rparams_check(&mut r, "example2.p1_params", "P_1 has parameters [11,5,6]", &p, [11, 5, 6]);
    let g = griesmer_of(&p, inst.field.q() as u64);
    r.check(
        "example2.p1_griesmer",
        "P_1 attains the Griesmer-type bound 6+2+1+1+1 = 11",
        g == Some(Griesmer::Attains { bound_sum: 11 }),
        "attains (11)",
        g.map_or("undetermined".into(), fmt_griesmer),
    );
    r
}

/// Printed idempotents of the first even-like and odd-like codes.
pub const EXAMPLE3_E1: &str = "-x^2(uv^2+uv-3)+x(uv^2+uv+1)+9";
pub const EXAMPLE3_F1: &str = "-x^2(uv^2+uv+1)+x(uv^2+uv-3)+5";

pub fn example3(budget: u64) -> Report {
    let mut r = Report::new("example3");
    let inst = match build("example3", &reference::example3()) {
        Ok(i) => i,
        Err(rep) => return rep,
    };
    let amb = &inst.amb;
    let fam = &inst.family;
    r.equal("example3.e1", "e_1 = 3x^2+x+9", "3x^2+x+9".to_string(), amb.fmt_poly(fam.e(0)));
    r.equal("example3.e2", "e_2 = x^2+3x+9", "x^2+3x+9".to_string(), amb.fmt_poly(fam.e(1)));
    let swapped = amb.multiplier_apply(-1, fam.e(0)).ok() == Some(fam.e(1).clone())
        && amb.multiplier_apply(-1, fam.e(1)).ok() == Some(fam.e(0).clone());
    r.check("example3.neg_one_swaps", "mu_{-1} swaps e_1 and e_2", swapped, "swapped", swapped);
    r.check(
        "example3.s_inf_prime_empty",
        "S_inf' is empty",
        fam.splitting.s_inf_prime().is_empty(),
        "[]",
        format!("{:?}", fam.splitting.s_inf_prime()),
    );
    let lambda = inst.gray.lambda().map_or("none".to_string(), |l| l.0.to_string());
    r.equal("example3.lambda", "A A^T = 5 I over GF(13)", "5".to_string(), lambda);
    let gamma = inst.gamma.map_or("none".to_string(), |g| g.0.to_string());
    r.equal("example3.gamma", "gamma = 2 solves 1 + 3 gamma^2 = 0", "2".to_string(), gamma);

    let ring = &inst.ring;
    let p1 = inst.code(CodeKind::P, 0);
    let t1 = inst.code(CodeKind::T, 0);
    let e1 = p1.idempotent();
    let f1 = t1.idempotent();
    let f2 = inst.code(CodeKind::T, 1).idempotent();
    let parsed = |s: &str| RPoly::parse(ring, amb.n(), s);
    match parsed(EXAMPLE3_E1) {
        Ok(p) => r.check("example3.E1", "E_1 matches the printed string", p == e1, EXAMPLE3_E1, e1.display(ring)),
        Err(e) => r.check("example3.E1", "E_1 matches the printed string", false, EXAMPLE3_E1, e),
    }
    match parsed(EXAMPLE3_F1) {
        Ok(p) => {
            r.check("example3.F1", "F_1 matches the printed string", p == f1, EXAMPLE3_F1, f1.display(ring));
            r.check(
                "example3.F1_printed_is_F2",
                "the printed F_1 string equals the computed F_2 = mu_a(F_1)",
                p == f2,
                EXAMPLE3_F1,
                f2.display(ring),
            );
        }
        Err(e) => r.check("example3.F1", "F_1 matches the printed string", false, EXAMPLE3_F1, e),
    }

    let g = inst.gray_image(&p1);
    r.check("example3.phi_p1_self_orthogonal", "Phi(P_1) is self-orthogonal", g.is_self_orthogonal(), true, g.is_self_orthogonal());
    if within_budget(&g, budget) {
        let d = g.min_distance(budget);
        r.equal("example3.phi_p1_params", "Phi(P_1) is an [18,6,6] code", "[18,6,6]".to_string(), fmt_params(g.n(), g.k(), d));
    } else {
        r.skip("example3.phi_p1_params", "Phi(P_1) is an [18,6,6] code", "[18,6,6]", "budget below 13^6");
    }
    match inst.gray_extended(&t1) {
        Some(ge) => {
            let sd = ge.is_self_orthogonal() && 2 * ge.k() == ge.n();
            r.check(
                "example3.phi_t1_ext_self_dual",
                "Phi(extended T_1) is self-dual of length 24 and dimension 12",
                sd && ge.n() == 24,
                "self-dual [24,12]",
                format!("[{},{}] self-orthogonal={}", ge.n(), ge.k(), ge.is_self_orthogonal()),
            );
            gray_distance_check(&mut r, "example3.phi_t1_ext_distance", "Phi(extended T_1) has minimum distance 4", &ge, 4, budget);
        }
        None => r.check("example3.phi_t1_ext_self_dual", "gamma exists", false, "2", "none"),
    }
    r
}

fn structural_example(target: &str, spec: &InstanceSpec, printed: [[usize; 3]; 4], budget: u64) -> Report {
    let mut r = Report::new(target);
    let inst = match build(target, spec) {
        Ok(i) => i,
        Err(rep) => return rep,
    };
    for (kind, nkd) in [CodeKind::P, CodeKind::T, CodeKind::PPrime, CodeKind::TPrime].into_iter().zip(printed) {
        let name = format!("{kind}_1").to_lowercase().replace('\'', "p");
        let g = inst.gray_image(&inst.code(kind, 0));
        r.equal(
            &format!("{target}.phi_{name}_length_dim"),
            &format!("Phi({kind}_1) has length {} and dimension {}", nkd[0], nkd[1]),
            format!("[{},{}]", nkd[0], nkd[1]),
            format!("[{},{}]", g.n(), g.k()),
        );
        r.check(&format!("{target}.phi_{name}_lcd"), &format!("Phi({kind}_1) is LCD"), g.is_lcd(), true, g.is_lcd());
        gray_distance_check(
            &mut r,
            &format!("{target}.phi_{name}_distance"),
            &format!("Phi({kind}_1) has minimum distance {}", nkd[2]),
            &g,
            nkd[2],
            budget,
        );
    }
    r
}

pub fn example4(budget: u64) -> Report {
    structural_example("example4", &reference::example4(), [[76, 24, 22], [76, 36, 12], [76, 52, 18], [76, 28, 15]], budget)
}

pub fn example5(budget: u64) -> Report {
    structural_example("example5", &reference::example5(), [[68, 16, 28], [68, 52, 6], [68, 48, 8], [68, 20, 17]], budget)
}

pub fn remark(budget: u64) -> Report {
    let mut r = Report::new("remark");
    let spec = reference::remark();
    let inst = match build("remark", &spec.instance) {
        Ok(i) => i,
        Err(rep) => return rep,
    };
    let blocks: Vec<Vec<usize>> = match spec
        .blocks
        .iter()
        .map(|b| b.iter().map(|l| inst.ring.index_of(l)).collect::<Result<Vec<_>, _>>())
        .collect()
    {
        Ok(b) => b,
        Err(e) => {
            r.check("remark.build", "block labels resolve", false, "resolved", e);
            return r;
        }
    };
    let code = match generalized_idempotent_code(&inst.ring, &inst.amb, &inst.family, &blocks, &spec.subsets) {
        Ok(c) => c,
        Err(e) => {
            r.check("remark.build", "the generalized idempotent code can be constructed", false, "constructed", e);
            return r;
        }
    };
    // E = sum_b (sum_{i in I_b} eta_i) (sum_{j in subsets[b]} e_j)
    let n = inst.amb.n();
    let mut e = RPoly::constant(n, &inst.ring.zero());
    for (b, sub) in blocks.iter().zip(&spec.subsets) {
        let theta = b.iter().fold(inst.ring.zero(), |acc, &i| acc.add(&inst.ring.eta_elem(i), &inst.field));
        let s = sub.iter().fold(Poly::zero(), |acc, &j| inst.amb.add(&acc, inst.family.e(j)));
        e = e.add(&RPoly::constant(n, &theta).mul(&lift(&inst, &s), &inst.amb), &inst.amb);
    }
    let same = e == code.idempotent();
    r.check("remark.idempotent", "the code is generated by the idempotent E", same, "equal", if same { "equal" } else { "different" });
    let p = rcode_params(&code, &inst.amb, budget);
    rparams_check(&mut r, "remark.params", "the code has parameters [5,3,3]", &p, [5, 3, 3]);
    let g = griesmer_of(&p, inst.field.q() as u64);
    r.check(
        "remark.griesmer",
        "the code attains the Griesmer-type bound 3+1+1 = 5",
        g == Some(Griesmer::Attains { bound_sum: 5 }),
        "attains (5)",
        g.map_or("undetermined".into(), fmt_griesmer),
    );
    r
}

fn entry_matrix(inst: &Instance, e: &TableEntry) -> Option<GeneratorMatrix> {
    let c = inst.code(e.kind, 0);
    if e.extended {
        inst.gray_extended(&c)
    } else {
        Some(inst.gray_image(&c))
    }
}

fn table_row(row: &TableRow, budget: u64) -> Report {
    let tag = row.label.replace([' ', '='], "");
    let mut r = Report::new(&row.label);
    let inst = match Instance::build(&row.instance) {
        Ok(i) => {
            r.check(&format!("table1.{tag}.constructible"), "the row's ring, splitting and V exist", true, "constructed", "constructed");
            i
        }
        Err(e) => {
            r.check(&format!("table1.{tag}.constructible"), "the row's ring, splitting and V exist", false, "constructed", e);
            return r;
        }
    };
    if let Some(want) = row.gamma {
        let fmt = |g: Option<u32>| g.map_or("does not exist".to_string(), |g| g.to_string());
        r.equal(&format!("table1.{tag}.gamma"), "gamma solving 1 + gamma^2 n = 0", fmt(want), fmt(inst.gamma.map(|g| g.0)));
    }
    let m = inst.m();
    let kl = inst.ring.kl();
    let n = inst.amb.n();
    for e in &row.entries {
        let name = format!("{}{}", if e.extended { "ext_" } else { "" }, e.kind.name().replace('\'', "p").to_lowercase());
        let id = |what: &str| format!("table1.{tag}.{name}.{what}");
        let label = if e.extended { format!("Phi(extended {}_1)", e.kind) } else { format!("Phi({}_1)", e.kind) };
        let Some(g) = entry_matrix(&inst, e) else {
            r.check(&id("gamma"), &format!("{label} needs gamma"), false, "gamma exists", "no gamma");
            continue;
        };
        for (what, want, got) in [("length", e.n, g.n()), ("dimension", e.k, g.k())] {
            let claim = format!("{label} has {what} {want}");
            let status = if want == got { Status::Pass } else { Status::Annotation };
            r.push(&id(what), &claim, status, want, got);
        }
        gray_distance_check(&mut r, &id("distance"), &format!("{label} has minimum distance {}", e.d), &g, e.d, budget);
        match e.flag {
            TableFlag::Unflagged => {}
            TableFlag::Lcd => r.check(&id("lcd"), &format!("{label} is LCD"), g.is_lcd(), true, g.is_lcd()),
            TableFlag::SelfOrthogonal => {
                r.check(&id("self_orthogonal"), &format!("{label} is self-orthogonal"), g.is_self_orthogonal(), true, g.is_self_orthogonal())
            }
            TableFlag::SelfDual => r.check(&id("self_dual"), &format!("{label} is self-dual"), g.is_self_dual(), true, g.is_self_dual()),
            TableFlag::Isodual => {
                // the dual is the image of the next code, which is a multiplier image of this one
                let next = TableEntry { kind: e.kind, ..e.clone() };
                let other = inst.gray_extended(&inst.code(next.kind, 1 % m)).expect("gamma exists");
                let dual_is_next = codes_equal(&g.dual(), &other).unwrap_or(false);
                let perm = lift_permutation(&multiplier_permutation(n, inst.family.splitting.a, true), kl);
                let next_is_image = permuted_equal(&other, &g, &perm).unwrap_or(false);
                r.check(
                    &id("isodual"),
                    &format!("{label} is isodual: its dual is the multiplier image Phi(extended {}_2)", e.kind),
                    dual_is_next && next_is_image,
                    "dual = image, image = permuted",
                    format!("dual = image: {dual_is_next}, image = permuted: {next_is_image}"),
                );
            }
            TableFlag::EquivalentToDualOf(kind) => {
                let dual = inst.gray_image(&inst.code(kind, 0)).dual();
                let perm = lift_permutation(&multiplier_permutation(n, n - 1, false), kl);
                let eq = permuted_equal(&dual, &g, &perm).unwrap_or(false);
                r.check(
                    &id("equivalent_to_dual"),
                    &format!("{label} is mu_{{-1}}-equivalent to Phi({kind}_1)^perp"),
                    eq,
                    true,
                    eq,
                );
            }
        }
    }
    r
}

/// Every row of the table: constructibility, gamma, lengths and dimensions
/// (mismatches reported as annotations), distances within budget, and the
/// printed structural flags.
pub fn table1(budget: u64) -> Report {
    let mut r = Report::new("table1");
    for row in reference::table1() {
        r.extend(table_row(&row, budget));
    }
    r
}

fn subsets(m: usize) -> Vec<Vec<usize>> {
    (0u32..1 << m).filter(|s| s.count_ones() >= 2).map(|s| (0..m).filter(|&i| s >> i & 1 == 1).collect()).collect()
}

/// Algebra of idempotents in GF(q)[x]/(x^n - 1).
struct Idem<'a> {
    amb: &'a CyclicAmbient,
}

impl Idem<'_> {
    fn prod(&self, ps: &[Poly], idx: &[usize]) -> Poly {
        idx.iter().fold(Poly::one(), |acc, &i| self.amb.mul_mod(&acc, &ps[i]))
    }

    /// `sum p_i - sum p_i p_j + ...`, the idempotent of the sum of the ideals.
    fn incl_excl(&self, ps: &[Poly], idx: &[usize]) -> Poly {
        let mut acc = Poly::zero();
        for s in 1u32..1 << idx.len() {
            let pick: Vec<usize> = (0..idx.len()).filter(|&b| s >> b & 1 == 1).map(|b| idx[b]).collect();
            let term = self.prod(ps, &pick);
            acc = if pick.len() % 2 == 1 { self.amb.add(&acc, &term) } else { self.amb.sub(&acc, &term) };
        }
        acc
    }

    fn join(&self, a: &Poly, b: &Poly) -> Poly {
        self.amb.sub(&self.amb.add(a, b), &self.amb.mul_mod(a, b))
    }
}

/// Same algebra in R[x]/(x^n - 1).
struct RIdem<'a> {
    amb: &'a CyclicAmbient,
    one: RPoly,
}

impl RIdem<'_> {
    fn prod(&self, ps: &[RPoly], idx: &[usize]) -> RPoly {
        idx.iter().fold(self.one.clone(), |acc, &i| acc.mul(&ps[i], self.amb))
    }

    fn incl_excl(&self, ps: &[RPoly], idx: &[usize]) -> RPoly {
        let mut acc = RPoly::from_components(self.one.n, vec![Poly::zero(); self.one.components.len()]);
        for s in 1u32..1 << idx.len() {
            let pick: Vec<usize> = (0..idx.len()).filter(|&b| s >> b & 1 == 1).map(|b| idx[b]).collect();
            let term = self.prod(ps, &pick);
            acc = if pick.len() % 2 == 1 { acc.add(&term, self.amb) } else { acc.sub(&term, self.amb) };
        }
        acc
    }

    fn join(&self, a: &RPoly, b: &RPoly) -> RPoly {
        a.add(b, self.amb).sub(&a.mul(b, self.amb), self.amb)
    }
}

fn witnesses<I: IntoIterator<Item = (String, bool)>>(it: I) -> Vec<String> {
    it.into_iter().filter(|(_, ok)| !ok).map(|(w, _)| w).collect()
}

fn per_index(m: usize, f: impl Fn(usize) -> bool) -> Vec<String> {
    witnesses((0..m).map(|i| (format!("i={}", i + 1), f(i))))
}

fn per_subset(m: usize, f: impl Fn(&[usize]) -> bool) -> Vec<String> {
    witnesses(subsets(m).into_iter().map(|s| {
        let ok = f(&s);
        (format!("{:?}", s.iter().map(|i| i + 1).collect::<Vec<_>>()), ok)
    }))
}

fn idempotents(codes: &[CyclicCode]) -> Vec<Poly> {
    codes.iter().map(|c| c.idempotent.clone()).collect()
}

/// Lattice, idempotent and duality identities for the four GF(q) families.
pub fn field_identities(inst: &Instance) -> Report {
    let mut r = Report::new("field identities");
    let amb = &inst.amb;
    let fam = &inst.family;
    let m = fam.m();
    let all: Vec<usize> = (0..m).collect();
    let id = Idem { amb };
    let (one, zero, j) = (Poly::one(), Poly::zero(), amb.j_bar());
    let one_minus_j = amb.sub(&one, &j);
    let one_plus_j = amb.add(&one, &j);
    let (e, ep, d, dp) = (idempotents(&fam.c), idempotents(&fam.c_prime), idempotents(&fam.d), idempotents(&fam.d_prime));
    let pick = |codes: &[CyclicCode], idx: &[usize]| -> Vec<CyclicCode> { idx.iter().map(|&i| codes[i].clone()).collect() };
    let meet = |codes: &[CyclicCode], idx: &[usize]| amb.intersect_all(&pick(codes, idx)).expect("same length");
    let join = |codes: &[CyclicCode], idx: &[usize]| amb.sum_all(&pick(codes, idx)).expect("same length");
    let whole = amb.whole();
    let zero_code = amb.zero_code();
    let rep = amb.code(&(1..amb.n()).collect::<Vec<_>>()).expect("coset closed");
    let even = amb.code(&[0]).expect("coset closed");
    let one_mj = one_minus_j.clone();

    let c_meet = meet(&fam.c, &all);
    r.holds(
        "fq.even_meet_subfamily",
        "the intersection of all C_i equals that of any subfamily, with idempotent the product of the e_i",
        per_subset(m, |s| meet(&fam.c, s) == c_meet && meet(&fam.c, s).idempotent == id.prod(&e, s)),
    );
    r.holds(
        "fq.even_join_even_weight",
        "C_1 + ... + C_m is the even-weight code <1 - jbar>",
        witnesses([("sum".into(), join(&fam.c, &all) == even && even.idempotent == one_mj)]),
    );
    let d_join = join(&fam.d, &all);
    r.holds(
        "fq.odd_join_subfamily",
        "the sum of all D_i equals that of any subfamily, with idempotent given by inclusion-exclusion",
        per_subset(m, |s| join(&fam.d, s) == d_join && join(&fam.d, s).idempotent == id.incl_excl(&d, s)),
    );
    r.holds(
        "fq.odd_meet_repetition",
        "the intersection of all D_i is the repetition code <jbar>",
        witnesses([("meet".into(), meet(&fam.d, &all).idempotent == j && rep.idempotent == j)]),
    );
    r.holds(
        "fq.even_odd_complementary",
        "C_i + D_i is the whole space and C_i meets D_i in 0",
        per_index(m, |i| amb.sum(&fam.c[i], &fam.d[i]).unwrap() == whole && amb.intersect(&fam.c[i], &fam.d[i]).unwrap() == zero_code),
    );
    let e_all = id.prod(&e, &all);
    r.holds("fq.e_product_subfamily", "e_1 ... e_m equals the product over any subfamily", per_subset(m, |s| id.prod(&e, s) == e_all));
    let m_minus_1 = amb.field().from_int(m as i64 - 1);
    let sum_e = e.iter().fold(zero.clone(), |acc, x| amb.add(&acc, x));
    r.holds(
        "fq.e_sum_formula",
        "e_1 + ... + e_m - (m-1) e_1 ... e_m = 1 - jbar",
        witnesses([("sum".into(), amb.sub(&sum_e, &e_all.scale(m_minus_1, amb.field())) == one_minus_j)]),
    );
    let d_ie = id.incl_excl(&d, &all);
    r.holds(
        "fq.d_incl_excl_subfamily",
        "the inclusion-exclusion sum of the d_i equals that over any subfamily",
        per_subset(m, |s| id.incl_excl(&d, s) == d_ie),
    );
    r.holds("fq.d_product_jbar", "d_1 ... d_m = jbar", witnesses([("product".into(), id.prod(&d, &all) == j)]));
    r.holds(
        "fq.d_complements_e",
        "d_i = 1 - e_i and e_i d_i = 0",
        per_index(m, |i| d[i] == amb.sub(&one, &e[i]) && amb.mul_mod(&e[i], &d[i]).is_zero()),
    );

    r.holds(
        "fq.even_prime_meet_zero",
        "the intersection of all C_i' is 0 and e_1' ... e_m' = 0",
        witnesses([("meet".into(), meet(&fam.c_prime, &all).is_zero() && id.prod(&ep, &all).is_zero())]),
    );
    let cp_join = join(&fam.c_prime, &all);
    r.holds(
        "fq.even_prime_join_subfamily",
        "the sum of all C_i' equals that of any subfamily",
        per_subset(m, |s| join(&fam.c_prime, s) == cp_join && join(&fam.c_prime, s).idempotent == id.incl_excl(&ep, s)),
    );
    let dp_meet = meet(&fam.d_prime, &all);
    r.holds(
        "fq.odd_prime_meet_subfamily",
        "the intersection of all D_i' equals that of any subfamily",
        per_subset(m, |s| meet(&fam.d_prime, s) == dp_meet && meet(&fam.d_prime, s).idempotent == id.prod(&dp, s)),
    );
    r.holds(
        "fq.odd_prime_join_whole",
        "D_1' + ... + D_m' is the whole space",
        witnesses([("sum".into(), join(&fam.d_prime, &all) == whole)]),
    );
    r.holds(
        "fq.even_odd_prime_complementary",
        "C_i' + D_i' is the whole space and C_i' meets D_i' in 0",
        per_index(m, |i| {
            amb.sum(&fam.c_prime[i], &fam.d_prime[i]).unwrap() == whole
                && amb.intersect(&fam.c_prime[i], &fam.d_prime[i]).unwrap() == zero_code
        }),
    );
    let ep_ie = id.incl_excl(&ep, &all);
    r.holds(
        "fq.ep_incl_excl_subfamily",
        "the inclusion-exclusion sum of the e_i' equals that over any subfamily",
        per_subset(m, |s| id.incl_excl(&ep, s) == ep_ie),
    );
    let dp_all = id.prod(&dp, &all);
    r.holds("fq.dp_product_subfamily", "d_1' ... d_m' equals the product over any subfamily", per_subset(m, |s| id.prod(&dp, s) == dp_all));
    let sum_dp = dp.iter().fold(zero.clone(), |acc, x| amb.add(&acc, x));
    r.holds(
        "fq.dp_sum_formula",
        "d_1' + ... + d_m' - (m-1) d_1' ... d_m' = 1",
        witnesses([("sum".into(), amb.sub(&sum_dp, &dp_all.scale(m_minus_1, amb.field())) == one)]),
    );
    r.holds(
        "fq.dp_complements_ep",
        "d_i' = 1 - e_i' and e_i' d_i' = 0",
        per_index(m, |i| dp[i] == amb.sub(&one, &ep[i]) && amb.mul_mod(&ep[i], &dp[i]).is_zero()),
    );
    r.holds(
        "fq.even_plus_repetition",
        "C_i + <jbar> = D_i' and C_i meets <jbar> in 0",
        per_index(m, |i| amb.sum(&fam.c[i], &rep).unwrap() == fam.d_prime[i] && amb.intersect(&fam.c[i], &rep).unwrap().is_zero()),
    );
    r.holds(
        "fq.even_prime_plus_repetition",
        "C_i' + <jbar> = D_i and C_i' meets <jbar> in 0",
        per_index(m, |i| amb.sum(&fam.c_prime[i], &rep).unwrap() == fam.d[i] && amb.intersect(&fam.c_prime[i], &rep).unwrap().is_zero()),
    );
    r.holds(
        "fq.even_pair",
        "C_i meets C_i' in 0 and C_i + C_i' = <1 - jbar>",
        per_index(m, |i| amb.intersect(&fam.c[i], &fam.c_prime[i]).unwrap().is_zero() && amb.sum(&fam.c[i], &fam.c_prime[i]).unwrap() == even),
    );
    r.holds(
        "fq.odd_pair",
        "D_i meets D_i' in <jbar> and D_i + D_i' is the whole space",
        per_index(m, |i| amb.intersect(&fam.d[i], &fam.d_prime[i]).unwrap() == rep && amb.sum(&fam.d[i], &fam.d_prime[i]).unwrap() == whole),
    );
    r.holds(
        "fq.jbar_shifts",
        "e_i + jbar = d_i', e_i' + jbar = d_i, e_i jbar = 0 and e_i' jbar = 0",
        per_index(m, |i| {
            amb.add(&e[i], &j) == dp[i]
                && amb.add(&ep[i], &j) == d[i]
                && amb.mul_mod(&e[i], &j).is_zero()
                && amb.mul_mod(&ep[i], &j).is_zero()
        }),
    );
    r.holds(
        "fq.idempotent_pairs",
        "e_i e_i' = 0, e_i + e_i' = 1 - jbar, d_i d_i' = jbar, d_i + d_i' = 1 + jbar",
        per_index(m, |i| {
            amb.mul_mod(&e[i], &ep[i]).is_zero()
                && amb.add(&e[i], &ep[i]) == one_minus_j
                && amb.mul_mod(&d[i], &dp[i]) == j
                && amb.add(&d[i], &dp[i]) == one_plus_j
        }),
    );
    r.holds(
        "fq.idempotent_joins",
        "join(e_i, jbar) = d_i' and join(e_i', jbar) = d_i",
        per_index(m, |i| id.join(&e[i], &j) == dp[i] && id.join(&ep[i], &j) == d[i]),
    );

    if fam.splitting.s_inf_prime().is_empty() {
        r.holds(
            "fq.trivial_s_inf.even_meet_zero",
            "with S_inf' empty, any subfamily of the C_i meets in 0 and its e_i multiply to 0",
            per_subset(m, |s| meet(&fam.c, s).is_zero() && id.prod(&e, s).is_zero()),
        );
        r.holds(
            "fq.trivial_s_inf.odd_join_whole",
            "with S_inf' empty, any subfamily of the D_i sums to the whole space, with inclusion-exclusion sum 1",
            per_subset(m, |s| join(&fam.d, s) == whole && id.incl_excl(&d, s) == one),
        );
        r.holds(
            "fq.trivial_s_inf.odd_prime_meet_repetition",
            "with S_inf' empty, any subfamily of the D_i' meets in <jbar> and its d_i' multiply to jbar",
            per_subset(m, |s| meet(&fam.d_prime, s) == rep && id.prod(&dp, s) == j),
        );
        r.holds(
            "fq.trivial_s_inf.even_prime_join_even_weight",
            "with S_inf' empty, any subfamily of the C_i' sums to <1 - jbar>",
            per_subset(m, |s| join(&fam.c_prime, s) == even && id.incl_excl(&ep, s) == one_minus_j),
        );
    } else {
        r.skip("fq.trivial_s_inf", "identities that need S_inf' empty", "S_inf' empty", "S_inf' is not empty");
    }

    let n = amb.n();
    let neg = multiplier_permutation(n, n - 1, false);
    let dual_is_neg = |c: &CyclicCode, o: &CyclicCode| {
        let gm = amb.generator_matrix(c).dual();
        let other = amb.generator_matrix(o);
        permuted_equal(&gm, &other, &neg).unwrap_or(false)
    };
    r.holds(
        "fq.even_dual_is_neg_odd",
        "C_i^perp = mu_{-1}(D_i) and C_i'^perp = mu_{-1}(D_i'), by linear algebra",
        per_index(m, |i| dual_is_neg(&fam.c[i], &fam.d[i]) && dual_is_neg(&fam.c_prime[i], &fam.d_prime[i])),
    );
    if inst.neg_one_shift() == Some(0) {
        r.holds(
            "fq.lcd_when_neg_one_fixes",
            "when mu_{-1} fixes every S_i, all four families are LCD",
            per_index(m, |i| {
                [&fam.c[i], &fam.c_prime[i], &fam.d[i], &fam.d_prime[i]].iter().all(|c| amb.generator_matrix(c).is_lcd())
            }),
        );
    } else {
        r.skip("fq.lcd_when_neg_one_fixes", "LCD families", "mu_{-1} fixes every S_i", "mu_{-1} moves some S_i");
    }
    r
}

fn duality_matrix(inst: &Instance) -> GrayMatrix {
    if inst.gray.lambda().is_some() {
        inst.gray.clone()
    } else {
        GrayMatrix::identity(inst.field.clone(), inst.ring.kl())
    }
}

/// Identities for the polyadic codes over R: idempotent calculus, sizes,
/// duality through the Gray map, extensions and parameters.
pub fn ring_identities(inst: &Instance, budget: u64) -> Report {
    let mut r = Report::new("ring identities");
    let amb = &inst.amb;
    let ring = &inst.ring;
    let fam = &inst.family;
    let m = inst.m();
    let n = amb.n();
    let kl = ring.kl();
    let all: Vec<usize> = (0..m).collect();

    let lemma = ring.check_idempotents();
    r.check(
        "r.eta_orthogonal_idempotents",
        "the eta_ij are orthogonal idempotents summing to 1 modulo f(u), g(v)",
        lemma.is_ok(),
        "holds",
        lemma.map_or_else(|e| e.to_string(), |_| "holds".into()),
    );

    let codes = |kind: CodeKind| -> Vec<RCode> { (0..m).map(|i| inst.code(kind, i)).collect() };
    let (p, t, pp, tp) = (codes(CodeKind::P), codes(CodeKind::T), codes(CodeKind::PPrime), codes(CodeKind::TPrime));
    let idem = |cs: &[RCode]| -> Vec<RPoly> { cs.iter().map(|c| c.idempotent()).collect() };
    let (e, f, ep, fp) = (idem(&p), idem(&t), idem(&pp), idem(&tp));

    let fq_e = [idempotents(&fam.c), idempotents(&fam.d), idempotents(&fam.c_prime), idempotents(&fam.d_prime)];
    r.holds(
        "r.theta_form",
        "E_i, F_i, E_i', F_i' equal sum_t theta_t x_{t-i} computed with ring constants",
        per_index(m, |i| {
            theta_sum(inst, &fq_e[0], i) == e[i]
                && theta_sum(inst, &fq_e[1], i) == f[i]
                && theta_sum(inst, &fq_e[2], i) == ep[i]
                && theta_sum(inst, &fq_e[3], i) == fp[i]
        }),
    );

    let one = RPoly::constant(n, &ring.one());
    let zero = RPoly::constant(n, &ring.zero());
    let jb = lift(inst, &amb.j_bar());
    let one_minus_j = one.sub(&jb, amb);
    let ri = RIdem { amb, one: one.clone() };

    let f_all = ri.prod(&f, &all);
    r.holds("r.odd_meet_repetition", "T_1 meets ... T_m in <jbar>", witnesses([("product".into(), f_all == jb)]));
    let f_ie = ri.incl_excl(&f, &all);
    r.holds("r.odd_join_subfamily", "the sum of all T_i equals that of any subfamily", per_subset(m, |s| ri.incl_excl(&f, s) == f_ie));
    let e_all = ri.prod(&e, &all);
    r.holds("r.even_meet_subfamily", "the intersection of all P_i equals that of any subfamily", per_subset(m, |s| ri.prod(&e, s) == e_all));
    r.holds(
        "r.even_join_even_weight",
        "P_1 + ... + P_m = <1 - jbar>",
        witnesses([("sum".into(), ri.incl_excl(&e, &all) == one_minus_j)]),
    );
    r.holds(
        "r.repetition_membership",
        "P_i meets <jbar> in 0 and T_i contains <jbar>",
        per_index(m, |i| e[i].mul(&jb, amb).is_zero() && f[i].mul(&jb, amb) == jb),
    );
    r.holds(
        "r.even_odd_complementary",
        "P_i + T_i is everything and P_i meets T_i in 0",
        per_index(m, |i| e[i].mul(&f[i], amb).is_zero() && ri.join(&e[i], &f[i]) == one),
    );
    let fp_all = ri.prod(&fp, &all);
    r.holds(
        "r.odd_prime_meet_subfamily",
        "the intersection of all T_i' equals that of any subfamily",
        per_subset(m, |s| ri.prod(&fp, s) == fp_all),
    );
    r.holds("r.odd_prime_join_whole", "T_1' + ... + T_m' is everything", witnesses([("sum".into(), ri.incl_excl(&fp, &all) == one)]));
    r.holds("r.even_prime_meet_zero", "P_1' meets ... P_m' in 0", witnesses([("product".into(), ri.prod(&ep, &all) == zero)]));
    let ep_ie = ri.incl_excl(&ep, &all);
    r.holds(
        "r.even_prime_join_subfamily",
        "the sum of all P_i' equals that of any subfamily",
        per_subset(m, |s| ri.incl_excl(&ep, s) == ep_ie),
    );
    r.holds(
        "r.prime_repetition_membership",
        "P_i' meets <jbar> in 0 and T_i' contains <jbar>",
        per_index(m, |i| ep[i].mul(&jb, amb).is_zero() && fp[i].mul(&jb, amb) == jb),
    );
    r.holds(
        "r.prime_complementary",
        "P_i' + T_i' is everything and P_i' meets T_i' in 0",
        per_index(m, |i| ep[i].mul(&fp[i], amb).is_zero() && ri.join(&ep[i], &fp[i]) == one),
    );
    r.holds(
        "r.even_plus_repetition",
        "P_i + <jbar> = T_i' and P_i' + <jbar> = T_i",
        per_index(m, |i| ri.join(&e[i], &jb) == fp[i] && ri.join(&ep[i], &jb) == f[i]),
    );
    r.holds(
        "r.even_pair",
        "P_i + P_i' = <1 - jbar> and P_i meets P_i' in 0",
        per_index(m, |i| ri.join(&e[i], &ep[i]) == one_minus_j && e[i].mul(&ep[i], amb).is_zero()),
    );
    r.holds(
        "r.odd_pair",
        "T_i + T_i' is everything and T_i meets T_i' in <jbar>",
        per_index(m, |i| ri.join(&f[i], &fp[i]) == one && f[i].mul(&fp[i], amb) == jb),
    );
    r.holds(
        "r.code_calculus_matches_idempotents",
        "intersections and sums computed on defining sets have the product and join idempotents",
        per_index(m, |i| {
            let k = (i + 1) % m;
            p[i].intersect(&p[k], amb).unwrap().idempotent() == e[i].mul(&e[k], amb)
                && t[i].sum(&t[k], amb).unwrap().idempotent() == ri.join(&f[i], &f[k])
        }),
    );

    let identity = GrayMatrix::identity(inst.field.clone(), kl);
    let image = |c: &RCode, v: &GrayMatrix| gray_generator_matrix(c, amb, v).expect("sizes match");
    let kinds = [(CodeKind::P, &p), (CodeKind::T, &t), (CodeKind::PPrime, &pp), (CodeKind::TPrime, &tp)];
    r.holds(
        "r.size_from_generators",
        "|C| = q^(kl n - sum deg g_ij), matching the rank of the Gray image",
        witnesses(kinds.iter().map(|(k, cs)| {
            let c = &cs[0];
            let degs: usize = c.components.iter().map(|x| x.generator.degree().unwrap_or(0)).sum();
            (k.to_string(), c.log_size() == kl * n - degs && inst.gray_image(c).k() == c.log_size())
        })),
    );
    r.holds(
        "r.dual_componentwise",
        "the dual over R is the sum of the componentwise duals",
        witnesses(kinds.iter().map(|(k, cs)| {
            let c = &cs[0];
            let lhs = image(&c.dual(amb).unwrap(), &identity);
            (k.to_string(), codes_equal(&lhs, &image(c, &identity).dual()).unwrap_or(false))
        })),
    );
    match inst.gray.lambda() {
        Some(_) => r.holds(
            "r.gray_preserves_duality",
            "Phi(C^perp) = Phi(C)^perp when V V^T = lambda I",
            witnesses(kinds.iter().map(|(k, cs)| {
                let c = &cs[0];
                let lhs = inst.gray_image(&c.dual(amb).unwrap());
                (k.to_string(), codes_equal(&lhs, &inst.gray_image(c).dual()).unwrap_or(false))
            })),
        ),
        None => r.skip("r.gray_preserves_duality", "Gray map duality", "V V^T = lambda I", "V V^T is not scalar"),
    }

    let neg = lift_permutation(&multiplier_permutation(n, n - 1, false), kl);
    r.holds(
        "r.even_dual_is_neg_odd",
        "P_i^perp = mu_{-1}(T_i) and P_i'^perp = mu_{-1}(T_i'), by linear algebra",
        per_index(m, |i| {
            let a = permuted_equal(&image(&p[i], &identity).dual(), &image(&t[i], &identity), &neg).unwrap_or(false);
            let b = permuted_equal(&image(&pp[i], &identity).dual(), &image(&tp[i], &identity), &neg).unwrap_or(false);
            a && b
        }),
    );
    let shift = inst.neg_one_shift();
    let v = duality_matrix(inst);
    if shift == Some(0) {
        r.holds(
            "r.lcd_when_neg_one_fixes",
            "when mu_{-1} fixes every e_i, the Gray images of P_1, T_1, P_1', T_1' are LCD",
            witnesses(kinds.iter().map(|(k, cs)| (k.to_string(), image(&cs[0], &v).is_lcd()))),
        );
    } else {
        r.skip("r.lcd_when_neg_one_fixes", "LCD codes over R", "mu_{-1} fixes every e_i", "mu_{-1} moves some e_i");
    }

    let trivial = fam.splitting.s_inf_prime().is_empty();
    if trivial {
        r.holds(
            "r.closed_form_sizes",
            "|P_i|, |T_i|, |P_i'|, |T_i'| match the closed forms for S_inf' empty",
            witnesses(kinds.iter().flat_map(|(k, cs)| {
                cs.iter().enumerate().map(move |(i, c)| {
                    let ok = rcode_sizes_check(c, *k, fam).map(|s| s.pass).unwrap_or(false);
                    (format!("{k}_{}", i + 1), ok)
                })
            })),
        );
    } else {
        r.skip("r.closed_form_sizes", "closed-form sizes", "S_inf' empty", "S_inf' is not empty");
    }

    match (trivial, inst.gamma, shift) {
        (true, Some(gamma), Some(delta)) => {
            let ext = |c: &RCode| {
                let e = crate::ring_r::extend_code(c, amb, gamma, crate::ring_r::ExtensionSign::Prose);
                crate::gray::gray_extended(&e, &v).expect("sizes match")
            };
            r.holds(
                "r.extended_duality",
                &format!("the dual of Phi(extended T_i) is Phi(extended T_(i-{delta})')"),
                per_index(m, |i| codes_equal(&ext(&t[i]).dual(), &ext(&tp[(i + m - delta) % m])).unwrap_or(false)),
            );
            if m == 2 && delta == 1 {
                r.holds(
                    "r.self_dual_pair",
                    "mu_{-1} swaps e_1, e_2: Phi(P_i) is self-orthogonal and Phi(extended T_i) is self-dual",
                    per_index(m, |i| image(&p[i], &v).is_self_orthogonal() && ext(&t[i]).is_self_dual()),
                );
            }
            if m == 2 && delta == 0 {
                let perm = lift_permutation(&multiplier_permutation(n, fam.splitting.a, true), kl);
                r.holds(
                    "r.isodual_pair",
                    "mu_{-1} fixes e_1, e_2: Phi(extended T_1)^perp = Phi(extended T_2), a multiplier image of Phi(extended T_1)",
                    witnesses([(
                        "T_1".into(),
                        codes_equal(&ext(&t[0]).dual(), &ext(&t[1])).unwrap_or(false)
                            && permuted_equal(&ext(&t[1]), &ext(&t[0]), &perm).unwrap_or(false),
                    )]),
                );
            }
        }
        _ => r.skip(
            "r.extended_duality",
            "extended duality",
            "S_inf' empty, gamma exists, mu_{-1} permutes the S_i cyclically",
            "precondition not met",
        ),
    }

    let q = inst.field.q() as u64;
    r.holds(
        "r.params_match_component",
        "k, d and the Griesmer status over R equal those of the component polyadic code (d when enumerable)",
        witnesses(kinds.iter().map(|(k, cs)| {
            let fcode = &k.family(fam)[0];
            let same_dims = k.family(fam).iter().all(|c| c.dimension == fcode.dimension);
            let mut ok = same_dims && cs[0].components.iter().map(|c| c.dimension).max() == Some(fcode.dimension);
            let gm = amb.generator_matrix(fcode);
            if within_budget(&gm, budget) {
                let rp = rcode_params(&cs[0], amb, budget);
                let d_field = gm.min_distance(budget);
                let gr = |d: Distance| d.exact().map(|d| griesmer_check(n as u64, fcode.dimension as u64, d as u64, q));
                ok &= rp.d == d_field && gr(rp.d) == gr(d_field);
            }
            (k.to_string(), ok)
        })),
    );
    r
}

/// Both identity suites for one instance.
pub fn props(spec: &InstanceSpec, budget: u64) -> Report {
    let mut r = Report::new("props");
    let inst = match build("props", spec) {
        Ok(i) => i,
        Err(rep) => return rep,
    };
    r.extend(field_identities(&inst));
    r.extend(ring_identities(&inst, budget));
    r
}

/// Suite names accepted by [`run`].
pub const TARGETS: [&str; 7] = ["example1", "example2", "example3", "example4", "example5", "remark", "table1"];

pub fn run(target: &str, budget: u64) -> Option<Report> {
    Some(match target {
        "example1" => example1(budget),
        "example2" => example2(budget),
        "example3" => example3(budget),
        "example4" => example4(budget),
        "example5" => example5(budget),
        "remark" => remark(budget),
        "table1" => table1(budget),
        _ => return None,
    })
}
