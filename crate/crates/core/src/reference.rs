//! Concrete instances: a ring R, a splitting of Z_n, a block partition and a
//! Gray matrix, plus the published instances the regression suites replay.

use std::sync::Arc;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::gf::{Fe, Gf, GfError};
use crate::gray::{gray_extended, gray_generator_matrix, GrayError, GrayMatrix};
use crate::linalg::GeneratorMatrix;
use crate::polyadic_fq::{build_family, find_splittings, PolyadicFamily, Splitting, SplittingError, SplittingOptions};
use crate::polyring::{CyclicAmbient, PolyError, RootChoice};
use crate::ring_r::{
    extend_code, polyadic_code_r, solve_gamma, CodeKind, ExtendedRCode, ExtensionSign, PartitionTheta,
    RCode, RingError, RingJson, RingSpec,
};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum InstanceError {
    #[error(transparent)]
    Field(#[from] GfError),
    #[error(transparent)]
    Poly(#[from] PolyError),
    #[error(transparent)]
    Splitting(#[from] SplittingError),
    #[error(transparent)]
    Ring(#[from] RingError),
    #[error(transparent)]
    Gray(#[from] GrayError),
    #[error("no splitting of Z_{n} into {m} classes over GF({q}) matches the request")]
    NoSplitting { n: usize, q: u64, m: usize },
}

/// A preset name (`A`, `B`, `C4`, `H4`, `I`, ...) or explicit rows of element indices.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum GraySpec {
    Preset(String),
    Rows(Vec<Vec<u32>>),
}

impl Default for GraySpec {
    fn default() -> Self {
        GraySpec::Preset("I".into())
    }
}

/// Which splitting to keep when several exist.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum SplitPreference {
    #[default]
    First,
    /// `mu_{-1}(S_i) = S_i` for every i.
    NegOneFixes,
    /// `mu_{-1}(S_i) = S_{i+1}` (m = 2).
    NegOneSwaps,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct InstanceSpec {
    pub ring: RingJson,
    pub n: usize,
    pub m: usize,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub a: Option<i64>,
    /// Explicit classes `S_1..S_m`; requires `a`.
    #[serde(default, rename = "S", skip_serializing_if = "Option::is_none")]
    pub s: Option<Vec<Vec<usize>>>,
    /// Use `omega^k` for the default root `omega`.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub root_power: Option<u64>,
    /// Blocks of "ij" labels; defaults to position `p` in block `p mod m`
    /// (`kl >= m`) or singletons (`kl < m`).
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub blocks: Option<Vec<Vec<String>>>,
    #[serde(default)]
    pub gray: GraySpec,
    #[serde(default)]
    pub absorb_orbits: bool,
    #[serde(default)]
    pub prefer: SplitPreference,
}

impl InstanceSpec {
    /// Field of order `q` with roots given as integers (reduced into the prime
    /// field) or, for `q` a proper prime power, as element indices.
    pub fn new(q: u64, alpha: &[i64], beta: &[i64], n: usize, m: usize) -> Result<InstanceSpec, GfError> {
        let field = Gf::from_order(q)?;
        let conv = |v: &[i64]| v.iter().map(|&x| if field.s() == 1 { field.from_int(x).0 } else { x as u32 }).collect();
        Ok(InstanceSpec {
            ring: RingJson { q: field.desc(), alpha: conv(alpha), beta: conv(beta) },
            n,
            m,
            a: None,
            s: None,
            root_power: None,
            blocks: None,
            gray: GraySpec::default(),
            absorb_orbits: false,
            prefer: SplitPreference::First,
        })
    }

    pub fn with_blocks(mut self, blocks: &[&[&str]]) -> Self {
        self.blocks = Some(blocks.iter().map(|b| b.iter().map(|s| s.to_string()).collect()).collect());
        self
    }

    pub fn with_gray(mut self, name: &str) -> Self {
        self.gray = GraySpec::Preset(name.into());
        self
    }

    pub fn with_prefer(mut self, p: SplitPreference) -> Self {
        self.prefer = p;
        self
    }

    pub fn q(&self) -> u64 {
        self.ring.q.p.pow(self.ring.q.s)
    }
}

/// Everything needed to build and map the polyadic codes of one instance.
#[derive(Clone, Debug)]
pub struct Instance {
    pub spec: InstanceSpec,
    pub field: Arc<Gf>,
    pub amb: CyclicAmbient,
    pub ring: Arc<RingSpec>,
    pub family: PolyadicFamily,
    pub partition: PartitionTheta,
    pub gray: GrayMatrix,
    pub gamma: Option<Fe>,
}

fn preferred(amb: &CyclicAmbient, s: &Splitting, p: SplitPreference) -> bool {
    let neg = |set: &[usize]| amb.multiplier_set(-1, set).expect("-1 is a unit");
    match p {
        SplitPreference::First => true,
        SplitPreference::NegOneFixes => s.s.iter().all(|c| neg(c) == *c),
        SplitPreference::NegOneSwaps => s.m == 2 && neg(&s.s[0]) == s.s[1],
    }
}

impl Instance {
    pub fn build(spec: &InstanceSpec) -> Result<Instance, InstanceError> {
        let ring = RingSpec::from_json(&spec.ring)?;
        let field = ring.field().clone();
        let root = spec.root_power.map_or(RootChoice::Default, RootChoice::Power);
        let amb = CyclicAmbient::with_root(spec.n, field.clone(), root)?;
        let splitting = match (&spec.s, spec.a) {
            (Some(s), Some(a)) => explicit_splitting(&amb, &field, spec.m, a, s)?,
            (Some(_), None) => return Err(SplittingError::Invalid("explicit classes need a multiplier".into()).into()),
            _ => {
                let opts = SplittingOptions { absorb_orbits: spec.absorb_orbits, limit: None };
                find_splittings(&amb, spec.m, spec.a, opts)?
                    .into_iter()
                    .find(|s| preferred(&amb, s, spec.prefer))
                    .ok_or(InstanceError::NoSplitting { n: spec.n, q: field.q() as u64, m: spec.m })?
            }
        };
        let family = build_family(&amb, &splitting)?;
        let partition = match &spec.blocks {
            Some(b) => PartitionTheta::from_labels(&ring, spec.m, b)?,
            None => default_partition(ring.kl(), spec.m)?,
        };
        let gray = match &spec.gray {
            GraySpec::Preset(name) => GrayMatrix::preset(name, &field, ring.kl())?,
            GraySpec::Rows(rows) => {
                GrayMatrix::new(field.clone(), rows.iter().map(|r| r.iter().map(|&x| Fe(x)).collect()).collect())?
            }
        };
        if gray.size() != ring.kl() {
            return Err(GrayError::DimensionMismatch { matrix: gray.size(), ring: ring.kl() }.into());
        }
        let gamma = solve_gamma(spec.n, &field);
        Ok(Instance { spec: spec.clone(), field, amb, ring, family, partition, gray, gamma })
    }

    pub fn m(&self) -> usize {
        self.family.m()
    }

    /// Polyadic code `kind` number `i` (0-based).
    pub fn code(&self, kind: CodeKind, i: usize) -> RCode {
        polyadic_code_r(&self.ring, &self.family, &self.partition, kind, i).expect("partition matches the family")
    }

    pub fn gray_image(&self, c: &RCode) -> GeneratorMatrix {
        gray_generator_matrix(c, &self.amb, &self.gray).expect("matrix size checked at build")
    }

    /// The extension by `gamma`, when `1 + gamma^2 n = 0` is solvable.
    pub fn extended(&self, c: &RCode) -> Option<ExtendedRCode> {
        self.gamma.map(|g| extend_code(c, &self.amb, g, ExtensionSign::Prose))
    }

    pub fn gray_extended(&self, c: &RCode) -> Option<GeneratorMatrix> {
        self.extended(c).map(|e| gray_extended(&e, &self.gray).expect("matrix size checked at build"))
    }

    /// `delta` with `mu_{-1}(S_s) = S_{s + delta}` for every s, if any.
    pub fn neg_one_shift(&self) -> Option<usize> {
        let s = &self.family.splitting.s;
        let m = s.len();
        let img: Vec<Vec<usize>> = s.iter().map(|c| self.amb.multiplier_set(-1, c).expect("unit")).collect();
        (0..m).find(|&d| (0..m).all(|i| img[i] == s[(i + d) % m]))
    }
}

fn explicit_splitting(
    amb: &CyclicAmbient,
    field: &Gf,
    m: usize,
    a: i64,
    s: &[Vec<usize>],
) -> Result<Splitting, InstanceError> {
    let n = amb.n();
    let mut classes: Vec<Vec<usize>> = s.iter().map(|c| amb.normalize_set(c)).collect::<Result<_, _>>()?;
    for c in classes.iter_mut() {
        c.sort_unstable();
    }
    let used: Vec<usize> = classes.iter().flatten().copied().collect();
    let s_inf = (0..n).filter(|i| !used.contains(i)).collect();
    let sp = Splitting { n, q: field.desc(), m, a: amb.unit(a)?, s: classes, s_inf };
    sp.validate(amb)?;
    Ok(sp)
}

fn default_partition(kl: usize, m: usize) -> Result<PartitionTheta, RingError> {
    let blocks = if kl >= m {
        (0..m).map(|t| (t..kl).step_by(m).collect()).collect()
    } else {
        (0..kl).map(|p| vec![p]).collect()
    };
    PartitionTheta::new(kl, m, blocks)
}

fn spec(q: u64, alpha: &[i64], beta: &[i64], n: usize, m: usize) -> InstanceSpec {
    InstanceSpec::new(q, alpha, beta, n, m).expect("reference field")
}

/// q = 3, n = 13, m = 4, f = u^3 - u, g = v^2 - 1.
pub fn example1() -> InstanceSpec {
    spec(3, &[0, 1, 2], &[1, 2], 13, 4).with_blocks(&[&["11", "12"], &["21", "22"], &["31"], &["32"]])
}

/// q = 5, n = 11, m = 2, f = u^3 - u, g = v^2 - 1.
pub fn example2() -> InstanceSpec {
    spec(5, &[0, 1, 4], &[1, 4], 11, 2).with_blocks(&[&["11", "12", "21", "22"], &["31", "32"]])
}

/// q = 13, n = 3, m = 2, f = u^2 - u, g = v^3 - v with the roots of g listed
/// as (0, -1, 1), omega = 9, V = A.
pub fn example3() -> InstanceSpec {
    let mut s = spec(13, &[0, 1], &[0, -1, 1], 3, 2)
        .with_blocks(&[&["11", "12", "13", "21", "22"], &["23"]])
        .with_gray("A13");
    s.root_power = Some(2);
    s
}

/// q = 7, n = 19, m = 3, f = u^2 - 1, g = v^2 - v, V = B.
pub fn example4() -> InstanceSpec {
    spec(7, &[1, -1], &[0, 1], 19, 3)
        .with_blocks(&[&["11", "12"], &["21"], &["22"]])
        .with_gray("B7")
        .with_prefer(SplitPreference::NegOneFixes)
}

/// q = 4, n = 17, m = 4, f = u^2 - u, g = v^2 - v, V = C.
pub fn example5() -> InstanceSpec {
    spec(4, &[0, 1], &[0, 1], 17, 4)
        .with_blocks(&[&["11"], &["12"], &["21"], &["22"]])
        .with_gray("C4")
        .with_prefer(SplitPreference::NegOneFixes)
}

/// Instance used by the identity suites when only `(q, n, m)` is given:
/// `f = u^2 - u`, `g = v^2 - v` and `V = H4` in odd characteristic, `C` over
/// GF(4), the identity otherwise.
pub fn default_instance(q: u64, n: usize, m: usize) -> Result<InstanceSpec, GfError> {
    let s = InstanceSpec::new(q, &[0, 1], &[0, 1], n, m)?;
    Ok(match (q % 2, q) {
        (1, _) => s.with_gray("H4"),
        (_, 4) => s.with_gray("C4"),
        _ => s,
    })
}

/// Generalized idempotent code: components in `blocks[b]` are `sum_{i in subsets[b]} C_i`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GeneralizedSpec {
    pub instance: InstanceSpec,
    pub blocks: Vec<Vec<String>>,
    /// 0-based family indices.
    pub subsets: Vec<Vec<usize>>,
}

/// q = 11, n = 5, m = 4, f = (u^2 - 1)(u - 2), g = v^2 - v,
/// `E = (eta_11 + eta_12 + eta_21)(e_1 + e_2 + e_3) + (eta_22 + eta_31 + eta_32)(e_1 + e_2)`.
pub fn remark() -> GeneralizedSpec {
    let labels = |v: &[&str]| v.iter().map(|s| s.to_string()).collect();
    GeneralizedSpec {
        instance: spec(11, &[1, -1, 2], &[0, 1], 5, 4),
        blocks: vec![labels(&["11", "12", "21"]), labels(&["22", "31", "32"])],
        subsets: vec![vec![0, 1, 2], vec![0, 1]],
    }
}

/// Structural property printed under a code in the table.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum TableFlag {
    Lcd,
    SelfOrthogonal,
    SelfDual,
    Isodual,
    /// Equivalent to the dual of the Gray image of the even-like code of the given kind.
    EquivalentToDualOf(CodeKind),
    Unflagged,
}

/// One printed `[n, k, d]` entry with its flag.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TableEntry {
    pub kind: CodeKind,
    pub extended: bool,
    pub n: usize,
    pub k: usize,
    pub d: usize,
    pub flag: TableFlag,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TableRow {
    pub label: String,
    pub instance: InstanceSpec,
    /// Printed gamma: `Some(Some(g))`, `Some(None)` for "does not exist",
    /// `None` when the row has no gamma column.
    pub gamma: Option<Option<u32>>,
    pub entries: Vec<TableEntry>,
}

fn entry(kind: CodeKind, extended: bool, nkd: [usize; 3], flag: TableFlag) -> TableEntry {
    TableEntry { kind, extended, n: nkd[0], k: nkd[1], d: nkd[2], flag }
}

fn four(nkd: [[usize; 3]; 4], flags: [TableFlag; 4]) -> Vec<TableEntry> {
    use CodeKind::*;
    [P, T, PPrime, TPrime].iter().zip(nkd).zip(flags).map(|((&k, v), f)| entry(k, false, v, f)).collect()
}

/// Two blocks, the last CRT index alone, as in [`example3`].
fn last_alone(mut spec: InstanceSpec) -> InstanceSpec {
    let (k, l) = (spec.ring.alpha.len(), spec.ring.beta.len());
    let mut labels: Vec<String> = (1..=k).flat_map(|i| (1..=l).map(move |j| format!("{i}{j}"))).collect();
    let last = labels.pop().expect("kl >= 2");
    spec.blocks = Some(vec![labels, vec![last]]);
    spec
}

/// The published table of Gray images. `g(v) = v^2 - u` is read as `v^2 - v`,
/// and `f(u) = u^2 - 1` over GF(4) as `u^2 - u` (it has a double root there).
/// The rows with `m = 2` use the partition of [`example3`].
pub fn table1() -> Vec<TableRow> {
    use CodeKind::*;
    use TableFlag::*;
    let row = |label: &str, instance: InstanceSpec, gamma: Option<Option<u32>>, entries| TableRow {
        label: label.to_string(),
        instance,
        gamma,
        entries,
    };
    let mut q7_16 = spec(7, &[1, -1], &[0, 1], 16, 2).with_gray("H4").with_prefer(SplitPreference::NegOneFixes);
    q7_16.a = Some(3);
    q7_16.s = Some(vec![vec![2, 14], vec![6, 10]]);
    vec![
        row(
            "q=4 n=13 m=2",
            spec(4, &[0, 1], &[0, 1], 13, 2).with_gray("C4").with_prefer(SplitPreference::NegOneFixes),
            Some(Some(1)),
            vec![entry(P, false, [52, 24, 8], Lcd), entry(T, true, [56, 28, 8], Isodual)],
        ),
        row(
            "q=5 n=11 m=2",
            spec(5, &[1, -1], &[1, -1], 11, 2).with_gray("H4").with_prefer(SplitPreference::NegOneSwaps),
            Some(Some(2)),
            vec![entry(P, false, [44, 20, 12], SelfOrthogonal), entry(T, true, [48, 24, 11], SelfDual)],
        ),
        row(
            "q=7 n=9 m=2",
            spec(7, &[1, -1], &[0, 1, -1], 9, 2).with_gray("A").with_prefer(SplitPreference::NegOneSwaps),
            Some(None),
            vec![entry(P, false, [54, 24, 6], SelfOrthogonal)],
        ),
        row(
            "q=7 n=3 m=2",
            spec(7, &[0, 1], &[0, 1, -1], 3, 2).with_gray("A").with_prefer(SplitPreference::NegOneSwaps),
            Some(Some(3)),
            vec![entry(P, false, [18, 6, 6], SelfOrthogonal), entry(T, true, [24, 12, 4], SelfDual)],
        ),
        row(
            "q=11 n=5 m=2",
            spec(11, &[0, 1], &[0, 1, -1], 5, 2).with_gray("A").with_prefer(SplitPreference::NegOneSwaps),
            Some(None),
            vec![entry(P, false, [30, 12, 8], SelfOrthogonal)],
        ),
        row(
            "q=3 n=13 m=4",
            spec(3, &[1, -1], &[1, -1], 13, 4).with_gray("H4"),
            None,
            four(
                [[54, 12, 24], [52, 40, 5], [52, 36, 8], [52, 16, 13]],
                [Unflagged, EquivalentToDualOf(P), Unflagged, EquivalentToDualOf(PPrime)],
            ),
        ),
        row(
            "q=5 n=13 m=3",
            spec(5, &[1, -1], &[1, -1], 13, 3).with_gray("H4").with_prefer(SplitPreference::NegOneFixes),
            None,
            four([[52, 16, 16], [52, 36, 7], [52, 32, 8], [52, 20, 13]], [Lcd; 4]),
        ),
        row("q=7 n=16 m=2", q7_16, None, four([[64, 52, 2], [64, 12, 16], [64, 8, 24], [64, 56, 2]], [Lcd; 4])),
        row(
            "q=11 n=5 m=4",
            spec(11, &[0, 1], &[1, -1], 5, 4).with_gray("B"),
            None,
            four(
                [[20, 4, 14], [20, 16, 3], [20, 12, 5], [20, 8, 5]],
                [Unflagged, EquivalentToDualOf(P), Unflagged, EquivalentToDualOf(PPrime)],
            ),
        ),
        row(
            "q=13 n=17 m=4",
            spec(13, &[1, -1], &[0, 1], 17, 4).with_prefer(SplitPreference::NegOneFixes),
            None,
            four([[68, 16, 12], [68, 52, 4], [68, 48, 4], [68, 20, 11]], [Lcd; 4]),
        ),
        row(
            "q=16 n=17 m=4",
            spec(16, &[0, 1], &[0, 1], 17, 4).with_prefer(SplitPreference::NegOneFixes),
            None,
            four([[68, 16, 14], [68, 48, 5], [68, 52, 5], [68, 20, 11]], [Lcd; 4]),
        ),
        row(
            "q=32 n=11 m=5",
            spec(32, &[0, 1], &[0, 1], 11, 5).with_prefer(SplitPreference::NegOneFixes),
            None,
            four([[44, 8, 10], [44, 32, 4], [44, 36, 3], [44, 12, 9]], [Lcd; 4]),
        ),
    ]
    .into_iter()
    .map(|r| if r.instance.m == 2 { TableRow { instance: last_alone(r.instance), ..r } } else { r })
    .collect()
}
