//! JSON job files and the reports emitted for them.

use polyadic_core::linalg::griesmer_check;
use polyadic_core::polyadic_fq::Splitting;
use polyadic_core::ring_r::{generalized_idempotent_code, rcode_params, RCodeJson, RParams};
use polyadic_core::{CodeKind, Distance, GeneratorMatrix, Griesmer, Instance, InstanceError, InstanceSpec, RCode, RingError};
use serde::{Deserialize, Serialize};

/// An instance plus the code to build from it. `i` and the entries of
/// `generalized.subsets` count families from 1.
#[derive(Clone, Debug, Deserialize, Serialize)]
pub struct JobSpec {
    #[serde(flatten)]
    pub instance: InstanceSpec,
    #[serde(default = "default_kind")]
    pub kind: String,
    #[serde(default = "one")]
    pub i: usize,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub generalized: Option<Generalized>,
    #[serde(default)]
    pub extend: bool,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub budget: Option<u64>,
}

/// Components in `blocks[b]` are `sum_{j in subsets[b]} C_j`.
#[derive(Clone, Debug, Deserialize, Serialize)]
pub struct Generalized {
    pub blocks: Vec<Vec<String>>,
    pub subsets: Vec<Vec<usize>>,
}

fn default_kind() -> String {
    "P".into()
}

fn one() -> usize {
    1
}

#[derive(Debug, thiserror::Error)]
pub enum JobError {
    #[error(transparent)]
    Instance(#[from] InstanceError),
    #[error(transparent)]
    Ring(#[from] RingError),
    #[error("unknown code kind {0:?}, expected P, T, P' or T'")]
    Kind(String),
    #[error("index {i} is outside 1..={m}")]
    Index { i: usize, m: usize },
    #[error("the extension needs a root of 1 + gamma^2 n = 0, and there is none for n = {n} over GF({q})")]
    NoGamma { n: usize, q: u32 },
}

#[derive(Debug, Serialize)]
pub struct SplittingReport {
    pub a: usize,
    #[serde(rename = "S")]
    pub s: Vec<Vec<usize>>,
    #[serde(rename = "S_inf")]
    pub s_inf: Vec<usize>,
}

impl From<&Splitting> for SplittingReport {
    fn from(s: &Splitting) -> Self {
        SplittingReport { a: s.a, s: s.s.clone(), s_inf: s.s_inf.clone() }
    }
}

#[derive(Debug, Serialize)]
pub struct Flags {
    pub self_orthogonal: bool,
    pub self_dual: bool,
    pub lcd: bool,
    pub isodual_checked: bool,
}

/// `{n, k, d, flags, griesmer}` for a linear code over GF(q).
#[derive(Debug, Serialize)]
pub struct Analysis {
    pub n: usize,
    pub k: usize,
    pub d: Distance,
    pub hull_dimension: usize,
    pub flags: Flags,
    pub griesmer: Option<Griesmer>,
}

pub fn analyze(g: &GeneratorMatrix, budget: u64) -> Analysis {
    let d = g.min_distance(budget);
    let q = g.field().q() as u64;
    Analysis {
        n: g.n(),
        k: g.k(),
        d,
        hull_dimension: g.hull_dimension(),
        flags: Flags {
            self_orthogonal: g.is_self_orthogonal(),
            self_dual: g.is_self_dual(),
            lcd: g.is_lcd(),
            isodual_checked: false,
        },
        griesmer: d.exact().map(|d| griesmer_check(g.n() as u64, g.k() as u64, d as u64, q)),
    }
}

#[derive(Debug, Serialize)]
pub struct CodeReport {
    pub name: String,
    pub params: RParams,
    pub griesmer: Option<Griesmer>,
    pub idempotent: String,
    pub generator: String,
    pub code: RCodeJson,
}

#[derive(Debug, Serialize)]
pub struct ConstructReport {
    pub q: u32,
    pub n: usize,
    pub m: usize,
    pub kl: usize,
    pub splitting: SplittingReport,
    pub neg_one_shift: Option<usize>,
    pub gamma: Option<u32>,
    pub lambda: Option<u32>,
    /// `E_i, F_i, E_i', F_i'` for the requested index.
    pub idempotents: Vec<(String, String)>,
    pub code: CodeReport,
    pub gray: Analysis,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub gray_extended: Option<Analysis>,
}

pub struct Built {
    pub instance: Instance,
    pub code: RCode,
    pub name: String,
}

pub fn parse_kind(s: &str) -> Result<CodeKind, JobError> {
    s.parse().map_err(|_| JobError::Kind(s.to_string()))
}

pub fn build(job: &JobSpec) -> Result<Built, JobError> {
    let instance = Instance::build(&job.instance)?;
    let m = instance.m();
    let (code, name) = match &job.generalized {
        Some(g) => {
            let blocks = g
                .blocks
                .iter()
                .map(|b| b.iter().map(|l| instance.ring.index_of(l)).collect::<Result<Vec<_>, _>>())
                .collect::<Result<Vec<_>, _>>()?;
            let mut subsets = Vec::new();
            for sub in &g.subsets {
                let mut out = Vec::new();
                for &j in sub {
                    if j == 0 || j > m {
                        return Err(JobError::Index { i: j, m });
                    }
                    out.push(j - 1);
                }
                subsets.push(out);
            }
            let c = generalized_idempotent_code(&instance.ring, &instance.amb, &instance.family, &blocks, &subsets)?;
            (c, "generalized".to_string())
        }
        None => {
            let kind = parse_kind(&job.kind)?;
            if job.i == 0 || job.i > m {
                return Err(JobError::Index { i: job.i, m });
            }
            (instance.code(kind, job.i - 1), format!("{kind}_{}", job.i))
        }
    };
    Ok(Built { instance, code, name })
}

pub fn gray_matrix(b: &Built, extend: bool) -> Result<GeneratorMatrix, JobError> {
    if extend {
        b.instance
            .gray_extended(&b.code)
            .ok_or(JobError::NoGamma { n: b.instance.amb.n(), q: b.instance.field.q() })
    } else {
        Ok(b.instance.gray_image(&b.code))
    }
}

pub fn construct(job: &JobSpec, budget: u64) -> Result<ConstructReport, JobError> {
    let b = build(job)?;
    let inst = &b.instance;
    let ring = &inst.ring;
    let q = inst.field.q();
    let idx = job.i.clamp(1, inst.m()) - 1;
    let idempotents = CodeKind::ALL
        .iter()
        .map(|&k| {
            let label = match k {
                CodeKind::P => "E",
                CodeKind::T => "F",
                CodeKind::PPrime => "E'",
                CodeKind::TPrime => "F'",
            };
            (format!("{label}_{}", idx + 1), inst.code(k, idx).idempotent().display(ring))
        })
        .collect();
    let params = rcode_params(&b.code, &inst.amb, budget);
    let griesmer = params.d.exact().map(|d| griesmer_check(params.n as u64, params.k as u64, d as u64, q as u64));
    let gray = analyze(&inst.gray_image(&b.code), budget);
    let gray_extended = if job.extend { Some(analyze(&gray_matrix(&b, true)?, budget)) } else { None };
    Ok(ConstructReport {
        q,
        n: inst.amb.n(),
        m: inst.m(),
        kl: ring.kl(),
        splitting: (&inst.family.splitting).into(),
        neg_one_shift: inst.neg_one_shift(),
        gamma: inst.gamma.map(|g| g.0),
        lambda: inst.gray.lambda().map(|l| l.0),
        idempotents,
        code: CodeReport {
            name: b.name.clone(),
            params,
            griesmer,
            idempotent: b.code.idempotent().display(ring),
            generator: b.code.generator().display(ring),
            code: b.code.to_json(),
        },
        gray,
        gray_extended,
    })
}
