mod job;

use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use polyadic_core::linalg::{MatrixJson, DEFAULT_BUDGET};
use polyadic_core::polyadic_fq::{find_splittings, SplittingOptions};
use polyadic_core::polyring::cyclotomic_cosets;
use polyadic_core::reference::{default_instance, InstanceSpec};
use polyadic_core::verify::{self, Report};
use polyadic_core::{CyclicAmbient, GeneratorMatrix, Gf, Status};
use serde::Serialize;

use job::{JobError, JobSpec};

#[derive(Parser)]
#[command(name = "polyadic", version, about = "Polyadic codes over F_q[u,v]/<f(u), g(v), uv-vu> and their Gray images")]
struct Cli {
    /// Human-readable output instead of JSON.
    #[arg(long, global = true)]
    pretty: bool,
    /// Maximum number of codewords enumerated for a minimum distance.
    #[arg(long, global = true, default_value_t = DEFAULT_BUDGET)]
    budget: u64,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// q-cyclotomic cosets modulo n.
    Cosets {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        q: u64,
    },
    /// Splittings of Z_n into m classes cycled by a multiplier.
    Split {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        q: u64,
        #[arg(long)]
        m: usize,
        #[arg(long, allow_hyphen_values = true)]
        a: Option<i64>,
        /// Let whole multiplier orbits of cosets join S_inf.
        #[arg(long)]
        absorb_orbits: bool,
        #[arg(long)]
        limit: Option<usize>,
    },
    /// Build the code described by a job file and report its parameters.
    Construct {
        #[arg(long)]
        spec: PathBuf,
    },
    /// Generator matrix of the Gray image of a job's code.
    Gray {
        #[arg(long)]
        spec: PathBuf,
    },
    /// Parameters and duality flags of a generator matrix `{q, rows}`.
    Analyze {
        #[arg(long)]
        spec: PathBuf,
    },
    /// Run a regression suite: example1..example5, remark, table1, props or all.
    Verify {
        target: String,
        #[arg(long)]
        n: Option<usize>,
        #[arg(long)]
        q: Option<u64>,
        #[arg(long)]
        m: Option<usize>,
        #[arg(long, allow_hyphen_values = true)]
        a: Option<i64>,
        /// Instance file for `props`.
        #[arg(long)]
        spec: Option<PathBuf>,
    },
}

/// Exit codes: 1 verification failure, 2 domain error, 3 input error.
#[derive(Debug)]
enum Failure {
    Verification,
    Domain(String),
    Input(String),
}

impl Failure {
    fn domain(e: impl ToString) -> Failure {
        Failure::Domain(e.to_string())
    }

    fn input(e: impl ToString) -> Failure {
        Failure::Input(e.to_string())
    }
}

impl From<JobError> for Failure {
    fn from(e: JobError) -> Self {
        Failure::domain(e)
    }
}

#[derive(Serialize)]
struct ErrorReport<'a> {
    error: &'a str,
    message: &'a str,
}

fn read_json<T: serde::de::DeserializeOwned>(path: &Path) -> Result<T, Failure> {
    let text = std::fs::read_to_string(path).map_err(|e| Failure::input(format!("{}: {e}", path.display())))?;
    serde_json::from_str(&text).map_err(|e| Failure::input(format!("{}: {e}", path.display())))
}

fn emit<T: Serialize>(value: &T) {
    println!("{}", serde_json::to_string_pretty(value).expect("reports serialize"));
}

fn cmd_cosets(cli: &Cli, n: usize, q: u64) -> Result<(), Failure> {
    let cosets = cyclotomic_cosets(n, q).map_err(Failure::domain)?;
    if cli.pretty {
        for c in &cosets.cosets {
            println!("C_{}: {:?}", c[0], c);
        }
    } else {
        emit(&cosets);
    }
    Ok(())
}

fn cmd_split(cli: &Cli, n: usize, q: u64, m: usize, a: Option<i64>, absorb_orbits: bool, limit: Option<usize>) -> Result<(), Failure> {
    let field = Gf::from_order(q).map_err(Failure::domain)?;
    let amb = CyclicAmbient::new(n, field).map_err(Failure::domain)?;
    let found = find_splittings(&amb, m, a, SplittingOptions { absorb_orbits, limit }).map_err(Failure::domain)?;
    if cli.pretty {
        for s in &found {
            println!("a={} S={:?} S_inf={:?}", s.a, s.s, s.s_inf);
        }
        println!("{} splitting(s)", found.len());
    } else {
        let out: Vec<job::SplittingReport> = found.iter().map(Into::into).collect();
        emit(&out);
    }
    Ok(())
}

fn job_budget(cli: &Cli, job: &JobSpec) -> u64 {
    job.budget.unwrap_or(cli.budget)
}

fn print_analysis(label: &str, a: &job::Analysis) {
    let g = a.griesmer.map_or("-".to_string(), |g| format!("{g:?}"));
    println!(
        "{label}: [{},{},{}] self-orthogonal={} self-dual={} lcd={} hull={} griesmer={g}",
        a.n, a.k, a.d, a.flags.self_orthogonal, a.flags.self_dual, a.flags.lcd, a.hull_dimension
    );
}

fn cmd_construct(cli: &Cli, path: &Path) -> Result<(), Failure> {
    let job: JobSpec = read_json(path)?;
    let r = job::construct(&job, job_budget(cli, &job))?;
    if cli.pretty {
        println!("GF({}) n={} m={} kl={}", r.q, r.n, r.m, r.kl);
        println!("a={} S={:?} S_inf={:?}", r.splitting.a, r.splitting.s, r.splitting.s_inf);
        println!("mu_-1 shift={:?} gamma={:?} lambda={:?}", r.neg_one_shift, r.gamma, r.lambda);
        for (name, e) in &r.idempotents {
            println!("{name} = {e}");
        }
        let p = &r.code.params;
        println!("{}: [{},{},{}] log_q|C|={}", r.code.name, p.n, p.k, p.d, p.log_size);
        print_analysis("Gray image", &r.gray);
        if let Some(e) = &r.gray_extended {
            print_analysis("Gray image of the extension", e);
        }
    } else {
        emit(&r);
    }
    Ok(())
}

fn cmd_gray(cli: &Cli, path: &Path) -> Result<(), Failure> {
    let job: JobSpec = read_json(path)?;
    let built = job::build(&job)?;
    let g = job::gray_matrix(&built, job.extend)?;
    if cli.pretty {
        println!("[{},{}] over GF({})", g.n(), g.k(), g.field().q());
        for row in g.rows() {
            println!("{}", row.iter().map(|x| x.0.to_string()).collect::<Vec<_>>().join(" "));
        }
    } else {
        emit(&g.to_json());
    }
    Ok(())
}

fn cmd_analyze(cli: &Cli, path: &Path) -> Result<(), Failure> {
    let m: MatrixJson = read_json(path)?;
    let g = GeneratorMatrix::from_json(&m).map_err(Failure::domain)?;
    let a = job::analyze(&g, cli.budget);
    if cli.pretty {
        print_analysis("code", &a);
    } else {
        emit(&a);
    }
    Ok(())
}

fn props_spec(n: Option<usize>, q: Option<u64>, m: Option<usize>, a: Option<i64>, spec: Option<&Path>) -> Result<InstanceSpec, Failure> {
    let mut s = match (spec, n, q, m) {
        (Some(path), _, _, _) => read_json(path)?,
        (None, Some(n), Some(q), Some(m)) => default_instance(q, n, m).map_err(Failure::domain)?,
        _ => return Err(Failure::input("props needs --spec or all of --n, --q, --m")),
    };
    if a.is_some() {
        s.a = a;
    }
    Ok(s)
}

fn cmd_verify(cli: &Cli, target: &str, props: Option<InstanceSpec>) -> Result<(), Failure> {
    let reports: Vec<Report> = match (target, props) {
        ("props", Some(spec)) => vec![verify::props(&spec, cli.budget)],
        ("all", _) => verify::TARGETS.iter().map(|t| verify::run(t, cli.budget).expect("known target")).collect(),
        (t, _) => vec![verify::run(t, cli.budget).ok_or_else(|| Failure::input(format!("unknown target {t:?}")))?],
    };
    if cli.pretty {
        for r in &reports {
            for line in r.lines() {
                println!("{line}");
            }
        }
        let count = |s| reports.iter().map(|r| r.count(s)).sum::<usize>();
        println!(
            "{} passed, {} failed, {} skipped, {} annotations",
            count(Status::Pass),
            count(Status::Fail),
            count(Status::Skipped),
            count(Status::Annotation)
        );
    } else {
        emit(&reports);
    }
    if reports.iter().all(Report::passed) {
        Ok(())
    } else {
        Err(Failure::Verification)
    }
}

fn run(cli: &Cli) -> Result<(), Failure> {
    match &cli.command {
        Command::Cosets { n, q } => cmd_cosets(cli, *n, *q),
        Command::Split { n, q, m, a, absorb_orbits, limit } => cmd_split(cli, *n, *q, *m, *a, *absorb_orbits, *limit),
        Command::Construct { spec } => cmd_construct(cli, spec),
        Command::Gray { spec } => cmd_gray(cli, spec),
        Command::Analyze { spec } => cmd_analyze(cli, spec),
        Command::Verify { target, n, q, m, a, spec } => {
            let props = if target == "props" { Some(props_spec(*n, *q, *m, *a, spec.as_deref())?) } else { None };
            cmd_verify(cli, target, props)
        }
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) if e.use_stderr() => {
            let _ = e.print();
            return ExitCode::from(3);
        }
        Err(e) => {
            let _ = e.print();
            return ExitCode::SUCCESS;
        }
    };
    let (code, kind, message) = match run(&cli) {
        Ok(()) => return ExitCode::SUCCESS,
        Err(Failure::Verification) => return ExitCode::from(1),
        Err(Failure::Domain(m)) => (2, "domain", m),
        Err(Failure::Input(m)) => (3, "input", m),
    };
    eprintln!("{}", serde_json::to_string(&ErrorReport { error: kind, message: &message }).expect("serializes"));
    ExitCode::from(code)
}
