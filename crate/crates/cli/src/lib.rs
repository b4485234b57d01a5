//! Command-line front end for `grpn-core`: argument parsing, JSON input and
//! output, and the acceptance fixtures.
//!
//! Every command produces one JSON document.  Errors are reported as
//! `{"error": {"kind", "message"}}` with exit status 2 (validation),
//! 3 (verification failure) or 4 (inconsistent input data).

pub mod acceptance;
pub mod json;

use std::fs;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use grpn_core::combin::{Composition, Multipartition};
use grpn_core::decomp::{
    assemble_matrix, d_product, dim_report, g_ratio, split_result, splittable_number, AssembleOptions, DecompTable,
    TableSet,
};
use grpn_core::elements::{trace_vbtb, verify_changing, verify_changing_all, verify_comparison, verify_pleftmult};
use grpn_core::exactnum::{generic_field, CycRat, RatFunc, SpecPoint};
use grpn_core::scalars::{f_lambda_closed, g_lambda, root_data, schur_element, verify_factorization};
use grpn_core::seminormal::{check_relations, Mode, SeminormalRep};
use grpn_core::{Error, ErrorKind};
use rayon::prelude::*;
use serde_json::{json, Value};

use crate::json::{
    comp_to_json, labels_from_json, matrix_to_json, mp_from_json, mp_to_json, rational_to_json, reduce_matrix_mod,
    table_set_from_json, table_set_to_json, table_to_json,
};

/// A failed command, classified by exit status.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum CliError {
    /// Malformed request (exit 2).
    Validation(String),
    /// A verification produced a mismatch (exit 3).
    Verification(String),
    /// Inconsistent input data (exit 4).
    InputData(String),
    /// Internal invariant violated (exit 1).
    Internal(String),
}

impl CliError {
    /// Process exit status.
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Validation(_) => 2,
            CliError::Verification(_) => 3,
            CliError::InputData(_) => 4,
            CliError::Internal(_) => 1,
        }
    }

    fn kind(&self) -> &'static str {
        match self {
            CliError::Validation(_) => "validation",
            CliError::Verification(_) => "verification",
            CliError::InputData(_) => "input-data",
            CliError::Internal(_) => "internal",
        }
    }

    /// Human-readable message.
    pub fn message(&self) -> &str {
        match self {
            CliError::Validation(m) | CliError::Verification(m) | CliError::InputData(m) | CliError::Internal(m) => m,
        }
    }

    /// The machine-readable error document.
    pub fn to_json(&self) -> Value {
        json!({"error": {"kind": self.kind(), "message": self.message()}})
    }
}

impl From<Error> for CliError {
    fn from(e: Error) -> Self {
        let msg = format!("{} [{}]", e, e.tag());
        match e.kind() {
            ErrorKind::Validation => CliError::Validation(msg),
            ErrorKind::Verification => CliError::Verification(msg),
            ErrorKind::InputData => CliError::InputData(msg),
            ErrorKind::Internal => CliError::Internal(msg),
        }
    }
}

/// How elements are compared.
#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum ModeArg {
    /// Symbolic when `r^n n! ≤ 40`, otherwise at sampled points.
    Auto,
    /// Over the generic function field.
    Symbolic,
    /// At `--trials` sampled separated points.
    Specialize,
}

/// A job: the command plus the shared parameter flags.
#[derive(Parser, Debug, Clone)]
#[command(name = "grpn", version, about = "Exact computations for cyclotomic Hecke algebras of type G(r,p,n)")]
pub struct JobSpec {
    /// The command.
    #[command(subcommand)]
    pub command: Command,
    /// Order of ε.
    #[arg(long, global = true)]
    pub p: Option<usize>,
    /// Number of Q parameters per block.
    #[arg(long, global = true)]
    pub d: Option<usize>,
    /// Number of strands.
    #[arg(long, global = true)]
    pub n: Option<usize>,
    /// Block sizes, e.g. `[2,1]` or `2,1`.
    #[arg(long, global = true)]
    pub b: Option<String>,
    /// A multipartition as JSON, e.g. `[[1],[1]]`.
    #[arg(long, global = true)]
    pub lambda: Option<String>,
    /// A second multipartition as JSON.
    #[arg(long, global = true)]
    pub mu: Option<String>,
    /// Field mode for element comparisons.
    #[arg(long, global = true, value_enum, default_value = "auto")]
    pub mode: ModeArg,
    /// Number of sampled points in specialize mode.
    #[arg(long, global = true, default_value_t = 3)]
    pub trials: usize,
    /// Seed for sampled points and random tables.
    #[arg(long, global = true, default_value_t = 1)]
    pub seed: u64,
    /// Characteristic to reduce decomposition numbers modulo.
    #[arg(long = "char", global = true)]
    pub characteristic: Option<u64>,
    /// Decomposition tables (JSON).
    #[arg(long, global = true)]
    pub tables: Option<PathBuf>,
    /// Kleshchev labels (JSON array of multipartitions).
    #[arg(long, global = true)]
    pub klesh: Option<PathBuf>,
    /// Write the output here instead of standard output.
    #[arg(long, global = true)]
    pub out: Option<PathBuf>,
    /// Evaluate at this point instead: integers `q,Q_1,…,Q_d`.
    #[arg(long, global = true)]
    pub point: Option<String>,
}

/// Subcommands.
#[derive(Subcommand, Debug, Clone)]
pub enum Command {
    /// List the multipartitions in P_{r,n} (or P_{d,b} with --b).
    Enumerate,
    /// Check the defining relations in every seminormal representation.
    SeminormalCheck,
    /// Verify an element identity.
    Verify {
        /// Which identity.
        #[arg(value_enum)]
        what: VerifyKind,
        /// Only this index j (for `changing`).
        #[arg(long)]
        j: Option<usize>,
    },
    /// Compute a scalar of a multipartition.
    Scalar {
        /// Which scalar.
        #[arg(value_enum)]
        what: ScalarKind,
    },
    /// A splittable decomposition number [S^λ_i : D^μ_j].
    Splittable(SplittableArgs),
    /// Assemble the decomposition matrix of H_{r,p,n}.
    Assemble,
    /// Emit semisimple (identity) decomposition tables.
    SemisimpleTables {
        /// Number of components of a single table.
        #[arg(long)]
        s: Option<usize>,
        /// Size of a single table.
        #[arg(long)]
        m: Option<usize>,
        /// Parameter twist ε^t of a single table.
        #[arg(long, default_value_t = 0, allow_hyphen_values = true)]
        eps_power: i64,
    },
    /// Run an acceptance suite (`desk` or `quick`).
    Fixtures {
        /// Suite name.
        suite: String,
    },
    /// Reduce the entries of a matrix document modulo --char.
    ReduceMod {
        /// The matrix document (JSON).
        #[arg(long)]
        input: PathBuf,
    },
}

/// Identities available to `verify`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum VerifyKind {
    /// The changing identities for Y_j.
    Changing,
    /// Left multiplication by the central element.
    Pleftmult,
    /// The trace comparison over the tensor basis.
    Comparison,
    /// Closed form of Tr(v_b T_b) against its character expansion.
    TraceVbtb,
    /// g_λ^{p_λ} = ε^E f_λ.
    Factorization,
}

/// Scalars available to `scalar`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum ScalarKind {
    /// The Schur element s_λ.
    Schur,
    /// The scalar f_λ.
    F,
    /// The root g_λ.
    G,
}

/// Arguments of `splittable`.
#[derive(Args, Debug, Clone)]
pub struct SplittableArgs {
    /// Row index i.
    #[arg(long, default_value_t = 1)]
    pub i: usize,
    /// Column index j.
    #[arg(long, default_value_t = 1)]
    pub j: usize,
    /// Use the ratio g_λ/g_μ = ε^k instead of computing it.
    #[arg(long, allow_hyphen_values = true)]
    pub ratio_eps: Option<i64>,
}

fn need<T: Clone>(v: &Option<T>, flag: &str) -> Result<T, CliError> {
    v.clone()
        .ok_or_else(|| CliError::Validation(format!("missing required flag --{}", flag)))
}

fn parse_json_arg(s: &str, flag: &str) -> Result<Value, CliError> {
    serde_json::from_str(s).map_err(|e| CliError::Validation(format!("--{} is not valid JSON: {}", flag, e)))
}

fn parse_list(s: &str, flag: &str) -> Result<Vec<i64>, CliError> {
    let t = s.trim().trim_start_matches('[').trim_end_matches(']');
    if t.trim().is_empty() {
        return Ok(Vec::new());
    }
    t.split(',')
        .map(|x| {
            x.trim()
                .parse::<i64>()
                .map_err(|_| CliError::Validation(format!("--{}: {:?} is not an integer", flag, x)))
        })
        .collect()
}

fn read_json(path: &PathBuf) -> Result<Value, CliError> {
    let text = fs::read_to_string(path)
        .map_err(|e| CliError::Validation(format!("cannot read {}: {}", path.display(), e)))?;
    serde_json::from_str(&text).map_err(|e| CliError::InputData(format!("{} is not valid JSON: {}", path.display(), e)))
}

impl JobSpec {
    fn pd(&self) -> Result<(usize, usize), CliError> {
        let p = need(&self.p, "p")?;
        let d = self.d.unwrap_or(1);
        if p == 0 || d == 0 {
            return Err(CliError::Validation("--p and --d must be positive".into()));
        }
        Ok((p, d))
    }

    fn composition(&self) -> Result<Composition, CliError> {
        let raw = parse_list(&need(&self.b, "b")?, "b")?;
        if raw.iter().any(|&x| x < 0) {
            return Err(CliError::Validation("--b entries must be nonnegative".into()));
        }
        let b = Composition::new(raw.into_iter().map(|x| x as usize).collect());
        if let Some(p) = self.p {
            if b.parts().len() != p {
                return Err(CliError::Validation(format!("--b has {} parts but --p is {}", b.parts().len(), p)));
            }
        }
        if let Some(n) = self.n {
            if b.total() != n {
                return Err(CliError::Validation(format!("--b sums to {} but --n is {}", b.total(), n)));
            }
        }
        Ok(b)
    }

    fn multipartition(&self, which: &str) -> Result<Multipartition, CliError> {
        let raw = if which == "mu" { &self.mu } else { &self.lambda };
        let v = parse_json_arg(&need(raw, which)?, which)?;
        let l = mp_from_json(&v).map_err(|e| CliError::Validation(e.message().to_string()))?;
        if let Ok((p, d)) = self.pd() {
            if l.r() != p * d {
                return Err(CliError::Validation(format!("--{} has {} components but r = pd = {}", which, l.r(), p * d)));
            }
        }
        if let Some(n) = self.n {
            if l.size() != n {
                return Err(CliError::Validation(format!("--{} has size {} but --n is {}", which, l.size(), n)));
            }
        }
        Ok(l)
    }

    fn mode(&self, r: usize, n: usize) -> Mode {
        match self.mode {
            ModeArg::Auto => Mode::default_for(r, n, self.seed),
            ModeArg::Symbolic => Mode::Symbolic,
            ModeArg::Specialize => Mode::Specialize {
                trials: self.trials.max(1),
                seed: self.seed,
            },
        }
    }

    fn point(&self, p: usize, d: usize) -> Result<Option<SpecPoint>, CliError> {
        let Some(raw) = &self.point else { return Ok(None) };
        let v = parse_list(raw, "point")?;
        if v.len() != d + 1 {
            return Err(CliError::Validation(format!("--point needs q and {} Q values", d)));
        }
        Ok(Some(SpecPoint::integers(p, v[0], &v[1..])?))
    }

    fn table_set(&self, p: usize, d: usize, n: usize) -> Result<TableSet, CliError> {
        match &self.tables {
            None => Ok(TableSet::semisimple(p, d, n)?),
            Some(path) => table_set_from_json(&read_json(path)?, p, d),
        }
    }
}

fn mode_json(m: Mode) -> Value {
    match m {
        Mode::Symbolic => json!({"kind": "symbolic"}),
        Mode::Specialize { trials, seed } => json!({"kind": "specialize", "trials": trials, "seed": seed}),
    }
}

/// Legend for the variables in printed rational functions.
fn variables(d: usize, p: usize) -> Value {
    let mut m = serde_json::Map::new();
    m.insert("x0".into(), json!("q"));
    for i in 1..=d {
        m.insert(format!("x{}", i), json!(format!("Q_{}", i)));
    }
    m.insert("zN".into(), json!(format!("primitive N-th root of unity; ε = zN^(N/{})", p)));
    Value::Object(m)
}

fn verdict(ok: bool, what: &str, out: Value) -> Result<Value, CliError> {
    if ok {
        Ok(out)
    } else {
        Err(CliError::Verification(format!("{} failed: {}", what, out)))
    }
}

fn cmd_enumerate(job: &JobSpec) -> Result<Value, CliError> {
    let (p, d) = job.pd()?;
    let (list, n) = match &job.b {
        Some(_) => {
            let b = job.composition()?;
            (Multipartition::enumerate_pdb(d, &b), b.total())
        }
        None => {
            let n = need(&job.n, "n")?;
            (Multipartition::all(p * d, n), n)
        }
    };
    let mut items = Vec::with_capacity(list.len());
    for l in &list {
        let rep = dim_report(l, p, d)?;
        let (o, _) = l.orbit_order(p, d)?;
        items.push(json!({
            "lambda": mp_to_json(l),
            "b": comp_to_json(&l.block_sizes(p, d)?),
            "dim": rep.dim.to_string(),
            "o": o,
            "p_lambda": rep.p_lam,
            "dim_t": rep.dim_t.to_string(),
        }));
    }
    Ok(json!({"p": p, "d": d, "r": p * d, "n": n, "count": list.len(), "multipartitions": items}))
}

fn cmd_seminormal_check(job: &JobSpec) -> Result<Value, CliError> {
    let (p, d) = job.pd()?;
    let shapes = match &job.lambda {
        Some(_) => vec![job.multipartition("lambda")?],
        None => Multipartition::all(p * d, need(&job.n, "n")?),
    };
    let n = shapes.first().map_or(0, Multipartition::size);
    let mode = job.mode(p * d, n);
    let reports: Vec<Result<Value, Error>> = shapes
        .par_iter()
        .map(|lam| {
            let (checked, failures) = match mode {
                Mode::Symbolic => {
                    let r = check_relations(&SeminormalRep::build(lam, &generic_field(p, d)?)?);
                    (r.checked, r.failures)
                }
                Mode::Specialize { trials, seed } => {
                    let (mut c, mut f) = (0, Vec::new());
                    for pt in SpecPoint::sample_many(p, d, lam.size(), seed, trials)? {
                        let r = check_relations(&SeminormalRep::build(lam, &pt)?);
                        c += r.checked;
                        f.extend(r.failures);
                    }
                    (c, f)
                }
            };
            Ok(json!({"lambda": mp_to_json(lam), "checked": checked, "failures": failures}))
        })
        .collect();
    let reports = reports.into_iter().collect::<Result<Vec<_>, _>>()?;
    let ok = reports.iter().all(|r| r["failures"].as_array().is_some_and(Vec::is_empty));
    let out = json!({"p": p, "d": d, "n": n, "mode": mode_json(mode), "passed": ok, "reports": reports});
    verdict(ok, "seminormal-check", out)
}

fn cmd_verify(job: &JobSpec, what: VerifyKind, j: Option<usize>) -> Result<Value, CliError> {
    let d = job.d.unwrap_or(1);
    if what == VerifyKind::Factorization {
        let (p, d) = job.pd()?;
        let lam = job.multipartition("lambda")?;
        let b = match &job.b {
            Some(_) => job.composition()?,
            None => lam.block_sizes(p, d)?,
        };
        let f = generic_field(p, d)?;
        let rd = root_data(&lam, &b, p, d)?;
        let chk = verify_factorization(&lam, &b, &f)?;
        let out = json!({
            "check": "factorization", "p": p, "d": d, "lambda": mp_to_json(&lam), "b": comp_to_json(&b),
            "o": rd.o, "p_lambda": rd.l, "alpha": rd.alpha, "gamma": rd.gamma,
            "g": chk.g_power.to_string(), "passed": chk.passed(),
        });
        return verdict(chk.passed(), "factorization", out);
    }
    let b = job.composition()?;
    let p = b.parts().len();
    let mode = job.mode(p * d, b.total());
    let base = |passed: bool| {
        json!({
            "check": format!("{:?}", what).to_lowercase(), "p": p, "d": d, "n": b.total(),
            "b": comp_to_json(&b), "mode": mode_json(mode), "passed": passed,
        })
    };
    match what {
        VerifyKind::Changing => {
            let ok = match j {
                Some(j) => verify_changing(d, &b, j, mode)?,
                None => verify_changing_all(d, &b, mode)?,
            };
            verdict(ok, "changing", base(ok))
        }
        VerifyKind::Pleftmult => {
            let ok = verify_pleftmult(d, &b, mode)?;
            verdict(ok, "pleftmult", base(ok))
        }
        VerifyKind::Comparison => {
            let rep = verify_comparison(d, &b, mode)?;
            let mut out = base(rep.passed());
            out["checked"] = json!(rep.checked);
            out["l_part_zero"] = json!(rep.l_part_zero);
            out["failures"] = json!(rep.failures);
            verdict(rep.passed(), "comparison", out)
        }
        VerifyKind::TraceVbtb => {
            let f = generic_field(p, d)?;
            let chk = trace_vbtb(&f, &b)?;
            let mut out = base(chk.passed());
            out["closed"] = json!(chk.closed.to_string());
            out["expansion"] = json!(chk.expansion.to_string());
            out["mode"] = mode_json(Mode::Symbolic);
            verdict(chk.passed(), "trace-vbtb", out)
        }
        VerifyKind::Factorization => unreachable!("handled above"),
    }
}

fn cmd_scalar(job: &JobSpec, what: ScalarKind) -> Result<Value, CliError> {
    let (p, d) = job.pd()?;
    let lam = job.multipartition("lambda")?;
    let b = match &job.b {
        Some(_) => job.composition()?,
        None => lam.block_sizes(p, d)?,
    };
    let f = generic_field(p, d)?;
    let (name, value): (&str, RatFunc) = match what {
        ScalarKind::Schur => ("schur", schur_element(&lam, &f)?),
        ScalarKind::F => ("f", f_lambda_closed(&lam, &b, &f)?),
        ScalarKind::G => ("g", g_lambda(&lam, &b, &f)?),
    };
    let mut out = json!({
        "scalar": name, "p": p, "d": d, "lambda": mp_to_json(&lam), "b": comp_to_json(&b),
        "value": value.to_string(), "variables": variables(d, p),
    });
    if what == ScalarKind::G {
        let rd = root_data(&lam, &b, p, d)?;
        out["o"] = json!(rd.o);
        out["p_lambda"] = json!(rd.l);
        out["alpha"] = json!(rd.alpha);
        out["gamma"] = json!(rd.gamma);
    }
    if let Some(pt) = job.point(p, d)? {
        let v: CycRat = match what {
            ScalarKind::Schur => schur_element(&lam, &pt)?,
            ScalarKind::F => f_lambda_closed(&lam, &b, &pt)?,
            ScalarKind::G => g_lambda(&lam, &b, &pt)?,
        };
        out["at_point"] = json!(v.to_string());
    }
    Ok(out)
}

fn cmd_splittable(job: &JobSpec, args: &SplittableArgs) -> Result<Value, CliError> {
    let (p, d) = job.pd()?;
    let lam = job.multipartition("lambda")?;
    let mu = job.multipartition("mu")?;
    let b = lam.block_sizes(p, d)?;
    let tables = job.table_set(p, d, lam.size())?;
    let (o, l) = lam.orbit_order(p, d)?;
    let ratio = match args.ratio_eps {
        Some(k) => acceptance::eps_power(p, k)?,
        None if l == 1 => acceptance::eps_power(p, 0)?,
        None => g_ratio(&lam, &mu, &b, p, d, job.point(p, d)?.as_ref())?,
    };
    let v = splittable_number(&lam, &mu, args.i, args.j, &tables, &ratio, job.characteristic)?;
    let all = split_result(&lam, &mu, &tables, &ratio, job.characteristic)?;
    Ok(json!({
        "p": p, "d": d, "lambda": mp_to_json(&lam), "mu": mp_to_json(&mu),
        "i": args.i, "j": args.j, "l": l,
        "block_product": d_product(&lam, &mu, o, &tables)?,
        "ratio": ratio.to_string(),
        "value": rational_to_json(&v.value),
        "residue": v.residue,
        "characteristic": job.characteristic,
        "d_values": all.values.iter().map(rational_to_json).collect::<Vec<_>>(),
    }))
}

fn cmd_assemble(job: &JobSpec) -> Result<Value, CliError> {
    let (p, d) = job.pd()?;
    let n = need(&job.n, "n")?;
    let tables = job.table_set(p, d, n)?;
    let klesh = match &job.klesh {
        None => Multipartition::all(p * d, n),
        Some(path) => labels_from_json(&read_json(path)?)?,
    };
    let opts = AssembleOptions {
        characteristic: job.characteristic,
        point: job.point(p, d)?,
    };
    Ok(matrix_to_json(&assemble_matrix(p, d, n, &tables, &klesh, &opts)?))
}

fn cmd_semisimple_tables(job: &JobSpec, s: Option<usize>, m: Option<usize>, eps_power: i64) -> Result<Value, CliError> {
    match (s, m) {
        (Some(s), Some(m)) => Ok(table_to_json(&DecompTable::semisimple(s, m, eps_power))),
        (None, None) => {
            let (p, d) = job.pd()?;
            Ok(table_set_to_json(&TableSet::semisimple(p, d, need(&job.n, "n")?)?))
        }
        _ => Err(CliError::Validation("give both --s and --m, or neither (with --p --d --n)".into())),
    }
}

fn cmd_fixtures(suite: &str) -> Result<Value, CliError> {
    let scale = acceptance::Scale::from_name(suite)
        .ok_or_else(|| CliError::Validation(format!("unknown suite {:?}; expected \"desk\" or \"quick\"", suite)))?;
    let results = acceptance::run_all(scale);
    let ok = results.iter().all(|r| r.passed);
    let out = json!({"suite": scale, "passed": ok, "criteria": results});
    verdict(ok, "fixtures", out)
}

fn cmd_reduce_mod(job: &JobSpec, input: &PathBuf) -> Result<Value, CliError> {
    let k = need(&job.characteristic, "char")?;
    reduce_matrix_mod(&read_json(input)?, k)
}

/// Run a job, returning its JSON output.
pub fn run(job: &JobSpec) -> Result<Value, CliError> {
    match &job.command {
        Command::Enumerate => cmd_enumerate(job),
        Command::SeminormalCheck => cmd_seminormal_check(job),
        Command::Verify { what, j } => cmd_verify(job, *what, *j),
        Command::Scalar { what } => cmd_scalar(job, *what),
        Command::Splittable(args) => cmd_splittable(job, args),
        Command::Assemble => cmd_assemble(job),
        Command::SemisimpleTables { s, m, eps_power } => cmd_semisimple_tables(job, *s, *m, *eps_power),
        Command::Fixtures { suite } => cmd_fixtures(suite),
        Command::ReduceMod { input } => cmd_reduce_mod(job, input),
    }
}

/// Parse arguments, run, and render: returns the exit status and the text
/// to emit (the JSON document, pretty-printed, with a trailing newline).
pub fn run_args<I, T>(args: I) -> (i32, String)
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let job = match JobSpec::try_parse_from(args) {
        Ok(j) => j,
        Err(e) => {
            use clap::error::ErrorKind as K;
            if matches!(e.kind(), K::DisplayHelp | K::DisplayVersion) {
                return (0, e.to_string());
            }
            let err = CliError::Validation(e.to_string());
            return (err.exit_code(), render(&err.to_json()));
        }
    };
    let (code, doc) = match run(&job) {
        Ok(v) => (0, v),
        Err(e) => (e.exit_code(), e.to_json()),
    };
    let text = render(&doc);
    if let Some(path) = &job.out {
        if let Err(e) = fs::write(path, &text) {
            let err = CliError::Validation(format!("cannot write {}: {}", path.display(), e));
            return (err.exit_code(), render(&err.to_json()));
        }
        return (code, String::new());
    }
    (code, text)
}

/// Pretty-print a document with a trailing newline.
pub fn render(v: &Value) -> String {
    let mut s = serde_json::to_string_pretty(v).expect("JSON values always serialize");
    s.push('\n');
    s
}
