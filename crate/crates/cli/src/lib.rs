//! Command-line front end: model files in, deterministic JSON reports out.

pub mod model;
pub mod report;

use std::ffi::OsString;
use std::io::Write;
use std::path::{Path, PathBuf};
use std::str::FromStr;
use std::time::Instant;

use clap::{Parser, Subcommand, ValueEnum};
use frobcheck_core::criteria::{self, GorensteinMethod, Grid, ModuleArg};
use frobcheck_core::frobenius::{self, TorMethod};
use frobcheck_core::{invariants, module, Error, InvariantBundle, Polynomial, Result, SopSequence};
use serde::Serialize;
use serde_json::{json, Value};

use model::Model;
use report::{exit, Report};

#[derive(Debug, Parser)]
#[command(
    name = "frobcheck",
    version,
    about = "Frobenius criteria checks over F_p[x]/I"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
    /// Write the report to this file instead of standard output.
    #[arg(long, global = true)]
    pub out: Option<PathBuf>,
    /// Also write the command's table as tab-separated values to this file.
    #[arg(long, global = true)]
    pub tsv: Option<PathBuf>,
    /// Record wall time in the report (outside the digested payload).
    #[arg(long, global = true)]
    pub timing: bool,
}

#[derive(Debug, Clone, Subcommand, Serialize)]
#[serde(tag = "name", rename_all = "lowercase")]
pub enum Command {
    /// Dimension, depth, type, κ bounds and module invariants.
    Info { model: PathBuf },
    /// Minimal free resolution of a module.
    Resolve {
        model: PathBuf,
        /// Declared module name, or R, k, omega
        #[arg(short = 'm', long = "module")]
        module: String,
        #[arg(short = 'L', long = "length", default_value_t = 3)]
        length: usize,
    },
    /// Presentation of F^n(M).
    Frobenius {
        model: PathBuf,
        /// Declared module name, or R, k, omega
        #[arg(short = 'm', long = "module")]
        module: String,
        #[arg(short = 'n', default_value_t = 1)]
        n: u32,
    },
    /// Tor_i(M, F_*^n R) by one or both methods.
    Tor {
        model: PathBuf,
        /// Declared module name, or R, k, omega
        #[arg(short = 'm', long = "module")]
        module: String,
        #[arg(short = 'n', default_value_t = 1)]
        n: u32,
        #[arg(short = 'i', default_value_t = 1)]
        i: usize,
        #[arg(long, value_enum, default_value_t = TorChoice::Both)]
        method: TorChoice,
    },
    /// Consistency check of one criterion.
    Check {
        #[arg(value_enum)]
        criterion: Criterion,
        model: PathBuf,
        /// Declared module name, or R, k, omega
        #[arg(short = 'm', long = "module")]
        module: Option<String>,
        /// Declared s.o.p. name
        #[arg(short = 's', long = "sop")]
        sop: Option<String>,
        /// Defaults to max(κ bound, 1).
        #[arg(short = 'n')]
        n: Option<u32>,
        /// Largest i on the grid; defaults to d + 1.
        #[arg(long = "i-max")]
        i_max: Option<usize>,
        /// Largest n on the grid; defaults to max(2, n).
        #[arg(long = "n-max")]
        n_max: Option<u32>,
        #[arg(long, value_enum)]
        method: Option<GorensteinChoice>,
    },
    /// Window scans.
    Scan {
        #[arg(value_enum)]
        kind: ScanKind,
        model: PathBuf,
        /// Declared module name, or R, k, omega
        #[arg(short = 'm', long = "module")]
        module: String,
        #[arg(long = "n-range", value_parser = parse_range::<u32>, default_value = "1..2")]
        n_range: (u32, u32),
        #[arg(long = "i-range", value_parser = parse_range::<usize>, default_value = "1..3")]
        i_range: (usize, usize),
    },
}

#[derive(Debug, Clone, Copy, ValueEnum, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum TorChoice {
    Functor,
    Pushforward,
    Both,
}

#[derive(Debug, Clone, Copy, ValueEnum, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Criterion {
    Main1,
    Kl,
    Free,
    Codim1,
    Gorenstein,
}

#[derive(Debug, Clone, Copy, ValueEnum, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum GorensteinChoice {
    CanonicalFrobenius,
    ExtPushforward,
    TorOmega,
    All,
}

#[derive(Debug, Clone, Copy, ValueEnum, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum ScanKind {
    Rigidity,
}

/// Parses `a..b` (inclusive).
pub fn parse_range<T: FromStr + PartialOrd + Copy>(s: &str) -> std::result::Result<(T, T), String> {
    let (a, b) = s
        .split_once("..")
        .ok_or_else(|| format!("expected a..b, got {s:?}"))?;
    let a: T = a
        .trim()
        .parse()
        .map_err(|_| format!("bad range start in {s:?}"))?;
    let b: T = b
        .trim()
        .parse()
        .map_err(|_| format!("bad range end in {s:?}"))?;
    if a > b {
        return Err(format!("empty range {s:?}"));
    }
    Ok((a, b))
}

/// Result of a command before wrapping into a [`Report`].
struct Outcome {
    payload: Value,
    /// An oracle disagreement outside criterion reports.
    mismatch: bool,
    table: Option<String>,
}

impl Outcome {
    fn new(payload: Value) -> Self {
        Outcome {
            payload,
            mismatch: false,
            table: None,
        }
    }
}

fn to_value(v: impl Serialize) -> Value {
    serde_json::to_value(v).expect("payloads serialize")
}

fn load(path: &Path) -> Result<Model> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| Error::argument(format!("cannot read {}: {e}", path.display())))?;
    let model = Model::from_json(&text).map_err(|e| match e {
        Error::Parse {
            line,
            column,
            message,
        } => Error::Parse {
            line,
            column,
            message: format!("{}: {message}", path.display()),
        },
        other => other,
    })?;
    model.verify_assertions()?;
    Ok(model)
}

/// κ upper bound over the declared s.o.p.s for R and the variable subsets.
fn kappa_candidates(model: &Model) -> Result<Vec<(String, Vec<Polynomial>)>> {
    let ring = &model.ring;
    let mut out = Vec::new();
    for (name, xs) in &model.sops {
        if invariants::is_sop(ring, xs)? {
            out.push((name.clone(), xs.clone()));
        }
    }
    for xs in frobenius::variable_sop_candidates(ring)? {
        let name = format!(
            "vars({})",
            xs.iter()
                .map(|x| ring.render(x))
                .collect::<Vec<_>>()
                .join(",")
        );
        out.push((name, xs));
    }
    Ok(out)
}

fn kappa_bound(model: &Model) -> Result<u32> {
    let cands: Vec<Vec<Polynomial>> = kappa_candidates(model)?.into_iter().map(|c| c.1).collect();
    if cands.is_empty() {
        return Err(Error::precondition(
            "no system of parameters available to bound κ",
        ));
    }
    frobenius::kappa_upper_bound(&model.ring, &cands)
}

fn info(model: &Model) -> Result<Outcome> {
    let ring = &model.ring;
    let dim = invariants::ring_dimension(ring)?;
    let depth = invariants::ring_depth(ring)?;
    let cm = depth == dim;
    let mut kappa = serde_json::Map::new();
    let mut best: Option<u32> = None;
    for (name, xs) in kappa_candidates(model)? {
        let cert = frobenius::kappa_for_sop(ring, &xs);
        let entry = match &cert {
            Ok(c) => {
                best = Some(best.map_or(c.t, |b| b.min(c.t)));
                json!({"sop": xs.iter().map(|x| ring.render(x)).collect::<Vec<_>>(), "certificate": c})
            }
            Err(e) => json!({"error": e.to_string()}),
        };
        kappa.insert(name, entry);
    }
    let mut modules = serde_json::Map::new();
    for name in model.modules.keys() {
        let m = model.module(name)?;
        let mut bundle = to_value(InvariantBundle::compute(&m.module)?);
        if bundle["rank"].is_null() {
            bundle["rank"] = json!(m.rank);
        }
        modules.insert(name.clone(), bundle);
    }
    let payload = json!({
        "ring": {
            "characteristic": ring.characteristic(),
            "variables": ring.poly().names(),
            "weights": ring.poly().weights(),
            "ideal": ring.ideal().iter().map(|g| ring.render(g)).collect::<Vec<_>>(),
            "domain": ring.flags().is_domain,
            "generically_gorenstein": ring.flags().generically_gorenstein,
        },
        "dimension": dim,
        "depth": depth,
        "cohen_macaulay": cm,
        "type": if cm { to_value(invariants::cm_type_and_gorenstein(ring)?) } else { Value::Null },
        "kappa": {"candidates": kappa, "upper_bound": best},
        "modules": modules,
    });
    Ok(Outcome::new(payload))
}

fn resolve(model: &Model, name: &str, length: usize) -> Result<Outcome> {
    let m = model.module(name)?;
    let g = module::minimal_free_resolution(&m.module, length)?;
    let ring = &model.ring;
    let diffs: Vec<Value> = g
        .differentials()
        .iter()
        .map(|d| json!(d.render(ring)))
        .collect();
    let table = report::tsv(
        &["step", "rank"],
        g.ranks()
            .iter()
            .enumerate()
            .map(|(i, r)| vec![i.to_string(), r.to_string()]),
    );
    Ok(Outcome {
        payload: json!({
            "module": name,
            "length": g.length(),
            "betti": g.ranks(),
            "minimal": g.is_minimal(),
            "differentials": diffs,
        }),
        mismatch: false,
        table: Some(table),
    })
}

fn frobenius_cmd(model: &Model, name: &str, n: u32) -> Result<Outcome> {
    let m = model.module(name)?;
    let power = frobenius::FrobeniusPower::new(&model.ring, n)?;
    let f = frobenius::frobenius_module(&m.module, n)?;
    Ok(Outcome::new(json!({
        "module": name,
        "power": power,
        "presentation": f.render(),
        "mu": f.min_generators()?,
        "length": f.length()?,
    })))
}

fn tor_cmd(model: &Model, name: &str, n: u32, i: usize, method: TorChoice) -> Result<Outcome> {
    let m = model.module(name)?;
    let methods: &[TorMethod] = match method {
        TorChoice::Functor => &[TorMethod::Functor],
        TorChoice::Pushforward => &[TorMethod::Pushforward],
        TorChoice::Both => &[TorMethod::Functor, TorMethod::Pushforward],
    };
    let mut results = serde_json::Map::new();
    let mut lengths = Vec::new();
    for &method in methods {
        let h = frobenius::tor_frobenius(&m.module, n, i, method)?;
        let len = h.length()?;
        lengths.push(len);
        results.insert(
            to_value(method).as_str().unwrap().to_string(),
            json!({"is_zero": h.is_zero, "length": len}),
        );
    }
    let agree = lengths.windows(2).all(|w| w[0] == w[1]);
    let mut payload = json!({"module": name, "n": n, "i": i, "methods": results});
    if lengths.len() > 1 {
        payload["oracles_agree"] = json!(agree);
    }
    Ok(Outcome {
        payload,
        mismatch: !agree,
        table: None,
    })
}

fn sop_sequence(model: &Model, name: Option<&str>) -> Result<Option<(String, SopSequence)>> {
    let ring = &model.ring;
    match name {
        Some(name) => Ok(Some((
            name.to_string(),
            SopSequence::certify(ring, model.sop(name)?)?,
        ))),
        None => Ok(frobenius::variable_sop_candidates(ring)?
            .into_iter()
            .next()
            .map(|xs| {
                SopSequence::certify(ring, &xs)
                    .map(|s| (format!("vars({})", s.rendered.join(",")), s))
            })
            .transpose()?),
    }
}

#[allow(clippy::too_many_arguments)]
fn check(
    model: &Model,
    criterion: Criterion,
    module: Option<&str>,
    sop: Option<&str>,
    n: Option<u32>,
    i_max: Option<usize>,
    n_max: Option<u32>,
    method: Option<GorensteinChoice>,
) -> Result<Outcome> {
    let ring = &model.ring;
    let kappa = kappa_bound(model)?;
    let n = n.unwrap_or(kappa.max(1));
    let dim = invariants::ring_dimension(ring)?.max(0) as usize;
    let grid = Grid {
        i_max: i_max.unwrap_or(dim + 1),
        n_max: n_max.unwrap_or(n.max(2)),
    };
    let need_module = || -> Result<(String, model::NamedModule)> {
        let name = module.ok_or_else(|| Error::argument("this check needs -m <module>"))?;
        Ok((name.to_string(), model.module(name)?))
    };
    let need_sop = || -> Result<(String, SopSequence)> {
        sop_sequence(model, sop)?.ok_or_else(|| Error::argument("this check needs -s <sop>"))
    };
    let mut reports = Vec::new();
    match criterion {
        Criterion::Main1 | Criterion::Kl => {
            let (name, m) = need_module()?;
            let arg = ModuleArg::with_rank(&m.module, m.rank);
            let mut r = match criterion {
                Criterion::Main1 => criteria::check_thm_main1(arg, n, kappa)?,
                _ => criteria::check_thm_kl(arg, n, kappa)?,
            };
            r.input("module", name);
            reports.push(r);
        }
        Criterion::Free => {
            let (name, m) = need_module()?;
            let (sname, x) = if sop.is_some() {
                need_sop()?
            } else {
                sop_sequence(model, None)?
                    .ok_or_else(|| Error::argument("this check needs -s <sop>"))?
            };
            let mut r = criteria::check_cor_free(
                ModuleArg::with_rank(&m.module, m.rank),
                &x,
                n,
                kappa,
                grid,
            )?;
            r.input("module", name).input("sop_name", sname);
            reports.push(r);
        }
        Criterion::Codim1 => {
            let (name, m) = need_module()?;
            let sname = sop.ok_or_else(|| {
                Error::argument("codim1 needs -s <sop> (an s.o.p. for the module)")
            })?;
            let x = SopSequence::certify(ring, model.sop(sname)?)?;
            let mut r = criteria::check_cor_codim1(&m.module, &x, n, kappa, grid)?;
            r.input("module", name).input("sop_name", sname);
            reports.push(r);
        }
        Criterion::Gorenstein => {
            let methods: Vec<GorensteinMethod> = match method.unwrap_or(GorensteinChoice::All) {
                GorensteinChoice::CanonicalFrobenius => vec![GorensteinMethod::CanonicalFrobenius],
                GorensteinChoice::ExtPushforward => vec![GorensteinMethod::ExtPushforward],
                GorensteinChoice::TorOmega => vec![GorensteinMethod::TorOmega],
                GorensteinChoice::All => GorensteinMethod::ALL.to_vec(),
            };
            let x = sop_sequence(model, sop)?;
            for method in methods {
                let mut r = criteria::check_gorenstein(
                    ring,
                    method,
                    x.as_ref().map(|p| &p.1),
                    n,
                    kappa,
                    grid.i_max,
                )?;
                if let Some((sname, _)) = &x {
                    r.input("sop_name", sname);
                }
                reports.push(r);
            }
        }
    }
    Ok(Outcome::new(
        json!({"kappa_bound": kappa, "reports": reports}),
    ))
}

fn scan(
    model: &Model,
    name: &str,
    n_range: (u32, u32),
    i_range: (usize, usize),
) -> Result<Outcome> {
    let m = model.module(name)?;
    let v = criteria::rigidity_scan(&m.module, n_range, i_range)?;
    let mut rows = Vec::new();
    for (a, row) in v.tor_vanishes.iter().enumerate() {
        for (b, &z) in row.iter().enumerate() {
            rows.push(vec![
                (n_range.0 + a as u32).to_string(),
                (i_range.0 + b).to_string(),
                z.to_string(),
            ]);
        }
    }
    Ok(Outcome {
        payload: json!({"module": name, "rigidity": v}),
        mismatch: false,
        table: Some(report::tsv(&["n", "i", "tor_vanishes"], rows)),
    })
}

fn model_path(c: &Command) -> &Path {
    match c {
        Command::Info { model }
        | Command::Resolve { model, .. }
        | Command::Frobenius { model, .. }
        | Command::Tor { model, .. }
        | Command::Check { model, .. }
        | Command::Scan { model, .. } => model,
    }
}

fn execute(cli: &Cli) -> Result<(Report, Option<String>, bool)> {
    let start = Instant::now();
    let model = load(model_path(&cli.command))?;
    let outcome = match &cli.command {
        Command::Info { .. } => info(&model)?,
        Command::Resolve { module, length, .. } => resolve(&model, module, *length)?,
        Command::Frobenius { module, n, .. } => frobenius_cmd(&model, module, *n)?,
        Command::Tor {
            module,
            n,
            i,
            method,
            ..
        } => tor_cmd(&model, module, *n, *i, *method)?,
        Command::Check {
            criterion,
            module,
            sop,
            n,
            i_max,
            n_max,
            method,
            ..
        } => check(
            &model,
            *criterion,
            module.as_deref(),
            sop.as_deref(),
            *n,
            *i_max,
            *n_max,
            *method,
        )?,
        Command::Scan {
            module,
            n_range,
            i_range,
            ..
        } => scan(&model, module, *n_range, *i_range)?,
    };
    let violation = outcome.mismatch || report::contains_violation(&outcome.payload);
    let mut report = Report::new(
        to_value(&cli.command),
        model.digest(),
        outcome.payload,
        model.ring.budget().usage(),
    );
    if cli.timing {
        report.wall_time_ms = Some(start.elapsed().as_millis() as u64);
    }
    Ok((report, outcome.table, violation))
}

fn write_file(path: &Path, text: &str) -> Result<()> {
    std::fs::write(path, text)
        .map_err(|e| Error::argument(format!("cannot write {}: {e}", path.display())))
}

/// Runs one command line, writing the report to `out` (or `--out`) and
/// diagnostics to `err`; returns the process exit code.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let _ = write!(err, "{e}");
            return if e.use_stderr() {
                exit::INPUT
            } else {
                exit::OK
            };
        }
    };
    let result = execute(&cli).and_then(|(report, table, violation)| {
        let text = report.to_json();
        match &cli.out {
            Some(p) => write_file(p, &text)?,
            None => {
                let _ = out.write_all(text.as_bytes());
            }
        }
        if let (Some(p), Some(t)) = (&cli.tsv, table) {
            write_file(p, &t)?;
        }
        Ok(violation)
    });
    match result {
        Ok(true) => exit::VIOLATION,
        Ok(false) => exit::OK,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            report::exit_code(&e)
        }
    }
}
