//! The `verify` command: runs named suites of checks and reports the results.

use std::fmt;
use std::io::Write;
use std::path::PathBuf;
use std::time::Instant;

use clap::{Parser, ValueEnum};
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::currents::{check_exchange, check_frt_relations, BFamily, MIN_WINDOW};
use crate::envelope::{check_charge_commutativity, check_linear_commutativity, ChargeKind, LinearVariant};
use crate::error::{Error, Result};
use crate::exactalg::RatFun;
use crate::kacmoody::{check_automorphism, AutoMap};
use crate::onsager::{check_dolan_grady, check_fixed_point, check_jacobi, check_kappa_isomorphism, check_morphism, OnsFamily};
use crate::report::{CheckReport, Status};
use crate::tensormat::{
    build_boundary, build_r, build_rbar, check_cybe, check_cybe_derivative, check_cybe_sampled,
    check_m_condition, check_nscybe, check_nscybe_sampled, check_r_symmetries, check_reflection,
    check_u_conditions, symbolic_boundary, BoundaryFamily, Params,
};
use crate::vars;

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Suite {
    Rmatrix,
    Frt,
    Currents,
    Onsager,
    Augmented,
    Invariant,
    Kappa,
    Charges,
    All,
}

impl Suite {
    const PARTS: [Suite; 8] = [
        Suite::Rmatrix,
        Suite::Frt,
        Suite::Currents,
        Suite::Onsager,
        Suite::Augmented,
        Suite::Invariant,
        Suite::Kappa,
        Suite::Charges,
    ];

    pub fn name(&self) -> &'static str {
        match self {
            Suite::Rmatrix => "rmatrix",
            Suite::Frt => "frt",
            Suite::Currents => "currents",
            Suite::Onsager => "onsager",
            Suite::Augmented => "augmented",
            Suite::Invariant => "invariant",
            Suite::Kappa => "kappa",
            Suite::Charges => "charges",
            Suite::All => "all",
        }
    }

    fn needs_safe_region(&self) -> bool {
        matches!(self, Suite::Frt | Suite::Currents | Suite::All)
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Format {
    Text,
    Json,
}

#[derive(Parser, Debug)]
#[command(name = "verify", about = "Exact verification of FRT presentations of Onsager-type algebras")]
struct Args {
    /// Suite to run.
    suite: Suite,
    /// Number of modes kept on each side of the truncated currents.
    #[arg(long)]
    window: Option<i64>,
    /// Largest charge index checked.
    #[arg(long)]
    max_k: Option<i64>,
    #[arg(long, value_enum)]
    format: Option<Format>,
    /// Seed for the random-point cross-checks.
    #[arg(long)]
    seed: Option<u64>,
    /// Run independent checks concurrently.
    #[arg(long)]
    parallel: bool,
    /// JSON file with defaults for the options above.
    #[arg(long)]
    config: Option<PathBuf>,
}

/// Contents of a `--config` file; every field is optional.
#[derive(Debug, Default, Deserialize)]
#[serde(deny_unknown_fields)]
struct FileConfig {
    window: Option<i64>,
    max_k: Option<i64>,
    format: Option<Format>,
    seed: Option<u64>,
    parallel: Option<bool>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SuiteConfig {
    pub suite: Suite,
    pub window: i64,
    pub max_k: i64,
    pub format: Format,
    pub seed: u64,
    pub parallel: bool,
}

impl SuiteConfig {
    pub fn new(suite: Suite) -> Self {
        SuiteConfig {
            suite,
            window: 6,
            max_k: 4,
            format: Format::Text,
            seed: 0,
            parallel: false,
        }
    }

    pub fn validate(&self) -> Result<()> {
        if self.window < 2 {
            return Err(Error::WindowTooSmall {
                window: self.window,
                reason: "the window must be at least 2".into(),
            });
        }
        if self.suite.needs_safe_region() && self.window < MIN_WINDOW {
            return Err(Error::WindowTooSmall {
                window: self.window,
                reason: format!(
                    "the {} suite needs window >= {MIN_WINDOW} to leave a usable safe region",
                    self.suite
                ),
            });
        }
        if self.max_k < 0 || self.max_k > self.window {
            return Err(Error::Config(format!(
                "max-k {} must lie in 0..={} (the window)",
                self.max_k, self.window
            )));
        }
        Ok(())
    }
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize)]
pub struct Summary {
    pub pass: usize,
    pub fail: usize,
}

#[derive(Clone, Debug, Serialize)]
pub struct RunReport {
    pub suite: Suite,
    pub window: i64,
    pub checks: Vec<CheckReport>,
    pub summary: Summary,
    #[serde(skip)]
    pub total_ms: f64,
}

impl RunReport {
    pub fn passed(&self) -> bool {
        self.summary.fail == 0
    }
}

type Task = Box<dyn Fn() -> Result<CheckReport> + Send + Sync>;

fn task(f: impl Fn() -> Result<CheckReport> + Send + Sync + 'static) -> Task {
    Box::new(f)
}

fn suffixed(mut r: CheckReport, suffix: impl fmt::Display) -> CheckReport {
    r.name = format!("{} ({suffix})", r.name);
    r
}

fn onsager_twist() -> Result<crate::tensormat::BoundaryMat> {
    let mut p = Params::new();
    p.insert("k".into(), RatFun::one());
    p.insert("k*".into(), RatFun::one());
    build_boundary(BoundaryFamily::UDiag, &p)
}

fn rmatrix_tasks(seed: u64) -> Vec<Task> {
    let mut t: Vec<Task> = vec![
        task(|| check_cybe(&build_r(vars::u()))),
        task(|| check_cybe_derivative(&build_r(vars::u()))),
        task(move || check_cybe_sampled(&build_r(vars::u()), seed, 5)),
        task(|| check_r_symmetries(&build_r(vars::u()))),
        task(|| check_u_conditions(&symbolic_boundary(BoundaryFamily::UDiag)?, 1)),
        task(|| check_u_conditions(&symbolic_boundary(BoundaryFamily::UOffdiag)?, -1)),
        task(|| {
            let mut p = Params::new();
            p.insert("sign".into(), RatFun::one());
            check_u_conditions(&build_boundary(BoundaryFamily::UOffdiag, &p)?, 1)
        }),
    ];
    for fam in [BoundaryFamily::KGeneral, BoundaryFamily::KappaPlus, BoundaryFamily::KappaMinus] {
        t.push(task(move || check_reflection(&symbolic_boundary(fam)?)));
    }
    for fam in [
        BoundaryFamily::UDiag,
        BoundaryFamily::UOffdiag,
        BoundaryFamily::KGeneral,
        BoundaryFamily::KappaPlus,
        BoundaryFamily::KappaMinus,
    ] {
        t.push(task(move || {
            let rb = build_rbar(&symbolic_boundary(fam)?, vars::x(), vars::y())?;
            Ok(suffixed(check_nscybe(&rb)?, fam))
        }));
    }
    t.push(task(move || {
        let k = symbolic_boundary(BoundaryFamily::KGeneral)?;
        let rb = build_rbar(&k, vars::x(), vars::y())?;
        Ok(suffixed(check_nscybe_sampled(&rb, seed, 5)?, BoundaryFamily::KGeneral))
    }));
    let m_pairs: [(BoundaryFamily, fn() -> Result<crate::tensormat::BoundaryMat>); 3] = [
        (BoundaryFamily::MOns, onsager_twist),
        (BoundaryFamily::MAug, || symbolic_boundary(BoundaryFamily::UOffdiag)),
        (BoundaryFamily::MInv, || symbolic_boundary(BoundaryFamily::KappaPlus)),
    ];
    for (m, twist) in m_pairs {
        t.push(task(move || {
            let rb = build_rbar(&twist()?, vars::x(), vars::y())?;
            check_m_condition(&symbolic_boundary(m)?, &rb)
        }));
    }
    t
}

fn algebra_tasks(family: OnsFamily, window: i64) -> Vec<Task> {
    let mut t: Vec<Task> = vec![
        task(move || check_jacobi(family, window)),
        task(move || check_morphism(family, window)),
        task(move || check_dolan_grady(family)),
        task(move || check_fixed_point(family, window)),
    ];
    let maps: &[AutoMap] = match family {
        OnsFamily::Onsager => &[AutoMap::Theta1],
        OnsFamily::Augmented => &[AutoMap::Theta2],
        OnsFamily::Invariant => &[AutoMap::LusztigPlus, AutoMap::LusztigMinus],
    };
    for &m in maps {
        t.push(task(move || Ok(check_automorphism(m, window))));
    }
    t
}

fn charge_tasks(window: i64, max_k: i64) -> Vec<Task> {
    let mut t: Vec<Task> = Vec::new();
    for family in OnsFamily::ALL {
        t.push(task(move || check_linear_commutativity(family, LinearVariant::Formula, max_k, window)));
        let w = window.max(max_k + 1);
        t.push(task(move || check_linear_commutativity(family, LinearVariant::Coefficient, max_k, w)));
        t.push(task(move || check_charge_commutativity(family, ChargeKind::Quadratic, max_k, window)));
    }
    t
}

fn tasks(suite: Suite, cfg: &SuiteConfig) -> Vec<Task> {
    let (w, seed) = (cfg.window, cfg.seed);
    match suite {
        Suite::Rmatrix => rmatrix_tasks(seed),
        Suite::Frt => vec![task(move || check_frt_relations(w))],
        Suite::Currents => BFamily::ALL
            .into_iter()
            .map(|f| task(move || check_exchange(f, w)))
            .collect(),
        Suite::Onsager => algebra_tasks(OnsFamily::Onsager, w),
        Suite::Augmented => algebra_tasks(OnsFamily::Augmented, w),
        Suite::Invariant => algebra_tasks(OnsFamily::Invariant, w),
        Suite::Kappa => vec![task(move || check_kappa_isomorphism(w))],
        Suite::Charges => charge_tasks(w, cfg.max_k),
        Suite::All => Suite::PARTS.iter().flat_map(|s| tasks(*s, cfg)).collect(),
    }
}

/// Runs a validated configuration. Check order is fixed regardless of `parallel`.
pub fn run_suite(cfg: &SuiteConfig) -> Result<RunReport> {
    cfg.validate()?;
    vars::register_standard();
    let start = Instant::now();
    let list = tasks(cfg.suite, cfg);
    let results: Vec<Result<CheckReport>> = if cfg.parallel {
        list.par_iter().map(|t| t()).collect()
    } else {
        list.iter().map(|t| t()).collect()
    };
    let checks = results.into_iter().collect::<Result<Vec<_>>>()?;
    let pass = checks.iter().filter(|c| c.status == Status::Pass).count();
    Ok(RunReport {
        suite: cfg.suite,
        window: cfg.window,
        summary: Summary {
            pass,
            fail: checks.len() - pass,
        },
        checks,
        total_ms: start.elapsed().as_secs_f64() * 1e3,
    })
}

pub fn render_text(report: &RunReport) -> String {
    let mut s = String::new();
    for c in &report.checks {
        s.push_str(&format!("{c}\n"));
        if !c.passed() {
            s.push_str(&format!("  region: {}\n", c.region));
            for w in &c.details {
                s.push_str(&format!("  at {}: {}\n", w.position, w.residual));
            }
        }
    }
    s.push_str(&format!(
        "summary: {} pass, {} fail\n",
        report.summary.pass, report.summary.fail
    ));
    s
}

fn load_config(args: &Args) -> Result<SuiteConfig> {
    let file = match &args.config {
        None => FileConfig::default(),
        Some(path) => {
            let text = std::fs::read_to_string(path)
                .map_err(|e| Error::Config(format!("{}: {e}", path.display())))?;
            serde_json::from_str(&text).map_err(|e| Error::Config(format!("{}: {e}", path.display())))?
        }
    };
    let mut cfg = SuiteConfig::new(args.suite);
    cfg.window = args.window.or(file.window).unwrap_or(cfg.window);
    cfg.max_k = args.max_k.or(file.max_k).unwrap_or(cfg.max_k);
    cfg.format = args.format.or(file.format).unwrap_or(cfg.format);
    cfg.seed = args.seed.or(file.seed).unwrap_or(cfg.seed);
    cfg.parallel = args.parallel || file.parallel.unwrap_or(false);
    Ok(cfg)
}

/// Entry point of the binary; returns the process exit code.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let args = match Args::try_parse_from(args) {
        Ok(a) => a,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let target: &mut dyn Write = if e.use_stderr() { err } else { out };
            let _ = write!(target, "{}", e.render());
            return code;
        }
    };
    let cfg = match load_config(&args) {
        Ok(c) => c,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            return 2;
        }
    };
    let report = match run_suite(&cfg) {
        Ok(r) => r,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            return 2;
        }
    };
    let body = match cfg.format {
        Format::Text => render_text(&report),
        Format::Json => serde_json::to_string_pretty(&report).expect("report serializes") + "\n",
    };
    let _ = out.write_all(body.as_bytes());
    let _ = writeln!(err, "{} checks in {:.1} s", report.checks.len(), report.total_ms / 1e3);
    if report.passed() {
        0
    } else {
        1
    }
}
