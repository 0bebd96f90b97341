//! JSON configuration ingestion and report emission.
//!
//! A configuration names a group, a measure, an equation variant, the tasks
//! to run, and optionally explicit family parameters. Running it produces a
//! deterministic [`Report`] suitable for machine diffing.

use num_complex::Complex64;
use serde::{Deserialize, Serialize};
use serde_json::json;

use crate::error::{FeqError, Result};
use crate::functions::{
    check_exponential, enumerate_exponentials, AdditiveFunction, Exponential, GroupFunction,
    TableFunction,
};
use crate::group::GroupSpec;
use crate::measure::Measure;
use crate::rank1::{factorize_dalem1, rank1_factorize, Rank1Outcome};
use crate::solvers::{
    dalembert_measure, reduce_gajda, solve_fech, solve_wilson_modified, FechFreeParams, FechKind,
    WilsonModKind,
};
use crate::verify::{
    residual_dalem1, sincos_residual_at, sweep_max, Domain, ResidualReport,
    DEFAULT_TOLERANCE, DEFAULT_WINDOW,
};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Deserialize, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum EquationKind {
    Sincos,
    Dalem1,
    Fech,
    WilsonModified,
    Gajda,
    Dalembert,
}

impl EquationKind {
    pub fn id(&self) -> &'static str {
        match self {
            EquationKind::Sincos => "sincos",
            EquationKind::Dalem1 => "dalem1",
            EquationKind::Fech => "fech",
            EquationKind::WilsonModified => "wilson_modified",
            EquationKind::Gajda => "gajda",
            EquationKind::Dalembert => "dalembert",
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Task {
    Enumerate,
    Solve,
    Verify,
    Factorize,
}

#[derive(Debug, Clone, Deserialize)]
pub struct AtomConfig {
    pub point: Vec<i64>,
    pub weight: [f64; 2],
}

#[derive(Debug, Clone, Deserialize)]
pub struct MeasureConfig {
    pub atoms: Vec<AtomConfig>,
}

#[derive(Debug, Clone, Deserialize)]
pub struct ExponentialConfig {
    #[serde(default)]
    pub torsion_roots: Vec<u64>,
    #[serde(default)]
    pub free_multipliers: Vec<[f64; 2]>,
}

/// Optional explicit parameters for one family. Which fields are read
/// depends on the equation: the scalar coefficients drive the solved
/// equations, the value tables drive the explicit forms.
#[derive(Debug, Clone, Default, Deserialize)]
pub struct FamilyConfig {
    pub exponential: Option<ExponentialConfig>,
    pub alpha: Option<[f64; 2]>,
    pub beta: Option<[f64; 2]>,
    pub gamma: Option<[f64; 2]>,
    pub delta: Option<[f64; 2]>,
    /// Coefficients of an additive function on the free coordinates.
    pub free_coeffs: Option<Vec<[f64; 2]>>,
    pub f1: Option<Vec<[f64; 2]>>,
    pub f2: Option<Vec<[f64; 2]>>,
    pub g: Option<Vec<[f64; 2]>>,
    pub h: Option<Vec<[f64; 2]>>,
}

#[derive(Debug, Clone, Deserialize)]
pub struct Config {
    pub group: GroupSpec,
    pub measure: Option<MeasureConfig>,
    pub equation: EquationKind,
    pub tasks: Vec<Task>,
    #[serde(default)]
    pub families: Vec<FamilyConfig>,
    pub tolerance: Option<f64>,
    pub window: Option<i64>,
    /// Deliberate constant offset added to the right-hand side before
    /// verification; a negative control for the residual oracle.
    pub perturbation: Option<[f64; 2]>,
}

impl Config {
    pub fn from_json(text: &str) -> Result<Config> {
        serde_json::from_str(text).map_err(|e| FeqError::Config(e.to_string()))
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct FamilyReport {
    pub theorem: String,
    pub case: String,
    pub params: serde_json::Value,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub mu_hat: Option<[f64; 2]>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub residual: Option<f64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub argmax: Option<(Vec<i64>, Vec<i64>)>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub factorization: Option<String>,
    pub near_threshold: bool,
    pub pass: bool,
}

#[derive(Debug, Clone, Serialize)]
pub struct Report {
    pub equation: String,
    pub tolerance: f64,
    pub window: i64,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub characters_enumerated: Option<usize>,
    pub families: Vec<FamilyReport>,
    pub pass: bool,
    pub timing_ms: f64,
}

impl Report {
    /// Fixed-layout human-readable table; one row per family.
    pub fn human_table(&self) -> String {
        let mut out = format!(
            "equation: {}  tolerance: {:.3e}  window: {}\n",
            self.equation, self.tolerance, self.window
        );
        if let Some(n) = self.characters_enumerated {
            out.push_str(&format!("characters enumerated: {n}\n"));
        }
        out.push_str(&format!(
            "{:<18} {:<14} {:<12} {:<6}\n",
            "family", "case", "residual", "pass"
        ));
        for f in &self.families {
            let residual = f
                .residual
                .map(|r| format!("{r:.3e}"))
                .unwrap_or_else(|| "-".into());
            out.push_str(&format!(
                "{:<18} {:<14} {:<12} {:<6}\n",
                f.theorem,
                f.case,
                residual,
                if f.pass { "ok" } else { "FAIL" }
            ));
        }
        out.push_str(&format!(
            "overall: {} ({:.1} ms)\n",
            if self.pass { "pass" } else { "FAIL" },
            self.timing_ms
        ));
        out
    }
}

fn cx(v: [f64; 2]) -> Complex64 {
    Complex64::new(v[0], v[1])
}

fn cx_out(v: Complex64) -> [f64; 2] {
    [v.re, v.im]
}

fn cx_or(v: &Option<[f64; 2]>, default: Complex64) -> Complex64 {
    v.map(cx).unwrap_or(default)
}

fn table_from_values(
    spec: &GroupSpec,
    values: &Option<Vec<[f64; 2]>>,
    name: &str,
) -> Result<GroupFunction> {
    let values = values
        .as_ref()
        .ok_or_else(|| FeqError::Config(format!("equation requires explicit values for {name}")))?;
    let t = TableFunction::new(spec, values.iter().map(|&v| cx(v)).collect())?;
    Ok(GroupFunction::Table(t))
}

fn build_measure(config: &Config, spec: &GroupSpec) -> Result<Measure> {
    if config.equation == EquationKind::Dalembert {
        return dalembert_measure(spec);
    }
    let mc = config.measure.as_ref().ok_or_else(|| {
        FeqError::Config(format!(
            "equation {:?} requires a measure",
            config.equation
        ))
    })?;
    let atoms = mc
        .atoms
        .iter()
        .map(|a| Ok((spec.element(&a.point)?, cx(a.weight))))
        .collect::<Result<Vec<_>>>()?;
    Measure::new(spec, &atoms)
}

fn exponential_candidates(
    spec: &GroupSpec,
    fam: &FamilyConfig,
) -> Result<Vec<Exponential>> {
    match &fam.exponential {
        Some(e) => Ok(vec![Exponential::new(
            spec,
            e.torsion_roots.clone(),
            e.free_multipliers.iter().map(|&v| cx(v)).collect(),
        )?]),
        None => {
            if !spec.is_finite() {
                return Err(FeqError::Config(
                    "infinite group: each family must name its exponential explicitly".into(),
                ));
            }
            enumerate_exponentials(spec)
        }
    }
}

fn exponential_params(m: &Exponential) -> serde_json::Value {
    json!({
        "torsion_roots": m.torsion_roots,
        "free_multipliers": m.free_multipliers.iter().map(|l| cx_out(*l)).collect::<Vec<_>>(),
    })
}

/// Pointwise residual sweep with the configured perturbation applied to the
/// right-hand side function, reporting pass at the tolerance.
struct VerifyCtx {
    domain: Domain,
    tolerance: f64,
    perturbation: Option<Complex64>,
    verify: bool,
    factorize: bool,
}

impl VerifyCtx {
    fn perturbed(&self, h: &GroupFunction) -> Result<GroupFunction> {
        match self.perturbation {
            None => Ok(h.clone()),
            Some(p) => h.add(&GroupFunction::ExpPoly(
                crate::functions::ExpPolyFunction::constant(h.spec(), p),
            )),
        }
    }

    fn sweep_sincos(
        &self,
        f1: &GroupFunction,
        f2: &GroupFunction,
        g: &GroupFunction,
        h: &GroupFunction,
        mu: &Measure,
    ) -> Result<ResidualReport> {
        let h = self.perturbed(h)?;
        let points = self.domain.points()?;
        sweep_max(&points, |x, y| {
            sincos_residual_at(f1, f2, g, &h, mu, x, y)
        })
    }

    fn fill(&self, report: &mut FamilyReport, sweep: Result<ResidualReport>) -> Result<()> {
        let sweep = sweep?;
        report.residual = Some(sweep.max_residual);
        report.argmax = sweep
            .argmax
            .map(|(x, y)| (x.coords.clone(), y.coords.clone()));
        report.pass = sweep.max_residual <= self.tolerance;
        Ok(())
    }
}

/// Executes the configured tasks and assembles the report. Exit policy is
/// the caller's: [`Report::pass`] is false iff any family failed.
pub fn run_config(config: &Config, tol_override: Option<f64>, window_override: Option<i64>) -> Result<Report> {
    let started = std::time::Instant::now();
    let spec = config.group.clone();
    let tolerance = tol_override
        .or(config.tolerance)
        .unwrap_or(DEFAULT_TOLERANCE);
    let window = window_override.or(config.window).unwrap_or(DEFAULT_WINDOW);
    let domain = Domain::new(&spec, window);
    let ctx = VerifyCtx {
        domain: domain.clone(),
        tolerance,
        perturbation: config.perturbation.map(cx),
        verify: config.tasks.contains(&Task::Verify),
        factorize: config.tasks.contains(&Task::Factorize),
    };

    let mut characters_enumerated = None;
    if config.tasks.contains(&Task::Enumerate) {
        let chars = enumerate_exponentials(&spec)?;
        let els = spec.enumerate_elements()?;
        let pairs: Vec<_> = els
            .iter()
            .flat_map(|x| els.iter().map(move |y| (x.clone(), y.clone())))
            .collect();
        for m in &chars {
            let (ok, dev) = check_exponential(m, &pairs, 1e-12)?;
            if !ok {
                return Err(FeqError::Evaluation(format!(
                    "enumerated character failed the multiplicative identity (deviation {dev})"
                )));
            }
        }
        characters_enumerated = Some(chars.len());
    }

    let mut families = Vec::new();
    if config.tasks.contains(&Task::Solve) || ctx.verify || ctx.factorize {
        match config.equation {
            EquationKind::Gajda | EquationKind::Dalembert => {
                run_gajda(config, &spec, &ctx, &mut families)?
            }
            EquationKind::Fech => run_fech(config, &spec, &ctx, &mut families)?,
            EquationKind::WilsonModified => run_wilson(config, &spec, &ctx, &mut families)?,
            EquationKind::Sincos => run_explicit_sincos(config, &spec, &ctx, &mut families)?,
            EquationKind::Dalem1 => run_explicit_dalem1(config, &spec, &ctx, &mut families)?,
        }
    }

    let pass = families.iter().all(|f| f.pass);
    Ok(Report {
        equation: config.equation.id().to_string(),
        tolerance,
        window,
        characters_enumerated,
        families,
        pass,
        timing_ms: started.elapsed().as_secs_f64() * 1e3,
    })
}

fn run_gajda(
    config: &Config,
    spec: &GroupSpec,
    ctx: &VerifyCtx,
    out: &mut Vec<FamilyReport>,
) -> Result<()> {
    let mu = build_measure(config, spec)?;
    let fams = if config.families.is_empty() {
        vec![FamilyConfig::default()]
    } else {
        config.families.clone()
    };
    for fam in &fams {
        for m in exponential_candidates(spec, fam)? {
            let f = reduce_gajda(&mu, &m)?;
            let hat = mu.mu_hat(&m)?;
            let mut report = FamilyReport {
                theorem: "gajda_reduction".into(),
                case: "character".into(),
                params: exponential_params(&m),
                mu_hat: Some(cx_out(hat)),
                residual: None,
                argmax: None,
                factorization: None,
                near_threshold: false,
                pass: true,
            };
            let gf = GroupFunction::ExpPoly(f);
            if ctx.verify {
                ctx.fill(
                    &mut report,
                    ctx.sweep_sincos(&gf, &gf, &gf, &gf, &mu),
                )?;
            }
            if ctx.factorize {
                report.factorization = Some(factorize_sincos_lhs(&gf, &gf, &mu, ctx)?);
            }
            out.push(report);
        }
    }
    Ok(())
}

fn run_fech(
    config: &Config,
    spec: &GroupSpec,
    ctx: &VerifyCtx,
    out: &mut Vec<FamilyReport>,
) -> Result<()> {
    let mu = build_measure(config, spec)?;
    let fams = if config.families.is_empty() {
        vec![FamilyConfig::default()]
    } else {
        config.families.clone()
    };
    for fam in &fams {
        let a = match &fam.free_coeffs {
            Some(cs) => Some(AdditiveFunction::new(
                spec,
                cs.iter().map(|&v| cx(v)).collect(),
            )?),
            None => None,
        };
        let params = FechFreeParams {
            gamma: cx_or(&fam.gamma, Complex64::new(1.0, 0.0)),
            delta: cx_or(&fam.delta, Complex64::new(0.0, 0.0)),
            beta: cx_or(&fam.beta, Complex64::new(1.0, 0.0)),
            a,
        };
        let candidates = exponential_candidates(spec, fam)?;
        for sol in solve_fech(&mu, &candidates, &params, ctx.tolerance)? {
            let hat = mu.mu_hat(&sol.exponential)?;
            let mut report = FamilyReport {
                theorem: "cosine_type".into(),
                case: match sol.kind {
                    FechKind::ExpPair => "exp_pair".into(),
                    FechKind::AdditiveEven => "additive_even".into(),
                },
                params: exponential_params(&sol.exponential),
                mu_hat: Some(cx_out(hat)),
                residual: None,
                argmax: None,
                factorization: None,
                near_threshold: sol.near_threshold,
                pass: true,
            };
            let f = GroupFunction::ExpPoly(sol.f);
            let k = GroupFunction::ExpPoly(sol.k);
            if ctx.verify {
                ctx.fill(&mut report, ctx.sweep_sincos(&f, &f, &f, &k, &mu))?;
            }
            if ctx.factorize {
                report.factorization = Some(factorize_sincos_lhs(&f, &f, &mu, ctx)?);
            }
            out.push(report);
        }
    }
    Ok(())
}

fn run_wilson(
    config: &Config,
    spec: &GroupSpec,
    ctx: &VerifyCtx,
    out: &mut Vec<FamilyReport>,
) -> Result<()> {
    let mu = build_measure(config, spec)?;
    let fams = if config.families.is_empty() {
        vec![FamilyConfig::default()]
    } else {
        config.families.clone()
    };
    for fam in &fams {
        let alpha = cx_or(&fam.alpha, Complex64::new(1.0, 0.0));
        let candidates = exponential_candidates(spec, fam)?;
        for sol in solve_wilson_modified(&mu, &candidates, alpha, ctx.tolerance)? {
            let hat = mu.mu_hat(&sol.exponential)?;
            let mut report = FamilyReport {
                theorem: "sine_type".into(),
                case: match sol.kind {
                    WilsonModKind::NonEvenExp => "non_even_exp".into(),
                    WilsonModKind::EvenExp => "even_exp".into(),
                },
                params: exponential_params(&sol.exponential),
                mu_hat: Some(cx_out(hat)),
                residual: None,
                argmax: None,
                factorization: None,
                near_threshold: sol.near_threshold,
                pass: true,
            };
            let f = GroupFunction::ExpPoly(sol.f);
            let k = GroupFunction::ExpPoly(sol.k);
            if ctx.verify {
                // equation: integral of f-shifts = k(x) f(y)
                ctx.fill(&mut report, ctx.sweep_sincos(&f, &f, &k, &f, &mu))?;
            }
            if ctx.factorize {
                report.factorization = Some(factorize_sincos_lhs(&f, &f, &mu, ctx)?);
            }
            out.push(report);
        }
    }
    Ok(())
}

fn run_explicit_sincos(
    config: &Config,
    spec: &GroupSpec,
    ctx: &VerifyCtx,
    out: &mut Vec<FamilyReport>,
) -> Result<()> {
    let mu = build_measure(config, spec)?;
    for (i, fam) in config.families.iter().enumerate() {
        let f1 = table_from_values(spec, &fam.f1, "f1")?;
        let f2 = table_from_values(spec, &fam.f2, "f2")?;
        let g = table_from_values(spec, &fam.g, "g")?;
        let h = table_from_values(spec, &fam.h, "h")?;
        let mut report = FamilyReport {
            theorem: "explicit".into(),
            case: format!("family_{i}"),
            params: json!({ "index": i }),
            mu_hat: None,
            residual: None,
            argmax: None,
            factorization: None,
            near_threshold: false,
            pass: true,
        };
        if ctx.verify {
            ctx.fill(&mut report, ctx.sweep_sincos(&f1, &f2, &g, &h, &mu))?;
        }
        if ctx.factorize {
            report.factorization = Some(factorize_sincos_lhs(&f1, &f2, &mu, ctx)?);
        }
        out.push(report);
    }
    Ok(())
}

fn run_explicit_dalem1(
    config: &Config,
    spec: &GroupSpec,
    ctx: &VerifyCtx,
    out: &mut Vec<FamilyReport>,
) -> Result<()> {
    for (i, fam) in config.families.iter().enumerate() {
        let f1 = table_from_values(spec, &fam.f1, "f1")?;
        let f2 = table_from_values(spec, &fam.f2, "f2")?;
        let g = table_from_values(spec, &fam.g, "g")?;
        let h = table_from_values(spec, &fam.h, "h")?;
        let mut report = FamilyReport {
            theorem: "explicit".into(),
            case: format!("family_{i}"),
            params: json!({ "index": i }),
            mu_hat: None,
            residual: None,
            argmax: None,
            factorization: None,
            near_threshold: false,
            pass: true,
        };
        if ctx.verify {
            let h = ctx.perturbed(&h)?;
            ctx.fill(&mut report, residual_dalem1(&f1, &f2, &g, &h, &ctx.domain))?;
        }
        if ctx.factorize {
            let (_, outcome) = factorize_dalem1(&f1, &f2, &ctx.domain)?;
            report.factorization = Some(describe_outcome(&outcome));
            if matches!(outcome, Rank1Outcome::NotRank1 { .. }) {
                report.pass = false;
            }
        }
        out.push(report);
    }
    Ok(())
}

/// Rank-1 check of the measure-bearing left-hand side
/// `L[x][y] = ∫[f₁(x+y−t)+f₂(x−y+t)]dμ(t)` over the domain.
fn factorize_sincos_lhs(
    f1: &GroupFunction,
    f2: &GroupFunction,
    mu: &Measure,
    ctx: &VerifyCtx,
) -> Result<String> {
    let points = ctx.domain.points()?;
    let spec = &mu.spec;
    let n = points.len();
    let mut l = nalgebra::DMatrix::zeros(n, n);
    for (i, x) in points.iter().enumerate() {
        for (j, y) in points.iter().enumerate() {
            let sum_xy = spec.add(x, y)?;
            let diff_xy = spec.sub(x, y)?;
            let mut v = Complex64::new(0.0, 0.0);
            for (t, w) in mu.atoms() {
                v += (f1.eval(&spec.sub(&sum_xy, t)?)? + f2.eval(&spec.add(&diff_xy, t)?)?) * w;
            }
            l[(i, j)] = v;
        }
    }
    Ok(describe_outcome(&rank1_factorize(&l)))
}

fn describe_outcome(outcome: &Rank1Outcome) -> String {
    match outcome {
        Rank1Outcome::Zero => "zero".into(),
        Rank1Outcome::Factored { .. } => "rank1".into(),
        Rank1Outcome::NotRank1 { sigma2 } => format!("not_rank1 (sigma2 {sigma2:.3e})"),
    }
}
