//! Monte Carlo estimation of the log-likelihood bias.
//!
//! The bias of one replication decomposes through the projected parameters
//! theta0 into three terms,
//!
//! - c1 = l_X(theta_hat) - l_X(theta0)
//! - c2 = l_X(theta0) - n E log f(Y|theta0)
//! - c3 = n (E log f(Y|theta0) - E log f(Y|theta_hat))
//!
//! whose sum telescopes to l_X(theta_hat) - n E log f(Y|theta_hat). c2 has
//! mean zero and a variance proportional to n, so the reported "true" bias
//! averages c1 + c3.
//!
//! Replications are independent streams keyed by (seed, replication index).
//! They are processed in fixed-size chunks; chunk boundaries and the merge
//! order depend only on the replication count, so the summary is
//! bit-identical for any thread count — the parallel and sequential drivers
//! produce the same bytes.

use crate::analytic::{self, Scenario, SeriesOrder};
use crate::dist::{self, Family, Sample, TruthSpec};
use crate::error::{Error, Result};
use crate::infomat;
use crate::models::{self, ModelParams};
use crate::report::{BiasReport, Component, DecompReport, Method};
use crate::resampling::{self, BootstrapConfig, MAX_REDRAW_ATTEMPTS};
use crate::rng::StreamKey;
use crate::stats::Welford;

#[cfg(feature = "parallel")]
use rayon::prelude::*;

/// Replications per work unit. Fixed so that the reduction order never
/// depends on the executor.
const CHUNK: u64 = 64;

/// Bootstrap replications default to at most this many outer replications;
/// the bootstrap average is unbiased in the outer loop, so it needs far fewer
/// replications than the plain decomposition.
pub const DEFAULT_BOOT_REPS_CAP: u64 = 10_000;

/// Replication counts used by the table reproduction commands: heavier for
/// small samples, lighter as n grows.
pub fn desk_reps(n: usize) -> u64 {
    if n <= 100 {
        100_000
    } else if n <= 400 {
        10_000
    } else {
        1_000
    }
}

/// Full description of one scenario run.
#[derive(Debug, Clone)]
pub struct ExperimentSpec {
    pub scenario: Scenario,
    pub n: usize,
    pub reps: u64,
    pub seed: u64,
    pub methods: Vec<Method>,
    /// Bootstrap resamples per replication (only read when `Bn` is present).
    pub nb: usize,
    /// Outer replications that carry a bootstrap; `None` caps at
    /// [`DEFAULT_BOOT_REPS_CAP`].
    pub boot_reps: Option<u64>,
    /// Series truncation; `None` uses each scenario's table truncation.
    pub order: Option<SeriesOrder>,
}

impl ExperimentSpec {
    /// A spec with the defaults the table commands use.
    pub fn new(scenario: Scenario, n: usize, reps: u64, seed: u64) -> Self {
        ExperimentSpec {
            scenario,
            n,
            reps,
            seed,
            methods: Method::all().to_vec(),
            nb: 100,
            boot_reps: None,
            order: None,
        }
    }
}

/// The three decomposition terms of one replication.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct RepDecomposition {
    pub c1: f64,
    pub c2: f64,
    pub c3: f64,
}

impl RepDecomposition {
    pub fn total(&self) -> f64 {
        self.c1 + self.c2 + self.c3
    }

    pub fn reduced(&self) -> f64 {
        self.c1 + self.c3
    }
}

/// Accumulated moments of the decomposition terms.
#[derive(Debug, Clone, Copy, Default, PartialEq)]
pub struct DecompSummary {
    pub c1: Welford,
    pub c2: Welford,
    pub c3: Welford,
    pub c: Welford,
    pub c13: Welford,
}

impl DecompSummary {
    fn push(&mut self, d: &RepDecomposition) {
        self.c1.push(d.c1);
        self.c2.push(d.c2);
        self.c3.push(d.c3);
        self.c.push(d.total());
        self.c13.push(d.reduced());
    }

    fn merge(&mut self, other: &DecompSummary) {
        self.c1.merge(&other.c1);
        self.c2.merge(&other.c2);
        self.c3.merge(&other.c3);
        self.c.merge(&other.c);
        self.c13.merge(&other.c13);
    }
}

/// Everything a run produces.
#[derive(Debug, Clone, PartialEq)]
pub struct ExperimentSummary {
    pub scenario: Scenario,
    pub n: usize,
    pub reps: u64,
    pub seed: u64,
    pub nb: usize,
    /// Outer replications that actually carried a bootstrap.
    pub boot_reps: u64,
    pub decomp: DecompSummary,
    /// Plug-in trace estimates (Gaussian model only).
    pub tic_emp: Option<Welford>,
    /// Bootstrap reduced-bias averages, one per bootstrapped replication.
    pub bn: Option<Welford>,
    /// Degenerate draws redrawn across data generation and resampling.
    pub redraws: u64,
}

impl ExperimentSummary {
    /// The five decomposition rows (c1, c2, c3, their sum, and c1 + c3) as
    /// report records.
    pub fn decomp_reports(&self) -> Vec<DecompReport> {
        let w = |comp: Component| -> &Welford {
            match comp {
                Component::C1 => &self.decomp.c1,
                Component::C2 => &self.decomp.c2,
                Component::C3 => &self.decomp.c3,
                Component::C => &self.decomp.c,
                Component::C1PlusC3 => &self.decomp.c13,
            }
        };
        Component::all()
            .into_iter()
            .map(|component| DecompReport {
                scenario: self.scenario,
                n: self.n,
                component,
                mean: w(component).mean(),
                variance: w(component).variance(),
                reps: self.reps,
                seed: self.seed,
            })
            .collect()
    }
}

/// Precomputed per-run quantities.
struct Context {
    truth: TruthSpec,
    model: Family,
    theta0: ModelParams,
    /// Per-observation expected log-likelihood at theta0.
    e0: f64,
    n: usize,
}

impl Context {
    fn new(scenario: Scenario, n: usize) -> Self {
        let truth = TruthSpec::standard(scenario.truth);
        let theta0 = models::pseudo_true(scenario.model, &truth);
        let e0 = models::expected_loglik(&theta0, &truth);
        Context { truth, model: scenario.model, theta0, e0, n }
    }

    fn decompose(&self, sample: &Sample) -> Result<RepDecomposition> {
        let fitted = models::fit(self.model, sample)?;
        let e_hat = models::expected_loglik(&fitted.params, &self.truth);
        let ll0 = models::loglik(&self.theta0, sample);
        let ll_hat = models::max_loglik(&fitted);
        let nf = self.n as f64;
        Ok(RepDecomposition {
            c1: ll_hat - ll0,
            c2: ll0 - nf * self.e0,
            c3: nf * (self.e0 - e_hat),
        })
    }

    /// Draw replication data, redrawing degenerate samples from child
    /// streams (attempt a >= 1 uses `rep_key.child(a)`; child 0 is reserved
    /// for the bootstrap).
    fn draw(&self, rep_key: StreamKey) -> Result<(Sample, u64)> {
        for attempt in 0..=MAX_REDRAW_ATTEMPTS {
            let key = if attempt == 0 { rep_key } else { rep_key.child(attempt as u64) };
            let s = dist::sample(&self.truth, self.n, key)?;
            if !s.is_degenerate() {
                return Ok((s, attempt as u64));
            }
        }
        Err(Error::ResamplingFailed { attempts: MAX_REDRAW_ATTEMPTS })
    }
}

/// Decompose one externally supplied sample under a scenario (the truth is
/// the standard member of the data family).
pub fn decompose_sample(scenario: Scenario, sample: &Sample) -> Result<RepDecomposition> {
    Context::new(scenario, sample.len()).decompose(sample)
}

#[derive(Debug, Clone, Copy, Default)]
struct ChunkAccum {
    decomp: DecompSummary,
    tic: Welford,
    bn: Welford,
    redraws: u64,
}

impl ChunkAccum {
    fn merge(&mut self, other: &ChunkAccum) {
        self.decomp.merge(&other.decomp);
        self.tic.merge(&other.tic);
        self.bn.merge(&other.bn);
        self.redraws += other.redraws;
    }
}

/// What the per-replication kernel must compute.
#[derive(Debug, Clone, Copy)]
struct RunFlags {
    tic: bool,
    boot_reps: u64,
    nb: usize,
}

fn run_chunk(
    ctx: &Context,
    seed: u64,
    flags: RunFlags,
    lo: u64,
    hi: u64,
) -> Result<ChunkAccum> {
    let mut acc = ChunkAccum::default();
    for rep in lo..hi {
        let rep_key = StreamKey::new(seed, rep);
        let (sample, redraws) = ctx.draw(rep_key)?;
        acc.redraws += redraws;
        acc.decomp.push(&ctx.decompose(&sample)?);
        if flags.tic {
            acc.tic.push(infomat::empirical_tic_gauss(&sample)?);
        }
        if rep < flags.boot_reps {
            let cfg = BootstrapConfig { nb: flags.nb, base_key: rep_key.child(0) };
            let boot = resampling::bootstrap_bias(&sample, ctx.model, &cfg)?;
            acc.bn.push(boot.c_star_reduced);
            acc.redraws += boot.redraws;
        }
    }
    Ok(acc)
}

fn chunk_bounds(reps: u64) -> Vec<(u64, u64)> {
    (0..reps.div_ceil(CHUNK))
        .map(|c| (c * CHUNK, ((c + 1) * CHUNK).min(reps)))
        .collect()
}

fn collect_chunks_seq(ctx: &Context, seed: u64, flags: RunFlags, reps: u64) -> Result<Vec<ChunkAccum>> {
    chunk_bounds(reps)
        .into_iter()
        .map(|(lo, hi)| run_chunk(ctx, seed, flags, lo, hi))
        .collect()
}

#[cfg(feature = "parallel")]
fn collect_chunks_par(ctx: &Context, seed: u64, flags: RunFlags, reps: u64) -> Result<Vec<ChunkAccum>> {
    chunk_bounds(reps)
        .into_par_iter()
        .map(|(lo, hi)| run_chunk(ctx, seed, flags, lo, hi))
        .collect()
}

fn summarize(spec: &ExperimentSpec, flags: RunFlags, chunks: Vec<ChunkAccum>) -> ExperimentSummary {
    let mut total = ChunkAccum::default();
    for c in &chunks {
        total.merge(c);
    }
    ExperimentSummary {
        scenario: spec.scenario,
        n: spec.n,
        reps: spec.reps,
        seed: spec.seed,
        nb: spec.nb,
        boot_reps: flags.boot_reps,
        decomp: total.decomp,
        tic_emp: if flags.tic { Some(total.tic) } else { None },
        bn: if flags.boot_reps > 0 { Some(total.bn) } else { None },
        redraws: total.redraws,
    }
}

fn validate(spec: &ExperimentSpec) -> Result<RunFlags> {
    if spec.n < 2 {
        return Err(Error::InsufficientData { min: 2, got: spec.n });
    }
    if spec.reps == 0 {
        return Err(Error::InvalidArgument("need at least one replication".into()));
    }
    let wants_bn = spec.methods.contains(&Method::Bn);
    if wants_bn && spec.nb == 0 {
        return Err(Error::InvalidArgument("need at least one bootstrap resample".into()));
    }
    let boot_reps = if wants_bn {
        spec.boot_reps.unwrap_or(DEFAULT_BOOT_REPS_CAP).min(spec.reps).max(1)
    } else {
        0
    };
    let tic = spec.methods.contains(&Method::TicEmpirical) && spec.scenario.model == Family::Gaussian;
    Ok(RunFlags { tic, boot_reps, nb: spec.nb })
}

/// Run the experiment on the current thread only, regardless of features.
pub fn run_experiment_seq(spec: &ExperimentSpec) -> Result<ExperimentSummary> {
    let flags = validate(spec)?;
    let ctx = Context::new(spec.scenario, spec.n);
    let chunks = collect_chunks_seq(&ctx, spec.seed, flags, spec.reps)?;
    Ok(summarize(spec, flags, chunks))
}

/// Run the experiment, fanning chunks out over the current thread pool when
/// the `parallel` feature is enabled. Output is identical to
/// [`run_experiment_seq`].
pub fn run_experiment(spec: &ExperimentSpec) -> Result<ExperimentSummary> {
    #[cfg(feature = "parallel")]
    {
        let flags = validate(spec)?;
        let ctx = Context::new(spec.scenario, spec.n);
        let chunks = collect_chunks_par(&ctx, spec.seed, flags, spec.reps)?;
        Ok(summarize(spec, flags, chunks))
    }
    #[cfg(not(feature = "parallel"))]
    {
        run_experiment_seq(spec)
    }
}

/// Decomposition-only run: the Monte Carlo ground truth for one scenario.
pub fn run_true_bias(scenario: Scenario, n: usize, reps: u64, seed: u64) -> Result<ExperimentSummary> {
    let mut spec = ExperimentSpec::new(scenario, n, reps, seed);
    spec.methods = vec![Method::True];
    run_experiment(&spec)
}

/// One bias estimate per requested method.
pub fn run_methods_table(spec: &ExperimentSpec) -> Result<Vec<BiasReport>> {
    let needs_mc = spec
        .methods
        .iter()
        .any(|m| matches!(m, Method::True | Method::TicEmpirical | Method::Bn));
    let summary = if needs_mc { Some(run_experiment(spec)?) } else { None };

    let mut rows = Vec::new();
    let base = |method: Method| BiasReport {
        scenario: spec.scenario,
        n: spec.n,
        method,
        estimate: None,
        stderr: None,
        reps: 1,
        nb: None,
        seed: spec.seed,
    };
    for method in Method::all() {
        if !spec.methods.contains(&method) {
            continue;
        }
        let mut row = base(method);
        match method {
            Method::True => {
                let s = summary.as_ref().expect("True requires the Monte Carlo run");
                row.estimate = Some(s.decomp.c13.mean());
                row.stderr = Some(s.decomp.c13.stderr());
                row.reps = s.reps;
            }
            Method::Aic => {
                row.estimate = Some(analytic::aic_penalty(2));
            }
            Method::Sugiura => {
                row.estimate = Some(analytic::sugiura_bias(spec.n, 2)?);
            }
            Method::TicAnalytic => {
                row.estimate = match infomat::scenario_matrices(spec.scenario)
                    .and_then(|m| infomat::tic_trace(&m))
                {
                    Ok(v) => Some(v),
                    Err(Error::SingularHessian) => None,
                    Err(e) => return Err(e),
                };
            }
            Method::TicEmpirical => {
                if let Some(w) = summary.as_ref().and_then(|s| s.tic_emp) {
                    row.estimate = Some(w.mean());
                    row.stderr = Some(w.stderr());
                    row.reps = w.count();
                }
                // Laplace model: row stays unavailable
            }
            Method::Cn => {
                row.estimate = Some(match spec.order {
                    Some(o) => analytic::cn(spec.scenario, spec.n, o)?,
                    None => analytic::cn_table(spec.scenario, spec.n)?,
                });
            }
            Method::Bn => {
                let s = summary.as_ref().expect("Bn requires the Monte Carlo run");
                let w = s.bn.expect("Bn run always accumulates bootstrap output");
                row.estimate = Some(w.mean());
                row.stderr = Some(w.stderr());
                row.reps = w.count();
                row.nb = Some(spec.nb as u64);
            }
        }
        rows.push(row);
    }
    Ok(rows)
}
