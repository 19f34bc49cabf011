//! Assemble → solve → certify, with timing and a serializable record.

use std::time::Instant;

use bsos_core::certificate::{verify, CertificateReport};
use bsos_core::relaxation::{assemble_raw_with, remove_redundant, Row, RowEvaluator};
use bsos_core::sdp_solver::{solve, solve_lp, SolveResult, SolverOptions};
use bsos_core::{Mode, RelaxationConfig, SdpInstance, SemialgebraicProblem, SolveStatus};
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

pub const THREADS_ENV: &str = "BSOS_NUM_THREADS";

#[derive(Debug, Clone, PartialEq)]
pub struct RunOptions {
    pub d: u32,
    pub k: u32,
    pub mode: Mode,
    pub seed: u64,
    pub solver: SolverOptions,
    pub certify: bool,
    /// Worker threads for assembly; 0 is serial.
    pub threads: usize,
}

impl RunOptions {
    pub fn new(d: u32, k: u32, mode: Mode) -> Self {
        Self {
            d,
            k,
            mode,
            seed: RelaxationConfig::DEFAULT_SEED,
            solver: SolverOptions::default(),
            certify: false,
            threads: 0,
        }
    }

    pub fn relaxation_config(&self) -> RelaxationConfig {
        let base = match self.mode {
            Mode::Bsos => RelaxationConfig::bsos(self.d, self.k),
            Mode::Lp => RelaxationConfig::lp(self.d),
        };
        base.with_seed(self.seed)
    }
}

/// `BSOS_NUM_THREADS`, defaulting to 0 (serial) when unset or unparsable.
pub fn threads_from_env() -> usize {
    std::env::var(THREADS_ENV)
        .ok()
        .and_then(|v| v.trim().parse().ok())
        .unwrap_or(0)
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct RunRecord {
    pub problem_name: String,
    pub n: usize,
    pub m: usize,
    pub d: u32,
    pub k: u32,
    pub mode: String,
    pub seed: u64,
    pub bound: Option<f64>,
    pub status: String,
    pub wall_time_seconds: f64,
    pub iterations: usize,
    pub rank_ms: Option<usize>,
    pub certified: bool,
    pub candidate: Option<Vec<f64>>,
    pub candidate_value: Option<f64>,
    pub primal_residual: Option<f64>,
    pub dual_residual: Option<f64>,
    pub gap: Option<f64>,
    pub rows: usize,
    pub kept_rows: usize,
    pub pairs: usize,
    pub psd_size: usize,
    pub error: Option<String>,
}

impl RunRecord {
    pub fn solve_status(&self) -> Option<SolveStatus> {
        [
            SolveStatus::Optimal,
            SolveStatus::Infeasible,
            SolveStatus::Unbounded,
            SolveStatus::MaxIter,
            SolveStatus::NumericalFailure,
        ]
        .into_iter()
        .find(|s| s.as_str() == self.status)
    }
}

/// Full pipeline output, for callers that need more than the record.
pub struct RunOutput {
    pub record: RunRecord,
    pub instance: Option<SdpInstance>,
    pub result: Option<SolveResult>,
    pub certificate: Option<CertificateReport>,
}

pub fn mode_name(mode: Mode) -> &'static str {
    match mode {
        Mode::Bsos => "bsos",
        Mode::Lp => "lp",
    }
}

fn finite(x: f64) -> Option<f64> {
    x.is_finite().then_some(x)
}

/// Assembly with rows evaluated on a rayon pool when `threads > 0`; the
/// rows come back in point order, so the instance is identical to the serial one.
pub fn assemble_with_threads(
    problem: &SemialgebraicProblem,
    config: &RelaxationConfig,
    threads: usize,
) -> Result<SdpInstance, bsos_core::Error> {
    let raw = if threads == 0 {
        bsos_core::relaxation::assemble_raw(problem, config)?
    } else {
        let pool = rayon::ThreadPoolBuilder::new()
            .num_threads(threads)
            .build()
            .expect("thread pool");
        pool.install(|| {
            assemble_raw_with(
                problem,
                config,
                |ev: &RowEvaluator<'_>, points: &[Vec<f64>]| -> Vec<Row> {
                    points.par_iter().map(|z| ev.row(z)).collect()
                },
            )
        })?
    };
    Ok(remove_redundant(raw, config.redundancy_tol))
}

pub fn run(problem: &SemialgebraicProblem, opts: &RunOptions) -> RunRecord {
    run_full(problem, opts).record
}

pub fn run_full(problem: &SemialgebraicProblem, opts: &RunOptions) -> RunOutput {
    let config = opts.relaxation_config();
    let mut record = RunRecord {
        problem_name: problem.name.clone(),
        n: problem.num_vars(),
        m: problem.num_generators(),
        d: opts.d,
        k: config.effective_k(),
        mode: mode_name(opts.mode).to_string(),
        seed: opts.seed,
        bound: None,
        status: "error".to_string(),
        wall_time_seconds: 0.0,
        iterations: 0,
        rank_ms: None,
        certified: false,
        candidate: None,
        candidate_value: None,
        primal_residual: None,
        dual_residual: None,
        gap: None,
        rows: 0,
        kept_rows: 0,
        pairs: 0,
        psd_size: 0,
        error: None,
    };
    let start = Instant::now();
    let instance = match assemble_with_threads(problem, &config, opts.threads) {
        Ok(inst) => inst,
        Err(e) => {
            record.error = Some(e.to_string());
            record.wall_time_seconds = start.elapsed().as_secs_f64();
            return RunOutput {
                record,
                instance: None,
                result: None,
                certificate: None,
            };
        }
    };
    let result = match opts.mode {
        Mode::Bsos => solve(&instance, &opts.solver),
        Mode::Lp => solve_lp(&instance, &opts.solver),
    };
    let certificate = (opts.certify && result.status == SolveStatus::Optimal)
        .then(|| verify(problem, &result, &instance));
    record.wall_time_seconds = start.elapsed().as_secs_f64();

    record.status = result.status.as_str().to_string();
    record.bound = if result.status.has_bound() {
        finite(result.bound)
    } else {
        None
    };
    record.iterations = result.iterations;
    record.primal_residual = finite(result.primal_residual);
    record.dual_residual = finite(result.dual_residual);
    record.gap = finite(result.gap);
    record.rows = instance.num_points();
    record.kept_rows = instance.kept_rows.len();
    record.pairs = instance.num_pairs();
    record.psd_size = instance.psd_size();
    if let Some(cert) = &certificate {
        record.rank_ms = cert.available.then_some(cert.rank_ms);
        record.certified = cert.certified();
        record.candidate = cert.candidate.clone();
        record.candidate_value = cert.candidate_value;
    }
    RunOutput {
        record,
        instance: Some(instance),
        result: Some(result),
        certificate,
    }
}

/// Runs `d = 1..=d_max`; records come back in increasing `d`.
pub fn sweep(problem: &SemialgebraicProblem, d_max: u32, opts: &RunOptions) -> Vec<RunRecord> {
    let one = |d: u32| run(problem, &RunOptions { d, ..opts.clone() });
    if opts.threads == 0 {
        (1..=d_max).map(one).collect()
    } else {
        let pool = rayon::ThreadPoolBuilder::new()
            .num_threads(opts.threads)
            .build()
            .expect("thread pool");
        pool.install(|| (1..=d_max).into_par_iter().map(one).collect())
    }
}

/// Fixed-width table, one line per record.
pub fn format_table(records: &[RunRecord]) -> String {
    let mut out = format!(
        "{:<14} {:>3} {:>3} {:>5} {:>17} {:>18} {:>10} {:>5} {:>5} {:>9}\n",
        "problem", "d", "k", "mode", "bound", "status", "time(s)", "iter", "rank", "certified"
    );
    for r in records {
        out.push_str(&format!(
            "{:<14} {:>3} {:>3} {:>5} {:>17} {:>18} {:>10.3} {:>5} {:>5} {:>9}\n",
            r.problem_name,
            r.d,
            r.k,
            r.mode,
            r.bound.map_or("-".to_string(), |b| format!("{b:.8e}")),
            r.status,
            r.wall_time_seconds,
            r.iterations,
            r.rank_ms.map_or("-".to_string(), |x| x.to_string()),
            if r.certified { "yes" } else { "no" },
        ));
    }
    out
}
