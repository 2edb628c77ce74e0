//! Oracle-checked kernelization runs and seeded regression sweeps.

use std::fmt;
use std::time::Instant;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;
use thiserror::Error;

use super::generate::{generate, Family, GenerateError};
use crate::hypergraph::{Hypergraph, Instance, Problem, Vertex};
use crate::kernels::{
    kernelize_is_bounded_degree, kernelize_quasi_regular, kernelize_vc_bounded_degree, Answer, ClaimedBound,
    KernelError, KernelOutcome,
};
use crate::oracles::{max_strong_independent_set, min_hitting_set, OracleError};
use crate::planar::kernelize_planar_vc;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Method {
    QuasiRegular,
    BoundedDegree { d: usize },
    Planar,
}

impl fmt::Display for Method {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Method::QuasiRegular => "qr",
            Method::BoundedDegree { .. } => "bd",
            Method::Planar => "planar",
        })
    }
}

/// Runs the kernel selected by `method` for the instance's problem.
pub fn kernelize(inst: &Instance, method: Method) -> Result<KernelOutcome, KernelError> {
    match (method, inst.problem) {
        (Method::QuasiRegular, _) => kernelize_quasi_regular(inst),
        (Method::BoundedDegree { d }, Problem::VertexCover) => kernelize_vc_bounded_degree(inst, d),
        (Method::BoundedDegree { d }, Problem::IndependentSet) => kernelize_is_bounded_degree(inst, d),
        (Method::Planar, _) => kernelize_planar_vc(inst),
    }
}

/// Exact answer: `τ ≤ k` for vertex cover, `α ≥ k` for strong independent
/// set.
pub fn oracle_answer(inst: &Instance) -> Result<Answer, OracleError> {
    Ok(Answer::from_bool(match inst.problem {
        Problem::VertexCover => min_hitting_set(&inst.hypergraph)?.size <= inst.k,
        Problem::IndependentSet => max_strong_independent_set(&inst.hypergraph)?.size >= inst.k,
    }))
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Decision {
    Yes,
    No,
    Kernel,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "status", rename_all = "lowercase")]
pub enum OracleCheck {
    Skipped,
    Pass { answer: Answer },
    Fail { original: Answer, kernel: Answer },
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct KernelReport {
    pub id: String,
    pub class: String,
    pub method: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub d: Option<usize>,
    pub problem: Problem,
    pub n_before: usize,
    pub m_before: usize,
    pub k_before: usize,
    pub n_after: Option<usize>,
    pub m_after: Option<usize>,
    pub k_after: Option<usize>,
    pub forced: Vec<Vertex>,
    pub decision: Decision,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub reason: Option<String>,
    pub bound: Option<ClaimedBound>,
    pub bound_satisfied: Option<bool>,
    pub oracle: OracleCheck,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub timing_us: Option<u64>,
}

impl KernelReport {
    pub fn failed(&self) -> bool {
        matches!(self.oracle, OracleCheck::Fail { .. })
    }

    /// The kernel has no more vertices or edges than the input.
    pub fn shrank(&self) -> bool {
        self.n_after.is_none_or(|n| n <= self.n_before) && self.m_after.is_none_or(|m| m <= self.m_before)
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VerifyConfig {
    /// Largest vertex count handed to the oracles.
    pub oracle_ceiling: usize,
    pub check_oracle: bool,
    pub timing: bool,
}

impl Default for VerifyConfig {
    fn default() -> Self {
        VerifyConfig { oracle_ceiling: 12, check_oracle: true, timing: true }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum VerifyError {
    #[error("instance has {n} vertices, above the oracle ceiling {ceiling}")]
    OracleCeilingExceeded { n: usize, ceiling: usize },
    #[error(transparent)]
    Kernel(#[from] KernelError),
    #[error(transparent)]
    Oracle(#[from] OracleError),
    #[error(transparent)]
    Generate(#[from] GenerateError),
}

/// A labelled instance.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Case {
    pub id: String,
    pub class: String,
    pub instance: Instance,
}

/// Kernelizes `case` and compares the implied answer with the oracle answer
/// on the original instance.
pub fn verify_preservation(case: &Case, method: Method, cfg: &VerifyConfig) -> Result<KernelReport, VerifyError> {
    let inst = &case.instance;
    let h = &inst.hypergraph;
    if cfg.check_oracle && h.n() > cfg.oracle_ceiling {
        return Err(VerifyError::OracleCeilingExceeded { n: h.n(), ceiling: cfg.oracle_ceiling });
    }
    let start = Instant::now();
    let outcome = kernelize(inst, method)?;
    let elapsed = start.elapsed();

    let mut report = KernelReport {
        id: case.id.clone(),
        class: case.class.clone(),
        method: method.to_string(),
        d: match method {
            Method::BoundedDegree { d } => Some(d),
            _ => None,
        },
        problem: inst.problem,
        n_before: h.n(),
        m_before: h.m(),
        k_before: inst.k,
        n_after: None,
        m_after: None,
        k_after: None,
        forced: Vec::new(),
        decision: Decision::Kernel,
        reason: None,
        bound: None,
        bound_satisfied: None,
        oracle: OracleCheck::Skipped,
        timing_us: cfg.timing.then_some(elapsed.as_micros() as u64),
    };
    match &outcome {
        KernelOutcome::Decided { answer, reason } => {
            report.decision = if answer.is_yes() { Decision::Yes } else { Decision::No };
            report.reason = Some(reason.clone());
        }
        KernelOutcome::Kernel { instance, forced, stats } => {
            report.n_after = Some(stats.n);
            report.m_after = Some(stats.m);
            report.k_after = Some(instance.k);
            report.forced = forced.clone();
            report.bound = Some(stats.bound.clone());
            report.bound_satisfied = Some(stats.within_bound());
        }
    }
    if cfg.check_oracle {
        let original = oracle_answer(inst)?;
        let kernel = match &outcome {
            KernelOutcome::Decided { answer, .. } => *answer,
            KernelOutcome::Kernel { instance, .. } => oracle_answer(instance)?,
        };
        report.oracle = if original == kernel {
            OracleCheck::Pass { answer: original }
        } else {
            OracleCheck::Fail { original, kernel }
        };
    }
    Ok(report)
}

/// Instance families a sweep can draw from.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum SweepFamily {
    Regular,
    BoundedDegree,
    Planar,
    Mixed,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct SweepReport {
    pub family: SweepFamily,
    pub seed: u64,
    pub instances: usize,
    pub checks: usize,
    pub failures: usize,
    pub reports: Vec<KernelReport>,
}

/// Random family parameters within oracle range, drawn from `rng`.
fn draw_family(family: SweepFamily, rng: &mut ChaCha8Rng) -> Family {
    match family {
        SweepFamily::Regular => {
            let r = rng.gen_range(1..=3);
            let ns: Vec<usize> = (3..=12).filter(|n| n * r % 3 == 0 && n * r / 3 >= 1 && (r == 1 || *n >= 5)).collect();
            Family::Regular { n: ns[rng.gen_range(0..ns.len())], r }
        }
        SweepFamily::BoundedDegree => {
            let d = rng.gen_range(1..=4);
            let n = rng.gen_range(6..=12);
            let m = rng.gen_range(1..=(n * d / 3).min(16));
            Family::BoundedDegree { n, d, m }
        }
        SweepFamily::Planar => Family::Planar { n: rng.gen_range(4..=12) },
        SweepFamily::Mixed => {
            let pick = [SweepFamily::Regular, SweepFamily::BoundedDegree, SweepFamily::Planar][rng.gen_range(0..3)];
            draw_family(pick, rng)
        }
    }
}

/// The `(instance, method)` pairs checked for one generated hypergraph:
/// vertex cover at `k ∈ {τ−1, τ}` and, for bounded degree, strong
/// independent set at `k ∈ {α, α+1}`.
pub fn cases_for(id: &str, family: Family, h: &Hypergraph) -> Result<Vec<(Case, Method)>, VerifyError> {
    let tau = min_hitting_set(h)?.size;
    let method = match family {
        Family::Regular { .. } => Method::QuasiRegular,
        Family::BoundedDegree { d, .. } => Method::BoundedDegree { d },
        Family::Planar { .. } => Method::Planar,
    };
    let mut out = Vec::new();
    let case = |k: usize, problem: Problem| Case {
        id: format!("{id}-{}-k{k}", if problem == Problem::VertexCover { "vc" } else { "is" }),
        class: family.tag().to_string(),
        instance: Instance::new(h.clone(), k, problem).expect("k within range"),
    };
    for k in tau.saturating_sub(1)..=tau {
        if k + 1 == tau || k == tau {
            out.push((case(k, Problem::VertexCover), method));
        }
    }
    if let Family::BoundedDegree { .. } = family {
        let alpha = max_strong_independent_set(h)?.size;
        for k in alpha..=(alpha + 1).min(h.n()) {
            out.push((case(k, Problem::IndependentSet), method));
        }
    }
    Ok(out)
}

/// Generates `count` instances from `seed` and verifies every case of each.
/// Fails fast only on errors; oracle disagreements are counted.
pub fn sweep(family: SweepFamily, count: usize, seed: u64, cfg: &VerifyConfig) -> Result<SweepReport, VerifyError> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut reports = Vec::new();
    for i in 0..count {
        let fam = draw_family(family, &mut rng);
        let instance_seed: u64 = rng.gen();
        let h = generate(fam, instance_seed)?;
        let id = format!("{}-{i}", fam.tag());
        for (case, method) in cases_for(&id, fam, &h)? {
            reports.push(verify_preservation(&case, method, cfg)?);
        }
    }
    let failures = reports.iter().filter(|r| r.failed()).count();
    Ok(SweepReport { family, seed, instances: count, checks: reports.len(), failures, reports })
}
