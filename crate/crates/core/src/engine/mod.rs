//! Committee selection by greedy capture.
//!
//! Every algorithm here covers the agents in `k` rounds of `n/k` agents and
//! picks one representative per round. The continuous ball-growing processes
//! are simulated with per-center trigger radii: the radius at which a center's
//! closed ball first holds `n/k` uncovered agents. Covering only shrinks the
//! uncovered pool, so triggers never decrease and processing the smallest
//! trigger first reproduces the continuous event order.

mod greedy;
mod min_diameter;
mod partition;
mod policy;

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::budget::DEFAULT_BUDGET;
use crate::error::{Error, Result};
use crate::metric::{cost_ratio, Committee, MetricInstance};

pub use greedy::{
    select_all_centers, select_alpha_scaled, select_greedy_capture, select_opt_guided,
};
pub use min_diameter::{min_diameter_subset, select_min_diam};
pub use partition::partition_to_committee;
pub use policy::{CenterRule, CoveringRule, RepresentativeRule, TieBreakPolicy};

pub(crate) use policy::OptProximity;

/// One covering round.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct CoverEvent {
    /// Round number, starting at 1.
    pub i: usize,
    pub center: usize,
    /// Event time of the continuous process.
    pub delta: f64,
    /// Radius of the ball the covered set lies in; `alpha * delta` for the
    /// accelerated agent of the alpha-scaled algorithm, `delta` otherwise.
    pub radius: f64,
    pub covered: Vec<usize>,
    pub representative: usize,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SelectionResult {
    pub algorithm: Algorithm,
    pub committee: Committee,
    pub trace: Vec<CoverEvent>,
    pub cost: f64,
    pub opt_cost: f64,
    #[serde(with = "crate::float")]
    pub ratio: f64,
    /// Population the trace indexes into when the run went through the
    /// duplication reduction.
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub lifted_n: Option<usize>,
}

impl SelectionResult {
    pub(crate) fn new(
        inst: &MetricInstance,
        algorithm: Algorithm,
        opt: &Committee,
        trace: Vec<CoverEvent>,
    ) -> Self {
        let mut members: Vec<usize> = trace.iter().map(|e| e.representative).collect();
        members.sort_unstable();
        debug_assert!(members.windows(2).all(|w| w[0] < w[1]));
        let committee = Committee::from_sorted_unchecked(members);
        let cost = inst.cost(&committee);
        let opt_cost = inst.cost(opt);
        SelectionResult {
            algorithm,
            committee,
            trace,
            cost,
            opt_cost,
            ratio: cost_ratio(cost, opt_cost),
            lifted_n: None,
        }
    }

    pub fn within_cost_bound(&self) -> bool {
        self.ratio <= self.algorithm.cost_bound() * (1.0 + 1e-9)
    }
}

/// The five selection algorithms.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(tag = "id", rename_all = "kebab-case")]
pub enum Algorithm {
    /// Repeatedly cover a minimum-diameter uncovered set; representative
    /// closest to OPT.
    MinDiam,
    /// Grow the ball of the uncovered agent closest to OPT.
    OptGuided,
    /// Greedy capture over uncovered centers with last-representative
    /// relocation.
    GreedyCapture,
    /// Greedy capture over all centers, every representative relocated
    /// towards OPT.
    AllCenters,
    /// Greedy capture where the uncovered agent nearest the most central OPT
    /// member grows `alpha` times faster.
    AlphaScaled { alpha: f64 },
}

impl Algorithm {
    pub const NAMES: [&'static str; 5] = [
        "min-diam",
        "opt-guided",
        "greedy-capture",
        "all-centers",
        "alpha-scaled",
    ];

    pub fn name(&self) -> &'static str {
        match self {
            Algorithm::MinDiam => "min-diam",
            Algorithm::OptGuided => "opt-guided",
            Algorithm::GreedyCapture => "greedy-capture",
            Algorithm::AllCenters => "all-centers",
            Algorithm::AlphaScaled { .. } => "alpha-scaled",
        }
    }

    /// Parses an algorithm id; `alpha` is used by `alpha-scaled` only.
    pub fn parse(name: &str, alpha: f64) -> Result<Self> {
        Ok(match name {
            "min-diam" => Algorithm::MinDiam,
            "opt-guided" => Algorithm::OptGuided,
            "greedy-capture" => Algorithm::GreedyCapture,
            "all-centers" => Algorithm::AllCenters,
            "alpha-scaled" => {
                check_alpha(alpha)?;
                Algorithm::AlphaScaled { alpha }
            }
            other => return Err(Error::Format(format!("unknown algorithm '{other}'"))),
        })
    }

    /// Worst-case ratio to the optimal cost.
    pub fn cost_bound(&self) -> f64 {
        match self {
            Algorithm::MinDiam | Algorithm::OptGuided | Algorithm::AllCenters => 2.0,
            Algorithm::GreedyCapture => 4.0,
            Algorithm::AlphaScaled { alpha } => 2.0 + 2.0 / alpha,
        }
    }

    /// Guaranteed PRF factor (`inf` when none).
    pub fn prf_bound(&self) -> f64 {
        match self {
            Algorithm::MinDiam | Algorithm::GreedyCapture => 1.0,
            Algorithm::OptGuided => f64::INFINITY,
            Algorithm::AllCenters => 2.0,
            Algorithm::AlphaScaled { alpha } => *alpha,
        }
    }

    /// Guaranteed mJR factor (`inf` when none).
    pub fn mjr_bound(&self) -> f64 {
        match self {
            Algorithm::GreedyCapture => 1.0,
            Algorithm::MinDiam | Algorithm::AllCenters => 2.0,
            Algorithm::OptGuided => f64::INFINITY,
            Algorithm::AlphaScaled { alpha } => *alpha,
        }
    }

    /// Guaranteed NORP factor (`inf` when none).
    pub fn norp_bound(&self) -> f64 {
        match self {
            Algorithm::OptGuided | Algorithm::GreedyCapture | Algorithm::AlphaScaled { .. } => 1.0,
            Algorithm::MinDiam | Algorithm::AllCenters => f64::INFINITY,
        }
    }

    /// Whether the algorithm needs the co-location amendment to satisfy
    /// point-NORP.
    pub fn needs_colocation_amendment(&self) -> bool {
        matches!(self, Algorithm::MinDiam | Algorithm::AllCenters)
    }
}

impl fmt::Display for Algorithm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Algorithm::AlphaScaled { alpha } => write!(f, "alpha-scaled(alpha={alpha})"),
            other => f.write_str(other.name()),
        }
    }
}

impl FromStr for Algorithm {
    type Err = Error;

    /// Accepts the plain ids, with `alpha-scaled` defaulting to `alpha = 1`
    /// and `alpha-scaled:<alpha>` selecting another factor.
    fn from_str(s: &str) -> Result<Self> {
        match s.split_once(':') {
            Some(("alpha-scaled", a)) => {
                let alpha: f64 = a
                    .parse()
                    .map_err(|_| Error::Format(format!("bad alpha '{a}'")))?;
                Algorithm::parse("alpha-scaled", alpha)
            }
            _ => Algorithm::parse(s, 1.0),
        }
    }
}

pub(crate) fn check_alpha(alpha: f64) -> Result<()> {
    if alpha.is_finite() && alpha >= 1.0 {
        Ok(())
    } else {
        Err(Error::BadAlpha(alpha))
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct EngineOptions {
    pub policy: TieBreakPolicy,
    /// Move the last representative towards OPT (greedy capture and the
    /// alpha-scaled variant). Turning this off only exists to demonstrate
    /// what goes wrong without it.
    pub relocate: bool,
    /// Node budget for the minimum-diameter search.
    pub budget: u64,
}

impl Default for EngineOptions {
    fn default() -> Self {
        EngineOptions {
            policy: TieBreakPolicy::default(),
            relocate: true,
            budget: DEFAULT_BUDGET,
        }
    }
}

impl EngineOptions {
    pub fn with_policy(mut self, policy: TieBreakPolicy) -> Self {
        self.policy = policy;
        self
    }
}

/// Runs `algorithm` on an instance where `k` divides `n`.
pub fn select(
    inst: &MetricInstance,
    opt: &Committee,
    algorithm: Algorithm,
    options: &EngineOptions,
) -> Result<SelectionResult> {
    match algorithm {
        Algorithm::MinDiam => select_min_diam(inst, opt, options),
        Algorithm::OptGuided => select_opt_guided(inst, opt, options),
        Algorithm::GreedyCapture => select_greedy_capture(inst, opt, options),
        Algorithm::AllCenters => select_all_centers(inst, opt, options),
        Algorithm::AlphaScaled { alpha } => select_alpha_scaled(inst, opt, alpha, options),
    }
}

pub(crate) fn check_divisible(inst: &MetricInstance, opt: &Committee) -> Result<usize> {
    if !inst.divides() {
        return Err(Error::Indivisible {
            n: inst.n(),
            k: inst.k(),
        });
    }
    if opt.len() != inst.k() || opt.iter().any(|&o| o >= inst.n()) {
        return Err(Error::InvalidCommittee(format!(
            "reference committee must hold {} agents of the instance",
            inst.k()
        )));
    }
    Ok(inst.n() / inst.k())
}

/// `rank`-th smallest (0-based) distance from `x` to the agents in `pool`.
pub(crate) fn order_statistic(inst: &MetricInstance, x: usize, pool: &[usize], rank: usize) -> f64 {
    let row = inst.row(x);
    let mut d: Vec<f64> = pool.iter().map(|&v| row[v]).collect();
    let (_, nth, _) = d.select_nth_unstable_by(rank, |a, b| a.total_cmp(b));
    *nth
}

/// The `m` agents of `pool` nearest to `center`: the center itself first
/// when uncovered, then by distance, equal distances in covering order.
pub(crate) fn nearest(
    inst: &MetricInstance,
    center: usize,
    pool: &[usize],
    m: usize,
    prox: &OptProximity,
) -> Vec<usize> {
    let row = inst.row(center);
    let mut sorted = pool.to_vec();
    sorted.sort_by(|&a, &b| {
        row[a]
            .total_cmp(&row[b])
            .then((a != center).cmp(&(b != center)))
            .then(prox.cover_cmp(a, b))
    });
    sorted.truncate(m);
    sorted
}

/// Uncovered agents in ascending order.
pub(crate) struct Pool {
    covered: Vec<bool>,
    members: Vec<usize>,
}

impl Pool {
    pub fn full(n: usize) -> Self {
        Pool {
            covered: vec![false; n],
            members: (0..n).collect(),
        }
    }

    pub fn members(&self) -> &[usize] {
        &self.members
    }

    pub fn cover(&mut self, set: &[usize]) {
        for &v in set {
            debug_assert!(!self.covered[v]);
            self.covered[v] = true;
        }
        let covered = &self.covered;
        self.members.retain(|&v| !covered[v]);
    }
}
