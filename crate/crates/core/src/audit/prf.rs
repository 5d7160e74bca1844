//! PRF audit.
//!
//! A coalition `S` with `|S| >= ceil(ell n / k)` is owed `ell`
//! representatives within `D(S)` of it. Its violation factor is
//! `r_ell(S) / D(S)`, where `r_ell(S)` is the `ell`-th smallest distance from
//! a representative to `S`.
//!
//! Instead of enumerating coalitions the audit searches threshold graphs.
//! For a threshold `t` and a target `rho`, a coalition with `D(S) <= t` and
//! `r_ell(S) >= rho` exists iff, for some `ell - 1` representatives `R`, the
//! agents at distance `>= rho` from every representative outside `R` contain
//! a clique of `G_t` of the required size. Feasibility is monotone in `rho`,
//! so each `(t, ell)` pair needs a binary search over the agent-to-committee
//! distances.

use fixedbitset::FixedBitSet;
use itertools::Itertools;
use rand::seq::index::sample;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::audit::{Axiom, AxiomVerdict, Witness};
use crate::budget::Budget;
use crate::clique::ThresholdGraph;
use crate::error::Result;
use crate::metric::{fairness_ratio, Committee, MetricInstance};

/// Exact PRF audit.
pub fn audit_prf(
    inst: &MetricInstance,
    committee: &Committee,
    budget: &mut Budget,
) -> Result<AxiomVerdict> {
    prf_search(inst, committee, budget, false)
}

/// Like [`audit_prf`] but returns as soon as any violation is found, so the
/// reported factor is only a lower bound when the committee fails.
pub(crate) fn prf_violated(
    inst: &MetricInstance,
    committee: &Committee,
    budget: &mut Budget,
) -> Result<bool> {
    Ok(!prf_search(inst, committee, budget, true)?.holds_exact)
}

fn prf_search(
    inst: &MetricInstance,
    committee: &Committee,
    budget: &mut Budget,
    stop_at_violation: bool,
) -> Result<AxiomVerdict> {
    let n = inst.n();
    let reps = committee.members();
    let agents: Vec<usize> = (0..n).collect();

    let mut thresholds = vec![0.0];
    for i in 0..n {
        thresholds.extend_from_slice(&inst.row(i)[i + 1..]);
    }
    thresholds.sort_unstable_by(f64::total_cmp);
    thresholds.dedup();

    let mut targets: Vec<f64> = reps
        .iter()
        .flat_map(|&x| inst.row(x).iter().copied())
        .collect();
    targets.sort_unstable_by(f64::total_cmp);
    targets.dedup();

    let mut best = 0.0f64;
    let mut witness: Option<Witness> = None;

    for &t in &thresholds {
        // No target can beat the current best at this threshold.
        if fairness_ratio(*targets.last().unwrap(), t) <= best {
            continue;
        }
        let graph = ThresholdGraph::new(inst, &agents, t);
        for ell in 1..=inst.k() {
            let size = inst.coalition_size(ell);
            let open: Vec<f64> = targets
                .iter()
                .copied()
                .filter(|&rho| fairness_ratio(rho, t) > best)
                .collect();
            // Largest feasible prefix of `open`.
            let (mut lo, mut hi) = (0usize, open.len());
            let mut found = None;
            while lo < hi {
                let mid = lo + (hi - lo) / 2;
                match coalition_beyond(inst, &graph, reps, ell, size, open[mid], budget)? {
                    Some(set) => {
                        found = Some(set);
                        lo = mid + 1;
                    }
                    None => hi = mid,
                }
            }
            let Some(set) = found else { continue };
            let w = witness_for(inst, reps, set, ell)?;
            let ratio = fairness_ratio(w.achieved, w.threshold);
            debug_assert!(ratio > best);
            best = ratio;
            witness = Some(w);
            if best == f64::INFINITY || (stop_at_violation && best > 1.0) {
                return Ok(verdict(best, witness));
            }
        }
    }
    Ok(verdict(best, witness))
}

fn verdict(best: f64, witness: Option<Witness>) -> AxiomVerdict {
    let witness = witness.filter(|_| best > 1.0);
    AxiomVerdict::exact(Axiom::Prf, best, witness)
}

/// A clique of `graph` of exactly `size` agents that keeps all but `ell - 1`
/// representatives at distance `>= rho`, if one exists.
fn coalition_beyond(
    inst: &MetricInstance,
    graph: &ThresholdGraph,
    reps: &[usize],
    ell: usize,
    size: usize,
    rho: f64,
    budget: &mut Budget,
) -> Result<Option<Vec<usize>>> {
    let n = inst.n();
    for excused in (0..reps.len()).combinations(ell - 1) {
        let mut allowed = FixedBitSet::with_capacity(n);
        for v in 0..n {
            let row = inst.row(v);
            let far = reps
                .iter()
                .enumerate()
                .all(|(i, &x)| excused.contains(&i) || row[x] >= rho);
            allowed.set(v, far);
        }
        if allowed.count_ones(..) < size {
            continue;
        }
        if let Some(clique) = graph.find_clique(&allowed, size, budget)? {
            return Ok(Some(clique));
        }
    }
    Ok(None)
}

fn witness_for(
    inst: &MetricInstance,
    reps: &[usize],
    set: Vec<usize>,
    ell: usize,
) -> Result<Witness> {
    let threshold = inst.diameter(&set)?;
    let mut dists: Vec<f64> = reps.iter().map(|&x| inst.nearest_in(x, &set)).collect();
    dists.sort_unstable_by(f64::total_cmp);
    Ok(Witness {
        set,
        ell,
        threshold,
        achieved: dists[ell - 1],
        required_count: None,
    })
}

/// Non-exhaustive PRF audit over `samples` uniformly random coalitions of
/// each required size. The measured factor is a lower bound on the exact
/// one, and `holds_exact` only means no violation was seen.
pub fn audit_prf_sampled(
    inst: &MetricInstance,
    committee: &Committee,
    samples: usize,
    seed: u64,
) -> Result<AxiomVerdict> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let reps = committee.members();
    let mut best = 0.0f64;
    let mut witness = None;
    for ell in 1..=inst.k() {
        let size = inst.coalition_size(ell);
        for _ in 0..samples {
            let mut set = sample(&mut rng, inst.n(), size).into_vec();
            set.sort_unstable();
            let w = witness_for(inst, reps, set, ell)?;
            let ratio = fairness_ratio(w.achieved, w.threshold);
            if ratio > best {
                best = ratio;
                witness = Some(w);
            }
        }
    }
    let mut verdict = verdict(best, witness);
    verdict.exhaustive = false;
    Ok(verdict)
}
