use crate::budget::Budget;
use crate::clique::ThresholdGraph;
use crate::engine::{
    check_divisible, Algorithm, CoverEvent, EngineOptions, OptProximity, Pool, SelectionResult,
};
use crate::error::{Error, Result};
use crate::metric::{AgentSet, Committee, MetricInstance};

/// A minimum-diameter `m`-subset of `pool` and its diameter.
///
/// Exact: binary search over the pairwise distances inside `pool` for the
/// smallest threshold whose threshold graph has an `m`-clique. Among optimal
/// sets the lexicographically smallest (by agent index) is returned. The
/// subproblem is NP-hard, so the clique search runs against `budget`.
pub fn min_diameter_subset(
    inst: &MetricInstance,
    pool: &[usize],
    m: usize,
    budget: &mut Budget,
) -> Result<(AgentSet, f64)> {
    let mut ranked = pool.to_vec();
    ranked.sort_unstable();
    ranked.dedup();
    let (set, diameter) = min_diameter_ranked(inst, &ranked, m, budget)?;
    Ok((AgentSet::new(set), diameter))
}

/// Like [`min_diameter_subset`] but ties resolve lexicographically in the
/// order of `ranked`.
fn min_diameter_ranked(
    inst: &MetricInstance,
    ranked: &[usize],
    m: usize,
    budget: &mut Budget,
) -> Result<(Vec<usize>, f64)> {
    if m == 0 || ranked.len() < m {
        return Err(Error::NotEnoughAgents {
            wanted: m,
            available: ranked.len(),
        });
    }
    if m == 1 {
        return Ok((vec![ranked[0]], 0.0));
    }
    let mut thresholds: Vec<f64> = Vec::with_capacity(ranked.len() * (ranked.len() - 1) / 2);
    for (a, &i) in ranked.iter().enumerate() {
        for &j in &ranked[a + 1..] {
            thresholds.push(inst.d(i, j));
        }
    }
    thresholds.sort_unstable_by(f64::total_cmp);
    thresholds.dedup();

    // The largest threshold always admits a clique: the graph is complete.
    let (mut lo, mut hi) = (0usize, thresholds.len() - 1);
    let mut found: Option<Vec<usize>> = None;
    while lo < hi {
        let mid = lo + (hi - lo) / 2;
        let graph = ThresholdGraph::new(inst, ranked, thresholds[mid]);
        match graph.find_clique(&graph.full_set(), m, budget)? {
            Some(clique) => {
                hi = mid;
                found = Some(clique);
            }
            None => lo = mid + 1,
        }
    }
    // Every successful probe lowers `hi`, so a recorded clique was found at
    // the final threshold.
    let clique = match found {
        Some(c) => c,
        None => {
            let graph = ThresholdGraph::new(inst, ranked, thresholds[lo]);
            graph
                .find_clique(&graph.full_set(), m, budget)?
                .expect("threshold search ends on a feasible threshold")
        }
    };
    let set = ranks_to_agents(ranked, &clique);
    let diameter = inst.diameter(&set)?;
    Ok((set, diameter))
}

fn ranks_to_agents(ranked: &[usize], ranks: &[usize]) -> Vec<usize> {
    ranks.iter().map(|&r| ranked[r]).collect()
}

/// Repeatedly covers a minimum-diameter uncovered set of `n/k` agents and
/// represents it by its member closest to `opt`.
pub fn select_min_diam(
    inst: &MetricInstance,
    opt: &Committee,
    options: &EngineOptions,
) -> Result<SelectionResult> {
    let q = check_divisible(inst, opt)?;
    let prox = OptProximity::new(inst, opt, options.policy);
    let mut budget = Budget::new(options.budget);
    let mut pool = Pool::full(inst.n());
    let mut trace = Vec::with_capacity(inst.k());

    for i in 1..=inst.k() {
        let mut ranked = pool.members().to_vec();
        ranked.sort_by(|&a, &b| prox.cover_cmp(a, b));
        let (mut set, _) = min_diameter_ranked(inst, &ranked, q, &mut budget)?;
        let mut rep = prox.pick_rep(set.iter().copied());

        if options.policy.colocated_first {
            // Agents sharing the representative's location can replace any
            // member without raising the diameter.
            let mut colocated: Vec<usize> = ranked
                .iter()
                .copied()
                .filter(|&v| inst.d(v, rep) == 0.0)
                .collect();
            colocated.truncate(q);
            if colocated.len() > set.iter().filter(|&&v| inst.d(v, rep) == 0.0).count() {
                let mut others: Vec<usize> = set
                    .iter()
                    .copied()
                    .filter(|&v| inst.d(v, rep) != 0.0)
                    .collect();
                others.truncate(q - colocated.len());
                set = colocated;
                set.extend(others);
                rep = prox.pick_rep(set.iter().copied());
            }
        }
        let diameter = inst.diameter(&set)?;

        set.sort_unstable();
        pool.cover(&set);
        trace.push(CoverEvent {
            i,
            center: rep,
            delta: diameter,
            radius: diameter,
            covered: set,
            representative: rep,
        });
    }
    Ok(SelectionResult::new(inst, Algorithm::MinDiam, opt, trace))
}
