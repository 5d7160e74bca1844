//! Running the selection algorithms when `k` does not divide `n`.
//!
//! Every agent is replaced by `k` co-located copies, so the lifted
//! population `k n` divides evenly. A committee on the lifted instance is
//! mapped back zero-class by zero-class: a class that received `m`
//! representatives contributes its `m` lowest-index agents.

use serde::{Deserialize, Serialize};

use crate::engine::{self, Algorithm, EngineOptions, SelectionResult};
use crate::error::{Error, Result};
use crate::metric::{cost_ratio, Committee, MetricInstance};

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ReductionMap {
    pub n: usize,
    pub k: usize,
    pub lifted_n: usize,
    /// Zero-classes of the original instance.
    pub classes: Vec<Vec<usize>>,
    /// Class index of every original agent.
    pub class_of: Vec<usize>,
}

impl ReductionMap {
    /// Original agent a lifted agent copies. Copies of an agent are
    /// contiguous: lifted agent `j` copies agent `j / k`.
    pub fn origin(&self, lifted: usize) -> usize {
        lifted / self.k
    }
}

/// The lifted instance (`k` copies of every agent) and the map back.
pub fn lift(inst: &MetricInstance) -> (MetricInstance, ReductionMap) {
    let (n, k) = (inst.n(), inst.k());
    let lifted_n = n * k;
    let mut dist = Vec::with_capacity(lifted_n * lifted_n);
    for a in 0..lifted_n {
        let row = inst.row(a / k);
        for b in 0..lifted_n {
            dist.push(row[b / k]);
        }
    }
    let classes = inst.zero_classes();
    let mut class_of = vec![0; n];
    for (id, class) in classes.iter().enumerate() {
        for &v in class {
            class_of[v] = id;
        }
    }
    let map = ReductionMap {
        n,
        k,
        lifted_n,
        classes,
        class_of,
    };
    (MetricInstance::from_trusted(lifted_n, k, dist), map)
}

/// Maps a committee of the lifted instance back to the original agents.
pub fn pull_back(map: &ReductionMap, lifted: &Committee) -> Result<Committee> {
    let mut per_class = vec![0usize; map.classes.len()];
    for &x in lifted.iter() {
        if x >= map.lifted_n {
            return Err(Error::AgentOutOfRange {
                index: x,
                n: map.lifted_n,
            });
        }
        per_class[map.class_of[map.origin(x)]] += 1;
    }
    let mut members = Vec::with_capacity(lifted.len());
    for (class, &reps) in map.classes.iter().zip(&per_class) {
        if reps > class.len() {
            return Err(Error::ClassOverflow {
                class_rep: class[0],
                size: class.len(),
                reps,
            });
        }
        members.extend_from_slice(&class[..reps]);
    }
    Committee::from_indices(map.n, members)
}

/// Runs `algorithm` on any instance. When `k` divides `n` this is a direct
/// engine run against the instance's optimum; otherwise the instance is
/// lifted, the co-location amendment is switched on where the algorithm
/// needs it, and the result is pulled back. Cost figures always refer to
/// the original instance; the trace indexes lifted agents.
pub fn select_general(
    inst: &MetricInstance,
    algorithm: Algorithm,
    options: &EngineOptions,
) -> Result<SelectionResult> {
    if inst.divides() {
        let (opt, _) = inst.opt_committee();
        return engine::select(inst, &opt, algorithm, options);
    }
    let (lifted, map) = lift(inst);
    let (lifted_opt, _) = lifted.opt_committee();
    let mut inner = *options;
    if algorithm.needs_colocation_amendment() {
        inner.policy.colocated_first = true;
    }
    let run = engine::select(&lifted, &lifted_opt, algorithm, &inner)?;
    let committee = pull_back(&map, &run.committee)?;
    let cost = inst.cost(&committee);
    let (_, opt_cost) = inst.opt_committee();
    Ok(SelectionResult {
        algorithm,
        committee,
        trace: run.trace,
        cost,
        opt_cost,
        ratio: cost_ratio(cost, opt_cost),
        lifted_n: Some(map.lifted_n),
    })
}
