use crate::engine::{OptProximity, TieBreakPolicy};
use crate::error::{Error, Result};
use crate::metric::{Committee, MetricInstance};

/// Picks from every part the member with the smallest summed distance to
/// `opt`. Any partition into `k` parts of `n/k` agents gives a committee
/// within twice the optimal cost.
pub fn partition_to_committee(
    inst: &MetricInstance,
    opt: &Committee,
    parts: &[Vec<usize>],
) -> Result<Committee> {
    let (n, k) = (inst.n(), inst.k());
    if !inst.divides() {
        return Err(Error::Indivisible { n, k });
    }
    if parts.len() != k {
        return Err(Error::BadPartition(format!(
            "expected {k} parts, got {}",
            parts.len()
        )));
    }
    let mut seen = vec![false; n];
    for (p, part) in parts.iter().enumerate() {
        if part.len() != n / k {
            return Err(Error::BadPartition(format!(
                "part {p} has {} agents, expected {}",
                part.len(),
                n / k
            )));
        }
        for &v in part {
            if v >= n {
                return Err(Error::AgentOutOfRange { index: v, n });
            }
            if std::mem::replace(&mut seen[v], true) {
                return Err(Error::BadPartition(format!("agent {v} appears twice")));
            }
        }
    }
    let prox = OptProximity::new(inst, opt, TieBreakPolicy::default());
    let members = parts
        .iter()
        .map(|part| prox.pick_rep(part.iter().copied()))
        .collect();
    Committee::new(inst, members)
}
