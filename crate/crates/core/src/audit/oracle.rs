use itertools::Itertools;

use crate::audit::{
    audit_mjr, audit_norp, audit_point_norp, prf::prf_violated, Axiom, NorpReading,
};
use crate::budget::Budget;
use crate::error::{Error, Result};
use crate::metric::{Committee, MetricInstance};

/// Default cap on the number of committees the oracle may enumerate.
pub const DEFAULT_ORACLE_BUDGET: u64 = 1_000_000;

/// Cheapest committee satisfying every axiom in `constraints` exactly, by
/// enumerating all `C(n, k)` committees in order of cost and then index.
///
/// `budget` caps the number of committees; the per-committee audits run
/// against [`crate::budget::DEFAULT_BUDGET`].
pub fn oracle_best_committee(
    inst: &MetricInstance,
    constraints: &[Axiom],
    budget: u64,
) -> Result<(Committee, f64)> {
    let (n, k) = (inst.n(), inst.k());
    if binomial(n, k).is_none_or(|c| c > budget) {
        return Err(Error::BudgetExceeded { limit: budget });
    }
    let central = inst.centralities();
    let mut all: Vec<(f64, Vec<usize>)> = (0..n)
        .combinations(k)
        .map(|c| (c.iter().map(|&x| central[x]).sum(), c))
        .collect();
    all.sort_by(|a, b| a.0.total_cmp(&b.0).then_with(|| a.1.cmp(&b.1)));

    for (_, members) in all {
        let committee = Committee::new(inst, members)?;
        if satisfies(inst, &committee, constraints)? {
            let cost = inst.cost(&committee);
            return Ok((committee, cost));
        }
    }
    Err(Error::NoFeasibleCommittee)
}

fn satisfies(inst: &MetricInstance, committee: &Committee, constraints: &[Axiom]) -> Result<bool> {
    // Cheap audits first.
    let mut ordered = constraints.to_vec();
    ordered.sort_by_key(|a| match a {
        Axiom::PointNorp => 0,
        Axiom::Mjr => 1,
        Axiom::Norp => 2,
        Axiom::Prf => 3,
    });
    for axiom in ordered {
        let mut budget = Budget::default();
        let holds = match axiom {
            Axiom::Prf => !prf_violated(inst, committee, &mut budget)?,
            Axiom::Mjr => audit_mjr(inst, committee)?.holds_exact,
            Axiom::Norp => {
                audit_norp(inst, committee, NorpReading::Strict, &mut budget)?.holds_exact
            }
            Axiom::PointNorp => audit_point_norp(inst, committee)?.holds_exact,
        };
        if !holds {
            return Ok(false);
        }
    }
    Ok(true)
}

fn binomial(n: usize, k: usize) -> Option<u64> {
    let k = k.min(n - k) as u64;
    let mut acc: u64 = 1;
    for i in 0..k {
        acc = acc.checked_mul(n as u64 - i)? / (i + 1);
    }
    Some(acc)
}
