use crate::audit::{Axiom, AxiomVerdict, NorpReading, Witness};
use crate::budget::Budget;
use crate::error::Result;
use crate::metric::{fairness_ratio, Committee, MetricInstance};

/// Exact NORP audit over all `2^k - 1` representative subsets.
///
/// A subset `S` of `ell` representatives needs more than `(ell - 1) n / k`
/// agents within `D(S)` of its members (of any committee member under
/// [`NorpReading::Lax`]). Its factor is the smallest radius that achieves
/// the count divided by `D(S)`. Among equally bad subsets the witness is the
/// largest, then the lexicographically first.
pub fn audit_norp(
    inst: &MetricInstance,
    committee: &Committee,
    reading: NorpReading,
    budget: &mut Budget,
) -> Result<AxiomVerdict> {
    let (n, k) = (inst.n(), committee.len());
    let subsets = 1u64.checked_shl(k as u32).unwrap_or(u64::MAX);
    budget.charge(subsets)?;

    let lax_reach: Vec<f64> = match reading {
        NorpReading::Lax => (0..n).map(|v| inst.nearest_in(v, committee)).collect(),
        NorpReading::Strict => Vec::new(),
    };

    let mut best = 0.0f64;
    let mut witness: Option<Witness> = None;
    // Larger subsets first, each size in lexicographic order.
    for ell in (1..=k).rev() {
        let need = inst.quota_exceeding_count(ell);
        for picks in combinations(k, ell) {
            let set: Vec<usize> = picks.iter().map(|&i| committee[i]).collect();
            let diameter = inst.diameter(&set)?;
            let mut reach: Vec<f64> = match reading {
                NorpReading::Strict => (0..n).map(|v| inst.nearest_in(v, &set)).collect(),
                NorpReading::Lax => lax_reach.clone(),
            };
            let (_, &mut needed, _) = reach.select_nth_unstable_by(need - 1, f64::total_cmp);
            let ratio = fairness_ratio(needed, diameter);
            if ratio > best {
                best = ratio;
                let achieved = reach.iter().filter(|&&d| d <= diameter).count();
                witness = Some(Witness {
                    set,
                    ell,
                    threshold: diameter,
                    achieved: achieved as f64,
                    required_count: Some(required(inst, ell)),
                });
            }
        }
    }
    let witness = witness.filter(|_| best > 1.0);
    Ok(AxiomVerdict::exact(Axiom::Norp, best, witness))
}

/// NORP restricted to co-located representatives: a zero-class holding
/// `ell` representatives must contain more than `(ell - 1) n / k` agents.
/// The factor is 0 or infinite.
pub fn audit_point_norp(inst: &MetricInstance, committee: &Committee) -> Result<AxiomVerdict> {
    let mut witness: Option<Witness> = None;
    for class in inst.zero_classes() {
        let reps: Vec<usize> = class
            .iter()
            .copied()
            .filter(|v| committee.contains(v))
            .collect();
        let ell = reps.len();
        if ell == 0 || inst.exceeds_quota(class.len(), ell) {
            continue;
        }
        if witness.as_ref().is_none_or(|w| ell > w.ell) {
            witness = Some(Witness {
                set: reps,
                ell,
                threshold: 0.0,
                achieved: class.len() as f64,
                required_count: Some(required(inst, ell)),
            });
        }
    }
    let alpha = if witness.is_some() {
        f64::INFINITY
    } else {
        0.0
    };
    Ok(AxiomVerdict::exact(Axiom::PointNorp, alpha, witness))
}

fn required(inst: &MetricInstance, ell: usize) -> f64 {
    (ell - 1) as f64 * inst.quota()
}

/// All `m`-subsets of `0..k` in lexicographic order.
fn combinations(k: usize, m: usize) -> impl Iterator<Item = Vec<usize>> {
    use itertools::Itertools;
    (0..k).combinations(m)
}
