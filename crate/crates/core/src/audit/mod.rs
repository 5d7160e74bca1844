//! Exact fairness audits of a committee.
//!
//! Every verdict carries the smallest factor `alpha` for which the committee
//! satisfies the alpha-relaxed axiom (`measured_alpha`) and, when that factor
//! exceeds 1, a witness that reproduces the violation. Ratios use the
//! conventions `0/0 = 0` and `x/0 = inf` for `x > 0`.

mod mjr;
mod norp;
mod oracle;
mod prf;

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::budget::{Budget, DEFAULT_BUDGET};
use crate::error::{Error, Result};
use crate::metric::{cost_ratio, Committee, MetricInstance};

pub use mjr::audit_mjr;
pub use norp::{audit_norp, audit_point_norp};
pub use oracle::{oracle_best_committee, DEFAULT_ORACLE_BUDGET};
pub use prf::{audit_prf, audit_prf_sampled};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Axiom {
    Prf,
    Mjr,
    Norp,
    PointNorp,
}

impl Axiom {
    pub const ALL: [Axiom; 4] = [Axiom::Prf, Axiom::Mjr, Axiom::Norp, Axiom::PointNorp];

    pub fn name(self) -> &'static str {
        match self {
            Axiom::Prf => "prf",
            Axiom::Mjr => "mjr",
            Axiom::Norp => "norp",
            Axiom::PointNorp => "point-norp",
        }
    }

    /// Parses a comma-separated list such as `prf,norp`; `all` selects every
    /// axiom.
    pub fn parse_list(list: &str) -> Result<Vec<Axiom>> {
        let mut axioms = Vec::new();
        for item in list.split(',').map(str::trim).filter(|s| !s.is_empty()) {
            if item == "all" {
                axioms.extend(Axiom::ALL);
            } else {
                axioms.push(item.parse()?);
            }
        }
        axioms.sort_unstable();
        axioms.dedup();
        Ok(axioms)
    }
}

impl fmt::Display for Axiom {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Axiom {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Axiom::ALL
            .into_iter()
            .find(|a| a.name() == s)
            .ok_or_else(|| Error::Format(format!("unknown axiom '{s}'")))
    }
}

/// A set that violates an axiom, with the quantities the definition compares.
///
/// - PRF: `set` is a coalition, `threshold` its diameter and `achieved` the
///   `ell`-th smallest distance from a representative to the coalition.
/// - mJR: `set` is a coalition, `threshold` its radius and `achieved` the
///   distance to its nearest representative.
/// - NORP and point-NORP: `set` holds `ell` representatives, `threshold` is
///   their diameter, `achieved` counts the agents within it, and
///   `required_count` is the count that must be exceeded.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Witness {
    pub set: Vec<usize>,
    pub ell: usize,
    pub threshold: f64,
    pub achieved: f64,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub required_count: Option<f64>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct AxiomVerdict {
    pub axiom: Axiom,
    pub holds_exact: bool,
    #[serde(with = "crate::float")]
    pub measured_alpha: f64,
    pub witness: Option<Witness>,
    /// False for sampled audits, whose `measured_alpha` is only a lower
    /// bound.
    pub exhaustive: bool,
}

impl AxiomVerdict {
    pub(crate) fn exact(axiom: Axiom, measured_alpha: f64, witness: Option<Witness>) -> Self {
        let holds_exact = measured_alpha <= 1.0;
        debug_assert_eq!(holds_exact, witness.is_none());
        AxiomVerdict {
            axiom,
            holds_exact,
            measured_alpha,
            witness,
            exhaustive: true,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct AuditReport {
    pub verdicts: Vec<AxiomVerdict>,
    pub cost: f64,
    pub opt_cost: f64,
    #[serde(with = "crate::float")]
    pub ratio: f64,
}

impl AuditReport {
    pub fn all_hold(&self) -> bool {
        self.verdicts.iter().all(|v| v.holds_exact)
    }

    pub fn verdict(&self, axiom: Axiom) -> Option<&AxiomVerdict> {
        self.verdicts.iter().find(|v| v.axiom == axiom)
    }
}

/// Which agents count towards a NORP requirement.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum NorpReading {
    /// Agents within the diameter of a member of the representative subset.
    #[default]
    Strict,
    /// Agents within the diameter of any committee member.
    Lax,
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct AuditOptions {
    /// Node budget for the PRF clique searches; NORP charges one node per
    /// representative subset.
    pub budget: u64,
    pub norp_reading: NorpReading,
    /// Replace the exact PRF audit by this many random coalitions per `ell`.
    pub prf_samples: Option<usize>,
    pub seed: u64,
}

impl Default for AuditOptions {
    fn default() -> Self {
        AuditOptions {
            budget: DEFAULT_BUDGET,
            norp_reading: NorpReading::Strict,
            prf_samples: None,
            seed: 0,
        }
    }
}

/// Runs the requested audits in order and adds cost information.
pub fn audit_all(
    inst: &MetricInstance,
    committee: &Committee,
    axioms: &[Axiom],
    options: &AuditOptions,
) -> Result<AuditReport> {
    check_committee(inst, committee)?;
    let mut verdicts = Vec::with_capacity(axioms.len());
    for &axiom in axioms {
        let mut budget = Budget::new(options.budget);
        verdicts.push(match axiom {
            Axiom::Prf => match options.prf_samples {
                Some(samples) => audit_prf_sampled(inst, committee, samples, options.seed)?,
                None => audit_prf(inst, committee, &mut budget)?,
            },
            Axiom::Mjr => audit_mjr(inst, committee)?,
            Axiom::Norp => audit_norp(inst, committee, options.norp_reading, &mut budget)?,
            Axiom::PointNorp => audit_point_norp(inst, committee)?,
        });
    }
    let cost = inst.cost(committee);
    let (_, opt_cost) = inst.opt_committee();
    Ok(AuditReport {
        verdicts,
        cost,
        opt_cost,
        ratio: cost_ratio(cost, opt_cost),
    })
}

/// Re-evaluates a verdict's witness directly from the axiom's definition.
/// True when it is a genuine violation.
pub fn replay_witness(
    inst: &MetricInstance,
    committee: &Committee,
    verdict: &AxiomVerdict,
    reading: NorpReading,
) -> Result<bool> {
    let Some(w) = &verdict.witness else {
        return Ok(false);
    };
    let set = &w.set;
    if set.is_empty() || set.iter().any(|&v| v >= inst.n()) {
        return Ok(false);
    }
    Ok(match verdict.axiom {
        Axiom::Prf => {
            if w.ell == 0 || w.ell > inst.k() || set.len() < inst.coalition_size(w.ell) {
                return Ok(false);
            }
            let mut dists: Vec<f64> = committee.iter().map(|&x| inst.nearest_in(x, set)).collect();
            dists.sort_by(f64::total_cmp);
            dists[w.ell - 1] > inst.diameter(set)?
        }
        Axiom::Mjr => {
            if set.len() < inst.coalition_size(1) {
                return Ok(false);
            }
            let nearest = committee
                .iter()
                .map(|&x| inst.nearest_in(x, set))
                .fold(f64::INFINITY, f64::min);
            nearest > inst.radius(set)?.0
        }
        Axiom::Norp | Axiom::PointNorp => {
            if set.len() != w.ell || !set.iter().all(|v| committee.contains(v)) {
                return Ok(false);
            }
            let diameter = inst.diameter(set)?;
            if verdict.axiom == Axiom::PointNorp && diameter != 0.0 {
                return Ok(false);
            }
            let anchors: &[usize] = match reading {
                NorpReading::Strict => set,
                NorpReading::Lax => committee,
            };
            let count = (0..inst.n())
                .filter(|&v| inst.nearest_in(v, anchors) <= diameter)
                .count();
            !inst.exceeds_quota(count, w.ell)
        }
    })
}

fn check_committee(inst: &MetricInstance, committee: &Committee) -> Result<()> {
    if committee.len() != inst.k() {
        return Err(Error::InvalidCommittee(format!(
            "expected {} members, got {}",
            inst.k(),
            committee.len()
        )));
    }
    if let Some(&index) = committee.iter().find(|&&v| v >= inst.n()) {
        return Err(Error::AgentOutOfRange { index, n: inst.n() });
    }
    Ok(())
}
