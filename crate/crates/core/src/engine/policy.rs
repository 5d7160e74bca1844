use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::Error;
use crate::metric::{cmp_f64, MetricInstance};

/// Which agent wins when several ball centers trigger together.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum CenterRule {
    #[default]
    LowestIndex,
}

/// Order in which equidistant agents are covered, and the order used to pick
/// among equal-diameter sets.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum CoveringRule {
    #[default]
    AscendingIndex,
    /// Agents with the smaller summed distance to OPT go first, then index.
    DescendingDistToOpt,
}

/// How ties among agents with equal summed distance to OPT are broken when a
/// representative is picked.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum RepresentativeRule {
    LowestIndex,
    /// Prefer the agent nearest to any single OPT member, then index.
    #[default]
    ClosestToOptThenIndex,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize, Deserialize)]
pub struct TieBreakPolicy {
    pub center_rule: CenterRule,
    pub covering_rule: CoveringRule,
    pub representative_rule: RepresentativeRule,
    /// Co-location amendments for the minimum-diameter and all-centers
    /// algorithms: the chosen set absorbs the uncovered agents sharing the
    /// representative's location before anything else. Needed for
    /// point-NORP, and therefore for the duplication reduction.
    pub colocated_first: bool,
}

impl TieBreakPolicy {
    pub fn with_colocated_first(mut self, on: bool) -> Self {
        self.colocated_first = on;
        self
    }
}

macro_rules! kebab_enum {
    ($ty:ident { $($variant:ident => $name:literal),+ $(,)? }) => {
        impl $ty {
            pub fn name(self) -> &'static str {
                match self {
                    $($ty::$variant => $name),+
                }
            }
        }

        impl fmt::Display for $ty {
            fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
                f.write_str(self.name())
            }
        }

        impl FromStr for $ty {
            type Err = Error;

            fn from_str(s: &str) -> Result<Self, Error> {
                match s {
                    $($name => Ok($ty::$variant),)+
                    other => Err(Error::Format(format!(
                        concat!("unknown ", stringify!($ty), " '{}'"),
                        other
                    ))),
                }
            }
        }
    };
}

kebab_enum!(CenterRule { LowestIndex => "lowest-index" });
kebab_enum!(CoveringRule {
    AscendingIndex => "ascending-index",
    DescendingDistToOpt => "descending-dist-to-opt",
});
kebab_enum!(RepresentativeRule {
    LowestIndex => "lowest-index",
    ClosestToOptThenIndex => "closest-to-opt-then-index",
});

/// Per-agent proximity to a reference committee, used for every
/// "closest to OPT" choice.
pub(crate) struct OptProximity {
    sum: Vec<f64>,
    nearest: Vec<f64>,
    policy: TieBreakPolicy,
}

impl OptProximity {
    pub fn new(inst: &MetricInstance, opt: &[usize], policy: TieBreakPolicy) -> Self {
        let n = inst.n();
        OptProximity {
            sum: (0..n).map(|v| inst.distance_to_set(v, opt)).collect(),
            nearest: (0..n).map(|v| inst.nearest_in(v, opt)).collect(),
            policy,
        }
    }

    /// `Less` when `a` is the better representative.
    pub fn rep_cmp(&self, a: usize, b: usize) -> Ordering {
        let primary = cmp_f64(self.sum[a], self.sum[b]);
        match self.policy.representative_rule {
            RepresentativeRule::LowestIndex => primary.then(a.cmp(&b)),
            RepresentativeRule::ClosestToOptThenIndex => primary
                .then(cmp_f64(self.nearest[a], self.nearest[b]))
                .then(a.cmp(&b)),
        }
    }

    /// Best representative among `candidates` (non-empty).
    pub fn pick_rep(&self, candidates: impl IntoIterator<Item = usize>) -> usize {
        candidates
            .into_iter()
            .min_by(|&a, &b| self.rep_cmp(a, b))
            .expect("representative candidates are non-empty")
    }

    /// Tie order among agents at equal distance from a center.
    pub fn cover_cmp(&self, a: usize, b: usize) -> Ordering {
        match self.policy.covering_rule {
            CoveringRule::AscendingIndex => a.cmp(&b),
            CoveringRule::DescendingDistToOpt => cmp_f64(self.sum[a], self.sum[b]).then(a.cmp(&b)),
        }
    }
}
