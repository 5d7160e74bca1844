//! Instances, committees, and the distance primitives everything else is
//! built on.
//!
//! A [`MetricInstance`] stores the full `n x n` distance matrix. Zero
//! distances between distinct agents are allowed, so agents may share a
//! location. All argmin/argmax ties break towards the lower agent index.

use std::cmp::Ordering;
use std::ops::Deref;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Relative slack allowed when checking the triangle inequality.
pub const TRIANGLE_TOLERANCE: f64 = 1e-9;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize, Default)]
#[serde(rename_all = "lowercase")]
pub enum Norm {
    #[default]
    L2,
    L1,
    Linf,
}

impl Norm {
    pub fn distance(self, a: &[f64], b: &[f64]) -> f64 {
        let diffs = a.iter().zip(b).map(|(x, y)| (x - y).abs());
        match self {
            Norm::L2 => diffs.map(|d| d * d).sum::<f64>().sqrt(),
            Norm::L1 => diffs.sum(),
            Norm::Linf => diffs.fold(0.0, f64::max),
        }
    }
}

/// `n` agents, a validated pseudometric over them, and a committee size `k`.
#[derive(Debug, Clone, PartialEq)]
pub struct MetricInstance {
    n: usize,
    k: usize,
    dist: Vec<f64>,
}

impl MetricInstance {
    /// Checks a raw matrix and committee size and builds an instance from them.
    pub fn validate(matrix: Vec<Vec<f64>>, k: usize) -> Result<Self> {
        let n = matrix.len();
        if n == 0 {
            return Err(Error::EmptyMatrix);
        }
        let mut dist = Vec::with_capacity(n * n);
        for (row, entries) in matrix.iter().enumerate() {
            if entries.len() != n {
                return Err(Error::NotSquare {
                    row,
                    len: entries.len(),
                    n,
                });
            }
            dist.extend_from_slice(entries);
        }
        Self::from_flat(n, k, dist)
    }

    /// Same checks as [`MetricInstance::validate`] on a row-major buffer.
    pub fn from_flat(n: usize, k: usize, dist: Vec<f64>) -> Result<Self> {
        if n == 0 {
            return Err(Error::EmptyMatrix);
        }
        if dist.len() != n * n {
            return Err(Error::Format(format!(
                "expected {} matrix entries, got {}",
                n * n,
                dist.len()
            )));
        }
        for i in 0..n {
            for j in 0..n {
                if !dist[i * n + j].is_finite() {
                    return Err(Error::NonFinite { i, j });
                }
            }
        }
        for i in 0..n {
            let value = dist[i * n + i];
            if value != 0.0 {
                return Err(Error::NonzeroDiagonal { i, value });
            }
        }
        for i in 0..n {
            for j in (i + 1)..n {
                let (dij, dji) = (dist[i * n + j], dist[j * n + i]);
                if dij != dji {
                    return Err(Error::AsymmetricMatrix { i, j, dij, dji });
                }
                if dij < 0.0 {
                    return Err(Error::NegativeDistance { i, j, value: dij });
                }
            }
        }
        let max = dist.iter().copied().fold(0.0, f64::max);
        let tau = TRIANGLE_TOLERANCE * max;
        for i in 0..n {
            for j in (i + 1)..n {
                let direct = dist[i * n + j];
                for via in 0..n {
                    let detour = dist[i * n + via] + dist[via * n + j];
                    if direct > detour + tau {
                        return Err(Error::TriangleViolation {
                            i,
                            via,
                            j,
                            direct,
                            detour,
                        });
                    }
                }
            }
        }
        if k < 1 || k > n {
            return Err(Error::BadK { k, n });
        }
        Ok(MetricInstance { n, k, dist })
    }

    /// Converts points to a distance matrix under `norm` and validates it.
    pub fn from_points(points: &[Vec<f64>], k: usize, norm: Norm) -> Result<Self> {
        let n = points.len();
        if n == 0 {
            return Err(Error::EmptyMatrix);
        }
        let dim = points[0].len();
        for (i, p) in points.iter().enumerate() {
            if p.len() != dim {
                return Err(Error::Format(format!(
                    "point {i} has dimension {}, expected {dim}",
                    p.len()
                )));
            }
            if let Some(j) = p.iter().position(|c| !c.is_finite()) {
                return Err(Error::NonFinite { i, j });
            }
        }
        let mut dist = vec![0.0; n * n];
        for i in 0..n {
            for j in (i + 1)..n {
                let d = norm.distance(&points[i], &points[j]);
                dist[i * n + j] = d;
                dist[j * n + i] = d;
            }
        }
        Self::from_flat(n, k, dist)
    }

    /// Builds an instance without re-running validation. The caller
    /// guarantees `dist` is derived from an already validated metric.
    pub(crate) fn from_trusted(n: usize, k: usize, dist: Vec<f64>) -> Self {
        debug_assert_eq!(dist.len(), n * n);
        debug_assert!(k >= 1 && k <= n);
        MetricInstance { n, k, dist }
    }

    /// The same metric with a different committee size.
    pub fn with_k(&self, k: usize) -> Result<Self> {
        if k < 1 || k > self.n {
            return Err(Error::BadK { k, n: self.n });
        }
        Ok(MetricInstance {
            n: self.n,
            k,
            dist: self.dist.clone(),
        })
    }

    #[inline]
    pub fn n(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn k(&self) -> usize {
        self.k
    }

    #[inline]
    pub fn d(&self, i: usize, j: usize) -> f64 {
        self.dist[i * self.n + j]
    }

    #[inline]
    pub fn row(&self, i: usize) -> &[f64] {
        &self.dist[i * self.n..(i + 1) * self.n]
    }

    pub fn to_matrix(&self) -> Vec<Vec<f64>> {
        (0..self.n).map(|i| self.row(i).to_vec()).collect()
    }

    pub fn max_distance(&self) -> f64 {
        self.dist.iter().copied().fold(0.0, f64::max)
    }

    pub fn divides(&self) -> bool {
        self.n.is_multiple_of(self.k)
    }

    /// Smallest coalition size that deserves `ell` representatives,
    /// i.e. `ceil(ell * n / k)`.
    pub fn coalition_size(&self, ell: usize) -> usize {
        (ell * self.n).div_ceil(self.k)
    }

    /// Whether `count > (ell - 1) * n / k`, evaluated in integers.
    pub fn exceeds_quota(&self, count: usize, ell: usize) -> bool {
        debug_assert!(ell >= 1);
        count * self.k > (ell - 1) * self.n
    }

    /// Fewest agents that satisfy [`MetricInstance::exceeds_quota`] for `ell`.
    pub fn quota_exceeding_count(&self, ell: usize) -> usize {
        (ell - 1) * self.n / self.k + 1
    }

    pub fn quota(&self) -> f64 {
        self.n as f64 / self.k as f64
    }

    /// Sum of distances from every agent to `v`.
    pub fn centrality(&self, v: usize) -> f64 {
        self.row(v).iter().sum()
    }

    pub fn centralities(&self) -> Vec<f64> {
        (0..self.n).map(|v| self.centrality(v)).collect()
    }

    /// Total distance from all agents to all members of `committee`.
    pub fn cost(&self, committee: &Committee) -> f64 {
        committee.iter().map(|&x| self.centrality(x)).sum()
    }

    /// The `k` agents of smallest centrality (ties by index) and their cost.
    pub fn opt_committee(&self) -> (Committee, f64) {
        let central = self.centralities();
        let mut order: Vec<usize> = (0..self.n).collect();
        order.sort_by(|&a, &b| central[a].total_cmp(&central[b]).then(a.cmp(&b)));
        let committee = Committee::from_sorted_unchecked({
            let mut m = order[..self.k].to_vec();
            m.sort_unstable();
            m
        });
        let cost = self.cost(&committee);
        (committee, cost)
    }

    /// Sum of distances from `v` to the members of `opt`.
    pub fn distance_to_set(&self, v: usize, set: &[usize]) -> f64 {
        set.iter().map(|&o| self.d(v, o)).sum()
    }

    /// Distance from `v` to the nearest member of `set`.
    pub fn nearest_in(&self, v: usize, set: &[usize]) -> f64 {
        set.iter()
            .map(|&o| self.d(v, o))
            .fold(f64::INFINITY, f64::min)
    }

    /// Largest pairwise distance within `set`.
    pub fn diameter(&self, set: &[usize]) -> Result<f64> {
        if set.is_empty() {
            return Err(Error::EmptySet);
        }
        let mut best = 0.0f64;
        for (a, &i) in set.iter().enumerate() {
            for &j in &set[a + 1..] {
                best = best.max(self.d(i, j));
            }
        }
        Ok(best)
    }

    /// Smallest ball around any agent of the instance that contains `set`,
    /// with the lowest-index center achieving it.
    pub fn radius(&self, set: &[usize]) -> Result<(f64, usize)> {
        if set.is_empty() {
            return Err(Error::EmptySet);
        }
        let mut best = (f64::INFINITY, 0);
        for c in 0..self.n {
            let reach = set.iter().map(|&v| self.d(c, v)).fold(0.0, f64::max);
            if reach < best.0 {
                best = (reach, c);
            }
        }
        Ok(best)
    }

    /// Members of `domain` within distance `r` of `center`
    /// (`<= r` when closed, `< r` when open).
    pub fn ball(&self, center: usize, r: f64, domain: &[usize], open: bool) -> AgentSet {
        let row = self.row(center);
        AgentSet::from_sorted_unchecked(
            domain
                .iter()
                .copied()
                .filter(|&v| if open { row[v] < r } else { row[v] <= r })
                .collect(),
        )
    }

    /// Partition of the agents into groups at mutual distance zero, ordered
    /// by smallest member.
    pub fn zero_classes(&self) -> Vec<Vec<usize>> {
        let mut class_of = vec![usize::MAX; self.n];
        let mut classes = Vec::new();
        for i in 0..self.n {
            if class_of[i] != usize::MAX {
                continue;
            }
            let id = classes.len();
            let members: Vec<usize> = (i..self.n)
                .filter(|&j| class_of[j] == usize::MAX && self.d(i, j) == 0.0)
                .collect();
            for &j in &members {
                class_of[j] = id;
            }
            classes.push(members);
        }
        classes
    }

    pub fn all_agents(&self) -> AgentSet {
        AgentSet::from_sorted_unchecked((0..self.n).collect())
    }
}

/// Cost ratio with `0/0 = 1` and `x/0 = inf` for `x > 0`.
pub fn cost_ratio(cost: f64, opt_cost: f64) -> f64 {
    if opt_cost > 0.0 {
        cost / opt_cost
    } else if cost > 0.0 {
        f64::INFINITY
    } else {
        1.0
    }
}

/// Ratio of an achieved distance to an allowed one with `0/0 = 0` and
/// `x/0 = inf` for `x > 0`.
pub(crate) fn fairness_ratio(achieved: f64, allowed: f64) -> f64 {
    if allowed > 0.0 {
        achieved / allowed
    } else if achieved > 0.0 {
        f64::INFINITY
    } else {
        0.0
    }
}

pub(crate) fn cmp_f64(a: f64, b: f64) -> Ordering {
    a.total_cmp(&b)
}

/// A sorted set of agent indices.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default, Serialize, Deserialize)]
#[serde(transparent)]
pub struct AgentSet(Vec<usize>);

impl AgentSet {
    pub fn new(mut members: Vec<usize>) -> Self {
        members.sort_unstable();
        members.dedup();
        AgentSet(members)
    }

    pub(crate) fn from_sorted_unchecked(members: Vec<usize>) -> Self {
        debug_assert!(members.windows(2).all(|w| w[0] < w[1]));
        AgentSet(members)
    }

    pub fn contains(&self, v: usize) -> bool {
        self.0.binary_search(&v).is_ok()
    }

    pub fn into_vec(self) -> Vec<usize> {
        self.0
    }
}

impl Deref for AgentSet {
    type Target = [usize];

    fn deref(&self) -> &[usize] {
        &self.0
    }
}

impl FromIterator<usize> for AgentSet {
    fn from_iter<I: IntoIterator<Item = usize>>(iter: I) -> Self {
        AgentSet::new(iter.into_iter().collect())
    }
}

/// `k` distinct agents, stored in ascending order.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Committee {
    members: Vec<usize>,
}

impl Committee {
    /// Validates `members` against `inst`: exactly `k` distinct, in-range
    /// indices. Order does not matter.
    pub fn new(inst: &MetricInstance, members: Vec<usize>) -> Result<Self> {
        let committee = Committee::from_indices(inst.n(), members)?;
        if committee.len() != inst.k() {
            return Err(Error::InvalidCommittee(format!(
                "expected {} members, got {}",
                inst.k(),
                committee.len()
            )));
        }
        Ok(committee)
    }

    /// Validates indices against `n` only; the size is not checked.
    pub fn from_indices(n: usize, mut members: Vec<usize>) -> Result<Self> {
        if let Some(&index) = members.iter().find(|&&v| v >= n) {
            return Err(Error::AgentOutOfRange { index, n });
        }
        members.sort_unstable();
        let before = members.len();
        members.dedup();
        if members.len() != before {
            return Err(Error::InvalidCommittee("duplicate members".into()));
        }
        if members.is_empty() {
            return Err(Error::InvalidCommittee("no members".into()));
        }
        Ok(Committee { members })
    }

    pub(crate) fn from_sorted_unchecked(members: Vec<usize>) -> Self {
        debug_assert!(members.windows(2).all(|w| w[0] < w[1]));
        Committee { members }
    }

    pub fn members(&self) -> &[usize] {
        &self.members
    }

    pub fn into_members(self) -> Vec<usize> {
        self.members
    }
}

impl Deref for Committee {
    type Target = [usize];

    fn deref(&self) -> &[usize] {
        &self.members
    }
}
