//! Deterministic instance families.
//!
//! Each figure family documents its index order, since tie-breaking depends
//! on it. Distances a family leaves unspecified are filled in by shortest
//! paths over the specified ones.

use std::f64::consts::PI;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::metric::{MetricInstance, Norm};

pub const DEFAULT_EPS: f64 = 0.1;

fn default_eps() -> f64 {
    DEFAULT_EPS
}

fn default_spacing() -> f64 {
    1.0
}

/// A named instance family together with its parameters.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(tag = "family", rename_all = "kebab-case")]
pub enum GeneratorSpec {
    Fig1TripleStar {
        k: usize,
        group_size: usize,
        #[serde(default = "default_spacing")]
        spacing: f64,
    },
    Prop1Star {
        k: usize,
    },
    SpokeClique {
        k: usize,
        m: usize,
        #[serde(default = "default_eps")]
        eps: f64,
    },
    TwoClique {
        #[serde(default = "default_eps")]
        eps: f64,
    },
    Line3 {
        n: usize,
        k: usize,
        #[serde(default = "default_eps")]
        eps: f64,
    },
    MpjrStar {
        n: usize,
        k: usize,
        #[serde(default = "default_eps")]
        eps: f64,
    },
    UniformEuclidean {
        n: usize,
        k: usize,
        dim: usize,
        #[serde(default)]
        norm: Norm,
        seed: u64,
    },
}

impl GeneratorSpec {
    pub const FAMILIES: [&'static str; 7] = [
        "fig1-triple-star",
        "prop1-star",
        "spoke-clique",
        "two-clique",
        "line3",
        "mpjr-star",
        "uniform-euclidean",
    ];

    pub fn generate(&self) -> Result<MetricInstance> {
        match *self {
            GeneratorSpec::Fig1TripleStar {
                k,
                group_size,
                spacing,
            } => fig1_triple_star(k, group_size, spacing),
            GeneratorSpec::Prop1Star { k } => prop1_star(k),
            GeneratorSpec::SpokeClique { k, m, eps } => spoke_clique(k, m, eps),
            GeneratorSpec::TwoClique { eps } => two_clique(eps),
            GeneratorSpec::Line3 { n, k, eps } => line3(n, k, eps),
            GeneratorSpec::MpjrStar { n, k, eps } => mpjr_star(n, k, eps),
            GeneratorSpec::UniformEuclidean {
                n,
                k,
                dim,
                norm,
                seed,
            } => uniform_euclidean(n, k, dim, norm, seed),
        }
    }
}

fn bad(msg: impl Into<String>) -> Error {
    Error::BadParams(msg.into())
}

fn check_eps(eps: f64, upper: f64) -> Result<()> {
    if eps.is_finite() && eps >= 0.0 && eps < upper {
        Ok(())
    } else {
        Err(bad(format!("eps must lie in [0, {upper}), got {eps}")))
    }
}

/// Shortest-path completion of a partially specified distance matrix.
/// Unspecified entries are `inf`; the result must be connected.
fn complete(n: usize, k: usize, mut dist: Vec<f64>) -> Result<MetricInstance> {
    for i in 0..n {
        dist[i * n + i] = 0.0;
    }
    for via in 0..n {
        for i in 0..n {
            let a = dist[i * n + via];
            if a.is_infinite() {
                continue;
            }
            for j in 0..n {
                let detour = a + dist[via * n + j];
                if detour < dist[i * n + j] {
                    dist[i * n + j] = detour;
                }
            }
        }
    }
    MetricInstance::from_flat(n, k, dist)
}

fn from_fn(n: usize, k: usize, d: impl Fn(usize, usize) -> f64) -> Result<MetricInstance> {
    let mut dist = vec![0.0; n * n];
    for i in 0..n {
        for j in 0..n {
            if i != j {
                dist[i * n + j] = d(i, j);
            }
        }
    }
    MetricInstance::from_flat(n, k, dist)
}

/// `n = k^2` agents: `k` at a center and `k` at each of `k - 1` leaves, with
/// leaves at distance 1 from the center and 2 from each other.
///
/// Index order: the center class is `0..k`, leaf `j` (from 1) is
/// `k*j..k*j+k`.
pub fn prop1_star(k: usize) -> Result<MetricInstance> {
    if k < 2 {
        return Err(bad("prop1-star needs k >= 2"));
    }
    let n = k * k;
    let class = |v: usize| v / k;
    let mut dist = vec![f64::INFINITY; n * n];
    for i in 0..n {
        for j in 0..n {
            if class(i) == class(j) {
                dist[i * n + j] = 0.0;
            } else if class(i) == 0 || class(j) == 0 {
                dist[i * n + j] = 1.0;
            }
        }
    }
    complete(n, k, dist)
}

/// `k` centers at pairwise distance `eps`, each owning an arm of `m - 1`
/// agents at distance 1 from it and `eps` from each other. `n = k*m`.
///
/// Index order: centers `0..k`, then arm `j` at `k + j*(m-1)..k + (j+1)*(m-1)`.
pub fn spoke_clique(k: usize, m: usize, eps: f64) -> Result<MetricInstance> {
    if k < 1 || m < 2 {
        return Err(bad("spoke-clique needs k >= 1 and m >= 2"));
    }
    check_eps(eps, 1.0)?;
    let n = k * m;
    // Owning center of every agent, and whether it is a center.
    let owner = |v: usize| if v < k { v } else { (v - k) / (m - 1) };
    let mut dist = vec![f64::INFINITY; n * n];
    for i in 0..n {
        for j in 0..n {
            let both_centers = i < k && j < k;
            let both_arm = i >= k && j >= k && owner(i) == owner(j);
            let spoke = (i < k) != (j < k) && owner(i) == owner(j);
            if both_centers || both_arm {
                dist[i * n + j] = eps;
            } else if spoke {
                dist[i * n + j] = 1.0;
            }
        }
    }
    complete(n, k, dist)
}

/// 102 agents and `k = 3`: 3 co-located middles, 34 rights at pairwise
/// `eps`, 65 lefts at pairwise `2 - 2eps`. Middles sit at 1 from the lefts
/// and `1 + eps` from the rights; lefts and rights are `2 - 2eps` apart.
///
/// Index order: middles `0..3`, rights `3..37`, lefts `37..102`.
pub fn two_clique(eps: f64) -> Result<MetricInstance> {
    if !(eps > 0.0 && eps < 1.0 / 3.0) {
        return Err(bad(format!("two-clique needs eps in (0, 1/3), got {eps}")));
    }
    #[derive(PartialEq)]
    enum Side {
        Middle,
        Right,
        Left,
    }
    let side = |v: usize| match v {
        0..=2 => Side::Middle,
        3..=36 => Side::Right,
        _ => Side::Left,
    };
    from_fn(102, 3, |i, j| match (side(i), side(j)) {
        (Side::Middle, Side::Middle) => 0.0,
        (Side::Right, Side::Right) => eps,
        (Side::Left, Side::Left) | (Side::Left, Side::Right) | (Side::Right, Side::Left) => {
            2.0 - 2.0 * eps
        }
        (Side::Middle, Side::Left) | (Side::Left, Side::Middle) => 1.0,
        (Side::Middle, Side::Right) | (Side::Right, Side::Middle) => 1.0 + eps,
    })
}

/// `n - 2` agents at 0, one at 1 and one at `1 + eps` on a line.
///
/// Index order: the co-located agents `0..n-2`, then the middle agent, then
/// the far one.
pub fn line3(n: usize, k: usize, eps: f64) -> Result<MetricInstance> {
    if n < 3 || k < 1 || k > n {
        return Err(bad("line3 needs n >= 3 and 1 <= k <= n"));
    }
    if !(eps.is_finite() && eps >= 0.0) {
        return Err(bad(format!(
            "eps must be finite and non-negative, got {eps}"
        )));
    }
    let pos = |v: usize| {
        if v < n - 2 {
            0.0
        } else if v == n - 2 {
            1.0
        } else {
            1.0 + eps
        }
    };
    from_fn(n, k, |i, j| (pos(i) - pos(j)).abs())
}

/// `k` co-located center agents and `k` groups of `group_size` co-located
/// agents on a regular polygon of radius `spacing` around them.
/// `n = k + k * group_size`.
///
/// Index order: centers `0..k`, then group `j` at
/// `k + j*group_size..k + (j+1)*group_size`.
pub fn fig1_triple_star(k: usize, group_size: usize, spacing: f64) -> Result<MetricInstance> {
    if k < 2 || group_size < 1 {
        return Err(bad("fig1-triple-star needs k >= 2 and group_size >= 1"));
    }
    if !(spacing.is_finite() && spacing > 0.0) {
        return Err(bad(format!("spacing must be positive, got {spacing}")));
    }
    let n = k + k * group_size;
    let group = |v: usize| (v >= k).then(|| (v - k) / group_size);
    from_fn(n, k, |i, j| match (group(i), group(j)) {
        (None, None) => 0.0,
        (None, Some(_)) | (Some(_), None) => spacing,
        (Some(a), Some(b)) => {
            let gap = a.abs_diff(b) as f64;
            2.0 * spacing * (PI * gap / k as f64).sin()
        }
    })
}

/// `k - 1` co-located center agents and `n - k + 1` spoke agents at
/// distance 1 from the center and `1 + eps` from each other.
///
/// Index order: centers `0..k-1`, then the spokes.
pub fn mpjr_star(n: usize, k: usize, eps: f64) -> Result<MetricInstance> {
    if k < 2 || 2 * k * k > n {
        return Err(bad("mpjr-star needs k >= 2 and 2k^2 <= n"));
    }
    check_eps(eps, 1.0)?;
    let center = |v: usize| v < k - 1;
    from_fn(n, k, |i, j| match (center(i), center(j)) {
        (true, true) => 0.0,
        (false, false) => 1.0 + eps,
        _ => 1.0,
    })
}

/// `n` points drawn uniformly from the unit cube `[0, 1)^dim`.
pub fn uniform_euclidean(
    n: usize,
    k: usize,
    dim: usize,
    norm: Norm,
    seed: u64,
) -> Result<MetricInstance> {
    if n < 1 || k < 1 || k > n || dim < 1 {
        return Err(bad("uniform-euclidean needs n, dim >= 1 and 1 <= k <= n"));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let points: Vec<Vec<f64>> = (0..n)
        .map(|_| (0..dim).map(|_| rng.gen::<f64>()).collect())
        .collect();
    MetricInstance::from_points(&points, k, norm)
}
