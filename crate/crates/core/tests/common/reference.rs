//! Naive re-statements of the selection algorithms under the default
//! tie-breaking policy, used to cross-check the engine.

use metric_committee::MetricInstance;

use super::{diameter, min_diameter, opt};

pub struct Run {
    pub committee: Vec<usize>,
    pub deltas: Vec<f64>,
}

fn rep_key(inst: &MetricInstance, opt: &[usize], v: usize) -> (f64, f64, usize) {
    let sum: f64 = opt.iter().map(|&o| inst.d(v, o)).sum();
    let near = opt
        .iter()
        .map(|&o| inst.d(v, o))
        .fold(f64::INFINITY, f64::min);
    (sum, near, v)
}

fn closest_to_opt(inst: &MetricInstance, opt: &[usize], set: &[usize]) -> usize {
    *set.iter()
        .min_by(|&&a, &&b| {
            let (ka, kb) = (rep_key(inst, opt, a), rep_key(inst, opt, b));
            ka.0.total_cmp(&kb.0)
                .then(ka.1.total_cmp(&kb.1))
                .then(ka.2.cmp(&kb.2))
        })
        .unwrap()
}

fn nearest(inst: &MetricInstance, x: usize, pool: &[usize], q: usize) -> Vec<usize> {
    let mut sorted = pool.to_vec();
    sorted.sort_by(|&a, &b| {
        inst.d(x, a)
            .total_cmp(&inst.d(x, b))
            .then((a != x).cmp(&(b != x)))
            .then(a.cmp(&b))
    });
    sorted.truncate(q);
    sorted
}

fn qth(inst: &MetricInstance, x: usize, pool: &[usize], q: usize) -> f64 {
    let mut d: Vec<f64> = pool.iter().map(|&v| inst.d(x, v)).collect();
    d.sort_by(f64::total_cmp);
    d[q - 1]
}

/// `algorithm` is one of the engine ids; `alpha` is read by `alpha-scaled`.
pub fn select(inst: &MetricInstance, algorithm: &str, alpha: f64) -> Run {
    let (n, k) = (inst.n(), inst.k());
    let q = n / k;
    let (opt, _) = opt(inst);
    let o1 = *opt
        .iter()
        .min_by(|&&a, &&b| {
            let ca: f64 = (0..n).map(|v| inst.d(v, a)).sum();
            let cb: f64 = (0..n).map(|v| inst.d(v, b)).sum();
            ca.total_cmp(&cb).then(a.cmp(&b))
        })
        .unwrap();
    let mut z: Vec<usize> = (0..n).collect();
    let mut committee = Vec::new();
    let mut deltas = Vec::new();
    let mut prev = 0.0f64;
    for i in 1..=k {
        let (set, rep, delta) = match algorithm {
            "min-diam" => {
                let (s, d) = min_diameter(inst, &z, q);
                let rep = closest_to_opt(inst, &opt, &s);
                (s, rep, d)
            }
            "opt-guided" => {
                let s = closest_to_opt(inst, &opt, &z);
                let delta = qth(inst, s, &z, q).max(prev);
                (nearest(inst, s, &z, q), s, delta)
            }
            _ => {
                let special = (algorithm == "alpha-scaled").then(|| {
                    *z.iter()
                        .min_by(|&&a, &&b| inst.d(a, o1).total_cmp(&inst.d(b, o1)).then(a.cmp(&b)))
                        .unwrap()
                });
                let centers: Vec<usize> = if algorithm == "all-centers" {
                    (0..n).collect()
                } else {
                    z.clone()
                };
                let mut best = (f64::INFINITY, usize::MAX);
                for &x in &centers {
                    let mut t = qth(inst, x, &z, q);
                    if Some(x) == special {
                        t /= alpha;
                    }
                    let t = t.max(prev);
                    if t < best.0 {
                        best = (t, x);
                    }
                }
                let (delta, x) = best;
                let s = nearest(inst, x, &z, q);
                let rep = if algorithm == "all-centers" {
                    closest_to_opt(inst, &opt, &s)
                } else if i < k {
                    x
                } else if algorithm == "alpha-scaled" {
                    *s.iter()
                        .min_by(|&&a, &&b| inst.d(a, o1).total_cmp(&inst.d(b, o1)).then(a.cmp(&b)))
                        .unwrap()
                } else {
                    closest_to_opt(inst, &opt, &s)
                };
                (s, rep, delta)
            }
        };
        debug_assert!(set.contains(&rep) && diameter(inst, &set).is_finite());
        z.retain(|v| !set.contains(v));
        committee.push(rep);
        deltas.push(delta);
        prev = delta;
    }
    committee.sort_unstable();
    Run { committee, deltas }
}
