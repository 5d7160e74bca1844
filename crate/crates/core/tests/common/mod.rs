//! Brute-force reference implementations, written straight from the
//! definitions and sharing no code with the library beyond distance lookup.

#![allow(dead_code)]

pub mod golden;
pub mod reference;

use metric_committee::{MetricInstance, Norm};

pub fn inf_ratio(num: f64, den: f64) -> f64 {
    if den > 0.0 {
        num / den
    } else if num > 0.0 {
        f64::INFINITY
    } else {
        0.0
    }
}

/// All subsets of `0..n` of size `m`, in lexicographic order.
pub fn subsets_of_size(items: &[usize], m: usize) -> Vec<Vec<usize>> {
    fn rec(
        items: &[usize],
        m: usize,
        start: usize,
        cur: &mut Vec<usize>,
        out: &mut Vec<Vec<usize>>,
    ) {
        if cur.len() == m {
            out.push(cur.clone());
            return;
        }
        for i in start..items.len() {
            if items.len() - i < m - cur.len() {
                break;
            }
            cur.push(items[i]);
            rec(items, m, i + 1, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(items, m, 0, &mut Vec::new(), &mut out);
    out
}

pub fn all_subsets(n: usize) -> impl Iterator<Item = Vec<usize>> {
    (1u32..(1 << n)).map(move |mask| (0..n).filter(|&i| mask & (1 << i) != 0).collect())
}

pub fn quota_ceil(inst: &MetricInstance, ell: usize) -> usize {
    (ell * inst.n()).div_ceil(inst.k())
}

pub fn cost(inst: &MetricInstance, x: &[usize]) -> f64 {
    let mut total = 0.0;
    for v in 0..inst.n() {
        for &m in x {
            total += inst.d(v, m);
        }
    }
    total
}

pub fn diameter(inst: &MetricInstance, s: &[usize]) -> f64 {
    let mut d = 0.0f64;
    for &a in s {
        for &b in s {
            d = d.max(inst.d(a, b));
        }
    }
    d
}

pub fn radius(inst: &MetricInstance, s: &[usize]) -> (f64, usize) {
    let mut best = (f64::INFINITY, usize::MAX);
    for c in 0..inst.n() {
        let r = s.iter().map(|&v| inst.d(c, v)).fold(0.0, f64::max);
        if r < best.0 {
            best = (r, c);
        }
    }
    best
}

fn dist_to_set(inst: &MetricInstance, x: usize, s: &[usize]) -> f64 {
    s.iter()
        .map(|&v| inst.d(x, v))
        .fold(f64::INFINITY, f64::min)
}

/// Minimum-cost committee over all `C(n, k)` committees, earliest in
/// lexicographic order on ties.
pub fn opt(inst: &MetricInstance) -> (Vec<usize>, f64) {
    let all: Vec<usize> = (0..inst.n()).collect();
    let mut best: Option<(Vec<usize>, f64)> = None;
    for x in subsets_of_size(&all, inst.k()) {
        let c = cost(inst, &x);
        if best.as_ref().is_none_or(|(_, b)| c < *b) {
            best = Some((x, c));
        }
    }
    best.unwrap()
}

/// PRF factor over every coalition of size at least `ceil(ell n / k)`.
pub fn prf_alpha(inst: &MetricInstance, x: &[usize]) -> f64 {
    let mut best = 0.0f64;
    for s in all_subsets(inst.n()) {
        let d = diameter(inst, &s);
        let mut reach: Vec<f64> = x.iter().map(|&m| dist_to_set(inst, m, &s)).collect();
        reach.sort_by(f64::total_cmp);
        for ell in 1..=inst.k() {
            if s.len() >= quota_ceil(inst, ell) {
                best = best.max(inf_ratio(reach[ell - 1], d));
            }
        }
    }
    best
}

/// PRF factor over coalitions of size exactly `ceil(ell n / k)` only.
pub fn prf_alpha_exact_sizes(inst: &MetricInstance, x: &[usize]) -> f64 {
    let all: Vec<usize> = (0..inst.n()).collect();
    let mut best = 0.0f64;
    for ell in 1..=inst.k() {
        for s in subsets_of_size(&all, quota_ceil(inst, ell)) {
            let mut reach: Vec<f64> = x.iter().map(|&m| dist_to_set(inst, m, &s)).collect();
            reach.sort_by(f64::total_cmp);
            best = best.max(inf_ratio(reach[ell - 1], diameter(inst, &s)));
        }
    }
    best
}

/// mJR factor over every coalition of at least `ceil(n / k)` agents.
pub fn mjr_alpha(inst: &MetricInstance, x: &[usize]) -> f64 {
    let q = quota_ceil(inst, 1);
    let mut best = 0.0f64;
    for s in all_subsets(inst.n()).filter(|s| s.len() >= q) {
        let nearest = x
            .iter()
            .map(|&m| dist_to_set(inst, m, &s))
            .fold(f64::INFINITY, f64::min);
        best = best.max(inf_ratio(nearest, radius(inst, &s).0));
    }
    best
}

/// NORP factor: for each representative subset, the smallest radius at
/// which more than `(ell - 1) n / k` agents are covered, over its diameter.
pub fn norp_alpha(inst: &MetricInstance, x: &[usize], lax: bool) -> f64 {
    let (n, k) = (inst.n(), inst.k());
    let mut radii: Vec<f64> = (0..n)
        .flat_map(|i| (0..n).map(move |j| (i, j)))
        .map(|(i, j)| inst.d(i, j))
        .collect();
    radii.sort_by(f64::total_cmp);
    radii.dedup();
    let mut best = 0.0f64;
    for picks in all_subsets(x.len()) {
        let s: Vec<usize> = picks.iter().map(|&i| x[i]).collect();
        let ell = s.len();
        let anchors: &[usize] = if lax { x } else { &s };
        let covered = |t: f64| {
            (0..n)
                .filter(|&v| anchors.iter().any(|&a| inst.d(v, a) <= t))
                .count()
        };
        let t = radii
            .iter()
            .copied()
            .find(|&t| covered(t) * k > (ell - 1) * n)
            .unwrap();
        best = best.max(inf_ratio(t, diameter(inst, &s)));
    }
    best
}

pub fn norp_holds(inst: &MetricInstance, x: &[usize]) -> bool {
    norp_alpha(inst, x, false) <= 1.0
}

pub fn point_norp_holds(inst: &MetricInstance, x: &[usize]) -> bool {
    let n = inst.n();
    (0..n).all(|v| {
        let class: Vec<usize> = (0..n).filter(|&w| inst.d(v, w) == 0.0).collect();
        let ell = x.iter().filter(|m| class.contains(m)).count();
        ell == 0 || class.len() * inst.k() > (ell - 1) * n
    })
}

/// Lexicographically first `m`-subset of `pool` (sorted) with the smallest
/// diameter.
pub fn min_diameter(inst: &MetricInstance, pool: &[usize], m: usize) -> (Vec<usize>, f64) {
    let mut best: Option<(Vec<usize>, f64)> = None;
    for s in subsets_of_size(pool, m) {
        let d = diameter(inst, &s);
        if best.as_ref().is_none_or(|(_, b)| d < *b) {
            best = Some((s, d));
        }
    }
    best.unwrap()
}

/// Cheapest committee satisfying the given exact predicate.
pub fn best_committee(inst: &MetricInstance, ok: impl Fn(&[usize]) -> bool) -> (Vec<usize>, f64) {
    let all: Vec<usize> = (0..inst.n()).collect();
    let mut committees: Vec<(f64, Vec<usize>)> = subsets_of_size(&all, inst.k())
        .into_iter()
        .map(|x| (cost(inst, &x), x))
        .collect();
    committees.sort_by(|a, b| a.0.total_cmp(&b.0).then_with(|| a.1.cmp(&b.1)));
    let (c, x) = committees
        .into_iter()
        .find(|(_, x)| ok(x))
        .expect("a feasible committee");
    (x, c)
}

pub fn line(positions: &[f64], k: usize) -> MetricInstance {
    let pts: Vec<Vec<f64>> = positions.iter().map(|&p| vec![p]).collect();
    MetricInstance::from_points(&pts, k, Norm::L2).unwrap()
}

pub fn zero(n: usize, k: usize) -> MetricInstance {
    MetricInstance::validate(vec![vec![0.0; n]; n], k).unwrap()
}

pub fn line6() -> MetricInstance {
    line(&[0.0, 0.0, 0.0, 10.0, 10.0, 10.0], 2)
}

pub fn line5() -> MetricInstance {
    line(&[0.0, 0.0, 0.0, 10.0, 10.0], 2)
}

/// Small instance on an integer grid; coarse coordinates produce ties and
/// co-located agents.
pub fn grid_instance(coords: &[(u8, u8)], k: usize, norm: Norm) -> MetricInstance {
    let pts: Vec<Vec<f64>> = coords
        .iter()
        .map(|&(a, b)| vec![a as f64, b as f64])
        .collect();
    MetricInstance::from_points(&pts, k, norm).unwrap()
}
