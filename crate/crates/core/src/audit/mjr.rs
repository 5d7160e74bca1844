use crate::audit::{Axiom, AxiomVerdict, Witness};
use crate::error::Result;
use crate::metric::{fairness_ratio, Committee, MetricInstance};

/// Exact mJR audit in polynomial time.
///
/// A coalition of `ceil(n/k)` agents with radius `R(S)` must have a
/// representative within `R(S)` of one of its members. For a ball
/// `B(c, r)` the worst coalition inside it consists of the agents farthest
/// from the committee, so scanning every center `c` and every radius `r`
/// equal to a distance from `c` finds the largest factor.
pub fn audit_mjr(inst: &MetricInstance, committee: &Committee) -> Result<AxiomVerdict> {
    let n = inst.n();
    let q = inst.coalition_size(1);
    let reach: Vec<f64> = (0..n).map(|v| inst.nearest_in(v, committee)).collect();

    let mut best = 0.0f64;
    let mut witness: Option<Witness> = None;
    for c in 0..n {
        let row = inst.row(c);
        let mut by_distance: Vec<usize> = (0..n).collect();
        by_distance.sort_by(|&a, &b| row[a].total_cmp(&row[b]).then(a.cmp(&b)));
        for m in q..=n {
            // Only the largest prefix at each distinct radius matters.
            if m < n && row[by_distance[m]] == row[by_distance[m - 1]] {
                continue;
            }
            let r = row[by_distance[m - 1]];
            let mut ball = by_distance[..m].to_vec();
            ball.sort_by(|&a, &b| reach[b].total_cmp(&reach[a]).then(a.cmp(&b)));
            let value = reach[ball[q - 1]];
            if fairness_ratio(value, r) <= best {
                continue;
            }
            let mut set = ball[..q].to_vec();
            set.sort_unstable();
            let (radius, _) = inst.radius(&set)?;
            best = fairness_ratio(value, radius);
            witness = Some(Witness {
                set,
                ell: 1,
                threshold: radius,
                achieved: value,
                required_count: None,
            });
        }
    }
    let witness = witness.filter(|_| best > 1.0);
    Ok(AxiomVerdict::exact(Axiom::Mjr, best, witness))
}
