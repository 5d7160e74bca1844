use crate::engine::{
    check_alpha, check_divisible, nearest, order_statistic, Algorithm, CoverEvent, EngineOptions,
    OptProximity, Pool, SelectionResult,
};
use crate::error::Result;
use crate::metric::{Committee, MetricInstance};

#[derive(Clone, Copy, PartialEq)]
enum Centers {
    /// Only uncovered agents grow balls.
    Uncovered,
    /// Every agent keeps growing its ball, covered or not.
    Everyone,
}

#[derive(Clone, Copy)]
enum Representative {
    /// The ball center represents its set; the last one may be relocated.
    Center,
    /// Every set is represented by its member closest to OPT.
    ClosestToOpt,
}

#[derive(Clone, Copy)]
enum Relocation {
    None,
    /// Last representative moves to the member with the smallest summed
    /// distance to OPT.
    TowardsOpt,
    /// Last representative moves to the member nearest a single agent.
    TowardsAgent(usize),
}

struct Capture {
    centers: Centers,
    representative: Representative,
    relocation: Relocation,
    /// `(alpha, anchor)`: the uncovered agent nearest `anchor` grows its ball
    /// `alpha` times faster.
    accelerated: Option<(f64, usize)>,
}

/// Greedy capture with uncovered centers and last-representative relocation:
/// PRF, mJR and NORP, within a factor 4 of the optimal cost.
pub fn select_greedy_capture(
    inst: &MetricInstance,
    opt: &Committee,
    options: &EngineOptions,
) -> Result<SelectionResult> {
    let capture = Capture {
        centers: Centers::Uncovered,
        representative: Representative::Center,
        relocation: if options.relocate {
            Relocation::TowardsOpt
        } else {
            Relocation::None
        },
        accelerated: None,
    };
    run_capture(inst, opt, options, &capture, Algorithm::GreedyCapture)
}

/// Greedy capture where covered agents keep growing balls and each covered
/// set is represented by its member closest to OPT. Polynomial time; 2-PRF,
/// 2-mJR and a 2-approximation.
pub fn select_all_centers(
    inst: &MetricInstance,
    opt: &Committee,
    options: &EngineOptions,
) -> Result<SelectionResult> {
    let capture = Capture {
        centers: Centers::Everyone,
        representative: Representative::ClosestToOpt,
        relocation: Relocation::None,
        accelerated: None,
    };
    run_capture(inst, opt, options, &capture, Algorithm::AllCenters)
}

/// Greedy capture in which the uncovered agent nearest the most central OPT
/// member grows its ball `alpha` times faster: alpha-PRF, NORP, and within
/// `2 + 2/alpha` of the optimal cost.
pub fn select_alpha_scaled(
    inst: &MetricInstance,
    opt: &Committee,
    alpha: f64,
    options: &EngineOptions,
) -> Result<SelectionResult> {
    check_alpha(alpha)?;
    check_divisible(inst, opt)?;
    let anchor = opt
        .iter()
        .copied()
        .min_by(|&a, &b| {
            inst.centrality(a)
                .total_cmp(&inst.centrality(b))
                .then(a.cmp(&b))
        })
        .expect("reference committee is non-empty");
    let capture = Capture {
        centers: Centers::Uncovered,
        representative: Representative::Center,
        relocation: if options.relocate {
            Relocation::TowardsAgent(anchor)
        } else {
            Relocation::None
        },
        accelerated: Some((alpha, anchor)),
    };
    run_capture(
        inst,
        opt,
        options,
        &capture,
        Algorithm::AlphaScaled { alpha },
    )
}

fn run_capture(
    inst: &MetricInstance,
    opt: &Committee,
    options: &EngineOptions,
    capture: &Capture,
    algorithm: Algorithm,
) -> Result<SelectionResult> {
    let q = check_divisible(inst, opt)?;
    let n = inst.n();
    let prox = OptProximity::new(inst, opt, options.policy);
    let mut pool = Pool::full(n);
    let mut trace: Vec<CoverEvent> = Vec::with_capacity(inst.k());
    let mut now = 0.0f64;

    for i in 1..=inst.k() {
        let uncovered = pool.members();
        let special = capture.accelerated.map(|(alpha, anchor)| {
            let a = uncovered
                .iter()
                .copied()
                .min_by(|&a, &b| {
                    inst.d(a, anchor)
                        .total_cmp(&inst.d(b, anchor))
                        .then(a.cmp(&b))
                })
                .expect("pool is non-empty while rounds remain");
            (alpha, a)
        });

        // Event time of each candidate center; a center whose ball already
        // holds a quota fires at the current time.
        let mut best: Option<(f64, usize)> = None;
        let candidates: Box<dyn Iterator<Item = usize>> = match capture.centers {
            Centers::Uncovered => Box::new(uncovered.iter().copied()),
            Centers::Everyone => Box::new(0..n),
        };
        for x in candidates {
            let mut trigger = order_statistic(inst, x, uncovered, q - 1);
            if let Some((alpha, a)) = special {
                if x == a {
                    trigger /= alpha;
                }
            }
            let fires = trigger.max(now);
            if best.is_none_or(|(t, _)| fires < t) {
                best = Some((fires, x));
            }
        }
        let (delta, center) = best.expect("at least one candidate center");
        let radius = match special {
            Some((alpha, a)) if a == center => alpha * delta,
            _ => delta,
        };

        let (covered, representative) = match capture.representative {
            Representative::Center => (nearest(inst, center, uncovered, q, &prox), center),
            Representative::ClosestToOpt if options.policy.colocated_first => {
                let in_ball = uncovered
                    .iter()
                    .copied()
                    .filter(|&v| inst.d(center, v) <= radius);
                let rep = prox.pick_rep(in_ball);
                (
                    cover_colocated_first(inst, center, rep, uncovered, q, &prox),
                    rep,
                )
            }
            Representative::ClosestToOpt => {
                let covered = nearest(inst, center, uncovered, q, &prox);
                let rep = prox.pick_rep(covered.iter().copied());
                (covered, rep)
            }
        };

        let mut covered = covered;
        covered.sort_unstable();
        pool.cover(&covered);
        now = delta;
        trace.push(CoverEvent {
            i,
            center,
            delta,
            radius,
            covered,
            representative,
        });
    }

    if let Some(last) = trace.last_mut() {
        match capture.relocation {
            Relocation::None => {}
            Relocation::TowardsOpt => {
                last.representative = prox.pick_rep(last.covered.iter().copied());
            }
            Relocation::TowardsAgent(anchor) => {
                last.representative = last
                    .covered
                    .iter()
                    .copied()
                    .min_by(|&a, &b| {
                        inst.d(a, anchor)
                            .total_cmp(&inst.d(b, anchor))
                            .then(a.cmp(&b))
                    })
                    .expect("covered sets are non-empty");
            }
        }
    }
    Ok(SelectionResult::new(inst, algorithm, opt, trace))
}

/// Covered set for the all-centers algorithm under the co-location
/// amendment: the uncovered agents at `rep`'s location first, then the
/// remaining agents nearest `center`.
fn cover_colocated_first(
    inst: &MetricInstance,
    center: usize,
    rep: usize,
    uncovered: &[usize],
    q: usize,
    prox: &OptProximity,
) -> Vec<usize> {
    let mut colocated: Vec<usize> = uncovered
        .iter()
        .copied()
        .filter(|&v| inst.d(v, rep) == 0.0)
        .collect();
    colocated.sort_by(|&a, &b| (a != rep).cmp(&(b != rep)).then(prox.cover_cmp(a, b)));
    colocated.truncate(q);
    let rest: Vec<usize> = uncovered
        .iter()
        .copied()
        .filter(|&v| inst.d(v, rep) != 0.0)
        .collect();
    let fill = q - colocated.len();
    colocated.extend(nearest(inst, center, &rest, fill, prox));
    colocated
}

/// Grows the ball of the uncovered agent closest to OPT until it holds a
/// quota, covers the nearest quota, and repeats. NORP and a 2-approximation.
pub fn select_opt_guided(
    inst: &MetricInstance,
    opt: &Committee,
    options: &EngineOptions,
) -> Result<SelectionResult> {
    let q = check_divisible(inst, opt)?;
    let prox = OptProximity::new(inst, opt, options.policy);
    let mut pool = Pool::full(inst.n());
    let mut trace = Vec::with_capacity(inst.k());
    let mut now = 0.0f64;

    for i in 1..=inst.k() {
        let uncovered = pool.members();
        let center = prox.pick_rep(uncovered.iter().copied());
        let delta = order_statistic(inst, center, uncovered, q - 1).max(now);
        let mut covered = nearest(inst, center, uncovered, q, &prox);
        covered.sort_unstable();
        pool.cover(&covered);
        now = delta;
        trace.push(CoverEvent {
            i,
            center,
            delta,
            radius: delta,
            covered,
            representative: center,
        });
    }
    Ok(SelectionResult::new(inst, Algorithm::OptGuided, opt, trace))
}
