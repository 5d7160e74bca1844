//! Expected values for the small worked examples (all with `n <= 10`).
//!
//! [`oracle_values`] derives every entry by brute force and is what the
//! golden file records; [`library_values`] computes the same entries with
//! the library. Set `UPDATE_GOLDEN=1` to rewrite the file from the oracles.

use std::collections::BTreeMap;
use std::path::PathBuf;

use serde_json::{json, Value};

use metric_committee::audit::{audit_mjr, audit_norp, audit_point_norp, audit_prf};
use metric_committee::engine::{min_diameter_subset, partition_to_committee, select};
use metric_committee::generators::prop1_star;
use metric_committee::{
    lift, oracle_best_committee, pull_back, select_general, Algorithm, Axiom, Budget, Committee,
    EngineOptions, MetricInstance, NorpReading,
};

pub type Values = BTreeMap<String, Value>;

pub fn path() -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("tests/golden/examples.json")
}

pub fn load() -> Values {
    let text = std::fs::read_to_string(path()).expect("golden file present");
    serde_json::from_str(&text).expect("golden file parses")
}

pub fn store(values: &Values) {
    let text = serde_json::to_string_pretty(values).unwrap();
    std::fs::write(path(), text + "\n").unwrap();
}

fn num(x: f64) -> Value {
    if x.is_finite() {
        json!(x)
    } else {
        json!("inf")
    }
}

struct Fixtures {
    zero: MetricInstance,
    line6: MetricInstance,
    line5: MetricInstance,
    star: MetricInstance,
}

fn fixtures() -> Fixtures {
    Fixtures {
        zero: super::zero(4, 2),
        line6: super::line6(),
        line5: super::line5(),
        star: prop1_star(3).unwrap(),
    }
}

const STAR_CENTERS: [usize; 3] = [0, 1, 2];
const STAR_SPREAD: [usize; 3] = [0, 3, 6];
const STAR_LEAF_AND_CENTER: [usize; 6] = [0, 1, 2, 3, 4, 5];
const STAR_TWO_LEAVES: [usize; 6] = [3, 4, 5, 6, 7, 8];

const ALGORITHMS: [(&str, f64); 6] = [
    ("min-diam", 1.0),
    ("opt-guided", 1.0),
    ("greedy-capture", 1.0),
    ("all-centers", 1.0),
    ("alpha-scaled", 1.0),
    ("alpha-scaled", 2.0),
];

fn run_key(name: &str, alpha: f64) -> String {
    if name == "alpha-scaled" {
        format!("{name}-{alpha}")
    } else {
        name.to_string()
    }
}

fn classes_by_definition(inst: &MetricInstance) -> Vec<Vec<usize>> {
    let mut classes: Vec<Vec<usize>> = Vec::new();
    for v in 0..inst.n() {
        if classes.iter().any(|c| c.contains(&v)) {
            continue;
        }
        classes.push((0..inst.n()).filter(|&w| inst.d(v, w) == 0.0).collect());
    }
    classes
}

fn ball_by_definition(inst: &MetricInstance, c: usize, r: f64, open: bool) -> Vec<usize> {
    (0..inst.n())
        .filter(|&v| {
            if open {
                inst.d(c, v) < r
            } else {
                inst.d(c, v) <= r
            }
        })
        .collect()
}

fn verdict(alpha: f64) -> Value {
    json!({ "holds": alpha <= 1.0, "alpha": num(alpha) })
}

fn partition_pick(inst: &MetricInstance, parts: &[Vec<usize>]) -> Vec<usize> {
    let (opt, _) = super::opt(inst);
    let mut picks: Vec<usize> = parts
        .iter()
        .map(|p| {
            *p.iter()
                .min_by(|&&a, &&b| {
                    let sa: f64 = opt.iter().map(|&o| inst.d(a, o)).sum();
                    let sb: f64 = opt.iter().map(|&o| inst.d(b, o)).sum();
                    sa.total_cmp(&sb).then(a.cmp(&b))
                })
                .unwrap()
        })
        .collect();
    picks.sort_unstable();
    picks
}

/// Lifted instance built by hand: agent `v` becomes `k` copies.
fn lifted_by_hand(inst: &MetricInstance) -> MetricInstance {
    let k = inst.k();
    let n = inst.n() * k;
    let m: Vec<Vec<f64>> = (0..n)
        .map(|a| (0..n).map(|b| inst.d(a / k, b / k)).collect())
        .collect();
    MetricInstance::validate(m, k).unwrap()
}

/// Maps a lifted committee back: per original zero-class, its lowest-index
/// agents.
fn pull_back_by_hand(inst: &MetricInstance, lifted: &[usize]) -> Vec<usize> {
    let k = inst.k();
    let mut out = Vec::new();
    for class in classes_by_definition(inst) {
        let reps = lifted.iter().filter(|&&x| class.contains(&(x / k))).count();
        out.extend_from_slice(&class[..reps]);
    }
    out.sort_unstable();
    out
}

pub fn oracle_values() -> Values {
    use super::*;
    let f = fixtures();
    let mut v = Values::new();

    v.insert("cost/zero".into(), num(cost(&f.zero, &[0, 1])));
    v.insert("cost/line6".into(), num(cost(&f.line6, &[0, 3])));
    v.insert(
        "cost/star-centers".into(),
        num(cost(&f.star, &STAR_CENTERS)),
    );
    v.insert("centrality/line6".into(), num(cost(&f.line6, &[0])));
    v.insert("centrality/star-center".into(), num(cost(&f.star, &[0])));
    for (name, inst) in [("zero", &f.zero), ("line6", &f.line6), ("star", &f.star)] {
        let (x, c) = opt(inst);
        v.insert(
            format!("opt/{name}"),
            json!({ "members": x, "cost": num(c) }),
        );
        v.insert(
            format!("zero-classes/{name}"),
            json!(classes_by_definition(inst)),
        );
    }
    v.insert(
        "diameter/star-leaf-and-center".into(),
        num(diameter(&f.star, &STAR_LEAF_AND_CENTER)),
    );
    v.insert(
        "diameter/star-two-leaves".into(),
        num(diameter(&f.star, &STAR_TWO_LEAVES)),
    );
    let (r, c) = radius(&f.star, &STAR_LEAF_AND_CENTER);
    v.insert("radius/star-leaf-and-center".into(), json!([num(r), c]));
    let (r, c) = radius(&f.line6, &[0, 1, 2, 3, 4, 5]);
    v.insert("radius/line6".into(), json!([num(r), c]));
    v.insert(
        "ball/zero-r0".into(),
        json!(ball_by_definition(&f.zero, 0, 0.0, false)),
    );
    v.insert(
        "ball/star-closed".into(),
        json!(ball_by_definition(&f.star, 0, 1.0, false)),
    );
    v.insert(
        "ball/star-open".into(),
        json!(ball_by_definition(&f.star, 0, 1.0, true)),
    );

    let (s, d) = min_diameter(&f.star, &[3, 4, 5], 3);
    v.insert(
        "min-diameter/star-leaf".into(),
        json!({ "set": s, "diameter": num(d) }),
    );
    let (s, d) = min_diameter(&f.line6, &[0, 1, 2, 3, 4, 5], 3);
    v.insert(
        "min-diameter/line6".into(),
        json!({ "set": s, "diameter": num(d) }),
    );

    for (name, inst) in [("zero", &f.zero), ("line6", &f.line6), ("star", &f.star)] {
        let (_, opt_cost) = opt(inst);
        for (alg, alpha) in ALGORITHMS {
            let run = reference::select(inst, alg, alpha);
            let c = cost(inst, &run.committee);
            let ratio = if opt_cost > 0.0 { c / opt_cost } else { 1.0 };
            v.insert(
                format!("select/{}/{name}", run_key(alg, alpha)),
                json!({ "members": run.committee, "cost": num(c), "ratio": num(ratio) }),
            );
        }
    }

    let line6_parts = classes_by_definition(&f.line6);
    let star_parts = classes_by_definition(&f.star);
    let x = partition_pick(&f.line6, &line6_parts);
    v.insert(
        "partition/line6".into(),
        json!({ "members": x, "cost": num(cost(&f.line6, &x)) }),
    );
    let x = partition_pick(&f.star, &star_parts);
    v.insert(
        "partition/star".into(),
        json!({ "members": x, "cost": num(cost(&f.star, &x)) }),
    );

    for (name, x) in [("centers", &STAR_CENTERS[..]), ("spread", &STAR_SPREAD[..])] {
        v.insert(format!("prf/star-{name}"), verdict(prf_alpha(&f.star, x)));
        v.insert(format!("mjr/star-{name}"), verdict(mjr_alpha(&f.star, x)));
        v.insert(
            format!("norp/star-{name}"),
            verdict(norp_alpha(&f.star, x, false)),
        );
        v.insert(
            format!("point-norp/star-{name}"),
            json!(point_norp_holds(&f.star, x)),
        );
    }
    v.insert("prf/zero".into(), verdict(prf_alpha(&f.zero, &[0, 1])));
    v.insert("mjr/zero".into(), verdict(mjr_alpha(&f.zero, &[0, 1])));
    v.insert(
        "point-norp/line6".into(),
        json!(point_norp_holds(&f.line6, &[0, 3])),
    );
    v.insert(
        "point-norp/zero".into(),
        json!(point_norp_holds(&f.zero, &[0, 1])),
    );

    let star_prf = best_committee(&f.star, |x| prf_alpha(&f.star, x) <= 1.0);
    v.insert("oracle/star-prf".into(), num(star_prf.1));
    v.insert(
        "oracle/star-none".into(),
        num(best_committee(&f.star, |_| true).1),
    );
    let all_ok = |x: &[usize]| {
        prf_alpha(&f.zero, x) <= 1.0
            && mjr_alpha(&f.zero, x) <= 1.0
            && norp_holds(&f.zero, x)
            && point_norp_holds(&f.zero, x)
    };
    v.insert(
        "oracle/zero-all".into(),
        num(best_committee(&f.zero, all_ok).1),
    );

    let lifted = lifted_by_hand(&f.line5);
    let sizes: Vec<usize> = classes_by_definition(&lifted)
        .iter()
        .map(Vec::len)
        .collect();
    v.insert(
        "lift/line5".into(),
        json!({ "n": lifted.n(), "class-sizes": sizes }),
    );
    v.insert(
        "pull-back/line5-one-each".into(),
        json!(pull_back_by_hand(&f.line5, &[1, 9])),
    );
    v.insert(
        "pull-back/line5-two-left".into(),
        json!(pull_back_by_hand(&f.line5, &[0, 5])),
    );
    let (_, opt_cost) = opt(&f.line5);
    for alg in ["greedy-capture", "opt-guided"] {
        let run = reference::select(&lifted, alg, 1.0);
        let x = pull_back_by_hand(&f.line5, &run.committee);
        let c = cost(&f.line5, &x);
        v.insert(
            format!("select-general/{alg}/line5"),
            json!({ "members": x, "cost": num(c), "ratio": num(c / opt_cost) }),
        );
    }
    v
}

pub fn library_values() -> Values {
    let f = fixtures();
    let mut v = Values::new();
    let committee = |inst: &MetricInstance, m: &[usize]| Committee::new(inst, m.to_vec()).unwrap();

    v.insert(
        "cost/zero".into(),
        num(f.zero.cost(&committee(&f.zero, &[0, 1]))),
    );
    v.insert(
        "cost/line6".into(),
        num(f.line6.cost(&committee(&f.line6, &[0, 3]))),
    );
    v.insert(
        "cost/star-centers".into(),
        num(f.star.cost(&committee(&f.star, &STAR_CENTERS))),
    );
    v.insert("centrality/line6".into(), num(f.line6.centrality(0)));
    v.insert("centrality/star-center".into(), num(f.star.centrality(0)));
    for (name, inst) in [("zero", &f.zero), ("line6", &f.line6), ("star", &f.star)] {
        let (x, c) = inst.opt_committee();
        v.insert(
            format!("opt/{name}"),
            json!({ "members": x.members(), "cost": num(c) }),
        );
        v.insert(format!("zero-classes/{name}"), json!(inst.zero_classes()));
    }
    v.insert(
        "diameter/star-leaf-and-center".into(),
        num(f.star.diameter(&STAR_LEAF_AND_CENTER).unwrap()),
    );
    v.insert(
        "diameter/star-two-leaves".into(),
        num(f.star.diameter(&STAR_TWO_LEAVES).unwrap()),
    );
    let (r, c) = f.star.radius(&STAR_LEAF_AND_CENTER).unwrap();
    v.insert("radius/star-leaf-and-center".into(), json!([num(r), c]));
    let (r, c) = f.line6.radius(&f.line6.all_agents()).unwrap();
    v.insert("radius/line6".into(), json!([num(r), c]));
    v.insert(
        "ball/zero-r0".into(),
        json!(&*f.zero.ball(0, 0.0, &f.zero.all_agents(), false)),
    );
    v.insert(
        "ball/star-closed".into(),
        json!(&*f.star.ball(0, 1.0, &f.star.all_agents(), false)),
    );
    v.insert(
        "ball/star-open".into(),
        json!(&*f.star.ball(0, 1.0, &f.star.all_agents(), true)),
    );

    let (s, d) = min_diameter_subset(&f.star, &[3, 4, 5], 3, &mut Budget::default()).unwrap();
    v.insert(
        "min-diameter/star-leaf".into(),
        json!({ "set": &*s, "diameter": num(d) }),
    );
    let (s, d) =
        min_diameter_subset(&f.line6, &f.line6.all_agents(), 3, &mut Budget::default()).unwrap();
    v.insert(
        "min-diameter/line6".into(),
        json!({ "set": &*s, "diameter": num(d) }),
    );

    for (name, inst) in [("zero", &f.zero), ("line6", &f.line6), ("star", &f.star)] {
        let (opt, _) = inst.opt_committee();
        for (alg, alpha) in ALGORITHMS {
            let algorithm = Algorithm::parse(alg, alpha).unwrap();
            let res = select(inst, &opt, algorithm, &EngineOptions::default()).unwrap();
            v.insert(
                format!("select/{}/{name}", run_key(alg, alpha)),
                json!({ "members": res.committee.members(), "cost": num(res.cost), "ratio": num(res.ratio) }),
            );
        }
    }

    for (name, inst) in [("line6", &f.line6), ("star", &f.star)] {
        let (opt, _) = inst.opt_committee();
        let x = partition_to_committee(inst, &opt, &inst.zero_classes()).unwrap();
        v.insert(
            format!("partition/{name}"),
            json!({ "members": x.members(), "cost": num(inst.cost(&x)) }),
        );
    }

    let lib_verdict = |a: metric_committee::AxiomVerdict| json!({ "holds": a.holds_exact, "alpha": num(a.measured_alpha) });
    for (name, m) in [("centers", &STAR_CENTERS[..]), ("spread", &STAR_SPREAD[..])] {
        let x = committee(&f.star, m);
        v.insert(
            format!("prf/star-{name}"),
            lib_verdict(audit_prf(&f.star, &x, &mut Budget::default()).unwrap()),
        );
        v.insert(
            format!("mjr/star-{name}"),
            lib_verdict(audit_mjr(&f.star, &x).unwrap()),
        );
        v.insert(
            format!("norp/star-{name}"),
            lib_verdict(
                audit_norp(&f.star, &x, NorpReading::Strict, &mut Budget::default()).unwrap(),
            ),
        );
        v.insert(
            format!("point-norp/star-{name}"),
            json!(audit_point_norp(&f.star, &x).unwrap().holds_exact),
        );
    }
    let z = committee(&f.zero, &[0, 1]);
    v.insert(
        "prf/zero".into(),
        lib_verdict(audit_prf(&f.zero, &z, &mut Budget::default()).unwrap()),
    );
    v.insert(
        "mjr/zero".into(),
        lib_verdict(audit_mjr(&f.zero, &z).unwrap()),
    );
    v.insert(
        "point-norp/line6".into(),
        json!(
            audit_point_norp(&f.line6, &committee(&f.line6, &[0, 3]))
                .unwrap()
                .holds_exact
        ),
    );
    v.insert(
        "point-norp/zero".into(),
        json!(audit_point_norp(&f.zero, &z).unwrap().holds_exact),
    );

    let budget = metric_committee::audit::DEFAULT_ORACLE_BUDGET;
    v.insert(
        "oracle/star-prf".into(),
        num(oracle_best_committee(&f.star, &[Axiom::Prf], budget)
            .unwrap()
            .1),
    );
    v.insert(
        "oracle/star-none".into(),
        num(oracle_best_committee(&f.star, &[], budget).unwrap().1),
    );
    v.insert(
        "oracle/zero-all".into(),
        num(oracle_best_committee(&f.zero, &Axiom::ALL, budget)
            .unwrap()
            .1),
    );

    let (lifted, map) = lift(&f.line5);
    let sizes: Vec<usize> = lifted.zero_classes().iter().map(Vec::len).collect();
    v.insert(
        "lift/line5".into(),
        json!({ "n": lifted.n(), "class-sizes": sizes }),
    );
    for (name, m) in [("one-each", [1, 9]), ("two-left", [0, 5])] {
        let x = pull_back(
            &map,
            &Committee::from_indices(lifted.n(), m.to_vec()).unwrap(),
        )
        .unwrap();
        v.insert(format!("pull-back/line5-{name}"), json!(x.members()));
    }
    for alg in ["greedy-capture", "opt-guided"] {
        let res =
            select_general(&f.line5, alg.parse().unwrap(), &EngineOptions::default()).unwrap();
        v.insert(
            format!("select-general/{alg}/line5"),
            json!({ "members": res.committee.members(), "cost": num(res.cost), "ratio": num(res.ratio) }),
        );
    }
    v
}

/// Keys whose library value differs from the golden file.
pub fn mismatches(golden: &Values, actual: &Values) -> Vec<String> {
    let mut keys: Vec<&String> = golden.keys().chain(actual.keys()).collect();
    keys.sort();
    keys.dedup();
    keys.into_iter()
        .filter(|k| golden.get(*k) != actual.get(*k))
        .map(|k| format!("{k}: golden {:?}, got {:?}", golden.get(k), actual.get(k)))
        .collect()
}
