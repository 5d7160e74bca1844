//! Plain-text renderings for `--format table`.

use std::fmt::Write;

use metric_committee::{AuditReport, Committee, GeneratorSpec, MetricInstance, SelectionResult};

use crate::{num, BenchRow};

fn members(c: &Committee) -> String {
    c.members()
        .iter()
        .map(usize::to_string)
        .collect::<Vec<_>>()
        .join(" ")
}

pub fn selection(result: &SelectionResult, bound: f64, within: bool) -> String {
    let mut s = String::new();
    let _ = writeln!(s, "algorithm  {}", result.algorithm);
    let _ = writeln!(s, "committee  {}", members(&result.committee));
    let _ = writeln!(s, "cost       {}", num(result.cost));
    let _ = writeln!(s, "opt cost   {}", num(result.opt_cost));
    let _ = writeln!(
        s,
        "ratio      {} (bound {}, {})",
        num(result.ratio),
        num(bound),
        if within { "within" } else { "EXCEEDED" }
    );
    if let Some(lifted) = result.lifted_n {
        let _ = writeln!(s, "lifted n   {lifted}");
    }
    let _ = writeln!(
        s,
        "\n{:>3} {:>7} {:>12} {:>12} {:>5}  covered",
        "i", "center", "delta", "radius", "rep"
    );
    for e in &result.trace {
        let covered: Vec<String> = e.covered.iter().map(usize::to_string).collect();
        let _ = writeln!(
            s,
            "{:>3} {:>7} {:>12} {:>12} {:>5}  {}",
            e.i,
            e.center,
            num(e.delta),
            num(e.radius),
            e.representative,
            covered.join(" ")
        );
    }
    s
}

pub fn audit(committee: &Committee, report: &AuditReport) -> String {
    let mut s = String::new();
    let _ = writeln!(s, "committee  {}", members(committee));
    let _ = writeln!(
        s,
        "cost       {} (opt {}, ratio {})",
        num(report.cost),
        num(report.opt_cost),
        num(report.ratio)
    );
    let _ = writeln!(
        s,
        "\n{:<11} {:<6} {:>12}  witness",
        "axiom", "holds", "alpha"
    );
    for v in &report.verdicts {
        let alpha = if v.exhaustive {
            num(v.measured_alpha)
        } else {
            format!(">={}", num(v.measured_alpha))
        };
        let witness = match &v.witness {
            None => "-".to_string(),
            Some(w) => {
                let set: Vec<String> = w.set.iter().map(usize::to_string).collect();
                let mut line = format!(
                    "ell={} threshold={} achieved={} set={{{}}}",
                    w.ell,
                    num(w.threshold),
                    num(w.achieved),
                    set.join(",")
                );
                if let Some(req) = w.required_count {
                    let _ = write!(line, " required>{}", num(req));
                }
                line
            }
        };
        let holds = if v.holds_exact { "yes" } else { "NO" };
        let _ = writeln!(
            s,
            "{:<11} {:<6} {:>12}  {}",
            v.axiom.to_string(),
            holds,
            alpha,
            witness
        );
    }
    s
}

pub fn opt(committee: &Committee, cost: f64) -> String {
    format!(
        "committee  {}\ncost       {}\n",
        members(committee),
        num(cost)
    )
}

pub fn generated(spec: &GeneratorSpec, inst: &MetricInstance) -> String {
    let meta = serde_json::to_string(spec).unwrap_or_default();
    format!(
        "n          {}\nk          {}\nmax dist   {}\nspec       {meta}\n",
        inst.n(),
        inst.k(),
        num(inst.max_distance())
    )
}

pub fn bench(rows: &[BenchRow]) -> String {
    let mut s = String::new();
    let _ = writeln!(
        s,
        "{:<24} {:>17} {:>17} {:>17} {:>17}  ok",
        "algorithm", "ratio / bound", "prf / bound", "mjr / bound", "norp / bound"
    );
    let pair = |v: f64, b: f64| {
        format!(
            "{:.4} / {}",
            v,
            if b.is_finite() { num(b) } else { "-".into() }
        )
    };
    for r in rows {
        let _ = writeln!(
            s,
            "{:<24} {:>17} {:>17} {:>17} {:>17}  {}",
            r.algorithm,
            pair(r.ratio, r.ratio_bound),
            pair(r.prf, r.prf_bound),
            pair(r.mjr, r.mjr_bound),
            pair(r.norp, r.norp_bound),
            if r.within_bounds { "yes" } else { "NO" }
        );
    }
    s
}
