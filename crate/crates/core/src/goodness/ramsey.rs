//! Exact verification of small Ramsey values and of goodness on explicit
//! host graphs.

use std::time::{Duration, Instant};

use serde::Serialize;
use serde_json::{json, Value};

use super::search::{find_avoiding_coloring, symmetric_levels, SearchConfig, SearchMode, SearchOutcome};
use crate::detect::Target;
use crate::format::colored_to_value;
use crate::graph::{ColoredGraph, Graph};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum RamseyVerdict {
    /// Every coloring of `K_N` hits a target and some coloring of `K_{N-1}`
    /// avoids them all.
    IsRamsey,
    /// Some coloring of `K_N` avoids every target: the Ramsey number is larger.
    TooSmall,
    /// Every coloring of `K_{N-1}` already hits: the Ramsey number is smaller.
    NotTight,
    /// A budget ran out before either side was settled.
    Indeterminate,
}

#[derive(Clone, Debug)]
pub struct RamseyReport {
    pub order: usize,
    pub targets: Vec<Target>,
    pub verdict: RamseyVerdict,
    /// For `IsRamsey` the avoiding coloring of `K_{N-1}`, for `TooSmall` the
    /// avoiding coloring of `K_N`.
    pub witness: Option<ColoredGraph>,
    pub mode: SearchMode,
    pub colorings_checked: u128,
    pub elapsed: Duration,
}

impl RamseyReport {
    pub fn to_json(&self) -> Value {
        report_json(
            json!(self.verdict),
            self.witness.as_ref(),
            self.colorings_checked,
            self.elapsed,
            json!({
                "order": self.order,
                "targets": self.targets.iter().map(ToString::to_string).collect::<Vec<_>>(),
                "mode": self.mode,
            }),
        )
    }
}

fn report_json(
    verdict: Value,
    witness: Option<&ColoredGraph>,
    checked: u128,
    elapsed: Duration,
    extra: Value,
) -> Value {
    let mut report = json!({
        "verdict": verdict,
        "colorings_checked": u64::try_from(checked).map_or_else(|_| json!(checked.to_string()), |c| json!(c)),
        "elapsed": elapsed.as_secs_f64(),
    });
    if let Some(w) = witness {
        report["witness"] = colored_to_value(w);
    }
    if let (Value::Object(r), Value::Object(e)) = (&mut report, extra) {
        r.extend(e);
    }
    report
}

/// Decides whether `R(targets) = order`, where color `i` must avoid
/// `targets[i]`: `K_order` must have no avoiding coloring and
/// `K_{order-1}` must have one.
pub fn verify_ramsey_value(order: usize, targets: &[Target], config: &SearchConfig) -> RamseyReport {
    assert!(order >= 1 && !targets.is_empty());
    let start = Instant::now();
    let mode = config.mode.unwrap_or(SearchMode::Symmetric);
    let (verdict, witness, checked) = if mode == SearchMode::Symmetric {
        let deadline = config.budget.max_seconds.map(|s| start + Duration::from_secs_f64(s));
        let levels = config.install(|| symmetric_levels(order, targets, config.budget.max_colorings, deadline));
        let level = |m: usize| levels.levels.iter().find(|l| l.order == m && l.complete);
        let lower = if order == 1 { None } else { level(order - 1) };
        let (verdict, witness) = match (lower, level(order)) {
            (_, Some(upper)) if upper.first.is_some() => (RamseyVerdict::TooSmall, upper.first.clone()),
            (Some(lower), _) if lower.first.is_none() => (RamseyVerdict::NotTight, None),
            (Some(lower), Some(_)) => (RamseyVerdict::IsRamsey, lower.first.clone()),
            // K_0 trivially avoids everything
            (None, Some(_)) if order == 1 => (RamseyVerdict::IsRamsey, None),
            _ => (RamseyVerdict::Indeterminate, lower.and_then(|l| l.first.clone())),
        };
        (verdict, witness, levels.checked)
    } else {
        let upper = find_avoiding_coloring(&Graph::complete(order), targets, config);
        match upper.outcome {
            SearchOutcome::Avoider(w) => (RamseyVerdict::TooSmall, Some(w), upper.colorings_checked),
            SearchOutcome::Indeterminate => (RamseyVerdict::Indeterminate, None, upper.colorings_checked),
            SearchOutcome::NoAvoider => {
                let lower = find_avoiding_coloring(&Graph::complete(order - 1), targets, config);
                let checked = upper.colorings_checked + lower.colorings_checked;
                match lower.outcome {
                    SearchOutcome::Avoider(w) => (RamseyVerdict::IsRamsey, Some(w), checked),
                    SearchOutcome::NoAvoider => (RamseyVerdict::NotTight, None, checked),
                    SearchOutcome::Indeterminate => (RamseyVerdict::Indeterminate, None, checked),
                }
            }
        }
    };
    RamseyReport {
        order,
        targets: targets.to_vec(),
        verdict,
        witness,
        mode,
        colorings_checked: checked,
        elapsed: start.elapsed(),
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum GoodnessVerdict {
    /// Every coloring of the host has a target in its color.
    AllColoringsHit,
    /// The witness coloring avoids every target.
    CounterexampleColoring,
    Indeterminate,
}

#[derive(Clone, Debug)]
pub struct GoodnessCertificate {
    pub verdict: GoodnessVerdict,
    pub witness: Option<ColoredGraph>,
    pub mode: SearchMode,
    pub colorings_checked: u128,
    pub elapsed: Duration,
}

impl GoodnessCertificate {
    /// Re-checks a counterexample independently of the search: no color
    /// class may contain its target.
    pub fn witness_is_valid(&self, targets: &[Target]) -> bool {
        self.witness.as_ref().is_some_and(|w| avoids_all(w, targets))
    }

    pub fn to_json(&self) -> Value {
        report_json(
            json!(self.verdict),
            self.witness.as_ref(),
            self.colorings_checked,
            self.elapsed,
            json!({ "mode": self.mode }),
        )
    }
}

/// Whether no color class `i` of `cg` contains `targets[i]`.
pub fn avoids_all(cg: &ColoredGraph, targets: &[Target]) -> bool {
    cg.k() == targets.len()
        && (0..cg.k()).all(|c| !targets[c].is_contained_in(&cg.color_subgraph(c).expect("color in range")))
}

/// Checks every `targets.len()`-coloring of the edges of `g` for a
/// monochromatic `targets[i]` in color `i`.
pub fn verify_goodness(g: &Graph, targets: &[Target], config: &SearchConfig) -> GoodnessCertificate {
    let report = find_avoiding_coloring(g, targets, config);
    let (verdict, witness) = match report.outcome {
        SearchOutcome::Avoider(w) => (GoodnessVerdict::CounterexampleColoring, Some(w)),
        SearchOutcome::NoAvoider => (GoodnessVerdict::AllColoringsHit, None),
        SearchOutcome::Indeterminate => (GoodnessVerdict::Indeterminate, None),
    };
    GoodnessCertificate {
        verdict,
        witness,
        mode: report.mode,
        colorings_checked: report.colorings_checked,
        elapsed: report.elapsed,
    }
}
