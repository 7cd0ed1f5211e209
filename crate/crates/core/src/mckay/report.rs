use std::fmt::Write as _;

use serde::Serialize;

use super::{DescentStepSummary, McKayCount, McKayInstance};

/// Instance metadata as it appears in reports.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct InstanceRecord {
    pub group: String,
    pub order: usize,
    pub p: u64,
    pub sylow_order: usize,
    pub normalizer_order: usize,
    pub solvable: bool,
    pub p_solvable: bool,
    pub self_normalizing: bool,
    pub parity: bool,
}

impl InstanceRecord {
    pub fn from_instance(inst: &McKayInstance) -> Self {
        InstanceRecord {
            group: inst.group.parent().name().to_string(),
            order: inst.group.order(),
            p: inst.p,
            sylow_order: inst.sylow.order(),
            normalizer_order: inst.normalizer.order(),
            solvable: inst.solvable,
            p_solvable: inst.p_solvable,
            self_normalizing: inst.self_normalizing,
            parity: inst.parity,
        }
    }
}

/// Outcome for one `p'`-degree irreducible. Indices are 0-based positions
/// in the canonical tables of `G` and `P`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct PairRecord {
    pub chi: usize,
    pub degree: u64,
    pub star: Option<usize>,
    pub descent: Option<usize>,
    pub coincide: bool,
    /// multiplicity of the descent character in the restriction to `P`
    pub restriction_multiplicity: Option<i64>,
    pub trace: Vec<DescentStepSummary>,
    pub failure: Option<String>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CorrespondenceReport {
    pub instance: InstanceRecord,
    pub pairs: Vec<PairRecord>,
    pub count: McKayCount,
    pub star_bijective: bool,
    pub descent_bijective: bool,
    pub verdict: bool,
}

fn yes(b: bool) -> &'static str {
    if b {
        "yes"
    } else {
        "no"
    }
}

fn label(i: Option<usize>) -> String {
    i.map_or("-".to_string(), |i| format!("X.{}", i + 1))
}

impl CorrespondenceReport {
    /// Canonical JSON value; object keys come out sorted.
    pub fn to_json(&self) -> serde_json::Value {
        serde_json::to_value(self).expect("report is serializable")
    }

    pub fn render_text(&self) -> String {
        let i = &self.instance;
        let mut s = String::new();
        let _ = writeln!(s, "{} (order {}), p = {}", i.group, i.order, i.p);
        let _ = writeln!(
            s,
            "|P| = {}, |N_G(P)| = {}; solvable {}, p-solvable {}, self-normalizing {}, parity {}",
            i.sylow_order,
            i.normalizer_order,
            yes(i.solvable),
            yes(i.p_solvable),
            yes(i.self_normalizing),
            yes(i.parity)
        );
        let _ = writeln!(
            s,
            "{:>6}  {:>6}  {:>6}  {:>7}  {:>5}  steps",
            "chi", "degree", "star", "descent", "agree"
        );
        for r in &self.pairs {
            let _ = writeln!(
                s,
                "{:>6}  {:>6}  {:>6}  {:>7}  {:>5}  {}",
                label(Some(r.chi)),
                r.degree,
                label(r.star),
                label(r.descent),
                yes(r.coincide),
                r.trace.len()
            );
            if let Some(f) = &r.failure {
                for line in f.lines() {
                    let _ = writeln!(s, "        {line}");
                }
            }
        }
        let _ = writeln!(
            s,
            "counts: {} in G, {} in N_G(P); star bijective {}, descent bijective {}",
            self.count.group,
            self.count.normalizer,
            yes(self.star_bijective),
            yes(self.descent_bijective)
        );
        let _ = writeln!(s, "verdict: {}", self.verdict);
        s
    }
}
