//! The stable report schema emitted by `classify`, plus the human-readable
//! renderer that mirrors the case trace.

use serde::{Deserialize, Serialize};
use spaceform_core::spaceform::{characteristic_data, psc_formula, SpaceFormInstance, Verdict};
use std::fmt::Write;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TraceEntry {
    pub step: String,
    pub cite: String,
    pub result: String,
}

/// Field names and order are a stable interface; serialization must
/// round-trip bit-exactly.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Report {
    pub n: usize,
    pub group: String,
    pub order: usize,
    pub verdict: String,
    pub theorem: Option<String>,
    pub witness: Option<Vec<String>>,
    pub orientable: bool,
    pub spin: bool,
    /// Null when no model space exists (even n with |G| > 2).
    pub pin_plus: Option<bool>,
    pub pin_minus: Option<bool>,
    pub psc: String,
    pub classes_considered: usize,
    pub trace: Vec<TraceEntry>,
}

/// Assemble the report for a classified instance. `group_name` echoes how
/// the caller described the group (canonical spec string or file path).
pub fn build_report(inst: &SpaceFormInstance, group_name: String, verdict: &Verdict) -> Report {
    let characteristic = characteristic_data(inst);
    let psc = psc_formula(inst.n(), inst.group().order(), inst.alpha_vanishes());
    Report {
        n: inst.n(),
        group: group_name,
        order: inst.group().order(),
        verdict: verdict.outcome.as_str().to_string(),
        theorem: verdict.theorem.map(|t| t.as_str().to_string()),
        witness: verdict.witnesses.clone(),
        orientable: characteristic.is_some_and(|c| c.orientable()),
        spin: characteristic.is_some_and(|c| c.spin()),
        pin_plus: characteristic.map(|c| c.pin_plus()),
        pin_minus: characteristic.map(|c| c.pin_minus()),
        psc: psc.answer.as_str().to_string(),
        classes_considered: verdict.classes_considered,
        trace: verdict
            .trace
            .iter()
            .map(|s| TraceEntry {
                step: s.step.clone(),
                cite: s.cite.clone(),
                result: s.result.clone(),
            })
            .collect(),
    }
}

fn yes_no(b: bool) -> &'static str {
    if b {
        "yes"
    } else {
        "no"
    }
}

pub fn render_text(r: &Report) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "instance: n = {}, group {} (order {})", r.n, r.group, r.order);
    match &r.theorem {
        Some(t) => {
            let _ = writeln!(out, "verdict: {} via {}", r.verdict, t);
        }
        None => {
            let _ = writeln!(out, "verdict: {}", r.verdict);
        }
    }
    if let Some(witness) = &r.witness {
        let _ = writeln!(out, "witnesses: {}", witness.join(", "));
    }
    let pins = match (r.pin_plus, r.pin_minus) {
        (Some(p), Some(m)) => format!("pin+: {}  pin-: {}", yes_no(p), yes_no(m)),
        _ => "pin+: n/a  pin-: n/a".to_string(),
    };
    let _ = writeln!(
        out,
        "orientable: {}  spin: {}  {}  psc: {}",
        yes_no(r.orientable),
        yes_no(r.spin),
        pins,
        r.psc
    );
    let _ = writeln!(out, "extension classes considered: {}", r.classes_considered);
    let _ = writeln!(out, "case trace:");
    let width = r.trace.iter().map(|t| t.step.len()).max().unwrap_or(0);
    for (i, t) in r.trace.iter().enumerate() {
        let _ = writeln!(
            out,
            "  {:>2}. {:width$}  [{}]  {}",
            i + 1,
            t.step,
            t.cite,
            t.result,
            width = width
        );
    }
    out
}
