use std::fmt::Write;

use crate::model::{canonicalize, Literal, RiskModel};

/// Canonical text of `model`: [`canonicalize`] applied, blocks in the order
/// item, assets, hazards, threats, links, one field per line with two-space
/// indentation. Output always ends with a newline.
pub fn render_canonical(model: &RiskModel) -> String {
    let m = canonicalize(model);
    let mut out = String::new();

    let _ = writeln!(out, "item {} {{", quote(&m.item.name));
    for f in &m.item.functions {
        let _ = writeln!(out, "  function {}", quote(f));
    }
    out.push_str("}\n");

    for asset in &m.assets {
        let _ = writeln!(out, "\nasset {} {} {{", asset.id, quote(&asset.name));
        for p in &asset.protections {
            let _ = writeln!(
                out,
                "  protect {} for {}: {}",
                p.property.literal(),
                p.limitation.literal(),
                quote(&p.goal)
            );
        }
        out.push_str("}\n");
    }

    for h in &m.hazards {
        let _ = writeln!(out, "\nhazard {} {{", h.id);
        let _ = writeln!(out, "  limitation: {}", h.limitation.literal());
        let _ = writeln!(out, "  description: {}", quote(&h.description));
        let _ = writeln!(out, "  severity: {}", h.severity.literal());
        let _ = writeln!(out, "  exposure: {}", h.exposure.literal());
        let _ = writeln!(out, "  controllability: {}", h.controllability.literal());
        if let Some(goal) = &h.safety_goal {
            let _ = writeln!(out, "  safety_goal: {}", quote(goal));
        }
        out.push_str("}\n");
    }

    for t in &m.threats {
        let _ = writeln!(out, "\nthreat {} {{", t.id);
        let _ = writeln!(out, "  asset: {}", t.asset);
        let _ = writeln!(out, "  limitation: {}", t.limitation.literal());
        let _ = writeln!(out, "  scenario: {}", quote(&t.scenario));
        let _ = writeln!(out, "  impact: {}", t.impact.literal());
        let _ = writeln!(out, "  feasibility: {}", t.feasibility.literal());
        let _ = writeln!(out, "  treatment: {}", t.treatment.literal());
        if let Some(damage) = &t.damage {
            let _ = writeln!(out, "  damage: {}", quote(damage));
        }
        if let Some(o) = &t.risk_override {
            let _ = writeln!(
                out,
                "  override: {} because {}",
                o.level.literal(),
                quote(&o.rationale)
            );
        }
        out.push_str("}\n");
    }

    if !m.links.is_empty() {
        out.push('\n');
        for link in &m.links {
            let _ = writeln!(out, "link {} -- {}", link.hazard, link.threat);
        }
    }
    out
}

fn quote(text: &str) -> String {
    let mut s = String::with_capacity(text.len() + 2);
    s.push('"');
    for c in text.chars() {
        if c == '"' || c == '\\' {
            s.push('\\');
        }
        s.push(c);
    }
    s.push('"');
    s
}
