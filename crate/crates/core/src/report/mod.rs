//! Assessment tables in Markdown, CSV and JSON.
//!
//! Every renderer works on the canonical form of the model, so row order
//! is id order and output is byte-stable for equal inputs.

mod format;

use std::fmt;
use std::str::FromStr;

use thiserror::Error;

use crate::analysis::Assessment;
use crate::model::{canonicalize, Limitation, Literal, RiskModel};
use format::{Cell, Table};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum ReportFormat {
    Markdown,
    Csv,
    Json,
}

/// Which table to render.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum TableKind {
    Hara,
    Tara,
    Assets,
    Trace,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("unknown {kind} `{text}`")]
pub struct ParseReportOptionError {
    kind: &'static str,
    text: String,
}

impl FromStr for ReportFormat {
    type Err = ParseReportOptionError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s.to_ascii_lowercase().as_str() {
            "md" | "markdown" => Ok(ReportFormat::Markdown),
            "csv" => Ok(ReportFormat::Csv),
            "json" => Ok(ReportFormat::Json),
            _ => Err(ParseReportOptionError {
                kind: "report format",
                text: s.to_string(),
            }),
        }
    }
}

impl fmt::Display for ReportFormat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            ReportFormat::Markdown => "md",
            ReportFormat::Csv => "csv",
            ReportFormat::Json => "json",
        })
    }
}

impl FromStr for TableKind {
    type Err = ParseReportOptionError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s.to_ascii_lowercase().as_str() {
            "hara" => Ok(TableKind::Hara),
            "tara" => Ok(TableKind::Tara),
            "assets" => Ok(TableKind::Assets),
            "trace" => Ok(TableKind::Trace),
            _ => Err(ParseReportOptionError {
                kind: "table",
                text: s.to_string(),
            }),
        }
    }
}

const HARA_COLUMNS: &[(&str, &str)] = &[
    ("Limitation", "limitation"),
    ("Hazard", "hazard"),
    ("Severity", "severity"),
    ("Exposure", "exposure"),
    ("Controllability", "controllability"),
    ("ASIL", "asil"),
    ("Safety Goal", "safety_goal"),
];

const TARA_COLUMNS: &[(&str, &str)] = &[
    ("Limitation", "limitation"),
    ("Asset", "asset"),
    ("Threat Scenario", "threat_scenario"),
    ("Impact", "impact"),
    ("Feasibility", "feasibility"),
    ("Risk Level", "risk_level"),
    ("Treatment", "treatment"),
];

const ASSET_COLUMNS: &[(&str, &str)] = &[
    ("Asset", "asset"),
    ("Limitation", "limitation"),
    ("Security Property", "security_property"),
    ("Security Goal", "security_goal"),
    ("Threat Scenario", "threat_scenario"),
];

const TRACE_COLUMNS: &[(&str, &str)] = &[
    ("Limitation", "limitation"),
    ("Hazards", "hazards"),
    ("Threats", "threats"),
    ("Cross-links", "cross_links"),
    ("Worst ASIL", "worst_asil"),
    ("Worst Risk", "worst_risk"),
];

fn code(l: Limitation) -> Cell {
    Cell::Text(l.code().to_string())
}

/// One row per hazard: limitation, hazard, S, E, C, ASIL, safety goal.
pub fn render_hara_table(model: &RiskModel, assessment: &Assessment, format: ReportFormat) -> String {
    let m = canonicalize(model);
    let rows = m
        .hazards
        .iter()
        .map(|h| {
            vec![
                code(h.limitation),
                h.description.as_str().into(),
                h.severity.literal().into(),
                h.exposure.literal().into(),
                h.controllability.literal().into(),
                assessment
                    .asil(h.id.as_str())
                    .map_or(Cell::Missing, |a| a.as_str().into()),
                h.safety_goal
                    .as_deref()
                    .map_or(Cell::Missing, Cell::from),
            ]
        })
        .collect();
    Table {
        columns: HARA_COLUMNS,
        rows,
        footnotes: Vec::new(),
    }
    .render(format)
}

/// One row per threat. Overridden risk levels carry a `*` and, in
/// Markdown, a footnote with the override rationale.
pub fn render_tara_table(model: &RiskModel, assessment: &Assessment, format: ReportFormat) -> String {
    let m = canonicalize(model);
    let mut footnotes = Vec::new();
    let rows = m
        .threats
        .iter()
        .map(|t| {
            let asset = m
                .asset(t.asset.as_str())
                .map_or_else(|| t.asset.to_string(), |a| a.name.clone());
            let risk = match assessment.risk(t.id.as_str()) {
                Some(r) if r.overridden => {
                    let rationale = t
                        .risk_override
                        .as_ref()
                        .map_or("", |o| o.rationale.as_str());
                    footnotes.push(format!(
                        "\\* {}: overridden from {} to {}: {}",
                        t.id, r.computed, r.effective, rationale
                    ));
                    Cell::Text(format!("{}*", r.effective))
                }
                Some(r) => Cell::Text(r.effective.to_string()),
                None => Cell::Missing,
            };
            vec![
                code(t.limitation),
                asset.into(),
                t.scenario.as_str().into(),
                t.impact.name().into(),
                t.feasibility.name().into(),
                risk,
                t.treatment.name().into(),
            ]
        })
        .collect();
    Table {
        columns: TARA_COLUMNS,
        rows,
        footnotes,
    }
    .render(format)
}

/// One row per protection entry, with the scenarios of the threats that
/// target the same (asset, limitation) joined by `; `.
pub fn render_asset_table(model: &RiskModel, format: ReportFormat) -> String {
    let m = canonicalize(model);
    let mut rows = Vec::new();
    for asset in &m.assets {
        for p in &asset.protections {
            let scenarios: Vec<&str> = m
                .threats
                .iter()
                .filter(|t| t.asset == asset.id && t.limitation == p.limitation)
                .map(|t| t.scenario.as_str())
                .collect();
            rows.push(vec![
                asset.name.as_str().into(),
                code(p.limitation),
                p.property.name().into(),
                p.goal.as_str().into(),
                scenarios.join("; ").into(),
            ]);
        }
    }
    Table {
        columns: ASSET_COLUMNS,
        rows,
        footnotes: Vec::new(),
    }
    .render(format)
}

/// Per-limitation summary: hazard, threat and cross-link counts with the
/// worst ASIL and worst effective risk (`-` when there is none).
pub fn render_trace_matrix(model: &RiskModel, assessment: &Assessment, format: ReportFormat) -> String {
    let rows = Limitation::ALL
        .iter()
        .map(|&lim| {
            let hazards: Vec<_> = model.hazards.iter().filter(|h| h.limitation == lim).collect();
            let threats: Vec<_> = model.threats.iter().filter(|t| t.limitation == lim).collect();
            let links = assessment
                .cross_links
                .iter()
                .filter(|l| l.limitation == Some(lim))
                .count();
            let worst_asil = hazards
                .iter()
                .filter_map(|h| assessment.asil(h.id.as_str()))
                .max()
                .map_or_else(|| "-".to_string(), |a| a.to_string());
            let worst_risk = threats
                .iter()
                .filter_map(|t| assessment.risk(t.id.as_str()))
                .map(|r| r.effective)
                .max()
                .map_or_else(|| "-".to_string(), |r| r.to_string());
            vec![
                code(lim),
                Cell::Count(hazards.len()),
                Cell::Count(threats.len()),
                Cell::Count(links),
                worst_asil.into(),
                worst_risk.into(),
            ]
        })
        .collect();
    Table {
        columns: TRACE_COLUMNS,
        rows,
        footnotes: Vec::new(),
    }
    .render(format)
}

pub fn render_table(
    kind: TableKind,
    model: &RiskModel,
    assessment: &Assessment,
    format: ReportFormat,
) -> String {
    match kind {
        TableKind::Hara => render_hara_table(model, assessment, format),
        TableKind::Tara => render_tara_table(model, assessment, format),
        TableKind::Assets => render_asset_table(model, format),
        TableKind::Trace => render_trace_matrix(model, assessment, format),
    }
}
