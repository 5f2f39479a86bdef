//! Rating, cross-linking and linting of a whole model.

mod lint;
mod what_if;

use std::collections::{BTreeMap, BTreeSet};

use crate::diag::Diagnostic;
use crate::model::{Id, Limitation, QualLevel, RiskModel};
use crate::tables::{determine_asil, determine_risk, AsilLevel, RiskMatrix};

pub use lint::{lint, LintRule};
pub use what_if::{what_if, Rating, RatingDelta, WhatIfField, WhatIfOverride};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ThreatRating {
    /// Matrix lookup of impact and feasibility.
    pub computed: QualLevel,
    /// The override level when one is present, otherwise `computed`.
    pub effective: QualLevel,
    pub overridden: bool,
}

/// A hazard-threat pair expressing a safety/security interdependency.
/// `limitation` is set when both share it; a manual link between
/// different limitations has none.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct CrossLink {
    pub hazard: Id,
    pub threat: Id,
    pub limitation: Option<Limitation>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Assessment {
    pub hazard_ratings: BTreeMap<Id, AsilLevel>,
    pub threat_ratings: BTreeMap<Id, ThreatRating>,
    /// Sorted by (hazard, threat), no duplicates.
    pub cross_links: Vec<CrossLink>,
    pub diagnostics: Vec<Diagnostic>,
}

impl Assessment {
    pub fn asil(&self, hazard: &str) -> Option<AsilLevel> {
        self.hazard_ratings.get(hazard).copied()
    }

    pub fn risk(&self, threat: &str) -> Option<ThreatRating> {
        self.threat_ratings.get(threat).copied()
    }

    pub fn links_of_hazard<'a>(&'a self, hazard: &'a str) -> impl Iterator<Item = &'a CrossLink> + 'a {
        self.cross_links.iter().filter(move |l| l.hazard == hazard)
    }

    pub fn has_errors(&self) -> bool {
        crate::diag::has_errors(&self.diagnostics)
    }
}

/// Rates every hazard and threat, derives cross-links and runs the lint
/// catalog. The model must be well-formed and the matrix complete.
pub fn assess(model: &RiskModel, matrix: &RiskMatrix) -> Assessment {
    let mut assessment = rate(model, matrix);
    assessment.diagnostics = lint(model, &assessment);
    assessment
}

/// Everything but the lint pass.
pub(crate) fn rate(model: &RiskModel, matrix: &RiskMatrix) -> Assessment {
    let hazard_ratings = model
        .hazards
        .iter()
        .map(|h| {
            (
                h.id.clone(),
                determine_asil(h.severity, h.exposure, h.controllability),
            )
        })
        .collect();

    let threat_ratings = model
        .threats
        .iter()
        .map(|t| {
            let computed = determine_risk(t.impact, t.feasibility, matrix);
            let rating = match &t.risk_override {
                Some(o) => ThreatRating {
                    computed,
                    effective: o.level,
                    overridden: true,
                },
                None => ThreatRating {
                    computed,
                    effective: computed,
                    overridden: false,
                },
            };
            (t.id.clone(), rating)
        })
        .collect();

    Assessment {
        hazard_ratings,
        threat_ratings,
        cross_links: cross_links(model),
        diagnostics: Vec::new(),
    }
}

fn cross_links(model: &RiskModel) -> Vec<CrossLink> {
    let mut links = BTreeSet::new();
    for h in &model.hazards {
        for t in model.threats.iter().filter(|t| t.limitation == h.limitation) {
            links.insert(CrossLink {
                hazard: h.id.clone(),
                threat: t.id.clone(),
                limitation: Some(h.limitation),
            });
        }
    }
    for link in &model.links {
        let (Some(h), Some(t)) = (model.hazard(link.hazard.as_str()), model.threat(link.threat.as_str()))
        else {
            continue;
        };
        let shared = (h.limitation == t.limitation).then_some(h.limitation);
        links.insert(CrossLink {
            hazard: h.id.clone(),
            threat: t.id.clone(),
            limitation: shared,
        });
    }
    links.into_iter().collect()
}
