use std::fmt;

use super::Assessment;
use crate::diag::{codes, Diagnostic, Severity, Subject, SubjectKind};
use crate::model::{Limitation, Literal, QualLevel, RiskModel, Treatment};
use crate::tables::AsilLevel;

/// The lint catalog.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum LintRule {
    /// A threat's (asset, limitation) pair has no `protect` entry on that asset.
    UnprotectedThreat,
    /// A hazard rated ASIL A or higher has no safety goal.
    MissingSafetyGoal,
    /// Acceptance chosen for a Medium or High effective risk.
    AcceptedRisk,
    /// A threat uses a risk override.
    RiskOverride,
    /// A limitation is analyzed on only one side (hazards or threats).
    OneSidedLimitation,
    /// A hazard has no cross-linked threat.
    UnlinkedHazard,
}

impl LintRule {
    pub const ALL: [LintRule; 6] = [
        LintRule::UnprotectedThreat,
        LintRule::MissingSafetyGoal,
        LintRule::AcceptedRisk,
        LintRule::RiskOverride,
        LintRule::OneSidedLimitation,
        LintRule::UnlinkedHazard,
    ];

    /// Short catalog name, `L1` to `L6`.
    pub fn name(self) -> &'static str {
        match self {
            LintRule::UnprotectedThreat => "L1",
            LintRule::MissingSafetyGoal => "L2",
            LintRule::AcceptedRisk => "L3",
            LintRule::RiskOverride => "L4",
            LintRule::OneSidedLimitation => "L5",
            LintRule::UnlinkedHazard => "L6",
        }
    }

    /// Diagnostic codes the rule can emit.
    pub fn codes(self) -> &'static [&'static str] {
        match self {
            LintRule::UnprotectedThreat => &[codes::UNPROTECTED],
            LintRule::MissingSafetyGoal => &[codes::NO_SAFETY_GOAL],
            LintRule::AcceptedRisk => &[codes::ACCEPT_HIGH, codes::ACCEPT_MEDIUM],
            LintRule::RiskOverride => &[codes::OVERRIDE],
            LintRule::OneSidedLimitation => &[codes::ONE_SIDED],
            LintRule::UnlinkedHazard => &[codes::UNLINKED],
        }
    }

    pub fn for_code(code: &str) -> Option<LintRule> {
        LintRule::ALL.into_iter().find(|r| r.codes().contains(&code))
    }
}

impl fmt::Display for LintRule {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// Runs every rule of the catalog. `assessment` needs ratings and
/// cross-links; its diagnostics are ignored.
pub fn lint(model: &RiskModel, assessment: &Assessment) -> Vec<Diagnostic> {
    let mut out = Vec::new();

    // L1
    for (i, t) in model.threats.iter().enumerate() {
        let Some(asset) = model.asset(t.asset.as_str()) else {
            continue;
        };
        if asset.protection_for(t.limitation).is_none() {
            out.push(
                Diagnostic::error(
                    codes::UNPROTECTED,
                    format!(
                        "threat `{}` targets asset `{}` for {} but the asset has no `protect ... for {}` goal",
                        t.id,
                        asset.id,
                        t.limitation,
                        t.limitation.literal()
                    ),
                )
                .with_subject(Subject::new(SubjectKind::Threat, i).field("asset")),
            );
        }
    }

    // L2
    for (i, h) in model.hazards.iter().enumerate() {
        let Some(asil) = assessment.asil(h.id.as_str()) else {
            continue;
        };
        if asil >= AsilLevel::A && h.safety_goal.is_none() {
            out.push(
                Diagnostic::error(
                    codes::NO_SAFETY_GOAL,
                    format!("hazard `{}` is rated ASIL {asil} but has no safety_goal", h.id),
                )
                .with_subject(Subject::new(SubjectKind::Hazard, i).field("id")),
            );
        }
    }

    // L3
    for (i, t) in model.threats.iter().enumerate() {
        if t.treatment != Treatment::Acceptance {
            continue;
        }
        let Some(rating) = assessment.risk(t.id.as_str()) else {
            continue;
        };
        let (severity, code) = match rating.effective {
            QualLevel::High => (Severity::Error, codes::ACCEPT_HIGH),
            QualLevel::Medium => (Severity::Warning, codes::ACCEPT_MEDIUM),
            QualLevel::Low => continue,
        };
        out.push(
            Diagnostic::new(
                severity,
                code,
                format!(
                    "threat `{}` accepts a {} risk; acceptance is reserved for Low risk",
                    t.id, rating.effective
                ),
            )
            .with_subject(Subject::new(SubjectKind::Threat, i).field("treatment")),
        );
    }

    // L4
    for (i, t) in model.threats.iter().enumerate() {
        let (Some(o), Some(rating)) = (&t.risk_override, assessment.risk(t.id.as_str())) else {
            continue;
        };
        out.push(
            Diagnostic::warning(
                codes::OVERRIDE,
                format!(
                    "risk of threat `{}` overridden to {} (matrix gives {}): {}",
                    t.id, o.level, rating.computed, o.rationale
                ),
            )
            .with_subject(Subject::new(SubjectKind::Threat, i).field("override")),
        );
    }

    // L5
    for &lim in Limitation::ALL {
        let hazard = model.hazards.iter().position(|h| h.limitation == lim);
        let threat = model.threats.iter().position(|t| t.limitation == lim);
        match (hazard, threat) {
            (Some(i), None) => out.push(
                Diagnostic::warning(
                    codes::ONE_SIDED,
                    format!("limitation {lim} appears in hazards but in no threat"),
                )
                .with_subject(Subject::new(SubjectKind::Hazard, i).field("limitation")),
            ),
            (None, Some(i)) => out.push(
                Diagnostic::warning(
                    codes::ONE_SIDED,
                    format!("limitation {lim} appears in threats but in no hazard"),
                )
                .with_subject(Subject::new(SubjectKind::Threat, i).field("limitation")),
            ),
            _ => {}
        }
    }

    // L6
    for (i, h) in model.hazards.iter().enumerate() {
        if assessment.links_of_hazard(h.id.as_str()).next().is_none() {
            out.push(
                Diagnostic::note(
                    codes::UNLINKED,
                    format!("hazard `{}` has no cross-linked threat", h.id),
                )
                .with_subject(Subject::new(SubjectKind::Hazard, i).field("id")),
            );
        }
    }

    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rule_codes_are_disjoint_and_resolvable() {
        for rule in LintRule::ALL {
            for code in rule.codes() {
                assert_eq!(LintRule::for_code(code), Some(rule));
                assert!(codes::ALL.contains(code));
            }
        }
        assert_eq!(LintRule::for_code(codes::REF), None);
    }

    #[test]
    fn code_prefix_matches_rule_severity() {
        assert!(codes::NO_SAFETY_GOAL.starts_with("E-"));
        assert!(codes::OVERRIDE.starts_with("W-"));
        assert!(codes::UNLINKED.starts_with("N-"));
    }
}
