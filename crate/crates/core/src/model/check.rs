use std::collections::HashSet;

use super::{Id, RiskModel};
use crate::diag::{codes, Diagnostic, Subject, SubjectKind};

/// Referential-integrity findings for `model`. Empty iff the model is
/// well-formed.
pub fn validate_model(model: &RiskModel) -> Vec<Diagnostic> {
    let mut out = Vec::new();
    let item = Subject::new(SubjectKind::Item, 0);

    require_text(&mut out, &model.item.name, "item name", item.field("name"));
    if model.item.functions.is_empty() {
        out.push(
            Diagnostic::error(codes::EMPTY, "item declares no functions").with_subject(item),
        );
    }
    for (i, function) in model.item.functions.iter().enumerate() {
        if function.trim().is_empty() {
            out.push(
                Diagnostic::error(codes::EMPTY, format!("function #{} of the item is empty", i + 1))
                    .with_subject(item.field("function")),
            );
        }
    }

    let mut asset_ids = HashSet::new();
    for (i, asset) in model.assets.iter().enumerate() {
        let subject = Subject::new(SubjectKind::Asset, i);
        check_id(&mut out, &asset.id, "asset", &mut asset_ids, subject);
        require_text(&mut out, &asset.name, "asset name", subject.field("name"));
        if asset.protections.is_empty() {
            out.push(
                Diagnostic::error(
                    codes::EMPTY,
                    format!("asset `{}` declares no protections", asset.id),
                )
                .with_subject(subject),
            );
        }
        let mut pairs = HashSet::new();
        for p in &asset.protections {
            if !pairs.insert((p.limitation, p.property)) {
                out.push(
                    Diagnostic::error(
                        codes::DUP,
                        format!(
                            "asset `{}` protects {} for {} more than once",
                            asset.id, p.property, p.limitation
                        ),
                    )
                    .with_subject(subject.field("protect")),
                );
            }
            require_text(&mut out, &p.goal, "security goal", subject.field("protect"));
        }
    }

    let mut hazard_ids = HashSet::new();
    for (i, hazard) in model.hazards.iter().enumerate() {
        let subject = Subject::new(SubjectKind::Hazard, i);
        check_id(&mut out, &hazard.id, "hazard", &mut hazard_ids, subject);
        require_text(
            &mut out,
            &hazard.description,
            "hazard description",
            subject.field("description"),
        );
        if let Some(goal) = &hazard.safety_goal {
            require_text(&mut out, goal, "safety goal", subject.field("safety_goal"));
        }
    }

    let known_assets: HashSet<&str> = model.assets.iter().map(|a| a.id.as_str()).collect();
    let mut threat_ids = HashSet::new();
    for (i, threat) in model.threats.iter().enumerate() {
        let subject = Subject::new(SubjectKind::Threat, i);
        check_id(&mut out, &threat.id, "threat", &mut threat_ids, subject);
        if !known_assets.contains(threat.asset.as_str()) {
            out.push(
                Diagnostic::error(
                    codes::REF,
                    format!(
                        "threat `{}` targets undeclared asset `{}`",
                        threat.id, threat.asset
                    ),
                )
                .with_subject(subject.field("asset")),
            );
        }
        require_text(&mut out, &threat.scenario, "threat scenario", subject.field("scenario"));
        if let Some(ovr) = &threat.risk_override {
            require_text(
                &mut out,
                &ovr.rationale,
                "override rationale",
                subject.field("override"),
            );
        }
    }

    let known_hazards: HashSet<&str> = model.hazards.iter().map(|h| h.id.as_str()).collect();
    let known_threats: HashSet<&str> = model.threats.iter().map(|t| t.id.as_str()).collect();
    for (i, link) in model.links.iter().enumerate() {
        let subject = Subject::new(SubjectKind::Link, i);
        if !known_hazards.contains(link.hazard.as_str()) {
            out.push(
                Diagnostic::error(
                    codes::REF,
                    format!("link names undeclared hazard `{}`", link.hazard),
                )
                .with_subject(subject.field("hazard")),
            );
        }
        if !known_threats.contains(link.threat.as_str()) {
            out.push(
                Diagnostic::error(
                    codes::REF,
                    format!("link names undeclared threat `{}`", link.threat),
                )
                .with_subject(subject.field("threat")),
            );
        }
    }

    out
}

fn check_id<'a>(
    out: &mut Vec<Diagnostic>,
    id: &'a Id,
    kind: &str,
    seen: &mut HashSet<&'a str>,
    subject: Subject,
) {
    if !id.is_valid() {
        out.push(
            Diagnostic::error(codes::ID, format!("`{id}` is not a valid {kind} identifier"))
                .with_subject(subject.field("id")),
        );
    }
    if !seen.insert(id.as_str()) {
        out.push(
            Diagnostic::error(codes::DUP, format!("{kind} `{id}` is declared more than once"))
                .with_subject(subject.field("id")),
        );
    }
}

fn require_text(out: &mut Vec<Diagnostic>, text: &str, what: &str, subject: Subject) {
    if text.trim().is_empty() {
        out.push(
            Diagnostic::error(codes::EMPTY, format!("{what} must not be empty")).with_subject(subject),
        );
    }
}

/// Collapse internal whitespace runs to one space and trim the ends.
pub(crate) fn normalize_text(text: &str) -> String {
    text.split_whitespace().collect::<Vec<_>>().join(" ")
}

/// Equivalent model in canonical form: elements sorted by id, protections
/// by (limitation, property), links sorted and deduplicated, and text
/// whitespace-normalized. Idempotent.
pub fn canonicalize(model: &RiskModel) -> RiskModel {
    let mut m = model.clone();

    m.item.name = normalize_text(&m.item.name);
    for f in &mut m.item.functions {
        *f = normalize_text(f);
    }

    for asset in &mut m.assets {
        asset.name = normalize_text(&asset.name);
        for p in &mut asset.protections {
            p.goal = normalize_text(&p.goal);
        }
        asset.protections.sort_by_key(|p| (p.limitation, p.property));
    }
    m.assets.sort_by(|a, b| a.id.cmp(&b.id));

    for h in &mut m.hazards {
        h.description = normalize_text(&h.description);
        if let Some(goal) = &mut h.safety_goal {
            *goal = normalize_text(goal);
        }
    }
    m.hazards.sort_by(|a, b| a.id.cmp(&b.id));

    for t in &mut m.threats {
        t.scenario = normalize_text(&t.scenario);
        if let Some(d) = &mut t.damage {
            *d = normalize_text(d);
        }
        if let Some(o) = &mut t.risk_override {
            o.rationale = normalize_text(&o.rationale);
        }
    }
    m.threats.sort_by(|a, b| a.id.cmp(&b.id));

    m.links.sort();
    m.links.dedup();
    m
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::model::*;

    fn hazard(id: &str, description: &str) -> Hazard {
        Hazard {
            id: Id::from(id),
            limitation: Limitation::Robustness,
            description: description.to_string(),
            severity: SeverityClass::S3,
            exposure: ExposureClass::E4,
            controllability: ControllabilityClass::C3,
            safety_goal: Some("goal".into()),
        }
    }

    fn asset(id: &str) -> Asset {
        Asset {
            id: Id::from(id),
            name: "Sensor data".into(),
            protections: vec![Protection {
                limitation: Limitation::Robustness,
                property: SecurityProperty::Integrity,
                goal: "Prevent injection".into(),
            }],
        }
    }

    fn threat(id: &str, asset: &str) -> Threat {
        Threat {
            id: Id::from(id),
            asset: Id::from(asset),
            limitation: Limitation::Robustness,
            scenario: "sticker".into(),
            impact: QualLevel::High,
            feasibility: QualLevel::Medium,
            treatment: Treatment::Reduction,
            damage: None,
            risk_override: None,
        }
    }

    fn minimal() -> RiskModel {
        RiskModel::new("x", ["f".to_string()])
    }

    #[test]
    fn minimal_model_is_valid() {
        assert!(validate_model(&minimal()).is_empty());
    }

    #[test]
    fn dangling_asset_reference() {
        let mut m = minimal();
        m.assets.push(asset("A1"));
        m.threats.push(threat("T1", "A9"));
        let d = validate_model(&m);
        assert_eq!(d.len(), 1);
        assert_eq!(d[0].code, codes::REF);
        assert!(d[0].is_error());
        assert_eq!(d[0].subject.unwrap().field, Some("asset"));
    }

    #[test]
    fn duplicate_hazard_ids() {
        let mut m = minimal();
        m.hazards.push(hazard("H1", "a"));
        m.hazards.push(hazard("H1", "b"));
        let d = validate_model(&m);
        assert_eq!(d.len(), 1);
        assert_eq!(d[0].code, codes::DUP);
        assert_eq!(d[0].subject.unwrap().index, 1);
    }

    #[test]
    fn same_id_in_different_kinds_is_fine() {
        let mut m = minimal();
        m.assets.push(asset("X1"));
        m.hazards.push(hazard("X1", "a"));
        m.threats.push(threat("X1", "X1"));
        assert!(validate_model(&m).is_empty());
    }

    #[test]
    fn dangling_link_endpoints() {
        let mut m = minimal();
        m.links.push(Link {
            hazard: Id::from("H1"),
            threat: Id::from("T1"),
        });
        let d = validate_model(&m);
        assert_eq!(d.iter().filter(|d| d.code == codes::REF).count(), 2);
    }

    #[test]
    fn empty_required_text() {
        let mut m = minimal();
        m.item.functions.push("   ".into());
        let mut h = hazard("H1", " ");
        h.safety_goal = Some(String::new());
        m.hazards.push(h);
        let mut a = asset("A1");
        a.protections.clear();
        m.assets.push(a);
        let mut t = threat("T1", "A1");
        t.risk_override = Some(RiskOverride {
            level: QualLevel::Low,
            rationale: "\t".into(),
        });
        m.threats.push(t);
        let d = validate_model(&m);
        assert_eq!(d.len(), 5, "{d:#?}");
        assert!(d.iter().all(|d| d.code == codes::EMPTY));
    }

    #[test]
    fn duplicate_protection_pair() {
        let mut m = minimal();
        let mut a = asset("A1");
        a.protections.push(a.protections[0].clone());
        m.assets.push(a);
        let d = validate_model(&m);
        assert_eq!(d.len(), 1);
        assert_eq!(d[0].code, codes::DUP);
    }

    #[test]
    fn bad_identifier() {
        let mut m = minimal();
        m.hazards.push(hazard("1H", "a"));
        let d = validate_model(&m);
        assert_eq!(d[0].code, codes::ID);
    }

    #[test]
    fn canonicalize_sorts_and_normalizes() {
        let mut m = minimal();
        m.hazards.push(hazard("H2", "a  b "));
        m.hazards.push(hazard("H1", "\tc\n d"));
        let link = Link {
            hazard: Id::from("H1"),
            threat: Id::from("T1"),
        };
        m.links = vec![link.clone(), link];
        let c = canonicalize(&m);
        assert_eq!(c.hazards[0].id, "H1");
        assert_eq!(c.hazards[1].id, "H2");
        assert_eq!(c.hazards[1].description, "a b");
        assert_eq!(c.hazards[0].description, "c d");
        assert_eq!(c.links.len(), 1);
        assert_eq!(canonicalize(&c), c);
    }

    #[test]
    fn canonical_model_is_fixed_point() {
        let m = minimal();
        assert_eq!(canonicalize(&m), m);
    }
}
