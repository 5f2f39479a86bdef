//! Builds a model in code, prints it in canonical DSL form and reads it
//! back.
//!
//! ```text
//! cargo run --example canonical_format
//! ```

use haratara::model::*;
use haratara::{parse_model, render_canonical};

fn main() {
    let mut model = RiskModel::new("Radar   fusion", ["Object tracking".to_string()]);
    model.assets.push(Asset {
        id: Id::from("A-TRK"),
        name: "Track list".into(),
        protections: vec![
            Protection {
                limitation: Limitation::Robustness,
                property: SecurityProperty::Integrity,
                goal: "Reject \"ghost\" targets".into(),
            },
            Protection {
                limitation: Limitation::Efficiency,
                property: SecurityProperty::Availability,
                goal: "Publish within\n 50 ms".into(),
            },
        ],
    });
    model.threats.push(Threat {
        id: Id::from("T-2"),
        asset: Id::from("A-TRK"),
        limitation: Limitation::Robustness,
        scenario: "Spoofed radar echoes".into(),
        impact: QualLevel::High,
        feasibility: QualLevel::Low,
        treatment: Treatment::Reduction,
        damage: None,
        risk_override: None,
    });
    model.hazards.push(Hazard {
        id: Id::from("H-1"),
        limitation: Limitation::Robustness,
        description: "Phantom object triggers emergency braking".into(),
        severity: SeverityClass::S2,
        exposure: ExposureClass::E2,
        controllability: ControllabilityClass::C3,
        safety_goal: Some("Avoid unintended braking".into()),
    });
    assert!(validate_model(&model).is_empty());

    let text = render_canonical(&model);
    print!("{text}");
    assert_eq!(parse_model(&text), Ok(canonicalize(&model)));
}
