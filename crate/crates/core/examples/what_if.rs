//! Sensitivity of the ratings to single input changes: every exposure class
//! for hazard H-G and every feasibility level for threat T-R1.
//!
//! ```text
//! cargo run --example what_if
//! ```

use haratara::analysis::{what_if, WhatIfOverride};
use haratara::model::{ExposureClass, Literal, QualLevel};
use haratara::tables::default_risk_matrix;

fn main() {
    let model = haratara::parse_model(haratara::fixture::AD_PERCEPTION).expect("fixture parses");
    let matrix = default_risk_matrix();

    let sweep = |target: &str, field: &str, values: Vec<&str>| {
        for v in values {
            let set = [WhatIfOverride::new(target, field, v)];
            let deltas = what_if(&model, &matrix, &set).expect("valid override");
            let shown = if deltas.is_empty() {
                "unchanged".to_string()
            } else {
                deltas.iter().map(|d| d.to_string()).collect::<Vec<_>>().join(", ")
            };
            println!("{target}.{field}={v:<6} {shown}");
        }
    };
    sweep("H-G", "exposure", ExposureClass::ALL.iter().map(|e| e.literal()).collect());
    sweep("T-R1", "feasibility", QualLevel::ALL.iter().map(|q| q.literal()).collect());

    // Several changes at once are applied together.
    let combined: Vec<WhatIfOverride> = ["H-P.controllability=C3", "T-E2.impact=high"]
        .iter()
        .map(|s| s.parse().unwrap())
        .collect();
    for d in what_if(&model, &matrix, &combined).unwrap() {
        println!("{d}");
    }

    let bad = [WhatIfOverride::new("H-G", "impact", "high")];
    for e in what_if(&model, &matrix, &bad).unwrap_err() {
        println!("{e}");
    }
}
