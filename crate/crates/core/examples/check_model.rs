//! Parses a small model with mistakes and prints diagnostics with source
//! positions, first for syntax problems and then for lint findings.
//!
//! ```text
//! cargo run --example check_model
//! ```

use haratara::dsl::parse_with_spans;
use haratara::tables::default_risk_matrix;

const BROKEN: &str = r#"
item "Lane keeping camera" { function "Lane detection" }

hazard H1 {
  limitation: robustnes
  description: "Lane marking misread under glare"
  severity: S3 exposure: E3 controllability: C2
}
"#;

const LINTY: &str = r#"
item "Lane keeping camera" { function "Lane detection" }

asset A-IMG "Camera frames" {
  protect integrity for R: "Detect tampered frames"
}

hazard H1 {
  limitation: robustness
  description: "Lane marking misread under glare"
  severity: S3 exposure: E4 controllability: C3
}

hazard H2 {
  limitation: efficiency
  description: "Lane estimate arrives late"
  severity: S1 exposure: E2 controllability: C2
}

threat T1 {
  asset: A-IMG
  limitation: generalization
  scenario: "Unusual road paint confuses detector"
  impact: high
  feasibility: high
  treatment: acceptance
}
"#;

fn main() {
    match parse_with_spans(BROKEN) {
        Ok(_) => println!("unexpectedly clean"),
        Err(diags) => diags.iter().for_each(|d| println!("{d}")),
    }
    println!();

    let parsed = parse_with_spans(LINTY).expect("syntactically valid");
    let mut assessment = haratara::assess(&parsed.model, &default_risk_matrix());
    parsed.source_map.locate(&mut assessment.diagnostics);
    for d in &assessment.diagnostics {
        println!("{d}");
    }
}
