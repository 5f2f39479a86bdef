//! Loads a stricter risk matrix from config text, validates it, and shows
//! which threats it rates differently from the default.
//!
//! ```text
//! cargo run --example custom_matrix
//! ```

use haratara::tables::{default_risk_matrix, parse_matrix, render_matrix, validate_matrix};

const STRICT: &str = "\
# impact, feasibility, risk
low,    low,    low
low,    medium, medium
low,    high,   medium
medium, low,    medium
medium, medium, high
medium, high,   high
high,   low,    high
high,   medium, high
high,   high,   high
";

fn main() {
    let strict = parse_matrix(STRICT).expect("well-formed config");
    assert!(validate_matrix(&strict).is_empty());
    print!("{}", render_matrix(&strict));
    println!();

    let model = haratara::parse_model(haratara::fixture::AD_PERCEPTION).expect("fixture parses");
    let base = haratara::assess(&model, &default_risk_matrix());
    let tight = haratara::assess(&model, &strict);
    for (id, r) in &tight.threat_ratings {
        let before = base.risk(id.as_str()).unwrap();
        if before.computed != r.computed {
            println!("{id}: {} -> {}", before.computed, r.computed);
        }
    }
    for d in tight.diagnostics.iter().filter(|d| d.code != "W-OVR") {
        println!("{d}");
    }

    // A matrix where more feasibility lowers risk is rejected.
    let inverted = STRICT.replace("low,    high,   medium", "low,    high,   low");
    let broken = parse_matrix(&inverted).unwrap();
    for d in validate_matrix(&broken) {
        println!("{d}");
    }
}
