//! Hazard analysis of the bundled perception model: one ASIL per hazard.
//!
//! ```text
//! cargo run --example hara_table
//! ```

use haratara::report::{render_hara_table, ReportFormat};
use haratara::tables::default_risk_matrix;

fn main() {
    let model = haratara::parse_model(haratara::fixture::AD_PERCEPTION).expect("fixture parses");
    let assessment = haratara::assess(&model, &default_risk_matrix());

    for (id, asil) in &assessment.hazard_ratings {
        let h = model.hazard(id.as_str()).unwrap();
        println!(
            "{id:<4} {:<15} {} {} {} -> {asil}",
            h.limitation.name(),
            h.severity,
            h.exposure,
            h.controllability
        );
    }
    println!();
    print!("{}", render_hara_table(&model, &assessment, ReportFormat::Markdown));
}
