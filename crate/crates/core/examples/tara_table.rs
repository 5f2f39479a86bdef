//! Threat analysis of the bundled model, including the one threat whose
//! risk level was set by hand.
//!
//! ```text
//! cargo run --example tara_table
//! ```

use haratara::report::{render_tara_table, ReportFormat};
use haratara::tables::default_risk_matrix;

fn main() {
    let model = haratara::parse_model(haratara::fixture::AD_PERCEPTION).expect("fixture parses");
    let assessment = haratara::assess(&model, &default_risk_matrix());

    print!("{}", render_tara_table(&model, &assessment, ReportFormat::Markdown));
    println!();

    for (id, r) in assessment.threat_ratings.iter().filter(|(_, r)| r.overridden) {
        println!("{id}: matrix says {}, analyst says {}", r.computed, r.effective);
    }
    for d in &assessment.diagnostics {
        println!("{d}");
    }
}
