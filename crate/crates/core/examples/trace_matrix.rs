//! Safety/security interdependencies: hazards and threats that share a DNN
//! limitation, plus a per-limitation summary in JSON.
//!
//! ```text
//! cargo run --example trace_matrix
//! ```

use haratara::report::{render_trace_matrix, ReportFormat};
use haratara::tables::default_risk_matrix;

fn main() {
    let model = haratara::parse_model(haratara::fixture::AD_PERCEPTION).expect("fixture parses");
    let assessment = haratara::assess(&model, &default_risk_matrix());

    for h in &model.hazards {
        let threats: Vec<&str> = assessment
            .links_of_hazard(h.id.as_str())
            .map(|l| l.threat.as_str())
            .collect();
        println!("{} ({}) <-> {}", h.id, assessment.asil(h.id.as_str()).unwrap(), threats.join(", "));
    }
    println!();
    print!("{}", render_trace_matrix(&model, &assessment, ReportFormat::Json));
}
