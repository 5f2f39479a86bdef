//! Assets, the security property protected per limitation, and the threat
//! scenarios aimed at each, as CSV.
//!
//! ```text
//! cargo run --example asset_table > assets.csv
//! ```

use haratara::report::{render_asset_table, ReportFormat};

fn main() {
    let model = haratara::parse_model(haratara::fixture::AD_PERCEPTION).expect("fixture parses");
    print!("{}", render_asset_table(&model, ReportFormat::Csv));
}
