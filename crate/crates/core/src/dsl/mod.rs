//! The `.rsk` risk-model language.
//!
//! ```text
//! item "DNN-based perception" {
//!   function "Object detection"
//! }
//!
//! asset A-SENSOR "Sensor data integrity" {
//!   protect integrity for robustness: "Prevent sensor data injection or modification."
//! }
//!
//! hazard H-R {
//!   limitation: robustness
//!   description: "Misclassification from crafted adversarial inputs"
//!   severity: S3
//!   exposure: E4
//!   controllability: C3
//!   safety_goal: "Ensure robustness against adversarial manipulation"
//! }
//!
//! threat T-R1 {
//!   asset: A-SENSOR
//!   limitation: robustness
//!   scenario: "Crafted object placed in the scene"
//!   impact: high
//!   feasibility: medium
//!   treatment: reduction
//! }
//!
//! link H-R -- T-R1
//! ```
//!
//! Keywords and enum literals are case-insensitive, limitations may be
//! written as their letter code (`G`, `E`, `X`, `P`, `R`), `#` starts a line
//! comment, and fields inside a block may appear in any order.

mod lexer;
mod parser;
mod printer;

pub use crate::diag::{Diagnostic, Severity, SourceSpan};
pub use parser::{parse_model, parse_with_spans, ParsedModel, SourceMap};
pub use printer::render_canonical;
