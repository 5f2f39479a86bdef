//! Combined hazard and threat analysis for DNN-based driving perception.
//!
//! A risk model is written in a small block language (see [`dsl`]), parsed
//! into a [`model::RiskModel`], rated with the ASIL table and an
//! impact x feasibility risk matrix ([`tables`]), linted for cross-domain
//! consistency ([`analysis`]) and rendered as tables ([`report`]). A
//! compiled-in catalog records which standards cover which limitation
//! ([`catalog`]).
//!
//! ```
//! use haratara::{analysis::assess, dsl::parse_model, fixture, tables::{default_risk_matrix, AsilLevel}};
//!
//! let model = parse_model(fixture::AD_PERCEPTION).unwrap();
//! let assessment = assess(&model, &default_risk_matrix());
//! assert_eq!(assessment.asil("H-G"), Some(AsilLevel::D));
//! ```
//!
//! The runnable programs under `examples/` walk through each capability;
//! `cargo run --example <name>` lists them.

pub mod analysis;
pub mod catalog;
pub mod cli;
pub mod diag;
pub mod dsl;
pub mod model;
pub mod report;
pub mod tables;

/// The bundled case study: a DNN perception module with three assets, five
/// hazards and nine threats.
pub mod fixture {
    pub const AD_PERCEPTION: &str = include_str!("../examples/ad_perception.rsk");
}

pub use analysis::{assess, Assessment};
pub use diag::{Diagnostic, Severity, SourceSpan};
pub use dsl::{parse_model, render_canonical};
pub use model::RiskModel;
