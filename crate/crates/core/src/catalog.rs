//! Which standards address which DNN limitations.
//!
//! Compiled-in reference data; entries are listed oldest first.

use thiserror::Error;

use crate::diag::{codes, Diagnostic};
use crate::model::Limitation::{self, *};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct StandardEntry {
    pub id: &'static str,
    pub year: u16,
    pub description: &'static str,
    pub covers: &'static [Limitation],
}

impl StandardEntry {
    pub fn covers(&self, limitation: Limitation) -> bool {
        self.covers.contains(&limitation)
    }
}

pub static STANDARDS: [StandardEntry; 9] = [
    StandardEntry {
        id: "ISO 26262",
        year: 2018,
        description: "Functional safety of road vehicle E/E systems; defines HARA and ASILs.",
        covers: &[],
    },
    StandardEntry {
        id: "ISO/IEC TR 24028",
        year: 2020,
        description: "Overview of trustworthiness in artificial intelligence.",
        covers: &[Generalization, Explainability, Robustness],
    },
    StandardEntry {
        id: "ISO/SAE 21434",
        year: 2021,
        description: "Road vehicle cybersecurity engineering; defines TARA.",
        covers: &[Robustness],
    },
    StandardEntry {
        id: "ISO 21448",
        year: 2022,
        description: "Safety of the intended functionality (SOTIF).",
        covers: &[Generalization, Plausibility, Robustness],
    },
    StandardEntry {
        id: "ISO PAS 8800",
        year: 2022,
        description: "Safety of AI-based components in road vehicles.",
        covers: &[Generalization, Efficiency, Robustness],
    },
    StandardEntry {
        id: "ANSI/UL 4600",
        year: 2022,
        description: "Safety case standard for autonomous products, including ML components.",
        covers: &[Generalization, Efficiency, Explainability, Plausibility, Robustness],
    },
    StandardEntry {
        id: "ISO/IEC TR 24029",
        year: 2022,
        description: "Methods for assessing the robustness of neural networks.",
        covers: &[Robustness],
    },
    StandardEntry {
        id: "ISO/IEC TR 5469",
        year: 2024,
        description: "Functional safety and AI systems.",
        covers: &[Generalization, Explainability, Robustness],
    },
    StandardEntry {
        id: "EU AI Act",
        year: 2024,
        description: "EU regulation laying down harmonised rules on artificial intelligence.",
        covers: &[Generalization, Explainability, Robustness],
    },
];

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CatalogError {
    #[error("unknown standard `{0}`")]
    UnknownStandard(String),
}

impl CatalogError {
    pub fn to_diagnostic(&self) -> Diagnostic {
        match self {
            CatalogError::UnknownStandard(_) => Diagnostic::error(codes::UNKNOWN_STD, self.to_string()),
        }
    }
}

/// Entries covering `limitation`, in catalog order.
pub fn standards_for(limitation: Limitation) -> Vec<&'static StandardEntry> {
    STANDARDS.iter().filter(|s| s.covers(limitation)).collect()
}

pub fn find_standard(id: &str) -> Result<&'static StandardEntry, CatalogError> {
    let wanted = id.trim();
    STANDARDS
        .iter()
        .find(|s| s.id.eq_ignore_ascii_case(wanted))
        .ok_or_else(|| CatalogError::UnknownStandard(wanted.to_string()))
}

/// Coverage set of the standard named `id` (case-insensitive), in
/// limitation order.
pub fn limitations_for(id: &str) -> Result<Vec<Limitation>, CatalogError> {
    let entry = find_standard(id)?;
    let mut covers = entry.covers.to_vec();
    covers.sort();
    Ok(covers)
}
