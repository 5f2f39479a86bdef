//! Domain types of a combined hazard/threat risk model.
//!
//! A [`RiskModel`] covers exactly one item. Hazards carry the S/E/C
//! judgments used for ASIL determination, threats carry impact and
//! feasibility for the cybersecurity risk matrix. Nothing here rates
//! anything; see [`crate::tables`] and [`crate::analysis`].

mod check;
mod enums;

use std::borrow::Borrow;
use std::fmt;

pub use check::{canonicalize, validate_model};
pub use enums::{
    ControllabilityClass, ExposureClass, Limitation, Literal, ParseLiteralError, QualLevel,
    SecurityProperty, SeverityClass, Treatment,
};

/// Identifier of an asset, hazard or threat.
///
/// Valid identifiers are ASCII letters, digits, `-` and `_`, start with a
/// letter, and never contain `--` (that token separates link endpoints).
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Id(String);

impl Id {
    pub fn new(id: impl Into<String>) -> Self {
        Id(id.into())
    }

    pub fn as_str(&self) -> &str {
        &self.0
    }

    pub fn is_valid(&self) -> bool {
        is_valid_id(&self.0)
    }
}

pub fn is_valid_id(text: &str) -> bool {
    let mut chars = text.chars();
    matches!(chars.next(), Some(c) if c.is_ascii_alphabetic())
        && chars.all(|c| c.is_ascii_alphanumeric() || c == '-' || c == '_')
        && !text.contains("--")
}

impl fmt::Display for Id {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.0)
    }
}

impl Borrow<str> for Id {
    fn borrow(&self) -> &str {
        &self.0
    }
}

impl From<&str> for Id {
    fn from(s: &str) -> Self {
        Id(s.to_string())
    }
}

impl PartialEq<str> for Id {
    fn eq(&self, other: &str) -> bool {
        self.0 == other
    }
}

impl PartialEq<&str> for Id {
    fn eq(&self, other: &&str) -> bool {
        self.0 == *other
    }
}

/// The vehicle-level system under analysis.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Item {
    pub name: String,
    pub functions: Vec<String>,
}

/// One protection objective on an asset: a security goal guarding a
/// security property against a limitation-rooted threat.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Protection {
    pub limitation: Limitation,
    pub property: SecurityProperty,
    pub goal: String,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Asset {
    pub id: Id,
    pub name: String,
    pub protections: Vec<Protection>,
}

impl Asset {
    /// The protection entry guarding `limitation`, if any.
    pub fn protection_for(&self, limitation: Limitation) -> Option<&Protection> {
        self.protections.iter().find(|p| p.limitation == limitation)
    }
}

/// A hazardous event rooted in a DNN limitation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Hazard {
    pub id: Id,
    pub limitation: Limitation,
    pub description: String,
    pub severity: SeverityClass,
    pub exposure: ExposureClass,
    pub controllability: ControllabilityClass,
    pub safety_goal: Option<String>,
}

/// An analyst's replacement for a matrix-derived risk level.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RiskOverride {
    pub level: QualLevel,
    pub rationale: String,
}

/// A threat scenario against one asset.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Threat {
    pub id: Id,
    pub asset: Id,
    pub limitation: Limitation,
    pub scenario: String,
    pub impact: QualLevel,
    pub feasibility: QualLevel,
    pub treatment: Treatment,
    pub damage: Option<String>,
    pub risk_override: Option<RiskOverride>,
}

/// A manual hazard-threat link.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Link {
    pub hazard: Id,
    pub threat: Id,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RiskModel {
    pub item: Item,
    pub assets: Vec<Asset>,
    pub hazards: Vec<Hazard>,
    pub threats: Vec<Threat>,
    pub links: Vec<Link>,
}

impl RiskModel {
    /// A model with only an item and the given functions.
    pub fn new(item: impl Into<String>, functions: impl IntoIterator<Item = String>) -> Self {
        RiskModel {
            item: Item {
                name: item.into(),
                functions: functions.into_iter().collect(),
            },
            assets: Vec::new(),
            hazards: Vec::new(),
            threats: Vec::new(),
            links: Vec::new(),
        }
    }

    pub fn asset(&self, id: &str) -> Option<&Asset> {
        self.assets.iter().find(|a| a.id == id)
    }

    pub fn hazard(&self, id: &str) -> Option<&Hazard> {
        self.hazards.iter().find(|h| h.id == id)
    }

    pub fn threat(&self, id: &str) -> Option<&Threat> {
        self.threats.iter().find(|t| t.id == id)
    }

    pub fn hazard_mut(&mut self, id: &str) -> Option<&mut Hazard> {
        self.hazards.iter_mut().find(|h| h.id == id)
    }

    pub fn threat_mut(&mut self, id: &str) -> Option<&mut Threat> {
        self.threats.iter_mut().find(|t| t.id == id)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn identifier_rules() {
        for ok in ["H1", "H-G", "T_R1", "a", "Asset-2_b", "x-"] {
            assert!(is_valid_id(ok), "{ok}");
        }
        for bad in ["", "1H", "-H", "_x", "H G", "H.1", "a--b", "Ä"] {
            assert!(!is_valid_id(bad), "{bad}");
        }
    }
}
