use std::fmt;
use std::str::FromStr;

use thiserror::Error;

/// Closed enumerations that have a canonical text literal in the model
/// language. Parsing is case-insensitive.
pub trait Literal: Sized + Copy + 'static {
    const ALL: &'static [Self];
    /// What the enumeration is called in messages.
    const KIND: &'static str;

    /// Canonical spelling used when printing models.
    fn literal(self) -> &'static str;

    /// Extra accepted spellings besides the canonical one.
    fn aliases(self) -> &'static [&'static str] {
        &[]
    }

    fn parse_literal(text: &str) -> Option<Self> {
        Self::ALL.iter().copied().find(|v| {
            v.literal().eq_ignore_ascii_case(text)
                || v.aliases().iter().any(|a| a.eq_ignore_ascii_case(text))
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("unknown {kind} `{text}`")]
pub struct ParseLiteralError {
    pub kind: &'static str,
    pub text: String,
}

macro_rules! literal_from_str {
    ($($ty:ty),*) => {$(
        impl FromStr for $ty {
            type Err = ParseLiteralError;

            fn from_str(s: &str) -> Result<Self, Self::Err> {
                <$ty as Literal>::parse_literal(s.trim()).ok_or_else(|| ParseLiteralError {
                    kind: <$ty as Literal>::KIND,
                    text: s.to_string(),
                })
            }
        }
    )*};
}

/// The five classes of DNN insufficiency the workflow is organized around.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Limitation {
    Generalization,
    Efficiency,
    Explainability,
    Plausibility,
    Robustness,
}

impl Limitation {
    /// Single-letter code used in table columns.
    pub fn code(self) -> char {
        match self {
            Limitation::Generalization => 'G',
            Limitation::Efficiency => 'E',
            Limitation::Explainability => 'X',
            Limitation::Plausibility => 'P',
            Limitation::Robustness => 'R',
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            Limitation::Generalization => "Generalization",
            Limitation::Efficiency => "Efficiency",
            Limitation::Explainability => "Explainability",
            Limitation::Plausibility => "Plausibility",
            Limitation::Robustness => "Robustness",
        }
    }
}

impl Literal for Limitation {
    const ALL: &'static [Self] = &[
        Limitation::Generalization,
        Limitation::Efficiency,
        Limitation::Explainability,
        Limitation::Plausibility,
        Limitation::Robustness,
    ];
    const KIND: &'static str = "limitation";

    fn literal(self) -> &'static str {
        match self {
            Limitation::Generalization => "generalization",
            Limitation::Efficiency => "efficiency",
            Limitation::Explainability => "explainability",
            Limitation::Plausibility => "plausibility",
            Limitation::Robustness => "robustness",
        }
    }

    fn aliases(self) -> &'static [&'static str] {
        match self {
            Limitation::Generalization => &["G"],
            Limitation::Efficiency => &["E"],
            Limitation::Explainability => &["X"],
            Limitation::Plausibility => &["P"],
            Limitation::Robustness => &["R"],
        }
    }
}

impl fmt::Display for Limitation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum SecurityProperty {
    Confidentiality,
    Integrity,
    Availability,
    NonRepudiation,
}

impl SecurityProperty {
    pub fn name(self) -> &'static str {
        match self {
            SecurityProperty::Confidentiality => "Confidentiality",
            SecurityProperty::Integrity => "Integrity",
            SecurityProperty::Availability => "Availability",
            SecurityProperty::NonRepudiation => "Non-repudiation",
        }
    }
}

impl Literal for SecurityProperty {
    const ALL: &'static [Self] = &[
        SecurityProperty::Confidentiality,
        SecurityProperty::Integrity,
        SecurityProperty::Availability,
        SecurityProperty::NonRepudiation,
    ];
    const KIND: &'static str = "security property";

    fn literal(self) -> &'static str {
        match self {
            SecurityProperty::Confidentiality => "confidentiality",
            SecurityProperty::Integrity => "integrity",
            SecurityProperty::Availability => "availability",
            SecurityProperty::NonRepudiation => "non-repudiation",
        }
    }

    fn aliases(self) -> &'static [&'static str] {
        match self {
            SecurityProperty::NonRepudiation => &["nonrepudiation", "non_repudiation"],
            _ => &[],
        }
    }
}

impl fmt::Display for SecurityProperty {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum SeverityClass {
    S0,
    S1,
    S2,
    S3,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum ExposureClass {
    E0,
    E1,
    E2,
    E3,
    E4,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum ControllabilityClass {
    C0,
    C1,
    C2,
    C3,
}

macro_rules! rating_class {
    ($ty:ident, $kind:literal, [$($variant:ident),*]) => {
        impl $ty {
            /// Position within the class, `0` for the zero class.
            pub fn rank(self) -> usize {
                self as usize
            }
        }

        impl Literal for $ty {
            const ALL: &'static [Self] = &[$($ty::$variant),*];
            const KIND: &'static str = $kind;

            fn literal(self) -> &'static str {
                match self {
                    $($ty::$variant => stringify!($variant),)*
                }
            }
        }

        impl fmt::Display for $ty {
            fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
                f.write_str(self.literal())
            }
        }
    };
}

rating_class!(SeverityClass, "severity class", [S0, S1, S2, S3]);
rating_class!(ExposureClass, "exposure class", [E0, E1, E2, E3, E4]);
rating_class!(ControllabilityClass, "controllability class", [C0, C1, C2, C3]);

/// Three-step qualitative scale shared by impact, feasibility and risk.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum QualLevel {
    Low,
    Medium,
    High,
}

impl QualLevel {
    pub fn index(self) -> usize {
        self as usize
    }

    pub fn name(self) -> &'static str {
        match self {
            QualLevel::Low => "Low",
            QualLevel::Medium => "Medium",
            QualLevel::High => "High",
        }
    }
}

impl Literal for QualLevel {
    const ALL: &'static [Self] = &[QualLevel::Low, QualLevel::Medium, QualLevel::High];
    const KIND: &'static str = "level";

    fn literal(self) -> &'static str {
        match self {
            QualLevel::Low => "low",
            QualLevel::Medium => "medium",
            QualLevel::High => "high",
        }
    }
}

impl fmt::Display for QualLevel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// Risk treatment decision for a threat scenario.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Treatment {
    Avoidance,
    Reduction,
    Sharing,
    Acceptance,
}

impl Treatment {
    pub fn name(self) -> &'static str {
        match self {
            Treatment::Avoidance => "Avoidance",
            Treatment::Reduction => "Reduction",
            Treatment::Sharing => "Sharing",
            Treatment::Acceptance => "Acceptance",
        }
    }
}

impl Literal for Treatment {
    const ALL: &'static [Self] = &[
        Treatment::Avoidance,
        Treatment::Reduction,
        Treatment::Sharing,
        Treatment::Acceptance,
    ];
    const KIND: &'static str = "treatment";

    fn literal(self) -> &'static str {
        match self {
            Treatment::Avoidance => "avoidance",
            Treatment::Reduction => "reduction",
            Treatment::Sharing => "sharing",
            Treatment::Acceptance => "acceptance",
        }
    }
}

impl fmt::Display for Treatment {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

literal_from_str!(
    Limitation,
    SecurityProperty,
    SeverityClass,
    ExposureClass,
    ControllabilityClass,
    QualLevel,
    Treatment
);
