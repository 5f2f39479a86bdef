//! Findings produced by parsing, validation and linting.

use std::fmt;

/// How bad a finding is. Ordered so that `Error` is the maximum.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Severity {
    Note,
    Warning,
    Error,
}

impl Severity {
    pub fn as_str(self) -> &'static str {
        match self {
            Severity::Note => "note",
            Severity::Warning => "warning",
            Severity::Error => "error",
        }
    }
}

impl fmt::Display for Severity {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

/// A location in source text. `line` and `column` are 1-based and count
/// characters, not bytes.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct SourceSpan {
    pub line: usize,
    pub column: usize,
    pub length: usize,
}

impl SourceSpan {
    pub fn new(line: usize, column: usize, length: usize) -> Self {
        debug_assert!(line >= 1 && column >= 1);
        Self { line, column, length }
    }
}

impl fmt::Display for SourceSpan {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}:{}", self.line, self.column)
    }
}

/// Which kind of model element a finding is about.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum SubjectKind {
    Item,
    Asset,
    Hazard,
    Threat,
    Link,
}

/// Points a finding at a model element by declaration index, optionally
/// narrowed to one field. Used to attach spans after the fact, since the
/// model itself carries no positions.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Subject {
    pub kind: SubjectKind,
    pub index: usize,
    pub field: Option<&'static str>,
}

impl Subject {
    pub fn new(kind: SubjectKind, index: usize) -> Self {
        Self {
            kind,
            index,
            field: None,
        }
    }

    pub fn field(mut self, field: &'static str) -> Self {
        self.field = Some(field);
        self
    }
}

/// A single finding.
///
/// `code` follows the `<letter>-<WORD>` convention, e.g. `E-REF` or `W-OVR`.
/// The leading letter mirrors the default severity of the rule.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Diagnostic {
    pub severity: Severity,
    pub code: &'static str,
    pub message: String,
    pub span: Option<SourceSpan>,
    pub subject: Option<Subject>,
}

impl Diagnostic {
    pub fn new(severity: Severity, code: &'static str, message: impl Into<String>) -> Self {
        Self {
            severity,
            code,
            message: message.into(),
            span: None,
            subject: None,
        }
    }

    pub fn error(code: &'static str, message: impl Into<String>) -> Self {
        Self::new(Severity::Error, code, message)
    }

    pub fn warning(code: &'static str, message: impl Into<String>) -> Self {
        Self::new(Severity::Warning, code, message)
    }

    pub fn note(code: &'static str, message: impl Into<String>) -> Self {
        Self::new(Severity::Note, code, message)
    }

    pub fn with_span(mut self, span: SourceSpan) -> Self {
        self.span = Some(span);
        self
    }

    pub fn with_subject(mut self, subject: Subject) -> Self {
        self.subject = Some(subject);
        self
    }

    pub fn is_error(&self) -> bool {
        self.severity == Severity::Error
    }
}

/// One line per diagnostic: `severity code line:col message`. A missing
/// span prints as `-`.
impl fmt::Display for Diagnostic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.span {
            Some(span) => write!(f, "{} {} {} {}", self.severity, self.code, span, self.message),
            None => write!(f, "{} {} - {}", self.severity, self.code, self.message),
        }
    }
}

pub fn has_errors(diagnostics: &[Diagnostic]) -> bool {
    diagnostics.iter().any(Diagnostic::is_error)
}

/// Diagnostic codes emitted anywhere in the crate.
pub mod codes {
    pub const SYNTAX: &str = "E-SYNTAX";
    pub const FIELD: &str = "E-FIELD";
    pub const ENUM: &str = "E-ENUM";
    pub const REF: &str = "E-REF";
    pub const DUP: &str = "E-DUP";
    pub const EMPTY: &str = "E-EMPTY";
    pub const ID: &str = "E-ID";
    pub const MATRIX_INCOMPLETE: &str = "E-INCOMPLETE";
    pub const MATRIX_MONOTONE: &str = "E-MONOTONE";
    pub const UNKNOWN_STD: &str = "E-UNKNOWN-STD";
    pub const UNPROTECTED: &str = "E-UNPROTECTED";
    pub const NO_SAFETY_GOAL: &str = "E-NOGOAL";
    pub const ACCEPT_HIGH: &str = "E-ACCEPT";
    pub const ACCEPT_MEDIUM: &str = "W-ACCEPT";
    pub const OVERRIDE: &str = "W-OVR";
    pub const ONE_SIDED: &str = "W-ONESIDED";
    pub const UNLINKED: &str = "N-UNLINKED";

    pub const ALL: &[&str] = &[
        SYNTAX,
        FIELD,
        ENUM,
        REF,
        DUP,
        EMPTY,
        ID,
        MATRIX_INCOMPLETE,
        MATRIX_MONOTONE,
        UNKNOWN_STD,
        UNPROTECTED,
        NO_SAFETY_GOAL,
        ACCEPT_HIGH,
        ACCEPT_MEDIUM,
        OVERRIDE,
        ONE_SIDED,
        UNLINKED,
    ];
}

#[cfg(test)]
mod tests {
    use super::*;

    fn is_code(code: &str) -> bool {
        let mut parts = code.split('-');
        let head = parts.next().unwrap_or("");
        let rest: Vec<&str> = parts.collect();
        head.len() == 1
            && head.chars().all(|c| c.is_ascii_uppercase())
            && !rest.is_empty()
            && rest
                .iter()
                .all(|w| !w.is_empty() && w.chars().all(|c| c.is_ascii_alphanumeric()))
    }

    #[test]
    fn every_code_matches_letter_hyphen_word() {
        for code in codes::ALL {
            assert!(is_code(code), "bad code {code}");
        }
    }

    #[test]
    fn display_line_format() {
        let d = Diagnostic::warning(codes::OVERRIDE, "risk overridden")
            .with_span(SourceSpan::new(12, 3, 8));
        assert_eq!(d.to_string(), "warning W-OVR 12:3 risk overridden");
        let d = Diagnostic::error(codes::REF, "dangling");
        assert_eq!(d.to_string(), "error E-REF - dangling");
    }
}
