//! Normative rating tables.
//!
//! ASIL determination is a fixed lookup over severity, exposure and
//! controllability. Cybersecurity risk is a lookup in a 3x3 impact x
//! feasibility matrix; the default matrix can be replaced from a config
//! file, in which case only completeness and monotonicity are enforced.

use std::fmt;
use std::str::FromStr;

use crate::diag::{codes, Diagnostic, SourceSpan};
use crate::model::{
    ControllabilityClass, ExposureClass, Literal, ParseLiteralError, QualLevel, SeverityClass,
};

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum AsilLevel {
    QM,
    A,
    B,
    C,
    D,
}

impl AsilLevel {
    pub const ALL: [AsilLevel; 5] = [
        AsilLevel::QM,
        AsilLevel::A,
        AsilLevel::B,
        AsilLevel::C,
        AsilLevel::D,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            AsilLevel::QM => "QM",
            AsilLevel::A => "A",
            AsilLevel::B => "B",
            AsilLevel::C => "C",
            AsilLevel::D => "D",
        }
    }
}

impl fmt::Display for AsilLevel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for AsilLevel {
    type Err = ParseLiteralError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let s = s.trim();
        let s = s
            .strip_prefix("ASIL ")
            .or_else(|| s.strip_prefix("asil "))
            .unwrap_or(s);
        AsilLevel::ALL
            .into_iter()
            .find(|a| a.as_str().eq_ignore_ascii_case(s))
            .ok_or_else(|| ParseLiteralError {
                kind: "ASIL",
                text: s.to_string(),
            })
    }
}

use AsilLevel::{A, B, C, D, QM};

/// `ASIL_TABLE[s-1][e-1][c-1]` for the non-zero classes S1..S3, E1..E4,
/// C1..C3.
const ASIL_TABLE: [[[AsilLevel; 3]; 4]; 3] = [
    // S1
    [[QM, QM, QM], [QM, QM, QM], [QM, QM, A], [QM, A, B]],
    // S2
    [[QM, QM, QM], [QM, QM, A], [QM, A, B], [A, B, C]],
    // S3
    [[QM, QM, A], [QM, A, B], [A, B, C], [B, C, D]],
];

/// ASIL for a hazardous event. Any zero class (S0, E0 or C0) yields QM.
pub fn determine_asil(
    severity: SeverityClass,
    exposure: ExposureClass,
    controllability: ControllabilityClass,
) -> AsilLevel {
    let (s, e, c) = (severity.rank(), exposure.rank(), controllability.rank());
    if s == 0 || e == 0 || c == 0 {
        return QM;
    }
    ASIL_TABLE[s - 1][e - 1][c - 1]
}

/// Impact x feasibility lookup. Cells may be missing when the matrix comes
/// from a config file; [`validate_matrix`] reports that.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct RiskMatrix {
    cells: [[Option<QualLevel>; 3]; 3],
}

impl RiskMatrix {
    pub fn empty() -> Self {
        RiskMatrix {
            cells: [[None; 3]; 3],
        }
    }

    /// Builds a complete matrix from rows indexed `[impact][feasibility]`.
    pub fn from_rows(rows: [[QualLevel; 3]; 3]) -> Self {
        let mut m = RiskMatrix::empty();
        for (i, row) in rows.iter().enumerate() {
            for (f, &risk) in row.iter().enumerate() {
                m.cells[i][f] = Some(risk);
            }
        }
        m
    }

    pub fn get(&self, impact: QualLevel, feasibility: QualLevel) -> Option<QualLevel> {
        self.cells[impact.index()][feasibility.index()]
    }

    pub fn set(&mut self, impact: QualLevel, feasibility: QualLevel, risk: QualLevel) {
        self.cells[impact.index()][feasibility.index()] = Some(risk);
    }

    pub fn clear(&mut self, impact: QualLevel, feasibility: QualLevel) {
        self.cells[impact.index()][feasibility.index()] = None;
    }

    pub fn is_complete(&self) -> bool {
        self.cells.iter().flatten().all(Option::is_some)
    }
}

impl Default for RiskMatrix {
    fn default() -> Self {
        default_risk_matrix()
    }
}

/// The built-in matrix.
///
/// | impact \ feasibility | low    | medium | high   |
/// |----------------------|--------|--------|--------|
/// | low                  | low    | low    | medium |
/// | medium               | low    | medium | high   |
/// | high                 | medium | high   | high   |
pub fn default_risk_matrix() -> RiskMatrix {
    use QualLevel::{High, Low, Medium};
    RiskMatrix::from_rows([
        [Low, Low, Medium],
        [Low, Medium, High],
        [Medium, High, High],
    ])
}

/// Looks up the risk level.
///
/// # Panics
///
/// If the matrix lacks the requested cell. Run [`validate_matrix`] on
/// matrices that did not come from [`default_risk_matrix`].
pub fn determine_risk(impact: QualLevel, feasibility: QualLevel, matrix: &RiskMatrix) -> QualLevel {
    matrix
        .get(impact, feasibility)
        .unwrap_or_else(|| panic!("risk matrix has no cell for ({impact}, {feasibility})"))
}

/// Completeness and monotonicity findings. Empty iff the matrix is valid.
pub fn validate_matrix(matrix: &RiskMatrix) -> Vec<Diagnostic> {
    let mut out = Vec::new();
    for &impact in QualLevel::ALL {
        for &feasibility in QualLevel::ALL {
            if matrix.get(impact, feasibility).is_none() {
                out.push(Diagnostic::error(
                    codes::MATRIX_INCOMPLETE,
                    format!("risk matrix has no cell for impact {impact}, feasibility {feasibility}"),
                ));
            }
        }
    }

    // Raising one axis with the other fixed must never lower the risk.
    let levels = QualLevel::ALL;
    for (lo_pos, &lo) in levels.iter().enumerate() {
        for &hi in &levels[lo_pos + 1..] {
            for &fixed in levels {
                if let (Some(a), Some(b)) = (matrix.get(lo, fixed), matrix.get(hi, fixed)) {
                    if b < a {
                        out.push(Diagnostic::error(
                            codes::MATRIX_MONOTONE,
                            format!(
                                "raising impact {lo} -> {hi} at feasibility {fixed} lowers risk {a} -> {b}"
                            ),
                        ));
                    }
                }
                if let (Some(a), Some(b)) = (matrix.get(fixed, lo), matrix.get(fixed, hi)) {
                    if b < a {
                        out.push(Diagnostic::error(
                            codes::MATRIX_MONOTONE,
                            format!(
                                "raising feasibility {lo} -> {hi} at impact {fixed} lowers risk {a} -> {b}"
                            ),
                        ));
                    }
                }
            }
        }
    }
    out
}

/// Reads the matrix config format: lines of `impact,feasibility,risk`,
/// values `low|medium|high` in any case, `#` comments and blank lines
/// ignored. Missing cells are left for [`validate_matrix`] to report.
pub fn parse_matrix(text: &str) -> Result<RiskMatrix, Vec<Diagnostic>> {
    let mut matrix = RiskMatrix::empty();
    let mut errors = Vec::new();

    for (line_no, raw) in text.lines().enumerate() {
        let line_no = line_no + 1;
        let content = raw.split('#').next().unwrap_or("");
        if content.trim().is_empty() {
            continue;
        }
        let fields: Vec<(usize, &str)> = split_with_columns(content);
        if fields.len() != 3 {
            errors.push(
                Diagnostic::error(
                    codes::SYNTAX,
                    format!("expected `impact,feasibility,risk`, found {} field(s)", fields.len()),
                )
                .with_span(SourceSpan::new(line_no, 1, content.trim_end().chars().count())),
            );
            continue;
        }
        let mut values = [QualLevel::Low; 3];
        let mut ok = true;
        for (slot, &(col, field)) in values.iter_mut().zip(&fields) {
            match QualLevel::parse_literal(field) {
                Some(v) => *slot = v,
                None => {
                    ok = false;
                    errors.push(
                        Diagnostic::error(codes::ENUM, format!("unknown level `{field}`"))
                            .with_span(SourceSpan::new(line_no, col, field.chars().count())),
                    );
                }
            }
        }
        if !ok {
            continue;
        }
        let [impact, feasibility, risk] = values;
        if matrix.get(impact, feasibility).is_some() {
            errors.push(
                Diagnostic::error(
                    codes::DUP,
                    format!("cell ({impact}, {feasibility}) given more than once"),
                )
                .with_span(SourceSpan::new(line_no, fields[0].0, content.trim().chars().count())),
            );
            continue;
        }
        matrix.set(impact, feasibility, risk);
    }

    if errors.is_empty() {
        Ok(matrix)
    } else {
        Err(errors)
    }
}

/// Trimmed comma-separated fields with their 1-based start column.
fn split_with_columns(line: &str) -> Vec<(usize, &str)> {
    let mut out = Vec::new();
    let mut start_col = 1;
    for part in line.split(',') {
        let leading = part.chars().take_while(|c| c.is_whitespace()).count();
        out.push((start_col + leading, part.trim()));
        start_col += part.chars().count() + 1;
    }
    out
}

/// Writes `matrix` in the config format accepted by [`parse_matrix`].
pub fn render_matrix(matrix: &RiskMatrix) -> String {
    let mut out = String::from("# impact,feasibility,risk\n");
    for &impact in QualLevel::ALL {
        for &feasibility in QualLevel::ALL {
            if let Some(risk) = matrix.get(impact, feasibility) {
                out.push_str(&format!(
                    "{},{},{}\n",
                    impact.literal(),
                    feasibility.literal(),
                    risk.literal()
                ));
            }
        }
    }
    out
}
