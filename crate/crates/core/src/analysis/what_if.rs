use std::fmt;
use std::str::FromStr;

use thiserror::Error;

use super::rate;
use crate::diag::{codes, Diagnostic};
use crate::model::{Id, Literal, QualLevel, RiskModel};
use crate::tables::{AsilLevel, RiskMatrix};

/// Rating inputs that a what-if query may change.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum WhatIfField {
    Severity,
    Exposure,
    Controllability,
    Impact,
    Feasibility,
}

impl WhatIfField {
    pub const ALL: [WhatIfField; 5] = [
        WhatIfField::Severity,
        WhatIfField::Exposure,
        WhatIfField::Controllability,
        WhatIfField::Impact,
        WhatIfField::Feasibility,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            WhatIfField::Severity => "severity",
            WhatIfField::Exposure => "exposure",
            WhatIfField::Controllability => "controllability",
            WhatIfField::Impact => "impact",
            WhatIfField::Feasibility => "feasibility",
        }
    }

    fn applies_to_hazards(self) -> bool {
        matches!(
            self,
            WhatIfField::Severity | WhatIfField::Exposure | WhatIfField::Controllability
        )
    }
}

impl fmt::Display for WhatIfField {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

/// One hypothetical change: set `field` of the hazard or threat `target`
/// to `value`. Values are kept as text and checked by [`what_if`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WhatIfOverride {
    pub target: String,
    pub field: String,
    pub value: String,
}

impl WhatIfOverride {
    pub fn new(target: impl Into<String>, field: impl Into<String>, value: impl Into<String>) -> Self {
        Self {
            target: target.into(),
            field: field.into(),
            value: value.into(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("expected `<id>.<field>=<value>`, got `{0}`")]
pub struct ParseOverrideError(pub String);

/// Parses `<id>.<field>=<value>`.
impl FromStr for WhatIfOverride {
    type Err = ParseOverrideError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let err = || ParseOverrideError(s.to_string());
        let (lhs, value) = s.split_once('=').ok_or_else(err)?;
        let (target, field) = lhs.rsplit_once('.').ok_or_else(err)?;
        let (target, field, value) = (target.trim(), field.trim(), value.trim());
        if target.is_empty() || field.is_empty() || value.is_empty() {
            return Err(err());
        }
        Ok(WhatIfOverride::new(target, field, value))
    }
}

/// An effective rating of either kind.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Rating {
    Asil(AsilLevel),
    Risk(QualLevel),
}

impl fmt::Display for Rating {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Rating::Asil(a) => a.fmt(f),
            Rating::Risk(r) => r.fmt(f),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RatingDelta {
    pub id: Id,
    pub old: Rating,
    pub new: Rating,
}

/// `id: OLD -> NEW`
impl fmt::Display for RatingDelta {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}: {} -> {}", self.id, self.old, self.new)
    }
}

/// Applies `overrides` to a copy of `model` and reports every effective
/// rating that changed, hazards first, each group in id order.
pub fn what_if(
    model: &RiskModel,
    matrix: &RiskMatrix,
    overrides: &[WhatIfOverride],
) -> Result<Vec<RatingDelta>, Vec<Diagnostic>> {
    let mut changed = model.clone();
    let mut errors = Vec::new();

    for o in overrides {
        let is_hazard = model.hazard(&o.target).is_some();
        let is_threat = model.threat(&o.target).is_some();
        if !is_hazard && !is_threat {
            errors.push(Diagnostic::error(
                codes::REF,
                format!("no hazard or threat named `{}`", o.target),
            ));
            continue;
        }
        let Some(field) = WhatIfField::ALL
            .into_iter()
            .find(|f| f.as_str().eq_ignore_ascii_case(&o.field))
        else {
            errors.push(Diagnostic::error(
                codes::FIELD,
                format!(
                    "unknown field `{}`; expected severity, exposure, controllability, impact or feasibility",
                    o.field
                ),
            ));
            continue;
        };
        let result = if field.applies_to_hazards() {
            match changed.hazard_mut(&o.target) {
                Some(h) => match field {
                    WhatIfField::Severity => set(&mut h.severity, &o.value),
                    WhatIfField::Exposure => set(&mut h.exposure, &o.value),
                    _ => set(&mut h.controllability, &o.value),
                },
                None => Err(field_mismatch(o, field, "threat")),
            }
        } else {
            match changed.threat_mut(&o.target) {
                Some(t) => match field {
                    WhatIfField::Impact => set(&mut t.impact, &o.value),
                    _ => set(&mut t.feasibility, &o.value),
                },
                None => Err(field_mismatch(o, field, "hazard")),
            }
        };
        if let Err(d) = result {
            errors.push(d);
        }
    }
    if !errors.is_empty() {
        return Err(errors);
    }

    let before = rate(model, matrix);
    let after = rate(&changed, matrix);
    let mut deltas = Vec::new();
    for (id, &old) in &before.hazard_ratings {
        let new = after.hazard_ratings[id];
        if new != old {
            deltas.push(RatingDelta {
                id: id.clone(),
                old: Rating::Asil(old),
                new: Rating::Asil(new),
            });
        }
    }
    for (id, old) in &before.threat_ratings {
        let new = after.threat_ratings[id];
        if new.effective != old.effective {
            deltas.push(RatingDelta {
                id: id.clone(),
                old: Rating::Risk(old.effective),
                new: Rating::Risk(new.effective),
            });
        }
    }
    Ok(deltas)
}

fn field_mismatch(o: &WhatIfOverride, field: WhatIfField, kind: &str) -> Diagnostic {
    Diagnostic::error(
        codes::FIELD,
        format!("`{}` is a {kind}; field `{field}` does not apply", o.target),
    )
}

fn set<T: Literal>(slot: &mut T, value: &str) -> Result<(), Diagnostic> {
    match T::parse_literal(value) {
        Some(v) => {
            *slot = v;
            Ok(())
        }
        None => Err(Diagnostic::error(
            codes::ENUM,
            format!("unknown {} `{value}`", T::KIND),
        )),
    }
}
