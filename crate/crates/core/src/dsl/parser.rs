use std::collections::HashMap;

use super::lexer::{tokenize, Token, TokenKind};
use crate::diag::{codes, has_errors, Diagnostic, SourceSpan, Subject, SubjectKind};
use crate::model::{
    is_valid_id, validate_model, Asset, Hazard, Id, Item, Limitation, Link, Literal, Protection,
    RiskModel, RiskOverride, Threat,
};

/// Spans of parsed model elements, keyed by declaration index and field.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct SourceMap {
    spans: HashMap<(SubjectKind, usize, Option<&'static str>), SourceSpan>,
}

impl SourceMap {
    fn record(&mut self, subject: Subject, span: SourceSpan) {
        self.spans
            .entry((subject.kind, subject.index, subject.field))
            .or_insert(span);
    }

    /// Span of the subject's field, falling back to the element itself.
    pub fn span_of(&self, subject: &Subject) -> Option<SourceSpan> {
        self.spans
            .get(&(subject.kind, subject.index, subject.field))
            .or_else(|| self.spans.get(&(subject.kind, subject.index, None)))
            .copied()
    }

    /// Fills in the span of every diagnostic that has a subject but no span.
    pub fn locate(&self, diagnostics: &mut [Diagnostic]) {
        for d in diagnostics {
            if d.span.is_none() {
                if let Some(subject) = &d.subject {
                    d.span = self.span_of(subject);
                }
            }
        }
    }
}

/// A successfully parsed model together with its source positions.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ParsedModel {
    pub model: RiskModel,
    pub source_map: SourceMap,
}

/// Parses model text. On failure returns every error found, each with a
/// span; parsing resumes at block boundaries after an error.
pub fn parse_model(text: &str) -> Result<RiskModel, Vec<Diagnostic>> {
    parse_with_spans(text).map(|p| p.model)
}

/// Like [`parse_model`] but keeps the [`SourceMap`] for later diagnostics.
pub fn parse_with_spans(text: &str) -> Result<ParsedModel, Vec<Diagnostic>> {
    let (tokens, lex_errors) = tokenize(text);
    let mut parser = Parser {
        tokens,
        pos: 0,
        diags: lex_errors,
        map: SourceMap::default(),
        item: None,
        saw_item: false,
        assets: Vec::new(),
        hazards: Vec::new(),
        threats: Vec::new(),
        links: Vec::new(),
    };
    parser.parse_top_level();

    let Parser {
        mut diags,
        map,
        item,
        saw_item,
        assets,
        hazards,
        threats,
        links,
        ..
    } = parser;

    let Some(item) = item else {
        // A broken item block has already been reported.
        if !saw_item {
            diags.push(
                Diagnostic::error(codes::FIELD, "model has no `item` block")
                    .with_span(SourceSpan::new(1, 1, 0)),
            );
        }
        sort_by_position(&mut diags);
        return Err(diags);
    };
    if has_errors(&diags) {
        sort_by_position(&mut diags);
        return Err(diags);
    }

    let model = RiskModel {
        item,
        assets,
        hazards,
        threats,
        links,
    };
    let mut problems = validate_model(&model);
    if !problems.is_empty() {
        map.locate(&mut problems);
        sort_by_position(&mut problems);
        return Err(problems);
    }
    Ok(ParsedModel {
        model,
        source_map: map,
    })
}

fn sort_by_position(diags: &mut [Diagnostic]) {
    diags.sort_by_key(|d| d.span.map(|s| (s.line, s.column)));
}

const TOP_LEVEL: &[&str] = &["item", "asset", "hazard", "threat", "link", "version"];

/// Marker for an error that abandons the current block.
struct Abort;

type Step<T> = Result<T, Abort>;

struct Parser {
    tokens: Vec<Token>,
    pos: usize,
    diags: Vec<Diagnostic>,
    map: SourceMap,
    item: Option<Item>,
    saw_item: bool,
    assets: Vec<Asset>,
    hazards: Vec<Hazard>,
    threats: Vec<Threat>,
    links: Vec<Link>,
}

fn keyword_of(token: &Token) -> Option<String> {
    match &token.kind {
        TokenKind::Word(w) => Some(w.to_ascii_lowercase()),
        _ => None,
    }
}

impl Parser {
    fn peek(&self) -> Option<&Token> {
        self.tokens.get(self.pos)
    }

    fn next(&mut self) -> Option<Token> {
        let t = self.tokens.get(self.pos).cloned();
        if t.is_some() {
            self.pos += 1;
        }
        t
    }

    fn eof_span(&self) -> SourceSpan {
        self.tokens
            .last()
            .map(|t| SourceSpan::new(t.span.line, t.span.column + t.span.length, 0))
            .unwrap_or(SourceSpan::new(1, 1, 0))
    }

    fn error(&mut self, code: &'static str, message: impl Into<String>, span: SourceSpan) {
        self.diags
            .push(Diagnostic::error(code, message).with_span(span));
    }

    /// Reports a syntax error at the current token and aborts the block.
    fn unexpected<T>(&mut self, expected: &str) -> Step<T> {
        match self.peek().cloned() {
            Some(t) => self.error(
                codes::SYNTAX,
                format!("expected {expected}, found {}", t.describe()),
                t.span,
            ),
            None => {
                let span = self.eof_span();
                self.error(
                    codes::SYNTAX,
                    format!("expected {expected}, found end of input"),
                    span,
                )
            }
        }
        Err(Abort)
    }

    fn parse_top_level(&mut self) {
        while let Some(token) = self.peek().cloned() {
            let start = self.pos;
            let result = match keyword_of(&token).as_deref() {
                Some("item") => self.item_block(),
                Some("asset") => self.asset_block(),
                Some("hazard") => self.hazard_block(),
                Some("threat") => self.threat_block(),
                Some("link") => self.link_line(),
                Some("version") => self.version_line(),
                _ => {
                    self.error(
                        codes::SYNTAX,
                        format!(
                            "expected `item`, `asset`, `hazard`, `threat` or `link`, found {}",
                            token.describe()
                        ),
                        token.span,
                    );
                    Err(Abort)
                }
            };
            if result.is_err() {
                self.recover(start);
            }
        }
    }

    /// Skips to the end of the block that started at token `start`: past
    /// its closing brace, or up to the next line that opens a new block.
    fn recover(&mut self, start: usize) {
        if self.pos == start {
            self.pos += 1;
        }
        let mut depth: i64 = self.tokens[start..self.pos]
            .iter()
            .map(|t| match t.kind {
                TokenKind::LBrace => 1,
                TokenKind::RBrace => -1,
                _ => 0,
            })
            .sum();
        if depth <= 0 && self.tokens[self.pos - 1].kind == TokenKind::RBrace {
            return;
        }
        while let Some(t) = self.peek() {
            match t.kind {
                TokenKind::LBrace => depth += 1,
                TokenKind::RBrace => {
                    depth -= 1;
                    if depth <= 0 {
                        self.pos += 1;
                        return;
                    }
                }
                TokenKind::Word(_) if self.starts_block(self.pos, depth) => return,
                _ => {}
            }
            self.pos += 1;
        }
    }

    /// Whether token `i` looks like the start of a top-level block. Inside
    /// an unclosed block only keywords that begin a line count, so that a
    /// missing `}` does not swallow the rest of the file.
    fn starts_block(&self, i: usize, depth: i64) -> bool {
        let Some(kw) = keyword_of(&self.tokens[i]) else {
            return false;
        };
        if !TOP_LEVEL.contains(&kw.as_str()) {
            return false;
        }
        if depth <= 0 {
            return true;
        }
        let first_on_line = i == 0 || self.tokens[i - 1].span.line < self.tokens[i].span.line;
        let next = |k: usize| self.tokens.get(i + k).map(|t| &t.kind);
        first_on_line
            && match kw.as_str() {
                "item" => matches!(next(1), Some(TokenKind::Str(_))),
                "asset" => {
                    matches!(next(1), Some(TokenKind::Word(_)))
                        && matches!(next(2), Some(TokenKind::Str(_)))
                }
                "hazard" | "threat" => {
                    matches!(next(1), Some(TokenKind::Word(_)))
                        && matches!(next(2), Some(TokenKind::LBrace))
                }
                "link" => matches!(next(1), Some(TokenKind::Word(_))),
                _ => true,
            }
    }

    fn keyword(&mut self, kw: &str) -> Step<Token> {
        match self.peek() {
            Some(t) if keyword_of(t).as_deref() == Some(kw) => Ok(self.next().unwrap()),
            _ => self.unexpected(&format!("`{kw}`")),
        }
    }

    fn punct(&mut self, kind: TokenKind, shown: &str) -> Step<Token> {
        match self.peek() {
            Some(t) if t.kind == kind => Ok(self.next().unwrap()),
            _ => self.unexpected(shown),
        }
    }

    fn string(&mut self) -> Step<(String, SourceSpan)> {
        match self.peek().cloned() {
            Some(Token {
                kind: TokenKind::Str(s),
                span,
            }) => {
                self.pos += 1;
                Ok((s, span))
            }
            _ => self.unexpected("a string"),
        }
    }

    fn ident(&mut self) -> Step<(Id, SourceSpan)> {
        match self.peek().cloned() {
            Some(Token {
                kind: TokenKind::Word(w),
                span,
            }) => {
                self.pos += 1;
                if !is_valid_id(&w) {
                    self.error(codes::ID, format!("`{w}` is not a valid identifier"), span);
                }
                Ok((Id::new(w), span))
            }
            _ => self.unexpected("an identifier"),
        }
    }

    /// Parses an enum literal. An unknown literal is reported but does not
    /// abort the block; `None` is returned instead.
    fn literal<T: Literal>(&mut self) -> Step<(Option<T>, SourceSpan)> {
        match self.peek().cloned() {
            Some(Token {
                kind: TokenKind::Word(w),
                span,
            }) => {
                self.pos += 1;
                let value = T::parse_literal(&w);
                if value.is_none() {
                    let expected: Vec<&str> = T::ALL.iter().map(|v| v.literal()).collect();
                    self.error(
                        codes::ENUM,
                        format!("unknown {} `{w}`; expected one of {}", T::KIND, expected.join(", ")),
                        span,
                    );
                }
                Ok((value, span))
            }
            _ => self.unexpected(&format!("a {}", T::KIND)),
        }
    }

    fn is_rbrace(&self) -> bool {
        matches!(self.peek(), Some(t) if t.kind == TokenKind::RBrace)
    }

    fn item_block(&mut self) -> Step<()> {
        let kw = self.keyword("item")?;
        self.saw_item = true;
        let (name, name_span) = self.string()?;
        self.punct(TokenKind::LBrace, "`{`")?;
        let mut functions = Vec::new();
        let mut function_span = None;
        while !self.is_rbrace() {
            let f = self.keyword("function")?;
            function_span.get_or_insert(f.span);
            let (text, _) = self.string()?;
            functions.push(text);
        }
        self.next();
        if functions.is_empty() {
            self.error(codes::FIELD, "item must declare at least one `function`", kw.span);
            return Ok(());
        }
        if self.item.is_some() {
            self.error(codes::FIELD, "model declares more than one `item`", kw.span);
            return Ok(());
        }
        let subject = Subject::new(SubjectKind::Item, 0);
        self.map.record(subject, kw.span);
        self.map.record(subject.field("name"), name_span);
        if let Some(span) = function_span {
            self.map.record(subject.field("function"), span);
        }
        self.item = Some(Item { name, functions });
        Ok(())
    }

    fn asset_block(&mut self) -> Step<()> {
        self.keyword("asset")?;
        let (id, id_span) = self.ident()?;
        let (name, name_span) = self.string()?;
        self.punct(TokenKind::LBrace, "`{`")?;
        let mut protections = Vec::new();
        let mut complete = true;
        let mut protect_span = None;
        while !self.is_rbrace() {
            let kw = self.keyword("protect")?;
            protect_span.get_or_insert(kw.span);
            let (property, _) = self.literal()?;
            self.keyword("for")?;
            let (limitation, _) = self.literal::<Limitation>()?;
            self.punct(TokenKind::Colon, "`:`")?;
            let (goal, _) = self.string()?;
            match (property, limitation) {
                (Some(property), Some(limitation)) => protections.push(Protection {
                    limitation,
                    property,
                    goal,
                }),
                _ => complete = false,
            }
        }
        self.next();
        if complete && protections.is_empty() {
            self.error(
                codes::FIELD,
                format!("asset `{id}` must declare at least one `protect` entry"),
                id_span,
            );
            return Ok(());
        }
        if !complete {
            return Ok(());
        }
        let subject = Subject::new(SubjectKind::Asset, self.assets.len());
        self.map.record(subject, id_span);
        self.map.record(subject.field("id"), id_span);
        self.map.record(subject.field("name"), name_span);
        if let Some(span) = protect_span {
            self.map.record(subject.field("protect"), span);
        }
        self.assets.push(Asset {
            id,
            name,
            protections,
        });
        Ok(())
    }

    /// Reads `name: value` fields until the closing brace. `read` consumes
    /// the value for a known field name and returns false for unknown ones.
    fn fields<F>(
        &mut self,
        block: &str,
        known: &[&'static str],
        mut read: F,
    ) -> Step<HashMap<&'static str, SourceSpan>>
    where
        F: FnMut(&mut Self, &'static str) -> Step<()>,
    {
        let mut seen: HashMap<&'static str, SourceSpan> = HashMap::new();
        loop {
            let Some(token) = self.peek().cloned() else {
                return self.unexpected("`}`");
            };
            if token.kind == TokenKind::RBrace {
                self.pos += 1;
                return Ok(seen);
            }
            let Some(name) = keyword_of(&token) else {
                return self.unexpected("a field name or `}`");
            };
            let Some(&field) = known.iter().find(|k| **k == name) else {
                self.error(
                    codes::FIELD,
                    format!("unknown field `{name}` in {block}; expected one of {}", known.join(", ")),
                    token.span,
                );
                return Err(Abort);
            };
            self.pos += 1;
            if seen.contains_key(field) {
                self.error(
                    codes::FIELD,
                    format!("field `{field}` appears more than once in {block}"),
                    token.span,
                );
            } else {
                seen.insert(field, token.span);
            }
            self.punct(TokenKind::Colon, "`:`")?;
            read(self, field)?;
        }
    }

    fn missing(
        &mut self,
        block: &str,
        required: &[&str],
        seen: &HashMap<&'static str, SourceSpan>,
        span: SourceSpan,
    ) -> bool {
        let mut ok = true;
        for field in required {
            if !seen.contains_key(field) {
                ok = false;
                self.error(
                    codes::FIELD,
                    format!("{block} is missing required field `{field}`"),
                    span,
                );
            }
        }
        ok
    }

    fn hazard_block(&mut self) -> Step<()> {
        const FIELDS: &[&str] = &[
            "limitation",
            "description",
            "severity",
            "exposure",
            "controllability",
            "safety_goal",
        ];
        self.keyword("hazard")?;
        let (id, id_span) = self.ident()?;
        self.punct(TokenKind::LBrace, "`{`")?;

        let mut limitation = None;
        let mut description = None;
        let mut severity = None;
        let mut exposure = None;
        let mut controllability = None;
        let mut safety_goal = None;
        let mut bad_value = false;
        let block = format!("hazard `{id}`");
        let seen = self.fields(&block, FIELDS, |p, field| {
            match field {
                "limitation" => {
                    let (v, _) = p.literal()?;
                    bad_value |= v.is_none();
                    limitation = limitation.or(v);
                }
                "description" => {
                    let s = p.string()?.0;
                    description.get_or_insert(s);
                }
                "severity" => {
                    let (v, _) = p.literal()?;
                    bad_value |= v.is_none();
                    severity = severity.or(v);
                }
                "exposure" => {
                    let (v, _) = p.literal()?;
                    bad_value |= v.is_none();
                    exposure = exposure.or(v);
                }
                "controllability" => {
                    let (v, _) = p.literal()?;
                    bad_value |= v.is_none();
                    controllability = controllability.or(v);
                }
                "safety_goal" => {
                    let s = p.string()?.0;
                    safety_goal.get_or_insert(s);
                }
                _ => unreachable!(),
            }
            Ok(())
        })?;
        let complete = self.missing(&block, &FIELDS[..5], &seen, id_span);
        if !complete || bad_value {
            return Ok(());
        }

        let subject = Subject::new(SubjectKind::Hazard, self.hazards.len());
        self.map.record(subject, id_span);
        self.map.record(subject.field("id"), id_span);
        for (field, span) in &seen {
            self.map.record(subject.field(field), *span);
        }
        self.hazards.push(Hazard {
            id,
            limitation: limitation.unwrap(),
            description: description.unwrap(),
            severity: severity.unwrap(),
            exposure: exposure.unwrap(),
            controllability: controllability.unwrap(),
            safety_goal,
        });
        Ok(())
    }

    fn threat_block(&mut self) -> Step<()> {
        const FIELDS: &[&str] = &[
            "asset",
            "limitation",
            "scenario",
            "impact",
            "feasibility",
            "treatment",
            "damage",
            "override",
        ];
        self.keyword("threat")?;
        let (id, id_span) = self.ident()?;
        self.punct(TokenKind::LBrace, "`{`")?;

        let mut asset = None;
        let mut limitation = None;
        let mut scenario = None;
        let mut impact = None;
        let mut feasibility = None;
        let mut treatment = None;
        let mut damage = None;
        let mut risk_override = None;
        let mut bad_value = false;
        let block = format!("threat `{id}`");
        let seen = self.fields(&block, FIELDS, |p, field| {
            match field {
                "asset" => {
                    let (v, _) = p.ident()?;
                    asset.get_or_insert(v);
                }
                "limitation" => {
                    let (v, _) = p.literal()?;
                    bad_value |= v.is_none();
                    limitation = limitation.or(v);
                }
                "scenario" => {
                    let s = p.string()?.0;
                    scenario.get_or_insert(s);
                }
                "impact" => {
                    let (v, _) = p.literal()?;
                    bad_value |= v.is_none();
                    impact = impact.or(v);
                }
                "feasibility" => {
                    let (v, _) = p.literal()?;
                    bad_value |= v.is_none();
                    feasibility = feasibility.or(v);
                }
                "treatment" => {
                    let (v, _) = p.literal()?;
                    bad_value |= v.is_none();
                    treatment = treatment.or(v);
                }
                "damage" => {
                    let s = p.string()?.0;
                    damage.get_or_insert(s);
                }
                "override" => {
                    let (level, _) = p.literal()?;
                    p.keyword("because")?;
                    let (rationale, _) = p.string()?;
                    match level {
                        Some(level) => {
                            risk_override.get_or_insert(RiskOverride { level, rationale });
                        }
                        None => bad_value = true,
                    }
                }
                _ => unreachable!(),
            }
            Ok(())
        })?;
        let complete = self.missing(&block, &FIELDS[..6], &seen, id_span);
        if !complete || bad_value {
            return Ok(());
        }

        let subject = Subject::new(SubjectKind::Threat, self.threats.len());
        self.map.record(subject, id_span);
        self.map.record(subject.field("id"), id_span);
        for (field, span) in &seen {
            self.map.record(subject.field(field), *span);
        }
        self.threats.push(Threat {
            id,
            asset: asset.unwrap(),
            limitation: limitation.unwrap(),
            scenario: scenario.unwrap(),
            impact: impact.unwrap(),
            feasibility: feasibility.unwrap(),
            treatment: treatment.unwrap(),
            damage,
            risk_override,
        });
        Ok(())
    }

    fn link_line(&mut self) -> Step<()> {
        let kw = self.keyword("link")?;
        let (hazard, hazard_span) = self.ident()?;
        self.punct(TokenKind::DashDash, "`--`")?;
        let (threat, threat_span) = self.ident()?;
        let subject = Subject::new(SubjectKind::Link, self.links.len());
        self.map.record(subject, kw.span);
        self.map.record(subject.field("hazard"), hazard_span);
        self.map.record(subject.field("threat"), threat_span);
        self.links.push(Link { hazard, threat });
        Ok(())
    }

    /// `version` is reserved; its value is read and ignored.
    fn version_line(&mut self) -> Step<()> {
        self.keyword("version")?;
        if matches!(self.peek(), Some(t) if t.kind == TokenKind::Colon) {
            self.pos += 1;
        }
        match self.peek().map(|t| &t.kind) {
            Some(TokenKind::Str(_)) | Some(TokenKind::Word(_)) => {
                self.pos += 1;
                Ok(())
            }
            _ => self.unexpected("a version value"),
        }
    }
}
