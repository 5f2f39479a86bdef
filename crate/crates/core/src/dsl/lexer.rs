use crate::diag::{codes, Diagnostic, SourceSpan};

#[derive(Debug, Clone, PartialEq, Eq)]
pub(crate) enum TokenKind {
    /// Keywords, identifiers and enum literals alike.
    Word(String),
    Str(String),
    LBrace,
    RBrace,
    Colon,
    DashDash,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub(crate) struct Token {
    pub kind: TokenKind,
    pub span: SourceSpan,
}

impl Token {
    pub fn describe(&self) -> String {
        match &self.kind {
            TokenKind::Word(w) => format!("`{w}`"),
            TokenKind::Str(_) => "a string".to_string(),
            TokenKind::LBrace => "`{`".to_string(),
            TokenKind::RBrace => "`}`".to_string(),
            TokenKind::Colon => "`:`".to_string(),
            TokenKind::DashDash => "`--`".to_string(),
        }
    }
}

struct Cursor<'a> {
    chars: std::iter::Peekable<std::str::Chars<'a>>,
    line: usize,
    column: usize,
}

impl Cursor<'_> {
    fn peek(&mut self) -> Option<char> {
        self.chars.peek().copied()
    }

    fn peek2(&self) -> Option<char> {
        let mut it = self.chars.clone();
        it.next();
        it.next()
    }

    fn bump(&mut self) -> Option<char> {
        let c = self.chars.next()?;
        if c == '\n' {
            self.line += 1;
            self.column = 1;
        } else {
            self.column += 1;
        }
        Some(c)
    }
}

fn is_word_start(c: char) -> bool {
    c.is_ascii_alphanumeric() || c == '_'
}

/// Splits `text` into tokens. Lexical errors are collected and lexing
/// continues after the offending character.
pub(crate) fn tokenize(text: &str) -> (Vec<Token>, Vec<Diagnostic>) {
    let mut cur = Cursor {
        chars: text.chars().peekable(),
        line: 1,
        column: 1,
    };
    let mut tokens = Vec::new();
    let mut errors = Vec::new();

    while let Some(c) = cur.peek() {
        let (line, column) = (cur.line, cur.column);
        let single = |kind| Token {
            kind,
            span: SourceSpan::new(line, column, 1),
        };
        match c {
            c if c.is_whitespace() => {
                cur.bump();
            }
            '#' => {
                while let Some(c) = cur.peek() {
                    if c == '\n' {
                        break;
                    }
                    cur.bump();
                }
            }
            '{' => {
                cur.bump();
                tokens.push(single(TokenKind::LBrace));
            }
            '}' => {
                cur.bump();
                tokens.push(single(TokenKind::RBrace));
            }
            ':' => {
                cur.bump();
                tokens.push(single(TokenKind::Colon));
            }
            '-' if cur.peek2() == Some('-') => {
                cur.bump();
                cur.bump();
                tokens.push(Token {
                    kind: TokenKind::DashDash,
                    span: SourceSpan::new(line, column, 2),
                });
            }
            '"' => {
                cur.bump();
                let mut value = String::new();
                let mut length = 1;
                let mut terminated = false;
                while let Some(c) = cur.bump() {
                    length += 1;
                    match c {
                        '"' => {
                            terminated = true;
                            break;
                        }
                        '\\' => {
                            let (esc_line, esc_col) = (cur.line, cur.column - 1);
                            match cur.peek() {
                                Some(e @ ('"' | '\\')) => {
                                    cur.bump();
                                    length += 1;
                                    value.push(e);
                                }
                                other => {
                                    let shown = other.map(String::from).unwrap_or_default();
                                    errors.push(
                                        Diagnostic::error(
                                            codes::SYNTAX,
                                            format!("unknown escape `\\{shown}` in string"),
                                        )
                                        .with_span(SourceSpan::new(esc_line, esc_col, 2)),
                                    );
                                }
                            }
                        }
                        c => value.push(c),
                    }
                }
                if terminated {
                    tokens.push(Token {
                        kind: TokenKind::Str(value),
                        span: SourceSpan::new(line, column, length),
                    });
                } else {
                    errors.push(
                        Diagnostic::error(codes::SYNTAX, "unterminated string")
                            .with_span(SourceSpan::new(line, column, 1)),
                    );
                }
            }
            c if is_word_start(c) => {
                let mut word = String::new();
                while let Some(c) = cur.peek() {
                    let continues = is_word_start(c)
                        || c == '.'
                        || (c == '-' && cur.peek2() != Some('-'));
                    if !continues {
                        break;
                    }
                    word.push(c);
                    cur.bump();
                }
                let length = word.chars().count();
                tokens.push(Token {
                    kind: TokenKind::Word(word),
                    span: SourceSpan::new(line, column, length),
                });
            }
            other => {
                cur.bump();
                errors.push(
                    Diagnostic::error(codes::SYNTAX, format!("unexpected character `{other}`"))
                        .with_span(SourceSpan::new(line, column, 1)),
                );
            }
        }
    }

    (tokens, errors)
}
