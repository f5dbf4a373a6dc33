//! Tokenizer for the line-oriented knowledge-base format.

use crate::parser::{ParseDiagnostic, Severity};

#[derive(Clone, Debug, PartialEq, Eq)]
pub(crate) enum TokenKind {
    Name(String),
    SubClassOf,
    SubRoleOf,
    And,
    Some,
    Thing,
    LParen,
    RParen,
    Comma,
}

impl TokenKind {
    pub(crate) fn describe(&self) -> String {
        match self {
            TokenKind::Name(name) => format!("name `{name}`"),
            TokenKind::SubClassOf => "`SubClassOf`".to_string(),
            TokenKind::SubRoleOf => "`SubRoleOf`".to_string(),
            TokenKind::And => "`and`".to_string(),
            TokenKind::Some => "`some`".to_string(),
            TokenKind::Thing => "`Thing`".to_string(),
            TokenKind::LParen => "`(`".to_string(),
            TokenKind::RParen => "`)`".to_string(),
            TokenKind::Comma => "`,`".to_string(),
        }
    }
}

#[derive(Clone, Debug)]
pub(crate) struct Token {
    pub kind: TokenKind,
    pub line: u32,
    pub col: u32,
}

fn is_name_start(c: char) -> bool {
    c.is_ascii_alphabetic() || c == '_'
}

fn is_name_continue(c: char) -> bool {
    c.is_ascii_alphanumeric() || c == '_' || c == '-'
}

/// Tokenizes one line. Columns are 1-based and counted in characters.
/// Comments run from `#` to the end of the line.
pub(crate) fn lex_line(text: &str, line: u32, diagnostics: &mut Vec<ParseDiagnostic>) -> Vec<Token> {
    let mut tokens = Vec::new();
    let mut chars = text.chars().peekable();
    let mut col: u32 = 0;
    let mut had_error = false;
    while let Some(c) = chars.next() {
        col += 1;
        let start = col;
        match c {
            '#' => break,
            c if c.is_whitespace() => {}
            '(' => tokens.push(Token {
                kind: TokenKind::LParen,
                line,
                col: start,
            }),
            ')' => tokens.push(Token {
                kind: TokenKind::RParen,
                line,
                col: start,
            }),
            ',' => tokens.push(Token {
                kind: TokenKind::Comma,
                line,
                col: start,
            }),
            '⊑' => tokens.push(Token {
                kind: TokenKind::SubClassOf,
                line,
                col: start,
            }),
            '⊓' => tokens.push(Token {
                kind: TokenKind::And,
                line,
                col: start,
            }),
            c if is_name_start(c) => {
                let mut name = String::new();
                name.push(c);
                while let Some(&next) = chars.peek() {
                    if is_name_continue(next) {
                        name.push(next);
                        chars.next();
                        col += 1;
                    } else {
                        break;
                    }
                }
                let kind = match name.as_str() {
                    "SubClassOf" => TokenKind::SubClassOf,
                    "SubRoleOf" => TokenKind::SubRoleOf,
                    "and" => TokenKind::And,
                    "some" => TokenKind::Some,
                    "Thing" => TokenKind::Thing,
                    _ => TokenKind::Name(name),
                };
                tokens.push(Token {
                    kind,
                    line,
                    col: start,
                });
            }
            other => {
                diagnostics.push(ParseDiagnostic {
                    line,
                    column: start,
                    message: format!("unexpected character `{other}`"),
                    severity: Severity::Error,
                });
                had_error = true;
            }
        }
    }
    if had_error {
        // Drop the line's tokens so the statement parser does not pile
        // follow-up errors onto a line that is already broken.
        return Vec::new();
    }
    tokens
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn lexes_names_keywords_and_punctuation() {
        let mut diags = Vec::new();
        let tokens = lex_line("B and C SubClassOf D # trailing", 1, &mut diags);
        assert!(diags.is_empty());
        let kinds: Vec<&TokenKind> = tokens.iter().map(|t| &t.kind).collect();
        assert_eq!(
            kinds,
            vec![
                &TokenKind::Name("B".into()),
                &TokenKind::And,
                &TokenKind::Name("C".into()),
                &TokenKind::SubClassOf,
                &TokenKind::Name("D".into()),
            ]
        );
        assert_eq!(tokens[3].col, 9);
    }

    #[test]
    fn unicode_aliases_map_to_keywords() {
        let mut diags = Vec::new();
        let tokens = lex_line("B ⊓ C ⊑ D", 1, &mut diags);
        assert!(diags.is_empty());
        assert_eq!(tokens[1].kind, TokenKind::And);
        assert_eq!(tokens[3].kind, TokenKind::SubClassOf);
        // Columns are character positions, not byte offsets.
        assert_eq!(tokens[3].col, 7);
    }

    #[test]
    fn reports_bad_character_at_exact_column() {
        let mut diags = Vec::new();
        let tokens = lex_line("B(%x)", 3, &mut diags);
        assert!(tokens.is_empty());
        assert_eq!(diags.len(), 1);
        assert_eq!((diags[0].line, diags[0].column), (3, 3));
    }

    #[test]
    fn names_allow_underscore_and_dash() {
        let mut diags = Vec::new();
        let tokens = lex_line("_cf_fresh_0 has-part", 1, &mut diags);
        assert_eq!(tokens.len(), 2);
        assert_eq!(tokens[1].kind, TokenKind::Name("has-part".into()));
    }
}
