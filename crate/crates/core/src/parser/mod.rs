//! Text format for ELH knowledge bases.
//!
//! The format is UTF-8 and line-oriented; each non-blank line holds one
//! statement. `#` starts a comment. The grammar:
//!
//! ```text
//! statement := concept "SubClassOf" concept
//!            | NAME "SubRoleOf" NAME
//!            | NAME "(" NAME ")"                  concept assertion
//!            | NAME "(" NAME "," NAME ")"         role assertion
//! concept   := prim ("and" prim)*
//! prim      := "Thing" | NAME | NAME "some" prim | "(" concept ")"
//! ```
//!
//! `⊑` and `⊓` are accepted as aliases for `SubClassOf` and `and`. Names
//! match `[A-Za-z_][A-Za-z0-9_-]*`; their kind (concept, role, individual)
//! is inferred from grammatical position and must be consistent across the
//! whole file. ABox concept assertions take atomic concept names only.

mod lexer;

use std::collections::{BTreeSet, HashMap};
use std::fmt;

use crate::model::{
    Assertion, Concept, KnowledgeBase, ModelError, Signature, SignatureBuilder, SymbolKind,
    TBoxAxiom,
};
use lexer::{lex_line, Token, TokenKind};

/// A positioned message from the parser.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ParseDiagnostic {
    /// 1-based line.
    pub line: u32,
    /// 1-based column, counted in characters.
    pub column: u32,
    pub message: String,
    pub severity: Severity,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Severity {
    Error,
    Warning,
}

impl fmt::Display for ParseDiagnostic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let severity = match self.severity {
            Severity::Error => "error",
            Severity::Warning => "warning",
        };
        write!(
            f,
            "{}:{}: {}: {}",
            self.line, self.column, severity, self.message
        )
    }
}

/// Failure to parse: one or more error diagnostics.
#[derive(Debug)]
pub struct ParseErrors(pub Vec<ParseDiagnostic>);

impl fmt::Display for ParseErrors {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, diagnostic) in self.0.iter().enumerate() {
            if i > 0 {
                writeln!(f)?;
            }
            write!(f, "{diagnostic}")?;
        }
        Ok(())
    }
}

impl std::error::Error for ParseErrors {}

/// A concept expression as written, before name resolution. Intersections
/// keep their source order here; canonical ordering happens on resolution.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ConceptExpr {
    Thing,
    Atomic(String),
    Exists(String, Box<ConceptExpr>),
    And(Vec<ConceptExpr>),
}

impl ConceptExpr {
    /// Resolves names against a signature, producing a canonical concept.
    pub fn resolve(&self, signature: &Signature) -> Result<Concept, ModelError> {
        match self {
            ConceptExpr::Thing => Ok(Concept::Top),
            ConceptExpr::Atomic(name) => signature
                .concept(name)
                .map(Concept::Atomic)
                .ok_or_else(|| unknown_or_conflict(signature, name, SymbolKind::Concept)),
            ConceptExpr::Exists(role, filler) => {
                let role = signature
                    .role(role)
                    .ok_or_else(|| unknown_or_conflict(signature, role, SymbolKind::Role))?;
                Ok(Concept::exists(role, filler.resolve(signature)?))
            }
            ConceptExpr::And(parts) => {
                let resolved: Result<Vec<Concept>, ModelError> =
                    parts.iter().map(|p| p.resolve(signature)).collect();
                Ok(Concept::and(resolved?))
            }
        }
    }
}

fn unknown_or_conflict(signature: &Signature, name: &str, wanted: SymbolKind) -> ModelError {
    match signature.kind_of(name) {
        Some(existing) => ModelError::KindConflict {
            name: name.to_string(),
            existing,
            requested: wanted,
        },
        None => ModelError::UnknownSymbol {
            name: name.to_string(),
            kind: wanted,
        },
    }
}

/// A successfully parsed knowledge base plus non-fatal diagnostics
/// (currently only duplicate-statement warnings).
#[derive(Debug)]
pub struct ParsedKb {
    pub kb: KnowledgeBase,
    pub warnings: Vec<ParseDiagnostic>,
}

#[derive(Clone, Debug)]
enum RawStatement {
    ConceptInclusion { lhs: ConceptExpr, rhs: ConceptExpr },
    RoleInclusion { sub: String, sup: String },
    ConceptAssertion { concept: String, individual: String },
    RoleAssertion { role: String, subject: String, object: String },
}

#[derive(Clone, Debug)]
struct NameUse {
    text: String,
    kind: SymbolKind,
    line: u32,
    col: u32,
}

struct TokenCursor<'a> {
    tokens: &'a [Token],
    pos: usize,
    line: u32,
    end_col: u32,
}

impl<'a> TokenCursor<'a> {
    fn new(tokens: &'a [Token], line: u32) -> Self {
        let end_col = tokens.last().map(|t| t.col + 1).unwrap_or(1);
        TokenCursor {
            tokens,
            pos: 0,
            line,
            end_col,
        }
    }

    fn peek(&self) -> Option<&Token> {
        self.tokens.get(self.pos)
    }

    fn next(&mut self) -> Option<&Token> {
        let token = self.tokens.get(self.pos);
        if token.is_some() {
            self.pos += 1;
        }
        token
    }

    fn here(&self) -> (u32, u32) {
        match self.peek() {
            Some(token) => (token.line, token.col),
            None => (self.line, self.end_col),
        }
    }

    fn error(&self, message: impl Into<String>) -> ParseDiagnostic {
        let (line, column) = self.here();
        ParseDiagnostic {
            line,
            column,
            message: message.into(),
            severity: Severity::Error,
        }
    }

    fn expect_name(&mut self, what: &str) -> Result<(String, u32, u32), ParseDiagnostic> {
        match self.peek() {
            Some(Token {
                kind: TokenKind::Name(name),
                line,
                col,
            }) => {
                let out = (name.clone(), *line, *col);
                self.pos += 1;
                Ok(out)
            }
            Some(token) => Err(self.error(format!(
                "expected {what}, found {}",
                token.kind.describe()
            ))),
            None => Err(self.error(format!("expected {what}, found end of line"))),
        }
    }

    fn expect_kind(&mut self, kind: &TokenKind) -> Result<(), ParseDiagnostic> {
        match self.peek() {
            Some(token) if token.kind == *kind => {
                self.pos += 1;
                Ok(())
            }
            Some(token) => Err(self.error(format!(
                "expected {}, found {}",
                kind.describe(),
                token.kind.describe()
            ))),
            None => Err(self.error(format!("expected {}, found end of line", kind.describe()))),
        }
    }

    fn expect_end(&self) -> Result<(), ParseDiagnostic> {
        match self.peek() {
            None => Ok(()),
            Some(token) => Err(self.error(format!(
                "unexpected {} after statement",
                token.kind.describe()
            ))),
        }
    }
}

fn parse_concept_tokens(
    cursor: &mut TokenCursor<'_>,
    uses: &mut Vec<NameUse>,
) -> Result<ConceptExpr, ParseDiagnostic> {
    let mut parts = vec![parse_prim(cursor, uses)?];
    while matches!(cursor.peek().map(|t| &t.kind), Some(TokenKind::And)) {
        cursor.next();
        parts.push(parse_prim(cursor, uses)?);
    }
    Ok(if parts.len() == 1 {
        parts.pop().expect("len checked")
    } else {
        ConceptExpr::And(parts)
    })
}

fn parse_prim(
    cursor: &mut TokenCursor<'_>,
    uses: &mut Vec<NameUse>,
) -> Result<ConceptExpr, ParseDiagnostic> {
    match cursor.peek().map(|t| t.kind.clone()) {
        Some(TokenKind::Thing) => {
            cursor.next();
            Ok(ConceptExpr::Thing)
        }
        Some(TokenKind::LParen) => {
            cursor.next();
            let inner = parse_concept_tokens(cursor, uses)?;
            cursor.expect_kind(&TokenKind::RParen)?;
            Ok(inner)
        }
        Some(TokenKind::Name(name)) => {
            let (line, col) = cursor.here();
            cursor.next();
            if matches!(cursor.peek().map(|t| &t.kind), Some(TokenKind::Some)) {
                cursor.next();
                uses.push(NameUse {
                    text: name.clone(),
                    kind: SymbolKind::Role,
                    line,
                    col,
                });
                let filler = parse_prim(cursor, uses)?;
                Ok(ConceptExpr::Exists(name, Box::new(filler)))
            } else {
                uses.push(NameUse {
                    text: name.clone(),
                    kind: SymbolKind::Concept,
                    line,
                    col,
                });
                Ok(ConceptExpr::Atomic(name))
            }
        }
        Some(other) => Err(cursor.error(format!(
            "expected a concept, found {}",
            other.describe()
        ))),
        None => Err(cursor.error("expected a concept, found end of line")),
    }
}

fn parse_statement(
    cursor: &mut TokenCursor<'_>,
    uses: &mut Vec<NameUse>,
) -> Result<RawStatement, ParseDiagnostic> {
    // An assertion starts with NAME "(" — no concept production allows a
    // parenthesis right after a name.
    if let (Some(TokenKind::Name(_)), Some(TokenKind::LParen)) = (
        cursor.tokens.first().map(|t| &t.kind),
        cursor.tokens.get(1).map(|t| &t.kind),
    ) {
        return parse_assertion(cursor, uses);
    }

    let lhs_start = cursor.here();
    let lhs = parse_concept_tokens(cursor, uses)?;
    match cursor.peek().map(|t| t.kind.clone()) {
        Some(TokenKind::SubClassOf) => {
            cursor.next();
            let rhs = parse_concept_tokens(cursor, uses)?;
            cursor.expect_end()?;
            Ok(RawStatement::ConceptInclusion { lhs, rhs })
        }
        Some(TokenKind::SubRoleOf) => {
            cursor.next();
            let sub = match lhs {
                ConceptExpr::Atomic(name) => name,
                _ => {
                    return Err(ParseDiagnostic {
                        line: lhs_start.0,
                        column: lhs_start.1,
                        message: "left side of `SubRoleOf` must be a single role name".into(),
                        severity: Severity::Error,
                    })
                }
            };
            // The left side was recorded as a concept use while parsing;
            // rewrite it now that the statement turned out to be a role axiom.
            if let Some(last) = uses.last_mut() {
                if last.text == sub {
                    last.kind = SymbolKind::Role;
                }
            }
            let (sup, line, col) = cursor.expect_name("a role name")?;
            uses.push(NameUse {
                text: sup.clone(),
                kind: SymbolKind::Role,
                line,
                col,
            });
            cursor.expect_end()?;
            Ok(RawStatement::RoleInclusion { sub, sup })
        }
        Some(TokenKind::LParen) => Err(cursor.error(
            "ABox assertions require an atomic concept name; complex concept assertions are not supported",
        )),
        Some(other) => Err(cursor.error(format!(
            "expected `SubClassOf` or `SubRoleOf`, found {}",
            other.describe()
        ))),
        None => Err(cursor.error("expected `SubClassOf` or `SubRoleOf`, found end of line")),
    }
}

fn parse_assertion(
    cursor: &mut TokenCursor<'_>,
    uses: &mut Vec<NameUse>,
) -> Result<RawStatement, ParseDiagnostic> {
    let (predicate, pred_line, pred_col) = cursor.expect_name("a name")?;
    cursor.expect_kind(&TokenKind::LParen)?;
    let (first, first_line, first_col) = cursor.expect_name("an individual name")?;
    uses.push(NameUse {
        text: first.clone(),
        kind: SymbolKind::Individual,
        line: first_line,
        col: first_col,
    });
    match cursor.peek().map(|t| t.kind.clone()) {
        Some(TokenKind::RParen) => {
            cursor.next();
            cursor.expect_end()?;
            uses.push(NameUse {
                text: predicate.clone(),
                kind: SymbolKind::Concept,
                line: pred_line,
                col: pred_col,
            });
            Ok(RawStatement::ConceptAssertion {
                concept: predicate,
                individual: first,
            })
        }
        Some(TokenKind::Comma) => {
            cursor.next();
            let (second, second_line, second_col) = cursor.expect_name("an individual name")?;
            uses.push(NameUse {
                text: second.clone(),
                kind: SymbolKind::Individual,
                line: second_line,
                col: second_col,
            });
            cursor.expect_kind(&TokenKind::RParen)?;
            cursor.expect_end()?;
            uses.push(NameUse {
                text: predicate.clone(),
                kind: SymbolKind::Role,
                line: pred_line,
                col: pred_col,
            });
            Ok(RawStatement::RoleAssertion {
                role: predicate,
                subject: first,
                object: second,
            })
        }
        Some(other) => Err(cursor.error(format!(
            "expected `,` or `)`, found {}",
            other.describe()
        ))),
        None => Err(cursor.error("expected `,` or `)`, found end of line")),
    }
}

/// Parses a knowledge base from text. All errors are collected; on success
/// the result carries duplicate-statement warnings.
pub fn parse_kb(text: &str) -> Result<ParsedKb, ParseErrors> {
    let mut diagnostics = Vec::new();
    let mut statements = Vec::new();
    let mut uses = Vec::new();

    for (index, raw_line) in text.lines().enumerate() {
        let line = index as u32 + 1;
        let tokens = lex_line(raw_line, line, &mut diagnostics);
        if tokens.is_empty() {
            continue;
        }
        let mut cursor = TokenCursor::new(&tokens, line);
        match parse_statement(&mut cursor, &mut uses) {
            Ok(statement) => statements.push((line, statement)),
            Err(diagnostic) => diagnostics.push(diagnostic),
        }
    }

    // Kind consistency across the whole file, reported at the use site.
    let mut first_use: HashMap<String, (SymbolKind, u32, u32)> = HashMap::new();
    for name_use in &uses {
        match first_use.get(&name_use.text) {
            None => {
                first_use.insert(
                    name_use.text.clone(),
                    (name_use.kind, name_use.line, name_use.col),
                );
            }
            Some((kind, line, col)) if *kind != name_use.kind => {
                diagnostics.push(ParseDiagnostic {
                    line: name_use.line,
                    column: name_use.col,
                    message: format!(
                        "name `{}` used as a {} here, but as a {} at {}:{}",
                        name_use.text, name_use.kind, kind, line, col
                    ),
                    severity: Severity::Error,
                });
            }
            Some(_) => {}
        }
    }

    if diagnostics.iter().any(|d| d.severity == Severity::Error) {
        return Err(ParseErrors(diagnostics));
    }

    let mut builder = SignatureBuilder::new();
    for name_use in &uses {
        builder
            .declare(&name_use.text, name_use.kind)
            .expect("kind conflicts were checked above");
    }
    let signature = builder.build();

    let mut tbox = BTreeSet::new();
    let mut abox = BTreeSet::new();
    let mut warnings = Vec::new();
    for (line, statement) in statements {
        let duplicate = match &statement {
            RawStatement::ConceptInclusion { lhs, rhs } => {
                let axiom = TBoxAxiom::ConceptInclusion {
                    lhs: lhs.resolve(&signature).expect("names declared"),
                    rhs: rhs.resolve(&signature).expect("names declared"),
                };
                !tbox.insert(axiom)
            }
            RawStatement::RoleInclusion { sub, sup } => {
                let axiom = TBoxAxiom::RoleInclusion {
                    sub: signature.role(sub).expect("names declared"),
                    sup: signature.role(sup).expect("names declared"),
                };
                !tbox.insert(axiom)
            }
            RawStatement::ConceptAssertion {
                concept,
                individual,
            } => {
                let assertion = Assertion::Concept(
                    signature.concept(concept).expect("names declared"),
                    signature.individual(individual).expect("names declared"),
                );
                !abox.insert(assertion)
            }
            RawStatement::RoleAssertion {
                role,
                subject,
                object,
            } => {
                let assertion = Assertion::Role(
                    signature.role(role).expect("names declared"),
                    signature.individual(subject).expect("names declared"),
                    signature.individual(object).expect("names declared"),
                );
                !abox.insert(assertion)
            }
        };
        if duplicate {
            warnings.push(ParseDiagnostic {
                line,
                column: 1,
                message: "duplicate statement ignored".into(),
                severity: Severity::Warning,
            });
        }
    }

    Ok(ParsedKb {
        kb: KnowledgeBase::new(signature, tbox, abox),
        warnings,
    })
}

/// Parses a single concept expression, e.g. `Male and hasSibling some Female`.
pub fn parse_concept(text: &str) -> Result<ConceptExpr, ParseErrors> {
    let mut diagnostics = Vec::new();
    let mut all_tokens = Vec::new();
    for (index, raw_line) in text.lines().enumerate() {
        all_tokens.extend(lex_line(raw_line, index as u32 + 1, &mut diagnostics));
    }
    if !diagnostics.is_empty() {
        return Err(ParseErrors(diagnostics));
    }
    let mut uses = Vec::new();
    let mut cursor = TokenCursor::new(&all_tokens, 1);
    let expr = parse_concept_tokens(&mut cursor, &mut uses).map_err(|d| ParseErrors(vec![d]))?;
    if let Err(diagnostic) = cursor.expect_end() {
        return Err(ParseErrors(vec![diagnostic]));
    }
    Ok(expr)
}

/// Serializes a knowledge base to canonical text: TBox axioms first, then
/// ABox assertions, each section sorted by rendered line. Parsing the
/// output reproduces a structurally equal knowledge base.
pub fn serialize_kb(kb: &KnowledgeBase) -> String {
    let signature = kb.signature();
    let mut tbox_lines: Vec<String> = kb.tbox().iter().map(|a| signature.render_axiom(a)).collect();
    tbox_lines.sort();
    let mut abox_lines: Vec<String> = kb
        .abox()
        .iter()
        .map(|a| signature.render_assertion(a))
        .collect();
    abox_lines.sort();

    let mut out = String::new();
    for line in tbox_lines.into_iter().chain(abox_lines) {
        out.push_str(&line);
        out.push('\n');
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::model::Concept;

    const EXAMPLE1: &str = "B and C SubClassOf D\nB(x)\nC(x)\nD(x)\n";

    #[test]
    fn parses_the_running_example() {
        let parsed = parse_kb(EXAMPLE1).unwrap();
        assert!(parsed.warnings.is_empty());
        let kb = parsed.kb;
        assert_eq!(kb.tbox().len(), 1);
        assert_eq!(kb.abox().len(), 3);
        let sig = kb.signature();
        let expected = TBoxAxiom::ConceptInclusion {
            lhs: Concept::and([
                Concept::Atomic(sig.concept("B").unwrap()),
                Concept::Atomic(sig.concept("C").unwrap()),
            ]),
            rhs: Concept::Atomic(sig.concept("D").unwrap()),
        };
        assert!(kb.tbox().contains(&expected));
    }

    #[test]
    fn parses_role_axioms_and_assertions() {
        let parsed = parse_kb("hasSon SubRoleOf hasChild\nMale(anna)\nhasChild(anna, alex)\n")
            .unwrap();
        let kb = parsed.kb;
        let sig = kb.signature();
        assert!(kb.tbox().contains(&TBoxAxiom::RoleInclusion {
            sub: sig.role("hasSon").unwrap(),
            sup: sig.role("hasChild").unwrap(),
        }));
        assert!(kb.abox().contains(&Assertion::Concept(
            sig.concept("Male").unwrap(),
            sig.individual("anna").unwrap()
        )));
        assert!(kb.abox().contains(&Assertion::Role(
            sig.role("hasChild").unwrap(),
            sig.individual("anna").unwrap(),
            sig.individual("alex").unwrap()
        )));
    }

    #[test]
    fn concept_grammar_binds_some_tighter_than_and() {
        let expr = parse_concept("Male and hasSibling some Female").unwrap();
        assert_eq!(
            expr,
            ConceptExpr::And(vec![
                ConceptExpr::Atomic("Male".into()),
                ConceptExpr::Exists(
                    "hasSibling".into(),
                    Box::new(ConceptExpr::Atomic("Female".into()))
                ),
            ])
        );
    }

    #[test]
    fn concept_grammar_parses_nested_fillers() {
        assert_eq!(parse_concept("Thing").unwrap(), ConceptExpr::Thing);
        let expr = parse_concept("hasChild some (Female and hasChild some Thing)").unwrap();
        assert_eq!(
            expr,
            ConceptExpr::Exists(
                "hasChild".into(),
                Box::new(ConceptExpr::And(vec![
                    ConceptExpr::Atomic("Female".into()),
                    ConceptExpr::Exists("hasChild".into(), Box::new(ConceptExpr::Thing)),
                ]))
            )
        );
    }

    #[test]
    fn kind_conflicts_are_reported_with_position() {
        let err = parse_kb("Male(anna)\nMale(anna, alex)\n").unwrap_err();
        let conflict = err
            .0
            .iter()
            .find(|d| d.message.contains("used as a role"))
            .expect("conflict diagnostic");
        assert_eq!((conflict.line, conflict.column), (2, 1));
    }

    #[test]
    fn complex_abox_assertions_are_rejected() {
        let err = parse_kb("(Male and Tall)(x)\n").unwrap_err();
        assert!(err.0[0].message.contains("complex concept assertions"));
        let err = parse_kb("hasChild some Male(x)\n").unwrap_err();
        assert!(err.0[0].message.contains("complex concept assertions"));
    }

    #[test]
    fn duplicate_statements_warn_and_dedup() {
        let parsed = parse_kb("B(x)\nB(x)\n").unwrap();
        assert_eq!(parsed.kb.abox().len(), 1);
        assert_eq!(parsed.warnings.len(), 1);
        assert_eq!(parsed.warnings[0].line, 2);
        // Canonically equal intersections on different lines also dedup.
        let parsed = parse_kb("B and C SubClassOf D\nC and B SubClassOf D\n").unwrap();
        assert_eq!(parsed.kb.tbox().len(), 1);
        assert_eq!(parsed.warnings.len(), 1);
    }

    #[test]
    fn serializes_the_running_example_canonically() {
        let kb = parse_kb(EXAMPLE1).unwrap().kb;
        assert_eq!(serialize_kb(&kb), "B and C SubClassOf D\nB(x)\nC(x)\nD(x)\n");
    }

    #[test]
    fn empty_kb_serializes_to_empty_text() {
        let kb = parse_kb("# only a comment\n\n").unwrap().kb;
        assert_eq!(serialize_kb(&kb), "");
    }

    #[test]
    fn round_trip_is_stable_for_unordered_input() {
        let text = "Zebra(x)\nApple(x)\nC and B SubClassOf A\nr some (D and C) SubClassOf B\n";
        let kb = parse_kb(text).unwrap().kb;
        let serialized = serialize_kb(&kb);
        let kb2 = parse_kb(&serialized).unwrap().kb;
        assert_eq!(kb, kb2);
        assert_eq!(serialize_kb(&kb2), serialized, "double round-trip stable");
    }

    #[test]
    fn unicode_aliases_parse_like_keywords() {
        let kb1 = parse_kb("B ⊓ C ⊑ D\n").unwrap().kb;
        let kb2 = parse_kb("B and C SubClassOf D\n").unwrap().kb;
        assert_eq!(kb1, kb2);
    }

    #[test]
    fn syntax_errors_carry_positions() {
        let err = parse_kb("B and SubClassOf D\n").unwrap_err();
        assert_eq!((err.0[0].line, err.0[0].column), (1, 7));
        let err = parse_kb("B(x\n").unwrap_err();
        assert!(err.0[0].message.contains("end of line"));
    }
}
