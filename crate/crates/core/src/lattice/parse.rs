//! Recursive-descent parser for proposition expressions.
//!
//! ```text
//! expr   := term ('|' term)*
//! term   := factor ('&' factor)*
//! factor := ATOM | '(' expr ')'
//! ATOM   := [A-Za-z_][A-Za-z0-9_]*
//! ```
//!
//! Whitespace is ignored everywhere. Columns in errors are 1-based character
//! positions.

use super::{canonicalize, AtomSet, Frame, LatticeError, Proposition};

#[derive(Debug, Clone, PartialEq)]
enum Token {
    Atom(String),
    And,
    Or,
    Open,
    Close,
}

fn tokenize(text: &str) -> Result<Vec<(Token, usize)>, LatticeError> {
    let chars: Vec<char> = text.chars().collect();
    let mut tokens = Vec::new();
    let mut i = 0;
    while i < chars.len() {
        let c = chars[i];
        let column = i + 1;
        let token = match c {
            c if c.is_whitespace() => {
                i += 1;
                continue;
            }
            '&' => Token::And,
            '|' => Token::Or,
            '(' => Token::Open,
            ')' => Token::Close,
            c if c.is_ascii_alphabetic() || c == '_' => {
                let start = i;
                while i < chars.len() && (chars[i].is_ascii_alphanumeric() || chars[i] == '_') {
                    i += 1;
                }
                tokens.push((Token::Atom(chars[start..i].iter().collect()), column));
                continue;
            }
            other => {
                return Err(LatticeError::Syntax {
                    column,
                    message: format!("unexpected character {other:?}"),
                })
            }
        };
        tokens.push((token, column));
        i += 1;
    }
    Ok(tokens)
}

struct Parser<'a> {
    frame: &'a Frame,
    tokens: Vec<(Token, usize)>,
    pos: usize,
    end_column: usize,
}

impl Parser<'_> {
    fn peek(&self) -> Option<&Token> {
        self.tokens.get(self.pos).map(|(t, _)| t)
    }

    fn column(&self) -> usize {
        self.tokens
            .get(self.pos)
            .map_or(self.end_column, |&(_, c)| c)
    }

    fn error(&self, message: impl Into<String>) -> LatticeError {
        LatticeError::Syntax {
            column: self.column(),
            message: message.into(),
        }
    }

    // Every sub-result is a list of raw terms; canonicalization happens once at the end
    // except inside products, where the cross product would otherwise blow up.
    fn expr(&mut self) -> Result<Vec<AtomSet>, LatticeError> {
        let mut terms = self.term()?;
        while self.peek() == Some(&Token::Or) {
            self.pos += 1;
            terms.extend(self.term()?);
        }
        Ok(terms)
    }

    fn term(&mut self) -> Result<Vec<AtomSet>, LatticeError> {
        let mut acc = self.factor()?;
        while self.peek() == Some(&Token::And) {
            self.pos += 1;
            let rhs = self.factor()?;
            let mut product = Vec::with_capacity(acc.len() * rhs.len());
            for &t in &acc {
                for &s in &rhs {
                    product.push(t.union(s));
                }
            }
            super::reduce_terms(&mut product);
            acc = product;
        }
        Ok(acc)
    }

    fn factor(&mut self) -> Result<Vec<AtomSet>, LatticeError> {
        let column = self.column();
        match self.tokens.get(self.pos).map(|(t, _)| t.clone()) {
            Some(Token::Atom(label)) => {
                let index = self
                    .frame
                    .index_of(&label)
                    .ok_or(LatticeError::UnknownAtom {
                        token: label,
                        column,
                    })?;
                self.pos += 1;
                Ok(vec![AtomSet::singleton(index)])
            }
            Some(Token::Open) => {
                self.pos += 1;
                let inner = self.expr()?;
                if self.peek() != Some(&Token::Close) {
                    return Err(self.error("expected ')'"));
                }
                self.pos += 1;
                Ok(inner)
            }
            Some(_) => Err(self.error("expected an atom or '('")),
            None => Err(self.error("unexpected end of expression")),
        }
    }
}

/// Parses `text` into the canonical proposition it denotes over `frame`.
pub fn parse_expression(text: &str, frame: &Frame) -> Result<Proposition, LatticeError> {
    let tokens = tokenize(text)?;
    let mut parser = Parser {
        frame,
        tokens,
        pos: 0,
        end_column: text.chars().count() + 1,
    };
    let terms = parser.expr()?;
    if parser.pos != parser.tokens.len() {
        return Err(parser.error("unexpected trailing input"));
    }
    Ok(canonicalize(frame, terms))
}
