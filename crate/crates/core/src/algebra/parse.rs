use std::collections::BTreeMap;
use std::sync::Arc;

use super::{Element, GeneratorTable};
use crate::error::{Error, Result};
use crate::gf16::Scalar16;

/// Names known to the parser: the generators of a table plus aliases for
/// derived elements (such as `d3` or `xi` on the E₅ page).
///
/// Grammar: `expr := term (('+' | '-') term)*`, `term := factor ('*' factor)*`,
/// `factor := atom ('^' int)?`, `atom := name | 'z' | '0' | '1' | '(' expr ')'`.
/// `z` is ζ; a negative exponent is allowed only on a nonzero scalar.
#[derive(Clone, Debug)]
pub struct SymbolTable {
    table: Arc<GeneratorTable>,
    aliases: BTreeMap<String, Element>,
}

#[derive(Clone, Debug, PartialEq)]
enum Token {
    Name(String),
    Int(i64),
    Plus,
    Star,
    Caret,
    Minus,
    Open,
    Close,
}

fn tokenize(s: &str) -> Result<Vec<Token>> {
    let mut out = Vec::new();
    let chars: Vec<char> = s.chars().collect();
    let mut i = 0;
    while i < chars.len() {
        let c = chars[i];
        match c {
            ' ' | '\t' | '\n' => i += 1,
            '+' => {
                out.push(Token::Plus);
                i += 1
            }
            '-' => {
                out.push(Token::Minus);
                i += 1
            }
            '*' => {
                out.push(Token::Star);
                i += 1
            }
            '^' => {
                out.push(Token::Caret);
                i += 1
            }
            '(' => {
                out.push(Token::Open);
                i += 1
            }
            ')' => {
                out.push(Token::Close);
                i += 1
            }
            '0'..='9' => {
                let start = i;
                while i < chars.len() && chars[i].is_ascii_digit() {
                    i += 1;
                }
                let text: String = chars[start..i].iter().collect();
                let n = text
                    .parse()
                    .map_err(|_| Error::Parse(format!("bad integer {text}")))?;
                out.push(Token::Int(n));
            }
            c if c.is_ascii_alphabetic() => {
                let start = i;
                while i < chars.len() && (chars[i].is_ascii_alphanumeric() || chars[i] == '_') {
                    i += 1;
                }
                out.push(Token::Name(chars[start..i].iter().collect()));
            }
            other => return Err(Error::Parse(format!("unexpected character {other:?}"))),
        }
    }
    Ok(out)
}

struct Parser<'a> {
    symbols: &'a SymbolTable,
    tokens: Vec<Token>,
    pos: usize,
}

impl Parser<'_> {
    fn peek(&self) -> Option<&Token> {
        self.tokens.get(self.pos)
    }

    fn next(&mut self) -> Option<Token> {
        let t = self.tokens.get(self.pos).cloned();
        self.pos += 1;
        t
    }

    fn expr(&mut self) -> Result<Element> {
        let mut acc = self.term()?;
        while matches!(self.peek(), Some(Token::Plus | Token::Minus)) {
            self.pos += 1;
            acc = &acc + &self.term()?;
        }
        Ok(acc)
    }

    fn term(&mut self) -> Result<Element> {
        let mut acc = self.factor()?;
        while matches!(self.peek(), Some(Token::Star)) {
            self.pos += 1;
            acc = &acc * &self.factor()?;
        }
        Ok(acc)
    }

    fn factor(&mut self) -> Result<Element> {
        let base = self.atom()?;
        if !matches!(self.peek(), Some(Token::Caret)) {
            return Ok(base);
        }
        self.pos += 1;
        let negative = matches!(self.peek(), Some(Token::Minus));
        if negative {
            self.pos += 1;
        }
        let k = match self.next() {
            Some(Token::Int(k)) => k,
            other => return Err(Error::Parse(format!("expected exponent, found {other:?}"))),
        };
        if !negative {
            return Ok(base.pow(k as u32));
        }
        // Negative powers only make sense for nonzero constants.
        let c = match base.terms().next() {
            Some((m, c)) if base.len() == 1 && m.is_one() => c,
            _ => return Err(Error::Parse("negative exponent on a non-scalar".into())),
        };
        let inv = c.inverse()?;
        Ok(Element::scalar(base.table(), inv.pow(k as u64)))
    }

    fn atom(&mut self) -> Result<Element> {
        let table = &self.symbols.table;
        match self.next() {
            Some(Token::Open) => {
                let x = self.expr()?;
                match self.next() {
                    Some(Token::Close) => Ok(x),
                    other => Err(Error::Parse(format!("expected ')', found {other:?}"))),
                }
            }
            Some(Token::Int(0)) => Ok(Element::zero(table)),
            Some(Token::Int(1)) => Ok(Element::one(table)),
            Some(Token::Name(name)) => self.symbols.lookup(&name),
            other => Err(Error::Parse(format!("unexpected token {other:?}"))),
        }
    }
}

impl SymbolTable {
    pub fn new(table: &Arc<GeneratorTable>) -> Self {
        SymbolTable {
            table: table.clone(),
            aliases: BTreeMap::new(),
        }
    }

    pub fn table(&self) -> &Arc<GeneratorTable> {
        &self.table
    }

    pub fn add_alias(&mut self, name: &str, value: Element) -> Result<()> {
        if name == "z" || self.table.index_of(name).is_some() {
            return Err(Error::Domain(format!("alias {name} shadows a generator")));
        }
        if **value.table() != *self.table {
            return Err(Error::TableMismatch);
        }
        self.aliases.insert(name.to_string(), value);
        Ok(())
    }

    /// Defines an alias by parsing an expression in the current symbols.
    pub fn define(&mut self, name: &str, expr: &str) -> Result<()> {
        let value = self.parse(expr)?;
        self.add_alias(name, value)
    }

    pub fn aliases(&self) -> impl Iterator<Item = (&str, &Element)> {
        self.aliases.iter().map(|(k, v)| (k.as_str(), v))
    }

    pub fn alias(&self, name: &str) -> Option<&Element> {
        self.aliases.get(name)
    }

    fn lookup(&self, name: &str) -> Result<Element> {
        if name == "z" {
            return Ok(Element::scalar(&self.table, Scalar16::ZETA));
        }
        if let Some(x) = self.aliases.get(name) {
            return Ok(x.clone());
        }
        Element::named(&self.table, name)
    }

    pub fn parse(&self, s: &str) -> Result<Element> {
        let tokens = tokenize(s)?;
        if tokens.is_empty() {
            return Err(Error::Parse("empty expression".into()));
        }
        let mut p = Parser {
            symbols: self,
            tokens,
            pos: 0,
        };
        let x = p.expr()?;
        if p.pos != p.tokens.len() {
            return Err(Error::Parse(format!(
                "trailing input after token {} in {s:?}",
                p.pos
            )));
        }
        Ok(x)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::GeneratorSpec;

    fn symbols() -> SymbolTable {
        let t = GeneratorTable::new(&[
            GeneratorSpec::new("a1", 1, 0, 1, "a2"),
            GeneratorSpec::new("a2", 1, 0, 2, "a4"),
            GeneratorSpec::new("a4", 1, 0, 4, "a8"),
            GeneratorSpec::new("a8", 1, 0, 8, "a1"),
            GeneratorSpec::new("u5", 0, 1, 5, "u10"),
            GeneratorSpec::new("u10", 0, 1, 10, "u5"),
        ])
        .unwrap();
        SymbolTable::new(&t)
    }

    #[test]
    fn round_trip() {
        let s = symbols();
        for text in [
            "a4^2*u5 + z^3*a1*a2*u10",
            "z^14*a8^3 + a1",
            "z",
            "0",
            "(a1 + a2)^2",
        ] {
            let x = s.parse(text).unwrap();
            assert_eq!(s.parse(&x.to_string()).unwrap(), x, "{text}");
        }
    }

    #[test]
    fn characteristic_two() {
        let s = symbols();
        assert!(s.parse("a1 + a1").unwrap().is_zero());
        assert_eq!(s.parse("(a1 + a2)^2").unwrap(), s.parse("a1^2 + a2^2").unwrap());
        assert_eq!(s.parse("z^-1*z").unwrap(), s.parse("1").unwrap());
    }

    #[test]
    fn errors() {
        let s = symbols();
        assert!(s.parse("a3").is_err());
        assert!(s.parse("a1 +").is_err());
        assert!(s.parse("a1^-1").is_err());
        assert!(s.parse("a1 a2").is_err());
    }
}
