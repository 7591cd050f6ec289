use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use super::{insert, Slot};
use crate::error::{Error, Result};
use crate::meander::MeanderCode;

/// A tree of insertions. Text form: `ins(HOST, C<i>|T<i>, PIECE)` with
/// meander literals at the leaves.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum OpExpr {
    Insert {
        host: Box<OpExpr>,
        slot: Slot,
        piece: Box<OpExpr>,
    },
    Leaf(MeanderCode),
}

impl OpExpr {
    pub fn leaf(code: MeanderCode) -> Self {
        OpExpr::Leaf(code)
    }

    pub fn insert(host: OpExpr, slot: Slot, piece: OpExpr) -> Self {
        OpExpr::Insert {
            host: Box::new(host),
            slot,
            piece: Box::new(piece),
        }
    }

    /// Evaluates bottom-up.
    pub fn eval(&self) -> Result<MeanderCode> {
        match self {
            OpExpr::Leaf(code) => {
                code.ensure_valid()?;
                Ok(code.clone())
            }
            OpExpr::Insert { host, slot, piece } => insert(&host.eval()?, *slot, &piece.eval()?),
        }
    }

    /// Accepts either the text form or JSON.
    pub fn parse(text: &str) -> Result<Self> {
        text.parse()
    }
}

impl fmt::Display for OpExpr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            OpExpr::Leaf(code) => write!(f, "{code}"),
            OpExpr::Insert { host, slot, piece } => write!(f, "ins({host}, {slot}, {piece})"),
        }
    }
}

impl FromStr for OpExpr {
    type Err = Error;

    fn from_str(text: &str) -> Result<Self> {
        let trimmed = text.trim_start();
        if trimmed.starts_with('{') {
            return Ok(serde_json::from_str(trimmed)?);
        }
        let mut parser = Parser { src: text, at: 0 };
        let expr = parser.expr()?;
        parser.skip_ws();
        if parser.at != text.len() {
            return Err(parser.error("trailing input"));
        }
        Ok(expr)
    }
}

struct Parser<'a> {
    src: &'a str,
    at: usize,
}

impl Parser<'_> {
    fn rest(&self) -> &str {
        &self.src[self.at..]
    }

    fn skip_ws(&mut self) {
        let rest = self.rest();
        self.at += rest.len() - rest.trim_start().len();
    }

    fn error(&self, msg: &str) -> Error {
        Error::Syntax {
            at: self.at,
            msg: msg.to_string(),
        }
    }

    fn expect(&mut self, c: char) -> Result<()> {
        self.skip_ws();
        if self.rest().starts_with(c) {
            self.at += c.len_utf8();
            Ok(())
        } else {
            Err(self.error(&format!("expected {c:?}")))
        }
    }

    fn expr(&mut self) -> Result<OpExpr> {
        self.skip_ws();
        if self.rest().starts_with("ins(") {
            self.at += 4;
            let host = self.expr()?;
            self.expect(',')?;
            let slot = self.slot()?;
            self.expect(',')?;
            let piece = self.expr()?;
            self.expect(')')?;
            Ok(OpExpr::insert(host, slot, piece))
        } else {
            self.literal()
        }
    }

    fn slot(&mut self) -> Result<Slot> {
        self.skip_ws();
        let start = self.at;
        let len = self
            .rest()
            .char_indices()
            .find(|&(i, c)| !(c.is_ascii_digit() || (i == 0 && (c == 'C' || c == 'T'))))
            .map_or(self.rest().len(), |(i, _)| i);
        self.at += len;
        self.src[start..self.at].parse().map_err(|e| match e {
            Error::Syntax { at, msg } => Error::Syntax { at: start + at, msg },
            other => other,
        })
    }

    /// A meander literal ends before a comma that is not followed by a digit,
    /// or before a closing parenthesis.
    fn literal(&mut self) -> Result<OpExpr> {
        let start = self.at;
        let bytes = self.src.as_bytes();
        let mut end = start;
        while end < bytes.len() {
            match bytes[end] {
                b')' => break,
                b',' => {
                    let next = self.src[end + 1..].trim_start();
                    if !next.starts_with(|c: char| c.is_ascii_digit()) {
                        break;
                    }
                }
                _ => {}
            }
            end += 1;
        }
        let text = &self.src[start..end];
        let code = text.parse::<MeanderCode>().map_err(|e| match e {
            Error::Syntax { at, msg } => Error::Syntax { at: start + at, msg },
            other => other,
        })?;
        self.at = end;
        Ok(OpExpr::Leaf(code))
    }
}
