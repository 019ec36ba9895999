//! The expression language of the command line.
//!
//! Literals are forest text (a space-separated run of trees is one
//! literal). Operators, loosest to tightest: `+`/`-`, `*`
//! (concatenation), `|>` (left graft) and `<|` (right graft,
//! left-associated), an integer coefficient prefix, and composition
//! `F @ (A1,...,An)`. A bare integer denotes that multiple of the empty
//! forest, so `1` is the unit.

use bigraft::error::{Error, Result};
use bigraft::graft::{graft_left, graft_right};
use bigraft::hopf::concat;
use bigraft::lincomb::Int;
use bigraft::operad::{compose, OperadElt};
use bigraft::{Forest, LinComb};

#[derive(Debug, Clone, PartialEq)]
enum Token {
    Forest(Forest),
    Int(Int),
    Star,
    Plus,
    Minus,
    GraftLeft,
    GraftRight,
    At,
    Open,
    Close,
    Comma,
}

fn err(pos: usize, msg: impl Into<String>) -> Error {
    Error::Syntax {
        pos,
        msg: msg.into(),
    }
}

fn scan_tree(b: &[u8], mut pos: usize) -> Result<usize> {
    if b.get(pos) != Some(&b'o') {
        return Err(err(pos, "expected a tree"));
    }
    pos += 1;
    if b.get(pos) == Some(&b'[') {
        let mut depth = 0usize;
        loop {
            match b.get(pos) {
                Some(b'[') => depth += 1,
                Some(b']') => {
                    depth -= 1;
                    if depth == 0 {
                        pos += 1;
                        break;
                    }
                }
                Some(_) => {}
                None => return Err(err(pos, "unclosed '['")),
            }
            pos += 1;
        }
    }
    Ok(pos)
}

fn tokenize(text: &str) -> Result<Vec<(usize, Token)>> {
    let b = text.as_bytes();
    let mut out = Vec::new();
    let mut pos = 0;
    while pos < b.len() {
        let c = b[pos];
        if c.is_ascii_whitespace() {
            pos += 1;
            continue;
        }
        let start = pos;
        let token = match c {
            b'o' => {
                // greedy forest literal: trees separated by whitespace
                let mut end = scan_tree(b, pos)?;
                loop {
                    let mut probe = end;
                    while matches!(b.get(probe), Some(w) if w.is_ascii_whitespace()) {
                        probe += 1;
                    }
                    if b.get(probe) == Some(&b'o') {
                        end = scan_tree(b, probe)?;
                    } else {
                        break;
                    }
                }
                let forest = bigraft::text::parse(&text[pos..end]).map_err(|e| match e {
                    Error::Syntax { pos: p, msg } => Error::Syntax { pos: pos + p, msg },
                    other => other,
                })?;
                pos = end;
                out.push((start, Token::Forest(forest)));
                continue;
            }
            b'0'..=b'9' => {
                let mut end = pos;
                while matches!(b.get(end), Some(d) if d.is_ascii_digit()) {
                    end += 1;
                }
                let value: Int = text[pos..end].parse().expect("digits");
                pos = end;
                out.push((start, Token::Int(value)));
                continue;
            }
            b'*' => Token::Star,
            b'+' => Token::Plus,
            b'-' => Token::Minus,
            b'|' if b.get(pos + 1) == Some(&b'>') => {
                pos += 1;
                Token::GraftLeft
            }
            b'<' if b.get(pos + 1) == Some(&b'|') => {
                pos += 1;
                Token::GraftRight
            }
            b'@' => Token::At,
            b'(' => Token::Open,
            b')' => Token::Close,
            b',' => Token::Comma,
            other => {
                return Err(err(
                    pos,
                    format!("unexpected character '{}'", other as char),
                ))
            }
        };
        pos += 1;
        out.push((start, token));
    }
    Ok(out)
}

struct Parser {
    tokens: Vec<(usize, Token)>,
    at: usize,
    end: usize,
}

impl Parser {
    fn peek(&self) -> Option<&Token> {
        self.tokens.get(self.at).map(|(_, t)| t)
    }

    fn pos(&self) -> usize {
        self.tokens
            .get(self.at)
            .map(|(p, _)| *p)
            .unwrap_or(self.end)
    }

    fn bump(&mut self) -> Option<Token> {
        let t = self.tokens.get(self.at).map(|(_, t)| t.clone());
        self.at += 1;
        t
    }

    fn expect(&mut self, want: &Token, what: &str) -> Result<()> {
        if self.peek() == Some(want) {
            self.at += 1;
            Ok(())
        } else {
            Err(err(self.pos(), format!("expected {what}")))
        }
    }

    fn sum(&mut self) -> Result<LinComb> {
        let mut negate = false;
        if self.peek() == Some(&Token::Minus) {
            self.at += 1;
            negate = true;
        }
        let mut acc = self.concat_level()?;
        if negate {
            acc = -acc;
        }
        loop {
            match self.peek() {
                Some(Token::Plus) => {
                    self.at += 1;
                    acc = acc + self.concat_level()?;
                }
                Some(Token::Minus) => {
                    self.at += 1;
                    acc = acc - self.concat_level()?;
                }
                _ => return Ok(acc),
            }
        }
    }

    fn concat_level(&mut self) -> Result<LinComb> {
        let mut acc = self.graft_level()?;
        while self.peek() == Some(&Token::Star) {
            self.at += 1;
            acc = concat(&acc, &self.graft_level()?);
        }
        Ok(acc)
    }

    fn graft_level(&mut self) -> Result<LinComb> {
        let mut acc = self.unary()?;
        loop {
            match self.peek() {
                Some(Token::GraftLeft) => {
                    self.at += 1;
                    acc = graft_left(&acc, &self.unary()?)?;
                }
                Some(Token::GraftRight) => {
                    self.at += 1;
                    acc = graft_right(&acc, &self.unary()?)?;
                }
                _ => return Ok(acc),
            }
        }
    }

    fn unary(&mut self) -> Result<LinComb> {
        if let Some(Token::Int(_)) = self.peek() {
            let Some(Token::Int(k)) = self.bump() else {
                unreachable!()
            };
            // a following operand makes the integer a coefficient;
            // otherwise it multiplies the empty forest
            let operand = match self.peek() {
                Some(Token::Forest(_) | Token::Int(_) | Token::Open) => self.unary()?,
                _ => LinComb::unit(),
            };
            return Ok(operand.scaled(&k));
        }
        self.postfix()
    }

    fn postfix(&mut self) -> Result<LinComb> {
        let mut acc = self.primary()?;
        while self.peek() == Some(&Token::At) {
            let at_pos = self.pos();
            self.at += 1;
            self.expect(&Token::Open, "'(' after '@'")?;
            let mut args = vec![self.sum()?];
            while self.peek() == Some(&Token::Comma) {
                self.at += 1;
                args.push(self.sum()?);
            }
            self.expect(&Token::Close, "')'")?;
            let f = OperadElt::new(acc).map_err(|e| at_err(at_pos, e))?;
            let args = args
                .into_iter()
                .map(|a| OperadElt::new(a).map_err(|e| at_err(at_pos, e)))
                .collect::<Result<Vec<_>>>()?;
            acc = compose(&f, &args)?.value().clone();
        }
        Ok(acc)
    }

    fn primary(&mut self) -> Result<LinComb> {
        match self.bump() {
            Some(Token::Forest(f)) => Ok(LinComb::basis(f)),
            Some(Token::Open) => {
                let inner = self.sum()?;
                self.expect(&Token::Close, "')'")?;
                Ok(inner)
            }
            _ => {
                self.at = self.at.saturating_sub(1);
                Err(err(self.pos(), "expected a forest, an integer, or '('"))
            }
        }
    }
}

fn at_err(pos: usize, e: Error) -> Error {
    match e {
        Error::Domain(msg) => err(pos, format!("bad composition operand: {msg}")),
        other => other,
    }
}

/// Parses and evaluates an expression.
pub fn eval_str(text: &str) -> Result<LinComb> {
    let tokens = tokenize(text)?;
    let mut p = Parser {
        tokens,
        at: 0,
        end: text.len(),
    };
    let value = p.sum()?;
    if p.at != p.tokens.len() {
        return Err(err(p.pos(), "unexpected trailing input"));
    }
    Ok(value)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn lc(s: &str) -> LinComb {
        LinComb::basis(bigraft::text::parse(s).unwrap())
    }

    #[test]
    fn grafts() {
        assert_eq!(eval_str("o |> o").unwrap(), lc("o[l:o]"));
        assert_eq!(eval_str("o <| o").unwrap(), lc("o[r:o]"));
        assert_eq!(eval_str("o |> o <| o").unwrap(), lc("o[l:o,r:o]"));
    }

    #[test]
    fn composition() {
        assert_eq!(eval_str("o[r:o] @ (o o, o o)").unwrap(), lc("o o[r:o,r:o]"));
        assert_eq!(eval_str("o @ (o[l:o] o)").unwrap(), lc("o[l:o] o"));
        assert!(eval_str("o o @ (o)").is_err());
    }

    #[test]
    fn linear_arithmetic() {
        assert_eq!(eval_str("2 o - o").unwrap(), lc("o"));
        assert_eq!(eval_str("1").unwrap(), LinComb::unit());
        assert_eq!(eval_str("- o + o").unwrap(), LinComb::zero());
        assert_eq!(eval_str("3").unwrap(), LinComb::unit() * 3);
    }

    #[test]
    fn forest_literals_are_greedy() {
        assert_eq!(eval_str("o o |> o").unwrap(), lc("o[l:o,l:o]"));
        assert_eq!(eval_str("o * o |> o").unwrap(), lc("o o[l:o]"));
        assert_eq!(eval_str("o[l:o] o[r:o]").unwrap(), lc("o[l:o] o[r:o]"));
    }

    #[test]
    fn errors() {
        assert!(matches!(eval_str("o |>"), Err(Error::Syntax { .. })));
        assert!(matches!(eval_str("o[r:o,l:o]"), Err(Error::Validity(_))));
        assert!(matches!(eval_str("1 |> o"), Err(Error::Domain(_))));
        assert!(matches!(eval_str("o ^ o"), Err(Error::Syntax { .. })));
    }
}
