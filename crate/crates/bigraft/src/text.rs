//! Text and JSON interchange for forests.
//!
//! Grammar (whitespace-insensitive inside brackets):
//!
//! ```text
//! forest := "1" | tree (" " tree)*
//! tree   := "o" [ "[" child ("," child)* "]" ]
//! child  := ("l" | "r") ":" tree
//! ```
//!
//! `render ∘ parse` is the identity on canonical text; the parser rejects
//! trees in which an `l`-decorated edge follows an `r`-decorated one under
//! the same vertex.

use serde_json::{json, Value};

use crate::error::{Error, Result};
use crate::forest::{Decoration, Forest, Tree};

/// Canonical text of a forest; the empty forest renders as `1`.
pub fn render(f: &Forest) -> String {
    if f.is_unit() {
        return "1".to_string();
    }
    let mut out = String::new();
    for (i, t) in f.trees().iter().enumerate() {
        if i > 0 {
            out.push(' ');
        }
        render_tree(t, &mut out);
    }
    out
}

fn render_tree(t: &Tree, out: &mut String) {
    out.push('o');
    if t.degree() == 1 {
        return;
    }
    out.push('[');
    let mut first = true;
    for (d, c) in t.children() {
        if !first {
            out.push(',');
        }
        first = false;
        out.push(d.letter());
        out.push(':');
        render_tree(c, out);
    }
    out.push(']');
}

struct Parser<'a> {
    bytes: &'a [u8],
    pos: usize,
}

impl<'a> Parser<'a> {
    fn peek(&self) -> Option<u8> {
        self.bytes.get(self.pos).copied()
    }

    fn skip_ws(&mut self) {
        while matches!(self.peek(), Some(b) if b.is_ascii_whitespace()) {
            self.pos += 1;
        }
    }

    fn expect(&mut self, b: u8) -> Result<()> {
        if self.peek() == Some(b) {
            self.pos += 1;
            Ok(())
        } else {
            Err(self.err(format!("expected '{}'", b as char)))
        }
    }

    fn err(&self, msg: impl Into<String>) -> Error {
        Error::Syntax {
            pos: self.pos,
            msg: msg.into(),
        }
    }

    fn tree(&mut self) -> Result<Tree> {
        self.expect(b'o')?;
        let mut left = Vec::new();
        let mut right = Vec::new();
        if self.peek() == Some(b'[') {
            self.pos += 1;
            loop {
                self.skip_ws();
                let deco_pos = self.pos;
                let deco = match self.peek() {
                    Some(b'l') => Decoration::L,
                    Some(b'r') => Decoration::R,
                    _ => return Err(self.err("expected decoration 'l' or 'r'")),
                };
                self.pos += 1;
                self.skip_ws();
                self.expect(b':')?;
                self.skip_ws();
                let child = self.tree()?;
                match deco {
                    Decoration::L if !right.is_empty() => {
                        return Err(Error::Validity(format!(
                            "l-edge after r-edge under the vertex whose bracket closes \
                             after byte {deco_pos}"
                        )));
                    }
                    Decoration::L => left.push(child),
                    Decoration::R => right.push(child),
                }
                self.skip_ws();
                match self.peek() {
                    Some(b',') => self.pos += 1,
                    Some(b']') => {
                        self.pos += 1;
                        break;
                    }
                    _ => return Err(self.err("expected ',' or ']'")),
                }
            }
        }
        Ok(Tree::b_plus(Forest::new(left), Forest::new(right)))
    }

    fn forest(&mut self) -> Result<Forest> {
        self.skip_ws();
        if self.peek() == Some(b'1') {
            self.pos += 1;
            self.skip_ws();
            return if self.pos == self.bytes.len() {
                Ok(Forest::unit())
            } else {
                Err(self.err("unexpected input after unit forest"))
            };
        }
        let mut trees = Vec::new();
        loop {
            trees.push(self.tree()?);
            let before = self.pos;
            self.skip_ws();
            if self.pos == self.bytes.len() {
                break;
            }
            if self.pos == before {
                return Err(self.err("expected whitespace between trees"));
            }
        }
        Ok(Forest::new(trees))
    }
}

/// Parses the textual form of a forest.
pub fn parse(text: &str) -> Result<Forest> {
    let mut p = Parser {
        bytes: text.as_bytes(),
        pos: 0,
    };
    p.forest()
}

/// JSON form: a tree is `{"c": [["l", tree], …]}`, a forest an array of
/// trees.
pub fn forest_to_json(f: &Forest) -> Value {
    Value::Array(f.trees().iter().map(tree_to_json).collect())
}

fn tree_to_json(t: &Tree) -> Value {
    let children: Vec<Value> = t
        .children()
        .map(|(d, c)| json!([d.letter().to_string(), tree_to_json(c)]))
        .collect();
    json!({ "c": children })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_examples() {
        assert_eq!(
            parse("o[l:o,r:o]").unwrap(),
            Forest::tree(Tree::b_plus(Forest::leaf(), Forest::leaf()))
        );
        assert_eq!(parse("1").unwrap(), Forest::unit());
        assert!(matches!(parse("o[r:o,l:o]"), Err(Error::Validity(_))));
    }

    #[test]
    fn whitespace_inside_brackets() {
        assert_eq!(
            parse("o[ l : o , r : o ]").unwrap(),
            parse("o[l:o,r:o]").unwrap()
        );
        assert_eq!(render(&parse("  o  o ").unwrap()), "o o");
    }

    #[test]
    fn syntax_errors_carry_position() {
        match parse("o[l:o,x:o]") {
            Err(Error::Syntax { pos, .. }) => assert_eq!(pos, 6),
            other => panic!("expected syntax error, got {other:?}"),
        }
        assert!(parse("").is_err());
        assert!(parse("1 o").is_err());
        assert!(parse("o[l:o").is_err());
    }

    #[test]
    fn roundtrip_degree_three() {
        for f in crate::forest::enumerate_forests(3, false).unwrap() {
            assert_eq!(parse(&render(&f)).unwrap(), f);
        }
    }

    #[test]
    fn json_shape() {
        let f = parse("o[l:o,r:o] o").unwrap();
        assert_eq!(
            forest_to_json(&f).to_string(),
            r#"[{"c":[["l",{"c":[]}],["r",{"c":[]}]]},{"c":[]}]"#
        );
        assert_eq!(forest_to_json(&Forest::unit()).to_string(), "[]");
    }
}
