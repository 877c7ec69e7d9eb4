//! Parser for the parenthesized term syntax: `x<digits>` or `(term term)`.

use super::{TermTree, Var};
use crate::error::{Error, Result};

pub(super) fn parse_term(input: &str) -> Result<TermTree> {
    let mut p = Parser { s: input.as_bytes(), pos: 0 };
    let t = p.term()?;
    p.skip_ws();
    if p.pos != p.s.len() {
        return Err(p.err("trailing input"));
    }
    Ok(t)
}

struct Parser<'a> {
    s: &'a [u8],
    pos: usize,
}

impl Parser<'_> {
    fn err(&self, what: &str) -> Error {
        Error::Parse(format!("{what} at byte {}", self.pos))
    }

    fn skip_ws(&mut self) {
        while self.pos < self.s.len() && self.s[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn term(&mut self) -> Result<TermTree> {
        self.skip_ws();
        match self.s.get(self.pos) {
            Some(b'x') => {
                self.pos += 1;
                let start = self.pos;
                while self.pos < self.s.len() && self.s[self.pos].is_ascii_digit() {
                    self.pos += 1;
                }
                if start == self.pos {
                    return Err(self.err("expected variable index"));
                }
                let digits = std::str::from_utf8(&self.s[start..self.pos]).unwrap();
                let v: Var = digits.parse().map_err(|_| self.err("variable index out of range"))?;
                if v == 0 {
                    return Err(self.err("variable indices start at 1"));
                }
                Ok(TermTree::leaf(v))
            }
            Some(b'(') => {
                self.pos += 1;
                let left = self.term()?;
                let right = self.term()?;
                self.skip_ws();
                if self.s.get(self.pos) != Some(&b')') {
                    return Err(self.err("expected ')'"));
                }
                self.pos += 1;
                TermTree::join(left, right).map_err(|e| Error::Parse(e.to_string()))
            }
            Some(_) => Err(self.err("unexpected character")),
            None => Err(self.err("unexpected end of input")),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_canonical_and_loose_spacing() {
        let a = parse_term("((x1 x2) x3)").unwrap();
        let b = parse_term("  ( (x1   x2)x3 ) ").unwrap();
        assert_eq!(a, b);
        assert_eq!(parse_term("x7").unwrap(), TermTree::leaf(7));
    }

    #[test]
    fn rejects_malformed() {
        for bad in ["", "(x1 x2", "(x1)", "x", "x0", "(x1 x1)", "(x1 x2) x3", "y1"] {
            assert!(parse_term(bad).is_err(), "{bad:?} should fail");
        }
    }
}
