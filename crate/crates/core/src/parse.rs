//! Polynomial expression grammar.
//!
//! ```text
//! expr   := ('+'|'-')? term (('+'|'-') term)*
//! term   := factor ('*' factor)*
//! factor := integer | variable ('^' uint)? | '(' expr ')' ('^' uint)?
//! ```
//!
//! Integers are reduced modulo p and whitespace is insignificant. The
//! Unicode minus sign is accepted as `-`.

use crate::error::{Error, Result};
use crate::poly::{PolyRing, Polynomial};

pub fn parse_polynomial(ring: &PolyRing, src: &str) -> Result<Polynomial> {
    let mut p = Parser {
        ring,
        chars: src
            .chars()
            .map(|c| if c == '−' { '-' } else { c })
            .collect(),
        pos: 0,
    };
    let f = p.expr()?;
    p.skip_ws();
    if p.pos < p.chars.len() {
        return Err(p.error(format!("unexpected {:?}", p.chars[p.pos])));
    }
    Ok(f)
}

struct Parser<'a> {
    ring: &'a PolyRing,
    chars: Vec<char>,
    pos: usize,
}

impl Parser<'_> {
    fn error(&self, message: impl Into<String>) -> Error {
        let mut line = 1;
        let mut column = 1;
        for &c in &self.chars[..self.pos.min(self.chars.len())] {
            if c == '\n' {
                line += 1;
                column = 1;
            } else {
                column += 1;
            }
        }
        Error::Parse {
            line,
            column,
            message: message.into(),
        }
    }

    fn skip_ws(&mut self) {
        while self.pos < self.chars.len() && self.chars[self.pos].is_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<char> {
        self.skip_ws();
        self.chars.get(self.pos).copied()
    }

    fn expr(&mut self) -> Result<Polynomial> {
        let mut negate = false;
        match self.peek() {
            Some('-') => {
                negate = true;
                self.pos += 1;
            }
            Some('+') => self.pos += 1,
            _ => {}
        }
        let first = self.term()?;
        let mut acc = if negate { self.ring.neg(&first) } else { first };
        loop {
            match self.peek() {
                Some('+') => {
                    self.pos += 1;
                    let t = self.term()?;
                    acc = self.ring.add(&acc, &t);
                }
                Some('-') => {
                    self.pos += 1;
                    let t = self.term()?;
                    acc = self.ring.sub(&acc, &t);
                }
                _ => return Ok(acc),
            }
        }
    }

    fn term(&mut self) -> Result<Polynomial> {
        let mut acc = self.factor()?;
        while self.peek() == Some('*') {
            self.pos += 1;
            let f = self.factor()?;
            acc = self.ring.mul(&acc, &f);
        }
        Ok(acc)
    }

    fn uint(&mut self) -> Result<u64> {
        self.skip_ws();
        let start = self.pos;
        while self.pos < self.chars.len() && self.chars[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        if start == self.pos {
            return Err(self.error("expected an unsigned integer"));
        }
        let s: String = self.chars[start..self.pos].iter().collect();
        s.parse::<u64>().map_err(|_| {
            self.pos = start;
            self.error(format!("integer {s} out of range"))
        })
    }

    fn exponent(&mut self) -> Result<Option<u32>> {
        if self.peek() != Some('^') {
            return Ok(None);
        }
        self.pos += 1;
        let at = self.pos;
        let e = self.uint()?;
        u32::try_from(e).map(Some).map_err(|_| {
            self.pos = at;
            self.error("exponent too large")
        })
    }

    fn factor(&mut self) -> Result<Polynomial> {
        match self.peek() {
            Some('(') => {
                self.pos += 1;
                let inner = self.expr()?;
                if self.peek() != Some(')') {
                    return Err(self.error("expected ')'"));
                }
                self.pos += 1;
                Ok(match self.exponent()? {
                    Some(e) => self.ring.pow(&inner, e),
                    None => inner,
                })
            }
            Some(c) if c.is_ascii_digit() => {
                let v = self.uint()?;
                let p = self.ring.characteristic() as u64;
                Ok(self.ring.constant((v % p) as i64))
            }
            Some(c) if c.is_alphabetic() || c == '_' => {
                let start = self.pos;
                while self.pos < self.chars.len()
                    && (self.chars[self.pos].is_alphanumeric() || self.chars[self.pos] == '_')
                {
                    self.pos += 1;
                }
                let name: String = self.chars[start..self.pos].iter().collect();
                let Some(i) = self.ring.var_index(&name) else {
                    self.pos = start;
                    return Err(self.error(format!("unknown variable {name:?}")));
                };
                let mut exps = vec![0u32; self.ring.nvars()];
                exps[i] = self.exponent()?.unwrap_or(1);
                Ok(self.ring.term(1, &exps))
            }
            Some(c) => Err(self.error(format!("unexpected {c:?}"))),
            None => Err(self.error("unexpected end of input")),
        }
    }
}
