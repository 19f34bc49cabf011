//! Compact polynomial expressions such as `2x1^2+3x2^2-4x1x2+2.5` or
//! `10/3x1^3x2^3-x1`.
//!
//! A term is an optional coefficient (decimal or `p/q`) followed by factors
//! `x<i>` or `x<i>^<e>` with 1-based indices; `*` and whitespace are ignored.

use bsos_core::{Polynomial, Term};

use crate::Error;

pub fn parse_polynomial(num_vars: usize, text: &str) -> Result<Polynomial, Error> {
    let chars: Vec<char> = text
        .chars()
        .filter(|c| !c.is_whitespace() && *c != '*')
        .collect();
    let mut p = Parser {
        chars: &chars,
        pos: 0,
        text,
    };
    let mut terms = Vec::new();
    if p.peek().is_none() {
        return Err(p.error("empty expression"));
    }
    loop {
        let sign = match p.peek() {
            Some('+') => {
                p.pos += 1;
                1.0
            }
            Some('-') => {
                p.pos += 1;
                -1.0
            }
            None => break,
            _ if terms.is_empty() => 1.0,
            Some(c) => return Err(p.error(&format!("expected '+' or '-', found '{c}'"))),
        };
        terms.push(p.term(num_vars, sign)?);
    }
    Ok(Polynomial::new(num_vars, terms)?.canonicalize())
}

struct Parser<'a> {
    chars: &'a [char],
    pos: usize,
    text: &'a str,
}

impl Parser<'_> {
    fn peek(&self) -> Option<char> {
        self.chars.get(self.pos).copied()
    }

    fn error(&self, msg: &str) -> Error {
        Error::Parse {
            input: self.text.to_string(),
            message: format!("{msg} at position {}", self.pos),
        }
    }

    fn term(&mut self, n: usize, sign: f64) -> Result<Term, Error> {
        let mut coeff = sign;
        let mut has_coeff = false;
        if matches!(self.peek(), Some(c) if c.is_ascii_digit() || c == '.') {
            coeff *= self.number()?;
            has_coeff = true;
            if self.peek() == Some('/') {
                self.pos += 1;
                let den = self.number()?;
                if den == 0.0 {
                    return Err(self.error("division by zero"));
                }
                coeff /= den;
            }
        }
        let mut exponents = vec![0u32; n];
        let mut has_factor = false;
        while self.peek() == Some('x') {
            self.pos += 1;
            let idx = self.integer()?;
            if idx == 0 || idx as usize > n {
                return Err(self.error(&format!("variable x{idx} outside x1..x{n}")));
            }
            let mut e = 1;
            if self.peek() == Some('^') {
                self.pos += 1;
                e = self.integer()?;
            }
            exponents[idx as usize - 1] += e;
            has_factor = true;
        }
        if !has_coeff && !has_factor {
            return Err(self.error("expected a coefficient or a variable"));
        }
        Ok(Term::new(exponents, coeff))
    }

    fn integer(&mut self) -> Result<u32, Error> {
        let start = self.pos;
        while matches!(self.peek(), Some(c) if c.is_ascii_digit()) {
            self.pos += 1;
        }
        let s: String = self.chars[start..self.pos].iter().collect();
        s.parse().map_err(|_| self.error("expected an integer"))
    }

    fn number(&mut self) -> Result<f64, Error> {
        let start = self.pos;
        while matches!(self.peek(), Some(c) if c.is_ascii_digit() || c == '.') {
            self.pos += 1;
        }
        if matches!(self.peek(), Some('e' | 'E')) {
            self.pos += 1;
            if matches!(self.peek(), Some('+' | '-')) {
                self.pos += 1;
            }
            while matches!(self.peek(), Some(c) if c.is_ascii_digit()) {
                self.pos += 1;
            }
        }
        let s: String = self.chars[start..self.pos].iter().collect();
        s.parse().map_err(|_| self.error("malformed number"))
    }
}
