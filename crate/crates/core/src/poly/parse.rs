//! Text form of graded polynomials.
//!
//! ```text
//! poly   := ['-'] term (('+' | '-') term)*
//! term   := [rational] factor+
//! factor := var | '[' poly (',' poly)+ ']' | 'ac(' poly ',' poly ')' | '(' poly ')'
//! var    := 'x' index ':' label
//! ```
//!
//! Commutators are left-normed, `ac(a, b) = ab + ba`, and a label is a
//! name from the [`LabelMap`] or a residue tuple such as `(1,0)`.

use super::{label_char, GradedPoly, LabelMap, PolyError, Var};
use crate::rational::Rational;

pub fn parse(text: &str, labels: &LabelMap) -> Result<GradedPoly, PolyError> {
    let mut p = Parser { s: text.as_bytes(), pos: 0, labels };
    let f = p.poly()?;
    p.skip_ws();
    if p.pos != p.s.len() {
        return Err(p.err("unexpected trailing input"));
    }
    Ok(f)
}

struct Parser<'a> {
    s: &'a [u8],
    pos: usize,
    labels: &'a LabelMap,
}

impl Parser<'_> {
    fn err(&self, msg: &str) -> PolyError {
        PolyError::Syntax { pos: self.pos, msg: msg.to_string() }
    }

    fn skip_ws(&mut self) {
        while self.pos < self.s.len() && self.s[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.s.get(self.pos).copied()
    }

    fn expect(&mut self, c: u8) -> Result<(), PolyError> {
        if self.peek() == Some(c) {
            self.pos += 1;
            Ok(())
        } else {
            Err(self.err(&format!("expected `{}`", c as char)))
        }
    }

    fn poly(&mut self) -> Result<GradedPoly, PolyError> {
        let mut sign = Rational::one();
        if self.peek() == Some(b'-') {
            self.pos += 1;
            sign = -Rational::one();
        }
        let mut acc = self.term()?.scale(&sign);
        loop {
            match self.peek() {
                Some(b'+') => {
                    self.pos += 1;
                    acc = acc.add(&self.term()?);
                }
                Some(b'-') => {
                    self.pos += 1;
                    acc = acc.sub(&self.term()?);
                }
                _ => return Ok(acc),
            }
        }
    }

    fn starts_factor(&mut self) -> bool {
        match self.peek() {
            Some(b'x') | Some(b'[') | Some(b'(') => true,
            Some(b'a') => self.s[self.pos..].starts_with(b"ac("),
            _ => false,
        }
    }

    fn term(&mut self) -> Result<GradedPoly, PolyError> {
        let coeff = if self.peek().is_some_and(|c| c.is_ascii_digit()) { self.rational()? } else { Rational::one() };
        if !self.starts_factor() {
            return Err(self.err("expected a variable, `[`, `ac(` or `(`"));
        }
        let mut acc = self.factor()?;
        while self.starts_factor() {
            acc = acc.mul(&self.factor()?);
        }
        Ok(acc.scale(&coeff))
    }

    fn digits(&mut self) -> Result<&str, PolyError> {
        let start = self.pos;
        while self.pos < self.s.len() && self.s[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        if start == self.pos {
            return Err(self.err("expected digits"));
        }
        Ok(std::str::from_utf8(&self.s[start..self.pos]).expect("ascii"))
    }

    fn rational(&mut self) -> Result<Rational, PolyError> {
        self.skip_ws();
        let start = self.pos;
        let num: i64 = self.digits()?.parse().map_err(|_| self.err("coefficient too large"))?;
        if self.s.get(self.pos) == Some(&b'/') {
            self.pos += 1;
            let den: i64 = self.digits()?.parse().map_err(|_| self.err("coefficient too large"))?;
            if den == 0 {
                self.pos = start;
                return Err(self.err("zero denominator"));
            }
            return Ok(Rational::new(num, den));
        }
        Ok(Rational::from_int(num))
    }

    fn factor(&mut self) -> Result<GradedPoly, PolyError> {
        match self.peek() {
            Some(b'x') => {
                self.pos += 1;
                let index: u32 = self.digits()?.parse().map_err(|_| self.err("variable index too large"))?;
                if index == 0 {
                    return Err(self.err("variable indices start at 1"));
                }
                if self.s.get(self.pos) != Some(&b':') {
                    return Err(self.err("expected `:` and a degree label"));
                }
                self.pos += 1;
                let degree = self.label()?;
                Ok(GradedPoly::var(index, degree))
            }
            Some(b'[') => {
                self.pos += 1;
                let mut parts = vec![self.poly()?];
                while self.peek() == Some(b',') {
                    self.pos += 1;
                    parts.push(self.poly()?);
                }
                if parts.len() < 2 {
                    return Err(self.err("a commutator needs at least two entries"));
                }
                self.expect(b']')?;
                Ok(GradedPoly::left_normed(&parts))
            }
            Some(b'a') => {
                self.pos += 3;
                let a = self.poly()?;
                self.expect(b',')?;
                let b = self.poly()?;
                self.expect(b')')?;
                Ok(a.anticommutator(&b))
            }
            Some(b'(') => {
                self.pos += 1;
                let p = self.poly()?;
                self.expect(b')')?;
                Ok(p)
            }
            _ => Err(self.err("expected a factor")),
        }
    }

    fn label(&mut self) -> Result<crate::group::GroupElement, PolyError> {
        let start = self.pos;
        if self.s.get(self.pos) == Some(&b'(') {
            while self.pos < self.s.len() && self.s[self.pos] != b')' {
                self.pos += 1;
            }
            if self.pos == self.s.len() {
                return Err(self.err("unterminated degree tuple"));
            }
            self.pos += 1;
        } else {
            while self.pos < self.s.len() && label_char(self.s[self.pos] as char) {
                self.pos += 1;
            }
        }
        if start == self.pos {
            return Err(self.err("expected a degree label"));
        }
        let text = std::str::from_utf8(&self.s[start..self.pos]).expect("ascii slice");
        self.labels.resolve(text).map_err(|e| match e {
            PolyError::UnknownLabel(l) => PolyError::Syntax { pos: start, msg: format!("unknown degree label `{l}`") },
            other => other,
        })
    }
}

/// Canonical text: terms in word order, variables separated by spaces.
/// Without a label map degrees are written as residue tuples.
pub fn emit(f: &GradedPoly, labels: Option<&LabelMap>) -> String {
    if f.is_zero() {
        return "0".into();
    }
    let mut out = String::new();
    for (k, (word, c)) in f.terms().enumerate() {
        let neg = c.is_negative();
        let mag = c.abs();
        match (k, neg) {
            (0, true) => out.push('-'),
            (0, false) => {}
            (_, true) => out.push_str(" - "),
            (_, false) => out.push_str(" + "),
        }
        if !mag.is_one() {
            out.push_str(&mag.to_string());
            out.push(' ');
        }
        let vars: Vec<String> = word.iter().map(|v| var_text(v, labels)).collect();
        out.push_str(&vars.join(" "));
    }
    out
}

fn var_text(v: &Var, labels: Option<&LabelMap>) -> String {
    let name = match labels {
        Some(l) => l.name(&v.degree),
        None => v.degree.to_string(),
    };
    format!("x{}:{}", v.index, name)
}
