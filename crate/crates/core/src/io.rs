//! Text format for problems and polynomials.
//!
//! ```text
//! x,y            variable names, largest first
//! 7              field characteristic
//! x^2-y,         polynomials, comma separated, over any number of lines
//! x*y-1
//! ```
//!
//! Lines starting with `#` are comments. A comment of the form
//! `#phi <polynomial>` records a polynomial to saturate or divide by.

use crate::error::{Error, Result};
use crate::ring::{MonomialOrder, Polynomial, PrimeField, Ring};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Problem {
    pub ring: Ring,
    pub names: Vec<String>,
    pub polynomials: Vec<Polynomial>,
    /// Text of a `#phi` line, if any.
    pub phi: Option<String>,
}

impl Problem {
    pub fn parse_polynomial(&self, text: &str) -> Result<Polynomial> {
        parse_polynomial(&self.ring, &self.names, text)
    }

    pub fn format(&self, f: &Polynomial) -> String {
        format_polynomial(&self.ring, &self.names, f)
    }
}

fn parse_error(line: usize, column: usize, message: impl Into<String>) -> Error {
    Error::Parse {
        line,
        column,
        message: message.into(),
    }
}

fn is_ident_start(c: char) -> bool {
    c.is_ascii_alphabetic() || c == '_'
}

fn is_ident(c: char) -> bool {
    c.is_ascii_alphanumeric() || c == '_'
}

/// Parses a problem file; polynomials are sorted under `order`.
pub fn parse_problem(text: &str, order: MonomialOrder) -> Result<Problem> {
    let mut phi = None;
    let mut header: Vec<(usize, &str)> = Vec::new();
    let mut body = String::new();
    let mut body_start = None;
    for (i, line) in text.lines().enumerate() {
        let trimmed = line.trim();
        if let Some(rest) = trimmed.strip_prefix('#') {
            if let Some(p) = rest.strip_prefix("phi") {
                phi = Some(p.trim().to_string());
            }
            body.push('\n');
            continue;
        }
        if header.len() < 2 {
            if !trimmed.is_empty() {
                header.push((i + 1, line));
            }
            continue;
        }
        body_start.get_or_insert(i + 1);
        body.push_str(line);
        body.push('\n');
    }
    let Some(&(vline, vtext)) = header.first() else {
        return Err(parse_error(1, 1, "missing variable list"));
    };
    let names = parse_names(vline, vtext)?;
    let Some(&(pline, ptext)) = header.get(1) else {
        return Err(parse_error(vline + 1, 1, "missing field characteristic"));
    };
    let col = ptext.len() - ptext.trim_start().len() + 1;
    let p: u64 = ptext
        .trim()
        .parse()
        .map_err(|_| parse_error(pline, col, format!("'{}' is not a number", ptext.trim())))?;
    let field = PrimeField::new(p).map_err(|e| parse_error(pline, col, e.to_string()))?;
    if let MonomialOrder::Elim(k) = order {
        if k > names.len() {
            return Err(Error::contract("elimination block larger than the ring"));
        }
    }
    let ring = Ring::new(field, names.len(), order);

    // Re-attach the body to its original line numbers.
    let first = body_start.unwrap_or(pline + 1);
    let mut parser = Parser::new(&ring, &names, &body_lines(text, first), first);
    let polynomials = parser.list()?;
    Ok(Problem {
        ring,
        names,
        polynomials,
        phi,
    })
}

fn body_lines(text: &str, first: usize) -> String {
    let mut out = String::new();
    for line in text.lines().skip(first - 1) {
        if !line.trim_start().starts_with('#') {
            out.push_str(line);
        }
        out.push('\n');
    }
    out
}

fn parse_names(line: usize, text: &str) -> Result<Vec<String>> {
    let mut names: Vec<String> = Vec::new();
    let mut col = 1;
    for part in text.split(',') {
        let lead = part.len() - part.trim_start().len();
        let name = part.trim();
        let here = col + lead;
        if name.is_empty() {
            return Err(parse_error(line, here, "empty variable name"));
        }
        let mut chars = name.chars();
        if !chars.next().is_some_and(is_ident_start) || !chars.all(is_ident) {
            return Err(parse_error(line, here, format!("'{name}' is not a valid variable name")));
        }
        if names.iter().any(|n| n == name) {
            return Err(parse_error(line, here, format!("variable '{name}' declared twice")));
        }
        names.push(name.to_string());
        col += part.len() + 1;
    }
    Ok(names)
}

/// Parses a single polynomial over the given variables.
pub fn parse_polynomial(ring: &Ring, names: &[String], text: &str) -> Result<Polynomial> {
    let mut parser = Parser::new(ring, names, text, 1);
    parser.skip_ws();
    let f = parser.expr()?;
    parser.skip_ws();
    if let Some(c) = parser.peek() {
        return Err(parser.error(format!("unexpected '{c}'")));
    }
    Ok(f)
}

struct Parser<'a> {
    ring: &'a Ring,
    names: &'a [String],
    chars: Vec<char>,
    pos: usize,
    line: usize,
    column: usize,
}

impl<'a> Parser<'a> {
    fn new(ring: &'a Ring, names: &'a [String], text: &str, first_line: usize) -> Self {
        Self {
            ring,
            names,
            chars: text.chars().collect(),
            pos: 0,
            line: first_line,
            column: 1,
        }
    }

    fn error(&self, message: impl Into<String>) -> Error {
        parse_error(self.line, self.column, message)
    }

    fn peek(&self) -> Option<char> {
        self.chars.get(self.pos).copied()
    }

    fn bump(&mut self) -> Option<char> {
        let c = self.peek()?;
        self.pos += 1;
        if c == '\n' {
            self.line += 1;
            self.column = 1;
        } else {
            self.column += 1;
        }
        Some(c)
    }

    fn skip_ws(&mut self) {
        while self.peek().is_some_and(|c| c.is_whitespace()) {
            self.bump();
        }
    }

    fn eat(&mut self, c: char) -> bool {
        self.skip_ws();
        if self.peek() == Some(c) {
            self.bump();
            true
        } else {
            false
        }
    }

    /// Comma-separated polynomials; empty entries (trailing commas) are
    /// skipped.
    fn list(&mut self) -> Result<Vec<Polynomial>> {
        let mut out = Vec::new();
        loop {
            self.skip_ws();
            match self.peek() {
                None => return Ok(out),
                Some(',') => {
                    self.bump();
                }
                Some(_) => {
                    out.push(self.expr()?);
                    self.skip_ws();
                    match self.peek() {
                        None | Some(',') => {}
                        Some(c) => return Err(self.error(format!("unexpected '{c}'"))),
                    }
                }
            }
        }
    }

    fn expr(&mut self) -> Result<Polynomial> {
        let r = self.ring;
        let mut acc = if self.eat('-') {
            r.neg(&self.term()?)
        } else {
            self.eat('+');
            self.term()?
        };
        loop {
            if self.eat('+') {
                acc = r.add(&acc, &self.term()?);
            } else if self.eat('-') {
                acc = r.sub(&acc, &self.term()?);
            } else {
                return Ok(acc);
            }
        }
    }

    fn term(&mut self) -> Result<Polynomial> {
        let r = self.ring;
        let mut acc = self.factor()?;
        loop {
            if self.eat('*') {
                acc = r.mul(&acc, &self.factor()?);
                continue;
            }
            self.skip_ws();
            match self.peek() {
                Some(c) if c == '(' || c.is_ascii_digit() || is_ident_start(c) => {
                    acc = r.mul(&acc, &self.factor()?);
                }
                _ => return Ok(acc),
            }
        }
    }

    fn factor(&mut self) -> Result<Polynomial> {
        if self.eat('-') {
            return Ok(self.ring.neg(&self.factor()?));
        }
        let base = self.atom()?;
        if self.eat('^') {
            self.skip_ws();
            let (line, column) = (self.line, self.column);
            let digits = self.digits();
            if digits.is_empty() {
                return Err(self.error("expected an exponent"));
            }
            let e: u32 = digits
                .parse()
                .map_err(|_| parse_error(line, column, format!("exponent {digits} is too large")))?;
            return Ok(self.ring.pow(&base, e));
        }
        Ok(base)
    }

    fn digits(&mut self) -> String {
        let mut s = String::new();
        while let Some(c) = self.peek().filter(|c| c.is_ascii_digit()) {
            s.push(c);
            self.bump();
        }
        s
    }

    fn atom(&mut self) -> Result<Polynomial> {
        self.skip_ws();
        let r = self.ring;
        match self.peek() {
            Some('(') => {
                self.bump();
                let inner = self.expr()?;
                if !self.eat(')') {
                    return Err(self.error("expected ')'"));
                }
                Ok(inner)
            }
            Some(c) if c.is_ascii_digit() => {
                let p = r.field.characteristic() as u64;
                let v = self.digits().bytes().fold(0u64, |acc, b| (acc * 10 + (b - b'0') as u64) % p);
                Ok(r.constant(v as u32))
            }
            Some(c) if is_ident_start(c) => {
                let (line, column) = (self.line, self.column);
                let mut name = String::new();
                while let Some(c) = self.peek().filter(|c| is_ident(*c)) {
                    name.push(c);
                    self.bump();
                }
                match self.names.iter().position(|n| *n == name) {
                    Some(i) => Ok(r.var(i)),
                    None => Err(parse_error(line, column, format!("unknown variable '{name}'"))),
                }
            }
            Some(c) => Err(self.error(format!("unexpected '{c}'"))),
            None => Err(self.error("unexpected end of input")),
        }
    }
}

/// Prints `f` with terms in decreasing order, coefficients as signed
/// representatives, `*` between factors and `^` for powers.
pub fn format_polynomial(ring: &Ring, names: &[String], f: &Polynomial) -> String {
    if f.is_zero() {
        return "0".to_string();
    }
    let mut out = String::new();
    for (i, t) in f.terms().iter().enumerate() {
        let c = ring.field.signed(t.coeff);
        let mag = c.unsigned_abs();
        if c < 0 {
            out.push('-');
        } else if i > 0 {
            out.push('+');
        }
        let mut factors: Vec<String> = Vec::new();
        if mag != 1 || t.monomial.is_one() {
            factors.push(mag.to_string());
        }
        for (v, &e) in t.monomial.exponents().iter().enumerate() {
            match e {
                0 => {}
                1 => factors.push(names[v].clone()),
                _ => factors.push(format!("{}^{}", names[v], e)),
            }
        }
        out.push_str(&factors.join("*"));
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn problem_examples() {
        let p = parse_problem("x,y\n7\nx^2-y, x*y-1", MonomialOrder::Drl).unwrap();
        assert_eq!(p.polynomials.len(), 2);
        assert_eq!(p.ring.field.characteristic(), 7);
        assert_eq!(p.format(&p.polynomials[0]), "x^2-y");

        let e = parse_problem("x\n6\nx", MonomialOrder::Drl).unwrap_err();
        assert!(matches!(e, Error::Parse { line: 2, column: 1, .. }), "{e:?}");

        let p = parse_problem("x,y\n7\nx^2-y,\nx*y-1", MonomialOrder::Drl).unwrap();
        assert_eq!(p.polynomials.len(), 2);
        let p = parse_problem("x,y\n7\nx^2-y,\nx*y-1,\n", MonomialOrder::Drl).unwrap();
        assert_eq!(p.polynomials.len(), 2);
    }

    #[test]
    fn errors_carry_positions() {
        let e = parse_problem("x,y\n7\nx^2-z", MonomialOrder::Drl).unwrap_err();
        assert_eq!(
            e,
            Error::Parse {
                line: 3,
                column: 5,
                message: "unknown variable 'z'".into()
            }
        );
        let e = parse_problem("x,y\n7\nx+y,\n  x*$", MonomialOrder::Drl).unwrap_err();
        assert!(matches!(e, Error::Parse { line: 4, column: 5, .. }), "{e:?}");
        assert!(parse_problem("x,x\n7\nx", MonomialOrder::Drl).is_err());
        assert!(parse_problem("x\n7\n(x+1", MonomialOrder::Drl).is_err());
        assert!(parse_problem("x\n7\nx^", MonomialOrder::Drl).is_err());
        assert!(parse_problem("", MonomialOrder::Drl).is_err());
    }

    #[test]
    fn syntax_variants() {
        let p = parse_problem("x,y\n7\n2x y + (x-1)^2 - -y, 3*x*-y, 10", MonomialOrder::Drl).unwrap();
        assert_eq!(p.format(&p.polynomials[0]), "x^2+2*x*y-2*x+y+1");
        assert_eq!(p.format(&p.polynomials[1]), "-3*x*y");
        assert_eq!(p.format(&p.polynomials[2]), "3");
    }

    #[test]
    fn phi_sidecar_and_comments() {
        let p = parse_problem("# comment\nx,y\n7\n#phi x+y\nx*y\n# trailing\n", MonomialOrder::Drl).unwrap();
        assert_eq!(p.phi.as_deref(), Some("x+y"));
        assert_eq!(p.polynomials.len(), 1);
    }

    #[test]
    fn format_examples() {
        let r = Ring::new(PrimeField::new(7).unwrap(), 2, MonomialOrder::Drl);
        let names = vec!["x".to_string(), "y".to_string()];
        let f = r.from_terms([(1, vec![1, 0]), (-1, vec![0, 0])]);
        assert_eq!(format_polynomial(&r, &names, &f), "x-1");
        assert_eq!(format_polynomial(&r, &names, &r.one()), "1");
        assert_eq!(format_polynomial(&r, &names, &Polynomial::zero()), "0");
        assert_eq!(format_polynomial(&r, &names, &r.neg(&r.var(1))), "-y");
    }

    proptest! {
        #[test]
        fn roundtrip(terms in prop::collection::vec((-50i64..50, prop::collection::vec(0u32..4, 3)), 0..6)) {
            let r = Ring::new(PrimeField::new(65521).unwrap(), 3, MonomialOrder::Drl);
            let names: Vec<String> = ["a", "b1", "c_2"].iter().map(|s| s.to_string()).collect();
            let f = r.from_terms(terms);
            let text = format_polynomial(&r, &names, &f);
            prop_assert_eq!(parse_polynomial(&r, &names, &text).unwrap(), f);
        }
    }
}
