//! Text form of ring elements: a small expression grammar over declared
//! variables, and the inverse of the library's canonical rendering.
//!
//! Grammar: signed integer or rational literals, declared variable names,
//! the operators + - * ^ and parentheses. Multiplication is always written
//! out; exponents are unsigned integer literals.

use sl2_core::{Field, FieldElem, Poly};

use crate::CliError;

#[derive(Clone, Debug, PartialEq)]
enum Tok {
    Num(String),
    Ident(String),
    Plus,
    Minus,
    Star,
    Caret,
    Slash,
    LParen,
    RParen,
}

fn tokenize(text: &str) -> Result<Vec<(usize, Tok)>, CliError> {
    let mut out = Vec::new();
    let bytes = text.as_bytes();
    let mut i = 0;
    while i < bytes.len() {
        let b = bytes[i];
        match b {
            b' ' | b'\t' | b'\n' | b'\r' => i += 1,
            b'+' => {
                out.push((i, Tok::Plus));
                i += 1;
            }
            b'-' => {
                out.push((i, Tok::Minus));
                i += 1;
            }
            b'*' => {
                out.push((i, Tok::Star));
                i += 1;
            }
            b'^' => {
                out.push((i, Tok::Caret));
                i += 1;
            }
            b'/' => {
                out.push((i, Tok::Slash));
                i += 1;
            }
            b'(' => {
                out.push((i, Tok::LParen));
                i += 1;
            }
            b')' => {
                out.push((i, Tok::RParen));
                i += 1;
            }
            b'0'..=b'9' => {
                let start = i;
                while i < bytes.len() && bytes[i].is_ascii_digit() {
                    i += 1;
                }
                out.push((start, Tok::Num(text[start..i].to_string())));
            }
            b'a'..=b'z' | b'A'..=b'Z' | b'_' => {
                let start = i;
                while i < bytes.len()
                    && (bytes[i].is_ascii_alphanumeric() || bytes[i] == b'_')
                {
                    i += 1;
                }
                out.push((start, Tok::Ident(text[start..i].to_string())));
            }
            _ => {
                return Err(CliError::syntax(i, format!("unexpected character '{}'", b as char)))
            }
        }
    }
    Ok(out)
}

struct Parser<'a> {
    toks: Vec<(usize, Tok)>,
    pos: usize,
    field: Field,
    vars: &'a [String],
    end: usize,
}

impl<'a> Parser<'a> {
    fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.pos).map(|(_, t)| t)
    }

    fn here(&self) -> usize {
        self.toks.get(self.pos).map(|(p, _)| *p).unwrap_or(self.end)
    }

    fn bump(&mut self) -> Option<Tok> {
        let t = self.toks.get(self.pos).map(|(_, t)| t.clone());
        self.pos += 1;
        t
    }

    fn expr(&mut self) -> Result<Poly, CliError> {
        let mut acc = self.term()?;
        loop {
            match self.peek() {
                Some(Tok::Plus) => {
                    self.bump();
                    acc = acc.add(&self.term()?);
                }
                Some(Tok::Minus) => {
                    self.bump();
                    acc = acc.sub(&self.term()?);
                }
                _ => return Ok(acc),
            }
        }
    }

    fn term(&mut self) -> Result<Poly, CliError> {
        let mut acc = self.signed_factor()?;
        while self.peek() == Some(&Tok::Star) {
            self.bump();
            acc = acc.mul(&self.signed_factor()?);
        }
        Ok(acc)
    }

    fn signed_factor(&mut self) -> Result<Poly, CliError> {
        let mut negate = false;
        loop {
            match self.peek() {
                Some(Tok::Minus) => {
                    negate = !negate;
                    self.bump();
                }
                Some(Tok::Plus) => {
                    self.bump();
                }
                _ => break,
            }
        }
        let f = self.factor()?;
        Ok(if negate { f.neg() } else { f })
    }

    /// atom with an optional integer exponent, and for numeric atoms an
    /// optional '/denominator' forming one rational literal
    fn factor(&mut self) -> Result<Poly, CliError> {
        let base = self.atom()?;
        if self.peek() == Some(&Tok::Caret) {
            self.bump();
            let at = self.here();
            match self.bump() {
                Some(Tok::Num(d)) => {
                    let e: u32 = d
                        .parse()
                        .map_err(|_| CliError::syntax(at, "exponent out of range".to_string()))?;
                    return Ok(base.pow(e));
                }
                _ => return Err(CliError::syntax(at, "expected an integer exponent".to_string())),
            }
        }
        Ok(base)
    }

    fn atom(&mut self) -> Result<Poly, CliError> {
        let at = self.here();
        match self.bump() {
            Some(Tok::Num(d)) => {
                let mut c = FieldElem::from_decimal(self.field, &d, false)
                    .ok_or_else(|| CliError::syntax(at, "bad numeric literal".to_string()))?;
                // a slash directly after a number is a rational literal
                if self.peek() == Some(&Tok::Slash) {
                    self.bump();
                    let dat = self.here();
                    match self.bump() {
                        Some(Tok::Num(den)) => {
                            let den = FieldElem::from_decimal(self.field, &den, false)
                                .ok_or_else(|| {
                                    CliError::syntax(dat, "bad numeric literal".to_string())
                                })?;
                            c = c.div(&den).map_err(|_| {
                                CliError::syntax(dat, "zero denominator".to_string())
                            })?;
                        }
                        _ => {
                            return Err(CliError::syntax(
                                dat,
                                "expected a denominator".to_string(),
                            ))
                        }
                    }
                }
                Ok(Poly::constant(self.field, self.vars.len(), c))
            }
            Some(Tok::Ident(name)) => {
                match self.vars.iter().position(|v| v == &name) {
                    Some(idx) => Ok(Poly::var(self.field, self.vars.len(), idx)),
                    None => Err(CliError::UnknownVariable { name, pos: at }),
                }
            }
            Some(Tok::LParen) => {
                let inner = self.expr()?;
                let at = self.here();
                match self.bump() {
                    Some(Tok::RParen) => Ok(inner),
                    _ => Err(CliError::syntax(at, "expected ')'".to_string())),
                }
            }
            _ => Err(CliError::syntax(at, "expected a value".to_string())),
        }
    }
}

/// Parses one polynomial over the declared variables.
pub fn parse_poly(text: &str, vars: &[String], field: Field) -> Result<Poly, CliError> {
    let toks = tokenize(text)?;
    let mut p = Parser {
        toks,
        pos: 0,
        field,
        vars,
        end: text.len(),
    };
    let out = p.expr()?;
    if p.pos != p.toks.len() {
        return Err(CliError::syntax(p.here(), "unexpected trailing input".to_string()));
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn vars() -> Vec<String> {
        vec!["t".to_string()]
    }

    fn q(text: &str) -> Poly {
        parse_poly(text, &vars(), Field::Q).unwrap()
    }

    #[test]
    fn parses_the_documented_examples() {
        let t = Poly::var(Field::Q, 1, 0);
        let two = FieldElem::from_i64(Field::Q, 2);
        assert_eq!(q("2*t^2 + 2*t"), t.pow(2).add(&t).scale(&two));
        let four = FieldElem::from_i64(Field::Q, 4);
        assert_eq!(q("(2*t+1)^2 - 1"), t.pow(2).add(&t).scale(&four));
    }

    #[test]
    fn unknown_variable_is_reported() {
        match parse_poly("t + u", &vars(), Field::Q) {
            Err(CliError::UnknownVariable { name, .. }) => assert_eq!(name, "u"),
            other => panic!("expected UnknownVariable, got {:?}", other),
        }
    }

    #[test]
    fn rational_literals_and_signs() {
        let half = FieldElem::from_i64(Field::Q, 2).inv().unwrap();
        assert_eq!(q("1/2"), Poly::constant(Field::Q, 1, half.clone()));
        assert_eq!(q("-1/2"), Poly::constant(Field::Q, 1, half.neg()));
        assert_eq!(q("- - 3"), Poly::int(Field::Q, 1, 3));
        assert_eq!(q("0"), Poly::zero(Field::Q, 1));
    }

    #[test]
    fn implicit_multiplication_is_rejected() {
        assert!(parse_poly("2t", &vars(), Field::Q).is_err());
        assert!(parse_poly("(t+1)(t-1)", &vars(), Field::Q).is_err());
    }

    #[test]
    fn syntax_errors_carry_positions() {
        match parse_poly("t + ", &vars(), Field::Q) {
            Err(CliError::Syntax { pos, .. }) => assert_eq!(pos, 4),
            other => panic!("expected Syntax, got {:?}", other),
        }
        match parse_poly("t # 1", &vars(), Field::Q) {
            Err(CliError::Syntax { pos, .. }) => assert_eq!(pos, 2),
            other => panic!("expected Syntax, got {:?}", other),
        }
    }

    #[test]
    fn modular_literals_reduce() {
        let f5 = Field::prime(5).unwrap();
        let p = parse_poly("7*t + 12", &["t".to_string()], f5).unwrap();
        let t = Poly::var(f5, 1, 0);
        assert_eq!(p, t.scale(&FieldElem::from_i64(f5, 2)).add(&Poly::int(f5, 1, 2)));
        // division is a field operation mod p
        let q = parse_poly("1/2", &["t".to_string()], f5).unwrap();
        assert_eq!(q, Poly::int(f5, 1, 3));
    }

    #[test]
    fn round_trips_canonical_rendering() {
        let samples = [
            "t^2 + 2*t + 1",
            "-t^3 + 1/2*t - 5",
            "0",
            "3",
            "-7",
            "t",
        ];
        for s in samples {
            let p = q(s);
            let printed = p.render(&["t"]);
            assert_eq!(q(&printed), p, "line {}", s);
        }
    }
}
