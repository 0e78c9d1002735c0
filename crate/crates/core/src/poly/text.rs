//! Canonical text form of polynomials.
//!
//! Variables are named by the lowercase letters of their basic word (`a`,
//! `ab`, `abcd`); a product is written with `*`, powers with `^`, and
//! coefficients as integers or `num/den`. Terms appear in display order.
//! Example: `a*b*c*abc - a*b*ab + abc^2 - 4`.

use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use super::{Monomial, Polynomial};
use crate::error::{Error, Result};
use crate::{basis, check_rank};

impl fmt::Display for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let names = basis(self.rank()).names();
        for (i, (m, c)) in self.terms().enumerate() {
            let sign = if c.is_negative() { "-" } else { "+" };
            if i == 0 {
                if c.is_negative() {
                    f.write_str("-")?;
                }
            } else {
                write!(f, " {sign} ")?;
            }
            let mag = c.abs();
            let mut parts: Vec<String> = Vec::new();
            if m.is_one() || !mag.is_one() {
                parts.push(mag.to_string());
            }
            for (v, e) in m.factors() {
                if e == 1 {
                    parts.push(names[v].clone());
                } else {
                    parts.push(format!("{}^{}", names[v], e));
                }
            }
            f.write_str(&parts.join("*"))?;
        }
        Ok(())
    }
}

#[derive(Debug, Clone, PartialEq)]
enum Tok {
    Num(BigInt),
    Ident(String),
    Plus,
    Minus,
    Star,
    Caret,
    Slash,
}

fn tokenize(text: &str) -> Result<Vec<(usize, Tok)>> {
    let bytes = text.as_bytes();
    let mut out = Vec::new();
    let mut i = 0;
    while i < bytes.len() {
        let c = bytes[i];
        let start = i;
        match c {
            b' ' | b'\t' | b'\n' | b'\r' => {
                i += 1;
                continue;
            }
            b'+' => out.push((start, Tok::Plus)),
            b'-' => out.push((start, Tok::Minus)),
            b'*' => out.push((start, Tok::Star)),
            b'^' => out.push((start, Tok::Caret)),
            b'/' => out.push((start, Tok::Slash)),
            b'0'..=b'9' => {
                while i < bytes.len() && bytes[i].is_ascii_digit() {
                    i += 1;
                }
                let n: BigInt = text[start..i].parse().expect("ascii digits");
                out.push((start, Tok::Num(n)));
                continue;
            }
            b'a'..=b'z' => {
                while i < bytes.len() && bytes[i].is_ascii_lowercase() {
                    i += 1;
                }
                out.push((start, Tok::Ident(text[start..i].to_string())));
                continue;
            }
            _ => {
                let ch = text[start..].chars().next().unwrap_or('?');
                return Err(Error::parse(start, format!("unexpected character `{ch}`")));
            }
        }
        i += 1;
    }
    Ok(out)
}

struct Parser<'a> {
    rank: usize,
    toks: &'a [(usize, Tok)],
    pos: usize,
    end: usize,
}

impl Parser<'_> {
    fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.pos).map(|(_, t)| t)
    }

    fn offset(&self) -> usize {
        self.toks.get(self.pos).map_or(self.end, |(p, _)| *p)
    }

    fn polynomial(&mut self) -> Result<Polynomial> {
        let mut out = Polynomial::zero(self.rank);
        let mut negate = match self.peek() {
            Some(Tok::Minus) => {
                self.pos += 1;
                true
            }
            Some(Tok::Plus) => {
                self.pos += 1;
                false
            }
            _ => false,
        };
        loop {
            let (m, c) = self.term()?;
            out.add_term(m, if negate { -c } else { c });
            match self.peek() {
                None => return Ok(out),
                Some(Tok::Plus) => negate = false,
                Some(Tok::Minus) => negate = true,
                Some(_) => {
                    return Err(Error::parse(
                        self.offset(),
                        "expected `+`, `-` or end of input",
                    ))
                }
            }
            self.pos += 1;
        }
    }

    fn term(&mut self) -> Result<(Monomial, BigRational)> {
        let mut coef = BigRational::one();
        let mut pairs = Vec::new();
        loop {
            let at = self.offset();
            match self.peek().cloned() {
                Some(Tok::Num(n)) => {
                    self.pos += 1;
                    let mut q = BigRational::from_integer(n);
                    if self.peek() == Some(&Tok::Slash) {
                        self.pos += 1;
                        let at = self.offset();
                        match self.peek().cloned() {
                            Some(Tok::Num(d)) if !d.is_zero() => {
                                self.pos += 1;
                                q /= BigRational::from_integer(d);
                            }
                            _ => return Err(Error::parse(at, "expected a nonzero denominator")),
                        }
                    }
                    coef *= q;
                }
                Some(Tok::Ident(name)) => {
                    self.pos += 1;
                    let v = basis(self.rank).index_of_name(&name).ok_or_else(|| {
                        Error::parse(
                            at,
                            format!("`{name}` is not a variable at rank {}", self.rank),
                        )
                    })?;
                    let mut e = 1u32;
                    if self.peek() == Some(&Tok::Caret) {
                        self.pos += 1;
                        let at = self.offset();
                        match self.peek().cloned() {
                            Some(Tok::Num(k)) => {
                                self.pos += 1;
                                e = u32::try_from(k).ok().filter(|&k| k > 0).ok_or_else(|| {
                                    Error::parse(at, "exponent must be a positive integer")
                                })?;
                            }
                            _ => return Err(Error::parse(at, "expected an exponent after `^`")),
                        }
                    }
                    pairs.push((v.0, e));
                }
                _ => return Err(Error::parse(at, "expected a number or a variable")),
            }
            if self.peek() == Some(&Tok::Star) {
                self.pos += 1;
            } else {
                break;
            }
        }
        Ok((Monomial::from_pairs(pairs), coef))
    }
}

impl Polynomial {
    /// Parses the canonical text form at rank `n`.
    pub fn parse(n: usize, text: &str) -> Result<Polynomial> {
        check_rank(n)?;
        let toks = tokenize(text)?;
        if toks.is_empty() {
            return Err(Error::parse(0, "empty polynomial"));
        }
        let mut p = Parser {
            rank: n,
            toks: &toks,
            pos: 0,
            end: text.len(),
        };
        p.polynomial()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn zero_formats_as_zero() {
        assert_eq!(Polynomial::zero(3).to_string(), "0");
        assert_eq!(Polynomial::parse(3, "0").unwrap(), Polynomial::zero(3));
    }

    #[test]
    fn formatting() {
        let p = Polynomial::parse(3, "abc^2 - 4 + 2*a*b - 3/2*ab").unwrap();
        assert_eq!(p.to_string(), "2*a*b + abc^2 - 3/2*ab - 4");
        let q = Polynomial::parse(2, "-a + b*ab").unwrap();
        assert_eq!(q.to_string(), "b*ab - a");
        assert_eq!(
            Polynomial::parse(2, "a^2 - 2").unwrap().to_string(),
            "a^2 - 2"
        );
        assert_eq!(Polynomial::parse(2, "-1").unwrap().to_string(), "-1");
        assert_eq!(Polynomial::parse(2, "2*3*a").unwrap().to_string(), "6*a");
    }

    #[test]
    fn parse_errors_carry_positions() {
        assert_eq!(
            Polynomial::parse(3, "a + ba"),
            Err(Error::parse(4, "`ba` is not a variable at rank 3"))
        );
        assert!(matches!(
            Polynomial::parse(3, "a +"),
            Err(Error::Parse { pos: 3, .. })
        ));
        assert!(matches!(
            Polynomial::parse(3, "a $ b"),
            Err(Error::Parse { pos: 2, .. })
        ));
        assert!(matches!(
            Polynomial::parse(3, "a^0"),
            Err(Error::Parse { pos: 2, .. })
        ));
        assert!(matches!(
            Polynomial::parse(3, "1/0"),
            Err(Error::Parse { pos: 2, .. })
        ));
        assert!(matches!(
            Polynomial::parse(2, "c"),
            Err(Error::Parse { pos: 0, .. })
        ));
        assert!(matches!(
            Polynomial::parse(2, "a b"),
            Err(Error::Parse { pos: 2, .. })
        ));
    }
}
