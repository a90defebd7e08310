//! Reader for the polynomial text grammar.
//!
//! Terms are joined by `+`/`-`; a term is `[coeff][*]var^exp[*var^exp...]` with
//! `coeff` an integer or a `p/q` fraction, and variables `x1, x2, ..` (series
//! side) or `y1, y2, ..` (dual side). Whitespace is ignored.

use num_bigint::BigInt;
use num_traits::{One, Zero};

use super::{MultiIndex, Poly, Scalar, Side};
use crate::error::ParseError;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ParsedPoly {
    Series(Poly<super::Series>),
    Dual(Poly<super::Dual>),
    /// No variable occurs, so the side is undetermined.
    Constant(Scalar),
}

struct Term {
    coeff: Scalar,
    factors: Vec<(usize, u32)>,
}

struct Parser<'a> {
    src: &'a [u8],
    pos: usize,
    symbol: Option<(u8, usize)>,
}

impl<'a> Parser<'a> {
    fn new(src: &'a str) -> Self {
        Self {
            src: src.as_bytes(),
            pos: 0,
            symbol: None,
        }
    }

    fn skip_ws(&mut self) {
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.src.get(self.pos).copied()
    }

    fn err(&self, msg: impl Into<String>) -> ParseError {
        ParseError::new(self.pos, msg)
    }

    fn number(&mut self) -> Result<BigInt, ParseError> {
        self.skip_ws();
        let start = self.pos;
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        if start == self.pos {
            return Err(self.err("expected a number"));
        }
        let text = std::str::from_utf8(&self.src[start..self.pos]).expect("ascii digits");
        Ok(text.parse().expect("digits parse"))
    }

    fn coefficient(&mut self) -> Result<Scalar, ParseError> {
        let num = self.number()?;
        if self.peek() == Some(b'/') {
            self.pos += 1;
            let at = self.pos;
            let den = self.number()?;
            if den.is_zero() {
                return Err(ParseError::new(at, "zero denominator"));
            }
            return Ok(Scalar::new(num, den));
        }
        Ok(Scalar::from_integer(num))
    }

    fn factor(&mut self) -> Result<(usize, u32), ParseError> {
        self.skip_ws();
        let at = self.pos;
        let sym = self.src[self.pos];
        match self.symbol {
            None => self.symbol = Some((sym, at)),
            Some((s, _)) if s != sym => {
                return Err(ParseError::new(at, "cannot mix x and y variables"));
            }
            _ => {}
        }
        self.pos += 1;
        if !matches!(self.src.get(self.pos), Some(c) if c.is_ascii_digit()) {
            return Err(self.err("expected a variable index after the variable letter"));
        }
        let idx = self.number()?;
        let idx: usize = idx
            .try_into()
            .map_err(|_| ParseError::new(at, "variable index out of range"))?;
        if idx == 0 || idx > 64 {
            return Err(ParseError::new(at, "variable index must be between 1 and 64"));
        }
        let mut exp = 1u32;
        if self.peek() == Some(b'^') {
            self.pos += 1;
            let e_at = self.pos;
            let e = self.number()?;
            exp = e
                .try_into()
                .map_err(|_| ParseError::new(e_at, "exponent out of range"))?;
        }
        Ok((idx - 1, exp))
    }

    fn is_var(c: Option<u8>) -> bool {
        matches!(c, Some(b'x') | Some(b'y'))
    }

    fn term(&mut self) -> Result<Term, ParseError> {
        let mut coeff = Scalar::one();
        let mut factors = Vec::new();
        match self.peek() {
            Some(c) if c.is_ascii_digit() => {
                coeff = self.coefficient()?;
                match self.peek() {
                    Some(b'*') => {
                        self.pos += 1;
                        if !Self::is_var(self.peek()) {
                            return Err(self.err("expected a variable after '*'"));
                        }
                    }
                    c if Self::is_var(c) => {}
                    _ => return Ok(Term { coeff, factors }),
                }
            }
            c if Self::is_var(c) => {}
            Some(_) => return Err(self.err("expected a coefficient or a variable")),
            None => return Err(self.err("unexpected end of input")),
        }
        loop {
            factors.push(self.factor()?);
            if self.peek() == Some(b'*') {
                self.pos += 1;
                if !Self::is_var(self.peek()) {
                    return Err(self.err("expected a variable after '*'"));
                }
            } else {
                break;
            }
        }
        Ok(Term { coeff, factors })
    }

    fn poly(&mut self) -> Result<Vec<Term>, ParseError> {
        let mut terms = Vec::new();
        let mut sign = Scalar::one();
        match self.peek() {
            Some(b'-') => {
                sign = -sign;
                self.pos += 1;
            }
            Some(b'+') => self.pos += 1,
            None => return Err(self.err("empty polynomial")),
            _ => {}
        }
        loop {
            let mut t = self.term()?;
            t.coeff *= &sign;
            terms.push(t);
            match self.peek() {
                None => break,
                Some(b'+') => {
                    sign = Scalar::one();
                    self.pos += 1;
                }
                Some(b'-') => {
                    sign = -Scalar::one();
                    self.pos += 1;
                }
                Some(_) => return Err(self.err("expected '+', '-' or end of input")),
            }
        }
        Ok(terms)
    }
}

fn assemble<S: Side>(terms: &[Term], nvars: usize) -> Poly<S> {
    let mut p = Poly::<S>::zero(nvars);
    for t in terms {
        let mut exps = vec![0u32; nvars];
        for &(j, e) in &t.factors {
            exps[j] += e;
        }
        p.add_term(MultiIndex::new(exps), t.coeff.clone());
    }
    p
}

/// Terms, the variable letter with its first position, and the variable count.
type RawParse = (Vec<Term>, Option<(u8, usize)>, usize);

fn parse_raw(src: &str) -> Result<RawParse, ParseError> {
    let mut parser = Parser::new(src);
    let terms = parser.poly()?;
    let nvars = terms
        .iter()
        .flat_map(|t| t.factors.iter().map(|(j, _)| j + 1))
        .max()
        .unwrap_or(0);
    Ok((terms, parser.symbol, nvars))
}

/// Parses either side; the variable letter decides which.
pub fn parse_poly(src: &str) -> Result<ParsedPoly, ParseError> {
    let (terms, symbol, nvars) = parse_raw(src)?;
    Ok(match symbol {
        None => ParsedPoly::Constant(terms.iter().map(|t| t.coeff.clone()).sum()),
        Some((b'x', _)) => ParsedPoly::Series(assemble(&terms, nvars)),
        Some(_) => ParsedPoly::Dual(assemble(&terms, nvars)),
    })
}

fn parse_side<S: Side>(src: &str) -> Result<Poly<S>, ParseError> {
    let (terms, symbol, nvars) = parse_raw(src)?;
    if let Some((sym, at)) = symbol {
        if sym as char != S::SYMBOL {
            return Err(ParseError::new(
                at,
                format!("expected '{}' variables, found '{}'", S::SYMBOL, sym as char),
            ));
        }
    }
    Ok(assemble(&terms, nvars))
}

/// Parses a dual polynomial (`y` variables); the variable count is the highest index used.
pub fn parse_dual(src: &str) -> Result<Poly<super::Dual>, ParseError> {
    parse_side(src)
}

/// Parses a series-side polynomial (`x` variables).
pub fn parse_series(src: &str) -> Result<Poly<super::Series>, ParseError> {
    parse_side(src)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::dualcore::{frac, int, DualPoly};

    #[test]
    fn parses_grammar_examples() {
        let p = parse_dual("y1^3 - y2^3 + 1/2*y1^2").unwrap();
        assert_eq!(p.nvars(), 2);
        assert_eq!(p.coeff(&MultiIndex::new(vec![3, 0])), int(1));
        assert_eq!(p.coeff(&MultiIndex::new(vec![0, 3])), int(-1));
        assert_eq!(p.coeff(&MultiIndex::new(vec![2, 0])), frac(1, 2));
        let q = parse_dual(" 3 y1 y2 ").err();
        assert!(q.is_some());
        let q = parse_dual("3y1*y2 + y1*y1").unwrap();
        assert_eq!(q.coeff(&MultiIndex::new(vec![1, 1])), int(3));
        assert_eq!(q.coeff(&MultiIndex::new(vec![2, 0])), int(1));
        assert_eq!(parse_dual("-y3").unwrap().nvars(), 3);
        assert_eq!(parse_poly("7/3").unwrap(), ParsedPoly::Constant(frac(7, 3)));
    }

    #[test]
    fn errors_carry_positions() {
        let e = parse_dual("y1 + x2").unwrap_err();
        assert_eq!(e.position, 5);
        let e = parse_dual("y1 +").unwrap_err();
        assert_eq!(e.position, 4);
        let e = parse_dual("1/0*y1").unwrap_err();
        assert_eq!(e.position, 2);
        assert!(parse_dual("y0").is_err());
        assert!(parse_dual("y").is_err());
        assert!(parse_dual("").is_err());
        assert!(parse_dual("y1 ** y2").is_err());
        assert!(parse_dual("(y1)").is_err());
        assert!(parse_series("y1").is_err());
    }

    #[test]
    fn cancellation_leaves_zero() {
        let p = parse_dual("y1 - y1").unwrap();
        assert!(p.is_zero());
        assert_eq!(p, DualPoly::zero(1));
    }
}
