//! Text format for input polynomials.
//!
//! ```text
//! expr   := ['-'] term (('+' | '-') term)*
//! term   := factor ('*' factor)*
//! factor := integer | var ('^' positive-integer)?
//! var    := ('x' | 'y') positive-integer
//! ```
//!
//! Whitespace is ignored and integers are arbitrary precision. Variables
//! must lie in `x1..xm`, `y1..yn`.

use num_bigint::BigInt;
use num_traits::One;

use crate::error::{Error, Result};
use crate::field::{FieldSpec, Scalar};
use crate::poly::{BiPoly, Monomial, Poly};

struct Parser<'a> {
    src: &'a [u8],
    pos: usize,
    m: usize,
    n: usize,
}

impl<'a> Parser<'a> {
    fn skip_ws(&mut self) {
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.src.get(self.pos).copied()
    }

    fn syntax<T>(&self, msg: impl Into<String>) -> Result<T> {
        Err(Error::Syntax { pos: self.pos, msg: msg.into() })
    }

    fn digits(&mut self) -> Option<&'a str> {
        let start = self.pos;
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        (self.pos > start).then(|| std::str::from_utf8(&self.src[start..self.pos]).unwrap())
    }

    fn positive_int(&mut self, what: &str) -> Result<u32> {
        self.skip_ws();
        let start = self.pos;
        let Some(d) = self.digits() else {
            return self.syntax(format!("expected {what}"));
        };
        match d.parse::<u32>() {
            Ok(v) if v > 0 => Ok(v),
            _ => Err(Error::Syntax { pos: start, msg: format!("{what} must be a positive integer") }),
        }
    }

    fn expr(&mut self) -> Result<Vec<(BigInt, Monomial, Monomial)>> {
        let mut terms = Vec::new();
        let mut negate = false;
        if self.peek() == Some(b'-') {
            self.pos += 1;
            negate = true;
        }
        loop {
            let (mut c, x, y) = self.term()?;
            if negate {
                c = -c;
            }
            terms.push((c, x, y));
            match self.peek() {
                Some(b'+') => negate = false,
                Some(b'-') => negate = true,
                None => return Ok(terms),
                Some(ch) => return self.syntax(format!("unexpected `{}`", ch as char)),
            }
            self.pos += 1;
        }
    }

    fn term(&mut self) -> Result<(BigInt, Monomial, Monomial)> {
        let mut coeff = BigInt::one();
        let mut x = vec![0u32; self.m];
        let mut y = vec![0u32; self.n];
        loop {
            self.factor(&mut coeff, &mut x, &mut y)?;
            if self.peek() == Some(b'*') {
                self.pos += 1;
            } else {
                break;
            }
        }
        Ok((coeff, Monomial::from_exponents(&x), Monomial::from_exponents(&y)))
    }

    fn factor(&mut self, coeff: &mut BigInt, x: &mut [u32], y: &mut [u32]) -> Result<()> {
        let Some(ch) = self.peek() else {
            return self.syntax("unexpected end of input");
        };
        if ch.is_ascii_digit() {
            let d = self.digits().unwrap();
            *coeff *= d.parse::<BigInt>().expect("ascii digits");
            return Ok(());
        }
        if !ch.is_ascii_alphabetic() {
            return self.syntax(format!("unexpected `{}`", ch as char));
        }
        let start = self.pos;
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_alphanumeric() {
            self.pos += 1;
        }
        let name = std::str::from_utf8(&self.src[start..self.pos]).unwrap().to_string();
        let unknown = || Error::UnknownVariable { pos: start, name: name.clone() };
        let (kind, idx) = name.split_at(1);
        let idx: usize = match idx.parse() {
            Ok(i) if i >= 1 && !idx.starts_with('0') => i,
            _ => return Err(unknown()),
        };
        let slot = match kind {
            "x" if idx <= self.m => &mut x[idx - 1],
            "y" if idx <= self.n => &mut y[idx - 1],
            _ => return Err(unknown()),
        };
        let mut e = 1;
        if self.peek() == Some(b'^') {
            self.pos += 1;
            e = self.positive_int("exponent")?;
        }
        *slot += e;
        Ok(())
    }
}

/// Parses a polynomial in `x1..xm, y1..yn` and collects its terms.
///
/// Bihomogeneity is recorded but not required; use
/// [`parse_bihomogeneous`] or [`BiPoly::require_bidegree`] to insist on it.
pub fn parse_bipoly(text: &str, m: usize, n: usize, field: FieldSpec) -> Result<BiPoly> {
    let mut p = Parser { src: text.as_bytes(), pos: 0, m, n };
    if p.peek().is_none() {
        return p.syntax("empty input");
    }
    let terms = p.expr()?;
    Ok(BiPoly::from_terms(
        m,
        n,
        field,
        terms.into_iter().map(|(c, x, y)| ((x, y), Scalar::from_bigint(&c, field))),
    ))
}

/// Like [`parse_bipoly`], rejecting zero and mixed-bidegree input.
pub fn parse_bihomogeneous(text: &str, m: usize, n: usize, field: FieldSpec) -> Result<BiPoly> {
    let f = parse_bipoly(text, m, n, field)?;
    f.require_bidegree()?;
    Ok(f)
}

/// Parses a polynomial in `x1..xm` only.
pub fn parse_poly(text: &str, m: usize, field: FieldSpec) -> Result<Poly> {
    let f = parse_bipoly(text, m, 0, field)?;
    Ok(Poly::from_terms(m, field, f.terms().map(|((x, _), c)| (x.clone(), c.clone()))))
}

/// Joins `(monomial text, coefficient)` pairs in the order given.
pub(crate) fn format_terms<'a>(terms: impl Iterator<Item = (String, &'a Scalar)>) -> String {
    let mut out = String::new();
    for (mono, c) in terms {
        let (neg, abs) = c.split_sign();
        if out.is_empty() {
            if neg {
                out.push('-');
            }
        } else {
            out.push_str(if neg { " - " } else { " + " });
        }
        if mono == "1" {
            out.push_str(&abs.to_string());
        } else if abs.is_one() {
            out.push_str(&mono);
        } else {
            out.push_str(&format!("{abs}*{mono}"));
        }
    }
    if out.is_empty() {
        out.push('0');
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    const Q: FieldSpec = FieldSpec::Rationals;

    #[test]
    fn parses_and_records_bidegree() {
        let f = parse_bipoly("x1*y1 + x2*y2", 2, 2, Q).unwrap();
        assert_eq!(f.len(), 2);
        assert_eq!(f.bidegree(), Some((1, 1)));

        let g = parse_bipoly("3*x1^2*y2 - x2^2*y1", 2, 2, Q).unwrap();
        assert_eq!(g.len(), 2);
        assert_eq!(g.bidegree(), Some((2, 1)));
        assert_eq!(g.to_string(), "3*x1^2*y2 - x2^2*y1");
    }

    #[test]
    fn mixed_bidegree_rejected_when_required() {
        let err = parse_bihomogeneous("x1*y1 + x2", 2, 2, Q).unwrap_err();
        assert_eq!(err, Error::NotBihomogeneous { first: (1, 1), second: (1, 0) });
        // accepted when not required
        assert!(parse_bipoly("x1*y1 + x2", 2, 2, Q).unwrap().bidegree().is_none());
    }

    #[test]
    fn errors_carry_positions() {
        assert!(matches!(
            parse_bipoly("x1*y3", 2, 2, Q),
            Err(Error::UnknownVariable { pos: 3, .. })
        ));
        assert!(matches!(
            parse_bipoly("x1 + z1", 2, 2, Q),
            Err(Error::UnknownVariable { pos: 5, .. })
        ));
        assert!(matches!(parse_bipoly("x1 +", 2, 2, Q), Err(Error::Syntax { pos: 4, .. })));
        assert!(matches!(parse_bipoly("x1^0", 2, 2, Q), Err(Error::Syntax { pos: 3, .. })));
        assert!(matches!(parse_bipoly("x1 y1", 2, 2, Q), Err(Error::Syntax { .. })));
        assert!(matches!(parse_bipoly("", 2, 2, Q), Err(Error::Syntax { pos: 0, .. })));
        assert!(matches!(parse_bipoly("x0", 2, 2, Q), Err(Error::UnknownVariable { .. })));
    }

    #[test]
    fn leading_minus_and_big_integers() {
        let f = parse_bipoly(" - 123456789012345678901234567890 * x1 ^ 2 ", 1, 1, Q).unwrap();
        assert_eq!(f.to_string(), "-123456789012345678901234567890*x1^2");
        let g = parse_bipoly("2*x1*3 - 6*x1", 1, 1, Q).unwrap();
        assert!(g.is_zero());
        assert_eq!(g.to_string(), "0");
    }

    #[test]
    fn prime_field_reduction() {
        let f = parse_bipoly("7*x1*y1 + 8*x2*y2", 2, 2, FieldSpec::PrimeField(7)).unwrap();
        assert_eq!(f.to_string(), "x2*y2");
    }
}
