//! Canonical text form of Q(i) values.
//!
//! Grammar (no whitespace):
//!
//! ```text
//! gaussian := real | imag | real sign imag
//! imag     := rat "i" | [sign] "i"
//! rat      := ["-"] digits ["/" digits]
//! ```
//!
//! Output never prints a zero imaginary part, a denominator of 1, or a unit
//! coefficient in front of `i`: `0`, `-1/2`, `i`, `1-i`, `-1/2-1/2i`.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;

use super::{GaussianRational, Rational};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
#[error("invalid gaussian rational {text:?} at byte {position}: {message}")]
pub struct ParseError {
    pub text: String,
    pub position: usize,
    pub message: &'static str,
}

impl fmt::Display for GaussianRational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let (re, im) = (self.re(), self.im());
        if im.is_zero() {
            return write!(f, "{re}");
        }
        if !re.is_zero() {
            write!(f, "{re}")?;
            if !im.is_negative() {
                f.write_str("+")?;
            }
        }
        if im.is_one() {
            f.write_str("i")
        } else if (-im).is_one() {
            f.write_str("-i")
        } else {
            write!(f, "{im}i")
        }
    }
}

struct Scanner<'a> {
    text: &'a str,
    bytes: &'a [u8],
    pos: usize,
}

impl<'a> Scanner<'a> {
    fn err(&self, message: &'static str) -> ParseError {
        ParseError {
            text: self.text.to_string(),
            position: self.pos,
            message,
        }
    }

    fn peek(&self) -> Option<u8> {
        self.bytes.get(self.pos).copied()
    }

    fn eat(&mut self, b: u8) -> bool {
        if self.peek() == Some(b) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn digits(&mut self) -> Result<BigInt, ParseError> {
        let start = self.pos;
        while matches!(self.peek(), Some(b'0'..=b'9')) {
            self.pos += 1;
        }
        if start == self.pos {
            return Err(self.err("expected digits"));
        }
        Ok(self.text[start..self.pos].parse().expect("ascii digits"))
    }

    /// One signed term; returns its value and whether it carried an `i`.
    fn term(&mut self, sign_required: bool) -> Result<(Rational, bool), ParseError> {
        let negative = if self.eat(b'-') {
            true
        } else if self.eat(b'+') {
            false
        } else if sign_required {
            return Err(self.err("expected '+' or '-'"));
        } else {
            false
        };
        let magnitude = if self.eat(b'i') {
            return Ok((signed(Rational::one(), negative), true));
        } else {
            let numer = self.digits()?;
            if self.eat(b'/') {
                let at = self.pos;
                let denom = self.digits()?;
                Rational::new(numer, denom).ok_or(ParseError {
                    text: self.text.to_string(),
                    position: at,
                    message: "zero denominator",
                })?
            } else {
                Rational::from_integer(numer)
            }
        };
        let imag = self.eat(b'i');
        Ok((signed(magnitude, negative), imag))
    }
}

fn signed(r: Rational, negative: bool) -> Rational {
    if negative {
        -r
    } else {
        r
    }
}

impl FromStr for GaussianRational {
    type Err = ParseError;

    fn from_str(text: &str) -> Result<Self, ParseError> {
        let mut sc = Scanner {
            text,
            bytes: text.as_bytes(),
            pos: 0,
        };
        if text.is_empty() {
            return Err(sc.err("empty input"));
        }
        let (first, first_imag) = sc.term(false)?;
        if sc.peek().is_none() {
            return Ok(if first_imag {
                GaussianRational::new(Rational::zero(), first)
            } else {
                GaussianRational::new(first, Rational::zero())
            });
        }
        if first_imag {
            return Err(sc.err("trailing input after imaginary part"));
        }
        let (second, second_imag) = sc.term(true)?;
        if !second_imag {
            return Err(sc.err("expected 'i'"));
        }
        if sc.peek().is_some() {
            return Err(sc.err("trailing input"));
        }
        Ok(GaussianRational::new(first, second))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn parse(s: &str) -> GaussianRational {
        s.parse().unwrap()
    }

    fn q(n: i64, d: i64) -> Rational {
        Rational::new(n, d).unwrap()
    }

    #[test]
    fn parses_examples() {
        assert_eq!(parse("1+1i"), GaussianRational::from_ints(1, 1));
        assert_eq!(
            parse("-1/2-1/2i"),
            GaussianRational::new(q(-1, 2), q(-1, 2))
        );
        assert_eq!(parse("0"), GaussianRational::zero());
        assert_eq!(parse("i"), GaussianRational::i());
        assert_eq!(parse("-i"), GaussianRational::from_ints(0, -1));
        assert_eq!(parse("+i"), GaussianRational::i());
        assert_eq!(parse("2/4"), GaussianRational::new(q(1, 2), q(0, 1)));
        assert_eq!(parse("3-i"), GaussianRational::from_ints(3, -1));
        assert_eq!(parse("-7/3i"), GaussianRational::new(q(0, 1), q(-7, 3)));
    }

    #[test]
    fn formats_canonically() {
        let cases = [
            (GaussianRational::zero(), "0"),
            (GaussianRational::from_ints(1, 1), "1+i"),
            (GaussianRational::from_ints(1, -1), "1-i"),
            (GaussianRational::from_ints(0, -1), "-i"),
            (GaussianRational::from_ints(-3, 0), "-3"),
            (GaussianRational::new(q(-1, 2), q(-1, 2)), "-1/2-1/2i"),
            (GaussianRational::new(q(0, 1), q(2, 3)), "2/3i"),
            (GaussianRational::from_ints(2, 2), "2+2i"),
        ];
        for (value, text) in cases {
            assert_eq!(value.to_string(), text);
            assert_eq!(parse(text), value);
        }
    }

    #[test]
    fn reports_positions() {
        let bad = [
            ("", 0),
            ("1+", 2),
            ("1+2", 3),
            ("i+1", 1),
            ("1/0", 2),
            ("1 + i", 1),
            ("x", 0),
            ("1+ii", 3),
            ("1/", 2),
        ];
        for (text, pos) in bad {
            let err = text.parse::<GaussianRational>().unwrap_err();
            assert_eq!(err.position, pos, "{text:?}: {err}");
        }
    }
}
