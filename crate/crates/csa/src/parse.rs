//! Infix polynomial notation: `t^2 - 2*t + 1` and friends.
//!
//! A polynomial is a signed sum of terms. Each term is a coefficient, a
//! power of `t`, or both joined by an optional `*`. Coefficients are
//! unsigned integers or fractions `p/q`; signs sit between terms and one
//! may lead the whole expression. Whitespace is free between tokens.
//! Repeated exponents accumulate, so `t + t` parses to `2*t`.

use num_bigint::BigInt;
use num_traits::Zero;

use crate::error::{Error, Result};
use crate::poly::RatPoly;
use crate::rat::Rat;

/// Keeps pathological inputs like `t^99999999` from allocating in earnest.
const MAX_EXPONENT: usize = 4096;

/// Parses the infix notation. Errors carry the byte offset of the first
/// unusable character and what would have been acceptable there.
pub fn parse_poly(input: &str) -> Result<RatPoly> {
    let mut cur = Cursor {
        bytes: input.as_bytes(),
        pos: 0,
    };
    let mut terms: Vec<(usize, Rat)> = Vec::new();
    cur.skip_ws();
    let mut sign = match cur.peek() {
        Some(b'-') => {
            cur.pos += 1;
            cur.skip_ws();
            -1
        }
        Some(b'+') => {
            cur.pos += 1;
            cur.skip_ws();
            1
        }
        _ => 1,
    };
    loop {
        let (exponent, coeff) = cur.term()?;
        terms.push((
            exponent,
            if sign < 0 { -coeff } else { coeff },
        ));
        cur.skip_ws();
        sign = match cur.peek() {
            None => break,
            Some(b'+') => 1,
            Some(b'-') => -1,
            Some(_) => return Err(cur.err("`+`, `-`, or end of input")),
        };
        cur.pos += 1;
        cur.skip_ws();
    }
    let top = terms.iter().map(|(e, _)| *e).max().unwrap_or(0);
    let mut coeffs = vec![Rat::zero(); top + 1];
    for (e, c) in terms {
        coeffs[e] = &coeffs[e] + &c;
    }
    Ok(RatPoly::from_coeffs(coeffs))
}

struct Cursor<'a> {
    bytes: &'a [u8],
    pos: usize,
}

impl Cursor<'_> {
    fn peek(&self) -> Option<u8> {
        self.bytes.get(self.pos).copied()
    }

    fn skip_ws(&mut self) {
        while matches!(self.peek(), Some(b' ' | b'\t' | b'\n' | b'\r')) {
            self.pos += 1;
        }
    }

    fn err(&self, expected: &str) -> Error {
        Error::Parse {
            position: self.pos,
            expected: expected.to_string(),
        }
    }

    /// One term: `coeff`, `t[^k]`, `coeff * t[^k]`, or `coeff t[^k]`.
    fn term(&mut self) -> Result<(usize, Rat)> {
        match self.peek() {
            Some(b't') => {
                self.pos += 1;
                Ok((self.exponent()?, crate::rat::rat_int(1)))
            }
            Some(b'0'..=b'9') => {
                let coeff = self.number()?;
                self.skip_ws();
                match self.peek() {
                    Some(b'*') => {
                        self.pos += 1;
                        self.skip_ws();
                        if self.peek() != Some(b't') {
                            return Err(self.err("`t`"));
                        }
                        self.pos += 1;
                        Ok((self.exponent()?, coeff))
                    }
                    Some(b't') => {
                        self.pos += 1;
                        Ok((self.exponent()?, coeff))
                    }
                    _ => Ok((0, coeff)),
                }
            }
            _ => Err(self.err("a term: a coefficient or `t`")),
        }
    }

    /// The `^k` tail after a `t`, defaulting to 1.
    fn exponent(&mut self) -> Result<usize> {
        self.skip_ws();
        if self.peek() != Some(b'^') {
            return Ok(1);
        }
        self.pos += 1;
        self.skip_ws();
        let start = self.pos;
        let digits = self
            .digits()
            .ok_or_else(|| self.err("exponent digits after `^`"))?;
        let exponent: usize = digits
            .try_into()
            .map_err(|_| Error::Overflow(format!("exponent at byte {start}")))?;
        if exponent > MAX_EXPONENT {
            return Err(Error::Overflow(format!(
                "exponent {exponent} exceeds the supported bound {MAX_EXPONENT}"
            )));
        }
        Ok(exponent)
    }

    /// Unsigned integer or fraction `p/q` with q nonzero.
    fn number(&mut self) -> Result<Rat> {
        let numerator = self.digits().ok_or_else(|| self.err("digits"))?;
        self.skip_ws();
        if self.peek() != Some(b'/') {
            return Ok(Rat::from(numerator));
        }
        self.pos += 1;
        self.skip_ws();
        let den_at = self.pos;
        let denominator = self
            .digits()
            .ok_or_else(|| self.err("denominator digits after `/`"))?;
        if denominator.is_zero() {
            return Err(Error::Parse {
                position: den_at,
                expected: "a nonzero denominator".to_string(),
            });
        }
        Ok(Rat::new(numerator, denominator))
    }

    fn digits(&mut self) -> Option<BigInt> {
        let start = self.pos;
        while matches!(self.peek(), Some(b'0'..=b'9')) {
            self.pos += 1;
        }
        if self.pos == start {
            return None;
        }
        let text = std::str::from_utf8(&self.bytes[start..self.pos]).unwrap();
        Some(text.parse().unwrap())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rat::{rat, rat_int};

    #[test]
    fn accepts_standard_forms() {
        let expected = RatPoly::from_ints(&[1, -2, 1]);
        for text in [
            "t^2 - 2*t + 1",
            "t^2-2*t+1",
            "t^2 - 2t + 1",
            "1 - 2*t + t^2",
            "  t ^ 2  -  2 * t  +  1  ",
        ] {
            assert_eq!(parse_poly(text).unwrap(), expected, "{text:?}");
        }
    }

    #[test]
    fn accepts_fractions_and_signs() {
        assert_eq!(
            parse_poly("-t^3 + 1/2*t - 7/3").unwrap(),
            RatPoly::from_coeffs(vec![rat(-7, 3), rat(1, 2), rat_int(0), rat_int(-1)])
        );
        assert_eq!(parse_poly("+5").unwrap(), RatPoly::from_ints(&[5]));
        assert_eq!(parse_poly("0").unwrap(), RatPoly::zero());
        assert_eq!(parse_poly("t + t").unwrap(), RatPoly::from_ints(&[0, 2]));
        assert_eq!(parse_poly("t - t").unwrap(), RatPoly::zero());
    }

    #[test]
    fn display_round_trips() {
        let polys = [
            RatPoly::zero(),
            RatPoly::one(),
            RatPoly::from_ints(&[-3, 0, 1]),
            RatPoly::from_coeffs(vec![rat(1782, 1), rat(252, 1), rat(325, 4), rat(6, 1), rat(1, 1)]),
            RatPoly::from_coeffs(vec![rat(-1, 2), rat(0, 1), rat(3, 7)]),
        ];
        for p in polys {
            assert_eq!(parse_poly(&p.to_string()).unwrap(), p, "{p}");
        }
    }

    #[test]
    fn reports_positions() {
        match parse_poly("t^2 + x") {
            Err(Error::Parse { position, .. }) => assert_eq!(position, 6),
            other => panic!("expected parse error, got {other:?}"),
        }
        match parse_poly("t^") {
            Err(Error::Parse { position, expected }) => {
                assert_eq!(position, 2);
                assert!(expected.contains("exponent"));
            }
            other => panic!("expected parse error, got {other:?}"),
        }
        match parse_poly("1/0 + t") {
            Err(Error::Parse { position, expected }) => {
                assert_eq!(position, 2);
                assert!(expected.contains("nonzero"));
            }
            other => panic!("expected parse error, got {other:?}"),
        }
        match parse_poly("") {
            Err(Error::Parse { position, .. }) => assert_eq!(position, 0),
            other => panic!("expected parse error, got {other:?}"),
        }
        match parse_poly("2*3") {
            Err(Error::Parse { position, expected }) => {
                assert_eq!(position, 2);
                assert_eq!(expected, "`t`");
            }
            other => panic!("expected parse error, got {other:?}"),
        }
        assert!(matches!(parse_poly("t^100000"), Err(Error::Overflow(_))));
    }

    #[test]
    fn rejects_trailing_garbage() {
        assert!(parse_poly("t + ").is_err());
        assert!(parse_poly("t t").is_err());
        assert!(parse_poly("t^2 1").is_err());
        assert!(parse_poly("--1").is_err());
        assert!(parse_poly("*t").is_err());
    }
}
