//! Reading polynomials written in the human notation, e.g.
//! `q^2 t - 2 a t^-1 + 1` or `Q^-4 T A`.

use num_bigint::BigInt;
use thiserror::Error;

use super::{LaurentPoly, Monomial};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("cannot parse polynomial at byte {at}: {msg}")]
pub struct ParseError {
    pub at: usize,
    pub msg: String,
}

struct Cursor<'a> {
    s: &'a [u8],
    pos: usize,
}

impl Cursor<'_> {
    fn skip_ws(&mut self) {
        while self.pos < self.s.len() && (self.s[self.pos].is_ascii_whitespace() || self.s[self.pos] == b'*') {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.s.get(self.pos).copied()
    }

    fn err<T>(&self, msg: impl Into<String>) -> Result<T, ParseError> {
        Err(ParseError {
            at: self.pos,
            msg: msg.into(),
        })
    }

    fn digits(&mut self) -> &str {
        let start = self.pos;
        while self.pos < self.s.len() && self.s[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        std::str::from_utf8(&self.s[start..self.pos]).expect("ascii digits")
    }

    fn exponent(&mut self) -> Result<i32, ParseError> {
        if self.peek() != Some(b'^') {
            return Ok(1);
        }
        self.pos += 1;
        let braced = self.peek() == Some(b'{');
        if braced {
            self.pos += 1;
        }
        let neg = self.peek() == Some(b'-');
        if neg {
            self.pos += 1;
        }
        self.skip_ws();
        let d = self.digits();
        let Ok(e) = d.parse::<i32>() else {
            return self.err("expected an exponent");
        };
        if braced {
            if self.peek() != Some(b'}') {
                return self.err("expected `}`");
            }
            self.pos += 1;
        }
        Ok(if neg { -e } else { e })
    }

    /// One signed term; returns `None` at end of input.
    fn term(&mut self, first: bool) -> Result<Option<(Monomial, BigInt)>, ParseError> {
        let sign = match self.peek() {
            None if !first => return Ok(None),
            None => return self.err("empty polynomial"),
            Some(b'+') => {
                self.pos += 1;
                1
            }
            Some(b'-') => {
                self.pos += 1;
                -1
            }
            Some(_) if first => 1,
            Some(c) => return self.err(format!("expected `+` or `-`, found `{}`", c as char)),
        };
        self.skip_ws();
        let d = self.digits();
        let mut coeff: BigInt = if d.is_empty() { 1.into() } else { d.parse().expect("digits") };
        coeff *= sign;
        let mut m = Monomial::ONE;
        let mut seen = !d.is_empty();
        loop {
            let var = match self.peek() {
                Some(b'q') => Monomial::var_q(),
                Some(b'a') => Monomial::var_a(),
                Some(b't') => Monomial::var_t(),
                Some(b'Q') => Monomial::new(1, 0, 0),
                Some(b'A') => Monomial::new(0, 1, 0),
                Some(b'T') => Monomial::new(0, 0, 1),
                _ => break,
            };
            self.pos += 1;
            let e = self.exponent()?;
            m = m * var.pow(e);
            seen = true;
        }
        if !seen {
            return self.err("expected a coefficient or a variable");
        }
        Ok(Some((m, coeff)))
    }
}

/// Parses a sum of terms `c x^e y^f ...` in the variables `q, a, t` (and the
/// underlying `Q, A, T`). Unicode minus signs are accepted.
pub fn parse_poly(text: &str) -> Result<LaurentPoly, ParseError> {
    let cleaned = text.replace('\u{2212}', "-");
    let mut cur = Cursor {
        s: cleaned.as_bytes(),
        pos: 0,
    };
    let mut out = LaurentPoly::zero();
    let mut first = true;
    while let Some((m, c)) = cur.term(first)? {
        out.add_term(m, c);
        first = false;
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ring::render::render_poly;

    #[test]
    fn reads_simple_sums() {
        let p = parse_poly("1 + a").unwrap();
        assert_eq!(p, LaurentPoly::from_qat_terms([(0, 0, 0, 1), (0, 1, 0, 1)]));
        let p = parse_poly("-q^8t - 2q^3t^3 + t^8").unwrap();
        assert_eq!(
            p,
            LaurentPoly::from_qat_terms([(8, 0, 1, -1), (3, 0, 3, -2), (0, 0, 8, 1)])
        );
        assert_eq!(parse_poly("q t^-1 − q").unwrap(), LaurentPoly::from_qat_terms([(1, 0, -1, 1), (1, 0, 0, -1)]));
        assert_eq!(parse_poly("t^{-2}*a").unwrap(), LaurentPoly::from_qat_terms([(0, 1, -2, 1)]));
    }

    #[test]
    fn cancellation_gives_zero() {
        assert!(parse_poly("q - q").unwrap().is_zero());
    }

    #[test]
    fn rejects_garbage() {
        for bad in ["", "q +", "x", "q^", "+ + q", "q t a)"] {
            assert!(parse_poly(bad).is_err(), "{bad:?}");
        }
    }

    #[test]
    fn reads_rendered_output() {
        for text in ["(Q^-4 T A + Q^-6 T A^2)", "q^2 t - 3 t^-1 a + 1"] {
            let body = text.trim_matches(|c| c == '(' || c == ')');
            let p = parse_poly(body).unwrap();
            assert_eq!(parse_poly(&render_poly(&p)).unwrap(), p);
        }
    }
}
