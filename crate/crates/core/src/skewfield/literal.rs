//! Element literals.
//!
//! ```text
//! rational   := '-'? digits ('/' digits)?
//! gfp        := digits                      (reduced mod p)
//! quaternion := sign? term (('+'|'-') term)*
//! term       := rational unit? | unit
//! unit       := 'i' | 'j' | 'k'
//! ```
//!
//! Whitespace is ignored everywhere.

use num::BigInt;

use super::{Field, FieldElement, GaloisPrime, Rational, RationalQuaternion};
use crate::error::{Error, Result};

pub(super) fn parse_element(field: Field, input: &str) -> Result<FieldElement> {
    let s: String = input.chars().filter(|c| !c.is_whitespace()).collect();
    if s.is_empty() {
        return Err(Error::parse(input, "empty literal"));
    }
    match field {
        Field::Rational => {
            let mut cur = Cursor::new(&s);
            let neg = cur.eat('-');
            let r = cur.unsigned_rational(input)?.ok_or_else(|| Error::parse(input, "expected digits"))?;
            cur.finish(input)?;
            Ok(FieldElement::Rational(if neg { -&r } else { r }))
        }
        Field::Gf(p) => {
            if !s.bytes().all(|b| b.is_ascii_digit()) {
                return Err(Error::parse(input, "expected decimal digits"));
            }
            let n: BigInt = s.parse().map_err(|_| Error::parse(input, "expected decimal digits"))?;
            let r = n % BigInt::from(p);
            let r: u64 = r.try_into().expect("residue below modulus");
            Ok(FieldElement::Gf(GaloisPrime::new(r, p)))
        }
        Field::Quaternion => parse_quaternion(&s, input).map(FieldElement::Quaternion),
    }
}

fn parse_quaternion(s: &str, input: &str) -> Result<RationalQuaternion> {
    let mut cur = Cursor::new(s);
    let mut acc = [Rational::zero(), Rational::zero(), Rational::zero(), Rational::zero()];
    let mut first = true;
    while !cur.done() {
        let neg = if cur.eat('-') {
            true
        } else if cur.eat('+') {
            if first {
                return Err(Error::parse(input, "leading '+'"));
            }
            false
        } else if first {
            false
        } else {
            return Err(Error::parse(input, "expected '+' or '-' between terms"));
        };
        let coef = cur.unsigned_rational(input)?;
        let unit = match cur.peek() {
            Some('i') => Some(1),
            Some('j') => Some(2),
            Some('k') => Some(3),
            _ => None,
        };
        if unit.is_some() {
            cur.bump();
        }
        let slot = match (&coef, unit) {
            (None, None) => return Err(Error::parse(input, "expected a term")),
            (_, Some(u)) => u,
            (Some(_), None) => 0,
        };
        let mut value = coef.unwrap_or_else(Rational::one);
        if neg {
            value = -&value;
        }
        acc[slot] = &acc[slot] + &value;
        first = false;
    }
    if first {
        return Err(Error::parse(input, "empty literal"));
    }
    let [a, b, c, d] = acc;
    Ok(RationalQuaternion::new(a, b, c, d))
}

struct Cursor<'a> {
    s: &'a [u8],
    pos: usize,
}

impl<'a> Cursor<'a> {
    fn new(s: &'a str) -> Self {
        Cursor { s: s.as_bytes(), pos: 0 }
    }

    fn done(&self) -> bool {
        self.pos >= self.s.len()
    }

    fn peek(&self) -> Option<char> {
        self.s.get(self.pos).map(|&b| b as char)
    }

    fn bump(&mut self) {
        self.pos += 1;
    }

    fn eat(&mut self, c: char) -> bool {
        if self.peek() == Some(c) {
            self.bump();
            true
        } else {
            false
        }
    }

    fn digits(&mut self) -> Option<BigInt> {
        let start = self.pos;
        while matches!(self.peek(), Some(c) if c.is_ascii_digit()) {
            self.bump();
        }
        if start == self.pos {
            return None;
        }
        let text = std::str::from_utf8(&self.s[start..self.pos]).expect("ascii digits");
        Some(text.parse().expect("ascii digits"))
    }

    /// `digits ('/' digits)?`, or `None` when no digits are present.
    fn unsigned_rational(&mut self, input: &str) -> Result<Option<Rational>> {
        let Some(num) = self.digits() else {
            return Ok(None);
        };
        if !self.eat('/') {
            return Ok(Some(Rational::from_integer(num)));
        }
        let den = self
            .digits()
            .ok_or_else(|| Error::parse(input, "expected denominator after '/'"))?;
        Rational::new(num, den)
            .map(Some)
            .ok_or_else(|| Error::parse(input, "zero denominator"))
    }

    fn finish(&self, input: &str) -> Result<()> {
        if self.done() {
            Ok(())
        } else {
            Err(Error::parse(input, format!("unexpected trailing input at byte {}", self.pos)))
        }
    }
}
