//! Text syntax for words.
//!
//! Tokens are separated by whitespace. A token is a generator name, an
//! optional prime `'`, and an optional exponent `^e` with `e` a nonzero
//! integer. Names are `b[i]`, `y[m,i]`, or a bare ASCII letter with an
//! optional numeric suffix (`x`, `b`, `y3`). The identity is spelled `1`.

use std::str::FromStr;

use super::{reduce, Generator, Letter, Syllable, Word};
use crate::error::{Error, Result};

/// Largest accepted `|e|` in `^e`; exponents are expanded letter by letter.
pub const MAX_EXPONENT: u64 = 1 << 20;

/// Parse a word without freely reducing it.
pub fn parse_raw(input: &str) -> Result<Vec<Syllable>> {
    let mut out = Vec::new();
    for token in input.split_whitespace() {
        if token == "1" {
            continue;
        }
        let (letter, exp) = parse_token(token)?;
        let s = if exp > 0 {
            Syllable::pos(letter)
        } else {
            Syllable::neg(letter)
        };
        out.extend(std::iter::repeat_n(s, exp.unsigned_abs() as usize));
    }
    Ok(out)
}

fn parse_token(token: &str) -> Result<(Letter, i64)> {
    let (head, exp) = match token.split_once('^') {
        Some((head, e)) => {
            let e: i64 = e
                .parse()
                .map_err(|_| Error::parse(token, "exponent is not an integer"))?;
            if e == 0 {
                return Err(Error::parse(token, "exponent must be nonzero"));
            }
            if e.unsigned_abs() > MAX_EXPONENT {
                return Err(Error::parse(token, "exponent too large"));
            }
            (head, e)
        }
        None => (token, 1),
    };
    let (name, primed) = match head.strip_suffix('\'') {
        Some(name) => (name, true),
        None => (head, false),
    };
    let gen = parse_generator(name).map_err(|reason| Error::parse(token, reason))?;
    Ok((Letter { primed, gen }, exp))
}

fn parse_generator(name: &str) -> std::result::Result<Generator, &'static str> {
    if let Some(inner) = name.strip_prefix("b[").and_then(|s| s.strip_suffix(']')) {
        let i = inner.trim().parse().map_err(|_| "bad index in b[i]")?;
        return Ok(Generator::B(i));
    }
    if let Some(inner) = name.strip_prefix("y[").and_then(|s| s.strip_suffix(']')) {
        let (m, i) = inner.split_once(',').ok_or("expected y[m,i]")?;
        let m: u32 = m.trim().parse().map_err(|_| "bad first index in y[m,i]")?;
        if m == 0 {
            return Err("first index of y[m,i] must be at least 1");
        }
        let i = i.trim().parse().map_err(|_| "bad second index in y[m,i]")?;
        return Ok(Generator::Y(m, i));
    }
    let mut chars = name.chars();
    let base = chars.next().ok_or("empty generator name")?;
    if !base.is_ascii_alphabetic() {
        return Err("generator name must start with a letter");
    }
    let rest = chars.as_str();
    if rest.is_empty() {
        return Ok(Generator::Named(base, None));
    }
    if !rest.bytes().all(|c| c.is_ascii_digit()) {
        return Err("generator name must be a letter followed by digits");
    }
    let sub = rest.parse().map_err(|_| "generator suffix out of range")?;
    Ok(Generator::Named(base, Some(sub)))
}

impl FromStr for Word {
    type Err = Error;

    fn from_str(s: &str) -> Result<Word> {
        parse_raw(s).map(reduce)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_all_token_shapes() {
        let raw = parse_raw("b[5] b[6]^-1 y[1,-3]' x^2 y1 1").unwrap();
        assert_eq!(raw.len(), 6);
        assert_eq!(raw[0], Syllable::pos(Letter::b(5)));
        assert_eq!(raw[1], Syllable::neg(Letter::b(6)));
        assert_eq!(raw[2], Syllable::pos(Letter::y(1, -3).with_prime(true)));
        assert_eq!(raw[3], Syllable::pos(Letter::named('x', None)));
        assert_eq!(raw[5], Syllable::pos(Letter::named('y', Some(1))));
    }

    #[test]
    fn identity_spellings() {
        assert!("1".parse::<Word>().unwrap().is_empty());
        assert!("".parse::<Word>().unwrap().is_empty());
        assert!("b[2]' b[2]'^-1".parse::<Word>().unwrap().is_empty());
    }

    #[test]
    fn rejects_malformed_tokens() {
        for bad in ["b[x]", "y[0,1]", "y[2]", "b^0", "b^x", "9", "ab", "[1]", "b[1", "b^99999999999"] {
            assert!(bad.parse::<Word>().is_err(), "{bad} should not parse");
        }
    }

    #[test]
    fn display_uses_runs() {
        let w: Word = "y[1,1] y[1,1] b[2]'^-3 x".parse().unwrap();
        assert_eq!(w.to_string(), "y[1,1]^2 b[2]'^-3 x");
        assert_eq!(w.to_string().parse::<Word>().unwrap(), w);
    }
}
