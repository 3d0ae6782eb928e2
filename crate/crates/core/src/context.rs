//! Presentation data `(k, n, u)` of `H = ⟨x, b, y1..yn | [x^k, b] u⟩`.
//!
//! The kernel `N` of the x-exponent map is generated by `b[i]` and `y[m,i]`
//! subject to `b[i] u_i = b[i+k]`, where `u_i` is `u` with every index
//! shifted by `i`.

use crate::error::{Error, Result};
use crate::words::{parse_raw, reduce, Generator, Letter, Syllable, Word};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GroupContext {
    k: i64,
    n: u32,
    u: Word,
    primed: bool,
}

impl GroupContext {
    /// Validate `(k, n, u)` with `u` a word over `y[m,0]`, `1 <= m <= n`.
    pub fn new(k: i64, n: u32, u: Word) -> Result<Self> {
        Self::build(k, n, u, false)
    }

    /// Like [`GroupContext::new`] but rejects an input that is not
    /// already freely reduced.
    pub fn from_raw(k: i64, n: u32, raw: &[Syllable]) -> Result<Self> {
        let u = reduce(raw.iter().copied());
        if u.len() != raw.len() {
            return Err(Error::InvalidContext("u is not freely reduced".into()));
        }
        Self::new(k, n, u)
    }

    /// Parse `u` in the command-line shorthand where `ym` stands for
    /// `y[m,0]`. Explicit `y[m,0]` letters are accepted too.
    pub fn parse(k: i64, n: u32, u: &str) -> Result<Self> {
        let raw = parse_raw(u)?
            .into_iter()
            .map(|s| match s.letter.gen {
                Generator::Named('y', Some(m)) if m >= 1 && !s.letter.primed => Syllable {
                    letter: Letter::y(m, 0),
                    ..s
                },
                _ => s,
            })
            .collect::<Vec<_>>();
        Self::from_raw(k, n, &raw)
    }

    pub(crate) fn build(k: i64, n: u32, u: Word, primed: bool) -> Result<Self> {
        if k < 1 {
            return Err(Error::InvalidContext(format!("k must be at least 1, got {k}")));
        }
        if n < 1 {
            return Err(Error::InvalidContext(format!("n must be at least 1, got {n}")));
        }
        if u.is_empty() {
            return Err(Error::InvalidContext("u trivial".into()));
        }
        for s in u.syllables() {
            let ok = s.letter.primed == primed
                && matches!(s.letter.gen, Generator::Y(m, 0) if m <= n);
            if !ok {
                return Err(Error::InvalidContext(format!(
                    "u may only use y[m,0] with 1 <= m <= {n}, found {}",
                    s.letter
                )));
            }
        }
        Ok(GroupContext { k, n, u, primed })
    }

    pub fn k(&self) -> i64 {
        self.k
    }

    pub fn n(&self) -> u32 {
        self.n
    }

    /// Defining word `u` at base index 0.
    pub fn u(&self) -> &Word {
        &self.u
    }

    /// True for the dual context produced by dualization.
    pub fn is_primed(&self) -> bool {
        self.primed
    }

    pub fn b(&self, i: i64) -> Letter {
        Letter::b(i).with_prime(self.primed)
    }

    pub fn y(&self, m: u32, i: i64) -> Letter {
        Letter::y(m, i).with_prime(self.primed)
    }

    /// `u_i`.
    pub fn u_at(&self, i: i64) -> Word {
        self.u.shift(i).expect("u only holds indexed letters")
    }

    /// `w_i = b[i] · u_i`.
    pub fn w_at(&self, i: i64) -> Word {
        Word::letter(self.b(i)).mul(&self.u_at(i))
    }

    /// Check that `w` only uses kernel letters of this context.
    pub fn check_kernel_word(&self, w: &Word) -> Result<()> {
        for s in w.syllables() {
            let l = s.letter;
            if !l.is_indexed() {
                return Err(Error::NotIndexed(l.to_string()));
            }
            if l.primed != self.primed {
                let reason = if self.primed {
                    "context is dual, letter is unprimed"
                } else {
                    "primed letters need the dual context"
                };
                return Err(Error::ForeignLetter {
                    letter: l.to_string(),
                    reason: reason.into(),
                });
            }
            if let Generator::Y(m, _) = l.gen {
                if m > self.n {
                    return Err(Error::ForeignLetter {
                        letter: l.to_string(),
                        reason: format!("n = {}", self.n),
                    });
                }
            }
        }
        Ok(())
    }
}
