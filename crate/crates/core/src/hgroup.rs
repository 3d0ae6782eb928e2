//! Words in the ambient group `H = ⟨x, b, y1..yn | [x^k, b] u⟩`, the
//! Reidemeister–Schreier projection onto the kernel of the x-exponent map,
//! and the substitution map from `⟨x, y, z | x²y²z²⟩` onto
//! `⟨a, b, c | [a, b] c²⟩`.
//!
//! Index convention: `g_i = x⁻ⁱ g xⁱ`. A generator read after a prefix of
//! x-exponent `p` therefore lands at index `-p`. For the relator
//! `x⁻ᵏ b⁻¹ xᵏ b u` the first `b` is read at prefix sum `-k` and becomes
//! `b[k]⁻¹`, giving `b[k]⁻¹ b[0] u_0`, which is trivial in `N`.

use crate::error::{Error, Result};
use crate::words::{Generator, Letter, Syllable, Word};

/// A word over named generators of `H` (or of the genus-3 groups).
pub type HWord = Word;

pub const X: Letter = Letter::named('x', None);
pub const B: Letter = Letter::named('b', None);

/// Named generator `ym`.
pub fn y_named(m: u32) -> Letter {
    Letter::named('y', Some(m))
}

/// Image under the map `H → ℤ` sending `x` to 1.
pub fn x_exp(h: &HWord) -> i64 {
    h.exponent_sum(&X)
}

/// Rewrite an element of the kernel as a word in `b[i]`, `y[m,i]`.
pub fn project_to_kernel(h: &HWord) -> Result<Word> {
    let total = x_exp(h);
    if total != 0 {
        return Err(Error::NonzeroXSum(total));
    }
    let mut prefix = 0i64;
    let mut raw = Vec::with_capacity(h.len());
    for s in h.syllables() {
        let l = s.letter;
        if l.primed {
            return Err(Error::ForeignLetter {
                letter: l.to_string(),
                reason: "H has no primed generators".into(),
            });
        }
        match l.gen {
            Generator::Named('x', None) => prefix += s.sign.value(),
            Generator::Named('b', None) => raw.push(Syllable {
                letter: Letter::b(-prefix),
                sign: s.sign,
            }),
            Generator::Named('y', Some(m)) if m >= 1 => raw.push(Syllable {
                letter: Letter::y(m, -prefix),
                sign: s.sign,
            }),
            _ => {
                return Err(Error::ForeignLetter {
                    letter: l.to_string(),
                    reason: "expected x, b or ym".into(),
                })
            }
        }
    }
    Ok(raw.into_iter().collect())
}

/// Inverse of [`project_to_kernel`] on kernel words: `b[i] ↦ x⁻ⁱ b xⁱ`,
/// `y[m,i] ↦ x⁻ⁱ ym xⁱ`.
pub fn lift_to_h(w: &Word) -> Result<HWord> {
    w.substitute(|l| {
        if l.primed {
            return Err(Error::ForeignLetter {
                letter: l.to_string(),
                reason: "primed letters cannot be lifted".into(),
            });
        }
        let (g, i) = match l.gen {
            Generator::B(i) => (B, i),
            Generator::Y(m, i) => (y_named(m), i),
            Generator::Named(..) => return Err(Error::NotIndexed(l.to_string())),
        };
        let xi = Word::power(X, i);
        Ok(xi.inverse().mul(&Word::letter(g)).mul(&xi))
    })
}

/// `x ↦ c a⁻¹`, `y ↦ b⁻¹ c⁻¹`, `z ↦ c b c a c⁻¹`.
pub fn phi3(w: &HWord) -> Result<HWord> {
    w.substitute(|l| {
        let image = match (l.primed, l.gen) {
            (false, Generator::Named('x', None)) => "c a^-1",
            (false, Generator::Named('y', None)) => "b^-1 c^-1",
            (false, Generator::Named('z', None)) => "c b c a c^-1",
            _ => {
                return Err(Error::ForeignLetter {
                    letter: l.to_string(),
                    reason: "phi3 is defined on x, y, z".into(),
                })
            }
        };
        Ok(image.parse().expect("fixed images parse"))
    })
}
