//! Freely reduced words over an indexed alphabet and the free-group
//! algorithms built on them.
//!
//! A [`Word`] is always freely reduced: every constructor runs the stack
//! reduction, so no public value can hold an adjacent inverse pair. Letters
//! come in three shapes: the kernel letters `b[i]` and `y[m,i]`, and bare
//! named generators such as `x`, `b`, `y1` used for words in the ambient
//! one-relator group. Each shape can carry a prime, which marks the dual
//! alphabet.

mod conjugacy;
mod syntax;

use std::collections::BTreeSet;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

pub use conjugacy::{are_conjugate, ConjugacyWitness, Verdict};
pub use syntax::parse_raw;

/// Generator shape. The derived order puts `b` letters before `y` letters
/// before named generators, then compares indices.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Generator {
    /// Kernel letter `b[i]`.
    B(i64),
    /// Kernel letter `y[m,i]`, `m >= 1`.
    Y(u32, i64),
    /// Bare generator: an ASCII letter with an optional numeric suffix (`x`, `y2`).
    Named(char, Option<u32>),
}

/// A generator together with the dual-alphabet flag.
///
/// Field order matters: the derived `Ord` sorts unprimed letters first.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Letter {
    pub primed: bool,
    pub gen: Generator,
}

impl Letter {
    pub const fn b(i: i64) -> Self {
        Letter {
            primed: false,
            gen: Generator::B(i),
        }
    }

    /// `y[m,i]`. Panics if `m == 0`.
    pub fn y(m: u32, i: i64) -> Self {
        assert!(m >= 1, "y-letters are numbered from 1");
        Letter {
            primed: false,
            gen: Generator::Y(m, i),
        }
    }

    pub const fn named(base: char, sub: Option<u32>) -> Self {
        Letter {
            primed: false,
            gen: Generator::Named(base, sub),
        }
    }

    pub const fn with_prime(self, primed: bool) -> Self {
        Letter { primed, ..self }
    }

    /// Second index of an indexed letter.
    pub fn index(&self) -> Option<i64> {
        match self.gen {
            Generator::B(i) | Generator::Y(_, i) => Some(i),
            Generator::Named(..) => None,
        }
    }

    /// Same letter with its index replaced; `None` for named generators.
    pub fn with_index(&self, i: i64) -> Option<Letter> {
        let gen = match self.gen {
            Generator::B(_) => Generator::B(i),
            Generator::Y(m, _) => Generator::Y(m, i),
            Generator::Named(..) => return None,
        };
        Some(Letter { gen, ..*self })
    }

    pub fn is_b(&self) -> bool {
        matches!(self.gen, Generator::B(_))
    }

    pub fn is_y(&self) -> bool {
        matches!(self.gen, Generator::Y(..))
    }

    pub fn is_indexed(&self) -> bool {
        self.index().is_some()
    }
}

impl fmt::Display for Letter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.gen {
            Generator::B(i) => write!(f, "b[{i}]")?,
            Generator::Y(m, i) => write!(f, "y[{m},{i}]")?,
            Generator::Named(c, None) => write!(f, "{c}")?,
            Generator::Named(c, Some(s)) => write!(f, "{c}{s}")?,
        }
        if self.primed {
            f.write_str("'")?;
        }
        Ok(())
    }
}

/// Exponent of a single letter occurrence.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Sign {
    Pos,
    Neg,
}

impl Sign {
    pub fn flip(self) -> Self {
        match self {
            Sign::Pos => Sign::Neg,
            Sign::Neg => Sign::Pos,
        }
    }

    pub fn value(self) -> i64 {
        match self {
            Sign::Pos => 1,
            Sign::Neg => -1,
        }
    }

    pub fn from_value(e: i64) -> Option<Self> {
        match e {
            1 => Some(Sign::Pos),
            -1 => Some(Sign::Neg),
            _ => None,
        }
    }
}

/// One letter occurrence with exponent ±1.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Syllable {
    pub letter: Letter,
    pub sign: Sign,
}

impl Syllable {
    pub const fn pos(letter: Letter) -> Self {
        Syllable {
            letter,
            sign: Sign::Pos,
        }
    }

    pub const fn neg(letter: Letter) -> Self {
        Syllable {
            letter,
            sign: Sign::Neg,
        }
    }

    pub fn inverse(self) -> Self {
        Syllable {
            letter: self.letter,
            sign: self.sign.flip(),
        }
    }

    pub fn is_inverse_of(&self, other: &Syllable) -> bool {
        self.letter == other.letter && self.sign != other.sign
    }
}

/// A freely reduced word. The empty word is the identity.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Word(Vec<Syllable>);

/// Freely reduce an arbitrary sequence of signed letters.
pub fn reduce<I: IntoIterator<Item = Syllable>>(raw: I) -> Word {
    let mut out: Vec<Syllable> = Vec::new();
    for s in raw {
        match out.last() {
            Some(top) if top.is_inverse_of(&s) => {
                out.pop();
            }
            _ => out.push(s),
        }
    }
    Word(out)
}

impl Word {
    pub fn identity() -> Self {
        Word(Vec::new())
    }

    pub fn letter(l: Letter) -> Self {
        Word(vec![Syllable::pos(l)])
    }

    /// `l^e`, expanded to `|e|` occurrences.
    pub fn power(l: Letter, e: i64) -> Self {
        let s = if e >= 0 {
            Syllable::pos(l)
        } else {
            Syllable::neg(l)
        };
        Word(vec![s; e.unsigned_abs() as usize])
    }

    pub fn syllables(&self) -> &[Syllable] {
        &self.0
    }

    pub fn into_syllables(self) -> Vec<Syllable> {
        self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn first(&self) -> Option<&Syllable> {
        self.0.first()
    }

    pub fn last(&self) -> Option<&Syllable> {
        self.0.last()
    }

    pub fn mul(&self, other: &Word) -> Word {
        // Only the seam can cancel; both halves are already reduced.
        let mut common = 0;
        while common < self.len().min(other.len())
            && self.0[self.len() - 1 - common].is_inverse_of(&other.0[common])
        {
            common += 1;
        }
        let mut out = Vec::with_capacity(self.len() + other.len() - 2 * common);
        out.extend_from_slice(&self.0[..self.len() - common]);
        out.extend_from_slice(&other.0[common..]);
        Word(out)
    }

    pub fn inverse(&self) -> Word {
        Word(self.0.iter().rev().map(|s| s.inverse()).collect())
    }

    /// `g⁻¹ · self · g`.
    pub fn conjugate_by(&self, g: &Word) -> Word {
        g.inverse().mul(self).mul(g)
    }

    pub fn pow(&self, e: i64) -> Word {
        let base = if e < 0 { self.inverse() } else { self.clone() };
        (0..e.unsigned_abs()).fold(Word::identity(), |acc, _| acc.mul(&base))
    }

    pub fn is_cyclically_reduced(&self) -> bool {
        match (self.0.first(), self.0.last()) {
            (Some(a), Some(z)) if self.len() > 1 => !a.is_inverse_of(z),
            _ => true,
        }
    }

    /// Split into `(core, conjugator)` with `core` cyclically reduced and
    /// `conjugator⁻¹ · core · conjugator = self`.
    pub fn cyclic_reduce(&self) -> (Word, Word) {
        let n = self.len();
        let mut peel = 0;
        while 2 * peel + 1 < n && self.0[peel].is_inverse_of(&self.0[n - 1 - peel]) {
            peel += 1;
        }
        let core = Word(self.0[peel..n - peel].to_vec());
        let conjugator = Word(self.0[n - peel..].to_vec());
        (core, conjugator)
    }

    /// Rotation starting at position `start` (taken modulo the length).
    /// For a cyclically reduced word the result is again reduced.
    pub fn rotate(&self, start: usize) -> Word {
        if self.is_empty() {
            return Word::identity();
        }
        let s = start % self.len();
        reduce(self.0[s..].iter().chain(&self.0[..s]).copied())
    }

    pub fn exponent_sum(&self, g: &Letter) -> i64 {
        self.0
            .iter()
            .filter(|s| s.letter == *g)
            .map(|s| s.sign.value())
            .sum()
    }

    /// Add `j` to the index of every letter.
    pub fn shift(&self, j: i64) -> Result<Word> {
        self.0
            .iter()
            .map(|s| {
                s.letter
                    .index()
                    .and_then(|i| s.letter.with_index(i + j))
                    .map(|letter| Syllable { letter, ..*s })
                    .ok_or_else(|| Error::NotIndexed(s.letter.to_string()))
            })
            .collect::<Result<Vec<_>>>()
            .map(Word)
    }

    pub fn min_index(&self) -> Option<i64> {
        self.0.iter().filter_map(|s| s.letter.index()).min()
    }

    pub fn max_index(&self) -> Option<i64> {
        self.0.iter().filter_map(|s| s.letter.index()).max()
    }

    /// Distinct letters occurring in the word, in canonical order.
    pub fn alphabet(&self) -> BTreeSet<Letter> {
        self.0.iter().map(|s| s.letter).collect()
    }

    /// Apply the free-group homomorphism defined on positive letters by
    /// `image`, then reduce.
    pub fn substitute<F>(&self, mut image: F) -> Result<Word>
    where
        F: FnMut(&Letter) -> Result<Word>,
    {
        let mut raw = Vec::with_capacity(self.len());
        for s in &self.0 {
            let w = image(&s.letter)?;
            match s.sign {
                Sign::Pos => raw.extend(w.0),
                Sign::Neg => raw.extend(w.inverse().0),
            }
        }
        Ok(reduce(raw))
    }
}

impl FromIterator<Syllable> for Word {
    fn from_iter<I: IntoIterator<Item = Syllable>>(iter: I) -> Self {
        reduce(iter)
    }
}

impl std::ops::Mul for &Word {
    type Output = Word;

    fn mul(self, rhs: &Word) -> Word {
        Word::mul(self, rhs)
    }
}

impl fmt::Display for Word {
    /// Runs of the same signed letter are written with exponent notation;
    /// the identity is written `1`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_empty() {
            return f.write_str("1");
        }
        let mut first = true;
        let mut i = 0;
        while i < self.0.len() {
            let s = self.0[i];
            let mut run = 1;
            while i + run < self.0.len() && self.0[i + run] == s {
                run += 1;
            }
            if !first {
                f.write_str(" ")?;
            }
            first = false;
            let e = run as i64 * s.sign.value();
            if e == 1 {
                write!(f, "{}", s.letter)?;
            } else {
                write!(f, "{}^{}", s.letter, e)?;
            }
            i += run;
        }
        Ok(())
    }
}

impl Serialize for Word {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for Word {
    fn deserialize<D: serde::Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(deserializer)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn w(s: &str) -> Word {
        s.parse().unwrap()
    }

    #[test]
    fn reduce_examples() {
        assert!(reduce(Vec::new()).is_empty());
        let b0 = Letter::b(0);
        assert!(reduce([Syllable::pos(b0), Syllable::neg(b0)]).is_empty());
        let y = Letter::y(1, 0);
        let b2 = Letter::b(2);
        let raw = [
            Syllable::pos(y),
            Syllable::pos(b2),
            Syllable::neg(b2),
            Syllable::neg(y),
        ];
        assert!(reduce(raw).is_empty());
    }

    #[test]
    fn multiply_and_invert() {
        assert_eq!(w("b[5]").mul(&w("b[6]^-1")), w("b[5] b[6]^-1"));
        assert_eq!(w("b[5] b[6]^-1").len(), 2);
        let x = w("b[0] y[1,0] b[3]^-1");
        assert!(x.mul(&x.inverse()).is_empty());
        assert_eq!(w("b[0] y[1,0]").inverse(), w("y[1,0]^-1 b[0]^-1"));
    }

    #[test]
    fn cyclic_reduce_examples() {
        let (core, g) = w("b[0] y[1,0] b[0]^-1").cyclic_reduce();
        assert_eq!(core, w("y[1,0]"));
        assert_eq!(g, w("b[0]^-1"));

        let (core, g) = w("y[1,7]").cyclic_reduce();
        assert_eq!(core, w("y[1,7]"));
        assert!(g.is_empty());

        let phi = w("c a^-1 c a^-1 b^-1 a b c a c^-1");
        let (core, g) = phi.cyclic_reduce();
        assert_eq!(core, w("c a^-1 b^-1 a b c"));
        assert_eq!(g.len(), 2);
        assert_eq!(core.conjugate_by(&g), phi);
    }

    #[test]
    fn cyclic_reduce_odd_palindrome_keeps_middle_letter() {
        let x = w("a b a^-1");
        let (core, g) = x.cyclic_reduce();
        assert_eq!(core, w("b"));
        assert_eq!(core.conjugate_by(&g), x);
    }

    #[test]
    fn exponent_sums() {
        let rel = w("a b a^-1 b^-1 c^2");
        assert_eq!(rel.exponent_sum(&Letter::named('c', None)), 2);
        assert_eq!(w("b[5] b[6]^-1").exponent_sum(&Letter::b(5)), 1);
        assert_eq!(Word::identity().exponent_sum(&Letter::b(5)), 0);
    }

    #[test]
    fn shift_examples() {
        assert_eq!(w("b[5] b[6]^-1").shift(-3).unwrap(), w("b[2] b[3]^-1"));
        let x = w("y[2,4] b[-1]^3");
        assert_eq!(x.shift(0).unwrap(), x);
        assert_eq!(
            w("b[0] x").shift(1),
            Err(Error::NotIndexed("x".to_string()))
        );
        assert_eq!(w("b[1]' y[1,-2]'").shift(2).unwrap(), w("b[3]' y[1,0]'"));
    }

    #[test]
    fn canonical_letter_order() {
        let mut letters = vec![
            Letter::named('x', None),
            Letter::y(1, -5),
            Letter::b(3).with_prime(true),
            Letter::b(7),
            Letter::y(1, 2),
            Letter::b(-1),
        ];
        letters.sort();
        let shown: Vec<String> = letters.iter().map(|l| l.to_string()).collect();
        assert_eq!(shown, ["b[-1]", "b[7]", "y[1,-5]", "y[1,2]", "x", "b[3]'"]);
    }

    #[test]
    fn rotation_of_cyclically_reduced_word() {
        let x = w("a b c");
        assert_eq!(x.rotate(1), w("b c a"));
        assert_eq!(x.rotate(3), x);
    }
}
