//! Suitable conjugates: conjugates whose `B(i)` form is cyclically reduced
//! for every anchor `i`.
//!
//! The property quantifies over all of ℤ. It is checked on a finite window
//! of anchors around the α/ω support of the word, widened by a margin
//! (default `2k + 4`) on each side.

use serde::Serialize;

use super::{limits_report, to_basis, BasisSpec};
use crate::context::GroupContext;
use crate::error::{Error, Result};
use crate::words::{Sign, Word};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum SuitablePath {
    /// The cyclically reduced `B(0)` form has no b-letters.
    OnlyY,
    /// A rotation starting with a positive b-letter or ending with a
    /// negative one (exclusively) passed the window check.
    Rotation,
    /// No such rotation passed; an exhaustive rotation search did.
    Fallback,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SuitableConjugate {
    /// The conjugate, written in `B(0)`.
    pub word: Word,
    pub path: SuitablePath,
    /// Anchors `[lo, hi]` on which the property was verified.
    pub window: (i64, i64),
}

pub fn default_margin(ctx: &GroupContext) -> i64 {
    2 * ctx.k() + 4
}

/// Anchor window `[min α − margin, max ω + margin]` over the given words.
pub fn verification_window(ctx: &GroupContext, words: &[&Word], margin: i64) -> Result<(i64, i64)> {
    let mut lo = i64::MAX;
    let mut hi = i64::MIN;
    for w in words {
        let rep = limits_report(ctx, w)?;
        lo = lo.min(rep.alpha);
        hi = hi.max(rep.omega);
    }
    Ok((lo - margin, hi + margin))
}

/// True if the `B(i)` form of `w` is cyclically reduced for every `i` in
/// `[lo, hi]`.
pub fn is_suitable_in_window(ctx: &GroupContext, w: &Word, lo: i64, hi: i64) -> Result<bool> {
    for i in lo..=hi {
        if !to_basis(ctx, w, BasisSpec::mixed(i))?.is_cyclically_reduced() {
            return Ok(false);
        }
    }
    Ok(true)
}

pub fn starts_with_positive_b(w: &Word) -> bool {
    w.first()
        .is_some_and(|s| s.letter.is_b() && s.sign == Sign::Pos)
}

fn ends_with_negative_b(w: &Word) -> bool {
    w.last()
        .is_some_and(|s| s.letter.is_b() && s.sign == Sign::Neg)
}

/// Find a suitable conjugate of `w`.
///
/// The `B(0)` form is cyclically reduced first. Rotations are scanned by
/// starting position; the first one that starts with a positive b-letter or
/// ends with a negative b-letter, but not both, is taken if it passes the
/// window check. Otherwise every rotation is tried against the window check
/// directly.
pub fn suitable_conjugate(ctx: &GroupContext, w: &Word, margin: Option<i64>) -> Result<SuitableConjugate> {
    ctx.check_kernel_word(w)?;
    if w.is_empty() {
        return Err(Error::TrivialWord);
    }
    let margin = margin.unwrap_or_else(|| default_margin(ctx));
    let (core, _) = to_basis(ctx, w, BasisSpec::mixed(0))?.cyclic_reduce();

    if !core.syllables().iter().any(|s| s.letter.is_b()) {
        let window = verification_window(ctx, &[w, &core], margin)?;
        return Ok(SuitableConjugate {
            word: core,
            path: SuitablePath::OnlyY,
            window,
        });
    }

    let rotations: Vec<Word> = (0..core.len()).map(|s| core.rotate(s)).collect();
    let literal = rotations
        .iter()
        .find(|r| starts_with_positive_b(r) != ends_with_negative_b(r));
    if let Some(r) = literal {
        let (lo, hi) = verification_window(ctx, &[w, r], margin)?;
        if is_suitable_in_window(ctx, r, lo, hi)? {
            return Ok(SuitableConjugate {
                word: r.clone(),
                path: SuitablePath::Rotation,
                window: (lo, hi),
            });
        }
    }

    let mut widest = (i64::MAX, i64::MIN);
    for r in &rotations {
        let (lo, hi) = verification_window(ctx, &[w, r], margin)?;
        widest = (widest.0.min(lo), widest.1.max(hi));
        if is_suitable_in_window(ctx, r, lo, hi)? {
            return Ok(SuitableConjugate {
                word: r.clone(),
                path: SuitablePath::Fallback,
                window: (lo, hi),
            });
        }
    }
    Err(Error::NoSuitableRotation {
        word: core.to_string(),
        lo: widest.0,
        hi: widest.1,
    })
}
