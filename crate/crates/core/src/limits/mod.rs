//! Basis rewriting in the free group `N` and the α-/ω-limit algorithms.
//!
//! For every anchor `i` the kernel `N` is free on
//! `B(i) = {b[i], …, b[i+k-1]} ∪ {y[m,l] : all l}`. The subgroup
//! `G_{i,∞}` generated by letters of index `>= i` is free on the b-left basis
//! `B⁺(i)`, which keeps the same b-window and only the y-letters of index
//! `>= i`; `G_{-∞,i}` is free on the b-right basis `B⁻(i)` with b-window
//! `[i-k+1, i]` and y-letters of index `<= i`. Since these are subsets of
//! `B(i)` and `B(i-k+1)`, a word is rewritten into `B±` by rewriting it into
//! the corresponding mixed basis and checking the y-indices.

mod amalgam;
mod dual;
mod suitable;

use std::fmt;

use serde::Serialize;

use crate::context::GroupContext;
use crate::error::{Error, Result};
use crate::words::{Generator, Word};

pub use amalgam::{amalgam_report, AmalgamReport, Identification};
pub use dual::dualize;
pub use suitable::{
    default_margin, is_suitable_in_window, starts_with_positive_b, suitable_conjugate,
    verification_window, SuitableConjugate, SuitablePath,
};

/// Step limit for the rewriting loops. The algorithms terminate, so hitting
/// it means a bug.
pub const ITERATION_GUARD: usize = 1_000_000;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum BasisKind {
    /// b-left basis `B⁺(i)` of `G_{i,∞}`.
    Plus,
    /// b-right basis `B⁻(i)` of `G_{-∞,i}`.
    Minus,
    /// Full basis `B(i)` of `N`.
    Mixed,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct BasisSpec {
    pub kind: BasisKind,
    pub anchor: i64,
}

impl BasisSpec {
    pub const fn plus(i: i64) -> Self {
        BasisSpec {
            kind: BasisKind::Plus,
            anchor: i,
        }
    }

    pub const fn minus(i: i64) -> Self {
        BasisSpec {
            kind: BasisKind::Minus,
            anchor: i,
        }
    }

    pub const fn mixed(i: i64) -> Self {
        BasisSpec {
            kind: BasisKind::Mixed,
            anchor: i,
        }
    }

    /// First index of the b-window.
    pub fn window_start(&self, k: i64) -> i64 {
        match self.kind {
            BasisKind::Plus | BasisKind::Mixed => self.anchor,
            BasisKind::Minus => self.anchor - k + 1,
        }
    }

    fn admits_y_index(&self, l: i64) -> bool {
        match self.kind {
            BasisKind::Plus => l >= self.anchor,
            BasisKind::Minus => l <= self.anchor,
            BasisKind::Mixed => true,
        }
    }

    /// True if `w` is literally a word over the letters of this basis.
    pub fn contains_word(&self, k: i64, w: &Word) -> bool {
        let lo = self.window_start(k);
        w.syllables().iter().all(|s| match s.letter.gen {
            Generator::B(j) => (lo..lo + k).contains(&j),
            Generator::Y(_, l) => self.admits_y_index(l),
            Generator::Named(..) => false,
        })
    }
}

impl fmt::Display for BasisSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let tag = match self.kind {
            BasisKind::Plus => "B+",
            BasisKind::Minus => "B-",
            BasisKind::Mixed => "B",
        };
        write!(f, "{tag}({})", self.anchor)
    }
}

/// Counts replacement steps against [`ITERATION_GUARD`].
struct Guard {
    steps: usize,
    algorithm: &'static str,
}

impl Guard {
    fn new(algorithm: &'static str) -> Self {
        Guard { steps: 0, algorithm }
    }

    fn tick(&mut self, n: usize) -> Result<()> {
        self.steps += n;
        if self.steps > ITERATION_GUARD {
            return Err(Error::IterationGuard {
                algorithm: self.algorithm,
                limit: ITERATION_GUARD,
            });
        }
        Ok(())
    }
}

/// Express `b[j]` over the b-window `[lo, lo+k-1]`:
/// above the window `b[j] = b[j'] u_{j'} u_{j'+k} … u_{j-k}`,
/// below it `b[j] = b[j'] u_{j'-k}⁻¹ … u_{j+k}⁻¹ u_j⁻¹`, with `j' ≡ j (mod k)`.
fn b_into_window(ctx: &GroupContext, j: i64, lo: i64, guard: &mut Guard) -> Result<Word> {
    let k = ctx.k();
    let target = lo + (j - lo).rem_euclid(k);
    let steps = ((j - target) / k).unsigned_abs() as usize;
    guard.tick(steps)?;
    let mut out = Word::letter(ctx.b(target));
    if j > target {
        let mut l = target;
        while l < j {
            out = out.mul(&ctx.u_at(l));
            l += k;
        }
    } else {
        let mut l = target - k;
        while l >= j {
            out = out.mul(&ctx.u_at(l).inverse());
            l -= k;
        }
    }
    Ok(out)
}

/// Rewrite a kernel word into the requested basis.
pub fn to_basis(ctx: &GroupContext, w: &Word, basis: BasisSpec) -> Result<Word> {
    ctx.check_kernel_word(w)?;
    let lo = basis.window_start(ctx.k());
    let mut guard = Guard::new("basis rewriting");
    let out = w.substitute(|l| match l.gen {
        Generator::B(j) => b_into_window(ctx, j, lo, &mut guard),
        _ => Ok(Word::letter(*l)),
    })?;
    if let Some(bad) = out
        .syllables()
        .iter()
        .find(|s| matches!(s.letter.gen, Generator::Y(_, l) if !basis.admits_y_index(l)))
    {
        return Err(Error::NotInBasis {
            basis: basis.to_string(),
            letter: bad.letter.to_string(),
        });
    }
    Ok(out)
}

fn has_y_at(w: &Word, i: i64) -> bool {
    w.syllables()
        .iter()
        .any(|s| matches!(s.letter.gen, Generator::Y(_, l) if l == i))
}

fn prepare(ctx: &GroupContext, w: &Word) -> Result<()> {
    ctx.check_kernel_word(w)?;
    if w.is_empty() {
        return Err(Error::TrivialWord);
    }
    Ok(())
}

/// α-limit and the normal form `r*` of `w` in `B⁺(α)`.
///
/// Starting from the `B⁺(min)` form, every `b[i]` at the bottom index is
/// pushed up to `b[i+k] u_i⁻¹`. The push is kept while no `y[·,i]`
/// survives it; the first push that leaves such a letter is undone and its
/// index is the limit.
pub fn alpha_limit(ctx: &GroupContext, w: &Word) -> Result<(i64, Word)> {
    prepare(ctx, w)?;
    let k = ctx.k();
    let start = w.min_index().expect("nonempty kernel word");
    let mut current = to_basis(ctx, w, BasisSpec::plus(start))?;
    let mut i = current.min_index().ok_or(Error::TrivialWord)?;
    let mut guard = Guard::new("alpha limit");
    loop {
        guard.tick(1)?;
        let bottom = ctx.b(i);
        let lifted = Word::letter(ctx.b(i + k)).mul(&ctx.u_at(i).inverse());
        let next = current.substitute(|l| {
            Ok(if *l == bottom {
                lifted.clone()
            } else {
                Word::letter(*l)
            })
        })?;
        if has_y_at(&next, i) {
            return Ok((i, current));
        }
        i = next.min_index().expect("nontrivial element");
        current = next;
    }
}

/// ω-limit and the normal form `r_*` of `w` in `B⁻(ω)`; the mirror image of
/// [`alpha_limit`] pushing `b[i]` down to `b[i-k] u_{i-k}`.
pub fn omega_limit(ctx: &GroupContext, w: &Word) -> Result<(i64, Word)> {
    prepare(ctx, w)?;
    let k = ctx.k();
    let start = w.max_index().expect("nonempty kernel word");
    let mut current = to_basis(ctx, w, BasisSpec::minus(start))?;
    let mut i = current.max_index().ok_or(Error::TrivialWord)?;
    let mut guard = Guard::new("omega limit");
    loop {
        guard.tick(1)?;
        let top = ctx.b(i);
        let lowered = Word::letter(ctx.b(i - k)).mul(&ctx.u_at(i - k));
        let next = current.substitute(|l| {
            Ok(if *l == top {
                lowered.clone()
            } else {
                Word::letter(*l)
            })
        })?;
        if has_y_at(&next, i) {
            return Ok((i, current));
        }
        i = next.max_index().expect("nontrivial element");
        current = next;
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct LimitsReport {
    pub alpha: i64,
    pub omega: i64,
    pub aw_length: i64,
    pub alpha_form: Word,
    pub omega_form: Word,
}

pub fn limits_report(ctx: &GroupContext, w: &Word) -> Result<LimitsReport> {
    let (alpha, alpha_form) = alpha_limit(ctx, w)?;
    let (omega, omega_form) = omega_limit(ctx, w)?;
    Ok(LimitsReport {
        alpha,
        omega,
        aw_length: omega - alpha + 1,
        alpha_form,
        omega_form,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn w(s: &str) -> Word {
        s.parse().unwrap()
    }

    fn ctx(k: i64, n: u32, u: &str) -> GroupContext {
        GroupContext::parse(k, n, u).unwrap()
    }

    #[test]
    fn rewrite_below_window() {
        let c = ctx(3, 1, "y1");
        let r = to_basis(&c, &w("b[-2] y[1,-2]"), BasisSpec::plus(0)).unwrap();
        assert_eq!(r, w("b[1]"));
    }

    #[test]
    fn rewrite_above_window() {
        let c = ctx(4, 1, "y1");
        let r = to_basis(&c, &w("b[5] b[6]^-1"), BasisSpec::minus(2)).unwrap();
        assert_eq!(r, w("b[1] y[1,1] y[1,2]^-1 b[2]^-1"));
    }

    #[test]
    fn rewrite_fixpoint_and_rejection() {
        let c = ctx(3, 2, "y1 y2^-1");
        let x = w("b[0] y[2,4] b[2]^-1 y[1,0]");
        assert_eq!(to_basis(&c, &x, BasisSpec::plus(0)).unwrap(), x);
        assert_eq!(to_basis(&c, &x, BasisSpec::mixed(0)).unwrap(), x);
        let e = to_basis(&c, &w("y[1,-1]"), BasisSpec::plus(0)).unwrap_err();
        assert!(matches!(e, Error::NotInBasis { .. }));
        let e = to_basis(&c, &w("y[1,3]"), BasisSpec::minus(2)).unwrap_err();
        assert!(matches!(e, Error::NotInBasis { .. }));
    }

    #[test]
    fn limits_k3_five_letters() {
        let c = ctx(3, 1, "y1");
        let r = w("b[-2] y[1,-2] y[1,0] b[4] y[1,1]^-1");
        let rep = limits_report(&c, &r).unwrap();
        assert_eq!((rep.alpha, rep.omega, rep.aw_length), (0, 0, 1));
        assert_eq!(rep.alpha_form, w("b[1] y[1,0] b[1]"));
        assert_eq!(rep.omega_form, w("b[-2] y[1,-2] y[1,0] b[-2] y[1,-2]"));
    }

    #[test]
    fn limits_k4_negative_length() {
        let c = ctx(4, 1, "y1");
        let rep = limits_report(&c, &w("b[5] b[6]^-1")).unwrap();
        assert_eq!((rep.alpha, rep.omega, rep.aw_length), (5, 2, -2));
        assert_eq!(rep.alpha_form, w("b[5] b[6]^-1"));
        assert_eq!(rep.omega_form, w("b[1] y[1,1] y[1,2]^-1 b[2]^-1"));
    }

    #[test]
    fn limits_k4_two_generators() {
        let c = ctx(4, 2, "y1 y2");
        let r = w("b[4] y[2,1] y[1,3] b[0] y[1,0] y[2,0]");
        let rep = limits_report(&c, &r).unwrap();
        assert_eq!((rep.alpha, rep.omega, rep.aw_length), (1, 3, 3));
    }

    #[test]
    fn single_letter() {
        let c = ctx(3, 1, "y1");
        let rep = limits_report(&c, &w("y[1,7]")).unwrap();
        assert_eq!((rep.alpha, rep.omega, rep.aw_length), (7, 7, 1));

        // b[4] = b[1] y[1,1] lies in G_{-inf,1} but not in G_{-inf,0}.
        let rep = limits_report(&c, &w("b[4]^-1")).unwrap();
        assert_eq!((rep.alpha, rep.omega, rep.aw_length), (4, 1, -2));
        assert_eq!(rep.omega_form, w("y[1,1]^-1 b[1]^-1"));
    }

    #[test]
    fn rejects_trivial_and_foreign_words() {
        let c = ctx(4, 1, "y1");
        assert_eq!(alpha_limit(&c, &Word::identity()), Err(Error::TrivialWord));
        assert!(omega_limit(&c, &w("b[1]'")).is_err());
        assert!(alpha_limit(&c, &w("b[1] b[2]'")).is_err());
        assert!(alpha_limit(&c, &w("x")).is_err());
    }

    #[test]
    fn relator_vanishes() {
        let c = ctx(4, 2, "y1 y2");
        for i in -5..5 {
            let rel = c.w_at(i).mul(&Word::letter(c.b(i + c.k())).inverse());
            assert!(to_basis(&c, &rel, BasisSpec::mixed(i + 1)).unwrap().is_empty());
            assert_eq!(
                to_basis(&c, &c.w_at(i), BasisSpec::mixed(i + 1)).unwrap(),
                Word::letter(c.b(i + c.k()))
            );
        }
    }
}
