//! Slow reference implementations used to cross-check the fast paths.
//!
//! None of these call into [`crate::limits`] or the rotation-based
//! conjugacy test.

use crate::context::GroupContext;
use crate::words::{reduce, Generator, Letter, Syllable, Verdict, Word};

use super::enumerate_words;

/// Rewrite `w` into `B(anchor)` one replacement round at a time: each
/// `b[j]` above the window becomes `b[j-k] u_{j-k}`, each one below becomes
/// `b[j+k] u_j⁻¹`, then the word is reduced, until every b-letter sits in
/// the window.
pub fn stepwise_mixed_form(ctx: &GroupContext, w: &Word, anchor: i64) -> Word {
    let k = ctx.k();
    let u = ctx.u().syllables().to_vec();
    let shifted_u = |i: i64, inverse: bool| -> Vec<Syllable> {
        let mut out: Vec<Syllable> = u
            .iter()
            .map(|s| Syllable {
                letter: s.letter.with_index(i).expect("u is indexed"),
                sign: s.sign,
            })
            .collect();
        if inverse {
            out.reverse();
            for s in &mut out {
                *s = s.inverse();
            }
        }
        out
    };
    let mut cur = w.clone();
    loop {
        let out_of_window = |s: &Syllable| matches!(s.letter.gen, Generator::B(j) if j < anchor || j >= anchor + k);
        if !cur.syllables().iter().any(out_of_window) {
            return cur;
        }
        let mut raw = Vec::new();
        for s in cur.syllables() {
            let j = match s.letter.gen {
                Generator::B(j) if j < anchor || j >= anchor + k => j,
                _ => {
                    raw.push(*s);
                    continue;
                }
            };
            let mut image = if j >= anchor + k {
                let mut v = vec![Syllable::pos(ctx.b(j - k))];
                v.extend(shifted_u(j - k, false));
                v
            } else {
                let mut v = vec![Syllable::pos(ctx.b(j + k))];
                v.extend(shifted_u(j, true));
                v
            };
            if s.sign == crate::words::Sign::Neg {
                image.reverse();
                for x in &mut image {
                    *x = x.inverse();
                }
            }
            raw.extend(image);
        }
        cur = reduce(raw);
    }
}

fn y_indices(w: &Word) -> impl Iterator<Item = i64> + '_ {
    w.syllables().iter().filter_map(|s| match s.letter.gen {
        Generator::Y(_, l) => Some(l),
        _ => None,
    })
}

/// `w ∈ G_{i,∞}`, decided in the free basis `B⁺(i) ∪ {y[m,l] : l < i}`.
pub fn in_upper_subgroup(ctx: &GroupContext, w: &Word, i: i64) -> bool {
    y_indices(&stepwise_mixed_form(ctx, w, i)).all(|l| l >= i)
}

/// `w ∈ G_{-∞,i}`, decided in the free basis `B⁻(i) ∪ {y[m,l] : l > i}`.
pub fn in_lower_subgroup(ctx: &GroupContext, w: &Word, i: i64) -> bool {
    y_indices(&stepwise_mixed_form(ctx, w, i - ctx.k() + 1)).all(|l| l <= i)
}

/// Checks that `alpha` is the largest `i` with `w ∈ G_{i,∞}`, scanning
/// `[min_index - k, alpha + 1]`. Returns the first index that disagrees.
pub fn confirm_alpha(ctx: &GroupContext, w: &Word, alpha: i64) -> Result<(), i64> {
    let lo = w.min_index().unwrap_or(alpha) - ctx.k();
    for i in lo.min(alpha)..=alpha + 1 {
        if in_upper_subgroup(ctx, w, i) != (i <= alpha) {
            return Err(i);
        }
    }
    Ok(())
}

/// Mirror of [`confirm_alpha`] over `[omega - 1, max_index + k]`.
pub fn confirm_omega(ctx: &GroupContext, w: &Word, omega: i64) -> Result<(), i64> {
    let hi = w.max_index().unwrap_or(omega) + ctx.k();
    for i in omega - 1..=hi.max(omega) {
        if in_lower_subgroup(ctx, w, i) != (i >= omega) {
            return Err(i);
        }
    }
    Ok(())
}

/// Conjugacy by exhaustive search over conjugators of length `<= max_len`
/// in `alphabet`.
pub fn brute_force_conjugacy(u: &Word, v: &Word, alphabet: &[Letter], max_len: usize) -> Verdict {
    let u_inv = u.inverse();
    let mut direct = false;
    let mut inverse = false;
    for g in enumerate_words(alphabet, max_len) {
        direct |= u.conjugate_by(&g) == *v;
        inverse |= u_inv.conjugate_by(&g) == *v;
        if direct && inverse {
            break;
        }
    }
    match (direct, inverse) {
        (true, true) => Verdict::Both,
        (true, false) => Verdict::Conjugate,
        (false, true) => Verdict::InverseConjugate,
        (false, false) => Verdict::Neither,
    }
}

/// All cyclic rotations of `w` after peeling mutually inverse ends one
/// pair at a time.
pub fn peeled_rotations(w: &Word) -> (Word, Vec<Word>) {
    let mut s = w.syllables().to_vec();
    while s.len() > 1 && s[0].is_inverse_of(&s[s.len() - 1]) {
        s.remove(0);
        s.pop();
    }
    let n = s.len();
    let rotations = (0..n.max(1))
        .map(|i| {
            let mut r = s[i.min(n)..].to_vec();
            r.extend_from_slice(&s[..i.min(n)]);
            reduce(r)
        })
        .collect();
    (reduce(s), rotations)
}
