//! Parameters of the amalgamated-product decompositions of
//! `N / ⟨⟨r̃_i, …, r̃_j⟩⟩`. Only the integer parameters and the identified
//! generator pairs are produced; no quotient is computed.

use serde::Serialize;

use super::{default_margin, is_suitable_in_window, limits_report, verification_window};
use crate::context::GroupContext;
use crate::error::{Error, Result};
use crate::words::Word;

/// One amalgamation identification `w_{w_index} = b[b_index]`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Identification {
    pub w_index: i64,
    pub w: Word,
    pub b_index: i64,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct AmalgamReport {
    pub i: i64,
    pub j: i64,
    /// `α` of `r̃_j`.
    pub s: i64,
    /// `ω` of `r̃_j`, minus one.
    pub t: i64,
    /// `w_{t-k+1+d} = b[t+1+d]` for `0 <= d < k`.
    pub identifications: Vec<Identification>,
    /// `α` of `r̃_i`, plus one.
    pub mirrored_s: i64,
    /// `ω` of `r̃_i`.
    pub mirrored_t: i64,
    /// `w_{s'-k+d} = b[s'+d]` for `0 <= d < k`.
    pub mirrored_identifications: Vec<Identification>,
}

fn identifications(ctx: &GroupContext, first_w: i64, first_b: i64) -> Vec<Identification> {
    (0..ctx.k())
        .map(|d| Identification {
            w_index: first_w + d,
            w: ctx.w_at(first_w + d),
            b_index: first_b + d,
        })
        .collect()
}

/// Bookkeeping for a suitable `r̃` with positive α-ω-length and `i <= j`.
pub fn amalgam_report(ctx: &GroupContext, r: &Word, i: i64, j: i64) -> Result<AmalgamReport> {
    if i > j {
        return Err(Error::Precondition(format!("need i <= j, got i = {i}, j = {j}")));
    }
    let base = limits_report(ctx, r)?;
    if base.aw_length < 1 {
        return Err(Error::Precondition(format!(
            "alpha-omega length must be at least 1, got {}",
            base.aw_length
        )));
    }
    let (lo, hi) = verification_window(ctx, &[r], default_margin(ctx))?;
    if !is_suitable_in_window(ctx, r, lo, hi)? {
        return Err(Error::Precondition(format!("{r} is not a suitable element")));
    }
    let k = ctx.k();
    let right = limits_report(ctx, &r.shift(j)?)?;
    let left = limits_report(ctx, &r.shift(i)?)?;
    let s = right.alpha;
    let t = right.omega - 1;
    let ms = left.alpha + 1;
    let mt = left.omega;
    Ok(AmalgamReport {
        i,
        j,
        s,
        t,
        identifications: identifications(ctx, t - k + 1, t + 1),
        mirrored_s: ms,
        mirrored_t: mt,
        mirrored_identifications: identifications(ctx, ms - k, ms),
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn example() -> (GroupContext, Word) {
        let c = GroupContext::parse(4, 2, "y1 y2").unwrap();
        let r = "b[4] y[2,1] y[1,3] b[0] y[1,0] y[2,0]".parse().unwrap();
        (c, r)
    }

    #[test]
    fn worked_example() {
        let (c, r) = example();
        let rep = amalgam_report(&c, &r, -1, 2).unwrap();
        assert_eq!((rep.s, rep.t), (3, 4));
        let pairs: Vec<(i64, i64)> = rep
            .identifications
            .iter()
            .map(|p| (p.w_index, p.b_index))
            .collect();
        assert_eq!(pairs, [(1, 5), (2, 6), (3, 7), (4, 8)]);
        assert_eq!(rep.identifications[0].w, c.w_at(1));
        assert_eq!((rep.mirrored_s, rep.mirrored_t), (1, 2));
    }

    #[test]
    fn same_index() {
        let (c, r) = example();
        let rep = amalgam_report(&c, &r, 0, 0).unwrap();
        assert_eq!((rep.s, rep.t), (1, 2));
    }

    #[test]
    fn shift_equivariance() {
        let (c, r) = example();
        for (i, j) in [(-1, 2), (0, 0), (-3, 1)] {
            let a = amalgam_report(&c, &r, i, j).unwrap();
            let b = amalgam_report(&c, &r, i + 1, j + 1).unwrap();
            assert_eq!((b.s, b.t), (a.s + 1, a.t + 1));
            assert_eq!((b.mirrored_s, b.mirrored_t), (a.mirrored_s + 1, a.mirrored_t + 1));
        }
    }

    #[test]
    fn preconditions() {
        let (c, r) = example();
        assert!(matches!(amalgam_report(&c, &r, 2, 1), Err(Error::Precondition(_))));
        let c1 = GroupContext::parse(4, 1, "y1").unwrap();
        let neg = "b[5] b[6]^-1".parse().unwrap();
        assert!(matches!(amalgam_report(&c1, &neg, 0, 0), Err(Error::Precondition(_))));
        // Not cyclically reduced in B(0).
        let bad = "y[1,0] b[1] y[1,0]^-1".parse().unwrap();
        assert!(matches!(amalgam_report(&c1, &bad, 0, 0), Err(Error::Precondition(_))));
    }
}
