use crate::context::GroupContext;
use crate::error::{Error, Result};
use crate::words::{Generator, Sign, Syllable, Word};

/// Rewrite `w` over the dual (primed) alphabet.
///
/// The dual letters are `b'[i] = b[-i] u_{-i}` and `y'[m,i] = y[m,-i]⁻¹`, so
/// `b[i] = b'[-i] u'_{-i}` and `y[m,i] = y'[m,-i]⁻¹`. For the primed
/// relations `b'[i] u'_i = b'[i+k]` to hold, the dual defining word `u'` is
/// `u` read backwards over primed letters with exponents unchanged. The
/// returned context carries that `u'`, so the limit algorithms run on dual
/// words unchanged.
pub fn dualize(ctx: &GroupContext, w: &Word) -> Result<(GroupContext, Word)> {
    if ctx.is_primed() {
        return Err(Error::Precondition("context is already dual".into()));
    }
    ctx.check_kernel_word(w)?;
    let u_dual: Word = ctx
        .u()
        .syllables()
        .iter()
        .rev()
        .map(|s| Syllable {
            letter: s.letter.with_prime(true),
            sign: s.sign,
        })
        .collect();
    let dual = GroupContext::build(ctx.k(), ctx.n(), u_dual, true)?;
    let image = w.substitute(|l| match l.gen {
        Generator::B(i) => Ok(Word::letter(dual.b(-i)).mul(&dual.u_at(-i))),
        Generator::Y(m, i) => Ok(Word::from_iter([Syllable {
            letter: dual.y(m, -i),
            sign: Sign::Neg,
        }])),
        Generator::Named(..) => Err(Error::NotIndexed(l.to_string())),
    })?;
    Ok((dual, image))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::limits::{limits_report, to_basis, BasisSpec};

    fn w(s: &str) -> Word {
        s.parse().unwrap()
    }

    #[test]
    fn letter_substitutions() {
        let c = GroupContext::parse(3, 1, "y1").unwrap();
        let (d, y) = dualize(&c, &w("y[1,3]")).unwrap();
        assert_eq!(y, w("y[1,-3]'^-1"));
        assert_eq!(d.u(), &w("y[1,0]'"));
        let (_, b) = dualize(&c, &w("b[0]")).unwrap();
        assert_eq!(b, w("b[0]' y[1,0]'"));
    }

    #[test]
    fn dual_word_reverses_u() {
        let c = GroupContext::parse(4, 2, "y1 y2^-1").unwrap();
        let (d, _) = dualize(&c, &w("b[0]")).unwrap();
        assert_eq!(d.u(), &w("y[2,0]'^-1 y[1,0]'"));
    }

    #[test]
    fn relations_keep_their_form() {
        for (k, n, u) in [(3, 1, "y1"), (4, 2, "y1 y2"), (2, 2, "y1 y2^-1 y1^2")] {
            let c = GroupContext::parse(k, n, u).unwrap();
            for i in -4..4 {
                let rel = c.w_at(i).mul(&Word::letter(c.b(i + k)).inverse());
                let (d, img) = dualize(&c, &rel).unwrap();
                assert!(to_basis(&d, &img, BasisSpec::mixed(0)).unwrap().is_empty());
            }
        }
    }

    #[test]
    fn limits_swap_under_duality() {
        let c = GroupContext::parse(4, 1, "y1").unwrap();
        let r = w("b[5] b[6]^-1");
        let (d, r_dual) = dualize(&c, &r).unwrap();
        let orig = limits_report(&c, &r).unwrap();
        let dual = limits_report(&d, &r_dual).unwrap();
        assert_eq!(dual.alpha, -orig.omega);
        assert_eq!(dual.omega, -orig.alpha);
        assert_eq!(dual.aw_length, orig.aw_length);
    }

    #[test]
    fn rejects_primed_input() {
        let c = GroupContext::parse(3, 1, "y1").unwrap();
        assert!(dualize(&c, &w("b[0]'")).is_err());
        let (d, _) = dualize(&c, &w("b[0]")).unwrap();
        assert!(dualize(&d, &w("b[0]'")).is_err());
    }
}
