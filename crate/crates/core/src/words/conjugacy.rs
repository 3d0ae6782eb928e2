use serde::Serialize;

use super::Word;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Verdict {
    Conjugate,
    InverseConjugate,
    Both,
    Neither,
}

impl std::fmt::Display for Verdict {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(match self {
            Verdict::Conjugate => "conjugate",
            Verdict::InverseConjugate => "inverse-conjugate",
            Verdict::Both => "both",
            Verdict::Neither => "neither",
        })
    }
}

/// Outcome of a free-group conjugacy test between `u` and `v`.
///
/// The conjugator `g` satisfies `v = g⁻¹ u g` for [`Verdict::Conjugate`]
/// and [`Verdict::Both`], and `v = g⁻¹ u⁻¹ g` for
/// [`Verdict::InverseConjugate`].
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ConjugacyWitness {
    pub verdict: Verdict,
    pub conjugator: Option<Word>,
}

impl ConjugacyWitness {
    /// Re-check the witness by free reduction.
    pub fn verifies(&self, u: &Word, v: &Word) -> bool {
        match (self.verdict, &self.conjugator) {
            (Verdict::Neither, None) => true,
            (Verdict::Conjugate | Verdict::Both, Some(g)) => u.conjugate_by(g) == *v,
            (Verdict::InverseConjugate, Some(g)) => u.inverse().conjugate_by(g) == *v,
            _ => false,
        }
    }
}

/// Finds `p` with `p⁻¹ a p = b` when `b` is a rotation of the cyclically
/// reduced word `a`.
fn rotation_match(a: &Word, b: &Word) -> Option<Word> {
    if a.len() != b.len() {
        return None;
    }
    let n = a.len();
    let (xs, ys) = (a.syllables(), b.syllables());
    (0..n.max(1))
        .find(|&s| n == 0 || (0..n).all(|t| xs[(s + t) % n] == ys[t]))
        .map(|s| xs[..s].iter().copied().collect())
}

/// Decide whether `v` is conjugate to `u` or to `u⁻¹` in the free group on
/// the ambient alphabet, by matching rotations of cyclic cores.
pub fn are_conjugate(u: &Word, v: &Word) -> ConjugacyWitness {
    let (cu, gu) = u.cyclic_reduce();
    let (cv, gv) = v.cyclic_reduce();
    let assemble = |p: Word| gu.inverse().mul(&p).mul(&gv);
    let direct = rotation_match(&cu, &cv).map(assemble);
    let inverse = rotation_match(&cu.inverse(), &cv).map(assemble);
    match (direct, inverse) {
        (Some(g), Some(_)) => ConjugacyWitness {
            verdict: Verdict::Both,
            conjugator: Some(g),
        },
        (Some(g), None) => ConjugacyWitness {
            verdict: Verdict::Conjugate,
            conjugator: Some(g),
        },
        (None, Some(g)) => ConjugacyWitness {
            verdict: Verdict::InverseConjugate,
            conjugator: Some(g),
        },
        (None, None) => ConjugacyWitness {
            verdict: Verdict::Neither,
            conjugator: None,
        },
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn w(s: &str) -> Word {
        s.parse().unwrap()
    }

    #[test]
    fn explicit_conjugate() {
        let (u, v) = (w("y[1,0]"), w("b[3]^-1 y[1,0] b[3]"));
        let c = are_conjugate(&u, &v);
        assert_eq!(c.verdict, Verdict::Conjugate);
        assert_eq!(c.conjugator, Some(w("b[3]")));
        assert!(c.verifies(&u, &v));
    }

    #[test]
    fn distinct_letters() {
        let c = are_conjugate(&w("y[1,0]"), &w("y[1,1]"));
        assert_eq!(c.verdict, Verdict::Neither);
        assert_eq!(c.conjugator, None);
    }

    #[test]
    fn genus_three_relator_image() {
        let u = w("c a^-1 c a^-1 b^-1 a b c a c^-1");
        let v = w("a^-1 b^-1 a b c c");
        let c = are_conjugate(&u, &v);
        assert_eq!(c.verdict, Verdict::Conjugate);
        assert!(c.verifies(&u, &v));
    }

    #[test]
    fn inverse_and_both() {
        let u = w("a b c");
        let v = w("b^-1 a^-1 c^-1");
        let c = are_conjugate(&u, &v);
        assert_eq!(c.verdict, Verdict::InverseConjugate);
        assert!(c.verifies(&u, &v));

        // In a free group only the identity is conjugate to its inverse.
        let u = w("a b a^-1 b^-1");
        assert_eq!(are_conjugate(&u, &u).verdict, Verdict::Conjugate);
        assert_eq!(are_conjugate(&u.inverse(), &u).verdict, Verdict::InverseConjugate);
    }

    #[test]
    fn identity_pair() {
        let c = are_conjugate(&Word::identity(), &Word::identity());
        assert_eq!(c.verdict, Verdict::Both);
        assert_eq!(c.conjugator, Some(Word::identity()));
    }
}
