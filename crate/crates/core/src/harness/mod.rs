//! Random generators, brute-force oracles and the property suites.
//!
//! Every random draw comes from a ChaCha stream keyed by
//! `(seed, stream, trial)`: the seed selects the key, the stream index the
//! ChaCha stream, and each trial owns a disjoint block of the keystream.
//! Trials are therefore independent and reproducible in any order.

pub mod oracle;
mod suites;

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::context::GroupContext;
use crate::error::{Error, Result};
use crate::words::{are_conjugate, ConjugacyWitness, Letter, Sign, Syllable, Verdict, Word};

pub use suites::{run_lemma_suites, CheckResult, SuiteReport};

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct TrialConfig {
    pub seed: u64,
    pub trials: usize,
    pub max_word_length: usize,
    /// Inclusive range of second indices for random kernel letters.
    pub index_range: (i64, i64),
    /// Number of conjugate factors `m` in closure samples.
    pub closure_factors: usize,
    /// Maximum conjugator length `L`.
    pub conjugator_length: usize,
}

impl Default for TrialConfig {
    fn default() -> Self {
        TrialConfig {
            seed: 0,
            trials: 1000,
            max_word_length: 12,
            index_range: (-6, 6),
            closure_factors: 3,
            conjugator_length: 3,
        }
    }
}

impl TrialConfig {
    pub fn with_seed(seed: u64, trials: usize) -> Self {
        TrialConfig {
            seed,
            trials,
            ..Default::default()
        }
    }

    pub fn validate(&self) -> Result<()> {
        if self.trials < 1 {
            return Err(Error::Precondition("trials must be at least 1".into()));
        }
        if self.max_word_length < 1 {
            return Err(Error::Precondition("max_word_length must be at least 1".into()));
        }
        if self.index_range.0 > self.index_range.1 {
            return Err(Error::Precondition("index_range is empty".into()));
        }
        Ok(())
    }
}

/// RNG for trial `trial` of stream `stream`.
pub fn trial_rng(seed: u64, stream: u64, trial: u64) -> ChaCha8Rng {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(stream);
    rng.set_word_pos(u128::from(trial) << 40);
    rng
}

/// A uniformly drawn signed letter that does not cancel `prev`.
fn next_syllable<R: Rng>(rng: &mut R, alphabet: &[Letter], prev: Option<Syllable>) -> Syllable {
    loop {
        let letter = *alphabet.choose(rng).expect("nonempty alphabet");
        let sign = if rng.gen::<bool>() { Sign::Pos } else { Sign::Neg };
        let s = Syllable { letter, sign };
        if prev.is_none_or(|p| !p.is_inverse_of(&s)) {
            return s;
        }
    }
}

/// Reduced word of length exactly `len` over `alphabet`, drawn without
/// cancelling successors.
pub fn random_reduced_word<R: Rng>(rng: &mut R, alphabet: &[Letter], len: usize) -> Word {
    let mut out: Vec<Syllable> = Vec::with_capacity(len);
    for _ in 0..len {
        let s = next_syllable(rng, alphabet, out.last().copied());
        out.push(s);
    }
    out.into_iter().collect()
}

/// Kernel letters `b[i]`, `y[m,i]` of `ctx` with `i` in the configured range.
pub fn kernel_alphabet(ctx: &GroupContext, cfg: &TrialConfig) -> Vec<Letter> {
    let (lo, hi) = cfg.index_range;
    let mut out = Vec::new();
    for i in lo..=hi {
        out.push(ctx.b(i));
        for m in 1..=ctx.n() {
            out.push(ctx.y(m, i));
        }
    }
    out
}

pub(crate) fn kernel_word_with<R: Rng>(rng: &mut R, ctx: &GroupContext, cfg: &TrialConfig) -> Word {
    let alphabet = kernel_alphabet(ctx, cfg);
    let len = rng.gen_range(1..=cfg.max_word_length);
    random_reduced_word(rng, &alphabet, len)
}

/// Nonempty reduced kernel word, deterministic in `(cfg.seed, stream)`.
pub fn random_kernel_word(ctx: &GroupContext, cfg: &TrialConfig, stream: u64) -> Word {
    kernel_word_with(&mut trial_rng(cfg.seed, stream, 0), ctx, cfg)
}

/// One factor `g⁻¹ r^ε g` of a normal-closure product.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ClosureFactor {
    pub conjugator: Word,
    pub sign: i8,
}

impl ClosureFactor {
    pub fn eval(&self, r: &Word) -> Word {
        r.pow(i64::from(self.sign)).conjugate_by(&self.conjugator)
    }
}

/// Reduced product of the given factors.
pub fn closure_product(r: &Word, factors: &[ClosureFactor]) -> Word {
    factors
        .iter()
        .fold(Word::identity(), |acc, f| acc.mul(&f.eval(r)))
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ClosureSample {
    pub word: Word,
    pub factors: Vec<ClosureFactor>,
}

impl ClosureSample {
    pub fn max_conjugator_length(&self) -> usize {
        self.factors.iter().map(|f| f.conjugator.len()).max().unwrap_or(0)
    }
}

pub(crate) fn closure_sample_with<R: Rng>(
    rng: &mut R,
    r: &Word,
    factors: usize,
    conj_len: usize,
) -> Result<ClosureSample> {
    if r.is_empty() {
        return Err(Error::TrivialWord);
    }
    let alphabet: Vec<Letter> = r.alphabet().into_iter().collect();
    let m = rng.gen_range(1..=factors.max(1));
    let factors: Vec<ClosureFactor> = (0..m)
        .map(|_| {
            let len = rng.gen_range(0..=conj_len);
            ClosureFactor {
                conjugator: random_reduced_word(rng, &alphabet, len),
                sign: if rng.gen::<bool>() { 1 } else { -1 },
            }
        })
        .collect();
    Ok(ClosureSample {
        word: closure_product(r, &factors),
        factors,
    })
}

/// Random element of the normal closure of `r`: a product of between 1 and
/// `cfg.closure_factors` conjugates `g⁻¹ r^{±1} g`, with conjugators of
/// length at most `cfg.conjugator_length` over the letters of `r`.
pub fn sample_closure_element(r: &Word, cfg: &TrialConfig, stream: u64) -> Result<ClosureSample> {
    let mut rng = trial_rng(cfg.seed, stream, 0);
    closure_sample_with(&mut rng, r, cfg.closure_factors, cfg.conjugator_length)
}

/// Default candidate cap for [`bounded_membership`].
pub const MEMBERSHIP_CAP: u64 = 10_000_000;

/// All reduced words of length `<= max_len` over `alphabet`, shortest first.
pub fn enumerate_words(alphabet: &[Letter], max_len: usize) -> Vec<Word> {
    let signed: Vec<Syllable> = alphabet
        .iter()
        .flat_map(|&l| [Syllable::pos(l), Syllable::neg(l)])
        .collect();
    let mut out = vec![Word::identity()];
    let mut frontier = vec![Vec::<Syllable>::new()];
    for _ in 0..max_len {
        let mut next = Vec::new();
        for w in &frontier {
            for &s in &signed {
                if w.last().is_some_and(|p| p.is_inverse_of(&s)) {
                    continue;
                }
                let mut v = w.clone();
                v.push(s);
                next.push(v);
            }
        }
        out.extend(next.iter().map(|v| v.iter().copied().collect::<Word>()));
        frontier = next;
    }
    out
}

/// Search for `w` as a product of at most `m` conjugates of `r^{±1}`.
///
/// The first `t - 1` factors run over all conjugators of length `<= L` in
/// the letters of `w` and `r`; the last factor is decided by the free-group
/// conjugacy test, so every product in the bounded family is found. `None`
/// means nothing was found, not that `w` lies outside the closure.
pub fn bounded_membership(w: &Word, r: &Word, m: usize, conj_len: usize) -> Result<Option<Vec<ClosureFactor>>> {
    let mut alphabet = w.alphabet();
    alphabet.extend(r.alphabet());
    let alphabet: Vec<Letter> = alphabet.into_iter().collect();
    bounded_membership_over(w, r, m, conj_len, &alphabet, MEMBERSHIP_CAP)
}

pub fn bounded_membership_over(
    w: &Word,
    r: &Word,
    m: usize,
    conj_len: usize,
    alphabet: &[Letter],
    cap: u64,
) -> Result<Option<Vec<ClosureFactor>>> {
    if w.is_empty() {
        return Ok(Some(Vec::new()));
    }
    if r.is_empty() || m == 0 {
        return Ok(None);
    }
    let conjugators = enumerate_words(alphabet, conj_len);
    let per_factor = 2 * conjugators.len() as u64;
    let total: u64 = (0..m as u32)
        .map(|t| per_factor.saturating_pow(t))
        .fold(0u64, |a, b| a.saturating_add(b));
    if total > cap {
        return Err(Error::SearchCapExceeded { cap });
    }
    let mut prefix = Vec::new();
    for t in 1..=m {
        if let Some(found) = search_factors(w, r, t, &conjugators, &mut prefix, &Word::identity()) {
            return Ok(Some(found));
        }
    }
    Ok(None)
}

fn search_factors(
    w: &Word,
    r: &Word,
    remaining: usize,
    conjugators: &[Word],
    prefix: &mut Vec<ClosureFactor>,
    product: &Word,
) -> Option<Vec<ClosureFactor>> {
    if remaining == 1 {
        let rest = product.inverse().mul(w);
        let c = are_conjugate(r, &rest);
        let sign = match c.verdict {
            Verdict::Conjugate | Verdict::Both => 1,
            Verdict::InverseConjugate => -1,
            Verdict::Neither => return None,
        };
        let mut out = prefix.clone();
        out.push(ClosureFactor {
            conjugator: c.conjugator.expect("conjugate verdict carries a witness"),
            sign,
        });
        return Some(out);
    }
    for g in conjugators {
        for sign in [1i8, -1] {
            let f = ClosureFactor {
                conjugator: g.clone(),
                sign,
            };
            let next = product.mul(&f.eval(r));
            prefix.push(f);
            if let Some(found) = search_factors(w, r, remaining - 1, conjugators, prefix, &next) {
                return Some(found);
            }
            prefix.pop();
        }
    }
    None
}

/// Whether `v` is conjugate to `u`, to `u⁻¹`, to both, or to neither.
pub fn magnus_verdict(u: &Word, v: &Word) -> ConjugacyWitness {
    let direct = are_conjugate(u, v);
    let inverse = are_conjugate(u, &v.inverse());
    let d = matches!(direct.verdict, Verdict::Conjugate | Verdict::Both);
    let i = matches!(inverse.verdict, Verdict::Conjugate | Verdict::Both);
    match (d, i) {
        (true, true) => ConjugacyWitness {
            verdict: Verdict::Both,
            conjugator: direct.conjugator,
        },
        (true, false) => ConjugacyWitness {
            verdict: Verdict::Conjugate,
            conjugator: direct.conjugator,
        },
        // g⁻¹ u g = v⁻¹ is the same as g⁻¹ u⁻¹ g = v.
        (false, true) => ConjugacyWitness {
            verdict: Verdict::InverseConjugate,
            conjugator: inverse.conjugator,
        },
        (false, false) => ConjugacyWitness {
            verdict: Verdict::Neither,
            conjugator: None,
        },
    }
}

/// Bounded search for a word over `x, y, z` whose genus-3 image is freely
/// conjugate to `target`. Shortest candidates are tried first.
pub fn phi3_preimage_search(target: &Word, max_len: usize) -> Option<Word> {
    let alphabet = [
        Letter::named('x', None),
        Letter::named('y', None),
        Letter::named('z', None),
    ];
    enumerate_words(&alphabet, max_len).into_iter().find(|w| {
        let img = crate::hgroup::phi3(w).expect("alphabet is x, y, z");
        matches!(are_conjugate(&img, target).verdict, Verdict::Conjugate | Verdict::Both)
    })
}
