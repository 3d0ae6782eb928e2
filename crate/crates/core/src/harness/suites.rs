//! Property suites run by `selftest`.
//!
//! Each check owns one RNG stream and runs `cfg.trials` independent trials.
//! A trial passes, fails with a counterexample, or is skipped when its
//! random input does not meet the check's hypothesis (for example a word
//! that happens to be trivial in `N`).

use std::fmt;
use std::time::Instant;

use rand::Rng;
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use super::oracle::{brute_force_conjugacy, confirm_alpha, confirm_omega};
use super::{
    bounded_membership_over, closure_product, closure_sample_with, kernel_word_with, magnus_verdict,
    random_reduced_word, trial_rng, TrialConfig,
};
use crate::context::GroupContext;
use crate::error::Result;
use crate::hgroup::{lift_to_h, phi3, project_to_kernel, x_exp, y_named, B, X};
use crate::limits::{
    alpha_limit, dualize, is_suitable_in_window, limits_report, starts_with_positive_b,
    suitable_conjugate, to_basis, BasisSpec,
};
use crate::words::{are_conjugate, reduce, Generator, Letter, Sign, Syllable, Verdict, Word};

enum Outcome {
    Pass,
    Skip,
    Fail(String),
}

macro_rules! ensure {
    ($cond:expr, $($fmt:tt)+) => {
        if !$cond {
            return Outcome::Fail(format!($($fmt)+));
        }
    };
}

macro_rules! attempt {
    ($e:expr) => {
        match $e {
            Ok(v) => v,
            Err(err) => return Outcome::Fail(format!("{}: {}", stringify!($e), err)),
        }
    };
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CheckResult {
    pub name: &'static str,
    pub pass: u64,
    pub fail: u64,
    pub skipped: u64,
    pub counterexample: Option<String>,
}

#[derive(Clone, Debug, Serialize)]
pub struct SuiteReport {
    pub context: String,
    pub seed: u64,
    pub trials: usize,
    pub checks: Vec<CheckResult>,
    pub elapsed_ms: u128,
}

impl SuiteReport {
    pub fn failures(&self) -> u64 {
        self.checks.iter().map(|c| c.fail).sum()
    }

    pub fn all_passed(&self) -> bool {
        self.failures() == 0
    }

    pub fn check(&self, name: &str) -> Option<&CheckResult> {
        self.checks.iter().find(|c| c.name == name)
    }
}

impl fmt::Display for SuiteReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "context {}  seed {}  trials {}", self.context, self.seed, self.trials)?;
        writeln!(f, "{:<34} {:>6} {:>6} {:>6}", "check", "pass", "fail", "skip")?;
        for c in &self.checks {
            writeln!(f, "{:<34} {:>6} {:>6} {:>6}", c.name, c.pass, c.fail, c.skipped)?;
            if let Some(ce) = &c.counterexample {
                writeln!(f, "    counterexample: {ce}")?;
            }
        }
        write!(f, "{} failures, {} ms", self.failures(), self.elapsed_ms)
    }
}

type Trial<'a> = Box<dyn Fn(&mut ChaCha8Rng) -> Outcome + 'a>;

/// Run every property check over `cfg.trials` random inputs.
pub fn run_lemma_suites(ctx: &GroupContext, cfg: &TrialConfig) -> Result<SuiteReport> {
    cfg.validate()?;
    let start = Instant::now();
    let checks = build_checks(ctx, cfg);
    let results = checks
        .iter()
        .enumerate()
        .map(|(stream, (name, trial))| {
            let mut res = CheckResult {
                name,
                pass: 0,
                fail: 0,
                skipped: 0,
                counterexample: None,
            };
            for t in 0..cfg.trials {
                let mut rng = trial_rng(cfg.seed, stream as u64, t as u64);
                match trial(&mut rng) {
                    Outcome::Pass => res.pass += 1,
                    Outcome::Skip => res.skipped += 1,
                    Outcome::Fail(msg) => {
                        res.fail += 1;
                        res.counterexample.get_or_insert(msg);
                    }
                }
            }
            res
        })
        .collect();
    Ok(SuiteReport {
        context: format!("k={} n={} u={}", ctx.k(), ctx.n(), ctx.u()),
        seed: cfg.seed,
        trials: cfg.trials,
        checks: results,
        elapsed_ms: start.elapsed().as_millis(),
    })
}

fn raw_word<R: Rng>(rng: &mut R, alphabet: &[Letter], max_len: usize) -> Vec<Syllable> {
    let len = rng.gen_range(0..=max_len);
    (0..len)
        .map(|_| Syllable {
            letter: alphabet[rng.gen_range(0..alphabet.len())],
            sign: if rng.gen() { Sign::Pos } else { Sign::Neg },
        })
        .collect()
}

fn is_freely_reduced(w: &Word) -> bool {
    w.syllables().windows(2).all(|p| !p[0].is_inverse_of(&p[1]))
}

/// Random word over `x, b, y1..yn` with x-exponent sum 0.
fn random_h_word<R: Rng>(rng: &mut R, n: u32, max_len: usize) -> Word {
    let mut alphabet = vec![X, B];
    alphabet.extend((1..=n).map(y_named));
    let len = rng.gen_range(0..=max_len);
    let w = random_reduced_word(rng, &alphabet, len);
    let fix = Word::power(X, -x_exp(&w));
    w.mul(&fix)
}

/// Per-class exponent sums: all `b[i]` together, and all `y[m,·]` per `m`.
fn class_sums(w: &Word) -> std::collections::BTreeMap<(u8, u32), i64> {
    let mut out = std::collections::BTreeMap::new();
    for s in w.syllables() {
        let key = match s.letter.gen {
            Generator::B(_) => (0, 0),
            Generator::Y(m, _) => (1, m),
            Generator::Named(..) => continue,
        };
        *out.entry(key).or_insert(0) += s.sign.value();
    }
    out
}

fn build_checks<'a>(ctx: &'a GroupContext, cfg: &'a TrialConfig) -> Vec<(&'static str, Trial<'a>)> {
    let k = ctx.k();
    let kw = move |rng: &mut ChaCha8Rng| kernel_word_with(rng, ctx, cfg);
    // A kernel word that is nontrivial in N.
    let nontrivial = move |rng: &mut ChaCha8Rng| {
        let w = kw(rng);
        let trivial = to_basis(ctx, &w, BasisSpec::mixed(0)).map(|f| f.is_empty()).unwrap_or(true);
        (!trivial).then_some(w)
    };
    let small_alphabet = [ctx.b(0), ctx.b(1), ctx.y(1, 0)];

    let mut checks: Vec<(&'static str, Trial<'a>)> = Vec::new();

    checks.push((
        "words.reduce_idempotent",
        Box::new(move |rng| {
            let raw = raw_word(rng, &small_alphabet, 2 * cfg.max_word_length);
            let once = reduce(raw.iter().copied());
            ensure!(is_freely_reduced(&once), "not reduced: {once}");
            ensure!(reduce(once.syllables().iter().copied()) == once, "reduce not idempotent on {once}");
            Outcome::Pass
        }),
    ));

    checks.push((
        "words.group_laws",
        Box::new(move |rng| {
            let (a, b, c) = (kw(rng), kw(rng), kw(rng));
            ensure!(a.mul(&b).mul(&c) == a.mul(&b.mul(&c)), "associativity fails on {a} | {b} | {c}");
            ensure!(a.inverse().inverse() == a, "double inverse of {a}");
            ensure!(a.mul(&a.inverse()).is_empty(), "a a^-1 != 1 for {a}");
            Outcome::Pass
        }),
    ));

    checks.push((
        "words.cyclic_reduce",
        Box::new(move |rng| {
            let g = kw(rng);
            let w = kw(rng).conjugate_by(&g);
            let (core, conj) = w.cyclic_reduce();
            ensure!(core.is_cyclically_reduced(), "core {core} of {w} not cyclically reduced");
            ensure!(core.len() <= w.len(), "core longer than {w}");
            ensure!(core.conjugate_by(&conj) == w, "witness fails for {w}");
            Outcome::Pass
        }),
    ));

    checks.push((
        "words.conjugacy_vs_brute_force",
        Box::new(move |rng| {
            let len = rng.gen_range(0..=6);
            let u = random_reduced_word(rng, &small_alphabet, len);
            let v = if rng.gen() {
                let glen = rng.gen_range(0..=2);
                let g = random_reduced_word(rng, &small_alphabet, glen);
                let base = if rng.gen() { u.clone() } else { u.inverse() };
                Some(base.conjugate_by(&g)).filter(|v| v.len() <= 6)
            } else {
                None
            };
            let v = v.unwrap_or_else(|| {
                let len = rng.gen_range(0..=6);
                random_reduced_word(rng, &small_alphabet, len)
            });
            let fast = are_conjugate(&u, &v);
            ensure!(fast.verifies(&u, &v), "witness fails for ({u}, {v})");
            let slow = brute_force_conjugacy(&u, &v, &small_alphabet, 4);
            ensure!(fast.verdict == slow, "({u}, {v}): rotation says {}, brute force says {slow}", fast.verdict);
            Outcome::Pass
        }),
    ));

    checks.push((
        "words.exponent_sum_additive",
        Box::new(move |rng| {
            let (u, v) = (kw(rng), kw(rng));
            let uv = u.mul(&v);
            for g in u.alphabet().union(&v.alphabet()) {
                ensure!(
                    uv.exponent_sum(g) == u.exponent_sum(g) + v.exponent_sum(g),
                    "exponent sum of {g} in ({u})({v})"
                );
            }
            Outcome::Pass
        }),
    ));

    checks.push((
        "words.shift_homomorphism",
        Box::new(move |rng| {
            let (u, v) = (kw(rng), kw(rng));
            let a = rng.gen_range(-5..=5);
            let b = rng.gen_range(-5..=5);
            let su = attempt!(u.shift(a));
            ensure!(attempt!(su.shift(b)) == attempt!(u.shift(a + b)), "shift composition on {u}");
            ensure!(
                attempt!(u.mul(&v).shift(a)) == su.mul(&attempt!(v.shift(a))),
                "shift not multiplicative on ({u})({v})"
            );
            let raw = raw_word(rng, &small_alphabet, 10);
            let shifted_raw: Vec<Syllable> = raw
                .iter()
                .map(|s| Syllable {
                    letter: s.letter.with_index(s.letter.index().unwrap() + a).unwrap(),
                    sign: s.sign,
                })
                .collect();
            ensure!(
                reduce(shifted_raw) == attempt!(reduce(raw).shift(a)),
                "shift does not commute with reduction"
            );
            Outcome::Pass
        }),
    ));

    checks.push((
        "context.u_shift",
        Box::new(move |rng| {
            let i = rng.gen_range(-20..=20);
            ensure!(ctx.u_at(i) == attempt!(ctx.u_at(0).shift(i)), "u_{i}");
            Outcome::Pass
        }),
    ));

    checks.push((
        "context.kernel_relation",
        Box::new(move |rng| {
            let i = rng.gen_range(-20..=20);
            let form = attempt!(to_basis(ctx, &ctx.w_at(i), BasisSpec::mixed(i + 1)));
            ensure!(form == Word::letter(ctx.b(i + k)), "w_{i} in B({}) is {form}", i + 1);
            Outcome::Pass
        }),
    ));

    checks.push((
        "limits.shift_equivariance",
        Box::new(move |rng| {
            let Some(w) = nontrivial(rng) else { return Outcome::Skip };
            let j = rng.gen_range(-8..=8);
            let a = attempt!(limits_report(ctx, &w));
            let b = attempt!(limits_report(ctx, &attempt!(w.shift(j))));
            ensure!(b.alpha == a.alpha + j, "alpha of shift({w}, {j}) is {}, expected {}", b.alpha, a.alpha + j);
            ensure!(b.omega == a.omega + j, "omega of shift({w}, {j}) is {}, expected {}", b.omega, a.omega + j);
            Outcome::Pass
        }),
    ));

    checks.push((
        "limits.duality",
        Box::new(move |rng| {
            let Some(w) = nontrivial(rng) else { return Outcome::Skip };
            let a = attempt!(limits_report(ctx, &w));
            let (dctx, dw) = attempt!(dualize(ctx, &w));
            let d = attempt!(limits_report(&dctx, &dw));
            ensure!(
                d.alpha == -a.omega && d.omega == -a.alpha && d.aw_length == a.aw_length,
                "{w}: (alpha, omega) = ({}, {}), dual ({}, {})",
                a.alpha,
                a.omega,
                d.alpha,
                d.omega
            );
            Outcome::Pass
        }),
    ));

    checks.push((
        "limits.duality_cyclic",
        Box::new(move |rng| {
            let Some(w) = nontrivial(rng) else { return Outcome::Skip };
            let i = rng.gen_range(-4..=4);
            let (core, _) = attempt!(to_basis(ctx, &w, BasisSpec::mixed(i))).cyclic_reduce();
            let Some(r) = (0..core.len()).map(|s| core.rotate(s)).find(starts_with_positive_b) else {
                return Outcome::Skip;
            };
            let (dctx, dr) = attempt!(dualize(ctx, &r));
            let form = attempt!(to_basis(&dctx, &dr, BasisSpec::mixed(-i - k + 1)));
            ensure!(
                form.is_cyclically_reduced() && starts_with_positive_b(&form),
                "{r} in B({i}) has dual form {form} in B'({})",
                -i - k + 1
            );
            Outcome::Pass
        }),
    ));

    checks.push((
        "limits.length_nonincrease",
        Box::new(move |rng| {
            let Some(w) = nontrivial(rng) else { return Outcome::Skip };
            let i = w.min_index().unwrap() - rng.gen_range(0..=3);
            let input = attempt!(to_basis(ctx, &w, BasisSpec::plus(i)));
            let (_, star) = attempt!(alpha_limit(ctx, &input));
            ensure!(star.len() <= input.len(), "{input} (B+({i})) grew to {star}");
            Outcome::Pass
        }),
    ));

    checks.push((
        "limits.normal_forms",
        Box::new(move |rng| {
            let Some(w) = nontrivial(rng) else { return Outcome::Skip };
            let rep = attempt!(limits_report(ctx, &w));
            let plus = attempt!(to_basis(ctx, &w, BasisSpec::plus(rep.alpha)));
            ensure!(rep.alpha_form == plus, "{w}: alpha form {} vs B+ form {plus}", rep.alpha_form);
            ensure!(rep.alpha_form.min_index() == Some(rep.alpha), "{w}: min index of alpha form");
            ensure!(BasisSpec::plus(rep.alpha).contains_word(k, &rep.alpha_form), "{w}: alpha form outside B+");
            let minus = attempt!(to_basis(ctx, &w, BasisSpec::minus(rep.omega)));
            ensure!(rep.omega_form == minus, "{w}: omega form {} vs B- form {minus}", rep.omega_form);
            ensure!(rep.omega_form.max_index() == Some(rep.omega), "{w}: max index of omega form");
            ensure!(BasisSpec::minus(rep.omega).contains_word(k, &rep.omega_form), "{w}: omega form outside B-");
            Outcome::Pass
        }),
    ));

    checks.push((
        "limits.definitional_oracle",
        Box::new(move |rng| {
            let Some(w) = nontrivial(rng) else { return Outcome::Skip };
            let rep = attempt!(limits_report(ctx, &w));
            if let Err(i) = confirm_alpha(ctx, &w, rep.alpha) {
                return Outcome::Fail(format!("{w}: alpha {} contradicted at {i}", rep.alpha));
            }
            if let Err(i) = confirm_omega(ctx, &w, rep.omega) {
                return Outcome::Fail(format!("{w}: omega {} contradicted at {i}", rep.omega));
            }
            Outcome::Pass
        }),
    ));

    checks.push((
        "limits.dichotomy",
        Box::new(move |rng| {
            let Some(w) = nontrivial(rng) else { return Outcome::Skip };
            let rep = attempt!(limits_report(ctx, &w));
            let mut ys = rep.alpha_form.syllables().iter().filter_map(|s| match s.letter.gen {
                Generator::Y(_, l) => Some(l),
                _ => None,
            });
            if rep.aw_length >= 1 {
                ensure!(ys.any(|l| l >= rep.omega), "{w}: no y-letter of index >= {} in {}", rep.omega, rep.alpha_form);
            } else {
                ensure!(ys.next().is_none(), "{w}: y-letter in {} with aw_length {}", rep.alpha_form, rep.aw_length);
            }
            Outcome::Pass
        }),
    ));

    checks.push((
        "limits.aw_lower_bound",
        Box::new(move |rng| {
            let Some(w) = nontrivial(rng) else { return Outcome::Skip };
            let rep = attempt!(limits_report(ctx, &w));
            // A single b-letter b[j] has alpha = j and omega = j - k.
            ensure!(rep.aw_length >= 1 - k, "{w}: aw_length {}", rep.aw_length);
            Outcome::Pass
        }),
    ));

    checks.push((
        "limits.relator_insertion",
        Box::new(move |rng| {
            let w = kw(rng);
            let (lo, hi) = cfg.index_range;
            let j = rng.gen_range(lo..=hi);
            let anchor = rng.gen_range(-3..=3);
            let mut identity = ctx
                .u_at(j)
                .inverse()
                .mul(&Word::letter(ctx.b(j)).inverse())
                .mul(&Word::letter(ctx.b(j + k)));
            if rng.gen() {
                identity = identity.inverse();
            }
            let pos = rng.gen_range(0..=w.len());
            let raw = w.syllables()[..pos]
                .iter()
                .chain(identity.syllables())
                .chain(&w.syllables()[pos..])
                .copied();
            let padded = reduce(raw);
            let before = attempt!(to_basis(ctx, &w, BasisSpec::mixed(anchor)));
            let after = attempt!(to_basis(ctx, &padded, BasisSpec::mixed(anchor)));
            ensure!(before == after, "{w} vs {padded} in B({anchor}): {before} / {after}");
            Outcome::Pass
        }),
    ));

    checks.push((
        "limits.basis_confluence",
        Box::new(move |rng| {
            let w = kw(rng);
            let (lo, hi) = (w.min_index().unwrap() - k - 2, w.max_index().unwrap() + 2);
            let pick = |rng: &mut ChaCha8Rng| {
                let i = rng.gen_range(lo..=hi);
                match rng.gen_range(0..3) {
                    0 => BasisSpec::plus(i),
                    1 => BasisSpec::minus(i),
                    _ => BasisSpec::mixed(i),
                }
            };
            let (target, via) = (pick(rng), pick(rng));
            let direct = to_basis(ctx, &w, target);
            let Ok(middle) = to_basis(ctx, &w, via) else { return Outcome::Skip };
            let second = to_basis(ctx, &middle, target);
            match (direct, second) {
                (Ok(a), Ok(b)) => ensure!(a == b, "{w}: {target} form {a}, via {via} {b}"),
                (Err(_), Err(_)) => {}
                (a, b) => return Outcome::Fail(format!("{w}: {target} direct {a:?}, via {via} {b:?}")),
            }
            Outcome::Pass
        }),
    ));

    checks.push((
        "limits.suitable_conjugate",
        Box::new(move |rng| {
            let Some(w) = nontrivial(rng) else { return Outcome::Skip };
            let s = attempt!(suitable_conjugate(ctx, &w, None));
            let base = attempt!(to_basis(ctx, &w, BasisSpec::mixed(0)));
            let c = are_conjugate(&base, &s.word);
            ensure!(
                c.verdict == Verdict::Conjugate && c.verifies(&base, &s.word),
                "{w}: suitable {} not conjugate to B(0) form {base}",
                s.word
            );
            let (lo, hi) = s.window;
            ensure!(attempt!(is_suitable_in_window(ctx, &s.word, lo, hi)), "{}: window check", s.word);
            let again = attempt!(suitable_conjugate(ctx, &s.word, None));
            ensure!(
                again.word.len() == s.word.len() && are_conjugate(&s.word, &again.word).verdict == Verdict::Conjugate,
                "{}: not stable up to rotation, got {}",
                s.word,
                again.word
            );
            Outcome::Pass
        }),
    ));

    checks.push((
        "limits.cyclic_stability",
        Box::new(move |rng| {
            let Some(w) = nontrivial(rng) else { return Outcome::Skip };
            let s = attempt!(suitable_conjugate(ctx, &w, None));
            let (lo, hi) = s.window;
            let mut starts = Vec::new();
            for i in lo..=hi {
                starts.push(starts_with_positive_b(&attempt!(to_basis(ctx, &s.word, BasisSpec::mixed(i)))));
            }
            ensure!(
                starts.iter().all(|&b| b == starts[0]),
                "{}: leading positive b-letter varies over [{lo}, {hi}]",
                s.word
            );
            Outcome::Pass
        }),
    ));

    checks.push((
        "hgroup.project_lift_roundtrip",
        Box::new(move |rng| {
            let w = kw(rng);
            let h = attempt!(lift_to_h(&w));
            ensure!(x_exp(&h) == 0, "lift of {w} has nonzero x-sum");
            ensure!(attempt!(project_to_kernel(&h)) == w, "round trip of {w} through {h}");
            Outcome::Pass
        }),
    ));

    checks.push((
        "hgroup.projection_laws",
        Box::new(move |rng| {
            let h1 = random_h_word(rng, ctx.n(), cfg.max_word_length);
            let h2 = random_h_word(rng, ctx.n(), cfg.max_word_length);
            let (p1, p2) = (attempt!(project_to_kernel(&h1)), attempt!(project_to_kernel(&h2)));
            ensure!(attempt!(project_to_kernel(&h1.mul(&h2))) == p1.mul(&p2), "not multiplicative on {h1} | {h2}");
            let j = rng.gen_range(-5..=5);
            let xj = Word::power(X, j);
            let conj = h1.conjugate_by(&xj);
            ensure!(attempt!(project_to_kernel(&conj)) == attempt!(p1.shift(j)), "x-conjugation of {h1} by {j}");
            let b_total: i64 = p1.syllables().iter().filter(|s| s.letter.is_b()).map(|s| s.sign.value()).sum();
            ensure!(h1.exponent_sum(&B) == b_total, "b exponent sum of {h1}");
            for m in 1..=ctx.n() {
                let y_total: i64 = p1
                    .syllables()
                    .iter()
                    .filter(|s| matches!(s.letter.gen, Generator::Y(mm, _) if mm == m))
                    .map(|s| s.sign.value())
                    .sum();
                ensure!(h1.exponent_sum(&y_named(m)) == y_total, "y{m} exponent sum of {h1}");
            }
            Outcome::Pass
        }),
    ));

    checks.push((
        "hgroup.phi3_homomorphism",
        Box::new(move |rng| {
            let xyz = [Letter::named('x', None), Letter::named('y', None), Letter::named('z', None)];
            let l1 = rng.gen_range(0..=cfg.max_word_length);
            let l2 = rng.gen_range(0..=cfg.max_word_length);
            let (w1, w2) = (random_reduced_word(rng, &xyz, l1), random_reduced_word(rng, &xyz, l2));
            ensure!(
                attempt!(phi3(&w1.mul(&w2))) == attempt!(phi3(&w1)).mul(&attempt!(phi3(&w2))),
                "phi3 not multiplicative on {w1} | {w2}"
            );
            let relator: Word = "x^2 y^2 z^2".parse().unwrap();
            let target: Word = "a^-1 b^-1 a b c^2".parse().unwrap();
            let c = are_conjugate(&attempt!(phi3(&relator)), &target);
            ensure!(c.verdict == Verdict::Conjugate, "relator image not conjugate to [a,b]c^2");
            Outcome::Pass
        }),
    ));

    checks.push((
        "harness.closure_self_witness",
        Box::new(move |rng| {
            let r = kw(rng);
            let m = cfg.closure_factors.min(2);
            let l = cfg.conjugator_length.min(2);
            let sample = attempt!(closure_sample_with(rng, &r, m, l));
            if sample.word.is_empty() {
                return Outcome::Skip;
            }
            let alphabet: Vec<Letter> = r.alphabet().into_iter().collect();
            let found = attempt!(bounded_membership_over(
                &sample.word,
                &r,
                sample.factors.len(),
                sample.max_conjugator_length(),
                &alphabet,
                super::MEMBERSHIP_CAP,
            ));
            match found {
                Some(f) => ensure!(closure_product(&r, &f) == sample.word, "bad factorization of {}", sample.word),
                None => return Outcome::Fail(format!("{} not found in closure of {r}", sample.word)),
            }
            Outcome::Pass
        }),
    ));

    checks.push((
        "harness.closure_exponent_sums",
        Box::new(move |rng| {
            let r = kw(rng);
            let sample = attempt!(closure_sample_with(rng, &r, cfg.closure_factors, cfg.conjugator_length));
            let rs = class_sums(&r);
            let ws = class_sums(&sample.word);
            for (class, total) in &rs {
                if *total == 0 {
                    ensure!(ws.get(class).copied().unwrap_or(0) == 0, "class {class:?} of {} from {r}", sample.word);
                }
            }
            Outcome::Pass
        }),
    ));

    checks.push((
        "harness.magnus_symmetry",
        Box::new(move |rng| {
            let u = kw(rng);
            let v = if rng.gen() {
                let g = kw(rng);
                let base = if rng.gen() { u.clone() } else { u.inverse() };
                base.conjugate_by(&g)
            } else {
                kw(rng)
            };
            let uv = magnus_verdict(&u, &v);
            let vu = magnus_verdict(&v, &u);
            ensure!(uv.verdict == vu.verdict, "verdicts differ for ({u}, {v})");
            ensure!(uv.verifies(&u, &v) && vu.verifies(&v, &u), "witness fails for ({u}, {v})");
            if let Some(g) = &uv.conjugator {
                let flipped = crate::words::ConjugacyWitness {
                    verdict: uv.verdict,
                    conjugator: Some(g.inverse()),
                };
                ensure!(flipped.verifies(&v, &u), "inverted conjugator fails for ({v}, {u})");
            }
            Outcome::Pass
        }),
    ));

    checks.push((
        "harness.sampler_verdict",
        Box::new(move |rng| {
            let r = kw(rng);
            let sample = attempt!(closure_sample_with(rng, &r, 1, cfg.conjugator_length));
            let sign = sample.factors[0].sign;
            let c = magnus_verdict(&r, &sample.word);
            let expected = if sign > 0 { Verdict::Conjugate } else { Verdict::InverseConjugate };
            ensure!(c.verdict == expected, "{r} vs {}: {} (sign {sign})", sample.word, c.verdict);
            ensure!(c.verifies(&r, &sample.word), "witness fails for {r} vs {}", sample.word);
            Outcome::Pass
        }),
    ));

    checks
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_run_is_deterministic_and_green() {
        let ctx = GroupContext::parse(3, 1, "y1").unwrap();
        let cfg = TrialConfig::with_seed(5, 40);
        let a = run_lemma_suites(&ctx, &cfg).unwrap();
        let b = run_lemma_suites(&ctx, &cfg).unwrap();
        assert_eq!(a.checks, b.checks);
        assert!(a.all_passed(), "{a}");
    }

    #[test]
    fn zero_trials_rejected() {
        let ctx = GroupContext::parse(3, 1, "y1").unwrap();
        let cfg = TrialConfig::with_seed(5, 0);
        assert!(run_lemma_suites(&ctx, &cfg).is_err());
    }
}
