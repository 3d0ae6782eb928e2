//! Command-line front end.
//!
//! [`dispatch`] parses arguments, runs one operation and returns the process
//! exit code: 0 on success, 1 for usage or parse errors, 2 for precondition
//! violations and 3 for internal invariant failures (including failed
//! `selftest` checks).

use std::ffi::OsString;
use std::io::{Read, Write};

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;

use crate::context::GroupContext;
use crate::error::{Error, Result};
use crate::harness::{
    bounded_membership, closure_product, run_lemma_suites, sample_closure_element, ClosureFactor,
    TrialConfig, MEMBERSHIP_CAP,
};
use crate::hgroup::{lift_to_h, phi3, project_to_kernel};
use crate::limits::{amalgam_report, dualize, limits_report, suitable_conjugate, to_basis, BasisSpec};
use crate::words::{are_conjugate, Generator, Word};

#[derive(Parser, Debug)]
#[command(name = "magnus-kernel", version, about = "Word algebra in the kernel of [x^k, b] u")]
struct Cli {
    /// Print JSON instead of text.
    #[arg(long, global = true)]
    json: bool,

    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Debug, Clone)]
struct CtxArgs {
    /// Exponent k of x in the relator.
    #[arg(long)]
    k: i64,
    /// Number of y-generators; defaults to the largest index used in u.
    #[arg(long)]
    n: Option<u32>,
    /// The word u over y1..yn, anchored at index 0.
    #[arg(long)]
    u: String,
}

impl CtxArgs {
    fn build(&self) -> Result<GroupContext> {
        let n = match self.n {
            Some(n) => n,
            None => default_n(&self.u)?,
        };
        GroupContext::parse(self.k, n, &self.u)
    }
}

fn default_n(u: &str) -> Result<u32> {
    let word: Word = u.parse()?;
    let max = word
        .syllables()
        .iter()
        .filter_map(|s| match s.letter.gen {
            Generator::Named('y', Some(m)) => Some(m),
            Generator::Y(m, _) => Some(m),
            _ => None,
        })
        .max();
    Ok(max.unwrap_or(1))
}

#[derive(ValueEnum, Clone, Copy, Debug)]
enum Kind {
    Plus,
    Minus,
    Mixed,
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
enum Profile {
    Quick,
    Full,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Alpha- and omega-limits of a kernel word.
    Limits {
        #[command(flatten)]
        ctx: CtxArgs,
        word: String,
    },
    /// Rewrite a kernel word into B+(i), B-(i) or B(i).
    Basis {
        #[command(flatten)]
        ctx: CtxArgs,
        #[arg(long, value_enum, default_value = "mixed")]
        kind: Kind,
        #[arg(long, default_value_t = 0, allow_negative_numbers = true)]
        anchor: i64,
        word: String,
    },
    /// Suitable conjugate of a kernel word, written in B(0).
    Suitable {
        #[command(flatten)]
        ctx: CtxArgs,
        /// Margin added on both sides of the verification window.
        #[arg(long)]
        window: Option<i64>,
        word: String,
    },
    /// Image of a kernel word in the dual alphabet.
    Dual {
        #[command(flatten)]
        ctx: CtxArgs,
        word: String,
    },
    /// Amalgam parameters for r~_i .. r~_j.
    Amalgam {
        #[command(flatten)]
        ctx: CtxArgs,
        #[arg(long, allow_negative_numbers = true)]
        i: i64,
        #[arg(long, allow_negative_numbers = true)]
        j: i64,
        word: String,
    },
    /// Project a word over x, b, y1..yn with x-sum 0 onto the kernel.
    Project { word: String },
    /// Lift a kernel word back to x, b, y1..yn.
    Lift { word: String },
    /// Genus-3 substitution x -> c a^-1, y -> b^-1 c^-1, z -> c b c a c^-1.
    Phi3 { word: String },
    /// Free-group conjugacy of u and v, or of u^-1 and v.
    Conjugate { u: String, v: String },
    /// Random element of the normal closure of r.
    Sample {
        r: String,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Maximum number of conjugate factors.
        #[arg(long, default_value_t = 3)]
        factors: usize,
        /// Maximum conjugator length.
        #[arg(long, default_value_t = 3)]
        length: usize,
    },
    /// Bounded search for w as a product of conjugates of r^{+-1}.
    Member {
        w: String,
        r: String,
        #[arg(long, default_value_t = 3)]
        factors: usize,
        #[arg(long, default_value_t = 3)]
        length: usize,
    },
    /// Run the property suites. Without a context, runs ctx(3,1,y1) and ctx(4,2,y1 y2).
    Selftest {
        #[arg(long)]
        k: Option<i64>,
        #[arg(long)]
        n: Option<u32>,
        #[arg(long)]
        u: Option<String>,
        #[arg(long, default_value_t = 42)]
        seed: u64,
        /// Overrides the trial count implied by the profile.
        #[arg(long)]
        trials: Option<usize>,
        #[arg(long, value_enum, default_value = "quick")]
        profile: Profile,
    },
}

/// Parses a word argument, reading standard input for `-`.
fn read_word(arg: &str, stdin: &mut dyn Read) -> Result<Word> {
    if arg == "-" {
        let mut buf = String::new();
        stdin
            .read_to_string(&mut buf)
            .map_err(|e| Error::Precondition(format!("reading standard input: {e}")))?;
        buf.trim().parse()
    } else {
        arg.parse()
    }
}

fn json<T: Serialize>(value: &T) -> String {
    serde_json::to_string_pretty(value).expect("report serializes")
}

#[derive(Serialize)]
struct BasisOut {
    basis: String,
    word: Word,
}

#[derive(Serialize)]
struct DualOut {
    k: i64,
    n: u32,
    u: Word,
    word: Word,
}

#[derive(Serialize)]
struct Phi3Out {
    image: Word,
    length: usize,
    cyclic_core: Word,
}

#[derive(Serialize)]
struct MemberOut {
    found: bool,
    factors: Option<Vec<ClosureFactor>>,
}

fn factor_text(f: &ClosureFactor) -> String {
    let power = if f.sign > 0 { "r" } else { "r^-1" };
    if f.conjugator.is_empty() {
        power.to_string()
    } else {
        format!("({})^-1 {power} ({})", f.conjugator, f.conjugator)
    }
}

fn run(cli: Cli, stdin: &mut dyn Read, out: &mut String) -> Result<i32> {
    use std::fmt::Write as _;
    let as_json = cli.json;
    match cli.command {
        Command::Limits { ctx, word } => {
            let ctx = ctx.build()?;
            let rep = limits_report(&ctx, &read_word(&word, stdin)?)?;
            if as_json {
                *out = json(&rep);
            } else {
                let _ = writeln!(out, "alpha={} omega={} aw_length={}", rep.alpha, rep.omega, rep.aw_length);
                let _ = writeln!(out, "alpha_form={}", rep.alpha_form);
                let _ = write!(out, "omega_form={}", rep.omega_form);
            }
        }
        Command::Basis { ctx, kind, anchor, word } => {
            let ctx = ctx.build()?;
            let spec = match kind {
                Kind::Plus => BasisSpec::plus(anchor),
                Kind::Minus => BasisSpec::minus(anchor),
                Kind::Mixed => BasisSpec::mixed(anchor),
            };
            let form = to_basis(&ctx, &read_word(&word, stdin)?, spec)?;
            if as_json {
                *out = json(&BasisOut { basis: spec.to_string(), word: form });
            } else {
                let _ = write!(out, "{spec}: {form}");
            }
        }
        Command::Suitable { ctx, window, word } => {
            let ctx = ctx.build()?;
            let s = suitable_conjugate(&ctx, &read_word(&word, stdin)?, window)?;
            if as_json {
                *out = json(&s);
            } else {
                let _ = writeln!(out, "{}", s.word);
                let _ = write!(out, "path={:?} window=[{}, {}]", s.path, s.window.0, s.window.1);
            }
        }
        Command::Dual { ctx, word } => {
            let ctx = ctx.build()?;
            let (dctx, dw) = dualize(&ctx, &read_word(&word, stdin)?)?;
            if as_json {
                *out = json(&DualOut { k: dctx.k(), n: dctx.n(), u: dctx.u().clone(), word: dw });
            } else {
                let _ = writeln!(out, "u'={}", dctx.u());
                let _ = write!(out, "{dw}");
            }
        }
        Command::Amalgam { ctx, i, j, word } => {
            let ctx = ctx.build()?;
            let rep = amalgam_report(&ctx, &read_word(&word, stdin)?, i, j)?;
            if as_json {
                *out = json(&rep);
            } else {
                let _ = writeln!(out, "s={} t={}", rep.s, rep.t);
                for id in &rep.identifications {
                    let _ = writeln!(out, "w_{} = b[{}]    ({})", id.w_index, id.b_index, id.w);
                }
                let _ = writeln!(out, "mirrored s={} t={}", rep.mirrored_s, rep.mirrored_t);
                for id in &rep.mirrored_identifications {
                    let _ = writeln!(out, "w_{} = b[{}]    ({})", id.w_index, id.b_index, id.w);
                }
                out.pop();
            }
        }
        Command::Project { word } => {
            let w = project_to_kernel(&read_word(&word, stdin)?)?;
            *out = if as_json { json(&w) } else { w.to_string() };
        }
        Command::Lift { word } => {
            let h = lift_to_h(&read_word(&word, stdin)?)?;
            *out = if as_json { json(&h) } else { h.to_string() };
        }
        Command::Phi3 { word } => {
            let image = phi3(&read_word(&word, stdin)?)?;
            let (core, _) = image.cyclic_reduce();
            if as_json {
                *out = json(&Phi3Out { length: image.len(), image, cyclic_core: core });
            } else {
                let _ = writeln!(out, "{image}");
                let _ = write!(out, "length={} cyclic_core={core}", image.len());
            }
        }
        Command::Conjugate { u, v } => {
            let u = read_word(&u, stdin)?;
            let v = read_word(&v, stdin)?;
            let c = are_conjugate(&u, &v);
            if as_json {
                *out = json(&c);
            } else {
                let _ = write!(out, "{}", c.verdict);
                if let Some(g) = &c.conjugator {
                    let _ = write!(out, "\nconjugator={g}");
                }
            }
        }
        Command::Sample { r, seed, factors, length } => {
            let r = read_word(&r, stdin)?;
            let cfg = TrialConfig {
                closure_factors: factors,
                conjugator_length: length,
                ..TrialConfig::with_seed(seed, 1)
            };
            let s = sample_closure_element(&r, &cfg, 0)?;
            if as_json {
                *out = json(&s);
            } else {
                let _ = writeln!(out, "{}", s.word);
                let parts: Vec<String> = s.factors.iter().map(factor_text).collect();
                let _ = write!(out, "= {}", parts.join(" . "));
            }
        }
        Command::Member { w, r, factors, length } => {
            let w = read_word(&w, stdin)?;
            let r = read_word(&r, stdin)?;
            let found = bounded_membership(&w, &r, factors, length)?;
            debug_assert!(found.as_ref().is_none_or(|f| closure_product(&r, f) == w));
            if as_json {
                *out = json(&MemberOut { found: found.is_some(), factors: found });
            } else {
                *out = match found {
                    Some(f) => {
                        let parts: Vec<String> = f.iter().map(factor_text).collect();
                        format!("found: {}", parts.join(" . "))
                    }
                    None => format!("not found within bounds (factors <= {factors}, conjugator length <= {length}, cap {MEMBERSHIP_CAP})"),
                };
            }
        }
        Command::Selftest { k, n, u, seed, trials, profile } => {
            let contexts = match (k, u) {
                (Some(k), Some(u)) => vec![CtxArgs { k, n, u }.build()?],
                (None, None) => vec![GroupContext::parse(3, 1, "y1")?, GroupContext::parse(4, 2, "y1 y2")?],
                _ => return Err(Error::Precondition("selftest needs both --k and --u, or neither".into())),
            };
            let trials = trials.unwrap_or(if profile == Profile::Full { 1000 } else { 100 });
            let cfg = TrialConfig::with_seed(seed, trials);
            let mut green = true;
            let mut blocks = Vec::new();
            for ctx in &contexts {
                let rep = run_lemma_suites(ctx, &cfg)?;
                green &= rep.all_passed();
                blocks.push(if as_json {
                    serde_json::to_string(&rep).expect("report serializes")
                } else {
                    rep.to_string()
                });
            }
            *out = blocks.join(if as_json { "\n" } else { "\n\n" });
            return Ok(if green { 0 } else { 3 });
        }
    }
    Ok(0)
}

/// Run one invocation. `args` includes the program name.
pub fn dispatch<I, T>(args: I, stdin: &mut dyn Read, stdout: &mut dyn Write, stderr: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 1 } else { 0 };
            let text = e.render().to_string();
            let _ = if code == 0 { stdout.write_all(text.as_bytes()) } else { stderr.write_all(text.as_bytes()) };
            return code;
        }
    };
    let mut out = String::new();
    match run(cli, stdin, &mut out) {
        Ok(code) => {
            let _ = writeln!(stdout, "{out}");
            code
        }
        Err(e) => {
            let _ = writeln!(stderr, "error: {e}");
            e.exit_code()
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn call(args: &[&str], input: &str) -> (i32, String, String) {
        let mut argv = vec!["magnus-kernel"];
        argv.extend_from_slice(args);
        let (mut out, mut err) = (Vec::new(), Vec::new());
        let code = dispatch(argv, &mut input.as_bytes(), &mut out, &mut err);
        (code, String::from_utf8(out).unwrap(), String::from_utf8(err).unwrap())
    }

    #[test]
    fn limits_negative_length() {
        let (code, out, _) = call(&["limits", "--k", "4", "--n", "1", "--u", "y1", "b[5] b[6]^-1"], "");
        assert_eq!(code, 0);
        assert!(out.starts_with("alpha=5 omega=2 aw_length=-2"), "{out}");
        assert!(out.contains("omega_form=b[1] y[1,1] y[1,2]^-1 b[2]^-1"));
    }

    #[test]
    fn trivial_word_exit_two() {
        let (code, _, err) = call(&["limits", "--k", "4", "--u", "y1", "1"], "");
        assert_eq!(code, 2);
        assert!(err.contains("trivial word"));
    }

    #[test]
    fn usage_and_parse_errors_exit_one() {
        assert_eq!(call(&["limits", "--u", "y1", "b[1]"], "").0, 1);
        assert_eq!(call(&["frobnicate"], "").0, 1);
        assert_eq!(call(&["conjugate", "b[1", "b[1]"], "").0, 1);
        assert_eq!(call(&["--help"], "").0, 0);
    }

    #[test]
    fn conjugate_reads_stdin() {
        let (code, out, _) = call(&["conjugate", "y[1,0]", "-"], "b[3]^-1 y[1,0] b[3]\n");
        assert_eq!(code, 0);
        assert_eq!(out, "conjugate\nconjugator=b[3]\n");
        let (_, out, _) = call(&["--json", "conjugate", "y[1,0]", "b[3]^-1 y[1,0] b[3]"], "");
        let v: serde_json::Value = serde_json::from_str(&out).unwrap();
        assert_eq!(v["verdict"], "conjugate");
        assert_eq!(v["conjugator"], "b[3]");
    }

    #[test]
    fn negative_anchor() {
        let (code, out, _) = call(&["basis", "--k", "4", "--u", "y1", "--kind", "plus", "--anchor", "-1", "b[5]"], "");
        assert_eq!(code, 0, "{out}");
        assert_eq!(out, "B+(-1): b[1] y[1,1]\n");
        assert_eq!(call(&["basis", "--k", "4", "--u", "y1", "--kind", "minus", "--anchor", "-1", "b[5]"], "").0, 2);
    }
}
