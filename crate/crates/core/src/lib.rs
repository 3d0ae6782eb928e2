//! Word algebra in the kernel `N` of the one-relator group
//! `H = ⟨x, b, y1..yn | [x^k, b] u⟩`.
//!
//! `N` is the kernel of the map `H → ℤ` that counts `x`. It is a free group,
//! generated by `b[i] = x⁻ⁱ b xⁱ` and `y[m,i] = x⁻ⁱ ym xⁱ` subject to
//! `b[i] u_i = b[i+k]`. The crate provides:
//!
//! * [`words`]: freely reduced words, cyclic reduction, conjugacy with
//!   witnesses, exponent sums and index shifts;
//! * [`context`]: the parameters `(k, n, u)`;
//! * [`limits`]: basis rewriting, α-/ω-limits, suitable conjugates, the dual
//!   alphabet and amalgam bookkeeping;
//! * [`hgroup`]: projection between `H` and `N` and the genus-3 substitution;
//! * [`harness`]: random generators, brute-force oracles and the property
//!   suites behind `selftest`;
//! * [`cli`]: the command-line front end.

pub mod cli;
pub mod context;
pub mod error;
pub mod harness;
pub mod hgroup;
pub mod limits;
pub mod words;

pub use context::GroupContext;
pub use error::{Error, Result};
pub use limits::{
    alpha_limit, limits_report, omega_limit, to_basis, BasisKind, BasisSpec, LimitsReport,
};
pub use words::{are_conjugate, ConjugacyWitness, Letter, Syllable, Verdict, Word};
