//! Exact fourth-power sums of Fibonacci and Lucas numbers.
//!
//! `Σ F(mk)^4`, `Σ L(mk)^4` and their alternating versions are evaluated in
//! O(log(|m| n)) big-integer operations from closed forms, and every closed
//! form can be checked against direct summation with exact integer equality.
//!
//! ```
//! use fibsum::{thm1_fib_fourth_sum, naive_power_sum, SumFamily};
//!
//! let closed = thm1_fib_fourth_sum(3, 40).unwrap();
//! let direct = naive_power_sum(SumFamily::FibFourth, 3, 40).unwrap();
//! assert_eq!(closed, direct);
//! ```

pub mod bench;
pub mod cli;
pub mod closed_form;
pub mod error;
pub mod identities;
pub mod kernel;
pub mod oracle;
pub mod verify;

pub use bench::{bench, BenchResult};
pub use cli::cli_main;
pub use closed_form::{
    closed_form, corollary_sum, evaluate, lemma3_sum, lemma4_sum, thm1_fib_fourth_sum,
    thm2_lucas_fourth_sum, thm3_alt_fib_fourth_sum, thm4_alt_lucas_fourth_sum, DivisionSite,
    EvalResult, Method, SumFamily, SumSpec,
};
pub use error::{Error, Result};
pub use identities::{eval_identity, IdentityId, IdentityInstance};
pub use kernel::{fib, fib_lucas, fib_lucas_counted, fib_pair, lucas, FibPair, Index, OpCount};
pub use num_bigint::BigInt;
pub use oracle::{naive_power_sum, telescoping_sum, SequenceKind, SequenceSpec};
pub use verify::{run_grid, run_grid_with, GridSpec, IndexRange, VerifyReport};
