//! Closed-form fourth-power sums.
//!
//! For a non-zero `m`:
//!
//! ```text
//! 25 Σ F(mk)^4 = F(2mn+m) (L(2mn+m) + 4 (-1)^(mn-1) L(m)) / F(2m) + 6n + 3
//!    Σ L(mk)^4 = F(2mn+m) (L(2mn+m) + 4 (-1)^(mn)   L(m)) / F(2m) + 6n - 5
//! ```
//!
//! and for every `m`:
//!
//! ```text
//! Σ (-1)^(k-1) F(mk)^4
//!     = F(mn) F(mn+m) ((-1)^(n-1) L(m) L(mn) L(mn+m) + (-1)^(n(m-1)) 4 L(2m)) / (5 L(m) L(2m))
//! Σ_{k=(1+(-1)^n)/2} (-1)^(k-1) L(mk)^4
//!     = (-1)^(n-1) 5 F(mn) F(mn+m) (L(m) L(mn) L(mn+m) + (-1)^(nm) 4 L(2m)) / (L(m) L(2m))
//! ```
//!
//! All sums run from `k = 1` to `n` except the alternating Lucas sum, whose
//! lower limit is `0` for odd `n`. Every division is checked for a zero
//! remainder, and powers of `-1` come from parity tests only.

use std::fmt;
use std::str::FromStr;
use std::time::Instant;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::Zero;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::kernel::{fib_lucas_counted, with_sign, Index, OpCount};
use crate::oracle;

/// The four target sums.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum SumFamily {
    /// `Σ F(mk)^4`
    #[serde(rename = "fib4")]
    FibFourth,
    /// `Σ L(mk)^4`
    #[serde(rename = "lucas4")]
    LucasFourth,
    /// `Σ (-1)^(k-1) F(mk)^4`
    #[serde(rename = "altfib4")]
    AltFibFourth,
    /// `Σ (-1)^(k-1) L(mk)^4` with the parity-dependent lower limit.
    #[serde(rename = "altlucas4")]
    AltLucasFourth,
}

impl SumFamily {
    pub const ALL: [SumFamily; 4] = [
        SumFamily::FibFourth,
        SumFamily::LucasFourth,
        SumFamily::AltFibFourth,
        SumFamily::AltLucasFourth,
    ];

    pub fn name(self) -> &'static str {
        match self {
            SumFamily::FibFourth => "fib4",
            SumFamily::LucasFourth => "lucas4",
            SumFamily::AltFibFourth => "altfib4",
            SumFamily::AltLucasFourth => "altlucas4",
        }
    }

    /// The non-alternating closed forms divide by `F(2m)`, which vanishes at `m = 0`.
    pub fn requires_nonzero_m(self) -> bool {
        matches!(self, SumFamily::FibFourth | SumFamily::LucasFourth)
    }

    pub fn is_alternating(self) -> bool {
        matches!(self, SumFamily::AltFibFourth | SumFamily::AltLucasFourth)
    }

    pub fn is_lucas(self) -> bool {
        matches!(self, SumFamily::LucasFourth | SumFamily::AltLucasFourth)
    }

    /// First `k` of the summation for upper limit `n`.
    pub fn lower_limit(self, n: Index) -> i64 {
        if self == SumFamily::AltLucasFourth && n.is_odd() {
            0
        } else {
            1
        }
    }
}

impl fmt::Display for SumFamily {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for SumFamily {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        SumFamily::ALL
            .into_iter()
            .find(|family| family.name() == s)
            .ok_or_else(|| {
                Error::Parameter(format!(
                    "unknown family `{s}` (expected fib4, lucas4, altfib4 or altlucas4)"
                ))
            })
    }
}

/// A validated `(family, m, n)` request.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct SumSpec {
    pub family: SumFamily,
    pub m: Index,
    pub n: Index,
}

impl SumSpec {
    pub fn new(family: SumFamily, m: impl Into<Index>, n: impl Into<Index>) -> Result<Self> {
        let (m, n) = (m.into(), n.into());
        if family.requires_nonzero_m() && m.is_zero() {
            return Err(zero_m_error(family));
        }
        check_upper_limit(n)?;
        Ok(SumSpec { family, m, n })
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Method {
    #[serde(rename = "closed")]
    ClosedForm,
    Oracle,
}

impl Method {
    pub fn name(self) -> &'static str {
        match self {
            Method::ClosedForm => "closed",
            Method::Oracle => "oracle",
        }
    }
}

impl FromStr for Method {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "closed" => Ok(Method::ClosedForm),
            "oracle" => Ok(Method::Oracle),
            _ => Err(Error::Parameter(format!(
                "unknown method `{s}` (expected closed or oracle)"
            ))),
        }
    }
}

/// Every denominator that must divide exactly.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum DivisionSite {
    /// `F(m)` in the signed first-order sum of `L(2mk)`.
    FibM,
    /// `L(m)` in the parity-weighted first-order sum of `L(2mk)`.
    LucasM,
    /// `F(2m)` in the non-alternating fourth-power sums.
    Fib2M,
    /// The factor 25 in the Fibonacci fourth-power sum.
    TwentyFive,
    /// `5 L(m) L(2m)` in the alternating Fibonacci sum.
    FiveLucasMLucas2M,
    /// `L(m) L(2m)` in the alternating Lucas sum.
    LucasMLucas2M,
    /// The factor 3 in the `m = 1` alternating forms.
    Three,
}

impl fmt::Display for DivisionSite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            DivisionSite::FibM => "F(m)",
            DivisionSite::LucasM => "L(m)",
            DivisionSite::Fib2M => "F(2m)",
            DivisionSite::TwentyFive => "25",
            DivisionSite::FiveLucasMLucas2M => "5 L(m) L(2m)",
            DivisionSite::LucasMLucas2M => "L(m) L(2m)",
            DivisionSite::Three => "3",
        };
        f.write_str(s)
    }
}

/// Outcome of [`evaluate`].
#[derive(Debug, Clone, PartialEq)]
pub struct EvalResult {
    pub spec: SumSpec,
    pub value: BigInt,
    pub method: Method,
    pub big_op_count: u64,
    /// Exact divisions performed, in order. Empty for the oracle.
    pub divisions: Vec<DivisionSite>,
    pub elapsed_ms: f64,
}

/// Per-evaluation bookkeeping: big-integer work and the division sites hit.
#[derive(Debug, Default)]
pub(crate) struct Work {
    pub ops: OpCount,
    pub divisions: Vec<DivisionSite>,
}

impl Work {
    fn fib_lucas(&mut self, n: Index) -> (BigInt, BigInt) {
        fib_lucas_counted(n, &mut self.ops)
    }

    fn mul(&mut self, a: &BigInt, b: &BigInt) -> BigInt {
        self.ops.mul(a, b)
    }

    fn exact_div(&mut self, dividend: BigInt, divisor: &BigInt, site: DivisionSite) -> Result<BigInt> {
        self.ops.divisions += 1;
        self.divisions.push(site);
        let (quotient, remainder) = dividend.div_rem(divisor);
        if !remainder.is_zero() {
            return Err(Error::InexactDivision {
                site,
                dividend: dividend.to_string(),
                divisor: divisor.to_string(),
                remainder: remainder.to_string(),
            });
        }
        Ok(quotient)
    }
}

fn zero_m_error(family: SumFamily) -> Error {
    Error::Domain(format!(
        "family {family} requires m != 0 (the closed form divides by F(2m), which is 0 at m = 0)"
    ))
}

pub(crate) fn check_upper_limit(n: Index) -> Result<()> {
    if n.is_negative() {
        return Err(Error::Domain(format!(
            "upper limit n must be >= 0, got {n}"
        )));
    }
    Ok(())
}

/// `Σ_{k=1}^{n} (-1)^(mk-1) L(2mk)`, evaluated as
/// `(-1)^(mn-1) F(mn) L(mn+m) / F(m)`.
pub fn lemma3_sum(m: impl Into<Index>, n: impl Into<Index>) -> Result<BigInt> {
    lemma3_with(m.into(), n.into(), &mut Work::default())
}

fn lemma3_with(m: Index, n: Index, work: &mut Work) -> Result<BigInt> {
    if m.is_zero() {
        return Err(Error::Domain(
            "the signed sum of L(2mk) requires m != 0 (division by F(m))".into(),
        ));
    }
    check_upper_limit(n)?;
    let mn = m.checked_mul(n)?;
    let (f_mn, _) = work.fib_lucas(mn);
    let (_, l_mn_m) = work.fib_lucas(mn.checked_add(m)?);
    let (f_m, _) = work.fib_lucas(m);
    let product = work.mul(&f_mn, &l_mn_m);
    // (-1)^(mn-1): odd exponent exactly when mn is even.
    let numerator = with_sign(!mn.is_odd(), product);
    work.exact_div(numerator, &f_m, DivisionSite::FibM)
}

/// `Σ_{k=1}^{n} (-1)^(k(m-1)) L(2mk)`, evaluated as
/// `((-1)^(n(m-1)) L(2mn+m) - L(m)) / L(m)`.
pub fn lemma4_sum(m: impl Into<Index>, n: impl Into<Index>) -> Result<BigInt> {
    lemma4_with(m.into(), n.into(), &mut Work::default())
}

fn lemma4_with(m: Index, n: Index, work: &mut Work) -> Result<BigInt> {
    check_upper_limit(n)?;
    let top = m.checked_mul(n)?.scaled(2)?.checked_add(m)?;
    let (_, l_top) = work.fib_lucas(top);
    let (_, l_m) = work.fib_lucas(m);
    let numerator = with_sign(n.is_odd() && !m.is_odd(), l_top) - &l_m;
    work.exact_div(numerator, &l_m, DivisionSite::LucasM)
}

/// `F(2mn+m) (L(2mn+m) + 4 (-1)^e L(m)) / F(2m)`, the part shared by the two
/// non-alternating sums.
fn non_alternating_core(m: Index, n: Index, exponent_is_odd: bool, work: &mut Work) -> Result<BigInt> {
    let top = m.checked_mul(n)?.scaled(2)?.checked_add(m)?;
    let (f_top, l_top) = work.fib_lucas(top);
    let (_, l_m) = work.fib_lucas(m);
    let (f_2m, _) = work.fib_lucas(m.scaled(2)?);
    let bracket = l_top + with_sign(exponent_is_odd, l_m * 4);
    let numerator = work.mul(&f_top, &bracket);
    work.exact_div(numerator, &f_2m, DivisionSite::Fib2M)
}

/// `Σ_{k=1}^{n} F(mk)^4` for `m != 0`, `n >= 0`.
pub fn thm1_fib_fourth_sum(m: impl Into<Index>, n: impl Into<Index>) -> Result<BigInt> {
    fib_fourth_with(m.into(), n.into(), &mut Work::default())
}

fn fib_fourth_with(m: Index, n: Index, work: &mut Work) -> Result<BigInt> {
    if m.is_zero() {
        return Err(zero_m_error(SumFamily::FibFourth));
    }
    check_upper_limit(n)?;
    let mn_is_odd = m.is_odd() && n.is_odd();
    // (-1)^(mn-1)
    let core = non_alternating_core(m, n, !mn_is_odd, work)?;
    let scaled_sum = core + 6 * BigInt::from(n.get()) + 3;
    work.exact_div(scaled_sum, &BigInt::from(25), DivisionSite::TwentyFive)
}

/// `Σ_{k=1}^{n} L(mk)^4` for `m != 0`, `n >= 0`.
pub fn thm2_lucas_fourth_sum(m: impl Into<Index>, n: impl Into<Index>) -> Result<BigInt> {
    lucas_fourth_with(m.into(), n.into(), &mut Work::default())
}

fn lucas_fourth_with(m: Index, n: Index, work: &mut Work) -> Result<BigInt> {
    if m.is_zero() {
        return Err(zero_m_error(SumFamily::LucasFourth));
    }
    check_upper_limit(n)?;
    let mn_is_odd = m.is_odd() && n.is_odd();
    let core = non_alternating_core(m, n, mn_is_odd, work)?;
    Ok(core + 6 * BigInt::from(n.get()) - 5)
}

/// Values shared by the alternating closed forms.
struct AlternatingTerms {
    f_mn: BigInt,
    l_mn: BigInt,
    f_next: BigInt,
    l_next: BigInt,
    l_m: BigInt,
    l_2m: BigInt,
}

impl AlternatingTerms {
    fn load(m: Index, n: Index, work: &mut Work) -> Result<Self> {
        let mn = m.checked_mul(n)?;
        let (f_mn, l_mn) = work.fib_lucas(mn);
        let (f_next, l_next) = work.fib_lucas(mn.checked_add(m)?);
        let (_, l_m) = work.fib_lucas(m);
        let (_, l_2m) = work.fib_lucas(m.scaled(2)?);
        Ok(AlternatingTerms { f_mn, l_mn, f_next, l_next, l_m, l_2m })
    }

    /// `L(m) L(mn) L(mn+m)`
    fn lucas_triple(&self, work: &mut Work) -> BigInt {
        let pair = work.mul(&self.l_mn, &self.l_next);
        work.mul(&self.l_m, &pair)
    }

    /// `F(mn) F(mn+m)`
    fn fib_pair(&self, work: &mut Work) -> BigInt {
        work.mul(&self.f_mn, &self.f_next)
    }
}

/// `Σ_{k=1}^{n} (-1)^(k-1) F(mk)^4` for any `m`, `n >= 0`.
pub fn thm3_alt_fib_fourth_sum(m: impl Into<Index>, n: impl Into<Index>) -> Result<BigInt> {
    alt_fib_fourth_with(m.into(), n.into(), &mut Work::default())
}

fn alt_fib_fourth_with(m: Index, n: Index, work: &mut Work) -> Result<BigInt> {
    check_upper_limit(n)?;
    let t = AlternatingTerms::load(m, n, work)?;
    let triple = t.lucas_triple(work);
    // (-1)^(n-1) and (-1)^(n(m-1)).
    let brace = with_sign(!n.is_odd(), triple)
        + with_sign(n.is_odd() && !m.is_odd(), &t.l_2m * 4);
    let fibs = t.fib_pair(work);
    let numerator = work.mul(&fibs, &brace);
    let lucas_m_2m = work.mul(&t.l_m, &t.l_2m);
    work.exact_div(numerator, &(lucas_m_2m * 5), DivisionSite::FiveLucasMLucas2M)
}

/// `Σ_{k=k0}^{n} (-1)^(k-1) L(mk)^4` with `k0 = 1` for even `n` and `k0 = 0`
/// for odd `n` (so odd `n` includes the term `-L(0)^4 = -16`).
pub fn thm4_alt_lucas_fourth_sum(m: impl Into<Index>, n: impl Into<Index>) -> Result<BigInt> {
    alt_lucas_fourth_with(m.into(), n.into(), &mut Work::default())
}

fn alt_lucas_fourth_with(m: Index, n: Index, work: &mut Work) -> Result<BigInt> {
    check_upper_limit(n)?;
    let t = AlternatingTerms::load(m, n, work)?;
    let triple = t.lucas_triple(work);
    let nm_is_odd = n.is_odd() && m.is_odd();
    let brace = triple + with_sign(nm_is_odd, &t.l_2m * 4);
    let fibs = t.fib_pair(work);
    let numerator = with_sign(!n.is_odd(), work.mul(&fibs, &brace) * 5);
    let denominator = work.mul(&t.l_m, &t.l_2m);
    work.exact_div(numerator, &denominator, DivisionSite::LucasMLucas2M)
}

/// The `m = 1` sums via their factored forms:
///
/// ```text
/// fib4:      25 Σ F(k)^4 = F(2n+1) L(n-1) L(n+2) + 6n + 3
/// lucas4:       Σ L(k)^4 = 5 F(2n+1) F(n-1) F(n+2) + 6n - 5
/// altfib4:   Σ (-1)^(k-1) F(k)^4 = (-1)^(n-1) F(n) F(n+1) F(n-2) F(n+3) / 3
/// altlucas4: Σ (-1)^(k-1) L(k)^4 = (-1)^(n-1) 5 F(n) F(n+1) (L(n-2) L(n+3) + 2 (-1)^n) / 3
/// ```
pub fn corollary_sum(family: SumFamily, n: impl Into<Index>) -> Result<BigInt> {
    corollary_with(family, n.into(), &mut Work::default())
}

fn corollary_with(family: SumFamily, n: Index, work: &mut Work) -> Result<BigInt> {
    check_upper_limit(n)?;
    let six_n = 6 * BigInt::from(n.get());
    match family {
        SumFamily::FibFourth => {
            let (f_top, _) = work.fib_lucas(n.scaled(2)?.offset(1)?);
            let (_, l_lo) = work.fib_lucas(n.offset(-1)?);
            let (_, l_hi) = work.fib_lucas(n.offset(2)?);
            let lucas = work.mul(&l_lo, &l_hi);
            let scaled = work.mul(&f_top, &lucas) + six_n + 3;
            work.exact_div(scaled, &BigInt::from(25), DivisionSite::TwentyFive)
        }
        SumFamily::LucasFourth => {
            let (f_top, _) = work.fib_lucas(n.scaled(2)?.offset(1)?);
            let (f_lo, _) = work.fib_lucas(n.offset(-1)?);
            let (f_hi, _) = work.fib_lucas(n.offset(2)?);
            let fibs = work.mul(&f_lo, &f_hi);
            Ok(work.mul(&f_top, &fibs) * 5 + six_n - 5)
        }
        SumFamily::AltFibFourth => {
            let (f_n, _) = work.fib_lucas(n);
            let (f_n1, _) = work.fib_lucas(n.offset(1)?);
            let (f_lo, _) = work.fib_lucas(n.offset(-2)?);
            let (f_hi, _) = work.fib_lucas(n.offset(3)?);
            let inner = work.mul(&f_n, &f_n1);
            let outer = work.mul(&f_lo, &f_hi);
            let numerator = with_sign(!n.is_odd(), work.mul(&inner, &outer));
            work.exact_div(numerator, &BigInt::from(3), DivisionSite::Three)
        }
        SumFamily::AltLucasFourth => {
            let (f_n, _) = work.fib_lucas(n);
            let (f_n1, _) = work.fib_lucas(n.offset(1)?);
            let (_, l_lo) = work.fib_lucas(n.offset(-2)?);
            let (_, l_hi) = work.fib_lucas(n.offset(3)?);
            let bracket = work.mul(&l_lo, &l_hi) + with_sign(n.is_odd(), BigInt::from(2));
            let fibs = work.mul(&f_n, &f_n1);
            let numerator = with_sign(!n.is_odd(), work.mul(&fibs, &bracket) * 5);
            work.exact_div(numerator, &BigInt::from(3), DivisionSite::Three)
        }
    }
}

pub(crate) fn closed_form_with(spec: &SumSpec, work: &mut Work) -> Result<BigInt> {
    match spec.family {
        SumFamily::FibFourth => fib_fourth_with(spec.m, spec.n, work),
        SumFamily::LucasFourth => lucas_fourth_with(spec.m, spec.n, work),
        SumFamily::AltFibFourth => alt_fib_fourth_with(spec.m, spec.n, work),
        SumFamily::AltLucasFourth => alt_lucas_fourth_with(spec.m, spec.n, work),
    }
}

/// Closed-form value for a validated spec.
pub fn closed_form(spec: &SumSpec) -> Result<BigInt> {
    closed_form_with(spec, &mut Work::default())
}

/// Evaluates `spec` by the requested method, recording cost and timing.
pub fn evaluate(spec: SumSpec, method: Method) -> Result<EvalResult> {
    let start = Instant::now();
    let mut work = Work::default();
    let value = match method {
        Method::ClosedForm => closed_form_with(&spec, &mut work)?,
        Method::Oracle => oracle::naive_power_sum_counted(spec.family, spec.m, spec.n, &mut work.ops)?,
    };
    Ok(EvalResult {
        spec,
        value,
        method,
        big_op_count: work.ops.total(),
        divisions: work.divisions,
        elapsed_ms: start.elapsed().as_secs_f64() * 1e3,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn big(v: i64) -> BigInt {
        BigInt::from(v)
    }

    #[test]
    fn first_order_sums() {
        assert_eq!(lemma3_sum(1, 1).unwrap(), big(3));
        assert_eq!(lemma3_sum(2, 2).unwrap(), big(-54));
        assert_eq!(lemma3_sum(1, 0).unwrap(), big(0));
        assert_eq!(lemma4_sum(1, 2).unwrap(), big(10));
        assert_eq!(lemma4_sum(2, 1).unwrap(), big(-7));
        assert_eq!(lemma4_sum(3, 0).unwrap(), big(0));
        assert!(matches!(lemma3_sum(0, 4), Err(Error::Domain(_))));
    }

    #[test]
    fn first_order_sums_against_direct_summation() {
        for m in -6i32..=6 {
            for n in 0i32..=10 {
                let mut s3 = BigInt::zero();
                let mut s4 = BigInt::zero();
                for k in 1..=n {
                    let l = crate::kernel::lucas(2 * m * k);
                    s3 += with_sign((m * k - 1).rem_euclid(2) == 1, l.clone());
                    s4 += with_sign((k * (m - 1)).rem_euclid(2) == 1, l);
                }
                if m != 0 {
                    assert_eq!(lemma3_sum(m, n).unwrap(), s3, "m={m} n={n}");
                }
                assert_eq!(lemma4_sum(m, n).unwrap(), s4, "m={m} n={n}");
            }
        }
    }

    #[test]
    fn theorem_examples() {
        assert_eq!(thm1_fib_fourth_sum(1, 3).unwrap(), big(18));
        assert_eq!(thm1_fib_fourth_sum(2, 1).unwrap(), big(1));
        assert_eq!(thm1_fib_fourth_sum(1, 0).unwrap(), big(0));
        assert_eq!(thm2_lucas_fourth_sum(1, 2).unwrap(), big(82));
        assert_eq!(thm2_lucas_fourth_sum(2, 1).unwrap(), big(81));
        assert_eq!(thm2_lucas_fourth_sum(1, 0).unwrap(), big(0));
        assert_eq!(thm3_alt_fib_fourth_sum(1, 3).unwrap(), big(16));
        assert_eq!(thm3_alt_fib_fourth_sum(2, 2).unwrap(), big(-80));
        assert_eq!(thm3_alt_fib_fourth_sum(5, 0).unwrap(), big(0));
        assert_eq!(thm4_alt_lucas_fourth_sum(1, 2).unwrap(), big(-80));
        assert_eq!(thm4_alt_lucas_fourth_sum(1, 1).unwrap(), big(-15));
        assert_eq!(thm4_alt_lucas_fourth_sum(3, 0).unwrap(), big(0));
    }

    #[test]
    fn corollary_examples() {
        assert_eq!(corollary_sum(SumFamily::FibFourth, 3).unwrap(), big(18));
        assert_eq!(corollary_sum(SumFamily::LucasFourth, 2).unwrap(), big(82));
        assert_eq!(corollary_sum(SumFamily::AltFibFourth, 3).unwrap(), big(16));
        assert_eq!(corollary_sum(SumFamily::AltLucasFourth, 1).unwrap(), big(-15));
        for family in SumFamily::ALL {
            assert_eq!(corollary_sum(family, 0).unwrap(), big(0), "{family}");
        }
    }

    #[test]
    fn domain_errors() {
        assert!(matches!(thm1_fib_fourth_sum(0, 5), Err(Error::Domain(_))));
        assert!(matches!(thm2_lucas_fourth_sum(0, 5), Err(Error::Domain(_))));
        assert!(matches!(thm3_alt_fib_fourth_sum(2, -1), Err(Error::Domain(_))));
        assert!(matches!(SumSpec::new(SumFamily::LucasFourth, 0, 1), Err(Error::Domain(_))));
        // m = 0 is fine for the alternating families.
        assert_eq!(thm3_alt_fib_fourth_sum(0, 7).unwrap(), big(0));
        // L(0)^4 = 16 alternating: 16 - 16 + ... with the k = 0 term for odd n.
        assert_eq!(thm4_alt_lucas_fourth_sum(0, 3).unwrap(), big(0));
        assert_eq!(thm4_alt_lucas_fourth_sum(0, 4).unwrap(), big(0));
        let huge = Index::new(1 << 40).unwrap();
        assert!(matches!(thm1_fib_fourth_sum(huge, huge), Err(Error::IndexOverflow(_))));
    }

    #[test]
    fn division_sites_recorded() {
        let spec = SumSpec::new(SumFamily::FibFourth, 3, 7).unwrap();
        let r = evaluate(spec, Method::ClosedForm).unwrap();
        assert_eq!(r.divisions, vec![DivisionSite::Fib2M, DivisionSite::TwentyFive]);
        let spec = SumSpec::new(SumFamily::AltLucasFourth, -2, 5).unwrap();
        let r = evaluate(spec, Method::ClosedForm).unwrap();
        assert_eq!(r.divisions, vec![DivisionSite::LucasMLucas2M]);
    }

    #[test]
    fn family_names_round_trip() {
        for family in SumFamily::ALL {
            assert_eq!(family.name().parse::<SumFamily>().unwrap(), family);
            let json = serde_json::to_string(&family).unwrap();
            assert_eq!(json, format!("\"{}\"", family.name()));
        }
        assert!("fib5".parse::<SumFamily>().is_err());
    }
}
