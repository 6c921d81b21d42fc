//! Ground truth by direct summation, plus the two telescoping identities.
//!
//! The power-sum oracle walks `k = 0, 1, 2, ...` carrying `(F(mk), L(mk))`
//! and the previous pair, advancing with the three-term forms of the
//! addition identities:
//!
//! ```text
//! F(m(k+1)) = F(m) L(mk) + (-1)^m F(m(k-1))
//! L(m(k+1)) = L(m) L(mk) - (-1)^m L(m(k-1))
//! ```
//!
//! so it needs the kernel only once, for `(F(m), L(m))`.

use num_bigint::BigInt;
use num_traits::Zero;
use serde::{Deserialize, Serialize};

use crate::closed_form::{check_upper_limit, SumFamily};
use crate::error::{Error, Result};
use crate::kernel::{fib, fib_lucas_counted, lucas, with_sign, Index, OpCount};

/// `Σ` of the family's terms by iteration; O(n) big-integer operations.
pub fn naive_power_sum(family: SumFamily, m: impl Into<Index>, n: impl Into<Index>) -> Result<BigInt> {
    naive_power_sum_counted(family, m.into(), n.into(), &mut OpCount::new())
}

pub(crate) fn naive_power_sum_counted(
    family: SumFamily,
    m: Index,
    n: Index,
    ops: &mut OpCount,
) -> Result<BigInt> {
    check_upper_limit(n)?;
    let (f_m, l_m) = fib_lucas_counted(m, ops);
    let m_odd = m.is_odd();
    // Index -m by the sign rules.
    let mut prev = (with_sign(!m_odd, f_m.clone()), with_sign(m_odd, l_m.clone()));
    let mut cur = (BigInt::zero(), BigInt::from(2));
    let lower = family.lower_limit(n);
    let mut total = BigInt::zero();

    for k in 0..=n.get() {
        if k >= lower {
            let base = if family.is_lucas() { &cur.1 } else { &cur.0 };
            let square = ops.square(base);
            let fourth = ops.square(&square);
            // (-1)^(k-1): negative for even k.
            if family.is_alternating() && k % 2 == 0 {
                total -= fourth;
            } else {
                total += fourth;
            }
        }
        if k == n.get() {
            break;
        }
        let f_next = ops.mul(&f_m, &cur.1) + with_sign(m_odd, prev.0);
        let l_next = ops.mul(&l_m, &cur.1) - with_sign(m_odd, prev.1);
        prev = std::mem::replace(&mut cur, (f_next, l_next));
    }
    Ok(total)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum SequenceKind {
    FibShifted,
    LucasShifted,
}

/// `f(k) = F(stride*k + offset)` or `L(stride*k + offset)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct SequenceSpec {
    kind: SequenceKind,
    stride: Index,
    offset: Index,
}

impl SequenceSpec {
    pub fn new(kind: SequenceKind, stride: impl Into<Index>, offset: impl Into<Index>) -> Result<Self> {
        let stride = stride.into();
        if stride.is_zero() {
            return Err(Error::Parameter("sequence stride must be non-zero".into()));
        }
        Ok(SequenceSpec { kind, stride, offset: offset.into() })
    }

    pub fn kind(&self) -> SequenceKind {
        self.kind
    }

    pub fn stride(&self) -> Index {
        self.stride
    }

    pub fn offset(&self) -> Index {
        self.offset
    }

    pub fn at(&self, k: Index) -> Result<BigInt> {
        let index = self.stride.checked_mul(k)?.checked_add(self.offset)?;
        Ok(match self.kind {
            SequenceKind::FibShifted => fib(index),
            SequenceKind::LucasShifted => lucas(index),
        })
    }
}

/// Sums the telescoping series term by term and checks it against its
/// boundary form.
///
/// Non-alternating: `Σ_{k=1}^{n} [f(mk+m) - f(mk)] = f(mn+m) - f(m)`.
/// Alternating: `Σ_{k=1}^{n} (-1)^(k-1) [f(mk+m) + f(mk)] = (-1)^(n-1) f(mn+m) + f(m)`.
///
/// Returns the summed value; a disagreement is an [`Error::Inconsistent`].
pub fn telescoping_sum(
    seq: &SequenceSpec,
    m: impl Into<Index>,
    n: impl Into<Index>,
    alternating: bool,
) -> Result<BigInt> {
    let (m, n) = (m.into(), n.into());
    if m.get() < 1 || n.get() < 1 {
        return Err(Error::Domain(format!(
            "telescoping sums need m >= 1 and n >= 1, got m = {m}, n = {n}"
        )));
    }
    let mut total = BigInt::zero();
    for k in 1..=n.get() {
        let mk = m.checked_mul(Index::new(k)?)?;
        let ahead = seq.at(mk.checked_add(m)?)?;
        let here = seq.at(mk)?;
        if alternating {
            total += with_sign(k % 2 == 0, ahead + here);
        } else {
            total += ahead - here;
        }
    }
    let last = seq.at(m.checked_mul(n)?.checked_add(m)?)?;
    let first = seq.at(m)?;
    let boundary = if alternating {
        with_sign(!n.is_odd(), last) + first
    } else {
        last - first
    };
    if total != boundary {
        return Err(Error::Inconsistent(format!(
            "telescoping ({}) for {seq:?}, m = {m}, n = {n}: summed {total}, boundary {boundary}",
            if alternating { "alternating" } else { "plain" },
        )));
    }
    Ok(total)
}
