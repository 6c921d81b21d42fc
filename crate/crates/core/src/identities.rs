//! Both sides of the addition, squaring and fourth-power identities that the
//! closed forms are assembled from.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::kernel::{fib, fib_lucas, lucas, with_sign, Index};

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum IdentityId {
    /// `F(u+v) - (-1)^v F(u-v) = F(v) L(u)`
    FibAddSub,
    /// `L(u+v) + (-1)^v L(u-v) = L(v) L(u)`
    LucasAddAdd,
    /// `L(u+v) - (-1)^v L(u-v) = 5 F(v) F(u)`
    LucasAddSub5F,
    /// `5 F(u)^2 = L(2u) - 2 (-1)^u`
    FibSquare,
    /// `L(v)^2 = L(2v) + 2 (-1)^v`
    LucasSquare,
    /// `F(2u) = F(u) L(u)`
    FibDouble,
    /// `25 F(w)^4 = L(4w) + 4 (-1)^(w-1) L(2w) + 6`
    FibFourthExpansion,
    /// `L(w)^4 = L(4w) - 4 (-1)^(w-1) L(2w) + 6`
    LucasFourthExpansion,
    /// `L(n) L(n+1) = L(2n+1) - (-1)^(n-1)`
    LucasProductShift,
}

impl IdentityId {
    pub const ALL: [IdentityId; 9] = [
        IdentityId::FibAddSub,
        IdentityId::LucasAddAdd,
        IdentityId::LucasAddSub5F,
        IdentityId::FibSquare,
        IdentityId::LucasSquare,
        IdentityId::FibDouble,
        IdentityId::FibFourthExpansion,
        IdentityId::LucasFourthExpansion,
        IdentityId::LucasProductShift,
    ];

    pub fn arity(self) -> usize {
        match self {
            IdentityId::FibAddSub | IdentityId::LucasAddAdd | IdentityId::LucasAddSub5F => 2,
            _ => 1,
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            IdentityId::FibAddSub => "fib-add-sub",
            IdentityId::LucasAddAdd => "lucas-add-add",
            IdentityId::LucasAddSub5F => "lucas-add-sub5-f",
            IdentityId::FibSquare => "fib-square",
            IdentityId::LucasSquare => "lucas-square",
            IdentityId::FibDouble => "fib-double",
            IdentityId::FibFourthExpansion => "fib-fourth-expansion",
            IdentityId::LucasFourthExpansion => "lucas-fourth-expansion",
            IdentityId::LucasProductShift => "lucas-product-shift",
        }
    }
}

impl fmt::Display for IdentityId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for IdentityId {
    type Err = Error;

    /// Accepts the kebab-case name or the CamelCase variant name.
    fn from_str(s: &str) -> Result<Self> {
        IdentityId::ALL
            .into_iter()
            .find(|id| id.name() == s || format!("{id:?}") == s)
            .ok_or_else(|| {
                let known: Vec<_> = IdentityId::ALL.iter().map(|id| id.name()).collect();
                Error::Parameter(format!("unknown identity `{s}` (expected one of {})", known.join(", ")))
            })
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IdentityInstance {
    pub id: IdentityId,
    pub args: Vec<Index>,
    pub lhs: BigInt,
    pub rhs: BigInt,
}

impl IdentityInstance {
    pub fn holds(&self) -> bool {
        self.lhs == self.rhs
    }
}

/// Evaluates both sides of `id` exactly as written.
pub fn eval_identity(id: IdentityId, args: &[Index]) -> Result<IdentityInstance> {
    if args.len() != id.arity() {
        return Err(Error::Parameter(format!(
            "{id} takes {} argument(s), got {}",
            id.arity(),
            args.len()
        )));
    }
    let (lhs, rhs) = match id {
        IdentityId::FibAddSub => {
            let (u, v) = (args[0], args[1]);
            let lhs = fib(u.checked_add(v)?) - with_sign(v.is_odd(), fib(u.checked_sub(v)?));
            (lhs, fib(v) * lucas(u))
        }
        IdentityId::LucasAddAdd => {
            let (u, v) = (args[0], args[1]);
            let lhs = lucas(u.checked_add(v)?) + with_sign(v.is_odd(), lucas(u.checked_sub(v)?));
            (lhs, lucas(v) * lucas(u))
        }
        IdentityId::LucasAddSub5F => {
            let (u, v) = (args[0], args[1]);
            let lhs = lucas(u.checked_add(v)?) - with_sign(v.is_odd(), lucas(u.checked_sub(v)?));
            (lhs, 5 * fib(v) * fib(u))
        }
        IdentityId::FibSquare => {
            let u = args[0];
            let f = fib(u);
            (5 * &f * &f, lucas(u.scaled(2)?) - with_sign(u.is_odd(), BigInt::from(2)))
        }
        IdentityId::LucasSquare => {
            let v = args[0];
            let l = lucas(v);
            (&l * &l, lucas(v.scaled(2)?) + with_sign(v.is_odd(), BigInt::from(2)))
        }
        IdentityId::FibDouble => {
            let u = args[0];
            let (f, l) = fib_lucas(u);
            (fib(u.scaled(2)?), f * l)
        }
        IdentityId::FibFourthExpansion => {
            let w = args[0];
            // (-1)^(w-1): odd exponent when w is even.
            let middle = with_sign(!w.is_odd(), 4 * lucas(w.scaled(2)?));
            (25 * fib(w).pow(4), lucas(w.scaled(4)?) + middle + 6)
        }
        IdentityId::LucasFourthExpansion => {
            let w = args[0];
            let middle = with_sign(!w.is_odd(), 4 * lucas(w.scaled(2)?));
            (lucas(w).pow(4), lucas(w.scaled(4)?) - middle + 6)
        }
        IdentityId::LucasProductShift => {
            let n = args[0];
            let lhs = lucas(n) * lucas(n.offset(1)?);
            let rhs = lucas(n.scaled(2)?.offset(1)?) - with_sign(!n.is_odd(), BigInt::from(1));
            (lhs, rhs)
        }
    };
    Ok(IdentityInstance { id, args: args.to_vec(), lhs, rhs })
}
