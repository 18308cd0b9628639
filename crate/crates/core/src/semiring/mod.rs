//! Commutative unital semirings with zero and a distinguished element `α` of
//! infinite multiplicative order, together with dense square matrices over
//! them.
//!
//! Two instances are provided: the tropical semiring (`max`, `+`) with
//! `α = 1`, and the natural numbers (`+`, `×`) with `α = 2`. Every
//! representation in this crate is generic over [`Semiring`], so faithfulness
//! can be checked in both.

mod matrix;

use std::fmt;
use std::hash::Hash;
use std::str::FromStr;

use num_bigint::BigUint;
use serde_json::Value;

use crate::error::{Error, Result};
use crate::words::{content, Word};

pub use matrix::{BlockDiag, Matrix};

pub trait Semiring: Clone + Eq + Hash + fmt::Debug {
    /// Name used in JSON exports.
    const NAME: &'static str;

    fn zero() -> Self;
    fn one() -> Self;
    /// The fixed element of infinite multiplicative order.
    fn alpha() -> Self;
    fn add(&self, rhs: &Self) -> Self;
    fn mul(&self, rhs: &Self) -> Self;

    fn is_zero(&self) -> bool {
        *self == Self::zero()
    }

    fn to_json(&self) -> Value;
}

/// `α^i`, with `α^0 = 1`.
pub fn alpha_pow<S: Semiring>(i: usize) -> S {
    let mut result = S::one();
    let mut base = S::alpha();
    let mut exp = i;
    while exp > 0 {
        if exp & 1 == 1 {
            result = result.mul(&base);
        }
        exp >>= 1;
        if exp > 0 {
            base = base.mul(&base);
        }
    }
    result
}

/// The content representation: the diagonal `n × n` matrix whose `(x, x)`
/// entry is `α^{|w|_x}`.
pub fn c_rep<S: Semiring>(w: &Word, n: u32) -> Result<Matrix<S>> {
    w.check_rank(n)?;
    let counts = content(w);
    Ok(Matrix::diagonal(
        (1..=n).map(|x| alpha_pow(counts.count(x))).collect(),
    ))
}

/// Element of the tropical semiring `(ℤ ∪ {−∞}, max, +)`.
///
/// Arithmetic on finite values is checked; overflow panics rather than wrap.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub enum Tropical {
    NegInf,
    Finite(i64),
}

impl Semiring for Tropical {
    const NAME: &'static str = "tropical";

    fn zero() -> Self {
        Tropical::NegInf
    }

    fn one() -> Self {
        Tropical::Finite(0)
    }

    fn alpha() -> Self {
        Tropical::Finite(1)
    }

    fn add(&self, rhs: &Self) -> Self {
        (*self).max(*rhs)
    }

    fn mul(&self, rhs: &Self) -> Self {
        match (self, rhs) {
            (Tropical::Finite(a), Tropical::Finite(b)) => {
                Tropical::Finite(a.checked_add(*b).expect("tropical product overflowed i64"))
            }
            _ => Tropical::NegInf,
        }
    }

    fn to_json(&self) -> Value {
        match self {
            Tropical::NegInf => Value::from("-inf"),
            Tropical::Finite(v) => Value::from(*v),
        }
    }
}

impl fmt::Display for Tropical {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Tropical::NegInf => f.write_str("-inf"),
            Tropical::Finite(v) => write!(f, "{v}"),
        }
    }
}

/// Element of the semiring of non-negative integers, arbitrary precision.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub struct Natural(pub BigUint);

impl Natural {
    pub fn new(v: u64) -> Self {
        Natural(BigUint::from(v))
    }
}

impl Semiring for Natural {
    const NAME: &'static str = "natural";

    fn zero() -> Self {
        Natural(BigUint::ZERO)
    }

    fn one() -> Self {
        Natural(BigUint::from(1u8))
    }

    fn alpha() -> Self {
        Natural(BigUint::from(2u8))
    }

    fn add(&self, rhs: &Self) -> Self {
        Natural(&self.0 + &rhs.0)
    }

    fn mul(&self, rhs: &Self) -> Self {
        Natural(&self.0 * &rhs.0)
    }

    fn is_zero(&self) -> bool {
        self.0 == BigUint::ZERO
    }

    fn to_json(&self) -> Value {
        match u64::try_from(&self.0) {
            Ok(v) => Value::from(v),
            Err(_) => Value::from(self.0.to_string()),
        }
    }
}

impl fmt::Display for Natural {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

/// Runtime selector for the two built-in semirings.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub enum SemiringKind {
    Tropical,
    Natural,
}

impl SemiringKind {
    pub const ALL: [SemiringKind; 2] = [SemiringKind::Tropical, SemiringKind::Natural];

    pub fn name(self) -> &'static str {
        match self {
            SemiringKind::Tropical => Tropical::NAME,
            SemiringKind::Natural => Natural::NAME,
        }
    }
}

impl FromStr for SemiringKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "tropical" => Ok(SemiringKind::Tropical),
            "natural" => Ok(SemiringKind::Natural),
            other => Err(Error::UnknownSemiring(other.to_string())),
        }
    }
}

impl fmt::Display for SemiringKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}
