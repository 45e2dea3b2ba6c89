//! Exact integer scalars.

use std::fmt::{Debug, Display};
use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{CheckedAdd, CheckedMul, CheckedSub, FromPrimitive, Signed};

use crate::error::{Error, Result};

/// Signed exact integer usable as a polynomial coefficient.
///
/// Fixed-width types are allowed; every operation the crate performs on them
/// goes through the checked variants so overflow surfaces as
/// [`Error::Overflow`].
pub trait ExactInt:
    Clone
    + Debug
    + Display
    + FromStr
    + Eq
    + Ord
    + Signed
    + Integer
    + CheckedAdd
    + CheckedSub
    + CheckedMul
    + FromPrimitive
    + Send
    + Sync
    + 'static
{
    fn try_add(&self, rhs: &Self) -> Result<Self> {
        self.checked_add(rhs).ok_or(Error::Overflow)
    }

    fn try_sub(&self, rhs: &Self) -> Result<Self> {
        self.checked_sub(rhs).ok_or(Error::Overflow)
    }

    fn try_mul(&self, rhs: &Self) -> Result<Self> {
        self.checked_mul(rhs).ok_or(Error::Overflow)
    }

    fn try_from_u64(v: u64) -> Result<Self> {
        Self::from_u64(v).ok_or(Error::Overflow)
    }

    fn try_from_u128(v: u128) -> Result<Self> {
        Self::from_u128(v).ok_or(Error::Overflow)
    }

    fn try_from_i64(v: i64) -> Result<Self> {
        Self::from_i64(v).ok_or(Error::Overflow)
    }
}

impl ExactInt for i64 {}
impl ExactInt for i128 {}
impl ExactInt for BigInt {}
