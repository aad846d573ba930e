//! Integer scalars the algebra is generic over.
//!
//! Everything in this crate is exact. `BigInt` is the default (see the
//! aliases at the crate root); `i64`/`i128` are handy for fast exhaustive
//! tests where overflow is impossible by construction.

use std::fmt::{Debug, Display};
use std::hash::Hash;

use num_integer::Integer;
use num_traits::{FromPrimitive, Signed, ToPrimitive};

/// An exact Euclidean integer type.
pub trait Scalar:
    Integer + Signed + Clone + Debug + Display + Hash + FromPrimitive + ToPrimitive + Send + Sync + 'static
{
    fn of(v: i64) -> Self {
        Self::from_i64(v).expect("scalar type cannot represent an i64 value")
    }

    /// Parses a base-10 integer literal.
    fn parse_decimal(s: &str) -> Option<Self> {
        Self::from_str_radix(s.trim(), 10).ok()
    }
}

impl<T> Scalar for T where
    T: Integer + Signed + Clone + Debug + Display + Hash + FromPrimitive + ToPrimitive + Send + Sync + 'static
{
}

/// Least non-negative residue of `x` modulo `d > 0`.
pub fn modulo<T: Scalar>(x: &T, d: &T) -> T {
    x.mod_floor(d)
}

/// Inverse of `a` modulo `m`, when `gcd(a, m) = 1`.
pub fn mod_inverse<T: Scalar>(a: &T, m: &T) -> Option<T> {
    if m.is_one() {
        return Some(T::zero());
    }
    let e = a.mod_floor(m).extended_gcd(m);
    if e.gcd.is_one() {
        Some(e.x.mod_floor(m))
    } else {
        None
    }
}
