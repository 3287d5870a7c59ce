//! Small helpers over `num`'s arbitrary-precision rationals.
//!
//! All numerical data in this crate is exact: weights, degrees, slopes and
//! intersection numbers are `BigRational`s, never floats.

use num::bigint::Sign;
use num::{BigInt, BigRational, Integer, One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};

/// The scalar type of the whole crate.
pub type Rat = BigRational;

/// `n / d` as an exact rational. Panics if `d == 0`.
pub fn rat(n: i64, d: i64) -> Rat {
    Rat::new(BigInt::from(n), BigInt::from(d))
}

/// The integer `n` as an exact rational.
pub fn int(n: i64) -> Rat {
    Rat::from_integer(BigInt::from(n))
}

/// `base^exp` for small non-negative exponents.
pub fn rat_pow(base: &Rat, exp: u32) -> Rat {
    let mut out = Rat::one();
    for _ in 0..exp {
        out *= base;
    }
    out
}

/// Least common multiple of a positive integer with the denominator of `q`.
pub fn lcm_with_denominator(acc: &BigInt, q: &Rat) -> BigInt {
    acc.lcm(q.denom())
}

/// Converts a positive big integer to `u64`, reporting overflow.
pub fn big_to_u64(n: &BigInt) -> Result<u64> {
    debug_assert!(n.sign() == Sign::Plus, "expected a positive integer");
    n.to_u64().ok_or(Error::LevelOverflow)
}

/// True when `q` is an integer.
pub fn is_integer(q: &Rat) -> bool {
    q.denom().is_one()
}

/// Scales a pair of rationals by the unique positive factor that makes both
/// integral and coprime. `(0, 0)` is returned unchanged. The direction of the
/// pair (as a ray through the origin) is preserved: no sign is flipped.
pub fn primitive_integer_pair(a: &Rat, b: &Rat) -> (Rat, Rat) {
    if a.is_zero() && b.is_zero() {
        return (Rat::zero(), Rat::zero());
    }
    let common = a.denom().lcm(b.denom());
    let na = a.numer() * (&common / a.denom());
    let nb = b.numer() * (&common / b.denom());
    let g = na.gcd(&nb);
    debug_assert!(!g.is_zero());
    (Rat::from_integer(na / &g), Rat::from_integer(nb / g))
}

/// Sign of `q` as -1, 0 or 1.
pub fn sign(q: &Rat) -> i32 {
    if q.is_zero() {
        0
    } else if q.is_positive() {
        1
    } else {
        -1
    }
}
