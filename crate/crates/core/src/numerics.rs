//! Exact integer and rational arithmetic.
//!
//! Every equality test in the solver (`sumTop == 1`, window sums, interval
//! bounds) is exact, never floating-point. The reference scalar is an
//! arbitrary-precision integer; rationals are ratios of those. A fixed-width
//! `i128` lane exists for instances whose intermediates provably fit, chosen
//! by the solver's dispatcher — it is an optimization of representation, not
//! of semantics: both lanes compute identical values.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::Ratio;
use num_traits::{One, Signed, Zero};
use std::fmt;

/// Arbitrary-precision signed integer, the reference scalar.
pub type Int = BigInt;

/// Exact rational over [`Int`]. Always normalized: gcd(|num|, den) = 1,
/// den > 0, sign on the numerator. Equality is structural on that form.
pub type Rat = Ratio<BigInt>;

/// Signed integer scalars the lab's exact arithmetic runs on.
///
/// Implemented for [`BigInt`] (never overflows) and `i128` (fast lane; the
/// solver only selects it when a conservative magnitude bound guarantees no
/// intermediate can overflow, and workspace profiles keep overflow checks on
/// as a backstop).
pub trait Scalar:
    Integer + Signed + Clone + Send + Sync + fmt::Debug + fmt::Display + 'static
{
    fn from_i64(v: i64) -> Self;
    /// Conversion from the reference scalar; `None` when the value does not fit.
    fn from_bigint(v: &BigInt) -> Option<Self>;
    fn to_bigint(&self) -> BigInt;
}

impl Scalar for BigInt {
    fn from_i64(v: i64) -> Self {
        BigInt::from(v)
    }
    fn from_bigint(v: &BigInt) -> Option<Self> {
        Some(v.clone())
    }
    fn to_bigint(&self) -> BigInt {
        self.clone()
    }
}

impl Scalar for i128 {
    fn from_i64(v: i64) -> Self {
        v as i128
    }
    fn from_bigint(v: &BigInt) -> Option<Self> {
        i128::try_from(v).ok()
    }
    fn to_bigint(&self) -> BigInt {
        BigInt::from(*self)
    }
}

impl Scalar for i64 {
    fn from_i64(v: i64) -> Self {
        v
    }
    fn from_bigint(v: &BigInt) -> Option<Self> {
        i64::try_from(v).ok()
    }
    fn to_bigint(&self) -> BigInt {
        BigInt::from(*self)
    }
}

/// Error for rational construction or division with a zero denominator.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct DivisionByZero;

impl fmt::Display for DivisionByZero {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "division by zero")
    }
}

impl std::error::Error for DivisionByZero {}

/// Builds the normalized rational num/den. The sign ends up on the numerator.
pub fn rational<S: Scalar>(num: S, den: S) -> Result<Ratio<S>, DivisionByZero> {
    if den.is_zero() {
        return Err(DivisionByZero);
    }
    Ok(Ratio::new(num, den))
}

/// Exact rational division with an error instead of a panic on zero divisor.
pub fn rat_div<S: Scalar>(a: &Ratio<S>, b: &Ratio<S>) -> Result<Ratio<S>, DivisionByZero> {
    if b.is_zero() {
        return Err(DivisionByZero);
    }
    Ok(a.clone() / b.clone())
}

/// Unit-interval membership test used by the solver's column scan:
/// `0 < x < 1`, or `0 <= x < 1` when `lower_inclusive`. The upper bound is
/// strict in both modes.
pub fn in_unit_interval<S: Scalar>(x: &Ratio<S>, lower_inclusive: bool) -> bool {
    let lower_ok = if lower_inclusive {
        !x.is_negative()
    } else {
        x.is_positive()
    };
    lower_ok && *x < Ratio::one()
}
