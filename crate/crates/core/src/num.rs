//! Scalar traits the counting engines and the polynomial code are generic over.

use std::fmt::{Debug, Display};
use std::str::FromStr;

use num_bigint::{BigInt, BigUint};
use num_rational::BigRational;
use num_traits::{CheckedAdd, One, Zero};

/// A nonnegative count produced by an engine.
///
/// Additions are checked so that fixed-width instantiations (`u64`, `u128`)
/// report overflow instead of wrapping. `BigUint` never overflows.
pub trait Count:
    Clone + Debug + Display + FromStr + PartialEq + Eq + Zero + One + CheckedAdd + Send + Sync + 'static
{
    fn to_bigint(&self) -> BigInt;
}

impl Count for u64 {
    fn to_bigint(&self) -> BigInt {
        BigInt::from(*self)
    }
}

impl Count for u128 {
    fn to_bigint(&self) -> BigInt {
        BigInt::from(*self)
    }
}

impl Count for BigUint {
    fn to_bigint(&self) -> BigInt {
        BigInt::from(self.clone())
    }
}

/// Commutative ring with exact arithmetic.
pub trait Ring:
    Clone
    + Debug
    + PartialEq
    + Zero
    + One
    + std::ops::Add<Output = Self>
    + std::ops::Sub<Output = Self>
    + std::ops::Mul<Output = Self>
    + std::ops::Neg<Output = Self>
{
}

impl<T> Ring for T where
    T: Clone
        + Debug
        + PartialEq
        + Zero
        + One
        + std::ops::Add<Output = T>
        + std::ops::Sub<Output = T>
        + std::ops::Mul<Output = T>
        + std::ops::Neg<Output = T>
{
}

/// Division that is only defined when the quotient is exact.
pub trait ExactDiv: Sized {
    /// `Some(q)` with `q * rhs == self`, or `None` if no such `q` exists in the ring.
    fn exact_div(&self, rhs: &Self) -> Option<Self>;
}

macro_rules! exact_div_prim {
    ($($t:ty),*) => {$(
        impl ExactDiv for $t {
            fn exact_div(&self, rhs: &Self) -> Option<Self> {
                if *rhs == 0 || self % rhs != 0 {
                    None
                } else {
                    Some(self / rhs)
                }
            }
        }
    )*};
}

exact_div_prim!(i64, i128);

impl ExactDiv for BigInt {
    fn exact_div(&self, rhs: &Self) -> Option<Self> {
        if rhs.is_zero() {
            return None;
        }
        let (q, r) = num_integer::Integer::div_rem(self, rhs);
        r.is_zero().then_some(q)
    }
}

impl ExactDiv for BigRational {
    fn exact_div(&self, rhs: &Self) -> Option<Self> {
        (!rhs.is_zero()).then(|| self / rhs)
    }
}

/// Ring with exact division: enough for fraction-free elimination.
pub trait IntegralDomain: Ring + ExactDiv {}
impl<T: Ring + ExactDiv> IntegralDomain for T {}

/// Multinomial coefficient `(sum counts)! / prod(count_i!)`.
pub fn multinomial(counts: &[usize]) -> BigUint {
    let mut acc = BigUint::one();
    let mut total = 0usize;
    for &c in counts {
        for j in 1..=c {
            total += 1;
            acc *= BigUint::from(total);
            acc /= BigUint::from(j);
        }
    }
    acc
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn exact_div_rejects_remainders() {
        assert_eq!(7i64.exact_div(&2), None);
        assert_eq!(8i64.exact_div(&2), Some(4));
        assert_eq!(BigInt::from(-9).exact_div(&BigInt::from(3)), Some(BigInt::from(-3)));
        assert_eq!(BigInt::from(1).exact_div(&BigInt::from(0)), None);
    }

    #[test]
    fn multinomial_values() {
        assert_eq!(multinomial(&[]), BigUint::from(1u32));
        assert_eq!(multinomial(&[2, 2]), BigUint::from(6u32));
        assert_eq!(multinomial(&[2, 2, 2]), BigUint::from(90u32));
        assert_eq!(multinomial(&[1; 8]), BigUint::from(40320u32));
    }
}
