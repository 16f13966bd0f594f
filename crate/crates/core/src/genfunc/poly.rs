use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::num::{ExactDiv, IntegralDomain, Ring};

/// Dense univariate polynomial, coefficients in ascending degree.
/// Trailing zeros are never stored, so the zero polynomial is empty.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Poly<T> {
    coeffs: Vec<T>,
}

impl<T: Ring> Poly<T> {
    pub fn new(mut coeffs: Vec<T>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        Poly { coeffs }
    }

    pub fn constant(c: T) -> Self {
        Poly::new(vec![c])
    }

    /// `c * x^d`.
    pub fn monomial(c: T, d: usize) -> Self {
        let mut coeffs = vec![T::zero(); d];
        coeffs.push(c);
        Poly::new(coeffs)
    }

    pub fn x() -> Self {
        Poly::monomial(T::one(), 1)
    }

    pub fn coeffs(&self) -> &[T] {
        &self.coeffs
    }

    pub fn into_coeffs(self) -> Vec<T> {
        self.coeffs
    }

    pub fn coeff(&self, i: usize) -> T {
        self.coeffs.get(i).cloned().unwrap_or_else(T::zero)
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn leading(&self) -> Option<&T> {
        self.coeffs.last()
    }

    pub fn scale(&self, c: &T) -> Self {
        Poly::new(self.coeffs.iter().map(|a| a.clone() * c.clone()).collect())
    }

    /// Terms of degree `< n`.
    pub fn truncate(&self, n: usize) -> Self {
        Poly::new(self.coeffs.iter().take(n).cloned().collect())
    }

    /// Product modulo `x^n`.
    pub fn mul_truncated(&self, rhs: &Self, n: usize) -> Self {
        let mut out = vec![T::zero(); n.min(self.coeffs.len() + rhs.coeffs.len())];
        for (i, a) in self.coeffs.iter().enumerate().take(n) {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate().take(n - i) {
                out[i + j] = out[i + j].clone() + a.clone() * b.clone();
            }
        }
        Poly::new(out)
    }

    pub fn eval(&self, x: &T) -> T {
        self.coeffs
            .iter()
            .rev()
            .fold(T::zero(), |acc, c| acc * x.clone() + c.clone())
    }

    /// `x^n p(1/x)`; requires `n >= degree`.
    pub fn reversed(&self, n: usize) -> Self {
        assert!(self.degree().is_none_or(|d| d <= n), "reversal length below degree");
        let mut coeffs = self.coeffs.clone();
        coeffs.resize(n + 1, T::zero());
        coeffs.reverse();
        Poly::new(coeffs)
    }

    /// True iff every nonzero term has degree divisible by `r`.
    pub fn supported_on_multiples(&self, r: usize) -> bool {
        self.coeffs.iter().enumerate().all(|(i, c)| c.is_zero() || i % r == 0)
    }

    /// Substitutes `x^r -> x`. `None` if some term's degree is not a multiple of `r`.
    pub fn compress(&self, r: usize) -> Option<Self> {
        self.supported_on_multiples(r)
            .then(|| Poly::new(self.coeffs.iter().step_by(r).cloned().collect()))
    }

    pub fn map<U: Ring>(&self, f: impl Fn(&T) -> U) -> Poly<U> {
        Poly::new(self.coeffs.iter().map(f).collect())
    }
}

impl<T: IntegralDomain> Poly<T> {
    /// Quotient and remainder; `None` if a leading-coefficient division is inexact.
    pub fn div_rem(&self, rhs: &Self) -> Option<(Self, Self)> {
        let d = rhs.degree()?;
        let lead = rhs.leading()?.clone();
        let mut rem = self.coeffs.clone();
        if rem.len() <= d {
            return Some((Poly::zero(), self.clone()));
        }
        let mut quot = vec![T::zero(); rem.len() - d];
        for pos in (d..rem.len()).rev() {
            if rem[pos].is_zero() {
                continue;
            }
            let q = rem[pos].exact_div(&lead)?;
            for (j, c) in rhs.coeffs.iter().enumerate() {
                let idx = pos - d + j;
                rem[idx] = rem[idx].clone() - q.clone() * c.clone();
            }
            quot[pos - d] = q;
        }
        Some((Poly::new(quot), Poly::new(rem)))
    }
}

impl<T: IntegralDomain> ExactDiv for Poly<T> {
    fn exact_div(&self, rhs: &Self) -> Option<Self> {
        let (q, r) = self.div_rem(rhs)?;
        r.is_zero().then_some(q)
    }
}

impl<T: Ring> Zero for Poly<T> {
    fn zero() -> Self {
        Poly { coeffs: Vec::new() }
    }

    fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }
}

impl<T: Ring> One for Poly<T> {
    fn one() -> Self {
        Poly::constant(T::one())
    }
}

impl<T: Ring> Add for Poly<T> {
    type Output = Poly<T>;

    fn add(self, rhs: Self) -> Self {
        let (mut long, short) = if self.coeffs.len() >= rhs.coeffs.len() {
            (self, rhs)
        } else {
            (rhs, self)
        };
        for (a, b) in long.coeffs.iter_mut().zip(short.coeffs) {
            *a = a.clone() + b;
        }
        Poly::new(long.coeffs)
    }
}

impl<T: Ring> Neg for Poly<T> {
    type Output = Poly<T>;

    fn neg(self) -> Self {
        Poly {
            coeffs: self.coeffs.into_iter().map(|c| -c).collect(),
        }
    }
}

impl<T: Ring> Sub for Poly<T> {
    type Output = Poly<T>;

    fn sub(self, rhs: Self) -> Self {
        self + (-rhs)
    }
}

impl<T: Ring> Mul for Poly<T> {
    type Output = Poly<T>;

    fn mul(self, rhs: Self) -> Self {
        if self.is_zero() || rhs.is_zero() {
            return Poly::zero();
        }
        let n = self.coeffs.len() + rhs.coeffs.len() - 1;
        self.mul_truncated(&rhs, n)
    }
}

pub type IntPoly = Poly<BigInt>;
pub type RatPoly = Poly<BigRational>;

impl IntPoly {
    pub fn from_i64(coeffs: &[i64]) -> Self {
        Poly::new(coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    /// gcd of the coefficients (nonnegative; zero for the zero polynomial).
    pub fn content(&self) -> BigInt {
        self.coeffs.iter().fold(BigInt::zero(), |g, c| g.gcd(c))
    }

    pub fn to_rational(&self) -> RatPoly {
        self.map(|c| BigRational::from_integer(c.clone()))
    }

    /// Divided by its content, leading coefficient positive.
    pub fn primitive_part(&self) -> IntPoly {
        if self.is_zero() {
            return self.clone();
        }
        let mut c = self.content();
        if self.leading().is_some_and(Signed::is_negative) {
            c = -c;
        }
        self.map(|a| a / &c)
    }

    /// `lc(rhs)^e * self mod rhs` for the smallest `e` that keeps it integral.
    pub fn pseudo_rem(&self, rhs: &Self) -> IntPoly {
        let d = rhs.degree().expect("pseudo-remainder by zero");
        let lead = rhs.coeffs[d].clone();
        let mut rem = self.coeffs.clone();
        while rem.len() > d {
            let top = rem.len() - 1;
            let q = rem[top].clone();
            if !q.is_zero() {
                for c in rem.iter_mut() {
                    *c *= &lead;
                }
                for (j, b) in rhs.coeffs.iter().enumerate() {
                    rem[top - d + j] -= &q * b;
                }
            }
            rem.pop();
            // trim trailing zeros so the loop tracks the true degree
            while rem.last().is_some_and(Zero::is_zero) {
                rem.pop();
            }
        }
        Poly::new(rem)
    }

    /// Primitive gcd via the primitive remainder sequence. Agrees with the
    /// gcd over the rationals up to a scalar.
    pub fn primitive_gcd(&self, other: &Self) -> IntPoly {
        let (mut a, mut b) = (self.primitive_part(), other.primitive_part());
        if a.degree() < b.degree() {
            std::mem::swap(&mut a, &mut b);
        }
        while !b.is_zero() {
            let r = a.pseudo_rem(&b).primitive_part();
            a = b;
            b = r;
        }
        a
    }
}

impl RatPoly {
    /// Scales by the lcm of the denominators; the result has integer coefficients.
    pub fn clear_denominators(&self) -> (IntPoly, BigInt) {
        let lcm = self.coeffs.iter().fold(BigInt::one(), |l, c| l.lcm(c.denom()));
        let ints = self.map(|c| (c * BigRational::from_integer(lcm.clone())).to_integer());
        (ints, lcm)
    }

    /// Monic gcd over the rationals (zero if both inputs are zero).
    pub fn gcd(&self, other: &Self) -> Self {
        let (mut a, mut b) = (self.clone(), other.clone());
        while !b.is_zero() {
            let (_, r) = a.div_rem(&b).expect("division over a field is exact");
            a = b;
            b = r;
        }
        match a.leading().cloned() {
            Some(lead) => a.scale(&lead.recip()),
            None => a,
        }
    }
}

fn write_term<T: fmt::Display + Signed>(
    f: &mut fmt::Formatter<'_>,
    c: &T,
    deg: usize,
    var: &str,
    first: bool,
) -> fmt::Result {
    let negative = c.is_negative();
    let mag = c.abs();
    match (first, negative) {
        (true, true) => f.write_str("-")?,
        (true, false) => {}
        (false, true) => f.write_str(" - ")?,
        (false, false) => f.write_str(" + ")?,
    }
    let unit = mag.is_one();
    match deg {
        0 => write!(f, "{mag}"),
        1 if unit => write!(f, "{var}"),
        1 => write!(f, "{mag}*{var}"),
        _ if unit => write!(f, "{var}^{deg}"),
        _ => write!(f, "{mag}*{var}^{deg}"),
    }
}

/// Ascending terms with explicit signs, e.g. `1 - 7*x + 11*x^2`.
impl<T: Ring + fmt::Display + Signed> fmt::Display for Poly<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let mut first = true;
        for (d, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            write_term(f, c, d, "x", first)?;
            first = false;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn p(c: &[i64]) -> IntPoly {
        IntPoly::from_i64(c)
    }

    #[test]
    fn normalization_and_degree() {
        assert_eq!(p(&[1, 2, 0, 0]).coeffs().len(), 2);
        assert_eq!(p(&[0, 0]).degree(), None);
        assert_eq!(p(&[3]).degree(), Some(0));
        assert_eq!(IntPoly::x().degree(), Some(1));
    }

    #[test]
    fn arithmetic() {
        assert_eq!(p(&[1, 1]) * p(&[1, -1]), p(&[1, 0, -1]));
        assert_eq!(p(&[1, 2]) + p(&[-1, -2, 3]), p(&[0, 0, 3]));
        assert_eq!(p(&[1, 2]) - p(&[1, 2]), IntPoly::zero());
        assert_eq!(p(&[1, 1, 1]).mul_truncated(&p(&[1, 1]), 2), p(&[1, 2]));
        assert_eq!(p(&[1, -3, 2]).eval(&BigInt::from(2)), BigInt::from(3));
    }

    #[test]
    fn exact_division() {
        assert_eq!(p(&[-1, 0, 1]).exact_div(&p(&[1, 1])), Some(p(&[-1, 1])));
        assert_eq!(p(&[1, 0, 1]).exact_div(&p(&[1, 1])), None);
        assert_eq!(p(&[1, 2]).exact_div(&p(&[0, 2])), None);
        assert_eq!(p(&[2, 4]).exact_div(&p(&[2])), Some(p(&[1, 2])));
    }

    #[test]
    fn reversal_and_compression() {
        assert_eq!(p(&[0, -2, 1]).reversed(2), p(&[1, -2]));
        assert_eq!(p(&[0, -2, 1]).reversed(3), p(&[0, 1, -2]));
        assert_eq!(p(&[1, 0, -3, 0, 5]).compress(2), Some(p(&[1, -3, 5])));
        assert_eq!(p(&[1, 1]).compress(2), None);
    }

    #[test]
    fn rational_gcd() {
        let a = (p(&[1, -2]) * p(&[1, 1]) * p(&[3, 1])).to_rational();
        let b = (p(&[1, -2]) * p(&[2, 5])).to_rational();
        let g = a.gcd(&b);
        let (gi, _) = g.clear_denominators();
        assert_eq!(gi, p(&[-1, 2]));
    }

    #[test]
    fn display() {
        assert_eq!(p(&[1, -1]).to_string(), "1 - x");
        assert_eq!(p(&[0, 0, -2, 7]).to_string(), "-2*x^2 + 7*x^3");
        assert_eq!(p(&[-1, 1, 1]).to_string(), "-1 + x + x^2");
        assert_eq!(IntPoly::zero().to_string(), "0");
    }

    fn poly_strategy() -> impl Strategy<Value = IntPoly> {
        prop::collection::vec(-9i64..10, 0..6).prop_map(|c| IntPoly::from_i64(&c))
    }

    #[test]
    fn integer_gcd() {
        let a = p(&[1, -2]) * p(&[1, 1]) * p(&[3, 1]);
        let b = p(&[1, -2]) * p(&[2, 5]).scale(&BigInt::from(6));
        assert_eq!(a.primitive_gcd(&b), p(&[-1, 2]));
        assert_eq!(p(&[4, 6]).primitive_gcd(&IntPoly::zero()), p(&[2, 3]));
        assert_eq!(p(&[3]).primitive_gcd(&p(&[1, 1])), p(&[1]));
        assert_eq!(p(&[2, 0, 1]).pseudo_rem(&p(&[1, 2])), p(&[9]));
    }

    proptest! {
        #[test]
        fn integer_gcd_matches_rational_gcd(a in poly_strategy(), b in poly_strategy(), c in poly_strategy()) {
            prop_assume!(!c.is_zero());
            let (a, b) = (a * c.clone(), b * c);
            let zi = a.primitive_gcd(&b);
            let (q, _) = a.to_rational().gcd(&b.to_rational()).clear_denominators();
            prop_assert_eq!(zi, q.primitive_part());
        }

        #[test]
        fn product_divides_back(a in poly_strategy(), b in poly_strategy()) {
            prop_assume!(!b.is_zero());
            let prod = a.clone() * b.clone();
            prop_assert_eq!(prod.exact_div(&b), Some(a));
        }

        #[test]
        fn evaluation_is_a_homomorphism(a in poly_strategy(), b in poly_strategy(), x in -5i64..6) {
            let x = BigInt::from(x);
            prop_assert_eq!((a.clone() * b.clone()).eval(&x), a.eval(&x) * b.eval(&x));
            prop_assert_eq!((a.clone() + b.clone()).eval(&x), a.eval(&x) + b.eval(&x));
        }
    }
}
