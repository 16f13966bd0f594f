use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{Signed, Zero};
use serde::{Deserialize, Serialize};

use super::poly::IntPoly;
use crate::error::{Error, Result};
use crate::num::ExactDiv;

/// `N(x) / D(x)` with integer coefficients and `D(0) != 0`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RationalGF {
    numerator: IntPoly,
    denominator: IntPoly,
}

impl RationalGF {
    pub fn new(numerator: IntPoly, denominator: IntPoly) -> Result<Self> {
        if denominator.coeff(0).is_zero() {
            return Err(Error::Input("denominator must have a nonzero constant term".into()));
        }
        Ok(RationalGF { numerator, denominator })
    }

    pub fn from_i64(numerator: &[i64], denominator: &[i64]) -> Result<Self> {
        RationalGF::new(IntPoly::from_i64(numerator), IntPoly::from_i64(denominator))
    }

    pub fn numerator(&self) -> &IntPoly {
        &self.numerator
    }

    pub fn denominator(&self) -> &IntPoly {
        &self.denominator
    }

    /// Lowest terms over the rationals, integer coefficients with no common
    /// factor, and `D(0) > 0`. Two GFs for the same series have the same
    /// canonical form.
    pub fn canonical(&self) -> RationalGF {
        let g = self.numerator.primitive_gcd(&self.denominator);
        let (mut num, mut den) = (self.numerator.clone(), self.denominator.clone());
        if g.degree().is_some_and(|d| d > 0) {
            // g is primitive, so both quotients stay integral
            num = num.exact_div(&g).expect("gcd divides the numerator");
            den = den.exact_div(&g).expect("gcd divides the denominator");
        }
        let mut unit = num.content().gcd(&den.content());
        if den.coeff(0).is_negative() {
            unit = -unit;
        }
        RationalGF {
            numerator: num.map(|c| c / &unit),
            denominator: den.map(|c| c / &unit),
        }
    }

    /// Same series, compared through canonical forms.
    pub fn same_function(&self, other: &RationalGF) -> bool {
        self.canonical() == other.canonical()
    }

    /// Taylor coefficients `0..=n`. Fails with a data error on a
    /// non-integral coefficient.
    pub fn expand_series(&self, n: usize) -> Result<Vec<BigInt>> {
        let d0 = BigRational::from_integer(self.denominator.coeff(0));
        let den: Vec<BigRational> = self
            .denominator
            .coeffs()
            .iter()
            .map(|c| BigRational::from_integer(c.clone()))
            .collect();
        let mut out: Vec<BigRational> = Vec::with_capacity(n + 1);
        for i in 0..=n {
            let mut acc = BigRational::from_integer(self.numerator.coeff(i));
            for (j, dj) in den.iter().enumerate().skip(1).take(i) {
                acc -= dj * &out[i - j];
            }
            let c = acc / &d0;
            if !c.is_integer() {
                return Err(Error::Data(format!("coefficient {i} of {self} is {c}, not an integer")));
            }
            out.push(c);
        }
        Ok(out.into_iter().map(|c| c.to_integer()).collect())
    }

    pub fn record(&self, status: GfStatus) -> GfRecord {
        let strings = |p: &IntPoly| p.coeffs().iter().map(ToString::to_string).collect();
        GfRecord {
            numerator: strings(&self.numerator),
            denominator: strings(&self.denominator),
            variable: "x".into(),
            status,
        }
    }
}

impl fmt::Display for RationalGF {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}) / ({})", self.numerator, self.denominator)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum GfStatus {
    Rigorous,
    Conjectural,
}

/// JSON shape of a generating function; coefficients are decimal strings.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GfRecord {
    pub numerator: Vec<String>,
    pub denominator: Vec<String>,
    pub variable: String,
    pub status: GfStatus,
}

impl GfRecord {
    pub fn to_gf(&self) -> Result<RationalGF> {
        let parse = |v: &[String]| -> Result<IntPoly> {
            v.iter()
                .map(|s| {
                    s.parse::<BigInt>()
                        .map_err(|e| Error::Data(format!("bad coefficient {s:?}: {e}")))
                })
                .collect::<Result<Vec<_>>>()
                .map(IntPoly::new)
        };
        RationalGF::new(parse(&self.numerator)?, parse(&self.denominator)?)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn big(v: &[i64]) -> Vec<BigInt> {
        v.iter().map(|&x| BigInt::from(x)).collect()
    }

    fn reference_gf() -> RationalGF {
        RationalGF::from_i64(&[1, -6, 7, -2], &[1, -8, 17, -11, 2]).unwrap()
    }

    #[test]
    fn expansions() {
        let geo = RationalGF::from_i64(&[1], &[1, -2]).unwrap();
        assert_eq!(geo.expand_series(4).unwrap(), big(&[1, 2, 4, 8, 16]));
        assert_eq!(reference_gf().expand_series(4).unwrap(), big(&[1, 2, 6, 23, 102]));
        let k3 = RationalGF::from_i64(&[1, -1], &[1, -2]).unwrap();
        assert_eq!(k3.expand_series(4).unwrap(), big(&[1, 1, 2, 4, 8]));
    }

    #[test]
    fn non_integral_expansion_is_a_data_error() {
        let half = RationalGF::from_i64(&[1], &[2, -1]).unwrap();
        assert!(matches!(half.expand_series(2), Err(Error::Data(_))));
    }

    #[test]
    fn zero_constant_denominator_rejected() {
        assert!(RationalGF::from_i64(&[1], &[0, 1]).is_err());
    }

    #[test]
    fn canonical_form() {
        // (2 - 2x^2) / (-2 + 2x) = -(1 + x)
        let g = RationalGF::from_i64(&[2, 0, -2], &[-2, 2]).unwrap().canonical();
        assert_eq!(g, RationalGF::from_i64(&[-1, -1], &[1]).unwrap());
        let sign_flipped = RationalGF::from_i64(&[-1, 6, -7, 2], &[-1, 8, -17, 11, -2]).unwrap();
        assert!(sign_flipped.same_function(&reference_gf()));
        assert_eq!(
            reference_gf().to_string(),
            "(1 - 6*x + 7*x^2 - 2*x^3) / (1 - 8*x + 17*x^2 - 11*x^3 + 2*x^4)"
        );
    }

    #[test]
    fn json_round_trip() {
        let rec = reference_gf().record(GfStatus::Conjectural);
        let text = serde_json::to_string(&rec).unwrap();
        assert!(text.contains("\"status\":\"conjectural\""));
        assert!(text.contains("\"numerator\":[\"1\",\"-6\",\"7\",\"-2\"]"));
        let back: GfRecord = serde_json::from_str(&text).unwrap();
        assert_eq!(back.to_gf().unwrap(), reference_gf());
    }

    fn gf_strategy() -> impl Strategy<Value = RationalGF> {
        (
            prop::collection::vec(-6i64..7, 0..4),
            (
                prop::sample::select(vec![-3i64, -1, 1, 2]),
                prop::collection::vec(-6i64..7, 0..4),
            ),
            prop::collection::vec(-3i64..4, 0..3),
        )
            .prop_map(|(n, (d0, d), common)| {
                let mut den = vec![d0];
                den.extend(d);
                let mut c = vec![1];
                c.extend(common);
                let c = IntPoly::from_i64(&c);
                RationalGF::new(IntPoly::from_i64(&n) * c.clone(), IntPoly::from_i64(&den) * c).unwrap()
            })
    }

    proptest! {
        #[test]
        fn canonicalization_is_idempotent(g in gf_strategy()) {
            let c = g.canonical();
            prop_assert_eq!(c.canonical(), c.clone());
            prop_assert!(c.denominator().coeff(0).is_positive());
        }

        #[test]
        fn canonical_form_keeps_the_series(g in gf_strategy()) {
            // compare over Q: expand by exact rational long division
            let c = g.canonical();
            let expand = |h: &RationalGF| -> Vec<BigRational> {
                let d0 = BigRational::from_integer(h.denominator().coeff(0));
                let mut out: Vec<BigRational> = Vec::new();
                for i in 0..8 {
                    let mut acc = BigRational::from_integer(h.numerator().coeff(i));
                    for j in 1..=i {
                        acc -= BigRational::from_integer(h.denominator().coeff(j)) * &out[i - j];
                    }
                    out.push(acc / &d0);
                }
                out
            };
            prop_assert_eq!(expand(&g), expand(&c));
        }
    }
}
