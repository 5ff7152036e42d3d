//! Scalars of the max-plus semiring: exact rationals extended with eps = -inf.
//!
//! The semiring is (R ∪ {-inf}, ⊕, ⊗) with
//!
//! | op  | meaning      | neutral element |
//! |-----|--------------|-----------------|
//! | ⊕  | max           | eps (-inf)      |
//! | ⊗  | ordinary +    | 0               |
//!
//! eps is absorbing for ⊗: `eps ⊗ x = eps`. All finite values are exact
//! rationals in canonical form (reduced fraction, positive denominator), so
//! every operation in this crate is exact and comparisons use equality, never
//! a tolerance.

use std::fmt;
use std::str::FromStr;

use num::{BigInt, BigRational, Signed, ToPrimitive, Zero};

/// Exact rational number with arbitrary-precision numerator and denominator.
pub type Rational = BigRational;

/// An element of the max-plus semiring: eps (-inf) or an exact rational.
///
/// `NegInf` is declared first so the derived ordering puts eps below every
/// finite value, which makes `Ord::max` agree with ⊕.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Scalar {
    NegInf,
    Finite(Rational),
}

impl Scalar {
    /// The null element eps = -inf: neutral for ⊕, absorbing for ⊗.
    pub fn eps() -> Self {
        Scalar::NegInf
    }

    /// Finite zero, the neutral element of ⊗.
    pub fn zero() -> Self {
        Scalar::Finite(Rational::zero())
    }

    /// Finite rational p/q. Panics if `q == 0`.
    pub fn ratio(p: i64, q: i64) -> Self {
        Scalar::Finite(Rational::new(BigInt::from(p), BigInt::from(q)))
    }

    pub fn is_eps(&self) -> bool {
        matches!(self, Scalar::NegInf)
    }

    pub fn is_finite(&self) -> bool {
        !self.is_eps()
    }

    /// The finite value, if any.
    pub fn as_rational(&self) -> Option<&Rational> {
        match self {
            Scalar::NegInf => None,
            Scalar::Finite(r) => Some(r),
        }
    }

    /// Max-plus addition x ⊕ y = max(x, y).
    pub fn oplus(&self, other: &Scalar) -> Scalar {
        if self >= other {
            self.clone()
        } else {
            other.clone()
        }
    }

    /// Max-plus multiplication x ⊗ y = x + y, with eps absorbing.
    pub fn otimes(&self, other: &Scalar) -> Scalar {
        match (self, other) {
            (Scalar::Finite(a), Scalar::Finite(b)) => Scalar::Finite(a + b),
            _ => Scalar::NegInf,
        }
    }

    /// Floating approximation for display purposes only; arithmetic never
    /// touches floats.
    pub fn to_f64(&self) -> f64 {
        match self {
            Scalar::NegInf => f64::NEG_INFINITY,
            Scalar::Finite(r) => r.to_f64().unwrap_or(f64::NAN),
        }
    }
}

impl From<i64> for Scalar {
    fn from(v: i64) -> Self {
        Scalar::Finite(Rational::from_integer(BigInt::from(v)))
    }
}

impl From<Rational> for Scalar {
    fn from(r: Rational) -> Self {
        Scalar::Finite(r)
    }
}

/// Renders eps as `eps`, integers without a denominator, and other rationals
/// as `p/q`. This is the canonical token form used by the file formats, so
/// `format!` followed by parsing round-trips exactly.
impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Scalar::NegInf => write!(f, "eps"),
            Scalar::Finite(r) => write!(f, "{}", r),
        }
    }
}

/// Token parse: `eps` (case-insensitive), an integer, a fraction `p/q` with
/// positive integer denominator, or a decimal literal converted exactly.
impl FromStr for Scalar {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let t = s.trim();
        if t.is_empty() {
            return Err("empty token".to_string());
        }
        if t.eq_ignore_ascii_case("eps") {
            return Ok(Scalar::NegInf);
        }
        if let Some((p, q)) = t.split_once('/') {
            let numer = parse_int(p)?;
            let denom = parse_int(q)?;
            if !denom.is_positive() {
                return Err(format!("denominator in `{t}` must be a positive integer"));
            }
            return Ok(Scalar::Finite(Rational::new(numer, denom)));
        }
        if let Some((whole, frac)) = t.split_once('.') {
            if frac.is_empty() || !frac.bytes().all(|b| b.is_ascii_digit()) {
                return Err(format!("malformed decimal literal `{t}`"));
            }
            let whole_int = parse_int(whole)?;
            let scale = BigInt::from(10u32).pow(frac.len() as u32);
            let frac_int = BigInt::parse_bytes(frac.as_bytes(), 10)
                .ok_or_else(|| format!("malformed decimal literal `{t}`"))?;
            let negative = whole.trim_start().starts_with('-');
            let numer = if negative {
                whole_int * &scale - frac_int
            } else {
                whole_int * &scale + frac_int
            };
            return Ok(Scalar::Finite(Rational::new(numer, scale)));
        }
        Ok(Scalar::Finite(Rational::from_integer(parse_int(t)?)))
    }
}

fn parse_int(s: &str) -> Result<BigInt, String> {
    let t = s.trim();
    let digits = t.strip_prefix('-').or_else(|| t.strip_prefix('+')).unwrap_or(t);
    if digits.is_empty() || !digits.bytes().all(|b| b.is_ascii_digit()) {
        return Err(format!("malformed integer `{s}`"));
    }
    BigInt::parse_bytes(t.as_bytes(), 10).ok_or_else(|| format!("malformed integer `{s}`"))
}

/// d-fold max-plus power of a finite scalar: lambda^d means d * lambda.
pub fn times_int(lambda: &Rational, d: usize) -> Rational {
    lambda * Rational::from_integer(BigInt::from(d))
}

/// Rational from an integer, for test and construction convenience.
pub fn rational(v: i64) -> Rational {
    Rational::from_integer(BigInt::from(v))
}

/// Rational p/q. Panics if `q == 0`.
pub fn ratio(p: i64, q: i64) -> Rational {
    Rational::new(BigInt::from(p), BigInt::from(q))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn oplus_is_max_with_eps_neutral() {
        assert_eq!(Scalar::from(1).oplus(&Scalar::from(2)), Scalar::from(2));
        assert_eq!(Scalar::eps().oplus(&Scalar::from(5)), Scalar::from(5));
        assert_eq!(Scalar::eps().oplus(&Scalar::eps()), Scalar::eps());
    }

    #[test]
    fn otimes_is_addition_with_eps_absorbing() {
        assert_eq!(Scalar::from(2).otimes(&Scalar::from(3)), Scalar::from(5));
        assert_eq!(Scalar::eps().otimes(&Scalar::from(7)), Scalar::eps());
        assert_eq!(
            Scalar::ratio(13, 3).otimes(&Scalar::ratio(-13, 3)),
            Scalar::zero()
        );
    }

    #[test]
    fn ordering_puts_eps_at_the_bottom() {
        assert!(Scalar::eps() < Scalar::from(-1_000_000));
        assert!(Scalar::ratio(1, 3) < Scalar::ratio(1, 2));
    }

    #[test]
    fn token_round_trip() {
        for tok in ["eps", "0", "-5", "13/3", "-13/3", "42"] {
            let s: Scalar = tok.parse().unwrap();
            assert_eq!(s.to_string(), tok);
        }
    }

    #[test]
    fn decimal_tokens_are_exact() {
        let s: Scalar = "4.25".parse().unwrap();
        assert_eq!(s, Scalar::ratio(17, 4));
        let neg: Scalar = "-0.5".parse().unwrap();
        assert_eq!(neg, Scalar::ratio(-1, 2));
        let trailing: Scalar = "2.50".parse().unwrap();
        assert_eq!(trailing, Scalar::ratio(5, 2));
    }

    #[test]
    fn malformed_tokens_are_rejected() {
        for tok in ["", "x", "1/0", "1/-2", "1.", ".5", "1e3", "1/2/3"] {
            assert!(tok.parse::<Scalar>().is_err(), "token {tok:?} should fail");
        }
    }
}
