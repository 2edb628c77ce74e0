use std::fmt::{Debug, Display};

use num_bigint::BigInt;
use num_rational::{BigRational, Ratio};
use num_traits::{Num, Signed, Zero};

/// Ordered field used by the simplex and the duality arithmetic.
///
/// Exact types compare against zero exactly; floating point types use a small
/// absolute tolerance so pivoting does not chase rounding noise.
pub trait Scalar: Clone + Debug + Display + PartialOrd + Num + Signed {
    /// True when arithmetic is exact (no rounding).
    const EXACT: bool;

    fn near_zero(&self) -> bool;

    fn from_count(n: usize) -> Self;

    fn definitely_positive(&self) -> bool {
        !self.near_zero() && *self > Self::zero()
    }

    fn definitely_negative(&self) -> bool {
        !self.near_zero() && *self < Self::zero()
    }

    fn approx_eq(&self, other: &Self) -> bool {
        (self.clone() - other.clone()).near_zero()
    }
}

impl Scalar for f64 {
    const EXACT: bool = false;

    fn near_zero(&self) -> bool {
        self.abs() < 1e-9
    }

    fn from_count(n: usize) -> Self {
        n as f64
    }
}

impl Scalar for f32 {
    const EXACT: bool = false;

    fn near_zero(&self) -> bool {
        self.abs() < 1e-5
    }

    fn from_count(n: usize) -> Self {
        n as f32
    }
}

impl Scalar for BigRational {
    const EXACT: bool = true;

    fn near_zero(&self) -> bool {
        self.is_zero()
    }

    fn from_count(n: usize) -> Self {
        BigRational::from_integer(BigInt::from(n))
    }
}

impl Scalar for Ratio<i64> {
    const EXACT: bool = true;

    fn near_zero(&self) -> bool {
        self.is_zero()
    }

    fn from_count(n: usize) -> Self {
        Ratio::from_integer(i64::try_from(n).expect("count fits in i64"))
    }
}

/// Parses `"a"` or `"a/b"` into an exact rational.
pub fn parse_rational(text: &str) -> Option<BigRational> {
    let text = text.trim();
    match text.split_once('/') {
        Some((num, den)) => {
            let num: BigInt = num.trim().parse().ok()?;
            let den: BigInt = den.trim().parse().ok()?;
            if den.is_zero() {
                return None;
            }
            Some(BigRational::new(num, den))
        }
        None => text.parse::<BigInt>().ok().map(BigRational::from_integer),
    }
}

/// Canonical `a/b` rendering, or `a` when the denominator is one.
pub fn format_rational(q: &BigRational) -> String {
    if q.is_integer() {
        q.numer().to_string()
    } else {
        format!("{}/{}", q.numer(), q.denom())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(n: i64, d: i64) -> BigRational {
        BigRational::new(n.into(), d.into())
    }

    #[test]
    fn parses_integers_and_fractions() {
        assert_eq!(parse_rational("40"), Some(q(40, 1)));
        assert_eq!(parse_rational(" 21/20 "), Some(q(21, 20)));
        assert_eq!(parse_rational("6/4"), Some(q(3, 2)));
        assert_eq!(parse_rational("1/0"), None);
        assert_eq!(parse_rational("x"), None);
    }

    #[test]
    fn formats_canonically() {
        assert_eq!(format_rational(&q(14, 6)), "7/3");
        assert_eq!(format_rational(&q(-4, 2)), "-2");
    }

    #[test]
    fn float_tolerance() {
        assert!(1e-12f64.near_zero());
        assert!(!1e-6f64.near_zero());
        assert!(Scalar::definitely_positive(&q(1, 1000)));
    }
}
