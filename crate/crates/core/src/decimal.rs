//! Decimal rendering and parsing of exact rationals. Presentation only.

use num_rational::Ratio;
use num_traits::Signed;

use crate::scalar::{lift, Scalar};

/// Rounds `x` to `digits` places after the point, half away from zero.
pub fn round_ratio<T: Scalar>(x: &Ratio<T>, digits: usize) -> String {
    let scale = pow10::<T>(digits);
    let neg = x.is_negative();
    let mag = x.abs() * Ratio::from_integer(scale);
    let two = lift::<T>(2);
    // floor(mag + 1/2)
    let (q, rem) = mag.numer().div_rem(mag.denom());
    let rounded = if rem * two >= mag.denom().clone() {
        q + T::one()
    } else {
        q
    };
    render_scaled(rounded, digits, neg)
}

/// The exact decimal expansion when the denominator has only factors 2 and 5.
pub fn exact_decimal<T: Scalar>(x: &Ratio<T>) -> Option<String> {
    let two = lift::<T>(2);
    let five = lift::<T>(5);
    let mut d = x.denom().clone();
    let (mut twos, mut fives) = (0usize, 0usize);
    while d.is_even() {
        d = d / two.clone();
        twos += 1;
    }
    while (d.clone() % five.clone()).is_zero() {
        d = d / five.clone();
        fives += 1;
    }
    if !d.is_one() {
        return None;
    }
    let digits = twos.max(fives);
    let scaled = x.abs() * Ratio::from_integer(pow10::<T>(digits));
    debug_assert!(scaled.is_integer());
    Some(render_scaled(scaled.to_integer(), digits, x.is_negative()))
}

/// Parses `[-]int[.frac]` into an exact rational.
pub fn parse_decimal<T: Scalar>(s: &str) -> Option<Ratio<T>> {
    let s = s.trim();
    let (neg, body) = match s.strip_prefix('-') {
        Some(rest) => (true, rest),
        None => (false, s.strip_prefix('+').unwrap_or(s)),
    };
    let (int_part, frac_part) = body.split_once('.').unwrap_or((body, ""));
    if int_part.is_empty() && frac_part.is_empty() {
        return None;
    }
    let all = format!("{int_part}{frac_part}");
    if !all.bytes().all(|b| b.is_ascii_digit()) {
        return None;
    }
    let ten = lift::<T>(10);
    let mut n = T::zero();
    for b in all.bytes() {
        n = n * ten.clone() + lift::<T>(i64::from(b - b'0'));
    }
    let r = Ratio::new(n, pow10::<T>(frac_part.len()));
    Some(if neg { -r } else { r })
}

fn pow10<T: Scalar>(e: usize) -> T {
    let ten = lift::<T>(10);
    (0..e).fold(T::one(), |acc, _| acc * ten.clone())
}

fn render_scaled<T: Scalar>(scaled: T, digits: usize, neg: bool) -> String {
    let mut s = scaled.to_string();
    if digits > 0 {
        if s.len() <= digits {
            s = format!("{}{}", "0".repeat(digits + 1 - s.len()), s);
        }
        s.insert(s.len() - digits, '.');
    }
    if neg && s.bytes().any(|b| (b'1'..=b'9').contains(&b)) {
        s.insert(0, '-');
    }
    s
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_bigint::BigInt;

    fn r(n: i64, d: i64) -> Ratio<BigInt> {
        Ratio::new(BigInt::from(n), BigInt::from(d))
    }

    #[test]
    fn rounding() {
        assert_eq!(round_ratio(&r(2, 3), 3), "0.667");
        assert_eq!(round_ratio(&r(-2, 3), 3), "-0.667");
        assert_eq!(round_ratio(&r(11, 1), 6), "11.000000");
        assert_eq!(round_ratio(&r(5, 2), 0), "3");
        assert_eq!(round_ratio(&r(-1, 10_000), 2), "0.00");
    }

    #[test]
    fn exact_expansions() {
        assert_eq!(exact_decimal(&r(-3, 8)).unwrap(), "-0.375");
        assert_eq!(exact_decimal(&r(7, 1)).unwrap(), "7");
        assert_eq!(exact_decimal(&r(1, 20)).unwrap(), "0.05");
        assert!(exact_decimal(&r(1, 3)).is_none());
    }

    #[test]
    fn parse_roundtrip() {
        for x in [r(-3, 8), r(1, 1024), r(123456789, 64), r(0, 1)] {
            let s = exact_decimal(&x).unwrap();
            assert_eq!(parse_decimal::<BigInt>(&s).unwrap(), x);
        }
        assert!(parse_decimal::<BigInt>("1.2.3").is_none());
        assert!(parse_decimal::<BigInt>("-").is_none());
        assert!(parse_decimal::<BigInt>("x1").is_none());
    }
}
