//! Parsing, printing and decimal rendering of exact rationals.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::{Interval, NumericError};
use crate::Rational;

/// `10^k` for any integer `k`.
pub fn pow10(k: i32) -> Rational {
    let p = num_traits::pow(BigInt::from(10), k.unsigned_abs() as usize);
    if k >= 0 {
        Rational::from_integer(p)
    } else {
        Rational::new(BigInt::one(), p)
    }
}

/// Canonical `num/den` text; the denominator is always printed.
pub fn format_rational(q: &Rational) -> String {
    format!("{}/{}", q.numer(), q.denom())
}

/// Accepts `a/b`, integers, plain decimals (`-0.1871`) and `1e-12` style.
pub fn parse_rational(text: &str) -> Result<Rational, NumericError> {
    let s = text.trim();
    let err = || NumericError::Parse(text.to_string());
    if let Some((n, d)) = s.split_once('/') {
        let n: BigInt = n.trim().parse().map_err(|_| err())?;
        let d: BigInt = d.trim().parse().map_err(|_| err())?;
        if d.is_zero() {
            return Err(err());
        }
        return Ok(Rational::new(n, d));
    }
    let (mantissa, exp) = match s.split_once(['e', 'E']) {
        Some((m, e)) => (m, e.parse::<i32>().map_err(|_| err())?),
        None => (s, 0),
    };
    let (neg, body) = match mantissa.strip_prefix('-') {
        Some(b) => (true, b),
        None => (false, mantissa.strip_prefix('+').unwrap_or(mantissa)),
    };
    let (int_part, frac_part) = body.split_once('.').unwrap_or((body, ""));
    if int_part.is_empty() && frac_part.is_empty() {
        return Err(err());
    }
    if !int_part
        .chars()
        .chain(frac_part.chars())
        .all(|c| c.is_ascii_digit())
    {
        return Err(err());
    }
    let digits = format!("{int_part}{frac_part}");
    let n: BigInt = if digits.is_empty() {
        BigInt::zero()
    } else {
        digits.parse().map_err(|_| err())?
    };
    let q = Rational::from_integer(n) * pow10(exp - frac_part.len() as i32);
    Ok(if neg { -q } else { q })
}

/// Largest integer `n` with `n/10^k <= x`.
pub fn floor_on_grid(x: &Rational, k: u32) -> BigInt {
    (x * pow10(k as i32)).floor().to_integer()
}

/// A decimal string together with the number of fractional digits that are
/// guaranteed by the underlying interval.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Decimal {
    pub text: String,
    pub digits: u32,
}

fn scaled_to_string(m: &BigInt, k: u32) -> String {
    let neg = m.is_negative();
    let mut s = m.abs().to_string();
    if k > 0 {
        if s.len() <= k as usize {
            s = format!("{}{}", "0".repeat(k as usize + 1 - s.len()), s);
        }
        s.insert(s.len() - k as usize, '.');
    }
    if neg {
        s.insert(0, '-');
    }
    s
}

/// Renders the interval with as many fractional digits (at most `max_digits`)
/// as it determines: every point of the interval rounds to the printed value
/// and the width is below half a unit of the last digit. Returns `None`
/// when not even the integer part is determined.
pub fn render_decimal(iv: &Interval<Rational>, max_digits: u32) -> Option<Decimal> {
    let half = Rational::new(BigInt::one(), BigInt::from(2));
    for k in (0..=max_digits).rev() {
        let scale = pow10(k as i32);
        let lo = iv.lo() * &scale;
        let hi = iv.hi() * &scale;
        let mid = (&lo + &hi) * &half;
        let m = (mid + &half).floor().to_integer();
        let mq = Rational::from_integer(m.clone());
        if lo >= &mq - &half && hi < &mq + &half && &hi - &lo < half {
            return Some(Decimal {
                text: scaled_to_string(&m, k),
                digits: k,
            });
        }
    }
    None
}

/// Renders an exact rational to `k` digits, rounding half away from zero.
pub fn rational_to_decimal(q: &Rational, k: u32) -> String {
    let scaled = q * pow10(k as i32);
    let half = Rational::new(BigInt::one(), BigInt::from(2));
    let m = if scaled.is_negative() {
        -(-scaled + &half).floor().to_integer()
    } else {
        (scaled + &half).floor().to_integer()
    };
    scaled_to_string(&m, k)
}

/// Smallest `k` with `10^-k <= w` (for `w > 0`).
pub fn decimal_exponent_for_width(w: &Rational) -> u32 {
    let mut k = 0u32;
    while pow10(-(k as i32)) > *w {
        k += 1;
    }
    k
}

/// Integer square root helpers on `BigInt`.
pub(crate) fn is_perfect_square(n: &BigInt) -> Option<BigInt> {
    if n.is_negative() {
        return None;
    }
    let r = num_integer::Roots::sqrt(n);
    (&r * &r == *n).then_some(r)
}

pub(crate) fn ceil_sqrt(n: &BigInt) -> BigInt {
    let r = num_integer::Roots::sqrt(n);
    if &r * &r == *n {
        r
    } else {
        r + 1
    }
}

/// Lowest-terms check used by debug assertions and tests.
pub fn is_canonical(q: &Rational) -> bool {
    q.denom().is_positive() && q.numer().gcd(q.denom()).is_one()
}
