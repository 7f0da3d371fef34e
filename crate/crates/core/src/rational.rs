//! Exact rational scalars.
//!
//! `Rational` is `num_rational::BigRational`, which keeps every value in
//! canonical form (positive denominator, coprime numerator/denominator).
//! This module adds the parsing, formatting and combinatorial helpers the
//! rest of the crate shares.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

pub type Rational = BigRational;

pub fn int(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

pub fn ratio(num: i64, den: i64) -> Rational {
    Rational::new(BigInt::from(num), BigInt::from(den))
}

/// Parses `"p/q"`, `"-p/q"` or a plain integer string.
pub fn parse_rational(s: &str) -> Result<Rational> {
    let err = || Error::ParseRational(s.to_string());
    let t = s.trim();
    let (num, den) = match t.split_once('/') {
        Some((n, d)) => (n.trim(), d.trim()),
        None => (t, "1"),
    };
    let num: BigInt = num.parse().map_err(|_| err())?;
    let den: BigInt = den.parse().map_err(|_| err())?;
    if den.is_zero() {
        return Err(err());
    }
    Ok(Rational::new(num, den))
}

/// Canonical `"p/q"` rendering; integers print without a denominator.
pub fn format_rational(q: &Rational) -> String {
    if q.denom().is_one() {
        q.numer().to_string()
    } else {
        format!("{}/{}", q.numer(), q.denom())
    }
}

/// True when `q` is an integer `<= 0`, i.e. a pole of the Pochhammer
/// denominator for a long enough rising product.
pub fn is_nonpositive_integer(q: &Rational) -> bool {
    q.is_integer() && !q.is_positive()
}

pub fn factorial(n: usize) -> BigInt {
    (1..=n).fold(BigInt::one(), |acc, k| acc * BigInt::from(k))
}

pub fn binomial(n: usize, k: usize) -> BigInt {
    if k > n {
        return BigInt::zero();
    }
    let k = k.min(n - k);
    let mut acc = BigInt::one();
    for i in 0..k {
        acc = acc * BigInt::from(n - i) / BigInt::from(i + 1);
    }
    acc
}

/// Row `C(n,0)..C(n,n)` of Pascal's triangle.
pub fn binomial_row(n: usize) -> Vec<BigInt> {
    let mut row = Vec::with_capacity(n + 1);
    let mut c = BigInt::one();
    row.push(c.clone());
    for k in 0..n {
        c = c * BigInt::from(n - k) / BigInt::from(k + 1);
        row.push(c.clone());
    }
    row
}

/// `%.{digits}g`-style decimal rendering of an exact rational, rounded half
/// away from zero on the exact value.
pub fn to_significant_decimal(q: &Rational, digits: usize) -> String {
    assert!(digits >= 1);
    if q.is_zero() {
        return "0".to_string();
    }
    let neg = q.is_negative();
    let abs = q.abs();
    let ten = BigInt::from(10);

    // exponent e with 10^e <= abs < 10^(e+1)
    let mut e = abs.numer().to_string().len() as i64 - abs.denom().to_string().len() as i64;
    loop {
        let lo = pow10(e);
        if abs < lo {
            e -= 1;
        } else if abs >= pow10(e + 1) {
            e += 1;
        } else {
            break;
        }
    }

    // mantissa = round(abs * 10^(digits-1-e))
    let scaled = abs * pow10(digits as i64 - 1 - e);
    let (whole, rem) = scaled.numer().div_rem(scaled.denom());
    let mut mant = whole;
    if rem * BigInt::from(2) >= *scaled.denom() {
        mant += 1;
    }
    if mant == num_traits::pow(ten.clone(), digits) {
        mant /= &ten;
        e += 1;
    }

    let mut s = mant.to_string();
    let body = if e < -4 || e >= digits as i64 {
        let mut frac = s.split_off(1);
        trim_zeros(&mut frac);
        let sign = if e < 0 { '-' } else { '+' };
        let exp = format!("e{}{:02}", sign, e.abs());
        if frac.is_empty() {
            format!("{s}{exp}")
        } else {
            format!("{s}.{frac}{exp}")
        }
    } else if e >= 0 {
        let int_len = e as usize + 1;
        let mut frac = s.split_off(int_len);
        trim_zeros(&mut frac);
        if frac.is_empty() {
            s
        } else {
            format!("{s}.{frac}")
        }
    } else {
        let mut frac = "0".repeat((-e - 1) as usize) + &s;
        trim_zeros(&mut frac);
        format!("0.{frac}")
    };
    if neg {
        format!("-{body}")
    } else {
        body
    }
}

fn trim_zeros(s: &mut String) {
    while s.ends_with('0') {
        s.pop();
    }
}

fn pow10(e: i64) -> Rational {
    let p = num_traits::pow(BigInt::from(10), e.unsigned_abs() as usize);
    if e >= 0 {
        Rational::from_integer(p)
    } else {
        Rational::new(BigInt::one(), p)
    }
}

pub fn to_f64(q: &Rational) -> f64 {
    use num_traits::ToPrimitive;
    q.to_f64().unwrap_or(f64::NAN)
}
