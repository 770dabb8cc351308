use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

/// Exact rational scalar. `BigRational` keeps numerator and denominator
/// reduced with a positive denominator.
pub type Scalar = BigRational;

pub fn int(value: i64) -> Scalar {
    Scalar::from_integer(BigInt::from(value))
}

pub fn frac(num: i64, den: i64) -> Scalar {
    Scalar::new(BigInt::from(num), BigInt::from(den))
}

/// A scalar value or the point at infinity of the projective line.
///
/// Cross-ratios and multi-ratios return `Infinity` when their denominator
/// vanishes while the numerator does not.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum Extended {
    Finite(Scalar),
    Infinity,
}

impl Extended {
    pub fn finite(&self) -> Option<&Scalar> {
        match self {
            Extended::Finite(v) => Some(v),
            Extended::Infinity => None,
        }
    }

    pub fn into_finite(self) -> Option<Scalar> {
        match self {
            Extended::Finite(v) => Some(v),
            Extended::Infinity => None,
        }
    }

    pub fn is_infinite(&self) -> bool {
        matches!(self, Extended::Infinity)
    }

    /// Reciprocal on the extended line; `0 ↦ ∞` and `∞ ↦ 0`.
    pub fn recip(&self) -> Extended {
        match self {
            Extended::Infinity => Extended::Finite(Scalar::zero()),
            Extended::Finite(v) if v.is_zero() => Extended::Infinity,
            Extended::Finite(v) => Extended::Finite(v.recip()),
        }
    }

    /// `1 - self` on the extended line.
    pub fn one_minus(&self) -> Extended {
        match self {
            Extended::Infinity => Extended::Infinity,
            Extended::Finite(v) => Extended::Finite(Scalar::one() - v),
        }
    }
}

impl From<Scalar> for Extended {
    fn from(value: Scalar) -> Self {
        Extended::Finite(value)
    }
}

impl fmt::Display for Extended {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Extended::Finite(v) => write!(f, "{}", format_scalar(v)),
            Extended::Infinity => write!(f, "inf"),
        }
    }
}

/// Formats as `p` for integers and `p/q` otherwise.
pub fn format_scalar(value: &Scalar) -> String {
    if value.denom().is_one() {
        value.numer().to_string()
    } else {
        format!("{}/{}", value.numer(), value.denom())
    }
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
#[error("cannot parse `{input}` as an exact rational")]
pub struct ParseScalarError {
    pub input: String,
}

/// Parses `p`, `p/q` or a decimal literal (`-1.25`, `3e-2`) exactly.
pub fn parse_scalar(input: &str) -> Result<Scalar, ParseScalarError> {
    let err = || ParseScalarError {
        input: input.to_string(),
    };
    let s = input.trim();
    if s.is_empty() {
        return Err(err());
    }
    if let Some((num, den)) = s.split_once('/') {
        let num = BigInt::from_str(num.trim()).map_err(|_| err())?;
        let den = BigInt::from_str(den.trim()).map_err(|_| err())?;
        if den.is_zero() {
            return Err(err());
        }
        return Ok(Scalar::new(num, den));
    }
    parse_decimal(s).ok_or_else(err)
}

fn parse_decimal(s: &str) -> Option<Scalar> {
    let (mantissa, exponent) = match s.find(['e', 'E']) {
        Some(pos) => (&s[..pos], s[pos + 1..].parse::<i32>().ok()?),
        None => (s, 0),
    };
    let (negative, digits) = match mantissa.strip_prefix('-') {
        Some(rest) => (true, rest),
        None => (false, mantissa.strip_prefix('+').unwrap_or(mantissa)),
    };
    let (int_part, frac_part) = match digits.split_once('.') {
        Some((a, b)) => (a, b),
        None => (digits, ""),
    };
    if int_part.is_empty() && frac_part.is_empty() {
        return None;
    }
    if !int_part.chars().chain(frac_part.chars()).all(|c| c.is_ascii_digit()) {
        return None;
    }
    let all_digits = format!("{int_part}{frac_part}");
    let mut numer = BigInt::from_str(if all_digits.is_empty() { "0" } else { &all_digits }).ok()?;
    if negative {
        numer = -numer;
    }
    let scale = exponent - frac_part.len() as i32;
    let ten = BigInt::from(10);
    let value = if scale >= 0 {
        Scalar::from_integer(numer * num_traits::pow(ten, scale as usize))
    } else {
        Scalar::new(numer, num_traits::pow(ten, (-scale) as usize))
    };
    Some(value)
}

/// Lossy conversion used only for export to floating point formats.
pub fn to_f64(value: &Scalar) -> f64 {
    use num_traits::ToPrimitive;
    value.to_f64().unwrap_or_else(|| {
        // Huge numerators or denominators: scale both down first.
        let n = value.numer().abs();
        let d = value.denom();
        let shift = n.bits().max(d.bits()).saturating_sub(900);
        let nf = (&n >> shift).to_f64().unwrap_or(f64::INFINITY);
        let df = (d >> shift).to_f64().unwrap_or(f64::INFINITY);
        let v = nf / df;
        if value.is_negative() {
            -v
        } else {
            v
        }
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_fractions_and_decimals() {
        assert_eq!(parse_scalar("3/6").unwrap(), frac(1, 2));
        assert_eq!(parse_scalar("-7").unwrap(), int(-7));
        assert_eq!(parse_scalar("0.25").unwrap(), frac(1, 4));
        assert_eq!(parse_scalar("-1.5e2").unwrap(), int(-150));
        assert_eq!(parse_scalar("12e-3").unwrap(), frac(3, 250));
        assert_eq!(parse_scalar(".5").unwrap(), frac(1, 2));
        assert!(parse_scalar("1/0").is_err());
        assert!(parse_scalar("abc").is_err());
        assert!(parse_scalar("").is_err());
        assert!(parse_scalar(".").is_err());
    }

    #[test]
    fn formats_round_trip() {
        for v in [frac(-3, 7), int(12), frac(5, 1), int(0)] {
            assert_eq!(parse_scalar(&format_scalar(&v)).unwrap(), v);
        }
    }

    #[test]
    fn extended_reciprocal() {
        assert_eq!(Extended::Finite(int(0)).recip(), Extended::Infinity);
        assert_eq!(Extended::Infinity.recip(), Extended::Finite(int(0)));
        assert_eq!(Extended::Finite(frac(2, 3)).recip(), Extended::Finite(frac(3, 2)));
    }
}
