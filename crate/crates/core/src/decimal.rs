//! Fixed-point decimals over big integers.
//!
//! A [`Decimal`] is `mantissa / 10^scale`. Functions taking a `digits`
//! argument work at `digits + GUARD_DIGITS` fractional digits and truncate
//! toward negative infinity after each step, so results are within
//! `10^-(digits + GUARD_DIGITS - 2)` of the true value; the guard digits absorb
//! accumulated truncation and are dropped when formatting.

use std::cmp::Ordering;
use std::fmt;

use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

/// Extra working digits carried beyond the requested precision.
pub const GUARD_DIGITS: u32 = 10;

/// Default precision for real-valued outputs.
pub const DEFAULT_DIGITS: u32 = 50;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Decimal {
    mantissa: BigInt,
    scale: u32,
}

fn pow10(n: u32) -> BigInt {
    BigInt::from(10u32).pow(n)
}

impl Decimal {
    pub fn from_integer(n: impl Into<BigInt>, scale: u32) -> Self {
        Decimal { mantissa: n.into() * pow10(scale), scale }
    }

    /// Floor of `r · 10^scale`, as a decimal.
    pub fn from_rational(r: &BigRational, scale: u32) -> Self {
        let m = (r.numer() * pow10(scale)).div_floor(r.denom());
        Decimal { mantissa: m, scale }
    }

    pub fn scale(&self) -> u32 {
        self.scale
    }

    pub fn mantissa(&self) -> &BigInt {
        &self.mantissa
    }

    /// Exact rational value.
    pub fn to_rational(&self) -> BigRational {
        BigRational::new(self.mantissa.clone(), pow10(self.scale))
    }

    pub fn rescale(&self, scale: u32) -> Self {
        let mantissa = match scale.cmp(&self.scale) {
            Ordering::Equal => self.mantissa.clone(),
            Ordering::Greater => &self.mantissa * pow10(scale - self.scale),
            Ordering::Less => self.mantissa.div_floor(&pow10(self.scale - scale)),
        };
        Decimal { mantissa, scale }
    }

    pub fn is_negative(&self) -> bool {
        self.mantissa.is_negative()
    }

    pub fn abs(&self) -> Self {
        Decimal { mantissa: self.mantissa.abs(), scale: self.scale }
    }

    pub fn add(&self, other: &Self) -> Self {
        let s = self.scale.max(other.scale);
        Decimal { mantissa: self.rescale(s).mantissa + other.rescale(s).mantissa, scale: s }
    }

    pub fn sub(&self, other: &Self) -> Self {
        let s = self.scale.max(other.scale);
        Decimal { mantissa: self.rescale(s).mantissa - other.rescale(s).mantissa, scale: s }
    }

    pub fn mul(&self, other: &Self) -> Self {
        let s = self.scale.max(other.scale);
        let prod = &self.mantissa * &other.mantissa;
        Decimal { mantissa: prod, scale: self.scale + other.scale }.rescale(s)
    }

    pub fn mul_int(&self, n: &BigInt) -> Self {
        Decimal { mantissa: &self.mantissa * n, scale: self.scale }
    }

    /// Quotient truncated at the larger of the two scales.
    pub fn div(&self, other: &Self) -> Self {
        assert!(!other.mantissa.is_zero(), "decimal division by zero");
        let s = self.scale.max(other.scale);
        // (a/10^sa) / (b/10^sb) = a·10^(sb + s − sa) / b at scale s
        let num = &self.mantissa * pow10(other.scale + s) / pow10(self.scale);
        Decimal { mantissa: num.div_floor(&other.mantissa), scale: s }
    }

    /// Floor square root at this decimal's scale; `None` for negatives.
    pub fn sqrt(&self) -> Option<Self> {
        if self.is_negative() {
            return None;
        }
        let m = (&self.mantissa * pow10(self.scale)).sqrt();
        Some(Decimal { mantissa: m, scale: self.scale })
    }

    pub fn to_f64(&self) -> f64 {
        // scale down to ~17 significant digits before converting
        let keep = self.scale.min(20);
        let m = self.rescale(keep).mantissa;
        m.to_f64().unwrap_or(f64::NAN) / 10f64.powi(keep as i32)
    }

    /// Decimal string with exactly `digits` fractional digits, truncated
    /// toward zero.
    pub fn to_string_digits(&self, digits: u32) -> String {
        let digits = digits.min(self.scale);
        let mag = Decimal { mantissa: self.mantissa.abs(), scale: self.scale }.rescale(digits);
        let sign = if self.is_negative() && !mag.mantissa.is_zero() { "-" } else { "" };
        let s = mag.mantissa.to_string();
        let d = digits as usize;
        if d == 0 {
            return format!("{sign}{s}");
        }
        let s = if s.len() <= d { format!("{}{s}", "0".repeat(d + 1 - s.len())) } else { s };
        let (int, frac) = s.split_at(s.len() - d);
        format!("{sign}{int}.{frac}")
    }
}

impl PartialOrd for Decimal {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Decimal {
    fn cmp(&self, other: &Self) -> Ordering {
        let s = self.scale.max(other.scale);
        self.rescale(s).mantissa.cmp(&other.rescale(s).mantissa)
    }
}

impl fmt::Display for Decimal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let digits = self.scale.saturating_sub(GUARD_DIGITS);
        f.write_str(&self.to_string_digits(digits))
    }
}

fn working_scale(digits: u32) -> u32 {
    digits + GUARD_DIGITS
}

/// `atan(1/x)` at the given scale, by its alternating series.
fn atan_inv(x: u64, scale: u32) -> BigInt {
    let x = BigInt::from(x);
    let x2 = &x * &x;
    let mut power = pow10(scale) / &x; // 10^s / x^(2i+1)
    let mut sum = BigInt::zero();
    let mut i = 0u64;
    while !power.is_zero() {
        let term = &power / BigInt::from(2 * i + 1);
        if i % 2 == 0 {
            sum += term;
        } else {
            sum -= term;
        }
        power /= &x2;
        i += 1;
    }
    sum
}

/// π to `digits` decimals (plus guard digits), by Machin's formula
/// `π = 16·atan(1/5) − 4·atan(1/239)`.
pub fn pi(digits: u32) -> Decimal {
    let s = working_scale(digits) + 5;
    let m = atan_inv(5, s) * 16 - atan_inv(239, s) * 4;
    Decimal { mantissa: m, scale: s }.rescale(working_scale(digits))
}

/// `2·atanh(u)` for `0 ≤ u < 1` given as a decimal at scale `s`.
fn two_atanh(u: &BigInt, s: u32) -> BigInt {
    let one = pow10(s);
    let u2 = u * u / &one;
    let mut power = u.clone();
    let mut sum = BigInt::zero();
    let mut i = 0u64;
    while !power.is_zero() {
        sum += &power / BigInt::from(2 * i + 1);
        power = &power * &u2 / &one;
        i += 1;
    }
    sum * 2
}

fn ln2_at(s: u32) -> BigInt {
    let u = pow10(s) / 3;
    two_atanh(&u, s)
}

/// Natural logarithm of a positive integer.
pub fn ln_integer(n: &BigUint, digits: u32) -> Decimal {
    assert!(!n.is_zero(), "ln(0) is undefined");
    let s = working_scale(digits) + 5;
    let e = n.bits() - 1;
    // y = n / 2^e in [1, 2); ln n = e·ln 2 + 2·atanh((y − 1)/(y + 1))
    let n = BigInt::from(n.clone());
    let two_e = BigInt::one() << e;
    let num = &n - &two_e;
    let den = &n + &two_e;
    let u = num * pow10(s) / den;
    let m = ln2_at(s) * BigInt::from(e) + two_atanh(&u, s);
    Decimal { mantissa: m, scale: s }.rescale(working_scale(digits))
}

/// Natural logarithm of a positive rational.
pub fn ln_rational(r: &BigRational, digits: u32) -> Decimal {
    assert!(r.is_positive(), "ln of a non-positive number");
    let p = r.numer().to_biguint().unwrap();
    let q = r.denom().to_biguint().unwrap();
    ln_integer(&p, digits).sub(&ln_integer(&q, digits))
}

/// `n^(1/k)` truncated to `digits` decimals plus guard digits; exact floor
/// of the scaled root.
pub fn nth_root_integer(n: &BigUint, k: u32, digits: u32) -> Decimal {
    assert!(k >= 1);
    let s = working_scale(digits);
    let scaled = n * BigUint::from(10u32).pow(s * k);
    Decimal { mantissa: BigInt::from(scaled.nth_root(k)), scale: s }
}

/// Square root of a non-negative integer.
pub fn sqrt_integer(n: &BigUint, digits: u32) -> Decimal {
    nth_root_integer(n, 2, digits)
}

#[cfg(test)]
mod tests {
    use super::*;

    const PI_60: &str = "3.141592653589793238462643383279502884197169399375105820974944";

    #[test]
    fn pi_digits() {
        assert_eq!(pi(50).to_string_digits(50), &PI_60[..52]);
        assert_eq!(pi(50).to_string(), &PI_60[..52]);
    }

    #[test]
    fn logarithms() {
        // ln 2 = 0.69314718055994530941723212145817656807550013436025...
        let l2 = ln_integer(&BigUint::from(2u32), 50);
        assert_eq!(l2.to_string_digits(50), "0.69314718055994530941723212145817656807550013436025");
        // ln 10 = 2.30258509299404568401799145468436420760110148862877...
        let l10 = ln_integer(&BigUint::from(10u32), 50);
        assert_eq!(l10.to_string_digits(48), "2.302585092994045684017991454684364207601101488628");
        assert!(ln_integer(&BigUint::one(), 50).mantissa.is_zero());
        let third = ln_rational(&BigRational::new(1.into(), 3.into()), 30);
        assert!((third.to_f64() + 3f64.ln()).abs() < 1e-15);
    }

    #[test]
    fn roots() {
        // sqrt 2 = 1.41421356237309504880168872420969807856967187537694...
        let r = sqrt_integer(&BigUint::from(2u32), 50);
        assert_eq!(r.to_string_digits(50), "1.41421356237309504880168872420969807856967187537694");
        let c = nth_root_integer(&BigUint::from(27u32), 3, 20);
        assert_eq!(c.to_string_digits(5), "3.00000");
    }

    #[test]
    fn arithmetic_and_formatting() {
        let a = Decimal::from_rational(&BigRational::new(1.into(), 4.into()), 10);
        let b = Decimal::from_integer(2, 10);
        assert_eq!(a.mul(&b).to_string_digits(3), "0.500");
        assert_eq!(a.sub(&b).to_string_digits(2), "-1.75");
        assert_eq!(b.div(&a).to_string_digits(1), "8.0");
        assert!(a < b);
        assert_eq!(Decimal::from_integer(7, 3).to_string_digits(0), "7");
    }
}
