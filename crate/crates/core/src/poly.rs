//! Dense univariate polynomials with exact rational coefficients.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

/// Polynomial with coefficients in ascending degree order. The zero
/// polynomial has no coefficients; otherwise the last one is nonzero.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct Poly {
    coeffs: Vec<BigRational>,
}

pub fn rat(n: i64) -> BigRational {
    BigRational::from_integer(BigInt::from(n))
}

impl Poly {
    pub fn new(mut coeffs: Vec<BigRational>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        Poly { coeffs }
    }

    pub fn from_ints<I: IntoIterator<Item = i64>>(coeffs: I) -> Self {
        Self::new(coeffs.into_iter().map(rat).collect())
    }

    pub fn from_bigints(coeffs: &[BigInt]) -> Self {
        Self::new(coeffs.iter().cloned().map(BigRational::from_integer).collect())
    }

    pub fn zero() -> Self {
        Poly { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Poly { coeffs: vec![BigRational::one()] }
    }

    pub fn constant(c: BigRational) -> Self {
        Self::new(vec![c])
    }

    /// `c · x^k`
    pub fn monomial(c: BigRational, k: usize) -> Self {
        let mut coeffs = vec![BigRational::zero(); k + 1];
        coeffs[k] = c;
        Self::new(coeffs)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn coeffs(&self) -> &[BigRational] {
        &self.coeffs
    }

    /// Coefficient of `x^k` (zero beyond the degree).
    pub fn coeff(&self, k: usize) -> BigRational {
        self.coeffs.get(k).cloned().unwrap_or_else(BigRational::zero)
    }

    pub fn leading(&self) -> Option<&BigRational> {
        self.coeffs.last()
    }

    pub fn eval(&self, x: &BigRational) -> BigRational {
        self.coeffs.iter().rev().fold(BigRational::zero(), |acc, c| acc * x + c)
    }

    pub fn scale(&self, c: &BigRational) -> Self {
        Self::new(self.coeffs.iter().map(|a| a * c).collect())
    }

    pub fn pow(&self, n: u32) -> Self {
        (0..n).fold(Poly::one(), |acc, _| &acc * self)
    }

    /// Truncation modulo `x^n`.
    pub fn truncate(&self, n: usize) -> Self {
        Self::new(self.coeffs.iter().take(n).cloned().collect())
    }

    /// Euclidean division; panics on a zero divisor.
    pub fn div_rem(&self, divisor: &Poly) -> (Poly, Poly) {
        let dd = divisor.degree().expect("division by the zero polynomial");
        let lead = divisor.leading().unwrap();
        let mut rem = self.coeffs.clone();
        if rem.len() <= dd {
            return (Poly::zero(), self.clone());
        }
        let mut quot = vec![BigRational::zero(); rem.len() - dd];
        for i in (0..quot.len()).rev() {
            let c = &rem[i + dd] / lead;
            if !c.is_zero() {
                for (j, d) in divisor.coeffs.iter().enumerate() {
                    let delta = &c * d;
                    rem[i + j] -= delta;
                }
            }
            quot[i] = c;
        }
        rem.truncate(dd);
        (Poly::new(quot), Poly::new(rem))
    }

    /// Monic greatest common divisor (zero if both are zero).
    pub fn gcd(&self, other: &Poly) -> Poly {
        let (mut a, mut b) = (self.clone(), other.clone());
        while !b.is_zero() {
            let r = a.div_rem(&b).1;
            a = b;
            b = r;
        }
        match a.leading().cloned() {
            Some(l) => a.scale(&l.recip()),
            None => a,
        }
    }

    /// Substitutes the polynomial `inner` for the variable.
    pub fn compose(&self, inner: &Poly) -> Poly {
        self.coeffs
            .iter()
            .rev()
            .fold(Poly::zero(), |acc, c| &(&acc * inner) + &Poly::constant(c.clone()))
    }

    /// Whether all coefficients are integers.
    pub fn is_integral(&self) -> bool {
        self.coeffs.iter().all(|c| c.is_integer())
    }

    /// Integer coefficients; `None` if some coefficient is fractional.
    pub fn to_bigints(&self) -> Option<Vec<BigInt>> {
        self.is_integral().then(|| self.coeffs.iter().map(|c| c.to_integer()).collect())
    }

    /// Common denominator of the coefficients.
    pub fn denominator_lcm(&self) -> BigInt {
        self.coeffs.iter().fold(BigInt::one(), |acc, c| acc.lcm(c.denom()))
    }

    /// Gcd of the numerators of the coefficients (0 for the zero polynomial).
    pub fn numerator_gcd(&self) -> BigInt {
        self.coeffs.iter().fold(BigInt::zero(), |acc, c| acc.gcd(c.numer()))
    }

    /// Formats with the given variable name, lowest degree first, e.g.
    /// `1 - 2z + z^2`.
    pub fn format_with(&self, var: &str) -> String {
        if self.is_zero() {
            return "0".into();
        }
        let mut out = String::new();
        for (k, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let neg = c.is_negative();
            let mag = c.abs();
            if out.is_empty() {
                if neg {
                    out.push('-');
                }
            } else {
                out.push_str(if neg { " - " } else { " + " });
            }
            let show_mag = k == 0 || !mag.is_one();
            if show_mag {
                if mag.is_integer() {
                    out.push_str(&mag.to_string());
                } else {
                    out.push_str(&format!("({mag})"));
                }
            }
            match k {
                0 => {}
                1 => out.push_str(var),
                _ => out.push_str(&format!("{var}^{k}")),
            }
        }
        out
    }
}

impl fmt::Display for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.format_with("x"))
    }
}

impl Add for &Poly {
    type Output = Poly;
    fn add(self, rhs: &Poly) -> Poly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        Poly::new((0..n).map(|i| self.coeff(i) + rhs.coeff(i)).collect())
    }
}

impl Sub for &Poly {
    type Output = Poly;
    fn sub(self, rhs: &Poly) -> Poly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        Poly::new((0..n).map(|i| self.coeff(i) - rhs.coeff(i)).collect())
    }
}

impl Neg for &Poly {
    type Output = Poly;
    fn neg(self) -> Poly {
        Poly::new(self.coeffs.iter().map(|c| -c).collect())
    }
}

impl Mul for &Poly {
    type Output = Poly;
    fn mul(self, rhs: &Poly) -> Poly {
        if self.is_zero() || rhs.is_zero() {
            return Poly::zero();
        }
        let mut out = vec![BigRational::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        Poly::new(out)
    }
}
