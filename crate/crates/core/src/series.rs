//! Exact formal power series and rational closed forms.
//!
//! A [`CoefficientSequence`] is a finite prefix of a power series over the
//! rationals. A [`RationalFunction`] is a reduced quotient of integer
//! polynomials with nonzero constant term in the denominator, so it has a
//! Taylor expansion at the origin.
//!
//! [`recognize_rational`] fits the shortest linear recurrence to all but the
//! last `guard` coefficients (Berlekamp-Massey over the rationals), converts
//! it to a quotient `P/Q` and accepts it only if re-expansion reproduces every
//! coefficient, guard band included.

use std::fmt;

use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::{Deserialize, Serialize};

use crate::poly::{rat, Poly};
use crate::{Error, Result};

/// Default guard band for [`recognize_rational`].
pub const DEFAULT_GUARD: usize = 4;

/// First coefficients `a_0, a_1, …` of a formal power series.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct CoefficientSequence {
    coeffs: Vec<BigRational>,
}

impl CoefficientSequence {
    pub fn new(coeffs: Vec<BigRational>) -> Result<Self> {
        if coeffs.is_empty() {
            return Err(Error::Argument("a coefficient sequence needs at least one term".into()));
        }
        Ok(CoefficientSequence { coeffs })
    }

    pub fn from_ints<I: IntoIterator<Item = i64>>(xs: I) -> Result<Self> {
        Self::new(xs.into_iter().map(rat).collect())
    }

    pub fn from_bigints<I: IntoIterator<Item = BigInt>>(xs: I) -> Result<Self> {
        Self::new(xs.into_iter().map(BigRational::from_integer).collect())
    }

    pub fn from_biguints<'a, I: IntoIterator<Item = &'a BigUint>>(xs: I) -> Result<Self> {
        Self::from_bigints(xs.into_iter().map(|x| BigInt::from(x.clone())))
    }

    pub fn len(&self) -> usize {
        self.coeffs.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn coeffs(&self) -> &[BigRational] {
        &self.coeffs
    }

    pub fn get(&self, k: usize) -> Option<&BigRational> {
        self.coeffs.get(k)
    }

    /// Integer coefficients, or `None` if any coefficient is fractional.
    pub fn to_bigints(&self) -> Option<Vec<BigInt>> {
        self.coeffs
            .iter()
            .map(|c| c.is_integer().then(|| c.to_integer()))
            .collect()
    }

    /// Integer coefficients as `i64`; `None` if any does not fit.
    pub fn to_i64s(&self) -> Option<Vec<i64>> {
        self.to_bigints()?.iter().map(ToPrimitive::to_i64).collect()
    }

    pub fn truncated(&self, len: usize) -> Self {
        CoefficientSequence { coeffs: self.coeffs[..len.clamp(1, self.coeffs.len())].to_vec() }
    }

    /// Cauchy product truncated to the shorter of the two lengths.
    pub fn mul_truncated(&self, other: &Self) -> Self {
        let n = self.len().min(other.len());
        let mut out = vec![BigRational::zero(); n];
        for (i, a) in self.coeffs.iter().take(n).enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().take(n - i).enumerate() {
                out[i + j] += a * b;
            }
        }
        CoefficientSequence { coeffs: out }
    }

    /// `n`-th power truncated to this sequence's length.
    pub fn pow_truncated(&self, n: u32) -> Self {
        let mut one = vec![BigRational::zero(); self.len()];
        one[0] = BigRational::one();
        (0..n).fold(CoefficientSequence { coeffs: one }, |acc, _| acc.mul_truncated(self))
    }

    pub fn to_json(&self) -> serde_json::Value {
        serde_json::Value::Array(
            self.coeffs.iter().map(|c| serde_json::Value::String(c.to_string())).collect(),
        )
    }
}

impl fmt::Display for CoefficientSequence {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.coeffs.iter().map(|c| c.to_string()).collect();
        write!(f, "[{}]", parts.join(", "))
    }
}

/// Reduced `P(z)/Q(z)` with integer coefficients.
///
/// Normal form: no common polynomial factor, the coefficients of `P` and `Q`
/// together have gcd 1, and `Q(0) > 0`. Equal functions have identical
/// fields.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct RationalFunction {
    #[serde(with = "crate::serde_dec")]
    numerator: Vec<BigInt>,
    #[serde(with = "crate::serde_dec")]
    denominator: Vec<BigInt>,
}

impl RationalFunction {
    /// Normalizes `num/den`. Fails if the reduced denominator vanishes at 0.
    pub fn new(num: &Poly, den: &Poly) -> Result<Self> {
        if den.is_zero() {
            return Err(Error::Argument("denominator is the zero polynomial".into()));
        }
        let g = num.gcd(den);
        let (mut p, mut q) = if g.is_zero() || g.degree() == Some(0) {
            (num.clone(), den.clone())
        } else {
            (num.div_rem(&g).0, den.div_rem(&g).0)
        };
        if q.coeff(0).is_zero() {
            return Err(Error::Argument(format!(
                "denominator {} vanishes at z = 0",
                q.format_with("z")
            )));
        }
        let lcm = p.denominator_lcm().lcm(&q.denominator_lcm());
        let lcm = BigRational::from_integer(lcm);
        p = p.scale(&lcm);
        q = q.scale(&lcm);
        let content = p.numerator_gcd().gcd(&q.numerator_gcd());
        let mut factor = BigRational::new(BigInt::one(), content);
        if q.coeff(0).is_negative() {
            factor = -factor;
        }
        p = p.scale(&factor);
        q = q.scale(&factor);
        Ok(RationalFunction {
            numerator: p.to_bigints().expect("cleared denominators"),
            denominator: q.to_bigints().expect("cleared denominators"),
        })
    }

    pub fn from_ints(num: &[i64], den: &[i64]) -> Result<Self> {
        Self::new(&Poly::from_ints(num.iter().copied()), &Poly::from_ints(den.iter().copied()))
    }

    pub fn polynomial(p: &Poly) -> Self {
        Self::new(p, &Poly::one()).expect("constant denominator")
    }

    pub fn one() -> Self {
        Self::polynomial(&Poly::one())
    }

    pub fn numerator(&self) -> &[BigInt] {
        &self.numerator
    }

    pub fn denominator(&self) -> &[BigInt] {
        &self.denominator
    }

    pub fn numerator_poly(&self) -> Poly {
        Poly::from_bigints(&self.numerator)
    }

    pub fn denominator_poly(&self) -> Poly {
        Poly::from_bigints(&self.denominator)
    }

    pub fn mul(&self, other: &Self) -> Self {
        Self::new(
            &(&self.numerator_poly() * &other.numerator_poly()),
            &(&self.denominator_poly() * &other.denominator_poly()),
        )
        .expect("product of valid denominators is valid")
    }

    pub fn add(&self, other: &Self) -> Self {
        let num = &(&self.numerator_poly() * &other.denominator_poly())
            + &(&other.numerator_poly() * &self.denominator_poly());
        Self::new(&num, &(&self.denominator_poly() * &other.denominator_poly()))
            .expect("product of valid denominators is valid")
    }

    pub fn pow(&self, n: u32) -> Self {
        (0..n).fold(Self::one(), |acc, _| acc.mul(self))
    }

    /// Taylor coefficients `a_0..=a_kmax`, unrolled from
    /// `Q(0)·a_k = p_k − Σ_{j≥1} q_j a_{k−j}`.
    pub fn expand(&self, kmax: usize) -> CoefficientSequence {
        let q0 = BigRational::from_integer(self.denominator[0].clone());
        let q: Vec<BigRational> =
            self.denominator.iter().cloned().map(BigRational::from_integer).collect();
        let mut out: Vec<BigRational> = Vec::with_capacity(kmax + 1);
        for k in 0..=kmax {
            let mut acc = self
                .numerator
                .get(k)
                .map(|p| BigRational::from_integer(p.clone()))
                .unwrap_or_else(BigRational::zero);
            for j in 1..q.len().min(k + 1) {
                if !q[j].is_zero() {
                    acc -= &q[j] * &out[k - j];
                }
            }
            out.push(acc / &q0);
        }
        CoefficientSequence { coeffs: out }
    }

    /// `f(1)`, or `None` if `f` has a pole at 1.
    pub fn evaluate_at_one(&self) -> Option<BigRational> {
        let one = BigRational::one();
        let q1 = self.denominator_poly().eval(&one);
        if q1.is_zero() {
            None
        } else {
            Some(self.numerator_poly().eval(&one) / q1)
        }
    }

    /// Whether the denominator divides `(1 − z)^n`, i.e. is `c·(1 − z)^m`
    /// for some `m ≤ n` and constant `c`.
    pub fn denominator_divides_one_minus_z_pow(&self, n: u32) -> bool {
        let target = Poly::from_ints([1, -1]).pow(n);
        let (_, r) = target.div_rem(&self.denominator_poly());
        r.is_zero()
    }

    pub fn to_json(&self) -> serde_json::Value {
        serde_json::to_value(self).expect("RationalFunction serializes")
    }
}

impl fmt::Display for RationalFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "({}) / ({})",
            self.numerator_poly().format_with("z"),
            self.denominator_poly().format_with("z")
        )
    }
}

/// Shortest linear recurrence of a sequence over the rationals.
///
/// Returns the connection polynomial `C(z) = 1 + c_1 z + … + c_L z^L` and the
/// recurrence length `L`, with `Σ_{j=0}^{L} c_j a_{i−j} = 0` for all
/// `L ≤ i < len`.
pub fn berlekamp_massey(seq: &[BigRational]) -> (Poly, usize) {
    let mut c: Vec<BigRational> = vec![BigRational::one()];
    let mut b: Vec<BigRational> = vec![BigRational::one()];
    let mut l = 0usize;
    let mut shift = 1usize;
    let mut last_discrepancy = BigRational::one();
    for i in 0..seq.len() {
        let mut d = BigRational::zero();
        for (j, cj) in c.iter().enumerate().take(i + 1) {
            if !cj.is_zero() {
                d += cj * &seq[i - j];
            }
        }
        if d.is_zero() {
            shift += 1;
            continue;
        }
        let factor = &d / &last_discrepancy;
        let prev = c.clone();
        if c.len() < b.len() + shift {
            c.resize(b.len() + shift, BigRational::zero());
        }
        for (j, bj) in b.iter().enumerate() {
            c[j + shift] -= &factor * bj;
        }
        if 2 * l <= i {
            l = i + 1 - l;
            b = prev;
            last_discrepancy = d;
            shift = 1;
        } else {
            shift += 1;
        }
    }
    (Poly::new(c), l)
}

/// Recognizes a rational generating function from a coefficient prefix.
///
/// The recurrence is fitted on all but the last `guard` terms; the resulting
/// `P/Q` is returned only if its expansion matches every term. Requires
/// `guard ≥ 1` and at least `2·guard + 2` terms.
pub fn recognize_rational(seq: &CoefficientSequence, guard: usize) -> Result<Option<RationalFunction>> {
    if guard == 0 {
        return Err(Error::Argument("guard must be at least 1".into()));
    }
    if seq.len() < 2 * guard + 2 {
        return Err(Error::Argument(format!(
            "need at least {} terms for guard {guard}, got {}",
            2 * guard + 2,
            seq.len()
        )));
    }
    let fit = &seq.coeffs[..seq.len() - guard];
    let (conn, order) = berlekamp_massey(fit);
    let series = Poly::new(fit.to_vec());
    let num = (&series * &conn).truncate(order);
    let Ok(candidate) = RationalFunction::new(&num, &conn) else {
        return Ok(None);
    };
    if candidate.expand(seq.len() - 1).coeffs == seq.coeffs {
        Ok(Some(candidate))
    } else {
        Ok(None)
    }
}

/// Ball series from sphere series: coefficientwise partial sums, i.e.
/// division by `1 − z`.
pub fn ball_series(sphere: &CoefficientSequence) -> CoefficientSequence {
    let mut acc = BigRational::zero();
    let coeffs = sphere
        .coeffs
        .iter()
        .map(|c| {
            acc += c;
            acc.clone()
        })
        .collect();
    CoefficientSequence { coeffs }
}

/// `((1 + z)/(1 − z))^n`, the growth series of `Z^n` with its standard basis.
pub fn closed_form_free_abelian(n: i64) -> Result<RationalFunction> {
    let n = u32::try_from(n).map_err(|_| Error::Argument(format!("rank must be ≥ 0, got {n}")))?;
    Ok(RationalFunction::from_ints(&[1, 1], &[1, -1])?.pow(n))
}

/// Catalan numbers `c_0..=c_kmax` from `c_{k+1} = Σ_{i=0}^{k} c_i c_{k−i}`.
pub fn catalan(kmax: usize) -> CoefficientSequence {
    let mut c: Vec<BigInt> = vec![BigInt::one()];
    for k in 0..kmax {
        let next = (0..=k).fold(BigInt::zero(), |acc, i| acc + &c[i] * &c[k - i]);
        c.push(next);
    }
    CoefficientSequence::from_bigints(c).expect("nonempty")
}

/// `C(n, k)` as a big integer.
pub fn binomial(n: u64, k: u64) -> BigInt {
    if k > n {
        return BigInt::zero();
    }
    let k = k.min(n - k);
    (0..k).fold(BigInt::one(), |acc, i| acc * BigInt::from(n - i) / BigInt::from(i + 1))
}

/// Checks `C(z) = 1 + z·C(z)²` on the given prefix.
pub fn satisfies_catalan_identity(c: &CoefficientSequence) -> bool {
    let sq = c.mul_truncated(c);
    (0..c.len()).all(|k| {
        let rhs = if k == 0 { BigRational::one() } else { sq.coeffs[k - 1].clone() };
        c.coeffs[k] == rhs
    })
}
