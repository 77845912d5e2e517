//! Growth diagnostics computed from a [`BallTable`].
//!
//! - exponential rate: `β(k)^{1/k}` per radius and the running minimum. Since
//!   `β` is submultiplicative for symmetric generating sets, the minimum is an
//!   upper bound for the exponential growth rate `ω` (Fekete).
//! - polynomial degree: `ln β(k) / ln k` per radius; for finitely generated
//!   abelian groups this tends to the rank.
//! - Dye quantity: `min_{1≤k≤K} h_{2k} / (h_1 + ⋯ + h_k)` as an exact rational.
//! - a verdict that combines the tracks. Nothing is decided about amenability;
//!   the verdict only reports what the finite data suggests.
//!
//! Real values are [`Decimal`]s at the requested precision.

use std::collections::HashSet;

use num_bigint::{BigInt, BigUint};
use num_rational::BigRational;
use num_traits::{ToPrimitive, Zero};
use serde::Serialize;

use crate::decimal::{self, Decimal, DEFAULT_DIGITS};
use crate::group::MarkedGroup;
use crate::growth::BallTable;
use crate::{Error, Result};

/// Which finite set plays the role of Dye's `F`.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum DyeConvention {
    /// `F` = effective generators plus the identity, so `F^k` is the ball of
    /// radius `k`: `h_1 = β(1)` and `h_k = σ(k)` for `k ≥ 2`.
    #[default]
    IdentityIncluded,
    /// `F` = the effective generators exactly; `F^k` are the sets of products
    /// of exactly `k` generators. Needs the group, not just a table.
    AsGiven,
}

/// Per-radius `β(k)^{1/k}` with the running minimum.
#[derive(Clone, Debug, Serialize)]
pub struct RateTrack {
    pub precision_digits: u32,
    pub radii: Vec<usize>,
    #[serde(serialize_with = "ser_decimals")]
    pub estimates: Vec<Decimal>,
    #[serde(serialize_with = "ser_decimals")]
    pub running_min: Vec<Decimal>,
    #[serde(serialize_with = "ser_decimal")]
    pub min: Decimal,
}

/// Per-radius `ln β(k) / ln k`.
#[derive(Clone, Debug, Serialize)]
pub struct DegreeTrack {
    pub precision_digits: u32,
    pub radii: Vec<usize>,
    #[serde(serialize_with = "ser_decimals")]
    pub values: Vec<Decimal>,
    #[serde(serialize_with = "ser_decimal")]
    pub terminal: Decimal,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct DyeQuantity {
    #[serde(serialize_with = "ser_rational")]
    pub value: BigRational,
    pub argmin: usize,
    pub k_max: usize,
    pub convention: DyeConvention,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", content = "degree", rename_all = "kebab-case")]
pub enum Verdict {
    EvidenceExponential,
    EvidencePolynomial(u32),
    Inconclusive,
}

/// Tunable thresholds for [`classify`].
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Thresholds {
    /// Exponential evidence needs `min β(k)^{1/k} ≥ 1 + tau_exp`.
    #[serde(serialize_with = "ser_rational")]
    pub tau_exp: BigRational,
    /// Polynomial evidence needs the degree track to vary by at most this
    /// much over the flatness window.
    #[serde(serialize_with = "ser_rational")]
    pub tau_deg: BigRational,
    /// The flatness window is the last `1/window_divisor` of the radii.
    pub window_divisor: usize,
    /// Tables shorter than this are always inconclusive.
    pub min_verdict_radius: usize,
    pub precision_digits: u32,
}

impl Default for Thresholds {
    fn default() -> Self {
        Thresholds {
            tau_exp: BigRational::new(1.into(), 10.into()),
            tau_deg: BigRational::new(1.into(), 2.into()),
            window_divisor: 3,
            min_verdict_radius: 10,
            precision_digits: DEFAULT_DIGITS,
        }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct GrowthReport {
    pub group: String,
    pub radius_max: usize,
    pub rate: RateTrack,
    pub degree: DegreeTrack,
    pub dye: DyeQuantity,
    pub verdict: Verdict,
    /// `max − min` of the degree track over the flatness window.
    #[serde(serialize_with = "ser_decimal")]
    pub degree_spread: Decimal,
    pub thresholds: Thresholds,
}

impl GrowthReport {
    pub fn to_json(&self) -> serde_json::Value {
        serde_json::to_value(self).expect("GrowthReport serializes")
    }
}

fn ser_decimal<S: serde::Serializer>(d: &Decimal, s: S) -> std::result::Result<S::Ok, S::Error> {
    s.serialize_str(&d.to_string())
}

fn ser_decimals<S: serde::Serializer>(ds: &[Decimal], s: S) -> std::result::Result<S::Ok, S::Error> {
    s.collect_seq(ds.iter().map(|d| d.to_string()))
}

fn ser_rational<S: serde::Serializer>(r: &BigRational, s: S) -> std::result::Result<S::Ok, S::Error> {
    s.serialize_str(&r.to_string())
}

/// `β(k)^{1/k}` for `1 ≤ k ≤ radius_max`, exact floors at `digits` decimals.
pub fn exponential_rate(table: &BallTable, digits: u32) -> Result<RateTrack> {
    if table.radius_max < 2 {
        return Err(Error::Argument("exponential rate needs radius_max ≥ 2".into()));
    }
    let radii: Vec<usize> = (1..=table.radius_max).collect();
    let estimates: Vec<Decimal> = radii
        .iter()
        .map(|&k| decimal::nth_root_integer(table.ball(k), k as u32, digits))
        .collect();
    let mut running_min = Vec::with_capacity(estimates.len());
    for e in &estimates {
        let m = match running_min.last() {
            Some(prev) if prev < e => Decimal::clone(prev),
            _ => e.clone(),
        };
        running_min.push(m);
    }
    let min = running_min.last().cloned().expect("radius_max ≥ 2");
    Ok(RateTrack { precision_digits: digits, radii, estimates, running_min, min })
}

/// `ln β(k) / ln k` for `2 ≤ k ≤ radius_max`.
pub fn krause_degree(table: &BallTable, digits: u32) -> Result<DegreeTrack> {
    if table.radius_max < 4 {
        return Err(Error::Argument("degree track needs radius_max ≥ 4".into()));
    }
    let radii: Vec<usize> = (2..=table.radius_max).collect();
    let values: Vec<Decimal> = radii
        .iter()
        .map(|&k| {
            let num = decimal::ln_integer(table.ball(k), digits);
            let den = decimal::ln_integer(&BigUint::from(k), digits);
            num.div(&den)
        })
        .collect();
    let terminal = values.last().cloned().expect("radius_max ≥ 4");
    Ok(DegreeTrack { precision_digits: digits, radii, values, terminal })
}

/// Minimum of `h_{2k} / (h_1 + ⋯ + h_k)` over `1 ≤ k ≤ k_max`, with `F`
/// containing the identity.
pub fn dye_quantity(table: &BallTable, k_max: usize) -> Result<DyeQuantity> {
    if k_max == 0 {
        return Err(Error::Argument("Dye quantity needs K ≥ 1".into()));
    }
    if table.radius_max < 2 * k_max {
        return Err(Error::Argument(format!(
            "Dye quantity with K = {k_max} needs radius {} but the table stops at {}",
            2 * k_max,
            table.radius_max
        )));
    }
    let h = |k: usize| -> BigInt {
        if k == 1 {
            table.ball(1).clone().into()
        } else {
            table.sphere(k).clone().into()
        }
    };
    let shells: Vec<BigInt> = (1..=2 * k_max).map(h).collect();
    Ok(min_ratio(&shells, k_max, DyeConvention::IdentityIncluded))
}

/// Dye quantity with `F` exactly the effective generating set.
pub fn dye_quantity_as_given(group: &MarkedGroup, k_max: usize, element_budget: usize) -> Result<DyeQuantity> {
    if k_max == 0 {
        return Err(Error::Argument("Dye quantity needs K ≥ 1".into()));
    }
    let gens = group.effective_generating_set()?;
    let mut current: HashSet<_> = gens.iter().cloned().collect();
    let mut shells = vec![BigInt::from(current.len())];
    for _ in 2..=2 * k_max {
        let mut next = HashSet::new();
        for x in &current {
            for g in &gens {
                next.insert(x.multiply(g)?);
                if next.len() > element_budget {
                    return Err(Error::Argument(format!(
                        "element budget {element_budget} exceeded computing F^k"
                    )));
                }
            }
        }
        shells.push(BigInt::from(next.difference(&current).count()));
        current = next;
    }
    Ok(min_ratio(&shells, k_max, DyeConvention::AsGiven))
}

fn min_ratio(shells: &[BigInt], k_max: usize, convention: DyeConvention) -> DyeQuantity {
    let mut best: Option<(BigRational, usize)> = None;
    let mut partial = BigInt::zero();
    for k in 1..=k_max {
        partial += &shells[k - 1];
        let ratio = BigRational::new(shells[2 * k - 1].clone(), partial.clone());
        if best.as_ref().is_none_or(|(b, _)| ratio < *b) {
            best = Some((ratio, k));
        }
    }
    let (value, argmin) = best.expect("k_max ≥ 1");
    DyeQuantity { value, argmin, k_max, convention }
}

/// Combines the tracks into a [`GrowthReport`].
///
/// - fewer than `min_verdict_radius` radii: inconclusive;
/// - degree track flat (spread ≤ `tau_deg`) over the last third of radii:
///   evidence of polynomial growth of degree `round(terminal)`;
/// - otherwise, `min β(k)^{1/k} ≥ 1 + tau_exp`: evidence of exponential growth;
/// - otherwise inconclusive.
pub fn classify(table: &BallTable, thresholds: &Thresholds) -> Result<GrowthReport> {
    if table.radius_max < 6 {
        return Err(Error::Argument("classification needs radius_max ≥ 6".into()));
    }
    let digits = thresholds.precision_digits;
    let rate = exponential_rate(table, digits)?;
    let degree = krause_degree(table, digits)?;
    let dye = dye_quantity(table, table.radius_max / 2)?;

    let r = table.radius_max;
    let window_start = (r - r / thresholds.window_divisor.max(1)).max(2);
    let window: Vec<&Decimal> = degree
        .radii
        .iter()
        .zip(&degree.values)
        .filter(|(k, _)| **k >= window_start)
        .map(|(_, v)| v)
        .collect();
    let hi = window.iter().max().expect("nonempty window");
    let lo = window.iter().min().expect("nonempty window");
    let spread = hi.sub(lo);

    let scale = decimal::GUARD_DIGITS + digits;
    let flat = spread <= Decimal::from_rational(&thresholds.tau_deg, scale);
    let exp_cut = Decimal::from_rational(&(BigRational::from_integer(1.into()) + &thresholds.tau_exp), scale);

    let verdict = if r < thresholds.min_verdict_radius {
        Verdict::Inconclusive
    } else if flat {
        let d = degree.terminal.to_f64().round().max(0.0).to_u32().unwrap_or(0);
        Verdict::EvidencePolynomial(d)
    } else if rate.min >= exp_cut {
        Verdict::EvidenceExponential
    } else {
        Verdict::Inconclusive
    };

    Ok(GrowthReport {
        group: table.group.clone(),
        radius_max: r,
        rate,
        degree,
        dye,
        verdict,
        degree_spread: spread,
        thresholds: thresholds.clone(),
    })
}
