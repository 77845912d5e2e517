//! Lattice points of `Z^2` in discs.
//!
//! `R(t)` counts `(a, b)` with `a² + b² ≤ t`; `r₂(k)` counts `a² + b² = k`
//! and `R₂(k) = Σ_{j≤k} r₂(j)`. The two cumulative counts are computed along
//! different routes (column sums of integer square roots versus a
//! representation sieve) and must agree.

use num_bigint::{BigInt, BigUint};
use serde::Serialize;

use crate::decimal::{self, Decimal};
use crate::{Error, Result};

/// Required gap between bound and error in [`gauss_bound_check`].
pub const BOUND_MARGIN_EXP: u32 = 20;

/// `R(t) = Σ_{|a| ≤ √t} (2⌊√(t − a²)⌋ + 1)`, with exact integer square roots.
pub fn count_disc(t: u64) -> u128 {
    let s = t.isqrt();
    let mut total = u128::from(2 * s + 1);
    for a in 1..=s {
        total += 2 * u128::from(2 * (t - a * a).isqrt() + 1);
    }
    total
}

/// Number of `(a, b) ∈ Z²` with `a² + b² = k`.
pub fn r2(k: u64) -> u64 {
    let mut count = 0;
    for a in 0..=k.isqrt() {
        let rest = k - a * a;
        let b = rest.isqrt();
        if b * b == rest {
            count += match (a == 0, b == 0) {
                (true, true) => 1,
                (true, false) | (false, true) => 2,
                (false, false) => 4,
            };
        }
    }
    count
}

/// `r₂(0..=n)` by enumerating every pair with `a² + b² ≤ n`.
pub fn r2_table(n: u64) -> Vec<u32> {
    let mut table = vec![0u32; n as usize + 1];
    let s = n.isqrt();
    for a in 0..=s {
        let mut b = 0u64;
        while a * a + b * b <= n {
            let signs = match (a == 0, b == 0) {
                (true, true) => 1,
                (true, false) | (false, true) => 2,
                (false, false) => 4,
            };
            table[(a * a + b * b) as usize] += signs;
            b += 1;
        }
    }
    table
}

/// `R₂(k) = Σ_{j=0}^{k} r₂(j)`.
#[allow(non_snake_case)]
pub fn R2(k: u64) -> u128 {
    r2_table(k).iter().map(|&x| u128::from(x)).sum()
}

/// One row of a bound check: the count, `πt`, the error `|R(t) − πt|` and
/// the bound `2π(1 + √(2t))`.
#[derive(Clone, Debug, Serialize)]
pub struct CircleCount {
    pub t: u64,
    pub count: String,
    pub pi_t: String,
    pub error: String,
    pub bound: String,
    #[serde(skip)]
    error_value: Decimal,
    #[serde(skip)]
    bound_value: Decimal,
}

impl CircleCount {
    pub fn error_value(&self) -> &Decimal {
        &self.error_value
    }

    pub fn bound_value(&self) -> &Decimal {
        &self.bound_value
    }

    pub fn csv_row(&self) -> String {
        format!("{},{},{},{},{}", self.t, self.count, self.pi_t, self.error, self.bound)
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct BoundReport {
    pub precision_digits: u32,
    pub margin: String,
    pub rows: Vec<CircleCount>,
    pub pass: bool,
}

impl BoundReport {
    pub fn to_csv(&self) -> String {
        let mut out = String::from("t,R,pi_t,error,bound\n");
        for r in &self.rows {
            out.push_str(&r.csv_row());
            out.push('\n');
        }
        out
    }
}

/// `R(t)`, error and bound for one `t` at `digits` decimals.
pub fn circle_count(t: u64, pi: &Decimal, digits: u32) -> CircleCount {
    let count = count_disc(t);
    let pi_t = pi.mul_int(&BigInt::from(t));
    let r = Decimal::from_integer(BigInt::from(count), pi.scale());
    let error = r.sub(&pi_t).abs();
    let sqrt2t = decimal::sqrt_integer(&BigUint::from(2 * u128::from(t)), digits).rescale(pi.scale());
    let bound = pi
        .mul_int(&BigInt::from(2))
        .mul(&Decimal::from_integer(1, pi.scale()).add(&sqrt2t));
    CircleCount {
        t,
        count: count.to_string(),
        pi_t: pi_t.to_string_digits(digits),
        error: error.to_string_digits(digits),
        bound: bound.to_string_digits(digits),
        error_value: error,
        bound_value: bound,
    }
}

/// Checks `|R(t) − πt| ≤ 2π(1 + √(2t))` for every `t`, requiring
/// `bound − error > 10^-20`. Fails on the first violation.
pub fn gauss_bound_check(t_values: &[u64], digits: u32) -> Result<BoundReport> {
    if t_values.is_empty() {
        return Err(Error::Argument("no t values to check".into()));
    }
    if digits < BOUND_MARGIN_EXP + 5 {
        return Err(Error::Argument(format!(
            "precision must be at least {} digits for the 1e-{BOUND_MARGIN_EXP} margin",
            BOUND_MARGIN_EXP + 5
        )));
    }
    let pi = decimal::pi(digits);
    let margin = Decimal::from_rational(
        &num_rational::BigRational::new(1.into(), BigInt::from(10).pow(BOUND_MARGIN_EXP)),
        pi.scale(),
    );
    let mut rows = Vec::with_capacity(t_values.len());
    for &t in t_values {
        let row = circle_count(t, &pi, digits);
        if row.bound_value.sub(&row.error_value) <= margin {
            return Err(Error::CheckFailure {
                t,
                detail: format!("error {} exceeds bound {} minus margin", row.error, row.bound),
            });
        }
        rows.push(row);
    }
    Ok(BoundReport { precision_digits: digits, margin: format!("1e-{BOUND_MARGIN_EXP}"), rows, pass: true })
}

/// `1, 2, 4, …` up to the first power of two `≥ max`.
pub fn dyadic_grid(max: u64) -> Vec<u64> {
    let mut grid = vec![1u64];
    while *grid.last().unwrap() < max {
        grid.push(grid.last().unwrap() * 2);
    }
    grid
}

#[derive(Clone, Debug, Serialize)]
pub struct ExponentFit {
    pub alpha: f64,
    pub intercept: f64,
    /// Root-mean-square residual of the log-log fit.
    pub residual: f64,
    /// `(lower, upper, max error)` for each window `(lower, upper]`.
    pub windows: Vec<(u64, u64, f64)>,
    /// The grid stops below 10^6, where the fit is known to be noisy.
    pub short_range: bool,
}

/// Least-squares slope of `ln max_{t ∈ window} |R(t) − πt|` against
/// `ln(window end)`, over the windows between consecutive grid points.
pub fn error_exponent_fit(t_grid: &[u64]) -> Result<ExponentFit> {
    let mut grid: Vec<u64> = t_grid.to_vec();
    grid.sort_unstable();
    grid.dedup();
    if grid.len() < 10 {
        return Err(Error::Argument(format!(
            "exponent fit needs at least 10 distinct grid values, got {}",
            grid.len()
        )));
    }
    let tmax = *grid.last().unwrap();
    let table = r2_table(tmax);
    let pi = std::f64::consts::PI;
    let mut r: u64 = table[..=grid[0] as usize].iter().map(|&x| u64::from(x)).sum();
    let mut windows = Vec::with_capacity(grid.len() - 1);
    for w in grid.windows(2) {
        let (lower, upper) = (w[0], w[1]);
        let mut max_err = 0f64;
        for t in lower + 1..=upper {
            r += u64::from(table[t as usize]);
            max_err = max_err.max((r as f64 - pi * t as f64).abs());
        }
        windows.push((lower, upper, max_err));
    }
    let pts: Vec<(f64, f64)> = windows
        .iter()
        .filter(|w| w.2 > 0.0)
        .map(|w| ((w.1 as f64).ln(), w.2.ln()))
        .collect();
    if pts.len() < 2 {
        return Err(Error::Argument("degenerate grid: fewer than two usable windows".into()));
    }
    let n = pts.len() as f64;
    let mx = pts.iter().map(|p| p.0).sum::<f64>() / n;
    let my = pts.iter().map(|p| p.1).sum::<f64>() / n;
    let sxx: f64 = pts.iter().map(|p| (p.0 - mx).powi(2)).sum();
    let sxy: f64 = pts.iter().map(|p| (p.0 - mx) * (p.1 - my)).sum();
    if sxx == 0.0 {
        return Err(Error::Argument("degenerate grid".into()));
    }
    let alpha = sxy / sxx;
    let intercept = my - alpha * mx;
    let residual = (pts.iter().map(|p| (p.1 - intercept - alpha * p.0).powi(2)).sum::<f64>() / n).sqrt();
    Ok(ExponentFit { alpha, intercept, residual, windows, short_range: tmax < 1_000_000 })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn brute_disc(t: i64) -> u64 {
        let s = (t as f64).sqrt() as i64 + 1;
        let mut c = 0;
        for a in -s..=s {
            for b in -s..=s {
                if a * a + b * b <= t {
                    c += 1;
                }
            }
        }
        c
    }

    #[test]
    fn disc_examples() {
        assert_eq!(count_disc(0), 1);
        assert_eq!(count_disc(1), 5);
        assert_eq!(count_disc(100_000), 314_197);
        for t in 0..300 {
            assert_eq!(count_disc(t) as u64, brute_disc(t as i64), "t={t}");
        }
    }

    #[test]
    fn r2_examples() {
        assert_eq!(r2(0), 1);
        assert_eq!(r2(2), 4);
        assert_eq!(r2(25), 12);
        assert_eq!(r2(3), 0);
        let table = r2_table(1000);
        for k in 0..=1000 {
            assert_eq!(u64::from(table[k as usize]), r2(k));
        }
    }

    #[test]
    fn cumulative_examples() {
        assert_eq!(R2(0), 1);
        assert_eq!(R2(1), 5);
        assert_eq!(R2(100_000), 314_197);
    }

    #[test]
    fn both_routes_agree() {
        let table = r2_table(10_000);
        let mut acc = 0u128;
        for k in 0..=10_000u64 {
            acc += u128::from(table[k as usize]);
            let c = count_disc(k);
            assert_eq!(acc, c, "k={k}");
            assert_eq!(c % 4, 1);
        }
    }

    #[test]
    fn bound_examples() {
        let rep = gauss_bound_check(&[0, 100_000], 50).unwrap();
        assert!(rep.pass);
        assert!(rep.rows[0].error.starts_with("1.000"));
        let e = rep.rows[1].error_value().to_f64();
        let b = rep.rows[1].bound_value().to_f64();
        assert!((e - 37.73).abs() < 0.01, "{e}");
        assert!((b - 2816.3).abs() < 0.1, "{b}");
        assert!(gauss_bound_check(&[], 50).is_err());
        assert!(gauss_bound_check(&[1], 10).is_err());
    }

    #[test]
    fn bound_holds_up_to_ten_thousand() {
        let ts: Vec<u64> = (0..=10_000).collect();
        assert!(gauss_bound_check(&ts, 50).unwrap().pass);
    }

    #[test]
    fn csv_output() {
        let rep = gauss_bound_check(&[1], 30).unwrap();
        let csv = rep.to_csv();
        assert!(csv.starts_with("t,R,pi_t,error,bound\n1,5,3.14159"));
    }

    #[test]
    fn exponent_fit_examples() {
        let fit = error_exponent_fit(&dyadic_grid(1_000_000)).unwrap();
        assert!(fit.alpha > 0.2 && fit.alpha < 0.5, "{fit:?}");
        assert!(!fit.short_range);

        let short = error_exponent_fit(&dyadic_grid(10_000)).unwrap();
        assert!(short.short_range);
        assert!(short.residual.is_finite());

        assert!(error_exponent_fit(&[1000; 12]).is_err());
    }
}
