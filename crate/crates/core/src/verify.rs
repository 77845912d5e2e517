//! Built-in verification suite: thirteen numbered checks of the exact
//! identities and bounds the crate is built around.
//!
//! Each check is self-contained and reports pass/fail with a one-line
//! detail and its wall-clock time. Runtime limits are part of the checks
//! that state them.

use std::time::{Duration, Instant};

use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_rational::BigRational;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::analysis::{dye_quantity, exponential_rate, krause_degree};
use crate::ehrhart::{count_dilate, cross_polytope_series, root_polytope_binomial_form, root_polytope_legendre_form, root_polytope_series, LatticePolytope};
use crate::gauss::{gauss_bound_check, r2_table, R2};
use crate::group::MarkedGroup;
use crate::growth::{enumerate_balls, DEFAULT_ELEMENT_BUDGET};
use crate::series::{binomial, catalan, closed_form_free_abelian, recognize_rational, satisfies_catalan_identity, CoefficientSequence, RationalFunction, DEFAULT_GUARD};
use crate::theta::{compare_sequences, theta3_power, theta_coefficients, IntegralLattice};
use crate::{Error, Result};

pub const CRITERIA: [(u32, &str); 13] = [
    (1, "disc count R2(100000) = 314197"),
    (2, "disc error bound |R(t) - pi t| <= 2 pi (1 + sqrt(2t))"),
    (3, "growth series of Z is (1+z)/(1-z)"),
    (4, "growth series of Z^n is ((1+z)/(1-z))^n"),
    (5, "random generating sets of Z^2 give denominators dividing (1-z)^3"),
    (6, "Catalan numbers and C = 1 + zC^2"),
    (7, "Ehrhart series of cross-polytopes"),
    (8, "Ehrhart series of A_n root polytopes, binomial and Legendre forms"),
    (9, "theta series of Z^n and r2"),
    (10, "free group F2: spheres, series and rate bound"),
    (11, "polynomial degree estimates for Z^n and Heisenberg"),
    (12, "Dye quantity values"),
    (13, "S3 with adjacent transpositions"),
];

/// Seed for the generating sets of check 5.
pub const HILBERT_SEED: u64 = 0x5eed_2024;

#[derive(Clone, Debug, Serialize)]
pub struct CriterionResult {
    pub id: u32,
    pub name: &'static str,
    pub pass: bool,
    pub detail: String,
    pub elapsed_ms: u128,
}

impl CriterionResult {
    pub fn line(&self) -> String {
        format!(
            "[{}] {:>2}. {} ({} ms): {}",
            if self.pass { "PASS" } else { "FAIL" },
            self.id,
            self.name,
            self.elapsed_ms,
            self.detail
        )
    }
}

pub fn run_all() -> Vec<CriterionResult> {
    CRITERIA.iter().map(|&(id, _)| run_criterion(id).expect("known id")).collect()
}

pub fn run_criterion(id: u32) -> Result<CriterionResult> {
    let name = CRITERIA
        .iter()
        .find(|c| c.0 == id)
        .map(|c| c.1)
        .ok_or_else(|| Error::Argument(format!("no verification check numbered {id}")))?;
    let start = Instant::now();
    let outcome = match id {
        1 => check_disc_value(),
        2 => check_disc_bound(),
        3 => check_integers(),
        4 => check_free_abelian(),
        5 => check_hilbert_shape(),
        6 => check_catalan(),
        7 => check_cross_polytopes(),
        8 => check_root_polytopes(),
        9 => check_theta(),
        10 => check_free_group(),
        11 => check_degrees(),
        12 => check_dye(),
        _ => check_coxeter(),
    };
    let elapsed = start.elapsed();
    let (pass, detail) = match outcome {
        Ok(v) => v,
        Err(e) => (false, e.to_string()),
    };
    Ok(CriterionResult { id, name, pass, detail, elapsed_ms: elapsed.as_millis() })
}

type Outcome = Result<(bool, String)>;

fn within(limit: Duration, start: Instant) -> (bool, String) {
    let e = start.elapsed();
    (e < limit, format!("{:.2}s of {}s allowed", e.as_secs_f64(), limit.as_secs()))
}

fn big(xs: &[BigUint]) -> Vec<BigInt> {
    xs.iter().map(|x| BigInt::from(x.clone())).collect()
}

fn sphere_sequence(group: &MarkedGroup, kmax: usize) -> Result<CoefficientSequence> {
    let t = enumerate_balls(group, kmax, DEFAULT_ELEMENT_BUDGET)?;
    CoefficientSequence::from_biguints(&t.sphere_sizes)
}

fn check_disc_value() -> Outcome {
    let start = Instant::now();
    let v = R2(100_000);
    let (fast, time) = within(Duration::from_secs(1), start);
    Ok((v == 314_197 && fast, format!("R2(100000) = {v}; {time}")))
}

/// Every `t ≤ 10^4` plus the powers of two up to `10^7`.
pub fn disc_bound_points() -> Vec<u64> {
    let mut ts: Vec<u64> = (0..=10_000).collect();
    let mut t = 16_384;
    while t <= 10_000_000 {
        ts.push(t);
        t *= 2;
    }
    ts
}

fn check_disc_bound() -> Outcome {
    let start = Instant::now();
    let ts = disc_bound_points();
    let rep = gauss_bound_check(&ts, 50)?;
    let (fast, time) = within(Duration::from_secs(30), start);
    Ok((rep.pass && fast, format!("{} values of t up to {} at 50 digits; {time}", ts.len(), ts.last().unwrap())))
}

fn check_integers() -> Outcome {
    let seq = sphere_sequence(&MarkedGroup::free_abelian(1)?, 30)?;
    let expected = RationalFunction::from_ints(&[1, 1], &[1, -1])?;
    let expand_ok = seq == expected.expand(30);
    let rec = recognize_rational(&seq, DEFAULT_GUARD)?;
    let rec_ok = rec.as_ref() == Some(&expected);
    Ok((
        expand_ok && rec_ok,
        format!("expansion matches: {expand_ok}; recognized {}", rec.map_or("nothing".into(), |f| f.to_string())),
    ))
}

fn check_free_abelian() -> Outcome {
    let start = Instant::now();
    let mut ok = true;
    let mut notes = Vec::new();
    for (n, kmax) in [(2, 25), (3, 25), (4, 15)] {
        let seq = sphere_sequence(&MarkedGroup::free_abelian(n)?, kmax)?;
        let m = seq == closed_form_free_abelian(n as i64)?.expand(kmax);
        ok &= m;
        notes.push(format!("n={n} k<={kmax} {}", if m { "ok" } else { "MISMATCH" }));
    }
    let (fast, time) = within(Duration::from_secs(60), start);
    Ok((ok && fast, format!("{}; {time}", notes.join(", "))))
}

fn minors_gcd(gens: &[Vec<i64>]) -> i64 {
    let mut g = 0i64;
    for i in 0..gens.len() {
        for j in i + 1..gens.len() {
            g = g.gcd(&(gens[i][0] * gens[j][1] - gens[i][1] * gens[j][0]));
        }
    }
    g
}

/// `count` generating sets of `Z²` with two or three nonzero vectors and
/// entries in `[−2, 2]`, drawn from a seeded generator. A set generates
/// `Z²` exactly when its 2×2 minors have gcd 1.
pub fn random_generating_sets(seed: u64, count: usize) -> Vec<Vec<Vec<i64>>> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut sets = Vec::with_capacity(count);
    while sets.len() < count {
        let size = rng.gen_range(2..=3);
        let gens: Vec<Vec<i64>> = (0..size).map(|_| vec![rng.gen_range(-2..=2), rng.gen_range(-2..=2)]).collect();
        if gens.iter().any(|g| g == &vec![0, 0]) || minors_gcd(&gens) != 1 {
            continue;
        }
        sets.push(gens);
    }
    sets
}

/// Radius used to recognize the series of each random set.
pub const HILBERT_KMAX: usize = 40;

fn check_hilbert_shape() -> Outcome {
    let mut ok = true;
    let mut notes = Vec::new();
    for gens in random_generating_sets(HILBERT_SEED, 10) {
        let group = MarkedGroup::free_abelian_with(2, &gens)?;
        let seq = sphere_sequence(&group, HILBERT_KMAX)?;
        match recognize_rational(&seq, 4)? {
            Some(f) if f.denominator_divides_one_minus_z_pow(3) => {}
            Some(f) => {
                ok = false;
                notes.push(format!("{gens:?}: denominator of {f}"));
            }
            None => {
                ok = false;
                notes.push(format!("{gens:?}: not recognized"));
            }
        }
    }
    let detail = if ok { "10 of 10 sets recognized with denominator dividing (1-z)^3".into() } else { notes.join("; ") };
    Ok((ok, detail))
}

fn check_catalan() -> Outcome {
    let c = catalan(20);
    let head = c.truncated(8).to_i64s().unwrap_or_default() == vec![1, 1, 2, 5, 14, 42, 132, 429];
    let closed = (0..=20u64).all(|k| {
        let v = binomial(2 * k, k) / BigInt::from(k + 1);
        c.coeffs()[k as usize] == BigRational::from_integer(v)
    });
    let identity = satisfies_catalan_identity(&c);
    Ok((
        head && closed && identity,
        format!("first eight: {head}; C(2k,k)/(k+1) for k<=20: {closed}; C = 1 + zC^2 to order 20: {identity}"),
    ))
}

fn check_cross_polytopes() -> Outcome {
    let mut ok = true;
    for n in 1..=3 {
        let p = LatticePolytope::cross_polytope(n)?;
        let closed = cross_polytope_series(n as i64)?.expand(8);
        let counted: Vec<BigInt> = (0..=8).map(|k| count_dilate(&p, k).map(BigInt::from)).collect::<Result<_>>()?;
        ok &= closed == CoefficientSequence::from_bigints(counted)?;
    }
    Ok((ok, "n<=3, k<=8".into()))
}

fn check_root_polytopes() -> Outcome {
    let mut counts_ok = true;
    for n in 1..=3 {
        let p = LatticePolytope::root_polytope(n)?;
        let closed = root_polytope_series(n as i64)?.expand(6);
        let counted: Vec<BigInt> = (0..=6).map(|k| count_dilate(&p, k).map(BigInt::from)).collect::<Result<_>>()?;
        counts_ok &= closed == CoefficientSequence::from_bigints(counted)?;
    }
    let forms_ok = (1..=8).all(|n| root_polytope_binomial_form(n) == root_polytope_legendre_form(n));
    Ok((
        counts_ok && forms_ok,
        format!("counts n<=3, k<=6: {counts_ok}; Legendre form identical for n<=8: {forms_ok}"),
    ))
}

fn check_theta() -> Outcome {
    let start = Instant::now();
    let mut ok = true;
    for n in 1..=4 {
        let theta = theta_coefficients(&IntegralLattice::standard(n)?, 100);
        ok &= compare_sequences(&theta.to_sequence(), &theta3_power(n as u32, 100)).is_full_match();
    }
    let z2 = theta_coefficients(&IntegralLattice::standard(2)?, 1000);
    let table = r2_table(1000);
    let r2_ok = z2.counts.iter().zip(&table).all(|(a, b)| *a == u64::from(*b));
    let (fast, time) = within(Duration::from_secs(60), start);
    Ok((ok && r2_ok && fast, format!("Z^n vs theta3^n: {ok}; Z^2 vs r2 to 1000: {r2_ok}; {time}")))
}

fn check_free_group() -> Outcome {
    let t = enumerate_balls(&MarkedGroup::free_group(2)?, 12, DEFAULT_ELEMENT_BUDGET)?;
    let expected: Vec<BigInt> = (0..=12u32)
        .map(|k| if k == 0 { BigInt::from(1) } else { BigInt::from(4) * BigInt::from(3).pow(k - 1) })
        .collect();
    let spheres_ok = big(&t.sphere_sizes) == expected;
    let seq = CoefficientSequence::from_biguints(&t.sphere_sizes)?;
    let rec = recognize_rational(&seq, DEFAULT_GUARD)?;
    let rec_ok = rec == Some(RationalFunction::from_ints(&[1, 1], &[1, -3])?);
    let rate = exponential_rate(&t, 50)?.min.to_f64();
    let rate_ok = (3.0..=3.4).contains(&rate);
    Ok((
        spheres_ok && rec_ok && rate_ok,
        format!("spheres: {spheres_ok}; recognized (1+z)/(1-3z): {rec_ok}; rate bound at k=12: {rate:.6}"),
    ))
}

fn check_degrees() -> Outcome {
    let mut ok = true;
    let mut notes = Vec::new();
    for n in 1..=3 {
        let t = enumerate_balls(&MarkedGroup::free_abelian(n)?, 25, DEFAULT_ELEMENT_BUDGET)?;
        let d = krause_degree(&t, 50)?.terminal.to_f64();
        ok &= (d - n as f64).abs() <= 0.3;
        notes.push(format!("Z^{n}: {d:.4}"));
    }
    let t = enumerate_balls(&MarkedGroup::heisenberg()?, 20, DEFAULT_ELEMENT_BUDGET)?;
    let d = krause_degree(&t, 50)?.terminal.to_f64();
    ok &= (3.4..=4.4).contains(&d);
    notes.push(format!("Heisenberg at k=20: {d:.4}"));
    Ok((ok, notes.join(", ")))
}

fn check_dye() -> Outcome {
    let z = enumerate_balls(&MarkedGroup::free_abelian(1)?, 10, DEFAULT_ELEMENT_BUDGET)?;
    let v = dye_quantity(&z, 5)?.value;
    let z_ok = v == BigRational::new(2.into(), 11.into());
    let mut stalls = Vec::new();
    for n in 1..=3 {
        let t = enumerate_balls(&MarkedGroup::free_abelian(n)?, 12, DEFAULT_ELEMENT_BUDGET)?;
        let vals: Vec<BigRational> = (1..=6).map(|k| dye_quantity(&t, k).map(|d| d.value)).collect::<Result<_>>()?;
        if let Some(k) = (1..vals.len()).find(|&k| vals[k] >= vals[k - 1]) {
            stalls.push(format!("Z^{n} stays at {} from K={k} to K={}", vals[k], k + 1));
        }
    }
    let decreasing = stalls.is_empty();
    let f2 = enumerate_balls(&MarkedGroup::free_group(2)?, 8, DEFAULT_ELEMENT_BUDGET)?;
    let q = dye_quantity(&f2, 4)?;
    // the k = 1 term h_2 / h_1
    let first = BigRational::new(BigInt::from(f2.sphere(2).clone()), BigInt::from(f2.ball(1).clone()));
    let f2_ok = first == BigRational::new(12.into(), 5.into());
    Ok((
        z_ok && decreasing && f2_ok,
        format!(
            "Z at K=5: {v}; strictly decreasing for Z^n: {}; F2 k=1 term: {first} (min over K=4: {})",
            if decreasing { "yes".to_string() } else { stalls.join(", ") },
            q.value
        ),
    ))
}

fn check_coxeter() -> Outcome {
    let t = enumerate_balls(&MarkedGroup::symmetric_coxeter(3)?, 5, DEFAULT_ELEMENT_BUDGET)?;
    let seq = CoefficientSequence::from_biguints(&t.sphere_sizes)?;
    let poly_ok = seq.to_i64s() == Some(vec![1, 2, 2, 1, 0, 0]);
    let f = RationalFunction::polynomial(&crate::poly::Poly::from_ints([1, 2, 2, 1]));
    let at_one = f.evaluate_at_one();
    let order_ok = at_one == Some(BigRational::from_integer(6.into()));
    Ok((poly_ok && order_ok, format!("spheres {seq}; value at 1: {}", at_one.map_or("undefined".into(), |v| v.to_string()))))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn generating_sets_are_valid_and_reproducible() {
        let a = random_generating_sets(HILBERT_SEED, 10);
        assert_eq!(a, random_generating_sets(HILBERT_SEED, 10));
        for gens in &a {
            assert_eq!(minors_gcd(gens).abs(), 1);
            assert!(gens.iter().all(|g| g.iter().all(|x| (-2..=2).contains(x))));
        }
    }

    #[test]
    fn quick_checks_pass() {
        for id in [1, 3, 6, 13] {
            let r = run_criterion(id).unwrap();
            assert!(r.pass, "{}", r.line());
        }
        assert!(run_criterion(14).is_err());
    }

    #[test]
    fn disc_points_cover_range() {
        let ts = disc_bound_points();
        assert_eq!(ts[10_000], 10_000);
        let last = *ts.last().unwrap();
        assert!(last <= 10_000_000 && last > 5_000_000);
    }
}
