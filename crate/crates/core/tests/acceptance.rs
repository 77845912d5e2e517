//! Acceptance suite: thirteen numbered criteria, each checked against an
//! oracle written here (brute-force counts, closed-form expansions done with
//! machine integers, explicit formulas) rather than against the library's
//! own verification module. Prints one PASS/FAIL line per criterion.
//!
//! A criterion listed in `KNOWN_FAILURES` is still run in full; the suite
//! only fails when the set of failing criteria differs from that list.

use std::process::ExitCode;
use std::time::{Duration, Instant};

use growthkit::analysis::{dye_quantity, exponential_rate, krause_degree};
use growthkit::ehrhart::{count_dilate, root_polytope_binomial_form, root_polytope_legendre_form, root_polytope_series, LatticePolytope};
use growthkit::gauss::{gauss_bound_check, R2};
use growthkit::group::MarkedGroup;
use growthkit::growth::{enumerate_balls, BallTable, DEFAULT_ELEMENT_BUDGET};
use growthkit::series::{catalan, recognize_rational, CoefficientSequence, RationalFunction};
use growthkit::theta::{theta3_power, theta_coefficients, IntegralLattice};
use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, ToPrimitive, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

/// Criteria whose statement is false as written, with the reason.
const KNOWN_FAILURES: &[(u32, &str)] = &[(
    12,
    "for Z^3 the k = 2 term h_4/(h_1 + h_2) = 66/25 exceeds the k = 1 term h_2/h_1 = 18/7, so the minimum over k <= K is the same at K = 1 and K = 2",
)];

type Check = (bool, String);

fn sigma(group: &MarkedGroup, kmax: usize) -> Vec<i64> {
    table(group, kmax).sphere_sizes.iter().map(|x| x.to_i64().unwrap()).collect()
}

fn table(group: &MarkedGroup, kmax: usize) -> BallTable {
    enumerate_balls(group, kmax, DEFAULT_ELEMENT_BUDGET).unwrap()
}

fn seq(xs: &[i64]) -> CoefficientSequence {
    CoefficientSequence::from_ints(xs.iter().copied()).unwrap()
}

/// Coefficients of `num / (1 − z)^m` up to `z^kmax`, by repeated prefix sums.
fn over_one_minus_z_pow(num: &[i64], m: usize, kmax: usize) -> Vec<i64> {
    let mut c: Vec<i64> = (0..=kmax).map(|k| num.get(k).copied().unwrap_or(0)).collect();
    for _ in 0..m {
        for k in 1..=kmax {
            c[k] += c[k - 1];
        }
    }
    c
}

fn binom(n: i64, k: i64) -> i64 {
    if k < 0 || k > n {
        return 0;
    }
    (0..k).fold(1, |acc, i| acc * (n - i) / (i + 1))
}

/// `(1 + z)^n`.
fn one_plus_z_pow(n: usize) -> Vec<i64> {
    (0..=n as i64).map(|j| binom(n as i64, j)).collect()
}

/// Sphere sizes of `Z^n` with the standard generators, by counting points
/// of L1 norm `k` in a box.
fn l1_spheres(n: usize, kmax: i64) -> Vec<i64> {
    let mut s = vec![0i64; kmax as usize + 1];
    let mut x = vec![-kmax; n];
    loop {
        let norm: i64 = x.iter().map(|v| v.abs()).sum();
        if norm <= kmax {
            s[norm as usize] += 1;
        }
        let mut i = 0;
        loop {
            if i == n {
                return s;
            }
            if x[i] < kmax {
                x[i] += 1;
                break;
            }
            x[i] = -kmax;
            i += 1;
        }
    }
}

fn c1_disc_value() -> Check {
    let start = Instant::now();
    let v = R2(100_000);
    let elapsed = start.elapsed();
    let mut brute = 0u64;
    for a in -317i64..=317 {
        for b in -317i64..=317 {
            if a * a + b * b <= 100_000 {
                brute += 1;
            }
        }
    }
    let ok = v == 314_197 && brute == 314_197 && elapsed < Duration::from_secs(1);
    (ok, format!("R2(100000) = {v}, brute force {brute}, {elapsed:.2?}"))
}

fn c2_disc_bound() -> Check {
    let start = Instant::now();
    let mut ts: Vec<u64> = (0..=10_000).collect();
    ts.extend((14..=23).map(|e| 1u64 << e));
    let lib = gauss_bound_check(&ts, 50).map(|r| r.pass).unwrap_or(false);
    let elapsed = start.elapsed();
    // interval oracle: pi in [lo, hi], counts from column sums
    let (lo, hi) = (3.141_592_653_589_79_f64, 3.141_592_653_589_80_f64);
    let oracle = ts.iter().all(|&t| {
        let s = (t as f64).sqrt() as i64 + 1;
        let r: i64 = (-s..=s)
            .map(|a| {
                let rest = t as i64 - a * a;
                if rest < 0 {
                    0
                } else {
                    let mut b = (rest as f64).sqrt() as i64;
                    while b * b > rest {
                        b -= 1;
                    }
                    while (b + 1) * (b + 1) <= rest {
                        b += 1;
                    }
                    2 * b + 1
                }
            })
            .sum();
        let err = ((r as f64) - lo * t as f64).abs().max(((r as f64) - hi * t as f64).abs());
        err < 2.0 * lo * (1.0 + (2.0 * t as f64).sqrt())
    });
    let ok = lib && oracle && elapsed < Duration::from_secs(30);
    (ok, format!("{} values up to {}: library {lib}, interval oracle {oracle}, {elapsed:.2?}", ts.len(), ts.last().unwrap()))
}

fn c3_integers() -> Check {
    let s = sigma(&MarkedGroup::free_abelian(1).unwrap(), 30);
    let expected = over_one_minus_z_pow(&[1, 1], 1, 30);
    let rec = recognize_rational(&seq(&s), 4).unwrap();
    let target = RationalFunction::from_ints(&[1, 1], &[1, -1]).unwrap();
    let ok = s == expected && rec.as_ref() == Some(&target);
    (ok, format!("sigma matches: {}, recognized {}", s == expected, rec.map_or("nothing".into(), |f| f.to_string())))
}

fn c4_free_abelian() -> Check {
    let start = Instant::now();
    let mut ok = true;
    let mut notes = Vec::new();
    for (n, kmax) in [(2usize, 25usize), (3, 25), (4, 15)] {
        let s = sigma(&MarkedGroup::free_abelian(n).unwrap(), kmax);
        let expected = over_one_minus_z_pow(&one_plus_z_pow(n), n, kmax);
        ok &= s == expected;
        notes.push(format!("Z^{n} k<={kmax}: {}", s == expected));
    }
    let elapsed = start.elapsed();
    ok &= elapsed < Duration::from_secs(60);
    (ok, format!("{}, {elapsed:.2?}", notes.join(", ")))
}

fn c5_hilbert_shape() -> Check {
    let mut rng = ChaCha8Rng::seed_from_u64(20_240_601);
    let allowed: Vec<Vec<BigInt>> = (0..=3)
        .map(|j| {
            let mut p = vec![BigInt::one()];
            for _ in 0..j {
                let mut q = vec![BigInt::zero(); p.len() + 1];
                for (i, c) in p.iter().enumerate() {
                    q[i] += c;
                    q[i + 1] -= c;
                }
                p = q;
            }
            p
        })
        .collect();
    let mut ok = true;
    let mut accepted = 0;
    let mut notes = Vec::new();
    while accepted < 10 {
        let size = rng.gen_range(2..=4);
        let gens: Vec<Vec<i64>> = (0..size).map(|_| vec![rng.gen_range(-2..=2), rng.gen_range(-2..=2)]).collect();
        let mut g = 0i64;
        for i in 0..gens.len() {
            for j in i + 1..gens.len() {
                g = g.gcd(&(gens[i][0] * gens[j][1] - gens[i][1] * gens[j][0]));
            }
        }
        if g != 1 || gens.iter().any(|v| v == &vec![0, 0]) {
            continue;
        }
        accepted += 1;
        let s = sigma(&MarkedGroup::free_abelian_with(2, &gens).unwrap(), 40);
        match recognize_rational(&seq(&s), 4).unwrap() {
            Some(f) if allowed.contains(&f.denominator().to_vec()) => {}
            other => {
                ok = false;
                notes.push(format!("{gens:?} -> {}", other.map_or("not recognized".into(), |f| f.to_string())));
            }
        }
    }
    (ok, if ok { "10 seeded generating sets, all denominators divide (1-z)^3".into() } else { notes.join("; ") })
}

fn c6_catalan() -> Check {
    let c = catalan(20).to_i64s().unwrap();
    let head = c[..8] == [1, 1, 2, 5, 14, 42, 132, 429];
    let closed = (0..=20i64).all(|k| {
        // C(2k, k)/(k+1) with u128 to avoid overflow
        let mut b: u128 = 1;
        for i in 0..k as u128 {
            b = b * (2 * k as u128 - i) / (i + 1);
        }
        c[k as usize] as u128 == b / (k as u128 + 1)
    });
    let identity = (1..=20).all(|k| (0..k).map(|i| c[i] * c[k - 1 - i]).sum::<i64>() == c[k]) && c[0] == 1;
    (head && closed && identity, format!("head {head}, closed form {closed}, C = 1 + zC^2 {identity}"))
}

fn c7_cross() -> Check {
    let mut ok = true;
    for n in 1..=3usize {
        let p = LatticePolytope::cross_polytope(n).unwrap();
        let brute = l1_spheres(n, 8);
        let closed = over_one_minus_z_pow(&one_plus_z_pow(n), n + 1, 8);
        for k in 0..=8 {
            let ball: i64 = brute[..=k].iter().sum();
            let counted = count_dilate(&p, k as u64).unwrap() as i64;
            ok &= counted == closed[k] && counted == ball;
        }
    }
    (ok, "n<=3, k<=8: simplex counts, L1 brute force and closed form agree".to_string())
}

/// Points of `Z^{n+1}` with coordinate sum 0 and L1 norm at most `2k`.
fn root_brute(n: usize, k: i64) -> i64 {
    let d = n + 1;
    let mut count = 0;
    let mut x = vec![-k; d];
    loop {
        if x.iter().sum::<i64>() == 0 && x.iter().map(|v| v.abs()).sum::<i64>() <= 2 * k {
            count += 1;
        }
        let mut i = 0;
        loop {
            if i == d {
                return count;
            }
            if x[i] < k {
                x[i] += 1;
                break;
            }
            x[i] = -k;
            i += 1;
        }
    }
}

fn q(n: i64, d: i64) -> BigRational {
    BigRational::new(n.into(), d.into())
}

/// `P_n(x) = 2^{-n} Σ_k C(n,k)² (x − 1)^{n−k} (x + 1)^k`.
fn legendre_explicit(n: u32, x: &BigRational) -> BigRational {
    let mut s = BigRational::zero();
    for k in 0..=n as i64 {
        let c = binom(n as i64, k);
        let term = BigRational::from_integer((c * c).into())
            * num_traits::pow(x - q(1, 1), (n as i64 - k) as usize)
            * num_traits::pow(x + q(1, 1), k as usize);
        s += term;
    }
    s / BigRational::from_integer(BigInt::from(2).pow(n))
}

fn eval_rf(f: &RationalFunction, z: &BigRational) -> BigRational {
    f.numerator_poly().eval(z) / f.denominator_poly().eval(z)
}

fn c8_root() -> Check {
    let mut counts_ok = true;
    for n in 1..=3usize {
        let p = LatticePolytope::root_polytope(n).unwrap();
        let num: Vec<i64> = (0..=n as i64).map(|j| binom(n as i64, j).pow(2)).collect();
        let closed = over_one_minus_z_pow(&num, n + 1, 6);
        for k in 0..=6 {
            let counted = count_dilate(&p, k as u64).unwrap() as i64;
            counts_ok &= counted == closed[k] && counted == root_brute(n, k as i64);
        }
        counts_ok &= root_polytope_series(n as i64).is_ok();
    }
    // both forms are rational of degree at most 2n+1 after cross-multiplying;
    // agreement at 2n+2 points plus the library's normalized equality
    let mut forms_ok = true;
    for n in 1..=8u32 {
        let a = root_polytope_binomial_form(n);
        let b = root_polytope_legendre_form(n);
        forms_ok &= a == b;
        for i in 0..(2 * n + 2) as i64 {
            let z = q(1, i + 2) * q(if i % 2 == 0 { 1 } else { -1 }, 1);
            let direct = legendre_explicit(n, &((q(1, 1) + &z) / (q(1, 1) - &z))) / (q(1, 1) - &z);
            forms_ok &= eval_rf(&a, &z) == direct && eval_rf(&b, &z) == direct;
        }
    }
    (
        counts_ok && forms_ok,
        format!("counts n<=3, k<=6: {counts_ok}; Legendre form identical for n<=8: {forms_ok}"),
    )
}

fn c9_theta() -> Check {
    let start = Instant::now();
    let mut ok = true;
    for n in 1..=4usize {
        let lib = theta_coefficients(&IntegralLattice::standard(n).unwrap(), 100).counts;
        // box scan: |c_i| ≤ 10 covers every vector of norm ≤ 100
        let mut brute = vec![0u64; 101];
        let mut x = vec![-10i64; n];
        'outer: loop {
            let m: i64 = x.iter().map(|v| v * v).sum();
            if m <= 100 {
                brute[m as usize] += 1;
            }
            let mut i = 0;
            loop {
                if i == n {
                    break 'outer;
                }
                if x[i] < 10 {
                    x[i] += 1;
                    break;
                }
                x[i] = -10;
                i += 1;
            }
        }
        let power: Vec<u64> = theta3_power(n as u32, 100).to_i64s().unwrap().iter().map(|&v| v as u64).collect();
        ok &= lib == brute && lib == power;
    }
    let z2 = theta_coefficients(&IntegralLattice::standard(2).unwrap(), 1000).counts;
    let mut r2 = vec![0u64; 1001];
    for a in -32i64..=32 {
        for b in -32i64..=32 {
            if a * a + b * b <= 1000 {
                r2[(a * a + b * b) as usize] += 1;
            }
        }
    }
    let r2_ok = z2 == r2;
    let elapsed = start.elapsed();
    (ok && r2_ok && elapsed < Duration::from_secs(60), format!("Z^n vs box scan and theta3^n: {ok}; Z^2 vs r2 to 1000: {r2_ok}; {elapsed:.2?}"))
}

fn c10_free_group() -> Check {
    let t = table(&MarkedGroup::free_group(2).unwrap(), 12);
    let s: Vec<i64> = t.sphere_sizes.iter().map(|x| x.to_i64().unwrap()).collect();
    let expected: Vec<i64> = (0..=12u32).map(|k| if k == 0 { 1 } else { 4 * 3i64.pow(k - 1) }).collect();
    let rec = recognize_rational(&seq(&s), 4).unwrap();
    let rec_ok = rec == Some(RationalFunction::from_ints(&[1, 1], &[1, -3]).unwrap());
    let bound = exponential_rate(&t, 50).unwrap().min.to_f64();
    let oracle = (1..=12).map(|k| (expected[..=k].iter().sum::<i64>() as f64).powf(1.0 / k as f64)).fold(f64::INFINITY, f64::min);
    let ok = s == expected && rec_ok && (3.0..=3.4).contains(&bound) && (bound - oracle).abs() < 1e-9;
    (ok, format!("spheres {}, series {rec_ok}, rate bound {bound:.6} (oracle {oracle:.6})", s == expected))
}

fn c11_degrees() -> Check {
    let mut ok = true;
    let mut notes = Vec::new();
    for n in 1..=3usize {
        let t = table(&MarkedGroup::free_abelian(n).unwrap(), 25);
        let d = krause_degree(&t, 50).unwrap().terminal.to_f64();
        let ball: i64 = l1_spheres(n, 25).iter().sum();
        let oracle = (ball as f64).ln() / 25f64.ln();
        ok &= (d - n as f64).abs() <= 0.3 && (d - oracle).abs() < 1e-9;
        notes.push(format!("Z^{n} {d:.4}"));
    }
    let t = table(&MarkedGroup::heisenberg().unwrap(), 20);
    let d = krause_degree(&t, 50).unwrap().terminal.to_f64();
    ok &= (3.4..=4.4).contains(&d);
    notes.push(format!("Heisenberg k=20 {d:.4}"));
    (ok, notes.join(", "))
}

/// `min_{k ≤ K} h_{2k} / (h_1 + ⋯ + h_k)` with `h_1 = β(1)`, `h_k = σ(k)`.
fn dye_oracle(s: &[i64], kk: usize) -> BigRational {
    let h = |k: usize| if k == 1 { s[0] + s[1] } else { s[k] };
    (1..=kk)
        .map(|k| q(h(2 * k), (1..=k).map(h).sum()))
        .min()
        .unwrap()
}

fn c12_dye() -> Check {
    let z = l1_spheres(1, 12);
    let lib_z = dye_quantity(&table(&MarkedGroup::free_abelian(1).unwrap(), 10), 5).unwrap().value;
    let z_ok = lib_z == q(2, 11) && dye_oracle(&z, 5) == q(2, 11);
    let mut stalls = Vec::new();
    for n in 1..=3usize {
        let t = table(&MarkedGroup::free_abelian(n).unwrap(), 12);
        let s = l1_spheres(n, 12);
        let vals: Vec<BigRational> = (1..=6).map(|k| dye_quantity(&t, k).unwrap().value).collect();
        assert!((1..=6).all(|k| vals[k - 1] == dye_oracle(&s, k)), "library disagrees with oracle for Z^{n}");
        if let Some(k) = (1..6).find(|&k| vals[k] >= vals[k - 1]) {
            stalls.push(format!("Z^{n} equal at K={k} and K={} ({})", k + 1, vals[k]));
        }
    }
    let f2 = sigma(&MarkedGroup::free_group(2).unwrap(), 8);
    let f2_first = q(f2[2], f2[0] + f2[1]);
    let f2_ok = f2_first == q(12, 5) && dye_quantity(&table(&MarkedGroup::free_group(2).unwrap(), 8), 4).unwrap().value == q(12, 5);
    let decreasing = stalls.is_empty();
    (
        z_ok && decreasing && f2_ok,
        format!(
            "Z at K=5: {lib_z}; strictly decreasing for Z^n, n<=3: {}; F2 k=1 term {f2_first}",
            if decreasing { "yes".into() } else { format!("no, {}", stalls.join(", ")) }
        ),
    )
}

fn c13_coxeter() -> Check {
    let s = sigma(&MarkedGroup::symmetric_coxeter(3).unwrap(), 5);
    let ok = s == [1, 2, 2, 1, 0, 0] && s.iter().sum::<i64>() == 6;
    (ok, format!("spheres {s:?}, value at 1 = {} = 3!", s.iter().sum::<i64>()))
}

fn main() -> ExitCode {
    let checks: [(u32, &str, fn() -> Check); 13] = [
        (1, "Gauss value R2(100000) = 314197", c1_disc_value),
        (2, "Gauss bound for t <= 10^4 and dyadic t up to 10^7", c2_disc_bound),
        (3, "Z growth series (1+z)/(1-z)", c3_integers),
        (4, "Z^n growth series ((1+z)/(1-z))^n", c4_free_abelian),
        (5, "Hilbert shape for random generating sets of Z^2", c5_hilbert_shape),
        (6, "Catalan numbers", c6_catalan),
        (7, "Ehrhart cross-polytope", c7_cross),
        (8, "Ehrhart A_n root polytope", c8_root),
        (9, "Theta series", c9_theta),
        (10, "Free group F2", c10_free_group),
        (11, "Polynomial degree estimates", c11_degrees),
        (12, "Dye quantity", c12_dye),
        (13, "Coxeter S3", c13_coxeter),
    ];
    let mut failed = Vec::new();
    for (id, name, f) in checks {
        let (pass, detail) = f();
        println!("criterion {id:>2} {}: {name}: {detail}", if pass { "PASS" } else { "FAIL" });
        if !pass {
            failed.push(id);
        }
    }
    let known: Vec<u32> = KNOWN_FAILURES.iter().map(|k| k.0).collect();
    for (id, why) in KNOWN_FAILURES {
        println!("known failure {id}: {why}");
    }
    let passed = 13 - failed.len();
    println!("{passed} of 13 criteria pass");
    if failed == known {
        ExitCode::SUCCESS
    } else {
        println!("unexpected outcome: failing {failed:?}, expected {known:?}");
        ExitCode::FAILURE
    }
}
