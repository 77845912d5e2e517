//! Lattice points in integer dilates of lattice polytopes.
//!
//! A [`LatticePolytope`] lives in `R^d` together with a lattice given by a
//! basis (possibly of lower rank, e.g. the root lattice `A_n` inside the
//! hyperplane `Σ x_i = 0`). Points are enumerated in lattice coordinates over
//! the bounding box of `kP`, and each candidate is tested for membership in
//! `kP` by exact phase-one simplex on the vertex description.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, ToPrimitive, Zero};

use crate::poly::{rat, Poly};
use crate::series::{binomial, CoefficientSequence, RationalFunction};
use crate::simplex::is_feasible;
use crate::{Error, Result};

/// Cap on candidate points examined by a single [`count_dilate`] call.
pub const MAX_CANDIDATES: u128 = 50_000_000;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LatticePolytope {
    ambient_dim: usize,
    lattice_basis: Vec<Vec<i64>>,
    vertices: Vec<Vec<i64>>,
    /// Vertices in coordinates with respect to `lattice_basis`.
    coords: Vec<Vec<i64>>,
}

impl LatticePolytope {
    /// Validates dimensions, the basis and lattice membership of every
    /// vertex; duplicate vertices are dropped.
    pub fn new(ambient_dim: usize, lattice_basis: Vec<Vec<i64>>, vertices: Vec<Vec<i64>>) -> Result<Self> {
        if lattice_basis.is_empty() || lattice_basis.iter().any(|b| b.len() != ambient_dim) {
            return Err(Error::Structural(format!(
                "lattice basis rows must be nonempty vectors of length {ambient_dim}"
            )));
        }
        if vertices.is_empty() {
            return Err(Error::Config("polytope needs at least one vertex".into()));
        }
        if let Some(v) = vertices.iter().find(|v| v.len() != ambient_dim) {
            return Err(Error::Structural(format!(
                "vertex {v:?} has length {} but the ambient dimension is {ambient_dim}",
                v.len()
            )));
        }
        if rank(&lattice_basis) != lattice_basis.len() {
            return Err(Error::Config("lattice basis is linearly dependent".into()));
        }
        let mut uniq: Vec<Vec<i64>> = Vec::new();
        for v in vertices {
            if !uniq.contains(&v) {
                uniq.push(v);
            }
        }
        let coords = uniq
            .iter()
            .map(|v| {
                lattice_coordinates(&lattice_basis, v).ok_or_else(|| {
                    Error::Config(format!("vertex {v:?} is not a point of the lattice"))
                })
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(LatticePolytope { ambient_dim, lattice_basis, vertices: uniq, coords })
    }

    /// `conv(±e_1, …, ±e_n)` in `Z^n`.
    pub fn cross_polytope(n: usize) -> Result<Self> {
        let mut verts = Vec::new();
        for i in 0..n {
            for s in [1, -1] {
                let mut v = vec![0; n];
                v[i] = s;
                verts.push(v);
            }
        }
        Self::new(n, identity_basis(n), verts)
    }

    /// `conv{±(e_i − e_j)}` in `Z^{n+1} ∩ {Σx = 0}`, with lattice basis
    /// `e_i − e_{i+1}`.
    pub fn root_polytope(n: usize) -> Result<Self> {
        let d = n + 1;
        let basis = (0..n)
            .map(|i| {
                let mut b = vec![0; d];
                b[i] = 1;
                b[i + 1] = -1;
                b
            })
            .collect();
        let mut verts = Vec::new();
        for i in 0..d {
            for j in 0..d {
                if i != j {
                    let mut v = vec![0; d];
                    v[i] = 1;
                    v[j] = -1;
                    verts.push(v);
                }
            }
        }
        Self::new(d, basis, verts)
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient_dim
    }

    pub fn lattice_basis(&self) -> &[Vec<i64>] {
        &self.lattice_basis
    }

    pub fn vertices(&self) -> &[Vec<i64>] {
        &self.vertices
    }

    pub fn lattice_rank(&self) -> usize {
        self.lattice_basis.len()
    }

    /// Dimension of the affine hull of the vertices.
    pub fn affine_dimension(&self) -> usize {
        let base = &self.coords[0];
        let diffs: Vec<Vec<i64>> = self.coords[1..]
            .iter()
            .map(|v| v.iter().zip(base).map(|(a, b)| a - b).collect())
            .collect();
        if diffs.is_empty() {
            0
        } else {
            rank(&diffs)
        }
    }

    /// Whether the lattice point with coordinates `c` lies in `kP`.
    fn dilate_contains(&self, c: &[i64], k: i64) -> bool {
        let r = self.lattice_rank();
        let nv = self.coords.len();
        // Σ λ_j v_j = c / k, Σ λ_j = 1
        let mut a: Vec<Vec<BigRational>> = (0..r)
            .map(|i| (0..nv).map(|j| rat(self.coords[j][i] * k)).collect())
            .collect();
        a.push(vec![BigRational::one(); nv]);
        let mut b: Vec<BigRational> = c.iter().map(|&x| rat(x)).collect();
        b.push(BigRational::one());
        is_feasible(&a, &b)
    }
}

fn identity_basis(n: usize) -> Vec<Vec<i64>> {
    (0..n).map(|i| (0..n).map(|j| i64::from(i == j)).collect()).collect()
}

/// Rank over the rationals.
fn rank(rows: &[Vec<i64>]) -> usize {
    let mut m: Vec<Vec<BigRational>> = rows.iter().map(|r| r.iter().map(|&x| rat(x)).collect()).collect();
    let cols = m.first().map_or(0, Vec::len);
    let mut rank = 0;
    for c in 0..cols {
        let Some(p) = (rank..m.len()).find(|&i| !m[i][c].is_zero()) else {
            continue;
        };
        m.swap(rank, p);
        for i in 0..m.len() {
            if i != rank && !m[i][c].is_zero() {
                let f = &m[i][c] / &m[rank][c];
                for j in c..cols {
                    let delta = &f * &m[rank][j];
                    m[i][j] -= delta;
                }
            }
        }
        rank += 1;
    }
    rank
}

/// Integer `c` with `Σ c_i basis_i = x`, if it exists.
fn lattice_coordinates(basis: &[Vec<i64>], x: &[i64]) -> Option<Vec<i64>> {
    let r = basis.len();
    let d = x.len();
    // augmented system Bᵀ c = x: d equations, r unknowns
    let mut m: Vec<Vec<BigRational>> = (0..d)
        .map(|i| {
            let mut row: Vec<BigRational> = (0..r).map(|j| rat(basis[j][i])).collect();
            row.push(rat(x[i]));
            row
        })
        .collect();
    let mut pivots = Vec::new();
    let mut row = 0;
    for c in 0..r {
        let p = (row..d).find(|&i| !m[i][c].is_zero())?;
        m.swap(row, p);
        let pv = m[row][c].clone();
        for v in m[row].iter_mut() {
            *v /= &pv;
        }
        for i in 0..d {
            if i != row && !m[i][c].is_zero() {
                let f = m[i][c].clone();
                for j in c..=r {
                    let delta = &f * &m[row][j];
                    m[i][j] -= delta;
                }
            }
        }
        pivots.push(row);
        row += 1;
    }
    // remaining equations must be consistent
    if m[row..].iter().any(|eq| !eq[r].is_zero()) {
        return None;
    }
    pivots
        .iter()
        .map(|&i| {
            let v = &m[i][r];
            if v.is_integer() {
                v.to_integer().to_i64()
            } else {
                None
            }
        })
        .collect()
}

/// `|kP ∩ Γ|`.
pub fn count_dilate(p: &LatticePolytope, k: u64) -> Result<u64> {
    if k == 0 {
        return Ok(1);
    }
    let k = i64::try_from(k).map_err(|_| Error::Argument("dilation factor too large".into()))?;
    let r = p.lattice_rank();
    let lo: Vec<i64> = (0..r).map(|i| k * p.coords.iter().map(|v| v[i]).min().unwrap()).collect();
    let hi: Vec<i64> = (0..r).map(|i| k * p.coords.iter().map(|v| v[i]).max().unwrap()).collect();
    let candidates: u128 = lo.iter().zip(&hi).map(|(l, h)| (h - l + 1) as u128).product();
    if candidates > MAX_CANDIDATES {
        return Err(Error::Argument(format!(
            "dilate k = {k} has {candidates} candidate points, above the cap of {MAX_CANDIDATES}"
        )));
    }
    let mut c = lo.clone();
    let mut count = 0u64;
    loop {
        if p.dilate_contains(&c, k) {
            count += 1;
        }
        // odometer step
        let mut i = 0;
        loop {
            if i == r {
                return Ok(count);
            }
            if c[i] < hi[i] {
                c[i] += 1;
                break;
            }
            c[i] = lo[i];
            i += 1;
        }
    }
}

/// `[E_P(0), …, E_P(kmax)]`.
pub fn ehrhart_sequence(p: &LatticePolytope, kmax: u64) -> Result<CoefficientSequence> {
    let counts = (0..=kmax).map(|k| count_dilate(p, k).map(BigInt::from)).collect::<Result<Vec<_>>>()?;
    CoefficientSequence::from_bigints(counts)
}

/// `(1/(1 − z)) · ((1 + z)/(1 − z))^n`.
pub fn cross_polytope_series(n: i64) -> Result<RationalFunction> {
    if n < 1 {
        return Err(Error::Argument(format!("cross-polytope dimension must be ≥ 1, got {n}")));
    }
    let ball = RationalFunction::from_ints(&[1], &[1, -1])?;
    Ok(ball.mul(&crate::series::closed_form_free_abelian(n)?))
}

/// `Σ_j C(n, j)² z^j / (1 − z)^{n+1}`.
pub fn root_polytope_binomial_form(n: u32) -> RationalFunction {
    let num = Poly::new(
        (0..=u64::from(n))
            .map(|j| {
                let b = binomial(u64::from(n), j);
                BigRational::from_integer(&b * &b)
            })
            .collect(),
    );
    let den = Poly::from_ints([1, -1]).pow(n + 1);
    RationalFunction::new(&num, &den).expect("denominator is 1 at z = 0")
}

/// `(1/(1 − z)) · P_n((1 + z)/(1 − z))` by substituting the Möbius map into
/// the Legendre polynomial.
pub fn root_polytope_legendre_form(n: u32) -> RationalFunction {
    let leg = legendre(n);
    let u = Poly::from_ints([1, 1]);
    let v = Poly::from_ints([1, -1]);
    // P(u/v) = Σ a_i u^i v^{n−i} / v^n
    let mut num = Poly::zero();
    for (i, a) in leg.coefficients().coeffs().iter().enumerate() {
        let term = &u.pow(i as u32) * &v.pow(n - i as u32);
        num = &num + &term.scale(a);
    }
    RationalFunction::new(&num, &v.pow(n + 1)).expect("denominator is 1 at z = 0")
}

/// Ehrhart series of the `A_n` root polytope, computed along both closed
/// forms, which must agree.
pub fn root_polytope_series(n: i64) -> Result<RationalFunction> {
    let n = u32::try_from(n)
        .ok()
        .filter(|&n| n >= 1)
        .ok_or_else(|| Error::Argument(format!("root polytope rank must be ≥ 1, got {n}")))?;
    let a = root_polytope_binomial_form(n);
    let b = root_polytope_legendre_form(n);
    if a != b {
        return Err(Error::InvariantViolation(format!(
            "binomial form {a} and Legendre form {b} differ for n = {n}"
        )));
    }
    Ok(a)
}

/// Legendre polynomial with exact rational coefficients.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LegendrePoly {
    degree: u32,
    coeffs: Poly,
}

impl LegendrePoly {
    pub fn degree(&self) -> u32 {
        self.degree
    }

    pub fn coefficients(&self) -> &Poly {
        &self.coeffs
    }

    pub fn eval(&self, x: &BigRational) -> BigRational {
        self.coeffs.eval(x)
    }
}

/// `P_n` from `P_0 = 1`, `P_1 = x`, `(n+1)P_{n+1} = (2n+1)xP_n − nP_{n−1}`.
pub fn legendre(n: u32) -> LegendrePoly {
    let x = Poly::from_ints([0, 1]);
    let mut prev = Poly::one();
    if n == 0 {
        return LegendrePoly { degree: 0, coeffs: prev };
    }
    let mut cur = x.clone();
    for m in 1..n {
        let m = i64::from(m);
        let a = (&x * &cur).scale(&BigRational::new((2 * m + 1).into(), (m + 1).into()));
        let b = prev.scale(&BigRational::new(m.into(), (m + 1).into()));
        let next = &a - &b;
        prev = cur;
        cur = next;
    }
    LegendrePoly { degree: n, coeffs: cur }
}

#[cfg(test)]
fn contains_origin(p: &LatticePolytope) -> bool {
    p.dilate_contains(&vec![0; p.lattice_rank()], 1)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ints(s: &CoefficientSequence) -> Vec<i64> {
        s.to_i64s().unwrap()
    }

    /// Points of Z^n with |x|_1 ≤ k.
    fn brute_cross(n: usize, k: i64) -> u64 {
        let mut count = 0;
        let mut x = vec![-k; n];
        loop {
            if x.iter().map(|v| v.abs()).sum::<i64>() <= k {
                count += 1;
            }
            let mut i = 0;
            loop {
                if i == n {
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

    /// Points of Z^{n+1} with Σx = 0 and |x|_1 ≤ 2k: the dilated root
    /// polytope, described by inequalities instead of vertices.
    fn brute_root(n: usize, k: i64) -> u64 {
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

    #[test]
    fn dilate_examples() {
        let c2 = LatticePolytope::cross_polytope(2).unwrap();
        assert_eq!(count_dilate(&c2, 0).unwrap(), 1);
        assert_eq!(count_dilate(&c2, 2).unwrap(), 13);
        let a2 = LatticePolytope::root_polytope(2).unwrap();
        assert_eq!(count_dilate(&a2, 1).unwrap(), 7);
        assert_eq!(count_dilate(&a2, 0).unwrap(), 1);
    }

    #[test]
    fn sequence_examples() {
        let c2 = LatticePolytope::cross_polytope(2).unwrap();
        assert_eq!(ints(&ehrhart_sequence(&c2, 4).unwrap()), vec![1, 5, 13, 25, 41]);
        let seg = LatticePolytope::new(1, vec![vec![1]], vec![vec![-1], vec![1]]).unwrap();
        assert_eq!(ints(&ehrhart_sequence(&seg, 3).unwrap()), vec![1, 3, 5, 7]);
        let pt = LatticePolytope::new(1, vec![vec![1]], vec![vec![0]]).unwrap();
        assert_eq!(ints(&ehrhart_sequence(&pt, 2).unwrap()), vec![1, 1, 1]);
    }

    #[test]
    fn brute_force_oracles() {
        for n in 1..=3 {
            let p = LatticePolytope::cross_polytope(n).unwrap();
            for k in 0..=4 {
                assert_eq!(count_dilate(&p, k).unwrap(), brute_cross(n, k as i64), "n={n} k={k}");
            }
            let a = LatticePolytope::root_polytope(n).unwrap();
            for k in 0..=3 {
                assert_eq!(count_dilate(&a, k).unwrap(), brute_root(n, k as i64), "n={n} k={k}");
            }
        }
    }

    #[test]
    fn closed_forms() {
        assert_eq!(cross_polytope_series(1).unwrap(), RationalFunction::from_ints(&[1, 1], &[1, -2, 1]).unwrap());
        let c2 = cross_polytope_series(2).unwrap();
        assert_eq!(c2, RationalFunction::from_ints(&[1, 2, 1], &[1, -3, 3, -1]).unwrap());
        assert_eq!(ints(&c2.expand(4)), vec![1, 5, 13, 25, 41]);
        assert!(cross_polytope_series(0).is_err());

        assert_eq!(root_polytope_series(1).unwrap(), RationalFunction::from_ints(&[1, 1], &[1, -2, 1]).unwrap());
        let r2 = root_polytope_series(2).unwrap();
        assert_eq!(r2, RationalFunction::from_ints(&[1, 4, 1], &[1, -3, 3, -1]).unwrap());
        assert_eq!(ints(&r2.expand(3)), vec![1, 7, 19, 37]);
        assert!(root_polytope_series(0).is_err());
        for n in 1..=8 {
            assert_eq!(root_polytope_binomial_form(n), root_polytope_legendre_form(n), "n={n}");
        }
    }

    #[test]
    fn legendre_examples() {
        assert_eq!(legendre(0).coefficients(), &Poly::one());
        assert_eq!(legendre(1).coefficients(), &Poly::from_ints([0, 1]));
        let p2 = Poly::new(vec![BigRational::new((-1).into(), 2.into()), rat(0), BigRational::new(3.into(), 2.into())]);
        assert_eq!(legendre(2).coefficients(), &p2);
        for n in 0..10 {
            assert_eq!(legendre(n).eval(&rat(1)), rat(1));
            assert_eq!(legendre(n).degree(), n);
        }
    }

    #[test]
    fn validation() {
        assert!(matches!(
            LatticePolytope::new(2, vec![vec![1, 0]], vec![vec![1, 0, 0]]),
            Err(Error::Structural(_))
        ));
        // (1, 0) is off the lattice 2Z × Z
        assert!(matches!(
            LatticePolytope::new(2, vec![vec![2, 0], vec![0, 1]], vec![vec![1, 0]]),
            Err(Error::Config(_))
        ));
        assert!(LatticePolytope::new(2, vec![vec![1, 0], vec![2, 0]], vec![vec![0, 0]]).is_err());
        let dup = LatticePolytope::new(1, vec![vec![1]], vec![vec![1], vec![1], vec![0]]).unwrap();
        assert_eq!(dup.vertices().len(), 2);
    }

    #[test]
    fn monotone_and_rational_with_expected_denominator() {
        use crate::series::{recognize_rational, DEFAULT_GUARD};
        let polys = vec![
            LatticePolytope::cross_polytope(2).unwrap(),
            LatticePolytope::root_polytope(2).unwrap(),
            LatticePolytope::new(2, identity_basis(2), vec![vec![0, 0], vec![2, 0], vec![0, 1]]).unwrap(),
            LatticePolytope::new(1, vec![vec![1]], vec![vec![-1], vec![2]]).unwrap(),
        ];
        for p in polys {
            let seq = ehrhart_sequence(&p, 11).unwrap();
            let v = ints(&seq);
            if contains_origin(&p) {
                assert!(v.windows(2).all(|w| w[0] <= w[1]));
            }
            let f = recognize_rational(&seq, DEFAULT_GUARD).unwrap().expect("rational");
            assert!(f.denominator_divides_one_minus_z_pow(p.affine_dimension() as u32 + 1), "{f}");
        }
    }
}
