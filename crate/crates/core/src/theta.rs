//! Theta coefficients of positive-definite integral lattices.
//!
//! Vectors of bounded norm are enumerated Fincke–Pohst style: the Gram
//! matrix is brought to the form `Q(c) = Σ_i q_ii (c_i + Σ_{j>i} q_ij c_j)²`
//! with exact rationals, and each coordinate is walked outward from the
//! center of its admissible interval while the partial form stays in budget.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::poly::rat;
use crate::series::CoefficientSequence;
use crate::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct IntegralLattice {
    gram: Vec<Vec<i64>>,
}

impl IntegralLattice {
    /// Checks that `gram` is square, symmetric and positive-definite.
    pub fn new(gram: Vec<Vec<i64>>) -> Result<Self> {
        let n = gram.len();
        if n == 0 {
            return Err(Error::Structural("Gram matrix is empty".into()));
        }
        if let Some((i, row)) = gram.iter().enumerate().find(|(_, r)| r.len() != n) {
            return Err(Error::Structural(format!("Gram row {i} has length {} instead of {n}", row.len())));
        }
        for i in 0..n {
            for j in 0..i {
                if gram[i][j] != gram[j][i] {
                    return Err(Error::Structural(format!("Gram matrix is not symmetric at ({i}, {j})")));
                }
            }
        }
        let lattice = IntegralLattice { gram };
        // the pivots are ratios of consecutive leading principal minors
        if let Some(i) = lattice.pivots().iter().position(|d| !d.is_positive()) {
            return Err(Error::Structural(format!(
                "Gram matrix is not positive-definite (leading minor {} is not positive)",
                i + 1
            )));
        }
        Ok(lattice)
    }

    /// `Z^n` with the standard inner product.
    pub fn standard(n: usize) -> Result<Self> {
        Self::new((0..n).map(|i| (0..n).map(|j| i64::from(i == j)).collect()).collect())
    }

    pub fn rank(&self) -> usize {
        self.gram.len()
    }

    pub fn gram(&self) -> &[Vec<i64>] {
        &self.gram
    }

    /// `Uᵀ G U` for an integer matrix `U`.
    pub fn transformed(&self, u: &[Vec<i64>]) -> Result<Self> {
        let n = self.rank();
        if u.len() != n || u.iter().any(|r| r.len() != n) {
            return Err(Error::Structural(format!("transform must be {n}×{n}")));
        }
        let g = &self.gram;
        let gram = (0..n)
            .map(|i| {
                (0..n)
                    .map(|j| (0..n).flat_map(|a| (0..n).map(move |b| (a, b))).map(|(a, b)| u[a][i] * g[a][b] * u[b][j]).sum())
                    .collect()
            })
            .collect();
        Self::new(gram)
    }

    /// `cᵀ G c`.
    pub fn norm(&self, c: &[i64]) -> i64 {
        let n = self.rank();
        (0..n).map(|i| (0..n).map(|j| c[i] * self.gram[i][j] * c[j]).sum::<i64>()).sum()
    }

    fn pivots(&self) -> Vec<BigRational> {
        let q = self.decompose();
        (0..self.rank()).map(|i| q[i][i].clone()).collect()
    }

    /// Upper-triangular `q` with `q_ii` the pivots and `q_ij` (`j > i`) the
    /// normalized off-diagonal terms. Pivot signs must be checked by the
    /// caller before dividing further.
    fn decompose(&self) -> Vec<Vec<BigRational>> {
        let n = self.rank();
        let mut q = vec![vec![BigRational::zero(); n]; n];
        for i in 0..n {
            let mut d = rat(self.gram[i][i]);
            for k in 0..i {
                d -= &q[k][k] * &q[k][i] * &q[k][i];
            }
            q[i][i] = d;
            if !q[i][i].is_positive() {
                return q;
            }
            for j in i + 1..n {
                let mut s = rat(self.gram[i][j]);
                for k in 0..i {
                    s -= &q[k][k] * &q[k][i] * &q[k][j];
                }
                q[i][j] = s / &q[i][i];
            }
        }
        q
    }
}

/// `r_Γ(0), …, r_Γ(rmax)`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ThetaPrefix {
    pub rmax: usize,
    #[serde(with = "crate::serde_dec")]
    pub counts: Vec<u64>,
}

impl ThetaPrefix {
    pub fn to_sequence(&self) -> CoefficientSequence {
        CoefficientSequence::from_bigints(self.counts.iter().map(|&c| BigInt::from(c)))
            .expect("nonempty prefix")
    }

    pub fn to_csv(&self) -> String {
        let mut out = String::from("m,count\n");
        for (m, c) in self.counts.iter().enumerate() {
            out.push_str(&format!("{m},{c}\n"));
        }
        out
    }
}

/// Counts of coefficient vectors `c` with `cᵀ G c = m` for `m ≤ rmax`.
pub fn theta_coefficients(lattice: &IntegralLattice, rmax: usize) -> ThetaPrefix {
    let n = lattice.rank();
    let q = lattice.decompose();
    let mut counts = vec![0u64; rmax + 1];
    let mut c = vec![0i64; n];
    descend(lattice, &q, n, &rat(rmax as i64), &mut c, &mut counts);
    ThetaPrefix { rmax, counts }
}

/// Fixes `c[level-1]` given `c[level..]` and recurses; `budget` is what
/// remains of `rmax` after the terms already fixed.
fn descend(
    lattice: &IntegralLattice,
    q: &[Vec<BigRational>],
    level: usize,
    budget: &BigRational,
    c: &mut [i64],
    counts: &mut [u64],
) {
    if level == 0 {
        let m = lattice.norm(c) as usize;
        counts[m] += 1;
        return;
    }
    let i = level - 1;
    let n = c.len();
    let mut center = BigRational::zero();
    for j in i + 1..n {
        center -= &q[i][j] * rat(c[j]);
    }
    let term = |x: i64| -> BigRational {
        let d = rat(x) - &center;
        &q[i][i] * &d * &d
    };
    let start = center.floor().to_integer();
    let start = i64::try_from(start).expect("coordinate fits in i64");
    // walk down from ⌊center⌋, then up from ⌊center⌋ + 1
    let mut x = start;
    loop {
        let t = term(x);
        if t > *budget {
            break;
        }
        c[i] = x;
        descend(lattice, q, i, &(budget - t), c, counts);
        x -= 1;
    }
    let mut x = start + 1;
    loop {
        let t = term(x);
        if t > *budget {
            break;
        }
        c[i] = x;
        descend(lattice, q, i, &(budget - t), c, counts);
        x += 1;
    }
    c[i] = 0;
}

/// `(1 + 2q + 2q⁴ + 2q⁹ + …)^n` truncated after `q^rmax`.
pub fn theta3_power(n: u32, rmax: usize) -> CoefficientSequence {
    let mut base = vec![0i64; rmax + 1];
    base[0] = 1;
    let mut s = 1usize;
    while s * s <= rmax {
        base[s * s] = 2;
        s += 1;
    }
    let base = CoefficientSequence::from_ints(base).expect("nonempty");
    if n == 0 {
        let mut one = vec![0i64; rmax + 1];
        one[0] = 1;
        return CoefficientSequence::from_ints(one).expect("nonempty");
    }
    base.pow_truncated(n)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ThetaMatch {
    /// Number of indices compared (the shorter length).
    pub compared: usize,
    pub first_mismatch: Option<usize>,
}

impl ThetaMatch {
    pub fn is_full_match(&self) -> bool {
        self.first_mismatch.is_none()
    }
}

/// Index of the first disagreement over the common prefix.
pub fn compare_sequences(a: &CoefficientSequence, b: &CoefficientSequence) -> ThetaMatch {
    let compared = a.len().min(b.len());
    let first_mismatch = (0..compared).find(|&k| a.coeffs()[k] != b.coeffs()[k]);
    ThetaMatch { compared, first_mismatch }
}

/// Enumerates `lattice` up to `seq.len() − 1` and compares with `seq`.
pub fn compare_theta(lattice: &IntegralLattice, seq: &CoefficientSequence) -> ThetaMatch {
    let theta = theta_coefficients(lattice, seq.len().saturating_sub(1));
    compare_sequences(&theta.to_sequence(), seq)
}

/// Whether all coefficients are non-negative integers with `r(0) = 1` and
/// `r(m)` even for `m ≥ 1`.
pub fn is_valid_theta_prefix(seq: &CoefficientSequence) -> bool {
    seq.get(0).is_some_and(One::is_one)
        && seq.coeffs().iter().all(|x| x.is_integer() && !x.is_negative())
        && seq.coeffs()[1..].iter().all(|x| (x.to_integer() % BigInt::from(2)).is_zero())
}
