//! Word-metric spheres and balls by breadth-first expansion.
//!
//! Starting from the identity, each frontier is multiplied on the right by
//! every effective generator; products whose canonical encoding has not been
//! seen form the next sphere. Sphere sizes do not depend on the order in which
//! a frontier is processed.

use std::collections::HashSet;

use num_bigint::BigUint;
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::group::{GroupElement, MarkedGroup};
use crate::{Error, Result};

/// Default hard cap on the number of stored canonical forms.
pub const DEFAULT_ELEMENT_BUDGET: usize = 10_000_000;

/// Exact sphere sizes `σ(0..=radius_max)` and ball sizes `β(0..=radius_max)`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct BallTable {
    pub group: String,
    pub radius_max: usize,
    #[serde(with = "crate::serde_dec")]
    pub sphere_sizes: Vec<BigUint>,
    #[serde(with = "crate::serde_dec")]
    pub ball_sizes: Vec<BigUint>,
}

impl BallTable {
    /// Builds a table from sphere sizes; `sphere_sizes[0]` must be 1.
    pub fn from_sphere_sizes(group: impl Into<String>, sphere_sizes: Vec<BigUint>) -> Result<Self> {
        if sphere_sizes.first().map(|s| s.is_one()) != Some(true) {
            return Err(Error::Argument("sphere sizes must start with σ(0) = 1".into()));
        }
        let mut ball_sizes = Vec::with_capacity(sphere_sizes.len());
        let mut acc = BigUint::zero();
        for s in &sphere_sizes {
            acc += s;
            ball_sizes.push(acc.clone());
        }
        Ok(BallTable {
            group: group.into(),
            radius_max: sphere_sizes.len() - 1,
            sphere_sizes,
            ball_sizes,
        })
    }

    pub fn from_u64(group: impl Into<String>, sphere_sizes: &[u64]) -> Result<Self> {
        Self::from_sphere_sizes(group, sphere_sizes.iter().map(|&s| BigUint::from(s)).collect())
    }

    pub fn sphere(&self, k: usize) -> &BigUint {
        &self.sphere_sizes[k]
    }

    pub fn ball(&self, k: usize) -> &BigUint {
        &self.ball_sizes[k]
    }

    /// Table restricted to radii `0..=k`.
    pub fn truncated(&self, k: usize) -> BallTable {
        let k = k.min(self.radius_max);
        BallTable {
            group: self.group.clone(),
            radius_max: k,
            sphere_sizes: self.sphere_sizes[..=k].to_vec(),
            ball_sizes: self.ball_sizes[..=k].to_vec(),
        }
    }

    /// Checks `σ(0) = 1`, the partial-sum relation and `β(m+n) ≤ β(m)β(n)`.
    pub fn check_invariants(&self) -> Result<()> {
        let fail = |msg: String| Err(Error::InvariantViolation(msg));
        if !self.sphere_sizes[0].is_one() {
            return fail("σ(0) != 1".into());
        }
        let mut acc = BigUint::zero();
        for k in 0..=self.radius_max {
            acc += &self.sphere_sizes[k];
            if acc != self.ball_sizes[k] {
                return fail(format!("β({k}) is not the partial sum of σ"));
            }
        }
        for m in 0..=self.radius_max {
            for n in 0..=self.radius_max - m {
                if self.ball_sizes[m + n] > &self.ball_sizes[m] * &self.ball_sizes[n] {
                    return fail(format!("β({}) > β({m})·β({n})", m + n));
                }
            }
        }
        Ok(())
    }

    /// `k,sigma,beta` rows with a header line.
    pub fn to_csv(&self) -> String {
        let mut out = String::from("k,sigma,beta\n");
        for k in 0..=self.radius_max {
            out.push_str(&format!("{k},{},{}\n", self.sphere_sizes[k], self.ball_sizes[k]));
        }
        out
    }

    pub fn to_json(&self) -> serde_json::Value {
        serde_json::to_value(self).expect("BallTable serializes")
    }
}

/// Iterator over successive spheres of a marked group, starting at radius 0.
struct SphereWalker<'a> {
    generators: Vec<GroupElement>,
    visited: HashSet<Vec<u8>>,
    frontier: Vec<GroupElement>,
    started: bool,
    budget: usize,
    group: &'a MarkedGroup,
}

impl<'a> SphereWalker<'a> {
    fn new(group: &'a MarkedGroup, budget: usize) -> Result<Self> {
        if budget == 0 {
            return Err(Error::Argument("element budget must be positive".into()));
        }
        let generators = group.effective_generating_set()?;
        Ok(SphereWalker {
            generators,
            visited: HashSet::new(),
            frontier: Vec::new(),
            started: false,
            budget,
            group,
        })
    }

    /// Next sphere, or `Err(())` when the budget is exhausted mid-radius.
    fn next_sphere(&mut self) -> std::result::Result<&[GroupElement], ()> {
        if !self.started {
            self.started = true;
            let e = self.group.identity();
            self.visited.insert(e.canonical_bytes());
            self.frontier = vec![e];
            return Ok(&self.frontier);
        }
        let mut next = Vec::new();
        for f in &self.frontier {
            for g in &self.generators {
                let p = f.multiply(g).expect("generators share the group's family");
                if self.visited.insert(p.canonical_bytes()) {
                    if self.visited.len() > self.budget {
                        return Err(());
                    }
                    next.push(p);
                }
            }
        }
        self.frontier = next;
        Ok(&self.frontier)
    }
}

/// Exact sphere and ball sizes up to radius `kmax`.
///
/// At most `element_budget` canonical forms are stored. When the cap is hit
/// the error carries the table of every radius completed so far.
pub fn enumerate_balls(group: &MarkedGroup, kmax: usize, element_budget: usize) -> Result<BallTable> {
    let mut walker = SphereWalker::new(group, element_budget)?;
    let mut sizes: Vec<BigUint> = Vec::with_capacity(kmax + 1);
    for k in 0..=kmax {
        match walker.next_sphere() {
            Ok(sphere) => {
                let done = sphere.is_empty();
                sizes.push(BigUint::from(sphere.len()));
                if done {
                    sizes.resize(kmax + 1, BigUint::zero());
                    break;
                }
            }
            Err(()) => {
                let partial = BallTable::from_sphere_sizes(group.describe(), sizes)?;
                return Err(Error::BudgetExceeded {
                    budget: element_budget,
                    last_completed_radius: k - 1,
                    partial: Box::new(partial),
                });
            }
        }
    }
    BallTable::from_sphere_sizes(group.describe(), sizes)
}

/// The elements of each sphere up to radius `kmax`.
pub fn spheres(group: &MarkedGroup, kmax: usize, element_budget: usize) -> Result<Vec<Vec<GroupElement>>> {
    let mut walker = SphereWalker::new(group, element_budget)?;
    let mut out = Vec::with_capacity(kmax + 1);
    for k in 0..=kmax {
        let sphere = walker.next_sphere().map_err(|()| Error::BudgetExceeded {
            budget: element_budget,
            last_completed_radius: k - 1,
            partial: Box::new(
                BallTable::from_sphere_sizes(
                    group.describe(),
                    out.iter().map(|s: &Vec<GroupElement>| BigUint::from(s.len())).collect(),
                )
                .expect("sphere 0 is the identity"),
            ),
        })?;
        out.push(sphere.to_vec());
    }
    Ok(out)
}

/// Word length `ℓ_S(g)`, or `None` if `g` is not in the ball of radius `kmax`.
pub fn word_length(group: &MarkedGroup, g: &GroupElement, kmax: usize) -> Result<Option<usize>> {
    word_length_with_budget(group, g, kmax, DEFAULT_ELEMENT_BUDGET)
}

pub fn word_length_with_budget(
    group: &MarkedGroup,
    g: &GroupElement,
    kmax: usize,
    element_budget: usize,
) -> Result<Option<usize>> {
    group.check_member(g)?;
    let mut walker = SphereWalker::new(group, element_budget)?;
    for k in 0..=kmax {
        let sphere = walker.next_sphere().map_err(|()| Error::BudgetExceeded {
            budget: element_budget,
            last_completed_radius: k - 1,
            partial: Box::new(
                BallTable::from_sphere_sizes(group.describe(), vec![BigUint::one()])
                    .expect("nonempty"),
            ),
        })?;
        if sphere.is_empty() {
            return Ok(None);
        }
        if sphere.contains(g) {
            return Ok(Some(k));
        }
    }
    Ok(None)
}

/// Word metric `d_S(a, b) = ℓ_S(a⁻¹ b)`.
pub fn word_distance(
    group: &MarkedGroup,
    a: &GroupElement,
    b: &GroupElement,
    kmax: usize,
) -> Result<Option<usize>> {
    group.check_member(a)?;
    let diff = a.inverse()?.multiply(b)?;
    word_length(group, &diff, kmax)
}
