//! Concrete group families with canonical element forms.
//!
//! Four families are supported: free abelian groups `Z^n` (integer vectors),
//! free groups `F_n` (freely reduced words), groups of integer matrices with
//! determinant ±1, and permutation groups. Every element is stored in a
//! canonical form, so structural equality of [`GroupElement`] values is group
//! equality and the derived `Hash` can key visited sets directly.
//!
//! Finite Coxeter groups are handled as permutation groups, e.g. the
//! symmetric group with its adjacent transpositions.

use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::{Error, Result};

/// A group family together with its size parameter.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(tag = "family", rename_all = "kebab-case")]
pub enum Family {
    FreeAbelian { rank: usize },
    Free { rank: usize },
    Matrix { dim: usize },
    Permutation { degree: usize },
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Family::FreeAbelian { rank } => write!(f, "free-abelian(rank {rank})"),
            Family::Free { rank } => write!(f, "free(rank {rank})"),
            Family::Matrix { dim } => write!(f, "matrix(dim {dim})"),
            Family::Permutation { degree } => write!(f, "permutation(degree {degree})"),
        }
    }
}

/// A nonzero letter of a free group: `+i` is `x_i`, `-i` is `x_i^{-1}`
/// (1-based).
pub type Letter = i32;

/// An element in canonical form.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum GroupElement {
    /// Integer vector of fixed rank; the group law is addition.
    Abelian(Vec<BigInt>),
    /// Freely reduced word.
    Word(Vec<Letter>),
    /// Square integer matrix, row-major.
    Matrix { dim: usize, entries: Vec<BigInt> },
    /// Permutation of `{0..degree}` stored as its image vector.
    Perm(Vec<u32>),
}

impl GroupElement {
    pub fn abelian<I: IntoIterator<Item = i64>>(coords: I) -> Self {
        GroupElement::Abelian(coords.into_iter().map(BigInt::from).collect())
    }

    /// Builds a word and freely reduces it.
    pub fn word<I: IntoIterator<Item = Letter>>(letters: I) -> Result<Self> {
        let mut out: Vec<Letter> = Vec::new();
        for l in letters {
            if l == 0 {
                return Err(Error::Structural("free-group letter 0 is not allowed".into()));
            }
            push_reduced(&mut out, l);
        }
        Ok(GroupElement::Word(out))
    }

    /// Builds a matrix from rows. Invertibility over the integers is checked
    /// when the matrix is used as a generator.
    pub fn matrix(rows: &[Vec<i64>]) -> Result<Self> {
        let dim = rows.len();
        if dim == 0 || rows.iter().any(|r| r.len() != dim) {
            return Err(Error::Structural("matrix must be square and nonempty".into()));
        }
        Ok(GroupElement::Matrix {
            dim,
            entries: rows.iter().flatten().map(|&x| BigInt::from(x)).collect(),
        })
    }

    /// Builds a permutation from its 1-based image list, `images[i-1] = π(i)`.
    pub fn permutation(images: &[usize]) -> Result<Self> {
        let n = images.len();
        let mut seen = vec![false; n];
        let mut out = Vec::with_capacity(n);
        for &img in images {
            if img == 0 || img > n || seen[img - 1] {
                return Err(Error::Structural(format!(
                    "{images:?} is not a permutation of 1..{n}"
                )));
            }
            seen[img - 1] = true;
            out.push((img - 1) as u32);
        }
        Ok(GroupElement::Perm(out))
    }

    /// Builds a permutation of the given degree from 1-based cycles.
    pub fn from_cycles(degree: usize, cycles: &[&[usize]]) -> Result<Self> {
        let mut images: Vec<usize> = (1..=degree).collect();
        let mut touched = vec![false; degree + 1];
        for cycle in cycles {
            for (i, &p) in cycle.iter().enumerate() {
                if p == 0 || p > degree || touched[p] {
                    return Err(Error::Structural(format!("bad cycle {cycle:?} for degree {degree}")));
                }
                touched[p] = true;
                images[p - 1] = cycle[(i + 1) % cycle.len()];
            }
        }
        Self::permutation(&images)
    }

    pub fn family_name(&self) -> &'static str {
        match self {
            GroupElement::Abelian(_) => "free-abelian",
            GroupElement::Word(_) => "free",
            GroupElement::Matrix { .. } => "matrix",
            GroupElement::Perm(_) => "permutation",
        }
    }

    /// Whether this element belongs to `family` with matching size parameter.
    pub fn belongs_to(&self, family: Family) -> bool {
        match (self, family) {
            (GroupElement::Abelian(v), Family::FreeAbelian { rank }) => v.len() == rank,
            (GroupElement::Word(w), Family::Free { rank }) => {
                w.iter().all(|l| l.unsigned_abs() as usize <= rank)
            }
            (GroupElement::Matrix { dim: d, .. }, Family::Matrix { dim }) => *d == dim,
            (GroupElement::Perm(p), Family::Permutation { degree }) => p.len() == degree,
            _ => false,
        }
    }

    pub fn is_identity(&self) -> bool {
        match self {
            GroupElement::Abelian(v) => v.iter().all(Zero::is_zero),
            GroupElement::Word(w) => w.is_empty(),
            GroupElement::Matrix { dim, entries } => entries.iter().enumerate().all(|(i, x)| {
                if i / dim == i % dim {
                    x.is_one()
                } else {
                    x.is_zero()
                }
            }),
            GroupElement::Perm(p) => p.iter().enumerate().all(|(i, &x)| i as u32 == x),
        }
    }

    /// The identity of the same family and size as `self`.
    pub fn identity_like(&self) -> Self {
        match self {
            GroupElement::Abelian(v) => GroupElement::Abelian(vec![BigInt::zero(); v.len()]),
            GroupElement::Word(_) => GroupElement::Word(Vec::new()),
            GroupElement::Matrix { dim, .. } => identity_matrix(*dim),
            GroupElement::Perm(p) => GroupElement::Perm((0..p.len() as u32).collect()),
        }
    }

    /// Group product `self · other`.
    ///
    /// Permutations compose left to right: `i^(ab) = (i^a)^b`.
    pub fn multiply(&self, other: &GroupElement) -> Result<GroupElement> {
        match (self, other) {
            (GroupElement::Abelian(a), GroupElement::Abelian(b)) if a.len() == b.len() => Ok(
                GroupElement::Abelian(a.iter().zip(b).map(|(x, y)| x + y).collect()),
            ),
            (GroupElement::Word(a), GroupElement::Word(b)) => {
                let mut out = a.clone();
                out.reserve(b.len());
                for &l in b {
                    push_reduced(&mut out, l);
                }
                Ok(GroupElement::Word(out))
            }
            (
                GroupElement::Matrix { dim: n, entries: a },
                GroupElement::Matrix { dim: m, entries: b },
            ) if n == m => {
                let n = *n;
                let mut out = vec![BigInt::zero(); n * n];
                for i in 0..n {
                    for k in 0..n {
                        let aik = &a[i * n + k];
                        if aik.is_zero() {
                            continue;
                        }
                        for j in 0..n {
                            let bkj = &b[k * n + j];
                            if !bkj.is_zero() {
                                out[i * n + j] += aik * bkj;
                            }
                        }
                    }
                }
                Ok(GroupElement::Matrix { dim: n, entries: out })
            }
            (GroupElement::Perm(a), GroupElement::Perm(b)) if a.len() == b.len() => {
                Ok(GroupElement::Perm(a.iter().map(|&i| b[i as usize]).collect()))
            }
            _ => Err(Error::Structural(format!(
                "cannot multiply {} element by {} element of different shape",
                self.family_name(),
                other.family_name()
            ))),
        }
    }

    pub fn inverse(&self) -> Result<GroupElement> {
        match self {
            GroupElement::Abelian(v) => Ok(GroupElement::Abelian(v.iter().map(|x| -x).collect())),
            GroupElement::Word(w) => Ok(GroupElement::Word(w.iter().rev().map(|l| -l).collect())),
            GroupElement::Matrix { dim, entries } => integer_matrix_inverse(*dim, entries),
            GroupElement::Perm(p) => {
                let mut inv = vec![0u32; p.len()];
                for (i, &x) in p.iter().enumerate() {
                    inv[x as usize] = i as u32;
                }
                Ok(GroupElement::Perm(inv))
            }
        }
    }

    /// Canonical byte encoding. Two elements are equal iff their encodings
    /// are equal.
    pub fn canonical_bytes(&self) -> Vec<u8> {
        fn put_int(out: &mut Vec<u8>, x: &BigInt) {
            let bytes = x.to_signed_bytes_le();
            out.extend_from_slice(&(bytes.len() as u32).to_le_bytes());
            out.extend_from_slice(&bytes);
        }
        let mut out = Vec::new();
        match self {
            GroupElement::Abelian(v) => {
                out.push(0);
                out.extend_from_slice(&(v.len() as u32).to_le_bytes());
                v.iter().for_each(|x| put_int(&mut out, x));
            }
            GroupElement::Word(w) => {
                out.push(1);
                out.extend_from_slice(&(w.len() as u32).to_le_bytes());
                w.iter().for_each(|l| out.extend_from_slice(&l.to_le_bytes()));
            }
            GroupElement::Matrix { dim, entries } => {
                out.push(2);
                out.extend_from_slice(&(*dim as u32).to_le_bytes());
                entries.iter().for_each(|x| put_int(&mut out, x));
            }
            GroupElement::Perm(p) => {
                out.push(3);
                out.extend_from_slice(&(p.len() as u32).to_le_bytes());
                p.iter().for_each(|x| out.extend_from_slice(&x.to_le_bytes()));
            }
        }
        out
    }
}

fn push_reduced(word: &mut Vec<Letter>, l: Letter) {
    if word.last() == Some(&-l) {
        word.pop();
    } else {
        word.push(l);
    }
}

fn identity_matrix(dim: usize) -> GroupElement {
    let mut entries = vec![BigInt::zero(); dim * dim];
    for i in 0..dim {
        entries[i * dim + i] = BigInt::one();
    }
    GroupElement::Matrix { dim, entries }
}

/// Gauss-Jordan over the rationals; fails unless the inverse is integral.
fn integer_matrix_inverse(n: usize, entries: &[BigInt]) -> Result<GroupElement> {
    let mut a: Vec<Vec<BigRational>> = (0..n)
        .map(|i| {
            let mut row: Vec<BigRational> =
                (0..n).map(|j| BigRational::from_integer(entries[i * n + j].clone())).collect();
            row.extend((0..n).map(|j| if i == j { BigRational::one() } else { BigRational::zero() }));
            row
        })
        .collect();
    for col in 0..n {
        let pivot = (col..n)
            .find(|&r| !a[r][col].is_zero())
            .ok_or_else(|| Error::Structural("singular matrix has no inverse".into()))?;
        a.swap(col, pivot);
        let p = a[col][col].clone();
        for x in a[col].iter_mut() {
            *x /= &p;
        }
        for r in 0..n {
            if r != col && !a[r][col].is_zero() {
                let f = a[r][col].clone();
                for c in 0..2 * n {
                    let delta = &f * &a[col][c];
                    a[r][c] -= delta;
                }
            }
        }
    }
    let mut out = Vec::with_capacity(n * n);
    for row in &a {
        for x in &row[n..] {
            if !x.is_integer() {
                return Err(Error::Structural(
                    "matrix is not invertible over the integers (determinant is not ±1)".into(),
                ));
            }
            out.push(x.to_integer());
        }
    }
    Ok(GroupElement::Matrix { dim: n, entries: out })
}

impl fmt::Display for GroupElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GroupElement::Abelian(v) => {
                let parts: Vec<String> = v.iter().map(|x| x.to_string()).collect();
                write!(f, "({})", parts.join(","))
            }
            GroupElement::Word(w) if w.is_empty() => write!(f, "e"),
            GroupElement::Word(w) => {
                let parts: Vec<String> = w
                    .iter()
                    .map(|&l| if l > 0 { format!("x{l}") } else { format!("x{}^-1", -l) })
                    .collect();
                write!(f, "{}", parts.join(" "))
            }
            GroupElement::Matrix { dim, entries } => {
                let rows: Vec<String> = entries
                    .chunks(*dim)
                    .map(|r| {
                        let xs: Vec<String> = r.iter().map(|x| x.to_string()).collect();
                        format!("[{}]", xs.join(","))
                    })
                    .collect();
                write!(f, "[{}]", rows.join(","))
            }
            GroupElement::Perm(p) => {
                // cycle notation, 1-based, fixed points omitted
                let mut seen = vec![false; p.len()];
                let mut any = false;
                for start in 0..p.len() {
                    if seen[start] || p[start] as usize == start {
                        continue;
                    }
                    any = true;
                    let mut cyc = Vec::new();
                    let mut i = start;
                    while !seen[i] {
                        seen[i] = true;
                        cyc.push((i + 1).to_string());
                        i = p[i] as usize;
                    }
                    write!(f, "({})", cyc.join(" "))?;
                }
                if !any {
                    write!(f, "()")?;
                }
                Ok(())
            }
        }
    }
}

/// A group family with a finite generating set.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MarkedGroup {
    family: Family,
    generators: Vec<GroupElement>,
    symmetrize: bool,
}

impl MarkedGroup {
    /// Validates the generators against the family. The identity is rejected
    /// as a generator; matrices must have determinant ±1.
    pub fn new(family: Family, generators: Vec<GroupElement>, symmetrize: bool) -> Result<Self> {
        for g in &generators {
            if !g.belongs_to(family) {
                return Err(Error::Config(format!("generator {g} does not belong to {family}")));
            }
            if g.is_identity() {
                return Err(Error::Config("the identity cannot be listed as a generator".into()));
            }
            if let GroupElement::Matrix { .. } = g {
                g.inverse()?;
            }
        }
        Ok(MarkedGroup { family, generators, symmetrize })
    }

    /// `Z^n` with its standard basis.
    pub fn free_abelian(rank: usize) -> Result<Self> {
        let gens = (0..rank)
            .map(|i| GroupElement::abelian((0..rank).map(|j| i64::from(i == j))))
            .collect();
        Self::new(Family::FreeAbelian { rank }, gens, true)
    }

    /// `Z^n` with an arbitrary list of integer generators.
    pub fn free_abelian_with(rank: usize, generators: &[Vec<i64>]) -> Result<Self> {
        let gens = generators.iter().map(|g| GroupElement::abelian(g.iter().copied())).collect();
        Self::new(Family::FreeAbelian { rank }, gens, true)
    }

    /// `F_n` with its free basis.
    pub fn free_group(rank: usize) -> Result<Self> {
        let gens = (1..=rank as i32).map(|i| GroupElement::Word(vec![i])).collect();
        Self::new(Family::Free { rank }, gens, true)
    }

    /// Integer Heisenberg group `H_3(Z)` generated by the two elementary
    /// unipotent matrices `I + E_12` and `I + E_23`.
    pub fn heisenberg() -> Result<Self> {
        let a = GroupElement::matrix(&[vec![1, 1, 0], vec![0, 1, 0], vec![0, 0, 1]])?;
        let b = GroupElement::matrix(&[vec![1, 0, 0], vec![0, 1, 1], vec![0, 0, 1]])?;
        Self::new(Family::Matrix { dim: 3 }, vec![a, b], true)
    }

    /// Symmetric group of the given degree as the Coxeter group `A_{degree-1}`,
    /// generated by adjacent transpositions.
    pub fn symmetric_coxeter(degree: usize) -> Result<Self> {
        let gens = (1..degree)
            .map(|i| GroupElement::from_cycles(degree, &[&[i, i + 1]]))
            .collect::<Result<Vec<_>>>()?;
        Self::new(Family::Permutation { degree }, gens, true)
    }

    pub fn family(&self) -> Family {
        self.family
    }

    pub fn generators(&self) -> &[GroupElement] {
        &self.generators
    }

    pub fn symmetrize(&self) -> bool {
        self.symmetrize
    }

    pub fn with_symmetrize(mut self, symmetrize: bool) -> Self {
        self.symmetrize = symmetrize;
        self
    }

    pub fn identity(&self) -> GroupElement {
        match self.family {
            Family::FreeAbelian { rank } => GroupElement::Abelian(vec![BigInt::zero(); rank]),
            Family::Free { .. } => GroupElement::Word(Vec::new()),
            Family::Matrix { dim } => identity_matrix(dim),
            Family::Permutation { degree } => GroupElement::Perm((0..degree as u32).collect()),
        }
    }

    /// Rejects elements outside this group's family.
    pub fn check_member(&self, g: &GroupElement) -> Result<()> {
        if g.belongs_to(self.family) {
            Ok(())
        } else {
            Err(Error::Structural(format!("{g} is not an element of {}", self.family)))
        }
    }

    /// `S ∪ S⁻¹` when symmetrizing, else `S`; deduplicated in first-seen
    /// order and never containing the identity.
    pub fn effective_generating_set(&self) -> Result<Vec<GroupElement>> {
        let mut out: Vec<GroupElement> = Vec::new();
        let mut push = |g: GroupElement| {
            if !g.is_identity() && !out.contains(&g) {
                out.push(g);
            }
        };
        for g in &self.generators {
            push(g.clone());
            if self.symmetrize {
                push(g.inverse()?);
            }
        }
        if out.is_empty() {
            return Err(Error::Config("effective generating set is empty".into()));
        }
        Ok(out)
    }

    /// One-line description used in output metadata.
    pub fn describe(&self) -> String {
        let gens: Vec<String> = self.generators.iter().map(|g| g.to_string()).collect();
        format!(
            "{} generators=[{}] symmetrize={}",
            self.family,
            gens.join("; "),
            self.symmetrize
        )
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn abelian_multiply_and_inverse() {
        let a = GroupElement::abelian([1, 2]);
        let b = GroupElement::abelian([3, -1]);
        assert_eq!(a.multiply(&b).unwrap(), GroupElement::abelian([4, 1]));
        assert_eq!(GroupElement::abelian([4, 1]).inverse().unwrap(), GroupElement::abelian([-4, -1]));
    }

    #[test]
    fn free_words_reduce() {
        let a = GroupElement::word([1, 2]).unwrap();
        let b = GroupElement::word([-2, 1]).unwrap();
        assert_eq!(a.multiply(&b).unwrap(), GroupElement::Word(vec![1, 1]));
        assert_eq!(a.inverse().unwrap(), GroupElement::Word(vec![-2, -1]));
        assert_eq!(GroupElement::word([1, 2, -2, -1, 3]).unwrap(), GroupElement::Word(vec![3]));
        assert!(GroupElement::word([0]).is_err());
    }

    #[test]
    fn heisenberg_product() {
        let a = GroupElement::matrix(&[vec![1, 1, 0], vec![0, 1, 0], vec![0, 0, 1]]).unwrap();
        let b = GroupElement::matrix(&[vec![1, 0, 0], vec![0, 1, 1], vec![0, 0, 1]]).unwrap();
        let expect = GroupElement::matrix(&[vec![1, 1, 1], vec![0, 1, 1], vec![0, 0, 1]]).unwrap();
        assert_eq!(a.multiply(&b).unwrap(), expect);
        let ab = a.multiply(&b).unwrap();
        assert!(ab.multiply(&ab.inverse().unwrap()).unwrap().is_identity());
    }

    #[test]
    fn non_unimodular_matrix_rejected() {
        let m = GroupElement::matrix(&[vec![2, 0], vec![0, 1]]).unwrap();
        assert!(matches!(m.inverse(), Err(Error::Structural(_))));
        assert!(MarkedGroup::new(Family::Matrix { dim: 2 }, vec![m], true).is_err());
    }

    #[test]
    fn permutation_inverse_of_three_cycle() {
        let c = GroupElement::from_cycles(3, &[&[1, 2, 3]]).unwrap();
        let expect = GroupElement::from_cycles(3, &[&[1, 3, 2]]).unwrap();
        assert_eq!(c.inverse().unwrap(), expect);
        assert_eq!(expect.to_string(), "(1 3 2)");
        assert!(GroupElement::permutation(&[1, 1, 2]).is_err());
    }

    #[test]
    fn family_mismatch_is_structural() {
        let a = GroupElement::abelian([1, 2]);
        let b = GroupElement::abelian([1, 2, 3]);
        assert!(matches!(a.multiply(&b), Err(Error::Structural(_))));
        let w = GroupElement::Word(vec![1]);
        assert!(matches!(a.multiply(&w), Err(Error::Structural(_))));
    }

    #[test]
    fn effective_sets() {
        let z = MarkedGroup::free_abelian(1).unwrap();
        assert_eq!(
            z.effective_generating_set().unwrap(),
            vec![GroupElement::abelian([1]), GroupElement::abelian([-1])]
        );
        let f2 = MarkedGroup::free_group(2).unwrap();
        assert_eq!(
            f2.effective_generating_set().unwrap(),
            vec![
                GroupElement::Word(vec![1]),
                GroupElement::Word(vec![-1]),
                GroupElement::Word(vec![2]),
                GroupElement::Word(vec![-2]),
            ]
        );
        let z2 =
            MarkedGroup::free_abelian_with(2, &[vec![1, 0], vec![-1, 0], vec![0, 1], vec![0, -1]])
                .unwrap();
        assert_eq!(z2.effective_generating_set().unwrap().len(), 4);
        let empty = MarkedGroup::new(Family::FreeAbelian { rank: 2 }, vec![], true).unwrap();
        assert!(matches!(empty.effective_generating_set(), Err(Error::Config(_))));
    }

    #[test]
    fn identity_generator_rejected() {
        let r = MarkedGroup::free_abelian_with(2, &[vec![0, 0]]);
        assert!(matches!(r, Err(Error::Config(_))));
    }

    #[test]
    fn free_group_has_noncommuting_pair() {
        let a = GroupElement::Word(vec![1]);
        let b = GroupElement::Word(vec![2]);
        assert_ne!(a.multiply(&b).unwrap(), b.multiply(&a).unwrap());
    }

    fn abelian_elem() -> impl Strategy<Value = GroupElement> {
        prop::collection::vec(-50i64..50, 3).prop_map(GroupElement::abelian)
    }

    fn word_elem() -> impl Strategy<Value = GroupElement> {
        prop::collection::vec(prop_oneof![1i32..=3, -3i32..=-1], 0..12)
            .prop_map(|w| GroupElement::word(w).unwrap())
    }

    fn perm_elem() -> impl Strategy<Value = GroupElement> {
        Just((1..=5).collect::<Vec<usize>>())
            .prop_shuffle()
            .prop_map(|p| GroupElement::permutation(&p).unwrap())
    }

    fn unitriangular_elem() -> impl Strategy<Value = GroupElement> {
        (-9i64..9, -9i64..9, -9i64..9).prop_map(|(a, b, c)| {
            GroupElement::matrix(&[vec![1, a, c], vec![0, 1, b], vec![0, 0, 1]]).unwrap()
        })
    }

    fn check_laws(a: &GroupElement, b: &GroupElement, c: &GroupElement) {
        let lhs = a.multiply(b).unwrap().multiply(c).unwrap();
        let rhs = a.multiply(&b.multiply(c).unwrap()).unwrap();
        assert_eq!(lhs, rhs);
        let e = a.identity_like();
        assert_eq!(&a.multiply(&e).unwrap(), a);
        assert_eq!(&e.multiply(a).unwrap(), a);
        assert!(a.multiply(&a.inverse().unwrap()).unwrap().is_identity());
        let same = a.canonical_bytes() == b.canonical_bytes();
        assert_eq!(same, a.multiply(&b.inverse().unwrap()).unwrap().is_identity());
    }

    proptest! {
        #[test]
        fn abelian_laws(a in abelian_elem(), b in abelian_elem(), c in abelian_elem()) {
            check_laws(&a, &b, &c);
            prop_assert_eq!(a.multiply(&b).unwrap(), b.multiply(&a).unwrap());
        }

        #[test]
        fn free_laws(a in word_elem(), b in word_elem(), c in word_elem()) {
            check_laws(&a, &b, &c);
        }

        #[test]
        fn perm_laws(a in perm_elem(), b in perm_elem(), c in perm_elem()) {
            check_laws(&a, &b, &c);
        }

        #[test]
        fn matrix_laws(a in unitriangular_elem(), b in unitriangular_elem(), c in unitriangular_elem()) {
            check_laws(&a, &b, &c);
        }
    }
}
