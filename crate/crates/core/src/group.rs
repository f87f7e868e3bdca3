//! Finite abelian groups `C_{n1} ⊕ … ⊕ C_{nr}` of rank at most three.
//!
//! Elements are coefficient vectors with every residue reduced into
//! `[0, n_i - 1]`. The total order on elements is lexicographic on those
//! vectors, which coincides with the order of [`GroupSpec::index_of`].

use std::fmt;
use std::str::FromStr;

use arrayvec::ArrayVec;
use num_integer::Integer;

use crate::error::{Error, Result};

pub const MAX_RANK: usize = 3;

/// Invariant-factor description `n1 | n2 | … | nr`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct GroupSpec {
    factors: ArrayVec<u32, MAX_RANK>,
}

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct GroupElement {
    coeffs: ArrayVec<u32, MAX_RANK>,
}

impl GroupElement {
    /// Builds an element without range checks; use [`GroupSpec::element`]
    /// when the coefficients come from outside.
    pub fn from_reduced(coeffs: &[u32]) -> Self {
        GroupElement {
            coeffs: coeffs.iter().copied().collect(),
        }
    }

    pub fn coeffs(&self) -> &[u32] {
        &self.coeffs
    }

    pub fn rank(&self) -> usize {
        self.coeffs.len()
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|&c| c == 0)
    }
}

impl fmt::Display for GroupElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, c) in self.coeffs.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{c}")?;
        }
        write!(f, ")")
    }
}

impl GroupSpec {
    pub fn new(factors: &[u32]) -> Result<Self> {
        if factors.is_empty() || factors.len() > MAX_RANK {
            return Err(Error::InvalidGroup(format!(
                "rank must be in [1,{MAX_RANK}], got {}",
                factors.len()
            )));
        }
        if let Some(&n) = factors.iter().find(|&&n| n < 2) {
            return Err(Error::InvalidGroup(format!("invariant factor {n} < 2")));
        }
        for w in factors.windows(2) {
            if w[1] % w[0] != 0 {
                return Err(Error::InvalidGroup(format!(
                    "invariant factors must form a divisibility chain, {} does not divide {}",
                    w[0], w[1]
                )));
            }
        }
        let order = factors.iter().try_fold(1u64, |acc, &n| acc.checked_mul(n as u64));
        if order.is_none_or(|o| o > u32::MAX as u64) {
            return Err(Error::InvalidGroup("group order too large".into()));
        }
        Ok(GroupSpec {
            factors: factors.iter().copied().collect(),
        })
    }

    /// `C_n^r`.
    pub fn homocyclic(n: u32, rank: usize) -> Result<Self> {
        Self::new(&vec![n; rank])
    }

    pub fn factors(&self) -> &[u32] {
        &self.factors
    }

    pub fn rank(&self) -> usize {
        self.factors.len()
    }

    pub fn order(&self) -> usize {
        self.factors.iter().map(|&n| n as usize).product()
    }

    pub fn exponent(&self) -> u32 {
        *self.factors.last().unwrap()
    }

    pub fn is_homocyclic(&self) -> bool {
        self.factors.iter().all(|&n| n == self.factors[0])
    }

    /// The prime `p` if every invariant factor is a power of `p`.
    pub fn p_group_prime(&self) -> Option<u32> {
        let p = smallest_prime_factor(self.exponent());
        self.factors
            .iter()
            .all(|&n| is_power_of(n, p))
            .then_some(p)
    }

    pub fn zero(&self) -> GroupElement {
        GroupElement {
            coeffs: self.factors.iter().map(|_| 0).collect(),
        }
    }

    /// The `i`-th standard generator.
    pub fn generator(&self, i: usize) -> GroupElement {
        let mut g = self.zero();
        g.coeffs[i] = 1;
        g
    }

    pub fn contains(&self, g: &GroupElement) -> bool {
        g.rank() == self.rank() && g.coeffs.iter().zip(&self.factors).all(|(&c, &n)| c < n)
    }

    /// Checked constructor: coefficients must already be reduced.
    pub fn element(&self, coeffs: &[u32]) -> Result<GroupElement> {
        let g = GroupElement::from_reduced(coeffs);
        self.check(&g)?;
        Ok(g)
    }

    /// Reduces arbitrary integers into the group.
    pub fn reduce(&self, coeffs: &[i64]) -> Result<GroupElement> {
        if coeffs.len() != self.rank() {
            return Err(Error::ElementOutsideGroup {
                element: format!("{coeffs:?}"),
                group: self.to_string(),
            });
        }
        Ok(GroupElement {
            coeffs: coeffs
                .iter()
                .zip(&self.factors)
                .map(|(&c, &n)| c.rem_euclid(n as i64) as u32)
                .collect(),
        })
    }

    pub(crate) fn check(&self, g: &GroupElement) -> Result<()> {
        if self.contains(g) {
            Ok(())
        } else {
            Err(Error::ElementOutsideGroup {
                element: g.to_string(),
                group: self.to_string(),
            })
        }
    }

    pub fn add(&self, a: &GroupElement, b: &GroupElement) -> Result<GroupElement> {
        self.check(a)?;
        self.check(b)?;
        Ok(self.add_unchecked(a, b))
    }

    pub(crate) fn add_unchecked(&self, a: &GroupElement, b: &GroupElement) -> GroupElement {
        GroupElement {
            coeffs: a
                .coeffs
                .iter()
                .zip(&b.coeffs)
                .zip(&self.factors)
                .map(|((&x, &y), &n)| (x + y) % n)
                .collect(),
        }
    }

    pub fn neg(&self, a: &GroupElement) -> GroupElement {
        GroupElement {
            coeffs: a
                .coeffs
                .iter()
                .zip(&self.factors)
                .map(|(&x, &n)| (n - x) % n)
                .collect(),
        }
    }

    pub fn sub(&self, a: &GroupElement, b: &GroupElement) -> Result<GroupElement> {
        self.add(a, &self.neg(b))
    }

    pub fn scalar_mul(&self, c: i64, g: &GroupElement) -> GroupElement {
        GroupElement {
            coeffs: g
                .coeffs
                .iter()
                .zip(&self.factors)
                .map(|(&x, &n)| (c.rem_euclid(n as i64) * x as i64 % n as i64) as u32)
                .collect(),
        }
    }

    pub fn element_order(&self, g: &GroupElement) -> u32 {
        g.coeffs
            .iter()
            .zip(&self.factors)
            .map(|(&c, &n)| n / c.gcd(&n))
            .fold(1, |acc, o| acc.lcm(&o))
    }

    /// Position of `g` in the lexicographic enumeration of the group.
    pub fn index_of(&self, g: &GroupElement) -> usize {
        g.coeffs
            .iter()
            .zip(&self.factors)
            .fold(0, |acc, (&c, &n)| acc * n as usize + c as usize)
    }

    pub fn element_at(&self, mut index: usize) -> GroupElement {
        let mut coeffs = ArrayVec::<u32, MAX_RANK>::new();
        for &n in self.factors.iter().rev() {
            coeffs.push((index % n as usize) as u32);
            index /= n as usize;
        }
        coeffs.reverse();
        GroupElement { coeffs }
    }

    /// All elements in increasing order.
    pub fn elements(&self) -> impl Iterator<Item = GroupElement> + '_ {
        (0..self.order()).map(move |i| self.element_at(i))
    }

    /// `D(G) = 1 + Σ (n_i - 1)`, valid for p-groups and rank ≤ 2.
    pub(crate) fn davenport_lower_bound(&self) -> usize {
        1 + self.factors.iter().map(|&n| n as usize - 1).sum::<usize>()
    }

    fn require_homocyclic(&self) -> Result<u32> {
        if self.is_homocyclic() {
            Ok(self.factors[0])
        } else {
            Err(Error::UnsupportedSpec {
                group: self.to_string(),
                reason: "automorphisms are only enumerated for homocyclic groups".into(),
            })
        }
    }
}

impl fmt::Display for GroupSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, n) in self.factors.iter().enumerate() {
            if i > 0 {
                write!(f, "x")?;
            }
            write!(f, "C{n}")?;
        }
        Ok(())
    }
}

impl FromStr for GroupSpec {
    type Err = Error;

    /// Parses `C5xC5`, `c4xc4`, `C5xC5xC5`.
    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        let mut factors = Vec::new();
        for part in s.split(['x', 'X']) {
            let part = part.trim();
            let digits = part
                .strip_prefix('C')
                .or_else(|| part.strip_prefix('c'))
                .ok_or_else(|| Error::InvalidGroup(format!("bad cyclic factor `{part}` in `{s}`")))?;
            let n = digits
                .parse::<u32>()
                .map_err(|_| Error::InvalidGroup(format!("bad cyclic factor `{part}` in `{s}`")))?;
            factors.push(n);
        }
        GroupSpec::new(&factors)
    }
}

/// An automorphism of `C_n^r`, stored as the integer matrix whose column `j`
/// is the image of the `j`-th standard generator.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Automorphism {
    n: u32,
    rank: usize,
    cols: [[u32; MAX_RANK]; MAX_RANK],
}

impl Automorphism {
    pub fn identity(spec: &GroupSpec) -> Result<Self> {
        let n = spec.require_homocyclic()?;
        let mut cols = [[0; MAX_RANK]; MAX_RANK];
        for (j, col) in cols.iter_mut().enumerate().take(spec.rank()) {
            col[j] = 1;
        }
        Ok(Automorphism { n, rank: spec.rank(), cols })
    }

    /// The automorphism sending the standard basis to `basis`, if `basis`
    /// really is a basis.
    pub fn from_basis(spec: &GroupSpec, basis: &[GroupElement]) -> Result<Option<Self>> {
        let n = spec.require_homocyclic()?;
        if basis.len() != spec.rank() {
            return Err(Error::Precondition(format!(
                "basis of {} needs {} elements, got {}",
                spec,
                spec.rank(),
                basis.len()
            )));
        }
        let mut cols = [[0; MAX_RANK]; MAX_RANK];
        for (j, g) in basis.iter().enumerate() {
            spec.check(g)?;
            cols[j][..spec.rank()].copy_from_slice(g.coeffs());
        }
        let a = Automorphism { n, rank: spec.rank(), cols };
        Ok(a.is_invertible().then_some(a))
    }

    pub fn modulus(&self) -> u32 {
        self.n
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    /// Image of the `j`-th standard generator.
    pub fn column(&self, j: usize) -> GroupElement {
        GroupElement::from_reduced(&self.cols[j][..self.rank])
    }

    pub fn columns(&self) -> Vec<GroupElement> {
        (0..self.rank).map(|j| self.column(j)).collect()
    }

    pub fn apply(&self, g: &GroupElement) -> GroupElement {
        let n = self.n as u64;
        let mut out = ArrayVec::<u32, MAX_RANK>::new();
        for i in 0..self.rank {
            let v = (0..self.rank)
                .map(|j| self.cols[j][i] as u64 * g.coeffs[j] as u64)
                .sum::<u64>();
            out.push((v % n) as u32);
        }
        GroupElement { coeffs: out }
    }

    pub fn determinant(&self) -> u32 {
        let n = self.n as i64;
        let m = |i: usize, j: usize| self.cols[j][i] as i64;
        let det = match self.rank {
            1 => m(0, 0),
            2 => m(0, 0) * m(1, 1) - m(0, 1) * m(1, 0),
            _ => {
                m(0, 0) * (m(1, 1) * m(2, 2) - m(1, 2) * m(2, 1))
                    - m(0, 1) * (m(1, 0) * m(2, 2) - m(1, 2) * m(2, 0))
                    + m(0, 2) * (m(1, 0) * m(2, 1) - m(1, 1) * m(2, 0))
            }
        };
        det.rem_euclid(n) as u32
    }

    pub fn is_invertible(&self) -> bool {
        self.determinant().gcd(&self.n) == 1
    }

    pub fn inverse(&self) -> Automorphism {
        let n = self.n as i64;
        let det_inv = mod_inverse(self.determinant() as i64, n).expect("automorphism is invertible");
        let m = |i: usize, j: usize| self.cols[j][i] as i64;
        let mut inv = [[0u32; MAX_RANK]; MAX_RANK];
        let mut set = |i: usize, j: usize, v: i64| inv[j][i] = (v * det_inv).rem_euclid(n) as u32;
        match self.rank {
            1 => set(0, 0, 1),
            2 => {
                set(0, 0, m(1, 1));
                set(0, 1, -m(0, 1));
                set(1, 0, -m(1, 0));
                set(1, 1, m(0, 0));
            }
            _ => {
                // adjugate = transpose of the cofactor matrix
                for i in 0..3 {
                    for j in 0..3 {
                        let (r0, r1) = ((j + 1) % 3, (j + 2) % 3);
                        let (c0, c1) = ((i + 1) % 3, (i + 2) % 3);
                        set(i, j, m(r0, c0) * m(r1, c1) - m(r0, c1) * m(r1, c0));
                    }
                }
            }
        }
        Automorphism { n: self.n, rank: self.rank, cols: inv }
    }

    /// `self ∘ other`.
    pub fn compose(&self, other: &Automorphism) -> Automorphism {
        let mut cols = [[0; MAX_RANK]; MAX_RANK];
        for (j, col) in cols.iter_mut().enumerate().take(self.rank) {
            col[..self.rank].copy_from_slice(self.apply(&other.column(j)).coeffs());
        }
        Automorphism { n: self.n, rank: self.rank, cols }
    }

    /// Coefficients of `g` with respect to the basis given by the columns.
    pub fn coordinates(&self, g: &GroupElement) -> GroupElement {
        self.inverse().apply(g)
    }
}

/// Streams every invertible `r×r` matrix mod `n` exactly once.
///
/// Matrices are visited in increasing order of their raw index
/// `Σ entry · n^position` (column-major), so a stream can be split into
/// disjoint index ranges.
#[derive(Clone, Debug)]
pub struct AutomorphismIter {
    n: u32,
    rank: usize,
    next: u64,
    end: u64,
}

impl AutomorphismIter {
    pub fn new(spec: &GroupSpec) -> Result<Self> {
        let n = spec.require_homocyclic()?;
        let end = (n as u64).pow((spec.rank() * spec.rank()) as u32);
        Ok(AutomorphismIter { n, rank: spec.rank(), next: 0, end })
    }

    /// Total number of raw matrices, invertible or not.
    pub fn raw_len(&self) -> u64 {
        self.end
    }

    /// Restricts the stream to raw indices in `[start, end)`.
    pub fn range(mut self, start: u64, end: u64) -> Self {
        self.next = start.min(self.end);
        self.end = end.min(self.end);
        self
    }

    fn decode(&self, mut index: u64) -> Automorphism {
        let mut cols = [[0; MAX_RANK]; MAX_RANK];
        for col in cols.iter_mut().take(self.rank) {
            for entry in col.iter_mut().take(self.rank) {
                *entry = (index % self.n as u64) as u32;
                index /= self.n as u64;
            }
        }
        Automorphism { n: self.n, rank: self.rank, cols }
    }
}

impl Iterator for AutomorphismIter {
    type Item = Automorphism;

    fn next(&mut self) -> Option<Automorphism> {
        while self.next < self.end {
            let a = self.decode(self.next);
            self.next += 1;
            if a.is_invertible() {
                return Some(a);
            }
        }
        None
    }
}

pub fn enumerate_automorphisms(spec: &GroupSpec) -> Result<AutomorphismIter> {
    AutomorphismIter::new(spec)
}

/// True iff `tuple` is a basis of the homocyclic group `spec`.
pub fn is_basis(spec: &GroupSpec, tuple: &[GroupElement]) -> bool {
    tuple.len() == spec.rank()
        && spec.is_homocyclic()
        && tuple.iter().all(|g| spec.contains(g))
        && matches!(Automorphism::from_basis(spec, tuple), Ok(Some(_)))
}

pub fn mod_inverse(a: i64, n: i64) -> Option<i64> {
    let e = a.rem_euclid(n).extended_gcd(&n);
    (e.gcd == 1).then(|| e.x.rem_euclid(n))
}

pub fn is_prime(n: u64) -> bool {
    n >= 2 && (2..).take_while(|d| d * d <= n).all(|d| !n.is_multiple_of(d))
}

fn smallest_prime_factor(n: u32) -> u32 {
    (2..=n).find(|d| n.is_multiple_of(*d)).unwrap_or(n)
}

fn is_power_of(mut n: u32, p: u32) -> bool {
    while n.is_multiple_of(p) {
        n /= p;
    }
    n == 1
}
